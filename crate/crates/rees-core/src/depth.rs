//! Depth of a graded quotient measured by random linear forms: a form is a
//! nonzerodivisor exactly when quotienting by it multiplies the Hilbert
//! numerator by (1-t). Generic forms realize the depth, so several seeded
//! trials are run and must agree; disagreement is surfaced, never guessed
//! away.

use crate::error::Result;
use crate::exec;
use crate::field::Coeff;
use crate::groebner::Ideal;
use crate::hilbert::hilbert_data;
use crate::hilbert::IntPoly;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::rng::SplitMix64;

#[derive(Clone, Debug)]
pub struct DepthTrial {
    pub seed: u64,
    /// Success flag per linear-form step, up to and including the first
    /// failure.
    pub step_ok: Vec<bool>,
    pub depth: usize,
}

#[derive(Clone, Debug)]
pub struct DepthProbeResult {
    /// Common measured depth when all trials agree; the minimum otherwise.
    pub depth: usize,
    pub trials: Vec<DepthTrial>,
    pub agreement: bool,
}

fn random_linear_form(ideal: &Ideal, rng: &mut SplitMix64) -> Polynomial {
    let ring = *ideal.ring();
    let terms: Vec<(Monomial, Coeff)> = (0..ring.nvars())
        .map(|i| (Monomial::var(i), ring.field.random(rng)))
        .collect();
    Polynomial::from_terms(ring, terms)
}

fn run_trial(ideal: &Ideal, target_dim: usize, seed: u64) -> Result<DepthTrial> {
    let mut rng = SplitMix64::new(seed);
    let forms: Vec<Polynomial> = (0..target_dim)
        .map(|_| random_linear_form(ideal, &mut rng))
        .collect();

    let mut prev = hilbert_data(ideal)?.numerator;
    let mut step_ok = Vec::new();
    let mut depth = 0usize;
    for j in 1..=target_dim {
        let cut = ideal.plus(&forms[..j]);
        let numer = hilbert_data(&cut)?.numerator;
        let expected = prev.mul(&IntPoly::one_minus_t_pow(1));
        let ok = numer == expected;
        step_ok.push(ok);
        if !ok {
            break;
        }
        depth = j;
        prev = numer;
    }
    Ok(DepthTrial {
        seed,
        step_ok,
        depth,
    })
}

/// Measure depth of B/I by `trials` independent random-linear-form chains.
/// The quotient must be graded of Krull dimension `target_dim`; measured
/// depth is the longest prefix of forms that stay nonzerodivisors.
pub fn depth_probe(
    ideal: &Ideal,
    target_dim: usize,
    trials: usize,
    seed: u64,
) -> Result<DepthProbeResult> {
    assert!(trials >= 1);
    let trial_seeds: Vec<u64> = (0..trials as u64)
        .map(|i| SplitMix64::substream(seed, i).next_u64())
        .collect();
    let results = exec::par_map(trial_seeds, |s| run_trial(ideal, target_dim, s));
    let mut trials_out = Vec::with_capacity(trials);
    for r in results {
        trials_out.push(r?);
    }
    let min = trials_out.iter().map(|t| t.depth).min().unwrap();
    let agreement = trials_out.iter().all(|t| t.depth == min);
    Ok(DepthProbeResult {
        depth: min,
        trials: trials_out,
        agreement,
    })
}
