//! Corpus specs and the batch driver: expand case specifications into
//! concrete instances (drawing random dense hypersurface equations from the
//! case seed), classify each, and assemble the report envelope in spec
//! order regardless of completion order.

use std::time::Instant;

use rees_core::exec;
use rees_core::oracle::monomials_of_degree;
use rees_core::rees::{classify, ReesSetup};
use rees_core::rng::SplitMix64;
use rees_core::{parse_polynomial, Coeff, Error, Field, Monomial, Polynomial, Ring, DEFAULT_PRIME};
use serde::Deserialize;

use crate::report::{CaseJson, EnvelopeJson, TimingsJson};

/// One line of a corpus spec: either an explicit polynomial or `count`
/// random dense instances of degree `d`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseSpec {
    pub n: usize,
    #[serde(default)]
    pub d: Option<u32>,
    #[serde(default)]
    pub f: Option<String>,
    #[serde(default)]
    pub count: Option<usize>,
    #[serde(default)]
    pub prime: Option<u64>,
    #[serde(default)]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusSpec {
    pub cases: Vec<CaseSpec>,
    /// Global reduction-step budget for every basis computation.
    #[serde(default)]
    pub budget: Option<u64>,
}

impl CorpusSpec {
    /// Built-in corpus: the two worked cubic examples plus a grid of
    /// n in {2,3}, d in {1..4} with five random dense instances per cell.
    pub fn default_corpus() -> CorpusSpec {
        let mut cases = vec![
            CaseSpec {
                n: 3,
                d: None,
                f: Some("x3^3".to_string()),
                count: None,
                prime: None,
                seed: None,
            },
            CaseSpec {
                n: 3,
                d: None,
                f: Some("x1^2*x2 + x1*x3^2".to_string()),
                count: None,
                prime: None,
                seed: None,
            },
        ];
        for n in 2..=3 {
            for d in 1..=4 {
                cases.push(CaseSpec {
                    n,
                    d: Some(d),
                    f: None,
                    count: Some(5),
                    prime: None,
                    seed: None,
                });
            }
        }
        CorpusSpec {
            cases,
            budget: None,
        }
    }
}

/// A fully expanded instance ready to classify.
#[derive(Clone, Debug)]
pub struct Instance {
    pub n: usize,
    pub d: Option<u32>,
    pub f_text: Option<String>,
    pub prime: u64,
    pub f_seed: u64,
    pub classify_seed: u64,
    pub budget: Option<u64>,
}

/// Dense random polynomial of degree d in the x variables only: every
/// degree-d x-monomial carries a nonzero coefficient with probability 0.8;
/// the draw is repeated in the rare case that everything vanished.
pub fn random_dense_x_form(ring: Ring, d: u32, rng: &mut SplitMix64) -> Polynomial {
    loop {
        let terms: Vec<(Monomial, Coeff)> = monomials_of_degree(ring.n, d)
            .into_iter()
            .filter_map(|m| {
                if rng.chance(4, 5) {
                    Some((m, ring.field.random_nonzero(rng)))
                } else {
                    None
                }
            })
            .collect();
        let f = Polynomial::from_terms(ring, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Expand a corpus spec into concrete instances. Deterministic given
/// (spec, global_seed): per-case seeds default to the global seed xor the
/// case index, and each instance derives independent substreams for the
/// random polynomial and for the depth probe.
pub fn expand(spec: &CorpusSpec, global_seed: u64) -> Result<Vec<Instance>, Error> {
    let mut out = Vec::new();
    for (case_idx, case) in spec.cases.iter().enumerate() {
        if case.n < 2 {
            return Err(Error::InvalidSetup(format!(
                "corpus case {case_idx}: n must be at least 2"
            )));
        }
        if case.d == Some(0) {
            return Err(Error::InvalidSetup(format!(
                "corpus case {case_idx}: d must be at least 1"
            )));
        }
        let prime = case.prime.unwrap_or(DEFAULT_PRIME);
        let base_seed = case.seed.unwrap_or(global_seed ^ (case_idx as u64));
        match (&case.f, case.d) {
            (Some(_), Some(_)) | (None, None) => {
                return Err(Error::InvalidSetup(format!(
                    "corpus case {case_idx}: give exactly one of \"f\" or \"d\""
                )));
            }
            (Some(f), None) => {
                out.push(Instance {
                    n: case.n,
                    d: None,
                    f_text: Some(f.clone()),
                    prime,
                    f_seed: 0,
                    classify_seed: SplitMix64::substream(base_seed, 1).next_u64(),
                    budget: spec.budget,
                });
            }
            (None, Some(d)) => {
                let count = case.count.unwrap_or(1);
                for k in 0..count {
                    out.push(Instance {
                        n: case.n,
                        d: Some(d),
                        f_text: None,
                        prime,
                        f_seed: SplitMix64::substream(base_seed, 2 * k as u64).next_u64(),
                        classify_seed: SplitMix64::substream(base_seed, 2 * k as u64 + 1)
                            .next_u64(),
                        budget: spec.budget,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Build the setup for one instance (parsing or drawing f) and classify it.
pub fn run_instance(inst: &Instance) -> CaseJson {
    let attempt = || -> Result<CaseJson, Error> {
        let field = Field::prime(inst.prime)?;
        let ring = Ring::new(inst.n, field)?;
        let f = match (&inst.f_text, inst.d) {
            (Some(text), _) => parse_polynomial(text, ring)?,
            (None, Some(d)) => {
                let mut rng = SplitMix64::new(inst.f_seed);
                random_dense_x_form(ring, d, &mut rng)
            }
            (None, None) => unreachable!("expand() rejects this shape"),
        };
        let setup = match inst.budget {
            Some(b) => ReesSetup::with_budget(inst.n, f, b)?,
            None => ReesSetup::new(inst.n, f)?,
        };
        let report = classify(&setup, inst.classify_seed)?;
        Ok(CaseJson::from_report(&report))
    };
    match attempt() {
        Ok(case) => case,
        Err(e) => CaseJson::from_failure(
            inst.n,
            inst.d,
            inst.f_text.clone().unwrap_or_default(),
            e.to_string(),
        ),
    }
}

/// Classify every instance (in parallel when a rayon pool is available) and
/// assemble the envelope; case order follows the spec.
pub fn run_corpus(
    spec: &CorpusSpec,
    global_seed: u64,
    with_timings: bool,
) -> Result<EnvelopeJson, Error> {
    let instances = expand(spec, global_seed)?;
    let start = Instant::now();
    let timed: Vec<(CaseJson, u128)> = exec::par_map(instances, |inst| {
        let t = Instant::now();
        let case = run_instance(&inst);
        (case, t.elapsed().as_millis())
    });
    let total_ms = start.elapsed().as_millis();
    let (cases, cases_ms): (Vec<CaseJson>, Vec<u128>) = timed.into_iter().unzip();
    let timings = with_timings.then_some(TimingsJson { total_ms, cases_ms });
    Ok(EnvelopeJson::new(cases, timings))
}
