//! The Rees-algebra constructions for the maximal ideal of a hypersurface
//! ring k[x1..xn]/(f): the 2xn matrix psi and its minor ideal, presentation
//! matrices, downgraded sequences built by an exchange of one x variable for
//! its T partner per monomial, the defining ideal computed two independent
//! ways (downgrade construction vs colon/saturation), theorem verification,
//! and the classification report (minimal generators, relation type, fiber
//! ring, dimension, depth, Cohen-Macaulayness).

use std::time::{Duration, Instant};

use crate::depth::{depth_probe, DepthProbeResult};
use crate::error::{Error, Result};
use crate::exec;
use crate::field::Coeff;
use crate::groebner::Ideal;
use crate::hilbert::krull_dimension;
use crate::ideal_ops::minimalize_generators;
use crate::monomial::{Monomial, Ring};
use crate::order::TermOrder;
use crate::poly::{Bidegree, Polynomial};

/// Row placement rule for the partial column of a monomial: exchange the
/// smallest or the largest x index that divides it.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Strategy {
    #[default]
    MinIndex,
    MaxIndex,
}

/// Number of depth-probe trials a classification runs; all must agree.
pub const DEPTH_TRIALS: usize = 3;

/// The data anchoring one instance: n, the hypersurface equation f of
/// x-degree d, the matrix psi with rows (x1..xn) and (T1..Tn), and the ideal
/// of its 2x2 minors x_i*T_j - x_j*T_i.
#[derive(Clone, Debug)]
pub struct ReesSetup {
    ring: Ring,
    n: usize,
    d: u32,
    f: Polynomial,
    minors: Vec<Polynomial>,
    i2psi: Ideal,
}

impl ReesSetup {
    pub fn new(n: usize, f: Polynomial) -> Result<ReesSetup> {
        ReesSetup::with_budget(n, f, crate::groebner::DEFAULT_STEP_BUDGET)
    }

    pub fn with_budget(n: usize, f: Polynomial, budget: u64) -> Result<ReesSetup> {
        if n < 2 {
            return Err(Error::InvalidSetup(format!(
                "need at least two variables, got n = {n}"
            )));
        }
        let ring = *f.ring();
        if ring.n != n || ring.tags != 0 {
            return Err(Error::InvalidSetup(
                "polynomial ring does not match n".to_string(),
            ));
        }
        let d = match f.bidegree() {
            Bidegree::Zero => return Err(Error::InvalidSetup("f must be nonzero".to_string())),
            Bidegree::Homogeneous { x, t: 0 } if x >= 1 => x,
            Bidegree::Homogeneous { t: 0, .. } => {
                return Err(Error::InvalidSetup(
                    "f must have degree at least one".to_string(),
                ))
            }
            Bidegree::Homogeneous { .. } => {
                return Err(Error::InvalidSetup(
                    "f must not involve the T variables".to_string(),
                ))
            }
            Bidegree::Mixed => {
                return Err(Error::InvalidSetup(
                    "f must be homogeneous in the x variables".to_string(),
                ))
            }
        };

        let mut minors = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                // x_i*T_j - x_j*T_i
                let a = Monomial::var(ring.x(i)).mul(&Monomial::var(ring.t(j)));
                let b = Monomial::var(ring.x(j)).mul(&Monomial::var(ring.t(i)));
                minors.push(Polynomial::from_terms(
                    ring,
                    vec![
                        (a, ring.field.one()),
                        (b, ring.field.neg(&ring.field.one())),
                    ],
                ));
            }
        }
        let i2psi = Ideal::new(ring, minors.clone()).with_budget(budget);
        Ok(ReesSetup {
            ring,
            n,
            d,
            f,
            minors,
            i2psi,
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn hypersurface(&self) -> &Polynomial {
        &self.f
    }

    pub fn minors(&self) -> &[Polynomial] {
        &self.minors
    }

    pub fn minor_ideal(&self) -> &Ideal {
        &self.i2psi
    }

    /// The ideal (x1, ..., xn).
    pub fn x_ideal(&self) -> Ideal {
        self.i2psi.derived(
            (0..self.n)
                .map(|i| Polynomial::variable(self.ring, self.ring.x(i)))
                .collect::<Vec<_>>(),
        )
    }
}

/// A column c of n polynomials with sum_j x_j * c_j = g. Each monomial of g
/// contributes its full term, divided by one x variable, to a single row:
/// the row of the smallest (or largest) x index with positive exponent.
pub fn partial_column(g: &Polynomial, strategy: Strategy) -> Result<Vec<Polynomial>> {
    let ring = *g.ring();
    let n = ring.n;
    match g.bidegree() {
        Bidegree::Homogeneous { x, .. } if x >= 1 => {}
        _ => {
            return Err(Error::InvalidSetup(
                "partial column wants a bihomogeneous input of positive x-degree".to_string(),
            ))
        }
    }
    let mut rows: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); n];
    for (m, c) in g.terms() {
        let indices = (0..n).filter(|&i| m.exp(ring.x(i)) > 0);
        let row = match strategy {
            Strategy::MinIndex => indices.min(),
            Strategy::MaxIndex => indices.max(),
        }
        .expect("positive x-degree monomial");
        let q = m.checked_div(&Monomial::var(ring.x(row))).unwrap();
        rows[row].push((q, c.clone()));
    }
    Ok(rows
        .into_iter()
        .map(|terms| Polynomial::from_terms(ring, terms))
        .collect())
}

/// The full downgraded sequence f_0 = f, f_i = sum_j T_j * (column of
/// f_{i-1})_j, together with the columns used at every step.
#[derive(Clone, Debug)]
pub struct DowngradedSequence {
    pub strategy: Strategy,
    pub entries: Vec<Polynomial>,
    pub columns: Vec<Vec<Polynomial>>,
}

impl DowngradedSequence {
    pub fn degree(&self) -> usize {
        self.entries.len() - 1
    }
}

pub fn downgrade_sequence(setup: &ReesSetup, strategy: Strategy) -> Result<DowngradedSequence> {
    let ring = setup.ring;
    let mut entries = vec![setup.f.clone()];
    let mut columns = Vec::with_capacity(setup.d as usize);
    for _ in 1..=setup.d {
        let col = partial_column(entries.last().unwrap(), strategy)?;
        let mut next = Polynomial::zero(ring);
        for (j, cj) in col.iter().enumerate() {
            next = next.add(&Polynomial::variable(ring, ring.t(j)).mul(cj));
        }
        entries.push(next);
        columns.push(col);
    }
    Ok(DowngradedSequence {
        strategy,
        entries,
        columns,
    })
}

/// Presentation matrix of the maximal ideal: n rows, C(n,2)+1 columns. The
/// first C(n,2) columns are Koszul syzygies of (x1..xn) chosen so that the
/// row vector (T1..Tn) times the column for the pair (i, j) is exactly the
/// minor x_i*T_j - x_j*T_i; the last column is a partial column of f.
pub fn presentation_matrix(setup: &ReesSetup, strategy: Strategy) -> Result<Vec<Vec<Polynomial>>> {
    let ring = setup.ring;
    let n = setup.n;
    let mut columns: Vec<Vec<Polynomial>> = Vec::with_capacity(n * (n - 1) / 2 + 1);
    for i in 0..n {
        for j in (i + 1)..n {
            let mut col = vec![Polynomial::zero(ring); n];
            col[i] = Polynomial::variable(ring, ring.x(j)).neg();
            col[j] = Polynomial::variable(ring, ring.x(i));
            columns.push(col);
        }
    }
    columns.push(partial_column(&setup.f, strategy)?);

    // Transpose to row-major: n rows, columns.len() columns.
    let rows = (0..n)
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    Ok(rows)
}

/// The ideal presenting the symmetric algebra: I2(psi) + (f, f_1).
pub fn symmetric_ideal(setup: &ReesSetup, strategy: Strategy) -> Result<Ideal> {
    let seq = downgrade_sequence(setup, strategy)?;
    Ok(setup.i2psi.plus(&[setup.f.clone(), seq.entries[1].clone()]))
}

/// Defining ideal by the downgrade construction: I2(psi) + (f_0, ..., f_d).
pub fn rees_ideal_downgrade(setup: &ReesSetup, strategy: Strategy) -> Result<Ideal> {
    let seq = downgrade_sequence(setup, strategy)?;
    Ok(setup.i2psi.plus(&seq.entries))
}

/// Defining ideal by the independent oracle route: saturate I2(psi) + (f)
/// by (x1..xn). The stabilization index may not exceed d; the returned
/// fixpoint was verified stable under one more colon, which pins the d-fold
/// iterated colon to the same ideal.
pub fn rees_ideal_saturation(setup: &ReesSetup) -> Result<(Ideal, usize)> {
    let base = setup.i2psi.plus(std::slice::from_ref(&setup.f));
    let cap = 2 * setup.d as usize + 4;
    let (sat, index) = base.saturate(&setup.x_ideal(), cap)?;
    if index > setup.d as usize {
        return Err(Error::TheoremViolation {
            check: "saturation-index",
            detail: format!(
                "stabilized after {index} colon steps, above the bound {}",
                setup.d
            ),
        });
    }
    Ok((sat, index))
}

/// The explicit minor combination equal to x_j*f_i - T_j*f_{i-1}: summing
/// (x_j*T_l - x_l*T_j) * c_l over the column c of f_{i-1} telescopes the
/// exchange step. Built from ring arithmetic only; no basis computation.
pub fn exchange_witness(
    setup: &ReesSetup,
    seq: &DowngradedSequence,
    i: usize,
    j: usize,
) -> Polynomial {
    assert!(i >= 1 && i <= seq.degree());
    assert!(j < setup.n);
    let ring = setup.ring;
    let col = &seq.columns[i - 1];
    let minor_index = |a: usize, b: usize| -> usize {
        // Position of the pair (a, b), a < b, in lexicographic pair order.
        (0..a).map(|r| setup.n - 1 - r).sum::<usize>() + (b - a - 1)
    };
    let mut acc = Polynomial::zero(ring);
    for (l, cl) in col.iter().enumerate() {
        if l == j || cl.is_zero() {
            continue;
        }
        // x_j*T_l - x_l*T_j = -minor(l, j) when l < j, +minor(j, l) when j < l.
        let m = if l < j {
            setup.minors[minor_index(l, j)].neg()
        } else {
            setup.minors[minor_index(j, l)].clone()
        };
        acc = acc.add(&m.mul(cl));
    }
    acc
}

/// Outcome of checking the defining-ideal identity on one instance: the two
/// downgrade strategies, the saturation of I2(psi) + (f), and the saturation
/// of the symmetric-algebra ideal must present the same ideal.
#[derive(Clone, Debug)]
pub struct VerificationRecord {
    pub verdict: bool,
    pub strategies_agree: bool,
    pub downgrade_equals_saturation: bool,
    pub symmetric_saturation_agrees: bool,
    pub chain_flags: Vec<bool>,
    pub minors_contained: bool,
    pub saturation_index: usize,
    pub symmetric_saturation_index: usize,
    pub downgrade_generator_count: usize,
    pub saturation_generator_count: usize,
    pub sequence_min: DowngradedSequence,
    pub sequence_max: DowngradedSequence,
    pub saturation_ideal: Ideal,
}

pub fn verify_main_theorem(setup: &ReesSetup) -> Result<VerificationRecord> {
    let (down_min, down_max, sat, sym_sat) = exec::join4(
        || rees_ideal_downgrade(setup, Strategy::MinIndex),
        || rees_ideal_downgrade(setup, Strategy::MaxIndex),
        || rees_ideal_saturation(setup),
        || -> Result<(Ideal, usize)> {
            let sym = symmetric_ideal(setup, Strategy::MinIndex)?;
            sym.saturate(&setup.x_ideal(), 2 * setup.d as usize + 4)
        },
    );
    let down_min = down_min?;
    let down_max = down_max?;
    let (sat_ideal, sat_index) = sat?;
    let (sym_ideal, sym_index) = sym_sat?;

    let strategies_agree = down_min.equals(&down_max)?;
    let downgrade_equals_saturation = down_min.equals(&sat_ideal)?;
    let symmetric_saturation_agrees = sat_ideal.equals(&sym_ideal)?;

    let seq_min = downgrade_sequence(setup, Strategy::MinIndex)?;
    let seq_max = downgrade_sequence(setup, Strategy::MaxIndex)?;

    let minors_contained = setup
        .minors
        .iter()
        .map(|m| sat_ideal.contains(m))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|b| b);
    let chain_flags = seq_min
        .entries
        .iter()
        .map(|fi| sat_ideal.contains(fi))
        .collect::<Result<Vec<bool>>>()?;
    let chain_ok = minors_contained && chain_flags.iter().all(|&b| b);

    let verdict =
        strategies_agree && downgrade_equals_saturation && symmetric_saturation_agrees && chain_ok;
    Ok(VerificationRecord {
        verdict,
        strategies_agree,
        downgrade_equals_saturation,
        symmetric_saturation_agrees,
        chain_flags,
        minors_contained,
        saturation_index: sat_index,
        symmetric_saturation_index: sym_index,
        downgrade_generator_count: down_min.generators().len(),
        saturation_generator_count: sat_ideal.generators().len(),
        sequence_min: seq_min,
        sequence_max: seq_max,
        saturation_ideal: sat_ideal,
    })
}

/// Full classification of one instance. Every numeric invariant is computed
/// from the saturation-side ideal, so agreement with the downgrade-side
/// predictions is a genuine cross-check rather than a tautology.
#[derive(Clone, Debug)]
pub struct ReesReport {
    pub n: usize,
    pub d: u32,
    pub f: Polynomial,
    pub verdict: bool,
    pub downgrade_generator_count: usize,
    pub saturation_generator_count: usize,
    pub minimal_generator_count: usize,
    pub relation_type: u32,
    pub fiber_generator: Polynomial,
    pub fiber_regularity_t: u32,
    pub dimension: usize,
    pub depth: usize,
    pub cm: bool,
    pub almost_cm: bool,
    pub saturation_index: usize,
    pub depth_probe: DepthProbeResult,
    pub timings: Vec<(&'static str, Duration)>,
}

pub fn classify(setup: &ReesSetup, seed: u64) -> Result<ReesReport> {
    let mut timings = Vec::new();
    let clock = Instant::now();
    let record = verify_main_theorem(setup)?;
    timings.push(("verify", clock.elapsed()));

    let sat = &record.saturation_ideal;

    let clock = Instant::now();
    let minimal = minimalize_generators(sat.generators())?;
    timings.push(("minimalize", clock.elapsed()));
    let minimal_generator_count = minimal.len();
    if setup.d >= 2 {
        let expected = setup.n * (setup.n - 1) / 2 + setup.d as usize + 1;
        if minimal_generator_count != expected {
            return Err(Error::TheoremViolation {
                check: "minimal-generator-count",
                detail: format!("got {minimal_generator_count}, expected {expected}"),
            });
        }
    }
    let relation_type = minimal
        .iter()
        .map(|g| match g.bidegree() {
            Bidegree::Homogeneous { t, .. } => t,
            _ => 0,
        })
        .max()
        .unwrap_or(0);

    let clock = Instant::now();
    let images: Vec<Polynomial> = sat
        .generators()
        .iter()
        .map(|g| g.substitute_x_zero())
        .filter(|g| !g.is_zero())
        .collect();
    let fiber_min = minimalize_generators(&images)?;
    if fiber_min.len() != 1 {
        return Err(Error::TheoremViolation {
            check: "fiber-not-principal",
            detail: format!("fiber ideal needed {} generators", fiber_min.len()),
        });
    }
    let fiber_generator = fiber_min[0].monic(&TermOrder::GrevlexTotal);
    let fiber_degree = fiber_generator.total_degree().unwrap();
    timings.push(("fiber", clock.elapsed()));

    let clock = Instant::now();
    let dimension = krull_dimension(sat)?;
    timings.push(("dimension", clock.elapsed()));
    if dimension != setup.n {
        return Err(Error::TheoremViolation {
            check: "dimension",
            detail: format!("got {dimension}, expected {}", setup.n),
        });
    }

    let clock = Instant::now();
    let probe = depth_probe(sat, dimension, DEPTH_TRIALS, seed)?;
    timings.push(("depth", clock.elapsed()));
    if !probe.agreement {
        return Err(Error::DepthDisagreement {
            depths: probe.trials.iter().map(|t| t.depth).collect(),
            seeds: probe.trials.iter().map(|t| t.seed).collect(),
        });
    }
    if probe.depth + 1 < setup.n {
        return Err(Error::TheoremViolation {
            check: "depth-floor",
            detail: format!(
                "measured depth {} below n - 1 = {}",
                probe.depth,
                setup.n - 1
            ),
        });
    }

    Ok(ReesReport {
        n: setup.n,
        d: setup.d,
        f: setup.f.clone(),
        verdict: record.verdict,
        downgrade_generator_count: record.downgrade_generator_count,
        saturation_generator_count: record.saturation_generator_count,
        minimal_generator_count,
        relation_type,
        fiber_generator,
        fiber_regularity_t: fiber_degree.saturating_sub(1),
        dimension,
        depth: probe.depth,
        cm: probe.depth == setup.n,
        almost_cm: probe.depth + 1 >= setup.n,
        saturation_index: record.saturation_index,
        depth_probe: probe,
        timings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::parse::parse_polynomial;

    fn setup(n: usize, f: &str) -> ReesSetup {
        let ring = Ring::new(n, Field::default_prime()).unwrap();
        ReesSetup::new(n, parse_polynomial(f, ring).unwrap()).unwrap()
    }

    fn p(text: &str, r: Ring) -> Polynomial {
        parse_polynomial(text, r).unwrap()
    }

    #[test]
    fn setup_validation() {
        let r3 = Ring::new(3, Field::default_prime()).unwrap();
        assert!(ReesSetup::new(1, p("x1", Ring::new(1, Field::default_prime()).unwrap())).is_err());
        assert!(ReesSetup::new(3, p("0", r3)).is_err());
        assert!(ReesSetup::new(3, p("x1 + x2^2", r3)).is_err());
        assert!(ReesSetup::new(3, p("x1*T2", r3)).is_err());
        assert!(ReesSetup::new(3, p("5", r3)).is_err());
        let s = setup(3, "x1^2*x2 + x1*x3^2");
        assert_eq!(s.degree(), 3);
        assert_eq!(s.minors().len(), 3);
        for m in s.minors() {
            assert_eq!(m.bidegree(), Bidegree::Homogeneous { x: 1, t: 1 });
        }
    }

    #[test]
    fn linear_case_has_one_minor() {
        let s = setup(2, "x2");
        assert_eq!(s.degree(), 1);
        assert_eq!(s.minors(), &[p("x1*T2 - x2*T1", s.ring())]);
    }

    #[test]
    fn min_index_column_of_the_worked_example() {
        let s = setup(3, "x1^2*x2 + x1*x3^2");
        let col = partial_column(s.hypersurface(), Strategy::MinIndex).unwrap();
        let r = s.ring();
        assert_eq!(col[0], p("x1*x2 + x3^2", r));
        assert!(col[1].is_zero());
        assert!(col[2].is_zero());
        let col_max = partial_column(s.hypersurface(), Strategy::MaxIndex).unwrap();
        assert!(col_max[0].is_zero());
        assert_eq!(col_max[1], p("x1^2", r));
        assert_eq!(col_max[2], p("x1*x3", r));
    }

    #[test]
    fn pure_power_column() {
        let s = setup(3, "x3^4");
        let col = partial_column(s.hypersurface(), Strategy::MinIndex).unwrap();
        assert!(col[0].is_zero() && col[1].is_zero());
        assert_eq!(col[2], p("x3^3", s.ring()));
    }

    #[test]
    fn downgrade_reconstruction_identity() {
        // sum_j x_j * (column of f_{i-1})_j = f_{i-1} at every step.
        for (n, f) in [(3, "x1^2*x2 + x1*x3^2"), (2, "x1^3 + x2^3"), (3, "x3^4")] {
            let s = setup(n, f);
            for strategy in [Strategy::MinIndex, Strategy::MaxIndex] {
                let seq = downgrade_sequence(&s, strategy).unwrap();
                for i in 1..seq.entries.len() {
                    let col = &seq.columns[i - 1];
                    let mut rebuilt = Polynomial::zero(s.ring());
                    for (j, cj) in col.iter().enumerate() {
                        rebuilt =
                            rebuilt.add(&Polynomial::variable(s.ring(), s.ring().x(j)).mul(cj));
                    }
                    assert_eq!(rebuilt, seq.entries[i - 1]);
                }
            }
        }
    }

    #[test]
    fn worked_example_min_sequence() {
        let s = setup(3, "x1^2*x2 + x1*x3^2");
        let r = s.ring();
        let seq = downgrade_sequence(&s, Strategy::MinIndex).unwrap();
        assert_eq!(seq.entries[0], p("x1^2*x2 + x1*x3^2", r));
        assert_eq!(seq.entries[1], p("x1*x2*T1 + x3^2*T1", r));
        assert_eq!(seq.entries[2], p("x2*T1^2 + x3*T1*T3", r));
        assert_eq!(seq.entries[3], p("T1^2*T2 + T1*T3^2", r));
    }

    #[test]
    fn worked_example_max_first_step() {
        let s = setup(3, "x1^2*x2 + x1*x3^2");
        let seq = downgrade_sequence(&s, Strategy::MaxIndex).unwrap();
        assert_eq!(seq.entries[1], p("x1^2*T2 + x1*x3*T3", s.ring()));
    }

    #[test]
    fn sequence_bidegrees_and_terminal_symmetry() {
        for (n, f) in [(3, "x1^2*x2 + x1*x3^2"), (2, "x1^2 + x1*x2"), (4, "x4^3")] {
            let s = setup(n, f);
            for strategy in [Strategy::MinIndex, Strategy::MaxIndex] {
                let seq = downgrade_sequence(&s, strategy).unwrap();
                let d = s.degree();
                for (i, fi) in seq.entries.iter().enumerate() {
                    assert!(!fi.is_zero());
                    assert_eq!(
                        fi.bidegree(),
                        Bidegree::Homogeneous {
                            x: d - i as u32,
                            t: i as u32
                        }
                    );
                }
                assert_eq!(
                    seq.entries[d as usize],
                    s.hypersurface().substitute_x_to_t()
                );
            }
        }
    }

    #[test]
    fn pure_power_sequence() {
        let s = setup(2, "x2^3");
        let r = s.ring();
        let seq = downgrade_sequence(&s, Strategy::MinIndex).unwrap();
        assert_eq!(
            seq.entries,
            vec![p("x2^3", r), p("x2^2*T2", r), p("x2*T2^2", r), p("T2^3", r)]
        );
    }

    #[test]
    fn linear_sequence() {
        let s = setup(2, "x2");
        let seq = downgrade_sequence(&s, Strategy::MinIndex).unwrap();
        assert_eq!(seq.entries, vec![p("x2", s.ring()), p("T2", s.ring())]);
    }

    #[test]
    fn presentation_rows_times_t_give_minors() {
        let s = setup(3, "x1^2*x2 + x1*x3^2");
        let r = s.ring();
        let rows = presentation_matrix(&s, Strategy::MinIndex).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].len(), 4);
        let ncols = rows[0].len();
        // (T1..Tn) * matrix: first C(n,2) entries are the minors, last is f_1.
        let mut products = Vec::new();
        for cidx in 0..ncols {
            let mut acc = Polynomial::zero(r);
            for (ridx, row) in rows.iter().enumerate() {
                acc = acc.add(&Polynomial::variable(r, r.t(ridx)).mul(&row[cidx]));
            }
            products.push(acc);
        }
        assert_eq!(&products[..3], s.minors());
        let seq = downgrade_sequence(&s, Strategy::MinIndex).unwrap();
        assert_eq!(products[3], seq.entries[1]);
        // Each column is a syzygy of (x1..xn) except the last, which hits f.
        for cidx in 0..ncols {
            let mut acc = Polynomial::zero(r);
            for (ridx, row) in rows.iter().enumerate() {
                acc = acc.add(&Polynomial::variable(r, r.x(ridx)).mul(&row[cidx]));
            }
            if cidx + 1 < ncols {
                assert!(acc.is_zero());
            } else {
                assert_eq!(&acc, s.hypersurface());
            }
        }
    }

    #[test]
    fn n2_presentation_shape() {
        let s = setup(2, "x1^2 + x2^2");
        let rows = presentation_matrix(&s, Strategy::MinIndex).unwrap();
        let r = s.ring();
        assert_eq!(rows[0][0], p("-x2", r));
        assert_eq!(rows[1][0], p("x1", r));
    }

    #[test]
    fn exchange_witness_matches_identity() {
        let s = setup(3, "x1^2*x2 + x1*x3^2");
        for strategy in [Strategy::MinIndex, Strategy::MaxIndex] {
            let seq = downgrade_sequence(&s, strategy).unwrap();
            for i in 1..=s.degree() as usize {
                for j in 0..s.n() {
                    let xj = Polynomial::variable(s.ring(), s.ring().x(j));
                    let tj = Polynomial::variable(s.ring(), s.ring().t(j));
                    let lhs = xj.mul(&seq.entries[i]).sub(&tj.mul(&seq.entries[i - 1]));
                    let witness = exchange_witness(&s, &seq, i, j);
                    assert_eq!(lhs, witness);
                }
            }
        }
    }

    #[test]
    fn downgrade_ideal_of_pure_power_is_power_sum() {
        let s = setup(2, "x2^3");
        let j = rees_ideal_downgrade(&s, Strategy::MinIndex).unwrap();
        let kt = s
            .minor_ideal()
            .sum(&Ideal::new(s.ring(), vec![p("x2", s.ring()), p("T2", s.ring())]).power(3))
            .unwrap();
        assert!(j.equals(&kt).unwrap());
    }

    #[test]
    fn linear_type_verification() {
        let s = setup(2, "x2");
        let rec = verify_main_theorem(&s).unwrap();
        assert!(rec.verdict);
        assert_eq!(rec.saturation_index, 1);
    }

    #[test]
    fn hilbert_function_of_the_quotient_matches_direct_counting() {
        use crate::hilbert::hilbert_data;
        // The (p, q) piece of the quotient by the defining ideal is the
        // degree-(p+q) piece of the q-th power of the maximal ideal, which
        // is all of R_{p+q}; so the total-degree Hilbert function is
        // (e+1) * dim R_e with dim R_e = dim S_e - dim S_{e-d}.
        for (n, f) in [(3usize, "x1^2*x2 + x1*x3^2"), (2, "x2"), (2, "x1^3 + x2^3")] {
            let s = setup(n, f);
            let (sat, _) = rees_ideal_saturation(&s).unwrap();
            let got = hilbert_data(&sat).unwrap().graded_dimensions(6);
            let dim_s = |e: i64| -> i64 {
                if e < 0 {
                    return 0;
                }
                // Monomials of degree e in n variables.
                let (mut num, mut den) = (1i64, 1i64);
                for k in 1..n as i64 {
                    num *= e + k;
                    den *= k;
                }
                num / den
            };
            let expect: Vec<i64> = (0..=6i64)
                .map(|e| (e + 1) * (dim_s(e) - dim_s(e - s.degree() as i64)))
                .collect();
            assert_eq!(got, expect, "n={n} f={f}");
        }
    }

    #[test]
    fn dense_cubic_in_four_variables_verifies() {
        let s = setup(4, "x1^3 + x2^3 + x3^3 + x4^3 + x1*x2*x4");
        let rec = verify_main_theorem(&s).unwrap();
        assert!(rec.verdict);
        assert!(rec.saturation_index <= 3);
    }

    #[test]
    fn rational_coefficients_give_the_same_invariants() {
        // Characteristic-independence spot check: the worked example over
        // exact rationals matches the prime-field run invariant for
        // invariant.
        let ring = Ring::new(3, Field::Rational).unwrap();
        let f = parse_polynomial("x1^2*x2 + x1*x3^2", ring).unwrap();
        let s = ReesSetup::new(3, f).unwrap();
        let report = classify(&s, 1).unwrap();
        assert!(report.verdict);
        assert_eq!(report.minimal_generator_count, 7);
        assert_eq!(report.relation_type, 3);
        assert_eq!(report.dimension, 3);
        assert_eq!(report.depth, 2);
        assert!(!report.cm && report.almost_cm);
        assert_eq!(
            report.fiber_generator,
            parse_polynomial("T1^2*T2 + T1*T3^2", ring).unwrap()
        );
    }

    #[test]
    fn worked_example_verification_and_classification() {
        let s = setup(3, "x1^2*x2 + x1*x3^2");
        let report = classify(&s, 1).unwrap();
        assert!(report.verdict);
        assert_eq!(report.minimal_generator_count, 7);
        assert_eq!(report.relation_type, 3);
        assert_eq!(report.fiber_generator, p("T1^2*T2 + T1*T3^2", s.ring()));
        assert_eq!(report.fiber_regularity_t, 2);
        assert_eq!(report.dimension, 3);
        assert_eq!(report.depth, 2);
        assert!(!report.cm);
        assert!(report.almost_cm);
    }

    #[test]
    fn quadric_in_three_variables_is_cm() {
        let s = setup(3, "x1*x2 + x3^2");
        let report = classify(&s, 2).unwrap();
        assert!(report.verdict);
        assert!(report.cm);
        assert_eq!(report.depth, 3);
        assert_eq!(report.relation_type, 2);
    }

    #[test]
    fn exchange_steps_reduce_to_zero_against_minor_basis() {
        use crate::groebner::normal_form;
        let s = setup(3, "x1^2*x2 + x1*x3^2");
        let order = TermOrder::GrevlexTotal;
        let gb = s.minor_ideal().gb(&order).unwrap();
        for strategy in [Strategy::MinIndex, Strategy::MaxIndex] {
            let seq = downgrade_sequence(&s, strategy).unwrap();
            for i in 1..=s.degree() as usize {
                for j in 0..s.n() {
                    let xj = Polynomial::variable(s.ring(), s.ring().x(j));
                    let tj = Polynomial::variable(s.ring(), s.ring().t(j));
                    let diff = xj.mul(&seq.entries[i]).sub(&tj.mul(&seq.entries[i - 1]));
                    assert!(normal_form(&diff, gb.elements(), &order).is_zero());
                }
            }
        }
    }

    #[test]
    fn minor_generators_are_already_a_reduced_basis() {
        use crate::oracle::membership_by_linear_algebra;
        let s = setup(3, "x1^2*x2 + x1*x3^2");
        let gb = s.minor_ideal().gb(&TermOrder::GrevlexTotal).unwrap();
        let mut monic: Vec<Polynomial> = s
            .minors()
            .iter()
            .map(|m| m.monic(&TermOrder::GrevlexTotal))
            .collect();
        monic.sort_by_key(|m| m.format());
        let mut got = gb.elements().to_vec();
        got.sort_by_key(|m| m.format());
        assert_eq!(got, monic);
        // Degree-by-degree linear algebra confirms a few membership facts.
        let r = s.ring();
        let inside = s.minors()[0].mul(&p("x1 + T3", r));
        assert!(membership_by_linear_algebra(s.minors(), &inside));
        assert!(!membership_by_linear_algebra(s.minors(), s.hypersurface()));
    }

    #[test]
    fn hypersurface_lies_outside_the_minor_ideal() {
        let s = setup(3, "x1^2*x2 + x1*x3^2");
        assert!(!s.minor_ideal().contains(s.hypersurface()).unwrap());
    }

    #[test]
    fn partial_ideals_contain_the_other_strategys_entries() {
        let s = setup(3, "x1^2*x2 + x1*x3^2");
        let min = downgrade_sequence(&s, Strategy::MinIndex).unwrap();
        let max = downgrade_sequence(&s, Strategy::MaxIndex).unwrap();
        let j_min = s.minor_ideal().plus(&min.entries);
        for g in &max.entries {
            assert!(j_min.contains(g).unwrap());
        }
    }

    #[test]
    fn colon_by_x1_contains_the_first_downgrade() {
        let s = setup(3, "x1^2*x2 + x1*x3^2");
        let base = s.minor_ideal().plus(&[s.hypersurface().clone()]);
        let seq = downgrade_sequence(&s, Strategy::MinIndex).unwrap();
        let q = base
            .colon_element(&Polynomial::variable(s.ring(), s.ring().x(0)))
            .unwrap();
        assert!(q.contains(&seq.entries[1]).unwrap());
    }

    #[test]
    fn symmetric_ideal_saturation_is_strategy_independent() {
        let s = setup(3, "x1^2*x2 + x1*x3^2");
        let cap = 2 * s.degree() as usize + 4;
        let (a, _) = symmetric_ideal(&s, Strategy::MinIndex)
            .unwrap()
            .saturate(&s.x_ideal(), cap)
            .unwrap();
        let (b, _) = symmetric_ideal(&s, Strategy::MaxIndex)
            .unwrap()
            .saturate(&s.x_ideal(), cap)
            .unwrap();
        assert!(a.equals(&b).unwrap());
    }

    #[test]
    fn linear_symmetric_ideal_is_the_whole_defining_ideal() {
        // d = 1: the symmetric-algebra ideal, the downgrade ideal, and the
        // saturation all coincide.
        let s = setup(2, "x2");
        let sym = symmetric_ideal(&s, Strategy::MinIndex).unwrap();
        let down = rees_ideal_downgrade(&s, Strategy::MinIndex).unwrap();
        let (sat, _) = rees_ideal_saturation(&s).unwrap();
        assert!(sym.equals(&down).unwrap());
        assert!(sym.equals(&sat).unwrap());
    }

    #[test]
    fn linear_type_classification() {
        let s = setup(2, "x2");
        let report = classify(&s, 3).unwrap();
        assert!(report.verdict);
        assert_eq!(report.relation_type, 1);
        assert_eq!(report.fiber_generator, p("T2", s.ring()));
        assert_eq!(report.fiber_regularity_t, 0);
        assert!(report.cm);
        assert_eq!(report.minimal_generator_count, 2);
    }
}
