//! Hilbert series of graded quotients B/I, via the leading-term ideal and a
//! pivot-variable recursion on monomial generators. The series is written
//! N(t)/(1-t)^nvars over the total grading; the pole order after cancelling
//! (1-t) factors is the Krull dimension of the quotient.

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monomial::Monomial;
use crate::order::TermOrder;

/// Dense integer polynomial in t, used for Hilbert numerators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPoly {
    /// Coefficient of t^i at index i; no trailing zeros.
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> IntPoly {
        IntPoly { coeffs: vec![1] }
    }

    /// 1 - t^d
    pub fn one_minus_t_pow(d: u32) -> IntPoly {
        let mut coeffs = vec![0i64; d as usize + 1];
        coeffs[0] = 1;
        coeffs[d as usize] = -1;
        IntPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> IntPoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0i64; len];
        for (i, item) in out.iter_mut().enumerate() {
            *item = self.coeff(i) + other.coeff(i);
        }
        IntPoly::from_coeffs(out)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    /// Multiply by t^d.
    pub fn shift(&self, d: u32) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + d as usize];
        out[d as usize..].copy_from_slice(&self.coeffs);
        IntPoly { coeffs: out }
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Exact quotient by (1 - t); `None` when 1 is not a root.
    pub fn div_one_minus_t(&self) -> Option<IntPoly> {
        if self.eval_at_one() != 0 {
            return None;
        }
        // N(t) = (1-t) Q(t): q_i = sum_{j<=i} n_j.
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut run = 0i64;
        for i in 0..self.coeffs.len().saturating_sub(1) {
            run += self.coeff(i);
            out.push(run);
        }
        Some(IntPoly::from_coeffs(out))
    }

    /// Taylor coefficients of `self / (1-t)^e` up to degree `max_deg`.
    pub fn series_over_denominator(&self, e: usize, max_deg: usize) -> Vec<i64> {
        // Repeatedly take partial sums: 1/(1-t) applied e times.
        let mut cur: Vec<i64> = (0..=max_deg).map(|i| self.coeff(i)).collect();
        for _ in 0..e {
            let mut run = 0i64;
            for c in cur.iter_mut() {
                run += *c;
                *c = run;
            }
        }
        cur
    }
}

/// Hilbert numerator data for a graded quotient B/I:
/// series = numerator/(1-t)^denom_exponent = reduced_numerator/(1-t)^pole_order
/// with reduced_numerator(1) != 0 whenever the quotient is nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HilbertData {
    pub numerator: IntPoly,
    pub denom_exponent: usize,
    pub reduced_numerator: IntPoly,
    pub pole_order: usize,
}

impl HilbertData {
    fn from_numerator(numerator: IntPoly, nvars: usize) -> HilbertData {
        let mut reduced = numerator.clone();
        let mut pole = nvars;
        while pole > 0 {
            match reduced.div_one_minus_t() {
                Some(q) => {
                    reduced = q;
                    pole -= 1;
                }
                None => break,
            }
        }
        if reduced.is_zero() {
            pole = 0;
        }
        HilbertData {
            numerator,
            denom_exponent: nvars,
            reduced_numerator: reduced,
            pole_order: pole,
        }
    }

    /// Dimensions of the graded pieces of the quotient, degrees 0..=max_deg.
    pub fn graded_dimensions(&self, max_deg: usize) -> Vec<i64> {
        self.reduced_numerator
            .series_over_denominator(self.pole_order, max_deg)
    }
}

/// Drop generators divisible by another generator; the minimal monomial
/// generating set.
fn minimalize_monomials(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by_key(|m| m.total_degree());
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn numerator_rec(gens: &[Monomial], nvars: usize) -> IntPoly {
    if gens.is_empty() {
        return IntPoly::one();
    }
    if gens.iter().any(|m| m.is_one()) {
        return IntPoly::zero();
    }
    // Pairwise coprime generators form a regular sequence.
    let coprime =
        (0..gens.len()).all(|i| (i + 1..gens.len()).all(|j| gens[i].coprime_with(&gens[j])));
    if coprime {
        let mut acc = IntPoly::one();
        for m in gens {
            acc = acc.mul(&IntPoly::one_minus_t_pow(m.total_degree()));
        }
        return acc;
    }

    // Pivot on the variable hitting the most generators.
    let mut freq = vec![0usize; nvars];
    for m in gens {
        for (v, f) in freq.iter_mut().enumerate() {
            if m.exp(v) > 0 {
                *f += 1;
            }
        }
    }
    let pivot = freq
        .iter()
        .enumerate()
        .max_by_key(|&(v, f)| (*f, nvars - v))
        .map(|(v, _)| v)
        .unwrap();
    debug_assert!(freq[pivot] >= 2);

    // N(M) = N(M + (x_v)) + t * N(M : x_v)
    let with_pivot: Vec<Monomial> = std::iter::once(Monomial::var(pivot))
        .chain(gens.iter().filter(|m| m.exp(pivot) == 0).copied())
        .collect();
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let mut q = *m;
            if q.exp(pivot) > 0 {
                q.set_exp(pivot, q.exp(pivot) - 1);
            }
            q
        })
        .collect();
    let left = numerator_rec(&with_pivot, nvars);
    let right = numerator_rec(&minimalize_monomials(&colon), nvars);
    left.add(&right.shift(1))
}

/// Hilbert numerator of B/M for a monomial ideal M in `nvars` variables.
pub fn hilbert_numerator(gens: &[Monomial], nvars: usize) -> HilbertData {
    let minimal = minimalize_monomials(gens);
    let numerator = numerator_rec(&minimal, nvars);
    HilbertData::from_numerator(numerator, nvars)
}

/// Hilbert data of B/I for a homogeneous ideal I: the series of B/I equals
/// the series of B over the leading-term ideal of I under any order.
pub fn hilbert_data(ideal: &Ideal) -> Result<HilbertData> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let gb = ideal.gb(&TermOrder::GrevlexTotal)?;
    let nvars = ideal.ring().nvars();
    Ok(hilbert_numerator(gb.leading_monomials(), nvars))
}

/// Krull dimension of B/I (pole order of the Hilbert series at t = 1).
pub fn krull_dimension(ideal: &Ideal) -> Result<usize> {
    Ok(hilbert_data(ideal)?.pole_order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::Ring;
    use crate::parse::parse_polynomial;
    use crate::poly::Polynomial;

    fn ring(n: usize) -> Ring {
        Ring::new(n, Field::default_prime()).unwrap()
    }

    fn p(text: &str, r: Ring) -> Polynomial {
        parse_polynomial(text, r).unwrap()
    }

    #[test]
    fn single_variable() {
        // M = (x) in 2 variables: numerator 1 - t.
        let h = hilbert_numerator(&[Monomial::var(0)], 2);
        assert_eq!(h.numerator, IntPoly::from_coeffs(vec![1, -1]));
        assert_eq!(h.pole_order, 1);
    }

    #[test]
    fn square_of_maximal_ideal_in_two_variables() {
        // M = (x^2, xy, y^2): numerator 1 - 3t^2 + 2t^3, series 1 + 2t.
        let gens = [
            Monomial::from_exps(&[2, 0]),
            Monomial::from_exps(&[1, 1]),
            Monomial::from_exps(&[0, 2]),
        ];
        let h = hilbert_numerator(&gens, 2);
        assert_eq!(h.numerator, IntPoly::from_coeffs(vec![1, 0, -3, 2]));
        assert_eq!(h.pole_order, 0);
        assert_eq!(h.reduced_numerator, IntPoly::from_coeffs(vec![1, 2]));
        assert_eq!(h.graded_dimensions(4), vec![1, 2, 0, 0, 0]);
    }

    #[test]
    fn zero_ideal_numerator_is_one() {
        let h = hilbert_numerator(&[], 4);
        assert_eq!(h.numerator, IntPoly::one());
        assert_eq!(h.pole_order, 4);
    }

    #[test]
    fn unit_ideal_gives_zero_quotient() {
        let h = hilbert_numerator(&[Monomial::one()], 3);
        assert!(h.numerator.is_zero());
        assert_eq!(h.pole_order, 0);
    }

    #[test]
    fn dimensions_of_simple_quotients() {
        let r = ring(2); // 4 variables
        assert_eq!(krull_dimension(&Ideal::zero(r)).unwrap(), 4);
        let all_vars = Ideal::new(r, vec![p("x1", r), p("x2", r), p("T1", r), p("T2", r)]);
        assert_eq!(krull_dimension(&all_vars).unwrap(), 0);
        // One hypersurface drops the dimension by one.
        let hyper = Ideal::new(r, vec![p("x1^2*T2 - x2^2*T1", r)]);
        assert_eq!(krull_dimension(&hyper).unwrap(), 3);
    }

    #[test]
    fn inhomogeneous_input_rejected() {
        let r = ring(1);
        let i = Ideal::new(r, vec![p("x1 + 1", r)]);
        assert!(matches!(krull_dimension(&i), Err(Error::NotHomogeneous)));
    }

    #[test]
    fn series_matches_leading_term_ideal_for_a_non_monomial_ideal() {
        let r = ring(2);
        let i = Ideal::new(r, vec![p("x1*T2 - x2*T1", r)]);
        let h = hilbert_data(&i).unwrap();
        // A single quadric: numerator 1 - t^2, dimension 3.
        assert_eq!(h.numerator, IntPoly::from_coeffs(vec![1, 0, -1]));
        assert_eq!(h.pole_order, 3);
    }
}
