//! Brute-force reference implementations used by the test suites to
//! cross-check the Groebner and Hilbert kernels. These deliberately avoid
//! normal forms and basis computations: membership is decided degree by
//! degree with dense linear algebra over F_p, and Hilbert functions by
//! counting standard monomials.

use crate::field::{Coeff, Field};
use crate::monomial::{Monomial, Ring};
use crate::poly::Polynomial;

/// All monomials of exact total degree `d` in `nvars` variables.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = Monomial::one();
    fn rec(out: &mut Vec<Monomial>, cur: &mut Monomial, var: usize, left: u32, nvars: usize) {
        if var + 1 == nvars {
            cur.set_exp(var, left as u16);
            out.push(*cur);
            cur.set_exp(var, 0);
            return;
        }
        for e in 0..=left {
            cur.set_exp(var, e as u16);
            rec(out, cur, var + 1, left - e, nvars);
        }
        cur.set_exp(var, 0);
    }
    rec(&mut out, &mut cur, 0, d, nvars);
    out
}

/// Dense row-reduction membership oracle over F_p. Decides whether a
/// homogeneous polynomial of degree d lies in the span of
/// { m * g : g generator, m monomial, deg(m * g) = d }.
pub fn membership_by_linear_algebra(gens: &[Polynomial], p: &Polynomial) -> bool {
    if p.is_zero() {
        return true;
    }
    let ring = *p.ring();
    let modulus = match ring.field {
        Field::Prime(m) => m,
        Field::Rational => panic!("linear-algebra oracle runs over F_p"),
    };
    assert!(p.is_homogeneous(), "oracle wants homogeneous input");
    let d = p.total_degree().unwrap();

    // Basis of the degree-d graded piece.
    let monos = monomials_of_degree(ring.nvars(), d);
    let index: std::collections::HashMap<Monomial, usize> =
        monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();

    let to_row = |q: &Polynomial| -> Vec<u64> {
        let mut row = vec![0u64; monos.len()];
        for (m, c) in q.terms() {
            let v = match c {
                Coeff::Fp(v) => *v,
                Coeff::Rat(_) => unreachable!(),
            };
            row[index[m]] = v;
        }
        row
    };

    let mut rows: Vec<Vec<u64>> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        assert!(g.is_homogeneous(), "oracle wants homogeneous generators");
        let gd = g.total_degree().unwrap();
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(ring.nvars(), d - gd) {
            rows.push(to_row(&g.mul_term(&m, &ring.field.one())));
        }
    }

    // Gaussian elimination, then reduce the target vector.
    let inv = |a: u64| -> u64 {
        // Fermat: a^(p-2) mod p.
        let mut base = a % modulus;
        let mut e = modulus - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % modulus;
            }
            base = base * base % modulus;
            e >>= 1;
        }
        acc
    };

    let ncols = monos.len();
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    'rows: for mut row in rows {
        for (col, prow) in &pivots {
            if row[*col] != 0 {
                let f = row[*col];
                for j in 0..ncols {
                    row[j] = (row[j] + (modulus - f) * prow[j]) % modulus;
                }
            }
        }
        for col in 0..ncols {
            if row[col] != 0 {
                let f = inv(row[col]);
                for x in row.iter_mut() {
                    *x = *x * f % modulus;
                }
                pivots.push((col, row));
                continue 'rows;
            }
        }
    }

    let mut target = to_row(p);
    for (col, prow) in &pivots {
        if target[*col] != 0 {
            let f = target[*col];
            for j in 0..ncols {
                target[j] = (target[j] + (modulus - f) * prow[j]) % modulus;
            }
        }
    }
    target.iter().all(|&v| v == 0)
}

/// Hilbert function of B/M by direct counting: the number of monomials of
/// each degree 0..=max_deg not divisible by any generator of M.
pub fn count_standard_monomials(gens: &[Monomial], nvars: usize, max_deg: u32) -> Vec<i64> {
    (0..=max_deg)
        .map(|d| {
            monomials_of_degree(nvars, d)
                .into_iter()
                .filter(|m| !gens.iter().any(|g| g.divides(m)))
                .count() as i64
        })
        .collect()
}

/// Dense random polynomial, homogeneous of the given total degree, with each
/// coefficient nonzero with probability `keep_num/keep_den`.
pub fn random_homogeneous(
    ring: Ring,
    degree: u32,
    rng: &mut crate::rng::SplitMix64,
    keep_num: u64,
    keep_den: u64,
) -> Polynomial {
    let terms: Vec<(Monomial, Coeff)> = monomials_of_degree(ring.nvars(), degree)
        .into_iter()
        .filter_map(|m| {
            if rng.chance(keep_num, keep_den) {
                Some((m, ring.field.random_nonzero(rng)))
            } else {
                None
            }
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}
