//! Sparse multivariate polynomials with exact coefficients over the bigraded
//! ring B = k[x1..xn, T1..Tn]. Terms are kept sorted in descending grevlex
//! order on the full exponent vector, which doubles as the printing order and
//! as the canonical normal form for equality.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::{Monomial, Ring};
use crate::order::TermOrder;

/// Result of asking for the bidegree of a polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Bidegree {
    Zero,
    Homogeneous { x: u32, t: u32 },
    Mixed,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    ring: Ring,
    /// Nonzero terms, sorted descending under grevlex on all variables.
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Polynomial {
        Polynomial {
            ring,
            terms: Vec::new(),
        }
    }

    pub fn one(ring: Ring) -> Polynomial {
        let c = ring.field.one();
        Polynomial {
            ring,
            terms: vec![(Monomial::one(), c)],
        }
    }

    pub fn constant(ring: Ring, c: Coeff) -> Polynomial {
        Polynomial::from_terms(ring, vec![(Monomial::one(), c)])
    }

    pub fn variable(ring: Ring, idx: usize) -> Polynomial {
        debug_assert!(idx < ring.nvars());
        Polynomial {
            ring,
            terms: vec![(Monomial::var(idx), ring.field.one())],
        }
    }

    pub fn monomial(ring: Ring, m: Monomial, c: Coeff) -> Polynomial {
        Polynomial::from_terms(ring, vec![(m, c)])
    }

    /// Build from arbitrary (monomial, coefficient) pairs: like terms are
    /// merged, zeros dropped, and the result sorted into normal form.
    pub fn from_terms(
        ring: Ring,
        terms: impl IntoIterator<Item = (Monomial, Coeff)>,
    ) -> Polynomial {
        let field = ring.field;
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            match acc.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let s = field.add(e.get(), &c);
                    if field.is_zero(&s) {
                        e.remove();
                    } else {
                        e.insert(s);
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    if !field.is_zero(&c) {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Coeff)> = acc.into_iter().collect();
        let nv = ring.nvars();
        terms.sort_by(|a, b| b.0.cmp_grevlex(&a.0, nv));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.checked_add(other).expect("ring mismatch")
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.checked_sub(other).expect("ring mismatch")
    }

    /// Merge two normal-form term lists (two-pointer walk).
    fn merge(&self, other: &Polynomial, negate_rhs: bool) -> Polynomial {
        let field = self.ring.field;
        let nv = self.ring.nvars();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp_grevlex(mb, nv) {
                Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_rhs {
                        field.neg(cb)
                    } else {
                        cb.clone()
                    };
                    out.push((*mb, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_rhs {
                        field.sub(ca, cb)
                    } else {
                        field.add(ca, cb)
                    };
                    if !field.is_zero(&c) {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for (m, c) in &other.terms[j..] {
            let c = if negate_rhs { field.neg(c) } else { c.clone() };
            out.push((*m, c));
        }
        Polynomial {
            ring: self.ring,
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field;
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, c)| (*m, field.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        let field = self.ring.field;
        if field.is_zero(c) {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (*m, field.mul(k, c)))
                .collect(),
        }
    }

    /// Multiply by a single term. Order is preserved, so no re-sort.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let field = self.ring.field;
        if field.is_zero(c) {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), field.mul(k, c)))
                .collect(),
        }
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.ring.field;
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = field.add(e.get(), &c);
                        if field.is_zero(&s) {
                            e.remove();
                        } else {
                            e.insert(s);
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Coeff)> = acc.into_iter().collect();
        let nv = self.ring.nvars();
        terms.sort_by(|a, b| b.0.cmp_grevlex(&a.0, nv));
        Ok(Polynomial {
            ring: self.ring,
            terms,
        })
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.checked_mul(other).expect("ring mismatch")
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Leading term under the given order (the stored order when grevlex,
    /// otherwise a scan).
    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Monomial, &Coeff)> {
        if self.terms.is_empty() {
            return None;
        }
        if matches!(order, TermOrder::GrevlexTotal) {
            let (m, c) = &self.terms[0];
            return Some((m, c));
        }
        let nv = self.ring.nvars();
        self.terms
            .iter()
            .max_by(|a, b| order.compare(&a.0, &b.0, nv))
            .map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Option<Monomial> {
        self.leading_term(order).map(|(m, _)| *m)
    }

    /// Divide by the leading coefficient under `order`.
    pub fn monic(&self, order: &TermOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.ring.field.inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Bidegree over the x/T blocks, ignoring tag variables.
    pub fn bidegree(&self) -> Bidegree {
        if self.terms.is_empty() {
            return Bidegree::Zero;
        }
        let n = self.ring.n;
        let (m0, _) = &self.terms[0];
        let (x, t) = (m0.x_degree(n), m0.t_degree(n));
        for (m, _) in &self.terms[1..] {
            if m.x_degree(n) != x || m.t_degree(n) != t {
                return Bidegree::Mixed;
            }
        }
        Bidegree::Homogeneous { x, t }
    }

    pub fn is_bihomogeneous(&self) -> bool {
        !matches!(self.bidegree(), Bidegree::Mixed)
    }

    /// Homogeneous in the total grading.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.total_degree();
                self.terms.iter().all(|(m, _)| m.total_degree() == d)
            }
        }
    }

    /// Set every x variable to zero: terms with positive x-degree vanish.
    pub fn substitute_x_zero(&self) -> Polynomial {
        let n = self.ring.n;
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.x_degree(n) == 0)
                .cloned()
                .collect(),
        }
    }

    /// Substitute x_i -> T_i for every i (the image in the T-subring).
    pub fn substitute_x_to_t(&self) -> Polynomial {
        let n = self.ring.n;
        let mapped = self.terms.iter().map(|(m, c)| {
            let mut out = Monomial::one();
            for i in 0..n {
                out.set_exp(
                    self.ring.t(i),
                    m.exp(self.ring.x(i)) + m.exp(self.ring.t(i)),
                );
            }
            for i in 2 * n..self.ring.nvars() {
                out.set_exp(i, m.exp(i));
            }
            (out, c.clone())
        });
        Polynomial::from_terms(self.ring, mapped)
    }

    /// Exact quotient by a single variable; errors if some term lacks it.
    pub fn div_exact_by_var(&self, idx: usize) -> Result<Polynomial> {
        let v = Monomial::var(idx);
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            match m.checked_div(&v) {
                Some(q) => terms.push((q, c.clone())),
                None => return Err(Error::NonExactDivision),
            }
        }
        Ok(Polynomial {
            ring: self.ring,
            terms,
        })
    }

    /// Exact polynomial quotient: `self = q * g` with `g` nonzero, or an
    /// error if the division leaves a remainder. Valid in a domain: whenever
    /// the current remainder lies in (g), its lead is divisible by lead(g).
    pub fn div_exact(&self, g: &Polynomial) -> Result<Polynomial> {
        self.check_ring(g)?;
        assert!(!g.is_zero(), "division by zero polynomial");
        let order = TermOrder::GrevlexTotal;
        let field = self.ring.field;
        let (glm, glc) = g
            .leading_term(&order)
            .map(|(m, c)| (*m, c.clone()))
            .unwrap();
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, Coeff)> = Vec::new();
        while let Some((rlm, rlc)) = rem.leading_term(&order).map(|(m, c)| (*m, c.clone())) {
            let qm = match rlm.checked_div(&glm) {
                Some(qm) => qm,
                None => return Err(Error::NonExactDivision),
            };
            let qc = field.div(&rlc, &glc);
            rem = rem.sub(&g.mul_term(&qm, &qc));
            quot.push((qm, qc));
        }
        Ok(Polynomial::from_terms(self.ring, quot))
    }

    /// Reinterpret in a ring with extra tag variables (exponents unchanged).
    pub fn extend_to(&self, ring: Ring) -> Polynomial {
        debug_assert!(ring.n == self.ring.n && ring.tags >= self.ring.tags);
        debug_assert!(ring.field == self.ring.field);
        Polynomial {
            ring,
            terms: self.terms.clone(),
        }
    }

    /// Drop tag variables; caller guarantees no term uses them.
    pub fn restrict_to(&self, ring: Ring) -> Polynomial {
        debug_assert!(ring.n == self.ring.n && ring.tags <= self.ring.tags);
        debug_assert!(self
            .terms
            .iter()
            .all(|(m, _)| (ring.nvars()..self.ring.nvars()).all(|i| m.exp(i) == 0)));
        Polynomial {
            ring,
            terms: self.terms.clone(),
        }
    }

    /// Render in the input grammar; terms in descending grevlex order.
    pub fn format(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let field = self.ring.field;
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = field.is_negative_repr(c);
            let abs = if neg { field.neg(c) } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_str = field.format(&abs);
            if m.is_one() {
                out.push_str(&coeff_str);
            } else if field.is_one(&abs) {
                out.push_str(&m.format(&self.ring));
            } else {
                out.push_str(&coeff_str);
                out.push('*');
                out.push_str(&m.format(&self.ring));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format())
    }
}
