//! Normal forms, Buchberger's algorithm with the coprime and chain criteria
//! (Gebauer-Moeller pair update), reduced Groebner bases, and the `Ideal`
//! value with its per-order basis cache.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::field::{Coeff, Field};
use crate::monomial::{Monomial, Ring};
use crate::order::TermOrder;
use crate::poly::Polynomial;

/// Reduction-step budget guarding runaway basis computations. Exceeding it
/// is an explicit error, never a silently truncated basis.
pub const DEFAULT_STEP_BUDGET: u64 = 10_000_000;

type Term = (Monomial, Coeff);

/// Terms of one polynomial sorted descending under the active order.
fn sorted_terms(p: &Polynomial, order: &TermOrder) -> Vec<Term> {
    let nv = p.ring().nvars();
    let mut v: Vec<Term> = p.terms().to_vec();
    if !matches!(order, TermOrder::GrevlexTotal) {
        v.sort_by(|a, b| order.compare(&b.0, &a.0, nv));
    }
    v
}

/// `a - (c * m) * b` for term lists sorted descending under `order`.
fn merge_sub_scaled(
    a: &[Term],
    b: &[Term],
    m: &Monomial,
    c: &Coeff,
    field: &Field,
    order: &TermOrder,
    nvars: usize,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        let bm = b[j].0.mul(m);
        match order.compare(&a[i].0, &bm, nvars) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((bm, field.neg(&field.mul(&b[j].1, c))));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let s = field.sub(&a[i].1, &field.mul(&b[j].1, c));
                if !field.is_zero(&s) {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        out.push((b[j].0.mul(m), field.neg(&field.mul(&b[j].1, c))));
        j += 1;
    }
    out
}

struct Reducer<'a> {
    order: &'a TermOrder,
    field: Field,
    nvars: usize,
    steps: u64,
    budget: u64,
}

impl<'a> Reducer<'a> {
    /// Full normal form of `work` against divisors exposed as
    /// `(lead monomial, lead coeff, sorted terms)`; the first divisor in
    /// list order wins, which makes the result deterministic.
    fn reduce<'d, D, F>(
        &mut self,
        mut work: Vec<Term>,
        divisors: &'d [D],
        view: F,
    ) -> Result<Vec<Term>>
    where
        F: Fn(&'d D) -> (&'d Monomial, &'d Coeff, &'d [Term]),
    {
        let mut out: Vec<Term> = Vec::new();
        let mut head = 0usize;
        'outer: while head < work.len() {
            let (m, c) = work[head].clone();
            for d in divisors {
                let (lm, lc, terms) = view(d);
                if lm.divides(&m) {
                    self.steps += 1;
                    if self.steps > self.budget {
                        return Err(Error::BudgetExceeded {
                            steps: self.steps,
                            basis_len: divisors.len(),
                            pending: 0,
                        });
                    }
                    let qm = m.checked_div(lm).unwrap();
                    let qc = self.field.div(&c, lc);
                    work = merge_sub_scaled(
                        &work[head..],
                        terms,
                        &qm,
                        &qc,
                        &self.field,
                        self.order,
                        self.nvars,
                    );
                    head = 0;
                    continue 'outer;
                }
            }
            out.push((m, c));
            head += 1;
        }
        Ok(out)
    }
}

/// Remainder of `p` on division by `basis` under `order`: no monomial of the
/// result is divisible by any basis leading monomial, and `p - r` lies in
/// the ideal generated by `basis`. Deterministic in the listed basis order.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial], order: &TermOrder) -> Polynomial {
    let ring = *p.ring();
    let divisors: Vec<(Monomial, Coeff, Vec<Term>)> = basis
        .iter()
        .filter(|b| !b.is_zero())
        .map(|b| {
            let (lm, lc) = b.leading_term(order).unwrap();
            (*lm, lc.clone(), sorted_terms(b, order))
        })
        .collect();
    let mut red = Reducer {
        order,
        field: ring.field,
        nvars: ring.nvars(),
        steps: 0,
        budget: u64::MAX,
    };
    let out = red
        .reduce(sorted_terms(p, order), &divisors, |d| {
            (&d.0, &d.1, d.2.as_slice())
        })
        .expect("unbounded reducer cannot exhaust its budget");
    Polynomial::from_terms(ring, out)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    deg: u32,
}

/// A reduced Groebner basis: monic, interreduced, elements sorted ascending
/// by leading monomial. For a fixed ideal and order this form is unique.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    ring: Ring,
    order: TermOrder,
    elements: Vec<Polynomial>,
    leads: Vec<Monomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        normal_form(p, &self.elements, &self.order)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }
}

struct BasisElem {
    poly: Polynomial,
    lm: Monomial,
    lc: Coeff,
    terms: Vec<Term>,
}

fn basis_view(b: &BasisElem) -> (&Monomial, &Coeff, &[Term]) {
    (&b.lm, &b.lc, b.terms.as_slice())
}

/// Buchberger's algorithm: reduced Groebner basis of the ideal generated by
/// `gens` under `order`, within `budget` reduction steps.
pub fn buchberger_with_budget(
    gens: &[Polynomial],
    order: &TermOrder,
    ring: Ring,
    budget: u64,
) -> Result<GroebnerBasis> {
    let field = ring.field;
    let nvars = ring.nvars();
    let mut red = Reducer {
        order,
        field,
        nvars,
        steps: 0,
        budget,
    };
    let mut basis: Vec<BasisElem> = Vec::new();
    let mut pending: Vec<Pair> = Vec::new();

    let insert = |h: Polynomial, basis: &mut Vec<BasisElem>, pending: &mut Vec<Pair>| {
        let h = h.monic(order);
        let lm = h.leading_monomial(order).unwrap();
        let t = basis.len();

        // Gebauer-Moeller update of the pending pair set.
        let mut candidates: Vec<Pair> = (0..t)
            .map(|i| {
                let lcm = basis[i].lm.lcm(&lm);
                Pair {
                    i,
                    j: t,
                    deg: lcm.total_degree(),
                    lcm,
                }
            })
            .collect();
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(cand) = candidates.pop() {
            let coprime = basis[cand.i].lm.coprime_with(&lm);
            let shadowed = candidates
                .iter()
                .chain(kept.iter())
                .any(|o| o.lcm.divides(&cand.lcm));
            if coprime || !shadowed {
                kept.push(cand);
            }
        }
        kept.retain(|p| !basis[p.i].lm.coprime_with(&lm));

        pending.retain(|p| {
            !lm.divides(&p.lcm)
                || basis[p.i].lm.lcm(&lm) == p.lcm
                || basis[p.j].lm.lcm(&lm) == p.lcm
        });
        pending.extend(kept);

        basis.push(BasisElem {
            terms: sorted_terms(&h, order),
            lc: h.ring().field.one(),
            poly: h,
            lm,
        });
    };

    // Seed with the input generators, reducing each against what exists.
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let r = red.reduce(sorted_terms(g, order), &basis, basis_view)?;
        if r.is_empty() {
            continue;
        }
        insert(Polynomial::from_terms(ring, r), &mut basis, &mut pending);
    }

    while !pending.is_empty() {
        // Normal selection: smallest lcm total degree first, deterministic
        // tie-break on the lcm exponent vector and the indices.
        let best = pending
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.deg
                    .cmp(&b.deg)
                    .then_with(|| a.lcm.cmp(&b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(idx, _)| idx)
            .unwrap();
        let pair = pending.swap_remove(best);

        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        let mi = pair.lcm.checked_div(&fi.lm).unwrap();
        let mj = pair.lcm.checked_div(&fj.lm).unwrap();
        // Both elements are monic, so the S-polynomial needs no scaling.
        let spoly = merge_sub_scaled(
            &scale_terms(&fi.terms, &mi),
            &fj.terms,
            &mj,
            &field.one(),
            &field,
            order,
            nvars,
        );

        let r = red.reduce(spoly, &basis, basis_view).map_err(|e| match e {
            Error::BudgetExceeded {
                steps, basis_len, ..
            } => Error::BudgetExceeded {
                steps,
                basis_len,
                pending: pending.len() + 1,
            },
            other => other,
        })?;
        if !r.is_empty() {
            insert(Polynomial::from_terms(ring, r), &mut basis, &mut pending);
        }
    }

    // Interreduce to the unique reduced basis.
    let mut keep = vec![true; basis.len()];
    for k in 0..basis.len() {
        for l in 0..basis.len() {
            if l == k || !keep[l] {
                continue;
            }
            if basis[l].lm.divides(&basis[k].lm) && (basis[l].lm != basis[k].lm || l < k) {
                keep[k] = false;
                break;
            }
        }
    }
    let minimal: Vec<&BasisElem> = basis
        .iter()
        .zip(keep.iter())
        .filter(|(_, k)| **k)
        .map(|(b, _)| b)
        .collect();

    let mut elements: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for (idx, b) in minimal.iter().enumerate() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != idx)
            .map(|(_, o)| o.poly.clone())
            .collect();
        elements.push(normal_form(&b.poly, &others, order).monic(order));
    }
    elements.sort_by(|a, b| {
        let la = a.leading_monomial(order).unwrap();
        let lb = b.leading_monomial(order).unwrap();
        order.compare(&la, &lb, nvars)
    });
    let leads = elements
        .iter()
        .map(|e| e.leading_monomial(order).unwrap())
        .collect();
    Ok(GroebnerBasis {
        ring,
        order: order.clone(),
        elements,
        leads,
    })
}

fn scale_terms(terms: &[Term], m: &Monomial) -> Vec<Term> {
    terms.iter().map(|(mm, c)| (mm.mul(m), c.clone())).collect()
}

/// `buchberger_with_budget` at the default budget.
pub fn buchberger(gens: &[Polynomial], order: &TermOrder, ring: Ring) -> Result<GroebnerBasis> {
    buchberger_with_budget(gens, order, ring, DEFAULT_STEP_BUDGET)
}

/// An ideal given by generators, with lazily computed reduced Groebner bases
/// cached per term order. Readers never observe a partially built basis; a
/// basis is published only once complete.
#[derive(Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    budget: u64,
    bihomogeneous: bool,
    homogeneous: bool,
    cache: Mutex<HashMap<TermOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Ideal {
        let cache = self.cache.lock().unwrap().clone();
        Ideal {
            ring: self.ring,
            gens: self.gens.clone(),
            budget: self.budget,
            bihomogeneous: self.bihomogeneous,
            homogeneous: self.homogeneous,
            cache: Mutex::new(cache),
        }
    }
}

impl Ideal {
    /// New ideal from generators; zero generators are dropped.
    pub fn new(ring: Ring, gens: impl IntoIterator<Item = Polynomial>) -> Ideal {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            assert_eq!(*g.ring(), ring, "generator from a different ring");
        }
        let bihomogeneous = gens.iter().all(|g| g.is_bihomogeneous());
        let homogeneous = gens.iter().all(|g| g.is_homogeneous());
        Ideal {
            ring,
            gens,
            budget: DEFAULT_STEP_BUDGET,
            bihomogeneous,
            homogeneous,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn zero(ring: Ring) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn with_budget(mut self, budget: u64) -> Ideal {
        self.budget = budget;
        self
    }

    /// New ideal over the same ring inheriting this ideal's budget.
    pub fn derived(&self, gens: impl IntoIterator<Item = Polynomial>) -> Ideal {
        Ideal::new(self.ring, gens).with_budget(self.budget)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn is_bihomogeneous(&self) -> bool {
        self.bihomogeneous
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// Reduced Groebner basis under `order`, computed once and cached.
    pub fn gb(&self, order: &TermOrder) -> Result<Arc<GroebnerBasis>> {
        let mut cache = self.cache.lock().unwrap();
        if let Some(b) = cache.get(order) {
            return Ok(b.clone());
        }
        let basis = Arc::new(buchberger_with_budget(
            &self.gens,
            order,
            self.ring,
            self.budget,
        )?);
        cache.insert(order.clone(), basis.clone());
        Ok(basis)
    }

    /// Seed the cache with a basis known to generate this ideal.
    pub(crate) fn prime_cache(&self, basis: Arc<GroebnerBasis>) {
        self.cache
            .lock()
            .unwrap()
            .insert(basis.order.clone(), basis);
    }

    /// Ideal membership via normal form against the reduced grevlex basis.
    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        if p.is_zero() {
            return Ok(true);
        }
        Ok(self.gb(&TermOrder::GrevlexTotal)?.contains(p))
    }

    /// Canonical-form equality: the reduced bases under a common order
    /// coincide element-wise.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let a = self.gb(&TermOrder::GrevlexTotal)?;
        let b = other.gb(&TermOrder::GrevlexTotal)?;
        Ok(a.elements == b.elements)
    }

    /// Same ideal presented by its reduced grevlex basis.
    pub fn canonical(&self) -> Result<Ideal> {
        let basis = self.gb(&TermOrder::GrevlexTotal)?;
        let out = self.derived(basis.elements().to_vec());
        out.prime_cache(basis);
        Ok(out)
    }
}
