//! Ideal-level operations: sum, product, power, intersection via a tag
//! variable and an elimination order, element and ideal colons, saturation
//! by iterated colon, and graded minimalization of generator lists.

use crate::error::{Error, Result};
use crate::exec;
use crate::groebner::Ideal;
use crate::order::TermOrder;
use crate::poly::Polynomial;

impl Ideal {
    /// Generator lists concatenated; no basis computation.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch);
        }
        Ok(self.derived(
            self.generators()
                .iter()
                .chain(other.generators())
                .cloned()
                .collect::<Vec<_>>(),
        ))
    }

    /// This ideal plus extra generators.
    pub fn plus(&self, extra: &[Polynomial]) -> Ideal {
        self.derived(
            self.generators()
                .iter()
                .chain(extra.iter())
                .cloned()
                .collect::<Vec<_>>(),
        )
    }

    /// Pairwise products of the generators.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::new();
        for a in self.generators() {
            for b in other.generators() {
                gens.push(a.mul(b));
            }
        }
        Ok(self.derived(gens))
    }

    /// All e-fold products of generators (with repetition).
    pub fn power(&self, e: u32) -> Ideal {
        assert!(e >= 1, "ideal power wants a positive exponent");
        let mut acc: Vec<Polynomial> = self.generators().to_vec();
        for _ in 1..e {
            let mut next = Vec::new();
            for a in &acc {
                for b in self.generators() {
                    let prod = a.mul(b);
                    if !next.contains(&prod) {
                        next.push(prod);
                    }
                }
            }
            acc = next;
        }
        self.derived(acc)
    }

    /// Intersection of two ideals, computed by eliminating one tag variable
    /// u from u*I + (1-u)*J under a block order with u greatest. The result
    /// is presented by the reduced grevlex basis of the intersection.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch);
        }
        let base = *self.ring();
        let ext = base.with_extra_tag()?;
        let u_idx = ext.nvars() - 1;
        let u = Polynomial::variable(ext, u_idx);
        let one_minus_u = Polynomial::one(ext).sub(&u);

        let mut gens = Vec::new();
        for g in self.generators() {
            gens.push(u.mul(&g.extend_to(ext)));
        }
        for h in other.generators() {
            gens.push(one_minus_u.mul(&h.extend_to(ext)));
        }
        let helper = Ideal::new(ext, gens).with_budget(self.budget());
        let gb = helper.gb(&TermOrder::eliminate(u_idx))?;

        let kept: Vec<Polynomial> = gb
            .elements()
            .iter()
            .filter(|p| p.terms().iter().all(|(m, _)| m.exp(u_idx) == 0))
            .map(|p| p.restrict_to(base))
            .collect();
        self.derived(kept).canonical()
    }

    /// Element colon `I : (g) = { h : h*g in I }`, computed as the
    /// intersection with (g), dividing every generator exactly by g.
    /// A non-exact division cannot occur for correct intersection output.
    pub fn colon_element(&self, g: &Polynomial) -> Result<Ideal> {
        assert!(!g.is_zero(), "colon by the zero element");
        let meet = self.intersect(&self.derived(vec![g.clone()]))?;
        let mut gens = Vec::with_capacity(meet.generators().len());
        for h in meet.generators() {
            gens.push(h.div_exact(g)?);
        }
        self.derived(gens).canonical()
    }

    /// Ideal colon I : J, the intersection of the element colons over the
    /// nonzero generators of J.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch);
        }
        let gens: Vec<Polynomial> = other
            .generators()
            .iter()
            .filter(|g| !g.is_zero())
            .cloned()
            .collect();
        if gens.is_empty() {
            return Err(Error::ColonByZeroIdeal);
        }
        let colons = exec::par_map(gens, |g| self.colon_element(&g));
        let mut it = colons.into_iter();
        let mut acc = it.next().unwrap()?;
        for c in it {
            acc = acc.intersect(&c?)?;
        }
        Ok(acc)
    }

    /// Saturation I : J^infinity by iterated colon; returns the fixpoint and
    /// the number of colon steps needed to reach it.
    pub fn saturate(&self, other: &Ideal, cap: usize) -> Result<(Ideal, usize)> {
        let mut cur = self.canonical()?;
        for k in 0..=cap {
            let next = cur.colon(other)?;
            if next.equals(&cur)? {
                return Ok((cur, k));
            }
            cur = next;
        }
        Err(Error::SaturationCapExceeded { cap })
    }
}

/// A subset of bihomogeneous `gens` generating the same ideal, with no
/// member contained in the ideal of the others. By graded Nakayama its
/// cardinality is the minimal number of generators of the ideal.
pub fn minimalize_generators(gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let nonzero: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    if nonzero.iter().any(|g| !g.is_bihomogeneous()) {
        return Err(Error::NotBihomogeneous);
    }
    let Some(first) = nonzero.first() else {
        return Ok(Vec::new());
    };
    let ring = *first.ring();

    // Ascending degree so redundancy tests only ever look at already-kept
    // generators; ties broken structurally for determinism.
    let mut sorted = nonzero;
    sorted.sort_by(|a, b| {
        let da = a.total_degree().unwrap();
        let db = b.total_degree().unwrap();
        da.cmp(&db).then_with(|| {
            a.terms()
                .iter()
                .map(|(m, _)| m)
                .cmp(b.terms().iter().map(|(m, _)| m))
        })
    });

    let mut kept: Vec<Polynomial> = Vec::new();
    for g in sorted {
        if kept.is_empty() {
            kept.push(g.clone());
            continue;
        }
        let span = Ideal::new(ring, kept.clone());
        if !span.contains(g)? {
            kept.push(g.clone());
        }
    }
    Ok(kept)
}
