//! Monomials over the bigraded ring B = k[x1..xn, T1..Tn], with dense
//! exponent vectors. Variables are laid out x-block first, then T-block;
//! intersection computations may append auxiliary tag variables at the end.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;
use crate::field::Field;

/// Hard cap on total variables (2n + tags). Keeps monomials `Copy`.
pub const MAX_VARS: usize = 16;

/// Exponent vector of fixed capacity; entries beyond `Ring::nvars()` are 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
}

/// Descriptor of the ambient polynomial ring: n pairs of variables
/// x1..xn, T1..Tn plus `tags` auxiliary elimination variables, over `field`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Ring {
    pub n: usize,
    pub tags: usize,
    pub field: Field,
}

impl Ring {
    pub fn new(n: usize, field: Field) -> Result<Ring, Error> {
        if n == 0 || 2 * n > MAX_VARS {
            return Err(Error::InvalidRing(n));
        }
        Ok(Ring { n, tags: 0, field })
    }

    pub fn nvars(&self) -> usize {
        2 * self.n + self.tags
    }

    /// Same ring with one extra tag variable appended (index `2n + tags`).
    pub fn with_extra_tag(&self) -> Result<Ring, Error> {
        if self.nvars() + 1 > MAX_VARS {
            return Err(Error::InvalidRing(self.n));
        }
        Ok(Ring {
            n: self.n,
            tags: self.tags + 1,
            field: self.field,
        })
    }

    pub fn base(&self) -> Ring {
        Ring {
            n: self.n,
            tags: 0,
            field: self.field,
        }
    }

    /// Index of the i-th x variable, 0-based: x_{i+1}.
    pub fn x(&self, i: usize) -> usize {
        debug_assert!(i < self.n);
        i
    }

    /// Index of the i-th T variable, 0-based: T_{i+1}.
    pub fn t(&self, i: usize) -> usize {
        debug_assert!(i < self.n);
        self.n + i
    }

    pub fn var_name(&self, idx: usize) -> String {
        if idx < self.n {
            format!("x{}", idx + 1)
        } else if idx < 2 * self.n {
            format!("T{}", idx - self.n + 1)
        } else {
            format!("u{}", idx - 2 * self.n + 1)
        }
    }
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial {
            exps: [0; MAX_VARS],
        }
    }

    pub fn var(idx: usize) -> Monomial {
        let mut m = Monomial::one();
        m.exps[idx] = 1;
        m
    }

    pub fn var_pow(idx: usize, e: u16) -> Monomial {
        let mut m = Monomial::one();
        m.exps[idx] = e;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Monomial {
        assert!(exps.len() <= MAX_VARS);
        let mut m = Monomial::one();
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn exp(&self, idx: usize) -> u16 {
        self.exps[idx]
    }

    pub fn set_exp(&mut self, idx: usize, e: u16) {
        self.exps[idx] = e;
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// Degree in the x-block of a ring with `n` pairs.
    pub fn x_degree(&self, n: usize) -> u32 {
        self.exps[..n].iter().map(|&e| e as u32).sum()
    }

    /// Degree in the T-block.
    pub fn t_degree(&self, n: usize) -> u32 {
        self.exps[n..2 * n].iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] += other.exps[i];
        }
        m
    }

    /// Componentwise quotient; `None` unless `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] = m.exps[i].checked_sub(other.exps[i])?;
        }
        Some(m)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] = m.exps[i].max(other.exps[i]);
        }
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] = m.exps[i].min(other.exps[i]);
        }
        m
    }

    pub fn coprime_with(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Graded reverse lexicographic comparison over the first `nvars`
    /// variables: higher total degree wins; on ties the monomial with the
    /// smaller exponent at the last differing position is the larger one.
    pub fn cmp_grevlex(&self, other: &Monomial, nvars: usize) -> Ordering {
        let da: u32 = self.exps[..nvars].iter().map(|&e| e as u32).sum();
        let db: u32 = other.exps[..nvars].iter().map(|&e| e as u32).sum();
        match da.cmp(&db) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..nvars).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    /// Grevlex restricted to an explicit index subset (used by block orders).
    pub fn cmp_grevlex_on(&self, other: &Monomial, block: &[usize]) -> Ordering {
        let da: u32 = block.iter().map(|&i| self.exps[i] as u32).sum();
        let db: u32 = block.iter().map(|&i| other.exps[i] as u32).sum();
        match da.cmp(&db) {
            Ordering::Equal => {}
            o => return o,
        }
        for &i in block.iter().rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    pub fn format(&self, ring: &Ring) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for i in 0..ring.nvars() {
            match self.exps[i] {
                0 => {}
                1 => parts.push(ring.var_name(i)),
                e => parts.push(format!("{}^{}", ring.var_name(i), e)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| format!("v{i}^{e}"))
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_split_by_block() {
        let m = Monomial::from_exps(&[2, 1, 0, 0, 0, 3]); // x1^2 x2 T3^3, n=3
        assert_eq!(m.x_degree(3), 3);
        assert_eq!(m.t_degree(3), 3);
        assert_eq!(m.total_degree(), 6);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exps(&[1, 2]);
        let b = Monomial::from_exps(&[1, 1]);
        assert!(b.divides(&a));
        assert!(!a.divides(&b));
        assert_eq!(a.checked_div(&b), Some(Monomial::from_exps(&[0, 1])));
        assert_eq!(a.lcm(&b), a);
        assert!(!a.coprime_with(&b));
        assert!(Monomial::var(0).coprime_with(&Monomial::var(1)));
    }

    #[test]
    fn grevlex_convention() {
        // n=2 x-block: x1^2 > x1*x2 under grevlex.
        let a = Monomial::from_exps(&[2, 0]);
        let b = Monomial::from_exps(&[1, 1]);
        assert_eq!(a.cmp_grevlex(&b, 4), Ordering::Greater);
    }
}
