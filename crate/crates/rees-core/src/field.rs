//! Exact coefficient arithmetic: a prime field F_p (odd prime, default
//! p = 32003) and arbitrary-precision rationals behind one enum.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Default coefficient field modulus. Large enough that random linear forms
/// behave generically, small enough that products stay in a `u64`.
pub const DEFAULT_PRIME: u64 = 32003;

/// Field descriptor. All coefficient operations go through this context so
/// that `Coeff` values stay small.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    /// F_p for an odd prime p.
    Prime(u64),
    /// Arbitrary-precision rationals.
    Rational,
}

/// A coefficient value. Prime-field values are canonical representatives in
/// `[0, p)`; rationals are kept reduced with positive denominator (delegated
/// to `BigRational`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Coeff {
    Fp(u64),
    Rat(BigRational),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    /// Prime field with validated odd prime modulus.
    pub fn prime(p: u64) -> Result<Field, Error> {
        if p == 2 || !is_prime(p) || p >= 1 << 31 {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn default_prime() -> Field {
        Field::Prime(DEFAULT_PRIME)
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Field::Prime(_) => Coeff::Fp(0),
            Field::Rational => Coeff::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Field::Prime(_) => Coeff::Fp(1),
            Field::Rational => Coeff::Rat(BigRational::one()),
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Fp(x) => *x == 0,
            Coeff::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Fp(x) => *x == 1,
            Coeff::Rat(r) => r.is_one(),
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp((x + y) % p),
            (Field::Rational, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            _ => panic!("coefficient does not belong to field {self:?}"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp((x + p - y) % p),
            (Field::Rational, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x - y),
            _ => panic!("coefficient does not belong to field {self:?}"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Prime(p), Coeff::Fp(x)) => Coeff::Fp(if *x == 0 { 0 } else { p - x }),
            (Field::Rational, Coeff::Rat(x)) => Coeff::Rat(-x),
            _ => panic!("coefficient does not belong to field {self:?}"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp(x * y % p),
            (Field::Rational, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            _ => panic!("coefficient does not belong to field {self:?}"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Coeff) -> Option<Coeff> {
        match (self, a) {
            (Field::Prime(p), Coeff::Fp(x)) => {
                if *x == 0 {
                    None
                } else {
                    Some(Coeff::Fp(mod_inv(*x, *p)))
                }
            }
            (Field::Rational, Coeff::Rat(x)) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Coeff::Rat(x.recip()))
                }
            }
            _ => panic!("coefficient does not belong to field {self:?}"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        let inv = self.inv(b).expect("division by zero coefficient");
        self.mul(a, &inv)
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            Field::Prime(p) => {
                let r = v.rem_euclid(*p as i64) as u64;
                Coeff::Fp(r)
            }
            Field::Rational => Coeff::Rat(BigRational::from_integer(BigInt::from(v))),
        }
    }

    /// Cast an integer fraction into the field. In prime-field mode the
    /// denominator must be invertible mod p.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Coeff, Error> {
        if den.is_zero() {
            return Err(Error::NonInvertibleDenominator {
                den: den.to_string(),
                modulus: 0,
            });
        }
        match self {
            Field::Prime(p) => {
                let pm = BigInt::from(*p);
                let n = mod_floor_u64(num, &pm);
                let d = mod_floor_u64(den, &pm);
                if d == 0 {
                    return Err(Error::NonInvertibleDenominator {
                        den: den.to_string(),
                        modulus: *p,
                    });
                }
                Ok(Coeff::Fp(n * mod_inv(d, *p) % p))
            }
            Field::Rational => Ok(Coeff::Rat(BigRational::new(num.clone(), den.clone()))),
        }
    }

    /// Draw a uniform field element from `rng`; only meaningful for F_p.
    pub fn random(&self, rng: &mut crate::rng::SplitMix64) -> Coeff {
        match self {
            Field::Prime(p) => Coeff::Fp(rng.below(*p)),
            Field::Rational => Coeff::Rat(BigRational::from_integer(BigInt::from(
                rng.below(2001) as i64 - 1000,
            ))),
        }
    }

    /// Uniform nonzero element.
    pub fn random_nonzero(&self, rng: &mut crate::rng::SplitMix64) -> Coeff {
        match self {
            Field::Prime(p) => Coeff::Fp(1 + rng.below(p - 1)),
            Field::Rational => loop {
                let c = self.random(rng);
                if !self.is_zero(&c) {
                    return c;
                }
            },
        }
    }

    /// Render a coefficient in the polynomial text grammar. Prime-field
    /// values use the balanced representative in (-p/2, p/2] so small
    /// negative integers print readably; both forms parse back identically.
    pub fn format(&self, a: &Coeff) -> String {
        match (self, a) {
            (Field::Prime(p), Coeff::Fp(x)) => {
                if *x > p / 2 {
                    format!("-{}", p - x)
                } else {
                    format!("{x}")
                }
            }
            (Field::Rational, Coeff::Rat(r)) => {
                if r.denom().is_one() {
                    format!("{}", r.numer())
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            _ => panic!("coefficient does not belong to field {self:?}"),
        }
    }

    /// True when the coefficient prints with a leading minus sign.
    pub fn is_negative_repr(&self, a: &Coeff) -> bool {
        match (self, a) {
            (Field::Prime(p), Coeff::Fp(x)) => *x > p / 2,
            (Field::Rational, Coeff::Rat(r)) => r.is_negative(),
            _ => panic!("coefficient does not belong to field {self:?}"),
        }
    }
}

fn mod_floor_u64(a: &BigInt, m: &BigInt) -> u64 {
    use num_traits::ToPrimitive;
    let mut r = a % m;
    if r.is_negative() {
        r += m;
    }
    r.to_u64().expect("residue fits in u64")
}

/// Inverse of `a` mod odd prime `p` by extended Euclid.
fn mod_inv(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, (a % p) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "input not invertible");
    t.rem_euclid(p as i64) as u64
}
