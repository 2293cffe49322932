//! Arithmetic in prime fields `F_d`.
//!
//! Elements are stored as least nonnegative residues, so two coefficients are
//! equal exactly when their stored values are equal.

use std::fmt;

use crate::error::AlgebraError;

/// The characteristic `d` of a prime field. Primality is checked on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeChar(u32);

impl PrimeChar {
    pub fn new(d: u64) -> Result<Self, AlgebraError> {
        if d > u32::MAX as u64 || !is_prime(d) {
            return Err(AlgebraError::NotPrime(d));
        }
        Ok(PrimeChar(d as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Reduces a signed integer to its canonical residue.
    #[inline]
    pub fn reduce(self, n: i64) -> u32 {
        n.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub(crate) fn add_raw(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub(crate) fn mul_raw(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub(crate) fn neg_raw(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    /// Inverse by Fermat's little theorem; `a` must be nonzero.
    pub(crate) fn inv_raw(self, a: u32) -> u32 {
        debug_assert!(a != 0);
        let mut base = a as u64;
        let mut exp = self.0 as u64 - 2;
        let modulus = self.0 as u64;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % modulus;
            }
            base = base * base % modulus;
            exp >>= 1;
        }
        acc as u32
    }

    pub fn zero(self) -> Coeff {
        Coeff { value: 0, d: self }
    }

    pub fn one(self) -> Coeff {
        Coeff {
            value: 1 % self.0,
            d: self,
        }
    }

    /// All elements of the field in increasing order.
    pub fn elements(self) -> impl Iterator<Item = Coeff> {
        (0..self.0).map(move |value| Coeff { value, d: self })
    }
}

impl fmt::Display for PrimeChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// A canonically reduced element of `F_d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Coeff {
    value: u32,
    d: PrimeChar,
}

/// Maps a signed integer to its residue in `F_d`.
pub fn fp_normalize(n: i64, d: PrimeChar) -> Coeff {
    Coeff {
        value: d.reduce(n),
        d,
    }
}

impl Coeff {
    pub fn new(n: i64, d: PrimeChar) -> Self {
        fp_normalize(n, d)
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn characteristic(self) -> PrimeChar {
        self.d
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: Coeff) -> Result<PrimeChar, AlgebraError> {
        if self.d != other.d {
            return Err(AlgebraError::CharacteristicMismatch {
                left: self.d.get(),
                right: other.d.get(),
            });
        }
        Ok(self.d)
    }

    pub fn fp_add(self, other: Coeff) -> Result<Coeff, AlgebraError> {
        let d = self.same_field(other)?;
        Ok(Coeff {
            value: d.add_raw(self.value, other.value),
            d,
        })
    }

    pub fn fp_mul(self, other: Coeff) -> Result<Coeff, AlgebraError> {
        let d = self.same_field(other)?;
        Ok(Coeff {
            value: d.mul_raw(self.value, other.value),
            d,
        })
    }

    pub fn fp_neg(self) -> Coeff {
        Coeff {
            value: self.d.neg_raw(self.value),
            d: self.d,
        }
    }

    pub fn fp_inv(self) -> Result<Coeff, AlgebraError> {
        if self.value == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Coeff {
            value: self.d.inv_raw(self.value),
            d: self.d,
        })
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
