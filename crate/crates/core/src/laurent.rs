//! Sparse Laurent polynomials in commuting variables `x, y, z` over `F_d`.
//!
//! A [`Laurent`] keeps its terms sorted lexicographically by exponent vector
//! with every stored coefficient nonzero, so structural equality is
//! polynomial equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::AlgebraError;
use crate::field::{Coeff, PrimeChar};

/// Exponents of a monomial `x^i y^j z^k`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpVec {
    pub i: i32,
    pub j: i32,
    pub k: i32,
}

impl ExpVec {
    pub const ZERO: ExpVec = ExpVec { i: 0, j: 0, k: 0 };

    pub const fn new(i: i32, j: i32, k: i32) -> Self {
        ExpVec { i, j, k }
    }

    pub fn checked_add(self, other: ExpVec) -> Option<ExpVec> {
        Some(ExpVec {
            i: self.i.checked_add(other.i)?,
            j: self.j.checked_add(other.j)?,
            k: self.k.checked_add(other.k)?,
        })
    }

    pub fn checked_scale(self, n: i32) -> Option<ExpVec> {
        Some(ExpVec {
            i: self.i.checked_mul(n)?,
            j: self.j.checked_mul(n)?,
            k: self.k.checked_mul(n)?,
        })
    }

    /// Negates the exponents of the variables in `vars`.
    pub fn checked_invert(self, vars: VarSet) -> Option<ExpVec> {
        let flip = |e: i32, on: bool| if on { e.checked_neg() } else { Some(e) };
        Some(ExpVec {
            i: flip(self.i, vars.contains_x())?,
            j: flip(self.j, vars.contains_y())?,
            k: flip(self.k, vars.contains_z())?,
        })
    }

    pub fn as_array(self) -> [i32; 3] {
        [self.i, self.j, self.k]
    }
}

impl From<(i32, i32, i32)> for ExpVec {
    fn from((i, j, k): (i32, i32, i32)) -> Self {
        ExpVec { i, j, k }
    }
}

/// A subset of `{x, y, z}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct VarSet(u8);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);
    pub const X: VarSet = VarSet(1);
    pub const Y: VarSet = VarSet(2);
    pub const Z: VarSet = VarSet(4);
    pub const XY: VarSet = VarSet(3);
    pub const XZ: VarSet = VarSet(5);
    pub const YZ: VarSet = VarSet(6);
    pub const XYZ: VarSet = VarSet(7);

    pub fn from_bits(bits: u8) -> Option<VarSet> {
        (bits < 8).then_some(VarSet(bits))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    /// All eight subsets.
    pub fn all() -> impl Iterator<Item = VarSet> {
        (0..8).map(VarSet)
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn contains_x(self) -> bool {
        self.0 & 1 != 0
    }

    pub fn contains_y(self) -> bool {
        self.0 & 2 != 0
    }

    pub fn contains_z(self) -> bool {
        self.0 & 4 != 0
    }
}

impl std::str::FromStr for VarSet {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut bits = 0u8;
        for ch in s.chars() {
            bits |= match ch {
                'x' => 1,
                'y' => 2,
                'z' => 4,
                _ => return Err(AlgebraError::Malformed(format!("unknown variable {ch:?}"))),
            };
        }
        Ok(VarSet(bits))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Laurent {
    d: PrimeChar,
    terms: Vec<(ExpVec, u32)>,
}

impl Laurent {
    pub fn zero(d: PrimeChar) -> Self {
        Laurent {
            d,
            terms: Vec::new(),
        }
    }

    pub fn one(d: PrimeChar) -> Self {
        Self::monomial(d, ExpVec::ZERO, 1)
    }

    pub fn constant(d: PrimeChar, c: i64) -> Self {
        Self::monomial(d, ExpVec::ZERO, c)
    }

    pub fn monomial(d: PrimeChar, e: impl Into<ExpVec>, c: i64) -> Self {
        let c = d.reduce(c);
        let terms = if c == 0 {
            Vec::new()
        } else {
            vec![(e.into(), c)]
        };
        Laurent { d, terms }
    }

    /// The single variable `x`.
    pub fn x(d: PrimeChar) -> Self {
        Self::monomial(d, (1, 0, 0), 1)
    }

    pub fn y(d: PrimeChar) -> Self {
        Self::monomial(d, (0, 1, 0), 1)
    }

    pub fn z(d: PrimeChar) -> Self {
        Self::monomial(d, (0, 0, 1), 1)
    }

    /// `z^k` with coefficient one.
    pub fn z_pow(d: PrimeChar, k: i32) -> Self {
        Self::monomial(d, (0, 0, k), 1)
    }

    /// Builds a polynomial from an arbitrary term list: coefficients are
    /// reduced mod `d`, repeated exponents merged and zero terms dropped.
    pub fn make<E, I>(d: PrimeChar, terms: I) -> Self
    where
        E: Into<ExpVec>,
        I: IntoIterator<Item = (E, i64)>,
    {
        let raw = terms
            .into_iter()
            .map(|(e, c)| (e.into(), d.reduce(c)))
            .collect();
        Self::from_unsorted(d, raw)
    }

    fn from_unsorted(d: PrimeChar, mut raw: Vec<(ExpVec, u32)>) -> Self {
        raw.sort_unstable_by_key(|t| t.0);
        let mut terms: Vec<(ExpVec, u32)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match terms.last_mut() {
                Some(last) if last.0 == e => last.1 = d.add_raw(last.1, c),
                _ => {
                    if let Some(last) = terms.last() {
                        if last.1 == 0 {
                            terms.pop();
                        }
                    }
                    terms.push((e, c));
                }
            }
        }
        if terms.last().is_some_and(|t| t.1 == 0) {
            terms.pop();
        }
        Laurent { d, terms }
    }

    #[inline]
    pub fn characteristic(&self) -> PrimeChar {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl ExactSizeIterator<Item = (ExpVec, Coeff)> + '_ {
        let d = self.d;
        self.terms
            .iter()
            .map(move |&(e, c)| (e, Coeff::new(c as i64, d)))
    }

    pub(crate) fn raw_terms(&self) -> &[(ExpVec, u32)] {
        &self.terms
    }

    pub fn coeff(&self, e: ExpVec) -> Coeff {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(pos) => Coeff::new(self.terms[pos].1 as i64, self.d),
            Err(_) => self.d.zero(),
        }
    }

    /// True when every term is a power of `z` alone.
    pub fn is_z_only(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.i == 0 && e.j == 0)
    }

    fn check_char(&self, other: &Laurent) -> Result<(), AlgebraError> {
        if self.d != other.d {
            return Err(AlgebraError::CharacteristicMismatch {
                left: self.d.get(),
                right: other.d.get(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Laurent) -> Result<Laurent, AlgebraError> {
        self.check_char(other)?;
        let d = self.d;
        let (a, b) = (&self.terms, &other.terms);
        let mut terms = Vec::with_capacity(a.len() + b.len());
        let (mut ia, mut ib) = (0, 0);
        while ia < a.len() && ib < b.len() {
            let (ea, ca) = a[ia];
            let (eb, cb) = b[ib];
            match ea.cmp(&eb) {
                std::cmp::Ordering::Less => {
                    terms.push((ea, ca));
                    ia += 1;
                }
                std::cmp::Ordering::Greater => {
                    terms.push((eb, cb));
                    ib += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = d.add_raw(ca, cb);
                    if c != 0 {
                        terms.push((ea, c));
                    }
                    ia += 1;
                    ib += 1;
                }
            }
        }
        terms.extend_from_slice(&a[ia..]);
        terms.extend_from_slice(&b[ib..]);
        Ok(Laurent { d, terms })
    }

    pub fn try_sub(&self, other: &Laurent) -> Result<Laurent, AlgebraError> {
        self.check_char(other)?;
        self.try_add(&other.negate())
    }

    pub fn negate(&self) -> Laurent {
        let d = self.d;
        Laurent {
            d,
            terms: self.terms.iter().map(|&(e, c)| (e, d.neg_raw(c))).collect(),
        }
    }

    pub fn try_mul(&self, other: &Laurent) -> Result<Laurent, AlgebraError> {
        self.check_char(other)?;
        let d = self.d;
        if self.is_zero() || other.is_zero() {
            return Ok(Laurent::zero(d));
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(ea, ca) in &self.terms {
            for &(eb, cb) in &other.terms {
                let e = ea.checked_add(eb).ok_or(AlgebraError::ExponentOverflow)?;
                raw.push((e, d.mul_raw(ca, cb)));
            }
        }
        Ok(Self::from_unsorted(d, raw))
    }

    /// Multiplies every coefficient by the residue of `c`.
    pub fn scale(&self, c: i64) -> Laurent {
        let d = self.d;
        let c = d.reduce(c);
        if c == 0 {
            return Laurent::zero(d);
        }
        Laurent {
            d,
            terms: self
                .terms
                .iter()
                .map(|&(e, v)| (e, d.mul_raw(v, c)))
                .collect(),
        }
    }

    /// Multiplies by the monomial `x^i y^j z^k`.
    pub fn try_shift(&self, by: impl Into<ExpVec>) -> Result<Laurent, AlgebraError> {
        let by = by.into();
        let terms = self
            .terms
            .iter()
            .map(|&(e, c)| {
                e.checked_add(by)
                    .map(|e| (e, c))
                    .ok_or(AlgebraError::ExponentOverflow)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Laurent { d: self.d, terms })
    }

    /// Panicking form of [`Laurent::try_shift`].
    pub fn shift(&self, by: impl Into<ExpVec>) -> Laurent {
        self.try_shift(by).expect("exponent overflow")
    }

    /// `n`-fold product; `pow(f, 0) = 1`.
    pub fn pow(&self, n: i64) -> Result<Laurent, AlgebraError> {
        if n < 0 {
            return Err(AlgebraError::NegativePower(n));
        }
        let mut acc = Laurent::one(self.d);
        let mut base = self.clone();
        let mut n = n as u64;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Substitutes `v -> v^{-1}` for every variable `v` in `vars`.
    pub fn try_invert_vars(&self, vars: VarSet) -> Result<Laurent, AlgebraError> {
        if vars == VarSet::EMPTY {
            return Ok(self.clone());
        }
        let raw = self
            .terms
            .iter()
            .map(|&(e, c)| {
                e.checked_invert(vars)
                    .map(|e| (e, c))
                    .ok_or(AlgebraError::ExponentOverflow)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_unsorted(self.d, raw))
    }

    /// Panicking form of [`Laurent::try_invert_vars`].
    pub fn invert_vars(&self, vars: VarSet) -> Laurent {
        self.try_invert_vars(vars).expect("exponent overflow")
    }

    /// `f(z^{-1})`, i.e. inversion of `z` alone.
    pub fn star(&self) -> Laurent {
        self.invert_vars(VarSet::Z)
    }

    /// Returns the single term when the polynomial is a nonzero monomial.
    pub fn is_monomial(&self) -> Option<(ExpVec, Coeff)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((*e, Coeff::new(*c as i64, self.d))),
            _ => None,
        }
    }

    /// The `[[i, j, k, c], ...]` interchange form.
    pub fn to_term_array(&self) -> Vec<[i64; 4]> {
        self.terms
            .iter()
            .map(|&(e, c)| [e.i as i64, e.j as i64, e.k as i64, c as i64])
            .collect()
    }

    pub fn from_term_array(d: PrimeChar, terms: &[[i64; 4]]) -> Result<Laurent, AlgebraError> {
        let conv = |v: i64| {
            i32::try_from(v)
                .map_err(|_| AlgebraError::Malformed(format!("exponent {v} out of range")))
        };
        let mut raw = Vec::with_capacity(terms.len());
        for t in terms {
            raw.push((ExpVec::new(conv(t[0])?, conv(t[1])?, conv(t[2])?), t[3]));
        }
        Ok(Laurent::make(d, raw))
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, &(e, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            for (name, exp) in [("x", e.i), ("y", e.j), ("z", e.k)] {
                match exp {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{exp}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{c}")?;
            } else if c == 1 {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{c}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&Laurent> for &Laurent {
            type Output = Laurent;
            /// Panics on mismatched characteristics or exponent overflow.
            fn $method(self, rhs: &Laurent) -> Laurent {
                self.$inner(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Laurent> for Laurent {
            type Output = Laurent;
            fn $method(self, rhs: Laurent) -> Laurent {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Laurent> for Laurent {
            type Output = Laurent;
            fn $method(self, rhs: &Laurent) -> Laurent {
                (&self).$method(rhs)
            }
        }
        impl $trait<Laurent> for &Laurent {
            type Output = Laurent;
            fn $method(self, rhs: Laurent) -> Laurent {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.negate()
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.negate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pc(d: u64) -> PrimeChar {
        PrimeChar::new(d).unwrap()
    }

    fn terms(f: &Laurent) -> Vec<((i32, i32, i32), u32)> {
        f.terms()
            .map(|(e, c)| ((e.i, e.j, e.k), c.value()))
            .collect()
    }

    #[test]
    fn make_examples() {
        let f = Laurent::make(pc(2), [((0, 0, 0), 1), ((0, 0, 0), 1)]);
        assert!(f.is_zero());
        let g = Laurent::make(pc(3), [((0, 0, -1), 1), ((0, 0, 1), -1)]);
        assert_eq!(terms(&g), vec![((0, 0, -1), 1), ((0, 0, 1), 2)]);
        let empty: [((i32, i32, i32), i64); 0] = [];
        assert!(Laurent::make(pc(5), empty).is_zero());
    }

    #[test]
    fn make_drops_cancelled_runs_in_the_middle() {
        let f = Laurent::make(
            pc(3),
            [
                ((0, 0, 0), 1),
                ((0, 0, 1), 1),
                ((0, 0, 1), 2),
                ((0, 0, 2), 1),
            ],
        );
        assert_eq!(terms(&f), vec![((0, 0, 0), 1), ((0, 0, 2), 1)]);
    }

    #[test]
    fn add_sub_neg_examples() {
        let d = pc(2);
        let f = Laurent::one(d) + Laurent::x(d);
        assert!((&f + &f).is_zero());
        let d3 = pc(3);
        let g = Laurent::z_pow(d3, -1) - Laurent::z(d3);
        assert_eq!(terms(&g), vec![((0, 0, -1), 1), ((0, 0, 1), 2)]);
        assert!((-Laurent::zero(d3)).is_zero());
    }

    #[test]
    fn mismatched_characteristics() {
        let a = Laurent::one(pc(2));
        let b = Laurent::one(pc(3));
        assert!(matches!(
            a.try_add(&b),
            Err(AlgebraError::CharacteristicMismatch { .. })
        ));
        assert!(a.try_mul(&b).is_err());
        assert!(a.try_sub(&b).is_err());
    }

    #[test]
    fn mul_examples() {
        let d = pc(2);
        let one = Laurent::one(d);
        let f = &one + &Laurent::x(d);
        assert_eq!(terms(&(&f * &f)), vec![((0, 0, 0), 1), ((2, 0, 0), 1)]);

        let p = (&one + &Laurent::x(d)) * (&one + &Laurent::y(d)) * (&one + &Laurent::z_pow(d, -1));
        let expected = Laurent::make(
            d,
            [
                ((0, 0, 0), 1),
                ((1, 0, 0), 1),
                ((0, 1, 0), 1),
                ((0, 0, -1), 1),
                ((1, 1, 0), 1),
                ((1, 0, -1), 1),
                ((0, 1, -1), 1),
                ((1, 1, -1), 1),
            ],
        );
        assert_eq!(p, expected);
        assert_eq!(p.len(), 8);
        assert!((&p * &Laurent::zero(d)).is_zero());
    }

    #[test]
    fn pow_examples() {
        let d3 = pc(3);
        let one = Laurent::one(d3);
        let f = &one - &Laurent::z(d3);
        assert_eq!(f.pow(0).unwrap(), one);
        let g = &one + &Laurent::z(d3);
        assert_eq!(g.pow(3).unwrap(), &one + &Laurent::z_pow(d3, 3));

        let d5 = pc(5);
        let h = Laurent::one(d5) - Laurent::z_pow(d5, -1);
        let expected = Laurent::make(
            d5,
            [
                ((0, 0, 0), 1),
                ((0, 0, -1), 2),
                ((0, 0, -2), 3),
                ((0, 0, -3), 4),
            ],
        );
        assert_eq!(h.pow(3).unwrap(), expected);
        assert_eq!(h.pow(-1), Err(AlgebraError::NegativePower(-1)));
    }

    #[test]
    fn invert_vars_examples() {
        let d = pc(2);
        let m = Laurent::monomial(d, (1, 1, -1), 1);
        assert_eq!(
            m.invert_vars("yz".parse().unwrap()),
            Laurent::monomial(d, (1, -1, 1), 1)
        );
        let q = Laurent::make(
            d,
            [
                ((-1, -1, 0), 1),
                ((1, 0, 0), 1),
                ((0, -1, 1), 1),
                ((0, 0, 1), 1),
            ],
        );
        let qx = Laurent::make(
            d,
            [
                ((1, -1, 0), 1),
                ((-1, 0, 0), 1),
                ((0, -1, 1), 1),
                ((0, 0, 1), 1),
            ],
        );
        assert_eq!(q.invert_vars(VarSet::X), qx);
        assert_eq!(q.invert_vars(VarSet::EMPTY), q);
    }

    #[test]
    fn is_monomial_examples() {
        let d = pc(3);
        let f7 = Laurent::z_pow(d, 2 - 1);
        let (e, c) = f7.is_monomial().unwrap();
        assert_eq!((e, c.value()), (ExpVec::new(0, 0, 1), 1));
        assert!((Laurent::one(d) + Laurent::z(d)).is_monomial().is_none());
        assert!(Laurent::zero(d).is_monomial().is_none());
    }

    #[test]
    fn overflow_is_reported() {
        let d = pc(2);
        let big = Laurent::monomial(d, (i32::MAX, 0, 0), 1);
        assert_eq!(
            big.try_mul(&Laurent::x(d)),
            Err(AlgebraError::ExponentOverflow)
        );
        let small = Laurent::monomial(d, (i32::MIN, 0, 0), 1);
        assert_eq!(
            small.try_invert_vars(VarSet::X),
            Err(AlgebraError::ExponentOverflow)
        );
    }

    #[test]
    fn display_is_readable() {
        let d = pc(3);
        let f = Laurent::make(d, [((-1, 0, 2), 2), ((0, 0, 0), 1)]);
        assert_eq!(f.to_string(), "2*x^-1*z^2 + 1");
        assert_eq!(Laurent::zero(d).to_string(), "0");
    }

    #[test]
    fn term_array_is_sorted_and_reduced() {
        let d = pc(5);
        let f = Laurent::make(d, [((1, 0, 0), 7), ((-1, 2, 0), -1)]);
        assert_eq!(f.to_term_array(), vec![[-1, 2, 0, 4], [1, 0, 0, 2]]);
        assert_eq!(Laurent::from_term_array(d, &f.to_term_array()).unwrap(), f);
    }
}
