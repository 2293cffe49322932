//! Elements of `F_d[P]` in the normal form `p + q·a + r·b + s·ab`.
//!
//! `P = <a, b | (a²)^b = a⁻², (b²)^a = b⁻²>` contains the free abelian
//! subgroup generated by `x = a²`, `y = b²`, `z = (ab)²`, and every element of
//! the group ring is uniquely a sum `p + qa + rb + s·ab` with `p, q, r, s`
//! Laurent polynomials in `x, y, z`.
//!
//! Conjugation by the coset representatives inverts variables:
//! `a·f = f_yz·a`, `b·f = f_xz·b`, `ab·f = f_xy·ab`, and `ba = x⁻¹yz⁻¹·ab`.

mod oracle;
mod verify;

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::field::PrimeChar;
use crate::laurent::{Laurent, VarSet};

pub use oracle::mul_oracle;
pub use verify::{
    check_reduced, check_xy_symmetry, gardam_adjoint, is_trivial, reduced_pair_keys,
    reduced_pair_keys_qr, verify_unit, UnitStatus, UnitVerdict,
};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupRingElem {
    d: PrimeChar,
    p: Laurent,
    q: Laurent,
    r: Laurent,
    s: Laurent,
}

impl GroupRingElem {
    pub fn from_components(
        d: PrimeChar,
        p: Laurent,
        q: Laurent,
        r: Laurent,
        s: Laurent,
    ) -> Result<Self, AlgebraError> {
        for c in [&p, &q, &r, &s] {
            if c.characteristic() != d {
                return Err(AlgebraError::CharacteristicMismatch {
                    left: d.get(),
                    right: c.characteristic().get(),
                });
            }
        }
        Ok(GroupRingElem { d, p, q, r, s })
    }

    pub fn zero(d: PrimeChar) -> Self {
        let z = Laurent::zero(d);
        GroupRingElem {
            d,
            p: z.clone(),
            q: z.clone(),
            r: z.clone(),
            s: z,
        }
    }

    pub fn one(d: PrimeChar) -> Self {
        GroupRingElem {
            p: Laurent::one(d),
            ..Self::zero(d)
        }
    }

    /// The group element `a`.
    pub fn a(d: PrimeChar) -> Self {
        GroupRingElem {
            q: Laurent::one(d),
            ..Self::zero(d)
        }
    }

    pub fn b(d: PrimeChar) -> Self {
        GroupRingElem {
            r: Laurent::one(d),
            ..Self::zero(d)
        }
    }

    pub fn ab(d: PrimeChar) -> Self {
        GroupRingElem {
            s: Laurent::one(d),
            ..Self::zero(d)
        }
    }

    #[inline]
    pub fn characteristic(&self) -> PrimeChar {
        self.d
    }

    pub fn p(&self) -> &Laurent {
        &self.p
    }

    pub fn q(&self) -> &Laurent {
        &self.q
    }

    pub fn r(&self) -> &Laurent {
        &self.r
    }

    pub fn s(&self) -> &Laurent {
        &self.s
    }

    /// Components in `p, q, r, s` order.
    pub fn components(&self) -> [&Laurent; 4] {
        [&self.p, &self.q, &self.r, &self.s]
    }

    pub fn into_components(self) -> (Laurent, Laurent, Laurent, Laurent) {
        (self.p, self.q, self.r, self.s)
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    /// Total number of stored terms across the four components.
    pub fn support_size(&self) -> usize {
        self.components().iter().map(|c| c.len()).sum()
    }

    pub fn with_q(&self, q: Laurent) -> Self {
        GroupRingElem { q, ..self.clone() }
    }

    pub fn with_components(&self, p: Laurent, q: Laurent, r: Laurent, s: Laurent) -> Self {
        GroupRingElem {
            d: self.d,
            p,
            q,
            r,
            s,
        }
    }

    fn check_char(&self, other: &GroupRingElem) -> Result<(), AlgebraError> {
        if self.d != other.d {
            return Err(AlgebraError::CharacteristicMismatch {
                left: self.d.get(),
                right: other.d.get(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &GroupRingElem) -> Result<GroupRingElem, AlgebraError> {
        self.check_char(other)?;
        Ok(GroupRingElem {
            d: self.d,
            p: self.p.try_add(&other.p)?,
            q: self.q.try_add(&other.q)?,
            r: self.r.try_add(&other.r)?,
            s: self.s.try_add(&other.s)?,
        })
    }

    pub fn try_sub(&self, other: &GroupRingElem) -> Result<GroupRingElem, AlgebraError> {
        self.check_char(other)?;
        Ok(GroupRingElem {
            d: self.d,
            p: self.p.try_sub(&other.p)?,
            q: self.q.try_sub(&other.q)?,
            r: self.r.try_sub(&other.r)?,
            s: self.s.try_sub(&other.s)?,
        })
    }

    pub fn scale(&self, c: i64) -> GroupRingElem {
        GroupRingElem {
            d: self.d,
            p: self.p.scale(c),
            q: self.q.scale(c),
            r: self.r.scale(c),
            s: self.s.scale(c),
        }
    }

    /// Product `self · rhs` computed from the bilinear component table.
    ///
    /// With `self = p' + q'a + r'b + s'ab` and `rhs = p + qa + rb + s·ab`:
    ///
    /// ```text
    /// P = p'p + x·q'q_yz        + y·r'r_xz        + z·s's_xy
    /// Q = p'q + q'p_yz          + x⁻¹z⁻¹·r's_xz   + y⁻¹·s'r_xy
    /// R = p'r + x·q's_yz        + r'p_xz          + y⁻¹z·s'q_xy
    /// S = p's + q'r_yz          + x⁻¹yz⁻¹·r'q_xz  + s'p_xy
    /// ```
    pub fn mul(&self, rhs: &GroupRingElem) -> Result<GroupRingElem, AlgebraError> {
        self.check_char(rhs)?;
        let (p1, q1, r1, s1) = (&self.p, &self.q, &self.r, &self.s);
        let inv = |f: &Laurent, v: VarSet| f.try_invert_vars(v);
        let (p_yz, p_xz, p_xy) = (
            inv(&rhs.p, VarSet::YZ)?,
            inv(&rhs.p, VarSet::XZ)?,
            inv(&rhs.p, VarSet::XY)?,
        );
        let (q_yz, q_xz, q_xy) = (
            inv(&rhs.q, VarSet::YZ)?,
            inv(&rhs.q, VarSet::XZ)?,
            inv(&rhs.q, VarSet::XY)?,
        );
        let (r_yz, r_xz, r_xy) = (
            inv(&rhs.r, VarSet::YZ)?,
            inv(&rhs.r, VarSet::XZ)?,
            inv(&rhs.r, VarSet::XY)?,
        );
        let (s_yz, s_xz, s_xy) = (
            inv(&rhs.s, VarSet::YZ)?,
            inv(&rhs.s, VarSet::XZ)?,
            inv(&rhs.s, VarSet::XY)?,
        );

        let sum4 =
            |a: Laurent, b: Laurent, c: Laurent, e: Laurent| -> Result<Laurent, AlgebraError> {
                a.try_add(&b)?.try_add(&c)?.try_add(&e)
            };

        let big_p = sum4(
            p1.try_mul(&rhs.p)?,
            q1.try_mul(&q_yz)?.try_shift((1, 0, 0))?,
            r1.try_mul(&r_xz)?.try_shift((0, 1, 0))?,
            s1.try_mul(&s_xy)?.try_shift((0, 0, 1))?,
        )?;
        let big_q = sum4(
            p1.try_mul(&rhs.q)?,
            q1.try_mul(&p_yz)?,
            r1.try_mul(&s_xz)?.try_shift((-1, 0, -1))?,
            s1.try_mul(&r_xy)?.try_shift((0, -1, 0))?,
        )?;
        let big_r = sum4(
            p1.try_mul(&rhs.r)?,
            q1.try_mul(&s_yz)?.try_shift((1, 0, 0))?,
            r1.try_mul(&p_xz)?,
            s1.try_mul(&q_xy)?.try_shift((0, -1, 1))?,
        )?;
        let big_s = sum4(
            p1.try_mul(&rhs.s)?,
            q1.try_mul(&r_yz)?,
            r1.try_mul(&q_xz)?.try_shift((-1, 1, -1))?,
            s1.try_mul(&p_xy)?,
        )?;
        Ok(GroupRingElem {
            d: self.d,
            p: big_p,
            q: big_q,
            r: big_r,
            s: big_s,
        })
    }

    /// Applies `f` to each of the four components.
    pub fn map_components(&self, mut f: impl FnMut(&Laurent) -> Laurent) -> GroupRingElem {
        GroupRingElem {
            d: self.d,
            p: f(&self.p),
            q: f(&self.q),
            r: f(&self.r),
            s: f(&self.s),
        }
    }

    pub fn to_wire(&self) -> ElementWire {
        ElementWire {
            characteristic: self.d.get() as u64,
            p: self.p.to_term_array(),
            q: self.q.to_term_array(),
            r: self.r.to_term_array(),
            s: self.s.to_term_array(),
        }
    }

    pub fn from_wire(w: &ElementWire) -> Result<Self, AlgebraError> {
        let d = PrimeChar::new(w.characteristic)?;
        Ok(GroupRingElem {
            d,
            p: Laurent::from_term_array(d, &w.p)?,
            q: Laurent::from_term_array(d, &w.q)?,
            r: Laurent::from_term_array(d, &w.r)?,
            s: Laurent::from_term_array(d, &w.s)?,
        })
    }

    /// Compact canonical JSON; doubles as the total order used for search output.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_wire()).expect("element serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self, AlgebraError> {
        let wire: ElementWire =
            serde_json::from_str(s).map_err(|e| AlgebraError::Malformed(e.to_string()))?;
        Self::from_wire(&wire)
    }
}

impl Mul<&GroupRingElem> for &GroupRingElem {
    type Output = GroupRingElem;

    /// Panics on mismatched characteristics.
    fn mul(self, rhs: &GroupRingElem) -> GroupRingElem {
        GroupRingElem::mul(self, rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl fmt::Display for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "characteristic: {}", self.d)?;
        writeln!(f, "p: {}", self.p)?;
        writeln!(f, "q: {}", self.q)?;
        writeln!(f, "r: {}", self.r)?;
        write!(f, "s: {}", self.s)
    }
}

/// JSON shape of an element: `{"characteristic": d, "p": [[i,j,k,c],...], ...}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementWire {
    pub characteristic: u64,
    pub p: Vec<[i64; 4]>,
    pub q: Vec<[i64; 4]>,
    pub r: Vec<[i64; 4]>,
    pub s: Vec<[i64; 4]>,
}
