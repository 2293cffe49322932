//! Explicit non-trivial units of `F_d[P]` and the seven-polynomial family.

mod identities;

use std::fmt;
use std::str::FromStr;

use crate::error::AlgebraError;
use crate::field::PrimeChar;
use crate::groupring::GroupRingElem;
use crate::laurent::{Laurent, VarSet};

pub use identities::{check_f_system, check_reduction_chain, IdentityCheck, IdentityReport};

fn lp(d: PrimeChar, terms: &[((i32, i32, i32), i64)]) -> Laurent {
    Laurent::make(d, terms.iter().copied())
}

fn f2() -> PrimeChar {
    PrimeChar::new(2).expect("2 is prime")
}

fn f3() -> PrimeChar {
    PrimeChar::new(3).expect("3 is prime")
}

/// The non-trivial unit over `F_2`:
///
/// ```text
/// p = (1+x)(1+y)(1+z⁻¹)
/// q = x⁻¹y⁻¹ + x + y⁻¹z + z
/// r = 1 + x + y⁻¹z + xyz
/// s = 1 + (x + x⁻¹ + y + y⁻¹)z⁻¹
/// ```
pub fn gardam_unit() -> GroupRingElem {
    let d = f2();
    let p = lp(d, &[((0, 0, 0), 1), ((1, 0, 0), 1)])
        * lp(d, &[((0, 0, 0), 1), ((0, 1, 0), 1)])
        * lp(d, &[((0, 0, 0), 1), ((0, 0, -1), 1)]);
    let q = lp(
        d,
        &[
            ((-1, -1, 0), 1),
            ((1, 0, 0), 1),
            ((0, -1, 1), 1),
            ((0, 0, 1), 1),
        ],
    );
    let r = lp(
        d,
        &[
            ((0, 0, 0), 1),
            ((1, 0, 0), 1),
            ((0, -1, 1), 1),
            ((1, 1, 1), 1),
        ],
    );
    let s = lp(
        d,
        &[
            ((0, 0, 0), 1),
            ((1, 0, -1), 1),
            ((-1, 0, -1), 1),
            ((0, 1, -1), 1),
            ((0, -1, -1), 1),
        ],
    );
    GroupRingElem::from_components(d, p, q, r, s).expect("all components over F_2")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Char3Variant {
    Base,
    /// `(p, q_x, r_y, s)`
    XYFlipped,
}

/// The two units over `F_3`.
pub fn char3_unit(variant: Char3Variant) -> GroupRingElem {
    let d = f3();
    let one = Laurent::one(d);
    let x = Laurent::x(d);
    let y = Laurent::y(d);
    let x_inv = Laurent::monomial(d, (-1, 0, 0), 1);
    let y_inv = Laurent::monomial(d, (0, -1, 0), 1);
    let z = Laurent::z(d);
    let z_inv = Laurent::z_pow(d, -1);

    let one_x = &one + &x;
    let one_y = &one + &y;
    let one_y_inv = &one + &y_inv;
    let z_minus_z_inv = &z - &z_inv;

    let p = &one_x * &one_y * (&z_inv - &z);
    let q = &one_x * (&x_inv + &y_inv) * (&one - &z_inv) + &one_y_inv * &z_minus_z_inv;
    let r = &one_y_inv * (&x + &y) * (&z - &one) + &one_x * &z_minus_z_inv;
    let s = -&z + (&one + &x + &x_inv + &y + &y_inv) * (&z_inv - &one);

    let (q, r) = match variant {
        Char3Variant::Base => (q, r),
        Char3Variant::XYFlipped => (q.invert_vars(VarSet::X), r.invert_vars(VarSet::Y)),
    };
    GroupRingElem::from_components(d, p, q, r, s).expect("all components over F_3")
}

/// Parameters `(d, t, w)` of the family of units.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    d: PrimeChar,
    t: i32,
    w: i32,
}

impl FamilyParams {
    /// Rejects parameters whose exponents would not fit in `i32`.
    pub fn new(d: PrimeChar, t: i32, w: i32) -> Result<Self, AlgebraError> {
        let spread = (1 - 2 * t as i128).abs() * (d.get() as i128);
        let bound = spread + (w as i128).abs() + 2 * (t as i128).abs() + 4;
        if bound > i32::MAX as i128 {
            return Err(AlgebraError::ExponentOverflow);
        }
        Ok(FamilyParams { d, t, w })
    }

    pub fn characteristic(&self) -> PrimeChar {
        self.d
    }

    pub fn t(&self) -> i32 {
        self.t
    }

    pub fn w(&self) -> i32 {
        self.w
    }

    /// `h = (1 − z^{1−2t})^{d−2}`.
    pub fn h(&self) -> Laurent {
        let d = self.d;
        (Laurent::one(d) - Laurent::z_pow(d, 1 - 2 * self.t))
            .pow(d.get() as i64 - 2)
            .expect("exponent range checked on construction")
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} t={} w={}", self.d, self.t, self.w)
    }
}

/// Seven Laurent polynomials in `z` alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FTable {
    pub f1: Laurent,
    pub f2: Laurent,
    pub f3: Laurent,
    pub f4: Laurent,
    pub f5: Laurent,
    pub f6: Laurent,
    pub f7: Laurent,
}

impl FTable {
    pub fn new(fs: [Laurent; 7]) -> Result<FTable, AlgebraError> {
        let d = fs[0].characteristic();
        for f in &fs {
            if f.characteristic() != d {
                return Err(AlgebraError::CharacteristicMismatch {
                    left: d.get(),
                    right: f.characteristic().get(),
                });
            }
            if !f.is_z_only() {
                return Err(AlgebraError::Malformed(format!(
                    "{f} is not a polynomial in z alone"
                )));
            }
        }
        let [f1, f2, f3, f4, f5, f6, f7] = fs;
        Ok(FTable {
            f1,
            f2,
            f3,
            f4,
            f5,
            f6,
            f7,
        })
    }

    pub fn zero(d: PrimeChar) -> FTable {
        let z = Laurent::zero(d);
        FTable {
            f1: z.clone(),
            f2: z.clone(),
            f3: z.clone(),
            f4: z.clone(),
            f5: z.clone(),
            f6: z.clone(),
            f7: z,
        }
    }

    pub fn characteristic(&self) -> PrimeChar {
        self.f1.characteristic()
    }

    pub fn as_array(&self) -> [&Laurent; 7] {
        [
            &self.f1, &self.f2, &self.f3, &self.f4, &self.f5, &self.f6, &self.f7,
        ]
    }
}

/// The backsolved table for `(d, t, w)`, with `h = (1 − z^{1−2t})^{d−2}`:
///
/// ```text
/// f1 = (z^t + z^{1−t})·h      f5 = z^w(z^t + z^{1−t})·h
/// f2 = z^w·h                  f6 = h
/// f3 = z^w(1 + z^{2t−1})·h    f7 = z^{2t−1}
/// f4 = z^{w+t}·h
/// ```
pub fn family_f_table(params: FamilyParams) -> FTable {
    let d = params.d;
    let (t, w) = (params.t, params.w);
    let h = params.h();
    let zp = |k: i32| Laurent::z_pow(d, k);
    let zt_sum = zp(t) + zp(1 - t);
    FTable {
        f1: &zt_sum * &h,
        f2: h.shift((0, 0, w)),
        f3: ((Laurent::one(d) + zp(2 * t - 1)) * &h).shift((0, 0, w)),
        f4: h.shift((0, 0, w + t)),
        f5: (&zt_sum * &h).shift((0, 0, w)),
        f6: h.clone(),
        f7: zp(2 * t - 1),
    }
}

struct AnsatzFactors {
    /// (1+x)(1+y)
    p: Laurent,
    /// (1+x)(x⁻¹+y⁻¹)
    q2: Laurent,
    /// 1+y⁻¹
    q3: Laurent,
    /// (1+y⁻¹)(x+y)
    r4: Laurent,
    /// 1+x
    r5: Laurent,
    /// x + 2 + x⁻¹ + y + 2 + y⁻¹
    s6: Laurent,
}

impl AnsatzFactors {
    fn new(d: PrimeChar) -> Self {
        let one = Laurent::one(d);
        let x = Laurent::x(d);
        let y = Laurent::y(d);
        let x_inv = Laurent::monomial(d, (-1, 0, 0), 1);
        let y_inv = Laurent::monomial(d, (0, -1, 0), 1);
        let one_x = &one + &x;
        let one_y_inv = &one + &y_inv;
        AnsatzFactors {
            p: &one_x * (&one + &y),
            q2: &one_x * (&x_inv + &y_inv),
            q3: one_y_inv.clone(),
            r4: &one_y_inv * (&x + &y),
            r5: one_x,
            s6: &x + &Laurent::constant(d, 2) + &x_inv + &y + &Laurent::constant(d, 2) + &y_inv,
        }
    }
}

/// Plugs seven `z`-polynomials into the ansatz
///
/// ```text
/// p = (1+x)(1+y)f1
/// q = (1+x)(x⁻¹+y⁻¹)f2 + (1+y⁻¹)f3
/// r = (1+y⁻¹)(x+y)f4 + (1+x)f5
/// s = (x+2+x⁻¹+y+2+y⁻¹)f6 + f7
/// ```
pub fn assemble_from_f(ft: &FTable) -> GroupRingElem {
    let d = ft.characteristic();
    let a = AnsatzFactors::new(d);
    GroupRingElem::from_components(
        d,
        &a.p * &ft.f1,
        &a.q2 * &ft.f2 + &a.q3 * &ft.f3,
        &a.r4 * &ft.f4 + &a.r5 * &ft.f5,
        &a.s6 * &ft.f6 + &ft.f7,
    )
    .expect("table shares one characteristic")
}

/// Per-slot basis of the ansatz: the component produced by `z^k` in slot `f_n`.
pub(crate) fn ansatz_slot(d: PrimeChar, slot: usize, k: i32) -> Laurent {
    let a = AnsatzFactors::new(d);
    let factor = match slot {
        1 => &a.p,
        2 => &a.q2,
        3 => &a.q3,
        4 => &a.r4,
        5 => &a.r5,
        6 => &a.s6,
        7 => return Laurent::z_pow(d, k),
        _ => panic!("ansatz slot {slot} out of range"),
    };
    factor.shift((0, 0, k))
}

/// The family member for `(d, t, w)`, built directly from the closed form
///
/// ```text
/// p = (1+x)(1+y)(z^t + z^{1−t})h
/// q = z^w[(1+x)(x⁻¹+y⁻¹) + (1+y⁻¹)(1+z^{2t−1})]h
/// r = z^w[(1+y⁻¹)(x+y)z^t + (1+x)(z^t+z^{1−t})]h
/// s = z^{2t−1} + (4 + x + x⁻¹ + y + y⁻¹)h
/// ```
pub fn family_unit(params: FamilyParams) -> GroupRingElem {
    let d = params.d;
    let (t, w) = (params.t, params.w);
    let h = params.h();
    let one = Laurent::one(d);
    let x = Laurent::x(d);
    let y = Laurent::y(d);
    let x_inv = Laurent::monomial(d, (-1, 0, 0), 1);
    let y_inv = Laurent::monomial(d, (0, -1, 0), 1);
    let zp = |k: i32| Laurent::z_pow(d, k);
    let one_x = &one + &x;
    let one_y_inv = &one + &y_inv;
    let zt_sum = zp(t) + zp(1 - t);

    let p = &one_x * (&one + &y) * &zt_sum * &h;
    let q =
        ((&one_x * (&x_inv + &y_inv) + &one_y_inv * (&one + zp(2 * t - 1))) * &h).shift((0, 0, w));
    let r = ((&one_y_inv * (&x + &y) * zp(t) + &one_x * &zt_sum) * &h).shift((0, 0, w));
    let s = zp(2 * t - 1) + (Laurent::constant(d, 4) + &x + &x_inv + &y + &y_inv) * &h;
    GroupRingElem::from_components(d, p, q, r, s).expect("single characteristic")
}

pub const PS_VARIANTS: usize = 3;
pub const QR_VARIANTS: usize = 6;

/// `(p, s) ↦ (p, s) | (p_z, z·s) | (p_z, z⁻¹·s_z)`.
pub fn ps_variant(u: &GroupRingElem, v: usize) -> Result<GroupRingElem, AlgebraError> {
    let (p, s) = (u.p(), u.s());
    let (p, s) = match v {
        0 => (p.clone(), s.clone()),
        1 => (p.star(), s.shift((0, 0, 1))),
        2 => (p.star(), s.star().shift((0, 0, -1))),
        _ => {
            return Err(AlgebraError::VariantOutOfRange {
                index: v,
                len: PS_VARIANTS,
            })
        }
    };
    Ok(u.with_components(p, u.q().clone(), u.r().clone(), s))
}

/// `(q, r) ↦ (q, r) | (q_z, z·r_z) | (q_x, r_y) | (q_xz, z·r_yz) | (z⁻¹q, z⁻¹r) | (z⁻¹q_x, z⁻¹r_y)`.
///
/// Entries 1 and 3 invert `z` in `q` as well; without it neither transform
/// preserves the reduced system, and the exhaustive char-2 search finds
/// exactly these six.
pub fn qr_variant(u: &GroupRingElem, v: usize) -> Result<GroupRingElem, AlgebraError> {
    let (q, r) = (u.q(), u.r());
    let (q, r) = match v {
        0 => (q.clone(), r.clone()),
        1 => (q.star(), r.star().shift((0, 0, 1))),
        2 => (q.invert_vars(VarSet::X), r.invert_vars(VarSet::Y)),
        3 => (
            q.invert_vars(VarSet::XZ),
            r.invert_vars(VarSet::YZ).shift((0, 0, 1)),
        ),
        4 => (q.shift((0, 0, -1)), r.shift((0, 0, -1))),
        5 => (
            q.invert_vars(VarSet::X).shift((0, 0, -1)),
            r.invert_vars(VarSet::Y).shift((0, 0, -1)),
        ),
        _ => {
            return Err(AlgebraError::VariantOutOfRange {
                index: v,
                len: QR_VARIANTS,
            })
        }
    };
    Ok(u.with_components(u.p().clone(), q, r, u.s().clone()))
}

/// All 18 combinations `ps_variant(qr_variant(u, j), i)`, `i`-major.
pub fn variant_table(u: &GroupRingElem) -> Vec<GroupRingElem> {
    let mut out = Vec::with_capacity(PS_VARIANTS * QR_VARIANTS);
    for i in 0..PS_VARIANTS {
        for j in 0..QR_VARIANTS {
            let qr = qr_variant(u, j).expect("index in range");
            out.push(ps_variant(&qr, i).expect("index in range"));
        }
    }
    out
}

/// Named units selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    Char2,
    Char3Base,
    Char3Flipped,
}

impl Builtin {
    pub const ALL: [Builtin; 3] = [Builtin::Char2, Builtin::Char3Base, Builtin::Char3Flipped];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Char2 => "gardam",
            Builtin::Char3Base => "char3-base",
            Builtin::Char3Flipped => "char3-flipped",
        }
    }

    pub fn build(self) -> GroupRingElem {
        match self {
            Builtin::Char2 => gardam_unit(),
            Builtin::Char3Base => char3_unit(Char3Variant::Base),
            Builtin::Char3Flipped => char3_unit(Char3Variant::XYFlipped),
        }
    }
}

impl FromStr for Builtin {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| AlgebraError::Malformed(format!("unknown builtin {s:?}")))
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
