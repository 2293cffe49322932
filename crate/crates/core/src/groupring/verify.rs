//! The adjoint, the two-sided unit verifier and the reduced-system checks.

use serde::Serialize;

use crate::laurent::{Laurent, VarSet};

use super::GroupRingElem;

/// The candidate inverse `(x⁻¹p_yz, -x⁻¹q, -y⁻¹r, z⁻¹s_yz)`.
///
/// This inverts units of the xy-symmetric shape that satisfy the reduced
/// system; for anything else it is only a candidate.
pub fn gardam_adjoint(u: &GroupRingElem) -> GroupRingElem {
    u.with_components(
        u.p().invert_vars(VarSet::YZ).shift((-1, 0, 0)),
        u.q().negate().shift((-1, 0, 0)),
        u.r().negate().shift((0, -1, 0)),
        u.s().invert_vars(VarSet::YZ).shift((0, 0, -1)),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UnitStatus {
    Verified,
    NotVerifiedByAdjoint,
}

#[derive(Clone, Debug)]
pub struct UnitVerdict {
    pub status: UnitStatus,
    pub inverse: Option<GroupRingElem>,
    /// `u'·u − 1`, present only when nonzero.
    pub left_residual: Option<GroupRingElem>,
    /// `u·u' − 1`, present only when nonzero.
    pub right_residual: Option<GroupRingElem>,
}

impl UnitVerdict {
    pub fn is_verified(&self) -> bool {
        self.status == UnitStatus::Verified
    }
}

/// Certifies `u` as a unit when the adjoint is a two-sided inverse.
///
/// A negative verdict means the adjoint failed, not that `u` is not a unit.
pub fn verify_unit(u: &GroupRingElem) -> UnitVerdict {
    let d = u.characteristic();
    let one = GroupRingElem::one(d);
    let inv = gardam_adjoint(u);
    let left = &(&inv * u).try_sub(&one).expect("same characteristic");
    let right = &(u * &inv).try_sub(&one).expect("same characteristic");
    let nonzero = |e: &GroupRingElem| (!e.is_zero()).then(|| e.clone());
    let left_residual = nonzero(left);
    let right_residual = nonzero(right);
    if left_residual.is_none() && right_residual.is_none() {
        UnitVerdict {
            status: UnitStatus::Verified,
            inverse: Some(inv),
            left_residual,
            right_residual,
        }
    } else {
        UnitVerdict {
            status: UnitStatus::NotVerifiedByAdjoint,
            inverse: None,
            left_residual,
            right_residual,
        }
    }
}

/// Exactly one nonzero component, and it is a monomial: `κ·m·g`.
pub fn is_trivial(u: &GroupRingElem) -> bool {
    let nonzero: Vec<&Laurent> = u
        .components()
        .into_iter()
        .filter(|c| !c.is_zero())
        .collect();
    matches!(nonzero.as_slice(), [only] if only.is_monomial().is_some())
}

/// `p_xy = x⁻¹y⁻¹p`, `q_xy = yq`, `r_xy = x⁻¹r`, `s_xy = s`.
pub fn check_xy_symmetry(u: &GroupRingElem) -> bool {
    let xy = VarSet::XY;
    u.p().invert_vars(xy) == u.p().shift((-1, -1, 0))
        && u.q().invert_vars(xy) == u.q().shift((0, 1, 0))
        && u.r().invert_vars(xy) == u.r().shift((-1, 0, 0))
        && u.s().invert_vars(xy) == *u.s()
}

/// `(pp_yz + x·ss_yz, ps_yz + yz·p_yz·s)`.
pub fn reduced_pair_keys(p: &Laurent, s: &Laurent) -> (Laurent, Laurent) {
    let p_yz = p.invert_vars(VarSet::YZ);
    let s_yz = s.invert_vars(VarSet::YZ);
    let first = p * &p_yz + (s * &s_yz).shift((1, 0, 0));
    let second = p * &s_yz + (&p_yz * s).shift((0, 1, 1));
    (first, second)
}

/// `(rr_yz + x·qq_yz + x, rq_yz + yz·qr_yz)`.
pub fn reduced_pair_keys_qr(q: &Laurent, r: &Laurent) -> (Laurent, Laurent) {
    let d = q.characteristic();
    let q_yz = q.invert_vars(VarSet::YZ);
    let r_yz = r.invert_vars(VarSet::YZ);
    let first = r * &r_yz + (q * &q_yz).shift((1, 0, 0)) + Laurent::x(d);
    let second = r * &q_yz + (q * &r_yz).shift((0, 1, 1));
    (first, second)
}

/// True when the `(p, s)` and `(q, r)` key pairs coincide.
pub fn check_reduced(u: &GroupRingElem) -> bool {
    reduced_pair_keys(u.p(), u.s()) == reduced_pair_keys_qr(u.q(), u.r())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeChar;

    fn pc(d: u64) -> PrimeChar {
        PrimeChar::new(d).unwrap()
    }

    #[test]
    fn adjoint_examples() {
        let d = pc(2);
        let adj = gardam_adjoint(&GroupRingElem::one(d));
        assert_eq!(adj.p(), &Laurent::monomial(d, (-1, 0, 0), 1));
        assert!(adj.q().is_zero() && adj.r().is_zero() && adj.s().is_zero());

        let d5 = pc(5);
        let adj = gardam_adjoint(&GroupRingElem::a(d5));
        assert_eq!(adj.q(), &Laurent::monomial(d5, (-1, 0, 0), -1));
        assert!(adj.p().is_zero());
    }

    #[test]
    fn identity_is_not_certified() {
        let d = pc(2);
        let v = verify_unit(&GroupRingElem::one(d));
        assert_eq!(v.status, UnitStatus::NotVerifiedByAdjoint);
        assert!(v.inverse.is_none());
        let left = v.left_residual.unwrap();
        // x⁻¹ − 1
        assert_eq!(
            left.p(),
            &Laurent::make(d, [((-1, 0, 0), 1), ((0, 0, 0), -1)])
        );
    }

    #[test]
    fn triviality() {
        let d = pc(3);
        let m = GroupRingElem::one(d).with_components(
            Laurent::monomial(d, (-1, 1, 1), 2),
            Laurent::zero(d),
            Laurent::zero(d),
            Laurent::zero(d),
        );
        assert!(is_trivial(&m));
        assert!(!is_trivial(&GroupRingElem::zero(d)));
        let two_terms = m.with_q(Laurent::one(d));
        assert!(!is_trivial(&two_terms));
        let binomial = GroupRingElem::zero(d).with_q(Laurent::one(d) + Laurent::x(d));
        assert!(!is_trivial(&binomial));
    }

    #[test]
    fn symmetry_negative() {
        let d = pc(2);
        let u = GroupRingElem::zero(d).with_components(
            Laurent::x(d),
            Laurent::zero(d),
            Laurent::zero(d),
            Laurent::zero(d),
        );
        assert!(!check_xy_symmetry(&u));
        assert!(!check_reduced(&u));
    }

    #[test]
    fn key_examples() {
        let d = pc(2);
        let (k1, k2) = reduced_pair_keys(&Laurent::one(d), &Laurent::zero(d));
        assert_eq!((k1, k2), (Laurent::one(d), Laurent::zero(d)));
        let (k1, k2) = reduced_pair_keys_qr(&Laurent::zero(d), &Laurent::zero(d));
        assert_eq!((k1, k2), (Laurent::x(d), Laurent::zero(d)));
    }
}
