//! Candidate spaces for the searches, each a finite-dimensional `F_d`-linear
//! span enumerated in odometer order.

use std::collections::BTreeSet;

use crate::field::PrimeChar;
use crate::laurent::{ExpVec, Laurent};
use crate::units::ansatz_slot;

use super::SearchBox;

/// Component role; fixes which xy-symmetry a candidate must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    P,
    Q,
    R,
    S,
}

impl Role {
    /// Monomial paired with `(i, j)` by the role's identity.
    ///
    /// `p_xy = x⁻¹y⁻¹p` forces `c(i,j) = c(1−i, 1−j)`, `q_xy = yq` forces
    /// `c(i,j) = c(−i, −1−j)`, `r_xy = x⁻¹r` forces `c(i,j) = c(1−i, −j)` and
    /// `s_xy = s` forces `c(i,j) = c(−i, −j)`; `z` exponents are untouched.
    pub fn partner(self, e: ExpVec) -> ExpVec {
        let (i, j) = match self {
            Role::P => (1 - e.i, 1 - e.j),
            Role::Q => (-e.i, -1 - e.j),
            Role::R => (1 - e.i, -e.j),
            Role::S => (-e.i, -e.j),
        };
        ExpVec::new(i, j, e.k)
    }
}

/// All `F_d`-combinations of a fixed basis.
#[derive(Clone, Debug)]
pub(crate) struct LinearFamily {
    d: PrimeChar,
    basis: Vec<Laurent>,
}

impl LinearFamily {
    pub(crate) fn new(d: PrimeChar, basis: Vec<Laurent>) -> Self {
        LinearFamily { d, basis }
    }

    pub(crate) fn basis(&self) -> &[Laurent] {
        &self.basis
    }

    /// `d^n`, saturating.
    pub(crate) fn count(&self) -> u128 {
        u32::try_from(self.basis.len())
            .ok()
            .and_then(|n| (self.d.get() as u128).checked_pow(n))
            .unwrap_or(u128::MAX)
    }

    /// Element with odometer index `index`; digit `n` is the coefficient of
    /// basis element `n`, least significant first.
    pub(crate) fn element(&self, mut index: u64) -> Laurent {
        let d = self.d.get() as u64;
        let mut acc = Laurent::zero(self.d);
        for b in &self.basis {
            let digit = index % d;
            index /= d;
            if digit != 0 {
                acc = acc + b.scale(digit as i64);
            }
        }
        acc
    }
}

/// Orbit basis for a role inside the box: one polynomial `m + partner(m)` (or
/// `m` for a fixed point) per orbit contained in the box.
pub(crate) fn symmetric_family(role: Role, bx: &SearchBox) -> LinearFamily {
    let d = bx.characteristic;
    let mut reps = BTreeSet::new();
    for i in bx.x.lo..=bx.x.hi {
        for j in bx.y.lo..=bx.y.hi {
            for k in bx.z.lo..=bx.z.hi {
                let m = ExpVec::new(i, j, k);
                let partner = role.partner(m);
                if bx.contains(partner) {
                    reps.insert(m.min(partner));
                }
            }
        }
    }
    let basis = reps
        .into_iter()
        .map(|m| {
            let partner = role.partner(m);
            if partner == m {
                Laurent::monomial(d, m, 1)
            } else {
                Laurent::make(d, [(m, 1), (partner, 1)])
            }
        })
        .collect();
    LinearFamily::new(d, basis)
}

/// Every candidate for `role` in the box satisfying the role's xy-identity,
/// each exactly once.
pub fn enumerate_symmetric(role: Role, bx: &SearchBox) -> impl Iterator<Item = Laurent> {
    let fam = symmetric_family(role, bx);
    let count = u64::try_from(fam.count()).expect("family too large to enumerate");
    (0..count).map(move |n| fam.element(n))
}

/// Span of the ansatz component contributions of slots `slots`, with `z`
/// exponents in the box's `z` range.
pub(crate) fn ansatz_family(slots: &[usize], bx: &SearchBox) -> LinearFamily {
    let d = bx.characteristic;
    let basis = slots
        .iter()
        .flat_map(|&slot| (bx.z.lo..=bx.z.hi).map(move |k| ansatz_slot(d, slot, k)))
        .collect();
    LinearFamily::new(d, basis)
}
