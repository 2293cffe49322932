//! Reference multiplication that never consults the component table.
//!
//! `P` acts faithfully on `R³` by affine maps (it is the Hantzsche–Wendt
//! crystallographic group). With translations stored doubled so they stay
//! integral:
//!
//! ```text
//! a: v ↦ diag( 1,-1,-1)·v + (1/2, 1/2, 0)
//! b: v ↦ diag(-1, 1,-1)·v + (0, 1/2, 1/2)
//! ```
//!
//! `a²`, `b²`, `(ab)²` are the translations by `e₁`, `e₂`, `-e₃`, so the
//! monomial `x^i y^j z^k` is translation by `(i, j, -k)`. A product of two
//! normal-form terms is computed by composing the affine maps and reading the
//! coset off the linear part.

use crate::error::AlgebraError;
use crate::laurent::{ExpVec, Laurent};

use super::GroupRingElem;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Affine {
    signs: [i8; 3],
    // translation times two
    shift2: [i64; 3],
}

impl Affine {
    const IDENTITY: Affine = Affine {
        signs: [1, 1, 1],
        shift2: [0, 0, 0],
    };
    const A: Affine = Affine {
        signs: [1, -1, -1],
        shift2: [1, 1, 0],
    };
    const B: Affine = Affine {
        signs: [-1, 1, -1],
        shift2: [0, 1, 1],
    };

    fn translation(e: ExpVec) -> Affine {
        Affine {
            signs: [1, 1, 1],
            shift2: [2 * e.i as i64, 2 * e.j as i64, -2 * e.k as i64],
        }
    }

    /// `self ∘ other`: apply `other` first.
    fn compose(self, other: Affine) -> Affine {
        let mut signs = [0i8; 3];
        let mut shift2 = [0i64; 3];
        for n in 0..3 {
            signs[n] = self.signs[n] * other.signs[n];
            shift2[n] = self.signs[n] as i64 * other.shift2[n] + self.shift2[n];
        }
        Affine { signs, shift2 }
    }
}

fn coset_reps() -> [Affine; 4] {
    [
        Affine::IDENTITY,
        Affine::A,
        Affine::B,
        Affine::A.compose(Affine::B),
    ]
}

/// Splits a group element into `(coset index, monomial)` with the element
/// equal to `monomial · rep[coset]`.
fn decompose(g: Affine, reps: &[Affine; 4]) -> Result<(usize, ExpVec), AlgebraError> {
    let (idx, rep) = reps
        .iter()
        .enumerate()
        .find(|(_, r)| r.signs == g.signs)
        .expect("every linear part is one of the four coset signatures");
    let m: [i64; 3] = std::array::from_fn(|n| {
        let diff = g.shift2[n] - rep.shift2[n];
        debug_assert_eq!(diff % 2, 0);
        diff / 2
    });
    let conv = |v: i64| i32::try_from(v).map_err(|_| AlgebraError::ExponentOverflow);
    Ok((idx, ExpVec::new(conv(m[0])?, conv(m[1])?, conv(-m[2])?)))
}

/// Product `lhs · rhs` by expanding every pair of terms in the group itself.
pub fn mul_oracle(lhs: &GroupRingElem, rhs: &GroupRingElem) -> Result<GroupRingElem, AlgebraError> {
    let d = lhs.characteristic();
    if rhs.characteristic() != d {
        return Err(AlgebraError::CharacteristicMismatch {
            left: d.get(),
            right: rhs.characteristic().get(),
        });
    }
    let reps = coset_reps();
    let mut out: [Vec<(ExpVec, i64)>; 4] = Default::default();
    for (gl, comp_l) in lhs.components().into_iter().enumerate() {
        for (ml, cl) in comp_l.terms() {
            let left = Affine::translation(ml).compose(reps[gl]);
            for (gr, comp_r) in rhs.components().into_iter().enumerate() {
                for (mr, cr) in comp_r.terms() {
                    let right = Affine::translation(mr).compose(reps[gr]);
                    let (coset, mono) = decompose(left.compose(right), &reps)?;
                    out[coset].push((mono, cl.value() as i64 * cr.value() as i64));
                }
            }
        }
    }
    let [p, q, r, s] = out.map(|terms| Laurent::make(d, terms));
    GroupRingElem::from_components(d, p, q, r, s)
}
