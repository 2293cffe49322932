//! Polynomial identities behind the seven-polynomial construction, each
//! reported as a residual `lhs − rhs` so a failing line is easy to spot.
//!
//! `f*` denotes `f(z⁻¹)`.

use crate::laurent::Laurent;

use super::{family_f_table, FTable, FamilyParams};

#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub label: &'static str,
    pub residual: Laurent,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

#[derive(Clone, Debug, Default)]
pub struct IdentityReport {
    pub residuals: Vec<IdentityCheck>,
    /// Monomiality requirements, which are not polynomial differences.
    pub monomials: Vec<(&'static str, bool)>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.residuals.iter().all(IdentityCheck::holds) && self.monomials.iter().all(|m| m.1)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.residuals
            .iter()
            .filter(|c| !c.holds())
            .map(|c| c.label)
            .chain(self.monomials.iter().filter(|m| !m.1).map(|m| m.0))
            .collect()
    }

    fn push(&mut self, label: &'static str, lhs: Laurent, rhs: Laurent) {
        self.residuals.push(IdentityCheck {
            label,
            residual: lhs - rhs,
        });
    }
}

/// The unit condition in terms of the seven polynomials. Chained equalities
/// are split into residuals against their leftmost member:
///
/// ```text
/// f7*f7 = 1
/// f3*f3 = f5*f5 = (f7*f6 + f6*f7) + 4f6*f6
/// f2*f2 = f4*f4 = f6*f6
/// f1*f1 = f2*f3 + f4*f5
/// f2*f5 = z·f5*f2 = f3*f4 = z·f4*f3 = (f6*f1 + z·f1*f6) − (f2*f4 + z·f4*f2)
/// f3*f5 + z·f5*f3 = (f7*f1 + z·f1*f7) + 4(f2*f4 + z·f4*f2)
/// ```
pub fn check_f_system(ft: &FTable) -> IdentityReport {
    let d = ft.characteristic();
    let z = Laurent::z(d);
    let four = Laurent::constant(d, 4);
    let [f1, f2, f3, f4, f5, f6, f7] = ft.as_array();
    let s = |f: &Laurent| f.star();

    let mut rep = IdentityReport::default();
    rep.push("f7*f7 = 1", s(f7) * f7, Laurent::one(d));

    let f3f3 = s(f3) * f3;
    rep.push("f3*f3 = f5*f5", f3f3.clone(), s(f5) * f5);
    rep.push(
        "f3*f3 = (f7*f6 + f6*f7) + 4f6*f6",
        f3f3,
        s(f7) * f6 + s(f6) * f7 + &four * s(f6) * f6,
    );

    let f2f2 = s(f2) * f2;
    rep.push("f2*f2 = f4*f4", f2f2.clone(), s(f4) * f4);
    rep.push("f2*f2 = f6*f6", f2f2, s(f6) * f6);

    rep.push("f1*f1 = f2*f3 + f4*f5", s(f1) * f1, s(f2) * f3 + s(f4) * f5);

    let f2f5 = s(f2) * f5;
    let cross24 = s(f2) * f4 + &z * s(f4) * f2;
    rep.push("f2*f5 = z f5*f2", f2f5.clone(), &z * s(f5) * f2);
    rep.push("f2*f5 = f3*f4", f2f5.clone(), s(f3) * f4);
    rep.push("f2*f5 = z f4*f3", f2f5.clone(), &z * s(f4) * f3);
    rep.push(
        "f2*f5 = (f6*f1 + z f1*f6) - (f2*f4 + z f4*f2)",
        f2f5,
        s(f6) * f1 + &z * s(f1) * f6 - &cross24,
    );

    rep.push(
        "f3*f5 + z f5*f3 = (f7*f1 + z f1*f7) + 4(f2*f4 + z f4*f2)",
        s(f3) * f5 + &z * s(f5) * f3,
        s(f7) * f1 + &z * s(f1) * f7 + &four * &cross24,
    );
    rep
}

/// Every step of the reduction from the f-system to the closed-form family,
/// checked on the table for `params`.
pub fn check_reduction_chain(params: FamilyParams) -> IdentityReport {
    let ft = family_f_table(params);
    let d = params.characteristic();
    let (t, w) = (params.t(), params.w());
    let dd = d.get() as i64;
    let zp = |k: i32| Laurent::z_pow(d, k);
    let one = Laurent::one(d);
    let z = Laurent::z(d);
    let four = Laurent::constant(d, 4);
    let s = |f: &Laurent| f.star();
    let FTable {
        f1,
        f2,
        f3,
        f4,
        f5,
        f6,
        f7,
    } = &ft;

    let zt_sum = zp(t) + zp(1 - t);
    // g = z^{1−2t}; z^{2t−1} = g⁻¹
    let g = zp(1 - 2 * t);
    let g_inv = zp(2 * t - 1);
    let one_minus_g = &one - &g;
    let pow = |f: &Laurent, n: i64| f.pow(n).expect("nonnegative power in range");

    let mut rep = IdentityReport::default();

    rep.push("f4 = z^t f2", f4.clone(), zp(t) * f2);
    rep.push("f5 = z^(1-t) f3", f5.clone(), zp(1 - t) * f3);

    // System after substituting f4 and f5.
    rep.push("reduced: f7*f7 = 1", s(f7) * f7, one.clone());
    rep.push(
        "reduced: f3*f3 = (f7*f6 + f6*f7) + 4f6*f6",
        s(f3) * f3,
        s(f7) * f6 + s(f6) * f7 + &four * s(f6) * f6,
    );
    rep.push("reduced: f2*f2 = f6*f6", s(f2) * f2, s(f6) * f6);
    rep.push(
        "reduced: f1*f1 = (1 + z^(1-2t)) f2*f3",
        s(f1) * f1,
        (&one + &g) * s(f2) * f3,
    );
    rep.push(
        "reduced: f2*f3 = z^(2t-1) f3*f2",
        s(f2) * f3,
        &g_inv * s(f3) * f2,
    );
    rep.push(
        "reduced: z^(1-t) f2*f3 = (f6*f1 + z f1*f6) - (z^t + z^(1-t)) f2*f2",
        zp(1 - t) * s(f2) * f3,
        s(f6) * f1 + &z * s(f1) * f6 - &zt_sum * s(f2) * f2,
    );
    rep.push(
        "reduced: (z^t + z^(1-t)) f3*f3 = (f7*f1 + z f1*f7) + 4(z^t + z^(1-t)) f2*f2",
        &zt_sum * s(f3) * f3,
        s(f7) * f1 + &z * s(f1) * f7 + &four * &zt_sum * s(f2) * f2,
    );

    let f1_gap = f1 - &zt_sum * f6;
    rep.push("f1 = (z^t + z^(1-t)) f6", f1.clone(), &zt_sum * f6);
    rep.push(
        "(f1 - (z^t + z^(1-t)) f6)(f1* - (z^-t + z^(t-1)) f6*) = 0",
        &f1_gap * (s(f1) - (zp(-t) + zp(t - 1)) * s(f6)),
        Laurent::zero(d),
    );
    rep.push("f3 = (1 + z^(2t-1)) f2", f3.clone(), (&one + &g_inv) * f2);

    rep.push("final: f7*f7 = 1", s(f7) * f7, one.clone());
    rep.push(
        "final: z^(2t-1)(1 - z^(1-2t))^2 f6*f6 = f7*f6 + f6*f7",
        &g_inv * pow(&one_minus_g, 2) * s(f6) * f6,
        s(f7) * f6 + s(f6) * f7,
    );
    rep.push("final: f2*f2 = f6*f6", s(f2) * f2, s(f6) * f6);

    let f7_gap = f7 - &g_inv * pow(&one_minus_g, 2) * f6;
    let f7_gap_star = s(f7) - &g * pow(&(&one - &g_inv), 2) * s(f6);
    rep.push(
        "(f7 - z^(2t-1)(1 - z^(1-2t))^2 f6)(f7* - z^(1-2t)(1 - z^(2t-1))^2 f6*) = 1",
        &f7_gap * &f7_gap_star,
        one.clone(),
    );

    rep.push("f2 = z^w f6", f2.clone(), zp(w) * f6);

    let neg_g_pow = pow(&-&g, dd);
    rep.push(
        "(1 - g)^d = 1 + (-g)^d",
        pow(&one_minus_g, dd),
        &one + &neg_g_pow,
    );
    rep.push(
        "(1 - g)^2 f6 = (1 - g)^d",
        pow(&one_minus_g, 2) * f6,
        pow(&one_minus_g, dd),
    );
    rep.push(
        "f7 - z^(2t-1)(1 - g)^2 f6 = f7 - z^(2t-1) - z^(2t-1)(-g)^d",
        f7_gap.clone(),
        f7 - &g_inv - &g_inv * &neg_g_pow,
    );
    rep.push("f6 = (1 - g)^(d-2)", f6.clone(), pow(&one_minus_g, dd - 2));
    rep.push("f7 = z^(2t-1)", f7.clone(), g_inv.clone());

    rep.monomials
        .push(("f7 is a monomial", f7.is_monomial().is_some()));
    rep.monomials.push((
        "f7 - z^(2t-1)(1 - g)^2 f6 is a monomial",
        f7_gap.is_monomial().is_some(),
    ));
    rep
}
