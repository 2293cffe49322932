//! Shared inputs for the benchmarks.

use kaplansky_core::{family_unit, FamilyParams, GroupRingElem, Laurent, PrimeChar};

pub fn prime(d: u64) -> PrimeChar {
    PrimeChar::new(d).expect("benchmark characteristics are prime")
}

/// Dense polynomial with every exponent in `[-n, n]^3`.
pub fn dense_laurent(d: PrimeChar, n: i32) -> Laurent {
    let mut terms = Vec::new();
    for i in -n..=n {
        for j in -n..=n {
            for k in -n..=n {
                terms.push(((i, j, k), (i * 7 + j * 3 + k + 1) as i64));
            }
        }
    }
    Laurent::make(d, terms)
}

pub fn family_member(d: u64, t: i32, w: i32) -> GroupRingElem {
    family_unit(FamilyParams::new(prime(d), t, w).expect("small parameters"))
}
