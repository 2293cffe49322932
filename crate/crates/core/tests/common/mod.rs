#![allow(dead_code)]

use kaplansky_core::{ExpVec, GroupRingElem, Laurent, PrimeChar, Role};
use proptest::prelude::*;
use rand::Rng;

pub const SMALL_PRIMES: [u64; 4] = [2, 3, 5, 7];

pub fn pc(d: u64) -> PrimeChar {
    PrimeChar::new(d).unwrap()
}

pub fn laurent_in(d: PrimeChar, max_terms: usize, span: i32) -> impl Strategy<Value = Laurent> {
    prop::collection::vec(
        ((-span..=span, -span..=span, -span..=span), -20i64..20),
        0..=max_terms,
    )
    .prop_map(move |terms| Laurent::make(d, terms))
}

pub fn element_in(
    d: PrimeChar,
    max_terms: usize,
    span: i32,
) -> impl Strategy<Value = GroupRingElem> {
    let l = || laurent_in(d, max_terms, span);
    (l(), l(), l(), l())
        .prop_map(move |(p, q, r, s)| GroupRingElem::from_components(d, p, q, r, s).unwrap())
}

pub fn any_prime() -> impl Strategy<Value = PrimeChar> {
    prop::sample::select(SMALL_PRIMES.to_vec()).prop_map(pc)
}

/// Random element whose four components together have at most `max_terms`
/// terms, exponents in `[-span, span]`.
pub fn random_element<R: Rng>(
    rng: &mut R,
    d: PrimeChar,
    max_terms: usize,
    span: i32,
) -> GroupRingElem {
    let mut parts: [Vec<(ExpVec, i64)>; 4] = Default::default();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let e = ExpVec::new(
            rng.gen_range(-span..=span),
            rng.gen_range(-span..=span),
            rng.gen_range(-span..=span),
        );
        parts[rng.gen_range(0..4)].push((e, rng.gen_range(1..d.get() as i64 + 1)));
    }
    let [p, q, r, s] = parts.map(|t| Laurent::make(d, t));
    GroupRingElem::from_components(d, p, q, r, s).unwrap()
}

/// Random component satisfying the xy-identity of `role`, exponents in
/// `[-1, 1]^3`.
pub fn random_symmetric<R: Rng>(rng: &mut R, d: PrimeChar, role: Role, density: f64) -> Laurent {
    let mut terms = Vec::new();
    for i in -1..=1 {
        for j in -1..=1 {
            for k in -1..=1 {
                let m = ExpVec::new(i, j, k);
                let partner = role.partner(m);
                let inside = [partner.i, partner.j].iter().all(|v| (-1..=1).contains(v));
                if !inside || partner < m || !rng.gen_bool(density) {
                    continue;
                }
                let c = rng.gen_range(1..d.get() as i64);
                terms.push((m, c));
                if partner != m {
                    terms.push((partner, c));
                }
            }
        }
    }
    Laurent::make(d, terms)
}
