//! Low-degree searches for units via a meet-in-the-middle join on the reduced
//! two-equation system.
//!
//! For xy-symmetric `(p, q, r, s)`, the adjoint inverts the element
//! exactly when
//!
//! ```text
//! pp_yz + x·ss_yz   = rr_yz + x·qq_yz + x
//! ps_yz + yz·p_yz·s = rq_yz + yz·qr_yz
//! ```
//!
//! The left sides depend only on `(p, s)` and the right sides only on
//! `(q, r)`, so both halves are enumerated independently and joined on equal
//! key pairs. Every joined quadruple is re-verified before it is reported.
//!
//! * [`search_units`] enumerates symmetric candidates with exponents in a box.
//! * [`ansatz_search`] enumerates the seven `z`-only polynomials of the
//!   ansatz, which keeps odd characteristics tractable.
//!
//! Output is sorted by the canonical JSON of each hit, so serial and parallel
//! runs produce byte-identical result files.

mod family;
mod join;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::SearchError;
use crate::field::PrimeChar;
use crate::groupring::{
    check_xy_symmetry, is_trivial, reduced_pair_keys, reduced_pair_keys_qr, verify_unit,
    ElementWire, GroupRingElem,
};
use crate::laurent::{ExpVec, Laurent};

pub use family::{enumerate_symmetric, Role};

use family::{ansatz_family, symmetric_family};
use join::{join, JoinSide, KeyLayout};

/// Default ceiling on the number of enumerated candidates (both halves).
pub const DEFAULT_MAX_CANDIDATES: u128 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Full,
    Ansatz,
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "full" => Ok(Strategy::Full),
            "ansatz" => Ok(Strategy::Ansatz),
            _ => Err(format!("unknown strategy {s:?}")),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Full => "full",
            Strategy::Ansatz => "ansatz",
        })
    }
}

/// Closed exponent interval `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExpRange {
    pub lo: i32,
    pub hi: i32,
}

impl ExpRange {
    pub const fn new(lo: i32, hi: i32) -> Self {
        ExpRange { lo, hi }
    }

    pub fn contains(&self, e: i32) -> bool {
        self.lo <= e && e <= self.hi
    }
}

impl Serialize for ExpRange {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.lo, self.hi].serialize(s)
    }
}

impl Default for ExpRange {
    fn default() -> Self {
        ExpRange::new(-1, 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBox {
    pub characteristic: PrimeChar,
    pub x: ExpRange,
    pub y: ExpRange,
    pub z: ExpRange,
    pub strategy: Strategy,
}

/// Largest `|exponent|` accepted in a box; keeps key arithmetic far from overflow.
const MAX_BOX_EXPONENT: i32 = 1 << 16;

impl SearchBox {
    pub fn new(
        characteristic: PrimeChar,
        x: ExpRange,
        y: ExpRange,
        z: ExpRange,
        strategy: Strategy,
    ) -> Result<Self, SearchError> {
        for (name, r) in [("x", x), ("y", y), ("z", z)] {
            if r.lo > r.hi {
                return Err(SearchError::InvalidBox(format!(
                    "{name} range [{}, {}] is empty",
                    r.lo, r.hi
                )));
            }
            if r.lo.abs() > MAX_BOX_EXPONENT || r.hi.abs() > MAX_BOX_EXPONENT {
                return Err(SearchError::InvalidBox(format!("{name} range too wide")));
            }
        }
        Ok(SearchBox {
            characteristic,
            x,
            y,
            z,
            strategy,
        })
    }

    /// `[-1, 1]³` with the given strategy.
    pub fn unit_cube(characteristic: PrimeChar, strategy: Strategy) -> Self {
        let r = ExpRange::default();
        SearchBox {
            characteristic,
            x: r,
            y: r,
            z: r,
            strategy,
        }
    }

    pub fn contains(&self, e: ExpVec) -> bool {
        self.x.contains(e.i) && self.y.contains(e.j) && self.z.contains(e.k)
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Worker threads; `None` uses rayon's default pool.
    pub threads: Option<usize>,
    pub max_candidates: u128,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            threads: None,
            max_candidates: DEFAULT_MAX_CANDIDATES,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    pub element: GroupRingElem,
    pub ps_key: (Laurent, Laurent),
    pub qr_key: (Laurent, Laurent),
    pub canonical: bool,
}

impl SearchHit {
    pub fn new(element: GroupRingElem) -> Self {
        let ps_key = reduced_pair_keys(element.p(), element.s());
        let qr_key = reduced_pair_keys_qr(element.q(), element.r());
        SearchHit {
            element,
            ps_key,
            qr_key,
            canonical: false,
        }
    }
}

/// Scales `u` so its leading coefficient is 1. The leading term is the first
/// term of the first nonzero component in `p, q, r, s` order.
pub fn canonical_element(u: &GroupRingElem) -> GroupRingElem {
    let lead = u
        .components()
        .into_iter()
        .find_map(|c| c.terms().next().map(|(_, c)| c));
    match lead {
        Some(c) => {
            let inv = c.fp_inv().expect("stored coefficients are nonzero");
            u.scale(inv.value() as i64)
        }
        None => u.clone(),
    }
}

pub fn canonicalize(hit: &SearchHit) -> SearchHit {
    let element = canonical_element(&hit.element);
    SearchHit {
        canonical: true,
        ..SearchHit::new(element)
    }
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub search_box: SearchBox,
    /// Canonical, deduplicated, sorted by canonical JSON.
    pub hits: Vec<SearchHit>,
    /// Joined quadruples before filtering and deduplication.
    pub raw_matches: usize,
    pub trivial_discarded: usize,
    /// Joined quadruples the adjoint failed to invert. Expected to be zero.
    pub unverified_discarded: usize,
    pub candidates: u128,
}

#[derive(Serialize)]
struct BoxWire {
    x: ExpRange,
    y: ExpRange,
    z: ExpRange,
}

#[derive(Serialize)]
struct MetadataWire {
    characteristic: u32,
    strategy: Strategy,
    #[serde(rename = "box")]
    search_box: BoxWire,
    hit_count: usize,
    raw_matches: usize,
    trivial_discarded: usize,
    unverified_discarded: usize,
}

#[derive(Serialize)]
struct ResultWire {
    metadata: MetadataWire,
    hits: Vec<ElementWire>,
}

impl SearchReport {
    /// The result file: a metadata header followed by the hit elements.
    pub fn to_json(&self) -> String {
        let bx = &self.search_box;
        let wire = ResultWire {
            metadata: MetadataWire {
                characteristic: bx.characteristic.get(),
                strategy: bx.strategy,
                search_box: BoxWire {
                    x: bx.x,
                    y: bx.y,
                    z: bx.z,
                },
                hit_count: self.hits.len(),
                raw_matches: self.raw_matches,
                trivial_discarded: self.trivial_discarded,
                unverified_discarded: self.unverified_discarded,
            },
            hits: self.hits.iter().map(|h| h.element.to_wire()).collect(),
        };
        let mut s = serde_json::to_string_pretty(&wire).expect("result serialization cannot fail");
        s.push('\n');
        s
    }
}

/// Reads the hit elements back from a result file.
pub fn read_result_hits(json: &str) -> Result<Vec<GroupRingElem>, crate::AlgebraError> {
    #[derive(Deserialize)]
    struct Hits {
        hits: Vec<ElementWire>,
    }
    let parsed: Hits =
        serde_json::from_str(json).map_err(|e| crate::AlgebraError::Malformed(e.to_string()))?;
    parsed.hits.iter().map(GroupRingElem::from_wire).collect()
}

fn sides_for(bx: &SearchBox) -> (JoinSide, JoinSide) {
    match bx.strategy {
        Strategy::Full => (
            JoinSide {
                a: symmetric_family(Role::P, bx),
                b: symmetric_family(Role::S, bx),
                add_x: false,
            },
            JoinSide {
                a: symmetric_family(Role::R, bx),
                b: symmetric_family(Role::Q, bx),
                add_x: true,
            },
        ),
        Strategy::Ansatz => (
            JoinSide {
                a: ansatz_family(&[1], bx),
                b: ansatz_family(&[6, 7], bx),
                add_x: false,
            },
            JoinSide {
                a: ansatz_family(&[4, 5], bx),
                b: ansatz_family(&[2, 3], bx),
                add_x: true,
            },
        ),
    }
}

/// Number of candidates both halves of the join would enumerate.
pub fn estimate_candidates(bx: &SearchBox) -> u128 {
    let (left, right) = sides_for(bx);
    left.count().saturating_add(right.count())
}

fn run(bx: &SearchBox, config: &SearchConfig) -> Result<SearchReport, SearchError> {
    let d = bx.characteristic;
    if d.get() >= 256 {
        return Err(SearchError::CharacteristicTooLarge(d.get()));
    }
    let (left, right) = sides_for(bx);
    let candidates = left.count().saturating_add(right.count());
    if candidates > config.max_candidates {
        return Err(SearchError::Infeasible {
            estimate: candidates,
            ceiling: config.max_candidates,
        });
    }

    let work = || {
        let layout = KeyLayout::new(d, [&left, &right]);
        join(&left, &right, &layout)
    };
    let matches = match config.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| SearchError::ThreadPool(e.to_string()))?
            .install(work),
        None => work(),
    };

    let mut report = SearchReport {
        search_box: bx.clone(),
        hits: Vec::new(),
        raw_matches: matches.len(),
        trivial_discarded: 0,
        unverified_discarded: 0,
        candidates,
    };
    let mut unique: BTreeMap<String, SearchHit> = BTreeMap::new();
    for m in matches {
        let p = left.a.element(m.left.0);
        let s = left.b.element(m.left.1);
        let r = right.a.element(m.right.0);
        let q = right.b.element(m.right.1);
        let u = GroupRingElem::from_components(d, p, q, r, s)?;
        if is_trivial(&u) {
            report.trivial_discarded += 1;
            continue;
        }
        if !check_xy_symmetry(&u) || !verify_unit(&u).is_verified() {
            report.unverified_discarded += 1;
            continue;
        }
        let hit = canonicalize(&SearchHit::new(u));
        unique.entry(hit.element.to_json()).or_insert(hit);
    }
    report.hits = unique.into_values().collect();
    Ok(report)
}

/// Full search over xy-symmetric candidates with exponents in the box.
pub fn search_units(bx: &SearchBox, config: &SearchConfig) -> Result<SearchReport, SearchError> {
    if bx.strategy != Strategy::Full {
        return Err(SearchError::InvalidBox(
            "search_units needs the full strategy".into(),
        ));
    }
    run(bx, config)
}

/// Search over the seven `z`-only ansatz polynomials with `z` exponents in
/// the box's `z` range; the `x` and `y` ranges are ignored.
pub fn ansatz_search(bx: &SearchBox, config: &SearchConfig) -> Result<SearchReport, SearchError> {
    if bx.strategy != Strategy::Ansatz {
        return Err(SearchError::InvalidBox(
            "ansatz_search needs the ansatz strategy".into(),
        ));
    }
    run(bx, config)
}

/// Dispatches on the box's strategy.
pub fn search(bx: &SearchBox, config: &SearchConfig) -> Result<SearchReport, SearchError> {
    run(bx, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::{family_unit, gardam_unit, FamilyParams};

    fn pc(d: u64) -> PrimeChar {
        PrimeChar::new(d).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        let u = gardam_unit();
        let hit = SearchHit::new(u.clone());
        assert_eq!(canonicalize(&hit).element, u);

        let v = family_unit(FamilyParams::new(pc(3), 1, 0).unwrap());
        let a = canonicalize(&SearchHit::new(v.clone()));
        let b = canonicalize(&SearchHit::new(v.scale(2)));
        assert_eq!(a, b);
        assert!(a.canonical);
        assert_eq!(canonicalize(&a), a);
    }

    #[test]
    fn rejects_bad_boxes() {
        let bad = SearchBox::new(
            pc(2),
            ExpRange::new(1, 0),
            ExpRange::default(),
            ExpRange::default(),
            Strategy::Full,
        );
        assert!(matches!(bad, Err(SearchError::InvalidBox(_))));
    }

    #[test]
    fn constant_box_has_no_hits() {
        let r = ExpRange::new(0, 0);
        let bx = SearchBox::new(pc(2), r, r, r, Strategy::Full).unwrap();
        let rep = search_units(&bx, &SearchConfig::default()).unwrap();
        assert!(rep.hits.is_empty());
    }

    #[test]
    fn infeasible_box_is_refused() {
        let bx = SearchBox::unit_cube(pc(3), Strategy::Full);
        match search_units(&bx, &SearchConfig::default()) {
            Err(SearchError::Infeasible { estimate, ceiling }) => {
                assert!(estimate > ceiling);
                assert_eq!(estimate, 3u128.pow(6) * 3u128.pow(15) + 3u128.pow(18));
            }
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn strategy_mismatch_is_an_error() {
        let bx = SearchBox::unit_cube(pc(2), Strategy::Ansatz);
        assert!(search_units(&bx, &SearchConfig::default()).is_err());
    }

    #[test]
    fn small_ansatz_search_contains_family_member() {
        let bx = SearchBox::unit_cube(pc(2), Strategy::Ansatz);
        let rep = ansatz_search(&bx, &SearchConfig::default()).unwrap();
        let target = canonical_element(&family_unit(FamilyParams::new(pc(2), 0, 0).unwrap()));
        assert!(rep.hits.iter().any(|h| h.element == target));
        for h in &rep.hits {
            assert_eq!(h.ps_key, h.qr_key);
            assert!(verify_unit(&h.element).is_verified());
        }
    }

    #[test]
    fn ansatz_constant_slice_has_no_hits() {
        let r = ExpRange::new(0, 0);
        let bx = SearchBox::new(pc(3), r, r, r, Strategy::Ansatz).unwrap();
        let rep = ansatz_search(&bx, &SearchConfig::default()).unwrap();
        assert!(rep.hits.is_empty(), "{} hits", rep.hits.len());
    }

    #[test]
    fn char2_family_member_is_a_variant_of_the_unit() {
        use crate::units::variant_table;
        let f = canonical_element(&family_unit(FamilyParams::new(pc(2), 0, 0).unwrap()));
        let table: Vec<_> = variant_table(&gardam_unit())
            .iter()
            .map(canonical_element)
            .collect();
        assert_ne!(f, canonical_element(&gardam_unit()));
        // ps variant 2 over qr variant 3
        assert_eq!(table.iter().position(|v| *v == f), Some(2 * 6 + 3));
    }
}
