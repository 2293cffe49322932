//! Meet-in-the-middle join on the reduced two-equation keys.
//!
//! Each side of the join is a pair of candidate families `(a, b)` with keys
//!
//! ```text
//! key1(a, b) = a·a_yz + x·b·b_yz [+ x]
//! key2(a, b) = a·b_yz + yz·a_yz·b
//! ```
//!
//! which covers `(p, s)` with `a = p, b = s` and `(q, r)` with `a = r, b = q`
//! (the latter adding the constant `x`). `key1` splits into a part per
//! family and `key2` is bilinear, so for a fixed outer candidate the inner
//! family is swept in odometer order with one vector addition per changed
//! digit. Keys live on a fixed dense exponent grid and are compared exactly.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::field::PrimeChar;
use crate::laurent::{ExpVec, Laurent, VarSet};

use super::family::LinearFamily;

/// Axis-aligned exponent box, `None` when empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Bounds(Option<([i32; 3], [i32; 3])>);

impl Bounds {
    const EMPTY: Bounds = Bounds(None);

    fn point(e: ExpVec) -> Bounds {
        Bounds(Some((e.as_array(), e.as_array())))
    }

    fn of_family(fam: &LinearFamily) -> Bounds {
        fam.basis()
            .iter()
            .flat_map(|b| b.terms().map(|(e, _)| e))
            .fold(Bounds::EMPTY, |acc, e| acc.union(Bounds::point(e)))
    }

    fn union(self, other: Bounds) -> Bounds {
        match (self.0, other.0) {
            (None, b) | (b, None) => Bounds(b),
            (Some((lo1, hi1)), Some((lo2, hi2))) => Bounds(Some((
                std::array::from_fn(|n| lo1[n].min(lo2[n])),
                std::array::from_fn(|n| hi1[n].max(hi2[n])),
            ))),
        }
    }

    /// Bounds of every product of a term from `self` and one from `other`.
    fn minkowski(self, other: Bounds) -> Bounds {
        match (self.0, other.0) {
            (Some((lo1, hi1)), Some((lo2, hi2))) => Bounds(Some((
                std::array::from_fn(|n| lo1[n] + lo2[n]),
                std::array::from_fn(|n| hi1[n] + hi2[n]),
            ))),
            _ => Bounds::EMPTY,
        }
    }

    fn invert_yz(self) -> Bounds {
        Bounds(
            self.0
                .map(|(lo, hi)| ([lo[0], -hi[1], -hi[2]], [hi[0], -lo[1], -lo[2]])),
        )
    }

    fn shift(self, by: [i32; 3]) -> Bounds {
        Bounds(self.0.map(|(lo, hi)| {
            (
                std::array::from_fn(|n| lo[n] + by[n]),
                std::array::from_fn(|n| hi[n] + by[n]),
            )
        }))
    }
}

/// Dense layout of an exponent box.
#[derive(Clone, Debug)]
pub(crate) struct Grid {
    lo: [i32; 3],
    dims: [usize; 3],
}

impl Grid {
    fn new(b: Bounds) -> Grid {
        match b.0 {
            None => Grid {
                lo: [0; 3],
                dims: [0; 3],
            },
            Some((lo, hi)) => Grid {
                lo,
                dims: std::array::from_fn(|n| (hi[n] - lo[n] + 1) as usize),
            },
        }
    }

    fn len(&self) -> usize {
        self.dims.iter().product()
    }

    fn index(&self, e: ExpVec) -> usize {
        let e = e.as_array();
        let off: [usize; 3] = std::array::from_fn(|n| {
            let o = e[n] - self.lo[n];
            debug_assert!(
                o >= 0 && (o as usize) < self.dims[n],
                "exponent outside key grid"
            );
            o as usize
        });
        (off[0] * self.dims[1] + off[1]) * self.dims[2] + off[2]
    }

    /// Adds `f` into `out`, which has this grid's length.
    fn accumulate(&self, f: &Laurent, d: u16, out: &mut [u8]) {
        for &(e, c) in f.raw_terms() {
            let idx = self.index(e);
            out[idx] = add_mod(out[idx], c as u8, d);
        }
    }

    fn dense(&self, f: &Laurent, d: u16) -> Vec<u8> {
        let mut out = vec![0u8; self.len()];
        self.accumulate(f, d, &mut out);
        out
    }
}

#[inline(always)]
fn add_mod(a: u8, b: u8, d: u16) -> u8 {
    let s = a as u16 + b as u16;
    (if s >= d { s - d } else { s }) as u8
}

#[inline]
fn add_into(dst: &mut [u8], src: &[u8], d: u16) {
    for (a, &b) in dst.iter_mut().zip(src) {
        *a = add_mod(*a, b, d);
    }
}

/// One side of the join.
pub(crate) struct JoinSide {
    pub a: LinearFamily,
    pub b: LinearFamily,
    pub add_x: bool,
}

impl JoinSide {
    pub(crate) fn count(&self) -> u128 {
        self.a.count().saturating_mul(self.b.count())
    }

    fn key1_bounds(&self) -> Bounds {
        let a = Bounds::of_family(&self.a);
        let b = Bounds::of_family(&self.b);
        let mut out = a
            .minkowski(a.invert_yz())
            .union(b.minkowski(b.invert_yz()).shift([1, 0, 0]));
        if self.add_x {
            out = out.union(Bounds::point(ExpVec::new(1, 0, 0)));
        }
        out
    }

    fn key2_bounds(&self) -> Bounds {
        let a = Bounds::of_family(&self.a);
        let b = Bounds::of_family(&self.b);
        a.minkowski(b.invert_yz())
            .union(a.invert_yz().minkowski(b).shift([0, 1, 1]))
    }

    fn a_part(&self, a: &Laurent) -> Laurent {
        let part = a * a.invert_vars(VarSet::YZ);
        if self.add_x {
            part + Laurent::x(a.characteristic())
        } else {
            part
        }
    }

    fn b_part(b: &Laurent) -> Laurent {
        (b * b.invert_vars(VarSet::YZ)).shift((1, 0, 0))
    }

    fn bilinear(a: &Laurent, b: &Laurent) -> Laurent {
        a * b.invert_vars(VarSet::YZ) + (a.invert_vars(VarSet::YZ) * b).shift((0, 1, 1))
    }
}

/// Key grids shared by both sides of a join.
pub(crate) struct KeyLayout {
    g1: Grid,
    g2: Grid,
    d: u16,
    bits: u32,
}

impl KeyLayout {
    pub(crate) fn new(d: PrimeChar, sides: [&JoinSide; 2]) -> KeyLayout {
        let b1 = sides[0].key1_bounds().union(sides[1].key1_bounds());
        let b2 = sides[0].key2_bounds().union(sides[1].key2_bounds());
        let d = d.get();
        debug_assert!(d < 256);
        KeyLayout {
            g1: Grid::new(b1),
            g2: Grid::new(b2),
            d: d as u16,
            bits: 32 - (d - 1).leading_zeros(),
        }
    }

    /// Bit-packs a dense `key1 ‖ key2` buffer.
    fn pack(&self, dense: &[u8]) -> Box<[u8]> {
        let total_bits = dense.len() * self.bits as usize;
        let mut out = vec![0u8; total_bits.div_ceil(8)];
        let mut acc: u64 = 0;
        let mut filled = 0u32;
        let mut pos = 0usize;
        for &c in dense {
            acc |= (c as u64) << filled;
            filled += self.bits;
            while filled >= 8 {
                out[pos] = acc as u8;
                pos += 1;
                acc >>= 8;
                filled -= 8;
            }
        }
        if filled > 0 {
            out[pos] = acc as u8;
        }
        out.into_boxed_slice()
    }
}

/// Which family of a side is swept by the odometer.
#[derive(Clone, Copy)]
enum InnerIs {
    A,
    B,
}

/// Calls `visit(a_index, b_index, packed_key)` for every candidate of the
/// side whose outer index is `outer`.
fn scan_outer(
    side: &JoinSide,
    layout: &KeyLayout,
    inner_is: InnerIs,
    inner_key1: &[u8],
    outer: u64,
    mut visit: impl FnMut(u64, u64, &[u8]),
) {
    let d = layout.d;
    let n1 = layout.g1.len();
    let n2 = layout.g2.len();
    let (outer_fam, inner_fam) = match inner_is {
        InnerIs::A => (&side.b, &side.a),
        InnerIs::B => (&side.a, &side.b),
    };
    let outer_el = outer_fam.element(outer);
    let outer_key1 = match inner_is {
        InnerIs::A => layout.g1.dense(&JoinSide::b_part(&outer_el), d),
        InnerIs::B => layout.g1.dense(&side.a_part(&outer_el), d),
    };
    let steps: Vec<Vec<u8>> = inner_fam
        .basis()
        .iter()
        .map(|bi| {
            let f = match inner_is {
                InnerIs::A => JoinSide::bilinear(bi, &outer_el),
                InnerIs::B => JoinSide::bilinear(&outer_el, bi),
            };
            layout.g2.dense(&f, d)
        })
        .collect();

    let inner_count = inner_fam.count() as u64;
    let mut digits = vec![0u16; steps.len()];
    let mut scratch = vec![0u8; n1 + n2];
    for inner in 0..inner_count {
        if inner > 0 {
            let mut pos = 0;
            loop {
                add_into(&mut scratch[n1..], &steps[pos], d);
                digits[pos] += 1;
                if digits[pos] == d {
                    digits[pos] = 0;
                    pos += 1;
                } else {
                    break;
                }
            }
        }
        let row = &inner_key1[inner as usize * n1..(inner as usize + 1) * n1];
        for c in 0..n1 {
            scratch[c] = add_mod(outer_key1[c], row[c], d);
        }
        let packed = layout.pack(&scratch);
        match inner_is {
            InnerIs::A => visit(inner, outer, &packed),
            InnerIs::B => visit(outer, inner, &packed),
        }
    }
}

/// Outer/inner split and per-inner key1 parts for one side.
struct Prepared<'a> {
    side: &'a JoinSide,
    inner_is: InnerIs,
    inner_key1: Vec<u8>,
    outer_count: u64,
}

impl<'a> Prepared<'a> {
    fn new(side: &'a JoinSide, layout: &KeyLayout) -> Self {
        let inner_is = if side.a.count() <= side.b.count() {
            InnerIs::A
        } else {
            InnerIs::B
        };
        let (outer_fam, inner_fam) = match inner_is {
            InnerIs::A => (&side.b, &side.a),
            InnerIs::B => (&side.a, &side.b),
        };
        let n1 = layout.g1.len();
        let inner_count = inner_fam.count() as usize;
        let mut inner_key1 = vec![0u8; inner_count * n1];
        inner_key1
            .par_chunks_mut(n1.max(1))
            .enumerate()
            .for_each(|(idx, row)| {
                let el = inner_fam.element(idx as u64);
                let part = match inner_is {
                    InnerIs::A => side.a_part(&el),
                    InnerIs::B => JoinSide::b_part(&el),
                };
                layout.g1.accumulate(&part, layout.d, row);
            });
        Prepared {
            side,
            inner_is,
            inner_key1,
            outer_count: outer_fam.count() as u64,
        }
    }

    fn scan(&self, layout: &KeyLayout, outer: u64, visit: impl FnMut(u64, u64, &[u8])) {
        scan_outer(
            self.side,
            layout,
            self.inner_is,
            &self.inner_key1,
            outer,
            visit,
        );
    }
}

/// A joined pair: `(a, b)` indices on the left side and on the right side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Match {
    pub left: (u64, u64),
    pub right: (u64, u64),
}

/// All pairs of candidates with identical key pairs. Output order depends
/// only on the inputs.
pub(crate) fn join(left: &JoinSide, right: &JoinSide, layout: &KeyLayout) -> Vec<Match> {
    let build_left = left.count() <= right.count();
    let (build, probe) = if build_left {
        (left, right)
    } else {
        (right, left)
    };
    let build_prep = Prepared::new(build, layout);
    let probe_prep = Prepared::new(probe, layout);

    type Row = (Box<[u8]>, (u64, u64));
    let chunks: Vec<Vec<Row>> = (0..build_prep.outer_count)
        .into_par_iter()
        .map(|outer| {
            let mut rows = Vec::new();
            build_prep.scan(layout, outer, |a, b, key| {
                rows.push((Box::from(key), (a, b)))
            });
            rows
        })
        .collect();
    let mut table: HashMap<Box<[u8]>, Vec<(u64, u64)>> = HashMap::new();
    for (key, idx) in chunks.into_iter().flatten() {
        table.entry(key).or_default().push(idx);
    }

    let mut matches: Vec<Match> = (0..probe_prep.outer_count)
        .into_par_iter()
        .flat_map_iter(|outer| {
            let mut found = Vec::new();
            probe_prep.scan(layout, outer, |a, b, key| {
                if let Some(hits) = table.get(key) {
                    for &other in hits {
                        found.push(if build_left {
                            Match {
                                left: other,
                                right: (a, b),
                            }
                        } else {
                            Match {
                                left: (a, b),
                                right: other,
                            }
                        });
                    }
                }
            });
            found
        })
        .collect();
    matches.sort_unstable();
    matches
}
