//! Exhaustive enumerators.
//!
//! Two independent polyomino generators are kept on purpose:
//!
//! * growth by cell addition from the unit cell with canonical-form dedup
//!   (area-limited), and
//! * a per-bounding-box bitmask scan (semi-perimeter-limited, also usable
//!   area-limited), which doubles as the test oracle for the first.
//!
//! Both identify translations by construction and never identify rotations
//! or reflections. Output order is canonical: `(rows, cols, bits)` with bits
//! read row-major from the top row down.

use crate::matrix::{BinaryMatrix, Permutation};
use crate::poly::Polyomino;
use rayon::prelude::*;
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("requested bound {requested} exceeds the configured cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
}

/// Hard caps; the defaults are desk-scale.
#[derive(Debug, Clone)]
pub struct Caps {
    pub max_area: usize,
    pub max_sp: usize,
    pub max_perm_n: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_area: 14,
            max_sp: 14,
            max_perm_n: 10,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Limit {
    ByArea(usize),
    BySemiPerimeter(usize),
}

/// A polyomino inside a fixed bounding box, packed into a `u128`.
///
/// Bit layout: reading the box row-major from the top-left corner, position
/// `p` lives at bit `w*h - 1 - p`. Ascending `u128` order over masks is then
/// exactly the canonical bits order.
#[derive(Clone, Copy)]
struct BoxMask {
    w: u32,
    h: u32,
    mask: u128,
}

impl BoxMask {
    #[inline]
    fn col_mask(w: u32, h: u32, c: u32) -> u128 {
        // column c (0 = leftmost); bit for row r (0 = top): wh-1 - (r*w + c)
        let mut m = 0u128;
        for r in 0..h {
            m |= 1u128 << (w * h - 1 - (r * w + c));
        }
        m
    }

    fn to_polyomino(&self) -> Polyomino {
        let (w, h) = (self.w as usize, self.h as usize);
        let mut m = BinaryMatrix::new(h, w);
        for r in 0..h {
            for c in 0..w {
                if self.mask >> (w * h - 1 - (r * w + c)) & 1 == 1 {
                    // r = 0 is the top row, i.e. matrix row h - r
                    m.set(h - r, c + 1, true);
                }
            }
        }
        Polyomino::validate(m).expect("box-scan candidates are valid by construction")
    }
}

/// Column-mask table reused across one box scan.
struct BoxScan {
    w: u32,
    h: u32,
    not_right_col: u128,
    not_left_col: u128,
}

impl BoxScan {
    fn new(w: u32, h: u32) -> Self {
        BoxScan {
            w,
            h,
            not_right_col: !BoxMask::col_mask(w, h, w - 1),
            not_left_col: !BoxMask::col_mask(w, h, 0),
        }
    }

    #[inline]
    fn ok(&self, k: u128) -> bool {
        let (w, h) = (self.w, self.h);
        // spanning: bottom row, top row, left column, right column nonempty
        if k & ((1u128 << w) - 1) == 0 || k >> (w * (h - 1)) == 0 {
            return false;
        }
        if k & !self.not_left_col == 0 || k & !self.not_right_col == 0 {
            return false;
        }
        // connectivity
        let mut cur = k & k.wrapping_neg();
        loop {
            let spread = cur
                | ((cur << 1) & self.not_right_col)
                | ((cur >> 1) & self.not_left_col)
                | (cur << w)
                | (cur >> w);
            let next = spread & k;
            if next == cur {
                return cur == k;
            }
            cur = next;
        }
    }
}

/// Visit, in canonical order, every polyomino whose bounding box is exactly
/// `h` rows by `w` cols. `w*h` must be at most 127.
fn scan_box<F: FnMut(Polyomino)>(h: u32, w: u32, mut f: F) {
    let scan = BoxScan::new(w, h);
    let total = 1u128 << (w * h);
    let mut k = 1u128;
    while k < total {
        if scan.ok(k) {
            f(BoxMask { w, h, mask: k }.to_polyomino());
        }
        k += 1;
    }
}

/// Boxes `(rows, cols)` with `rows + cols <= max_sp`, in canonical order.
fn sp_boxes(max_sp: usize) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for rows in 1..max_sp {
        for cols in 1..=(max_sp - rows) {
            out.push((rows as u32, cols as u32));
        }
    }
    out
}

/// Parallel fold over all polyominoes with semi-perimeter at most `max_sp`.
///
/// Each bounding box is scanned independently; per-box accumulators are
/// merged in canonical box order, so the result is deterministic regardless
/// of the parallelism degree.
pub fn par_fold_sp<T, I, F, M>(max_sp: usize, init: I, fold: F, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync,
    F: Fn(&mut T, &Polyomino) + Sync,
    M: Fn(T, T) -> T,
{
    let per_box: Vec<T> = sp_boxes(max_sp)
        .into_par_iter()
        .map(|(h, w)| {
            let mut acc = init();
            scan_box(h, w, |p| fold(&mut acc, &p));
            acc
        })
        .collect();
    per_box.into_iter().fold(init(), merge)
}

/// Sequential canonical-order stream of all polyominoes with `sp <= max_sp`.
pub fn for_each_sp<F: FnMut(Polyomino)>(max_sp: usize, mut f: F) {
    for (h, w) in sp_boxes(max_sp) {
        scan_box(h, w, &mut f);
    }
}

fn grow_layers(max_area: usize) -> Vec<HashSet<Vec<(i8, i8)>>> {
    let mut layers: Vec<HashSet<Vec<(i8, i8)>>> = Vec::with_capacity(max_area);
    let mut layer: HashSet<Vec<(i8, i8)>> = HashSet::new();
    layer.insert(vec![(0, 0)]);
    layers.push(layer);
    for _ in 1..max_area {
        let mut next: HashSet<Vec<(i8, i8)>> = HashSet::new();
        for cells in layers.last().unwrap() {
            let occupied: HashSet<(i8, i8)> = cells.iter().copied().collect();
            for &(r, c) in cells {
                for (dr, dc) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                    let cand = (r + dr, c + dc);
                    if occupied.contains(&cand) {
                        continue;
                    }
                    let mut grown: Vec<(i8, i8)> = cells.clone();
                    grown.push(cand);
                    let min_r = grown.iter().map(|x| x.0).min().unwrap();
                    let min_c = grown.iter().map(|x| x.1).min().unwrap();
                    for cell in grown.iter_mut() {
                        cell.0 -= min_r;
                        cell.1 -= min_c;
                    }
                    grown.sort_unstable();
                    next.insert(grown);
                }
            }
        }
        layers.push(next);
    }
    layers
}

/// Growth enumeration: all polyominoes of exactly the given area, produced by
/// repeated single-cell addition with canonical-form dedup, sorted canonically.
pub fn grow_by_area(area: usize) -> Vec<Polyomino> {
    let layers = grow_layers(area);
    let mut out: Vec<Polyomino> = layers
        .last()
        .unwrap()
        .iter()
        .map(|cells| cells_to_poly(cells))
        .collect();
    out.sort();
    out
}

fn cells_to_poly(cells: &[(i8, i8)]) -> Polyomino {
    let h = cells.iter().map(|c| c.0).max().unwrap() as usize + 1;
    let w = cells.iter().map(|c| c.1).max().unwrap() as usize + 1;
    let mut m = BinaryMatrix::new(h, w);
    for &(r, c) in cells {
        m.set(r as usize + 1, c as usize + 1, true);
    }
    Polyomino::validate(m).expect("grown cell sets are connected by construction")
}

/// Independent oracle for `grow_by_area`: per-box scan of all masks with the
/// given popcount (Gosper's hack), connectivity- and spanning-checked.
pub fn scan_by_area(area: usize) -> Vec<Polyomino> {
    let mut boxes = Vec::new();
    for h in 1..=area {
        for w in 1..=(area + 1 - h) {
            if w * h >= area {
                boxes.push((h as u32, w as u32));
            }
        }
    }
    let mut per_box: Vec<Vec<Polyomino>> = boxes
        .into_par_iter()
        .map(|(h, w)| {
            let scan = BoxScan::new(w, h);
            let bits = w * h;
            let mut out = Vec::new();
            if bits as usize == area {
                let k = (1u128 << bits) - 1;
                if scan.ok(k) {
                    out.push(BoxMask { w, h, mask: k }.to_polyomino());
                }
                return out;
            }
            // Gosper's hack over `bits`-bit numbers of popcount `area`
            let limit = 1u128 << bits;
            let mut k: u128 = (1u128 << area) - 1;
            while k < limit {
                if scan.ok(k) {
                    out.push(BoxMask { w, h, mask: k }.to_polyomino());
                }
                let c = k & k.wrapping_neg();
                let r = k + c;
                k = (((r ^ k) >> 2) / c) | r;
            }
            out
        })
        .collect();
    let mut out: Vec<Polyomino> = per_box.drain(..).flatten().collect();
    out.sort();
    out
}

/// All translation-distinct polyominoes within the limit, canonical order.
pub fn enumerate_polyominoes(limit: Limit, caps: &Caps) -> Result<Vec<Polyomino>, EnumError> {
    match limit {
        Limit::ByArea(a) => {
            if a > caps.max_area {
                return Err(EnumError::CapExceeded {
                    requested: a,
                    cap: caps.max_area,
                });
            }
            let mut all: Vec<Polyomino> = grow_layers(a)
                .iter()
                .flat_map(|layer| layer.iter().map(|cells| cells_to_poly(cells)))
                .collect();
            all.sort();
            Ok(all)
        }
        Limit::BySemiPerimeter(s) => {
            if s > caps.max_sp {
                return Err(EnumError::CapExceeded {
                    requested: s,
                    cap: caps.max_sp,
                });
            }
            let mut out = Vec::new();
            for_each_sp(s, |p| out.push(p));
            Ok(out)
        }
    }
}

/// All `n!` permutations in lexicographic order.
pub fn enumerate_permutations(n: usize, caps: &Caps) -> Result<Vec<Permutation>, EnumError> {
    if n > caps.max_perm_n {
        return Err(EnumError::CapExceeded {
            requested: n,
            cap: caps.max_perm_n,
        });
    }
    let mut out = Vec::new();
    let mut v: Vec<u8> = (1..=n as u8).collect();
    loop {
        out.push(Permutation::new(v.clone()).unwrap());
        // next permutation in lexicographic order
        let Some(i) = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
            break;
        };
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
    }
    Ok(out)
}

/// Fast dedicated generator of parallelogram polyominoes (monotone top and
/// bottom column profiles), used where scanning every polyomino would waste
/// time. Canonical order.
pub fn parallelograms_by_sp(max_sp: usize) -> Vec<Polyomino> {
    let mut out = Vec::new();
    for h in 1..max_sp {
        for w in 1..=(max_sp - h) {
            let mut top = vec![0usize; w];
            let mut bot = vec![0usize; w];
            gen_profiles(h, w, 0, &mut top, &mut bot, &mut out);
        }
    }
    out.sort();
    out
}

fn gen_profiles(
    h: usize,
    w: usize,
    x: usize,
    top: &mut Vec<usize>,
    bot: &mut Vec<usize>,
    out: &mut Vec<Polyomino>,
) {
    if x == w {
        if top[w - 1] == h {
            let mut m = BinaryMatrix::new(h, w);
            for c in 0..w {
                for r in bot[c]..=top[c] {
                    m.set(r, c + 1, true);
                }
            }
            out.push(Polyomino::validate(m).expect("profile construction is valid"));
        }
        return;
    }
    let (t_min, b_min, b_max_conn) = if x == 0 {
        (1, 1, 1) // bot[0] must be 1
    } else {
        (top[x - 1], bot[x - 1], top[x - 1])
    };
    for t in t_min..=h {
        let b_hi = b_max_conn.min(t);
        for b in b_min..=b_hi {
            if x == 0 && b != 1 {
                continue;
            }
            top[x] = t;
            bot[x] = b;
            gen_profiles(h, w, x + 1, top, bot, out);
        }
    }
}
