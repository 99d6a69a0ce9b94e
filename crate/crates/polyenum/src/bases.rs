//! Class algebra over the well-founded posets of permutations and
//! polyominoes under the submatrix order: p-bases, canonical and minimal
//! m-bases, robustness, and meets.
//!
//! Every computation here carries an explicit bound and claims nothing
//! beyond it; the posets contain infinite antichains.

use crate::matrix::{BinaryMatrix, Permutation};
use crate::patterns::{contains_submatrix, submatrix_le};
use crate::poly::Polyomino;
use serde::Serialize;
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BasesError {
    #[error("matrix is not a quasi-permutation matrix")]
    NotQuasiPermutation,
    #[error("bound {requested} exceeds the cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
}

/// A finite set of matrices with its antichain flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSet {
    pub matrices: Vec<BinaryMatrix>,
    pub is_antichain: bool,
}

impl PatternSet {
    pub fn new(mut matrices: Vec<BinaryMatrix>) -> PatternSet {
        matrices.sort();
        matrices.dedup();
        let is_antichain = matrices.iter().enumerate().all(|(i, a)| {
            matrices
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !submatrix_le(a, b))
        });
        PatternSet {
            matrices,
            is_antichain,
        }
    }
}

/// JSON report for basis computations:
/// `{"class":name,"bound":b,"complete":bool,"basis":[matrix records]}`.
#[derive(Debug, Clone, Serialize)]
pub struct BasisReport {
    pub class: String,
    pub bound: usize,
    pub complete: bool,
    pub basis: Vec<BinaryMatrix>,
}

/// A bounded universe of same-kind objects (all permutations of size <= n,
/// or all polyominoes of sp <= s) together with the class members among them.
#[derive(Debug, Clone)]
pub struct ClassUniverse {
    pub universe: Vec<BinaryMatrix>,
    pub members: Vec<BinaryMatrix>,
    pub kind: ObjectKind,
    pub bound: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObjectKind {
    Permutations,
    Polyominoes,
}

impl ClassUniverse {
    pub fn permutations(bound_n: usize, member: impl Fn(&Permutation) -> bool) -> ClassUniverse {
        let caps = crate::enumerate::Caps {
            max_perm_n: bound_n.max(10),
            ..Default::default()
        };
        let mut universe = Vec::new();
        let mut members = Vec::new();
        for n in 1..=bound_n {
            for p in crate::enumerate::enumerate_permutations(n, &caps).unwrap() {
                let m = p.to_matrix();
                if member(&p) {
                    members.push(m.clone());
                }
                universe.push(m);
            }
        }
        ClassUniverse {
            universe,
            members,
            kind: ObjectKind::Permutations,
            bound: bound_n,
        }
    }

    pub fn polyominoes(bound_sp: usize, member: impl Fn(&Polyomino) -> bool) -> ClassUniverse {
        let mut universe = Vec::new();
        let mut members = Vec::new();
        crate::enumerate::for_each_sp(bound_sp, |p| {
            let m = p.matrix().clone();
            if member(&p) {
                members.push(m.clone());
            }
            universe.push(m);
        });
        ClassUniverse {
            universe,
            members,
            kind: ObjectKind::Polyominoes,
            bound: bound_sp,
        }
    }

    /// Membership in C+: is `m` a submatrix of some class member (within the
    /// bound)?
    pub fn in_c_plus(&self, m: &BinaryMatrix) -> bool {
        self.members.iter().any(|p| contains_submatrix(p, m))
    }

    /// The same-kind objects in the universe avoiding every matrix in `set`.
    pub fn av_set(&self, set: &[BinaryMatrix]) -> Vec<BinaryMatrix> {
        self.universe
            .iter()
            .filter(|u| !set.iter().any(|m| contains_submatrix(u, m)))
            .cloned()
            .collect()
    }

    /// The p-basis within the bound: minimal same-kind non-members.
    /// Non-members are visited by increasing size; an object is minimal iff
    /// no smaller minimal non-member sits below it (sound by induction since
    /// proper submatrices stay inside the bound).
    pub fn p_basis(&self) -> Vec<BinaryMatrix> {
        let member_set: HashSet<&BinaryMatrix> = self.members.iter().collect();
        let mut by_size: Vec<&BinaryMatrix> = self
            .universe
            .iter()
            .filter(|u| !member_set.contains(*u))
            .collect();
        by_size.sort_by_key(|m| (m.rows() + m.cols(), m.rows(), m.cols()));
        let mut minimals: Vec<BinaryMatrix> = Vec::new();
        for u in by_size {
            if !minimals.iter().any(|m| contains_submatrix(u, m)) {
                minimals.push(u.clone());
            }
        }
        minimals.sort();
        minimals
    }
}

/// All proper submatrices (over nonempty row/column subsets), deduplicated.
pub fn all_proper_submatrices(m: &BinaryMatrix) -> Vec<BinaryMatrix> {
    let mut out = HashSet::new();
    let (r, c) = (m.rows(), m.cols());
    for rmask in 1..(1u32 << r) {
        for cmask in 1..(1u32 << c) {
            if rmask == (1 << r) - 1 && cmask == (1 << c) - 1 {
                continue;
            }
            let rows: Vec<usize> = (1..=r).filter(|i| rmask >> (i - 1) & 1 == 1).collect();
            let cols: Vec<usize> = (1..=c).filter(|j| cmask >> (j - 1) & 1 == 1).collect();
            out.insert(m.restrict(&rows, &cols));
        }
    }
    let mut v: Vec<BinaryMatrix> = out.into_iter().collect();
    v.sort();
    v
}

/// All submatrices including `m` itself.
pub fn all_submatrices(m: &BinaryMatrix) -> Vec<BinaryMatrix> {
    let mut v = all_proper_submatrices(m);
    v.push(m.clone());
    v.sort();
    v.dedup();
    v
}

/// The minimal permutations containing a quasi-permutation matrix, built by
/// inserting rows whose 1 falls in a zero column and columns whose 1 falls
/// in a zero row.
pub fn minimal_perms_containing(q: &BinaryMatrix) -> Result<Vec<Permutation>, BasesError> {
    if !q.is_quasi_permutation() {
        return Err(BasesError::NotQuasiPermutation);
    }
    let (rows_sums, col_sums) = q.projections();
    let zero_rows: Vec<usize> = (1..=q.rows()).filter(|&i| rows_sums[i - 1] == 0).collect();
    let zero_cols: Vec<usize> = (1..=q.cols()).filter(|&j| col_sums[j - 1] == 0).collect();
    let x = zero_cols.len();
    let y = zero_rows.len();
    let size = q.rows() + x;
    debug_assert_eq!(size, q.cols() + y);
    let mut out: HashSet<Permutation> = HashSet::new();
    // choose positions of the new rows among `size` slots and assign each
    // new row a distinct zero column; similarly for new columns
    let row_pos_choices = combinations(size, x);
    let col_pos_choices = combinations(size, y);
    for row_pos in &row_pos_choices {
        for row_assign in permutations_of(x) {
            for col_pos in &col_pos_choices {
                for col_assign in permutations_of(y) {
                    // build the size x size matrix
                    let mut m = BinaryMatrix::new(size, size);
                    // old column index -> new column index
                    let mut col_map = vec![0usize; q.cols() + 1];
                    {
                        let newcol_set: HashSet<usize> = col_pos.iter().copied().collect();
                        let mut next_old = 1usize;
                        for nc in 1..=size {
                            if !newcol_set.contains(&nc) {
                                col_map[next_old] = nc;
                                next_old += 1;
                            }
                        }
                    }
                    let mut row_map = vec![0usize; q.rows() + 1];
                    {
                        let newrow_set: HashSet<usize> = row_pos.iter().copied().collect();
                        let mut next_old = 1usize;
                        for nr in 1..=size {
                            if !newrow_set.contains(&nr) {
                                row_map[next_old] = nr;
                                next_old += 1;
                            }
                        }
                    }
                    for i in 1..=q.rows() {
                        for j in 1..=q.cols() {
                            if q.get(i, j) {
                                m.set(row_map[i], col_map[j], true);
                            }
                        }
                    }
                    for (slot, &nr) in row_pos.iter().enumerate() {
                        let zc = zero_cols[row_assign[slot]];
                        m.set(nr, col_map[zc], true);
                    }
                    for (slot, &nc) in col_pos.iter().enumerate() {
                        let zr = zero_rows[col_assign[slot]];
                        m.set(row_map[zr], nc, true);
                    }
                    if let Ok(p) = Permutation::from_matrix(&m) {
                        out.insert(p);
                    }
                }
            }
        }
    }
    let mut v: Vec<Permutation> = out.into_iter().collect();
    v.sort();
    Ok(v)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

fn permutations_of(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// The p-basis of Av(mset) over permutations: exact via
/// [`minimal_perms_containing`] and union minimalization.
pub fn p_basis_from_m_basis_perms(mset: &[BinaryMatrix]) -> Result<Vec<Permutation>, BasesError> {
    let mut candidates: HashSet<Permutation> = HashSet::new();
    for m in mset {
        for p in minimal_perms_containing(m)? {
            candidates.insert(p);
        }
    }
    let all: Vec<Permutation> = candidates.iter().cloned().collect();
    let mut out: Vec<Permutation> = all
        .iter()
        .filter(|p| {
            !all.iter().any(|q| {
                q != *p && crate::patterns::perm_contains_classical(p, q)
            })
        })
        .cloned()
        .collect();
    out.sort();
    Ok(out)
}

/// Minimal polyominoes (within sp <= bound) containing some member of `mset`;
/// the completeness flag is false because the search is bound-limited.
/// Containers are visited by increasing semi-perimeter; a container is
/// minimal iff no smaller minimal container sits below it.
pub fn p_basis_from_m_basis_polyominoes(
    mset: &[BinaryMatrix],
    bound_sp: usize,
) -> (Vec<Polyomino>, bool) {
    let mut containers: Vec<Polyomino> = Vec::new();
    crate::enumerate::for_each_sp(bound_sp, |p| {
        if mset.iter().any(|m| contains_submatrix(p.matrix(), m)) {
            containers.push(p);
        }
    });
    containers.sort_by_key(|p| p.semi_perimeter());
    let mut minimals: Vec<Polyomino> = Vec::new();
    for p in containers {
        if !minimals
            .iter()
            .any(|m| contains_submatrix(p.matrix(), m.matrix()))
        {
            minimals.push(p);
        }
    }
    minimals.sort();
    (minimals, false)
}

/// The canonical m-basis within bounds: minimal matrices (of dimensions up
/// to `max_rows` x `max_cols`) outside C+. For permutation classes the
/// candidates are quasi-permutation matrices (excluding any other matrix is
/// no restriction on permutations). The result is bound-limited.
pub fn canonical_m_basis(
    class: &ClassUniverse,
    max_rows: usize,
    max_cols: usize,
) -> BasisReport {
    let mut basis = Vec::new();
    for r in 1..=max_rows {
        for c in 1..=max_cols {
            for bits in 0..(1u64 << (r * c)) {
                let mut m = BinaryMatrix::new(r, c);
                for b in 0..(r * c) {
                    if bits >> b & 1 == 1 {
                        m.set(b / c + 1, b % c + 1, true);
                    }
                }
                if class.kind == ObjectKind::Permutations && !m.is_quasi_permutation() {
                    continue;
                }
                if class.in_c_plus(&m) {
                    continue;
                }
                // minimal iff every one-row/col deletion is in C+
                // (C+ is downward closed)
                if m.one_step_deletions().iter().all(|d| class.in_c_plus(d)) {
                    basis.push(m);
                }
            }
        }
    }
    basis.sort();
    BasisReport {
        class: String::new(),
        bound: class.bound,
        complete: false,
        basis,
    }
}

/// All inclusion-minimal subsets B of the canonical m-basis with
/// Av(B) = class on the bounded universe.
pub fn minimal_m_bases(
    canonical: &[BinaryMatrix],
    class: &ClassUniverse,
) -> Vec<Vec<BinaryMatrix>> {
    let member_set: Vec<BinaryMatrix> = {
        let mut v = class.members.clone();
        v.sort();
        v
    };
    let n = canonical.len();
    let mut found: Vec<u32> = Vec::new();
    let mut out = Vec::new();
    // subsets in increasing size
    let mut masks: Vec<u32> = (1..(1u32 << n)).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        if found.iter().any(|f| f & mask == *f) {
            continue; // a kept subset is contained in this one
        }
        let subset: Vec<BinaryMatrix> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| canonical[i].clone())
            .collect();
        let mut av = class.av_set(&subset);
        av.sort();
        if av == member_set {
            found.push(mask);
            out.push(subset);
        }
    }
    out
}

/// Robustness within the bound: every p-basis element must have all of its
/// proper submatrices inside C+ (otherwise the canonical m-basis omits it
/// and is a witness m-basis not containing the p-basis).
pub struct RobustnessReport {
    pub robust: bool,
    /// A p-basis element missed by some m-basis, when not robust.
    pub offending: Option<BinaryMatrix>,
    /// The witness m-basis (the canonical one), when not robust.
    pub witness: Option<Vec<BinaryMatrix>>,
}

pub fn is_robust(class: &ClassUniverse, max_rows: usize, max_cols: usize) -> RobustnessReport {
    let pbasis = class.p_basis();
    for b in &pbasis {
        for m in all_proper_submatrices(b) {
            if !class.in_c_plus(&m) {
                let witness = canonical_m_basis(class, max_rows, max_cols).basis;
                return RobustnessReport {
                    robust: false,
                    offending: Some(b.clone()),
                    witness: Some(witness),
                };
            }
        }
    }
    RobustnessReport {
        robust: true,
        offending: None,
        witness: None,
    }
}

/// A single-pattern polyomino class is robust iff the pattern is a polyomino.
pub fn is_robust_singleton(m: &BinaryMatrix) -> bool {
    Polyomino::validate(m.clone()).is_ok()
}

/// Maximal common submatrices of `a` and `b`.
pub fn meet(a: &BinaryMatrix, b: &BinaryMatrix) -> Vec<BinaryMatrix> {
    let sa = all_submatrices(a);
    let sb: HashSet<BinaryMatrix> = all_submatrices(b).into_iter().collect();
    let common: Vec<BinaryMatrix> = sa.into_iter().filter(|m| sb.contains(m)).collect();
    let mut out: Vec<BinaryMatrix> = common
        .iter()
        .filter(|m| {
            !common
                .iter()
                .any(|n| *n != **m && submatrix_le(m, n))
        })
        .cloned()
        .collect();
    out.sort();
    out
}

/// Sufficient robustness condition for a two-polyomino basis: every element
/// of the meet is a polyomino, or every saturated chain from it up to each
/// basis polyomino passes through an intermediate polyomino.
pub fn robust_pair_condition(p1: &Polyomino, p2: &Polyomino) -> bool {
    let meets = meet(p1.matrix(), p2.matrix());
    meets.iter().all(|pbar| {
        if Polyomino::validate(pbar.clone()).is_ok() {
            return true;
        }
        chains_hit_polyomino(p1.matrix(), pbar) && chains_hit_polyomino(p2.matrix(), pbar)
    })
}

/// Every saturated chain (single row/column deletions) from `top` down to
/// `bottom` contains a polyomino strictly between them. The top itself does
/// not count; a polyomino encountered along the way settles its branch.
fn chains_hit_polyomino(top: &BinaryMatrix, bottom: &BinaryMatrix) -> bool {
    fn rec(
        cur: &BinaryMatrix,
        bottom: &BinaryMatrix,
        memo: &mut std::collections::HashMap<BinaryMatrix, bool>,
    ) -> bool {
        if let Some(&v) = memo.get(cur) {
            return v;
        }
        let result = if cur == bottom {
            false
        } else {
            cur.one_step_deletions()
                .into_iter()
                .filter(|d| contains_submatrix(d, bottom))
                .all(|d| {
                    (&d != bottom && Polyomino::validate(d.clone()).is_ok())
                        || rec(&d, bottom, memo)
                })
        };
        memo.insert(cur.clone(), result);
        result
    }
    let mut memo = std::collections::HashMap::new();
    rec(top, bottom, &mut memo)
}

/// The quasi-permutation matrix M_{tau,side}: the permutation matrix of tau
/// extended with a row/column of zeros on the given side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Top,
    Bottom,
    Left,
    Right,
}

pub fn m_tau_side(tau: &Permutation, side: Side) -> BinaryMatrix {
    let m = tau.to_matrix();
    let n = tau.len();
    let (rows, cols) = match side {
        Side::Top | Side::Bottom => (n + 1, n),
        Side::Left | Side::Right => (n, n + 1),
    };
    let mut out = BinaryMatrix::new(rows, cols);
    let (dr, dc) = match side {
        Side::Top | Side::Right => (0, 0),
        Side::Bottom => (1, 0),
        Side::Left => (0, 1),
    };
    for i in 1..=n {
        for j in 1..=n {
            if m.get(i, j) {
                out.set(i + dr, j + dc, true);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::is_parallelogram;

    fn mx(text: &str) -> BinaryMatrix {
        BinaryMatrix::from_text(text).unwrap()
    }

    fn perm(s: &str) -> Permutation {
        Permutation::from_digits(s).unwrap()
    }

    #[test]
    fn minimal_perms_of_permutation_matrix_is_itself() {
        let q = perm("231").to_matrix();
        assert_eq!(minimal_perms_containing(&q).unwrap(), vec![perm("231")]);
    }

    #[test]
    fn minimal_perms_of_mf() {
        // M_F: bottom row (1,0,0), top row (0,0,1)
        let q = mx("001\n100");
        let got = minimal_perms_containing(&q).unwrap();
        assert_eq!(got, vec![perm("123"), perm("132"), perm("213")]);
    }

    #[test]
    fn minimal_perms_of_zero_row_matches_brute_force() {
        let q = mx("00");
        let got = minimal_perms_containing(&q).unwrap();
        // brute force: minimal permutations containing [0 0]
        let caps = crate::enumerate::Caps::default();
        let mut brute = Vec::new();
        for n in 1..=3 {
            for p in crate::enumerate::enumerate_permutations(n, &caps).unwrap() {
                if !contains_submatrix(&p.to_matrix(), &q) {
                    continue;
                }
                let minimal = (1..n).all(|k| {
                    crate::enumerate::enumerate_permutations(k, &caps)
                        .unwrap()
                        .into_iter()
                        .filter(|s| crate::patterns::perm_contains_classical(&p, s))
                        .all(|s| !contains_submatrix(&s.to_matrix(), &q))
                });
                if minimal {
                    brute.push(p);
                }
            }
        }
        brute.sort();
        assert_eq!(got, brute);
    }

    #[test]
    fn p_basis_of_q1_is_av321_231_312_basis() {
        // Q1: rows bottom-up (0,1),(0,0),(1,0)
        let q1 = mx("10\n00\n01");
        let pb = p_basis_from_m_basis_perms(&[q1]).unwrap();
        assert_eq!(pb, vec![perm("231"), perm("312"), perm("321")]);
    }

    #[test]
    fn canonical_basis_of_trivial_class() {
        // T = {1, 12, 21}
        let class = ClassUniverse::permutations(4, |p| p.len() <= 2);
        let report = canonical_m_basis(&class, 2, 2);
        assert_eq!(report.basis, vec![mx("00"), mx("0\n0")]);
        let minimal = minimal_m_bases(&report.basis, &class);
        assert_eq!(minimal.len(), 2);
        assert_eq!(minimal[0], vec![mx("00")]);
        assert_eq!(minimal[1], vec![mx("0\n0")]);
    }

    #[test]
    fn canonical_basis_of_av321_231_312() {
        let b: Vec<Permutation> = vec![perm("321"), perm("231"), perm("312")];
        let class = ClassUniverse::permutations(6, |p| {
            !b.iter().any(|s| crate::patterns::perm_contains_classical(p, s))
        });
        let report = canonical_m_basis(&class, 3, 3);
        let q1 = mx("10\n00\n01");
        let q2 = mx("100\n001");
        // canonical order sorts the 2x3 matrix before the 3x2 one
        assert_eq!(report.basis, vec![q2.clone(), q1.clone()]);
        let minimal = minimal_m_bases(&report.basis, &class);
        assert_eq!(minimal.len(), 2);
        assert!(minimal.contains(&vec![q1]));
        assert!(minimal.contains(&vec![q2]));
    }

    #[test]
    fn canonical_basis_of_vertical_bars_and_rectangles() {
        let bars = ClassUniverse::polyominoes(7, |p| p.width() == 1);
        let report = canonical_m_basis(&bars, 2, 2);
        assert_eq!(report.basis, vec![mx("0"), mx("11")]);
        let minimal = minimal_m_bases(&report.basis, &bars);
        assert_eq!(minimal, vec![vec![mx("11")]]);

        let rects = ClassUniverse::polyominoes(7, |p| p.area() == p.width() * p.height());
        let report = canonical_m_basis(&rects, 2, 2);
        assert_eq!(report.basis, vec![mx("0")]);
        let minimal = minimal_m_bases(&report.basis, &rects);
        assert_eq!(minimal, vec![vec![mx("0")]]);
    }

    #[test]
    fn parallelogram_meet_and_robustness() {
        let m1 = mx("10\n11");
        let m2 = mx("11\n01");
        let meets = meet(&m1, &m2);
        assert_eq!(meets, vec![mx("0"), mx("11"), mx("1\n1")]);
        // Av([0]) is the rectangles, a different class
        let class = ClassUniverse::polyominoes(8, is_parallelogram);
        let report = is_robust(&class, 2, 2);
        assert!(report.robust);
        // the sufficient pair condition does not apply here (the paper's
        // point that it cannot be inverted)
        let p1 = Polyomino::validate(m1).unwrap();
        let p2 = Polyomino::validate(m2).unwrap();
        assert!(!robust_pair_condition(&p1, &p2));
    }

    #[test]
    fn injections_not_robust_with_disjoint_witness() {
        let class = ClassUniverse::polyominoes(7, |p| {
            let (rs, cs) = p.matrix().projections();
            rs.iter().all(|&s| p.width() - s <= 1) && cs.iter().all(|&s| p.height() - s <= 1)
        });
        let report = is_robust(&class, 2, 2);
        assert!(!report.robust);
        let witness = report.witness.unwrap();
        assert_eq!(witness, vec![mx("00"), mx("0\n0")]);
        // disjoint from the p-basis (which consists of polyominoes)
        let pbasis = class.p_basis();
        assert!(witness.iter().all(|w| !pbasis.contains(w)));
    }

    #[test]
    fn injections_p_basis_has_12_elements() {
        let mset = vec![mx("00"), mx("0\n0")];
        let (pb, complete) = p_basis_from_m_basis_polyominoes(&mset, 7);
        assert!(!complete);
        assert_eq!(pb.len(), 12);
    }

    #[test]
    fn singleton_robustness() {
        assert!(is_robust_singleton(&mx("11\n01")));
        assert!(!is_robust_singleton(&mx("10\n01")));
    }

    #[test]
    fn meet_of_self_is_self() {
        let m = mx("11\n01");
        assert_eq!(meet(&m, &m), vec![m]);
    }

    #[test]
    fn m_tau_side_shapes() {
        let t = perm("12");
        let top = m_tau_side(&t, Side::Top);
        assert_eq!(top.text_lines(), vec!["00", "01", "10"]);
        let left = m_tau_side(&t, Side::Left);
        assert_eq!(left.text_lines(), vec!["001", "010"]);
    }

    #[test]
    fn infinite_antichain_first_members() {
        // Av_P(M) with M = bottom (1,1,0,1), top (1,0,0,1) has an infinite
        // p-basis; within sp <= 9 the minimal containers form an antichain
        // with at least 4 members spanning several sizes
        let m = mx("1001\n1101");
        let (pb, _) = p_basis_from_m_basis_polyominoes(&[m.clone()], 9);
        assert!(pb.len() >= 4, "found {}", pb.len());
        for a in &pb {
            assert!(contains_submatrix(a.matrix(), &m));
            for b in &pb {
                if a != b {
                    assert!(!submatrix_le(a.matrix(), b.matrix()));
                }
            }
        }
        let sizes: std::collections::BTreeSet<usize> =
            pb.iter().map(|p| p.semi_perimeter()).collect();
        assert!(sizes.len() >= 2, "antichain members should grow");
    }
}
