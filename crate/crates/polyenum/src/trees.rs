//! Planted plane trees and the labeling bijection with parallelogram
//! polyominoes.
//!
//! Height counts nodes on a maximal root-started simple path. In the
//! bijection image, nodes at odd depth carry column labels (1..width, the
//! root is the rightmost column) and nodes at even depth carry marked row
//! labels (1..height, top to bottom); labels read in per-parity BFS order.

use crate::matrix::BinaryMatrix;
use crate::poly::Polyomino;
use crate::classify::is_parallelogram;
use crate::kparallel::KParClass;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreesError {
    #[error("not a parallelogram polyomino")]
    NotParallelogram,
    #[error("tree is not in the image of the bijection: {0}")]
    MalformedTree(&'static str),
    #[error("requested size {requested} exceeds the cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
}

/// Rooted ordered tree; node 0 is the root, children are ordered, and node
/// ids are assigned in preorder (so structural equality is plain equality).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PlantedPlaneTree {
    children: Vec<Vec<usize>>,
}

impl PlantedPlaneTree {
    pub fn leaf() -> PlantedPlaneTree {
        PlantedPlaneTree {
            children: vec![vec![]],
        }
    }

    pub fn node_count(&self) -> usize {
        self.children.len()
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn parent_map(&self) -> Vec<Option<usize>> {
        let mut parents = vec![None; self.node_count()];
        for (v, ch) in self.children.iter().enumerate() {
            for &c in ch {
                parents[c] = Some(v);
            }
        }
        parents
    }

    /// Depth of each node, root at depth 1.
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.node_count()];
        depth[0] = 1;
        // preorder ids: parents precede children
        let parents = self.parent_map();
        for v in 1..self.node_count() {
            depth[v] = depth[parents[v].expect("non-root has a parent")] + 1;
        }
        depth
    }

    /// Number of nodes on a maximal simple path starting at the root.
    pub fn height(&self) -> usize {
        self.depths().into_iter().max().unwrap_or(0)
    }

    /// Nodes level by level, each level in planar left-to-right order.
    pub fn levels(&self) -> Vec<Vec<usize>> {
        let mut levels: Vec<Vec<usize>> = vec![vec![0]];
        loop {
            let last = levels.last().unwrap();
            let next: Vec<usize> = last
                .iter()
                .flat_map(|&v| self.children[v].iter().copied())
                .collect();
            if next.is_empty() {
                break;
            }
            levels.push(next);
        }
        levels
    }

    /// Balanced-parentheses word, one `(...)` per node, children in order.
    pub fn to_parens(&self) -> String {
        fn rec(t: &PlantedPlaneTree, v: usize, out: &mut String) {
            out.push('(');
            for &c in &t.children[v] {
                rec(t, c, out);
            }
            out.push(')');
        }
        let mut s = String::new();
        rec(self, 0, &mut s);
        s
    }

    pub fn from_parens(s: &str) -> Result<PlantedPlaneTree, TreesError> {
        let bytes = s.trim().as_bytes();
        if bytes.is_empty() {
            return Err(TreesError::MalformedTree("empty parenthesis word"));
        }
        let mut children: Vec<Vec<usize>> = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        for &b in bytes {
            match b {
                b'(' => {
                    let id = children.len();
                    children.push(Vec::new());
                    if let Some(&p) = stack.last() {
                        children[p].push(id);
                    } else if id != 0 {
                        return Err(TreesError::MalformedTree("more than one root"));
                    }
                    stack.push(id);
                }
                b')' => {
                    if stack.pop().is_none() {
                        return Err(TreesError::MalformedTree("unbalanced parentheses"));
                    }
                }
                _ => return Err(TreesError::MalformedTree("invalid character")),
            }
        }
        if !stack.is_empty() {
            return Err(TreesError::MalformedTree("unbalanced parentheses"));
        }
        Ok(PlantedPlaneTree { children })
    }

    /// Build from a root whose subtrees are given in order.
    pub fn from_subtrees(subtrees: &[PlantedPlaneTree]) -> PlantedPlaneTree {
        let mut children: Vec<Vec<usize>> = vec![vec![]];
        for sub in subtrees {
            let offset = children.len();
            children[0].push(offset);
            for ch in &sub.children {
                children.push(ch.iter().map(|c| c + offset).collect());
            }
        }
        PlantedPlaneTree { children }
    }

    /// Extract the subtree rooted at `v`, renumbered in preorder.
    pub fn subtree(&self, v: usize) -> PlantedPlaneTree {
        let mut map = std::collections::HashMap::new();
        let mut order = Vec::new();
        fn collect(
            t: &PlantedPlaneTree,
            v: usize,
            map: &mut std::collections::HashMap<usize, usize>,
            order: &mut Vec<usize>,
        ) {
            map.insert(v, order.len());
            order.push(v);
            for &c in &t.children[v] {
                collect(t, c, map, order);
            }
        }
        collect(self, v, &mut map, &mut order);
        let children = order
            .iter()
            .map(|&old| self.children[old].iter().map(|c| map[c]).collect())
            .collect();
        PlantedPlaneTree { children }
    }
}

/// A node label in the bijection image: a column label (unmarked) or a row
/// label (marked).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Col(usize),
    Row(usize),
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Label::Col(l) => write!(f, "{l}"),
            Label::Row(l) => write!(f, "~{l}"),
        }
    }
}

/// The unique bijection labeling: per-parity BFS order, columns (unmarked)
/// at odd depths, rows (marked) at even depths.
pub fn labels_of(t: &PlantedPlaneTree) -> Vec<Label> {
    let mut labels = vec![Label::Col(0); t.node_count()];
    let mut col = 0usize;
    let mut row = 0usize;
    for (d0, level) in t.levels().iter().enumerate() {
        let odd = d0 % 2 == 0; // depth = d0 + 1
        for &v in level {
            if odd {
                col += 1;
                labels[v] = Label::Col(col);
            } else {
                row += 1;
                labels[v] = Label::Row(row);
            }
        }
    }
    labels
}

/// The boundary labeling of a parallelogram polyomino: east steps of the
/// upper boundary labeled 1..width right-to-left, north steps of the lower
/// boundary labeled (marked) 1..height top-to-bottom; `n_of[l-1]` lists the
/// marked labels adjacent to column label `l`, `e_of[lb-1]` the column
/// labels adjacent to marked label `lb` (the rightmost column excluded).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryLabeling {
    pub width: usize,
    pub height: usize,
    pub n_of: Vec<Vec<usize>>,
    pub e_of: Vec<Vec<usize>>,
}

pub fn label_boundary(p: &Polyomino) -> Result<BoundaryLabeling, TreesError> {
    if !is_parallelogram(p) {
        return Err(TreesError::NotParallelogram);
    }
    let w = p.width();
    let h = p.height();
    let top: Vec<usize> = p.column_spans().iter().map(|s| s.1).collect();
    let rmax: Vec<usize> = p.row_spans().iter().map(|s| s.1).collect();
    // column c has label w+1-c; row r has marked label h+1-r
    let mut n_of = vec![Vec::new(); w];
    for l in 1..=w {
        let c = w + 1 - l;
        // rows whose rightmost cell is in column c, top-down (ascending label)
        for r in (1..=h).rev() {
            if rmax[r - 1] == c {
                n_of[l - 1].push(h + 1 - r);
            }
        }
    }
    let mut e_of = vec![Vec::new(); h];
    for lb in 1..=h {
        let r = h + 1 - lb;
        for c in (1..=w).rev() {
            if c != w && top[c - 1] == r {
                e_of[lb - 1].push(w + 1 - c);
            }
        }
    }
    Ok(BoundaryLabeling {
        width: w,
        height: h,
        n_of,
        e_of,
    })
}

/// The bijection T: parallelogram polyomino to planted plane tree.
pub fn to_tree(p: &Polyomino) -> Result<PlantedPlaneTree, TreesError> {
    let lab = label_boundary(p)?;
    // build in preorder from the root (column label 1)
    let mut children: Vec<Vec<usize>> = Vec::new();
    fn add_col(l: usize, lab: &BoundaryLabeling, children: &mut Vec<Vec<usize>>) -> usize {
        let id = children.len();
        children.push(Vec::new());
        for &lb in &lab.n_of[l - 1] {
            let c = add_row(lb, lab, children);
            children[id].push(c);
        }
        id
    }
    fn add_row(lb: usize, lab: &BoundaryLabeling, children: &mut Vec<Vec<usize>>) -> usize {
        let id = children.len();
        children.push(Vec::new());
        for &l in &lab.e_of[lb - 1] {
            let c = add_col(l, lab, children);
            children[id].push(c);
        }
        id
    }
    add_col(1, &lab, &mut children);
    let t = PlantedPlaneTree { children };
    debug_assert_eq!(t.node_count(), p.semi_perimeter());
    Ok(t)
}

/// Inverse of [`to_tree`]: recover the polyomino from the tree shape alone
/// (the labeling is forced).
pub fn from_tree(t: &PlantedPlaneTree) -> Result<Polyomino, TreesError> {
    if t.node_count() < 2 {
        return Err(TreesError::MalformedTree("fewer than two nodes"));
    }
    let labels = labels_of(t);
    let parents = t.parent_map();
    let w = labels.iter().filter(|l| matches!(l, Label::Col(_))).count();
    let h = labels.iter().filter(|l| matches!(l, Label::Row(_))).count();
    if h == 0 {
        return Err(TreesError::MalformedTree("root must have a child"));
    }
    // top[c] from the parent row of each non-root column node; rmax[r] from
    // the parent column of each row node
    let mut top = vec![0usize; w];
    top[w - 1] = h; // rightmost column (the root) reaches the top row
    let mut rmax = vec![0usize; h];
    for v in 1..t.node_count() {
        let pv = parents[v].unwrap();
        match (labels[v], labels[pv]) {
            (Label::Col(l), Label::Row(lb)) => top[w - l] = h + 1 - lb,
            (Label::Row(lb), Label::Col(l)) => rmax[h - lb] = w + 1 - l,
            _ => return Err(TreesError::MalformedTree("label parities are inconsistent")),
        }
    }
    if top.iter().any(|&r| r == 0) || rmax.iter().any(|&c| c == 0) {
        return Err(TreesError::MalformedTree("a column or row is unattached"));
    }
    if top.windows(2).any(|p| p[0] > p[1]) || rmax.windows(2).any(|p| p[0] > p[1]) {
        return Err(TreesError::MalformedTree("profiles are not monotone"));
    }
    let mut m = BinaryMatrix::new(h, w);
    for c in 1..=w {
        let bot = (1..=h)
            .find(|&r| rmax[r - 1] >= c)
            .ok_or(TreesError::MalformedTree("a column is empty"))?;
        if bot > top[c - 1] {
            return Err(TreesError::MalformedTree("profiles cross"));
        }
        for r in bot..=top[c - 1] {
            m.set(r, c, true);
        }
    }
    let p = Polyomino::validate(m).map_err(|_| TreesError::MalformedTree("not a polyomino"))?;
    if !is_parallelogram(&p) {
        return Err(TreesError::MalformedTree("not a parallelogram polyomino"));
    }
    Ok(p)
}

/// The h_T and v_T label sequences of a tree in the bijection image, in
/// travel order of the corresponding boundary encounters (deepest node
/// first, ending at the node labeled 1 or the node labeled ~1).
pub fn ht_vt(t: &PlantedPlaneTree) -> (Vec<Label>, Vec<Label>) {
    let labels = labels_of(t);
    let parents = t.parent_map();
    let levels = t.levels();
    let i = levels.len(); // height
    let walk_up = |start: usize| -> Vec<Label> {
        let mut out = vec![labels[start]];
        let mut v = start;
        while !matches!(labels[v], Label::Col(1) | Label::Row(1)) {
            v = parents[v].expect("walk reaches the root eventually");
            out.push(labels[v]);
        }
        out
    };
    let deep = *levels[i - 1].last().unwrap();
    let shallow = if i >= 2 {
        *levels[i - 2].last().unwrap()
    } else {
        deep
    };
    // the deepest level is marked (row labels) iff the height is even;
    // h starts at the rows side
    if i % 2 == 0 {
        (walk_up(deep), walk_up(shallow))
    } else {
        (walk_up(shallow), walk_up(deep))
    }
}

/// Convexity degree read off the tree: min(|h_T|, |v_T|) - 1.
pub fn degree_from_tree(t: &PlantedPlaneTree) -> usize {
    let (ht, vt) = ht_vt(t);
    ht.len().min(vt.len()) - 1
}

/// Flat/up/right from the parity rule on (j, j') = (|v_T|, |h_T|).
pub fn class_from_tree(t: &PlantedPlaneTree) -> KParClass {
    let (ht, vt) = ht_vt(t);
    let (j, jp) = (vt.len(), ht.len());
    if j == jp {
        KParClass::Flat
    } else if j % 2 == 1 {
        KParClass::Up
    } else {
        KParClass::Right
    }
}

/// Split T into (T_1, T_2): T_1 is the subtree at the root's first child,
/// T_2 the rest.
pub fn split_pair(t: &PlantedPlaneTree) -> Result<(PlantedPlaneTree, PlantedPlaneTree), TreesError> {
    if t.children[0].is_empty() {
        return Err(TreesError::MalformedTree("root has no children"));
    }
    let first = t.children[0][0];
    let t1 = t.subtree(first);
    // T_2: the tree with that subtree removed
    let mut keep = vec![true; t.node_count()];
    fn mark(t: &PlantedPlaneTree, v: usize, keep: &mut [bool]) {
        keep[v] = false;
        for &c in &t.children[v] {
            mark(t, c, keep);
        }
    }
    mark(t, first, &mut keep);
    let mut map = std::collections::HashMap::new();
    let mut order = Vec::new();
    fn collect(
        t: &PlantedPlaneTree,
        v: usize,
        keep: &[bool],
        map: &mut std::collections::HashMap<usize, usize>,
        order: &mut Vec<usize>,
    ) {
        map.insert(v, order.len());
        order.push(v);
        for &c in &t.children[v] {
            if keep[c] {
                collect(t, c, keep, map, order);
            }
        }
    }
    collect(t, 0, &keep, &mut map, &mut order);
    let children = order
        .iter()
        .map(|&old| {
            t.children[old]
                .iter()
                .filter(|&&c| keep[c])
                .map(|c| map[c])
                .collect()
        })
        .collect();
    Ok((t1, PlantedPlaneTree { children }))
}

/// Put `t1` as the leftmost subtree of `t2`'s root.
pub fn join_pair(t1: &PlantedPlaneTree, t2: &PlantedPlaneTree) -> PlantedPlaneTree {
    let mut subs: Vec<PlantedPlaneTree> = vec![t1.clone()];
    for &c in &t2.children[0] {
        subs.push(t2.subtree(c));
    }
    PlantedPlaneTree::from_subtrees(&subs)
}

/// All planted plane trees with exactly `n` nodes (there are C_{n-1} of them).
pub fn all_trees(n: usize) -> Vec<PlantedPlaneTree> {
    if n == 0 {
        return vec![];
    }
    forests(n - 1)
        .into_iter()
        .map(|f| PlantedPlaneTree::from_subtrees(&f))
        .collect()
}

fn forests(total: usize) -> Vec<Vec<PlantedPlaneTree>> {
    if total == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for t in all_trees(first) {
            for mut rest in forests(total - first) {
                rest.insert(0, t.clone());
                out.push(rest);
            }
        }
    }
    out
}

/// Count plane trees with `n` nodes and height at most `h_max` (node-counted).
pub fn count_trees(n: usize, h_max: usize) -> Result<u128, TreesError> {
    const CAP: usize = 32;
    if n > CAP {
        return Err(TreesError::CapExceeded { requested: n, cap: CAP });
    }
    if n == 0 {
        return Ok(0);
    }
    // t[h] as coefficient vector: trees with height <= h
    let mut th = vec![0u128; n + 1]; // height <= 1: the single node
    if n >= 1 {
        th[1] = 1;
    }
    for _ in 2..=h_max.max(1) {
        // T_h = x / (1 - T_{h-1})
        let mut inv = vec![0u128; n + 1];
        inv[0] = 1;
        for m in 1..=n {
            let mut acc = 0u128;
            for k in 1..=m {
                acc += th[k] * inv[m - k];
            }
            inv[m] = acc;
        }
        let mut next = vec![0u128; n + 1];
        for m in 1..=n {
            next[m] = inv[m - 1];
        }
        th = next;
    }
    if h_max == 0 {
        return Ok(0);
    }
    Ok(th[n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::parallelograms_by_sp;
    use crate::kparallel::{classify_kpar, kpar_degree};

    fn poly(text: &str) -> Polyomino {
        Polyomino::from_text(text).unwrap()
    }

    #[test]
    fn unit_cell_tree() {
        let p = poly("1");
        let t = to_tree(&p).unwrap();
        assert_eq!(t.node_count(), 2);
        assert_eq!(t.to_parens(), "(())");
        assert_eq!(from_tree(&t).unwrap(), p);
        let lab = label_boundary(&p).unwrap();
        assert_eq!(lab.n_of, vec![vec![1]]);
        assert_eq!(lab.e_of, vec![Vec::<usize>::new()]);
    }

    #[test]
    fn parens_round_trip() {
        let t = PlantedPlaneTree::from_parens("(()(()))").unwrap();
        assert_eq!(t.node_count(), 4);
        assert_eq!(t.to_parens(), "(()(()))");
        assert!(PlantedPlaneTree::from_parens("(()").is_err());
    }

    #[test]
    fn bijection_round_trip_sp10() {
        for p in parallelograms_by_sp(10) {
            let t = to_tree(&p).unwrap();
            assert_eq!(t.node_count(), p.semi_perimeter());
            let back = from_tree(&t).unwrap();
            assert_eq!(back, p, "round trip failed on\n{}", p.matrix().to_text());
        }
    }

    #[test]
    fn bijection_is_surjective_small() {
        // every plane tree with n >= 2 nodes comes from a parallelogram
        for n in 2..=8 {
            let trees = all_trees(n);
            // Catalan count
            let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429, 1430][n - 1];
            assert_eq!(trees.len(), catalan);
            for t in &trees {
                let p = from_tree(t).expect("every tree is in the image");
                assert_eq!(to_tree(&p).unwrap(), *t);
            }
        }
    }

    #[test]
    fn seven_trees_with_6_nodes_height_5() {
        let count = all_trees(6)
            .into_iter()
            .filter(|t| t.height() == 5)
            .count();
        assert_eq!(count, 7);
        assert_eq!(
            count_trees(6, 5).unwrap() - count_trees(6, 4).unwrap(),
            7
        );
    }

    #[test]
    fn count_trees_matches_series() {
        use crate::series::fib_poly_x;
        // coefficient of x^n in x F_{h-1}/F_h
        for h in 1..=8 {
            let order = 14;
            let num = fib_poly_x(h - 1).to_series(order);
            let den = fib_poly_x(h).to_series(order);
            let gf = crate::series::Series::x(order)
                .mul(&num.div(&den).unwrap());
            for n in 1..=14 {
                let expected = count_trees(n, h).unwrap();
                let got = gf.coeff(n);
                assert_eq!(
                    got,
                    &num_rat(expected),
                    "n = {n}, h = {h}"
                );
            }
        }
    }

    fn num_rat(v: u128) -> num::BigRational {
        num::BigRational::from_integer(num::BigInt::from(v))
    }

    #[test]
    fn degree_and_class_match_geometry() {
        for p in parallelograms_by_sp(10) {
            let t = to_tree(&p).unwrap();
            assert_eq!(
                degree_from_tree(&t),
                kpar_degree(&p).unwrap(),
                "degree mismatch on\n{}",
                p.matrix().to_text()
            );
            if kpar_degree(&p).unwrap() >= 1 {
                assert_eq!(
                    class_from_tree(&t),
                    classify_kpar(&p).unwrap(),
                    "class mismatch on\n{}",
                    p.matrix().to_text()
                );
            }
        }
    }

    #[test]
    fn height_bound() {
        for p in parallelograms_by_sp(10) {
            let t = to_tree(&p).unwrap();
            let k = kpar_degree(&p).unwrap();
            assert!(t.height() <= k + 3, "height bound on\n{}", p.matrix().to_text());
        }
    }

    #[test]
    fn split_join_identity() {
        for p in parallelograms_by_sp(8) {
            let t = to_tree(&p).unwrap();
            let (t1, t2) = split_pair(&t).unwrap();
            assert_eq!(join_pair(&t1, &t2), t);
        }
    }

    #[test]
    fn label_count_is_sp() {
        for p in parallelograms_by_sp(10) {
            let lab = label_boundary(&p).unwrap();
            let labels: usize = lab.width + lab.height;
            assert_eq!(labels, p.semi_perimeter());
        }
    }
}
