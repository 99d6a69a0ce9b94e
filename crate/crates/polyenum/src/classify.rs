//! Geometric predicates for the polyomino families, and the convexity degree.
//!
//! Families by the empty corner regions of the bounding box (A = top-left,
//! B = top-right, C = bottom-left, D = bottom-right): Ferrer has only B
//! possibly nonempty, stacks only A and B, parallelograms only A and D.

use crate::poly::Polyomino;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("operation requires a convex polyomino")]
    NotConvex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    ColumnConvex,
    RowConvex,
    Convex,
    Directed,
    DirectedConvex,
    Parallelogram,
    Stack,
    Ferrer,
    LConvex,
    KConvex(usize),
}

pub fn is_column_convex(p: &Polyomino) -> bool {
    (1..=p.width()).all(|j| {
        let lo = (1..=p.height()).find(|&i| p.cell(i, j));
        match lo {
            None => true,
            Some(lo) => {
                let hi = (1..=p.height()).rev().find(|&i| p.cell(i, j)).unwrap();
                (lo..=hi).all(|i| p.cell(i, j))
            }
        }
    })
}

pub fn is_row_convex(p: &Polyomino) -> bool {
    (1..=p.height()).all(|i| {
        let lo = (1..=p.width()).find(|&j| p.cell(i, j));
        match lo {
            None => true,
            Some(lo) => {
                let hi = (1..=p.width()).rev().find(|&j| p.cell(i, j)).unwrap();
                (lo..=hi).all(|j| p.cell(i, j))
            }
        }
    })
}

pub fn is_convex(p: &Polyomino) -> bool {
    is_column_convex(p) && is_row_convex(p)
}

/// Source cell: the leftmost cell of the bottom row.
pub fn source(p: &Polyomino) -> (usize, usize) {
    let j = (1..=p.width()).find(|&j| p.cell(1, j)).expect("row 1 has a cell");
    (1, j)
}

/// Every cell reachable from the source by an internal path of north and
/// east steps.
pub fn is_directed(p: &Polyomino) -> bool {
    let (h, w) = (p.height(), p.width());
    let mut reach = vec![false; h * w];
    let (si, sj) = source(p);
    let mut stack = vec![(si, sj)];
    reach[(si - 1) * w + (sj - 1)] = true;
    while let Some((i, j)) = stack.pop() {
        for (i2, j2) in [(i + 1, j), (i, j + 1)] {
            if i2 <= h && j2 <= w && p.cell(i2, j2) && !reach[(i2 - 1) * w + (j2 - 1)] {
                reach[(i2 - 1) * w + (j2 - 1)] = true;
                stack.push((i2, j2));
            }
        }
    }
    (1..=h).all(|i| (1..=w).all(|j| !p.cell(i, j) || reach[(i - 1) * w + (j - 1)]))
}

pub fn is_directed_convex(p: &Polyomino) -> bool {
    is_convex(p) && is_directed(p)
}

/// Convex with monotone (non-decreasing) bottom and top column profiles:
/// the empty corner regions are at most top-left and bottom-right.
pub fn is_parallelogram(p: &Polyomino) -> bool {
    if !is_convex(p) {
        return false;
    }
    let spans = p.column_spans();
    spans.windows(2).all(|w| w[0].0 <= w[1].0 && w[0].1 <= w[1].1)
        && spans[0].0 == 1
        && spans[spans.len() - 1].1 == p.height()
}

/// Convex and sitting on its bottom row (every column starts in row 1).
pub fn is_stack(p: &Polyomino) -> bool {
    is_convex(p) && p.column_spans().iter().all(|&(lo, _)| lo == 1)
}

/// Convex, bottom-justified and left-justified.
pub fn is_ferrer(p: &Polyomino) -> bool {
    is_stack(p) && p.row_spans().iter().all(|&(lo, _)| lo == 1)
}

/// Least `k` such that every pair of cells is joined by a monotone internal
/// path with at most `k` changes of direction, computed with the two greedy
/// maximal-side paths per cell pair.
pub fn convexity_degree(p: &Polyomino) -> Result<usize, ClassifyError> {
    if !is_convex(p) {
        return Err(ClassifyError::NotConvex);
    }
    let cells: Vec<(usize, usize)> = (1..=p.height())
        .flat_map(|i| (1..=p.width()).map(move |j| (i, j)))
        .filter(|&(i, j)| p.cell(i, j))
        .collect();
    let mut degree = 0usize;
    for a in 0..cells.len() {
        for b in (a + 1)..cells.len() {
            let need = min_changes_between(p, cells[a], cells[b])
                .expect("convex polyominoes join every cell pair by a monotone path");
            degree = degree.max(need);
        }
    }
    Ok(degree)
}

/// Minimal number of changes of direction over monotone internal paths from
/// `a` to `b`: the minimum over the two greedy maximal-side paths.
pub fn min_changes_between(p: &Polyomino, a: (usize, usize), b: (usize, usize)) -> Option<usize> {
    if a == b {
        return Some(0);
    }
    let h = greedy_changes(p, a, b, true);
    let v = greedy_changes(p, a, b, false);
    match (h, v) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

/// Greedy monotone walk from `a` to `b` starting horizontally (`start_h`),
/// each side maximal within the polyomino but capped at `b`'s row/column.
/// Returns the number of changes of direction, or `None` if no monotone path
/// starting in that direction exists.
fn greedy_changes(
    p: &Polyomino,
    a: (usize, usize),
    b: (usize, usize),
    start_h: bool,
) -> Option<usize> {
    let di: isize = (b.0 as isize - a.0 as isize).signum();
    let dj: isize = (b.1 as isize - a.1 as isize).signum();
    let (mut i, mut j) = (a.0 as isize, a.1 as isize);
    let (bi, bj) = (b.0 as isize, b.1 as isize);
    let mut horiz = start_h;
    let mut sides = 0usize;
    let in_poly = |i: isize, j: isize| {
        i >= 1
            && j >= 1
            && i <= p.height() as isize
            && j <= p.width() as isize
            && p.cell(i as usize, j as usize)
    };
    while (i, j) != (bi, bj) {
        let (si, sj) = if horiz { (0, dj) } else { (di, 0) };
        let mut moved = false;
        while (si, sj) != (0, 0)
            && (if horiz { j != bj } else { i != bi })
            && in_poly(i + si, j + sj)
        {
            i += si;
            j += sj;
            moved = true;
        }
        if moved {
            sides += 1;
        } else {
            return None; // cannot progress (or start) in this direction
        }
        horiz = !horiz;
    }
    Some(sides.saturating_sub(1))
}

pub fn is_l_convex(p: &Polyomino) -> bool {
    is_convex(p) && convexity_degree(p).map(|k| k <= 1).unwrap_or(false)
}

pub fn is_k_convex(p: &Polyomino, k: usize) -> bool {
    is_convex(p) && convexity_degree(p).map(|d| d <= k).unwrap_or(false)
}

/// Crossing-intersection criterion for L-convexity: any two maximal
/// rectangles have a crossing intersection. Used as an independent route to
/// `is_l_convex` in tests.
pub fn is_l_convex_by_rectangles(p: &Polyomino) -> bool {
    if !is_convex(p) {
        return false;
    }
    let rects = maximal_rectangles(p);
    for (a, r1) in rects.iter().enumerate() {
        for r2 in rects.iter().skip(a + 1) {
            // crossing: the intersection spans the full row range of one and
            // the full column range of the other
            let ri = (r1.0.max(r2.0), r1.1.min(r2.1));
            let ci = (r1.2.max(r2.2), r1.3.min(r2.3));
            if ri.0 > ri.1 || ci.0 > ci.1 {
                return false; // disjoint rectangles: no crossing intersection
            }
            let crossing = (ri == (r1.0, r1.1) && ci == (r2.2, r2.3))
                || (ri == (r2.0, r2.1) && ci == (r1.2, r1.3));
            if !crossing {
                return false;
            }
        }
    }
    true
}

/// Maximal all-1 rectangles, as (row_lo, row_hi, col_lo, col_hi).
fn maximal_rectangles(p: &Polyomino) -> Vec<(usize, usize, usize, usize)> {
    let mut rects = Vec::new();
    for i1 in 1..=p.height() {
        for i2 in i1..=p.height() {
            for j1 in 1..=p.width() {
                for j2 in j1..=p.width() {
                    if (i1..=i2).all(|i| (j1..=j2).all(|j| p.cell(i, j))) {
                        rects.push((i1, i2, j1, j2));
                    }
                }
            }
        }
    }
    let all = rects.clone();
    rects.retain(|&(i1, i2, j1, j2)| {
        !all.iter().any(|&(a1, a2, b1, b2)| {
            (a1, a2, b1, b2) != (i1, i2, j1, j2) && a1 <= i1 && i2 <= a2 && b1 <= j1 && j2 <= b2
        })
    });
    rects
}

pub fn matches_family(p: &Polyomino, tag: FamilyTag) -> bool {
    match tag {
        FamilyTag::ColumnConvex => is_column_convex(p),
        FamilyTag::RowConvex => is_row_convex(p),
        FamilyTag::Convex => is_convex(p),
        FamilyTag::Directed => is_directed(p),
        FamilyTag::DirectedConvex => is_directed_convex(p),
        FamilyTag::Parallelogram => is_parallelogram(p),
        FamilyTag::Stack => is_stack(p),
        FamilyTag::Ferrer => is_ferrer(p),
        FamilyTag::LConvex => is_l_convex(p),
        FamilyTag::KConvex(k) => is_k_convex(p, k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enumerate_polyominoes, Caps, Limit};

    fn poly(text: &str) -> Polyomino {
        Polyomino::from_text(text).unwrap()
    }

    #[test]
    fn bar_is_everything() {
        let p = poly("111");
        assert!(is_column_convex(&p) && is_row_convex(&p) && is_convex(&p));
        assert!(is_ferrer(&p) && is_stack(&p) && is_parallelogram(&p));
        assert_eq!(convexity_degree(&p), Ok(0));
    }

    #[test]
    fn row_101_breaks_row_convexity() {
        // an H-shaped polyomino: middle row joins two full columns
        let p = poly("101\n111\n101");
        assert!(!is_row_convex(&p));
        assert!(is_column_convex(&p)); // each column is contiguous
        let q = poly("11\n10\n11");
        assert!(!is_column_convex(&q)); // column 2 has the vertical 1,0,1
        assert!(is_row_convex(&q));
    }

    #[test]
    fn square_and_l_tromino_directedness() {
        assert!(is_directed(&poly("11\n11")));
        // L-tromino missing its bottom-left corner cell: source is (1,2)
        let p = poly("10\n11");
        assert!(is_directed(&p));
        let q = poly("01\n11");
        assert!(is_directed(&q)); // source (1,1), reaches all cells going n/e
        let r = poly("11\n01");
        assert!(!is_directed(&r)); // source (1,2) cannot reach (2,1) by n/e
    }

    #[test]
    fn convex_count_sp4_is_7() {
        let all = enumerate_polyominoes(Limit::BySemiPerimeter(4), &Caps::default()).unwrap();
        let n = all
            .iter()
            .filter(|p| p.semi_perimeter() == 4 && is_convex(p))
            .count();
        assert_eq!(n, 7);
    }

    #[test]
    fn rectangle_degrees() {
        assert_eq!(convexity_degree(&poly("1")), Ok(0));
        assert_eq!(convexity_degree(&poly("1111")), Ok(0));
        assert_eq!(convexity_degree(&poly("11\n11")), Ok(1));
        assert_eq!(convexity_degree(&poly("111\n111\n111")), Ok(1));
        assert!(is_l_convex(&poly("11\n11")));
    }

    #[test]
    fn degree_refuses_nonconvex() {
        let p = poly("101\n111");
        assert_eq!(convexity_degree(&p), Err(ClassifyError::NotConvex));
    }

    #[test]
    fn staircase_degree() {
        let s = poly("011\n110");
        assert!(is_parallelogram(&s));
        assert_eq!(convexity_degree(&s), Ok(2));
        // 3-step staircase: still a parallelogram, degree 3
        let p = poly("001\n011\n110");
        assert!(is_parallelogram(&p));
        assert_eq!(convexity_degree(&p), Ok(3));
        // directed convex but not parallelogram: top profile dips at the end
        let q = poly("10\n11");
        assert!(is_directed_convex(&q) && !is_parallelogram(&q) && is_stack(&q));
    }

    #[test]
    fn l_convex_routes_agree_small() {
        let all = enumerate_polyominoes(Limit::BySemiPerimeter(7), &Caps::default()).unwrap();
        for p in &all {
            assert_eq!(
                is_l_convex(p),
                is_l_convex_by_rectangles(p),
                "disagreement on\n{}",
                p.matrix().to_text()
            );
        }
    }
}
