//! Pattern containment: the submatrix order on binary matrices, classical /
//! vincular / bivincular / mesh permutation patterns, generalized polyomino
//! patterns with adjacency bars and border marks, and the Marcus-Tardos
//! containment notion.

use crate::matrix::{BinaryMatrix, Permutation};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("malformed pattern file: {0}")]
    BadPatternFile(&'static str),
}

/// True iff some row subset and column subset of `m` restrict to `q`;
/// returns the witness index sets when they exist. Backtracking over the
/// rows of `q` with a per-prefix column-assignment feasibility check.
pub fn contains_submatrix_witness(
    m: &BinaryMatrix,
    q: &BinaryMatrix,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let (mr, mc) = (m.rows(), m.cols());
    let (qr, qc) = (q.rows(), q.cols());
    if qr > mr || qc > mc {
        return None;
    }
    // choose rows of m for each row of q, increasing; then columns
    let mut row_choice = vec![0usize; qr];
    fn pick_rows(
        m: &BinaryMatrix,
        q: &BinaryMatrix,
        next_q_row: usize,
        min_m_row: usize,
        row_choice: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        let (mr, _) = (m.rows(), m.cols());
        let qr = q.rows();
        if next_q_row == qr {
            return pick_cols(m, q, row_choice);
        }
        for r in min_m_row..=(mr - (qr - next_q_row) + 1) {
            row_choice[next_q_row] = r;
            // prune: every q-column must still be matchable in some m-column
            // (cheap necessary condition: the partial column patterns must
            // each occur among m's columns restricted to the chosen rows)
            if !cols_feasible(m, q, &row_choice[..=next_q_row]) {
                continue;
            }
            if let Some(cols) = pick_rows(m, q, next_q_row + 1, r + 1, row_choice) {
                return Some(cols);
            }
        }
        None
    }
    fn cols_feasible(m: &BinaryMatrix, q: &BinaryMatrix, rows: &[usize]) -> bool {
        // for each column of q, count candidate columns of m matching the
        // prefix; a simple monotone matching feasibility test: scanning m's
        // columns left to right must be able to serve q's columns in order
        let mut qj = 1usize;
        let qc = q.cols();
        for mj in 1..=m.cols() {
            if qj > qc {
                break;
            }
            let matches = rows
                .iter()
                .enumerate()
                .all(|(qi, &mi)| m.get(mi, mj) == q.get(qi + 1, qj));
            if matches {
                qj += 1;
            }
        }
        qj > qc
    }
    fn pick_cols(m: &BinaryMatrix, q: &BinaryMatrix, rows: &[usize]) -> Option<Vec<usize>> {
        // greedy works since any monotone matching will do, but we keep
        // full backtracking for the witness in case of ties
        let qc = q.cols();
        let mut cols = Vec::with_capacity(qc);
        let mut mj = 1usize;
        for qj in 1..=qc {
            let mut found = None;
            while mj <= m.cols() {
                let ok = rows
                    .iter()
                    .enumerate()
                    .all(|(qi, &mi)| m.get(mi, mj) == q.get(qi + 1, qj));
                if ok {
                    found = Some(mj);
                    mj += 1;
                    break;
                }
                mj += 1;
            }
            cols.push(found?);
        }
        Some(cols)
    }
    let cols = pick_rows(m, q, 0, 1, &mut row_choice)?;
    Some((row_choice, cols))
}

pub fn contains_submatrix(m: &BinaryMatrix, q: &BinaryMatrix) -> bool {
    contains_submatrix_witness(m, q).is_some()
}

/// The submatrix partial order: `a` below `b`.
pub fn submatrix_le(a: &BinaryMatrix, b: &BinaryMatrix) -> bool {
    contains_submatrix(b, a)
}

/// Classical pattern containment on permutations.
pub fn perm_contains_classical(pi: &Permutation, sigma: &Permutation) -> bool {
    perm_contains_bivincular(pi, sigma, &[], &[])
}

/// Vincular containment: positions `x` in `adj` force occurrences with
/// adjacent positions i_{x+1} = i_x + 1 (with the border convention
/// i_0 = 0, i_{k+1} = n + 1).
pub fn perm_contains_vincular(pi: &Permutation, sigma: &Permutation, adj: &[usize]) -> bool {
    perm_contains_bivincular(pi, sigma, adj, &[])
}

/// Bivincular containment per the (sigma, X, Y) definition.
pub fn perm_contains_bivincular(
    pi: &Permutation,
    sigma: &Permutation,
    xs: &[usize],
    ys: &[usize],
) -> bool {
    first_bivincular_occurrence(pi, sigma, xs, ys).is_some()
}

/// The positions (1-based, ascending) of the first bivincular occurrence.
pub fn first_bivincular_occurrence(
    pi: &Permutation,
    sigma: &Permutation,
    xs: &[usize],
    ys: &[usize],
) -> Option<Vec<usize>> {
    let mut result = None;
    for_each_bivincular_occurrence(pi, sigma, xs, ys, &mut |occ| {
        result = Some(occ.to_vec());
        false
    });
    result
}

/// Count bivincular occurrences.
pub fn count_bivincular_occurrences(
    pi: &Permutation,
    sigma: &Permutation,
    xs: &[usize],
    ys: &[usize],
) -> usize {
    let mut count = 0;
    for_each_bivincular_occurrence(pi, sigma, xs, ys, &mut |_| {
        count += 1;
        true
    });
    count
}

fn for_each_bivincular_occurrence(
    pi: &Permutation,
    sigma: &Permutation,
    xs: &[usize],
    ys: &[usize],
    visit: &mut dyn FnMut(&[usize]) -> bool,
) {
    let n = pi.len();
    let k = sigma.len();
    if k > n {
        return;
    }
    let mut idx = Vec::with_capacity(k);
    rec(pi, sigma, xs, ys, &mut idx, visit);

    fn rec(
        pi: &Permutation,
        sigma: &Permutation,
        xs: &[usize],
        ys: &[usize],
        idx: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let n = pi.len();
        let k = sigma.len();
        if idx.len() == k {
            return check_and_visit(pi, sigma, xs, ys, idx, visit);
        }
        let start = idx.last().map(|&i| i + 1).unwrap_or(1);
        for i in start..=(n - (k - idx.len()) + 1) {
            // relative-order prefix check
            let pos = idx.len();
            let mut ok = true;
            for (a, &ia) in idx.iter().enumerate() {
                let cmp_sigma = sigma.at(a + 1) < sigma.at(pos + 1);
                let cmp_pi = pi.at(ia) < pi.at(i);
                if cmp_sigma != cmp_pi {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            idx.push(i);
            let keep_going = rec(pi, sigma, xs, ys, idx, visit);
            idx.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }

    fn check_and_visit(
        pi: &Permutation,
        sigma: &Permutation,
        xs: &[usize],
        ys: &[usize],
        idx: &[usize],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let n = pi.len();
        let k = sigma.len();
        // adjacency constraints on positions, with i_0 = 0 and i_{k+1} = n+1
        for &x in xs {
            let lo = if x == 0 { 0 } else { idx[x - 1] };
            let hi = if x == k { n + 1 } else { idx[x] };
            if hi != lo + 1 {
                return true;
            }
        }
        // value-consecutiveness constraints, with j_0 = 0, j_{k+1} = n+1
        if !ys.is_empty() {
            let mut values: Vec<usize> = idx.iter().map(|&i| pi.at(i)).collect();
            values.sort_unstable();
            for &y in ys {
                let lo = if y == 0 { 0 } else { values[y - 1] };
                let hi = if y == k { n + 1 } else { values[y] };
                if hi != lo + 1 {
                    return true;
                }
            }
        }
        visit(idx)
    }
}

/// Mesh pattern (sigma, R): R contains lower-left corners of shaded unit
/// squares in the (k+1)^2 grid.
pub fn perm_contains_mesh(pi: &Permutation, sigma: &Permutation, shaded: &[(usize, usize)]) -> bool {
    let mut found = false;
    for_each_bivincular_occurrence(pi, sigma, &[], &[], &mut |idx| {
        if mesh_occurrence_ok(pi, idx, shaded) {
            found = true;
            false
        } else {
            true
        }
    });
    found
}

/// Check the shading condition for one classical occurrence at `idx`.
pub fn mesh_occurrence_ok(pi: &Permutation, idx: &[usize], shaded: &[(usize, usize)]) -> bool {
    let n = pi.len();
    let k = idx.len();
    let mut values: Vec<usize> = idx.iter().map(|&i| pi.at(i)).collect();
    values.sort_unstable();
    // square (i, j): positions strictly between idx[i-1] and idx[i], values
    // strictly between values[j-1] and values[j] (borders 0 and n+1)
    for &(si, sj) in shaded {
        let plo = if si == 0 { 0 } else { idx[si - 1] };
        let phi = if si == k { n + 1 } else { idx[si] };
        let vlo = if sj == 0 { 0 } else { values[sj - 1] };
        let vhi = if sj == k { n + 1 } else { values[sj] };
        for p in (plo + 1)..phi {
            let v = pi.at(p);
            if v > vlo && v < vhi {
                return false;
            }
        }
    }
    true
}

/// Marcus-Tardos containment: some submatrix of the permutation matrix, of
/// the same dimensions as `p`, dominates `p` entrywise.
pub fn marcus_tardos_contains(pi: &Permutation, p: &BinaryMatrix) -> bool {
    let m = pi.to_matrix();
    let (mr, mc) = (m.rows(), m.cols());
    let (pr, pc) = (p.rows(), p.cols());
    if pr > mr || pc > mc {
        return false;
    }
    // backtracking over row choices; a chosen row set is feasible if the
    // columns can be matched in order with domination
    fn rec(m: &BinaryMatrix, p: &BinaryMatrix, rows: &mut Vec<usize>, min_row: usize) -> bool {
        let pr = p.rows();
        if rows.len() == pr {
            return cols_dominate(m, p, rows);
        }
        for r in min_row..=(m.rows() - (pr - rows.len()) + 1) {
            rows.push(r);
            if rec(m, p, rows, r + 1) {
                return true;
            }
            rows.pop();
        }
        false
    }
    fn cols_dominate(m: &BinaryMatrix, p: &BinaryMatrix, rows: &[usize]) -> bool {
        let mut mj = 1usize;
        for pj in 1..=p.cols() {
            let mut ok = false;
            while mj <= m.cols() {
                let dominated = rows
                    .iter()
                    .enumerate()
                    .all(|(pi_, &mi)| !p.get(pi_ + 1, pj) || m.get(mi, mj));
                mj += 1;
                if dominated {
                    ok = true;
                    break;
                }
            }
            if !ok {
                return false;
            }
        }
        true
    }
    rec(&m, p, &mut Vec::new(), 1)
}

/// A generalized pattern: a grid over {0, 1, *} with column/row adjacency
/// bars and border marks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenPattern {
    pub rows: usize,
    pub cols: usize,
    /// entries[i][j], i from the bottom (0-based), j from the left.
    pub entries: Vec<Vec<GenEntry>>,
    /// col_bars[g] = true: pattern columns g+1 and g+2 must be adjacent.
    pub col_bars: Vec<bool>,
    /// row_bars[g] = true: pattern rows g+1 and g+2 must be adjacent.
    pub row_bars: Vec<bool>,
    /// border marks: the matched rows/cols must touch the bounding box.
    pub north: bool,
    pub east: bool,
    pub south: bool,
    pub west: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenEntry {
    Zero,
    One,
    Any,
}

impl GenPattern {
    pub fn plain(m: &BinaryMatrix) -> GenPattern {
        GenPattern {
            rows: m.rows(),
            cols: m.cols(),
            entries: (1..=m.rows())
                .map(|i| {
                    (1..=m.cols())
                        .map(|j| if m.get(i, j) { GenEntry::One } else { GenEntry::Zero })
                        .collect()
                })
                .collect(),
            col_bars: vec![false; m.cols().saturating_sub(1)],
            row_bars: vec![false; m.rows().saturating_sub(1)],
            north: false,
            east: false,
            south: false,
            west: false,
        }
    }

    /// Rotate 90 degrees counterclockwise, bars and borders following.
    pub fn rotate_ccw(&self) -> GenPattern {
        let (r, c) = (self.rows, self.cols);
        let mut entries = vec![vec![GenEntry::Zero; r]; c];
        for i in 0..r {
            for j in 0..c {
                // cell (i, j) -> (row c-1-j, col i)
                entries[c - 1 - j][i] = self.entries[i][j];
            }
        }
        // column gap g (between cols g+1, g+2) -> row gap c-2-g; row gaps -> col gaps
        let row_bars: Vec<bool> = (0..c.saturating_sub(1))
            .map(|g| self.col_bars[c - 2 - g])
            .collect();
        let col_bars: Vec<bool> = (0..r.saturating_sub(1)).map(|g| self.row_bars[g]).collect();
        GenPattern {
            rows: c,
            cols: r,
            entries,
            col_bars,
            row_bars,
            north: self.east,
            west: self.north,
            south: self.west,
            east: self.south,
        }
    }

    /// The four rotations, deduplicated.
    pub fn rotations(&self) -> Vec<GenPattern> {
        let mut out = vec![self.clone()];
        let mut cur = self.clone();
        for _ in 0..3 {
            cur = cur.rotate_ccw();
            if !out.contains(&cur) {
                out.push(cur.clone());
            }
        }
        out
    }

    /// Parse the pattern text format: optional `borders:<subset of NESW>`
    /// header, cell rows written top row first with optional `|` between
    /// cells (column adjacency), and optional separator lines of `-`
    /// (row adjacency) between cell rows.
    pub fn parse(text: &str) -> Result<GenPattern, PatternError> {
        let mut north = false;
        let mut east = false;
        let mut south = false;
        let mut west = false;
        let mut cell_lines: Vec<&str> = Vec::new();
        let mut bar_after_visual_row: Vec<bool> = Vec::new();
        for raw in text.lines() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("borders:") {
                for ch in rest.trim().chars() {
                    match ch {
                        'N' => north = true,
                        'E' => east = true,
                        'S' => south = true,
                        'W' => west = true,
                        _ => return Err(PatternError::BadPatternFile("bad border letter")),
                    }
                }
                continue;
            }
            if line.bytes().all(|b| b == b'-' || b == b'+') {
                if cell_lines.is_empty() {
                    return Err(PatternError::BadPatternFile("separator before first row"));
                }
                *bar_after_visual_row.last_mut().unwrap() = true;
                continue;
            }
            cell_lines.push(line);
            bar_after_visual_row.push(false);
        }
        if cell_lines.is_empty() {
            return Err(PatternError::BadPatternFile("no cell rows"));
        }
        // parse each cell line into entries + column bars
        let mut grid: Vec<Vec<GenEntry>> = Vec::new();
        let mut col_bars: Option<Vec<bool>> = None;
        for line in &cell_lines {
            let mut entries = Vec::new();
            let mut bars = Vec::new();
            let mut expect_cell = true;
            for ch in line.chars() {
                if expect_cell {
                    entries.push(match ch {
                        '0' => GenEntry::Zero,
                        '1' => GenEntry::One,
                        '*' => GenEntry::Any,
                        _ => return Err(PatternError::BadPatternFile("bad cell character")),
                    });
                    expect_cell = false;
                } else {
                    match ch {
                        '|' => {
                            bars.push(true);
                            expect_cell = true;
                        }
                        ' ' | '.' => {
                            bars.push(false);
                            expect_cell = true;
                        }
                        _ => return Err(PatternError::BadPatternFile("bad separator character")),
                    }
                }
            }
            if expect_cell {
                return Err(PatternError::BadPatternFile("line ends with a separator"));
            }
            match &col_bars {
                None => col_bars = Some(bars),
                Some(prev) => {
                    if *prev != bars {
                        return Err(PatternError::BadPatternFile(
                            "column bars must agree across rows",
                        ));
                    }
                }
            }
            grid.push(entries);
        }
        let cols = grid[0].len();
        if grid.iter().any(|r| r.len() != cols) {
            return Err(PatternError::BadPatternFile("ragged rows"));
        }
        let rows = grid.len();
        // visual order: first line is the top row; flip to bottom-up
        grid.reverse();
        // bar_after_visual_row[i] marks a bar below visual row i, i.e.
        // between bottom-up rows (rows-1-i) and (rows-1-i)+1... compute:
        let mut row_bars = vec![false; rows.saturating_sub(1)];
        for (vis, &has) in bar_after_visual_row.iter().enumerate() {
            if has {
                // bar between visual rows vis and vis+1 = bottom-up gap
                // between rows (rows-1-vis-1) and (rows-1-vis)
                let gap = rows - 2 - vis;
                row_bars[gap] = true;
            }
        }
        Ok(GenPattern {
            rows,
            cols,
            entries: grid,
            col_bars: col_bars.unwrap(),
            row_bars,
            north,
            east,
            south,
            west,
        })
    }

    /// Render in the pattern text format.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let borders: String = [
            (self.north, 'N'),
            (self.east, 'E'),
            (self.south, 'S'),
            (self.west, 'W'),
        ]
        .iter()
        .filter(|(b, _)| *b)
        .map(|(_, c)| c)
        .collect();
        if !borders.is_empty() {
            out.push_str(&format!("borders:{borders}\n"));
        }
        for i in (0..self.rows).rev() {
            for j in 0..self.cols {
                out.push(match self.entries[i][j] {
                    GenEntry::Zero => '0',
                    GenEntry::One => '1',
                    GenEntry::Any => '*',
                });
                if j + 1 < self.cols {
                    out.push(if self.col_bars[j] { '|' } else { ' ' });
                }
            }
            out.push('\n');
            if i > 0 && self.row_bars[i - 1] {
                out.push_str(&"-".repeat(2 * self.cols - 1));
                out.push('\n');
            }
        }
        out
    }
}

/// Containment of a generalized pattern in a polyomino (or any matrix):
/// choose ascending host rows/columns matching the entries, with bar-forced
/// adjacency and border-forced contact with the bounding box.
pub fn gen_pattern_match(host: &BinaryMatrix, g: &GenPattern) -> bool {
    let (hr, hc) = (host.rows(), host.cols());
    if g.rows > hr || g.cols > hc {
        return false;
    }
    // enumerate row choices satisfying bars/borders, then column choices
    let mut rows = Vec::with_capacity(g.rows);
    fn pick<F: FnMut(&[usize]) -> bool>(
        count: usize,
        total: usize,
        bars: &[bool],
        low_border: bool,
        high_border: bool,
        chosen: &mut Vec<usize>,
        check: &mut F,
    ) -> bool {
        if chosen.len() == count {
            return check(chosen);
        }
        let pos = chosen.len();
        let start = if pos == 0 {
            if low_border {
                1
            } else {
                1
            }
        } else if bars[pos - 1] {
            chosen[pos - 1] + 1
        } else {
            chosen[pos - 1] + 1
        };
        let end = total - (count - pos) + 1;
        for v in start..=end {
            if pos == 0 && low_border && v != 1 {
                break;
            }
            if pos > 0 && bars[pos - 1] && v != chosen[pos - 1] + 1 {
                break;
            }
            if pos == count - 1 && high_border && v != total {
                continue;
            }
            chosen.push(v);
            if pick(count, total, bars, low_border, high_border, chosen, check) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let g2 = g.clone();
    let host2 = host.clone();
    pick(
        g.rows,
        hr,
        &g.row_bars,
        g.south,
        g.north,
        &mut rows,
        &mut |rows: &[usize]| {
            let mut cols = Vec::with_capacity(g2.cols);
            let rows_v = rows.to_vec();
            pick(
                g2.cols,
                hc,
                &g2.col_bars,
                g2.west,
                g2.east,
                &mut cols,
                &mut |cols: &[usize]| {
                    rows_v.iter().enumerate().all(|(i, &hi)| {
                        cols.iter().enumerate().all(|(j, &hj)| match g2.entries[i][j] {
                            GenEntry::Any => true,
                            GenEntry::One => host2.get(hi, hj),
                            GenEntry::Zero => !host2.get(hi, hj),
                        })
                    })
                },
            )
        },
    )
}

/// The Z1 and Z2 patterns of the 2-convex characterization (bottom-up rows),
/// with their rotations.
pub fn two_convex_patterns() -> Vec<GenPattern> {
    let z1 = GenPattern::parse(concat!("0|* 1\n", "-----\n", "*|1 0\n", "1|0 0\n")).unwrap();
    let z2 = GenPattern::parse(concat!(
        "0 0|* 1\n",
        "0 *|1 *\n",
        "-------\n",
        "* 1|* 0\n",
        "1 *|0 0\n"
    ))
    .unwrap();
    let mut out = Vec::new();
    for p in z1.rotations() {
        out.push(p);
    }
    for p in z2.rotations() {
        out.push(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mx(text: &str) -> BinaryMatrix {
        BinaryMatrix::from_text(text).unwrap()
    }

    fn perm(s: &str) -> Permutation {
        Permutation::from_digits(s).unwrap()
    }

    #[test]
    fn self_containment_and_witness() {
        let m = mx("101\n110");
        assert!(contains_submatrix(&m, &m));
        let q = mx("11");
        let (rows, cols) = contains_submatrix_witness(&m, &q).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(cols.len(), 2);
        // restriction really is q
        assert_eq!(m.restrict(&rows, &cols), q);
    }

    #[test]
    fn submatrix_vs_classical_perm_containment() {
        let caps = crate::enumerate::Caps::default();
        for n in 1..=5usize {
            for pi in crate::enumerate::enumerate_permutations(n, &caps).unwrap() {
                for k in 1..=3usize.min(n) {
                    for sigma in crate::enumerate::enumerate_permutations(k, &caps).unwrap() {
                        assert_eq!(
                            perm_contains_classical(&pi, &sigma),
                            contains_submatrix(&pi.to_matrix(), &sigma.to_matrix()),
                            "pi={pi}, sigma={sigma}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn paper_classical_examples() {
        assert!(perm_contains_classical(&perm("24531"), &perm("231")));
        assert!(!perm_contains_classical(&perm("51423"), &perm("231")));
    }

    #[test]
    fn paper_vincular_example() {
        // 12-3-4 has one occurrence in 3542617 (3567); 1-2-3-4 has two
        let pi = perm("3542617");
        let sigma = perm("1234");
        assert_eq!(count_bivincular_occurrences(&pi, &sigma, &[1], &[]), 1);
        assert_eq!(count_bivincular_occurrences(&pi, &sigma, &[], &[]), 2);
    }

    #[test]
    fn paper_mesh_example() {
        // (3142, R), R = {(0,2),(1,4),(4,2)}: in 425163, 5163 is not an
        // occurrence but 4263 is
        let pi = perm("425163");
        let sigma = perm("3142");
        let shaded = [(0, 2), (1, 4), (4, 2)];
        assert!(perm_contains_mesh(&pi, &sigma, &shaded));
        // 5163 sits at positions 3,4,5,6 and must fail the shading check
        assert!(!mesh_occurrence_ok(&pi, &[3, 4, 5, 6], &shaded));
        // 4263 at positions 1,2,5,6 passes
        assert!(mesh_occurrence_ok(&pi, &[1, 2, 5, 6], &shaded));
    }

    #[test]
    fn bivincular_reduces_to_classical_and_vincular() {
        let pi = perm("3542617");
        let sigma = perm("123");
        assert_eq!(
            perm_contains_bivincular(&pi, &sigma, &[], &[]),
            perm_contains_classical(&pi, &sigma)
        );
        assert_eq!(
            perm_contains_bivincular(&pi, &sigma, &[1, 2], &[]),
            perm_contains_vincular(&pi, &sigma, &[1, 2])
        );
    }

    #[test]
    fn av4_of_123_231() {
        let caps = crate::enumerate::Caps::default();
        let b1 = perm("123");
        let b2 = perm("231");
        let avoiders: Vec<String> = crate::enumerate::enumerate_permutations(4, &caps)
            .unwrap()
            .into_iter()
            .filter(|p| {
                !perm_contains_classical(p, &b1) && !perm_contains_classical(p, &b2)
            })
            .map(|p| p.to_string())
            .collect();
        assert_eq!(
            avoiders,
            vec!["1432", "2143", "3214", "4132", "4213", "4312", "4321"]
        );
    }

    #[test]
    fn marcus_tardos_basics() {
        let pi = perm("2413");
        // all-zero pattern is dominated by anything of fitting dimensions
        let z = mx("00\n00");
        assert!(marcus_tardos_contains(&pi, &z));
        // a permutation pattern coincides with classical containment
        let caps = crate::enumerate::Caps::default();
        for p in crate::enumerate::enumerate_permutations(3, &caps).unwrap() {
            assert_eq!(
                marcus_tardos_contains(&pi, &p.to_matrix()),
                perm_contains_classical(&pi, &p)
            );
        }
    }

    #[test]
    fn marcus_tardos_equals_flip_closure() {
        let caps = crate::enumerate::Caps::default();
        let pis = crate::enumerate::enumerate_permutations(5, &caps).unwrap();
        // all p up to 2x3
        for rows in 1..=2usize {
            for cols in 1..=3usize {
                for bits in 0..(1u32 << (rows * cols)) {
                    let mut p = BinaryMatrix::new(rows, cols);
                    for b in 0..(rows * cols) {
                        if bits >> b & 1 == 1 {
                            p.set(b / cols + 1, b % cols + 1, true);
                        }
                    }
                    let flips = flip_closure(&p);
                    for pi in &pis {
                        let mt = marcus_tardos_contains(pi, &p);
                        let via_flips =
                            flips.iter().any(|f| contains_submatrix(&pi.to_matrix(), f));
                        assert_eq!(mt, via_flips, "p=\n{}\npi={pi}", p.to_text());
                    }
                }
            }
        }
    }

    fn flip_closure(p: &BinaryMatrix) -> Vec<BinaryMatrix> {
        let zeros = p.uncovered_zeros();
        let mut out = Vec::new();
        for mask in 0..(1usize << zeros.len()) {
            let mut q = p.clone();
            for (b, &(i, j)) in zeros.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    q.set(i, j, true);
                }
            }
            out.push(q);
        }
        out
    }

    #[test]
    fn transpose_duality() {
        let m = mx("1101\n0110\n1010");
        let q = mx("10\n01");
        assert_eq!(
            contains_submatrix(&m, &q),
            contains_submatrix(&m.transpose(), &q.transpose())
        );
    }

    #[test]
    fn gen_pattern_parse_render_round_trip() {
        let text = "borders:NE\n0 *|1\n-----\n* 1|0\n1 0|0\n";
        let g = GenPattern::parse(text).unwrap();
        assert_eq!(g.rows, 3);
        assert_eq!(g.cols, 3);
        assert!(g.north && g.east && !g.south && !g.west);
        assert_eq!(g.col_bars, vec![false, true]);
        assert_eq!(g.row_bars, vec![false, true]);
        let g2 = GenPattern::parse(&g.render()).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn single_one_with_all_borders() {
        // matches only via a cell in the appropriate corner: a 1x1 pattern
        // with all four borders requires a 1x1 host
        let mut g = GenPattern::plain(&mx("1"));
        g.north = true;
        g.east = true;
        g.south = true;
        g.west = true;
        assert!(gen_pattern_match(&mx("1"), &g));
        assert!(!gen_pattern_match(&mx("11"), &g));
        // with only south+west borders, the bottom-left cell must be 1
        let mut g = GenPattern::plain(&mx("1"));
        g.south = true;
        g.west = true;
        assert!(gen_pattern_match(&mx("01\n11"), &g));
        assert!(!gen_pattern_match(&mx("11\n01"), &g));
    }

    #[test]
    fn adjacency_bars_constrain() {
        // pattern [1 1] with a bar: host columns must be adjacent
        let g = GenPattern::parse("1|1").unwrap();
        assert!(gen_pattern_match(&mx("110"), &g));
        assert!(gen_pattern_match(&mx("011"), &g));
        assert!(!gen_pattern_match(&mx("101"), &g));
        // without the bar it matches
        let g = GenPattern::parse("1 1").unwrap();
        assert!(gen_pattern_match(&mx("101"), &g));
    }
}
