//! The h/v greedy paths, the merge cell C, the flat/up/right classification,
//! and the boundary decomposition of k-parallelogram polyominoes into the
//! ordered path tuples (alpha_1..alpha_k, beta_1..beta_k), with exact
//! reconstruction.
//!
//! Boundary conventions. The upper boundary path starts at the bottom-left
//! corner of the bounding box with north steps and ends with the top edge of
//! the upper-rightmost cell E; the lower path starts with east steps and ends
//! with the east edge of E. Each change-of-direction cell of h or v exposes a
//! boundary step: an east-blocked cell its east edge (an n step of the lower
//! path), a north-blocked cell its north edge (an e step of the upper path);
//! the terminal cell E exposes the edge in the direction of travel. The i-th
//! step met by h or v is X_i (horizontal) or Y_i (vertical); after the cell C
//! the two paths meet the same steps, which therefore carry two consecutive
//! indices. When C = S there is a single path: its j-th encounter carries
//! indices j and j+1, and the missing first label is the leftmost east step
//! of the upper path (X_1) or the leftmost north step of the lower path
//! (Y_1), depending on which degenerate case applies.

use crate::classify::is_parallelogram;
use crate::matrix::BinaryMatrix;
use crate::poly::Polyomino;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KParError {
    #[error("not a parallelogram polyomino")]
    NotParallelogram,
    #[error("bars have convexity degree zero and are not classified")]
    DegreeZero,
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Step {
    N,
    E,
}

/// A monotone path over {n, e} with its cell trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotonePath {
    /// Visited cells, starting at S.
    pub cells: Vec<(usize, usize)>,
    /// Steps between consecutive cells.
    pub steps: Vec<Step>,
}

impl MonotonePath {
    pub fn changes(&self) -> usize {
        self.steps.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Maximal runs of equal steps.
    pub fn sides(&self) -> usize {
        if self.steps.is_empty() {
            0
        } else {
            self.changes() + 1
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KParClass {
    Flat,
    Up,
    Right,
}

/// Column profile view of a parallelogram polyomino.
struct Profile {
    w: usize,
    h: usize,
    top: Vec<usize>,  // top[x-1], 1-based rows
    bot: Vec<usize>,  // bot[x-1]
    rmax: Vec<usize>, // rightmost occupied column per row, rmax[y-1]
}

impl Profile {
    fn of(p: &Polyomino) -> Result<Profile, KParError> {
        if !is_parallelogram(p) {
            return Err(KParError::NotParallelogram);
        }
        let spans = p.column_spans();
        let top: Vec<usize> = spans.iter().map(|s| s.1).collect();
        let bot: Vec<usize> = spans.iter().map(|s| s.0).collect();
        let rmax: Vec<usize> = p.row_spans().iter().map(|s| s.1).collect();
        Ok(Profile {
            w: p.width(),
            h: p.height(),
            top,
            bot,
            rmax,
        })
    }

    #[inline]
    fn contains(&self, i: usize, j: usize) -> bool {
        j >= 1 && j <= self.w && i >= self.bot[j - 1] && i <= self.top[j - 1]
    }

    /// Greedy maximal-side path from S = (1,1) to E = (w,h) starting with the
    /// given step; `None` when the first step is impossible.
    fn greedy(&self, start: Step) -> Option<MonotonePath> {
        let (mut i, mut j) = (1usize, 1usize);
        let mut cells = vec![(i, j)];
        let mut steps = Vec::new();
        if (i, j) == (self.h, self.w) {
            return Some(MonotonePath { cells, steps });
        }
        let mut dir = start;
        let can = |dir: Step, i: usize, j: usize, prof: &Profile| match dir {
            Step::N => prof.contains(i + 1, j),
            Step::E => prof.contains(i, j + 1),
        };
        if !can(dir, i, j, self) {
            return None;
        }
        while (i, j) != (self.h, self.w) {
            let mut moved = false;
            while can(dir, i, j, self) {
                match dir {
                    Step::N => i += 1,
                    Step::E => j += 1,
                }
                cells.push((i, j));
                steps.push(dir);
                moved = true;
            }
            if !moved {
                // parallelogram profiles always allow progress toward E
                unreachable!("greedy path stuck inside a parallelogram polyomino");
            }
            dir = match dir {
                Step::N => Step::E,
                Step::E => Step::N,
            };
        }
        Some(MonotonePath { cells, steps })
    }
}

/// The horizontal and vertical greedy paths; when the bottom row (resp. the
/// first column) has a single cell, h (resp. v) is set equal to the other
/// path, per the degenerate rule.
pub fn paths_h_v(p: &Polyomino) -> Result<(MonotonePath, MonotonePath), KParError> {
    let prof = Profile::of(p)?;
    let h = prof.greedy(Step::E);
    let v = prof.greedy(Step::N);
    match (h, v) {
        (Some(h), Some(v)) => Ok((h, v)),
        (Some(h), None) => Ok((h.clone(), h)),
        (None, Some(v)) => Ok((v.clone(), v)),
        (None, None) => {
            // unit cell: empty path
            let unit = MonotonePath {
                cells: vec![(1, 1)],
                steps: vec![],
            };
            Ok((unit.clone(), unit))
        }
    }
}

pub fn path_h(p: &Polyomino) -> Result<MonotonePath, KParError> {
    Ok(paths_h_v(p)?.0)
}

pub fn path_v(p: &Polyomino) -> Result<MonotonePath, KParError> {
    Ok(paths_h_v(p)?.1)
}

/// The first cell after which h and v are superimposed: the start of their
/// longest common cell suffix. Equals E when they only share E; equals S
/// when the paths coincide entirely.
pub fn cell_c(p: &Polyomino) -> Result<(usize, usize), KParError> {
    let (h, v) = paths_h_v(p)?;
    let mut k = 0;
    while k < h.cells.len()
        && k < v.cells.len()
        && h.cells[h.cells.len() - 1 - k] == v.cells[v.cells.len() - 1 - k]
    {
        k += 1;
    }
    Ok(h.cells[h.cells.len() - k])
}

/// Convexity degree of a parallelogram polyomino: min changes among h and v.
pub fn kpar_degree(p: &Polyomino) -> Result<usize, KParError> {
    let (h, v) = paths_h_v(p)?;
    Ok(h.changes().min(v.changes()))
}

/// Flat iff C = E; up (right) iff C != E and the paths end with a north
/// (east) step. Bars (degree 0) are not classified.
pub fn classify_kpar(p: &Polyomino) -> Result<KParClass, KParError> {
    let (h, v) = paths_h_v(p)?;
    let k = h.changes().min(v.changes());
    if k == 0 {
        return Err(KParError::DegreeZero);
    }
    let e = (p.height(), p.width());
    let c = cell_c(p)?;
    if c == e {
        return Ok(KParClass::Flat);
    }
    match *h.steps.last().expect("degree >= 1 implies steps") {
        Step::N => Ok(KParClass::Up),
        Step::E => Ok(KParClass::Right),
    }
}

/// The ordered boundary-path tuples encoding a k-parallelogram polyomino.
/// Words are over {'n','e'}; `alphas[i]` is alpha_{i+1}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub k: usize,
    #[serde(rename = "alpha")]
    pub alphas: Vec<String>,
    #[serde(rename = "beta")]
    pub betas: Vec<String>,
}

fn word_width(w: &str) -> usize {
    w.bytes().filter(|&b| b == b'e').count()
}

fn word_height(w: &str) -> usize {
    w.bytes().filter(|&b| b == b'n').count()
}

fn is_flat_word(w: &str) -> bool {
    word_width(w) == 0 || word_height(w) == 0
}

/// One boundary encounter: a cut position on the upper path (`OnUpper`,
/// position of an e step) or on the lower path (position of an n step).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Cut {
    OnUpper(usize),
    OnLower(usize),
}

struct Boundary {
    upper: Vec<Step>, // starts with n..., ends with e
    lower: Vec<Step>, // starts with e..., ends with n
    upper_e_pos: Vec<usize>, // position of the e step of column x (1-based x)
    lower_n_pos: Vec<usize>, // position of the n step of row y (1-based y)
}

impl Boundary {
    fn of(prof: &Profile) -> Boundary {
        let mut upper = Vec::new();
        let mut upper_e_pos = vec![0; prof.w];
        for _ in 0..prof.top[0] {
            upper.push(Step::N);
        }
        for x in 1..=prof.w {
            if x > 1 {
                for _ in prof.top[x - 2]..prof.top[x - 1] {
                    upper.push(Step::N);
                }
            }
            upper_e_pos[x - 1] = upper.len();
            upper.push(Step::E);
        }
        let mut lower = Vec::new();
        let mut lower_n_pos = vec![0; prof.h];
        for _ in 0..prof.rmax[0] {
            lower.push(Step::E);
        }
        for y in 1..=prof.h {
            if y > 1 {
                for _ in prof.rmax[y - 2]..prof.rmax[y - 1] {
                    lower.push(Step::E);
                }
            }
            lower_n_pos[y - 1] = lower.len();
            lower.push(Step::N);
        }
        Boundary {
            upper,
            lower,
            upper_e_pos,
            lower_n_pos,
        }
    }
}

/// Boundary encounters of a path, in travel order: one per change of
/// direction plus the terminal encounter at E, each exposing the edge in the
/// direction of travel at the moment of blocking.
fn encounters(path: &MonotonePath, b: &Boundary) -> Vec<Cut> {
    let mut out = Vec::new();
    let n = path.steps.len();
    for idx in 0..n {
        let is_last_of_side = idx + 1 == n || path.steps[idx + 1] != path.steps[idx];
        if is_last_of_side {
            let (i, j) = path.cells[idx + 1];
            out.push(match path.steps[idx] {
                Step::E => Cut::OnLower(b.lower_n_pos[i - 1]),
                Step::N => Cut::OnUpper(b.upper_e_pos[j - 1]),
            });
        }
    }
    out
}

fn word_of(steps: &[Step]) -> String {
    steps
        .iter()
        .map(|s| match s {
            Step::N => 'n',
            Step::E => 'e',
        })
        .collect()
}

/// Cut the upper (lower) boundary into alpha_1..alpha_k (beta_1..beta_k).
pub fn decompose(p: &Polyomino) -> Result<Decomposition, KParError> {
    let prof = Profile::of(p)?;
    let (h, v) = paths_h_v(p)?;
    let k = h.changes().min(v.changes());
    if k == 0 {
        return Err(KParError::DegreeZero);
    }
    let boundary = Boundary::of(&prof);
    // label slots X_1..X_{k+2}, Y_1..Y_{k+2}
    let mut x_pos: Vec<Option<usize>> = vec![None; k + 3];
    let mut y_pos: Vec<Option<usize>> = vec![None; k + 3];
    let assign = |idx: usize, cut: Cut, x_pos: &mut Vec<Option<usize>>, y_pos: &mut Vec<Option<usize>>| {
        if idx >= k + 3 {
            return;
        }
        match cut {
            Cut::OnUpper(pos) => {
                debug_assert!(x_pos[idx].is_none() || x_pos[idx] == Some(pos));
                x_pos[idx] = Some(pos);
            }
            Cut::OnLower(pos) => {
                debug_assert!(y_pos[idx].is_none() || y_pos[idx] == Some(pos));
                y_pos[idx] = Some(pos);
            }
        }
    };
    if h.cells != v.cells {
        for (j, cut) in encounters(&h, &boundary).iter().enumerate() {
            assign(j + 1, *cut, &mut x_pos, &mut y_pos);
        }
        for (j, cut) in encounters(&v, &boundary).iter().enumerate() {
            assign(j + 1, *cut, &mut x_pos, &mut y_pos);
        }
    } else {
        // C = S: a single path plays both roles with indices j and j+1,
        // plus the fabricated first label on the other boundary
        let single = if h.steps.first() == Some(&Step::E) {
            // case i: one-cell first column
            x_pos[1] = Some(boundary.upper_e_pos[0]);
            &h
        } else {
            // case ii: one-cell bottom row
            y_pos[1] = Some(boundary.lower_n_pos[0]);
            &v
        };
        for (j, cut) in encounters(single, &boundary).iter().enumerate() {
            assign(j + 1, *cut, &mut x_pos, &mut y_pos);
            assign(j + 2, *cut, &mut x_pos, &mut y_pos);
        }
    }
    let xs: Vec<usize> = (1..=k + 1)
        .map(|i| x_pos[i].expect("X labels 1..k+1 are always determined"))
        .collect();
    let ys: Vec<usize> = (1..=k + 1)
        .map(|i| y_pos[i].expect("Y labels 1..k+1 are always determined"))
        .collect();
    debug_assert!(xs.windows(2).all(|w| w[0] <= w[1]));
    debug_assert!(ys.windows(2).all(|w| w[0] <= w[1]));
    // alpha_1 = [X_k, end of X_{k+1}]; alpha_i = [X_{k+1-i}, X_{k+2-i}) for i >= 2
    let mut alphas = Vec::with_capacity(k);
    let mut betas = Vec::with_capacity(k);
    alphas.push(word_of(&boundary.upper[xs[k - 1]..=xs[k]]));
    betas.push(word_of(&boundary.lower[ys[k - 1]..=ys[k]]));
    for i in 2..=k {
        alphas.push(word_of(&boundary.upper[xs[k - i]..xs[k + 1 - i]]));
        betas.push(word_of(&boundary.lower[ys[k - i]..ys[k + 1 - i]]));
    }
    Ok(Decomposition { k, alphas, betas })
}

impl Decomposition {
    fn validate(&self) -> Result<(), KParError> {
        use KParError::InvalidDecomposition as Bad;
        if self.k < 1 {
            return Err(Bad("k must be at least 1"));
        }
        if self.alphas.len() != self.k || self.betas.len() != self.k {
            return Err(Bad("alpha/beta tuple length must equal k"));
        }
        for w in self.alphas.iter().chain(self.betas.iter()) {
            if !w.bytes().all(|b| b == b'n' || b == b'e') {
                return Err(Bad("words must be over {n,e}"));
            }
        }
        let a1 = &self.alphas[0];
        let b1 = &self.betas[0];
        if a1.is_empty() || b1.is_empty() {
            return Err(Bad("alpha_1 and beta_1 must be nonempty"));
        }
        if !a1.starts_with('e') || !a1.ends_with('e') {
            return Err(Bad("alpha_1 must start and end with an east step"));
        }
        if !b1.starts_with('n') || !b1.ends_with('n') {
            return Err(Bad("beta_1 must start and end with a north step"));
        }
        for w in self.alphas.iter().skip(1) {
            if !w.is_empty() && !w.starts_with('e') {
                return Err(Bad("nonempty alpha_i must start with an east step"));
            }
        }
        for w in self.betas.iter().skip(1) {
            if !w.is_empty() && !w.starts_with('n') {
                return Err(Bad("nonempty beta_i must start with a north step"));
            }
        }
        // width/height chains
        if self.k >= 2 {
            if word_width(a1) != word_width(&self.betas[1]) + 1 {
                return Err(Bad("width(alpha_1) must equal width(beta_2) + 1"));
            }
            if word_height(b1) != word_height(&self.alphas[1]) + 1 {
                return Err(Bad("height(beta_1) must equal height(alpha_2) + 1"));
            }
            for i in 2..self.k {
                if word_width(&self.alphas[i - 1]) != word_width(&self.betas[i]) {
                    return Err(Bad("alpha_i and beta_{i+1} must have equal width"));
                }
                if word_height(&self.betas[i - 1]) != word_height(&self.alphas[i]) {
                    return Err(Bad("beta_i and alpha_{i+1} must have equal height"));
                }
            }
            for i in 2..=self.k {
                if self.alphas[i - 1].is_empty() && self.betas[i - 1].is_empty() {
                    return Err(Bad("alpha_i and beta_i cannot both be empty"));
                }
            }
        }
        // flat/up/right shape of the innermost pair
        let a1_flat = is_flat_word(a1);
        let b1_flat = is_flat_word(b1);
        if !a1_flat && !b1_flat {
            return Err(Bad("alpha_1 and beta_1 cannot both be non-flat"));
        }
        if a1_flat && b1_flat && (a1.len() < 2 || b1.len() < 2) {
            return Err(Bad("flat decompositions need alpha_1 and beta_1 longer than one step"));
        }
        Ok(())
    }

    pub fn semi_perimeter(&self) -> usize {
        self.alphas[0].len()
            + self.betas[0].len()
            + self
                .alphas
                .iter()
                .skip(1)
                .map(|w| word_width(w))
                .sum::<usize>()
            + self
                .betas
                .iter()
                .skip(1)
                .map(|w| word_height(w))
                .sum::<usize>()
    }
}

/// Rebuild the unique polyomino with the given decomposition.
pub fn recompose(d: &Decomposition) -> Result<Polyomino, KParError> {
    use KParError::InvalidDecomposition as Bad;
    d.validate()?;
    let a1 = &d.alphas[0];
    let b1 = &d.betas[0];
    // trailing runs past the last cut: e^{width(beta_1)} on the upper path,
    // n^{height(alpha_1)} on the lower path (zero in the flat class)
    let tail_e = word_width(b1);
    let tail_n = word_height(a1);
    let sum_aw: usize = d.alphas.iter().map(|w| word_width(w)).sum();
    let sum_ah: usize = d.alphas.iter().map(|w| word_height(w)).sum();
    let sum_bw: usize = d.betas.iter().map(|w| word_width(w)).sum();
    let sum_bh: usize = d.betas.iter().map(|w| word_height(w)).sum();
    let w = sum_aw + tail_e;
    let h = sum_bh + tail_n;
    if h < sum_ah + 1 {
        return Err(Bad("alpha heights exceed the available height"));
    }
    if w < sum_bw + 1 {
        return Err(Bad("beta widths exceed the available width"));
    }
    let lead_n = h - sum_ah;
    let lead_e = w - sum_bw;
    let mut upper = vec![Step::N; lead_n];
    for word in d.alphas.iter().rev() {
        upper.extend(word.bytes().map(|b| if b == b'n' { Step::N } else { Step::E }));
    }
    upper.extend(std::iter::repeat(Step::E).take(tail_e));
    let mut lower = vec![Step::E; lead_e];
    for word in d.betas.iter().rev() {
        lower.extend(word.bytes().map(|b| if b == b'n' { Step::N } else { Step::E }));
    }
    lower.extend(std::iter::repeat(Step::N).take(tail_n));
    // profiles from the boundary words
    let mut top = vec![0usize; w];
    let mut y = 0usize;
    let mut x = 0usize;
    for s in &upper {
        match s {
            Step::N => y += 1,
            Step::E => {
                top[x] = y;
                x += 1;
            }
        }
    }
    if x != w || y != h {
        return Err(Bad("upper path does not span the bounding box"));
    }
    let mut rmax = vec![0usize; h];
    let (mut x, mut y) = (0usize, 0usize);
    for s in &lower {
        match s {
            Step::E => x += 1,
            Step::N => {
                rmax[y] = x;
                y += 1;
            }
        }
    }
    if x != w || y != h {
        return Err(Bad("lower path does not span the bounding box"));
    }
    if top.windows(2).any(|t| t[0] > t[1]) || rmax.windows(2).any(|r| r[0] > r[1]) {
        return Err(Bad("boundary profiles are not monotone"));
    }
    if top[0] == 0 || rmax[0] == 0 {
        return Err(Bad("boundary paths must begin with a step of their own type"));
    }
    // bot[x] = least row whose rightmost cell reaches column x+1
    let mut m = BinaryMatrix::new(h, w);
    for cx in 0..w {
        let bot = (0..h)
            .find(|&ry| rmax[ry] >= cx + 1)
            .ok_or(Bad("a column is empty"))?;
        if bot + 1 > top[cx] {
            return Err(Bad("upper and lower boundaries cross"));
        }
        for ry in bot..top[cx] {
            m.set(ry + 1, cx + 1, true);
        }
    }
    // adjacent columns must overlap (paths disjoint except at endpoints)
    let poly = Polyomino::validate(m).map_err(|_| Bad("paths do not bound a polyomino"))?;
    if !is_parallelogram(&poly) {
        return Err(Bad("paths do not bound a parallelogram polyomino"));
    }
    let again = decompose(&poly).map_err(|_| Bad("reconstruction has no decomposition"))?;
    if &again != d {
        return Err(Bad("decomposition does not satisfy the cut conventions"));
    }
    Ok(poly)
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k={} alpha=[{}] beta=[{}]",
            self.k,
            self.alphas.join(","),
            self.betas.join(",")
        )
    }
}

/// Theorem-style inductive generator: all decompositions of degree exactly
/// `k` with semi-perimeter at most `max_sp`, built by extending degree-(k-1)
/// decompositions with a new outermost pair (alpha_k, beta_k). Used as a
/// cross-check of decompose/recompose in tests.
pub fn generate_decompositions(k: usize, max_sp: usize) -> Vec<Decomposition> {
    assert!(k >= 1);
    let mut out = Vec::new();
    if k == 1 {
        // alpha_1 = e^a (a >= 2) with beta_1 = n^b (b >= 2) for flat;
        // up: beta_1 flat, alpha_1 non-flat starting/ending with e;
        // right: mirrored
        for a_w in 1..=max_sp {
            for a_h in 0..=max_sp {
                let alpha = alpha1_words(a_w, a_h);
                for alpha in alpha {
                    for b_h in 1..=max_sp {
                        for b_w in 0..=max_sp {
                            if alpha.len() + b_w + b_h > max_sp {
                                continue;
                            }
                            for beta in beta1_words(b_w, b_h) {
                                let d = Decomposition {
                                    k: 1,
                                    alphas: vec![alpha.clone()],
                                    betas: vec![beta],
                                };
                                if d.validate().is_ok() && d.semi_perimeter() <= max_sp {
                                    out.push(d);
                                }
                            }
                        }
                    }
                }
            }
        }
    } else {
        for base in generate_decompositions(k - 1, max_sp) {
            // extend with alpha_k (height = height(beta_{k-1}) - [k=2]),
            // beta_k (width = width(alpha_{k-1}) - [k=2])
            let need_ah = word_height(&base.betas[k - 2]).saturating_sub(if k == 2 { 1 } else { 0 });
            let need_bw = word_width(&base.alphas[k - 2]).saturating_sub(if k == 2 { 1 } else { 0 });
            let slack = max_sp.saturating_sub(base.semi_perimeter());
            for a_w in 0..=slack {
                let alpha_opts = if a_w == 0 {
                    vec![String::new()]
                } else {
                    mid_words_e(a_w, need_ah)
                };
                for alpha in alpha_opts {
                    if !alpha.is_empty() && word_height(&alpha) != need_ah {
                        continue;
                    }
                    for b_h in 0..=slack.saturating_sub(a_w) {
                        let beta_opts = if b_h == 0 {
                            vec![String::new()]
                        } else {
                            mid_words_n(need_bw, b_h)
                        };
                        for beta in beta_opts {
                            let mut d = base.clone();
                            d.k = k;
                            d.alphas.push(alpha.clone());
                            d.betas.push(beta);
                            if d.validate().is_ok() && d.semi_perimeter() <= max_sp {
                                out.push(d);
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| format!("{a}").cmp(&format!("{b}")));
    out.dedup();
    out
}

/// alpha_1 candidates with given e-count and n-count: start and end with e
/// (or the single east step).
fn alpha1_words(e: usize, n: usize) -> Vec<String> {
    if e == 0 {
        return vec![];
    }
    if e == 1 {
        return if n == 0 { vec!["e".to_string()] } else { vec![] };
    }
    // distribute n interior norths into e-1 gaps between east steps
    compositions(n, e - 1)
        .into_iter()
        .map(|gaps| {
            let mut w = String::from("e");
            for g in gaps {
                w.extend(std::iter::repeat('n').take(g));
                w.push('e');
            }
            w
        })
        .collect()
}

fn beta1_words(e: usize, n: usize) -> Vec<String> {
    alpha1_words(n, e)
        .into_iter()
        .map(|w| w.chars().map(|c| if c == 'e' { 'n' } else { 'e' }).collect())
        .collect()
}

/// Nonempty alpha_i (i >= 2): starts with e, e-count `e`, n-count `n`.
fn mid_words_e(e: usize, n: usize) -> Vec<String> {
    if e == 0 {
        return vec![];
    }
    compositions(n, e)
        .into_iter()
        .map(|gaps| {
            let mut w = String::new();
            for g in gaps {
                w.push('e');
                w.extend(std::iter::repeat('n').take(g));
            }
            w
        })
        .collect()
}

fn mid_words_n(e: usize, n: usize) -> Vec<String> {
    mid_words_e(n, e)
        .into_iter()
        .map(|w| w.chars().map(|c| if c == 'e' { 'n' } else { 'e' }).collect())
        .collect()
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative integers.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::convexity_degree;
    use crate::enumerate::parallelograms_by_sp;

    fn poly(text: &str) -> Polyomino {
        Polyomino::from_text(text).unwrap()
    }

    #[test]
    fn bar_paths_coincide() {
        let p = poly("1111");
        let (h, v) = paths_h_v(&p).unwrap();
        assert_eq!(h, v);
        assert_eq!(h.changes(), 0);
        assert_eq!(cell_c(&p).unwrap(), (1, 1)); // C = S
        assert_eq!(classify_kpar(&p), Err(KParError::DegreeZero));
    }

    #[test]
    fn square_paths() {
        let p = poly("11\n11");
        let (h, v) = paths_h_v(&p).unwrap();
        assert_eq!(h.changes(), 1);
        assert_eq!(v.changes(), 1);
        assert_eq!(cell_c(&p).unwrap(), (2, 2)); // C = E
        assert_eq!(classify_kpar(&p).unwrap(), KParClass::Flat);
        let d = decompose(&p).unwrap();
        assert_eq!(d.k, 1);
        assert_eq!(d.alphas, vec!["ee"]);
        assert_eq!(d.betas, vec!["nn"]);
        assert_eq!(recompose(&d).unwrap(), p);
    }

    #[test]
    fn rectangles_are_flat_1() {
        for (w, h) in [(2usize, 2usize), (3, 2), (2, 5), (4, 3)] {
            let text = vec!["1".repeat(w); h].join("\n");
            let p = poly(&text);
            assert_eq!(kpar_degree(&p).unwrap(), 1);
            assert_eq!(classify_kpar(&p).unwrap(), KParClass::Flat);
        }
    }

    #[test]
    fn skew_is_up_with_unit_beta() {
        // cells (1,1),(2,1),(2,2): one-cell first column, C = S, up class
        let p = poly("01\n11");
        let (h, v) = paths_h_v(&p).unwrap();
        assert_eq!(h, v);
        assert_eq!(cell_c(&p).unwrap(), (1, 1));
        assert_eq!(classify_kpar(&p).unwrap(), KParClass::Up);
        let d = decompose(&p).unwrap();
        assert_eq!(d.k, 1);
        assert_eq!(d.alphas, vec!["ene"]);
        assert_eq!(d.betas, vec!["n"]);
        assert_eq!(recompose(&d).unwrap(), p);
    }

    #[test]
    fn round_trip_all_sp() {
        for p in parallelograms_by_sp(10) {
            let k = kpar_degree(&p).unwrap();
            if k == 0 {
                continue;
            }
            let d = decompose(&p).unwrap();
            assert_eq!(d.k, k, "degree mismatch for\n{}", p.matrix().to_text());
            assert_eq!(
                d.semi_perimeter(),
                p.semi_perimeter(),
                "sp identity for\n{}",
                p.matrix().to_text()
            );
            let q = recompose(&d).unwrap();
            assert_eq!(q, p, "round trip failed for\n{}", p.matrix().to_text());
        }
    }

    #[test]
    fn degree_equals_convexity_degree() {
        for p in parallelograms_by_sp(9) {
            assert_eq!(
                kpar_degree(&p).unwrap(),
                convexity_degree(&p).unwrap(),
                "on\n{}",
                p.matrix().to_text()
            );
        }
    }

    #[test]
    fn changes_differ_by_at_most_one() {
        for p in parallelograms_by_sp(10) {
            let (h, v) = paths_h_v(&p).unwrap();
            let (a, b) = (h.changes(), v.changes());
            assert!(a.abs_diff(b) <= 1, "on\n{}", p.matrix().to_text());
        }
    }

    #[test]
    fn flat_iff_c_is_e() {
        for p in parallelograms_by_sp(9) {
            if kpar_degree(&p).unwrap() == 0 {
                continue;
            }
            let is_flat = classify_kpar(&p).unwrap() == KParClass::Flat;
            let c = cell_c(&p).unwrap();
            assert_eq!(is_flat, c == (p.height(), p.width()));
        }
    }

    #[test]
    fn corollary_empty() {
        // alpha_i empty iff beta_{i+1} empty-or-flat, for i > 1, and
        // alpha_1 unit iff beta_2 empty-or-flat (mirrored for beta)
        for p in parallelograms_by_sp(10) {
            if kpar_degree(&p).unwrap() == 0 {
                continue;
            }
            let d = decompose(&p).unwrap();
            for i in 2..d.k {
                let ai_empty = d.alphas[i - 1].is_empty();
                let bnext = &d.betas[i];
                assert_eq!(
                    ai_empty,
                    bnext.is_empty() || is_flat_word(bnext),
                    "alpha_{i} vs beta_{} on\n{}",
                    i + 1,
                    p.matrix().to_text()
                );
                let bi_empty = d.betas[i - 1].is_empty();
                let anext = &d.alphas[i];
                assert_eq!(
                    bi_empty,
                    anext.is_empty() || is_flat_word(anext),
                    "beta_{i} vs alpha_{} on\n{}",
                    i + 1,
                    p.matrix().to_text()
                );
            }
            if d.k >= 2 {
                assert_eq!(
                    d.alphas[0] == "e",
                    d.betas[1].is_empty() || is_flat_word(&d.betas[1])
                );
                assert_eq!(
                    d.betas[0] == "n",
                    d.alphas[1].is_empty() || is_flat_word(&d.alphas[1])
                );
            }
        }
    }

    #[test]
    fn flatup_classification_from_decomposition() {
        for p in parallelograms_by_sp(10) {
            if kpar_degree(&p).unwrap() == 0 {
                continue;
            }
            let d = decompose(&p).unwrap();
            let class = classify_kpar(&p).unwrap();
            let a1_flat = is_flat_word(&d.alphas[0]);
            let b1_flat = is_flat_word(&d.betas[0]);
            let expected = match (a1_flat, b1_flat) {
                (true, true) => KParClass::Flat,
                (false, true) => KParClass::Up,
                (true, false) => KParClass::Right,
                (false, false) => panic!("alpha_1 and beta_1 cannot both be non-flat"),
            };
            assert_eq!(class, expected, "on\n{}", p.matrix().to_text());
        }
    }

    #[test]
    fn generated_decompositions_round_trip() {
        for k in 1..=3 {
            let ds = generate_decompositions(k, 8);
            assert!(!ds.is_empty());
            for d in ds {
                let p = recompose(&d).expect("generated decompositions are valid");
                assert_eq!(kpar_degree(&p).unwrap(), k);
                assert_eq!(decompose(&p).unwrap(), d);
            }
        }
    }

    #[test]
    fn unit_alpha_forces_beta2_flat() {
        let d = Decomposition {
            k: 2,
            alphas: vec!["e".into(), "en".into()],
            betas: vec!["nn".into(), "nee".into()],
        };
        assert!(matches!(
            recompose(&d),
            Err(KParError::InvalidDecomposition(_))
        ));
    }

    #[test]
    fn decomposition_json_shape() {
        let d = Decomposition {
            k: 1,
            alphas: vec!["ee".into()],
            betas: vec!["nn".into()],
        };
        let js = serde_json::to_string(&d).unwrap();
        assert_eq!(js, r#"{"k":1,"alpha":["ee"],"beta":["nn"]}"#);
    }
}
