//! Pipe dreams on rectangular grids.
//!
//! A pipe dream is the set of crossing tiles in a tiling of the `k x l`
//! grid by crosses and elbow joints. Pipes enter from the left edge (one
//! per row) and exit through the top edge; a pipe goes straight through a
//! cross and turns at an elbow. Cells are 1-based `(row, col)` pairs and
//! the cross at `(i, j)` contributes the letter `i + j - 1`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::config::{Budget, Limits};
use crate::error::{Error, Result};
use crate::hecke;
use crate::perm::{BlockLayout, PartialPerm, Perm};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PipeDream {
    rows: u32,
    cols: u32,
    crosses: BTreeSet<(u32, u32)>,
}

impl PipeDream {
    pub fn new(rows: u32, cols: u32, crosses: &[(u32, u32)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(r, c) in crosses {
            if r == 0 || c == 0 || r > rows || c > cols {
                return Err(Error::Invalid(format!(
                    "cross ({r},{c}) outside {rows}x{cols} grid"
                )));
            }
            set.insert((r, c));
        }
        Ok(PipeDream { rows, cols, crosses: set })
    }

    pub fn empty(rows: u32, cols: u32) -> Self {
        PipeDream { rows, cols, crosses: BTreeSet::new() }
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }

    pub fn crosses(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.crosses.iter().copied()
    }

    pub fn has_cross(&self, r: u32, c: u32) -> bool {
        self.crosses.contains(&(r, c))
    }

    /// Number of crossing tiles.
    pub fn count(&self) -> usize {
        self.crosses.len()
    }

    /// Cells in reading order: along rows, right to left, top row first.
    pub fn reading_cells(&self) -> Vec<(u32, u32)> {
        let mut cells: Vec<(u32, u32)> = self.crosses.iter().copied().collect();
        cells.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        cells
    }

    /// Antidiagonal indices of the crosses in reading order.
    pub fn reading_word(&self) -> hecke::Word {
        self.reading_cells().iter().map(|&(r, c)| r + c - 1).collect()
    }

    /// Demazure product of the reading word.
    pub fn delta(&self) -> Perm {
        hecke::demazure_product(&self.reading_word())
    }

    /// True iff no pair of pipes crosses more than once, equivalently the
    /// number of crosses equals the length of the Demazure product.
    pub fn is_reduced(&self) -> bool {
        self.count() as u64 == self.delta().length()
    }

    /// Rotation through 180 degrees.
    pub fn rotate180(&self) -> PipeDream {
        let crosses: Vec<(u32, u32)> = self
            .crosses
            .iter()
            .map(|&(r, c)| (self.rows + 1 - r, self.cols + 1 - c))
            .collect();
        PipeDream::new(self.rows, self.cols, &crosses).expect("rotation stays in grid")
    }

    /// Adds `alpha` full columns of crosses on the left.
    pub fn prepend_columns(&self, alpha: u32) -> PipeDream {
        let mut crosses: Vec<(u32, u32)> = Vec::new();
        for r in 1..=self.rows {
            for c in 1..=alpha {
                crosses.push((r, c));
            }
        }
        crosses.extend(self.crosses.iter().map(|&(r, c)| (r, c + alpha)));
        PipeDream::new(self.rows, self.cols + alpha, &crosses).expect("shifted cells in grid")
    }

    /// The sub-dream keeping exactly the crosses retained by word
    /// simplification; it is reduced with the same Demazure product.
    pub fn simplify(&self) -> PipeDream {
        let cells = self.reading_cells();
        let kept = hecke::simplify_retained(&self.reading_word());
        let crosses: Vec<(u32, u32)> = kept.into_iter().map(|t| cells[t]).collect();
        PipeDream::new(self.rows, self.cols, &crosses).expect("subset of existing cells")
    }

    /// ASCII rendering, one row per line: `+` for a cross, `.` for an elbow.
    pub fn ascii(&self) -> String {
        let mut out = String::new();
        for r in 1..=self.rows {
            for c in 1..=self.cols {
                out.push(if self.has_cross(r, c) { '+' } else { '.' });
            }
            if r < self.rows {
                out.push('\n');
            }
        }
        out
    }
}

impl core::fmt::Debug for PipeDream {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "PipeDream({}x{}: ", self.rows, self.cols)?;
        for (t, (r, c)) in self.crosses.iter().enumerate() {
            if t > 0 {
                write!(f, " ")?;
            }
            write!(f, "{r},{c}")?;
        }
        write!(f, ")")
    }
}

/// Grid cells in reading order whose letter can occur in a word with
/// Demazure product `target` (a letter `a` with `s_a` not below the
/// target can never appear).
pub(crate) fn searchable_cells(rows: u32, cols: u32, target: &Perm) -> Vec<(u32, u32)> {
    let max_letter = rows + cols - 1;
    let allowed: Vec<bool> = (0..=max_letter)
        .map(|a| a >= 1 && Perm::transposition(a).bruhat_leq(target))
        .collect();
    let mut cells = Vec::new();
    for r in 1..=rows {
        for c in (1..=cols).rev() {
            if allowed[(r + c - 1) as usize] {
                cells.push((r, c));
            }
        }
    }
    cells
}

fn enumerate_inner(
    w: &PartialPerm,
    reduced_only: bool,
    limits: &Limits,
) -> Result<Vec<PipeDream>> {
    let target = w.min_completion();
    let rows = w.rows();
    let cols = w.cols();
    let cells = searchable_cells(rows, cols, &target);
    let target_len = target.length();
    let mut budget = Budget::new(limits);
    let mut out = Vec::new();
    let mut chosen: Vec<(u32, u32)> = Vec::new();

    fn dfs(
        idx: usize,
        cur: &Perm,
        cells: &[(u32, u32)],
        target: &Perm,
        target_len: u64,
        reduced_only: bool,
        chosen: &mut Vec<(u32, u32)>,
        out: &mut Vec<PipeDream>,
        budget: &mut Budget,
        rows: u32,
        cols: u32,
    ) -> Result<()> {
        budget.tick()?;
        if idx == cells.len() {
            if cur == target {
                out.push(PipeDream::new(rows, cols, chosen).expect("cells in grid"));
            }
            return Ok(());
        }
        // Remaining cells bound how much length can still be gained.
        if target_len - cur.length() > (cells.len() - idx) as u64 {
            return Ok(());
        }
        let (r, c) = cells[idx];
        // Elbow branch.
        dfs(idx + 1, cur, cells, target, target_len, reduced_only, chosen, out, budget, rows, cols)?;
        // Cross branch.
        let letter = r + c - 1;
        let next = hecke::demazure_step(cur, letter);
        let raised = next.length() > cur.length();
        if reduced_only && !raised {
            return Ok(());
        }
        if !raised && &next == cur {
            // Absorbed letter: allowed for nonreduced dreams.
        }
        if next.bruhat_leq(target) {
            chosen.push((r, c));
            dfs(idx + 1, &next, cells, target, target_len, reduced_only, chosen, out, budget, rows, cols)?;
            chosen.pop();
        }
        Ok(())
    }

    dfs(
        0,
        &Perm::identity(),
        &cells,
        &target,
        target_len,
        reduced_only,
        &mut chosen,
        &mut out,
        &mut budget,
        rows,
        cols,
    )?;
    out.sort();
    Ok(out)
}

/// All pipe dreams in the `k x l` grid whose Demazure product is the
/// minimal completion of `w`, by depth-first search over cells in reading
/// order, pruned through Bruhat comparison of partial products.
pub fn enumerate_dreams(w: &PartialPerm, limits: &Limits) -> Result<Vec<PipeDream>> {
    enumerate_inner(w, false, limits)
}

/// The reduced members of [`enumerate_dreams`].
pub fn enumerate_reduced(w: &PartialPerm, limits: &Limits) -> Result<Vec<PipeDream>> {
    enumerate_inner(w, true, limits)
}

/// The unique reduced pipe dream for `w` with no elbow tile due north of
/// a crossing tile. Uniqueness is asserted.
pub fn top_pipe_dream(w: &PartialPerm, limits: &Limits) -> Result<PipeDream> {
    let mut found: Option<PipeDream> = None;
    for d in enumerate_reduced(w, limits)? {
        let top_justified = d
            .crosses()
            .all(|(r, c)| (1..r).all(|above| d.has_cross(above, c)));
        if top_justified {
            assert!(found.is_none(), "top pipe dream must be unique");
            found = Some(d);
        }
    }
    found.ok_or_else(|| Error::Invalid(String::from("no top pipe dream found")))
}

/// The `d x d` pipe dream with every block strictly above the block
/// superantidiagonal filled with crosses and the superantidiagonal
/// `r_{j-1} x r_j` block in block row `j-1` equal to `parts[j-1]`.
/// Block columns are indexed from the right.
pub fn assemble(parts: &[PipeDream], ranks: &[u32]) -> Result<PipeDream> {
    if ranks.len() != parts.len() + 1 {
        return Err(Error::Invalid(String::from("need one rank per column of blocks")));
    }
    let layout = BlockLayout::new(ranks);
    let n = layout.n();
    for (t, part) in parts.iter().enumerate() {
        if part.rows() != ranks[t] || part.cols() != ranks[t + 1] {
            return Err(Error::Invalid(format!(
                "part {} has size {}x{}, expected {}x{}",
                t + 1,
                part.rows(),
                part.cols(),
                ranks[t],
                ranks[t + 1]
            )));
        }
    }
    let mut crosses = Vec::new();
    for j in 0..=n {
        for i in 0..=n {
            if i >= j + 2 {
                let (r0, r1) = layout.row_range(j);
                let (c0, c1) = layout.col_range(i);
                for r in r0..=r1 {
                    for c in c0..=c1 {
                        crosses.push((r, c));
                    }
                }
            }
        }
    }
    for (t, part) in parts.iter().enumerate() {
        // Part t+1 sits in block row t, block column t+1 (from the right).
        let (r0, _) = layout.row_range(t);
        let (c0, _) = layout.col_range(t + 1);
        for (r, c) in part.crosses() {
            crosses.push((r0 + r - 1, c0 + c - 1));
        }
    }
    PipeDream::new(layout.d(), layout.d(), &crosses)
}

/// Result of tracing every pipe through the grid, on an embedding large
/// enough that all pipes exit through the top edge.
#[derive(Debug)]
pub struct Tracing {
    /// Pipe through cell (r,c) horizontally (straight west-east at a
    /// cross, or the west-to-north arc of an elbow).
    horizontal: Vec<Vec<u32>>,
    /// Pipe through cell (r,c) vertically (straight south-north at a
    /// cross, or the south-to-east arc of an elbow).
    vertical: Vec<Vec<u32>>,
    exit_col: Vec<u32>,
}

impl Tracing {
    /// Pipes through `(r, c)` as (west-entering, south-entering).
    pub fn pipes_at(&self, r: u32, c: u32) -> (u32, u32) {
        (
            self.horizontal[r as usize - 1][c as usize - 1],
            self.vertical[r as usize - 1][c as usize - 1],
        )
    }

    /// The permutation sending each entering row to its exit column.
    pub fn permutation(&self) -> Perm {
        Perm::from_images(&self.exit_col).expect("pipes exit distinct columns")
    }
}

/// Traces all pipes of `p` on the `(k+l) x (k+l)` embedding.
pub fn trace(p: &PipeDream) -> Tracing {
    let n = p.rows() + p.cols();
    let size = n as usize;
    let mut horizontal = vec![vec![0u32; size]; size];
    let mut vertical = vec![vec![0u32; size]; size];
    let mut exit_col = vec![0u32; size];
    for pipe in 1..=n {
        let mut r = pipe;
        let mut c = 1u32;
        let mut from_west = true;
        loop {
            let cross = p.has_cross(r, c);
            if from_west {
                horizontal[r as usize - 1][c as usize - 1] = pipe;
            } else {
                vertical[r as usize - 1][c as usize - 1] = pipe;
            }
            let exits_north = if cross { !from_west } else { from_west };
            if exits_north {
                if r == 1 {
                    exit_col[pipe as usize - 1] = c;
                    break;
                }
                r -= 1;
                from_west = false;
            } else {
                c += 1;
                assert!(c <= n, "pipe escaped the embedding");
                from_west = true;
            }
        }
    }
    Tracing { horizontal, vertical, exit_col }
}

/// Elbow tiles of a reduced dream whose two pipes cross again strictly
/// to the northeast. Turning any subset of them into crosses preserves
/// the Demazure product.
pub fn absorbable_elbows(d: &PipeDream) -> Result<BTreeSet<(u32, u32)>> {
    if !d.is_reduced() {
        return Err(Error::Invalid(String::from("absorbable elbows need a reduced dream")));
    }
    let tracing = trace(d);
    debug_assert_eq!(tracing.permutation(), d.delta());
    let cross_pairs: Vec<((u32, u32), (u32, u32))> = d
        .crosses()
        .map(|(r, c)| {
            let (h, v) = tracing.pipes_at(r, c);
            ((r, c), (h.min(v), h.max(v)))
        })
        .collect();
    let mut out = BTreeSet::new();
    for r in 1..=d.rows() {
        for c in 1..=d.cols() {
            if d.has_cross(r, c) {
                continue;
            }
            let (wn, se) = tracing.pipes_at(r, c);
            let pair = (wn.min(se), wn.max(se));
            let crosses_northeast = cross_pairs
                .iter()
                .any(|&((cr, cc), p)| p == pair && cr < r && cc > c);
            if crosses_northeast {
                out.insert((r, c));
            }
        }
    }
    Ok(out)
}
