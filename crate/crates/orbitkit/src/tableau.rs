//! Standard Young tableaux (type A) and rank-0/1 standard domino tableaux
//! (types C, D / B): enumeration, truncation, tau-invariants, Levi blocks,
//! horizontal-domino bookkeeping, the column injection, and the
//! per-label step classification driving the weight recursion.

use crate::orbit::{LieType, OrbitDescriptor, OrbitError};
use crate::partition::Partition;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Cell in a Young diagram, 0-based (row, column).
pub type Cell = (usize, usize);

/// A standard tableau of the shape of a nilpotent orbit. Type A tableaux
/// label single cells; types B, C, D label dominoes. Type B diagrams carry
/// one zero square at the origin that no label owns.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StandardTableau {
    pub lie_type: LieType,
    /// Number of labels (the Lie rank of the ambient algebra).
    pub rank: usize,
    pub shape: Partition,
    /// `positions[m-1]` lists the cells of label `m`, lexicographically.
    positions: Vec<Vec<Cell>>,
}

/// Inductive classification of one label within its truncated tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StepCase {
    /// Vertical (or single cell) in column 1.
    C1,
    /// Vertical (or single cell) in column 2, tied to a column-1 label.
    C2,
    /// Horizontal meeting column 1, matched into a pair.
    N1,
    /// Horizontal meeting column 1, unmatched so far.
    N2,
    /// Horizontal meeting column 3 (types B and D).
    N3,
    /// The exceptional column-2 vertical over an offside horizontal (type B).
    Star,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepData {
    pub case: StepCase,
    /// Column-1 partner: the injection image for C2, the matched lower
    /// label for N1.
    pub partner: Option<usize>,
}

/// Horizontal-domino bookkeeping for one tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HorizontalSets {
    /// Labels of all horizontal dominoes.
    pub all: Vec<usize>,
    /// Those meeting the first column.
    pub first_column: Vec<usize>,
    /// Matched pairs (k, m) with k < m, both meeting the first column.
    pub pairs: Vec<(usize, usize)>,
    /// First-column horizontals left unmatched.
    pub unpaired: Vec<usize>,
    /// Horizontals not meeting the first column.
    pub offside: Vec<usize>,
}

/// Simple-root data of the stabilizing parabolic, in e-coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauInvariant {
    /// `adjacent[j]` (0-based j = coordinate index - 1) marks the root
    /// e_{j+1} - e_{j+2}.
    pub adjacent: Vec<bool>,
    /// The type-specific simple root (short/long/fork), absent in type A.
    pub classical: bool,
}

/// Grouping of the torus coordinates 1..rank into Levi blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviBlocks {
    /// Consecutive coordinate blocks, each a run of 1-based coordinates.
    pub blocks: Vec<Vec<usize>>,
    /// When set, the final block belongs to a non-GL reductive factor.
    pub classical_last: bool,
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}<{}>", self.lie_type.letter(), self.rank, self.to_text())
    }
}

impl StandardTableau {
    pub fn is_young(&self) -> bool {
        self.lie_type == LieType::A
    }

    /// Zero squares of the diagram (the rank-1 staircase in type B).
    pub fn zero_cells(&self) -> Vec<Cell> {
        if self.lie_type == LieType::B {
            vec![(0, 0)]
        } else {
            Vec::new()
        }
    }

    pub fn cells_of(&self, label: usize) -> &[Cell] {
        &self.positions[label - 1]
    }

    /// Row-major grid of labels; zero squares hold 0.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut grid: Vec<Vec<usize>> = self
            .shape
            .parts()
            .iter()
            .map(|&len| vec![usize::MAX; len as usize])
            .collect();
        for (r, c) in self.zero_cells() {
            grid[r][c] = 0;
        }
        for m in 1..=self.rank {
            for &(r, c) in self.cells_of(m) {
                grid[r][c] = m;
            }
        }
        grid
    }

    /// Serializes as rows of labels, dominoes appearing twice:
    /// `"1 1 / 2 3 / 2 3 / 4 / 4"`.
    pub fn to_text(&self) -> String {
        self.rows()
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join(" / ")
    }

    /// Builds a tableau from explicit label cells (validating shape and
    /// standardness).
    pub fn from_cells(
        lie_type: LieType,
        rank: usize,
        positions: Vec<Vec<Cell>>,
    ) -> Option<StandardTableau> {
        if positions.len() != rank {
            return None;
        }
        let mut all: Vec<Cell> = positions.iter().flatten().copied().collect();
        if lie_type == LieType::B {
            all.push((0, 0));
        }
        let rows = all.iter().map(|&(r, _)| r).max().map_or(0, |m| m + 1);
        let mut lens = vec![0u32; rows];
        for &(r, _) in &all {
            lens[r] += 1;
        }
        for i in 1..lens.len() {
            if lens[i] > lens[i - 1] {
                return None;
            }
        }
        let shape = Partition::new(lens);
        let mut positions = positions;
        for cells in positions.iter_mut() {
            cells.sort_unstable();
        }
        let t = StandardTableau { lie_type, rank, shape, positions };
        if t.validate() {
            Some(t)
        } else {
            None
        }
    }

    /// Convenience constructor from a label grid (0 = zero square).
    pub fn from_rows(lie_type: LieType, rows: &[&[usize]]) -> Option<StandardTableau> {
        let rank = rows.iter().flat_map(|r| r.iter()).copied().max()?;
        let mut positions = vec![Vec::new(); rank];
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v > 0 {
                    positions[v - 1].push((r, c));
                }
            }
        }
        StandardTableau::from_cells(lie_type, rank, positions)
    }

    fn validate(&self) -> bool {
        let grid = self.rows();
        if grid.iter().flatten().any(|&v| v == usize::MAX) {
            return false;
        }
        for cells in &self.positions {
            match self.lie_type {
                LieType::A => {
                    if cells.len() != 1 {
                        return false;
                    }
                }
                _ => {
                    if cells.len() != 2 {
                        return false;
                    }
                    let (a, b) = (cells[0], cells[1]);
                    let adjacent =
                        (a.0 == b.0 && a.1 + 1 == b.1) || (a.1 == b.1 && a.0 + 1 == b.0);
                    if !adjacent {
                        return false;
                    }
                }
            }
        }
        // Monotone rows and columns: weak for dominoes, strict for cells.
        for (r, row) in grid.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if c + 1 < row.len() {
                    let w = row[c + 1];
                    if (self.is_young() && w <= v) || (!self.is_young() && w < v) {
                        return false;
                    }
                }
                if r + 1 < grid.len() && c < grid[r + 1].len() {
                    let w = grid[r + 1][c];
                    if (self.is_young() && w <= v) || (!self.is_young() && w < v) {
                        return false;
                    }
                }
            }
        }
        (0..=self.rank).all(|m| self.shape_at(m).is_some())
    }

    /// Shape of the sub-diagram of labels <= m plus zero squares, if it
    /// forms a partition.
    pub fn shape_at(&self, m: usize) -> Option<Partition> {
        let mut lens: Vec<u32> = Vec::new();
        let bump = |(r, _c): Cell, lens: &mut Vec<u32>| {
            if lens.len() <= r {
                lens.resize(r + 1, 0);
            }
            lens[r] += 1;
        };
        for cell in self.zero_cells() {
            bump(cell, &mut lens);
        }
        for label in 1..=m {
            for &cell in self.cells_of(label) {
                bump(cell, &mut lens);
            }
        }
        for i in 1..lens.len() {
            if lens[i] > lens[i - 1] {
                return None;
            }
        }
        Some(Partition::new(lens))
    }

    /// Sub-tableau of the first `m` labels.
    pub fn truncate(&self, m: usize) -> StandardTableau {
        assert!(m <= self.rank);
        StandardTableau {
            lie_type: self.lie_type,
            rank: m,
            shape: self.shape_at(m).expect("truncations of a valid tableau are valid"),
            positions: self.positions[..m].to_vec(),
        }
    }

    fn min_row(&self, label: usize) -> usize {
        self.cells_of(label).iter().map(|&(r, _)| r).min().unwrap()
    }

    fn max_row(&self, label: usize) -> usize {
        self.cells_of(label).iter().map(|&(r, _)| r).max().unwrap()
    }

    /// Label `a` sits strictly above label `b` (no shared row).
    pub fn strictly_higher(&self, a: usize, b: usize) -> bool {
        self.max_row(a) < self.min_row(b)
    }

    /// Vertical domino or single cell: all cells share a column.
    pub fn is_vertical(&self, label: usize) -> bool {
        let cells = self.cells_of(label);
        cells.iter().all(|&(_, c)| c == cells[0].1)
    }

    pub fn touches_column(&self, label: usize, col: usize) -> bool {
        self.cells_of(label).iter().any(|&(_, c)| c == col)
    }

    /// Labels of vertical entries lying in the given 0-based column.
    /// For type A this is the literal column content.
    pub fn column_labels(&self, col: usize) -> Vec<usize> {
        (1..=self.rank)
            .filter(|&m| self.is_vertical(m) && self.cells_of(m)[0].1 == col)
            .collect()
    }

    /// Horizontal-domino sets; empty in type A.
    pub fn horizontal_sets(&self) -> HorizontalSets {
        let mut all = Vec::new();
        let mut first_column = Vec::new();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut open: Vec<usize> = Vec::new();
        if !self.is_young() {
            for m in 1..=self.rank {
                if self.is_vertical(m) {
                    continue;
                }
                all.push(m);
                if !self.touches_column(m, 0) {
                    continue;
                }
                first_column.push(m);
                let candidate = match self.lie_type {
                    // Symplectic pairs must be consecutive labels.
                    LieType::C => open.last().copied().filter(|&k| k + 1 == m),
                    _ => open.last().copied(),
                };
                match candidate {
                    Some(k) => {
                        open.pop();
                        pairs.push((k, m));
                    }
                    None => open.push(m),
                }
            }
        }
        let paired: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        let unpaired: Vec<usize> =
            first_column.iter().copied().filter(|m| !paired.contains(m)).collect();
        let offside: Vec<usize> =
            all.iter().copied().filter(|m| !first_column.contains(m)).collect();
        HorizontalSets { all, first_column, pairs, unpaired, offside }
    }

    /// The exceptional type-B configuration: label 3 vertical in column 2
    /// while label 2 is a horizontal meeting column 3.
    pub fn star_label(&self) -> Option<usize> {
        if self.lie_type != LieType::B || self.rank < 3 {
            return None;
        }
        let three_in_col2 = self.is_vertical(3) && self.cells_of(3)[0].1 == 1;
        let two_offside = !self.is_vertical(2) && self.touches_column(2, 2);
        if three_in_col2 && two_offside {
            Some(3)
        } else {
            None
        }
    }

    /// The column-1 label the star configuration would otherwise tie to.
    /// Its torus coordinate dies with the star's, so its weight entry is
    /// free.
    pub fn star_shadow(&self) -> Option<usize> {
        let star = self.star_label()?;
        let t1 = self.column_labels(0);
        t1.into_iter().filter(|&j| j < star).max()
    }

    /// Injection from column-2 labels into smaller column-1 labels:
    /// the greatest unclaimed candidate, which realizes the minimal
    /// representative. Star labels are excluded from the domain, and an
    /// offside horizontal ties down its predecessor, so that label is
    /// claimed from the start.
    pub fn column_injection(&self) -> Vec<(usize, usize)> {
        let t1 = self.column_labels(0);
        let t2 = self.column_labels(1);
        let star = self.star_label();
        // Predecessors of offside horizontals are spoken for, but may be
        // taken as a last resort.
        let mut reserved: Vec<usize> =
            self.horizontal_sets().offside.iter().filter(|&&m| m >= 2).map(|&m| m - 1).collect();
        let mut claimed: Vec<usize> = Vec::new();
        let mut phi = Vec::new();
        for &k in &t2 {
            if Some(k) == star {
                continue;
            }
            let image = t1
                .iter()
                .copied()
                .filter(|&j| j < k && !claimed.contains(&j) && !reserved.contains(&j))
                .max()
                .or_else(|| {
                    t1.iter().copied().filter(|&j| j < k && !claimed.contains(&j)).max()
                })
                .expect("column injection must exist for standard tableaux");
            if !self.strictly_higher(k - 1, k) && t1.contains(&(k - 1)) {
                debug_assert_eq!(image, k - 1, "minimality forces adjacent images");
            }
            claimed.push(image);
            reserved.retain(|&j| j != image);
            phi.push((k, image));
        }
        phi
    }

    /// Chained injections between consecutive columns of a Young tableau:
    /// every label maps to an unclaimed greatest smaller label one column
    /// to its left. Coincides with `column_injection` on two-column
    /// shapes; supports representatives of wider shapes.
    pub fn full_injection(&self) -> Vec<(usize, usize)> {
        assert!(self.is_young());
        let mut phi = Vec::new();
        let ncols = self.shape.part(1) as usize;
        for col in 1..ncols {
            let sources = self.column_labels(col);
            let targets = self.column_labels(col - 1);
            let mut claimed: Vec<usize> = Vec::new();
            for &k in &sources {
                let image = targets
                    .iter()
                    .copied()
                    .filter(|&j| j < k && !claimed.contains(&j))
                    .max()
                    .expect("standard tableaux admit column injections");
                claimed.push(image);
                phi.push((k, image));
            }
        }
        phi
    }

    /// Per-label inductive step classification (within this tableau).
    pub fn step_data(&self, label: usize) -> StepData {
        assert!((1..=self.rank).contains(&label));
        if self.is_young() {
            let col = self.cells_of(label)[0].1;
            if col == 0 {
                return StepData { case: StepCase::C1, partner: None };
            }
            let phi = self.full_injection();
            let partner = phi.iter().find(|&&(k, _)| k == label).map(|&(_, j)| j);
            return StepData { case: StepCase::C2, partner };
        }
        if self.is_vertical(label) {
            if self.cells_of(label)[0].1 == 0 {
                return StepData { case: StepCase::C1, partner: None };
            }
            if self.star_label() == Some(label) {
                return StepData { case: StepCase::Star, partner: None };
            }
            let phi = self.column_injection();
            let partner = phi.iter().find(|&&(k, _)| k == label).map(|&(_, j)| j);
            return StepData { case: StepCase::C2, partner };
        }
        let sets = self.horizontal_sets();
        if let Some(&(k, _)) = sets.pairs.iter().find(|&&(_, m)| m == label) {
            return StepData { case: StepCase::N1, partner: Some(k) };
        }
        if self.touches_column(label, 0) {
            // Unmatched here; it may acquire a partner in a larger tableau.
            return StepData { case: StepCase::N2, partner: None };
        }
        StepData { case: StepCase::N3, partner: None }
    }

    /// Step classification of `label` within its truncation T(label).
    pub fn step_at(&self, label: usize) -> StepData {
        self.truncate(label).step_data(label)
    }

    /// Tau-invariant in e-coordinates via the reversed label/coordinate
    /// matching: e_j - e_{j+1} stabilizes iff label rank-j sits strictly
    /// above label rank-j+1. The type-specific root stabilizes iff label 1
    /// is vertical (types B, C); in type D the fork root stabilizes iff
    /// the basepoint leaves it unoccupied, which fails exactly when the
    /// first two labels are matched horizontals or label 2 sits offside.
    pub fn tau_invariant(&self) -> TauInvariant {
        let n = self.rank;
        let mut adjacent = vec![false; n.saturating_sub(1)];
        for j in 1..n {
            let upper = n - j;
            adjacent[j - 1] = self.strictly_higher(upper, upper + 1);
        }
        let classical = match self.lie_type {
            LieType::A => false,
            LieType::B | LieType::C => self.rank >= 1 && self.is_vertical(1),
            LieType::D => {
                let sets = self.horizontal_sets();
                !(sets.pairs.contains(&(1, 2)) || sets.offside.contains(&2))
            }
        };
        TauInvariant { adjacent, classical }
    }

    pub fn levi_blocks(&self) -> LeviBlocks {
        let tau = self.tau_invariant();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut current = vec![1usize];
        for j in 2..=self.rank {
            if tau.adjacent[j - 2] {
                current.push(j);
            } else {
                blocks.push(std::mem::take(&mut current));
                current = vec![j];
            }
        }
        blocks.push(current);
        LeviBlocks { blocks, classical_last: tau.classical }
    }

    /// Largest k such that labels 1..=k all lie in column 1 as verticals.
    pub fn column_one_prefix(&self) -> usize {
        let t1 = self.column_labels(0);
        let mut k = 0;
        while t1.contains(&(k + 1)) {
            k += 1;
        }
        k
    }

    /// Removes the top label. Within type C two matched horizontals drop
    /// together; in types B and D an invalid truncated shape is repaired by
    /// relocating the trailing cycle of dominoes (an interval for spherical
    /// shapes) into the collapsed shape.
    pub fn down(&self) -> StandardTableau {
        assert!(self.rank >= 1);
        let n = self.rank;
        if self.is_young() {
            return self.truncate(n - 1);
        }
        if self.lie_type == LieType::C {
            let sets = self.horizontal_sets();
            if sets.pairs.iter().any(|&(k, m)| m == n && k == n - 1) {
                return self.truncate(n - 2);
            }
            return self.truncate(n - 1);
        }
        // Types B and D.
        let parity = self.lie_type.constrained_parity().unwrap();
        let trunc = self.truncate(n - 1);
        if trunc.shape.parity_valid(parity) {
            return trunc;
        }
        let target = trunc.shape.collapse(parity);
        // Relocate the shortest trailing label interval that re-tiles the
        // collapsed shape; spherical cycles are intervals, so one exists.
        for k in (1..n).rev() {
            let base = self.shape_at(k - 1).unwrap();
            if !skew_contains(&target, &base) {
                continue;
            }
            if let Some(t) =
                retile(self.lie_type, &self.positions[..k - 1], &base, &target, n - 1)
            {
                return t;
            }
        }
        panic!("moving-through failed for {:?}", self);
    }

    /// All standard tableaux of the orbit's shape, lexicographic on the
    /// cell sequence of labels 1, 2, ....
    pub fn enumerate(orbit: &OrbitDescriptor) -> Result<Vec<StandardTableau>, OrbitError> {
        if !orbit.flags().spherical {
            return Err(OrbitError::NotSpherical(orbit.partition.clone()));
        }
        Ok(enumerate_shape(orbit.lie_type, &orbit.partition, orbit.rank))
    }
}

pub fn skew_contains(outer: &Partition, inner: &Partition) -> bool {
    (1..=inner.len()).all(|i| inner.part(i) <= outer.part(i))
}

/// Re-tiles `target \ base` with labels from `prefix.len()+1` up to `stop`
/// on top of the given prefix positions; returns the lexicographically
/// first standard filling, if any.
fn retile(
    lie_type: LieType,
    prefix: &[Vec<Cell>],
    base: &Partition,
    target: &Partition,
    stop: usize,
) -> Option<StandardTableau> {
    let mut fills = Vec::new();
    let mut lens: Vec<u32> = base.parts().to_vec();
    search_fill(lie_type, target, &mut lens, prefix.len() + 1, stop, &mut Vec::new(), &mut fills, true);
    let fill = fills.into_iter().next()?;
    let mut positions = prefix.to_vec();
    positions.extend(fill);
    StandardTableau::from_cells(lie_type, stop, positions)
}

/// Depth-first shape-growing enumeration; placements are tried in
/// lexicographic cell order so results come out sorted.
#[allow(clippy::too_many_arguments)]
fn search_fill(
    lie_type: LieType,
    target: &Partition,
    lens: &mut Vec<u32>,
    label: usize,
    stop: usize,
    acc: &mut Vec<Vec<Cell>>,
    out: &mut Vec<Vec<Vec<Cell>>>,
    first_only: bool,
) {
    if label > stop {
        out.push(acc.clone());
        return;
    }
    if first_only && !out.is_empty() {
        return;
    }
    let mut options: Vec<Vec<Cell>> = Vec::new();
    let rows = target.len();
    let len_at = |lens: &[u32], r: usize| if r < lens.len() { lens[r] } else { 0 };
    if lie_type == LieType::A {
        for r in 0..rows {
            let len = len_at(lens, r);
            let above = if r == 0 { u32::MAX } else { len_at(lens, r - 1) };
            if len < target.part(r + 1) && len < above {
                options.push(vec![(r, len as usize)]);
            }
        }
    } else {
        for r in 0..rows {
            let len = len_at(lens, r);
            let above = if r == 0 { u32::MAX } else { len_at(lens, r - 1) };
            // Horizontal: two cells in row r.
            if len + 2 <= target.part(r + 1) && len + 2 <= above {
                options.push(vec![(r, len as usize), (r, len as usize + 1)]);
            }
            // Vertical: cells in rows r, r+1 at the shared next column.
            if r + 1 < rows {
                let below = len_at(lens, r + 1);
                if below == len && len + 1 <= target.part(r + 2) && len + 1 <= above {
                    options.push(vec![(r, len as usize), (r + 1, len as usize)]);
                }
            }
        }
    }
    options.sort();
    for cells in options {
        for &(r, _) in &cells {
            if lens.len() <= r {
                lens.resize(r + 1, 0);
            }
            lens[r] += 1;
        }
        acc.push(cells.clone());
        search_fill(lie_type, target, lens, label + 1, stop, acc, out, first_only);
        acc.pop();
        for &(r, _) in &cells {
            lens[r] -= 1;
        }
        while lens.last() == Some(&0) {
            lens.pop();
        }
    }
}

fn enumerate_shape(lie_type: LieType, shape: &Partition, rank: usize) -> Vec<StandardTableau> {
    let mut lens: Vec<u32> = Vec::new();
    if lie_type == LieType::B {
        lens.push(1);
    }
    let mut out = Vec::new();
    search_fill(lie_type, shape, &mut lens, 1, rank, &mut Vec::new(), &mut out, false);
    out.into_iter()
        .map(|positions| {
            StandardTableau::from_cells(lie_type, rank, positions)
                .expect("search produces valid tableaux")
        })
        .collect()
}

/// Counts standard fillings of a shape by a recursion over sub-shape
/// chains (removing one trailing cell or domino at a time). Serves as an
/// independent oracle for the enumeration.
pub fn count_fillings_by_chains(lie_type: LieType, shape: &Partition) -> u64 {
    use std::collections::HashMap;
    fn rec(
        lie_type: LieType,
        shape: &Partition,
        floor: &Partition,
        memo: &mut HashMap<Partition, u64>,
    ) -> u64 {
        if shape == floor {
            return 1;
        }
        if !skew_contains(shape, floor) {
            return 0;
        }
        if let Some(&v) = memo.get(shape) {
            return v;
        }
        let parts = shape.parts();
        let mut total = 0u64;
        for r in 0..parts.len() {
            let len = parts[r];
            let below = if r + 1 < parts.len() { parts[r + 1] } else { 0 };
            if lie_type == LieType::A {
                if len >= 1 && len - 1 >= below {
                    let mut next = parts.to_vec();
                    next[r] -= 1;
                    total += rec(lie_type, &Partition::new(next), floor, memo);
                }
            } else {
                if len >= 2 && len - 2 >= below {
                    let mut next = parts.to_vec();
                    next[r] -= 2;
                    total += rec(lie_type, &Partition::new(next), floor, memo);
                }
                if r + 1 < parts.len() && len == parts[r + 1] && len >= 1 {
                    let deeper = if r + 2 < parts.len() { parts[r + 2] } else { 0 };
                    if len - 1 >= deeper {
                        let mut next = parts.to_vec();
                        next[r] -= 1;
                        next[r + 1] -= 1;
                        total += rec(lie_type, &Partition::new(next), floor, memo);
                    }
                }
            }
        }
        memo.insert(shape.clone(), total);
        total
    }
    let floor =
        if lie_type == LieType::B { Partition::new(vec![1]) } else { Partition::empty() };
    rec(lie_type, shape, &floor, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::Numeral;

    fn orbit(lt: LieType, rank: usize, parts: &[u32]) -> OrbitDescriptor {
        OrbitDescriptor::new(lt, rank, Partition::new(parts.to_vec()), None).unwrap()
    }

    fn sp8_model_first() -> StandardTableau {
        StandardTableau::from_rows(LieType::C, &[&[1, 1], &[2, 3], &[2, 3], &[4], &[4]]).unwrap()
    }

    #[test]
    fn enumerate_counts() {
        let o = orbit(LieType::C, 4, &[2, 2, 2, 1, 1]);
        let ts = StandardTableau::enumerate(&o).unwrap();
        assert_eq!(ts.len(), 4);

        let zero = OrbitDescriptor::zero(LieType::A, 6);
        assert_eq!(StandardTableau::enumerate(&zero).unwrap().len(), 1);
        let zero_c = OrbitDescriptor::zero(LieType::C, 3);
        assert_eq!(StandardTableau::enumerate(&zero_c).unwrap().len(), 1);

        let o = orbit(LieType::A, 6, &[2, 2, 1, 1]);
        assert_eq!(StandardTableau::enumerate(&o).unwrap().len(), 9);
    }

    #[test]
    fn enumerate_matches_chain_counts() {
        for (lt, rank) in
            [(LieType::A, 5usize), (LieType::B, 3), (LieType::C, 4), (LieType::D, 4)]
        {
            for o in crate::orbit::spherical_orbits(lt, rank) {
                if o.numeral == Some(Numeral::II) {
                    continue;
                }
                if lt.orbit_total(rank) > 10 {
                    continue;
                }
                let ts = StandardTableau::enumerate(&o).unwrap();
                let expected = count_fillings_by_chains(lt, &o.partition);
                assert_eq!(ts.len() as u64, expected, "count mismatch for {o}");
            }
        }
    }

    #[test]
    fn truncate_shapes() {
        let t = sp8_model_first();
        assert_eq!(t.truncate(4), t);
        assert_eq!(t.truncate(0).shape, Partition::empty());
        assert_eq!(t.shape_at(2).unwrap(), Partition::new(vec![2, 1, 1]));
        for m in 0..4 {
            let a = t.shape_at(m).unwrap();
            let b = t.shape_at(m + 1).unwrap();
            assert!(super::skew_contains(&b, &a));
        }
    }

    #[test]
    fn tau_examples() {
        // Single-column Young tableau: every root stabilizes.
        let zero = OrbitDescriptor::zero(LieType::A, 4);
        let t = &StandardTableau::enumerate(&zero).unwrap()[0];
        assert!(t.tau_invariant().adjacent.iter().all(|&b| b));

        // gl5 rows (1,4)(2)(3)(5): tau = {e1-e2, e3-e4, e4-e5}.
        let t = StandardTableau::from_rows(LieType::A, &[&[1, 4], &[2], &[3], &[5]]).unwrap();
        assert_eq!(t.tau_invariant().adjacent, vec![true, false, true, true]);

        // sp(8) model first tableau: GL(2) x GL(2) Levi.
        let t = sp8_model_first();
        let tau = t.tau_invariant();
        assert_eq!(tau.adjacent, vec![true, false, true]);
        assert!(!tau.classical);
        let blocks = t.levi_blocks();
        assert_eq!(blocks.blocks, vec![vec![1, 2], vec![3, 4]]);
        assert!(!blocks.classical_last);
    }

    #[test]
    fn levi_examples() {
        let t = StandardTableau::from_rows(LieType::A, &[&[1, 4], &[2, 6], &[3], &[5]]).unwrap();
        assert_eq!(t.levi_blocks().blocks, vec![vec![1], vec![2, 3], vec![4, 5, 6]]);
        let t =
            StandardTableau::from_rows(LieType::A, &[&[1, 4], &[2, 5], &[3, 6], &[7]]).unwrap();
        assert_eq!(t.levi_blocks().blocks, vec![vec![1, 2, 3, 4], vec![5, 6, 7]]);
    }

    #[test]
    fn horizontal_sets_examples() {
        // Type B: S = {2,5}, pair {2,5}, offside {1}.
        let t = StandardTableau::from_rows(
            LieType::B,
            &[&[0, 1, 1], &[2, 2], &[3, 4], &[3, 4], &[5, 5]],
        )
        .unwrap();
        let h = t.horizontal_sets();
        assert_eq!(h.first_column, vec![2, 5]);
        assert_eq!(h.pairs, vec![(2, 5)]);
        assert!(h.unpaired.is_empty());
        assert_eq!(h.offside, vec![1]);

        // The same diagram read as type C vs type D.
        let rows: &[&[usize]] = &[&[1, 1], &[2, 3], &[2, 3], &[4, 4]];
        let c = StandardTableau::from_rows(LieType::C, rows).unwrap();
        let hc = c.horizontal_sets();
        assert!(hc.pairs.is_empty());
        assert_eq!(hc.unpaired, vec![1, 4]);
        assert!(hc.offside.is_empty());

        let d = StandardTableau::from_rows(LieType::D, rows).unwrap();
        let hd = d.horizontal_sets();
        assert_eq!(hd.pairs, vec![(1, 4)]);
        assert!(hd.unpaired.is_empty());
        assert!(hd.offside.is_empty());
    }

    #[test]
    fn injection_examples() {
        let t = StandardTableau::from_rows(LieType::A, &[&[1, 4], &[2, 6], &[3], &[5]]).unwrap();
        assert_eq!(t.column_injection(), vec![(4, 3), (6, 5)]);
        // Forced adjacent image: rows (1,5)(2)(3)(4).
        let t = StandardTableau::from_rows(LieType::A, &[&[1, 5], &[2], &[3], &[4]]).unwrap();
        assert_eq!(t.column_injection(), vec![(5, 4)]);
        // Empty second column.
        let zero = OrbitDescriptor::zero(LieType::A, 3);
        let t = &StandardTableau::enumerate(&zero).unwrap()[0];
        assert!(t.column_injection().is_empty());
    }

    #[test]
    fn step_cases() {
        let t = sp8_model_first();
        assert_eq!(t.step_at(1).case, StepCase::N2);
        assert_eq!(t.step_at(2).case, StepCase::C1);
        assert_eq!(t.step_at(3), StepData { case: StepCase::C2, partner: Some(2) });
        assert_eq!(t.step_at(4).case, StepCase::C1);

        // Type B pair: D(5) matched with 2.
        let t = StandardTableau::from_rows(
            LieType::B,
            &[&[0, 1, 1], &[2, 2], &[3, 4], &[3, 4], &[5, 5]],
        )
        .unwrap();
        assert_eq!(t.step_at(5), StepData { case: StepCase::N1, partner: Some(2) });
        // Star configuration in type B.
        let t = StandardTableau::from_rows(LieType::B, &[&[0, 2, 2], &[1, 3], &[1, 3]]).unwrap();
        assert_eq!(t.step_at(2).case, StepCase::N3);
        assert_eq!(t.step_at(3).case, StepCase::Star);
    }

    #[test]
    fn down_examples() {
        let t = sp8_model_first();
        assert_eq!(t.down(), t.truncate(3));

        // Type C twin horizontals drop together.
        let t = StandardTableau::from_rows(LieType::C, &[&[1, 1], &[2, 2], &[3, 3], &[4], &[4]])
            .unwrap();
        let d = t.down();
        assert_eq!(d.rank, 3, "vertical top label drops alone");
        let dd = d.down();
        assert_eq!(dd.rank, 2, "unmatched horizontal drops alone");
        assert_eq!(dd.shape, Partition::new(vec![2, 2]));
        assert_eq!(dd.down().rank, 0, "matched pair drops together");

        // Type D moving-through: removing the top horizontal of [2,2,2,2]
        // leaves an invalid orthogonal shape; the repaired shape collapses.
        let t =
            StandardTableau::from_rows(LieType::D, &[&[1, 1], &[2, 3], &[2, 3], &[4, 4]]).unwrap();
        let d = t.down();
        assert_eq!(d.rank, 3);
        assert_eq!(d.shape, Partition::new(vec![2, 2, 1, 1]));
        assert!(d.shape.parity_valid(0));
    }

    #[test]
    fn down_preserves_validity() {
        for (lt, rank) in [(LieType::B, 4usize), (LieType::C, 4), (LieType::D, 4)] {
            for o in crate::orbit::spherical_orbits(lt, rank) {
                if o.numeral == Some(Numeral::II) {
                    continue;
                }
                for t in StandardTableau::enumerate(&o).unwrap() {
                    let mut cur = t;
                    while cur.rank > 0 {
                        let parity = lt.constrained_parity().unwrap();
                        assert!(cur.shape.parity_valid(parity), "invalid interior shape");
                        cur = cur.down();
                    }
                }
            }
        }
    }

    #[test]
    fn text_format() {
        assert_eq!(sp8_model_first().to_text(), "1 1 / 2 3 / 2 3 / 4 / 4");
    }

    #[test]
    fn horizontal_set_invariants_sweep() {
        for (lt, max) in [(LieType::B, 4usize), (LieType::C, 5), (LieType::D, 4)] {
            for rank in lt.min_rank()..=max {
                for o in crate::orbit::spherical_orbits(lt, rank) {
                    if o.numeral == Some(Numeral::II) {
                        continue;
                    }
                    for t in StandardTableau::enumerate(&o).unwrap() {
                        let h = t.horizontal_sets();
                        let mut covered: Vec<usize> =
                            h.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
                        covered.extend(&h.unpaired);
                        covered.extend(&h.offside);
                        covered.sort_unstable();
                        let mut all = h.all.clone();
                        all.sort_unstable();
                        assert_eq!(covered, all, "disjoint cover fails for {t:?}");
                        match lt {
                            LieType::C => assert!(h.offside.is_empty()),
                            _ => assert!(h.unpaired.is_empty(), "unpaired in B/D: {t:?}"),
                        }
                    }
                }
            }
        }
    }
}
