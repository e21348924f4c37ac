//! Column Edelman-Greene insertion on the reading biword of a nu-tree.
//!
//! The cells of the region not used by the tree are read in matrix
//! coordinates, top row first and right to left within a row, each cell
//! (i, j) contributing the pair (i, i+j-1). Inserting the bottom letters
//! column by column builds the insertion tableau X; recording which cell
//! each insertion creates, labeled by the top letter, builds the recording
//! tableau Y. The path read off Y equals the left flush of the tree, which
//! is the statement the tests drive.
//!
//! This module works in matrix coordinates throughout; `matrix_cell` is the
//! only place the cartesian-to-matrix conversion happens.

use crate::path::{LatticePath, Point, Region, Step};
use crate::tree::NuTree;

/// A filling of a partition shape, stored by columns.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Tableau {
    columns: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    /// Entries row by row, top row first.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let depth = self.columns.iter().map(Vec::len).max().unwrap_or(0);
        (0..depth)
            .map(|r| self.columns.iter().filter_map(|col| col.get(r).copied()).collect())
            .collect()
    }

    /// Row lengths, a weakly decreasing partition.
    pub fn shape(&self) -> Vec<usize> {
        self.rows().iter().map(Vec::len).collect()
    }

    /// Append `value` at the bottom of column `col` (1-based); the cell must
    /// keep the shape a partition. Returns the (row, column) of the new cell.
    fn append(&mut self, col: usize, value: usize) -> (usize, usize) {
        if col == self.columns.len() + 1 {
            self.columns.push(Vec::new());
        }
        let column = &mut self.columns[col - 1];
        column.push(value);
        let row = column.len();
        debug_assert!(
            col == 1 || self.columns[col - 2].len() >= row,
            "shape must stay a partition"
        );
        (row, col)
    }
}

/// The matrix cell of a region point: row 1 is the top of the region.
pub fn matrix_cell(region: &Region, p: Point) -> (usize, usize) {
    (region.north_end() - p.y + 1, p.x + 1)
}

/// Pairs (i, i+j-1) over the complement cells (i, j) of the tree, read top
/// row first and right to left within a row.
pub fn reading_biword(tree: &NuTree) -> Vec<(usize, usize)> {
    let region = tree.region();
    let mut cells: Vec<(usize, usize)> = region
        .points()
        .into_iter()
        .filter(|p| !tree.contains(*p))
        .map(|p| matrix_cell(region, p))
        .collect();
    cells.sort_by_key(|&(i, j)| (i, std::cmp::Reverse(j)));
    cells.into_iter().map(|(i, j)| (i, i + j - 1)).collect()
}

/// Insert one letter by columns: a column holding both the letter and its
/// successor stays unchanged and bumps the successor; otherwise the smallest
/// larger entry is replaced and bumped; otherwise the letter lands at the
/// bottom of the column. Returns the cell created at the end of the chain.
pub fn eg_insert(tableau: &mut Tableau, letter: usize) -> (usize, usize) {
    let mut value = letter;
    let mut col = 1;
    loop {
        if col == tableau.columns.len() + 1 {
            return tableau.append(col, value);
        }
        let column = &mut tableau.columns[col - 1];
        if column.contains(&value) && column.contains(&(value + 1)) {
            value += 1;
            col += 1;
            continue;
        }
        if let Some(pos) = column.iter().position(|&v| v > value) {
            debug_assert!(!column.contains(&value), "replacing would repeat {value}");
            std::mem::swap(&mut column[pos], &mut value);
            col += 1;
            continue;
        }
        debug_assert!(column.last().is_none_or(|&v| v < value));
        return tableau.append(col, value);
    }
}

/// Run the insertion over the whole biword: X collects the bottom letters,
/// Y records each created cell with the top letter of the pair that made it.
pub fn eg_pair(tree: &NuTree) -> (Tableau, Tableau) {
    let mut x = Tableau::default();
    let mut y = Tableau::default();
    for (top, bottom) in reading_biword(tree) {
        let (row, col) = eg_insert(&mut x, bottom);
        let recorded = y.append(col, top);
        debug_assert_eq!((row, col), recorded, "X and Y must grow in step");
        debug_assert!(
            top == row || top == row + 1,
            "row {row} of the recording tableau holds {top}"
        );
    }
    debug_assert_eq!(x.shape(), y.shape());
    (x, y)
}

/// The partition of the region itself: reading the row bounds from the
/// second-to-top row down, dropping empty rows. Tree insertion tableaux
/// have exactly this shape.
pub fn region_partition(region: &Region) -> Vec<usize> {
    let n = region.north_end();
    (0..n).rev().map(|y| region.row_max(y)).filter(|&width| width > 0).collect()
}

/// For each matrix row r of the region, how many boxes row r has weakly
/// above `mu`: the x-coordinate where mu leaves height n-r.
pub fn lambda_of_path(region: &Region, mu: &LatticePath) -> Vec<usize> {
    let n = region.north_end();
    let mut at_height = vec![0; n];
    let mut x = 0;
    let mut y = 0;
    for step in mu.steps() {
        match step {
            Step::E => x += 1,
            Step::N => {
                at_height[y] = x;
                y += 1;
            }
        }
    }
    (1..=n).map(|r| at_height[n - r]).collect()
}

/// The same counts predicted from the complement sizes: row r of the result
/// accumulates the complement cells of matrix rows 1..=r, minus the boxes nu
/// itself keeps above it in rows 1..r.
pub fn lambda_from_complement(tree: &NuTree) -> Vec<usize> {
    let region = tree.region();
    let n = region.north_end();
    let nu_lambda = lambda_of_path(region, region.nu());
    let mut complement_rows = vec![0usize; n + 1];
    for p in region.points() {
        if !tree.contains(p) {
            complement_rows[matrix_cell(region, p).0 - 1] += 1;
        }
    }
    (1..=n)
        .map(|r| {
            let cells: usize = complement_rows[..r].iter().sum();
            let kept: usize = nu_lambda[..r - 1].iter().sum();
            cells.checked_sub(kept).expect("complement cells outnumber kept boxes")
        })
        .collect()
}

/// The same counts predicted from the tree's row sizes: row r of the result
/// sums (nodes - 1) over the matrix rows strictly below r.
pub fn lambda_from_tree_rows(tree: &NuTree) -> Vec<usize> {
    let region = tree.region();
    let n = region.north_end();
    let mut node_rows = vec![0usize; n + 1];
    for &p in tree.nodes() {
        node_rows[matrix_cell(region, p).0 - 1] += 1;
    }
    (1..=n).map(|r| node_rows[r..].iter().map(|&count| count - 1).sum()).collect()
}

/// The path read off the recording tableau: in matrix row r, the boxes
/// weakly above the path are the cells labeled r, so the path steps north
/// from height n-r at that count.
pub fn eg_path(tree: &NuTree) -> LatticePath {
    let region = tree.region();
    let n = region.north_end();
    let (_, y) = eg_pair(tree);
    let rows = y.rows();
    let lambda: Vec<usize> = (1..=n)
        .map(|r| rows.get(r - 1).map_or(0, |row| row.iter().filter(|&&v| v == r).count()))
        .collect();
    let mut steps = Vec::with_capacity(region.nu().len());
    let mut x = 0;
    for height in 0..n {
        let next = lambda[n - height - 1];
        assert!(next >= x, "north steps must move weakly east");
        steps.extend(std::iter::repeat_n(Step::E, next - x));
        steps.push(Step::N);
        x = next;
    }
    steps.extend(std::iter::repeat_n(Step::E, region.east_end() - x));
    let mu = LatticePath::new(steps);
    assert!(region.is_above(&mu), "the recorded path stays above nu");
    mu
}
