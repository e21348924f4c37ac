//! Pipe dreams of nu-trees, their traced permutations, the letter word over
//! the region, and the subword complex whose increasing flip poset realizes
//! the rotation order.
//!
//! A region point (x, y) occupies the matrix cell (n - y + 1, x + 1) of an
//! N by N grid, N chosen as the smallest size whose staircase (cells with
//! i + j <= N) contains every region point. A tree's pipe dream puts a cross
//! on every region point outside the tree; all other staircase cells,
//! region or not, are elbows. Pipes enter on the west side, one per row, and
//! exit on top.

use std::collections::BTreeSet;
use std::fmt;

use crate::path::{Point, Region};
use crate::poset::FinitePoset;
use crate::tree::NuTree;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Tile {
    /// The west strand continues east, the south strand continues north.
    Cross,
    /// The west strand turns north, the south strand turns east.
    Elbow,
}

/// A permutation of {1, ..., n} in one-line notation, 1-based values.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Permutation(Vec<usize>);

/// Why a sequence is not a permutation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PermutationError {
    ValueOutOfRange(usize),
    RepeatedValue(usize),
}

impl fmt::Display for PermutationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermutationError::ValueOutOfRange(v) => write!(f, "value {v} is out of range"),
            PermutationError::RepeatedValue(v) => write!(f, "value {v} repeats"),
        }
    }
}

impl std::error::Error for PermutationError {}

impl Permutation {
    pub fn try_new(one_line: Vec<usize>) -> Result<Permutation, PermutationError> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v < 1 || v > n {
                return Err(PermutationError::ValueOutOfRange(v));
            }
            if seen[v] {
                return Err(PermutationError::RepeatedValue(v));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation((1..=n).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Right multiplication by the adjacent transposition s_i: swaps the
    /// entries at positions i and i+1 (1-based). Lengthening exactly when
    /// those entries ascend.
    pub fn swap_positions(&mut self, i: usize) {
        assert!(i >= 1 && i < self.0.len(), "generator index out of range");
        self.0.swap(i - 1, i);
    }

    pub fn ascends_at(&self, i: usize) -> bool {
        assert!(i >= 1 && i < self.0.len(), "generator index out of range");
        self.0[i - 1] < self.0[i]
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// The permutation acting as u on the first block and as a shifted v after.
pub fn direct_sum(u: &Permutation, v: &Permutation) -> Permutation {
    let m = u.n();
    let mut one_line = u.0.clone();
    one_line.extend(v.0.iter().map(|&x| x + m));
    Permutation(one_line)
}

/// The inversion diagram {(w(j), i) : i < j, w(i) > w(j)}. This is the
/// transpose of the more common convention; it is the one under which the
/// diagram of the traced tree permutation is the region shape pushed one
/// step southeast.
pub fn rothe_diagram(w: &Permutation) -> BTreeSet<(usize, usize)> {
    let line = w.one_line();
    let mut cells = BTreeSet::new();
    for i in 0..line.len() {
        for j in i + 1..line.len() {
            if line[i] > line[j] {
                cells.insert((line[j], i + 1));
            }
        }
    }
    cells
}

/// Whether the inversion diagram is a partition shape anchored at (1,1),
/// equivalently closed under moving north or west.
pub fn is_dominant(w: &Permutation) -> bool {
    let diagram = rothe_diagram(w);
    diagram.iter().all(|&(i, j)| {
        (i == 1 || diagram.contains(&(i - 1, j))) && (j == 1 || diagram.contains(&(i, j - 1)))
    })
}

/// A staircase filling by crosses and elbows; cells not listed in `crosses`
/// are elbows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PipeDream {
    size: usize,
    crosses: BTreeSet<(usize, usize)>,
}

impl PipeDream {
    pub fn new(size: usize, crosses: BTreeSet<(usize, usize)>) -> PipeDream {
        for &(i, j) in &crosses {
            assert!(
                i >= 1 && j >= 1 && i + j <= size,
                "cross at ({i},{j}) is outside the staircase of size {size}"
            );
        }
        PipeDream { size, crosses }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn crosses(&self) -> &BTreeSet<(usize, usize)> {
        &self.crosses
    }

    pub fn tile(&self, cell: (usize, usize)) -> Tile {
        if self.crosses.contains(&cell) { Tile::Cross } else { Tile::Elbow }
    }

    /// Rows of the staircase top to bottom, `+` for a cross, `%` for an
    /// elbow, one line per row.
    pub fn ascii(&self) -> String {
        let mut out = String::new();
        for i in 1..self.size {
            if i > 1 {
                out.push('\n');
            }
            for j in 1..=self.size - i {
                out.push(match self.tile((i, j)) {
                    Tile::Cross => '+',
                    Tile::Elbow => '%',
                });
            }
        }
        out
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Heading {
    East,
    North,
}

/// Follow the pipe entering at west row `row` to its exit column, recording
/// the crosses it passes through. Cells beyond the staircase behave as
/// elbows, so every pipe reaches the top.
fn follow_pipe(dream: &PipeDream, row: usize, crossings: &mut Vec<(usize, usize)>) -> usize {
    let size = dream.size;
    let mut i = row;
    let mut j = 1;
    let mut heading = Heading::East;
    let mut steps = 0;
    loop {
        steps += 1;
        assert!(steps <= 4 * size * size, "pipe tracing does not terminate");
        let tile = if i + j <= size { dream.tile((i, j)) } else { Tile::Elbow };
        if tile == Tile::Cross {
            crossings.push((i, j));
        }
        let out = match (tile, heading) {
            (Tile::Cross, h) => h,
            (Tile::Elbow, Heading::East) => Heading::North,
            (Tile::Elbow, Heading::North) => Heading::East,
        };
        match out {
            Heading::North => {
                if i == 1 {
                    return j;
                }
                i -= 1;
            }
            Heading::East => j += 1,
        }
        heading = out;
    }
}

/// Labels the pipe entering west row i with i and reads the labels along the
/// top: entry j is the row whose pipe exits column j.
pub fn trace_permutation(dream: &PipeDream) -> Permutation {
    let mut one_line = vec![0; dream.size];
    let mut crossings = Vec::new();
    for row in 1..=dream.size {
        let column = follow_pipe(dream, row, &mut crossings);
        assert_eq!(one_line[column - 1], 0, "two pipes exit column {column}");
        one_line[column - 1] = row;
    }
    Permutation::try_new(one_line).expect("tracing hits every column once")
}

/// Whether no two pipes cross more than once. Each cross cell is traversed
/// by exactly two pipes, so the dream is reduced exactly when no unordered
/// pipe pair meets at two cells, equivalently when the number of crosses
/// equals the length of the traced permutation.
pub fn is_reduced(dream: &PipeDream) -> bool {
    let mut by_cell: std::collections::BTreeMap<(usize, usize), Vec<usize>> =
        std::collections::BTreeMap::new();
    for row in 1..=dream.size {
        let mut crossings = Vec::new();
        follow_pipe(dream, row, &mut crossings);
        for cell in crossings {
            by_cell.entry(cell).or_default().push(row);
        }
    }
    let mut pair_meetings: std::collections::BTreeMap<(usize, usize), usize> =
        std::collections::BTreeMap::new();
    for (cell, pipes) in &by_cell {
        assert_eq!(pipes.len(), 2, "cross at {cell:?} is not on exactly two pipes");
        let pair = (pipes[0].min(pipes[1]), pipes[0].max(pipes[1]));
        *pair_meetings.entry(pair).or_insert(0) += 1;
    }
    let reduced = pair_meetings.values().all(|&count| count <= 1);
    debug_assert_eq!(reduced, dream.crosses.len() == trace_permutation(dream).length());
    reduced
}

/// Smallest grid size whose staircase holds every region point.
pub fn grid_size(region: &Region) -> usize {
    let n = region.north_end();
    let deepest = (0..=n).map(|y| region.row_max(y) + n - y).max().unwrap_or(0);
    deepest + 2
}

/// The matrix cell of a region point.
pub fn cell_of_point(region: &Region, p: Point) -> (usize, usize) {
    (region.north_end() - p.y + 1, p.x + 1)
}

/// The pipe dream of a tree: crosses exactly on the region points the tree
/// does not use.
pub fn pipedream_of_tree(tree: &NuTree) -> PipeDream {
    let region = tree.region();
    let crosses = region
        .points()
        .into_iter()
        .filter(|p| !tree.contains(*p))
        .map(|p| cell_of_point(region, p))
        .collect();
    PipeDream::new(grid_size(region), crosses)
}

/// Generator indices over the region points, read row by row from the
/// bottom, left to right: the point (x, y) carries s_{x + n - y + 1}, its
/// staircase diagonal.
pub fn q_word(region: &Region) -> Vec<usize> {
    let n = region.north_end();
    region.points().into_iter().map(|p| p.x + n - p.y + 1).collect()
}

/// The permutation shared by all tree dreams of the region, computed by
/// tracing the minimal tree's dream.
pub fn pi_nu(region: &Region) -> Permutation {
    trace_permutation(&pipedream_of_tree(&crate::tree::minimal_tree(region)))
}

/// 1-based position of each region point in the word order of `q_word`.
pub fn q_position(region: &Region, p: Point) -> usize {
    region.points().iter().position(|&q| q == p).expect("point lies in the region") + 1
}

/// Facets of the subword complex: position sets I such that the letters at
/// the complementary positions, in word order, multiply out to `pi`
/// reducedly. Depth-first over positions; a partial product is abandoned as
/// soon as a kept letter shortens it.
pub fn subword_facets(word: &[usize], pi: &Permutation) -> Vec<BTreeSet<usize>> {
    let n = pi.n();
    for &letter in word {
        assert!(letter >= 1 && letter < n, "letter s_{letter} does not act on [{n}]");
    }
    let needed = pi.length();
    let mut facets = Vec::new();
    if needed > word.len() {
        return facets;
    }
    let mut skipped = Vec::new();
    let mut product = Permutation::identity(n);
    search_facets(word, pi, needed, 0, &mut product, &mut skipped, &mut facets);
    facets.sort();
    facets
}

fn search_facets(
    word: &[usize],
    pi: &Permutation,
    needed: usize,
    at: usize,
    product: &mut Permutation,
    skipped: &mut Vec<usize>,
    facets: &mut Vec<BTreeSet<usize>>,
) {
    let used = at - skipped.len();
    if word.len() - at < needed - used {
        return;
    }
    if at == word.len() {
        if *product == *pi {
            facets.push(skipped.iter().copied().collect());
        }
        return;
    }
    let letter = word[at];
    if used < needed && product.ascends_at(letter) {
        product.swap_positions(letter);
        search_facets(word, pi, needed, at + 1, product, skipped, facets);
        product.swap_positions(letter);
    }
    skipped.push(at + 1);
    search_facets(word, pi, needed, at + 1, product, skipped, facets);
    skipped.pop();
}

/// The increasing flip poset of a subword complex: facets ordered by flips
/// that exchange a position for a later one.
pub fn increasing_flip_poset(word: &[usize], pi: &Permutation) -> FinitePoset {
    let facets = subword_facets(word, pi);
    let labels: Vec<String> = facets.iter().map(facet_label).collect();
    let mut covers = BTreeSet::new();
    for (a, fa) in facets.iter().enumerate() {
        for (b, fb) in facets.iter().enumerate() {
            if a == b {
                continue;
            }
            let gone: Vec<usize> = fa.difference(fb).copied().collect();
            let came: Vec<usize> = fb.difference(fa).copied().collect();
            if gone.len() == 1 && came.len() == 1 && gone[0] < came[0] {
                covers.insert((a, b));
            }
        }
    }
    FinitePoset::from_covers(labels, covers.into_iter().collect())
}

/// Render a facet the way tree node sets are rendered: "{1,2,5}".
pub fn facet_label(facet: &BTreeSet<usize>) -> String {
    let inner: Vec<String> = facet.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}
