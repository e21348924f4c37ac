//! Lattice paths of east and north unit steps, and the nu-Tamari order on the
//! paths lying weakly above a fixed path nu.
//!
//! Conventions used throughout the crate: a point `(x, y)` has seen `x` east
//! steps and `y` north steps, so every path starts at `(0, 0)` and a path with
//! `m` east and `n` north steps ends at `(m, n)`. Rows are indexed by the
//! `y` coordinate, row `0` at the bottom.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::poset::FinitePoset;

/// A unit step of a lattice path. East sorts before north, which makes the
/// derived order on paths the lexicographic one used for stable output.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Step {
    E,
    N,
}

/// A lattice point. The derived order is by `x`, then `y`; display order and
/// tie-breaking conventions that differ from this are applied at the use site.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Point {
    pub x: usize,
    pub y: usize,
}

impl Point {
    pub const fn new(x: usize, y: usize) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A monotone lattice path, stored as its step word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct LatticePath {
    steps: Vec<Step>,
}

/// Error for a path word containing a character other than `E` or `N`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ParsePathError(pub char);

impl fmt::Display for ParsePathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid path step {:?}, expected 'E' or 'N'", self.0)
    }
}

impl std::error::Error for ParsePathError {}

impl FromStr for LatticePath {
    type Err = ParsePathError;

    fn from_str(s: &str) -> Result<Self, ParsePathError> {
        let steps = s
            .chars()
            .map(|c| match c {
                'E' => Ok(Step::E),
                'N' => Ok(Step::N),
                other => Err(ParsePathError(other)),
            })
            .collect::<Result<_, _>>()?;
        Ok(LatticePath { steps })
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            f.write_str(match step {
                Step::E => "E",
                Step::N => "N",
            })?;
        }
        Ok(())
    }
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of east steps, the `x` coordinate of the endpoint.
    pub fn east_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::E).count()
    }

    /// Number of north steps, the `y` coordinate of the endpoint.
    pub fn north_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::N).count()
    }

    /// The `len() + 1` lattice points visited by the path, in step order.
    pub fn lattice_points(&self) -> Vec<Point> {
        let mut points = Vec::with_capacity(self.len() + 1);
        let mut p = Point::new(0, 0);
        points.push(p);
        for step in &self.steps {
            match step {
                Step::E => p.x += 1,
                Step::N => p.y += 1,
            }
            points.push(p);
        }
        points
    }

    /// Indices `i` such that the point after `i` steps is preceded by an east
    /// step and followed by a north step.
    pub fn valley_indices(&self) -> Vec<usize> {
        (1..self.steps.len())
            .filter(|&i| self.steps[i - 1] == Step::E && self.steps[i] == Step::N)
            .collect()
    }

    /// The reverse path: read the word backwards and swap east with north.
    /// Geometrically this is a half turn of the picture.
    pub fn reversed(&self) -> LatticePath {
        LatticePath {
            steps: self
                .steps
                .iter()
                .rev()
                .map(|s| match s {
                    Step::E => Step::N,
                    Step::N => Step::E,
                })
                .collect(),
        }
    }
}

/// The set of lattice points lying weakly above a fixed path `nu`, inside the
/// smallest rectangle containing `nu`. This is the ambient ground set for
/// nu-trees, bracket vectors and pipe dreams, so most operations take a
/// `Region` rather than a bare path.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Region {
    nu: LatticePath,
    /// `row_max[y]` is the largest `x` with `(x, y)` weakly above `nu`, i.e.
    /// the `x` coordinate at which `nu` leaves height `y`.
    row_max: Vec<usize>,
}

impl Region {
    pub fn new(nu: &LatticePath) -> Self {
        let n = nu.north_count();
        let mut row_max = vec![0; n + 1];
        let mut x = 0;
        let mut y = 0;
        for step in nu.steps() {
            match step {
                Step::E => x += 1,
                Step::N => {
                    row_max[y] = x;
                    y += 1;
                }
            }
        }
        // Row n and any trailing rows nu never leaves extend to the east end.
        for row in row_max.iter_mut().skip(y) {
            *row = x;
        }
        Region { nu: nu.clone(), row_max }
    }

    pub fn nu(&self) -> &LatticePath {
        &self.nu
    }

    /// The `x` coordinate of the endpoint of `nu`.
    pub fn east_end(&self) -> usize {
        *self.row_max.last().expect("row_max is never empty")
    }

    /// The `y` coordinate of the endpoint of `nu`.
    pub fn north_end(&self) -> usize {
        self.row_max.len() - 1
    }

    /// Largest `x` with `(x, y)` weakly above `nu`.
    pub fn row_max(&self, y: usize) -> usize {
        self.row_max[y]
    }

    pub fn contains(&self, p: Point) -> bool {
        p.y < self.row_max.len() && p.x <= self.row_max[p.y]
    }

    /// All points weakly above `nu`, row by row from the bottom, left to
    /// right within a row.
    pub fn points(&self) -> Vec<Point> {
        let mut points = Vec::new();
        for (y, &max_x) in self.row_max.iter().enumerate() {
            for x in 0..=max_x {
                points.push(Point::new(x, y));
            }
        }
        points
    }

    pub fn point_count(&self) -> usize {
        self.row_max.iter().map(|&b| b + 1).sum()
    }

    /// Horizontal distance from `p` to the east border of the region: the
    /// number of east steps that fit between `p` and `nu` in `p`'s row.
    pub fn horiz(&self, p: Point) -> usize {
        debug_assert!(self.contains(p), "horiz of a point below nu");
        self.row_max[p.y] - p.x
    }

    /// Matrix coordinates of a region point: `(i, j)` with rows counted from
    /// the top starting at 1 and columns from the left starting at 1. This is
    /// the coordinate change shared by pipe dreams and insertion tableaux.
    pub fn to_matrix(&self, p: Point) -> (usize, usize) {
        debug_assert!(self.contains(p));
        (self.north_end() - p.y + 1, p.x + 1)
    }

    /// Inverse of [`Region::to_matrix`].
    pub fn from_matrix(&self, i: usize, j: usize) -> Point {
        debug_assert!(i >= 1 && j >= 1);
        let p = Point::new(j - 1, self.north_end() + 1 - i);
        debug_assert!(self.contains(p));
        p
    }

    /// Widths of the rows of cells weakly above `nu`, top row first. Entry
    /// `r` (1-indexed) is the number of cells between heights `n - r` and
    /// `n - r + 1`, which is where `nu` leaves height `n - r`.
    pub fn cell_row_widths(&self) -> Vec<usize> {
        let n = self.north_end();
        (1..=n).map(|r| self.row_max[n - r]).collect()
    }

    /// Whether `mu` shares the endpoints of `nu` and stays weakly above it.
    pub fn is_above(&self, mu: &LatticePath) -> bool {
        if mu.east_count() != self.east_end() || mu.north_count() != self.north_end() {
            return false;
        }
        mu.lattice_points().iter().all(|&p| self.contains(p))
    }
}

/// All paths weakly above `nu` with the same endpoints, in lexicographic
/// order with `E < N`.
pub fn enumerate_nu_paths(nu: &LatticePath) -> Vec<LatticePath> {
    let region = Region::new(nu);
    let mut result = Vec::new();
    let mut prefix = Vec::with_capacity(nu.len());
    search_paths(&region, Point::new(0, 0), &mut prefix, &mut result);
    result
}

fn search_paths(region: &Region, at: Point, prefix: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
    if prefix.len() == region.nu().len() {
        debug_assert!(at.x == region.east_end() && at.y == region.north_end());
        out.push(LatticePath::new(prefix.clone()));
        return;
    }
    if at.x < region.row_max(at.y) {
        prefix.push(Step::E);
        search_paths(region, Point::new(at.x + 1, at.y), prefix, out);
        prefix.pop();
    }
    if at.y < region.north_end() {
        prefix.push(Step::N);
        search_paths(region, Point::new(at.x, at.y + 1), prefix, out);
        prefix.pop();
    }
}

/// The paths covering `mu` in the nu-Tamari order. Each valley `p` of `mu`
/// (a point preceded by E and followed by N) yields one cover: let `q` be the
/// first point after `p` with the same horizontal distance to `nu`, and swap
/// the east step preceding `p` with the subpath from `p` to `q`.
pub fn tamari_upper_covers(region: &Region, mu: &LatticePath) -> BTreeSet<LatticePath> {
    assert!(region.is_above(mu), "covers of a path not above nu");
    let points = mu.lattice_points();
    let steps = mu.steps();
    let mut covers = BTreeSet::new();
    for t in mu.valley_indices() {
        let h = region.horiz(points[t]);
        let q = (t + 1..points.len())
            .find(|&u| region.horiz(points[u]) == h)
            .expect("horiz returns to its valley value before the path ends");
        // mu = prefix . E . segment . suffix, with the segment running from
        // the valley to q; the cover swaps the E with the segment.
        let mut swapped = Vec::with_capacity(steps.len());
        swapped.extend_from_slice(&steps[..t - 1]);
        swapped.extend_from_slice(&steps[t..q]);
        swapped.push(Step::E);
        swapped.extend_from_slice(&steps[q..]);
        let cover = LatticePath::new(swapped);
        debug_assert!(region.is_above(&cover));
        covers.insert(cover);
    }
    covers
}

/// The nu-Tamari order on all paths weakly above `nu`, with paths labelled by
/// their step words.
pub fn nu_tamari_poset(nu: &LatticePath) -> FinitePoset {
    let region = Region::new(nu);
    let paths = enumerate_nu_paths(nu);
    let index: std::collections::BTreeMap<&LatticePath, usize> =
        paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let labels: Vec<String> = paths.iter().map(|p| p.to_string()).collect();
    let mut covers = Vec::new();
    for (i, mu) in paths.iter().enumerate() {
        for cover in tamari_upper_covers(&region, mu) {
            covers.push((i, index[&cover]));
        }
    }
    FinitePoset::from_covers(labels, covers)
}
