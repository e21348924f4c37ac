//! Nu-trees: maximal sets of pairwise compatible lattice points weakly above
//! a path nu, together with right rotation, the binary-tree view and the
//! tree-like tableau view.
//!
//! Two points are incompatible when one lies strictly southwest of the other
//! and the smallest rectangle containing both stays weakly above nu. Every
//! maximal compatible set has exactly one point more than nu has steps, and
//! carries a rooted binary structure: each non-root node hangs either below
//! another node in its column or east of another node in its row.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::path::{LatticePath, Point, Region, Step};
use crate::poset::FinitePoset;

/// How a node hangs off its parent: `Left` children sit below their parent in
/// the same column (a vertical edge), `Right` children sit east of their
/// parent in the same row (a horizontal edge).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChildSide {
    Left,
    Right,
}

/// Whether `p` and `q` exclude each other from a common nu-tree.
pub fn incompatible(region: &Region, p: Point, q: Point) -> bool {
    let (sw, ne) = if p.x < q.x && p.y < q.y {
        (p, q)
    } else if q.x < p.x && q.y < p.y {
        (q, p)
    } else {
        return false;
    };
    // The rectangle spanned by sw and ne stays weakly above nu exactly when
    // its bottom-right corner does.
    ne.x <= region.row_max(sw.y)
}

/// Why a point set fails to be a nu-tree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum InvalidNuTree {
    OutsideRegion(Point),
    IncompatiblePair(Point, Point),
    NotMaximal(Point),
}

impl fmt::Display for InvalidNuTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvalidNuTree::OutsideRegion(p) => write!(f, "point {p} is not weakly above nu"),
            InvalidNuTree::IncompatiblePair(p, q) => {
                write!(f, "points {p} and {q} are incompatible")
            }
            InvalidNuTree::NotMaximal(p) => {
                write!(f, "set is not maximal, {p} is compatible with every member")
            }
        }
    }
}

impl std::error::Error for InvalidNuTree {}

/// Whether `nodes` is a maximal set of pairwise compatible region points.
pub fn is_nu_tree(region: &Region, nodes: &BTreeSet<Point>) -> bool {
    check_nu_tree(region, nodes).is_ok()
}

fn check_nu_tree(region: &Region, nodes: &BTreeSet<Point>) -> Result<(), InvalidNuTree> {
    if let Some(&p) = nodes.iter().find(|&&p| !region.contains(p)) {
        return Err(InvalidNuTree::OutsideRegion(p));
    }
    let list: Vec<Point> = nodes.iter().copied().collect();
    for (i, &p) in list.iter().enumerate() {
        for &q in &list[i + 1..] {
            if incompatible(region, p, q) {
                return Err(InvalidNuTree::IncompatiblePair(p, q));
            }
        }
    }
    for p in region.points() {
        if !nodes.contains(&p) && list.iter().all(|&q| !incompatible(region, p, q)) {
            return Err(InvalidNuTree::NotMaximal(p));
        }
    }
    Ok(())
}

/// A nu-tree. Nodes are kept sorted top row first, left to right within a
/// row, so equal trees compare equal and output order is stable. The parent
/// map is rebuilt whenever a tree is constructed, rotations included.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NuTree {
    region: Region,
    nodes: Vec<Point>,
    parent: BTreeMap<Point, (Point, ChildSide)>,
}

impl NuTree {
    pub fn try_new(
        region: &Region,
        nodes: impl IntoIterator<Item = Point>,
    ) -> Result<NuTree, InvalidNuTree> {
        let set: BTreeSet<Point> = nodes.into_iter().collect();
        check_nu_tree(region, &set)?;
        Ok(NuTree::new_unchecked(region, set))
    }

    fn new_unchecked(region: &Region, set: BTreeSet<Point>) -> NuTree {
        debug_assert!(is_nu_tree(region, &set));
        let mut nodes: Vec<Point> = set.iter().copied().collect();
        nodes.sort_by_key(|p| (std::cmp::Reverse(p.y), p.x));
        let parent = parent_map(&set);
        debug_assert_eq!(parent.len() + 1, nodes.len());
        NuTree { region: region.clone(), nodes, parent }
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn nu(&self) -> &LatticePath {
        self.region.nu()
    }

    /// Nodes sorted top row first, left to right within a row.
    pub fn nodes(&self) -> &[Point] {
        &self.nodes
    }

    pub fn node_set(&self) -> BTreeSet<Point> {
        self.nodes.iter().copied().collect()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.parent.contains_key(&p) || p == self.root()
    }

    /// The root, always the top-left corner `(0, n)` of the region.
    pub fn root(&self) -> Point {
        Point::new(0, self.region.north_end())
    }

    pub fn parent(&self, p: Point) -> Option<(Point, ChildSide)> {
        self.parent.get(&p).copied()
    }

    fn child(&self, p: Point, side: ChildSide) -> Option<Point> {
        self.parent.iter().find(|&(_, &(par, s))| par == p && s == side).map(|(&c, _)| c)
    }

    pub fn left_child(&self, p: Point) -> Option<Point> {
        self.child(p, ChildSide::Left)
    }

    pub fn right_child(&self, p: Point) -> Option<Point> {
        self.child(p, ChildSide::Right)
    }

    /// Number of horizontal edges on the path from `p` up to the root.
    pub fn hroot(&self, p: Point) -> usize {
        let mut count = 0;
        let mut at = p;
        while let Some((parent, side)) = self.parent(at) {
            if side == ChildSide::Right {
                count += 1;
            }
            at = parent;
        }
        count
    }

    /// Nodes in in-order: left subtree, node, right subtree.
    pub fn in_order(&self) -> Vec<Point> {
        fn walk(tree: &NuTree, at: Point, out: &mut Vec<Point>) {
            if let Some(left) = tree.left_child(at) {
                walk(tree, left, out);
            }
            out.push(at);
            if let Some(right) = tree.right_child(at) {
                walk(tree, right, out);
            }
        }
        let mut out = Vec::with_capacity(self.nodes.len());
        walk(self, self.root(), &mut out);
        out
    }
}

impl fmt::Display for NuTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.nodes.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Parent of every non-root node: the nearest node above it in its column or
/// the nearest node west of it in its row. Exactly one of the two exists in a
/// nu-tree (asserted), which is what makes the set a binary tree.
fn parent_map(nodes: &BTreeSet<Point>) -> BTreeMap<Point, (Point, ChildSide)> {
    let root_y = nodes.iter().map(|p| p.y).max().expect("tree is nonempty");
    let mut parent = BTreeMap::new();
    for &p in nodes {
        if p == Point::new(0, root_y) {
            continue;
        }
        let above = nodes.iter().filter(|q| q.x == p.x && q.y > p.y).min_by_key(|q| q.y).copied();
        let west = nodes.iter().filter(|q| q.y == p.y && q.x < p.x).max_by_key(|q| q.x).copied();
        let entry = match (above, west) {
            (Some(a), None) => (a, ChildSide::Left),
            (None, Some(w)) => (w, ChildSide::Right),
            other => unreachable!("node {p} of a nu-tree has parents {other:?}"),
        };
        parent.insert(p, entry);
    }
    parent
}

/// All nu-trees, by exhaustive search for maximal pairwise compatible sets.
/// This is the reference enumeration the rotation closure is tested against.
pub fn enumerate_nu_trees(region: &Region) -> Vec<NuTree> {
    let points = region.points();
    let n = points.len();
    let mut compatible = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            compatible[i][j] = !incompatible(region, points[i], points[j]);
        }
    }
    let mut found = Vec::new();
    let mut chosen = Vec::new();
    let mut in_chosen = vec![false; n];
    search_maximal(&compatible, 0, &mut chosen, &mut in_chosen, &mut found);
    let mut trees: Vec<NuTree> = found
        .into_iter()
        .map(|idxs| {
            let set: BTreeSet<Point> = idxs.iter().map(|&i| points[i]).collect();
            NuTree::new_unchecked(region, set)
        })
        .collect();
    trees.sort_by(|a, b| a.nodes.cmp(&b.nodes));
    trees
}

fn search_maximal(
    compatible: &[Vec<bool>],
    start: usize,
    chosen: &mut Vec<usize>,
    in_chosen: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let n = compatible.len();
    for i in start..n {
        if chosen.iter().all(|&c| compatible[c][i]) {
            chosen.push(i);
            in_chosen[i] = true;
            search_maximal(compatible, i + 1, chosen, in_chosen, out);
            in_chosen[i] = false;
            chosen.pop();
        }
    }
    let maximal = (0..n).all(|i| in_chosen[i] || chosen.iter().any(|&c| !compatible[c][i]));
    if maximal {
        out.push(chosen.clone());
    }
}

/// The bottom of the rotation order: the whole leftmost column plus the
/// ending point of every east step of nu.
pub fn minimal_tree(region: &Region) -> NuTree {
    let mut set: BTreeSet<Point> = (0..=region.north_end()).map(|y| Point::new(0, y)).collect();
    let mut at = Point::new(0, 0);
    for step in region.nu().steps() {
        match step {
            Step::E => {
                at.x += 1;
                set.insert(at);
            }
            Step::N => at.y += 1,
        }
    }
    NuTree::new_unchecked(region, set)
}

/// The top of the rotation order: the whole top row plus the starting point
/// of every north step of nu.
pub fn maximal_tree(region: &Region) -> NuTree {
    let n = region.north_end();
    let mut set: BTreeSet<Point> = (0..=region.east_end()).map(|x| Point::new(x, n)).collect();
    let mut at = Point::new(0, 0);
    for step in region.nu().steps() {
        match step {
            Step::E => at.x += 1,
            Step::N => {
                set.insert(at);
                at.y += 1;
            }
        }
    }
    NuTree::new_unchecked(region, set)
}

/// One right rotation: `removed` leaves the tree and `added` replaces it.
/// `parent` is the node above `removed` in its column and `pivot` the node
/// east of it in its row; `added` closes their rectangle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rotation {
    pub result: NuTree,
    pub parent: Point,
    pub removed: Point,
    pub pivot: Point,
    pub added: Point,
}

/// Position order used to orient exchanges: row by row from the bottom, left
/// to right within a row. Right rotations move a node strictly later.
fn position_order(p: Point) -> (usize, usize) {
    (p.y, p.x)
}

/// All right rotations of `tree`, one per rotatable node.
///
/// The normative search tries every single-element exchange landing later in
/// position order and keeps those that give a nu-tree again; the exchange is
/// provably unique per removed node, and the direct geometric construction
/// (walk up to `parent`, east to `pivot`, close the rectangle) is asserted to
/// agree with it.
pub fn right_rotation_covers(tree: &NuTree) -> Vec<Rotation> {
    let region = tree.region();
    let nodes = tree.node_set();
    let root = tree.root();
    let mut rotations = Vec::new();
    for &q in &nodes {
        if q == root {
            continue;
        }
        let mut landing = None;
        for candidate in region.points() {
            if nodes.contains(&candidate) || position_order(candidate) <= position_order(q) {
                continue;
            }
            let mut exchanged = nodes.clone();
            exchanged.remove(&q);
            exchanged.insert(candidate);
            if is_nu_tree(region, &exchanged) {
                assert!(landing.is_none(), "exchange landing point is not unique for {q}");
                landing = Some((candidate, exchanged));
            }
        }
        if let Some((added, exchanged)) = landing {
            assert!(
                q.x < added.x && q.y < added.y,
                "rotation landing {added} is not strictly northeast of {q}"
            );
            let parent = Point::new(q.x, added.y);
            let pivot = Point::new(added.x, q.y);
            assert!(nodes.contains(&parent) && nodes.contains(&pivot));
            rotations.push(Rotation {
                result: NuTree::new_unchecked(region, exchanged),
                parent,
                removed: q,
                pivot,
                added,
            });
        }
    }
    debug_assert_eq!(
        rotations.iter().map(|r| (r.removed, r.added)).collect::<BTreeSet<_>>(),
        geometric_rotations(tree),
        "exchange search and geometric rotation disagree"
    );
    rotations
}

/// The Figure-style construction of the same rotations: a node rotates when
/// it has both a node somewhere above in its column and a node east of it in
/// its row; the landing point is the opposite rectangle corner.
fn geometric_rotations(tree: &NuTree) -> BTreeSet<(Point, Point)> {
    let nodes = tree.node_set();
    let root = tree.root();
    let mut out = BTreeSet::new();
    for &q in &nodes {
        if q == root {
            continue;
        }
        let parent = nodes.iter().filter(|p| p.x == q.x && p.y > q.y).min_by_key(|p| p.y);
        let pivot = nodes.iter().filter(|r| r.y == q.y && r.x > q.x).min_by_key(|r| r.x);
        if let (Some(p), Some(r)) = (parent, pivot) {
            out.insert((q, Point::new(r.x, p.y)));
        }
    }
    out
}

/// The rotation order on all nu-trees: the reflexive-transitive closure of
/// right rotation, generated from the minimal tree.
pub fn rotation_poset(region: &Region) -> FinitePoset {
    let mut seen: BTreeMap<Vec<Point>, NuTree> = BTreeMap::new();
    let mut queue = VecDeque::from([minimal_tree(region)]);
    let mut edges: BTreeSet<(Vec<Point>, Vec<Point>)> = BTreeSet::new();
    while let Some(tree) = queue.pop_front() {
        if seen.contains_key(tree.nodes()) {
            continue;
        }
        seen.insert(tree.nodes().to_vec(), tree.clone());
        for rotation in right_rotation_covers(&tree) {
            edges.insert((tree.nodes().to_vec(), rotation.result.nodes().to_vec()));
            queue.push_back(rotation.result);
        }
    }
    let keys: Vec<&Vec<Point>> = seen.keys().collect();
    let index: BTreeMap<&Vec<Point>, usize> =
        keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
    let labels = keys.iter().map(|k| seen[*k].to_string()).collect();
    let covers = edges.iter().map(|(a, b)| (index[a], index[b])).collect();
    FinitePoset::from_covers(labels, covers)
}

/// A binary tree shape; nodes carry no data.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BinaryTree {
    pub left: Option<Box<BinaryTree>>,
    pub right: Option<Box<BinaryTree>>,
}

impl BinaryTree {
    pub fn leaf() -> Self {
        BinaryTree::default()
    }

    pub fn node_count(&self) -> usize {
        1 + self.left.as_ref().map_or(0, |t| t.node_count())
            + self.right.as_ref().map_or(0, |t| t.node_count())
    }
}

/// The binary tree underlying a nu-tree.
pub fn to_binary_tree(tree: &NuTree) -> BinaryTree {
    fn build(tree: &NuTree, at: Point) -> BinaryTree {
        BinaryTree {
            left: tree.left_child(at).map(|c| Box::new(build(tree, c))),
            right: tree.right_child(at).map(|c| Box::new(build(tree, c))),
        }
    }
    build(tree, tree.root())
}

/// Recover the pair (nu, nu-tree) from a bare binary tree, by walking its
/// boundary counterclockwise. A descent to a right child contributes an east
/// step, a return from a left child a north step; a node lands at x = number
/// of east steps before its first appearance on the walk, and at height
/// measured by the north steps after its last appearance.
pub fn from_binary_tree(shape: &BinaryTree) -> (LatticePath, NuTree) {
    struct Walk {
        steps: Vec<Step>,
        east_seen: usize,
        north_seen: usize,
        // (east steps before first appearance, north steps at last appearance)
        marks: Vec<(usize, usize)>,
    }
    fn walk(node: &BinaryTree, w: &mut Walk) -> usize {
        let id = w.marks.len();
        w.marks.push((w.east_seen, w.north_seen));
        if let Some(left) = &node.left {
            walk(left, w);
            w.steps.push(Step::N);
            w.north_seen += 1;
        }
        if let Some(right) = &node.right {
            w.steps.push(Step::E);
            w.east_seen += 1;
            walk(right, w);
        }
        w.marks[id].1 = w.north_seen;
        id
    }
    let mut w = Walk { steps: Vec::new(), east_seen: 0, north_seen: 0, marks: Vec::new() };
    walk(shape, &mut w);
    let nu = LatticePath::new(w.steps);
    let region = Region::new(&nu);
    let nodes: BTreeSet<Point> =
        w.marks.iter().map(|&(x, norths_at_last)| Point::new(x, norths_at_last)).collect();
    debug_assert_eq!(nodes.len(), w.marks.len(), "walk produced duplicate nodes");
    (nu, NuTree::new_unchecked(&region, nodes))
}

/// A nu-tree drawn as a pointed filling of the cell diagram bounded by the
/// extended path E nu N: each node marks the cell having it as southeast
/// corner. Cells use matrix coordinates, row 1 at the top.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TreeLikeTableau {
    /// Width of each cell row, top row first.
    pub row_widths: Vec<usize>,
    pub cells: BTreeSet<(usize, usize)>,
}

impl TreeLikeTableau {
    /// Pointed cells that would cross: empty cells with a pointed cell
    /// somewhere above in their column and somewhere left in their row.
    /// Tableaux of nu-trees never have any.
    pub fn crossing_cells(&self) -> Vec<(usize, usize)> {
        let mut crossings = Vec::new();
        for (i, &width) in self.row_widths.iter().enumerate() {
            let row = i + 1;
            for col in 1..=width {
                if self.cells.contains(&(row, col)) {
                    continue;
                }
                let above = self.cells.iter().any(|&(r, c)| c == col && r < row);
                let left = self.cells.iter().any(|&(r, c)| r == row && c < col);
                if above && left {
                    crossings.push((row, col));
                }
            }
        }
        crossings
    }

    /// The defining axioms of a tree-like tableau: the top-left cell is
    /// pointed, every row and every column contains a point, and every other
    /// point has a point above it or to its left but not both.
    pub fn is_tree_like(&self) -> bool {
        if !self.cells.contains(&(1, 1)) {
            return false;
        }
        let height = self.row_widths.len();
        let width = self.row_widths.first().copied().unwrap_or(0);
        let row_covered = (1..=height).all(|r| self.cells.iter().any(|&(cr, _)| cr == r));
        let col_covered = (1..=width).all(|c| self.cells.iter().any(|&(_, cc)| cc == c));
        if !row_covered || !col_covered {
            return false;
        }
        self.cells.iter().all(|&(r, c)| {
            if (r, c) == (1, 1) {
                return true;
            }
            let above = self.cells.iter().any(|&(pr, pc)| pc == c && pr < r);
            let left = self.cells.iter().any(|&(pr, pc)| pr == r && pc < c);
            above != left
        })
    }
}

/// The tableau view of a nu-tree. The diagram bounded by E nu N has one cell
/// per region point (its southeast corner), so the tableau has exactly the
/// tree's nodes as points.
pub fn tableau_of_tree(tree: &NuTree) -> TreeLikeTableau {
    let region = tree.region();
    let n = region.north_end();
    let row_widths = (0..=n).rev().map(|y| region.row_max(y) + 1).collect();
    let cells = tree.nodes().iter().map(|p| (n + 1 - p.y, p.x + 1)).collect();
    TreeLikeTableau { row_widths, cells }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(word: &str) -> LatticePath {
        word.parse().unwrap()
    }

    fn pts(coords: &[(usize, usize)]) -> BTreeSet<Point> {
        coords.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    fn tree(region: &Region, coords: &[(usize, usize)]) -> NuTree {
        NuTree::try_new(region, coords.iter().map(|&(x, y)| Point::new(x, y))).unwrap()
    }

    const T1: &[(usize, usize)] = &[(0, 0), (1, 0), (2, 1), (3, 1), (0, 2), (2, 2)];

    #[test]
    fn incompatibility_examples() {
        let en = Region::new(&path("EN"));
        assert!(incompatible(&en, Point::new(0, 0), Point::new(1, 1)));
        assert!(incompatible(&en, Point::new(1, 1), Point::new(0, 0)));
        let r = Region::new(&path("ENEEN"));
        assert!(!incompatible(&r, Point::new(1, 0), Point::new(2, 1)));
        assert!(!incompatible(&r, Point::new(0, 2), Point::new(2, 2)));
    }

    #[test]
    fn example_tree_is_valid_and_structured() {
        let region = Region::new(&path("ENEEN"));
        let t = tree(&region, T1);
        assert_eq!(t.root(), Point::new(0, 2));
        assert_eq!(t.left_child(t.root()), Some(Point::new(0, 0)));
        assert_eq!(t.right_child(t.root()), Some(Point::new(2, 2)));
        assert_eq!(t.right_child(Point::new(0, 0)), Some(Point::new(1, 0)));
        assert_eq!(t.left_child(Point::new(2, 2)), Some(Point::new(2, 1)));
        assert_eq!(t.right_child(Point::new(2, 1)), Some(Point::new(3, 1)));
    }

    #[test]
    fn non_trees_are_rejected() {
        let region = Region::new(&path("ENEEN"));
        let mut missing = pts(T1);
        missing.remove(&Point::new(1, 0));
        assert!(matches!(check_nu_tree(&region, &missing), Err(InvalidNuTree::NotMaximal(_))));
        let mut clash = pts(T1);
        clash.insert(Point::new(1, 1));
        assert!(matches!(
            check_nu_tree(&region, &clash),
            Err(InvalidNuTree::IncompatiblePair(_, _))
        ));
        let outside = pts(&[(2, 0)]);
        assert!(matches!(check_nu_tree(&region, &outside), Err(InvalidNuTree::OutsideRegion(_))));
    }

    #[test]
    fn extreme_trees_of_eneen() {
        let region = Region::new(&path("ENEEN"));
        assert_eq!(
            minimal_tree(&region).node_set(),
            pts(&[(0, 0), (0, 1), (0, 2), (1, 0), (2, 1), (3, 1)])
        );
        assert_eq!(
            maximal_tree(&region).node_set(),
            pts(&[(0, 2), (1, 2), (2, 2), (3, 2), (1, 0), (3, 1)])
        );
    }

    #[test]
    fn enumeration_counts_match_paths() {
        for word in ["", "E", "N", "EN", "NE", "ENEEN", "NENE", "EENN"] {
            let nu = path(word);
            let region = Region::new(&nu);
            let trees = enumerate_nu_trees(&region);
            assert_eq!(
                trees.len(),
                crate::path::enumerate_nu_paths(&nu).len(),
                "tree and path counts differ over {word:?}"
            );
            for t in &trees {
                assert_eq!(t.nodes().len(), nu.len() + 1);
            }
        }
    }

    #[test]
    fn single_rotation_of_smallest_tree() {
        let region = Region::new(&path("EN"));
        let bottom = minimal_tree(&region);
        let rotations = right_rotation_covers(&bottom);
        assert_eq!(rotations.len(), 1);
        let rotation = &rotations[0];
        assert_eq!(rotation.removed, Point::new(0, 0));
        assert_eq!(rotation.added, Point::new(1, 1));
        assert_eq!(rotation.parent, Point::new(0, 1));
        assert_eq!(rotation.pivot, Point::new(1, 0));
        assert_eq!(rotation.result.node_set(), pts(&[(0, 1), (1, 0), (1, 1)]));
    }

    #[test]
    fn maximal_tree_has_no_rotation() {
        let region = Region::new(&path("ENEEN"));
        assert!(right_rotation_covers(&maximal_tree(&region)).is_empty());
        assert_eq!(right_rotation_covers(&minimal_tree(&region)).len(), 2);
    }

    #[test]
    fn rotation_poset_of_eneen() {
        let region = Region::new(&path("ENEEN"));
        let poset = rotation_poset(&region);
        assert_eq!(poset.len(), 7);
        assert!(poset.is_lattice());
    }

    #[test]
    fn hroot_examples() {
        let region = Region::new(&path("ENEEN"));
        assert_eq!(maximal_tree(&region).hroot(Point::new(3, 1)), 3);
        assert_eq!(tree(&region, T1).hroot(Point::new(3, 1)), 2);
        assert_eq!(tree(&region, T1).hroot(Point::new(0, 2)), 0);
    }

    #[test]
    fn binary_tree_round_trip() {
        for word in ["", "E", "N", "EN", "NE", "ENEEN", "NENE"] {
            let nu = path(word);
            let region = Region::new(&nu);
            for t in enumerate_nu_trees(&region) {
                let (back_nu, back_tree) = from_binary_tree(&to_binary_tree(&t));
                assert_eq!(back_nu, nu);
                assert_eq!(back_tree.node_set(), t.node_set());
            }
        }
    }

    #[test]
    fn single_node_binary_tree() {
        let (nu, t) = from_binary_tree(&BinaryTree::leaf());
        assert!(nu.is_empty());
        assert_eq!(t.node_set(), pts(&[(0, 0)]));
    }

    #[test]
    fn left_comb_gives_a_column() {
        let mut comb = BinaryTree::leaf();
        for _ in 0..3 {
            comb = BinaryTree { left: Some(Box::new(comb)), right: None };
        }
        let (nu, t) = from_binary_tree(&comb);
        assert_eq!(nu, path("NNN"));
        assert_eq!(t.node_set(), pts(&[(0, 0), (0, 1), (0, 2), (0, 3)]));
    }

    #[test]
    fn tableau_of_example_tree() {
        let region = Region::new(&path("ENEEN"));
        let tab = tableau_of_tree(&tree(&region, T1));
        assert_eq!(tab.row_widths, vec![4, 4, 2]);
        assert_eq!(tab.cells.len(), 6);
        assert!(tab.is_tree_like());
        assert!(tab.crossing_cells().is_empty());
        assert!(tab.cells.contains(&(1, 1)));
    }

    #[test]
    fn display_orders_nodes_top_down() {
        let region = Region::new(&path("ENEEN"));
        assert_eq!(tree(&region, T1).to_string(), "{(0,2),(2,2),(2,1),(3,1),(0,0),(1,0)}");
    }
}
