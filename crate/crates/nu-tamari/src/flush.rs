//! Flushing bijections between nu-paths and nu-trees, the reflection that
//! swaps a region with the region of the reversed path, and the duality map
//! these induce on the rotation order.
//!
//! Both directions place row point counts into the region row by row from
//! the bottom, pushing each row's points as far as possible to one side
//! among the positions not yet blocked. After a row is placed, every one of
//! its positions except the one nearest the opposite side blocks the rows
//! above it.

use std::collections::BTreeSet;

use crate::path::{LatticePath, Point, Region, Step};
use crate::tree::NuTree;

#[derive(Clone, Copy)]
enum Side {
    Leftmost,
    Rightmost,
}

/// Place `counts[y]` points in row `y`, flushed to the given side of the
/// unblocked positions. Returns the placed x positions per row, sorted.
fn flush_positions(region: &Region, counts: &[usize], side: Side) -> Vec<Vec<usize>> {
    let n = region.north_end();
    assert_eq!(counts.len(), n + 1);
    let mut forbidden: BTreeSet<usize> = BTreeSet::new();
    let mut rows = Vec::with_capacity(n + 1);
    for (y, &count) in counts.iter().enumerate() {
        let available: Vec<usize> =
            (0..=region.row_max(y)).filter(|x| !forbidden.contains(x)).collect();
        assert!(count >= 1 && count <= available.len(), "row counts do not fit the region");
        let placed: Vec<usize> = match side {
            Side::Leftmost => available[..count].to_vec(),
            Side::Rightmost => available[available.len() - count..].to_vec(),
        };
        let kept = match side {
            Side::Leftmost => *placed.last().expect("count is positive"),
            Side::Rightmost => placed[0],
        };
        forbidden.extend(placed.iter().copied().filter(|&x| x != kept));
        rows.push(placed);
    }
    rows
}

fn row_counts_of_path(region: &Region, mu: &LatticePath) -> Vec<usize> {
    let mut counts = vec![0usize; region.north_end() + 1];
    for p in mu.lattice_points() {
        counts[p.y] += 1;
    }
    counts
}

/// The right flushing of a nu-path: its row counts pushed east.
pub fn right_flush(region: &Region, mu: &LatticePath) -> NuTree {
    assert!(region.is_above(mu), "right flushing expects a path weakly above nu");
    let counts = row_counts_of_path(region, mu);
    let nodes = flush_positions(region, &counts, Side::Rightmost)
        .into_iter()
        .enumerate()
        .flat_map(|(y, xs)| xs.into_iter().map(move |x| Point::new(x, y)));
    NuTree::try_new(region, nodes).expect("right flushing a nu-path yields a nu-tree")
}

/// The left flushing of a nu-tree: its row counts pushed west. The placed
/// rows always form consecutive runs that chain into a path above nu.
pub fn left_flush(tree: &NuTree) -> LatticePath {
    let region = tree.region();
    let n = region.north_end();
    let mut counts = vec![0usize; n + 1];
    for p in tree.nodes() {
        counts[p.y] += 1;
    }
    let rows = flush_positions(region, &counts, Side::Leftmost);
    let mut steps = Vec::with_capacity(tree.nodes().len() - 1);
    let mut at = 0;
    for (y, xs) in rows.iter().enumerate() {
        assert_eq!(xs[0], at, "left flushed rows must chain");
        assert!(xs.windows(2).all(|w| w[1] == w[0] + 1), "left flushed rows must be consecutive");
        at = *xs.last().expect("count is positive");
        steps.extend(std::iter::repeat_n(Step::E, xs.len() - 1));
        if y < n {
            steps.push(Step::N);
        }
    }
    let mu = LatticePath::new(steps);
    debug_assert!(region.is_above(&mu));
    mu
}

/// Reflect a nu-tree across the antidiagonal, (x, y) to (n - y, m - x).
/// This is an incompatibility-preserving bijection between the region of nu
/// and the region of reversed nu, so it carries nu-trees to trees there.
pub fn reflect_tree(tree: &NuTree) -> NuTree {
    let region = tree.region();
    let m = region.east_end();
    let n = region.north_end();
    let target = Region::new(&region.nu().reversed());
    let nodes = tree.nodes().iter().map(|p| Point::new(n - p.y, m - p.x));
    NuTree::try_new(&target, nodes).expect("reflection yields a tree over the reversed path")
}

/// The order-reversing bijection from paths above nu to paths above reversed
/// nu: flush right, reflect, flush left.
pub fn duality_map(region: &Region, mu: &LatticePath) -> LatticePath {
    left_flush(&reflect_tree(&right_flush(region, mu)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::enumerate_nu_paths;
    use crate::tree::{enumerate_nu_trees, maximal_tree, minimal_tree};

    fn path(word: &str) -> LatticePath {
        word.parse().unwrap()
    }

    fn pts(coords: &[(usize, usize)]) -> BTreeSet<Point> {
        coords.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    #[test]
    fn right_flush_examples() {
        let region = Region::new(&path("ENEEN"));
        assert_eq!(
            right_flush(&region, &path("ENENE")).node_set(),
            pts(&[(0, 0), (1, 0), (2, 1), (3, 1), (0, 2), (2, 2)])
        );
        assert_eq!(right_flush(&region, &path("ENEEN")), minimal_tree(&region));
        assert_eq!(right_flush(&region, &path("NNEEE")), maximal_tree(&region));
    }

    #[test]
    fn left_flush_example() {
        let region = Region::new(&path("ENEEN"));
        let tree = NuTree::try_new(&region, pts(&[(0, 0), (1, 0), (2, 1), (3, 1), (0, 2), (2, 2)]))
            .unwrap();
        assert_eq!(left_flush(&tree), path("ENENE"));
    }

    #[test]
    fn flushes_are_mutually_inverse() {
        for word in ["", "E", "NE", "ENEEN", "NENE", "EENN", "ENENEN"] {
            let region = Region::new(&path(word));
            for mu in enumerate_nu_paths(region.nu()) {
                assert_eq!(left_flush(&right_flush(&region, &mu)), mu);
            }
            for tree in enumerate_nu_trees(&region) {
                assert_eq!(right_flush(&region, &left_flush(&tree)), tree);
            }
        }
    }

    #[test]
    fn flush_matches_horizontal_distance() {
        // The k-th point of mu along the path matches the k-th tree node in
        // bottom-up, right-to-left order, and horizontal distances transfer.
        let region = Region::new(&path("ENEEN"));
        for mu in enumerate_nu_paths(region.nu()) {
            let tree = right_flush(&region, &mu);
            let mut nodes = tree.node_set().into_iter().collect::<Vec<_>>();
            nodes.sort_by_key(|p| (p.y, std::cmp::Reverse(p.x)));
            let points = mu.lattice_points();
            assert_eq!(points.len(), nodes.len());
            for (p, node) in points.iter().zip(&nodes) {
                assert_eq!(region.horiz(*p), tree.hroot(*node), "at {p} in {mu}");
            }
        }
    }

    #[test]
    fn reflection_swaps_extreme_trees() {
        let region = Region::new(&path("ENEEN"));
        let reversed = Region::new(&path("ENNEN"));
        assert_eq!(reflect_tree(&minimal_tree(&region)), maximal_tree(&reversed));
        assert_eq!(reflect_tree(&maximal_tree(&region)), minimal_tree(&reversed));
    }

    #[test]
    fn reflection_is_an_involution() {
        let region = Region::new(&path("NENE"));
        for tree in enumerate_nu_trees(&region) {
            assert_eq!(reflect_tree(&reflect_tree(&tree)), tree);
        }
    }

    #[test]
    fn duality_swaps_bottom_and_top() {
        let region = Region::new(&path("ENEEN"));
        assert_eq!(duality_map(&region, &path("ENEEN")), path("NNNEE"));
        assert_eq!(duality_map(&region, &path("NNEEE")), path("ENNEN"));
    }
}
