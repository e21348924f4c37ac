//! The higher rotation complexes: faces are sets of region points with no
//! k+1 pairwise incompatible members, and the facets generalize nu-trees
//! (which are the case k = 1).
//!
//! Facet enumeration leans on one reduction. A point lying in no clique of
//! size k+1 of the incompatibility graph can never complete a forbidden
//! subset, so every facet contains it; facets are therefore exactly the
//! union of these irrelevant points with a maximal clique-free subset of the
//! remaining relevant points, and the search only branches on the latter.
//! Without this the Fuss-Catalan instances are far out of reach.

use std::collections::BTreeSet;

use crate::path::{Point, Region};
use crate::pipedream::{Permutation, subword_facets};
use crate::tree::incompatible;

/// An undirected graph on labeled vertices; edges stored with the smaller
/// index first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    labels: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(labels: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        let n = labels.len();
        let edges = edges
            .into_iter()
            .map(|(a, b)| {
                assert!(a != b, "loops are not allowed");
                assert!(a < n && b < n, "edge endpoint out of range");
                (a.min(b), a.max(b))
            })
            .collect();
        Graph { labels, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut degrees = vec![0; self.vertex_count()];
        for &(a, b) in &self.edges {
            degrees[a] += 1;
            degrees[b] += 1;
        }
        degrees
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count() == n * (n - 1) / 2
    }
}

/// Point sets rendered the same way trees are: top row first.
fn point_set_label(points: &BTreeSet<Point>) -> String {
    let mut sorted: Vec<Point> = points.iter().copied().collect();
    sorted.sort_by_key(|p| (std::cmp::Reverse(p.y), p.x));
    let inner: Vec<String> = sorted.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

struct Incompatibility {
    points: Vec<Point>,
    adjacent: Vec<Vec<bool>>,
}

impl Incompatibility {
    fn new(region: &Region) -> Incompatibility {
        let points = region.points();
        let n = points.len();
        let mut adjacent = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                adjacent[i][j] = incompatible(region, points[i], points[j]);
            }
        }
        Incompatibility { points, adjacent }
    }

    /// Whether `candidates` (already known pairwise order) contains a clique
    /// of the given size.
    fn has_clique(&self, candidates: &[usize], size: usize) -> bool {
        if size == 0 {
            return true;
        }
        if candidates.len() < size {
            return false;
        }
        for (at, &v) in candidates.iter().enumerate() {
            let narrowed: Vec<usize> =
                candidates[at + 1..].iter().copied().filter(|&u| self.adjacent[v][u]).collect();
            if self.has_clique(&narrowed, size - 1) {
                return true;
            }
        }
        false
    }

    /// Whether vertex `v` completes a clique of the given size together with
    /// members of `chosen`.
    fn in_clique_with(&self, chosen: &[usize], v: usize, size: usize) -> bool {
        let neighbors: Vec<usize> =
            chosen.iter().copied().filter(|&u| self.adjacent[v][u]).collect();
        self.has_clique(&neighbors, size - 1)
    }
}

/// Whether `points` avoids k+1 pairwise incompatible members.
pub fn is_face(region: &Region, k: usize, points: &BTreeSet<Point>) -> bool {
    assert!(k >= 1);
    let graph = Incompatibility::new(region);
    let indices: Vec<usize> = points
        .iter()
        .map(|p| graph.points.iter().position(|q| q == p).expect("face points lie in the region"))
        .collect();
    !graph.has_clique(&indices, k + 1)
}

/// The points lying in every facet: those in no clique of size k+1. A point
/// inside such a clique is missed by any facet extending the rest of the
/// clique, so this is exactly the facet intersection.
pub fn irrelevant_nodes(region: &Region, k: usize) -> BTreeSet<Point> {
    assert!(k >= 1);
    let graph = Incompatibility::new(region);
    let all: Vec<usize> = (0..graph.points.len()).collect();
    all.iter()
        .filter(|&&v| !graph.in_clique_with(&all, v, k + 1))
        .map(|&v| graph.points[v])
        .collect()
}

/// All maximal faces, each returned as a full point set.
pub fn enumerate_k_trees(region: &Region, k: usize) -> Vec<BTreeSet<Point>> {
    assert!(k >= 1);
    let graph = Incompatibility::new(region);
    let all: Vec<usize> = (0..graph.points.len()).collect();
    let (irrelevant, relevant): (Vec<usize>, Vec<usize>) =
        all.iter().partition(|&&v| !graph.in_clique_with(&all, v, k + 1));
    let mut found = Vec::new();
    let mut chosen = Vec::new();
    search_clique_free(&graph, k, &relevant, 0, &mut chosen, &mut found);
    let mut facets: Vec<BTreeSet<Point>> = found
        .into_iter()
        .map(|extra| irrelevant.iter().chain(&extra).map(|&v| graph.points[v]).collect())
        .collect();
    facets.sort();
    facets
}

fn search_clique_free(
    graph: &Incompatibility,
    k: usize,
    relevant: &[usize],
    start: usize,
    chosen: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    for at in start..relevant.len() {
        let v = relevant[at];
        if !graph.in_clique_with(chosen, v, k + 1) {
            chosen.push(v);
            search_clique_free(graph, k, relevant, at + 1, chosen, found);
            chosen.pop();
        }
    }
    let maximal =
        relevant.iter().all(|&u| chosen.contains(&u) || graph.in_clique_with(chosen, u, k + 1));
    if maximal {
        found.push(chosen.clone());
    }
}

/// Facet adjacency: two facets are neighbors when they exchange one point.
pub fn flip_graph(region: &Region, k: usize) -> Graph {
    let facets = enumerate_k_trees(region, k);
    let labels = facets.iter().map(point_set_label).collect();
    let mut edges = Vec::new();
    for a in 0..facets.len() {
        for b in a + 1..facets.len() {
            if facets[a].symmetric_difference(&facets[b]).count() == 2 {
                edges.push((a, b));
            }
        }
    }
    Graph::new(labels, edges)
}

/// The word (s_{k+1}, ..., s_{m+1}) repeated k+1 times.
pub fn fuss_word(m: usize, k: usize) -> Vec<usize> {
    assert!(m >= k && k >= 1);
    (0..=k).flat_map(|_| k + 1..=m + 1).collect()
}

/// The product s_{k+1} s_{k+2} ... s_{m+1} in S_{m+2}.
pub fn fuss_pi(m: usize, k: usize) -> Permutation {
    assert!(m >= k && k >= 1);
    let mut pi = Permutation::identity(m + 2);
    for i in k + 1..=m + 1 {
        pi.swap_positions(i);
    }
    pi
}

/// Facet adjacency graph of the subword complex of the Fuss pair.
pub fn fuss_subword_graph(m: usize, k: usize) -> Graph {
    let facets = subword_facets(&fuss_word(m, k), &fuss_pi(m, k));
    let labels = facets.iter().map(crate::pipedream::facet_label).collect();
    let mut edges = Vec::new();
    for a in 0..facets.len() {
        for b in a + 1..facets.len() {
            if facets[a].symmetric_difference(&facets[b]).count() == 2 {
                edges.push((a, b));
            }
        }
    }
    Graph::new(labels, edges)
}

/// Isomorphism by backtracking over color classes, after refining vertex
/// colors by repeated neighbor-color hashing. Labels play no role.
pub fn graphs_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let cg = refine_colors(g);
    let ch = refine_colors(h);
    let mut sorted_g = cg.clone();
    let mut sorted_h = ch.clone();
    sorted_g.sort_unstable();
    sorted_h.sort_unstable();
    if sorted_g != sorted_h {
        return false;
    }
    // Most constrained first: rare colors early.
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    let frequency = |color: usize| cg.iter().filter(|&&c| c == color).count();
    order.sort_by_key(|&v| (frequency(cg[v]), v));
    let mut assigned: Vec<Option<usize>> = vec![None; g.vertex_count()];
    let mut used = vec![false; h.vertex_count()];
    let matching = Matching { g, h, cg: &cg, ch: &ch, order: &order };
    matching.extend(0, &mut assigned, &mut used)
}

fn refine_colors(graph: &Graph) -> Vec<usize> {
    let n = graph.vertex_count();
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in graph.edges() {
        neighbors[a].push(b);
        neighbors[b].push(a);
    }
    let mut colors = graph.degrees();
    loop {
        let mut signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = neighbors[v].iter().map(|&u| colors[u]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut palette: Vec<&(usize, Vec<usize>)> = signatures.iter().collect();
        palette.sort();
        palette.dedup();
        let next: Vec<usize> = signatures
            .iter()
            .map(|sig| palette.binary_search(&sig).expect("signature is present"))
            .collect();
        let classes_before = colors.iter().collect::<BTreeSet<_>>().len();
        let classes_after = next.iter().collect::<BTreeSet<_>>().len();
        let stable = classes_after == classes_before;
        colors = next;
        if stable {
            return colors;
        }
        signatures.clear();
    }
}

/// The fixed context of one isomorphism search: both graphs, their refined
/// colors, and the assignment order.
struct Matching<'a> {
    g: &'a Graph,
    h: &'a Graph,
    cg: &'a [usize],
    ch: &'a [usize],
    order: &'a [usize],
}

impl Matching<'_> {
    fn extend(&self, at: usize, assigned: &mut [Option<usize>], used: &mut [bool]) -> bool {
        if at == self.order.len() {
            return true;
        }
        let v = self.order[at];
        for u in 0..self.h.vertex_count() {
            if used[u] || self.ch[u] != self.cg[v] {
                continue;
            }
            let consistent = self.order[..at].iter().all(|&w| {
                let image = assigned[w].expect("earlier vertices are assigned");
                self.g.has_edge(v, w) == self.h.has_edge(u, image)
            });
            if !consistent {
                continue;
            }
            assigned[v] = Some(u);
            used[u] = true;
            if self.extend(at + 1, assigned, used) {
                return true;
            }
            assigned[v] = None;
            used[u] = false;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::LatticePath;
    use crate::tree::enumerate_nu_trees;

    fn region(word: &str) -> Region {
        Region::new(&word.parse::<LatticePath>().unwrap())
    }

    fn pts(coords: &[(usize, usize)]) -> BTreeSet<Point> {
        coords.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    #[test]
    fn faces_at_k_one_are_compatible_sets() {
        let region = region("ENEEN");
        assert!(is_face(&region, 1, &pts(&[(0, 0), (1, 0), (2, 1)])));
        assert!(!is_face(&region, 1, &pts(&[(0, 0), (1, 1)])));
    }

    #[test]
    fn small_sets_are_faces() {
        let region = region("EN");
        assert!(is_face(&region, 2, &pts(&[(0, 0), (1, 0), (0, 1), (1, 1)])));
        assert!(is_face(&region, 2, &pts(&[(0, 0), (1, 1)])));
    }

    #[test]
    fn k_one_facets_are_trees() {
        for word in ["", "EN", "ENEEN", "NENE", "EENN"] {
            let region = region(word);
            let facets = enumerate_k_trees(&region, 1);
            let trees: Vec<BTreeSet<Point>> = {
                let mut sets: Vec<BTreeSet<Point>> =
                    enumerate_nu_trees(&region).iter().map(|t| t.node_set()).collect();
                sets.sort();
                sets
            };
            assert_eq!(facets, trees, "over {word:?}");
        }
    }

    #[test]
    fn large_k_leaves_a_single_facet() {
        let region = region("ENEEN");
        let facets = enumerate_k_trees(&region, 2);
        assert_eq!(facets.len(), 1);
        assert_eq!(facets[0].len(), region.point_count());
        assert_eq!(irrelevant_nodes(&region, 2).len(), region.point_count());
    }

    #[test]
    fn irrelevant_diagonals_of_a_rectangle() {
        let region = region("EEEENN");
        let irrelevant = irrelevant_nodes(&region, 2);
        assert_eq!(irrelevant, pts(&[(0, 2), (0, 1), (1, 2), (3, 0), (4, 0), (4, 1)]));
        for facet in enumerate_k_trees(&region, 2) {
            assert!(irrelevant.is_subset(&facet));
        }
    }

    #[test]
    fn irrelevant_nodes_are_the_facet_intersection() {
        for (word, k) in [("ENEEN", 1), ("EENN", 2), ("NENENE", 1)] {
            let region = region(word);
            let facets = enumerate_k_trees(&region, k);
            let mut intersection = facets[0].clone();
            for facet in &facets[1..] {
                intersection = intersection.intersection(facet).copied().collect();
            }
            assert_eq!(intersection, irrelevant_nodes(&region, k), "at {word:?}, k={k}");
        }
    }

    #[test]
    fn fuss_words_and_permutations() {
        assert_eq!(fuss_word(4, 2), vec![3, 4, 5, 3, 4, 5, 3, 4, 5]);
        assert_eq!(fuss_pi(4, 2).one_line(), &[1, 2, 4, 5, 6, 3]);
        assert_eq!(fuss_pi(4, 2).length(), 3);
        assert_eq!(fuss_word(2, 2), vec![3, 3, 3]);
    }

    #[test]
    fn fuss_facet_counts_are_binomial() {
        for (m, k, expected) in [(2, 2, 3), (3, 2, 6), (4, 2, 10), (3, 3, 4), (4, 3, 10)] {
            let graph = fuss_subword_graph(m, k);
            assert_eq!(graph.vertex_count(), expected, "at m={m}, k={k}");
        }
    }

    #[test]
    fn smallest_fuss_instances_are_complete_graphs() {
        for k in [1, 2, 3] {
            let graph = fuss_subword_graph(k, k);
            assert_eq!(graph.vertex_count(), k + 1);
            assert!(graph.is_complete());
        }
    }

    #[test]
    fn triangle_instance_agrees_across_models() {
        let fuss = fuss_subword_graph(2, 2);
        let rectangle = flip_graph(&region("EENN"), 2);
        let repeated = flip_graph(&region("NEENEENEE"), 2);
        assert!(graphs_isomorphic(&fuss, &rectangle));
        assert!(graphs_isomorphic(&fuss, &repeated));
        assert!(fuss.is_complete() && fuss.vertex_count() == 3);
    }

    #[test]
    fn isomorphism_basics() {
        let triangle =
            Graph::new(vec!["a".into(), "b".into(), "c".into()], [(0, 1), (1, 2), (0, 2)]);
        let path = Graph::new(vec!["a".into(), "b".into(), "c".into()], [(0, 1), (1, 2)]);
        assert!(graphs_isomorphic(&triangle, &triangle));
        assert!(!graphs_isomorphic(&triangle, &path));
        let square = Graph::new(
            vec!["1".into(), "2".into(), "3".into(), "4".into()],
            [(0, 1), (1, 2), (2, 3), (3, 0)],
        );
        let relabeled = Graph::new(
            vec!["1".into(), "2".into(), "3".into(), "4".into()],
            [(0, 2), (2, 1), (1, 3), (3, 0)],
        );
        assert!(graphs_isomorphic(&square, &relabeled));
        let two_pairs =
            Graph::new(vec!["1".into(), "2".into(), "3".into(), "4".into()], [(0, 1), (2, 3)]);
        assert!(!graphs_isomorphic(&square, &two_pairs));
    }
}
