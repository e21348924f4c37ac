//! A small finite poset engine: explicit elements, cover relation, and the
//! order-theoretic queries the rest of the crate needs (lattice checks,
//! meets, joins, duals, isomorphism via an explicit map, DOT output).
//!
//! Sizes stay in the hundreds here, so everything is computed eagerly from a
//! reachability closure; clarity beats asymptotics at this scale.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

/// Why a meet or join does not exist.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MeetJoinError {
    /// The two elements have no common bound on the requested side.
    NoBound,
    /// There are common bounds, but no unique extremal one.
    NotUnique,
}

/// Row-per-element bit matrix for reachability.
#[derive(Clone, PartialEq, Eq, Debug)]
struct BitMatrix {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix { n, words, rows: vec![0; n * words] }
    }

    fn set(&mut self, row: usize, col: usize) {
        self.rows[row * self.words + col / 64] |= 1 << (col % 64);
    }

    fn get(&self, row: usize, col: usize) -> bool {
        self.rows[row * self.words + col / 64] >> (col % 64) & 1 == 1
    }

    /// OR the row `src` into the row `dst`; reports whether `dst` changed.
    fn or_row(&mut self, dst: usize, src: usize) -> bool {
        let mut changed = false;
        for w in 0..self.words {
            let bits = self.rows[src * self.words + w];
            let slot = &mut self.rows[dst * self.words + w];
            if *slot | bits != *slot {
                *slot |= bits;
                changed = true;
            }
        }
        changed
    }
}

/// A finite poset on labelled elements. The stored cover relation is always
/// the transitive reduction of whatever generating relation it was built
/// from, and elements keep the index order they were given in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinitePoset {
    labels: Vec<String>,
    covers: BTreeSet<(usize, usize)>,
    /// `up.get(a, b)` iff `a <= b`.
    up: BitMatrix,
    /// `down.get(a, b)` iff `b <= a`.
    down: BitMatrix,
}

impl FinitePoset {
    /// Build a poset from generating relations `lo < hi`. The relation is
    /// transitively reduced, so redundant generators are accepted and
    /// dropped. Panics if the generators contain a cycle or a self-loop,
    /// or if labels repeat.
    pub fn from_covers(labels: Vec<String>, relations: Vec<(usize, usize)>) -> Self {
        let n = labels.len();
        {
            let unique: BTreeSet<&String> = labels.iter().collect();
            assert!(unique.len() == n, "poset labels must be distinct");
        }
        let mut up = BitMatrix::new(n);
        for a in 0..n {
            up.set(a, a);
        }
        let mut above: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for &(lo, hi) in &relations {
            assert!(lo < n && hi < n, "cover index out of range");
            assert!(lo != hi, "cover relation has a self-loop");
            above[lo].insert(hi);
        }
        // Propagate reachability until stable; n is small enough that the
        // quadratic pass count is irrelevant.
        let mut changed = true;
        while changed {
            changed = false;
            for (a, row_above) in above.iter().enumerate() {
                for &b in row_above {
                    if up.or_row(a, b) {
                        changed = true;
                    }
                }
            }
        }
        for (a, row_above) in above.iter().enumerate() {
            for &b in row_above {
                assert!(!up.get(b, a), "cover relation contains a cycle");
            }
        }
        let mut down = BitMatrix::new(n);
        for a in 0..n {
            for b in 0..n {
                if up.get(a, b) {
                    down.set(b, a);
                }
            }
        }
        let mut covers = BTreeSet::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && up.get(a, b) {
                    let strictly_between =
                        (0..n).any(|c| c != a && c != b && up.get(a, c) && up.get(c, b));
                    if !strictly_between {
                        covers.insert((a, b));
                    }
                }
            }
        }
        FinitePoset { labels, covers, up, down }
    }

    /// Build a poset from a reflexive order predicate on element indices.
    pub fn from_order(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Self {
        let n = labels.len();
        let mut relations = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && leq(a, b) {
                    relations.push((a, b));
                }
            }
        }
        FinitePoset::from_covers(labels, relations)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Cover pairs `(lo, hi)` in index order.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        self.covers.iter().copied().collect()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up.get(a, b)
    }

    pub fn is_cover(&self, lo: usize, hi: usize) -> bool {
        self.covers.contains(&(lo, hi))
    }

    fn extremal(
        &self,
        bounds: impl Iterator<Item = usize> + Clone,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<usize, MeetJoinError> {
        // An element of `bounds` dominated by no other bound, required unique.
        let mut best = None;
        for c in bounds.clone() {
            if bounds.clone().all(|d| d == c || !leq(c, d)) {
                if best.is_some() {
                    return Err(MeetJoinError::NotUnique);
                }
                best = Some(c);
            }
        }
        best.ok_or(MeetJoinError::NoBound)
    }

    pub fn meet(&self, a: usize, b: usize) -> Result<usize, MeetJoinError> {
        let lower: Vec<usize> =
            (0..self.len()).filter(|&c| self.down.get(a, c) && self.down.get(b, c)).collect();
        self.extremal(lower.iter().copied(), |c, d| self.leq(c, d))
    }

    pub fn join(&self, a: usize, b: usize) -> Result<usize, MeetJoinError> {
        let upper: Vec<usize> =
            (0..self.len()).filter(|&c| self.up.get(a, c) && self.up.get(b, c)).collect();
        self.extremal(upper.iter().copied(), |c, d| self.leq(d, c))
    }

    /// Whether every pair of elements has both a meet and a join.
    pub fn is_lattice(&self) -> bool {
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                if self.meet(a, b).is_err() || self.join(a, b).is_err() {
                    return false;
                }
            }
        }
        true
    }

    /// The order-dual poset: same elements, all covers flipped.
    pub fn dual(&self) -> FinitePoset {
        FinitePoset {
            labels: self.labels.clone(),
            covers: self.covers.iter().map(|&(a, b)| (b, a)).collect(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Whether `map` (from labels of `self` to labels of `other`) is an order
    /// isomorphism: a bijection sending covers to covers in both directions.
    /// A map that is not a bijection between the label sets yields `false`.
    pub fn isomorphic_via(&self, other: &FinitePoset, map: &BTreeMap<String, String>) -> bool {
        if self.len() != other.len() || map.len() != self.len() {
            return false;
        }
        let mut image = vec![usize::MAX; self.len()];
        let mut seen = vec![false; other.len()];
        for (i, label) in self.labels.iter().enumerate() {
            let Some(target) = map.get(label) else { return false };
            let Some(j) = other.index_of(target) else { return false };
            if seen[j] {
                return false;
            }
            seen[j] = true;
            image[i] = j;
        }
        self.covers.len() == other.covers.len()
            && self.covers.iter().all(|&(a, b)| other.is_cover(image[a], image[b]))
    }

    /// Deterministic DOT rendering of the Hasse diagram, edges pointing from
    /// the lower to the upper element of each cover.
    pub fn hasse_dot(&self) -> String {
        fn quote(label: &str) -> String {
            format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
        }
        let mut dot = String::from("digraph poset {\n  rankdir=BT;\n");
        for label in &self.labels {
            let _ = writeln!(dot, "  {};", quote(label));
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(dot, "  {} -> {};", quote(&self.labels[a]), quote(&self.labels[b]));
        }
        dot.push_str("}\n");
        dot
    }
}
