//! Bracket vectors: an encoding of nu-trees as integer sequences under which
//! the rotation order becomes the componentwise order.
//!
//! The bracket of a tree lists the heights of its nodes in in-order. The
//! minimal bracket is the height sequence of nu itself, read along the path;
//! the last position holding each height k is the fixed position f_k, and
//! every bracket keeps value k there. Meets are componentwise minima; joins
//! are computed on the reversed path via reflection because componentwise
//! maxima of brackets need not be brackets.

use std::fmt;

use crate::flush::{reflect_tree, right_flush};
use crate::path::{LatticePath, Region, Step};
use crate::tree::NuTree;

/// Why a vector fails to be a bracket vector. Positions are 1-indexed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BracketError {
    WrongLength { expected: usize, got: usize },
    FixedValue { position: usize, expected: usize },
    BelowMinimum { position: usize },
    AboveMaximum { position: usize },
    Pattern121 { positions: (usize, usize, usize) },
}

impl fmt::Display for BracketError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BracketError::WrongLength { expected, got } => {
                write!(f, "expected {expected} entries, got {got}")
            }
            BracketError::FixedValue { position, expected } => {
                write!(f, "position {position} must hold the value {expected}")
            }
            BracketError::BelowMinimum { position } => {
                write!(f, "entry at position {position} is below the minimal bracket")
            }
            BracketError::AboveMaximum { position } => {
                write!(f, "entry at position {position} exceeds the region height")
            }
            BracketError::Pattern121 { positions: (i, j, l) } => {
                write!(f, "entries at positions {i},{j},{l} form a 121 pattern")
            }
        }
    }
}

impl std::error::Error for BracketError {}

/// Why a bracket rotation is unavailable.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RotateError {
    /// The top height never rotates.
    TopValue,
    /// Rotating at x needs at least two entries equal to x.
    TooFewOccurrences,
}

impl fmt::Display for RotateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RotateError::TopValue => write!(f, "the top height cannot be rotated"),
            RotateError::TooFewOccurrences => {
                write!(f, "rotation needs at least two entries of the chosen value")
            }
        }
    }
}

impl std::error::Error for RotateError {}

/// The bracket system of a region: its minimal bracket and fixed positions,
/// with every bracket operation hung off it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Brackets {
    region: Region,
    minimum: Vec<usize>,
    /// 1-indexed position of the last entry equal to k in the minimal
    /// bracket, for each height k.
    fixed: Vec<usize>,
}

impl Brackets {
    pub fn new(region: &Region) -> Brackets {
        let minimum: Vec<usize> = region.nu().lattice_points().iter().map(|p| p.y).collect();
        let fixed = (0..=region.north_end())
            .map(|k| {
                minimum.iter().rposition(|&v| v == k).expect("every height occurs along the path")
                    + 1
            })
            .collect();
        Brackets { region: region.clone(), minimum, fixed }
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    /// The bracket of nu itself, the bottom of the componentwise order.
    pub fn minimum(&self) -> &[usize] {
        &self.minimum
    }

    /// The 1-indexed fixed positions (f_0, ..., f_n).
    pub fn fixed_positions(&self) -> &[usize] {
        &self.fixed
    }

    /// Node heights in in-order.
    pub fn of_tree(&self, tree: &NuTree) -> Vec<usize> {
        assert_eq!(tree.nu(), self.region.nu());
        let entries: Vec<usize> = tree.in_order().iter().map(|p| p.y).collect();
        debug_assert!(self.is_valid(&entries));
        entries
    }

    /// Greedy fill: for each height k from the bottom up, write as many
    /// values k as mu has points at height k, into the rightmost still-empty
    /// positions not beyond f_k.
    pub fn of_path(&self, mu: &LatticePath) -> Vec<usize> {
        assert!(self.region.is_above(mu), "bracket filling expects a path weakly above nu");
        let mut slots: Vec<Option<usize>> = vec![None; self.minimum.len()];
        for (k, &limit) in self.fixed.iter().enumerate() {
            let mut remaining = mu.lattice_points().iter().filter(|p| p.y == k).count();
            for pos in (0..limit).rev() {
                if remaining == 0 {
                    break;
                }
                if slots[pos].is_none() {
                    slots[pos] = Some(k);
                    remaining -= 1;
                }
            }
            assert_eq!(remaining, 0, "greedy fill ran out of room below f_{k}");
        }
        let entries: Vec<usize> =
            slots.into_iter().map(|slot| slot.expect("all positions are filled")).collect();
        debug_assert!(self.is_valid(&entries));
        entries
    }

    pub fn is_valid(&self, entries: &[usize]) -> bool {
        self.validate(entries).is_ok()
    }

    /// The three bracket conditions: fixed positions hold their height, every
    /// entry sits between the minimal bracket and the region height, and no
    /// three entries form a 121 pattern. The pattern condition is checked
    /// both directly and through its cutoff reformulation (no entry may
    /// exceed k between an entry k and position f_k), and the two must agree.
    pub fn validate(&self, entries: &[usize]) -> Result<(), BracketError> {
        let expected = self.minimum.len();
        if entries.len() != expected {
            return Err(BracketError::WrongLength { expected, got: entries.len() });
        }
        for (k, &f) in self.fixed.iter().enumerate() {
            if entries[f - 1] != k {
                return Err(BracketError::FixedValue { position: f, expected: k });
            }
        }
        let top = self.region.north_end();
        for (i, (&entry, &low)) in entries.iter().zip(&self.minimum).enumerate() {
            if entry < low {
                return Err(BracketError::BelowMinimum { position: i + 1 });
            }
            if entry > top {
                return Err(BracketError::AboveMaximum { position: i + 1 });
            }
        }
        let pattern = find_121(entries);
        assert_eq!(
            pattern.is_some(),
            self.cutoff_violation(entries),
            "pattern and cutoff conditions must agree on {entries:?}"
        );
        match pattern {
            Some(positions) => Err(BracketError::Pattern121 { positions }),
            None => Ok(()),
        }
    }

    /// The cutoff reformulation of the pattern condition: some entry k is
    /// followed, at or before the last guaranteed position of k, by a larger
    /// entry. Only meaningful once the length and range conditions hold.
    pub fn cutoff_violation(&self, entries: &[usize]) -> bool {
        (0..entries.len()).any(|i| (i + 1..self.fixed[entries[i]]).any(|j| entries[j] > entries[i]))
    }

    /// The unique path with as many points at height k as entries equal to k.
    pub fn path_of(&self, entries: &[usize]) -> Result<LatticePath, BracketError> {
        self.validate(entries)?;
        let mut steps = Vec::with_capacity(entries.len() - 1);
        for k in 0..=self.region.north_end() {
            let count = entries.iter().filter(|&&v| v == k).count();
            steps.extend(std::iter::repeat_n(Step::E, count - 1));
            if k < self.region.north_end() {
                steps.push(Step::N);
            }
        }
        let mu = LatticePath::new(steps);
        debug_assert_eq!(self.of_path(&mu), entries);
        Ok(mu)
    }

    pub fn tree_of(&self, entries: &[usize]) -> Result<NuTree, BracketError> {
        Ok(right_flush(&self.region, &self.path_of(entries)?))
    }

    /// Componentwise minimum, which is the meet of the rotation order.
    pub fn meet(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        assert!(self.is_valid(a) && self.is_valid(b));
        let met: Vec<usize> = a.iter().zip(b).map(|(&x, &y)| x.min(y)).collect();
        assert!(self.is_valid(&met), "componentwise minimum must be a bracket");
        met
    }

    /// The bracket of the reflected tree, over the reversed path.
    pub fn reflect(&self, entries: &[usize]) -> Vec<usize> {
        let tree = self.tree_of(entries).expect("reflect expects a valid bracket");
        let reflected = reflect_tree(&tree);
        Brackets::new(reflected.region()).of_tree(&reflected)
    }

    /// The join of the rotation order: reflect both brackets onto the
    /// reversed path, meet there, reflect back. The componentwise maximum
    /// would be wrong, it need not be a bracket.
    pub fn join(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let reversed = Brackets::new(&Region::new(&self.region.nu().reversed()));
        let met = reversed.meet(&self.reflect(a), &self.reflect(b));
        let joined = reversed.reflect(&met);
        debug_assert!(self.is_valid(&joined));
        joined
    }

    /// Rotate at height x: overwrite the first entry equal to x with the
    /// value right after x's fixed position. This is the bracket image of
    /// right rotation at the only rotatable node of height x.
    pub fn rotate_first(&self, entries: &[usize], x: usize) -> Result<Vec<usize>, RotateError> {
        assert!(self.is_valid(entries));
        if x >= self.region.north_end() {
            return Err(RotateError::TopValue);
        }
        if entries.iter().filter(|&&v| v == x).count() < 2 {
            return Err(RotateError::TooFewOccurrences);
        }
        let first = entries.iter().position(|&v| v == x).expect("occurrences were counted");
        let mut rotated = entries.to_vec();
        rotated[first] = entries[self.fixed[x]];
        debug_assert!(self.is_valid(&rotated));
        Ok(rotated)
    }

    /// Every bracket vector, in lexicographic order. Depth-first over the
    /// box between the minimal bracket and the region height, pruning with
    /// the fixed positions and the cutoff condition.
    pub fn enumerate_valid(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.minimum.len());
        self.extend_bracket(&mut current, &mut out);
        debug_assert!(out.iter().all(|b| self.is_valid(b)));
        out
    }

    fn extend_bracket(&self, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let pos = current.len();
        if pos == self.minimum.len() {
            out.push(current.clone());
            return;
        }
        let here = pos + 1;
        let choices: Vec<usize> = match self.fixed.iter().position(|&f| f == here) {
            Some(k) => vec![k],
            None => (self.minimum[pos]..=self.region.north_end()).collect(),
        };
        for v in choices {
            let blocked = current.iter().any(|&earlier| earlier < v && self.fixed[earlier] >= here);
            if blocked {
                continue;
            }
            current.push(v);
            self.extend_bracket(current, out);
            current.pop();
        }
    }
}

/// First triple of positions (1-indexed, lexicographically smallest) whose
/// entries look like low, high, low with equal outer values.
pub fn find_121(entries: &[usize]) -> Option<(usize, usize, usize)> {
    let len = entries.len();
    for i in 0..len {
        for j in i + 1..len {
            if entries[j] <= entries[i] {
                continue;
            }
            for l in j + 1..len {
                if entries[l] == entries[i] {
                    return Some((i + 1, j + 1, l + 1));
                }
            }
        }
    }
    None
}

/// Compact rendering: single-digit entries concatenate ("001112"), anything
/// larger falls back to comma separation.
pub fn bracket_label(entries: &[usize]) -> String {
    if entries.iter().all(|&e| e <= 9) {
        entries.iter().map(usize::to_string).collect()
    } else {
        let parts: Vec<String> = entries.iter().map(usize::to_string).collect();
        parts.join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{enumerate_nu_trees, maximal_tree, minimal_tree};

    fn path(word: &str) -> LatticePath {
        word.parse().unwrap()
    }

    fn brackets(word: &str) -> Brackets {
        Brackets::new(&Region::new(&path(word)))
    }

    #[test]
    fn fixed_position_examples() {
        assert_eq!(brackets("ENEEN").fixed_positions(), &[2, 5, 6]);
        assert_eq!(brackets("EENNEENNE").fixed_positions(), &[3, 4, 7, 8, 10]);
        assert_eq!(brackets("NNN").fixed_positions(), &[1, 2, 3, 4]);
    }

    #[test]
    fn tree_brackets() {
        let b = brackets("ENEEN");
        let region = b.region().clone();
        assert_eq!(b.of_tree(&minimal_tree(&region)), vec![0, 0, 1, 1, 1, 2]);
        assert_eq!(b.of_tree(&maximal_tree(&region)), vec![2, 0, 2, 2, 1, 2]);
        assert_eq!(b.minimum(), &[0, 0, 1, 1, 1, 2]);
    }

    #[test]
    fn path_brackets() {
        let b9 = brackets("EENNEENNE");
        assert_eq!(b9.of_path(&path("ENNENEENE")), vec![3, 0, 0, 1, 3, 2, 2, 3, 4, 4]);
        let b0 = brackets("ENEEN");
        assert_eq!(b0.of_path(&path("ENENE")), vec![0, 0, 2, 1, 1, 2]);
        assert_eq!(b0.of_path(&path("ENEEN")), b0.minimum());
    }

    #[test]
    fn validity_examples() {
        let b = brackets("ENEEN");
        assert!(b.is_valid(&[0, 0, 2, 1, 1, 2]));
        assert!(b.is_valid(&[1, 0, 1, 1, 1, 2]));
        assert_eq!(
            b.validate(&[0, 0, 1, 2, 1, 2]),
            Err(BracketError::Pattern121 { positions: (3, 4, 5) })
        );
        assert_eq!(
            b.validate(&[0, 0, 1, 1, 1]),
            Err(BracketError::WrongLength { expected: 6, got: 5 })
        );
        assert_eq!(
            b.validate(&[0, 1, 1, 1, 1, 2]),
            Err(BracketError::FixedValue { position: 2, expected: 0 })
        );
        assert_eq!(
            b.validate(&[0, 0, 1, 1, 1, 3]),
            Err(BracketError::FixedValue { position: 6, expected: 2 })
        );
        assert_eq!(
            b.validate(&[0, 0, 1, 0, 1, 2]),
            Err(BracketError::BelowMinimum { position: 4 })
        );
    }

    #[test]
    fn paths_from_brackets() {
        let b = brackets("ENEEN");
        assert_eq!(b.path_of(&[0, 0, 2, 1, 1, 2]).unwrap(), path("ENENE"));
        assert_eq!(b.path_of(&[0, 0, 1, 1, 1, 2]).unwrap(), path("ENEEN"));
        assert_eq!(b.path_of(&[2, 0, 2, 2, 1, 2]).unwrap(), path("NNEEE"));
        assert!(b.path_of(&[0, 0, 1, 2, 1, 2]).is_err());
    }

    #[test]
    fn meet_matches_published_example() {
        let b9 = brackets("EENNEENNE");
        let a = [3, 0, 0, 1, 3, 2, 2, 3, 4, 4];
        let b = [1, 1, 0, 1, 4, 3, 2, 3, 4, 4];
        assert_eq!(b9.meet(&a, &b), vec![1, 0, 0, 1, 3, 2, 2, 3, 4, 4]);
        assert_eq!(b9.meet(&a, &a), a.to_vec());
        assert_eq!(b9.meet(&a, b9.minimum()), b9.minimum().to_vec());
    }

    #[test]
    fn join_goes_through_the_reversed_path() {
        let b9 = brackets("EENNEENNE");
        let a = [3, 0, 0, 1, 3, 2, 2, 3, 4, 4];
        let b = [1, 1, 0, 1, 4, 3, 2, 3, 4, 4];
        let reversed = brackets("NEENNEENN");
        assert_eq!(reversed.fixed_positions(), &[1, 4, 5, 8, 9, 10]);
        let met_reversed = reversed.meet(&b9.reflect(&a), &b9.reflect(&b));
        assert_eq!(met_reversed, vec![0, 2, 1, 1, 2, 4, 3, 3, 4, 5]);
        let joined = b9.join(&a, &b);
        assert_eq!(b9.reflect(&joined), met_reversed);
        assert_eq!(b9.join(&a, &a), a.to_vec());
        let top = b9.of_tree(&maximal_tree(b9.region()));
        assert_eq!(b9.join(&a, &top), top);
    }

    #[test]
    fn rotation_examples() {
        let b = brackets("ENEEN");
        assert_eq!(b.rotate_first(&[0, 0, 1, 1, 1, 2], 0).unwrap(), vec![1, 0, 1, 1, 1, 2]);
        assert_eq!(b.rotate_first(&[0, 0, 1, 1, 1, 2], 1).unwrap(), vec![0, 0, 2, 1, 1, 2]);
        assert_eq!(b.rotate_first(&[2, 0, 2, 2, 1, 2], 2), Err(RotateError::TopValue));
        assert_eq!(b.rotate_first(&[2, 0, 2, 2, 1, 2], 0), Err(RotateError::TooFewOccurrences));
    }

    #[test]
    fn valid_brackets_are_exactly_tree_brackets() {
        for word in ["", "E", "EN", "ENEEN", "NENE", "EENN"] {
            let b = brackets(word);
            let mut from_trees: Vec<Vec<usize>> =
                enumerate_nu_trees(b.region()).iter().map(|t| b.of_tree(t)).collect();
            from_trees.sort();
            assert_eq!(b.enumerate_valid(), from_trees, "over {word:?}");
        }
    }

    #[test]
    fn empty_path_has_one_bracket() {
        let b = brackets("");
        assert_eq!(b.minimum(), &[0]);
        assert_eq!(b.fixed_positions(), &[1]);
        assert_eq!(b.enumerate_valid(), vec![vec![0]]);
        assert_eq!(b.path_of(&[0]).unwrap(), path(""));
    }
}
