//! Cross-module consistency checks, swept over every path up to a length
//! bound. Each check hunts for a counterexample to one of the structural
//! results the library rests on and reports the first one found as text.
//! The command line `check` subcommand and the test suite both run these,
//! so a regression shows up identically in either place.
//!
//! The meet rule is injectable so the harness can prove to itself that a
//! corrupted lattice operation is actually caught (see the tests).

use std::collections::{BTreeMap, BTreeSet};

use crate::bracket::{Brackets, bracket_label, find_121};
use crate::eg::{
    eg_pair, eg_path, lambda_from_complement, lambda_from_tree_rows, lambda_of_path,
    region_partition,
};
use crate::flush::{duality_map, left_flush, right_flush};
use crate::multi::{enumerate_k_trees, irrelevant_nodes, is_face};
use crate::path::{LatticePath, Point, Region, Step, nu_tamari_poset};
use crate::pipedream::{
    facet_label, increasing_flip_poset, is_reduced, pi_nu, pipedream_of_tree, q_position, q_word,
    subword_facets, trace_permutation,
};
use crate::poset::FinitePoset;
use crate::tree::{enumerate_nu_trees, right_rotation_covers, rotation_poset};

/// Result of one tagged check over a sweep.
pub struct CheckOutcome {
    pub tag: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Meet implementation under test; `run_checks` passes `Brackets::meet`.
pub type MeetRule<'a> = &'a dyn Fn(&Brackets, &[usize], &[usize]) -> Vec<usize>;

/// Every path of length at most `max_len`, shortest first, E before N.
pub fn all_paths(max_len: usize) -> Vec<LatticePath> {
    assert!(max_len < usize::BITS as usize);
    let mut paths = Vec::new();
    for len in 0..=max_len {
        for mask in 0..1usize << len {
            let steps = (0..len)
                .map(|i| if mask >> (len - 1 - i) & 1 == 1 { Step::N } else { Step::E })
                .collect();
            paths.push(LatticePath::new(steps));
        }
    }
    paths
}

/// The rotation order of every path bound above by nu is a lattice.
pub fn check_lattice(nu: &LatticePath) -> Result<(), String> {
    if nu_tamari_poset(nu).is_lattice() {
        Ok(())
    } else {
        Err(format!("some pair over {nu:?} lacks a meet or a join"))
    }
}

/// The poset of bracket vectors under entrywise comparison, labeled by
/// [`bracket_label`].
pub fn componentwise_poset(vectors: &[Vec<usize>]) -> FinitePoset {
    FinitePoset::from_order(vectors.iter().map(|v| bracket_label(v)).collect(), |a, b| {
        vectors[a].iter().zip(&vectors[b]).all(|(x, y)| x <= y)
    })
}

/// The four guises agree: paths under rotation, trees under right rotation,
/// bracket vectors under componentwise order, and subword complex facets
/// under increasing flips are isomorphic via the documented maps.
pub fn check_guises(nu: &LatticePath) -> Result<(), String> {
    let region = Region::new(nu);
    let paths = nu_tamari_poset(nu);
    let trees = rotation_poset(&region);

    let path_to_tree: BTreeMap<String, String> = paths
        .labels()
        .iter()
        .map(|word| {
            let mu: LatticePath = word.parse().expect("poset labels are path words");
            (word.clone(), right_flush(&region, &mu).to_string())
        })
        .collect();
    if !paths.isomorphic_via(&trees, &path_to_tree) {
        return Err(format!("path and tree orders disagree over {nu:?}"));
    }

    let brackets = Brackets::new(&region);
    let vectors = brackets.enumerate_valid();
    let bracket_poset = componentwise_poset(&vectors);
    let tree_to_bracket: BTreeMap<String, String> = enumerate_nu_trees(&region)
        .iter()
        .map(|tree| (tree.to_string(), bracket_label(&brackets.of_tree(tree))))
        .collect();
    if !trees.isomorphic_via(&bracket_poset, &tree_to_bracket) {
        return Err(format!("tree and bracket orders disagree over {nu:?}"));
    }

    let flips = increasing_flip_poset(&q_word(&region), &pi_nu(&region));
    let tree_to_facet: BTreeMap<String, String> = enumerate_nu_trees(&region)
        .iter()
        .map(|tree| {
            let facet: BTreeSet<usize> =
                tree.nodes().iter().map(|&p| q_position(&region, p)).collect();
            (tree.to_string(), facet_label(&facet))
        })
        .collect();
    if !trees.isomorphic_via(&flips, &tree_to_facet) {
        return Err(format!("tree and facet orders disagree over {nu:?}"));
    }
    Ok(())
}

/// The componentwise-minimum rule computes the same meet the Hasse diagram
/// does, for every pair of bracket vectors.
pub fn check_meet(nu: &LatticePath, rule: MeetRule) -> Result<(), String> {
    let brackets = Brackets::new(&Region::new(nu));
    let vectors = brackets.enumerate_valid();
    let poset = componentwise_poset(&vectors);
    for i in 0..vectors.len() {
        for j in i..vectors.len() {
            let by_rule = rule(&brackets, &vectors[i], &vectors[j]);
            let by_search = match poset.meet(i, j) {
                Ok(low) => &vectors[low],
                Err(_) => return Err(format!("no meet in the Hasse diagram over {nu:?}")),
            };
            if by_rule != *by_search {
                return Err(format!(
                    "meet of {:?} and {:?} over {nu:?}: rule gives {by_rule:?}, order gives {by_search:?}",
                    vectors[i], vectors[j]
                ));
            }
        }
    }
    Ok(())
}

/// The reflection rule computes the same join the Hasse diagram does.
pub fn check_join(nu: &LatticePath) -> Result<(), String> {
    let brackets = Brackets::new(&Region::new(nu));
    let vectors = brackets.enumerate_valid();
    let poset = componentwise_poset(&vectors);
    for i in 0..vectors.len() {
        for j in i..vectors.len() {
            let by_rule = brackets.join(&vectors[i], &vectors[j]);
            let by_search = match poset.join(i, j) {
                Ok(high) => &vectors[high],
                Err(_) => return Err(format!("no join in the Hasse diagram over {nu:?}")),
            };
            if by_rule != *by_search {
                return Err(format!(
                    "join of {:?} and {:?} over {nu:?}: rule gives {by_rule:?}, order gives {by_search:?}",
                    vectors[i], vectors[j]
                ));
            }
        }
    }
    Ok(())
}

/// Reversing the defining path turns the lattice upside down, with the
/// flush-reflect-flush composite as the witness.
pub fn check_duality(nu: &LatticePath) -> Result<(), String> {
    let region = Region::new(nu);
    let here = nu_tamari_poset(nu);
    let there = nu_tamari_poset(&nu.reversed()).dual();
    let map: BTreeMap<String, String> = here
        .labels()
        .iter()
        .map(|word| {
            let mu: LatticePath = word.parse().expect("poset labels are path words");
            (word.clone(), duality_map(&region, &mu).to_string())
        })
        .collect();
    if here.isomorphic_via(&there, &map) {
        Ok(())
    } else {
        Err(format!("reversal does not dualize the order over {nu:?}"))
    }
}

/// Every vector within the elementwise bounds, fixed positions pinned.
/// `None` when the box holds more than `cap` vectors.
fn bounded_candidate_box(brackets: &Brackets, cap: usize) -> Option<Vec<Vec<usize>>> {
    let minimum = brackets.minimum();
    let top = brackets.region().north_end();
    let pinned: BTreeSet<usize> = brackets.fixed_positions().iter().copied().collect();
    let mut size = 1usize;
    for (i, &low) in minimum.iter().enumerate() {
        let width = if pinned.contains(&(i + 1)) { 1 } else { top - low + 1 };
        size = size.saturating_mul(width);
        if size > cap {
            return None;
        }
    }
    let mut out = Vec::with_capacity(size);
    let mut current = minimum.to_vec();
    loop {
        out.push(current.clone());
        let mut i = minimum.len();
        loop {
            if i == 0 {
                return Some(out);
            }
            i -= 1;
            if pinned.contains(&(i + 1)) {
                continue;
            }
            if current[i] < top {
                current[i] += 1;
                break;
            }
            current[i] = minimum[i];
        }
    }
}

/// When the full box is too large, probe around the valid vectors instead:
/// every single-entry change of a valid vector, within bounds.
fn bumped_candidates(brackets: &Brackets, valid: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let minimum = brackets.minimum();
    let top = brackets.region().north_end();
    let pinned: BTreeSet<usize> = brackets.fixed_positions().iter().copied().collect();
    let mut out = BTreeSet::new();
    for vector in valid {
        out.insert(vector.clone());
        for i in 0..vector.len() {
            if pinned.contains(&(i + 1)) {
                continue;
            }
            for value in minimum[i]..=top {
                let mut bumped = vector.clone();
                bumped[i] = value;
                out.insert(bumped);
            }
        }
    }
    out.into_iter().collect()
}

/// Valid vectors are exactly the tree vectors, and on every in-bounds
/// candidate the pattern condition agrees with its cutoff reformulation.
pub fn check_bracket_characterization(nu: &LatticePath) -> Result<(), String> {
    let region = Region::new(nu);
    let brackets = Brackets::new(&region);
    let valid = brackets.enumerate_valid();
    let mut from_trees: Vec<Vec<usize>> =
        enumerate_nu_trees(&region).iter().map(|tree| brackets.of_tree(tree)).collect();
    from_trees.sort();
    if valid != from_trees {
        return Err(format!("valid vectors and tree vectors disagree over {nu:?}"));
    }
    let valid_set: BTreeSet<&Vec<usize>> = valid.iter().collect();
    let candidates = bounded_candidate_box(&brackets, 50_000)
        .unwrap_or_else(|| bumped_candidates(&brackets, &valid));
    for candidate in &candidates {
        let has_pattern = find_121(candidate).is_some();
        if has_pattern != brackets.cutoff_violation(candidate) {
            return Err(format!(
                "pattern and cutoff conditions disagree on {candidate:?} over {nu:?}"
            ));
        }
        if valid_set.contains(candidate) == has_pattern {
            return Err(format!("the pattern condition misclassifies {candidate:?} over {nu:?}"));
        }
    }
    Ok(())
}

/// Replacing the first appearance of x by the entry at its cutoff position
/// steps through exactly the cover relations of the tree order.
pub fn check_rotation_rule(nu: &LatticePath) -> Result<(), String> {
    let region = Region::new(nu);
    let brackets = Brackets::new(&region);
    let mut from_trees = BTreeSet::new();
    for tree in enumerate_nu_trees(&region) {
        let low = brackets.of_tree(&tree);
        for rotation in right_rotation_covers(&tree) {
            from_trees.insert((low.clone(), brackets.of_tree(&rotation.result)));
        }
    }
    let mut from_vectors = BTreeSet::new();
    for vector in brackets.enumerate_valid() {
        for x in 0..region.north_end() {
            if let Ok(next) = brackets.rotate_first(&vector, x) {
                from_vectors.insert((vector.clone(), next));
            }
        }
    }
    if from_trees == from_vectors {
        Ok(())
    } else {
        Err(format!("vector rotations and tree rotations disagree over {nu:?}"))
    }
}

/// Every tree's pipe dream is reduced and traces the same permutation, and
/// the subword complex facets are exactly the trees' position sets.
pub fn check_dreams(nu: &LatticePath) -> Result<(), String> {
    let region = Region::new(nu);
    let pi = pi_nu(&region);
    let word = q_word(&region);
    let mut position_sets: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for tree in enumerate_nu_trees(&region) {
        let dream = pipedream_of_tree(&tree);
        if trace_permutation(&dream) != pi {
            return Err(format!("tree {tree} over {nu:?} traces a different permutation"));
        }
        if !is_reduced(&dream) {
            return Err(format!("tree {tree} over {nu:?} has a non-reduced dream"));
        }
        position_sets.insert(tree.nodes().iter().map(|&p| q_position(&region, p)).collect());
    }
    let facets: BTreeSet<BTreeSet<usize>> = subword_facets(&word, &pi).into_iter().collect();
    if facets == position_sets {
        Ok(())
    } else {
        Err(format!("subword facets and tree position sets disagree over {nu:?}"))
    }
}

/// The increasing-flip order on facets is the rotation order on paths.
pub fn check_flip_order(nu: &LatticePath) -> Result<(), String> {
    let region = Region::new(nu);
    let paths = nu_tamari_poset(nu);
    let flips = increasing_flip_poset(&q_word(&region), &pi_nu(&region));
    let map: BTreeMap<String, String> = paths
        .labels()
        .iter()
        .map(|word| {
            let mu: LatticePath = word.parse().expect("poset labels are path words");
            let facet: BTreeSet<usize> =
                right_flush(&region, &mu).nodes().iter().map(|&p| q_position(&region, p)).collect();
            (word.clone(), facet_label(&facet))
        })
        .collect();
    if paths.isomorphic_via(&flips, &map) {
        Ok(())
    } else {
        Err(format!("flip order and rotation order disagree over {nu:?}"))
    }
}

/// Column insertion recovers the left flush, the row counts above the
/// recorded path match both independent formulas, recording rows stay
/// within their two allowed letters, and both tableaux fill the region's
/// row partition.
pub fn check_insertion(nu: &LatticePath) -> Result<(), String> {
    let region = Region::new(nu);
    let partition = region_partition(&region);
    for tree in enumerate_nu_trees(&region) {
        let recorded = eg_path(&tree);
        if recorded != left_flush(&tree) {
            return Err(format!("insertion path of {tree} over {nu:?} is not its left flush"));
        }
        let lambda = lambda_of_path(&region, &recorded);
        if lambda != lambda_from_complement(&tree) || lambda != lambda_from_tree_rows(&tree) {
            return Err(format!("row counts above {tree} over {nu:?} disagree"));
        }
        let (insertion, recording) = eg_pair(&tree);
        for (r, row) in recording.rows().iter().enumerate() {
            let k = r + 1;
            if !row.iter().all(|&e| e == k || e == k + 1) {
                return Err(format!("recording row {k} of {tree} over {nu:?} strays"));
            }
        }
        if insertion.shape() != partition || recording.shape() != partition {
            return Err(format!("tableau shapes of {tree} over {nu:?} miss the region"));
        }
    }
    Ok(())
}

/// Facets of the higher complex are maximal faces, their intersection is
/// the irrelevant point set, and at k = 1 they are exactly the trees.
pub fn check_multi(nu: &LatticePath, k: usize) -> Result<(), String> {
    let region = Region::new(nu);
    let facets = enumerate_k_trees(&region, k);
    if facets.is_empty() {
        return Err(format!("no facets at k = {k} over {nu:?}"));
    }
    if k == 1 {
        let trees: BTreeSet<BTreeSet<Point>> =
            enumerate_nu_trees(&region).iter().map(|tree| tree.node_set()).collect();
        if facets.iter().cloned().collect::<BTreeSet<_>>() != trees {
            return Err(format!("facets at k = 1 are not the trees over {nu:?}"));
        }
    }
    let mut intersection = facets[0].clone();
    for facet in &facets {
        if !is_face(&region, k, facet) {
            return Err(format!("a facet at k = {k} over {nu:?} is not a face"));
        }
        for p in region.points() {
            if facet.contains(&p) {
                continue;
            }
            let mut extended = facet.clone();
            extended.insert(p);
            if is_face(&region, k, &extended) {
                return Err(format!("a facet at k = {k} over {nu:?} is not maximal"));
            }
        }
        intersection = intersection.intersection(facet).copied().collect();
    }
    if intersection != irrelevant_nodes(&region, k) {
        return Err(format!(
            "facet intersection and irrelevant points disagree at k = {k} over {nu:?}"
        ));
    }
    Ok(())
}

pub fn run_checks(max_len: usize, k_max: usize) -> Vec<CheckOutcome> {
    run_checks_with_meet(max_len, k_max, &|brackets, a, b| brackets.meet(a, b))
}

/// The full battery with a substituted meet rule. Checks stop at the first
/// counterexample; a passing outcome reports the sweep size instead.
pub fn run_checks_with_meet(max_len: usize, k_max: usize, meet: MeetRule) -> Vec<CheckOutcome> {
    let paths = all_paths(max_len);
    let mut outcomes = Vec::new();
    let mut run = |tag: &'static str, body: &dyn Fn(&LatticePath) -> Result<(), String>| {
        let failed = paths.iter().find_map(|nu| body(nu).err());
        outcomes.push(match failed {
            Some(detail) => CheckOutcome { tag, passed: false, detail },
            None => CheckOutcome { tag, passed: true, detail: format!("{} paths", paths.len()) },
        });
    };
    run("Thm-lattice", &check_lattice);
    run("Thm-guises", &check_guises);
    run("Prop-meet", &|nu| check_meet(nu, meet));
    run("Prop-join", &check_join);
    run("Cor-duality", &check_duality);
    run("Prop-brackets", &check_bracket_characterization);
    run("Lemma-rotation", &check_rotation_rule);
    run("Prop-dreams", &check_dreams);
    run("Thm-flips", &check_flip_order);
    run("Prop-EG", &check_insertion);
    run("Prop-multi", &|nu| (1..=k_max).try_for_each(|k| check_multi(nu, k)));
    outcomes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_sweep_is_complete_and_ordered() {
        let paths = all_paths(3);
        assert_eq!(paths.len(), 15);
        assert!(paths[0].is_empty());
        assert_eq!(paths[1].to_string(), "E");
        assert_eq!(paths[2].to_string(), "N");
        assert_eq!(paths[14].to_string(), "NNN");
    }

    #[test]
    fn full_battery_passes_on_a_small_sweep() {
        for outcome in run_checks(4, 2) {
            assert!(outcome.passed, "{}: {}", outcome.tag, outcome.detail);
        }
    }

    #[test]
    fn corrupted_meet_is_caught_by_its_tag_alone() {
        let wrong: MeetRule = &|_, a, b| a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect();
        let outcomes = run_checks_with_meet(4, 1, wrong);
        for outcome in outcomes {
            if outcome.tag == "Prop-meet" {
                assert!(!outcome.passed, "the corrupted meet slipped through");
            } else {
                assert!(outcome.passed, "{}: {}", outcome.tag, outcome.detail);
            }
        }
    }
}
