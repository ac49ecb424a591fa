//! Brute-force oracles: definitional answers computed from membership on
//! enumerated trees and contexts only.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::RegularAlgebra;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::recognizer::Recognizer;
use crate::trees::{abstraction_key, enumerate_contexts, enumerate_trees, Context, KeyKind, SymbolTable, Tree};

/// Enumerated trees and contexts in canonical order.
#[derive(Debug, Clone)]
pub struct BruteUniverse {
    pub trees: Vec<Tree>,
    pub contexts: Vec<Context>,
}

impl BruteUniverse {
    pub fn new(table: &SymbolTable, tree_bounds: (usize, usize), context_bounds: (usize, usize)) -> Self {
        BruteUniverse {
            trees: enumerate_trees(table, tree_bounds.0, tree_bounds.1),
            contexts: enumerate_contexts(table, context_bounds.0, context_bounds.1),
        }
    }
}

/// `s ~ t` iff `p(s) ∈ T ⟺ p(t) ∈ T` for every context of the universe.
pub fn brute_syntactic_partition(rec: &Recognizer, universe: &BruteUniverse) -> Result<Partition> {
    let mut signatures = Vec::with_capacity(universe.trees.len());
    for t in &universe.trees {
        let mut sig = Vec::with_capacity(universe.contexts.len());
        for p in &universe.contexts {
            sig.push(rec.accepts(&p.plug(t))?);
        }
        signatures.push(sig);
    }
    Ok(Partition::from_labels(&signatures))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BruteVerdict {
    Yes,
    /// Key-equal trees, the first accepted and the second not.
    No(Tree, Tree),
}

/// Checks that trees with equal `kind` keys agree on membership.
pub fn brute_variety_check(rec: &Recognizer, kind: KeyKind, universe: &BruteUniverse) -> Result<BruteVerdict> {
    let mut groups: BTreeMap<_, (bool, &Tree)> = BTreeMap::new();
    for t in &universe.trees {
        let member = rec.accepts(t)?;
        let key = abstraction_key(t, kind)?;
        match groups.get(&key) {
            None => {
                groups.insert(key, (member, t));
            }
            Some(&(m, s)) if m != member => {
                let (yes, no) = if m { (s.clone(), t.clone()) } else { (t.clone(), s.clone()) };
                return Ok(BruteVerdict::No(yes, no));
            }
            Some(_) => {}
        }
    }
    Ok(BruteVerdict::Yes)
}

fn subsets(n: usize) -> impl Iterator<Item = BTreeSet<usize>> {
    (1u32..1 << n).map(move |mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}

/// Whether `small ⪯ big`: some subalgebra of `big` maps onto `small` with
/// the identity on operators.
pub fn covers_search(small: &RegularAlgebra, big: &RegularAlgebra, max_size: usize) -> Result<bool> {
    if small.size() > max_size || big.size() > max_size {
        return Err(Error::SizeCap(format!("algebras must have at most {max_size} elements")));
    }
    let ops = big.operators().to_vec();
    let iota = ops.iter().map(|f| (f.clone(), f.clone())).collect();
    if small.operators().iter().collect::<BTreeSet<_>>() != ops.iter().collect::<BTreeSet<_>>() {
        return Ok(false);
    }
    for subset in subsets(big.size()) {
        if subset.len() < small.size() || big.generated_closure(&ops, &subset)? != subset {
            continue;
        }
        let (sub, _) = big.subalgebra(&ops, &subset)?;
        let n = sub.size();
        let m = small.size();
        let mut phi = vec![0usize; n];
        loop {
            let image: BTreeSet<usize> = phi.iter().copied().collect();
            if image.len() == m && sub.is_gmorphism(small, &iota, &phi)? {
                return Ok(true);
            }
            let mut i = 0;
            while i < n && phi[i] + 1 == m {
                phi[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            phi[i] += 1;
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn brute_partitions() {
        let odd = fixtures::parity_odd();
        let u = BruteUniverse::new(odd.table(), (4, 3), (4, 3));
        assert_eq!(brute_syntactic_partition(&odd, &u).unwrap().num_blocks(), 2);
        let all = fixtures::all_trees();
        assert_eq!(brute_syntactic_partition(&all, &u).unwrap().num_blocks(), 1);
        let sx = fixtures::singleton_x();
        let u = BruteUniverse::new(sx.table(), (3, 3), (3, 3));
        assert_eq!(brute_syntactic_partition(&sx, &u).unwrap().num_blocks(), 2);
    }

    #[test]
    fn brute_varieties() {
        let rootf = fixtures::root_f();
        let u = BruteUniverse::new(rootf.table(), (5, 3), (0, 0));
        assert_eq!(brute_variety_check(&rootf, KeyKind::Def(1), &u).unwrap(), BruteVerdict::Yes);
        let odd = fixtures::parity_odd();
        let u = BruteUniverse::new(odd.table(), (6, 3), (0, 0));
        for k in 0..=4 {
            assert!(matches!(brute_variety_check(&odd, KeyKind::Def(k), &u).unwrap(), BruteVerdict::No(..)));
        }
        let all = fixtures::all_trees();
        assert_eq!(brute_variety_check(&all, KeyKind::Pwt(2), &u).unwrap(), BruteVerdict::Yes);
    }

    #[test]
    fn covers() {
        let odd = fixtures::parity_odd();
        let (sa, _) = odd.syntactic_of().unwrap();
        assert!(covers_search(&sa.algebra, &fixtures::parity_algebra(), 5).unwrap());
        let trivial = RegularAlgebra::trivial(sa.algebra.operators());
        assert!(!covers_search(&sa.algebra, &trivial, 5).unwrap());
        assert!(covers_search(&trivial, &sa.algebra, 5).unwrap());
        assert!(matches!(covers_search(&trivial, &fixtures::cyclic_algebra(6), 5), Err(Error::SizeCap(_))));
    }
}
