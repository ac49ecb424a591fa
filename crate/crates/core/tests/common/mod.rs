//! Seeded random recognizers, trees and term g-morphisms.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use uta::{sym, MooreMachine, Recognizer, RegularAlgebra, SymbolTable, TermGMorphism, Tree, Valuation};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pick_subset(rng: &mut ChaCha8Rng, pool: &[&'static str]) -> Vec<&'static str> {
    let n = rng.random_range(1..=pool.len());
    let mut v = pool.to_vec();
    v.shuffle(rng);
    v.truncate(n);
    v.sort();
    v
}

pub fn random_machine(rng: &mut ChaCha8Rng, letters: usize, outputs: usize, max_states: usize) -> MooreMachine {
    let states = rng.random_range(1..=max_states);
    let delta = (0..states).map(|_| (0..letters).map(|_| rng.random_range(0..states)).collect()).collect();
    let out = (0..states).map(|_| rng.random_range(0..outputs)).collect();
    MooreMachine::new(letters, outputs, 0, delta, out).expect("complete machine")
}

/// `|A| ≤ 3`, `Σ ⊆ {f, g}`, `X ⊆ {x, y}`, `|Q_f| ≤ 3`, untrimmed.
pub fn random_raw_recognizer(rng: &mut ChaCha8Rng) -> Recognizer {
    let ops = pick_subset(rng, &["f", "g"]);
    let leaves = pick_subset(rng, &["x", "y"]);
    let n = rng.random_range(1..=3);
    let machines = ops.iter().map(|_| random_machine(rng, n, n, 3)).collect();
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let alg = RegularAlgebra::new(names, &ops, machines).expect("valid algebra");
    let valuation: Valuation = leaves.iter().map(|x| (sym(x), rng.random_range(0..n))).collect();
    let finals: BTreeSet<usize> = loop {
        let f: BTreeSet<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
        if n == 1 || (!f.is_empty() && f.len() < n) {
            break f;
        }
    };
    let table = SymbolTable::new(&ops, &leaves).expect("valid table");
    Recognizer::new(table, alg, valuation, finals).expect("valid recognizer")
}

pub fn random_recognizer(rng: &mut ChaCha8Rng) -> Recognizer {
    random_raw_recognizer(rng).trim()
}

/// The 25 recognizers shared by the oracle criteria.
pub fn random_recognizers(seed: u64, count: usize) -> Vec<Recognizer> {
    let mut r = rng(seed);
    (0..count).map(|_| random_recognizer(&mut r)).collect()
}

/// A random tree with at most `max_size` nodes and arity at most `max_arity`.
pub fn random_tree(rng: &mut ChaCha8Rng, table: &SymbolTable, max_size: usize, max_arity: usize) -> Tree {
    let budget = rng.random_range(1..=max_size);
    grow(rng, table, budget, max_arity)
}

fn grow(rng: &mut ChaCha8Rng, table: &SymbolTable, budget: usize, max_arity: usize) -> Tree {
    let leaf_only = budget == 1 && rng.random_bool(0.7);
    if leaf_only || table.operators().is_empty() {
        return Tree::Leaf(table.leaves().choose(rng).expect("leaves").clone());
    }
    let f = table.operators().choose(rng).expect("operators").clone();
    let mut rest = budget - 1;
    let arity = rng.random_range(0..=max_arity.min(rest));
    let mut children = Vec::with_capacity(arity);
    for i in 0..arity {
        let left = arity - i - 1;
        let share = rng.random_range(1..=rest - left);
        children.push(grow(rng, table, share, max_arity));
        rest -= share;
    }
    Tree::Node(f, children)
}

/// A term g-morphism from `Σ ⊆ {f, g}`, `X ⊆ {x, y}` into `Ω ⊆ {h, k}`,
/// `Y ⊆ {z, w}` with leaves sent to trees of at most 4 nodes.
pub fn random_gmorphism(rng: &mut ChaCha8Rng) -> TermGMorphism {
    let source = SymbolTable::new(&pick_subset(rng, &["f", "g"]), &pick_subset(rng, &["x", "y"])).unwrap();
    let target = SymbolTable::new(&pick_subset(rng, &["h", "k"]), &pick_subset(rng, &["z", "w"])).unwrap();
    let iota: BTreeMap<_, _> =
        source.operators().iter().map(|f| (f.clone(), target.operators().choose(rng).unwrap().clone())).collect();
    let alpha: BTreeMap<_, _> =
        source.leaves().iter().map(|x| (x.clone(), random_tree(rng, &target, 4, 2))).collect();
    TermGMorphism::new(source, target, iota, alpha).expect("valid g-morphism")
}
