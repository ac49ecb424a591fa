mod common;

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use uta::syntactic::{is_disjunctive, reduced_syntactic, syntactic_algebra, syntactic_congruence};
use uta::trees::enumerate_trees;
use uta::{sym, MooreMachine, Partition, RegularAlgebra, SymbolTable};

fn words(alphabet: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..alphabet).map(move |a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn random_algebra(seed: u64) -> RegularAlgebra {
    let mut rng = common::rng(seed);
    common::random_raw_recognizer(&mut rng).algebra().clone()
}

fn subsets(n: usize) -> Vec<BTreeSet<usize>> {
    (0u32..1 << n).map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimization_preserves_runs(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let m = common::random_machine(&mut rng, 2, 3, 5);
        let min = m.minimize();
        prop_assert!(min.num_states() <= m.num_states());
        for w in words(2, 8) {
            prop_assert_eq!(min.run_word(&w).unwrap(), m.run_word(&w).unwrap());
        }
        prop_assert!(min.equivalent(&m).unwrap());
        prop_assert_eq!(min.minimize(), min);
    }

    #[test]
    fn transition_monoid_is_closed(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let m = common::random_machine(&mut rng, 2, 2, 4);
        let q = m.num_states();
        let monoid = m.transition_monoid();
        let maps: BTreeSet<Vec<usize>> = monoid.iter().map(|g| g.map.clone()).collect();
        prop_assert!(maps.len() <= q.pow(q as u32));
        prop_assert!(maps.contains(&(0..q).collect::<Vec<_>>()));
        for g in &maps {
            for h in &maps {
                prop_assert!(maps.contains(&(0..q).map(|s| h[g[s]]).collect::<Vec<_>>()));
            }
        }
        for g in &monoid {
            prop_assert_eq!((0..q).map(|s| m.run_from(s, &g.witness)).collect::<Vec<_>>(), g.map.clone());
        }
    }

    #[test]
    fn identity_class_quotient_is_equivalent(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let m = common::random_machine(&mut rng, 3, 3, 4);
        let q = m.class_quotient(&Partition::identity(3), &Partition::identity(3)).unwrap();
        prop_assert!(q.equivalent(&m).unwrap());
    }

    #[test]
    fn product_projects_to_components(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let a = common::random_machine(&mut rng, 2, 2, 3);
        let b = common::random_machine(&mut rng, 3, 2, 3);
        let p = a.product(&b);
        for w1 in words(2, 4) {
            let w2: Vec<usize> = w1.iter().enumerate().map(|(i, &l)| (l + i) % 3).collect();
            let joint: Vec<usize> = w1.iter().zip(&w2).map(|(&x, &y)| x * 3 + y).collect();
            let o = p.run_word(&joint).unwrap();
            prop_assert_eq!(o / 2, a.run_word(&w1).unwrap());
            prop_assert_eq!(o % 2, b.run_word(&w2).unwrap());
        }
    }

    #[test]
    fn syntactic_congruence_laws(seed in any::<u64>()) {
        let alg = random_algebra(seed);
        let n = alg.size();
        let tr = alg.translations();
        for h in subsets(n) {
            let theta = syntactic_congruence(&alg, &h);
            prop_assert!(alg.is_congruence(&theta).unwrap());
            let complement: BTreeSet<usize> = (0..n).filter(|a| !h.contains(a)).collect();
            prop_assert_eq!(&syntactic_congruence(&alg, &complement), &theta);
            for k in subsets(n) {
                let both: BTreeSet<usize> = h.intersection(&k).copied().collect();
                prop_assert!(theta.meet(&syntactic_congruence(&alg, &k)).refines(&syntactic_congruence(&alg, &both)));
            }
            for p in &tr.all {
                let pre: BTreeSet<usize> = (0..n).filter(|&a| h.contains(&p.apply(a))).collect();
                prop_assert!(theta.refines(&syntactic_congruence(&alg, &pre)));
                for a in 0..n {
                    for b in 0..n {
                        if theta.related(a, b) {
                            prop_assert!(theta.related(p.apply(a), p.apply(b)));
                        }
                    }
                }
            }
            let sa = syntactic_algebra(&alg, &h).unwrap();
            let image: BTreeSet<usize> = h.iter().map(|&a| sa.morphism_map[a]).collect();
            prop_assert!(is_disjunctive(&sa.algebra, &image));
        }
    }

    #[test]
    fn surjective_morphisms_pull_back_syntactic_congruences(seed in any::<u64>()) {
        let alg = random_algebra(seed);
        let n = alg.size();
        let iota: BTreeMap<_, _> = alg.operators().iter().map(|f| (f.clone(), f.clone())).collect();
        for k in subsets(n) {
            let theta = syntactic_congruence(&alg, &k);
            let quotient = alg.quotient(&theta).unwrap();
            let phi: Vec<usize> = (0..n).map(|a| theta.block(a)).collect();
            prop_assert!(alg.is_gmorphism(&quotient, &iota, &phi).unwrap());
            for h in subsets(quotient.size()) {
                let image_theta = syntactic_congruence(&quotient, &h);
                let pulled = Partition::from_labels(&phi.iter().map(|&b| image_theta.block(b)).collect::<Vec<_>>());
                let pre: BTreeSet<usize> = (0..n).filter(|&a| h.contains(&phi[a])).collect();
                prop_assert_eq!(pulled, syntactic_congruence(&alg, &pre));
            }
        }
    }

    #[test]
    fn quotients_commute_with_operations(seed in any::<u64>()) {
        let alg = random_algebra(seed);
        let theta = syntactic_congruence(&alg, &[0].into());
        let q = alg.quotient(&theta).unwrap();
        for f in alg.operators() {
            for w in words(alg.size(), 5) {
                let classes: Vec<usize> = w.iter().map(|&a| theta.block(a)).collect();
                prop_assert_eq!(
                    theta.block(alg.apply_symbol(f, &w).unwrap()),
                    q.apply_symbol(f, &classes).unwrap()
                );
            }
        }
        let ops = alg.operators().to_vec();
        let iota: BTreeMap<_, _> = ops.iter().map(|f| (f.clone(), f.clone())).collect();
        let phi: Vec<usize> = (0..alg.size()).map(|a| theta.block(a)).collect();
        let ker = alg.kernel(&iota, &phi).unwrap();
        prop_assert!(alg.is_g_congruence(&ker).unwrap());
    }

    #[test]
    fn m_operator_gives_a_reduced_algebra(seed in any::<u64>()) {
        let alg = random_algebra(seed);
        let res = reduced_syntactic(&alg, &[0].into()).unwrap();
        let sigma = res.sigma.clone().unwrap();
        let reduced = res.reduced.clone().unwrap();
        prop_assert_eq!(reduced.operators().len(), sigma.num_blocks());
        prop_assert_eq!(reduced.size(), res.algebra.size());
        let iota = res.iota().unwrap();
        let phi: Vec<usize> = (0..res.algebra.size()).collect();
        prop_assert!(res.algebra.is_gmorphism(&reduced, &iota, &phi).unwrap());
    }
}

#[test]
fn product_projections_are_gmorphisms() {
    for seed in 0..20 {
        let a = random_algebra(seed);
        let b = random_algebra(seed + 1000);
        let gamma = vec![sym("p")];
        let kappa: BTreeMap<_, _> = [(sym("p"), vec![a.operators()[0].clone(), b.operators()[0].clone()])].into();
        let prod = RegularAlgebra::g_product(&gamma, &kappa, &[&a, &b]).unwrap();
        assert_eq!(prod.size(), a.size() * b.size());
        let first: Vec<usize> = (0..prod.size()).map(|c| c / b.size()).collect();
        let second: Vec<usize> = (0..prod.size()).map(|c| c % b.size()).collect();
        let to_a = [(sym("p"), a.operators()[0].clone())].into();
        let to_b = [(sym("p"), b.operators()[0].clone())].into();
        assert!(prod.is_gmorphism(&a, &to_a, &first).unwrap());
        assert!(prod.is_gmorphism(&b, &to_b, &second).unwrap());
    }
}

#[test]
fn free_extension_is_a_gmorphism() {
    let source = SymbolTable::new(&["h", "k"], &["x"]).unwrap();
    for seed in 0..20 {
        let alg = random_algebra(seed);
        let ops = alg.operators();
        let iota: BTreeMap<_, _> = [(sym("h"), ops[0].clone()), (sym("k"), ops[ops.len() - 1].clone())].into();
        let valuation = [(sym("x"), alg.size() - 1)].into_iter().collect();
        for t in enumerate_trees(&source, 5, 3) {
            let value = alg.eval_g(&iota, &valuation, &t).unwrap();
            if let uta::Tree::Node(f, children) = &t {
                let word: Vec<usize> =
                    children.iter().map(|c| alg.eval_g(&iota, &valuation, c).unwrap()).collect();
                assert_eq!(value, alg.apply_symbol(&iota[f], &word).unwrap());
            }
        }
    }
}

#[test]
fn derived_algebra_relabels_operators() {
    let alg = uta::fixtures::root_algebra();
    let iota: BTreeMap<_, _> = [(sym("a"), sym("g")), (sym("b"), sym("f")), (sym("c"), sym("f"))].into();
    let derived = RegularAlgebra::derived(&[sym("a"), sym("b"), sym("c")], &iota, &alg).unwrap();
    assert_eq!(derived.apply_symbol("a", &[1]).unwrap(), 0);
    assert_eq!(derived.apply_symbol("c", &[]).unwrap(), 1);
    let m: &MooreMachine = derived.machine("b").unwrap();
    assert!(m.equivalent(alg.machine("f").unwrap()).unwrap());
}
