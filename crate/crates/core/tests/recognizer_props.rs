mod common;

use std::collections::{BTreeMap, BTreeSet};

use uta::fixtures;
use uta::oracle::{brute_syntactic_partition, BruteUniverse};
use uta::recognizer::tree_order;
use uta::trees::{enumerate_contexts, enumerate_trees};
use uta::{FinitenessVerdict, Partition, Recognizer};

fn fixture_recognizers() -> Vec<(String, Recognizer)> {
    fixtures::bundled().recognizers.into_iter().map(|(n, e)| (n, e.recognizer)).collect()
}

#[test]
fn operations_match_definitions_up_to_size_six() {
    for (name, rec) in fixture_recognizers() {
        let trees = enumerate_trees(rec.table(), 6, 3);
        let comp = rec.complement();
        let twin = rec.with_finals(rec.finals().iter().copied().take(1).collect()).unwrap();
        let (i, u, d) = (rec.intersect(&twin).unwrap(), rec.union(&twin).unwrap(), rec.symmetric_difference(&twin).unwrap());
        for t in &trees {
            let (a, b) = (rec.accepts(t).unwrap(), twin.accepts(t).unwrap());
            assert_eq!(comp.accepts(t).unwrap(), !a, "{name}: {t}");
            assert_eq!(i.accepts(t).unwrap(), a && b, "{name}: {t}");
            assert_eq!(u.accepts(t).unwrap(), a || b, "{name}: {t}");
            assert_eq!(d.accepts(t).unwrap(), a != b, "{name}: {t}");
        }
    }
}

#[test]
fn syntactic_partition_matches_the_oracle_on_fixtures() {
    for (name, rec) in fixture_recognizers() {
        let u = BruteUniverse::new(rec.table(), (5, 3), (5, 3));
        let (_, sa) = rec.syntactic_of().unwrap();
        let labels: Vec<usize> = u.trees.iter().map(|t| sa.eval(t).unwrap()).collect();
        assert_eq!(Partition::from_labels(&labels), brute_syntactic_partition(&rec, &u).unwrap(), "{name}");
    }
}

#[test]
fn membership_is_constant_on_syntactic_classes() {
    for (name, rec) in fixture_recognizers() {
        let trees = enumerate_trees(rec.table(), 4, 3);
        let mut seen = BTreeSet::new();
        for t in &trees {
            let class = rec.theta_class_recognizer(t).unwrap();
            if !seen.insert(class.finals().clone()) {
                continue;
            }
            let inside = rec.accepts(t).unwrap();
            for s in trees.iter().filter(|s| class.accepts(s).unwrap()) {
                assert_eq!(rec.accepts(s).unwrap(), inside, "{name}: {s} and {t}");
            }
        }
    }
}

#[test]
fn quotient_languages_are_bounded_by_the_syntactic_algebra() {
    for (name, rec) in fixture_recognizers() {
        let (sa, _) = rec.syntactic_of().unwrap();
        let mut distinct: Vec<Recognizer> = Vec::new();
        for p in enumerate_contexts(rec.table(), 5, 3) {
            let q = rec.context_quotient(&p).unwrap();
            if !distinct.iter().any(|d| d.finals() == q.finals() || d.equivalent(&q).unwrap()) {
                distinct.push(q);
            }
        }
        assert!(distinct.len() <= 1 << sa.algebra.size(), "{name}");
    }
}

#[test]
fn smallest_members_and_counterexamples_are_minimal() {
    let mut rng = common::rng(11);
    for _ in 0..40 {
        let a = common::random_recognizer(&mut rng);
        let trees = enumerate_trees(a.table(), 5, 3);
        let first = trees.iter().filter(|t| a.accepts(t).unwrap()).min_by(|x, y| tree_order(x, y));
        match (a.smallest_member(), first) {
            (Some(m), Some(f)) => assert_eq!(m.size(), f.size()),
            (None, f) => assert!(a.is_empty() && f.is_none()),
            (Some(m), None) => assert!(m.size() > 5),
        }
        let b = a.with_finals(a.finals().iter().copied().skip(1).collect()).unwrap();
        match a.counterexample(&b).unwrap() {
            None => assert!(trees.iter().all(|t| a.accepts(t).unwrap() == b.accepts(t).unwrap())),
            Some(t) => assert_ne!(a.accepts(&t).unwrap(), b.accepts(&t).unwrap()),
        }
    }
}

#[test]
fn random_finiteness_agrees_with_enumeration() {
    let mut rng = common::rng(12);
    let mut seen: BTreeMap<bool, usize> = BTreeMap::new();
    for _ in 0..60 {
        let rec = common::random_recognizer(&mut rng);
        let bounds = rec.pump_bounds();
        if bounds.height > 3 || bounds.max_arity() > 3 {
            continue;
        }
        let trees = enumerate_trees(rec.table(), 2 * bounds.height.max(bounds.max_arity()), 2 * bounds.max_arity());
        let accepted: BTreeSet<_> = trees.iter().filter(|t| rec.accepts(t).unwrap()).cloned().collect();
        match rec.is_finite().unwrap() {
            FinitenessVerdict::Finite(members) => {
                assert_eq!(members.into_iter().collect::<BTreeSet<_>>(), accepted);
                *seen.entry(true).or_default() += 1;
            }
            FinitenessVerdict::Infinite { witness, .. } => {
                assert!(rec.accepts(&witness).unwrap());
                assert!(accepted.iter().any(|t| t.height() >= bounds.height
                    || t.subtrees().iter().any(|s| s.children().len() >= bounds.arity.get(s.label()).copied().unwrap_or(usize::MAX))));
                *seen.entry(false).or_default() += 1;
            }
        }
    }
    assert!(seen.len() == 2, "both verdicts occur: {seen:?}");
}
