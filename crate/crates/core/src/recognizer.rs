//! Tree languages `T = Fφ^{-1}` given by a regular algebra, a leaf
//! valuation and a set of final elements.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{RegularAlgebra, Valuation};
use crate::error::{Error, Result};
use crate::horizon::MooreMachine;
use crate::syntactic::{syntactic_algebra, SyntacticResult};
use crate::trees::{enumeration_order, Context, Sym, SymbolTable, TermGMorphism, Tree};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recognizer {
    table: SymbolTable,
    algebra: RegularAlgebra,
    valuation: Valuation,
    finals: BTreeSet<usize>,
}

/// Where a bound-violating tree can be pumped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PumpSite {
    /// A root-to-leaf path of at least `bound + 1` nodes repeats a value.
    Vertical { height: usize, bound: usize },
    /// A node labelled `op` has `arity ≥ bound` children, so its
    /// horizontal machine repeats a state.
    Horizontal { op: Sym, arity: usize, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FinitenessVerdict {
    Finite(Vec<Tree>),
    Infinite { witness: Tree, site: PumpSite },
}

impl FinitenessVerdict {
    pub fn is_finite(&self) -> bool {
        matches!(self, FinitenessVerdict::Finite(_))
    }
}

/// Order used for listing trees: size first, then leaves before
/// operator-rooted trees, then rendering.
pub fn tree_order(a: &Tree, b: &Tree) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| enumeration_order(a, b))
}

/// Finiteness bounds of a trimmed recognizer: `|V|` and `W_f = |Q_f|` of
/// the minimal machine of every operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PumpBounds {
    pub height: usize,
    pub arity: BTreeMap<Sym, usize>,
}

impl PumpBounds {
    pub fn max_arity(&self) -> usize {
        self.arity.values().copied().max().unwrap_or(0)
    }
}

impl Recognizer {
    pub fn new(
        table: SymbolTable,
        algebra: RegularAlgebra,
        valuation: Valuation,
        finals: BTreeSet<usize>,
    ) -> Result<Recognizer> {
        let ops: BTreeSet<&Sym> = algebra.operators().iter().collect();
        let want: BTreeSet<&Sym> = table.operators().iter().collect();
        if ops != want {
            return Err(Error::InvalidParameter(
                "the algebra's operators must be exactly the table's operators".into(),
            ));
        }
        for x in table.leaves() {
            match valuation.get(x) {
                None => return Err(Error::UnvaluedLeaf(x.to_string())),
                Some(&a) if a >= algebra.size() => return Err(Error::ElementOutOfRange(a)),
                Some(_) => {}
            }
        }
        if let Some(x) = valuation.keys().find(|x| !table.is_leaf(x)) {
            return Err(Error::UnknownSymbol(x.to_string()));
        }
        if let Some(&a) = finals.iter().find(|&&a| a >= algebra.size()) {
            return Err(Error::ElementOutOfRange(a));
        }
        Ok(Recognizer { table, algebra, valuation, finals })
    }

    pub fn table(&self) -> &SymbolTable {
        &self.table
    }

    pub fn algebra(&self) -> &RegularAlgebra {
        &self.algebra
    }

    pub fn valuation(&self) -> &Valuation {
        &self.valuation
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    pub fn with_finals(&self, finals: BTreeSet<usize>) -> Result<Recognizer> {
        Recognizer::new(self.table.clone(), self.algebra.clone(), self.valuation.clone(), finals)
    }

    /// `tφ`.
    pub fn eval(&self, t: &Tree) -> Result<usize> {
        self.table.check_tree(t)?;
        self.algebra.eval_term(&self.valuation, t)
    }

    pub fn accepts(&self, t: &Tree) -> Result<bool> {
        Ok(self.finals.contains(&self.eval(t)?))
    }

    /// The values of all trees: `⟨α(X)⟩_Σ`.
    pub fn reachable_values(&self) -> BTreeSet<usize> {
        let seed = self.valuation.values().copied().collect();
        self.algebra
            .generated_closure(self.table.operators(), &seed)
            .expect("operators and valuation were validated")
    }

    /// Restricts the carrier to the reachable values, in increasing order.
    pub fn trim(&self) -> Recognizer {
        let closed = self.reachable_values();
        let (algebra, embed) = self
            .algebra
            .subalgebra(self.table.operators(), &closed)
            .expect("the reachable values are closed");
        let mut index = vec![usize::MAX; self.algebra.size()];
        for (i, &a) in embed.iter().enumerate() {
            index[a] = i;
        }
        let valuation = self.valuation.iter().map(|(x, &a)| (x.clone(), index[a])).collect();
        let finals = self.finals.iter().filter(|&&a| index[a] != usize::MAX).map(|&a| index[a]).collect();
        Recognizer { table: self.table.clone(), algebra, valuation, finals }
    }

    pub fn complement(&self) -> Recognizer {
        let finals = (0..self.algebra.size()).filter(|a| !self.finals.contains(a)).collect();
        Recognizer { finals, ..self.clone() }
    }

    fn paired(&self, other: &Recognizer, keep: impl Fn(bool, bool) -> bool) -> Result<Recognizer> {
        if self.table != other.table {
            return Err(Error::TableMismatch);
        }
        let algebra = self.algebra.direct_product(&other.algebra)?;
        let n2 = other.algebra.size();
        let valuation =
            self.valuation.iter().map(|(x, &a)| (x.clone(), a * n2 + other.valuation[x])).collect();
        let finals = (0..algebra.size())
            .filter(|&c| keep(self.finals.contains(&(c / n2)), other.finals.contains(&(c % n2))))
            .collect();
        Recognizer::new(self.table.clone(), algebra, valuation, finals)
    }

    pub fn intersect(&self, other: &Recognizer) -> Result<Recognizer> {
        self.paired(other, |a, b| a && b)
    }

    pub fn union(&self, other: &Recognizer) -> Result<Recognizer> {
        self.paired(other, |a, b| a || b)
    }

    /// Recognizes `T ∖ U ∪ U ∖ T`.
    pub fn symmetric_difference(&self, other: &Recognizer) -> Result<Recognizer> {
        self.paired(other, |a, b| a != b)
    }

    /// `p^{-1}(T) = {t : p(t) ∈ T}`.
    pub fn context_quotient(&self, p: &Context) -> Result<Recognizer> {
        self.table.check_context(p)?;
        let mut finals = BTreeSet::new();
        for a in 0..self.algebra.size() {
            if self.finals.contains(&self.algebra.eval_context(&self.valuation, p, a)?) {
                finals.insert(a);
            }
        }
        Ok(Recognizer { finals, ..self.clone() })
    }

    /// `Tφ^{-1}` for a term g-morphism `φ` into this recognizer's table.
    pub fn inverse_gmorphism_image(&self, m: &TermGMorphism) -> Result<Recognizer> {
        if m.target() != &self.table {
            return Err(Error::TableMismatch);
        }
        let algebra = RegularAlgebra::derived(m.source().operators(), m.iota(), &self.algebra)?;
        let valuation = m
            .alpha()
            .iter()
            .map(|(x, t)| Ok((x.clone(), self.algebra.eval_term(&self.valuation, t)?)))
            .collect::<Result<Valuation>>()?;
        Recognizer::new(m.source().clone(), algebra, valuation, self.finals.clone())
    }

    /// `SA(T)` of the trimmed recognizer, and the recognizer of `T` over it.
    pub fn syntactic_of(&self) -> Result<(SyntacticResult, Recognizer)> {
        let trimmed = self.trim();
        let result = syntactic_algebra(&trimmed.algebra, &trimmed.finals)?;
        let class = |a: usize| result.morphism_map[a];
        let valuation = trimmed.valuation.iter().map(|(x, &a)| (x.clone(), class(a))).collect();
        let finals = trimmed.finals.iter().map(|&a| class(a)).collect();
        let rec = Recognizer::new(self.table.clone(), result.algebra.clone(), valuation, finals)?;
        Ok((result, rec))
    }

    /// Recognizer over `SA(T)` of the `θ_T`-class of `t`.
    pub fn theta_class_recognizer(&self, t: &Tree) -> Result<Recognizer> {
        let (_, sa) = self.syntactic_of()?;
        let class = sa.eval(t)?;
        sa.with_finals([class].into())
    }

    pub fn is_empty(&self) -> bool {
        self.reachable_values().is_disjoint(&self.finals)
    }

    /// A smallest tree of every reachable value; among equally small
    /// candidates the one with least children list is kept.
    pub fn smallest_trees(&self) -> BTreeMap<usize, Tree> {
        let mut best: BTreeMap<usize, Tree> = BTreeMap::new();
        let better = |cand: &Tree, old: Option<&Tree>| match old {
            None => true,
            Some(o) => tree_order(cand, o) == Ordering::Less,
        };
        for x in self.table.leaves() {
            let a = self.valuation[x];
            let t = Tree::Leaf(x.clone());
            if better(&t, best.get(&a)) {
                best.insert(a, t);
            }
        }
        loop {
            let mut changed = false;
            for f in self.table.operators() {
                let m = self.algebra.machine(f).expect("validated");
                for (q, children) in cheapest_words(m, &best) {
                    let t = Tree::Node(f.clone(), children);
                    let a = m.output(q);
                    if better(&t, best.get(&a)) {
                        best.insert(a, t);
                        changed = true;
                    }
                }
            }
            if !changed {
                return best;
            }
        }
    }

    /// A smallest tree in `T`, if any.
    pub fn smallest_member(&self) -> Option<Tree> {
        self.smallest_trees()
            .into_iter()
            .filter(|(a, _)| self.finals.contains(a))
            .map(|(_, t)| t)
            .min_by(tree_order)
    }

    /// A smallest tree on which the recognizers disagree, or `None` if
    /// they recognize the same language.
    pub fn counterexample(&self, other: &Recognizer) -> Result<Option<Tree>> {
        Ok(self.symmetric_difference(other)?.smallest_member())
    }

    pub fn equivalent(&self, other: &Recognizer) -> Result<bool> {
        Ok(self.counterexample(other)?.is_none())
    }

    /// `H = |V|` for the reachable carrier `V` and `W_f` the state count of
    /// the minimal machine of `f` over `V`.
    pub fn pump_bounds(&self) -> PumpBounds {
        let trimmed = self.trim();
        let arity = trimmed
            .table
            .operators()
            .iter()
            .map(|f| (f.clone(), trimmed.algebra.machine(f).expect("validated").minimize().num_states()))
            .collect();
        PumpBounds { height: trimmed.algebra.size(), arity }
    }

    /// Decides whether `T` is finite. Infinite languages come with an
    /// accepted tree exceeding a pumping bound; finite ones are listed in
    /// [`tree_order`].
    pub fn is_finite(&self) -> Result<FinitenessVerdict> {
        let trimmed = self.trim();
        let bounds = trimmed.pump_bounds();
        let probe = violation_recognizer(&trimmed.table, &bounds)?;
        let product = trimmed.paired(&probe, |_, _| false)?;
        let n2 = probe.algebra.size();
        let witnesses = product.smallest_trees();
        // A value has infinitely many trees iff some tree of it is flagged.
        let mut infinite = vec![false; trimmed.algebra.size()];
        for &c in witnesses.keys() {
            if probe.finals.contains(&(c % n2)) {
                infinite[c / n2] = true;
            }
        }
        let accepted_violation = witnesses
            .iter()
            .filter(|(&c, _)| trimmed.finals.contains(&(c / n2)) && probe.finals.contains(&(c % n2)))
            .map(|(_, t)| t)
            .min_by(|a, b| tree_order(a, b));
        if let Some(t) = accepted_violation {
            return Ok(FinitenessVerdict::Infinite { witness: t.clone(), site: pump_site(t, &bounds) });
        }
        let members = finite_members(&trimmed, &infinite, &bounds)?;
        Ok(FinitenessVerdict::Finite(members))
    }
}

/// For every state reachable in `m`, a children list of least total size
/// over the trees in `best`, found by relaxation from the start state.
fn cheapest_words(m: &MooreMachine, best: &BTreeMap<usize, Tree>) -> Vec<(usize, Vec<Tree>)> {
    let n = m.num_states();
    let mut cost: Vec<Option<(usize, Vec<Tree>)>> = vec![None; n];
    cost[m.start()] = Some((0, Vec::new()));
    let letters: Vec<(usize, &Tree)> = best.iter().map(|(&a, t)| (a, t)).collect();
    loop {
        let mut changed = false;
        for q in 0..n {
            let Some((c, word)) = cost[q].clone() else { continue };
            for &(a, t) in &letters {
                let r = m.step(q, a);
                let nc = c + t.size();
                let improves = match &cost[r] {
                    None => true,
                    Some((oc, ow)) => nc < *oc || (nc == *oc && children_lt(&word, t, ow)),
                };
                if improves {
                    let mut w = word.clone();
                    w.push(t.clone());
                    cost[r] = Some((nc, w));
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    cost.into_iter().enumerate().filter_map(|(q, c)| c.map(|(_, w)| (q, w))).collect()
}

fn children_lt(prefix: &[Tree], last: &Tree, old: &[Tree]) -> bool {
    let new = prefix.iter().chain(std::iter::once(last));
    let mut old_it = old.iter();
    for a in new {
        match old_it.next() {
            None => return false,
            Some(b) => match tree_order(a, b) {
                Ordering::Less => return true,
                Ordering::Greater => return false,
                Ordering::Equal => {}
            },
        }
    }
    old_it.next().is_some()
}

/// Recognizer of trees of height `≥ H` or with an `f`-node of arity
/// `≥ W_f`. Elements are pairs `(min(height, H), flag)` encoded
/// `h * 2 + flag`; machine states track the capped maximal child height
/// (0 for no children), the capped child count and the flag.
fn violation_recognizer(table: &SymbolTable, bounds: &PumpBounds) -> Result<Recognizer> {
    let h = bounds.height;
    let n = 2 * (h + 1);
    let mut machines = Vec::new();
    for f in table.operators() {
        let w = bounds.arity[f];
        // state (m, c, fl) with m ∈ 0..=h+1, c ∈ 0..=w, fl ∈ 0..2
        let enc = |m: usize, c: usize, fl: usize| (m * (w + 1) + c) * 2 + fl;
        let states = (h + 2) * (w + 1) * 2;
        let mut delta = vec![Vec::with_capacity(n); states];
        let mut out = vec![0; states];
        for m in 0..=h + 1 {
            for c in 0..=w {
                for fl in 0..2 {
                    let s = enc(m, c, fl);
                    for a in 0..n {
                        let (ah, afl) = (a / 2, a % 2);
                        let nm = m.max(ah + 1).min(h + 1);
                        delta[s].push(enc(nm, (c + 1).min(w), fl | afl));
                    }
                    let height = if m == 0 { 0 } else { (m).min(h) };
                    let flag = fl | usize::from(c >= w);
                    out[s] = height * 2 + flag;
                }
            }
        }
        machines.push(MooreMachine::new(n, n, enc(0, 0, 0), delta, out)?);
    }
    let elements = (0..n).map(|e| format!("h{}{}", e / 2, if e % 2 == 1 { "!" } else { "" })).collect();
    let algebra = RegularAlgebra::new(elements, table.operators(), machines)?;
    let valuation = table.leaves().iter().map(|x| (x.clone(), 0)).collect();
    let finals = (0..n).filter(|&e| e % 2 == 1 || e / 2 >= h).collect();
    Recognizer::new(table.clone(), algebra, valuation, finals)
}

fn pump_site(t: &Tree, bounds: &PumpBounds) -> PumpSite {
    if t.height() >= bounds.height {
        return PumpSite::Vertical { height: t.height(), bound: bounds.height };
    }
    for s in t.subtrees() {
        if let Tree::Node(f, children) = s {
            if children.len() >= bounds.arity[f] {
                return PumpSite::Horizontal { op: f.clone(), arity: children.len(), bound: bounds.arity[f] };
            }
        }
    }
    unreachable!("the witness violates a bound")
}

/// All trees whose every subtree has a value with finitely many trees,
/// built bottom up; returns the accepted ones.
fn finite_members(rec: &Recognizer, infinite: &[bool], bounds: &PumpBounds) -> Result<Vec<Tree>> {
    const CAP: usize = 200_000;
    let alg = &rec.algebra;
    let mut known: BTreeSet<(usize, Tree)> = BTreeSet::new();
    for x in rec.table.leaves() {
        let a = rec.valuation[x];
        if !infinite[a] {
            known.insert((a, Tree::Leaf(x.clone())));
        }
    }
    loop {
        let pool: Vec<(usize, Tree)> = known.iter().cloned().collect();
        let before = known.len();
        for f in rec.table.operators() {
            let m = alg.machine(f).expect("validated");
            let max_arity = bounds.arity[f].saturating_sub(1);
            let mut stack: Vec<(usize, Vec<Tree>)> = vec![(m.start(), Vec::new())];
            while let Some((q, children)) = stack.pop() {
                let a = m.output(q);
                if !infinite[a] {
                    known.insert((a, Tree::Node(f.clone(), children.clone())));
                    if known.len() > CAP {
                        return Err(Error::SizeCap(format!("more than {CAP} trees in finite classes")));
                    }
                }
                if children.len() < max_arity {
                    for (b, t) in &pool {
                        let mut next = children.clone();
                        next.push(t.clone());
                        stack.push((m.step(q, *b), next));
                    }
                }
            }
        }
        if known.len() == before {
            break;
        }
    }
    let mut members: Vec<Tree> =
        known.into_iter().filter(|(a, _)| rec.finals.contains(a)).map(|(_, t)| t).collect();
    members.sort_by(tree_order);
    Ok(members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::sym;
    use crate::fixtures;
    use crate::trees::{enumerate_trees, parse_context, parse_tree};

    fn t(rec: &Recognizer, s: &str) -> Tree {
        parse_tree(s, rec.table()).unwrap()
    }

    #[test]
    fn membership() {
        let odd = fixtures::parity_odd();
        assert!(odd.accepts(&t(&odd, "x")).unwrap());
        assert!(!odd.accepts(&t(&odd, "f(x,x)")).unwrap());
        let all = fixtures::all_trees();
        assert!(all.accepts(&t(&all, "f(x,f)")).unwrap());
        assert!(matches!(odd.accepts(&Tree::leaf("y")), Err(Error::UnknownSymbol(_))));
    }

    #[test]
    fn trimming() {
        let odd = fixtures::parity_odd();
        assert_eq!(odd.trim(), odd);
        let table = SymbolTable::new::<&str>(&["f"], &[]).unwrap();
        let bare = Recognizer::new(table, fixtures::parity_algebra(), Valuation::new(), [1].into()).unwrap();
        let trimmed = bare.trim();
        assert_eq!(trimmed.algebra().size(), 1);
        assert!(trimmed.finals().is_empty());
        assert_eq!(trimmed.trim(), trimmed);
    }

    #[test]
    fn boolean_operations() {
        let odd = fixtures::parity_odd();
        assert!(odd.equivalent(&odd.complement().complement()).unwrap());
        assert!(odd.intersect(&odd.complement()).unwrap().is_empty());
        let rootf = fixtures::root_f();
        assert_eq!(odd.intersect(&rootf), Err(Error::TableMismatch));

        let table = SymbolTable::new(&["f", "g"], &["x"]).unwrap();
        let mut machines = Vec::new();
        for _ in 0..2 {
            machines.push(fixtures::parity_algebra().machines()[0].clone());
        }
        let par2 = RegularAlgebra::new(vec!["0".into(), "1".into()], &["f", "g"], machines).unwrap();
        let odd2 = Recognizer::new(table, par2, [(sym("x"), 1)].into_iter().collect(), [1].into()).unwrap();
        let both = odd2.intersect(&rootf).unwrap();
        assert!(both.accepts(&t(&both, "f(x)")).unwrap());
        assert!(!both.accepts(&t(&both, "g(x)")).unwrap());
        assert!(!both.accepts(&t(&both, "f(x,x)")).unwrap());
        let either = odd2.union(&rootf).unwrap();
        assert!(either.accepts(&t(&either, "g(x)")).unwrap());
        assert!(!either.accepts(&t(&either, "g(x,x)")).unwrap());
    }

    #[test]
    fn context_quotients() {
        let odd = fixtures::parity_odd();
        let q = odd.context_quotient(&parse_context("f(x,@)", odd.table()).unwrap()).unwrap();
        assert_eq!(q.finals(), &[0].into());
        assert!(q.accepts(&t(&q, "f")).unwrap());
        let same = odd.context_quotient(&Context::hole()).unwrap();
        assert!(same.equivalent(&odd).unwrap());
        let rootf = fixtures::root_f();
        let under_g = rootf.context_quotient(&parse_context("g(@)", rootf.table()).unwrap()).unwrap();
        assert!(under_g.is_empty());
    }

    #[test]
    fn inverse_images() {
        let odd = fixtures::parity_odd();
        let source = SymbolTable::new(&["h"], &["x"]).unwrap();
        let iota = [(sym("h"), sym("f"))].into_iter().collect();
        let m = TermGMorphism::relabeling(source.clone(), odd.table().clone(), iota).unwrap();
        let inv = odd.inverse_gmorphism_image(&m).unwrap();
        assert!(inv.accepts(&parse_tree("h(x,h(x,x))", &source).unwrap()).unwrap());
        assert!(!inv.accepts(&parse_tree("h(x,x)", &source).unwrap()).unwrap());

        let id = TermGMorphism::identity(odd.table().clone());
        assert!(odd.inverse_gmorphism_image(&id).unwrap().equivalent(&odd).unwrap());

        let target = SymbolTable::new(&["f"], &["y"]).unwrap();
        let alg = fixtures::parity_algebra();
        let rec_y = Recognizer::new(target.clone(), alg, [(sym("y"), 1)].into_iter().collect(), [1].into()).unwrap();
        let alpha = [(sym("x"), parse_tree("f(y)", &target).unwrap())].into_iter().collect();
        let iota = [(sym("f"), sym("f"))].into_iter().collect();
        let m = TermGMorphism::new(odd.table().clone(), target, iota, alpha).unwrap();
        let inv = rec_y.inverse_gmorphism_image(&m).unwrap();
        assert_eq!(inv.valuation()[&sym("x")], 1);
    }

    #[test]
    fn syntactic_recognizers() {
        let (sa, rec) = fixtures::parity_odd().syntactic_of().unwrap();
        assert_eq!(sa.algebra.size(), 2);
        assert!(rec.equivalent(&fixtures::parity_odd()).unwrap());
        let (sa, _) = fixtures::singleton_x().syntactic_of().unwrap();
        assert_eq!(sa.algebra.size(), 2);
        let (sa, _) = fixtures::all_trees().syntactic_of().unwrap();
        assert_eq!(sa.algebra.size(), 1);
    }

    #[test]
    fn class_recognizers() {
        let odd = fixtures::parity_odd();
        let class = odd.theta_class_recognizer(&t(&odd, "x")).unwrap();
        assert!(class.equivalent(&odd).unwrap());
        let sx = fixtures::singleton_x();
        let class = sx.theta_class_recognizer(&t(&sx, "x")).unwrap();
        assert!(class.equivalent(&sx).unwrap());
        let all = fixtures::all_trees();
        let class = all.theta_class_recognizer(&t(&all, "f(x)")).unwrap();
        assert!(class.equivalent(&all).unwrap());
    }

    #[test]
    fn counterexamples_are_smallest() {
        let odd = fixtures::parity_odd();
        let all = fixtures::all_trees();
        assert_eq!(odd.counterexample(&all).unwrap(), Some(t(&odd, "f")));
        assert_eq!(odd.smallest_member(), Some(t(&odd, "x")));
        assert_eq!(fixtures::empty_language().smallest_member(), None);
        let smallest = odd.complement().smallest_trees();
        assert_eq!(smallest[&0], t(&odd, "f"));
    }

    #[test]
    fn finiteness() {
        let rootf = fixtures::root_f();
        match rootf.is_finite().unwrap() {
            FinitenessVerdict::Infinite { witness, .. } => {
                assert!(rootf.accepts(&witness).unwrap());
                let b = rootf.pump_bounds();
                assert!(witness.height() >= b.height || witness.subtrees().iter().any(|s| s.children().len() >= b.max_arity()));
            }
            v => panic!("expected infinite, got {v:?}"),
        }
        let sx = fixtures::singleton_x();
        assert_eq!(sx.is_finite().unwrap(), FinitenessVerdict::Finite(vec![t(&sx, "x")]));
        assert_eq!(fixtures::empty_language().is_finite().unwrap(), FinitenessVerdict::Finite(vec![]));
        assert!(!fixtures::parity_odd().is_finite().unwrap().is_finite());
    }

    #[test]
    fn finite_lists_match_enumeration() {
        // x or bare f: values 0 and 1 of the marking algebra
        let members = fixtures::singleton_x().with_finals([0, 1].into()).unwrap();
        if let FinitenessVerdict::Finite(list) = members.is_finite().unwrap() {
            assert_eq!(list.len(), 2);
            let enumerated: Vec<Tree> = enumerate_trees(members.table(), 6, 3)
                .into_iter()
                .filter(|t| members.accepts(t).unwrap())
                .collect();
            assert_eq!(list, enumerated);
        } else {
            panic!("singleton is finite");
        }
    }
}
