//! Decision procedures for the example varieties.
//!
//! Definiteness, aperiodicity and nilpotency are decided exactly on the
//! syntactic algebra. Reverse definite, generalized definite, locally
//! testable and piecewise testable languages get a saturation probe: a
//! refutation is a concrete pair of key-equal trees with different
//! syntactic values, while a positive answer only covers the enumerated
//! trees.
//!
//! The aperiodicity index uses translations instead of contexts. In
//! `SA(T)` the finals are disjunctive and every translation is induced by
//! a context, so `t·q^{n+1}·r ∈ T ⟺ t·q^n·r ∈ T` for all `t, q, r` holds
//! iff `p^{n+1} = p^n` for every translation `p`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde_json::{json, Map, Value};

use crate::algebra::{RegularAlgebra, Translation};
use crate::error::{Error, Result};
use crate::recognizer::{FinitenessVerdict, Recognizer};
use crate::trees::{abstraction_key, enumerate_trees, Context, KeyKind, SymbolTable, Tree, HOLE};

/// A variety to decide membership in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarietyKind {
    /// `Def_k`, or `Def` with the least `k` when `None`.
    Def(Option<usize>),
    RDef(usize),
    GDef { h: usize, k: usize },
    Loc(usize),
    Pwt(usize),
    Aperiodic,
    Nil,
}

impl VarietyKind {
    fn name(self) -> &'static str {
        match self {
            VarietyKind::Def(_) => "Def",
            VarietyKind::RDef(_) => "RDef",
            VarietyKind::GDef { .. } => "GDef",
            VarietyKind::Loc(_) => "Loc",
            VarietyKind::Pwt(_) => "Pwt",
            VarietyKind::Aperiodic => "Ap",
            VarietyKind::Nil => "Nil",
        }
    }

    /// The abstraction used by the saturation probe, if any.
    pub fn key_kind(self) -> Option<KeyKind> {
        match self {
            VarietyKind::Def(Some(k)) => Some(KeyKind::Def(k)),
            VarietyKind::RDef(k) => Some(KeyKind::RDef(k)),
            VarietyKind::GDef { h, k } => Some(KeyKind::GDef { h, k }),
            VarietyKind::Loc(k) => Some(KeyKind::Loc(k)),
            VarietyKind::Pwt(k) => Some(KeyKind::Pwt(k)),
            _ => None,
        }
    }
}

impl From<KeyKind> for VarietyKind {
    fn from(k: KeyKind) -> Self {
        match k {
            KeyKind::Def(k) => VarietyKind::Def(Some(k)),
            KeyKind::RDef(k) => VarietyKind::RDef(k),
            KeyKind::GDef { h, k } => VarietyKind::GDef { h, k },
            KeyKind::Loc(k) => VarietyKind::Loc(k),
            KeyKind::Pwt(k) => VarietyKind::Pwt(k),
        }
    }
}

impl fmt::Display for VarietyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarietyKind::Def(None) => f.write_str("Def"),
            VarietyKind::Def(Some(k)) => write!(f, "Def {k}"),
            VarietyKind::RDef(k) => write!(f, "RDef {k}"),
            VarietyKind::GDef { h, k } => write!(f, "GDef {h} {k}"),
            VarietyKind::Loc(k) => write!(f, "Loc {k}"),
            VarietyKind::Pwt(k) => write!(f, "Pwt {k}"),
            VarietyKind::Aperiodic => f.write_str("Ap"),
            VarietyKind::Nil => f.write_str("Nil"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Exact,
    /// Checked on every tree with at most `max_size` nodes and arity at
    /// most `max_arity`; not a proof.
    BoundedUpTo { max_size: usize, max_arity: usize },
    /// A concrete violation found by search.
    Refutation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    /// Trees related by the variety's congruence, the first accepted and
    /// the second rejected.
    Trees(Tree, Tree),
    /// A translation `p` of `SA(T)` with `p^{tail+period} = p^{tail}`,
    /// `period > 1`, induced by `context`.
    Cycle { map: Vec<usize>, context: Context, tail: usize, period: usize },
    /// Accepted and rejected trees exceeding the pumping bounds.
    BothInfinite { member: Tree, non_member: Tree },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// `parameter` is the least `k` for `Def`, `ia(T)` for `Ap`, and the
    /// requested parameter for probes. For `Nil`, `members` lists the
    /// finite side and `cofinite` tells which side that is.
    Yes { parameter: Option<usize>, method: Method, members: Option<Vec<Tree>>, cofinite: bool },
    No { counterexample: Counterexample, method: Method },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyVerdict {
    pub kind: VarietyKind,
    pub outcome: Outcome,
}

impl VarietyVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self.outcome, Outcome::Yes { .. })
    }

    pub fn method(&self) -> Method {
        match &self.outcome {
            Outcome::Yes { method, .. } | Outcome::No { method, .. } => *method,
        }
    }

    fn yes(kind: VarietyKind, parameter: Option<usize>, method: Method) -> Self {
        VarietyVerdict { kind, outcome: Outcome::Yes { parameter, method, members: None, cofinite: false } }
    }

    fn no(kind: VarietyKind, counterexample: Counterexample, method: Method) -> Self {
        VarietyVerdict { kind, outcome: Outcome::No { counterexample, method } }
    }

    /// One JSON object, e.g. `{"kind":"Def","k":1,"verdict":"yes","method":"exact"}`.
    pub fn to_json(&self) -> Value {
        let mut o = Map::new();
        o.insert("kind".into(), json!(self.kind.name()));
        match self.kind {
            VarietyKind::GDef { h, k } => {
                o.insert("h".into(), json!(h));
                o.insert("k".into(), json!(k));
            }
            VarietyKind::RDef(k) | VarietyKind::Loc(k) | VarietyKind::Pwt(k) => {
                o.insert("k".into(), json!(k));
            }
            VarietyKind::Def(k) => {
                let shown = match &self.outcome {
                    Outcome::Yes { parameter, .. } => *parameter,
                    Outcome::No { .. } => k,
                };
                o.insert("k".into(), json!(shown));
            }
            VarietyKind::Aperiodic => {
                if let Outcome::Yes { parameter, .. } = &self.outcome {
                    o.insert("ia".into(), json!(parameter));
                }
            }
            VarietyKind::Nil => {}
        }
        o.insert("verdict".into(), json!(if self.is_yes() { "yes" } else { "no" }));
        match self.method() {
            Method::Exact => {
                o.insert("method".into(), json!("exact"));
            }
            Method::Refutation => {
                o.insert("method".into(), json!("refutation"));
            }
            Method::BoundedUpTo { max_size, max_arity } => {
                o.insert("method".into(), json!("bounded"));
                o.insert("max_size".into(), json!(max_size));
                o.insert("max_arity".into(), json!(max_arity));
            }
        }
        match &self.outcome {
            Outcome::Yes { members: Some(ms), cofinite, .. } => {
                o.insert("side".into(), json!(if *cofinite { "cofinite" } else { "finite" }));
                o.insert("members".into(), json!(ms.iter().map(|t| t.to_string()).collect::<Vec<_>>()));
            }
            Outcome::Yes { .. } => {}
            Outcome::No { counterexample, .. } => {
                let c = match counterexample {
                    Counterexample::Trees(s, t) => json!({"trees": [s.to_string(), t.to_string()]}),
                    Counterexample::Cycle { map, context, tail, period } => json!({
                        "translation": map,
                        "context": context.to_string(),
                        "tail": tail,
                        "period": period,
                    }),
                    Counterexample::BothInfinite { member, non_member } => json!({
                        "member": member.to_string(),
                        "non_member": non_member.to_string(),
                    }),
                };
                o.insert("counterexample".into(), c);
            }
        }
        Value::Object(o)
    }
}

impl fmt::Display for VarietyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Yes { parameter, method, members, cofinite } => {
                write!(f, "{}: yes", self.kind)?;
                match (self.kind, parameter) {
                    (VarietyKind::Aperiodic, Some(n)) => write!(f, ", ia = {n}")?,
                    (VarietyKind::Def(_), Some(k)) => write!(f, ", least k = {k}")?,
                    _ => {}
                }
                if let Some(ms) = members {
                    let side = if *cofinite { "complement" } else { "language" };
                    let list: Vec<String> = ms.iter().map(|t| t.to_string()).collect();
                    write!(f, ", finite {side} {{{}}}", list.join(", "))?;
                }
                match method {
                    Method::Exact => write!(f, " (exact)"),
                    Method::BoundedUpTo { max_size, max_arity } => {
                        write!(f, " (bounded: size <= {max_size}, arity <= {max_arity})")
                    }
                    Method::Refutation => write!(f, " (refutation)"),
                }
            }
            Outcome::No { counterexample, method } => {
                write!(f, "{}: no", self.kind)?;
                match counterexample {
                    Counterexample::Trees(s, t) => write!(f, ", {s} is accepted and {t} rejected but they are related")?,
                    Counterexample::Cycle { context, tail, period, .. } => {
                        write!(f, ", context {context} cycles with period {period} after {tail} steps")?
                    }
                    Counterexample::BothInfinite { member, non_member } => {
                        write!(f, ", {member} and {non_member} both pump")?
                    }
                }
                match method {
                    Method::Refutation => write!(f, " (refutation)"),
                    _ => write!(f, " (exact)"),
                }
            }
        }
    }
}

/// Sets of value pairs `R_j = {(sφ, tφ) : rt_j(s) = rt_j(t)}` over a
/// syntactic recognizer, with enough provenance to rebuild the trees.
struct DefiniteChain<'a> {
    rec: &'a Recognizer,
    witness: BTreeMap<usize, Tree>,
    /// `levels[j]` maps each pair of `R_j` to how it arises.
    levels: Vec<BTreeMap<(usize, usize), Origin>>,
}

#[derive(Debug, Clone)]
enum Origin {
    /// Both values' smallest trees.
    Values,
    /// Same root `f`, arbitrary children words.
    Root { op: usize, left: Vec<usize>, right: Vec<usize> },
    /// Same root `f` with children pairs from the previous level.
    Children { op: usize, pairs: Vec<(usize, usize)> },
}

impl<'a> DefiniteChain<'a> {
    fn new(rec: &'a Recognizer) -> Self {
        let witness = rec.smallest_trees();
        let n = rec.algebra().size();
        let r0 = (0..n).flat_map(|a| (0..n).map(move |b| ((a, b), Origin::Values))).collect();
        DefiniteChain { rec, witness, levels: vec![r0] }
    }

    fn diagonal(n: usize) -> BTreeMap<(usize, usize), Origin> {
        (0..n).map(|a| ((a, a), Origin::Values)).collect()
    }

    fn level_one(&self) -> BTreeMap<(usize, usize), Origin> {
        let alg = self.rec.algebra();
        let mut r = Self::diagonal(alg.size());
        for (i, m) in alg.machines().iter().enumerate() {
            let outs: Vec<(usize, Vec<usize>)> = m.reachable().into_iter().map(|(q, w)| (m.output(q), w)).collect();
            for (a, u) in &outs {
                for (b, v) in &outs {
                    r.entry((*a, *b)).or_insert_with(|| Origin::Root { op: i, left: u.clone(), right: v.clone() });
                }
            }
        }
        r
    }

    fn next_level(&self, prev: &BTreeMap<(usize, usize), Origin>) -> BTreeMap<(usize, usize), Origin> {
        let alg = self.rec.algebra();
        let pairs: Vec<(usize, usize)> = prev.keys().copied().collect();
        let mut r = Self::diagonal(alg.size());
        for (i, m) in alg.machines().iter().enumerate() {
            for ((p, q), word) in m.pair_reachable(m, &pairs) {
                r.entry((m.output(p), m.output(q)))
                    .or_insert_with(|| Origin::Children { op: i, pairs: word.iter().map(|&j| pairs[j]).collect() });
            }
        }
        r
    }

    /// Extends the chain until it stabilizes; returns the least `j` with
    /// `R_j ⊆ Δ`, if any.
    fn run(&mut self) -> Option<usize> {
        loop {
            let j = self.levels.len() - 1;
            if self.levels[j].keys().all(|(a, b)| a == b) {
                return Some(j);
            }
            let next = if j == 0 { self.level_one() } else { self.next_level(&self.levels[j]) };
            // only R_{j+1} = F(R_j) for j >= 1 is a fixpoint iteration
            let stable = j >= 1 && next.keys().eq(self.levels[j].keys());
            self.levels.push(next);
            if stable {
                return None;
            }
        }
    }

    fn level(&self, j: usize) -> &BTreeMap<(usize, usize), Origin> {
        &self.levels[j.min(self.levels.len() - 1)]
    }

    fn word_trees(&self, word: &[usize]) -> Vec<Tree> {
        word.iter().map(|a| self.witness[a].clone()).collect()
    }

    /// Trees with the given values and equal `rt_j`.
    fn trees(&self, j: usize, pair: (usize, usize)) -> (Tree, Tree) {
        let origin = if pair.0 == pair.1 { &Origin::Values } else { &self.level(j)[&pair] };
        let op = |i: usize| self.rec.algebra().operators()[i].clone();
        match origin {
            Origin::Values => (self.witness[&pair.0].clone(), self.witness[&pair.1].clone()),
            Origin::Root { op: i, left, right } => {
                (Tree::Node(op(*i), self.word_trees(left)), Tree::Node(op(*i), self.word_trees(right)))
            }
            Origin::Children { op: i, pairs } => {
                let (l, r): (Vec<Tree>, Vec<Tree>) = pairs.iter().map(|&p| self.trees(j - 1, p)).unzip();
                (Tree::Node(op(*i), l), Tree::Node(op(*i), r))
            }
        }
    }

    /// A separated pair at level `j`.
    fn counterexample(&self, j: usize) -> Option<(Tree, Tree)> {
        let pair = self.level(j).keys().find(|(a, b)| a != b)?;
        Some(self.trees(j, *pair))
    }
}

/// The `R_j` chain of the syntactic recognizer, for inspection and tests.
pub fn definite_chain(rec: &Recognizer) -> Result<Vec<BTreeSet<(usize, usize)>>> {
    let (_, sa) = rec.syntactic_of()?;
    let mut chain = DefiniteChain::new(&sa);
    chain.run();
    Ok(chain.levels.iter().map(|l| l.keys().copied().collect()).collect())
}

/// Least `k` with `T` `k`-definite, or an exact counterexample.
pub fn decide_definite(rec: &Recognizer) -> Result<VarietyVerdict> {
    decide_definite_at(rec, None)
}

fn decide_definite_at(rec: &Recognizer, k: Option<usize>) -> Result<VarietyVerdict> {
    let kind = VarietyKind::Def(k);
    let (_, sa) = rec.syntactic_of()?;
    let mut chain = DefiniteChain::new(&sa);
    let least = chain.run();
    match (least, k) {
        (Some(l), None) => Ok(VarietyVerdict::yes(kind, Some(l), Method::Exact)),
        (Some(l), Some(k)) if l <= k => Ok(VarietyVerdict::yes(kind, Some(l), Method::Exact)),
        _ => {
            let level = k.unwrap_or(chain.levels.len() - 1);
            let (s, t) = chain.counterexample(level).expect("a separated pair remains");
            let (s, t) = separate(&sa, s, t)?;
            Ok(VarietyVerdict::no(kind, Counterexample::Trees(s, t), Method::Exact))
        }
    }
}

/// Turns trees with different values in `SA(T)` into an accepted and a
/// rejected tree by plugging both into one context. Every example
/// congruence is preserved by plugging, so the results stay related.
fn separate(sa: &Recognizer, s: Tree, t: Tree) -> Result<(Tree, Tree)> {
    let (a, b) = (sa.eval(&s)?, sa.eval(&t)?);
    let finals = sa.finals();
    let p = sa
        .algebra()
        .translations()
        .all
        .into_iter()
        .find(|p| finals.contains(&p.apply(a)) != finals.contains(&p.apply(b)))
        .expect("distinct syntactic values are separated by a translation");
    let context = translation_context(sa, &p);
    let (u, v) = (context.plug(&s), context.plug(&t));
    Ok(if finals.contains(&p.apply(a)) { (u, v) } else { (v, u) })
}

/// `(tail, period)` of the powers of `map`.
pub fn power_cycle(map: &[usize]) -> (usize, usize) {
    let mut seen: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut cur: Vec<usize> = (0..map.len()).collect();
    let mut i = 0;
    loop {
        if let Some(&j) = seen.get(&cur) {
            return (j, i - j);
        }
        seen.insert(cur.clone(), i);
        cur = cur.iter().map(|&a| map[a]).collect();
        i += 1;
    }
}

/// A context of `rec` inducing `p` on its algebra, built from the
/// translation's elementary steps and smallest trees of each value.
pub fn translation_context(rec: &Recognizer, p: &Translation) -> Context {
    let witness = rec.smallest_trees();
    let mut ctx = Context::hole();
    for e in &p.provenance {
        let mut children: Vec<Tree> = e.u.iter().map(|a| witness[a].clone()).collect();
        children.push(Tree::leaf(HOLE));
        children.extend(e.v.iter().map(|a| witness[a].clone()));
        let step = Context::from_tree(Tree::Node(e.op.clone(), children)).expect("one hole");
        ctx = ctx.compose(&step);
    }
    ctx
}

/// Aperiodicity with `ia(T)` as the longest tail among the translations
/// of `SA(T)`.
pub fn decide_aperiodic(rec: &Recognizer) -> Result<VarietyVerdict> {
    let kind = VarietyKind::Aperiodic;
    let (_, sa) = rec.syntactic_of()?;
    let tr = sa.algebra().translations();
    let mut ia = 0;
    for p in &tr.all {
        let (tail, period) = power_cycle(&p.map);
        if period > 1 {
            let context = translation_context(&sa, p);
            return Ok(VarietyVerdict::no(
                kind,
                Counterexample::Cycle { map: p.map.clone(), context, tail, period },
                Method::Exact,
            ));
        }
        ia = ia.max(tail);
    }
    Ok(VarietyVerdict::yes(kind, Some(ia), Method::Exact))
}

/// Finite or co-finite, decided on the recognizer of `T` over `SA(T)`.
pub fn decide_nil(rec: &Recognizer) -> Result<VarietyVerdict> {
    let kind = VarietyKind::Nil;
    let (_, rec) = rec.syntactic_of()?;
    let finite_side = |r: &Recognizer, cofinite: bool| -> Result<std::result::Result<VarietyVerdict, Tree>> {
        Ok(match r.is_finite()? {
            FinitenessVerdict::Finite(members) => Ok(VarietyVerdict {
                kind,
                outcome: Outcome::Yes { parameter: None, method: Method::Exact, members: Some(members), cofinite },
            }),
            FinitenessVerdict::Infinite { witness, .. } => Err(witness),
        })
    };
    let member = match finite_side(&rec, false)? {
        Ok(v) => return Ok(v),
        Err(t) => t,
    };
    let non_member = match finite_side(&rec.complement(), true)? {
        Ok(v) => return Ok(v),
        Err(t) => t,
    };
    Ok(VarietyVerdict::no(kind, Counterexample::BothInfinite { member, non_member }, Method::Exact))
}

fn absorbing_name(taken: &BTreeSet<String>) -> String {
    let mut name = "a_0".to_string();
    while taken.contains(&name) {
        name.push('\'');
    }
    name
}

/// The nilpotent recognizer of a finite language: the carrier is every
/// tree with fewer than `k = max size + 1` nodes plus an absorbing `a_0`.
pub fn nilpotent_recognizer_for_finite(trees: &[Tree], table: &SymbolTable) -> Result<Recognizer> {
    if table.operators().is_empty() {
        return Err(Error::InvalidTable("no operators".into()));
    }
    for t in trees {
        table.check_tree(t)?;
    }
    let k = trees.iter().map(Tree::size).max().map_or(1, |s| s + 1);
    let small = if k > 1 { enumerate_trees(table, k - 1, k - 1) } else { Vec::new() };
    let index: BTreeMap<&Tree, usize> = small.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let sink = small.len();
    let n = sink + 1;
    let mut machines = Vec::new();
    for f in table.operators() {
        // states: the f-rooted small trees, by children list, then a sink
        let rooted: Vec<&Tree> = small.iter().filter(|t| matches!(t, Tree::Node(g, _) if g == f)).collect();
        let state_of: BTreeMap<&[Tree], usize> =
            rooted.iter().enumerate().map(|(i, t)| (t.children(), i)).collect();
        let dead = rooted.len();
        let mut delta = Vec::with_capacity(dead + 1);
        let mut out = Vec::with_capacity(dead + 1);
        for t in &rooted {
            let row = (0..n)
                .map(|b| {
                    if b == sink {
                        return dead;
                    }
                    let mut children = t.children().to_vec();
                    children.push(small[b].clone());
                    state_of.get(children.as_slice()).copied().unwrap_or(dead)
                })
                .collect();
            delta.push(row);
            out.push(index[*t]);
        }
        delta.push(vec![dead; n]);
        out.push(sink);
        let start = state_of.get(&[][..]).copied().unwrap_or(dead);
        machines.push(crate::horizon::MooreMachine::new(n, n, start, delta, out)?);
    }
    let mut elements: Vec<String> = small.iter().map(Tree::to_string).collect();
    let taken: BTreeSet<String> = elements.iter().cloned().collect();
    elements.push(absorbing_name(&taken));
    let algebra = RegularAlgebra::new(elements, table.operators(), machines)?;
    let valuation = table
        .leaves()
        .iter()
        .map(|x| (x.clone(), index.get(&Tree::Leaf(x.clone())).copied().unwrap_or(sink)))
        .collect();
    let finals = trees.iter().map(|t| index[t]).collect();
    Recognizer::new(table.clone(), algebra, valuation, finals)
}

/// Groups the enumerated trees by `kind`'s key and reports the first pair
/// with equal keys and different values in `SA(T)`.
pub fn saturation_probe(rec: &Recognizer, kind: KeyKind, max_size: usize, max_arity: usize) -> Result<VarietyVerdict> {
    kind.validate()?;
    let vkind = VarietyKind::from(kind);
    let parameter = match kind {
        KeyKind::Def(k) | KeyKind::RDef(k) | KeyKind::Loc(k) | KeyKind::Pwt(k) | KeyKind::GDef { k, .. } => k,
    };
    let (_, sa) = rec.syntactic_of()?;
    let mut groups = BTreeMap::new();
    for t in enumerate_trees(rec.table(), max_size, max_arity) {
        let value = sa.eval(&t)?;
        let key = abstraction_key(&t, kind)?;
        match groups.get(&key) {
            None => {
                groups.insert(key, (value, t));
            }
            Some((v, s)) if *v != value => {
                let (s, t) = separate(&sa, s.clone(), t)?;
                return Ok(VarietyVerdict::no(vkind, Counterexample::Trees(s, t), Method::Refutation));
            }
            Some(_) => {}
        }
    }
    Ok(VarietyVerdict::yes(vkind, Some(parameter), Method::BoundedUpTo { max_size, max_arity }))
}

/// Default probe bounds.
pub const DEFAULT_BOUNDS: (usize, usize) = (7, 3);

/// Exact deciders where available, the saturation probe otherwise.
pub fn decide_variety(rec: &Recognizer, kind: VarietyKind, bounds: (usize, usize)) -> Result<VarietyVerdict> {
    match kind {
        VarietyKind::Def(k) => decide_definite_at(rec, k),
        VarietyKind::Aperiodic => decide_aperiodic(rec),
        VarietyKind::Nil => decide_nil(rec),
        other => saturation_probe(rec, other.key_kind().expect("probe kinds have keys"), bounds.0, bounds.1),
    }
}
