//! Regular unranked algebras.
//!
//! Each operator `f` is a [`MooreMachine`] whose alphabet and outputs are
//! the carrier: `f_A(a_1⋯a_m)` is the machine's output after reading the
//! word `a_1⋯a_m`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{self, Write as _};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::horizon::MooreMachine;
use crate::partition::Partition;
use crate::trees::{Context, Sym, Tree, HOLE};

/// Values of leaf symbols.
pub type Valuation = BTreeMap<Sym, usize>;

/// Name of the single element of the trivial algebra.
pub const BOTTOM: &str = "⊥";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularAlgebra {
    elements: Vec<String>,
    operators: Vec<Sym>,
    machines: Vec<MooreMachine>,
}

/// A pair `(σ, θ)` of equivalences on `Σ` and on `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GCongruence {
    pub sigma: Partition,
    pub theta: Partition,
}

/// Why a pair `(σ, θ)` is not a g-congruence: `f σ g` and the words are
/// componentwise `θ`-related, but the results are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceViolation {
    pub f: Sym,
    pub g: Sym,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub left_value: usize,
    pub right_value: usize,
}

/// Why `(ι, φ)` is not a g-morphism: `f_A(w)φ ≠ ι(f)_B(wφ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismViolation {
    pub op: Sym,
    pub word: Vec<usize>,
    pub expected: usize,
    pub actual: usize,
}

/// One elementary translation `a ↦ f_A(u a v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elementary {
    pub op: Sym,
    pub u: Vec<usize>,
    pub v: Vec<usize>,
}

/// A translation tabulated on the carrier, with the elementary steps
/// (applied left to right) that produce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Translation {
    pub map: Vec<usize>,
    pub provenance: Vec<Elementary>,
}

impl Translation {
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &a)| i == a)
    }
}

#[derive(Debug, Clone)]
pub struct TranslationMonoid {
    /// `E_f` for every operator, in operator order.
    pub elementary: Vec<(Sym, Vec<Translation>)>,
    /// `Tr(A)`, the identity first, then breadth-first by provenance length.
    pub all: Vec<Translation>,
}

fn compose_maps(first: &[usize], then: &[usize]) -> Vec<usize> {
    first.iter().map(|&a| then[a]).collect()
}

impl RegularAlgebra {
    pub fn new<S: AsRef<str>>(
        elements: Vec<String>,
        operators: &[S],
        machines: Vec<MooreMachine>,
    ) -> Result<RegularAlgebra> {
        if elements.is_empty() {
            return Err(Error::InvalidAlgebra("the carrier is empty".into()));
        }
        let distinct: BTreeSet<&String> = elements.iter().collect();
        if distinct.len() != elements.len() {
            return Err(Error::InvalidAlgebra("duplicate element names".into()));
        }
        if operators.len() != machines.len() {
            return Err(Error::InvalidAlgebra("one machine per operator is required".into()));
        }
        let names: BTreeSet<&str> = operators.iter().map(|s| s.as_ref()).collect();
        if names.len() != operators.len() {
            return Err(Error::InvalidAlgebra("duplicate operator names".into()));
        }
        let n = elements.len();
        for (f, m) in operators.iter().zip(&machines) {
            if m.alphabet_size() != n || m.output_size() != n {
                return Err(Error::InvalidAlgebra(format!(
                    "machine of `{}` must read and write the {n} carrier elements",
                    f.as_ref()
                )));
            }
        }
        Ok(RegularAlgebra {
            elements,
            operators: operators.iter().map(|s| Sym::from(s.as_ref())).collect(),
            machines,
        })
    }

    /// The one-element algebra over `operators`, carrier `{⊥}`.
    pub fn trivial(operators: &[Sym]) -> RegularAlgebra {
        let machines = operators.iter().map(|_| MooreMachine::constant(1, 1, 0).unwrap()).collect();
        RegularAlgebra::new(vec![BOTTOM.to_string()], operators, machines).expect("trivial algebra")
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn element_index(&self, name: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn operators(&self) -> &[Sym] {
        &self.operators
    }

    pub fn machines(&self) -> &[MooreMachine] {
        &self.machines
    }

    #[inline]
    pub fn op_index(&self, f: &str) -> Option<usize> {
        self.operators.iter().position(|s| &**s == f)
    }

    pub fn machine(&self, f: &str) -> Result<&MooreMachine> {
        self.op_index(f)
            .map(|i| &self.machines[i])
            .ok_or_else(|| Error::UnknownOperator(f.to_string()))
    }

    /// `f_A(w)`.
    pub fn apply_symbol(&self, f: &str, word: &[usize]) -> Result<usize> {
        self.machine(f)?.run_word(word).map_err(|e| match e {
            Error::LetterOutOfRange(a) => Error::ElementOutOfRange(a),
            e => e,
        })
    }

    fn eval_with(
        &self,
        t: &Tree,
        op_of: &impl Fn(&Sym) -> Result<usize>,
        leaf: &impl Fn(&Sym) -> Result<usize>,
    ) -> Result<usize> {
        match t {
            Tree::Leaf(x) => leaf(x),
            Tree::Node(f, children) => {
                let m = &self.machines[op_of(f)?];
                let mut q = m.start();
                for c in children {
                    q = m.step(q, self.eval_with(c, op_of, leaf)?);
                }
                Ok(m.output(q))
            }
        }
    }

    fn own_op(&self) -> impl Fn(&Sym) -> Result<usize> + '_ {
        |f: &Sym| self.op_index(f).ok_or_else(|| Error::UnknownOperator(f.to_string()))
    }

    /// The term function `t^A(α)`.
    pub fn eval_term(&self, valuation: &Valuation, t: &Tree) -> Result<usize> {
        let leaf = |x: &Sym| valuation.get(x).copied().ok_or_else(|| Error::UnvaluedLeaf(x.to_string()));
        self.eval_with(t, &self.own_op(), &leaf)
    }

    /// Evaluates a context with the hole preassigned `hole_value`.
    pub fn eval_context(&self, valuation: &Valuation, p: &Context, hole_value: usize) -> Result<usize> {
        if hole_value >= self.size() {
            return Err(Error::ElementOutOfRange(hole_value));
        }
        let leaf = |x: &Sym| {
            if &**x == HOLE {
                Ok(hole_value)
            } else {
                valuation.get(x).copied().ok_or_else(|| Error::UnvaluedLeaf(x.to_string()))
            }
        };
        self.eval_with(p.as_tree(), &self.own_op(), &leaf)
    }

    /// `ι_X(t)^A(α)` computed without building `ι_X(t)`.
    pub fn eval_g(&self, iota: &BTreeMap<Sym, Sym>, valuation: &Valuation, t: &Tree) -> Result<usize> {
        let op_of = |f: &Sym| {
            let g = iota.get(f).ok_or_else(|| Error::UnknownOperator(f.to_string()))?;
            self.op_index(g).ok_or_else(|| Error::UnknownOperator(g.to_string()))
        };
        let leaf = |x: &Sym| valuation.get(x).copied().ok_or_else(|| Error::UnvaluedLeaf(x.to_string()));
        self.eval_with(t, &op_of, &leaf)
    }

    fn op_indices(&self, omega: &[Sym]) -> Result<Vec<usize>> {
        omega
            .iter()
            .map(|f| self.op_index(f).ok_or_else(|| Error::UnknownOperator(f.to_string())))
            .collect()
    }

    /// `⟨seed⟩_Ω`: the least `Ω`-closed subset containing `seed`.
    pub fn generated_closure(&self, omega: &[Sym], seed: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
        if let Some(&bad) = seed.iter().find(|&&a| a >= self.size()) {
            return Err(Error::ElementOutOfRange(bad));
        }
        let ops = self.op_indices(omega)?;
        let mut closed = seed.clone();
        loop {
            let letters: Vec<usize> = closed.iter().copied().collect();
            let mut grown = closed.clone();
            for &i in &ops {
                let m = &self.machines[i];
                grown.extend(m.reachable_over(&letters).into_iter().map(|(q, _)| m.output(q)));
            }
            if grown.len() == closed.len() {
                return Ok(closed);
            }
            closed = grown;
        }
    }

    /// The `Ω`-subalgebra on the closed set `subset`, with its elements in
    /// increasing order; returns the algebra and the embedding into `self`.
    pub fn subalgebra(&self, omega: &[Sym], subset: &BTreeSet<usize>) -> Result<(RegularAlgebra, Vec<usize>)> {
        if subset.is_empty() {
            return Err(Error::InvalidAlgebra("a subalgebra needs at least one element".into()));
        }
        if &self.generated_closure(omega, subset)? != subset {
            return Err(Error::InvalidAlgebra("the subset is not closed under the operators".into()));
        }
        let embed: Vec<usize> = subset.iter().copied().collect();
        let mut index = vec![usize::MAX; self.size()];
        for (i, &a) in embed.iter().enumerate() {
            index[a] = i;
        }
        let mut machines = Vec::new();
        for i in self.op_indices(omega)? {
            let m = self.machines[i].map_letters(embed.len(), |b| embed[b]).restrict_reachable();
            machines.push(m.map_outputs(embed.len(), |o| index[o]));
        }
        let elements = embed.iter().map(|&a| self.elements[a].clone()).collect();
        Ok((RegularAlgebra::new(elements, omega, machines)?, embed))
    }

    /// `κ(A_1,…,A_n)` over `gamma`: the carrier is the product of the
    /// carriers, and `γ` acts as `κ(γ)_i` in component `i`. Tuples are
    /// encoded in mixed radix, first component most significant.
    pub fn g_product(
        gamma: &[Sym],
        kappa: &BTreeMap<Sym, Vec<Sym>>,
        algebras: &[&RegularAlgebra],
    ) -> Result<RegularAlgebra> {
        if algebras.is_empty() {
            for g in gamma {
                if kappa.get(g).is_some_and(|v| !v.is_empty()) {
                    return Err(Error::InvalidParameter(format!("kappa({g}) must be empty")));
                }
            }
            return Ok(RegularAlgebra::trivial(gamma));
        }
        let sizes: Vec<usize> = algebras.iter().map(|a| a.size()).collect();
        let total: usize = sizes.iter().product();
        let decode = |mut id: usize| {
            let mut parts = vec![0; sizes.len()];
            for i in (0..sizes.len()).rev() {
                parts[i] = id % sizes[i];
                id /= sizes[i];
            }
            parts
        };
        let encode = |parts: &[usize]| parts.iter().zip(&sizes).fold(0, |acc, (&p, &n)| acc * n + p);
        let tuples: Vec<Vec<usize>> = (0..total).map(decode).collect();

        let mut machines = Vec::new();
        for g in gamma {
            let components =
                kappa.get(g).ok_or_else(|| Error::InvalidParameter(format!("kappa misses `{g}`")))?;
            if components.len() != algebras.len() {
                return Err(Error::InvalidParameter(format!(
                    "kappa({g}) has {} components for {} algebras",
                    components.len(),
                    algebras.len()
                )));
            }
            let ms: Vec<&MooreMachine> = components
                .iter()
                .zip(algebras)
                .map(|(f, a)| a.machine(f))
                .collect::<Result<_>>()?;
            let start: Vec<usize> = ms.iter().map(|m| m.start()).collect();
            let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
            index.insert(start.clone(), 0);
            let mut states = vec![start];
            let mut delta: Vec<Vec<usize>> = Vec::new();
            let mut i = 0;
            while i < states.len() {
                let cur = states[i].clone();
                let mut row = Vec::with_capacity(total);
                for letter in &tuples {
                    let next: Vec<usize> =
                        ms.iter().zip(&cur).zip(letter).map(|((m, &q), &a)| m.step(q, a)).collect();
                    let id = match index.get(&next) {
                        Some(&id) => id,
                        None => {
                            index.insert(next.clone(), states.len());
                            states.push(next);
                            states.len() - 1
                        }
                    };
                    row.push(id);
                }
                delta.push(row);
                i += 1;
            }
            let out = states
                .iter()
                .map(|s| {
                    let outs: Vec<usize> = ms.iter().zip(s).map(|(m, &q)| m.output(q)).collect();
                    encode(&outs)
                })
                .collect();
            machines.push(MooreMachine::new(total, total, 0, delta, out)?);
        }
        let elements = tuples
            .iter()
            .map(|t| {
                let parts: Vec<&str> =
                    t.iter().zip(algebras).map(|(&a, alg)| alg.elements[a].as_str()).collect();
                format!("[{}]", parts.join("|"))
            })
            .collect();
        RegularAlgebra::new(elements, gamma, machines)
    }

    /// `κ(f) = (f, f)` product of two algebras over the same operators.
    pub fn direct_product(&self, other: &RegularAlgebra) -> Result<RegularAlgebra> {
        let kappa = self.operators.iter().map(|f| (f.clone(), vec![f.clone(), f.clone()])).collect();
        RegularAlgebra::g_product(&self.operators, &kappa, &[self, other])
    }

    /// The `ι`-derived algebra over `sigma`: `f` acts as `ι(f)`.
    pub fn derived(sigma: &[Sym], iota: &BTreeMap<Sym, Sym>, alg: &RegularAlgebra) -> Result<RegularAlgebra> {
        let machines = sigma
            .iter()
            .map(|f| {
                let g = iota.get(f).ok_or_else(|| Error::InvalidParameter(format!("iota misses `{f}`")))?;
                alg.machine(g).cloned()
            })
            .collect::<Result<Vec<_>>>()?;
        RegularAlgebra::new(alg.elements.clone(), sigma, machines)
    }

    fn pair_violation(&self, i: usize, j: usize, theta: &Partition) -> Option<CongruenceViolation> {
        let n = self.size();
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| theta.related(a, b)).collect();
        let (mf, mg) = (&self.machines[i], &self.machines[j]);
        mf.pair_reachable(mg, &pairs).into_iter().find_map(|((p, q), word)| {
            let (x, y) = (mf.output(p), mg.output(q));
            (!theta.related(x, y)).then(|| CongruenceViolation {
                f: self.operators[i].clone(),
                g: self.operators[j].clone(),
                left: word.iter().map(|&k| pairs[k].0).collect(),
                right: word.iter().map(|&k| pairs[k].1).collect(),
                left_value: x,
                right_value: y,
            })
        })
    }

    /// Exact check of the g-congruence implication by pair-machine
    /// reachability; `None` means `(σ, θ)` is a g-congruence.
    pub fn g_congruence_violation(&self, gc: &GCongruence) -> Result<Option<CongruenceViolation>> {
        if gc.sigma.len() != self.operators.len() || gc.theta.len() != self.size() {
            return Err(Error::InvalidParameter("partition sizes do not match the algebra".into()));
        }
        for i in 0..self.operators.len() {
            for j in i..self.operators.len() {
                if gc.sigma.related(i, j) {
                    if let Some(v) = self.pair_violation(i, j, &gc.theta) {
                        return Ok(Some(v));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_g_congruence(&self, gc: &GCongruence) -> Result<bool> {
        Ok(self.g_congruence_violation(gc)?.is_none())
    }

    pub fn congruence_violation(&self, theta: &Partition) -> Result<Option<CongruenceViolation>> {
        self.g_congruence_violation(&GCongruence {
            sigma: Partition::identity(self.operators.len()),
            theta: theta.clone(),
        })
    }

    pub fn is_congruence(&self, theta: &Partition) -> Result<bool> {
        Ok(self.congruence_violation(theta)?.is_none())
    }

    /// `M(θ)`: the greatest equivalence `σ` on the operators with `(σ, θ)`
    /// a g-congruence.
    pub fn m_operator(&self, theta: &Partition) -> Result<Partition> {
        if !self.is_congruence(theta)? {
            return Err(Error::NotACongruence);
        }
        let k = self.operators.len();
        let mut label: Vec<usize> = (0..k).collect();
        for i in 0..k {
            if label[i] != i {
                continue;
            }
            for (j, l) in label.iter_mut().enumerate().skip(i + 1) {
                if *l == j && self.pair_violation(i, j, theta).is_none() {
                    *l = i;
                }
            }
        }
        Ok(Partition::from_labels(&label))
    }

    fn class_names(&self, theta: &Partition) -> Vec<String> {
        theta
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&a| self.elements[a].as_str()).collect::<Vec<_>>().join("~"))
            .collect()
    }

    /// `A/θ`. Fails with [`Error::NotACongruence`] if some operator is not
    /// compatible with `θ`.
    pub fn quotient(&self, theta: &Partition) -> Result<RegularAlgebra> {
        if theta.len() != self.size() {
            return Err(Error::InvalidParameter("partition size does not match the carrier".into()));
        }
        let machines = self
            .machines
            .iter()
            .map(|m| m.class_quotient(theta, theta))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| match e {
                Error::WellDefinedness(..) => Error::NotACongruence,
                e => e,
            })?;
        RegularAlgebra::new(self.class_names(theta), &self.operators, machines)
    }

    /// `A/(σ, θ)` over `Σ/σ`; each operator class is named after its first
    /// member, and all members must induce the same quotient operation.
    pub fn g_quotient(&self, gc: &GCongruence) -> Result<RegularAlgebra> {
        if gc.sigma.len() != self.operators.len() {
            return Err(Error::InvalidParameter("operator partition size mismatch".into()));
        }
        let q = self.quotient(&gc.theta)?;
        let mut ops = Vec::new();
        let mut machines = Vec::new();
        for block in gc.sigma.blocks() {
            let first = &q.machines[block[0]];
            for &other in &block[1..] {
                if !first.equivalent(&q.machines[other])? {
                    return Err(Error::NotACongruence);
                }
            }
            ops.push(self.operators[block[0]].clone());
            machines.push(first.clone());
        }
        RegularAlgebra::new(q.elements, &ops, machines)
    }

    /// Checks that `(ι, φ) : self → dst` is a g-morphism by comparing, for
    /// every `f`, the machines of `w ↦ f_A(w)φ` and `w ↦ ι(f)_B(wφ)`.
    pub fn gmorphism_violation(
        &self,
        dst: &RegularAlgebra,
        iota: &BTreeMap<Sym, Sym>,
        phi: &[usize],
    ) -> Result<Option<MorphismViolation>> {
        if phi.len() != self.size() {
            return Err(Error::InvalidParameter("phi must map every element".into()));
        }
        if let Some(&bad) = phi.iter().find(|&&b| b >= dst.size()) {
            return Err(Error::ElementOutOfRange(bad));
        }
        for (f, m) in self.operators.iter().zip(&self.machines) {
            let g = iota.get(f).ok_or_else(|| Error::InvalidParameter(format!("iota misses `{f}`")))?;
            let image = dst.machine(g)?;
            let left = m.map_outputs(dst.size(), |o| phi[o]);
            let right = image.map_letters(self.size(), |a| phi[a]);
            if let Some(word) = left.disagreement(&right)? {
                let expected = left.run_word(&word)?;
                let actual = right.run_word(&word)?;
                return Ok(Some(MorphismViolation { op: f.clone(), word, expected, actual }));
            }
        }
        Ok(None)
    }

    pub fn is_gmorphism(&self, dst: &RegularAlgebra, iota: &BTreeMap<Sym, Sym>, phi: &[usize]) -> Result<bool> {
        Ok(self.gmorphism_violation(dst, iota, phi)?.is_none())
    }

    /// `(ker ι, ker φ)`.
    pub fn kernel(&self, iota: &BTreeMap<Sym, Sym>, phi: &[usize]) -> Result<GCongruence> {
        let images = self
            .operators
            .iter()
            .map(|f| iota.get(f).cloned().ok_or_else(|| Error::InvalidParameter(format!("iota misses `{f}`"))))
            .collect::<Result<Vec<_>>>()?;
        if phi.len() != self.size() {
            return Err(Error::InvalidParameter("phi must map every element".into()));
        }
        Ok(GCongruence { sigma: Partition::from_labels(&images), theta: Partition::from_labels(phi) })
    }

    /// `E_f` from (reachable state, transition-monoid element) pairs: the
    /// state after `u` and the state map of `v` determine `a ↦ f_A(u a v)`.
    pub fn elementary_translations(&self, op: usize) -> Vec<Translation> {
        let m = &self.machines[op];
        let monoid = m.transition_monoid();
        let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
        let mut out = Vec::new();
        for (q, u) in m.reachable() {
            for g in &monoid {
                let map: Vec<usize> = (0..self.size()).map(|a| m.output(g.apply(m.step(q, a)))).collect();
                if seen.insert(map.clone(), ()).is_none() {
                    out.push(Translation {
                        map,
                        provenance: vec![Elementary { op: self.operators[op].clone(), u: u.clone(), v: g.witness.clone() }],
                    });
                }
            }
        }
        out
    }

    /// `Tr(A)`: closure of the identity and all elementary translations
    /// under composition.
    pub fn translations(&self) -> TranslationMonoid {
        let elementary: Vec<(Sym, Vec<Translation>)> = (0..self.operators.len())
            .map(|i| (self.operators[i].clone(), self.elementary_translations(i)))
            .collect();
        let generators: Vec<&Translation> = elementary.iter().flat_map(|(_, ts)| ts.iter()).collect();
        let identity = Translation { map: (0..self.size()).collect(), provenance: Vec::new() };
        let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
        seen.insert(identity.map.clone(), ());
        let mut all = vec![identity];
        let mut i = 0;
        while i < all.len() {
            for e in &generators {
                let map = compose_maps(&all[i].map, &e.map);
                if seen.insert(map.clone(), ()).is_none() {
                    let mut provenance = all[i].provenance.clone();
                    provenance.extend(e.provenance.iter().cloned());
                    all.push(Translation { map, provenance });
                }
            }
            i += 1;
        }
        TranslationMonoid { elementary, all }
    }

    fn word_text(&self, w: &[usize]) -> String {
        w.iter().map(|&a| self.elements[a].as_str()).collect::<Vec<_>>().join(" ")
    }

    /// `a0->a1, a1->a0 (via f: u="1", v="")`.
    pub fn describe_translation(&self, t: &Translation) -> String {
        let mut s = t
            .map
            .iter()
            .enumerate()
            .map(|(a, &b)| format!("{}->{}", self.elements[a], self.elements[b]))
            .collect::<Vec<_>>()
            .join(", ");
        if t.provenance.is_empty() {
            s.push_str(" (identity)");
        } else {
            let steps: Vec<String> = t
                .provenance
                .iter()
                .map(|e| format!("{}: u=\"{}\", v=\"{}\"", e.op, self.word_text(&e.u), self.word_text(&e.v)))
                .collect();
            let _ = write!(s, " (via {})", steps.join("; "));
        }
        s
    }
}

impl fmt::Display for RegularAlgebra {
    /// Writes the algebra in the workspace file syntax, named `_`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::workspace::write_algebra(f, "_", self)
    }
}

/// Shared helper for building algebras in tests and fixtures.
pub fn sym(s: &str) -> Sym {
    Arc::from(s)
}
