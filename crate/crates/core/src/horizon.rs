//! Complete deterministic Moore machines over small integer alphabets.
//!
//! A machine computes a total function `alphabet* → outputs`; each operator
//! of a regular algebra is one such machine reading the values of a node's
//! children from left to right.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::partition::Partition;

type Pair = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MooreMachine {
    alphabet_size: usize,
    output_size: usize,
    start: usize,
    /// `delta[q * alphabet_size + a]`
    delta: Vec<usize>,
    out: Vec<usize>,
    state_names: Vec<String>,
}

impl MooreMachine {
    /// Builds a machine from a transition table `delta[q][a]` and outputs
    /// `out[q]`. Every row must be complete.
    pub fn new(
        alphabet_size: usize,
        output_size: usize,
        start: usize,
        delta: Vec<Vec<usize>>,
        out: Vec<usize>,
    ) -> Result<MooreMachine> {
        let n = out.len();
        if n == 0 {
            return Err(Error::InvalidMachine("a machine needs at least one state".into()));
        }
        if delta.len() != n {
            return Err(Error::InvalidMachine(format!(
                "{} transition rows for {n} states",
                delta.len()
            )));
        }
        if start >= n {
            return Err(Error::InvalidMachine(format!("start state {start} out of range")));
        }
        let mut flat = Vec::with_capacity(n * alphabet_size);
        for (q, row) in delta.iter().enumerate() {
            if row.len() != alphabet_size {
                return Err(Error::InvalidMachine(format!(
                    "state {q} has {} transitions, expected {alphabet_size}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&t| t >= n) {
                return Err(Error::InvalidMachine(format!("transition to missing state {bad}")));
            }
            flat.extend_from_slice(row);
        }
        if let Some(&bad) = out.iter().find(|&&o| o >= output_size) {
            return Err(Error::InvalidMachine(format!("output {bad} out of range")));
        }
        Ok(MooreMachine {
            alphabet_size,
            output_size,
            start,
            delta: flat,
            out,
            state_names: (0..n).map(|q| format!("q{q}")).collect(),
        })
    }

    /// One-state machine with constant output.
    pub fn constant(alphabet_size: usize, output_size: usize, value: usize) -> Result<MooreMachine> {
        MooreMachine::new(alphabet_size, output_size, 0, vec![vec![0; alphabet_size]], vec![value])
    }

    pub fn with_state_names(mut self, names: Vec<String>) -> Result<MooreMachine> {
        if names.len() != self.num_states() {
            return Err(Error::InvalidMachine("wrong number of state names".into()));
        }
        self.state_names = names;
        Ok(self)
    }

    pub fn state_names(&self) -> &[String] {
        &self.state_names
    }

    pub fn num_states(&self) -> usize {
        self.out.len()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn output_size(&self) -> usize {
        self.output_size
    }

    pub fn start(&self) -> usize {
        self.start
    }

    #[inline]
    pub fn step(&self, q: usize, a: usize) -> usize {
        self.delta[q * self.alphabet_size + a]
    }

    #[inline]
    pub fn output(&self, q: usize) -> usize {
        self.out[q]
    }

    pub fn run_from(&self, q: usize, word: &[usize]) -> usize {
        word.iter().fold(q, |q, &a| self.step(q, a))
    }

    /// `out(δ*(start, w))`.
    pub fn run_word(&self, word: &[usize]) -> Result<usize> {
        if let Some(&bad) = word.iter().find(|&&a| a >= self.alphabet_size) {
            return Err(Error::LetterOutOfRange(bad));
        }
        Ok(self.output(self.run_from(self.start, word)))
    }

    /// Reachable states in breadth-first order, each with a shortest word
    /// reaching it.
    pub fn reachable(&self) -> Vec<(usize, Vec<usize>)> {
        self.reachable_over(&(0..self.alphabet_size).collect::<Vec<_>>())
    }

    /// Like [`MooreMachine::reachable`] but reading only `letters`.
    pub fn reachable_over(&self, letters: &[usize]) -> Vec<(usize, Vec<usize>)> {
        let mut seen = vec![false; self.num_states()];
        let mut order = vec![(self.start, Vec::new())];
        seen[self.start] = true;
        let mut i = 0;
        while i < order.len() {
            let (q, word) = order[i].clone();
            for &a in letters {
                let r = self.step(q, a);
                if !seen[r] {
                    seen[r] = true;
                    let mut w = word.clone();
                    w.push(a);
                    order.push((r, w));
                }
            }
            i += 1;
        }
        order
    }

    /// Renumbers states in breadth-first order from the start state and
    /// drops unreachable ones.
    pub fn restrict_reachable(&self) -> MooreMachine {
        let order: Vec<usize> = self.reachable().into_iter().map(|(q, _)| q).collect();
        let mut index = vec![usize::MAX; self.num_states()];
        for (i, &q) in order.iter().enumerate() {
            index[q] = i;
        }
        let delta = order
            .iter()
            .map(|&q| (0..self.alphabet_size).map(|a| index[self.step(q, a)]).collect())
            .collect();
        let out = order.iter().map(|&q| self.out[q]).collect();
        let names = order.iter().map(|&q| self.state_names[q].clone()).collect();
        MooreMachine::new(self.alphabet_size, self.output_size, 0, delta, out)
            .expect("restriction keeps completeness")
            .with_state_names(names)
            .expect("names match")
    }

    /// Machine over a new alphabet where letter `b` acts as `letter_map(b)`.
    pub fn map_letters(&self, alphabet_size: usize, letter_map: impl Fn(usize) -> usize) -> MooreMachine {
        let delta = (0..self.num_states())
            .map(|q| (0..alphabet_size).map(|b| self.step(q, letter_map(b))).collect())
            .collect();
        MooreMachine::new(alphabet_size, self.output_size, self.start, delta, self.out.clone())
            .expect("letter map keeps completeness")
            .with_state_names(self.state_names.clone())
            .expect("names match")
    }

    /// Machine with outputs post-composed with `output_map`.
    pub fn map_outputs(&self, output_size: usize, output_map: impl Fn(usize) -> usize) -> MooreMachine {
        let mut m = self.clone();
        m.output_size = output_size;
        for o in &mut m.out {
            *o = output_map(*o);
        }
        debug_assert!(m.out.iter().all(|&o| o < output_size));
        m
    }

    /// Componentwise product. Letter `(a1, a2)` is encoded
    /// `a1 * m2.alphabet_size + a2`, output `(o1, o2)` as
    /// `o1 * m2.output_size + o2`. Only reachable pairs are kept.
    pub fn product(&self, other: &MooreMachine) -> MooreMachine {
        let n2 = other.alphabet_size;
        let letters = self.alphabet_size * n2;
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut states = vec![(self.start, other.start)];
        index.insert((self.start, other.start), 0);
        let mut delta: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;
        while i < states.len() {
            let (p, q) = states[i];
            let mut row = Vec::with_capacity(letters);
            for l in 0..letters {
                let next = (self.step(p, l / n2), other.step(q, l % n2));
                let id = *index.entry(next).or_insert_with(|| {
                    states.push(next);
                    states.len() - 1
                });
                row.push(id);
            }
            delta.push(row);
            i += 1;
        }
        let out = states
            .iter()
            .map(|&(p, q)| self.output(p) * other.output_size + other.output(q))
            .collect();
        MooreMachine::new(letters, self.output_size * other.output_size, 0, delta, out)
            .expect("product is complete")
    }

    /// The minimal complete machine computing the same function, with
    /// states in breadth-first order (so equal functions give equal
    /// machines).
    pub fn minimize(&self) -> MooreMachine {
        let m = self.restrict_reachable();
        let n = m.num_states();
        let mut part = Partition::from_labels(&m.out);
        loop {
            let sig: Vec<(usize, Vec<usize>)> = (0..n)
                .map(|q| {
                    (part.block(q), (0..m.alphabet_size).map(|a| part.block(m.step(q, a))).collect())
                })
                .collect();
            let next = Partition::from_labels(&sig);
            if next.num_blocks() == part.num_blocks() {
                break;
            }
            part = next;
        }
        // Blocks are numbered by least member; the reachable order starts
        // at 0, so renumbering by BFS below yields a canonical form.
        let k = part.num_blocks();
        let mut rep = vec![usize::MAX; k];
        for q in 0..n {
            if rep[part.block(q)] == usize::MAX {
                rep[part.block(q)] = q;
            }
        }
        let delta = (0..k)
            .map(|b| (0..m.alphabet_size).map(|a| part.block(m.step(rep[b], a))).collect())
            .collect();
        let out = (0..k).map(|b| m.out[rep[b]]).collect();
        let names = (0..k).map(|b| m.state_names[rep[b]].clone()).collect();
        MooreMachine::new(m.alphabet_size, m.output_size, part.block(m.start), delta, out)
            .expect("quotient is complete")
            .with_state_names(names)
            .expect("names match")
            .restrict_reachable()
    }

    /// A shortest word on which the two machines disagree, or `None` if
    /// they compute the same function.
    pub fn disagreement(&self, other: &MooreMachine) -> Result<Option<Vec<usize>>> {
        if self.alphabet_size != other.alphabet_size {
            return Err(Error::AlphabetMismatch(self.alphabet_size, other.alphabet_size));
        }
        // pair -> (predecessor pair, letter read)
        let mut parent: HashMap<Pair, Option<(Pair, usize)>> = HashMap::new();
        let start = (self.start, other.start);
        parent.insert(start, None);
        let mut queue = VecDeque::from([start]);
        while let Some((p, q)) = queue.pop_front() {
            if self.output(p) != other.output(q) {
                let mut word = Vec::new();
                let mut cur = (p, q);
                while let Some(Some((prev, a))) = parent.get(&cur) {
                    word.push(*a);
                    cur = *prev;
                }
                word.reverse();
                return Ok(Some(word));
            }
            for a in 0..self.alphabet_size {
                let next = (self.step(p, a), other.step(q, a));
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                    e.insert(Some(((p, q), a)));
                    queue.push_back(next);
                }
            }
        }
        Ok(None)
    }

    pub fn equivalent(&self, other: &MooreMachine) -> Result<bool> {
        Ok(self.disagreement(other)?.is_none())
    }

    /// Breadth-first search of the pair machine reading letter pairs
    /// `pairs`. Returns every reachable state pair with a shortest word,
    /// given as indices into `pairs`.
    pub fn pair_reachable(
        &self,
        other: &MooreMachine,
        pairs: &[(usize, usize)],
    ) -> Vec<((usize, usize), Vec<usize>)> {
        let start = (self.start, other.start);
        let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
        seen.insert(start, ());
        let mut order = vec![(start, Vec::new())];
        let mut i = 0;
        while i < order.len() {
            let ((p, q), word) = order[i].clone();
            for (j, &(a, b)) in pairs.iter().enumerate() {
                let next = (self.step(p, a), other.step(q, b));
                if seen.insert(next, ()).is_none() {
                    let mut w = word.clone();
                    w.push(j);
                    order.push((next, w));
                }
            }
            i += 1;
        }
        order
    }

    /// The transition monoid: every state map `g_v : Q → Q` induced by a
    /// word `v`, each with a shortest witness. The identity (witness `ε`)
    /// comes first; the rest follow in breadth-first order.
    pub fn transition_monoid(&self) -> Vec<StateFunction> {
        let n = self.num_states();
        let identity: Vec<usize> = (0..n).collect();
        let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
        seen.insert(identity.clone(), ());
        let mut elems = vec![StateFunction { map: identity, witness: Vec::new() }];
        let mut i = 0;
        while i < elems.len() {
            for a in 0..self.alphabet_size {
                let map: Vec<usize> = elems[i].map.iter().map(|&q| self.step(q, a)).collect();
                if seen.insert(map.clone(), ()).is_none() {
                    let mut witness = elems[i].witness.clone();
                    witness.push(a);
                    elems.push(StateFunction { map, witness });
                }
            }
            i += 1;
        }
        elems
    }

    /// Machine over alphabet classes computing output classes, by subset
    /// construction: a state is the set of states reachable by all words
    /// in a sequence of letter classes. Fails if some subset mixes outputs
    /// from different output classes (the partitions are then not
    /// compatible with the machine).
    pub fn class_quotient(&self, letters: &Partition, outputs: &Partition) -> Result<MooreMachine> {
        if letters.len() != self.alphabet_size {
            return Err(Error::AlphabetMismatch(letters.len(), self.alphabet_size));
        }
        if outputs.len() != self.output_size {
            return Err(Error::InvalidParameter("output partition has the wrong size".into()));
        }
        let classes = letters.blocks();
        let mut index: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
        let start: BTreeSet<usize> = [self.start].into();
        index.insert(start.clone(), 0);
        let mut subsets = vec![start];
        let mut delta: Vec<Vec<usize>> = Vec::new();
        let mut out = Vec::new();
        let mut i = 0;
        while i < subsets.len() {
            let set = subsets[i].clone();
            let mut outs = set.iter().map(|&q| self.output(q));
            let first = outs.next().expect("subsets are nonempty");
            if let Some(other) = outs.find(|&o| !outputs.related(o, first)) {
                return Err(Error::WellDefinedness(first, other));
            }
            out.push(outputs.block(first));
            let mut row = Vec::with_capacity(classes.len());
            for class in &classes {
                let next: BTreeSet<usize> =
                    set.iter().flat_map(|&q| class.iter().map(move |&a| (q, a))).map(|(q, a)| self.step(q, a)).collect();
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        index.insert(next.clone(), subsets.len());
                        subsets.push(next);
                        subsets.len() - 1
                    }
                };
                row.push(id);
            }
            delta.push(row);
            i += 1;
        }
        Ok(MooreMachine::new(classes.len(), outputs.num_blocks(), 0, delta, out)?.minimize())
    }
}

/// An element `g_v` of a transition monoid with a shortest witness `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateFunction {
    pub map: Vec<usize>,
    pub witness: Vec<usize>,
}

impl StateFunction {
    pub fn apply(&self, q: usize) -> usize {
        self.map[q]
    }
}
