//! Unranked trees and contexts.
//!
//! A [`Tree`] is either a leaf symbol from `X` or an operator from `Σ`
//! applied to any number of children (possibly none). A [`Context`] is a
//! tree with exactly one occurrence of the hole leaf `@`.
//!
//! Trees order by their canonical rendering (`f(g(y),x,f)`, no spaces), so
//! every set-valued abstraction below is a `BTreeSet<Tree>` sorted the way
//! it prints.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub type Sym = Arc<str>;

/// Reserved name of the hole leaf in contexts.
pub const HOLE: &str = "@";

pub type TreeSet = BTreeSet<Tree>;

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Operator alphabet `Σ` and leaf alphabet `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolTable {
    operators: Vec<Sym>,
    leaves: Vec<Sym>,
}

impl SymbolTable {
    pub fn new<S: AsRef<str>>(operators: &[S], leaves: &[S]) -> Result<Self> {
        if operators.is_empty() {
            return Err(Error::InvalidTable("the operator alphabet is empty".into()));
        }
        let mut seen = BTreeSet::new();
        for name in operators.iter().chain(leaves.iter()) {
            let name = name.as_ref();
            if !valid_name(name) {
                return Err(Error::InvalidTable(format!("`{name}` is not a valid symbol name")));
            }
            if !seen.insert(name.to_string()) {
                return Err(Error::InvalidTable(format!("`{name}` declared twice")));
            }
        }
        Ok(SymbolTable {
            operators: operators.iter().map(|s| Sym::from(s.as_ref())).collect(),
            leaves: leaves.iter().map(|s| Sym::from(s.as_ref())).collect(),
        })
    }

    pub fn operators(&self) -> &[Sym] {
        &self.operators
    }

    pub fn leaves(&self) -> &[Sym] {
        &self.leaves
    }

    pub fn is_operator(&self, name: &str) -> bool {
        self.operators.iter().any(|s| &**s == name)
    }

    pub fn is_leaf(&self, name: &str) -> bool {
        self.leaves.iter().any(|s| &**s == name)
    }

    fn operator(&self, name: &str) -> Option<&Sym> {
        self.operators.iter().find(|s| &***s == name)
    }

    fn leaf(&self, name: &str) -> Option<&Sym> {
        self.leaves.iter().find(|s| &***s == name)
    }

    /// Checks that every symbol of `t` belongs to this table.
    pub fn check_tree(&self, t: &Tree) -> Result<()> {
        match t {
            Tree::Leaf(x) if self.is_leaf(x) => Ok(()),
            Tree::Leaf(x) => Err(Error::UnknownSymbol(x.to_string())),
            Tree::Node(f, children) => {
                if !self.is_operator(f) {
                    return Err(Error::UnknownSymbol(f.to_string()));
                }
                children.iter().try_for_each(|c| self.check_tree(c))
            }
        }
    }

    pub fn check_context(&self, p: &Context) -> Result<()> {
        fn go(table: &SymbolTable, t: &Tree) -> Result<()> {
            match t {
                Tree::Leaf(x) if &**x == HOLE || table.is_leaf(x) => Ok(()),
                Tree::Leaf(x) => Err(Error::UnknownSymbol(x.to_string())),
                Tree::Node(f, children) => {
                    if !table.is_operator(f) {
                        return Err(Error::UnknownSymbol(f.to_string()));
                    }
                    children.iter().try_for_each(|c| go(table, c))
                }
            }
        }
        go(self, p.as_tree())
    }
}

/// An unranked tree. `Node(f, vec![])` is the one-node tree `f`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf(Sym),
    Node(Sym, Vec<Tree>),
}

impl Tree {
    pub fn leaf(name: &str) -> Tree {
        Tree::Leaf(Sym::from(name))
    }

    pub fn node(name: &str, children: Vec<Tree>) -> Tree {
        Tree::Node(Sym::from(name), children)
    }

    pub fn label(&self) -> &Sym {
        match self {
            Tree::Leaf(s) | Tree::Node(s, _) => s,
        }
    }

    pub fn children(&self) -> &[Tree] {
        match self {
            Tree::Leaf(_) => &[],
            Tree::Node(_, c) => c,
        }
    }

    pub fn height(&self) -> usize {
        self.children().iter().map(|c| c.height() + 1).max().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        1 + self.children().iter().map(Tree::size).sum::<usize>()
    }

    /// Label of the top node.
    pub fn root(&self) -> &str {
        self.label()
    }

    /// `(height, root, size)` in one call.
    pub fn measures(&self) -> (usize, &str, usize) {
        (self.height(), self.root(), self.size())
    }

    fn hole_count(&self) -> usize {
        match self {
            Tree::Leaf(x) => usize::from(&**x == HOLE),
            Tree::Node(_, c) => c.iter().map(Tree::hole_count).sum(),
        }
    }

    /// All subtrees, including the tree itself (with repetitions).
    pub fn subtrees(&self) -> Vec<&Tree> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            out.push(t);
            stack.extend(t.children().iter().rev());
        }
        out
    }

    fn render_bytes(&self) -> RenderBytes<'_> {
        RenderBytes { stack: vec![Step::Tree(self)], cur: &[] }
    }
}

enum Step<'a> {
    Tree(&'a Tree),
    Byte(u8),
}

/// Lazily produces the canonical rendering, so comparisons never allocate
/// a string.
struct RenderBytes<'a> {
    stack: Vec<Step<'a>>,
    cur: &'a [u8],
}

impl Iterator for RenderBytes<'_> {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        loop {
            if let Some((&b, rest)) = self.cur.split_first() {
                self.cur = rest;
                return Some(b);
            }
            match self.stack.pop()? {
                Step::Byte(b) => return Some(b),
                Step::Tree(Tree::Leaf(s)) => self.cur = s.as_bytes(),
                Step::Tree(Tree::Node(s, children)) => {
                    if !children.is_empty() {
                        self.stack.push(Step::Byte(b')'));
                        for (i, c) in children.iter().enumerate().rev() {
                            self.stack.push(Step::Tree(c));
                            if i > 0 {
                                self.stack.push(Step::Byte(b','));
                            }
                        }
                        self.stack.push(Step::Byte(b'('));
                    }
                    self.cur = s.as_bytes();
                }
            }
        }
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.render_bytes().cmp(other.render_bytes()).then_with(|| {
            // Same rendering: only a leaf and a bare operator with the same
            // name can collide, which never happens inside one table.
            let rank = |t: &Tree| matches!(t, Tree::Node(..));
            rank(self).cmp(&rank(other))
        })
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf(s) => f.write_str(s),
            Tree::Node(s, children) => {
                f.write_str(s)?;
                if !children.is_empty() {
                    f.write_str("(")?;
                    for (i, c) in children.iter().enumerate() {
                        if i > 0 {
                            f.write_str(",")?;
                        }
                        write!(f, "{c}")?;
                    }
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

/// A tree with exactly one hole leaf.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Context(Tree);

impl Context {
    /// The bare hole, identity of context composition.
    pub fn hole() -> Context {
        Context(Tree::leaf(HOLE))
    }

    pub fn from_tree(t: Tree) -> Result<Context> {
        match t.hole_count() {
            1 => Ok(Context(t)),
            n => Err(Error::HoleCount(n)),
        }
    }

    pub fn as_tree(&self) -> &Tree {
        &self.0
    }

    pub fn height(&self) -> usize {
        self.0.height()
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn root(&self) -> &str {
        self.0.root()
    }

    /// `p(t)`: the hole replaced by `arg`.
    pub fn plug(&self, arg: &Tree) -> Tree {
        fn go(t: &Tree, arg: &Tree) -> Tree {
            match t {
                Tree::Leaf(x) if &**x == HOLE => arg.clone(),
                Tree::Leaf(_) => t.clone(),
                Tree::Node(f, children) => {
                    Tree::Node(f.clone(), children.iter().map(|c| go(c, arg)).collect())
                }
            }
        }
        go(&self.0, arg)
    }

    /// `p(q)` for a context argument; the result is again a context.
    pub fn plug_context(&self, q: &Context) -> Context {
        Context(self.plug(&q.0))
    }

    /// Monoid product `p·q := q(p)`.
    pub fn compose(&self, q: &Context) -> Context {
        q.plug_context(self)
    }

    /// `p^n` under [`Context::compose`].
    pub fn power(&self, n: usize) -> Context {
        (0..n).fold(Context::hole(), |acc, _| acc.compose(self))
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Result of [`parse_term`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Tree(Tree),
    Context(Context),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    table: &'a SymbolTable,
    allow_hole: bool,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn malformed<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Malformed { pos: self.pos, msg: msg.to_string() })
    }

    fn name(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'@') {
            self.pos += 1;
        } else {
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
            {
                self.pos += 1;
            }
        }
        if start == self.pos {
            return self.malformed("expected a symbol name");
        }
        // Only ASCII bytes were consumed.
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn tree(&mut self) -> Result<Tree> {
        let name = self.name()?.to_string();
        let has_children = self.peek() == Some(b'(');
        if name == HOLE {
            if !self.allow_hole {
                return Err(Error::UnknownSymbol(name));
            }
            if has_children {
                return Err(Error::LeafWithChildren(name));
            }
            return Ok(Tree::leaf(HOLE));
        }
        if let Some(x) = self.table.leaf(&name) {
            if has_children {
                return Err(Error::LeafWithChildren(name));
            }
            return Ok(Tree::Leaf(x.clone()));
        }
        let Some(f) = self.table.operator(&name).cloned() else {
            return Err(Error::UnknownSymbol(name));
        };
        let mut children = Vec::new();
        if has_children {
            self.pos += 1;
            loop {
                children.push(self.tree()?);
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return self.malformed("expected `,` or `)`"),
                }
            }
        }
        Ok(Tree::Node(f, children))
    }
}

/// Parses the concrete term syntax `tree ::= leaf | op | op "(" tree ("," tree)* ")"`.
///
/// Whitespace between tokens is ignored. With `allow_hole` the text must
/// contain exactly one `@` and a [`Term::Context`] is returned.
pub fn parse_term(text: &str, table: &SymbolTable, allow_hole: bool) -> Result<Term> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, table, allow_hole };
    if p.peek().is_none() {
        return p.malformed("empty term");
    }
    let t = p.tree()?;
    if p.peek().is_some() {
        return p.malformed("trailing input");
    }
    if allow_hole {
        Context::from_tree(t).map(Term::Context)
    } else {
        Ok(Term::Tree(t))
    }
}

pub fn parse_tree(text: &str, table: &SymbolTable) -> Result<Tree> {
    match parse_term(text, table, false)? {
        Term::Tree(t) => Ok(t),
        Term::Context(_) => unreachable!(),
    }
}

pub fn parse_context(text: &str, table: &SymbolTable) -> Result<Context> {
    match parse_term(text, table, true)? {
        Term::Context(p) => Ok(p),
        Term::Tree(_) => unreachable!(),
    }
}

/// Root segment `rt_k`; `Empty` is the `ε` value of `rt_0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootSeg {
    Empty,
    Tree(Tree),
}

impl fmt::Display for RootSeg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootSeg::Empty => f.write_str("ε"),
            RootSeg::Tree(t) => t.fmt(f),
        }
    }
}

fn rt_tree(t: &Tree, k: usize) -> Tree {
    debug_assert!(k >= 1);
    match t {
        Tree::Leaf(_) => t.clone(),
        Tree::Node(f, _) if k == 1 => Tree::Node(f.clone(), Vec::new()),
        Tree::Node(f, children) => {
            if t.height() < k {
                t.clone()
            } else {
                Tree::Node(f.clone(), children.iter().map(|c| rt_tree(c, k - 1)).collect())
            }
        }
    }
}

/// `rt_k(t)`.
pub fn root_segment(t: &Tree, k: usize) -> RootSeg {
    if k == 0 {
        RootSeg::Empty
    } else {
        RootSeg::Tree(rt_tree(t, k))
    }
}

/// `st_k(t)`: distinct subtrees of height `< k`.
pub fn bounded_subtrees(t: &Tree, k: usize) -> TreeSet {
    fn go(t: &Tree, k: usize, out: &mut TreeSet) -> usize {
        let h = t.children().iter().map(|c| go(c, k, out) + 1).max().unwrap_or(0);
        if h < k {
            out.insert(t.clone());
        }
        h
    }
    let mut out = TreeSet::new();
    go(t, k, &mut out);
    out
}

/// `fork_k(t)` for `k ≥ 2`.
pub fn forks(t: &Tree, k: usize) -> Result<TreeSet> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("forks need k >= 2, got {k}")));
    }
    fn go(t: &Tree, k: usize, out: &mut TreeSet) {
        if t.height() + 1 < k {
            return;
        }
        out.insert(rt_tree(t, k));
        for c in t.children() {
            go(c, k, out);
        }
    }
    let mut out = TreeSet::new();
    go(t, k, &mut out);
    Ok(out)
}

/// Homeomorphic embedding `s ⊴ t`.
///
/// Descending into a node requires the same operator and the same number
/// of children, so a bare `f` embeds into `f(t_1,…,t_m)` (`m > 0`) only
/// when a bare `f` occurs further down.
pub fn embeds(s: &Tree, t: &Tree) -> bool {
    if s == t {
        return true;
    }
    if let (Tree::Node(f, ss), Tree::Node(g, ts)) = (s, t) {
        if f == g && ss.len() == ts.len() && ss.iter().zip(ts).all(|(a, b)| embeds(a, b)) {
            return true;
        }
    }
    t.children().iter().any(|c| embeds(s, c))
}

/// `P_k(t) = { s : s ⊴ t, hg(s) < k }`.
pub fn pieces(t: &Tree, k: usize) -> TreeSet {
    if k == 0 {
        return TreeSet::new();
    }
    match t {
        Tree::Leaf(_) => std::iter::once(t.clone()).collect(),
        Tree::Node(f, children) => {
            let mut out = TreeSet::new();
            let mut lower = Vec::with_capacity(children.len());
            for c in children {
                out.extend(pieces(c, k));
                lower.push(pieces(c, k - 1));
            }
            // All f(s_1,…,s_m) with s_i ∈ P_{k-1}(t_i).
            let mut combos: Vec<Vec<Tree>> = vec![Vec::new()];
            for choices in &lower {
                let mut next = Vec::with_capacity(combos.len() * choices.len());
                for prefix in &combos {
                    for s in choices {
                        let mut v = prefix.clone();
                        v.push(s.clone());
                        next.push(v);
                    }
                }
                combos = next;
            }
            out.extend(combos.into_iter().map(|c| Tree::Node(f.clone(), c)));
            out
        }
    }
}

/// The tree abstractions whose equality defines each example congruence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KeyKind {
    /// `rt_k`
    Def(usize),
    /// `st_k`
    RDef(usize),
    /// `(st_h, rt_k)`
    GDef { h: usize, k: usize },
    /// `(st_{k-1}, rt_{k-1}, fork_k)`, `k ≥ 2`
    Loc(usize),
    /// `P_k`
    Pwt(usize),
}

impl KeyKind {
    pub fn validate(self) -> Result<()> {
        match self {
            KeyKind::Loc(k) if k < 2 => {
                Err(Error::InvalidParameter(format!("Loc needs k >= 2, got {k}")))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for KeyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KeyKind::Def(k) => write!(f, "Def {k}"),
            KeyKind::RDef(k) => write!(f, "RDef {k}"),
            KeyKind::GDef { h, k } => write!(f, "GDef {h} {k}"),
            KeyKind::Loc(k) => write!(f, "Loc {k}"),
            KeyKind::Pwt(k) => write!(f, "Pwt {k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AbstractionKey {
    RootSeg(RootSeg),
    SubtreeSet(TreeSet),
    GenDefPair(TreeSet, RootSeg),
    ForkTriple(TreeSet, RootSeg, TreeSet),
    PieceSet(TreeSet),
}

fn write_set(f: &mut fmt::Formatter<'_>, set: &TreeSet) -> fmt::Result {
    f.write_str("{")?;
    for (i, t) in set.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{t}")?;
    }
    f.write_str("}")
}

impl fmt::Display for AbstractionKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbstractionKey::RootSeg(r) => r.fmt(f),
            AbstractionKey::SubtreeSet(s) | AbstractionKey::PieceSet(s) => write_set(f, s),
            AbstractionKey::GenDefPair(s, r) => {
                f.write_str("(")?;
                write_set(f, s)?;
                write!(f, ";{r})")
            }
            AbstractionKey::ForkTriple(s, r, k) => {
                f.write_str("(")?;
                write_set(f, s)?;
                write!(f, ";{r};")?;
                write_set(f, k)?;
                f.write_str(")")
            }
        }
    }
}

/// Two trees are related by `kind`'s congruence iff their keys are equal.
pub fn abstraction_key(t: &Tree, kind: KeyKind) -> Result<AbstractionKey> {
    kind.validate()?;
    Ok(match kind {
        KeyKind::Def(k) => AbstractionKey::RootSeg(root_segment(t, k)),
        KeyKind::RDef(k) => AbstractionKey::SubtreeSet(bounded_subtrees(t, k)),
        KeyKind::GDef { h, k } => {
            AbstractionKey::GenDefPair(bounded_subtrees(t, h), root_segment(t, k))
        }
        KeyKind::Loc(k) => AbstractionKey::ForkTriple(
            bounded_subtrees(t, k - 1),
            root_segment(t, k - 1),
            forks(t, k)?,
        ),
        KeyKind::Pwt(k) => AbstractionKey::PieceSet(pieces(t, k)),
    })
}

/// The g-morphism of term algebras fixed by an operator map `ι : Σ → Ω` and
/// a leaf map `α : X → T_Ω(Y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermGMorphism {
    source: SymbolTable,
    target: SymbolTable,
    iota: BTreeMap<Sym, Sym>,
    alpha: BTreeMap<Sym, Tree>,
}

impl TermGMorphism {
    pub fn new(
        source: SymbolTable,
        target: SymbolTable,
        iota: BTreeMap<Sym, Sym>,
        alpha: BTreeMap<Sym, Tree>,
    ) -> Result<Self> {
        for f in source.operators() {
            match iota.get(f) {
                None => return Err(Error::InvalidParameter(format!("iota misses `{f}`"))),
                Some(g) if !target.is_operator(g) => {
                    return Err(Error::UnknownSymbol(g.to_string()))
                }
                _ => {}
            }
        }
        for x in source.leaves() {
            match alpha.get(x) {
                None => return Err(Error::InvalidParameter(format!("alpha misses `{x}`"))),
                Some(t) => target.check_tree(t)?,
            }
        }
        if iota.len() != source.operators().len() || alpha.len() != source.leaves().len() {
            return Err(Error::InvalidParameter(
                "g-morphism maps symbols outside the source table".into(),
            ));
        }
        Ok(TermGMorphism { source, target, iota, alpha })
    }

    /// `ι_X`: relabel operators, keep leaves (the target shares `X`).
    pub fn relabeling(
        source: SymbolTable,
        target: SymbolTable,
        iota: BTreeMap<Sym, Sym>,
    ) -> Result<Self> {
        let alpha = source.leaves().iter().map(|x| (x.clone(), Tree::Leaf(x.clone()))).collect();
        Self::new(source, target, iota, alpha)
    }

    pub fn identity(table: SymbolTable) -> Self {
        let iota = table.operators().iter().map(|f| (f.clone(), f.clone())).collect();
        Self::relabeling(table.clone(), table, iota).expect("identity is total")
    }

    pub fn source(&self) -> &SymbolTable {
        &self.source
    }

    pub fn target(&self) -> &SymbolTable {
        &self.target
    }

    pub fn iota(&self) -> &BTreeMap<Sym, Sym> {
        &self.iota
    }

    pub fn alpha(&self) -> &BTreeMap<Sym, Tree> {
        &self.alpha
    }

    pub fn apply(&self, t: &Tree) -> Result<Tree> {
        match t {
            Tree::Leaf(x) => {
                self.alpha.get(x).cloned().ok_or_else(|| Error::UnknownSymbol(x.to_string()))
            }
            Tree::Node(f, children) => {
                let g = self.iota.get(f).ok_or_else(|| Error::UnknownSymbol(f.to_string()))?;
                let children = children.iter().map(|c| self.apply(c)).collect::<Result<_>>()?;
                Ok(Tree::Node(g.clone(), children))
            }
        }
    }
}

/// Lists `(part sizes)` of `total` into `1..=max_parts` positive parts.
fn compositions(total: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, parts_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            return;
        }
        if parts_left == 0 {
            return;
        }
        for first in 1..=rest {
            cur.push(first);
            go(rest - first, parts_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, max_parts, &mut Vec::new(), &mut out);
    out
}

fn product_of(lists: &[&[Tree]]) -> Vec<Vec<Tree>> {
    let mut combos: Vec<Vec<Tree>> = vec![Vec::new()];
    for list in lists {
        let mut next = Vec::with_capacity(combos.len() * list.len());
        for prefix in &combos {
            for t in list.iter() {
                let mut v = Vec::with_capacity(lists.len());
                v.extend_from_slice(prefix);
                v.push(t.clone());
                next.push(v);
            }
        }
        combos = next;
    }
    combos
}

fn trees_by_size(table: &SymbolTable, max_size: usize, max_arity: usize) -> Vec<Vec<Tree>> {
    let mut by_size: Vec<Vec<Tree>> = vec![Vec::new(); max_size + 1];
    if max_size == 0 {
        return by_size;
    }
    by_size[1] = table
        .leaves()
        .iter()
        .map(|x| Tree::Leaf(x.clone()))
        .chain(table.operators().iter().map(|f| Tree::Node(f.clone(), Vec::new())))
        .collect();
    for n in 2..=max_size {
        let mut level = Vec::new();
        for parts in compositions(n - 1, max_arity) {
            let lists: Vec<&[Tree]> = parts.iter().map(|&p| by_size[p].as_slice()).collect();
            let combos = product_of(&lists);
            for f in table.operators() {
                level.extend(combos.iter().map(|c| Tree::Node(f.clone(), c.clone())));
            }
        }
        by_size[n] = level;
    }
    by_size
}

/// Enumeration order within one size: leaves first, then operator-rooted
/// trees, each group by rendering.
pub fn enumeration_order(a: &Tree, b: &Tree) -> Ordering {
    let is_node = |t: &Tree| matches!(t, Tree::Node(..));
    is_node(a).cmp(&is_node(b)).then_with(|| a.cmp(b))
}

/// All trees with at most `max_size` nodes and node arity at most
/// `max_arity`, ordered by size, then leaves before operator-rooted trees,
/// then rendering.
pub fn enumerate_trees(table: &SymbolTable, max_size: usize, max_arity: usize) -> Vec<Tree> {
    trees_by_size(table, max_size, max_arity)
        .into_iter()
        .flat_map(|mut level| {
            level.sort_by(enumeration_order);
            level
        })
        .collect()
}

/// All contexts within the same bounds (the hole counts as a node).
pub fn enumerate_contexts(table: &SymbolTable, max_size: usize, max_arity: usize) -> Vec<Context> {
    if max_size == 0 {
        return Vec::new();
    }
    let trees = trees_by_size(table, max_size, max_arity);
    let mut ctx_by_size: Vec<Vec<Tree>> = vec![Vec::new(); max_size + 1];
    ctx_by_size[1] = vec![Tree::leaf(HOLE)];
    for n in 2..=max_size {
        let mut level = Vec::new();
        for parts in compositions(n - 1, max_arity) {
            for hole_at in 0..parts.len() {
                let lists: Vec<&[Tree]> = parts
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| if i == hole_at { ctx_by_size[p].as_slice() } else { trees[p].as_slice() })
                    .collect();
                let combos = product_of(&lists);
                for f in table.operators() {
                    level.extend(combos.iter().map(|c| Tree::Node(f.clone(), c.clone())));
                }
            }
        }
        ctx_by_size[n] = level;
    }
    ctx_by_size
        .into_iter()
        .flat_map(|mut level| {
            level.sort_by(enumeration_order);
            level.into_iter().map(Context)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> SymbolTable {
        SymbolTable::new(&["f", "g"], &["x", "y"]).unwrap()
    }

    fn t(s: &str) -> Tree {
        parse_tree(s, &table()).unwrap()
    }

    fn set(items: &[&str]) -> TreeSet {
        items.iter().map(|s| t(s)).collect()
    }

    #[test]
    fn parse_and_render() {
        let tree = t("f( g(y) , x,f )");
        assert_eq!(tree.to_string(), "f(g(y),x,f)");
        assert_eq!(tree.children().len(), 3);
        assert_eq!(t("x"), Tree::leaf("x"));
        assert_eq!(t("f"), Tree::node("f", vec![]));
        let p = parse_context("f(@,f(g))", &table()).unwrap();
        assert_eq!(p.to_string(), "f(@,f(g))");
    }

    #[test]
    fn parse_errors() {
        let tb = table();
        assert_eq!(parse_tree("h(x)", &tb), Err(Error::UnknownSymbol("h".into())));
        assert_eq!(parse_tree("x(y)", &tb), Err(Error::LeafWithChildren("x".into())));
        assert_eq!(parse_context("f(x)", &tb), Err(Error::HoleCount(0)));
        assert_eq!(parse_context("f(@,@)", &tb), Err(Error::HoleCount(2)));
        assert!(matches!(parse_tree("f(x", &tb), Err(Error::Malformed { .. })));
        assert!(matches!(parse_tree("f()", &tb), Err(Error::Malformed { .. })));
        assert!(matches!(parse_tree("f(x))", &tb), Err(Error::Malformed { .. })));
        assert!(matches!(parse_tree("", &tb), Err(Error::Malformed { .. })));
        assert_eq!(parse_tree("f(@)", &tb), Err(Error::UnknownSymbol("@".into())));
    }

    #[test]
    fn table_validation() {
        assert!(SymbolTable::new::<&str>(&[], &["x"]).is_err());
        assert!(SymbolTable::new(&["f"], &["f"]).is_err());
        assert!(SymbolTable::new(&["f-g"], &[]).is_err());
        assert!(SymbolTable::new(&["@"], &[]).is_err());
        assert!(SymbolTable::new(&["f"], &[]).is_ok());
    }

    #[test]
    fn measures() {
        assert_eq!(t("f(g(y),x,f)").measures(), (2, "f", 5));
        assert_eq!(t("x").measures(), (0, "x", 1));
        assert_eq!(t("f(x,f(y))").measures(), (2, "f", 4));
    }

    #[test]
    fn substitution() {
        let p = parse_context("f(@,f(g))", &table()).unwrap();
        let q = parse_context("g(@)", &table()).unwrap();
        assert_eq!(p.plug(&t("f(g(y),x,f)")).to_string(), "f(f(g(y),x,f),f(g))");
        assert_eq!(p.plug_context(&q).to_string(), "f(g(@),f(g))");
        assert_eq!(p.compose(&q).to_string(), "g(f(@,f(g)))");
        assert_eq!(p.compose(&Context::hole()), p);
        assert_eq!(Context::hole().compose(&p), p);
        assert_eq!(q.power(3).to_string(), "g(g(g(@)))");
        assert_eq!(q.power(0), Context::hole());
    }

    #[test]
    fn root_segments() {
        assert_eq!(root_segment(&t("f(g(y),x,f)"), 2), RootSeg::Tree(t("f(g,x,f)")));
        assert_eq!(root_segment(&t("f(g(y),x,f)"), 0), RootSeg::Empty);
        assert_eq!(root_segment(&t("f(x,f(y))"), 3), RootSeg::Tree(t("f(x,f(y))")));
        assert_eq!(root_segment(&t("f(x,f(y))"), 1), RootSeg::Tree(t("f")));
        assert_eq!(root_segment(&t("y"), 1), RootSeg::Tree(t("y")));
    }

    #[test]
    fn subtree_sets() {
        let tree = t("f(g(y),x,f)");
        assert_eq!(bounded_subtrees(&tree, 1), set(&["y", "x", "f"]));
        assert_eq!(bounded_subtrees(&tree, 2), set(&["g(y)", "y", "x", "f"]));
        assert!(bounded_subtrees(&tree, 0).is_empty());
    }

    #[test]
    fn fork_sets() {
        let tree = t("f(x,f(y))");
        assert_eq!(forks(&tree, 2).unwrap(), set(&["f(x,f)", "f(y)"]));
        assert_eq!(forks(&tree, 3).unwrap(), set(&["f(x,f(y))"]));
        for k in 4..8 {
            assert!(forks(&tree, k).unwrap().is_empty());
        }
        assert!(forks(&tree, 1).is_err());
    }

    #[test]
    fn embedding_and_pieces() {
        let tree = t("f(x,f(y))");
        assert!(embeds(&t("f(y)"), &tree));
        assert!(!embeds(&t("f"), &tree));
        assert!(embeds(&t("f(x,y)"), &tree));
        assert!(!embeds(&t("f(y,x)"), &tree));
        assert_eq!(pieces(&tree, 2), set(&["x", "y", "f(y)", "f(x,y)"]));
        assert!(pieces(&tree, 0).is_empty());
        assert_eq!(pieces(&t("f"), 1), set(&["f"]));
    }

    #[test]
    fn keys() {
        let tree = t("f(x,f(y))");
        let key = abstraction_key(&tree, KeyKind::Loc(2)).unwrap();
        assert_eq!(
            key,
            AbstractionKey::ForkTriple(
                set(&["x", "y"]),
                RootSeg::Tree(t("f")),
                set(&["f(x,f)", "f(y)"])
            )
        );
        assert_eq!(key.to_string(), "({x,y};f;{f(x,f),f(y)})");
        assert_eq!(
            abstraction_key(&t("x"), KeyKind::Pwt(1)).unwrap(),
            AbstractionKey::PieceSet(set(&["x"]))
        );
        assert_eq!(
            abstraction_key(&tree, KeyKind::Def(0)).unwrap(),
            abstraction_key(&t("y"), KeyKind::Def(0)).unwrap()
        );
        assert!(abstraction_key(&tree, KeyKind::Loc(1)).is_err());
    }

    #[test]
    fn term_gmorphisms() {
        let src = table();
        let dst = SymbolTable::new(&["h"], &["y"]).unwrap();
        let iota = [("f", "h"), ("g", "h")].iter().map(|(a, b)| (Sym::from(*a), Sym::from(*b))).collect();
        let alpha = [("x", "y"), ("y", "h(y)")]
            .iter()
            .map(|(a, b)| (Sym::from(*a), parse_tree(b, &dst).unwrap()))
            .collect();
        let m = TermGMorphism::new(src.clone(), dst.clone(), iota, alpha).unwrap();
        assert_eq!(m.apply(&t("f(g(y),x,f)")).unwrap().to_string(), "h(h(h(y)),y,h)");

        let id = TermGMorphism::identity(src.clone());
        assert_eq!(id.apply(&t("f(g(y),x,f)")).unwrap(), t("f(g(y),x,f)"));

        let one = SymbolTable::new(&["f"], &["x"]).unwrap();
        let two = SymbolTable::new(&["g"], &["x"]).unwrap();
        let relabel = TermGMorphism::relabeling(
            one.clone(),
            two,
            [(Sym::from("f"), Sym::from("g"))].into_iter().collect(),
        )
        .unwrap();
        assert_eq!(relabel.apply(&parse_tree("f(x,f)", &one).unwrap()).unwrap().to_string(), "g(x,g)");

        let partial = TermGMorphism::new(src, dst, BTreeMap::new(), BTreeMap::new());
        assert!(partial.is_err());
    }

    #[test]
    fn enumeration() {
        let fx = SymbolTable::new(&["f"], &["x"]).unwrap();
        let names: Vec<String> = enumerate_trees(&fx, 2, 2).iter().map(|t| t.to_string()).collect();
        assert_eq!(names, ["x", "f", "f(f)", "f(x)"]);
        let f = SymbolTable::new::<&str>(&["f"], &[]).unwrap();
        let names: Vec<String> = enumerate_trees(&f, 1, 2).iter().map(|t| t.to_string()).collect();
        assert_eq!(names, ["f"]);
        let names: Vec<String> = enumerate_contexts(&f, 2, 2).iter().map(|t| t.to_string()).collect();
        assert_eq!(names, ["@", "f(@)"]);
    }

    #[test]
    fn enumeration_counts() {
        // Counts for two operators and two leaves, arity <= 3.
        let trees = enumerate_trees(&table(), 5, 3);
        assert_eq!(trees.len(), 4 + 8 + 48 + 352 + 2368);
        let ctx = enumerate_contexts(&table(), 5, 3);
        assert_eq!(ctx.len(), 1 + 2 + 20 + 200 + 1552);
        let unique: BTreeSet<_> = trees.iter().collect();
        assert_eq!(unique.len(), trees.len());
    }
}
