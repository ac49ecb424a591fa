//! Workspace files: named symbol tables, algebras, recognizers and term
//! g-morphisms.
//!
//! ```text
//! # parity of the number of x leaves
//! symbols S { operators: f; leaves: x; }
//! algebra parity {
//!   elements: 0 1;
//!   op f { states: q0 q1; start: q0; out: q0->0 q1->1;
//!          delta: q0 0 -> q0, q0 1 -> q1, q1 0 -> q1, q1 1 -> q0; }
//! }
//! recognizer parity-odd { algebra: parity; symbols: S; valuation: x->1; finals: 1; }
//! gmorphism relabel { source: S; target: S; iota: f->f; alpha: x->f(x); }
//! ```
//!
//! Names are runs of characters other than whitespace, `{ } ; : , ( ) "`
//! and `->`; anything else can be written in double quotes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use thiserror::Error;

use crate::algebra::{RegularAlgebra, Valuation};
use crate::error::Error as CoreError;
use crate::horizon::MooreMachine;
use crate::recognizer::Recognizer;
use crate::trees::{parse_tree, Sym, SymbolTable, TermGMorphism};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("machine `{op}` has no transition for state `{state}` on `{letter}`")]
    IncompleteMachine { op: String, state: String, letter: String },
    #[error("{kind} `{name}` is defined twice")]
    DuplicateName { kind: &'static str, name: String },
    #[error("unknown {kind} `{name}`")]
    DanglingReference { kind: &'static str, name: String },
    #[error("{0}")]
    Invalid(#[from] CoreError),
    #[error("cannot read file: {0}")]
    Io(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{file}:{line}: {kind}")]
pub struct LoadError {
    pub file: String,
    pub line: usize,
    pub kind: LoadErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    Punct(char),
    Arrow,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Punct(c) => write!(f, "`{c}`"),
            Tok::Arrow => f.write_str("`->`"),
        }
    }
}

const PUNCT: &[char] = &['{', '}', ';', ':', ',', '(', ')'];

fn is_word_char(c: char) -> bool {
    !c.is_whitespace() && !PUNCT.contains(&c) && c != '"' && c != '#'
}

fn lex(text: &str) -> std::result::Result<Vec<(Tok, usize)>, (usize, String)> {
    let mut toks = Vec::new();
    let mut line = 1;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c == '\n' {
            line += 1;
            chars.next();
        } else if c.is_whitespace() {
            chars.next();
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                chars.next();
            }
        } else if PUNCT.contains(&c) {
            toks.push((Tok::Punct(c), line));
            chars.next();
        } else if c == '"' {
            chars.next();
            let mut w = String::new();
            loop {
                match chars.next() {
                    None | Some('\n') => return Err((line, "unterminated quoted name".into())),
                    Some('"') => break,
                    Some(c) => w.push(c),
                }
            }
            toks.push((Tok::Word(w), line));
        } else {
            let mut w = String::new();
            while let Some(&c) = chars.peek() {
                if !is_word_char(c) {
                    break;
                }
                if c == '-' {
                    let mut ahead = chars.clone();
                    ahead.next();
                    if ahead.peek() == Some(&'>') {
                        break;
                    }
                }
                w.push(c);
                chars.next();
            }
            if w.is_empty() {
                // `->`
                chars.next();
                chars.next();
                toks.push((Tok::Arrow, line));
            } else {
                toks.push((Tok::Word(w), line));
            }
        }
    }
    Ok(toks)
}

/// Recognizers and g-morphisms keep the names they were declared with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognizerEntry {
    pub recognizer: Recognizer,
    pub algebra: String,
    pub symbols: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GMorphismEntry {
    pub morphism: TermGMorphism,
    pub source: String,
    pub target: String,
}

#[derive(Debug, Clone, Default)]
pub struct Workspace {
    pub symbols: BTreeMap<String, SymbolTable>,
    pub algebras: BTreeMap<String, RegularAlgebra>,
    pub recognizers: BTreeMap<String, RecognizerEntry>,
    pub gmorphisms: BTreeMap<String, GMorphismEntry>,
}

struct Parser<'a> {
    file: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

type PResult<T> = std::result::Result<T, LoadError>;

impl<'a> Parser<'a> {
    fn line(&self) -> usize {
        self.toks.get(self.pos).or(self.toks.last()).map_or(1, |t| t.1)
    }

    fn err<T>(&self, kind: LoadErrorKind) -> PResult<T> {
        Err(LoadError { file: self.file.to_string(), line: self.line(), kind })
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> PResult<T> {
        self.err(LoadErrorKind::Syntax(msg.into()))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn expect(&mut self, want: Tok) -> PResult<()> {
        match self.peek() {
            Some(t) if *t == want => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => {
                let msg = format!("expected {want}, found {t}");
                self.syntax(msg)
            }
            None => self.syntax(format!("expected {want}, found end of file")),
        }
    }

    fn word(&mut self) -> PResult<String> {
        match self.peek() {
            Some(Tok::Word(w)) => {
                let w = w.clone();
                self.pos += 1;
                Ok(w)
            }
            Some(t) => {
                let msg = format!("expected a name, found {t}");
                self.syntax(msg)
            }
            None => self.syntax("expected a name, found end of file"),
        }
    }

    fn at(&self, t: Tok) -> bool {
        self.peek() == Some(&t)
    }

    /// `key:` followed by words up to `;`.
    fn word_list(&mut self) -> PResult<Vec<String>> {
        let mut out = Vec::new();
        while !self.at(Tok::Punct(';')) {
            out.push(self.word()?);
        }
        self.pos += 1;
        Ok(out)
    }

    fn field(&mut self, name: &str) -> PResult<()> {
        let line = self.line();
        let w = self.word()?;
        if w != name {
            return Err(LoadError {
                file: self.file.to_string(),
                line,
                kind: LoadErrorKind::Syntax(format!("expected `{name}:`, found `{w}`")),
            });
        }
        self.expect(Tok::Punct(':'))
    }

    /// `a->b, c->d;` or `a->b c->d;`.
    fn arrow_pairs(&mut self, term_values: bool) -> PResult<Vec<(String, String, usize)>> {
        let mut out = Vec::new();
        while !self.at(Tok::Punct(';')) {
            let line = self.line();
            let a = self.word()?;
            self.expect(Tok::Arrow)?;
            let b = if term_values { self.term_text()? } else { self.word()? };
            out.push((a, b, line));
            if self.at(Tok::Punct(',')) {
                self.pos += 1;
            }
        }
        self.pos += 1;
        Ok(out)
    }

    /// Tokens of a term up to a top-level `,` or `;`, rejoined as text.
    fn term_text(&mut self) -> PResult<String> {
        let mut depth = 0usize;
        let mut text = String::new();
        loop {
            match self.peek() {
                None => return self.syntax("unterminated term"),
                Some(Tok::Punct(',' | ';')) if depth == 0 => break,
                Some(Tok::Punct('(')) => {
                    depth += 1;
                    text.push('(');
                }
                Some(Tok::Punct(')')) => {
                    if depth == 0 {
                        return self.syntax("unbalanced `)` in term");
                    }
                    depth -= 1;
                    text.push(')');
                }
                Some(Tok::Punct(',')) => text.push(','),
                Some(Tok::Word(w)) => text.push_str(w),
                Some(t) => {
                    let msg = format!("unexpected {t} in term");
                    return self.syntax(msg);
                }
            }
            self.pos += 1;
        }
        if text.is_empty() {
            return self.syntax("empty term");
        }
        Ok(text)
    }
}

enum Section {
    Symbols { name: String, line: usize, ops: Vec<String>, leaves: Vec<String> },
    Algebra { name: String, line: usize, elements: Vec<String>, ops: Vec<RawMachine> },
    Recognizer { name: String, line: usize, algebra: String, symbols: String, valuation: Vec<(String, String, usize)>, finals: Vec<String> },
    GMorphism { name: String, line: usize, source: String, target: String, iota: Vec<(String, String, usize)>, alpha: Vec<(String, String, usize)> },
}

struct RawMachine {
    op: String,
    line: usize,
    states: Vec<String>,
    start: String,
    out: Vec<(String, String, usize)>,
    delta: Vec<(String, String, String, usize)>,
}

impl Parser<'_> {
    fn sections(&mut self) -> PResult<Vec<Section>> {
        let mut out = Vec::new();
        while self.peek().is_some() {
            let line = self.line();
            let kind = self.word()?;
            let name = self.word()?;
            self.expect(Tok::Punct('{'))?;
            let section = match kind.as_str() {
                "symbols" => {
                    self.field("operators")?;
                    let ops = self.word_list()?;
                    self.field("leaves")?;
                    let leaves = self.word_list()?;
                    Section::Symbols { name, line, ops, leaves }
                }
                "algebra" => {
                    self.field("elements")?;
                    let elements = self.word_list()?;
                    let mut ops = Vec::new();
                    while !self.at(Tok::Punct('}')) {
                        ops.push(self.machine()?);
                    }
                    Section::Algebra { name, line, elements, ops }
                }
                "recognizer" => {
                    self.field("algebra")?;
                    let algebra = self.single()?;
                    self.field("symbols")?;
                    let symbols = self.single()?;
                    self.field("valuation")?;
                    let valuation = self.arrow_pairs(false)?;
                    self.field("finals")?;
                    let finals = self.word_list()?;
                    Section::Recognizer { name, line, algebra, symbols, valuation, finals }
                }
                "gmorphism" => {
                    self.field("source")?;
                    let source = self.single()?;
                    self.field("target")?;
                    let target = self.single()?;
                    self.field("iota")?;
                    let iota = self.arrow_pairs(false)?;
                    self.field("alpha")?;
                    let alpha = self.arrow_pairs(true)?;
                    Section::GMorphism { name, line, source, target, iota, alpha }
                }
                other => {
                    return Err(LoadError {
                        file: self.file.to_string(),
                        line,
                        kind: LoadErrorKind::Syntax(format!("unknown section `{other}`")),
                    })
                }
            };
            self.expect(Tok::Punct('}'))?;
            out.push(section);
        }
        Ok(out)
    }

    fn single(&mut self) -> PResult<String> {
        let w = self.word()?;
        self.expect(Tok::Punct(';'))?;
        Ok(w)
    }

    fn machine(&mut self) -> PResult<RawMachine> {
        let line = self.line();
        let kw = self.word()?;
        if kw != "op" {
            return self.syntax(format!("expected `op`, found `{kw}`"));
        }
        let op = self.word()?;
        self.expect(Tok::Punct('{'))?;
        self.field("states")?;
        let states = self.word_list()?;
        self.field("start")?;
        let start = self.single()?;
        self.field("out")?;
        let out = self.arrow_pairs(false)?;
        self.field("delta")?;
        let mut delta = Vec::new();
        while !self.at(Tok::Punct(';')) && !self.at(Tok::Punct('}')) {
            let l = self.line();
            let q = self.word()?;
            let a = self.word()?;
            self.expect(Tok::Arrow)?;
            let r = self.word()?;
            delta.push((q, a, r, l));
            if self.at(Tok::Punct(',')) {
                self.pos += 1;
            }
        }
        if self.at(Tok::Punct(';')) {
            self.pos += 1;
        }
        self.expect(Tok::Punct('}'))?;
        Ok(RawMachine { op, line, states, start, out, delta })
    }
}

fn index_of(names: &[String], name: &str) -> Option<usize> {
    names.iter().position(|n| n == name)
}

impl Workspace {
    pub fn load_files<P: AsRef<Path>>(paths: &[P]) -> std::result::Result<Workspace, LoadError> {
        let mut ws = Workspace::default();
        for p in paths {
            let p = p.as_ref();
            let text = std::fs::read_to_string(p).map_err(|e| LoadError {
                file: p.display().to_string(),
                line: 0,
                kind: LoadErrorKind::Io(e.to_string()),
            })?;
            ws.load_str(&p.display().to_string(), &text)?;
        }
        Ok(ws)
    }

    /// Adds the sections of one file. Symbol tables and algebras are
    /// resolved before recognizers and g-morphisms, so references may point
    /// forward within the file.
    pub fn load_str(&mut self, file: &str, text: &str) -> std::result::Result<(), LoadError> {
        let toks = lex(text).map_err(|(line, msg)| LoadError {
            file: file.to_string(),
            line,
            kind: LoadErrorKind::Syntax(msg),
        })?;
        let sections = Parser { file, toks, pos: 0 }.sections()?;
        let fail = |line: usize, kind: LoadErrorKind| LoadError { file: file.to_string(), line, kind };
        for s in &sections {
            match s {
                Section::Symbols { name, line, ops, leaves } => {
                    if self.symbols.contains_key(name) {
                        return Err(fail(*line, LoadErrorKind::DuplicateName { kind: "symbols", name: name.clone() }));
                    }
                    let table = SymbolTable::new(ops, leaves).map_err(|e| fail(*line, e.into()))?;
                    self.symbols.insert(name.clone(), table);
                }
                Section::Algebra { name, line, elements, ops } => {
                    if self.algebras.contains_key(name) {
                        return Err(fail(*line, LoadErrorKind::DuplicateName { kind: "algebra", name: name.clone() }));
                    }
                    let alg = build_algebra(elements, ops).map_err(|(l, k)| fail(l.unwrap_or(*line), k))?;
                    self.algebras.insert(name.clone(), alg);
                }
                _ => {}
            }
        }
        for s in &sections {
            match s {
                Section::Recognizer { name, line, algebra, symbols, valuation, finals } => {
                    if self.recognizers.contains_key(name) {
                        return Err(fail(*line, LoadErrorKind::DuplicateName { kind: "recognizer", name: name.clone() }));
                    }
                    let alg = self.algebras.get(algebra).ok_or_else(|| {
                        fail(*line, LoadErrorKind::DanglingReference { kind: "algebra", name: algebra.clone() })
                    })?;
                    let table = self.symbols.get(symbols).ok_or_else(|| {
                        fail(*line, LoadErrorKind::DanglingReference { kind: "symbols", name: symbols.clone() })
                    })?;
                    let mut val = Valuation::new();
                    for (x, a, l) in valuation {
                        let v = alg.element_index(a).map_err(|e| fail(*l, e.into()))?;
                        val.insert(Sym::from(x.as_str()), v);
                    }
                    let fin = finals
                        .iter()
                        .map(|a| alg.element_index(a))
                        .collect::<Result<BTreeSet<usize>, _>>()
                        .map_err(|e| fail(*line, e.into()))?;
                    let rec = Recognizer::new(table.clone(), alg.clone(), val, fin).map_err(|e| fail(*line, e.into()))?;
                    self.recognizers.insert(
                        name.clone(),
                        RecognizerEntry { recognizer: rec, algebra: algebra.clone(), symbols: symbols.clone() },
                    );
                }
                Section::GMorphism { name, line, source, target, iota, alpha } => {
                    if self.gmorphisms.contains_key(name) {
                        return Err(fail(*line, LoadErrorKind::DuplicateName { kind: "gmorphism", name: name.clone() }));
                    }
                    let table = |n: &String| {
                        self.symbols.get(n).cloned().ok_or_else(|| {
                            fail(*line, LoadErrorKind::DanglingReference { kind: "symbols", name: n.clone() })
                        })
                    };
                    let (src, dst) = (table(source)?, table(target)?);
                    let iota_map = iota.iter().map(|(f, g, _)| (Sym::from(f.as_str()), Sym::from(g.as_str()))).collect();
                    let mut alpha_map = BTreeMap::new();
                    for (x, t, l) in alpha {
                        let tree = parse_tree(t, &dst).map_err(|e| fail(*l, e.into()))?;
                        alpha_map.insert(Sym::from(x.as_str()), tree);
                    }
                    let m = TermGMorphism::new(src, dst, iota_map, alpha_map).map_err(|e| fail(*line, e.into()))?;
                    self.gmorphisms.insert(
                        name.clone(),
                        GMorphismEntry { morphism: m, source: source.clone(), target: target.clone() },
                    );
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn recognizer(&self, name: &str) -> Option<&Recognizer> {
        self.recognizers.get(name).map(|e| &e.recognizer)
    }

    /// The whole workspace in file syntax.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (name, t) in &self.symbols {
            write_symbols(&mut s, name, t).expect("string write");
        }
        for (name, a) in &self.algebras {
            write_algebra(&mut s, name, a).expect("string write");
        }
        for (name, e) in &self.recognizers {
            write_recognizer(&mut s, name, &e.recognizer, &e.algebra, &e.symbols).expect("string write");
        }
        for (name, e) in &self.gmorphisms {
            write_gmorphism(&mut s, name, e).expect("string write");
        }
        s
    }
}

type BuildError = (Option<usize>, LoadErrorKind);

fn build_algebra(elements: &[String], ops: &[RawMachine]) -> std::result::Result<RegularAlgebra, BuildError> {
    let n = elements.len();
    let element = |a: &str, line: usize| {
        index_of(elements, a).ok_or((Some(line), LoadErrorKind::Invalid(CoreError::UnknownElement(a.to_string()))))
    };
    let mut names = Vec::new();
    let mut machines = Vec::new();
    for m in ops {
        let state = |q: &str, line: usize| {
            index_of(&m.states, q).ok_or_else(|| {
                (Some(line), LoadErrorKind::Syntax(format!("machine `{}` has no state `{q}`", m.op)))
            })
        };
        let k = m.states.len();
        if k == 0 {
            return Err((Some(m.line), LoadErrorKind::Syntax(format!("machine `{}` has no states", m.op))));
        }
        let start = state(&m.start, m.line)?;
        let mut out = vec![None; k];
        for (q, a, l) in &m.out {
            let qi = state(q, *l)?;
            if out[qi].replace(element(a, *l)?).is_some() {
                return Err((Some(*l), LoadErrorKind::Syntax(format!("state `{q}` has two outputs"))));
            }
        }
        let mut delta = vec![vec![None; n]; k];
        for (q, a, r, l) in &m.delta {
            let (qi, ai, ri) = (state(q, *l)?, element(a, *l)?, state(r, *l)?);
            if delta[qi][ai].replace(ri).is_some() {
                return Err((Some(*l), LoadErrorKind::Syntax(format!("transition `{q} {a}` appears twice"))));
            }
        }
        let out = out
            .iter()
            .enumerate()
            .map(|(q, o)| {
                o.ok_or_else(|| (Some(m.line), LoadErrorKind::Syntax(format!("state `{}` has no output", m.states[q]))))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let mut rows = Vec::with_capacity(k);
        for (q, row) in delta.iter().enumerate() {
            let mut full = Vec::with_capacity(n);
            for (a, r) in row.iter().enumerate() {
                match r {
                    Some(r) => full.push(*r),
                    None => {
                        return Err((
                            Some(m.line),
                            LoadErrorKind::IncompleteMachine {
                                op: m.op.clone(),
                                state: m.states[q].clone(),
                                letter: elements[a].clone(),
                            },
                        ))
                    }
                }
            }
            rows.push(full);
        }
        let machine = MooreMachine::new(n, n, start, rows, out)
            .and_then(|mm| mm.with_state_names(m.states.clone()))
            .map_err(|e| (Some(m.line), e.into()))?;
        names.push(m.op.clone());
        machines.push(machine);
    }
    RegularAlgebra::new(elements.to_vec(), &names, machines).map_err(|e| (None, e.into()))
}

fn needs_quotes(name: &str) -> bool {
    name.is_empty() || name.contains("->") || !name.chars().all(is_word_char)
}

/// A name in file syntax, quoted when needed.
pub fn quote(name: &str) -> String {
    if needs_quotes(name) {
        format!("\"{name}\"")
    } else {
        name.to_string()
    }
}

fn join(names: impl IntoIterator<Item = impl AsRef<str>>) -> String {
    names.into_iter().map(|n| quote(n.as_ref())).collect::<Vec<_>>().join(" ")
}

pub fn write_symbols(w: &mut impl fmt::Write, name: &str, t: &SymbolTable) -> fmt::Result {
    writeln!(w, "symbols {} {{ operators: {}; leaves: {}; }}", quote(name), join(t.operators()), join(t.leaves()))
}

pub fn write_algebra(w: &mut impl fmt::Write, name: &str, a: &RegularAlgebra) -> fmt::Result {
    let el = a.elements();
    writeln!(w, "algebra {} {{", quote(name))?;
    writeln!(w, "  elements: {};", join(el))?;
    for (f, m) in a.operators().iter().zip(a.machines()) {
        let given: BTreeSet<&String> = m.state_names().iter().collect();
        let states: Vec<String> = if given.len() == m.num_states() {
            m.state_names().to_vec()
        } else {
            (0..m.num_states()).map(|q| format!("q{q}")).collect()
        };
        writeln!(w, "  op {} {{", quote(f))?;
        writeln!(w, "    states: {};", join(&states))?;
        writeln!(w, "    start: {};", quote(&states[m.start()]))?;
        let outs: Vec<String> =
            (0..m.num_states()).map(|q| format!("{}->{}", quote(&states[q]), quote(&el[m.output(q)]))).collect();
        writeln!(w, "    out: {};", outs.join(" "))?;
        let mut rows = Vec::new();
        for q in 0..m.num_states() {
            for (b, e) in el.iter().enumerate() {
                rows.push(format!("{} {} -> {}", quote(&states[q]), quote(e), quote(&states[m.step(q, b)])));
            }
        }
        writeln!(w, "    delta: {};", rows.join(", "))?;
        writeln!(w, "  }}")?;
    }
    writeln!(w, "}}")
}

pub fn write_recognizer(
    w: &mut impl fmt::Write,
    name: &str,
    r: &Recognizer,
    algebra: &str,
    symbols: &str,
) -> fmt::Result {
    let el = r.algebra().elements();
    let val: Vec<String> =
        r.valuation().iter().map(|(x, &a)| format!("{}->{}", quote(x), quote(&el[a]))).collect();
    let fin: Vec<&String> = r.finals().iter().map(|&a| &el[a]).collect();
    writeln!(
        w,
        "recognizer {} {{ algebra: {}; symbols: {}; valuation: {}; finals: {}; }}",
        quote(name),
        quote(algebra),
        quote(symbols),
        val.join(", "),
        join(fin)
    )
}

pub fn write_gmorphism(w: &mut impl fmt::Write, name: &str, e: &GMorphismEntry) -> fmt::Result {
    let iota: Vec<String> = e.morphism.iota().iter().map(|(f, g)| format!("{f}->{g}")).collect();
    let alpha: Vec<String> = e.morphism.alpha().iter().map(|(x, t)| format!("{x}->{t}")).collect();
    writeln!(
        w,
        "gmorphism {} {{ source: {}; target: {}; iota: {}; alpha: {}; }}",
        quote(name),
        quote(&e.source),
        quote(&e.target),
        iota.join(", "),
        alpha.join(", ")
    )
}

/// A self-contained file for one recognizer: its symbols as
/// `<name>_symbols`, its algebra as `<name>_algebra`, then the recognizer.
pub fn dump_recognizer(name: &str, r: &Recognizer) -> String {
    let (sn, an) = (format!("{name}_symbols"), format!("{name}_algebra"));
    let mut s = String::new();
    write_symbols(&mut s, &sn, r.table()).expect("string write");
    write_algebra(&mut s, &an, r.algebra()).expect("string write");
    write_recognizer(&mut s, name, r, &an, &sn).expect("string write");
    s
}

/// A standalone algebra section.
pub fn dump_algebra(name: &str, a: &RegularAlgebra) -> String {
    let mut s = String::new();
    write_algebra(&mut s, name, a).expect("string write");
    s
}

impl fmt::Display for Workspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}
