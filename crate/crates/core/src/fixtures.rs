//! Small algebras and recognizers used throughout the examples and tests,
//! plus the bundled workspace files.

use crate::algebra::{sym, RegularAlgebra, Valuation};
use crate::horizon::MooreMachine;
use crate::recognizer::Recognizer;
use crate::trees::SymbolTable;
use crate::workspace::Workspace;

/// The bundled workspace sources as `(file name, text)`.
pub const BUNDLED: &[(&str, &str)] = &[
    ("parity.uta", include_str!("../fixtures/parity.uta")),
    ("rootf.uta", include_str!("../fixtures/rootf.uta")),
    ("small.uta", include_str!("../fixtures/small.uta")),
    ("terms.uta", include_str!("../fixtures/terms.uta")),
];

/// Loads every bundled fixture into one workspace.
pub fn bundled() -> Workspace {
    let mut ws = Workspace::default();
    for (name, text) in BUNDLED {
        ws.load_str(name, text).expect("bundled fixtures are valid");
    }
    ws
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn sum_mod(n: usize) -> MooreMachine {
    let delta = (0..n).map(|q| (0..n).map(|a| (q + a) % n).collect()).collect();
    MooreMachine::new(n, n, 0, delta, (0..n).collect()).expect("complete")
}

/// `f_A(a_1⋯a_n) = a_1 + ⋯ + a_n mod n` on `{0, …, n-1}`.
pub fn cyclic_algebra(n: usize) -> RegularAlgebra {
    RegularAlgebra::new(names(n), &["f"], vec![sum_mod(n)]).expect("valid")
}

/// `f_A(a_1⋯a_n) = a_1 + ⋯ + a_n mod 2`.
pub fn parity_algebra() -> RegularAlgebra {
    RegularAlgebra::new(names(2), &["f"], vec![sum_mod(2)]).expect("valid")
}

/// Two operators with the same parity machine.
pub fn parity_twin_algebra() -> RegularAlgebra {
    RegularAlgebra::new(names(2), &["f", "g"], vec![sum_mod(2), sum_mod(2)]).expect("valid")
}

/// Sum modulo 3 over a single operator.
pub fn sum_mod3_algebra() -> RegularAlgebra {
    RegularAlgebra::new(names(3), &["f"], vec![sum_mod(3)]).expect("valid")
}

/// Over `{f, g}`: `f` is constantly 1 and `g` constantly 0.
pub fn root_algebra() -> RegularAlgebra {
    let c = |v| MooreMachine::constant(2, 2, v).expect("valid");
    RegularAlgebra::new(names(2), &["f", "g"], vec![c(1), c(0)]).expect("valid")
}

/// Odd-parity trees over `Σ = {f}`, `X = {x}` with `x ↦ 1`.
pub fn parity_odd() -> Recognizer {
    let table = SymbolTable::new(&["f"], &["x"]).expect("valid");
    let val: Valuation = [(sym("x"), 1)].into_iter().collect();
    Recognizer::new(table, parity_algebra(), val, [1].into()).expect("valid")
}

/// Trees over `Σ = {f, g}`, `X = {x}` whose root is `f`.
pub fn root_f() -> Recognizer {
    let table = SymbolTable::new(&["f", "g"], &["x"]).expect("valid");
    let val: Valuation = [(sym("x"), 0)].into_iter().collect();
    Recognizer::new(table, root_algebra(), val, [1].into()).expect("valid")
}

/// `{x}` over `Σ = {f}`, `X = {x}`: the carrier marks `x` (0), bare `f` (1)
/// and everything else (2).
pub fn singleton_x() -> Recognizer {
    let table = SymbolTable::new(&["f"], &["x"]).expect("valid");
    let m = MooreMachine::new(3, 3, 0, vec![vec![1, 1, 1], vec![1, 1, 1]], vec![1, 2]).expect("valid");
    let alg = RegularAlgebra::new(
        vec!["x".into(), "f".into(), "other".into()],
        &["f"],
        vec![m],
    )
    .expect("valid");
    let val: Valuation = [(sym("x"), 0)].into_iter().collect();
    Recognizer::new(table, alg, val, [0].into()).expect("valid")
}

/// Every tree over `Σ = {f}`, `X = {x}`; `F = A` of the parity algebra.
pub fn all_trees() -> Recognizer {
    let mut r = parity_odd();
    r = r.with_finals([0, 1].into()).expect("valid");
    r
}

/// The empty language over `Σ = {f}`, `X = {x}`.
pub fn empty_language() -> Recognizer {
    parity_odd().with_finals([].into()).expect("valid")
}

/// Trees over `Σ = {f}`, `X = {x, y}` containing a leaf `x`.
pub fn contains_x() -> Recognizer {
    let table = SymbolTable::new(&["f"], &["x", "y"]).expect("valid");
    // or over {0, 1}
    let m = MooreMachine::new(2, 2, 0, vec![vec![0, 1], vec![1, 1]], vec![0, 1]).expect("valid");
    let alg = RegularAlgebra::new(names(2), &["f"], vec![m]).expect("valid");
    let val: Valuation = [(sym("x"), 1), (sym("y"), 0)].into_iter().collect();
    Recognizer::new(table, alg, val, [1].into()).expect("valid")
}
