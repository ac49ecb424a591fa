//! Regular unranked tree algebras.
//!
//! Trees over an operator alphabet `Σ` and a leaf alphabet `X` have no
//! fixed arities. A regular algebra interprets each operator by a Moore
//! machine reading the values of a node's children, and a recognizer adds
//! a leaf valuation and a set of final elements. On top of these the crate
//! builds syntactic algebras, boolean and quotient constructions,
//! emptiness, finiteness and equivalence checks, and decision procedures
//! for definite, aperiodic, nilpotent and related tree languages.
//!
//! ```
//! use uta::fixtures;
//! use uta::trees::parse_tree;
//!
//! let odd = fixtures::parity_odd();
//! let t = parse_tree("f(x,f(x,x))", odd.table()).unwrap();
//! assert!(odd.accepts(&t).unwrap());
//! let (sa, _) = odd.syntactic_of().unwrap();
//! assert_eq!(sa.algebra.size(), 2);
//! ```

pub mod algebra;
pub mod error;
pub mod fixtures;
pub mod horizon;
pub mod oracle;
pub mod partition;
pub mod recognizer;
pub mod syntactic;
pub mod trees;
pub mod varieties;
pub mod workspace;

pub use algebra::{sym, GCongruence, RegularAlgebra, Translation, TranslationMonoid, Valuation};
pub use error::{Error, Result};
pub use horizon::MooreMachine;
pub use partition::Partition;
pub use recognizer::{FinitenessVerdict, PumpSite, Recognizer};
pub use syntactic::SyntacticResult;
pub use trees::{Context, KeyKind, Sym, SymbolTable, TermGMorphism, Tree};
pub use varieties::{Method, Outcome, VarietyKind, VarietyVerdict};
pub use workspace::Workspace;
