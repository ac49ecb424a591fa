//! `uta`: load workspace files and run constructions and decision
//! procedures on the recognizers and algebras they define.
//!
//! Exit status is 0 on success, 1 on a negative verdict and 2 on usage
//! or data errors.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "uta", version, about = "Regular unranked tree algebras and recognizers")]
pub struct Cli {
    /// Workspace file to load; repeatable. Without any, the bundled
    /// fixtures are used.
    #[arg(short, long = "workspace", global = true, value_name = "FILE")]
    pub workspace: Vec<PathBuf>,

    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct TermInput {
    /// Terms to read; one per argument.
    pub terms: Vec<String>,

    /// File with one term per line.
    #[arg(long, value_name = "FILE")]
    pub file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct NameOpt {
    /// Name of the emitted recognizer or algebra.
    #[arg(long)]
    pub name: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse terms over a symbol table and print canonical form and measures.
    Parse {
        #[arg(long)]
        symbols: String,
        #[command(flatten)]
        input: TermInput,
        /// Print an indented tree.
        #[arg(long)]
        pretty: bool,
    },
    /// Value of a tree and whether it is accepted.
    Eval {
        #[arg(long)]
        rec: String,
        term: String,
    },
    /// Accept or reject each term.
    Recognize {
        #[arg(long)]
        rec: String,
        #[command(flatten)]
        input: TermInput,
    },
    /// Restrict a recognizer to its reachable values.
    Trim {
        #[arg(long)]
        rec: String,
        #[command(flatten)]
        name: NameOpt,
    },
    /// Boolean combinations of recognizers.
    Bool {
        #[command(subcommand)]
        op: BoolOp,
    },
    /// The recognizer of `p^{-1}(T)`.
    QuotientCtx {
        #[arg(long)]
        rec: String,
        context: String,
        #[command(flatten)]
        name: NameOpt,
    },
    /// The recognizer of the inverse image under a g-morphism.
    InvImage {
        #[arg(long)]
        rec: String,
        #[arg(long)]
        gmorphism: String,
        #[command(flatten)]
        name: NameOpt,
    },
    /// Syntactic algebra of a recognizer.
    Sa {
        #[arg(long)]
        rec: String,
        /// Print the algebra in workspace syntax.
        #[arg(long)]
        print: bool,
    },
    /// Reduced syntactic algebra of a recognizer.
    Ra {
        #[arg(long)]
        rec: String,
        #[arg(long)]
        print: bool,
    },
    /// Translation monoid of an algebra or of a recognizer's algebra.
    Translations {
        #[command(flatten)]
        target: AlgebraRef,
        /// Only the elementary translations of this operator.
        #[arg(long)]
        op: Option<String>,
    },
    /// Check whether a partition is a congruence.
    CongruenceCheck {
        #[command(flatten)]
        target: AlgebraRef,
        /// Blocks separated by `|`, e.g. "0 2 | 1".
        #[arg(long)]
        classes: String,
    },
    /// Quotient of an algebra by a congruence.
    Quotient {
        #[command(flatten)]
        target: AlgebraRef,
        #[arg(long)]
        classes: String,
        #[command(flatten)]
        name: NameOpt,
    },
    /// Direct product of algebras over the same operators.
    Product {
        #[arg(long = "algebra", required = true, num_args = 1)]
        algebras: Vec<String>,
        #[command(flatten)]
        name: NameOpt,
    },
    /// Derived algebra over new operators, e.g. --iota "a->f, b->f".
    Derived {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        iota: String,
        #[command(flatten)]
        name: NameOpt,
    },
    /// Check a g-morphism between algebras, e.g. --phi "0->1, 1->0".
    CheckGmorphism {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        iota: String,
        #[arg(long)]
        phi: String,
    },
    /// Emptiness, with a smallest member otherwise.
    Empty {
        #[arg(long)]
        rec: String,
    },
    /// Finiteness, listing the members or giving a pumpable witness.
    Finite {
        #[arg(long)]
        rec: String,
    },
    /// Language equivalence, with a smallest counterexample otherwise.
    Equiv {
        #[arg(long = "rec", num_args = 1, required = true)]
        recs: Vec<String>,
    },
    /// The syntactic class of a tree.
    ClassOf {
        #[arg(long)]
        rec: String,
        term: String,
        /// Also print a recognizer of the class.
        #[arg(long)]
        dump: bool,
    },
    /// Decide membership in a variety.
    Decide(DecideArgs),
    /// List trees or contexts in canonical order.
    Enumerate {
        #[arg(long)]
        symbols: String,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[arg(long, default_value_t = 3)]
        max_arity: usize,
        #[arg(long)]
        contexts: bool,
    },
    /// Brute-force oracles.
    #[command(hide = true)]
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
}

#[derive(Subcommand, Debug)]
pub enum BoolOp {
    Not {
        #[arg(long)]
        rec: String,
        #[command(flatten)]
        name: NameOpt,
    },
    And {
        #[arg(long = "rec", num_args = 1, required = true)]
        recs: Vec<String>,
        #[command(flatten)]
        name: NameOpt,
    },
    Or {
        #[arg(long = "rec", num_args = 1, required = true)]
        recs: Vec<String>,
        #[command(flatten)]
        name: NameOpt,
    },
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct AlgebraRef {
    #[arg(long)]
    pub algebra: Option<String>,
    /// Use the (trimmed) algebra of a recognizer.
    #[arg(long)]
    pub rec: Option<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum KindArg {
    Def,
    Rdef,
    Gdef,
    Loc,
    Pwt,
    Ap,
    Nil,
}

#[derive(Args, Debug)]
pub struct DecideArgs {
    #[arg(long)]
    pub rec: String,
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub h: Option<usize>,
    #[arg(long)]
    pub max_size: Option<usize>,
    #[arg(long)]
    pub max_arity: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum OracleOp {
    /// Syntactic partition of the enumerated trees from membership alone.
    Partition {
        #[arg(long)]
        rec: String,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[arg(long, default_value_t = 3)]
        max_arity: usize,
        #[arg(long, default_value_t = 4)]
        ctx_size: usize,
        #[arg(long, default_value_t = 3)]
        ctx_arity: usize,
    },
    /// Key-saturation check of membership on the enumerated trees.
    Variety {
        #[command(flatten)]
        args: DecideArgs,
    },
    /// Search for a subalgebra of `big` mapping onto `small`.
    Covers {
        #[arg(long)]
        small: String,
        #[arg(long)]
        big: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
