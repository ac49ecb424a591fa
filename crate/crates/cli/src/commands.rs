use std::collections::BTreeMap;
use std::error::Error;
use std::fmt::Write as _;
use std::process::ExitCode;

use serde_json::{json, Value};
use uta::algebra::{sym, RegularAlgebra, Translation};
use uta::oracle::{brute_syntactic_partition, brute_variety_check, covers_search, BruteUniverse, BruteVerdict};
use uta::recognizer::PumpSite;
use uta::syntactic::reduced_syntactic;
use uta::trees::{enumerate_contexts, enumerate_trees, parse_context, parse_tree, KeyKind, SymbolTable, Tree};
use uta::varieties::{decide_variety, DEFAULT_BOUNDS};
use uta::workspace::{dump_algebra, dump_recognizer};
use uta::{fixtures, FinitenessVerdict, Partition, Recognizer, VarietyKind, Workspace};

use crate::output::{Out, Style};
use crate::{AlgebraRef, BoolOp, Cli, Command, DecideArgs, KindArg, OracleOp, TermInput};

type Result<T> = std::result::Result<T, Box<dyn Error>>;

fn fail(msg: impl Into<String>) -> Box<dyn Error> {
    msg.into().into()
}

fn code(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

struct Ctx {
    ws: Workspace,
    out: Out,
}

impl Ctx {
    fn rec(&self, name: &str) -> Result<&Recognizer> {
        self.ws.recognizer(name).ok_or_else(|| fail(format!("unknown recognizer `{name}`")))
    }

    fn algebra(&self, name: &str) -> Result<&RegularAlgebra> {
        self.ws.algebras.get(name).ok_or_else(|| fail(format!("unknown algebra `{name}`")))
    }

    fn symbols(&self, name: &str) -> Result<&SymbolTable> {
        self.ws.symbols.get(name).ok_or_else(|| fail(format!("unknown symbol table `{name}`")))
    }

    fn algebra_ref(&self, r: &AlgebraRef) -> Result<RegularAlgebra> {
        match (&r.algebra, &r.rec) {
            (Some(a), _) => Ok(self.algebra(a)?.clone()),
            (None, Some(rec)) => Ok(self.rec(rec)?.trim().algebra().clone()),
            (None, None) => Err(fail("give --algebra or --rec")),
        }
    }

    fn dump(&self, name: &str, text: String) {
        self.out.emit(json!({"name": name, "workspace": text}), |_| text.clone());
    }
}

pub fn run(cli: &Cli) -> Result<ExitCode> {
    let ws = if cli.workspace.is_empty() { fixtures::bundled() } else { Workspace::load_files(&cli.workspace)? };
    let ctx = Ctx { ws, out: Out { json: cli.json, style: Style::detect() } };
    match &cli.command {
        Command::Parse { symbols, input, pretty } => parse(&ctx, symbols, input, *pretty),
        Command::Eval { rec, term } => eval(&ctx, rec, term),
        Command::Recognize { rec, input } => recognize(&ctx, rec, input),
        Command::Trim { rec, name } => {
            let n = name.name.clone().unwrap_or_else(|| format!("{rec}-trim"));
            ctx.dump(&n, dump_recognizer(&n, &ctx.rec(rec)?.trim()));
            Ok(ExitCode::SUCCESS)
        }
        Command::Bool { op } => boolean(&ctx, op),
        Command::QuotientCtx { rec, context, name } => {
            let r = ctx.rec(rec)?;
            let p = parse_context(context, r.table())?;
            let n = name.name.clone().unwrap_or_else(|| format!("{rec}-quotient"));
            ctx.dump(&n, dump_recognizer(&n, &r.context_quotient(&p)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::InvImage { rec, gmorphism, name } => {
            let m = ctx.ws.gmorphisms.get(gmorphism).ok_or_else(|| fail(format!("unknown gmorphism `{gmorphism}`")))?;
            let n = name.name.clone().unwrap_or_else(|| format!("{rec}-by-{gmorphism}"));
            ctx.dump(&n, dump_recognizer(&n, &ctx.rec(rec)?.inverse_gmorphism_image(&m.morphism)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Sa { rec, print } => sa(&ctx, rec, *print),
        Command::Ra { rec, print } => ra(&ctx, rec, *print),
        Command::Translations { target, op } => translations(&ctx, target, op.as_deref()),
        Command::CongruenceCheck { target, classes } => congruence_check(&ctx, target, classes),
        Command::Quotient { target, classes, name } => {
            let alg = ctx.algebra_ref(target)?;
            let theta = parse_classes(&alg, classes)?;
            let n = name.name.clone().unwrap_or_else(|| "quotient".into());
            ctx.dump(&n, dump_algebra(&n, &alg.quotient(&theta)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Product { algebras, name } => {
            let mut alg = ctx.algebra(&algebras[0])?.clone();
            for a in &algebras[1..] {
                alg = alg.direct_product(ctx.algebra(a)?)?;
            }
            let n = name.name.clone().unwrap_or_else(|| algebras.join("-x-"));
            ctx.dump(&n, dump_algebra(&n, &alg));
            Ok(ExitCode::SUCCESS)
        }
        Command::Derived { algebra, iota, name } => {
            let pairs = parse_map(iota)?;
            let sigma: Vec<_> = pairs.iter().map(|(f, _)| sym(f)).collect();
            let iota = pairs.iter().map(|(f, g)| (sym(f), sym(g))).collect();
            let alg = RegularAlgebra::derived(&sigma, &iota, ctx.algebra(algebra)?)?;
            let n = name.name.clone().unwrap_or_else(|| format!("{algebra}-derived"));
            ctx.dump(&n, dump_algebra(&n, &alg));
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckGmorphism { source, target, iota, phi } => check_gmorphism(&ctx, source, target, iota, phi),
        Command::Empty { rec } => empty(&ctx, rec),
        Command::Finite { rec } => finite(&ctx, rec),
        Command::Equiv { recs } => equiv(&ctx, recs),
        Command::ClassOf { rec, term, dump } => class_of(&ctx, rec, term, *dump),
        Command::Decide(args) => decide(&ctx, args),
        Command::Enumerate { symbols, max_size, max_arity, contexts } => {
            let table = ctx.symbols(symbols)?;
            let items: Vec<String> = if *contexts {
                enumerate_contexts(table, *max_size, *max_arity).iter().map(|p| p.to_string()).collect()
            } else {
                enumerate_trees(table, *max_size, *max_arity).iter().map(|t| t.to_string()).collect()
            };
            ctx.out.emit(json!(items), |_| items.join("\n"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { op } => oracle(&ctx, op),
    }
}

fn read_terms(input: &TermInput) -> Result<Vec<String>> {
    let mut terms = input.terms.clone();
    if let Some(path) = &input.file {
        let text = std::fs::read_to_string(path).map_err(|e| fail(format!("{}: {e}", path.display())))?;
        terms.extend(
            text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(str::to_string),
        );
    }
    if terms.is_empty() {
        return Err(fail("no terms given"));
    }
    Ok(terms)
}

fn pretty(t: &Tree, depth: usize, out: &mut String) {
    let _ = writeln!(out, "{:indent$}{}", "", t.label(), indent = 2 * depth);
    for c in t.children() {
        pretty(c, depth + 1, out);
    }
}

fn parse(ctx: &Ctx, symbols: &str, input: &TermInput, show_tree: bool) -> Result<ExitCode> {
    let table = ctx.symbols(symbols)?;
    let mut values = Vec::new();
    let mut text = String::new();
    for term in read_terms(input)? {
        let t = parse_tree(&term, table)?;
        let (h, root, size) = t.measures();
        values.push(json!({"term": t.to_string(), "height": h, "root": root, "size": size}));
        let _ = writeln!(text, "{t}  height {h}, root {root}, size {size}");
        if show_tree {
            pretty(&t, 1, &mut text);
        }
    }
    ctx.out.emit(json!(values), |_| text);
    Ok(ExitCode::SUCCESS)
}

fn eval(ctx: &Ctx, rec: &str, term: &str) -> Result<ExitCode> {
    let r = ctx.rec(rec)?;
    let t = parse_tree(term, r.table())?;
    let v = r.eval(&t)?;
    let accepted = r.finals().contains(&v);
    let value = &r.algebra().elements()[v];
    ctx.out.emit(json!({"value": value, "accepted": accepted}), |s| {
        format!("{value}\n{}", s.verdict(accepted, if accepted { "accept" } else { "reject" }))
    });
    Ok(code(accepted))
}

fn recognize(ctx: &Ctx, rec: &str, input: &TermInput) -> Result<ExitCode> {
    let r = ctx.rec(rec)?;
    let mut all = true;
    let mut rows = Vec::new();
    let mut text = String::new();
    for term in read_terms(input)? {
        let t = parse_tree(&term, r.table())?;
        let ok = r.accepts(&t)?;
        all &= ok;
        rows.push(json!({"term": t.to_string(), "accepted": ok}));
        let _ = writeln!(text, "{}\t{t}", ctx.out.style.verdict(ok, if ok { "accept" } else { "reject" }));
    }
    ctx.out.emit(json!(rows), |_| text);
    Ok(code(all))
}

fn boolean(ctx: &Ctx, op: &BoolOp) -> Result<ExitCode> {
    let (result, name) = match op {
        BoolOp::Not { rec, name } => (ctx.rec(rec)?.complement(), name.name.clone().unwrap_or_else(|| format!("not-{rec}"))),
        BoolOp::And { recs, name } | BoolOp::Or { recs, name } => {
            let and = matches!(op, BoolOp::And { .. });
            let mut acc = ctx.rec(&recs[0])?.clone();
            for r in &recs[1..] {
                let other = ctx.rec(r)?;
                acc = if and { acc.intersect(other)? } else { acc.union(other)? };
            }
            let joiner = if and { "-and-" } else { "-or-" };
            (acc, name.name.clone().unwrap_or_else(|| recs.join(joiner)))
        }
    };
    ctx.dump(&name, dump_recognizer(&name, &result));
    Ok(ExitCode::SUCCESS)
}

fn sa(ctx: &Ctx, rec: &str, print: bool) -> Result<ExitCode> {
    let r = ctx.rec(rec)?;
    let trimmed = r.trim();
    let (result, sa) = r.syntactic_of()?;
    let names = trimmed.algebra().elements();
    let classes: Vec<Vec<&String>> = result.theta.blocks().iter().map(|b| b.iter().map(|&a| &names[a]).collect()).collect();
    let finals: Vec<&String> = sa.finals().iter().map(|&a| &result.algebra.elements()[a]).collect();
    let name = format!("{rec}_sa");
    let dump = dump_algebra(&name, &result.algebra);
    let value = json!({
        "size": result.algebra.size(),
        "classes": result.algebra.elements().iter().zip(&classes)
            .map(|(n, c)| json!({"name": n, "members": c})).collect::<Vec<_>>(),
        "finals": finals,
        "algebra": if print { json!(dump) } else { Value::Null },
    });
    ctx.out.emit(value, |_| {
        if print {
            return dump.clone();
        }
        let mut s = format!("SA({rec}): {} elements\n", result.algebra.size());
        for (n, c) in result.algebra.elements().iter().zip(&classes) {
            let members: Vec<&str> = c.iter().map(|m| m.as_str()).collect();
            let _ = writeln!(s, "  {n}: {}", members.join(" "));
        }
        let finals: Vec<&str> = finals.iter().map(|f| f.as_str()).collect();
        let _ = write!(s, "finals: {}", finals.join(" "));
        s
    });
    Ok(ExitCode::SUCCESS)
}

fn ra(ctx: &Ctx, rec: &str, print: bool) -> Result<ExitCode> {
    let trimmed = ctx.rec(rec)?.trim();
    let res = reduced_syntactic(trimmed.algebra(), trimmed.finals())?;
    let sigma = res.sigma.as_ref().expect("reduced_syntactic fills sigma");
    let reduced = res.reduced.as_ref().expect("reduced_syntactic fills the algebra");
    let ops = res.algebra.operators();
    let op_classes: Vec<Vec<&str>> = sigma.blocks().iter().map(|b| b.iter().map(|&i| ops[i].as_ref()).collect()).collect();
    let name = format!("{rec}_ra");
    let dump = dump_algebra(&name, reduced);
    let value = json!({
        "size": reduced.size(),
        "operator_classes": op_classes,
        "algebra": if print { json!(dump) } else { Value::Null },
    });
    ctx.out.emit(value, |_| {
        if print {
            return dump.clone();
        }
        let mut s = format!("RA({rec}): {} elements, {} operators\n", reduced.size(), reduced.operators().len());
        for c in &op_classes {
            let _ = writeln!(s, "  {}", c.join(" "));
        }
        s
    });
    Ok(ExitCode::SUCCESS)
}

fn translation_json(alg: &RegularAlgebra, t: &Translation) -> Value {
    let el = alg.elements();
    json!({
        "map": t.map.iter().map(|&b| &el[b]).collect::<Vec<_>>(),
        "provenance": t.provenance.iter().map(|e| json!({
            "op": e.op.as_ref() as &str,
            "u": e.u.iter().map(|&a| &el[a]).collect::<Vec<_>>(),
            "v": e.v.iter().map(|&a| &el[a]).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

fn translations(ctx: &Ctx, target: &AlgebraRef, op: Option<&str>) -> Result<ExitCode> {
    let alg = ctx.algebra_ref(target)?;
    let list = match op {
        Some(f) => {
            let i = alg.op_index(f).ok_or_else(|| fail(format!("unknown operator `{f}`")))?;
            alg.elementary_translations(i)
        }
        None => alg.translations().all,
    };
    let value = json!(list.iter().map(|t| translation_json(&alg, t)).collect::<Vec<_>>());
    ctx.out.emit(value, |_| list.iter().map(|t| alg.describe_translation(t)).collect::<Vec<_>>().join("\n"));
    Ok(ExitCode::SUCCESS)
}

/// `"0 2 | 1"` as a partition of the carrier.
fn parse_classes(alg: &RegularAlgebra, text: &str) -> Result<Partition> {
    let blocks = text
        .split('|')
        .map(|b| {
            b.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|name| alg.element_index(name).map_err(Into::into))
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::from_blocks(alg.size(), &blocks)
        .ok_or_else(|| fail("classes must cover every element exactly once"))
}

/// `"a->b, c->d"` as ordered pairs.
fn parse_map(text: &str) -> Result<Vec<(String, String)>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|pair| {
            let (a, b) = pair.split_once("->").ok_or_else(|| fail(format!("expected `a->b`, got `{pair}`")))?;
            Ok((a.trim().to_string(), b.trim().to_string()))
        })
        .collect()
}

fn congruence_check(ctx: &Ctx, target: &AlgebraRef, classes: &str) -> Result<ExitCode> {
    let alg = ctx.algebra_ref(target)?;
    let theta = parse_classes(&alg, classes)?;
    let el = alg.elements();
    let word = |w: &[usize]| w.iter().map(|&a| el[a].as_str()).collect::<Vec<_>>().join(" ");
    match alg.congruence_violation(&theta)? {
        None => {
            ctx.out.emit(json!({"congruence": true}), |s| s.good("congruence"));
            Ok(ExitCode::SUCCESS)
        }
        Some(v) => {
            let value = json!({
                "congruence": false,
                "op": v.f.as_ref() as &str,
                "left": word(&v.left), "right": word(&v.right),
                "left_value": el[v.left_value], "right_value": el[v.right_value],
            });
            ctx.out.emit(value, |s| {
                format!(
                    "{}: {}(\"{}\") = {} but {}(\"{}\") = {}",
                    s.bad("not a congruence"),
                    v.f,
                    word(&v.left),
                    el[v.left_value],
                    v.g,
                    word(&v.right),
                    el[v.right_value]
                )
            });
            Ok(ExitCode::from(1))
        }
    }
}

fn check_gmorphism(ctx: &Ctx, source: &str, target: &str, iota: &str, phi: &str) -> Result<ExitCode> {
    let (src, dst) = (ctx.algebra(source)?, ctx.algebra(target)?);
    let iota: BTreeMap<_, _> = parse_map(iota)?.into_iter().map(|(f, g)| (sym(&f), sym(&g))).collect();
    let mut map = vec![None; src.size()];
    for (a, b) in parse_map(phi)? {
        map[src.element_index(&a)?] = Some(dst.element_index(&b)?);
    }
    let phi: Vec<usize> = map
        .iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| fail(format!("phi misses `{}`", src.elements()[i]))))
        .collect::<Result<_>>()?;
    match src.gmorphism_violation(dst, &iota, &phi)? {
        None => {
            ctx.out.emit(json!({"gmorphism": true}), |s| s.good("g-morphism"));
            Ok(ExitCode::SUCCESS)
        }
        Some(v) => {
            let w: Vec<&str> = v.word.iter().map(|&a| src.elements()[a].as_str()).collect();
            let (e, a) = (&dst.elements()[v.expected], &dst.elements()[v.actual]);
            let value = json!({"gmorphism": false, "op": v.op.as_ref() as &str, "word": w, "expected": e, "actual": a});
            ctx.out.emit(value, |s| {
                format!("{}: on {}(\"{}\") the image is {e} but the target gives {a}", s.bad("not a g-morphism"), v.op, w.join(" "))
            });
            Ok(ExitCode::from(1))
        }
    }
}

fn empty(ctx: &Ctx, rec: &str) -> Result<ExitCode> {
    let r = ctx.rec(rec)?;
    match r.smallest_member() {
        None => {
            ctx.out.emit(json!({"empty": true}), |s| s.good("empty"));
            Ok(ExitCode::SUCCESS)
        }
        Some(t) => {
            ctx.out.emit(json!({"empty": false, "smallest": t.to_string()}), |s| format!("{}: {t}", s.bad("nonempty")));
            Ok(ExitCode::from(1))
        }
    }
}

fn finite(ctx: &Ctx, rec: &str) -> Result<ExitCode> {
    match ctx.rec(rec)?.is_finite()? {
        FinitenessVerdict::Finite(members) => {
            let list: Vec<String> = members.iter().map(|t| t.to_string()).collect();
            ctx.out.emit(json!({"finite": true, "members": list}), |s| {
                let mut out = format!("{}: {} members\n", s.good("finite"), list.len());
                for m in &list {
                    let _ = writeln!(out, "  {m}");
                }
                out
            });
            Ok(ExitCode::SUCCESS)
        }
        FinitenessVerdict::Infinite { witness, site } => {
            let (site_json, site_text) = match &site {
                PumpSite::Vertical { height, bound } => {
                    (json!({"height": height, "bound": bound}), format!("height {height} >= {bound}"))
                }
                PumpSite::Horizontal { op, arity, bound } => (
                    json!({"op": op.as_ref() as &str, "arity": arity, "bound": bound}),
                    format!("a {op} node with {arity} >= {bound} children"),
                ),
            };
            ctx.out.emit(json!({"finite": false, "witness": witness.to_string(), "site": site_json}), |s| {
                format!("{}: {witness} is accepted and pumpable ({site_text})", s.bad("infinite"))
            });
            Ok(ExitCode::from(1))
        }
    }
}

fn equiv(ctx: &Ctx, recs: &[String]) -> Result<ExitCode> {
    if recs.len() != 2 {
        return Err(fail("equiv takes exactly two --rec"));
    }
    let (a, b) = (ctx.rec(&recs[0])?, ctx.rec(&recs[1])?);
    match a.counterexample(b)? {
        None => {
            ctx.out.emit(json!({"equivalent": true}), |s| s.good("equivalent"));
            Ok(ExitCode::SUCCESS)
        }
        Some(t) => {
            let (name, other) = if a.accepts(&t)? { (&recs[0], &recs[1]) } else { (&recs[1], &recs[0]) };
            let value = json!({"equivalent": false, "counterexample": t.to_string(), "accepted_by": name});
            ctx.out.emit(value, |s| format!("{}: {t} is accepted by {name} but not by {other}", s.bad("not equivalent")));
            Ok(ExitCode::from(1))
        }
    }
}

fn class_of(ctx: &Ctx, rec: &str, term: &str, dump: bool) -> Result<ExitCode> {
    let r = ctx.rec(rec)?;
    let t = parse_tree(term, r.table())?;
    let (_, sa) = r.syntactic_of()?;
    let class = sa.eval(&t)?;
    let class_rec = sa.with_finals([class].into())?;
    let smallest = class_rec.smallest_member().expect("the class contains t");
    let name = &sa.algebra().elements()[class];
    let accepted = sa.finals().contains(&class);
    let text_dump = dump.then(|| dump_recognizer(&format!("{rec}_class"), &class_rec));
    let value = json!({"class": name, "smallest": smallest.to_string(), "accepted": accepted, "recognizer": text_dump});
    ctx.out.emit(value, |_| {
        let mut s = format!("class: {name}\nsmallest: {smallest}\naccepted: {}\n", if accepted { "yes" } else { "no" });
        if let Some(d) = &text_dump {
            s.push_str(d);
        }
        s
    });
    Ok(ExitCode::SUCCESS)
}

fn need(v: Option<usize>, what: &str) -> Result<usize> {
    v.ok_or_else(|| fail(format!("this kind needs --{what}")))
}

fn variety_kind(args: &DecideArgs) -> Result<VarietyKind> {
    Ok(match args.kind {
        KindArg::Def => VarietyKind::Def(args.k),
        KindArg::Rdef => VarietyKind::RDef(need(args.k, "k")?),
        KindArg::Gdef => VarietyKind::GDef { h: need(args.h, "h")?, k: need(args.k, "k")? },
        KindArg::Loc => VarietyKind::Loc(need(args.k, "k")?),
        KindArg::Pwt => VarietyKind::Pwt(need(args.k, "k")?),
        KindArg::Ap => VarietyKind::Aperiodic,
        KindArg::Nil => VarietyKind::Nil,
    })
}

fn decide(ctx: &Ctx, args: &DecideArgs) -> Result<ExitCode> {
    let rec = ctx.rec(&args.rec)?;
    let kind = variety_kind(args)?;
    let bounds = (args.max_size.unwrap_or(DEFAULT_BOUNDS.0), args.max_arity.unwrap_or(DEFAULT_BOUNDS.1));
    let verdict = decide_variety(rec, kind, bounds)?;
    println!("{}", verdict.to_json());
    Ok(code(verdict.is_yes()))
}

fn oracle(ctx: &Ctx, op: &OracleOp) -> Result<ExitCode> {
    match op {
        OracleOp::Partition { rec, max_size, max_arity, ctx_size, ctx_arity } => {
            let r = ctx.rec(rec)?;
            let u = BruteUniverse::new(r.table(), (*max_size, *max_arity), (*ctx_size, *ctx_arity));
            let part = brute_syntactic_partition(r, &u)?;
            let blocks: Vec<Vec<String>> =
                part.blocks().iter().map(|b| b.iter().map(|&i| u.trees[i].to_string()).collect()).collect();
            ctx.out.emit(json!(blocks), |_| {
                let mut s = format!("{} classes on {} trees\n", blocks.len(), u.trees.len());
                for b in &blocks {
                    let _ = writeln!(s, "  {}", b.join(" "));
                }
                s
            });
            Ok(ExitCode::SUCCESS)
        }
        OracleOp::Variety { args } => {
            let r = ctx.rec(&args.rec)?;
            let kind = variety_kind(args)?;
            let key = match kind {
                VarietyKind::Def(k) => KeyKind::Def(need(k, "k")?),
                other => other.key_kind().ok_or_else(|| fail("the oracle checks def, rdef, gdef, loc and pwt"))?,
            };
            let u = BruteUniverse::new(r.table(), (args.max_size.unwrap_or(5), args.max_arity.unwrap_or(3)), (0, 0));
            match brute_variety_check(r, key, &u)? {
                BruteVerdict::Yes => {
                    ctx.out.emit(json!({"saturated": true}), |s| s.good("saturated on the enumerated trees"));
                    Ok(ExitCode::SUCCESS)
                }
                BruteVerdict::No(s, t) => {
                    let value = json!({"saturated": false, "accepted": s.to_string(), "rejected": t.to_string()});
                    ctx.out.emit(value, |st| format!("{}: {s} is accepted, {t} is rejected, same {key} key", st.bad("not saturated")));
                    Ok(ExitCode::from(1))
                }
            }
        }
        OracleOp::Covers { small, big } => {
            let ok = covers_search(ctx.algebra(small)?, ctx.algebra(big)?, 8)?;
            ctx.out.emit(json!({"covers": ok}), |s| {
                s.verdict(ok, &format!("{small} {} {big}", if ok { "divides" } else { "does not divide" }))
            });
            Ok(code(ok))
        }
    }
}
