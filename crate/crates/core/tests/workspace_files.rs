use std::path::PathBuf;

use uta::trees::parse_tree;
use uta::workspace::{LoadErrorKind, Workspace};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

#[test]
fn loads_every_bundled_file_from_disk() {
    let files: Vec<PathBuf> = ["parity.uta", "rootf.uta", "small.uta", "terms.uta"].iter().map(|f| fixture(f)).collect();
    let ws = Workspace::load_files(&files).unwrap();
    assert_eq!(ws.dump(), uta::fixtures::bundled().dump());
    let names: Vec<&str> = ws.recognizers.keys().map(|s| s.as_str()).collect();
    assert!(names.contains(&"parity-odd") && names.contains(&"true-exprs") && names.contains(&"rootf"));
}

#[test]
fn dumps_reload_to_the_same_workspace() {
    let ws = uta::fixtures::bundled();
    let text = ws.dump();
    let mut again = Workspace::default();
    again.load_str("dump.uta", &text).unwrap();
    assert_eq!(again.dump(), text);
    for (name, entry) in &ws.recognizers {
        assert_eq!(again.recognizers[name].recognizer, entry.recognizer, "{name}");
    }
}

#[test]
fn term_files_parse_against_their_alphabets() {
    let ws = uta::fixtures::bundled();
    for (file, symbols) in [("xml.term", "xml"), ("boolean.term", "boolean"), ("sentence.term", "english")] {
        let text = std::fs::read_to_string(fixture(file)).unwrap();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            parse_tree(line.trim(), &ws.symbols[symbols]).unwrap_or_else(|e| panic!("{file}: {e}"));
        }
    }
    let text = std::fs::read_to_string(fixture("boolean.term")).unwrap();
    let rec = ws.recognizer("true-exprs").unwrap();
    let t = parse_tree(text.trim(), rec.table()).unwrap();
    rec.accepts(&t).unwrap();
}

#[test]
fn errors_name_file_and_line() {
    let err = Workspace::load_files(&[fixture("missing.uta")]).unwrap_err();
    assert!(matches!(err.kind, LoadErrorKind::Io(_)));
    let mut ws = Workspace::default();
    let err = ws.load_str("bad.uta", "symbols s { operators: f; leaves: x; }\n\nrecognizer r { algebra: nope; symbols: s; valuation: x->a; finals: ; }\n").unwrap_err();
    assert_eq!(err.line, 3);
    assert!(err.to_string().starts_with("bad.uta:3:"), "{err}");
}
