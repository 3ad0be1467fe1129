//! Replays the fuzz corpus through the same checks as the fuzz targets, and
//! throws random strings at every parser.

use std::fs;
use std::path::PathBuf;

use dialab::finalg::{algebra_from_json, algebra_from_json_deferred};
use dialab::operads::QuadraticData;
use dialab::parse::{parse_dend, parse_dend_term, parse_pointed, parse_pointed_word, parse_word, parse_words};
use dialab::rational::parse_q;
use dialab::{Permutation, Tree};
use proptest::prelude::*;

fn check(target: &str, s: &str) {
    match target {
        "parse_word" => {
            let _ = parse_word(s);
            let _ = parse_pointed_word(s);
        }
        "parse_pointed" => {
            if let Ok(c) = parse_pointed(s) {
                assert_eq!(parse_pointed(&c.to_string()).ok(), Some(c), "{s:?}");
            }
        }
        "parse_dend" => {
            let _ = parse_dend_term(s);
            if let Ok(c) = parse_dend(s) {
                assert_eq!(parse_dend(&c.to_string()).ok(), Some(c), "{s:?}");
            }
        }
        "parse_words" => {
            if let Ok(c) = parse_words(s) {
                assert_eq!(parse_words(&c.to_string()).ok(), Some(c), "{s:?}");
            }
        }
        "parse_tree" => {
            if let Ok(y) = s.parse::<Tree>() {
                assert_eq!(y.to_string().parse::<Tree>().ok(), Some(y), "{s:?}");
            }
        }
        "parse_permutation" => {
            if let Ok(p) = s.parse::<Permutation>() {
                assert_eq!(p.to_string().parse::<Permutation>().ok(), Some(p), "{s:?}");
            }
        }
        "parse_rational" => {
            let _ = parse_q(s);
        }
        "algebra_json" => {
            let _ = algebra_from_json_deferred(s);
            let _ = algebra_from_json(s);
        }
        "quadratic_json" => {
            let _ = QuadraticData::from_json(s);
        }
        other => panic!("no check for fuzz target {other}"),
    }
}

const TARGETS: [&str; 9] = [
    "parse_word",
    "parse_pointed",
    "parse_dend",
    "parse_words",
    "parse_tree",
    "parse_permutation",
    "parse_rational",
    "algebra_json",
    "quadratic_json",
];

#[test]
fn corpus_seeds_replay() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus");
    let mut seen = 0;
    for target in TARGETS {
        let dir = root.join(target);
        let mut entries: Vec<_> = fs::read_dir(&dir).unwrap_or_else(|e| panic!("{}: {e}", dir.display())).collect();
        assert!(!entries.is_empty(), "empty corpus for {target}");
        entries.sort_by_key(|e| e.as_ref().unwrap().path());
        for e in entries {
            let data = fs::read(e.unwrap().path()).unwrap();
            check(target, &String::from_utf8_lossy(&data));
            seen += 1;
        }
    }
    assert!(seen >= TARGETS.len());
}

#[test]
fn accepted_inputs_round_trip() {
    check("parse_dend", "([1,3,1]; x y z) - 2*([2,1]; x y)");
    assert!(parse_dend("([1,3,1]; x y z) - 2*([2,1]; x y)").is_ok());
    assert!(parse_pointed("1/2*x^ + 3*y^ z").is_ok());
    assert!(parse_words("2*x + 1/3*y z").is_ok());
}

fn grammar_soup() -> impl Strategy<Value = String> {
    let atoms = prop::sample::select(vec![
        "x", "y", "z1", "^", " ", "+", "-", "*", "/", "2", "0", "[", "]", ",", "1", "3", "(", ")", ";", "{", "}",
        "\"", ":", "kind", "basis", "tables", "generators", "relations",
    ]);
    prop::collection::vec(atoms, 0..24).prop_map(|v| v.concat())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn parsers_never_panic_on_token_soup(s in grammar_soup()) {
        for target in TARGETS {
            check(target, &s);
        }
    }

    #[test]
    fn parsers_never_panic_on_arbitrary_text(s in ".{0,40}") {
        for target in TARGETS {
            check(target, &s);
        }
    }
}
