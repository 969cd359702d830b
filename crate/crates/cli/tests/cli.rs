use std::collections::BTreeMap;
use std::process::Command;

use metacyclic_cli::document::{CheckStatus, OutputDocument, Payload};
use metacyclic_cli::{run, EXIT_INVALID, EXIT_OK, EXIT_USAGE};

fn call(args: &str) -> (i32, String, String) {
    let argv = std::iter::once("metacyclic").chain(args.split_whitespace());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &str) -> OutputDocument {
    let (code, out, err) = call(&format!("{args} --format json"));
    assert_eq!(code, EXIT_OK, "{args}: {err}");
    serde_json::from_str(&out).unwrap()
}

const G1: &str = "-p 2 -n 5 -m 3 -r 0 -s 2";

#[test]
fn wedderburn_text() {
    let (code, out, _) = call(&format!("wedderburn {G1} --format text"));
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "4 Q + 6 Q(z4) + 12 Q(z8) + 4 M2(Q(z8)) + 2 M4(Q(z8))");
}

#[test]
fn invalid_tuple_exits_one() {
    let (code, out, _) = call("validate -p 2 -n 3 -m 1 -r 0 -s 2");
    assert_eq!(code, EXIT_INVALID);
    let doc: OutputDocument = serde_json::from_str(&out).unwrap();
    match doc.payload {
        Payload::Validation(v) => {
            assert!(!v.valid);
            assert_eq!(v.reason.as_deref(), Some("NotReduced"));
        }
        other => panic!("unexpected payload {other:?}"),
    }
    let (code, _, err) = call("order -p 2 -n 3 -m 1 -r 0 -s 2");
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("not reduced"));
}

#[test]
fn verify_passes() {
    let doc = json("verify -p 3 -n 3 -m 3 -r 1 -s 2");
    let Payload::Verification(v) = doc.payload else { panic!("not a verification report") };
    assert!(v.all_passed);
    assert!(v.checks.iter().all(|c| c.status == CheckStatus::Pass));
    let doc = json("verify -p 2 -n 5 -m 3 -r 0 -s 2 --bound 16");
    let Payload::Verification(v) = doc.payload else { panic!("not a verification report") };
    assert!(v.all_passed);
    assert!(v.checks.iter().any(|c| c.status == CheckStatus::Skipped));
}

#[test]
fn usage_errors() {
    assert_eq!(call("order -p 2").0, EXIT_USAGE);
    assert_eq!(call("frobnicate").0, EXIT_USAGE);
    assert_eq!(call("wedderburn -p 2 -n 5 -m 3 -r 0 -s 2 --format yaml").0, EXIT_USAGE);
    assert_eq!(call("rational-rep -p 2 -n 5 -m 3 -r 0 -s 2 --class 9999").0, EXIT_USAGE);
    assert_eq!(call("chartable -p 2 -n 5 -m 3 -r 0 -s 2 --bound 8").0, EXIT_USAGE);
    let (code, out, _) = call("--help");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("wedderburn"));
}

#[test]
fn every_payload_round_trips() {
    let commands = [
        format!("validate {G1}"),
        format!("order {G1}"),
        format!("orbits {G1}"),
        format!("irreps {G1}"),
        "chartable -p 3 -n 2 -m 1 -r 0 -s 1".to_string(),
        format!("galois-classes {G1}"),
        format!("rational-count {G1}"),
        format!("wedderburn {G1}"),
        "rational-rep -p 3 -n 2 -m 1 -r 0 -s 1 --class 5".to_string(),
        "verify -p 3 -n 2 -m 1 -r 0 -s 1".to_string(),
        "sweep --max-order 64".to_string(),
        "compare 2,4,4,0,2 2,4,4,1,2".to_string(),
    ];
    for c in commands {
        let doc = json(&c);
        assert_eq!(doc.schema_version, "1");
        let emitted = serde_json::to_string(&doc).unwrap();
        let back: OutputDocument = serde_json::from_str(&emitted).unwrap();
        assert_eq!(back, doc, "{c}");
    }
}

/// Parse "4 Q + M2(Q(z8))" into algebra -> multiplicity.
fn text_multiset(text: &str) -> BTreeMap<String, u64> {
    let mut out = BTreeMap::new();
    for part in text.split(" + ") {
        let (mult, algebra) = match part.split_once(' ') {
            Some((m, a)) if m.chars().all(|c| c.is_ascii_digit()) => (m.parse().unwrap(), a.to_string()),
            _ => (1, part.to_string()),
        };
        *out.entry(algebra).or_insert(0) += mult;
    }
    out
}

#[test]
fn text_and_json_decompositions_agree() {
    for tuple in [G1, "-p 3 -n 3 -m 3 -r 1 -s 2", "-p 2 -n 4 -m 4 -r 1 -s 2", "-p 5 -n 2 -m 2 -r 0 -s 1"] {
        let (_, text, _) = call(&format!("wedderburn {tuple} --format text"));
        let Payload::Decomposition(d) = json(&format!("wedderburn {tuple}")).payload else { panic!() };
        let mut from_json = BTreeMap::new();
        for c in &d.components {
            let algebra = if c.matrix_size == "1" { c.field.clone() } else { format!("M{}({})", c.matrix_size, c.field) };
            *from_json.entry(algebra).or_insert(0) += c.multiplicity.parse::<u64>().unwrap();
        }
        assert_eq!(text_multiset(text.trim()), from_json, "{tuple}");
        assert_eq!(d.text, text.trim());
    }
}

#[test]
fn order_512_matrices_are_integral() {
    let Payload::GaloisClasses(g) = json("galois-classes -p 2 -n 5 -m 4 -r 2 -s 3").payload else { panic!() };
    let id = g.classes.iter().find(|c| c.faithful).unwrap().id;
    let Payload::Representation(r) = json(&format!("rational-rep -p 2 -n 5 -m 4 -r 2 -s 3 --class {id}")).payload
    else {
        panic!()
    };
    assert_eq!(r.degree, 32);
    assert!(r.integral);
    for mat in [&r.a, &r.b] {
        assert_eq!(mat.len(), 32);
        assert!(mat.iter().flatten().all(|x| ["0", "1", "-1"].contains(&x.as_str())));
    }
}

#[test]
fn rational_counts_sum_to_class_count() {
    let Payload::RationalCounts(c) = json(&format!("rational-count {G1}")).payload else { panic!() };
    let Payload::GaloisClasses(g) = json(&format!("galois-classes {G1}")).payload else { panic!() };
    assert_eq!(c.total.parse::<usize>().unwrap(), g.classes.len());
    let degrees: Vec<&str> = c.counts.iter().map(|e| e.degree.as_str()).collect();
    assert_eq!(degrees, ["1", "2", "4", "8", "16"]);
}

#[test]
fn sweep_reports_distinct() {
    let Payload::Sweep(s) = json("sweep --max-order 729").payload else { panic!() };
    assert!(s.all_passed && s.pairwise_distinct);
    assert!(s.entries.iter().all(|e| e.order.parse::<u64>().unwrap() <= 729));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_metacyclic");
    let out = Command::new(bin).args(["wedderburn", "-p", "3", "-n", "3", "-m", "3", "-r", "1", "-s", "2", "--format", "text"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "Q + 4 Q(z3) + 3 Q(z9) + 3 Q(z27) + 3 M3(Q(z3)) + 2 M3(Q(z9)) + M9(Q(z9))"
    );
    let bad = Command::new(bin).args(["validate", "-p", "2", "-n", "3", "-m", "1", "-r", "0", "-s", "2"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let usage = Command::new(bin).arg("sweep").output().unwrap();
    assert_eq!(usage.status.code(), Some(64));
}
