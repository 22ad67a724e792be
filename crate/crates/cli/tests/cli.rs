use std::path::PathBuf;
use std::process::{Command, Output};

use dscring_core::report::{DecompositionReport, SpecSummary, VerdictReport};
use dscring_core::structure::{Answer, SpecCase};

fn corpus(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dscring")).args(args).output().unwrap()
}

fn temp_ring(name: &str, text: &str) -> String {
    let p = std::env::temp_dir().join(format!("dscring-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_exit_codes() {
    let yes = run(&["classify", &corpus("xy-cubes.ring")]);
    assert_eq!(yes.status.code(), Some(0));
    assert!(stdout(&yes).contains("M = R(x) ⊕ R(y)"));

    let no = run(&["classify", &corpus("three-cubes.ring")]);
    assert_eq!(no.status.code(), Some(1));
    assert!(stdout(&no).contains("generated by: x1 + x2, x1 + x3"));

    let bad = temp_ring("bad.ring", "field 2\nvars x\nrel x*z\n");
    let o = run(&["classify", &bad]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("3:7"));

    let odd = temp_ring("odd.ring", "field 3\nvars x y\nrel x^2\nrel y^2\n");
    assert_eq!(run(&["classify", &odd]).status.code(), Some(2));

    assert_eq!(run(&["classify"]).status.code(), Some(3));
    assert_eq!(run(&["classify", "/no/such/file.ring"]).status.code(), Some(3));
}

#[test]
fn product_rings() {
    let both = run(&["classify", &corpus("xy-cubes.ring"), &corpus("square-zero-2.ring")]);
    assert_eq!(both.status.code(), Some(0));
    let mixed = run(&["--json", "classify", &corpus("xy-cubes.ring"), &corpus("three-cubes.ring")]);
    assert_eq!(mixed.status.code(), Some(1));
    let r: VerdictReport = serde_json::from_str(&stdout(&mixed)).unwrap();
    assert_eq!(r.counterexample.unwrap().factor, Some(1));

    let odd = temp_ring("odd-factor.ring", "field 3\nvars x y\nrel x^2\nrel y^2\n");
    assert_eq!(run(&["classify", &corpus("xy-cubes.ring"), &odd]).status.code(), Some(2));
}

#[test]
fn json_round_trips_and_is_deterministic() {
    for name in ["xy-cubes.ring", "three-cubes.ring", "xy-trunc.ring"] {
        let a = run(&["--json", "classify", &corpus(name)]);
        let b = run(&["--json", "classify", &corpus(name)]);
        assert_eq!(a.stdout, b.stdout, "{name}");
        let r: VerdictReport = serde_json::from_str(&stdout(&a)).unwrap();
        assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", stdout(&a));
    }
    let r: VerdictReport = serde_json::from_str(&stdout(&run(&["--json", "classify", &corpus("xy-cubes.ring")]))).unwrap();
    assert_eq!(r.dsc, Answer::Yes);
}

#[test]
fn decompose_examples() {
    let f = corpus("xy-cubes.ring");
    let d: DecompositionReport =
        serde_json::from_str(&stdout(&run(&["--json", "decompose", &f, "--ideal", "x+y"]))).unwrap();
    assert_eq!(d.generators, ["x + y"]);
    assert_eq!(d.branch, "diagonal");

    let d: DecompositionReport =
        serde_json::from_str(&stdout(&run(&["--json", "decompose", &f, "--ideal", "x, y"]))).unwrap();
    assert_eq!(d.generators, ["x", "y"]);
    assert_eq!(d.dims, [2, 2]);

    let d: DecompositionReport =
        serde_json::from_str(&stdout(&run(&["--json", "decompose", &f, "--ideal", "0"]))).unwrap();
    assert!(d.generators.is_empty());

    let no = run(&["decompose", &corpus("three-cubes.ring"), "--ideal", "x1"]);
    assert_eq!(no.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&no.stderr).contains("not DSC"));

    let garbage = run(&["decompose", &f, "--ideal", "x + q"]);
    assert_eq!(garbage.status.code(), Some(3));
}

#[test]
fn spec_examples() {
    let spec = |name: &str| -> SpecSummary {
        serde_json::from_str(&stdout(&run(&["--json", "spec", &corpus(name)]))).unwrap()
    };
    let r4 = spec("xy-y2-trunc.ring");
    assert_eq!((r4.case, r4.primes.as_slice()), (SpecCase::C, &["M".to_string(), "Ry".to_string()][..]));
    assert!(r4.truncated_model);
    assert_eq!(spec("square-zero-2.ring").primes, ["M"]);
    assert_eq!(spec("xy-trunc.ring").primes, ["M", "Rx", "Ry"]);
    assert_eq!(spec("power-series-x.ring").primes, ["(0)", "M"]);
    assert_eq!(run(&["spec", &corpus("three-cubes.ring")]).status.code(), Some(3));
}

#[test]
fn truncate_override() {
    let lower = run(&["--json", "--truncate", "4", "oracle", &corpus("power-series-x.ring")]);
    assert_eq!(stdout(&lower).lines().count(), 5);
    let t = run(&["--truncate", "1", "classify", &corpus("power-series-x.ring")]);
    assert_eq!(t.status.code(), Some(3));
}

#[test]
fn oracle_lines() {
    let o = run(&["--json", "oracle", &corpus("square-zero-2.ring")]);
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 6);
    assert!(lines.iter().all(|l| l["decomposable"] == true));
    let big = run(&["--max-oracle-dim", "3", "oracle", &corpus("xy-cubes.ring")]);
    assert_eq!(big.status.code(), Some(3));
}

#[test]
fn corpus_selection() {
    let all = run(&["corpus"]);
    assert_eq!(all.status.code(), Some(0), "{}", stdout(&all));
    let text = stdout(&all);
    let rows: Vec<&str> = text.lines().map(|l| l.split_whitespace().next().unwrap()).collect();
    let mut sorted = rows.clone();
    sorted.sort();
    assert_eq!(rows, sorted);

    let two = stdout(&run(&["corpus", "two-axes"]));
    assert_eq!(two.lines().count(), 2);
    let quick = stdout(&run(&["corpus", "xy-cubes", "--no-oracle"]));
    assert!(quick.contains("unverified by oracle"));
    assert_eq!(run(&["corpus", "nothing-here"]).status.code(), Some(3));
}
