use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const W6: &str = "ptg 1\nn 6\nadj 1: 2 3 4 5 6\nadj 2: 1 6 3\nadj 3: 1 2 4\nadj 4: 1 3 5\nadj 5: 1 4 6\nadj 6: 1 5 2\nouter: 2 3 4 5 6\n";

fn ptg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ptg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn generate(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let p = path.to_str().unwrap().to_string();
    let mut full = vec!["generate"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", &p]);
    let o = ptg(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    p
}

#[test]
fn validate_and_stats() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "w6.ptg", W6);
    let o = ptg(&["validate", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "valid n=6 e=10 f=5 t=5 n_e=5 n_i=1\n");
    let o = ptg(&["stats", f.to_str().unwrap()]);
    assert!(stdout(&o).contains("3f=2e-t true\n"));
    assert!(stdout(&o).contains("e=2n_e+3n_i-3 true\n"));
}

#[test]
fn bad_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let missing_outer = write(dir.path(), "a.ptg", &W6.replace("outer: 2 3 4 5 6\n", ""));
    let o = ptg(&["validate", missing_outer.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("outer"));
    let quad = write(dir.path(), "q.ptg", "ptg 1\nn 4\nadj 1: 2 4\nadj 2: 3 1\nadj 3: 4 2\nadj 4: 1 3\nouter: 1 2 3 4\n");
    assert_eq!(ptg(&["check-chordal", quad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(ptg(&["validate", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(ptg(&["generate", "wheel", "3"]).status.code(), Some(2));
    assert_eq!(ptg(&["generate", "w-delta", "5", "6", "6"]).status.code(), Some(2));
    assert_eq!(ptg(&["generate", "nope", "1"]).status.code(), Some(2));
}

#[test]
fn chordality_verdicts_and_certificates() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "w6.ptg", W6);
    let o = ptg(&["check-chordal", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let report = stdout(&o);
    assert!(report.starts_with("VERDICT not-chordal\nCERT wheel hub=1 rim="), "{report}");
    let o = ptg(&["check-chordal", "--fail-on-negative", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));

    let cert = write(dir.path(), "w6.cert", &report);
    let o = ptg(&["verify-cert", f.to_str().unwrap(), cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("valid CERT wheel"));

    let forged = write(dir.path(), "bad.cert", "CERT oddhole cycle=2,3,4,5\n");
    let o = ptg(&["verify-cert", f.to_str().unwrap(), forged.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("invalid"));

    let k4 = generate(dir.path(), "k4.ptg", &["wheel", "4"]);
    let o = ptg(&["check-chordal", "--fail-on-negative", &k4]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "VERDICT chordal\n".to_string()));
}

#[test]
fn twelve_vertex_w_delta_through_the_cli() {
    let dir = TempDir::new().unwrap();
    let f = generate(dir.path(), "wd666.ptg", &["w-delta", "6", "6", "6"]);
    assert_eq!(stdout(&ptg(&["validate", &f])), "valid n=12 e=24 f=13 t=9 n_e=9 n_i=3\n");
    for extra in [&[][..], &["--w5-free-only"][..]] {
        let mut args = vec!["check-perfect"];
        args.extend_from_slice(extra);
        args.push(&f);
        let o = ptg(&args);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), "VERDICT not-perfect\nCERT wdelta x=1 y=2 z=3 hole=4,5,6,7,8,9,10,11,12\n");
    }
    let tree = stdout(&ptg(&["decompose", &f]));
    assert_eq!(
        tree,
        "leaf w-near even_internal=true eulerian=false min_internal_degree=6 vertices=1,2,3,4,5,6,7,8,9,10,11,12\n"
    );
}

#[test]
fn w5_and_budget() {
    let dir = TempDir::new().unwrap();
    let w5 = generate(dir.path(), "w5.ptg", &["wheel", "5"]);
    let o = ptg(&["check-perfect", "--w5-free-only", "--fail-on-negative", &w5]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("VERDICT not-w5-free\nCERT wheel hub=1 "));
    let o = ptg(&["check-perfect", &w5]);
    assert_eq!(stdout(&o), "VERDICT perfect\n");
    let o = ptg(&["check-perfect", "--budget", "1", &w5]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(4), "VERDICT unknown\n".to_string()));
}

#[test]
fn decompose_prints_separators() {
    let dir = TempDir::new().unwrap();
    let f = generate(dir.path(), "fan.ptg", &["fan", "5"]);
    let tree = stdout(&ptg(&["decompose", &f]));
    assert_eq!(
        tree,
        "split chord(1,3) vertices=1,2,3,4,5\n  leaf triangle vertices=1,2,3\n  split chord(1,4) vertices=1,3,4,5\n    leaf triangle vertices=1,3,4\n    leaf triangle vertices=1,4,5\n"
    );
}

#[test]
fn generation_is_reproducible() {
    let a = ptg(&["generate", "random-near", "9", "3", "40", "--seed", "11"]);
    let b = ptg(&["generate", "random-near", "9", "3", "40", "--seed", "11"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("ptg 1\nn 12\n"));
    let c = ptg(&["generate", "apollonian", "20", "--seed", "7"]);
    assert_ne!(stdout(&c), "");
}

#[test]
fn fuzz_reports_are_deterministic() {
    let args = ["fuzz", "--max-n", "10", "--instances", "300", "--seed", "5"];
    let one = ptg(&[&args[..], &["--threads", "1"]].concat());
    let two = ptg(&[&args[..], &["--threads", "3"]].concat());
    let again = ptg(&[&args[..], &["--threads", "1"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, two.stdout);
    assert_eq!(one.stdout, again.stdout);
    let text = stdout(&one);
    assert!(text.starts_with("fuzz max_n=10 instances=300 seed=5 budget=10000000\ninstances 300\nagreements 300\n"));
    assert!(text.ends_with("status ok\n"));

    let tiny = ptg(&["fuzz", "--max-n", "4", "--instances", "10", "--seed", "3"]);
    assert!(stdout(&tiny).contains("agreements 10\n"));
    assert_eq!(ptg(&["fuzz", "--max-n", "3"]).status.code(), Some(2));
}

#[test]
fn fuzz_budget_exhaustion_exits_4() {
    let o = ptg(&["fuzz", "--max-n", "12", "--instances", "50", "--seed", "1", "--budget", "5"]);
    assert_eq!(o.status.code(), Some(4));
    let text = stdout(&o);
    assert!(text.contains("\nBUDGET seed="));
    assert!(text.ends_with("status budget-exhausted\n"));
}
