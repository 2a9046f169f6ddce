use std::process::{Command, Output};

use costress::SimplicialComplex;

fn costress(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_costress")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("costress-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn every_subcommand_succeeds_on_bundled_data() {
    let runs: &[&[&str]] = &[
        &["analyze", "rp2.json"],
        &["stress", "gamma.json"],
        &["perp", "pinched_torus.json"],
        &["wlp", "gamma.json", "--caps", "3"],
        &["hilbert", "rp2.json", "--caps", "4"],
        &["compositions", "verify", "--dmax", "4"],
        &["compositions", "count", "--n", "6", "--k", "2", "--l", "4"],
        &["lm", "--n", "7", "--d", "2", "--p", "0.5", "--trials", "5", "--seed", "1"],
        &["cd", "--dmax", "4"],
    ];
    for args in runs {
        let o = costress(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stdout.is_empty(), "{args:?} printed nothing");
    }
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["frobnicate"][..],
        &["lm", "--n", "8", "--d", "2", "--p", "0.5", "--trials", "3"],
        &["wlp"],
        &["cd", "--dmax", "many"],
    ] {
        assert_eq!(costress(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(costress(&["--help"]).status.code(), Some(0));
}

#[test]
fn domain_errors_exit_with_one() {
    let empty = scratch("empty.json");
    std::fs::write(&empty, r#"{"facets":[[]]}"#).unwrap();
    let empty = empty.to_str().unwrap();
    for args in [
        &["analyze", empty][..],
        &["analyze", "/nonexistent/complex.json"],
        &["lm", "--n", "8", "--d", "2", "--p", "1.5", "--trials", "3", "--seed", "0"],
        &["compositions", "verify", "--dmax", "0"],
        &["wlp", "rp2.json", "--caps", "1,2"],
    ] {
        let o = costress(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn emitted_json_round_trips() {
    let path = scratch("lambda.json");
    let o = costress(&["analyze", "pinched_torus.json", "--emit", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let emitted = std::fs::read_to_string(&path).unwrap();
    let reread = SimplicialComplex::from_json_str(&emitted).unwrap();
    assert_eq!(reread, costress::datasets::pinched_torus());
    assert_eq!(reread.to_json_string(), emitted.trim_end());
}

#[test]
fn monte_carlo_output_is_deterministic() {
    let args = ["lm", "--n", "8", "--d", "2", "--p", "0.6", "--trials", "40", "--seed", "99", "--mode", "wlp_direct"];
    let a = stdout(&costress(&args));
    let b = stdout(&costress(&args));
    assert_eq!(a, b);
    let other = stdout(&costress(&["lm", "--n", "8", "--d", "2", "--p", "0.6", "--trials", "40", "--seed", "100", "--mode", "wlp_direct"]));
    assert_eq!(a.lines().next(), other.lines().next());
}

#[test]
fn quotient_table_for_sigma_over_two_elements() {
    let out = stdout(&costress(&["wlp", "rp2.json", "--caps", "4", "--field", "2", "--quotient"]));
    assert!(out.contains("HF_L,1,5,15,25,30,21,10,0,0,0,0"), "{out}");
    assert!(out.contains("wlp,fails"));
}

#[test]
fn threshold_table_prints_truncated_values() {
    let out = stdout(&costress(&["cd"]));
    assert_eq!(out.trim(), "d,2,3,4,5,6,7,8\nc_d,2.783,3.91,4.962,5.984,6.993,7.997,8.998");
}
