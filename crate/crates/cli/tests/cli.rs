use std::collections::BTreeSet;
use std::process::Command;

use clap::Parser;
use mbe_cli::args::{Cli, Scope};
use mbe_cli::checks::{run_verify, Catalog};
use mbe_cli::report::Status;
use mbe_cli::scan::{grid, run_scan};
use mbe_core::{rat, Deformation, ParamMatrix, RatFunc, Rational, Var};

fn mbe(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mbe")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run_lib(args: &[&str]) -> (i32, String) {
    let cli = Cli::try_parse_from(std::iter::once("mbe").chain(args.iter().copied())).unwrap();
    let mut buf = Vec::new();
    let code = mbe_cli::run(cli, &mut buf).unwrap();
    (code, String::from_utf8(buf).unwrap())
}

fn failing(catalog: &Catalog) -> BTreeSet<String> {
    run_verify(catalog, Scope::All)
        .into_iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} [{}]", r.check, r.deformation.unwrap_or_default()))
        .collect()
}

fn corrupted_pq(k: &RatFunc) -> ParamMatrix {
    let mut m = (Deformation::Pq.spec().rhat)(k);
    let bumped = m.get(1, 2) + &RatFunc::one();
    m.set(1, 2, bumped);
    m
}

#[test]
fn corrupted_catalog_entry_is_caught() {
    let baseline = failing(&Catalog::default());
    let broken = failing(&Catalog::default().with_rhat(Deformation::Pq, corrupted_pq));
    assert!(baseline.is_subset(&broken));
    for check in ["catalog/hecke [pq]", "rtt/rtt_residual [pq]", "identities/braid_values [pq]"] {
        assert!(!baseline.contains(check));
        assert!(broken.contains(check), "{check} should fail for the corrupted entry");
    }
    // the other families are untouched
    assert!(!broken.iter().any(|c| c.ends_with("[gh]") && !baseline.contains(c)));
}

#[test]
fn scope_filters_checks() {
    let reports = run_verify(&Catalog::default(), Scope::Plane);
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r.check.starts_with("plane/")));
    let all = run_verify(&Catalog::default(), Scope::All);
    assert!(all.len() >= 40);
}

#[test]
fn verify_exit_code_tracks_failures() {
    let (code, out, _) = mbe(&["verify", "--scope", "rtt"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 9);
    let (code, out, _) = mbe(&["verify", "--scope", "identities"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL identities/mbe [pq]"));
}

#[test]
fn json_reports_follow_schema() {
    let (_, out) = run_lib(&["verify", "--scope", "contraction", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 4);
    for item in items {
        let obj = item.as_object().unwrap();
        let keys: BTreeSet<&str> = obj.keys().map(String::as_str).collect();
        assert_eq!(keys, BTreeSet::from(["check", "deformation", "status", "detail"]));
        assert_eq!(obj["status"], "PASS");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(mbe(&["scan", "--deformation", "pq", "--kmin", "0.5", "--kmax", "1", "--steps", "3"]).0, 2);
    assert_eq!(mbe(&["verify", "--scope", "everything"]).0, 2);
    assert_eq!(mbe(&["frobnicate"]).0, 2);
    // a missing binding is an input error, reported after parsing
    let (code, _, err) = mbe(&["scan", "--deformation", "pq", "--p", "2", "--kmin", "0", "--kmax", "1", "--steps", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("--q"), "{err}");
}

#[test]
fn scan_csv_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let args = [
            "scan", "--deformation", "pq", "--p", "2", "--q", "3", "--kmin", "0", "--kmax", "2", "--steps", "31",
            "--csv", path.to_str().unwrap(),
        ];
        assert_eq!(mbe(&args).0, 0);
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let text = String::from_utf8(ta).unwrap();
    assert_eq!(text.lines().count(), 32);
    assert!(text.starts_with("K,residual_fro\n"));
}

#[test]
fn scan_grid_containing_both_braid_values() {
    // step 1/600 puts K = 2/3 on the grid; K = 0 is a zero too since R(0) = I
    let d = Deformation::Pq.spec();
    let b = [(Var::P, rat(2, 1)), (Var::Q, rat(3, 1))];
    let rows = run_scan(&d, &b, &grid(&rat(0, 1), &rat(2, 1), 1201)).unwrap();
    let zeros: Vec<Rational> = rows.iter().filter(|r| r.residual_fro() < 1e-12).map(|r| r.k.clone()).collect();
    assert_eq!(zeros, vec![rat(0, 1), rat(2, 3), rat(1, 1)]);
    assert!(rows.iter().all(|r| r.residual_fro() < 1e-12 || r.residual_fro() > 1e-6));
}

#[test]
fn scan_gh_rows() {
    let (code, out) = run_lib(&["scan", "--deformation", "gh", "--g", "1", "--h", "2", "--kmin", "1", "--kmax", "2", "--steps", "2"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows[1], "1.0000000000000000e0,0.0000000000000000e0");
    let positive: f64 = rows[2].split(',').nth(1).unwrap().parse().unwrap();
    assert!(positive > 0.0);
}

#[test]
fn plane_normal_orders_expressions() {
    let (_, out) = run_lib(&["plane", "--deformation", "pq", "--expr", "y*x"]);
    assert_eq!(out.trim(), "p*x*y");
    let (_, out) = run_lib(&["plane", "--deformation", "gh", "--expr", "xi*xi", "--h", "3"]);
    assert_eq!(out.trim(), "3*xi*eta");
    let (_, out) = run_lib(&["plane", "--deformation", "pq", "--K", "1", "--expr", "(eta*x - p*xi*y)^2"]);
    assert_eq!(out.trim(), "0");
    let (_, out) = run_lib(&["plane", "--deformation", "gh", "--expr", "c*a"]);
    assert_eq!(out.trim(), "a*c - g*c*c");
}

#[test]
fn plane_rejects_bad_input() {
    let (code, _, err) = mbe(&["plane", "--deformation", "pq", "--expr", "x*("]);
    assert_eq!(code, 2);
    assert!(err.contains("offset 3"), "{err}");
    assert_eq!(mbe(&["plane", "--deformation", "pq", "--expr", "a*x"]).0, 2);
    assert_eq!(mbe(&["plane", "--deformation", "pq", "--expr", "z"]).0, 2);
}

#[test]
fn solve_rtt_reports_two_dimensional_family() {
    let (code, out) = run_lib(&["solve-rtt", "--deformation", "gh", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rank"], 14);
    assert_eq!(v["nullity"], 2);
    assert_eq!(v["basis"].as_array().unwrap().len(), 2);
}

#[test]
fn contract_reports_every_identity() {
    let (code, out) = run_lib(&["contract"]);
    assert_eq!(code, 0, "{out}");
    // matrix, six group relations, five plane identities, four scalar limits
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 16);
    let reports = mbe_cli::contract_reports().unwrap();
    assert!(reports.iter().all(|r| r.status == Status::Pass));
}
