use std::process::{Command, Output};
use zerograph::approx::ApproxResult;
use zerograph::poly::json::{parse_poly_json, AnyPoly, PolyJson, RootSetJson};
use zerograph::poly::ExactPoly;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zerograph"))
        .args(args)
        .env_remove("ZEROGRAPH_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn edge_cover_of_triangle() {
    let o = run(&["poly", "--kind", "edgecover", "--gen", "complete:3"]);
    assert_eq!(code(&o), 0);
    let p: PolyJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(p.coeffs, ["0", "0", "3", "1"]);
}

#[test]
fn maxcut_of_claw_free_graph() {
    let o = run(&["poly", "--kind", "maxcut", "--gen", "fig3a"]);
    assert_eq!(code(&o), 0);
    let p = parse_poly_json(&stdout(&o)).unwrap();
    assert_eq!(p, AnyPoly::Exact(ExactPoly::from_ints(&[0, 0, 1, 0, 1])));
}

#[test]
fn verify_exit_codes() {
    let ok = run(&[
        "verify",
        "--kind",
        "ising-line",
        "--gen",
        "path:5",
        "--b",
        "2",
        "--claim",
        "real-negative",
    ]);
    assert_eq!(code(&ok), 0, "{}", stdout(&ok));
    let fail = run(&[
        "verify",
        "--kind",
        "maxcut",
        "--gen",
        "fig3a",
        "--claim",
        "real-negative",
    ]);
    assert_eq!(code(&fail), 1);
    let report: serde_json::Value = serde_json::from_str(&stdout(&fail)).unwrap();
    assert_eq!(report["pass"], false);
    let cardioid = run(&[
        "verify",
        "--kind",
        "edgecover",
        "--gen",
        "cycle:6",
        "--claim",
        "cardioid",
    ]);
    assert_eq!(code(&cardioid), 0);
}

#[test]
fn usage_and_compute_errors() {
    assert_eq!(
        code(&run(&["poly", "--kind", "nope", "--gen", "path:3"])),
        2
    );
    assert_eq!(
        code(&run(&["poly", "--kind", "ising", "--gen", "path:3"])),
        2
    );
    assert_eq!(
        code(&run(&[
            "poly",
            "--kind",
            "edgecover",
            "--gen",
            "path:3",
            "--in",
            "x"
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "verify",
            "--kind",
            "edgecover",
            "--gen",
            "path:3",
            "--claim",
            "disk:-1"
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "poly",
            "--kind",
            "edgecover",
            "--gen",
            "complete:40"
        ])),
        3
    );
    let outside = run(&[
        "approx",
        "--kind",
        "edgecover",
        "--gen",
        "complete:3",
        "--xi",
        "1,0",
        "--m",
        "2",
    ]);
    assert_eq!(code(&outside), 2);
    let bad_threads = Command::new(env!("CARGO_BIN_EXE_zerograph"))
        .args(["poly", "--kind", "edgecover", "--gen", "path:3"])
        .env("ZEROGRAPH_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(code(&bad_threads), 2);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "roots",
        "--kind",
        "edgecover",
        "--gen",
        "random_multigraph:6,9:3",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let threaded = Command::new(env!("CARGO_BIN_EXE_zerograph"))
        .args(args)
        .env("ZEROGRAPH_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, threaded.stdout);
}

#[test]
fn polynomial_file_round_trips_into_roots() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    let path = path.to_str().unwrap();
    let o = run(&[
        "poly",
        "--kind",
        "edgecover",
        "--gen",
        "path:5",
        "--out",
        path,
    ]);
    assert_eq!(code(&o), 0);
    let roots = run(&["roots", "--in", path]);
    assert_eq!(code(&roots), 0);
    let r: RootSetJson = serde_json::from_str(&stdout(&roots)).unwrap();
    // E(P5) = z^3 (z + 2)
    assert_eq!(r.degree, 4);
    assert!(r
        .roots
        .iter()
        .all(|z| z.re >= -4.0 && z.re <= 0.0 && z.im.abs() < 1e-9));
    let again: RootSetJson = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(again, r);
}

#[test]
fn symbolic_b_round_trips() {
    let o = run(&[
        "poly",
        "--kind",
        "ising-line",
        "--gen",
        "star:3",
        "--b",
        "sym",
    ]);
    assert_eq!(code(&o), 0);
    assert!(matches!(
        parse_poly_json(&stdout(&o)).unwrap(),
        AnyPoly::Symbolic(_)
    ));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sym.json");
    std::fs::write(&path, o.stdout).unwrap();
    assert_eq!(code(&run(&["roots", "--in", path.to_str().unwrap()])), 2);
}

#[test]
fn approx_sweep_reports_every_order() {
    let o = run(&[
        "approx",
        "--kind",
        "edgecover",
        "--gen",
        "complete:3",
        "--xi",
        "8,0",
        "--m",
        "3",
        "--sweep",
    ]);
    assert_eq!(code(&o), 0);
    let runs: Vec<ApproxResult> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(runs.len(), 3);
    let last = runs.last().unwrap();
    assert!(last.abs_err.unwrap() < 1e-9);
    assert!((last.approx_log.re - 704f64.ln()).abs() < 1e-9);
    let line = run(&[
        "approx",
        "--kind",
        "ising-line",
        "--gen",
        "path:6",
        "--b",
        "2",
        "--xi",
        "-0.01,0.002",
        "--m",
        "4",
    ]);
    assert_eq!(code(&line), 0, "{}", String::from_utf8_lossy(&line.stderr));
}

#[test]
fn plotdata_has_roots_and_boundary() {
    let o = run(&[
        "plotdata",
        "--kind",
        "edgecover",
        "--gen",
        "cycle:5",
        "--samples",
        "8",
    ]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("series,re,im,cardioid_margin"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.iter().filter(|l| l.starts_with("root,")).count(), 5);
    assert_eq!(
        rows.iter().filter(|l| l.starts_with("cardioid,")).count(),
        8
    );
}

#[test]
fn verify_csv_and_edge_list_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    std::fs::write(&path, "# a square\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let o = run(&[
        "verify",
        "--kind",
        "edgecover",
        "--in",
        path.to_str().unwrap(),
        "--claim",
        "cardioid",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("re,im,margin,verdict\n"));
}

#[test]
fn key_polynomial_and_selftest() {
    let o = run(&["poly", "--kind", "key", "--d", "2", "--b", "3"]);
    assert_eq!(code(&o), 0);
    let p: PolyJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(p.coeffs, ["1/3", "2", "1/3"]);
    let s = run(&["selftest", "--only", "5"]);
    assert_eq!(code(&s), 0);
    assert!(stdout(&s).starts_with("PASS  5"));
}
