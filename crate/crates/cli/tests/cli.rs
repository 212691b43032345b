//! End-to-end tests of the binary: worked examples, exit codes, file output,
//! and byte-determinism.

use std::path::Path;
use std::process::{Command, Output};

fn canspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_canspec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn assert_close(value: &serde_json::Value, expect: &[f64], tol: f64) {
    let got: Vec<f64> = value
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect();
    assert_eq!(got.len(), expect.len(), "{got:?} vs {expect:?}");
    for (a, b) in got.iter().zip(expect) {
        assert!((a - b).abs() < tol, "{got:?} vs {expect:?}");
    }
}

#[test]
fn recover_one_plus_cos_example() {
    let out = canspec(&["recover", "--heights", "1,3,6,10,15", "--route", "both"]);
    let json = stdout_json(&out);
    assert_close(&json["alphas"], &[-0.5, -1.0 / 3.0, -0.25, -0.2], 1e-12);
    assert_close(&json["moments"], &[1.0, -0.5, 0.0, 0.0, 0.0], 1e-12);
    assert_eq!(json["positivity"], "valid through 4");
    assert_eq!(json["within_tolerance"], true);
}

#[test]
fn recover_flat_heights() {
    let out = canspec(&["recover", "--heights", "1,1,1"]);
    let json = stdout_json(&out);
    assert_close(&json["alphas"], &[0.0, 0.0], 1e-15);
    assert_close(&json["moments"], &[1.0, 0.0, 0.0], 1e-15);
}

#[test]
fn recover_geometric_generator() {
    let out = canspec(&["recover", "--geometric", "a=0.5", "--n", "10"]);
    let json = stdout_json(&out);
    let alphas = json["alphas"].as_array().unwrap();
    assert_eq!(alphas.len(), 9);
    for a in alphas {
        assert!((a.as_f64().unwrap() - 1.0 / 3.0).abs() < 1e-15);
    }
}

#[test]
fn recover_single_route_outputs() {
    let out = canspec(&["recover", "--heights", "1,3,6", "--route", "verblunsky"]);
    let json = stdout_json(&out);
    assert!(json.get("moments").is_none());
    assert_close(&json["alphas"], &[-0.5, -1.0 / 3.0], 1e-12);

    let out = canspec(&["recover", "--heights", "1,3,6", "--route", "moments"]);
    let json = stdout_json(&out);
    assert!(json.get("alphas").is_none());
    assert_close(&json["moments"], &[1.0, -0.5, 0.0], 1e-12);
}

#[test]
fn recover_rejects_bad_input_with_exit_1() {
    let out = canspec(&["recover", "--heights", "1,-3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());

    let out = canspec(&["recover", "--geometric", "a=-1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn recover_positivity_failure_exits_2() {
    // alternating extreme heights push the Schur complement below the
    // positivity threshold within a few steps
    let out = canspec(&["recover", "--heights", "1,5e-8,1,5e-8,1", "--route", "moments"]);
    assert_eq!(out.status.code(), Some(2), "stderr: {}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn periodize_constant_and_affine() {
    let out = canspec(&["periodize", "--h11", "const:1", "--T", "0.5", "--N", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,height"));
    for (n, line) in lines.enumerate() {
        assert_eq!(line, format!("{n},1.0000000000000000e0"));
    }

    let out = canspec(&["periodize", "--h11", "affine:b=1", "--T", "0.5", "--N", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0,1.25"), "{text}");
    assert!(text.contains("1,1.75"), "{text}");
}

#[test]
fn periodize_figure_one_moments() {
    let dir = tempfile::tempdir().unwrap();
    let moments_path = dir.path().join("moments.csv");
    let out = canspec(&[
        "periodize",
        "--h11",
        "inverse-square:c=0.25",
        "--T",
        "0.25",
        "--N",
        "22",
        "--heights-out",
        dir.path().join("heights.csv").to_str().unwrap(),
        "--moments-out",
        moments_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&moments_path).unwrap();
    let rows: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert!((rows[0] - (1.0 + 0.25 / 4.0)).abs() < 1e-10, "c0 = 1 + T/4");
    for &c in &rows[1..] {
        assert!((c - 0.25 / 4.0).abs() < 1e-10, "cn = T/4, got {c}");
    }
}

#[test]
fn density_of_recovered_heights() {
    let out = canspec(&[
        "density",
        "--heights",
        "1,3,6,10",
        "--grid",
        "0:3.2:3.141592653589793",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    // w(π) = 1 − cos(π) = 2
    let row = text.lines().nth(2).unwrap();
    let w: f64 = row.split(',').nth(1).unwrap().parse().unwrap();
    assert!((w - 2.0).abs() < 1e-10, "{row}");
}

#[test]
fn density_with_geronimus_comparison() {
    // negative alpha: no atom, so the partial sums track the density
    let alphas = vec!["-0.25"; 40].join(",");
    let out = canspec(&[
        "density",
        "--alphas",
        &alphas,
        "--compare",
        "geronimus:alpha=-0.25",
        "--grid",
        "2:4:0.5",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("x,w,comparison\n"));
    for line in text.lines().skip(1) {
        let cols: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
        assert!((cols[1] - cols[2]).abs() < 0.1, "{line}");
    }
}

#[test]
fn converge_zero_potential_is_flat() {
    let out = canspec(&[
        "converge",
        "--f",
        "const:0",
        "--a",
        "1",
        "--Ts",
        "0.5,0.25",
        "--grid",
        "-5:5:0.1",
    ]);
    let json = stdout_json(&out);
    for row in json["rows"].as_array().unwrap() {
        assert!(row["sup_weight_diff"].as_f64().unwrap() < 1e-7);
    }
}

#[test]
fn converge_decay_potential_decreases() {
    let out = canspec(&[
        "converge",
        "--f",
        "decay:1/(1+t)",
        "--a",
        "1",
        "--Ts",
        "0.5,0.25,0.125",
        "--grid",
        "-20:20:0.05",
    ]);
    let json = stdout_json(&out);
    assert_eq!(json["weight_monotone"], true);
    let rows = json["rows"].as_array().unwrap();
    let last = rows.last().unwrap()["sup_weight_diff"].as_f64().unwrap();
    assert!(last < 0.1, "final sup diff {last}");
}

#[test]
fn periodize_exp_density_matches_closed_form_midpoint() {
    // h11 = e^t, T = 1/2: the recovered 20-term density at the period center
    // tracks the closed-form family value T·√(e^T)/(e^T − 1)
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.csv");
    let out = canspec(&[
        "periodize",
        "--h11",
        "exp",
        "--T",
        "0.5",
        "--N",
        "40",
        "--terms",
        "20",
        "--heights-out",
        dir.path().join("h.csv").to_str().unwrap(),
        "--density-out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<(f64, f64)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let mut cols = l.split(',');
            (
                cols.next().unwrap().parse().unwrap(),
                cols.next().unwrap().parse().unwrap(),
            )
        })
        .collect();
    let period = std::f64::consts::PI / 0.5;
    let mid = period / 2.0;
    let (_, w_mid) = rows
        .iter()
        .min_by(|a, b| (a.0 - mid).abs().total_cmp(&(b.0 - mid).abs()))
        .unwrap();
    let t: f64 = 0.5;
    let expect = t * t.exp().sqrt() / (t.exp() - 1.0);
    assert!((w_mid - expect).abs() < 0.05, "w(mid) = {w_mid}, closed form {expect}");
}

#[test]
fn density_of_bare_mass_is_constant() {
    let out = canspec(&["density", "--moments", "2.5", "--grid", "0:6:1.5"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for line in text.lines().skip(1) {
        let w: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
        assert_eq!(w, 2.5);
    }
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let args = ["recover", "--heights", "2,5,9,14", "--route", "both"];
    let a = canspec(&args);
    let b = canspec(&args);
    assert_eq!(a.stdout, b.stdout);

    let args = ["density", "--moments", "1,-0.5,0.25", "--grid", "0:6:0.37"];
    let a = canspec(&args);
    let b = canspec(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_dir_env_var_resolves_relative_paths() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_canspec"))
        .args(["recover", "--heights", "1,3,6", "--out", "report.json"])
        .env("CANSPEC_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(Path::new(&dir.path().join("report.json")).exists());
}

#[test]
fn heights_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("heights.txt");
    std::fs::write(&path, "# index height\n0 1\n1 3\n2 6\n3 10\n").unwrap();
    let out = canspec(&["recover", "--heights-file", path.to_str().unwrap()]);
    let json = stdout_json(&out);
    assert_close(&json["moments"], &[1.0, -0.5, 0.0, 0.0], 1e-12);
}
