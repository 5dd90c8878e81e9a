use aff_lorentz::cli::{color_enabled, paint, run, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, EXIT_VERIFY};
use serde_json::Value;
use std::process::Command;

fn cli(args: &str) -> aff_lorentz::cli::Outcome {
    run(std::iter::once("aff-lorentz").chain(args.split_whitespace()))
}

fn json(args: &str) -> Value {
    let out = cli(args);
    assert_eq!(out.code, EXIT_OK, "{args}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn interior_distance_query() {
    let v = json("distance --preset P1 --to 1,1.41421356237 --format json");
    let d = v["distance"].as_f64().unwrap();
    assert!((d - std::f64::consts::FRAC_PI_4).abs() < 1e-11);
    assert_eq!(v["stratum"], "Interior");
    assert_eq!(v["maximizerExists"], true);
}

#[test]
fn region_e_distance_query() {
    let v = json("distance --preset P1 --to 4,2");
    assert_eq!(v["distance"], "inf");
    assert_eq!(v["stratum"], "RegionE");
    assert_eq!(v["maximizerExists"], false);
    assert!(v["psi0"].is_null());
}

#[test]
fn flat_curvature_query() {
    let out = cli("curvature --preset P3");
    assert!(out.stdout.contains("\"K\": 0,"));
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["sign"], "Zero");
    assert_eq!(json("curvature --preset P1")["K"], -1);
    assert_eq!(json("curvature --preset P2")["K"], 1);
}

#[test]
fn golden_output_is_byte_stable() {
    for args in [
        "distance --preset P1 --to 1,1.41421356237 --format json",
        "distance --preset P1 --to 4,2",
        "curvature --preset P3",
    ] {
        let first = cli(args);
        for _ in 0..5 {
            assert_eq!(cli(args), first);
        }
    }
}

#[test]
fn matrix_and_starting_point_flags() {
    let v = json("distance --matrix 0,1,-1,0 --from -1,2 --to -1,2");
    assert_eq!(v["distance"], 0);
    let v = json("classify --matrix=2,-1,-2,2 --point 0,0.5");
    assert!(v["stratum"].is_string());
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        "",
        "bogus",
        "distance --preset P1",
        "distance --preset P4 --to 1,1",
        "distance --preset P1 --to 1,-1",
        "distance --preset P1 --to pi,1",
        "distance --preset P1 --to 1",
        "distance --preset P1 --matrix 1,0,0,1 --to 1,1",
        "curvature --matrix 1,2,3",
        "curvature --preset P1 --format svg",
        "geodesic --preset P1",
    ] {
        let out = cli(args);
        assert_eq!(out.code, EXIT_USAGE, "`{args}` gave {}: {}", out.code, out.stderr);
        assert!(!out.stderr.is_empty() && out.stdout.is_empty());
    }
    assert!(cli("distance --preset P1 --to 1,x").stderr.contains("--to"));
}

#[test]
fn domain_errors_exit_with_three() {
    for (args, name) in [
        ("sphere --preset P1 --radius 4", "EmptySphere"),
        ("sphere --preset P1 --radius -1", "InvalidRadius"),
        ("embed --preset P1 --point 1,2", "WrongCurvature"),
        ("curvature --matrix 1,0,0,-1", "OrientationViolation"),
        ("curvature --matrix 1,1,1,1", "DegenerateMatrix"),
        ("geodesic --preset P1 --to 4,2", "NotInDomain"),
    ] {
        let out = cli(args);
        assert_eq!(out.code, EXIT_DOMAIN, "`{args}`: {}", out.stderr);
        assert!(out.stderr.contains(name), "`{args}`: {}", out.stderr);
    }
}

#[test]
fn verification_exit_codes() {
    let ok = cli("verify --preset P2");
    assert_eq!(ok.code, EXIT_OK);
    assert!(ok.stdout.contains("PASS") && !ok.stdout.contains("FAIL"));
    // λ = 10⁶: sphere points land ~10⁷ out along the cone, past what doubles resolve
    let bad = cli("verify --matrix 1e-3,0,0,1e3");
    assert_eq!(bad.code, EXIT_VERIFY);
    assert!(bad.stdout.contains("FAIL"));
}

#[test]
fn csv_and_svg_documents() {
    let out = cli("geodesic --preset P2 --psi0 0 --tmax 1 --samples 3");
    assert_eq!(out.stdout, "t,x,y,psi\n0,0,1,0\n0.5,0,1.6487212707001282,0\n1,0,2.7182818284590451,0\n");
    let sphere = cli("sphere --preset P1 --radius 0.5 --samples 7").stdout;
    let mut rows = csv::Reader::from_reader(sphere.as_bytes());
    assert_eq!(rows.records().count(), 7);
    for args in ["sphere --preset P3 --radius 1.5 --format svg", "geodesic --preset P1 --to 1,1.5 --format svg"] {
        let svg = cli(args).stdout;
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"), "{args}");
        assert!(svg.contains("<polyline"));
    }
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("aff_lorentz_cli_{}.json", std::process::id()));
    let out = cli(&format!("distance --preset P2 --to 0,2 --out {}", path.display()));
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!((v["distance"].as_f64().unwrap() - std::f64::consts::LN_2).abs() < 1e-12);
    std::fs::remove_file(&path).unwrap();
    let bad = cli("curvature --preset P1 --out /nonexistent/dir/x.json");
    assert_eq!(bad.code, EXIT_USAGE);
}

#[test]
fn color_policy() {
    assert!(color_enabled(None, true));
    assert!(color_enabled(Some(""), true));
    assert!(!color_enabled(Some("1"), true));
    assert!(!color_enabled(None, false));
    assert_eq!(paint("error: x", false), "error: x");
    assert!(paint("error: x", true).starts_with("\x1b[31m"));
}

#[test]
fn binary_exit_codes_and_plain_stderr() {
    let bin = env!("CARGO_BIN_EXE_aff-lorentz");
    let status = |args: &[&str]| {
        let out = Command::new(bin).args(args).env("NO_COLOR", "1").output().unwrap();
        (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
    };
    let (code, stdout, _) = status(&["distance", "--preset", "P1", "--to", "4,2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, cli("distance --preset P1 --to 4,2").stdout);
    let (code, _, stderr) = status(&["sphere", "--preset", "P1", "--radius", "4"]);
    assert_eq!(code, 3);
    assert!(stderr.starts_with("error: EmptySphere") && !stderr.contains('\x1b'));
    assert_eq!(status(&["distance"]).0, 2);
}
