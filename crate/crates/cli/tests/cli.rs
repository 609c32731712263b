//! Behavioural tests of the volprod binary: exit codes, document
//! round-trips, and well-formedness of the emitted files.

use std::io::Write;
use std::process::{Command, Stdio};

fn volprod() -> Command {
    Command::new(env!("CARGO_BIN_EXE_volprod"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = volprod()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn volprod");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

const SQUARE: &str = r#"{"name":"square","vertices":[[-1,-1],[1,-1],[1,1],[-1,1]],"centre":[0,0]}"#;

#[test]
fn polar_square_gives_diamond() {
    let (code, out, _) = run_with_stdin(&["polar"], SQUARE);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["name"], "square_polar");
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 4);
}

#[test]
fn polar_twice_restores_body() {
    let (code, once, _) = run_with_stdin(&["polar"], SQUARE);
    assert_eq!(code, 0);
    let (code, twice, _) = run_with_stdin(&["polar"], &once);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&twice).unwrap();
    let verts = doc["vertices"].as_array().unwrap();
    let expected = [[-1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]];
    for (v, e) in verts.iter().zip(expected) {
        assert!((v[0].as_f64().unwrap() - e[0]).abs() < 1e-9);
        assert!((v[1].as_f64().unwrap() - e[1]).abs() < 1e-9);
    }
}

#[test]
fn polar_error_exit_codes() {
    let (code, _, err) = run_with_stdin(&["polar"], "this is not json");
    assert_eq!(code, 2, "{err}");
    let (code, _, err) = run_with_stdin(
        &["polar"],
        r#"{"name":"sq","vertices":[[-1,-1],[1,-1],[1,1],[-1,1]]}"#,
    );
    assert_eq!(code, 2);
    assert!(err.contains("centre"), "{err}");
    let (code, _, err) = run_with_stdin(
        &["polar"],
        r#"{"name":"sq","vertices":[[-1,-1],[1,-1],[1,1],[-1,1]],"centre":[1,0]}"#,
    );
    assert_eq!(code, 2);
    assert!(err.contains("edge"), "{err}");
}

#[test]
fn santalo_of_symmetric_body_is_origin() {
    let (code, out, _) = run_with_stdin(&["santalo"], SQUARE);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    let p = doc["point"].as_array().unwrap();
    assert!(p[0].as_f64().unwrap().abs() < 1e-7);
    assert!(p[1].as_f64().unwrap().abs() < 1e-7);
    assert!(doc["gradient_norm"].as_f64().unwrap() <= 1e-9);
}

#[test]
fn export_svg_is_well_formed_xml() {
    let dir = std::env::temp_dir().join("volprod_cli_svg");
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("square.svg");
    let (code, _, err) = run_with_stdin(
        &[
            "export",
            "--format",
            "svg",
            "--with-polar",
            "--out",
            out.to_str().unwrap(),
        ],
        SQUARE,
    );
    assert_eq!(code, 0, "{err}");
    let text = std::fs::read_to_string(&out).unwrap();
    let mut reader = quick_xml::Reader::from_str(&text);
    let mut polygons = 0;
    loop {
        match reader.read_event() {
            Ok(quick_xml::events::Event::Eof) => break,
            Ok(quick_xml::events::Event::Start(e)) | Ok(quick_xml::events::Event::Empty(e)) => {
                if e.name().as_ref() == b"polygon" {
                    polygons += 1;
                }
            }
            Ok(_) => {}
            Err(e) => panic!("SVG is not well-formed XML: {e}"),
        }
    }
    // Body and polar overlay are both present.
    assert_eq!(polygons, 2);
}

#[test]
fn export_csv_round_trips() {
    let (code, csv, _) = run_with_stdin(&["export", "--format", "csv"], SQUARE);
    assert_eq!(code, 0);
    let verts: Vec<[f64; 2]> = csv
        .lines()
        .skip(1)
        .map(|line| {
            let mut it = line.split(',');
            [
                it.next().unwrap().parse().unwrap(),
                it.next().unwrap().parse().unwrap(),
            ]
        })
        .collect();
    let doc = serde_json::json!({"name": "roundtrip", "vertices": verts});
    let (code, out, _) = run_with_stdin(&["export", "--format", "json"], &doc.to_string());
    assert_eq!(code, 0);
    let parsed: serde_json::Value = serde_json::from_str(&out).unwrap();
    let original: serde_json::Value = serde_json::from_str(SQUARE).unwrap();
    let nums = |v: &serde_json::Value| -> Vec<f64> {
        v.as_array()
            .unwrap()
            .iter()
            .flat_map(|p| p.as_array().unwrap().iter().map(|x| x.as_f64().unwrap()))
            .collect()
    };
    assert_eq!(nums(&parsed["vertices"]), nums(&original["vertices"]));
}

#[test]
fn verify_l7_chain_columns_are_monotone() {
    let out = volprod()
        .args(["verify", "--theorem", "l7", "--count", "10", "--seed", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "index,seed,eps,alpha,bound,product,chain_hex,chain_mean,pass"
    );
    for line in lines {
        let cols: Vec<&str> = line.split(',').collect();
        let bound: f64 = cols[4].parse().unwrap();
        let product: f64 = cols[5].parse().unwrap();
        let chain_hex: f64 = cols[6].parse().unwrap();
        let chain_mean: f64 = cols[7].parse().unwrap();
        assert!(product >= chain_hex - 1e-9 * product, "{line}");
        assert!(chain_hex >= chain_mean - 1e-9 * chain_hex, "{line}");
        assert!(chain_mean >= bound - 1e-9 * chain_mean, "{line}");
    }
}

#[test]
fn verify_json_report_parses() {
    let out = volprod()
        .args([
            "verify", "--theorem", "t5", "--count", "8", "--seed", "11", "--format", "json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert!(rows.len() >= 8);
    for r in rows {
        assert!(r["pass"].as_bool().unwrap());
        assert!(r["eps"].as_f64().unwrap() >= -1e-9);
        assert!(r["bm_upper"].as_f64().unwrap() >= 1.0 - 1e-9);
    }
}

#[test]
fn verify_t3_equality_rows_sit_on_the_bound() {
    let out = volprod()
        .args(["verify", "--theorem", "t3", "--count", "5", "--seed", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "index,seed,n,eps,product,bound,pass");
    for line in lines {
        let cols: Vec<&str> = line.split(',').collect();
        let seed: u64 = cols[1].parse().unwrap();
        let eps: f64 = cols[3].parse().unwrap();
        if seed == 0 {
            assert!(eps.abs() <= 1e-9, "equality row off the bound: {line}");
        } else {
            assert!(eps >= -1e-9, "{line}");
        }
    }
}

#[test]
fn verify_unknown_theorem_is_usage_error() {
    let status = volprod()
        .args(["verify", "--theorem", "t9"])
        .stderr(Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn sweep_rejects_invalid_grid() {
    let (code, _, err) = run_with_stdin(&["sweep", "--n", "2"], "");
    assert_eq!(code, 2, "{err}");
    let (code, _, _) = run_with_stdin(&["sweep", "--eps", "-0.5"], "");
    assert_eq!(code, 2);
}

#[test]
fn sweep_figures_are_well_formed() {
    let dir = std::env::temp_dir().join("volprod_cli_sweep");
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("sweep.csv");
    let status = volprod()
        .args([
            "sweep",
            "--n",
            "6",
            "--format",
            "svg",
            "--out",
            out.to_str().unwrap(),
        ])
        .stderr(Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    for name in ["sweep_product.svg", "sweep_offset.svg", "sweep_body.svg"] {
        let text = std::fs::read_to_string(dir.join(name)).unwrap();
        let mut reader = quick_xml::Reader::from_str(&text);
        loop {
            match reader.read_event() {
                Ok(quick_xml::events::Event::Eof) => break,
                Ok(_) => {}
                Err(e) => panic!("{name} is not well-formed XML: {e}"),
            }
        }
        // The body figure shows both polygons and the unit circle.
        if name == "sweep_body.svg" {
            assert_eq!(text.matches("<polygon").count(), 2);
            assert!(text.contains("<circle"));
        }
    }
}
