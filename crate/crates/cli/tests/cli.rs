use supercat::noncrossing::SignedBlockPartition;
use supercat::LaurentPoly;
use supercat_cli::{run, EXIT_COUNTEREXAMPLE, EXIT_OK, EXIT_USAGE};

fn sc(args: &str) -> (i32, String, String) {
    let argv = std::iter::once("supercat").chain(args.split_whitespace());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn compute_super_catalan_json() {
    let (code, out, _) = sc("compute super-catalan --n 2 --m 1 --format json");
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim_end(), r#"{"minExp":0,"coeffs":["1","1","1","1"]}"#);
    let p: LaurentPoly = serde_json::from_str(&out).unwrap();
    assert_eq!(p, LaurentPoly::from_i64s(0, &[1, 1, 1, 1]));
}

#[test]
fn touchard_sweep_csv() {
    let (code, out, err) = sc("sweep --id Q_TOUCHARD --n 0..10 --m 0..6 --format csv");
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("id,n,m,status,elapsedMs"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 77);
    assert!(rows.iter().all(|r| r.split(',').nth(3) == Some("Verified")));
    assert_eq!(
        rows[0].split(',').take(3).collect::<Vec<_>>(),
        ["Q_TOUCHARD", "0", "0"]
    );
    assert_eq!(
        rows[1].split(',').take(3).collect::<Vec<_>>(),
        ["Q_TOUCHARD", "0", "1"]
    );
    assert!(err.contains("77 Verified, 0 Refuted, 0 excluded"));
}

#[test]
fn sweep_output_is_reproducible_without_timing() {
    let args = "sweep --id q-koshy --n 1..6 --m 1..6 --format json --no-timing";
    let (code, first, err) = sc(args);
    assert_eq!(code, EXIT_OK);
    assert_eq!(sc(args).1, first);
    assert!(err.contains("15 out-of-domain tuples skipped"));
    for line in first.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["status"], "Verified");
        assert!(v.get("elapsedMs").is_none());
        let rhs: supercat::RationalForm = serde_json::from_value(v["rhs"].clone()).unwrap();
        let lhs: supercat::RationalForm = serde_json::from_value(v["lhs"].clone()).unwrap();
        assert!(lhs.rat_equal(&rhs));
    }
}

#[test]
fn enumerate_ncb_count() {
    assert_eq!(
        sc("enumerate ncb --n 2 --count-only"),
        (EXIT_OK, "6\n".into(), String::new())
    );
    assert_eq!(sc("enumerate ncd --n 3 --count-only").1, "14\n");
}

#[test]
fn enumerate_json_round_trips() {
    let (code, out, _) = sc("enumerate ncb --n 3 --format json");
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 20);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let p: SignedBlockPartition = serde_json::from_value(v["partition"].clone()).unwrap();
        let path = v["path"].as_str().unwrap();
        let (_, back, _) = sc(&format!("compute phi-inverse --path {path} --format json"));
        assert_eq!(
            serde_json::from_str::<SignedBlockPartition>(&back).unwrap(),
            p
        );
    }
}

#[test]
fn phi_of_worked_example() {
    let (code, out, _) = sc("compute phi --partition (1,-3,-6),(-1,3,6),(2,-2),(4),(-4),(5),(-5)");
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "DUUSDW\n");
}

#[test]
fn injected_counterexample_exits_3() {
    let seq =
        r#"[{"minExp":0,"coeffs":["1"]},{"minExp":0,"coeffs":["1"]},{"minExp":0,"coeffs":["5"]}]"#;
    let (code, out, _) = sc(&format!(
        "conjecture --name Q_LOG_CONCAVE --sequence {seq} --format json"
    ));
    assert_eq!(code, EXIT_COUNTEREXAMPLE);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["holds"], false);
    assert_eq!(v["counterexample"], serde_json::json!([1]));
}

#[test]
fn conjecture_scan_holds() {
    let (code, out, _) = sc("conjecture --name T_LOG_CONVEX --m-max 2 --n-max 6 --format json");
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["holds"], true);
}

#[test]
fn usage_errors_exit_2_and_list_the_registry() {
    for args in [
        "frobnicate",
        "verify --id NOT_AN_ID --n 1",
        "verify --id Q_TOUCHARD --n 1",
        "verify --id Q_TOUCHARD --n 1 --m 1 --k 2",
        "sweep --id Q_TOUCHARD --n 0..x --m 0..1",
    ] {
        let (code, _, err) = sc(args);
        assert_eq!(code, EXIT_USAGE, "{args}");
        assert!(err.contains("PFAFF_SAALSCHUTZ"), "{args}");
    }
}

#[test]
fn negative_exponents_in_summation_sweeps() {
    let (code, out, err) =
        sc("sweep --id GAUSS_II6 --N 0..2 --a -2..2 --c -1..1 --format csv --no-timing");
    assert_eq!(code, EXIT_OK);
    assert!(err.contains("0 Refuted"));
    assert!(!err.contains(" 0 excluded"));
    assert!(out.lines().skip(1).all(|r| !r.ends_with("Refuted")));
    assert_eq!(out.lines().count(), 1 + 3 * 5 * 3);
}

#[test]
fn series_report_and_coefficients() {
    let (code, out, _) = sc("series f1-formula --order 6 --format json --no-timing");
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "Verified");
    let (_, out, _) = sc("series fm --m 1 --order 4 --format json");
    let s: supercat::TruncatedSeries = serde_json::from_str(&out).unwrap();
    assert_eq!(s.order(), 4);
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("supercat-cli-{}.json", std::process::id()));
    let (code, out, _) = sc(&format!(
        "compute q-catalan --n 3 --format json --output {}",
        path.display()
    ));
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let p: LaurentPoly = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(p.eval_at_one(), 5.into());
    std::fs::remove_file(path).unwrap();
}
