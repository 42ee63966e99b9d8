use std::process::{Command, Output};

fn metaplectic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_metaplectic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone())
        .unwrap()
        .trim()
        .to_string()
}

#[test]
fn hilbert_prints_exponent() {
    let o = metaplectic(&["--p", "3", "--n", "2", "hilbert", "3", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1");
    let o = metaplectic(&["--p", "5", "--n", "4", "hilbert", "5", "-1", "--json"]);
    assert_eq!(stdout(&o), "2");
}

#[test]
fn bad_context_is_usage_error() {
    let o = metaplectic(&["--p", "5", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("n must divide p−1"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(metaplectic(&["hilbert", "3", "3"]).status.code(), Some(2));
    assert_eq!(
        metaplectic(&["--p", "3", "hilbert", "3", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        metaplectic(&["--p", "3", "--n", "2", "hilbert", "0", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        metaplectic(&["--p", "3", "--n", "2", "inv", "1,2;2,4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        metaplectic(&["verify", "nonsense", "--trials", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        metaplectic(&["--p", "3", "--n", "2", "frobnicate"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn group_commands_round_trip() {
    let ctx = ["--p", "7", "--n", "3"];
    let h = "2,1/7;-3,5:2";
    let inv = metaplectic(&[&ctx[..], &["inv", h]].concat());
    assert_eq!(inv.status.code(), Some(0));
    let inv = stdout(&inv);
    let prod = metaplectic(&[&ctx[..], &["mul", h, &inv]].concat());
    assert_eq!(stdout(&prod), "1/1,0/1;0/1,1/1:0");
    let s = metaplectic(&[&ctx[..], &["sigma", h]].concat());
    let ss = metaplectic(&[&ctx[..], &["sigma", &stdout(&s)]].concat());
    assert_eq!(stdout(&ss), "2/1,1/7;-3/1,5/1:2");
}

#[test]
fn cocycle_of_scalars_is_hilbert_symbol() {
    let o = metaplectic(&["--p", "5", "--n", "4", "cocycle", "5,0;0,5", "-1,0;0,-1"]);
    assert_eq!(stdout(&o), "2");
}

#[test]
fn witness_reports_verification() {
    for args in [
        vec!["--p", "13", "--n", "6", "witness", "1,1;0,1:1", "--json"],
        vec![
            "--p",
            "5",
            "--n",
            "4",
            "witness",
            "1,2;3,4:3",
            "--alpha",
            "2",
            "--json",
        ],
        vec!["--p", "2", "--n", "2", "witness", "3,0;0,3:1", "--json"],
    ] {
        let o = metaplectic(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["verified"], true);
        assert_eq!(v["lhs"], v["rhs"]);
    }
}

#[test]
fn verify_single_context_passes() {
    let o = metaplectic(&[
        "--p", "5", "--n", "4", "verify", "all", "--trials", "500", "--seed", "42", "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let reports: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(reports.len(), 9);
    for r in &reports {
        assert_eq!(r["ctx"], serde_json::json!({"p": 5, "n": 4}));
        assert!(r["failures"].as_array().unwrap().is_empty());
        assert_eq!(r["ms"], 0);
    }
}

#[test]
fn verify_output_is_sorted_and_reproducible() {
    let args = ["verify", "all", "--trials", "20", "--seed", "7", "--json"];
    let a = metaplectic(&args);
    let b = metaplectic(&args);
    assert_eq!(a.stdout, b.stdout);
    let reports: Vec<serde_json::Value> = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(reports.len(), 9 * 6);
    let suites: Vec<&str> = reports
        .iter()
        .map(|r| r["suite"].as_str().unwrap())
        .collect();
    assert_eq!(suites[0], "hilbert");
    assert_eq!(suites[53], "obstruction");
    assert_eq!(reports[53]["status"], "pass");
    assert_eq!(reports[48]["status"], "not-applicable");
}
