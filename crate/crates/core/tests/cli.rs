use std::process::{Command, Output};

fn hyperfield(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperfield")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn np_text_and_json() {
    let o = hyperfield(&["np", "--poly", "-5,0,1", "--prime", "5"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("slope -1/2"), "{}", stdout(&o));
    let o = hyperfield(&["np", "--poly", "-5,0,1", "--prime", "5", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.is_object());
}

#[test]
fn exit_codes() {
    assert_eq!(hyperfield(&["np", "--poly", "1,,x", "--prime", "5"]).status.code(), Some(2));
    assert_eq!(hyperfield(&["certify", "--poly", "-1,0,0,0,1"]).status.code(), Some(3));
    let o = hyperfield(&["exponents", "--g", "2", "--d", "6", "--n", "7"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn certify_quintic() {
    let o = hyperfield(&["certify", "--poly", "-1,-1,0,0,0,1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("\"S_5\"") || stdout(&o).contains("S_n"), "{}", stdout(&o));
}

#[test]
fn witness_json() {
    let o = hyperfield(&["witness", "--curve", "1,1,0,1", "--n", "4", "--recipe", "ODD_EVEN_SPLIT", "--seed", "3"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 4);
}

#[test]
fn threshold_prints_integer() {
    let o = hyperfield(&["exponents", "--g", "1", "--threshold"]);
    assert_eq!(stdout(&o).trim(), "16052");
}

#[test]
fn census_from_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    let csv = dir.path().join("out.csv");
    let summary = dir.path().join("summary.json");
    std::fs::write(
        &cfg,
        format!(
            "# small box\ncurve = 1,1,0,1\nn = 3\nsweep = 2,3\ncsv_out = {}\nsummary_out = {}\n",
            csv.display(),
            summary.display()
        ),
    )
    .unwrap();
    let o = hyperfield(&["census", "--config", cfg.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let rows = std::fs::read_to_string(&csv).unwrap();
    assert!(rows.starts_with("spec_a;spec_b;F_coeffs;disc_F;status;fingerprint_hash;class_id"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&summary).unwrap()).unwrap();
    let sums = v.as_array().unwrap();
    assert_eq!(sums.len(), 2);
    assert_eq!(sums[0]["box_cardinality"], 15);
}

#[test]
fn unknown_config_key() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    std::fs::write(&cfg, "curve = 1,1,0,1\nn = 3\ny = 2\ncolour = blue\n").unwrap();
    let o = hyperfield(&["census", "--config", cfg.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("colour"));
}

#[test]
fn csv_is_deterministic_across_threads() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_hyperfield"))
            .args(["census", "--curve", "1,1,0,1", "--n", "4", "--y", "2", "--csv", "-"])
            .env("HYPERFIELD_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    let one = run("1");
    assert!(!one.is_empty());
    assert_eq!(one, run("4"));
    assert_eq!(one, run("4"));
}
