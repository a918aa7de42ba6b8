use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn liepar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liepar"))
        .args(args)
        .env_remove("LIEPAR_BUDGET")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const SUBCOMMANDS: [&str; 9] = ["rootsys", "weyl", "torsion", "char", "intform", "schurweyl", "nilpotent", "toric", "golden"];

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("golden")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("liepar-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn exit_codes() {
    assert_eq!(liepar(&["torsion", "--type", "E8"]).status.code(), Some(0));
    assert_eq!(liepar(&["torsion", "--type", "Q9"]).status.code(), Some(1));
    assert_eq!(liepar(&["torsion", "--bogus"]).status.code(), Some(2));
    assert_eq!(liepar(&["char", "--type", "A2"]).status.code(), Some(2));
    assert_eq!(liepar(&["--help"]).status.code(), Some(0));
    let bad = liepar(&["char", "--type", "A2", "--weight", "w7"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(!bad.stderr.is_empty());
}

#[test]
fn every_subcommand_documents_itself() {
    for sub in SUBCOMMANDS {
        let out = liepar(&[sub, "--help"]);
        assert_eq!(out.status.code(), Some(0), "{sub}");
        let text = stdout(&out);
        let first = text.lines().next().unwrap_or("");
        assert!(!first.trim().is_empty() && !first.starts_with("Usage"), "{sub}: no description");
        let reference = text.lines().find(|l| l.starts_with("Reference:")).unwrap_or_else(|| panic!("{sub}: no reference"));
        assert!(reference.len() > "Reference: ".len() + 5, "{sub}");
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let runs: [&[&str]; 5] = [
        &["torsion", "--type", "F4", "--method", "both", "--emit", "certificates"],
        &["char", "--type", "E6", "--tensor", "w1,w6"],
        &["weyl", "--type", "B3", "--left", "1", "--right", "2,3"],
        &["schurweyl", "--d", "5", "--p", "2"],
        &["rootsys", "--type", "G2", "--roots"],
    ];
    for args in runs {
        let a = liepar(args);
        let b = liepar(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn toric_pavings_print_their_seed() {
    let dir = scratch("toric");
    let fan = dir.join("a3.json");
    let tau = dir.join("tau.json");
    std::fs::write(&fan, r#"{"rank":2,"rays":[[1,0],[1,1],[1,2],[1,3],[1,4]],"cones":[[0,1],[1,2],[2,3],[3,4]]}"#).unwrap();
    std::fs::write(&tau, r#"{"rank":2,"rays":[[1,0],[1,4]]}"#).unwrap();
    let (f, t) = (fan.to_str().unwrap(), tau.to_str().unwrap());
    for seed in ["0", "7", "123456"] {
        let args = ["toric", "--fan", f, "--tau", t, "--paving", "--seed", seed, "--emit", "poincare"];
        let a = liepar(&args);
        assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(stdout(&a), format!("# seed {seed}\n1 + 3q^2\n"));
        assert_eq!(a.stdout, liepar(&args).stdout);
        let json = liepar(&["toric", "--fan", f, "--tau", t, "--paving", "--seed", seed]);
        let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
        assert_eq!(v["seed"].to_string(), seed);
    }
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn golden_tables_pass() {
    let out = liepar(&["golden", "--dir", golden_dir().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("0 failed"));
}

#[test]
fn corrupted_golden_table_is_caught() {
    let dir = scratch("golden");
    let src = std::fs::read_to_string(golden_dir().join("weyl_orders.json")).unwrap();
    let bad = src.replace("\"order\": 1152", "\"order\": 1151");
    assert_ne!(src, bad);
    std::fs::write(dir.join("weyl_orders.json"), bad).unwrap();
    let out = liepar(&["golden", "--dir", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL weyl-group-orders"), "{text}");
    assert!(text.contains("1151") && text.contains("1152"), "{text}");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn golden_tables_need_citations() {
    let dir = scratch("uncited");
    let src = std::fs::read_to_string(golden_dir().join("dual_coxeter.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&src).unwrap();
    let mut v = v.as_object().unwrap().clone();
    v.insert("citation".into(), "".into());
    std::fs::write(dir.join("t.json"), serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(liepar(&["golden", "--dir", dir.to_str().unwrap()]).status.code(), Some(1));
    std::fs::remove_dir_all(dir).unwrap();
}
