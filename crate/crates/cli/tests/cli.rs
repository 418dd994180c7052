use std::process::{Command, Output};

use polarfol::classify::{compute_moduli, table1, Table1Row};
use polarfol::export::{records_to_json, table1_to_csv};
use polarfol::liealg::RepDescriptor;

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_polarfol"));
    c.args(args).env_remove("POLARFOL_THREADS");
    for (k, v) in env {
        c.env(k, v);
    }
    c.output().expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn classify_fkm_json() {
    let o = run(&["classify", "fkm", "--m", "3", "--k", "2", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["N_S"], 2);
    assert_eq!(v[0]["family"], "FKM");
    assert_eq!(v[0]["provenance"], "computed");
}

#[test]
fn classify_split_fkm() {
    let o = run(&["classify", "fkm", "--m", "4", "--kplus", "1", "--kminus", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("N_S=2"), "{}", stdout(&o));
    let o = run(&["classify", "fkm", "--m", "4", "--k", "2"]);
    assert_eq!(code(&o), 64, "a single k is invalid for m = 0 mod 4");
}

#[test]
fn classify_space_without_structures() {
    let o = run(&["classify", "space", "--family", "AIII", "--p", "3", "--q", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("N_S=0"));
}

#[test]
fn cli_json_equals_library_export() {
    let o = run(&["classify", "space", "--family", "DI", "--p", "2", "--q", "3", "--json"]);
    let rec = compute_moduli(&RepDescriptor::parse("DI(2,3)").unwrap()).unwrap();
    assert_eq!(stdout(&o), records_to_json(&[rec]).unwrap());
}

#[test]
fn table1_csv_equals_library_export() {
    let o = run(&["table1", "--max-p", "4", "--max-q", "4", "--csv"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), table1_to_csv(&table1(4, 4).unwrap()).unwrap());
    let sp: Vec<String> = stdout(&o).lines().filter(|l| l.starts_with("Sp(")).map(String::from).collect();
    let lib: Vec<_> = table1(4, 4).unwrap().into_iter().filter(|e| e.row == Table1Row::Sp).collect();
    assert_eq!(sp.len(), lib.len());
    for (line, e) in sp.iter().zip(&lib) {
        let want = if e.p != e.q { 2 } else { 1 };
        assert!(line.contains(&format!(",{want},")), "{line}");
    }
}

#[test]
fn scan_irreducible_trues() {
    let o = run(&["scan", "irreducible", "--max-n", "20"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("true at: 3,5,7,8,9,11,13,14,15,17,19,20\n"), "{}", stdout(&o));
}

#[test]
fn scan_codim1_marks_undecided() {
    let o = run(&["scan", "codim1", "--max-n", "9", "--csv"]);
    let text = stdout(&o);
    assert!(text.contains("\n7,true,true,"), "{text}");
    assert!(text.contains("\n9,true,false,"));
    assert!(text.contains("\n2,false,false,\n"));
}

#[test]
fn join_and_bruteforce() {
    let o = run(&["classify", "join", "--spec", "S(4)*S(8)"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("N_S=1"));
    let o = run(&["classify", "join", "--spec", "S(4)*AIII(3,3)"]);
    assert_eq!(code(&o), 64);
    let o = run(&["bruteforce", "j-moduli", "--family", "AIII", "--p", "2", "--q", "2"]);
    assert!(stdout(&o).contains("raw=6 classes=2"));
}

#[test]
fn verification_commands() {
    assert_eq!(code(&run(&["clifford", "verify", "--m", "5", "--k", "2"])), 0);
    assert_eq!(code(&run(&["fkm", "check-pde", "--m", "2", "--k", "3", "--symbolic"])), 0);
    assert_eq!(code(&run(&["fkm", "check-pde", "--m", "6", "--k", "2", "--trials", "5", "--seed", "3"])), 0);
    let o = run(&["quat", "verify", "--family", "FKM", "--m", "3", "--k", "2", "--witness", "-2,0,0,0"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    // A class outside every su2: verification failure.
    let o = run(&["quat", "verify", "--family", "AIII", "--p", "2", "--q", "2", "--witness", "-1/2,-1/2,1/2,1/2"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("rejected"));
    assert_eq!(code(&run(&["crosscheck", "--grid", "classical"])), 0);
}

#[test]
fn clifford_dump() {
    let dir = std::env::temp_dir().join(format!("polarfol-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p.json");
    let o = run(&["clifford", "build", "--m", "3", "--k", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["P"].as_array().unwrap().len(), 4);
    assert_eq!(v["order"], 16);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_and_catalog_errors() {
    assert_eq!(code(&run(&["classify", "space", "--family", "AIII", "--p", "2", "--q", "2", "--bogus"])), 2);
    assert_eq!(code(&run(&["fkm", "check-pde", "--m", "3", "--k", "2"])), 2, "seed is mandatory");
    assert_eq!(code(&run(&["crosscheck", "--grid", "nope"])), 2);
    assert_eq!(code(&run(&["classify", "space", "--family", "EVII", "--source", "computed"])), 64);
    assert_eq!(code(&run(&["classify", "space", "--family", "AIII", "--p", "1", "--q", "3"])), 64);
    assert_eq!(code(&run(&["classify", "space", "--family", "XYZ"])), 64);
    assert_eq!(code(&run_env(&["scan", "codim1", "--max-n", "3"], &[("POLARFOL_THREADS", "abc")])), 2);
    assert_eq!(code(&run(&["scan", "codim1", "--max-n", "0"])), 2);
}

#[test]
fn output_is_reproducible_across_runs_and_thread_counts() {
    let args = ["fkm", "check-pde", "--m", "5", "--k", "2", "--trials", "8", "--seed", "11", "--json"];
    let a = run(&args);
    let b = run_env(&args, &[("POLARFOL_THREADS", "1")]);
    let mut c_args = args.to_vec();
    c_args.extend(["--threads", "4"]);
    let c = run(&c_args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let cfg = String::from_utf8(c.stderr).unwrap();
    assert!(cfg.starts_with("config: polarfol fkm check-pde") && cfg.contains("threads=4"), "{cfg}");
}
