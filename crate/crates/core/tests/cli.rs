use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use subcone::fixtures;
use subcone::io;
use subcone::SetFunction;
use tempfile::TempDir;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Outcome {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", self.stdout))
    }
}

fn run(args: &[&str]) -> Outcome {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["subcone"];
    argv.extend_from_slice(args);
    let code = subcone::cli::run(argv, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn binary(args: &[&str], env: &[(&str, &str)]) -> Outcome {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_subcone"));
    cmd.args(args);
    for (k, _) in std::env::vars().filter(|(k, _)| k.starts_with("SUBCONE_")) {
        cmd.env_remove(k);
    }
    for (k, v) in env {
        cmd.env(k, v);
    }
    let o = cmd.output().unwrap();
    Outcome {
        code: o.status.code().unwrap(),
        stdout: String::from_utf8(o.stdout).unwrap(),
        stderr: String::from_utf8(o.stderr).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, f: &SetFunction) -> String {
    let path = dir.path().join(name);
    io::write_json(&path, f).unwrap();
    path.to_str().unwrap().to_string()
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).to_str().unwrap().to_string()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_reports_ray_certificate() {
    let dir = TempDir::new().unwrap();
    let t1 = write(&dir, "t1.json", &fixtures::t1());
    let o = run(&["check", "-i", &t1]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v = o.json();
    assert_eq!(v["submodular"], true);
    assert_eq!(v["defo_dim"], 4);
    assert_eq!(v["indecomposable"], true);
}

#[test]
fn check_flags_violations() {
    let dir = TempDir::new().unwrap();
    let bad = SetFunction::from_fn(2, |x| subcone::Rat::from(x.count_ones().pow(2) as i64));
    let path = write(&dir, "bad.json", &bad);
    let o = run(&["check", "-i", &path]);
    assert_eq!(o.code, 1);
    assert_eq!(o.json()["submodular"], false);
}

#[test]
fn fertility_is_directed() {
    let dir = TempDir::new().unwrap();
    let s1 = write(&dir, "s1.json", &fixtures::s1());
    let t1 = write(&dir, "t1.json", &fixtures::t1());
    let forward = run(&["fertile", "-i", &s1, &t1]);
    assert_eq!(forward.code, 0);
    assert_eq!(forward.json()["fertile"], true);
    assert_eq!(forward.json()["lambda_min"], "1");
    let backward = run(&["fertile", "-i", &t1, &s1]);
    assert_eq!(backward.code, 1);
    assert_eq!(backward.json()["fertile"], false);
}

#[test]
fn compose_then_list_vertices() {
    let dir = TempDir::new().unwrap();
    let s1 = write(&dir, "s1.json", &fixtures::s1());
    let t1 = write(&dir, "t1.json", &fixtures::t1());
    let lifted = dir.path().join("pyramid.json");
    let o = run(&["compose", "-i", &s1, &t1, "-o", s(&lifted)]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.json()["certificate"]["defo_dim"], 5);
    let verts = dir.path().join("verts.json");
    let o = run(&["vertices", "-i", s(&lifted), "-o", s(&verts)]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&verts).unwrap()).unwrap();
    assert_eq!(doc["n"], 4);
    let want = &fixtures::n3_compositions()[0].vertices;
    assert_eq!(doc["vertices"].as_array().unwrap().len(), want.len());
}

#[test]
fn vertices_of_gpolymatroid_are_projected() {
    let dir = TempDir::new().unwrap();
    let g = subcone::polymat::gp_sum(&fixtures::s1(), &fixtures::t1().translate(&[0.into(), (-1).into(), (-1).into()]).unwrap()).unwrap();
    let path = dir.path().join("g.json");
    io::write_json(&path, &g).unwrap();
    let o = run(&["vertices", "-i", s(&path)]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v = o.json();
    assert_eq!(v["n"], 3);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 5);
}

#[test]
fn enumerate_counts_and_guards() {
    let dir = TempDir::new().unwrap();
    let o = run(&["enumerate", "-n", "3"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.starts_with("n=3 dim=4 count=5"), "{}", o.stdout);
    let out = dir.path().join("rays4.txt");
    let ckpt = dir.path().join("rays4.ckpt");
    let o = run(&["enumerate", "-n", "4", "-o", s(&out), "--checkpoint", s(&ckpt)]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(subcone::raycone::RaySet::read(&out).unwrap().count(), 37);
    assert_eq!(run(&["enumerate", "-n", "5"]).code, 3);
    assert_eq!(run(&["enumerate", "-n", "9"]).code, 2);
}

#[test]
fn malformed_input_is_rejected() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\"n\": 2, \"values\": [\"0\", \"1\"").unwrap();
    assert_eq!(run(&["check", "-i", s(&path)]).code, 2);
    std::fs::write(&path, "{\"n\": 2, \"values\": [\"1\", \"1\", \"1\", \"1\"]}").unwrap();
    assert_eq!(run(&["check", "-i", s(&path)]).code, 2);
    assert_eq!(run(&["check", "-i", "/nonexistent/file.json"]).code, 2);
    assert_eq!(run(&["no-such-command"]).code, 2);
}

#[test]
fn verify_family_accepts_fixture_lists() {
    let o = run(&["verify-family", "-i", &fixture("n4_family.json")]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.json()["size"], 11);
    let o = run(&["verify-family", "-i", &fixture("n3_indecomposables.json")]);
    assert_eq!(o.code, 1);
    assert_eq!(o.json()["infertile"].as_array().unwrap().len(), 13);
}

#[test]
fn grow_refuses_infertile_parents() {
    let dir = TempDir::new().unwrap();
    let o = run(&["grow", "-i", &fixture("n3_indecomposables.json"), "-o", s(dir.path())]);
    assert_eq!(o.code, 2, "{}", o.stderr);
}

#[test]
fn grow_writes_family_files() {
    let dir = TempDir::new().unwrap();
    let out: PathBuf = dir.path().join("levels");
    let o = run(&["grow", "-i", &fixture("n4_family.json"), "-o", s(&out)]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let fam: subcone::grower::Family = io::read_json(&out.join("family_n5.json")).unwrap();
    assert_eq!(fam.len(), 121);
    assert!(fam.verdicts.as_ref().unwrap().passed());
    let o = run(&["verify-family", "-i", s(&out.join("family_n5.json"))]);
    assert_eq!(o.code, 0, "{}", o.stderr);
}

#[test]
fn bounds_report() {
    let o = run(&["bounds", "-k", "4", "-p", "11", "-n", "6"]);
    assert_eq!(o.code, 0);
    let v = o.json();
    assert_eq!(v["lower"], "14641");
    assert_eq!(v["above_double_exponential"], false);
    assert_eq!(v["below_upper"], true);
}

#[test]
fn environment_configures_and_flags_override() {
    let list = fixture("n3_indecomposables.json");
    let env_only = binary(&["verify-family", "-i", &list], &[("SUBCONE_MAX_N", "2")]);
    assert_eq!(env_only.code, 3, "{}", env_only.stderr);
    let flag_wins = binary(&["--max-n", "3", "verify-family", "-i", &list], &[("SUBCONE_MAX_N", "2")]);
    assert_eq!(flag_wins.code, 1, "{}", flag_wins.stderr);
    let too_big = binary(&["bounds", "-k", "4", "-p", "11", "-n", "5"], &[("SUBCONE_MAX_N", "99")]);
    assert_eq!(too_big.code, 2);
    let jobs = binary(&["--jobs", "1", "enumerate", "-n", "2"], &[]);
    assert_eq!(jobs.code, 0);
    assert!(jobs.stdout.starts_with("n=2 dim=1 count=1"));
}

#[test]
fn help_and_version() {
    let o = run(&["--help"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("enumerate"));
    assert_eq!(run(&["--version"]).code, 0);
}
