use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use tk5::graph::families::{complete, cube, icosahedron, octahedron};
use tk5::graph::format::{to_adjacency_list, to_graph6};
use tk5::pipeline::Tk5Certificate;

fn tk5(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tk5")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tk5-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, contents).unwrap();
    p
}

#[test]
fn check_reports_k4_minus() {
    let g = icosahedron().with_universal_vertex();
    let f = scratch("apexed_icosa.g6", &to_graph6(&g));
    let o = tk5(&["check", "--construct", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("K4- found: {"));
}

#[test]
fn check_hypothesis_and_parse_failures() {
    let f = scratch("k6.g6", &to_graph6(&complete(6)));
    let o = tk5(&["check", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("not apex"));

    let f = scratch("bad.g6", "E~~\u{7f}\n");
    let o = tk5(&["check", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte"));
}

#[test]
fn check_json_and_jobs() {
    let a = scratch("a.adj", &to_adjacency_list(&icosahedron().with_universal_vertex()));
    let b = scratch("b.g6", &to_graph6(&octahedron().with_universal_vertex()));
    let o = tk5(&["check", "--json", "--jobs", "2", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.matches("\"connectivity\": 5").count(), 1);
    assert_eq!(text.matches("\"apexes\"").count(), 2);
}

#[test]
fn wheel_branch_certificate_verifies() {
    let gen = tk5(&["gen", "apexed-quadrangulation", "--size", "17", "--seed", "0"]);
    assert_eq!(gen.status.code(), Some(0));
    let g6 = stdout(&gen);
    assert_eq!(g6, stdout(&tk5(&["gen", "apexed-quadrangulation", "--size", "17", "--seed", "0"])));
    let gf = scratch("q17.g6", &g6);
    let o = tk5(&["check", "--apex", "16", gf.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("TK5 built through apex 16"));
    let json = &text[text.find("\n{\n").unwrap() + 1..];
    let cert: Tk5Certificate = serde_json::from_str(json).unwrap();
    let cf = scratch("cert.json", &cert.to_json());
    let v = tk5(&["verify", gf.to_str().unwrap(), cf.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));

    let mut tampered = cert.clone();
    let long = tampered.paths.iter().position(|p| p.vertices.len() > 2).unwrap();
    tampered.paths[long].vertices.remove(1);
    let tf = scratch("tampered.json", &tampered.to_json());
    let v = tk5(&["verify", gf.to_str().unwrap(), tf.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(3));
    assert!(stdout(&v).contains(&format!("{:?}", tampered.paths[long].pair)));

    let mut repeated = cert;
    repeated.branch[1] = repeated.branch[0];
    let rf = scratch("repeated.json", &repeated.to_json());
    assert_eq!(tk5(&["verify", gf.to_str().unwrap(), rf.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn discharge_totals() {
    for (name, g, bnd) in [("cube.g6", cube(), "0,1,2,3"), ("octa.g6", octahedron(), "0,2,4,5")] {
        let f = scratch(name, &to_graph6(&g));
        let o = tk5(&["discharge", f.to_str().unwrap(), "--boundary", bnd]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).trim_end().ends_with("total 1/3"));
    }
    let f = scratch("k5.g6", &to_graph6(&complete(5)));
    let o = tk5(&["discharge", f.to_str().unwrap(), "--boundary", "0,1,2,3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_errors_and_kinds() {
    let o = tk5(&["gen", "apexed-triangulation", "--size", "13", "--min-degree", "5", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let f = scratch("t5.g6", &stdout(&o));
    assert!(stdout(&tk5(&["check", f.to_str().unwrap()])).contains("K4- found"));
    assert_eq!(tk5(&["gen", "apexed-quadrangulation", "--size", "12"]).status.code(), Some(2));
    assert_eq!(tk5(&["gen", "plane2conn", "--size", "9", "--format", "adj"]).status.code(), Some(0));
}
