use std::io::Write;
use std::process::{Command, Output, Stdio};

use connlap::report::Report;

fn connlap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_connlap")).args(args).output().unwrap()
}

fn connlap_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_connlap"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_families() {
    assert_eq!(stdout(&connlap(&["gen", "diamond"])), "1,2,3\n2,3,4\n");
    assert_eq!(stdout(&connlap(&["gen", "cycle", "3"])), "1,2\n1,3\n2,3\n");
    assert_eq!(stdout(&connlap(&["gen", "simplex", "1"])), "1,2\n");
    let a = stdout(&connlap(&["gen", "random", "7", "0.5", "11"]));
    assert_eq!(a, stdout(&connlap(&["gen", "random", "7", "0.5", "11"])));
    assert_eq!(connlap(&["gen", "torus"]).status.code(), Some(2));
    assert_eq!(connlap(&["gen", "cycle", "2"]).status.code(), Some(2));
    assert_eq!(connlap(&["gen", "cycle", "x"]).status.code(), Some(2));
}

#[test]
fn gen_to_file_and_matroid() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("kite.txt");
    std::fs::write(&graph, "1,2\n1,3\n2,3\n2,4\n3,4\n").unwrap();
    let out = dir.path().join("matroid.txt");
    let o = connlap(&["gen", "matroid-of", graph.to_str().unwrap(), "-o", out.to_str().unwrap()]);
    assert!(o.status.success());
    let facets = std::fs::read_to_string(&out).unwrap();
    assert_eq!(facets.lines().count(), 8);
    let r = connlap(&["report", out.to_str().unwrap(), "--json"]);
    let rep = Report::from_json(&stdout(&r)).unwrap();
    assert_eq!(rep.f_vector, vec![5, 10, 8]);
    assert_eq!(rep.total_energy, "3");
}

#[test]
fn report_diamond() {
    let o = connlap_stdin(&["report", "-"], "1,2,3\n2,3,4\n");
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("euler          1"));
    assert!(text.contains("det L          -1"));
    assert!(text.contains("energy         1"));
    assert!(text.contains("inertia        p=6 n=5 z=0"));
}

#[test]
fn report_json_round_trips_and_is_consistent() {
    let o = connlap_stdin(&["report", "-", "--json", "--matrix", "g"], "1,2\n2,3\n3,1\n");
    assert!(o.status.success());
    let text = stdout(&o);
    let r = Report::from_json(&text).unwrap();
    assert_eq!((r.euler_characteristic, r.determinant.as_str()), (0, "-1"));
    assert_eq!((r.inertia.positive, r.inertia.negative), (3, 3));
    let chi = r.euler_characteristic;
    assert_eq!(r.inertia.positive as i64 - r.inertia.negative as i64, chi);
    assert_eq!(r.total_energy, chi.to_string());
    assert_eq!(r.even_simplices as i64 - r.odd_simplices as i64, chi);
    let g = r.matrix.as_ref().unwrap().to_matrix().unwrap();
    assert_eq!(g.get(0, 0).to_string(), "-1");
    assert_eq!(r.to_json().trim(), text.trim());
}

#[test]
fn report_matrix_text() {
    let o = connlap_stdin(&["report", "-", "--matrix", "L"], "1,2\n");
    let text = stdout(&o);
    assert!(text.contains("L:\n3 3\n1 0 1\n0 1 1\n1 1 1\n"), "{text}");
}

#[test]
fn report_empty_and_errors() {
    let o = connlap_stdin(&["report", "-"], "");
    assert!(o.status.success());
    assert!(stdout(&o).contains("euler          0"));
    let bad = connlap_stdin(&["report", "-"], "1,2\n1,,3\n");
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 2"));
    assert_eq!(connlap(&["report", "/nonexistent/file"]).status.code(), Some(2));
    let big = connlap_stdin(&["report", "-", "--max-n", "3"], "1,2,3\n");
    assert_eq!(big.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = connlap(&["verify", "energy", "--pool", "small", "--seed", "3"]);
    let b = connlap(&["verify", "energy", "--pool", "small", "--seed", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_all_small_pool() {
    let o = connlap(&["verify", "all", "--pool", "small", "--seed", "7"]);
    let text = stdout(&o);
    assert!(o.status.success(), "{text}");
    assert!(text.lines().last().unwrap().starts_with("PASS all"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_energy_reports_kite_matroid() {
    let o = connlap(&["verify", "energy", "--pool", "named"]);
    assert!(stdout(&o).contains("ok   energy/total kite-matroid: 3 = 3"));
}

#[test]
fn verify_paths_reports_sequences() {
    let o = connlap(&["verify", "paths"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("per(1+A) = (1,2,6,24,120,720), per(A) = (0,1,2,9,44,265)"));
}

#[test]
fn verify_file_pool_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let pool = dir.path().join("pool.txt");
    std::fs::write(&pool, "1,2,3\n---\n1,2\n2,3\n3,4\n4,1\n").unwrap();
    let spec = format!("file:{}", pool.display());
    let o = connlap(&["verify", "unit-ball", "--pool", &spec]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("2 complexes"));
    assert_eq!(connlap(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(connlap(&["verify", "energy", "--pool", "huge"]).status.code(), Some(2));
    let missing = format!("file:{}", dir.path().join("missing").display());
    assert_eq!(connlap(&["verify", "energy", "--pool", &missing]).status.code(), Some(2));
}

#[test]
fn size_guard_skips_large_members() {
    let o = connlap(&["verify", "energy", "--pool", "named", "--max-n", "8"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("skip energy/size octahedron"));
}

#[test]
fn ring_expressions() {
    let o = connlap(&["ring", "X = gen(1,2); Y = cycle(5); Z = X * Y + X"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("energy      1\n"), "{text}");
    assert!(text.contains("inverse sum 1\n"), "{text}");
    let o = connlap(&["ring", "2 * diamond() - gen(1|2)"]);
    assert!(stdout(&o).contains("energy      0\n"));
    let bad = connlap(&["ring", "X = gen(1,2"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn ring_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("e.ring");
    std::fs::write(&p, "# product of two triangles\nT = simplex(2)\nT * T\n").unwrap();
    let o = connlap(&["ring", p.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("inverse sum 1"));
}
