use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

const C4: &str = "4 4\n1 2\n2 3\n3 4\n4 1\n";
const K4: &str = "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
const TRIFORCE: &str = "\
# outer triangles at 1, 4, 7 joined by the central triangle 1-4-7
9 12
1 2
2 3
3 1
1 4
4 5
5 6
6 4
4 7
7 8
8 9
9 7
7 1
";
const TRIFORCE_WALK: &str = "e1*e3*e5*e7*e9*e11 - e2*e4*e6*e8*e10*e12";

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn ugb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ugb"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).unwrap()
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn graver_c4() {
    let g = file(C4);
    let out = ugb(&["graver", path(&g)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\ne1*e3 - e2*e4\n");

    let out = ugb(&["graver", path(&g), "--format", "vector"]);
    assert_eq!(stdout(&out), "1 4\n1 -1 1 -1\n");
}

#[test]
fn graver_k4() {
    let g = file(K4);
    let out = ugb(&["graver", path(&g)]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<&str> = stdout(&out).lines().collect();
    assert_eq!(lines[0], "3");
    assert_eq!(lines.len(), 4);
    assert!(lines[1..].iter().all(|l| l.matches('*').count() == 2));
}

#[test]
fn ugb_c4_and_k4() {
    let g = file(C4);
    assert_eq!(stdout(&ugb(&["ugb", path(&g)])), "1\ne1*e3 - e2*e4\n");
    let g = file(K4);
    let graver = ugb(&["graver", path(&g)]);
    assert_eq!(stdout(&ugb(&["ugb", path(&g)])), stdout(&graver));
}

#[test]
fn ugb_triforce_explain() {
    let g = file(TRIFORCE);
    let out = ugb(&["ugb", path(&g)]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("9\n"));
    assert!(!text.contains(TRIFORCE_WALK));
    assert!(!text.contains("rejected"));

    let out = ugb(&["ugb", path(&g), "--explain", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    let rejected: Vec<&str> = stdout(&out)
        .lines()
        .filter(|l| l.starts_with("rejected"))
        .collect();
    assert_eq!(
        rejected,
        [format!("rejected: {TRIFORCE_WALK} : {{e4,e8,e12}} ⊆ w⁻")]
    );
}

#[test]
fn imported_basis_matches_enumeration() {
    let g = file(TRIFORCE);
    let exported = ugb(&["graver", path(&g), "--format", "vector"]);
    let basis = file(stdout(&exported));
    for cmd in ["ugb", "stats"] {
        let enumerated = ugb(&[cmd, path(&g)]);
        let imported = ugb(&[cmd, path(&g), "--basis", path(&basis)]);
        assert_eq!(imported.status.code(), Some(0));
        assert_eq!(stdout(&imported), stdout(&enumerated), "{cmd}");
    }
    let out = ugb(&["verify", path(&g), "--basis", path(&basis)]);
    assert_eq!(stdout(&out), "imported: 10, primitive: 10, ugb: 9, OK\n");
}

#[test]
fn imported_non_primitive_is_reported_separately() {
    let g = file(K4);
    // the square 1-2-3-4 and the same square walked twice
    let basis = file("2 6\n1 0 -1 -1 0 1\n2 0 -2 -2 0 2\n");
    let out = ugb(&["ugb", path(&g), "--basis", path(&basis), "--explain"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("1\n"));
    assert!(text.contains("not primitive: e1^2*e6^2 - e3^2*e4^2"));
}

#[test]
fn classify_reports() {
    let g = file(TRIFORCE);
    let out = ugb(&["classify", path(&g), TRIFORCE_WALK]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "irreducible walk binomial: yes\nprimitive: yes\nin UGB: no (pure cycle {e4,e8,e12} ⊆ w⁻)\n"
    );

    let g = file(C4);
    let out = ugb(&["classify", path(&g), "e1*e3 - e2*e4"]);
    assert_eq!(
        stdout(&out),
        "irreducible walk binomial: yes\nprimitive: yes\nin UGB: yes\n"
    );
    let out = ugb(&["classify", path(&g), "1 -1 1 -1"]);
    assert_eq!(
        stdout(&out),
        "irreducible walk binomial: yes\nprimitive: yes\nin UGB: yes\n"
    );

    let out = ugb(&["classify", path(&g), "e1*e2 - e3*e4"]);
    assert_eq!(out.status.code(), Some(5));
    assert!(stdout(&out).starts_with("irreducible walk binomial: no"));

    let out = ugb(&["classify", path(&g), "e1^2*e3^2 - e2^2*e4^2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("primitive: no"));

    let out = ugb(&["classify", path(&g), "e1*e9 - e2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_counts() {
    let g = file(C4);
    assert_eq!(
        stdout(&ugb(&["verify", path(&g)])),
        "irreducible: 1, primitive: 1, ugb: 1, OK\n"
    );
    let g = file(TRIFORCE);
    let out = ugb(&["verify", path(&g)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("primitive: 10, ugb: 9, OK\n"));
}

#[test]
fn stats_k4_and_square_chain() {
    let g = file(K4);
    let text = stdout(&ugb(&["stats", path(&g)])).to_string();
    assert!(text.contains("|Gr_A|: 3\n|U_A|: 3\ndegree histogram: {2:3}\nmax |B_w|: 4\n"));

    // three squares joined by single edges
    let chain =
        "12 14\n1 2\n2 3\n3 4\n4 1\n4 5\n5 6\n6 7\n7 8\n8 5\n8 9\n9 10\n10 11\n11 12\n12 9\n";
    let g = file(chain);
    let text = stdout(&ugb(&["stats", path(&g)])).to_string();
    assert!(text.starts_with("|Gr_A|: 3\n|U_A|: 3\n"));
}

#[test]
fn exit_codes() {
    let bad = file("3 3\n1 2\n2 3\n1 2\n");
    let out = ugb(&["graver", path(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));

    assert_eq!(
        ugb(&["graver", "/nonexistent/graph"]).status.code(),
        Some(2)
    );
    assert_eq!(ugb(&["frobnicate"]).status.code(), Some(2));

    let g = file(TRIFORCE);
    let out = ugb(&["graver", path(&g), "--max-walks", "10"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--basis"));
}

#[test]
fn output_independent_of_workers() {
    let g = file(TRIFORCE);
    for cmd in ["graver", "ugb", "stats", "verify"] {
        let one = ugb(&[cmd, path(&g)]);
        let four = ugb(&[cmd, path(&g), "--parallel", "4"]);
        assert_eq!(one.stdout, four.stdout, "{cmd}");
    }
}
