//! End-to-end checks of the command-line driver and its exit-code
//! contract: 0 polynomial/success, 2 NP-complete, 1 error.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_minhom")
}

fn write(dir: &std::path::Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().unwrap()
}

fn tempdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("minhom-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn classify_exit_codes() {
    let dir = tempdir("classify");
    let c4 = write(
        &dir,
        "c4.dg",
        "digraph c4\nvertices: a b c d\nreflexive\narcs: a->b b->a b->c c->b c->d d->c d->a a->d\n",
    );
    let out = run(&["classify", c4.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict: np-complete"));
    assert!(text.contains("induced C4 in S(H)"));

    let one = write(&dir, "one.dg", "digraph one\nvertices: a\nreflexive\n");
    let out = run(&["classify", one.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict: polynomial"));
    assert!(text.contains("min-max-ordering: a"));

    let bad = write(&dir, "bad.dg", "digraph b\nvertices: a\narcs: a->c\n");
    let out = run(&["classify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("unknown vertex"));
}

#[test]
fn solve_prints_assignment_and_cost() {
    let dir = tempdir("solve");
    let h = write(
        &dir,
        "h.dg",
        "digraph h\nvertices: 1 2\nreflexive\narcs: 1->2\n",
    );
    let g = write(&dir, "g.dg", "digraph g\nvertices: p q\narcs: p->q\n");
    let c = write(&dir, "c.tsv", "1 2\np 0 3\nq 5 1/2\n");
    let out = run(&[
        "solve",
        "--template",
        h.to_str().unwrap(),
        "--instance",
        g.to_str().unwrap(),
        "--costs",
        c.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("p -> 1"));
    assert!(text.contains("q -> 2"));
    assert!(text.contains("cost: 1/2"));
}

#[test]
fn catalog_and_reduce_roundtrip() {
    let dir = tempdir("catalog");
    let cat_dir = dir.join("catalog");
    let out = run(&[
        "catalog",
        "--max-size",
        "4",
        "--out",
        cat_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let index = std::fs::read_to_string(cat_dir.join("index.txt")).unwrap();
    assert_eq!(index.lines().count(), 9);
    assert!(index.contains("paper-index: 4"));
    // deterministic across runs
    let again = run(&[
        "catalog",
        "--max-size",
        "4",
        "--out",
        cat_dir.to_str().unwrap(),
    ]);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), index);

    let x = write(
        &dir,
        "x.cg",
        "colored x\nU: u\nV: v\nW: w\nedges: u-v u-w v-w\n",
    );
    let gad_dir = dir.join("gadget");
    let out = run(&[
        "reduce",
        "--obstruction",
        "h4",
        "--input",
        x.to_str().unwrap(),
        "--k",
        "1",
        "--out",
        gad_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("budget: 2"));
    for f in ["instance.dg", "costs.tsv", "budget.txt", "provenance.txt"] {
        assert!(gad_dir.join(f).exists(), "{f} missing");
    }
    let prov = std::fs::read_to_string(gad_dir.join("provenance.txt")).unwrap();
    assert!(prov.contains("intermediate m_uw for edge u-w"));
}

#[test]
fn verify_theorem_and_export_dot() {
    let out = run(&["verify-theorem", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("0 mismatch(es)"));

    let dir = tempdir("dot");
    let h = write(
        &dir,
        "h.dg",
        "digraph h\nvertices: u v s\nreflexive\narcs: u->v v->u s->v u->s\n",
    );
    let out = run(&["export-dot", h.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("\"u\" -> \"v\""));

    let out = run(&["export-dot", h.to_str().unwrap(), "--certificate"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("induced obstruction H1 in H"));
}
