//! Shared helpers for the CLI and acceptance suites.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use cayley::{io, FiniteGroup, GeneratorSet};

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_mingen")
}

pub fn fixture_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/table1.txt")
}

pub fn paper_group() -> FiniteGroup {
    io::parse_cayley_table(include_str!("../../../../fixtures/table1.txt")).unwrap()
}

/// Runs the binary, returning (stdout, stderr, exit code).
pub fn run(args: &[&str]) -> (String, String, i32) {
    let output = Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(output.stdout).expect("utf8 stdout"),
        String::from_utf8(output.stderr).expect("utf8 stderr"),
        output.status.code().expect("exit code"),
    )
}

/// Every group of order at most 8 used by the exhaustive sweeps, plus
/// names for failure messages.
pub fn small_corpus() -> Vec<(String, FiniteGroup)> {
    let mut corpus: Vec<(String, FiniteGroup)> = vec![("trivial".into(), io::cyclic(1).unwrap())];
    for n in 2..=8 {
        corpus.push((format!("cyclic:{n}"), io::cyclic(n).unwrap()));
    }
    corpus.push(("klein4".into(), io::klein4().unwrap()));
    corpus.push(("dihedral:3".into(), io::dihedral(3).unwrap()));
    corpus.push(("dihedral:4".into(), io::dihedral(4).unwrap()));
    corpus.push(("symmetric:3".into(), io::symmetric(3).unwrap()));
    corpus
}

/// The wider corpus of order at most 24 used by the algorithm sweeps.
pub fn full_corpus() -> Vec<(String, FiniteGroup)> {
    let c = |n: usize| io::cyclic(n).unwrap();
    let mut corpus = small_corpus();
    corpus.push(("dihedral:5".into(), io::dihedral(5).unwrap()));
    corpus.push(("dihedral:6".into(), io::dihedral(6).unwrap()));
    corpus.push(("table1".into(), paper_group()));
    corpus.push(("c2xc4".into(), io::direct_product(&c(2), &c(4)).unwrap()));
    corpus.push((
        "c2xc2xc2".into(),
        io::direct_product(&io::direct_product(&c(2), &c(2)).unwrap(), &c(2)).unwrap(),
    ));
    corpus.push(("c3xc3".into(), io::direct_product(&c(3), &c(3)).unwrap()));
    corpus.push(("c2xc6".into(), io::direct_product(&c(2), &c(6)).unwrap()));
    corpus.push(("c4xc6".into(), io::direct_product(&c(4), &c(6)).unwrap()));
    corpus
}

pub fn subset(group: &FiniteGroup, mask: u32) -> GeneratorSet {
    (0..group.order())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| group.element(i).unwrap())
        .collect()
}
