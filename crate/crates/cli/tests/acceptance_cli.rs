//! Determinism gate: repeating an invocation with the same inputs must
//! reproduce every output byte for byte.

use std::path::Path;
use std::process::Command;

fn run(dir: &Path, args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_cyclespan"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_9_replay_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let at = dir.path();
    let out = run(at, &["gen", "--n", "61", "--p-rule", "5lnn/n", "--seed", "3", "--out", "g.txt"]);
    assert!(out.status.success());

    for args in [
        vec!["decompose", "g.txt", "--seed", "9", "--out", "one.txt"],
        vec!["decompose", "g.txt", "--seed", "9", "--out", "two.txt"],
    ] {
        let out = run(at, &args);
        assert!(out.status.success(), "decompose must succeed: {out:?}");
    }
    let one = std::fs::read(at.join("one.txt")).unwrap();
    let two = std::fs::read(at.join("two.txt")).unwrap();
    assert!(!one.is_empty() && one == two, "decompositions must replay byte-identically");

    std::fs::write(
        at.join("grid.cfg"),
        "[experiment]\nn = 9 11\np = 0.7\nseeds = 4\nseed-base = 5\n\n[pipeline]\nc-const = 2\n",
    )
    .unwrap();
    for (csv, svg) in [("a.csv", "a.svg"), ("b.csv", "b.svg")] {
        let out = run(
            at,
            &["experiment", "grid.cfg", "--out", csv, "--no-timing", "--emit-svg", svg],
        );
        assert!(out.status.success(), "experiment must succeed: {out:?}");
    }
    let a = std::fs::read(at.join("a.csv")).unwrap();
    let b = std::fs::read(at.join("b.csv")).unwrap();
    assert!(!a.is_empty() && a == b, "experiment tables must replay byte-identically");
    let asvg = std::fs::read(at.join("a.svg")).unwrap();
    let bsvg = std::fs::read(at.join("b.svg")).unwrap();
    assert!(!asvg.is_empty() && asvg == bsvg, "plots must replay byte-identically");

    println!(
        "criterion 9 (replay determinism): PASS (decompose and experiment outputs \
         byte-identical across reruns)"
    );
}
