mod common;

use common::{invoke, text};
use oddspan::families::{cycle, gen_complete, gen_complete_bipartite, path};

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("oddspan-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(invoke(&["check", "--bogus"], "").code, 64);
    assert_eq!(invoke(&["construct"], "").code, 64);
    assert_eq!(invoke(&["gen", "--family", "complete"], "").code, 64);
    assert_eq!(invoke(&["construct", "--split", "--dense"], "").code, 64);
}

#[test]
fn data_errors_exit_65() {
    let out = invoke(&["check"], "3 1\n0 0\n");
    assert_eq!(out.code, 65);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);
    assert_eq!(invoke(&["construct", "--dense"], &text(gen_complete_bipartite(3, 3))).code, 65);
    assert_eq!(invoke(&["construct", "--split"], &text(cycle(6))).code, 65);
    assert_eq!(invoke(&["construct", "--odd-factor", "--strict"], &text(cycle(6))).code, 65);
    assert_eq!(invoke(&["check"], "0 0\n").code, 65);
}

#[test]
fn verdict_exit_codes() {
    assert_eq!(invoke(&["check"], &text(gen_complete(6))).code, 0);
    assert_eq!(invoke(&["check"], &text(path(5))).code, 1);
    assert_eq!(invoke(&["check", "--odd-factor"], &text(cycle(8))).code, 1);
    assert_eq!(invoke(&["check", "--cap", "0"], &text(cycle(8))).code, 1);
    let sparse = oddspan::families::gen_random(14, 0.3, 3);
    assert_eq!(invoke(&["check", "--cap", "0"], &text(sparse)).stdout, "UNKNOWN none\nV false\n");
}

#[test]
fn odd_factor_without_packing() {
    let g = oddspan::families::gen_bridge_join(&gen_complete(4), &gen_complete(4), 0, 0);
    let out = invoke(&["construct", "--odd-factor"], &text(g.clone()));
    assert_eq!(out.code, 2);
    assert!(out.stdout.starts_with("UNKNOWN no-tree-packing\nR crossing-edges 13 parts 8\n"));
    // The bridge forces an odd degree sum on each four-vertex side.
    let checked = invoke(&["check", "--odd-factor"], &text(g.clone()));
    assert_eq!((checked.code, checked.stdout.as_str()), (1, "NOT_EXISTS oracle\nR exhaustive-search\nV false\n"));
    assert_eq!(invoke(&["check", "--odd-factor", "--cap", "5"], &text(g)).code, 2);
}

#[test]
fn verify_round_trip() {
    let g = text(gen_complete(6));
    let cert = invoke(&["construct", "--dense"], &g).stdout;
    let file = temp_file("tree", &cert);
    let out = invoke(&["verify", "--tree", file.to_str().unwrap()], &g);
    assert_eq!((out.code, out.stdout.as_str()), (0, "VALID\n"));

    let bad = temp_file("path", "0 1\n1 2\n2 3\n3 4\n4 5\n");
    let out = invoke(&["verify", "--tree", bad.to_str().unwrap()], &g);
    assert_eq!(out.code, 1);
    assert!(out.stdout.starts_with("INVALID"));

    let factor = invoke(&["construct", "--odd-factor"], &g).stdout;
    let file = temp_file("factor", &factor);
    assert_eq!(invoke(&["verify", "--factor", file.to_str().unwrap()], &g).code, 0);

    assert_eq!(invoke(&["verify", "--tree", "/nonexistent/oddspan"], &g).code, 65);
}

#[test]
fn labels_survive_certificates() {
    let out = invoke(&["check"], "4 6\na b\na c\na d\nb c\nb d\nc d\n");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("T a b\n"), "{}", out.stdout);
}

#[test]
fn gen_output_parses_back() {
    for args in [
        &["gen", "--family", "c5k", "--k", "3"][..],
        &["gen", "--family", "random-split", "--m", "3", "--n", "3", "--seed", "4"],
        &["gen", "--family", "random-triangle-free", "--n", "9", "--p", "0.4"],
    ] {
        let g = invoke(args, "").stdout;
        let again = invoke(&["complement"], &invoke(&["complement"], &g).stdout).stdout;
        assert_eq!(g, again);
    }
}

#[test]
fn sweep_reports_pass() {
    let out = invoke(&["sweep", "--trifree", "--n", "6"], "");
    assert_eq!(out.code, 0);
    assert!(out.stdout.ends_with("result PASS\n"));
    let seq = invoke(&["sweep", "--split", "--count", "30", "--sequential"], "");
    let par = invoke(&["sweep", "--split", "--count", "30"], "");
    assert_eq!(seq.stdout, par.stdout);
    assert_eq!(invoke(&["sweep", "--dense", "--n", "9"], "").code, 64);
}

#[test]
fn info_flags() {
    let out = invoke(&["info"], &text(cycle(5)));
    assert!(out.stdout.contains("diameter 2\n"));
    assert!(out.stdout.contains("triangle-free true\n"));
    assert!(out.stdout.contains("split false\n"));
}
