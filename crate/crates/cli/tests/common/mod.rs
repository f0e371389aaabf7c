#![allow(dead_code)]

use std::path::PathBuf;

use oddspan::families::{gen_bridge_join, gen_c5k, gen_complete, gen_complete_bipartite_minus_edge, path};
use oddspan::graph::complement;
use oddspan::Graph;
use oddspan_cli::io::{emit_graph, Labeled};

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn invoke(args: &[&str], input: &str) -> Output {
    let argv = std::iter::once("oddspan").chain(args.iter().copied());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = oddspan_cli::run(argv, &mut input.as_bytes(), &mut out, &mut err);
    Output { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

pub fn text(g: Graph) -> String {
    emit_graph(&Labeled::plain(g))
}

pub struct GoldenCase {
    pub subcommand: &'static str,
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub input: String,
    pub exit: i32,
}

impl GoldenCase {
    pub fn path(&self) -> PathBuf {
        PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("tests/golden")
            .join(self.subcommand)
            .join(format!("{}.txt", self.name))
    }
}

pub fn golden_cases() -> Vec<GoldenCase> {
    let case = |subcommand, name, args, g: Graph, exit| GoldenCase { subcommand, name, args, input: text(g), exit };
    vec![
        case("check", "c4", &["check", "--odd-spanning-tree"], oddspan::families::cycle(4), 1),
        case(
            "check",
            "k4-bridge-k4",
            &["check", "--odd-spanning-tree"],
            gen_bridge_join(&gen_complete(4), &gen_complete(4), 3, 0),
            1,
        ),
        case("check", "k4", &["check", "--odd-spanning-tree"], gen_complete(4), 0),
        case("check", "k8-factor", &["check", "--odd-factor"], gen_complete(8), 0),
        case("construct", "trifree-2k2", &["construct", "--trifree"], complement(&oddspan::families::cycle(4)), 1),
        case("construct", "trifree-c5-2", &["construct", "--trifree"], gen_c5k(2), 1),
        case(
            "construct",
            "trifree-k24-minus-e",
            &["construct", "--trifree"],
            gen_complete_bipartite_minus_edge(2, 4).unwrap(),
            1,
        ),
        case("construct", "double-star-p6", &["construct", "--double-star"], path(6), 0),
        case("construct", "dense-k6", &["construct", "--dense"], gen_complete(6), 0),
        case("complement", "p4", &["complement"], path(4), 0),
    ]
}

/// Compares every golden case, rewriting the files when `UPDATE_GOLDEN` is set.
pub fn check_goldens() -> Vec<String> {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut failures = Vec::new();
    for case in golden_cases() {
        let out = invoke(case.args, &case.input);
        let path = case.path();
        if update {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, &out.stdout).unwrap();
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_default();
        if out.stdout != expected {
            failures.push(format!("{}/{}: output differs from {}", case.subcommand, case.name, path.display()));
        }
        if out.code != case.exit {
            failures.push(format!("{}/{}: exit {} (want {})", case.subcommand, case.name, out.code, case.exit));
        }
    }
    failures
}
