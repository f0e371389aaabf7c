use oddspan::families::{gen_bridge_join, gen_complete, gen_complete_bipartite};
use oddspan::oracle::find_odd_spanning_tree_bruteforce;
use oddspan::sweep::{
    bipartition_exhaustive, dense_exhaustive, factor_suite, packing_exhaustive, split_exhaustive, split_random,
    trifree_crafted, trifree_exhaustive, trifree_random, Executor, SweepReport,
};
use oddspan::trifree::TreeId;

fn assert_clean(report: &SweepReport) {
    assert!(report.passed(), "{}: {:#?}", report.universe, report.disagreements);
}

#[test]
fn sequential_and_parallel_reports_match() {
    for n in [4, 5] {
        assert_eq!(trifree_exhaustive(Executor::Sequential, n), trifree_exhaustive(Executor::Parallel, n));
        assert_eq!(packing_exhaustive(Executor::Sequential, n), packing_exhaustive(Executor::Parallel, n));
    }
    assert_eq!(split_random(Executor::Sequential, 40, 1), split_random(Executor::Parallel, 40, 1));
}

#[test]
fn exhaustive_small_orders() {
    let exec = Executor::default();
    for n in [2, 4, 6] {
        assert_clean(&dense_exhaustive(exec, n));
        assert_clean(&split_exhaustive(exec, n));
        assert_clean(&trifree_exhaustive(exec, n));
    }
    for n in 1..=6 {
        assert_clean(&packing_exhaustive(exec, n));
        assert_clean(&bipartition_exhaustive(exec, n));
    }
}

#[test]
fn seeded_samples() {
    let exec = Executor::default();
    assert_clean(&trifree_random(exec, 8, 100, 2));
    assert_clean(&factor_suite(exec, 20, 2));
}

#[test]
fn crafted_families_cover_reachable_shapes() {
    let report = trifree_crafted(Executor::default(), vec![]);
    assert_clean(&report);
    for id in TreeId::ALL {
        if id != TreeId::T8 {
            assert!(report.coverage.contains_key(&id), "{id} not covered");
        }
    }
}

#[test]
fn degree_bound_is_sharp() {
    let k44 = gen_complete_bipartite(4, 4);
    assert_eq!(k44.min_degree(), 4);
    assert!(find_odd_spanning_tree_bruteforce(&k44).unwrap().is_none());
    let joined = gen_bridge_join(&gen_complete(4), &gen_complete(4), 0, 0);
    assert_eq!(joined.min_degree(), 3);
    assert!(find_odd_spanning_tree_bruteforce(&joined).unwrap().is_none());
}
