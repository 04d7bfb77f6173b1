mod common;

use common::{brute_lambda, random_connected, random_graph};
use mincut_core::{
    generate_clustered_er, noi_mincut, viecut, viecut_parallel, ClusteredErParams, Graph,
    PipelineConfig, PipelineTrace,
};
use proptest::prelude::*;

fn check_trace(trace: &PipelineTrace) -> Result<(), TestCaseError> {
    for l in &trace.levels {
        prop_assert!(
            l.vertices_after < l.vertices_before,
            "level did not shrink: {:?}",
            l
        );
    }
    for w in trace.levels.windows(2) {
        prop_assert!(w[1].lambda_hat <= w[0].lambda_hat);
        prop_assert_eq!(w[1].vertices_before, w[0].vertices_after);
    }
    Ok(())
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, 0.05f64..0.8, any::<u64>(), any::<bool>()).prop_map(|(n, p, seed, connected)| {
        if connected {
            random_connected(n, p, 10, seed)
        } else {
            random_graph(n, p, 10, seed)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn never_below_lambda(g in graph(12), n0 in 2usize..=6, seed in any::<u64>()) {
        let cfg = PipelineConfig { n0, seed, ..Default::default() };
        let (cut, trace) = viecut(&g, &cfg);
        prop_assert!(cut.value >= brute_lambda(&g));
        prop_assert_eq!(g.cut_capacity(&cut.side), Ok(cut.value));
        check_trace(&trace)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn larger_graphs_stay_valid(n in 50usize..=600, deg in 2.0f64..12.0, seed in any::<u64>(), n0 in 2usize..=40) {
        let g = random_connected(n, deg / n as f64, 50, seed);
        let cfg = PipelineConfig { n0, seed, ..Default::default() };
        let (cut, trace) = viecut(&g, &cfg);
        prop_assert!(cut.value >= noi_mincut(&g).value);
        prop_assert_eq!(g.cut_capacity(&cut.side), Ok(cut.value));
        check_trace(&trace)?;
        let (again, _) = viecut(&g, &cfg);
        prop_assert_eq!(again, cut);
    }

    #[test]
    fn parallel_runs_stay_valid(n in 50usize..=600, deg in 2.0f64..12.0, seed in any::<u64>(), threads in 2usize..=4) {
        let g = random_connected(n, deg / n as f64, 50, seed);
        let cfg = PipelineConfig { n0: 8, seed, threads, ..Default::default() };
        let (cut, trace) = viecut_parallel(&g, &cfg);
        prop_assert!(cut.value >= noi_mincut(&g).value);
        prop_assert_eq!(g.cut_capacity(&cut.side), Ok(cut.value));
        check_trace(&trace)?;
    }
}

#[test]
fn clustered_graphs_through_several_levels() {
    for seed in 0..10 {
        let p = ClusteredErParams {
            n: 3_000,
            d: 0.5,
            k: 2 + seed as usize % 3,
            seed,
        };
        let g = generate_clustered_er(&p).unwrap();
        let cfg = PipelineConfig {
            n0: 50,
            seed,
            ..Default::default()
        };
        let (cut, trace) = viecut(&g, &cfg);
        assert!(!trace.levels.is_empty());
        assert!(cut.value >= noi_mincut(&g).value);
        assert_eq!(g.cut_capacity(&cut.side), Ok(cut.value));
    }
}
