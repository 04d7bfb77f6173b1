mod common;

use std::io::Write;

use common::random_graph;
use mincut_core::{
    kcore, parse_metis, read_metis_file, write_metis, write_metis_file, Graph, NodeId,
};
use proptest::prelude::*;

fn brute_core_members(g: &Graph, k: usize) -> Vec<NodeId> {
    // the k-core is the union of all vertex sets in which everyone has k neighbors
    let n = g.n();
    let mut union = 0u32;
    for mask in 1u32..(1 << n) {
        let ok = (0..n as NodeId)
            .filter(|&v| mask >> v & 1 == 1)
            .all(|v| g.targets(v).iter().filter(|&&u| mask >> u & 1 == 1).count() >= k);
        if ok {
            union |= mask;
        }
    }
    (0..n as NodeId).filter(|&v| union >> v & 1 == 1).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn metis_round_trip(n in 1usize..=100, p in 0.0f64..0.5, seed in any::<u64>()) {
        let g = random_graph(n, p, 1_000, seed);
        prop_assert_eq!(parse_metis(&write_metis(&g)).unwrap(), g);
    }

    #[test]
    fn kcore_is_maximal(n in 1usize..=12, p in 0.1f64..0.8, seed in any::<u64>(), k in 1usize..=5) {
        let g = random_graph(n, p, 5, seed);
        let (core, map) = kcore(&g, k);
        for v in 0..core.n() as NodeId {
            prop_assert!(core.neighbor_count(v) >= k);
        }
        prop_assert_eq!(map, brute_core_members(&g, k));
    }

    #[test]
    fn kcore_is_idempotent(n in 1usize..=60, p in 0.0f64..0.4, seed in any::<u64>(), k in 1usize..=6) {
        let g = random_graph(n, p, 5, seed);
        let (core, _) = kcore(&g, k);
        let (again, map) = kcore(&core, k);
        prop_assert_eq!(&again, &core);
        prop_assert_eq!(map, (0..core.n() as NodeId).collect::<Vec<_>>());
    }
}

#[test]
fn k4_is_its_own_three_core() {
    let mut e = Vec::new();
    for u in 0..4 {
        for v in u + 1..4 {
            e.push((u, v, 1));
        }
    }
    let g = Graph::from_edges(4, &e).unwrap();
    assert_eq!(kcore(&g, 3).0, g);
}

#[test]
fn file_round_trip_plain_and_gzip() {
    let g = random_graph(40, 0.2, 50, 11);
    let dir = tempfile::tempdir().unwrap();
    let plain = dir.path().join("g.metis");
    write_metis_file(&g, &plain).unwrap();
    assert_eq!(read_metis_file(&plain).unwrap(), g);

    let gz = dir.path().join("g.metis.gz");
    let mut enc = flate2::write::GzEncoder::new(
        std::fs::File::create(&gz).unwrap(),
        flate2::Compression::fast(),
    );
    enc.write_all(write_metis(&g).as_bytes()).unwrap();
    enc.finish().unwrap();
    assert_eq!(read_metis_file(&gz).unwrap(), g);
}
