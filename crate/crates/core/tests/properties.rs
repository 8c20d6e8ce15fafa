mod common;

use common::{fixture, oracle_graph};
use proptest::prelude::*;
use zonohedra::reduce::{delete_zone, face_correspondence};
use zonohedra::{
    build_zonotope, emit_graph, emit_off, parse_graph, parse_off, recognize, GeneratorSet,
    RotationGraph,
};

fn relabel(g: &RotationGraph, perm: &[usize]) -> RotationGraph {
    let mut rot = vec![Vec::new(); g.vertex_count()];
    for (v, r) in g.rotations().iter().enumerate() {
        rot[perm[v]] = r.iter().map(|&u| perm[u]).collect();
    }
    RotationGraph::new(rot).unwrap()
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn oracle_graphs_are_accepted(m in 3usize..9, seed in any::<u64>()) {
        let g = oracle_graph(m, seed);
        let cert = recognize(&g).unwrap();
        prop_assert_eq!(cert.zone_count, m);
        prop_assert_eq!(g.vertex_count(), m * (m - 1) + 2);
        prop_assert!(cert.zone_lengths.iter().all(|&l| l == 2 * (m - 1)));
    }

    #[test]
    fn verdict_ignores_mirroring_and_labels(m in 3usize..8, seed in any::<u64>(), shuffle in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let g = oracle_graph(m, seed);
        let lengths = sorted(recognize(&g).unwrap().zone_lengths);
        let mirrored = recognize(&g.mirror()).unwrap();
        prop_assert_eq!(sorted(mirrored.zone_lengths), lengths.clone());

        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(shuffle));
        let relabeled = recognize(&relabel(&g, &perm)).unwrap();
        prop_assert_eq!(sorted(relabeled.zone_lengths), lengths);
    }

    #[test]
    fn deleting_a_zone_keeps_a_zonohedral_graph(m in 4usize..9, seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let g = oracle_graph(m, seed);
        let cert = recognize(&g).unwrap();
        let zone = &cert.decomposition.zones[pick.index(m)];
        let (h, step) = delete_zone(&g, zone).unwrap();
        let after = recognize(&h).unwrap();
        prop_assert_eq!(after.zone_count, m - 1);
        prop_assert_eq!(h.vertex_count(), g.vertex_count() - zone.len());
        let map = face_correspondence(&cert.faces, &step, &after.faces);
        prop_assert_eq!(map.iter().filter(|f| f.is_some()).count(), after.faces.face_count());
    }

    #[test]
    fn graph_json_round_trip(m in 3usize..8, seed in any::<u64>()) {
        let g = oracle_graph(m, seed);
        prop_assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g);
    }

    #[test]
    fn off_round_trip(m in 3usize..7, seed in any::<u64>()) {
        let p = build_zonotope(&GeneratorSet::random(m, seed).unwrap()).unwrap();
        prop_assert_eq!(parse_off(&emit_off(&p, 0)).unwrap(), p);
    }
}

#[test]
fn rejections_ignore_mirroring() {
    for name in ["k4", "glued_quads", "pseudo_double_wheel"] {
        let g = fixture(name);
        let a = recognize(&g).unwrap_err();
        let b = recognize(&g.mirror()).unwrap_err();
        assert_eq!(a.reason, b.reason, "{name}");
    }
}
