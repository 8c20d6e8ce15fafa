mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use common::{fixture, oracle_graph, sides_of_cycle};
use num_traits::{Signed, Zero};
use zonohedra::realize::{find_direction, positions_from_subsets, DirectionMethod};
use zonohedra::reduce::delete_zone;
use zonohedra::{
    embedding_isomorphic, emit_off, graph_of, parse_off, rat, ratio, realize, realize_with,
    recognize, reduce_to_cube, verify_zonohedron, ReductionTrace, ScaleSchedule,
};

#[test]
fn cube_realizes_as_the_unit_cube() {
    let g = fixture("cube");
    let cert = recognize(&g).unwrap();
    let trace = reduce_to_cube(&g, &cert).unwrap();
    assert!(trace.steps.is_empty());
    let p = realize(&g, &cert, &trace, &rat(1)).unwrap();
    let mut coords: Vec<_> = p.vertices.iter().map(|v| v.to_f64()).collect();
    coords.sort_by(|a, b| a.partial_cmp(b).unwrap());
    assert_eq!(coords.len(), 8);
    assert!(coords.iter().flatten().all(|&c| c == 0.0 || c == 1.0));
    assert!(embedding_isomorphic(&graph_of(&p).unwrap(), &g));
}

#[test]
fn m4_and_m6_realizations() {
    for (m, seed, n) in [(4, 0, 14), (6, 3, 32)] {
        let g = oracle_graph(m, seed);
        let cert = recognize(&g).unwrap();
        let trace = reduce_to_cube(&g, &cert).unwrap();
        let r = realize_with(&g, &cert, &trace, &ScaleSchedule::default()).unwrap();
        let p = &r.polyhedron;
        assert_eq!(p.vertex_count(), n);
        let report = verify_zonohedron(p);
        assert!(report.is_clean(), "{:?}", report.violations);
        assert_eq!(report.zones, m);
        assert_eq!(cert.zone_lengths, vec![2 * (m - 1); m]);
        assert!(embedding_isomorphic(&graph_of(p).unwrap(), &g));
        assert_eq!(positions_from_subsets(&r), p.vertices);
        assert_eq!(r.generators.len(), m);
        assert_eq!(p.face_count(), m * (m - 1));
    }
}

#[test]
fn direction_for_an_eight_cycle_of_an_m4_polyhedron() {
    // delete a zone of an m = 5 graph: its zone cycle is an 8-cycle of the m = 4 graph
    let g5 = oracle_graph(5, 11);
    let cert5 = recognize(&g5).unwrap();
    let (g4, step) = delete_zone(&g5, &cert5.decomposition.zones[0]).unwrap();
    let cycle = step.cycle_vertices();
    assert_eq!(cycle.len(), 8);
    let cert4 = recognize(&g4).unwrap();
    let p = realize(&g4, &cert4, &reduce_to_cube(&g4, &cert4).unwrap(), &rat(1)).unwrap();
    let normals = p.outward_normals();
    let (a, b) = sides_of_cycle(&p.faces, &cycle);
    for side in [a, b] {
        let side: BTreeSet<usize> = side.into_iter().collect();
        let dir = find_direction(&p, &cycle, &side).unwrap();
        let k = cycle.len();
        for i in 0..k {
            let (u, v) = (cycle[i], cycle[(i + 1) % k]);
            for (f, face) in p.faces.iter().enumerate() {
                let has_edge = (0..4).any(|j| {
                    let (x, y) = (face[j], face[(j + 1) % 4]);
                    (x, y) == (u, v) || (x, y) == (v, u)
                });
                if has_edge {
                    let dot = normals[f].dot(&dir.d);
                    assert!(if side.contains(&f) {
                        dot.is_positive()
                    } else {
                        dot.is_negative()
                    });
                }
            }
        }
        assert!(normals.iter().all(|n| !n.dot(&dir.d).is_zero()));
    }
}

#[test]
fn per_zone_scales_change_edge_lengths_only() {
    let g = oracle_graph(5, 2);
    let cert = recognize(&g).unwrap();
    let trace = reduce_to_cube(&g, &cert).unwrap();
    let schedule = ScaleSchedule {
        cube: rat(2),
        zones: vec![ratio(1, 3), rat(5)],
        default: ratio(3, 2),
    };
    let r = realize_with(&g, &cert, &trace, &schedule).unwrap();
    assert!(verify_zonohedron(&r.polyhedron).is_clean());
    assert!(embedding_isomorphic(&graph_of(&r.polyhedron).unwrap(), &g));
    assert!(r
        .expansions
        .iter()
        .all(|e| e.method != DirectionMethod::Relaxation || !e.perturbed));
    assert!(realize_with(&g, &cert, &trace, &ScaleSchedule::uniform(rat(0))).is_err());
}

#[test]
fn trace_json_round_trip() {
    let g = oracle_graph(6, 9);
    let cert = recognize(&g).unwrap();
    let trace = reduce_to_cube(&g, &cert).unwrap();
    let text = serde_json::to_string(&trace).unwrap();
    let back: ReductionTrace = serde_json::from_str(&text).unwrap();
    assert_eq!(back, trace);
    assert!(realize(&g, &cert, &back, &rat(1)).is_ok());
}

#[test]
fn realized_off_survives_a_round_trip() {
    let g = oracle_graph(7, 4);
    let cert = recognize(&g).unwrap();
    let p = realize(&g, &cert, &reduce_to_cube(&g, &cert).unwrap(), &rat(1)).unwrap();
    let text = emit_off(&p, 0);
    assert!(text.starts_with(&format!(
        "OFF\n{} {} {}\n",
        p.vertex_count(),
        p.face_count(),
        p.edge_count()
    )));
    let back = parse_off(&text).unwrap();
    assert_eq!(back, p);
    assert!(verify_zonohedron(&back).is_clean());
}

#[test]
fn m40_realization_smoke_benchmark() {
    let g = oracle_graph(40, 1);
    let t = Instant::now();
    let cert = recognize(&g).unwrap();
    let trace = reduce_to_cube(&g, &cert).unwrap();
    let p = realize(&g, &cert, &trace, &rat(1)).unwrap();
    let elapsed = t.elapsed();
    println!("m = 40 realization: {elapsed:.2?}");
    assert_eq!(p.vertex_count(), 40 * 39 + 2);
    assert!(elapsed.as_secs_f64() < 10.0, "{elapsed:?}");
    assert!(verify_zonohedron(&p).is_clean());
}
