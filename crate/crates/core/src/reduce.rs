//! Zone deletion by face contraction, and reduction of a zonohedral graph to
//! the cube.
//!
//! Deleting a zone contracts each of its zone edges to a single vertex. Each
//! zone face then becomes a pair of parallel edges, which are merged, so the
//! band of faces collapses to a cycle (the zone cycle) with as many edges as
//! the zone had faces.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::plane_graph::{extract_faces, FaceStructure, GraphError, RotationGraph};
use crate::recognize::{recognize, Rejection, ZoneCertificate};
use crate::zones::{Edge, Zone};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("zone has {0} faces; at least 4 are required")]
    ZoneTooShort(usize),
    #[error("zone edge ({0}, {1}) is not an edge of the graph")]
    MissingZoneEdge(usize, usize),
    #[error("vertex {0} lies on two zone edges")]
    SharedZoneVertex(usize),
    #[error("merging left vertex {vertex} with non-adjacent parallel edges")]
    NonAdjacentParallel { vertex: usize },
    #[error("contraction produced an invalid rotation system: {0}")]
    Contraction(#[from] GraphError),
    #[error("graph after deletion step {step} is no longer zonohedral: {}", rejection.reason.as_str())]
    Invalidated {
        step: usize,
        rejection: Box<Rejection>,
    },
    #[error("zone lengths are inconsistent after deletion step {step}: {detail}")]
    Bookkeeping { step: usize, detail: String },
    #[error("no zone of length six or more left while {zones} zones remain")]
    Stuck { zones: usize },
}

/// One zone deletion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    /// The deleted zone, in terms of the graph before deletion.
    pub deleted_zone: Zone,
    /// Edges of the zone cycle in the graph after deletion; edge `i` is the
    /// image of `deleted_zone.face_cycle[i]`.
    pub zone_cycle: Vec<Edge>,
    /// Pre-deletion vertex id to post-deletion vertex id.
    pub vertex_map: Vec<usize>,
    /// Set when the result is not 3-connected (deleting a zone of the cube).
    #[serde(default)]
    pub degenerate: bool,
}

impl ReductionStep {
    /// The zone cycle as a cyclic vertex sequence.
    pub fn cycle_vertices(&self) -> Vec<usize> {
        self.zone_cycle.iter().map(|e| e.0).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub base: RotationGraph,
}

/// Contracts every zone edge of `zone` and merges the resulting double edges.
///
/// Merged vertices get fresh contiguous ids in order of their smallest
/// pre-image; the rotation of a merged vertex `{u, v}` is the rotation of `u`
/// with the slot of `v` replaced by the rotation of `v` minus the slot of `u`.
pub fn delete_zone(
    g: &RotationGraph,
    zone: &Zone,
) -> Result<(RotationGraph, ReductionStep), ReduceError> {
    let n = g.vertex_count();
    if zone.len() < 4 {
        return Err(ReduceError::ZoneTooShort(zone.len()));
    }
    let mut partner = vec![usize::MAX; n];
    for &(u, v) in &zone.zone_edges {
        if !g.has_edge(u, v) {
            return Err(ReduceError::MissingZoneEdge(u, v));
        }
        for (a, b) in [(u, v), (v, u)] {
            if partner[a] != usize::MAX {
                return Err(ReduceError::SharedZoneVertex(a));
            }
            partner[a] = b;
        }
    }

    let mut vertex_map = vec![usize::MAX; n];
    let mut preimage: Vec<(usize, Option<usize>)> = Vec::with_capacity(n - zone.len());
    for v in 0..n {
        if vertex_map[v] != usize::MAX {
            continue;
        }
        let id = preimage.len();
        vertex_map[v] = id;
        if partner[v] != usize::MAX {
            vertex_map[partner[v]] = id;
            preimage.push((v, Some(partner[v])));
        } else {
            preimage.push((v, None));
        }
    }

    let after = |rot: &[usize], skip: usize| -> Vec<usize> {
        let i = rot
            .iter()
            .position(|&x| x == skip)
            .expect("contracted edge present");
        (1..rot.len()).map(|k| rot[(i + k) % rot.len()]).collect()
    };
    let mut rotations = Vec::with_capacity(preimage.len());
    for (w, &(u, v)) in preimage.iter().enumerate() {
        let raw: Vec<usize> = match v {
            None => g.rotation(u).to_vec(),
            Some(v) => {
                let mut r = after(g.rotation(u), v);
                r.extend(after(g.rotation(v), u));
                r
            }
        };
        let mapped: Vec<usize> = raw.iter().map(|&x| vertex_map[x]).collect();
        rotations
            .push(merge_parallel(&mapped).ok_or(ReduceError::NonAdjacentParallel { vertex: w })?);
    }
    let reduced = RotationGraph::new(rotations)?;

    let k = zone.len();
    let images: Vec<usize> = zone.zone_edges.iter().map(|e| vertex_map[e.0]).collect();
    let zone_cycle = (0..k).map(|i| (images[i], images[(i + 1) % k])).collect();
    let degenerate = reduced.min_degree() < 3;
    let step = ReductionStep {
        deleted_zone: zone.clone(),
        zone_cycle,
        vertex_map,
        degenerate,
    };
    Ok((reduced, step))
}

/// Drops cyclically repeated neighbours; `None` if a repeat is not adjacent.
fn merge_parallel(rot: &[usize]) -> Option<Vec<usize>> {
    let k = rot.len();
    let mut out: Vec<usize> = (0..k)
        .filter(|&i| k == 1 || rot[i] != rot[(i + k - 1) % k])
        .map(|i| rot[i])
        .collect();
    if out.is_empty() && k > 0 {
        out.push(rot[0]);
    }
    let distinct: BTreeSet<usize> = out.iter().copied().collect();
    (distinct.len() == out.len()).then_some(out)
}

/// Whether `g` is the graph of a cube: three zones, each of length four.
pub fn is_cube(g: &RotationGraph) -> bool {
    matches!(recognize(g), Ok(c) if c.zone_count == 3 && c.zone_lengths.iter().all(|&l| l == 4))
}

/// For each pre-deletion face, the post-deletion face it became, or `None`
/// for faces of the deleted zone.
pub fn face_correspondence(
    before: &FaceStructure,
    step: &ReductionStep,
    after: &FaceStructure,
) -> Vec<Option<usize>> {
    let deleted: BTreeSet<usize> = step.deleted_zone.face_cycle.iter().copied().collect();
    before
        .faces
        .iter()
        .enumerate()
        .map(|(f, cycle)| {
            if deleted.contains(&f) {
                return None;
            }
            let (a, b) = (step.vertex_map[cycle[0]], step.vertex_map[cycle[1]]);
            after.face_of_dart(a, b)
        })
        .collect()
}

/// Deletes zones of length six or more, smallest canonical zone first, until
/// the cube is left. Every intermediate graph is re-certified.
pub fn reduce_to_cube(
    g: &RotationGraph,
    cert: &ZoneCertificate,
) -> Result<ReductionTrace, ReduceError> {
    let mut graph = g.clone();
    let mut cert = cert.clone();
    let mut steps = Vec::new();
    while cert.zone_count > 3 {
        let index = steps.len();
        let zone = cert
            .decomposition
            .zones
            .iter()
            .find(|z| z.len() >= 6)
            .ok_or(ReduceError::Stuck {
                zones: cert.zone_count,
            })?;
        let (next, step) = delete_zone(&graph, zone)?;
        let next_cert = recognize(&next).map_err(|r| ReduceError::Invalidated {
            step: index,
            rejection: Box::new(r),
        })?;
        check_lengths(&cert, &step, &next_cert).map_err(|detail| ReduceError::Bookkeeping {
            step: index,
            detail,
        })?;
        steps.push(step);
        graph = next;
        cert = next_cert;
    }
    if !cert.zone_lengths.iter().all(|&l| l == 4) {
        return Err(ReduceError::Bookkeeping {
            step: steps.len(),
            detail: format!("three zones left with lengths {:?}", cert.zone_lengths),
        });
    }
    Ok(ReductionTrace { steps, base: graph })
}

/// Every surviving zone keeps all its faces except the two it shared with
/// the deleted zone.
fn check_lengths(
    before: &ZoneCertificate,
    step: &ReductionStep,
    after: &ZoneCertificate,
) -> Result<(), String> {
    let map = face_correspondence(&before.faces, step, &after.faces);
    let by_faces: BTreeMap<BTreeSet<usize>, usize> = after
        .decomposition
        .zones
        .iter()
        .map(|z| (z.face_cycle.iter().copied().collect(), z.id))
        .collect();
    let deleted = &step.deleted_zone.face_cycle;
    if after.zone_count + 1 != before.zone_count {
        return Err(format!(
            "{} zones before, {} after",
            before.zone_count, after.zone_count
        ));
    }
    for z in &before.decomposition.zones {
        if z.face_cycle == *deleted {
            continue;
        }
        let image: BTreeSet<usize> = z.face_cycle.iter().filter_map(|&f| map[f]).collect();
        match by_faces.get(&image) {
            Some(&id) if after.decomposition.zones[id].len() + 2 == z.len() => {}
            Some(&id) => {
                return Err(format!(
                    "zone {} went from {} to {} faces",
                    z.id,
                    z.len(),
                    after.decomposition.zones[id].len()
                ))
            }
            None => return Err(format!("zone {} has no counterpart", z.id)),
        }
    }
    Ok(())
}

/// Faces of the graph obtained by replaying `step` on `g`.
pub(crate) fn replay(
    g: &RotationGraph,
    step: &ReductionStep,
) -> Result<(RotationGraph, FaceStructure), ReduceError> {
    let (next, redone) = delete_zone(g, &step.deleted_zone)?;
    if redone.vertex_map != step.vertex_map {
        return Err(ReduceError::Bookkeeping {
            step: 0,
            detail: "trace does not match the graph".to_string(),
        });
    }
    let faces = extract_faces(&next)?;
    Ok((next, faces))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::fixtures::*;
    use crate::plane_graph::{check_planarity, extract_faces};

    #[test]
    fn deleting_a_cube_zone_leaves_a_four_cycle() {
        let g = cube();
        let cert = recognize(&g).unwrap();
        let zone = &cert.decomposition.zones[0];
        let (h, step) = delete_zone(&g, zone).unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.edge_count(), 4);
        assert!((0..4).all(|v| h.degree(v) == 2));
        assert!(step.degenerate);
        assert_eq!(step.zone_cycle.len(), 4);
        let image: BTreeSet<usize> = step.vertex_map.iter().copied().collect();
        assert_eq!(image.len(), g.vertex_count() - zone.len());
        assert!(!is_cube(&h));
    }

    #[test]
    fn cube_reduces_to_itself() {
        let g = cube();
        assert!(is_cube(&g));
        let trace = reduce_to_cube(&g, &recognize(&g).unwrap()).unwrap();
        assert!(trace.steps.is_empty());
        assert_eq!(trace.base, g);
    }

    #[test]
    fn four_cycle_is_not_a_cube() {
        assert!(!is_cube(&cycle(4)));
        assert!(!is_cube(&k4()));
    }

    #[test]
    fn rejects_bad_zones() {
        let g = cube();
        let zone = Zone {
            id: 0,
            face_cycle: vec![0, 1, 2, 3],
            zone_edges: vec![(0, 1), (1, 3), (4, 5), (6, 7)],
        };
        assert_eq!(
            delete_zone(&g, &zone).unwrap_err(),
            ReduceError::SharedZoneVertex(1)
        );
        let zone = Zone {
            id: 0,
            face_cycle: vec![0, 1],
            zone_edges: vec![(0, 1), (2, 3)],
        };
        assert_eq!(
            delete_zone(&g, &zone).unwrap_err(),
            ReduceError::ZoneTooShort(2)
        );
        let zone = Zone {
            id: 0,
            face_cycle: vec![0, 1, 2, 3],
            zone_edges: vec![(0, 7), (1, 3), (4, 5), (2, 6)],
        };
        assert_eq!(
            delete_zone(&g, &zone).unwrap_err(),
            ReduceError::MissingZoneEdge(0, 7)
        );
    }

    #[test]
    fn merge_parallel_edges() {
        assert_eq!(merge_parallel(&[1, 2, 2, 3]), Some(vec![1, 2, 3]));
        assert_eq!(merge_parallel(&[2, 1, 3, 2]), Some(vec![1, 3, 2]));
        assert_eq!(merge_parallel(&[1, 2, 1, 3]), None);
    }

    #[test]
    fn deletion_keeps_a_sphere() {
        let g = cube();
        let cert = recognize(&g).unwrap();
        let (h, _) = delete_zone(&g, &cert.decomposition.zones[1]).unwrap();
        let fs = extract_faces(&h).unwrap();
        assert!(check_planarity(&h, &fs).is_planar());
    }
}
