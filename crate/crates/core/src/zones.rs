//! Zones of a quadrangulated plane graph.
//!
//! A zone is a cyclic band of quadrilateral faces in which consecutive faces
//! share an edge, and the two shared edges of every face are opposite to each
//! other in that face. Every face has two pairs of opposite edges, so it is
//! crossed by two zone orbits; in the graph of a zonohedron these are two
//! distinct zones.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::plane_graph::FaceStructure;

pub type Edge = (usize, usize);

fn undirected(u: usize, v: usize) -> Edge {
    (u.min(v), u.max(v))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZoneError {
    #[error("face has {length} edges, expected a quadrilateral")]
    NotQuadrilateral { length: usize },
    #[error("({0}, {1}) is not an edge of the face")]
    NotAnEdge(usize, usize),
    #[error("unknown zone id {0}")]
    UnknownZone(usize),
    #[error("a zone does not intersect itself in a face pair")]
    SameZone,
    #[error(transparent)]
    Defect(#[from] ZoneDefect),
}

/// Structural defect found while tracing or pairing zones.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
#[serde(tag = "defect", rename_all = "snake_case")]
pub enum ZoneDefect {
    #[error("face {face} has {length} edges")]
    NonQuadFace { face: usize, length: usize },
    #[error("zone orbit passes through face {face} twice")]
    SelfIntersection { face: usize, orbit: Vec<usize> },
    #[error("face {face} belongs to zones {zones:?}, expected two distinct zones")]
    FaceMembership { face: usize, zones: Vec<usize> },
    #[error("zones {zones:?} share faces {faces:?}, expected exactly two")]
    PairIntersection {
        zones: [usize; 2],
        faces: Vec<usize>,
    },
    #[error("zone {zone} is split by zone {other} into chains of {chains:?} faces")]
    Chain {
        zone: usize,
        other: usize,
        faces: [usize; 2],
        chains: [usize; 2],
    },
}

/// The edge opposite to `e` in the quadrilateral `face`, in face order.
pub fn opposite_edge(face: &[usize], e: Edge) -> Result<Edge, ZoneError> {
    if face.len() != 4 {
        return Err(ZoneError::NotQuadrilateral { length: face.len() });
    }
    let i = (0..4)
        .find(|&i| undirected(face[i], face[(i + 1) % 4]) == undirected(e.0, e.1))
        .ok_or(ZoneError::NotAnEdge(e.0, e.1))?;
    Ok((face[(i + 2) % 4], face[(i + 3) % 4]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Zone {
    pub id: usize,
    /// Faces in cyclic order, starting at the smallest face id.
    pub face_cycle: Vec<usize>,
    /// `zone_edges[i]` is shared by `face_cycle[i - 1]` and `face_cycle[i]`.
    pub zone_edges: Vec<Edge>,
}

impl Zone {
    pub fn len(&self) -> usize {
        self.face_cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.face_cycle.is_empty()
    }

    pub fn position(&self, face: usize) -> Option<usize> {
        self.face_cycle.iter().position(|&f| f == face)
    }
}

/// How two zones meet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZonePair {
    pub zones: [usize; 2],
    pub faces: Vec<usize>,
    /// For each of the two zones, the lengths of the two face chains strictly
    /// between the shared faces. Present when exactly two faces are shared.
    pub chains: Option<[[usize; 2]; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZoneDecomposition {
    pub zones: Vec<Zone>,
    /// Zone ids crossing each face, with multiplicity.
    pub face_membership: Vec<Vec<usize>>,
    pub pair_table: BTreeMap<(usize, usize), ZonePair>,
    /// Number of face entries made while tracing.
    pub face_visits: usize,
}

impl ZoneDecomposition {
    pub fn zone_count(&self) -> usize {
        self.zones.len()
    }

    pub fn zone_lengths(&self) -> Vec<usize> {
        self.zones.iter().map(Zone::len).collect()
    }

    /// The face pair where zones `a` and `b` meet, with the chain lengths on
    /// each side.
    pub fn intersection(&self, a: usize, b: usize) -> Result<ZonePair, ZoneError> {
        let m = self.zones.len();
        for z in [a, b] {
            if z >= m {
                return Err(ZoneError::UnknownZone(z));
            }
        }
        if a == b {
            return Err(ZoneError::SameZone);
        }
        let key = (a.min(b), a.max(b));
        let mut pair = self.pair_table.get(&key).cloned().unwrap_or(ZonePair {
            zones: [key.0, key.1],
            faces: Vec::new(),
            chains: None,
        });
        let chains = match (&pair.chains, pair.faces.len()) {
            (Some(c), 2) => *c,
            _ => {
                return Err(ZoneDefect::PairIntersection {
                    zones: [key.0, key.1],
                    faces: pair.faces,
                }
                .into())
            }
        };
        let faces = [pair.faces[0], pair.faces[1]];
        for (i, c) in chains.iter().enumerate() {
            if c[0] == 0 || c[0] != c[1] {
                return Err(ZoneDefect::Chain {
                    zone: pair.zones[i],
                    other: pair.zones[1 - i],
                    faces,
                    chains: *c,
                }
                .into());
            }
        }
        if a > b {
            pair.zones.swap(0, 1);
            pair.chains = Some([chains[1], chains[0]]);
        }
        Ok(pair)
    }

    /// Every pair of zones meets in two faces splitting both into non-empty
    /// equal chains. Reports the first failing pair.
    pub fn check_pairs(&self) -> Result<(), ZoneDefect> {
        let m = self.zones.len();
        for a in 0..m {
            for b in a + 1..m {
                match self.intersection(a, b) {
                    Ok(_) => {}
                    Err(ZoneError::Defect(d)) => return Err(d),
                    Err(e) => unreachable!("ids are in range: {e}"),
                }
            }
        }
        Ok(())
    }
}

/// Traces every zone orbit of a quadrangulation.
///
/// Each face is entered once per opposite-edge pair, so the trace makes at
/// most `2·F` face visits.
pub fn trace_zones(fs: &FaceStructure) -> Result<ZoneDecomposition, ZoneDefect> {
    let face_count = fs.face_count();
    if let Some((face, f)) = fs.faces.iter().enumerate().find(|(_, f)| f.len() != 4) {
        return Err(ZoneDefect::NonQuadFace {
            face,
            length: f.len(),
        });
    }

    // Where the directed edge (u, v) sits inside its face.
    let locate = |u: usize, v: usize| -> (usize, usize) {
        let g = fs
            .face_of_dart(u, v)
            .expect("face structure covers both sides of every edge");
        let q = (0..4)
            .find(|&q| fs.faces[g][q] == u && fs.faces[g][(q + 1) % 4] == v)
            .expect("dart lies on its face");
        (g, q)
    };

    let mut used = vec![[false; 2]; face_count];
    let mut stamp = vec![usize::MAX; face_count];
    let mut visits = 0;
    let mut orbits: Vec<(Vec<usize>, Vec<Edge>)> = Vec::new();

    for f0 in 0..face_count {
        for p0 in 0..2 {
            if used[f0][p0] {
                continue;
            }
            let orbit_id = orbits.len();
            let mut faces = vec![f0];
            let mut crossings = Vec::new();
            let mut repeated: Option<usize> = None;
            used[f0][p0] = true;
            stamp[f0] = orbit_id;
            visits += 1;
            let (mut f, mut p) = (f0, p0);
            loop {
                let (a, b) = (fs.faces[f][p], fs.faces[f][(p + 1) % 4]);
                crossings.push(undirected(a, b));
                let (g, q) = locate(b, a);
                visits += 1;
                let exit = (q + 2) % 4;
                if g == f0 && exit == p0 {
                    break;
                }
                if stamp[g] == orbit_id && repeated.is_none() {
                    repeated = Some(g);
                }
                stamp[g] = orbit_id;
                used[g][q % 2] = true;
                faces.push(g);
                f = g;
                p = exit;
                if faces.len() > 2 * face_count {
                    break;
                }
            }
            if let Some(face) = repeated {
                return Err(ZoneDefect::SelfIntersection { face, orbit: faces });
            }
            // the closing entry into f0 is counted once, not twice
            visits -= 1;
            orbits.push((faces, crossings));
        }
    }

    let mut zones: Vec<Zone> = orbits
        .into_iter()
        .map(|(walk, cross)| canonical_zone(&walk, &cross))
        .collect();
    zones.sort_by(|a, b| a.face_cycle.cmp(&b.face_cycle));
    for (id, z) in zones.iter_mut().enumerate() {
        z.id = id;
    }

    let mut face_membership = vec![Vec::new(); face_count];
    let mut positions = vec![Vec::new(); face_count];
    for z in &zones {
        for (i, &f) in z.face_cycle.iter().enumerate() {
            face_membership[f].push(z.id);
            positions[f].push((z.id, i));
        }
    }
    for (face, zs) in face_membership.iter().enumerate() {
        if zs.len() != 2 || zs[0] == zs[1] {
            return Err(ZoneDefect::FaceMembership {
                face,
                zones: zs.clone(),
            });
        }
    }

    // (zone, zone) -> (face, position in the first zone, position in the second)
    type Hits = Vec<(usize, usize, usize)>;
    let mut shared: BTreeMap<(usize, usize), Hits> = BTreeMap::new();
    for (f, pos) in positions.iter().enumerate() {
        let (mut x, mut y) = (pos[0], pos[1]);
        if x.0 > y.0 {
            std::mem::swap(&mut x, &mut y);
        }
        shared.entry((x.0, y.0)).or_default().push((f, x.1, y.1));
    }
    let pair_table = shared
        .into_iter()
        .map(|(key, hits)| {
            let faces: Vec<usize> = hits.iter().map(|h| h.0).collect();
            let chains = (hits.len() == 2).then(|| {
                let split = |len: usize, i: usize, j: usize| {
                    let gap = i.abs_diff(j);
                    [gap - 1, len - gap - 1]
                };
                [
                    split(zones[key.0].len(), hits[0].1, hits[1].1),
                    split(zones[key.1].len(), hits[0].2, hits[1].2),
                ]
            });
            (
                key,
                ZonePair {
                    zones: [key.0, key.1],
                    faces,
                    chains,
                },
            )
        })
        .collect();

    Ok(ZoneDecomposition {
        zones,
        face_membership,
        pair_table,
        face_visits: visits,
    })
}

/// Rotates the walk to start at its smallest face and orients it towards the
/// smaller of that face's two neighbours in the cycle.
fn canonical_zone(walk: &[usize], cross: &[Edge]) -> Zone {
    let k = walk.len();
    let r = (0..k).min_by_key(|&i| walk[i]).unwrap_or(0);
    let forward = k < 3 || walk[(r + 1) % k] <= walk[(r + k - 1) % k];
    let (face_cycle, zone_edges) = if forward {
        (
            (0..k).map(|j| walk[(r + j) % k]).collect(),
            (0..k).map(|j| cross[(r + j + k - 1) % k]).collect(),
        )
    } else {
        (
            (0..k).map(|j| walk[(r + k - j) % k]).collect(),
            (0..k).map(|j| cross[(r + k - j) % k]).collect(),
        )
    };
    Zone {
        id: 0,
        face_cycle,
        zone_edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::extract_faces;
    use crate::plane_graph::fixtures::*;

    #[test]
    fn opposite_edges() {
        let face = [10, 11, 12, 13];
        assert_eq!(opposite_edge(&face, (10, 11)), Ok((12, 13)));
        assert_eq!(opposite_edge(&face, (11, 12)), Ok((13, 10)));
        assert_eq!(opposite_edge(&face, (12, 11)), Ok((13, 10)));
        assert_eq!(
            opposite_edge(&face, (10, 12)),
            Err(ZoneError::NotAnEdge(10, 12))
        );
        assert_eq!(
            opposite_edge(&[1, 2, 3], (1, 2)),
            Err(ZoneError::NotQuadrilateral { length: 3 })
        );
    }

    #[test]
    fn cube_has_three_zones_of_four() {
        let fs = extract_faces(&cube()).unwrap();
        let d = trace_zones(&fs).unwrap();
        assert_eq!(d.zone_lengths(), vec![4, 4, 4]);
        assert!(d
            .face_membership
            .iter()
            .all(|m| m.len() == 2 && m[0] != m[1]));
        assert_eq!(d.face_visits, 2 * fs.face_count());
        for z in &d.zones {
            for i in 0..z.len() {
                let prev = z.face_cycle[(i + z.len() - 1) % z.len()];
                let here = z.face_cycle[i];
                let (u, v) = z.zone_edges[i];
                let sides = fs.faces_of_edge(u, v).unwrap();
                assert!(sides.contains(&prev) && sides.contains(&here));
            }
        }
        for a in 0..3 {
            for b in 0..3 {
                if a != b {
                    let pair = d.intersection(a, b).unwrap();
                    assert_eq!(pair.faces.len(), 2);
                    assert_eq!(pair.chains, Some([[1, 1], [1, 1]]));
                }
            }
        }
        assert_eq!(d.intersection(1, 1), Err(ZoneError::SameZone));
        assert_eq!(d.intersection(0, 7), Err(ZoneError::UnknownZone(7)));
        assert_eq!(d.check_pairs(), Ok(()));
    }

    #[test]
    fn zone_canonical_form() {
        let fs = extract_faces(&cube()).unwrap();
        let d = trace_zones(&fs).unwrap();
        for z in &d.zones {
            let min = *z.face_cycle.iter().min().unwrap();
            assert_eq!(z.face_cycle[0], min);
            assert!(z.face_cycle[1] < z.face_cycle[z.len() - 1]);
        }
        let cycles: Vec<_> = d.zones.iter().map(|z| z.face_cycle.clone()).collect();
        let mut sorted = cycles.clone();
        sorted.sort();
        assert_eq!(cycles, sorted);
    }

    #[test]
    fn pseudo_double_wheel_self_intersects() {
        let fs = extract_faces(&pseudo_double_wheel()).unwrap();
        match trace_zones(&fs) {
            Err(ZoneDefect::SelfIntersection { face, orbit }) => {
                // one orbit runs through all 16 edges, meeting every face twice
                assert_eq!(orbit.len(), 16);
                for f in 0..8 {
                    assert_eq!(orbit.iter().filter(|&&x| x == f).count(), 2);
                }
                assert!(orbit.iter().filter(|&&x| x == face).count() >= 2);
            }
            other => panic!("expected self-intersection, got {other:?}"),
        }
    }

    #[test]
    fn triangles_are_reported() {
        let fs = extract_faces(&k4()).unwrap();
        assert!(matches!(
            trace_zones(&fs),
            Err(ZoneDefect::NonQuadFace { length: 3, .. })
        ));
    }
}
