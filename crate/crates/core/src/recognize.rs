//! Deciding whether a rotation graph is the graph of a zonohedron.
//!
//! A graph qualifies iff it is a 3-connected sphere embedding whose faces are
//! quadrilaterals, every face lies on exactly two zones, and every two zones
//! meet in exactly two faces that cut both zones into non-empty chains of
//! equal length. The checks run in a fixed order and stop at the first
//! failure, so the rejection reason is deterministic.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::plane_graph::{
    check_planarity, check_three_connected, extract_faces, ConnectivityWitness, FaceStructure,
    RotationGraph, SeparationKind,
};
use crate::zones::{trace_zones, ZoneDecomposition, ZoneDefect};

/// Fewer vertices than the cube.
pub const MIN_VERTICES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    PlanarEmbedding,
    ThreeConnected,
    QuadFaces,
    TwoZonesPerFace,
    ZonePairs,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZoneCertificate {
    pub faces: FaceStructure,
    pub decomposition: ZoneDecomposition,
    pub zone_count: usize,
    pub zone_lengths: Vec<usize>,
    pub checks_passed: Vec<Check>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RejectReason {
    #[serde(rename = "not_planar_embedding")]
    NotPlanarEmbedding,
    #[serde(rename = "not_3_connected")]
    NotThreeConnected,
    #[serde(rename = "non_quad_face")]
    NonQuadFace,
    #[serde(rename = "zone_self_intersection")]
    ZoneSelfIntersection,
    #[serde(rename = "face_membership_defect")]
    FaceMembershipDefect,
    #[serde(rename = "pair_intersection_defect")]
    PairIntersectionDefect,
    #[serde(rename = "chain_defect")]
    ChainDefect,
    #[serde(rename = "too_small")]
    TooSmall,
}

impl RejectReason {
    pub fn as_str(self) -> &'static str {
        match self {
            RejectReason::NotPlanarEmbedding => "not_planar_embedding",
            RejectReason::NotThreeConnected => "not_3_connected",
            RejectReason::NonQuadFace => "non_quad_face",
            RejectReason::ZoneSelfIntersection => "zone_self_intersection",
            RejectReason::FaceMembershipDefect => "face_membership_defect",
            RejectReason::PairIntersectionDefect => "pair_intersection_defect",
            RejectReason::ChainDefect => "chain_defect",
            RejectReason::TooSmall => "too_small",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    Euler {
        vertices: usize,
        edges: usize,
        faces: usize,
        characteristic: i64,
    },
    Separation(ConnectivityWitness),
    Zone(ZoneDefect),
    Size {
        vertices: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rejection {
    pub reason: RejectReason,
    pub witness: Witness,
}

impl Rejection {
    fn new(reason: RejectReason, witness: Witness) -> Self {
        Rejection { reason, witness }
    }
}

impl From<ZoneDefect> for Rejection {
    fn from(d: ZoneDefect) -> Self {
        let reason = match d {
            ZoneDefect::NonQuadFace { .. } => RejectReason::NonQuadFace,
            ZoneDefect::SelfIntersection { .. } => RejectReason::ZoneSelfIntersection,
            ZoneDefect::FaceMembership { .. } => RejectReason::FaceMembershipDefect,
            ZoneDefect::PairIntersection { .. } => RejectReason::PairIntersectionDefect,
            ZoneDefect::Chain { .. } => RejectReason::ChainDefect,
        };
        Rejection::new(reason, Witness::Zone(d))
    }
}

pub type Recognition = Result<ZoneCertificate, Rejection>;

pub fn recognize(g: &RotationGraph) -> Recognition {
    let n = g.vertex_count();
    let too_small = || Rejection::new(RejectReason::TooSmall, Witness::Size { vertices: n });
    if n < 4 {
        return Err(too_small());
    }
    if !g.is_connected() {
        return Err(Rejection::new(
            RejectReason::NotThreeConnected,
            Witness::Separation(ConnectivityWitness {
                kind: SeparationKind::Disconnected,
                vertices: Vec::new(),
            }),
        ));
    }
    let faces = extract_faces(g).expect("connected graph has traceable faces");
    let mut checks = Vec::new();

    let verdict = check_planarity(g, &faces);
    if !verdict.is_planar() {
        return Err(Rejection::new(
            RejectReason::NotPlanarEmbedding,
            Witness::Euler {
                vertices: verdict.vertices,
                edges: verdict.edges,
                faces: verdict.faces,
                characteristic: verdict.euler_characteristic(),
            },
        ));
    }
    checks.push(Check::PlanarEmbedding);

    if let Err(w) = check_three_connected(g) {
        return Err(Rejection::new(
            RejectReason::NotThreeConnected,
            Witness::Separation(w),
        ));
    }
    checks.push(Check::ThreeConnected);

    let decomposition = trace_zones(&faces)?;
    checks.push(Check::QuadFaces);
    checks.push(Check::TwoZonesPerFace);

    decomposition.check_pairs()?;
    checks.push(Check::ZonePairs);

    // A 3-connected quadrangulation has at least eight vertices, so this only
    // fires if an earlier check is wrong.
    if n < MIN_VERTICES {
        return Err(too_small());
    }

    Ok(ZoneCertificate {
        zone_count: decomposition.zone_count(),
        zone_lengths: decomposition.zone_lengths(),
        faces,
        decomposition,
        checks_passed: checks,
    })
}

/// Machine-readable report: `{"accepted", "zones"?, "zone_lengths"?, "reason"?, "witness"?}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub accepted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zones: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zone_lengths: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<RejectReason>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Report {
    pub fn new(result: &Recognition) -> Self {
        match result {
            Ok(cert) => Report {
                accepted: true,
                zones: Some(cert.zone_count),
                zone_lengths: Some(cert.zone_lengths.clone()),
                reason: None,
                witness: None,
            },
            Err(rej) => Report {
                accepted: false,
                zones: None,
                zone_lengths: None,
                reason: Some(rej.reason),
                witness: Some(rej.witness.clone()),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Human-readable rendering of a recognition result.
pub fn explain(result: &Recognition) -> String {
    let mut out = String::new();
    match result {
        Ok(cert) => {
            let _ = writeln!(out, "accepted: graph of a zonohedron");
            let _ = writeln!(out, "zones: {}", cert.zone_count);
            let lengths: Vec<String> = cert.zone_lengths.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "zone lengths: {}", lengths.join(" "));
            let _ = writeln!(out, "faces: {}", cert.faces.face_count());
        }
        Err(rej) => {
            let _ = writeln!(out, "rejected: {}", rej.reason.as_str());
            let _ = writeln!(out, "{}", describe_witness(&rej.witness));
        }
    }
    out
}

fn describe_witness(w: &Witness) -> String {
    match w {
        Witness::Euler {
            vertices,
            edges,
            faces,
            characteristic,
        } => format!(
            "V - E + F = {vertices} - {edges} + {faces} = {characteristic}, expected 2"
        ),
        Witness::Separation(c) => match c.kind {
            SeparationKind::Disconnected => "graph is disconnected".to_string(),
            SeparationKind::CutVertex => format!("removing vertex {} disconnects the graph", c.vertices[0]),
            SeparationKind::CutPair => format!(
                "removing vertices {} and {} disconnects the graph",
                c.vertices[0], c.vertices[1]
            ),
        },
        Witness::Zone(d) => match d {
            ZoneDefect::NonQuadFace { face, length } => {
                format!("face {face} has {length} edges, expected 4")
            }
            ZoneDefect::SelfIntersection { face, orbit } => format!(
                "zone orbit crosses face {face} twice; orbit faces: {orbit:?}"
            ),
            ZoneDefect::FaceMembership { face, zones } => {
                format!("face {face} lies on zones {zones:?}, expected two distinct zones")
            }
            ZoneDefect::PairIntersection { zones, faces } => format!(
                "zones {} and {} share {} faces {faces:?}, expected 2",
                zones[0],
                zones[1],
                faces.len()
            ),
            ZoneDefect::Chain {
                zone,
                other,
                faces,
                chains,
            } => format!(
                "zone {zone} is cut by zone {other} at faces {} and {} into unequal or empty chains of {} and {} faces",
                faces[0], faces[1], chains[0], chains[1]
            ),
        },
        Witness::Size { vertices } => format!(
            "{vertices} vertices; the smallest zonohedral graph (the cube) has {MIN_VERTICES}"
        ),
    }
}
