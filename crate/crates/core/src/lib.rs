//! Recognizing and realizing zonohedral graphs.
//!
//! A zonohedral graph is the graph of a convex polyhedron whose faces are all
//! centrally symmetric; here, one whose faces are parallelograms. [`recognize`]
//! decides whether a plane graph given as a rotation system is one,
//! [`reduce_to_cube`] strips zones off until a cube remains, and [`realize`]
//! builds the polyhedron back with exact rational coordinates.
//!
//! ```
//! use zonohedra::{recognize, reduce_to_cube, realize, verify_zonohedron, parse_graph, rat};
//!
//! let cube = parse_graph(r#"{"n":8,"adj":[[1,4,2],[0,3,5],[0,6,3],[1,2,7],[0,5,6],[1,7,4],[2,4,7],[3,6,5]]}"#).unwrap();
//! let cert = recognize(&cube).unwrap();
//! assert_eq!(cert.zone_lengths, vec![4, 4, 4]);
//! let trace = reduce_to_cube(&cube, &cert).unwrap();
//! let p = realize(&cube, &cert, &trace, &rat(1)).unwrap();
//! assert!(verify_zonohedron(&p).is_clean());
//! ```

pub mod chirotope;
pub mod geometry;
pub mod io;
pub mod oracle;
pub mod plane_graph;
pub mod polyhedron;
pub mod realize;
pub mod recognize;
pub mod reduce;
pub mod stats;
pub mod zones;

pub use geometry::{rat, ratio, Rational, Vec3};
pub use io::{emit_graph, emit_off, parse_graph, parse_off};
pub use oracle::{build_zonotope, graph_of, GeneratorSet};
pub use plane_graph::{embedding_isomorphic, extract_faces, FaceStructure, RotationGraph};
pub use polyhedron::{verify_zonohedron, Polyhedron, VerificationReport};
pub use realize::{realize, realize_with, Realization, ScaleSchedule};
pub use recognize::{recognize, Recognition, RejectReason, Rejection, Report, ZoneCertificate};
pub use reduce::{delete_zone, reduce_to_cube, ReductionTrace};
pub use stats::StatsReport;
pub use zones::{trace_zones, Zone, ZoneDecomposition};
