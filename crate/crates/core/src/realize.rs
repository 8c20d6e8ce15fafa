//! Realizing a zonohedral graph as a convex zonohedron.
//!
//! Starting from a cube, the zones removed by [`reduce_to_cube`] are added
//! back newest first. Adding a zone pulls one side of its zone cycle `c` away
//! by a vector `d`: every edge of `c` stretches into a parallelogram. The
//! result is convex exactly when, seen from `d`, the faces on the pulled side
//! of `c` are all visible and the faces on the other side all hidden, i.e. `c`
//! is the silhouette of the current polyhedron in direction `d`.
//!
//! [`reduce_to_cube`]: crate::reduce::reduce_to_cube

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use log::debug;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chirotope::{relax, round_realization, spectral_guess, Chirotope};
use crate::geometry::{rat, Rational, Vec3};
use crate::plane_graph::{FaceStructure, GraphError, RotationGraph};
use crate::polyhedron::Polyhedron;
use crate::recognize::ZoneCertificate;
use crate::reduce::{face_correspondence, replay, ReduceError, ReductionTrace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("scale must be positive, got {0}")]
    NonPositiveScale(Rational),
    #[error("edge ({0}, {1}) of the cycle is not an edge of the polyhedron")]
    CycleEdgeMissing(usize, usize),
    #[error("the chosen side does not split the faces along the cycle")]
    InvalidSide,
    #[error("no expansion direction keeps the polyhedron convex")]
    InfeasibleDirection,
    #[error("direction {0} does not separate the two sides of the cycle")]
    InvalidDirection(Box<Vec3>),
    #[error("trace base is not the graph of a cube")]
    BaseNotCube,
    #[error("trace does not belong to this graph: {0}")]
    TraceMismatch(String),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// How a direction was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DirectionMethod {
    /// Sum of the unit outward normals on the lifted side, rounded to integers.
    NormalSum,
    /// Sum of the extreme rays of the feasible cone.
    ConeSearch,
    /// Taken from a numeric realization of the generator signs of the whole graph.
    Relaxation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionDirection {
    pub d: Vec3,
    /// Faces on the side of the cycle that moves by `d`.
    pub side: BTreeSet<usize>,
    pub method: DirectionMethod,
    /// Whether `d` had to be nudged off a face plane it was parallel to.
    pub perturbed: bool,
}

/// Axis-aligned cube `[0, scale]³`; vertex `i` sits at `scale·(bit0, bit1, bit2)` of `i`.
pub fn cube_base(scale: &Rational) -> Result<Polyhedron, RealizeError> {
    if !scale.is_positive() {
        return Err(RealizeError::NonPositiveScale(scale.clone()));
    }
    let vertices = (0..8)
        .map(|i: i64| Vec3::from_ints(i & 1, (i >> 1) & 1, (i >> 2) & 1).scale(scale))
        .collect();
    let mut faces = Vec::new();
    for axis in 0..3 {
        let (p, q) = ((axis + 1) % 3, (axis + 2) % 3);
        for value in 0..2 {
            let corner = |a: usize, b: usize| (value << axis) | (a << p) | (b << q);
            faces.push(vec![corner(0, 0), corner(1, 0), corner(1, 1), corner(0, 1)]);
        }
    }
    let mut cube = Polyhedron::new(vertices, faces);
    cube.orient_outward();
    Ok(cube)
}

/// Bit mask of every vertex of a cube graph, relative to vertex 0 and its
/// three neighbours; `None` if `g` is not a cube graph.
pub fn cube_labeling(g: &RotationGraph) -> Option<Vec<usize>> {
    if g.vertex_count() != 8 || (0..8).any(|v| g.degree(v) != 3) {
        return None;
    }
    let mut dist = [usize::MAX; 8];
    let mut mask = vec![0usize; 8];
    dist[0] = 0;
    for (bit, &u) in g.rotation(0).iter().enumerate() {
        dist[u] = 1;
        mask[u] = 1 << bit;
    }
    let mut queue: VecDeque<usize> = g.rotation(0).iter().copied().collect();
    while let Some(v) = queue.pop_front() {
        for &u in g.rotation(v) {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
            if dist[u] == dist[v] + 1 {
                mask[u] |= mask[v];
            }
        }
    }
    let distinct: BTreeSet<usize> = mask.iter().copied().collect();
    let hypercube = distinct.len() == 8
        && (0..8).all(|v| {
            g.rotation(v)
                .iter()
                .all(|&u| (mask[u] ^ mask[v]).count_ones() == 1)
        });
    hypercube.then_some(mask)
}

/// Exact constraint check: `n·d > 0` on the lifted side of every cycle edge,
/// `n·d < 0` on the other. Returns the signed constraint vectors.
fn cycle_constraints(
    fs: &FaceStructure,
    normals: &[Vec3],
    cycle: &[usize],
    side: &BTreeSet<usize>,
) -> Result<(Vec<usize>, Vec<Vec3>), RealizeError> {
    let k = cycle.len();
    let mut adjacent = BTreeSet::new();
    for i in 0..k {
        let (u, v) = (cycle[i], cycle[(i + 1) % k]);
        let [f, g] = fs
            .faces_of_edge(u, v)
            .ok_or(RealizeError::CycleEdgeMissing(u, v))?;
        if side.contains(&f) == side.contains(&g) {
            return Err(RealizeError::InvalidSide);
        }
        adjacent.insert(f);
        adjacent.insert(g);
    }
    let lifted: Vec<usize> = adjacent
        .iter()
        .copied()
        .filter(|f| side.contains(f))
        .collect();
    let constraints = adjacent
        .iter()
        .map(|&f| {
            if side.contains(&f) {
                normals[f].clone()
            } else {
                -normals[f].clone()
            }
        })
        .collect();
    Ok((lifted, constraints))
}

fn strictly_inside(constraints: &[Vec3], d: &Vec3) -> bool {
    constraints.iter().all(|a| a.dot(d).is_positive())
}

/// Extreme rays of the closed cone `{x : a·x ≥ 0 for all a}`, each on two
/// constraint planes.
fn extreme_rays(constraints: &[Vec3]) -> Vec<Vec3> {
    let lines: BTreeSet<Vec3> = constraints.iter().map(|a| a.primitive()).collect();
    let lines: Vec<Vec3> = lines.into_iter().collect();
    let mut rays = BTreeSet::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let r = lines[i].cross(&lines[j]);
            if r.is_zero() {
                continue;
            }
            for ray in [r.clone(), -r] {
                if lines.iter().all(|a| !a.dot(&ray).is_negative()) {
                    rays.insert(ray.primitive());
                }
            }
        }
    }
    rays.into_iter().collect()
}

/// Smallest rounding of the float direction `v` that lies strictly inside.
fn round_inside(v: [f64; 3], constraints: &[Vec3]) -> Option<Vec3> {
    let len = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    if !(len.is_finite() && len > 0.0) {
        return None;
    }
    let unit = v.map(|x| x / len);
    [4.0, 16.0, 256.0, 4096.0, 65536.0, 16777216.0, 1e12]
        .into_iter()
        .filter_map(|m| Vec3::from_f64_scaled(unit, m))
        .find(|d| strictly_inside(constraints, d))
        .map(|d| d.primitive())
}

fn unit_sum<'a>(vs: impl IntoIterator<Item = &'a Vec3>) -> [f64; 3] {
    let mut sum = [0.0f64; 3];
    for v in vs {
        let n = v.to_f64();
        let len = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
        for i in 0..3 {
            sum[i] += n[i] / len;
        }
    }
    sum
}

/// A vector strictly inside the cone `{x : a·x > 0 for all a}`: the centre of
/// its extreme rays, rounded to small integers when possible, else their
/// exact sum.
fn cone_search(constraints: &[Vec3]) -> Option<Vec3> {
    let rays = extreme_rays(constraints);
    if rays.is_empty() {
        return None;
    }
    if let Some(d) = round_inside(unit_sum(&rays), constraints) {
        return Some(d);
    }
    let sum = rays.iter().fold(Vec3::zero(), |acc, r| &acc + r);
    strictly_inside(constraints, &sum).then(|| sum.primitive())
}

/// Direction `d` for expanding `cycle` with the faces in `side` moving.
///
/// The first candidate is the rounded sum of unit outward normals of the
/// lifted faces along the cycle. If it fails the exact check, the extreme
/// rays of the feasible cone are enumerated instead. A direction lying in
/// some face plane is nudged towards that face's required side until it lies
/// in none.
pub fn find_direction(
    p: &Polyhedron,
    cycle: &[usize],
    side: &BTreeSet<usize>,
) -> Result<ExpansionDirection, RealizeError> {
    let fs = FaceStructure::from_cycles(p.faces.clone())?;
    let normals = p.outward_normals();
    let (lifted, constraints) = cycle_constraints(&fs, &normals, cycle, side)?;

    let mut found = round_inside(unit_sum(lifted.iter().map(|&f| &normals[f])), &constraints)
        .map(|d| (d, DirectionMethod::NormalSum));
    if found.is_none() {
        found = cone_search(&constraints).map(|d| (d, DirectionMethod::ConeSearch));
    }
    let (mut d, method) = found.ok_or(RealizeError::InfeasibleDirection)?;

    let flat = |d: &Vec3| -> Vec<usize> {
        (0..normals.len())
            .filter(|&f| normals[f].dot(d).is_zero())
            .collect()
    };
    let parallel = flat(&d);
    let perturbed = !parallel.is_empty();
    if perturbed {
        let nudge = parallel.iter().fold(Vec3::zero(), |acc, &f| {
            if side.contains(&f) {
                &acc + &normals[f]
            } else {
                &acc - &normals[f]
            }
        });
        let mut candidates = vec![nudge];
        candidates
            .extend([[1, 0, 0], [0, 1, 0], [0, 0, 1]].map(|e| Vec3::from_ints(e[0], e[1], e[2])));
        let mut fixed = None;
        'search: for u in candidates.iter().filter(|u| !u.is_zero()) {
            let mut t = d.max_abs() / u.max_abs() / rat(2);
            for _ in 0..64 {
                let trial = &d + &u.scale(&t);
                if strictly_inside(&constraints, &trial) && flat(&trial).is_empty() {
                    fixed = Some(trial.primitive());
                    break 'search;
                }
                t /= rat(2);
            }
        }
        d = fixed.ok_or(RealizeError::InfeasibleDirection)?;
        debug!("direction nudged off {} face planes", parallel.len());
    }
    debug!("expansion direction {d} via {method:?}");
    Ok(ExpansionDirection {
        d,
        side: side.clone(),
        method,
        perturbed,
    })
}

/// Stretches every edge of `cycle` into a parallelogram along `scale·d`.
///
/// Vertices of lifted faces move by `scale·d`; each cycle vertex stays and gets
/// a moved copy, appended with id `n + j` for `cycle[j]`. The `|cycle|` new
/// faces are appended after the existing ones.
pub fn expand_zone(
    p: &Polyhedron,
    cycle: &[usize],
    dir: &ExpansionDirection,
    scale: &Rational,
) -> Result<Polyhedron, RealizeError> {
    if !scale.is_positive() {
        return Err(RealizeError::NonPositiveScale(scale.clone()));
    }
    let fs = FaceStructure::from_cycles(p.faces.clone())?;
    let normals: Vec<Vec3> = (0..p.face_count()).map(|f| p.face_normal(f)).collect();
    let (_, constraints) = cycle_constraints(&fs, &normals, cycle, &dir.side)?;
    if !strictly_inside(&constraints, &dir.d) || normals.iter().any(|n| n.dot(&dir.d).is_zero()) {
        return Err(RealizeError::InvalidDirection(Box::new(dir.d.clone())));
    }

    let n = p.vertex_count();
    let mut copy_of = vec![usize::MAX; n];
    for (j, &c) in cycle.iter().enumerate() {
        copy_of[c] = n + j;
    }
    let mut lifted = vec![false; n];
    let mut fixed = vec![false; n];
    for (f, face) in p.faces.iter().enumerate() {
        let marks = if dir.side.contains(&f) {
            &mut lifted
        } else {
            &mut fixed
        };
        for &v in face {
            marks[v] = true;
        }
    }
    if (0..n).any(|v| lifted[v] && fixed[v] && copy_of[v] == usize::MAX) {
        return Err(RealizeError::InvalidSide);
    }

    let shift = dir.d.scale(scale);
    let mut vertices = p.vertices.clone();
    for v in 0..n {
        if lifted[v] && copy_of[v] == usize::MAX {
            vertices[v] = &vertices[v] + &shift;
        }
    }
    for &c in cycle {
        vertices.push(&p.vertices[c] + &shift);
    }
    let mut faces: Vec<Vec<usize>> = p
        .faces
        .iter()
        .enumerate()
        .map(|(f, face)| {
            if dir.side.contains(&f) {
                face.iter()
                    .map(|&v| {
                        if copy_of[v] != usize::MAX {
                            copy_of[v]
                        } else {
                            v
                        }
                    })
                    .collect()
            } else {
                face.clone()
            }
        })
        .collect();
    let k = cycle.len();
    for j in 0..k {
        let (a, b) = (cycle[j], cycle[(j + 1) % k]);
        // the new face runs along (a, b) against the fixed face next to it
        let fixed_runs_forward = fs
            .face_of_dart(a, b)
            .is_some_and(|f| !dir.side.contains(&f));
        if fixed_runs_forward {
            faces.push(vec![b, a, copy_of[a], copy_of[b]]);
        } else {
            faces.push(vec![a, b, copy_of[b], copy_of[a]]);
        }
    }
    Ok(Polyhedron::new(vertices, faces))
}

/// Per-step record of a realization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expansion {
    /// Faces of the added zone (the length of the zone cycle).
    pub zone_length: usize,
    pub faces_before: usize,
    pub faces_after: usize,
    pub direction: Vec3,
    pub method: DirectionMethod,
    pub perturbed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    /// Vertex ids and face ids match the input graph and its traced faces.
    pub polyhedron: Polyhedron,
    /// Expansions in the order they were applied.
    pub expansions: Vec<Expansion>,
    /// The three cube edge vectors followed by one vector per expansion.
    pub generators: Vec<Vec3>,
    /// For each vertex, which generators sum to its position.
    pub subsets: Vec<Vec<bool>>,
}

/// Edge lengths used during realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaleSchedule {
    pub cube: Rational,
    /// Scale of each expansion in replay order; missing entries use `default`.
    pub zones: Vec<Rational>,
    pub default: Rational,
}

impl ScaleSchedule {
    pub fn uniform(scale: Rational) -> Self {
        ScaleSchedule {
            cube: scale.clone(),
            zones: Vec::new(),
            default: scale,
        }
    }

    fn zone(&self, i: usize) -> &Rational {
        self.zones.get(i).unwrap_or(&self.default)
    }
}

impl Default for ScaleSchedule {
    fn default() -> Self {
        ScaleSchedule::uniform(Rational::one())
    }
}

pub fn realize(
    g: &RotationGraph,
    cert: &ZoneCertificate,
    trace: &ReductionTrace,
    scale: &Rational,
) -> Result<Polyhedron, RealizeError> {
    Ok(realize_with(g, cert, trace, &ScaleSchedule::uniform(scale.clone()))?.polyhedron)
}

/// One expansion, worked out on the graphs alone.
struct Plan {
    cycle: Vec<usize>,
    side: BTreeSet<usize>,
    /// vertex of the graph before deletion -> vertex of the expanded polyhedron
    relabel: Vec<usize>,
    faces: Vec<Vec<usize>>,
}

/// Replays `trace` in reverse from a cube, expanding one zone cycle per step.
///
/// Directions are first chosen step by step with [`find_direction`]. An
/// early choice can leave a later cone empty; in that case the generator
/// signs are read off the graph, a numeric realization of them is relaxed,
/// and the expansions are redone along those vectors.
pub fn realize_with(
    g: &RotationGraph,
    cert: &ZoneCertificate,
    trace: &ReductionTrace,
    scales: &ScaleSchedule,
) -> Result<Realization, RealizeError> {
    for s in std::iter::once(&scales.cube)
        .chain(&scales.zones)
        .chain([&scales.default])
    {
        if !s.is_positive() {
            return Err(RealizeError::NonPositiveScale(s.clone()));
        }
    }

    let mut graphs = vec![g.clone()];
    let mut faces = vec![cert.faces.clone()];
    for step in &trace.steps {
        let (next, fs) = replay(graphs.last().unwrap(), step)
            .map_err(|e| RealizeError::TraceMismatch(e.to_string()))?;
        graphs.push(next);
        faces.push(fs);
    }
    let base = graphs.last().unwrap();
    if *base != trace.base {
        return Err(RealizeError::TraceMismatch("base graph differs".into()));
    }
    let masks = cube_labeling(base).ok_or(RealizeError::BaseNotCube)?;

    let mut subsets: Vec<Vec<bool>> = masks
        .iter()
        .map(|&m| (0..3).map(|b| m & (1 << b) != 0).collect())
        .collect();
    let mut plans = Vec::new();
    for (i, step) in trace.steps.iter().enumerate().rev() {
        let (pre, pre_faces, post_faces) = (&graphs[i], &faces[i], &faces[i + 1]);
        let zone_edges: BTreeSet<(usize, usize)> = step
            .deleted_zone
            .zone_edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        let lifted_vertex = lifted_component(pre, &zone_edges)?;

        let correspondence = face_correspondence(pre_faces, step, post_faces);
        let mut side = BTreeSet::new();
        let mut covered = vec![false; post_faces.face_count()];
        for (f, image) in correspondence.iter().enumerate() {
            if let Some(image) = *image {
                covered[image] = true;
                if lifted_vertex[pre_faces.faces[f][0]] {
                    side.insert(image);
                }
            }
        }
        if covered.iter().any(|c| !c) {
            return Err(RealizeError::TraceMismatch(format!(
                "faces after step {i} do not match the faces before it"
            )));
        }

        let cycle = step.cycle_vertices();
        let n_post = graphs[i + 1].vertex_count();
        let mut position_on_cycle = vec![usize::MAX; n_post];
        for (j, &c) in cycle.iter().enumerate() {
            position_on_cycle[c] = j;
        }
        let relabel: Vec<usize> = (0..pre.vertex_count())
            .map(|x| {
                let y = step.vertex_map[x];
                if lifted_vertex[x] && position_on_cycle[y] != usize::MAX {
                    n_post + position_on_cycle[y]
                } else {
                    y
                }
            })
            .collect();
        let used: BTreeSet<usize> = relabel.iter().copied().collect();
        if used.len() != pre.vertex_count() || used.len() != n_post + cycle.len() {
            return Err(RealizeError::TraceMismatch(format!(
                "zone cycle of step {i} does not split into two sides"
            )));
        }
        subsets = (0..pre.vertex_count())
            .map(|x| {
                let mut s = subsets[step.vertex_map[x]].clone();
                s.push(lifted_vertex[x]);
                s
            })
            .collect();
        plans.push(Plan {
            cycle,
            side,
            relabel,
            faces: pre_faces.faces.clone(),
        });
    }

    let cube = cube_base(&scales.cube)?;
    let mut start = Polyhedron::new(
        masks.iter().map(|&m| cube.vertices[m].clone()).collect(),
        faces.last().unwrap().faces.clone(),
    );
    start.orient_outward();
    let axes: Vec<Vec3> = (0..3).map(|b| cube.vertices[1 << b].clone()).collect();

    let (polyhedron, expansions, generators) = match expand_all(&start, &plans, scales, None) {
        Err(RealizeError::InfeasibleDirection) => {
            debug!("greedy directions ran into an empty cone; relaxing generator signs");
            let hints = relaxed_generators(&cert.faces.faces, &subsets)?;
            expand_all(&start, &plans, scales, Some(&hints))?
        }
        other => other?,
    };
    Ok(Realization {
        polyhedron,
        expansions,
        generators: axes.into_iter().chain(generators).collect(),
        subsets,
    })
}

/// Integer directions for the expansions, in replay order.
fn relaxed_generators(
    faces: &[Vec<usize>],
    subsets: &[Vec<bool>],
) -> Result<Vec<Vec3>, RealizeError> {
    let chi = Chirotope::from_subsets(faces, subsets).map_err(RealizeError::TraceMismatch)?;
    let g = relax(&chi, spectral_guess(faces, subsets)).ok_or(RealizeError::InfeasibleDirection)?;
    let ints = round_realization(&chi, &g).ok_or(RealizeError::InfeasibleDirection)?;
    Ok(ints[3..]
        .iter()
        .map(|v| Vec3::from_ints(v[0], v[1], v[2]).primitive())
        .collect())
}

fn expand_all(
    start: &Polyhedron,
    plans: &[Plan],
    scales: &ScaleSchedule,
    hints: Option<&[Vec3]>,
) -> Result<(Polyhedron, Vec<Expansion>, Vec<Vec3>), RealizeError> {
    let mut current = start.clone();
    let mut expansions = Vec::new();
    let mut generators = Vec::new();
    for (step, plan) in plans.iter().enumerate() {
        let scale = scales.zone(step);
        let dir = match hints {
            None => find_direction(&current, &plan.cycle, &plan.side)?,
            Some(h) => ExpansionDirection {
                d: h[step].clone(),
                side: plan.side.clone(),
                method: DirectionMethod::Relaxation,
                perturbed: false,
            },
        };
        let expanded = expand_zone(&current, &plan.cycle, &dir, scale)?;

        let mut inverse = vec![0; expanded.vertex_count()];
        for (x, &v) in plan.relabel.iter().enumerate() {
            inverse[v] = x;
        }
        let produced: BTreeMap<Vec<usize>, bool> = expanded
            .faces
            .iter()
            .map(|f| canonical_cycle(&f.iter().map(|&v| inverse[v]).collect::<Vec<_>>()))
            .collect();
        let expected: Vec<(Vec<usize>, bool)> =
            plan.faces.iter().map(|f| canonical_cycle(f)).collect();
        let same_faces = produced.len() == expected.len()
            && expected.iter().all(|(c, _)| produced.contains_key(c));
        // the traced faces are consistently oriented, so one comparison
        // decides whether all of them run outward
        let mut faces = plan.faces.clone();
        if same_faces && produced[&expected[0].0] != expected[0].1 {
            faces.iter_mut().for_each(|f| f.reverse());
        }
        let next = Polyhedron::new(
            plan.relabel
                .iter()
                .map(|&v| expanded.vertices[v].clone())
                .collect(),
            faces,
        );
        if !same_faces {
            return Err(RealizeError::TraceMismatch(format!(
                "expansion {step} does not reproduce the graph before deletion"
            )));
        }

        generators.push(dir.d.scale(scale));
        expansions.push(Expansion {
            zone_length: plan.cycle.len(),
            faces_before: current.face_count(),
            faces_after: next.face_count(),
            direction: dir.d.clone(),
            method: dir.method,
            perturbed: dir.perturbed,
        });
        current = next;
    }
    Ok((current, expansions, generators))
}

/// Splits the vertices of `g` into the two sides of a zone band by removing
/// its zone edges; `true` marks the side not containing vertex 0.
fn lifted_component(
    g: &RotationGraph,
    zone_edges: &BTreeSet<(usize, usize)>,
) -> Result<Vec<bool>, RealizeError> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for &u in g.rotation(v) {
            if !seen[u] && !zone_edges.contains(&(u.min(v), u.max(v))) {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    let lifted: Vec<bool> = seen.iter().map(|s| !s).collect();
    for &(u, v) in zone_edges {
        if lifted[u] == lifted[v] {
            return Err(RealizeError::TraceMismatch(format!(
                "zone edge ({u}, {v}) does not cross the band"
            )));
        }
    }
    Ok(lifted)
}

/// Rotation and reflection invariant form of a vertex cycle, and whether
/// the cycle had to be reversed to reach it.
fn canonical_cycle(c: &[usize]) -> (Vec<usize>, bool) {
    let k = c.len();
    let start = (0..k).min_by_key(|&i| c[i]).unwrap_or(0);
    let forward: Vec<usize> = (0..k).map(|j| c[(start + j) % k]).collect();
    let backward: Vec<usize> = (0..k).map(|j| c[(start + k - j) % k]).collect();
    if backward < forward {
        (backward, true)
    } else {
        (forward, false)
    }
}

/// Positions recomputed from the generator subsets; used to cross-check a
/// realization.
pub fn positions_from_subsets(r: &Realization) -> Vec<Vec3> {
    r.subsets
        .iter()
        .map(|s| {
            s.iter()
                .zip(&r.generators)
                .filter(|(b, _)| **b)
                .fold(Vec3::zero(), |acc, (_, g)| &acc + g)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::ratio;
    use crate::plane_graph::fixtures;
    use crate::polyhedron::verify_zonohedron;

    #[test]
    fn cube_base_scales() {
        let c = cube_base(&rat(1)).unwrap();
        assert_eq!(c.vertex_count(), 8);
        for v in &c.vertices {
            assert!(v.0.iter().all(|x| x.is_zero() || x.is_one()));
        }
        assert!(verify_zonohedron(&c).is_clean());
        let c2 = cube_base(&rat(2)).unwrap();
        assert_eq!(c2.vertices[1], Vec3::from_ints(2, 0, 0));
        assert_eq!(c2.vertices[2], Vec3::from_ints(0, 2, 0));
        assert_eq!(c2.vertices[4], Vec3::from_ints(0, 0, 2));
        assert!(matches!(
            cube_base(&rat(0)),
            Err(RealizeError::NonPositiveScale(_))
        ));
        assert!(verify_zonohedron(&cube_base(&ratio(3, 7)).unwrap()).is_clean());
    }

    #[test]
    fn cube_labeling_matches_hypercube() {
        let masks = cube_labeling(&fixtures::cube()).unwrap();
        assert_eq!(masks[0], 0);
        assert!(cube_labeling(&fixtures::pseudo_double_wheel()).is_none());
    }

    /// The hexagonal equator of the unit cube separating the faces with
    /// normals +x, +y, +z from the rest.
    fn equator() -> (Polyhedron, Vec<usize>, BTreeSet<usize>, BTreeSet<usize>) {
        let c = cube_base(&rat(1)).unwrap();
        let cycle = vec![1, 3, 2, 6, 4, 5];
        let normals = c.outward_normals();
        let plus: BTreeSet<usize> = (0..6)
            .filter(|&f| normals[f].0.iter().all(|x| !x.is_negative()))
            .collect();
        let minus: BTreeSet<usize> = (0..6).filter(|f| !plus.contains(f)).collect();
        (c, cycle, plus, minus)
    }

    #[test]
    fn equator_directions() {
        let (c, cycle, plus, minus) = equator();
        assert_eq!(plus.len(), 3);
        let d = find_direction(&c, &cycle, &plus).unwrap();
        assert_eq!(d.d, Vec3::from_ints(1, 1, 1));
        assert_eq!(d.method, DirectionMethod::NormalSum);
        assert!(!d.perturbed);
        let d = find_direction(&c, &cycle, &minus).unwrap();
        assert_eq!(d.d, Vec3::from_ints(-1, -1, -1));
    }

    #[test]
    fn expanding_the_equator() {
        let (c, cycle, plus, _) = equator();
        let dir = find_direction(&c, &cycle, &plus).unwrap();
        let p = expand_zone(&c, &cycle, &dir, &rat(1)).unwrap();
        assert_eq!(
            (p.vertex_count(), p.face_count(), p.edge_count()),
            (14, 12, 24)
        );
        assert!(verify_zonohedron(&p).is_clean());
        let mut coords = p.vertices.clone();
        coords.sort();
        let oracle = crate::oracle::build_zonotope(&crate::oracle::GeneratorSet::from_ints(&[
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 1, 1],
        ]))
        .unwrap();
        let mut expected = oracle.vertices.clone();
        expected.sort();
        assert_eq!(coords, expected);
    }

    #[test]
    fn invalid_directions_are_refused() {
        let (c, cycle, plus, _) = equator();
        let bad = ExpansionDirection {
            d: Vec3::from_ints(1, 1, 0),
            side: plus,
            method: DirectionMethod::NormalSum,
            perturbed: false,
        };
        assert!(matches!(
            expand_zone(&c, &cycle, &bad, &rat(1)),
            Err(RealizeError::InvalidDirection(_))
        ));
    }

    #[test]
    fn cone_search_finds_interior_points() {
        let cons = vec![
            Vec3::from_ints(1, 0, 0),
            Vec3::from_ints(0, 1, 0),
            Vec3::from_ints(0, 0, 1),
            Vec3::from_ints(1, -1, 5),
        ];
        let d = cone_search(&cons).unwrap();
        assert!(strictly_inside(&cons, &d));
        assert!(cone_search(&[Vec3::from_ints(1, 0, 0), Vec3::from_ints(-1, 0, 0)]).is_none());
    }

    #[test]
    fn side_must_split_the_cycle() {
        let (c, cycle, _, _) = equator();
        let all: BTreeSet<usize> = (0..6).collect();
        assert_eq!(
            find_direction(&c, &cycle, &all),
            Err(RealizeError::InvalidSide)
        );
    }
}
