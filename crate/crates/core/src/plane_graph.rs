//! Combinatorial plane graphs given as rotation systems.
//!
//! A [`RotationGraph`] lists, for every vertex, its neighbours in
//! counterclockwise order. Faces are traced with a fixed rule: after the
//! directed edge `(u, v)` comes `(v, w)` where `w` is the cyclic successor of
//! `u` in the rotation of `v`. With counterclockwise rotations this walks each
//! face with the face on the right-hand side.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("field \"adj\" has {len} entries but \"n\" is {n}")]
    LengthMismatch { n: usize, len: usize },
    #[error("adj[{vertex}][{index}] = {neighbor} is out of range")]
    VertexOutOfRange {
        vertex: usize,
        index: usize,
        neighbor: usize,
    },
    #[error("adj[{vertex}] contains a self-loop")]
    SelfLoop { vertex: usize },
    #[error("adj[{vertex}] lists neighbour {neighbor} more than once")]
    DuplicateNeighbor { vertex: usize, neighbor: usize },
    #[error("asymmetric adjacency: adj[{from}] lists {to} but adj[{to}] does not list {from}")]
    Asymmetric { from: usize, to: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("directed edge ({0}, {1}) appears in more than one face")]
    RepeatedDart(usize, usize),
    #[error("edge ({0}, {1}) is not incident to exactly two face sides")]
    OpenEdge(usize, usize),
}

/// Wire form of a rotation graph: `{"n": 8, "adj": [[1, 3, 4], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub adj: Vec<Vec<usize>>,
}

/// Simple undirected graph with a counterclockwise neighbour order at each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct RotationGraph {
    rotations: Vec<Vec<usize>>,
    // dart k runs from `tail[k]` to `head[k]`; darts of vertex v occupy
    // offsets[v]..offsets[v + 1] in rotation order.
    offsets: Vec<usize>,
    tail: Vec<usize>,
    head: Vec<usize>,
    twin: Vec<usize>,
}

impl TryFrom<GraphJson> for RotationGraph {
    type Error = GraphError;

    fn try_from(value: GraphJson) -> Result<Self, GraphError> {
        if value.adj.len() != value.n {
            return Err(GraphError::LengthMismatch {
                n: value.n,
                len: value.adj.len(),
            });
        }
        RotationGraph::new(value.adj)
    }
}

impl From<RotationGraph> for GraphJson {
    fn from(g: RotationGraph) -> Self {
        GraphJson {
            n: g.vertex_count(),
            adj: g.rotations,
        }
    }
}

impl RotationGraph {
    /// Validates a rotation system: ids in range, no self-loops, no repeated
    /// neighbours, symmetric adjacency.
    pub fn new(rotations: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = rotations.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut tail = Vec::new();
        let mut head = Vec::new();
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        offsets.push(0);
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &u) in rot.iter().enumerate() {
                if u >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: v,
                        index: i,
                        neighbor: u,
                    });
                }
                if u == v {
                    return Err(GraphError::SelfLoop { vertex: v });
                }
                if index.insert((v, u), tail.len()).is_some() {
                    return Err(GraphError::DuplicateNeighbor {
                        vertex: v,
                        neighbor: u,
                    });
                }
                tail.push(v);
                head.push(u);
            }
            offsets.push(tail.len());
        }
        let mut twin = vec![0; tail.len()];
        for k in 0..tail.len() {
            match index.get(&(head[k], tail[k])) {
                Some(&t) => twin[k] = t,
                None => {
                    return Err(GraphError::Asymmetric {
                        from: tail[k],
                        to: head[k],
                    })
                }
            }
        }
        Ok(RotationGraph {
            rotations,
            offsets,
            tail,
            head,
            twin,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.tail.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.tail.len()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.rotations.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rotations.get(u).is_some_and(|r| r.contains(&v))
    }

    /// Undirected edges as `(min, max)` pairs in dart order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.dart_count())
            .filter(|&k| self.tail[k] < self.head[k])
            .map(|k| (self.tail[k], self.head[k]))
            .collect()
    }

    pub(crate) fn dart_tail(&self, k: usize) -> usize {
        self.tail[k]
    }

    pub(crate) fn dart_head(&self, k: usize) -> usize {
        self.head[k]
    }

    pub(crate) fn dart_twin(&self, k: usize) -> usize {
        self.twin[k]
    }

    pub(crate) fn first_dart(&self, v: usize) -> usize {
        self.offsets[v]
    }

    /// Dart that follows `k` in the rotation of its tail.
    pub(crate) fn rotate_next(&self, k: usize) -> usize {
        let v = self.tail[k];
        let start = self.offsets[v];
        start + (k - start + 1) % (self.offsets[v + 1] - start)
    }

    /// Dart that precedes `k` in the rotation of its tail.
    pub(crate) fn rotate_prev(&self, k: usize) -> usize {
        let v = self.tail[k];
        let start = self.offsets[v];
        let d = self.offsets[v + 1] - start;
        start + (k - start + d - 1) % d
    }

    /// Successor of dart `k` along its face.
    pub(crate) fn face_next(&self, k: usize) -> usize {
        self.rotate_next(self.twin[k])
    }

    /// The same graph with every rotation reversed.
    pub fn mirror(&self) -> RotationGraph {
        let rotations = self
            .rotations
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        RotationGraph::new(rotations).expect("mirror of a valid rotation system is valid")
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        n == 0 || component_sizes(self, &vec![false; n]).len() == 1
    }
}

/// Faces traced from a rotation system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceStructure {
    /// Each face as a cyclic vertex sequence.
    pub faces: Vec<Vec<usize>>,
    /// Undirected edge `(min, max)` to the faces on its two sides:
    /// `[face of (min, max), face of (max, min)]`.
    pub edge_to_faces: BTreeMap<(usize, usize), [usize; 2]>,
    dart_face: HashMap<(usize, usize), usize>,
}

impl FaceStructure {
    /// Builds a face structure from explicit face cycles. Every directed edge
    /// may appear at most once, and every edge must have both of its sides covered.
    pub fn from_cycles(faces: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let mut dart_face = HashMap::new();
        for (f, cycle) in faces.iter().enumerate() {
            for i in 0..cycle.len() {
                let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                if dart_face.insert((u, v), f).is_some() {
                    return Err(GraphError::RepeatedDart(u, v));
                }
            }
        }
        let mut edge_to_faces = BTreeMap::new();
        for (&(u, v), &f) in &dart_face {
            let Some(&g) = dart_face.get(&(v, u)) else {
                return Err(GraphError::OpenEdge(u.min(v), u.max(v)));
            };
            if u < v {
                edge_to_faces.insert((u, v), [f, g]);
            }
        }
        Ok(FaceStructure {
            faces,
            edge_to_faces,
            dart_face,
        })
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_to_faces.len()
    }

    /// Face containing the directed edge `(u, v)`.
    pub fn face_of_dart(&self, u: usize, v: usize) -> Option<usize> {
        self.dart_face.get(&(u, v)).copied()
    }

    /// The two faces incident to the undirected edge `{u, v}`.
    pub fn faces_of_edge(&self, u: usize, v: usize) -> Option<[usize; 2]> {
        self.edge_to_faces.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn total_length(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }
}

/// Traces every face orbit of the rotation system. Covers each directed edge exactly once.
pub fn extract_faces(g: &RotationGraph) -> Result<FaceStructure, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let mut seen = vec![false; g.dart_count()];
    let mut faces = Vec::new();
    for start in 0..g.dart_count() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            cycle.push(g.dart_tail(k));
            k = g.face_next(k);
        }
        debug_assert_eq!(k, start);
        faces.push(cycle);
    }
    FaceStructure::from_cycles(faces)
}

/// Genus-zero verdict from Euler's formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PlanarityVerdict {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

impl PlanarityVerdict {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }

    pub fn is_planar(&self) -> bool {
        self.euler_characteristic() == 2
    }
}

pub fn check_planarity(g: &RotationGraph, faces: &FaceStructure) -> PlanarityVerdict {
    PlanarityVerdict {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        faces: faces.face_count(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeparationKind {
    Disconnected,
    CutVertex,
    CutPair,
}

/// A vertex set whose removal disconnects the graph or leaves a single vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityWitness {
    pub kind: SeparationKind,
    pub vertices: Vec<usize>,
}

impl ConnectivityWitness {
    /// Independent re-check by traversal.
    pub fn separates(&self, g: &RotationGraph) -> bool {
        let n = g.vertex_count();
        let mut removed = vec![false; n];
        for &v in &self.vertices {
            if v >= n {
                return false;
            }
            removed[v] = true;
        }
        let remaining = n - removed.iter().filter(|&&r| r).count();
        remaining <= 1 || component_sizes(g, &removed).len() > 1
    }
}

/// Sizes of the connected components of `g` with `removed` vertices deleted.
pub(crate) fn component_sizes(g: &RotationGraph, removed: &[bool]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut seen = removed.to_vec();
    let mut sizes = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        let mut size = 0;
        while let Some(v) = queue.pop_front() {
            size += 1;
            for &u in g.rotation(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        sizes.push(size);
    }
    sizes
}

/// Articulation points of `g` minus the `removed` vertex, by iterative DFS
/// low-link. Assumes the remaining graph is connected.
fn articulation_points(g: &RotationGraph, removed: Option<usize>) -> Vec<usize> {
    let n = g.vertex_count();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let Some(root) = (0..n).find(|&v| Some(v) != removed) else {
        return Vec::new();
    };
    // stack of (vertex, parent, next rotation index)
    let mut stack: Vec<(usize, usize, usize)> = vec![(root, UNSEEN, 0)];
    disc[root] = 0;
    low[root] = 0;
    let mut time = 1;
    let mut root_children = 0;
    while let Some(&mut (v, parent, ref mut i)) = stack.last_mut() {
        if *i < g.degree(v) {
            let u = g.rotation(v)[*i];
            *i += 1;
            if Some(u) == removed || u == parent {
                continue;
            }
            if disc[u] == UNSEEN {
                disc[u] = time;
                low[u] = time;
                time += 1;
                if v == root {
                    root_children += 1;
                }
                stack.push((u, v, 0));
            } else {
                low[v] = low[v].min(disc[u]);
            }
        } else {
            stack.pop();
            if parent != UNSEEN {
                low[parent] = low[parent].min(low[v]);
                if parent != root && low[v] >= disc[parent] {
                    is_cut[parent] = true;
                }
            }
        }
    }
    if root_children > 1 {
        is_cut[root] = true;
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

/// Checks that no vertex and no vertex pair separates `g`. Runs one
/// articulation-point pass per removed vertex, `O(V·(V+E))` overall.
pub fn check_three_connected(g: &RotationGraph) -> Result<(), ConnectivityWitness> {
    let n = g.vertex_count();
    let witness = |kind, vertices| ConnectivityWitness { kind, vertices };
    if n <= 1 || !g.is_connected() {
        return Err(witness(SeparationKind::Disconnected, Vec::new()));
    }
    if let Some(&v) = articulation_points(g, None).first() {
        return Err(witness(SeparationKind::CutVertex, vec![v]));
    }
    if n == 2 {
        return Err(witness(SeparationKind::CutVertex, vec![0]));
    }
    if n == 3 {
        return Err(witness(SeparationKind::CutPair, vec![0, 1]));
    }

    const CANDIDATE_LIMIT: usize = 64;
    let mut first = None;
    let mut tried = 0;
    let mut removed = vec![false; n];
    for v in 0..n {
        for a in articulation_points(g, Some(v)) {
            if a < v {
                continue;
            }
            let pair = vec![v, a];
            first.get_or_insert_with(|| pair.clone());
            // Prefer a separation that leaves no isolated vertex behind.
            removed[v] = true;
            removed[a] = true;
            let smallest = component_sizes(g, &removed).into_iter().min().unwrap_or(0);
            removed[v] = false;
            removed[a] = false;
            if smallest >= 2 {
                return Err(witness(SeparationKind::CutPair, pair));
            }
            tried += 1;
            if tried >= CANDIDATE_LIMIT {
                return Err(witness(SeparationKind::CutPair, first.unwrap()));
            }
        }
    }
    if let Some(pair) = first {
        return Err(witness(SeparationKind::CutPair, pair));
    }
    debug_assert!(g.min_degree() >= 3);
    Ok(())
}

/// Whether two rotation systems are isomorphic as embedded graphs, allowing a
/// global reflection.
pub fn embedding_isomorphic(a: &RotationGraph, b: &RotationGraph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = a.rotations().iter().map(Vec::len).collect();
    let mut db: Vec<usize> = b.rotations().iter().map(Vec::len).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    if n == 0 {
        return true;
    }
    if a.dart_count() == 0 {
        return true;
    }
    let start = a.first_dart(0);
    for target in 0..b.dart_count() {
        if b.degree(b.dart_tail(target)) != a.degree(0) {
            continue;
        }
        for mirrored in [false, true] {
            if try_align(a, b, start, target, mirrored) {
                return true;
            }
        }
    }
    false
}

fn try_align(
    a: &RotationGraph,
    b: &RotationGraph,
    start_a: usize,
    start_b: usize,
    mirrored: bool,
) -> bool {
    let n = a.vertex_count();
    let mut map = vec![usize::MAX; n];
    let mut inverse = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    map[a.dart_tail(start_a)] = b.dart_tail(start_b);
    inverse[b.dart_tail(start_b)] = a.dart_tail(start_a);
    queue.push_back((start_a, start_b));
    let step_b = |k: usize| {
        if mirrored {
            b.rotate_prev(k)
        } else {
            b.rotate_next(k)
        }
    };
    while let Some((ka, kb)) = queue.pop_front() {
        let va = a.dart_tail(ka);
        let vb = b.dart_tail(kb);
        if a.degree(va) != b.degree(vb) {
            return false;
        }
        let (mut xa, mut xb) = (ka, kb);
        for _ in 0..a.degree(va) {
            let (ua, ub) = (a.dart_head(xa), b.dart_head(xb));
            if map[ua] == usize::MAX {
                if inverse[ub] != usize::MAX {
                    return false;
                }
                map[ua] = ub;
                inverse[ub] = ua;
                queue.push_back((a.dart_twin(xa), b.dart_twin(xb)));
            } else if map[ua] != ub {
                return false;
            }
            xa = a.rotate_next(xa);
            xb = step_b(xb);
        }
    }
    map.iter().all(|&m| m != usize::MAX)
}
