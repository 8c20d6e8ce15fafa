//! Orientation signs of generator triples, read off a zonohedral graph.
//!
//! The zonotope of generators `g_0..g_{m-1}` has, for every pair `i < j`, two
//! faces with normals `±(g_i × g_j)`. Which side of zone `k` such a face lies
//! on is the sign of `det(g_i, g_j, g_k)`. Labelling every vertex with the set
//! of generators it sums recovers all these signs from the graph alone, and a
//! set of vectors with the same signs realizes the graph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `det(g_i, g_j, g_k)` signs, normalized so that the triple `(0, 1, 2)` is positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chirotope {
    m: usize,
    signs: Vec<i8>,
}

impl Chirotope {
    /// `faces` are 4-cycles over vertices labelled by `subsets`; consecutive
    /// vertices differ in exactly one generator.
    pub fn from_subsets(faces: &[Vec<usize>], subsets: &[Vec<bool>]) -> Result<Self, String> {
        let labels = label_faces(faces, subsets)?;
        let m = subsets[0].len();
        let mut chi = Chirotope {
            m,
            signs: vec![0; m * m * m],
        };
        for (f, &(i, j, base)) in labels.iter().enumerate() {
            for k in (0..m).filter(|&k| k != i && k != j) {
                let s = if subsets[base][k] { 1 } else { -1 };
                chi.assign(i, j, k, s)
                    .map_err(|_| format!("face {f} contradicts another face"))?;
            }
        }
        for (i, j, k) in chi.triples() {
            if chi.sign(i, j, k) == 0 {
                return Err(format!("no face determines the triple ({i}, {j}, {k})"));
            }
        }
        if chi.sign(0, 1, 2) < 0 {
            for s in &mut chi.signs {
                *s = -*s;
            }
        }
        Ok(chi)
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    pub fn sign(&self, i: usize, j: usize, k: usize) -> i8 {
        self.signs[(i * self.m + j) * self.m + k]
    }

    fn assign(&mut self, i: usize, j: usize, k: usize, s: i8) -> Result<(), ()> {
        let m = self.m;
        for (a, b, c, t) in [
            (i, j, k, s),
            (j, k, i, s),
            (k, i, j, s),
            (j, i, k, -s),
            (i, k, j, -s),
            (k, j, i, -s),
        ] {
            let slot = &mut self.signs[(a * m + b) * m + c];
            if *slot != 0 && *slot != t {
                return Err(());
            }
            *slot = t;
        }
        Ok(())
    }

    /// Exact check on integer vectors.
    pub fn is_realized_by(&self, g: &[[i64; 3]]) -> bool {
        g.len() == self.m
            && self.triples().all(|(i, j, k)| {
                let d = det_i128(g[i], g[j], g[k]);
                d.signum() as i8 == self.sign(i, j, k)
            })
    }

    fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let m = self.m;
        (0..m).flat_map(move |i| (i + 1..m).flat_map(move |j| (j + 1..m).map(move |k| (i, j, k))))
    }
}

/// For every face, the generators `(i, j)` along its edges, in cycle order
/// from its base vertex, and that base vertex (the one summing the fewest
/// generators).
fn label_faces(
    faces: &[Vec<usize>],
    subsets: &[Vec<bool>],
) -> Result<Vec<(usize, usize, usize)>, String> {
    let m = subsets.first().map_or(0, |s| s.len());
    if m < 3 {
        return Err("fewer than three generators".into());
    }
    let size = |v: usize| subsets[v].iter().filter(|&&b| b).count();
    let single = |a: usize, b: usize| -> Result<usize, String> {
        let diff: Vec<usize> = (0..m).filter(|&k| subsets[a][k] != subsets[b][k]).collect();
        match diff[..] {
            [k] if !subsets[a][k] => Ok(k),
            _ => Err(format!("vertices {a} and {b} are not one generator apart")),
        }
    };
    faces
        .iter()
        .enumerate()
        .map(|(f, face)| {
            if face.len() != 4 {
                return Err(format!("face {f} is not a quadrilateral"));
            }
            let p = (0..4).min_by_key(|&p| size(face[p])).unwrap();
            let base = face[p];
            let i = single(base, face[(p + 1) % 4])?;
            let j = single(base, face[(p + 3) % 4])?;
            let far = face[(p + 2) % 4];
            if size(far) != size(base) + 2 || !subsets[far][i] || !subsets[far][j] {
                return Err(format!("face {f} is not a parallelogram of two generators"));
            }
            Ok((i, j, base))
        })
        .collect()
}

fn det_i128(a: [i64; 3], b: [i64; 3], c: [i64; 3]) -> i128 {
    let [a, b, c] = [a, b, c].map(|v| v.map(i128::from));
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn normalize(v: &mut [f64; 3]) {
    let len = dot(*v, *v).sqrt();
    if len > 0.0 {
        v.iter_mut().for_each(|x| *x /= len);
    }
}

/// (margin, step) pairs, tried in turn on the same vectors: a margin larger
/// than the configuration admits keeps pushing triples back and forth.
const SCHEDULE: [(f64, f64); 4] = [(1e-3, 0.02), (1e-5, 2e-3), (1e-7, 2e-4), (0.0, 2e-5)];
const EPOCHS: usize = 1000;
const RESTARTS: u64 = 3;
const SPECTRAL_ROUNDS: usize = 6000;

/// Unit vectors with the signs of `chi`, the first three mapped onto the unit
/// axes.
///
/// Perceptron-style relaxation: every triple whose determinant has the wrong
/// sign, or is below a small margin, pushes its vectors along the gradient of
/// the determinant. `start` is tried first, then random starts.
pub fn relax(chi: &Chirotope, start: Option<Vec<[f64; 3]>>) -> Option<Vec<[f64; 3]>> {
    let m = chi.len();
    let triples: Vec<(usize, usize, usize, f64)> = chi
        .triples()
        .map(|(i, j, k)| (i, j, k, f64::from(chi.sign(i, j, k))))
        .collect();
    let satisfied = |g: &[[f64; 3]]| {
        triples
            .iter()
            .all(|&(i, j, k, s)| s * dot(g[i], cross(g[j], g[k])) > 0.0)
    };
    let random = (0..RESTARTS).map(|seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..m)
            .map(|_| [0.0; 3].map(|_: f64| rng.gen_range(-1.0..1.0)))
            .collect::<Vec<_>>()
    });
    for mut g in start.into_iter().chain(random) {
        g.iter_mut().for_each(normalize);
        // a start that is mostly the mirror image gets reflected
        let agreement: f64 = triples
            .iter()
            .map(|&(i, j, k, s)| s * dot(g[i], cross(g[j], g[k])).signum())
            .sum();
        if agreement < 0.0 {
            g.iter_mut().for_each(|v| v[2] = -v[2]);
        }
        for (margin, rate) in SCHEDULE {
            for _ in 0..EPOCHS {
                if satisfied(&g) {
                    return to_axes(&g);
                }
                for &(i, j, k, s) in &triples {
                    if s * dot(g[i], cross(g[j], g[k])) > margin {
                        continue;
                    }
                    let grads = [cross(g[j], g[k]), cross(g[k], g[i]), cross(g[i], g[j])];
                    for (v, grad) in [i, j, k].into_iter().zip(grads) {
                        for c in 0..3 {
                            g[v][c] += rate * s * grad[c];
                        }
                        normalize(&mut g[v]);
                    }
                }
            }
        }
        if satisfied(&g) {
            return to_axes(&g);
        }
    }
    None
}

/// Applies the linear map sending the first three vectors to the unit axes;
/// it preserves every sign since `det(g_0, g_1, g_2) > 0`.
fn to_axes(g: &[[f64; 3]]) -> Option<Vec<[f64; 3]>> {
    let (a, b, c) = (g[0], g[1], g[2]);
    let det = dot(a, cross(b, c));
    if det <= 0.0 {
        return None;
    }
    // rows of the inverse of the matrix with columns a, b, c
    let rows = [cross(b, c), cross(c, a), cross(a, b)].map(|r| r.map(|x| x / det));
    let mut out: Vec<[f64; 3]> = g.iter().map(|v| rows.map(|r| dot(r, *v))).collect();
    out.iter_mut().for_each(normalize);
    for (i, v) in out.iter_mut().take(3).enumerate() {
        *v = [0.0; 3];
        v[i] = 1.0;
    }
    Some(out)
}

/// Starting vectors from the shape of the dual graph.
///
/// The three lowest non-constant Laplacian eigenvectors of the face adjacency
/// graph place the faces roughly on a sphere, like the Gauss map of a
/// zonohedron. The faces of zone `k` then lie near a great circle whose
/// normal approximates generator `k`.
pub fn spectral_guess(faces: &[Vec<usize>], subsets: &[Vec<bool>]) -> Option<Vec<[f64; 3]>> {
    let labels = label_faces(faces, subsets).ok()?;
    let m = subsets.first()?.len();
    let nf = faces.len();
    let mut by_edge: std::collections::HashMap<(usize, usize), Vec<usize>> =
        std::collections::HashMap::new();
    for (f, face) in faces.iter().enumerate() {
        for i in 0..face.len() {
            let (a, b) = (face[i], face[(i + 1) % face.len()]);
            by_edge.entry((a.min(b), a.max(b))).or_default().push(f);
        }
    }
    let mut adj = vec![Vec::new(); nf];
    for fs in by_edge.values() {
        if let [f, g] = fs[..] {
            adj[f].push(g);
            adj[g].push(f);
        }
    }
    let shift = adj.iter().map(Vec::len).max()? as f64 + 1.0;

    // subspace iteration on shift·I - L, orthogonal to the constant vector
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut basis: Vec<Vec<f64>> = (0..3)
        .map(|_| (0..nf).map(|_| rng.gen_range(-1.0..1.0)).collect())
        .collect();
    for _ in 0..SPECTRAL_ROUNDS {
        basis = basis
            .iter()
            .map(|x| {
                (0..nf)
                    .map(|f| {
                        (shift - adj[f].len() as f64) * x[f]
                            + adj[f].iter().map(|&g| x[g]).sum::<f64>()
                    })
                    .collect()
            })
            .collect();
        orthonormalize(&mut basis);
    }
    let points: Vec<[f64; 3]> = (0..nf)
        .map(|f| {
            let mut p = [basis[0][f], basis[1][f], basis[2][f]];
            normalize(&mut p);
            p
        })
        .collect();

    let mut g = vec![[0.0; 3]; m];
    for (k, gk) in g.iter_mut().enumerate() {
        let mut cov = [[0.0; 3]; 3];
        for (f, &(i, j, _)) in labels.iter().enumerate() {
            if i == k || j == k {
                for r in 0..3 {
                    for c in 0..3 {
                        cov[r][c] += points[f][r] * points[f][c];
                    }
                }
            }
        }
        *gk = smallest_eigenvector(cov);
        // the faces containing k in their base vertex lie on the positive side
        let agreement: f64 = labels
            .iter()
            .enumerate()
            .filter(|(_, &(i, j, _))| i != k && j != k)
            .map(|(f, &(_, _, base))| if subsets[base][k] { 1.0 } else { -1.0 } * dot(points[f], *gk))
            .sum();
        if agreement < 0.0 {
            *gk = gk.map(|x| -x);
        }
    }
    Some(g)
}

fn orthonormalize(basis: &mut [Vec<f64>]) {
    let n = basis[0].len() as f64;
    for a in 0..basis.len() {
        let mean = basis[a].iter().sum::<f64>() / n;
        basis[a].iter_mut().for_each(|x| *x -= mean);
        for b in 0..a {
            let proj: f64 = basis[a].iter().zip(&basis[b]).map(|(x, y)| x * y).sum();
            let (head, tail) = basis.split_at_mut(a);
            tail[0]
                .iter_mut()
                .zip(&head[b])
                .for_each(|(x, y)| *x -= proj * y);
        }
        let len = basis[a].iter().map(|x| x * x).sum::<f64>().sqrt();
        if len > 0.0 {
            basis[a].iter_mut().for_each(|x| *x /= len);
        }
    }
}

/// Eigenvector of the smallest eigenvalue of a symmetric positive
/// semidefinite 3×3 matrix.
fn smallest_eigenvector(c: [[f64; 3]; 3]) -> [f64; 3] {
    let trace = c[0][0] + c[1][1] + c[2][2];
    let mut v = [0.3, 0.5, 0.8];
    for _ in 0..200 {
        let mut w = [0.0; 3];
        for r in 0..3 {
            w[r] = trace * v[r] - (0..3).map(|k| c[r][k] * v[k]).sum::<f64>();
        }
        normalize(&mut w);
        v = w;
    }
    v
}

/// Integer vectors with exactly the signs of `chi`, obtained by rounding `g`
/// at increasing precision.
pub fn round_realization(chi: &Chirotope, g: &[[f64; 3]]) -> Option<Vec<[i64; 3]>> {
    [1i64 << 8, 1 << 12, 1 << 16, 1 << 20, 1 << 26, 1 << 30]
        .into_iter()
        .map(|scale| {
            g.iter()
                .map(|v| v.map(|c| (c * scale as f64).round() as i64))
                .collect::<Vec<_>>()
        })
        .find(|r| chi.is_realized_by(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subsets_of(gs: &crate::oracle::GeneratorSet) -> (Vec<Vec<usize>>, Vec<Vec<bool>>) {
        // vertex labels straight from the oracle's coordinates: each vertex is
        // the sum of the generators whose coefficient is one
        let p = crate::oracle::build_zonotope(gs).unwrap();
        let ints: Vec<[i64; 3]> = gs
            .generators
            .iter()
            .map(|g| [0, 1, 2].map(|c| g.0[c].to_integer().try_into().unwrap()))
            .collect();
        let m = ints.len();
        let subsets = p
            .vertices
            .iter()
            .map(|v| {
                let target: [i64; 3] = [0, 1, 2].map(|c| v.0[c].to_integer().try_into().unwrap());
                (0..1u64 << m)
                    .map(|mask| (0..m).map(|k| mask >> k & 1 == 1).collect::<Vec<_>>())
                    .find(|s| {
                        (0..3).all(|c| {
                            (0..m).filter(|&k| s[k]).map(|k| ints[k][c]).sum::<i64>() == target[c]
                        })
                    })
                    .unwrap()
            })
            .collect();
        (p.faces, subsets)
    }

    #[test]
    fn signs_match_the_generators() {
        let gs = crate::oracle::GeneratorSet::from_ints(&[
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 1, 1],
            [2, -1, 3],
        ]);
        let (faces, subsets) = subsets_of(&gs);
        let chi = Chirotope::from_subsets(&faces, &subsets).unwrap();
        let ints = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [2, -1, 3]];
        assert!(chi.is_realized_by(&ints));
        assert_eq!(chi.sign(0, 1, 2), 1);
        assert_eq!(chi.sign(1, 0, 2), -1);
    }

    #[test]
    fn relaxation_realizes_the_signs() {
        let gs = crate::oracle::GeneratorSet::from_ints(&[
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 1, 1],
            [2, -1, 3],
            [-3, 4, 1],
            [5, 2, -2],
        ]);
        let (faces, subsets) = subsets_of(&gs);
        let chi = Chirotope::from_subsets(&faces, &subsets).unwrap();
        let g = relax(&chi, None).unwrap();
        let r = round_realization(&chi, &g).unwrap();
        assert!(chi.is_realized_by(&r));
    }

    #[test]
    fn inconsistent_labels_are_refused() {
        let faces = vec![vec![0, 1, 2, 3]];
        let subsets = vec![
            vec![false, false, false],
            vec![true, false, false],
            vec![true, true, true],
            vec![false, true, false],
        ];
        assert!(Chirotope::from_subsets(&faces, &subsets).is_err());
    }
}
