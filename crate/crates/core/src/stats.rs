//! Counts and zone statistics of an accepted zonohedral graph.

use std::collections::BTreeMap;

use num_integer::Roots;
use serde::{Deserialize, Serialize};

use crate::plane_graph::RotationGraph;
use crate::recognize::ZoneCertificate;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsReport {
    pub n: usize,
    pub e: usize,
    pub f: usize,
    pub m: usize,
    /// zone length -> number of zones of that length
    pub zone_length_histogram: BTreeMap<usize, usize>,
    pub ratio: f64,
    pub max_zone_length: usize,
    /// `1 + sqrt(n)`, the upper bound on `m`
    pub zone_bound: f64,
    pub within_bound: bool,
    /// Whether `m = (1 + sqrt(4n - 7)) / 2` holds exactly, as it does when
    /// every pair of zones crosses exactly twice.
    pub generic: bool,
}

impl StatsReport {
    pub fn new(g: &RotationGraph, cert: &ZoneCertificate) -> Self {
        let n = g.vertex_count();
        let e = g.edge_count();
        let f = cert.faces.face_count();
        let m = cert.zone_count;
        let mut zone_length_histogram = BTreeMap::new();
        for &len in &cert.zone_lengths {
            *zone_length_histogram.entry(len).or_insert(0) += 1;
        }
        StatsReport {
            n,
            e,
            f,
            m,
            zone_length_histogram,
            ratio: m as f64 / (n as f64).sqrt(),
            max_zone_length: cert.zone_lengths.iter().copied().max().unwrap_or(0),
            zone_bound: 1.0 + (n as f64).sqrt(),
            within_bound: zone_bound_holds(n, m),
            generic: generic_zone_count(n) == Some(m),
        }
    }

    pub fn euler_consistent(&self) -> bool {
        self.n + self.f == self.e + 2
    }

    /// Every face lies in two zones.
    pub fn lengths_consistent(&self) -> bool {
        self.zone_length_histogram
            .iter()
            .map(|(len, count)| len * count)
            .sum::<usize>()
            == 2 * self.f
    }
}

/// `m ≤ 1 + √n`, decided exactly as `(m - 1)² ≤ n`.
pub fn zone_bound_holds(n: usize, m: usize) -> bool {
    m <= 1 || (m - 1) * (m - 1) <= n
}

/// `(1 + √(4n − 7)) / 2` when it is an integer.
pub fn generic_zone_count(n: usize) -> Option<usize> {
    let d = (4 * n).checked_sub(7)?;
    let r = d.sqrt();
    (r * r == d && r % 2 == 1).then(|| r.div_ceil(2))
}
