//! Zone counts against the vertex count: m <= 1 + sqrt(n), with equality in
//! m = (1 + sqrt(4n - 7)) / 2 for zonotopes in general position.
//!
//! cargo run --example stats_bounds -- [max_m]

use zonohedra::{build_zonotope, graph_of, recognize, GeneratorSet, StatsReport};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_m: usize = std::env::args().nth(1).map_or(Ok(12), |a| a.parse())?;
    println!(
        "{:>3} {:>6} {:>6} {:>9} {:>9} {:>8}",
        "m", "n", "F", "m/sqrt n", "1+sqrt n", "generic"
    );
    for m in 3..=max_m {
        let g = graph_of(&build_zonotope(&GeneratorSet::random(m, m as u64)?)?)?;
        let cert = recognize(&g).map_err(|r| r.reason.as_str())?;
        let s = StatsReport::new(&g, &cert);
        assert!(s.within_bound && s.euler_consistent() && s.lengths_consistent());
        println!(
            "{:>3} {:>6} {:>6} {:>9.3} {:>9.3} {:>8}",
            s.m, s.n, s.f, s.ratio, s.zone_bound, s.generic
        );
    }
    Ok(())
}
