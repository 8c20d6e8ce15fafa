//! The sign pattern of a zonohedral graph, and integer generators that
//! reproduce it.
//!
//! Every face is spanned by two zones and lies on one side of each other
//! zone's cycle; those sides fix the orientation of every generator triple.
//! The realizer falls back on this when adding zones one by one gets stuck.
//!
//! cargo run --example chirotope_relaxation -- [m] [seed]

use zonohedra::chirotope::{relax, round_realization, spectral_guess, Chirotope};
use zonohedra::{
    build_zonotope, graph_of, realize_with, recognize, reduce_to_cube, GeneratorSet, ScaleSchedule,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let m: usize = args.next().map_or(Ok(12), |a| a.parse())?;
    let seed: u64 = args.next().map_or(Ok(5), |a| a.parse())?;

    let g = graph_of(&build_zonotope(&GeneratorSet::random(m, seed)?)?)?;
    let cert = recognize(&g).map_err(|r| r.reason.as_str())?;
    let r = realize_with(
        &g,
        &cert,
        &reduce_to_cube(&g, &cert)?,
        &ScaleSchedule::default(),
    )?;
    let faces = &r.polyhedron.faces;

    let chi = Chirotope::from_subsets(faces, &r.subsets)?;
    println!("{m} zones, {} sign triples", chi.len());
    let start = spectral_guess(faces, &r.subsets).ok_or("no spectral start")?;
    let relaxed = relax(&chi, Some(start)).ok_or("relaxation did not converge")?;
    let ints = round_realization(&chi, &relaxed).ok_or("rounding lost a sign")?;
    for (i, v) in ints.iter().enumerate() {
        println!("  g{i} = {v:?}");
    }
    println!("signs reproduced: {}", chi.is_realized_by(&ints));
    Ok(())
}
