//! Combinatorics and homology of the bundled complexes.
//!
//!     cargo run --example analyze_complex [path.json]

use costress::homology;
use costress::{datasets, Field, SimplicialComplex};

fn describe(name: &str, cx: &SimplicialComplex) -> costress::Result<()> {
    let v = cx.fhg_vectors();
    let pm = cx.classify_pseudomanifold();
    println!("{name}: {} vertices, dimension {}", cx.n_vertices(), cx.dim());
    println!("  f = {:?}  h = {:?}  g = {:?}", v.f, v.h, v.g);
    println!("  pseudomanifold without boundary: {}", pm.is_pseudomanifold && pm.is_without_boundary);
    println!("  minimal nonfaces: {}", cx.minimal_nonfaces().len());
    for (label, field) in [("q", Field::Rationals), ("F2", Field::prime(2)?)] {
        let betti = homology::reduced_betti(cx, field)?;
        let reisner = homology::reisner_check(cx, field)?;
        println!(
            "  over {label}: reduced betti {:?}, cohen-macaulay {}, homology sphere {}",
            betti.nonnegative(),
            reisner.is_cohen_macaulay,
            reisner.is_homology_sphere
        );
    }
    Ok(())
}

fn main() -> costress::Result<()> {
    if let Some(path) = std::env::args().nth(1) {
        let cx = SimplicialComplex::from_json_str(&std::fs::read_to_string(&path)?)?;
        return describe(&path, &cx);
    }
    describe("Σ (six-vertex RP²)", &datasets::rp2())?;
    describe("Λ (pinched torus)", &datasets::pinched_torus())?;
    describe("Γ (ten-vertex 2-sphere)", &datasets::gamma())?;
    let link = datasets::pinched_torus().link(&[0])?;
    println!("link of vertex 0 in Λ: facets {:?}", link.facets_labeled());
    Ok(())
}
