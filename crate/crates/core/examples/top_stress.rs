//! Builds the top coinvariant stress of a complex from its top cycles and
//! checks that it is annihilated by the Stanley–Reisner ideal and by
//! the elementary symmetric polynomials.

use costress::homology;
use costress::inverse;
use costress::poly::{DualPolynomial, Polynomial};
use costress::{datasets, Field, SimplicialComplex};

fn report(name: &str, cx: &SimplicialComplex) -> costress::Result<()> {
    let cycles = homology::top_cycle_space(cx, Field::Rationals)?;
    println!("{name}: {} top cycle(s)", cycles.basis.len());
    let extra = Polynomial::elementary_sequence(cx.n_vertices(), cx.dim() as usize + 1);
    for cycle in &cycles.basis {
        let f: DualPolynomial = inverse::top_stress(cx, cycle)?;
        let bad = inverse::annihilation_failures(cx, &extra, &f, Field::Rationals)?;
        println!("  degree {} with {} terms, {} non-annihilating generators", f.degree, f.len(), bad.len());
    }
    Ok(())
}

fn main() -> costress::Result<()> {
    report("Γ", &datasets::gamma())?;
    report("Λ", &datasets::pinched_torus())?;
    report("Σ", &datasets::rp2())?;

    // For the boundary of a simplex the stress is the Vandermonde determinant.
    let cx = SimplicialComplex::simplex_boundary(3);
    let eps = homology::top_cycle_space(&cx, Field::Rationals)?.orientation.expect("a sphere is orientable");
    let f = inverse::top_stress(&cx, &eps)?;
    println!("∂Δ_2 stress: {f}");
    println!("Vandermonde V(3): {}", inverse::vandermonde(&[0, 1, 2], 3));
    Ok(())
}
