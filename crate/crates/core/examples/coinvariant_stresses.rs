//! Dimensions and generator degrees of the coinvariant stress spaces, next
//! to the Hilbert series `h(q)·[d+1]_q!` of the coinvariant quotient.

use costress::inverse;
use costress::poly::Polynomial;
use costress::{datasets, Field, SimplicialComplex};

fn profile(name: &str, cx: &SimplicialComplex, extra: &[Polynomial], field: Field) -> costress::Result<()> {
    let p = inverse::dual_module_generators(cx, extra, None, field)?;
    println!("{name}");
    println!("  perp dims:         {:?}", p.perp_dims);
    println!("  generator counts:  {:?}", p.generator_counts);
    println!("  generator degrees: {:?}", p.generator_degrees());
    Ok(())
}

fn main() -> costress::Result<()> {
    let q = Field::Rationals;
    for (name, cx) in [("Σ", datasets::rp2()), ("Λ", datasets::pinched_torus()), ("Γ", datasets::gamma())] {
        let e = Polynomial::elementary_sequence(cx.n_vertices(), 3);
        profile(&format!("{name} with e_1, e_2, e_3 over q"), &cx, &e, q)?;
        println!("  h(q)·[3]_q!:       {:?}", inverse::coinvariant_series(&cx));
    }
    let sigma = datasets::rp2();
    let e = Polynomial::elementary_sequence(sigma.n_vertices(), 3);
    profile("Σ with e_1, e_2, e_3 over F2", &sigma, &e, Field::prime(2)?)?;

    let gamma = datasets::gamma();
    profile("Γ with a linear system of parameters", &gamma, &datasets::gamma_lsop(), q)?;
    let top = inverse::perp_basis(&gamma, &datasets::gamma_lsop(), 3, q)?;
    println!("  its dual generator: {}", top[0]);
    Ok(())
}
