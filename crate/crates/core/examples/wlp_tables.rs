//! Weak Lefschetz verdicts for monomial artinian reductions
//! `k[Δ] / (x_i^c)` with `L = x_1 + … + x_n`.

use costress::artinian::{self, ArtinianSpec};
use costress::{datasets, Field, SimplicialComplex};

fn run(name: &str, cx: SimplicialComplex, cap: u32, field: Field) -> costress::Result<()> {
    let spec = ArtinianSpec::uniform(cx.clone(), cap, field)?;
    let report = artinian::lefschetz_verdict(&spec, 1)?;
    println!("{name}, caps {cap}: wlp {}", report.verdict_wlp);
    print!("{}", report.quotient_table());
    for f in report.wlp_failures() {
        println!("  ×L: A_{} → A_{} has rank {} of {} ({:?})", f.from, f.to, f.rank, f.full_rank_target, f.kind);
    }
    let cert = artinian::guaranteed_failure(&cx, field)?;
    if cert.applies {
        println!("  failure forced by f_(d-1) = {} ≥ f_d = {} with top betti {}", cert.f_ridges, cert.f_facets, cert.top_betti);
    }
    println!();
    Ok(())
}

fn main() -> costress::Result<()> {
    let q = Field::Rationals;
    for cap in 3..=5 {
        run("Γ", datasets::gamma(), cap, q)?;
    }
    run("Σ over q", datasets::rp2(), 4, q)?;
    run("Σ over F2", datasets::rp2(), 4, Field::prime(2)?)?;
    // the complete intersections (x1x2x3, x_i^3) and (x1x2x3x4, x_i^4)
    run("∂Δ_2", SimplicialComplex::simplex_boundary(3), 3, q)?;
    run("∂Δ_3", SimplicialComplex::simplex_boundary(4), 4, q)?;
    Ok(())
}
