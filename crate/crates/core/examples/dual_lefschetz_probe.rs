//! Ranks of `ℓ ∘ : perp_k → perp_{k-1}` on the coinvariant stresses of Γ for
//! a few linear forms. This is exploratory data; no property is claimed.

use costress::inverse;
use costress::poly::Polynomial;
use costress::{datasets, Field};
use num_bigint::BigInt;
use num_rational::BigRational;

fn form(c: &[i64]) -> Polynomial {
    Polynomial::linear_form(&c.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect::<Vec<_>>())
}

fn main() -> costress::Result<()> {
    let gamma = datasets::gamma();
    let extra = Polynomial::elementary_sequence(gamma.n_vertices(), 3);
    let profile = inverse::dual_module_generators(&gamma, &extra, None, Field::Rationals)?;
    println!("perp dims: {:?}", profile.perp_dims);
    let forms: [(&str, Vec<i64>); 3] = [
        ("x_0", (0..10).map(|i| (i == 0) as i64).collect()),
        ("x_0 + 2x_1 + … + 10x_9", (1..=10).collect()),
        ("alternating ±1", (0..10).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect()),
    ];
    for (name, c) in forms {
        let ranks = inverse::dual_lefschetz_ranks(&gamma, &extra, &form(&c), 1, None, Field::Rationals)?;
        println!("ℓ = {name}: ranks for k = 1..6: {ranks:?}");
    }
    Ok(())
}
