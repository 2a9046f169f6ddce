//! The three worked complexes shipped in `data/`.

use num_rational::BigRational;

use crate::complex::SimplicialComplex;
use crate::poly::Polynomial;

pub const RP2_JSON: &str = include_str!("../data/rp2.json");
pub const PINCHED_TORUS_JSON: &str = include_str!("../data/pinched_torus.json");
pub const GAMMA_JSON: &str = include_str!("../data/gamma.json");

/// Ten-triangle real projective plane on vertices 1..6.
pub fn rp2() -> SimplicialComplex {
    SimplicialComplex::from_json_str(RP2_JSON).expect("bundled rp2.json")
}

/// Pinched torus on vertices 1..9.
pub fn pinched_torus() -> SimplicialComplex {
    SimplicialComplex::from_json_str(PINCHED_TORUS_JSON).expect("bundled pinched_torus.json")
}

/// Ten-vertex 2-sphere on vertices 0..9; gluing 0 to 1 gives the pinched torus.
pub fn gamma() -> SimplicialComplex {
    SimplicialComplex::from_json_str(GAMMA_JSON).expect("bundled gamma.json")
}

fn halves(coeffs: [i64; 10]) -> Polynomial {
    let c: Vec<BigRational> = coeffs.iter().map(|&x| BigRational::new(x.into(), 2.into())).collect();
    Polynomial::linear_form(&c)
}

/// A linear system of parameters for `I_Γ` from a convex realization of Γ,
/// in the variables `x_0..x_9`.
pub fn gamma_lsop() -> Vec<Polynomial> {
    vec![
        halves([0, 0, 1, 1, -1, -1, -1, -1, 1, 1]),
        halves([-2, 2, 1, 1, 1, 1, -1, -1, -1, -1]),
        halves([0, 0, 1, -1, -1, 1, -1, 1, 1, -1]),
    ]
}

/// A second linear system of parameters for `I_Γ` that starts with
/// `L = x_0 + … + x_9`.
pub fn gamma_lsop_with_sum() -> Vec<Polynomial> {
    vec![
        halves([2; 10]),
        halves([2, 2, 2, -2, 2, -2, -2, 2, -2, 2]),
        halves([0, -2, 2, 0, 0, 2, -2, -2, 2, -2]),
    ]
}
