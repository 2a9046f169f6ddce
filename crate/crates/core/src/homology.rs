//! Simplicial chains, boundary maps and reduced homology over a field.
//!
//! Sign convention: faces are sorted ascending and
//! `∂σ = Σ_j (-1)^j (σ without its j-th smallest vertex)`.
//! In degree 0 the boundary is the augmentation onto the empty face, so all
//! Betti numbers here are reduced.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{self, ExactMatrix, Field};

/// A simplicial chain: field coefficients on faces of one dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub degree: isize,
    pub field: Field,
    pub coefficients: BTreeMap<Face, BigRational>,
}

impl Chain {
    pub fn boundary(&self) -> Result<Chain> {
        let mut out: BTreeMap<Face, BigRational> = BTreeMap::new();
        for (face, c) in &self.coefficients {
            for j in 0..face.len() {
                let sub: Face = face.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &v)| v).collect();
                let term = if j % 2 == 0 { c.clone() } else { -c.clone() };
                *out.entry(sub).or_insert_with(BigRational::zero) += term;
            }
        }
        let mut coefficients = BTreeMap::new();
        for (f, c) in out {
            let c = self.field.reduce(&c)?;
            if !c.is_zero() {
                coefficients.insert(f, c);
            }
        }
        Ok(Chain { degree: self.degree - 1, field: self.field, coefficients })
    }

    pub fn is_cycle(&self) -> Result<bool> {
        Ok(self.boundary()?.coefficients.is_empty())
    }
}

/// Reduced Betti numbers `β̃_{-1}, …, β̃_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiProfile {
    pub field: Field,
    betti: Vec<usize>,
}

impl BettiProfile {
    pub fn get(&self, i: isize) -> usize {
        usize::try_from(i + 1).ok().and_then(|k| self.betti.get(k).copied()).unwrap_or(0)
    }

    /// `β̃_{-1}, …, β̃_d`.
    pub fn all(&self) -> &[usize] {
        &self.betti
    }

    /// `β̃_0, …, β̃_d`.
    pub fn nonnegative(&self) -> &[usize] {
        &self.betti[1..]
    }

    pub fn top_dim(&self) -> isize {
        self.betti.len() as isize - 2
    }
}

/// Matrix of `∂_i : C_i → C_{i-1}` in the canonical face orders.
pub fn boundary_matrix(cx: &SimplicialComplex, i: isize, field: Field) -> Result<ExactMatrix> {
    let d = cx.dim();
    if i < 0 || i > d {
        return Err(Error::DegreeOutOfRange { degree: i, max: d });
    }
    let rows = cx.faces(i - 1);
    let cols = cx.faces(i);
    let one = BigRational::one();
    let mut m = ExactMatrix::zeros(rows.len(), cols.len());
    for (c, face) in cols.iter().enumerate() {
        for j in 0..face.len() {
            let sub: Face = face.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v).collect();
            let r = cx.face_index(&sub).expect("faces are closed under subsets");
            let sign = if j % 2 == 0 { one.clone() } else { -one.clone() };
            m.set(r, c, field.reduce(&sign)?);
        }
    }
    Ok(m)
}

pub fn reduced_betti(cx: &SimplicialComplex, field: Field) -> Result<BettiProfile> {
    let d = cx.dim();
    // ranks[i] = rank ∂_i for i = 0..=d, plus ∂_{d+1} = 0
    let mut ranks = vec![0usize; (d + 2) as usize];
    for i in 0..=d {
        ranks[i as usize] = linalg::rank(&boundary_matrix(cx, i, field)?, field)?;
    }
    let betti = (-1..=d)
        .map(|i| {
            let f = cx.faces(i).len();
            let out = if i >= 0 { ranks[i as usize] } else { 0 };
            let inc = ranks[(i + 1) as usize];
            f - out - inc
        })
        .collect();
    Ok(BettiProfile { field, betti })
}

/// `β̃_d` for `d = dim Δ`, which only needs `rank ∂_d`.
pub fn top_betti(cx: &SimplicialComplex, field: Field) -> Result<usize> {
    let d = cx.dim();
    if d < 0 {
        return Ok(1);
    }
    Ok(cx.faces(d).len() - linalg::rank(&boundary_matrix(cx, d, field)?, field)?)
}

/// Basis of `ker ∂_d` and, for a pseudomanifold without boundary with a
/// one-dimensional top cycle space, that cycle as the orientation.
#[derive(Debug, Clone)]
pub struct TopCycles {
    pub basis: Vec<Chain>,
    pub orientation: Option<Chain>,
}

pub fn top_cycle_space(cx: &SimplicialComplex, field: Field) -> Result<TopCycles> {
    let d = cx.dim();
    if d < 0 {
        return Ok(TopCycles { basis: Vec::new(), orientation: None });
    }
    let faces = cx.faces(d);
    let kernel = linalg::kernel_basis(&boundary_matrix(cx, d, field)?, field)?;
    let basis: Vec<Chain> = kernel
        .into_iter()
        .map(|v| Chain {
            degree: d,
            field,
            coefficients: faces.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()).collect(),
        })
        .collect();
    let orientation = if basis.len() == 1 && cx.classify_pseudomanifold().is_without_boundary {
        Some(basis[0].clone())
    } else {
        None
    };
    Ok(TopCycles { basis, orientation })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReisnerReport {
    pub is_cohen_macaulay: bool,
    pub is_homology_sphere: bool,
}

/// Cohen–Macaulayness by Reisner's criterion and the homology-sphere
/// condition, both checked on the links of every face (including `∅`).
pub fn reisner_check(cx: &SimplicialComplex, field: Field) -> Result<ReisnerReport> {
    let faces: Vec<&Face> = cx.all_faces().collect();
    let per_face: Vec<Result<(bool, bool)>> = faces
        .par_iter()
        .map(|sigma| {
            let lk = cx.link(sigma)?;
            let top = lk.dim();
            let betti = reduced_betti(&lk, field)?;
            let below_vanish = (-1..top).all(|i| betti.get(i) == 0);
            let sphere = below_vanish && betti.get(top) == 1;
            Ok((below_vanish, sphere))
        })
        .collect();
    let mut report = ReisnerReport { is_cohen_macaulay: true, is_homology_sphere: true };
    for r in per_face {
        let (cm, sphere) = r?;
        report.is_cohen_macaulay &= cm;
        report.is_homology_sphere &= sphere;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datasets;
    use num_traits::Signed;

    fn q() -> Field {
        Field::Rationals
    }

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets(&[vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap()
    }

    #[test]
    fn triangle_boundary_matrix() {
        let m = boundary_matrix(&triangle(), 1, q()).unwrap();
        let expected = ExactMatrix::from_int_rows(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
        assert_eq!(m, expected);
        assert_eq!(linalg::rank(&m, q()).unwrap(), 2);
        assert!(boundary_matrix(&triangle(), 2, q()).is_err());
        assert!(boundary_matrix(&triangle(), -1, q()).is_err());
    }

    #[test]
    fn boundary_squares_to_zero() {
        for cx in [datasets::rp2(), datasets::gamma(), datasets::pinched_torus(), triangle()] {
            for i in 1..=cx.dim() {
                let a = boundary_matrix(&cx, i - 1, q()).unwrap();
                let b = boundary_matrix(&cx, i, q()).unwrap();
                assert_eq!(a.mul(&b).nnz(), 0);
            }
        }
    }

    #[test]
    fn gamma_top_boundary() {
        let m = boundary_matrix(&datasets::gamma(), 2, q()).unwrap();
        assert_eq!((m.rows(), m.cols()), (24, 16));
        assert_eq!(linalg::rank(&m, q()).unwrap(), 15);
    }

    #[test]
    fn betti_numbers() {
        let s = datasets::rp2();
        assert_eq!(reduced_betti(&s, q()).unwrap().nonnegative(), &[0, 0, 0]);
        assert_eq!(reduced_betti(&s, f2()).unwrap().nonnegative(), &[0, 1, 1]);
        assert_eq!(reduced_betti(&datasets::gamma(), q()).unwrap().nonnegative(), &[0, 0, 1]);
        assert_eq!(reduced_betti(&datasets::pinched_torus(), q()).unwrap().nonnegative(), &[0, 1, 1]);
        assert_eq!(reduced_betti(&triangle(), q()).unwrap().all(), &[0, 0, 1]);
        let empty_face = SimplicialComplex::from_indexed(vec![0], vec![vec![]]);
        assert_eq!(reduced_betti(&empty_face, q()).unwrap().all(), &[1]);
    }

    #[test]
    fn euler_characteristic_matches_face_counts() {
        for cx in [datasets::rp2(), datasets::gamma(), datasets::pinched_torus(), triangle()] {
            for field in [q(), f2(), Field::prime(3).unwrap()] {
                let b = reduced_betti(&cx, field).unwrap();
                let fv = cx.fhg_vectors();
                let chi_b: i64 = (-1..=cx.dim()).map(|i| if i.rem_euclid(2) == 0 { 1 } else { -1 } * b.get(i) as i64).sum();
                let chi_f: i64 = (0..=cx.dim()).map(|i| if i % 2 == 0 { 1 } else { -1 } * fv.f(i)).sum();
                assert_eq!(chi_b, chi_f - 1);
            }
        }
    }

    #[test]
    fn top_cycles() {
        let t = top_cycle_space(&triangle(), q()).unwrap();
        assert_eq!(t.basis.len(), 1);
        let coeffs: Vec<BigRational> = t.basis[0].coefficients.values().cloned().collect();
        let one = BigRational::one();
        assert_eq!(coeffs, vec![one.clone(), -one.clone(), one]);
        assert!(t.orientation.is_some());

        assert!(top_cycle_space(&datasets::rp2(), q()).unwrap().basis.is_empty());
        let s2 = top_cycle_space(&datasets::rp2(), f2()).unwrap();
        assert_eq!(s2.basis.len(), 1);
        assert!(s2.orientation.is_some());

        let g = top_cycle_space(&datasets::gamma(), q()).unwrap();
        let eps = g.orientation.unwrap();
        assert_eq!(eps.coefficients.len(), 16);
        assert!(eps.coefficients.values().all(|c| c.abs() == BigRational::one()));
        assert!(eps.coefficients.values().next().unwrap().is_one());
        assert!(eps.is_cycle().unwrap());
    }

    #[test]
    fn orientability_matches_kernel_dimension() {
        for cx in [datasets::rp2(), datasets::gamma(), datasets::pinched_torus()] {
            for field in [q(), f2()] {
                let t = top_cycle_space(&cx, field).unwrap();
                assert!(t.basis.len() <= 1);
                assert_eq!(t.orientation.is_some(), reduced_betti(&cx, field).unwrap().get(cx.dim()) > 0);
            }
        }
    }

    #[test]
    fn reisner() {
        let r = reisner_check(&datasets::gamma(), q()).unwrap();
        assert_eq!((r.is_cohen_macaulay, r.is_homology_sphere), (true, true));
        let r = reisner_check(&datasets::pinched_torus(), q()).unwrap();
        assert_eq!((r.is_cohen_macaulay, r.is_homology_sphere), (false, false));
        let r = reisner_check(&datasets::rp2(), q()).unwrap();
        assert_eq!((r.is_cohen_macaulay, r.is_homology_sphere), (true, false));
        let r = reisner_check(&datasets::rp2(), f2()).unwrap();
        assert_eq!((r.is_cohen_macaulay, r.is_homology_sphere), (false, false));
    }

    #[test]
    fn gorenstein_classification_is_consistent() {
        let mut cases = vec![datasets::rp2(), datasets::gamma(), datasets::pinched_torus(), triangle()];
        for n in 3..7 {
            cases.push(SimplicialComplex::simplex_boundary(n));
        }
        cases.push(SimplicialComplex::from_facets(&[vec![1, 2, 3], vec![2, 3, 4], vec![3, 4, 5]]).unwrap());
        for cx in cases {
            for field in [q(), f2()] {
                let pm = cx.classify_pseudomanifold();
                let r = reisner_check(&cx, field).unwrap();
                let orientable = pm.is_without_boundary && reduced_betti(&cx, field).unwrap().get(cx.dim()) > 0;
                assert_eq!(r.is_homology_sphere, r.is_cohen_macaulay && orientable, "{cx:?}");
            }
        }
    }
}
