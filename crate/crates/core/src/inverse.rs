//! Inverse systems of `I_Δ + (extra)` under contraction: perp spaces,
//! dual-module generator counts, Vandermonde factors and the top stress
//! `F_Δ = Σ c_i x_{F_i} V(F_i)` attached to a top cycle.

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::Chain;
use crate::linalg::{self, ExactMatrix, Field};
use crate::poly::{contraction_matrix, face_monomials, DualPolynomial, ExponentVector, Polynomial};

/// `Π_{i<j in B} (y_i - y_j)`, expanded by multiplying out the linear factors.
pub fn vandermonde(b: &[usize], n: usize) -> DualPolynomial {
    let mut sorted = b.to_vec();
    sorted.sort_unstable();
    let mut acc = Polynomial::one(n);
    for (k, &i) in sorted.iter().enumerate() {
        for &j in &sorted[k + 1..] {
            let factor = Polynomial::variable(n, i).add(&Polynomial::variable(n, j).scale(&-BigRational::one())).expect("same n");
            acc = acc.mul(&factor).expect("same n");
        }
    }
    acc.to_dual().expect("product of linear forms is homogeneous")
}

/// Permutations of `0..m` with their signs, in lexicographic order.
fn signed_permutations(m: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, odd: bool, out: &mut Vec<(Vec<usize>, bool)>) {
        if rest.is_empty() {
            out.push((cur.clone(), odd));
            return;
        }
        for k in 0..rest.len() {
            let v = rest.remove(k);
            cur.push(v);
            // choosing the k-th smallest remaining element adds k inversions
            go(rest, cur, odd ^ (k % 2 == 1), out);
            cur.pop();
            rest.insert(k, v);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..m).collect(), &mut Vec::new(), false, &mut out);
    out
}

/// The top stress of a `d`-cycle: `Σ_F c_F x_F V(F)`, expanded as
/// `Σ_σ sign(σ) x^(μ∘σ)` per facet with `μ = (d+1, …, 1)`. Degree `C(d+2, 2)`.
pub fn top_stress(cx: &SimplicialComplex, cycle: &Chain) -> Result<DualPolynomial> {
    let d = cx.dim();
    let facets: Vec<&Vec<usize>> = cycle.coefficients.keys().collect();
    if cycle.degree != d || d < 0 || facets.iter().any(|f| !cx.is_face(f)) || !cycle.is_cycle()? {
        return Err(Error::NotACycle(facets.first().map(|f| f.to_vec()).unwrap_or_default()));
    }
    let n = cx.n_vertices();
    let m = (d + 1) as usize;
    let perms = signed_permutations(m);
    let mut terms = Vec::with_capacity(facets.len() * perms.len());
    for (face, c) in &cycle.coefficients {
        let neg = -c.clone();
        for (sigma, odd) in &perms {
            let mut e = vec![0u32; n];
            for (i, &v) in face.iter().enumerate() {
                e[v] = (m - sigma[i]) as u32;
            }
            terms.push((ExponentVector(e), if *odd { neg.clone() } else { c.clone() }));
        }
    }
    let degree = m * (m + 1) / 2;
    DualPolynomial::from_terms(n, degree, terms)?.reduce(cycle.field)
}

fn check_extras(cx: &SimplicialComplex, extra: &[Polynomial]) -> Result<()> {
    for g in extra {
        if g.n() != cx.n_vertices() {
            return Err(Error::VariableMismatch(cx.n_vertices(), g.n()));
        }
        if !g.is_zero() && g.homogeneous_degree().is_none() {
            return Err(Error::Inhomogeneous);
        }
    }
    Ok(())
}

/// Coordinates of a basis of `(I_Δ + extra)^{-1}` in degree `k`, in the
/// face-supported monomial basis `face_monomials(cx, k, None)`.
fn perp_coordinates(cx: &SimplicialComplex, extra: &[Polynomial], k: usize, field: Field) -> Result<(Vec<ExponentVector>, Vec<Vec<BigRational>>)> {
    let cols = face_monomials(cx, k, None);
    let mut stacked = ExactMatrix::zeros(0, cols.len());
    for g in extra {
        let Some(e) = g.homogeneous_degree() else { continue };
        if e > k {
            continue;
        }
        let rows = face_monomials(cx, k - e, None);
        stacked.vstack(&contraction_matrix(g, &rows, &cols, field)?);
    }
    let kernel = linalg::kernel_basis(&stacked, field)?;
    Ok((cols, kernel))
}

/// Basis of the degree-`k` part of the inverse system of `I_Δ + (extra)`.
pub fn perp_basis(cx: &SimplicialComplex, extra: &[Polynomial], k: usize, field: Field) -> Result<Vec<DualPolynomial>> {
    check_extras(cx, extra)?;
    let n = cx.n_vertices();
    let (basis, kernel) = perp_coordinates(cx, extra, k, field)?;
    Ok(kernel.iter().map(|v| DualPolynomial::from_coordinates(&basis, v, n, k)).collect())
}

/// Perp dimensions and dual-module generator counts by degree `0..=K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StressProfile {
    pub perp_dims: Vec<usize>,
    pub generator_counts: Vec<usize>,
}

impl StressProfile {
    pub fn generator_degrees(&self) -> Vec<usize> {
        self.generator_counts.iter().enumerate().filter(|(_, &c)| c > 0).map(|(k, _)| k).collect()
    }

    pub fn total_generators(&self) -> usize {
        self.generator_counts.iter().sum()
    }
}

fn default_max_degree(cx: &SimplicialComplex) -> usize {
    let d = cx.dim().max(0) as usize;
    (d + 2) * (d + 1) / 2
}

/// Counts generators of the inverse system as a module under contraction:
/// in degree `k`, `dim perp_k - dim span{x_i ∘ G : G ∈ perp_{k+1}}`.
/// `max_degree` defaults to `C(d+2, 2)`; `perp_{K+1}` must vanish.
pub fn dual_module_generators(cx: &SimplicialComplex, extra: &[Polynomial], max_degree: Option<usize>, field: Field) -> Result<StressProfile> {
    check_extras(cx, extra)?;
    let top = max_degree.unwrap_or_else(|| default_max_degree(cx));
    let n = cx.n_vertices();
    let perps: Vec<(Vec<ExponentVector>, Vec<Vec<BigRational>>)> =
        (0..=top + 1).into_par_iter().map(|k| perp_coordinates(cx, extra, k, field)).collect::<Result<_>>()?;
    if !perps[top + 1].1.is_empty() {
        return Err(Error::NotArtinian(top));
    }
    let variables: Vec<Polynomial> = (0..n).map(|i| Polynomial::variable(n, i)).collect();
    let generator_counts = (0..=top)
        .into_par_iter()
        .map(|k| {
            let (rows, here) = &perps[k];
            let (cols, above) = &perps[k + 1];
            let mut images = Vec::new();
            for x in &variables {
                let m = contraction_matrix(x, rows, cols, field)?;
                for g in above {
                    images.push(m.mul_vec(g));
                }
            }
            let images: Vec<Vec<BigRational>> =
                images.into_iter().map(|v| v.iter().map(|c| field.reduce(c)).collect::<Result<_>>()).collect::<Result<_>>()?;
            Ok(here.len() - linalg::rank_of_vectors(&images, rows.len(), field)?)
        })
        .collect::<Result<Vec<usize>>>()?;
    Ok(StressProfile { perp_dims: perps[..=top].iter().map(|p| p.1.len()).collect(), generator_counts })
}

/// Ranks of `ℓ^j ∘ : perp_k → perp_{k-j}` for `k = j..=K`; entry `i` of the
/// result is the rank at `k = j + i`. `max_degree` defaults to `C(d+2, 2)`.
pub fn dual_lefschetz_ranks(
    cx: &SimplicialComplex,
    extra: &[Polynomial],
    ell: &Polynomial,
    j: usize,
    max_degree: Option<usize>,
    field: Field,
) -> Result<Vec<usize>> {
    check_extras(cx, extra)?;
    if ell.n() != cx.n_vertices() {
        return Err(Error::VariableMismatch(cx.n_vertices(), ell.n()));
    }
    if !ell.is_zero() && ell.homogeneous_degree() != Some(1) {
        return Err(Error::Inhomogeneous);
    }
    let top = max_degree.unwrap_or_else(|| default_max_degree(cx));
    let power = ell.pow(j);
    (j..=top)
        .into_par_iter()
        .map(|k| {
            let (cols, basis) = perp_coordinates(cx, extra, k, field)?;
            let rows = face_monomials(cx, k - j, None);
            let m = contraction_matrix(&power, &rows, &cols, field)?;
            let images: Vec<Vec<BigRational>> =
                basis.iter().map(|v| m.mul_vec(v).iter().map(|c| field.reduce(c)).collect::<Result<_>>()).collect::<Result<_>>()?;
            linalg::rank_of_vectors(&images, rows.len(), field)
        })
        .collect()
}

/// Contracts `F` by every generator of `I_Δ` and every member of `extra`;
/// returns the generators that do not annihilate it.
pub fn annihilation_failures(cx: &SimplicialComplex, extra: &[Polynomial], big_f: &DualPolynomial, field: Field) -> Result<Vec<Polynomial>> {
    let n = cx.n_vertices();
    let mut gens: Vec<Polynomial> = cx
        .minimal_nonfaces()
        .into_iter()
        .map(|m| {
            let mut e = vec![0u32; n];
            for v in m {
                e[v] = 1;
            }
            Polynomial::monomial(ExponentVector(e), BigRational::one())
        })
        .collect();
    gens.extend(extra.iter().cloned());
    let mut bad = Vec::new();
    for g in gens {
        if !crate::poly::contract(&g, big_f)?.reduce(field)?.is_zero() {
            bad.push(g);
        }
    }
    Ok(bad)
}

/// `h_Δ(q) · [d+1]_q!` where `[m]_q! = Π_{i=1..m} (1 + q + … + q^{i-1})`:
/// the Hilbert series of the coinvariant quotient of a Cohen–Macaulay complex.
pub fn coinvariant_series(cx: &SimplicialComplex) -> Vec<i64> {
    let h = cx.fhg_vectors().h;
    let mut acc = h;
    for i in 1..=(cx.dim() + 1).max(0) as usize {
        let mut next = vec![0i64; acc.len() + i - 1];
        for (a, &c) in acc.iter().enumerate() {
            for b in 0..i {
                next[a + b] += c;
            }
        }
        acc = next;
    }
    while acc.len() > 1 && acc.last() == Some(&0) {
        acc.pop();
    }
    acc
}
