//! Monomial artinian reductions `A = R / (I_Δ + (x_1^{a_1}, …, x_n^{a_n}))`
//! and their Lefschetz behaviour with respect to `L = x_1 + … + x_n`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::compositions::count_a;
use crate::error::{Error, Result};
use crate::homology;
use crate::linalg::{self, ExactMatrix, Field};
use crate::poly::{face_monomials, multinomial, ExponentVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArtinianSpec {
    pub complex: SimplicialComplex,
    pub caps: Vec<u32>,
    pub field: Field,
}

impl ArtinianSpec {
    pub fn new(complex: SimplicialComplex, caps: Vec<u32>, field: Field) -> Result<Self> {
        if caps.len() != complex.n_vertices() {
            return Err(Error::VariableMismatch(complex.n_vertices(), caps.len()));
        }
        if caps.contains(&0) {
            return Err(Error::InvalidConfig("caps must be positive".into()));
        }
        Ok(ArtinianSpec { complex, caps, field })
    }

    pub fn uniform(complex: SimplicialComplex, cap: u32, field: Field) -> Result<Self> {
        let n = complex.n_vertices();
        Self::new(complex, vec![cap; n], field)
    }

    /// Caps `d + 2` on every variable.
    pub fn standard(complex: SimplicialComplex, field: Field) -> Result<Self> {
        let cap = (complex.dim() + 2).max(1) as u32;
        Self::uniform(complex, cap, field)
    }

    pub fn uniform_cap(&self) -> Option<u32> {
        let first = *self.caps.first()?;
        self.caps.iter().all(|&c| c == first).then_some(first)
    }

    /// `Σ (a_i - 1)`, an upper bound for the socle degree.
    pub fn degree_bound(&self) -> usize {
        self.caps.iter().map(|&c| c as usize - 1).sum()
    }
}

/// Nonzero monomials of `A_t`, in decreasing grevlex order.
pub fn monomial_basis(spec: &ArtinianSpec, t: usize) -> Vec<ExponentVector> {
    face_monomials(&spec.complex, t, Some(&spec.caps))
}

/// `Σ_i f_{i-1} · a(t, k+1, i)` for uniform caps `k + 2`.
pub fn hilbert_from_compositions(cx: &SimplicialComplex, cap: u32, t: usize) -> BigInt {
    let f = cx.fhg_vectors().f;
    let parts_bound = cap as usize - 1;
    f.iter().enumerate().map(|(size, &fi)| BigInt::from(fi) * BigInt::from(count_a(t, parts_bound, size))).sum()
}

/// `dim A_t` for `t = 0..=T`. Without `max_degree` the sequence stops at the
/// first zero (inclusive). Uniform caps are cross-checked against the
/// composition formula.
pub fn hilbert_function(spec: &ArtinianSpec, max_degree: Option<usize>) -> Result<Vec<usize>> {
    let mut dims = Vec::new();
    let mut t = 0;
    loop {
        let dim = monomial_basis(spec, t).len();
        dims.push(dim);
        if let Some(cap) = spec.uniform_cap() {
            let formula = hilbert_from_compositions(&spec.complex, cap, t);
            if formula != BigInt::from(dim) {
                return Err(Error::HilbertMismatch { degree: t, direct: dim.to_string(), formula: formula.to_string() });
            }
        }
        match max_degree {
            Some(top) if t >= top => break,
            None if dim == 0 => break,
            _ => {}
        }
        t += 1;
    }
    Ok(dims)
}

fn index_of(basis: &[ExponentVector]) -> HashMap<&ExponentVector, usize> {
    basis.iter().enumerate().map(|(i, e)| (e, i)).collect()
}

/// Matrix of `×L^j : A_t → A_{t+j}` in the monomial bases. Entry `(m', m)` is
/// the multinomial coefficient of `x^(m'-m)` in `L^j`, reduced into the field.
pub fn lefschetz_matrix(spec: &ArtinianSpec, t: usize, j: usize) -> Result<ExactMatrix> {
    let cols = monomial_basis(spec, t);
    let rows = monomial_basis(spec, t + j);
    let mut m = ExactMatrix::zeros(rows.len(), cols.len());
    if j == 0 {
        let at = index_of(&rows);
        for (c, e) in cols.iter().enumerate() {
            m.set(at[e], c, spec.field.reduce(&BigRational::from_integer(1.into()))?);
        }
        return Ok(m);
    }
    for (r, target) in rows.iter().enumerate() {
        for (c, src) in cols.iter().enumerate() {
            if let Some(delta) = target.checked_sub(src) {
                let v = spec.field.reduce(&BigRational::from_integer(multinomial(&delta.0)))?;
                m.set(r, c, v);
            }
        }
    }
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    /// `dims[t] ≤ dims[t+j]` but the map is not injective.
    Injectivity,
    /// `dims[t] > dims[t+j]` but the map is not surjective.
    Surjectivity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankFailure {
    pub from: usize,
    pub to: usize,
    pub power: usize,
    pub rank: usize,
    pub full_rank_target: usize,
    pub kind: FailureKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRankReport {
    pub dims: Vec<usize>,
    /// `ranks_j[j-1][t]` is the rank of `×L^j : A_t → A_{t+j}`.
    pub ranks_j: Vec<Vec<usize>>,
    pub verdict_wlp: Verdict,
    /// SLP verdict over the computed powers `1..=max_power`.
    pub verdict_slp: Verdict,
    pub failure_degrees: Vec<RankFailure>,
}

impl GradedRankReport {
    pub fn full_rank_target(&self, t: usize, j: usize) -> usize {
        self.dims[t].min(self.dims[t + j])
    }

    pub fn wlp_failures(&self) -> impl Iterator<Item = &RankFailure> {
        self.failure_degrees.iter().filter(|f| f.power == 1)
    }

    /// `dim (A/LA)_t = dims[t] - rank(×L : A_{t-1} → A_t)`.
    pub fn quotient_dims(&self) -> Vec<usize> {
        let ranks = &self.ranks_j[0];
        (0..self.dims.len()).map(|t| if t == 0 { self.dims[0] } else { self.dims[t] - ranks[t - 1] }).collect()
    }

    /// Per-degree CSV: `degree,dim,rank_to_next,full_rank_target,status`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("degree,dim,rank_to_next,full_rank_target,status\n");
        let ranks = &self.ranks_j[0];
        for (t, &dim) in self.dims.iter().enumerate() {
            if t + 1 < self.dims.len() {
                let target = self.full_rank_target(t, 1);
                let status = if ranks[t] == target { "full" } else { "deficient" };
                s.push_str(&format!("{t},{dim},{},{target},{status}\n", ranks[t]));
            } else {
                s.push_str(&format!("{t},{dim},,,\n"));
            }
        }
        s
    }

    /// The two-row table `HF` / `HF_L` with a degree header.
    pub fn quotient_table(&self) -> String {
        hilbert_table(&self.dims, Some(&self.quotient_dims()))
    }
}

/// `i,0,1,…` / `HF,…` and optionally `HF_L,…`.
pub fn hilbert_table(dims: &[usize], quotient: Option<&[usize]>) -> String {
    let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    let header: Vec<usize> = (0..dims.len()).collect();
    let mut s = format!("i,{}\nHF,{}\n", join(&header), join(dims));
    if let Some(q) = quotient {
        s.push_str(&format!("HF_L,{}\n", join(q)));
    }
    s
}

/// Ranks of `×L^j` for `j = 1..=max_power` between all degrees up to the
/// first vanishing one, with WLP decided by the `j = 1` maps.
pub fn lefschetz_verdict(spec: &ArtinianSpec, max_power: usize) -> Result<GradedRankReport> {
    let dims = hilbert_function(spec, None)?;
    let top = dims.len() - 1;
    let max_power = max_power.max(1);
    let pairs: Vec<(usize, usize)> = (1..=max_power).flat_map(|j| (0..=top.saturating_sub(j)).map(move |t| (j, t))).filter(|&(j, t)| t + j <= top).collect();
    let ranks: Vec<usize> = pairs
        .par_iter()
        .map(|&(j, t)| {
            if dims[t] == 0 || dims[t + j] == 0 {
                return Ok(0);
            }
            linalg::rank(&lefschetz_matrix(spec, t, j)?, spec.field)
        })
        .collect::<Result<_>>()?;
    let mut ranks_j = vec![Vec::new(); max_power];
    let mut failure_degrees = Vec::new();
    for (&(j, t), &rank) in pairs.iter().zip(&ranks) {
        ranks_j[j - 1].push(rank);
        let target = dims[t].min(dims[t + j]);
        debug_assert!(rank <= target);
        if rank < target {
            let kind = if dims[t] <= dims[t + j] { FailureKind::Injectivity } else { FailureKind::Surjectivity };
            failure_degrees.push(RankFailure { from: t, to: t + j, power: j, rank, full_rank_target: target, kind });
        }
    }
    let verdict = |ok: bool| if ok { Verdict::Holds } else { Verdict::Fails };
    let verdict_wlp = verdict(failure_degrees.iter().all(|f| f.power != 1));
    let verdict_slp = verdict(failure_degrees.is_empty());
    Ok(GradedRankReport { dims, ranks_j, verdict_wlp, verdict_slp, failure_degrees })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailureCertificate {
    pub applies: bool,
    pub d: isize,
    pub f_ridges: usize,
    pub f_facets: usize,
    pub top_betti: usize,
    /// `(t - 1, t)` with `t = C(d+2, 2)`: where `×L` cannot be surjective.
    pub degrees: (usize, usize),
}

/// Sufficient condition for failure of the WLP with caps `d + 2`:
/// `d > 0`, `f_{d-1} ≥ f_d` and `H̃_d(Δ; F) ≠ 0`.
pub fn guaranteed_failure(cx: &SimplicialComplex, field: Field) -> Result<FailureCertificate> {
    let d = cx.dim();
    let f_ridges = if d >= 1 { cx.faces(d - 1).len() } else { 0 };
    let f_facets = if d >= 0 { cx.faces(d).len() } else { 0 };
    let top_betti = if d >= 0 { homology::top_betti(cx, field)? } else { 0 };
    let t = if d >= 0 { ((d + 2) * (d + 1) / 2) as usize } else { 0 };
    let applies = d > 0 && f_ridges >= f_facets && top_betti > 0;
    Ok(FailureCertificate { applies, d, f_ridges, f_facets, top_betti, degrees: (t.saturating_sub(1), t) })
}
