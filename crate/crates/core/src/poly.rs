//! Polynomials in `R = K[x_1..x_n]`, dual polynomials in `S = K[y_1..y_n]`,
//! and the contraction action `x^a ∘ y^b = y^(b-a)` (zero unless `a ≤ b`).
//!
//! Coefficients are kept as rationals. Prime-field computations store the
//! canonical representatives `0..p` and reduce explicitly via [`Field`].

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Field};

/// Exponent vector of a monomial.
///
/// `Ord` is graded reverse lexicographic with the *largest* monomial first,
/// so sorted slices and `BTreeMap` iteration run `x_1 > x_2 > … > x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        ExponentVector(e)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    /// `self ≤ other` componentwise.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        other.divides(self).then(|| ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All `a ≤ self` with `|a| = k`.
    pub fn divisors_of_degree(&self, k: usize) -> Vec<ExponentVector> {
        fn go(b: &[u32], i: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
            if i == b.len() {
                if left == 0 {
                    out.push(ExponentVector(cur.clone()));
                }
                return;
            }
            let rest: usize = b[i + 1..].iter().map(|&e| e as usize).sum();
            let lo = left.saturating_sub(rest);
            let hi = left.min(b[i] as usize);
            for e in lo..=hi {
                cur[i] = e as u32;
                go(b, i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        let mut out = Vec::new();
        if k <= self.degree() {
            go(&self.0, 0, k, &mut vec![0; self.n()], &mut out);
        }
        out
    }

    fn grevlex(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            if a != b {
                // smaller exponent in the last differing variable is larger
                return b.cmp(a);
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        other.grevlex(self)
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("x{}", i) } else { format!("x{}^{}", i, e) })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

fn add_term(terms: &mut BTreeMap<ExponentVector, BigRational>, e: ExponentVector, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(e) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn reduce_terms(terms: &BTreeMap<ExponentVector, BigRational>, field: Field) -> Result<BTreeMap<ExponentVector, BigRational>> {
    let mut out = BTreeMap::new();
    for (e, c) in terms {
        let c = field.reduce(c)?;
        if !c.is_zero() {
            out.insert(e.clone(), c);
        }
    }
    Ok(out)
}

/// A polynomial in `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<ExponentVector, BigRational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(ExponentVector::zero(n), BigRational::one())
    }

    pub fn monomial(e: ExponentVector, c: BigRational) -> Self {
        let n = e.n();
        let mut terms = BTreeMap::new();
        add_term(&mut terms, e, c);
        Polynomial { n, terms }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (ExponentVector, BigRational)>) -> Result<Self> {
        let mut p = Polynomial::zero(n);
        for (e, c) in terms {
            if e.n() != n {
                return Err(Error::VariableMismatch(n, e.n()));
            }
            add_term(&mut p.terms, e, c);
        }
        Ok(p)
    }

    pub fn variable(n: usize, i: usize) -> Self {
        Self::monomial(ExponentVector::unit(n, i), BigRational::one())
    }

    /// `Σ c_i x_i`.
    pub fn linear_form(coeffs: &[BigRational]) -> Self {
        let n = coeffs.len();
        let mut p = Polynomial::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            add_term(&mut p.terms, ExponentVector::unit(n, i), c.clone());
        }
        p
    }

    /// `L = x_1 + … + x_n`.
    pub fn sum_of_variables(n: usize) -> Self {
        Self::linear_form(&vec![BigRational::one(); n])
    }

    /// `e_k(x_1..x_n)`.
    pub fn elementary_symmetric(n: usize, k: usize) -> Self {
        let mut p = Polynomial::zero(n);
        let mut subset: Vec<usize> = (0..k).collect();
        if k > n {
            return p;
        }
        loop {
            let mut e = vec![0; n];
            for &i in &subset {
                e[i] = 1;
            }
            p.terms.insert(ExponentVector(e), BigRational::one());
            // next k-subset in lex order
            let mut i = k;
            loop {
                if i == 0 {
                    return p;
                }
                i -= 1;
                if subset[i] < n - k + i {
                    subset[i] += 1;
                    for j in i + 1..k {
                        subset[j] = subset[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    /// `e_1, …, e_m`.
    pub fn elementary_sequence(n: usize, m: usize) -> Vec<Self> {
        (1..=m).map(|k| Self::elementary_symmetric(n, k)).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<ExponentVector, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The common degree of all terms, or `None` if inhomogeneous or zero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|e| e.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::VariableMismatch(self.n, other.n));
        }
        let mut p = self.clone();
        for (e, c) in &other.terms {
            add_term(&mut p.terms, e.clone(), c.clone());
        }
        Ok(p)
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        let mut p = Polynomial::zero(self.n);
        for (e, c) in &self.terms {
            add_term(&mut p.terms, e.clone(), c * s);
        }
        p
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::VariableMismatch(self.n, other.n));
        }
        let mut acc: HashMap<ExponentVector, BigRational> = HashMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                *acc.entry(a.add(b)).or_insert_with(BigRational::zero) += x * y;
            }
        }
        Ok(Polynomial { n: self.n, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Polynomial::one(self.n);
        for _ in 0..k {
            acc = acc.mul(self).expect("same variable count");
        }
        acc
    }

    pub fn reduce(&self, field: Field) -> Result<Self> {
        Ok(Polynomial { n: self.n, terms: reduce_terms(&self.terms, field)? })
    }

    /// Reinterpret as an element of `S` with the same coefficients.
    pub fn to_dual(&self) -> Result<DualPolynomial> {
        let degree = if self.is_zero() { 0 } else { self.homogeneous_degree().ok_or(Error::Inhomogeneous)? };
        Ok(DualPolynomial { n: self.n, degree: degree as isize, terms: self.terms.clone() })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms)
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &BTreeMap<ExponentVector, BigRational>) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (e, c)) in terms.iter().enumerate() {
        let neg = c < &BigRational::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        let sign = match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        let mono = e.to_string();
        if abs.is_one() {
            write!(f, "{sign}{mono}")?;
        } else if mono == "1" {
            write!(f, "{sign}{abs}")?;
        } else {
            write!(f, "{sign}{abs}*{mono}")?;
        }
    }
    Ok(())
}

/// A homogeneous element of the dual ring `S`. `degree` is the polynomial
/// degree (the element lives in `S_{-degree}`); contracting by something of
/// larger degree gives the zero element with negative `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPolynomial {
    pub n: usize,
    pub degree: isize,
    terms: BTreeMap<ExponentVector, BigRational>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exps: Vec<u32>,
    coeff: String,
}

impl DualPolynomial {
    pub fn zero(n: usize, degree: isize) -> Self {
        DualPolynomial { n, degree, terms: BTreeMap::new() }
    }

    pub fn from_terms(n: usize, degree: usize, terms: impl IntoIterator<Item = (ExponentVector, BigRational)>) -> Result<Self> {
        let mut out = DualPolynomial::zero(n, degree as isize);
        for (e, c) in terms {
            if e.n() != n {
                return Err(Error::VariableMismatch(n, e.n()));
            }
            if e.degree() != degree {
                return Err(Error::Inhomogeneous);
            }
            add_term(&mut out.terms, e, c);
        }
        Ok(out)
    }

    /// Coordinates in `basis` become coefficients.
    pub fn from_coordinates(basis: &[ExponentVector], coords: &[BigRational], n: usize, degree: usize) -> Self {
        let terms = basis.iter().cloned().zip(coords.iter().cloned()).filter(|(_, c)| !c.is_zero()).collect();
        DualPolynomial { n, degree: degree as isize, terms }
    }

    /// Coefficients on `basis`; terms outside the basis are ignored.
    pub fn coordinates(&self, basis: &[ExponentVector]) -> Vec<BigRational> {
        basis.iter().map(|e| self.coefficient(e)).collect()
    }

    pub fn terms(&self) -> &BTreeMap<ExponentVector, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, e: &ExponentVector) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::VariableMismatch(self.n, other.n));
        }
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::Inhomogeneous);
        }
        let mut out = if self.is_zero() { other.clone() } else { self.clone() };
        let rhs = if self.is_zero() { &BTreeMap::new() } else { &other.terms };
        for (e, c) in rhs {
            add_term(&mut out.terms, e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        let mut out = DualPolynomial::zero(self.n, self.degree);
        for (e, c) in &self.terms {
            add_term(&mut out.terms, e.clone(), c * s);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn reduce(&self, field: Field) -> Result<Self> {
        Ok(DualPolynomial { n: self.n, degree: self.degree, terms: reduce_terms(&self.terms, field)? })
    }

    pub fn to_json(&self) -> String {
        let terms: Vec<TermJson> =
            self.terms.iter().map(|(e, c)| TermJson { exps: e.0.clone(), coeff: c.to_string() }).collect();
        serde_json::to_string(&terms).expect("plain data serializes")
    }

    /// Parses the JSON term list. An empty list needs `n` from the caller,
    /// so it yields the zero element with `n = 0`.
    pub fn from_json(s: &str) -> Result<Self> {
        let raw: Vec<TermJson> = serde_json::from_str(s)?;
        let n = raw.first().map_or(0, |t| t.exps.len());
        let degree = raw.first().map_or(0, |t| t.exps.iter().map(|&e| e as usize).sum());
        let mut terms = Vec::with_capacity(raw.len());
        for t in raw {
            let c = BigRational::from_str(&t.coeff).map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            terms.push((ExponentVector(t.exps), c));
        }
        Self::from_terms(n, degree, terms)
    }
}

impl fmt::Display for DualPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = {
            struct T<'a>(&'a BTreeMap<ExponentVector, BigRational>);
            impl fmt::Display for T<'_> {
                fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                    write_terms(f, self.0)
                }
            }
            T(&self.terms).to_string()
        };
        write!(f, "{}", s.replace('x', "y"))
    }
}

/// `f ∘ F`.
pub fn contract(f: &Polynomial, big_f: &DualPolynomial) -> Result<DualPolynomial> {
    if f.n() != big_f.n {
        return Err(Error::VariableMismatch(f.n(), big_f.n));
    }
    if f.is_zero() {
        return Ok(DualPolynomial::zero(big_f.n, big_f.degree));
    }
    let e = f.homogeneous_degree().ok_or(Error::Inhomogeneous)?;
    let degree = big_f.degree - e as isize;
    let mut out = DualPolynomial::zero(big_f.n, degree);
    if degree < 0 {
        return Ok(out);
    }
    for (b, y) in &big_f.terms {
        for a in b.divisors_of_degree(e) {
            if let Some(x) = f.terms.get(&a) {
                add_term(&mut out.terms, b.checked_sub(&a).expect("divisor"), x * y);
            }
        }
    }
    Ok(out)
}

/// Matrix of `g ∘ : span(cols) → span(rows)`: entry `(r, c)` is the
/// coefficient of `y^r` in `g ∘ y^c`. Contributions outside `rows` are dropped.
pub fn contraction_matrix(g: &Polynomial, rows: &[ExponentVector], cols: &[ExponentVector], field: Field) -> Result<ExactMatrix> {
    let Some(e) = g.homogeneous_degree() else {
        return if g.is_zero() { Ok(ExactMatrix::zeros(rows.len(), cols.len())) } else { Err(Error::Inhomogeneous) };
    };
    let row_index: HashMap<&ExponentVector, usize> = rows.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let mut m = ExactMatrix::zeros(rows.len(), cols.len());
    for (c, b) in cols.iter().enumerate() {
        for a in b.divisors_of_degree(e) {
            if let Some(x) = g.terms.get(&a) {
                if let Some(&r) = row_index.get(&b.checked_sub(&a).expect("divisor")) {
                    m.add_to(r, c, x);
                }
            }
        }
    }
    m.reduce_into(field)
}

/// Exponent vectors of degree `t` supported on faces of `cx`, optionally with
/// `exps[i] < caps[i]`, in decreasing graded reverse lexicographic order.
pub fn face_monomials(cx: &SimplicialComplex, t: usize, caps: Option<&[u32]>) -> Vec<ExponentVector> {
    let n = cx.n_vertices();
    if t == 0 {
        return vec![ExponentVector::zero(n)];
    }
    fn fill(face: &[usize], i: usize, left: usize, bound: &dyn Fn(usize) -> usize, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if i + 1 == face.len() {
            if left >= 1 && left <= bound(face[i]) {
                cur[face[i]] = left as u32;
                out.push(ExponentVector(cur.clone()));
                cur[face[i]] = 0;
            }
            return;
        }
        let rest = face.len() - i - 1;
        for e in 1..=bound(face[i]).min(left.saturating_sub(rest)) {
            cur[face[i]] = e as u32;
            fill(face, i + 1, left - e, bound, cur, out);
        }
        cur[face[i]] = 0;
    }
    let bound = |v: usize| caps.map_or(usize::MAX, |c| c[v].saturating_sub(1) as usize);
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    for size in 1..=t.min((cx.dim() + 1).max(0) as usize) {
        for face in cx.faces(size as isize - 1) {
            fill(face, 0, t, &bound, &mut cur, &mut out);
        }
    }
    out.sort();
    out
}

/// `j! / Π δ_i!`.
pub fn multinomial(delta: &[u32]) -> BigInt {
    let mut acc = BigInt::one();
    let mut total = 0u32;
    for &d in delta {
        for k in 1..=d {
            total += 1;
            acc *= total;
            acc /= k;
        }
    }
    acc
}
