//! Exact linear algebra over the rationals and prime fields.
//!
//! Matrices store rational entries regardless of the target field; a
//! [`Field`] is supplied per operation and entries are reduced into it when
//! the elimination starts. Over `F_p` this is plain modular elimination on
//! 64-bit words, over `Q` a fraction-free integer elimination after each row
//! is scaled to clear denominators.

mod modp;
mod rational;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Prime used for the modular full-rank shortcut over `Q`.
const CHECK_PRIME: u64 = 2_147_483_647;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(PrimeModulus),
}

/// A prime below `2^31`, checked at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn get(self) -> u64 {
        self.0 as u64
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn rationals() -> Field {
        Field::Rationals
    }

    pub fn prime(p: u64) -> Result<Field> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(PrimeModulus(p as u32)))
    }

    /// 0 for the rationals.
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p.get(),
        }
    }

    /// Canonical representative: unchanged over `Q`, an integer in `0..p`
    /// over `F_p`.
    pub fn reduce(self, x: &BigRational) -> Result<BigRational> {
        match self {
            Field::Rationals => Ok(x.clone()),
            Field::Prime(p) => Ok(BigRational::from_integer(BigInt::from(to_modp(x, p.get())?))),
        }
    }

    pub fn is_zero(self, x: &BigRational) -> Result<bool> {
        Ok(self.reduce(x)?.is_zero())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "{}", p.get()),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// `q`, `Q`, `0` or `rationals`; otherwise a prime, optionally prefixed
    /// with `p` or `F`.
    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        match t {
            "q" | "Q" | "0" | "rationals" => Ok(Field::Rationals),
            _ => {
                let digits = t.trim_start_matches(['p', 'P', 'f', 'F']);
                let p: u64 = digits.parse().map_err(|_| Error::Parse(format!("unknown field '{s}'")))?;
                Field::prime(p)
            }
        }
    }
}

pub(crate) fn to_modp(x: &BigRational, p: u64) -> Result<u64> {
    let pb = BigInt::from(p);
    let num = x.numer().mod_floor(&pb).to_u64().expect("reduced below p");
    let den = x.denom().mod_floor(&pb).to_u64().expect("reduced below p");
    if den == 0 {
        return Err(Error::NotInvertible(x.to_string(), p));
    }
    Ok(num * modp::inv(den, p) % p)
}

/// Sparse matrix with rational entries; zero entries are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, BigRational>>,
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![BTreeMap::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Fails on out-of-range or repeated cells.
    pub fn from_triplets<I>(rows: usize, cols: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, BigRational)>,
    {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(Error::IndexOutOfRange { row: r, col: c, rows, cols });
            }
            if m.data[r].contains_key(&c) {
                return Err(Error::DuplicateEntry(r, c));
            }
            // zeros are kept until the end so a repeated cell is still caught
            m.data[r].insert(c, v);
        }
        for row in &mut m.data {
            row.retain(|_, v| !v.is_zero());
        }
        Ok(m)
    }

    /// Dense constructor from integer rows, mostly for tests.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, BigRational::from_integer(v.into()));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    /// Overwrites a cell; storing zero clears it.
    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        if v.is_zero() {
            self.data[r].remove(&c);
        } else {
            self.data[r].insert(c, v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &BigRational) {
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    pub fn get(&self, r: usize, c: usize) -> BigRational {
        self.data[r].get(&c).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, &BigRational)> {
        self.data[r].iter().map(|(&c, v)| (c, v))
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> {
        self.data.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(&c, v)| (r, c, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (r, c, v) in self.triplets() {
            t.data[c].insert(r, v.clone());
        }
        t
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&mut self, other: &ExactMatrix) {
        assert_eq!(self.cols, other.cols, "column mismatch");
        self.data.extend(other.data.iter().cloned());
        self.rows += other.rows;
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        self.data
            .iter()
            .map(|row| row.iter().fold(BigRational::zero(), |acc, (&c, x)| acc + x * &v[c]))
            .collect()
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
            for (&k, a) in row {
                for (&c, b) in &other.data[k] {
                    *acc.entry(c).or_insert_with(BigRational::zero) += a * b;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.data[r] = acc;
        }
        out
    }

    /// Entries mapped to their canonical representatives in `field`.
    pub fn reduce_into(&self, field: Field) -> Result<ExactMatrix> {
        let mut out = Self::zeros(self.rows, self.cols);
        for (r, c, v) in self.triplets() {
            out.set(r, c, field.reduce(v)?);
        }
        Ok(out)
    }

    fn modp_rows(&self, p: u64) -> Result<Vec<modp::SparseRow>> {
        self.data
            .iter()
            .map(|row| {
                let mut out = Vec::with_capacity(row.len());
                for (&c, v) in row {
                    let x = to_modp(v, p)?;
                    if x != 0 {
                        out.push((c, x));
                    }
                }
                Ok(out)
            })
            .collect()
    }

    fn int_rows(&self) -> Vec<rational::IntRow> {
        self.data
            .iter()
            .map(|row| {
                let lcm = row.values().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                row.iter()
                    .map(|(&c, v)| (c, v.numer() * (&lcm / v.denom())))
                    .collect()
            })
            .collect()
    }
}

/// Exact rank over `field`.
pub fn rank(m: &ExactMatrix, field: Field) -> Result<usize> {
    match field {
        Field::Prime(p) => rank_modp(m, p.get()),
        Field::Rationals => {
            // rank mod p never exceeds the rank over Q, so a full-rank
            // reduction settles it without big integers
            let full = m.rows.min(m.cols);
            if let Ok(r) = rank_modp(m, CHECK_PRIME) {
                if r == full {
                    return Ok(r);
                }
            }
            Ok(rank_rational(m))
        }
    }
}

fn rank_modp(m: &ExactMatrix, p: u64) -> Result<usize> {
    let mut ech = modp::Echelon::new(p);
    for row in m.modp_rows(p)? {
        ech.insert(row);
    }
    Ok(ech.rank())
}

/// Rank over `Q` by fraction-free elimination only.
pub fn rank_rational(m: &ExactMatrix) -> usize {
    let mut ech = rational::Echelon::new();
    for row in m.int_rows() {
        ech.insert(row);
    }
    ech.rank()
}

/// Reduced row echelon form over `field`.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: ExactMatrix,
    pub pivots: Vec<usize>,
}

pub fn rref(m: &ExactMatrix, field: Field) -> Result<Rref> {
    let rows = reduced_rows(m, field)?;
    let mut out = ExactMatrix::zeros(m.rows, m.cols);
    let mut pivots = Vec::with_capacity(rows.len());
    for (i, (c, row)) in rows.into_iter().enumerate() {
        pivots.push(c);
        for (j, v) in row {
            out.set(i, j, v);
        }
    }
    Ok(Rref { matrix: out, pivots })
}

/// Fully reduced pivot rows with leading coefficient 1.
fn reduced_rows(m: &ExactMatrix, field: Field) -> Result<Vec<(usize, Vec<(usize, BigRational)>)>> {
    match field {
        Field::Prime(p) => {
            let mut ech = modp::Echelon::new(p.get());
            for row in m.modp_rows(p.get())? {
                ech.insert(row);
            }
            Ok(ech
                .into_reduced()
                .into_iter()
                .map(|(c, row)| {
                    (c, row.into_iter().map(|(j, v)| (j, BigRational::from_integer(v.into()))).collect())
                })
                .collect())
        }
        Field::Rationals => {
            let mut ech = rational::Echelon::new();
            for row in m.int_rows() {
                ech.insert(row);
            }
            Ok(ech
                .into_reduced()
                .into_iter()
                .map(|(c, row)| {
                    let lead = row[0].1.clone();
                    (c, row.into_iter().map(|(j, v)| (j, BigRational::new(v, lead.clone()))).collect())
                })
                .collect())
        }
    }
}

/// Basis of the right null space, one vector per free column in increasing
/// column order, each scaled so its first nonzero coordinate is 1.
pub fn kernel_basis(m: &ExactMatrix, field: Field) -> Result<Vec<Vec<BigRational>>> {
    let rows = reduced_rows(m, field)?;
    let rank = rows.len();
    let mut is_pivot = vec![false; m.cols];
    for (c, _) in &rows {
        is_pivot[*c] = true;
    }
    let mut basis = Vec::with_capacity(m.cols - rank);
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![BigRational::zero(); m.cols];
        v[free] = BigRational::one();
        for (c, row) in &rows {
            if let Some((_, x)) = row.iter().find(|e| e.0 == free) {
                v[*c] = field.reduce(&-x.clone())?;
            }
        }
        let first = v.iter().find(|x| !x.is_zero()).cloned().expect("free coordinate is 1");
        if !first.is_one() {
            let inv = field.reduce(&first.recip())?;
            for x in v.iter_mut() {
                *x = field.reduce(&(&*x * &inv))?;
            }
        }
        basis.push(v);
    }
    debug_assert_eq!(basis.len() + rank, m.cols, "rank-nullity");
    Ok(basis)
}

/// Rank of a list of vectors (as rows).
pub fn rank_of_vectors(vectors: &[Vec<BigRational>], dim: usize, field: Field) -> Result<usize> {
    let m = ExactMatrix::from_triplets(
        vectors.len(),
        dim,
        vectors
            .iter()
            .enumerate()
            .flat_map(|(r, v)| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(move |(c, x)| (r, c, x.clone()))),
    )?;
    rank(&m, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn field_construction() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(1009).is_ok());
        assert!(matches!(Field::prime(1), Err(Error::NotPrime(1))));
        assert!(matches!(Field::prime(1001), Err(Error::NotPrime(1001))));
        assert!(Field::prime(2_147_483_659).is_err());
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("p7".parse::<Field>().unwrap(), Field::prime(7).unwrap());
        assert!("x".parse::<Field>().is_err());
    }

    #[test]
    fn reduction_mod_p() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.reduce(&q(-1)).unwrap(), q(6));
        assert_eq!(f.reduce(&BigRational::new(1.into(), 2.into())).unwrap(), q(4));
        assert!(f.reduce(&BigRational::new(1.into(), 14.into())).is_err());
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&ExactMatrix::zeros(3, 4), Field::Rationals).unwrap(), 0);
        assert_eq!(rank(&ExactMatrix::identity(3), Field::Rationals).unwrap(), 3);
        // boundary of the triangle, edges 12 13 23
        let d1 = ExactMatrix::from_int_rows(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
        assert_eq!(rank(&d1, Field::Rationals).unwrap(), 2);
        assert_eq!(rank_rational(&d1), 2);
        assert_eq!(rank(&d1, Field::prime(2).unwrap()).unwrap(), 2);
    }

    #[test]
    fn characteristic_matters() {
        let m = ExactMatrix::from_int_rows(&[vec![1, 1], vec![1, -1]]);
        assert_eq!(rank(&m, Field::Rationals).unwrap(), 2);
        assert_eq!(rank(&m, Field::prime(2).unwrap()).unwrap(), 1);
    }

    #[test]
    fn kernels() {
        assert!(kernel_basis(&ExactMatrix::identity(4), Field::Rationals).unwrap().is_empty());
        let m = ExactMatrix::from_int_rows(&[vec![1, -1]]);
        assert_eq!(kernel_basis(&m, Field::Rationals).unwrap(), vec![vec![q(1), q(1)]]);
        let m = ExactMatrix::from_int_rows(&[vec![2, 4, 6]]);
        let k = kernel_basis(&m, Field::Rationals).unwrap();
        // first nonzero coordinate normalized to 1
        assert_eq!(
            k,
            vec![
                vec![q(1), BigRational::new((-1).into(), 2.into()), q(0)],
                vec![q(1), q(0), BigRational::new((-1).into(), 3.into())]
            ]
        );
    }

    #[test]
    fn kernel_first_coordinate_normalized() {
        let m = ExactMatrix::from_int_rows(&[vec![1, 3, 0], vec![0, 0, 1]]);
        for field in [Field::Rationals, Field::prime(5).unwrap()] {
            let k = kernel_basis(&m, field).unwrap();
            assert_eq!(k.len(), 1);
            assert!(k[0].iter().find(|x| !x.is_zero()).unwrap().is_one());
            let img = m.mul_vec(&k[0]);
            assert!(img.iter().all(|x| field.is_zero(x).unwrap()));
        }
    }

    #[test]
    fn rational_entries() {
        let m = ExactMatrix::from_triplets(
            2,
            2,
            [
                (0, 0, BigRational::new(1.into(), 2.into())),
                (0, 1, BigRational::new(1.into(), 3.into())),
                (1, 0, BigRational::new(3.into(), 1.into())),
                (1, 1, q(2)),
            ],
        )
        .unwrap();
        assert_eq!(rank(&m, Field::Rationals).unwrap(), 1);
        let k = kernel_basis(&m, Field::Rationals).unwrap();
        assert_eq!(k, vec![vec![q(1), BigRational::new((-3).into(), 2.into())]]);
    }

    #[test]
    fn triplet_errors() {
        assert!(matches!(
            ExactMatrix::from_triplets(1, 1, [(1, 0, q(1))]),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            ExactMatrix::from_triplets(1, 1, [(0, 0, q(1)), (0, 0, q(2))]),
            Err(Error::DuplicateEntry(0, 0))
        ));
    }

    #[test]
    fn rref_shape() {
        let m = ExactMatrix::from_int_rows(&[vec![0, 2, 4], vec![1, 1, 1], vec![1, 2, 3]]);
        let r = rref(&m, Field::Rationals).unwrap();
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.matrix.get(0, 0), q(1));
        assert_eq!(r.matrix.get(0, 1), q(0));
        assert_eq!(r.matrix.get(0, 2), q(-1));
        assert_eq!(r.matrix.get(1, 2), q(2));
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..4], c), r)
        })
    }

    proptest! {
        #[test]
        fn rank_nullity_and_transpose(rows in small_matrix()) {
            let m = ExactMatrix::from_int_rows(&rows);
            for field in [Field::Rationals, Field::prime(1009).unwrap(), Field::prime(2).unwrap()] {
                let r = rank(&m, field).unwrap();
                let k = kernel_basis(&m, field).unwrap();
                prop_assert_eq!(r + k.len(), m.cols());
                prop_assert_eq!(rank(&m.transpose(), field).unwrap(), r);
                for v in &k {
                    prop_assert!(m.mul_vec(v).iter().all(|x| field.is_zero(x).unwrap()));
                }
            }
        }

        #[test]
        fn rational_rank_matches_large_prime(rows in small_matrix()) {
            // entries are tiny, so p = 1009 divides no pivot of these minors
            // except with negligible probability; both paths must agree
            let m = ExactMatrix::from_int_rows(&rows);
            let rq = rank_rational(&m);
            let rp = rank(&m, Field::prime(1009).unwrap()).unwrap();
            prop_assert!(rp <= rq);
            prop_assert_eq!(rq, rank(&m, Field::Rationals).unwrap());
        }
    }
}
