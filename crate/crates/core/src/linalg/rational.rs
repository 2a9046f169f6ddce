//! Fraction-free sparse elimination over the integers, used for exact rank
//! and kernels over the rationals. Rows are kept primitive (content 1) with
//! a positive leading entry, so entries stay integers throughout.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type IntRow = Vec<(usize, BigInt)>;

/// `a * x - b * y` for sorted sparse rows.
fn combine(a: &BigInt, x: &[(usize, BigInt)], b: &BigInt, y: &[(usize, BigInt)]) -> IntRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let cx = x.get(i).map_or(usize::MAX, |e| e.0);
        let cy = y.get(j).map_or(usize::MAX, |e| e.0);
        if cx < cy {
            out.push((cx, a * &x[i].1));
            i += 1;
        } else if cy < cx {
            out.push((cy, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((cx, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn make_primitive(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if row.first().is_some_and(|e| e.1.is_negative()) {
        g = -g;
    }
    if !g.is_zero() && !g.is_one() {
        for e in row.iter_mut() {
            e.1 /= &g;
        }
    }
}

pub(crate) struct Echelon {
    pivots: BTreeMap<usize, IntRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn insert(&mut self, mut row: IntRow) -> bool {
        row.retain(|e| !e.1.is_zero());
        loop {
            let Some((lead, val)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(prow) => {
                    let pv = &prow[0].1;
                    let g = pv.gcd(&val);
                    row = combine(&(pv / &g), &row, &(&val / &g), prow);
                    make_primitive(&mut row);
                }
                None => {
                    make_primitive(&mut row);
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// Fully reduced rows: each pivot row is zero in every other pivot column.
    pub fn into_reduced(self) -> Vec<(usize, IntRow)> {
        let mut done: BTreeMap<usize, IntRow> = BTreeMap::new();
        for (&c, row) in self.pivots.iter().rev() {
            let mut row = row.clone();
            let hits: Vec<usize> = row.iter().skip(1).map(|e| e.0).filter(|j| done.contains_key(j)).collect();
            for j in hits {
                if let Some(v) = row.iter().find(|e| e.0 == j).map(|e| e.1.clone()) {
                    let prow = &done[&j];
                    let pv = &prow[0].1;
                    let g = pv.gcd(&v);
                    row = combine(&(pv / &g), &row, &(&v / &g), prow);
                    make_primitive(&mut row);
                }
            }
            done.insert(c, row);
        }
        done.into_iter().collect()
    }
}
