//! Sparse Gaussian elimination over a prime field `F_p`, `p < 2^31`.

use std::collections::BTreeMap;

pub(crate) type SparseRow = Vec<(usize, u64)>;

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    pow(a, p - 2, p)
}

pub(crate) fn pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// `a - s * b` for sorted sparse rows.
fn sub_scaled(a: &[(usize, u64)], s: u64, b: &[(usize, u64)], p: u64) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |e| e.0);
        let cb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ca < cb {
            out.push(a[i]);
            i += 1;
        } else if cb < ca {
            let v = (p - s * b[j].1 % p) % p;
            if v != 0 {
                out.push((cb, v));
            }
            j += 1;
        } else {
            let v = (a[i].1 + p - s * b[j].1 % p) % p;
            if v != 0 {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row echelon form built one row at a time. A new row is reduced against
/// the stored pivots from left to right; if anything survives, its leading
/// column becomes a new pivot with leading coefficient 1.
pub(crate) struct Echelon {
    p: u64,
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new(p: u64) -> Self {
        Echelon { p, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Returns true if the row was independent of the previous ones.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        let p = self.p;
        loop {
            let Some(&(lead, val)) = row.first() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(prow) => row = sub_scaled(&row, val, prow, p),
                None => {
                    let s = inv(val, p);
                    for e in row.iter_mut() {
                        e.1 = e.1 * s % p;
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// Reduced row echelon form: `(pivot column, row)` sorted by pivot.
    pub fn into_reduced(self) -> Vec<(usize, SparseRow)> {
        let p = self.p;
        let mut done: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for (&c, row) in self.pivots.iter().rev() {
            let mut row = row.clone();
            let hits: Vec<usize> = row.iter().skip(1).map(|e| e.0).filter(|j| done.contains_key(j)).collect();
            for j in hits {
                if let Some(&(_, v)) = row.iter().find(|e| e.0 == j) {
                    row = sub_scaled(&row, v, &done[&j], p);
                }
            }
            done.insert(c, row);
        }
        done.into_iter().collect()
    }
}
