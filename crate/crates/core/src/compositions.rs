//! Bounded compositions.
//!
//! `a(n, k, l)`: compositions of `n` into exactly `l` parts in `[1, k]`.
//! `b(n, k, l)`: compositions of `n` into exactly `l` parts in `[0, k]`,
//! the coefficient of `x^n` in `(1 + x + … + x^k)^l`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

type Cache = RwLock<HashMap<(usize, usize, usize), BigUint>>;

fn cache_a() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn cache_b() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn cached(cache: &Cache, key: (usize, usize, usize), compute: impl FnOnce() -> BigUint) -> BigUint {
    if let Some(v) = cache.read().expect("cache lock").get(&key) {
        return v.clone();
    }
    let v = compute();
    cache.write().expect("cache lock").insert(key, v.clone());
    v
}

/// Compositions of `n` into `l` parts, each in `[1, k]`, by dynamic
/// programming over the number of parts.
pub fn count_a(n: usize, k: usize, l: usize) -> BigUint {
    cached(cache_a(), (n, k, l), || {
        // ways[m] = compositions of m into the parts placed so far
        let mut ways = vec![BigUint::zero(); n + 1];
        ways[0] = BigUint::one();
        for _ in 0..l {
            let mut next = vec![BigUint::zero(); n + 1];
            for (m, w) in ways.iter().enumerate() {
                if w.is_zero() {
                    continue;
                }
                for part in 1..=k.min(n - m) {
                    next[m + part] += w;
                }
            }
            ways = next;
        }
        ways.swap_remove(n)
    })
}

/// Compositions of `n` into `l` parts, each in `[0, k]`, as a coefficient of
/// `(1 + x + … + x^k)^l` built by repeated polynomial multiplication.
pub fn count_b(n: usize, k: usize, l: usize) -> BigUint {
    if n > k * l {
        return BigUint::zero();
    }
    cached(cache_b(), (n, k, l), || {
        let mut poly = vec![BigUint::one()];
        for _ in 0..l {
            let mut next = vec![BigUint::zero(); poly.len() + k];
            for (i, c) in poly.iter().enumerate() {
                for j in 0..=k {
                    next[i + j] += c;
                }
            }
            poly = next;
        }
        poly.swap_remove(n)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityKind {
    /// `a(T-1, d+1, i) ≥ a(T, d+1, i)` with `T = C(d+2, 2)`.
    Peak { i: usize },
    /// `b(T-d-1, d, d) - b(T-d, d, d) = b(T-d-1, d, d+1) - b(T-d-2, d, d+1)`.
    Linkage,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub d: usize,
    pub kind: IdentityKind,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub holds: bool,
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, i) = match self.kind {
            IdentityKind::Peak { i } => ("peak", i.to_string()),
            IdentityKind::Linkage => ("linkage", String::new()),
        };
        write!(f, "{},{},{},{},{},{}", name, self.d, i, self.lhs, self.rhs, if self.holds { "ok" } else { "violated" })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("identity,d,i,lhs,rhs,status\n");
        for c in &self.checks {
            s.push_str(&c.to_string());
            s.push('\n');
        }
        s
    }
}

fn signed(x: BigUint) -> BigInt {
    BigInt::from(x)
}

/// Evaluates the peak inequalities and linkage identities for `1 ≤ d ≤ d_max`.
pub fn identity_report(d_max: usize) -> IdentityReport {
    let mut checks = Vec::new();
    for d in 1..=d_max {
        let t = (d + 2) * (d + 1) / 2;
        for i in 1..=d {
            let lhs = signed(count_a(t - 1, d + 1, i));
            let rhs = signed(count_a(t, d + 1, i));
            let holds = lhs >= rhs;
            checks.push(IdentityCheck { d, kind: IdentityKind::Peak { i }, lhs, rhs, holds });
        }
        let lhs = signed(count_b(t - d - 1, d, d)) - signed(count_b(t - d, d, d));
        let rhs = signed(count_b(t - d - 1, d, d + 1)) - signed(count_b(t - d - 2, d, d + 1));
        let holds = lhs == rhs;
        checks.push(IdentityCheck { d, kind: IdentityKind::Linkage, lhs, rhs, holds });
    }
    IdentityReport { checks }
}

/// Like [`identity_report`], but any violated check is an error.
pub fn verify_identities(d_max: usize) -> Result<IdentityReport> {
    if d_max == 0 {
        return Err(Error::InvalidConfig("d_max must be at least 1".into()));
    }
    let report = identity_report(d_max);
    if let Some(bad) = report.checks.iter().find(|c| !c.holds) {
        return Err(Error::IdentityViolated(bad.to_string()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    /// Direct enumeration of all tuples.
    fn brute(n: usize, lo: usize, hi: usize, l: usize) -> u64 {
        fn go(n: usize, lo: usize, hi: usize, l: usize) -> u64 {
            if l == 0 {
                return u64::from(n == 0);
            }
            (lo..=hi.min(n)).map(|p| go(n - p, lo, hi, l - 1)).sum()
        }
        if hi < lo {
            return u64::from(n == 0 && l == 0);
        }
        go(n, lo, hi, l)
    }

    #[test]
    fn small_values() {
        assert_eq!(count_a(3, 2, 2), u(2));
        assert_eq!(count_b(2, 2, 2), u(3));
        assert_eq!(count_a(0, 4, 0), u(1));
        assert_eq!(count_a(2, 4, 0), u(0));
        assert_eq!(count_b(0, 3, 5), u(1));
        assert_eq!(count_a(5, 3, 1), u(0));
        assert_eq!(count_a(6, 3, 1), u(0));
    }

    #[test]
    fn report_passes_and_is_csv() {
        let r = verify_identities(8).unwrap();
        assert_eq!(r.checks.len(), (1..=8).map(|d| d + 1).sum::<usize>());
        let csv = r.to_csv();
        assert!(csv.starts_with("identity,d,i,lhs,rhs,status\npeak,1,1,"));
        assert!(verify_identities(0).is_err());
    }

    #[test]
    fn large_values_stay_exact() {
        // (1 + x)^200 has central coefficient C(200, 100)
        let mut c = BigUint::one();
        for i in 0..100u32 {
            c = c * BigUint::from(200 - i) / BigUint::from(i + 1);
        }
        assert_eq!(count_b(100, 1, 200), c);
    }

    #[test]
    fn unimodal_b_sequences() {
        for k in 1..=8usize {
            for l in 1..=40 / k {
                let seq: Vec<BigUint> = (0..=k * l).map(|n| count_b(n, k, l)).collect();
                let peak = (k * l) / 2;
                assert!(seq[..=peak].windows(2).all(|w| w[0] <= w[1]), "k={k} l={l}");
                assert!(seq[peak..].windows(2).all(|w| w[0] >= w[1]), "k={k} l={l}");
            }
        }
    }

    proptest! {
        #[test]
        fn matches_enumeration(n in 0usize..12, k in 0usize..5, l in 0usize..5) {
            prop_assert_eq!(count_a(n, k, l), u(brute(n, 1, k, l)));
            prop_assert_eq!(count_b(n, k, l), u(brute(n, 0, k, l)));
        }

        #[test]
        fn shift_identity(n in 0usize..=30, k in 0usize..=6, l in 0usize..=8) {
            prop_assert_eq!(count_a(n + l, k + 1, l), count_b(n, k, l));
        }

        #[test]
        fn b_is_symmetric(k in 0usize..6, l in 0usize..7, n in 0usize..40) {
            prop_assume!(n <= k * l);
            prop_assert_eq!(count_b(n, k, l), count_b(k * l - n, k, l));
        }

        #[test]
        fn b_sums_to_power(k in 0usize..6, l in 0usize..8) {
            let total: BigUint = (0..=k * l).map(|n| count_b(n, k, l)).sum();
            prop_assert_eq!(total, BigUint::from(k as u64 + 1).pow(l as u32));
        }
    }
}
