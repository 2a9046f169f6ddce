//! Linial–Meshulam random complexes `Y_d(n, p)` and Monte Carlo estimates of
//! `P(H̃_d ≠ 0)` and of WLP failure, plus the threshold constants `c_d`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::artinian::{self, ArtinianSpec, Verdict};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology;
use crate::linalg::Field;

pub const DEFAULT_WLP_BUDGET: usize = 50_000;

#[derive(Debug, Clone, PartialEq)]
pub struct LMConfig {
    pub n: usize,
    pub d: usize,
    pub p: f64,
    pub trials: usize,
    pub seed: u64,
    pub field: Field,
    /// Largest `rows × cols` of a multiplication matrix that `wlp_direct`
    /// will evaluate; bigger samples are skipped and counted.
    pub wlp_budget: usize,
}

impl LMConfig {
    pub fn new(n: usize, d: usize, p: f64, trials: usize, seed: u64) -> Result<Self> {
        let cfg = LMConfig { n, d, p, trials, seed, field: Field::Rationals, wlp_budget: DEFAULT_WLP_BUDGET };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_field(mut self, field: Field) -> Self {
        self.field = field;
        self
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.wlp_budget = budget;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidConfig(format!("p = {} is not in [0, 1]", self.p)));
        }
        if self.d < 1 {
            return Err(Error::InvalidConfig("d must be at least 1".into()));
        }
        if self.n < self.d + 2 {
            return Err(Error::InvalidConfig(format!("n = {} is smaller than d + 2 = {}", self.n, self.d + 2)));
        }
        Ok(())
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// One uniform draw per `d`-face in lexicographic order from a ChaCha8
/// stream selected by `trial`, so the sample for a given `(seed, trial)` is
/// fixed and samples at different `p` are coupled.
pub fn sample_complex(cfg: &LMConfig, trial: u64) -> Result<SimplicialComplex> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(trial);
    let mut faces = subsets(cfg.n, cfg.d);
    for face in subsets(cfg.n, cfg.d + 1) {
        let u: f64 = rng.gen();
        if u < cfg.p {
            faces.push(face);
        }
    }
    let labels = (0..cfg.n as i64).collect();
    Ok(SimplicialComplex::from_indexed(labels, faces))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonteCarloMode {
    /// `β̃_d(Y) > 0`.
    Homology,
    /// The guaranteed-failure criterion applies.
    WlpCriterion,
    /// The multiplication maps by `L` with caps `d + 2` are not all of full rank.
    WlpDirect,
}

impl fmt::Display for MonteCarloMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonteCarloMode::Homology => "homology",
            MonteCarloMode::WlpCriterion => "wlp_criterion",
            MonteCarloMode::WlpDirect => "wlp_direct",
        })
    }
}

impl FromStr for MonteCarloMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "homology" => Ok(MonteCarloMode::Homology),
            "wlp_criterion" | "wlp-criterion" | "criterion" => Ok(MonteCarloMode::WlpCriterion),
            "wlp_direct" | "wlp-direct" | "direct" => Ok(MonteCarloMode::WlpDirect),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialOutcome {
    pub f_d: usize,
    /// `None` when the sample exceeded the `wlp_direct` budget.
    pub hit: Option<bool>,
}

fn largest_map(dims: &[usize]) -> usize {
    dims.windows(2).map(|w| w[0] * w[1]).max().unwrap_or(0)
}

pub fn trial_outcome(cfg: &LMConfig, mode: MonteCarloMode, trial: u64) -> Result<TrialOutcome> {
    let y = sample_complex(cfg, trial)?;
    let f_d = y.faces(cfg.d as isize).len();
    let hit = match mode {
        MonteCarloMode::Homology => Some(f_d > 0 && homology::top_betti(&y, cfg.field)? > 0),
        MonteCarloMode::WlpCriterion => Some(y.dim() == cfg.d as isize && artinian::guaranteed_failure(&y, cfg.field)?.applies),
        MonteCarloMode::WlpDirect => {
            let spec = ArtinianSpec::uniform(y, cfg.d as u32 + 2, cfg.field)?;
            let dims = artinian::hilbert_function(&spec, None)?;
            if largest_map(&dims) > cfg.wlp_budget {
                None
            } else {
                Some(artinian::lefschetz_verdict(&spec, 1)?.verdict_wlp == Verdict::Fails)
            }
        }
    };
    Ok(TrialOutcome { f_d, hit })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonteCarloReport {
    pub trials: usize,
    pub hits: usize,
    /// Trials not evaluated because they exceeded the `wlp_direct` budget.
    pub skipped: usize,
    /// `hits / (trials - skipped)`.
    pub estimate: BigRational,
    pub mean_fd: BigRational,
    pub mode: MonteCarloMode,
}

impl MonteCarloReport {
    pub const CSV_HEADER: &'static str = "mode,n,d,p,trials,seed,field,hits,skipped,estimate,mean_fd";

    pub fn csv_row(&self, cfg: &LMConfig) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.mode, cfg.n, cfg.d, cfg.p, self.trials, cfg.seed, cfg.field, self.hits, self.skipped, self.estimate, self.mean_fd
        )
    }
}

/// Runs `cfg.trials` independent samples in parallel. Fails only when every
/// trial was skipped by the `wlp_direct` budget.
pub fn monte_carlo(cfg: &LMConfig, mode: MonteCarloMode) -> Result<MonteCarloReport> {
    cfg.validate()?;
    let outcomes: Vec<TrialOutcome> = (0..cfg.trials as u64).into_par_iter().map(|t| trial_outcome(cfg, mode, t)).collect::<Result<_>>()?;
    let hits = outcomes.iter().filter(|o| o.hit == Some(true)).count();
    let skipped = outcomes.iter().filter(|o| o.hit.is_none()).count();
    let evaluated = cfg.trials - skipped;
    if cfg.trials > 0 && evaluated == 0 {
        return Err(Error::BudgetExceeded(cfg.wlp_budget));
    }
    let estimate = if evaluated == 0 { BigRational::from_integer(0.into()) } else { BigRational::new(hits.into(), evaluated.into()) };
    let total_fd: usize = outcomes.iter().map(|o| o.f_d).sum();
    let mean_fd = if cfg.trials == 0 { BigRational::from_integer(0.into()) } else { BigRational::new(BigInt::from(total_fd), BigInt::from(cfg.trials)) };
    Ok(MonteCarloReport { trials: cfg.trials, hits, skipped, estimate, mean_fd, mode })
}

/// `g_d(x) = (d+1)(x+1)e^{-x} + x(1 - e^{-x})^{d+1}`.
pub fn g_d(d: usize, x: f64) -> f64 {
    let e = (-x).exp();
    (d as f64 + 1.0) * (x + 1.0) * e + x * (1.0 - e).powi(d as i32 + 1)
}

/// The positive root of `g_d(x) = d + 1`, with `c_1 = 1`.
pub fn threshold_cd(d: usize, tol: f64) -> Result<f64> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidTolerance(tol));
    }
    if d == 0 {
        return Err(Error::InvalidConfig("d must be at least 1".into()));
    }
    if d == 1 {
        return Ok(1.0);
    }
    let target = d as f64 + 1.0;
    let h = |x: f64| g_d(d, x) - target;
    let mut lo = 1e-6;
    let mut hi = 2.0 * lo;
    while h(hi) < 0.0 {
        lo = hi;
        hi *= 2.0;
        if hi > 1e6 {
            return Err(Error::InvalidConfig(format!("no sign change found for d = {d}")));
        }
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if h(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
