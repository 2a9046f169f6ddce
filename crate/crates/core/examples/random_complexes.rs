//! Monte Carlo estimates on Linial–Meshulam complexes `Y_2(8, p)`.
//!
//!     cargo run --release --example random_complexes [trials] [seed]
//!
//! The direct WLP check runs with a budget large enough for every sample;
//! the library default skips the larger ×L maps.

use costress::random::{self, LMConfig, MonteCarloMode, MonteCarloReport};

fn main() -> costress::Result<()> {
    let mut args = std::env::args().skip(1);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(100);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    println!("{}", MonteCarloReport::CSV_HEADER);
    for p in [0.2, 0.4, 0.6, 0.8] {
        let cfg = LMConfig::new(8, 2, p, trials, seed)?.with_budget(1_000_000);
        for mode in [MonteCarloMode::Homology, MonteCarloMode::WlpCriterion, MonteCarloMode::WlpDirect] {
            println!("{}", random::monte_carlo(&cfg, mode)?.csv_row(&cfg));
        }
    }
    let y = random::sample_complex(&LMConfig::new(8, 2, 0.5, 1, seed)?, 0)?;
    println!("one sample at p = 0.5 has f = {:?}", y.fhg_vectors().f);
    Ok(())
}
