//! Bounded composition counts and the identities behind the Hilbert function
//! of monomial reductions.

use costress::compositions::{self, count_a, count_b};

fn main() -> costress::Result<()> {
    println!("a(n, 3, 3): compositions of n into 3 parts, each in [1, 3]");
    let row: Vec<String> = (0..=10).map(|n| count_a(n, 3, 3).to_string()).collect();
    println!("  n = 0..10: {}", row.join(" "));

    println!("b(n, 2, 4): coefficient of q^n in (1 + q + q²)^4");
    let row: Vec<String> = (0..=8).map(|n| count_b(n, 2, 4).to_string()).collect();
    println!("  n = 0..8: {}", row.join(" "));

    let report = compositions::verify_identities(6)?;
    print!("{}", report.to_csv());
    Ok(())
}
