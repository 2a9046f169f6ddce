//! The constants `c_d`: the positive root of `g_d(x) = d + 1`.

use costress::random;

fn main() -> costress::Result<()> {
    println!("d,c_d,c_d/(d+1)");
    for d in 1..=12 {
        let c = random::threshold_cd(d, 1e-12)?;
        println!("{d},{c:.6},{:.6}", c / (d + 1) as f64);
    }
    let d = 2;
    println!("g_{d} sampled on [0, 5]:");
    for i in 0..=10 {
        let x = i as f64 * 0.5;
        println!("  g({x:.1}) = {:.5}", random::g_d(d, x));
    }
    Ok(())
}
