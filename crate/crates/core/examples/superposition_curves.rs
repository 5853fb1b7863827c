//! Pairwise concurrence along the W/anti-W and GHZ/W superpositions,
//! compared with their analytic curves, for several phases.
//!
//! ```text
//! cargo run -p concurrence --example superposition_curves
//! ```

use concurrence::multipartite::pairwise_norm;
use concurrence::state::{gw_superposition, ww_superposition};
use std::f64::consts::PI;

fn main() -> concurrence::Result<()> {
    let phis = [0.0, PI / 3.0, PI];
    println!(
        "{:>5} {:>8} {:>12} {:>12} {:>12} {:>12}",
        "s", "phi", "C(ww)", "analytic", "C(gw)", "analytic"
    );
    for k in 0..=10 {
        let s = k as f64 / 10.0;
        let ww_curve = 2.0 / 3.0 * (1.5 * s * (s - 1.0) + 1.0).sqrt();
        let gw_curve = (s * (5.0 * s - 4.0) + 8.0).sqrt() / (3.0 * 2f64.sqrt());
        for phi in phis {
            let ww = pairwise_norm(&ww_superposition(s, phi)?, 0, 1)?;
            let gw = pairwise_norm(&gw_superposition(s, phi)?, 0, 1)?;
            println!("{s:>5.2} {phi:>8.4} {ww:>12.9} {ww_curve:>12.9} {gw:>12.9} {gw_curve:>12.9}");
        }
    }
    Ok(())
}
