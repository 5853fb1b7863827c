//! Pairwise and total concurrence of the standard multiqubit states.
//!
//! ```text
//! cargo run -p concurrence --example named_states
//! ```

use concurrence::multipartite::total_concurrence;
use concurrence::state::{anti_w, epr_times_single, ghz, w};
use concurrence::Complex64;

fn main() -> concurrence::Result<()> {
    let alpha = Complex64::new(0.6, 0.0);
    let beta = Complex64::from_polar(0.8, 0.4);
    let states = [
        ("GHZ3", ghz(3)?),
        ("W3", w(3)?),
        ("anti-W3", anti_w(3)?),
        ("EPR x (a|0> + b|1>)", epr_times_single(alpha, beta)?),
    ];

    println!(
        "{:<22} {:>10} {:>10} {:>10} {:>10}",
        "state", "C01", "C02", "C12", "total"
    );
    for (name, psi) in &states {
        let r = total_concurrence(psi)?;
        let p: Vec<String> = r
            .pairwise
            .iter()
            .map(|p| format!("{:>10.6}", p.norm))
            .collect();
        println!("{name:<22} {} {:>10.6}", p.join(" "), r.total);
    }

    println!();
    println!("GHZ_m totals:");
    for m in 2..=8 {
        let r = total_concurrence(&ghz(m)?)?;
        println!("  m = {m}: {:.12}  ({} pairs)", r.total, r.pairwise.len());
    }
    Ok(())
}
