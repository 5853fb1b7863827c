//! SO(N) generators, their Levi-Civita signs, and the completeness relation
//! Σ_α L_α[k,l] L_α[k',l'] = δ_kk' δ_ll' − δ_kl' δ_k'l.
//!
//! ```text
//! cargo run -p concurrence --example generators -- 4
//! ```

use concurrence::son::enumerate_generators;

fn main() -> concurrence::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);
    let gens = enumerate_generators(n)?;
    println!("SO({n}): {} generators", gens.len());
    for (alpha, g) in gens.iter().enumerate() {
        println!(
            "  alpha = {alpha}: support ({}, {}), sign {:+}",
            g.k, g.l, g.sign
        );
        for r in 0..n {
            let row: Vec<String> = (0..n).map(|c| format!("{:>3}", g.entry(r, c))).collect();
            println!("      {}", row.join(""));
        }
    }

    let mut violations = 0;
    for k in 0..n {
        for l in 0..n {
            for k2 in 0..n {
                for l2 in 0..n {
                    let sum: i32 = gens.iter().map(|g| g.entry(k, l) * g.entry(k2, l2)).sum();
                    let d = |a: usize, b: usize| i32::from(a == b);
                    if sum != d(k, k2) * d(l, l2) - d(k, l2) * d(k2, l) {
                        violations += 1;
                    }
                }
            }
        }
    }
    println!(
        "completeness relation: {} of {} index tuples violated",
        violations,
        n.pow(4)
    );
    Ok(())
}
