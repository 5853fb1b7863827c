//! Pairwise norms under random local unitaries and subsystem relabeling.
//!
//! ```text
//! cargo run -p concurrence --example local_invariance
//! ```

use concurrence::multipartite::total_concurrence;
use concurrence::state::{random_state, random_unitary};

fn main() -> concurrence::Result<()> {
    let dims = [2, 3, 2, 2];
    let psi = random_state(&dims, 2024)?;
    let base = total_concurrence(&psi)?;
    println!("original:");
    for p in &base.pairwise {
        println!("  C{}{} = {:.12}", p.i, p.j, p.norm);
    }
    println!("  total = {:.12}", base.total);

    for (axis, &d) in dims.iter().enumerate() {
        let u = random_unitary(d, 100 + axis as u64);
        let moved = total_concurrence(&psi.apply_local(axis, &u)?)?;
        let worst = base
            .pairwise
            .iter()
            .zip(&moved.pairwise)
            .map(|(a, b)| (a.norm - b.norm).abs())
            .fold(0.0, f64::max);
        println!("unitary on subsystem {axis}: max pairwise change {worst:.2e}");
    }

    let perm = [3, 1, 0, 2];
    let relabeled = total_concurrence(&psi.permute(&perm)?)?;
    println!("relabeled by {perm:?}: total {:.12}", relabeled.total);
    for p in &relabeled.pairwise {
        let (a, b) = (perm[p.i].min(perm[p.j]), perm[p.i].max(perm[p.j]));
        println!("  C{}{} = {:.12} (was C{a}{b})", p.i, p.j, p.norm);
    }
    Ok(())
}
