//! The two-party concurrence vector next to the measures it reproduces:
//! the minor formula, I-concurrence, the local-invariant form, Wootters'
//! two-qubit formula, entanglement entropy and entanglement of formation.
//!
//! ```text
//! cargo run -p concurrence --example bipartite_measures
//! ```

use concurrence::bipartite::{
    concurrence_closed_form, concurrence_vector, eof, fei_concurrence, i_concurrence,
    von_neumann_entropy, wootters_two_qubit,
};
use concurrence::state::random_state;
use concurrence::{Complex64, PureState};

fn describe(name: &str, psi: &PureState) -> concurrence::Result<()> {
    let v = concurrence_vector(psi)?;
    println!("{name} (dims {:?})", psi.dims());
    println!("  components ({}x{}):", v.shape().0, v.shape().1);
    for a in 0..v.shape().0 {
        let row: Vec<String> = (0..v.shape().1)
            .map(|b| {
                let c = v.component(a, b);
                format!("{:+.4}{:+.4}i", c.re, c.im)
            })
            .collect();
        println!("    {}", row.join("  "));
    }
    println!("  vector norm      {:.12}", v.norm());
    println!("  closed form      {:.12}", concurrence_closed_form(psi)?);
    println!("  I-concurrence    {:.12}", i_concurrence(psi)?);
    println!("  local-invariant  {:.12}", fei_concurrence(psi)?);
    if psi.dims() == [2, 2] {
        println!("  Wootters         {:.12}", wootters_two_qubit(psi)?);
    }
    println!("  entropy (bits)   {:.12}", von_neumann_entropy(psi)?);
    if let Ok(e) = eof(psi) {
        println!("  EoF (bits)       {e:.12}");
    }
    println!();
    Ok(())
}

fn main() -> concurrence::Result<()> {
    let skewed = PureState::new(
        vec![2, 2],
        vec![
            Complex64::new(0.9f64.sqrt(), 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.1f64.sqrt(), 0.0),
        ],
    )?;
    describe("sqrt(0.9)|00> + sqrt(0.1)|11>", &skewed)?;
    describe("random 2x3", &random_state(&[2, 3], 42)?)?;
    describe("random 3x4", &random_state(&[3, 4], 7)?)?;

    let n = 4;
    let diag: Vec<Complex64> = (0..n * n)
        .map(|x| Complex64::new(if x / n == x % n { 1.0 } else { 0.0 }, 0.0))
        .collect();
    describe(
        "maximally entangled 4x4",
        &PureState::normalized(vec![n, n], diag)?,
    )?;
    Ok(())
}
