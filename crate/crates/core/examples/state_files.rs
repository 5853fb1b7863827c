//! Writing a state file, reading it back, and producing the text and JSON
//! reports that the `compute` command prints.
//!
//! ```text
//! cargo run -p concurrence --example state_files
//! ```

use concurrence::io::{ReportDocument, StateFile};
use concurrence::state::gw_superposition;
use concurrence::DEFAULT_SEPARABILITY_TOL;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let psi = gw_superposition(0.25, 1.0)?;
    let file = StateFile::from_state(&psi);
    let json = file.to_json();
    println!("{json}");

    let back = StateFile::parse(&json)?.to_state()?;
    let doc = ReportDocument::build(&back, DEFAULT_SEPARABILITY_TOL)?;
    print!("{}", doc.to_text());
    println!();
    print!("{}", doc.to_json());

    let broken = "{\n  \"dims\": [2, 2],\n  \"amps\": [],\n  \"colour\": \"red\"\n}";
    match StateFile::parse(broken) {
        Ok(_) => unreachable!("unknown keys are rejected"),
        Err(e) => println!("\nrejected: {e}"),
    }
    Ok(())
}
