// Two-spinor symmetric states in the Dicke basis.
//
// `cargo run --example family_states`

use squeezekit::state::{canonical_amplitudes, full_tensor, two_spinor_expansion};
use squeezekit::{FamilyParams, Spinor};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // N = 6 qubits, k = 2 of them in the tilted spinor.
    let params = FamilyParams::new(6, 2, 0.6)?;
    let state = canonical_amplitudes(&params);
    println!(
        "N = {}, k = {}, a = {}, b = {:.4}",
        params.n(),
        params.k(),
        params.a(),
        params.b()
    );
    for (r, beta) in state.amps().iter().enumerate() {
        println!("  beta_{r} = {beta:+.6}");
    }

    // The same state from an explicit spinor pair.
    let eps2 = Spinor::canonical(0.6)?;
    let other = two_spinor_expansion(&Spinor::zero(), &eps2, 6, 2)?;
    let diff = state
        .amps()
        .iter()
        .zip(other.amps())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    println!("spinor-pair route agrees to {diff:.1e}");

    // Embedding in the 2^N space is exchange symmetric and projects back.
    let full = full_tensor(&state)?;
    println!(
        "2^N embedding: {} amplitudes, asymmetry {:.1e}",
        full.amps().len(),
        full.exchange_asymmetry()
    );
    let back = full.project()?;
    println!("projects back: {}", back.amps().len() == state.amps().len());

    println!("json: {}", serde_json::to_string(&state)?);

    // Large N stays finite thanks to log-space weights.
    let big = canonical_amplitudes(&FamilyParams::new(10_000, 5, 0.3)?);
    let nonzero = big.amps().iter().filter(|x| **x != 0.0).count();
    println!("N = 10000, k = 5: {nonzero} nonzero amplitudes");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
