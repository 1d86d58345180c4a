// Two-qubit reduced density matrix by three independent routes.
//
// `cargo run --example reduced_density`

use squeezekit::reduction::{
    reduced_bruteforce, reduced_closed_form, reduced_dicke_trace, reduced_k2,
};
use squeezekit::state::{canonical_amplitudes, full_tensor};
use squeezekit::FamilyParams;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let params = FamilyParams::new(8, 2, 0.45)?;
    let state = canonical_amplitudes(&params);

    let closed = reduced_closed_form(&params);
    let ladder = reduced_dicke_trace(&state)?;
    let brute = reduced_bruteforce(&full_tensor(&state)?)?;
    let printed = reduced_k2(&params)?;

    println!("{}", serde_json::to_string_pretty(&closed)?);
    println!("ladder trace  diff {:.1e}", closed.max_diff(&ladder));
    println!("2^N trace     diff {:.1e}", closed.max_diff(&brute));
    println!("k = 2 formula diff {:.1e}", closed.max_diff(&printed));
    println!(
        "trace {:.15}, min eigenvalue {:.3e}",
        closed.trace(),
        closed.min_eigenvalue()
    );
    println!("{:.6}", closed.to_matrix());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
