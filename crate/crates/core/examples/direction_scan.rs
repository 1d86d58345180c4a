// Brute-force ξ from collective spin operators, compared with the
// two-qubit closed form.
//
// `cargo run --example direction_scan`

use squeezekit::angular::collective_spin;
use squeezekit::squeezing::{
    xi_closed_form_family, xi_direction_scan, xi_direction_scan_with, ScanOptions,
};
use squeezekit::state::canonical_amplitudes;
use squeezekit::{DickeVector, FamilyParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // A plain Dicke state |N/2, N/2 - 1> is not squeezed.
    let w = xi_direction_scan(&DickeVector::basis(10, 1)?, 1e-10)?;
    println!(
        "W-like Dicke state, N = 10: xi = {:.9} (sqrt(28/10) = {:.9})",
        w.xi_value()?,
        2.8f64.sqrt()
    );

    // Reuse one spin-operator set across a grid.
    let n = 40;
    let spin = collective_spin(n)?;
    let opts = ScanOptions::default();
    println!("N = {n}, k = 4");
    for a in [0.1, 0.2, 0.3, 0.5, 0.8] {
        let p = FamilyParams::new(n, 4, a)?;
        let scan = xi_direction_scan_with(&spin, &canonical_amplitudes(&p), opts)?;
        let closed = xi_closed_form_family(&p)?;
        println!(
            "  a = {a:.1}: scan {:.10}, closed {:.10}, |diff| {:.1e}",
            scan.xi_value()?,
            closed.xi_value()?,
            (scan.xi_value()? - closed.xi_value()?).abs()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
