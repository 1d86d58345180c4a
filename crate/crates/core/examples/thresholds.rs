// Where squeezing sets in, and how deep it gets, for each (N, k).
//
// `cargo run --example thresholds`

use squeezekit::squeezing::{refined_min_xi, squeezing_threshold, Side, Threshold};
use squeezekit::sweep::{emit_thresholds, threshold_table};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (n, k) in [(10, 1), (10, 3), (10, 5), (60, 2)] {
        let min = refined_min_xi(n, k, 201)?;
        let low = squeezing_threshold(n, k, Side::Low)?;
        let high = squeezing_threshold(n, k, Side::High)?;
        let show = |t: Threshold| match t {
            Threshold::Crossing(a) => format!("crosses at a = {a:.6}"),
            Threshold::Endpoint(a) => format!("squeezed up to a = {a}"),
            Threshold::DegenerateEndpoint(a) => format!("undefined at a = {a}"),
        };
        println!(
            "N={n:>3} k={k}: min xi {:.6} at a = {:.4}; low side {}; high side {}",
            min.xi,
            min.a,
            show(low),
            show(high)
        );
    }

    let pairs: Vec<(usize, usize)> = (1..=4).map(|k| (24, k)).collect();
    emit_thresholds(&threshold_table(&pairs, None)?, std::io::stdout().lock())?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
