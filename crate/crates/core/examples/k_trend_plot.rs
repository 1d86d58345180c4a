// ξ against a for k = 1..5 at fixed N, written as CSV and SVG.
//
// `cargo run --example k_trend_plot`
//
// Files go to `$SQUEEZEKIT_OUT_DIR` if set, else the system temp directory.

use std::path::PathBuf;

use squeezekit::squeezing::grid_min_xi;
use squeezekit::sweep::{emit_plot, run_sweep, write_csv, AGrid, KSelection, SweepConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::var_os("SQUEEZEKIT_OUT_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    for n in [20, 100] {
        let config = SweepConfig {
            n_list: vec![n],
            k: KSelection::List((1..=5).collect()),
            a_grid: AGrid {
                start: 0.0,
                stop: 1.0,
                steps: 201,
            },
            ..SweepConfig::default()
        };
        let table = run_sweep(&config)?;
        let csv = dir.join(format!("k_trend_N{n}.csv"));
        let svg = csv.with_extension("svg");
        write_csv(&table, &csv)?;
        emit_plot(&table, &svg)?;
        println!(
            "N = {n}: {} rows -> {}, {}",
            table.rows.len(),
            csv.display(),
            svg.display()
        );
        for k in 1..=5 {
            let m = grid_min_xi(n, k, 201)?;
            println!("  k = {k}: min xi {:.6} at a = {:.3}", m.xi, m.a);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
