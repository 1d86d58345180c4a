// Driving a sweep from config text, with the scan oracle cross-checking
// every row.
//
// `cargo run --example sweep_config`

use squeezekit::sweep::{emit_csv, run_sweep, SweepConfig};

const CONFIG: &str = "\
# cross-check a small grid
N = 6, 12..14
k = all
k_max = 3
a_grid = 0.05:0.95:7
mode = crosscheck
jobs = 2
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut config = SweepConfig::default();
    config.apply_text(CONFIG, "inline")?;
    config.validate()?;
    let table = run_sweep(&config)?;
    table.check_oracle(config.crosscheck_tolerance)?;
    println!(
        "{} rows, max oracle difference {:.1e}",
        table.rows.len(),
        table.max_oracle_diff().unwrap_or(0.0)
    );
    let mut head = Vec::new();
    emit_csv(&table, &mut head)?;
    for line in String::from_utf8(head)?.lines().take(8) {
        println!("{line}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
