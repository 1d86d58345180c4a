// ξ as a function of N and a for fixed k, the data behind a surface plot.
//
// `cargo run --example squeezing_surface`

use squeezekit::squeezing::{xi, xi_closed_form_family};
use squeezekit::FamilyParams;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a_values: Vec<f64> = (0..=10).map(|i| i as f64 / 10.0).collect();
    for k in [1, 2] {
        println!("k = {k}");
        print!("{:>5}", "N\\a");
        for a in &a_values {
            print!("{a:>8.1}");
        }
        println!();
        for n in [4, 10, 20, 50, 100] {
            print!("{n:>5}");
            for &a in &a_values {
                let rep = xi_closed_form_family(&FamilyParams::new(n, k, a)?)?;
                match rep.xi {
                    Some(x) => print!("{x:>8.4}"),
                    None => print!("{:>8}", "-"),
                }
            }
            println!();
        }
    }

    // The generic Bloch-vector route gives the same numbers.
    let p = FamilyParams::new(30, 3, 0.35)?;
    let generic = xi(&p)?;
    let closed = xi_closed_form_family(&p)?;
    println!(
        "N=30 k=3 a=0.35: generic {:.12}, closed form {:.12}, squeezed {}",
        generic.xi_value()?,
        closed.xi_value()?,
        generic.squeezed
    );
    if let Some(dir) = generic.n_min {
        println!(
            "minimal-variance direction ({:.4}, {:.4}, {:.4})",
            dir[0], dir[1], dir[2]
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
