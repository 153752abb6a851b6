//! Number of prepared state pairs needed for n postselected iterations.

use std::f64::consts::PI;

use tavis_map::experiments::resource_estimate;

fn main() -> tavis_map::error::Result<()> {
    println!("{:>4} {:>10} {:>24}", "n", "varphi/pi", "pairs");
    for frac in [0.0, 0.1, 0.2] {
        for n in [1, 3, 5, 10] {
            let r = resource_estimate(n, frac * PI)?;
            println!("{:>4} {:>10} {:>24}", r.iterations, frac, r.pairs);
        }
    }
    Ok(())
}
