//! Multiplier moduli of the fixed points across the angle, and where
//! higher-period attractors appear.

use std::f64::consts::PI;

use tavis_map::experiments::phi_sweep;
use tavis_map::map::CycleSearch;

fn main() -> tavis_map::error::Result<()> {
    let n = 200;
    let grid: Vec<f64> = (0..n).map(|i| (i as f64 + 0.5) / n as f64 * PI / 2.0).collect();
    let rows = phi_sweep(&grid, &CycleSearch::default())?;

    println!("{:>8} {:>10} {:>10}  cycles", "phi/pi", "|l(0)|", "|l(+-1)|");
    let mut last = Vec::new();
    for r in &rows {
        let periods: Vec<usize> = r.cycles.iter().map(|c| c.0).collect();
        // print only where the attractor structure changes
        if periods != last {
            println!(
                "{:>8.4} {:>10.5} {:>10.5}  {:?}",
                r.varphi / PI,
                r.abs_lambda_zero,
                r.abs_lambda_plus,
                r.cycles
            );
            last = periods;
        }
    }
    Ok(())
}
