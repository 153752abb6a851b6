//! Monte Carlo discrimination of two nearby states with Gaussian preparation
//! noise. Prints the mean overlap and its spread after every step.

use std::f64::consts::PI;

use tavis_map::experiments::{discrimination_run, DiscriminationSettings, MapKind};
use tavis_map::map::MapParams;
use tavis_map::sphere::ExtendedComplex;

fn main() -> tavis_map::error::Result<()> {
    let s = DiscriminationSettings {
        z1: ExtendedComplex::real(-0.2),
        z2: ExtendedComplex::real(0.2),
        sigma: 0.03,
        samples: 10_000,
        steps: 6,
        seed: 12345,
    };
    for varphi in [0.0, 0.1 * PI] {
        let report = discrimination_run(&s, &MapParams::checked(varphi)?, &MapKind::Ideal)?;
        println!("varphi = {:.2} pi", varphi / PI);
        for st in &report.steps {
            println!(
                "  step {}  overlap {:.5}  rms {:.5}  alive {}",
                st.step, st.mean_overlap, st.rms, st.count
            );
        }
    }
    Ok(())
}
