//! The physical protocol step with a finite coherent field, compared with the
//! ideal map. Shows how the exact fixed points drift towards +-1 and how the
//! postselection probability compares with its lower bound.

use tavis_map::map::{apply_map, MapParams};
use tavis_map::quantum::{protocol_step_exact, protocol_step_ideal, ExactStepOperator};
use tavis_map::sphere::ExtendedComplex;

fn main() -> tavis_map::error::Result<()> {
    let p = MapParams::new(0.0);
    let z0 = ExtendedComplex::new(0.4, 0.1).unwrap();

    for nbar in [10.0, 30.0, 100.0] {
        let op = ExactStepOperator::at_default_time(nbar)?;
        let ideal = protocol_step_ideal(z0, &p)?;
        let exact = protocol_step_exact(z0, &p, &op)?;
        println!(
            "nbar {nbar:>5}: gt = {:.4}  ideal {} (p = {:.4})  exact {} (p = {:.4})  distance {:.2e}",
            op.gt,
            ideal.z,
            ideal.p_success,
            exact.z,
            exact.p_success,
            ideal.z.chordal_distance(&exact.z)
        );

        // iterate the exact step to its attracting fixed point on the positive axis
        let mut z = ExtendedComplex::real(0.5);
        for _ in 0..200 {
            z = protocol_step_exact(z, &p, &op)?.z;
        }
        println!("             exact fixed point {z}");
    }
    println!("ideal map sends {z0} to {}", apply_map(z0, &p)?);
    Ok(())
}
