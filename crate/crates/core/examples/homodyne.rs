//! Homodyne densities of the initial coherent field and of the two rotated
//! components produced by the interaction, at the quadrature where the
//! coherent state is centred on zero.

use num_complex::Complex64;
use tavis_map::quantum::postselect::null_quadrature_phase;
use tavis_map::quantum::{
    coherent_approx_fields, default_gt, homodyne_density, homodyne_density_f_state,
    AtomPairState, CoherentFieldSpec, HomodyneSpec, Rotation,
};

fn main() -> tavis_map::error::Result<()> {
    let nbar = 100.0;
    let gt = default_gt(nbar);
    let field = CoherentFieldSpec::new(nbar, 0.0)?;
    let alpha = field.alpha();
    let theta = null_quadrature_phase(alpha);

    let h = Complex64::new(0.5f64.sqrt(), 0.0);
    let atom = AtomPairState::product([h, h], [h, h]);
    let fields = coherent_approx_fields(&atom, &field, gt);
    println!("nbar {nbar}, gt {gt:.4}, rotation {:.4} rad", fields.rotation);
    for w in &fields.warnings {
        println!("warning: {w:?}");
    }

    println!("{:>6} {:>12} {:>12} {:>12}", "q", "coherent", "F+", "F-");
    for i in 0..=32 {
        let q = -16.0 + i as f64;
        let h = HomodyneSpec { theta, q };
        println!(
            "{q:>6.1} {:>12.4e} {:>12.4e} {:>12.4e}",
            homodyne_density(&h, alpha),
            homodyne_density_f_state(&h, alpha, nbar, gt, Rotation::Plus),
            homodyne_density_f_state(&h, alpha, nbar, gt, Rotation::Minus)
        );
    }
    Ok(())
}
