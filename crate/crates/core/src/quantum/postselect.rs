//! Field measurements that postselect the atoms: projection onto the initial
//! coherent state, and balanced homodyne detection.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use super::atoms::{product_index, Mat4, ZERO};
use super::evolution::f_state_rotation;

/// `M = |Psi-><Psi-| + |Phi-><Phi-|` with
/// `|Phi-> = (e^{-i phi}|0,0> - e^{i phi}|1,1>)/sqrt 2`, in the product basis
/// `|1,1>, |1,0>, |0,1>, |0,0>`.
pub fn ideal_postselection_operator(phi: f64) -> Mat4 {
    let mut psi = [ZERO; 4];
    psi[product_index(0, 1)] = Complex64::new(FRAC_1_SQRT_2, 0.0);
    psi[product_index(1, 0)] = Complex64::new(-FRAC_1_SQRT_2, 0.0);
    let mut phi_v = [ZERO; 4];
    phi_v[product_index(0, 0)] = Complex64::from_polar(FRAC_1_SQRT_2, -phi);
    phi_v[product_index(1, 1)] = -Complex64::from_polar(FRAC_1_SQRT_2, phi);

    let mut m = [[ZERO; 4]; 4];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = psi[i] * psi[j].conj() + phi_v[i] * phi_v[j].conj();
        }
    }
    m
}

/// Local-oscillator phase and measured quadrature value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HomodyneSpec {
    pub theta: f64,
    pub q: f64,
}

/// Mean of `q_theta = (a e^{-i theta} + a^dag e^{i theta})/sqrt 2` in `|alpha>`.
pub fn quadrature_mean(theta: f64, alpha: Complex64) -> f64 {
    2f64.sqrt() * (alpha * Complex64::from_polar(1.0, -theta)).re
}

/// `|<q_theta|alpha>|^2 = exp(-(q - q~_theta)^2) / sqrt(pi)`
pub fn homodyne_density(h: &HomodyneSpec, alpha: Complex64) -> f64 {
    let d = h.q - quadrature_mean(h.theta, alpha);
    (-d * d).exp() / PI.sqrt()
}

/// Which of the two counter-rotating field components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rotation {
    Plus,
    Minus,
}

/// Homodyne density of `F^{+-}` for a field of mean photon number `nbar`
/// after interaction time `gt`: the coherent-state density evaluated at the
/// shifted phase `Theta^{+-} = theta -+ delta`.
pub fn homodyne_density_f_state(
    h: &HomodyneSpec,
    alpha: Complex64,
    nbar: f64,
    gt: f64,
    which: Rotation,
) -> f64 {
    let delta = f_state_rotation(nbar, gt);
    let theta = match which {
        Rotation::Plus => h.theta - delta,
        Rotation::Minus => h.theta + delta,
    };
    homodyne_density(&HomodyneSpec { theta, q: h.q }, alpha)
}

/// Local-oscillator phase for which `|alpha>` has zero mean quadrature.
pub fn null_quadrature_phase(alpha: Complex64) -> f64 {
    alpha.arg() + PI / 2.0
}
