//! One step of the protocol: two copies of `|psi>`, gate on atom B,
//! interaction with the cavity, projection of the field on `|alpha>` and of
//! atom B on `|0>`. Atom A is left in `|psi'>` with `z' = f_varphi(z)`
//! (ideally) or a nearby value (exact evolution, finite `nbar`).

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use super::atoms::{mat2_vec, mat4_vec, product_index, protocol_gate, AtomPairState, Mat4, ZERO};
use super::evolution::evolve_exact;
use super::field::CoherentFieldSpec;
use super::postselect::ideal_postselection_operator;
use crate::error::{Error, Result};
use crate::map::MapParams;
use crate::sphere::ExtendedComplex;

/// Norm below which the postselected state counts as a null outcome.
pub const NULL_NORM: f64 = 1e-14;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StepOutcome {
    pub z: ExtendedComplex,
    /// Probability of the successful postselection (field and atom B).
    pub p_success: f64,
}

/// Interaction time `gt = pi sqrt(nbar) / 2` at which the two rotated field
/// components coincide and leave `|alpha>` as far as possible.
pub fn default_gt(nbar: f64) -> f64 {
    PI * nbar.sqrt() / 2.0
}

/// Two-atom product state `|psi>_A (x) G|psi>_B` in the product basis,
/// with field phase zero.
fn gated_pair(z: ExtendedComplex, varphi: f64) -> [Complex64; 4] {
    let a = z.spinor();
    let b = mat2_vec(&protocol_gate(varphi), a);
    let mut v = [ZERO; 4];
    for i in 0..2 {
        for j in 0..2 {
            v[product_index(i, j)] = a[i] * b[j];
        }
    }
    v
}

/// Projects atom B on `|0>` and reads off atom A.
fn finish(v: [Complex64; 4]) -> Result<StepOutcome> {
    let a0 = v[product_index(0, 0)];
    let a1 = v[product_index(1, 0)];
    let p_success = a0.norm_sqr() + a1.norm_sqr();
    let norm = p_success.sqrt();
    if !(norm >= NULL_NORM) {
        return Err(Error::NullOutcome { norm });
    }
    let z = ExtendedComplex::from_spinor(a0, a1).ok_or(Error::NullOutcome { norm })?;
    Ok(StepOutcome { z, p_success })
}

/// Ideal step through the rank-two projector.
pub fn protocol_step_ideal(z: ExtendedComplex, p: &MapParams) -> Result<StepOutcome> {
    p.ensure_regular()?;
    let m = ideal_postselection_operator(0.0);
    finish(mat4_vec(&m, &gated_pair(z, p.varphi())))
}

/// `Q1^2 / 2` with `Q1^2 = |c-|^2 + |d^-|^2`, from the step amplitudes alone.
/// Bounded below by `cos^2(varphi) / 4`.
pub fn ideal_success_probability(atom: &AtomPairState, phi: f64) -> f64 {
    let e = Complex64::from_polar(1.0, phi);
    let d_minus = (e * atom.c0 - e.conj() * atom.c1) * FRAC_1_SQRT_2;
    0.5 * (atom.cminus.norm_sqr() + d_minus.norm_sqr())
}

/// `M_jk = <alpha|<e_j| exp(-iHt) |e_k>|alpha>` in the basis
/// `|1,1>, |1,0>, |0,1>, |0,0>`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactStepOperator {
    pub m: Mat4,
    pub nbar: f64,
    pub gt: f64,
}

impl ExactStepOperator {
    /// Operator for field phase zero at the default interaction time.
    pub fn at_default_time(nbar: f64) -> Result<Self> {
        exact_step_operator(&CoherentFieldSpec::new(nbar, 0.0)?, default_gt(nbar))
    }
}

/// Builds the operator column by column: each basis state is evolved exactly
/// and the field projected on `|alpha>` with the truncated series.
pub fn exact_step_operator(field: &CoherentFieldSpec, gt: f64) -> Result<ExactStepOperator> {
    let mut m = [[ZERO; 4]; 4];
    for k in 0..4 {
        let mut e = [ZERO; 4];
        e[k] = Complex64::new(1.0, 0.0);
        let joint = evolve_exact(&AtomPairState::from_product(e), field, gt)?;
        let col = joint.project_on_coherent().to_product();
        for (j, x) in col.into_iter().enumerate() {
            m[j][k] = x;
        }
    }
    Ok(ExactStepOperator {
        m,
        nbar: field.nbar(),
        gt,
    })
}

/// Exact step with the operator `op` in place of the ideal projector.
pub fn protocol_step_exact(
    z: ExtendedComplex,
    p: &MapParams,
    op: &ExactStepOperator,
) -> Result<StepOutcome> {
    p.ensure_regular()?;
    finish(mat4_vec(&op.m, &gated_pair(z, p.varphi())))
}
