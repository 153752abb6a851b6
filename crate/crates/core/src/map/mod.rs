//! The quadratic rational map
//!
//! ```text
//! f(z) = 2 z cos(varphi) / (e^{-i varphi} + z^2 e^{i varphi})
//! ```
//!
//! acting on the Riemann sphere, together with the complex-dynamics tools
//! used to study it: cycles and their multipliers, critical orbits, backward
//! iteration onto the Julia set and basin classification.

mod basin;
mod cycles;
mod julia;

pub(crate) use basin::attractor_points;
pub use basin::{classify_basin_point, classify_orbit, BasinCell};
pub use cycles::{
    cycle_multiplier, find_attractive_cycles, AttractorSearch, CriticalOrbit, CycleReport,
    CycleSearch, StabilityClass, EPS_NEUTRAL, EPS_SUPER,
};
pub use julia::{julia_backward_sample, JULIA_TRANSIENT};

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::sphere::ExtendedComplex::{self, Finite, Infinity};

/// `|cos varphi|` below this makes the map identically zero.
pub const EPS_DEGENERATE: f64 = 1e-12;

/// Relative size of the denominator below which a point counts as a pole.
pub const POLE_TOL: f64 = 1e-14;

/// Gate angle of the map, reduced to `[0, 2pi)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MapParams {
    varphi: f64,
    cos: f64,
    /// `e^{i varphi}`
    phase: Complex64,
    degenerate: bool,
}

impl MapParams {
    pub fn new(varphi: f64) -> Self {
        let mut varphi = varphi.rem_euclid(TAU);
        if varphi >= TAU {
            varphi = 0.0;
        }
        let cos = varphi.cos();
        MapParams {
            varphi,
            cos,
            phase: Complex64::new(cos, varphi.sin()),
            degenerate: cos.abs() < EPS_DEGENERATE,
        }
    }

    /// Like [`new`](Self::new) but refuses degenerate angles.
    pub fn checked(varphi: f64) -> Result<Self> {
        let p = Self::new(varphi);
        p.ensure_regular()?;
        Ok(p)
    }

    pub fn varphi(&self) -> f64 {
        self.varphi
    }

    pub fn cos(&self) -> f64 {
        self.cos
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub(crate) fn ensure_regular(&self) -> Result<()> {
        if self.degenerate {
            Err(Error::DegenerateParameter {
                varphi: self.varphi,
            })
        } else {
            Ok(())
        }
    }

    fn e_plus(&self) -> Complex64 {
        self.phase
    }

    fn e_minus(&self) -> Complex64 {
        self.phase.conj()
    }
}

/// One application of the map on the sphere: `f(inf) = 0` and poles go to
/// infinity. For `|z| > 1` the map is evaluated in the chart `w = 1/z` so
/// large arguments never overflow.
pub fn apply_map(z: ExtendedComplex, p: &MapParams) -> Result<ExtendedComplex> {
    p.ensure_regular()?;
    Ok(apply_unchecked(z, p))
}

pub(crate) fn apply_unchecked(z: ExtendedComplex, p: &MapParams) -> ExtendedComplex {
    let z = match z {
        Infinity => return ExtendedComplex::ZERO,
        Finite(z) => z,
    };
    let two_cos = 2.0 * p.cos;
    let image = if z.norm() <= 1.0 {
        let den = p.e_minus() + z * z * p.e_plus();
        if den.norm() < POLE_TOL {
            return Infinity;
        }
        z * two_cos / den
    } else {
        // f(z) = 2 w cos / (w^2 e^{-i varphi} + e^{i varphi}), w = 1/z
        let w = z.inv();
        let den = w * w * p.e_minus() + p.e_plus();
        if den.norm() < POLE_TOL {
            return Infinity;
        }
        w * two_cos / den
    };
    Finite(image).guarded()
}

/// `f'(z) = 2 cos(varphi) (e^{-i varphi} - z^2 e^{i varphi}) / (e^{-i varphi} + z^2 e^{i varphi})^2`
pub fn map_derivative(z: Complex64, p: &MapParams) -> Result<Complex64> {
    p.ensure_regular()?;
    let z2 = z * z;
    let den = p.e_minus() + z2 * p.e_plus();
    if den.norm() < POLE_TOL * z.norm_sqr().max(1.0) {
        return Err(Error::Pole { re: z.re, im: z.im });
    }
    Ok((p.e_minus() - z2 * p.e_plus()) * (2.0 * p.cos) / (den * den))
}

/// The orbit `[z0, f(z0), ..., f^n(z0)]`.
pub fn iterate_map(z0: ExtendedComplex, p: &MapParams, n: usize) -> Result<Vec<ExtendedComplex>> {
    p.ensure_regular()?;
    let mut orbit = Vec::with_capacity(n + 1);
    let mut z = z0;
    orbit.push(z);
    for _ in 0..n {
        z = apply_unchecked(z, p);
        orbit.push(z);
    }
    Ok(orbit)
}

/// The three fixed points `-1, 0, 1`; they do not depend on the angle.
pub fn fixed_points(_p: &MapParams) -> [ExtendedComplex; 3] {
    [
        ExtendedComplex::real(-1.0),
        ExtendedComplex::ZERO,
        ExtendedComplex::ONE,
    ]
}

/// The nontrivial two-cycle `z_k = (-1)^k i sqrt(1 + 2 e^{-2i varphi})`,
/// returned as `[z_1, z_2]`. It is repelling for every angle.
pub fn two_cycle(p: &MapParams) -> Result<[ExtendedComplex; 2]> {
    p.ensure_regular()?;
    let root = Complex64::i() * (1.0 + 2.0 * p.e_minus() * p.e_minus()).sqrt();
    Ok([Finite(-root), Finite(root)])
}

/// Zeros of the derivative, `+e^{-i varphi}` and `-e^{-i varphi}`.
pub fn critical_points(p: &MapParams) -> Result<[Complex64; 2]> {
    p.ensure_regular()?;
    Ok([p.e_minus(), -p.e_minus()])
}

/// Both preimages of `w`, i.e. the roots of
/// `w e^{i varphi} z^2 - 2 cos(varphi) z + w e^{-i varphi} = 0` on the
/// sphere. Double roots are returned twice.
pub fn inverse_branches(w: ExtendedComplex, p: &MapParams) -> Result<[ExtendedComplex; 2]> {
    p.ensure_regular()?;
    let w = match w {
        // the poles
        Infinity => {
            let pole = Complex64::i() * p.e_minus();
            return Ok([Finite(pole), Finite(-pole)]);
        }
        Finite(w) if w == Complex64::new(0.0, 0.0) => return Ok([ExtendedComplex::ZERO, Infinity]),
        Finite(w) => w,
    };
    let c = Complex64::new(p.cos, 0.0);
    let s = (c * c - w * w).sqrt();
    // pick the sign avoiding cancellation, recover the other root from the
    // product of the roots e^{-2i varphi}
    let q = if (c + s).norm() >= (c - s).norm() {
        c + s
    } else {
        c - s
    };
    let first = q / (w * p.e_plus());
    let second = w * p.e_minus() / q;
    Ok([Finite(first).guarded(), Finite(second).guarded()])
}
