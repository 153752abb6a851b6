//! Numerical studies built on the map and the protocol: stability sweeps,
//! basin grids, discrimination Monte Carlo and resource counts.

mod basin;
mod discrimination;
mod sweep;

use num_complex::Complex64;

pub use basin::{basin_grid, default_attractors, BasinGrid, Region};
pub use discrimination::{discrimination_run, DiscriminationReport, DiscriminationSettings, StepStats};
pub use sweep::{phi_sweep, StabilityRow};

use crate::error::{Error, Result};
use crate::map::{apply_map, MapParams};
use crate::quantum::{protocol_step_exact, ExactStepOperator};
use crate::sphere::{ExtendedComplex, Finite, Infinity};

/// `|<psi_1|psi_2>|` for the qubit states labelled by `z1`, `z2`.
pub fn overlap(z1: ExtendedComplex, z2: ExtendedComplex) -> f64 {
    let v = match (z1, z2) {
        (Infinity, Infinity) => 1.0,
        (Finite(z), Infinity) | (Infinity, Finite(z)) => z.norm() / (1.0 + z.norm_sqr()).sqrt(),
        (Finite(a), Finite(b)) => {
            (Complex64::new(1.0, 0.0) + a.conj() * b).norm()
                / ((1.0 + a.norm_sqr()) * (1.0 + b.norm_sqr())).sqrt()
        }
    };
    v.min(1.0)
}

/// Which single-step map drives an experiment.
#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum MapKind {
    /// The rational map itself.
    Ideal,
    /// The protocol with exact cavity dynamics.
    Exact(ExactStepOperator),
}

impl MapKind {
    /// One step; `Ok(None)` is a failed postselection.
    pub fn step(&self, z: ExtendedComplex, p: &MapParams) -> Result<Option<ExtendedComplex>> {
        match self {
            MapKind::Ideal => apply_map(z, p).map(Some),
            MapKind::Exact(op) => match protocol_step_exact(z, p, op) {
                Ok(out) => Ok(Some(out.z)),
                Err(Error::NullOutcome { .. }) => Ok(None),
                Err(e) => Err(e),
            },
        }
    }

    pub fn label(&self) -> String {
        match self {
            MapKind::Ideal => "ideal".to_string(),
            MapKind::Exact(op) => format!("exact(nbar={}, gt={})", op.nbar, op.gt),
        }
    }
}

/// Number of state pairs consumed by `n` iterations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ResourceEstimate {
    pub iterations: u32,
    pub varphi: f64,
    pub pairs: u128,
}

/// Each step halves the pairs and succeeds with probability at least
/// `cos^2(varphi)/4`, so `N = ceil((8 / cos^2 varphi)^n)`. Values within
/// `1e-12` (relative) of an integer are taken as that integer.
pub fn resource_estimate(n: u32, varphi: f64) -> Result<ResourceEstimate> {
    let p = MapParams::checked(varphi)?;
    let base = 8.0 / (p.cos() * p.cos());
    let v = base.powf(f64::from(n));
    if !(v < u128::MAX as f64) {
        return Err(Error::InvalidInput(format!(
            "resource count (8/cos^2 varphi)^{n} = {v:e} does not fit in 128 bits"
        )));
    }
    let r = v.round();
    let pairs = if (v - r).abs() <= 1e-12 * v { r } else { v.ceil() };
    Ok(ResourceEstimate {
        iterations: n,
        varphi,
        pairs: pairs as u128,
    })
}

/// Sum in a balanced tree; fixed rounding for a fixed input order.
pub(crate) fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        n => {
            let (a, b) = xs.split_at(n / 2);
            pairwise_sum(a) + pairwise_sum(b)
        }
    }
}
