use num_complex::Complex64;

use super::{apply_unchecked, critical_points, map_derivative, MapParams};
use crate::error::{Error, Result};
use crate::sphere::ExtendedComplex;

/// `|lambda|` below this is superattractive.
pub const EPS_SUPER: f64 = 1e-9;
/// Half-width of the neutral band around `|lambda| = 1`.
pub const EPS_NEUTRAL: f64 = 1e-9;

/// Relative closure defect accepted by [`cycle_multiplier`].
const CLOSURE_TOL: f64 = 1e-6;
/// Chordal distance under which two detected cycles are the same orbit.
const SAME_CYCLE_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StabilityClass {
    Superattractive,
    Attractive,
    Neutral,
    Repelling,
}

impl StabilityClass {
    pub fn from_modulus(abs_lambda: f64) -> Self {
        if abs_lambda < EPS_SUPER {
            StabilityClass::Superattractive
        } else if abs_lambda < 1.0 - EPS_NEUTRAL {
            StabilityClass::Attractive
        } else if abs_lambda <= 1.0 + EPS_NEUTRAL {
            StabilityClass::Neutral
        } else {
            StabilityClass::Repelling
        }
    }

    pub fn is_attracting(&self) -> bool {
        matches!(
            self,
            StabilityClass::Superattractive | StabilityClass::Attractive
        )
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            StabilityClass::Superattractive => "superattractive",
            StabilityClass::Attractive => "attractive",
            StabilityClass::Neutral => "neutral",
            StabilityClass::Repelling => "repelling",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CycleReport {
    pub points: Vec<ExtendedComplex>,
    pub period: usize,
    pub multiplier: Complex64,
    pub class: StabilityClass,
}

impl CycleReport {
    pub fn abs_multiplier(&self) -> f64 {
        self.multiplier.norm()
    }

    /// Smallest chordal distance from `z` to a point of the cycle.
    pub fn chordal_distance_to(&self, z: &ExtendedComplex) -> f64 {
        self.points
            .iter()
            .map(|p| p.chordal_distance(z))
            .fold(f64::INFINITY, f64::min)
    }
}

/// Multiplier `lambda = f'(z_1) f'(z_2) ... f'(z_n)` of a periodic orbit and
/// its stability class.
pub fn cycle_multiplier(points: &[ExtendedComplex], p: &MapParams) -> Result<CycleReport> {
    p.ensure_regular()?;
    if points.is_empty() {
        return Err(Error::InvalidInput("empty cycle".into()));
    }
    let period = points.len();
    let mut multiplier = Complex64::new(1.0, 0.0);
    for (i, z) in points.iter().enumerate() {
        let next = points[(i + 1) % period];
        let image = apply_unchecked(*z, p);
        let defect = match (image, next) {
            (ExtendedComplex::Finite(a), ExtendedComplex::Finite(b)) => {
                (a - b).norm() / b.norm().max(1.0)
            }
            _ => image.chordal_distance(&next),
        };
        if !(defect <= CLOSURE_TOL) {
            return Err(Error::NotACycle { index: i, defect });
        }
        // infinity maps onto the fixed point 0 and is never periodic
        let z = z.finite().ok_or(Error::NotACycle {
            index: i,
            defect: f64::INFINITY,
        })?;
        multiplier *= map_derivative(z, p)?;
    }
    Ok(CycleReport {
        points: points.to_vec(),
        period,
        multiplier,
        class: StabilityClass::from_modulus(multiplier.norm()),
    })
}

/// Settings of the critical-orbit search.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CycleSearch {
    /// Iterations discarded before looking for a period.
    pub burn: usize,
    pub max_period: usize,
    /// Near-return distance that detects a period.
    pub tol: f64,
}

impl Default for CycleSearch {
    fn default() -> Self {
        CycleSearch {
            burn: 10_000,
            max_period: 64,
            tol: 1e-8,
        }
    }
}

/// What became of one critical orbit.
#[derive(Clone, Debug, PartialEq)]
pub enum CriticalOrbit {
    /// Settled on `cycles[cycle]` of the search result.
    Attracted { cycle: usize },
    /// A period was detected but the cycle is not attracting at the
    /// classification thresholds (typically a slowly converging neutral cycle).
    NonAttracting {
        period: usize,
        multiplier: Complex64,
    },
    /// No period up to `max_period` was detected; the slot stays empty.
    NoPeriod,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AttractorSearch {
    /// Distinct attracting cycles, at most two.
    pub cycles: Vec<CycleReport>,
    /// Outcome for the critical points `+e^{-i varphi}` and `-e^{-i varphi}`.
    pub orbits: [CriticalOrbit; 2],
}

/// Locates all attracting cycles by following both critical orbits. A
/// quadratic rational map has at most two of them, each attracting at least
/// one critical point.
pub fn find_attractive_cycles(p: &MapParams, search: &CycleSearch) -> Result<AttractorSearch> {
    if search.max_period == 0 {
        return Err(Error::InvalidInput("max_period must be at least 1".into()));
    }
    let crit = critical_points(p)?;
    let mut cycles: Vec<CycleReport> = Vec::new();
    let mut orbits = [CriticalOrbit::NoPeriod, CriticalOrbit::NoPeriod];

    for (slot, c) in crit.into_iter().enumerate() {
        let mut z = ExtendedComplex::Finite(c);
        for _ in 0..search.burn {
            z = apply_unchecked(z, p);
        }
        let Some(period) = detect_period(z, p, search) else {
            continue;
        };
        let mut points = Vec::with_capacity(period);
        let mut w = z;
        for _ in 0..period {
            points.push(w);
            w = apply_unchecked(w, p);
        }
        let report = match cycle_multiplier(&points, p) {
            Ok(r) => r,
            // burned-in orbit landed on infinity's preimage chain; no cycle
            Err(Error::NotACycle { .. }) | Err(Error::Pole { .. }) => continue,
            Err(e) => return Err(e),
        };
        if !report.class.is_attracting() {
            orbits[slot] = CriticalOrbit::NonAttracting {
                period,
                multiplier: report.multiplier,
            };
            continue;
        }
        let existing = cycles.iter().position(|known| {
            known.period == period && known.chordal_distance_to(&points[0]) < SAME_CYCLE_TOL
        });
        let index = match existing {
            Some(i) => i,
            None => {
                cycles.push(report);
                cycles.len() - 1
            }
        };
        orbits[slot] = CriticalOrbit::Attracted { cycle: index };
    }
    Ok(AttractorSearch { cycles, orbits })
}

fn detect_period(z: ExtendedComplex, p: &MapParams, search: &CycleSearch) -> Option<usize> {
    let mut w = z;
    for k in 1..=search.max_period {
        w = apply_unchecked(w, p);
        if w.distance(&z) < search.tol {
            return Some(k);
        }
    }
    None
}
