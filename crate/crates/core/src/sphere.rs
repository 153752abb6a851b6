//! Points of the Riemann sphere.
//!
//! A pure qubit state `|0> + z e^{i phi} |1>` (up to normalization) is
//! identified with `z`; the excited state `|1>` is the point at infinity.

use std::fmt;

use num_complex::Complex64;

/// Moduli above this are snapped to the exact point at infinity.
pub const ESCAPE_RADIUS: f64 = 1e12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ExtendedComplex {
    Finite(Complex64),
    Infinity,
}

pub use ExtendedComplex::{Finite, Infinity};

impl ExtendedComplex {
    pub const ZERO: ExtendedComplex = Finite(Complex64::new(0.0, 0.0));
    pub const ONE: ExtendedComplex = Finite(Complex64::new(1.0, 0.0));

    /// Builds a finite point. NaN components are rejected; infinite components
    /// collapse to the single point at infinity.
    pub fn new(re: f64, im: f64) -> Option<Self> {
        Self::from_complex(Complex64::new(re, im))
    }

    pub fn from_complex(z: Complex64) -> Option<Self> {
        if z.re.is_nan() || z.im.is_nan() {
            None
        } else if z.re.is_infinite() || z.im.is_infinite() {
            Some(Infinity)
        } else {
            Some(Finite(z))
        }
    }

    pub fn real(x: f64) -> Self {
        Finite(Complex64::new(x, 0.0))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Infinity)
    }

    pub fn finite(&self) -> Option<Complex64> {
        match *self {
            Finite(z) => Some(z),
            Infinity => None,
        }
    }

    /// Replaces runaway finite values by the exact point at infinity.
    pub fn guarded(self) -> Self {
        match self {
            Finite(z) if !(z.norm() <= ESCAPE_RADIUS) => Infinity,
            p => p,
        }
    }

    /// Normalized spinor `(a, b)` with `|a|^2 + |b|^2 = 1` representing the
    /// state `a|0> + b|1>`.
    pub fn spinor(&self) -> [Complex64; 2] {
        match *self {
            Infinity => [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
            Finite(z) => {
                let r = z.norm();
                if r <= 1.0 {
                    let n = (1.0 + r * r).sqrt();
                    [Complex64::new(1.0 / n, 0.0), z / n]
                } else {
                    // (1, z)/sqrt(1+|z|^2) = (1/r, z/r)/sqrt(1 + 1/r^2)
                    let inv = 1.0 / r;
                    let n = (1.0 + inv * inv).sqrt();
                    [Complex64::new(inv / n, 0.0), z * (inv / n)]
                }
            }
        }
    }

    /// Inverse of [`spinor`](Self::spinor): the ratio `b / a` on the sphere.
    pub fn from_spinor(a: Complex64, b: Complex64) -> Option<Self> {
        if a == Complex64::new(0.0, 0.0) {
            if b == Complex64::new(0.0, 0.0) {
                None
            } else {
                Some(Infinity)
            }
        } else {
            Self::from_complex(b / a).map(Self::guarded)
        }
    }

    /// Chordal distance on the unit-diameter Riemann sphere, in `[0, 1]`.
    pub fn chordal_distance(&self, other: &Self) -> f64 {
        match (*self, *other) {
            (Infinity, Infinity) => 0.0,
            (Finite(z), Infinity) | (Infinity, Finite(z)) => 1.0 / (1.0 + z.norm_sqr()).sqrt(),
            (Finite(z), Finite(w)) => {
                (z - w).norm() / ((1.0 + z.norm_sqr()).sqrt() * (1.0 + w.norm_sqr()).sqrt())
            }
        }
    }

    /// Euclidean distance; infinite whenever either point is infinity.
    pub fn distance(&self, other: &Self) -> f64 {
        match (*self, *other) {
            (Finite(z), Finite(w)) => (z - w).norm(),
            (Infinity, Infinity) => 0.0,
            _ => f64::INFINITY,
        }
    }
}

impl From<Complex64> for ExtendedComplex {
    /// # Panics
    /// On NaN components.
    fn from(z: Complex64) -> Self {
        Self::from_complex(z).expect("NaN is not a point of the sphere")
    }
}

impl From<f64> for ExtendedComplex {
    fn from(x: f64) -> Self {
        Self::real(x)
    }
}

impl fmt::Display for ExtendedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Infinity => write!(f, "inf"),
            Finite(z) => write!(f, "{}{:+}i", z.re, z.im),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nan_rejected_and_infinities_collapse() {
        assert!(ExtendedComplex::new(f64::NAN, 0.0).is_none());
        assert_eq!(ExtendedComplex::new(f64::INFINITY, 1.0), Some(Infinity));
        assert_eq!(
            ExtendedComplex::new(1.0, f64::NEG_INFINITY),
            Some(Infinity)
        );
    }

    #[test]
    fn spinor_round_trip() {
        for z in [
            Complex64::new(0.2, -0.3),
            Complex64::new(40.0, 7.0),
            Complex64::new(0.0, 0.0),
        ] {
            let [a, b] = Finite(z).spinor();
            assert!((a.norm_sqr() + b.norm_sqr() - 1.0).abs() < 1e-15);
            let back = ExtendedComplex::from_spinor(a, b).unwrap().finite().unwrap();
            assert!((back - z).norm() < 1e-13 * (1.0 + z.norm()));
        }
        let [a, b] = Infinity.spinor();
        assert_eq!(ExtendedComplex::from_spinor(a, b), Some(Infinity));
    }

    #[test]
    fn chordal_distance_to_infinity() {
        assert_eq!(ExtendedComplex::ZERO.chordal_distance(&Infinity), 1.0);
        assert!(Finite(Complex64::new(1e9, 0.0)).chordal_distance(&Infinity) < 1e-8);
    }

    #[test]
    fn guard_snaps_large_values() {
        assert_eq!(Finite(Complex64::new(2e12, 0.0)).guarded(), Infinity);
        assert_eq!(ExtendedComplex::ONE.guarded(), ExtendedComplex::ONE);
    }
}
