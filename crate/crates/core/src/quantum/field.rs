//! Coherent states of the cavity mode in a truncated Fock basis.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Poisson mass allowed beyond the truncation index.
pub const TAIL_BOUND: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoherentFieldSpec {
    nbar: f64,
    phi: f64,
    nmax: usize,
}

impl CoherentFieldSpec {
    /// Coherent state `|alpha>`, `alpha = sqrt(nbar) e^{i phi}`, truncated at
    /// the smallest index whose Poisson tail is below [`TAIL_BOUND`].
    pub fn new(nbar: f64, phi: f64) -> Result<Self> {
        check_nbar(nbar)?;
        Ok(CoherentFieldSpec {
            nbar,
            phi,
            nmax: default_nmax(nbar),
        })
    }

    /// Explicit truncation; fails when the tail bound is violated.
    pub fn with_nmax(nbar: f64, phi: f64, nmax: usize) -> Result<Self> {
        check_nbar(nbar)?;
        let tail = poisson_tail(nbar, nmax);
        if tail >= TAIL_BOUND {
            return Err(Error::Truncation { nbar, nmax, tail });
        }
        Ok(CoherentFieldSpec { nbar, phi, nmax })
    }

    pub fn nbar(&self) -> f64 {
        self.nbar
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn nmax(&self) -> usize {
        self.nmax
    }

    pub fn alpha(&self) -> Complex64 {
        Complex64::from_polar(self.nbar.sqrt(), self.phi)
    }
}

fn check_nbar(nbar: f64) -> Result<()> {
    if nbar.is_finite() && nbar >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "mean photon number must be finite and non-negative, got {nbar}"
        )))
    }
}

/// `ln m!` minus its leading Stirling terms; accurate to rounding for `m >= 50`.
fn stirling_correction(m: f64) -> f64 {
    let r = 1.0 / (m * m);
    (1.0 / 12.0 - r * (1.0 / 360.0 - r * (1.0 / 1260.0 - r / 1680.0))) / m
}

/// `P(m)` at an integer `m` near `nbar`. For large `m` every term of
/// `m - nbar + m ln(nbar/m) - ln(2 pi m)/2 - corr(m)` stays small.
fn poisson_at(nbar: f64, m: usize) -> f64 {
    let mf = m as f64;
    if m < 50 {
        return (1..=m).fold((-nbar).exp(), |p, k| p * nbar / k as f64);
    }
    (mf - nbar + mf * ((nbar - mf) / mf).ln_1p()
        - 0.5 * (std::f64::consts::TAU * mf).ln()
        - stirling_correction(mf))
    .exp()
}

/// Poisson weights `P(n) = e^{-nbar} nbar^n / n!` for `n = 0..len`. The
/// value at the mode is evaluated directly and the rest follow from
/// `P(n+1) = P(n) nbar/(n+1)` outwards, so rounding grows only linearly in
/// the distance from the mode and large `nbar` never overflows.
fn poisson_weights(nbar: f64, len: usize) -> Vec<f64> {
    let mut out = vec![0.0; len];
    if len == 0 {
        return out;
    }
    if nbar == 0.0 {
        out[0] = 1.0;
        return out;
    }
    let mode = (nbar.floor() as usize).min(len - 1);
    out[mode] = poisson_at(nbar, mode);
    for n in mode..len - 1 {
        out[n + 1] = out[n] * nbar / (n + 1) as f64;
    }
    for n in (0..mode).rev() {
        out[n] = out[n + 1] * (n + 1) as f64 / nbar;
    }
    out
}

fn scan_limit(nbar: f64) -> usize {
    (nbar + 40.0 * nbar.sqrt() + 60.0).ceil() as usize
}

/// `sum_{n > nmax} e^{-nbar} nbar^n / n!`, summed from the far tail inwards.
pub fn poisson_tail(nbar: f64, nmax: usize) -> f64 {
    if nbar == 0.0 {
        return 0.0;
    }
    let upper = scan_limit(nbar).max(nmax + 1);
    poisson_weights(nbar, upper + 1)[nmax + 1..].iter().rev().sum()
}

/// Smallest `nmax` whose Poisson tail is below [`TAIL_BOUND`].
pub fn default_nmax(nbar: f64) -> usize {
    if nbar == 0.0 {
        return 0;
    }
    let upper = scan_limit(nbar);
    let weights = poisson_weights(nbar, upper + 1);
    let mut tail = 0.0;
    for n in (0..=upper).rev() {
        let mass = weights[n];
        if tail + mass >= TAIL_BOUND {
            return n;
        }
        tail += mass;
    }
    0
}

/// Fock amplitudes `p_n = alpha^n sqrt(e^{-|alpha|^2} / n!)` for
/// `n = 0..=nmax`, i.e. `p_n = p_{n-1} alpha / sqrt(n)`, with magnitudes
/// taken from the Poisson weights.
pub fn poisson_amplitudes(spec: &CoherentFieldSpec) -> Result<Vec<Complex64>> {
    let tail = poisson_tail(spec.nbar, spec.nmax);
    if tail >= TAIL_BOUND {
        return Err(Error::Truncation {
            nbar: spec.nbar,
            nmax: spec.nmax,
            tail,
        });
    }
    Ok(coherent_coefficients(spec.alpha(), spec.nmax + 1))
}

/// First `len` Fock coefficients of the coherent state `|beta>`.
pub fn coherent_coefficients(beta: Complex64, len: usize) -> Vec<Complex64> {
    let nbar = beta.norm_sqr();
    if nbar == 0.0 {
        let mut v = vec![Complex64::new(0.0, 0.0); len];
        if let Some(first) = v.first_mut() {
            *first = Complex64::new(1.0, 0.0);
        }
        return v;
    }
    let arg = beta.arg();
    poisson_weights(nbar, len)
        .into_iter()
        .enumerate()
        .map(|(n, w)| Complex64::from_polar(w.sqrt(), n as f64 * arg))
        .collect()
}

/// `<a|b> = exp(-|a|^2/2 - |b|^2/2 + conj(a) b)`
pub fn coherent_overlap(a: Complex64, b: Complex64) -> Complex64 {
    (-0.5 * a.norm_sqr() - 0.5 * b.norm_sqr() + a.conj() * b).exp()
}
