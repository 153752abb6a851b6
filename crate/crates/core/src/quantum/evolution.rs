//! Time evolution of `(c0|0,0> + c-|Psi-> + c+|Psi+> + c1|1,1>) |alpha>`.
//!
//! The evolved state is
//!
//! ```text
//! |0,0>|chi^{-1}> + |Psi+>|chi^0> + |1,1>|chi^1> + c- |Psi->|alpha>
//! ```
//!
//! and the photonic channel states are assembled in closed form from the
//! block eigenvectors. [`evolve_by_blocks`] computes the same state by
//! applying each block propagator directly; the two routes are independent
//! and checked against each other in the tests.

use num_complex::Complex64;

use super::atoms::{AtomPairState, ZERO};
use super::blocks::block_propagator;
use super::field::{coherent_coefficients, coherent_overlap, poisson_amplitudes, CoherentFieldSpec};
use crate::error::{Error, Result};

const NORMALIZATION_TOL: f64 = 1e-10;

/// Field coefficient sequences of the four atomic channels, all indexed by
/// photon number and of equal length `nmax + 3`.
#[derive(Clone, Debug, PartialEq)]
pub struct JointState {
    /// `chi^{-1}`, attached to `|0,0>`.
    pub ground: Vec<Complex64>,
    /// `chi^0`, attached to `|Psi+>`.
    pub symmetric: Vec<Complex64>,
    /// `chi^1`, attached to `|1,1>`.
    pub excited: Vec<Complex64>,
    /// `c- |alpha>`, attached to the dark state `|Psi->`.
    pub dark: Vec<Complex64>,
    /// Truncated coherent amplitudes of the initial field (zero-padded).
    pub coherent: Vec<Complex64>,
    /// Dark-channel amplitude `c-`.
    pub cminus: Complex64,
}

impl JointState {
    pub fn norm_sqr(&self) -> f64 {
        [&self.ground, &self.symmetric, &self.excited, &self.dark]
            .iter()
            .flat_map(|c| c.iter())
            .map(|x| x.norm_sqr())
            .sum()
    }

    /// `<alpha|chi>` for one channel, using the truncated coherent series.
    pub fn coherent_overlap(&self, channel: &[Complex64]) -> Complex64 {
        self.coherent
            .iter()
            .zip(channel)
            .map(|(p, c)| p.conj() * c)
            .sum()
    }

    /// Projects the field onto the initial coherent state, leaving the
    /// (unnormalized) atomic state. The dark channel is exactly `c-|alpha>`,
    /// so its overlap is `c-` with `<alpha|alpha> = 1`.
    pub fn project_on_coherent(&self) -> AtomPairState {
        AtomPairState {
            c0: self.coherent_overlap(&self.ground),
            cminus: self.cminus,
            cplus: self.coherent_overlap(&self.symmetric),
            c1: self.coherent_overlap(&self.excited),
        }
    }
}

fn check_atom(atom: &AtomPairState) -> Result<()> {
    if atom.is_normalized(NORMALIZATION_TOL) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "atomic state must be normalized, |c|^2 = {}",
            atom.norm_sqr()
        )))
    }
}

struct Prepared {
    p: Vec<Complex64>,
    len: usize,
}

impl Prepared {
    fn new(field: &CoherentFieldSpec) -> Result<Self> {
        let mut p = poisson_amplitudes(field)?;
        let len = field.nmax() + 3;
        p.resize(len, ZERO);
        Ok(Prepared { p, len })
    }

    /// `p_k`, zero outside the truncation.
    fn at(&self, k: isize) -> Complex64 {
        if k < 0 {
            ZERO
        } else {
            self.p.get(k as usize).copied().unwrap_or(ZERO)
        }
    }
}

/// Exact evolution for interaction time `gt` (in units of `1/g`).
///
/// With `w_n = sqrt(4n - 2)` and the abbreviations
///
/// ```text
/// xi_n^{+-} = e^{+-i w_n gt}/2 (c+ p_{n-1} -+ (sqrt(n) c0 p_n + sqrt(n-1) c1 p_{n-2}) / sqrt(2n-1))
/// xi_n      = (sqrt(n-1) c0 p_n - sqrt(n) c1 p_{n-2}) / sqrt(2n-1)
/// ```
///
/// the channels are
///
/// ```text
/// chi^{-1}_n = (sqrt(n) (xi^- - xi^+) + sqrt(n-1) xi_n) / sqrt(2n-1),  chi^{-1}_0 = c0 p_0
/// chi^0_{n-1} = xi^- + xi^+
/// chi^1_{n-2} = (sqrt(n-1) (xi^- - xi^+) - sqrt(n) xi_n) / sqrt(2n-1)
/// ```
pub fn evolve_exact(atom: &AtomPairState, field: &CoherentFieldSpec, gt: f64) -> Result<JointState> {
    check_atom(atom)?;
    let prep = Prepared::new(field)?;
    let len = prep.len;
    let mut ground = vec![ZERO; len];
    let mut symmetric = vec![ZERO; len];
    let mut excited = vec![ZERO; len];
    ground[0] = atom.c0 * prep.at(0);

    // blocks up to nmax + 2 hold every populated |1,1>|n-2> component
    for n in 1..len {
        let nf = n as f64;
        let ni = n as isize;
        let sn = nf.sqrt();
        let sn1 = (nf - 1.0).sqrt();
        let s2n1 = (2.0 * nf - 1.0).sqrt();
        let (p_n, p_n1, p_n2) = (prep.at(ni), prep.at(ni - 1), prep.at(ni - 2));

        let mix = (atom.c0 * p_n * sn + atom.c1 * p_n2 * sn1) / s2n1;
        let sym = atom.cplus * p_n1;
        let rot = Complex64::from_polar(0.5, (4.0 * nf - 2.0).sqrt() * gt);
        let xi_plus = rot * (sym - mix);
        let xi_minus = rot.conj() * (sym + mix);
        let xi = (atom.c0 * p_n * sn1 - atom.c1 * p_n2 * sn) / s2n1;

        let diff = xi_minus - xi_plus;
        ground[n] = (diff * sn + xi * sn1) / s2n1;
        symmetric[n - 1] = xi_minus + xi_plus;
        if n >= 2 {
            excited[n - 2] = (diff * sn1 - xi * sn) / s2n1;
        }
    }

    let dark = prep.p.iter().map(|p| atom.cminus * p).collect();
    Ok(JointState {
        ground,
        symmetric,
        excited,
        dark,
        coherent: prep.p,
        cminus: atom.cminus,
    })
}

/// Same evolution computed block by block with the closed-form propagators.
pub fn evolve_by_blocks(
    atom: &AtomPairState,
    field: &CoherentFieldSpec,
    gt: f64,
) -> Result<JointState> {
    check_atom(atom)?;
    let prep = Prepared::new(field)?;
    let len = prep.len;
    let mut ground = vec![ZERO; len];
    let mut symmetric = vec![ZERO; len];
    let mut excited = vec![ZERO; len];

    for n in 0..len {
        let ni = n as isize;
        let u = block_propagator(n, gt);
        match n {
            0 => ground[0] = u[0][0] * atom.c0 * prep.at(0),
            1 => {
                let v = [atom.cplus * prep.at(0), atom.c0 * prep.at(1)];
                symmetric[0] = u[0][0] * v[0] + u[0][1] * v[1];
                ground[1] = u[1][0] * v[0] + u[1][1] * v[1];
            }
            _ => {
                let v = [
                    atom.c1 * prep.at(ni - 2),
                    atom.cplus * prep.at(ni - 1),
                    atom.c0 * prep.at(ni),
                ];
                let out: Vec<Complex64> = u
                    .iter()
                    .map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum())
                    .collect();
                excited[n - 2] = out[0];
                symmetric[n - 1] = out[1];
                ground[n] = out[2];
            }
        }
    }

    let dark = prep.p.iter().map(|p| atom.cminus * p).collect();
    Ok(JointState {
        ground,
        symmetric,
        excited,
        dark,
        coherent: prep.p,
        cminus: atom.cminus,
    })
}

/// `e^{+-i theta} |beta>`: a coherent state carrying an extra phase.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FState {
    pub phase: Complex64,
    pub amplitude: Complex64,
}

impl FState {
    pub fn coefficients(&self, len: usize) -> Vec<Complex64> {
        coherent_coefficients(self.amplitude, len)
            .into_iter()
            .map(|c| c * self.phase)
            .collect()
    }

    pub fn overlap_with(&self, alpha: Complex64) -> Complex64 {
        self.phase * coherent_overlap(alpha, self.amplitude)
    }
}

/// Approximate photonic state of channel `k`:
/// `prefactor (eta- F^- + (-1)^k eta+ F^+ - k d^- |alpha>)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ApproxChannel {
    pub k: i32,
    /// `e^{i k phi} / sqrt(1 + |k|)`
    pub prefactor: Complex64,
    pub eta_minus: Complex64,
    pub eta_plus: Complex64,
    pub d_minus: Complex64,
    pub f_minus: FState,
    pub f_plus: FState,
    pub alpha: Complex64,
}

impl ApproxChannel {
    fn sign(&self) -> f64 {
        if self.k % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }

    pub fn coefficients(&self, len: usize) -> Vec<Complex64> {
        let fm = self.f_minus.coefficients(len);
        let fp = self.f_plus.coefficients(len);
        let a = coherent_coefficients(self.alpha, len);
        let k = f64::from(self.k);
        (0..len)
            .map(|n| {
                self.prefactor
                    * (self.eta_minus * fm[n] + self.eta_plus * fp[n] * self.sign()
                        - self.d_minus * a[n] * k)
            })
            .collect()
    }

    /// `<alpha|chi^k>` in closed form.
    pub fn coherent_overlap(&self) -> Complex64 {
        let k = f64::from(self.k);
        self.prefactor
            * (self.eta_minus * self.f_minus.overlap_with(self.alpha)
                + self.eta_plus * self.f_plus.overlap_with(self.alpha) * self.sign()
                - self.d_minus * k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApproxWarning {
    /// `gt >= nbar`: second-order frequency terms are no longer negligible.
    TimeNotSmallAgainstPhotonNumber,
    /// `gt <= 1`: the rotated coherent components still overlap `|alpha>`.
    TimeTooShortForSeparation,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ApproxFields {
    pub eta_minus: Complex64,
    pub eta_plus: Complex64,
    /// `d^+ = (e^{i phi} c0 + e^{-i phi} c1)/sqrt 2`
    pub d_plus: Complex64,
    /// `d^- = (e^{i phi} c0 - e^{-i phi} c1)/sqrt 2`
    pub d_minus: Complex64,
    /// Phase-space rotation `2 gt / sqrt(4 nbar + 2)` of the F-states.
    pub rotation: f64,
    /// Channels `k = -1, 0, 1`.
    pub channels: [ApproxChannel; 3],
    pub warnings: Vec<ApproxWarning>,
}

/// Rotation angle of the F-states, from the first-order expansion of
/// `w_n` around `nbar + 1`.
pub fn f_state_rotation(nbar: f64, gt: f64) -> f64 {
    2.0 * gt / (4.0 * nbar + 2.0).sqrt()
}

/// Large-`nbar` approximation of the channel states. Linearizing
/// `w_n ~ sqrt(4 nbar + 2) + 2 (n - nbar - 1)/sqrt(4 nbar + 2)` turns each
/// channel into two counter-rotating coherent states
///
/// ```text
/// F^{+-}_k = e^{+-i theta_k} |alpha e^{+-i delta}>,
/// delta = 2gt/sqrt(4 nbar + 2),  theta_k = 2gt (nbar + 1 + k)/sqrt(4 nbar + 2)
/// ```
///
/// plus a static `|alpha>` component carried by `d^-`.
pub fn coherent_approx_fields(
    atom: &AtomPairState,
    field: &CoherentFieldSpec,
    gt: f64,
) -> ApproxFields {
    let phi = field.phi();
    let nbar = field.nbar();
    let alpha = field.alpha();
    let e = Complex64::from_polar(1.0, phi);
    let d_plus = (e * atom.c0 + e.conj() * atom.c1) * std::f64::consts::FRAC_1_SQRT_2;
    let d_minus = (e * atom.c0 - e.conj() * atom.c1) * std::f64::consts::FRAC_1_SQRT_2;
    let eta_minus = 0.5 * (atom.cplus + d_plus);
    let eta_plus = 0.5 * (atom.cplus - d_plus);

    let delta = f_state_rotation(nbar, gt);
    let scale = (4.0 * nbar + 2.0).sqrt();
    let channel = |k: i32| {
        let theta = 2.0 * gt * (nbar + 1.0 + f64::from(k)) / scale;
        ApproxChannel {
            k,
            prefactor: Complex64::from_polar(1.0, f64::from(k) * phi)
                / (1.0 + f64::from(k.abs())).sqrt(),
            eta_minus,
            eta_plus,
            d_minus,
            f_minus: FState {
                phase: Complex64::from_polar(1.0, -theta),
                amplitude: alpha * Complex64::from_polar(1.0, -delta),
            },
            f_plus: FState {
                phase: Complex64::from_polar(1.0, theta),
                amplitude: alpha * Complex64::from_polar(1.0, delta),
            },
            alpha,
        }
    };

    let mut warnings = Vec::new();
    if gt >= nbar {
        warnings.push(ApproxWarning::TimeNotSmallAgainstPhotonNumber);
    }
    if gt <= 1.0 {
        warnings.push(ApproxWarning::TimeTooShortForSeparation);
    }

    ApproxFields {
        eta_minus,
        eta_plus,
        d_plus,
        d_minus,
        rotation: delta,
        channels: [channel(-1), channel(0), channel(1)],
        warnings,
    }
}
