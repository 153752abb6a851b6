//! Two-atom states, single-atom gates and small dense matrix helpers.
//!
//! Product-basis vectors are ordered `|1,1>, |1,0>, |0,1>, |0,0>` with
//! `|i,j> = |i>_A |j>_B`.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::sphere::ExtendedComplex;

pub type Mat2 = [[Complex64; 2]; 2];
pub type Mat4 = [[Complex64; 4]; 4];

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Product-basis index of `|a>_A |b>_B`.
pub const fn product_index(a: usize, b: usize) -> usize {
    3 - (2 * a + b)
}

/// Amplitudes in the basis `|0,0>, |Psi->, |Psi+>, |1,1>` with
/// `|Psi+-> = (|0,1> +- |1,0>)/sqrt 2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AtomPairState {
    pub c0: Complex64,
    pub cminus: Complex64,
    pub cplus: Complex64,
    pub c1: Complex64,
}

impl AtomPairState {
    pub fn norm_sqr(&self) -> f64 {
        self.c0.norm_sqr() + self.cminus.norm_sqr() + self.cplus.norm_sqr() + self.c1.norm_sqr()
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm_sqr() - 1.0).abs() <= tol
    }

    pub fn from_product(v: [Complex64; 4]) -> Self {
        let [a11, a10, a01, a00] = v;
        AtomPairState {
            c0: a00,
            cminus: (a01 - a10) * FRAC_1_SQRT_2,
            cplus: (a01 + a10) * FRAC_1_SQRT_2,
            c1: a11,
        }
    }

    pub fn to_product(&self) -> [Complex64; 4] {
        let a01 = (self.cplus + self.cminus) * FRAC_1_SQRT_2;
        let a10 = (self.cplus - self.cminus) * FRAC_1_SQRT_2;
        [self.c1, a10, a01, self.c0]
    }

    /// `|a>_A (x) |b>_B`
    pub fn product(a: [Complex64; 2], b: [Complex64; 2]) -> Self {
        let mut v = [ZERO; 4];
        for i in 0..2 {
            for j in 0..2 {
                v[product_index(i, j)] = a[i] * b[j];
            }
        }
        Self::from_product(v)
    }
}

/// The single-atom gate `diag(e^{i varphi}, -e^{-i varphi})`.
#[allow(non_snake_case)]
pub fn gate_U(varphi: f64) -> Mat2 {
    [
        [Complex64::from_polar(1.0, varphi), ZERO],
        [ZERO, -Complex64::from_polar(1.0, -varphi)],
    ]
}

/// Gate applied to atom B in each protocol step: `diag(-e^{-i varphi},
/// e^{i varphi}) = -gate_U(-varphi)`. With it the step implements
/// `f_varphi` (the map with `e^{-i varphi}` in the constant term); the bare
/// `gate_U(varphi)` would implement `f_{-varphi}`.
pub fn protocol_gate(varphi: f64) -> Mat2 {
    let u = gate_U(-varphi);
    [[-u[0][0], -u[0][1]], [-u[1][0], -u[1][1]]]
}

/// Amplitudes after the protocol gate acts on atom B of the product state
/// `|psi>|psi>`, `|psi> ~ |0> + z e^{i phi} |1>`:
///
/// ```text
/// c0 = -e^{-i varphi} / (1+|z|^2)
/// c1 =  z^2 e^{i(varphi + 2 phi)} / (1+|z|^2)
/// c- =  sqrt 2 z e^{i phi} cos(varphi) / (1+|z|^2)
/// c+ =  sqrt 2 i z e^{i phi} sin(varphi) / (1+|z|^2)
/// ```
///
/// `z = inf` is the state `|1>|1>` before the gate.
pub fn step_amplitudes(z: ExtendedComplex, varphi: f64, phi: f64) -> AtomPairState {
    let [a, b] = z.spinor();
    let b = b * Complex64::from_polar(1.0, phi);
    let e = Complex64::from_polar(1.0, varphi);
    let ab = a * b;
    AtomPairState {
        c0: -e.conj() * a * a,
        c1: e * b * b,
        cminus: ab * (2f64.sqrt() * varphi.cos()),
        cplus: ab * Complex64::new(0.0, 2f64.sqrt() * varphi.sin()),
    }
}

pub fn mat2_vec(m: &Mat2, v: [Complex64; 2]) -> [Complex64; 2] {
    [
        m[0][0] * v[0] + m[0][1] * v[1],
        m[1][0] * v[0] + m[1][1] * v[1],
    ]
}

pub fn mat4_vec(m: &Mat4, v: &[Complex64; 4]) -> [Complex64; 4] {
    let mut out = [ZERO; 4];
    for (o, row) in out.iter_mut().zip(m) {
        *o = row.iter().zip(v).map(|(a, b)| a * b).sum();
    }
    out
}

pub fn mat4_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [[ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn mat4_adjoint(a: &Mat4) -> Mat4 {
    let mut out = [[ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[j][i].conj();
        }
    }
    out
}

/// Largest elementwise modulus of `a - b`.
pub fn mat4_max_diff(a: &Mat4, b: &Mat4) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
