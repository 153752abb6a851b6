//! Block structure of the two-atom Tavis-Cummings Hamiltonian
//! `H = g sum_i (sigma_i^+ a + sigma_i^- a^dagger)`.
//!
//! The excitation number is conserved, so `H` splits into blocks of
//! dimension one (`n = 0`), two (`n = 1`) and three (`n >= 2`). Block `n` is
//! spanned by `|1,1>|n-2>`, `|Psi+>|n-1>`, `|0,0>|n>` in that order (the first
//! vector is absent for `n = 1`, only `|0,0>|0>` remains for `n = 0`). The
//! antisymmetric `|Psi->|n>` states are dark and never enter a block.

use num_complex::Complex64;

/// Eigenvalues (in units of `hbar g`) and the real orthogonal matrix whose
/// columns are the matching eigenvectors.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockEigensystem {
    pub n: usize,
    pub eigenvalues: Vec<f64>,
    /// Row-major; `transform[i][j]` is component `i` of eigenvector `j`.
    pub transform: Vec<Vec<f64>>,
}

impl BlockEigensystem {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }
}

pub fn block_dim(n: usize) -> usize {
    match n {
        0 => 1,
        1 => 2,
        _ => 3,
    }
}

/// `H^{(n)} / (hbar g)`.
pub fn block_hamiltonian(n: usize) -> Vec<Vec<f64>> {
    match n {
        0 => vec![vec![0.0]],
        1 => {
            let s = 2f64.sqrt();
            vec![vec![0.0, s], vec![s, 0.0]]
        }
        _ => {
            let a = (2.0 * (n as f64 - 1.0)).sqrt();
            let b = (2.0 * n as f64).sqrt();
            vec![vec![0.0, a, 0.0], vec![a, 0.0, b], vec![0.0, b, 0.0]]
        }
    }
}

/// Closed-form diagonalization of block `n`. Eigenvalues are `{0}` for
/// `n = 0`, `{-sqrt 2, sqrt 2}` for `n = 1` and `{0, -w_n, w_n}` with
/// `w_n = sqrt(4n - 2)` for `n >= 2`.
pub fn block_eigensystem(n: usize) -> BlockEigensystem {
    match n {
        0 => BlockEigensystem {
            n,
            eigenvalues: vec![0.0],
            transform: vec![vec![1.0]],
        },
        1 => {
            let s = std::f64::consts::FRAC_1_SQRT_2;
            let w = 2f64.sqrt();
            BlockEigensystem {
                n,
                eigenvalues: vec![-w, w],
                transform: vec![vec![s, s], vec![-s, s]],
            }
        }
        _ => {
            let nf = n as f64;
            let norm = (4.0 * nf - 2.0).sqrt();
            let w = norm;
            let r = |x: f64| x.sqrt() / norm;
            BlockEigensystem {
                n,
                eigenvalues: vec![0.0, -w, w],
                transform: vec![
                    vec![-r(2.0 * nf), r(nf - 1.0), r(nf - 1.0)],
                    vec![0.0, -r(2.0 * nf - 1.0), r(2.0 * nf - 1.0)],
                    vec![r(2.0 * nf - 2.0), r(nf), r(nf)],
                ],
            }
        }
    }
}

/// `exp(-i H^{(n)} t / hbar) = O diag(e^{-i lambda g t}) O^T`.
pub fn block_propagator(n: usize, gt: f64) -> Vec<Vec<Complex64>> {
    let sys = block_eigensystem(n);
    let d = sys.dim();
    let phases: Vec<Complex64> = sys
        .eigenvalues
        .iter()
        .map(|l| Complex64::from_polar(1.0, -l * gt))
        .collect();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    (0..d)
                        .map(|k| phases[k] * (sys.transform[i][k] * sys.transform[j][k]))
                        .sum()
                })
                .collect()
        })
        .collect()
}
