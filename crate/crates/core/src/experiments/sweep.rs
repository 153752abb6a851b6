use rayon::prelude::*;

use crate::error::Result;
use crate::map::{find_attractive_cycles, CycleSearch, MapParams};

/// Stability of the fixed points and the attracting cycles found from the
/// critical orbits at one gate angle.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilityRow {
    pub varphi: f64,
    /// `|lambda(0)| = |2 cos varphi|`
    pub abs_lambda_zero: f64,
    /// `|lambda(1)| = |tan varphi|`
    pub abs_lambda_plus: f64,
    /// `|lambda(-1)| = |tan varphi|`
    pub abs_lambda_minus: f64,
    /// `(period, |lambda|)` per distinct attracting cycle.
    pub cycles: Vec<(usize, f64)>,
}

impl StabilityRow {
    pub fn compute(varphi: f64, search: &CycleSearch) -> Result<Self> {
        let p = MapParams::checked(varphi)?;
        let found = find_attractive_cycles(&p, search)?;
        let tan = varphi.tan().abs();
        Ok(StabilityRow {
            varphi,
            abs_lambda_zero: (2.0 * varphi.cos()).abs(),
            abs_lambda_plus: tan,
            abs_lambda_minus: tan,
            cycles: found
                .cycles
                .iter()
                .map(|c| (c.period, c.abs_multiplier()))
                .collect(),
        })
    }

    pub fn has_period(&self, period: usize) -> bool {
        self.cycles.iter().any(|(n, _)| *n == period)
    }
}

/// One row per grid angle, in grid order. Degenerate angles are an error.
pub fn phi_sweep(grid: &[f64], search: &CycleSearch) -> Result<Vec<StabilityRow>> {
    grid.par_iter()
        .map(|&v| StabilityRow::compute(v, search))
        .collect()
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::error::Error;

    #[test]
    fn row_at_zero() {
        let row = StabilityRow::compute(0.0, &CycleSearch::default()).unwrap();
        assert_eq!(row.abs_lambda_zero, 2.0);
        assert_eq!(row.abs_lambda_plus, 0.0);
        assert_eq!(row.cycles.len(), 2);
        assert!(row.cycles.iter().all(|&(n, l)| n == 1 && l < 1e-9));
    }

    #[test]
    fn four_cycles_between_quarter_and_third() {
        let grid: Vec<f64> = (0..=20).map(|i| PI * (0.25 + 0.0025 * i as f64)).collect();
        let rows = phi_sweep(&grid, &CycleSearch::default()).unwrap();
        assert!(rows.iter().any(|r| r.has_period(4)));
        for (r, v) in rows.iter().zip(&grid) {
            assert_eq!(r.varphi, *v);
        }
    }

    #[test]
    fn degenerate_angle_rejected() {
        let err = phi_sweep(&[0.1, PI / 2.0], &CycleSearch::default()).unwrap_err();
        assert!(matches!(err, Error::DegenerateParameter { .. }));
    }
}
