use num_complex::Complex64;
use rayon::prelude::*;

use super::MapKind;
use crate::error::{Error, Result};
use crate::map::{
    attractor_points, classify_orbit, find_attractive_cycles, BasinCell, CycleReport,
    CycleSearch, MapParams,
};
use crate::sphere::Finite;

/// Axis-aligned rectangle of the complex plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Region {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

impl Region {
    pub fn new(xmin: f64, xmax: f64, ymin: f64, ymax: f64) -> Result<Self> {
        let ok = [xmin, xmax, ymin, ymax].iter().all(|v| v.is_finite())
            && xmin < xmax
            && ymin < ymax;
        if !ok {
            return Err(Error::InvalidInput(format!(
                "region [{xmin}, {xmax}] x [{ymin}, {ymax}] is empty or not finite"
            )));
        }
        Ok(Region {
            xmin,
            xmax,
            ymin,
            ymax,
        })
    }

    pub fn square(half_width: f64) -> Self {
        Region {
            xmin: -half_width,
            xmax: half_width,
            ymin: -half_width,
            ymax: half_width,
        }
    }

    /// Midpoint of cell `(col, row)` on a `width x height` grid, row 0 at the
    /// top. Written as a weighted mean so symmetric regions give exactly
    /// symmetric coordinates.
    pub fn cell_center(&self, col: usize, row: usize, width: usize, height: usize) -> Complex64 {
        let mid = |lo: f64, hi: f64, i: usize, n: usize| {
            let (i, n) = (i as f64, n as f64);
            ((2.0 * n - 2.0 * i - 1.0) * lo + (2.0 * i + 1.0) * hi) / (2.0 * n)
        };
        Complex64::new(
            mid(self.xmin, self.xmax, col, width),
            mid(self.ymax, self.ymin, row, height),
        )
    }
}

/// Row-major cells, top row first.
#[derive(Clone, Debug, PartialEq)]
pub struct BasinGrid {
    pub region: Region,
    pub width: usize,
    pub height: usize,
    pub cells: Vec<BasinCell>,
}

impl BasinGrid {
    pub fn cell(&self, col: usize, row: usize) -> BasinCell {
        self.cells[row * self.width + col]
    }

    pub fn center(&self, col: usize, row: usize) -> Complex64 {
        self.region.cell_center(col, row, self.width, self.height)
    }

    /// Fraction of cells assigned to the same attractor (or both
    /// unresolved) in two grids of equal shape.
    pub fn agreement(&self, other: &BasinGrid) -> f64 {
        assert_eq!((self.width, self.height), (other.width, other.height));
        let same = self
            .cells
            .iter()
            .zip(&other.cells)
            .filter(|(a, b)| a.attractor == b.attractor)
            .count();
        same as f64 / self.cells.len() as f64
    }
}

/// Attracting cycles found from the critical orbits.
pub fn default_attractors(p: &MapParams) -> Result<Vec<CycleReport>> {
    let found = find_attractive_cycles(p, &CycleSearch::default())?;
    if found.cycles.is_empty() {
        return Err(Error::InvalidInput(format!(
            "no attracting cycle found for varphi = {}",
            p.varphi()
        )));
    }
    Ok(found.cycles)
}

/// Escape-time classification of every cell midpoint. The exact kind is
/// classified against the attractors of the ideal map; a failed
/// postselection leaves the cell unresolved.
#[allow(clippy::too_many_arguments)]
pub fn basin_grid(
    region: &Region,
    width: usize,
    height: usize,
    p: &MapParams,
    kind: &MapKind,
    attractors: &[CycleReport],
    tol: f64,
    max_iter: u32,
) -> Result<BasinGrid> {
    if width == 0 || height == 0 {
        return Err(Error::InvalidInput(format!("resolution {width}x{height} is empty")));
    }
    p.ensure_regular()?;
    let targets = attractor_points(attractors, tol)?;

    let rows: Vec<Vec<BasinCell>> = (0..height)
        .into_par_iter()
        .map(|row| {
            (0..width)
                .map(|col| {
                    let z = Finite(region.cell_center(col, row, width, height));
                    classify_orbit(z, &targets, tol, max_iter, |w| {
                        kind.step(w, p).ok().flatten()
                    })
                })
                .collect()
        })
        .collect();

    Ok(BasinGrid {
        region: *region,
        width,
        height,
        cells: rows.into_iter().flatten().collect(),
    })
}
