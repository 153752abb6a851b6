use super::{apply_unchecked, CycleReport, MapParams};
use crate::error::{Error, Result};
use crate::sphere::ExtendedComplex;

/// Escape-time classification of one initial point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasinCell {
    /// Index into the attractor list, `None` when unresolved.
    pub attractor: Option<usize>,
    /// Iterations needed to come within tolerance; equals the cap when
    /// unresolved.
    pub iterations: u32,
}

impl BasinCell {
    pub fn unresolved(max_iter: u32) -> Self {
        BasinCell {
            attractor: None,
            iterations: max_iter,
        }
    }
}

/// Iterates `z` under the ideal map until it is within `tol` of a point of
/// one of `attractors`.
pub fn classify_basin_point(
    z: ExtendedComplex,
    p: &MapParams,
    attractors: &[CycleReport],
    tol: f64,
    max_iter: u32,
) -> Result<BasinCell> {
    p.ensure_regular()?;
    let targets = attractor_points(attractors, tol)?;
    Ok(classify_orbit(z, &targets, tol, max_iter, |w| {
        Some(apply_unchecked(w, p))
    }))
}

/// Flattens cycles into `(cycle index, point)` targets after validating the
/// classification inputs.
pub(crate) fn attractor_points(
    attractors: &[CycleReport],
    tol: f64,
) -> Result<Vec<(usize, ExtendedComplex)>> {
    if attractors.is_empty() {
        return Err(Error::InvalidInput("no attractors to classify against".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {tol}")));
    }
    Ok(attractors
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.points.iter().map(move |p| (i, *p)))
        .collect())
}

/// Generic escape-time loop over an arbitrary step. A step returning `None`
/// (a failed postselection) leaves the point unresolved.
pub fn classify_orbit<F>(
    mut z: ExtendedComplex,
    targets: &[(usize, ExtendedComplex)],
    tol: f64,
    max_iter: u32,
    mut step: F,
) -> BasinCell
where
    F: FnMut(ExtendedComplex) -> Option<ExtendedComplex>,
{
    for it in 0..=max_iter {
        let hit = targets
            .iter()
            .map(|(id, a)| (*id, a.distance(&z)))
            .filter(|(_, d)| *d < tol)
            .min_by(|a, b| a.1.total_cmp(&b.1));
        if let Some((id, _)) = hit {
            return BasinCell {
                attractor: Some(id),
                iterations: it,
            };
        }
        if it == max_iter {
            break;
        }
        match step(z) {
            Some(next) => z = next,
            None => break,
        }
    }
    BasinCell::unresolved(max_iter)
}
