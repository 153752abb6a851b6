use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;

use super::{overlap, pairwise_sum, MapKind};
use crate::error::{Error, Result};
use crate::map::MapParams;
use crate::sphere::{ExtendedComplex, Finite, Infinity};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiscriminationSettings {
    pub z1: ExtendedComplex,
    pub z2: ExtendedComplex,
    /// Standard deviation of the Gaussian noise on real and imaginary parts.
    pub sigma: f64,
    pub samples: usize,
    pub steps: usize,
    pub seed: u64,
}

/// Overlap statistics after `step` iterations (step 0 is the input pair).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StepStats {
    pub step: usize,
    pub mean_overlap: f64,
    /// Root-mean-square deviation from the mean.
    pub rms: f64,
    /// Samples still alive at this step.
    pub count: usize,
    /// Samples lost to failed postselections up to and including this step.
    pub failures: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiscriminationReport {
    pub map: String,
    pub samples: usize,
    pub steps: Vec<StepStats>,
}

impl DiscriminationReport {
    pub fn mean_overlaps(&self) -> Vec<f64> {
        self.steps.iter().map(|s| s.mean_overlap).collect()
    }
}

fn perturb(z: ExtendedComplex, dre: f64, dim: f64) -> ExtendedComplex {
    match z {
        Finite(w) => Finite(w + num_complex::Complex64::new(dre, dim)),
        Infinity => Infinity,
    }
}

/// Overlap trajectory of one noisy pair; `None` after a failed step.
fn trajectory(
    index: usize,
    s: &DiscriminationSettings,
    noise: &Normal<f64>,
    p: &MapParams,
    kind: &MapKind,
) -> Result<Vec<Option<f64>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    rng.set_stream(index as u64);
    let d: [f64; 4] = std::array::from_fn(|_| noise.sample(&mut rng));
    let mut a = perturb(s.z1, d[0], d[1]);
    let mut b = perturb(s.z2, d[2], d[3]);

    let mut out = Vec::with_capacity(s.steps + 1);
    out.push(Some(overlap(a, b)));
    for _ in 0..s.steps {
        match (kind.step(a, p)?, kind.step(b, p)?) {
            (Some(x), Some(y)) => {
                a = x;
                b = y;
                out.push(Some(overlap(a, b)));
            }
            _ => break,
        }
    }
    out.resize(s.steps + 1, None);
    Ok(out)
}

/// Monte Carlo estimate of how the overlap of two noisy input states evolves
/// under the map. Sample `i` draws its noise from stream `i` of a ChaCha8
/// generator seeded with `seed`, and statistics are reduced in sample order,
/// so the report does not depend on the thread count.
pub fn discrimination_run(
    s: &DiscriminationSettings,
    p: &MapParams,
    kind: &MapKind,
) -> Result<DiscriminationReport> {
    if !(s.sigma >= 0.0 && s.sigma.is_finite()) {
        return Err(Error::InvalidInput(format!("sigma must be non-negative, got {}", s.sigma)));
    }
    if s.samples == 0 {
        return Err(Error::InvalidInput("at least one sample is required".into()));
    }
    p.ensure_regular()?;
    let noise = Normal::new(0.0, s.sigma)
        .map_err(|e| Error::InvalidInput(format!("noise distribution: {e}")))?;

    let paths: Vec<Vec<Option<f64>>> = (0..s.samples)
        .into_par_iter()
        .map(|i| trajectory(i, s, &noise, p, kind))
        .collect::<Result<_>>()?;

    let steps = (0..=s.steps)
        .map(|k| {
            let xs: Vec<f64> = paths.iter().filter_map(|t| t[k]).collect();
            let n = xs.len();
            let (mean, rms) = if n == 0 {
                (f64::NAN, f64::NAN)
            } else {
                let mean = pairwise_sum(&xs) / n as f64;
                let dev: Vec<f64> = xs.iter().map(|x| (x - mean) * (x - mean)).collect();
                (mean, (pairwise_sum(&dev) / n as f64).sqrt())
            };
            StepStats {
                step: k,
                mean_overlap: mean,
                rms,
                count: n,
                failures: s.samples - n,
            }
        })
        .collect();

    Ok(DiscriminationReport {
        map: kind.label(),
        samples: s.samples,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn settings(sigma: f64, samples: usize, steps: usize) -> DiscriminationSettings {
        DiscriminationSettings {
            z1: ExtendedComplex::real(-0.2),
            z2: ExtendedComplex::real(0.2),
            sigma,
            samples,
            steps,
            seed: 7,
        }
    }

    #[test]
    fn noiseless_ideal_sequence() {
        let r = discrimination_run(&settings(0.0, 3, 3), &MapParams::new(0.0), &MapKind::Ideal)
            .unwrap();
        // overlap(-z, z) = (1 - z^2)/(1 + z^2) along z = 1/5, 5/13, 65/97, 6305/6817
        let expect = [12.0 / 13.0, 144.0 / 194.0, 0.380_226, 0.077_921];
        for (s, e) in r.steps.iter().zip(expect) {
            assert!((s.mean_overlap - e).abs() < 1e-5, "{s:?}");
            assert!(s.rms < 1e-12);
            assert_eq!((s.count, s.failures), (3, 0));
        }
    }

    #[test]
    fn seeded_runs_repeat_exactly() {
        let p = MapParams::new(0.0);
        let a = discrimination_run(&settings(0.03, 200, 6), &p, &MapKind::Ideal).unwrap();
        let b = discrimination_run(&settings(0.03, 200, 6), &p, &MapKind::Ideal).unwrap();
        assert_eq!(a, b);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let c = pool
            .install(|| discrimination_run(&settings(0.03, 200, 6), &p, &MapKind::Ideal))
            .unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn invalid_settings() {
        let p = MapParams::new(0.0);
        assert!(discrimination_run(&settings(-1.0, 1, 1), &p, &MapKind::Ideal).is_err());
        assert!(discrimination_run(&settings(0.1, 0, 1), &p, &MapKind::Ideal).is_err());
    }
}
