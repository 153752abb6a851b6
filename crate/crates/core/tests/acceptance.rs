//! Acceptance suite: ten criteria, one PASS/FAIL line each. Exits non-zero
//! when any criterion fails.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, PI};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tavis_map::experiments::{
    discrimination_run, phi_sweep, resource_estimate, DiscriminationSettings, MapKind,
};
use tavis_map::map::{
    apply_map, cycle_multiplier, find_attractive_cycles, fixed_points, julia_backward_sample,
    two_cycle, CriticalOrbit, CycleSearch, MapParams, StabilityClass,
};
use tavis_map::quantum::atoms::{mat4_adjoint, mat4_max_diff, mat4_mul};
use tavis_map::quantum::{
    block_propagator, evolve_exact, homodyne_density, homodyne_density_f_state,
    ideal_postselection_operator, protocol_step_exact, protocol_step_ideal, AtomPairState,
    CoherentFieldSpec, ExactStepOperator, HomodyneSpec, Rotation,
};
use tavis_map::sphere::{ExtendedComplex, Finite};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within_time(elapsed: Duration, limit: Duration) -> Result<(), String> {
    check(elapsed <= limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn real(x: f64) -> ExtendedComplex {
    ExtendedComplex::real(x)
}

fn finite(z: ExtendedComplex) -> Complex64 {
    z.finite().expect("finite point")
}

/// 1. Fixed points for random angles; the two-cycle at varphi = 0.
fn fixed_points_and_two_cycle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = 0.0f64;
    let mut tested = 0;
    while tested < 100 {
        let p = MapParams::new(rng.random_range(0.0..2.0 * PI));
        if p.is_degenerate() {
            continue;
        }
        let fp = fixed_points(&p);
        check(fp == [real(-1.0), real(0.0), real(1.0)], || format!("{fp:?}"))?;
        for z in fp {
            worst = worst.max(apply_map(z, &p).map_err(err)?.distance(&z));
        }
        tested += 1;
    }
    check(worst < 1e-12, || format!("fixed point error {worst:e}"))?;

    let p = MapParams::new(0.0);
    let cyc = two_cycle(&p).map_err(err)?;
    let r3 = Complex64::new(0.0, 3f64.sqrt());
    let dev = (finite(cyc[0]) + r3).norm().max((finite(cyc[1]) - r3).norm());
    check(dev < 1e-15, || format!("two-cycle {cyc:?}"))?;
    let report = cycle_multiplier(&cyc, &p).map_err(err)?;
    let lambda = report.abs_multiplier();
    check((lambda - 4.0).abs() < 1e-12, || format!("|lambda| = {lambda}"))?;
    check(report.class == StabilityClass::Repelling, || format!("{:?}", report.class))?;
    Ok(format!(
        "max fixed-point error {worst:.1e} over {tested} angles; two-cycle +-i sqrt3, |lambda| = {lambda}"
    ))
}

/// Fourth-order central difference of the map at a finite point.
fn fd_derivative(z: Complex64, p: &MapParams, h: f64) -> Result<Complex64, String> {
    let f = |dz: f64| -> Result<Complex64, String> {
        let w = apply_map(Finite(z + dz), p).map_err(err)?;
        w.finite().ok_or_else(|| "difference stencil hit a pole".to_string())
    };
    Ok((f(-2.0 * h)? - 8.0 * f(-h)? + 8.0 * f(h)? - f(2.0 * h)?) / (12.0 * h))
}

fn pole_distance(z: Complex64, p: &MapParams) -> f64 {
    let pole = Complex64::i() * Complex64::from_polar(1.0, -p.varphi());
    (z - pole).norm().min((z + pole).norm())
}

/// 2. Stability of the fixed points over the angle and the 4-cycles.
fn stability_structure() -> Outcome {
    let n = 2000;
    let spacing = PI / n as f64;
    let grid: Vec<f64> = (0..n).map(|i| (i as f64 + 0.5) * spacing).collect();
    let mut worst = 0.0f64;
    let mut class_pm = Vec::with_capacity(n);
    let mut class_0 = Vec::with_capacity(n);
    for &v in &grid {
        let p = MapParams::checked(v).map_err(err)?;
        let mut moduli = [0.0; 3];
        for (k, x) in [0.0, 1.0, -1.0].into_iter().enumerate() {
            let z = Complex64::new(x, 0.0);
            let h = 1e-3 * pole_distance(z, &p).min(1.0);
            let d = fd_derivative(z, &p, h)?.norm();
            let expect = if k == 0 {
                (2.0 * v.cos()).abs()
            } else {
                v.tan().abs()
            };
            worst = worst.max((d - expect).abs() / expect.max(1.0));
            moduli[k] = d;
        }
        class_0.push(StabilityClass::from_modulus(moduli[0]).is_attracting());
        class_pm.push(
            StabilityClass::from_modulus(moduli[1]).is_attracting()
                && StabilityClass::from_modulus(moduli[2]).is_attracting(),
        );
    }
    check(worst < 1e-10, || format!("multiplier mismatch {worst:e}"))?;

    let transitions = |c: &[bool]| -> Vec<f64> {
        (1..c.len())
            .filter(|&i| c[i] != c[i - 1])
            .map(|i| 0.5 * (grid[i] + grid[i - 1]))
            .collect()
    };
    let t_pm = transitions(&class_pm);
    let t_0 = transitions(&class_0);
    check(
        t_pm.len() == 2 && (t_pm[0] - FRAC_PI_4).abs() <= spacing && (t_pm[1] - 3.0 * FRAC_PI_4).abs() <= spacing,
        || format!("+-1 transitions at {t_pm:?}"),
    )?;
    check(
        t_0.len() == 2 && (t_0[0] - FRAC_PI_3).abs() <= spacing && (t_0[1] - 2.0 * FRAC_PI_3).abs() <= spacing,
        || format!("0 transitions at {t_0:?}"),
    )?;

    let rows = phi_sweep(&grid, &CycleSearch::default()).map_err(err)?;
    let four: Vec<f64> = rows
        .iter()
        .filter(|r| r.varphi > FRAC_PI_4 && r.varphi < FRAC_PI_3 && r.has_period(4))
        .map(|r| r.varphi / PI)
        .collect();
    check(!four.is_empty(), || "no attracting 4-cycle in (pi/4, pi/3)".into())?;
    Ok(format!(
        "max relative multiplier error {worst:.1e}; transitions at {:.4}pi and {:.4}pi; 4-cycles for {} angles in [{:.4}pi, {:.4}pi]",
        t_pm[0] / PI,
        t_0[0] / PI,
        four.len(),
        four[0],
        four[four.len() - 1]
    ))
}

/// 3. Noiseless discrimination of -0.2 and 0.2.
fn discrimination_headline() -> Outcome {
    let s = DiscriminationSettings {
        z1: real(-0.2),
        z2: real(0.2),
        sigma: 0.0,
        samples: 1,
        steps: 3,
        seed: 0,
    };
    let means = discrimination_run(&s, &MapParams::new(0.0), &MapKind::Ideal)
        .map_err(err)?
        .mean_overlaps();
    // independent: x -> 2x/(1+x^2) on the real axis, overlap (1-x^2)/(1+x^2)
    let mut x = 0.2f64;
    for _ in 0..3 {
        x = 2.0 * x / (1.0 + x * x);
    }
    let oracle = (1.0 - x * x) / (1.0 + x * x);
    check((means[0] - 0.9231).abs() < 5e-5, || format!("start {}", means[0]))?;
    check(means[3] <= 0.085, || format!("step 3 overlap {}", means[3]))?;
    check((means[3] - oracle).abs() < 1e-3, || {
        format!("step 3 overlap {} vs direct iteration {oracle}", means[3])
    })?;
    Ok(format!(
        "overlaps {:.5}, {:.5}, {:.5}, {:.5}; direct iteration {oracle:.5}",
        means[0], means[1], means[2], means[3]
    ))
}

/// 4. Noisy inputs, sigma = 0.03.
fn noise_robustness() -> Outcome {
    let s = DiscriminationSettings {
        z1: real(-0.2),
        z2: real(0.2),
        sigma: 0.03,
        samples: 10_000,
        steps: 6,
        seed: 20_240_617,
    };
    let r = discrimination_run(&s, &MapParams::new(0.0), &MapKind::Ideal).map_err(err)?;
    let rms: Vec<f64> = r.steps.iter().map(|s| s.rms).collect();
    let mean6 = r.steps[6].mean_overlap;
    check(rms[5] < rms[2], || format!("rms step 5 {} >= step 2 {}", rms[5], rms[2]))?;
    check(mean6 < 0.05, || format!("mean overlap at step 6 is {mean6}"))?;
    Ok(format!(
        "rms step 2 {:.4}, step 5 {:.4}; mean overlap step 6 {mean6:.4}",
        rms[2], rms[5]
    ))
}

/// 5. Exact protocol from +-0.5 for 97 steps.
fn exact_fixed_points() -> Outcome {
    let p = MapParams::new(0.0);
    let mut parts = Vec::new();
    for (nbar, tol) in [(10.0, 0.1), (100.0, 0.01)] {
        let op = ExactStepOperator::at_default_time(nbar).map_err(err)?;
        for start in [0.5, -0.5] {
            let mut z = real(start);
            for _ in 0..97 {
                z = protocol_step_exact(z, &p, &op).map_err(err)?.z;
            }
            let target = real(start.signum());
            let d = z.distance(&target);
            check(d < tol, || format!("nbar {nbar}, start {start}: ended at {z}, distance {d}"))?;
            parts.push(format!("nbar {nbar} from {start}: {:.5}", finite(z).re));
        }
    }
    Ok(parts.join("; "))
}

/// 6. Single-step discrepancy against the ideal map shrinks with nbar.
fn exact_to_ideal_convergence() -> Outcome {
    let p = MapParams::new(0.95 * FRAC_PI_4);
    let grid: Vec<ExtendedComplex> = [-0.5, 0.0, 0.5]
        .iter()
        .flat_map(|&x| [-0.5, 0.0, 0.5].map(|y| Finite(Complex64::new(x, y))))
        .collect();
    let mut worst = Vec::new();
    for nbar in [10.0, 50.0, 100.0] {
        let op = ExactStepOperator::at_default_time(nbar).map_err(err)?;
        let mut m = 0.0f64;
        for z in &grid {
            let exact = protocol_step_exact(*z, &p, &op).map_err(err)?.z;
            let ideal = apply_map(*z, &p).map_err(err)?;
            m = m.max(exact.distance(&ideal));
        }
        worst.push(m);
    }
    check(worst[1] <= worst[0] && worst[2] <= worst[1], || format!("{worst:?}"))?;
    Ok(format!(
        "max discrepancy {:.4} (nbar 10), {:.4} (50), {:.4} (100)",
        worst[0], worst[1], worst[2]
    ))
}

/// 7. Critical orbits and the Julia set at three angles.
fn julia_structure() -> Outcome {
    let search = CycleSearch::default();

    let p = MapParams::new(1.666 * PI);
    let found = find_attractive_cycles(&p, &search).map_err(err)?;
    check(found.cycles.len() == 1, || format!("{} cycles at 1.666pi", found.cycles.len()))?;
    let c = &found.cycles[0];
    check(c.period == 1 && c.points[0].distance(&real(0.0)) < 1e-9, || format!("{c:?}"))?;
    check(
        found.orbits.iter().all(|o| *o == CriticalOrbit::Attracted { cycle: 0 }),
        || format!("{:?}", found.orbits),
    )?;

    let p = MapParams::new(0.95 * FRAC_PI_4);
    let found = find_attractive_cycles(&p, &search).map_err(err)?;
    let limit = |o: &CriticalOrbit| match o {
        CriticalOrbit::Attracted { cycle } => {
            let c = &found.cycles[*cycle];
            (c.period == 1).then(|| c.points[0])
        }
        _ => None,
    };
    let ends = [limit(&found.orbits[0]), limit(&found.orbits[1])];
    let hits = |t: f64| ends.iter().flatten().any(|z| z.distance(&real(t)) < 1e-9);
    check(hits(1.0) && hits(-1.0), || format!("critical orbits end at {ends:?}"))?;

    let pts = julia_backward_sample(&MapParams::new(0.0), 1000, 42).map_err(err)?;
    let off = pts
        .iter()
        .map(|z| z.finite().map_or(0.0, |w| w.re.abs()))
        .fold(0.0, f64::max);
    check(off < 1e-6, || format!("max |Re z| = {off:e}"))?;
    Ok(format!(
        "1.666pi: both critical orbits -> 0; 0.95pi/4: orbits -> +1 and -1; varphi = 0: max |Re z| {off:.1e} over 1000 points"
    ))
}

/// 8. Lower bound of the ideal success probability.
fn success_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut tested = 0;
    let mut slack = f64::INFINITY;
    while tested < 10_000 {
        let varphi = rng.random_range(0.0..2.0 * PI);
        let p = MapParams::new(varphi);
        if p.is_degenerate() {
            continue;
        }
        let r = (rng.random_range(0.0..1.0) * PI / 2.0).tan();
        let z = Finite(Complex64::from_polar(r, rng.random_range(0.0..2.0 * PI)));
        let ps = protocol_step_ideal(z, &p).map_err(err)?.p_success;
        let bound = varphi.cos().powi(2) / 4.0;
        check(ps >= bound - 1e-12, || format!("p = {ps} < {bound} at z = {z}, varphi = {varphi}"))?;
        slack = slack.min(ps - bound);
        tested += 1;
    }
    let mut worst_eq = 0.0f64;
    for varphi in [0.0, 0.3, 1.0, 2.5, 4.0, 5.9] {
        let z = Complex64::i() * Complex64::from_polar(1.0, -varphi);
        let ps = protocol_step_ideal(Finite(z), &MapParams::new(varphi)).map_err(err)?.p_success;
        worst_eq = worst_eq.max((ps - varphi.cos().powi(2) / 4.0).abs());
    }
    check(worst_eq < 1e-9, || format!("equality off by {worst_eq:e}"))?;
    Ok(format!(
        "min p - bound {slack:.2e} over {tested} samples; equality at z = i e^(-i varphi) within {worst_eq:.1e}"
    ))
}

/// 9. Resource counts.
fn resource_formula() -> Outcome {
    let a = resource_estimate(3, 0.0).map_err(err)?.pairs;
    let b = resource_estimate(2, FRAC_PI_4).map_err(err)?.pairs;
    check(a == 512 && b == 256, || format!("got {a} and {b}"))?;
    Ok(format!("N(3, 0) = {a}, N(2, pi/4) = {b}"))
}

fn random_atom(rng: &mut ChaCha8Rng) -> AtomPairState {
    let mut c = [Complex64::new(0.0, 0.0); 4];
    for x in &mut c {
        *x = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    }
    let n = c.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    AtomPairState {
        c0: c[0] / n,
        cminus: c[1] / n,
        cplus: c[2] / n,
        c1: c[3] / n,
    }
}

/// 10. Norm, projector, dark channel, block unitarity, homodyne normalization.
fn physics_invariants() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);

    let mut norm_err = 0.0f64;
    let mut dark_ok = true;
    for nbar in [5.0, 10.0, 50.0] {
        let field = CoherentFieldSpec::new(nbar, rng.random_range(0.0..2.0 * PI)).map_err(err)?;
        for _ in 0..100 {
            let atom = random_atom(&mut rng);
            let s = evolve_exact(&atom, &field, rng.random_range(0.0..30.0)).map_err(err)?;
            norm_err = norm_err.max((s.norm_sqr() - 1.0).abs());
            dark_ok &= s.dark.iter().zip(&s.coherent).all(|(d, p)| *d == atom.cminus * p);
        }
    }
    check(norm_err < 1e-10, || format!("norm error {norm_err:e}"))?;
    check(dark_ok, || "dark channel not proportional to |alpha>".into())?;

    let mut proj_err = 0.0f64;
    for _ in 0..20 {
        let m = ideal_postselection_operator(rng.random_range(-PI..PI));
        proj_err = proj_err
            .max(mat4_max_diff(&mat4_mul(&m, &m), &m))
            .max(mat4_max_diff(&mat4_adjoint(&m), &m));
    }
    check(proj_err < 1e-14, || format!("projector error {proj_err:e}"))?;

    let mut unit_err = 0.0f64;
    for n in 0..200 {
        let u = block_propagator(n, rng.random_range(0.0..50.0));
        let d = u.len();
        for a in 0..d {
            for b in 0..d {
                let dot: Complex64 = (0..d).map(|k| u[a][k] * u[b][k].conj()).sum();
                let e = if a == b { 1.0 } else { 0.0 };
                unit_err = unit_err.max((dot - e).norm());
            }
        }
    }
    check(unit_err < 1e-12, || format!("unitarity error {unit_err:e}"))?;

    let alpha = Complex64::from_polar(10.0, 0.4);
    let dq = 1e-3;
    let mut hom_err = 0.0f64;
    for which in [None, Some(Rotation::Plus), Some(Rotation::Minus)] {
        let integral: f64 = (-30_000..=30_000)
            .map(|i| {
                let h = HomodyneSpec { theta: 0.7, q: i as f64 * dq };
                match which {
                    None => homodyne_density(&h, alpha),
                    Some(r) => homodyne_density_f_state(&h, alpha, 100.0, 5.0, r),
                }
            })
            .sum::<f64>()
            * dq;
        hom_err = hom_err.max((integral - 1.0).abs());
    }
    check(hom_err < 1e-8, || format!("homodyne normalization error {hom_err:e}"))?;

    Ok(format!(
        "norm {norm_err:.1e}, projector {proj_err:.1e}, dark channel exact, unitarity {unit_err:.1e}, homodyne {hom_err:.1e}"
    ))
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("fixed points and two-cycle", Duration::from_secs(1), fixed_points_and_two_cycle),
        ("stability structure", Duration::from_secs(30), stability_structure),
        ("discrimination headline", Duration::from_secs(1), discrimination_headline),
        ("noise robustness", Duration::from_secs(10), noise_robustness),
        ("exact map fixed points", Duration::from_secs(60), exact_fixed_points),
        ("exact to ideal convergence", Duration::from_secs(120), exact_to_ideal_convergence),
        ("julia structure", Duration::from_secs(10), julia_structure),
        ("success probability bound", Duration::from_secs(1), success_bound),
        ("resource formula", Duration::from_secs(1), resource_formula),
        ("physics invariants", Duration::from_secs(30), physics_invariants),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| within_time(elapsed, *limit).map(|_| detail));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({elapsed:.2?}): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
