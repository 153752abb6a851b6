//! Dispatch of the command-line subcommands.

use std::io::Write;
use std::path::Path;

use super::config::{Command, MapChoice, RunConfig};
use super::csv::{self, num, Table};
use super::ppm::write_ppm;
use super::render::render_basin_image;
use crate::error::{Error, Result};
use crate::experiments::{
    basin_grid, default_attractors, discrimination_run, phi_sweep, resource_estimate,
    DiscriminationSettings, MapKind,
};
use crate::map::{
    cycle_multiplier, find_attractive_cycles, fixed_points, iterate_map, julia_backward_sample,
    two_cycle, CycleReport, CycleSearch,
};
use crate::quantum::evolution::f_state_rotation;
use crate::quantum::postselect::null_quadrature_phase;
use crate::quantum::{
    exact_step_operator, homodyne_density, homodyne_density_f_state, CoherentFieldSpec,
    ExactStepOperator, HomodyneSpec, Rotation,
};

const DEFAULT_IMAGE: &str = "basin.ppm";

/// Runs one subcommand. Tables go to `--out` when given, otherwise to
/// `stdout`; notes and warnings go to `stderr`.
pub fn run(cfg: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let table = match cfg.command {
        Command::Map => map_table(cfg)?,
        Command::Cycles => cycles_table(cfg)?,
        Command::Sweep => csv::stability_table(&phi_sweep(&cfg.sweep_grid(), &CycleSearch::default())?),
        Command::Julia => {
            csv::points_table(&julia_backward_sample(&cfg.params()?, cfg.points, cfg.seed)?)
        }
        Command::Basin | Command::ExactBasin => return basin(cfg, stderr),
        Command::Discriminate => discriminate(cfg)?,
        Command::Resources => {
            let varphi = cfg.params()?.varphi();
            let rows = (0..=cfg.steps)
                .map(|n| {
                    let n = u32::try_from(n)
                        .map_err(|_| Error::Usage(format!("--steps {n}: too large")))?;
                    resource_estimate(n, varphi)
                })
                .collect::<Result<Vec<_>>>()?;
            csv::resource_table(&rows)
        }
        Command::Homodyne => homodyne(cfg, stderr)?,
        Command::ExactOp => csv::operator_table(&operator(cfg)?.m),
    };
    emit(&table, cfg.out.as_deref(), stdout)
}

fn emit(table: &Table, out: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => csv::write_csv(table, path),
        None => table
            .write_to(stdout)
            .map_err(|e| Error::csv("<stdout>", e)),
    }
}

fn map_table(cfg: &RunConfig) -> Result<Table> {
    let p = cfg.params()?;
    let mut t = Table::new(&["step", "re", "im"]);
    for (i, z) in iterate_map(cfg.z, &p, cfg.steps)?.into_iter().enumerate() {
        let [re, im] = csv::point(z);
        t.push(vec![i.to_string(), re, im]);
    }
    Ok(t)
}

fn cycles_table(cfg: &RunConfig) -> Result<Table> {
    let p = cfg.params()?;
    let mut t = Table::new(&[
        "kind",
        "cycle",
        "period",
        "re",
        "im",
        "abs_multiplier",
        "class",
    ]);
    let mut add = |kind: &str, id: usize, c: &CycleReport| {
        for z in &c.points {
            let [re, im] = csv::point(*z);
            t.push(vec![
                kind.to_string(),
                id.to_string(),
                c.period.to_string(),
                re,
                im,
                num(c.abs_multiplier()),
                c.class.as_str().to_string(),
            ]);
        }
    };
    for (i, z) in fixed_points(&p).iter().enumerate() {
        add("fixed", i, &cycle_multiplier(&[*z], &p)?);
    }
    add("two-cycle", 0, &cycle_multiplier(&two_cycle(&p)?, &p)?);
    for (i, c) in find_attractive_cycles(&p, &CycleSearch::default())?
        .cycles
        .iter()
        .enumerate()
    {
        add("attracting", i, c);
    }
    Ok(t)
}

fn operator(cfg: &RunConfig) -> Result<ExactStepOperator> {
    match &cfg.op {
        Some(path) => Ok(ExactStepOperator {
            m: csv::read_operator_csv(path)?,
            nbar: cfg.nbar,
            gt: cfg.gt,
        }),
        None => exact_step_operator(&CoherentFieldSpec::new(cfg.nbar, 0.0)?, cfg.gt),
    }
}

fn map_kind(cfg: &RunConfig, choice: MapChoice) -> Result<MapKind> {
    Ok(match choice {
        MapChoice::Ideal => MapKind::Ideal,
        MapChoice::Exact => MapKind::Exact(operator(cfg)?),
    })
}

fn basin(cfg: &RunConfig, stderr: &mut dyn Write) -> Result<()> {
    let p = cfg.params()?;
    let choice = match cfg.command {
        Command::ExactBasin => MapChoice::Exact,
        _ => MapChoice::Ideal,
    };
    let kind = map_kind(cfg, choice)?;
    let attractors = default_attractors(&p)?;
    let grid = basin_grid(
        &cfg.region,
        cfg.width,
        cfg.height,
        &p,
        &kind,
        &attractors,
        cfg.tol,
        cfg.max_iter,
    )?;
    let path = cfg.out.as_deref().unwrap_or(Path::new(DEFAULT_IMAGE));
    write_ppm(&render_basin_image(&grid), path)?;
    if let Some(csv_path) = &cfg.csv {
        csv::write_csv(&csv::basin_table(&grid), csv_path)?;
    }
    for (i, c) in attractors.iter().enumerate() {
        let _ = writeln!(
            stderr,
            "attractor {i}: period {} |lambda| {:e}",
            c.period,
            c.abs_multiplier()
        );
    }
    let _ = writeln!(stderr, "wrote {}", path.display());
    Ok(())
}

fn discriminate(cfg: &RunConfig) -> Result<Table> {
    let p = cfg.params()?;
    let kind = map_kind(cfg, cfg.map_kind)?;
    let s = DiscriminationSettings {
        z1: cfg.z1,
        z2: cfg.z2,
        sigma: cfg.sigma,
        samples: cfg.samples,
        steps: cfg.steps,
        seed: cfg.seed,
    };
    Ok(csv::discrimination_table(&discrimination_run(&s, &p, &kind)?))
}

fn homodyne(cfg: &RunConfig, stderr: &mut dyn Write) -> Result<Table> {
    let field = CoherentFieldSpec::new(cfg.nbar, cfg.phi)?;
    let alpha = field.alpha();
    let theta = cfg.theta.unwrap_or_else(|| null_quadrature_phase(alpha));
    if cfg.gt >= cfg.nbar {
        let _ = writeln!(stderr, "warning: gt = {} is not small against nbar = {}", cfg.gt, cfg.nbar);
    }
    if cfg.gt <= 1.0 {
        let _ = writeln!(stderr, "warning: gt = {} <= 1, rotated components overlap |alpha>", cfg.gt);
    }
    let _ = writeln!(
        stderr,
        "theta = {theta}, rotation = {}",
        f_state_rotation(cfg.nbar, cfg.gt)
    );

    let (lo, hi, n) = cfg.q_grid;
    let mut t = Table::new(&["q", "coherent", "f_plus", "f_minus"]);
    for i in 0..n {
        let q = if n == 1 {
            lo
        } else {
            lo + (hi - lo) * i as f64 / (n - 1) as f64
        };
        let h = HomodyneSpec { theta, q };
        t.push(vec![
            num(q),
            num(homodyne_density(&h, alpha)),
            num(homodyne_density_f_state(&h, alpha, cfg.nbar, cfg.gt, Rotation::Plus)),
            num(homodyne_density_f_state(&h, alpha, cfg.nbar, cfg.gt, Rotation::Minus)),
        ]);
    }
    Ok(t)
}
