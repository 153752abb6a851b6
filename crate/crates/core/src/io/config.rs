//! Command-line configuration.

use std::ffi::OsString;
use std::f64::consts::PI;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::error::{Error, Result};
use crate::experiments::Region;
use crate::map::MapParams;
use crate::quantum::default_gt;
use crate::sphere::ExtendedComplex;

/// Environment variable that replaces the default seed.
pub const SEED_ENV: &str = "TAVIS_MAP_SEED";
pub const DEFAULT_SEED: u64 = 12345;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Iterate the map from one point.
    Map,
    /// Fixed points, two-cycle and attracting cycles.
    Cycles,
    /// Fixed-point stability and attracting cycles over a range of angles.
    Sweep,
    /// Julia set points by backward iteration.
    Julia,
    /// Basins of attraction of the ideal map, as a PPM image.
    Basin,
    /// Basins of attraction of the exact protocol, as a PPM image.
    ExactBasin,
    /// Overlap of two noisy states under repeated steps.
    Discriminate,
    /// Number of state pairs needed for n steps.
    Resources,
    /// Homodyne densities of the coherent state and the rotated components.
    Homodyne,
    /// The exact single-step operator as CSV.
    ExactOp,
}

impl Command {
    pub fn needs_varphi(&self) -> bool {
        !matches!(self, Command::Sweep | Command::Homodyne | Command::ExactOp)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapChoice {
    Ideal,
    Exact,
}

#[derive(Parser, Debug)]
#[command(name = "tavis-map", version, about = "Nonlinear qubit map from two atoms in a cavity")]
struct Cli {
    command: Command,
    /// Gate angle, in radians or with a `pi` suffix (e.g. 0.2375pi).
    #[arg(long, allow_hyphen_values = true)]
    varphi: Option<String>,
    /// Mean photon number of the cavity field.
    #[arg(long, allow_hyphen_values = true, default_value_t = 10.0)]
    nbar: f64,
    /// Interaction time g t; defaults to pi sqrt(nbar) / 2.
    #[arg(long, allow_hyphen_values = true)]
    gt: Option<String>,
    /// Field phase.
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    phi: String,
    /// xmin,xmax,ymin,ymax
    #[arg(long, allow_hyphen_values = true, default_value = "-2,2,-2,2")]
    region: String,
    /// WIDTHxHEIGHT
    #[arg(long, default_value = "800x800")]
    res: String,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.1)]
    tol: f64,
    #[arg(long, default_value_t = 97)]
    max_iter: u32,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.03)]
    sigma: f64,
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    /// Iterations (map, discriminate) or largest n (resources).
    #[arg(long)]
    steps: Option<usize>,
    /// Random seed; falls back to $TAVIS_MAP_SEED, then a fixed constant.
    #[arg(long)]
    seed: Option<u64>,
    /// Output file; tables go to stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the basin grid as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long = "map", value_enum, default_value_t = MapChoice::Ideal)]
    map_kind: MapChoice,
    /// Start point `re[,im]` or `inf`.
    #[arg(long, allow_hyphen_values = true, default_value = "0.2")]
    z: String,
    #[arg(long, allow_hyphen_values = true, default_value = "-0.2")]
    z1: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0.2")]
    z2: String,
    /// Number of Julia set points.
    #[arg(long, default_value_t = 10_000)]
    points: usize,
    /// Sweep range start.
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    from: String,
    /// Sweep range end.
    #[arg(long, allow_hyphen_values = true, default_value = "pi")]
    to: String,
    /// Number of sweep angles (cell midpoints of the range).
    #[arg(long, default_value_t = 2000)]
    count: usize,
    /// Local-oscillator phase; defaults to the phase where <q> of |alpha> vanishes.
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<String>,
    /// Quadrature grid `min,max,points`.
    #[arg(long, allow_hyphen_values = true, default_value = "-6,6,241")]
    q: String,
    /// Read the exact operator from this CSV instead of computing it.
    #[arg(long)]
    op: Option<PathBuf>,
}

/// Validated settings for one run.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    /// Present for every command that uses the map.
    pub varphi: Option<f64>,
    pub nbar: f64,
    pub gt: f64,
    pub phi: f64,
    pub region: Region,
    pub width: usize,
    pub height: usize,
    pub tol: f64,
    pub max_iter: u32,
    pub sigma: f64,
    pub samples: usize,
    pub steps: usize,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub csv: Option<PathBuf>,
    pub map_kind: MapChoice,
    pub z: ExtendedComplex,
    pub z1: ExtendedComplex,
    pub z2: ExtendedComplex,
    pub points: usize,
    pub sweep: (f64, f64, usize),
    pub theta: Option<f64>,
    pub q_grid: (f64, f64, usize),
    pub op: Option<PathBuf>,
}

impl RunConfig {
    pub fn params(&self) -> Result<MapParams> {
        let varphi = self
            .varphi
            .ok_or_else(|| Error::Usage("--varphi is required".into()))?;
        MapParams::checked(varphi)
    }

    /// Gate angles of a sweep: midpoints of `count` equal cells, degenerate
    /// angles left out.
    pub fn sweep_grid(&self) -> Vec<f64> {
        let (a, b, n) = self.sweep;
        (0..n)
            .map(|i| a + (b - a) * (i as f64 + 0.5) / n as f64)
            .filter(|v| !MapParams::new(*v).is_degenerate())
            .collect()
    }
}

fn usage(flag: &str, value: &str, reason: impl std::fmt::Display) -> Error {
    Error::Usage(format!("--{flag} {value:?}: {reason}"))
}

/// Radians, or a multiple of pi written with a `pi` suffix.
pub fn parse_angle(s: &str) -> std::result::Result<f64, String> {
    let t = s.trim();
    let (num, scale) = match t.strip_suffix("pi") {
        Some(rest) => (rest.trim(), PI),
        None => (t, 1.0),
    };
    let v = match num {
        "" | "+" => 1.0,
        "-" => -1.0,
        _ => num.parse::<f64>().map_err(|e| e.to_string())?,
    };
    let v = v * scale;
    if v.is_finite() {
        Ok(v)
    } else {
        Err("angle must be finite".into())
    }
}

/// `re`, `re,im` or `inf`.
pub fn parse_point(s: &str) -> std::result::Result<ExtendedComplex, String> {
    let t = s.trim();
    if t == "inf" {
        return Ok(ExtendedComplex::Infinity);
    }
    let parts: Vec<&str> = t.split(',').collect();
    let (re, im) = match parts[..] {
        [re] => (re, "0"),
        [re, im] => (re, im),
        _ => return Err("expected re or re,im".into()),
    };
    let f = |x: &str| x.trim().parse::<f64>().map_err(|e| e.to_string());
    let (re, im) = (f(re)?, f(im)?);
    if !(re.is_finite() && im.is_finite()) {
        return Err("coordinates must be finite".into());
    }
    Ok(ExtendedComplex::Finite(num_complex::Complex64::new(re, im)))
}

fn parse_list(s: &str, n: usize) -> std::result::Result<Vec<f64>, String> {
    let v = s
        .split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|e| e.to_string()))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if v.len() != n {
        return Err(format!("expected {n} comma-separated numbers"));
    }
    Ok(v)
}

fn parse_resolution(s: &str) -> std::result::Result<(usize, usize), String> {
    let (w, h) = s.split_once('x').ok_or("expected WIDTHxHEIGHT")?;
    let w: usize = w.trim().parse().map_err(|e: std::num::ParseIntError| e.to_string())?;
    let h: usize = h.trim().parse().map_err(|e: std::num::ParseIntError| e.to_string())?;
    if w == 0 || h == 0 {
        return Err("resolution must be at least 1x1".into());
    }
    Ok((w, h))
}

/// Parses `argv` (program name first), taking the seed fallback from
/// `$TAVIS_MAP_SEED`.
pub fn parse_config<I, T>(argv: I) -> Result<RunConfig>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    parse_config_with_env(argv, std::env::var(SEED_ENV).ok())
}

/// As [`parse_config`] with an explicit value for the seed variable.
pub fn parse_config_with_env<I, T>(argv: I, env_seed: Option<String>) -> Result<RunConfig>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
            Error::Help(e.to_string())
        }
        _ => Error::Usage(e.to_string()),
    })?;

    let varphi = match &cli.varphi {
        Some(s) => {
            let v = parse_angle(s).map_err(|e| usage("varphi", s, e))?;
            if let Err(e) = MapParams::checked(v) {
                return Err(usage("varphi", s, e));
            }
            Some(v)
        }
        None if cli.command.needs_varphi() => {
            return Err(Error::Usage(format!(
                "--varphi is required for `{}`",
                cli.command.to_possible_value().expect("no skipped variants").get_name()
            )))
        }
        None => None,
    };

    if !(cli.nbar.is_finite() && cli.nbar >= 0.0) {
        return Err(usage("nbar", &cli.nbar.to_string(), "must be finite and non-negative"));
    }
    let gt = match &cli.gt {
        Some(s) => parse_angle(s).map_err(|e| usage("gt", s, e))?,
        None => default_gt(cli.nbar),
    };
    let phi = parse_angle(&cli.phi).map_err(|e| usage("phi", &cli.phi, e))?;

    let r = parse_list(&cli.region, 4).map_err(|e| usage("region", &cli.region, e))?;
    let region =
        Region::new(r[0], r[1], r[2], r[3]).map_err(|e| usage("region", &cli.region, e))?;
    let (width, height) = parse_resolution(&cli.res).map_err(|e| usage("res", &cli.res, e))?;
    if !(cli.tol > 0.0 && cli.tol.is_finite()) {
        return Err(usage("tol", &cli.tol.to_string(), "must be positive"));
    }
    if !(cli.sigma >= 0.0 && cli.sigma.is_finite()) {
        return Err(usage("sigma", &cli.sigma.to_string(), "must be non-negative"));
    }
    if cli.samples == 0 {
        return Err(usage("samples", "0", "at least one sample is required"));
    }

    let steps = cli.steps.unwrap_or(match cli.command {
        Command::Discriminate => 6,
        _ => 10,
    });
    let seed = match (cli.seed, env_seed) {
        (Some(s), _) => s,
        (None, Some(s)) => s
            .trim()
            .parse()
            .map_err(|e| Error::Usage(format!("${SEED_ENV} {s:?}: {e}")))?,
        (None, None) => DEFAULT_SEED,
    };

    let z = parse_point(&cli.z).map_err(|e| usage("z", &cli.z, e))?;
    let z1 = parse_point(&cli.z1).map_err(|e| usage("z1", &cli.z1, e))?;
    let z2 = parse_point(&cli.z2).map_err(|e| usage("z2", &cli.z2, e))?;

    let from = parse_angle(&cli.from).map_err(|e| usage("from", &cli.from, e))?;
    let to = parse_angle(&cli.to).map_err(|e| usage("to", &cli.to, e))?;
    if cli.count == 0 {
        return Err(usage("count", "0", "at least one angle is required"));
    }
    let theta = match &cli.theta {
        Some(s) => Some(parse_angle(s).map_err(|e| usage("theta", s, e))?),
        None => None,
    };
    let q = parse_list(&cli.q, 3).map_err(|e| usage("q", &cli.q, e))?;
    if !(q[2] >= 1.0 && q[2].fract() == 0.0 && q[0] <= q[1]) {
        return Err(usage("q", &cli.q, "expected min,max,points with min <= max, points >= 1"));
    }

    Ok(RunConfig {
        command: cli.command,
        varphi,
        nbar: cli.nbar,
        gt,
        phi,
        region,
        width,
        height,
        tol: cli.tol,
        max_iter: cli.max_iter,
        sigma: cli.sigma,
        samples: cli.samples,
        steps,
        seed,
        out: cli.out,
        csv: cli.csv,
        map_kind: cli.map_kind,
        z,
        z1,
        z2,
        points: cli.points,
        sweep: (from, to, cli.count),
        theta,
        q_grid: (q[0], q[1], q[2] as usize),
        op: cli.op,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &str) -> Result<RunConfig> {
        parse_config_with_env(
            std::iter::once("tavis-map").chain(args.split_whitespace()),
            None,
        )
    }

    #[test]
    fn basin_example() {
        let c = parse("basin --varphi 0.2375pi --region -2,2,-2,2 --res 800x800").unwrap();
        assert_eq!(c.command, Command::Basin);
        assert_eq!(c.varphi, Some(0.2375 * PI));
        assert_eq!(c.region, Region::square(2.0));
        assert_eq!((c.width, c.height), (800, 800));
        assert_eq!((c.tol, c.max_iter, c.phi), (0.1, 97, 0.0));
        assert_eq!(c.gt, PI * 10f64.sqrt() / 2.0);
        assert_eq!(c.seed, DEFAULT_SEED);
    }

    #[test]
    fn missing_varphi() {
        let err = parse("basin").unwrap_err();
        assert!(matches!(&err, Error::Usage(m) if m.contains("--varphi")), "{err}");
        assert!(parse("sweep").is_ok());
    }

    #[test]
    fn degenerate_varphi_rejected() {
        let err = parse("map --varphi 0.5pi").unwrap_err();
        assert!(matches!(&err, Error::Usage(m) if m.contains("--varphi") && m.contains("degenerate")));
    }

    #[test]
    fn bad_values_name_their_flag() {
        for (args, flag) in [
            ("basin --varphi 0 --res 0x5", "--res"),
            ("basin --varphi 0 --region 1,0,0,1", "--region"),
            ("basin --varphi 0 --tol 0", "--tol"),
            ("map --varphi x", "--varphi"),
            ("map --varphi 0 --z 1,2,3", "--z"),
            ("discriminate --varphi 0 --sigma -1", "--sigma"),
        ] {
            let err = parse(args).unwrap_err();
            assert!(matches!(&err, Error::Usage(m) if m.contains(flag)), "{args}: {err}");
        }
        assert!(matches!(parse("bogus"), Err(Error::Usage(_))));
        assert!(matches!(parse("--help"), Err(Error::Help(_))));
    }

    #[test]
    fn angles_and_points() {
        assert_eq!(parse_angle("pi").unwrap(), PI);
        assert_eq!(parse_angle("-0.5pi").unwrap(), -0.5 * PI);
        assert_eq!(parse_angle("1.666pi").unwrap(), 1.666 * PI);
        assert_eq!(parse_angle("0.3").unwrap(), 0.3);
        assert!(parse_angle("abc").is_err());
        assert_eq!(parse_point("inf").unwrap(), ExtendedComplex::Infinity);
        assert_eq!(parse_point("-0.5").unwrap(), ExtendedComplex::real(-0.5));
        assert_eq!(
            parse_point("1,-2").unwrap(),
            ExtendedComplex::Finite(num_complex::Complex64::new(1.0, -2.0))
        );
    }

    #[test]
    fn seed_precedence() {
        let argv = ["tavis-map", "julia", "--varphi", "0"];
        assert_eq!(parse_config_with_env(argv, Some("99".into())).unwrap().seed, 99);
        let argv = ["tavis-map", "julia", "--varphi", "0", "--seed", "5"];
        assert_eq!(parse_config_with_env(argv, Some("99".into())).unwrap().seed, 5);
        let argv = ["tavis-map", "julia", "--varphi", "0"];
        assert!(parse_config_with_env(argv, Some("x".into())).is_err());
    }

    #[test]
    fn sweep_grid_skips_degenerate_angles() {
        let c = parse("sweep --from 0 --to pi --count 2000").unwrap();
        let g = c.sweep_grid();
        assert_eq!(g.len(), 2000);
        let c = parse("sweep --from 0.5pi --to 0.5pi --count 1").unwrap();
        assert!(c.sweep_grid().is_empty());
    }
}
