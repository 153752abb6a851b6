//! Basins of attraction of the ideal map rendered as a PPM, plus the
//! fraction of the plane each attractor claims.

use std::f64::consts::PI;

use tavis_map::experiments::{basin_grid, default_attractors, MapKind, Region};
use tavis_map::io::{render_basin_image, write_ppm};
use tavis_map::map::MapParams;

fn main() -> tavis_map::error::Result<()> {
    let mut args = std::env::args().skip(1);
    let frac: f64 = args.next().map_or(0.2375, |s| s.parse().expect("varphi/pi"));
    let out = args.next().unwrap_or_else(|| "basin.ppm".into());

    let p = MapParams::checked(frac * PI)?;
    let attractors = default_attractors(&p)?;
    let grid = basin_grid(&Region::square(2.0), 400, 400, &p, &MapKind::Ideal, &attractors, 0.1, 97)?;
    write_ppm(&render_basin_image(&grid), &out)?;

    let total = grid.cells.len() as f64;
    for (k, a) in attractors.iter().enumerate() {
        let share = grid.cells.iter().filter(|c| c.attractor == Some(k)).count() as f64 / total;
        println!("attractor {k}: period {} at {}  share {:.3}", a.period, a.points[0], share);
    }
    let unresolved = grid.cells.iter().filter(|c| c.attractor.is_none()).count();
    println!("unresolved cells: {unresolved}; image in {out}");
    Ok(())
}
