//! Fixed points, the two-cycle and the attracting cycles of the map for one
//! angle. Usage: `cargo run --example map_cycles -- [varphi/pi]`

use std::f64::consts::PI;

use tavis_map::map::{
    cycle_multiplier, find_attractive_cycles, fixed_points, iterate_map, two_cycle, CycleSearch,
    MapParams,
};
use tavis_map::sphere::ExtendedComplex;

fn main() -> tavis_map::error::Result<()> {
    let frac: f64 = std::env::args().nth(1).map_or(0.1, |s| s.parse().expect("varphi/pi"));
    let p = MapParams::checked(frac * PI)?;

    println!("varphi = {frac} pi");
    for z in fixed_points(&p) {
        let c = cycle_multiplier(&[z], &p)?;
        println!("  fixed {z:>24}  |lambda| = {:.6}  {}", c.abs_multiplier(), c.class.as_str());
    }
    let tc = cycle_multiplier(&two_cycle(&p)?, &p)?;
    println!("  two-cycle {} / {}  |lambda| = {:.6}", tc.points[0], tc.points[1], tc.abs_multiplier());

    let found = find_attractive_cycles(&p, &CycleSearch::default())?;
    for c in &found.cycles {
        println!("  attracting period {} |lambda| = {:.3e} at {}", c.period, c.abs_multiplier(), c.points[0]);
    }

    // a short orbit from an arbitrary start
    let orbit = iterate_map(ExtendedComplex::new(0.3, 0.4).unwrap(), &p, 8)?;
    for (n, z) in orbit.iter().enumerate() {
        println!("  z_{n} = {z}");
    }
    Ok(())
}
