//! Samples the Julia set by backward iteration and renders it as a PPM.
//! Usage: `cargo run --example julia_set -- [varphi/pi] [out.ppm]`

use std::f64::consts::PI;

use tavis_map::io::{write_ppm, ImageBuffer};
use tavis_map::map::{julia_backward_sample, MapParams};

fn main() -> tavis_map::error::Result<()> {
    let mut args = std::env::args().skip(1);
    let frac: f64 = args.next().map_or(0.2, |s| s.parse().expect("varphi/pi"));
    let out = args.next().unwrap_or_else(|| "julia.ppm".into());
    let p = MapParams::checked(frac * PI)?;

    let pts = julia_backward_sample(&p, 200_000, 7)?;
    let (size, half) = (600usize, 2.5);
    let mut img = ImageBuffer::new(size, size);
    for col in 0..size {
        for row in 0..size {
            img.set(col, row, [255, 255, 255]);
        }
    }
    let mut hits = 0;
    for z in pts.iter().filter_map(|z| z.finite()) {
        let col = ((z.re + half) / (2.0 * half) * size as f64).floor();
        let row = ((half - z.im) / (2.0 * half) * size as f64).floor();
        if (0.0..size as f64).contains(&col) && (0.0..size as f64).contains(&row) {
            img.set(col as usize, row as usize, [0, 0, 0]);
            hits += 1;
        }
    }
    write_ppm(&img, &out)?;
    println!("{hits} of {} points inside the window, written to {out}", pts.len());
    Ok(())
}
