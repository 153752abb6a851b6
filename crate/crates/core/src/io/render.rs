use super::ppm::ImageBuffer;
use crate::experiments::BasinGrid;
use crate::map::BasinCell;

pub const UNRESOLVED: [u8; 3] = [255, 255, 0];

/// Base colours of attractors beyond the first two.
const HUES: [[u8; 3]; 6] = [
    [190, 50, 50],
    [50, 150, 60],
    [50, 80, 190],
    [190, 110, 30],
    [130, 50, 170],
    [30, 150, 150],
];

/// Colour of one cell. Attractor 0 is grey `200 + min(it, 55)`, attractor 1
/// dark `40 + min(it, 60)`, attractor `k >= 2` the hue `HUES[(k-2) % 6]`
/// brightened by `min(it, 60)` per channel, unresolved cells pure yellow.
pub fn cell_color(cell: &BasinCell) -> [u8; 3] {
    let it = cell.iterations;
    match cell.attractor {
        None => UNRESOLVED,
        Some(0) => [200 + it.min(55) as u8; 3],
        Some(1) => [40 + it.min(60) as u8; 3],
        Some(k) => HUES[(k - 2) % HUES.len()].map(|c| c.saturating_add(it.min(60) as u8)),
    }
}

pub fn render_basin_image(grid: &BasinGrid) -> ImageBuffer {
    let mut img = ImageBuffer::new(grid.width, grid.height);
    for row in 0..grid.height {
        for col in 0..grid.width {
            img.set(col, row, cell_color(&grid.cell(col, row)));
        }
    }
    img
}
