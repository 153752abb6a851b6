//! Command line, configuration and file formats (CSV tables, PPM images).

pub mod config;
pub mod csv;
pub mod ppm;
pub mod render;
pub mod run;

pub use config::{parse_config, Command, RunConfig};
pub use csv::{read_csv, read_operator_csv, write_csv, write_operator_csv, Table};
pub use ppm::{read_ppm, write_ppm, ImageBuffer};
pub use render::render_basin_image;
pub use run::run;
