use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

/// 8-bit RGB pixels, row-major, top row first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageBuffer {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl ImageBuffer {
    pub fn new(width: usize, height: usize) -> Self {
        ImageBuffer {
            width,
            height,
            pixels: vec![0; 3 * width * height],
        }
    }

    pub fn from_pixels(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self> {
        if pixels.len() != 3 * width * height {
            return Err(Error::InvalidInput(format!(
                "{} bytes do not make a {width}x{height} RGB image",
                pixels.len()
            )));
        }
        Ok(ImageBuffer {
            width,
            height,
            pixels,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn get(&self, x: usize, y: usize) -> [u8; 3] {
        let i = 3 * (y * self.width + x);
        [self.pixels[i], self.pixels[i + 1], self.pixels[i + 2]]
    }

    pub fn set(&mut self, x: usize, y: usize, rgb: [u8; 3]) {
        let i = 3 * (y * self.width + x);
        self.pixels[i..i + 3].copy_from_slice(&rgb);
    }

    /// Binary PPM: `P6\n<w> <h>\n255\n` followed by the raw pixels.
    pub fn to_ppm_bytes(&self) -> Vec<u8> {
        let mut out = format!("P6\n{} {}\n255\n", self.width, self.height).into_bytes();
        out.extend_from_slice(&self.pixels);
        out
    }

    /// Parses the exact layout written by [`to_ppm_bytes`](Self::to_ppm_bytes).
    pub fn from_ppm_bytes(bytes: &[u8]) -> std::result::Result<Self, String> {
        let mut fields = Vec::with_capacity(4);
        let mut pos = 0;
        while fields.len() < 4 {
            let start = pos;
            while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos == start || pos >= bytes.len() {
                return Err("truncated header".into());
            }
            fields.push(std::str::from_utf8(&bytes[start..pos]).map_err(|e| e.to_string())?);
            pos += 1;
        }
        if fields[0] != "P6" {
            return Err(format!("magic {:?} is not P6", fields[0]));
        }
        let num = |s: &str| s.parse::<usize>().map_err(|e| format!("{s:?}: {e}"));
        let (w, h, max) = (num(fields[1])?, num(fields[2])?, num(fields[3])?);
        if max != 255 {
            return Err(format!("maximum value {max} is not 255"));
        }
        let body = &bytes[pos..];
        if body.len() != 3 * w * h {
            return Err(format!("expected {} pixel bytes, found {}", 3 * w * h, body.len()));
        }
        Ok(ImageBuffer {
            width: w,
            height: h,
            pixels: body.to_vec(),
        })
    }
}

pub fn write_ppm(img: &ImageBuffer, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, img.to_ppm_bytes()).map_err(|e| Error::io(path, e))
}

pub fn read_ppm(path: impl AsRef<Path>) -> Result<ImageBuffer> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    ImageBuffer::from_ppm_bytes(&bytes).map_err(|reason| Error::Format {
        path: path.to_path_buf(),
        reason,
    })
}
