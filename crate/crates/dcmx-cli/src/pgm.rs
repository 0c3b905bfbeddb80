//! Minimal PGM (portable graymap) codec: ASCII `P2` and binary `P5`,
//! 8-bit depth. Pixels are held as `f64` so downstream transforms don't
//! lose precision; values are clamped to `[0, 255]` and rounded only when
//! written back out.

use crate::{CliError, CliResult};
use std::fmt::Write as _;
use std::path::Path;

/// A grayscale image with row-major pixels.
#[derive(Debug, Clone, PartialEq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    pixels: Vec<f64>,
}

impl GrayImage {
    /// Builds an image; dimensions must be positive and pixels finite.
    pub fn new(width: usize, height: usize, pixels: Vec<f64>) -> CliResult<Self> {
        if width == 0 || height == 0 {
            return Err(CliError::data(
                "<image>",
                format!("image dimensions must be positive, got {width}x{height}"),
            ));
        }
        if pixels.len() != width * height {
            return Err(CliError::data(
                "<image>",
                format!(
                    "pixel count {} does not match {width}x{height}",
                    pixels.len()
                ),
            ));
        }
        if let Some(bad) = pixels.iter().find(|p| !p.is_finite()) {
            return Err(CliError::data(
                "<image>",
                format!("non-finite pixel value {bad}"),
            ));
        }
        Ok(GrayImage {
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

    /// Row-major pixel values.
    pub fn pixels(&self) -> &[f64] {
        &self.pixels
    }

    pub fn pixel(&self, row: usize, col: usize) -> f64 {
        self.pixels[row * self.width + col]
    }

    /// The pixel value clamped to `[0, 255]` and rounded, as written out.
    fn quantized(&self, idx: usize) -> u8 {
        self.pixels[idx].clamp(0.0, 255.0).round() as u8
    }
}

/// Parses PGM bytes (`P2` or `P5`). `label` names the source in errors.
pub fn parse_pgm(label: &str, bytes: &[u8]) -> CliResult<GrayImage> {
    let bad = |message: String| CliError::data(label, message);
    let magic = bytes.get(..2).ok_or_else(|| bad("file too short for a PGM header".into()))?;
    let binary = match magic {
        b"P2" => false,
        b"P5" => true,
        _ => {
            return Err(bad(format!(
                "unsupported magic {:?}; only P2 and P5 graymaps are handled",
                String::from_utf8_lossy(magic)
            )))
        }
    };

    // Header tokens (width, height, maxval) with `#` comments allowed.
    let mut pos = 2usize;
    let mut header = [0usize; 3];
    for slot in header.iter_mut() {
        // Skip whitespace and comments.
        loop {
            match bytes.get(pos) {
                Some(b) if b.is_ascii_whitespace() => pos += 1,
                Some(b'#') => {
                    while let Some(&b) = bytes.get(pos) {
                        pos += 1;
                        if b == b'\n' {
                            break;
                        }
                    }
                }
                Some(_) => break,
                None => return Err(bad("unexpected end of file in header".into())),
            }
        }
        let start = pos;
        while let Some(b) = bytes.get(pos) {
            if b.is_ascii_digit() {
                pos += 1;
            } else {
                break;
            }
        }
        if pos == start {
            return Err(bad(format!(
                "expected a number in the header at byte {start}"
            )));
        }
        let text = std::str::from_utf8(&bytes[start..pos]).expect("digits are UTF-8");
        *slot = text
            .parse()
            .map_err(|_| bad(format!("header value {text:?} out of range")))?;
    }
    let [width, height, maxval] = header;
    if width == 0 || height == 0 {
        return Err(bad(format!("degenerate dimensions {width}x{height}")));
    }
    if maxval == 0 || maxval > 255 {
        return Err(bad(format!(
            "unsupported maxval {maxval}; only 8-bit graymaps (1..=255) are handled"
        )));
    }

    let count = width * height;
    let mut pixels = Vec::with_capacity(count);
    if binary {
        // Exactly one whitespace byte separates the header from raster data.
        match bytes.get(pos) {
            Some(b) if b.is_ascii_whitespace() => pos += 1,
            _ => return Err(bad("missing whitespace before P5 raster data".into())),
        }
        let raster = bytes
            .get(pos..pos + count)
            .ok_or_else(|| bad(format!("raster truncated: expected {count} bytes")))?;
        pixels.extend(raster.iter().map(|&b| f64::from(b)));
        if bytes.len() > pos + count {
            return Err(bad("trailing bytes after raster data".into()));
        }
    } else {
        let text = std::str::from_utf8(&bytes[pos..])
            .map_err(|_| bad("P2 raster is not valid UTF-8 text".into()))?;
        for tok in text.split_whitespace() {
            if pixels.len() == count {
                return Err(bad("trailing values after raster data".into()));
            }
            let v: usize = tok
                .parse()
                .map_err(|_| bad(format!("pixel {tok:?} is not an integer")))?;
            if v > maxval {
                return Err(bad(format!("pixel {v} exceeds maxval {maxval}")));
            }
            pixels.push(v as f64);
        }
        if pixels.len() != count {
            return Err(bad(format!(
                "raster truncated: expected {count} pixels, found {}",
                pixels.len()
            )));
        }
    }
    GrayImage::new(width, height, pixels)
}

/// Loads a PGM file from disk.
pub fn load_pgm(path: &Path) -> CliResult<GrayImage> {
    let label = path.display().to_string();
    let bytes = std::fs::read(path).map_err(|e| CliError::io(&label, e))?;
    parse_pgm(&label, &bytes)
}

/// Renders the ASCII (`P2`) form, 70-column friendly.
pub fn render_p2(img: &GrayImage) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "P2");
    let _ = writeln!(out, "{} {}", img.width(), img.height());
    let _ = writeln!(out, "255");
    for row in 0..img.height() {
        for col in 0..img.width() {
            if col > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{}", img.quantized(row * img.width() + col));
        }
        out.push('\n');
    }
    out
}

/// Encodes the binary (`P5`) form.
pub fn encode_p5(img: &GrayImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    out.extend((0..img.pixels().len()).map(|i| img.quantized(i)));
    out
}

/// Saves as binary `P5` (the compact standard interchange form).
pub fn save_pgm(img: &GrayImage, path: &Path) -> CliResult<()> {
    let label = path.display().to_string();
    std::fs::write(path, encode_p5(img)).map_err(|e| CliError::io(&label, e))
}
