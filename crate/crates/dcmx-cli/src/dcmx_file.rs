//! The `.dcmx` on-disk matrix format.
//!
//! A line-oriented UTF-8 text format chosen so fixture files stay diffable:
//!
//! ```text
//! DCMX 1
//! <rows> <cols>
//! std_re
//! <rows lines of cols decimal values>
//! std_im
//! ...
//! inf_re
//! ...
//! inf_im
//! ...
//! ```
//!
//! Values are written with the shortest decimal representation that parses
//! back to the identical bits, so `load(save(A)) == A` exactly. Blank lines
//! are ignored everywhere; numeric blocks may wrap lines freely as long as
//! each section supplies exactly `rows·cols` finite values.

use crate::{CliError, CliResult};
use dcmx::complex::CMatrix;
use dcmx::DCMatrix;
use num_complex::Complex64;
use std::fmt::Write as _;
use std::path::Path;

/// First line of every `.dcmx` file.
pub const HEADER: &str = "DCMX 1";

const SECTIONS: [&str; 4] = ["std_re", "std_im", "inf_re", "inf_im"];

/// Parses `.dcmx` text. `label` names the source in diagnostics (a path,
/// or e.g. `"<builtin>"` for embedded fixtures).
pub fn parse_dcmx(label: &str, text: &str) -> CliResult<DCMatrix> {
    let bad = |message: String| CliError::data(label, message);
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (_, header) = lines
        .next()
        .ok_or_else(|| bad("empty file; expected header line `DCMX 1`".into()))?;
    if header != HEADER {
        return Err(bad(format!(
            "line 1: unsupported header {header:?}; expected `{HEADER}`"
        )));
    }

    let (dims_no, dims) = lines
        .next()
        .ok_or_else(|| bad("missing dimensions line after the header".into()))?;
    let mut it = dims.split_whitespace();
    let (rows, cols) = match (it.next(), it.next(), it.next()) {
        (Some(r), Some(c), None) => {
            let parse = |s: &str, which: &str| {
                s.parse::<usize>().map_err(|_| {
                    bad(format!(
                        "line {dims_no}: {which} count {s:?} is not a nonnegative integer"
                    ))
                })
            };
            (parse(r, "row")?, parse(c, "column")?)
        }
        _ => {
            return Err(bad(format!(
                "line {dims_no}: dimensions line must be `<rows> <cols>`, got {dims:?}"
            )))
        }
    };

    let want = rows * cols;
    let mut blocks: Vec<Vec<f64>> = Vec::with_capacity(4);
    for section in SECTIONS {
        let (line_no, found) = lines
            .next()
            .ok_or_else(|| bad(format!("missing section `{section}`")))?;
        if found != section {
            return Err(bad(format!(
                "line {line_no}: expected section `{section}`, found {found:?}"
            )));
        }
        let mut values = Vec::with_capacity(want);
        while values.len() < want {
            let (no, line) = lines
                .next()
                .ok_or_else(|| {
                    bad(format!(
                        "section `{section}`: expected {want} values, found {}",
                        values.len()
                    ))
                })?;
            if SECTIONS.contains(&line) {
                return Err(bad(format!(
                    "line {no}: section `{section}` ended early with {} of {want} values",
                    values.len()
                )));
            }
            for tok in line.split_whitespace() {
                let v: f64 = tok.parse().map_err(|_| {
                    bad(format!("line {no}: {tok:?} is not a decimal number"))
                })?;
                if !v.is_finite() {
                    return Err(bad(format!(
                        "line {no}: non-finite value {tok:?} in section `{section}`"
                    )));
                }
                values.push(v);
            }
        }
        if values.len() != want {
            return Err(bad(format!(
                "section `{section}`: expected {want} values, found {}",
                values.len()
            )));
        }
        blocks.push(values);
    }
    if let Some((no, extra)) = lines.next() {
        return Err(bad(format!("line {no}: unexpected trailing content {extra:?}")));
    }

    let complex = |re: &Vec<f64>, im: &Vec<f64>| {
        CMatrix::from_vec(
            rows,
            cols,
            re.iter()
                .zip(im)
                .map(|(&r, &i)| Complex64::new(r, i))
                .collect(),
        )
    };
    let std = complex(&blocks[0], &blocks[1]);
    let inf = complex(&blocks[2], &blocks[3]);
    DCMatrix::from_parts(std, inf).map_err(CliError::Core)
}

/// Loads a `.dcmx` file from disk.
pub fn load_dcmx(path: &Path) -> CliResult<DCMatrix> {
    let label = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(&label, e))?;
    parse_dcmx(&label, &text)
}

/// Renders a matrix in `.dcmx` format.
pub fn render_dcmx(a: &DCMatrix) -> String {
    let (rows, cols) = a.shape();
    let mut out = String::new();
    let _ = writeln!(out, "{HEADER}");
    let _ = writeln!(out, "{rows} {cols}");
    let parts: [(&str, Box<dyn Fn(usize, usize) -> f64>); 4] = [
        ("std_re", Box::new(|i, j| a.std().get(i, j).re)),
        ("std_im", Box::new(|i, j| a.std().get(i, j).im)),
        ("inf_re", Box::new(|i, j| a.inf().get(i, j).re)),
        ("inf_im", Box::new(|i, j| a.inf().get(i, j).im)),
    ];
    for (section, value) in parts {
        let _ = writeln!(out, "{section}");
        for i in 0..rows {
            for j in 0..cols {
                if j > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{}", value(i, j));
            }
            out.push('\n');
        }
    }
    out
}

/// Saves a matrix as a `.dcmx` file.
pub fn save_dcmx(a: &DCMatrix, path: &Path) -> CliResult<()> {
    let label = path.display().to_string();
    std::fs::write(path, render_dcmx(a)).map_err(|e| CliError::io(&label, e))
}
