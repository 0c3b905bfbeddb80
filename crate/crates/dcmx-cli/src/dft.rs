//! Two-dimensional discrete Fourier transform for the image pipeline.
//!
//! Forward transform is unnormalized; the inverse carries the full
//! `1/(width·height)` factor, so `idft2(dft2(img))` reproduces the image.
//! Power-of-two lengths take an iterative radix-2 fast path; other lengths
//! fall back to the direct transform with a precomputed twiddle table.

use crate::pgm::GrayImage;
use dcmx::complex::CMatrix;
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Forward 2-D DFT of an image (height×width complex output).
pub fn dft2(img: &GrayImage) -> CMatrix {
    let (h, w) = (img.height(), img.width());
    let spatial = CMatrix::from_vec(
        h,
        w,
        img.pixels().iter().map(|&p| Complex64::new(p, 0.0)).collect(),
    );
    dft2_complex(&spatial, false)
}

/// Inverse 2-D DFT; keeps the real part as pixel data (the imaginary part
/// of a transform of real data is roundoff noise).
pub fn idft2(freq: &CMatrix) -> GrayImage {
    let spatial = dft2_complex(freq, true);
    let mut pixels = Vec::with_capacity(spatial.rows() * spatial.cols());
    for i in 0..spatial.rows() {
        pixels.extend(spatial.row(i).iter().map(|v| v.re));
    }
    GrayImage::new(spatial.cols(), spatial.rows(), pixels).expect("finite transform output")
}

/// 2-D transform of a complex matrix, rows then columns. The inverse
/// direction scales each 1-D pass by `1/len`, i.e. `1/(rows·cols)` overall.
pub fn dft2_complex(mat: &CMatrix, inverse: bool) -> CMatrix {
    let (rows, cols) = (mat.rows(), mat.cols());
    let mut out = mat.clone();
    if rows == 0 || cols == 0 {
        return out;
    }

    let mut row_buf = vec![Complex64::new(0.0, 0.0); cols];
    for i in 0..rows {
        row_buf.copy_from_slice(out.row(i));
        dft1(&mut row_buf, inverse);
        for (j, v) in row_buf.iter().enumerate() {
            out.set(i, j, *v);
        }
    }

    let mut col_buf = vec![Complex64::new(0.0, 0.0); rows];
    for j in 0..cols {
        for i in 0..rows {
            col_buf[i] = out.get(i, j);
        }
        dft1(&mut col_buf, inverse);
        for (i, v) in col_buf.iter().enumerate() {
            out.set(i, j, *v);
        }
    }
    out
}

/// In-place 1-D DFT. Forward kernel `e^{-2πi jk/n}`; inverse uses the
/// conjugate kernel and divides by `n`.
fn dft1(data: &mut [Complex64], inverse: bool) {
    let n = data.len();
    if n <= 1 {
        return;
    }
    if n.is_power_of_two() {
        fft_radix2(data, inverse);
    } else {
        dft_direct(data, inverse);
    }
    if inverse {
        let scale = 1.0 / n as f64;
        for v in data.iter_mut() {
            *v *= scale;
        }
    }
}

fn fft_radix2(data: &mut [Complex64], inverse: bool) {
    let n = data.len();
    // Bit-reversal permutation.
    let bits = n.trailing_zeros();
    for i in 0..n {
        let j = (i.reverse_bits() >> (usize::BITS - bits)) & (n - 1);
        if i < j {
            data.swap(i, j);
        }
    }
    let sign = if inverse { 1.0 } else { -1.0 };
    let mut len = 2;
    while len <= n {
        let step = sign * TAU / len as f64;
        let w_len = Complex64::new(step.cos(), step.sin());
        for chunk in data.chunks_exact_mut(len) {
            let mut w = Complex64::new(1.0, 0.0);
            let (lo, hi) = chunk.split_at_mut(len / 2);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let t = *b * w;
                *b = *a - t;
                *a += t;
                w *= w_len;
            }
        }
        len <<= 1;
    }
}

fn dft_direct(data: &mut [Complex64], inverse: bool) {
    let n = data.len();
    let sign = if inverse { 1.0 } else { -1.0 };
    let twiddle: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = sign * TAU * k as f64 / n as f64;
            Complex64::new(angle.cos(), angle.sin())
        })
        .collect();
    let input = data.to_vec();
    for (k, slot) in data.iter_mut().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, v) in input.iter().enumerate() {
            acc += v * twiddle[(j * k) % n];
        }
        *slot = acc;
    }
}
