//! The image-compression experiment: two grayscale images become the
//! standard and infinitesimal parts of a dual complex matrix via the 2-D
//! DFT; truncated decompositions of increasing rank approximate both
//! images simultaneously, and the dual relative error is reported per rank.

use crate::dft::{dft2, idft2};
use crate::pgm::{save_pgm, GrayImage};
use crate::report::errors_csv;
use crate::{CliError, CliResult};
use dcmx::{lowrank_error, svd, truncate, DCMatrix, DualNumber, SvdResult};
use std::path::{Path, PathBuf};

/// Outcome of the pipeline: per-rank errors and where files were written.
#[derive(Debug)]
pub struct ImageSummary {
    /// `(k, ‖A_k−A‖_F / ‖A‖_F)` in ascending `k`.
    pub errors: Vec<(usize, DualNumber)>,
    /// The decomposition, for callers that want to inspect it.
    pub svd: SvdResult,
    /// Paths of the files written (CSV first), empty in dry-run mode.
    pub written: Vec<PathBuf>,
}

/// Transforms both images into a dual complex matrix: standard part from
/// the first image's spectrum, infinitesimal part from the second's.
pub fn images_to_matrix(std_img: &GrayImage, inf_img: &GrayImage) -> CliResult<DCMatrix> {
    if (std_img.width(), std_img.height()) != (inf_img.width(), inf_img.height()) {
        return Err(CliError::data(
            "<image pair>",
            format!(
                "image dimensions differ: {}x{} vs {}x{}",
                std_img.width(),
                std_img.height(),
                inf_img.width(),
                inf_img.height()
            ),
        ));
    }
    DCMatrix::from_parts(dft2(std_img), dft2(inf_img)).map_err(CliError::Core)
}

/// Runs the full experiment. `out_dir = None` computes errors without
/// writing anything.
pub fn run_image(
    std_img: &GrayImage,
    inf_img: &GrayImage,
    ks: &[usize],
    out_dir: Option<&Path>,
) -> CliResult<ImageSummary> {
    let a = images_to_matrix(std_img, inf_img)?;
    let max_k = a.rows().min(a.cols());
    let mut ks: Vec<usize> = ks.to_vec();
    ks.sort_unstable();
    ks.dedup();
    if ks.is_empty() {
        return Err(CliError::data("<k list>", "at least one rank is required"));
    }
    if let Some(&too_big) = ks.iter().find(|&&k| k > max_k) {
        return Err(CliError::data(
            "<k list>",
            format!("rank {too_big} exceeds min(width, height) = {max_k}"),
        ));
    }

    let s = svd(&a).map_err(CliError::Core)?;
    let norm = a.fro_norm();
    if !norm.is_appreciable() {
        return Err(CliError::data(
            "<image pair>",
            "the first image is blank; relative errors are undefined",
        ));
    }
    let inv_norm = norm.recip().map_err(CliError::Core)?;

    // Per-rank work is independent; reconstructions happen concurrently
    // and results come back in ascending-k order.
    let per_k: Vec<CliResult<(DualNumber, GrayImage, GrayImage)>> =
        dcmx::parallel::map_collect(ks.len(), |idx| {
            let k = ks[idx];
            let err = lowrank_error(&s, k).map_err(CliError::Core)? * inv_norm;
            let ak = truncate(&s, k).map_err(CliError::Core)?;
            Ok((err, idft2(ak.std()), idft2(ak.inf())))
        });

    let mut errors = Vec::with_capacity(ks.len());
    let mut written = Vec::new();
    let mut images = Vec::with_capacity(ks.len());
    for (k, item) in ks.iter().zip(per_k) {
        let (err, rec_std, rec_inf) = item?;
        errors.push((*k, err));
        images.push((*k, rec_std, rec_inf));
    }

    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir)
            .map_err(|e| CliError::io(&dir.display().to_string(), e))?;
        let csv_path = dir.join("errors.csv");
        std::fs::write(&csv_path, errors_csv(&errors))
            .map_err(|e| CliError::io(&csv_path.display().to_string(), e))?;
        written.push(csv_path);
        for (k, rec_std, rec_inf) in &images {
            let std_path = dir.join(format!("recon_std_k{k}.pgm"));
            save_pgm(rec_std, &std_path)?;
            written.push(std_path);
            let inf_path = dir.join(format!("recon_inf_k{k}.pgm"));
            save_pgm(rec_inf, &inf_path)?;
            written.push(inf_path);
        }
    }

    Ok(ImageSummary {
        errors,
        svd: s,
        written,
    })
}
