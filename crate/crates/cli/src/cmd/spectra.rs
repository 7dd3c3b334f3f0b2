use std::path::{Path, PathBuf};

use serde::Serialize;

use hnnlin::spectra::{
    anosov_gap_fit, cartan_projection, jordan_projection, obstruction_witness, to_complex, translation_length_quat, translation_length_via_rep,
};

use super::Summary;
use crate::error::CliError;
use crate::io::{emit, read_any_matrix, read_quat_matrices, read_real_matrices, single, MatrixInput};

pub fn cartan(matrix: &Path, out: Option<&Path>) -> Summary {
    let g = single(read_real_matrices(&[matrix.to_path_buf()])?)?;
    #[derive(Serialize)]
    struct Out {
        cartan: Vec<f64>,
    }
    emit(&Out { cartan: cartan_projection(&g)? }, out)?;
    Ok(None)
}

pub fn jordan(matrix: &Path, out: Option<&Path>) -> Summary {
    let g = single(read_real_matrices(&[matrix.to_path_buf()])?)?;
    #[derive(Serialize)]
    struct Out {
        jordan: Vec<f64>,
    }
    emit(&Out { jordan: jordan_projection(&g)? }, out)?;
    Ok(None)
}

pub fn tlen(matrix: &Path, tol: f64, out: Option<&Path>) -> Summary {
    #[derive(Serialize)]
    struct Quat {
        length: f64,
    }
    let length = match read_any_matrix(matrix)? {
        MatrixInput::Real(g) => {
            let t = translation_length_via_rep(&to_complex(&g), tol)?;
            emit(&t, out)?;
            t.length
        }
        MatrixInput::Quat(g) => {
            let length = translation_length_quat(&g, tol)?;
            emit(&Quat { length }, out)?;
            length
        }
    };
    Ok(Some(format!("translation length {length}")))
}

pub fn gap_fit(matrices: &[PathBuf], radius: usize, root: usize, tol: f64, out: Option<&Path>) -> Summary {
    let gens = read_real_matrices(matrices)?;
    let fit = anosov_gap_fit(&gens, radius, root, tol)?;
    emit(&fit, out)?;
    let status = if fit.certified { "certified" } else { "not certified" };
    Ok(Some(format!("c = {}, C = {} over radius {radius}: {status}", fit.c, fit.big_c)))
}

pub fn obstruct(matrices: &[PathBuf], tol: f64, out: Option<&Path>) -> Summary {
    let gs = read_quat_matrices(matrices)?;
    let [g1, g2] = <[_; 2]>::try_from(gs).map_err(|v: Vec<_>| CliError::validation("matrix", format!("expected two matrices, got {}", v.len())))?;
    let report = obstruction_witness(&g1, &g2, tol)?;
    emit(&report, out)?;
    let verdict = serde_json::to_value(report.verdict).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
    Ok(Some(format!("lengths {} and {}: {verdict}", report.length_1, report.length_2)))
}
