//! Cosine-matrix test: `W_J` is finite iff the bilinear form is positive
//! definite, and a connected `J` is irreducible affine iff the form is
//! positive semidefinite with a one-dimensional kernel.

use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::diagram::{CoxeterMatrix, GenSet, Order};
use crate::error::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DefiniteKind {
    PositiveDefinite,
    PositiveSemidefiniteNullity(usize),
    Indefinite,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericVerdict {
    pub kind: DefiniteKind,
    pub min_eigen_estimate: f64,
    pub tolerance: f64,
}

/// `B[s][s] = 1`, `B[s][t] = -cos(π / m(s, t))`, with `-1` for infinite order.
pub fn cosine_matrix(m: &CoxeterMatrix, j: GenSet) -> Result<DMatrix<f64>> {
    j.check(m.n())?;
    let idx: Vec<usize> = j.iter().collect();
    let k = idx.len();
    Ok(DMatrix::from_fn(k, k, |a, b| {
        if a == b {
            1.0
        } else {
            match m.order(idx[a], idx[b]) {
                Order::Infinite => -1.0,
                Order::Finite(2) => 0.0,
                Order::Finite(v) => -(PI / f64::from(v)).cos(),
            }
        }
    }))
}

pub fn numeric_type(m: &CoxeterMatrix, j: GenSet, tol: f64) -> Result<NumericVerdict> {
    if j.is_empty() {
        return Err(Error::EmptySubset);
    }
    let b = cosine_matrix(m, j)?;
    let eig = SymmetricEigen::new(b).eigenvalues;
    let min = eig.iter().copied().fold(f64::INFINITY, f64::min);
    let kind = if min < -tol {
        DefiniteKind::Indefinite
    } else {
        match eig.iter().filter(|x| x.abs() <= tol).count() {
            0 => DefiniteKind::PositiveDefinite,
            k => DefiniteKind::PositiveSemidefiniteNullity(k),
        }
    };
    Ok(NumericVerdict {
        kind,
        min_eigen_estimate: min,
        tolerance: tol,
    })
}
