//! Entry-defined LU factors and the factorizability criterion.
//!
//! For a square matrix `B` whose determinant is attained on the main
//! diagonal, the candidate factors are read directly off the entries:
//!
//! ```text
//! l_ij = b_ij ⊗ b_jj⁻¹   (i ≥ j)        u_ij = b_ij   (i ≤ j)
//! l_ij = 0̄               (i < j)        u_ij = 0̄      (i > j)
//! ```
//!
//! so `L` is unit lower triangular and `U` carries the upper part of
//! `B`. The product `L ⊗ U` reproduces `B` exactly when, for every
//! off-diagonal entry with `i, j ≥ 2`,
//!
//! ```text
//! b_ij = ⊕_{k < min(i,j)} det(B[{k,i}|{k,j}]) ⊗ b_kk⁻¹
//! ```
//!
//! where the 2×2 determinant expands to `(b_kk ⊗ b_ij) ⊕ (b_ik ⊗ b_kj)`.
//! [`check_criterion`] evaluates exactly that condition; [`factorize`]
//! normalizes the diagonal first and verifies the product.

use crate::determinant::diagonal_normalizer;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Permutation};
use crate::semifield::Value;

/// The candidate factors of a diagonally normalized matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct LuFactors {
    /// Row permutation applied before factoring (`normalized = P_sigma ⊗ A`).
    pub sigma: Permutation,
    /// Unit lower triangular factor.
    pub l: Matrix,
    /// Upper triangular factor carrying the diagonal of `normalized`.
    pub u: Matrix,
    /// The matrix the factors multiply back to.
    pub normalized: Matrix,
}

/// One failing entry of the factorizability criterion. `i` and `j` are
/// 1-based row/column numbers as used in diagnostics; `lhs` is the
/// matrix entry and `rhs` the criterion's `⊕`-combination.
#[derive(Debug, Clone, PartialEq)]
pub struct CriterionViolation {
    pub i: usize,
    pub j: usize,
    pub lhs: Value,
    pub rhs: Value,
}

/// Outcome of [`check_criterion`]: all violations in row-major order,
/// plus the relative tolerance used for the entry comparisons (0 for
/// the plus-based tags, 1e-12 for the times-based ones).
#[derive(Debug, Clone, PartialEq)]
pub struct CriterionReport {
    pub ok: bool,
    pub violations: Vec<CriterionViolation>,
    pub rel_tol: f64,
}

fn require_square(b: &Matrix) -> Result<usize> {
    if !b.is_square() {
        return Err(Error::NotSquare { rows: b.rows(), cols: b.cols() });
    }
    Ok(b.rows())
}

fn require_nonzero_diagonal(b: &Matrix) -> Result<()> {
    let zero = b.tag().zero_raw();
    for i in 0..b.rows() {
        if b.raw(i, i) == zero {
            return Err(Error::ZeroDiagonal(i + 1));
        }
    }
    Ok(())
}

/// Fills `L` and `U` from the entries of `b` without judging
/// factorizability. `sigma` is set to the identity.
pub fn build_factors(b: &Matrix) -> Result<LuFactors> {
    let n = require_square(b)?;
    require_nonzero_diagonal(b)?;
    let tag = b.tag();
    let mut l = Matrix::zeros(tag, n, n)?;
    let mut u = Matrix::zeros(tag, n, n)?;
    for i in 0..n {
        for j in 0..n {
            let x = b.raw(i, j);
            if i > j {
                l.set_raw(i, j, tag.mul_raw(x, tag.inv_raw(b.raw(j, j))));
            }
            if i <= j {
                u.set_raw(i, j, x);
            }
        }
        // b_ii ⊗ b_ii⁻¹ in exact arithmetic; set 1̄ directly so the unit
        // diagonal is bit-exact in the times-based tags too.
        l.set_raw(i, i, tag.one_raw());
    }
    Ok(LuFactors { sigma: Permutation::identity(n), l, u, normalized: b.clone() })
}

/// Evaluates the factorizability criterion on a diagonally normalized
/// matrix.
///
/// The caller is responsible for normalization (see
/// [`diagonal_normalizer`]); without it the criterion does not
/// characterize `L ⊗ U = B`. Systems of size `n ≤ 2` are vacuously ok:
/// no index pair satisfies `1 < i, j ≤ n` with `i ≠ j`.
pub fn check_criterion(b: &Matrix) -> Result<CriterionReport> {
    let n = require_square(b)?;
    require_nonzero_diagonal(b)?;
    let tag = b.tag();
    let rel_tol = tag.rel_tol();
    let mut violations = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i == j {
                continue;
            }
            let mut rhs = tag.zero_raw();
            for k in 0..i.min(j) {
                // 2×2 determinant of B[{k,i}|{k,j}], expanded directly.
                let det2 = tag.add_raw(
                    tag.mul_raw(b.raw(k, k), b.raw(i, j)),
                    tag.mul_raw(b.raw(i, k), b.raw(k, j)),
                );
                rhs = tag.add_raw(rhs, tag.mul_raw(det2, tag.inv_raw(b.raw(k, k))));
            }
            if !tag.eq_raw(b.raw(i, j), rhs, rel_tol) {
                violations.push(CriterionViolation {
                    i: i + 1,
                    j: j + 1,
                    lhs: b.get(i, j),
                    rhs: Value::raw_value(tag, rhs),
                });
            }
        }
    }
    Ok(CriterionReport { ok: violations.is_empty(), violations, rel_tol })
}

/// Normalizes the diagonal, builds the factors and verifies them.
///
/// Normalization runs even when the diagonal already attains the
/// determinant (the normalizer then returns the identity). On success
/// `l ⊗ u` has been checked to equal `normalized`; otherwise
/// `NotFactorizable` carries the full violation report.
pub fn factorize(a: &Matrix) -> Result<LuFactors> {
    let (sigma, normalized) = diagonal_normalizer(a)?;
    let mut factors = build_factors(&normalized)?;
    factors.sigma = sigma;
    let report = check_criterion(&normalized)?;
    if !report.ok {
        return Err(Error::NotFactorizable(report));
    }
    let product = factors.l.mul(&factors.u)?;
    if !product.eq_within(&normalized, normalized.tag().rel_tol()) {
        return Err(Error::NotFactorizable(report));
    }
    Ok(factors)
}
