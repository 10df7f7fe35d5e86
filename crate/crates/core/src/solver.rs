//! Triangular and LU-system solving with maximal solutions.
//!
//! A system `A ⊗ x = b` over an idempotent semifield either has no
//! solution or has a componentwise-greatest one. For unit lower
//! triangular `L` the candidate is `x_i = b_i ⊗ l_ii⁻¹`, valid whenever
//! `l_ik ⊗ l_kk⁻¹ ≤ b_i ⊗ b_k⁻¹` for all `k < i`; upper systems reduce
//! to lower ones by a 180-degree rotation. The full pipeline
//! ([`solve_lu`]) regularizes the right-hand side, normalizes the
//! diagonal, factorizes, and runs the two triangular stages.
//!
//! The inequality tests are sufficient but not necessary, so they are
//! used only for fast-path classification and witness extraction. Every
//! returned status is confirmed by substituting into the system; when
//! the fast path fails, the residuation (principal) candidate
//!
//! ```text
//! x̂_j = ≤-min over rows i with a_ij ≠ 0̄ of b_i ⊗ a_ij⁻¹
//! ```
//!
//! decides solvability outright: the system is solvable iff
//! `A ⊗ x̂ = b`, and then `x̂` is the maximal solution.

use crate::error::{Error, Result};
use crate::lu::{factorize, LuFactors};
use crate::matrix::{ColVector, Matrix, Permutation};
use crate::semifield::{Semifield, Value};

/// How a solution relates to the rest of the solution set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// All governing inequalities were strict; the maximal solution is
    /// the only maximal one.
    UniqueMaximal,
    /// A verified maximal solution; smaller solutions may exist below it.
    Maximal,
    /// Substitution of the residuation candidate fails; no solution
    /// exists.
    NoSolution,
}

impl SolveStatus {
    pub fn is_solution(self) -> bool {
        !matches!(self, SolveStatus::NoSolution)
    }

    pub fn name(self) -> &'static str {
        match self {
            SolveStatus::UniqueMaximal => "unique_maximal",
            SolveStatus::Maximal => "maximal",
            SolveStatus::NoSolution => "no_solution",
        }
    }
}

/// First violated sufficiency inequality, in 1-based equation/column
/// numbers: `lhs = l_ik ⊗ l_kk⁻¹` exceeded `rhs = b_i ⊗ b_k⁻¹`.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub i: usize,
    pub k: usize,
    pub lhs: Value,
    pub rhs: Value,
}

/// Verdict of a single solve.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    /// The maximal solution; absent exactly when `status` is `NoSolution`.
    pub x: Option<ColVector>,
    /// Diagnostic for no-solution verdicts, when an inequality pinpoints
    /// the failure.
    pub witness: Option<Witness>,
    /// Whether the substitution check `A ⊗ x = b` passed.
    pub verified: bool,
}

/// One row of a substitution check: `lhs = (A ⊗ x)_row` against
/// `rhs = b_row`. `row` is 1-based.
#[derive(Debug, Clone, PartialEq)]
pub struct RowResidual {
    pub row: usize,
    pub lhs: Value,
    pub rhs: Value,
}

/// Result of stripping zero equations from a system.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularizedSystem {
    /// The reduced system; `None` when every equation was removed.
    pub system: Option<(Matrix, ColVector)>,
    /// 0-based indices of removed rows (those with `b_i = 0̄`).
    pub removed_rows: Vec<usize>,
    /// 0-based indices of columns whose variable is pinned to `0̄`.
    pub forced_zero: Vec<usize>,
    /// For each reduced column, the original column it came from.
    pub kept_cols: Vec<usize>,
}

impl RegularizedSystem {
    pub fn is_unchanged(&self) -> bool {
        self.removed_rows.is_empty() && self.forced_zero.is_empty()
    }
}

/// Residuation candidate plus the columns it could not bound.
#[derive(Debug, Clone, PartialEq)]
pub struct PrincipalSolution {
    /// `x̂`; unbounded coordinates hold the top-of-order sentinel, which
    /// lies outside the carrier and is only meaningful together with
    /// the `unbounded` list.
    pub x: ColVector,
    /// 0-based columns with no nonzero entry (the variable is
    /// unconstrained).
    pub unbounded: Vec<usize>,
}

/// Full diagnostic trail of an LU solve.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemReport {
    pub regularization: RegularizedSystem,
    /// Row permutation used for diagonal normalization (on the reduced
    /// system).
    pub sigma: Permutation,
    /// The verified factors, when the LU path ran.
    pub factors: Option<LuFactors>,
    /// Maximal intermediate solution of the lower stage `L ⊗ z = b`.
    pub z: Option<ColVector>,
    pub outcome: SolveOutcome,
    /// Substitution residuals against the original system, one per row;
    /// for no-solution verdicts these are the residuals of the
    /// residuation candidate.
    pub per_row_residual: Vec<RowResidual>,
    /// 0-based original columns whose variable is unconstrained.
    pub unbounded_cols: Vec<usize>,
}

fn require_same_system(a: &Matrix, b: &ColVector) -> Result<()> {
    if a.tag() != b.tag() {
        return Err(Error::TagMismatch(a.tag(), b.tag()));
    }
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} equations vs {} right-hand sides",
            a.rows(),
            b.len()
        )));
    }
    Ok(())
}

/// Removes every equation with `b_i = 0̄`.
///
/// Zerosumfreeness forces `x_j = 0̄` for each column with a nonzero
/// entry in a removed row, so those columns are deleted and recorded in
/// `forced_zero`. Fails with `Inconsistent` if a surviving equation is
/// left with an all-`0̄` left side (its right side is nonzero by
/// construction).
pub fn regularize(a: &Matrix, b: &ColVector) -> Result<RegularizedSystem> {
    let (reg, conflict) = regularize_impl(a, b)?;
    match conflict {
        Some(row) => Err(Error::Inconsistent { row: row + 1 }),
        None => Ok(reg),
    }
}

fn regularize_impl(a: &Matrix, b: &ColVector) -> Result<(RegularizedSystem, Option<usize>)> {
    require_same_system(a, b)?;
    let tag = a.tag();
    let zero = tag.zero_raw();
    let removed_rows: Vec<usize> = (0..a.rows()).filter(|&i| b.raw(i) == zero).collect();
    if removed_rows.is_empty() {
        return Ok((
            RegularizedSystem {
                system: Some((a.clone(), b.clone())),
                removed_rows,
                forced_zero: Vec::new(),
                kept_cols: (0..a.cols()).collect(),
            },
            None,
        ));
    }
    let mut pinned = vec![false; a.cols()];
    for &i in &removed_rows {
        for j in 0..a.cols() {
            if a.raw(i, j) != zero {
                pinned[j] = true;
            }
        }
    }
    let kept_rows: Vec<usize> = (0..a.rows()).filter(|i| b.raw(*i) != zero).collect();
    let kept_cols: Vec<usize> = (0..a.cols()).filter(|&j| !pinned[j]).collect();
    let forced_zero: Vec<usize> = (0..a.cols()).filter(|&j| pinned[j]).collect();

    // A surviving equation whose remaining coefficients are all zero can
    // never reach its nonzero right side.
    let mut conflict = None;
    for &i in &kept_rows {
        if kept_cols.iter().all(|&j| a.raw(i, j) == zero) {
            conflict = Some(i);
            break;
        }
    }

    let system = if kept_rows.is_empty() || kept_cols.is_empty() {
        None
    } else {
        let mut data = Vec::with_capacity(kept_rows.len() * kept_cols.len());
        for &i in &kept_rows {
            for &j in &kept_cols {
                data.push(a.raw(i, j));
            }
        }
        let reduced = Matrix::from_raw(tag, kept_rows.len(), kept_cols.len(), data);
        let rhs = ColVector::from_raw(tag, kept_rows.iter().map(|&i| b.raw(i)).collect());
        Some((reduced, rhs))
    };

    Ok((
        RegularizedSystem { system, removed_rows, forced_zero, kept_cols },
        conflict,
    ))
}

/// Residuation candidate `x̂_j = ≤-min_i { b_i ⊗ a_ij⁻¹ : a_ij ≠ 0̄ }`.
///
/// Standard residuation fact, used as the solvability oracle throughout:
/// `A ⊗ x = b` has a solution iff `A ⊗ x̂ = b`, in which case `x̂` is
/// the maximal solution. Columns with no nonzero entry are reported in
/// `unbounded` and saturated to the top of the order.
pub fn principal_solution(a: &Matrix, b: &ColVector) -> Result<PrincipalSolution> {
    require_same_system(a, b)?;
    let tag = a.tag();
    let zero = tag.zero_raw();
    let mut data = Vec::with_capacity(a.cols());
    let mut unbounded = Vec::new();
    for j in 0..a.cols() {
        let mut bound: Option<f64> = None;
        for i in 0..a.rows() {
            let coeff = a.raw(i, j);
            if coeff == zero {
                continue;
            }
            let cand = tag.mul_raw(b.raw(i), tag.inv_raw(coeff));
            bound = Some(match bound {
                None => cand,
                Some(m) if tag.leq_raw(cand, m) => cand,
                Some(m) => m,
            });
        }
        match bound {
            Some(m) => data.push(m),
            None => {
                unbounded.push(j);
                data.push(tag.top_raw());
            }
        }
    }
    Ok(PrincipalSolution { x: ColVector::from_raw(tag, data), unbounded })
}

/// Substitutes `x` into the system and compares `A ⊗ x` with `b` row by
/// row (exactly for the plus-based tags, within 1e-12 relative for the
/// times-based ones).
pub fn verify_solution(a: &Matrix, x: &ColVector, b: &ColVector) -> Result<(bool, Vec<RowResidual>)> {
    require_same_system(a, b)?;
    if a.cols() != x.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} columns vs {} unknowns",
            a.cols(),
            x.len()
        )));
    }
    if a.tag() != x.tag() {
        return Err(Error::TagMismatch(a.tag(), x.tag()));
    }
    let tag = a.tag();
    let lhs = a.mul_vec(x)?;
    let rel = tag.rel_tol();
    let mut ok = true;
    let mut residuals = Vec::with_capacity(a.rows());
    for i in 0..a.rows() {
        if !tag.eq_raw(lhs.raw(i), b.raw(i), rel) {
            ok = false;
        }
        residuals.push(RowResidual { row: i + 1, lhs: lhs.get(i), rhs: b.get(i) });
    }
    Ok((ok, residuals))
}

struct InequalityScan {
    all_hold: bool,
    all_strict: bool,
    first_fail: Option<Witness>,
}

// Scans l_ik ⊗ l_kk⁻¹ ≤ b_i ⊗ b_k⁻¹ over 2 ≤ i ≤ n, k < i, in
// lexicographic (i, k) order.
fn scan_lower_inequalities(l: &Matrix, b: &ColVector) -> InequalityScan {
    let tag = l.tag();
    let mut scan = InequalityScan { all_hold: true, all_strict: true, first_fail: None };
    for i in 1..l.rows() {
        for k in 0..i {
            let lhs = tag.mul_raw(l.raw(i, k), tag.inv_raw(l.raw(k, k)));
            let rhs = tag.mul_raw(b.raw(i), tag.inv_raw(b.raw(k)));
            if !tag.leq_raw(lhs, rhs) {
                scan.all_hold = false;
                scan.all_strict = false;
                if scan.first_fail.is_none() {
                    scan.first_fail = Some(Witness {
                        i: i + 1,
                        k: k + 1,
                        lhs: Value::raw_value(tag, lhs),
                        rhs: Value::raw_value(tag, rhs),
                    });
                }
            } else if !tag.lt_raw(lhs, rhs) {
                scan.all_strict = false;
            }
        }
    }
    scan
}

fn check_triangular(m: &Matrix, lower: bool) -> Result<()> {
    let n = if m.is_square() {
        m.rows()
    } else {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    };
    let zero = m.tag().zero_raw();
    for i in 0..n {
        for j in 0..n {
            let above = j > i;
            if (lower && above || !lower && !above && i != j) && m.raw(i, j) != zero {
                return Err(if lower { Error::NotLowerTriangular } else { Error::NotUpperTriangular });
            }
        }
    }
    for i in 0..n {
        if m.raw(i, i) == zero {
            return Err(Error::ZeroDiagonal(i + 1));
        }
    }
    Ok(())
}

/// Solves `L ⊗ x = b` for lower triangular `L` and regular `b`.
///
/// The fast path takes `x_i = b_i ⊗ l_ii⁻¹` when every sufficiency
/// inequality holds (`UniqueMaximal` if all are strict). The
/// inequalities are not necessary, so on failure the residuation
/// candidate is tried before declaring `NoSolution`; the witness then
/// records the first violated pair.
pub fn solve_lower(l: &Matrix, b: &ColVector) -> Result<SolveOutcome> {
    require_same_system(l, b)?;
    check_triangular(l, true)?;
    if !b.is_regular() {
        return Err(Error::IrregularRhs);
    }
    let tag = l.tag();
    let scan = scan_lower_inequalities(l, b);
    if scan.all_hold {
        let data = (0..l.rows())
            .map(|i| tag.mul_raw(b.raw(i), tag.inv_raw(l.raw(i, i))))
            .collect();
        let candidate = ColVector::from_raw(tag, data);
        let (ok, _) = verify_solution(l, &candidate, b)?;
        if ok {
            let status = if scan.all_strict { SolveStatus::UniqueMaximal } else { SolveStatus::Maximal };
            return Ok(SolveOutcome { status, x: Some(candidate), witness: None, verified: true });
        }
    }
    let principal = principal_solution(l, b)?;
    let (ok, _) = verify_solution(l, &principal.x, b)?;
    if ok {
        return Ok(SolveOutcome {
            status: SolveStatus::Maximal,
            x: Some(principal.x),
            witness: None,
            verified: true,
        });
    }
    Ok(SolveOutcome {
        status: SolveStatus::NoSolution,
        x: None,
        witness: scan.first_fail,
        verified: false,
    })
}

/// Solves `U ⊗ x = b` for upper triangular `U` and regular `b` by
/// rotating into a lower system (`l_ij = u_{n−i+1, n−j+1}`, reversed
/// unknowns and right-hand side) and delegating to [`solve_lower`].
/// Witness indices are mapped back to the coordinates of `U`.
pub fn solve_upper(u: &Matrix, b: &ColVector) -> Result<SolveOutcome> {
    require_same_system(u, b)?;
    check_triangular(u, false)?;
    if !b.is_regular() {
        return Err(Error::IrregularRhs);
    }
    let n = u.rows();
    let rotated = u.rotate180();
    let reversed = ColVector::from_raw(u.tag(), (0..n).map(|i| b.raw(n - 1 - i)).collect());
    let mut outcome = solve_lower(&rotated, &reversed)?;
    if let Some(x) = outcome.x.take() {
        outcome.x = Some(ColVector::from_raw(u.tag(), (0..n).map(|i| x.raw(n - 1 - i)).collect()));
    }
    if let Some(w) = outcome.witness.take() {
        outcome.witness = Some(Witness { i: n + 1 - w.i, k: n + 1 - w.k, lhs: w.lhs, rhs: w.rhs });
    }
    Ok(outcome)
}

/// Solves `A ⊗ x = b` through the LU pipeline.
///
/// Regularizes, normalizes the diagonal, factorizes (a `NotFactorizable`
/// or `SingularPattern` failure propagates as an error), solves
/// `L ⊗ z = P_sigma b` and then `U ⊗ x = z`, reassembles pinned
/// variables and re-verifies against the original system. No-solution
/// verdicts are embedded in the outcome, not raised, and are always
/// counter-checked with the residuation oracle on the original system:
/// the substitution check is authoritative over the inequality tests.
pub fn solve_lu(a: &Matrix, b: &ColVector) -> Result<SystemReport> {
    require_same_system(a, b)?;
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let tag = a.tag();
    let (reg, conflict) = regularize_impl(a, b)?;
    if conflict.is_some() {
        return no_solution_report(a, b, reg, None, None);
    }

    let Some((reduced_a, reduced_b)) = reg.system.clone() else {
        // Every equation removed: pinned variables are 0̄ and the kept
        // ones are unconstrained.
        let unbounded = reg.kept_cols.clone();
        let x = assemble_solution(tag, a.cols(), &reg, None);
        let (verified, residuals) = verify_solution(a, &x, b)?;
        let status = if unbounded.is_empty() { SolveStatus::UniqueMaximal } else { SolveStatus::Maximal };
        return Ok(SystemReport {
            regularization: reg,
            sigma: Permutation::identity(a.rows()),
            factors: None,
            z: None,
            outcome: SolveOutcome { status, x: Some(x), witness: None, verified },
            per_row_residual: residuals,
            unbounded_cols: unbounded,
        });
    };

    if !reduced_a.is_square() {
        // Irregular b can strip unequal numbers of rows and columns;
        // the LU route needs a square matrix, so fall back to pure
        // residuation on the reduced system.
        let principal = principal_solution(&reduced_a, &reduced_b)?;
        let (ok, _) = verify_solution(&reduced_a, &principal.x, &reduced_b)?;
        if !ok {
            return no_solution_report(a, b, reg, None, None);
        }
        let unbounded: Vec<usize> = principal.unbounded.iter().map(|&j| reg.kept_cols[j]).collect();
        let x = assemble_solution(tag, a.cols(), &reg, Some(&principal.x));
        let (verified, residuals) = verify_solution(a, &x, b)?;
        return Ok(SystemReport {
            regularization: reg,
            sigma: Permutation::identity(reduced_a.rows()),
            factors: None,
            z: None,
            outcome: SolveOutcome { status: SolveStatus::Maximal, x: Some(x), witness: None, verified },
            per_row_residual: residuals,
            unbounded_cols: unbounded,
        });
    }

    let factors = factorize(&reduced_a)?;
    let permuted_b = reduced_b.permuted(&factors.sigma)?;

    let lower = solve_lower(&factors.l, &permuted_b)?;
    if !lower.status.is_solution() {
        return no_solution_report(a, b, reg, Some(factors), lower.witness);
    }
    let z = lower.x.clone().expect("solution outcome carries x");

    let upper = solve_upper(&factors.u, &z)?;
    if !upper.status.is_solution() {
        return no_solution_report(a, b, reg, Some(factors), upper.witness);
    }
    let x_reduced = upper.x.clone().expect("solution outcome carries x");

    let x = assemble_solution(tag, a.cols(), &reg, Some(&x_reduced));
    let (verified, residuals) = verify_solution(a, &x, b)?;
    if !verified {
        return no_solution_report(a, b, reg, Some(factors), None);
    }
    let status = match (lower.status, upper.status) {
        (SolveStatus::UniqueMaximal, SolveStatus::UniqueMaximal) => SolveStatus::UniqueMaximal,
        _ => SolveStatus::Maximal,
    };
    let sigma = factors.sigma.clone();
    Ok(SystemReport {
        regularization: reg,
        sigma,
        factors: Some(factors),
        z: Some(z),
        outcome: SolveOutcome { status, x: Some(x), witness: None, verified: true },
        per_row_residual: residuals,
        unbounded_cols: Vec::new(),
    })
}

// The triangular stages apply the paper-style sufficient tests; before
// declaring the whole system unsolvable, let the residuation oracle on
// the original system have the final word.
fn no_solution_report(
    a: &Matrix,
    b: &ColVector,
    reg: RegularizedSystem,
    factors: Option<LuFactors>,
    witness: Option<Witness>,
) -> Result<SystemReport> {
    let principal = principal_solution(a, b)?;
    let (ok, residuals) = verify_solution(a, &principal.x, b)?;
    let sigma = factors
        .as_ref()
        .map(|f| f.sigma.clone())
        .unwrap_or_else(|| Permutation::identity(a.rows()));
    let outcome = if ok {
        SolveOutcome {
            status: SolveStatus::Maximal,
            x: Some(principal.x.clone()),
            witness: None,
            verified: true,
        }
    } else {
        SolveOutcome { status: SolveStatus::NoSolution, x: None, witness, verified: false }
    };
    Ok(SystemReport {
        regularization: reg,
        sigma,
        factors,
        z: None,
        outcome,
        per_row_residual: residuals,
        unbounded_cols: principal.unbounded,
    })
}

fn assemble_solution(
    tag: Semifield,
    n_cols: usize,
    reg: &RegularizedSystem,
    reduced: Option<&ColVector>,
) -> ColVector {
    let mut data = vec![tag.zero_raw(); n_cols];
    match reduced {
        Some(x) => {
            for (r, &j) in reg.kept_cols.iter().enumerate() {
                data[j] = x.raw(r);
            }
        }
        None => {
            // No equations constrain the kept columns.
            for &j in &reg.kept_cols {
                data[j] = tag.top_raw();
            }
        }
    }
    ColVector::from_raw(tag, data)
}
