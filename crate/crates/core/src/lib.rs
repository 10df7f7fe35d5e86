//! Linear algebra over idempotent semifields.
//!
//! The crate implements matrix algebra, permutation-sum determinants,
//! an entry-defined LU factorization with an exact factorizability
//! criterion, and triangular/LU system solving with maximal solutions,
//! over four mutually isomorphic semifields:
//!
//! | name     | carrier     | ⊕   | ⊗ | zero | one |
//! |----------|-------------|-----|---|------|-----|
//! | maxplus  | ℝ ∪ {−∞}    | max | + | −∞   | 0   |
//! | minplus  | ℝ ∪ {+∞}    | min | + | +∞   | 0   |
//! | maxtimes | ℝ₊ ∪ {0}    | max | × | 0    | 1   |
//! | mintimes | ℝ₊ ∪ {+∞}   | min | × | +∞   | 1   |
//!
//! ```
//! use semilu::{ColVector, Matrix, Semifield, SolveStatus};
//!
//! let neg = f64::NEG_INFINITY;
//! let a = Matrix::from_payloads(Semifield::MaxPlus, 2, 2, vec![0.0, neg, 3.0, 0.0]).unwrap();
//! let b = ColVector::from_payloads(Semifield::MaxPlus, vec![1.0, 5.0]).unwrap();
//! let report = semilu::solve_lu(&a, &b).unwrap();
//! assert_eq!(report.outcome.status, SolveStatus::UniqueMaximal);
//! assert_eq!(report.outcome.x.unwrap().get(1).payload(), 5.0);
//! ```
//!
//! Every solve verdict is confirmed by substitution; the residuation
//! (principal) solution serves as an independent solvability oracle.
//! All types are immutable and all operations are pure, so everything
//! here is safe to share across threads.

pub mod determinant;
pub mod error;
pub mod lu;
pub mod matrix;
pub mod semifield;
pub mod solver;

pub use determinant::{diagonal_normalizer, eps_det, eps_det_fast, DetResult, BRUTE_FORCE_CAP};
pub use error::{Error, Result};
pub use lu::{build_factors, check_criterion, factorize, CriterionReport, CriterionViolation, LuFactors};
pub use matrix::{ColVector, Matrix, Permutation};
pub use semifield::{Semifield, Value};
pub use solver::{
    principal_solution, regularize, solve_lower, solve_lu, solve_upper, verify_solution,
    PrincipalSolution, RegularizedSystem, RowResidual, SolveOutcome, SolveStatus, SystemReport,
    Witness,
};
