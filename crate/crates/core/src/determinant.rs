//! Permutation-sum determinants and diagonal normalization.
//!
//! Over an idempotent semifield the determinant analogue is
//!
//! ```text
//! det(A) = ⊕ over all permutations σ of  ⊗_i a_{i σ(i)}
//! ```
//!
//! i.e. the value of the best assignment of rows to columns (in maxplus:
//! the maximum permutation sum). The positive/negative parts restrict
//! the `⊕` to even/odd permutations; with the identity sign function the
//! determinant is simply their `⊕`. [`eps_det`] enumerates all `n!`
//! permutations (capped at `n = 8`); [`eps_det_fast`] computes the same
//! value in `O(n³)` by mapping the entries to maxplus and solving a
//! linear assignment problem.
//!
//! [`diagonal_normalizer`] finds a row permutation placing an optimal
//! assignment on the main diagonal — the standing assumption of the LU
//! criterion.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Permutation};
use crate::semifield::{Semifield, Value};

/// Largest `n` for which the exhaustive `n!` enumeration runs.
pub const BRUTE_FORCE_CAP: usize = 8;

/// Outcome of the exhaustive determinant computation.
#[derive(Debug, Clone, PartialEq)]
pub struct DetResult {
    /// `⊕` over all permutations of the diagonal product.
    pub value: Value,
    /// Restriction of the `⊕` to even permutations.
    pub pos_part: Value,
    /// Restriction of the `⊕` to odd permutations.
    pub neg_part: Value,
    /// Every permutation attaining `value`, in lexicographic order of
    /// the image arrays.
    pub attaining: Vec<Permutation>,
}

fn require_square(a: &Matrix) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    Ok(a.rows())
}

/// Exhaustive determinant over all `n!` permutations.
///
/// `value == pos_part ⊕ neg_part` always, and every permutation product
/// is `≤ value` in the semifield order. Fails with `SizeLimitExceeded`
/// beyond [`BRUTE_FORCE_CAP`]; use [`eps_det_fast`] there.
pub fn eps_det(a: &Matrix) -> Result<DetResult> {
    let n = require_square(a)?;
    if n > BRUTE_FORCE_CAP {
        return Err(Error::SizeLimitExceeded { n, cap: BRUTE_FORCE_CAP });
    }
    let tag = a.tag();
    let zero = tag.zero_raw();
    let mut best = zero;
    let mut pos = zero;
    let mut neg = zero;
    let mut attaining: Vec<Vec<usize>> = Vec::new();
    for perm in (0..n).permutations(n) {
        let mut product = tag.one_raw();
        for (i, &j) in perm.iter().enumerate() {
            product = tag.mul_raw(product, a.raw(i, j));
        }
        if even_image(&perm) {
            pos = tag.add_raw(pos, product);
        } else {
            neg = tag.add_raw(neg, product);
        }
        if product == best {
            attaining.push(perm);
        } else if tag.lt_raw(best, product) {
            best = product;
            attaining.clear();
            attaining.push(perm);
        }
    }
    Ok(DetResult {
        value: Value::raw_value(tag, best),
        pos_part: Value::raw_value(tag, pos),
        neg_part: Value::raw_value(tag, neg),
        attaining: attaining
            .into_iter()
            .map(|image| Permutation::from_image(image).expect("generated images are bijections"))
            .collect(),
    })
}

fn even_image(image: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..image.len() {
        for j in i + 1..image.len() {
            if image[i] > image[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// Determinant value via the assignment fast path.
///
/// Entries are mapped to maxplus, a maximum-weight perfect assignment is
/// solved in `O(n³)`, and the attained product is re-evaluated in the
/// original semifield, so no isomorphism rounding enters the result.
pub fn eps_det_fast(a: &Matrix) -> Result<Value> {
    let n = require_square(a)?;
    let tag = a.tag();
    match assignment_image(a) {
        None => Ok(Value::zero(tag)),
        Some(image) => {
            let mut product = tag.one_raw();
            for (i, &j) in image.iter().enumerate().take(n) {
                product = tag.mul_raw(product, a.raw(i, j));
            }
            Ok(Value::raw_value(tag, product))
        }
    }
}

/// Finds `sigma` such that `B = P_sigma ⊗ A` attains the determinant on
/// its main diagonal, and returns both.
///
/// Among the permutations attaining the optimum the identity is
/// preferred when it qualifies; otherwise the lexicographically largest
/// image array is chosen (this reproduces the worked 4×4 normalization
/// where two assignments tie). Beyond the enumeration cap the
/// assignment solver's permutation is used as-is.
pub fn diagonal_normalizer(a: &Matrix) -> Result<(Permutation, Matrix)> {
    let n = require_square(a)?;
    let assignment = if n <= BRUTE_FORCE_CAP {
        let det = eps_det(a)?;
        if det.value.is_zero() {
            return Err(Error::SingularPattern);
        }
        let ident = det.attaining.iter().find(|p| p.is_identity());
        match ident {
            Some(p) => p.clone(),
            // attaining is lex-sorted, so the last entry is the largest.
            None => det.attaining.last().expect("nonzero det has attaining permutations").clone(),
        }
    } else {
        match assignment_image(a) {
            None => return Err(Error::SingularPattern),
            Some(image) => Permutation::from_image(image).expect("assignment is a bijection"),
        }
    };
    // The assignment sends row i to column sigma_a(i); moving row i to
    // row sigma_a(i) puts entry (i, sigma_a(i)) on the diagonal, so the
    // row permutation IS the assignment under our P ⊗ A convention.
    let normalized = a.permuted_rows(&assignment)?;
    Ok((assignment, normalized))
}

/// Maximum-weight perfect assignment on the maxplus image of `a`.
/// Returns the row-to-column image, or `None` when every assignment
/// crosses a zero entry.
fn assignment_image(a: &Matrix) -> Option<Vec<usize>> {
    let n = a.rows();
    let tag = a.tag();
    // Minimize the negated maxplus weights; zero entries become +inf
    // (forbidden edges).
    let cost: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = Value::raw_value(tag, a.raw(i, j));
                    if v.is_zero() {
                        f64::INFINITY
                    } else {
                        -v.iso_map(Semifield::MaxPlus).payload()
                    }
                })
                .collect()
        })
        .collect();
    min_cost_assignment(&cost)
}

// Shortest-augmenting-path assignment with row/column potentials
// (Jonker–Volgenant style), O(n³). Forbidden edges carry +inf cost; the
// search never routes potentials through them, and an all-inf frontier
// means no perfect matching exists.
fn min_cost_assignment(cost: &[Vec<f64>]) -> Option<Vec<usize>> {
    let n = cost.len();
    let inf = f64::INFINITY;
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut matched_row = vec![0usize; n + 1]; // column j -> row (1-based), 0 = free
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        matched_row[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = matched_row[j0];
            let mut delta = inf;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            if delta == inf {
                return None;
            }
            for j in 0..=n {
                if used[j] {
                    u[matched_row[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if matched_row[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            matched_row[j0] = matched_row[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut image = vec![usize::MAX; n];
    for j in 1..=n {
        image[matched_row[j] - 1] = j - 1;
    }
    Some(image)
}
