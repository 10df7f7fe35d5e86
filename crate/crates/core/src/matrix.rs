//! Dense matrices, column vectors and permutations over a semifield.
//!
//! Matrix addition is entrywise `⊕` and multiplication is the usual
//! sum-of-products with `(⊕, ⊗)` in place of `(+, ×)`. Over a semifield
//! the invertible matrices are exactly the monomial ones (one nonzero
//! entry per row and per column), so permutation matrices are the only
//! change-of-basis tool available to the solver.
//!
//! Storage is dense row-major with 0-based indexing in the API; the
//! 1-based row/column numbers of the underlying theory appear only in
//! error messages and diagnostic reports.

use std::fmt;

use crate::error::{Error, Result};
use crate::semifield::{format_token, parse_raw_token, Semifield, Value};

/// A dense `rows × cols` matrix with entries in a single semifield.
///
/// Immutable after construction; all operations return new matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    tag: Semifield,
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    /// Builds a matrix from row-major payloads, validating each entry
    /// against the tag's carrier.
    pub fn from_payloads(tag: Semifield, rows: usize, cols: usize, data: Vec<f64>) -> Result<Matrix> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch("matrix dimensions must be positive".into()));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        let mut out = Vec::with_capacity(data.len());
        for x in data {
            out.push(Value::new(tag, x)?.payload());
        }
        Ok(Matrix { tag, rows, cols, data: out })
    }

    /// Builds a matrix from row-major values, which must share one tag.
    pub fn from_values(rows: usize, cols: usize, values: Vec<Value>) -> Result<Matrix> {
        if values.is_empty() {
            return Err(Error::DimensionMismatch("matrix dimensions must be positive".into()));
        }
        let tag = values[0].tag();
        for v in &values {
            if v.tag() != tag {
                return Err(Error::TagMismatch(tag, v.tag()));
            }
        }
        let data = values.iter().map(|v| v.payload()).collect();
        Matrix::from_payloads(tag, rows, cols, data)
    }

    pub(crate) fn from_raw(tag: Semifield, rows: usize, cols: usize, data: Vec<f64>) -> Matrix {
        debug_assert_eq!(data.len(), rows * cols);
        Matrix { tag, rows, cols, data }
    }

    /// The all-`0̄` matrix.
    pub fn zeros(tag: Semifield, rows: usize, cols: usize) -> Result<Matrix> {
        Matrix::from_payloads(tag, rows, cols, vec![tag.zero_raw(); rows * cols])
    }

    /// The multiplicative identity: `1̄` on the diagonal, `0̄` elsewhere.
    pub fn identity(tag: Semifield, n: usize) -> Result<Matrix> {
        let mut m = Matrix::zeros(tag, n, n)?;
        for i in 0..n {
            m.set_raw(i, i, tag.one_raw());
        }
        Ok(m)
    }

    pub fn tag(&self) -> Semifield {
        self.tag
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry accessor (0-based). Panics on out-of-range indices.
    pub fn get(&self, i: usize, j: usize) -> Value {
        Value::raw_value(self.tag, self.raw(i, j))
    }

    pub(crate) fn raw(&self, i: usize, j: usize) -> f64 {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        self.data[i * self.cols + j]
    }

    pub(crate) fn set_raw(&mut self, i: usize, j: usize, x: f64) {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        self.data[i * self.cols + j] = x;
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.tag != other.tag {
            return Err(Error::TagMismatch(self.tag, other.tag));
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Entrywise `⊕`.
    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| self.tag.add_raw(a, b))
            .collect();
        Ok(Matrix::from_raw(self.tag, self.rows, self.cols, data))
    }

    /// Matrix product: entry `(i,j)` is `⊕_k a_ik ⊗ b_kj`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.tag != other.tag {
            return Err(Error::TagMismatch(self.tag, other.tag));
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let tag = self.tag;
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = tag.zero_raw();
                for k in 0..self.cols {
                    acc = tag.add_raw(acc, tag.mul_raw(self.raw(i, k), other.raw(k, j)));
                }
                data.push(acc);
            }
        }
        Ok(Matrix::from_raw(tag, self.rows, other.cols, data))
    }

    /// Matrix–vector product `A ⊗ x`.
    pub fn mul_vec(&self, x: &ColVector) -> Result<ColVector> {
        if self.tag != x.tag {
            return Err(Error::TagMismatch(self.tag, x.tag));
        }
        if self.cols != x.len() {
            return Err(Error::DimensionMismatch(format!(
                "cannot apply {}x{} to a vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        let tag = self.tag;
        let data = (0..self.rows)
            .map(|i| {
                let mut acc = tag.zero_raw();
                for j in 0..self.cols {
                    acc = tag.add_raw(acc, tag.mul_raw(self.raw(i, j), x.raw(j)));
                }
                acc
            })
            .collect();
        Ok(ColVector::from_raw(tag, data))
    }

    /// The submatrix selecting `row_set × col_set`; both index lists are
    /// 0-based and must be strictly increasing and in range.
    pub fn submatrix(&self, row_set: &[usize], col_set: &[usize]) -> Result<Matrix> {
        check_index_set(row_set, self.rows)?;
        check_index_set(col_set, self.cols)?;
        let mut data = Vec::with_capacity(row_set.len() * col_set.len());
        for &i in row_set {
            for &j in col_set {
                data.push(self.raw(i, j));
            }
        }
        Matrix::from_payloads(self.tag, row_set.len(), col_set.len(), data)
            .map_err(|_| Error::DimensionMismatch("index sets must be nonempty".into()))
    }

    /// True iff every row and every column contains exactly one nonzero
    /// entry; over a semifield these are exactly the invertible matrices.
    pub fn is_monomial(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let zero = self.tag.zero_raw();
        let n = self.rows;
        let mut col_counts = vec![0usize; n];
        for i in 0..n {
            let mut row_count = 0;
            for j in 0..n {
                if self.raw(i, j) != zero {
                    row_count += 1;
                    col_counts[j] += 1;
                }
            }
            if row_count != 1 {
                return Ok(false);
            }
        }
        Ok(col_counts.iter().all(|&c| c == 1))
    }

    /// Inverse of a monomial matrix: `b_ji = a_ij⁻¹` on the transposed
    /// nonzero pattern, so that `A ⊗ B = B ⊗ A = I` exactly.
    pub fn monomial_inverse(&self) -> Result<Matrix> {
        if !self.is_monomial()? {
            return Err(Error::NotInvertible);
        }
        let zero = self.tag.zero_raw();
        let mut out = Matrix::zeros(self.tag, self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.raw(i, j);
                if a != zero {
                    out.set_raw(j, i, self.tag.inv_raw(a));
                }
            }
        }
        Ok(out)
    }

    /// Clockwise 180-degree rotation: entry `(i,j)` of the result is
    /// entry `(rows−1−i, cols−1−j)` of the input. An involution; it
    /// turns an upper triangular matrix into a lower triangular one.
    pub fn rotate180(&self) -> Matrix {
        let mut data = self.data.clone();
        data.reverse();
        Matrix::from_raw(self.tag, self.rows, self.cols, data)
    }

    /// Left-multiplication by the permutation matrix of `sigma`:
    /// row `sigma(j)` of the result is row `j` of `self`.
    pub fn permuted_rows(&self, sigma: &Permutation) -> Result<Matrix> {
        if sigma.n() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "permutation on {} points applied to {} rows",
                sigma.n(),
                self.rows
            )));
        }
        let mut data = vec![0.0; self.data.len()];
        for j in 0..self.rows {
            let target = sigma.apply(j);
            data[target * self.cols..(target + 1) * self.cols]
                .copy_from_slice(&self.data[j * self.cols..(j + 1) * self.cols]);
        }
        Ok(Matrix::from_raw(self.tag, self.rows, self.cols, data))
    }

    /// Maps every entry to another semifield along the isomorphism.
    pub fn iso_map(&self, target: Semifield) -> Matrix {
        let data = self
            .data
            .iter()
            .map(|&x| Value::raw_value(self.tag, x).iso_map(target).payload())
            .collect();
        Matrix::from_raw(target, self.rows, self.cols, data)
    }

    /// Entrywise equality with relative tolerance `rel` (exact when 0).
    pub fn eq_within(&self, other: &Matrix, rel: f64) -> bool {
        self.tag == other.tag
            && self.rows == other.rows
            && self.cols == other.cols
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(&a, &b)| self.tag.eq_raw(a, b, rel))
    }

    /// Serializes to the shared text format: a `tag rows cols` header
    /// line followed by one line of tokens per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.tag.name(), self.rows, self.cols);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format_token(self.raw(i, j))).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the text format produced by [`Matrix::to_text`].
    pub fn from_text(text: &str) -> Result<Matrix> {
        let mut tokens = text.split_whitespace();
        let tag_tok = tokens.next().ok_or_else(|| parse_err(1, 1, "missing semifield tag"))?;
        let tag = Semifield::parse(tag_tok)
            .ok_or_else(|| parse_err(1, 1, &format!("unknown semifield `{tag_tok}`")))?;
        let rows = parse_dim(tokens.next(), "rows")?;
        let cols = parse_dim(tokens.next(), "cols")?;
        let mut data = Vec::with_capacity(rows * cols);
        for k in 0..rows * cols {
            let tok = tokens
                .next()
                .ok_or_else(|| parse_err(2 + k / cols, 1, "unexpected end of matrix data"))?;
            let raw = parse_raw_token(tok)
                .ok_or_else(|| parse_err(2 + k / cols, 1 + k % cols, &format!("invalid token `{tok}`")))?;
            data.push(raw);
        }
        Matrix::from_payloads(tag, rows, cols, data)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn parse_err(line: usize, col: usize, reason: &str) -> Error {
    Error::Parse { line, col, reason: reason.to_string() }
}

fn parse_dim(tok: Option<&str>, what: &str) -> Result<usize> {
    tok.and_then(|t| t.parse::<usize>().ok())
        .filter(|&d| d > 0)
        .ok_or_else(|| parse_err(1, 1, &format!("invalid {what} dimension")))
}

fn check_index_set(set: &[usize], bound: usize) -> Result<()> {
    for (pos, &idx) in set.iter().enumerate() {
        if idx >= bound {
            // 1-based in the message, like all diagnostics.
            return Err(Error::IndexOutOfRange { index: idx + 1, bound });
        }
        if pos > 0 && set[pos - 1] >= idx {
            return Err(Error::NotStrictlyIncreasing);
        }
    }
    Ok(())
}

/// A column vector over a semifield.
#[derive(Debug, Clone, PartialEq)]
pub struct ColVector {
    tag: Semifield,
    data: Vec<f64>,
}

impl ColVector {
    pub fn from_payloads(tag: Semifield, data: Vec<f64>) -> Result<ColVector> {
        if data.is_empty() {
            return Err(Error::DimensionMismatch("vector length must be positive".into()));
        }
        let mut out = Vec::with_capacity(data.len());
        for x in data {
            out.push(Value::new(tag, x)?.payload());
        }
        Ok(ColVector { tag, data: out })
    }

    pub fn from_values(values: Vec<Value>) -> Result<ColVector> {
        if values.is_empty() {
            return Err(Error::DimensionMismatch("vector length must be positive".into()));
        }
        let tag = values[0].tag();
        for v in &values {
            if v.tag() != tag {
                return Err(Error::TagMismatch(tag, v.tag()));
            }
        }
        Ok(ColVector { tag, data: values.iter().map(|v| v.payload()).collect() })
    }

    pub(crate) fn from_raw(tag: Semifield, data: Vec<f64>) -> ColVector {
        ColVector { tag, data }
    }

    pub fn zeros(tag: Semifield, n: usize) -> Result<ColVector> {
        ColVector::from_payloads(tag, vec![tag.zero_raw(); n])
    }

    pub fn tag(&self) -> Semifield {
        self.tag
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn get(&self, i: usize) -> Value {
        Value::raw_value(self.tag, self.raw(i))
    }

    pub(crate) fn raw(&self, i: usize) -> f64 {
        self.data[i]
    }

    pub fn values(&self) -> Vec<Value> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    /// True iff the vector has no `0̄` entry.
    pub fn is_regular(&self) -> bool {
        let zero = self.tag.zero_raw();
        self.data.iter().all(|&x| x != zero)
    }

    /// Componentwise order: true iff `self_i ≤ other_i` for every `i`.
    pub fn leq(&self, other: &ColVector) -> Result<bool> {
        if self.tag != other.tag {
            return Err(Error::TagMismatch(self.tag, other.tag));
        }
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch(format!("{} vs {}", self.len(), other.len())));
        }
        Ok(self.data.iter().zip(&other.data).all(|(&a, &b)| self.tag.leq_raw(a, b)))
    }

    /// Applies a row permutation: entry `sigma(j)` of the result is
    /// entry `j` of `self` (matching [`Matrix::permuted_rows`]).
    pub fn permuted(&self, sigma: &Permutation) -> Result<ColVector> {
        if sigma.n() != self.len() {
            return Err(Error::DimensionMismatch(format!(
                "permutation on {} points applied to length {}",
                sigma.n(),
                self.len()
            )));
        }
        let mut data = vec![0.0; self.len()];
        for j in 0..self.len() {
            data[sigma.apply(j)] = self.data[j];
        }
        Ok(ColVector::from_raw(self.tag, data))
    }

    pub fn iso_map(&self, target: Semifield) -> ColVector {
        let data = self
            .data
            .iter()
            .map(|&x| Value::raw_value(self.tag, x).iso_map(target).payload())
            .collect();
        ColVector::from_raw(target, data)
    }

    pub fn eq_within(&self, other: &ColVector, rel: f64) -> bool {
        self.tag == other.tag
            && self.len() == other.len()
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(&a, &b)| self.tag.eq_raw(a, b, rel))
    }

    /// Space-separated value tokens.
    pub fn to_tokens(&self) -> String {
        self.data.iter().map(|&x| format_token(x)).collect::<Vec<_>>().join(" ")
    }
}

/// A permutation of `{0, …, n−1}` stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { image: (0..n).collect() }
    }

    /// Validates that `image` is a bijection on `{0, …, n−1}`.
    pub fn from_image(image: Vec<usize>) -> Result<Permutation> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &i in &image {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation);
            }
            seen[i] = true;
        }
        Ok(Permutation { image })
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &s)| i == s)
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.n()];
        for (i, &s) in self.image.iter().enumerate() {
            image[s] = i;
        }
        Permutation { image }
    }

    /// Number of inversions; the parity splits the even and odd
    /// permutations for the signed determinant parts.
    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.image[i] > self.image[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn is_even(&self) -> bool {
        self.inversions() % 2 == 0
    }

    /// The permutation matrix `P`: entry `(sigma(j), j)` is `1̄`, all
    /// others `0̄`, so that `P ⊗ A` carries row `j` of `A` to row
    /// `sigma(j)` — the identity matrix with its rows permuted.
    pub fn matrix(&self, tag: Semifield) -> Result<Matrix> {
        let n = self.n();
        let mut m = Matrix::zeros(tag, n, n)?;
        for j in 0..n {
            m.set_raw(self.apply(j), j, tag.one_raw());
        }
        Ok(m)
    }

    /// 1-based image list, e.g. `3 4 2 1`, as used in reports.
    pub fn to_one_based(&self) -> String {
        self.image
            .iter()
            .map(|&i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_one_based())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const NEG: f64 = f64::NEG_INFINITY;

    fn mp(rows: usize, cols: usize, data: &[f64]) -> Matrix {
        Matrix::from_payloads(Semifield::MaxPlus, rows, cols, data.to_vec()).unwrap()
    }

    #[test]
    fn add_is_entrywise_max() {
        let a = mp(2, 2, &[1.0, 2.0, 3.0, 4.0]);
        let b = mp(2, 2, &[4.0, 3.0, 2.0, 1.0]);
        assert_eq!(a.add(&b).unwrap(), mp(2, 2, &[4.0, 3.0, 3.0, 4.0]));
        assert_eq!(a.add(&a).unwrap(), a);
        let z = Matrix::zeros(Semifield::MaxPlus, 2, 2).unwrap();
        assert_eq!(a.add(&z).unwrap(), a);
    }

    #[test]
    fn identity_is_neutral_for_mul() {
        let a = mp(3, 3, &[1.0, NEG, 2.0, 0.5, -3.0, NEG, 7.0, 0.0, 1.0]);
        let id = Matrix::identity(Semifield::MaxPlus, 3).unwrap();
        assert_eq!(a.mul(&id).unwrap(), a);
        assert_eq!(id.mul(&a).unwrap(), a);
    }

    #[test]
    fn mul_entry_matches_direct_loop() {
        let a = mp(3, 3, &[1.0, -2.0, 3.0, 0.0, 5.0, NEG, 2.0, 2.0, -4.0]);
        let b = mp(3, 3, &[0.0, 1.0, -1.0, 3.0, NEG, 2.0, -2.0, 4.0, 0.0]);
        let c = a.mul(&b).unwrap();
        // Independent check: (1,1) entry is max_k(a_1k + b_k1).
        let expect = (a.raw(0, 0) + b.raw(0, 0))
            .max(a.raw(0, 1) + b.raw(1, 0))
            .max(a.raw(0, 2) + b.raw(2, 0));
        assert_eq!(c.raw(0, 0), expect);
    }

    #[test]
    fn submatrix_selections() {
        let a = mp(4, 4, &[
            7.0, -1.0, 3.0, 0.0,
            4.0, 5.0, 1.0, -2.0,
            1.0, -6.0, 2.0, -5.0,
            -2.0, -9.0, -5.0, 0.0,
        ]);
        assert_eq!(a.submatrix(&[0, 1, 2, 3], &[0, 1, 2, 3]).unwrap(), a);
        assert_eq!(
            a.submatrix(&[0, 1], &[0, 1]).unwrap(),
            mp(2, 2, &[7.0, -1.0, 4.0, 5.0])
        );
        assert_eq!(a.submatrix(&[2], &[2]).unwrap(), mp(1, 1, &[2.0]));
        assert!(matches!(
            a.submatrix(&[0, 4], &[0]),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert_eq!(a.submatrix(&[1, 0], &[0]), Err(Error::NotStrictlyIncreasing));
    }

    #[test]
    fn monomial_detection_and_inverse() {
        let id = Matrix::identity(Semifield::MaxPlus, 3).unwrap();
        assert!(id.is_monomial().unwrap());
        assert_eq!(id.monomial_inverse().unwrap(), id);

        let z = Matrix::zeros(Semifield::MaxPlus, 2, 2).unwrap();
        assert!(!z.is_monomial().unwrap());
        assert_eq!(z.monomial_inverse(), Err(Error::NotInvertible));

        let d = mp(2, 2, &[3.0, NEG, NEG, -2.0]);
        let inv = d.monomial_inverse().unwrap();
        assert_eq!(inv, mp(2, 2, &[-3.0, NEG, NEG, 2.0]));
        let id2 = Matrix::identity(Semifield::MaxPlus, 2).unwrap();
        assert_eq!(d.mul(&inv).unwrap(), id2);
        assert_eq!(inv.mul(&d).unwrap(), id2);
    }

    #[test]
    fn permutation_matrix_action() {
        // sigma = (1324) in cycle notation: image 3 4 2 1 (1-based).
        let sigma = Permutation::from_image(vec![2, 3, 1, 0]).unwrap();
        let p = sigma.matrix(Semifield::MaxPlus).unwrap();
        let expect = mp(4, 4, &[
            NEG, NEG, NEG, 0.0,
            NEG, NEG, 0.0, NEG,
            0.0, NEG, NEG, NEG,
            NEG, 0.0, NEG, NEG,
        ]);
        assert_eq!(p, expect);
        assert!(p.is_monomial().unwrap());
        assert_eq!(
            Permutation::identity(4).matrix(Semifield::MaxPlus).unwrap(),
            Matrix::identity(Semifield::MaxPlus, 4).unwrap()
        );

        // P ⊗ A agrees with the direct row permutation.
        let a = mp(4, 4, &[
            4.0, 1.0, 4.0, 3.0,
            -1.0, 0.0, 1.0, 4.0,
            3.0, 7.0, 8.0, 1.0,
            5.0, 2.0, 5.0, -2.0,
        ]);
        assert_eq!(p.mul(&a).unwrap(), a.permuted_rows(&sigma).unwrap());
        let pinv = p.monomial_inverse().unwrap();
        assert_eq!(pinv, sigma.inverse().matrix(Semifield::MaxPlus).unwrap());
    }

    #[test]
    fn rotate180_is_an_involution() {
        let a = mp(2, 3, &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        assert_eq!(a.rotate180().rotate180(), a);
        assert_eq!(a.rotate180(), mp(2, 3, &[6.0, 5.0, 4.0, 3.0, 2.0, 1.0]));
        let one = mp(1, 1, &[5.0]);
        assert_eq!(one.rotate180(), one);
    }

    #[test]
    fn rotate180_of_upper_is_lower() {
        let u = mp(4, 4, &[
            7.0, -1.0, 3.0, 0.0,
            NEG, 5.0, 1.0, -2.0,
            NEG, NEG, 2.0, -5.0,
            NEG, NEG, NEG, 0.0,
        ]);
        let r = u.rotate180();
        assert_eq!(r.raw(0, 0), 0.0);
        assert_eq!(r.raw(3, 0), 0.0);
        assert_eq!(r.raw(3, 3), 7.0);
        // Strictly upper part of the rotation is all zero.
        for i in 0..4 {
            for j in i + 1..4 {
                assert_eq!(r.raw(i, j), NEG);
            }
        }
    }

    #[test]
    fn vec_leq_and_reversed_order() {
        let tag = Semifield::MaxPlus;
        let x = ColVector::from_payloads(tag, vec![-1.0, 2.0]).unwrap();
        let y = ColVector::from_payloads(tag, vec![0.0, 2.0]).unwrap();
        assert!(x.leq(&x).unwrap());
        assert!(x.leq(&y).unwrap());
        assert!(!y.leq(&x).unwrap());

        // In mintimes the componentwise order is numerically reversed.
        let mt = Semifield::MinTimes;
        let a = ColVector::from_payloads(mt, vec![4.0, 3.0, 1.0, 2.0]).unwrap();
        let b = ColVector::from_payloads(mt, vec![4.0, 6.0, 1.0, 6.0]).unwrap();
        assert!(!a.leq(&b).unwrap());
        assert!(b.leq(&a).unwrap());
    }

    #[test]
    fn matrix_text_round_trip() {
        let a = mp(2, 3, &[1.5, NEG, 3.0, -0.25, 0.0, 2.0]);
        let parsed = Matrix::from_text(&a.to_text()).unwrap();
        assert_eq!(parsed, a);
        assert!(matches!(Matrix::from_text("maxplus 2"), Err(Error::Parse { .. })));
        assert!(matches!(Matrix::from_text("foo 1 1\n3"), Err(Error::Parse { .. })));
        assert!(Matrix::from_text("mintimes 1 2\n-3 1").is_err());
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::from_image(vec![0, 2, 1]).is_ok());
        assert_eq!(
            Permutation::from_image(vec![0, 0, 1]),
            Err(Error::InvalidPermutation)
        );
        assert_eq!(Permutation::from_image(vec![0, 3]), Err(Error::InvalidPermutation));
        let s = Permutation::from_image(vec![2, 0, 1]).unwrap();
        assert_eq!(s.inverse().image(), &[1, 2, 0]);
        assert_eq!(s.inversions(), 2);
        assert!(s.is_even());
    }
}
