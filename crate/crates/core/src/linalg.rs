//! Tropical matrices: determinants with a tie certificate, adjoints, Cramer
//! bounds, linear independence and general position.
//!
//! The determinant `|A| = ⊕_π (a_{0,π(0)} ⊗ … ⊗ a_{n,π(n)})` is computed by
//! exhaustive permutation enumeration; singularity is the exact statement
//! that the maximum is attained by at least two permutations. A second,
//! independent route expands along the first row
//! (`|A| = ⊕_j a_{0,j} ⊗ |A_{0,j}|`) and is used as a cross-check oracle.

use alloc::vec::Vec;
use core::fmt;

use crate::scalar::TropScalar;

/// Default guard for the factorial enumeration.
pub const MAX_DET_SIDE: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinalgError {
    /// Square-matrix operation beyond the configured side limit.
    TooLarge,
    /// Adjoint of a 1×1 matrix.
    TooSmall,
    /// Not a square matrix where one is required.
    NotSquare,
    /// Operand dimensions do not agree.
    DimensionMismatch,
    /// Cramer bound on a tropically singular matrix.
    SingularMatrix,
    /// Independence is only decided for exactly n+1 vectors of length n+1.
    NotSquareFamily,
    /// Fewer than n+1 hyperplanes; general position is the caller's call.
    TooFew,
    /// Malformed construction data.
    BadShape,
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::TooLarge => write!(f, "matrix side exceeds the enumeration guard"),
            LinalgError::TooSmall => write!(f, "matrix too small for this operation"),
            LinalgError::NotSquare => write!(f, "matrix is not square"),
            LinalgError::DimensionMismatch => write!(f, "dimension mismatch"),
            LinalgError::SingularMatrix => write!(f, "matrix is tropically singular"),
            LinalgError::NotSquareFamily => {
                write!(f, "independence is decided for exactly n+1 vectors of T^(n+1)")
            }
            LinalgError::TooFew => write!(f, "fewer hyperplanes than n+1"),
            LinalgError::BadShape => write!(f, "malformed matrix data"),
        }
    }
}

/// A rectangular max-plus matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<TropScalar>,
}

impl TropMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<TropScalar>) -> Result<Self, LinalgError> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(LinalgError::BadShape);
        }
        Ok(TropMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<TropScalar>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        if r == 0 {
            return Err(LinalgError::BadShape);
        }
        let c = rows[0].len();
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::BadShape);
        }
        TropMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Diagonal `1_T`, off-diagonal `0_T`.
    pub fn identity(n: usize) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(if i == j { TropScalar::one() } else { TropScalar::Bottom });
            }
        }
        TropMatrix { rows: n, cols: n, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &TropScalar {
        &self.entries[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> TropMatrix {
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        TropMatrix { rows: self.cols, cols: self.rows, entries }
    }

    /// The minor `A_{i,j}`: `A` with row `i` and column `j` deleted.
    pub fn minor(&self, i: usize, j: usize) -> TropMatrix {
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in 0..self.rows {
            if r == i {
                continue;
            }
            for c in 0..self.cols {
                if c == j {
                    continue;
                }
                entries.push(self.get(r, c).clone());
            }
        }
        TropMatrix { rows: self.rows - 1, cols: self.cols - 1, entries }
    }

    /// Replaces column `j` by `b` (the Cramer matrix `B_j`).
    pub fn with_column(&self, j: usize, b: &[TropScalar]) -> Result<TropMatrix, LinalgError> {
        if b.len() != self.rows || j >= self.cols {
            return Err(LinalgError::DimensionMismatch);
        }
        let mut m = self.clone();
        for (i, v) in b.iter().enumerate() {
            m.entries[i * self.cols + j] = v.clone();
        }
        Ok(m)
    }
}

/// Max-plus matrix product `A ⊗ B`.
pub fn tmat_mul(a: &TropMatrix, b: &TropMatrix) -> Result<TropMatrix, LinalgError> {
    if a.cols != b.rows {
        return Err(LinalgError::DimensionMismatch);
    }
    let mut entries = Vec::with_capacity(a.rows * b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let mut acc = TropScalar::Bottom;
            for k in 0..a.cols {
                acc = acc.tadd(&a.get(i, k).tmul(b.get(k, j)));
            }
            entries.push(acc);
        }
    }
    Ok(TropMatrix { rows: a.rows, cols: b.cols, entries })
}

/// Result of a tropical determinant: the value, how often the maximum is
/// attained (capped at 2), and one optimal permutation when it exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetCertificate {
    pub value: TropScalar,
    /// Count of optimal permutations with a finite product, capped at 2;
    /// 0 exactly when every permutation product is `0_T`.
    pub multiplicity: usize,
    pub witness: Option<Vec<usize>>,
}

impl DetCertificate {
    /// Tropically singular: the maximum is attained at least twice, or every
    /// permutation product is `0_T`.
    pub fn is_singular(&self) -> bool {
        self.multiplicity != 1
    }
}

fn for_each_permutation<F: FnMut(&[usize])>(n: usize, f: &mut F) {
    fn heap<F: FnMut(&[usize])>(perm: &mut [usize], k: usize, f: &mut F) {
        if k <= 1 {
            f(perm);
            return;
        }
        for i in 0..k {
            heap(perm, k - 1, f);
            if k.is_multiple_of(2) {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    heap(&mut perm, n, f);
}

/// `|A|` by exhaustive permutation enumeration, with the tie certificate.
pub fn tropical_determinant(a: &TropMatrix) -> Result<DetCertificate, LinalgError> {
    tropical_determinant_with_limit(a, MAX_DET_SIDE)
}

/// Same as [`tropical_determinant`] with an explicit side guard.
pub fn tropical_determinant_with_limit(
    a: &TropMatrix,
    limit: usize,
) -> Result<DetCertificate, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare);
    }
    if a.rows > limit {
        return Err(LinalgError::TooLarge);
    }
    let n = a.rows;
    let mut best: Option<(TropScalar, usize, Vec<usize>)> = None;
    for_each_permutation(n, &mut |perm| {
        let mut product = TropScalar::one();
        for (i, &j) in perm.iter().enumerate() {
            product = product.tmul(a.get(i, j));
            if product.is_bottom() {
                return;
            }
        }
        match &mut best {
            None => best = Some((product, 1, perm.to_vec())),
            Some((value, count, witness)) => {
                if product > *value {
                    *value = product;
                    *count = 1;
                    *witness = perm.to_vec();
                } else if product == *value && *count < 2 {
                    *count += 1;
                }
            }
        }
    });
    Ok(match best {
        None => DetCertificate { value: TropScalar::Bottom, multiplicity: 0, witness: None },
        Some((value, count, witness)) => {
            DetCertificate { value, multiplicity: count, witness: Some(witness) }
        }
    })
}

/// `|A|` by expansion along the first row: `⊕_j a_{0,j} ⊗ |A_{0,j}|`.
/// Returns the value and the count of optimal finite permutations (capped
/// at 2). Algebraically independent of the enumeration route; kept public as
/// the cross-check oracle.
pub fn determinant_by_cofactors(a: &TropMatrix) -> Result<(TropScalar, usize), LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare);
    }
    if a.rows > MAX_DET_SIDE {
        return Err(LinalgError::TooLarge);
    }
    fn go(a: &TropMatrix) -> (TropScalar, usize) {
        if a.rows() == 1 {
            return match a.get(0, 0) {
                TropScalar::Bottom => (TropScalar::Bottom, 0),
                v => (v.clone(), 1),
            };
        }
        let mut value = TropScalar::Bottom;
        let mut count = 0usize;
        for j in 0..a.cols() {
            if a.get(0, j).is_bottom() {
                continue;
            }
            let (mv, mc) = go(&a.minor(0, j));
            if mc == 0 {
                continue;
            }
            let candidate = a.get(0, j).tmul(&mv);
            if count == 0 || candidate > value {
                value = candidate;
                count = mc;
            } else if candidate == value {
                count = (count + mc).min(2);
            }
        }
        (value, count)
    }
    Ok(go(a))
}

/// True iff the determinant maximum is attained at least twice (an all-`0_T`
/// permutation set also counts as singular).
pub fn is_singular(a: &TropMatrix) -> Result<bool, LinalgError> {
    Ok(tropical_determinant(a)?.is_singular())
}

/// `[A^adj]_{i,j} = |A_{j,i}|`.
pub fn adjoint(a: &TropMatrix) -> Result<TropMatrix, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare);
    }
    if a.rows < 2 {
        return Err(LinalgError::TooSmall);
    }
    let n = a.rows;
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(tropical_determinant(&a.minor(j, i))?.value);
        }
    }
    Ok(TropMatrix { rows: n, cols: n, entries })
}

/// The Cramer permanents `|B_i|` with certificates.
pub fn cramer_permanents(
    a: &TropMatrix,
    b: &[TropScalar],
) -> Result<Vec<DetCertificate>, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare);
    }
    if b.len() != a.rows {
        return Err(LinalgError::DimensionMismatch);
    }
    (0..a.cols).map(|i| tropical_determinant(&a.with_column(i, b)?)).collect()
}

/// Component-wise solution bound `x_i ≤ (A^adj ⊗ b)_i ⊘ |A| = |B_i| ⊘ |A|`
/// for a nonsingular `A`. Bottom components mean "no finite constraint in
/// that coordinate is balanced", i.e. `x_i = 0_T`.
pub fn cramer_upper_bound(
    a: &TropMatrix,
    b: &[TropScalar],
) -> Result<Vec<TropScalar>, LinalgError> {
    let det = tropical_determinant(a)?;
    if det.is_singular() {
        return Err(LinalgError::SingularMatrix);
    }
    let permanents = cramer_permanents(a, b)?;
    permanents
        .into_iter()
        .map(|p| p.value.tdiv(&det.value).map_err(|_| LinalgError::SingularMatrix))
        .collect()
}

/// True iff in every row the maximum among `{a_{ij} + x_j} ∪ {b_i}` is
/// attained by at least two terms (rows whose terms are all `0_T` count as
/// balanced).
pub fn check_balance(
    a: &TropMatrix,
    x: &[TropScalar],
    b: &[TropScalar],
) -> Result<bool, LinalgError> {
    if x.len() != a.cols || b.len() != a.rows {
        return Err(LinalgError::DimensionMismatch);
    }
    for (i, b_i) in b.iter().enumerate() {
        let mut terms: Vec<TropScalar> = (0..a.cols).map(|j| a.get(i, j).tmul(&x[j])).collect();
        terms.push(b_i.clone());
        let max = terms.iter().max().unwrap().clone();
        if max.is_bottom() {
            continue;
        }
        if terms.iter().filter(|t| **t == max).count() < 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Tropical linear independence of exactly `n+1` vectors of `T^{n+1}`: the
/// matrix with these columns must be nonsingular.
pub fn vectors_independent(vectors: &[Vec<TropScalar>]) -> Result<bool, LinalgError> {
    let m = vectors.len();
    if m == 0 || vectors.iter().any(|v| v.len() != m) {
        return Err(LinalgError::NotSquareFamily);
    }
    // vectors become columns
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        rows.push(vectors.iter().map(|v| v[i].clone()).collect());
    }
    Ok(!is_singular(&TropMatrix::from_rows(rows)?)?)
}

/// General position of `q ≥ n+1` coefficient vectors in `T^{n+1}`: every
/// `(n+1)`-subset must be tropically independent.
pub fn general_position(vectors: &[Vec<TropScalar>], n: usize) -> Result<bool, LinalgError> {
    let q = vectors.len();
    if q < n + 1 {
        return Err(LinalgError::TooFew);
    }
    if vectors.iter().any(|v| v.len() != n + 1) {
        return Err(LinalgError::DimensionMismatch);
    }
    let mut subset: Vec<usize> = Vec::with_capacity(n + 1);
    fn rec(
        vectors: &[Vec<TropScalar>],
        k: usize,
        start: usize,
        subset: &mut Vec<usize>,
    ) -> Result<bool, LinalgError> {
        if subset.len() == k {
            let family: Vec<Vec<TropScalar>> =
                subset.iter().map(|&i| vectors[i].clone()).collect();
            return vectors_independent(&family);
        }
        for i in start..vectors.len() {
            subset.push(i);
            if !rec(vectors, k, i + 1, subset)? {
                subset.pop();
                return Ok(false);
            }
            subset.pop();
        }
        Ok(true)
    }
    rec(vectors, n + 1, 0, &mut subset)
}
