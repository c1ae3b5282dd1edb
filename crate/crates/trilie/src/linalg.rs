//! Exact linear algebra over the rationals.
//!
//! Everything downstream (bracket tables, operator checks, boundary maps)
//! reduces to exact rank / kernel / solve computations, so this module is the
//! single arithmetic kernel of the crate.  Rationals are arbitrary-precision
//! ([`Rat`] = `num::BigRational`), always stored reduced with a positive
//! denominator.  Elimination is fraction-free (Bareiss): rows are scaled to a
//! common integer denominator and pivoting divides by the previous pivot,
//! which keeps intermediate entries as minors of the original matrix instead
//! of letting numerators and denominators blow up.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Rational from a numerator/denominator pair of machine integers.
///
/// ```
/// use trilie::linalg::rat;
/// assert_eq!(rat(2, 4), rat(1, 2));
/// ```
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from a machine integer.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"` into a rational (whitespace tolerated, `q != 0`).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Input(format!("invalid rational literal `{s}`")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Input(format!("invalid rational literal `{s}`")))?;
    if d.is_zero() {
        return Err(Error::Input(format!("zero denominator in `{s}`")));
    }
    Ok(Rat::new(n, d))
}

/// Formats a rational as `"p"` or `"p/q"` (reduced, sign on the numerator).
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// All-zero vector of the given length.
pub fn zero_vec(len: usize) -> Vec<Rat> {
    vec![Rat::zero(); len]
}

/// Standard basis vector `e_i` of the given dimension.
pub fn basis_vec(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = zero_vec(dim);
    v[i] = Rat::one();
    v
}

/// `a += b`, elementwise.
pub fn vec_add_assign(a: &mut [Rat], b: &[Rat]) {
    debug_assert_eq!(a.len(), b.len());
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

/// `a += c * b`, elementwise.
pub fn vec_add_scaled(a: &mut [Rat], c: &Rat, b: &[Rat]) {
    if c.is_zero() {
        return;
    }
    debug_assert_eq!(a.len(), b.len());
    for (x, y) in a.iter_mut().zip(b) {
        *x += c * y;
    }
}

/// `a - b`, elementwise.
pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `c * a`, elementwise.
pub fn vec_scale(c: &Rat, a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| c * x).collect()
}

/// True iff every component vanishes.
pub fn vec_is_zero(a: &[Rat]) -> bool {
    a.iter().all(Rat::is_zero)
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    /// `rows x cols` zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    /// `n x n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dim("ragged rows in matrix literal".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from integer rows (test/fixture convenience).
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| rint(n)).collect())
                .collect(),
        )
        .expect("integer rows are rectangular")
    }

    /// Entry-wise constructor.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Column `j` as an owned vector.
    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(Error::Dim(format!(
                "matrix is {}x{} but vector has length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = zero_vec(self.rows);
        for i in 0..self.rows {
            let mut acc = Rat::zero();
            for (j, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    acc += self.get(i, j) * x;
                }
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Matrix-matrix product.
    pub fn mul_mat(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dim(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dim("matrix addition shape mismatch".into()));
        }
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x += y;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dim("matrix subtraction shape mismatch".into()));
        }
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x -= y;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> Matrix {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x *= c;
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::Dim("hstack row mismatch".into()));
        }
        Ok(Matrix::from_fn(
            self.rows,
            self.cols + other.cols,
            |i, j| {
                if j < self.cols {
                    self.get(i, j).clone()
                } else {
                    other.get(i, j - self.cols).clone()
                }
            },
        ))
    }
}

/// Row echelon data produced by fraction-free elimination.
///
/// `mat` holds an integer row echelon form of a row-rescaled copy of the
/// input (row scaling preserves rank, kernel, and solution sets), `pivots`
/// the pivot column of each of the first `rank` rows.
struct Echelon {
    rows: usize,
    cols: usize,
    mat: Vec<BigInt>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.mat[i * self.cols + j]
    }
}

/// Fraction-free (Bareiss) elimination to row echelon form.
///
/// Each row is first scaled by its common denominator so that entries are
/// integers; the Bareiss update `m[i][j] <- (p*m[i][j] - m[i][k]*m[k][j]) / p0`
/// (with `p0` the previous pivot) then stays exactly divisible, so every
/// intermediate entry is a minor of the integer matrix.
fn echelon(m: &Matrix) -> Echelon {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<BigInt> = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        let mut denom = BigInt::one();
        for j in 0..cols {
            denom = num::integer::lcm(denom, m.get(i, j).denom().clone());
        }
        for j in 0..cols {
            let e = m.get(i, j);
            a.push(e.numer() * (&denom / e.denom()));
        }
    }

    let idx = |i: usize, j: usize| i * cols + j;
    let mut pivots = Vec::new();
    let mut prev_pivot = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Pick the row with the smallest nonzero pivot magnitude to keep the
        // Bareiss minors small; determinism: first among ties.
        let mut best: Option<usize> = None;
        for i in r..rows {
            if !a[idx(i, c)].is_zero()
                && best.map_or(true, |b| a[idx(i, c)].abs() < a[idx(b, c)].abs())
            {
                best = Some(i);
            }
        }
        let Some(p) = best else { continue };
        if p != r {
            for j in 0..cols {
                a.swap(idx(p, j), idx(r, j));
            }
        }
        let pivot = a[idx(r, c)].clone();
        for i in (r + 1)..rows {
            let factor = a[idx(i, c)].clone();
            for j in 0..cols {
                let v = &pivot * &a[idx(i, j)] - &factor * &a[idx(r, j)];
                let (q, rem) = num::Integer::div_rem(&v, &prev_pivot);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[idx(i, j)] = q;
            }
        }
        pivots.push(c);
        prev_pivot = pivot;
        r += 1;
    }
    Echelon {
        rows,
        cols,
        mat: a,
        pivots,
    }
}

/// Rank of a matrix.
///
/// ```
/// use trilie::linalg::{rank, Matrix};
/// let m = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
/// assert_eq!(rank(&m), 1);
/// ```
pub fn rank(m: &Matrix) -> usize {
    echelon(m).pivots.len()
}

/// Back-substitution on an echelon form: given values for the free columns,
/// returns the full solution of `E x = rhs` (rhs in echelon coordinates).
fn back_substitute(e: &Echelon, free_values: &[(usize, Rat)], rhs: &[Rat]) -> Vec<Rat> {
    let mut x = zero_vec(e.cols);
    for (c, v) in free_values {
        x[*c] = v.clone();
    }
    for (row, &pc) in e.pivots.iter().enumerate().rev() {
        let mut acc = rhs[row].clone();
        for j in (pc + 1)..e.cols {
            if !x[j].is_zero() && !e.get(row, j).is_zero() {
                acc -= Rat::from_integer(e.get(row, j).clone()) * &x[j];
            }
        }
        x[pc] = acc / Rat::from_integer(e.get(row, pc).clone());
    }
    x
}

/// Basis of the kernel of `m`, one vector per free column, each normalized
/// with a `1` in its free coordinate.  The result spans exactly
/// `{x : m x = 0}` and has `cols - rank` elements.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Rat>> {
    let e = echelon(m);
    let pivot_set: std::collections::BTreeSet<usize> = e.pivots.iter().copied().collect();
    let zeros = zero_vec(e.pivots.len().max(e.rows));
    (0..e.cols)
        .filter(|c| !pivot_set.contains(c))
        .map(|c| back_substitute(&e, &[(c, Rat::one())], &zeros))
        .collect()
}

/// Solves `m x = b` exactly.  Returns `Ok(None)` when the system is
/// inconsistent; free variables are set to zero, so the answer is the
/// deterministic particular solution of the echelon form.
pub fn solve(m: &Matrix, b: &[Rat]) -> Result<Option<Vec<Rat>>> {
    if b.len() != m.rows {
        return Err(Error::Dim(format!(
            "solve: matrix has {} rows but rhs has length {}",
            m.rows,
            b.len()
        )));
    }
    // Eliminate the augmented matrix [m | b]; a pivot in the last column
    // certifies inconsistency.
    let mut aug = Matrix::zeros(m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, m.cols, b[i].clone());
    }
    let e = echelon(&aug);
    if e.pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let rhs: Vec<Rat> = (0..e.pivots.len())
        .map(|row| Rat::from_integer(e.get(row, m.cols).clone()))
        .collect();
    let mut stripped_mat = Vec::with_capacity(e.rows * m.cols);
    for i in 0..e.rows {
        for j in 0..m.cols {
            stripped_mat.push(e.get(i, j).clone());
        }
    }
    let stripped = Echelon {
        rows: e.rows,
        cols: m.cols,
        mat: stripped_mat,
        pivots: e.pivots.clone(),
    };
    let mut x = back_substitute(&stripped, &[], &rhs);
    x.truncate(m.cols);
    Ok(Some(x))
}

/// A linear subspace of `Q^n`, stored as a reduced basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rat>>,
}

impl Subspace {
    /// The zero subspace of `Q^n`.
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    /// Span of the given vectors, reduced to an independent basis
    /// (deterministic: reduced row echelon form of the stacked vectors).
    pub fn from_span(ambient_dim: usize, vectors: &[Vec<Rat>]) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != ambient_dim) {
            return Err(Error::Dim("span vector length mismatch".into()));
        }
        let m = Matrix::from_rows(vectors.to_vec())?;
        Ok(Subspace {
            ambient_dim,
            basis: rref_rows(&m),
        })
    }

    /// Wraps vectors that are asserted to be independent; errors otherwise.
    pub fn from_basis(ambient_dim: usize, vectors: Vec<Vec<Rat>>) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != ambient_dim) {
            return Err(Error::Dim("basis vector length mismatch".into()));
        }
        let m = Matrix::from_rows(vectors.clone())?;
        if rank(&m) != vectors.len() {
            return Err(Error::Input("subspace basis is linearly dependent".into()));
        }
        Ok(Subspace {
            ambient_dim,
            basis: vectors,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    /// Membership test by exact solve against the basis matrix.
    pub fn contains(&self, v: &[Rat]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::Dim("membership test in wrong ambient space".into()));
        }
        if self.basis.is_empty() {
            return Ok(vec_is_zero(v));
        }
        let m = Matrix::from_rows(self.basis.clone())?.transpose();
        Ok(solve(&m, v)?.is_some())
    }

    /// Sum of two subspaces of the same ambient space.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::Dim("subspace sum ambient mismatch".into()));
        }
        let mut vs = self.basis.clone();
        vs.extend(other.basis.clone());
        Subspace::from_span(self.ambient_dim, &vs)
    }
}

/// Reduced row echelon form, returned as the list of nonzero rows with
/// leading entry 1.  Used to canonicalize spanning sets.
fn rref_rows(m: &Matrix) -> Vec<Vec<Rat>> {
    let mut rows: Vec<Vec<Rat>> = (0..m.rows).map(|i| m.row(i).to_vec()).collect();
    let cols = m.cols;
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(p, r);
        let inv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x /= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                vec_add_scaled(&mut rows[i], &(-f), &pivot_row);
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    rows
}

/// Dimension of the quotient `z / b`.
///
/// Verifies `b` is contained in `z` first (solve on each basis vector of
/// `b`); a containment failure is a logic error because callers use this for
/// cohomology of complexes whose inclusion is a theorem.
pub fn quotient_dim(z: &Subspace, b: &Subspace) -> Result<usize> {
    if z.ambient_dim != b.ambient_dim {
        return Err(Error::Dim(
            "quotient of subspaces of different spaces".into(),
        ));
    }
    for v in b.basis() {
        if !z.contains(v)? {
            return Err(Error::Logic(
                "quotient_dim: second subspace is not contained in the first".into(),
            ));
        }
    }
    Ok(z.dim() - b.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_parse_and_format_roundtrip() {
        for s in ["0", "5", "-3", "1/2", "-7/3", "10/4"] {
            let r = parse_rat(s).unwrap();
            let back = parse_rat(&rat_string(&r)).unwrap();
            assert_eq!(r, back);
        }
        assert_eq!(rat_string(&parse_rat("10/4").unwrap()), "5/2");
        assert_eq!(rat_string(&parse_rat("3/-6").unwrap()), "-1/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn rank_of_identity_and_zero() {
        assert_eq!(rank(&Matrix::identity(4)), 4);
        assert_eq!(rank(&Matrix::zeros(3, 5)), 0);
        assert_eq!(rank(&Matrix::zeros(0, 0)), 0);
    }

    #[test]
    fn rank_of_dependent_rows_is_one() {
        // Second row is twice the first.
        let m = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn kernel_of_sum_functional_is_two_dimensional() {
        let m = Matrix::from_int_rows(&[&[1, 1, 0]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(
                vec_is_zero(&m.mul_vec(v).unwrap()),
                "kernel vector not annihilated"
            );
        }
    }

    #[test]
    fn solve_scalar_equation() {
        let m = Matrix::from_int_rows(&[&[2]]);
        let x = solve(&m, &[rint(3)]).unwrap().unwrap();
        assert_eq!(x, vec![rat(3, 2)]);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = Matrix::from_int_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(solve(&m, &[rint(1), rint(2)]).unwrap(), None);
        assert!(solve(&m, &[rint(1)]).is_err());
    }

    #[test]
    fn solve_with_free_variables_picks_particular_solution() {
        let m = Matrix::from_int_rows(&[&[1, 2, 3]]);
        let b = vec![rint(6)];
        let x = solve(&m, &b).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), b);
    }

    #[test]
    fn quotient_of_plane_by_line() {
        let z = Subspace::from_span(2, &[basis_vec(2, 0), basis_vec(2, 1)]).unwrap();
        let b = Subspace::from_span(2, &[vec![rint(1), rint(1)]]).unwrap();
        assert_eq!(quotient_dim(&z, &b).unwrap(), 1);
    }

    #[test]
    fn quotient_rejects_non_contained_subspace() {
        let z = Subspace::from_span(2, &[basis_vec(2, 0)]).unwrap();
        let b = Subspace::from_span(2, &[basis_vec(2, 1)]).unwrap();
        assert!(matches!(quotient_dim(&z, &b), Err(Error::Logic(_))));
    }

    #[test]
    fn subspace_membership() {
        let s = Subspace::from_span(3, &[vec![rint(1), rint(1), rint(0)]]).unwrap();
        assert!(s.contains(&[rint(2), rint(2), rint(0)]).unwrap());
        assert!(!s.contains(&[rint(1), rint(0), rint(0)]).unwrap());
        assert!(Subspace::zero(3).contains(&zero_vec(3)).unwrap());
    }

    #[test]
    fn dependent_basis_is_rejected() {
        let vs = vec![basis_vec(2, 0), basis_vec(2, 0)];
        assert!(Subspace::from_basis(2, vs).is_err());
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-4i64..5, r * c).prop_map(move |vals| {
                let mut m = Matrix::zeros(r, c);
                for i in 0..r {
                    for j in 0..c {
                        m.set(i, j, rint(vals[i * c + j]));
                    }
                }
                m
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_plus_nullity_is_column_count(m in small_matrix()) {
            prop_assert_eq!(rank(&m) + kernel_basis(&m).len(), m.cols());
        }

        #[test]
        fn kernel_vectors_are_annihilated(m in small_matrix()) {
            for v in kernel_basis(&m) {
                prop_assert!(vec_is_zero(&m.mul_vec(&v).unwrap()));
            }
        }

        #[test]
        fn solve_solutions_substitute_back(m in small_matrix(), seed in proptest::collection::vec(-3i64..4, 1..5)) {
            // Build a guaranteed-consistent rhs from a random preimage.
            let x0: Vec<Rat> = (0..m.cols()).map(|j| rint(*seed.get(j % seed.len()).unwrap())).collect();
            let b = m.mul_vec(&x0).unwrap();
            let x = solve(&m, &b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
        }

        #[test]
        fn rank_is_transpose_invariant(m in small_matrix()) {
            prop_assert_eq!(rank(&m), rank(&m.transpose()));
        }
    }
}
