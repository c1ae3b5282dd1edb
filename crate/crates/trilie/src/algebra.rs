//! 3-Lie algebras as exact structure-constant tables.
//!
//! A 3-Lie algebra is a vector space with a totally skew-symmetric trilinear
//! bracket `[.,.,.]` satisfying the fundamental identity
//!
//! ```text
//! [x1, x2, [x3, x4, x5]] = [[x1, x2, x3], x4, x5]
//!                        + [x3, [x1, x2, x4], x5]
//!                        + [x3, x4, [x1, x2, x5]]
//! ```
//!
//! The table stores one coefficient vector per strictly increasing basis
//! triple; all other basis brackets follow by skew-symmetry.  Construction
//! never assumes the fundamental identity — [`ThreeLieAlgebra::check_fundamental_identity`]
//! is the explicit gate, and it reports the first failing tuple when the
//! table is not a 3-Lie algebra.

use crate::error::{Error, Result};
use crate::index::{pair_count, pairs, sort_triple, triple_count, triple_index, triples};
use crate::linalg::{
    basis_vec, kernel_basis, rank, vec_add_scaled, vec_is_zero, vec_sub, zero_vec, Matrix, Rat,
    Subspace,
};
use crate::report::{Verification, Witness};
use num::Zero;

/// A finite-dimensional 3-Lie algebra presented by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeLieAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    /// `sc[triple_index(i,j,k)]` is the coordinate vector of `[e_i, e_j, e_k]`
    /// for `i < j < k`.
    sc: Vec<Vec<Rat>>,
}

impl ThreeLieAlgebra {
    /// Builds an algebra from a full table of strictly increasing triples.
    pub fn new(dim: usize, basis_names: Vec<String>, sc: Vec<Vec<Rat>>) -> Result<Self> {
        if basis_names.len() != dim {
            return Err(Error::Dim(format!(
                "{} basis names for dimension {dim}",
                basis_names.len()
            )));
        }
        if sc.len() != triple_count(dim) {
            return Err(Error::Dim(format!(
                "expected {} bracket vectors, got {}",
                triple_count(dim),
                sc.len()
            )));
        }
        if sc.iter().any(|v| v.len() != dim) {
            return Err(Error::Dim("bracket vector of wrong length".into()));
        }
        Ok(ThreeLieAlgebra {
            dim,
            basis_names,
            sc,
        })
    }

    /// The abelian algebra (zero bracket) with default basis names `e1..en`.
    pub fn abelian(dim: usize) -> Self {
        ThreeLieAlgebra {
            dim,
            basis_names: default_names(dim),
            sc: vec![zero_vec(dim); triple_count(dim)],
        }
    }

    /// Convenience constructor from sparse entries: each item is
    /// `((i, j, k), [(target, coefficient), ...])` with `i < j < k`; omitted
    /// triples are zero.
    pub fn from_brackets(
        dim: usize,
        entries: &[((usize, usize, usize), Vec<(usize, Rat)>)],
    ) -> Result<Self> {
        let mut sc = vec![zero_vec(dim); triple_count(dim)];
        for &((i, j, k), ref value) in entries {
            if !(i < j && j < k && k < dim) {
                return Err(Error::Input(format!(
                    "bracket triple ({i}, {j}, {k}) is not strictly increasing within 0..{dim}"
                )));
            }
            let row = &mut sc[triple_index(dim, i, j, k)];
            for &(t, ref c) in value {
                if t >= dim {
                    return Err(Error::Input(format!("bracket target {t} out of range")));
                }
                row[t] = c.clone();
            }
        }
        ThreeLieAlgebra::new(dim, default_names(dim), sc)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::Dim("wrong number of basis names".into()));
        }
        self.basis_names = names;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Structure constants of `[e_i, e_j, e_k]` for `i < j < k`, by reference.
    pub fn sc_at(&self, i: usize, j: usize, k: usize) -> &[Rat] {
        &self.sc[triple_index(self.dim, i, j, k)]
    }

    /// `[e_i, e_j, e_k]` for arbitrary indices (skew-extended; repeats give 0).
    pub fn bracket_basis(&self, i: usize, j: usize, k: usize) -> Vec<Rat> {
        match sort_triple(i, j, k) {
            None => zero_vec(self.dim),
            Some((sign, (a, b, c))) => {
                let v = self.sc_at(a, b, c);
                if sign > 0 {
                    v.to_vec()
                } else {
                    v.iter().map(|x| -x).collect()
                }
            }
        }
    }

    /// Trilinear bracket of coordinate vectors.
    pub fn bracket(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> Result<Vec<Rat>> {
        if x.len() != self.dim || y.len() != self.dim || z.len() != self.dim {
            return Err(Error::Dim("bracket argument of wrong dimension".into()));
        }
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || j == i {
                    continue;
                }
                for (k, zk) in z.iter().enumerate() {
                    if zk.is_zero() || k == i || k == j {
                        continue;
                    }
                    let c = xi * yj * zk;
                    vec_add_scaled(&mut out, &c, &self.bracket_basis(i, j, k));
                }
            }
        }
        Ok(out)
    }

    /// Exhaustively checks the fundamental identity.
    ///
    /// Both sides are skew in `(x1, x2)` and in `(x3, x4, x5)`, so the
    /// enumeration ranges over `x1 < x2` and `x3 < x4 < x5`; the full
    /// identity follows by multilinearity.  On failure the witness is the
    /// first violating tuple `(x1, x2, x3, x4, x5)` in lexicographic order.
    pub fn check_fundamental_identity(&self) -> Verification {
        let mut checked = 0;
        for (x1, x2) in pairs(self.dim) {
            for (x3, x4, x5) in triples(self.dim) {
                checked += 1;
                let inner = self.bracket_basis(x3, x4, x5);
                let lhs = self
                    .bracket(&basis_vec(self.dim, x1), &basis_vec(self.dim, x2), &inner)
                    .expect("dimensions fixed");
                let mut rhs = zero_vec(self.dim);
                let t1 = self.bracket_basis(x1, x2, x3);
                vec_add_scaled(
                    &mut rhs,
                    &num::One::one(),
                    &self
                        .bracket(&t1, &basis_vec(self.dim, x4), &basis_vec(self.dim, x5))
                        .expect("dims"),
                );
                let t2 = self.bracket_basis(x1, x2, x4);
                vec_add_scaled(
                    &mut rhs,
                    &num::One::one(),
                    &self
                        .bracket(&basis_vec(self.dim, x3), &t2, &basis_vec(self.dim, x5))
                        .expect("dims"),
                );
                let t3 = self.bracket_basis(x1, x2, x5);
                vec_add_scaled(
                    &mut rhs,
                    &num::One::one(),
                    &self
                        .bracket(&basis_vec(self.dim, x3), &basis_vec(self.dim, x4), &t3)
                        .expect("dims"),
                );
                if !vec_is_zero(&vec_sub(&lhs, &rhs)) {
                    return Verification::fail(
                        checked,
                        Witness::new("fundamental identity", vec![x1, x2, x3, x4, x5], &lhs, &rhs),
                    );
                }
            }
        }
        Verification::pass(checked)
    }

    /// The center `{x : [x, y, z] = 0 for all y, z}`, as the exact kernel of
    /// the stacked adjoint matrices.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let rows = pair_count(n) * n;
        let mut m = Matrix::zeros(rows, n);
        for (p, (j, k)) in pairs(n).enumerate() {
            for i in 0..n {
                let col = self.bracket_basis(i, j, k);
                for (l, c) in col.iter().enumerate() {
                    m.set(p * n + l, i, c.clone());
                }
            }
        }
        Subspace::from_span(n, &kernel_basis(&m)).expect("kernel vectors have ambient length")
    }

    /// The derived subalgebra: the span of all basis brackets.
    pub fn derived_algebra(&self) -> Subspace {
        Subspace::from_span(self.dim, &self.sc).expect("table vectors have ambient length")
    }

    /// Whether a subspace is closed under the bracket.
    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        if s.ambient_dim() != self.dim {
            return Err(Error::Dim("subspace of a different ambient space".into()));
        }
        let b = s.basis();
        for a in 0..b.len() {
            for c in (a + 1)..b.len() {
                for d in (c + 1)..b.len() {
                    let v = self.bracket(&b[a], &b[c], &b[d])?;
                    if !s.contains(&v)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Compares the raw tables (dimension and structure constants), ignoring
    /// basis names.
    pub fn same_structure(&self, other: &ThreeLieAlgebra) -> bool {
        self.dim == other.dim && self.sc == other.sc
    }
}

pub(crate) fn default_names(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

/// A linear map between coordinate spaces, stored as its matrix
/// (`target_dim x source_dim`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap {
            matrix: Matrix::identity(n),
        }
    }

    pub fn zero(target_dim: usize, source_dim: usize) -> Self {
        LinearMap {
            matrix: Matrix::zeros(target_dim, source_dim),
        }
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        self.matrix.mul_vec(v)
    }

    /// Image of the `i`-th source basis vector.
    pub fn apply_basis(&self, i: usize) -> Vec<Rat> {
        self.matrix.col(i)
    }

    /// `self . other` (apply `other` first).
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        Ok(LinearMap {
            matrix: self.matrix.mul_mat(&other.matrix)?,
        })
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        Ok(LinearMap {
            matrix: self.matrix.add(&other.matrix)?,
        })
    }

    pub fn scale(&self, c: &Rat) -> LinearMap {
        LinearMap {
            matrix: self.matrix.scale(c),
        }
    }
}

/// Whether `f : a -> b` preserves brackets on every increasing basis triple
/// (equivalent to preserving them everywhere, by multilinearity).
pub fn is_homomorphism(f: &LinearMap, a: &ThreeLieAlgebra, b: &ThreeLieAlgebra) -> Result<bool> {
    if f.source_dim() != a.dim() || f.target_dim() != b.dim() {
        return Err(Error::Dim(format!(
            "map is {}x{} but algebras have dims {} -> {}",
            f.target_dim(),
            f.source_dim(),
            a.dim(),
            b.dim()
        )));
    }
    for (i, j, k) in triples(a.dim()) {
        let lhs = f.apply(a.sc_at(i, j, k))?;
        let rhs = b.bracket(&f.apply_basis(i), &f.apply_basis(j), &f.apply_basis(k))?;
        if !vec_is_zero(&vec_sub(&lhs, &rhs)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Direct sum of two algebras (componentwise brackets, no interaction).
pub fn direct_sum(a: &ThreeLieAlgebra, b: &ThreeLieAlgebra) -> ThreeLieAlgebra {
    let dim = a.dim() + b.dim();
    let mut sc = vec![zero_vec(dim); triple_count(dim)];
    for (i, j, k) in triples(dim) {
        let row = &mut sc[triple_index(dim, i, j, k)];
        if k < a.dim() {
            for (t, c) in a.sc_at(i, j, k).iter().enumerate() {
                row[t] = c.clone();
            }
        } else if i >= a.dim() {
            let (p, q, r) = (i - a.dim(), j - a.dim(), k - a.dim());
            for (t, c) in b.sc_at(p, q, r).iter().enumerate() {
                row[a.dim() + t] = c.clone();
            }
        }
    }
    let mut names = a.basis_names.clone();
    names.extend(b.basis_names.iter().cloned());
    ThreeLieAlgebra {
        dim,
        basis_names: names,
        sc,
    }
}

/// Rank of a linear map (used by tests and the deformation machinery).
pub fn map_rank(f: &LinearMap) -> usize {
    rank(f.matrix())
}
