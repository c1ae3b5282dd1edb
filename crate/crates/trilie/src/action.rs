//! Representations and actions of 3-Lie algebras, and semidirect products.
//!
//! A representation of `g` on `V` is a skew bilinear family of operators
//! `rho(x, y)` satisfying
//!
//! ```text
//! (R1)  rho(x1,x2) rho(x3,x4) = rho([x1,x2,x3], x4) + rho(x3, [x1,x2,x4])
//!                             + rho(x3,x4) rho(x1,x2)
//! (R2)  rho(x1, [x2,x3,x4])   = rho(x3,x4) rho(x1,x2)
//!                             - rho(x2,x4) rho(x1,x3)
//!                             + rho(x2,x3) rho(x1,x4)
//! ```
//!
//! An *action* of `g` on an algebra `h` additionally requires every value
//! `rho(x, y) u` to be central in `h` and `rho(x, y)` to annihilate the
//! derived subalgebra of `h`; exactly then the weighted semidirect bracket
//!
//! ```text
//! [x+u, y+v, z+w] = [x,y,z]_g + rho(x,y) w + rho(y,z) u + rho(z,x) v
//!                 + lambda [u,v,w]_h
//! ```
//!
//! satisfies the fundamental identity for every weight `lambda`.

use crate::algebra::ThreeLieAlgebra;
use crate::error::{Error, Result};
use crate::index::{pair_count, pair_index, pairs, sort_pair, triple_index, triples};
use crate::linalg::{basis_vec, vec_add_scaled, vec_is_zero, zero_vec, Matrix, Rat};
use crate::report::{Verification, Witness};
use num::Zero;

/// A skew bilinear family `rho : g x g -> End(V)`, stored as one `V`-matrix
/// per strictly increasing pair of `g`-basis indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairMap {
    g_dim: usize,
    v_dim: usize,
    mats: Vec<Matrix>,
}

impl PairMap {
    pub fn new(g_dim: usize, v_dim: usize, mats: Vec<Matrix>) -> Result<Self> {
        if mats.len() != pair_count(g_dim) {
            return Err(Error::Dim(format!(
                "expected {} pair matrices, got {}",
                pair_count(g_dim),
                mats.len()
            )));
        }
        if mats.iter().any(|m| m.rows() != v_dim || m.cols() != v_dim) {
            return Err(Error::Dim("pair matrix of wrong shape".into()));
        }
        Ok(PairMap { g_dim, v_dim, mats })
    }

    /// The zero family (always a representation, and an action).
    pub fn zero(g_dim: usize, v_dim: usize) -> Self {
        PairMap {
            g_dim,
            v_dim,
            mats: vec![Matrix::zeros(v_dim, v_dim); pair_count(g_dim)],
        }
    }

    /// Entry-wise constructor over canonical pairs.
    pub fn from_fn(
        g_dim: usize,
        v_dim: usize,
        mut f: impl FnMut(usize, usize) -> Matrix,
    ) -> Result<Self> {
        let mats: Vec<Matrix> = pairs(g_dim).map(|(a, b)| f(a, b)).collect();
        PairMap::new(g_dim, v_dim, mats)
    }

    pub fn g_dim(&self) -> usize {
        self.g_dim
    }

    pub fn v_dim(&self) -> usize {
        self.v_dim
    }

    /// Matrix of `rho(e_a, e_b)` for `a < b`, by reference.
    pub fn mat_at(&self, a: usize, b: usize) -> &Matrix {
        &self.mats[pair_index(self.g_dim, a, b)]
    }

    /// Matrix of `rho(e_a, e_b)` for arbitrary indices (skew; `a == b` is 0).
    pub fn mat(&self, a: usize, b: usize) -> Matrix {
        match sort_pair(a, b) {
            None => Matrix::zeros(self.v_dim, self.v_dim),
            Some((1, (p, q))) => self.mat_at(p, q).clone(),
            Some((_, (p, q))) => self.mat_at(p, q).scale(&-Rat::from_integer(1.into())),
        }
    }

    /// `rho(e_a, e_b) v` for arbitrary basis indices.
    pub fn apply_basis_pair(&self, a: usize, b: usize, v: &[Rat]) -> Result<Vec<Rat>> {
        match sort_pair(a, b) {
            None => Ok(zero_vec(self.v_dim)),
            Some((sign, (p, q))) => {
                let mut out = self.mat_at(p, q).mul_vec(v)?;
                if sign < 0 {
                    for x in out.iter_mut() {
                        *x = -x.clone();
                    }
                }
                Ok(out)
            }
        }
    }

    /// `rho(x, y) v` for coordinate vectors `x, y` in `g`.
    pub fn apply(&self, x: &[Rat], y: &[Rat], v: &[Rat]) -> Result<Vec<Rat>> {
        if x.len() != self.g_dim || y.len() != self.g_dim {
            return Err(Error::Dim("pair-map argument of wrong dimension".into()));
        }
        let mut out = zero_vec(self.v_dim);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() || b == a {
                    continue;
                }
                let c = xa * yb;
                vec_add_scaled(&mut out, &c, &self.apply_basis_pair(a, b, v)?);
            }
        }
        Ok(out)
    }

    /// `rho(X) v` for a wedge `X` given by coefficients over canonical pairs.
    pub fn apply_wedge(&self, wedge: &[Rat], v: &[Rat]) -> Result<Vec<Rat>> {
        if wedge.len() != pair_count(self.g_dim) {
            return Err(Error::Dim(
                "wedge coefficient vector of wrong length".into(),
            ));
        }
        let mut out = zero_vec(self.v_dim);
        for (p, (a, b)) in pairs(self.g_dim).enumerate() {
            if !wedge[p].is_zero() {
                vec_add_scaled(&mut out, &wedge[p], &self.apply_basis_pair(a, b, v)?);
            }
        }
        Ok(out)
    }
}

impl ThreeLieAlgebra {
    /// The adjoint family `ad(e_i, e_j) = [e_i, e_j, .]`.
    ///
    /// Always a representation when the fundamental identity holds; an
    /// *action* of the algebra on itself exactly when the derived subalgebra
    /// is central.
    pub fn adjoint_rep(&self) -> PairMap {
        let n = self.dim();
        PairMap::from_fn(n, n, |a, b| {
            Matrix::from_fn(n, n, |row, col| self.bracket_basis(a, b, col)[row].clone())
        })
        .expect("adjoint shapes are consistent")
    }
}

/// Checks both representation identities on all unrestricted basis 4-tuples.
///
/// (R2) has no symmetry across its four slots, so nothing is quotiented out;
/// on failure the witness carries the identity label, the 4-tuple, and the
/// first differing matrix column (its index is appended to the tuple).
pub fn check_representation(g: &ThreeLieAlgebra, rho: &PairMap) -> Result<Verification> {
    if rho.g_dim() != g.dim() {
        return Err(Error::Dim(format!(
            "pair map over dim {} but algebra has dim {}",
            rho.g_dim(),
            g.dim()
        )));
    }
    let n = g.dim();
    let v = rho.v_dim();
    let mut checked = 0;
    // rho with a vector first argument: sum over nonzero coordinates.
    let rho_vec_basis = |x: &[Rat], b: usize| -> Result<Matrix> {
        let mut m = Matrix::zeros(v, v);
        for (a, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&rho.mat(a, b).scale(c))?;
            }
        }
        Ok(m)
    };
    for x1 in 0..n {
        for x2 in 0..n {
            for x3 in 0..n {
                for x4 in 0..n {
                    // (R1); the middle term rho(x3, [x1,x2,x4]) is
                    // -rho([x1,x2,x4], x3) by skewness in the pair slots.
                    checked += 1;
                    let lhs = rho.mat(x1, x2).mul_mat(&rho.mat(x3, x4))?;
                    let rhs = rho_vec_basis(&g.bracket_basis(x1, x2, x3), x4)?
                        .add(&rho_vec_basis(&g.bracket_basis(x1, x2, x4), x3)?.scale(&rint_neg1()))?
                        .add(&rho.mat(x3, x4).mul_mat(&rho.mat(x1, x2))?)?;
                    if let Some(w) = first_matrix_mismatch(
                        "representation identity (R1)",
                        &[x1, x2, x3, x4],
                        &lhs,
                        &rhs,
                    ) {
                        return Ok(Verification::fail(checked, w));
                    }
                    // (R2)
                    checked += 1;
                    let inner = g.bracket_basis(x2, x3, x4);
                    let mut lhs2 = Matrix::zeros(v, v);
                    for (b, c) in inner.iter().enumerate() {
                        if !c.is_zero() {
                            lhs2 = lhs2.add(&rho.mat(x1, b).scale(c))?;
                        }
                    }
                    let rhs2 = rho
                        .mat(x3, x4)
                        .mul_mat(&rho.mat(x1, x2))?
                        .sub(&rho.mat(x2, x4).mul_mat(&rho.mat(x1, x3))?)?
                        .add(&rho.mat(x2, x3).mul_mat(&rho.mat(x1, x4))?)?;
                    if let Some(w) = first_matrix_mismatch(
                        "representation identity (R2)",
                        &[x1, x2, x3, x4],
                        &lhs2,
                        &rhs2,
                    ) {
                        return Ok(Verification::fail(checked, w));
                    }
                }
            }
        }
    }
    Ok(Verification::pass(checked))
}

fn rint_neg1() -> Rat {
    -Rat::from_integer(1.into())
}

fn first_matrix_mismatch(
    identity: &str,
    tuple: &[usize],
    lhs: &Matrix,
    rhs: &Matrix,
) -> Option<Witness> {
    for col in 0..lhs.cols() {
        let l = lhs.col(col);
        let r = rhs.col(col);
        if l != r {
            let mut indices = tuple.to_vec();
            indices.push(col);
            return Some(Witness::new(identity, indices, &l, &r));
        }
    }
    None
}

/// A 3-Lie algebra `g`, an algebra `h`, and a candidate action of `g` on `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionData {
    pub g: ThreeLieAlgebra,
    pub h: ThreeLieAlgebra,
    pub rho: PairMap,
}

impl ActionData {
    pub fn new(g: ThreeLieAlgebra, h: ThreeLieAlgebra, rho: PairMap) -> Result<Self> {
        if rho.g_dim() != g.dim() || rho.v_dim() != h.dim() {
            return Err(Error::Dim(format!(
                "pair map is {}x{} over dim {} but g, h have dims {}, {}",
                rho.v_dim(),
                rho.v_dim(),
                rho.g_dim(),
                g.dim(),
                h.dim()
            )));
        }
        Ok(ActionData { g, h, rho })
    }

    /// The adjoint action data of an algebra on itself.
    pub fn adjoint(g: &ThreeLieAlgebra) -> Self {
        ActionData {
            g: g.clone(),
            h: g.clone(),
            rho: g.adjoint_rep(),
        }
    }
}

/// Verifies the full action axioms:
/// both carriers satisfy the fundamental identity, `rho` is a
/// representation, every `rho(e_i, e_j) e_u` is central in `h`, and every
/// `rho(e_i, e_j)` annihilates the derived subalgebra of `h`.
pub fn check_action(a: &ActionData) -> Result<Verification> {
    let g_ok = a.g.check_fundamental_identity();
    if !g_ok.passed {
        return Ok(g_ok);
    }
    let h_ok = a.h.check_fundamental_identity();
    if !h_ok.passed {
        return Ok(h_ok);
    }
    let rep = check_representation(&a.g, &a.rho)?;
    if !rep.passed {
        return Ok(rep);
    }
    let mut checked = g_ok.checked + h_ok.checked + rep.checked;
    let center = a.h.center();
    let h_dim = a.h.dim();
    for (i, j) in pairs(a.g.dim()) {
        for u in 0..h_dim {
            checked += 1;
            let img = a.rho.apply_basis_pair(i, j, &basis_vec(h_dim, u))?;
            if !center.contains(&img)? {
                return Ok(Verification::fail(
                    checked,
                    Witness::new(
                        "action value must be central in h",
                        vec![i, j, u],
                        &img,
                        &zero_vec(h_dim),
                    ),
                ));
            }
        }
        for (p, q, r) in triples(h_dim) {
            checked += 1;
            let img = a.rho.apply_basis_pair(i, j, a.h.sc_at(p, q, r))?;
            if !vec_is_zero(&img) {
                return Ok(Verification::fail(
                    checked,
                    Witness::new(
                        "action must annihilate brackets of h",
                        vec![i, j, p, q, r],
                        &img,
                        &zero_vec(h_dim),
                    ),
                ));
            }
        }
    }
    Ok(Verification::pass(checked))
}

/// The semidirect product `g x_rho h` at weight `lambda`.
///
/// Requires a verified action (the structure theorem guaranteeing the
/// fundamental identity for every `lambda` is only available then); returns
/// the product on the basis `g` then `h`.
pub fn semidirect_product(a: &ActionData, lambda: &Rat) -> Result<ThreeLieAlgebra> {
    let action_ok = check_action(a)?;
    if !action_ok.passed {
        return Err(Error::Input(format!(
            "semidirect product requires a verified action; failed at {:?}",
            action_ok.witness
        )));
    }
    semidirect_product_unchecked(a, lambda)
}

/// Semidirect bracket table without the action gate (internal fast path for
/// callers that have already verified the action).
pub(crate) fn semidirect_product_unchecked(
    a: &ActionData,
    lambda: &Rat,
) -> Result<ThreeLieAlgebra> {
    let gd = a.g.dim();
    let hd = a.h.dim();
    let dim = gd + hd;
    let mut sc = vec![zero_vec(dim); crate::index::triple_count(dim)];
    for (i, j, k) in triples(dim) {
        let row = &mut sc[triple_index(dim, i, j, k)];
        // Split each basis vector into its g-part index or h-part index.
        let val = semidirect_bracket_basis(a, lambda, i, j, k)?;
        row.clone_from_slice(&val);
    }
    let mut names = a.g.basis_names().to_vec();
    names.extend(a.h.basis_names().iter().cloned());
    ThreeLieAlgebra::new(dim, names, sc)
}

/// `[b_i, b_j, b_k]` in `g (+) h` coordinates for basis indices of the sum.
fn semidirect_bracket_basis(
    a: &ActionData,
    lambda: &Rat,
    i: usize,
    j: usize,
    k: usize,
) -> Result<Vec<Rat>> {
    let gd = a.g.dim();
    let hd = a.h.dim();
    let dim = gd + hd;
    let mut out = zero_vec(dim);
    let gs: Vec<usize> = [i, j, k].iter().copied().filter(|&t| t < gd).collect();
    let hs: Vec<usize> = [i, j, k]
        .iter()
        .copied()
        .filter(|&t| t >= gd)
        .map(|t| t - gd)
        .collect();
    match (gs.len(), hs.len()) {
        (3, 0) => {
            let v = a.g.bracket_basis(gs[0], gs[1], gs[2]);
            out[..gd].clone_from_slice(&v);
        }
        (2, 1) => {
            // [x, y, w] with x, y in g and w in h gives rho(x, y) w.  Since
            // i < j < k and the h-block sits above the g-block, the single
            // h-argument is already in the last slot: no reordering sign.
            let v = a
                .rho
                .apply_basis_pair(gs[0], gs[1], &basis_vec(hd, hs[0]))?;
            for (t, c) in v.iter().enumerate() {
                out[gd + t] = c.clone();
            }
        }
        (0, 3) => {
            let v = a.h.bracket_basis(hs[0], hs[1], hs[2]);
            for (t, c) in v.iter().enumerate() {
                out[gd + t] = lambda * c;
            }
        }
        _ => {} // one g-argument, two h-arguments: all terms vanish
    }
    Ok(out)
}
