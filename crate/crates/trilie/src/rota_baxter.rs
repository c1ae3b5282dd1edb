//! Relative Rota-Baxter operators of arbitrary weight.
//!
//! Given a verified action of `g` on `h` and a weight `lambda`, a linear map
//! `T : h -> g` is a relative Rota-Baxter operator when
//!
//! ```text
//! [Tu, Tv, Tw]_g = T( rho(Tu,Tv) w + rho(Tv,Tw) u + rho(Tw,Tu) v
//!                     + lambda [u,v,w]_h )
//! ```
//!
//! for all `u, v, w`.  The module provides the direct check, the equivalent
//! graph-subalgebra and Nijenhuis-lift characterizations, the descendent
//! 3-Lie bracket the operator induces on `h`, the projection construction
//! onto an abelian complemented subalgebra, operator homomorphisms, and a
//! budgeted exhaustive search.

use crate::action::{check_action, semidirect_product_unchecked, ActionData};
use crate::algebra::{is_homomorphism, LinearMap, ThreeLieAlgebra};
use crate::error::{Error, Result};
use crate::index::{pairs, triple_count, triple_index, triples};
use crate::linalg::{
    basis_vec, vec_add_scaled, vec_is_zero, vec_sub, zero_vec, Matrix, Rat, Subspace,
};
use crate::report::{Verification, Witness};
use num::{One, Zero};

/// A candidate relative Rota-Baxter operator: an action, a weight, and a
/// linear map `T : h -> g`.  Construction checks shapes only; the defining
/// identity is checked by [`check_rb`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RBOperator {
    pub action: ActionData,
    pub t: LinearMap,
    pub lambda: Rat,
}

impl RBOperator {
    pub fn new(action: ActionData, t: LinearMap, lambda: Rat) -> Result<Self> {
        if t.source_dim() != action.h.dim() || t.target_dim() != action.g.dim() {
            return Err(Error::Dim(format!(
                "operator matrix is {}x{} but needs to map h (dim {}) to g (dim {})",
                t.target_dim(),
                t.source_dim(),
                action.h.dim(),
                action.g.dim()
            )));
        }
        Ok(RBOperator { action, t, lambda })
    }

    /// `T e_u` as a `g`-vector.
    fn t_basis(&self, u: usize) -> Vec<Rat> {
        self.t.apply_basis(u)
    }
}

/// The induced (descendent) bracket value
/// `rho(Tu,Tv) w + rho(Tv,Tw) u + rho(Tw,Tu) v + lambda [u,v,w]_h`
/// on basis indices of `h`.
pub(crate) fn descendent_bracket_basis(
    op: &RBOperator,
    u: usize,
    v: usize,
    w: usize,
) -> Result<Vec<Rat>> {
    let hd = op.action.h.dim();
    let (eu, ev, ew) = (basis_vec(hd, u), basis_vec(hd, v), basis_vec(hd, w));
    let (tu, tv, tw) = (op.t_basis(u), op.t_basis(v), op.t_basis(w));
    let mut out = op.action.rho.apply(&tu, &tv, &ew)?;
    vec_add_scaled(&mut out, &Rat::one(), &op.action.rho.apply(&tv, &tw, &eu)?);
    vec_add_scaled(&mut out, &Rat::one(), &op.action.rho.apply(&tw, &tu, &ev)?);
    vec_add_scaled(&mut out, &op.lambda, &op.action.h.bracket_basis(u, v, w));
    Ok(out)
}

/// The two sides of the defining identity at a basis triple.
fn rb_sides(op: &RBOperator, u: usize, v: usize, w: usize) -> Result<(Vec<Rat>, Vec<Rat>)> {
    let lhs = op
        .action
        .g
        .bracket(&op.t_basis(u), &op.t_basis(v), &op.t_basis(w))?;
    let rhs = op.t.apply(&descendent_bracket_basis(op, u, v, w)?)?;
    Ok((lhs, rhs))
}

/// Checks the defining identity on the restricted enumeration `u < v < w`
/// (both sides are trilinear and totally skew).  The surrounding action is
/// verified first; an invalid action is an input error, not a witness.
pub fn check_rb(op: &RBOperator) -> Result<Verification> {
    let action_ok = check_action(&op.action)?;
    if !action_ok.passed {
        return Err(Error::Input(format!(
            "operator is declared over an invalid action: {:?}",
            action_ok.witness
        )));
    }
    check_rb_unchecked(op)
}

/// The identity check alone, assuming the action was already verified
/// (search and construction fast path).
pub(crate) fn check_rb_unchecked(op: &RBOperator) -> Result<Verification> {
    let mut checked = 0;
    for (u, v, w) in triples(op.action.h.dim()) {
        checked += 1;
        let (lhs, rhs) = rb_sides(op, u, v, w)?;
        if lhs != rhs {
            return Ok(Verification::fail(
                checked,
                Witness::new("Rota-Baxter identity", vec![u, v, w], &lhs, &rhs),
            ));
        }
    }
    Ok(Verification::pass(checked))
}

/// Graph characterization: `T` satisfies the identity iff
/// `{ (T u, u) : u in h }` is a subalgebra of the semidirect product at the
/// same weight.
pub fn check_rb_via_graph(op: &RBOperator) -> Result<bool> {
    let action_ok = check_action(&op.action)?;
    if !action_ok.passed {
        return Err(Error::Input(
            "graph characterization requires a verified action".into(),
        ));
    }
    let s = semidirect_product_unchecked(&op.action, &op.lambda)?;
    let gd = op.action.g.dim();
    let hd = op.action.h.dim();
    let graph: Vec<Vec<Rat>> = (0..hd)
        .map(|u| {
            let mut v = zero_vec(gd + hd);
            v[..gd].clone_from_slice(&op.t_basis(u));
            v[gd + u] = Rat::one();
            v
        })
        .collect();
    let sub = Subspace::from_basis(gd + hd, graph)?;
    s.is_subalgebra(&sub)
}

/// The descendent 3-Lie algebra `(h, [.,.,.]_T)` of a verified operator.
///
/// Requires `check_rb` to pass; the resulting table is re-verified against
/// the fundamental identity (a failure there would mean a broken
/// implementation, hence a logic error).
pub fn descendent_algebra(op: &RBOperator) -> Result<ThreeLieAlgebra> {
    let v = check_rb(op)?;
    if !v.passed {
        return Err(Error::Input(format!(
            "descendent algebra of an unverified operator (witness {:?})",
            v.witness
        )));
    }
    let hd = op.action.h.dim();
    let mut sc = vec![zero_vec(hd); triple_count(hd)];
    for (u, v, w) in triples(hd) {
        sc[triple_index(hd, u, v, w)] = descendent_bracket_basis(op, u, v, w)?;
    }
    let alg = ThreeLieAlgebra::new(hd, op.action.h.basis_names().to_vec(), sc)?;
    let fi = alg.check_fundamental_identity();
    if !fi.passed {
        return Err(Error::Logic(
            "descendent table of a verified operator failed the fundamental identity".into(),
        ));
    }
    Ok(alg)
}

/// Nijenhuis check: whether `N` satisfies
///
/// ```text
/// [Nx,Ny,Nz] = N( [Nx,Ny,z] + [x,Ny,Nz] + [Nx,y,Nz]
///                 - N[Nx,y,z] - N[x,Ny,z] - N[x,y,Nz] + N^2 [x,y,z] )
/// ```
///
/// on all increasing basis triples (both sides are trilinear skew).
pub fn check_nijenhuis(a: &ThreeLieAlgebra, n: &LinearMap) -> Result<bool> {
    if n.source_dim() != a.dim() || n.target_dim() != a.dim() {
        return Err(Error::Dim(
            "Nijenhuis candidate must be an endomorphism".into(),
        ));
    }
    let d = a.dim();
    for (i, j, k) in triples(d) {
        let (x, y, z) = (basis_vec(d, i), basis_vec(d, j), basis_vec(d, k));
        let (nx, ny, nz) = (n.apply_basis(i), n.apply_basis(j), n.apply_basis(k));
        let lhs = a.bracket(&nx, &ny, &nz)?;
        let mut inner = a.bracket(&nx, &ny, &z)?;
        vec_add_scaled(&mut inner, &Rat::one(), &a.bracket(&x, &ny, &nz)?);
        vec_add_scaled(&mut inner, &Rat::one(), &a.bracket(&nx, &y, &nz)?);
        let m1 = n.apply(&a.bracket(&nx, &y, &z)?)?;
        let m2 = n.apply(&a.bracket(&x, &ny, &z)?)?;
        let m3 = n.apply(&a.bracket(&x, &y, &nz)?)?;
        vec_add_scaled(&mut inner, &(-Rat::one()), &m1);
        vec_add_scaled(&mut inner, &(-Rat::one()), &m2);
        vec_add_scaled(&mut inner, &(-Rat::one()), &m3);
        vec_add_scaled(
            &mut inner,
            &Rat::one(),
            &n.apply(&n.apply(&a.bracket(&x, &y, &z)?)?)?,
        );
        let rhs = n.apply(&inner)?;
        if !vec_is_zero(&vec_sub(&lhs, &rhs)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The lift of `T` to the semidirect product: `(x, u) -> (x + T u, 0)`.
///
/// For a Rota-Baxter operator this block map is an idempotent Nijenhuis
/// operator on `g x h`.
pub fn lift_nijenhuis(op: &RBOperator) -> LinearMap {
    let gd = op.action.g.dim();
    let hd = op.action.h.dim();
    let m = Matrix::from_fn(gd + hd, gd + hd, |i, j| {
        if i < gd && j < gd {
            if i == j {
                Rat::one()
            } else {
                Rat::zero()
            }
        } else if i < gd && j >= gd {
            op.t.matrix().get(i, j - gd).clone()
        } else {
            Rat::zero()
        }
    });
    LinearMap::new(m)
}

/// Projection construction: if `h` is an abelian subalgebra with
/// `g' /\ h = 0` (derived subalgebra meets `h` trivially) and `g = k (+) h`
/// as vector spaces, the projection onto `h` along `k` is a relative
/// Rota-Baxter operator of *every* weight over the adjoint action.
///
/// Each hypothesis is checked and a violation is reported by name; the
/// returned operator is re-verified with [`check_rb`].
pub fn projection_rb(
    g: &ThreeLieAlgebra,
    h_basis: &Subspace,
    k_basis: &Subspace,
    lambda: Rat,
) -> Result<RBOperator> {
    let n = g.dim();
    if h_basis.ambient_dim() != n || k_basis.ambient_dim() != n {
        return Err(Error::Dim("h and k must live inside g".into()));
    }
    let adjoint = ActionData::adjoint(g);
    let action_ok = check_action(&adjoint)?;
    if !action_ok.passed {
        return Err(Error::Input(
            "projection hypothesis failed: the adjoint family is not an action \
             (the derived subalgebra of g must be central)"
                .into(),
        ));
    }
    // h must be an abelian subalgebra: every bracket of h-basis vectors is 0.
    let hb = h_basis.basis();
    for a in 0..hb.len() {
        for b in (a + 1)..hb.len() {
            for c in (b + 1)..hb.len() {
                if !vec_is_zero(&g.bracket(&hb[a], &hb[b], &hb[c])?) {
                    return Err(Error::Input(
                        "projection hypothesis failed: h is not an abelian subalgebra".into(),
                    ));
                }
            }
        }
    }
    // The derived subalgebra must meet h trivially.
    let derived = g.derived_algebra();
    if derived.dim() + h_basis.dim() != derived.sum(h_basis)?.dim() {
        return Err(Error::Input(
            "projection hypothesis failed: the derived subalgebra meets h nontrivially".into(),
        ));
    }
    // k (+) h must be all of g.
    if k_basis.dim() + h_basis.dim() != n || k_basis.sum(h_basis)?.dim() != n {
        return Err(Error::Input(
            "projection hypothesis failed: k and h do not form a direct-sum decomposition of g"
                .into(),
        ));
    }
    // P e_i = h-part of e_i in the k (+) h coordinates.
    let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(n);
    let kh = {
        let mut rows = k_basis.basis().to_vec();
        rows.extend(h_basis.basis().to_vec());
        Matrix::from_rows(rows)?.transpose()
    };
    for i in 0..n {
        let coords = crate::linalg::solve(&kh, &basis_vec(n, i))?
            .ok_or_else(|| Error::Logic("direct sum decomposition failed to solve".into()))?;
        let mut p = zero_vec(n);
        for (t, hv) in h_basis.basis().iter().enumerate() {
            vec_add_scaled(&mut p, &coords[k_basis.dim() + t], hv);
        }
        cols.push(p);
    }
    let pmat = Matrix::from_fn(n, n, |r, c| cols[c][r].clone());
    let op = RBOperator::new(adjoint, LinearMap::new(pmat), lambda)?;
    let v = check_rb_unchecked(&op)?;
    if !v.passed {
        return Err(Error::Logic(format!(
            "projection with verified hypotheses failed the defining identity at {:?}",
            v.witness
        )));
    }
    Ok(op)
}

/// A pair of maps `(psi_g, psi_h)` forming a candidate homomorphism between
/// two operators over the same action and weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RBHomomorphism {
    pub psi_g: LinearMap,
    pub psi_h: LinearMap,
}

/// Whether `(psi_g, psi_h)` is a homomorphism from `from_op` to `to_op`:
/// both components are 3-Lie homomorphisms, `psi_g . T = T' . psi_h`, and
/// `psi_h(rho(x, y) u) = rho(psi_g x, psi_g y)(psi_h u)`.
pub fn is_rb_homomorphism(
    hom: &RBHomomorphism,
    from_op: &RBOperator,
    to_op: &RBOperator,
) -> Result<bool> {
    if from_op.action != to_op.action || from_op.lambda != to_op.lambda {
        return Err(Error::Input(
            "operator homomorphisms are defined over a shared action and weight".into(),
        ));
    }
    let g = &from_op.action.g;
    let h = &from_op.action.h;
    if hom.psi_g.source_dim() != g.dim()
        || hom.psi_g.target_dim() != g.dim()
        || hom.psi_h.source_dim() != h.dim()
        || hom.psi_h.target_dim() != h.dim()
    {
        return Err(Error::Dim("homomorphism components of wrong shape".into()));
    }
    if !is_homomorphism(&hom.psi_g, g, g)? || !is_homomorphism(&hom.psi_h, h, h)? {
        return Ok(false);
    }
    // psi_g . T = T' . psi_h.
    let left = hom.psi_g.compose(&from_op.t)?;
    let right = to_op.t.compose(&hom.psi_h)?;
    if left != right {
        return Ok(false);
    }
    // Intertwining with the action on basis pairs and basis vectors.
    let rho = &from_op.action.rho;
    for (x, y) in pairs(g.dim()) {
        for u in 0..h.dim() {
            let lhs = hom
                .psi_h
                .apply(&rho.apply_basis_pair(x, y, &basis_vec(h.dim(), u))?)?;
            let rhs = rho.apply(
                &hom.psi_g.apply_basis(x),
                &hom.psi_g.apply_basis(y),
                &hom.psi_h.apply_basis(u),
            )?;
            if !vec_is_zero(&vec_sub(&lhs, &rhs)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exhaustive operator search over a finite entry set.
///
/// Enumerates every matrix for `T : h -> g` whose entries lie in
/// `entry_set` (all cells, or just the diagonal with `diagonal_only`),
/// in lexicographic matrix order, and returns the operators passing the
/// defining identity.  The search space must satisfy `cells <= 9` or
/// `|entry_set|^cells <= 10^7`; larger requests are input errors.
pub fn search_rb(
    action: &ActionData,
    lambda: &Rat,
    entry_set: &[Rat],
    diagonal_only: bool,
) -> Result<Vec<RBOperator>> {
    let action_ok = check_action(action)?;
    if !action_ok.passed {
        return Err(Error::Input("search requires a verified action".into()));
    }
    if entry_set.is_empty() {
        return Err(Error::Input("empty entry set".into()));
    }
    let mut entries = entry_set.to_vec();
    entries.sort();
    entries.dedup();

    let gd = action.g.dim();
    let hd = action.h.dim();
    let cells: Vec<(usize, usize)> = if diagonal_only {
        (0..gd.min(hd)).map(|i| (i, i)).collect()
    } else {
        (0..gd).flat_map(|r| (0..hd).map(move |c| (r, c))).collect()
    };
    let budget_ok = cells.len() <= 9 || (entries.len() as f64).powi(cells.len() as i32) <= 1e7;
    if !budget_ok {
        return Err(Error::Input(format!(
            "search space {}^{} exceeds the 10^7 budget",
            entries.len(),
            cells.len()
        )));
    }

    let mut found = Vec::new();
    let mut odometer = vec![0usize; cells.len()];
    loop {
        let mut m = Matrix::zeros(gd, hd);
        for (slot, &(r, c)) in cells.iter().enumerate() {
            m.set(r, c, entries[odometer[slot]].clone());
        }
        let op = RBOperator::new(action.clone(), LinearMap::new(m), lambda.clone())?;
        if check_rb_unchecked(&op)?.passed {
            found.push(op);
        }
        // Advance the odometer (last cell fastest, so the enumeration is
        // lexicographic in row-major matrix order).
        let mut slot = cells.len();
        let advanced = loop {
            if slot == 0 {
                break false;
            }
            slot -= 1;
            if odometer[slot] + 1 < entries.len() {
                odometer[slot] += 1;
                for later in odometer[(slot + 1)..].iter_mut() {
                    *later = 0;
                }
                break true;
            }
        };
        if !advanced {
            break;
        }
    }
    Ok(found)
}
