//! Cohomology of 3-Lie algebras and of weighted operators.
//!
//! For a representation `rho` of `g` on `V`, the space of `n`-cochains is
//! `Hom((L^2 g)^(n-1) ^ g, V)` and the coboundary is the classical four-group
//! sum (substitution into a later pair slot, bracket into the final slot,
//! action terms, and the two trailing action terms).  A verified weighted
//! operator `T: h -> g` induces a representation `varrho` of its descendent
//! algebra on `g`, whose coboundary is written `d_T`; bolting the space
//! `g ^ g` onto the bottom of that complex via the operator `delta` yields
//! the cochain complex of `T` itself.  Its second cohomology classifies
//! infinitesimal deformations: a linear map `t_frak` deforms `T` to first
//! order iff it is a 2-cocycle, and the deformation is trivial iff `t_frak`
//! lies in the image of `delta`.

use crate::action::PairMap;
use crate::algebra::{LinearMap, ThreeLieAlgebra};
use crate::error::{Error, Result};
use crate::index::{pair_count, pairs, triples};
use crate::linalg::{
    basis_vec, kernel_basis, rank, solve, vec_add_scaled, vec_is_zero, vec_sub, zero_vec, Matrix,
    Rat,
};
use crate::linfty::{cochain_keys, Cochain};
use crate::report::{Verification, Witness};
use crate::rota_baxter::{check_rb, descendent_algebra, descendent_bracket_basis, RBOperator};
use num::{One, Zero};

/// One level of a cochain complex: the space `C^n` and the boundary matrix
/// of `d: C^n -> C^(n+1)` in the canonical cochain basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexSlice {
    pub degree: usize,
    pub cochain_space_dim: usize,
    pub boundary_matrix: Matrix,
}

/// The outcome of classifying a candidate infinitesimal deformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationVerdict {
    pub is_cocycle: bool,
    pub cohomology_class_trivial: bool,
    /// Coefficients over the canonical pair basis of `g ^ g` with
    /// `t_frak = delta(witness_x)`, when the class is trivial.
    pub witness_x: Option<Vec<Rat>>,
}

/// The coboundary of an `n`-cochain (degree `n-1`) over a representation:
///
/// ```text
/// (df)(X_1,..,X_n,x) = sum_{j<k} (-1)^j f(..X^_j.., [x_j,y_j,x_k]^y_k + x_k^[x_j,y_j,y_k], .., x)
///                    + sum_j (-1)^j f(..X^_j.., [x_j,y_j,x])
///                    + sum_j (-1)^{j+1} rho(x_j,y_j) f(..X^_j.., x)
///                    + (-1)^{n+1} (rho(y_n,x) f(..,x_n) + rho(x,x_n) f(..,y_n))
/// ```
///
/// The representation axioms are assumed, not re-verified here; the gated
/// entry points are [`d_t`] and [`rb_complex`].
pub fn d_lie(g: &ThreeLieAlgebra, rep: &PairMap, f: &Cochain, n: usize) -> Result<Cochain> {
    if n == 0 || f.degree() != n - 1 {
        return Err(Error::Input(format!(
            "coboundary level {n} needs a cochain with {} pair slots, found {}",
            n.saturating_sub(1),
            f.degree()
        )));
    }
    if rep.g_dim() != g.dim() || f.src_dim() != g.dim() || f.tgt_dim() != rep.v_dim() {
        return Err(Error::Dim(
            "cochain does not match the representation".into(),
        ));
    }
    let dim = g.dim();
    let pair_list: Vec<(usize, usize)> = pairs(dim).collect();

    Cochain::from_fn(n, dim, dim_of(rep), |slots, last| {
        let xs: Vec<(usize, usize)> = slots.iter().map(|&s| pair_list[s]).collect();
        let mut out = zero_vec(rep.v_dim());

        // Group 1: drop slot j, substitute the bracket into slot k.
        for j in 0..n {
            let sign = j % 2 == 0; // (-1)^(j+1) for 1-based j, i.e. negative when j is even here
            let (uj, vj) = xs[j];
            for k in (j + 1)..n {
                let (uk, vk) = xs[k];
                for (replacement, keep_second) in [
                    (g.bracket_basis(uj, vj, uk), true),
                    (g.bracket_basis(uj, vj, vk), false),
                ] {
                    for (m, c) in replacement.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let mut args = Vec::with_capacity(n - 1);
                        for (i, &x) in xs.iter().enumerate() {
                            if i == j {
                                continue;
                            }
                            if i == k {
                                args.push(if keep_second { (m, vk) } else { (uk, m) });
                            } else {
                                args.push(x);
                            }
                        }
                        let v = f.value_signed(&args, last);
                        let coeff = if sign { -c } else { c.clone() };
                        vec_add_scaled(&mut out, &coeff, &v);
                    }
                }
            }
        }

        // Groups 2 and 3: drop slot j; bracket into the final slot, and the
        // action applied outside.
        for j in 0..n {
            let (uj, vj) = xs[j];
            let args: Vec<(usize, usize)> = xs
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .map(|(_, &x)| x)
                .collect();
            let br = g.bracket_basis(uj, vj, last);
            for (m, c) in br.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let v = f.value_signed(&args, m);
                let coeff = if j % 2 == 0 { -c } else { c.clone() };
                vec_add_scaled(&mut out, &coeff, &v);
            }
            let acted = rep
                .mat(uj, vj)
                .mul_vec(&f.value_signed(&args, last))
                .unwrap();
            let sign = if j % 2 == 0 { Rat::one() } else { -Rat::one() };
            vec_add_scaled(&mut out, &sign, &acted);
        }

        // Group 4: the two trailing action terms built from the last pair.
        let (un, vn) = xs[n - 1];
        let head: Vec<(usize, usize)> = xs[..n - 1].to_vec();
        let sign = if (n + 1) % 2 == 0 {
            Rat::one()
        } else {
            -Rat::one()
        };
        let t1 = rep
            .mat(vn, last)
            .mul_vec(&f.value_signed(&head, un))
            .unwrap();
        vec_add_scaled(&mut out, &sign, &t1);
        let t2 = rep
            .mat(last, un)
            .mul_vec(&f.value_signed(&head, vn))
            .unwrap();
        vec_add_scaled(&mut out, &sign, &t2);

        out
    })
}

fn dim_of(rep: &PairMap) -> usize {
    rep.v_dim()
}

/// The representation of the descendent algebra on `g` induced by a verified
/// operator: `varrho(u,v)(x) = [Tu,Tv,x] - T(rho(x,Tu)v + rho(Tv,x)u)`.
pub fn induced_rep(op: &RBOperator) -> Result<PairMap> {
    let rb = check_rb(op)?;
    if !rb.passed {
        return Err(Error::Input(format!(
            "induced representation of an unverified operator (witness {:?})",
            rb.witness
        )));
    }
    let g_dim = op.action.g.dim();
    let h_dim = op.action.h.dim();
    PairMap::from_fn(h_dim, g_dim, |u, v| {
        let tu = op.t.apply_basis(u);
        let tv = op.t.apply_basis(v);
        Matrix::from_fn(g_dim, g_dim, |row, x| {
            let ex = basis_vec(g_dim, x);
            let mut val = op.action.g.bracket(&tu, &tv, &ex).unwrap();
            let mut inner = op.action.rho.apply(&ex, &tu, &basis_vec(h_dim, v)).unwrap();
            vec_add_scaled(
                &mut inner,
                &Rat::one(),
                &op.action.rho.apply(&tv, &ex, &basis_vec(h_dim, u)).unwrap(),
            );
            vec_add_scaled(&mut val, &-Rat::one(), &op.t.apply(&inner).unwrap());
            val[row].clone()
        })
    })
}

/// The coboundary of the descendent algebra with coefficients in the induced
/// representation.
pub fn d_t(op: &RBOperator, f: &Cochain, n: usize) -> Result<Cochain> {
    let desc = descendent_algebra(op)?;
    let rep = induced_rep(op)?;
    d_lie(&desc, &rep, f, n)
}

/// The bottom operator `delta(X)u = T rho(X) u - [X, Tu]`, for `X` given by
/// coefficients over the canonical pair basis of `g ^ g`.  For a verified
/// operator its image consists of 1-cocycles of the descendent algebra.
pub fn delta_1(op: &RBOperator, x_wedge: &[Rat]) -> Result<Cochain> {
    let g_dim = op.action.g.dim();
    let h_dim = op.action.h.dim();
    if x_wedge.len() != pair_count(g_dim) {
        return Err(Error::Dim(
            "wedge element has wrong number of pair coefficients".into(),
        ));
    }
    let pair_list: Vec<(usize, usize)> = pairs(g_dim).collect();
    Cochain::from_fn(0, h_dim, g_dim, |_, u| {
        let rho_x_u = op
            .action
            .rho
            .apply_wedge(x_wedge, &basis_vec(h_dim, u))
            .unwrap();
        let mut out = op.t.apply(&rho_x_u).unwrap();
        let tu = op.t.apply_basis(u);
        for (p, c) in x_wedge.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b) = pair_list[p];
            let br = op
                .action
                .g
                .bracket(&basis_vec(g_dim, a), &basis_vec(g_dim, b), &tu)
                .unwrap();
            vec_add_scaled(&mut out, &-c.clone(), &br);
        }
        out
    })
}

/// Coordinates of a cochain in the canonical basis: keys in lexicographic
/// order (pair slots, then the final index), target coordinate fastest.
pub fn cochain_coords(f: &Cochain) -> Vec<Rat> {
    let mut out = Vec::new();
    for (slots, last) in cochain_keys(f.degree(), f.src_dim()) {
        out.extend_from_slice(f.value(&slots, last));
    }
    out
}

/// Rebuilds a cochain from canonical coordinates.
pub fn cochain_from_coords(
    degree: usize,
    src_dim: usize,
    tgt_dim: usize,
    coords: &[Rat],
) -> Result<Cochain> {
    let keys = cochain_keys(degree, src_dim);
    if coords.len() != keys.len() * tgt_dim {
        return Err(Error::Dim("coordinate vector of wrong length".into()));
    }
    let mut pos = 0;
    let mut c = Cochain::zero(degree, src_dim, tgt_dim);
    for (slots, last) in keys {
        c.set_value(&slots, last, coords[pos..pos + tgt_dim].to_vec())?;
        pos += tgt_dim;
    }
    Ok(c)
}

/// Dimension of the `n`-th cochain space of the operator complex:
/// `g ^ g` at the bottom, maps out of `h`-cochains above it.
fn rb_space_dim(op: &RBOperator, n: usize) -> usize {
    let g_dim = op.action.g.dim();
    let h_dim = op.action.h.dim();
    if n == 1 {
        pair_count(g_dim)
    } else {
        pair_count(h_dim).pow((n - 2) as u32) * h_dim * g_dim
    }
}

/// The operator cochain complex through `max_degree`: slice `n` carries the
/// boundary `C^n -> C^(n+1)`, with `C^1 = g ^ g` mapped by `delta` and
/// `C^n` for `n >= 2` the `(n-1)`-cochains of the descendent algebra mapped
/// by `d_T`.  Consecutive boundaries are verified to compose to zero.
pub fn rb_complex(op: &RBOperator, max_degree: usize) -> Result<Vec<ComplexSlice>> {
    let rb = check_rb(op)?;
    if !rb.passed {
        return Err(Error::Input(format!(
            "cochain complex of an unverified operator (witness {:?})",
            rb.witness
        )));
    }
    if max_degree == 0 || max_degree > 4 {
        return Err(Error::Input(
            "complex degrees must lie between 1 and 4".into(),
        ));
    }
    let g_dim = op.action.g.dim();
    let h_dim = op.action.h.dim();
    let desc = descendent_algebra(op)?;
    let rep = induced_rep(op)?;
    let mut slices = Vec::with_capacity(max_degree);
    for n in 1..=max_degree {
        let cols = rb_space_dim(op, n);
        let rows = rb_space_dim(op, n + 1);
        let mut m = Matrix::zeros(rows, cols);
        for col in 0..cols {
            let image = if n == 1 {
                let mut x = zero_vec(pair_count(g_dim));
                x[col] = Rat::one();
                delta_1(op, &x)?
            } else {
                let mut coords = zero_vec(cols);
                coords[col] = Rat::one();
                let f = cochain_from_coords(n - 2, h_dim, g_dim, &coords)?;
                d_lie(&desc, &rep, &f, n - 1)?
            };
            for (row, v) in cochain_coords(&image).into_iter().enumerate() {
                m.set(row, col, v);
            }
        }
        slices.push(ComplexSlice {
            degree: n,
            cochain_space_dim: cols,
            boundary_matrix: m,
        });
    }
    for w in slices.windows(2) {
        if !w[1]
            .boundary_matrix
            .mul_mat(&w[0].boundary_matrix)?
            .is_zero()
        {
            return Err(Error::Logic(format!(
                "boundary maps at degrees {} and {} do not compose to zero",
                w[0].degree, w[1].degree
            )));
        }
    }
    Ok(slices)
}

/// `(dim Z^n, dim B^n, dim H^n)` of the operator complex: cocycles are the
/// kernel of the `n`-th boundary, coboundaries the image of the previous one
/// (none below the bottom), and `H = Z - B`.
pub fn cohomology_dims(op: &RBOperator, n: usize) -> Result<(usize, usize, usize)> {
    if n == 0 {
        return Err(Error::Input("cohomology degrees start at 1".into()));
    }
    let slices = rb_complex(op, n)?;
    let z = slices[n - 1].cochain_space_dim - rank(&slices[n - 1].boundary_matrix);
    let b = if n == 1 {
        0
    } else {
        rank(&slices[n - 2].boundary_matrix)
    };
    Ok((z, b, z - b))
}

/// Whether `T + t t_frak` satisfies the operator identity modulo `t^2`:
/// the coefficient of `t` in the expanded identity,
///
/// ```text
/// [Tfu,Tv,Tw] + [Tu,Tfv,Tw] + [Tu,Tv,Tfw]
///   = T( rho(Tfw,Tu)v + rho(Tv,Tfw)u + rho(Tfu,Tv)w
///       + rho(Tw,Tfu)v + rho(Tfv,Tw)u + rho(Tu,Tfv)w )
///   + Tf( rho(Tu,Tv)w + rho(Tv,Tw)u + rho(Tw,Tu)v + lambda [u,v,w] ),
/// ```
///
/// checked on all increasing basis triples (both sides are totally skew).
pub fn generates_infinitesimal_deformation(
    op: &RBOperator,
    t_frak: &LinearMap,
) -> Result<Verification> {
    let rb = check_rb(op)?;
    if !rb.passed {
        return Err(Error::Input(format!(
            "deformation of an unverified operator (witness {:?})",
            rb.witness
        )));
    }
    check_deformation_shape(op, t_frak)?;
    let h_dim = op.action.h.dim();
    let rho = &op.action.rho;
    let mut checked = 0;
    for (u, v, w) in triples(h_dim) {
        checked += 1;
        let (tu, tv, tw) = (
            op.t.apply_basis(u),
            op.t.apply_basis(v),
            op.t.apply_basis(w),
        );
        let (fu, fv, fw) = (
            t_frak.apply_basis(u),
            t_frak.apply_basis(v),
            t_frak.apply_basis(w),
        );
        let mut lhs = op.action.g.bracket(&fu, &tv, &tw)?;
        vec_add_scaled(&mut lhs, &Rat::one(), &op.action.g.bracket(&tu, &fv, &tw)?);
        vec_add_scaled(&mut lhs, &Rat::one(), &op.action.g.bracket(&tu, &tv, &fw)?);

        let (eu, ev, ew) = (
            basis_vec(h_dim, u),
            basis_vec(h_dim, v),
            basis_vec(h_dim, w),
        );
        let mut inner = rho.apply(&fw, &tu, &ev)?;
        vec_add_scaled(&mut inner, &Rat::one(), &rho.apply(&tv, &fw, &eu)?);
        vec_add_scaled(&mut inner, &Rat::one(), &rho.apply(&fu, &tv, &ew)?);
        vec_add_scaled(&mut inner, &Rat::one(), &rho.apply(&tw, &fu, &ev)?);
        vec_add_scaled(&mut inner, &Rat::one(), &rho.apply(&fv, &tw, &eu)?);
        vec_add_scaled(&mut inner, &Rat::one(), &rho.apply(&tu, &fv, &ew)?);
        let mut rhs = op.t.apply(&inner)?;
        let desc = descendent_bracket_basis(op, u, v, w)?;
        vec_add_scaled(&mut rhs, &Rat::one(), &t_frak.apply(&desc)?);

        if !vec_is_zero(&vec_sub(&lhs, &rhs)) {
            return Ok(Verification::fail(
                checked,
                Witness::new("linearized operator identity", vec![u, v, w], &lhs, &rhs),
            ));
        }
    }
    Ok(Verification::pass(checked))
}

fn check_deformation_shape(op: &RBOperator, t_frak: &LinearMap) -> Result<()> {
    if t_frak.source_dim() != op.t.source_dim() || t_frak.target_dim() != op.t.target_dim() {
        return Err(Error::Dim("deformation direction of wrong shape".into()));
    }
    Ok(())
}

/// Classifies a candidate deformation direction: is it a 2-cocycle of the
/// operator complex (checked both through the linearized identity and
/// through `d_T`, which must agree), and if so, is its class trivial, i.e.
/// is it `delta(X)` for some `X` in `g ^ g`?
pub fn classify_deformation(op: &RBOperator, t_frak: &LinearMap) -> Result<DeformationVerdict> {
    let residual = generates_infinitesimal_deformation(op, t_frak)?;
    check_deformation_shape(op, t_frak)?;
    let cocycle_via_dt = d_t(op, &Cochain::from_linear_map(t_frak), 1)?.is_zero();
    if residual.passed != cocycle_via_dt {
        return Err(Error::Logic(
            "linearized identity and coboundary disagree on a 2-cocycle".into(),
        ));
    }

    let slices = rb_complex(op, 1)?;
    let target = cochain_coords(&Cochain::from_linear_map(t_frak));
    let witness_x = solve(&slices[0].boundary_matrix, &target)?;
    if let Some(x) = &witness_x {
        let realized = delta_1(op, x)?;
        if cochain_coords(&realized) != target {
            return Err(Error::Logic("solver returned a non-witness".into()));
        }
    }
    Ok(DeformationVerdict {
        is_cocycle: residual.passed,
        cohomology_class_trivial: witness_x.is_some(),
        witness_x,
    })
}

/// The residual conditions for `(Id + t ad_X, Id + t rho(X))` to be an
/// operator homomorphism modulo `t^2`, beyond the cohomological identity:
/// `ad_X` must be a derivation of `g`, `rho(X)` a derivation of `h`, and the
/// pair must intertwine the action to first order,
/// `rho(X) rho(x,y) = rho(ad_X x, y) + rho(x, ad_X y) + rho(x,y) rho(X)`.
pub fn deformation_equivalence_side_conditions(
    op: &RBOperator,
    x_wedge: &[Rat],
) -> Result<Verification> {
    let g = &op.action.g;
    let h = &op.action.h;
    let rho = &op.action.rho;
    let g_dim = g.dim();
    let h_dim = h.dim();
    if x_wedge.len() != pair_count(g_dim) {
        return Err(Error::Dim(
            "wedge element has wrong number of pair coefficients".into(),
        ));
    }
    let pair_list: Vec<(usize, usize)> = pairs(g_dim).collect();
    let ad_x = |v: &[Rat]| -> Result<Vec<Rat>> {
        let mut out = zero_vec(g_dim);
        for (p, c) in x_wedge.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b) = pair_list[p];
            let br = g.bracket(&basis_vec(g_dim, a), &basis_vec(g_dim, b), v)?;
            vec_add_scaled(&mut out, c, &br);
        }
        Ok(out)
    };
    let rho_x = |u: &[Rat]| -> Result<Vec<Rat>> { rho.apply_wedge(x_wedge, u) };

    let mut checked = 0;
    // ad_X is a derivation of the bracket of g.
    for (i, j, k) in triples(g_dim) {
        checked += 1;
        let (ei, ej, ek) = (
            basis_vec(g_dim, i),
            basis_vec(g_dim, j),
            basis_vec(g_dim, k),
        );
        let lhs = ad_x(&g.bracket(&ei, &ej, &ek)?)?;
        let mut rhs = g.bracket(&ad_x(&ei)?, &ej, &ek)?;
        vec_add_scaled(&mut rhs, &Rat::one(), &g.bracket(&ei, &ad_x(&ej)?, &ek)?);
        vec_add_scaled(&mut rhs, &Rat::one(), &g.bracket(&ei, &ej, &ad_x(&ek)?)?);
        if !vec_is_zero(&vec_sub(&lhs, &rhs)) {
            return Ok(Verification::fail(
                checked,
                Witness::new(
                    "wedge element must act as a derivation of g",
                    vec![i, j, k],
                    &lhs,
                    &rhs,
                ),
            ));
        }
    }
    // rho(X) is a derivation of the bracket of h.
    for (i, j, k) in triples(h_dim) {
        checked += 1;
        let (ei, ej, ek) = (
            basis_vec(h_dim, i),
            basis_vec(h_dim, j),
            basis_vec(h_dim, k),
        );
        let lhs = rho_x(&h.bracket(&ei, &ej, &ek)?)?;
        let mut rhs = h.bracket(&rho_x(&ei)?, &ej, &ek)?;
        vec_add_scaled(&mut rhs, &Rat::one(), &h.bracket(&ei, &rho_x(&ej)?, &ek)?);
        vec_add_scaled(&mut rhs, &Rat::one(), &h.bracket(&ei, &ej, &rho_x(&ek)?)?);
        if !vec_is_zero(&vec_sub(&lhs, &rhs)) {
            return Ok(Verification::fail(
                checked,
                Witness::new(
                    "wedge element must act as a derivation of h",
                    vec![i, j, k],
                    &lhs,
                    &rhs,
                ),
            ));
        }
    }
    // First-order intertwining of the action.
    for (x, y) in pairs(g_dim) {
        for u in 0..h_dim {
            checked += 1;
            let (ex, ey) = (basis_vec(g_dim, x), basis_vec(g_dim, y));
            let eu = basis_vec(h_dim, u);
            let lhs = rho_x(&rho.apply(&ex, &ey, &eu)?)?;
            let mut rhs = rho.apply(&ad_x(&ex)?, &ey, &eu)?;
            vec_add_scaled(&mut rhs, &Rat::one(), &rho.apply(&ex, &ad_x(&ey)?, &eu)?);
            vec_add_scaled(&mut rhs, &Rat::one(), &rho.apply(&ex, &ey, &rho_x(&eu)?)?);
            if !vec_is_zero(&vec_sub(&lhs, &rhs)) {
                return Ok(Verification::fail(
                    checked,
                    Witness::new(
                        "wedge element must intertwine the action to first order",
                        vec![x, y, u],
                        &lhs,
                        &rhs,
                    ),
                ));
            }
        }
    }
    Ok(Verification::pass(checked))
}

/// Kernel vectors of the `n`-th boundary that are not boundaries themselves;
/// empty exactly when `H^n = 0`.
pub fn nontrivial_cocycles(op: &RBOperator, n: usize) -> Result<Vec<Vec<Rat>>> {
    if n == 0 {
        return Err(Error::Input("cohomology degrees start at 1".into()));
    }
    let slices = rb_complex(op, n)?;
    let kernel = kernel_basis(&slices[n - 1].boundary_matrix);
    if n == 1 {
        return Ok(kernel);
    }
    let prev = &slices[n - 2].boundary_matrix;
    Ok(kernel
        .into_iter()
        .filter(|v| matches!(solve(prev, v), Ok(None)))
        .collect())
}
