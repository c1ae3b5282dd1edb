//! Operators as Maurer-Cartan elements.
//!
//! The graded commutator of multilinear maps (the Nijenhuis-Richardson
//! bracket) turns skew cochains on a space into a graded Lie algebra.  Two
//! classical facts become executable here:
//!
//! 1. a skew ternary table `mu` is a 3-Lie bracket iff `[mu, mu] = 0`;
//! 2. over the square-zero element `Delta = pi + rho + lambda mu` on
//!    `g (+) h`, the derived brackets `l1 = P [Delta, .]` and
//!    `l3 = P [[[Delta, .], .], .]` control operators: `T` is a weighted
//!    operator iff `l1(T) + 1/6 l3(T,T,T) = 0`.
//!
//! Run with: `cargo run --example maurer_cartan`

use trilie::linalg::{rint, vec_scale};
use trilie::prelude::*;

fn main() -> Result<()> {
    // (1) The bracket-as-cochain criterion.
    let g = trilie::files::load_algebra("paper-ex-4d")?;
    assert!(is_3lie_via_mc(&g));
    let bad = ThreeLieAlgebra::from_brackets(
        4,
        &[
            ((0, 1, 2), vec![(3, rint(1))]),
            ((0, 1, 3), vec![(2, rint(1))]),
            ((0, 2, 3), vec![(0, rint(1))]),
        ],
    )?;
    assert!(!is_3lie_via_mc(&bad));
    assert!(!bad.check_fundamental_identity().passed);
    println!("[mu,mu] = 0 agrees with the fundamental identity on both tables");

    // (2) Derived brackets over the semidirect element.
    let op = trilie::files::load_operator("paper-ex-4d-projection")?;
    let delta = build_delta(&op.action, &op.lambda)?;

    // The square-zero property that makes everything below work.
    let mu_big = delta.component(1).expect("semidirect bracket present");
    assert!(nr_bracket(mu_big, mu_big)?.is_zero());
    println!("[Delta, Delta] = 0 on the 8-dimensional product");

    // l1 is the linear piece: on any map S: h -> g it evaluates to
    // -lambda S[u,v,w]_h, i.e. minus the weight times S composed with the
    // bracket of h.
    let s = Cochain::from_linear_map(&op.t);
    let l1 = derived_l1(&delta, &s)?;
    let h = &op.action.h;
    let pair_list: Vec<(usize, usize)> = trilie::index::pairs(4).collect();
    for (slots, last) in trilie::linfty::cochain_keys(1, 4) {
        let (u, v) = pair_list[slots[0]];
        let expected = vec_scale(
            &-op.lambda.clone(),
            &op.t.apply(&h.bracket_basis(u, v, last))?,
        );
        assert_eq!(l1.value(&slots, last), &expected[..]);
    }
    println!("l1(T) = -lambda T [.,.,.]_h confirmed entrywise");

    // The cubic piece vanishes against itself in the right combination
    // exactly when T is an operator.
    assert!(mc_check(&op)?);
    println!("Maurer-Cartan equation holds for the projection operator");

    // And it fails in lockstep with the direct check when T is corrupted.
    let bad_t = LinearMap::new(Matrix::from_int_rows(&[
        &[0, 0, 0, 0],
        &[0, 1, 0, 0],
        &[0, 0, 1, 0],
        &[0, 0, 0, 1],
    ]));
    let bad_op = RBOperator::new(op.action.clone(), bad_t, rint(1))?;
    assert!(!mc_check(&bad_op)?);
    assert!(!check_rb(&bad_op)?.passed);
    println!("corrupted operator fails both the direct identity and the MC equation");
    Ok(())
}
