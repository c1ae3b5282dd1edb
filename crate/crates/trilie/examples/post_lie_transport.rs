//! From an operator to a 3-post-Lie algebra and back.
//!
//! A verified weighted operator `T: h -> g` induces a 3-post-Lie algebra on
//! `h`: the ternary product is `{u,v,w} = rho(Tu,Tv)w` and the bracket is
//! the weighted one `lambda [.,.,.]_h`.  The subadjacent bracket
//!
//! ```text
//! <<u,v,w>> = {u,v,w} + {v,w,u} + {w,u,v} + [u,v,w]
//! ```
//!
//! recovers exactly the operator's descendent algebra, the ternary product
//! becomes an action of the subadjacent algebra on the original one, and the
//! identity map is a weight-1 operator over that action — so the transport
//! round-trips.
//!
//! Run with: `cargo run --example post_lie_transport`

use trilie::algebra::LinearMap;
use trilie::linalg::{rat, rint};
use trilie::post_lie::{is_post_lie_homomorphism, left_action};
use trilie::prelude::*;

fn main() -> Result<()> {
    for lambda in [rint(1), rint(-1), rat(2, 3)] {
        let op = trilie::files::load_operator("paper-ex-4d-projection")?;
        let op = RBOperator::new(op.action, op.t, lambda.clone())?;

        // Transport: the axioms are re-verified on the way out.
        let p = post_lie_from_rb(&op)?;
        let axioms = check_post_lie(&p)?;
        assert!(axioms.passed);

        // Subadjacent algebra == descendent algebra, as identical tables.
        let sub = subadjacent(&p)?;
        let desc = descendent_algebra(&op)?;
        assert!(sub.same_structure(&desc));

        // {.,.,.} is an action of the subadjacent algebra on the original.
        let act = left_action(&p)?;
        assert!(check_action(&act)?.passed);

        // The identity map is a weight-1 operator over that action.
        assert!(identity_is_rb(&p)?);

        println!(
            "weight {lambda}: transport verified (axioms on {} instances, subadjacent = descendent)",
            axioms.checked
        );
    }

    // Homomorphisms transport too: a map respecting both products also
    // respects the subadjacent brackets.  diag(8,2,2,2) works because the
    // only structure constant needs psi(e1) = psi(e2)psi(e3)psi(e4) -> 8 = 2*2*2.
    let op = trilie::files::load_operator("paper-ex-4d-projection")?;
    let p = post_lie_from_rb(&op)?;
    let psi = LinearMap::new(Matrix::from_int_rows(&[
        &[8, 0, 0, 0],
        &[0, 2, 0, 0],
        &[0, 0, 2, 0],
        &[0, 0, 0, 2],
    ]));
    assert!(is_post_lie_homomorphism(&psi, &p, &p)?);
    let sub = subadjacent(&p)?;
    // Check the subadjacent homomorphism property on the one nonzero bracket.
    let lhs = psi.apply(&sub.bracket_basis(1, 2, 3))?;
    let rhs = sub.bracket(
        &psi.apply_basis(1),
        &psi.apply_basis(2),
        &psi.apply_basis(3),
    )?;
    assert_eq!(lhs, rhs);
    println!("diag(8,2,2,2) is a 3-post-Lie endomorphism; transport to subadjacent verified");

    // And a non-example: scaling by 2 everywhere fails (8 != 2*2*2 breaks
    // on the ternary product side at a different rate than the bracket).
    let double = LinearMap::new(Matrix::identity(4).scale(&rint(2)));
    assert!(!is_post_lie_homomorphism(&double, &p, &p)?);
    println!("2*Id correctly rejected as a homomorphism");
    Ok(())
}
