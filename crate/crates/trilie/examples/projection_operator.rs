//! A projection as a weighted operator, for every weight at once.
//!
//! If `h` is an abelian subalgebra meeting the derived subalgebra trivially
//! and `k` is any complement, the projection `P: g -> h` along `k` satisfies
//!
//! ```text
//! [Pu, Pv, Pw] = P( [Pu,Pv,w] + [Pv,Pw,u] + [Pw,Pu,v] + lambda [u,v,w] )
//! ```
//!
//! over the adjoint action, for every weight.  The operator's descendent
//! bracket `[u,v,w]_P` then deforms the original one: on the example its
//! value at `(e2, e3, e4)` is `(1 + lambda) e1`.
//!
//! Run with: `cargo run --example projection_operator`

use trilie::linalg::{basis_vec, rat, rint, vec_scale};
use trilie::prelude::*;

fn main() -> Result<()> {
    let g = trilie::files::load_algebra("paper-ex-4d")?;
    let h = Subspace::from_span(4, &[basis_vec(4, 2), basis_vec(4, 3)])?;
    let k = Subspace::from_span(4, &[basis_vec(4, 0), basis_vec(4, 1)])?;

    for lambda in [rint(0), rint(1), rint(-1), rat(2, 3)] {
        let op = projection_rb(&g, &h, &k, lambda.clone())?;

        // Direct verification of the defining identity on basis triples.
        let direct = check_rb(&op)?;
        assert!(direct.passed);

        // Equivalent criterion: the graph {(Tu, u)} is a subalgebra of the
        // weighted semidirect product.
        assert!(check_rb_via_graph(&op)?);

        // Equivalent criterion: the lifted matrix [[Id, T], [0, 0]] is a
        // Nijenhuis operator on the semidirect product (here: for weight 1).
        if lambda == rint(1) {
            let semi = semidirect_product(&op.action, &lambda)?;
            let lift = lift_nijenhuis(&op);
            assert!(check_nijenhuis(&semi, &lift)?);
            println!("weight 1: lifted matrix is a Nijenhuis operator on the product");
        }

        // The descendent bracket shifts the structure constant by the weight.
        let desc = descendent_algebra(&op)?;
        let value = desc.bracket_basis(1, 2, 3);
        let expected = vec_scale(&(rint(1) + &lambda), &basis_vec(4, 0));
        assert_eq!(value, expected);
        println!(
            "weight {lambda}: operator verified, descendent [e2,e3,e4] = ({}) e1",
            rint(1) + &lambda
        );
    }

    // The projection refuses invalid data: a non-abelian "h" is rejected
    // before any operator is built.
    let whole = Subspace::from_span(4, &[basis_vec(4, 1), basis_vec(4, 2), basis_vec(4, 3)])?;
    let complement = Subspace::from_span(4, &[basis_vec(4, 0)])?;
    assert!(projection_rb(&g, &whole, &complement, rint(1)).is_err());
    println!("non-abelian subspace rejected as expected");

    // Weight-1 instance from the catalog agrees with the construction.
    let shipped = trilie::files::load_operator("paper-ex-4d-projection")?;
    let built = projection_rb(&g, &h, &k, rint(1))?;
    assert_eq!(shipped.t.matrix(), built.t.matrix());
    println!("catalog operator matches projection_rb output");
    Ok(())
}
