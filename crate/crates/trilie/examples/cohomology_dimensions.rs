//! The cochain complex of an operator and its cohomology dimensions.
//!
//! A verified weighted operator `T: h -> g` gets a cochain complex of its
//! own: degree 1 is the wedge square `g ^ g`, mapped down by
//! `delta(X)u = T rho(X)u - [X, Tu]`, and higher degrees are the cochain
//! spaces of the descendent algebra on `h`, mapped by the coboundary `d_T`
//! of the induced representation on `g`.  The numbers `dim Z`, `dim B`,
//! `dim H` of this complex count infinitesimal deformations of `T` up to
//! equivalence.
//!
//! Run with: `cargo run --example cohomology_dimensions` (degree 3 does
//! exact rank computations on a 576 x 96 matrix; allow a few seconds).

use num::Zero;
use trilie::index::pairs;
use trilie::linalg::{basis_vec, rint, vec_scale};
use trilie::prelude::*;

fn main() -> Result<()> {
    let op = trilie::files::load_operator("paper-ex-4d-projection")?;
    let g_dim = op.action.g.dim();

    // The induced representation of the descendent algebra: here a single
    // nonzero generator, rho(e3,e4) sending e2 to e1.
    let rep = induced_rep(&op)?;
    let pair_list: Vec<(usize, usize)> = pairs(g_dim).collect();
    for &(a, b) in &pair_list {
        let m = rep.mat_at(a, b);
        if a == 2 && b == 3 {
            let mut expected = Matrix::zeros(g_dim, g_dim);
            expected.set(0, 1, rint(1));
            assert_eq!(m, &expected);
        } else {
            assert!(m.is_zero());
        }
    }
    println!("induced representation: only rho(e3,e4) acts, sending e2 to e1");

    // The bottom differential delta, pair by pair.  Only the wedges that
    // pair e2 with a T-image direction survive.
    for (p, &(a, b)) in pair_list.iter().enumerate() {
        let mut x = vec![Rat::zero(); pair_list.len()];
        x[p] = rint(1);
        let image = delta_1(&op, &x)?;
        for u in 0..g_dim {
            let v = image.value(&[], u);
            let expected: Vec<Rat> = match (a, b, u) {
                (1, 2, 3) => vec_scale(&rint(-1), &basis_vec(g_dim, 0)),
                (1, 3, 2) => basis_vec(g_dim, 0),
                _ => vec![Rat::zero(); g_dim],
            };
            assert_eq!(v, &expected[..]);
        }
    }
    println!("delta(e2^e3): e4 -> -e1 and delta(e2^e4): e3 -> e1; all else zero");

    // The complex itself: space dimensions 6, 16, 96, 576 and boundary
    // matrices that compose to zero (verified during construction).
    let slices = rb_complex(&op, 4)?;
    let dims: Vec<usize> = slices.iter().map(|s| s.cochain_space_dim).collect();
    assert_eq!(dims, vec![6, 16, 96, 576]);
    println!("cochain spaces C^1..C^4 have dimensions {dims:?}");

    // Cohomology in each degree.
    for n in 1..=3 {
        let (z, b, h) = cohomology_dims(&op, n)?;
        println!("degree {n}: dim Z = {z}, dim B = {b}, dim H = {h}");
        match n {
            1 => assert_eq!((z, b, h), (4, 0, 4)),
            2 => assert_eq!((z, b, h), (12, 2, 10)),
            _ => {}
        }
    }

    // Degrees above the computed window are refused rather than silently
    // truncated.
    assert!(matches!(rb_complex(&op, 5), Err(Error::Input(_))));
    println!("degrees above 4 are rejected as input errors");
    Ok(())
}
