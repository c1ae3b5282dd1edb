//! Exhaustive operator search over a finite entry set.
//!
//! Enumerates every matrix `T: h -> g` with entries from a small set and
//! keeps the ones satisfying the weighted operator identity.  The search is
//! budgeted: it refuses spaces beyond 10^7 candidates instead of silently
//! taking hours.
//!
//! Run with: `cargo run --example operator_search`

use trilie::linalg::{rat_string, rint};
use trilie::prelude::*;

fn main() -> Result<()> {
    let action = trilie::files::load_action("paper-ex-4d-adjoint")?;

    // Diagonal matrices with entries in {0, 1} at weight 1: 16 candidates.
    let found = search_rb(&action, &rint(1), &[rint(0), rint(1)], true)?;
    println!(
        "diagonal search over {{0,1}} at weight 1: {} operators",
        found.len()
    );
    for op in &found {
        let diag: Vec<String> = (0..4)
            .map(|i| rat_string(op.t.matrix().get(i, i)))
            .collect();
        println!("  diag({})", diag.join(", "));
        // Everything the search returns has already passed the identity;
        // re-verify independently anyway.
        assert!(check_rb(op)?.passed);
    }
    // The projection onto span{e3, e4} is among them.
    assert!(found
        .iter()
        .any(|op| (0..4).all(|i| *op.t.matrix().get(i, i) == rint(i64::from(i >= 2)))));

    // The same diagonal search at weight -2 gives a different census: the
    // identity map is an operator of weight -2 (the three action terms
    // contribute 3 [u,v,w] and the weight term subtracts 2 [u,v,w]), but it
    // is not one of weight 1.
    let found_neg = search_rb(&action, &rint(-2), &[rint(0), rint(1)], true)?;
    println!(
        "diagonal search over {{0,1}} at weight -2: {} operators",
        found_neg.len()
    );
    let is_identity = |op: &RBOperator| (0..4).all(|i| *op.t.matrix().get(i, i) == rint(1));
    assert!(found_neg.iter().any(is_identity));
    assert!(!found.iter().any(is_identity));

    // Full (non-diagonal) searches are budget-checked: 2^16 candidates is
    // within budget, 3^16 is not.
    let full = search_rb(&action, &rint(1), &[rint(0), rint(1)], false)?;
    println!(
        "full search over {{0,1}} at weight 1: {} operators among 2^16 candidates",
        full.len()
    );
    assert!(full.len() >= found.len());
    let three: Vec<Rat> = (-1..=1).map(rint).collect();
    assert!(matches!(
        search_rb(&action, &rint(1), &three, false),
        Err(Error::Input(_))
    ));
    println!("3^16-candidate request rejected by the search budget");
    Ok(())
}
