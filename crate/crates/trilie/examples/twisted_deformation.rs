//! Twisting by an operator and deciding which directions deform it.
//!
//! Once `T` satisfies the Maurer-Cartan equation, the controlling algebra
//! can be twisted by `T`.  The twisted brackets `l1^T, l2^T, l3^T` answer a
//! concrete question: a second map `T'` makes `T + T'` an operator of the
//! same weight exactly when `T'` satisfies the twisted Maurer-Cartan
//! equation
//!
//! ```text
//! l1^T(T') + 1/2 l2^T(T',T') + 1/6 l3^T(T',T',T') = 0.
//! ```
//!
//! Run with: `cargo run --example twisted_deformation`

use trilie::linalg::rint;
use trilie::prelude::*;

/// The direct (untwisted) answer: is `t` an operator for this action/weight?
fn direct(op: &RBOperator, t: LinearMap) -> Result<bool> {
    let candidate = RBOperator::new(op.action.clone(), t, op.lambda.clone())?;
    Ok(check_rb(&candidate)?.passed)
}

fn shifted(op: &RBOperator, t_prime: &LinearMap) -> LinearMap {
    LinearMap::new(op.t.matrix().add(t_prime.matrix()).expect("same shape"))
}

fn main() -> Result<()> {
    let op = trilie::files::load_operator("paper-ex-4d-projection")?;

    // T' = 0 trivially deforms T into itself.
    let zero = LinearMap::zero(4, 4);
    assert!(mc_twisted_check(&op, &zero)?);
    println!("T' = 0 satisfies the twisted equation (T + 0 = T)");

    // T' = -2T gives T + T' = -T, which is again an operator here.
    let minus_two_t = LinearMap::new(op.t.matrix().scale(&rint(-2)));
    assert!(mc_twisted_check(&op, &minus_two_t)?);
    assert!(direct(&op, shifted(&op, &minus_two_t))?);
    println!("T' = -2T satisfies it too, matching the direct check of -T");

    // A direction that breaks the identity: add the unit matrix.
    let id = LinearMap::identity(4);
    assert!(!mc_twisted_check(&op, &id)?);
    assert!(!direct(&op, shifted(&op, &id))?);
    println!("T' = id fails, matching the direct check of T + id");

    // The equivalence is not an accident of these three directions; sweep
    // every 0/1 diagonal direction and compare both answers.
    let mut deformations = 0_u32;
    for mask in 0_u32..16 {
        let mut m = Matrix::zeros(4, 4);
        for i in 0..4 {
            if mask & (1 << i) != 0 {
                m.set(i, i, rint(1));
            }
        }
        let t_prime = LinearMap::new(m);
        let twisted = mc_twisted_check(&op, &t_prime)?;
        assert_eq!(twisted, direct(&op, shifted(&op, &t_prime))?);
        if twisted {
            deformations += 1;
        }
    }
    println!(
        "twisted equation agreed with the direct identity on all 16 diagonal \
         directions ({deformations} of them deform T)"
    );

    // Twisting demands a genuine operator: an arbitrary map is rejected
    // up front rather than producing meaningless brackets.
    let not_op = RBOperator::new(op.action.clone(), LinearMap::identity(4), rint(1))?;
    assert!(matches!(
        mc_twisted_check(&not_op, &zero),
        Err(Error::Input(_))
    ));
    println!("twisting by a non-operator is rejected as input error");
    Ok(())
}
