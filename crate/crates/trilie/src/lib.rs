//! Exact computational algebra for 3-Lie algebras, weighted operators on
//! them, and the structures those operators induce.
//!
//! Everything is finite-dimensional over the rationals and every identity is
//! decided exactly: a check either passes after enumerating all basis
//! instances or returns the first counterexample with both sides of the
//! violated equation.  The crate covers:
//!
//! - 3-Lie algebras given by structure constants, with the fundamental
//!   identity as the entry gate ([`algebra`]);
//! - representations, actions, and semidirect products ([`action`]);
//! - relative Rota-Baxter operators of any weight: verification, the graph
//!   criterion, descendent algebras, Nijenhuis lifts, projection operators,
//!   and a budgeted search ([`rota_baxter`]);
//! - 3-post-Lie algebras and the transport of structure to and from
//!   operators ([`post_lie`]);
//! - the controlling graded algebra: the Nijenhuis-Richardson bracket,
//!   derived brackets, Maurer-Cartan checks, and twisting ([`linfty`]);
//! - cohomology of algebras and operators, and the classification of
//!   infinitesimal deformations ([`cohomology`]);
//! - JSON schemas, a loader, and a built-in example catalog ([`files`],
//!   [`catalog`]).
//!
//! The `examples/` directory is the guided tour: each example is a runnable
//! walkthrough of one capability (`cargo run --example fundamental_identity`,
//! `... --example maurer_cartan`, and so on).  The same functionality is
//! scriptable through the `trilie` binary, which consumes the JSON formats
//! documented in [`files`].
//!
//! ```
//! use trilie::prelude::*;
//!
//! // The 4-dimensional algebra with [e2, e3, e4] = e1, its projection
//! // operator onto span{e3, e4}, and the operator's descendent algebra.
//! let g = trilie::files::load_algebra("paper-ex-4d")?;
//! assert!(g.check_fundamental_identity().passed);
//! let op = trilie::files::load_operator("paper-ex-4d-projection")?;
//! assert!(check_rb(&op)?.passed);
//! let descendent = descendent_algebra(&op)?;
//! assert!(descendent.check_fundamental_identity().passed);
//! # Ok::<(), trilie::Error>(())
//! ```

pub mod action;
pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod error;
pub mod files;
pub mod index;
pub mod linalg;
pub mod linfty;
pub mod post_lie;
pub mod report;
pub mod rota_baxter;

pub use error::{Error, Result};

/// The working vocabulary, re-exported for `use trilie::prelude::*`.
pub mod prelude {
    pub use crate::action::{
        check_action, check_representation, semidirect_product, ActionData, PairMap,
    };
    pub use crate::algebra::{LinearMap, ThreeLieAlgebra};
    pub use crate::cohomology::{
        classify_deformation, cohomology_dims, d_lie, d_t, delta_1, induced_rep, rb_complex,
        ComplexSlice, DeformationVerdict,
    };
    pub use crate::error::{Error, Result};
    pub use crate::linalg::{rat, rint, Matrix, Rat, Subspace};
    pub use crate::linfty::{
        build_delta, circ, derived_l1, derived_l3, is_3lie_via_mc, mc_check, mc_twisted_check,
        nr_bracket, Cochain, GradedSum,
    };
    pub use crate::post_lie::{
        check_post_lie, identity_is_rb, left_action, post_lie_from_rb, subadjacent, ThreePostLie,
    };
    pub use crate::report::{Verification, Witness};
    pub use crate::rota_baxter::{
        check_nijenhuis, check_rb, check_rb_via_graph, descendent_algebra, lift_nijenhuis,
        projection_rb, search_rb, RBOperator,
    };
}
