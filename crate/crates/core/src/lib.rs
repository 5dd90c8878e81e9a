//! Left-invariant Lorentzian geometry on `Aff₊(ℝ)`, the group of proper
//! affine maps `a ↦ y·a + x` of the line.
//!
//! Every left-invariant Lorentzian structure on this group is fixed by a
//! matrix `A` with positive determinant and has constant curvature
//! `K = (c² − a²)/det²`: anti-de Sitter for `K < 0`, de Sitter for `K > 0`,
//! flat for `K = 0`. The crate computes, in closed form,
//!
//! * the causal future of the identity and its strata ([`causal`]),
//! * timelike and lightlike geodesics with their maximal domains ([`geodesics`]),
//! * the inverse exponential map, the Lorentzian distance and spheres ([`synthesis`]),
//! * Killing fields and, for flat structures, an isometric embedding into
//!   Minkowski space ([`isometry`]),
//!
//! and checks each closed form against independent numerics ([`oracles`],
//! [`verify`]).
//!
//! ```
//! use aff_lorentz::{distance, GroupPoint, LorentzDistance, Preset};
//!
//! let spec = Preset::P1.problem(); // K = -1
//! let d = distance(&spec, &GroupPoint::IDENTITY, &GroupPoint::new(4.0, 2.0)?);
//! assert_eq!(d.distance, LorentzDistance::Infinite);
//! # Ok::<(), aff_lorentz::Error>(())
//! ```

pub mod causal;
pub mod cli;
pub mod connection;
pub mod error;
pub mod geodesics;
pub mod group;
pub mod isometry;
pub mod oracles;
pub mod plot;
pub mod problem;
pub mod synthesis;
pub mod verify;

pub use causal::{classify, classify_from, in_causal_future, in_causal_past, is_globally_hyperbolic, CausalClass, LightBranch};
pub use error::{Error, Result};
pub use geodesics::{completeness_report, domain_bounds, exp_map, lightlike_curve, psi_of_t, Geodesic, NullDirection};
pub use group::{group_inv, group_mul, left_translate, lie_exp, lie_log, GroupPoint, TangentVector};
pub use problem::{make_problem, CurvatureSign, Preset, Problem, ProblemMatrix};
pub use synthesis::{distance, distance_from_identity, exp_inverse, sphere, DistanceReport, LorentzDistance, SphereArc};
