//! Exact intersection calculus on the Néron–Severi lattice of `C × J`,
//! where `C` is a curve of genus `g ≥ 2` and `J` its Jacobian, under the
//! standing assumption that the Picard number of `C × J` is 3.
//!
//! Classes are written `a·α₁ + b·θ₂ + c·Q` with rational coordinates:
//!
//! * `α₁` is the pullback of a degree-one class on `C`,
//! * `θ₂` is the pullback of the theta divisor on `J`,
//! * `Q` is the Poincaré class.
//!
//! The crate is organised bottom-up:
//!
//! * [`ns_lattice`]: coordinates, the top-degree monomial table and the
//!   multilinear intersection form,
//! * [`cones`]: nef / ample / big / pseudo-effective classification,
//! * [`heights`]: heights of points and of the generic curve,
//! * [`minima`]: successive minima over the cone, witnesses and the
//!   audit of Zhang's successive-minima inequalities.
//!
//! Everything is exact; there is no floating point anywhere in the
//! library apart from [`rational::to_decimal`], which only renders.

pub mod cones;
pub mod error;
pub mod heights;
pub mod minima;
pub mod ns_lattice;
pub mod rational;

pub use cones::{boundary_witness, classify, nef_decomposition, ConeVerdict, NefDecomposition, Region, SqrtWitness};
pub use error::{Error, Result};
pub use heights::{
    generic_degree, height_curve, height_point, height_point_with_base, standard_polarization, HeightReport, PointClass,
};
pub use minima::{cone_minimum, grid_oracle, witness_sequence, zhang_audit, MinimaReport, PullbackWitness, ZhangAudit};
pub use ns_lattice::{
    monomial_table, pair_theta_power, pair_theta_power_closed_form, pullback_theta, restrict_to_c_fiber,
    restrict_to_j_fiber, top_intersect, Genus, MonomialTable, NSClass,
};
pub use rational::Rational;
