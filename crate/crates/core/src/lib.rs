//! Exact computations with 1-cycles of the cubical additive higher Chow
//! complex of a point.
//!
//! Curves in `◊₂ = A¹ × (P¹∖{1})²` are given by rational parametrizations
//! `(x(t), t₁(t), t₂(t))` over ℚ. The crate computes their face
//! intersections and boundaries, checks admissibility (proper faces and the
//! modulus-2 condition), evaluates the residue regulator `R₂`, and maps
//! boundaries into `ℚ ⊗ ℚ×`. Star scalings by real cube roots are carried
//! formally through [`radical`].
//!
//! - [`arith`]: rationals, polynomials, rational functions, orders, Laurent
//!   expansions and residues on the projective line
//! - [`radical`]: ℚ-linear combinations of cube roots of rationals
//! - [`cycle`]: parametrized curves, formal cycle sums, the named catalog
//! - [`boundary`]: face points, `∂`, admissibility
//! - [`regulator`]: `R₂`
//! - [`tensor`]: `ℚ ⊗ ℚ×` and the `f`/`g` maps
//! - [`verify`]: the named check registry
//! - [`dsl`]: the cycle-expression language used by the `achow` binary

pub mod arith;
pub mod boundary;
pub mod cli;
pub mod cycle;
pub mod dsl;
pub mod error;
pub mod radical;
pub mod regulator;
pub mod tensor;
pub mod verify;

pub use arith::{Divisor, PointP1, Poly, RatFunc, Rational};
pub use boundary::{boundary, check_admissible, face_points, AdmissibilityReport, ZeroCycle};
pub use cycle::{CycleSum, CycleTerm, ParamCurve};
pub use error::{Error, Result};
pub use radical::{RadMonomial, RadScalar};
pub use regulator::{r2, r2_point, vanishing_shortcuts};
pub use tensor::{cathelineau_tensor, f_map, g_map, TensorElem};
