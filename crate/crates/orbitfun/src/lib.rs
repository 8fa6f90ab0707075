//! Discrete C- and S-orbit-function transforms on the fundamental domains of
//! the compact simple Lie groups.
//!
//! The crate covers, for every type and rank:
//!
//! - structural data ([`algebra`]): Cartan matrices, marks, dual marks,
//!   extended Coxeter-Dynkin diagrams, Weyl orders, lattice pairings and the
//!   volume of the fundamental domain F;
//! - the grids F_M and Λ_M ([`grids`]): enumeration, exact point counts,
//!   interiors, gcd stratification and the residue-class matrices R;
//! - Weyl machinery ([`weyl`]): reflections, orbits with determinant signs,
//!   torus canonical forms and stabilizer orders from extended-diagram
//!   subgraphs;
//! - orbit functions ([`orbitfn`]): symmetric Φ_λ and antisymmetric φ_λ,
//!   evaluated with exact integer phases on grid points and in double
//!   precision anywhere else;
//! - discrete transforms ([`transform`]): inner products, orthogonality
//!   verification, forward C/S-transforms and interpolation;
//! - text formats ([`formats`]) used by the `orbitfun` CLI.
//!
//! All exact quantities (counts, Weyl orders, stabilizers, phases) are
//! computed in integer or rational arithmetic; floating point only enters
//! where function values do. With the default `parallel` feature the
//! evaluation-matrix, Gram and transform loops run on rayon; disabling it
//! yields a dependency-free sequential build with identical results.

pub mod algebra;
pub mod diagram;
pub mod error;
pub mod formats;
pub mod grids;
pub mod orbitfn;
pub mod transform;
pub mod weyl;

mod par;
mod rtables;

pub use algebra::{AlgebraData, LieType, Series};
pub use error::{Error, Result};
pub use grids::{GridPoint, WeightPoint};
pub use orbitfn::RealPoint;
pub use transform::{CoefficientSet, OrthogonalityReport, SampleSet, TransformKind, TransformPlan};

/// Default bound on |W| for operations that enumerate Weyl orbits. E7 and
/// below fit; E8 (|W| ≈ 7·10⁸) is refused unless the caller raises the cap.
pub const DEFAULT_ORBIT_CAP: u64 = 10_000_000;
