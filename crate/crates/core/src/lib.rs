//! Fibonacci-run and Lucas-run graphs, Fibonacci and Lucas cubes: vertex
//! sets from run-length-constrained languages, induced subcube census,
//! distance cube polynomials and their generating functions.
//!
//! ```
//! use fibrun::{build, census, Family, Method, PolyKind};
//!
//! let g = build(Family::FibonacciRun, 5).unwrap();
//! let d = census::polynomial(&g, PolyKind::DistCube, Method::Oracle).unwrap();
//! assert_eq!(d.to_string(), "1+5q+6q^2+q^3+(5+12q+2q^2)x+(6+q)x^2");
//! ```

pub mod census;
pub mod genfunc;
pub mod graphs;
pub mod polyring;
pub mod words;

pub use census::{Census, CensusError, Method, PolyKind, Subcube};
pub use genfunc::{GfError, GfId, IdentityId, Report};
pub use graphs::{build, build_with, Family, FamilyGraph, GraphError, Limits};
pub use polyring::{MPoly, PolyError, RationalGF, Series, Var};
pub use words::{Alphabet, BitWord, Language, WordError};
