//! Exact computation of the rank of lattice Delaunay polytopes.
//!
//! A Delaunay polytope `P` is described by the rational coordinates of its
//! vertices in some reference basis, optionally together with the Gram matrix
//! of that basis. Its rank is the number of independent deformation parameters
//! of the quadratic form that keep the affine type of `P` fixed.
//!
//! Two independent routes are provided:
//!
//! * [`rank::rank_of`] builds one linear constraint on the Gram parameters
//!   `b_ij = <b_i, b_j>` per integral affine dependency of the vertex set and
//!   returns the dimension of the solution space.
//! * [`hyp::face_dimension`] works directly with the squared distances between
//!   vertices and returns the dimension of the solution space of the
//!   dependency/distance system, i.e. the dimension of the face of the
//!   hypermetric cone containing the distance vector.
//!
//! Both agree on every polytope; the test suites use one as the oracle of the
//! other. All arithmetic is exact (arbitrary-precision integers and
//! rationals).

pub mod basis;
pub mod deps;
pub mod error;
pub mod exact;
pub mod families;
pub mod hyp;
pub mod model;
pub mod rank;

pub use error::{Error, Result};
pub use exact::{IntMatrix, Rational, RationalMatrix};
pub use model::{Circumdata, DistanceMatrix, GramForm, Polytope};
