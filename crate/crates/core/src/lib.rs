//! Exact computations around Gauss-Bonnet and Poincaré-Hopf type formulas
//! for complements of divisors in complex projective space.
//!
//! Everything is computed over the rationals: polynomial arithmetic
//! ([`poly`]), Gröbner and local standard bases ([`gb`]), Chern classes in
//! the Chow ring of `P^n` ([`chow`]), Milnor numbers ([`milnor`]), indices of
//! vector fields ([`indices`]) and the assembled identities ([`theorems`]).

pub mod chow;
pub mod error;
pub mod gb;
pub mod indices;
pub mod milnor;
pub mod poly;
pub mod theorems;

pub use chow::ChowClass;
pub use error::{Error, ErrorKind, Result};
pub use gb::{BasisResult, Matrix, MonOrder, QuotientAlgebra};
pub use indices::VectorFieldPn;
pub use milnor::{Chart, MilnorReport, SingularPointCert};
pub use poly::{parse_poly, HomogPoly, Monomial, Poly, Rat, Vars};
pub use theorems::{Decomposition, DivisorOnPn, Options, ProblemSpec, VerificationReport};
