//! Exact computation with hyperbolic (real-rooted) polynomials.
//!
//! Everything verdict-bearing runs over arbitrary-precision rationals: no
//! floating point ever decides a result. The crate provides
//!
//! * dense univariate polynomial arithmetic over `BigRational`, Yun
//!   squarefree decomposition, Sturm root counting and certified root
//!   isolation ([`poly`], [`roots`]);
//! * the majorization partial order on hyperbolic polynomials, root-vector
//!   extraction and the Wronskian interlacing test ([`order`]);
//! * constructive decomposition of any majorization into a finite chain of
//!   pinches, plus seeded samplers for pinch pairs ([`pinch`]);
//! * linear operators on polynomial spaces, their bivariate symbols, and a
//!   classifier that certifies or refutes preservation of the majorization
//!   order ([`operator`]);
//! * empirical verification that the top-k zero sums along a pinch path are
//!   convex, even, and majorization-monotone ([`path`]);
//! * JSON document types used by the command-line front end ([`docs`]).

pub mod docs;
pub mod error;
pub mod operator;
pub mod order;
pub mod path;
pub mod pinch;
pub mod poly;
pub mod rational;
pub mod roots;

pub use error::Error;
pub use poly::Poly;
pub use rational::Rat;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
