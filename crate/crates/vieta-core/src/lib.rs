//! Exact enumeration of two Markov-like Diophantine equation families via
//! Vieta-jumping solution trees, and the generalized cluster patterns that
//! specialize onto them.
//!
//! Everything is exact: arbitrary-precision integers, sparse Laurent
//! polynomials over the integers, and rational evaluation. There is no
//! floating point anywhere.
//!
//! Module map:
//! - [`laurent`], [`exchange`]: the exact-arithmetic substrate.
//! - [`cubic`]: `x^2+y^2+z^2+k1 xy+k2 yz+k3 zx = (3+k1+k2+k3) xyz`.
//! - [`quartic`]: `x^2+y^4+z^4+k y^2 z^2+2x y^2+2x z^2 = (7+k) x y^2 z^2`.
//! - [`tree`]: solution-tree generation, descent paths, brute-force oracles.
//! - [`gcp`]: labeled seeds, mutation, the seed registry, specialization.
//! - [`export`]: deterministic JSON and DOT tree exports.
//! - [`audit`]: the aggregated invariant suite behind `vieta audit`.
//!
//! The `parallel` feature (on by default) parallelizes the oracle scans,
//! tree expansion and walk enumeration with rayon; every public function
//! produces output identical to its sequential fallback.

pub mod audit;
mod coeff;
pub mod cubic;
pub mod exchange;
pub mod export;
pub mod gcp;
pub mod laurent;
pub mod quartic;
pub mod tree;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
