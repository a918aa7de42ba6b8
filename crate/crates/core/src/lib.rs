//! Exact computational Lie theory.
//!
//! Everything in this crate is computed over the integers, the rationals or a
//! prime field. There is no floating point anywhere; results are reproducible
//! bit for bit.
//!
//! Module map:
//!
//! | module        | contents                                                       |
//! |---------------|----------------------------------------------------------------|
//! | [`rootsys`]   | Cartan types, roots, coroots, highest roots, minuscule weights |
//! | [`weyl`]      | Weyl group elements, Bruhat order, double cosets, cell counts  |
//! | [`torsion`]   | torsion primes (two algorithms) and the associated prime tables|
//! | [`characters`]| Weyl dimension, Freudenthal, Klimyk, exterior powers           |
//! | [`intform`]   | ranks and radicals of integer symmetric forms over Q and F_p   |
//! | [`schurweyl`] | partitions, Specht Gram matrices, GL_n nilpotent orbits        |
//! | [`toric`]     | fans, strictly convex support functions, affine pavings        |
//!
//! Shared exact linear algebra lives in [`linalg`] and a small exact simplex
//! solver in [`lp`].

pub mod budget;
pub mod characters;
pub mod error;
pub mod intform;
pub mod linalg;
pub mod lp;
pub mod rootsys;
pub mod schurweyl;
mod ser;
pub mod torsion;
pub mod toric;
pub mod weyl;

pub use budget::Budget;
pub use error::{Error, Result};
