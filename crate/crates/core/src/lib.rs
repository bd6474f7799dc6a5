//! Nakajima monomial crystals and product monomial crystals.
//!
//! The crate is organised bottom-up:
//!
//! - [`cartan`]: simply-laced Dynkin data, minuscule orbits, the Weyl dimension formula
//! - [`monomial`]: monomials, multisets, Kashiwara operators, `(R,S)` and `(T,S)` data
//! - [`crystal`]: crystal generation, fundamental and product crystals, classification
//! - [`regularity`]: the pairing `E_q(p)` and the regularity test
//! - [`hw`]: highest weights via multiset inclusions, G-polynomials, chain decompositions
//! - [`typea`]: the flag crystal model in type A
//! - [`export`]: JSON and DOT rendering of crystals
//! - [`verify`]: cross-check suites comparing independent routes

pub mod cartan;
pub mod crystal;
pub mod error;
pub mod export;
pub mod hw;
pub mod monomial;
pub mod regularity;
pub mod typea;
pub mod verify;

pub use cartan::{DynkinDiagram, Node, OrbitElement, RootVec, WeightVec};
pub use crystal::{Crystal, DEFAULT_CAP};
pub use error::{Error, Result};
pub use monomial::{Monomial, Multiset, MultisetTuple, ParamSet};
