//! Finite groups, their Cayley graphs, and generating sets.
//!
//! The crate is organized around a dense multiplication-table
//! representation of a finite group ([`group`]), builders and parsers
//! for concrete groups ([`io`]), Cayley digraphs and graphs for
//! arbitrary connection sets ([`graph`]), the component/coset structure
//! of such graphs ([`components`]), generating-set constructions
//! including a grow-then-prune search for minimal generating sets
//! ([`genset`]), and a brute-force rank oracle ([`oracle`]).

pub mod components;
mod error;
pub mod genset;
pub mod graph;
pub mod group;
pub mod io;
pub mod oracle;

pub use error::{Error, Result};
pub use group::{Elem, FiniteGroup, GeneratorSet, Subgroup};
