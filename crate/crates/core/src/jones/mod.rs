//! Links from elements of F: the plane graph of a tree pair, its medial
//! link diagram and invariants of the result.

pub mod diagram;
pub mod graph;
pub mod invariants;
pub mod poly;
pub mod svg;

pub use diagram::{Crossing, LinkDiagram, Strand};
pub use invariants::{
    colorings, determinant, kauffman_bracket, kauffman_f, InvariantFingerprint, DEFAULT_BRACKET_CAP,
};
pub use poly::LaurentPoly;

use crate::error::Result;
use crate::group::Element;

/// The link diagram of the reduced pair of `g`.
pub fn link_of(g: &Element, mirror: bool) -> LinkDiagram {
    LinkDiagram::from_pair(g.pair(), mirror)
}

pub fn fingerprint(g: &Element, cap: usize) -> Result<InvariantFingerprint> {
    InvariantFingerprint::of(&link_of(g, false), cap)
}
