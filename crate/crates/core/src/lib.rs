//! Thompson's group F as reduced tree pairs, its piecewise-linear action
//! on the unit interval, and the links it produces.

pub mod analysis;
pub mod enumerate;
pub mod error;
pub mod group;
pub mod jones;
pub mod library;
pub mod stabilizer;
pub mod trees;

pub use analysis::{BinaryExpansion, PlMap, Point, Rational};
pub use error::{Error, Result};
pub use group::{Element, WrapCode};
pub use jones::{InvariantFingerprint, LaurentPoly, LinkDiagram};
pub use trees::{BinaryTree, BinaryWord, Branch, TreePair};
