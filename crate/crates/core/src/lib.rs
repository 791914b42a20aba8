//! Exact-arithmetic verification of generalized Ceva identities on polygons
//! and inscribed polygons.

pub mod ceva;
pub mod circle;
pub mod cli;
pub mod config;
pub mod geom;
pub mod harness;
pub mod rational;
pub mod report;
pub mod svg;

pub use geom::{AffineMap, GeomError, Line, Point};
pub use rational::Rational;
