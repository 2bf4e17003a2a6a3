//! Enumeration and verification of critical plane graphs of girth five
//! with precolored faces.

pub mod catalog;
pub mod color;
pub mod diskgen;
pub mod embed;
pub mod cylgen;
pub mod expected;
pub mod cli;
