//! Reduced words, commutation classes and Elnitsky tilings for Coxeter groups
//! of types A and D, with the embedded B and H3 subtilings.

pub mod cases;
pub mod config;
pub mod coxeter;
pub mod embeddings;
pub mod error;
pub mod parse;
pub mod render;
pub mod tilings;
pub mod words;
