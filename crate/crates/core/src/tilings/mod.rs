//! Elnitsky polygons and their tilings, built by sweeping a reduced word
//! across the border one swap at a time.
//!
//! Tiles are identified exactly: an anchor is a 0/1 combination of edge
//! labels and a tile is its anchor plus the labels of its left boundary.
//! Floating-point geometry only enters through [`EdgeBasis`] for area checks
//! and rendering.

mod basis;
pub mod geometry;
mod sweep;
mod tile;
mod verify;

pub use basis::{DGeometry, EdgeBasis};
pub use geometry::{coverage, CoverageReport};
pub use sweep::{kind_counts, mirror_a, subtiling, tile_word, tile_word_a, tile_word_d};
pub use tile::{Anchor, Tile, TileKind, Tiling};
pub use verify::{
    check_classes, sweep_elements, verify_bijection, verify_host_element, verify_partition_element,
    BijectionReport, BijectionSubject,
};

use crate::error::Result;

/// Default type A basis for `n` labels.
pub fn edge_basis_a(n: usize) -> Result<EdgeBasis> {
    EdgeBasis::regular_a(n)
}

/// Type D basis for rank `n`, strict or regular.
pub fn edge_basis_d(n: usize, geometry: DGeometry) -> Result<EdgeBasis> {
    EdgeBasis::d(n, geometry)
}
