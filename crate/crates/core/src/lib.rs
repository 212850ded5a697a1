//! Exact enumeration and counting of rectangular tilings of rectangular
//! floors by a single tile shape.
//!
//! The crate provides an exhaustive enumerator, classification of tilings by
//! four-tile crossings and slide lines, symmetry reduction to incongruent
//! tilings, an independent profile-DP counter, and generating-function
//! verification tools.

pub mod classify;
pub mod enumerate;
pub mod error;
pub mod gf;
pub mod oracle;
pub mod symmetry;
pub mod table_io;
pub mod tiling;
pub mod verify;

/// Exact tiling counts. 128 bits keep long oracle runs (about 40 terms of a
/// width-6 domino sequence) exact; every addition is checked.
pub type Count = u128;

pub use classify::{
    classify_row, classify_table, crossing_count, slide_line_count, ClassCounts, ClassMode,
    Congruence, CountTable,
};
pub use enumerate::{count_tilings, enumerate_tilings, Enumerator, TilingVisitor};
pub use error::{Error, Result};
pub use oracle::{cross_validate, transfer_count, CrossValidation};
pub use symmetry::{
    apply_symmetry, canonical_key, decode, encode, is_canonical_representative, orbit_size,
    symmetry_group, CanonicalKey, SymmetryOp,
};
pub use tiling::{FloorSpec, OccupancyGrid, Orientation, Placement, TileId, TileShape, Tiling};
