//! Roto-reflection group of the floor and canonical representatives.
//!
//! A tiling is encoded as a bit sequence with two bits per cell in row-major
//! order (`y` outer, `x` inner): whether the cell shares its tile with the
//! right neighbour, and whether it shares it with the neighbour below
//! (`y + 1`). Out-of-floor neighbours encode as 0. The canonical
//! representative of an orbit is the member with the lexicographically
//! smallest sequence.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::tiling::{FloorSpec, Orientation, Placement, TileId, Tiling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymmetryOp {
    Identity,
    /// Mirror along the length axis: `x -> n-1-x`.
    ReflectX,
    /// Mirror across the width axis: `y -> m-1-y`.
    ReflectY,
    Rotate180,
    /// Quarter turn, square floors only: `(x, y) -> (s-1-y, x)`.
    Rotate90,
    Rotate270,
    /// Transpose, square floors only: `(x, y) -> (y, x)`.
    ReflectDiagMain,
    ReflectDiagAnti,
}

impl SymmetryOp {
    pub const RECTANGLE: [SymmetryOp; 4] = [
        SymmetryOp::Identity,
        SymmetryOp::ReflectX,
        SymmetryOp::ReflectY,
        SymmetryOp::Rotate180,
    ];

    pub const SQUARE: [SymmetryOp; 8] = [
        SymmetryOp::Identity,
        SymmetryOp::ReflectX,
        SymmetryOp::ReflectY,
        SymmetryOp::Rotate180,
        SymmetryOp::Rotate90,
        SymmetryOp::Rotate270,
        SymmetryOp::ReflectDiagMain,
        SymmetryOp::ReflectDiagAnti,
    ];

    /// Whether the op exchanges the two axes (and thus tile orientations).
    pub fn transposes(self) -> bool {
        matches!(
            self,
            SymmetryOp::Rotate90
                | SymmetryOp::Rotate270
                | SymmetryOp::ReflectDiagMain
                | SymmetryOp::ReflectDiagAnti
        )
    }

    pub fn inverse(self) -> Self {
        match self {
            SymmetryOp::Rotate90 => SymmetryOp::Rotate270,
            SymmetryOp::Rotate270 => SymmetryOp::Rotate90,
            other => other,
        }
    }

    /// Image of cell `(x, y)` on a floor of `width x length`. Transposing ops
    /// assume `width == length`.
    pub fn map_cell(self, width: usize, length: usize, x: usize, y: usize) -> (usize, usize) {
        let (xm, ym) = (length - 1 - x, width - 1 - y);
        match self {
            SymmetryOp::Identity => (x, y),
            SymmetryOp::ReflectX => (xm, y),
            SymmetryOp::ReflectY => (x, ym),
            SymmetryOp::Rotate180 => (xm, ym),
            SymmetryOp::Rotate90 => (ym, x),
            SymmetryOp::Rotate270 => (y, xm),
            SymmetryOp::ReflectDiagMain => (y, x),
            SymmetryOp::ReflectDiagAnti => (ym, xm),
        }
    }
}

/// The symmetry group of the floor: order 4, or order 8 for square floors.
pub fn symmetry_group(floor: &FloorSpec) -> &'static [SymmetryOp] {
    if floor.is_square() {
        &SymmetryOp::SQUARE
    } else {
        &SymmetryOp::RECTANGLE
    }
}

fn check_op(floor: &FloorSpec, op: SymmetryOp) -> Result<()> {
    if op.transposes() && !floor.is_square() {
        Err(Error::contract(format!(
            "{op:?} is not a symmetry of the {floor}"
        )))
    } else {
        Ok(())
    }
}

/// Transforms every tile of `tiling` by `op`. Placements of the result are
/// re-ordered into scan order so it equals the tiling enumeration would
/// produce for the same cover.
pub fn apply_symmetry(tiling: &Tiling, op: SymmetryOp) -> Result<Tiling> {
    let floor = *tiling.floor();
    check_op(&floor, op)?;
    let tile = floor.tile();
    let (m, n) = (floor.width(), floor.length());
    let placements = tiling
        .placements()
        .iter()
        .map(|p| {
            let (dx, dy) = tile.extent(p.orientation);
            let (ax, ay) = op.map_cell(m, n, p.x, p.y);
            let (bx, by) = op.map_cell(m, n, p.x + dx - 1, p.y + dy - 1);
            let orientation = if op.transposes() && !tile.is_square() {
                p.orientation.flipped()
            } else {
                p.orientation
            };
            Placement::new(ax.min(bx), ay.min(by), orientation)
        })
        .collect();
    Tiling::from_unordered(floor, placements)
}

/// Packed adjacency bit sequence, most significant bit first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    words: Vec<u64>,
    bits: usize,
}

impl CanonicalKey {
    pub fn len(&self) -> usize {
        self.bits
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn bit(&self, i: usize) -> bool {
        self.words[i / 64] >> (63 - i % 64) & 1 == 1
    }

    /// `'0'`/`'1'` rendering.
    pub fn to_bit_string(&self) -> String {
        (0..self.bits)
            .map(|i| if self.bit(i) { '1' } else { '0' })
            .collect()
    }

    fn from_bits(bits: impl Iterator<Item = bool>, len: usize) -> Self {
        let mut words = vec![0u64; len.div_ceil(64)];
        for (i, b) in bits.take(len).enumerate() {
            if b {
                words[i / 64] |= 1 << (63 - i % 64);
            }
        }
        CanonicalKey { words, bits: len }
    }
}

/// Adjacency bits of the image of a tiling under `op`, read directly from
/// the source id grid.
struct ImageBits<'a> {
    ids: &'a [TileId],
    width: usize,
    length: usize,
    inv: SymmetryOp,
}

impl ImageBits<'_> {
    fn id(&self, x: usize, y: usize) -> TileId {
        let (sx, sy) = self.inv.map_cell(self.width, self.length, x, y);
        self.ids[sy * self.length + sx]
    }

    /// Bit pair of image cell `(x, y)`.
    fn pair(&self, x: usize, y: usize) -> (bool, bool) {
        let here = self.id(x, y);
        let right = x + 1 < self.length && self.id(x + 1, y) == here;
        let below = y + 1 < self.width && self.id(x, y + 1) == here;
        (right, below)
    }

    fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.width)
            .flat_map(move |y| (0..self.length).map(move |x| (x, y)))
            .flat_map(move |(x, y)| {
                let (r, b) = self.pair(x, y);
                [r, b]
            })
    }
}

fn image_bits(tiling: &Tiling, op: SymmetryOp) -> ImageBits<'_> {
    let floor = tiling.floor();
    ImageBits {
        ids: tiling.grid().raw(),
        width: floor.width(),
        length: floor.length(),
        inv: op.inverse(),
    }
}

/// Encodes `tiling` itself (no symmetry applied).
pub fn encode(tiling: &Tiling) -> Result<CanonicalKey> {
    tiling.require_complete("encode")?;
    Ok(encode_image(tiling, SymmetryOp::Identity))
}

fn encode_image(tiling: &Tiling, op: SymmetryOp) -> CanonicalKey {
    let bits = image_bits(tiling, op);
    CanonicalKey::from_bits(bits.iter(), 2 * tiling.floor().cells())
}

/// Smallest encoding over the orbit of `tiling`.
pub fn canonical_key(tiling: &Tiling) -> Result<CanonicalKey> {
    tiling.require_complete("canonical_key")?;
    let group = symmetry_group(tiling.floor());
    let key = group
        .iter()
        .map(|&op| encode_image(tiling, op))
        .min()
        .expect("group contains the identity");
    Ok(key)
}

/// Whether `tiling` is the canonical member of its orbit. Bit streams are
/// compared lazily so most non-representatives are rejected after a few
/// cells.
pub fn is_canonical_representative(tiling: &Tiling) -> Result<bool> {
    tiling.require_complete("is_canonical_representative")?;
    Ok(is_canonical_unchecked(tiling))
}

pub(crate) fn is_canonical_unchecked(tiling: &Tiling) -> bool {
    let own = image_bits(tiling, SymmetryOp::Identity);
    symmetry_group(tiling.floor())[1..].iter().all(|&op| {
        let other = image_bits(tiling, op);
        other.iter().cmp(own.iter()) != Ordering::Less
    })
}

/// Number of distinct images of `tiling` under the floor's group.
pub fn orbit_size(tiling: &Tiling) -> Result<usize> {
    tiling.require_complete("orbit_size")?;
    let keys: BTreeSet<CanonicalKey> = symmetry_group(tiling.floor())
        .iter()
        .map(|&op| encode_image(tiling, op))
        .collect();
    Ok(keys.len())
}

/// Rebuilds the tiling an adjacency key was produced from.
pub fn decode(floor: FloorSpec, key: &CanonicalKey) -> Result<Tiling> {
    let (m, n) = (floor.width(), floor.length());
    if key.len() != 2 * m * n {
        return Err(Error::contract(format!(
            "key of {} bits does not describe a {floor}",
            key.len()
        )));
    }
    let right = |x: usize, y: usize| key.bit(2 * (y * n + x));
    let below = |x: usize, y: usize| key.bit(2 * (y * n + x) + 1);
    let tile = floor.tile();
    let mut claimed = vec![false; m * n];
    let mut placements = Vec::with_capacity(floor.tiles_per_tiling());
    for x in 0..n {
        for y in 0..m {
            if claimed[y * n + x] {
                continue;
            }
            // (x, y) is the minimum corner of its tile: walk the run of
            // "same as right" bits and "same as below" bits.
            let mut dx = 1;
            while x + dx - 1 < n && right(x + dx - 1, y) {
                dx += 1;
            }
            let mut dy = 1;
            while y + dy - 1 < m && below(x, y + dy - 1) {
                dy += 1;
            }
            let orientation = [Orientation::Lengthwise, Orientation::Crosswise]
                .into_iter()
                .find(|&o| tile.extent(o) == (dx, dy))
                .ok_or_else(|| {
                    Error::contract(format!("key describes a {dx}x{dy} region at ({x},{y})"))
                })?;
            let p = Placement::new(x, y, orientation);
            if !p.fits(&floor) {
                return Err(Error::contract(format!("{p:?} leaves the floor")));
            }
            for (cx, cy) in p.cells(tile) {
                if std::mem::replace(&mut claimed[cy * n + cx], true) {
                    return Err(Error::contract("key describes overlapping tiles"));
                }
            }
            placements.push(p);
        }
    }
    let tiling = Tiling::from_unordered(floor, placements)?;
    if encode(&tiling)? != *key {
        return Err(Error::contract(
            "key is not the adjacency encoding of any tiling",
        ));
    }
    Ok(tiling)
}
