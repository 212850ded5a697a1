//! Floors, tiles, placements and the occupancy grid shared by every other
//! module.
//!
//! Coordinates: `x` runs along the floor length `n`, `y` across the floor
//! width `m`, with the origin in a fixed corner. Cells are scanned
//! column-major (`x` outer, `y` inner); every complete tiling decomposes
//! uniquely into placements anchored at the first empty cell of that scan.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense tile identifier, assigned in placement order.
pub type TileId = u32;

const EMPTY: TileId = TileId::MAX;

/// A `t_m x t_n` rectangular tile: `width` is the extent across the floor
/// width, `length` the extent along the floor length when laid lengthwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TileShape {
    width: usize,
    length: usize,
}

impl TileShape {
    pub fn new(width: usize, length: usize) -> Result<Self> {
        if width == 0 || length == 0 {
            return Err(Error::InvalidTile {
                width,
                length,
                reason: "extents must be positive",
            });
        }
        if width.gcd(&length) != 1 {
            return Err(Error::InvalidTile {
                width,
                length,
                reason: "extents must be coprime",
            });
        }
        Ok(TileShape { width, length })
    }

    pub const fn domino() -> Self {
        TileShape {
            width: 1,
            length: 2,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn area(&self) -> usize {
        self.width * self.length
    }

    pub fn is_square(&self) -> bool {
        self.width == self.length
    }

    /// The larger of the two extents.
    pub fn max_extent(&self) -> usize {
        self.width.max(self.length)
    }

    /// `(dx, dy)` covered by a placement in `orientation`.
    pub fn extent(&self, orientation: Orientation) -> (usize, usize) {
        match orientation {
            Orientation::Lengthwise => (self.length, self.width),
            Orientation::Crosswise => (self.width, self.length),
        }
    }
}

impl fmt::Display for TileShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.width, self.length)
    }
}

impl FromStr for TileShape {
    type Err = Error;

    /// Parses `AxB` with `A = t_m` and `B = t_n`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(0, format!("tile must look like AxB, got {s:?}"));
        let (a, b) = s.split_once(['x', 'X']).ok_or_else(bad)?;
        let a = a.trim().parse().map_err(|_| bad())?;
        let b = b.trim().parse().map_err(|_| bad())?;
        TileShape::new(a, b)
    }
}

/// Problem instance: an `m x n` floor and the single tile shape used on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FloorSpec {
    width: usize,
    length: usize,
    tile: TileShape,
}

impl FloorSpec {
    pub fn new(width: usize, length: usize, tile: TileShape) -> Result<Self> {
        if width == 0 || length == 0 {
            return Err(Error::InvalidFloor { width, length });
        }
        Ok(FloorSpec {
            width,
            length,
            tile,
        })
    }

    /// Floor width `m` (extent along `y`).
    pub fn width(&self) -> usize {
        self.width
    }

    /// Floor length `n` (extent along `x`).
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn tile(&self) -> TileShape {
        self.tile
    }

    pub fn cells(&self) -> usize {
        self.width * self.length
    }

    pub fn is_square(&self) -> bool {
        self.width == self.length
    }

    /// Area divisibility: `n*m` is a multiple of the tile area.
    pub fn matching_condition(&self) -> bool {
        self.cells().is_multiple_of(self.tile.area())
    }

    /// Strip condition: each tile side divides a floor side. An `a x b` tile
    /// splits into `1 x a` strips and into `1 x b` strips, and colouring
    /// cell `(x, y)` by `(x + y) mod k` shows a floor tiled by `1 x k`
    /// strips has a side divisible by `k`. Necessary, not sufficient.
    pub fn strip_condition(&self) -> bool {
        let divides = |k: usize| self.width.is_multiple_of(k) || self.length.is_multiple_of(k);
        divides(self.tile.width) && divides(self.tile.length)
    }

    /// Number of tiles in any complete tiling (meaningful only when the
    /// matching condition holds).
    pub fn tiles_per_tiling(&self) -> usize {
        self.cells() / self.tile.area()
    }
}

impl fmt::Display for FloorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}x{} floor, {} tiles",
            self.width, self.length, self.tile
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orientation {
    /// The tile's `t_n` extent runs along the floor length.
    Lengthwise,
    /// The tile's `t_n` extent runs across the floor width.
    Crosswise,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::Lengthwise => Orientation::Crosswise,
            Orientation::Crosswise => Orientation::Lengthwise,
        }
    }
}

/// A tile anchored at its minimum-`x`, minimum-`y` cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Placement {
    pub x: usize,
    pub y: usize,
    pub orientation: Orientation,
}

impl Placement {
    pub fn new(x: usize, y: usize, orientation: Orientation) -> Self {
        Placement { x, y, orientation }
    }

    pub fn fits(&self, floor: &FloorSpec) -> bool {
        let (dx, dy) = floor.tile.extent(self.orientation);
        self.x + dx <= floor.length && self.y + dy <= floor.width
    }

    /// Cells covered by this placement, column-major.
    pub fn cells(&self, tile: TileShape) -> impl Iterator<Item = (usize, usize)> {
        let (dx, dy) = tile.extent(self.orientation);
        let (x0, y0) = (self.x, self.y);
        (x0..x0 + dx).flat_map(move |x| (y0..y0 + dy).map(move |y| (x, y)))
    }

    /// Scan-order key of the anchor.
    pub(crate) fn scan_key(&self) -> (usize, usize) {
        (self.x, self.y)
    }
}

/// `m x n` grid of optional tile ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OccupancyGrid {
    width: usize,
    length: usize,
    cells: Vec<TileId>,
}

impl OccupancyGrid {
    pub fn new(width: usize, length: usize) -> Self {
        OccupancyGrid {
            width,
            length,
            cells: vec![EMPTY; width * length],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn get(&self, x: usize, y: usize) -> Option<TileId> {
        match self.cells[y * self.length + x] {
            EMPTY => None,
            id => Some(id),
        }
    }

    pub fn is_occupied(&self, x: usize, y: usize) -> bool {
        self.cells[y * self.length + x] != EMPTY
    }

    pub fn is_full(&self) -> bool {
        self.cells.iter().all(|&c| c != EMPTY)
    }

    pub fn occupied_cells(&self) -> usize {
        self.cells.iter().filter(|&&c| c != EMPTY).count()
    }

    /// First empty cell in column-major scan order.
    pub fn first_empty(&self) -> Option<(usize, usize)> {
        (0..self.length)
            .flat_map(|x| (0..self.width).map(move |y| (x, y)))
            .find(|&(x, y)| !self.is_occupied(x, y))
    }

    /// Raw row-major id array; empty cells hold `TileId::MAX`.
    pub fn raw(&self) -> &[TileId] {
        &self.cells
    }

    fn set(&mut self, x: usize, y: usize, id: TileId) {
        self.cells[y * self.length + x] = id;
    }
}

/// Placements anchored at `(x, y)` that fit inside the floor and overlap no
/// occupied cell, Lengthwise first. `(x, y)` is expected to be the first
/// empty cell in scan order; an occupied cell is a contract violation.
pub fn legal_placements_at(
    grid: &OccupancyGrid,
    tile: TileShape,
    x: usize,
    y: usize,
) -> Result<Vec<Placement>> {
    if x >= grid.length || y >= grid.width {
        return Err(Error::contract(format!(
            "cell ({x},{y}) lies outside the floor"
        )));
    }
    if grid.is_occupied(x, y) {
        return Err(Error::contract(format!(
            "cell ({x},{y}) is already occupied"
        )));
    }
    let orientations: &[Orientation] = if tile.is_square() {
        &[Orientation::Lengthwise]
    } else {
        &[Orientation::Lengthwise, Orientation::Crosswise]
    };
    let legal = orientations
        .iter()
        .map(|&o| Placement::new(x, y, o))
        .filter(|p| {
            let (dx, dy) = tile.extent(p.orientation);
            x + dx <= grid.length
                && y + dy <= grid.width
                && p.cells(tile).all(|(cx, cy)| !grid.is_occupied(cx, cy))
        })
        .collect();
    Ok(legal)
}

/// A (possibly partial) cover of a floor: ordered placements plus the derived
/// occupancy grid. Enumerated tilings are always complete.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tiling {
    floor: FloorSpec,
    placements: Vec<Placement>,
    grid: OccupancyGrid,
}

impl Tiling {
    /// The empty tiling of `floor`.
    pub fn empty(floor: FloorSpec) -> Self {
        Tiling {
            floor,
            placements: Vec::with_capacity(floor.tiles_per_tiling() + 1),
            grid: OccupancyGrid::new(floor.width, floor.length),
        }
    }

    /// Builds a tiling from placements, rejecting out-of-floor and
    /// overlapping tiles. The result may be partial.
    pub fn from_placements(
        floor: FloorSpec,
        placements: impl IntoIterator<Item = Placement>,
    ) -> Result<Self> {
        let mut tiling = Tiling::empty(floor);
        for p in placements {
            tiling.push(p)?;
        }
        Ok(tiling)
    }

    pub fn floor(&self) -> &FloorSpec {
        &self.floor
    }

    pub fn placements(&self) -> &[Placement] {
        &self.placements
    }

    pub fn grid(&self) -> &OccupancyGrid {
        &self.grid
    }

    pub fn is_complete(&self) -> bool {
        self.grid.is_full()
    }

    /// Adds a placement after checking bounds and overlap.
    pub fn push(&mut self, p: Placement) -> Result<()> {
        if !p.fits(&self.floor) {
            return Err(Error::contract(format!(
                "{p:?} does not fit the {}",
                self.floor
            )));
        }
        let tile = self.floor.tile;
        if p.cells(tile).any(|(x, y)| self.grid.is_occupied(x, y)) {
            return Err(Error::contract(format!("{p:?} overlaps an occupied cell")));
        }
        self.push_unchecked(p);
        Ok(())
    }

    pub(crate) fn push_unchecked(&mut self, p: Placement) {
        let id = self.placements.len() as TileId;
        for (x, y) in p.cells(self.floor.tile) {
            self.grid.set(x, y, id);
        }
        self.placements.push(p);
    }

    pub fn pop(&mut self) -> Option<Placement> {
        let p = self.placements.pop()?;
        for (x, y) in p.cells(self.floor.tile) {
            self.grid.set(x, y, EMPTY);
        }
        Some(p)
    }

    /// Re-derives placement order (and therefore tile ids) from scan order of
    /// the anchors, which is the order enumeration produces.
    pub(crate) fn from_unordered(floor: FloorSpec, mut placements: Vec<Placement>) -> Result<Self> {
        placements.sort_by_key(Placement::scan_key);
        Tiling::from_placements(floor, placements)
    }

    pub(crate) fn require_complete(&self, what: &str) -> Result<()> {
        if self.is_complete() {
            Ok(())
        } else {
            Err(Error::contract(format!(
                "{what} requires a complete tiling"
            )))
        }
    }
}

impl fmt::Display for Tiling {
    /// One text row per `y`, one character per cell; tiles are lettered by id.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const GLYPHS: &[u8] = b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
        for y in 0..self.floor.width {
            for x in 0..self.floor.length {
                let c = match self.grid.get(x, y) {
                    None => '.',
                    Some(id) => GLYPHS[id as usize % GLYPHS.len()] as char,
                };
                write!(f, "{c}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
