//! Exhaustive, duplicate-free generation of complete tilings.
//!
//! The search always fills the first empty cell in column-major order, trying
//! Lengthwise before Crosswise. Occupancy is kept as one bit mask per column
//! so the fit test is a handful of AND operations.

use crate::error::{Error, Result};
use crate::tiling::{FloorSpec, Orientation, Placement, Tiling};
use crate::Count;

/// Receives every complete tiling exactly once.
pub trait TilingVisitor {
    fn visit(&mut self, tiling: &Tiling);
}

impl<F: FnMut(&Tiling)> TilingVisitor for F {
    fn visit(&mut self, tiling: &Tiling) {
        self(tiling)
    }
}

/// Enumeration driver with an optional search-node budget. A node is one
/// tile placement attempted by the search.
#[derive(Debug, Clone, Copy)]
pub struct Enumerator {
    floor: FloorSpec,
    max_nodes: Option<u64>,
}

impl Enumerator {
    pub fn new(floor: FloorSpec) -> Self {
        Enumerator {
            floor,
            max_nodes: None,
        }
    }

    pub fn with_max_nodes(mut self, max_nodes: Option<u64>) -> Self {
        self.max_nodes = max_nodes;
        self
    }

    /// Streams all complete tilings to `visitor`; returns how many were
    /// visited.
    pub fn run<V: TilingVisitor>(&self, visitor: &mut V) -> Result<Count> {
        let floor = self.floor;
        // The strip condition cuts searches that would only find dead ends,
        // such as 1x4 tiles on a 6x38 floor.
        if !floor.matching_condition() || !floor.strip_condition() {
            return Ok(0);
        }
        if floor.width() > 64 {
            return Err(Error::contract(
                "enumeration supports floor widths up to 64",
            ));
        }
        let tile = floor.tile();
        let orientations: &'static [Orientation] = if tile.is_square() {
            &[Orientation::Lengthwise]
        } else {
            &[Orientation::Lengthwise, Orientation::Crosswise]
        };
        let mut search = Search {
            floor,
            orientations,
            full: column_mask(floor.width(), 0),
            columns: vec![0; floor.length()],
            tiling: Tiling::empty(floor),
            visited: 0,
            nodes: 0,
            max_nodes: self.max_nodes.unwrap_or(u64::MAX),
        };
        search.descend(0, visitor)?;
        Ok(search.visited)
    }
}

fn column_mask(height: usize, shift: usize) -> u64 {
    let bits = if height >= 64 {
        u64::MAX
    } else {
        (1u64 << height) - 1
    };
    bits << shift
}

struct Search {
    floor: FloorSpec,
    orientations: &'static [Orientation],
    full: u64,
    columns: Vec<u64>,
    tiling: Tiling,
    visited: Count,
    nodes: u64,
    max_nodes: u64,
}

impl Search {
    fn descend<V: TilingVisitor>(&mut self, mut x: usize, visitor: &mut V) -> Result<()> {
        let n = self.floor.length();
        while x < n && self.columns[x] == self.full {
            x += 1;
        }
        if x == n {
            self.visited = self
                .visited
                .checked_add(1)
                .ok_or(Error::Overflow("counting enumerated tilings"))?;
            visitor.visit(&self.tiling);
            return Ok(());
        }
        let y = self.columns[x].trailing_ones() as usize;
        let tile = self.floor.tile();
        for &orientation in self.orientations {
            let (dx, dy) = tile.extent(orientation);
            if x + dx > n || y + dy > self.floor.width() {
                continue;
            }
            let mask = column_mask(dy, y);
            if self.columns[x..x + dx].iter().any(|c| c & mask != 0) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Err(Error::BudgetExceeded {
                    limit: self.max_nodes,
                });
            }
            for c in &mut self.columns[x..x + dx] {
                *c |= mask;
            }
            self.tiling
                .push_unchecked(Placement::new(x, y, orientation));
            let res = self.descend(x, visitor);
            self.tiling.pop();
            for c in &mut self.columns[x..x + dx] {
                *c &= !mask;
            }
            res?;
        }
        Ok(())
    }
}

/// Visits every complete tiling of `floor` once and returns `T(n,m)`.
pub fn enumerate_tilings<V: TilingVisitor>(floor: FloorSpec, visitor: &mut V) -> Result<Count> {
    Enumerator::new(floor).run(visitor)
}

/// `T(n,m)` by exhaustive enumeration.
pub fn count_tilings(floor: FloorSpec) -> Result<Count> {
    enumerate_tilings(floor, &mut |_: &Tiling| {})
}
