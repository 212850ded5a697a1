//! Total tiling counts by a memoized fill-front dynamic program, independent
//! of the enumerator.
//!
//! Cells are consumed in the enumerator's column-major order. The state holds
//! one fill-depth digit per floor row: how many columns, starting at the
//! next cell of that row still to be consumed, are already covered. Digits
//! lie in `[0, L)` where `L` is the longer tile extent, and are packed into a
//! `u64` with a fixed number of bits each.

use std::collections::HashMap;

use crate::enumerate::Enumerator;
use crate::error::{Error, Result};
use crate::tiling::{FloorSpec, Orientation, Tiling};
use crate::Count;

#[derive(Debug, Clone, Copy)]
struct Layout {
    bits: u32,
    mask: u64,
}

impl Layout {
    fn for_floor(floor: &FloorSpec) -> Result<Self> {
        let l = floor.tile().max_extent() as u64;
        let bits = (u64::BITS - (l - 1).leading_zeros()).max(1);
        if floor.width() as u32 * bits > u64::BITS {
            return Err(Error::contract(format!(
                "profile of width {} does not fit in 64 bits",
                floor.width()
            )));
        }
        Ok(Layout {
            bits,
            mask: (1 << bits) - 1,
        })
    }

    fn digit(self, state: u64, y: usize) -> u64 {
        state >> (y as u32 * self.bits) & self.mask
    }

    fn with_digit(self, state: u64, y: usize, d: u64) -> u64 {
        let shift = y as u32 * self.bits;
        state & !(self.mask << shift) | d << shift
    }
}

/// Successor states of `state` at cell `(x, y)`, each with the number of
/// cells consumed.
fn successors(
    floor: &FloorSpec,
    orientations: &[Orientation],
    lay: Layout,
    x: usize,
    y: usize,
    state: u64,
    mut emit: impl FnMut(u64, usize),
) {
    let d = lay.digit(state, y);
    if d > 0 {
        emit(lay.with_digit(state, y, d - 1), 1);
        return;
    }
    let tile = floor.tile();
    for &o in orientations {
        let (dx, dy) = tile.extent(o);
        if x + dx > floor.length() || y + dy > floor.width() {
            continue;
        }
        if (y..y + dy).any(|r| lay.digit(state, r) != 0) {
            continue;
        }
        let next = (y..y + dy).fold(state, |s, r| lay.with_digit(s, r, dx as u64 - 1));
        emit(next, dy);
    }
}

fn orientations(floor: &FloorSpec) -> &'static [Orientation] {
    if floor.tile().is_square() {
        &[Orientation::Lengthwise]
    } else {
        &[Orientation::Lengthwise, Orientation::Crosswise]
    }
}

/// `T(n,m)` by profile dynamic programming.
pub fn transfer_count(floor: FloorSpec) -> Result<Count> {
    if !floor.matching_condition() {
        return Ok(0);
    }
    let lay = Layout::for_floor(&floor)?;
    let orients = orientations(&floor);
    let m = floor.width();
    let cells = floor.cells();
    // frontier[p] holds the states reached after consuming p cells.
    let mut frontier: Vec<HashMap<u64, Count>> = vec![HashMap::new(); cells + 1];
    frontier[0].insert(0, 1);
    for p in 0..cells {
        let current = std::mem::take(&mut frontier[p]);
        let (x, y) = (p / m, p % m);
        for (state, ways) in current {
            let mut failed = false;
            successors(&floor, orients, lay, x, y, state, |next, step| {
                let slot = frontier[p + step].entry(next).or_insert(0);
                match slot.checked_add(ways) {
                    Some(v) => *slot = v,
                    None => failed = true,
                }
            });
            if failed {
                return Err(Error::Overflow("accumulating profile counts"));
            }
        }
    }
    Ok(frontier[cells].get(&0).copied().unwrap_or(0))
}

/// The same recurrence without memoization; exponential, for soundness
/// checks on small floors.
pub fn transfer_count_unmemoized(floor: FloorSpec) -> Result<Count> {
    fn walk(f: &FloorSpec, o: &[Orientation], lay: Layout, p: usize, state: u64) -> Count {
        if p == f.cells() {
            return Count::from(state == 0);
        }
        let m = f.width();
        let mut total = 0;
        successors(f, o, lay, p / m, p % m, state, |next, step| {
            total += walk(f, o, lay, p + step, next);
        });
        total
    }
    if !floor.matching_condition() {
        return Ok(0);
    }
    let lay = Layout::for_floor(&floor)?;
    Ok(walk(&floor, orientations(&floor), lay, 0, 0))
}

/// Oracle and enumerator totals for one floor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossValidation {
    pub oracle: Count,
    pub enumerated: Count,
}

impl CrossValidation {
    pub fn is_match(&self) -> bool {
        self.oracle == self.enumerated
    }
}

/// Compares [`transfer_count`] with exhaustive enumeration under an optional
/// search-node budget.
pub fn cross_validate(floor: FloorSpec, max_nodes: Option<u64>) -> Result<CrossValidation> {
    let oracle = transfer_count(floor)?;
    let enumerated = Enumerator::new(floor)
        .with_max_nodes(max_nodes)
        .run(&mut |_: &Tiling| {})?;
    Ok(CrossValidation { oracle, enumerated })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::TileShape;

    fn floor(m: usize, n: usize, a: usize, b: usize) -> FloorSpec {
        FloorSpec::new(m, n, TileShape::new(a, b).unwrap()).unwrap()
    }

    #[test]
    fn published_totals() {
        assert_eq!(transfer_count(floor(8, 8, 1, 2)).unwrap(), 12988816);
        assert_eq!(transfer_count(floor(2, 4, 1, 2)).unwrap(), 5);
        assert_eq!(transfer_count(floor(7, 12, 2, 3)).unwrap(), 9);
        assert_eq!(transfer_count(floor(6, 13, 1, 2)).unwrap(), 536948224);
    }

    #[test]
    fn cross_validation_examples() {
        let v = cross_validate(floor(4, 10, 1, 2), None).unwrap();
        assert_eq!(
            v,
            CrossValidation {
                oracle: 18061,
                enumerated: 18061
            }
        );
        assert!(cross_validate(floor(5, 9, 1, 3), None).unwrap().is_match());
        let v = cross_validate(floor(3, 7, 1, 4), None).unwrap();
        assert_eq!((v.oracle, v.enumerated), (0, 0));
        let over = cross_validate(floor(6, 13, 1, 2), Some(1000));
        assert_eq!(over, Err(Error::BudgetExceeded { limit: 1000 }));
    }

    #[test]
    fn memoized_and_plain_agree() {
        for (a, b) in [(1, 2), (1, 3), (1, 4), (2, 3), (1, 1)] {
            for m in 1..=5 {
                for n in 1..=8 {
                    let f = floor(m, n, a, b);
                    assert_eq!(
                        transfer_count(f).unwrap(),
                        transfer_count_unmemoized(f).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn overflow_is_reported() {
        let res = transfer_count(floor(10, 60, 1, 2));
        assert_eq!(res, Err(Error::Overflow("accumulating profile counts")));
    }
}
