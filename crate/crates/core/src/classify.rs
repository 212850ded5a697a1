//! Four-tile crossings, slide lines, and classified count tables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::Enumerator;
use crate::error::{Error, Result};
use crate::symmetry::is_canonical_unchecked;
use crate::tiling::{FloorSpec, TileShape, Tiling};
use crate::Count;

/// Which statistic buckets the tilings of a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassMode {
    /// Number of interior points where four tiles meet.
    Tatami,
    /// Number of full-length cuts that cross no tile.
    SlideLines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Congruence {
    /// Every tiling counts.
    Full,
    /// One representative per symmetry orbit.
    Incongruent,
}

impl ClassMode {
    pub fn statistic(self, tiling: &Tiling) -> Result<usize> {
        match self {
            ClassMode::Tatami => crossing_count(tiling),
            ClassMode::SlideLines => slide_line_count(tiling),
        }
    }
}

impl fmt::Display for ClassMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassMode::Tatami => "tatami",
            ClassMode::SlideLines => "slide",
        })
    }
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Congruence::Full => "full",
            Congruence::Incongruent => "incongruent",
        })
    }
}

/// Number of interior lattice vertices whose four incident cells belong to
/// four different tiles.
pub fn crossing_count(tiling: &Tiling) -> Result<usize> {
    tiling.require_complete("crossing_count")?;
    let floor = tiling.floor();
    let (m, n) = (floor.width(), floor.length());
    let ids = tiling.grid().raw();
    let mut t = 0;
    for y in 1..m {
        let (up, down) = (&ids[(y - 1) * n..y * n], &ids[y * n..(y + 1) * n]);
        for x in 1..n {
            // Tiles are rectangles, so two diagonal cells can only share a
            // tile if an adjacent pair does; the four edge tests suffice.
            let (a, b, c, d) = (up[x - 1], up[x], down[x - 1], down[x]);
            if a != b && b != d && d != c && c != a {
                t += 1;
            }
        }
    }
    Ok(t)
}

/// Number of heights `y` in `1..m` at which the full-length line cuts no
/// tile.
pub fn slide_line_count(tiling: &Tiling) -> Result<usize> {
    tiling.require_complete("slide_line_count")?;
    let floor = tiling.floor();
    let n = floor.length();
    let ids = tiling.grid().raw();
    let s = (1..floor.width())
        .filter(|&y| (0..n).all(|x| ids[(y - 1) * n + x] != ids[y * n + x]))
        .count();
    Ok(s)
}

/// One table row: counts per class index plus the total.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCounts {
    mode: ClassMode,
    counts: Vec<Count>,
    total: Count,
    representative_dependent: bool,
}

impl ClassCounts {
    pub fn new(mode: ClassMode) -> Self {
        ClassCounts {
            mode,
            counts: Vec::new(),
            total: 0,
            representative_dependent: false,
        }
    }

    /// Builds a row from explicit class counts; the total is their sum.
    pub fn from_counts(mode: ClassMode, counts: Vec<Count>) -> Result<Self> {
        let mut row = ClassCounts::new(mode);
        for (class, &c) in counts.iter().enumerate() {
            row.add(class, c)?;
        }
        row.counts.resize(counts.len(), 0);
        Ok(row)
    }

    pub fn mode(&self) -> ClassMode {
        self.mode
    }

    pub fn total(&self) -> Count {
        self.total
    }

    /// Count for class `class`; zero beyond the stored columns.
    pub fn get(&self, class: usize) -> Count {
        self.counts.get(class).copied().unwrap_or(0)
    }

    /// Stored class columns, starting at class 0.
    pub fn counts(&self) -> &[Count] {
        &self.counts
    }

    /// Largest class with a nonzero count.
    pub fn max_class(&self) -> Option<usize> {
        self.counts.iter().rposition(|&c| c != 0)
    }

    /// Set for slide-line counts of incongruent tilings on square floors,
    /// where quarter turns do not preserve the statistic and the row depends
    /// on which orbit member is the representative.
    pub fn is_representative_dependent(&self) -> bool {
        self.representative_dependent
    }

    pub fn add(&mut self, class: usize, amount: Count) -> Result<()> {
        if class >= self.counts.len() {
            self.counts.resize(class + 1, 0);
        }
        let overflow = Error::Overflow("accumulating class counts");
        self.counts[class] = self.counts[class]
            .checked_add(amount)
            .ok_or(overflow.clone())?;
        self.total = self.total.checked_add(amount).ok_or(overflow)?;
        Ok(())
    }

    /// Materializes zero columns up to `columns`.
    pub fn pad_to(&mut self, columns: usize) {
        if self.counts.len() < columns {
            self.counts.resize(columns, 0);
        }
    }

    /// Sum of the class columns, checked against the stored total.
    pub fn row_sum(&self) -> Result<Count> {
        self.counts.iter().try_fold(0 as Count, |acc, &c| {
            acc.checked_add(c)
                .ok_or(Error::Overflow("summing a table row"))
        })
    }
}

/// Rows of classified counts for one floor width and tile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub width: usize,
    pub tile: TileShape,
    pub mode: ClassMode,
    pub congruence: Congruence,
    /// Only lengths satisfying the matching condition have rows.
    pub rows: BTreeMap<usize, ClassCounts>,
}

impl CountTable {
    /// Number of class columns shared by all rows.
    pub fn columns(&self) -> usize {
        self.rows
            .values()
            .map(|r| r.counts().len())
            .max()
            .unwrap_or(1)
    }
}

/// Classifies every tiling (or every canonical representative) of `floor`.
pub fn classify_row(
    floor: FloorSpec,
    mode: ClassMode,
    congruence: Congruence,
    max_nodes: Option<u64>,
) -> Result<ClassCounts> {
    let mut row = ClassCounts::new(mode);
    let mut failure = None;
    let statistic = match mode {
        ClassMode::Tatami => crossing_count,
        ClassMode::SlideLines => slide_line_count,
    };
    let mut visit = |t: &Tiling| {
        if failure.is_some() {
            return;
        }
        if congruence == Congruence::Incongruent && !is_canonical_unchecked(t) {
            return;
        }
        let res = statistic(t).and_then(|class| row.add(class, 1));
        if let Err(e) = res {
            failure = Some(e);
        }
    };
    Enumerator::new(floor)
        .with_max_nodes(max_nodes)
        .run(&mut visit)?;
    if let Some(e) = failure {
        return Err(e);
    }
    row.representative_dependent =
        mode == ClassMode::SlideLines && congruence == Congruence::Incongruent && floor.is_square();
    row.pad_to(1);
    Ok(row)
}

/// Classified table for lengths in `lengths`, rows computed in parallel.
pub fn classify_table(
    width: usize,
    tile: TileShape,
    lengths: RangeInclusive<usize>,
    mode: ClassMode,
    congruence: Congruence,
) -> Result<CountTable> {
    classify_table_with_budget(width, tile, lengths, mode, congruence, None)
}

/// As [`classify_table`], with a per-row enumeration node budget.
pub fn classify_table_with_budget(
    width: usize,
    tile: TileShape,
    lengths: RangeInclusive<usize>,
    mode: ClassMode,
    congruence: Congruence,
    max_nodes: Option<u64>,
) -> Result<CountTable> {
    if lengths.is_empty() {
        return Err(Error::contract("length range is empty"));
    }
    let floors = lengths
        .map(|n| FloorSpec::new(width, n, tile))
        .collect::<Result<Vec<_>>>()?;
    let mut rows: BTreeMap<usize, ClassCounts> = floors
        .into_par_iter()
        .filter(FloorSpec::matching_condition)
        .map(|f| classify_row(f, mode, congruence, max_nodes).map(|row| (f.length(), row)))
        .collect::<Result<_>>()?;
    let columns = rows.values().map(|r| r.counts().len()).max().unwrap_or(1);
    for row in rows.values_mut() {
        row.pad_to(columns);
    }
    Ok(CountTable {
        width,
        tile,
        mode,
        congruence,
        rows,
    })
}
