//! Text renderings of count tables and the matching reader.
//!
//! CSV has the header `n,total,c0,c1,...`. JSON is an object with the table
//! parameters and a `rows` array. Both emit an explicit zero row for every
//! length in the requested range that fails the matching condition, while
//! the aligned layout omits those lengths.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::classify::{ClassCounts, CountTable};
use crate::error::{Error, Result};
use crate::gf::SeriesPrefix;
use crate::Count;

/// Which value of a row a series is read from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Column {
    Total,
    Class(usize),
}

impl std::str::FromStr for Column {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "total" {
            return Ok(Column::Total);
        }
        s.strip_prefix('c')
            .and_then(|k| k.parse().ok())
            .map(Column::Class)
            .ok_or_else(|| format!("expected `total` or `c<k>`, got `{s}`"))
    }
}

/// One table row as read back from CSV or JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DataRow {
    pub n: usize,
    pub total: Count,
    pub classes: Vec<Count>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub representative_dependent: bool,
}

impl DataRow {
    pub fn value(&self, column: Column) -> Count {
        match column {
            Column::Total => self.total,
            Column::Class(k) => self.classes.get(k).copied().unwrap_or(0),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTable {
    tile: String,
    width: usize,
    mode: String,
    congruence: String,
    rows: Vec<DataRow>,
}

fn data_rows(table: &CountTable, lengths: RangeInclusive<usize>) -> Vec<DataRow> {
    let columns = table.columns();
    let zero = {
        let mut z = ClassCounts::new(table.mode);
        z.pad_to(columns);
        z
    };
    lengths
        .map(|n| {
            let row = table.rows.get(&n).unwrap_or(&zero);
            let mut classes = row.counts().to_vec();
            classes.resize(columns, 0);
            DataRow {
                n,
                total: row.total(),
                classes,
                representative_dependent: row.is_representative_dependent(),
            }
        })
        .collect()
}

/// Printed-table layout: `n`, the row total, then one column per class, each
/// right-aligned to its widest entry. Rows whose count depends on the orbit
/// representative carry a trailing `*`.
pub fn write_aligned(table: &CountTable) -> String {
    let columns = table.columns();
    let mut grid: Vec<Vec<String>> = Vec::with_capacity(table.rows.len() + 1);
    let mut header = vec!["n".to_string(), "T".to_string()];
    header.extend((0..columns).map(|k| k.to_string()));
    grid.push(header);
    for (n, row) in &table.rows {
        let mut cells = vec![n.to_string(), row.total().to_string()];
        cells.extend((0..columns).map(|k| row.get(k).to_string()));
        grid.push(cells);
    }
    let widths: Vec<usize> = (0..columns + 2)
        .map(|c| grid.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    let flags = grid.iter().skip(1).zip(table.rows.values());
    let flags: Vec<bool> = std::iter::once(false)
        .chain(flags.map(|(_, r)| r.is_representative_dependent()))
        .collect();
    for (cells, flagged) in grid.iter().zip(flags) {
        let line: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        out.push_str(&line.join(" "));
        if flagged {
            out.push_str(" *");
        }
        out.push('\n');
    }
    out
}

pub fn write_csv(table: &CountTable, lengths: RangeInclusive<usize>) -> String {
    let columns = table.columns();
    let mut out = String::from("n,total");
    for k in 0..columns {
        out.push_str(&format!(",c{k}"));
    }
    out.push('\n');
    for row in data_rows(table, lengths) {
        out.push_str(&format!("{},{}", row.n, row.total));
        for c in &row.classes {
            out.push_str(&format!(",{c}"));
        }
        out.push('\n');
    }
    out
}

pub fn write_json(table: &CountTable, lengths: RangeInclusive<usize>) -> String {
    let doc = JsonTable {
        tile: table.tile.to_string(),
        width: table.width,
        mode: table.mode.to_string(),
        congruence: table.congruence.to_string(),
        rows: data_rows(table, lengths),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("table serializes");
    s.push('\n');
    s
}

fn read_csv(text: &str) -> Result<Vec<DataRow>> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "empty table"))?;
    let names: Vec<&str> = header.split(',').map(str::trim).collect();
    if names.len() < 2 || names[0] != "n" || names[1] != "total" {
        return Err(Error::parse(hline + 1, "header must start with `n,total`"));
    }
    for (k, name) in names[2..].iter().enumerate() {
        if *name != format!("c{k}") {
            return Err(Error::parse(
                hline + 1,
                format!("unexpected column `{name}`"),
            ));
        }
    }
    lines
        .map(|(i, line)| {
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != names.len() {
                return Err(Error::parse(i + 1, "wrong number of fields"));
            }
            let num = |s: &str| {
                s.parse::<Count>()
                    .map_err(|e| Error::parse(i + 1, format!("`{s}`: {e}")))
            };
            Ok(DataRow {
                n: fields[0]
                    .parse()
                    .map_err(|e| Error::parse(i + 1, format!("`{}`: {e}", fields[0])))?,
                total: num(fields[1])?,
                classes: fields[2..].iter().map(|s| num(s)).collect::<Result<_>>()?,
                representative_dependent: false,
            })
        })
        .collect()
}

/// Reads a CSV or JSON table as written by [`write_csv`] or [`write_json`].
pub fn read_table(text: &str) -> Result<Vec<DataRow>> {
    if text.trim_start().starts_with('{') {
        let doc: JsonTable =
            serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
        Ok(doc.rows)
    } else {
        read_csv(text)
    }
}

/// Consecutive values of `column` for lengths `offset..offset + terms`
/// (all rows from `offset` on when `terms` is `None`). Missing lengths end
/// the series.
pub fn column_series(
    rows: &[DataRow],
    column: Column,
    offset: usize,
    terms: Option<usize>,
) -> SeriesPrefix {
    let mut values = Vec::new();
    let mut n = offset;
    let end = terms.map(|t| offset + t);
    while end.is_none_or(|e| n < e) {
        match rows.iter().find(|r| r.n == n) {
            Some(r) => values.push(BigInt::from(r.value(column))),
            None => break,
        }
        n += 1;
    }
    SeriesPrefix::new(offset, values)
}
