//! Checking generating functions against count data.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::classify::{classify_row, ClassMode, Congruence};
use crate::error::Result;
use crate::gf::spec_file::{DataBinding, GfSpec};
use crate::gf::{verify_gf, VerificationReport};
use crate::oracle::transfer_count;
use crate::table_io::{column_series, Column, DataRow};
use crate::tiling::{FloorSpec, TileShape};

/// Where the observed coefficients come from.
#[derive(Debug, Clone)]
pub enum DataSource {
    /// Enumerate (or, for full totals, run the profile DP) per binding.
    Computed { max_nodes: Option<u64> },
    /// One table used for every generating function.
    Rows(Vec<DataRow>),
}

pub type TableKey = (TileShape, usize, ClassMode, Congruence, bool);

fn key(b: &DataBinding) -> TableKey {
    let totals_only = b.column == Column::Total && b.congruence == Congruence::Full;
    (b.tile, b.width, b.mode, b.congruence, totals_only)
}

fn compute_rows(k: TableKey, last: usize, max_nodes: Option<u64>) -> Result<Vec<DataRow>> {
    let (tile, width, mode, congruence, totals_only) = k;
    (1..=last)
        .into_par_iter()
        .map(|n| {
            let floor = FloorSpec::new(width, n, tile)?;
            if totals_only {
                return Ok(DataRow {
                    n,
                    total: transfer_count(floor)?,
                    classes: Vec::new(),
                    representative_dependent: false,
                });
            }
            let row = classify_row(floor, mode, congruence, max_nodes)?;
            Ok(DataRow {
                n,
                total: row.total(),
                classes: row.counts().to_vec(),
                representative_dependent: row.is_representative_dependent(),
            })
        })
        .collect()
}

/// Computed rows for lengths `1..=last` of every distinct binding among
/// `specs`, sharing work between functions bound to the same table.
pub fn compute_bound_tables(
    specs: &[GfSpec],
    max_nodes: Option<u64>,
) -> Result<HashMap<TableKey, Vec<DataRow>>> {
    let mut need: HashMap<TableKey, usize> = HashMap::new();
    for s in specs {
        let Some(b) = &s.binding else { continue };
        let last = (s.offset + s.terms.unwrap_or(0)).saturating_sub(1);
        let entry = need.entry(key(b)).or_insert(0);
        *entry = (*entry).max(last);
    }
    need.into_par_iter()
        .map(|(k, last)| Ok((k, compute_rows(k, last, max_nodes)?)))
        .collect()
}

/// One report per generating function. Under [`DataSource::Computed`] an unbound
/// function reports insufficient data.
pub fn check_specs(specs: &[GfSpec], source: &DataSource) -> Result<Vec<VerificationReport>> {
    let tables = match source {
        DataSource::Computed { max_nodes } => compute_bound_tables(specs, *max_nodes)?,
        DataSource::Rows(_) => HashMap::new(),
    };
    let reports = specs
        .iter()
        .map(|s| {
            let (rows, column): (&[DataRow], Column) = match (source, &s.binding) {
                (DataSource::Rows(rows), b) => (rows, b.map_or(Column::Total, |b| b.column)),
                (DataSource::Computed { .. }, Some(b)) => (&tables[&key(b)], b.column),
                (DataSource::Computed { .. }, None) => (&[], Column::Total),
            };
            let observed = column_series(rows, column, s.offset, s.terms);
            verify_gf(&s.name, &s.gf, &observed)
        })
        .collect();
    Ok(reports)
}
