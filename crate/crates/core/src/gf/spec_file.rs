//! Plain-text generating-function files.
//!
//! A file holds blocks separated by blank lines; `#` starts a comment. Each
//! line of a block is `key: value`:
//!
//! | key          | value                                                   |
//! |--------------|---------------------------------------------------------|
//! | `name`       | label used in reports (required)                        |
//! | `status`     | `theorem` or `conjecture`                               |
//! | `tile`       | tile shape `AxB` the data is computed for               |
//! | `width`      | floor width                                             |
//! | `classify`   | `tatami` or `slide`                                     |
//! | `congruence` | `full` or `incongruent`                                 |
//! | `column`     | `total` or `c<k>`                                       |
//! | `offset`     | first length compared (default 1)                       |
//! | `terms`      | number of lengths compared                              |
//! | `poly`       | additive polynomial part                                |
//! | `num`, `den` | one rational term; repeated pairs are summed            |
//!
//! Coefficient lists are space-separated integers in ascending powers of
//! `z`. Rational constants are folded into `den`, so `(1/13)(5+2z)/(1+z)`
//! is written `num: 5 2` and `den: 13 13`.
//!
//! `tile`, `width`, `classify`, `congruence` and `column` together bind the
//! function to computed data; they must appear together or not at all.

use std::str::FromStr;

use num_bigint::BigInt;

use super::poly::Polynomial;
use super::rational::RationalGF;
use crate::classify::{ClassMode, Congruence};
use crate::error::{Error, Result};
use crate::table_io::Column;
use crate::tiling::TileShape;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GfStatus {
    Theorem,
    Conjecture,
}

/// The count column a generating function describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DataBinding {
    pub tile: TileShape,
    pub width: usize,
    pub mode: ClassMode,
    pub congruence: Congruence,
    pub column: Column,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfSpec {
    pub name: String,
    pub status: Option<GfStatus>,
    pub binding: Option<DataBinding>,
    pub offset: usize,
    pub terms: Option<usize>,
    pub gf: RationalGF,
}

fn coefficients(line: usize, value: &str) -> Result<Polynomial> {
    let coeffs = value
        .split_whitespace()
        .map(|t| {
            BigInt::from_str(t).map_err(|_| Error::parse(line, format!("`{t}` is not an integer")))
        })
        .collect::<Result<Vec<_>>>()?;
    if coeffs.is_empty() {
        return Err(Error::parse(line, "empty coefficient list"));
    }
    Ok(Polynomial::new(coeffs))
}

#[derive(Default)]
struct Block {
    first_line: usize,
    name: Option<String>,
    status: Option<GfStatus>,
    tile: Option<TileShape>,
    width: Option<usize>,
    mode: Option<ClassMode>,
    congruence: Option<Congruence>,
    column: Option<Column>,
    offset: Option<usize>,
    terms: Option<usize>,
    poly: Option<Polynomial>,
    pending_num: Option<(usize, Polynomial)>,
    terms_gf: Vec<RationalGF>,
}

fn set<T>(slot: &mut Option<T>, line: usize, key: &str, value: T) -> Result<()> {
    if slot.replace(value).is_some() {
        return Err(Error::parse(line, format!("duplicate `{key}`")));
    }
    Ok(())
}

fn number(line: usize, value: &str) -> Result<usize> {
    value
        .parse()
        .map_err(|_| Error::parse(line, format!("`{value}` is not a non-negative integer")))
}

impl Block {
    fn line(&mut self, line: usize, key: &str, value: &str) -> Result<()> {
        if self.pending_num.is_some() && key != "den" {
            return Err(Error::parse(line, "`num` must be followed by `den`"));
        }
        match key {
            "name" => set(&mut self.name, line, key, value.to_string()),
            "status" => {
                let s = match value {
                    "theorem" => GfStatus::Theorem,
                    "conjecture" => GfStatus::Conjecture,
                    _ => return Err(Error::parse(line, format!("unknown status `{value}`"))),
                };
                set(&mut self.status, line, key, s)
            }
            "tile" => {
                let t = value
                    .parse()
                    .map_err(|e: Error| Error::parse(line, e.to_string()))?;
                set(&mut self.tile, line, key, t)
            }
            "width" => set(&mut self.width, line, key, number(line, value)?),
            "classify" => {
                let m = match value {
                    "tatami" => ClassMode::Tatami,
                    "slide" => ClassMode::SlideLines,
                    _ => return Err(Error::parse(line, format!("unknown mode `{value}`"))),
                };
                set(&mut self.mode, line, key, m)
            }
            "congruence" => {
                let c = match value {
                    "full" => Congruence::Full,
                    "incongruent" => Congruence::Incongruent,
                    _ => return Err(Error::parse(line, format!("unknown congruence `{value}`"))),
                };
                set(&mut self.congruence, line, key, c)
            }
            "column" => {
                let c = value.parse().map_err(|e: String| Error::parse(line, e))?;
                set(&mut self.column, line, key, c)
            }
            "offset" => set(&mut self.offset, line, key, number(line, value)?),
            "terms" => set(&mut self.terms, line, key, number(line, value)?),
            "poly" => set(&mut self.poly, line, key, coefficients(line, value)?),
            "num" => {
                self.pending_num = Some((line, coefficients(line, value)?));
                Ok(())
            }
            "den" => {
                let (_, num) = self
                    .pending_num
                    .take()
                    .ok_or_else(|| Error::parse(line, "`den` without a preceding `num`"))?;
                let den = coefficients(line, value)?;
                let term =
                    RationalGF::new(num, den).map_err(|e| Error::parse(line, e.to_string()))?;
                self.terms_gf.push(term);
                Ok(())
            }
            _ => Err(Error::parse(line, format!("unknown key `{key}`"))),
        }
    }

    fn finish(self) -> Result<GfSpec> {
        let at = self.first_line;
        if let Some((line, _)) = self.pending_num {
            return Err(Error::parse(line, "`num` without `den`"));
        }
        let name = self
            .name
            .ok_or_else(|| Error::parse(at, "block has no `name`"))?;
        if self.poly.is_none() && self.terms_gf.is_empty() {
            return Err(Error::parse(
                at,
                format!("`{name}` has no `poly` or `num`/`den`"),
            ));
        }
        let mut gf = RationalGF::polynomial(self.poly.unwrap_or_default());
        for t in &self.terms_gf {
            gf = gf.add(t);
        }
        let binding = match (
            self.tile,
            self.width,
            self.mode,
            self.congruence,
            self.column,
        ) {
            (Some(tile), Some(width), Some(mode), Some(congruence), Some(column)) => {
                Some(DataBinding {
                    tile,
                    width,
                    mode,
                    congruence,
                    column,
                })
            }
            (None, None, None, None, None) => None,
            _ => {
                return Err(Error::parse(
                    at,
                    format!("`{name}`: tile, width, classify, congruence and column go together"),
                ))
            }
        };
        Ok(GfSpec {
            name,
            status: self.status,
            binding,
            offset: self.offset.unwrap_or(1),
            terms: self.terms,
            gf,
        })
    }
}

/// Parses every block of a generating-function file.
pub fn parse_gf_specs(text: &str) -> Result<Vec<GfSpec>> {
    let mut specs = Vec::new();
    let mut block: Option<Block> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            // Only a truly blank line ends a block; comment lines do not.
            if raw.trim().is_empty() {
                if let Some(b) = block.take() {
                    specs.push(b.finish()?);
                }
            }
            continue;
        }
        let (key, value) = content
            .split_once(':')
            .ok_or_else(|| Error::parse(line, "expected `key: value`"))?;
        let b = block.get_or_insert_with(|| Block {
            first_line: line,
            ..Block::default()
        });
        b.line(line, key.trim(), value.trim())?;
    }
    if let Some(b) = block {
        specs.push(b.finish()?);
    }
    Ok(specs)
}
