use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Polynomial;
use super::rational::{RationalGF, SeriesPrefix};

/// Outcome of fitting a constant-coefficient linear recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecurrenceGuess {
    /// `a_k = c_1 a_{k-1} + ... + c_d a_{k-d}` holds on every observed term.
    Found {
        coefficients: Vec<BigInt>,
        gf: RationalGF,
    },
    /// No order up to the limit fits.
    NoneFound,
    /// Too few terms to accept or rule out an order up to the limit.
    InsufficientData,
}

/// Solves `A c = b` exactly. Free variables are set to zero. Returns `None`
/// when the system is inconsistent.
fn solve(mut rows: Vec<Vec<BigRational>>, unknowns: usize) -> Option<Vec<BigRational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..unknowns {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot).skip(col) {
                    *v -= p * &factor;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); unknowns];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = rows[i][unknowns].clone();
    }
    Some(x)
}

/// Least-order recurrence with integer coefficients fitting `observed`.
///
/// Order `d` is only accepted when the fit has at least `d` equations beyond
/// the `d` needed to determine it, so at least `3d` terms are required.
/// Fewer than `2 * max_order + 1` terms is always insufficient.
pub fn guess_recurrence(observed: &SeriesPrefix, max_order: usize) -> RecurrenceGuess {
    let a: Vec<BigRational> = observed
        .values
        .iter()
        .cloned()
        .map(BigRational::from_integer)
        .collect();
    let len = a.len();
    if max_order == 0 || len < 2 * max_order + 1 {
        return RecurrenceGuess::InsufficientData;
    }
    let mut undetermined = false;
    for d in 1..=max_order {
        let rows: Vec<Vec<BigRational>> = (d..len)
            .map(|k| {
                let mut row: Vec<BigRational> = (1..=d).map(|j| a[k - j].clone()).collect();
                row.push(a[k].clone());
                row
            })
            .collect();
        let Some(c) = solve(rows, d) else { continue };
        if len - d < 2 * d {
            undetermined = true;
            continue;
        }
        if !c.iter().all(BigRational::is_integer) {
            continue;
        }
        let coefficients: Vec<BigInt> = c.iter().map(BigRational::to_integer).collect();
        return RecurrenceGuess::Found {
            gf: candidate_gf(observed, &coefficients),
            coefficients,
        };
    }
    if undetermined {
        RecurrenceGuess::InsufficientData
    } else {
        RecurrenceGuess::NoneFound
    }
}

/// `z^offset ((D A) mod z^d) / D` with `D = 1 - c_1 z - ... - c_d z^d`.
fn candidate_gf(observed: &SeriesPrefix, c: &[BigInt]) -> RationalGF {
    let mut den = vec![BigInt::one()];
    den.extend(c.iter().map(|ci| -ci));
    let den = Polynomial::new(den);
    let a = Polynomial::new(observed.values.clone());
    let num = (&den * &a).truncate(c.len()).shift(observed.offset);
    RationalGF::new(num, den).expect("denominator has constant term 1")
}
