use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Polynomial;
use crate::error::{Error, Result};
use crate::Count;

/// `poly + num / den` with integer coefficients and `den(0) != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    poly: Polynomial,
    num: Polynomial,
    den: Polynomial,
}

impl RationalGF {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        RationalGF::with_poly(Polynomial::zero(), num, den)
    }

    /// A rational function with an additive polynomial part.
    pub fn with_poly(poly: Polynomial, num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.coeff(0).is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(RationalGF { poly, num, den })
    }

    pub fn polynomial(poly: Polynomial) -> Self {
        RationalGF {
            poly,
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    /// Exact sum over a common denominator (the product of both).
    pub fn add(&self, other: &RationalGF) -> RationalGF {
        let poly = &self.poly + &other.poly;
        let (num, den) = if other.num.is_zero() {
            (self.num.clone(), self.den.clone())
        } else if self.num.is_zero() {
            (other.num.clone(), other.den.clone())
        } else if self.den == other.den {
            (&self.num + &other.num, self.den.clone())
        } else {
            (
                &(&self.num * &other.den) + &(&other.num * &self.den),
                &self.den * &other.den,
            )
        };
        RationalGF { poly, num, den }
    }

    /// Multiplies by the rational constant `p / q`. The polynomial part is
    /// folded into the numerator when `q != 1`.
    pub fn scale(&self, p: &BigInt, q: &BigInt) -> Result<RationalGF> {
        if q.is_zero() {
            return Err(Error::contract("scale by a fraction with zero denominator"));
        }
        if q.is_one() {
            return Ok(RationalGF {
                poly: self.poly.scale(p),
                num: self.num.scale(p),
                den: self.den.clone(),
            });
        }
        let num = &self.num + &(&self.poly * &self.den);
        Ok(RationalGF {
            poly: Polynomial::zero(),
            num: num.scale(p),
            den: self.den.scale(q),
        })
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> RationalGF {
        RationalGF {
            poly: self.poly.shift(k),
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    /// First `count` Maclaurin coefficients as exact rationals.
    pub fn expand_exact(&self, count: usize) -> Vec<BigRational> {
        let d0 = self.den.coeff(0);
        let den = self.den.coeffs();
        let mut out: Vec<BigRational> = Vec::with_capacity(count);
        if d0.abs().is_one() {
            // Integer long division.
            let mut q: Vec<BigInt> = Vec::with_capacity(count);
            for k in 0..count {
                let mut acc = self.num.coeff(k);
                for (j, dj) in den.iter().enumerate().take(k + 1).skip(1) {
                    acc -= dj * &q[k - j];
                }
                q.push(acc * &d0);
            }
            out.extend(q.into_iter().map(BigRational::from_integer));
        } else {
            let d0 = BigRational::from_integer(d0);
            for k in 0..count {
                let mut acc = BigRational::from_integer(self.num.coeff(k));
                for (j, dj) in den.iter().enumerate().take(k + 1).skip(1) {
                    acc -= &out[k - j] * dj;
                }
                out.push(acc / &d0);
            }
        }
        for (k, c) in out.iter_mut().enumerate() {
            *c += BigRational::from_integer(self.poly.coeff(k));
        }
        out
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.poly.is_zero() {
            write!(f, "{} + ", self.poly)?;
        }
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Consecutive series coefficients starting at index `offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPrefix {
    pub offset: usize,
    pub values: Vec<BigInt>,
}

impl SeriesPrefix {
    pub fn new(offset: usize, values: Vec<BigInt>) -> Self {
        SeriesPrefix { offset, values }
    }

    pub fn from_counts(offset: usize, values: &[Count]) -> Self {
        SeriesPrefix::new(offset, values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// One past the last covered index.
    pub fn end(&self) -> usize {
        self.offset + self.values.len()
    }

    /// Coefficient at absolute index `n`, if covered.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(self.offset).and_then(|i| self.values.get(i))
    }
}

/// First `count` coefficients of `gf`, which must all be integers.
pub fn series_expand(gf: &RationalGF, count: usize) -> Result<SeriesPrefix> {
    let values = gf
        .expand_exact(count)
        .into_iter()
        .enumerate()
        .map(|(index, c)| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::NonIntegral { index })
            }
        })
        .collect::<Result<_>>()?;
    Ok(SeriesPrefix::new(0, values))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerificationStatus {
    Match,
    /// First disagreement at series index `index`: the generating function
    /// predicts `expected`, the data holds `found`.
    MismatchAt {
        index: usize,
        expected: BigRational,
        found: BigRational,
    },
    InsufficientData,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub name: String,
    pub terms_checked: usize,
    pub status: VerificationStatus,
}

impl VerificationReport {
    pub fn is_match(&self) -> bool {
        self.status == VerificationStatus::Match
    }
}

fn show(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        q.to_string()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            VerificationStatus::Match => {
                write!(f, "{}: match ({} terms)", self.name, self.terms_checked)
            }
            VerificationStatus::MismatchAt {
                index,
                expected,
                found,
            } => write!(
                f,
                "{}: mismatch at n={index}: expected {}, found {} ({} terms checked)",
                self.name,
                show(expected),
                show(found),
                self.terms_checked
            ),
            VerificationStatus::InsufficientData => write!(f, "{}: insufficient data", self.name),
        }
    }
}

fn compare(
    name: &str,
    offset: usize,
    expected: &[BigRational],
    found: impl Iterator<Item = BigRational>,
) -> VerificationReport {
    let mut checked = 0;
    for (i, got) in found.enumerate() {
        checked += 1;
        let want = &expected[offset + i];
        if *want != got {
            return VerificationReport {
                name: name.to_string(),
                terms_checked: checked,
                status: VerificationStatus::MismatchAt {
                    index: offset + i,
                    expected: want.clone(),
                    found: got,
                },
            };
        }
    }
    let status = if checked == 0 {
        VerificationStatus::InsufficientData
    } else {
        VerificationStatus::Match
    };
    VerificationReport {
        name: name.to_string(),
        terms_checked: checked,
        status,
    }
}

/// Compares the expansion of `gf` with `observed` at the indices it covers.
pub fn verify_gf(name: &str, gf: &RationalGF, observed: &SeriesPrefix) -> VerificationReport {
    let expected = gf.expand_exact(observed.end());
    let found = observed
        .values
        .iter()
        .cloned()
        .map(BigRational::from_integer);
    compare(name, observed.offset, &expected, found)
}

/// Checks that the column generating functions sum to `total` on the first
/// `terms` coefficients.
pub fn verify_sum_rule(
    name: &str,
    columns: &[RationalGF],
    total: &RationalGF,
    terms: usize,
) -> VerificationReport {
    let expected = total.expand_exact(terms);
    let mut sum = vec![BigRational::zero(); terms];
    for col in columns {
        for (s, c) in sum.iter_mut().zip(col.expand_exact(terms)) {
            *s += c;
        }
    }
    compare(name, 0, &expected, sum.into_iter())
}
