use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::Count;

/// One partition's contribution to the invert transform.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionTerm {
    /// Parts in ascending order.
    pub parts: Vec<usize>,
    /// Number of distinct orderings of the parts.
    pub multinomial: Count,
    /// `multinomial` times the product of slide-free counts of the parts.
    pub contribution: Count,
}

/// Partitions of `m` as lists of parts, largest parts first.
fn partitions(m: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// `k! / prod(alpha_i!)` for the multiplicities of the parts.
fn multinomial(parts: &[usize]) -> Result<Count> {
    let overflow = || Error::Overflow("computing a multinomial coefficient");
    let mut result: Count = 1;
    let mut placed: Count = 0;
    let mut i = 0;
    while i < parts.len() {
        let run = parts[i..].iter().take_while(|&&p| p == parts[i]).count();
        // Multiply by binomial(placed + run, run) step by step; each partial
        // product is itself a binomial so the division is exact.
        for j in 1..=run as Count {
            placed += 1;
            result = result.checked_mul(placed).ok_or_else(overflow)? / j;
        }
        i += run;
    }
    Ok(result)
}

/// Per-partition terms of the invert transform for width `m`, length `n`.
/// With `parts` set, only partitions into exactly that many parts appear.
pub fn invert_transform_terms(
    hat_t0: &BTreeMap<(usize, usize), Count>,
    m: usize,
    n: usize,
    parts: Option<usize>,
) -> Result<Vec<PartitionTerm>> {
    if m == 0 {
        return Err(Error::contract("width must be positive"));
    }
    for w in 1..=m {
        if !hat_t0.contains_key(&(n, w)) {
            return Err(Error::MissingEntry {
                length: n,
                width: w,
            });
        }
    }
    let overflow = || Error::Overflow("evaluating the invert transform");
    partitions(m)
        .into_iter()
        .filter(|p| parts.is_none_or(|k| p.len() == k))
        .map(|mut p| {
            let multinomial = multinomial(&p)?;
            let contribution = p.iter().try_fold(multinomial, |acc, w| {
                acc.checked_mul(hat_t0[&(n, *w)]).ok_or_else(overflow)
            })?;
            p.reverse();
            Ok(PartitionTerm {
                parts: p,
                multinomial,
                contribution,
            })
        })
        .collect()
}

/// Sum over partitions `m = sum m_i` of the multinomial coefficient times
/// the product of slide-free counts `hat_t0[(n, m_i)]`. Restricting to
/// `parts = s + 1` parts counts tilings with exactly `s` slide lines.
pub fn invert_transform(
    hat_t0: &BTreeMap<(usize, usize), Count>,
    m: usize,
    n: usize,
    parts: Option<usize>,
) -> Result<Count> {
    invert_transform_terms(hat_t0, m, n, parts)?
        .iter()
        .try_fold(0 as Count, |acc, t| {
            acc.checked_add(t.contribution)
                .ok_or(Error::Overflow("evaluating the invert transform"))
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn slide_free(n: usize, values: &[Count]) -> BTreeMap<(usize, usize), Count> {
        values
            .iter()
            .enumerate()
            .map(|(i, &v)| ((n, i + 1), v))
            .collect()
    }

    /// Ordered compositions: f(k, p) = sum_j t0[j] f(k - j, p - 1).
    fn compositions(t0: &[Count], m: usize, parts: Option<usize>) -> Count {
        let mut f = vec![vec![0 as Count; m + 1]; m + 1];
        f[0][0] = 1;
        for k in 1..=m {
            for p in 1..=k {
                f[k][p] = (1..=k).map(|j| t0[j - 1] * f[k - j][p - 1]).sum();
            }
        }
        match parts {
            Some(p) => f[m][p],
            None => f[m].iter().sum(),
        }
    }

    #[test]
    fn width_four_length_twelve() {
        let t = slide_free(12, &[1, 232, 1666, 87748]);
        assert_eq!(invert_transform(&t, 4, 12, None).unwrap(), 145601);
        assert_eq!(compositions(&[1, 232, 1666, 87748], 4, None), 145601);
    }

    #[test]
    fn single_row_and_small_cases() {
        let t = slide_free(4, &[1]);
        assert_eq!(invert_transform(&t, 1, 4, None).unwrap(), 1);
        let t = slide_free(2, &[1, 1, 0]);
        assert_eq!(invert_transform(&t, 3, 2, Some(3)).unwrap(), 1);
        assert_eq!(invert_transform(&t, 3, 2, None).unwrap(), 3);
        let terms = invert_transform_terms(&t, 3, 2, None).unwrap();
        let shown: Vec<_> = terms
            .iter()
            .map(|t| (t.parts.clone(), t.contribution))
            .collect();
        assert_eq!(
            shown,
            vec![(vec![3], 0), (vec![1, 2], 2), (vec![1, 1, 1], 1)]
        );
    }

    #[test]
    fn matches_composition_count() {
        let t0: Vec<Count> = vec![3, 5, 0, 7, 11, 2];
        let t = slide_free(9, &t0);
        for m in 1..=6 {
            assert_eq!(
                invert_transform(&t, m, 9, None).unwrap(),
                compositions(&t0, m, None)
            );
            for p in 1..=m {
                assert_eq!(
                    invert_transform(&t, m, 9, Some(p)).unwrap(),
                    compositions(&t0, m, Some(p))
                );
            }
        }
    }

    #[test]
    fn partition_order_for_four() {
        let t = slide_free(1, &[1, 1, 1, 1]);
        let parts: Vec<_> = invert_transform_terms(&t, 4, 1, None)
            .unwrap()
            .into_iter()
            .map(|t| t.parts)
            .collect();
        assert_eq!(
            parts,
            vec![
                vec![4],
                vec![1, 3],
                vec![2, 2],
                vec![1, 1, 2],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn missing_entry() {
        let t = slide_free(4, &[1, 2]);
        assert_eq!(
            invert_transform(&t, 3, 4, None),
            Err(Error::MissingEntry {
                length: 4,
                width: 3
            })
        );
    }
}
