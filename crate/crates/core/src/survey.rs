//! Exhaustive enumeration tables over families of ideals.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use serde::Serialize;

use crate::equigen::{all_sets, masiproves_formula, r_equigen};
use crate::error::{Error, Result};
use crate::reduction::{d_points, three_gen_reduction_number};

/// Largest `a` accepted by [`m_table`].
pub const M_TABLE_LIMIT: u64 = 22;

/// Counts of ideals bucketed by reduction number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyTable {
    pub parameter: String,
    pub buckets: BTreeMap<u64, u64>,
    pub total: u64,
}

/// One CSV/JSON row of a [`SurveyTable`]: `count / total` in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub parameter: String,
    pub j: u64,
    pub count: u64,
    pub total: u64,
    pub ratio_num: u64,
    pub ratio_den: u64,
}

impl SurveyTable {
    pub fn count(&self, j: u64) -> u64 {
        self.buckets.get(&j).copied().unwrap_or(0)
    }

    pub fn ratio(&self, j: u64) -> Ratio<u64> {
        Ratio::new(self.count(j), self.total)
    }

    pub fn rows(&self) -> Vec<SurveyRow> {
        self.buckets
            .iter()
            .map(|(&j, &count)| {
                let r = self.ratio(j);
                SurveyRow {
                    parameter: self.parameter.clone(),
                    j,
                    count,
                    total: self.total,
                    ratio_num: *r.numer(),
                    ratio_den: *r.denom(),
                }
            })
            .collect()
    }
}

fn bucket<I: IntoIterator<Item = u64>>(parameter: String, rs: I) -> SurveyTable {
    let mut buckets = BTreeMap::new();
    let mut total = 0;
    for r in rs {
        *buckets.entry(r).or_insert(0) += 1;
        total += 1;
    }
    SurveyTable {
        parameter,
        buckets,
        total,
    }
}

/// Reduction numbers of all `2^(a-1)` quasi-equigenerated ideals in `I_{a,a}`.
pub fn m_table(a: u64) -> Result<SurveyTable> {
    if a < 2 {
        return Err(Error::OutOfRange("m_table needs a >= 2".into()));
    }
    if a > M_TABLE_LIMIT {
        return Err(Error::OutOfRange(format!(
            "m_table is exhaustive; a <= {M_TABLE_LIMIT}"
        )));
    }
    let rs = reduction_numbers(a)?;
    Ok(bucket(a.to_string(), rs))
}

#[cfg(feature = "parallel")]
fn reduction_numbers(a: u64) -> Result<Vec<u64>> {
    use crate::equigen::ExponentSet;
    use rayon::prelude::*;
    let sets: Vec<ExponentSet> = all_sets(a).collect();
    sets.par_iter().map(r_equigen).collect()
}

#[cfg(not(feature = "parallel"))]
fn reduction_numbers(a: u64) -> Result<Vec<u64>> {
    all_sets(a).map(|s| r_equigen(&s)).collect()
}

/// The `a - 1` three-generated ideals `I_{{0,e,a}}` of `I_{a,a}`, bucketed by
/// `a / gcd(e, a) - 1`.
pub fn n_table(a: u64) -> Result<SurveyTable> {
    if a < 2 {
        return Err(Error::OutOfRange("n_table needs a >= 2".into()));
    }
    let rs = (1..a)
        .map(|e| masiproves_formula(a, e))
        .collect::<Result<Vec<_>>>()?;
    Ok(bucket(a.to_string(), rs))
}

/// Euler's totient by trial division.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1, "totient(0) is undefined");
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn divisor_count(n: u64) -> u64 {
    (1..=n).filter(|&d| n.is_multiple_of(d)).count() as u64
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// `{ r(x^a, y^b, u_p) : p in D_{a,b} }`.
pub fn r_set(a: u64, b: u64) -> Result<BTreeSet<u64>> {
    if a < 2 || b < 2 {
        return Err(Error::OutOfRange("r_set needs a, b >= 2".into()));
    }
    d_points(a, b)
        .iter()
        .map(|p| three_gen_reduction_number(a, b, p))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OurLimits {
    pub p: u64,
    pub set: BTreeSet<u64>,
    /// `(p - 1) - |R_(p,p)|`.
    pub gap: u64,
    /// `(p - 1)/2 - 1`.
    pub bound: u64,
    pub holds: bool,
}

pub fn ourlimits_check(p: u64) -> Result<OurLimits> {
    if p <= 2 || !is_prime(p) {
        return Err(Error::OutOfRange(format!("{p} is not an odd prime")));
    }
    let set = r_set(p, p)?;
    let gap = (p - 1) - set.len() as u64;
    let bound = (p - 1) / 2 - 1;
    Ok(OurLimits {
        p,
        gap,
        bound,
        holds: gap >= bound,
        set,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialNight {
    pub a: u64,
    pub bmax: u64,
    pub covered: BTreeSet<u64>,
    pub complete: bool,
}

/// Union of `R_(a,b)` over `a <= b <= bmax`, compared with `[1, a-1]`.
pub fn specialnight_check(a: u64, bmax: u64) -> Result<SpecialNight> {
    if a < 2 || bmax < a {
        return Err(Error::OutOfRange(
            "specialnight_check needs 2 <= a <= bmax".into(),
        ));
    }
    let mut covered = BTreeSet::new();
    for b in a..=bmax {
        covered.extend(r_set(a, b)?);
    }
    let complete = covered.iter().copied().eq(1..a);
    Ok(SpecialNight {
        a,
        bmax,
        covered,
        complete,
    })
}

/// Divisors of `a` other than `a`; the predicted size of the
/// reduction-number-one bucket of [`m_table`].
pub fn proper_divisor_count(a: u64) -> u64 {
    divisor_count(a) - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    #[test]
    fn m_table_examples() {
        assert_eq!(m_table(5).unwrap().total, 16);
        assert_eq!(m_table(6).unwrap().count(1), 3);
        let t = m_table(4).unwrap();
        assert!((1..=3).all(|j| t.count(j) > 0));
        let three_gen_max = (1..4)
            .filter(|&e| masiproves_formula(4, e).unwrap() == 3)
            .count();
        assert_eq!(three_gen_max as u64, totient(4));
        assert!(m_table(1).is_err());
        assert!(m_table(M_TABLE_LIMIT + 1).is_err());
    }

    #[test]
    fn buckets_sum_to_total() {
        for a in 2..=10 {
            let t = m_table(a).unwrap();
            assert_eq!(t.buckets.values().sum::<u64>(), t.total);
            let rows = t.rows();
            assert_eq!(rows.iter().map(|r| r.count).sum::<u64>(), t.total);
        }
    }

    #[test]
    fn n_table_examples() {
        assert_eq!(n_table(10).unwrap().count(9), 4);
        assert_eq!(n_table(7).unwrap().count(6), 6);
        let t = n_table(2).unwrap();
        assert_eq!((t.total, t.count(1)), (1, 1));
    }

    #[test]
    fn totient_values() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(12), 4);
        for p in [2, 3, 5, 7, 11, 13, 97] {
            assert_eq!(totient(p), p - 1);
        }
        // Oracle: direct gcd count.
        for n in 1..200u64 {
            let direct = (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64;
            assert_eq!(totient(n), direct);
        }
    }

    #[test]
    fn r_set_examples() {
        assert_eq!(r_set(5, 7).unwrap(), BTreeSet::from([1, 2, 3, 4]));
        assert!(!r_set(7, 10).unwrap().contains(&5));
        assert_eq!(r_set(2, 2).unwrap(), BTreeSet::from([1]));
    }

    #[test]
    fn ourlimits_examples() {
        let o = ourlimits_check(5).unwrap();
        assert!(o.set.len() <= 3 && o.gap >= 1 && o.holds);
        assert!(ourlimits_check(7).unwrap().gap >= 2);
        let o = ourlimits_check(3).unwrap();
        assert_eq!(o.bound, 0);
        assert!(o.holds);
        assert!(ourlimits_check(9).is_err());
        assert!(ourlimits_check(2).is_err());
    }

    #[test]
    fn specialnight_examples() {
        let s = specialnight_check(4, 8).unwrap();
        assert_eq!(s.covered, BTreeSet::from([1, 2, 3]));
        assert!(s.complete);
        let s = specialnight_check(2, 2).unwrap();
        assert_eq!(s.covered, BTreeSet::from([1]));
        assert!(s.complete);
        assert!(specialnight_check(7, 14).unwrap().complete);
    }

    #[test]
    fn divisor_helpers() {
        assert_eq!(divisor_count(12), 6);
        assert_eq!(proper_divisor_count(6), 3);
        assert!(is_prime(13) && !is_prime(1) && !is_prime(15));
    }
}
