//! Reduction numbers of powers `I^k`, whose minimal monomial reduction is
//! `(x^(ka), y^(kb))`.

use serde::Serialize;

use crate::equigen::{power_set, r_equigen, r_equigen_capped, ExponentSet};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::reduction::{reduction_number_value, FramedIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerProfile {
    /// `rs[k-1] = r(I^k)` for `k = 1..=kmax`.
    pub rs: Vec<u64>,
    /// Least `k` with `r(I^k) = 1`, if one was found within the search range.
    pub c_index: Option<u64>,
    /// Last `k` examined while looking for `c_index`.
    pub searched_to: u64,
}

impl PowerProfile {
    pub fn r(&self, k: u64) -> Option<u64> {
        self.rs
            .get(usize::try_from(k).ok()?.checked_sub(1)?)
            .copied()
    }
}

/// `⌈(r - 1)/k⌉ + 1`, the bound on `r(I^k)` in terms of `r = r(I)`.
pub fn power_bound(r: u64, k: u64) -> u64 {
    assert!(k >= 1);
    if r == 0 {
        // ⌈-1/k⌉ = 0
        1
    } else {
        (r - 1).div_ceil(k) + 1
    }
}

fn equigenerated_profile(set: &ExponentSet, kmax: u64) -> Result<Vec<u64>> {
    (1..=kmax).map(|k| r_equigen(&power_set(set, k)?)).collect()
}

/// `r(I^k)` for `k = 1..=kmax`.
///
/// Quasi-equigenerated ideals go through `kA` sumsets; everything else
/// through monomial powers with each reduction number searched below `cap`.
pub fn power_profile(f: &FramedIdeal, kmax: u64, cap: u64) -> Result<PowerProfile> {
    if kmax == 0 {
        return Err(Error::OutOfRange("kmax must be at least 1".into()));
    }
    if f.is_quasi_equigenerated() {
        let set = ExponentSet::from_ideal(f)?;
        let mut rs = (1..=kmax)
            .map(|k| r_equigen_capped(&power_set(&set, k)?, cap))
            .collect::<Result<Vec<_>>>()?;
        let mut c_index = first_one(&rs);
        let mut searched_to = kmax;
        // With gcd(A) = 1, stabilization happens by k = g - 2 if at all.
        if c_index.is_none() && set.gcd() == 1 {
            let horizon = set.g().saturating_sub(2).max(kmax);
            for k in kmax + 1..=horizon {
                let r = r_equigen_capped(&power_set(&set, k)?, cap)?;
                searched_to = k;
                if r == 1 {
                    c_index = Some(k);
                    break;
                }
            }
        }
        rs.truncate(kmax as usize);
        return Ok(PowerProfile {
            rs,
            c_index,
            searched_to,
        });
    }

    let mut rs = Vec::with_capacity(kmax as usize);
    let mut pow = f.clone();
    for k in 1..=kmax {
        if k > 1 {
            let ideal = pow.ideal().product(f.ideal())?;
            pow = FramedIdeal::new(ideal)?;
            debug_assert_eq!((pow.a(), pow.b()), (k * f.a(), k * f.b()));
        }
        rs.push(reduction_number_value(&pow, cap)?);
    }
    let c_index = first_one(&rs);
    Ok(PowerProfile {
        rs,
        c_index,
        searched_to: kmax,
    })
}

fn first_one(rs: &[u64]) -> Option<u64> {
    rs.iter().position(|&r| r == 1).map(|i| i as u64 + 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelatedReport {
    /// `{0, 1, g-1, g} ⊆ A`.
    pub eventually_one: bool,
    pub c_index: Option<u64>,
    /// Some computed power has reduction number one.
    pub some_power_one: bool,
    /// Every computed power from `max(1, g-2)` on has reduction number one.
    pub one_from_g_minus_2: bool,
    /// After the first power with reduction number one, all later ones are one.
    pub once_one_always_one: bool,
    pub profile: Vec<u64>,
}

impl RelatedReport {
    /// The three equivalent conditions agree and stabilization is permanent.
    pub fn consistent(&self) -> bool {
        self.eventually_one == self.some_power_one
            && self.eventually_one == self.one_from_g_minus_2
            && self.once_one_always_one
    }
}

/// Checks the stabilization criterion for `I_A` with `gcd(A) = 1`: powers
/// reach reduction number one iff `{0, 1, g-1, g} ⊆ A`, and then do so for
/// every `k >= g - 2`. Powers are computed for `k <= max(g - 2, 1) + kmax`.
pub fn related_check(set: &ExponentSet, kmax: u64) -> Result<RelatedReport> {
    if set.gcd() != 1 {
        return Err(Error::OutOfRange(format!(
            "gcd(A) = {} but 1 is required",
            set.gcd()
        )));
    }
    let g = set.g();
    if g < 2 {
        return Err(Error::OutOfRange("g >= 2 is required".into()));
    }
    let eventually_one = [0, 1, g - 1, g].iter().all(|&i| set.contains(i));
    let start = g.saturating_sub(2).max(1);
    let horizon = start + kmax;
    let profile = equigenerated_profile(set, horizon)?;
    let c_index = first_one(&profile);
    let one_from_g_minus_2 = profile[start as usize - 1..].iter().all(|&r| r == 1);
    let once_one_always_one = match c_index {
        Some(c) => profile[c as usize - 1..].iter().all(|&r| r == 1),
        None => true,
    };
    Ok(RelatedReport {
        eventually_one,
        c_index,
        some_power_one: c_index.is_some(),
        one_from_g_minus_2,
        once_one_always_one,
        profile,
    })
}

/// `[0, g-j-1] ∪ [g-1, g]`, whose powers first reach reduction number one
/// at `k = j`.
pub fn masoomeh_family(g: u64, j: u64) -> Result<ExponentSet> {
    if j == 0 || j + 2 > g {
        return Err(Error::OutOfRange(format!(
            "j = {j} must lie in [1, {}]",
            g.saturating_sub(2)
        )));
    }
    ExponentSet::new(g, (0..=g - j - 1).chain([g - 1, g]))
}

/// Predicted value of `r(I^k)` for `k >= a - 2` when `a = b`: `1` if both
/// `x y^(a-1)` and `x^(a-1) y` lie in `I`, else `2`.
pub fn limit_value(f: &FramedIdeal) -> Result<u64> {
    let a = f.a();
    if a != f.b() {
        return Err(Error::OutOfRange(format!(
            "frame ({a},{}) is not square",
            f.b()
        )));
    }
    if a < 2 {
        return Err(Error::OutOfRange("a >= 2 is required".into()));
    }
    let both = f.ideal().contains(&Monomial::new(1, a - 1))
        && f.ideal().contains(&Monomial::new(a - 1, 1));
    Ok(if both { 1 } else { 2 })
}

/// Every `k < kmax` with `r(I^(k+1)) > r(I^k)`. Monotonicity of the profile is
/// conjectural; hits are reported, not treated as errors.
pub fn monotonicity_probe(f: &FramedIdeal, kmax: u64, cap: u64) -> Result<Vec<u64>> {
    let p = power_profile(f, kmax, cap)?;
    Ok(increases(&p.rs))
}

pub fn increases(rs: &[u64]) -> Vec<u64> {
    rs.windows(2)
        .enumerate()
        .filter(|(_, w)| w[1] > w[0])
        .map(|(i, _)| i as u64 + 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equigen::all_sets;
    use crate::parse::parse_ideal;

    fn framed(s: &str) -> FramedIdeal {
        FramedIdeal::new(parse_ideal(s).unwrap()).unwrap()
    }

    fn set(g: u64, m: &[u64]) -> ExponentSet {
        ExponentSet::new(g, m.iter().copied()).unwrap()
    }

    #[test]
    fn power_bound_values() {
        assert_eq!(power_bound(4, 2), 3);
        assert_eq!(power_bound(4, 3), 2);
        assert_eq!(power_bound(4, 4), 2);
        assert_eq!(power_bound(4, 5), 2);
        assert_eq!(power_bound(1, 7), 1);
        assert_eq!(power_bound(0, 3), 1);
    }

    #[test]
    fn profile_of_three_generated_ideal() {
        // Oracle: monomial powers checked independently of the profile loop.
        let f = framed("x^5 + y^7 + x*y^6");
        let p = power_profile(&f, 6, 64).unwrap();
        for k in 1..=6u64 {
            let pk = FramedIdeal::new(f.ideal().power(k).unwrap()).unwrap();
            assert_eq!(p.r(k), Some(reduction_number_value(&pk, 64).unwrap()));
            assert!(p.r(k).unwrap() <= power_bound(4, k));
        }
        // xy^6 lies off the segment, so the limit is 2 rather than 1.
        assert_eq!(p.rs, vec![4, 3, 2, 2, 2, 2]);
        assert_eq!(p.c_index, None);
    }

    #[test]
    fn profile_of_frame_ideal() {
        let p = power_profile(&framed("x^3 + y^5"), 5, 64).unwrap();
        assert_eq!(p.rs[0], 0);
        // (x^a, y^b)^k is not its own reduction once k >= 2.
        assert!(p.rs[1..].iter().all(|&r| r == 1));
    }

    #[test]
    fn equigenerated_profile_uses_sumsets_consistently() {
        for g in 2..=6 {
            for a_set in all_sets(g) {
                let f = a_set.to_ideal(g, g).unwrap();
                let p = power_profile(&f, 3, 64).unwrap();
                for k in 1..=3 {
                    let pk = FramedIdeal::new(f.ideal().power(k).unwrap()).unwrap();
                    assert_eq!(p.r(k).unwrap(), reduction_number_value(&pk, 64).unwrap());
                }
            }
        }
    }

    #[test]
    fn profile_of_set_with_corners() {
        let f = set(4, &[0, 1, 3, 4]).to_ideal(4, 4).unwrap();
        let p = power_profile(&f, 6, 64).unwrap();
        assert!(p.rs[0] >= 2);
        assert!(p.rs[1..].iter().all(|&r| r == 1));
        assert_eq!(p.c_index, Some(2));
    }

    #[test]
    fn related_examples() {
        let r = related_check(&set(5, &[0, 1, 4, 5]), 4).unwrap();
        assert!(r.eventually_one && r.consistent());
        assert!(r.c_index.unwrap() <= 3);
        let r = related_check(&set(5, &[0, 1, 5]), 4).unwrap();
        assert!(!r.eventually_one && r.consistent());
        assert_eq!(r.c_index, None);
        let r = related_check(&ExponentSet::full(6), 4).unwrap();
        assert_eq!(r.c_index, Some(1));
        assert!(related_check(&set(6, &[0, 2, 6]), 4).is_err());
    }

    #[test]
    fn masoomeh_examples() {
        let s = masoomeh_family(5, 2).unwrap();
        assert_eq!(s, set(5, &[0, 1, 2, 4, 5]));
        assert_eq!(related_check(&s, 3).unwrap().c_index, Some(2));
        let s = masoomeh_family(4, 1).unwrap();
        assert_eq!(s, ExponentSet::full(4));
        assert_eq!(related_check(&s, 3).unwrap().c_index, Some(1));
        let s = masoomeh_family(6, 4).unwrap();
        assert_eq!(s, set(6, &[0, 1, 5, 6]));
        assert_eq!(related_check(&s, 3).unwrap().c_index, Some(4));
        assert!(masoomeh_family(6, 5).is_err());
        assert!(masoomeh_family(6, 0).is_err());
    }

    #[test]
    fn limit_value_examples() {
        assert_eq!(
            limit_value(&framed("x^4 + y^4 + x^3*y + x*y^3")).unwrap(),
            1
        );
        assert_eq!(limit_value(&framed("x^4 + y^4 + x^2*y^2")).unwrap(), 2);
        assert_eq!(limit_value(&framed("x^2 + y^2 + x*y")).unwrap(), 1);
        assert!(limit_value(&framed("x^2 + y^3")).is_err());
    }

    #[test]
    fn probe_reports_increases() {
        assert_eq!(increases(&[3, 2, 2, 1]), Vec::<u64>::new());
        assert_eq!(increases(&[0, 1, 1]), vec![1]);
        assert_eq!(increases(&[2, 1, 2]), vec![2]);
    }
}
