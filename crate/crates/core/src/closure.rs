//! The smallest monomial ideal of reduction number one containing `I`.
//!
//! `r(I) = 1` exactly when `I != J` and every product `u_p u_q` of
//! non-frame generators that is not already in `J^2` has its witness
//! (`u_p u_q / x^a` or `u_p u_q / y^b`) in `I`. Two constructions are
//! provided: a general fixpoint that adjoins missing witnesses, and the
//! explicit recurrence for three-generated ideals. [`minimal_one_oracle`]
//! certifies both by exhaustion on small frames.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::reduction::{
    d_points, has_reduction_number_at_most_one, in_d, in_halfplane, FramedIdeal,
};

/// A product `left * right` whose witness is missing from the ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub left: Monomial,
    pub right: Monomial,
    pub witness: Monomial,
}

/// One row `i c = r_i a + c_i`, `i d = s_i b + d_i` of the recurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Step {
    pub i: u64,
    pub r: u64,
    pub s: u64,
    pub c: u64,
    pub d: u64,
}

impl Step {
    pub fn point(&self) -> Monomial {
        Monomial::new(self.c, self.d)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClosureTrace {
    /// Generators adjoined, in adjunction order.
    pub added: Vec<Monomial>,
    /// Stopping index of the three-generator recurrence.
    pub k: Option<u64>,
    /// Rows `1..=k` of the three-generator recurrence.
    pub steps: Vec<Step>,
}

pub fn violations(f: &FramedIdeal) -> Result<Vec<Violation>> {
    if f.is_trivial() {
        return Err(Error::TrivialIdeal { a: f.a(), b: f.b() });
    }
    let (a, b) = (f.a(), f.b());
    let inner: Vec<Monomial> = f
        .generators()
        .iter()
        .filter(|m| m.x < a && m.y < b)
        .copied()
        .collect();
    let mut out = Vec::new();
    for (i, p) in inner.iter().enumerate() {
        for q in &inner[i..] {
            let s = p.mul(q)?;
            let (over_x, over_y) = (s.x >= a, s.y >= b);
            let witness = match (over_x, over_y) {
                // In J^2.
                (true, true) => continue,
                (true, false) => Monomial::new(s.x - a, s.y),
                (false, true) => Monomial::new(s.x, s.y - b),
                (false, false) => {
                    return Err(Error::Invariant(format!(
                        "{p} * {q} has nu >= 2 but exceeds neither a nor b"
                    )))
                }
            };
            if !f.ideal().contains(&witness) {
                out.push(Violation {
                    left: *p,
                    right: *q,
                    witness,
                });
            }
        }
    }
    Ok(out)
}

/// Adjoins every missing witness per round until none remain.
pub fn closure(f: &FramedIdeal) -> Result<(FramedIdeal, ClosureTrace)> {
    // Each round adds at least one point of [0,a) x [0,b).
    closure_capped(f, f.a().saturating_mul(f.b()))
}

/// [`closure`] allowing at most `cap` rounds of adjunction.
pub fn closure_capped(f: &FramedIdeal, cap: u64) -> Result<(FramedIdeal, ClosureTrace)> {
    let mut trace = ClosureTrace::default();
    if f.is_trivial() {
        return Ok((f.clone(), trace));
    }
    let mut current = f.clone();
    for _ in 0..=cap {
        let mut witnesses: Vec<Monomial> = violations(&current)?
            .into_iter()
            .map(|v| v.witness)
            .collect();
        if witnesses.is_empty() {
            return Ok((current, trace));
        }
        witnesses.sort_unstable();
        witnesses.dedup();
        let grown = current
            .ideal()
            .sum(&MonomialIdeal::minimalize(witnesses.iter().copied())?);
        trace.added.extend(witnesses);
        current = FramedIdeal::new(grown)?;
    }
    Err(Error::CapExceeded { cap })
}

/// Closure of `(x^a, y^b, x^c y^d)` from the recurrence `r_i = ⌊ic/a⌋`,
/// `s_i = ⌊id/b⌋`, stopping at the least `k` with `r_k + s_k >= k`.
pub fn closure_3gen(a: u64, b: u64, p: &Monomial) -> Result<(FramedIdeal, ClosureTrace)> {
    if !in_d(a, b, p) {
        return Err(Error::NotInD { a, b, p: *p });
    }
    let mut steps = Vec::new();
    let mut i = 1u64;
    let k = loop {
        let ic = i.checked_mul(p.x).ok_or(Error::Overflow)?;
        let id = i.checked_mul(p.y).ok_or(Error::Overflow)?;
        let step = Step {
            i,
            r: ic / a,
            s: id / b,
            c: ic % a,
            d: id % b,
        };
        steps.push(step);
        if step.r + step.s >= i {
            break i;
        }
        i += 1;
    };
    let points: Vec<Monomial> = steps[..steps.len() - 1].iter().map(Step::point).collect();
    let added = points[1..].to_vec();
    let l = FramedIdeal::from_frame(a, b, points)?;
    Ok((
        l,
        ClosureTrace {
            added,
            k: Some(k),
            steps,
        },
    ))
}

/// Default ceiling on `|D_{a,b}|` for the exhaustive oracle.
pub const ORACLE_GRID_LIMIT: usize = 40;

/// Every ideal `L ⊇ I` in `I_{a,b}` with `r(L) <= 1`.
///
/// Such an `L` is determined by its intersection with `[0,a) x [0,b)`,
/// i.e. by a nonincreasing column threshold `t_c` for `c < a`; all staircases
/// compatible with `I` and with `H+_{a,b}` are enumerated and each is tested
/// directly by `L^2 = J L`.
pub fn reduction_one_supersets(f: &FramedIdeal, grid_limit: usize) -> Result<Vec<FramedIdeal>> {
    let (a, b) = (f.a(), f.b());
    let grid = d_points(a, b).len();
    if grid > grid_limit {
        return Err(Error::GridTooLarge(grid, grid_limit));
    }
    // Column thresholds of I, capped at b.
    let upper: Vec<u64> = (0..a)
        .map(|c| {
            f.generators()
                .iter()
                .filter(|g| g.x <= c)
                .map(|g| g.y)
                .min()
                .unwrap_or(b)
                .min(b)
        })
        .collect();
    // Least d with (c, d) in H+.
    let lower: Vec<u64> = (0..a)
        .map(|c| {
            let need = a as u128 * b as u128 - b as u128 * c as u128;
            need.div_ceil(a as u128) as u64
        })
        .collect();

    let mut out = Vec::new();
    let mut thresholds = Vec::with_capacity(a as usize);
    enumerate(a, b, &upper, &lower, b, &mut thresholds, &mut |ts| {
        let pts = ts
            .iter()
            .enumerate()
            .filter(|(_, &t)| t < b)
            .map(|(c, &t)| Monomial::new(c as u64, t));
        let l = FramedIdeal::from_frame(a, b, pts)?;
        debug_assert!(l.generators().iter().all(|m| in_halfplane(a, b, m)));
        if has_reduction_number_at_most_one(&l)? {
            out.push(l);
        }
        Ok(())
    })?;
    Ok(out)
}

fn enumerate(
    a: u64,
    b: u64,
    upper: &[u64],
    lower: &[u64],
    prev: u64,
    ts: &mut Vec<u64>,
    visit: &mut dyn FnMut(&[u64]) -> Result<()>,
) -> Result<()> {
    let c = ts.len();
    if c as u64 == a {
        return visit(ts);
    }
    let hi = prev.min(upper[c]);
    // t = b means the column holds no grid point; otherwise t must clear H+.
    let mut choices: Vec<u64> = (lower[c]..=hi).filter(|&t| t < b).collect();
    if hi == b {
        choices.push(b);
    }
    for t in choices {
        ts.push(t);
        enumerate(a, b, upper, lower, t, ts, visit)?;
        ts.pop();
    }
    Ok(())
}

/// Intersection of all reduction-number-one supersets of `I` (and `J` itself
/// when `I = J`).
pub fn minimal_one_oracle(f: &FramedIdeal) -> Result<FramedIdeal> {
    minimal_one_oracle_with_limit(f, ORACLE_GRID_LIMIT)
}

pub fn minimal_one_oracle_with_limit(f: &FramedIdeal, grid_limit: usize) -> Result<FramedIdeal> {
    let all = reduction_one_supersets(f, grid_limit)?;
    let meet = all
        .iter()
        .map(FramedIdeal::ideal)
        .cloned()
        .reduce(|acc, l| acc.intersection(&l))
        .ok_or_else(|| Error::Invariant("no reduction-number-one superset found".into()))?;
    FramedIdeal::new(meet)
}
