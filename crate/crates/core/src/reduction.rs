//! Minimal monomial reductions and reduction numbers.
//!
//! For a height-two monomial ideal `I` with pure powers `x^a, y^b`, the
//! ideal `J = (x^a, y^b)` is the minimal monomial reduction exactly when
//! every generator `x^c y^d` satisfies `bc + ad >= ab`. Such ideals carry a
//! [`FramedIdeal`] certificate. Their reduction number is the least `k` with
//! `I^(k+1) = J I^k`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_rational::Ratio;
use serde::Serialize;

use crate::equigen::ExponentSet;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// The line functional `(bc + ad) / ab`, kept as an unreduced fraction.
#[derive(Debug, Clone, Copy)]
pub struct NuValue {
    pub num: u64,
    pub den: u64,
}

impl NuValue {
    pub fn cmp_one(&self) -> Ordering {
        self.num.cmp(&self.den)
    }

    /// Compares against the rational `r`.
    pub fn cmp_ratio(&self, r: &Ratio<u64>) -> Ordering {
        let lhs = self.num as u128 * *r.denom() as u128;
        let rhs = *r.numer() as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialEq for NuValue {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for NuValue {}

impl PartialOrd for NuValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NuValue {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl Add for NuValue {
    type Output = Result<NuValue>;

    fn add(self, rhs: NuValue) -> Result<NuValue> {
        if self.den == rhs.den {
            let num = self.num.checked_add(rhs.num).ok_or(Error::Overflow)?;
            return Ok(NuValue { num, den: self.den });
        }
        let num = self
            .num
            .checked_mul(rhs.den)
            .and_then(|l| rhs.num.checked_mul(self.den).and_then(|r| l.checked_add(r)))
            .ok_or(Error::Overflow)?;
        let den = self.den.checked_mul(rhs.den).ok_or(Error::Overflow)?;
        Ok(NuValue { num, den })
    }
}

impl fmt::Display for NuValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

pub fn nu(a: u64, b: u64, m: &Monomial) -> Result<NuValue> {
    if a == 0 || b == 0 {
        return Err(Error::OutOfRange("frame exponents must be positive".into()));
    }
    let num = b
        .checked_mul(m.x)
        .and_then(|bc| a.checked_mul(m.y).and_then(|ad| bc.checked_add(ad)))
        .ok_or(Error::Overflow)?;
    let den = a.checked_mul(b).ok_or(Error::Overflow)?;
    Ok(NuValue { num, den })
}

/// `(c, d)` lies in `H+_{a,b}`: `bc + ad >= ab`.
pub fn in_halfplane(a: u64, b: u64, p: &Monomial) -> bool {
    b as u128 * p.x as u128 + a as u128 * p.y as u128 >= a as u128 * b as u128
}

/// `(c, d)` lies in `D_{a,b}`: `c < a`, `d < b` and `bc + ad >= ab`.
pub fn in_d(a: u64, b: u64, p: &Monomial) -> bool {
    p.x < a && p.y < b && in_halfplane(a, b, p)
}

/// All lattice points of `D_{a,b}`, ordered by `c` then `d`.
pub fn d_points(a: u64, b: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    for c in 0..a {
        for d in 0..b {
            let p = Monomial::new(c, d);
            if in_halfplane(a, b, &p) {
                out.push(p);
            }
        }
    }
    out
}

/// A monomial ideal certified to lie in `I_{a,b}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FramedIdeal {
    ideal: MonomialIdeal,
    a: u64,
    b: u64,
}

impl FramedIdeal {
    /// Frames `ideal` by its pure powers and checks every generator against
    /// the line through `(a, 0)` and `(0, b)`.
    pub fn new(ideal: MonomialIdeal) -> Result<Self> {
        let (a, b) = frame_of(&ideal)?;
        if let Some(m) = ideal.generators().iter().find(|m| !in_halfplane(a, b, m)) {
            return Err(Error::NotInFrame { a, b, m: *m });
        }
        Ok(FramedIdeal { ideal, a, b })
    }

    /// `(x^a, y^b)` together with the monomials `ms`.
    pub fn from_frame<I>(a: u64, b: u64, ms: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let gens = [Monomial::new(a, 0), Monomial::new(0, b)]
            .into_iter()
            .chain(ms);
        let f = Self::new(MonomialIdeal::minimalize(gens)?)?;
        if (f.a, f.b) != (a, b) {
            return Err(Error::OutOfRange(format!(
                "generators replace the frame ({a},{b}) by ({},{})",
                f.a, f.b
            )));
        }
        Ok(f)
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn generators(&self) -> &[Monomial] {
        self.ideal.generators()
    }

    /// The reduction `J = (x^a, y^b)`.
    pub fn reduction(&self) -> MonomialIdeal {
        MonomialIdeal::pure_powers(self.a, self.b)
    }

    /// `I = J`, the case of reduction number zero.
    pub fn is_trivial(&self) -> bool {
        self.ideal.len() == 2
    }

    pub fn nu(&self, m: &Monomial) -> NuValue {
        // a*b cannot overflow once the frame has been validated against
        // generators that fit in u64; the u128 comparisons in `in_halfplane`
        // do not depend on this.
        nu(self.a, self.b, m).expect("frame fits in u64")
    }

    /// All generators lie on the segment from `(a, 0)` to `(0, b)`.
    pub fn is_quasi_equigenerated(&self) -> bool {
        self.generators()
            .iter()
            .all(|m| self.nu(m).cmp_one() == Ordering::Equal)
    }

    /// `I^k` framed by `(ka, kb)`.
    pub fn power(&self, k: u64) -> Result<FramedIdeal> {
        if k == 0 {
            return Err(Error::OutOfRange(
                "power of a framed ideal needs k >= 1".into(),
            ));
        }
        let ideal = self.ideal.power(k)?;
        Ok(FramedIdeal {
            ideal,
            a: self.a.checked_mul(k).ok_or(Error::Overflow)?,
            b: self.b.checked_mul(k).ok_or(Error::Overflow)?,
        })
    }

    pub fn bracket_power(&self, t: u64) -> Result<FramedIdeal> {
        let ideal = self.ideal.bracket_power(t)?;
        FramedIdeal::new(ideal)
    }
}

impl fmt::Display for FramedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ideal.fmt(f)
    }
}

fn frame_of(ideal: &MonomialIdeal) -> Result<(u64, u64)> {
    let a = ideal.x_power().ok_or(Error::MissingPurePower('x'))?;
    let b = ideal.y_power().ok_or(Error::MissingPurePower('y'))?;
    if a == 0 || b == 0 {
        return Err(Error::OutOfRange("the unit ideal has no reduction".into()));
    }
    Ok((a, b))
}

/// Generators at the vertices of the lower-left convex hull of `G(I)`.
///
/// Points on a hull edge that are not vertices are dropped.
pub fn minimal_monomial_reduction(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    frame_of(ideal)?;
    let cross = |o: &Monomial, p: &Monomial, q: &Monomial| -> i128 {
        let (ox, oy) = (o.x as i128, o.y as i128);
        (p.x as i128 - ox) * (q.y as i128 - oy) - (p.y as i128 - oy) * (q.x as i128 - ox)
    };
    let mut hull: Vec<Monomial> = Vec::new();
    for g in ideal.generators() {
        while hull.len() >= 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], g) <= 0 {
            hull.pop();
        }
        hull.push(*g);
    }
    MonomialIdeal::minimalize(hull)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub a: u64,
    pub b: u64,
    /// `(x^a, y^b)` is the minimal monomial reduction.
    pub in_frame: bool,
    /// Every generator has `nu = 1`.
    pub quasi_equigenerated: bool,
}

pub fn classify(ideal: &MonomialIdeal) -> Result<Classification> {
    let (a, b) = frame_of(ideal)?;
    let mut in_frame = true;
    let mut equi = true;
    for m in ideal.generators() {
        match nu(a, b, m)?.cmp_one() {
            Ordering::Less => {
                in_frame = false;
                equi = false;
            }
            Ordering::Greater => equi = false,
            Ordering::Equal => {}
        }
    }
    Ok(Classification {
        a,
        b,
        in_frame,
        quasi_equigenerated: equi,
    })
}

/// Upper bounds that hold for quasi-equigenerated ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// `g / gcd(A)`; the reduction number is strictly smaller.
    pub cold: u64,
    /// `g / gcd(A) - |A| + 2`.
    pub glp: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub ideal: FramedIdeal,
    pub j: MonomialIdeal,
    pub r: u64,
    /// The `k` at which `I^(k+1) = J I^k` first held.
    pub witness_k: u64,
    pub bounds: Option<Bounds>,
}

/// Flat serialization record of a [`ReductionReport`].
#[derive(Debug, Clone, Serialize)]
pub struct ReductionRecord {
    pub a: u64,
    pub b: u64,
    pub generators: MonomialIdeal,
    #[serde(rename = "J")]
    pub j: MonomialIdeal,
    pub r: u64,
    pub witness_k: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cold_bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub glp_bound: Option<i64>,
}

impl ReductionReport {
    pub fn record(&self) -> ReductionRecord {
        ReductionRecord {
            a: self.ideal.a(),
            b: self.ideal.b(),
            generators: self.ideal.ideal().clone(),
            j: self.j.clone(),
            r: self.r,
            witness_k: self.witness_k,
            cold_bound: self.bounds.map(|b| b.cold),
            glp_bound: self.bounds.map(|b| b.glp),
        }
    }
}

pub fn default_cap(a: u64, b: u64) -> u64 {
    (2 * a.max(b)).max(64)
}

/// Least `k >= 0` with `I^(k+1) = J I^k`, searched for `k < cap`.
pub fn reduction_number(f: &FramedIdeal, cap: u64) -> Result<ReductionReport> {
    let r = reduction_number_value(f, cap)?;
    let bounds = if f.is_quasi_equigenerated() {
        let set = ExponentSet::from_ideal(f)?;
        Some(set.bounds())
    } else {
        None
    };
    Ok(ReductionReport {
        ideal: f.clone(),
        j: f.reduction(),
        r,
        witness_k: r,
        bounds,
    })
}

/// The bare reduction number, without report bookkeeping.
pub fn reduction_number_value(f: &FramedIdeal, cap: u64) -> Result<u64> {
    let i = f.ideal();
    let j = f.reduction();
    let mut pow = MonomialIdeal::unit();
    for k in 0..cap {
        if i.product(&pow)? == j.product(&pow)? {
            return Ok(k);
        }
        pow = i.product(&pow)?;
    }
    Err(Error::CapExceeded { cap })
}

/// `r(I) <= 1`, tested directly as `I^2 = J I`.
pub fn has_reduction_number_at_most_one(f: &FramedIdeal) -> Result<bool> {
    let i = f.ideal();
    Ok(i.product(i)? == f.reduction().product(i)?)
}

/// Reduction number of `(x^a, y^b, x^c y^d)` for `p = (c, d)` in `D_{a,b}`:
/// one less than the least `k` such that `k(c, d) >= (ia, (k-i)b)` for some
/// `0 <= i <= k`.
pub fn three_gen_reduction_number(a: u64, b: u64, p: &Monomial) -> Result<u64> {
    if !in_d(a, b, p) {
        return Err(Error::NotInD { a, b, p: *p });
    }
    let (a, b, c, d) = (a as u128, b as u128, p.x as u128, p.y as u128);
    let mut k: u128 = 1;
    loop {
        if (0..=k).any(|i| k * c >= i * a && k * d >= (k - i) * b) {
            return Ok((k - 1) as u64);
        }
        k += 1;
    }
}

/// The sub-ideal on generators with `nu = 1`.
pub fn equigenerated_part(f: &FramedIdeal) -> FramedIdeal {
    let gens = f
        .generators()
        .iter()
        .filter(|m| f.nu(m).cmp_one() == Ordering::Equal)
        .copied();
    let ideal = MonomialIdeal::minimalize(gens).expect("pure powers have nu = 1");
    FramedIdeal {
        ideal,
        a: f.a,
        b: f.b,
    }
}

/// Minimal generators of `(u : nu(u) > r)`.
pub fn strict_part(a: u64, b: u64, r: Ratio<u64>) -> Result<MonomialIdeal> {
    if a == 0 || b == 0 {
        return Err(Error::OutOfRange("frame exponents must be positive".into()));
    }
    if r < Ratio::from_integer(1) {
        return Err(Error::OutOfRange("threshold must be at least 1".into()));
    }
    // nu(x^c y^d) > p/q  <=>  q(bc + ad) > p ab.
    let (a, b) = (a as u128, b as u128);
    let (p, q) = (*r.numer() as u128, *r.denom() as u128);
    let target = p * a * b;
    let mut gens = Vec::new();
    let mut c: u128 = 0;
    loop {
        let lhs = q * b * c;
        if lhs > target {
            gens.push(Monomial::new(to_u64(c)?, 0));
            break;
        }
        let d = (target - lhs) / (q * a) + 1;
        gens.push(Monomial::new(to_u64(c)?, to_u64(d)?));
        c += 1;
    }
    MonomialIdeal::minimalize(gens)
}

fn to_u64(v: u128) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Overflow)
}

/// `I_A + (u : nu(u) > r)` in frame `(a, b)`.
pub fn onion_ideal(a: u64, b: u64, set: &ExponentSet, r: Ratio<u64>) -> Result<FramedIdeal> {
    let base = set.to_ideal(a, b)?;
    let strict = strict_part(a, b, r)?;
    FramedIdeal::new(base.ideal().sum(&strict))
}
