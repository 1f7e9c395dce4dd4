//! Sumset calculus for quasi-equigenerated ideals.
//!
//! With `g = gcd(a, b)`, the lattice points on the segment from `(a, 0)` to
//! `(0, b)` are `(i a/g, b - i b/g)` for `i` in `[0, g]`. A quasi-equigenerated
//! ideal is therefore a subset `A` of `[0, g]` containing `0` and `g`, and
//! ideal products become sumsets: `I_A I_B = I_{A+B}`, `I_A^k = I_{kA}`.
//! The reduction `(x^a, y^b)` is `I_{{0,g}}`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::reduction::{Bounds, FramedIdeal};

/// A subset of `[0, g]` that contains both `0` and `g`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentSet {
    g: u64,
    members: BitSet,
}

impl ExponentSet {
    pub fn new<I: IntoIterator<Item = u64>>(g: u64, members: I) -> Result<Self> {
        if g == 0 {
            return Err(Error::InvalidSet("g must be positive".into()));
        }
        let len = usize::try_from(g).map_err(|_| Error::Overflow)? + 1;
        let mut bits = BitSet::new(len);
        for m in members {
            if m > g {
                return Err(Error::InvalidSet(format!("member {m} exceeds g = {g}")));
            }
            bits.insert(m as usize);
        }
        Self::from_bits(g, bits)
    }

    /// Wraps a bitset whose members lie in `[0, g]`.
    pub fn from_bits(g: u64, bits: BitSet) -> Result<Self> {
        let len = g as usize + 1;
        if bits.max().is_some_and(|m| m >= len) {
            return Err(Error::InvalidSet(format!("members exceed g = {g}")));
        }
        let members = bits.resized(len);
        if !members.contains(0) || !members.contains(g as usize) {
            return Err(Error::InvalidSet(format!("0 and {g} must both be members")));
        }
        Ok(ExponentSet { g, members })
    }

    /// `{0, g}`, the exponent set of `(x^a, y^b)`.
    pub fn frame(g: u64) -> Self {
        Self::new(g, [0, g]).expect("valid")
    }

    /// `[0, g]`.
    pub fn full(g: u64) -> Self {
        Self::new(g, 0..=g).expect("valid")
    }

    pub fn g(&self) -> u64 {
        self.g
    }

    pub fn bits(&self) -> &BitSet {
        &self.members
    }

    pub fn members(&self) -> impl Iterator<Item = u64> + '_ {
        self.members.iter().map(|m| m as u64)
    }

    pub fn contains(&self, i: u64) -> bool {
        i <= self.g && self.members.contains(i as usize)
    }

    /// `|A|`.
    pub fn size(&self) -> usize {
        self.members.count()
    }

    /// `gcd(A)`; since `g` is a member this divides `g`.
    pub fn gcd(&self) -> u64 {
        self.members().fold(0, |acc, m| acc.gcd(&m))
    }

    /// `I_A` in the frame `(a, b)`; requires `gcd(a, b) = g`.
    pub fn to_ideal(&self, a: u64, b: u64) -> Result<FramedIdeal> {
        let gcd = a.gcd(&b);
        if gcd != self.g || a == 0 {
            return Err(Error::FrameMismatch {
                a,
                b,
                gcd,
                g: self.g,
            });
        }
        let (sa, sb) = (a / self.g, b / self.g);
        let gens = self.members().map(|i| Monomial::new(i * sa, b - i * sb));
        FramedIdeal::new(MonomialIdeal::minimalize(gens)?)
    }

    /// Recovers `A` from a quasi-equigenerated ideal. Generators must be
    /// exactly lattice points of the segment.
    pub fn from_ideal(f: &FramedIdeal) -> Result<Self> {
        let (a, b) = (f.a(), f.b());
        let g = a.gcd(&b);
        let (sa, sb) = (a / g, b / g);
        let not_equi = || Error::NotEquigenerated { a, b };
        let mut members = Vec::with_capacity(f.generators().len());
        for m in f.generators() {
            if m.x % sa != 0 {
                return Err(not_equi());
            }
            let i = m.x / sa;
            if i > g || m.y != b - i * sb {
                return Err(not_equi());
            }
            members.push(i);
        }
        Self::new(g, members)
    }

    /// `A / t` on `[0, g/t]` for `t = gcd(A)`.
    pub fn reduced(&self) -> ExponentSet {
        let t = self.gcd();
        ExponentSet::new(self.g / t, self.members().map(|m| m / t)).expect("valid")
    }

    /// Multiplicity `g / gcd(A)` of the fiber cone.
    pub fn multiplicity(&self) -> u64 {
        self.g / self.gcd()
    }

    pub fn bounds(&self) -> Bounds {
        let e = self.multiplicity();
        Bounds {
            cold: e,
            glp: e as i64 - self.size() as i64 + 2,
        }
    }
}

impl fmt::Debug for ExponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExponentSet({self})")
    }
}

impl fmt::Display for ExponentSet {
    /// `g:m1,m2,...`, the same form [`FromStr`] accepts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.g)?;
        for (i, m) in self.members().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromStr for ExponentSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidSet(format!("{msg} in {s:?} (expected g:m1,m2,...)"));
        let (g, rest) = s.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let g: u64 = g.trim().parse().map_err(|_| bad("bad g"))?;
        let members = rest
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse::<u64>().map_err(|_| bad("bad member")))
            .collect::<Result<Vec<_>>>()?;
        ExponentSet::new(g, members)
    }
}

impl Serialize for ExponentSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            g: u64,
            members: Vec<u64>,
        }
        Repr {
            g: self.g,
            members: self.members().collect(),
        }
        .serialize(s)
    }
}

/// `A + B`.
pub fn sumset(a: &BitSet, b: &BitSet) -> BitSet {
    a.sumset(b)
}

/// `kA`, with `1A = A` and `kA = A + (k-1)A`. `0A` is `{0}`.
pub fn k_fold(a: &BitSet, k: u64) -> BitSet {
    let mut acc = BitSet::from_members(1, [0]);
    for _ in 0..k {
        acc = acc.sumset(a);
    }
    acc
}

/// `kA` as an exponent set on `[0, kg]`, i.e. the ideal `I_A^k` in frame
/// `(ka, kb)`.
pub fn power_set(set: &ExponentSet, k: u64) -> Result<ExponentSet> {
    if k == 0 {
        return Err(Error::OutOfRange("power needs k >= 1".into()));
    }
    let g = set.g.checked_mul(k).ok_or(Error::Overflow)?;
    ExponentSet::from_bits(g, k_fold(set.bits(), k))
}

/// Reduction number of `I_A`: the least `k >= 0` with
/// `(k+1)A = {0, g} + kA`.
///
/// The search is capped at `g^2`; the proven bound is `g/gcd(A) - 1`, so
/// hitting the cap means the code and the theory disagree.
pub fn r_equigen(set: &ExponentSet) -> Result<u64> {
    let cap = set.g.saturating_mul(set.g).max(1);
    r_equigen_capped(set, cap).map_err(|e| match e {
        Error::CapExceeded { cap } => {
            Error::Invariant(format!("r_equigen({set}) exceeded cap {cap}"))
        }
        e => e,
    })
}

/// [`r_equigen`] searching only `k < cap`.
pub fn r_equigen_capped(set: &ExponentSet, cap: u64) -> Result<u64> {
    let g = set.g as usize;
    let frame = BitSet::from_members(g + 1, [0, g]);
    let mut current = BitSet::from_members(1, [0]);
    for k in 0..cap {
        let next = current.sumset(set.bits());
        if next.same_members(&current.sumset(&frame)) {
            return Ok(k);
        }
        current = next;
    }
    Err(Error::CapExceeded { cap })
}

/// `A` is `{0, d, 2d, ..., g}` with `d = gcd(A) != g`.
pub fn redone_characterize(set: &ExponentSet) -> bool {
    let d = set.gcd();
    d != set.g && set.size() as u64 == set.g / d + 1
}

/// `g / gcd(e, g) - 1`, the reduction number of `I_{{0, e, g}}`.
pub fn masiproves_formula(g: u64, e: u64) -> Result<u64> {
    if e == 0 || e >= g {
        return Err(Error::OutOfRange(format!(
            "e = {e} must lie in [1, {}]",
            g.saturating_sub(1)
        )));
    }
    Ok(g / e.gcd(&g) - 1)
}

/// `[0, 1] ∪ [j+1, g]`, whose reduction number is `j`.
pub fn somayeh_family(g: u64, j: u64) -> Result<ExponentSet> {
    if j == 0 || j >= g {
        return Err(Error::OutOfRange(format!(
            "j = {j} must lie in [1, {}]",
            g.saturating_sub(1)
        )));
    }
    ExponentSet::new(g, [0, 1].into_iter().chain(j + 1..=g))
}

/// `A` reaches the maximal reduction number `g - 1`: either `g = 1`, or
/// `A = {0, e, g}` with `gcd(e, g) = 1`.
pub fn sunshine_classify(set: &ExponentSet) -> bool {
    match set.size() {
        2 => set.g == 1,
        3 => {
            let e = set
                .members()
                .find(|&m| m != 0 && m != set.g)
                .expect("three members");
            e.gcd(&set.g) == 1
        }
        _ => false,
    }
}

/// Every `A` with `0, g` in `A`, as bitmasks with bits `0` and `g` forced.
/// Needs `g < 64`.
pub fn all_sets(g: u64) -> impl Iterator<Item = ExponentSet> {
    assert!((1..64).contains(&g), "all_sets supports 1 <= g < 64");
    let inner = if g >= 2 { g - 1 } else { 0 };
    (0u64..1 << inner).map(move |mask| {
        let members = (1..g).filter(|i| mask >> (i - 1) & 1 == 1).chain([0, g]);
        ExponentSet::new(g, members).expect("valid")
    })
}
