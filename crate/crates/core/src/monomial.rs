//! Staircase arithmetic for monomials and monomial ideals in `K[x, y]`.
//!
//! A monomial `x^c y^d` is its exponent pair. A monomial ideal is stored as
//! its minimal generating set, sorted by x-exponent ascending, which forces
//! the y-exponents to be strictly descending (the staircase).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The monomial `x^x * y^y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u64; 2]", into = "[u64; 2]")]
pub struct Monomial {
    pub x: u64,
    pub y: u64,
}

impl From<[u64; 2]> for Monomial {
    fn from([x, y]: [u64; 2]) -> Self {
        Monomial { x, y }
    }
}

impl From<Monomial> for [u64; 2] {
    fn from(m: Monomial) -> Self {
        [m.x, m.y]
    }
}

impl From<(u64, u64)> for Monomial {
    fn from((x, y): (u64, u64)) -> Self {
        Monomial { x, y }
    }
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub const fn new(x: u64, y: u64) -> Self {
        Monomial { x, y }
    }

    /// Componentwise `self <= other`, i.e. `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        Ok(Monomial {
            x: self.x.checked_add(other.x).ok_or(Error::Overflow)?,
            y: self.y.checked_add(other.y).ok_or(Error::Overflow)?,
        })
    }

    pub fn pow(&self, t: u64) -> Result<Monomial> {
        Ok(Monomial {
            x: self.x.checked_mul(t).ok_or(Error::Overflow)?,
            y: self.y.checked_mul(t).ok_or(Error::Overflow)?,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: self.x.max(other.x),
            y: self.y.max(other.y),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn var(f: &mut fmt::Formatter<'_>, name: char, e: u64) -> fmt::Result {
            match e {
                1 => write!(f, "{name}"),
                _ => write!(f, "{name}^{e}"),
            }
        }
        match (self.x, self.y) {
            (0, 0) => write!(f, "1"),
            (x, 0) => var(f, 'x', x),
            (0, y) => var(f, 'y', y),
            (x, y) => {
                var(f, 'x', x)?;
                write!(f, "*")?;
                var(f, 'y', y)
            }
        }
    }
}

/// A monomial ideal given by its unique minimal generating set `G(I)`.
///
/// Generators are sorted with x-exponent strictly ascending and y-exponent
/// strictly descending. Two ideals are equal iff their generator sequences
/// are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimal generators of the ideal spanned by `ms`, in canonical order.
    pub fn minimalize<I>(ms: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut all: Vec<Monomial> = ms.into_iter().collect();
        if all.is_empty() {
            return Err(Error::Empty);
        }
        Ok(Self::minimalize_vec(&mut all))
    }

    fn minimalize_vec(all: &mut [Monomial]) -> Self {
        // After sorting by (x, y), an element is minimal iff its y is
        // strictly below every y seen so far.
        all.sort_unstable();
        let mut gens = Vec::with_capacity(all.len());
        let mut min_y = u64::MAX;
        for &m in all.iter() {
            if m.y < min_y || gens.is_empty() {
                gens.push(m);
                min_y = m.y;
            }
        }
        MonomialIdeal { gens }
    }

    /// The unit ideal `(1)`.
    pub fn unit() -> Self {
        MonomialIdeal {
            gens: vec![Monomial::ONE],
        }
    }

    /// `(x^a, y^b)`.
    pub fn pure_powers(a: u64, b: u64) -> Self {
        Self::minimalize([Monomial::new(a, 0), Monomial::new(0, b)]).expect("nonempty")
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens[0] == Monomial::ONE
    }

    /// Exponent `a` of the pure power `x^a` in `G(I)`, if present.
    pub fn x_power(&self) -> Option<u64> {
        self.gens.last().filter(|m| m.y == 0).map(|m| m.x)
    }

    /// Exponent `b` of the pure power `y^b` in `G(I)`, if present.
    pub fn y_power(&self) -> Option<u64> {
        self.gens.first().filter(|m| m.x == 0).map(|m| m.y)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        // The last generator with x <= m.x has the smallest y among them.
        let idx = self.gens.partition_point(|g| g.x <= m.x);
        idx > 0 && self.gens[idx - 1].y <= m.y
    }

    /// `I ⊆ L`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut all: Vec<Monomial> = self.gens.iter().chain(&other.gens).copied().collect();
        Self::minimalize_vec(&mut all)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut all = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                all.push(u.mul(v)?);
            }
        }
        Ok(Self::minimalize_vec(&mut all))
    }

    /// `I^k` by repeated squaring; `I^0` is the unit ideal.
    pub fn power(&self, k: u64) -> Result<MonomialIdeal> {
        let mut result = MonomialIdeal::unit();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.product(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.product(&base)?;
            }
        }
        Ok(result)
    }

    /// `I^[t]`: every generator raised to the `t`-th power.
    pub fn bracket_power(&self, t: u64) -> Result<MonomialIdeal> {
        if t == 0 {
            return Err(Error::OutOfRange("bracket power needs t >= 1".into()));
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.pow(t))
            .collect::<Result<Vec<_>>>()?;
        // Scaling by t > 0 preserves the staircase order.
        Ok(MonomialIdeal { gens })
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut all = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                all.push(u.lcm(v));
            }
        }
        Self::minimalize_vec(&mut all)
    }

    /// Largest exponent over all generators, in either variable.
    pub fn max_exponent(&self) -> u64 {
        self.gens.iter().map(|g| g.x.max(g.y)).max().unwrap_or(0)
    }
}

impl fmt::Display for MonomialIdeal {
    /// Renders in the monomial literal syntax, highest x-power first, so the
    /// output parses back to the same ideal.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.gens.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
