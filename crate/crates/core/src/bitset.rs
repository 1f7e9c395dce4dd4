//! Fixed-width bitsets over `[0, len)` with the shift-or convolution used for
//! integer sumsets.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(len: usize, members: I) -> Self {
        let mut s = Self::new(len);
        for m in members {
            s.insert(m);
        }
        s
    }

    /// Capacity in bits; members are `< len`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + t)
            })
        })
    }

    pub fn max(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(wi, &w)| wi * 64 + 63 - w.leading_zeros() as usize)
    }

    /// `self |= other << shift`, truncated to `self.len`.
    pub fn or_shifted(&mut self, other: &BitSet, shift: usize) {
        let (ws, bs) = (shift / 64, shift % 64);
        for (i, &w) in other.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let lo = i + ws;
            if lo < self.words.len() {
                self.words[lo] |= w << bs;
            }
            if bs != 0 && lo + 1 < self.words.len() {
                self.words[lo + 1] |= w >> (64 - bs);
            }
        }
        self.trim();
    }

    fn trim(&mut self) {
        let extra = self.words.len() * 64 - self.len;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }

    /// Same members, capacity changed to `len` (members past it are dropped).
    pub fn resized(&self, len: usize) -> BitSet {
        let mut out = BitSet::new(len);
        let n = out.words.len().min(self.words.len());
        out.words[..n].copy_from_slice(&self.words[..n]);
        out.trim();
        out
    }

    /// `{a + b : a in self, b in other}`.
    pub fn sumset(&self, other: &BitSet) -> BitSet {
        let (Some(ma), Some(mb)) = (self.max(), other.max()) else {
            return BitSet::new(0);
        };
        let mut out = BitSet::new(ma + mb + 1);
        // Shift the denser operand by each member of the sparser one.
        let (dense, sparse) = if self.count() >= other.count() {
            (self, other)
        } else {
            (other, self)
        };
        for s in sparse.iter() {
            out.or_shifted(dense, s);
        }
        out
    }

    /// Membership equality, ignoring capacity.
    pub fn same_members(&self, other: &BitSet) -> bool {
        let n = self.words.len().max(other.words.len());
        (0..n).all(|i| self.words.get(i).unwrap_or(&0) == other.words.get(i).unwrap_or(&0))
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
