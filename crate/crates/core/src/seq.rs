//! Increasing tuples, canonical order types of tuple pairs, and mixed-radix
//! encodings of lexicographic product orders.
//!
//! Ordinals are modelled by naturals throughout: every construction in this
//! crate only ever needs finite ordinals and finite lexicographic products of
//! them, and a product `r_0 x r_1 x ... ` ordered lexicographically is order
//! isomorphic to `0..r_0*r_1*...` via [`LexFrame::encode`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Construction limits for [`IncreasingTuple`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_len: usize,
    pub max_value: u64,
}

impl Caps {
    pub const DEFAULT: Caps = Caps {
        max_len: 16,
        max_value: u32::MAX as u64,
    };

    /// Default length cap, values limited only by `u64`. Used for images of
    /// embeddings, whose entries are mixed-radix encodings.
    pub const WIDE: Caps = Caps {
        max_len: 16,
        max_value: u64::MAX,
    };
}

impl Default for Caps {
    fn default() -> Self {
        Caps::DEFAULT
    }
}

/// A non-empty, strictly increasing finite sequence of naturals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct IncreasingTuple(Vec<u64>);

impl IncreasingTuple {
    /// Builds a tuple under [`Caps::DEFAULT`].
    pub fn new(values: Vec<u64>) -> Result<Self> {
        Self::with_caps(values, Caps::DEFAULT)
    }

    pub fn with_caps(values: Vec<u64>, caps: Caps) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyTuple);
        }
        if values.len() > caps.max_len {
            return Err(Error::TupleTooLong {
                len: values.len(),
                cap: caps.max_len,
            });
        }
        if let Some(&value) = values.iter().find(|&&v| v > caps.max_value) {
            return Err(Error::ValueTooLarge {
                value,
                cap: caps.max_value,
            });
        }
        if let Some(position) = values.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing {
                position: position + 1,
            });
        }
        Ok(IncreasingTuple(values))
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> u64 {
        self.0[0]
    }

    pub fn last(&self) -> u64 {
        self.0[self.0.len() - 1]
    }

    /// The contiguous sub-tuple at indices `lo..=hi`.
    pub fn slice(&self, lo: usize, hi: usize) -> IncreasingTuple {
        IncreasingTuple(self.0[lo..=hi].to_vec())
    }

    pub fn into_inner(self) -> Vec<u64> {
        self.0
    }
}

impl TryFrom<Vec<u64>> for IncreasingTuple {
    type Error = Error;

    fn try_from(values: Vec<u64>) -> Result<Self> {
        IncreasingTuple::with_caps(values, Caps::WIDE)
    }
}

impl From<IncreasingTuple> for Vec<u64> {
    fn from(t: IncreasingTuple) -> Self {
        t.0
    }
}

impl std::ops::Index<usize> for IncreasingTuple {
    type Output = u64;

    fn index(&self, i: usize) -> &u64 {
        &self.0[i]
    }
}

impl fmt::Display for IncreasingTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Canonical form of the order type of a pair of equal-length increasing
/// tuples: the rank of every entry inside the sorted union of both images,
/// equal values sharing a rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrderTypePattern {
    #[serde(rename = "n")]
    pub length: usize,
    #[serde(rename = "ra")]
    pub ranks_a: Vec<u32>,
    #[serde(rename = "rb")]
    pub ranks_b: Vec<u32>,
}

impl OrderTypePattern {
    /// Size of the merged image, i.e. one more than the largest rank.
    pub fn merged_size(&self) -> usize {
        self.ranks_a
            .iter()
            .chain(&self.ranks_b)
            .max()
            .map_or(0, |&m| m as usize + 1)
    }

    /// True when the pattern relates distinct tuples.
    pub fn is_irreflexive(&self) -> bool {
        self.ranks_a != self.ranks_b
    }

    /// The pattern of the reversed pair `(b, a)`.
    pub fn reversed(&self) -> OrderTypePattern {
        OrderTypePattern {
            length: self.length,
            ranks_a: self.ranks_b.clone(),
            ranks_b: self.ranks_a.clone(),
        }
    }

    /// Checks the shape invariants; used when a pattern arrives from outside.
    pub fn validate(&self) -> Result<()> {
        let ok_len = self.ranks_a.len() == self.length && self.ranks_b.len() == self.length;
        if !ok_len || self.length == 0 {
            return Err(Error::InvalidInput(format!(
                "pattern rank lists must both have length n = {}",
                self.length
            )));
        }
        let strictly = |r: &[u32]| r.windows(2).all(|w| w[0] < w[1]);
        if !strictly(&self.ranks_a) || !strictly(&self.ranks_b) {
            return Err(Error::InvalidInput(
                "pattern ranks must be strictly increasing".into(),
            ));
        }
        let m = self.merged_size();
        let mut seen = vec![false; m];
        for &r in self.ranks_a.iter().chain(&self.ranks_b) {
            seen[r as usize] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidInput(
                "pattern ranks must form a contiguous initial segment".into(),
            ));
        }
        Ok(())
    }

    /// Instantiates the pattern on concrete values: `values[r]` is the value
    /// given to rank `r`. `values` must be strictly increasing with length
    /// [`merged_size`](Self::merged_size).
    pub fn realize(&self, values: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let pick = |ranks: &[u32]| ranks.iter().map(|&r| values[r as usize]).collect();
        (pick(&self.ranks_a), pick(&self.ranks_b))
    }
}

/// Canonical order type of the pair `(c, d)`.
pub fn otp(c: &IncreasingTuple, d: &IncreasingTuple) -> Result<OrderTypePattern> {
    otp_slices(c.values(), d.values())
}

/// [`otp`] on raw slices; both slices are assumed strictly increasing.
pub fn otp_slices(c: &[u64], d: &[u64]) -> Result<OrderTypePattern> {
    if c.len() != d.len() {
        return Err(Error::LengthMismatch {
            left: c.len(),
            right: d.len(),
        });
    }
    // Merge walk: both inputs are sorted, so ranks fall out of one pass.
    let n = c.len();
    let mut ranks_a = Vec::with_capacity(n);
    let mut ranks_b = Vec::with_capacity(n);
    let (mut i, mut j, mut rank) = (0, 0, 0u32);
    while i < n || j < n {
        let take_c = j == n || (i < n && c[i] <= d[j]);
        let take_d = i == n || (j < n && d[j] <= c[i]);
        if take_c {
            ranks_a.push(rank);
            i += 1;
        }
        if take_d {
            ranks_b.push(rank);
            j += 1;
        }
        rank += 1;
    }
    Ok(OrderTypePattern {
        length: n,
        ranks_a,
        ranks_b,
    })
}

/// Applies a strictly increasing map entrywise.
pub fn remap_monotone(t: &IncreasingTuple, f: impl Fn(u64) -> u64) -> Result<IncreasingTuple> {
    let image: Vec<u64> = t.values().iter().map(|&x| f(x)).collect();
    for (w, fw) in t.values().windows(2).zip(image.windows(2)) {
        if fw[0] >= fw[1] {
            return Err(Error::NotMonotone {
                x: w[0],
                fx: fw[0],
                y: w[1],
                fy: fw[1],
            });
        }
    }
    IncreasingTuple::with_caps(image, Caps::WIDE)
}

/// A lexicographic product of finite intervals `0..r_0, 0..r_1, ...`,
/// most significant radix first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LexFrame {
    radices: Vec<u64>,
}

impl LexFrame {
    pub fn new(radices: Vec<u64>) -> Result<Self> {
        if let Some(position) = radices.iter().position(|&r| r == 0) {
            return Err(Error::ZeroRadix { position });
        }
        let frame = LexFrame { radices };
        frame.size()?;
        Ok(frame)
    }

    pub fn radices(&self) -> &[u64] {
        &self.radices
    }

    /// Number of points in the product.
    pub fn size(&self) -> Result<u64> {
        self.radices
            .iter()
            .try_fold(1u64, |acc, &r| acc.checked_mul(r))
            .ok_or(Error::Overflow)
    }

    /// Mixed-radix value of `digits`, most significant first.
    pub fn encode(&self, digits: &[u64]) -> Result<u64> {
        if digits.len() != self.radices.len() {
            return Err(Error::LengthMismatch {
                left: digits.len(),
                right: self.radices.len(),
            });
        }
        let mut value = 0u64;
        for (position, (&digit, &radix)) in digits.iter().zip(&self.radices).enumerate() {
            if digit >= radix {
                return Err(Error::DigitOutOfRange {
                    position,
                    digit,
                    radix,
                });
            }
            // size() was checked at construction, so this cannot overflow.
            value = value * radix + digit;
        }
        Ok(value)
    }

    /// Inverse of [`encode`](Self::encode).
    pub fn decode(&self, mut value: u64) -> Result<Vec<u64>> {
        if value >= self.size()? {
            return Err(Error::InvalidInput(format!(
                "value {value} outside frame of size {}",
                self.size()?
            )));
        }
        let mut digits = vec![0; self.radices.len()];
        for (slot, &radix) in digits.iter_mut().zip(&self.radices).rev() {
            *slot = value % radix;
            value /= radix;
        }
        Ok(digits)
    }
}

/// Lexicographic enumeration of the increasing `len`-tuples over `0..n`.
/// Empty when `len > n`.
pub fn increasing_tuples(n: u64, len: usize) -> impl Iterator<Item = IncreasingTuple> {
    use itertools::Itertools;
    (0..n).combinations(len).map(IncreasingTuple)
}
