use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest rank a [`SignedPermutation`] can carry.
pub const MAX_RANK: usize = 16;

/// A bijection `w` of `{±1, …, ±n}` with `w(-i) = -w(i)`, stored in window
/// notation: `images[i-1] = w(i)`.
///
/// Plain permutations (type A) are the signed permutations with all
/// images positive. The value is `Copy` and fixed-width so that brute-force
/// enumeration does not allocate per element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    n: u8,
    images: [i8; MAX_RANK],
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_RANK, "rank {n} exceeds MAX_RANK");
        let mut images = [0i8; MAX_RANK];
        for (i, v) in images.iter_mut().take(n).enumerate() {
            *v = (i + 1) as i8;
        }
        SignedPermutation { n: n as u8, images }
    }

    /// Validates that the absolute values form a permutation of `1..=n`.
    pub fn from_images(images: &[i32]) -> Result<Self> {
        let n = images.len();
        if n > MAX_RANK {
            return Err(Error::UnsupportedRank {
                rank: n,
                min: 0,
                max: MAX_RANK,
            });
        }
        let mut seen = [false; MAX_RANK + 1];
        let mut out = [0i8; MAX_RANK];
        for (i, &v) in images.iter().enumerate() {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::Parse(format!(
                    "{images:?} is not a signed permutation of rank {n}"
                )));
            }
            seen[a] = true;
            out[i] = v as i8;
        }
        Ok(SignedPermutation {
            n: n as u8,
            images: out,
        })
    }

    pub(crate) fn from_raw(n: usize, images: [i8; MAX_RANK]) -> Self {
        SignedPermutation { n: n as u8, images }
    }

    /// Longest element of `S_n`: `i ↦ n + 1 - i`.
    pub fn reversal(n: usize) -> Self {
        let mut w = Self::identity(n);
        for i in 0..n {
            w.images[i] = (n - i) as i8;
        }
        w
    }

    /// `-1`: every `i ↦ -i`.
    pub fn negation(n: usize) -> Self {
        let mut w = Self::identity(n);
        for v in w.images.iter_mut().take(n) {
            *v = -*v;
        }
        w
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    pub fn images(&self) -> &[i8] {
        &self.images[..self.n as usize]
    }

    /// `w(i)` for any nonzero `i` in `-n..=n`.
    #[inline]
    pub fn apply(&self, i: i32) -> i32 {
        debug_assert!(i != 0 && i.unsigned_abs() as usize <= self.n as usize);
        if i > 0 {
            self.images[(i - 1) as usize] as i32
        } else {
            -(self.images[(-i - 1) as usize] as i32)
        }
    }

    /// `(self · other)(i) = self(other(i))`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(self.compose(other))
    }

    #[inline]
    pub(crate) fn compose(&self, other: &Self) -> Self {
        let mut images = [0i8; MAX_RANK];
        for (i, v) in images.iter_mut().take(self.n as usize).enumerate() {
            *v = self.apply(other.images[i] as i32) as i8;
        }
        SignedPermutation {
            n: self.n,
            images,
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = [0i8; MAX_RANK];
        for (i, &v) in self.images().iter().enumerate() {
            let a = v.unsigned_abs() as usize - 1;
            images[a] = if v > 0 { (i + 1) as i8 } else { -((i + 1) as i8) };
        }
        SignedPermutation {
            n: self.n,
            images,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images()
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    /// Number of `i` in `1..=n` with `w(i) < 0`.
    pub fn negative_count(&self) -> usize {
        self.images().iter().filter(|&&v| v < 0).count()
    }

    pub fn is_unsigned(&self) -> bool {
        self.negative_count() == 0
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.images().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Window notation, e.g. `[-2,1,3]`.
impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [..] window notation, got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(SignedPermutation::identity(0));
        }
        let images = inner
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<i32>()
                    .map_err(|e| Error::Parse(format!("bad entry {x:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::from_images(&images)
    }
}
