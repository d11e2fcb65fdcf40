//! Monomials as exponent vectors over a fixed ambient variable count.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A monomial `x_1^{a_1} ... x_n^{a_n}` stored by its exponent vector.
///
/// Exponent `exps[i]` belongs to the variable printed as `x{i+1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    /// The unit monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Self { exps: vec![0; n] }
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Self { exps }
    }

    /// Product of all variables, `x_1 x_2 ... x_n`.
    pub fn all_ones(n: usize) -> Self {
        Self { exps: vec![1; n] }
    }

    /// Squarefree monomial with the given (0-based) support.
    pub fn from_support(n: usize, support: &[usize]) -> Self {
        let mut exps = vec![0; n];
        for &i in support {
            exps[i] = 1;
        }
        Self { exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn into_exps(self) -> Vec<u32> {
        self.exps
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// 0-based indices of the variables that divide this monomial.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    fn check_same_n(&self, other: &Monomial) -> Result<()> {
        if self.n() == other.n() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                left: self.n(),
                right: other.n(),
            })
        }
    }

    /// `self | other`, i.e. componentwise `<=`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_same_n(other)?;
        Ok(self.divides_unchecked(other))
    }

    #[inline]
    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_n(other)?;
        Ok(self.lcm_unchecked(other))
    }

    #[inline]
    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_n(other)?;
        self.mul_unchecked(other)
    }

    /// Product without the length check; exponent overflow is still an error.
    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn pow(&self, k: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&a| a.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    /// Exact quotient `self / other`, `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Result<Option<Monomial>> {
        self.check_same_n(other)?;
        if !other.divides_unchecked(self) {
            return Ok(None);
        }
        Ok(Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        }))
    }

    /// Bitmask filter for divisibility: `a | b` implies `mask(a) & !mask(b) == 0`.
    ///
    /// Each variable gets a run of bits encoding the thresholds `e >= 1, e >= 2, ...`.
    pub(crate) fn div_mask(&self) -> u64 {
        let n = self.exps.len().max(1);
        let bits = (64 / n).clamp(1, 8) as u32;
        let mut mask = 0u64;
        let mut pos = 0u32;
        for &e in &self.exps {
            if pos >= 64 {
                break;
            }
            for t in 0..bits {
                if pos + t >= 64 {
                    break;
                }
                if e > t {
                    mask |= 1 << (pos + t);
                }
            }
            pos += bits;
        }
        mask
    }
}

/// Graded lexicographic order: lower degree first, ties broken so that
/// `x1 > x2 > ... > xn` (so `x1^2 < x1*x2 < x2^2` in listing order).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Serialized as its printed form, e.g. `"x1^2*x3"`.
impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses a comma separated exponent vector such as `1,0,2`.
impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let exps = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad exponent {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial::new(exps))
    }
}
