//! Exact fitting of quasi-polynomials to integer sequences.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Polynomial in `m` with exact rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial is reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, m: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(m));
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Self, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
        Self::new((0..len).map(|i| get(self, i) + get(other, i)).collect())
    }

    fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => {}
                (_, false) => write!(f, "{a}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "m")?,
                _ => write!(f, "m^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for RationalPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `f(m) = polys[m mod period](m)` for `m >= onset`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuasiPolynomial {
    pub period: usize,
    pub polys: Vec<RationalPolynomial>,
    /// Smallest `m` from which every fitted sample is reproduced.
    pub onset: i64,
    /// Samples per residue class inside the verified tail.
    pub tail_samples: Vec<usize>,
}

impl QuasiPolynomial {
    pub fn degree(&self) -> usize {
        self.polys.iter().map(RationalPolynomial::degree).max().unwrap_or(0)
    }

    pub fn eval(&self, m: i64) -> BigRational {
        let r = m.rem_euclid(self.period as i64) as usize;
        self.polys[r].eval(m)
    }

    /// Smallest number of verified samples over residue classes, minus
    /// what is needed to pin down the polynomial itself.
    pub fn verification_margin(&self) -> usize {
        self.polys
            .iter()
            .zip(&self.tail_samples)
            .map(|(p, &t)| t.saturating_sub(p.degree() + 1))
            .min()
            .unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum FitError {
    #[error("insufficient data: residue class {residue} has {have} samples, need at least {needed}")]
    InsufficientData { residue: usize, have: usize, needed: usize },
    #[error("no fit: finite differences of residue class {residue} never vanish within its {have} samples; supply more terms")]
    NoFit { residue: usize, have: usize },
    #[error("period must be positive")]
    ZeroPeriod,
}

/// Fits a quasi-polynomial of the given period to `values`, where
/// `values[j]` is the sample at `m = start + j`.
///
/// Each residue class is fitted separately: the smallest degree `p` is
/// chosen whose `(p+1)`-th forward differences vanish on a tail that holds
/// at least `p + 2` samples, so that every fitted polynomial is checked
/// against at least one sample beyond those that determine it.
pub fn fit_quasipolynomial(start: i64, values: &[i64], period: usize) -> Result<QuasiPolynomial, FitError> {
    if period == 0 {
        return Err(FitError::ZeroPeriod);
    }
    let mut polys = vec![RationalPolynomial::zero(); period];
    let mut tail_samples = vec![0; period];
    for offset in 0..period {
        let m0 = start + offset as i64;
        let residue = m0.rem_euclid(period as i64) as usize;
        let class: Vec<BigRational> = values
            .iter()
            .skip(offset)
            .step_by(period)
            .map(|&v| BigRational::from_integer(BigInt::from(v)))
            .collect();
        if class.len() < 2 {
            return Err(FitError::InsufficientData {
                residue,
                have: class.len(),
                needed: 2,
            });
        }
        let (poly, used) = fit_class(&class, m0, period as i64).ok_or(FitError::NoFit {
            residue,
            have: class.len(),
        })?;
        polys[residue] = poly;
        tail_samples[residue] = used;
    }

    let mut qp = QuasiPolynomial {
        period,
        polys,
        onset: start,
        tail_samples,
    };
    let mut onset = start + values.len() as i64;
    for (j, &v) in values.iter().enumerate().rev() {
        let m = start + j as i64;
        if qp.eval(m) != BigRational::from_integer(BigInt::from(v)) {
            break;
        }
        onset = m;
    }
    qp.onset = onset;
    Ok(qp)
}

/// Fits one residue class sampled at `m0, m0 + step, ...`. Returns the
/// polynomial and the number of samples in its verified tail.
fn fit_class(class: &[BigRational], m0: i64, step: i64) -> Option<(RationalPolynomial, usize)> {
    let len = class.len();
    // table[k] = k-th forward differences
    let mut table: Vec<Vec<BigRational>> = vec![class.to_vec()];
    for k in 1..len {
        let prev = &table[k - 1];
        let next: Vec<BigRational> = prev.windows(2).map(|w| &w[1] - &w[0]).collect();
        table.push(next);
    }
    for p in 0..=len - 2 {
        let diffs = &table[p + 1];
        let tail_start = diffs
            .iter()
            .rposition(|d| !d.is_zero())
            .map_or(0, |i| i + 1);
        if tail_start >= diffs.len() {
            continue;
        }
        // Newton forward form at m_t = m0 + step * tail_start
        let m_t = m0 + step * tail_start as i64;
        let u = RationalPolynomial::new(vec![
            BigRational::new(BigInt::from(-m_t), BigInt::from(step)),
            BigRational::new(BigInt::one(), BigInt::from(step)),
        ]);
        let mut basis = RationalPolynomial::constant(BigRational::one());
        let mut poly = RationalPolynomial::zero();
        for (k, row) in table.iter().enumerate().take(p + 1) {
            let coeff = &row[tail_start];
            poly = poly.add(&basis.scale(coeff));
            // basis <- basis * (u - k) / (k + 1)
            let shifted = u.add(&RationalPolynomial::constant(BigRational::from_integer(BigInt::from(-(k as i64)))));
            basis = basis
                .mul(&shifted)
                .scale(&BigRational::new(BigInt::one(), BigInt::from(k as i64 + 1)));
        }
        return Some((poly, len - tail_start));
    }
    None
}
