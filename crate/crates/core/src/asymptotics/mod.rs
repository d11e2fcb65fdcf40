//! Asymptotic invariants: Waldschmidt constants, resurgence lower bounds,
//! quasi-polynomial fits of symbolic defect sequences and growth degrees
//! of generator counts.

mod jacobian;
mod quasipoly;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

pub use jacobian::{jacobian_rank_at, jacobian_rank_full, EVAL_MAX, EVAL_MIN, RETRIES};
pub use quasipoly::{fit_quasipolynomial, FitError, QuasiPolynomial, RationalPolynomial};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::sdefect::{recursion_hypotheses, CoverPowers, Limits};

/// Exact rational with `u64` parts.
pub type Rational = Ratio<u64>;

fn ser_ratio<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

fn ser_opt_ratio<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.collect_str(r),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WaldschmidtReport {
    pub graph: String,
    /// `α(J^(1)), α(J^(2))`.
    pub alphas: Vec<u64>,
    /// 1-based index `c` attaining the minimum of `α(J^(c))/c`.
    pub minimizing_index: usize,
    #[serde(serialize_with = "ser_ratio")]
    pub value: Rational,
    /// `α(J^(2))/2 <= α(J)`.
    pub bounded_by_alpha: bool,
    /// Present only when `sdefect(J(G), 2) = 1`.
    #[serde(serialize_with = "ser_opt_ratio")]
    pub resurgence_lower_bound: Option<Rational>,
}

/// `min_{1 <= m <= k} α(powers[m-1]) / m` and the smallest minimizing `m`,
/// where `powers` lists the symbolic powers up to the generation degree
/// of the symbolic Rees algebra.
pub fn waldschmidt_general(powers: &[MonomialIdeal]) -> Result<(Rational, usize)> {
    let mut best: Option<(Rational, usize)> = None;
    for (i, p) in powers.iter().enumerate() {
        let ratio = Rational::new(p.alpha()?, i as u64 + 1);
        if best.as_ref().is_none_or(|(b, _)| ratio < *b) {
            best = Some((ratio, i + 1));
        }
    }
    best.ok_or_else(|| Error::Precondition("Waldschmidt constant needs at least one power".into()))
}

/// `α̂(J(G)) = α(J^(2))/2`, as the symbolic Rees algebra of a cover ideal
/// is generated in degree at most 2.
pub fn waldschmidt(g: &Graph, limits: Limits) -> Result<WaldschmidtReport> {
    if g.edge_count() == 0 {
        return Err(Error::Precondition("Waldschmidt constant needs a graph with an edge".into()));
    }
    let powers = CoverPowers::new(g, limits);
    let first = powers.symbolic(1)?;
    let second = powers.symbolic(2)?;
    let alphas = vec![first.alpha()?, second.alpha()?];
    let (value, minimizing_index) = waldschmidt_general(&[(*first).clone(), (*second).clone()])?;
    let resurgence_lower_bound = match powers.sdefect_brute(2)?.value {
        1 => Some(resurgence_bound_from(g.n() as u64, alphas[0])),
        _ => None,
    };
    Ok(WaldschmidtReport {
        graph: g.id(),
        bounded_by_alpha: Rational::new(alphas[1], 2) <= Rational::from_integer(alphas[0]),
        alphas,
        minimizing_index,
        value,
        resurgence_lower_bound,
    })
}

fn resurgence_bound_from(n: u64, alpha: u64) -> Rational {
    if n < 2 * alpha {
        Rational::new(2 * alpha, n)
    } else {
        Rational::from_integer(1)
    }
}

/// Lower bound for the resurgence of `J(G)` on `n` vertices with
/// `sdefect(J(G), 2) = 1`: `2α/n` when `n/2 < α`, else 1.
pub fn resurgence_lower_bound(g: &Graph, limits: Limits) -> Result<Rational> {
    let powers = CoverPowers::new(g, limits);
    let second = powers.sdefect_brute(2)?.value;
    if second != 1 {
        return Err(Error::Precondition(format!(
            "resurgence lower bound needs sdefect(J(G),2) = 1, found {second}"
        )));
    }
    Ok(resurgence_bound_from(g.n() as u64, powers.ideal().alpha()?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthEstimate {
    /// Degree of the polynomial that fits `μ(I^m)` on its stable tail.
    pub degree: usize,
    /// First `m` of the window the polynomial reproduces.
    pub onset: i64,
    /// Last `m` sampled.
    pub m_max: u32,
    /// Samples beyond the `degree + 1` that pin the polynomial down.
    pub margin: usize,
    /// `μ(I^m)` for `m = 1..=m_max`.
    pub values: Vec<u64>,
}

/// Degree of the polynomial `μ(I^m)` for large `m`, fitted on `1..=m_max`.
pub fn mu_growth_degree(ideal: &MonomialIdeal, m_max: u32, cap: usize) -> Result<GrowthEstimate> {
    if ideal.is_zero() {
        return Err(Error::Precondition("generator growth of the zero ideal".into()));
    }
    let values: Vec<u64> = ideal
        .powers_up_to(m_max, cap)?
        .iter()
        .skip(1)
        .map(|p| p.mu() as u64)
        .collect();
    let fit = fit_i64(1, &values, 1)?;
    Ok(GrowthEstimate {
        degree: fit.degree(),
        onset: fit.onset,
        m_max,
        margin: fit.verification_margin(),
        values,
    })
}

fn fit_i64(start: i64, values: &[u64], period: usize) -> Result<QuasiPolynomial> {
    let seq: Vec<i64> = values.iter().map(|&v| v as i64).collect();
    fit_quasipolynomial(start, &seq, period).map_err(|e| Error::Precondition(e.to_string()))
}

/// `I` with every generator divisible by `x_i` removed: the image of `I`
/// in the quotient by `x_i`.
pub fn quotient_by_variable(ideal: &MonomialIdeal, i: usize) -> MonomialIdeal {
    MonomialIdeal::minimalize(
        ideal.n(),
        ideal.gens().iter().filter(|g| g.exps()[i] == 0).cloned(),
    )
    .expect("generators share n")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SdefectDegreeReport {
    pub graph: String,
    /// 0-based variable whose quotient has the most generators.
    pub variable: usize,
    pub quotient_generators: Vec<Monomial>,
    pub quotient_growth: GrowthEstimate,
    /// `d + 1` for the quotient growth degree `d`.
    pub degree: usize,
    /// Degree of the period-2 fit of the brute-force sequence on `1..=m_max`.
    pub fitted_degree: usize,
    pub sdefect_values: Vec<u64>,
    pub agrees: bool,
    pub hypotheses: Vec<String>,
}

/// Degree of `sdefect(J(G), m)` as a quasi-polynomial in `m`, from the
/// generator growth of the quotient by a variable that maximizes the
/// number of surviving generators, cross-checked against a fit of the
/// brute-force sequence.
pub fn sdefect_degree(g: &Graph, m_max: u32, limits: Limits) -> Result<SdefectDegreeReport> {
    let powers = CoverPowers::new(g, limits);
    let hypotheses = recursion_hypotheses(&powers, m_max)?;
    let ideal = powers.ideal();
    let (variable, quotient) = (0..g.n())
        .map(|i| (i, quotient_by_variable(ideal, i)))
        .max_by(|(i, a), (j, b)| a.mu().cmp(&b.mu()).then(j.cmp(i)))
        .ok_or_else(|| Error::Precondition("graph has no vertices".into()))?;
    let quotient_growth = mu_growth_degree(&quotient, m_max, limits.max_gens)?;
    let sdefect_values = (1..=m_max)
        .map(|m| powers.sdefect_brute(m).map(|r| r.value))
        .collect::<Result<Vec<_>>>()?;
    let fitted_degree = fit_i64(1, &sdefect_values, 2)?.degree();
    let degree = quotient_growth.degree + 1;
    Ok(SdefectDegreeReport {
        graph: g.id(),
        variable,
        quotient_generators: quotient.gens().to_vec(),
        quotient_growth,
        degree,
        fitted_degree,
        sdefect_values,
        agrees: degree == fitted_degree,
        hypotheses,
    })
}
