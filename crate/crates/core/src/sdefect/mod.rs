//! Symbolic defects of cover ideals.
//!
//! `sdefect(I, m)` is the minimal number of generators of `I^(m) / I^m`.
//! For monomial ideals it equals the number of minimal generators of
//! `I^(m)` that do not lie in `I^m`:
//!
//! A minimal generator `u` of `I^(m)` never lies in `𝔪 I^(m)`, and a
//! monomial lies in the monomial ideal `I^m + 𝔪 I^(m)` iff it lies in one of
//! the summands. So the images of the minimal generators outside `I^m` are
//! a `K`-basis of `I^(m) / (I^m + 𝔪 I^(m))`, whose dimension is the minimal
//! number of generators of the quotient module by Nakayama's lemma.
//!
//! Besides the brute-force count this module evaluates the two recursions
//! `sdefect(m) = sdefect(m-2) + ν(·, m-2)`, one for graphs whose second
//! symbolic defect is 1 and which satisfy the indecomposability property,
//! one for odd cycles through the staircase ideal.

mod indecomposability;
mod triangle_tail;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use parking_lot::RwLock;
use rayon::prelude::*;
use serde::Serialize;

pub use indecomposability::{
    check_indecomposability_conditions, check_indecomposability_exhaustive,
    factor_into_generators, indecomposability_condition, ConditionCertificate, Counterexample,
    ExhaustiveOptions, ExhaustiveOutcome,
};
pub use triangle_tail::{verify_triangle_tail, PathConvention, TriangleTailRecursion, TriangleTailReport};

use crate::cover::{cover_ideal, symbolic_power_capped};
use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Resource caps for the combinatorial computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Largest number of minimal generators any intermediate ideal may have.
    pub max_gens: usize,
    /// Largest power `m` accepted.
    pub max_m: u32,
}

impl Limits {
    pub const DEFAULT_MAX_GENS: usize = 200_000;
    pub const DEFAULT_MAX_M: u32 = 12;

    fn check_m(&self, m: u32) -> Result<()> {
        if m > self.max_m {
            Err(Error::ResourceCap {
                what: "power m",
                count: m as usize,
                cap: self.max_m as usize,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_gens: Self::DEFAULT_MAX_GENS,
            max_m: Self::DEFAULT_MAX_M,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Brute,
    Recursion,
    CycleRecursion,
    ClosedForm,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::Brute => "brute",
            Method::Recursion => "recursion",
            Method::CycleRecursion => "cycle_recursion",
            Method::ClosedForm => "closed_form",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SdefectReport {
    pub graph: String,
    pub m: u32,
    pub value: u64,
    /// Minimal generators of `I^(m)` outside `I^m`; only filled by brute force.
    pub witnesses: Vec<Monomial>,
    pub method: Method,
    /// Hypotheses checked before a recursion was applied.
    pub hypotheses: Vec<String>,
}

/// Cover ideal of a graph together with memoized ordinary and symbolic
/// powers. Lookups take a shared lock; computing a missing power takes
/// the exclusive one.
pub struct CoverPowers {
    graph: Graph,
    ideal: MonomialIdeal,
    all_ones: Monomial,
    limits: Limits,
    ordinary: RwLock<Vec<Arc<MonomialIdeal>>>,
    symbolic: RwLock<BTreeMap<u32, Arc<MonomialIdeal>>>,
}

impl CoverPowers {
    pub fn new(graph: &Graph, limits: Limits) -> Self {
        let ideal = cover_ideal(graph);
        let n = graph.n();
        Self {
            graph: graph.clone(),
            ordinary: RwLock::new(vec![Arc::new(MonomialIdeal::unit(n)), Arc::new(ideal.clone())]),
            symbolic: RwLock::new(BTreeMap::new()),
            ideal,
            all_ones: Monomial::all_ones(n),
            limits,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    /// `F`, the product of all variables.
    pub fn all_ones(&self) -> &Monomial {
        &self.all_ones
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// `I^m`.
    pub fn ordinary(&self, m: u32) -> Result<Arc<MonomialIdeal>> {
        self.limits.check_m(m)?;
        let m = m as usize;
        if let Some(p) = self.ordinary.read().get(m) {
            return Ok(Arc::clone(p));
        }
        let mut powers = self.ordinary.write();
        while powers.len() <= m {
            let next = powers.last().expect("I^0 is always present").multiply(&self.ideal)?;
            crate::ideal::check_cap("generators of an ordinary power", next.mu(), self.limits.max_gens)?;
            powers.push(Arc::new(next));
        }
        Ok(Arc::clone(&powers[m]))
    }

    /// `I^(m)`.
    pub fn symbolic(&self, m: u32) -> Result<Arc<MonomialIdeal>> {
        self.limits.check_m(m)?;
        if let Some(p) = self.symbolic.read().get(&m) {
            return Ok(Arc::clone(p));
        }
        let computed = Arc::new(symbolic_power_capped(&self.graph, m, self.limits.max_gens)?);
        let mut cache = self.symbolic.write();
        Ok(Arc::clone(cache.entry(m).or_insert(computed)))
    }

    /// Minimal generators of `I^(m)` not contained in `I^m`.
    pub fn sdefect_brute(&self, m: u32) -> Result<SdefectReport> {
        if m == 0 {
            return Err(Error::Precondition("symbolic defect needs m >= 1".into()));
        }
        let symbolic = self.symbolic(m)?;
        let ordinary = self.ordinary(m)?;
        let witnesses: Vec<Monomial> = symbolic
            .gens()
            .iter()
            .filter(|f| !ordinary.contains_unchecked(f))
            .cloned()
            .collect();
        Ok(SdefectReport {
            graph: self.graph.id(),
            m,
            value: witnesses.len() as u64,
            witnesses,
            method: Method::Brute,
            hypotheses: Vec::new(),
        })
    }

    /// `ν(I, m)`: minimal generators of `I^m` not divisible by `F`.
    pub fn nu(&self, m: u32) -> Result<u64> {
        if m == 0 {
            return Ok(1);
        }
        let p = self.ordinary(m)?;
        Ok(count_not_divisible(&p, &self.all_ones))
    }
}

fn count_not_divisible(ideal: &MonomialIdeal, f: &Monomial) -> u64 {
    ideal.gens().iter().filter(|g| !f.divides_unchecked(g)).count() as u64
}

/// Brute-force `sdefect(J(G), m)`.
pub fn sdefect_brute(g: &Graph, m: u32, limits: Limits) -> Result<SdefectReport> {
    CoverPowers::new(g, limits).sdefect_brute(m)
}

/// Brute-force symbolic defects for several `m`, evaluated in parallel over
/// a shared power cache. Results follow the order of `ms`.
pub fn sdefect_brute_range(g: &Graph, ms: &[u32], limits: Limits) -> Result<Vec<SdefectReport>> {
    let powers = CoverPowers::new(g, limits);
    if let Some(&top) = ms.iter().max() {
        // build the ordinary chain once instead of contending for it
        powers.ordinary(top)?;
    }
    ms.par_iter().map(|&m| powers.sdefect_brute(m)).collect()
}

/// `ν(I, m)`: the number of minimal generators of `I^m` not divisible by `f`.
/// By convention `ν(I, 0) = 1`.
pub fn nu(ideal: &MonomialIdeal, m: u32, f: &Monomial) -> Result<u64> {
    nu_capped(ideal, m, f, usize::MAX)
}

pub fn nu_capped(ideal: &MonomialIdeal, m: u32, f: &Monomial, cap: usize) -> Result<u64> {
    if f.n() != ideal.n() {
        return Err(Error::LengthMismatch {
            left: ideal.n(),
            right: f.n(),
        });
    }
    if m == 0 {
        return Ok(1);
    }
    Ok(count_not_divisible(&ideal.power_capped(m, cap)?, f))
}

/// Evaluates `s(1) = 0`, `s(2) = 1`, `s(m) = s(m-2) + ν(m-2)`.
fn run_recursion<F>(m: u32, mut nu_at: F) -> Result<u64>
where
    F: FnMut(u32) -> Result<u64>,
{
    let mut value = if m % 2 == 1 { 0 } else { 1 };
    let mut k = if m % 2 == 1 { 1 } else { 2 };
    while k < m {
        value += nu_at(k)?;
        k += 2;
    }
    Ok(value)
}

/// The recursion for graphs with `sdefect(J(G), 2) = 1`, evaluated
/// without checking any hypothesis. Used to expose how far the formula is
/// from the truth when the hypotheses fail.
pub fn sdefect_formula(g: &Graph, m: u32, limits: Limits) -> Result<SdefectReport> {
    let powers = CoverPowers::new(g, limits);
    sdefect_formula_with(&powers, m)
}

pub fn sdefect_formula_with(powers: &CoverPowers, m: u32) -> Result<SdefectReport> {
    formula_report(powers, m, Vec::new())
}

fn formula_report(powers: &CoverPowers, m: u32, hypotheses: Vec<String>) -> Result<SdefectReport> {
    if m == 0 {
        return Err(Error::Precondition("symbolic defect needs m >= 1".into()));
    }
    powers.limits.check_m(m)?;
    let value = run_recursion(m, |k| powers.nu(k))?;
    Ok(SdefectReport {
        graph: powers.graph.id(),
        m,
        value,
        witnesses: Vec::new(),
        method: Method::Recursion,
        hypotheses,
    })
}

/// Evidence that the recursion applies up to power `m`: the second
/// symbolic defect is 1, and either one of the sufficient structural
/// conditions holds or no product `F^k g_1 ... g_s` with `2k + s <= m`
/// lies in `I^(2k+s)`.
pub fn recursion_hypotheses(powers: &CoverPowers, m: u32) -> Result<Vec<String>> {
    let second = powers.sdefect_brute(2)?;
    if second.value != 1 {
        return Err(Error::Precondition(format!(
            "recursion needs sdefect(J(G),2) = 1, found {}",
            second.value
        )));
    }
    let mut hypotheses = vec!["sdefect(J(G),2) = 1".to_string()];
    if let Some(cert) = indecomposability_condition(powers.ideal()) {
        hypotheses.push(format!("indecomposability via {cert}"));
        return Ok(hypotheses);
    }
    let opts = ExhaustiveOptions {
        k_max: m / 2,
        s_max: m,
        max_total: Some(m),
        alpha_degree_only: false,
    };
    let outcome = indecomposability::exhaustive_with(powers, &opts)?;
    if let Some(cx) = outcome.counterexample {
        return Err(Error::Precondition(format!(
            "indecomposability property fails: {cx}"
        )));
    }
    hypotheses.push(format!(
        "indecomposability checked exhaustively for 2k+s <= {m} ({} products)",
        outcome.products_checked
    ));
    Ok(hypotheses)
}

/// `sdefect(J(G), m)` through the recursion, refusing when its hypotheses
/// cannot be established.
pub fn sdefect_recursive(g: &Graph, m: u32, limits: Limits) -> Result<SdefectReport> {
    let powers = CoverPowers::new(g, limits);
    sdefect_recursive_with(&powers, m)
}

pub fn sdefect_recursive_with(powers: &CoverPowers, m: u32) -> Result<SdefectReport> {
    if m == 0 {
        return Err(Error::Precondition("symbolic defect needs m >= 1".into()));
    }
    let hypotheses = recursion_hypotheses(powers, m)?;
    formula_report(powers, m, hypotheses)
}

/// Staircase covers `g_i = x_i x_{i+2} ... x_{i+n-1}` (indices mod `n`) of
/// the odd cycle `C_n`, in order `g_1, ..., g_n`.
pub fn cycle_staircase_generators(n: usize) -> Result<Vec<Monomial>> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "staircase generators need an odd cycle length >= 3, got {n}"
        )));
    }
    Ok((0..n)
        .map(|i| {
            let support: Vec<usize> = (0..n).step_by(2).map(|k| (i + k) % n).collect();
            Monomial::from_support(n, &support)
        })
        .collect())
}

/// The ideal generated by the staircase covers of `C_n`.
pub fn cycle_staircase_ideal(n: usize) -> Result<MonomialIdeal> {
    MonomialIdeal::minimalize(n, cycle_staircase_generators(n)?)
}

/// `sdefect(J(C_n), m)` for odd `n` via the staircase recursion
/// `s(m) = s(m-2) + ν(I*, m-2)`.
pub fn sdefect_cycle(n: usize, m: u32, limits: Limits) -> Result<SdefectReport> {
    if m == 0 {
        return Err(Error::Precondition("symbolic defect needs m >= 1".into()));
    }
    limits.check_m(m)?;
    let staircase = cycle_staircase_ideal(n)?;
    let f = Monomial::all_ones(n);
    let powers = staircase.powers_up_to(m.saturating_sub(2), limits.max_gens)?;
    let value = run_recursion(m, |k| Ok(count_not_divisible(&powers[k as usize], &f)))?;
    Ok(SdefectReport {
        graph: Family::Cycle(n).to_string(),
        m,
        value,
        witnesses: Vec::new(),
        method: Method::CycleRecursion,
        hypotheses: vec![format!("C{n} is an odd cycle")],
    })
}

/// Closed form for complete graphs: `nk` at `m = 2k+1`, `nk+1` at `m = 2k+2`.
pub fn sdefect_complete_closed_form(n: usize, m: u32) -> Result<SdefectReport> {
    if m == 0 {
        return Err(Error::Precondition("symbolic defect needs m >= 1".into()));
    }
    if n < 3 {
        return Err(Error::Precondition(format!("closed form needs K_n with n >= 3, got {n}")));
    }
    let n64 = n as u64;
    let value = if m % 2 == 1 {
        n64 * u64::from((m - 1) / 2)
    } else {
        n64 * u64::from((m - 2) / 2) + 1
    };
    Ok(SdefectReport {
        graph: Family::Complete(n).to_string(),
        m,
        value,
        witnesses: Vec::new(),
        method: Method::ClosedForm,
        hypotheses: Vec::new(),
    })
}
