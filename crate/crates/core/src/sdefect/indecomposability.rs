//! The indecomposability property: no product `F^k g_1 ... g_s` of `F`
//! with minimal generators of `J(G)` lies in the ordinary power
//! `J(G)^(2k+s)`, for `k >= 1` and `s >= 0`.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use super::{CoverPowers, Limits};
use crate::cover::cover_ideal;
use crate::error::Result;
use crate::graph::Graph;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Which sufficient condition for the indecomposability property fired.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition")]
pub enum ConditionCertificate {
    /// All generators have degree `α` and `deg F < 2α`.
    Cond1 { alpha: u64 },
    /// Two degrees `α1 < α2` with `deg F < α1 + α2`, and `variable` divides
    /// every low-degree generator and no high-degree one.
    Cond2 { alpha1: u64, alpha2: u64, variable: usize },
    /// Two degrees `α1 < α2` with `deg F < α1 + α2`, and the `variables`
    /// divide every high-degree generator and no low-degree one, with
    /// `α2 - α1 <= variables.len()`.
    Cond3 { alpha1: u64, alpha2: u64, variables: Vec<usize> },
}

impl fmt::Display for ConditionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConditionCertificate::Cond1 { alpha } => write!(f, "Cond1 (equigenerated in degree {alpha})"),
            ConditionCertificate::Cond2 { alpha1, alpha2, variable } => {
                write!(f, "Cond2 (degrees {alpha1} < {alpha2}, separating variable x{})", variable + 1)
            }
            ConditionCertificate::Cond3 { alpha1, alpha2, variables } => {
                let vars: Vec<String> = variables.iter().map(|v| format!("x{}", v + 1)).collect();
                write!(f, "Cond3 (degrees {alpha1} < {alpha2}, variables {})", vars.join(","))
            }
        }
    }
}

/// Checks the three sufficient conditions on an ideal in `n = ideal.n()`
/// variables, where `F` is the product of all of them. Returns the first
/// condition that holds.
pub fn indecomposability_condition(ideal: &MonomialIdeal) -> Option<ConditionCertificate> {
    let deg_f = ideal.n() as u64;
    let degrees = ideal.degrees();
    match degrees.as_slice() {
        [alpha] if deg_f < 2 * alpha => Some(ConditionCertificate::Cond1 { alpha: *alpha }),
        [alpha1, alpha2] if deg_f < alpha1 + alpha2 => {
            let (low, high): (Vec<&Monomial>, Vec<&Monomial>) =
                ideal.gens().iter().partition(|g| g.degree() == *alpha1);
            let divides_all = |set: &[&Monomial], v: usize| set.iter().all(|g| g.exps()[v] > 0);
            let divides_none = |set: &[&Monomial], v: usize| set.iter().all(|g| g.exps()[v] == 0);
            let n = ideal.n();
            if let Some(variable) = (0..n).find(|&v| divides_all(&low, v) && divides_none(&high, v)) {
                return Some(ConditionCertificate::Cond2 {
                    alpha1: *alpha1,
                    alpha2: *alpha2,
                    variable,
                });
            }
            let variables: Vec<usize> = (0..n)
                .filter(|&v| divides_all(&high, v) && divides_none(&low, v))
                .collect();
            if alpha2 - alpha1 <= variables.len() as u64 {
                return Some(ConditionCertificate::Cond3 {
                    alpha1: *alpha1,
                    alpha2: *alpha2,
                    variables,
                });
            }
            None
        }
        _ => None,
    }
}

/// [`indecomposability_condition`] applied to `J(G)`.
pub fn check_indecomposability_conditions(g: &Graph) -> Option<ConditionCertificate> {
    indecomposability_condition(&cover_ideal(g))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExhaustiveOptions {
    pub k_max: u32,
    pub s_max: u32,
    /// Optional bound on `2k + s`.
    pub max_total: Option<u32>,
    /// Only use generators of minimal degree as factors.
    pub alpha_degree_only: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub k: u32,
    pub factors: Vec<Monomial>,
    pub product: Monomial,
    /// The ordinary power `2k + s` that contains `product`.
    pub power: u32,
    /// `power` minimal generators whose product divides `product`.
    pub factorization: Vec<Monomial>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |ms: &[Monomial]| ms.iter().map(|m| format!("({m})")).collect::<String>();
        let lhs = if self.k == 1 { "F".to_string() } else { format!("F^{}", self.k) };
        write!(
            f,
            "{lhs}{} = {} lies in I^{} via {}",
            show(&self.factors),
            self.product,
            self.power,
            show(&self.factorization)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExhaustiveOutcome {
    /// No counterexample within the searched bounds.
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
    /// Distinct products tested for membership.
    pub products_checked: usize,
}

/// Searches products `F^k g_{i_1} ... g_{i_s}` for `1 <= k <= k_max`,
/// `0 <= s <= s_max` (and `2k + s <= max_total`) for one lying in
/// `I^(2k+s)`. A negative answer only certifies the searched range.
pub fn check_indecomposability_exhaustive(
    g: &Graph,
    opts: &ExhaustiveOptions,
    limits: Limits,
) -> Result<ExhaustiveOutcome> {
    exhaustive_with(&CoverPowers::new(g, limits), opts)
}

pub(crate) fn exhaustive_with(powers: &CoverPowers, opts: &ExhaustiveOptions) -> Result<ExhaustiveOutcome> {
    let ideal = powers.ideal();
    let factors: Vec<Monomial> = match ideal.alpha() {
        Ok(alpha) if opts.alpha_degree_only => ideal
            .gens()
            .iter()
            .filter(|g| g.degree() == alpha)
            .cloned()
            .collect(),
        _ => ideal.gens().to_vec(),
    };
    let mut seen: HashSet<Monomial> = HashSet::new();
    for k in 1..=opts.k_max {
        let fk = powers.all_ones().pow(k)?;
        for s in 0..=opts.s_max {
            let total = 2 * k + s;
            if opts.max_total.is_some_and(|t| total > t) {
                break;
            }
            let target = powers.ordinary(total)?;
            let mut found = None;
            for_each_multiset(factors.len(), s as usize, &mut |idx| {
                let mut q = fk.clone();
                for &i in idx {
                    q = q.mul_unchecked(&factors[i])?;
                }
                if !seen.insert(q.clone()) {
                    return Ok(false);
                }
                if target.contains_unchecked(&q) {
                    found = Some((idx.iter().map(|&i| factors[i].clone()).collect::<Vec<_>>(), q));
                    return Ok(true);
                }
                Ok(false)
            })?;
            if let Some((chosen, product)) = found {
                let factorization = factor_into_generators(ideal, &product, total)
                    .expect("membership in I^p implies a factorization");
                return Ok(ExhaustiveOutcome {
                    holds: false,
                    counterexample: Some(Counterexample {
                        k,
                        factors: chosen,
                        product,
                        power: total,
                        factorization,
                    }),
                    products_checked: seen.len(),
                });
            }
        }
    }
    Ok(ExhaustiveOutcome {
        holds: true,
        counterexample: None,
        products_checked: seen.len(),
    })
}

/// Visits nondecreasing index sequences of length `len` over `0..count`.
/// Stops early when the visitor returns `true`.
fn for_each_multiset<F>(count: usize, len: usize, visit: &mut F) -> Result<bool>
where
    F: FnMut(&[usize]) -> Result<bool>,
{
    fn go<F>(count: usize, len: usize, start: usize, acc: &mut Vec<usize>, visit: &mut F) -> Result<bool>
    where
        F: FnMut(&[usize]) -> Result<bool>,
    {
        if acc.len() == len {
            return visit(acc);
        }
        for i in start..count {
            acc.push(i);
            let stop = go(count, len, i, acc, visit)?;
            acc.pop();
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
    go(count, len, 0, &mut Vec::with_capacity(len), visit)
}

/// Finds `p` minimal generators of `ideal` whose product divides `f`, if
/// any, by depth-first search over nondecreasing generator indices.
pub fn factor_into_generators(ideal: &MonomialIdeal, f: &Monomial, p: u32) -> Option<Vec<Monomial>> {
    fn go(gens: &[Monomial], rest: &Monomial, p: u32, start: usize, acc: &mut Vec<Monomial>) -> bool {
        if p == 0 {
            return true;
        }
        for (i, g) in gens.iter().enumerate().skip(start) {
            if let Some(quotient) = rest.div(g).ok().flatten() {
                acc.push(g.clone());
                if go(gens, &quotient, p - 1, i, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::new();
    go(ideal.gens(), f, p, 0, &mut acc).then_some(acc)
}
