//! Cover ideals, their symbolic powers and vertex `m`-covers.
//!
//! For a graph `G` the cover ideal is `J(G) = ∩_{ij ∈ E} (x_i, x_j)` and its
//! `m`-th symbolic power is `∩_{ij ∈ E} (x_i, x_j)^m`. Monomials in the
//! symbolic power are exactly the vertex `m`-covers: exponent vectors with
//! `a_i + a_j >= m` on every edge.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::{check_cap, MonomialIdeal};
use crate::monomial::Monomial;

/// Largest exponent grid `(m+1)^n` scanned by [`minimal_mcovers_by_search`].
pub const SEARCH_GRID_LIMIT: u64 = 20_000_000;

/// `(x_i, x_j)^m`, listed directly as `{x_i^a x_j^(m-a)}`.
pub fn edge_power(n: usize, i: usize, j: usize, m: u32) -> MonomialIdeal {
    let gens = (0..=m).map(|a| {
        let mut exps = vec![0; n];
        exps[i] = a;
        exps[j] = m - a;
        Monomial::new(exps)
    });
    MonomialIdeal::minimalize(n, gens).expect("all generators share n")
}

/// `J(G)`. For an edgeless graph the intersection is empty and the result
/// is the unit ideal; callers surface that as a warning.
pub fn cover_ideal(g: &Graph) -> MonomialIdeal {
    symbolic_power(g, 1).expect("first symbolic power has no exponent overflow")
}

/// `J(G)^(m)`, by intersecting the edge powers in ascending edge order.
pub fn symbolic_power(g: &Graph, m: u32) -> Result<MonomialIdeal> {
    symbolic_power_capped(g, m, usize::MAX)
}

pub fn symbolic_power_capped(g: &Graph, m: u32, cap: usize) -> Result<MonomialIdeal> {
    let n = g.n();
    if m == 0 {
        return Ok(MonomialIdeal::unit(n));
    }
    let mut acc = MonomialIdeal::unit(n);
    for &(i, j) in g.edges() {
        acc = acc.intersect(&edge_power(n, i, j, m))?;
        check_cap("generators of a symbolic power", acc.mu(), cap)?;
    }
    Ok(acc)
}

/// `a_i + a_j >= m` on every edge.
pub fn is_m_cover(g: &Graph, f: &Monomial, m: u32) -> Result<bool> {
    check_n(g, f)?;
    let e = f.exps();
    Ok(g
        .edges()
        .iter()
        .all(|&(i, j)| u64::from(e[i]) + u64::from(e[j]) >= u64::from(m)))
}

/// An `m`-cover none of whose proper divisors is an `m`-cover.
pub fn is_minimal_m_cover(g: &Graph, f: &Monomial, m: u32) -> Result<bool> {
    if !is_m_cover(g, f, m)? {
        return Ok(false);
    }
    let mut exps = f.exps().to_vec();
    for i in 0..exps.len() {
        if exps[i] == 0 {
            continue;
        }
        exps[i] -= 1;
        let smaller = is_m_cover(g, &Monomial::new(exps.clone()), m)?;
        exps[i] += 1;
        if smaller {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_n(g: &Graph, f: &Monomial) -> Result<()> {
    if g.n() == f.n() {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            left: g.n(),
            right: f.n(),
        })
    }
}

/// Minimal vertex `m`-covers, read off the symbolic power.
pub fn minimal_mcovers(g: &Graph, m: u32) -> Result<Vec<Monomial>> {
    Ok(symbolic_power(g, m)?.gens().to_vec())
}

/// Minimal vertex `m`-covers by scanning every exponent vector in
/// `{0..m}^n` (minimal covers never need an exponent above `m`).
///
/// This route never touches ideal arithmetic and serves as an oracle for
/// [`symbolic_power`].
pub fn minimal_mcovers_by_search(g: &Graph, m: u32) -> Result<Vec<Monomial>> {
    let n = g.n();
    let base = u64::from(m) + 1;
    let grid = base.checked_pow(n as u32).unwrap_or(u64::MAX);
    if grid > SEARCH_GRID_LIMIT {
        return Err(Error::ResourceCap {
            what: "exponent grid for cover search",
            count: grid.min(usize::MAX as u64) as usize,
            cap: SEARCH_GRID_LIMIT as usize,
        });
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    loop {
        let f = Monomial::new(exps.clone());
        if is_minimal_m_cover(g, &f, m)? {
            out.push(f);
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == n {
                out.sort();
                return Ok(out);
            }
            if exps[k] < m {
                exps[k] += 1;
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}

/// The vertex partition attached to an indecomposable 2-cover that is not
/// the all-ones monomial: exponent 0 on `zero`, 2 on `two`, 1 on `one`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoCoverPartition {
    pub zero: Vec<usize>,
    pub two: Vec<usize>,
    pub one: Vec<usize>,
}

impl TwoCoverPartition {
    pub fn s(&self) -> usize {
        self.zero.len()
    }
    pub fn t(&self) -> usize {
        self.two.len()
    }
    pub fn u(&self) -> usize {
        self.one.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Cover2Classification {
    /// The product of all variables on a non-bipartite graph.
    AllOnes,
    /// Exponents in `{0, 2, 1}` on a partition meeting the structural conditions.
    Szt(TwoCoverPartition),
}

/// Decides structurally whether a minimal 2-cover is indecomposable
/// (not a product of two 1-covers).
///
/// Returns `Ok(None)` for decomposable covers. Any exponent above 2 is
/// rejected as decomposable straight away; otherwise `f` must be a minimal
/// 2-cover of `g`.
///
/// The structural conditions, for `f` with zero set `S`, two set `T` and
/// one set `U` on a non-bipartite graph:
/// - `T` is exactly the neighborhood of `S`;
/// - the product of `T` is not a vertex cover, and `U` is nonempty;
/// - the subgraph induced on `U` has no isolated vertex and is not bipartite.
pub fn classify_indecomposable_2cover(
    g: &Graph,
    f: &Monomial,
) -> Result<Option<Cover2Classification>> {
    check_n(g, f)?;
    if f.exps().iter().any(|&e| e > 2) {
        return Ok(None);
    }
    if !is_minimal_m_cover(g, f, 2)? {
        return Err(Error::NotMinimalTwoCover);
    }
    if g.is_bipartite() {
        return Ok(None);
    }
    if f.exps().iter().all(|&e| e == 1) {
        return Ok(Some(Cover2Classification::AllOnes));
    }

    let by_exp = |k: u32| -> Vec<usize> {
        f.exps()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e == k)
            .map(|(i, _)| i)
            .collect()
    };
    let part = TwoCoverPartition {
        zero: by_exp(0),
        two: by_exp(2),
        one: by_exp(1),
    };

    let neighborhood: Vec<usize> = g.neighbors_of_set(&part.zero).into_iter().collect();
    if neighborhood != part.two {
        return Ok(None);
    }
    let two_product = Monomial::from_support(g.n(), &part.two);
    if is_m_cover(g, &two_product, 1)? || part.u() == 0 {
        return Ok(None);
    }
    let core = g.induced_subgraph(&part.one);
    if core.has_isolated_vertex() || core.is_bipartite() {
        return Ok(None);
    }
    Ok(Some(Cover2Classification::Szt(part)))
}
