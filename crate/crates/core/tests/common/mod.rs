//! Brute-force oracles and property checks shared by the integration
//! tests and the acceptance runner. Nothing here uses ideal arithmetic
//! from the library.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use symdef_core::cover::{is_m_cover, symbolic_power};
use symdef_core::{Graph, Monomial, MonomialIdeal};

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied()).unwrap()
}

/// Triangle `x1 x2 x3` with a pendant `y_i` on each `x_i`, vertices
/// `x1, x2, x3, y1, y2, y3` numbered `0..6`.
pub fn net_graph() -> Graph {
    graph(6, &[(0, 1), (0, 3), (1, 2), (1, 4), (0, 2), (2, 5)]).with_name("net")
}

/// Two triangles `x1 x2 x3` and `x3 x4 x5` sharing `x3`.
pub fn bowtie_graph() -> Graph {
    graph(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).with_name("bowtie")
}

fn covers(g: &Graph, e: &[u32], m: u32) -> bool {
    g.edges().iter().all(|&(i, j)| e[i] + e[j] >= m)
}

/// Minimal vertex `m`-covers by scanning `{0..m}^n`.
pub fn oracle_minimal_covers(g: &Graph, m: u32) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    loop {
        if covers(g, &e, m)
            && (0..n).all(|i| {
                e[i] == 0 || {
                    let mut d = e.clone();
                    d[i] -= 1;
                    !covers(g, &d, m)
                }
            })
        {
            out.push(e.clone());
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            if e[k] < m {
                e[k] += 1;
                break;
            }
            e[k] = 0;
            k += 1;
        }
    }
}

/// Whether `target` is divisible by a product of `count` vectors from `gens`.
pub fn oracle_divisible_by_product(gens: &[Vec<u32>], target: &[u32], count: u32, start: usize) -> bool {
    if count == 0 {
        return true;
    }
    for (i, g) in gens.iter().enumerate().skip(start) {
        if g.iter().zip(target).all(|(a, b)| a <= b) {
            let rest: Vec<u32> = target.iter().zip(g).map(|(b, a)| b - a).collect();
            if oracle_divisible_by_product(gens, &rest, count - 1, i) {
                return true;
            }
        }
    }
    false
}

/// Minimal `m`-covers that are not divisible by a product of `m` minimal
/// 1-covers.
pub fn oracle_sdefect(g: &Graph, m: u32) -> Vec<Vec<u32>> {
    let ones = oracle_minimal_covers(g, 1);
    oracle_minimal_covers(g, m)
        .into_iter()
        .filter(|f| !oracle_divisible_by_product(&ones, f, m, 0))
        .collect()
}

/// 2-colouring by BFS over the edge list.
pub fn oracle_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut colour = vec![u8::MAX; n];
    for s in 0..n {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &(a, b) in g.edges() {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                } else if colour[w] == colour[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Every vertex meets every odd cycle in its closed neighbourhood iff
/// deleting its closed neighbourhood leaves a bipartite graph.
pub fn oracle_adjacent_to_every_odd_cycle(g: &Graph) -> bool {
    (0..g.n()).all(|v| {
        let rest: Vec<usize> = (0..g.n())
            .filter(|&u| u != v && !g.has_edge(u, v))
            .collect();
        oracle_bipartite(&g.induced_subgraph(&rest))
    })
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

// ---- strategies ----

pub fn monomial_strategy(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(Monomial::new)
}

pub fn monomial_triple() -> impl Strategy<Value = (Monomial, Monomial, Monomial)> {
    (1usize..6).prop_flat_map(|n| (monomial_strategy(n, 5), monomial_strategy(n, 5), monomial_strategy(n, 5)))
}

pub fn ideal_strategy(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial_strategy(n, 3), 1..5)
        .prop_map(move |gens| MonomialIdeal::minimalize(n, gens).unwrap())
}

pub fn ideal_pair_with_probe() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal, Monomial)> {
    (1usize..5).prop_flat_map(|n| (ideal_strategy(n), ideal_strategy(n), monomial_strategy(n, 6)))
}

pub fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&p, _)| p);
            Graph::new(n, edges).unwrap()
        })
    })
}

pub fn graph_with_monomial(max_n: usize, max_m: u32) -> impl Strategy<Value = (Graph, Monomial, u32)> {
    (graph_strategy(max_n), 1..=max_m).prop_flat_map(|(g, m)| {
        let n = g.n();
        (Just(g), monomial_strategy(n, m + 1), Just(m))
    })
}

// ---- property checks ----

pub fn check_monomial_laws((a, b, c): (Monomial, Monomial, Monomial)) -> Result<(), TestCaseError> {
    let ab = a.mul(&b).unwrap();
    prop_assert_eq!(&ab, &b.mul(&a).unwrap());
    prop_assert_eq!(ab.mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    prop_assert_eq!(ab.degree(), a.degree() + b.degree());
    prop_assert_eq!(ab.div(&b).unwrap(), Some(a.clone()));
    prop_assert!(a.divides(&ab).unwrap());
    prop_assert!(a.divides(&a).unwrap());

    let l = a.lcm(&b).unwrap();
    prop_assert_eq!(&l, &b.lcm(&a).unwrap());
    prop_assert_eq!(l.lcm(&c).unwrap(), a.lcm(&b.lcm(&c).unwrap()).unwrap());
    prop_assert!(a.divides(&l).unwrap() && b.divides(&l).unwrap());
    prop_assert!(l.divides(&ab).unwrap());
    prop_assert_eq!(a.lcm(&a).unwrap(), a.clone());

    // a | b and b | a only for equal monomials
    let both = a.divides(&b).unwrap() && b.divides(&a).unwrap();
    prop_assert_eq!(both, a == b);
    // divisibility is transitive
    if a.divides(&b).unwrap() && b.divides(&c).unwrap() {
        prop_assert!(a.divides(&c).unwrap());
    }
    prop_assert_eq!(a.div(&ab).unwrap().is_some(), b.is_one());
    Ok(())
}

pub fn check_ideal_laws((i, j, f): (MonomialIdeal, MonomialIdeal, Monomial)) -> Result<(), TestCaseError> {
    for (x, y) in i.gens().iter().flat_map(|x| i.gens().iter().map(move |y| (x, y))) {
        if x != y {
            prop_assert!(!x.divides(y).unwrap());
        }
    }
    let by_gens = |id: &MonomialIdeal| id.gens().iter().any(|g| g.divides(&f).unwrap());
    prop_assert_eq!(i.contains(&f).unwrap(), by_gens(&i));

    let sum = i.add(&j).unwrap();
    let prod = i.multiply(&j).unwrap();
    let meet = i.intersect(&j).unwrap();
    prop_assert_eq!(&sum, &j.add(&i).unwrap());
    prop_assert_eq!(&prod, &j.multiply(&i).unwrap());
    prop_assert_eq!(&meet, &j.intersect(&i).unwrap());
    prop_assert_eq!(sum.contains(&f).unwrap(), by_gens(&i) || by_gens(&j));
    prop_assert_eq!(meet.contains(&f).unwrap(), by_gens(&i) && by_gens(&j));
    prop_assert!(prod.is_subset_of(&meet).unwrap());
    prop_assert!(meet.is_subset_of(&i).unwrap());
    prop_assert!(i.is_subset_of(&sum).unwrap());
    prop_assert_eq!(i.power(2).unwrap(), i.multiply(&i).unwrap());
    Ok(())
}

/// `f * F / (x_a x_b) ∈ J^(m)` for every pair `a, b` forces `f ∈ J^(m)`.
pub fn check_pair_deletion_lemma((g, f, m): (Graph, Monomial, u32)) -> Result<(), TestCaseError> {
    let n = g.n();
    let all_hold = (0..n).all(|a| {
        (0..n).all(|b| {
            let mut e = f.exps().to_vec();
            for (k, x) in e.iter_mut().enumerate() {
                if k != a && k != b {
                    *x += 1;
                }
            }
            is_m_cover(&g, &Monomial::new(e), m).unwrap()
        })
    });
    if all_hold {
        prop_assert!(symbolic_power(&g, m).unwrap().contains(&f).unwrap());
    }
    Ok(())
}

/// `J^m ⊆ J^(m)`, and membership in `J^(m)` agrees with the cover test.
pub fn check_containment((g, f, m): (Graph, Monomial, u32)) -> Result<(), TestCaseError> {
    let j = symbolic_power(&g, 1).unwrap();
    let ordinary = j.power(m).unwrap();
    let symbolic = symbolic_power(&g, m).unwrap();
    prop_assert!(ordinary.is_subset_of(&symbolic).unwrap());
    prop_assert_eq!(symbolic.contains(&f).unwrap(), is_m_cover(&g, &f, m).unwrap());
    Ok(())
}
