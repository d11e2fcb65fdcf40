//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are grown from the classes on `n - 1` vertices
//! by attaching a new vertex to every possible neighbor set, then
//! deduplicated by a canonical edge bitmask.

use std::collections::BTreeSet;

use super::Graph;

/// Largest vertex count supported by the enumerator.
pub const MAX_ENUMERATION_VERTICES: usize = 8;

fn pair_index(n: usize, a: usize, b: usize) -> usize {
    let (a, b) = (a.min(b), a.max(b));
    // row-major over pairs (a, b), a < b
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

fn edge_mask(g: &Graph) -> u64 {
    g.edges()
        .iter()
        .fold(0u64, |m, &(a, b)| m | 1 << pair_index(g.n(), a, b))
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if mask >> pair_index(n, a, b) & 1 == 1 {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, edges).expect("mask encodes a simple graph")
}

/// Canonical edge mask: minimum over relabelings that list vertices by
/// decreasing degree, permuting freely within each degree class.
fn canonical_mask(n: usize, adj: &[u32]) -> u64 {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match blocks.last_mut() {
            Some(b) if adj[b[0]].count_ones() == adj[v].count_ones() => b.push(v),
            _ => blocks.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut labeling = Vec::with_capacity(n);
    search_labelings(&mut blocks, 0, &mut labeling, n, adj, &mut best);
    best
}

fn search_labelings(
    blocks: &mut [Vec<usize>],
    block: usize,
    labeling: &mut Vec<usize>,
    n: usize,
    adj: &[u32],
    best: &mut u64,
) {
    if block == blocks.len() {
        // labeling[new] = old
        let mut mask = 0u64;
        for a in 0..n {
            for b in a + 1..n {
                if adj[labeling[a]] >> labeling[b] & 1 == 1 {
                    mask |= 1 << pair_index(n, a, b);
                }
            }
        }
        *best = (*best).min(mask);
        return;
    }
    let len = blocks[block].len();
    permute(blocks, block, 0, len, labeling, n, adj, best);
}

#[allow(clippy::too_many_arguments)]
fn permute(
    blocks: &mut [Vec<usize>],
    block: usize,
    k: usize,
    len: usize,
    labeling: &mut Vec<usize>,
    n: usize,
    adj: &[u32],
    best: &mut u64,
) {
    if k == len {
        let base = labeling.len();
        labeling.extend_from_slice(&blocks[block]);
        search_labelings(blocks, block + 1, labeling, n, adj, best);
        labeling.truncate(base);
        return;
    }
    for i in k..len {
        blocks[block].swap(k, i);
        permute(blocks, block, k + 1, len, labeling, n, adj, best);
        blocks[block].swap(k, i);
    }
}

fn adjacency_bits(n: usize, mask: u64) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for a in 0..n {
        for b in a + 1..n {
            if mask >> pair_index(n, a, b) & 1 == 1 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
    }
    adj
}

/// One representative of every isomorphism class of graphs on `n` vertices.
///
/// # Panics
/// If `n > MAX_ENUMERATION_VERTICES`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_ENUMERATION_VERTICES, "enumeration supports at most {MAX_ENUMERATION_VERTICES} vertices");
    let mut classes: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 1..n {
        // grow classes on k vertices to k + 1
        let mut next = BTreeSet::new();
        for &mask in &classes {
            let small = adjacency_bits(k, mask);
            for nbrs in 0u32..(1 << k) {
                let mut adj: Vec<u32> = small.clone();
                adj.push(nbrs);
                for (v, row) in adj.iter_mut().enumerate().take(k) {
                    if nbrs >> v & 1 == 1 {
                        *row |= 1 << k;
                    }
                }
                next.insert(canonical_mask(k + 1, &adj));
            }
        }
        classes = next;
    }
    if n == 0 {
        return vec![Graph::edgeless(0)];
    }
    classes.into_iter().map(|m| graph_from_mask(n, m)).collect()
}

/// Connected graphs on exactly `n` vertices, up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Connected graphs on `min_n..=max_n` vertices, up to isomorphism.
pub fn connected_graphs_between(min_n: usize, max_n: usize) -> Vec<Graph> {
    (min_n..=max_n).flat_map(connected_graphs).collect()
}

/// Canonical form of a graph, usable as an isomorphism-class key.
pub fn canonical_form(g: &Graph) -> u64 {
    canonical_mask(g.n(), &adjacency_bits(g.n(), edge_mask(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn class_counts_match_known_values() {
        // OEIS A000088 and A001349
        let all = [1, 1, 2, 4, 11, 34, 156];
        let connected = [1, 1, 1, 2, 6, 21, 112];
        for n in 1..=6 {
            assert_eq!(all_graphs(n).len(), all[n], "all graphs on {n}");
            assert_eq!(connected_graphs(n).len(), connected[n], "connected graphs on {n}");
        }
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let c5 = Family::Cycle(5).build().unwrap();
        let relabeled = Graph::new(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_form(&c5), canonical_form(&relabeled));
        let p5 = Family::Path(5).build().unwrap();
        assert_ne!(canonical_form(&c5), canonical_form(&p5));
    }
}
