//! Split and pseudo-split recognition, and the reductions that relate
//! self-complementary split graphs of orders `4k`, `4k + 1` and `4k + 5`.

use std::fmt;

use serde::Serialize;

use crate::error::{precondition, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A clique/independent-set partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

impl SplitPartition {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.clique.is_disjoint(self.independent)
            && self.clique.union(self.independent) == g.vertices()
            && g.is_clique(self.clique)
            && g.is_independent(self.independent)
    }
}

impl fmt::Display for SplitPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K={} I={}", self.clique, self.independent)
    }
}

/// A partition into a clique `K`, an independent set `I`, and a set `C` that
/// is empty, a single apex vertex, or an induced five-cycle complete to `K`
/// and nonadjacent to `I`.
///
/// Recognition only produces `|C| ∈ {0, 5}`; the single-vertex form records
/// how a graph was built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PseudoSplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
    pub cycle: VertexSet,
}

impl PseudoSplitPartition {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let (k, i, c) = (self.clique, self.independent, self.cycle);
        if !(k.is_disjoint(i) && k.is_disjoint(c) && i.is_disjoint(c)) {
            return false;
        }
        if k.union(i).union(c) != g.vertices() || !g.is_clique(k) || !g.is_independent(i) {
            return false;
        }
        match c.len() {
            0 => true,
            1 => g.is_complete_to(c, k) && g.is_nonadjacent_to(c, i),
            5 => induces_c5(g, c) && g.is_complete_to(c, k) && g.is_nonadjacent_to(c, i),
            _ => false,
        }
    }

    pub fn is_split(&self) -> bool {
        self.cycle.is_empty()
    }
}

impl fmt::Display for PseudoSplitPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "K={} I={} C={}",
            self.clique, self.independent, self.cycle
        )
    }
}

/// Does `s` induce a five-cycle? (The only 2-regular graph on five vertices.)
pub fn induces_c5(g: &Graph, s: VertexSet) -> bool {
    s.len() == 5 && s.iter().all(|v| g.degree_in(v, s) == 2)
}

/// Vertices sorted by degree, highest first, ties by label.
pub(crate) fn by_degree_desc(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// A split partition of `g`, or `None` if `g` is not split.
///
/// Splitness is decided from the degree sequence alone: with degrees
/// `d_1 >= .. >= d_n` and `m = max{i : d_i >= i - 1}`, the graph is split iff
/// `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`, and then the `m` highest-degree
/// vertices form a clique. A vertex that could sit on either side is placed
/// in `I` (at most one such move is ever possible from a maximum clique; the
/// smallest eligible label moves).
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let order = by_degree_desc(g);
    let d: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (1..=d.len())
        .rev()
        .find(|&i| d[i - 1] + 1 >= i)
        .unwrap_or(0);
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let mut clique: VertexSet = order[..m].iter().copied().collect();
    let mut independent = g.vertices().difference(clique);
    if let Some(v) = clique
        .iter()
        .find(|&v| g.neighbors(v).is_disjoint(independent))
    {
        clique = clique.without(v);
        independent = independent.with(v);
    }
    let p = SplitPartition {
        clique,
        independent,
    };
    debug_assert!(p.is_valid_for(g));
    Some(p)
}

pub fn is_split(g: &Graph) -> bool {
    split_partition(g).is_some()
}

/// The split partition of a self-complementary split graph on `4k` vertices,
/// which is forced to be `K = {v : d(v) >= 2k}`, `I = {v : d(v) < 2k}`.
///
/// Errors if the order is not a multiple of 4 or that degree rule does not
/// produce a valid split partition with `|K| = 2k`. Self-complementarity
/// itself is not re-verified.
pub fn unique_sc_split_partition(g: &Graph) -> Result<SplitPartition> {
    let n = g.order();
    if !n.is_multiple_of(4) {
        return Err(precondition(format!("order {n} is not a multiple of 4")));
    }
    let half = n / 2;
    let clique: VertexSet = (0..n).filter(|&v| g.degree(v) >= half).collect();
    let p = SplitPartition {
        clique,
        independent: g.vertices().difference(clique),
    };
    if clique.len() != half || !p.is_valid_for(g) {
        return Err(precondition(format!(
            "degree rule gives {p}, which is not a balanced split partition"
        )));
    }
    Ok(p)
}

/// A pseudo-split partition with `|C| ∈ {0, 5}`, or `None`.
///
/// In a non-split pseudo-split graph every vertex of `C` has degree `|K| + 2`,
/// vertices of `K` have degree at least `|K| + 4` and vertices of `I` at most
/// `|K|`. So `C` must be a full degree class of size 5, and `K`, `I` are the
/// vertices above and below it.
pub fn pseudo_split_partition(g: &Graph) -> Option<PseudoSplitPartition> {
    if let Some(p) = split_partition(g) {
        return Some(PseudoSplitPartition {
            clique: p.clique,
            independent: p.independent,
            cycle: VertexSet::EMPTY,
        });
    }
    let degrees = g.degrees();
    let mut distinct = degrees.clone();
    distinct.sort_unstable();
    distinct.dedup();
    for &dc in &distinct {
        let class: VertexSet = (0..g.order()).filter(|&v| degrees[v] == dc).collect();
        if class.len() != 5 || dc < 2 {
            continue;
        }
        let clique: VertexSet = (0..g.order()).filter(|&v| degrees[v] > dc).collect();
        if clique.len() != dc - 2 {
            continue;
        }
        let p = PseudoSplitPartition {
            clique,
            independent: g.vertices().difference(clique).difference(class),
            cycle: class,
        };
        if p.is_valid_for(g) {
            return Some(p);
        }
    }
    None
}

pub fn is_pseudo_split(g: &Graph) -> bool {
    pseudo_split_partition(g).is_some()
}

fn require_sc_split_order(g: &Graph, residue: usize) -> Result<()> {
    if g.order() % 4 != residue {
        return Err(precondition(format!(
            "order {} is not {residue} mod 4",
            g.order()
        )));
    }
    if !is_split(g) {
        return Err(precondition("graph is not split"));
    }
    Ok(())
}

/// Splits a self-complementary split graph on `4k + 1` vertices into its
/// unique degree-`2k` vertex and the remaining graph on `4k` vertices.
pub fn odd_reduce(g: &Graph) -> Result<(usize, Graph)> {
    require_sc_split_order(g, 1)?;
    let k2 = (g.order() - 1) / 2;
    let mids: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) == k2).collect();
    match mids.as_slice() {
        [v] => Ok((*v, g.remove_vertices(VertexSet::singleton(*v))?)),
        _ => Err(precondition(format!(
            "expected exactly one vertex of degree {k2}, found {}",
            mids.len()
        ))),
    }
}

/// Adds a vertex adjacent exactly to the clique of a self-complementary split
/// graph of order `4k`. The new vertex gets label `4k`.
pub fn apex_extend(g: &Graph) -> Result<Graph> {
    require_sc_split_order(g, 0)?;
    let p = unique_sc_split_partition(g)?;
    let mut b = g.to_builder();
    let apex = b.add_vertex()?;
    b.join(VertexSet::singleton(apex), p.clique)?;
    Ok(b.build())
}

/// Adds an induced five-cycle complete to the clique and nonadjacent to the
/// independent set. The cycle takes labels `4k .. 4k + 4` in cyclic order.
pub fn c5_extend(g: &Graph) -> Result<Graph> {
    require_sc_split_order(g, 0)?;
    let p = unique_sc_split_partition(g)?;
    let mut b = g.to_builder();
    let base = g.order();
    for _ in 0..5 {
        b.add_vertex()?;
    }
    for i in 0..5 {
        b.add_edge(base + i, base + (i + 1) % 5)?;
    }
    b.join((base..base + 5).collect(), p.clique)?;
    Ok(b.build())
}

/// Makes the `2k` highest-degree vertices a clique and the `2k` lowest an
/// independent set, leaving edges between the two halves alone. Degree ties
/// across the halves are broken by label.
pub fn split_core(g: &Graph) -> Result<Graph> {
    let n = g.order();
    if !n.is_multiple_of(4) {
        return Err(precondition(format!("order {n} is not a multiple of 4")));
    }
    let order = by_degree_desc(g);
    let high: VertexSet = order[..n / 2].iter().copied().collect();
    let low = g.vertices().difference(high);
    g.modified(|b| {
        for set in [high, low] {
            for u in set {
                for v in set.iter().filter(|&v| v > u) {
                    b.set_edge(u, v, set == high)?;
                }
            }
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::{find_antimorphism, is_isomorphic};

    /// Brute force: some subset is a clique whose complement is independent.
    fn split_brute(g: &Graph) -> bool {
        let n = g.order();
        (0u64..1 << n).any(|m| {
            let k = VertexSet::from_bits(m);
            g.is_clique(k) && g.is_independent(g.vertices().difference(k))
        })
    }

    #[test]
    fn k1_goes_to_independent_side() {
        let k1 = Graph::empty(1).unwrap();
        let p = split_partition(&k1).unwrap();
        assert!(p.clique.is_empty());
        assert_eq!(p.independent, VertexSet::singleton(0));
    }

    #[test]
    fn c5_is_not_split() {
        assert!(split_partition(&Graph::cycle(5).unwrap()).is_none());
    }

    #[test]
    fn splitness_agrees_with_brute_force_up_to_six_vertices() {
        for n in 0..=6usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            for mask in 0u32..1 << pairs.len() {
                let g = Graph::from_edges(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e),
                )
                .unwrap();
                let p = split_partition(&g);
                assert_eq!(p.is_some(), split_brute(&g), "{g:?}");
                if let Some(p) = p {
                    assert!(p.is_valid_for(&g));
                    // No clique vertex could have been placed in I instead.
                    assert!(p
                        .clique
                        .iter()
                        .all(|v| !g.neighbors(v).is_disjoint(p.independent)));
                }
            }
        }
    }

    #[test]
    fn p4_unique_partition() {
        let p4 = Graph::path(4).unwrap();
        let p = unique_sc_split_partition(&p4).unwrap();
        assert_eq!(p.clique, [1, 2].into_iter().collect());
        assert_eq!(p.independent, [0, 3].into_iter().collect());
        assert!(unique_sc_split_partition(&Graph::cycle(5).unwrap()).is_err());
        assert!(unique_sc_split_partition(&Graph::cycle(4).unwrap()).is_err());
    }

    #[test]
    fn c5_pseudo_split() {
        let c5 = Graph::cycle(5).unwrap();
        let p = pseudo_split_partition(&c5).unwrap();
        assert_eq!(p.cycle, c5.vertices());
        assert!(p.clique.is_empty() && p.independent.is_empty());
    }

    #[test]
    fn c5_joined_to_k2_with_two_isolated_vertices() {
        // C5 on 0..5, K2 = {5, 6} complete to it, {7, 8} isolated.
        let mut b = crate::graph::GraphBuilder::new(9).unwrap();
        for i in 0..5 {
            b.add_edge(i, (i + 1) % 5).unwrap();
        }
        b.add_edge(5, 6).unwrap();
        b.join((0..5).collect(), [5, 6].into_iter().collect())
            .unwrap();
        let g = b.build();
        let p = pseudo_split_partition(&g).unwrap();
        assert_eq!(p.clique, [5, 6].into_iter().collect());
        assert_eq!(p.independent, [7, 8].into_iter().collect());
        assert_eq!(p.cycle, (0..5).collect());
        assert!(!is_split(&g));
    }

    #[test]
    fn odd_reduce_and_apex_extend() {
        let p4 = Graph::path(4).unwrap();
        let g5 = apex_extend(&p4).unwrap();
        assert!(find_antimorphism(&g5).is_some());
        let mut degs = g5.degrees();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degs, vec![3, 3, 2, 1, 1]);
        let (v, rest) = odd_reduce(&g5).unwrap();
        assert_eq!(v, 4);
        assert_eq!(rest, p4);

        let k1 = Graph::empty(1).unwrap();
        let (v, rest) = odd_reduce(&k1).unwrap();
        assert_eq!(v, 0);
        assert_eq!(rest.order(), 0);

        assert!(odd_reduce(&Graph::cycle(5).unwrap()).is_err());
        assert!(apex_extend(&Graph::cycle(5).unwrap()).is_err());
    }

    #[test]
    fn c5_extend_is_pseudo_split_sc() {
        let p4 = Graph::path(4).unwrap();
        let g = c5_extend(&p4).unwrap();
        assert_eq!(g.order(), 9);
        assert!(!is_split(&g));
        let p = pseudo_split_partition(&g).unwrap();
        assert_eq!(p.cycle, (4..9).collect());
        assert!(find_antimorphism(&g).is_some());
    }

    #[test]
    fn split_core_fixes_split_sc_graphs() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(split_core(&p4).unwrap(), p4);
        assert!(split_core(&Graph::cycle(5).unwrap()).is_err());
        let c4 = Graph::cycle(4).unwrap();
        let core = split_core(&c4).unwrap();
        assert!(is_isomorphic(&core, &p4).is_some());
    }
}
