//! Labeled simple graphs on at most 64 vertices.
//!
//! Each vertex owns one adjacency word; bit `u` of row `v` is set iff `u` and
//! `v` are adjacent. Graphs are values: every operation that changes the edge
//! set returns a new graph. Use [`GraphBuilder`] to assemble one edge by edge.

use std::fmt;

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::vertex_set::VertexSet;

pub const MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { rows: vec![0; n] })
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        Graph::empty(n).map(|g| g.complement())
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n)?;
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(crate::error::precondition(
                "a cycle needs at least 3 vertices",
            ));
        }
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// Builds a graph from raw adjacency rows, validating symmetry and the
    /// absence of loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(Error::TooManyVertices(n));
        }
        let mask = VertexSet::full(n).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: 63 - row.leading_zeros() as usize,
                    order: n,
                });
            }
            if (row >> v) & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in VertexSet::from_bits(row) {
                if (rows[u] >> v) & 1 == 0 {
                    return Err(crate::error::precondition(format!(
                        "adjacency rows are not symmetric at ({v}, {u})"
                    )));
                }
            }
        }
        Ok(Graph { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph { rows }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.rows[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.rows[u] >> v) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            VertexSet::from_bits(self.rows[u] & !((2u64 << u).wrapping_sub(1)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Degree of `v` counted only towards vertices of `within`.
    pub fn degree_in(&self, v: usize, within: VertexSet) -> usize {
        self.neighbors(v).intersection(within).len()
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.neighbors(v).is_disjoint(s))
    }

    /// Every vertex of `a` is adjacent to every vertex of `b`.
    pub fn is_complete_to(&self, a: VertexSet, b: VertexSet) -> bool {
        a.iter().all(|v| b.without(v).is_subset(self.neighbors(v)))
    }

    /// No vertex of `a` is adjacent to any vertex of `b`.
    pub fn is_nonadjacent_to(&self, a: VertexSet, b: VertexSet) -> bool {
        a.iter().all(|v| self.neighbors(v).is_disjoint(b))
    }

    #[must_use]
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.order()).bits();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, &r)| !r & full & !(1u64 << v))
            .collect();
        Graph { rows }
    }

    /// Subgraph induced by `s`, relabeled `0..|s|` in increasing label order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if let Some(bad) = s.difference(self.vertices()).first() {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                order: self.order(),
            });
        }
        let members = s.to_vec();
        let rows = members
            .iter()
            .map(|&v| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.has_edge(v, u))
                    .fold(0u64, |acc, (i, _)| acc | (1 << i))
            })
            .collect();
        Ok(Graph { rows })
    }

    /// `G - s`.
    pub fn remove_vertices(&self, s: VertexSet) -> Result<Graph> {
        self.induced_subgraph(self.vertices().difference(s))
    }

    /// The image of this graph under `p`: `p(u) ~ p(v)` iff `u ~ v`.
    pub fn relabel(&self, p: &Permutation) -> Result<Graph> {
        if p.len() != self.order() {
            return Err(Error::Permutation(format!(
                "permutation on {} points applied to a graph of order {}",
                p.len(),
                self.order()
            )));
        }
        let mut rows = vec![0u64; self.order()];
        for (u, v) in self.edges() {
            let (a, b) = (p.apply(u), p.apply(v));
            rows[a] |= 1 << b;
            rows[b] |= 1 << a;
        }
        Ok(Graph { rows })
    }

    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder {
            rows: self.rows.clone(),
        }
    }

    /// Copy of this graph with the edge set modified by `f`.
    pub fn modified(&self, f: impl FnOnce(&mut GraphBuilder) -> Result<()>) -> Result<Graph> {
        let mut b = self.to_builder();
        f(&mut b)?;
        Ok(b.build())
    }

    /// Disjoint union, with `other`'s vertices shifted past this graph's.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order();
        let mut b = GraphBuilder::new(n + other.order())?;
        for (u, v) in self.edges() {
            b.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            b.add_edge(n + u, n + v)?;
        }
        Ok(b.build())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph({}, {:?})",
            self.order(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// Mutable edge-by-edge construction of a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    rows: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooManyVertices(n));
        }
        Ok(GraphBuilder { rows: vec![0; n] })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    fn check(&self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.rows[u] >> v) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        self.check(u, v)?;
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(self)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        self.check(u, v)?;
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
        Ok(self)
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) -> Result<&mut Self> {
        if present {
            self.add_edge(u, v)
        } else {
            self.remove_edge(u, v)
        }
    }

    /// Adds every edge between distinct members of `a` and `b`.
    pub fn join(&mut self, a: VertexSet, b: VertexSet) -> Result<&mut Self> {
        for u in a {
            for v in b {
                if u != v {
                    self.add_edge(u, v)?;
                }
            }
        }
        Ok(self)
    }

    /// Appends a vertex and returns its label.
    pub fn add_vertex(&mut self) -> Result<usize> {
        if self.order() >= MAX_ORDER {
            return Err(Error::TooManyVertices(self.order() + 1));
        }
        self.rows.push(0);
        Ok(self.rows.len() - 1)
    }

    pub fn build(self) -> Graph {
        Graph { rows: self.rows }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circulant_9_2() -> Graph {
        Graph::from_edges(9, (0..9).flat_map(|v| [(v, (v + 1) % 9), (v, (v + 2) % 9)])).unwrap()
    }

    #[test]
    fn complement_of_k1_is_k1() {
        let g = Graph::empty(1).unwrap();
        assert_eq!(g.complement(), g);
    }

    #[test]
    fn complement_of_p4_is_p4() {
        // a-b-c-d becomes b-d-a-c
        let p4 = Graph::path(4).unwrap();
        let expected = Graph::from_edges(4, [(1, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(p4.complement(), expected);
    }

    #[test]
    fn complement_of_c9_squared() {
        let g = circulant_9_2();
        assert_eq!(g.edge_count(), 18);
        let c = g.complement();
        assert_eq!(c.edge_count(), 9 * 8 / 2 - 18);
        assert!(c.degrees().iter().all(|&d| d == 4));
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn induced_subgraph_of_c5_is_p4() {
        let c5 = Graph::cycle(5).unwrap();
        let sub = c5
            .induced_subgraph([0, 1, 2, 3].into_iter().collect())
            .unwrap();
        assert_eq!(sub, Graph::path(4).unwrap());
        assert_eq!(c5.induced_subgraph(c5.vertices()).unwrap(), c5);
        assert_eq!(
            c5.induced_subgraph(VertexSet::singleton(7)),
            Err(Error::VertexOutOfRange {
                vertex: 7,
                order: 5
            })
        );
    }

    #[test]
    fn from_rows_rejects_asymmetry_and_loops() {
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert_eq!(Graph::from_rows(vec![0b1]), Err(Error::SelfLoop(0)));
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn order_cap() {
        assert!(Graph::empty(64).is_ok());
        assert_eq!(Graph::empty(65), Err(Error::TooManyVertices(65)));
        let k64 = Graph::complete(64).unwrap();
        assert_eq!(k64.edge_count(), 64 * 63 / 2);
    }

    #[test]
    fn edges_are_listed_once() {
        let c5 = Graph::cycle(5).unwrap();
        let e: Vec<_> = c5.edges().collect();
        assert_eq!(e, vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
    }
}
