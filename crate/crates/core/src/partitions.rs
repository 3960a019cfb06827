//! Rectangle and diamond partitions.
//!
//! A partition `V1, V2, V3, V4` into nonempty parts is a rectangle partition
//! if `V1` is complete to `V2` and nonadjacent to `V3` while `V4` is complete
//! to `V3` and nonadjacent to `V2`; it is a diamond partition if `V1` is
//! complete to `V3` and `V2` nonadjacent to `V4`.

use std::fmt;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::constructors::build_zk;
use crate::error::{precondition, Result};
use crate::graph::Graph;
use crate::iso::{is_isomorphic, IsoSearch};
use crate::permutation::Permutation;
use crate::recognition::split_partition;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PartitionKind {
    Rectangle,
    Diamond,
}

impl PartitionKind {
    /// `(i, j, complete)`: part `i` must be complete (or nonadjacent) to
    /// part `j`, 0-based.
    fn constraints(self) -> &'static [(usize, usize, bool)] {
        match self {
            PartitionKind::Rectangle => &[(0, 1, true), (0, 2, false), (3, 2, true), (3, 1, false)],
            PartitionKind::Diamond => &[(0, 2, true), (1, 3, false)],
        }
    }
}

impl fmt::Display for PartitionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PartitionKind::Rectangle => "rectangle",
            PartitionKind::Diamond => "diamond",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FourPartition {
    pub parts: [VertexSet; 4],
    pub kind: PartitionKind,
}

impl FourPartition {
    pub fn new(parts: [VertexSet; 4], kind: PartitionKind) -> Self {
        FourPartition { parts, kind }
    }

    /// Index of the part containing `v`.
    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(v))
    }
}

/// `diamond {0,4} {1,5} {2,6} {3,7}`
impl fmt::Display for FourPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for p in &self.parts {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

/// Parts nonempty, disjoint and covering, and the kind's adjacency pattern
/// holds exactly.
pub fn is_valid_partition(g: &Graph, p: &FourPartition) -> bool {
    let mut seen = VertexSet::EMPTY;
    for part in &p.parts {
        if part.is_empty() || !part.is_disjoint(seen) {
            return false;
        }
        seen = seen.union(*part);
    }
    seen == g.vertices()
        && p.kind.constraints().iter().all(|&(i, j, complete)| {
            if complete {
                g.is_complete_to(p.parts[i], p.parts[j])
            } else {
                g.is_nonadjacent_to(p.parts[i], p.parts[j])
            }
        })
}

/// The diamond partition induced by an antimorphism of a graph of order
/// `4k`: each cycle is rotated to start in `K = {v : d(v) >= 2k}` and its
/// `j`-th vertex goes to part `(j - 1) mod 4`, so that `sigma` maps each part
/// onto the next.
///
/// Errors unless the order is a positive multiple of 4, `sigma` is an
/// antimorphism, every cycle meets `K`, and the result is a valid diamond
/// partition. Self-complementary split graphs always succeed; other graphs
/// are accepted when the construction happens to give a diamond.
pub fn diamond_from_antimorphism(g: &Graph, sigma: &Permutation) -> Result<FourPartition> {
    let n = g.order();
    if n == 0 || !n.is_multiple_of(4) {
        return Err(precondition(format!(
            "diamond construction needs order 4k, got {n}"
        )));
    }
    if !sigma.is_antimorphism(g) {
        return Err(precondition(format!("{sigma} is not an antimorphism")));
    }
    let half = n / 2;
    let mut parts = [VertexSet::EMPTY; 4];
    for cycle in sigma.cycles() {
        let start = cycle
            .iter()
            .position(|&v| g.degree(v) >= half)
            .ok_or_else(|| precondition(format!("cycle {cycle:?} has no high-degree vertex")))?;
        for j in 0..cycle.len() {
            let v = cycle[(start + j) % cycle.len()];
            parts[j % 4] = parts[j % 4].with(v);
        }
    }
    let p = FourPartition::new(parts, PartitionKind::Diamond);
    if !is_valid_partition(g, &p) {
        return Err(precondition(format!("{p} is not a diamond partition")));
    }
    Ok(p)
}

/// Does `sigma` map part `j` onto part `j + 1 (mod 4)`?
pub fn rotates_parts(sigma: &Permutation, p: &FourPartition) -> bool {
    (0..4).all(|j| {
        let image: VertexSet = p.parts[j].iter().map(|v| sigma.apply(v)).collect();
        image == p.parts[(j + 1) % 4]
    })
}

/// The diamond `(K', I', K \ K', I \ I')` from a split partition, with `K'`
/// and `I'` the smallest vertex of each side.
pub fn any_diamond(g: &Graph) -> Result<FourPartition> {
    let sp = split_partition(g).ok_or_else(|| precondition("graph is not split"))?;
    let (mut k, mut i) = (sp.clique, sp.independent);
    // A vertex may be movable across when one side is too small.
    if k.len() < 2 {
        if let Some(v) = i
            .iter()
            .find(|&v| g.is_complete_to(VertexSet::singleton(v), k))
        {
            k = k.with(v);
            i = i.without(v);
        }
    }
    if i.len() < 2 {
        if let Some(v) = k
            .iter()
            .find(|&v| g.is_nonadjacent_to(VertexSet::singleton(v), i))
        {
            k = k.without(v);
            i = i.with(v);
        }
    }
    if k.len() < 2 || i.len() < 2 {
        return Err(precondition(
            "no split partition with both sides of size at least 2",
        ));
    }
    let (k1, i1) = (
        VertexSet::singleton(k.first().unwrap()),
        VertexSet::singleton(i.first().unwrap()),
    );
    Ok(FourPartition::new(
        [k1, i1, k.difference(k1), i.difference(i1)],
        PartitionKind::Diamond,
    ))
}

/// Outcome of [`partition_symmetry`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionSymmetry {
    /// Some antimorphism maps the family of parts onto itself.
    pub self_complementary: bool,
    /// Some antimorphism maps part `j` onto part `j + 1 (mod 4)`.
    pub strict_rotation: bool,
    /// A witnessing antimorphism, the rotating one when it exists.
    pub antimorphism: Option<Permutation>,
    /// `roles[i]` is the part that the witness maps part `i` onto.
    pub roles: Option<[usize; 4]>,
}

fn role_permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in (0..4).filter(|&b| b != a) {
            for c in (0..4).filter(|&c| c != a && c != b) {
                out.push([a, b, c, 6 - a - b - c]);
            }
        }
    }
    out
}

fn antimorphism_with_roles(
    g: &Graph,
    gc: &Graph,
    p: &FourPartition,
    roles: [usize; 4],
) -> Option<Permutation> {
    let n = g.order();
    let (mut from, mut to) = (vec![0u32; n], vec![0u32; n]);
    for (i, part) in p.parts.iter().enumerate() {
        for v in part.iter() {
            from[v] = roles[i] as u32;
            to[v] = i as u32;
        }
    }
    let mut found = None;
    let _ = IsoSearch::new(g, gc)
        .with_colors(from, to)
        .antimorphism()
        .run(|s| {
            found = Some(s.clone());
            ControlFlow::Break(())
        });
    found
}

/// Whether the four parts form a partition of the same kind in the
/// complement, witnessed by an antimorphism permuting the parts. Any role
/// permutation is allowed; the strict rotation is reported separately.
pub fn partition_symmetry(g: &Graph, p: &FourPartition) -> PartitionSymmetry {
    let none = PartitionSymmetry {
        self_complementary: false,
        strict_rotation: false,
        antimorphism: None,
        roles: None,
    };
    if !is_valid_partition(g, p) {
        return none;
    }
    let gc = g.complement();
    let rotation = [1, 2, 3, 0];
    if let Some(s) = antimorphism_with_roles(g, &gc, p, rotation) {
        return PartitionSymmetry {
            self_complementary: true,
            strict_rotation: true,
            antimorphism: Some(s),
            roles: Some(rotation),
        };
    }
    for roles in role_permutations() {
        if let Some(s) = antimorphism_with_roles(g, &gc, p, roles) {
            return PartitionSymmetry {
                self_complementary: true,
                strict_rotation: false,
                antimorphism: Some(s),
                roles: Some(roles),
            };
        }
    }
    none
}

pub fn is_self_complementary_partition(g: &Graph, p: &FourPartition) -> bool {
    partition_symmetry(g, p).self_complementary
}

/// The parts `(I_1, K_1, K_2, I_2)` of `Z_k` in [`build_zk`]'s labeling.
pub fn zk_rectangle(k: usize) -> Result<FourPartition> {
    build_zk(k)?;
    let set = |r: std::ops::Range<usize>| r.collect::<VertexSet>();
    Ok(FourPartition::new(
        [
            set(2 * k..3 * k),
            set(0..k),
            set(k..2 * k),
            set(3 * k..4 * k),
        ],
        PartitionKind::Rectangle,
    ))
}

/// A rectangle partition of `g` when `g ≅ Z_k`, carried over from `Z_k`'s
/// block partition; `None` otherwise.
pub fn rectangle_partition(g: &Graph) -> Option<FourPartition> {
    let n = g.order();
    if n == 0 || !n.is_multiple_of(4) {
        return None;
    }
    let k = n / 4;
    let z = build_zk(k).ok()?;
    let iso = is_isomorphic(&z, g)?;
    let model = zk_rectangle(k).ok()?;
    let parts = model
        .parts
        .map(|part| part.iter().map(|v| iso.apply(v)).collect());
    let p = FourPartition::new(parts, PartitionKind::Rectangle);
    debug_assert!(is_valid_partition(g, &p));
    Some(p)
}

/// Searches all assignments of vertices to four parts for a partition of
/// the given kind, by backtracking with forward checking.
pub fn find_partition_bruteforce(g: &Graph, kind: PartitionKind) -> Option<FourPartition> {
    let n = g.order();
    if n < 4 {
        return None;
    }
    // allowed[p] = parts q a vertex may take given a neighbor (or non-neighbor) in p.
    let mut if_adjacent = [0b1111u8; 4];
    let mut if_not_adjacent = [0b1111u8; 4];
    for &(i, j, complete) in kind.constraints() {
        let (table, a, b) = if complete {
            (&mut if_not_adjacent, i, j)
        } else {
            (&mut if_adjacent, i, j)
        };
        table[a] &= !(1 << b);
        table[b] &= !(1 << a);
    }
    struct Search<'a> {
        g: &'a Graph,
        if_adjacent: [u8; 4],
        if_not_adjacent: [u8; 4],
        assigned: Vec<Option<usize>>,
    }
    impl Search<'_> {
        fn run(&mut self, domains: Vec<u8>) -> bool {
            let n = self.g.order();
            // Every part must still be reachable.
            let reachable = self
                .assigned
                .iter()
                .zip(&domains)
                .fold(0u8, |acc, (a, &d)| acc | a.map_or(d, |p| 1 << p));
            if reachable != 0b1111 {
                return false;
            }
            let Some(v) = (0..n)
                .filter(|&v| self.assigned[v].is_none())
                .min_by_key(|&v| domains[v].count_ones())
            else {
                return true;
            };
            for p in 0..4 {
                if domains[v] >> p & 1 == 0 {
                    continue;
                }
                let mut next = domains.clone();
                let mut ok = true;
                for u in (0..n).filter(|&u| u != v && self.assigned[u].is_none()) {
                    let allowed = if self.g.has_edge(u, v) {
                        self.if_adjacent[p]
                    } else {
                        self.if_not_adjacent[p]
                    };
                    next[u] &= allowed;
                    if next[u] == 0 {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    continue;
                }
                self.assigned[v] = Some(p);
                if self.run(next) {
                    return true;
                }
                self.assigned[v] = None;
            }
            false
        }
    }
    let mut search = Search {
        g,
        if_adjacent,
        if_not_adjacent,
        assigned: vec![None; n],
    };
    if !search.run(vec![0b1111; n]) {
        return None;
    }
    let mut parts = [VertexSet::EMPTY; 4];
    for (v, p) in search.assigned.iter().enumerate() {
        let p = p.expect("complete assignment");
        parts[p] = parts[p].with(v);
    }
    Some(FourPartition::new(parts, kind))
}
