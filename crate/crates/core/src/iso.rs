//! Isomorphism and antimorphism search.
//!
//! Both graphs are first colored by iterated degree refinement, computed
//! jointly so that colors are comparable across the two graphs. The search
//! then backtracks over color-compatible assignments, keeping a candidate
//! set per unmapped vertex that is narrowed by every assignment (forward
//! checking), and always branches on the vertex with the fewest candidates.
//!
//! Antimorphisms are isomorphisms onto the complement. When the map is a
//! permutation of a single vertex set the search also rejects partial maps
//! that close a cycle whose length is neither 1 nor a multiple of 4, or that
//! fix a second vertex: no antimorphism has such cycles.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};
use std::ops::ControlFlow;

use crate::graph::Graph;
use crate::permutation::Permutation;
use crate::vertex_set::VertexSet;

const UNMAPPED: usize = usize::MAX;

/// Returns a bijection `p` with `u ~ v` in `g` iff `p(u) ~ p(v)` in `h`.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Option<Permutation> {
    first(IsoSearch::new(g, h))
}

/// Returns an antimorphism of `g` if one exists; presence is equivalent to
/// `g` being self-complementary.
pub fn find_antimorphism(g: &Graph) -> Option<Permutation> {
    let gc = g.complement();
    first(IsoSearch::new(g, &gc).antimorphism())
}

pub fn is_self_complementary(g: &Graph) -> bool {
    find_antimorphism(g).is_some()
}

/// Calls `f` on every isomorphism from `g` to `h` until it breaks.
pub fn for_each_isomorphism<F>(g: &Graph, h: &Graph, f: F) -> ControlFlow<()>
where
    F: FnMut(&Permutation) -> ControlFlow<()>,
{
    IsoSearch::new(g, h).run(f)
}

/// Calls `f` on every antimorphism of `g` until it breaks.
pub fn for_each_antimorphism<F>(g: &Graph, f: F) -> ControlFlow<()>
where
    F: FnMut(&Permutation) -> ControlFlow<()>,
{
    let gc = g.complement();
    IsoSearch::new(g, &gc).antimorphism().run(f)
}

pub fn antimorphisms(g: &Graph) -> Vec<Permutation> {
    let mut out = Vec::new();
    let _ = for_each_antimorphism(g, |p| {
        out.push(p.clone());
        ControlFlow::Continue(())
    });
    out
}

fn first(search: IsoSearch<'_>) -> Option<Permutation> {
    let mut found = None;
    let _ = search.run(|p| {
        found = Some(p.clone());
        ControlFlow::Break(())
    });
    found
}

/// A configurable isomorphism search from `g` to `h`.
///
/// Optional vertex colorings restrict which vertices may correspond: vertex
/// `u` of `g` can only map to a vertex of `h` with the same color.
#[derive(Clone, Debug)]
pub struct IsoSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    colors: Option<(Vec<u32>, Vec<u32>)>,
    antimorphism: bool,
}

impl<'a> IsoSearch<'a> {
    pub fn new(g: &'a Graph, h: &'a Graph) -> Self {
        IsoSearch {
            g,
            h,
            colors: None,
            antimorphism: false,
        }
    }

    pub fn with_colors(mut self, g_colors: Vec<u32>, h_colors: Vec<u32>) -> Self {
        assert_eq!(g_colors.len(), self.g.order());
        assert_eq!(h_colors.len(), self.h.order());
        self.colors = Some((g_colors, h_colors));
        self
    }

    /// Treat the map as a permutation of one vertex set (`h` must be the
    /// complement of `g`) and prune by the antimorphism cycle structure.
    pub fn antimorphism(mut self) -> Self {
        self.antimorphism = true;
        self
    }

    pub fn first(self) -> Option<Permutation> {
        first(self)
    }

    pub fn run<F>(&self, mut f: F) -> ControlFlow<()>
    where
        F: FnMut(&Permutation) -> ControlFlow<()>,
    {
        let n = self.g.order();
        if n != self.h.order() || self.g.edge_count() != self.h.edge_count() {
            return ControlFlow::Continue(());
        }
        let (gi, hi) = match &self.colors {
            Some((a, b)) => (a.clone(), b.clone()),
            None => (vec![0; n], vec![0; n]),
        };
        let Some([cg, ch]) = refine_pair(self.g, self.h, gi, hi) else {
            return ControlFlow::Continue(());
        };
        let full = VertexSet::full(n).bits();
        let cand: Vec<u64> = (0..n)
            .map(|u| {
                (0..n)
                    .filter(|&w| ch[w] == cg[u])
                    .fold(0u64, |m, w| m | (1 << w))
            })
            .collect();
        let mut state = State {
            g: self.g,
            h: self.h,
            full,
            map: vec![UNMAPPED; n],
            fixed_points: 0,
            antimorphism: self.antimorphism,
        };
        state.extend(cand, 0, &mut f)
    }
}

struct State<'a> {
    g: &'a Graph,
    h: &'a Graph,
    full: u64,
    map: Vec<usize>,
    fixed_points: usize,
    antimorphism: bool,
}

impl State<'_> {
    fn extend<F>(&mut self, cand: Vec<u64>, used: u64, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Permutation) -> ControlFlow<()>,
    {
        let n = self.map.len();
        let next = (0..n)
            .filter(|&u| self.map[u] == UNMAPPED)
            .min_by_key(|&u| (cand[u] & !used).count_ones());
        let Some(u) = next else {
            let p = Permutation::from_image(self.map.clone()).expect("search yields a bijection");
            debug_assert!(p.is_isomorphism(self.g, self.h));
            return f(&p);
        };
        let nbrs_g = self.g.rows()[u];
        for w in VertexSet::from_bits(cand[u] & !used) {
            if self.antimorphism && !self.cycle_ok(u, w) {
                continue;
            }
            let row_h = self.h.rows()[w];
            let mut next_cand = cand.clone();
            let mut dead = false;
            #[allow(clippy::needless_range_loop)]
            for u2 in 0..n {
                if u2 == u || self.map[u2] != UNMAPPED {
                    continue;
                }
                let allowed = if (nbrs_g >> u2) & 1 == 1 {
                    row_h
                } else {
                    !row_h & self.full & !(1 << w)
                };
                next_cand[u2] &= allowed & !(1 << w);
                if next_cand[u2] & !used == 0 {
                    dead = true;
                    break;
                }
            }
            if dead {
                continue;
            }
            self.map[u] = w;
            if u == w {
                self.fixed_points += 1;
            }
            let flow = self.extend(next_cand, used | (1 << w), f);
            if u == w {
                self.fixed_points -= 1;
            }
            self.map[u] = UNMAPPED;
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// Would setting `σ(u) = w` close a forbidden cycle?
    fn cycle_ok(&self, u: usize, w: usize) -> bool {
        if u == w {
            return self.fixed_points == 0;
        }
        let mut len = 1;
        let mut x = w;
        while x != u {
            x = self.map[x];
            if x == UNMAPPED {
                return true;
            }
            len += 1;
        }
        len % 4 == 0
    }
}

/// Joint color refinement; `None` when the color histograms diverge, which
/// proves the graphs non-isomorphic under the given initial colors.
fn refine_pair(g: &Graph, h: &Graph, gi: Vec<u32>, hi: Vec<u32>) -> Option<[Vec<u32>; 2]> {
    let graphs = [g, h];
    let mut colors = [gi, hi];
    for (graph, c) in graphs.iter().zip(colors.iter_mut()) {
        for (v, col) in c.iter_mut().enumerate() {
            // Pack the caller's color with the degree so round zero already splits by degree.
            *col = (*col << 7) | graph.degree(v) as u32;
        }
    }
    let mut classes = 0;
    loop {
        let (next, count) = refine_round(&graphs, &colors, &mut None);
        if histogram(&next[0]) != histogram(&next[1]) {
            return None;
        }
        let stable = count == classes;
        classes = count;
        colors = [next[0].clone(), next[1].clone()];
        if stable {
            return Some(colors);
        }
    }
}

type Signature = (u32, Vec<u32>);

fn refine_round<const K: usize>(
    graphs: &[&Graph; K],
    colors: &[Vec<u32>; K],
    trace: &mut Option<&mut DefaultHasher>,
) -> ([Vec<u32>; K], usize) {
    let sigs: Vec<Vec<Signature>> = graphs
        .iter()
        .zip(colors.iter())
        .map(|(g, c)| {
            (0..g.order())
                .map(|v| {
                    let mut nb: Vec<u32> = g.neighbors(v).iter().map(|u| c[u]).collect();
                    nb.sort_unstable();
                    (c[v], nb)
                })
                .collect()
        })
        .collect();
    let mut table: BTreeMap<&Signature, u32> = BTreeMap::new();
    for s in sigs.iter().flatten() {
        *table.entry(s).or_insert(0) += 1;
    }
    if let Some(hasher) = trace {
        for (sig, count) in &table {
            sig.hash(*hasher);
            count.hash(*hasher);
        }
    }
    let rank: BTreeMap<&Signature, u32> = table
        .keys()
        .enumerate()
        .map(|(i, s)| (*s, i as u32))
        .collect();
    let next = std::array::from_fn(|i| sigs[i].iter().map(|s| rank[s]).collect());
    (next, table.len())
}

fn histogram(c: &[u32]) -> Vec<u32> {
    let mut v = c.to_vec();
    v.sort_unstable();
    v
}

/// An isomorphism invariant used to bucket graphs before exact comparison.
/// Equal graphs up to isomorphism always share it; the converse need not hold.
pub fn invariant(g: &Graph) -> u64 {
    let mut hasher = DefaultHasher::new();
    g.order().hash(&mut hasher);
    g.edge_count().hash(&mut hasher);
    let graphs = [g];
    let mut colors = [g
        .degrees()
        .into_iter()
        .map(|d| d as u32)
        .collect::<Vec<_>>()];
    let mut classes = 0;
    loop {
        let (next, count) = refine_round(&graphs, &colors, &mut Some(&mut hasher));
        colors = next;
        if count == classes {
            break;
        }
        classes = count;
    }
    hasher.finish()
}

/// Keeps the first graph of every isomorphism class, preserving order.
pub fn dedupe_isomorphic(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut buckets: std::collections::HashMap<u64, Vec<usize>> = Default::default();
    let mut kept: Vec<Graph> = Vec::new();
    for g in graphs {
        let bucket = buckets.entry(invariant(&g)).or_default();
        if bucket
            .iter()
            .any(|&i| is_isomorphic(&kept[i], &g).is_some())
        {
            continue;
        }
        bucket.push(kept.len());
        kept.push(g);
    }
    kept
}
