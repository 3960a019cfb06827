//! Degree sequences: realization, 2-switch dynamics, slices, the parity
//! conditions, and the forcibly self-complementary test.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{precondition, Error, Result};
use crate::graph::Graph;
use crate::iso::{dedupe_isomorphic, is_self_complementary};
use crate::recognition::by_degree_desc;
use crate::vertex_set::VertexSet;

/// Largest order accepted by the brute-force realization predicates.
pub const BRUTE_FORCE_MAX_ORDER: usize = 10;

/// A degree sequence in grouped form `(d_1^{n_1}, .., d_l^{n_l})` with
/// `d_1 > .. > d_l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence {
    pairs: Vec<(usize, usize)>,
}

impl DegreeSequence {
    /// Validates strictly decreasing degrees, positive multiplicities and
    /// `d_1 <= n - 1`.
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        if pairs.iter().any(|&(_, m)| m == 0) {
            return Err(Error::DegreeSequence(
                "multiplicities must be positive".into(),
            ));
        }
        if pairs.windows(2).any(|w| w[0].0 <= w[1].0) {
            return Err(Error::DegreeSequence(
                "degrees must be strictly decreasing".into(),
            ));
        }
        let n: usize = pairs.iter().map(|p| p.1).sum();
        if let Some(&(d, _)) = pairs.first() {
            if d >= n {
                return Err(Error::DegreeSequence(format!(
                    "degree {d} is impossible on {n} vertices"
                )));
            }
        }
        Ok(DegreeSequence { pairs })
    }

    /// Groups an arbitrary list of degrees.
    pub fn from_degrees(mut degrees: Vec<usize>) -> Result<Self> {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for d in degrees {
            match pairs.last_mut() {
                Some((last, m)) if *last == d => *m += 1,
                _ => pairs.push((d, 1)),
            }
        }
        DegreeSequence::new(pairs)
    }

    pub fn of(g: &Graph) -> Self {
        DegreeSequence::from_degrees(g.degrees()).expect("a graph's degrees form a valid sequence")
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of distinct degrees.
    pub fn distinct(&self) -> usize {
        self.pairs.len()
    }

    pub fn order(&self) -> usize {
        self.pairs.iter().map(|p| p.1).sum()
    }

    /// The expanded, non-increasing list of degrees.
    pub fn degrees(&self) -> Vec<usize> {
        self.pairs
            .iter()
            .flat_map(|&(d, m)| std::iter::repeat_n(d, m))
            .collect()
    }

    /// Erdős–Gallai test.
    pub fn is_graphical(&self) -> bool {
        let d = self.degrees();
        let total: usize = d.iter().sum();
        if total % 2 == 1 {
            return false;
        }
        let n = d.len();
        let mut prefix = 0;
        for k in 1..=n {
            prefix += d[k - 1];
            let rest: usize = d[k..].iter().map(|&x| x.min(k)).sum();
            if prefix > k * (k - 1) + rest {
                return false;
            }
        }
        true
    }

    /// Could an antimorphism pair up the degrees? Requires `n(n-1)/4` edges
    /// and the multiset `{d}` to equal `{n - 1 - d}`.
    pub fn is_complement_symmetric(&self) -> bool {
        let n = self.order();
        let l = self.pairs.len();
        (0..l).all(|i| {
            let (d, m) = self.pairs[i];
            let (e, k) = self.pairs[l - 1 - i];
            m == k && d + e + 1 == n
        })
    }
}

/// Parses `"5^4,2^4"`; a bare degree means multiplicity one. The empty string
/// is the sequence of the null graph.
impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return DegreeSequence::new(Vec::new());
        }
        let bad = |part: &str| Error::DegreeSequence(format!("cannot parse {part:?}"));
        let pairs = s
            .split(',')
            .map(|part| {
                let part = part.trim();
                let (d, m) = part.split_once('^').unwrap_or((part, "1"));
                let d = d.trim().parse().map_err(|_| bad(part))?;
                let m = m.trim().parse().map_err(|_| bad(part))?;
                Ok((d, m))
            })
            .collect::<Result<Vec<_>>>()?;
        DegreeSequence::new(pairs)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, m)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}^{m}")?;
        }
        Ok(())
    }
}

impl Serialize for DegreeSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Havel–Hakimi realization. Vertex `i` receives the `i`-th entry of the
/// expanded sequence.
pub fn realize(ds: &DegreeSequence) -> Option<Graph> {
    let n = ds.order();
    let mut residual: Vec<(usize, usize)> = ds
        .degrees()
        .into_iter()
        .enumerate()
        .map(|(v, d)| (d, v))
        .collect();
    let mut b = crate::graph::GraphBuilder::new(n).ok()?;
    loop {
        residual.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let (d, v) = residual[..].first().copied().unwrap_or((0, 0));
        if d == 0 {
            break;
        }
        if d >= residual.len() {
            return None;
        }
        for entry in residual[1..=d].iter_mut() {
            if entry.0 == 0 {
                return None;
            }
            entry.0 -= 1;
            b.add_edge(v, entry.1).ok()?;
        }
        residual.remove(0);
    }
    Some(b.build())
}

/// The 2-switch `(v1 v2, v3 v4) -> (v1 v3, v2 v4)`.
///
/// Requires `v1 ~ v2`, `v3 ~ v4`, `v1 ≁ v3`, `v2 ≁ v4`, all distinct.
pub fn two_switch(g: &Graph, v1: usize, v2: usize, v3: usize, v4: usize) -> Result<Graph> {
    let vs = [v1, v2, v3, v4];
    if let Some(&v) = vs.iter().find(|&&v| v >= g.order()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    if vs.iter().collect::<HashSet<_>>().len() != 4 {
        return Err(precondition(format!(
            "2-switch vertices {vs:?} are not distinct"
        )));
    }
    if !(g.has_edge(v1, v2) && g.has_edge(v3, v4) && !g.has_edge(v1, v3) && !g.has_edge(v2, v4)) {
        return Err(precondition(format!(
            "2-switch ({v1} {v2}, {v3} {v4}) -> ({v1} {v3}, {v2} {v4}) is not applicable"
        )));
    }
    g.modified(|b| {
        b.remove_edge(v1, v2)?.remove_edge(v3, v4)?;
        b.add_edge(v1, v3)?.add_edge(v2, v4)?;
        Ok(())
    })
}

/// Every applicable 2-switch as `[v1, v2, v3, v4]` for [`two_switch`]. Each
/// unordered pair of edges contributes at most two switches.
pub fn applicable_two_switches(g: &Graph) -> Vec<[usize; 4]> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut out = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if !g.has_edge(a, c) && !g.has_edge(b, d) {
                out.push([a, b, c, d]);
            }
            if !g.has_edge(a, d) && !g.has_edge(b, c) {
                out.push([a, b, d, c]);
            }
        }
    }
    out
}

/// Walks every labeled realization of `ds` reachable by 2-switches from the
/// Havel–Hakimi realization (which is all of them), breadth first, calling
/// `f` on each until it breaks.
pub fn for_each_realization<F>(ds: &DegreeSequence, mut f: F) -> Result<ControlFlow<()>>
where
    F: FnMut(&Graph) -> ControlFlow<()>,
{
    let start = realize(ds).ok_or_else(|| Error::NotGraphical(ds.to_string()))?;
    let mut seen: HashSet<Graph> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(g) = queue.pop_front() {
        if f(&g).is_break() {
            return Ok(ControlFlow::Break(()));
        }
        for [v1, v2, v3, v4] in applicable_two_switches(&g) {
            let next = two_switch(&g, v1, v2, v3, v4).expect("enumerated switch applies");
            if !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// All realizations of `ds`, optionally reduced to one per isomorphism class
/// (first in breadth-first order).
pub fn realization_closure(ds: &DegreeSequence, iso_dedupe: bool) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    let _ = for_each_realization(ds, |g| {
        all.push(g.clone());
        ControlFlow::Continue(())
    })?;
    Ok(if iso_dedupe {
        dedupe_isomorphic(all)
    } else {
        all
    })
}

fn check_brute_force_order(ds: &DegreeSequence) -> Result<()> {
    if ds.order() > BRUTE_FORCE_MAX_ORDER {
        return Err(Error::OrderOutOfRange {
            order: ds.order(),
            what: "brute-force realization search",
        });
    }
    Ok(())
}

/// Does some realization of `ds` have an antimorphism? Decided by walking the
/// realization closure. Non-graphical sequences have no realization and give
/// `false`.
pub fn is_potentially_sc_bruteforce(ds: &DegreeSequence) -> Result<bool> {
    check_brute_force_order(ds)?;
    if !ds.is_graphical() || !ds.is_complement_symmetric() {
        return Ok(false);
    }
    let flow = for_each_realization(ds, |g| {
        if is_self_complementary(g) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(flow.is_break())
}

/// Is every realization of `ds` self-complementary? Decided by walking the
/// realization closure; errors on non-graphical input.
pub fn is_forcibly_sc_bruteforce(ds: &DegreeSequence) -> Result<bool> {
    check_brute_force_order(ds)?;
    if !ds.is_graphical() {
        return Err(Error::NotGraphical(ds.to_string()));
    }
    let flow = for_each_realization(ds, |g| {
        if is_self_complementary(g) {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    })?;
    Ok(flow.is_continue())
}

/// The characterization of forcibly self-complementary sequences: for each
/// `i <= l/2`, `n_{l+1-i} = n_i ∈ {2, 4}` and
/// `d_{l+1-i} = n - 1 - d_i = (n_1 + .. + n_i) - n_i/2`; and when `l` is
/// odd, the middle class has `n_{(l+1)/2} ∈ {1, 5}` and degree `(n-1)/2`.
pub fn is_forcibly_sc(ds: &DegreeSequence) -> bool {
    let p = ds.pairs();
    let l = p.len();
    let n = ds.order();
    let mut prefix = 0;
    for i in 0..l / 2 {
        let (d_hi, n_hi) = p[i];
        let (d_lo, n_lo) = p[l - 1 - i];
        prefix += n_hi;
        let ok = n_lo == n_hi
            && matches!(n_hi, 2 | 4)
            && d_hi + d_lo + 1 == n
            && 2 * d_lo + n_hi == 2 * prefix;
        if !ok {
            return false;
        }
    }
    if l % 2 == 1 {
        let (d_mid, n_mid) = p[l / 2];
        return matches!(n_mid, 1 | 5) && 2 * d_mid + 1 == n;
    }
    true
}

/// Every graphical degree sequence on `n` vertices, in decreasing
/// lexicographic order of the expanded sequence.
pub fn graphical_sequences(n: usize) -> Vec<DegreeSequence> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<DegreeSequence>) {
        if cur.len() == n {
            if let Ok(ds) = DegreeSequence::from_degrees(cur.clone()) {
                if ds.is_graphical() {
                    out.push(ds);
                }
            }
            return;
        }
        for d in (0..=max).rev() {
            cur.push(d);
            rec(n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.saturating_sub(1), &mut Vec::new(), &mut out);
    out
}

/// The `index`-th slice: the subgraph induced by the `index`-th highest and
/// `index`-th lowest degree classes (1-based). For the middle class of an
/// odd number of classes both sets coincide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slice {
    pub index: usize,
    pub high: VertexSet,
    pub low: VertexSet,
    pub subgraph: Graph,
}

impl Slice {
    pub fn vertices(&self) -> VertexSet {
        self.high.union(self.low)
    }
}

pub fn slices(g: &Graph) -> Vec<Slice> {
    let ds = DegreeSequence::of(g);
    let classes: Vec<VertexSet> = ds
        .pairs()
        .iter()
        .map(|&(d, _)| (0..g.order()).filter(|&v| g.degree(v) == d).collect())
        .collect();
    let l = classes.len();
    (0..l.div_ceil(2))
        .map(|i| {
            let (high, low) = (classes[i], classes[l - 1 - i]);
            Slice {
                index: i + 1,
                high,
                low,
                subgraph: g
                    .induced_subgraph(high.union(low))
                    .expect("classes are in range"),
            }
        })
        .collect()
}

/// Necessary conditions for self-complementarity of a graph on `4k`
/// vertices: for every vertex `v`, an even number of vertices share `d(v)`
/// in `G`, and, with `H`/`L` the `2k` highest/lowest-degree vertices, an even
/// number of vertices of `H` share `v`'s degree in `G[H]` (for `v ∈ H`), and
/// likewise in `G[L]`. `false` certifies that `g` is not self-complementary;
/// `true` proves nothing.
pub fn parity_conditions(g: &Graph) -> Result<bool> {
    let n = g.order();
    if !n.is_multiple_of(4) {
        return Err(precondition(format!(
            "parity conditions need order 0 mod 4, got {n}"
        )));
    }
    let order = by_degree_desc(g);
    let high: VertexSet = order[..n / 2].iter().copied().collect();
    let low = g.vertices().difference(high);
    let even_classes = |set: VertexSet, deg: &dyn Fn(usize) -> usize| {
        set.iter()
            .all(|v| set.iter().filter(|&u| deg(u) == deg(v)).count() % 2 == 0)
    };
    Ok(even_classes(g.vertices(), &|v| g.degree(v))
        && even_classes(high, &|v| g.degree_in(v, high))
        && even_classes(low, &|v| g.degree_in(v, low)))
}
