//! Graph families: the elementary family built from P4 and the two order-8
//! blocks, one-cycle (Gibbs) graphs, `Z_k`, circulant powers, and realizations
//! of non-forcibly self-complementary degree sequences that are not
//! self-complementary.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::degree_seq::{
    is_potentially_sc_bruteforce, slices, two_switch, DegreeSequence, BRUTE_FORCE_MAX_ORDER,
};
use crate::error::{precondition, Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::graph6;
use crate::iso::{is_isomorphic, is_self_complementary};
use crate::recognition::unique_sc_split_partition;
use crate::vertex_set::VertexSet;

// Clique 0..3, independent set 4..7. In the first the clique-to-independent
// edges form an 8-cycle, in the second two disjoint K_{2,2}.
const FIG_A_GRAPH6: &str = "G~qa`_";
const FIG_B_GRAPH6: &str = "G~r@`_";
// Corners 0..3, edge midpoints 4..7 of the square drawing.
const SMALL_WITNESS_GRAPH6: &str = "GKjJ_{";

fn prototype(cell: &'static OnceLock<Graph>, code: &str, expect_sc: bool) -> &'static Graph {
    cell.get_or_init(|| {
        let g = graph6::read(code).expect("prototype encodings are valid");
        assert_eq!(g.order(), 8);
        assert_eq!(
            is_self_complementary(&g),
            expect_sc,
            "prototype {code} has the wrong SC status"
        );
        g
    })
}

/// The order-8 self-complementary split graph with degrees `(5^4, 2^4)`
/// whose clique-to-independent edges form an 8-cycle.
pub fn fig_a() -> &'static Graph {
    static CELL: OnceLock<Graph> = OnceLock::new();
    let g = prototype(&CELL, FIG_A_GRAPH6, true);
    debug_assert_eq!(DegreeSequence::of(g).to_string(), "5^4,2^4");
    g
}

/// The other order-8 self-complementary split graph with degrees
/// `(5^4, 2^4)`; isomorphic to `Z_2`.
pub fn fig_b() -> &'static Graph {
    static CELL: OnceLock<Graph> = OnceLock::new();
    let g = prototype(&CELL, FIG_B_GRAPH6, true);
    debug_assert_eq!(DegreeSequence::of(g).to_string(), "5^4,2^4");
    g
}

/// A realization of `(4^4, 3^4)` with no antimorphism.
pub fn small_two_degree_witness() -> &'static Graph {
    static CELL: OnceLock<Graph> = OnceLock::new();
    prototype(&CELL, SMALL_WITNESS_GRAPH6, false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Block {
    P4,
    FigA,
    FigB,
}

impl Block {
    pub const ALL: [Block; 3] = [Block::P4, Block::FigA, Block::FigB];

    /// The block graph with its clique listed first.
    pub fn graph(self) -> Graph {
        match self {
            // Middle vertices first: 0-1 is the clique, 2 ~ 0, 3 ~ 1.
            Block::P4 => Graph::from_edges(4, [(0, 1), (0, 2), (1, 3)]).expect("valid"),
            Block::FigA => fig_a().clone(),
            Block::FigB => fig_b().clone(),
        }
    }

    fn code(self) -> &'static str {
        match self {
            Block::P4 => "P4",
            Block::FigA => "A",
            Block::FigB => "B",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tail {
    None,
    Apex,
    C5,
}

/// Recipe for an elementary graph: blocks `S_1, .., S_p` and a tail `C` of
/// 0, 1 or 5 vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockSpec {
    pub blocks: Vec<Block>,
    pub tail: Tail,
}

impl BlockSpec {
    pub fn new(blocks: Vec<Block>, tail: Tail) -> Result<Self> {
        if blocks.is_empty() && tail == Tail::None {
            return Err(Error::BlockSpec(
                "an elementary graph needs a block or a tail".into(),
            ));
        }
        Ok(BlockSpec { blocks, tail })
    }

    pub fn order(&self) -> usize {
        let blocks: usize = self
            .blocks
            .iter()
            .map(|b| if *b == Block::P4 { 4 } else { 8 })
            .sum();
        blocks
            + match self.tail {
                Tail::None => 0,
                Tail::Apex => 1,
                Tail::C5 => 5,
            }
    }
}

/// Text form `P4,A,B;apex`, `;c5`, `P4,P4` (no tail).
impl FromStr for BlockSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (blocks, tail) = s.split_once(';').unwrap_or((s, "none"));
        let tail = match tail.trim().to_ascii_lowercase().as_str() {
            "" | "none" => Tail::None,
            "apex" => Tail::Apex,
            "c5" => Tail::C5,
            other => return Err(Error::BlockSpec(format!("unknown tail {other:?}"))),
        };
        let blocks = blocks
            .split(',')
            .map(str::trim)
            .filter(|b| !b.is_empty())
            .map(|b| match b.to_ascii_uppercase().as_str() {
                "P4" => Ok(Block::P4),
                "A" | "FIG_A" => Ok(Block::FigA),
                "B" | "FIG_B" => Ok(Block::FigB),
                other => Err(Error::BlockSpec(format!("unknown block {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        BlockSpec::new(blocks, tail)
    }
}

impl fmt::Display for BlockSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<&str> = self.blocks.iter().map(|b| b.code()).collect();
        write!(f, "{}", blocks.join(","))?;
        match self.tail {
            Tail::None => Ok(()),
            Tail::Apex => write!(f, ";apex"),
            Tail::C5 => write!(f, ";c5"),
        }
    }
}

impl Serialize for BlockSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Builds the elementary graph of `spec`. Block `i` occupies the next
/// consecutive labels in its prototype order; the tail comes last.
pub fn build_elementary(spec: &BlockSpec) -> Result<Graph> {
    if spec.blocks.is_empty() && spec.tail == Tail::None {
        return Err(Error::BlockSpec(
            "an elementary graph needs a block or a tail".into(),
        ));
    }
    let n = spec.order();
    let mut b = GraphBuilder::new(n)?;
    let mut parts: Vec<(VertexSet, VertexSet)> = Vec::new();
    let mut offset = 0;
    for block in &spec.blocks {
        let s = block.graph();
        let split =
            unique_sc_split_partition(&s).expect("blocks are self-complementary split graphs");
        for (u, v) in s.edges() {
            b.add_edge(u + offset, v + offset)?;
        }
        let shift = |set: VertexSet| set.iter().map(|v| v + offset).collect::<VertexSet>();
        parts.push((shift(split.clique), shift(split.independent)));
        offset += s.order();
    }
    let all_k: VertexSet = parts.iter().fold(VertexSet::EMPTY, |acc, p| acc.union(p.0));
    for u in all_k.iter() {
        for v in all_k.iter().filter(|&v| v > u) {
            b.add_edge(u, v)?;
        }
    }
    for (i, (k_i, _)) in parts.iter().enumerate() {
        for (_, i_j) in &parts[i + 1..] {
            b.join(*k_i, *i_j)?;
        }
    }
    let tail: VertexSet = (offset..n).collect();
    b.join(tail, all_k)?;
    if spec.tail == Tail::C5 {
        for i in 0..5 {
            b.add_edge(offset + i, offset + (i + 1) % 5)?;
        }
    }
    Ok(b.build())
}

/// Recovers a block spec from the slices of `g` and confirms it by
/// isomorphism; `None` when `g` is not elementary.
pub fn decompose_elementary(g: &Graph) -> Option<BlockSpec> {
    let sl = slices(g);
    let classes = DegreeSequence::of(g).distinct();
    let paired = classes / 2;
    let mut blocks = Vec::with_capacity(paired);
    for s in &sl[..paired] {
        let block = Block::ALL
            .into_iter()
            .find(|b| is_isomorphic(&s.subgraph, &b.graph()).is_some())?;
        blocks.push(block);
    }
    let tail = if classes.is_multiple_of(2) {
        Tail::None
    } else {
        let middle = &sl[paired].subgraph;
        match middle.order() {
            1 => Tail::Apex,
            5 if is_isomorphic(middle, &Graph::cycle(5).expect("valid")).is_some() => Tail::C5,
            _ => return None,
        }
    };
    let spec = BlockSpec::new(blocks, tail).ok()?;
    let rebuilt = build_elementary(&spec).ok()?;
    is_isomorphic(g, &rebuilt).map(|_| spec)
}

/// The one-cycle construction: a self-complementary graph on `4k` vertices
/// with antimorphism `(0 1 .. 4k-1)`, odd positions (even labels) of degree
/// `d`, the rest of degree `4k - 1 - d`. Vertex `v_i` has label `i - 1`.
pub fn build_gibbs_onecycle(k: usize, d: usize) -> Result<Graph> {
    if k == 0 || !(2 * k <= d && d < 3 * k) {
        return Err(precondition(format!(
            "one-cycle construction needs 2k <= d <= 3k-1, got k={k}, d={d}"
        )));
    }
    let n = 4 * k;
    if n > crate::graph::MAX_ORDER {
        return Err(Error::TooManyVertices(n));
    }
    // row[j] = [v_1 ~ v_{j+1}]
    let mut row = vec![false; n];
    for j in (2..=4 * k - 2).step_by(4) {
        row[j - 1] = true;
    }
    let x: Vec<usize> = if (d - k) % 2 == 1 {
        (3..=d - k)
            .step_by(2)
            .chain([2 * k + 1])
            .chain((5 * k + 2 - d..=4 * k - 1).step_by(2))
            .collect()
    } else {
        (3..=d - k + 1)
            .step_by(2)
            .chain((5 * k + 1 - d..=4 * k - 1).step_by(2))
            .collect()
    };
    for j in x {
        row[j - 1] = true;
    }
    let mut b = GraphBuilder::new(n)?;
    for a in 0..n {
        for c in a + 1..n {
            if row[c - a] ^ (a % 2 == 1) {
                b.add_edge(a, c)?;
            }
        }
    }
    let g = b.build();
    debug_assert!(g
        .degrees()
        .iter()
        .enumerate()
        .all(|(v, &dv)| dv == if v % 2 == 0 { d } else { n - 1 - d }));
    Ok(g)
}

/// `P4` with its ends blown up to independent `k`-sets and its middle
/// vertices to `k`-cliques. Labels: `K_1 = 0..k`, `K_2 = k..2k`,
/// `I_1 = 2k..3k` (complete to `K_1`), `I_2 = 3k..4k` (complete to `K_2`).
pub fn build_zk(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(precondition("Z_k needs k >= 1"));
    }
    let n = 4 * k;
    let mut b = GraphBuilder::new(n)?;
    let set = |r: std::ops::Range<usize>| r.collect::<VertexSet>();
    let (k1, k2, i1, i2) = (
        set(0..k),
        set(k..2 * k),
        set(2 * k..3 * k),
        set(3 * k..4 * k),
    );
    for u in 0..2 * k {
        for v in u + 1..2 * k {
            b.add_edge(u, v)?;
        }
    }
    b.join(k1, i1)?.join(k2, i2)?;
    Ok(b.build())
}

/// `C_{4k+1}^k`: the `(4k+1)`-cycle with every pair at distance at most `k`
/// joined.
pub fn build_circulant_power(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(precondition("circulant power needs k >= 1"));
    }
    let n = 4 * k + 1;
    let mut b = GraphBuilder::new(n)?;
    for v in 0..n {
        for step in 1..=k {
            b.add_edge(v, (v + step) % n)?;
        }
    }
    Ok(b.build())
}

/// A realization of `((2k)^{4k+1})` with no antimorphism, `k >= 2`.
pub fn witness_regular(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(precondition("the regular witness needs k >= 2"));
    }
    build_circulant_power(k)
}

/// A realization of `(d^{2k}, (4k-1-d)^{2k})` with no antimorphism, for
/// `k >= 2`, `2k <= d <= 3k-1` and `(k, d) != (2, 5)`.
pub fn witness_two_degree(k: usize, d: usize) -> Result<Graph> {
    if k < 2 {
        return Err(precondition("the two-degree witness needs k >= 2"));
    }
    if !(2 * k <= d && d < 3 * k) {
        return Err(precondition(format!(
            "(d^2k, (4k-1-d)^2k) with k={k}, d={d} has no self-complementary realization"
        )));
    }
    if k == 2 {
        return if d == 4 {
            Ok(small_two_degree_witness().clone())
        } else {
            Err(precondition("(5^4, 2^4) is forcibly self-complementary"))
        };
    }
    let v = |i: usize| i - 1;
    if d == 3 * k - 1 {
        // Z_k with u_i = i - 1, v_i = 2k + i - 1.
        let mut g = build_zk(k)?;
        let u = |i: usize| i - 1;
        let w = |i: usize| 2 * k + i - 1;
        for i in 1..=k {
            g = two_switch(&g, u(k), w(i), w(k + i), u(k + i))?;
        }
        return Ok(g);
    }
    let g = build_gibbs_onecycle(k, d)?;
    if g.has_edge(v(1), v(2 * k + 1)) {
        two_switch(&g, v(1), v(2 * k + 1), v(2 * k - 1), v(2 * k))
    } else {
        two_switch(&g, v(1), v(d - k + 1), v(d - k + 3), v(d - k + 4))
    }
}

/// Output of [`witness_four_degree`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourDegreeWitness {
    pub graph: Graph,
    /// Whether the target sequence was confirmed potentially
    /// self-complementary by brute force (only done for small orders).
    pub potentially_sc_checked: bool,
}

/// A realization of `(d^{2k1}, (d-1)^{2k2}, (n-d)^{2k2}, (n-1-d)^{2k1})`
/// with no antimorphism, where `n = 4(k1 + k2)`.
pub fn witness_four_degree(k1: usize, k2: usize, d: usize, n: usize) -> Result<FourDegreeWitness> {
    let k = k1 + k2;
    if k1 == 0 || k2 == 0 || n != 4 * k || 2 * d <= n + 1 {
        return Err(precondition(format!(
            "invalid four-degree parameters k1={k1}, k2={k2}, d={d}, n={n}"
        )));
    }
    let target = DegreeSequence::new(vec![
        (d, 2 * k1),
        (d - 1, 2 * k2),
        (n - d, 2 * k2),
        (n - 1 - d, 2 * k1),
    ])?;
    let potentially_sc_checked = n <= BRUTE_FORCE_MAX_ORDER;
    if potentially_sc_checked && !is_potentially_sc_bruteforce(&target)? {
        return Err(precondition(format!(
            "({target}) is not potentially self-complementary"
        )));
    }
    let v = |i: usize| i - 1;
    let mut g = build_gibbs_onecycle(k, d)?;
    for i in 0..k2 {
        let (a, b, c, e) = (v(1 + 4 * i), v(3 + 4 * i), v(2 + 4 * i), v(4 + 4 * i));
        if !g.has_edge(a, b) || g.has_edge(c, e) {
            return Err(precondition(format!(
                "rotation {i} does not apply to the one-cycle graph"
            )));
        }
        g = g.modified(|bld| {
            bld.remove_edge(a, b)?.add_edge(c, e)?;
            Ok(())
        })?;
    }
    g = two_switch(&g, v(1), v(5), v(3), v(4))?;
    if DegreeSequence::of(&g) != target {
        return Err(precondition(format!(
            "construction did not realize ({target})"
        )));
    }
    Ok(FourDegreeWitness {
        graph: g,
        potentially_sc_checked,
    })
}

/// A named construction, written `prefix:arguments`.
///
/// `elementary:P4,B;apex`, `gibbs:k=2,d=5`, `zk:3`, `circ:2`, `regular:2`,
/// `witness2:k=3,d=8`, `witness4:k1=1,k2=1,d=5,n=8`, `fig:a`, `fig:b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Elementary(BlockSpec),
    Gibbs {
        k: usize,
        d: usize,
    },
    Zk(usize),
    Circulant(usize),
    Regular(usize),
    TwoDegree {
        k: usize,
        d: usize,
    },
    FourDegree {
        k1: usize,
        k2: usize,
        d: usize,
        n: usize,
    },
    FigA,
    FigB,
}

impl Construction {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Construction::Elementary(ref spec) => build_elementary(spec),
            Construction::Gibbs { k, d } => build_gibbs_onecycle(k, d),
            Construction::Zk(k) => build_zk(k),
            Construction::Circulant(k) => build_circulant_power(k),
            Construction::Regular(k) => witness_regular(k),
            Construction::TwoDegree { k, d } => witness_two_degree(k, d),
            Construction::FourDegree { k1, k2, d, n } => {
                witness_four_degree(k1, k2, d, n).map(|w| w.graph)
            }
            Construction::FigA => Ok(fig_a().clone()),
            Construction::FigB => Ok(fig_b().clone()),
        }
    }
}

/// Reads `k=3,d=8` (named) or `3` (a single positional value for `names[0]`).
fn parameters(args: &str, names: &[&str]) -> Result<Vec<usize>> {
    let bad = |msg: String| Error::Construction(msg);
    let mut values = vec![None; names.len()];
    for (i, item) in args.split(',').map(str::trim).enumerate() {
        let (name, value) = match item.split_once('=') {
            Some((name, value)) => (name.trim(), value.trim()),
            None if names.len() == 1 && i == 0 => (names[0], item),
            None => return Err(bad(format!("expected name=value, got {item:?}"))),
        };
        let slot = names
            .iter()
            .position(|&n| n == name)
            .ok_or_else(|| bad(format!("unknown parameter {name:?}")))?;
        if values[slot].is_some() {
            return Err(bad(format!("parameter {name} given twice")));
        }
        let v = value
            .parse()
            .map_err(|_| bad(format!("{name}={value:?} is not a non-negative integer")))?;
        values[slot] = Some(v);
    }
    values
        .into_iter()
        .zip(names)
        .map(|(v, name)| v.ok_or_else(|| bad(format!("missing parameter {name}"))))
        .collect()
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (prefix, args) = s
            .split_once(':')
            .ok_or_else(|| Error::Construction(format!("{s:?} has no prefix")))?;
        let args = args.trim();
        Ok(match prefix.trim().to_ascii_lowercase().as_str() {
            "elementary" => Construction::Elementary(args.parse()?),
            "gibbs" => {
                let p = parameters(args, &["k", "d"])?;
                Construction::Gibbs { k: p[0], d: p[1] }
            }
            "zk" => Construction::Zk(parameters(args, &["k"])?[0]),
            "circ" => Construction::Circulant(parameters(args, &["k"])?[0]),
            "regular" | "witness1" => Construction::Regular(parameters(args, &["k"])?[0]),
            "witness2" => {
                let p = parameters(args, &["k", "d"])?;
                Construction::TwoDegree { k: p[0], d: p[1] }
            }
            "witness4" => {
                let p = parameters(args, &["k1", "k2", "d", "n"])?;
                Construction::FourDegree {
                    k1: p[0],
                    k2: p[1],
                    d: p[2],
                    n: p[3],
                }
            }
            "fig" => match args.to_ascii_lowercase().as_str() {
                "a" => Construction::FigA,
                "b" => Construction::FigB,
                other => return Err(Error::Construction(format!("unknown figure {other:?}"))),
            },
            other => {
                return Err(Error::Construction(format!(
                    "unknown construction {other:?}"
                )))
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::find_antimorphism;
    use crate::permutation::Permutation;
    use crate::recognition::is_pseudo_split;

    fn ds(g: &Graph) -> String {
        DegreeSequence::of(g).to_string()
    }

    #[test]
    fn prototypes() {
        assert_eq!(ds(fig_a()), "5^4,2^4");
        assert_eq!(ds(fig_b()), "5^4,2^4");
        assert!(is_isomorphic(fig_a(), fig_b()).is_none());
        assert!(is_isomorphic(fig_b(), &build_zk(2).unwrap()).is_some());
        assert_eq!(ds(small_two_degree_witness()), "4^4,3^4");
        // The switch (c2 i3, c3 i2) -> (c2 i2, c3 i3) turns one into the other.
        assert_eq!(&two_switch(fig_a(), 1, 6, 5, 2).unwrap(), fig_b());
    }

    #[test]
    fn block_spec_text() {
        let s: BlockSpec = "P4,A,B;apex".parse().unwrap();
        assert_eq!(s.blocks, vec![Block::P4, Block::FigA, Block::FigB]);
        assert_eq!(s.tail, Tail::Apex);
        assert_eq!(s.to_string(), "P4,A,B;apex");
        assert_eq!(";c5".parse::<BlockSpec>().unwrap().to_string(), ";c5");
        assert_eq!(
            "P4,P4;none".parse::<BlockSpec>().unwrap().to_string(),
            "P4,P4"
        );
        assert!("".parse::<BlockSpec>().is_err());
        assert!("P5".parse::<BlockSpec>().is_err());
        assert!("P4;loop".parse::<BlockSpec>().is_err());
    }

    #[test]
    fn elementary_examples() {
        let g = build_elementary(&"P4,P4".parse().unwrap()).unwrap();
        assert_eq!(ds(&g), "6^2,4^2,3^2,1^2");
        let p4 = build_elementary(&"P4".parse().unwrap()).unwrap();
        assert!(is_isomorphic(&p4, &Graph::path(4).unwrap()).is_some());
        let g = build_elementary(&"P4;apex".parse().unwrap()).unwrap();
        assert_eq!(ds(&g), "3^2,2^1,1^2");
        assert!(is_self_complementary(&g));
    }

    #[test]
    fn elementary_graphs_are_sc_and_decompose() {
        let tails = [Tail::None, Tail::Apex, Tail::C5];
        let mut specs = vec![];
        for tail in tails {
            specs.push(vec![]);
            for a in Block::ALL {
                specs.push(vec![a]);
                for b in Block::ALL {
                    specs.push(vec![a, b]);
                }
            }
            for blocks in specs.drain(..) {
                let Ok(spec) = BlockSpec::new(blocks, tail) else {
                    continue;
                };
                let g = build_elementary(&spec).unwrap();
                assert!(find_antimorphism(&g).is_some(), "{spec}");
                assert!(is_pseudo_split(&g), "{spec}");
                assert_eq!(decompose_elementary(&g), Some(spec.clone()), "{spec}");
            }
        }
    }

    #[test]
    fn decompose_rejects_non_members() {
        assert_eq!(
            decompose_elementary(&build_circulant_power(2).unwrap()),
            None
        );
        assert_eq!(decompose_elementary(small_two_degree_witness()), None);
        assert_eq!(
            decompose_elementary(&Graph::cycle(5).unwrap())
                .unwrap()
                .to_string(),
            ";c5"
        );
        assert_eq!(
            decompose_elementary(&Graph::empty(1).unwrap())
                .unwrap()
                .to_string(),
            ";apex"
        );
        assert_eq!(decompose_elementary(&Graph::empty(0).unwrap()), None);
    }

    #[test]
    fn gibbs_examples() {
        let p4 = build_gibbs_onecycle(1, 2).unwrap();
        assert!(is_isomorphic(&p4, &Graph::path(4).unwrap()).is_some());
        let g = build_gibbs_onecycle(2, 5).unwrap();
        assert_eq!(ds(&g), "5^4,2^4");
        assert!(build_gibbs_onecycle(1, 3).is_err());
        assert!(build_gibbs_onecycle(2, 3).is_err());
        for k in 1..=5 {
            let sigma =
                Permutation::from_image((1..=4 * k).map(|i| i % (4 * k)).collect()).unwrap();
            for d in 2 * k..3 * k {
                let g = build_gibbs_onecycle(k, d).unwrap();
                assert!(sigma.is_antimorphism(&g), "k={k} d={d}");
                assert_eq!(
                    DegreeSequence::of(&g).pairs(),
                    &[(d, 2 * k), (4 * k - 1 - d, 2 * k)]
                );
            }
        }
    }

    #[test]
    fn zk_and_circulants() {
        assert!(is_isomorphic(&build_zk(1).unwrap(), &Graph::path(4).unwrap()).is_some());
        assert_eq!(ds(&build_zk(3).unwrap()), "8^6,3^6");
        assert!(is_self_complementary(&build_zk(3).unwrap()));
        assert!(is_isomorphic(
            &build_circulant_power(1).unwrap(),
            &Graph::cycle(5).unwrap()
        )
        .is_some());
        assert_eq!(ds(&build_circulant_power(2).unwrap()), "4^9");
        assert!(!is_self_complementary(&build_circulant_power(2).unwrap()));
        assert!(!is_self_complementary(&build_circulant_power(3).unwrap()));
    }

    #[test]
    fn two_degree_witnesses() {
        assert_eq!(
            &witness_two_degree(2, 4).unwrap(),
            small_two_degree_witness()
        );
        assert!(witness_two_degree(2, 5).is_err());
        assert!(witness_two_degree(3, 9).is_err());
        for k in 3..=4 {
            for d in 2 * k..3 * k {
                let g = witness_two_degree(k, d).unwrap();
                assert_eq!(
                    DegreeSequence::of(&g).pairs(),
                    &[(d, 2 * k), (4 * k - 1 - d, 2 * k)]
                );
                assert!(!is_self_complementary(&g), "k={k} d={d}");
            }
        }
    }

    #[test]
    fn four_degree_witness_smallest() {
        let w = witness_four_degree(1, 1, 5, 8).unwrap();
        assert!(w.potentially_sc_checked);
        assert_eq!(ds(&w.graph), "5^2,4^2,3^2,2^2");
        assert!(!is_self_complementary(&w.graph));
        assert!(witness_four_degree(1, 1, 5, 9).is_err());
    }

    #[test]
    fn construction_strings() {
        let c: Construction = "gibbs:k=2,d=5".parse().unwrap();
        assert_eq!(c, Construction::Gibbs { k: 2, d: 5 });
        assert_eq!(c.build().unwrap(), build_gibbs_onecycle(2, 5).unwrap());
        assert_eq!("zk:3".parse::<Construction>().unwrap(), Construction::Zk(3));
        assert_eq!(
            "circ:k=2".parse::<Construction>().unwrap(),
            Construction::Circulant(2)
        );
        assert_eq!(
            "witness4:n=8,d=5,k1=1,k2=1"
                .parse::<Construction>()
                .unwrap(),
            Construction::FourDegree {
                k1: 1,
                k2: 1,
                d: 5,
                n: 8
            }
        );
        let e: Construction = "elementary:P4,P4;apex".parse().unwrap();
        assert_eq!(e.build().unwrap().order(), 9);
        assert_eq!(
            &"fig:b".parse::<Construction>().unwrap().build().unwrap(),
            fig_b()
        );
        for bad in [
            "zk",
            "zk:",
            "zk:x",
            "gibbs:k=2",
            "gibbs:k=2,d=5,d=6",
            "gibbs:2,5",
            "tree:3",
            "fig:c",
        ] {
            assert!(bad.parse::<Construction>().is_err(), "{bad}");
        }
        assert!("gibbs:k=2,d=3"
            .parse::<Construction>()
            .unwrap()
            .build()
            .is_err());
    }
}
