use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A bijection on `{0, .., n-1}`.
///
/// Used both for isomorphisms between graphs and for antimorphisms, i.e.
/// isomorphisms from a graph onto its complement.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Permutation(format!(
                    "{image:?} is not a bijection on 0..{n}"
                )));
            }
        }
        Ok(Permutation { image })
    }

    /// Builds the product of the given disjoint cycles on `n` points; points
    /// not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (i, &v) in cycle.iter().enumerate() {
                if v >= n || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Permutation(format!(
                        "cycles {cycles:?} are not disjoint on 0..{n}"
                    )));
                }
                image[v] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    #[must_use]
    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (v, &w) in self.image.iter().enumerate() {
            inv[w] = v;
        }
        Permutation { image: inv }
    }

    /// `self` after `other`: `v -> self(other(v))`.
    #[must_use]
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    /// `self` applied `k` times.
    pub fn power_apply(&self, v: usize, k: usize) -> usize {
        (0..k).fold(v, |x, _| self.image[x])
    }

    /// Disjoint cycle decomposition, each cycle starting at its smallest
    /// point, cycles ordered by that point. Fixed points are included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut v = self.image[start];
            while v != start {
                seen[v] = true;
                cycle.push(v);
                v = self.image[v];
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    /// `u ~ v` in `g` iff `self(u) ~ self(v)` in `h`.
    pub fn is_isomorphism(&self, g: &Graph, h: &Graph) -> bool {
        g.order() == self.len()
            && h.order() == self.len()
            && g.edge_count() == h.edge_count()
            && g.edges()
                .all(|(u, v)| h.has_edge(self.apply(u), self.apply(v)))
    }

    /// `u ~ v` in `g` iff `self(u) ≁ self(v)` in `g`.
    pub fn is_antimorphism(&self, g: &Graph) -> bool {
        self.is_isomorphism(g, &g.complement())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Cycle notation with fixed points shown, e.g. `(0 1 3 2)(4)`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "()");
        }
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
