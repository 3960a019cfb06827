//! Exact counts of self-complementary split and pseudo-split graphs from the
//! cycle structure of their antimorphisms.
//!
//! The arithmetic is generic over an integer type so that fixed-width
//! integers can cross-check the big-integer results at small orders; the
//! `*_in` functions take the type, the plain ones return [`Count`].

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::FromPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::Count;

/// Integer types the counting formulas can be evaluated in.
pub trait Scalar: Integer + Clone + FromPrimitive + Send + Sync {}
impl<T: Integer + Clone + FromPrimitive + Send + Sync> Scalar for T {}

/// Multiplicities `c_q` of antimorphism cycles of length `4q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CycleStructure {
    counts: BTreeMap<usize, usize>,
}

impl CycleStructure {
    /// Drops zero multiplicities.
    pub fn from_counts(counts: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let counts = counts
            .into_iter()
            .filter(|&(q, c)| q > 0 && c > 0)
            .collect();
        CycleStructure { counts }
    }

    /// `c_q`.
    pub fn count(&self, q: usize) -> usize {
        self.counts.get(&q).copied().unwrap_or(0)
    }

    /// Nonzero `(q, c_q)` pairs in increasing `q`.
    pub fn counts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&q, &c)| (q, c))
    }

    /// `k` with `sum c_q 4q = 4k`.
    pub fn k(&self) -> usize {
        self.counts().map(|(q, c)| q * c).sum()
    }

    /// The cycle lengths, nondecreasing.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.counts()
            .flat_map(|(q, c)| std::iter::repeat_n(4 * q, c))
            .collect()
    }
}

impl fmt::Display for CycleStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts().map(|(q, c)| format!("c{q}={c}")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Lazily enumerates the partitions of `k`, largest part first, as cycle
/// structures.
pub struct CycleStructures {
    next: Option<Vec<usize>>,
}

impl Iterator for CycleStructures {
    type Item = CycleStructure;

    fn next(&mut self) -> Option<CycleStructure> {
        let parts = self.next.take()?;
        let mut counts = BTreeMap::new();
        for &q in &parts {
            *counts.entry(q).or_insert(0) += 1;
        }
        // Next partition in reverse lexicographic order.
        let mut p = parts;
        let ones = p.iter().rev().take_while(|&&x| x == 1).count();
        p.truncate(p.len() - ones);
        if let Some(last) = p.pop() {
            let part = last - 1;
            let mut rest = ones + 1;
            p.push(part);
            while rest > 0 {
                let take = rest.min(part);
                p.push(take);
                rest -= take;
            }
            self.next = Some(p);
        }
        Some(CycleStructure { counts })
    }
}

/// Every cycle structure on `4k` vertices (one per partition of `k`).
pub fn cycle_structures(k: usize) -> CycleStructures {
    CycleStructures {
        next: (k > 0).then(|| vec![k]),
    }
}

/// `P = sum_q (q c_q^2 + c_q) + 2 sum_{r<s} c_r c_s gcd(r, s)`: the number of
/// free adjacency choices for a split graph with an antimorphism of this
/// structure.
pub fn exponent_p(c: &CycleStructure) -> u64 {
    let pairs: Vec<(u64, u64)> = c.counts().map(|(q, n)| (q as u64, n as u64)).collect();
    let mut p: u64 = pairs.iter().map(|&(q, n)| q * n * n + n).sum();
    for (i, &(r, cr)) in pairs.iter().enumerate() {
        for &(s, cs) in &pairs[i + 1..] {
            p += 2 * cr * cs * r.gcd(&s);
        }
    }
    p
}

fn from_usize<T: Scalar>(x: u64) -> T {
    T::from_u64(x).expect("value fits the scalar type")
}

fn pow2<T: Scalar>(e: u64) -> T {
    num_traits::pow(from_usize::<T>(2), e as usize)
}

fn factorial<T: Scalar>(n: u64) -> T {
    (1..=n).fold(T::one(), |acc, i| acc * from_usize(i))
}

/// `prod_q (4q)^{c_q} c_q!`, the centralizer order of a permutation with
/// this cycle structure.
fn centralizer<T: Scalar>(c: &CycleStructure) -> T {
    c.counts().fold(T::one(), |acc, (q, n)| {
        acc * num_traits::pow(from_usize::<T>(4 * q as u64), n) * factorial(n as u64)
    })
}

/// `lambda_{4k} = sum_c 2^P / prod_q (4q)^{c_q} c_q!`, summed exactly.
fn lambda_4k<T: Scalar>(k: usize) -> T {
    if k == 0 {
        return T::one();
    }
    let terms: Vec<CycleStructure> = cycle_structures(k).collect();
    let total = terms
        .par_iter()
        .map(|c| Ratio::new(pow2::<T>(exponent_p(c)), centralizer(c)))
        .reduce(|| Ratio::from_integer(T::zero()), |a, b| a + b);
    assert!(
        total.is_integer(),
        "the cycle-structure sum must be an integer"
    );
    total.to_integer()
}

/// Number of non-isomorphic self-complementary split graphs on `n` vertices.
pub fn lambda_split_in<T: Scalar>(n: usize) -> T {
    match n % 4 {
        0 | 1 => lambda_4k(n / 4),
        _ => T::zero(),
    }
}

/// Number of non-isomorphic self-complementary pseudo-split graphs on `n`
/// vertices: `lambda_n` for `n = 0 mod 4`, `lambda_{n-1} + lambda_{n-5}` for
/// `n = 1 mod 4`.
pub fn lambda_pseudo_split_in<T: Scalar>(n: usize) -> T {
    match n % 4 {
        0 => lambda_split_in(n),
        1 if n >= 5 => lambda_split_in::<T>(n - 1) + lambda_split_in(n - 5),
        1 => lambda_split_in(n - 1),
        _ => T::zero(),
    }
}

/// Number of pairs (labeled self-complementary split graph on `4k`
/// vertices, antimorphism of it), i.e. `sum_c (4k)!/prod_q (4q)^{c_q} c_q! * 2^P`.
pub fn labeled_count_in<T: Scalar>(k: usize) -> T {
    let n_fact: T = factorial(4 * k as u64);
    let terms: Vec<CycleStructure> = cycle_structures(k).collect();
    terms
        .par_iter()
        .map(|c| n_fact.clone() / centralizer::<T>(c) * pow2::<T>(exponent_p(c)))
        .reduce(T::zero, |a, b| a + b)
}

pub fn lambda_split(n: usize) -> Count {
    lambda_split_in(n)
}

pub fn lambda_pseudo_split(n: usize) -> Count {
    lambda_pseudo_split_in(n)
}

pub fn labeled_count(k: usize) -> Count {
    labeled_count_in(k)
}

/// One row of the counting table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: usize,
    #[serde(serialize_with = "as_string")]
    pub split: Count,
    #[serde(serialize_with = "as_string")]
    pub pseudo_split: Count,
}

fn as_string<S: serde::Serializer>(c: &Count, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(c)
}

pub fn count_table(orders: &[usize]) -> Vec<CountRow> {
    orders
        .iter()
        .map(|&n| CountRow {
            n,
            split: lambda_split(n),
            pseudo_split: lambda_pseudo_split(n),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(pairs: &[(usize, usize)]) -> CycleStructure {
        CycleStructure::from_counts(pairs.iter().copied())
    }

    #[test]
    fn partitions() {
        assert_eq!(cycle_structures(1).collect::<Vec<_>>(), vec![s(&[(1, 1)])]);
        assert_eq!(
            cycle_structures(2).collect::<Vec<_>>(),
            vec![s(&[(2, 1)]), s(&[(1, 2)])]
        );
        let p: Vec<usize> = (1..=12).map(|k| cycle_structures(k).count()).collect();
        assert_eq!(p, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        assert!(cycle_structures(8).all(|c| c.k() == 8));
        assert_eq!(cycle_structures(0).count(), 0);
    }

    #[test]
    fn exponents() {
        assert_eq!(exponent_p(&s(&[(1, 1)])), 2);
        assert_eq!(exponent_p(&s(&[(2, 1)])), 3);
        assert_eq!(exponent_p(&s(&[(1, 2)])), 6);
        assert_eq!(exponent_p(&s(&[(1, 1), (2, 1)])), 7);
    }

    #[test]
    fn table_values() {
        let split: Vec<u64> = [4, 5, 8, 9, 12, 13, 16, 17, 20, 21]
            .iter()
            .map(|&n| lambda_split_in(n))
            .collect();
        assert_eq!(split, vec![1, 1, 3, 3, 16, 16, 218, 218, 9608, 9608]);
        let pseudo: Vec<u64> = [4, 5, 8, 9, 12, 13, 16, 17, 20, 21]
            .iter()
            .map(|&n| lambda_pseudo_split_in(n))
            .collect();
        assert_eq!(pseudo, vec![1, 2, 3, 4, 16, 19, 218, 234, 9608, 9826]);
        assert_eq!(lambda_split_in::<u64>(6), 0);
        assert_eq!(lambda_split_in::<u64>(0), 1);
        assert_eq!(lambda_pseudo_split_in::<u64>(7), 0);
        assert_eq!(lambda_pseudo_split_in::<u64>(1), 1);
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(labeled_count_in::<u64>(1), 24);
        assert_eq!(labeled_count_in::<u64>(2), 120_960);
        assert_eq!(labeled_count_in::<u64>(3), 16 * 479_001_600);
        for k in 1..=8 {
            let fact: Count = (1..=4 * k as u64).map(Count::from).product();
            assert_eq!(labeled_count(k), lambda_split(4 * k) * fact, "k={k}");
        }
    }

    #[test]
    fn fixed_width_agrees_with_big_integers() {
        for n in 0..=32 {
            assert_eq!(
                Count::from(lambda_split_in::<u128>(n)),
                lambda_split(n),
                "n={n}"
            );
            assert_eq!(
                Count::from(lambda_pseudo_split_in::<u128>(n)),
                lambda_pseudo_split(n),
                "n={n}"
            );
        }
    }

    #[test]
    fn large_orders_stay_exact() {
        // Orders past the graph cap are fine: nothing here builds a graph.
        let big = lambda_split(100);
        assert!(big > Count::from(u128::MAX));
        assert_eq!(lambda_split(101), big);
    }
}
