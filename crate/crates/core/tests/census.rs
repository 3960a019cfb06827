use std::sync::OnceLock;

use scsplit::constructors::build_zk;
use scsplit::enumeration::{lambda_pseudo_split, lambda_split};
use scsplit::iso::{antimorphisms, find_antimorphism, is_isomorphic, is_self_complementary};
use scsplit::oracle::{generate_sc, Census, Filter};
use scsplit::partitions::{
    diamond_from_antimorphism, find_partition_bruteforce, is_valid_partition, partition_symmetry,
    rectangle_partition, rotates_parts, PartitionKind,
};
use scsplit::recognition::{
    apex_extend, c5_extend, induces_c5, is_split, odd_reduce, split_core, split_partition,
    unique_sc_split_partition,
};
use scsplit::{Count, Graph, VertexSet};

fn census(n: usize, filter: Filter) -> &'static Census {
    static CELLS: OnceLock<Vec<((usize, Filter), Census)>> = OnceLock::new();
    let all = CELLS.get_or_init(|| {
        let mut v = Vec::new();
        for n in [4, 5, 8, 9, 12, 13] {
            v.push((
                (n, Filter::ScSplit),
                generate_sc(n, Filter::ScSplit).unwrap(),
            ));
        }
        for n in [5, 9] {
            v.push((
                (n, Filter::ScPseudoSplit),
                generate_sc(n, Filter::ScPseudoSplit).unwrap(),
            ));
        }
        for n in [4, 5, 8, 9] {
            v.push(((n, Filter::AllSc), generate_sc(n, Filter::AllSc).unwrap()));
        }
        v
    });
    &all.iter().find(|(key, _)| *key == (n, filter)).unwrap().1
}

#[test]
fn counts_match_formulas() {
    for n in [4, 5, 8, 9, 12, 13] {
        assert_eq!(
            Count::from(census(n, Filter::ScSplit).len()),
            lambda_split(n),
            "n={n}"
        );
    }
    for n in [5, 9] {
        assert_eq!(
            Count::from(census(n, Filter::ScPseudoSplit).len()),
            lambda_pseudo_split(n),
            "n={n}"
        );
    }
    assert_eq!(census(4, Filter::AllSc).len(), 1);
    assert_eq!(census(8, Filter::AllSc).len(), 10);
    assert_eq!(census(9, Filter::AllSc).len(), 36);
}

#[test]
fn the_order_four_graph_is_p4() {
    let g = &census(4, Filter::AllSc).graphs[0];
    assert!(is_isomorphic(g, &Graph::path(4).unwrap()).is_some());
}

#[test]
fn split_members_have_the_degree_partition() {
    for n in [4, 8, 12] {
        for g in &census(n, Filter::ScSplit).graphs {
            let p = unique_sc_split_partition(g).unwrap();
            let k: VertexSet = (0..n).filter(|&v| g.degree(v) >= n / 2).collect();
            assert_eq!(p.clique, k);
            // It is the only split partition.
            let all = g.vertices();
            let count = (0u64..1 << n)
                .map(VertexSet::from_bits)
                .filter(|&s| g.is_clique(s) && g.is_independent(all.difference(s)))
                .count();
            assert_eq!(count, 1, "{g:?}");
        }
    }
}

#[test]
fn odd_split_members_reduce() {
    for k in 0..=3 {
        let n = 4 * k + 1;
        let odd = if n == 1 {
            vec![Graph::empty(1).unwrap()]
        } else {
            census(n, Filter::ScSplit).graphs.clone()
        };
        let even = if k == 0 {
            vec![Graph::empty(0).unwrap()]
        } else {
            census(4 * k, Filter::ScSplit).graphs.clone()
        };
        assert_eq!(odd.len(), even.len());
        for g in &odd {
            assert_eq!((0..n).filter(|&v| g.degree(v) == 2 * k).count(), 1);
            let (_, rest) = odd_reduce(g).unwrap();
            assert!(is_self_complementary(&rest));
            assert!(is_isomorphic(&apex_extend(&rest).unwrap(), g).is_some());
        }
        // apex_extend is a bijection between the two censuses.
        if k > 0 {
            let images: Vec<Graph> = even.iter().map(|g| apex_extend(g).unwrap()).collect();
            for g in &odd {
                assert_eq!(
                    images
                        .iter()
                        .filter(|h| is_isomorphic(g, h).is_some())
                        .count(),
                    1
                );
            }
        }
    }
}

#[test]
fn pseudo_split_non_split_members_come_from_c5_extend() {
    for (n, base) in [
        (5usize, vec![Graph::empty(0).unwrap()]),
        (9, census(4, Filter::ScSplit).graphs.clone()),
    ] {
        let non_split: Vec<&Graph> = census(n, Filter::ScPseudoSplit)
            .graphs
            .iter()
            .filter(|g| !is_split(g))
            .collect();
        assert_eq!(non_split.len(), base.len());
        for g in non_split {
            let from_base = base.iter().any(|b| {
                let ext = if b.order() == 0 {
                    Graph::cycle(5).unwrap()
                } else {
                    c5_extend(b).unwrap()
                };
                is_isomorphic(&ext, g).is_some()
            });
            assert!(from_base);
        }
    }
}

#[test]
fn c5_extension_has_a_unique_five_cycle() {
    for n in [4, 8] {
        for g in &census(n, Filter::ScSplit).graphs {
            let h = c5_extend(g).unwrap();
            assert!(split_partition(&h).is_none());
            assert!(is_self_complementary(&h));
            let c: VertexSet = (n..n + 5).collect();
            let cycles: Vec<VertexSet> = (0u64..1 << h.order())
                .filter(|b| b.count_ones() == 5)
                .map(VertexSet::from_bits)
                .filter(|&s| induces_c5(&h, s))
                .collect();
            assert_eq!(cycles, vec![c]);
        }
    }
}

#[test]
fn split_core_keeps_every_order_eight_sc_graph_sc() {
    for g in &census(8, Filter::AllSc).graphs {
        let h = split_core(g).unwrap();
        assert!(is_split(&h));
        assert!(is_self_complementary(&h), "{g:?}");
    }
    for g in &census(8, Filter::ScSplit).graphs {
        assert_eq!(&split_core(g).unwrap(), g);
    }
}

#[test]
fn antimorphism_cycle_lengths() {
    for n in [4, 5, 8, 9] {
        for g in &census(n, Filter::AllSc).graphs {
            for sigma in antimorphisms(g) {
                let t = sigma.cycle_type();
                assert!(t.iter().all(|&l| l == 1 || l % 4 == 0));
                assert!(t.iter().filter(|&&l| l == 1).count() <= 1);
            }
        }
    }
}

#[test]
fn diamonds_and_rectangles_on_split_members() {
    for (k, n) in [(1, 4), (2, 8), (3, 12)] {
        let members = &census(n, Filter::ScSplit).graphs;
        let mut rectangles = 0;
        for g in members {
            let sigma = find_antimorphism(g).unwrap();
            let p = diamond_from_antimorphism(g, &sigma).unwrap();
            assert!(is_valid_partition(g, &p));
            assert!(rotates_parts(&sigma, &p));
            assert!(partition_symmetry(g, &p).strict_rotation);
            let formula = rectangle_partition(g);
            let brute = find_partition_bruteforce(g, PartitionKind::Rectangle);
            assert_eq!(formula.is_some(), brute.is_some());
            if let Some(r) = formula {
                assert!(is_valid_partition(g, &r));
                assert!(is_isomorphic(g, &build_zk(k).unwrap()).is_some());
                rectangles += 1;
            }
        }
        assert_eq!(rectangles, 1, "order {n}");
    }
}
