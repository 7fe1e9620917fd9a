use std::collections::BTreeSet;

use degenum::constructions::{
    build_bipartite_2n, build_choice_graph, build_near_regular, build_regular, choice_prefix,
    BipartiteSpec, NearRegularSpec, RegularSpec,
};

#[test]
fn regular_graphs_are_regular() {
    for n in 1..=64 {
        for r in 0..n {
            let Ok(spec) = RegularSpec::new(n, r) else {
                assert!(n % 2 == 1 && r % 2 == 1);
                continue;
            };
            let g = build_regular(spec);
            assert!(g.degree_sequence().iter().all(|&d| d == r), "G_{n}({r})");
            assert_eq!(g.edge_count(), n * r / 2);
        }
    }
}

#[test]
fn near_regular_degrees() {
    for n in (3..=33).step_by(2) {
        for r in (1..n - 1).step_by(2) {
            for s in (0..n).step_by(2) {
                let g = build_near_regular(NearRegularSpec::new(n, r, s).unwrap());
                let deg = g.degree_sequence();
                assert!(deg[..n - 1].iter().all(|&d| d == r), "G_{n}({r},{s})");
                assert_eq!(deg[n - 1], s);
            }
        }
    }
}

#[test]
fn bipartite_windows_have_the_requested_shape() {
    for n in 1..=20usize {
        for i in 0..=n {
            for j in i..=n {
                for k in (i + j).saturating_sub(n)..=i {
                    let spec = BipartiteSpec::new(n, i, j, k).unwrap();
                    let g = build_bipartite_2n(spec);
                    let (left, right) = g.degree_sequence();
                    assert_eq!(left, vec![i, j]);
                    assert_eq!(right.iter().filter(|&&d| d == 2).count(), k);
                    assert_eq!(right.iter().filter(|&&d| d == 1).count(), i + j - 2 * k);
                }
            }
        }
    }
}

fn increasing(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << (2 * k) {
        if mask.count_ones() as usize == k {
            out.push((1..=2 * k).filter(|&x| mask >> (x - 1) & 1 == 1).collect());
        }
    }
    out
}

#[test]
fn exponential_family_prefixes() {
    for k in 1..=5 {
        let mut seen = BTreeSet::new();
        for s in increasing(k) {
            let g = build_choice_graph(&s).unwrap();
            let e = g.degree_enumerator();
            assert_eq!(e.as_slice()[..k], choice_prefix(&s)[..], "s={s:?}");
            seen.insert(e);
        }
        let binom = (1..=k).fold(1usize, |acc, t| acc * (k + t) / t);
        assert_eq!(seen.len(), binom);
    }
}
