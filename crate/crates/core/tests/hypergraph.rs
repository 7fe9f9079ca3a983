mod common;

use hypermix_core::hypergraph::{
    generate_random_regular, is_linear, is_r_good, remove_first_vertices, validate_text,
};
use hypermix_core::{parse_hypergraph, serialize_hypergraph, Error, Hypergraph};
use proptest::prelude::*;

fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (2usize..12, 2usize..5)
        .prop_flat_map(|(n, k)| {
            let k = k.min(n);
            (
                Just(n),
                Just(k),
                prop::collection::btree_set(
                    prop::sample::subsequence((0..n).collect::<Vec<_>>(), k),
                    0..10,
                ),
            )
        })
        .prop_map(|(n, k, edges)| Hypergraph::new(n, k, edges.into_iter().collect()).unwrap())
}

proptest! {
    #[test]
    fn serialization_round_trips(g in arb_hypergraph()) {
        let text = serialize_hypergraph(&g);
        prop_assert_eq!(parse_hypergraph(&text).unwrap(), g.clone());
        prop_assert!(validate_text(&text).unwrap().is_clean());
    }

    #[test]
    fn generated_graphs_round_trip(seed in any::<u64>(), d in 1usize..4) {
        let g = generate_random_regular(24, d, 3, seed).unwrap();
        prop_assert_eq!(parse_hypergraph(&serialize_hypergraph(&g)).unwrap(), g);
    }
}

#[test]
fn generator_is_exactly_regular() {
    let mut checked = 0;
    for seed in 0..1000u64 {
        let k = 2 + (seed % 4) as usize;
        let d = 1 + (seed / 4 % 3) as usize;
        let mut n = 6 + (seed % 55) as usize;
        while !(n * d).is_multiple_of(k) {
            n += 1;
        }
        if n > 60 {
            continue;
        }
        let g = generate_random_regular(n, d, k, seed).unwrap();
        let report = validate_text(&serialize_hypergraph(&g)).unwrap();
        assert!(report.is_clean(), "seed {seed}");
        assert_eq!(report.observed_degrees.len(), 1, "seed {seed}");
        assert_eq!(report.observed_degrees.get(&d), Some(&n));
        assert_eq!(g.edge_count(), n * d / k);
        checked += 1;
    }
    assert!(checked > 900);
}

#[test]
fn generator_is_deterministic_and_rejects_bad_parameters() {
    assert_eq!(
        generate_random_regular(30, 2, 3, 5).unwrap(),
        generate_random_regular(30, 2, 3, 5).unwrap()
    );
    assert!(matches!(
        generate_random_regular(10, 1, 3, 0),
        Err(Error::InvalidArgument(_))
    ));
    assert!(matches!(
        generate_random_regular(3, 2, 4, 0),
        Err(Error::InvalidArgument(_))
    ));
}

fn all_k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..1u32 << n)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|v| s >> v & 1 == 1).collect())
        .collect()
}

#[test]
fn vertex_removal_exhaustive() {
    let mut graphs = 0;
    for n in 2..=6 {
        for k in 2..=3.min(n) {
            let subsets = all_k_subsets(n, k);
            let count = subsets.len().min(12);
            // every edge set over the first `count` k-subsets
            for mask in 0..1u32 << count {
                let edges: Vec<Vec<usize>> = (0..count)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| subsets[b].clone())
                    .collect();
                let g = Hypergraph::new(n, k, edges.clone()).unwrap();
                for i in 0..=n {
                    let h = remove_first_vertices(&g, i);
                    assert_eq!(h.n(), n - i);
                    let expected: Vec<Vec<usize>> = edges
                        .iter()
                        .filter(|e| e.iter().all(|&v| v >= i))
                        .map(|e| e.iter().map(|v| v - i).collect())
                        .collect();
                    let mut got = h.edges().to_vec();
                    got.sort();
                    let mut want = expected;
                    want.sort();
                    assert_eq!(got, want);
                }
                graphs += 1;
            }
        }
    }
    assert!(graphs > 10_000);
}

#[test]
fn r_good_fraction_rises_with_n() {
    let (d, k, r) = (2, 3, 2);
    let fractions: Vec<f64> = [30usize, 60, 120]
        .iter()
        .map(|&n| {
            let good = (0..200u64)
                .filter(|&s| is_r_good(&generate_random_regular(n, d, k, s).unwrap(), r).good)
                .count();
            good as f64 / 200.0
        })
        .collect();
    // allow sampling noise of about two standard errors between neighbours
    for w in fractions.windows(2) {
        assert!(w[1] >= w[0] - 0.07, "{fractions:?}");
    }
    assert!(fractions[2] > fractions[0], "{fractions:?}");
}

#[test]
fn linearity_of_known_shapes() {
    assert!(is_linear(&common::cycle_graph(5)));
    let g = Hypergraph::new(4, 3, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
    assert!(!is_linear(&g));
}

#[test]
fn parse_errors_carry_line_numbers() {
    match parse_hypergraph("3 1 2\n1 4\n") {
        Err(Error::VertexOutOfRange { line, vertex, .. }) => assert_eq!((line, vertex), (2, 4)),
        other => panic!("{other:?}"),
    }
    match parse_hypergraph("3 2 2\n1 2\n2 1\n") {
        Err(Error::DuplicateEdge { line, first_line }) => assert_eq!((line, first_line), (3, 2)),
        other => panic!("{other:?}"),
    }
}
