use linspec::chromatic::{chromatic_number, complete_multipartite, complete_multipartite_plus, is_color_critical, turan_graph, PartSizes};
use linspec::expansion::expand;
use linspec::harness::{linear_edge_cap, random_linear_hypergraph};
use linspec::hypercore::{read_hypergraph, write_hypergraph};
use linspec::spectral::{rayleigh, r_norm, spectral_radius};
use linspec::{Graph, Hypergraph, SpectralOptions};
use proptest::prelude::*;

fn small_graph() -> impl Strategy<Value = Graph> {
    (2usize..=8).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        proptest::sample::subsequence(pairs.clone(), 1..=pairs.len()).prop_map(move |es| Graph::new(n, es).unwrap())
    })
}

fn linear_sample() -> impl Strategy<Value = Hypergraph> {
    (3usize..=4, 6usize..=15, any::<u64>()).prop_map(|(r, n, seed)| {
        let target = linear_edge_cap(n, r);
        random_linear_hypergraph(n, r, target, seed).unwrap().hypergraph
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expansion_counts_and_linearity(f in small_graph(), r in 3usize..=5) {
        let exp = expand(&f, r).unwrap();
        let h = exp.hypergraph();
        prop_assert_eq!(h.n(), f.n() + (r - 2) * f.edge_count());
        prop_assert_eq!(h.edge_count(), f.edge_count());
        prop_assert!(h.is_linear());
    }

    #[test]
    fn degree_sum_and_edge_cap(h in linear_sample()) {
        let p = h.degree_profile();
        prop_assert_eq!(p.degrees.iter().sum::<u64>(), (h.r() * h.edge_count()) as u64);
        prop_assert!(h.edge_count() <= linear_edge_cap(h.n(), h.r()));
        prop_assert!(h.is_linear());
    }

    #[test]
    fn linearity_ignores_edge_order(h in linear_sample(), rot in 0usize..50) {
        let mut edges = h.to_edge_lists();
        if !edges.is_empty() {
            let k = rot % edges.len();
            edges.rotate_left(k);
        }
        edges.reverse();
        let again = Hypergraph::new(h.n(), h.r(), edges).unwrap();
        prop_assert_eq!(again.is_linear(), h.is_linear());
        prop_assert_eq!(&again, &h);
    }

    #[test]
    fn text_round_trip(h in linear_sample()) {
        let text = write_hypergraph(&h);
        prop_assert_eq!(write_hypergraph(&read_hypergraph(&text).unwrap()), text);
    }

    #[test]
    fn rayleigh_never_exceeds_radius(h in linear_sample(), weights in proptest::collection::vec(0.0f64..1.0, 15)) {
        prop_assume!(h.is_connected());
        let rho = spectral_radius(&h, &SpectralOptions::default()).unwrap().rho;
        let mut x: Vec<f64> = weights[..h.n()].to_vec();
        let norm = r_norm(&x, h.r());
        prop_assume!(norm > 0.0);
        x.iter_mut().for_each(|v| *v /= norm);
        prop_assert!(rayleigh(&h, &x).unwrap() <= rho + 1e-9);
    }

    #[test]
    fn deleting_an_edge_drops_chi_by_at_most_one(f in small_graph()) {
        let chi = chromatic_number(&f).unwrap();
        for i in 0..f.edge_count() {
            let c = chromatic_number(&f.without_edge(i)).unwrap();
            prop_assert!(c == chi || c + 1 == chi);
        }
    }
}

#[test]
fn turan_and_multipartite_chromatic_numbers() {
    for k in 1..=6 {
        for n in k..=12 {
            assert_eq!(chromatic_number(&turan_graph(n, k).unwrap()).unwrap(), k, "T_{k}({n})");
        }
    }
    for sizes in [vec![2, 2], vec![3, 1, 2], vec![2, 2, 2, 2], vec![4, 3]] {
        let parts = PartSizes::new(sizes).unwrap();
        let k = parts.k();
        assert_eq!(chromatic_number(&complete_multipartite(&parts)).unwrap(), k);
        let plus = complete_multipartite_plus(&parts).unwrap();
        assert_eq!(chromatic_number(&plus).unwrap(), k + 1);
        assert!(is_color_critical(&plus, k + 1).unwrap().critical);
    }
}
