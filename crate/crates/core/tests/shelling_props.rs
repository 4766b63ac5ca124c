//! The shelling engine against its oracles, plus complex identities.

use proptest::prelude::*;
use rindep::complex::{independence_complex, ind_r_complex};
use rindep::conn::con_r;
use rindep::harness::{to_text, Certificate};
use rindep::shelling::{
    brute_force_shellable, is_shellable, verify_shelling, verify_shelling_by_definition,
    ShellDecision,
};
use rindep::vset::maximal_sets;
use rindep::{Graph, MinorSpec, SimplicialComplex, VertexSet};

fn complex(ground: usize, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    let face = proptest::sample::subsequence((0..ground).collect::<Vec<_>>(), 1..=4);
    proptest::collection::vec(face, 1..=max_facets).prop_map(move |raw| {
        let faces = maximal_sets(raw.into_iter().map(|f| f.into_iter().collect()).collect());
        SimplicialComplex::new(VertexSet::full(ground), faces).unwrap()
    })
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter_map(|(e, keep)| keep.then_some(e))
                .collect();
            Graph::from_edges(n, &pairs).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn engine_agrees_with_brute_force(d in complex(7, 8)) {
        let fast = is_shellable(&d, 10_000_000);
        let slow = brute_force_shellable(&d).unwrap();
        prop_assert_eq!(fast.is_shellable(), slow.is_shellable());
        prop_assert!(!fast.is_unknown());
        if let ShellDecision::Shellable(c) = &fast {
            prop_assert!(verify_shelling(&d, &c.order).unwrap());
            prop_assert!(verify_shelling_by_definition(&d, &c.order).unwrap());
        }
    }

    #[test]
    fn pairwise_criterion_matches_definition(
        d in complex(6, 5),
        seed in any::<u64>(),
    ) {
        // every order for small complexes, otherwise a sample
        let mut orders = vec![d.facets().to_vec()];
        let mut order = d.facets().to_vec();
        let mut s = seed;
        for _ in 0..24 {
            for i in (1..order.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                order.swap(i, (s >> 33) as usize % (i + 1));
            }
            orders.push(order.clone());
        }
        for o in orders {
            prop_assert_eq!(
                verify_shelling(&d, &o).unwrap(),
                verify_shelling_by_definition(&d, &o).unwrap()
            );
        }
    }

    #[test]
    fn coning_preserves_the_decision(d in complex(6, 6)) {
        let cone = d.cone(6).unwrap();
        prop_assert_eq!(
            is_shellable(&d, 1_000_000).is_shellable(),
            is_shellable(&cone, 1_000_000).is_shellable()
        );
    }

    #[test]
    fn direct_and_hypergraph_routes_agree(g in graph(7), r in 1..=4usize) {
        prop_assert_eq!(ind_r_complex(&g, r), independence_complex(&con_r(&g, r)));
    }

    #[test]
    fn links_of_faces_are_contractions(g in graph(8), r in 1..=3usize, bits in any::<u64>()) {
        let d = ind_r_complex(&g, r);
        let face = VertexSet::from_bits(bits).intersection(g.vertices());
        prop_assume!(d.contains_face(face));
        let contracted = con_r(&g, r).minor(&MinorSpec::contraction(face)).unwrap();
        prop_assert_eq!(d.link(face).unwrap(), independence_complex(&contracted));
    }

    #[test]
    fn certificates_reverify(g in graph(7), r in 1..=3usize) {
        let d = ind_r_complex(&g, r);
        let cert = match is_shellable(&d, 1_000_000) {
            ShellDecision::Shellable(c) => Certificate::shelling(&g, r, c.order),
            ShellDecision::NotShellable { nodes } => Certificate::exhausted(&g, r, d.facet_count(), nodes),
            ShellDecision::Unknown { .. } => return Ok(()),
        };
        let back = Certificate::from_json(&cert.to_json()).unwrap();
        prop_assert!(back.verify(&g).unwrap());
        prop_assert!(!to_text(&g).is_empty());
    }
}

#[test]
fn known_complexes() {
    let c4 = independence_complex(&con_r(&Graph::cycle(4), 1));
    assert!(is_shellable(&c4, 1000).is_not_shellable());
    assert!(brute_force_shellable(&c4).unwrap().is_not_shellable());
    let c5 = ind_r_complex(&Graph::cycle(5), 1);
    assert!(is_shellable(&c5, 1000).is_shellable());
}
