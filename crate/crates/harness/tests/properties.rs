use proptest::prelude::*;
use tk5kit_core::graph6::{from_graph6, to_graph6};
use tk5kit_core::{Budget, Graph};
use tk5kit_harness::{canonical_code, find_roles, verify_theorem_1_1, Verdict};

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=8).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_code_ignores_labels(g in arb_graph(), perm in any::<u64>()) {
        let n = g.order();
        let mut p: Vec<usize> = (0..n).collect();
        let mut s = perm;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            p.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(|v| p[v]).unwrap();
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
    }

    #[test]
    fn graph6_round_trip(g in arb_graph()) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn roles_satisfy_their_invariants(g in arb_graph()) {
        for r in find_roles(&g, None) {
            prop_assert!(r.validate(&g).is_ok());
        }
    }
}

#[test]
fn verdict_json_round_trip() {
    let g = Graph::complete(8).remove_edges([(6, 7), (4, 5)]);
    for r in find_roles(&g, Some(5)) {
        let v = verify_theorem_1_1(&g, &r, &Budget::default()).unwrap();
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(serde_json::from_str::<Verdict>(&s).unwrap(), v);
    }
}
