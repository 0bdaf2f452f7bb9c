mod common;

use common::{brute_tk5, gnp, mutations, petersen, rng};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use tk5kit_core::{
    check_tk5, find_tk5, verify_tk5, Budget, Graph, SubdivisionWitness, TKConstraints, VertexSet,
};

fn find(g: &Graph, c: &TKConstraints) -> Option<SubdivisionWitness> {
    let w = find_tk5(g, c, &Budget::unlimited()).unwrap();
    if let Some(w) = &w {
        assert!(c.admits(g, w), "{w:?}");
    }
    w
}

#[test]
fn agrees_with_brute_force_on_random_graphs() {
    let mut r = rng(5);
    for _ in 0..1500 {
        let n = r.gen_range(5..=8);
        let p = r.gen_range(0.3..0.95);
        let g = gnp(&mut r, n, p);
        let all = g.vertices();
        let plain = find(&g, &TKConstraints::default()).is_some();
        assert_eq!(plain, brute_tk5(&g, all, VertexSet::EMPTY, None), "{g:?}");
        if !plain {
            continue;
        }
        let x = r.gen_range(0..n);
        assert_eq!(
            find(&g, &TKConstraints::forbid(x)).is_some(),
            brute_tk5(&g, all.without(x), VertexSet::EMPTY, None),
            "forbid {x} in {g:?}"
        );
        let req: VertexSet = [r.gen_range(0..n), r.gen_range(0..n)].iter().collect();
        let c = TKConstraints {
            required_branch: req,
            ..Default::default()
        };
        assert_eq!(
            find(&g, &c).is_some(),
            brute_tk5(&g, all, req, None),
            "require {req:?} in {g:?}"
        );
        let edges = g.edges();
        let e = *edges.choose(&mut r).unwrap();
        let c = TKConstraints {
            required_edge: Some(e),
            ..Default::default()
        };
        assert_eq!(
            find(&g, &c).is_some(),
            brute_tk5(&g, all, VertexSet::EMPTY, Some(e)),
            "edge {e:?} in {g:?}"
        );
        let keep: VertexSet = g.neighbors(x).iter().filter(|_| r.gen_bool(0.6)).collect();
        let c = TKConstraints {
            host_restriction: Some((x, keep)),
            ..Default::default()
        };
        let h = g.restrict_edges_at(x, keep).unwrap();
        assert_eq!(
            find(&g, &c).is_some(),
            brute_tk5(&h, all, VertexSet::EMPTY, None),
            "restrict {x} in {g:?}"
        );
    }
}

#[test]
fn small_cases() {
    assert!(find(&petersen(), &TKConstraints::default()).is_none());
    let k33 = Graph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
    assert!(find(&k33, &TKConstraints::default()).is_none());
    let w = find(&Graph::complete(5), &TKConstraints::default()).unwrap();
    assert_eq!(w.branch, [0, 1, 2, 3, 4]);
    assert!(w.paths.values().all(|p| p.len() == 2));
}

#[test]
fn every_mutation_is_rejected() {
    let mut r = rng(9);
    let mut trials = 0;
    while trials < 3000 {
        let n = r.gen_range(5..=10);
        let p = r.gen_range(0.5..0.95);
        let g = gnp(&mut r, n, p);
        let Some(w) = find(&g, &TKConstraints::default()) else {
            continue;
        };
        assert!(verify_tk5(&g, &w));
        for m in mutations(&g, &w) {
            assert!(check_tk5(&g, &m).is_err(), "accepted {m:?} in {g:?}");
            trials += 1;
        }
    }
}

#[test]
fn witness_json_round_trip() {
    let g = Graph::complete(6).remove_edges([(0, 1), (2, 3)]);
    let w = find(&g, &TKConstraints::default()).unwrap();
    let s = serde_json::to_string(&w).unwrap();
    assert_eq!(serde_json::from_str::<SubdivisionWitness>(&s).unwrap(), w);
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (5..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut e = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        e.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, e).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn subdividing_an_edge_keeps_the_answer(g in arb_graph(7), pick in any::<prop::sample::Index>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick.index(edges.len())];
        let z = g.order();
        let h = g.remove_edges([(u, v)]).add_vertex(z, [u, v].iter().collect()).unwrap();
        let c = TKConstraints::default();
        prop_assert_eq!(find(&g, &c).is_some(), find(&h, &c).is_some());
    }

    #[test]
    fn adding_an_edge_never_loses_a_tk5(g in arb_graph(8), a in 0usize..8, b in 0usize..8) {
        prop_assume!(a != b && a < g.order() && b < g.order());
        let c = TKConstraints::default();
        if find(&g, &c).is_some() {
            prop_assert!(find(&g.add_edges([(a, b)]).unwrap(), &c).is_some());
        }
    }

    #[test]
    fn witness_avoids_forbidden(g in arb_graph(8), x in 0usize..8) {
        prop_assume!(x < g.order());
        if let Some(w) = find(&g, &TKConstraints::forbid(x)) {
            prop_assert!(!w.branch_set().contains(x));
        }
    }
}
