mod common;

use common::{gnp, rng, simple_paths};
use rand::Rng;
use tk5kit_core::graph6::from_graph6;
use tk5kit_core::{
    chain_dichotomy_search, chain_of_blocks, classify_path_search, find_k4_minus, is_k_a_connected,
    validate_chain_outcome, validate_classified_path, BlockChain, Budget, ChainOutcome, Graph,
    K4Mode, Path, Vertex, VertexSet,
};

/// 2-connected by deleting each vertex in turn.
fn biconnected_brute(g: &Graph) -> bool {
    g.order() >= 3
        && g.is_connected()
        && g.vertices()
            .iter()
            .all(|v| g.remove_vertex(v).is_connected())
}

/// A chain of blocks from `u` to `v` is exactly a graph that becomes
/// 2-connected when a new vertex is joined to `u` and `v`.
fn chain_brute(g: &Graph, u: Vertex, v: Vertex) -> bool {
    let w = g.fresh_vertex().unwrap();
    biconnected_brute(&g.add_vertex(w, [u, v].iter().collect()).unwrap())
}

#[test]
fn chain_of_blocks_matches_oracle() {
    let mut r = rng(3);
    for _ in 0..3000 {
        let n = r.gen_range(2..=8);
        let p = r.gen_range(0.2..0.8);
        let g = gnp(&mut r, n, p);
        let u = r.gen_range(0..n);
        let v = (u + r.gen_range(1..n)) % n;
        let got = chain_of_blocks(&g, u, v).unwrap();
        assert_eq!(got.is_some(), chain_brute(&g, u, v), "{g:?} {u} {v}");
        if let Some(c) = got {
            assert!(c.validate(&g) && c.spans(&g));
            assert_eq!(c.vertex_set(), g.vertices());
        }
    }
}

fn k4_brute(g: &Graph, degree2: Option<Vertex>, avoid: Option<Vertex>, mode: K4Mode) -> bool {
    let vs = g.vertices().to_vec();
    let n = vs.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [vs[a], vs[b], vs[c], vs[d]];
                    if avoid.is_some_and(|x| q.contains(&x)) {
                        continue;
                    }
                    let edges: Vec<(usize, usize)> = (0..4)
                        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                        .collect();
                    for &(i, j) in &edges {
                        if degree2.is_some_and(|x| x != q[i] && x != q[j]) {
                            continue;
                        }
                        let others_ok = edges
                            .iter()
                            .filter(|&&e| e != (i, j))
                            .all(|&(s, t)| g.has_edge(q[s], q[t]));
                        let pair_ok = mode == K4Mode::Subgraph || !g.has_edge(q[i], q[j]);
                        if others_ok && pair_ok {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

#[test]
fn k4_minus_matches_quadruple_scan() {
    let mut r = rng(4);
    for _ in 0..3000 {
        let n = r.gen_range(4..=8);
        let p = r.gen_range(0.2..0.9);
        let g = gnp(&mut r, n, p);
        let x = r.gen_range(0..n);
        for mode in [K4Mode::Subgraph, K4Mode::Induced] {
            for (d, a) in [(None, None), (Some(x), None), (None, Some(x))] {
                let got = find_k4_minus(&g, d, a, mode).unwrap();
                assert_eq!(
                    got.is_some(),
                    k4_brute(&g, d, a, mode),
                    "{g:?} {d:?} {a:?} {mode}"
                );
                if let Some(w) = got {
                    assert!(w.validate(&g, mode));
                    if let Some(d) = d {
                        assert!(w.missing_pair.0 == d || w.missing_pair.1 == d);
                    }
                    if let Some(a) = a {
                        assert!(!w.vertices.contains(&a));
                    }
                }
            }
        }
    }
}

fn roles_of(g: &Graph) -> Vec<[Vertex; 4]> {
    let mut out = Vec::new();
    for x1 in g.vertices() {
        for x2 in g.neighbors(x1) {
            let common = g.neighbors(x1) & g.neighbors(x2);
            for y1 in common {
                for y2 in common {
                    if y1 < y2 && !g.has_edge(y1, y2) {
                        out.push([x1, x2, y1, y2]);
                    }
                }
            }
        }
    }
    out
}

/// Induced `x1`-`x2` paths of `g - x1x2` avoiding `avoid` whose removal leaves a chain.
fn dichotomy_paths(g: &Graph, [x1, x2, y1, y2]: [Vertex; 4], avoid: VertexSet) -> Vec<Path> {
    let h = g.remove_edges([(x1, x2)]);
    simple_paths(&h, x1, x2, h.vertices() - avoid)
        .into_iter()
        .map(Path::new)
        .filter(|p| p.is_induced_in(&h) && chain_brute(&g.remove_vertices(p.vertex_set()), y1, y2))
        .collect()
}

#[test]
fn chain_dichotomy_on_random_hosts() {
    let mut r = rng(8);
    let (mut paths, mut seps, mut runs) = (0, 0, 0);
    for _ in 0..4000 {
        let n = r.gen_range(7..=11);
        let p = r.gen_range(0.35..0.7);
        let g = gnp(&mut r, n, p);
        let roles = roles_of(&g);
        if roles.is_empty() {
            continue;
        }
        let ro = roles[r.gen_range(0..roles.len())];
        let [x1, x2, y1, y2] = ro;
        let a: VertexSet = ro.iter().collect();
        if !is_k_a_connected(&g, 4, a).unwrap() {
            continue;
        }
        // any x1-x2 path with a chain left over, not necessarily induced
        let h = g.remove_edges([(x1, x2)]);
        let ys: VertexSet = [y1, y2].iter().collect();
        let Some((x, b)) = simple_paths(&h, x1, x2, h.vertices() - ys)
            .into_iter()
            .find_map(|p| {
                let p = Path::new(p);
                chain_of_blocks(&g.remove_vertices(p.vertex_set()), y1, y2)
                    .unwrap()
                    .map(|b| (p, b))
            })
        else {
            continue;
        };
        runs += 1;
        let o = chain_dichotomy_search(&g, x1, x2, y1, y2, &x, &b, &Budget::unlimited()).unwrap();
        assert!(validate_chain_outcome(&g, ro, &b, &o), "{g:?} {ro:?} {o:?}");
        let expect_path = !dichotomy_paths(&g, ro, b.vertex_set()).is_empty();
        match o {
            ChainOutcome::Path { .. } => {
                assert!(expect_path);
                paths += 1;
            }
            ChainOutcome::Separation { .. } => {
                assert!(!expect_path, "{g:?} {ro:?}");
                seps += 1;
            }
        }
    }
    assert!(runs >= 200, "{runs}");
    assert!(paths > 0);
    let _ = seps;
}

#[test]
fn engineered_separation_host() {
    let g = from_graph6("H`qhnRE").unwrap();
    let ro = [0, 1, 2, 3];
    let x = Path::new(vec![0, 4, 1]);
    // one block of g - X; vertex 7 hangs off it
    let b = BlockChain {
        blocks: vec![[2, 3, 5, 6, 8].iter().collect()],
        u: 2,
        v: 3,
    };
    let rest = g.remove_vertices(x.vertex_set());
    assert!(b.validate(&rest) && !b.spans(&rest));
    assert!(dichotomy_paths(&g, ro, b.vertex_set()).is_empty());
    let o = chain_dichotomy_search(&g, 0, 1, 2, 3, &x, &b, &Budget::unlimited()).unwrap();
    assert!(matches!(o, ChainOutcome::Separation { .. }), "{o:?}");
    assert!(validate_chain_outcome(&g, ro, &b, &o));
    let json = serde_json::to_string(&o).unwrap();
    assert_eq!(serde_json::from_str::<ChainOutcome>(&json).unwrap(), o);
}

#[test]
fn classify_path_matches_brute_force() {
    let mut r = rng(12);
    let mut hits = 0;
    for _ in 0..1500 {
        let n = r.gen_range(7..=10);
        let p = r.gen_range(0.4..0.8);
        let g = gnp(&mut r, n, p);
        let roles = roles_of(&g);
        if roles.is_empty() {
            continue;
        }
        let [x1, x2, y1, y2] = roles[r.gen_range(0..roles.len())];
        let zs: Vec<Vertex> = (g.neighbors(x1) - [x2, y1, y2].iter().collect()).to_vec();
        if zs.len() < 2 {
            continue;
        }
        let (z0, z1) = (zs[0], zs[zs.len() - 1]);
        let got = classify_path_search(&g, x1, x2, y1, y2, z0, z1, &Budget::unlimited()).unwrap();
        let h = g.remove_vertex(x1);
        let brute = [(z0, z1), (z1, z0)].iter().any(|&(s, o)| {
            let allowed = h.vertices() - [o, y1, y2].iter().collect();
            simple_paths(&h, s, x2, allowed).into_iter().any(|p| {
                let p = Path::new(p);
                let rest = h.remove_vertices(p.vertex_set());
                p.is_induced_in(&h)
                    && chain_brute(&rest, y1, y2)
                    && chain_of_blocks(&rest, y1, y2).unwrap().is_some_and(|c| {
                        c.blocks
                            .iter()
                            .any(|b| b.len() >= 3 && (b.contains(y1) || b.contains(y2)))
                    })
            })
        });
        assert_eq!(got.is_some(), brute, "{g:?}");
        if let Some((i, p)) = got {
            hits += 1;
            assert!(validate_classified_path(
                &g,
                [x1, x2, y1, y2, z0, z1],
                i,
                &p
            ));
        }
    }
    assert!(hits > 0);
}
