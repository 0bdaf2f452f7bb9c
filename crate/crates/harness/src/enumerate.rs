//! Isomorphism-free enumeration of small graphs.
//!
//! Canonical forms come from colour refinement followed by trying every
//! ordering inside the colour classes, keeping the largest adjacency code.
//! That is exponential for regular graphs but instant up to 9 vertices.

use std::collections::BTreeSet;

use tk5kit_core::{Graph, Vertex, VertexSet};

/// Largest order accepted by [`canonical_code`] (the code is a `u128`).
pub const MAX_CANONICAL_ORDER: usize = 16;

/// Stable colour classes, ordered by an isomorphism-invariant key.
fn refine(g: &Graph, vs: &[Vertex]) -> Vec<Vec<usize>> {
    let n = vs.len();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| g.has_edge(vs[i], vs[j])).collect())
        .collect();
    let mut colour: Vec<usize> = adj.iter().map(Vec::len).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|i| {
                let mut m: Vec<usize> = adj[i].iter().map(|&j| colour[j]).collect();
                m.sort_unstable();
                (colour[i], m)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = sigs.iter().collect();
        let index: Vec<&(usize, Vec<usize>)> = distinct.into_iter().collect();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| index.binary_search(&s).expect("present"))
            .collect();
        let before = colour.iter().collect::<BTreeSet<_>>().len();
        let after = index.len();
        colour = next;
        if after == before {
            break;
        }
    }
    let k = colour.iter().max().map_or(0, |&m| m + 1);
    let mut cells = vec![Vec::new(); k];
    for (i, &c) in colour.iter().enumerate() {
        cells[c].push(i);
    }
    cells.retain(|c| !c.is_empty());
    cells
}

fn code_of(adj: &[u32], order: &[usize]) -> u128 {
    let mut code = 0u128;
    for a in 1..order.len() {
        for b in 0..a {
            code <<= 1;
            if adj[order[a]] >> order[b] & 1 == 1 {
                code |= 1;
            }
        }
    }
    code
}

/// An isomorphism invariant that separates non-isomorphic graphs: the order
/// and the largest adjacency code over refinement-respecting labelings.
pub fn canonical_code(g: &Graph) -> (usize, u128) {
    let vs = g.vertices().to_vec();
    let n = vs.len();
    assert!(
        n <= MAX_CANONICAL_ORDER,
        "canonical forms need at most {MAX_CANONICAL_ORDER} vertices"
    );
    let adj: Vec<u32> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| g.has_edge(vs[i], vs[j]))
                .fold(0, |m, j| m | 1 << j)
        })
        .collect();
    let cells = refine(g, &vs);
    let mut best = 0u128;
    let mut order = Vec::with_capacity(n);
    fn go(
        cells: &[Vec<usize>],
        c: usize,
        used: u32,
        order: &mut Vec<usize>,
        adj: &[u32],
        best: &mut u128,
    ) {
        if c == cells.len() {
            *best = (*best).max(code_of(adj, order));
            return;
        }
        let cell = &cells[c];
        let placed = cell.iter().filter(|&&v| used >> v & 1 == 1).count();
        if placed == cell.len() {
            go(cells, c + 1, used, order, adj, best);
            return;
        }
        for &v in cell {
            if used >> v & 1 == 0 {
                order.push(v);
                go(cells, c, used | 1 << v, order, adj, best);
                order.pop();
            }
        }
    }
    go(&cells, 0, 0, &mut order, &adj, &mut best);
    (n, best)
}

/// The graph on `0..n` whose canonical code is `code`.
fn from_code(n: usize, code: u128) -> Graph {
    let mut edges = Vec::new();
    let mut bit = n * (n.saturating_sub(1)) / 2;
    for a in 1..n {
        for b in 0..a {
            bit -= 1;
            if code >> bit & 1 == 1 {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid code")
}

/// One representative of each isomorphism class of graphs on `n` vertices,
/// relabelled canonically and sorted by canonical code.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_CANONICAL_ORDER);
    let mut level: BTreeSet<u128> = BTreeSet::from([0]);
    for k in 1..n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let g = from_code(k, code);
            for mask in 0u32..(1 << k) {
                let nbrs: VertexSet = (0..k).filter(|&i| mask >> i & 1 == 1).collect();
                let h = g.add_vertex(k, nbrs).expect("fresh vertex");
                next.insert(canonical_code(&h).1);
            }
        }
        level = next;
    }
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    level.into_iter().map(|c| from_code(n, c)).collect()
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}
