#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tk5kit_core::{Edge, Graph, Path, SubdivisionWitness, Vertex, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                e.push((u, v));
            }
        }
    }
    Graph::from_edges(n, e).unwrap()
}

/// Every labelled graph on `n` vertices, by edge mask.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |m| {
        let e = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| m >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, e).unwrap()
    })
}

/// All simple paths from `s` to `t` whose interior lies in `allowed`.
pub fn simple_paths(g: &Graph, s: Vertex, t: Vertex, allowed: VertexSet) -> Vec<Vec<Vertex>> {
    fn rec(
        g: &Graph,
        t: Vertex,
        allowed: VertexSet,
        cur: &mut Vec<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let last = *cur.last().unwrap();
        for w in g.neighbors(last) {
            if w == t {
                let mut p = cur.clone();
                p.push(t);
                out.push(p);
            } else if allowed.contains(w) && !cur.contains(&w) {
                cur.push(w);
                rec(g, t, allowed, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(g, t, allowed, &mut vec![s], &mut out);
    out
}

/// Brute-force TK5 search: every 5-set of allowed branch vertices, then
/// every choice of pairwise internally disjoint paths. `edge`, if given,
/// must be used by one of the paths.
pub fn brute_tk5(
    g: &Graph,
    allowed_branch: VertexSet,
    required: VertexSet,
    edge: Option<Edge>,
) -> bool {
    let cands: Vec<Vertex> = allowed_branch
        .iter()
        .filter(|&v| g.degree(v) >= 4)
        .collect();
    let n = cands.len();
    if n < 5 {
        return false;
    }
    let mut idx = [0usize; 5];
    fn choose(
        k: usize,
        start: usize,
        n: usize,
        idx: &mut [usize; 5],
        f: &mut dyn FnMut(&[usize; 5]) -> bool,
    ) -> bool {
        if k == 5 {
            return f(idx);
        }
        for i in start..n {
            idx[k] = i;
            if choose(k + 1, i + 1, n, idx, f) {
                return true;
            }
        }
        false
    }
    choose(0, 0, n, &mut idx, &mut |idx| {
        let b: Vec<Vertex> = idx.iter().map(|&i| cands[i]).collect();
        let bset: VertexSet = b.iter().collect();
        if !required.is_subset(bset) {
            return false;
        }
        let inner = g.vertices() - bset;
        let mut lists = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                lists.push(simple_paths(g, b[i], b[j], inner));
            }
        }
        pick(&lists, 0, VertexSet::EMPTY, false, edge)
    })
}

fn uses(p: &[Vertex], (u, v): Edge) -> bool {
    p.windows(2)
        .any(|w| (w[0] == u && w[1] == v) || (w[0] == v && w[1] == u))
}

fn pick(
    lists: &[Vec<Vec<Vertex>>],
    k: usize,
    used: VertexSet,
    hit: bool,
    edge: Option<Edge>,
) -> bool {
    if k == lists.len() {
        return edge.is_none() || hit;
    }
    for p in &lists[k] {
        let inner: VertexSet = p[1..p.len() - 1].iter().collect();
        if inner.intersects(used) {
            continue;
        }
        let h = hit || edge.is_some_and(|e| uses(p, e));
        if pick(lists, k + 1, used | inner, h, edge) {
            return true;
        }
    }
    false
}

pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.extend([(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
    }
    Graph::from_edges(10, e).unwrap()
}

/// Disjoint `s1`-`t1` and `s2`-`t2` paths exist.
pub fn brute_linkage(g: &Graph, s1: Vertex, t1: Vertex, s2: Vertex, t2: Vertex) -> bool {
    let avoid: VertexSet = [s2, t2].iter().collect();
    simple_paths(g, s1, t1, g.vertices() - avoid)
        .iter()
        .any(|p| {
            let used: VertexSet = p.iter().collect();
            bfs_reaches(g, s2, t2, g.vertices() - used)
        })
}

/// Plain BFS inside `allowed` (which must contain `s`).
pub fn bfs_reaches(g: &Graph, s: Vertex, t: Vertex, allowed: VertexSet) -> bool {
    let mut seen = VertexSet::singleton(s);
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        if u == t {
            return true;
        }
        for w in g.neighbors(u) {
            if allowed.contains(w) && !seen.contains(w) {
                seen.insert(w);
                queue.push_back(w);
            }
        }
    }
    false
}

/// Vertex sets of all cycles of `g`.
pub fn cycle_vertex_sets(g: &Graph) -> std::collections::HashSet<VertexSet> {
    let mut out = std::collections::HashSet::new();
    for s in g.vertices() {
        // cycles whose smallest vertex is s
        let allowed: VertexSet = g.vertices().iter().filter(|&v| v > s).collect();
        for p in simple_paths_within(g, s, allowed) {
            if p.len() >= 3 && g.has_edge(*p.last().unwrap(), s) {
                out.insert(p.iter().collect());
            }
        }
    }
    out
}

/// Every simple path starting at `s` with the rest inside `allowed`.
fn simple_paths_within(g: &Graph, s: Vertex, allowed: VertexSet) -> Vec<Vec<Vertex>> {
    fn rec(g: &Graph, allowed: VertexSet, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        out.push(cur.clone());
        let last = *cur.last().unwrap();
        for w in g.neighbors(last) {
            if allowed.contains(w) && !cur.contains(&w) {
                cur.push(w);
                rec(g, allowed, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(g, allowed, &mut vec![s], &mut out);
    out
}

/// Max number of paths from `u` to distinct vertices of `a`, pairwise
/// sharing only `u` and meeting `a` only at their ends. Unit-capacity
/// augmenting paths on the split graph.
pub fn max_fan_flow(g: &Graph, u: Vertex, a: VertexSet) -> usize {
    let n = g.vertices().last().map_or(0, |v| v + 1);
    // node 2v = v_in, 2v+1 = v_out, 2n = sink
    let sink = 2 * n;
    let mut cap = std::collections::HashMap::<(usize, usize), i32>::new();
    let mut adj = vec![Vec::new(); 2 * n + 1];
    let mut add =
        |x: usize, y: usize, c: i32, cap: &mut std::collections::HashMap<(usize, usize), i32>| {
            *cap.entry((x, y)).or_insert(0) += c;
            cap.entry((y, x)).or_insert(0);
            adj[x].push(y);
            adj[y].push(x);
        };
    for v in g.vertices() {
        if a.contains(v) {
            add(2 * v, sink, 1, &mut cap);
        } else if v != u {
            add(2 * v, 2 * v + 1, 1, &mut cap);
        }
    }
    for (x, y) in g.edges() {
        for (p, q) in [(x, y), (y, x)] {
            if !a.contains(p) {
                add(2 * p + 1, 2 * q, 1, &mut cap);
            }
        }
    }
    let src = 2 * u + 1;
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; 2 * n + 1];
        prev[src] = src;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if prev[y] == usize::MAX && cap[&(x, y)] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut y = sink;
        while y != src {
            let x = prev[y];
            *cap.get_mut(&(x, y)).unwrap() -= 1;
            *cap.get_mut(&(y, x)).unwrap() += 1;
            y = x;
        }
        flow += 1;
    }
}

fn permutations(items: &[Vertex]) -> Vec<Vec<Vertex>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Cyclic orders of `s` up to rotation and reflection.
pub fn cyclic_orders_brute(s: VertexSet) -> Vec<Vec<Vertex>> {
    let v = s.to_vec();
    if v.len() <= 2 {
        return vec![v];
    }
    let mut out: Vec<Vec<Vertex>> = Vec::new();
    for p in permutations(&v[1..]) {
        let mut o = vec![v[0]];
        o.extend(p);
        let mut r = vec![v[0]];
        r.extend(o[1..].iter().rev());
        if !out.contains(&r) {
            out.push(o);
        }
    }
    out
}

fn faces_of(rot: &std::collections::BTreeMap<Vertex, Vec<Vertex>>) -> Vec<Vec<Vertex>> {
    let mut used = std::collections::HashSet::new();
    let mut faces = Vec::new();
    for (&u, r) in rot {
        if r.is_empty() {
            faces.push(vec![u]);
        }
        for &v in r {
            if used.contains(&(u, v)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (u, v);
            while used.insert((a, b)) {
                face.push(a);
                let rb = &rot[&b];
                let i = rb.iter().position(|&x| x == a).unwrap();
                let next = rb[(i + 1) % rb.len()];
                (a, b) = (b, next);
            }
            faces.push(face);
        }
    }
    faces
}

/// Every face of every plane rotation system of the connected graph
/// `g[comp]`; empty when it is nonplanar.
pub fn all_plane_faces(g: &Graph, comp: VertexSet) -> std::collections::HashSet<Vec<Vertex>> {
    let h = g.induced(comp);
    let mut out = std::collections::HashSet::new();
    let nv = comp.len() as i64;
    let ne = h.size() as i64;
    if nv >= 3 && ne > 3 * nv - 6 {
        return out;
    }
    let vs = comp.to_vec();
    let choices: Vec<Vec<Vec<Vertex>>> = vs
        .iter()
        .map(|&v| {
            let nb = h.neighbors(v).to_vec();
            if nb.len() <= 2 {
                return vec![nb];
            }
            permutations(&nb[1..])
                .into_iter()
                .map(|p| {
                    let mut r = vec![nb[0]];
                    r.extend(p);
                    r
                })
                .collect()
        })
        .collect();
    let mut idx = vec![0usize; vs.len()];
    loop {
        let rot: std::collections::BTreeMap<Vertex, Vec<Vertex>> = vs
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, choices[i][idx[i]].clone()))
            .collect();
        let faces = faces_of(&rot);
        if nv - ne + faces.len() as i64 == 2 {
            out.extend(faces);
        }
        let mut k = 0;
        loop {
            if k == vs.len() {
                return out;
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

pub fn cyclic_subsequence(walk: &[Vertex], seq: &[Vertex]) -> bool {
    if seq.is_empty() {
        return true;
    }
    let m = walk.len();
    (0..m).any(|s| {
        let mut k = 0;
        for i in 0..m {
            if k < seq.len() && walk[(s + i) % m] == seq[k] {
                k += 1;
            }
        }
        k == seq.len()
    })
}

/// Whether `g` has a disc drawing with `boundary` on the circle in this
/// cyclic order: each component realises its part on one of its faces and
/// no two components interleave along the circle.
pub fn boundary_realisable(
    boundary: &[Vertex],
    faces: &[(VertexSet, std::collections::HashSet<Vec<Vertex>>)],
) -> bool {
    let label = |v: Vertex| faces.iter().position(|(c, _)| c.contains(v)).unwrap();
    let labels: Vec<usize> = boundary.iter().map(|&v| label(v)).collect();
    let n = labels.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    if labels[i] == labels[k] && labels[j] == labels[l] && labels[i] != labels[j] {
                        return false;
                    }
                }
            }
        }
    }
    faces.iter().all(|(c, fs)| {
        let sub: Vec<Vertex> = boundary
            .iter()
            .copied()
            .filter(|&v| c.contains(v))
            .collect();
        let rev: Vec<Vertex> = sub.iter().rev().copied().collect();
        fs.iter()
            .any(|f| cyclic_subsequence(f, &sub) || cyclic_subsequence(f, &rev))
    })
}

/// Per-component face sets, for [`boundary_realisable`].
pub fn component_faces(g: &Graph) -> Vec<(VertexSet, std::collections::HashSet<Vec<Vertex>>)> {
    g.components()
        .into_iter()
        .map(|c| (c, all_plane_faces(g, c)))
        .collect()
}

/// Single-field edits that always break a valid witness.
pub fn mutations(g: &Graph, w: &SubdivisionWitness) -> Vec<SubdivisionWitness> {
    let mut out = Vec::new();
    let bset = w.branch_set();
    for i in 0..5 {
        // another vertex as branch i, paths unchanged
        for v in g.vertices() - bset {
            let mut m = w.clone();
            m.branch[i] = v;
            out.push(m);
        }
        let mut m = w.clone();
        m.branch[i] = w.branch[(i + 1) % 5];
        out.push(m);
    }
    for (&pair, p) in &w.paths {
        let mut m = w.clone();
        m.paths.remove(&pair);
        out.push(m);
        let mut m = w.clone();
        m.paths.insert(pair, p.reversed());
        out.push(m);
        let mut m = w.clone();
        m.paths.insert((pair.1, pair.0), p.reversed());
        out.push(m);
        // a branch vertex spliced into the interior
        for &b in &w.branch {
            if Some(b) != p.first() && Some(b) != p.last() {
                let mut vs = p.vertices().to_vec();
                vs.insert(1, b);
                let mut m = w.clone();
                m.paths.insert(pair, Path::new(vs));
                out.push(m);
            }
        }
        // a non-edge hop
        let vs = p.vertices();
        for v in g.vertices() {
            if !g.has_edge(vs[0], v) && v != vs[0] && !bset.contains(v) {
                let mut nv = vs.to_vec();
                nv.insert(1, v);
                let mut m = w.clone();
                m.paths.insert(pair, Path::new(nv));
                out.push(m);
                break;
            }
        }
        // share another path's interior vertex
        for (&other, q) in &w.paths {
            if other != pair {
                if let Some(v) = q.interior().first() {
                    let mut nv = vs.to_vec();
                    nv.insert(1, v);
                    let mut m = w.clone();
                    m.paths.insert(pair, Path::new(nv));
                    out.push(m);
                    break;
                }
            }
        }
    }
    out
}
