//! Planarity with a prescribed outer boundary.
//!
//! Each block is embedded with the Demoucron–Malgrange–Pertuiset face
//! insertion method and the block rotations are concatenated at cut
//! vertices. Faces are traced with `next(u→v) = (v → σ_v(u))`, where `σ_v`
//! is the successor in the rotation at `v`.
//!
//! A boundary order `b_1..b_n` is realised when the graph can be drawn in a
//! closed disc with the `b_i` on the boundary circle in that cyclic order
//! (either orientation). This holds iff the graph plus an apex joined to a
//! wheel rim `b_1 b_2 … b_n b_1` is planar.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::bitset::{Vertex, VertexSet};
use crate::blocks::block_decomposition;
use crate::connectivity::PathFan;
use crate::error::{invalid, Error, Result};
use crate::flow::Fan;
use crate::graph::{norm, Cycle, Edge, Graph, Path};

/// A rotation system plus one outer walk per connected component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneEmbedding {
    /// Stored as `[v, [neighbours...]]` pairs so it survives tagged enums.
    #[serde(with = "rotation_pairs")]
    pub rotation: BTreeMap<Vertex, Vec<Vertex>>,
    /// One face walk per component, components ordered by smallest vertex.
    /// A walk lists the tails of its darts; an isolated vertex has walk `[v]`.
    pub outer_walks: Vec<Vec<Vertex>>,
}

mod rotation_pairs {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::bitset::Vertex;

    pub fn serialize<S: Serializer>(
        r: &BTreeMap<Vertex, Vec<Vertex>>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        r.iter().collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<Vertex, Vec<Vertex>>, D::Error> {
        Ok(Vec::<(Vertex, Vec<Vertex>)>::deserialize(d)?
            .into_iter()
            .collect())
    }
}

fn trace_faces(rotation: &BTreeMap<Vertex, Vec<Vertex>>) -> Option<Vec<Vec<Vertex>>> {
    let mut pos = HashMap::new();
    for (&v, r) in rotation {
        for (i, &u) in r.iter().enumerate() {
            pos.insert((v, u), i);
        }
    }
    let mut used = HashSet::new();
    let mut faces = Vec::new();
    for (&u, r) in rotation {
        if r.is_empty() {
            faces.push(vec![u]);
            continue;
        }
        for &v in r {
            if used.contains(&(u, v)) {
                continue;
            }
            let start = (u, v);
            let mut cur = start;
            let mut face = Vec::new();
            loop {
                if !used.insert(cur) {
                    return None;
                }
                face.push(cur.0);
                let (a, b) = cur;
                let rb = rotation.get(&b)?;
                let i = *pos.get(&(b, a))?;
                cur = (b, rb[(i + 1) % rb.len()]);
                if cur == start {
                    break;
                }
            }
            faces.push(face);
        }
    }
    Some(faces)
}

fn same_cyclic(a: &[Vertex], b: &[Vertex]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..b.len()).any(|s| (0..a.len()).all(|i| a[i] == b[(s + i) % b.len()]))
}

/// Whether `seq` occurs as a subsequence of some rotation of the cyclic
/// `walk` (read forwards).
fn cyclic_subsequence(walk: &[Vertex], seq: &[Vertex]) -> bool {
    let Some(&first) = seq.first() else {
        return true;
    };
    let m = walk.len();
    (0..m).filter(|&s| walk[s] == first).any(|s| {
        let mut k = 1;
        for i in 1..m {
            if k == seq.len() {
                break;
            }
            if walk[(s + i) % m] == seq[k] {
                k += 1;
            }
        }
        k == seq.len()
    })
}

/// No `i < j < k < l` with `labels[i] = labels[k] ≠ labels[j] = labels[l]`.
fn non_crossing(labels: &[usize]) -> bool {
    let n = labels.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if labels[k] != labels[i] || labels[j] == labels[i] {
                    continue;
                }
                if labels[k + 1..].contains(&labels[j]) {
                    return false;
                }
            }
        }
    }
    true
}

impl PlaneEmbedding {
    /// The neighbors of `v` in clockwise order (empty for unknown `v`).
    pub fn rotation_at(&self, v: Vertex) -> &[Vertex] {
        self.rotation.get(&v).map_or(&[], |r| r.as_slice())
    }

    /// All face walks. `None` when the rotation is not a valid system.
    pub fn faces(&self) -> Option<Vec<Vec<Vertex>>> {
        trace_faces(&self.rotation)
    }

    pub fn outer_vertices(&self) -> VertexSet {
        self.outer_walks.iter().flatten().collect()
    }

    /// Vertices sharing a face with `v`, excluding `v`.
    pub fn cofacial(&self, v: Vertex) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for f in self.faces().unwrap_or_default() {
            if f.contains(&v) {
                out |= f.iter().collect();
            }
        }
        out.without(v)
    }

    /// The rotation is a permutation of each neighborhood of `g`, every
    /// component satisfies Euler's formula, and each outer walk is a face of
    /// its component.
    pub fn validate(&self, g: &Graph) -> bool {
        if self.rotation.keys().copied().collect::<VertexSet>() != g.vertices() {
            return false;
        }
        for (&v, r) in &self.rotation {
            let set: VertexSet = r.iter().collect();
            if set.len() != r.len() || set != g.neighbors(v) {
                return false;
            }
        }
        let Some(faces) = self.faces() else {
            return false;
        };
        let comps = g.components();
        if self.outer_walks.len() != comps.len() {
            return false;
        }
        for (c, walk) in comps.iter().zip(&self.outer_walks) {
            let nv = c.len() as i64;
            let ne = c.iter().map(|v| g.degree(v)).sum::<usize>() as i64 / 2;
            let cf: Vec<&Vec<Vertex>> = faces.iter().filter(|f| c.contains(f[0])).collect();
            if nv - ne + cf.len() as i64 != 2 {
                return false;
            }
            if !cf.iter().any(|f| same_cyclic(f, walk)) {
                return false;
            }
        }
        true
    }

    /// The outer walks realise `boundary` in disc order: per component the
    /// boundary vertices it contains occur along its outer walk in the given
    /// cyclic order, one orientation for all components, and no two
    /// components interleave.
    pub fn has_boundary_order(&self, g: &Graph, boundary: &[Vertex]) -> bool {
        let comps = g.components();
        let mut labels = Vec::with_capacity(boundary.len());
        for &b in boundary {
            match comps.iter().position(|c| c.contains(b)) {
                Some(i) => labels.push(i),
                None => return false,
            }
        }
        if !non_crossing(&labels) || self.outer_walks.len() != comps.len() {
            return false;
        }
        let fits = |seq: &[Vertex]| {
            (0..comps.len()).all(|i| {
                let sub: Vec<Vertex> = seq
                    .iter()
                    .copied()
                    .filter(|&v| comps[i].contains(v))
                    .collect();
                cyclic_subsequence(&self.outer_walks[i], &sub)
            })
        };
        let rev: Vec<Vertex> = boundary.iter().rev().copied().collect();
        fits(boundary) || fits(&rev)
    }
}

/// Faces of a 2-connected plane block as directed cycles, or `None` if the
/// block is nonplanar.
fn embed_block(b: &Graph) -> Option<Vec<Vec<Vertex>>> {
    let bs = b.vertices();
    let u = bs.first()?;
    let v = b.neighbors(u).first()?;
    let back = b.remove_edges([(u, v)]).shortest_path(v, u, bs)?;
    let mut cycle = vec![u];
    cycle.extend(&back.vertices()[..back.len() - 1]);
    let mut faces = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    let mut placed: VertexSet = cycle.iter().collect();
    let mut placed_edges: HashSet<Edge> = HashSet::new();
    for i in 0..cycle.len() {
        placed_edges.insert(norm(cycle[i], cycle[(i + 1) % cycle.len()]));
    }

    loop {
        // fragments: (attachments, path through the fragment)
        let mut frags: Vec<(VertexSet, Option<Edge>, VertexSet)> = Vec::new();
        for x in placed {
            for y in b.neighbors(x) & placed {
                if x < y && !placed_edges.contains(&(x, y)) {
                    frags.push((
                        VertexSet::singleton(x).with(y),
                        Some((x, y)),
                        VertexSet::EMPTY,
                    ));
                }
            }
        }
        for comp in b.components_within(bs - placed) {
            let att = b.neighborhood_of(comp) & placed;
            frags.push((att, None, comp));
        }
        if frags.is_empty() {
            return Some(faces);
        }
        let face_sets: Vec<VertexSet> = faces.iter().map(|f| f.iter().collect()).collect();
        let mut choice = None;
        for (k, (att, _, _)) in frags.iter().enumerate() {
            let ok: Vec<usize> = (0..faces.len())
                .filter(|&i| att.is_subset(face_sets[i]))
                .collect();
            match ok.len() {
                0 => return None,
                1 => {
                    choice = Some((k, ok[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((k, ok[0]));
                    }
                }
            }
        }
        let (k, fi) = choice?;
        let (att, chord, comp) = frags[k];
        let path: Vec<Vertex> = match chord {
            Some((x, y)) => vec![x, y],
            None => {
                let a = att.first()?;
                let z = att.without(a).first()?;
                let sub = b.induced(comp.with(a).with(z)).remove_edges([(a, z)]);
                sub.shortest_path(a, z, comp)?.into_vec()
            }
        };
        let f = faces.swap_remove(fi);
        let m = f.len();
        let a = path[0];
        let z = path[path.len() - 1];
        let i = f.iter().position(|&w| w == a)?;
        let j = f.iter().position(|&w| w == z)?;
        let inner = &path[1..path.len() - 1];
        let mut f1: Vec<Vertex> = Vec::new();
        let mut t = i;
        loop {
            f1.push(f[t]);
            if t == j {
                break;
            }
            t = (t + 1) % m;
        }
        f1.extend(inner.iter().rev());
        let mut f2: Vec<Vertex> = Vec::new();
        let mut t = j;
        loop {
            f2.push(f[t]);
            if t == i {
                break;
            }
            t = (t + 1) % m;
        }
        f2.extend(inner.iter());
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            placed_edges.insert(norm(w[0], w[1]));
        }
        placed |= path.iter().collect();
    }
}

fn rotation_from_faces(faces: &[Vec<Vertex>], b: &Graph) -> Option<BTreeMap<Vertex, Vec<Vertex>>> {
    let mut succ: HashMap<(Vertex, Vertex), Vertex> = HashMap::new();
    for f in faces {
        let m = f.len();
        for k in 0..m {
            succ.insert((f[k], f[(k + m - 1) % m]), f[(k + 1) % m]);
        }
    }
    let mut rot = BTreeMap::new();
    for v in b.vertices() {
        let start = b.neighbors(v).first()?;
        let mut r = vec![start];
        let mut x = *succ.get(&(v, start))?;
        while x != start {
            r.push(x);
            x = *succ.get(&(v, x))?;
            if r.len() > b.degree(v) {
                return None;
            }
        }
        if r.len() != b.degree(v) {
            return None;
        }
        rot.insert(v, r);
    }
    Some(rot)
}

fn pick_outer(g: &Graph, faces: &[Vec<Vertex>]) -> Vec<Vec<Vertex>> {
    g.components()
        .iter()
        .map(|c| {
            let mut best: Option<&Vec<Vertex>> = None;
            for f in faces.iter().filter(|f| c.contains(f[0])) {
                if best.is_none_or(|b| f.len() > b.len()) {
                    best = Some(f);
                }
            }
            best.cloned().unwrap_or_default()
        })
        .collect()
}

fn rotation_system(g: &Graph) -> Option<BTreeMap<Vertex, Vec<Vertex>>> {
    let mut rot: BTreeMap<Vertex, Vec<Vertex>> = g.vertices().iter().map(|v| (v, vec![])).collect();
    for block in block_decomposition(g).blocks {
        match block.vertices.len() {
            1 => {}
            2 => {
                let (x, y) = block.edges[0];
                rot.get_mut(&x)?.push(y);
                rot.get_mut(&y)?.push(x);
            }
            _ => {
                let b = g.induced(block.vertices);
                let faces = embed_block(&b)?;
                let r = rotation_from_faces(&faces, &b)?;
                for (v, list) in r {
                    rot.get_mut(&v)?.extend(list);
                }
            }
        }
    }
    Some(rot)
}

/// A plane embedding of `g`, or `None` if `g` is nonplanar. Each component's
/// outer walk is its longest face (first traced on ties).
pub fn planar_embed(g: &Graph) -> Option<PlaneEmbedding> {
    let rotation = rotation_system(g)?;
    let faces = trace_faces(&rotation)?;
    let e = PlaneEmbedding {
        outer_walks: pick_outer(g, &faces),
        rotation,
    };
    debug_assert!(e.validate(g));
    Some(e)
}

pub fn is_planar(g: &Graph) -> bool {
    rotation_system(g).is_some()
}

fn check_boundary(g: &Graph, boundary: &[Vertex]) -> Result<VertexSet> {
    let set: VertexSet = boundary.iter().collect();
    if set.len() != boundary.len() {
        return Err(invalid("boundary vertices repeat"));
    }
    if let Some(v) = boundary.iter().find(|&&v| !g.contains(v)) {
        return Err(invalid(format!("boundary vertex {v} is not in the graph")));
    }
    Ok(set)
}

/// A plane embedding of `g` whose outer walks carry `boundary` in disc
/// order (either orientation), or `None` if there is none.
pub fn plane_with_boundary(g: &Graph, boundary: &[Vertex]) -> Result<Option<PlaneEmbedding>> {
    let set = check_boundary(g, boundary)?;
    if boundary.is_empty() {
        return Ok(planar_embed(g));
    }
    let z = g
        .fresh_vertex()
        .ok_or_else(|| invalid("no free vertex id for the apex"))?;
    let t = boundary.len();
    let mut fake = HashSet::new();
    let mut rim = Vec::new();
    if t >= 2 {
        for i in 0..if t == 2 { 1 } else { t } {
            let (x, y) = norm(boundary[i], boundary[(i + 1) % t]);
            if !g.has_edge(x, y) {
                fake.insert((x, y));
            }
            rim.push((x, y));
        }
    }
    let h = g.add_vertex(z, set)?.add_edges(rim)?;
    let Some(rh) = rotation_system(&h) else {
        return Ok(None);
    };
    let mut rotation = BTreeMap::new();
    for (v, list) in rh {
        if v == z {
            continue;
        }
        let kept: Vec<Vertex> = list
            .into_iter()
            .filter(|&u| u != z && !fake.contains(&norm(u, v)))
            .collect();
        rotation.insert(v, kept);
    }
    let faces = trace_faces(&rotation)
        .ok_or_else(|| Error::InternalConsistency("apex deletion broke the rotation".into()))?;
    let comps = g.components();
    let rev: Vec<Vertex> = boundary.iter().rev().copied().collect();
    for seq in [boundary, rev.as_slice()] {
        let mut outer = Vec::with_capacity(comps.len());
        for c in &comps {
            let sub: Vec<Vertex> = seq.iter().copied().filter(|&v| c.contains(v)).collect();
            let mine = faces.iter().filter(|f| c.contains(f[0]));
            let pick = if sub.is_empty() {
                mine.max_by_key(|f| f.len()).cloned()
            } else {
                mine.into_iter()
                    .find(|f| cyclic_subsequence(f, &sub))
                    .cloned()
            };
            match pick {
                Some(f) => outer.push(f),
                None => break,
            }
        }
        if outer.len() == comps.len() {
            let e = PlaneEmbedding {
                rotation: rotation.clone(),
                outer_walks: outer,
            };
            if e.validate(g) && e.has_boundary_order(g, boundary) {
                return Ok(Some(e));
            }
        }
    }
    Err(Error::InternalConsistency(
        "planar apex extension yielded no boundary face".into(),
    ))
}

fn check_groups(g: &Graph, groups: &[VertexSet]) -> Result<()> {
    let mut all = VertexSet::EMPTY;
    for (i, a) in groups.iter().enumerate() {
        if a.is_empty() {
            return Err(invalid(format!("group {i} is empty")));
        }
        if !a.is_subset(g.vertices()) {
            return Err(invalid(format!("group {i} contains non-vertices")));
        }
        if a.intersects(all) {
            return Err(invalid(format!("group {i} overlaps an earlier group")));
        }
        all |= *a;
        let n = g.neighborhood_of(*a);
        if n.len() > 3 {
            return Err(invalid(format!("group {i} has {} neighbors", n.len())));
        }
    }
    for (i, a) in groups.iter().enumerate() {
        let n = g.neighborhood_of(*a);
        if let Some(j) = (0..groups.len()).find(|&j| j != i && n.intersects(groups[j])) {
            return Err(invalid(format!("group {i} has a neighbor in group {j}")));
        }
    }
    Ok(())
}

/// p(G, 𝒜): delete every group and make each group's neighborhood a clique.
pub fn p_reduction(g: &Graph, groups: &[VertexSet]) -> Result<Graph> {
    check_groups(g, groups)?;
    let mut all = VertexSet::EMPTY;
    let mut extra = Vec::new();
    for a in groups {
        all |= *a;
        let n = g.neighborhood_of(*a).to_vec();
        for i in 0..n.len() {
            for j in i + 1..n.len() {
                extra.push((n[i], n[j]));
            }
        }
    }
    g.remove_vertices(all).add_edges(extra)
}

/// Certificate that `(G, 𝒜, b_1, …, b_n)` is 3-planar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreePlanarWitness {
    pub groups: Vec<VertexSet>,
    pub reduced: Graph,
    pub embedding: PlaneEmbedding,
    pub boundary: Vec<Vertex>,
}

impl ThreePlanarWitness {
    /// Reduces `g` by `groups` and embeds with the boundary order; `None`
    /// when the reduced graph has no such embedding.
    pub fn build(g: &Graph, groups: Vec<VertexSet>, boundary: Vec<Vertex>) -> Result<Option<Self>> {
        let reduced = p_reduction(g, &groups)?;
        if groups
            .iter()
            .any(|a| boundary.iter().any(|&b| a.contains(b)))
        {
            return Err(invalid("a boundary vertex lies in a group"));
        }
        Ok(
            plane_with_boundary(&reduced, &boundary)?.map(|embedding| ThreePlanarWitness {
                groups,
                reduced,
                embedding,
                boundary,
            }),
        )
    }
}

pub fn validate_three_planar(g: &Graph, w: &ThreePlanarWitness) -> bool {
    let Ok(reduced) = p_reduction(g, &w.groups) else {
        return false;
    };
    let bset: VertexSet = w.boundary.iter().collect();
    bset.len() == w.boundary.len()
        && w.groups.iter().all(|a| a.is_disjoint(bset))
        && reduced == w.reduced
        && bset.is_subset(reduced.vertices())
        && w.embedding.validate(&reduced)
        && w.embedding.has_boundary_order(&reduced, &w.boundary)
}

/// The vertices sharing a face with `w`, in cycle order, provided they
/// induce a cycle.
pub fn cofacial_cycle(e: &PlaneEmbedding, g: &Graph, w: Vertex) -> Result<Option<Cycle>> {
    if !g.contains(w) {
        return Err(invalid(format!("{w} is not a vertex")));
    }
    if e.outer_vertices().contains(w) {
        return Err(invalid(format!("{w} lies on the outer face")));
    }
    let set = e.cofacial(w);
    let h = g.induced(set);
    if set.len() < 3 || !h.is_connected() || set.iter().any(|v| h.degree(v) != 2) {
        return Ok(None);
    }
    let start = set.first().expect("nonempty");
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = h.neighbors(start).first().expect("degree 2");
    while cur != start {
        order.push(cur);
        let next = (h.neighbors(cur).without(prev)).first().expect("degree 2");
        prev = cur;
        cur = next;
    }
    Ok(Some(Cycle::new(order)))
}

/// Three paths from `w` to distinct vertices of `a`, pairwise meeting only
/// at `w`, each meeting the cofacial cycle of `w` and the set `a` exactly
/// once.
pub fn fan_to_boundary(
    e: &PlaneEmbedding,
    g: &Graph,
    w: Vertex,
    a: VertexSet,
) -> Result<Option<PathFan>> {
    let Some(c) = cofacial_cycle(e, g, w)? else {
        return Err(invalid(format!("the cofacial set of {w} is not a cycle")));
    };
    if a.contains(w) {
        return Err(invalid("w lies in the target set"));
    }
    let cw = c.vertex_set();
    let mut fan = Fan::new(g, w, a, g.vertices(), |x, y| x == w || !cw.contains(y));
    if fan.run(3) < 3 {
        return Ok(None);
    }
    let paths: Vec<Path> = fan.paths();
    let targets = paths.iter().map(|p| p.last().expect("nonempty")).collect();
    Ok(Some(PathFan {
        center: w,
        targets,
        paths,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wheel(rim: usize) -> Graph {
        let mut edges: Vec<_> = (1..=rim).map(|i| (0, i)).collect();
        edges.extend((1..=rim).map(|i| (i, i % rim + 1)));
        Graph::from_edges(rim + 1, edges).unwrap()
    }

    fn octahedron() -> Graph {
        // antipodal pairs (0,5) (1,3) (2,4)
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if !matches!((u, v), (0, 5) | (1, 3) | (2, 4)) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(6, edges).unwrap()
    }

    #[test]
    fn k4_planar_k5_not() {
        let e = planar_embed(&Graph::complete(4)).unwrap();
        assert!(e.validate(&Graph::complete(4)));
        assert_eq!(e.faces().unwrap().len(), 4);
        assert!(planar_embed(&Graph::complete(5)).is_none());
        let k33 = Graph::from_edges(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j)))).unwrap();
        assert!(planar_embed(&k33).is_none());
    }

    #[test]
    fn forests_and_disconnected() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (1, 3), (4, 5)]).unwrap();
        let e = planar_embed(&g).unwrap();
        assert!(e.validate(&g));
        assert_eq!(e.outer_walks.len(), 3);
    }

    #[test]
    fn c4_boundary_orders() {
        let c4 = Graph::cycle(4);
        assert!(plane_with_boundary(&c4, &[0, 1, 2, 3]).unwrap().is_some());
        assert!(plane_with_boundary(&c4, &[3, 2, 1, 0]).unwrap().is_some());
        assert!(plane_with_boundary(&c4, &[0, 2, 1, 3]).unwrap().is_none());
        for order in [[0, 1, 2, 3], [0, 2, 1, 3], [0, 1, 3, 2]] {
            assert!(plane_with_boundary(&Graph::complete(4), &order)
                .unwrap()
                .is_none());
        }
        assert!(plane_with_boundary(&c4, &[0, 0]).is_err());
    }

    #[test]
    fn interleaved_components_rejected() {
        let g = Graph::from_edges(4, [(0, 2), (1, 3)]).unwrap();
        assert!(plane_with_boundary(&g, &[0, 1, 2, 3]).unwrap().is_none());
        let e = plane_with_boundary(&g, &[0, 2, 1, 3]).unwrap().unwrap();
        assert!(e.has_boundary_order(&g, &[0, 2, 3, 1]));
    }

    #[test]
    fn reduction_examples() {
        let k4p = Graph::complete(4)
            .add_vertex(4, VertexSet::singleton(0))
            .unwrap();
        assert_eq!(
            p_reduction(&k4p, &[VertexSet::singleton(4)]).unwrap(),
            Graph::complete(4)
        );
        let p = Graph::path(3);
        let r = p_reduction(&p, &[VertexSet::singleton(1)]).unwrap();
        assert!(r.has_edge(0, 2));
        assert_eq!(r.order(), 2);
        assert_eq!(p_reduction(&p, &[]).unwrap(), p);
        let star = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        assert!(p_reduction(&star, &[VertexSet::singleton(0)]).is_err());
    }

    #[test]
    fn witness_validation() {
        let c4 = Graph::cycle(4);
        let w = ThreePlanarWitness::build(&c4, vec![], vec![0, 1, 2, 3])
            .unwrap()
            .unwrap();
        assert!(validate_three_planar(&c4, &w));
        let mut bad = w.clone();
        bad.boundary = vec![0, 2, 1, 3];
        assert!(!validate_three_planar(&c4, &bad));
    }

    #[test]
    fn wheel_hub_cofacial() {
        let w5 = wheel(5);
        let e = plane_with_boundary(&w5, &[1, 2, 3]).unwrap().unwrap();
        let c = cofacial_cycle(&e, &w5, 0).unwrap().unwrap();
        assert_eq!(c.vertex_set(), VertexSet::range(6).without(0));
        assert!(c.is_cycle_in(&w5));
        let a: VertexSet = [1, 2, 3].iter().collect();
        let fan = fan_to_boundary(&e, &w5, 0, a).unwrap().unwrap();
        assert!(fan.paths.iter().all(|p| p.len() == 2));
        assert!(cofacial_cycle(&e, &w5, 1).is_err());
    }

    #[test]
    fn octahedron_cofacial() {
        let g = octahedron();
        let e = plane_with_boundary(&g, &[0, 1, 2]).unwrap().unwrap();
        let c = cofacial_cycle(&e, &g, 5).unwrap().unwrap();
        assert_eq!(c.vertex_set(), g.neighbors(5));
    }
}
