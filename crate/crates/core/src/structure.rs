//! Chains of blocks and the searches for nonseparating induced paths.

use serde::{Deserialize, Serialize};

use crate::bitset::{for_each_subset, Vertex, VertexSet};
use crate::blocks::block_decomposition;
use crate::budget::Budget;
use crate::connectivity::is_k_a_connected;
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, Path, Separation};
use crate::induced::{InducedPaths, Step};
use crate::planarity::{is_planar, plane_with_boundary, PlaneEmbedding};

/// Blocks `B_1, …, B_k` of a host, consecutive ones sharing one vertex,
/// running from `u` to `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockChain {
    pub blocks: Vec<VertexSet>,
    pub u: Vertex,
    pub v: Vertex,
}

impl BlockChain {
    pub fn vertex_set(&self) -> VertexSet {
        self.blocks.iter().fold(VertexSet::EMPTY, |a, &b| a | b)
    }

    /// Chain invariants, with every `B_i` a block of `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        let k = self.blocks.len();
        if k == 0 || self.u == self.v {
            return false;
        }
        let d = block_decomposition(g);
        if !self
            .blocks
            .iter()
            .all(|b| d.blocks.iter().any(|x| x.vertices == *b))
        {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let common = (self.blocks[i] & self.blocks[j]).len();
                if (j == i + 1 && common != 1) || (j > i + 1 && common != 0) {
                    return false;
                }
            }
        }
        let (first, last) = (self.blocks[0], self.blocks[k - 1]);
        if k == 1 {
            first.contains(self.u) && first.contains(self.v)
        } else {
            first.contains(self.u)
                && !self.blocks[1].contains(self.u)
                && last.contains(self.v)
                && !self.blocks[k - 2].contains(self.v)
        }
    }

    /// Whether the chain is all of `g`.
    pub fn spans(&self, g: &Graph) -> bool {
        self.validate(g) && block_decomposition(g).blocks.len() == self.blocks.len()
    }
}

/// `g` itself as a chain of blocks from `u` to `v`, if it is one.
pub fn chain_of_blocks(g: &Graph, u: Vertex, v: Vertex) -> Result<Option<BlockChain>> {
    if u == v {
        return Err(invalid("chain endpoints must differ"));
    }
    if !g.contains(u) || !g.contains(v) {
        return Err(invalid("chain endpoint is not a vertex"));
    }
    Ok(chain_in(g, u, v))
}

fn chain_in(g: &Graph, u: Vertex, v: Vertex) -> Option<BlockChain> {
    let d = block_decomposition(g);
    let cuts = d.cut_vertices;
    if cuts.contains(u) || cuts.contains(v) {
        return None;
    }
    let mut cur = d.blocks.iter().position(|b| b.vertices.contains(u))?;
    let mut seen = vec![cur];
    let mut entry: Option<Vertex> = None;
    loop {
        let out = d.blocks[cur].vertices & cuts;
        let out = match entry {
            Some(c) => out.without(c),
            None => out,
        };
        match out.len() {
            0 => break,
            1 => {
                let c = out.first().expect("one");
                let others: Vec<usize> = (0..d.blocks.len())
                    .filter(|&i| i != cur && d.blocks[i].vertices.contains(c))
                    .collect();
                if others.len() != 1 {
                    return None;
                }
                cur = others[0];
                seen.push(cur);
                entry = Some(c);
            }
            _ => return None,
        }
    }
    if seen.len() != d.blocks.len() || !d.blocks[cur].vertices.contains(v) {
        return None;
    }
    let chain = BlockChain {
        blocks: seen.iter().map(|&i| d.blocks[i].vertices).collect(),
        u,
        v,
    };
    chain.validate(g).then_some(chain)
}

/// The two outcomes of the chain dichotomy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum ChainOutcome {
    /// Induced `x1`-`x2` path whose removal leaves a chain from `y1` to `y2`.
    Path { path: Path, chain: BlockChain },
    /// 4-separation with the chain and `x1, x2` on side 1; side 2 (minus
    /// edges inside the boundary) is embedded with the boundary outside.
    Separation {
        separation: Separation,
        boundary_order: Vec<Vertex>,
        embedding: PlaneEmbedding,
    },
}

/// Side 2 of a separation as its own graph, boundary edges left to side 1.
pub fn side_graph(g: &Graph, sep: &Separation) -> Graph {
    let s = sep.boundary();
    let h = g.induced(sep.side2);
    let inner: Vec<_> = h
        .edges()
        .into_iter()
        .filter(|&(a, b)| s.contains(a) && s.contains(b))
        .collect();
    h.remove_edges(inner)
}

/// Cyclic orders of `s` up to rotation and reflection, first element fixed.
pub fn cyclic_orders(s: VertexSet) -> Vec<Vec<Vertex>> {
    let v = s.to_vec();
    if v.len() <= 3 {
        return vec![v];
    }
    let mut out = Vec::new();
    let mut rest: Vec<Vertex> = v[1..].to_vec();
    permute(&mut rest, 0, &mut |p| {
        // keep one of each mirror pair
        if p[0] < p[p.len() - 1] {
            let mut o = vec![v[0]];
            o.extend_from_slice(p);
            out.push(o);
        }
    });
    out.sort();
    out
}

fn permute(a: &mut Vec<Vertex>, k: usize, f: &mut dyn FnMut(&[Vertex])) {
    if k == a.len() {
        f(a);
        return;
    }
    for i in k..a.len() {
        a.swap(k, i);
        permute(a, k + 1, f);
        a.swap(k, i);
    }
}

/// An order of `set` in which `g` embeds in a disc with `set` on the
/// boundary, if `(g, set)` is planar at all.
pub fn planar_with_set(g: &Graph, set: VertexSet) -> Result<Option<(Vec<Vertex>, PlaneEmbedding)>> {
    // (g, set) is planar iff g plus a vertex joined to set is planar
    let z = g
        .fresh_vertex()
        .ok_or_else(|| invalid("no free vertex id for the apex"))?;
    if !set.is_subset(g.vertices()) {
        return Err(invalid("boundary vertex is not in the graph"));
    }
    if !is_planar(&g.add_vertex(z, set)?) {
        return Ok(None);
    }
    for order in cyclic_orders(set) {
        if let Some(e) = plane_with_boundary(g, &order)? {
            return Ok(Some((order, e)));
        }
    }
    Err(Error::InternalConsistency(
        "apex test and boundary embedding disagree".into(),
    ))
}

/// Some order in which side 2 embeds with the boundary on the outer face.
pub fn planar_side(g: &Graph, sep: &Separation) -> Result<Option<(Vec<Vertex>, PlaneEmbedding)>> {
    planar_with_set(&side_graph(g, sep), sep.boundary())
}

/// Separations of order `k` with `core` in side 1, both sides proper and
/// `|side2| ≥ min_side2`, in ascending boundary order.
pub fn separations_around(
    g: &Graph,
    k: usize,
    core: VertexSet,
    min_side2: usize,
    mut f: impl FnMut(Separation) -> Result<bool>,
) -> Result<()> {
    let all = g.vertices();
    let mut out = Ok(());
    for_each_subset(all, k, |s| {
        let comps = g.components_within(all - s);
        let (pinned, free): (Vec<VertexSet>, Vec<VertexSet>) =
            comps.into_iter().partition(|c| c.intersects(core));
        let side1_min = pinned.iter().fold(s | core, |a, &c| a | c);
        if free.is_empty() {
            return true;
        }
        if free.len() > 20 {
            out = Err(invalid("too many components to enumerate separation sides"));
            return false;
        }
        for mask in 1u32..(1 << free.len()) {
            let chosen = (0..free.len())
                .filter(|i| mask >> i & 1 == 1)
                .fold(VertexSet::EMPTY, |a, i| a | free[i]);
            let side2 = s | chosen;
            let side1 = all - chosen;
            debug_assert!(side1_min.is_subset(side1));
            if side2.len() < min_side2 || side1 == s {
                continue;
            }
            match f(Separation::new(side1, side2)) {
                Ok(true) => {}
                Ok(false) => return false,
                Err(e) => {
                    out = Err(e);
                    return false;
                }
            }
        }
        true
    });
    out
}

fn distinct(g: &Graph, vs: &[Vertex]) -> Result<()> {
    let set: VertexSet = vs.iter().collect();
    if set.len() != vs.len() {
        return Err(invalid("role vertices must be distinct"));
    }
    if let Some(v) = vs.iter().find(|&&v| !g.contains(v)) {
        return Err(invalid(format!("vertex {v} is not in the graph")));
    }
    Ok(())
}

/// An induced `x1`-`x2` path `X'` in `g - x1x2` leaving a chain of blocks
/// from `y1` to `y2` that contains `b`; failing that, a planar 4-separation
/// around `b + {x1, x2}` with at least six vertices on the far side.
#[allow(clippy::too_many_arguments)]
pub fn chain_dichotomy_search(
    g: &Graph,
    x1: Vertex,
    x2: Vertex,
    y1: Vertex,
    y2: Vertex,
    x: &Path,
    b: &BlockChain,
    budget: &Budget,
) -> Result<ChainOutcome> {
    distinct(g, &[x1, x2, y1, y2])?;
    let a: VertexSet = [x1, x2, y1, y2].iter().collect();
    if !is_k_a_connected(g, 4, a)? {
        return Err(invalid("graph is not (4, {x1, x2, y1, y2})-connected"));
    }
    let h = g.remove_edges([(x1, x2)]);
    if !x.is_path_in(&h) || x.first() != Some(x1) || x.last() != Some(x2) {
        return Err(invalid("x is not an x1-x2 path avoiding the edge x1x2"));
    }
    if b.u != y1 || b.v != y2 || !b.validate(&g.remove_vertices(x.vertex_set())) {
        return Err(invalid("b is not a chain of blocks from y1 to y2 in g - x"));
    }
    let bv = b.vertex_set();
    let check = |p: &[Vertex]| -> Option<BlockChain> {
        let set: VertexSet = p.iter().collect();
        chain_in(&g.remove_vertices(set), y1, y2)
    };
    if x.is_induced_in(&h) {
        if let Some(chain) = check(x.vertices()) {
            return Ok(ChainOutcome::Path {
                path: x.clone(),
                chain,
            });
        }
    }
    let meter = budget.meter();
    let mut found = None;
    InducedPaths::new(&h, x1, x2, g.vertices() - bv, &meter).run(
        &mut |_, set| g.reach(y1, g.vertices() - set).contains(y2),
        &mut |p| {
            Ok(match check(p) {
                Some(chain) => {
                    found = Some(ChainOutcome::Path {
                        path: Path::new(p.to_vec()),
                        chain,
                    });
                    Step::Stop
                }
                None => Step::Continue,
            })
        },
    )?;
    if let Some(o) = found {
        return Ok(o);
    }
    let core = bv | VertexSet::singleton(x1).with(x2);
    separations_around(g, 4, core, 6, |sep| {
        meter.tick()?;
        if let Some((boundary_order, embedding)) = planar_side(g, &sep)? {
            found = Some(ChainOutcome::Separation {
                separation: sep,
                boundary_order,
                embedding,
            });
            return Ok(false);
        }
        Ok(true)
    })?;
    found.ok_or_else(|| {
        Error::InternalConsistency("neither an induced path nor a planar 4-separation".into())
    })
}

/// Re-checks a [`ChainOutcome`] against the dichotomy's conclusions.
pub fn validate_chain_outcome(
    g: &Graph,
    roles: [Vertex; 4],
    b: &BlockChain,
    o: &ChainOutcome,
) -> bool {
    let [x1, x2, y1, y2] = roles;
    match o {
        ChainOutcome::Path { path, chain } => {
            let h = g.remove_edges([(x1, x2)]);
            let rest = g.remove_vertices(path.vertex_set());
            path.is_induced_in(&h)
                && path.first() == Some(x1)
                && path.last() == Some(x2)
                && chain.u == y1
                && chain.v == y2
                && chain.spans(&rest)
                && b.blocks.iter().all(|blk| blk.is_subset(chain.vertex_set()))
        }
        ChainOutcome::Separation {
            separation,
            boundary_order,
            embedding,
        } => {
            let s = separation.boundary();
            let core = b.vertex_set().with(x1).with(x2);
            let order: VertexSet = boundary_order.iter().collect();
            separation.is_separation_of(g)
                && s.len() == 4
                && order == s
                && boundary_order.len() == 4
                && core.is_subset(separation.side1)
                && separation.side1 != s
                && separation.side2.len() >= 6
                && {
                    let h = side_graph(g, separation);
                    embedding.validate(&h) && embedding.has_boundary_order(&h, boundary_order)
                }
        }
    }
}

/// Checks the K4^- roles: `g[{x1, x2, y1, y2}]` is K4^- missing `y1y2`.
pub fn check_k4_minus_roles(
    g: &Graph,
    x1: Vertex,
    x2: Vertex,
    y1: Vertex,
    y2: Vertex,
) -> Result<()> {
    distinct(g, &[x1, x2, y1, y2])?;
    for (a, b) in [(x1, x2), (x1, y1), (x1, y2), (x2, y1), (x2, y2)] {
        if !g.has_edge(a, b) {
            return Err(invalid(format!(
                "{a}{b} is not an edge, so the roles do not induce K4^-"
            )));
        }
    }
    if g.has_edge(y1, y2) {
        return Err(invalid("y1y2 is an edge"));
    }
    Ok(())
}

/// Side `i` and an induced path `X` in `g - x1` from `z_i` to `x2` avoiding
/// `z_{1-i}`, such that `(g - x1) - X` is a chain of blocks from `y1` to
/// `y2` with `y1` or `y2` in a nontrivial block.
#[allow(clippy::too_many_arguments)]
pub fn classify_path_search(
    g: &Graph,
    x1: Vertex,
    x2: Vertex,
    y1: Vertex,
    y2: Vertex,
    z0: Vertex,
    z1: Vertex,
    budget: &Budget,
) -> Result<Option<(usize, Path)>> {
    check_k4_minus_roles(g, x1, x2, y1, y2)?;
    if z0 == z1 {
        return Err(invalid("z0 and z1 must differ"));
    }
    let forbidden: VertexSet = [x2, y1, y2].iter().collect();
    for z in [z0, z1] {
        if !g.neighbors(x1).contains(z) || forbidden.contains(z) {
            return Err(invalid(format!("{z} is not in N(x1) - {{x2, y1, y2}}")));
        }
    }
    let h = g.remove_vertex(x1);
    let meter = budget.meter();
    let zs = [z0, z1];
    for i in 0..2 {
        let allowed = h.vertices() - [zs[1 - i], y1, y2].iter().collect::<VertexSet>();
        let mut found = None;
        InducedPaths::new(&h, zs[i], x2, allowed, &meter).run(
            &mut |_, set| h.reach(y1, h.vertices() - set).contains(y2),
            &mut |p| {
                let set: VertexSet = p.iter().collect();
                let ok = chain_in(&h.remove_vertices(set), y1, y2).is_some_and(|c| {
                    c.blocks
                        .iter()
                        .any(|b| b.len() >= 3 && (b.contains(y1) || b.contains(y2)))
                });
                if ok {
                    found = Some(Path::new(p.to_vec()));
                    return Ok(Step::Stop);
                }
                Ok(Step::Continue)
            },
        )?;
        if let Some(p) = found {
            return Ok(Some((i, p)));
        }
    }
    Ok(None)
}

/// Re-checks a [`classify_path_search`] result.
pub fn validate_classified_path(g: &Graph, roles: [Vertex; 6], i: usize, x: &Path) -> bool {
    let [x1, x2, y1, y2, z0, z1] = roles;
    let zs = [z0, z1];
    if i > 1 {
        return false;
    }
    let h = g.remove_vertex(x1);
    let rest = h.remove_vertices(x.vertex_set());
    x.is_induced_in(&h)
        && x.first() == Some(zs[i])
        && x.last() == Some(x2)
        && !x.vertex_set().contains(zs[1 - i])
        && rest.contains(y1)
        && rest.contains(y2)
        && chain_in(&rest, y1, y2).is_some_and(|c| {
            c.blocks
                .iter()
                .any(|b| b.len() >= 3 && (b.contains(y1) || b.contains(y2)))
        })
}
