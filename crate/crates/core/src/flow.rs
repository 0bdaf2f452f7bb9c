//! Unit vertex-capacity max flow via vertex splitting.
//!
//! Augmenting paths are found by BFS over arcs inserted in ascending vertex
//! order, so results are reproducible.

use std::collections::VecDeque;

use crate::bitset::{Vertex, VertexSet};
use crate::graph::{Graph, Path};

const INF: u32 = u32::MAX / 2;

#[derive(Clone, Copy)]
struct Arc {
    to: usize,
    cap: u32,
    orig: u32,
}

pub(crate) struct Network {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    src: usize,
    snk: usize,
    flow: usize,
}

#[inline]
fn vin(v: Vertex) -> usize {
    2 * v
}

#[inline]
fn vout(v: Vertex) -> usize {
    2 * v + 1
}

impl Network {
    fn new(bound: usize) -> Network {
        let nodes = 2 * bound + 2;
        Network {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
            src: 2 * bound,
            snk: 2 * bound + 1,
            flow: 0,
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let i = self.arcs.len();
        self.arcs.push(Arc { to, cap, orig: cap });
        self.arcs.push(Arc {
            to: from,
            cap: 0,
            orig: 0,
        });
        self.out[from].push(i);
        self.out[to].push(i + 1);
    }

    /// Augments one unit along a shortest residual path. Returns false when
    /// the flow is maximum.
    fn augment(&mut self) -> bool {
        let mut pred = vec![usize::MAX; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[self.src] = true;
        let mut queue = VecDeque::from([self.src]);
        'bfs: while let Some(x) = queue.pop_front() {
            for &a in &self.out[x] {
                let arc = self.arcs[a];
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    pred[arc.to] = a;
                    if arc.to == self.snk {
                        break 'bfs;
                    }
                    queue.push_back(arc.to);
                }
            }
        }
        if !seen[self.snk] {
            return false;
        }
        let mut x = self.snk;
        while x != self.src {
            let a = pred[x];
            self.arcs[a].cap -= 1;
            self.arcs[a ^ 1].cap += 1;
            x = self.arcs[a ^ 1].to;
        }
        self.flow += 1;
        true
    }

    fn run(&mut self, limit: usize) -> usize {
        while self.flow < limit && self.augment() {}
        self.flow
    }

    fn flow_on(&self, a: usize) -> u32 {
        self.arcs[a].orig.saturating_sub(self.arcs[a].cap)
    }
}

/// A fan problem: independent paths from `center` to distinct vertices of
/// `targets`, internally using only `usable`, touching `targets` only at
/// their last vertex.
pub(crate) struct Fan<'g> {
    g: &'g Graph,
    center: Vertex,
    net: Network,
}

impl<'g> Fan<'g> {
    /// `arc_ok(x, y)` may veto individual moves (used for the "first step
    /// only" restriction of cofacial fans).
    pub(crate) fn new(
        g: &'g Graph,
        center: Vertex,
        targets: VertexSet,
        usable: VertexSet,
        arc_ok: impl Fn(Vertex, Vertex) -> bool,
    ) -> Fan<'g> {
        let mut fan = Fan::closed(g, center, targets, usable, arc_ok);
        fan.open_targets(targets & g.vertices());
        fan
    }

    /// Like [`Fan::new`], but no target accepts flow until opened.
    pub(crate) fn closed(
        g: &'g Graph,
        center: Vertex,
        targets: VertexSet,
        usable: VertexSet,
        arc_ok: impl Fn(Vertex, Vertex) -> bool,
    ) -> Fan<'g> {
        let bound = g.vertices().last().map_or(0, |v| v + 1);
        let mut net = Network::new(bound);
        let usable = (usable & g.vertices()) - targets;
        let usable = usable.without(center);
        let targets = (targets & g.vertices()).without(center);
        net.add_arc(net.src, vout(center), INF);
        for v in usable {
            net.add_arc(vin(v), vout(v), 1);
        }
        for x in usable.with(center) {
            for y in g.neighbors(x) & (usable | targets) {
                if arc_ok(x, y) {
                    net.add_arc(vout(x), vin(y), 1);
                }
            }
        }
        Fan { g, center, net }
    }

    /// Allows flow to end at `targets` (in ascending order).
    pub(crate) fn open_targets(&mut self, targets: VertexSet) {
        for a in targets.without(self.center) {
            let snk = self.net.snk;
            self.net.add_arc(vin(a), snk, 1);
        }
    }

    pub(crate) fn run(&mut self, limit: usize) -> usize {
        self.net.run(limit)
    }

    /// Decomposes the current flow into paths, sorted by target.
    pub(crate) fn paths(&self) -> Vec<Path> {
        let net = &self.net;
        let mut used = vec![0u32; net.arcs.len()];
        let mut out = Vec::new();
        for _ in 0..net.flow {
            let mut path = vec![self.center];
            let mut x = vout(self.center);
            loop {
                let next = net.out[x]
                    .iter()
                    .copied()
                    .find(|&a| a % 2 == 0 && net.flow_on(a) > used[a]);
                let Some(a) = next else { break };
                used[a] += 1;
                let y = net.arcs[a].to;
                if y == net.snk {
                    break;
                }
                if y.is_multiple_of(2) {
                    path.push(y / 2);
                }
                x = y;
            }
            debug_assert!(path.len() >= 2);
            out.push(Path::new(path));
        }
        out.sort_by_key(|p| p.last());
        debug_assert!(out.iter().all(|p| p.is_path_in(self.g)));
        out
    }
}

/// Maximum number of internally disjoint `s`-`t` paths for nonadjacent
/// `s`, `t`, capped at `limit`.
pub(crate) fn local_connectivity(g: &Graph, s: Vertex, t: Vertex, limit: usize) -> usize {
    let bound = g.vertices().last().map_or(0, |v| v + 1);
    let mut net = Network::new(bound);
    net.add_arc(net.src, vout(s), INF);
    net.add_arc(vin(t), net.snk, INF);
    let inner = g.vertices().without(s).without(t);
    for v in inner {
        net.add_arc(vin(v), vout(v), 1);
    }
    for x in inner.with(s) {
        for y in g.neighbors(x) - VertexSet::singleton(s) {
            net.add_arc(vout(x), vin(y), 1);
        }
    }
    net.run(limit)
}
