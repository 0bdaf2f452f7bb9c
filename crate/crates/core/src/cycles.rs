//! Cycles through three prescribed vertices of a 2-connected graph, or one
//! of the three Watkins–Mesner cut configurations proving there is none.
//!
//! A cycle through `y1, y2, y3` exists iff some induced `y2`-`y3` path `Q`
//! avoiding `y1` leaves two independent paths from `y1` to `{y2, y3}` off
//! the interior of `Q` (shortcutting the `y2`-`y3` arc of any such cycle
//! keeps it a cycle). The second half is a max-flow query.

use serde::{Deserialize, Serialize};

use crate::bitset::{Vertex, VertexSet};
use crate::blocks::is_biconnected;
use crate::budget::Budget;
use crate::error::{invalid, Error, Result};
use crate::flow::Fan;
use crate::graph::{Cycle, Graph};
use crate::induced::{InducedPaths, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObstructionKind {
    /// One 2-cut separating the three vertices into different bundles.
    SharedCut,
    /// Three 2-cuts through a common vertex `z`.
    StarCuts,
    /// Three pairwise disjoint 2-cuts whose remainder splits in two.
    PrismCuts,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WatkinsObstruction {
    pub kind: ObstructionKind,
    /// One cut for `SharedCut`, otherwise `S_{y_1}, S_{y_2}, S_{y_3}`.
    pub cuts: Vec<VertexSet>,
    /// The common vertex of the star cuts.
    pub hub: Option<Vertex>,
    /// `D_{y_1}, D_{y_2}, D_{y_3}`.
    pub bundles: [VertexSet; 3],
    /// For `PrismCuts`, the two components of `G - (D_1 ∪ D_2 ∪ D_3)`.
    pub residual: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum CycleOutcome {
    Cycle { cycle: Cycle },
    Obstruction(WatkinsObstruction),
}

fn is_two_cut(g: &Graph, s: VertexSet) -> bool {
    s.len() == 2 && s.is_subset(g.vertices()) && g.components_within(g.vertices() - s).len() >= 2
}

/// `d` is a nonempty union of components of `G - s` containing `y`.
fn is_bundle(g: &Graph, s: VertexSet, d: VertexSet, y: Vertex) -> bool {
    d.contains(y)
        && d.is_disjoint(s)
        && d.is_subset(g.vertices())
        && g.neighborhood_of(d).is_subset(s)
}

fn pairwise_disjoint(sets: &[VertexSet]) -> bool {
    let mut all = VertexSet::EMPTY;
    for s in sets {
        if s.intersects(all) {
            return false;
        }
        all |= *s;
    }
    true
}

/// Checks the clauses of `o.kind` verbatim against `g` and the triple.
pub fn validate_obstruction(g: &Graph, ys: [Vertex; 3], o: &WatkinsObstruction) -> bool {
    let d = &o.bundles;
    if !pairwise_disjoint(d) {
        return false;
    }
    match o.kind {
        ObstructionKind::SharedCut => {
            let [s] = o.cuts.as_slice() else { return false };
            is_two_cut(g, *s) && (0..3).all(|i| is_bundle(g, *s, d[i], ys[i]))
        }
        ObstructionKind::StarCuts => {
            let Some(z) = o.hub else { return false };
            let [a, b, c] = o.cuts.as_slice() else {
                return false;
            };
            let cuts = [*a, *b, *c];
            cuts.iter().all(|&s| is_two_cut(g, s) && s.contains(z))
                && pairwise_disjoint(&cuts.map(|s| s.without(z)))
                && (0..3).all(|i| is_bundle(g, cuts[i], d[i], ys[i]))
        }
        ObstructionKind::PrismCuts => {
            let [a, b, c] = o.cuts.as_slice() else {
                return false;
            };
            let cuts = [*a, *b, *c];
            if !cuts.iter().all(|&s| is_two_cut(g, s))
                || !pairwise_disjoint(&cuts)
                || !(0..3).all(|i| is_bundle(g, cuts[i], d[i], ys[i]))
            {
                return false;
            }
            let rest = g.vertices() - (d[0] | d[1] | d[2]);
            let comps = g.components_within(rest);
            comps.len() == 2
                && comps
                    .iter()
                    .all(|c| cuts.iter().all(|&s| (*c & s).len() == 1))
                && {
                    let mut r = comps.clone();
                    let mut claimed = o.residual.clone();
                    r.sort_by_key(|c| c.first());
                    claimed.sort_by_key(|c| c.first());
                    claimed.is_empty() || claimed == r
                }
        }
    }
}

fn find_cycle(g: &Graph, ys: [Vertex; 3], budget: &Budget) -> Result<Option<Cycle>> {
    let [y1, y2, y3] = ys;
    let meter = budget.meter();
    let allowed = g.vertices().without(y1);
    let mut found = None;
    InducedPaths::new(g, y2, y3, allowed, &meter).run(&mut |_, _| true, &mut |q| {
        let inner: VertexSet = q[1..q.len() - 1].iter().collect();
        let ends = VertexSet::singleton(y2).with(y3);
        let mut fan = Fan::new(g, y1, ends, g.vertices() - inner, |_, _| true);
        if fan.run(2) < 2 {
            return Ok(Step::Continue);
        }
        let mut paths = fan.paths();
        if paths[0].last() != Some(y2) {
            paths.swap(0, 1);
        }
        let to2 = paths[0].vertices();
        let to3 = paths[1].vertices();
        let mut cyc: Vec<Vertex> = to2.to_vec();
        cyc.extend(&q[1..]);
        cyc.extend(to3.iter().rev().skip(1).take(to3.len() - 2));
        found = Some(Cycle::new(cyc));
        Ok(Step::Stop)
    })?;
    Ok(found)
}

fn two_cuts(g: &Graph, avoid: VertexSet) -> Vec<VertexSet> {
    let vs = g.vertices().to_vec();
    let mut out = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let s = VertexSet::singleton(vs[i]).with(vs[j]);
            if !s.intersects(avoid) && is_two_cut(g, s) {
                out.push(s);
            }
        }
    }
    out
}

fn component_of(g: &Graph, s: VertexSet, y: Vertex) -> VertexSet {
    g.reach(y, g.vertices() - s)
}

fn shared_cut(g: &Graph, ys: [Vertex; 3], cuts: &[VertexSet]) -> Option<WatkinsObstruction> {
    cuts.iter().find_map(|&s| {
        let d = ys.map(|y| component_of(g, s, y));
        pairwise_disjoint(&d).then(|| WatkinsObstruction {
            kind: ObstructionKind::SharedCut,
            cuts: vec![s],
            hub: None,
            bundles: d,
            residual: vec![],
        })
    })
}

/// Candidate bundles for `y` at cut `s`: its own component, and everything
/// outside the component holding the other two vertices.
fn bundle_options(g: &Graph, s: VertexSet, y: Vertex, others: [Vertex; 2]) -> Vec<VertexSet> {
    let own = component_of(g, s, y);
    let mut out = vec![own];
    if others.iter().all(|&o| !s.contains(o)) {
        let c = component_of(g, s, others[0]);
        if c.contains(others[1]) && !c.contains(y) {
            let rest = g.vertices() - s - c;
            if rest != own {
                out.push(rest);
            }
        }
    }
    out
}

fn star_cuts(g: &Graph, ys: [Vertex; 3], cuts: &[VertexSet]) -> Option<WatkinsObstruction> {
    let yset: VertexSet = ys.iter().collect();
    for z in g.vertices() - yset {
        let options: Vec<Vec<(VertexSet, VertexSet)>> = (0..3)
            .map(|i| {
                cuts.iter()
                    .filter(|s| s.contains(z) && !s.contains(ys[i]))
                    .map(|&s| (s, component_of(g, s, ys[i])))
                    .collect()
            })
            .collect();
        for &(s1, d1) in &options[0] {
            for &(s2, d2) in &options[1] {
                if s1 == s2 || d1.intersects(d2) {
                    continue;
                }
                for &(s3, d3) in &options[2] {
                    if s3 == s1 || s3 == s2 || d3.intersects(d1 | d2) {
                        continue;
                    }
                    let o = WatkinsObstruction {
                        kind: ObstructionKind::StarCuts,
                        cuts: vec![s1, s2, s3],
                        hub: Some(z),
                        bundles: [d1, d2, d3],
                        residual: vec![],
                    };
                    if validate_obstruction(g, ys, &o) {
                        return Some(o);
                    }
                }
            }
        }
    }
    None
}

fn prism_cuts(g: &Graph, ys: [Vertex; 3], cuts: &[VertexSet]) -> Option<WatkinsObstruction> {
    let options: Vec<Vec<(VertexSet, VertexSet)>> = (0..3)
        .map(|i| {
            let others = [ys[(i + 1) % 3], ys[(i + 2) % 3]];
            cuts.iter()
                .filter(|s| !s.contains(ys[i]))
                .flat_map(|&s| {
                    bundle_options(g, s, ys[i], others)
                        .into_iter()
                        .map(move |d| (s, d))
                })
                .collect()
        })
        .collect();
    for &(s1, d1) in &options[0] {
        for &(s2, d2) in &options[1] {
            if s1.intersects(s2) || d1.intersects(d2) {
                continue;
            }
            for &(s3, d3) in &options[2] {
                if s3.intersects(s1 | s2) || d3.intersects(d1 | d2) {
                    continue;
                }
                let rest = g.vertices() - (d1 | d2 | d3);
                let residual = g.components_within(rest);
                let o = WatkinsObstruction {
                    kind: ObstructionKind::PrismCuts,
                    cuts: vec![s1, s2, s3],
                    hub: None,
                    bundles: [d1, d2, d3],
                    residual,
                };
                if validate_obstruction(g, ys, &o) {
                    return Some(o);
                }
            }
        }
    }
    None
}

/// A cycle through all of `ys`, or the lowest-numbered obstruction kind
/// that applies.
pub fn cycle_through_three(g: &Graph, ys: [Vertex; 3], budget: &Budget) -> Result<CycleOutcome> {
    let yset: VertexSet = ys.iter().collect();
    if yset.len() != 3 || !yset.is_subset(g.vertices()) {
        return Err(invalid("need three distinct vertices of the graph"));
    }
    if !is_biconnected(g) {
        return Err(invalid("graph is not 2-connected"));
    }
    if let Some(c) = find_cycle(g, ys, budget)? {
        debug_assert!(c.is_cycle_in(g) && yset.is_subset(c.vertex_set()));
        return Ok(CycleOutcome::Cycle { cycle: c });
    }
    let cuts = two_cuts(g, VertexSet::EMPTY);
    let free: Vec<VertexSet> = cuts
        .iter()
        .copied()
        .filter(|s| !s.intersects(yset))
        .collect();
    shared_cut(g, ys, &free)
        .or_else(|| star_cuts(g, ys, &cuts))
        .or_else(|| prism_cuts(g, ys, &cuts))
        .map(CycleOutcome::Obstruction)
        .ok_or_else(|| {
            Error::InternalConsistency(format!("no cycle through {ys:?} and no obstruction found"))
        })
}
