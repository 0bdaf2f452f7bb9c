//! Vertex connectivity, (k,A)-connectivity and independent-path fans.
//!
//! (k,A)-connectivity uses the fan definition imported from the companion
//! papers: every vertex outside `A` has `k` independent paths ending at `k`
//! distinct vertices of `A`, each path meeting `A` only at its end.

use serde::{Deserialize, Serialize};

use crate::bitset::{Vertex, VertexSet};
use crate::error::{invalid, Error, FanShortfall, Result};
use crate::flow::{local_connectivity, Fan};
use crate::graph::{Graph, Path};

/// Independent paths from `center`, the i-th ending at `targets[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathFan {
    pub center: Vertex,
    pub targets: Vec<Vertex>,
    pub paths: Vec<Path>,
}

impl PathFan {
    fn from_paths(center: Vertex, paths: Vec<Path>) -> PathFan {
        let targets = paths.iter().map(|p| p.last().expect("nonempty")).collect();
        PathFan {
            center,
            targets,
            paths,
        }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Checks every fan invariant against `g` and the target set `a`.
    pub fn validate(&self, g: &Graph, a: VertexSet) -> bool {
        let u = self.center;
        if !g.contains(u) || a.contains(u) || self.paths.len() != self.targets.len() {
            return false;
        }
        let mut seen_targets = VertexSet::EMPTY;
        let mut used = VertexSet::EMPTY;
        for (p, &t) in self.paths.iter().zip(&self.targets) {
            if !p.is_path_in(g) || p.first() != Some(u) || p.last() != Some(t) || p.len() < 2 {
                return false;
            }
            if seen_targets.contains(t) || p.vertex_set() & a != VertexSet::singleton(t) {
                return false;
            }
            seen_targets.insert(t);
            let rest = p.vertex_set().without(u);
            if rest.intersects(used) {
                return false;
            }
            used |= rest;
        }
        true
    }
}

/// κ(g): the fewest vertices whose removal disconnects `g` or leaves a
/// single vertex.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n < 2 {
        return Err(invalid("vertex connectivity needs at least 2 vertices"));
    }
    let vs = g.vertices();
    let mut best = vs.iter().map(|v| g.degree(v)).min().unwrap_or(0);
    for s in vs {
        for t in vs - g.neighbors(s) {
            if t <= s {
                continue;
            }
            if best == 0 {
                return Ok(0);
            }
            best = best.min(local_connectivity(g, s, t, best));
        }
    }
    Ok(best)
}

fn check_fan_args(g: &Graph, u: Vertex, a: VertexSet) -> Result<()> {
    if !g.contains(u) {
        return Err(invalid(format!("fan center {u} is not a vertex")));
    }
    if a.contains(u) {
        return Err(invalid(format!("fan center {u} lies in the target set")));
    }
    if !a.is_subset(g.vertices()) {
        return Err(invalid("target set contains non-vertices"));
    }
    Ok(())
}

/// Size of a largest fan from `u` to `a`, capped at `limit`.
pub fn max_fan_size(g: &Graph, u: Vertex, a: VertexSet, limit: usize) -> Result<usize> {
    check_fan_args(g, u, a)?;
    Ok(Fan::new(g, u, a, g.vertices(), |_, _| true).run(limit))
}

pub fn is_k_a_connected(g: &Graph, k: usize, a: VertexSet) -> Result<bool> {
    if k < 1 {
        return Err(invalid("k must be at least 1"));
    }
    if !a.is_subset(g.vertices()) {
        return Err(invalid("A contains non-vertices"));
    }
    Ok((g.vertices() - a)
        .iter()
        .all(|v| Fan::new(g, v, a, g.vertices(), |_, _| true).run(k) >= k))
}

/// `n` independent paths from `u` to distinct vertices of `a`, or `None` when
/// the max-flow value is below `n`.
pub fn independent_fan(g: &Graph, u: Vertex, a: VertexSet, n: usize) -> Result<Option<PathFan>> {
    if n < 1 {
        return Err(invalid("fan size must be at least 1"));
    }
    check_fan_args(g, u, a)?;
    let mut fan = Fan::new(g, u, a, g.vertices(), |_, _| true);
    if fan.run(n) < n {
        return Ok(None);
    }
    Ok(Some(PathFan::from_paths(u, fan.paths())))
}

/// A fan of `n` paths whose first `required.len()` paths end at the required
/// targets in order. Starts from a fan onto the required targets and keeps
/// augmenting; augmentation never releases a target once reached.
pub fn reroute_fan(
    g: &Graph,
    u: Vertex,
    a: VertexSet,
    required: &[Vertex],
    n: usize,
) -> Result<PathFan> {
    check_fan_args(g, u, a)?;
    let req: VertexSet = required.iter().collect();
    if req.len() != required.len() {
        return Err(invalid("required targets repeat"));
    }
    if !req.is_subset(a) {
        return Err(invalid("required targets must lie in A"));
    }
    if n < required.len() || n < 1 {
        return Err(invalid(
            "fan size must be at least 1 and cover the required targets",
        ));
    }
    let k = required.len();
    let mut fan = Fan::closed(g, u, a, g.vertices(), |_, _| true);
    fan.open_targets(req);
    let found = fan.run(k);
    if found < k {
        return Err(Error::NoSuchFan(FanShortfall::Required {
            found,
            wanted: k,
        }));
    }
    fan.open_targets(a - req);
    let max = fan.run(n);
    if max < n {
        return Err(Error::NoSuchFan(FanShortfall::Total { max, wanted: n }));
    }
    let mut rest = fan.paths();
    let mut paths = Vec::with_capacity(n);
    for &t in required {
        let i = rest
            .iter()
            .position(|p| p.last() == Some(t))
            .ok_or_else(|| Error::InternalConsistency(format!("rerouting lost target {t}")))?;
        paths.push(rest.remove(i));
    }
    paths.extend(rest);
    Ok(PathFan::from_paths(u, paths))
}
