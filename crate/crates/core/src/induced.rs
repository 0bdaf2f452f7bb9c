//! Depth-first enumeration of induced paths with chord pruning.
//!
//! A path is extended only to vertices not adjacent to any earlier path
//! vertex other than the tip, so every emitted path is induced in the host.
//! When the tip is adjacent to the target the path must end there.

use crate::bitset::{Vertex, VertexSet};
use crate::budget::Meter;
use crate::error::Result;
use crate::graph::Graph;

pub(crate) struct InducedPaths<'a, 'm, 'b> {
    g: &'a Graph,
    target: Vertex,
    allowed: VertexSet,
    meter: &'m Meter<'b>,
    path: Vec<Vertex>,
}

/// What to do after seeing a path or prefix.
#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Step {
    Continue,
    Stop,
}

impl<'a, 'm, 'b> InducedPaths<'a, 'm, 'b> {
    /// Paths from `s` to `t` whose interior lies in `allowed`.
    pub(crate) fn new(
        g: &'a Graph,
        s: Vertex,
        t: Vertex,
        allowed: VertexSet,
        meter: &'m Meter<'b>,
    ) -> Self {
        InducedPaths {
            g,
            target: t,
            allowed: allowed.without(s).without(t) & g.vertices(),
            meter,
            path: vec![s],
        }
    }

    /// Calls `prune(prefix, prefix_set)` on every prefix (returning false cuts
    /// the branch) and `visit(path)` on every complete path. Returns `true`
    /// if `visit` stopped the enumeration.
    pub(crate) fn run(
        mut self,
        prune: &mut dyn FnMut(&[Vertex], VertexSet) -> bool,
        visit: &mut dyn FnMut(&[Vertex]) -> Result<Step>,
    ) -> Result<bool> {
        let s = self.path[0];
        if s == self.target {
            return Ok(visit(&self.path)? == Step::Stop);
        }
        let set = VertexSet::singleton(s);
        self.rec(set, set, prune, visit)
    }

    fn rec(
        &mut self,
        set: VertexSet,
        banned: VertexSet,
        prune: &mut dyn FnMut(&[Vertex], VertexSet) -> bool,
        visit: &mut dyn FnMut(&[Vertex]) -> Result<Step>,
    ) -> Result<bool> {
        self.meter.tick()?;
        let t = self.target;
        if banned.contains(t) || !prune(&self.path, set) {
            return Ok(false);
        }
        let tip = *self.path.last().expect("nonempty");
        let nt = self.g.neighbors(tip);
        if nt.contains(t) {
            self.path.push(t);
            let stop = visit(&self.path)? == Step::Stop;
            self.path.pop();
            return Ok(stop);
        }
        let free = self.allowed - banned - nt;
        // the target must stay reachable through vertices not yet excluded
        let cands = nt & (self.allowed - banned);
        let through = free.with(t);
        if !cands.iter().any(|x| self.g.reach(x, through).contains(t)) {
            return Ok(false);
        }
        let next_banned = banned | nt.with(tip);
        for x in cands {
            self.path.push(x);
            let stop = self.rec(set.with(x), next_banned.with(x), prune, visit)?;
            self.path.pop();
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::graph::Path;

    fn all_paths(g: &Graph, s: Vertex, t: Vertex) -> Vec<Vec<Vertex>> {
        let b = Budget::unlimited();
        let m = b.meter();
        let mut out = Vec::new();
        InducedPaths::new(g, s, t, g.vertices(), &m)
            .run(&mut |_, _| true, &mut |p| {
                out.push(p.to_vec());
                Ok(Step::Continue)
            })
            .unwrap();
        out
    }

    #[test]
    fn cycle_has_two_induced_routes() {
        let c6 = Graph::cycle(6);
        let ps = all_paths(&c6, 0, 3);
        assert_eq!(ps, vec![vec![0, 1, 2, 3], vec![0, 5, 4, 3]]);
    }

    #[test]
    fn complete_graph_only_direct_edge() {
        assert_eq!(all_paths(&Graph::complete(5), 0, 4), vec![vec![0, 4]]);
    }

    #[test]
    fn every_path_is_induced() {
        let g = Graph::from_edges(
            7,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 4),
                (4, 5),
                (5, 3),
                (1, 5),
                (2, 6),
                (6, 3),
                (4, 2),
            ],
        )
        .unwrap();
        let ps = all_paths(&g, 0, 3);
        assert!(!ps.is_empty());
        for p in ps {
            assert!(Path::new(p).is_induced_in(&g));
        }
    }
}
