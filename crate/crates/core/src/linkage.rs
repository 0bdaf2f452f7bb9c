//! Two disjoint paths and crossings in societies, with 3-planar witnesses
//! when no linkage exists.
//!
//! Linkages are found by enumerating induced `s1`-`t1` paths (any linkage can
//! be shortcut to one whose first path is induced) and routing the second
//! path by BFS in what is left. When none exists, vertex sets cut off from
//! the terminals by at most three vertices are folded into groups, largest
//! first, and the reduced graph is embedded with the terminals in order.

use serde::{Deserialize, Serialize};

use crate::bitset::{for_each_subset, Vertex, VertexSet};
use crate::budget::{Budget, Meter};
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, Path};
use crate::induced::{InducedPaths, Step};
use crate::planarity::{validate_three_planar, ThreePlanarWitness};

/// Vertex-disjoint paths, the i-th joining `terminals[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Linkage {
    pub terminals: Vec<(Vertex, Vertex)>,
    pub paths: Vec<Path>,
}

impl Linkage {
    pub fn validate(&self, g: &Graph) -> bool {
        if self.terminals.len() != self.paths.len() {
            return false;
        }
        let mut used = VertexSet::EMPTY;
        for (p, &(s, t)) in self.paths.iter().zip(&self.terminals) {
            if !p.is_path_in(g) || p.first() != Some(s) || p.last() != Some(t) {
                return false;
            }
            if p.vertex_set().intersects(used) {
                return false;
            }
            used |= p.vertex_set();
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum TwoPaths {
    Linked(Linkage),
    ThreePlanar(ThreePlanarWitness),
}

/// Positions `i < j < k < l` in a society order with disjoint paths
/// `v_i → v_k` and `v_j → v_l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingQuadruple {
    pub indices: [usize; 4],
    pub linkage: Linkage,
}

impl CrossingQuadruple {
    pub fn validate(&self, g: &Graph, order: &[Vertex]) -> bool {
        let [i, j, k, l] = self.indices;
        i < j
            && j < k
            && k < l
            && l < order.len()
            && self.linkage.terminals == [(order[i], order[k]), (order[j], order[l])]
            && self.linkage.validate(g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Society {
    Crossing(CrossingQuadruple),
    ThreePlanar(ThreePlanarWitness),
}

fn search_linkage(
    g: &Graph,
    (s1, t1): (Vertex, Vertex),
    (s2, t2): (Vertex, Vertex),
    meter: &Meter,
) -> Result<Option<Linkage>> {
    let allowed = g.vertices().without(s2).without(t2);
    let mut found = None;
    InducedPaths::new(g, s1, t1, allowed, meter).run(
        &mut |_, set| g.reach(s2, g.vertices() - set).contains(t2),
        &mut |p| {
            let set: VertexSet = p.iter().collect();
            match g.shortest_path(s2, t2, g.vertices() - set) {
                Some(q) => {
                    found = Some(Linkage {
                        terminals: vec![(s1, t1), (s2, t2)],
                        paths: vec![Path::new(p.to_vec()), q],
                    });
                    Ok(Step::Stop)
                }
                None => Ok(Step::Continue),
            }
        },
    )?;
    Ok(found)
}

/// Disjoint paths `s1 → t1` and `s2 → t2`, if any.
pub fn find_linkage(
    g: &Graph,
    first: (Vertex, Vertex),
    second: (Vertex, Vertex),
    budget: &Budget,
) -> Result<Option<Linkage>> {
    let terms = [first.0, first.1, second.0, second.1];
    check_distinct(g, &terms)?;
    search_linkage(g, first, second, &budget.meter())
}

fn check_distinct(g: &Graph, terms: &[Vertex]) -> Result<()> {
    let set: VertexSet = terms.iter().collect();
    if set.len() != terms.len() {
        return Err(invalid("terminals must be distinct"));
    }
    if let Some(v) = terms.iter().find(|&&v| !g.contains(v)) {
        return Err(invalid(format!("terminal {v} is not a vertex")));
    }
    Ok(())
}

/// Folds terminal-free pieces cut off by at most three vertices. Each
/// round folds the largest piece (lexicographically first among equals) of
/// the current reduced graph; earlier groups touching it are absorbed.
pub fn fold_small_cuts(g: &Graph, terminals: VertexSet) -> Vec<VertexSet> {
    let mut groups: Vec<VertexSet> = Vec::new();
    let mut h = g.clone();
    loop {
        let mut best: Option<VertexSet> = None;
        let verts = h.vertices();
        for k in 0..=3.min(verts.len()) {
            for_each_subset(verts, k, |s| {
                for c in h.components_within(verts - s) {
                    if c.intersects(terminals) {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some(b) => {
                            c.len() > b.len() || (c.len() == b.len() && c.to_vec() < b.to_vec())
                        }
                    };
                    if better {
                        best = Some(c);
                    }
                }
                true
            });
        }
        let Some(c) = best else { break };
        // absorb earlier groups whose neighborhood meets the new piece
        let mut group = c;
        groups.retain(|a| {
            if g.neighborhood_of(*a).intersects(c) {
                group |= *a;
                false
            } else {
                true
            }
        });
        groups.push(group);
        let n = h.neighborhood_of(c).to_vec();
        let mut clique = Vec::new();
        for i in 0..n.len() {
            for j in i + 1..n.len() {
                clique.push((n[i], n[j]));
            }
        }
        h = h
            .remove_vertices(c)
            .add_edges(clique)
            .expect("neighbors of a piece are vertices");
    }
    groups.sort_by_key(|a| a.first());
    groups
}

fn witness_for(g: &Graph, boundary: Vec<Vertex>) -> Result<ThreePlanarWitness> {
    let terminals: VertexSet = boundary.iter().collect();
    let groups = fold_small_cuts(g, terminals);
    let w = ThreePlanarWitness::build(g, groups, boundary)?.ok_or_else(|| {
        Error::InternalConsistency("no linkage, yet the folded graph has no disc embedding".into())
    })?;
    if !validate_three_planar(g, &w) {
        return Err(Error::InternalConsistency(
            "built witness fails validation".into(),
        ));
    }
    Ok(w)
}

/// Either disjoint `s1 → t1`, `s2 → t2` paths or a witness that
/// `(g, s1, s2, t1, t2)` is 3-planar.
pub fn two_disjoint_paths(
    g: &Graph,
    s1: Vertex,
    s2: Vertex,
    t1: Vertex,
    t2: Vertex,
    budget: &Budget,
) -> Result<TwoPaths> {
    check_distinct(g, &[s1, s2, t1, t2])?;
    if let Some(l) = search_linkage(g, (s1, t1), (s2, t2), &budget.meter())? {
        return Ok(TwoPaths::Linked(l));
    }
    Ok(TwoPaths::ThreePlanar(witness_for(g, vec![s1, s2, t1, t2])?))
}

/// Either a crossing pair of disjoint paths between interleaved society
/// vertices, or a witness that `(g, v_1, …, v_n)` is 3-planar.
pub fn society_dichotomy(g: &Graph, order: &[Vertex], budget: &Budget) -> Result<Society> {
    if order.len() < 4 {
        return Err(invalid("a society needs at least 4 vertices"));
    }
    check_distinct(g, order)?;
    let meter = budget.meter();
    let n = order.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let first = (order[i], order[k]);
                    let second = (order[j], order[l]);
                    if let Some(linkage) = search_linkage(g, first, second, &meter)? {
                        return Ok(Society::Crossing(CrossingQuadruple {
                            indices: [i, j, k, l],
                            linkage,
                        }));
                    }
                }
            }
        }
    }
    Ok(Society::ThreePlanar(witness_for(g, order.to_vec())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_links() {
        let g = Graph::complete(4);
        match two_disjoint_paths(&g, 0, 1, 2, 3, &Budget::default()).unwrap() {
            TwoPaths::Linked(l) => {
                assert!(l.validate(&g));
                assert_eq!(l.paths, vec![Path::new(vec![0, 2]), Path::new(vec![1, 3])]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn c4_is_three_planar() {
        let g = Graph::cycle(4);
        match two_disjoint_paths(&g, 0, 1, 2, 3, &Budget::default()).unwrap() {
            TwoPaths::ThreePlanar(w) => {
                assert!(w.groups.is_empty());
                assert!(validate_three_planar(&g, &w));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn terminals_must_differ() {
        assert!(two_disjoint_paths(&Graph::complete(4), 0, 0, 1, 2, &Budget::default()).is_err());
    }

    #[test]
    fn society_examples() {
        let b = Budget::default();
        let k5 = Graph::complete(5);
        assert!(matches!(
            society_dichotomy(&k5, &[4, 2, 0, 1], &b).unwrap(),
            Society::Crossing(_)
        ));
        let c6 = Graph::cycle(6);
        match society_dichotomy(&c6, &[0, 1, 2, 3, 4, 5], &b).unwrap() {
            Society::ThreePlanar(w) => assert!(w.groups.is_empty()),
            other => panic!("{other:?}"),
        }
        assert!(society_dichotomy(&c6, &[0, 1, 2], &b).is_err());
    }

    #[test]
    fn folds_hidden_piece() {
        // C4 terminals plus a K4 hanging off three cycle vertices: the K4
        // part has 3 attachments and gets folded
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
        for (u, v) in [(4, 5), (4, 6), (5, 6), (4, 0), (5, 1), (6, 2)] {
            edges.push((u, v));
        }
        let g = Graph::from_edges(7, edges).unwrap();
        match two_disjoint_paths(&g, 0, 1, 2, 3, &Budget::default()).unwrap() {
            TwoPaths::ThreePlanar(w) => {
                assert_eq!(w.groups, vec![[4, 5, 6].iter().collect()]);
                assert!(validate_three_planar(&g, &w));
            }
            TwoPaths::Linked(l) => panic!("{l:?}"),
        }
    }
}
