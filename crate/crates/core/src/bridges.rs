//! Bridges of a subgraph `L`: each chord of `L` on its own, and each
//! component of `G - V(L)` together with its attaching edges.

use crate::bitset::VertexSet;
use crate::error::{invalid, Result};
use crate::graph::{norm, Edge, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bridge {
    /// Vertices of the bridge outside `L` (empty for a chord).
    pub interior: VertexSet,
    pub attachments: VertexSet,
    pub edges: Vec<Edge>,
}

impl Bridge {
    pub fn is_chord(&self) -> bool {
        self.interior.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct BridgeDecomposition {
    pub host: Graph,
    pub skeleton: Graph,
    /// Chords first (ascending), then components by smallest vertex.
    pub bridges: Vec<Bridge>,
}

pub fn bridges_of(g: &Graph, l: &Graph) -> Result<BridgeDecomposition> {
    if !l.is_subgraph_of(g) {
        return Err(invalid("skeleton is not a subgraph of the host"));
    }
    let lv = l.vertices();
    let mut bridges = Vec::new();
    for (u, v) in g.induced(lv).edges() {
        if !l.has_edge(u, v) {
            bridges.push(Bridge {
                interior: VertexSet::EMPTY,
                attachments: VertexSet::singleton(u).with(v),
                edges: vec![(u, v)],
            });
        }
    }
    for comp in g.components_within(g.vertices() - lv) {
        let mut edges = Vec::new();
        let mut attachments = VertexSet::EMPTY;
        for u in comp {
            for v in g.neighbors(u) {
                if lv.contains(v) {
                    attachments.insert(v);
                    edges.push(norm(u, v));
                } else if u < v {
                    edges.push((u, v));
                }
            }
        }
        edges.sort_unstable();
        bridges.push(Bridge {
            interior: comp,
            attachments,
            edges,
        });
    }
    Ok(BridgeDecomposition {
        host: g.clone(),
        skeleton: l.clone(),
        bridges,
    })
}
