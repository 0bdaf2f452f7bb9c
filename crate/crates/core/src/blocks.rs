//! Blocks and cut vertices (Hopcroft–Tarjan).

use serde::{Deserialize, Serialize};

use crate::bitset::{Vertex, VertexSet};
use crate::graph::{norm, Edge, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub vertices: VertexSet,
    pub edges: Vec<Edge>,
}

impl Block {
    /// 2-connected, as opposed to a single edge or an isolated vertex.
    pub fn is_nontrivial(&self) -> bool {
        self.vertices.len() >= 3
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    /// Ordered by ascending vertex lists.
    pub blocks: Vec<Block>,
    pub cut_vertices: VertexSet,
}

impl BlockDecomposition {
    pub fn blocks_containing(&self, v: Vertex) -> impl Iterator<Item = &Block> + '_ {
        self.blocks.iter().filter(move |b| b.vertices.contains(v))
    }
}

struct State<'g> {
    g: &'g Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<Edge>,
    blocks: Vec<Block>,
    cuts: VertexSet,
}

const UNSEEN: usize = usize::MAX;

impl State<'_> {
    fn dfs(&mut self, u: Vertex, parent: Option<Vertex>) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        let mut children = 0;
        for v in self.g.neighbors(u) {
            if self.disc[v] == UNSEEN {
                children += 1;
                self.stack.push((u, v));
                self.dfs(v, Some(u));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    if parent.is_some() || children > 1 {
                        self.cuts.insert(u);
                    }
                    self.pop_block(u, v);
                }
            } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                self.stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }

    fn pop_block(&mut self, u: Vertex, v: Vertex) {
        let mut vertices = VertexSet::EMPTY;
        let mut edges = Vec::new();
        while let Some(e) = self.stack.pop() {
            vertices.insert(e.0);
            vertices.insert(e.1);
            edges.push(norm(e.0, e.1));
            if e == (u, v) {
                break;
            }
        }
        edges.sort_unstable();
        self.blocks.push(Block { vertices, edges });
    }
}

pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let bound = g.vertices().last().map_or(0, |v| v + 1);
    let mut st = State {
        g,
        disc: vec![UNSEEN; bound],
        low: vec![UNSEEN; bound],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cuts: VertexSet::EMPTY,
    };
    for v in g.vertices() {
        if st.disc[v] == UNSEEN {
            if g.degree(v) == 0 {
                st.disc[v] = st.time;
                st.time += 1;
                st.blocks.push(Block {
                    vertices: VertexSet::singleton(v),
                    edges: Vec::new(),
                });
            } else {
                st.dfs(v, None);
            }
        }
    }
    let mut blocks = st.blocks;
    blocks.sort_by_key(|a| a.vertices.to_vec());
    BlockDecomposition {
        blocks,
        cut_vertices: st.cuts,
    }
}

/// Connected with no cut vertex and at least 3 vertices.
pub fn is_biconnected(g: &Graph) -> bool {
    g.order() >= 3 && {
        let d = block_decomposition(g);
        d.blocks.len() == 1
    }
}
