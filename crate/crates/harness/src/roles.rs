//! Role assignments `x1, x2, y1, y2` (and optionally `z0, z1`) for the
//! K4^- hypothesis.

use serde::{Deserialize, Serialize};
use tk5kit_core::{check_k4_minus_roles, Error, Graph, Result, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RoleAssignment {
    pub x1: Vertex,
    pub x2: Vertex,
    pub y1: Vertex,
    pub y2: Vertex,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<(Vertex, Vertex)>,
}

impl RoleAssignment {
    pub fn new(x1: Vertex, x2: Vertex, y1: Vertex, y2: Vertex) -> Self {
        RoleAssignment {
            x1,
            x2,
            y1,
            y2,
            z: None,
        }
    }

    pub fn with_z(self, z0: Vertex, z1: Vertex) -> Self {
        RoleAssignment {
            z: Some((z0, z1)),
            ..self
        }
    }

    /// Errors name the failed clause.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        check_k4_minus_roles(g, self.x1, self.x2, self.y1, self.y2)?;
        if let Some((z0, z1)) = self.z {
            if z0 == z1 {
                return Err(Error::InvalidArgument("z0 and z1 must differ".into()));
            }
            for z in [z0, z1] {
                if !g.has_edge(self.x1, z) || [self.x2, self.y1, self.y2].contains(&z) {
                    return Err(Error::InvalidArgument(format!(
                        "z = {z} is not in N(x1) - {{x2, y1, y2}}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Unordered pairs `{z0, z1}` available for these roles, ascending.
    pub fn z_pairs(&self, g: &Graph) -> Vec<(Vertex, Vertex)> {
        let zs = (g
            .neighbors(self.x1)
            .without(self.x2)
            .without(self.y1)
            .without(self.y2))
        .to_vec();
        let mut out = Vec::new();
        for i in 0..zs.len() {
            for j in i + 1..zs.len() {
                out.push((zs[i], zs[j]));
            }
        }
        out
    }
}

/// Assignments with `g[{x1,x2,y1,y2}]` an induced K4^- missing `y1y2`,
/// `y1 < y2`, sorted by `(x1, x2, y1, y2)` and truncated to `cap`.
pub fn find_roles(g: &Graph, cap: Option<usize>) -> Vec<RoleAssignment> {
    let mut out = Vec::new();
    for x1 in g.vertices() {
        for x2 in g.neighbors(x1) {
            let common = g.neighbors(x1) & g.neighbors(x2);
            for y1 in common {
                for y2 in common {
                    if y1 < y2 && !g.has_edge(y1, y2) {
                        out.push(RoleAssignment::new(x1, x2, y1, y2));
                        if cap.is_some_and(|c| out.len() >= c) {
                            return out;
                        }
                    }
                }
            }
        }
    }
    out
}

/// Default cap on assignments per graph.
pub const DEFAULT_ROLE_CAP: usize = 64;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k7_minus_edge_roles() {
        let g = Graph::complete(7).remove_edges([(5, 6)]);
        let r = find_roles(&g, None);
        // x1, x2: ordered adjacent pair from the other five vertices
        assert_eq!(r.len(), 20);
        assert!(r
            .iter()
            .all(|a| (a.y1, a.y2) == (5, 6) && a.validate(&g).is_ok()));
    }

    #[test]
    fn no_roles() {
        assert!(find_roles(&Graph::cycle(5), None).is_empty());
        assert!(find_roles(&Graph::complete(6), None).is_empty());
    }

    #[test]
    fn bad_z() {
        let g = Graph::complete(7).remove_edges([(5, 6)]);
        let r = RoleAssignment::new(0, 1, 5, 6);
        assert!(r.with_z(2, 3).validate(&g).is_ok());
        assert!(r.with_z(2, 2).validate(&g).is_err());
        assert!(r.with_z(2, 5).validate(&g).is_err());
        assert_eq!(r.z_pairs(&g), vec![(2, 3), (2, 4), (3, 4)]);
    }
}
