//! Statements, verdicts and certificate re-validation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use tk5kit_core::graph6::parse_line;
use tk5kit_core::{
    side_graph, validate_classified_path, Graph, K4MinusWitness, K4Mode, Path, PlaneEmbedding,
    Separation, SubdivisionWitness, TKConstraints, Vertex, VertexSet,
};

use crate::roles::{find_roles, RoleAssignment};

/// The checkable statements. Serialized under their customary ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Statement {
    /// TK5 avoiding `x1` as a branch vertex, K4^- near `x1`, or TK5 after
    /// cutting `x1` down to five edges.
    #[serde(rename = "theorem-1.1")]
    Main,
    /// TK5 through the last edge of a nonseparating path.
    #[serde(rename = "lemma-2.5")]
    PathTk5,
    /// 5-separation with a planar side.
    #[serde(rename = "lemma-2.7")]
    PlanarSide,
    /// 5-separation whose boundary holds a triangle.
    #[serde(rename = "lemma-2.8")]
    TriangleCut,
    /// Six outer vertices of an almost planar graph.
    #[serde(rename = "lemma-2.9")]
    SixSet,
    /// Apex over a planar graph.
    #[serde(rename = "lemma-2.10")]
    ApexPlanar,
    /// Nonseparating path from a neighbour of `x1`.
    #[serde(rename = "lemma-3.1")]
    ClassifyPath,
}

impl Statement {
    pub const ALL: [Statement; 7] = [
        Statement::Main,
        Statement::PathTk5,
        Statement::PlanarSide,
        Statement::TriangleCut,
        Statement::SixSet,
        Statement::ApexPlanar,
        Statement::ClassifyPath,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::Main => "theorem-1.1",
            Statement::PathTk5 => "lemma-2.5",
            Statement::PlanarSide => "lemma-2.7",
            Statement::TriangleCut => "lemma-2.8",
            Statement::SixSet => "lemma-2.9",
            Statement::ApexPlanar => "lemma-2.10",
            Statement::ClassifyPath => "lemma-3.1",
        }
    }

    /// Disjunct labels in checking order.
    pub fn disjuncts(self) -> &'static [&'static str] {
        match self {
            Statement::PathTk5 => &["tk5"],
            Statement::PlanarSide | Statement::SixSet | Statement::ApexPlanar => &["i", "ii"],
            Statement::Main | Statement::TriangleCut | Statement::ClassifyPath => {
                &["i", "ii", "iii"]
            }
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Statement::ALL
            .into_iter()
            .find(|st| st.id() == s)
            .ok_or_else(|| format!("unknown statement {s:?}"))
    }
}

/// The data a statement is applied to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "statement")]
pub enum StatementInput {
    #[serde(rename = "theorem-1.1")]
    Main { roles: RoleAssignment },
    /// `path` runs from `x1` to `x2`; its edge into `x2` must lie on the TK5.
    #[serde(rename = "lemma-2.5")]
    PathTk5 { roles: RoleAssignment, path: Path },
    #[serde(rename = "lemma-2.7")]
    PlanarSide { separation: Separation, a: Vertex },
    /// `triangle[0]` plays the distinguished vertex.
    #[serde(rename = "lemma-2.8")]
    TriangleCut {
        separation: Separation,
        triangle: [Vertex; 3],
    },
    #[serde(rename = "lemma-2.9")]
    SixSet { set: VertexSet, a: Vertex },
    #[serde(rename = "lemma-2.10")]
    ApexPlanar { a: Vertex },
    #[serde(rename = "lemma-3.1")]
    ClassifyPath { roles: RoleAssignment },
}

impl StatementInput {
    pub fn statement(&self) -> Statement {
        match self {
            StatementInput::Main { .. } => Statement::Main,
            StatementInput::PathTk5 { .. } => Statement::PathTk5,
            StatementInput::PlanarSide { .. } => Statement::PlanarSide,
            StatementInput::TriangleCut { .. } => Statement::TriangleCut,
            StatementInput::SixSet { .. } => Statement::SixSet,
            StatementInput::ApexPlanar { .. } => Statement::ApexPlanar,
            StatementInput::ClassifyPath { .. } => Statement::ClassifyPath,
        }
    }

    /// The vertex the TK5/K4^- disjuncts revolve around.
    pub fn pivot(&self) -> Vertex {
        match self {
            StatementInput::Main { roles }
            | StatementInput::PathTk5 { roles, .. }
            | StatementInput::ClassifyPath { roles } => roles.x1,
            StatementInput::PlanarSide { a, .. }
            | StatementInput::SixSet { a, .. }
            | StatementInput::ApexPlanar { a } => *a,
            StatementInput::TriangleCut { triangle, .. } => triangle[0],
        }
    }

    /// Compact key for sorting reports.
    pub fn sort_key(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// One TK5 in an edge-restricted host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedTk5 {
    pub constraints: TKConstraints,
    pub witness: SubdivisionWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    Tk5 {
        constraints: TKConstraints,
        witness: SubdivisionWitness,
    },
    /// `avoid` set: found in `g - avoid`; `degree2` set: that vertex is in
    /// the missing pair.
    K4Minus {
        witness: K4MinusWitness,
        mode: K4Mode,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        avoid: Option<Vertex>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree2: Option<Vertex>,
    },
    /// A TK5 for every admissible restriction at one vertex. For the main
    /// statement `roles` records the chosen `x2, y1, y2`.
    Tk5Family {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        roles: Option<RoleAssignment>,
        members: Vec<RestrictedTk5>,
    },
    /// `apex`, if set, is deleted from side 2 before embedding it.
    Separation {
        separation: Separation,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        apex: Option<Vertex>,
        boundary_order: Vec<Vertex>,
        embedding: PlaneEmbedding,
    },
    ClassifiedPath {
        side: usize,
        path: Path,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Outcome {
    Certified {
        disjunct: String,
        certificate: Certificate,
    },
    /// Every disjunct was refuted by exhaustive search.
    Counterexample { refuted: Vec<String> },
    /// No disjunct certified and at least one search ran out of budget.
    BudgetExhausted {
        exhausted: Vec<String>,
        refuted: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub graph_id: String,
    pub graph6: String,
    pub input: StatementInput,
    pub k4_mode: K4Mode,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Verdict {
    pub fn statement(&self) -> Statement {
        self.input.statement()
    }

    pub fn is_certified(&self) -> bool {
        matches!(self.outcome, Outcome::Certified { .. })
    }

    pub fn graph(&self) -> Option<Graph> {
        parse_line(&self.graph6).ok()
    }
}

/// The constraints a TK5 disjunct must be searched under.
pub(crate) fn forbid_pivot(pivot: Vertex) -> TKConstraints {
    TKConstraints::forbid(pivot)
}

/// Restricted hosts for the "for any choice" disjunct: at `x` keep `fixed`
/// plus each `extra`-subset of the other neighbours.
pub(crate) fn restrictions(
    g: &Graph,
    x: Vertex,
    fixed: VertexSet,
    extra: usize,
) -> Vec<TKConstraints> {
    let pool = g.neighbors(x) - fixed;
    let mut out = Vec::new();
    tk5kit_core::bitset::for_each_subset(pool, extra, |s| {
        out.push(TKConstraints {
            host_restriction: Some((x, fixed | s)),
            ..Default::default()
        });
        true
    });
    out
}

fn family_ok(g: &Graph, expected: &[TKConstraints], members: &[RestrictedTk5]) -> bool {
    expected.len() == members.len()
        && expected
            .iter()
            .zip(members)
            .all(|(c, m)| *c == m.constraints && c.admits(g, &m.witness))
}

/// Whether the certificate proves the named disjunct of the statement for
/// `g`. Hypotheses are not re-checked here.
pub fn validate_certificate(
    g: &Graph,
    input: &StatementInput,
    disjunct: &str,
    mode: K4Mode,
    cert: &Certificate,
) -> bool {
    let st = input.statement();
    if !st.disjuncts().contains(&disjunct) {
        return false;
    }
    let pivot = input.pivot();
    let k4_ok = |w: &K4MinusWitness, m: K4Mode, avoid: Option<Vertex>, degree2: Option<Vertex>| {
        m == mode
            && match (avoid, degree2) {
                (Some(a), None) => {
                    a == pivot && !w.vertices.contains(&a) && w.validate(&g.remove_vertex(a), m)
                }
                (None, Some(d)) => {
                    d == pivot
                        && (w.missing_pair.0 == d || w.missing_pair.1 == d)
                        && w.validate(g, m)
                }
                _ => false,
            }
    };
    let tk5_forbid = |constraints: &TKConstraints, witness: &SubdivisionWitness| {
        *constraints == forbid_pivot(pivot) && constraints.admits(g, witness)
    };
    match (st, disjunct, cert) {
        (
            Statement::Main
            | Statement::PlanarSide
            | Statement::TriangleCut
            | Statement::ApexPlanar
            | Statement::ClassifyPath,
            "i",
            Certificate::Tk5 {
                constraints,
                witness,
            },
        ) => tk5_forbid(constraints, witness),
        (
            Statement::Main
            | Statement::PlanarSide
            | Statement::TriangleCut
            | Statement::ApexPlanar
            | Statement::ClassifyPath,
            "ii",
            Certificate::K4Minus {
                witness,
                mode: m,
                avoid,
                degree2,
            },
        )
        | (
            Statement::SixSet,
            "i",
            Certificate::K4Minus {
                witness,
                mode: m,
                avoid,
                degree2,
            },
        ) => k4_ok(witness, *m, *avoid, *degree2),
        (
            Statement::Main,
            "iii",
            Certificate::Tk5Family {
                roles: Some(r),
                members,
            },
        ) => {
            r.x1 == pivot
                && r.z.is_none()
                && r.validate(g).is_ok()
                && family_ok(
                    g,
                    &restrictions(g, pivot, [r.x2, r.y1, r.y2].iter().collect(), 2),
                    members,
                )
        }
        (
            Statement::TriangleCut,
            "iii",
            Certificate::Tk5Family {
                roles: None,
                members,
            },
        ) => {
            let StatementInput::TriangleCut { triangle, .. } = input else {
                return false;
            };
            let fixed: VertexSet = [triangle[1], triangle[2]].iter().collect();
            family_ok(g, &restrictions(g, pivot, fixed, 3), members)
        }
        (
            Statement::PathTk5,
            "tk5",
            Certificate::Tk5 {
                constraints,
                witness,
            },
        ) => {
            let StatementInput::PathTk5 { roles, path } = input else {
                return false;
            };
            let vs = path.vertices();
            vs.len() >= 2
                && *constraints == path_tk5_constraints(roles, vs[vs.len() - 2])
                && constraints.admits(g, witness)
        }
        (Statement::ClassifyPath, "iii", Certificate::ClassifiedPath { side, path }) => {
            let StatementInput::ClassifyPath { roles } = input else {
                return false;
            };
            let Some((z0, z1)) = roles.z else {
                return false;
            };
            validate_classified_path(
                g,
                [roles.x1, roles.x2, roles.y1, roles.y2, z0, z1],
                *side,
                path,
            )
        }
        (
            Statement::SixSet,
            "ii",
            Certificate::Separation {
                separation,
                apex: Some(a),
                boundary_order,
                embedding,
            },
        ) => {
            let StatementInput::SixSet { set, a: a0 } = input else {
                return false;
            };
            let s = separation.boundary();
            *a == *a0
                && separation.is_separation_of(g)
                && s.len() == 5
                && s.contains(*a)
                && set.is_subset(separation.side1)
                && separation.side2.len() >= 7
                && separation.side1 != s
                && {
                    let h = side_graph(g, separation).remove_vertex(*a);
                    let order: VertexSet = boundary_order.iter().collect();
                    order == s.without(*a)
                        && boundary_order.len() == 4
                        && embedding.validate(&h)
                        && embedding.has_boundary_order(&h, boundary_order)
                }
        }
        _ => false,
    }
}

pub(crate) fn path_tk5_constraints(roles: &RoleAssignment, v: Vertex) -> TKConstraints {
    TKConstraints {
        required_branch: [roles.x1, roles.x2, roles.y1, roles.y2].iter().collect(),
        required_edge: Some((roles.x2.min(v), roles.x2.max(v))),
        ..Default::default()
    }
}

/// Re-validates a certified verdict against its own graph.
pub fn validate_verdict(v: &Verdict) -> bool {
    match &v.outcome {
        Outcome::Certified {
            disjunct,
            certificate,
        } => v
            .graph()
            .is_some_and(|g| validate_certificate(&g, &v.input, disjunct, v.k4_mode, certificate)),
        _ => true,
    }
}

/// Main-statement role completions available at `x1`.
pub(crate) fn completions_at(g: &Graph, x1: Vertex) -> Vec<RoleAssignment> {
    find_roles(g, None)
        .into_iter()
        .filter(|r| r.x1 == x1)
        .collect()
}
