//! Checking each statement's hypotheses and finding a certified disjunct.

use std::time::Instant;

use tk5kit_core::graph6::to_graph6;
use tk5kit_core::{
    classify_path_search, find_k4_minus, find_tk5, is_biconnected, is_k_a_connected, is_planar,
    planar_with_set, separations_around, side_graph, vertex_connectivity, Budget, Error, Graph,
    Path, Result, Separation, TKConstraints, Vertex, VertexSet,
};

use crate::roles::RoleAssignment;
use crate::verdict::{
    completions_at, forbid_pivot, path_tk5_constraints, restrictions, Certificate, Outcome,
    RestrictedTk5, StatementInput, Verdict,
};

use tk5kit_core::K4Mode;

fn fail(clause: &str) -> Error {
    Error::InvalidArgument(format!("hypothesis fails: {clause}"))
}

fn require(ok: bool, clause: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(fail(clause))
    }
}

fn five_connected_nonplanar(g: &Graph) -> Result<()> {
    require(
        g.order() >= 6 && vertex_connectivity(g)? >= 5,
        "graph is 5-connected",
    )?;
    require(!is_planar(g), "graph is nonplanar")
}

fn check_separation(g: &Graph, sep: &Separation, order: usize, min_side: usize) -> Result<()> {
    require(sep.is_separation_of(g), "(G1, G2) is a separation")?;
    require(
        sep.order() == order,
        &format!("separation has order {order}"),
    )?;
    require(
        sep.side1.len() >= min_side && sep.side2.len() >= min_side,
        &format!("both sides have at least {min_side} vertices"),
    )
}

/// Checks the statement's hypotheses for `g`, naming the first that fails.
pub fn check_hypotheses(g: &Graph, input: &StatementInput) -> Result<()> {
    match input {
        StatementInput::Main { roles } => {
            five_connected_nonplanar(g)?;
            require(roles.z.is_none(), "roles carry no z0, z1")?;
            roles.validate(g)
        }
        StatementInput::ClassifyPath { roles } => {
            five_connected_nonplanar(g)?;
            require(roles.z.is_some(), "z0, z1 are given")?;
            roles.validate(g)
        }
        StatementInput::PathTk5 { roles, path } => {
            five_connected_nonplanar(g)?;
            roles.validate(g)?;
            let h = g.remove_edges([(roles.x1, roles.x2)]);
            require(
                path.is_path_in(&h)
                    && path.first() == Some(roles.x1)
                    && path.last() == Some(roles.x2),
                "X is an x1-x2 path in G - x1x2",
            )?;
            require(
                !path.vertex_set().contains(roles.y1) && !path.vertex_set().contains(roles.y2),
                "y1, y2 are not on X",
            )?;
            let vs = path.vertices();
            require(
                Path::new(vs[..vs.len() - 1].to_vec()).is_induced_in(g),
                "X - x2 is induced in G",
            )?;
            require(
                is_biconnected(&g.remove_vertices(path.vertex_set())),
                "G - X is 2-connected",
            )
        }
        StatementInput::PlanarSide { separation, a } => {
            five_connected_nonplanar(g)?;
            check_separation(g, separation, 5, 7)?;
            require(separation.boundary().contains(*a), "a is in the boundary")?;
            let h = side_graph(g, separation).remove_vertex(*a);
            require(
                planar_with_set(&h, separation.boundary().without(*a))?.is_some(),
                "(G2 - a, boundary - a) is planar",
            )
        }
        StatementInput::TriangleCut {
            separation,
            triangle,
        } => {
            require(
                g.order() >= 6 && vertex_connectivity(g)? >= 5,
                "graph is 5-connected",
            )?;
            check_separation(g, separation, 5, 7)?;
            let [a, a1, a2] = *triangle;
            let s = separation.boundary();
            require(
                [a, a1, a2].iter().all(|&v| s.contains(v))
                    && a != a1
                    && a1 != a2
                    && a != a2
                    && g.has_edge(a, a1)
                    && g.has_edge(a1, a2)
                    && g.has_edge(a, a2),
                "the boundary holds the triangle a a1 a2",
            )
        }
        StatementInput::SixSet { set, a } => {
            require(set.len() == 6 && set.is_subset(g.vertices()), "|A| = 6")?;
            require(set.contains(*a), "a is in A")?;
            require(g.order() >= 8, "|V(G)| >= 8")?;
            require(
                planar_with_set(&g.remove_vertex(*a), set.without(*a))?.is_some(),
                "(G - a, A - a) is planar",
            )?;
            require(is_k_a_connected(g, 5, *set)?, "G is (5, A)-connected")
        }
        StatementInput::ApexPlanar { a } => {
            five_connected_nonplanar(g)?;
            require(g.contains(*a), "a is a vertex")?;
            require(is_planar(&g.remove_vertex(*a)), "G - a is planar")
        }
    }
}

/// Tally of a disjunct search.
#[derive(Default)]
struct Tally {
    exhausted: Vec<String>,
    refuted: Vec<String>,
}

impl Tally {
    /// Turns budget exhaustion into a note and passes other errors on.
    fn run<T>(&mut self, label: &str, r: Result<Option<T>>) -> Result<Option<T>> {
        match r {
            Ok(Some(x)) => Ok(Some(x)),
            Ok(None) => Ok(None),
            Err(Error::BudgetExhausted { .. }) => {
                if !self.exhausted.iter().any(|l| l == label) {
                    self.exhausted.push(label.to_string());
                }
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }

    fn refute(&mut self, label: &str) {
        if !self.exhausted.iter().any(|l| l == label) {
            self.refuted.push(label.to_string());
        }
    }

    fn finish(self) -> Outcome {
        if self.exhausted.is_empty() {
            Outcome::Counterexample {
                refuted: self.refuted,
            }
        } else {
            Outcome::BudgetExhausted {
                exhausted: self.exhausted,
                refuted: self.refuted,
            }
        }
    }
}

fn certified(disjunct: &str, certificate: Certificate) -> Outcome {
    Outcome::Certified {
        disjunct: disjunct.to_string(),
        certificate,
    }
}

fn tk5_disjunct(
    g: &Graph,
    c: TKConstraints,
    budget: &Budget,
    t: &mut Tally,
    label: &str,
) -> Result<Option<Outcome>> {
    let found = t.run(label, find_tk5(g, &c, budget))?;
    Ok(found.map(|witness| {
        certified(
            label,
            Certificate::Tk5 {
                constraints: c,
                witness,
            },
        )
    }))
}

fn k4_disjunct(g: &Graph, a: Vertex, mode: K4Mode, label: &str) -> Result<Option<Outcome>> {
    if let Some(w) = find_k4_minus(&g.remove_vertex(a), None, None, mode)? {
        return Ok(Some(certified(
            label,
            Certificate::K4Minus {
                witness: w,
                mode,
                avoid: Some(a),
                degree2: None,
            },
        )));
    }
    Ok(find_k4_minus(g, Some(a), None, mode)?.map(|w| {
        certified(
            label,
            Certificate::K4Minus {
                witness: w,
                mode,
                avoid: None,
                degree2: Some(a),
            },
        )
    }))
}

/// TK5 in every listed restricted host, or `None` at the first failure.
fn family(
    g: &Graph,
    cs: Vec<TKConstraints>,
    budget: &Budget,
    t: &mut Tally,
    label: &str,
) -> Result<Option<Vec<RestrictedTk5>>> {
    let mut members = Vec::with_capacity(cs.len());
    for c in cs {
        match t.run(label, find_tk5(g, &c, budget))? {
            Some(witness) => members.push(RestrictedTk5 {
                constraints: c,
                witness,
            }),
            None => return Ok(None),
        }
    }
    Ok(Some(members))
}

fn separation_disjunct(
    g: &Graph,
    set: VertexSet,
    a: Vertex,
    budget: &Budget,
    label: &str,
    t: &mut Tally,
) -> Result<Option<Outcome>> {
    let meter = budget.meter();
    let mut found = None;
    let r = separations_around(g, 5, set, 7, |sep| {
        meter.tick()?;
        let s = sep.boundary();
        if !s.contains(a) {
            return Ok(true);
        }
        let h = side_graph(g, &sep).remove_vertex(a);
        if let Some((boundary_order, embedding)) = planar_with_set(&h, s.without(a))? {
            found = Some(certified(
                label,
                Certificate::Separation {
                    separation: sep,
                    apex: Some(a),
                    boundary_order,
                    embedding,
                },
            ));
            return Ok(false);
        }
        Ok(true)
    });
    t.run(label, r.map(|()| found))
}

/// Checks hypotheses, then disjuncts in order; the first certified one wins.
pub fn verify_statement(
    g: &Graph,
    input: &StatementInput,
    budget: &Budget,
    mode: K4Mode,
) -> Result<Outcome> {
    check_hypotheses(g, input)?;
    let mut t = Tally::default();
    let pivot = input.pivot();
    macro_rules! try_disjunct {
        ($label:expr, $e:expr) => {
            match $e? {
                Some(o) => return Ok(o),
                None => t.refute($label),
            }
        };
    }
    match input {
        StatementInput::Main { roles } => {
            try_disjunct!(
                "i",
                tk5_disjunct(g, forbid_pivot(pivot), budget, &mut t, "i")
            );
            try_disjunct!("ii", k4_disjunct(g, pivot, mode, "ii"));
            // the given completion first, then the others at x1
            let mut cands = vec![*roles];
            cands.extend(completions_at(g, pivot).into_iter().filter(|r| r != roles));
            for r in cands {
                let fixed: VertexSet = [r.x2, r.y1, r.y2].iter().collect();
                if let Some(members) =
                    family(g, restrictions(g, pivot, fixed, 2), budget, &mut t, "iii")?
                {
                    return Ok(certified(
                        "iii",
                        Certificate::Tk5Family {
                            roles: Some(r),
                            members,
                        },
                    ));
                }
            }
            t.refute("iii");
        }
        StatementInput::ClassifyPath { roles } => {
            try_disjunct!(
                "i",
                tk5_disjunct(g, forbid_pivot(pivot), budget, &mut t, "i")
            );
            try_disjunct!("ii", k4_disjunct(g, pivot, mode, "ii"));
            let (z0, z1) = roles.z.expect("checked");
            let r = classify_path_search(g, roles.x1, roles.x2, roles.y1, roles.y2, z0, z1, budget);
            try_disjunct!(
                "iii",
                t.run("iii", r).map(|o| o.map(|(side, path)| certified(
                    "iii",
                    Certificate::ClassifiedPath { side, path }
                )))
            );
        }
        StatementInput::PathTk5 { roles, path } => {
            let vs = path.vertices();
            let c = path_tk5_constraints(roles, vs[vs.len() - 2]);
            try_disjunct!("tk5", tk5_disjunct(g, c, budget, &mut t, "tk5"));
        }
        StatementInput::PlanarSide { .. } | StatementInput::ApexPlanar { .. } => {
            try_disjunct!(
                "i",
                tk5_disjunct(g, forbid_pivot(pivot), budget, &mut t, "i")
            );
            try_disjunct!("ii", k4_disjunct(g, pivot, mode, "ii"));
        }
        StatementInput::TriangleCut { triangle, .. } => {
            try_disjunct!(
                "i",
                tk5_disjunct(g, forbid_pivot(pivot), budget, &mut t, "i")
            );
            try_disjunct!("ii", k4_disjunct(g, pivot, mode, "ii"));
            let fixed: VertexSet = [triangle[1], triangle[2]].iter().collect();
            try_disjunct!(
                "iii",
                family(g, restrictions(g, pivot, fixed, 3), budget, &mut t, "iii").map(|o| o.map(
                    |members| certified(
                        "iii",
                        Certificate::Tk5Family {
                            roles: None,
                            members
                        }
                    )
                ))
            );
        }
        StatementInput::SixSet { set, a } => {
            try_disjunct!("i", k4_disjunct(g, *a, mode, "i"));
            try_disjunct!("ii", separation_disjunct(g, *set, *a, budget, "ii", &mut t));
        }
    }
    Ok(t.finish())
}

/// Options shared by every verification in a run.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub budget: Budget,
    pub k4_mode: K4Mode,
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: Budget::default(),
            k4_mode: K4Mode::Subgraph,
            timing: false,
        }
    }
}

/// Runs [`verify_statement`] and wraps the outcome as a [`Verdict`].
pub fn verify(
    graph_id: &str,
    g: &Graph,
    input: &StatementInput,
    opts: &VerifyOptions,
) -> Result<Verdict> {
    let start = Instant::now();
    let outcome = verify_statement(g, input, &opts.budget, opts.k4_mode)?;
    Ok(Verdict {
        graph_id: graph_id.to_string(),
        graph6: to_graph6(g),
        input: input.clone(),
        k4_mode: opts.k4_mode,
        outcome,
        timing_ms: opts.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

pub fn verify_theorem_1_1(g: &Graph, roles: &RoleAssignment, budget: &Budget) -> Result<Verdict> {
    let opts = VerifyOptions {
        budget: budget.clone(),
        ..Default::default()
    };
    verify("graph", g, &StatementInput::Main { roles: *roles }, &opts)
}

pub fn verify_lemma(g: &Graph, input: &StatementInput, budget: &Budget) -> Result<Verdict> {
    let opts = VerifyOptions {
        budget: budget.clone(),
        ..Default::default()
    };
    verify("graph", g, input, &opts)
}
