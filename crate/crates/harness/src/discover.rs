//! Finding inputs that satisfy a statement's hypotheses.

use tk5kit_core::bitset::for_each_subset;
use tk5kit_core::{
    is_planar, separations_around, Graph, Path, Result, Separation, Vertex, VertexSet,
};

use crate::roles::find_roles;
use crate::verdict::{Statement, StatementInput};
use crate::verify::check_hypotheses;

/// Cap on simple paths explored per role assignment.
const PATH_STEPS: usize = 20_000;

/// Up to `cap` inputs for `statement` on `g` that pass its hypotheses, in a
/// deterministic order.
pub fn statement_inputs(
    g: &Graph,
    statement: Statement,
    cap: usize,
) -> Result<Vec<StatementInput>> {
    let mut out = Vec::new();
    let push = |input: StatementInput, out: &mut Vec<StatementInput>| -> bool {
        if check_hypotheses(g, &input).is_ok() {
            out.push(input);
        }
        out.len() < cap
    };
    if cap == 0 {
        return Ok(out);
    }
    match statement {
        Statement::Main => {
            for roles in find_roles(g, None) {
                if !push(StatementInput::Main { roles }, &mut out) {
                    break;
                }
            }
        }
        Statement::ClassifyPath => {
            'outer: for roles in find_roles(g, None) {
                for (z0, z1) in roles.z_pairs(g) {
                    let roles = roles.with_z(z0, z1);
                    if !push(StatementInput::ClassifyPath { roles }, &mut out) {
                        break 'outer;
                    }
                }
            }
        }
        Statement::ApexPlanar => {
            for a in g.vertices() {
                if is_planar(&g.remove_vertex(a))
                    && !push(StatementInput::ApexPlanar { a }, &mut out)
                {
                    break;
                }
            }
        }
        Statement::PathTk5 => {
            'outer: for roles in find_roles(g, None) {
                for path in x_paths(g, roles.x1, roles.x2, [roles.y1, roles.y2].iter().collect()) {
                    if !push(StatementInput::PathTk5 { roles, path }, &mut out) {
                        break 'outer;
                    }
                }
            }
        }
        Statement::PlanarSide | Statement::TriangleCut => {
            let mut seps = Vec::new();
            separations_around(g, 5, VertexSet::EMPTY, 7, |sep| {
                if sep.side1.len() >= 7 {
                    seps.push(sep);
                }
                Ok(true)
            })?;
            'outer: for sep in seps {
                for input in separation_inputs(g, statement, &sep) {
                    if !push(input, &mut out) {
                        break 'outer;
                    }
                }
            }
        }
        Statement::SixSet => {
            for_each_subset(g.vertices(), 6, |set| {
                for a in set {
                    if !is_planar(&g.remove_vertex(a)) {
                        continue;
                    }
                    if !push(StatementInput::SixSet { set, a }, &mut out) {
                        return false;
                    }
                }
                true
            });
        }
    }
    Ok(out)
}

fn separation_inputs(g: &Graph, statement: Statement, sep: &Separation) -> Vec<StatementInput> {
    let s = sep.boundary();
    let mut out = Vec::new();
    match statement {
        Statement::PlanarSide => {
            for a in s {
                out.push(StatementInput::PlanarSide {
                    separation: *sep,
                    a,
                });
            }
        }
        _ => {
            for_each_subset(s, 3, |t| {
                let v = t.to_vec();
                if g.has_edge(v[0], v[1]) && g.has_edge(v[1], v[2]) && g.has_edge(v[0], v[2]) {
                    for (a, a1, a2) in [(v[0], v[1], v[2]), (v[1], v[0], v[2]), (v[2], v[0], v[1])]
                    {
                        out.push(StatementInput::TriangleCut {
                            separation: *sep,
                            triangle: [a, a1, a2],
                        });
                    }
                }
                true
            });
        }
    }
    out
}

/// Simple `x1`-`x2` paths of length at least 2 avoiding `avoid`, shortest
/// first within each DFS branch; bounded by [`PATH_STEPS`].
fn x_paths(g: &Graph, x1: Vertex, x2: Vertex, avoid: VertexSet) -> Vec<Path> {
    let mut out = Vec::new();
    let mut stack = vec![x1];
    let mut steps = 0;
    fn rec(
        g: &Graph,
        x2: Vertex,
        avoid: VertexSet,
        stack: &mut Vec<Vertex>,
        steps: &mut usize,
        out: &mut Vec<Path>,
    ) {
        *steps += 1;
        if *steps > PATH_STEPS {
            return;
        }
        let last = *stack.last().expect("nonempty");
        let used: VertexSet = stack.iter().collect();
        for w in g.neighbors(last) - used - avoid {
            if w == x2 {
                if stack.len() >= 2 {
                    let mut p = stack.clone();
                    p.push(w);
                    out.push(Path::new(p));
                }
                continue;
            }
            stack.push(w);
            rec(g, x2, avoid, stack, steps, out);
            stack.pop();
        }
    }
    rec(g, x2, avoid, &mut stack, &mut steps, &mut out);
    out
}
