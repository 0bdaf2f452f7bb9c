//! K5 subdivisions: checking, constrained search and assembly from path
//! fragments. Also K4^- detection.
//!
//! The search fixes five branch vertices of degree at least 4 and routes the
//! ten branch paths by backtracking, most constrained pair first. Adjacent
//! branch vertices are joined by their edge (any subdivision can be rerouted
//! that way), and every other path is taken induced, which loses nothing
//! since a path can always be shortcut inside its own vertex set.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::{for_each_subset, Vertex, VertexSet};
use crate::budget::{Budget, Meter};
use crate::error::{invalid, Result};
use crate::graph::{norm, Edge, Graph, Path, PathError};
use crate::induced::{InducedPaths, Step};

/// Pattern edges of K5 in lexicographic order.
pub const K5_PAIRS: [(usize, usize); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    K5_PAIRS
        .iter()
        .position(|&p| p == (i, j))
        .expect("pattern pair")
}

/// A TK5: pattern vertex `i` maps to `branch[i]`, and pattern edge `(i, j)`
/// (`i < j`) to a path from `branch[i]` to `branch[j]`.
///
/// Serializes as `{"branch": [..5 ids], "paths": {"i-j": [ids..]}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "WitnessRepr", try_from = "WitnessRepr")]
pub struct SubdivisionWitness {
    pub branch: [Vertex; 5],
    pub paths: BTreeMap<(usize, usize), Path>,
}

#[derive(Serialize, Deserialize)]
struct WitnessRepr {
    branch: [Vertex; 5],
    paths: BTreeMap<String, Path>,
}

impl From<SubdivisionWitness> for WitnessRepr {
    fn from(w: SubdivisionWitness) -> Self {
        WitnessRepr {
            branch: w.branch,
            paths: w
                .paths
                .into_iter()
                .map(|((i, j), p)| (format!("{i}-{j}"), p))
                .collect(),
        }
    }
}

impl TryFrom<WitnessRepr> for SubdivisionWitness {
    type Error = String;

    fn try_from(r: WitnessRepr) -> std::result::Result<Self, String> {
        let mut paths = BTreeMap::new();
        for (k, p) in r.paths {
            let parsed = k
                .split_once('-')
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)));
            let Some(key) = parsed else {
                return Err(format!("bad pattern edge key {k:?}"));
            };
            paths.insert(key, p);
        }
        Ok(SubdivisionWitness {
            branch: r.branch,
            paths,
        })
    }
}

impl SubdivisionWitness {
    pub fn path(&self, i: usize, j: usize) -> Option<&Path> {
        self.paths.get(&(i.min(j), i.max(j)))
    }

    pub fn branch_set(&self) -> VertexSet {
        self.branch.iter().collect()
    }

    /// All vertices used by the subdivision.
    pub fn vertex_set(&self) -> VertexSet {
        self.paths
            .values()
            .fold(self.branch_set(), |s, p| s | p.vertex_set())
    }

    pub fn contains_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.paths.values().any(|p| p.contains_edge(u, v))
    }
}

/// First violated witness invariant.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TkError {
    #[error("branch vertex {0} is not in the graph")]
    UnknownBranch(Vertex),
    #[error("branch vertex {0} is repeated")]
    RepeatedBranch(Vertex),
    #[error("{0}-{1} is not a pattern edge of K5")]
    ExtraPair(usize, usize),
    #[error("no path for pattern edge {0}-{1}")]
    MissingPair(usize, usize),
    #[error("path {}-{} is invalid: {source}", pair.0, pair.1)]
    BadPath {
        pair: (usize, usize),
        source: PathError,
    },
    #[error("path {0}-{1} does not join its branch vertices")]
    WrongEnds(usize, usize),
    #[error("path {}-{} passes through branch vertex {vertex}", pair.0, pair.1)]
    ThroughBranch {
        pair: (usize, usize),
        vertex: Vertex,
    },
    #[error("paths {}-{} and {}-{} share vertex {vertex}", pair.0, pair.1, other.0, other.1)]
    SharedInterior {
        pair: (usize, usize),
        other: (usize, usize),
        vertex: Vertex,
    },
}

pub fn check_tk5(g: &Graph, w: &SubdivisionWitness) -> std::result::Result<(), TkError> {
    let mut seen = VertexSet::EMPTY;
    for &b in &w.branch {
        if !g.contains(b) {
            return Err(TkError::UnknownBranch(b));
        }
        if seen.contains(b) {
            return Err(TkError::RepeatedBranch(b));
        }
        seen.insert(b);
    }
    if let Some(&(i, j)) = w.paths.keys().find(|k| !K5_PAIRS.contains(k)) {
        return Err(TkError::ExtraPair(i, j));
    }
    let mut interiors: Vec<((usize, usize), VertexSet)> = Vec::new();
    for pair @ (i, j) in K5_PAIRS {
        let p = w.paths.get(&pair).ok_or(TkError::MissingPair(i, j))?;
        p.check(g)
            .map_err(|source| TkError::BadPath { pair, source })?;
        if p.first() != Some(w.branch[i]) || p.last() != Some(w.branch[j]) {
            return Err(TkError::WrongEnds(i, j));
        }
        let inner = p.interior();
        if let Some(vertex) = (inner & seen).first() {
            return Err(TkError::ThroughBranch { pair, vertex });
        }
        for &(other, s) in &interiors {
            if let Some(vertex) = (inner & s).first() {
                return Err(TkError::SharedInterior {
                    pair,
                    other,
                    vertex,
                });
            }
        }
        interiors.push((pair, inner));
    }
    Ok(())
}

pub fn verify_tk5(g: &Graph, w: &SubdivisionWitness) -> bool {
    check_tk5(g, w).is_ok()
}

/// Side conditions for [`find_tk5`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TKConstraints {
    pub forbidden_branch: VertexSet,
    pub required_branch: VertexSet,
    /// Must lie on one of the branch paths.
    pub required_edge: Option<Edge>,
    /// Search in `g.restrict_edges_at(x, keep)` instead of `g`.
    pub host_restriction: Option<(Vertex, VertexSet)>,
}

impl TKConstraints {
    pub fn forbid(v: Vertex) -> Self {
        TKConstraints {
            forbidden_branch: VertexSet::singleton(v),
            ..Default::default()
        }
    }

    pub fn host(&self, g: &Graph) -> Result<Graph> {
        match self.host_restriction {
            Some((x, keep)) => g.restrict_edges_at(x, keep),
            None => Ok(g.clone()),
        }
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if self.required_branch.intersects(self.forbidden_branch) {
            return Err(invalid(
                "a vertex is both required and forbidden as a branch vertex",
            ));
        }
        if self.required_branch.len() > 5 {
            return Err(invalid("more than five required branch vertices"));
        }
        if !self.required_branch.is_subset(g.vertices()) {
            return Err(invalid("required branch vertex is not in the graph"));
        }
        if let Some((u, v)) = self.required_edge {
            if u == v || !g.contains(u) || !g.contains(v) {
                return Err(invalid(format!(
                    "required edge {u}-{v} is not a pair of vertices"
                )));
            }
        }
        if let Some((x, _)) = self.host_restriction {
            if !g.contains(x) {
                return Err(invalid(format!(
                    "restricted vertex {x} is not in the graph"
                )));
            }
        }
        Ok(())
    }

    /// Whether `w` is a TK5 of the constrained host meeting every condition.
    pub fn admits(&self, g: &Graph, w: &SubdivisionWitness) -> bool {
        let Ok(h) = self.host(g) else { return false };
        let b = w.branch_set();
        verify_tk5(&h, w)
            && b.is_disjoint(self.forbidden_branch)
            && self.required_branch.is_subset(b)
            && self
                .required_edge
                .is_none_or(|(u, v)| w.contains_edge(u, v))
    }
}

/// A TK5 meeting the constraints, or `None` once the search space is
/// exhausted.
pub fn find_tk5(
    g: &Graph,
    c: &TKConstraints,
    budget: &Budget,
) -> Result<Option<SubdivisionWitness>> {
    c.check(g)?;
    let h = c.host(g)?;
    if let Some((u, v)) = c.required_edge {
        if !h.has_edge(u, v) {
            return Ok(None);
        }
    }
    let meter = budget.meter();
    let cands: VertexSet = h
        .vertices()
        .iter()
        .filter(|&v| h.degree(v) >= 4)
        .collect::<VertexSet>()
        - c.forbidden_branch;
    if !c.required_branch.is_subset(cands) {
        return Ok(None);
    }
    let mut out = Ok(None);
    for_each_subset(
        cands - c.required_branch,
        5 - c.required_branch.len(),
        |s| {
            let branch: Vec<Vertex> = (s | c.required_branch).to_vec();
            let mut r = Router::new(
                &h,
                [branch[0], branch[1], branch[2], branch[3], branch[4]],
                &meter,
            );
            match r.solve(c.required_edge) {
                Ok(true) => {
                    out = Ok(Some(r.witness()));
                    false
                }
                Ok(false) => true,
                Err(e) => {
                    out = Err(e);
                    false
                }
            }
        },
    );
    out
}

struct Router<'a, 'b> {
    h: &'a Graph,
    branch: [Vertex; 5],
    bset: VertexSet,
    meter: &'a Meter<'b>,
    paths: [Option<Vec<Vertex>>; 10],
}

impl<'a, 'b> Router<'a, 'b> {
    fn new(h: &'a Graph, branch: [Vertex; 5], meter: &'a Meter<'b>) -> Self {
        Router {
            h,
            branch,
            bset: branch.iter().collect(),
            meter,
            paths: Default::default(),
        }
    }

    fn witness(&self) -> SubdivisionWitness {
        SubdivisionWitness {
            branch: self.branch,
            paths: K5_PAIRS
                .iter()
                .zip(&self.paths)
                .map(|(&k, p)| (k, Path::new(p.clone().expect("routed"))))
                .collect(),
        }
    }

    fn index_of(&self, v: Vertex) -> Option<usize> {
        self.branch.iter().position(|&b| b == v)
    }

    fn solve(&mut self, required: Option<Edge>) -> Result<bool> {
        let Some((u, v)) = required else {
            return self.start(None);
        };
        let (h, meter, bset) = (self.h, self.meter, self.bset);
        match (self.index_of(u), self.index_of(v)) {
            // a direct branch edge is always routed as itself
            (Some(_), Some(_)) => self.start(None),
            (Some(ib), None) | (None, Some(ib)) => {
                let a = if ib == self.index_of(u).unwrap_or(usize::MAX) {
                    v
                } else {
                    u
                };
                let b = self.branch[ib];
                for ic in (0..5).filter(|&i| i != ib) {
                    let c = self.branch[ic];
                    let p = pair_index(ib, ic);
                    let stopped = InducedPaths::new(h, a, c, h.vertices() - bset, meter).run(
                        &mut |_, _| true,
                        &mut |tail| {
                            let mut full = Vec::with_capacity(tail.len() + 1);
                            full.push(b);
                            full.extend_from_slice(tail);
                            if ib > ic {
                                full.reverse();
                            }
                            Ok(if self.start(Some((p, full)))? {
                                Step::Stop
                            } else {
                                Step::Continue
                            })
                        },
                    )?;
                    if stopped {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            (None, None) => {
                for (p, &(i, j)) in K5_PAIRS.iter().enumerate() {
                    for (a, b) in [(u, v), (v, u)] {
                        let (bi, bj) = (self.branch[i], self.branch[j]);
                        let stopped = InducedPaths::new(
                            h,
                            bi,
                            a,
                            h.vertices() - bset - VertexSet::singleton(b),
                            meter,
                        )
                        .run(&mut |_, _| true, &mut |head| {
                            let head_set: VertexSet = head.iter().collect();
                            let rest = h.vertices() - bset - head_set;
                            let stopped = InducedPaths::new(h, b, bj, rest, meter).run(
                                &mut |_, _| true,
                                &mut |tail| {
                                    let mut full = head.to_vec();
                                    full.extend_from_slice(tail);
                                    Ok(if self.start(Some((p, full)))? {
                                        Step::Stop
                                    } else {
                                        Step::Continue
                                    })
                                },
                            )?;
                            Ok(if stopped { Step::Stop } else { Step::Continue })
                        })?;
                        if stopped {
                            return Ok(true);
                        }
                    }
                }
                Ok(false)
            }
        }
    }

    /// Routes everything given an optional pre-routed pair.
    fn start(&mut self, forced: Option<(usize, Vec<Vertex>)>) -> Result<bool> {
        let mut used = VertexSet::EMPTY;
        for (p, &(i, j)) in K5_PAIRS.iter().enumerate() {
            let (bi, bj) = (self.branch[i], self.branch[j]);
            self.paths[p] = self.h.has_edge(bi, bj).then(|| vec![bi, bj]);
        }
        if let Some((p, path)) = forced {
            used = Path::new(path.clone()).interior();
            self.paths[p] = Some(path);
        }
        self.rec(used)
    }

    fn rec(&mut self, used: VertexSet) -> Result<bool> {
        self.meter.tick()?;
        let h = self.h;
        let free = h.vertices() - self.bset - used;
        let open: Vec<usize> = (0..10).filter(|&p| self.paths[p].is_none()).collect();
        if open.is_empty() {
            return Ok(true);
        }
        let mut need = [0usize; 5];
        for &p in &open {
            let (i, j) = K5_PAIRS[p];
            need[i] += 1;
            need[j] += 1;
        }
        let avail: [usize; 5] = std::array::from_fn(|k| (h.neighbors(self.branch[k]) & free).len());
        if (0..5).any(|k| need[k] > avail[k]) {
            return Ok(false);
        }
        for &p in &open {
            let (i, j) = K5_PAIRS[p];
            if !h
                .reach(self.branch[i], free.with(self.branch[j]))
                .contains(self.branch[j])
            {
                return Ok(false);
            }
        }
        let slack = |k: usize| avail[k] - need[k];
        let &p = open
            .iter()
            .min_by_key(|&&p| {
                let (i, j) = K5_PAIRS[p];
                (slack(i).min(slack(j)), p)
            })
            .expect("nonempty");
        let (i, j) = K5_PAIRS[p];
        let (bi, bj) = (self.branch[i], self.branch[j]);
        let nbrs: [VertexSet; 5] = std::array::from_fn(|k| h.neighbors(self.branch[k]));
        let meter = self.meter;
        let mut prune = |_: &[Vertex], set: VertexSet| {
            (0..5)
                .filter(|&k| k != i && k != j)
                .all(|k| (nbrs[k] & (free - set)).len() >= need[k])
        };
        let stopped = InducedPaths::new(h, bi, bj, free, meter).run(&mut prune, &mut |path| {
            let inner = Path::new(path.to_vec()).interior();
            self.paths[p] = Some(path.to_vec());
            if self.rec(used | inner)? {
                return Ok(Step::Stop);
            }
            self.paths[p] = None;
            Ok(Step::Continue)
        })?;
        Ok(stopped)
    }
}

/// How "contains K4^-" is read.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(rename_all = "kebab-case")]
pub enum K4Mode {
    /// The five edges are present; the missing pair may be adjacent too.
    #[default]
    Subgraph,
    /// The quadruple induces exactly K4^-.
    Induced,
}

impl fmt::Display for K4Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            K4Mode::Subgraph => "subgraph",
            K4Mode::Induced => "induced",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct K4MinusWitness {
    /// Ascending.
    pub vertices: [Vertex; 4],
    /// The pair whose edge K4^- lacks, smaller id first.
    pub missing_pair: (Vertex, Vertex),
}

impl K4MinusWitness {
    pub fn validate(&self, g: &Graph, mode: K4Mode) -> bool {
        let q: VertexSet = self.vertices.iter().collect();
        let (a, b) = self.missing_pair;
        if q.len() != 4
            || !q.is_subset(g.vertices())
            || self.vertices.windows(2).any(|w| w[0] >= w[1])
        {
            return false;
        }
        if a >= b || !q.contains(a) || !q.contains(b) {
            return false;
        }
        k4_minus_at(g, q, a, b, mode)
    }

    /// The two vertices of degree 3 in the K4^-.
    pub fn hinge(&self) -> (Vertex, Vertex) {
        let rest: Vec<Vertex> = self
            .vertices
            .iter()
            .copied()
            .filter(|&v| v != self.missing_pair.0 && v != self.missing_pair.1)
            .collect();
        (rest[0], rest[1])
    }
}

fn k4_minus_at(g: &Graph, q: VertexSet, a: Vertex, b: Vertex, mode: K4Mode) -> bool {
    let rest = q.without(a).without(b).to_vec();
    let (r, s) = (rest[0], rest[1]);
    let edges_ok = g.has_edge(r, s) && [a, b].iter().all(|&x| g.has_edge(x, r) && g.has_edge(x, s));
    edges_ok && (mode == K4Mode::Subgraph || !g.has_edge(a, b))
}

/// A quadruple containing K4^-, with `degree2` (if set) in the missing pair
/// and `avoid` (if set) outside. Quadruples are scanned in lexicographic
/// order; within one, nonadjacent missing pairs come first.
pub fn find_k4_minus(
    g: &Graph,
    degree2: Option<Vertex>,
    avoid: Option<Vertex>,
    mode: K4Mode,
) -> Result<Option<K4MinusWitness>> {
    if degree2.is_some() && degree2 == avoid {
        return Err(invalid("the degree-2 vertex cannot also be avoided"));
    }
    let mut pool = g.vertices();
    if let Some(x) = avoid {
        pool.remove(x);
    }
    let (fixed, k) = match degree2 {
        Some(x) if !g.contains(x) => return Ok(None),
        Some(x) => (VertexSet::singleton(x), 3),
        None => (VertexSet::EMPTY, 4),
    };
    let mut found = None;
    for_each_subset(pool - fixed, k, |s| {
        let q = s | fixed;
        let vs = q.to_vec();
        let mut pairs = Vec::new();
        for x in 0..4 {
            for y in x + 1..4 {
                let (a, b) = (vs[x], vs[y]);
                if degree2.is_none_or(|d| d == a || d == b) {
                    pairs.push((a, b));
                }
            }
        }
        pairs.sort_by_key(|&(a, b)| g.has_edge(a, b));
        for (a, b) in pairs {
            if k4_minus_at(g, q, a, b, mode) {
                found = Some(K4MinusWitness {
                    vertices: [vs[0], vs[1], vs[2], vs[3]],
                    missing_pair: norm(a, b),
                });
                return false;
            }
        }
        true
    });
    Ok(found)
}

/// Why a fragment list does not assemble into a TK5.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AssemblyError {
    #[error("branch vertex {0} is repeated")]
    RepeatedBranch(Vertex),
    #[error("fragment {index} is not a path: {source}")]
    BadFragment { index: usize, source: PathError },
    #[error("fragment end {0} is not a branch vertex and meets no other fragment")]
    DanglingEnd(Vertex),
    #[error("three or more fragment ends meet at non-branch vertex {0}")]
    Branching(Vertex),
    #[error("fragments close a loop without joining two branch vertices")]
    Loop,
    #[error("pattern edge {0}-{1} is covered twice")]
    DuplicatePair(usize, usize),
    #[error("missing pair {0}-{1}")]
    MissingPair(usize, usize),
    #[error(transparent)]
    Invalid(#[from] TkError),
}

/// Glues path fragments at non-branch ends and splits them at branch
/// vertices, then reads off the ten branch paths.
pub fn assemble_tk5(
    g: &Graph,
    branch: [Vertex; 5],
    fragments: &[Path],
) -> std::result::Result<SubdivisionWitness, AssemblyError> {
    let mut bset = VertexSet::EMPTY;
    for &b in &branch {
        if bset.contains(b) {
            return Err(AssemblyError::RepeatedBranch(b));
        }
        bset.insert(b);
    }
    let mut segs: Vec<Vec<Vertex>> = Vec::new();
    for (index, f) in fragments.iter().enumerate() {
        f.check(g)
            .map_err(|source| AssemblyError::BadFragment { index, source })?;
        let vs = f.vertices();
        if vs.len() < 2 {
            continue;
        }
        let mut from = 0;
        for k in 1..vs.len() {
            if k == vs.len() - 1 || bset.contains(vs[k]) {
                segs.push(vs[from..=k].to_vec());
                from = k;
            }
        }
    }
    // non-branch end vertex -> (segment, at its start?)
    let mut ends: BTreeMap<Vertex, Vec<(usize, bool)>> = BTreeMap::new();
    for (s, seg) in segs.iter().enumerate() {
        for (v, at_start) in [(seg[0], true), (seg[seg.len() - 1], false)] {
            if !bset.contains(v) {
                ends.entry(v).or_default().push((s, at_start));
            }
        }
    }
    for (&v, e) in &ends {
        match e.len() {
            1 => return Err(AssemblyError::DanglingEnd(v)),
            2 => {}
            _ => return Err(AssemblyError::Branching(v)),
        }
    }
    let oriented = |s: usize, from_start: bool| -> Vec<Vertex> {
        let mut v = segs[s].clone();
        if !from_start {
            v.reverse();
        }
        v
    };
    let mut used = vec![false; segs.len()];
    let mut paths = BTreeMap::new();
    for s in 0..segs.len() {
        for from_start in [true, false] {
            let head = if from_start {
                segs[s][0]
            } else {
                segs[s][segs[s].len() - 1]
            };
            if used[s] || !bset.contains(head) {
                continue;
            }
            used[s] = true;
            let mut walk = oriented(s, from_start);
            let (mut cur, mut cur_start) = (s, from_start);
            loop {
                let tip = *walk.last().expect("nonempty");
                if bset.contains(tip) {
                    break;
                }
                // leave `cur` through its far end and enter the partner segment
                let &(next, next_start) = ends[&tip]
                    .iter()
                    .find(|&&(t, st)| !(t == cur && st != cur_start))
                    .expect("two ends");
                if used[next] {
                    return Err(AssemblyError::Loop);
                }
                used[next] = true;
                walk.extend_from_slice(&oriented(next, next_start)[1..]);
                cur = next;
                cur_start = next_start;
            }
            let i = branch.iter().position(|&b| b == walk[0]).expect("branch");
            let j = branch
                .iter()
                .position(|&b| b == *walk.last().expect("nonempty"))
                .expect("branch");
            if i == j {
                return Err(AssemblyError::Loop);
            }
            if i > j {
                walk.reverse();
            }
            let key = (i.min(j), i.max(j));
            if paths.insert(key, Path::new(walk)).is_some() {
                return Err(AssemblyError::DuplicatePair(key.0, key.1));
            }
        }
    }
    if used.iter().any(|&u| !u) {
        return Err(AssemblyError::Loop);
    }
    if let Some(&(i, j)) = K5_PAIRS.iter().find(|k| !paths.contains_key(k)) {
        return Err(AssemblyError::MissingPair(i, j));
    }
    let w = SubdivisionWitness { branch, paths };
    check_tk5(g, &w)?;
    Ok(w)
}
