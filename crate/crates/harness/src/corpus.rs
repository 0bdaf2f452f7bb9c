//! Graph families for sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use tk5kit_core::{is_planar, vertex_connectivity, Edge, Error, Graph, Result};

use crate::enumerate::{all_graphs, connected_graphs, MAX_CANONICAL_ORDER};
use crate::roles::find_roles;

/// Planar graphs used as the base of apex families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "base", content = "k", rename_all = "kebab-case")]
pub enum PlanarBase {
    Icosahedron,
    Octahedron,
    /// Two `k`-cycles joined in a zigzag.
    Antiprism(usize),
    /// A `k`-cycle with two poles.
    DoubleWheel(usize),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    Complete {
        n: usize,
    },
    /// `K_n` minus a matching of the given size on the highest ids.
    CompleteMinusEdge {
        n: usize,
        #[serde(default = "one")]
        matching: usize,
    },
    CompleteMultipartite {
        parts: Vec<usize>,
    },
    Circulant {
        n: usize,
        jumps: Vec<usize>,
    },
    ApexOverPlanar {
        base: PlanarBase,
    },
    /// `G(n, p)` draws kept when they satisfy the filter.
    RandomFiltered {
        n: usize,
        p: f64,
        count: usize,
        seed: u64,
        max_tries: usize,
    },
    /// Every graph on `n` vertices up to isomorphism.
    All {
        n: usize,
    },
    /// Every connected graph on `n` vertices up to isomorphism.
    Connected {
        n: usize,
    },
}

fn one() -> usize {
    1
}

impl Family {
    pub const NAMES: [&'static str; 8] = [
        "complete",
        "complete-minus-edge",
        "complete-multipartite",
        "circulant",
        "apex-over-planar",
        "random-filtered",
        "all",
        "connected",
    ];

    /// Short stable label used in graph ids.
    pub fn label(&self) -> String {
        match self {
            Family::Complete { n } => format!("K{n}"),
            Family::CompleteMinusEdge { n, matching } => format!("K{n}-{matching}e"),
            Family::CompleteMultipartite { parts } => {
                let p: Vec<String> = parts.iter().map(|x| x.to_string()).collect();
                format!("K({})", p.join(","))
            }
            Family::Circulant { n, jumps } => {
                let j: Vec<String> = jumps.iter().map(|x| x.to_string()).collect();
                format!("C{n}({})", j.join(","))
            }
            Family::ApexOverPlanar { base } => match base {
                PlanarBase::Icosahedron => "apex-icosahedron".into(),
                PlanarBase::Octahedron => "apex-octahedron".into(),
                PlanarBase::Antiprism(k) => format!("apex-antiprism{k}"),
                PlanarBase::DoubleWheel(k) => format!("apex-doublewheel{k}"),
            },
            Family::RandomFiltered { n, p, seed, .. } => format!("gnp({n},{p},{seed})"),
            Family::All { n } => format!("all{n}"),
            Family::Connected { n } => format!("connected{n}"),
        }
    }
}

pub fn planar_base(base: PlanarBase) -> Result<Graph> {
    let mut e: Vec<Edge> = Vec::new();
    let n = match base {
        PlanarBase::Icosahedron => {
            // 0 top, 1..=5 upper ring, 6..=10 lower ring, 11 bottom
            for i in 0..5 {
                let (u, u2) = (1 + i, 1 + (i + 1) % 5);
                let (l, l2) = (6 + i, 6 + (i + 1) % 5);
                e.extend([(0, u), (u, u2), (l, l2), (11, l), (u, l), (u2, l)]);
            }
            12
        }
        PlanarBase::Octahedron => return Ok(complete_multipartite(&[2, 2, 2])),
        PlanarBase::Antiprism(k) => {
            if k < 3 {
                return Err(Error::InvalidArgument("antiprism needs k >= 3".into()));
            }
            for i in 0..k {
                let j = (i + 1) % k;
                e.extend([(i, j), (k + i, k + j), (i, k + i), (i, k + j)]);
            }
            2 * k
        }
        PlanarBase::DoubleWheel(k) => {
            if k < 3 {
                return Err(Error::InvalidArgument("double wheel needs k >= 3".into()));
            }
            for i in 0..k {
                e.extend([(i, (i + 1) % k), (k, i), (k + 1, i)]);
            }
            k + 2
        }
    };
    Graph::from_edges(n, e)
}

pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let mut part_of = Vec::new();
    for (p, &s) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, s));
    }
    let n = part_of.len();
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                e.push((u, v));
            }
        }
    }
    Graph::from_edges(n, e).expect("in range")
}

/// The `theorem-1.1` hypothesis short of roles: 5-connected and nonplanar,
/// with at least one induced K4^- whose missing pair is nonadjacent.
pub fn theorem_hypothesis(g: &Graph) -> bool {
    g.order() >= 6
        && vertex_connectivity(g).is_ok_and(|k| k >= 5)
        && !is_planar(g)
        && !find_roles(g, Some(1)).is_empty()
}

/// Graphs of the family; random draws are filtered by [`theorem_hypothesis`].
pub fn corpus_generate(family: &Family) -> Result<Vec<Graph>> {
    corpus_generate_with(family, &theorem_hypothesis)
}

pub fn corpus_generate_with(family: &Family, keep: &dyn Fn(&Graph) -> bool) -> Result<Vec<Graph>> {
    let too_big = |n: usize| {
        if n > tk5kit_core::MAX_VERTICES {
            Err(Error::InvalidArgument(format!(
                "{n} vertices exceeds the supported maximum"
            )))
        } else {
            Ok(())
        }
    };
    Ok(match family {
        Family::Complete { n } => {
            too_big(*n)?;
            vec![Graph::complete(*n)]
        }
        Family::CompleteMinusEdge { n, matching } => {
            too_big(*n)?;
            if 2 * matching > *n {
                return Err(Error::InvalidArgument("matching larger than n/2".into()));
            }
            let drop: Vec<Edge> = (0..*matching)
                .map(|i| (n - 2 - 2 * i, n - 1 - 2 * i))
                .collect();
            vec![Graph::complete(*n).remove_edges(drop)]
        }
        Family::CompleteMultipartite { parts } => {
            too_big(parts.iter().sum())?;
            vec![complete_multipartite(parts)]
        }
        Family::Circulant { n, jumps } => {
            too_big(*n)?;
            let mut e = Vec::new();
            for i in 0..*n {
                for &j in jumps {
                    if j % n != 0 {
                        e.push((i, (i + j) % n));
                    }
                }
            }
            vec![Graph::from_edges(*n, e)?]
        }
        Family::ApexOverPlanar { base } => {
            let b = planar_base(*base)?;
            let a = b.order();
            vec![b.add_vertex(a, b.vertices())?]
        }
        Family::RandomFiltered {
            n,
            p,
            count,
            seed,
            max_tries,
        } => {
            too_big(*n)?;
            if !(0.0..=1.0).contains(p) {
                return Err(Error::InvalidArgument("p must lie in [0, 1]".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut out = Vec::new();
            for _ in 0..*max_tries {
                if out.len() >= *count {
                    break;
                }
                let mut e = Vec::new();
                for u in 0..*n {
                    for v in u + 1..*n {
                        if rng.gen_bool(*p) {
                            e.push((u, v));
                        }
                    }
                }
                let g = Graph::from_edges(*n, e)?;
                if keep(&g) {
                    out.push(g);
                }
            }
            out
        }
        Family::All { n } | Family::Connected { n } => {
            if *n > 9.min(MAX_CANONICAL_ORDER) {
                return Err(Error::InvalidArgument(
                    "exhaustive enumeration is limited to n <= 9".into(),
                ));
            }
            if matches!(family, Family::All { .. }) {
                all_graphs(*n)
            } else {
                connected_graphs(*n)
            }
        }
    })
}

/// The default `theorem-1.1` sweep: at least 50 hypothesis-satisfying graphs
/// with at most 13 vertices, each with a stable id.
pub fn standard_corpus(seed: u64) -> Result<Vec<(String, Graph)>> {
    let mut fams = vec![Family::CompleteMinusEdge { n: 7, matching: 1 }];
    for n in [8, 9, 10] {
        for matching in 1..=n / 2 {
            fams.push(Family::CompleteMinusEdge { n, matching });
        }
    }
    for parts in [
        vec![2, 2, 2, 2],
        vec![3, 3, 3],
        vec![2, 2, 2, 3],
        vec![2, 2, 2, 2, 2],
        vec![3, 3, 3, 3],
        vec![4, 4, 4],
        vec![2, 3, 3, 3],
    ] {
        fams.push(Family::CompleteMultipartite { parts });
    }
    for n in 9..=13 {
        fams.push(Family::Circulant {
            n,
            jumps: vec![1, 2, 3],
        });
    }
    for base in [
        PlanarBase::Icosahedron,
        PlanarBase::Octahedron,
        PlanarBase::Antiprism(4),
        PlanarBase::Antiprism(5),
        PlanarBase::Antiprism(6),
    ] {
        fams.push(Family::ApexOverPlanar { base });
    }
    for k in 4..=10 {
        fams.push(Family::ApexOverPlanar {
            base: PlanarBase::DoubleWheel(k),
        });
    }
    for n in 9..=13 {
        fams.push(Family::RandomFiltered {
            n,
            p: 0.7,
            count: 3,
            seed: seed.wrapping_add(n as u64),
            max_tries: 2000,
        });
    }
    let mut out = Vec::new();
    for f in fams {
        for (i, g) in corpus_generate(&f)?.into_iter().enumerate() {
            if theorem_hypothesis(&g) {
                out.push((format!("{}#{i}", f.label()), g));
            }
        }
    }
    Ok(out)
}
