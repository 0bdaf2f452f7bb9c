use tk5kit_core::{Budget, Graph, Path, Separation, VertexSet};
use tk5kit_harness::{
    corpus_generate, emit_report, find_roles, statement_inputs, sweep, validate_verdict,
    verify_lemma, verify_theorem_1_1, Certificate, Family, Outcome, PlanarBase, ReportFormat,
    ReportMeta, RoleAssignment, Statement, StatementInput, VerifyOptions,
};

/// Two dense chunks of two vertices each glued on the 5-clique `{0..4}`.
fn glued_host() -> Graph {
    let mut e = Vec::new();
    for u in 0..9 {
        for v in u + 1..9 {
            let side = |x: usize| match x {
                5 | 6 => 1,
                7 | 8 => 2,
                _ => 0,
            };
            if side(u) == 0 || side(v) == 0 || side(u) == side(v) {
                e.push((u, v));
            }
        }
    }
    Graph::from_edges(9, e).unwrap()
}

#[test]
fn triangle_cut_on_glued_host() {
    let g = glued_host();
    let s: VertexSet = (0..5).collect();
    let sep = Separation::new(s.with(5).with(6), s.with(7).with(8));
    let input = StatementInput::TriangleCut {
        separation: sep,
        triangle: [0, 1, 2],
    };
    let v = verify_lemma(&g, &input, &Budget::default()).unwrap();
    assert!(v.is_certified(), "{:?}", v.outcome);
    assert!(validate_verdict(&v));
    // side sizes below 7 are rejected
    let small = Separation::new(s.with(5), (0..9).filter(|&x| x != 5).collect());
    let bad = StatementInput::TriangleCut {
        separation: small,
        triangle: [0, 1, 2],
    };
    let e = verify_lemma(&g, &bad, &Budget::default()).unwrap_err();
    assert!(
        e.to_string().contains("separation") || e.to_string().contains("7"),
        "{e}"
    );
}

#[test]
fn path_lemma_rejects_k6() {
    let g = Graph::complete(6);
    let input = StatementInput::PathTk5 {
        roles: RoleAssignment::new(0, 1, 2, 3),
        path: Path::new(vec![0, 4, 5, 1]),
    };
    assert!(verify_lemma(&g, &input, &Budget::default()).is_err());
}

#[test]
fn path_lemma_on_k8_minus_edge() {
    let g = Graph::complete(8).remove_edges([(6, 7)]);
    for input in statement_inputs(&g, Statement::PathTk5, 6).unwrap() {
        let v = verify_lemma(&g, &input, &Budget::default()).unwrap();
        let Outcome::Certified {
            disjunct,
            certificate,
        } = &v.outcome
        else {
            panic!("{:?}", v.outcome)
        };
        assert_eq!(disjunct, "tk5");
        let (StatementInput::PathTk5 { roles, path }, Certificate::Tk5 { witness, .. }) =
            (&input, certificate)
        else {
            panic!()
        };
        let vs = path.vertices();
        assert!(witness.contains_edge(roles.x2, vs[vs.len() - 2]));
    }
}

#[test]
fn apex_lemma_on_icosahedron() {
    let g = &corpus_generate(&Family::ApexOverPlanar {
        base: PlanarBase::Icosahedron,
    })
    .unwrap()[0];
    let v = verify_lemma(g, &StatementInput::ApexPlanar { a: 12 }, &Budget::default()).unwrap();
    assert!(v.is_certified() && validate_verdict(&v));
    let e = verify_lemma(g, &StatementInput::ApexPlanar { a: 0 }, &Budget::default()).unwrap_err();
    assert!(e.to_string().contains("planar"), "{e}");
}

#[test]
fn theorem_rejects_low_connectivity() {
    let g = corpus_generate(&Family::Circulant {
        n: 9,
        jumps: vec![1, 2],
    })
    .unwrap()
    .remove(0);
    let roles = find_roles(&g, Some(1));
    let r = roles
        .first()
        .copied()
        .unwrap_or(RoleAssignment::new(0, 1, 2, 3));
    let e = verify_theorem_1_1(&g, &r, &Budget::default()).unwrap_err();
    assert!(e.to_string().contains("5-connected"), "{e}");
}

#[test]
fn empty_report_has_meta() {
    let r = emit_report(&[], ReportFormat::Json, &ReportMeta::new(3, 10)).unwrap();
    let j: serde_json::Value = serde_json::from_str(&r).unwrap();
    assert_eq!(j["results"].as_array().unwrap().len(), 0);
    assert_eq!(j["meta"]["budget"], 10);
    let t = emit_report(&[], ReportFormat::Tsv, &ReportMeta::new(3, 10)).unwrap();
    assert_eq!(t.lines().count(), 2);
}

#[test]
fn k7_minus_edge_record() {
    let g = Graph::complete(7).remove_edges([(5, 6)]);
    let v = verify_theorem_1_1(&g, &RoleAssignment::new(0, 1, 5, 6), &Budget::default()).unwrap();
    let r = emit_report(
        &[v],
        ReportFormat::Json,
        &ReportMeta::new(0, Budget::DEFAULT_STEPS),
    )
    .unwrap();
    let j: serde_json::Value = serde_json::from_str(&r).unwrap();
    let rec = &j["results"][0];
    assert_eq!(rec["input"]["statement"], "theorem-1.1");
    assert_eq!(
        rec["input"]["roles"],
        serde_json::json!({"x1": 0, "x2": 1, "y1": 5, "y2": 6})
    );
    assert_eq!(rec["outcome"]["status"], "certified");
    assert_eq!(rec["outcome"]["disjunct"], "i");
    assert_eq!(rec["outcome"]["certificate"]["kind"], "tk5");
    assert_eq!(
        rec["outcome"]["certificate"]["witness"]["branch"],
        serde_json::json!([1, 2, 3, 4, 5])
    );
}

#[test]
fn every_statement_on_small_corpus() {
    let mut graphs = Vec::new();
    for f in [
        Family::CompleteMinusEdge { n: 8, matching: 2 },
        Family::ApexOverPlanar {
            base: PlanarBase::Icosahedron,
        },
        Family::ApexOverPlanar {
            base: PlanarBase::DoubleWheel(6),
        },
    ] {
        for (i, g) in corpus_generate(&f).unwrap().into_iter().enumerate() {
            graphs.push((format!("{}#{i}", f.label()), g));
        }
    }
    graphs.push(("glued".into(), glued_host()));
    let v = sweep(
        &graphs,
        &Statement::ALL,
        3,
        &VerifyOptions::default(),
        Some(2),
    )
    .unwrap();
    let seen: std::collections::BTreeSet<Statement> = v.iter().map(|x| x.statement()).collect();
    for st in [
        Statement::Main,
        Statement::PathTk5,
        Statement::ApexPlanar,
        Statement::ClassifyPath,
        Statement::TriangleCut,
    ] {
        assert!(seen.contains(&st), "{st} not exercised");
    }
    assert!(v.iter().all(|x| x.is_certified() && validate_verdict(x)));
}
