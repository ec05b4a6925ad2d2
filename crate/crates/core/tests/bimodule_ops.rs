use proptest::prelude::*;

use bordered_core::algebra::{AlgebraId, Degree, IState, Symmetry};
use bordered_core::bimodule::{
    cancel_dd, cancellable_pairs_dd, check_dd, dual_da, dual_dd, from_json, graphs_isomorphic, relabel_da, relabel_dd,
    to_dot, to_json, Bimodule, BimoduleError, DDGraph, Vertex,
};
use bordered_core::paper_data::{build, xda_local, xdd_local, xdd_simplified, Pattern};

fn same(s: &str) -> String {
    s.to_string()
}

fn two_vertex(label: &[(&str, &str)]) -> DDGraph {
    let (ida, idb) = (AlgebraId::b(1), AlgebraId::bshriek(1));
    let (a, b) = (ida.algebra(), idb.algebra());
    let x = IState::new(1, &[0]).unwrap();
    let y = x.complement();
    let mut g = DDGraph::new(ida, idb);
    for name in ["x", "y"] {
        g.add_vertex(Vertex { name: name.into(), idem1: x, idem2: y, degree: Degree::zero(1) });
    }
    g.add_edge(0, 1, label.iter().map(|(p, q)| (a.mono(x, p), b.mono(y, q))).collect());
    g
}

#[test]
fn non_terminating_zigzag_is_not_valid() {
    let g = two_vertex(&[("", ""), ("U1", "U1")]);
    assert!(matches!(cancel_dd(&g, 0, 1), Err(BimoduleError::NotValid { .. })));
}

#[test]
fn pair_without_identity_is_not_cancellable() {
    let g = two_vertex(&[("U1", "C1")]);
    assert!(cancellable_pairs_dd(&g).is_empty());
    assert!(matches!(cancel_dd(&g, 0, 1), Err(BimoduleError::NotCancellable { .. })));
}

#[test]
fn json_round_trip_is_byte_identical() {
    for id in ["XDD", "XDA", "XDA-alt", "XDD-tilde", "XDA-tilde", "K:3,2", "XDDglobal:3,1"] {
        let b = build(id).unwrap();
        let s = to_json(&b);
        let back = from_json(&s).unwrap();
        assert_eq!(to_json(&back), s, "{id}");
        assert!(graphs_isomorphic(&back, &b, &same).passed, "{id}");
    }
}

#[test]
fn malformed_json_is_rejected() {
    assert!(from_json("{").is_err());
    let s = to_json(&build("XDD").unwrap()).replacen("\"S+b_∅\"", "\"nowhere\"", 1);
    assert!(from_json(&s).is_err());
}

#[test]
fn dot_export_uses_arity_colors() {
    let dd = to_dot(&build("XDD").unwrap());
    assert_eq!(dd.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count(), 24);
    let da = to_dot(&build("XDA").unwrap());
    for c in ["\"blue\"", "\"green\"", "\"red\"", "\"#008080\""] {
        assert!(da.contains(c), "{c}");
    }
}

#[test]
fn duals_and_relabellings_are_involutions() {
    let g = xdd_local();
    assert_eq!(dual_dd(&dual_dd(&g)), g);
    let d = xda_local(Pattern::Standard);
    assert_eq!(dual_da(&dual_da(&d)), d);
    for which in [Symmetry::R, Symmetry::O, Symmetry::Ro] {
        let t = xdd_simplified();
        let back = relabel_dd(&relabel_dd(&t, which), which);
        assert!(graphs_isomorphic(&Bimodule::DD(back), &Bimodule::DD(t), &same).passed, "{which:?}");
        let back = relabel_da(&relabel_da(&d, which), which);
        assert!(graphs_isomorphic(&Bimodule::DA(back), &Bimodule::DA(d.clone()), &same).passed, "{which:?}");
    }
}

#[test]
fn isomorphism_rejects_a_wrong_map() {
    let g = Bimodule::DD(xdd_local());
    let swap = |s: &str| match s {
        "S-t_∅" => "S+t_∅".to_string(),
        "S+t_∅" => "S-t_∅".to_string(),
        _ => s.to_string(),
    };
    assert!(!graphs_isomorphic(&g, &g, &swap).passed);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Cancelling any valid pair of a DD bimodule leaves a DD bimodule.
    #[test]
    fn cancellation_preserves_validity(n in 3u8..=4, i in 1u8..=3, pick in 0usize..64) {
        prop_assume!(i < n);
        let g = match build(&format!("XDDglobal:{n},{i}")).unwrap() { Bimodule::DD(g) => g, _ => unreachable!() };
        let pairs = cancellable_pairs_dd(&g);
        let (x, y) = pairs[pick % pairs.len()];
        let c = cancel_dd(&g, x, y).unwrap();
        prop_assert_eq!(c.graph.vertices.len(), g.vertices.len() - 2);
        prop_assert!(check_dd(&c.graph).passed);
    }

    /// Deleting a random DD term is detected, except for the identity term of the
    /// (S+b, S-b) pair over the empty I-state, which no other edge touches.
    #[test]
    fn dropped_global_term_is_detected(pick in 0usize..10_000) {
        let mut g = match build("XDDglobal:3,2").unwrap() { Bimodule::DD(g) => g, _ => unreachable!() };
        let total: usize = g.edges.iter().map(|e| e.label.len()).sum();
        let mut k = pick % total;
        let mut isolated = false;
        for e in &mut g.edges {
            if k < e.label.len() {
                let (a, b) = e.label.remove(k);
                isolated = g.vertices[e.from].idem1.is_empty() && a.is_idempotent() && b.is_idempotent();
                break;
            }
            k -= e.label.len();
        }
        g.edges.retain(|e| !e.label.is_empty());
        prop_assert_eq!(check_dd(&g).passed, isolated);
    }
}
