//! Checker sensitivity: small corruptions of valid bimodules must be caught with a named witness.

use bordered_core::algebra::Degree;
use bordered_core::bimodule::{
    box_tensor, cancel_dd, check_da, check_dd, graphs_isomorphic, validate_compat_da, validate_compat_dd,
    verify_homotopy_data, Bimodule,
};
use bordered_core::paper_data::{koszul_full, xda_local, xda_simplified, xdd_local, Pattern};

#[test]
fn deleting_any_da_edge_is_detected() {
    let k = koszul_full(2);
    for p in [Pattern::Standard, Pattern::Alternate] {
        let g = xda_local(p);
        assert!(check_da(&g).passed);
        for i in 0..g.edges.len() {
            let mut h = g.clone();
            let e = h.edges.remove(i);
            let (from, to) = (g.vertices[e.from].name.as_str(), g.vertices[e.to].name.as_str());
            let rep = check_da(&h);
            if (from, to) == ("S+b_∅", "S-b_∅") {
                // The only term of its summand: dropping it leaves a valid bimodule, so the
                // relations cannot see it, but the pairing with K no longer recovers X^DD.
                assert!(rep.passed);
                let t = box_tensor(&h, &k).unwrap();
                let iso = graphs_isomorphic(&Bimodule::DD(t), &Bimodule::DD(xdd_local()), &|s| s.to_string());
                assert!(!iso.passed);
                continue;
            }
            assert!(!rep.passed, "{p:?}: removing {from} → {to} (arity {}) went unnoticed", e.arity());
            assert!(!rep.failures[0].witness.is_empty());
        }
    }
}

#[test]
fn deleting_any_simplified_da_edge_breaks_the_relations() {
    let g = xda_simplified(Pattern::Standard);
    for k in 0..g.edges.len() {
        let mut h = g.clone();
        h.edges.remove(k);
        assert!(!check_da(&h).passed, "edge {k}");
    }
}

#[test]
fn dropped_dd_term_is_reported_at_its_pair() {
    let mut g = xdd_local();
    let (from, to) = (g.index("S-t_A").unwrap(), g.index("S+b_A").unwrap());
    let e = g.edges.iter_mut().find(|e| e.from == from && e.to == to).unwrap();
    let before = e.label.len();
    e.label.retain(|(a, b)| !(a.word_string() == "U1" && b.word_string() == "U1 C2"));
    assert_eq!(e.label.len(), before - 1);
    g.edges.retain(|e| !e.label.is_empty());
    let rep = check_dd(&g);
    assert!(!rep.passed);
    assert!(rep.failures.iter().any(|f| f.context == "pair (S-t_A, S-b_A)"), "{rep}");
}

#[test]
fn altered_maslov_grading_is_incompatible() {
    let mut g = xdd_local();
    let i = g.index("S-t_A").unwrap();
    g.vertices[i].degree.maslov += 1;
    assert!(!validate_compat_dd(&g).passed);
    let mut d = xda_local(Pattern::Standard);
    let i = d.index("Wt_B").unwrap();
    d.vertices[i].degree = &d.vertices[i].degree + &Degree::from_quarters(0, vec![4, 0, 0, 0]);
    assert!(!validate_compat_da(&d).passed);
}

#[test]
fn corrupted_homotopy_is_rejected() {
    let g = xdd_local();
    let c = cancel_dd(&g, g.index("S+b_A").unwrap(), g.index("S-b_A").unwrap()).unwrap();
    assert!(verify_homotopy_data(&g, &c.graph, &c.f, &c.g, &c.h).passed);
    let zero_h = bordered_core::bimodule::DDMorphism::zero(&g, &g, -1);
    assert!(!verify_homotopy_data(&g, &c.graph, &c.f, &c.g, &zero_h).passed);
    let mut bad_g = c.g.clone();
    if let Some(comp) = bad_g.components.iter_mut().find(|s| !s.is_empty()) {
        *comp = Default::default();
    }
    assert!(!verify_homotopy_data(&g, &c.graph, &c.f, &bad_g, &c.h).passed);
}

#[test]
fn corrupted_arity_four_term_names_its_witness() {
    let mut g = xda_local(Pattern::Standard);
    let k = g.edges.iter().position(|e| e.arity() == 4).expect("an arity-4 edge");
    let (from, to) = (g.vertices[g.edges[k].from].name.clone(), g.vertices[g.edges[k].to].name.clone());
    g.edges[k].inputs.reverse();
    let rep = check_da(&g);
    assert!(!rep.passed);
    assert!(rep.failures.iter().any(|f| f.witness.contains(&from) || f.witness.contains(&to)), "{rep}");
}
