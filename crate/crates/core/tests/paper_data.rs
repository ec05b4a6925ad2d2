use std::collections::BTreeSet;

use bordered_core::algebra::{AlgebraId, IState, Symmetry};
use bordered_core::bimodule::{check_dd, Bimodule, DAGraph, DDGraph};
use bordered_core::paper_data::{
    build, global_xdd, koszul_k, local_degree, parse_vertex_name, symmetry_map, symmetry_square, vertex_name,
    xda_local, xda_simplified, xdd_local, xdd_simplified, PaperError, Pattern, SymmetryTarget, Tag, TAGS,
};

fn st(n: u8, m: &[u8]) -> IState {
    IState::new(n, m).unwrap()
}

fn dd_terms(g: &DDGraph, from: &str) -> BTreeSet<String> {
    let i = g.index(from).unwrap();
    g.edges
        .iter()
        .filter(|e| e.from == i)
        .flat_map(|e| {
            e.label
                .iter()
                .map(move |(a, b)| format!("({}|{}) {}", a.word_string(), b.word_string(), g.vertices[e.to].name))
        })
        .collect()
}

fn da_terms(g: &DAGraph, from: &str, arity: usize) -> BTreeSet<String> {
    let i = g.index(from).unwrap();
    g.edges
        .iter()
        .filter(|e| e.from == i && e.arity() == arity)
        .map(|e| {
            let ins: Vec<_> = e.inputs.iter().map(|m| m.word_string()).collect();
            format!("[{}] {} {}", ins.join(","), e.output.word_string(), g.vertices[e.to].name)
        })
        .collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

#[test]
fn koszul_small_cases() {
    let k = koszul_k(2, 1).unwrap();
    assert_eq!(k.vertices.len(), 3);
    assert_eq!(dd_terms(&k, "k_{1}"), set(&["(U1|C1) k_{1}", "(U2|C2) k_{1}", "(L1|R1) k_{0}", "(R2|L2) k_{2}"]));
    let k0 = koszul_k(2, 0).unwrap();
    assert_eq!(k0.vertices.len(), 1);
    // B(2,0) is spanned by its idempotent, so every U_i vanishes there.
    assert!(k0.edges.is_empty());
    for n in 1..=4u8 {
        for k in 0..=n {
            let g = koszul_k(n, k).unwrap();
            let binom = (0..k as u64).fold(1u64, |acc, i| acc * (n as u64 + 1 - i) / (i + 1));
            assert_eq!(g.vertices.len() as u64, binom, "K({n},{k})");
            assert!(g.vertices.iter().all(|v| v.idem2 == v.idem1.complement() && v.degree.maslov == 0));
        }
    }
    assert!(matches!(koszul_k(2, 3), Err(PaperError::OutOfRange(_))));
}

#[test]
fn local_dd_shape() {
    let g = xdd_local();
    assert_eq!(g.vertices.len(), 24);
    assert_eq!(g.alg_a, AlgebraId::b(2));
    assert_eq!(g.alg_b, AlgebraId::bshriek(2));
    assert_eq!(dd_terms(&g, "S+b_∅"), set(&["(|) S-b_∅"]));
    assert_eq!(dd_terms(&g, "S+b_A"), set(&["(|) S-b_A"]));
    assert!(check_dd(&g).passed);
}

#[test]
fn local_da_examples() {
    for p in [Pattern::Standard, Pattern::Alternate] {
        let g = xda_local(p);
        assert_eq!(g.vertices.len(), 24);
        assert_eq!(da_terms(&g, "S+b_C", 1), set(&["[]  S-b_C", "[] L2 Eb_B"]));
        let five = da_terms(&g, "S-t_AC", 5);
        assert_eq!(five.len(), 9, "{five:?}");
        assert!(five.iter().all(|t| t.ends_with("U1 U2 S+t_AC")), "{five:?}");
    }
    let (s, a) = (xda_local(Pattern::Standard), xda_local(Pattern::Alternate));
    for arity in [1, 2, 4] {
        for v in &s.vertices {
            assert_eq!(da_terms(&s, &v.name, arity), da_terms(&a, &v.name, arity), "{} arity {arity}", v.name);
        }
    }
    for v in s.vertices.iter().filter(|v| v.idem1.len() < 2) {
        for arity in [3, 5] {
            assert_eq!(da_terms(&s, &v.name, arity), da_terms(&a, &v.name, arity));
        }
    }
}

#[test]
fn simplified_vertex_sets() {
    let g = xdd_simplified();
    let names: BTreeSet<String> = g.vertices.iter().filter(|v| v.idem1.len() == 1).map(|v| v.name.clone()).collect();
    assert_eq!(names, set(&["S-t_A", "S-t_C", "Wt_B", "Eb_B", "Wb_B", "Et_B", "S+t_A", "S+t_C"]));
    let names: BTreeSet<String> = g.vertices.iter().filter(|v| v.idem1.is_empty()).map(|v| v.name.clone()).collect();
    assert_eq!(names, set(&["S-t_∅", "S+t_∅"]));
    for p in [Pattern::Standard, Pattern::Alternate] {
        let da: BTreeSet<String> = xda_simplified(p).vertices.iter().map(|v| v.name.clone()).collect();
        let dd: BTreeSet<String> = g.vertices.iter().map(|v| v.name.clone()).collect();
        assert_eq!(da, dd);
    }
}

#[test]
fn degree_tables() {
    assert_eq!(Tag::SMt.maslov(), 1);
    assert_eq!(Tag::Wb.deg1_coeffs(), [0, 1, 1, 1]);
    let alex = [(-3, 2), (-1, 1), (-1, 2), (-1, 1), (0, 1), (-1, 2), (0, 1), (1, 2)];
    for (t, (p, q)) in TAGS.into_iter().zip(alex) {
        assert_eq!(local_degree(t).single_alexander(), num_rational::Rational64::new(p, q), "{t}");
    }
}

#[test]
fn vertex_names_round_trip() {
    for t in TAGS {
        for m in [vec![], vec![0], vec![1, 2], vec![0, 2]] {
            let x = st(2, &m);
            assert_eq!(parse_vertex_name(&vertex_name(t, x)).unwrap(), (t, x));
        }
    }
    assert!(parse_vertex_name("Q_A").is_err());
    assert!(parse_vertex_name("Wt_D").is_err());
}

#[test]
fn symmetry_bijections() {
    let r = |s| symmetry_map(SymmetryTarget::XddTilde, Symmetry::R, s).unwrap();
    assert_eq!(r("S-t_∅"), "S-t_∅");
    assert_eq!(r("Wt_B"), "Eb_B");
    assert_eq!(r("S-t_A"), "S-t_C");
    let o = |s| symmetry_map(SymmetryTarget::XddTilde, Symmetry::O, s).unwrap();
    assert_eq!(o("S-t_A"), "S+t_A");
    assert_eq!(o("Wt_B"), "Wb_B");
    assert_eq!(o("Eb_B"), "Et_B");
    assert!(symmetry_map(SymmetryTarget::Xdd, Symmetry::O, "S-t_A").is_err());
    assert!(symmetry_square(SymmetryTarget::Xdd, Symmetry::O).is_err());
}

#[test]
fn r_and_o_exchange_the_summand3_patterns() {
    for t in [SymmetryTarget::XdaTilde(Pattern::Standard), SymmetryTarget::Xda(Pattern::Standard)] {
        assert!(symmetry_square(t, Symmetry::Ro).unwrap().passed);
    }
    for which in [Symmetry::R, Symmetry::O] {
        assert!(symmetry_square(SymmetryTarget::XdaTilde(Pattern::Standard), which).unwrap().passed);
    }
}

#[test]
fn global_counts_and_base_case() {
    assert_eq!(global_xdd(3, 1).unwrap().vertices.len(), 48);
    assert_eq!(global_xdd(4, 2).unwrap().vertices.len(), 96);
    for (n, i) in [(1, 1), (3, 0), (3, 3)] {
        assert!(matches!(global_xdd(n, i), Err(PaperError::OutOfRange(_))));
    }
    let g = global_xdd(2, 1).unwrap();
    let l = xdd_local();
    assert_eq!(g.vertices.len(), l.vertices.len());
    for v in &g.vertices {
        let base = v.name.strip_suffix("@{}").unwrap();
        let w = &l.vertices[l.index(base).unwrap()];
        assert_eq!((v.idem1, v.idem2, &v.degree), (w.idem1, w.idem2, &w.degree));
    }
}

#[test]
fn identifiers() {
    for id in ["XDD", "XDA", "XDA-alt", "XDD-tilde", "XDA-tilde", "XDA-alt-tilde", "K:3,1", "K:2", "XDDglobal:3,2"] {
        build(id).unwrap();
    }
    assert!(matches!(build("XDD-tilde").unwrap(), Bimodule::DD(_)));
    assert!(matches!(build("XDA").unwrap(), Bimodule::DA(_)));
    for bad in ["XYZ", "K:0", "K:x", "K:a,b", "XDDglobal:2,2"] {
        assert!(build(bad).is_err(), "{bad}");
    }
}
