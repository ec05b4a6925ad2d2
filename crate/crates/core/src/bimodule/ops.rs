use std::collections::{BTreeMap, HashMap, HashSet};

use itertools::Itertools;

use super::{name_map, show_tensor, Bimodule, DAEdge, DAGraph, DDEdge, DDGraph, Tensor, Vertex};
use crate::algebra::{Algebra, Monomial, Symmetry};
use crate::f2::F2Sum;
use crate::report::Report;

fn negated(vertices: &[Vertex]) -> Vec<Vertex> {
    vertices.iter().map(|v| Vertex { degree: -&v.degree, ..v.clone() }).collect()
}

/// Reverses every arrow, reinterprets labels in the opposite algebras and negates degrees.
pub fn dual_dd(g: &DDGraph) -> DDGraph {
    DDGraph {
        alg_a: g.alg_a.opposite(),
        alg_b: g.alg_b.opposite(),
        vertices: negated(&g.vertices),
        edges: g.edges.iter().map(|e| DDEdge { from: e.to, to: e.from, ..e.clone() }).collect(),
    }
}

/// As `dual_dd`, also reversing each input sequence.
pub fn dual_da(g: &DAGraph) -> DAGraph {
    DAGraph {
        alg_a: g.alg_a.opposite(),
        alg_b: g.alg_b.opposite(),
        vertices: negated(&g.vertices),
        edges: g
            .edges
            .iter()
            .map(|e| DAEdge { from: e.to, to: e.from, inputs: e.inputs.iter().rev().cloned().collect(), ..e.clone() })
            .collect(),
    }
}

fn map_one(alg: &Algebra, which: Symmetry, m: &Monomial) -> Monomial {
    let img = alg.map_monomial(which, m);
    debug_assert_eq!(img.len(), 1);
    img.first().expect("symmetries send basis monomials to basis monomials").clone()
}

fn relabel_vertices(vertices: &[Vertex], which: Symmetry) -> Vec<Vertex> {
    vertices
        .iter()
        .map(|v| Vertex {
            name: v.name.clone(),
            idem1: which.on_istate(v.idem1),
            idem2: which.on_istate(v.idem2),
            degree: which.on_degree(&v.degree),
        })
        .collect()
}

/// Applies a symmetry to both algebras, every label, every idempotent and every degree.
pub fn relabel_dd(g: &DDGraph, which: Symmetry) -> DDGraph {
    let (a, b) = (g.alg_a.algebra(), g.alg_b.algebra());
    DDGraph {
        alg_a: which.on_algebra(g.alg_a),
        alg_b: which.on_algebra(g.alg_b),
        vertices: relabel_vertices(&g.vertices, which),
        edges: g
            .edges
            .iter()
            .map(|e| DDEdge {
                label: e.label.iter().map(|(p, q)| (map_one(&a, which, p), map_one(&b, which, q))).collect(),
                ..e.clone()
            })
            .collect(),
    }
}

pub fn relabel_da(g: &DAGraph, which: Symmetry) -> DAGraph {
    let (a, b) = (g.alg_a.algebra(), g.alg_b.algebra());
    DAGraph {
        alg_a: which.on_algebra(g.alg_a),
        alg_b: which.on_algebra(g.alg_b),
        vertices: relabel_vertices(&g.vertices, which),
        edges: g
            .edges
            .iter()
            .map(|e| DAEdge {
                inputs: e.inputs.iter().map(|m| map_one(&b, which, m)).collect(),
                output: map_one(&a, which, &e.output),
                ..e.clone()
            })
            .collect(),
    }
}

type DaKey = (String, String, Vec<Monomial>, Monomial);

fn dd_labels(g: &DDGraph, rename: &dyn Fn(&str) -> String) -> BTreeMap<(String, String), Tensor> {
    let mut out: BTreeMap<(String, String), Tensor> = BTreeMap::new();
    for e in &g.edges {
        let key = (rename(&g.vertices[e.from].name), rename(&g.vertices[e.to].name));
        out.entry(key).or_default().add_all(e.label.iter().cloned());
    }
    out.retain(|_, t| !t.is_zero());
    out
}

fn da_labels(g: &DAGraph, rename: &dyn Fn(&str) -> String) -> F2Sum<DaKey> {
    g.edges
        .iter()
        .map(|e| (rename(&g.vertices[e.from].name), rename(&g.vertices[e.to].name), e.inputs.clone(), e.output.clone()))
        .collect()
}

fn show_da_key((x, y, ins, out): &DaKey) -> String {
    format!("{x} → {y}: {out} ⊗ ({})", ins.iter().join(", "))
}

/// Whether `map` (names of `g1` to names of `g2`) is a bijection preserving idempotents,
/// degrees and the labeled edge multiset modulo 2.
pub fn graphs_isomorphic(g1: &Bimodule, g2: &Bimodule, map: &dyn Fn(&str) -> String) -> Report {
    let mut rep = Report::new("graph isomorphism");
    let (a1, a2) = (g1.algebras(), g2.algebras());
    rep.check(a1 == a2, "algebras", || format!("({}, {}) vs ({}, {})", a1.0, a1.1, a2.0, a2.1));
    let (v1, v2) = (g1.vertices(), g2.vertices());
    let index2 = name_map(v2);
    let images: Vec<String> = v1.iter().map(|v| map(&v.name)).collect();
    let distinct: HashSet<&String> = images.iter().collect();
    let bijective = v1.len() == v2.len()
        && distinct.len() == images.len()
        && images.iter().all(|n| index2.contains_key(n.as_str()));
    rep.check(bijective, "vertex map is a bijection", || format!("{} vs {} vertices", v1.len(), v2.len()));
    if !bijective {
        return rep;
    }
    for (v, img) in v1.iter().zip(&images) {
        let w = &v2[index2[img.as_str()]];
        rep.check(v.idem1 == w.idem1 && v.idem2 == w.idem2, "idempotents preserved", || {
            format!("{} {}|{} ↦ {} {}|{}", v.name, v.idem1, v.idem2, w.name, w.idem1, w.idem2)
        });
        rep.check(v.degree == w.degree, "degree preserved", || {
            format!("{} {} ↦ {} {}", v.name, v.degree, w.name, w.degree)
        });
    }
    let lookup: HashMap<&str, &str> = v1.iter().zip(&images).map(|(v, i)| (v.name.as_str(), i.as_str())).collect();
    let rename = |s: &str| lookup[s].to_string();
    let keep = |s: &str| s.to_string();
    match (g1, g2) {
        (Bimodule::DD(x), Bimodule::DD(y)) => {
            let (l1, l2) = (dd_labels(x, &rename), dd_labels(y, &keep));
            for key in l1.keys().chain(l2.keys()).unique() {
                let empty = Tensor::new();
                let (s, t) = (l1.get(key).unwrap_or(&empty), l2.get(key).unwrap_or(&empty));
                rep.check(s == t, format!("edge labels {} → {}", key.0, key.1), || {
                    format!("{} vs {}", show_tensor(s), show_tensor(t))
                });
            }
        }
        (Bimodule::DA(x), Bimodule::DA(y)) => {
            let mut diff = da_labels(x, &rename);
            diff.add(&da_labels(y, &keep));
            rep.checked += 1;
            for k in &diff {
                rep.fail("edge multiset", show_da_key(k), "present on one side only");
            }
        }
        _ => rep.fail("bimodule kinds", "DD vs DA", ""),
    }
    rep
}
