use std::fmt::Write as _;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{index_of, vertex_order, Bimodule, BimoduleError, DAEdge, DAGraph, DDEdge, DDGraph, Vertex};
use crate::algebra::{AlgebraId, Degree, IState, Monomial};

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct GraphJson {
    algebra_a: String,
    algebra_a2: String,
    vertices: Vec<VertexJson>,
    edges: Vec<EdgeJson>,
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    name: String,
    idem1: Vec<u8>,
    idem2: Vec<u8>,
    maslov: i64,
    alexander: Vec<i64>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, PartialOrd, Ord)]
struct EdgeJson {
    from: String,
    to: String,
    arity: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    inputs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    output: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    label: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    annotation: Option<String>,
}

fn sorted_vertices(vs: &[Vertex]) -> Vec<&Vertex> {
    vs.iter().sorted_by_key(|v| vertex_order(v)).collect()
}

fn vertex_json(v: &Vertex) -> VertexJson {
    VertexJson {
        name: v.name.clone(),
        idem1: v.idem1.members(),
        idem2: v.idem2.members(),
        maslov: v.degree.maslov,
        alexander: v.degree.quarters().to_vec(),
    }
}

fn dd_edge_json(g: &DDGraph, e: &DDEdge) -> EdgeJson {
    EdgeJson {
        from: g.vertices[e.from].name.clone(),
        to: g.vertices[e.to].name.clone(),
        arity: 0,
        inputs: Vec::new(),
        output: None,
        label: e.label.iter().sorted().map(|(p, q)| [p.to_string(), q.to_string()]).collect(),
        annotation: e.annotation.clone(),
    }
}

fn da_edge_json(g: &DAGraph, e: &DAEdge) -> EdgeJson {
    EdgeJson {
        from: g.vertices[e.from].name.clone(),
        to: g.vertices[e.to].name.clone(),
        arity: e.arity(),
        inputs: e.inputs.iter().map(|m| m.to_string()).collect(),
        output: Some(e.output.to_string()),
        label: Vec::new(),
        annotation: e.annotation.clone(),
    }
}

/// Deterministic JSON: vertices by (summand, Maslov descending, name), edges lexicographically.
pub fn to_json(b: &Bimodule) -> String {
    let (a, a2) = b.algebras();
    let mut edges: Vec<EdgeJson> = match b {
        Bimodule::DD(g) => g.edges.iter().map(|e| dd_edge_json(g, e)).collect(),
        Bimodule::DA(g) => g.edges.iter().map(|e| da_edge_json(g, e)).collect(),
    };
    edges.sort();
    let doc = GraphJson {
        algebra_a: a.to_string(),
        algebra_a2: a2.to_string(),
        vertices: sorted_vertices(b.vertices()).into_iter().map(vertex_json).collect(),
        edges,
    };
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

fn json_err(e: impl std::fmt::Display) -> BimoduleError {
    BimoduleError::Json(e.to_string())
}

/// Parses the JSON form. A document whose edges all have arity 0 is a DD graph.
pub fn from_json(s: &str) -> Result<Bimodule, BimoduleError> {
    let doc: GraphJson = serde_json::from_str(s).map_err(json_err)?;
    let a: AlgebraId = doc.algebra_a.parse()?;
    let a2: AlgebraId = doc.algebra_a2.parse()?;
    let n = a.n;
    let mut vertices = Vec::new();
    for v in &doc.vertices {
        if v.alexander.len() != 2 * n as usize {
            return Err(json_err(format!("vertex {} has {} Alexander components", v.name, v.alexander.len())));
        }
        vertices.push(Vertex {
            name: v.name.clone(),
            idem1: IState::new(n, &v.idem1)?,
            idem2: IState::new(a2.n, &v.idem2)?,
            degree: Degree::from_quarters(v.maslov, v.alexander.clone()),
        });
    }
    let is_dd = doc.edges.iter().all(|e| e.arity == 0) && !doc.edges.iter().any(|e| e.output.is_some());
    let (alg, alg2) = (a.algebra(), a2.algebra());
    if is_dd {
        let mut g = DDGraph::new(a, a2);
        g.vertices = vertices;
        for e in &doc.edges {
            let mut label = Vec::new();
            for [p, q] in &e.label {
                label.push((alg.parse_monomial(p)?, alg2.parse_monomial(q)?));
            }
            let (from, to) = (index_of(&g.vertices, &e.from)?, index_of(&g.vertices, &e.to)?);
            g.edges.push(DDEdge { from, to, label, annotation: e.annotation.clone() });
        }
        Ok(Bimodule::DD(g))
    } else {
        let mut g = DAGraph::new(a, a2);
        g.vertices = vertices;
        for e in &doc.edges {
            let out =
                e.output.as_deref().ok_or_else(|| json_err(format!("edge {} → {} lacks an output", e.from, e.to)))?;
            let inputs = e.inputs.iter().map(|m| alg2.parse_monomial(m)).collect::<Result<Vec<_>, _>>()?;
            if e.arity != inputs.len() + 1 {
                return Err(json_err(format!(
                    "edge {} → {} has arity {} but {} inputs",
                    e.from,
                    e.to,
                    e.arity,
                    inputs.len()
                )));
            }
            let (from, to) = (index_of(&g.vertices, &e.from)?, index_of(&g.vertices, &e.to)?);
            g.edges.push(DAEdge {
                from,
                to,
                inputs,
                output: alg.parse_monomial(out)?,
                annotation: e.annotation.clone(),
            });
        }
        Ok(Bimodule::DA(g))
    }
}

/// Edge color by arity: δ¹₁ blue, δ¹₃ green, δ¹₄ red, δ¹₅ teal; DD edges and anything else black.
pub fn arity_color(arity: usize) -> &'static str {
    match arity {
        1 => "blue",
        3 => "green",
        4 => "red",
        5 => "#008080",
        _ => "black",
    }
}

fn word(m: &Monomial) -> String {
    if m.is_idempotent() {
        "1".into()
    } else {
        m.word_string()
    }
}

fn quote(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn to_dot(b: &Bimodule) -> String {
    let (a, a2) = b.algebras();
    let mut out = String::new();
    writeln!(out, "digraph bimodule {{").unwrap();
    writeln!(out, "  label=\"{a} ⊗ {a2}\";").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    let verts = b.vertices();
    for v in sorted_vertices(verts) {
        let label = format!(
            "{}\\n{}|{}\\n({}; {})",
            quote(&v.name),
            v.idem1,
            v.idem2,
            v.degree.maslov,
            v.degree.single_alexander()
        );
        writeln!(out, "  \"{}\" [label=\"{label}\"];", quote(&v.name)).unwrap();
    }
    let mut lines: Vec<String> = Vec::new();
    let annot = |x: &Option<String>| x.as_ref().map(|s| format!(" {s}")).unwrap_or_default();
    match b {
        Bimodule::DD(g) => {
            for e in &g.edges {
                let label = e.label.iter().sorted().map(|(p, q)| format!("{} ⊗ {}", word(p), word(q))).join(" + ");
                lines.push(format!(
                    "  \"{}\" -> \"{}\" [label=\"{}{}\", color=\"{}\"];",
                    quote(&verts[e.from].name),
                    quote(&verts[e.to].name),
                    quote(&label),
                    quote(&annot(&e.annotation)),
                    arity_color(0)
                ));
            }
        }
        Bimodule::DA(g) => {
            for e in &g.edges {
                let label = format!("{} ⊗ ({})", word(&e.output), e.inputs.iter().map(word).join(", "));
                lines.push(format!(
                    "  \"{}\" -> \"{}\" [label=\"{}{}\", color=\"{}\"];",
                    quote(&verts[e.from].name),
                    quote(&verts[e.to].name),
                    quote(&label),
                    quote(&annot(&e.annotation)),
                    arity_color(e.arity())
                ));
            }
        }
    }
    lines.sort();
    for l in lines {
        writeln!(out, "{l}").unwrap();
    }
    out.push_str("}\n");
    out
}
