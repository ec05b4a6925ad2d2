//! DD and DA bimodules as labeled directed multigraphs.

mod cancel;
mod check;
mod morphism;
mod ops;
mod serial;
mod tensor;

use std::collections::HashMap;

use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraId, Degree, IState, Monomial};
use crate::f2::F2Sum;

pub use cancel::{cancel_da, cancel_dd, cancellable_pairs_da, cancellable_pairs_dd, underlying_type_d, Cancellation};
pub use check::{check_da, check_dd, dd_relation, validate_compat_da, validate_compat_dd, DdResidual};
pub use morphism::{compose_dd, dd_morphism_boundary, verify_homotopy_data, DDMorphism, MorphismTerm};
pub use ops::{dual_da, dual_dd, graphs_isomorphic, relabel_da, relabel_dd};
pub use serial::{from_json, to_dot, to_json};
pub use tensor::box_tensor;

/// A term a ⊗ a' of a DD edge label.
pub type TensorTerm = (Monomial, Monomial);
pub type Tensor = F2Sum<TensorTerm>;

#[derive(Debug, Error)]
pub enum BimoduleError {
    #[error("({x}, {y}) is not a cancellable pair")]
    NotCancellable { x: String, y: String },
    #[error("zig-zags through ({x}, {y}) do not terminate within {bound} alternations")]
    NotValid { x: String, y: String, bound: usize },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("json: {0}")]
    Json(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub name: String,
    pub idem1: IState,
    pub idem2: IState,
    pub degree: Degree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DDEdge {
    pub from: usize,
    pub to: usize,
    pub label: Vec<TensorTerm>,
    pub annotation: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DAEdge {
    pub from: usize,
    pub to: usize,
    pub inputs: Vec<Monomial>,
    pub output: Monomial,
    pub annotation: Option<String>,
}

impl DAEdge {
    pub fn arity(&self) -> usize {
        self.inputs.len() + 1
    }
}

/// A DD bimodule over (A, A'), left-left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DDGraph {
    pub alg_a: AlgebraId,
    pub alg_b: AlgebraId,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<DDEdge>,
}

/// A DA bimodule: left type D over A, right A-infinity over A'. Identity δ¹₂ edges are implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DAGraph {
    pub alg_a: AlgebraId,
    pub alg_b: AlgebraId,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<DAEdge>,
}

/// Either kind of bimodule graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bimodule {
    DD(DDGraph),
    DA(DAGraph),
}

impl Bimodule {
    pub fn vertices(&self) -> &[Vertex] {
        match self {
            Bimodule::DD(g) => &g.vertices,
            Bimodule::DA(g) => &g.vertices,
        }
    }

    pub fn algebras(&self) -> (AlgebraId, AlgebraId) {
        match self {
            Bimodule::DD(g) => (g.alg_a, g.alg_b),
            Bimodule::DA(g) => (g.alg_a, g.alg_b),
        }
    }
}

fn index_of(vertices: &[Vertex], name: &str) -> Result<usize, BimoduleError> {
    vertices.iter().position(|v| v.name == name).ok_or_else(|| BimoduleError::UnknownVertex(name.to_string()))
}

fn name_map(vertices: &[Vertex]) -> HashMap<&str, usize> {
    vertices.iter().enumerate().map(|(i, v)| (v.name.as_str(), i)).collect()
}

/// Sort key for deterministic output: (summand, Maslov descending, name).
pub fn vertex_order(v: &Vertex) -> (usize, i64, String) {
    (v.idem1.len(), -v.degree.maslov, v.name.clone())
}

impl DDGraph {
    pub fn new(alg_a: AlgebraId, alg_b: AlgebraId) -> Self {
        DDGraph { alg_a, alg_b, vertices: Vec::new(), edges: Vec::new() }
    }

    pub fn index(&self, name: &str) -> Result<usize, BimoduleError> {
        index_of(&self.vertices, name)
    }

    pub fn add_vertex(&mut self, v: Vertex) -> usize {
        self.vertices.push(v);
        self.vertices.len() - 1
    }

    pub fn add_edge(&mut self, from: usize, to: usize, label: Vec<TensorTerm>) {
        self.edges.push(DDEdge { from, to, label, annotation: None });
    }

    /// Sum of all label terms on edges from `from` to `to`.
    pub fn label_between(&self, from: usize, to: usize) -> Tensor {
        self.edges.iter().filter(|e| e.from == from && e.to == to).flat_map(|e| e.label.iter().cloned()).collect()
    }

    /// Per-vertex outgoing terms, each multi-edge term listed separately.
    pub(crate) fn out_terms(&self) -> Vec<Vec<(usize, &TensorTerm)>> {
        let mut out = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            for t in &e.label {
                out[e.from].push((e.to, t));
            }
        }
        out
    }

    /// Adds a constant degree to every vertex.
    pub fn shifted(&self, d: &Degree) -> DDGraph {
        let mut g = self.clone();
        for v in &mut g.vertices {
            v.degree = &v.degree + d;
        }
        g
    }
}

impl DAGraph {
    pub fn new(alg_a: AlgebraId, alg_b: AlgebraId) -> Self {
        DAGraph { alg_a, alg_b, vertices: Vec::new(), edges: Vec::new() }
    }

    pub fn index(&self, name: &str) -> Result<usize, BimoduleError> {
        index_of(&self.vertices, name)
    }

    pub fn add_vertex(&mut self, v: Vertex) -> usize {
        self.vertices.push(v);
        self.vertices.len() - 1
    }

    pub fn add_edge(&mut self, from: usize, to: usize, inputs: Vec<Monomial>, output: Monomial) {
        self.edges.push(DAEdge { from, to, inputs, output, annotation: None });
    }

    pub fn shifted(&self, d: &Degree) -> DAGraph {
        let mut g = self.clone();
        for v in &mut g.vertices {
            v.degree = &v.degree + d;
        }
        g
    }

    /// Merges edges with equal (from, to, inputs, output) modulo 2.
    pub fn normalized(&self) -> DAGraph {
        let mut sums: F2Sum<(usize, usize, Vec<Monomial>, Monomial)> = F2Sum::new();
        for e in &self.edges {
            sums.toggle((e.from, e.to, e.inputs.clone(), e.output.clone()));
        }
        let mut g = DAGraph { edges: Vec::new(), ..self.clone() };
        for (from, to, inputs, output) in sums {
            let annotation = self
                .edges
                .iter()
                .find(|e| e.from == from && e.to == to && e.inputs == inputs && e.output == output)
                .and_then(|e| e.annotation.clone());
            g.edges.push(DAEdge { from, to, inputs, output, annotation });
        }
        g
    }
}

pub(crate) fn show_tensor(t: &Tensor) -> String {
    if t.is_zero() {
        return "0".into();
    }
    t.iter().map(|(a, b)| format!("{a} ⊗ {b}")).collect::<Vec<_>>().join(" + ")
}

/// Product in A ⊗ A' computed factorwise.
pub(crate) fn tensor_mul(a: &crate::algebra::Algebra, b: &crate::algebra::Algebra, s: &Tensor, t: &Tensor) -> Tensor {
    let mut out = Tensor::new();
    for (x, x2) in s {
        for (y, y2) in t {
            let p = a.mul_mono(x, y);
            if p.is_zero() {
                continue;
            }
            let q = b.mul_mono(x2, y2);
            for m in &p {
                for m2 in &q {
                    out.toggle((m.clone(), m2.clone()));
                }
            }
        }
    }
    out
}
