use std::collections::BTreeMap;

use super::morphism::DDMorphism;
use super::{tensor_mul, BimoduleError, DAEdge, DAGraph, DDEdge, DDGraph, Tensor};
use crate::algebra::{Element, Monomial};

/// Maximum number of zig-zag alternations before a pair is declared not valid.
pub const ZIGZAG_BOUND: usize = 8;

/// Result of cancelling a pair: the smaller graph and the homotopy equivalence data
/// f: X' → X, g: X → X', h: X → X.
#[derive(Clone, Debug)]
pub struct Cancellation {
    pub graph: DDGraph,
    pub f: DDMorphism,
    pub g: DDMorphism,
    pub h: DDMorphism,
}

fn identity_term(g: &DDGraph, x: usize) -> (Monomial, Monomial) {
    let v = &g.vertices[x];
    (Monomial::idempotent(v.idem1), Monomial::idempotent(v.idem2))
}

/// Pairs (x, y) such that some edge x → y carries the term Ib ⊗ Ib'.
pub fn cancellable_pairs_dd(g: &DDGraph) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = g
        .edges
        .iter()
        .filter(|e| e.from != e.to && e.label.contains(&identity_term(g, e.from)))
        .map(|e| (e.from, e.to))
        .collect();
    out.dedup();
    out
}

pub fn cancellable_pairs_da(g: &DAGraph) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = g
        .edges
        .iter()
        .filter(|e| e.from != e.to && e.inputs.is_empty() && e.output.is_idempotent())
        .map(|e| (e.from, e.to))
        .collect();
    out.dedup();
    out
}

fn reindex(n: usize, x: usize, y: usize) -> Vec<Option<usize>> {
    let mut next = 0;
    (0..n)
        .map(|i| {
            if i == x || i == y {
                None
            } else {
                next += 1;
                Some(next - 1)
            }
        })
        .collect()
}

/// Cancels the pair joined by an Ib ⊗ Ib' term on an edge x → y.
pub fn cancel_dd(g: &DDGraph, x: usize, y: usize) -> Result<Cancellation, BimoduleError> {
    let names = || (g.vertices[x].name.clone(), g.vertices[y].name.clone());
    let id = identity_term(g, x);
    let Some(cut) = g.edges.iter().position(|e| e.from == x && e.to == y && x != y && e.label.contains(&id)) else {
        let (x, y) = names();
        return Err(BimoduleError::NotCancellable { x, y });
    };
    let (a, b) = (g.alg_a.algebra(), g.alg_b.algebra());

    // Remaining x → y terms, the removed identity term excluded once.
    let mut mid = Tensor::new();
    for (i, e) in g.edges.iter().enumerate().filter(|(_, e)| e.from == x && e.to == y) {
        let mut skipped = i != cut;
        for t in &e.label {
            if !skipped && *t == id {
                skipped = true;
                continue;
            }
            mid.toggle(t.clone());
        }
    }
    // S = Σ_k mid^k
    let mut series = Tensor::single(id.clone());
    let mut power = Tensor::single(id.clone());
    let mut steps = 0;
    loop {
        power = tensor_mul(&a, &b, &power, &mid);
        if power.is_zero() {
            break;
        }
        steps += 1;
        if steps > ZIGZAG_BOUND {
            let (x, y) = names();
            return Err(BimoduleError::NotValid { x, y, bound: ZIGZAG_BOUND });
        }
        series.add(&power);
    }

    let keep = reindex(g.vertices.len(), x, y);
    let mut into_y: BTreeMap<usize, Tensor> = BTreeMap::new();
    let mut out_x: BTreeMap<usize, Tensor> = BTreeMap::new();
    for e in &g.edges {
        if e.to == y && e.from != x && e.from != y {
            into_y.entry(e.from).or_default().add_all(e.label.iter().cloned());
        }
        if e.from == x && e.to != x && e.to != y {
            out_x.entry(e.to).or_default().add_all(e.label.iter().cloned());
        }
    }

    let mut reduced = DDGraph::new(g.alg_a, g.alg_b);
    reduced.vertices =
        g.vertices.iter().enumerate().filter(|(i, _)| keep[*i].is_some()).map(|(_, v)| v.clone()).collect();
    for e in &g.edges {
        if let (Some(f), Some(t)) = (keep[e.from], keep[e.to]) {
            reduced.edges.push(DDEdge { from: f, to: t, ..e.clone() });
        }
    }
    let out_x_series: BTreeMap<usize, Tensor> =
        out_x.iter().map(|(&w, t)| (w, tensor_mul(&a, &b, &series, t))).collect();
    for (&z, zin) in &into_y {
        for (&w, tail) in &out_x_series {
            let label = tensor_mul(&a, &b, zin, tail);
            if !label.is_zero() {
                reduced.edges.push(DDEdge {
                    from: keep[z].expect("kept"),
                    to: keep[w].expect("kept"),
                    label: label.into_iter().collect(),
                    annotation: None,
                });
            }
        }
    }

    let mut f = DDMorphism::zero(&reduced, g, 0);
    for (v, k) in keep.iter().enumerate() {
        let Some(k) = *k else { continue };
        let (p, q) = identity_term(g, v);
        f.components[k].toggle((p, q, v));
        if let Some(zin) = into_y.get(&v) {
            for (p, q) in &tensor_mul(&a, &b, zin, &series) {
                f.components[k].toggle((p.clone(), q.clone(), x));
            }
        }
    }
    let mut gm = DDMorphism::zero(g, &reduced, 0);
    for (v, k) in keep.iter().enumerate() {
        if let Some(k) = *k {
            let (p, q) = identity_term(g, v);
            gm.components[v].toggle((p, q, k));
        }
    }
    for (&w, tail) in &out_x_series {
        for (p, q) in tail {
            gm.components[y].toggle((p.clone(), q.clone(), keep[w].expect("kept")));
        }
    }
    let mut h = DDMorphism::zero(g, g, -1);
    for (p, q) in &series {
        h.components[y].toggle((p.clone(), q.clone(), x));
    }
    Ok(Cancellation { graph: reduced, f, g: gm, h })
}

/// The underlying type D structure (δ¹₁ edges only) as a DD graph whose second factor
/// labels are right idempotents.
pub fn underlying_type_d(g: &DAGraph) -> DDGraph {
    let mut d = DDGraph::new(g.alg_a, g.alg_b);
    d.vertices = g.vertices.clone();
    for e in g.edges.iter().filter(|e| e.inputs.is_empty()) {
        let right = Monomial::idempotent(g.vertices[e.from].idem2);
        d.edges.push(DDEdge { from: e.from, to: e.to, label: vec![(e.output.clone(), right)], annotation: None });
    }
    d
}

/// Cancels a pair joined by a δ¹₁ edge labeled with an idempotent.
pub fn cancel_da(g: &DAGraph, x: usize, y: usize) -> Result<DAGraph, BimoduleError> {
    let names = || (g.vertices[x].name.clone(), g.vertices[y].name.clone());
    let Some(cut) = g
        .edges
        .iter()
        .position(|e| e.from == x && e.to == y && x != y && e.inputs.is_empty() && e.output.is_idempotent())
    else {
        let (x, y) = names();
        return Err(BimoduleError::NotCancellable { x, y });
    };
    let a = g.alg_a.algebra();
    let mids: Vec<&DAEdge> =
        g.edges.iter().enumerate().filter(|(i, e)| *i != cut && e.from == x && e.to == y).map(|(_, e)| e).collect();

    // Chains of middle edges: (product of outputs, concatenated inputs).
    let mut chains: Vec<(Monomial, Vec<Monomial>)> = vec![(Monomial::idempotent(g.vertices[x].idem1), Vec::new())];
    let mut layer = chains.clone();
    let mut steps = 0;
    while !layer.is_empty() && !mids.is_empty() {
        let mut next = Vec::new();
        for (p, seq) in &layer {
            for m in &mids {
                for q in &a.mul_mono(p, &m.output) {
                    let mut s = seq.clone();
                    s.extend(m.inputs.iter().cloned());
                    next.push((q.clone(), s));
                }
            }
        }
        steps += 1;
        if !next.is_empty() && steps > ZIGZAG_BOUND {
            let (x, y) = names();
            return Err(BimoduleError::NotValid { x, y, bound: ZIGZAG_BOUND });
        }
        chains.extend(next.iter().cloned());
        layer = next;
    }

    let keep = reindex(g.vertices.len(), x, y);
    let mut out = DAGraph::new(g.alg_a, g.alg_b);
    out.vertices = g.vertices.iter().enumerate().filter(|(i, _)| keep[*i].is_some()).map(|(_, v)| v.clone()).collect();
    for e in &g.edges {
        if let (Some(f), Some(t)) = (keep[e.from], keep[e.to]) {
            out.edges.push(DAEdge { from: f, to: t, ..e.clone() });
        }
    }
    let ins: Vec<&DAEdge> = g.edges.iter().filter(|e| e.to == y && e.from != x && e.from != y).collect();
    let outs: Vec<&DAEdge> = g.edges.iter().filter(|e| e.from == x && e.to != x && e.to != y).collect();
    for ein in &ins {
        for (c, cseq) in &chains {
            let head: Element = a.mul_mono(&ein.output, c);
            if head.is_zero() {
                continue;
            }
            for eout in &outs {
                for h in &head {
                    for o in &a.mul_mono(h, &eout.output) {
                        let mut inputs = ein.inputs.clone();
                        inputs.extend(cseq.iter().cloned());
                        inputs.extend(eout.inputs.iter().cloned());
                        out.edges.push(DAEdge {
                            from: keep[ein.from].expect("kept"),
                            to: keep[eout.to].expect("kept"),
                            inputs,
                            output: o.clone(),
                            annotation: None,
                        });
                    }
                }
            }
        }
    }
    Ok(out.normalized())
}
