use std::collections::HashMap;

use super::{BimoduleError, DAGraph, DDEdge, DDGraph, Tensor, Vertex};
use crate::algebra::{Element, Monomial};

/// Largest DA arity accepted by the box tensor.
pub const MAX_ARITY: usize = 16;

/// X^DA ⊠ K for a DD factor K whose label terms are single generator pairs.
/// Vertices are pairs with matching idempotents; when each DA vertex pairs with exactly one
/// K vertex the result keeps the DA vertex name.
pub fn box_tensor(x: &DAGraph, k: &DDGraph) -> Result<DDGraph, BimoduleError> {
    if x.alg_b != k.alg_a {
        return Err(BimoduleError::Mismatch(format!("DA acts by {} but DD outputs lie in {}", x.alg_b, k.alg_a)));
    }
    if let Some(e) = x.edges.iter().find(|e| e.arity() > MAX_ARITY) {
        return Err(BimoduleError::Unsupported(format!("arity {} exceeds {MAX_ARITY}", e.arity())));
    }
    let c = k.alg_b.algebra();

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (i, v) in x.vertices.iter().enumerate() {
        for (j, w) in k.vertices.iter().enumerate() {
            if v.idem2 == w.idem1 {
                pairs.push((i, j));
            }
        }
    }
    let unique = x.vertices.len() == pairs.len();
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(n, p)| (*p, n)).collect();
    let mut out = DDGraph::new(x.alg_a, k.alg_b);
    for &(i, j) in &pairs {
        let (v, w) = (&x.vertices[i], &k.vertices[j]);
        out.vertices.push(Vertex {
            name: if unique { v.name.clone() } else { format!("{}⊗{}", v.name, w.name) },
            idem1: v.idem1,
            idem2: w.idem2,
            degree: &v.degree + &w.degree,
        });
    }

    // K terms indexed by (source vertex, A'-output).
    let mut kmoves: HashMap<(usize, &Monomial), Vec<(usize, &Monomial)>> = HashMap::new();
    for e in &k.edges {
        for (p, q) in &e.label {
            kmoves.entry((e.from, p)).or_default().push((e.to, q));
        }
    }

    for e in &x.edges {
        for &(i, j) in pairs.iter().filter(|(i, _)| *i == e.from) {
            // Walk chains of K terms matching the inputs, carrying the A'' product.
            let start = Monomial::idempotent(k.vertices[j].idem2);
            let mut layer: Vec<(usize, Element)> = vec![(j, Element::single(start))];
            for input in &e.inputs {
                let mut next = Vec::new();
                for (at, prod) in &layer {
                    for (to, q) in kmoves.get(&(*at, input)).into_iter().flatten() {
                        let p = c.multiply(prod, &Element::single((*q).clone()));
                        if !p.is_zero() {
                            next.push((*to, p));
                        }
                    }
                }
                layer = next;
            }
            let mut by_end: HashMap<usize, Tensor> = HashMap::new();
            for (end, prod) in layer {
                let entry = by_end.entry(end).or_default();
                for q in prod {
                    entry.toggle((e.output.clone(), q));
                }
            }
            let mut ends: Vec<_> = by_end.into_iter().collect();
            ends.sort_by_key(|(end, _)| *end);
            for (end, label) in ends {
                let (Some(&from), Some(&to)) = (index.get(&(i, j)), index.get(&(e.to, end))) else { continue };
                if !label.is_zero() {
                    out.edges.push(DDEdge {
                        from,
                        to,
                        label: label.into_iter().collect(),
                        annotation: e.annotation.clone(),
                    });
                }
            }
        }
    }
    Ok(out)
}
