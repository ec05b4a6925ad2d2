use super::PaperError;
use crate::algebra::{enumerate_istates, AlgebraId, Degree, LetterKind, Monomial};
use crate::bimodule::{DDEdge, DDGraph, Vertex};

/// K(n,k): vertices k_x for |x| = k with idempotents (x, complement of x), and
/// δ¹ = Σ_i (L_i ⊗ R_i + R_i ⊗ L_i + U_i ⊗ C_i) cut down by idempotents.
pub fn koszul_k(n: u8, k: u8) -> Result<DDGraph, PaperError> {
    if n == 0 || k > n {
        return Err(PaperError::OutOfRange(format!("K({n},{k}) needs 1 ≤ n and 0 ≤ k ≤ n")));
    }
    let (ida, idb) = (AlgebraId::b(n), AlgebraId::bshriek(n));
    let (a, b) = (ida.algebra(), idb.algebra());
    let mut g = DDGraph::new(ida, idb);
    let states = enumerate_istates(n, k as usize).map_err(|e| PaperError::OutOfRange(e.to_string()))?;
    for x in &states {
        g.add_vertex(Vertex { name: format!("k_{x}"), idem1: *x, idem2: x.complement(), degree: Degree::zero(n) });
    }
    let pairs = [(LetterKind::L, LetterKind::R), (LetterKind::R, LetterKind::L), (LetterKind::U, LetterKind::C)];
    for (from, x) in states.iter().enumerate() {
        let mut terms: Vec<(usize, (Monomial, Monomial))> = Vec::new();
        for i in 1..=n {
            for (ka, kb) in pairs {
                let (Ok(p), Ok(q)) = (a.generator(ka, i, *x), b.generator(kb, i, x.complement())) else { continue };
                let (Some(p), Some(q)) = (p.first(), q.first()) else { continue };
                if q.target() != p.target().complement() {
                    continue;
                }
                let to = states.iter().position(|y| *y == p.target()).expect("same summand");
                terms.push((to, (p.clone(), q.clone())));
            }
        }
        terms.sort();
        let mut it = terms.into_iter().peekable();
        while let Some((to, t)) = it.next() {
            let mut label = vec![t];
            while let Some((_, t)) = it.next_if(|(t2, _)| *t2 == to) {
                label.push(t);
            }
            g.edges.push(DDEdge { from, to, label, annotation: None });
        }
    }
    Ok(g)
}
