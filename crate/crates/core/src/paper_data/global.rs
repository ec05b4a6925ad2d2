use std::collections::{BTreeMap, HashMap};

use super::{local::xdd_local, parse_vertex_name, PaperError, Tag};
use crate::algebra::{Algebra, AlgebraId, IState, Letter, LetterKind, Monomial};
use crate::bimodule::{dd_relation, BimoduleError, DDEdge, DDGraph, DdResidual, Vertex};

/// Annotation prefix marking external edges of the global bimodule.
pub const EXTERNAL_PREFIX: &str = "ext";

fn embed(alg: &Algebra, source: IState, m: &Monomial, offset: u8) -> Result<Monomial, PaperError> {
    let word: Vec<Letter> = m.word().iter().map(|l| Letter::new(l.kind, l.strand + offset)).collect();
    let e = alg.reduce_path(source, &word).map_err(BimoduleError::from)?;
    match (e.len(), e.first()) {
        (1, Some(x)) => Ok(x.clone()),
        _ => Err(PaperError::OutOfRange(format!("{m} does not embed as a single monomial at {source}"))),
    }
}

/// X_i^DD over (B(n), B!(n)): one copy of the local bimodule per external I-state, with the
/// local differential embedded along strands i, i+1 and the external unmoving and moving terms.
pub fn global_xdd(n: u8, i: u8) -> Result<DDGraph, PaperError> {
    if n < 2 || i < 1 || i > n - 1 || n > 30 {
        return Err(PaperError::OutOfRange(format!("X_{i}^DD over {n} strands needs n ≥ 2 and 1 ≤ i ≤ n−1")));
    }
    let local = xdd_local();
    let (ida, idb) = (AlgebraId::b(n), AlgebraId::bshriek(n));
    let (a, b) = (ida.algebra(), idb.algebra());
    let offset = i - 1;
    let external: Vec<u8> = (0..=n).filter(|&r| r + 1 < i || r > i + 1).collect();
    let full = IState::new(n, &external).expect("regions in range");

    let mut g = DDGraph::new(ida, idb);
    let mut lookup: HashMap<(Tag, IState, IState), usize> = HashMap::new();
    let mut copies: Vec<(IState, Vec<usize>)> = Vec::new();
    for mask in 0u32..1 << external.len() {
        let members: Vec<u8> =
            external.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &r)| r).collect();
        let xext = IState::new(n, &members).expect("regions in range");
        let rest = IState::from_bits(n, full.bits() & !xext.bits());
        let mut idx = Vec::new();
        for v in &local.vertices {
            let x1 = IState::from_bits(n, xext.bits() | v.idem1.shifted(n, offset).bits());
            let x2 = IState::from_bits(n, rest.bits() | v.idem2.shifted(n, offset).bits());
            let k = g.add_vertex(Vertex {
                name: format!("{}@{}", v.name, xext),
                idem1: x1,
                idem2: x2,
                degree: v.degree.embedded(n, offset),
            });
            let (tag, _) = parse_vertex_name(&v.name)?;
            lookup.insert((tag, x1, x2), k);
            idx.push(k);
        }
        copies.push((xext, idx));
    }

    for (_, idx) in &copies {
        for e in &local.edges {
            let (from, to) = (idx[e.from], idx[e.to]);
            let (s1, s2) = (g.vertices[from].idem1, g.vertices[from].idem2);
            let mut label = Vec::new();
            for (p, q) in &e.label {
                label.push((embed(&a, s1, p, offset)?, embed(&b, s2, q, offset)?));
            }
            g.edges.push(DDEdge { from, to, label, annotation: None });
        }
    }

    let strands: Vec<u8> = (1..=n).filter(|&j| j != i && j != i + 1).collect();
    let single = |alg: &Algebra, kind, j, x| alg.generator(kind, j, x).ok().and_then(|e| e.first().cloned());
    let mut ext_edges: BTreeMap<(usize, usize), Vec<(Monomial, Monomial)>> = BTreeMap::new();
    for from in 0..g.vertices.len() {
        let v = g.vertices[from].clone();
        let (tag, _) = parse_vertex_name(v.name.split('@').next().expect("local part"))?;
        let (x1, x2) = (v.idem1, v.idem2);
        for &j in &strands {
            if let (Some(u), Some(c)) = (single(&a, LetterKind::U, j, x1), single(&b, LetterKind::C, j, x2)) {
                ext_edges.entry((from, from)).or_default().push((u, c));
            }
            let (l, r) = (j - 1, j);
            let moving = if x1.contains(l) && !x2.contains(l) && !x1.contains(r) && x2.contains(r) {
                Some((LetterKind::R, LetterKind::L, x1.without(l).with(r), x2.without(r).with(l)))
            } else if x1.contains(r) && !x2.contains(r) && !x1.contains(l) && x2.contains(l) {
                Some((LetterKind::L, LetterKind::R, x1.without(r).with(l), x2.without(l).with(r)))
            } else {
                None
            };
            if let Some((ka, kb, y1, y2)) = moving {
                let to = *lookup
                    .get(&(tag, y1, y2))
                    .ok_or_else(|| PaperError::OutOfRange(format!("no counterpart of {} across strand {j}", v.name)))?;
                let p = single(&a, ka, j, x1).expect("arrow present");
                let q = single(&b, kb, j, x2).expect("arrow present");
                ext_edges.entry((from, to)).or_default().push((p, q));
            }
        }
    }
    for ((from, to), label) in ext_edges {
        let kind = if from == to { "unmoving" } else { "moving" };
        g.edges.push(DDEdge { from, to, label, annotation: Some(format!("{EXTERNAL_PREFIX}-{kind}")) });
    }
    Ok(g)
}

/// The DD relation split into the local part, the external part, and the mixed terms.
#[derive(Clone, Debug)]
pub struct GlobalParts {
    pub local: DdResidual,
    pub external: DdResidual,
    pub cross: DdResidual,
}

fn is_external(e: &DDEdge) -> bool {
    e.annotation.as_deref().is_some_and(|s| s.starts_with(EXTERNAL_PREFIX))
}

pub fn global_xdd_parts(g: &DDGraph) -> GlobalParts {
    let loc = |e: &DDEdge| !is_external(e);
    let ext = |e: &DDEdge| is_external(e);
    let local = dd_relation(g, &loc, &loc, &loc);
    let external = dd_relation(g, &ext, &ext, &ext);
    let never = |_: &DDEdge| false;
    let mut cross = dd_relation(g, &loc, &ext, &never);
    for (k, t) in dd_relation(g, &ext, &loc, &never) {
        cross.entry(k).or_default().add(&t);
    }
    cross.retain(|_, t| !t.is_zero());
    GlobalParts { local, external, cross }
}
