use std::collections::{BTreeMap, HashSet};

use itertools::Itertools;

use super::{show_tensor, DAGraph, DDEdge, DDGraph, Tensor, Vertex};
use crate::algebra::{Algebra, Degree, Element, Monomial};
use crate::report::Report;

fn check_vertices(rep: &mut Report, vertices: &[Vertex], n: u8) {
    let mut seen = HashSet::new();
    for v in vertices {
        rep.check(seen.insert(v.name.as_str()), "vertex names unique", || v.name.clone());
        rep.check(v.idem1.n() == n && v.idem2.n() == n && v.degree.n() == n, "vertex rank", || v.name.clone());
    }
}

/// Idempotent and grading compatibility of every DD edge term.
pub fn validate_compat_dd(g: &DDGraph) -> Report {
    let mut rep = Report::new("DD compatibility");
    let (a, b) = (g.alg_a.algebra(), g.alg_b.algebra());
    check_vertices(&mut rep, &g.vertices, g.alg_a.n);
    for e in &g.edges {
        let (x, y) = (&g.vertices[e.from], &g.vertices[e.to]);
        let ctx = || format!("{} → {}", x.name, y.name);
        for (p, q) in &e.label {
            let term = || format!("{} → {}: {p} ⊗ {q}", x.name, y.name);
            let idem_ok = a.left_idem(p) == x.idem1
                && a.right_idem(p) == y.idem1
                && b.left_idem(q) == x.idem2
                && b.right_idem(q) == y.idem2;
            rep.check(idem_ok, format!("idempotents {}", ctx()), term);
            let rhs = &(&a.degree(p) + &b.degree(q)) + &y.degree;
            let expect = Degree::from_quarters(rhs.maslov - 1, rhs.quarters().to_vec());
            rep.check(x.degree == expect, format!("grading {}", ctx()), || {
                format!("{}: {} vs {}", term(), x.degree, expect)
            });
        }
    }
    rep
}

/// Idempotent chains and the DA grading equation for every edge.
pub fn validate_compat_da(g: &DAGraph) -> Report {
    let mut rep = Report::new("DA compatibility");
    let (a, b) = (g.alg_a.algebra(), g.alg_b.algebra());
    check_vertices(&mut rep, &g.vertices, g.alg_a.n);
    for e in &g.edges {
        let (x, y) = (&g.vertices[e.from], &g.vertices[e.to]);
        let ctx = format!("{} → {} (arity {})", x.name, y.name, e.arity());
        let witness = || format!("{} ⊗ ({})", e.output, e.inputs.iter().join(", "));
        let mut chain = a.left_idem(&e.output) == x.idem1 && a.right_idem(&e.output) == y.idem1;
        let mut at = x.idem2;
        for m in &e.inputs {
            chain &= b.left_idem(m) == at && !m.is_idempotent();
            at = b.right_idem(m);
        }
        chain &= at == y.idem2;
        rep.check(chain, format!("idempotents {ctx}"), witness);
        let lhs = e.inputs.iter().fold(x.degree.clone(), |acc, m| &acc + &b.degree(m));
        let mut rhs = &a.degree(&e.output) + &y.degree;
        rhs.maslov += e.arity() as i64 - 2;
        rep.check(lhs == rhs, format!("grading {ctx}"), || format!("{}: {lhs} vs {rhs}", witness()));
    }
    rep
}

pub type DdResidual = BTreeMap<(usize, usize), Tensor>;

/// The DD structure relation restricted to edge subsets: composites e1 then e2 with
/// `first(e1)` and `second(e2)`, plus ∂ of edges with `boundary(e)`.
pub fn dd_relation(
    g: &DDGraph,
    first: &dyn Fn(&DDEdge) -> bool,
    second: &dyn Fn(&DDEdge) -> bool,
    boundary: &dyn Fn(&DDEdge) -> bool,
) -> DdResidual {
    let (a, b) = (g.alg_a.algebra(), g.alg_b.algebra());
    let mut out_second: Vec<Vec<(usize, &(Monomial, Monomial))>> = vec![Vec::new(); g.vertices.len()];
    for e in g.edges.iter().filter(|e| second(e)) {
        for t in &e.label {
            out_second[e.from].push((e.to, t));
        }
    }
    let mut res: DdResidual = BTreeMap::new();
    for e in g.edges.iter().filter(|e| first(e)) {
        for (p, q) in &e.label {
            for &(to, (r, s)) in &out_second[e.to] {
                let pr = a.mul_mono(p, r);
                if pr.is_zero() {
                    continue;
                }
                let qs = b.mul_mono(q, s);
                let entry = res.entry((e.from, to)).or_default();
                for m in &pr {
                    for m2 in &qs {
                        entry.toggle((m.clone(), m2.clone()));
                    }
                }
            }
        }
    }
    for e in g.edges.iter().filter(|e| boundary(e)) {
        for (p, q) in &e.label {
            let entry = res.entry((e.from, e.to)).or_default();
            for m in &a.differential_mono(p) {
                entry.toggle((m.clone(), q.clone()));
            }
            for m2 in &b.differential_mono(q) {
                entry.toggle((p.clone(), m2.clone()));
            }
        }
    }
    res.retain(|_, t| !t.is_zero());
    res
}

pub(crate) fn residual_report(name: &str, g: &DDGraph, res: &DdResidual) -> Report {
    let mut rep = Report::new(name);
    rep.checked = g.vertices.len() * g.vertices.len();
    let mut rows: Vec<_> = res
        .iter()
        .map(|(&(x, y), t)| (g.vertices[x].name.clone(), g.vertices[y].name.clone(), show_tensor(t)))
        .collect();
    rows.sort();
    for (x, y, t) in rows {
        rep.fail(format!("pair ({x}, {y})"), format!("{x} → {y}"), t);
    }
    rep
}

/// Checks (μ ⊗ id)(id ⊗ δ¹)δ¹ + (∂ ⊗ id)δ¹ = 0 for every ordered vertex pair.
pub fn check_dd(g: &DDGraph) -> Report {
    let all = |_: &DDEdge| true;
    residual_report("DD structure relation", g, &dd_relation(g, &all, &all, &all))
}

fn show_element(e: &Element) -> String {
    e.iter().map(|m| m.to_string()).join(" + ")
}

/// Checks the DA structure relation for every (x, y, input sequence) reachable by the
/// four kinds of terms: composites, differentials of inputs, merged inputs, ∂ of outputs.
pub fn check_da(g: &DAGraph) -> Report {
    let (a, b): (Algebra, Algebra) = (g.alg_a.algebra(), g.alg_b.algebra());
    let mut res: BTreeMap<(usize, usize, Vec<Monomial>), Element> = BTreeMap::new();
    let mut outgoing = vec![Vec::new(); g.vertices.len()];
    for e in &g.edges {
        outgoing[e.from].push(e);
    }
    for e1 in &g.edges {
        for e2 in &outgoing[e1.to] {
            let mut seq = e1.inputs.clone();
            seq.extend(e2.inputs.iter().cloned());
            let p = a.mul_mono(&e1.output, &e2.output);
            res.entry((e1.from, e2.to, seq)).or_default().add(&p);
        }
    }
    for e in &g.edges {
        for j in 0..e.inputs.len() {
            for p in b.antiderivatives(&e.inputs[j]) {
                let mut seq = e.inputs.clone();
                seq[j] = p;
                res.entry((e.from, e.to, seq)).or_default().toggle(e.output.clone());
            }
            for (p, q) in b.factor_pairs(&e.inputs[j]) {
                let mut seq = e.inputs[..j].to_vec();
                seq.push(p);
                seq.push(q);
                seq.extend(e.inputs[j + 1..].iter().cloned());
                res.entry((e.from, e.to, seq)).or_default().toggle(e.output.clone());
            }
        }
        let d = a.differential_mono(&e.output);
        res.entry((e.from, e.to, e.inputs.clone())).or_default().add(&d);
    }
    let mut rep = Report::new("DA structure relation");
    rep.checked = res.len();
    let mut rows: Vec<_> = res
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|((x, y, seq), v)| {
            let (xn, yn) = (&g.vertices[*x].name, &g.vertices[*y].name);
            (xn.clone(), yn.clone(), seq.len() + 1, format!("({})", seq.iter().join(", ")), show_element(v))
        })
        .collect();
    rows.sort();
    for (x, y, arity, seq, v) in rows {
        rep.fail(format!("({x}, {y}) arity {arity}"), format!("{x} ⊗ {seq} → {y}"), v);
    }
    rep
}
