use super::{show_tensor, BimoduleError, DDGraph, Tensor};
use crate::algebra::Monomial;
use crate::f2::F2Sum;
use crate::report::Report;

/// A term a ⊗ a' ⊗ w of a morphism component, w indexing a target vertex.
pub type MorphismTerm = (Monomial, Monomial, usize);

/// A DD bimodule morphism with a declared Maslov degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DDMorphism {
    pub source: DDGraph,
    pub target: DDGraph,
    pub components: Vec<F2Sum<MorphismTerm>>,
    pub degree: i64,
}

impl DDMorphism {
    pub fn zero(source: &DDGraph, target: &DDGraph, degree: i64) -> Self {
        DDMorphism {
            source: source.clone(),
            target: target.clone(),
            components: vec![F2Sum::new(); source.vertices.len()],
            degree,
        }
    }

    pub fn identity(g: &DDGraph) -> Self {
        let mut f = Self::zero(g, g, 0);
        for (i, v) in g.vertices.iter().enumerate() {
            f.components[i].toggle((Monomial::idempotent(v.idem1), Monomial::idempotent(v.idem2), i));
        }
        f
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn sum(&self, other: &DDMorphism) -> Result<DDMorphism, BimoduleError> {
        if self.source != other.source || self.target != other.target {
            return Err(BimoduleError::Mismatch("sum of morphisms between different graphs".into()));
        }
        let mut out = self.clone();
        for (c, d) in out.components.iter_mut().zip(&other.components) {
            c.add(d);
        }
        Ok(out)
    }

    /// Idempotent matching and the declared-degree condition for every term.
    pub fn validate(&self) -> Report {
        let mut rep = Report::new("morphism compatibility");
        let (a, b) = (self.source.alg_a.algebra(), self.source.alg_b.algebra());
        for (i, comp) in self.components.iter().enumerate() {
            let v = &self.source.vertices[i];
            for (p, q, w) in comp {
                let t = &self.target.vertices[*w];
                let witness = || format!("{} ↦ {p} ⊗ {q} ⊗ {}", v.name, t.name);
                let idem = a.left_idem(p) == v.idem1
                    && a.right_idem(p) == t.idem1
                    && b.left_idem(q) == v.idem2
                    && b.right_idem(q) == t.idem2;
                rep.check(idem, "morphism idempotents", witness);
                let mut lhs = &(&a.degree(p) + &b.degree(q)) + &t.degree;
                lhs.maslov -= self.degree;
                rep.check(lhs == v.degree, format!("morphism degree {}", self.degree), witness);
            }
        }
        rep
    }

    fn terms_string(&self, i: usize) -> String {
        let t: Tensor = self.components[i].iter().map(|(p, q, _)| (p.clone(), q.clone())).collect();
        show_tensor(&t)
    }
}

fn push_products(
    a: &crate::algebra::Algebra,
    b: &crate::algebra::Algebra,
    out: &mut F2Sum<MorphismTerm>,
    (p, q): (&Monomial, &Monomial),
    (r, s): (&Monomial, &Monomial),
    w: usize,
) {
    let pr = a.mul_mono(p, r);
    if pr.is_zero() {
        return;
    }
    let qs = b.mul_mono(q, s);
    for m in &pr {
        for m2 in &qs {
            out.toggle((m.clone(), m2.clone(), w));
        }
    }
}

/// ∂f = (∂ ⊗ id)f + (μ ⊗ id)(id ⊗ δ¹_Y)f + (μ ⊗ id)(id ⊗ f)δ¹_X.
pub fn dd_morphism_boundary(f: &DDMorphism) -> DDMorphism {
    let (a, b) = (f.source.alg_a.algebra(), f.source.alg_b.algebra());
    let mut out = DDMorphism::zero(&f.source, &f.target, f.degree - 1);
    let delta_y = f.target.out_terms();
    for (i, comp) in f.components.iter().enumerate() {
        let acc = &mut out.components[i];
        for (p, q, w) in comp {
            for m in &a.differential_mono(p) {
                acc.toggle((m.clone(), q.clone(), *w));
            }
            for m in &b.differential_mono(q) {
                acc.toggle((p.clone(), m.clone(), *w));
            }
            for &(u, (r, s)) in &delta_y[*w] {
                push_products(&a, &b, acc, (p, q), (r, s), u);
            }
        }
    }
    for e in &f.source.edges {
        for (p, q) in &e.label {
            for (r, s, w) in &f.components[e.to] {
                push_products(&a, &b, &mut out.components[e.from], (p, q), (r, s), *w);
            }
        }
    }
    out
}

/// outer ∘ inner, with algebra factors multiplied in the order they are produced.
pub fn compose_dd(outer: &DDMorphism, inner: &DDMorphism) -> Result<DDMorphism, BimoduleError> {
    if inner.target != outer.source {
        return Err(BimoduleError::Mismatch("composition of non-composable morphisms".into()));
    }
    let (a, b) = (inner.source.alg_a.algebra(), inner.source.alg_b.algebra());
    let mut out = DDMorphism::zero(&inner.source, &outer.target, inner.degree + outer.degree);
    for (i, comp) in inner.components.iter().enumerate() {
        for (p, q, u) in comp {
            for (r, s, w) in &outer.components[*u] {
                push_products(&a, &b, &mut out.components[i], (p, q), (r, s), *w);
            }
        }
    }
    Ok(out)
}

fn compare(rep: &mut Report, what: &str, lhs: &DDMorphism, rhs: &DDMorphism) {
    rep.checked += 1;
    for (i, (l, r)) in lhs.components.iter().zip(&rhs.components).enumerate() {
        if l != r {
            let mut diff = l.clone();
            diff.add(r);
            let probe = DDMorphism { components: vec![diff], ..lhs.clone() };
            rep.fail(what, lhs.source.vertices[i].name.clone(), probe.terms_string(0));
        }
    }
}

/// ∂f = 0, ∂g = 0, g∘f = id_{X'}, f∘g + id_X = ∂h, plus the declared degrees of f, g, h.
pub fn verify_homotopy_data(x: &DDGraph, xp: &DDGraph, f: &DDMorphism, g: &DDMorphism, h: &DDMorphism) -> Report {
    let mut rep = Report::new("homotopy equivalence data");
    let shapes =
        f.source == *xp && f.target == *x && g.source == *x && g.target == *xp && h.source == *x && h.target == *x;
    rep.check(shapes, "morphism shapes", || "f: X' → X, g: X → X', h: X → X".into());
    if !shapes {
        return rep;
    }
    rep.check(f.degree == 0 && g.degree == 0 && h.degree == -1, "declared degrees", || {
        format!("f {}, g {}, h {}", f.degree, g.degree, h.degree)
    });
    for m in [f, g, h] {
        rep.absorb(m.validate());
    }
    compare(&mut rep, "∂f = 0", &dd_morphism_boundary(f), &DDMorphism::zero(xp, x, -1));
    compare(&mut rep, "∂g = 0", &dd_morphism_boundary(g), &DDMorphism::zero(x, xp, -1));
    let gf = compose_dd(g, f).expect("shapes checked");
    compare(&mut rep, "g∘f = id", &gf, &DDMorphism::identity(xp));
    let fg = compose_dd(f, g).expect("shapes checked");
    let lhs = fg.sum(&DDMorphism::identity(x)).expect("shapes checked");
    let mut dh = dd_morphism_boundary(h);
    dh.degree = 0;
    compare(&mut rep, "f∘g + id = ∂h", &lhs, &dh);
    rep
}
