//! Exhaustive checks of the algebra axioms on all basis monomials up to a weight bound.

use std::collections::HashMap;

use super::{enumerate_istates, AlgebraId, Element, LetterKind, Monomial, Symmetry};
use crate::report::Report;

/// R and L weigh 1; U and C weigh 2. Twice the absolute single Alexander degree.
pub fn weight(m: &Monomial) -> u32 {
    m.word().iter().map(|l| if matches!(l.kind, LetterKind::R | LetterKind::L) { 1 } else { 2 }).sum()
}

fn show(e: &Element) -> String {
    if e.is_zero() {
        return "0".into();
    }
    e.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" + ")
}

/// Associativity, unit, Leibniz, ∂² = 0, homogeneity, product closure, factorization
/// completeness and symmetry coherence for all basis monomials of total weight at most `max_weight`.
pub fn check_laws(id: AlgebraId, max_weight: u32) -> Report {
    let alg = id.algebra();
    let n = id.n;
    let mut rep = Report::new(format!("algebra laws {id} (weight ≤ {max_weight})"));
    let mut by_source: HashMap<_, Vec<Monomial>> = HashMap::new();
    for k in 0..=n as usize + 1 {
        for x in enumerate_istates(n, k).expect("valid range") {
            by_source.insert(x, alg.basis_from(x, max_weight));
        }
    }
    let mut all: Vec<&Monomial> = by_source.values().flatten().collect();
    all.sort();
    let mut factors: HashMap<Monomial, Vec<(Monomial, Monomial)>> = HashMap::new();

    for &a in &all {
        let ea = Element::single(a.clone());
        let left = Element::single(alg.idempotent(alg.left_idem(a)));
        let right = Element::single(alg.idempotent(alg.right_idem(a)));
        rep.check(alg.multiply(&left, &ea) == ea && alg.multiply(&ea, &right) == ea, "unit", || a.to_string());
        let dd = alg.differential(&alg.differential_mono(a));
        rep.check(dd.is_zero(), "∂² = 0", || a.to_string());

        for which in [Symmetry::R, Symmetry::O, Symmetry::Ro] {
            let (tid, img) = alg.apply_symmetry(which, &ea);
            let back = tid.algebra().apply_symmetry(which, &img).1;
            rep.check(back == ea && img.len() == 1, format!("{which:?} involution"), || a.to_string());
            let d_img = alg.degree(img.first().expect("one term"));
            rep.check(d_img == which.on_degree(&alg.degree(a)), format!("{which:?} degree"), || a.to_string());
            let lhs = tid.algebra().differential(&img);
            let rhs = alg.apply_symmetry(which, &alg.differential_mono(a)).1;
            rep.check(lhs == rhs, format!("{which:?} commutes with ∂"), || a.to_string());
        }
        let ro = alg.apply_symmetry(Symmetry::Ro, &ea).1;
        let r_then_o = {
            let (rid, r) = alg.apply_symmetry(Symmetry::R, &ea);
            rid.algebra().apply_symmetry(Symmetry::O, &r).1
        };
        rep.check(ro == r_then_o, "R∘o = o∘R", || a.to_string());

        if !a.is_idempotent() {
            let f = alg.factor_pairs(a);
            for (p, q) in &f {
                rep.check(alg.mul_mono(p, q) == ea, "listed factor pair multiplies back", || {
                    format!("{a} = ({p})({q})")
                });
            }
            factors.insert(a.clone(), f);
        }
    }

    for &a in &all {
        let wa = weight(a);
        let Some(bs) = by_source.get(&a.target()) else { continue };
        for b in bs {
            let wb = weight(b);
            if wa + wb > max_weight {
                continue;
            }
            let ab = alg.mul_mono(a, b);
            rep.check(ab.len() <= 1, "product closure", || format!("{a} · {b} = {}", show(&ab)));
            if let Some(m) = ab.first() {
                rep.check(alg.degree(m) == &alg.degree(a) + &alg.degree(b), "homogeneity", || format!("{a} · {b}"));
                if !a.is_idempotent() && !b.is_idempotent() {
                    let listed = factors.get(m).is_some_and(|f| f.contains(&(a.clone(), b.clone())));
                    rep.check(listed, "factorization completeness", || format!("{m} = ({a})({b})"));
                }
                let (rid, rab) = alg.apply_symmetry(Symmetry::R, &ab);
                let ra = alg.map_monomial(Symmetry::R, a);
                let rb = alg.map_monomial(Symmetry::R, b);
                rep.check(rab == rid.algebra().multiply(&ra, &rb), "R is multiplicative", || format!("{a} · {b}"));
                let (oid, oab) = alg.apply_symmetry(Symmetry::O, &ab);
                let oa = alg.map_monomial(Symmetry::O, a);
                let ob = alg.map_monomial(Symmetry::O, b);
                rep.check(oab == oid.algebra().multiply(&oa, &ob), "o reverses products", || format!("{a} · {b}"));
            }
            let lhs = alg.differential(&ab);
            let mut rhs = alg.multiply(&alg.differential_mono(a), &Element::single(b.clone()));
            rhs.add(&alg.multiply(&Element::single(a.clone()), &alg.differential_mono(b)));
            rep.check(lhs == rhs, "Leibniz", || format!("{a} · {b}"));

            let Some(cs) = by_source.get(&b.target()) else { continue };
            let ea = Element::single(a.clone());
            let eb = Element::single(b.clone());
            for c in cs {
                if wa + wb + weight(c) > max_weight {
                    continue;
                }
                let ec = Element::single(c.clone());
                let l = alg.multiply(&ab, &ec);
                let r = alg.multiply(&ea, &alg.multiply(&eb, &ec));
                rep.check(l == r, "associativity", || format!("({a})({b})({c})"));
            }
        }
    }
    rep
}
