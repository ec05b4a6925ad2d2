use num_rational::Rational64;

use super::{
    global_xdd, global_xdd_parts, koszul_k, local_degree, parse_vertex_name, symmetry_square, xda_local,
    xda_simplified, xdd_local, xdd_simplified, xdd_simplified_steps, PaperError, Pattern, SymmetryTarget, TAGS,
};
use crate::algebra::laws::check_laws;
use crate::algebra::{AlgebraId, LetterKind, Symmetry};
use crate::bimodule::{
    box_tensor, cancel_dd, cancellable_pairs_da, cancellable_pairs_dd, check_da, check_dd, graphs_isomorphic,
    underlying_type_d, validate_compat_da, validate_compat_dd, verify_homotopy_data, Bimodule, DAGraph, DDGraph,
    Vertex,
};
use crate::report::Report;

const CHECKS: [&str; 11] = [
    "algebra-laws",
    "xdd",
    "xdd-tilde",
    "koszul",
    "xda",
    "xda-tilde",
    "cancellation",
    "box-tensor",
    "gradings",
    "symmetries",
    "global",
];

/// Names accepted by `run_check`, in suite order.
pub fn check_names() -> &'static [&'static str] {
    &CHECKS
}

/// Basis weight bound used for the algebra laws at rank n.
pub fn law_weight(n: u8) -> u32 {
    match n {
        0..=3 => 6,
        4 => 5,
        _ => 4,
    }
}

fn dd_full(name: &str, g: &DDGraph) -> Report {
    let mut rep = Report::new(name);
    rep.absorb(validate_compat_dd(g));
    rep.absorb(check_dd(g));
    rep
}

fn da_full(name: &str, g: &DAGraph) -> Report {
    let mut rep = Report::new(name);
    rep.absorb(validate_compat_da(g));
    rep.absorb(check_da(g));
    rep
}

fn summand_counts(vs: &[Vertex]) -> [usize; 3] {
    let mut c = [0; 3];
    for v in vs {
        c[v.idem1.len().min(2)] += 1;
    }
    c
}

/// K(n) as the disjoint union of K(n,k) over 0 ≤ k ≤ n.
pub fn koszul_full(n: u8) -> DDGraph {
    let mut g = DDGraph::new(AlgebraId::b(n), AlgebraId::bshriek(n));
    for k in 0..=n {
        let part = koszul_k(n, k).expect("k ≤ n");
        let base = g.vertices.len();
        g.vertices.extend(part.vertices);
        g.edges.extend(part.edges.into_iter().map(|mut e| {
            e.from += base;
            e.to += base;
            e
        }));
    }
    g
}

fn homotopy_for_all_pairs(rep: &mut Report, what: &str, g: &DDGraph) {
    for (x, y) in cancellable_pairs_dd(g) {
        let ctx = format!("{what} ({}, {})", g.vertices[x].name, g.vertices[y].name);
        match cancel_dd(g, x, y) {
            Ok(c) => {
                let mut sub = verify_homotopy_data(g, &c.graph, &c.f, &c.g, &c.h);
                sub.name = ctx.clone();
                rep.absorb(sub);
                let mut after = dd_full(&format!("{ctx} cancelled graph"), &c.graph);
                after.name = format!("{ctx} cancelled graph");
                rep.absorb(after);
            }
            Err(e) => rep.fail(ctx, "cancel_dd", e.to_string()),
        }
    }
}

fn algebra_laws(nmax: u8) -> Report {
    let mut rep = Report::new("algebra laws");
    for n in 1..=nmax {
        for id in [AlgebraId::b(n), AlgebraId::bshriek(n)] {
            rep.absorb(check_laws(id, law_weight(n)));
        }
    }
    rep
}

fn koszul(nmax: u8) -> Report {
    let mut rep = Report::new("Koszul dualizing bimodules");
    for n in 1..=nmax.min(4) {
        for k in 0..=n {
            let g = koszul_k(n, k).expect("k ≤ n");
            rep.absorb(dd_full(&format!("K({n},{k})"), &g));
        }
    }
    rep
}

fn xda_tilde() -> Report {
    let mut rep = Report::new("simplified DA bimodules");
    for p in [Pattern::Standard, Pattern::Alternate] {
        let g = xda_simplified(p);
        rep.absorb(da_full(&format!("X̃^DA {p:?}"), &g));
        let c = summand_counts(&g.vertices);
        rep.check(c == [2, 8, 6], format!("generators per summand ({p:?})"), || format!("{c:?}"));
        let left = cancellable_pairs_da(&g);
        rep.check(left.is_empty(), format!("no cancellable pairs remain ({p:?})"), || format!("{left:?}"));
    }
    rep
}

fn cancellation() -> Report {
    let mut rep = Report::new("cancellation and homotopy data");
    match xdd_simplified_steps() {
        Ok((simp, steps)) => {
            for (before, c) in &steps {
                let mut sub = verify_homotopy_data(before, &c.graph, &c.f, &c.g, &c.h);
                sub.name = format!("simplification step to {} vertices", c.graph.vertices.len());
                rep.absorb(sub);
            }
            let counts = summand_counts(&simp.vertices);
            rep.check(counts == [2, 8, 6], "X̃^DD generators per summand", || format!("{counts:?}"));
            // Summand 2 pairs in the opposite order.
            let g = xdd_local();
            let swapped = (|| -> Result<DDGraph, PaperError> {
                let mut cur = g.clone();
                for (x, y) in [("S+b_∅", "S-b_∅"), ("S+b_C", "S-b_C"), ("S+b_A", "S-b_A"), ("S+b_AC", "S-b_AC")] {
                    cur = cancel_dd(&cur, cur.index(x)?, cur.index(y)?)?.graph;
                }
                Ok(cur)
            })();
            match swapped {
                Ok(other) => {
                    let mut iso = graphs_isomorphic(&Bimodule::DD(other), &Bimodule::DD(simp), &|s| s.to_string());
                    iso.name = "cancellation order independence".into();
                    rep.absorb(iso);
                }
                Err(e) => rep.fail("cancellation order independence", "swapped order", e.to_string()),
            }
        }
        Err(e) => rep.fail("X̃^DD", "simplification", e.to_string()),
    }
    homotopy_for_all_pairs(&mut rep, "X^DD", &xdd_local());
    for p in [Pattern::Standard, Pattern::Alternate] {
        let d = underlying_type_d(&xda_local(p));
        homotopy_for_all_pairs(&mut rep, &format!("type D of X^DA {p:?}"), &d);
    }
    for i in 1..=2 {
        let g = global_xdd(3, i).expect("in range");
        homotopy_for_all_pairs(&mut rep, &format!("X_{i}^DD (n = 3)"), &g);
    }
    rep
}

fn box_tensor_check() -> Report {
    let mut rep = Report::new("box tensor with K");
    let k = koszul_full(2);
    let same = |s: &str| s.to_string();
    let cases = [
        ("X^DA ⊠ K ≅ X^DD", xda_local(Pattern::Standard), xdd_local()),
        ("X^DA' ⊠ K ≅ X^DD", xda_local(Pattern::Alternate), xdd_local()),
        ("X̃^DA ⊠ K ≅ X̃^DD", xda_simplified(Pattern::Standard), xdd_simplified()),
        ("X̃^DA' ⊠ K ≅ X̃^DD", xda_simplified(Pattern::Alternate), xdd_simplified()),
    ];
    for (name, da, dd) in cases {
        match box_tensor(&da, &k) {
            Ok(t) => {
                let mut sub = graphs_isomorphic(&Bimodule::DD(t), &Bimodule::DD(dd), &same);
                sub.name = name.into();
                rep.absorb(sub);
            }
            Err(e) => rep.fail(name, "box_tensor", e.to_string()),
        }
    }
    rep
}

/// Second unrefined degrees as (τ1, β1, τ2, β2) numerators over 4.
const DEG2_TABLE: [[i64; 4]; 8] = [
    [-3, -3, -3, -3],
    [-3, 1, -3, -3],
    [-3, -3, 1, 1],
    [-3, -3, 1, -3],
    [-3, 1, 1, 1],
    [-3, -3, 1, 1],
    [1, 1, 1, -3],
    [1, 1, 1, 1],
];

/// Refined degrees as (e1, e2) numerators over 4 and single Alexander degrees over 2.
const REFINED_TABLE: [([i64; 2], i64); 8] = [
    ([-3, -3], -3),
    ([-1, -3], -2),
    ([-3, 1], -1),
    ([-3, -1], -2),
    ([-1, 1], 0),
    ([-3, 1], -1),
    ([1, -1], 0),
    ([1, 1], 1),
];

fn gradings() -> Report {
    let mut rep = Report::new("gradings");
    for (k, tag) in TAGS.into_iter().enumerate() {
        let d = local_degree(tag);
        rep.check(d.quarters() == DEG2_TABLE[k], format!("second unrefined degree of {tag}"), || d.alexander_string());
        let (e, single) = REFINED_TABLE[k];
        let refined: Vec<Rational64> = e.iter().map(|&x| Rational64::new(x, 4)).collect();
        rep.check(d.refined() == refined, format!("refined degree of {tag}"), || format!("{:?}", d.refined()));
        rep.check(d.single_alexander() == Rational64::new(single, 2), format!("Alex({tag})"), || {
            d.single_alexander().to_string()
        });
    }
    for (name, g) in [("X^DD", xdd_local()), ("X̃^DD", xdd_simplified())] {
        rep.absorb({
            let mut r = validate_compat_dd(&g);
            r.name = format!("{name} compatibility");
            r
        });
    }
    for p in [Pattern::Standard, Pattern::Alternate] {
        for g in [xda_local(p), xda_simplified(p)] {
            rep.absorb(validate_compat_da(&g));
        }
    }
    // Grading transforms of the symmetries on the simplified generators.
    let sigma = [4, 4, 4, 4];
    for v in &xdd_simplified().vertices {
        let (tag, _) = parse_vertex_name(&v.name).expect("local name");
        let d1 = tag.deg1();
        let r = tag.mirror().deg1();
        rep.check(r.maslov == d1.maslov && r.quarters() == d1.reflect().quarters(), "R transforms deg₁", || {
            v.name.clone()
        });
        let o = tag.flip().deg1();
        let expect: Vec<i64> = d1.transpose().quarters().iter().zip(sigma).map(|(q, s)| s - q).collect();
        rep.check(o.maslov == -d1.maslov - 1 && o.quarters() == expect, "o transforms m and deg₁", || v.name.clone());
    }
    rep
}

fn symmetries() -> Report {
    let mut rep = Report::new("symmetries");
    let simplified = [
        SymmetryTarget::XddTilde,
        SymmetryTarget::XdaTilde(Pattern::Standard),
        SymmetryTarget::XdaTilde(Pattern::Alternate),
    ];
    for t in simplified {
        for which in [Symmetry::R, Symmetry::O, Symmetry::Ro] {
            match symmetry_square(t, which) {
                Ok(r) => rep.absorb(r),
                Err(e) => rep.fail(format!("{which:?} on {t:?}"), "symmetry_square", e.to_string()),
            }
        }
    }
    for t in [SymmetryTarget::Xdd, SymmetryTarget::Xda(Pattern::Standard), SymmetryTarget::Xda(Pattern::Alternate)] {
        match symmetry_square(t, Symmetry::Ro) {
            Ok(r) => rep.absorb(r),
            Err(e) => rep.fail(format!("Ro on {t:?}"), "symmetry_square", e.to_string()),
        }
        for which in [Symmetry::R, Symmetry::O] {
            let res = symmetry_square(t, which);
            rep.check(res.is_err(), format!("{which:?} on {t:?} reported unsupported"), || "accepted".into());
        }
    }
    rep
}

fn global(nmax: u8) -> Report {
    let mut rep = Report::new("global bimodules");
    for n in 2..=nmax {
        for i in 1..n {
            let ctx = format!("X_{i}^DD (n = {n})");
            let g = match global_xdd(n, i) {
                Ok(g) => g,
                Err(e) => {
                    rep.fail(ctx, "global_xdd", e.to_string());
                    continue;
                }
            };
            rep.check(g.vertices.len() == 24 << (n - 2), format!("{ctx} vertex count"), || {
                g.vertices.len().to_string()
            });
            rep.absorb(dd_full(&ctx, &g));
            let parts = global_xdd_parts(&g);
            for (what, res) in [("local", &parts.local), ("external", &parts.external), ("cross", &parts.cross)] {
                rep.check(res.is_empty(), format!("{ctx} {what} relation"), || {
                    res.keys()
                        .map(|&(x, y)| format!("({}, {})", g.vertices[x].name, g.vertices[y].name))
                        .collect::<Vec<_>>()
                        .join(" ")
                });
            }
            let (a, b) = (g.alg_a.algebra(), g.alg_b.algebra());
            for j in (1..=n).filter(|&j| j != i && j != i + 1) {
                for v in &g.vertices {
                    let (x1, x2) = (v.idem1, v.idem2);
                    let (l, r) = (j - 1, j);
                    let a_j = x1.contains(l) && !x2.contains(l) && !x1.contains(r) && x2.contains(r);
                    let b_j = x1.contains(r) && !x2.contains(r) && !x1.contains(l) && x2.contains(l);
                    if a_j || b_j {
                        continue;
                    }
                    let u1 = a.generator(LetterKind::U, j, x1).map(|e| e.is_zero()).unwrap_or(true);
                    let u2 = b.generator(LetterKind::U, j, x2).map(|e| e.is_zero()).unwrap_or(true);
                    rep.check(u1 || u2, format!("{ctx} (U{j} ⊗ U{j}) vanishes on C_{j}"), || v.name.clone());
                }
            }
        }
    }
    if nmax >= 2 {
        let g = global_xdd(2, 1).expect("in range");
        let strip = |s: &str| s.split('@').next().unwrap_or(s).to_string();
        let mut iso = graphs_isomorphic(&Bimodule::DD(g), &Bimodule::DD(xdd_local()), &strip);
        iso.name = "X_1^DD (n = 2) equals the local bimodule".into();
        rep.absorb(iso);
    }
    rep
}

/// Runs one named sub-check; `None` for an unknown name.
pub fn run_check(name: &str, nmax: u8) -> Option<Report> {
    Some(match name {
        "algebra-laws" => algebra_laws(nmax),
        "xdd" => dd_full("X^DD", &xdd_local()),
        "xdd-tilde" => dd_full("X̃^DD", &xdd_simplified()),
        "koszul" => koszul(nmax),
        "xda" => {
            let mut rep = Report::new("DA bimodules");
            for p in [Pattern::Standard, Pattern::Alternate] {
                rep.absorb(da_full(&format!("X^DA {p:?}"), &xda_local(p)));
            }
            rep
        }
        "xda-tilde" => xda_tilde(),
        "cancellation" => cancellation(),
        "box-tensor" => box_tensor_check(),
        "gradings" => gradings(),
        "symmetries" => symmetries(),
        "global" => global(nmax),
        _ => return None,
    })
}

/// Every sub-check in order, each as its own report.
pub fn verify_suite(nmax: u8) -> Vec<Report> {
    CHECKS.iter().map(|c| run_check(c, nmax).expect("known check")).collect()
}

pub fn verify_all(nmax: u8) -> Report {
    let mut rep = Report::new(format!("verify_all (nmax = {nmax})"));
    for r in verify_suite(nmax) {
        rep.absorb(r);
    }
    rep
}

/// One row of a degree table.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GradeRow {
    pub name: String,
    pub idem1: String,
    pub idem2: String,
    pub maslov: i64,
    pub alexander: String,
    pub refined: Vec<String>,
    pub single: String,
}

pub fn grade_table(b: &Bimodule) -> Vec<GradeRow> {
    let mut vs: Vec<&Vertex> = b.vertices().iter().collect();
    vs.sort_by_key(|v| crate::bimodule::vertex_order(v));
    vs.into_iter()
        .map(|v| GradeRow {
            name: v.name.clone(),
            idem1: v.idem1.to_string(),
            idem2: v.idem2.to_string(),
            maslov: v.degree.maslov,
            alexander: v.degree.alexander_string(),
            refined: v.degree.refined().iter().map(|r| r.to_string()).collect(),
            single: v.degree.single_alexander().to_string(),
        })
        .collect()
}
