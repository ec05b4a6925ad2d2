//! The local singular-crossing bimodules over B(2), B!(2).

use std::collections::BTreeMap;

use super::{vertex_name, Pattern, Tag};
use crate::algebra::{AlgebraId, Degree, IState, Monomial};
use crate::bimodule::{DAEdge, DAGraph, DDEdge, DDGraph, Vertex};

/// Generators per summand in the order (1), (2), ...: tag, first idempotent, second idempotent
/// of the DD bimodule. The DA right idempotent is the complement of the second.
pub const GENERATORS: [&[(Tag, &str, &str)]; 3] = [
    &[(Tag::SMt, "", "ABC"), (Tag::SMb, "", "ABC"), (Tag::SPb, "", "ABC"), (Tag::SPt, "", "ABC")],
    &[
        (Tag::SMt, "A", "BC"),
        (Tag::SMt, "C", "AB"),
        (Tag::Wt, "B", "BC"),
        (Tag::SMb, "A", "BC"),
        (Tag::SMb, "C", "AB"),
        (Tag::Eb, "B", "AB"),
        (Tag::Wb, "B", "BC"),
        (Tag::SPb, "A", "BC"),
        (Tag::SPb, "C", "AB"),
        (Tag::Et, "B", "AB"),
        (Tag::SPt, "A", "BC"),
        (Tag::SPt, "C", "AB"),
    ],
    &[
        (Tag::SMt, "AC", "B"),
        (Tag::Wt, "BC", "B"),
        (Tag::SMb, "AC", "B"),
        (Tag::Eb, "AB", "B"),
        (Tag::Wb, "BC", "B"),
        (Tag::SPb, "AC", "B"),
        (Tag::Et, "AB", "B"),
        (Tag::SPt, "AC", "B"),
    ],
];

/// (summand, from, a, a', to); an empty word is the idempotent.
const XDD_TERMS: &[(usize, usize, &str, &str, usize)] = &[
    (1, 3, "", "", 2),
    (2, 1, "R1", "L1 L2", 6),
    (2, 1, "R1", "U1 C2", 7),
    (2, 1, "U1", "U1 C2", 8),
    (2, 2, "L2", "R2 R1", 3),
    (2, 2, "L2", "C1 U2", 10),
    (2, 3, "L1", "", 1),
    (2, 3, "", "L1 L2", 10),
    (2, 3, "L1", "U1 C2", 11),
    (2, 5, "U2", "", 2),
    (2, 5, "L2", "R2 R1", 7),
    (2, 5, "U2", "C1 U2", 12),
    (2, 6, "R2", "", 2),
    (2, 6, "", "R2 R1", 7),
    (2, 6, "L1", "R2 R1", 8),
    (2, 6, "R2", "C1 U2", 12),
    (2, 7, "U2", "", 3),
    (2, 7, "L1", "", 4),
    (2, 7, "R2", "L1 L2", 12),
    (2, 8, "", "", 4),
    (2, 9, "", "", 5),
    (2, 9, "L2", "", 6),
    (2, 10, "U1", "", 6),
    (2, 10, "L1", "R2 R1", 11),
    (2, 11, "R1", "", 7),
    (2, 11, "U1", "", 8),
    (2, 12, "L2", "", 10),
    (3, 1, "R1 U2", "C1 C2", 2),
    (3, 1, "L2 U1", "C1 C2", 4),
    (3, 1, "R1", "U1 C2", 5),
    (3, 1, "U1", "U1 C2", 6),
    (3, 1, "L2", "C1 U2", 7),
    (3, 2, "L1", "", 1),
    (3, 2, "L1 L2", "C1 C2", 7),
    (3, 2, "L1", "U1 C2", 8),
    (3, 3, "U2", "", 1),
    (3, 3, "R1 U2", "C1 C2", 5),
    (3, 3, "U1 U2", "C1 C2", 6),
    (3, 3, "U2", "C1 U2", 8),
    (3, 4, "R2", "", 1),
    (3, 4, "R2 R1", "C1 C2", 5),
    (3, 4, "R2 U1", "C1 C2", 6),
    (3, 4, "R2", "C1 U2", 8),
    (3, 5, "U2", "", 2),
    (3, 5, "L1", "", 3),
    (3, 5, "L1 U2", "C1 C2", 8),
    (3, 6, "", "", 3),
    (3, 6, "L2", "", 4),
    (3, 7, "R2 R1", "", 2),
    (3, 7, "U1", "", 4),
    (3, 7, "R2 U1", "C1 C2", 8),
    (3, 8, "R1", "", 5),
    (3, 8, "U1", "", 6),
    (3, 8, "L2", "", 7),
];

/// (summand, from, comma-separated inputs, output, to) for every edge independent of the pattern.
const XDA_TERMS: &[(usize, usize, &str, &str, usize)] = &[
    (1, 3, "", "", 2),
    // arity 1
    (2, 3, "", "L1", 1),
    (2, 5, "", "U2", 2),
    (2, 6, "", "R2", 2),
    (2, 7, "", "U2", 3),
    (2, 7, "", "L1", 4),
    (2, 8, "", "", 4),
    (2, 9, "", "", 5),
    (2, 9, "", "L2", 6),
    (2, 10, "", "U1", 6),
    (2, 11, "", "R1", 7),
    (2, 11, "", "U1", 8),
    (2, 12, "", "L2", 10),
    // arity 3
    (2, 1, "R1,R2", "R1", 6),
    (2, 2, "L2,L1", "L2", 3),
    (2, 3, "R1,R2", "", 10),
    (2, 5, "L2,L1", "L2", 7),
    (2, 6, "L2,L1", "", 7),
    (2, 6, "L2,L1", "L1", 8),
    (2, 7, "R1,R2", "R2", 12),
    (2, 10, "L2,L1", "L1", 11),
    // arity 4
    (2, 1, "R1,U2,L1", "R1", 7),
    (2, 1, "R1,U2,L1", "U1", 8),
    (2, 2, "L2,U1,R2", "L2", 10),
    (2, 3, "R1,U2,L1", "L1", 11),
    (2, 5, "L2,U1,R2", "U2", 12),
    (2, 6, "L2,U1,R2", "R2", 12),
    // summand 3, arity 1
    (3, 2, "", "L1", 1),
    (3, 3, "", "U2", 1),
    (3, 4, "", "R2", 1),
    (3, 5, "", "U2", 2),
    (3, 5, "", "L1", 3),
    (3, 6, "", "", 3),
    (3, 6, "", "L2", 4),
    (3, 7, "", "R2 R1", 2),
    (3, 7, "", "U1", 4),
    (3, 8, "", "R1", 5),
    (3, 8, "", "U1", 6),
    (3, 8, "", "L2", 7),
    // summand 3, arity 4
    (3, 1, "R1,U2,L1", "R1", 5),
    (3, 1, "R1,U2,L1", "U1", 6),
    (3, 1, "L2,U1,R2", "L2", 7),
    (3, 2, "R1,U2,L1", "L1", 8),
    (3, 3, "L2,U1,R2", "U2", 8),
    (3, 4, "L2,U1,R2", "R2", 8),
];

/// Summand-3 arity-3 families: (from, output, to, figure label). Each is repeated once per
/// input pair of the pattern.
const XDA_FAMILIES: &[(usize, &str, usize, &str)] = &[
    (1, "R1 U2", 2, "T2"),
    (1, "L2 U1", 4, "T5"),
    (2, "L1 L2", 7, "T1"),
    (3, "R1 U2", 5, "T2"),
    (3, "U1 U2", 6, "T0"),
    (4, "R2 R1", 5, "T6"),
    (4, "R2 U1", 6, "T3"),
    (5, "L1 U2", 8, "T4"),
    (7, "R2 U1", 8, "T3"),
];

pub(crate) fn letters_state(n: u8, s: &str) -> IState {
    let members: Vec<u8> = s.chars().map(|c| c as u8 - b'A').collect();
    IState::new(n, &members).expect("local I-state")
}

/// Vertex degree: Maslov per tag and the second unrefined Alexander degree.
pub fn local_degree(tag: Tag) -> Degree {
    let d1 = tag.deg1();
    Degree::from_quarters(tag.maslov(), d1.quarters().iter().map(|q| q - 3).collect())
}

fn local_vertex(tag: Tag, idem1: &str, idem2: &str) -> Vertex {
    let x1 = letters_state(2, idem1);
    Vertex { name: vertex_name(tag, x1), idem1: x1, idem2: letters_state(2, idem2), degree: local_degree(tag) }
}

fn offsets() -> [usize; 3] {
    [0, GENERATORS[0].len(), GENERATORS[0].len() + GENERATORS[1].len()]
}

/// The 24-vertex DD bimodule over (B(2), B!(2)).
pub fn xdd_local() -> DDGraph {
    let (a, b) = (AlgebraId::b(2).algebra(), AlgebraId::bshriek(2).algebra());
    let mut g = DDGraph::new(AlgebraId::b(2), AlgebraId::bshriek(2));
    for gens in GENERATORS {
        for &(tag, i1, i2) in gens {
            g.add_vertex(local_vertex(tag, i1, i2));
        }
    }
    let off = offsets();
    let mut grouped: BTreeMap<(usize, usize), Vec<(Monomial, Monomial)>> = BTreeMap::new();
    for &(s, from, p, q, to) in XDD_TERMS {
        let (f, t) = (off[s - 1] + from - 1, off[s - 1] + to - 1);
        let v = &g.vertices[f];
        grouped.entry((f, t)).or_default().push((a.mono(v.idem1, p), b.mono(v.idem2, q)));
    }
    for ((f, t), label) in grouped {
        g.edges.push(DDEdge { from: f, to: t, label, annotation: None });
    }
    g
}

fn pattern_pairs(p: Pattern) -> [(&'static str, &'static str); 3] {
    match p {
        Pattern::Standard => [("U1", "U2"), ("L2 U1", "R2"), ("R1", "L1 U2")],
        Pattern::Alternate => [("U2", "U1"), ("L2", "R2 U1"), ("R1 U2", "L1")],
    }
}

/// The 24-vertex DA bimodule over (B(2), B(2)) with the chosen summand-3 input pattern.
pub fn xda_local(pattern: Pattern) -> DAGraph {
    let a = AlgebraId::b(2).algebra();
    let mut g = DAGraph::new(AlgebraId::b(2), AlgebraId::b(2));
    for gens in GENERATORS {
        for &(tag, i1, i2) in gens {
            let mut v = local_vertex(tag, i1, i2);
            v.idem2 = v.idem2.complement();
            g.add_vertex(v);
        }
    }
    let off = offsets();
    let inputs_at = |start: IState, words: &[&str]| -> Vec<Monomial> {
        let mut at = start;
        words
            .iter()
            .map(|w| {
                let m = a.mono(at, w);
                at = m.target();
                m
            })
            .collect()
    };
    let push = |g: &mut DAGraph, s: usize, from: usize, ins: &[&str], out: &str, to: usize, note: Option<&str>| {
        let (f, t) = (off[s - 1] + from - 1, off[s - 1] + to - 1);
        let (x1, x2) = (g.vertices[f].idem1, g.vertices[f].idem2);
        g.edges.push(DAEdge {
            from: f,
            to: t,
            inputs: inputs_at(x2, ins),
            output: a.mono(x1, out),
            annotation: note.map(str::to_string),
        });
    };
    for &(s, from, ins, out, to) in XDA_TERMS {
        let words: Vec<&str> = ins.split(',').filter(|w| !w.is_empty()).collect();
        push(&mut g, s, from, &words, out, to, None);
    }
    let pairs = pattern_pairs(pattern);
    for &(from, out, to, label) in XDA_FAMILIES {
        for (p, q) in pairs {
            push(&mut g, 3, from, &[p, q], out, to, Some(label));
        }
    }
    for (p, q) in pairs {
        for (r, s) in pairs {
            push(&mut g, 3, 1, &[p, q, r, s], "U1 U2", 8, Some("T7"));
        }
    }
    g
}

/// The cancellation order producing the simplified bimodules: (S⁺_b, S⁻_b) in each summand,
/// summand 2 before summand 3 and the A pair before the C pair.
pub const CANCEL_ORDER: [(Tag, &str, Tag, &str); 4] = [
    (Tag::SPb, "", Tag::SMb, ""),
    (Tag::SPb, "A", Tag::SMb, "A"),
    (Tag::SPb, "C", Tag::SMb, "C"),
    (Tag::SPb, "AC", Tag::SMb, "AC"),
];

pub fn cancel_names() -> Vec<(String, String)> {
    CANCEL_ORDER
        .iter()
        .map(|&(t1, x, t2, y)| (vertex_name(t1, letters_state(2, x)), vertex_name(t2, letters_state(2, y))))
        .collect()
}
