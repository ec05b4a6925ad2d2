//! Normal forms by row reduction over F2, one graded piece at a time.
//!
//! A piece is fixed by a source I-state and, for every strand i, the counts
//! (#R_i + #U_i, #L_i + #U_i, #C_i). Every defining relation preserves these counts,
//! so the relation ideal meets each piece in the span of the vectors built here.

use std::collections::HashMap;

use super::types::{word_cmp, IState, Letter, LetterKind};

pub(crate) type Sig = Vec<[u16; 3]>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct PieceKey {
    pub source: IState,
    pub sig: Sig,
}

#[derive(Debug)]
pub(crate) struct Piece {
    pub target: Option<IState>,
    pub words: Vec<Vec<Letter>>,
    pub index: HashMap<Vec<Letter>, usize>,
    /// For each word, the non-pivot words summing to its class.
    pub reduced: Vec<Vec<usize>>,
    /// Indices of the non-pivot words, ascending.
    pub basis: Vec<usize>,
}

pub(crate) fn signature(n: u8, word: &[Letter]) -> Sig {
    let mut sig = vec![[0u16; 3]; n as usize];
    for l in word {
        let s = &mut sig[l.strand as usize - 1];
        match l.kind {
            LetterKind::R => s[0] += 1,
            LetterKind::L => s[1] += 1,
            LetterKind::U => {
                s[0] += 1;
                s[1] += 1
            }
            LetterKind::C => s[2] += 1,
        }
    }
    sig
}

fn kinds(shriek: bool) -> &'static [LetterKind] {
    if shriek {
        &[LetterKind::R, LetterKind::L, LetterKind::U, LetterKind::C]
    } else {
        &[LetterKind::R, LetterKind::L, LetterKind::U]
    }
}

fn enumerate(n: u8, shriek: bool, key: &PieceKey) -> (Option<IState>, Vec<Vec<Letter>>) {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        n: u8,
        shriek: bool,
        state: IState,
        rest: &mut Sig,
        left: u32,
        word: &mut Vec<Letter>,
        out: &mut Vec<Vec<Letter>>,
        target: &mut Option<IState>,
    ) {
        if left == 0 {
            out.push(word.clone());
            *target = Some(state);
            return;
        }
        for strand in 1..=n {
            let s = rest[strand as usize - 1];
            for &kind in kinds(shriek) {
                let (dp, dq, dc, w) = match kind {
                    LetterKind::R => (1, 0, 0, 1),
                    LetterKind::L => (0, 1, 0, 1),
                    LetterKind::U => (1, 1, 0, 2),
                    LetterKind::C => (0, 0, 1, 1),
                };
                if s[0] < dp || s[1] < dq || s[2] < dc {
                    continue;
                }
                let letter = Letter::new(kind, strand);
                let Some(next) = letter.apply(state) else { continue };
                rest[strand as usize - 1] = [s[0] - dp, s[1] - dq, s[2] - dc];
                word.push(letter);
                rec(n, shriek, next, rest, left - w, word, out, target);
                word.pop();
                rest[strand as usize - 1] = s;
            }
        }
    }
    let mut rest = key.sig.clone();
    let total: u32 = key.sig.iter().map(|s| (s[0] + s[1] + s[2]) as u32).sum();
    let mut out = Vec::new();
    let mut target = None;
    rec(n, shriek, key.source, &mut rest, total, &mut Vec::new(), &mut out, &mut target);
    out.sort_by(|a, b| word_cmp(a, b));
    (target, out)
}

fn commute(a: Letter, b: Letter) -> bool {
    use LetterKind::*;
    match (a.kind, b.kind) {
        (U, _) | (_, U) | (C, _) | (_, C) => true,
        _ => a.strand.abs_diff(b.strand) > 1,
    }
}

fn zero_pair(a: Letter, b: Letter) -> bool {
    use LetterKind::*;
    match (a.kind, b.kind) {
        (R, R) => b.strand == a.strand + 1,
        (L, L) => a.strand == b.strand + 1,
        (C, C) => a.strand == b.strand,
        _ => false,
    }
}

struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    fn flip(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn xor(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }
    fn highest(&self) -> Option<usize> {
        self.0.iter().enumerate().rev().find(|(_, &w)| w != 0).map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
    }
    fn ones(&self) -> Vec<usize> {
        let mut v = Vec::new();
        for (i, &w) in self.0.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let t = w.trailing_zeros() as usize;
                v.push(i * 64 + t);
                w &= w - 1;
            }
        }
        v
    }
}

pub(crate) fn build(n: u8, shriek: bool, key: &PieceKey) -> Piece {
    let (target, words) = enumerate(n, shriek, key);
    let index: HashMap<Vec<Letter>, usize> = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let len = words.len();

    let mut pivots: Vec<Option<Bits>> = (0..len).map(|_| None).collect();
    let mut insert = |mut row: Bits| {
        while let Some(h) = row.highest() {
            match &pivots[h] {
                Some(p) => row.xor(p),
                None => {
                    pivots[h] = Some(row);
                    return;
                }
            }
        }
    };

    for (a, w) in words.iter().enumerate() {
        let mut states = Vec::with_capacity(w.len() + 1);
        let mut st = key.source;
        states.push(st);
        for l in w {
            st = l.apply(st).expect("enumerated words are composable");
            states.push(st);
        }
        for (j, l) in w.iter().enumerate() {
            if l.kind != LetterKind::U {
                continue;
            }
            let i = l.strand;
            let x = states[j];
            let replacement = match (x.contains(i - 1), x.contains(i)) {
                (false, false) => {
                    let mut row = Bits::new(len);
                    row.flip(a);
                    insert(row);
                    continue;
                }
                (false, true) => [Letter::new(LetterKind::L, i), Letter::new(LetterKind::R, i)],
                (true, false) => [Letter::new(LetterKind::R, i), Letter::new(LetterKind::L, i)],
                (true, true) => continue,
            };
            let mut other = w[..j].to_vec();
            other.extend_from_slice(&replacement);
            other.extend_from_slice(&w[j + 1..]);
            let mut row = Bits::new(len);
            row.flip(a);
            row.flip(index[&other]);
            insert(row);
        }
        for j in 0..w.len().saturating_sub(1) {
            let (x, y) = (w[j], w[j + 1]);
            if zero_pair(x, y) {
                let mut row = Bits::new(len);
                row.flip(a);
                insert(row);
            } else if x != y && commute(x, y) {
                let mut other = w.clone();
                other.swap(j, j + 1);
                if let Some(&b) = index.get(&other) {
                    let mut row = Bits::new(len);
                    row.flip(a);
                    row.flip(b);
                    insert(row);
                }
            }
        }
    }

    for col in 0..len {
        let Some(mut row) = pivots[col].take() else { continue };
        for b in (0..col).rev() {
            if row.get(b) {
                if let Some(p) = &pivots[b] {
                    row.xor(p);
                }
            }
        }
        pivots[col] = Some(row);
    }

    let mut reduced = Vec::with_capacity(len);
    let mut basis = Vec::new();
    for (i, p) in pivots.iter().enumerate() {
        match p {
            Some(row) => reduced.push(row.ones().into_iter().filter(|&b| b != i).collect()),
            None => {
                reduced.push(vec![i]);
                basis.push(i);
            }
        }
    }
    Piece { target, words, index, reduced, basis }
}
