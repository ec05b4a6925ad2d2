//! Shared oracle: the hand-written n = 2 basis families.

use std::collections::BTreeSet;

use bordered_core::algebra::{AlgebraId, Degree, IState};

/// Letter counts (τ1, β1, τ2, β2) of a word in R, L, U letters.
fn counts(word: &[(&str, u8)]) -> [i64; 4] {
    let mut c = [0; 4];
    for &(k, i) in word {
        let t = 2 * (i as usize - 1);
        match k {
            "R" => c[t] += 1,
            "L" => c[t + 1] += 1,
            "U" => {
                c[t] += 1;
                c[t + 1] += 1
            }
            _ => unreachable!(),
        }
    }
    c
}

/// The listed families for each idempotent pair; `i`, `j` range over exponents.
pub fn listed(x: &[u8], y: &[u8], bound: i64) -> BTreeSet<[i64; 4]> {
    let mut out = BTreeSet::new();
    let fam = |prefix: &[(&'static str, u8)], u1: bool, u2: bool, mixed: bool| {
        let mut v = Vec::new();
        for i in 0..=bound {
            for j in 0..=bound {
                if (!u1 && i > 0) || (!u2 && j > 0) || (!mixed && i > 0 && j > 0) {
                    continue;
                }
                let mut w = prefix.to_vec();
                w.extend(std::iter::repeat_n(("U", 1), i as usize));
                w.extend(std::iter::repeat_n(("U", 2), j as usize));
                v.push(counts(&w));
            }
        }
        v
    };
    let fams: Vec<[i64; 4]> = match (x, y) {
        (&[], &[]) => vec![[0; 4]],
        (&[0], &[0]) => fam(&[], true, false, false),
        (&[0], &[1]) => fam(&[("R", 1)], true, false, false),
        (&[1], &[0]) => fam(&[("L", 1)], true, false, false),
        (&[1], &[1]) => fam(&[], true, true, false),
        (&[1], &[2]) => fam(&[("R", 2)], false, true, false),
        (&[2], &[1]) => fam(&[("L", 2)], false, true, false),
        (&[2], &[2]) => fam(&[], false, true, false),
        (&[0, 1], &[0, 2]) => fam(&[("R", 2)], true, true, true),
        (&[0, 1], &[1, 2]) => fam(&[("R", 2), ("R", 1)], true, true, true),
        (&[0, 2], &[0, 1]) => fam(&[("L", 2)], true, true, true),
        (&[0, 2], &[1, 2]) => fam(&[("R", 1)], true, true, true),
        (&[1, 2], &[0, 1]) => fam(&[("L", 1), ("L", 2)], true, true, true),
        (&[1, 2], &[0, 2]) => fam(&[("L", 1)], true, true, true),
        (a, b) if a == b => fam(&[], true, true, true),
        _ => Vec::new(),
    };
    out.extend(fams);
    out
}

/// Compares `basis_in_degree` with the listed families for every idempotent pair of B(2)
/// and every degree of single Alexander grading at most 4. Returns the mismatches.
pub fn basis_mismatches() -> Vec<String> {
    let b = AlgebraId::b(2).algebra();
    let max_total = 8; // single Alexander ≤ 4, each letter count contributing 1/2
    let states: Vec<Vec<u8>> =
        vec![vec![], vec![0], vec![1], vec![2], vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]];
    let mut bad = Vec::new();
    for x in &states {
        for y in states.iter().filter(|y| y.len() == x.len()) {
            let want: BTreeSet<[i64; 4]> =
                listed(x, y, max_total).into_iter().filter(|c| c.iter().sum::<i64>() <= max_total).collect();
            let (sx, sy) = (IState::new(2, x).unwrap(), IState::new(2, y).unwrap());
            let mut got = BTreeSet::new();
            for t1 in 0..=max_total {
                for b1 in 0..=max_total - t1 {
                    for t2 in 0..=max_total - t1 - b1 {
                        for b2 in 0..=max_total - t1 - b1 - t2 {
                            let c = [t1, b1, t2, b2];
                            let d = Degree::from_quarters(0, c.iter().map(|v| 4 * v).collect());
                            let basis = b.basis_in_degree(sx, sy, &d);
                            if basis.len() > 1 {
                                bad.push(format!("{x:?} -> {y:?} in {d}: {} elements", basis.len()));
                            }
                            if !basis.is_empty() {
                                got.insert(c);
                            }
                        }
                    }
                }
            }
            if got != want {
                bad.push(format!("{x:?} -> {y:?}: got {got:?}, listed {want:?}"));
            }
        }
    }
    bad
}
