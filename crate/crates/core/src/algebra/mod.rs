//! The quotient path algebras B(n,k) and B!(n,k) over F2.

pub mod laws;
mod piece;
mod types;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use thiserror::Error;

use crate::f2::F2Sum;
use piece::{Piece, PieceKey, Sig};

pub use types::{enumerate_istates, word_cmp, Degree, IState, Letter, LetterKind, Monomial};

pub type Element = F2Sum<Monomial>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("invalid I-state: {0}")]
    InvalidIState(String),
    #[error("invalid range n = {n}, k = {k}")]
    InvalidRange { n: u8, k: usize },
    #[error("arrow {letter} does not exist at {state}")]
    ArrowAbsent { letter: Letter, state: IState },
    #[error("letter {letter} is not a generator of {algebra}")]
    NotAGenerator { letter: Letter, algebra: AlgebraId },
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Variant {
    B,
    Bshriek,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Orientation {
    Normal,
    Opposite,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AlgebraId {
    pub n: u8,
    pub variant: Variant,
    pub orientation: Orientation,
}

impl AlgebraId {
    pub fn b(n: u8) -> Self {
        AlgebraId { n, variant: Variant::B, orientation: Orientation::Normal }
    }

    pub fn bshriek(n: u8) -> Self {
        AlgebraId { n, variant: Variant::Bshriek, orientation: Orientation::Normal }
    }

    pub fn opposite(self) -> Self {
        let orientation = match self.orientation {
            Orientation::Normal => Orientation::Opposite,
            Orientation::Opposite => Orientation::Normal,
        };
        AlgebraId { orientation, ..self }
    }

    pub fn algebra(self) -> Algebra {
        type Registry = Mutex<HashMap<(u8, Variant), Arc<Inner>>>;
        static REGISTRY: OnceLock<Registry> = OnceLock::new();
        let mut reg = REGISTRY.get_or_init(Default::default).lock().expect("registry lock");
        let inner = reg
            .entry((self.n, self.variant))
            .or_insert_with(|| {
                Arc::new(Inner { n: self.n, shriek: self.variant == Variant::Bshriek, pieces: Default::default() })
            })
            .clone();
        Algebra { id: self, inner }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = match self.variant {
            Variant::B => "B",
            Variant::Bshriek => "B!",
        };
        let o = match self.orientation {
            Orientation::Normal => "",
            Orientation::Opposite => "^op",
        };
        write!(f, "{v}({}){o}", self.n)
    }
}

impl std::str::FromStr for AlgebraId {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AlgebraError::Parse(format!("bad algebra id `{s}`"));
        let (body, orientation) = match s.strip_suffix("^op") {
            Some(b) => (b, Orientation::Opposite),
            None => (s, Orientation::Normal),
        };
        let (variant, rest) = if let Some(r) = body.strip_prefix("B!(") {
            (Variant::Bshriek, r)
        } else if let Some(r) = body.strip_prefix("B(") {
            (Variant::B, r)
        } else {
            return Err(bad());
        };
        let n = rest.strip_suffix(')').and_then(|r| r.parse::<u8>().ok()).ok_or_else(bad)?;
        if n == 0 || n > 30 {
            return Err(bad());
        }
        Ok(AlgebraId { n, variant, orientation })
    }
}

/// The symmetries of the algebras: reflection R, orientation reversal o, and their composite.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Symmetry {
    Identity,
    R,
    O,
    Ro,
}

impl Symmetry {
    pub fn reflects(self) -> bool {
        matches!(self, Symmetry::R | Symmetry::Ro)
    }

    pub fn reverses(self) -> bool {
        matches!(self, Symmetry::O | Symmetry::Ro)
    }

    pub fn on_algebra(self, id: AlgebraId) -> AlgebraId {
        if self.reverses() {
            id.opposite()
        } else {
            id
        }
    }

    pub fn on_istate(self, x: IState) -> IState {
        if self.reflects() {
            x.reflect()
        } else {
            x
        }
    }

    pub fn on_degree(self, d: &Degree) -> Degree {
        let d = if self.reverses() { d.transpose() } else { d.clone() };
        if self.reflects() {
            d.reflect()
        } else {
            d
        }
    }
}

struct Inner {
    n: u8,
    shriek: bool,
    pieces: RwLock<HashMap<PieceKey, Arc<Piece>>>,
}

/// A handle on one of B(n), B!(n), B(n)^op, B!(n)^op. Cheap to clone; handles with the
/// same n and variant share one graded-piece cache.
#[derive(Clone)]
pub struct Algebra {
    id: AlgebraId,
    inner: Arc<Inner>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({})", self.id)
    }
}

impl Algebra {
    pub fn id(&self) -> AlgebraId {
        self.id
    }

    pub fn n(&self) -> u8 {
        self.id.n
    }

    fn opposite(&self) -> bool {
        self.id.orientation == Orientation::Opposite
    }

    fn piece(&self, key: PieceKey) -> Arc<Piece> {
        if let Some(p) = self.inner.pieces.read().expect("piece cache").get(&key) {
            return p.clone();
        }
        let p = Arc::new(piece::build(self.inner.n, self.inner.shriek, &key));
        self.inner.pieces.write().expect("piece cache").entry(key).or_insert(p).clone()
    }

    fn check_letter(&self, l: Letter) -> Result<(), AlgebraError> {
        if l.strand == 0 || l.strand > self.n() || (l.kind == LetterKind::C && !self.inner.shriek) {
            return Err(AlgebraError::NotAGenerator { letter: l, algebra: self.id });
        }
        Ok(())
    }

    /// Left idempotent of a monomial, read in this algebra's orientation.
    pub fn left_idem(&self, m: &Monomial) -> IState {
        if self.opposite() {
            m.target
        } else {
            m.source
        }
    }

    pub fn right_idem(&self, m: &Monomial) -> IState {
        if self.opposite() {
            m.source
        } else {
            m.target
        }
    }

    pub fn idempotent(&self, x: IState) -> Monomial {
        Monomial::idempotent(x)
    }

    /// Reduces the path `letters` starting at `source` to its canonical form.
    pub fn reduce_path(&self, source: IState, letters: &[Letter]) -> Result<Element, AlgebraError> {
        if source.n() != self.n() {
            return Err(AlgebraError::InvalidIState(format!("{source} is not an I-state of {}", self.id)));
        }
        let mut st = source;
        for &l in letters {
            self.check_letter(l)?;
            st = l.apply(st).ok_or(AlgebraError::ArrowAbsent { letter: l, state: st })?;
        }
        Ok(self.reduce_valid(source, letters))
    }

    fn reduce_valid(&self, source: IState, letters: &[Letter]) -> Element {
        if letters.is_empty() {
            return Element::single(Monomial::idempotent(source));
        }
        let key = PieceKey { source, sig: piece::signature(self.n(), letters) };
        let p = self.piece(key);
        let idx = p.index[letters];
        let target = p.target.expect("nonempty piece");
        p.reduced[idx].iter().map(|&b| Monomial { source, target, word: p.words[b].clone() }).collect()
    }

    /// Reduces a formal sum of paths.
    pub fn reduce(&self, words: &[(IState, Vec<Letter>)]) -> Result<Element, AlgebraError> {
        let mut out = Element::new();
        for (x, w) in words {
            out.add(&self.reduce_path(*x, w)?);
        }
        Ok(out)
    }

    /// The class of a single arrow starting at the path source `source`.
    pub fn generator(&self, kind: LetterKind, i: u8, source: IState) -> Result<Element, AlgebraError> {
        self.reduce_path(source, &[Letter::new(kind, i)])
    }

    fn concat(&self, first: &Monomial, second: &Monomial) -> Element {
        if first.target != second.source {
            return Element::new();
        }
        let mut w = first.word.clone();
        w.extend_from_slice(&second.word);
        self.reduce_valid(first.source, &w)
    }

    /// Product of basis monomials, in this algebra's orientation.
    pub fn mul_mono(&self, a: &Monomial, b: &Monomial) -> Element {
        let r = if self.opposite() { self.concat(b, a) } else { self.concat(a, b) };
        debug_assert!(r.len() <= 1, "product of basis monomials has more than one term");
        r
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::new();
        for x in a {
            for y in b {
                out.add(&self.mul_mono(x, y));
            }
        }
        out
    }

    pub fn differential_mono(&self, m: &Monomial) -> Element {
        let mut out = Element::new();
        if !self.inner.shriek {
            return out;
        }
        for (j, l) in m.word.iter().enumerate() {
            if l.kind == LetterKind::C {
                let mut w = m.word.clone();
                w[j] = Letter::new(LetterKind::U, l.strand);
                out.add(&self.reduce_valid(m.source, &w));
            }
        }
        out
    }

    pub fn differential(&self, a: &Element) -> Element {
        let mut out = Element::new();
        for m in a {
            out.add(&self.differential_mono(m));
        }
        out
    }

    pub fn letter_degree(&self, l: Letter) -> Degree {
        let mut d = Degree::zero(self.n());
        let (tau, beta, m) = match (self.inner.shriek, l.kind) {
            (false, LetterKind::R) => (4, 0, 0),
            (false, LetterKind::L) => (0, 4, 0),
            (false, _) => (4, 4, 0),
            (true, LetterKind::R) => (0, -4, 1),
            (true, LetterKind::L) => (-4, 0, 1),
            (true, LetterKind::U) => (-4, -4, 2),
            (true, LetterKind::C) => (-4, -4, 1),
        };
        d.add_quarters(l.strand, tau, beta);
        d.maslov = m;
        d
    }

    pub fn degree(&self, m: &Monomial) -> Degree {
        m.word.iter().fold(Degree::zero(self.n()), |acc, &l| &acc + &self.letter_degree(l))
    }

    /// Letter-count signatures compatible with a degree.
    fn signatures_for(&self, d: &Degree) -> Vec<Sig> {
        let n = self.n() as usize;
        if d.quarters().len() != 2 * n || d.quarters().iter().any(|q| q % 4 != 0) {
            return Vec::new();
        }
        let counts: Vec<(i64, i64)> = d.quarters().chunks(2).map(|c| (c[0] / 4, c[1] / 4)).collect();
        if !self.inner.shriek {
            if d.maslov != 0 || counts.iter().any(|&(t, b)| t < 0 || b < 0) {
                return Vec::new();
            }
            return vec![counts.iter().map(|&(t, b)| [t as u16, b as u16, 0]).collect()];
        }
        // In B!: p_i + c_i = -β_i, q_i + c_i = -τ_i, and Σc = -Σ(τ+β) - maslov.
        let pq: Vec<(i64, i64)> = counts.iter().map(|&(t, b)| (-b, -t)).collect();
        if pq.iter().any(|&(p, q)| p < 0 || q < 0) {
            return Vec::new();
        }
        let total_c = pq.iter().map(|&(p, q)| p + q).sum::<i64>() - d.maslov;
        if total_c < 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur = vec![[0u16; 3]; n];
        fn rec(i: usize, left: i64, pq: &[(i64, i64)], cur: &mut Sig, out: &mut Vec<Sig>) {
            if i == pq.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let (p, q) = pq[i];
            for c in 0..=left.min(p).min(q) {
                cur[i] = [(p - c) as u16, (q - c) as u16, c as u16];
                rec(i + 1, left - c, pq, cur, out);
            }
        }
        rec(0, total_c, &pq, &mut cur, &mut out);
        out
    }

    fn piece_basis(&self, source: IState, sig: Sig) -> (Option<IState>, Vec<Monomial>) {
        if sig.iter().all(|s| *s == [0, 0, 0]) {
            return (Some(source), vec![Monomial::idempotent(source)]);
        }
        let p = self.piece(PieceKey { source, sig });
        let Some(target) = p.target else { return (None, Vec::new()) };
        let basis = p.basis.iter().map(|&b| Monomial { source, target, word: p.words[b].clone() }).collect();
        (Some(target), basis)
    }

    /// Canonical monomials with left idempotent `x`, right idempotent `y` and degree `d`.
    pub fn basis_in_degree(&self, x: IState, y: IState, d: &Degree) -> Vec<Monomial> {
        let (src, tgt) = if self.opposite() { (y, x) } else { (x, y) };
        let mut out: Vec<Monomial> = self
            .signatures_for(d)
            .into_iter()
            .flat_map(|sig| match self.piece_basis(src, sig) {
                (Some(t), b) if t == tgt => b,
                _ => Vec::new(),
            })
            .collect();
        out.sort();
        out
    }

    /// All basis monomials whose path starts at `source` and has weight at most `max_weight`,
    /// where R and L weigh 1 and U and C weigh 2.
    pub fn basis_from(&self, source: IState, max_weight: u32) -> Vec<Monomial> {
        let n = self.n() as usize;
        let weight = |s: &Sig| s.iter().map(|c| (c[0] + c[1] + 2 * c[2]) as u32).sum::<u32>();
        let mut seen: HashSet<Sig> = HashSet::new();
        let mut frontier = vec![(vec![[0u16; 3]; n], source)];
        seen.insert(frontier[0].0.clone());
        let mut out = Vec::new();
        while let Some((sig, at)) = frontier.pop() {
            out.extend(self.piece_basis(source, sig.clone()).1);
            for strand in 1..=self.n() {
                for kind in [LetterKind::R, LetterKind::L, LetterKind::U, LetterKind::C] {
                    if kind == LetterKind::C && !self.inner.shriek {
                        continue;
                    }
                    let l = Letter::new(kind, strand);
                    let Some(next) = l.apply(at) else { continue };
                    let mut s = sig.clone();
                    s = {
                        let add = piece::signature(self.n(), &[l]);
                        s.iter().zip(&add).map(|(a, b)| [a[0] + b[0], a[1] + b[1], a[2] + b[2]]).collect()
                    };
                    if weight(&s) <= max_weight && seen.insert(s.clone()) {
                        frontier.push((s, next));
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Ordered pairs (a, b) of non-idempotent basis monomials with a·b = m.
    pub fn factor_pairs(&self, m: &Monomial) -> Vec<(Monomial, Monomial)> {
        let n = self.n() as usize;
        let sig = piece::signature(self.n(), &m.word);
        let mut pairs = Vec::new();
        let mut first = vec![[0u16; 3]; n];
        fn splits(i: usize, sig: &Sig, cur: &mut Sig, out: &mut Vec<Sig>) {
            if i == sig.len() {
                out.push(cur.clone());
                return;
            }
            for p in 0..=sig[i][0] {
                for q in 0..=sig[i][1] {
                    for c in 0..=sig[i][2] {
                        cur[i] = [p, q, c];
                        splits(i + 1, sig, cur, out);
                    }
                }
            }
        }
        let mut all = Vec::new();
        splits(0, &sig, &mut first, &mut all);
        for s1 in all {
            let s2: Sig = sig.iter().zip(&s1).map(|(a, b)| [a[0] - b[0], a[1] - b[1], a[2] - b[2]]).collect();
            let zero = |s: &Sig| s.iter().all(|c| *c == [0, 0, 0]);
            if zero(&s1) || zero(&s2) {
                continue;
            }
            let (Some(mid), left) = self.piece_basis(m.source, s1) else { continue };
            let (_, right) = self.piece_basis(mid, s2);
            for a in &left {
                for b in &right {
                    if self.concat(a, b).contains(m) {
                        pairs.push((a.clone(), b.clone()));
                    }
                }
            }
        }
        if self.opposite() {
            pairs = pairs.into_iter().map(|(a, b)| (b, a)).collect();
        }
        pairs.sort();
        pairs
    }

    /// Basis monomials p with m a term of ∂p.
    pub fn antiderivatives(&self, m: &Monomial) -> Vec<Monomial> {
        if !self.inner.shriek {
            return Vec::new();
        }
        let sig = piece::signature(self.n(), &m.word);
        let mut out = BTreeSet::new();
        for i in 0..sig.len() {
            if sig[i][0] == 0 || sig[i][1] == 0 {
                continue;
            }
            let mut s = sig.clone();
            s[i] = [s[i][0] - 1, s[i][1] - 1, s[i][2] + 1];
            let (_, basis) = self.piece_basis(m.source, s);
            for p in basis {
                if self.differential_mono(&p).contains(m) {
                    out.insert(p);
                }
            }
        }
        out.into_iter().collect()
    }

    pub fn augment(&self, a: &Element) -> Element {
        a.iter().filter(|m| m.is_idempotent()).cloned().collect()
    }

    /// Image of a basis monomial under a symmetry, as an element of `which.on_algebra(self.id())`.
    pub fn map_monomial(&self, which: Symmetry, m: &Monomial) -> Element {
        let n = self.n();
        let mut source = m.source;
        let mut word = m.word.clone();
        if which.reverses() {
            source = m.target;
            word.reverse();
            for l in &mut word {
                l.kind = match l.kind {
                    LetterKind::R => LetterKind::L,
                    LetterKind::L => LetterKind::R,
                    k => k,
                };
            }
        }
        if which.reflects() {
            source = source.reflect();
            for l in &mut word {
                l.kind = match l.kind {
                    LetterKind::R => LetterKind::L,
                    LetterKind::L => LetterKind::R,
                    k => k,
                };
                l.strand = n + 1 - l.strand;
            }
        }
        self.reduce_valid(source, &word)
    }

    pub fn apply_symmetry(&self, which: Symmetry, a: &Element) -> (AlgebraId, Element) {
        let mut out = Element::new();
        for m in a {
            out.add(&self.map_monomial(which, m));
        }
        (which.on_algebra(self.id), out)
    }

    /// Parses the text form `{0,1}|R2 R1 U1|{1,2}` and reduces it.
    pub fn parse_monomial(&self, s: &str) -> Result<Monomial, AlgebraError> {
        let parts: Vec<&str> = s.split('|').collect();
        if parts.len() != 3 {
            return Err(AlgebraError::Parse(format!("bad monomial `{s}`")));
        }
        let source = IState::parse(self.n(), parts[0])?;
        let target = IState::parse(self.n(), parts[2])?;
        let word = types::parse_word(parts[1])?;
        let e = self.reduce_path(source, &word)?;
        match (e.len(), e.first()) {
            (1, Some(m)) if m.target == target => Ok(m.clone()),
            (1, _) => Err(AlgebraError::Parse(format!("`{s}` ends at a different I-state"))),
            _ => Err(AlgebraError::Parse(format!("`{s}` is not a basis monomial"))),
        }
    }

    /// Reduces a word given by its path source; panics on malformed input. For static data.
    pub fn mono(&self, source: IState, word: &str) -> Monomial {
        let w = types::parse_word(word).expect("well-formed word");
        let e = self.reduce_path(source, &w).expect("composable word");
        assert_eq!(e.len(), 1, "`{word}` at {source} is not a single basis monomial");
        e.first().cloned().expect("one term")
    }
}

#[cfg(test)]
mod tests;
