use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use itertools::Itertools;
use num_rational::Rational64;

use super::AlgebraError;

/// A subset of the regions {0, ..., n}. Indexes a primitive idempotent.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct IState {
    n: u8,
    bits: u32,
}

impl IState {
    pub fn new(n: u8, members: &[u8]) -> Result<Self, AlgebraError> {
        if n == 0 || n > 30 {
            return Err(AlgebraError::InvalidIState(format!("unsupported n = {n}")));
        }
        let mut bits = 0u32;
        for &m in members {
            if m > n || bits & (1 << m) != 0 {
                return Err(AlgebraError::InvalidIState(format!("{members:?} over n = {n}")));
            }
            bits |= 1 << m;
        }
        Ok(IState { n, bits })
    }

    pub(crate) fn from_bits(n: u8, bits: u32) -> Self {
        debug_assert!(bits >> (n + 1) == 0);
        IState { n, bits }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, r: u8) -> bool {
        r <= self.n && self.bits & (1 << r) != 0
    }

    pub fn members(&self) -> Vec<u8> {
        (0..=self.n).filter(|&r| self.contains(r)).collect()
    }

    pub fn complement(&self) -> IState {
        let all = (1u32 << (self.n + 1)) - 1;
        IState::from_bits(self.n, all & !self.bits)
    }

    /// The left-right reflection r ↦ n − r.
    pub fn reflect(&self) -> IState {
        let bits = self.members().iter().fold(0, |b, &r| b | 1 << (self.n - r));
        IState::from_bits(self.n, bits)
    }

    pub(crate) fn with(&self, r: u8) -> IState {
        IState::from_bits(self.n, self.bits | 1 << r)
    }

    pub(crate) fn without(&self, r: u8) -> IState {
        IState::from_bits(self.n, self.bits & !(1 << r))
    }

    /// Embeds into {0, ..., big_n} by adding `offset` to every region.
    pub fn shifted(&self, big_n: u8, offset: u8) -> IState {
        IState::from_bits(big_n, self.bits << offset)
    }

    pub fn parse(n: u8, s: &str) -> Result<Self, AlgebraError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| AlgebraError::Parse(format!("bad I-state `{s}`")))?;
        let members = inner
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<u8>().map_err(|_| AlgebraError::Parse(format!("bad I-state `{s}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        IState::new(n, &members)
    }
}

impl Ord for IState {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.members().cmp(&other.members()))
    }
}

impl PartialOrd for IState {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.members().iter().join(","))
    }
}

/// All k-element subsets of {0, ..., n} in lexicographic order.
pub fn enumerate_istates(n: u8, k: usize) -> Result<Vec<IState>, AlgebraError> {
    if n == 0 || n > 30 || k > n as usize + 1 {
        return Err(AlgebraError::InvalidRange { n, k });
    }
    Ok((0..=n).combinations(k).map(|c| IState::new(n, &c).expect("valid members")).collect())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum LetterKind {
    R,
    L,
    U,
    C,
}

impl LetterKind {
    fn symbol(self) -> char {
        match self {
            LetterKind::R => 'R',
            LetterKind::L => 'L',
            LetterKind::U => 'U',
            LetterKind::C => 'C',
        }
    }
}

/// A quiver arrow label. Ordered by kind (R < L < U < C), then by strand.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub kind: LetterKind,
    pub strand: u8,
}

impl Letter {
    pub fn new(kind: LetterKind, strand: u8) -> Self {
        Letter { kind, strand }
    }

    /// The I-state reached by following this arrow from `x`, if the arrow exists there.
    pub fn apply(&self, x: IState) -> Option<IState> {
        let i = self.strand;
        if i == 0 || i > x.n() {
            return None;
        }
        let (lo, hi) = (x.contains(i - 1), x.contains(i));
        match self.kind {
            LetterKind::R if lo && !hi => Some(x.without(i - 1).with(i)),
            LetterKind::L if hi && !lo => Some(x.without(i).with(i - 1)),
            LetterKind::U | LetterKind::C => Some(x),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.symbol(), self.strand)
    }
}

impl std::str::FromStr for Letter {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('R') => LetterKind::R,
            Some('L') => LetterKind::L,
            Some('U') => LetterKind::U,
            Some('C') => LetterKind::C,
            _ => return Err(AlgebraError::Parse(format!("bad letter `{s}`"))),
        };
        let strand = chars.as_str().parse::<u8>().map_err(|_| AlgebraError::Parse(format!("bad letter `{s}`")))?;
        Ok(Letter { kind, strand })
    }
}

/// Length-first, then lexicographic comparison of words.
pub fn word_cmp(a: &[Letter], b: &[Letter]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

pub(crate) fn parse_word(s: &str) -> Result<Vec<Letter>, AlgebraError> {
    s.split_whitespace().map(str::parse).collect()
}

/// Maslov degree plus the Alexander multi-degree in the basis τ1, β1, ..., τn, βn.
/// Alexander coefficients are stored as numerators over 4.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Degree {
    pub maslov: i64,
    quarters: Vec<i64>,
}

impl Degree {
    pub fn zero(n: u8) -> Self {
        Degree { maslov: 0, quarters: vec![0; 2 * n as usize] }
    }

    pub fn from_quarters(maslov: i64, quarters: Vec<i64>) -> Self {
        assert!(quarters.len().is_multiple_of(2) && !quarters.is_empty(), "alexander vector must have 2n entries");
        Degree { maslov, quarters }
    }

    pub fn n(&self) -> u8 {
        (self.quarters.len() / 2) as u8
    }

    pub fn quarters(&self) -> &[i64] {
        &self.quarters
    }

    pub(crate) fn add_quarters(&mut self, strand: u8, tau: i64, beta: i64) {
        let s = 2 * (strand as usize - 1);
        self.quarters[s] += tau;
        self.quarters[s + 1] += beta;
    }

    pub fn tau(&self, i: u8) -> Rational64 {
        Rational64::new(self.quarters[2 * (i as usize - 1)], 4)
    }

    pub fn beta(&self, i: u8) -> Rational64 {
        Rational64::new(self.quarters[2 * (i as usize - 1) + 1], 4)
    }

    /// Image under τ_i, β_i ↦ e_i/2.
    pub fn refined(&self) -> Vec<Rational64> {
        self.quarters.chunks(2).map(|c| Rational64::new(c[0] + c[1], 8)).collect()
    }

    pub fn single_alexander(&self) -> Rational64 {
        self.refined().into_iter().sum()
    }

    /// The reflection τ_i ↦ β_{n+1−i}, β_i ↦ τ_{n+1−i}.
    pub fn reflect(&self) -> Degree {
        let n = self.n() as usize;
        let mut q = vec![0; 2 * n];
        for i in 0..n {
            q[2 * (n - 1 - i) + 1] = self.quarters[2 * i];
            q[2 * (n - 1 - i)] = self.quarters[2 * i + 1];
        }
        Degree { maslov: self.maslov, quarters: q }
    }

    /// The swap τ_i ↔ β_i.
    pub fn transpose(&self) -> Degree {
        let q = self.quarters.chunks(2).flat_map(|c| [c[1], c[0]]).collect();
        Degree { maslov: self.maslov, quarters: q }
    }

    /// Embeds a degree over strands 1..=m into n strands, strand j going to j + offset.
    pub fn embedded(&self, n: u8, offset: u8) -> Degree {
        let mut q = vec![0; 2 * n as usize];
        let o = 2 * offset as usize;
        q[o..o + self.quarters.len()].copy_from_slice(&self.quarters);
        Degree { maslov: self.maslov, quarters: q }
    }

    /// The Alexander part as a linear combination, e.g. `τ2+β1+β2` or `-3/4τ1-1/4β1`.
    pub fn alexander_string(&self) -> String {
        let mut out = String::new();
        for (idx, &q) in self.quarters.iter().enumerate() {
            if q == 0 {
                continue;
            }
            let sym = if idx % 2 == 0 { 'τ' } else { 'β' };
            let r = Rational64::new(q, 4);
            let coeff = if r == Rational64::from_integer(1) {
                String::new()
            } else if r == Rational64::from_integer(-1) {
                "-".to_string()
            } else {
                r.to_string()
            };
            if !out.is_empty() && !coeff.starts_with('-') {
                out.push('+');
            }
            out.push_str(&format!("{coeff}{sym}{}", idx / 2 + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl Add for &Degree {
    type Output = Degree;
    fn add(self, rhs: &Degree) -> Degree {
        assert_eq!(self.quarters.len(), rhs.quarters.len(), "degree rank mismatch");
        Degree {
            maslov: self.maslov + rhs.maslov,
            quarters: self.quarters.iter().zip(&rhs.quarters).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Degree {
    type Output = Degree;
    fn sub(self, rhs: &Degree) -> Degree {
        self + &(-rhs)
    }
}

impl Neg for &Degree {
    type Output = Degree;
    fn neg(self) -> Degree {
        Degree { maslov: -self.maslov, quarters: self.quarters.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.maslov, self.alexander_string())
    }
}

/// A nonzero basis element: the canonical representative path of its residue class.
///
/// The path runs from `source` to `target` in the underlying quiver; in an opposite
/// algebra the same path is read with the roles of left and right idempotent swapped.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub(crate) source: IState,
    pub(crate) target: IState,
    pub(crate) word: Vec<Letter>,
}

impl Monomial {
    pub fn idempotent(x: IState) -> Self {
        Monomial { source: x, target: x, word: Vec::new() }
    }

    pub fn source(&self) -> IState {
        self.source
    }

    pub fn target(&self) -> IState {
        self.target
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn is_idempotent(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word_string(&self) -> String {
        self.word.iter().join(" ")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.source
            .cmp(&other.source)
            .then_with(|| word_cmp(&self.word, &other.word))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}|{}", self.source, self.word_string(), self.target)
    }
}
