//! Concrete bimodules for a singular crossing, the Koszul dualizing bimodule, and the
//! verification suite tying them together.

mod global;
mod koszul;
mod local;
mod symmetry;
mod verify;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{Degree, IState};
use crate::bimodule::{cancel_da, cancel_dd, Bimodule, BimoduleError, Cancellation, DAGraph, DDGraph};

pub use global::{global_xdd, global_xdd_parts, GlobalParts, EXTERNAL_PREFIX};
pub use koszul::koszul_k;
pub use local::{local_degree, xda_local, xdd_local, GENERATORS};
pub use symmetry::{symmetry_map, symmetry_square, SymmetryTarget};
pub use verify::{check_names, grade_table, koszul_full, law_weight, run_check, verify_all, verify_suite, GradeRow};

#[derive(Debug, Error)]
pub enum PaperError {
    #[error("unknown bimodule identifier `{0}`")]
    UnknownId(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error(transparent)]
    Bimodule(#[from] BimoduleError),
}

/// The eight generator types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    SMt,
    Wt,
    SMb,
    Eb,
    Wb,
    SPb,
    Et,
    SPt,
}

pub const TAGS: [Tag; 8] = [Tag::SMt, Tag::Wt, Tag::SMb, Tag::Eb, Tag::Wb, Tag::SPb, Tag::Et, Tag::SPt];

impl Tag {
    pub fn as_str(self) -> &'static str {
        match self {
            Tag::SMt => "S-t",
            Tag::Wt => "Wt",
            Tag::SMb => "S-b",
            Tag::Eb => "Eb",
            Tag::Wb => "Wb",
            Tag::SPb => "S+b",
            Tag::Et => "Et",
            Tag::SPt => "S+t",
        }
    }

    pub fn maslov(self) -> i64 {
        match self {
            Tag::SMt => 1,
            Tag::Wt | Tag::SMb | Tag::Eb => 0,
            Tag::Wb | Tag::SPb | Tag::Et => -1,
            Tag::SPt => -2,
        }
    }

    /// First unrefined degree, as (τ1, β1, τ2, β2) coefficients.
    pub fn deg1_coeffs(self) -> [i64; 4] {
        match self {
            Tag::SMt => [0, 0, 0, 0],
            Tag::Wt => [0, 1, 0, 0],
            Tag::SMb | Tag::SPb => [0, 0, 1, 1],
            Tag::Eb => [0, 0, 1, 0],
            Tag::Wb => [0, 1, 1, 1],
            Tag::Et => [1, 1, 1, 0],
            Tag::SPt => [1, 1, 1, 1],
        }
    }

    pub fn deg1(self) -> Degree {
        Degree::from_quarters(self.maslov(), self.deg1_coeffs().iter().map(|c| 4 * c).collect())
    }

    /// The horizontal reflection: S⁻ ↔ S⁺, W_t ↔ W_b, E_b ↔ E_t.
    pub fn flip(self) -> Tag {
        match self {
            Tag::SMt => Tag::SPt,
            Tag::SPt => Tag::SMt,
            Tag::SMb => Tag::SPb,
            Tag::SPb => Tag::SMb,
            Tag::Wt => Tag::Wb,
            Tag::Wb => Tag::Wt,
            Tag::Eb => Tag::Et,
            Tag::Et => Tag::Eb,
        }
    }

    /// The vertical reflection: W_t ↔ E_b, W_b ↔ E_t, S tags fixed.
    pub fn mirror(self) -> Tag {
        match self {
            Tag::Wt => Tag::Eb,
            Tag::Eb => Tag::Wt,
            Tag::Wb => Tag::Et,
            Tag::Et => Tag::Wb,
            t => t,
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Tag {
    type Err = PaperError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TAGS.into_iter().find(|t| t.as_str() == s).ok_or_else(|| PaperError::UnknownId(s.to_string()))
    }
}

/// Which summand-3 input pattern the DA bimodule uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    Standard,
    Alternate,
}

/// Local I-state in letter form: A = {0}, B = {1}, C = {2}, ∅ for the empty set.
pub fn letters(x: IState) -> String {
    if x.is_empty() {
        return "∅".into();
    }
    x.members().iter().map(|&r| (b'A' + r) as char).collect()
}

pub fn vertex_name(tag: Tag, idem1: IState) -> String {
    format!("{tag}_{}", letters(idem1))
}

/// Splits a local vertex name into its tag and first idempotent.
pub fn parse_vertex_name(name: &str) -> Result<(Tag, IState), PaperError> {
    let bad = || PaperError::UnknownId(name.to_string());
    let (tag, idem) = name.split_once('_').ok_or_else(bad)?;
    let tag: Tag = tag.parse()?;
    let members: Vec<u8> = if idem == "∅" {
        Vec::new()
    } else {
        idem.chars()
            .map(|c| if ('A'..='C').contains(&c) { Ok(c as u8 - b'A') } else { Err(bad()) })
            .collect::<Result<_, _>>()?
    };
    Ok((tag, IState::new(2, &members).map_err(|_| bad())?))
}

fn cancel_sequence_dd(g: &DDGraph) -> Result<(DDGraph, Vec<(DDGraph, Cancellation)>), PaperError> {
    let mut cur = g.clone();
    let mut steps = Vec::new();
    for (x, y) in local::cancel_names() {
        let c = cancel_dd(&cur, cur.index(&x)?, cur.index(&y)?)?;
        let next = c.graph.clone();
        steps.push((cur, c));
        cur = next;
    }
    Ok((cur, steps))
}

/// The simplified DD bimodule, with each cancellation step and its homotopy data.
pub fn xdd_simplified_steps() -> Result<(DDGraph, Vec<(DDGraph, Cancellation)>), PaperError> {
    cancel_sequence_dd(&xdd_local())
}

pub fn xdd_simplified() -> DDGraph {
    xdd_simplified_steps().expect("the listed pairs are cancellable").0
}

pub fn xda_simplified(pattern: Pattern) -> DAGraph {
    let mut g = xda_local(pattern);
    for (x, y) in local::cancel_names() {
        let (i, j) = (g.index(&x).expect("vertex"), g.index(&y).expect("vertex"));
        g = cancel_da(&g, i, j).expect("the listed pairs are cancellable");
    }
    g
}

/// Builds a bimodule from its identifier: `XDD`, `XDA`, `XDA-alt`, `XDD-tilde`, `XDA-tilde`,
/// `XDA-alt-tilde`, `K:<n>,<k>`, `K:<n>` (all k at once), `XDDglobal:<n>,<i>`.
pub fn build(id: &str) -> Result<Bimodule, PaperError> {
    let pair = |rest: &str| -> Result<(u8, u8), PaperError> {
        let (a, b) = rest.split_once(',').ok_or_else(|| PaperError::UnknownId(id.to_string()))?;
        let parse = |s: &str| s.trim().parse::<u8>().map_err(|_| PaperError::UnknownId(id.to_string()));
        Ok((parse(a)?, parse(b)?))
    };
    Ok(match id {
        "XDD" => Bimodule::DD(xdd_local()),
        "XDA" => Bimodule::DA(xda_local(Pattern::Standard)),
        "XDA-alt" => Bimodule::DA(xda_local(Pattern::Alternate)),
        "XDD-tilde" => Bimodule::DD(xdd_simplified()),
        "XDA-tilde" => Bimodule::DA(xda_simplified(Pattern::Standard)),
        "XDA-alt-tilde" => Bimodule::DA(xda_simplified(Pattern::Alternate)),
        _ => {
            if let Some(rest) = id.strip_prefix("K:") {
                if !rest.contains(',') {
                    let n = rest
                        .trim()
                        .parse::<u8>()
                        .ok()
                        .filter(|&n| n >= 1)
                        .ok_or_else(|| PaperError::UnknownId(id.to_string()))?;
                    return Ok(Bimodule::DD(koszul_full(n)));
                }
                let (n, k) = pair(rest)?;
                Bimodule::DD(koszul_k(n, k)?)
            } else if let Some(rest) = id.strip_prefix("XDDglobal:") {
                let (n, i) = pair(rest)?;
                Bimodule::DD(global_xdd(n, i)?)
            } else {
                return Err(PaperError::UnknownId(id.to_string()));
            }
        }
    })
}
