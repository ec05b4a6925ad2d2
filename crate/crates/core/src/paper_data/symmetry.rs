use super::{
    local::xda_local, parse_vertex_name, vertex_name, xda_simplified, xdd_local, xdd_simplified, PaperError, Pattern,
};
use crate::algebra::{Degree, Symmetry};
use crate::bimodule::{dual_da, dual_dd, graphs_isomorphic, relabel_da, relabel_dd, Bimodule, BimoduleError};
use crate::report::Report;

/// Bimodules carrying a symmetry check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryTarget {
    Xdd,
    XddTilde,
    Xda(Pattern),
    XdaTilde(Pattern),
}

impl SymmetryTarget {
    fn simplified(self) -> bool {
        matches!(self, SymmetryTarget::XddTilde | SymmetryTarget::XdaTilde(_))
    }
}

fn unsupported(target: SymmetryTarget, which: Symmetry) -> PaperError {
    PaperError::Bimodule(BimoduleError::Unsupported(format!(
        "{which:?} on {target:?}: the unsimplified bimodules only admit the composite Ro"
    )))
}

/// The vertex bijection of a symmetry, on local vertex names.
pub fn symmetry_map(target: SymmetryTarget, which: Symmetry, name: &str) -> Result<String, PaperError> {
    if !target.simplified() && which != Symmetry::Ro && which != Symmetry::Identity {
        return Err(unsupported(target, which));
    }
    let (mut tag, mut x) = parse_vertex_name(name)?;
    if which.reverses() {
        tag = tag.flip();
    }
    if which.reflects() {
        tag = tag.mirror();
        x = x.reflect();
    }
    Ok(vertex_name(tag, x))
}

/// Grading shift relating a dual to the original: Maslov −1 and −(τ1+τ2+β1+β2)/2.
fn dual_shift() -> Degree {
    Degree::from_quarters(-1, vec![-2; 4])
}

fn other(p: Pattern) -> Pattern {
    match p {
        Pattern::Standard => Pattern::Alternate,
        Pattern::Alternate => Pattern::Standard,
    }
}

/// Checks that the symmetry image of the bimodule (relabelled, and dualized when the symmetry
/// reverses orientation) is isomorphic to the expected bimodule under `symmetry_map`.
/// On DA bimodules R and o exchange the two summand-3 input patterns; Ro preserves each.
pub fn symmetry_square(target: SymmetryTarget, which: Symmetry) -> Result<Report, PaperError> {
    symmetry_map(target, which, "S-t_∅")?;
    let map = |s: &str| symmetry_map(target, which, s).unwrap_or_else(|_| s.to_string());
    let swaps = matches!(which, Symmetry::R | Symmetry::O);
    let (image, expected) = match target {
        SymmetryTarget::Xdd | SymmetryTarget::XddTilde => {
            let g = if target.simplified() { xdd_simplified() } else { xdd_local() };
            let img = if which.reverses() {
                relabel_dd(&dual_dd(&g), which).shifted(&dual_shift())
            } else {
                relabel_dd(&g, which)
            };
            (Bimodule::DD(img), Bimodule::DD(g))
        }
        SymmetryTarget::Xda(p) | SymmetryTarget::XdaTilde(p) => {
            let build = |p| if target.simplified() { xda_simplified(p) } else { xda_local(p) };
            let g = build(p);
            let img = if which.reverses() {
                relabel_da(&dual_da(&g), which).shifted(&dual_shift())
            } else {
                relabel_da(&g, which)
            };
            let exp = if swaps { build(other(p)) } else { g };
            (Bimodule::DA(img), Bimodule::DA(exp))
        }
    };
    let mut rep = graphs_isomorphic(&image, &expected, &map);
    rep.name = format!("{which:?}-square on {target:?}");
    Ok(rep)
}
