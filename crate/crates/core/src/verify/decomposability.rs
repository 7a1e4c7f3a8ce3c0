use super::{CheckKind, Counterexample, Verdict};
use crate::automata::{language_includes, project, sync_product, Alphabet, Generator, InclusionMode};
use crate::error::{Error, Result};

/// Whether `K = ‖ P_i(K)` for the natural projections onto `pieces`.
///
/// The inclusion `K ⊆ ‖ P_i(K)` always holds, so a counterexample is a
/// shortest word of the composition that is not in `K`.
pub fn is_decomposable(spec: &Generator, pieces: &[Alphabet]) -> Result<Verdict> {
    if pieces.is_empty() {
        return Err(Error::input("decomposability needs at least one alphabet"));
    }
    let covered = Alphabet::union_all(pieces);
    if !spec.alphabet().is_subset(&covered) {
        return Err(Error::input(format!(
            "alphabets do not cover spec events {}",
            spec.alphabet().difference(&covered)
        )));
    }
    let projections: Vec<Generator> = pieces
        .iter()
        .map(|p| project(spec, &p.intersection(spec.alphabet())))
        .collect();
    let refs: Vec<&Generator> = projections.iter().collect();
    let composed = sync_product(&refs)?;
    let inc = language_includes(spec, &composed, InclusionMode::Subset);
    Ok(match inc.witness {
        None => Verdict::pass(),
        Some(w) => Verdict::fail(Counterexample::new(CheckKind::Decomposability, w)),
    })
}
