//! Completion of partially specified `⋆` tables.
//!
//! Presentation-style inputs give `⋆` only on generator pairs ("a⋆b = a");
//! this routine propagates MLA1–3 and MLA5 from those seeds and enumerates
//! every full table compatible with the axioms. A seed that propagation
//! refutes outright is a contradiction; leftover free cells are branched
//! exhaustively, so ambiguous inputs yield multiple candidates.

use crate::algebra::{GroupTable, MlAlgebra};
use crate::enumeration::StarSearch;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CompletionError {
    #[error("star pair ({0}, {1}, {2}) is out of range")]
    OutOfRange(usize, usize, usize),
    #[error(
        "the axioms force star({g}, {h}) to both {have} and {want}; the partial table is contradictory"
    )]
    Contradiction {
        g: usize,
        h: usize,
        have: usize,
        want: usize,
    },
}

/// All valid full tables extending `pairs` (triples `g ⋆ h = v`), sorted
/// lexicographically by flattened star table. Empty when no completion
/// satisfies MLA4; `Err` when propagation alone refutes the seeds.
pub fn complete_star(
    group: &GroupTable,
    pairs: &[(usize, usize, usize)],
) -> Result<Vec<MlAlgebra>, CompletionError> {
    let n = group.order();
    let search = StarSearch::new(group);
    let mut star = search.root();
    for &(g, h, v) in pairs {
        if g >= n || h >= n || v >= n {
            return Err(CompletionError::OutOfRange(g, h, v));
        }
        let cell = &mut star[g * n + h];
        if *cell != u16::MAX && *cell as usize != v {
            return Err(CompletionError::Contradiction {
                g,
                h,
                have: *cell as usize,
                want: v,
            });
        }
        *cell = v as u16;
    }
    if let Err(c) = search.propagate(&mut star) {
        return Err(CompletionError::Contradiction {
            g: c.cell.0,
            h: c.cell.1,
            have: c.have,
            want: c.want,
        });
    }
    let mut tables = Vec::new();
    search.search(star, &mut |t| tables.push(t));
    tables.sort_unstable();
    Ok(tables
        .into_iter()
        .map(|t| {
            MlAlgebra::from_group_star(group.clone(), t)
                .expect("completion emits only validated tables")
        })
        .collect())
}
