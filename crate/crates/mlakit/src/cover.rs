//! Finite central extensions and the cover / stem-cover conditions.
//!
//! An extension `1 → H → K → G → 1` is validated exhaustively: the inclusion
//! is an injective homomorphism, the projection a surjective one, the image
//! of H is exactly the kernel of the projection, and H lands inside `𝒵(K)`.
//! The multiplier is always an external input; a cover additionally requires
//! `H ≅ multiplier`, a stem cover also `H ⊆ ᴹ[K,K]`.

use crate::algebra::MlAlgebra;
use crate::bitset::Subset;
use crate::morphism::{check_homomorphism, find_isomorphisms};
use thiserror::Error;

#[derive(Clone, Debug)]
pub struct CentralExtension {
    pub h: MlAlgebra,
    pub k: MlAlgebra,
    pub g: MlAlgebra,
    /// H → K
    pub incl: Vec<usize>,
    /// K → G
    pub proj: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionFailure {
    InclusionNotHom { g: usize, h: usize },
    InclusionNotInjective { a: usize, b: usize },
    ProjectionNotHom { g: usize, h: usize },
    ProjectionNotSurjective { missing: usize },
    ImageKernelMismatch { element: usize },
    NotCentral { element: usize },
}

impl std::fmt::Display for ExtensionFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtensionFailure::InclusionNotHom { g, h } => {
                write!(f, "inclusion is not a homomorphism at ({g}, {h})")
            }
            ExtensionFailure::InclusionNotInjective { a, b } => {
                write!(f, "inclusion identifies {a} and {b}")
            }
            ExtensionFailure::ProjectionNotHom { g, h } => {
                write!(f, "projection is not a homomorphism at ({g}, {h})")
            }
            ExtensionFailure::ProjectionNotSurjective { missing } => {
                write!(f, "projection misses element {missing}")
            }
            ExtensionFailure::ImageKernelMismatch { element } => {
                write!(f, "image(incl) and ker(proj) differ at element {element}")
            }
            ExtensionFailure::NotCentral { element } => {
                write!(f, "image element {element} is not in the multiplicative Lie center")
            }
        }
    }
}

/// Outcome of exhaustive validation with witnesses for every failed clause.
#[derive(Clone, Debug)]
pub struct ExtensionReport {
    pub failures: Vec<ExtensionFailure>,
}

impl ExtensionReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Error)]
#[error("the central extension is invalid: {0}")]
pub struct InvalidExtension(String);

pub fn validate_extension(ext: &CentralExtension) -> ExtensionReport {
    let mut failures = Vec::new();
    let incl = check_homomorphism(&ext.incl, &ext.h, &ext.k);
    if let Some(w) = incl.failure {
        let (g, h) = match w {
            crate::morphism::HomFailure::Mul { g, h }
            | crate::morphism::HomFailure::Star { g, h } => (g, h),
            crate::morphism::HomFailure::Range { g } => (g, g),
        };
        failures.push(ExtensionFailure::InclusionNotHom { g, h });
    }
    if !incl.is_injective {
        'found: for a in 0..ext.h.order() {
            for b in a + 1..ext.h.order() {
                if ext.incl[a] == ext.incl[b] {
                    failures.push(ExtensionFailure::InclusionNotInjective { a, b });
                    break 'found;
                }
            }
        }
    }
    let proj = check_homomorphism(&ext.proj, &ext.k, &ext.g);
    if let Some(w) = proj.failure {
        let (g, h) = match w {
            crate::morphism::HomFailure::Mul { g, h }
            | crate::morphism::HomFailure::Star { g, h } => (g, h),
            crate::morphism::HomFailure::Range { g } => (g, g),
        };
        failures.push(ExtensionFailure::ProjectionNotHom { g, h });
    }
    if !proj.is_surjective {
        let mut hit = vec![false; ext.g.order()];
        for &v in &ext.proj {
            hit[v] = true;
        }
        if let Some(missing) = hit.iter().position(|&b| !b) {
            failures.push(ExtensionFailure::ProjectionNotSurjective { missing });
        }
    }
    // image(incl) = kernel(proj)
    let image = image_subset(ext);
    for x in 0..ext.k.order() {
        let in_image = image.contains(x);
        let in_kernel = ext.proj.get(x).is_some_and(|&v| v == 0);
        if in_image != in_kernel {
            failures.push(ExtensionFailure::ImageKernelMismatch { element: x });
            break;
        }
    }
    // centrality in the multiplicative Lie sense
    let zk = ext.k.ml_center();
    if let Some(bad) = image.iter().find(|&x| !zk.contains(x)) {
        failures.push(ExtensionFailure::NotCentral { element: bad });
    }
    ExtensionReport { failures }
}

pub fn image_subset(ext: &CentralExtension) -> Subset {
    Subset::from_indices(ext.k.order(), &ext.incl)
}

/// `image(incl) ⊆ 𝒵(K)` and `H ≅ multiplier`.
pub fn is_cover(ext: &CentralExtension, multiplier: &MlAlgebra) -> Result<bool, InvalidExtension> {
    let report = validate_extension(ext);
    if !report.is_valid() {
        return Err(InvalidExtension(
            report
                .failures
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>()
                .join("; "),
        ));
    }
    // centrality holds by validation; the isomorphism clause remains
    Ok(!find_isomorphisms(&ext.h, multiplier, 1).is_empty())
}

/// A cover with `image(incl) ⊆ ᴹ[K,K]`.
pub fn is_stem_cover(
    ext: &CentralExtension,
    multiplier: &MlAlgebra,
) -> Result<bool, InvalidExtension> {
    let cover = is_cover(ext, multiplier)?;
    let inside_mc = image_subset(ext).is_subset_of(&ext.k.m_commutator());
    Ok(cover && inside_mc)
}
