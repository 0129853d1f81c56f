//! The algebra file format and digests.
//!
//! A document is standard JSON with fields `order`, `mul`, optional `star`,
//! optional `labels`, and optional `generators` + `partial_star` for
//! generator-level input. Canonical output is compact with keys in sorted
//! order, so canonical files are byte-comparable; digests are SHA-256 over
//! the canonical form.

use crate::algebra::{GroupTable, MlAlgebra, TableError};
use crate::completion::CompletionError;
use crate::cover::CentralExtension;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::Path;
use thiserror::Error;

pub const DEFAULT_ORDER_CAP: usize = 256;

/// Field order is alphabetical so plain serialization is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub mul: Vec<Vec<usize>>,
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partial_star: Option<Vec<[usize; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("document is inconsistent: {0}")]
    Document(String),
    #[error("order {order} exceeds the cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Completion(#[from] CompletionError),
    #[error("the partial star admits no valid completion")]
    NoCompletion,
    #[error("the partial star is ambiguous: {count} completions; run complete-star to list them")]
    AmbiguousCompletion { count: usize },
    #[error("document has no star and no partial_star")]
    MissingStar,
    #[error("digest mismatch for {file}: expected {expected}, found {found}")]
    DigestMismatch {
        file: String,
        expected: String,
        found: String,
    },
}

impl AlgebraDocument {
    pub fn from_algebra(alg: &MlAlgebra) -> Self {
        AlgebraDocument {
            generators: None,
            labels: alg.labels().map(|l| l.to_vec()),
            mul: alg.group().mul_rows(),
            order: alg.order(),
            partial_star: None,
            star: Some(alg.star_rows()),
        }
    }

    pub fn from_group(group: &GroupTable) -> Self {
        AlgebraDocument {
            generators: None,
            labels: group.labels().map(|l| l.to_vec()),
            mul: group.mul_rows(),
            order: group.order(),
            partial_star: None,
            star: None,
        }
    }

    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }

    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.canonical_json().as_bytes());
        hex_string(&hasher.finalize())
    }

    fn check_shape(&self, cap: usize) -> Result<(), LoadError> {
        if self.order == 0 {
            return Err(LoadError::Document("order must be positive".into()));
        }
        if self.order > cap {
            return Err(LoadError::CapExceeded {
                order: self.order,
                cap,
            });
        }
        if self.mul.len() != self.order {
            return Err(LoadError::Document(format!(
                "mul has {} rows but order is {}",
                self.mul.len(),
                self.order
            )));
        }
        Ok(())
    }

    /// The group part only; `star`/`partial_star` may be absent.
    pub fn to_group(&self, cap: usize) -> Result<GroupTable, LoadError> {
        self.check_shape(cap)?;
        Ok(GroupTable::from_mul(self.mul.clone(), self.labels.clone())?)
    }

    /// A single fully validated algebra. A document with `partial_star` must
    /// complete uniquely.
    pub fn to_algebra(&self, cap: usize) -> Result<MlAlgebra, LoadError> {
        self.check_shape(cap)?;
        if let Some(star) = &self.star {
            return Ok(MlAlgebra::from_tables(
                self.mul.clone(),
                star.clone(),
                self.labels.clone(),
            )?);
        }
        if self.partial_star.is_some() {
            let mut all = self.completions(cap)?;
            return match all.len() {
                0 => Err(LoadError::NoCompletion),
                1 => Ok(all.pop().unwrap()),
                count => Err(LoadError::AmbiguousCompletion { count }),
            };
        }
        Err(LoadError::MissingStar)
    }

    /// Every valid completion of the document's star data.
    pub fn completions(&self, cap: usize) -> Result<Vec<MlAlgebra>, LoadError> {
        self.check_shape(cap)?;
        let group = self.to_group(cap)?;
        let seeds: Vec<(usize, usize, usize)> = match (&self.star, &self.partial_star) {
            (Some(star), _) => {
                // full table: validate and return it as the single candidate
                let alg =
                    MlAlgebra::from_tables(self.mul.clone(), star.clone(), self.labels.clone())?;
                return Ok(vec![alg]);
            }
            (None, Some(pairs)) => pairs.iter().map(|t| (t[0], t[1], t[2])).collect(),
            (None, None) => return Err(LoadError::MissingStar),
        };
        Ok(crate::completion::complete_star(&group, &seeds)?)
    }
}

pub fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn read_document(path: &Path) -> Result<AlgebraDocument, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}

pub fn load_algebra(path: &Path, cap: usize) -> Result<MlAlgebra, LoadError> {
    read_document(path)?.to_algebra(cap)
}

pub fn load_group(path: &Path, cap: usize) -> Result<GroupTable, LoadError> {
    read_document(path)?.to_group(cap)
}

pub fn write_document(path: &Path, doc: &AlgebraDocument) -> Result<(), LoadError> {
    std::fs::write(path, doc.canonical_json() + "\n").map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Extension input: three algebra files plus the two map vectors, each
/// algebra pinned by the digest of its canonical document.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionDocument {
    pub g_digest: String,
    pub g_file: String,
    pub h_digest: String,
    pub h_file: String,
    pub incl: Vec<usize>,
    pub k_digest: String,
    pub k_file: String,
    pub proj: Vec<usize>,
}

impl ExtensionDocument {
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }
}

/// Loads an extension document; referenced files are resolved relative to the
/// document's directory and digest-checked.
pub fn load_extension(path: &Path, cap: usize) -> Result<CentralExtension, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let doc: ExtensionDocument = serde_json::from_str(&text)?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let load_checked = |file: &str, expected: &str| -> Result<MlAlgebra, LoadError> {
        let sub = read_document(&dir.join(file))?;
        let found = sub.digest();
        if found != expected {
            return Err(LoadError::DigestMismatch {
                file: file.to_string(),
                expected: expected.to_string(),
                found,
            });
        }
        sub.to_algebra(cap)
    };
    let h = load_checked(&doc.h_file, &doc.h_digest)?;
    let k = load_checked(&doc.k_file, &doc.k_digest)?;
    let g = load_checked(&doc.g_file, &doc.g_digest)?;
    if doc.incl.len() != h.order() {
        return Err(LoadError::Document(format!(
            "incl has {} entries but |H| = {}",
            doc.incl.len(),
            h.order()
        )));
    }
    if doc.proj.len() != k.order() {
        return Err(LoadError::Document(format!(
            "proj has {} entries but |K| = {}",
            doc.proj.len(),
            k.order()
        )));
    }
    Ok(CentralExtension {
        h,
        k,
        g,
        incl: doc.incl,
        proj: doc.proj,
    })
}

/// A morphism on disk: the map vector plus digests of both endpoint
/// documents.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MorphismDocument {
    pub map: Vec<usize>,
    pub source_digest: String,
    pub target_digest: String,
}

impl MorphismDocument {
    pub fn new(map: Vec<usize>, source: &MlAlgebra, target: &MlAlgebra) -> Self {
        MorphismDocument {
            map,
            source_digest: AlgebraDocument::from_algebra(source).digest(),
            target_digest: AlgebraDocument::from_algebra(target).digest(),
        }
    }
}
