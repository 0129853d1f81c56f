//! Finite multiplicative Lie algebras on Cayley tables.
//!
//! A multiplicative Lie algebra is a group with a second operation `⋆`
//! satisfying alternating, conjugation-twisted bimultiplicativity, a
//! Jacobi-type identity, and conjugation equivariance; the commutator
//! (`g⋆h = [g,h]`) and the trivial pairing (`g⋆h = 1`) are the two standard
//! structures carried by every group. This crate validates such tables,
//! computes the structural invariants (the multiplicative commutator
//! `ᴹ[G,G] = [G,G](G⋆G)` and the multiplicative Lie center
//! `𝒵(G) = Z(G) ∩ LZ(G)`), decides isoclinism, finds stems, verifies the
//! pullback/descendant constructions, checks cover and stem-cover conditions
//! on finite central extensions, and exhaustively enumerates `⋆`-structures
//! on small groups.
//!
//! Start with the runnable examples (`cargo run --example invariants_tour`)
//! or the `mlakit` binary (`mlakit invariants fixtures/v4_star.json`).

pub mod algebra;
pub mod bitset;
pub mod catalog;
pub mod completion;
pub mod constructions;
pub mod cover;
pub mod document;
pub mod enumeration;
pub mod isoclinism;
pub mod morphism;

pub use algebra::{GroupTable, MlAlgebra, Quotient, SubAlgebra};
pub use bitset::Subset;
pub use isoclinism::{are_isoclinic, is_stem, IsoclinismPair};
pub use morphism::Morphism;
