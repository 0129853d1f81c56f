//! The isoclinism decision procedure, stem detection, and class partitioning.
//!
//! A pair `(λ, μ)` witnesses isoclinism when `λ : G/𝒵(G) → H/𝒵(H)` and
//! `μ : ᴹ[G,G] → ᴹ[H,H]` are isomorphisms and, for every `g, g'` with
//! `λ`-corresponding representatives `h, h'`:
//!
//! ```text
//! μ(g ⋆ g') = h ⋆ h'      and      μ([g, g']) = [h, h']
//! ```
//!
//! `μ` is never searched: the squares force it on the generators of
//! `ᴹ[G,G]` once `λ` is fixed, so the procedure enumerates `λ` only and
//! derives the unique `μ` candidate.

use crate::algebra::{MlAlgebra, Quotient, SubAlgebra};
use crate::morphism::{check_homomorphism, for_each_isomorphism, Morphism};
use std::ops::ControlFlow;
use thiserror::Error;

/// A verified isoclinism witness; owns the quotient and commutator algebras.
#[derive(Clone, Debug)]
pub struct IsoclinismPair {
    pub g_quotient: Quotient,
    pub h_quotient: Quotient,
    pub g_mcomm: SubAlgebra,
    pub h_mcomm: SubAlgebra,
    /// quotient-index map `G/𝒵(G) -> H/𝒵(H)`
    pub lambda: Morphism,
    /// subalgebra-index map `ᴹ[G,G] -> ᴹ[H,H]`
    pub mu: Morphism,
    /// per element pair: both squares checked
    pub certificate: Vec<CheckedQuad>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckedQuad {
    pub g: u16,
    pub g2: u16,
    pub star_ok: bool,
    pub comm_ok: bool,
}

impl IsoclinismPair {
    /// `μ` on parent element indices; defined only on `ᴹ[G,G]` members.
    pub fn mu_parent(&self, g: usize) -> Option<usize> {
        self.g_mcomm
            .sub_index(g)
            .map(|s| self.h_mcomm.parent_index(self.mu.apply(s)))
    }

    /// Representative in H of the λ-image of g's coset.
    pub fn lambda_rep(&self, g: usize) -> usize {
        self.h_quotient
            .rep(self.lambda.apply(self.g_quotient.project(g)))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MuFailure {
    #[error("μ is not well defined: element {element} is forced to both {first} and {second}")]
    Conflict {
        element: usize,
        first: usize,
        second: usize,
    },
    #[error("μ does not reach every element of ᴹ[H,H]")]
    NotOnto,
    #[error("μ fails to preserve an operation on ᴹ[G,G]")]
    NotHom,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InducedMuError {
    #[error("lambda is not an isomorphism of the central quotients")]
    NotAnIsomorphism,
    #[error(transparent)]
    Failure(#[from] MuFailure),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StemError {
    #[error("no minimal-order member is a stem algebra: {0}")]
    NoStemFound(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PairError {
    #[error("the map is not a homomorphism")]
    NotAHomomorphism,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

/// `𝒵(G) ⊆ ᴹ[G,G]`.
pub fn is_stem(alg: &MlAlgebra) -> bool {
    alg.ml_center().is_subset_of(&alg.m_commutator())
}

struct Decomposed {
    quotient: Quotient,
    mcomm: SubAlgebra,
}

fn decompose(alg: &MlAlgebra) -> Decomposed {
    let quotient = alg
        .quotient(&alg.ml_center())
        .expect("the multiplicative Lie center is an ideal");
    let mcomm = alg
        .extract_subalgebra(&alg.m_commutator())
        .expect("the multiplicative commutator is a subalgebra");
    Decomposed { quotient, mcomm }
}

/// Derives the unique μ candidate forced by λ, as a map on parent indices of
/// G defined on `ᴹ[G,G]` members (`u16::MAX` elsewhere).
fn induce_mu_parent(
    g: &MlAlgebra,
    h: &MlAlgebra,
    gd: &Decomposed,
    hd: &Decomposed,
    lambda: &[u16],
) -> Result<Vec<u16>, MuFailure> {
    const UNSET: u16 = u16::MAX;
    let ng = g.order();
    let mut mu = vec![UNSET; ng];
    let assign = |mu: &mut Vec<u16>, src: usize, dst: usize| -> Result<(), MuFailure> {
        if mu[src] == UNSET {
            mu[src] = dst as u16;
            Ok(())
        } else if mu[src] as usize == dst {
            Ok(())
        } else {
            Err(MuFailure::Conflict {
                element: src,
                first: mu[src] as usize,
                second: dst,
            })
        }
    };
    // seed on the generators: star values and commutators
    for g1 in 0..ng {
        let h1 = hd.quotient.rep(lambda[gd.quotient.project(g1)] as usize);
        for g2 in 0..ng {
            let h2 = hd.quotient.rep(lambda[gd.quotient.project(g2)] as usize);
            assign(&mut mu, g.star(g1, g2), h.star(h1, h2))?;
            assign(&mut mu, g.comm(g1, g2), h.comm(h1, h2))?;
        }
    }
    // multiplicative extension over the ideal
    let members: Vec<usize> = gd.mcomm.to_parent.iter().map(|&x| x as usize).collect();
    loop {
        let mut changed = false;
        for &a in &members {
            if mu[a] == UNSET {
                continue;
            }
            for &b in &members {
                if mu[b] == UNSET {
                    continue;
                }
                let src = g.mul(a, b);
                let dst = h.mul(mu[a] as usize, mu[b] as usize);
                if mu[src] == UNSET {
                    changed = true;
                }
                assign(&mut mu, src, dst)?;
            }
        }
        if !changed {
            break;
        }
    }
    // the star and commutator values generate ᴹ[G,G], so μ is total on it
    debug_assert!(members.iter().all(|&m| mu[m] != UNSET));
    // bijectivity onto ᴹ[H,H]
    let mut hit = vec![false; h.order()];
    for &m in &members {
        let v = mu[m] as usize;
        if hd.mcomm.sub_index(v).is_none() || hit[v] {
            return Err(MuFailure::NotOnto);
        }
        hit[v] = true;
    }
    if hd.mcomm.to_parent.len() != members.len() {
        return Err(MuFailure::NotOnto);
    }
    // homomorphism on both operations within the ideal
    for &a in &members {
        for &b in &members {
            if mu[g.mul(a, b)] as usize != h.mul(mu[a] as usize, mu[b] as usize)
                || mu[g.star(a, b)] as usize != h.star(mu[a] as usize, mu[b] as usize)
            {
                return Err(MuFailure::NotHom);
            }
        }
    }
    Ok(mu)
}

fn squares_commute(
    g: &MlAlgebra,
    h: &MlAlgebra,
    gd: &Decomposed,
    hd: &Decomposed,
    lambda: &[u16],
    mu_parent: &[u16],
    certificate: Option<&mut Vec<CheckedQuad>>,
) -> bool {
    let ng = g.order();
    let mut all_ok = true;
    let mut cert = certificate;
    for g1 in 0..ng {
        let h1 = hd.quotient.rep(lambda[gd.quotient.project(g1)] as usize);
        for g2 in 0..ng {
            let h2 = hd.quotient.rep(lambda[gd.quotient.project(g2)] as usize);
            let star_ok = mu_parent[g.star(g1, g2)] as usize == h.star(h1, h2);
            let comm_ok = mu_parent[g.comm(g1, g2)] as usize == h.comm(h1, h2);
            all_ok &= star_ok && comm_ok;
            if let Some(c) = cert.as_deref_mut() {
                c.push(CheckedQuad {
                    g: g1 as u16,
                    g2: g2 as u16,
                    star_ok,
                    comm_ok,
                });
            } else if !all_ok {
                return false;
            }
        }
    }
    all_ok
}

fn mu_parent_to_sub(gd: &Decomposed, hd: &Decomposed, mu_parent: &[u16]) -> Vec<usize> {
    gd.mcomm
        .to_parent
        .iter()
        .map(|&p| {
            hd.mcomm
                .sub_index(mu_parent[p as usize] as usize)
                .expect("μ lands in ᴹ[H,H]")
        })
        .collect()
}

/// Given λ on the central quotients, derive the forced μ.
pub fn induced_mu(
    lambda: &[usize],
    g: &MlAlgebra,
    h: &MlAlgebra,
) -> Result<Morphism, InducedMuError> {
    let gd = decompose(g);
    let hd = decompose(h);
    let lm = check_homomorphism(lambda, &gd.quotient.alg, &hd.quotient.alg);
    if !lm.is_isomorphism() {
        return Err(InducedMuError::NotAnIsomorphism);
    }
    let mu_parent = induce_mu_parent(g, h, &gd, &hd, &lm.map)?;
    let mu_sub = mu_parent_to_sub(&gd, &hd, &mu_parent);
    Ok(check_homomorphism(&mu_sub, &gd.mcomm.alg, &hd.mcomm.alg))
}

/// Exhaustively verifies a pair: λ and μ are isomorphisms of the right
/// objects and both squares commute over every element pair. Refills the
/// certificate.
pub fn check_isoclinism_pair(pair: &mut IsoclinismPair, g: &MlAlgebra, h: &MlAlgebra) -> bool {
    pair.certificate.clear();
    let lm = check_homomorphism(
        &pair.lambda.map_usize(),
        &pair.g_quotient.alg,
        &pair.h_quotient.alg,
    );
    let mm = check_homomorphism(&pair.mu.map_usize(), &pair.g_mcomm.alg, &pair.h_mcomm.alg);
    if !lm.is_isomorphism() || !mm.is_isomorphism() {
        return false;
    }
    let gd = Decomposed {
        quotient: pair.g_quotient.clone(),
        mcomm: pair.g_mcomm.clone(),
    };
    let hd = Decomposed {
        quotient: pair.h_quotient.clone(),
        mcomm: pair.h_mcomm.clone(),
    };
    let mut mu_parent = vec![u16::MAX; g.order()];
    for (s, &p) in gd.mcomm.to_parent.iter().enumerate() {
        mu_parent[p as usize] = hd.mcomm.parent_index(pair.mu.apply(s)) as u16;
    }
    let mut cert = std::mem::take(&mut pair.certificate);
    let ok = squares_commute(g, h, &gd, &hd, &pair.lambda.map, &mu_parent, Some(&mut cert));
    pair.certificate = cert;
    ok
}

/// Decision procedure: enumerate quotient isomorphisms λ in deterministic
/// order, derive μ for each, accept the first λ whose μ is well defined and
/// makes both squares commute. `None` iff no λ works.
pub fn are_isoclinic(g: &MlAlgebra, h: &MlAlgebra) -> Option<IsoclinismPair> {
    let gd = decompose(g);
    let hd = decompose(h);
    if gd.quotient.alg.order() != hd.quotient.alg.order()
        || gd.mcomm.alg.order() != hd.mcomm.alg.order()
    {
        return None;
    }
    let mut found: Option<(Vec<u16>, Vec<u16>)> = None;
    for_each_isomorphism(&gd.quotient.alg, &hd.quotient.alg, true, |lambda| {
        if let Ok(mu_parent) = induce_mu_parent(g, h, &gd, &hd, lambda) {
            if squares_commute(g, h, &gd, &hd, lambda, &mu_parent, None) {
                found = Some((lambda.to_vec(), mu_parent));
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    let (lambda, mu_parent) = found?;
    let lambda_usize: Vec<usize> = lambda.iter().map(|&x| x as usize).collect();
    let mu_sub = mu_parent_to_sub(&gd, &hd, &mu_parent);
    let mut pair = IsoclinismPair {
        lambda: check_homomorphism(&lambda_usize, &gd.quotient.alg, &hd.quotient.alg),
        mu: check_homomorphism(&mu_sub, &gd.mcomm.alg, &hd.mcomm.alg),
        g_quotient: gd.quotient,
        h_quotient: hd.quotient,
        g_mcomm: gd.mcomm,
        h_mcomm: hd.mcomm,
        certificate: Vec::new(),
    };
    let ok = check_isoclinism_pair(&mut pair, g, h);
    debug_assert!(ok, "accepted pair must verify");
    Some(pair)
}

/// Equivalence classes under isoclinism, in input order; the representative
/// is the first member.
pub fn partition_by_isoclinism(algs: &[MlAlgebra]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, alg) in algs.iter().enumerate() {
        let mut placed = false;
        for class in classes.iter_mut() {
            let rep = &algs[class[0]];
            if are_isoclinic(rep, alg).is_some() {
                class.push(i);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![i]);
        }
    }
    classes
}

/// Minimal-order member of a mutually isoclinic class; asserts the stem
/// theorem on the class: minimal order ⟺ stem.
pub fn find_stem_in_class(class: &[MlAlgebra]) -> Result<usize, StemError> {
    assert!(!class.is_empty(), "class must be nonempty");
    let min_order = class.iter().map(|a| a.order()).min().unwrap();
    for (i, alg) in class.iter().enumerate() {
        let stem = is_stem(alg);
        if alg.order() == min_order && !stem {
            return Err(StemError::NoStemFound(format!(
                "member {i} has minimal order {min_order} but is not a stem"
            )));
        }
        if alg.order() != min_order && stem {
            return Err(StemError::NoStemFound(format!(
                "member {i} is a stem of non-minimal order {}",
                alg.order()
            )));
        }
    }
    Ok(class.iter().position(|a| a.order() == min_order).unwrap())
}

/// The two conditions of the kernel/image criterion, evaluated literally:
/// `ker(α) ∩ ᴹ[G,G] = 1` and `H = Image(α)·𝒵(H)`.
pub fn homomorphism_induces_isoclinism(
    alpha: &[usize],
    g: &MlAlgebra,
    h: &MlAlgebra,
) -> Result<bool, PairError> {
    let m = check_homomorphism(alpha, g, h);
    if !m.is_hom {
        return Err(PairError::NotAHomomorphism);
    }
    let mc = g.m_commutator();
    let kernel_meets_mc = (1..g.order()).any(|x| alpha[x] == 0 && mc.contains(x));
    if kernel_meets_mc {
        return Ok(false);
    }
    let zh = h.ml_center();
    let mut covered = vec![false; h.order()];
    for x in 0..g.order() {
        for z in zh.iter() {
            covered[h.mul(alpha[x], z)] = true;
        }
    }
    Ok(covered.iter().all(|&b| b))
}

/// For stems in one class, μ restricts to an isomorphism of the centers.
pub fn stems_have_isomorphic_centers(g: &MlAlgebra, h: &MlAlgebra) -> Result<bool, PairError> {
    if !is_stem(g) || !is_stem(h) {
        return Err(PairError::PreconditionViolated(
            "both algebras must be stems".into(),
        ));
    }
    let Some(pair) = are_isoclinic(g, h) else {
        return Err(PairError::PreconditionViolated(
            "the algebras are not isoclinic".into(),
        ));
    };
    let zg = g.ml_center();
    let zh = h.ml_center();
    if zg.card() != zh.card() {
        return Ok(false);
    }
    // image of 𝒵(G) under μ must be exactly 𝒵(H), and μ restricted there
    // must preserve multiplication
    let mut image = Vec::new();
    for a in zg.iter() {
        match pair.mu_parent(a) {
            Some(v) if zh.contains(v) => image.push(v),
            _ => return Ok(false),
        }
    }
    image.sort_unstable();
    image.dedup();
    if image.len() != zh.card() {
        return Ok(false);
    }
    for a in zg.iter() {
        for b in zg.iter() {
            let lhs = pair.mu_parent(g.mul(a, b)).unwrap();
            let rhs = h.mul(pair.mu_parent(a).unwrap(), pair.mu_parent(b).unwrap());
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
