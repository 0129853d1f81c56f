//! Executable verifiers for the constructive theorems: the pullback algebra,
//! the common descendant, quotient isoclinism, the Hom-correspondence with an
//! abelian-trivial target, and the adjunction naturality square.
//!
//! These functions assert their conclusions rather than assuming them; a
//! failure is a construction error, not a recoverable state.

use crate::algebra::{MlAlgebra, NotAnIdeal, Product, Quotient, SubAlgebra};
use crate::bitset::Subset;
use crate::document::AlgebraDocument;
use crate::isoclinism::{are_isoclinic, check_isoclinism_pair, IsoclinismPair};
use crate::morphism::{check_homomorphism, enumerate_homomorphisms, Morphism};
use serde::Serialize;
use thiserror::Error;

pub const DEFAULT_CONSTRUCTION_CAP: usize = 256;

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("the supplied pair does not witness an isoclinism")]
    InvalidPair,
    #[error("intermediate order {order} exceeds the cap {cap}")]
    SizeCap { order: usize, cap: usize },
    #[error("construction assertion failed: {0}")]
    Failure(String),
}

#[derive(Debug, Error)]
pub enum CheckError {
    #[error(transparent)]
    NotAnIdeal(#[from] NotAnIdeal),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

fn fail(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::Failure(msg.into())
}

/// Serializable outcome of one verifier run: which construction, digests of
/// the inputs, pass/fail, and the witness on failure.
#[derive(Clone, Debug, Serialize)]
pub struct VerifierReport {
    pub construction: String,
    pub inputs: Vec<String>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl VerifierReport {
    pub fn new<T, E: std::fmt::Display>(
        construction: &str,
        inputs: &[&MlAlgebra],
        outcome: &Result<T, E>,
    ) -> Self {
        VerifierReport {
            construction: construction.to_string(),
            inputs: inputs
                .iter()
                .map(|a| AlgebraDocument::from_algebra(a).digest())
                .collect(),
            pass: outcome.is_ok(),
            witness: outcome.as_ref().err().map(|e| e.to_string()),
        }
    }

    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

/// The pullback `K = {(g,h) : λ(g𝒵(G)) = h𝒵(H)}` inside `G × H`, with the
/// central ideals and both projections, all conclusions verified.
pub struct PullbackResult {
    pub product: Product,
    /// K as a subalgebra of the product
    pub k: SubAlgebra,
    /// `{(g,1) : g ∈ 𝒵(G)}` and `{(1,h) : h ∈ 𝒵(H)}`, in K's indices
    pub zg: Subset,
    pub zh: Subset,
    /// projections K → G and K → H
    pub proj_g: Morphism,
    pub proj_h: Morphism,
}

pub fn isoclinism_pullback(
    g: &MlAlgebra,
    h: &MlAlgebra,
    pair: &IsoclinismPair,
    cap: usize,
) -> Result<PullbackResult, ConstructionError> {
    let mut pair_check = pair.clone();
    if !check_isoclinism_pair(&mut pair_check, g, h) {
        return Err(ConstructionError::InvalidPair);
    }
    let order = g.order() * h.order();
    if order > cap {
        return Err(ConstructionError::SizeCap { order, cap });
    }
    let product = g.direct_product(h);
    let mut members = Subset::empty(order);
    for g1 in 0..g.order() {
        let lam = pair.lambda.apply(pair.g_quotient.project(g1));
        for h1 in 0..h.order() {
            if pair.h_quotient.project(h1) == lam {
                members.insert(product.pair(g1, h1));
            }
        }
    }
    let k = product
        .alg
        .extract_subalgebra(&members)
        .map_err(|_| fail("the pullback set is not a subalgebra"))?;
    let nk = k.alg.order();
    let zg_parent = g.ml_center();
    let zh_parent = h.ml_center();
    if nk != g.order() * zh_parent.card() {
        return Err(fail(format!(
            "|K| = {nk}, expected |G|·|𝒵(H)| = {}",
            g.order() * zh_parent.card()
        )));
    }
    let mut zg = Subset::empty(nk);
    for a in zg_parent.iter() {
        match k.sub_index(product.pair(a, 0)) {
            Some(i) => {
                zg.insert(i);
            }
            None => return Err(fail("(g,1) with central g is missing from K")),
        }
    }
    let mut zh = Subset::empty(nk);
    for b in zh_parent.iter() {
        match k.sub_index(product.pair(0, b)) {
            Some(i) => {
                zh.insert(i);
            }
            None => return Err(fail("(1,h) with central h is missing from K")),
        }
    }
    if !k.alg.is_ideal(&zg) || !k.alg.is_ideal(&zh) {
        return Err(fail("𝒵-slices are not ideals of K"));
    }
    let proj_g_map: Vec<usize> = (0..nk).map(|i| product.split(k.parent_index(i)).0).collect();
    let proj_h_map: Vec<usize> = (0..nk).map(|i| product.split(k.parent_index(i)).1).collect();
    let proj_g = check_homomorphism(&proj_g_map, &k.alg, g);
    let proj_h = check_homomorphism(&proj_h_map, &k.alg, h);
    if !(proj_g.is_hom && proj_g.is_surjective && proj_h.is_hom && proj_h.is_surjective) {
        return Err(fail("projections are not surjective homomorphisms"));
    }
    // K/𝒵ᴴ ≅ G via the induced first projection, and K/𝒵ᴳ ≅ H likewise
    verify_quotient_iso(&k.alg, &zh, &proj_g_map, g, "K/𝒵ᴴ ≅ G")?;
    verify_quotient_iso(&k.alg, &zg, &proj_h_map, h, "K/𝒵ᴳ ≅ H")?;
    // G ~ K ~ H
    if are_isoclinic(g, &k.alg).is_none() || are_isoclinic(&k.alg, h).is_none() {
        return Err(fail("K is not isoclinic to both factors"));
    }
    Ok(PullbackResult {
        product,
        k,
        zg,
        zh,
        proj_g,
        proj_h,
    })
}

fn verify_quotient_iso(
    k: &MlAlgebra,
    ideal: &Subset,
    component: &[usize],
    target: &MlAlgebra,
    what: &str,
) -> Result<Quotient, ConstructionError> {
    let q = k
        .quotient(ideal)
        .map_err(|_| fail(format!("{what}: not an ideal")))?;
    // the component map is constant on cosets, so it descends
    let mut induced = vec![usize::MAX; q.alg.order()];
    for x in 0..k.order() {
        let c = q.project(x);
        if induced[c] == usize::MAX {
            induced[c] = component[x];
        } else if induced[c] != component[x] {
            return Err(fail(format!("{what}: map is not constant on cosets")));
        }
    }
    let m = check_homomorphism(&induced, &q.alg, target);
    if !m.is_isomorphism() {
        return Err(fail(format!("{what}: induced map is not an isomorphism")));
    }
    Ok(q)
}

/// The common descendant `K̃ = T/L` with both embeddings, all conclusions
/// verified, including `ᴹ[T,T] ∩ L = 1` and `K̃ = K̃_G·𝒵(K̃) = K̃_H·𝒵(K̃)`.
pub struct DescendantResult {
    pub pullback: PullbackResult,
    /// `T = (K/𝒵ᴴ) × (K/ᴹ[K,K])`
    pub t: Product,
    /// the ideal L of T
    pub l: Subset,
    pub ktilde: Quotient,
    /// embeddings G → K̃ and H → K̃
    pub gamma_g: Morphism,
    pub gamma_h: Morphism,
    /// the embedded images
    pub kg: Subset,
    pub kh: Subset,
}

pub fn common_descendant(
    g: &MlAlgebra,
    h: &MlAlgebra,
    pair: &IsoclinismPair,
    cap: usize,
) -> Result<DescendantResult, ConstructionError> {
    let pb = isoclinism_pullback(g, h, pair, cap)?;
    let k = &pb.k.alg;
    let q1 = k
        .quotient(&pb.zh)
        .map_err(|_| fail("𝒵ᴴ is not an ideal"))?;
    let mck = k.m_commutator();
    let q2 = k.quotient(&mck).map_err(|_| fail("ᴹ[K,K] is not an ideal"))?;
    let t_order = q1.alg.order() * q2.alg.order();
    if t_order > cap {
        return Err(ConstructionError::SizeCap {
            order: t_order,
            cap,
        });
    }
    let t = q1.alg.direct_product(&q2.alg);
    // L = {((g,1)𝒵ᴴ, (g,1)ᴹ[K,K]) : g ∈ 𝒵(G)}
    let mut l = Subset::empty(t_order);
    for a in g.ml_center().iter() {
        let kz = pb
            .k
            .sub_index(pb.product.pair(a, 0))
            .ok_or_else(|| fail("(g,1) with central g is missing from K"))?;
        l.insert(t.pair(q1.project(kz), q2.project(kz)));
    }
    if !t.alg.is_ideal(&l) {
        return Err(fail("L is not an ideal of T"));
    }
    let mct = t.alg.m_commutator();
    if mct.intersection(&l).card() != 1 {
        return Err(fail("ᴹ[T,T] ∩ L ≠ 1"));
    }
    let ktilde = t.alg.quotient(&l).map_err(|_| fail("L is not an ideal"))?;
    // γ_G(g) = ((g,h)𝒵ᴴ, identity)L, γ_H(h) = ((g,h)𝒵ᴴ, (g,h)ᴹ[K,K])L
    let mut gamma_g_map = vec![0usize; g.order()];
    for g1 in 0..g.order() {
        let kz = (0..h.order())
            .find_map(|h1| pb.k.sub_index(pb.product.pair(g1, h1)))
            .ok_or_else(|| fail("no H-partner for a G element in K"))?;
        gamma_g_map[g1] = ktilde.project(t.pair(q1.project(kz), 0));
    }
    let mut gamma_h_map = vec![0usize; h.order()];
    for h1 in 0..h.order() {
        let kz = (0..g.order())
            .find_map(|g1| pb.k.sub_index(pb.product.pair(g1, h1)))
            .ok_or_else(|| fail("no G-partner for an H element in K"))?;
        gamma_h_map[h1] = ktilde.project(t.pair(q1.project(kz), q2.project(kz)));
    }
    let gamma_g = check_homomorphism(&gamma_g_map, g, &ktilde.alg);
    let gamma_h = check_homomorphism(&gamma_h_map, h, &ktilde.alg);
    if !(gamma_g.is_hom && gamma_g.is_injective) {
        return Err(fail("γ_G is not an injective homomorphism"));
    }
    if !(gamma_h.is_hom && gamma_h.is_injective) {
        return Err(fail("γ_H is not an injective homomorphism"));
    }
    let kg = Subset::from_indices(ktilde.alg.order(), &gamma_g_map);
    let kh = Subset::from_indices(ktilde.alg.order(), &gamma_h_map);
    // K̃_G·𝒵(K̃) = K̃ = K̃_H·𝒵(K̃)
    let z = ktilde.alg.ml_center();
    for (name, image) in [("K̃_G", &kg), ("K̃_H", &kh)] {
        let mut covered = Subset::empty(ktilde.alg.order());
        for a in image.iter() {
            for b in z.iter() {
                covered.insert(ktilde.alg.mul(a, b));
            }
        }
        if covered.card() != ktilde.alg.order() {
            return Err(fail(format!("{name}·𝒵(K̃) ≠ K̃")));
        }
    }
    // images isoclinic to K̃ (the subalgebra-expansion lemma in action)
    for (name, image) in [("K̃_G", &kg), ("K̃_H", &kh)] {
        let sub = ktilde
            .alg
            .extract_subalgebra(image)
            .map_err(|_| fail(format!("{name} is not a subalgebra")))?;
        if are_isoclinic(&sub.alg, &ktilde.alg).is_none() {
            return Err(fail(format!("{name} is not isoclinic to K̃")));
        }
    }
    Ok(DescendantResult {
        pullback: pb,
        t,
        l,
        ktilde,
        gamma_g,
        gamma_h,
        kg,
        kh,
    })
}

/// Verifies `G/I ~ G/(I ∩ ᴹ[G,G])` and the finite criterion
/// `I ∩ ᴹ[G,G] = 1 ⟺ G ~ G/I`; true iff both hold.
pub fn quotient_isoclinism_check(g: &MlAlgebra, ideal: &Subset) -> Result<bool, NotAnIdeal> {
    let qi = g.quotient(ideal)?;
    let j = ideal.intersection(&g.m_commutator());
    let qj = g.quotient(&j)?;
    let first = are_isoclinic(&qi.alg, &qj.alg).is_some();
    let second = (j.card() == 1) == are_isoclinic(g, &qi.alg).is_some();
    Ok(first && second)
}

/// Verifies the bijection `Hom(A/ᴹ[A,A], Ã) → Hom(A, Ã)`, `ρ̄ ↦ ρ̄∘ν`, for an
/// abelian target with trivial star.
pub fn hom_correspondence_check(a: &MlAlgebra, atilde: &MlAlgebra) -> Result<bool, CheckError> {
    if !atilde.is_abelian_trivial() {
        return Err(CheckError::Precondition(
            "target must be abelian with trivial star".into(),
        ));
    }
    let direct = enumerate_homomorphisms(a, atilde);
    let q = a.quotient(&a.m_commutator())?;
    let factored = enumerate_homomorphisms(&q.alg, atilde);
    if direct.len() != factored.len() {
        return Ok(false);
    }
    let mut composites: Vec<Vec<u16>> = factored
        .iter()
        .map(|rho| (0..a.order()).map(|x| rho[q.project(x)]).collect())
        .collect();
    composites.sort_unstable();
    let distinct = composites.windows(2).all(|w| w[0] != w[1]);
    Ok(distinct && composites == direct)
}

/// Checks the naturality square of the adjunction between the abelianization
/// functor and the trivial-structure embedding: for every
/// `τ ∈ Hom(F(M), A)`, going `Ψ` then `Φ` equals going `Φ` then `Ψ`.
///
/// `f : M̃ → M` and `g : A → Ã` are homomorphisms, `A`, `Ã` abelian-trivial.
pub fn adjunction_naturality_check(
    m: &MlAlgebra,
    mtilde: &MlAlgebra,
    f: &[usize],
    a: &MlAlgebra,
    atilde: &MlAlgebra,
    gmap: &[usize],
) -> Result<bool, CheckError> {
    if !a.is_abelian_trivial() || !atilde.is_abelian_trivial() {
        return Err(CheckError::Precondition(
            "both targets must be abelian with trivial star".into(),
        ));
    }
    if !check_homomorphism(f, mtilde, m).is_hom {
        return Err(CheckError::Precondition("f is not a homomorphism".into()));
    }
    if !check_homomorphism(gmap, a, atilde).is_hom {
        return Err(CheckError::Precondition("g is not a homomorphism".into()));
    }
    let fm = m.quotient(&m.m_commutator())?;
    let fmt = mtilde.quotient(&mtilde.m_commutator())?;
    // F(f) : F(M̃) → F(M)
    let ff: Vec<usize> = (0..fmt.alg.order())
        .map(|c| fm.project(f[fmt.rep(c)]))
        .collect();
    for tau in enumerate_homomorphisms(&fm.alg, a) {
        for x in 0..mtilde.order() {
            // Φ(Ψ(τ)) = g ∘ τ ∘ F(f) ∘ ν′
            let path1 = gmap[tau[ff[fmt.project(x)]] as usize];
            // Ψ(Φ(τ)) = g ∘ (τ ∘ ν) ∘ f
            let path2 = gmap[tau[fm.project(f[x])] as usize];
            if path1 != path2 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Verifies `S ~ S·𝒵(G)` by the explicit pair (central factors are invisible
/// to both operations) and the biconditional `S ~ G ⟺ S·𝒵(G) = G`.
pub fn subalgebra_center_expansion_check(
    g: &MlAlgebra,
    s: &Subset,
) -> Result<bool, CheckError> {
    if !g.is_subalgebra(s) {
        return Err(CheckError::Precondition("S is not a subalgebra".into()));
    }
    let z = g.ml_center();
    let mut sz = Subset::empty(g.order());
    for a in s.iter() {
        for b in z.iter() {
            sz.insert(g.mul(a, b));
        }
    }
    let sub_s = g
        .extract_subalgebra(s)
        .map_err(|_| CheckError::Precondition("S is not a subalgebra".into()))?;
    let sub_sz = g
        .extract_subalgebra(&sz)
        .map_err(|_| CheckError::Precondition("S·𝒵(G) is not a subalgebra".into()))?;

    // explicit pair: λ(h·𝒵(S)) = h·𝒵(S𝒵), μ = identity on the common ᴹ
    let qs = sub_s
        .alg
        .quotient(&sub_s.alg.ml_center())
        .expect("ml center is an ideal");
    let qsz = sub_sz
        .alg
        .quotient(&sub_sz.alg.ml_center())
        .expect("ml center is an ideal");
    let ms = sub_s
        .alg
        .extract_subalgebra(&sub_s.alg.m_commutator())
        .expect("ideal");
    let msz = sub_sz
        .alg
        .extract_subalgebra(&sub_sz.alg.m_commutator())
        .expect("ideal");
    // ᴹ[S,S] and ᴹ[S𝒵,S𝒵] must agree as parent subsets
    let ms_parents: Vec<usize> = ms
        .to_parent
        .iter()
        .map(|&i| sub_s.parent_index(i as usize))
        .collect();
    let msz_parents: Vec<usize> = msz
        .to_parent
        .iter()
        .map(|&i| sub_sz.parent_index(i as usize))
        .collect();
    if ms_parents != msz_parents {
        return Ok(false);
    }
    if qs.alg.order() != qsz.alg.order() {
        return Ok(false);
    }
    let lambda: Vec<usize> = (0..qs.alg.order())
        .map(|c| {
            let parent = sub_s.parent_index(qs.rep(c));
            qsz.project(sub_sz.sub_index(parent).expect("S ⊆ S𝒵"))
        })
        .collect();
    let mu: Vec<usize> = (0..ms.alg.order()).collect();
    let mut pair = IsoclinismPair {
        lambda: check_homomorphism(&lambda, &qs.alg, &qsz.alg),
        mu: check_homomorphism(&mu, &ms.alg, &msz.alg),
        g_quotient: qs,
        h_quotient: qsz,
        g_mcomm: ms,
        h_mcomm: msz,
        certificate: Vec::new(),
    };
    let expansion_ok = check_isoclinism_pair(&mut pair, &sub_s.alg, &sub_sz.alg);

    let s_isoclinic_g = are_isoclinic(&sub_s.alg, g).is_some();
    let sz_is_all = sz.card() == g.order();
    Ok(expansion_ok && (s_isoclinic_g == sz_is_all))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn v4a_pair() -> (MlAlgebra, MlAlgebra, IsoclinismPair) {
        let v4 = catalog::v4_with_star();
        let a = catalog::z2cubed_with_star();
        let pair = are_isoclinic(&v4, &a).unwrap();
        (v4, a, pair)
    }

    #[test]
    fn pullback_on_the_standard_pair() {
        let (v4, a, pair) = v4a_pair();
        let pb = isoclinism_pullback(&v4, &a, &pair, 256).unwrap();
        // |K| = |G| · |𝒵(H)| = 4 · 2
        assert_eq!(pb.k.alg.order(), 8);
        assert_eq!(pb.zg.card(), 1);
        assert_eq!(pb.zh.card(), 2);
    }

    #[test]
    fn pullback_diagonal_case() {
        let q8 = catalog::q8_improper();
        let pair = are_isoclinic(&q8, &q8).unwrap();
        let pb = isoclinism_pullback(&q8, &q8, &pair, 256).unwrap();
        assert_eq!(pb.k.alg.order(), 8 * 2);
        // 𝒵(H) trivial collapses K onto the graph of the lift
        let v4 = catalog::v4_with_star();
        let pair_v4 = are_isoclinic(&v4, &v4).unwrap();
        let pb_v4 = isoclinism_pullback(&v4, &v4, &pair_v4, 256).unwrap();
        assert_eq!(pb_v4.k.alg.order(), 4);
        assert!(pb_v4.proj_g.is_injective);
    }

    #[test]
    fn descendant_on_the_standard_pair() {
        let (v4, a, pair) = v4a_pair();
        let d = common_descendant(&v4, &a, &pair, 256).unwrap();
        assert_eq!(d.kg.card(), 4);
        assert_eq!(d.kh.card(), 8);
        assert!(d.gamma_g.is_injective && d.gamma_h.is_injective);
    }

    #[test]
    fn descendant_trivial_case() {
        let one = catalog::trivial_star(&catalog::cyclic(1));
        let pair = are_isoclinic(&one, &one).unwrap();
        let d = common_descendant(&one, &one, &pair, 256).unwrap();
        assert_eq!(d.ktilde.alg.order(), 1);
    }

    #[test]
    fn descendant_self_pair() {
        let v4 = catalog::v4_with_star();
        let pair = are_isoclinic(&v4, &v4).unwrap();
        let d = common_descendant(&v4, &v4, &pair, 256).unwrap();
        assert!(d.kg.card() == 4 && d.kh.card() == 4);
    }

    #[test]
    fn verifier_reports() {
        let (v4, a, pair) = v4a_pair();
        let good = isoclinism_pullback(&v4, &a, &pair, 256);
        let report = VerifierReport::new("isoclinism_pullback", &[&v4, &a], &good);
        assert!(report.pass && report.witness.is_none());
        assert_eq!(report.inputs.len(), 2);

        let capped = common_descendant(&v4, &a, &pair, 4);
        let report = VerifierReport::new("common_descendant", &[&v4, &a], &capped);
        assert!(!report.pass);
        assert!(report.witness.unwrap().contains("cap"));
        let json = VerifierReport::new("isoclinism_pullback", &[&v4, &a], &good).canonical_json();
        assert!(json.starts_with("{\"construction\":"));
    }

    #[test]
    fn size_guard() {
        let q16 = catalog::improper_star(&catalog::quaternion(16));
        let pair = are_isoclinic(&q16, &q16).unwrap();
        match isoclinism_pullback(&q16, &q16, &pair, 100) {
            Err(ConstructionError::SizeCap { order: 256, cap: 100 }) => {}
            other => panic!("expected size cap, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn quotient_isoclinism_on_ideals() {
        let v4 = catalog::v4_with_star();
        for ideal in v4.ideals() {
            assert!(quotient_isoclinism_check(&v4, &ideal).unwrap());
        }
        let q8 = catalog::q8_improper();
        for ideal in q8.ideals() {
            assert!(quotient_isoclinism_check(&q8, &ideal).unwrap());
        }
        assert!(quotient_isoclinism_check(&v4, &Subset::from_indices(4, &[0, 2])).is_err());
    }

    #[test]
    fn hom_correspondence_counts() {
        let v4 = catalog::v4_with_star();
        let z2 = catalog::trivial_star(&catalog::cyclic(2));
        assert!(hom_correspondence_check(&v4, &z2).unwrap());

        let q8 = catalog::q8_improper();
        let z4 = catalog::z4_trivial();
        assert!(hom_correspondence_check(&q8, &z4).unwrap());

        let one = catalog::trivial_star(&catalog::cyclic(1));
        assert!(hom_correspondence_check(&one, &one).unwrap());

        // non-abelian-trivial target is a precondition violation
        assert!(hom_correspondence_check(&z2, &v4).is_err());
    }

    #[test]
    fn adjunction_naturality_basic() {
        let one = catalog::trivial_star(&catalog::cyclic(1));
        assert!(adjunction_naturality_check(&one, &one, &[0], &one, &one, &[0]).unwrap());

        let v4 = catalog::v4_with_star();
        let z2 = catalog::trivial_star(&catalog::cyclic(2));
        let id4: Vec<usize> = (0..4).collect();
        let id2: Vec<usize> = (0..2).collect();
        assert!(adjunction_naturality_check(&v4, &v4, &id4, &z2, &z2, &id2).unwrap());

        // Q8 with a V4-source through a collapsing hom
        let q8 = catalog::q8_improper();
        let f: Vec<usize> = vec![0, 0, 0, 0]; // V4 -> Q8 constant hom
        assert!(adjunction_naturality_check(&q8, &v4, &f, &z2, &z2, &id2).unwrap());
    }

    #[test]
    fn subalgebra_expansion() {
        let v4 = catalog::v4_with_star();
        assert!(subalgebra_center_expansion_check(&v4, &Subset::full(4)).unwrap());

        // V4(a⋆b=a) × Z2: the V4 factor expands to everything
        let z2 = catalog::trivial_star(&catalog::cyclic(2));
        let p = v4.direct_product(&z2);
        let factor = Subset::from_indices(8, &[0, 2, 4, 6]);
        assert!(subalgebra_center_expansion_check(&p.alg, &factor).unwrap());

        // Q8: S = ⟨x⟩ has S𝒵 = S ≠ G and S is not isoclinic to G
        let q8 = catalog::q8_improper();
        let s = q8.subgroup_closure(&Subset::singleton(8, 1));
        assert_eq!(s.card(), 4);
        assert!(subalgebra_center_expansion_check(&q8, &s).unwrap());

        assert!(subalgebra_center_expansion_check(&v4, &Subset::from_indices(4, &[0, 2])).is_ok());
    }
}
