//! Enumerate every ⋆-structure on a small group and deduplicate up to the
//! group's automorphisms.

use mlakit::catalog;
use mlakit::enumeration::{dedupe_up_to_isomorphism, enumerate_star_structures};

fn main() {
    for (name, group) in [
        ("C4", catalog::cyclic(4)),
        ("V4", catalog::klein_four()),
        ("S3", catalog::symmetric3()),
        ("D4", catalog::dihedral(4)),
        ("Q8", catalog::quaternion(8)),
        ("E8 = Z2^3", catalog::elementary_abelian(2, 3)),
    ] {
        let all = enumerate_star_structures(&group, 8, 1).unwrap();
        let reps = dedupe_up_to_isomorphism(&all);
        println!(
            "{name}: {} structures, {} up to automorphism",
            all.len(),
            reps.len()
        );
        for (i, alg) in reps.iter().enumerate() {
            println!(
                "  rep {i}: |M[G,G]| = {}, |mlZ(G)| = {}, |LZ(G)| = {}, stem = {}",
                alg.m_commutator().card(),
                alg.ml_center().card(),
                alg.lie_center().card(),
                mlakit::is_stem(alg)
            );
        }
    }
}
