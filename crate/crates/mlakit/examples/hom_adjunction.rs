//! Hom-set machinery: the bijection between Hom(A, Ã) and Hom(A/M[A,A], Ã)
//! for abelian-trivial targets, and the naturality square of the adjunction
//! between abelianization and the trivial-structure embedding.

use mlakit::catalog;
use mlakit::constructions::{adjunction_naturality_check, hom_correspondence_check};
use mlakit::morphism::{enumerate_homomorphisms, identity_map};

fn main() {
    let v4 = catalog::v4_with_star();
    let q8 = catalog::q8_improper();
    let z2 = catalog::trivial_star(&catalog::cyclic(2));
    let z4 = catalog::z4_trivial();

    for (name, a, t) in [
        ("Hom(V4(a*b=a), Z2)", &v4, &z2),
        ("Hom(Q8 improper, Z4)", &q8, &z4),
    ] {
        let direct = enumerate_homomorphisms(a, t).len();
        let q = a.quotient(&a.m_commutator()).unwrap();
        let factored = enumerate_homomorphisms(&q.alg, t).len();
        println!(
            "{name}: {direct} maps, {factored} through the abelianization, bijective: {}",
            hom_correspondence_check(a, t).unwrap()
        );
    }

    // naturality: F ⊣ I, square over (M, M̃, f, A, Ã, g)
    let id2 = identity_map(2);
    let ok = adjunction_naturality_check(&v4, &v4, &identity_map(4), &z2, &z2, &id2).unwrap();
    println!("naturality (V4, V4, id, Z2, Z2, id): {ok}");

    // a non-identity f: V4 -> Q8 is any hom; take one from the enumeration
    let homs = enumerate_homomorphisms(&v4, &q8);
    let f: Vec<usize> = homs[homs.len() - 1].iter().map(|&x| x as usize).collect();
    let ok = adjunction_naturality_check(&q8, &v4, &f, &z4, &z2, &[0, 1, 0, 1]).unwrap();
    println!("naturality (Q8, V4, f, Z4, Z2, g): {ok}");
}
