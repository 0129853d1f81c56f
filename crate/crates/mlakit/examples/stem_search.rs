//! Stems: minimal-order members of an isoclinism class with
//! `mlZ(G) ⊆ M[G,G]`, and the center isomorphism between stems.

use mlakit::catalog;
use mlakit::isoclinism::{find_stem_in_class, is_stem, stems_have_isomorphic_centers};

fn main() {
    // the class of V4(a*b=a) contains the order-8 algebra A; V4 is the stem
    let class = vec![
        catalog::z2cubed_with_star(),
        catalog::v4_with_star(),
    ];
    let idx = find_stem_in_class(&class).unwrap();
    println!(
        "class {{A, V4}}: stem is member {idx} of order {}",
        class[idx].order()
    );

    // abelian algebras with trivial star are all isoclinic; the stem is 1
    let chain: Vec<_> = (1..=6)
        .map(|n| catalog::trivial_star(&catalog::cyclic(n)))
        .collect();
    let idx = find_stem_in_class(&chain).unwrap();
    println!(
        "trivial abelian chain C1..C6: stem is C{}",
        class.len().min(chain[idx].order())
    );

    // adding a trivial central factor never produces a new stem
    let q8 = catalog::q8_improper();
    let z2 = catalog::trivial_star(&catalog::cyclic(2));
    let fat = q8.direct_product(&z2).alg;
    println!(
        "Q8 improper is stem: {}; Q8 x Z2 is stem: {}",
        is_stem(&q8),
        is_stem(&fat)
    );
    let idx = find_stem_in_class(&[fat, q8.clone()]).unwrap();
    println!("class {{Q8 x Z2, Q8}}: stem is member {idx}");

    // two stems of one class have isomorphic centers
    println!(
        "stem centers isomorphic (Q8, Q8): {}",
        stems_have_isomorphic_centers(&q8, &q8).unwrap()
    );
}
