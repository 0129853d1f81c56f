//! Decide isoclinism for the standard pairs and print the witnessing
//! `(λ, μ)` maps when one exists.

use mlakit::algebra::MlAlgebra;
use mlakit::catalog;
use mlakit::isoclinism::are_isoclinic;

fn decide(name: &str, g: &MlAlgebra, h: &MlAlgebra) {
    match are_isoclinic(g, h) {
        Some(pair) => {
            println!("{name}: isoclinic");
            println!("  lambda = {:?}", pair.lambda.map_usize());
            println!("  mu     = {:?}", pair.mu.map_usize());
            let checked = pair.certificate.len();
            let ok = pair
                .certificate
                .iter()
                .filter(|q| q.star_ok && q.comm_ok)
                .count();
            println!("  certificate: {ok}/{checked} squares verified");
        }
        None => println!("{name}: NOT isoclinic"),
    }
}

fn main() {
    let v4 = catalog::v4_with_star();
    let a = catalog::z2cubed_with_star();
    let z4 = catalog::z4_trivial();
    let q8 = catalog::q8_improper();

    decide("A ~ V4(a*b=a)", &a, &v4);
    decide("V4(a*b=a) ~ Z4(trivial)", &v4, &z4);
    for d4 in catalog::d4_star_completions() {
        decide("Q8(improper) ~ D4(x*y=y)", &q8, &d4);
    }

    // isomorphism is strictly finer than isoclinism
    let isos = mlakit::morphism::find_isomorphisms(&a, &v4, 1);
    println!("A ≅ V4: {}", if isos.is_empty() { "no" } else { "yes" });

    // a product with a trivial abelian factor stays in the class
    let z2 = catalog::trivial_star(&catalog::cyclic(2));
    let prod = v4.direct_product(&z2).alg;
    decide("V4 ~ V4 x Z2(trivial)", &v4, &prod);
}
