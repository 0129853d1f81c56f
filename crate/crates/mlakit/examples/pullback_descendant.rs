//! The two constructions relating isoclinic algebras: the pullback K inside
//! G × H whose central-slice quotients recover G and H, and the common
//! descendant K̃ embedding both.

use mlakit::catalog;
use mlakit::constructions::{common_descendant, isoclinism_pullback};
use mlakit::isoclinism::are_isoclinic;

fn main() {
    let v4 = catalog::v4_with_star();
    let a = catalog::z2cubed_with_star();
    let pair = are_isoclinic(&v4, &a).expect("V4 ~ A");

    let pb = isoclinism_pullback(&v4, &a, &pair, 256).unwrap();
    println!(
        "pullback K of (V4, A): order {} = |G|·|mlZ(H)| = {}·{}",
        pb.k.alg.order(),
        v4.order(),
        a.ml_center().card()
    );
    println!(
        "  ZG slice: {:?}, ZH slice: {:?}",
        pb.zg.to_vec(),
        pb.zh.to_vec()
    );
    println!("  K/ZH ≅ G, K/ZG ≅ H, G ~ K ~ H: all verified on construction");

    let d = common_descendant(&v4, &a, &pair, 256).unwrap();
    println!(
        "descendant K̃: order {}, T order {}, |L| = {}",
        d.ktilde.alg.order(),
        d.t.alg.order(),
        d.l.card()
    );
    println!(
        "  embedded copies: |K̃_G| = {}, |K̃_H| = {}",
        d.kg.card(),
        d.kh.card()
    );
    println!("  M[T,T] ∩ L = 1 and K̃_G·mlZ(K̃) = K̃ = K̃_H·mlZ(K̃): verified");

    // diagonal case: G = H = Q8 improper
    let q8 = catalog::q8_improper();
    let pair = are_isoclinic(&q8, &q8).unwrap();
    let d = common_descendant(&q8, &q8, &pair, 256).unwrap();
    println!(
        "descendant of (Q8, Q8): K order {}, K̃ order {}",
        d.pullback.k.alg.order(),
        d.ktilde.alg.order()
    );
}
