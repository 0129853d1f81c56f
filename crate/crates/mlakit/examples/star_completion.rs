//! Extend a ⋆ given only on generator pairs to full tables, the way the
//! worked examples specify structures ("a⋆b = a").

use mlakit::catalog;
use mlakit::completion::complete_star;

fn main() {
    // V4: a⋆b = a extends uniquely
    let v4 = catalog::klein_four();
    let out = complete_star(&v4, &[(1, 2, 1)]).unwrap();
    println!("V4 with a*b=a: {} completion(s)", out.len());

    // Z2^3: three generator pairs extend uniquely
    let e8 = catalog::elementary_abelian(2, 3);
    let out = complete_star(&e8, &[(1, 2, 1), (1, 4, 0), (2, 4, 0)]).unwrap();
    println!("Z2^3 with x*y=x, x*z=1, y*z=1: {} completion(s)", out.len());

    // D4: x⋆y = y extends uniquely; print the resulting invariants
    let d4 = catalog::dihedral(4);
    let out = complete_star(&d4, &[(4, 1, 1)]).unwrap();
    println!("D4 with x*y=y: {} completion(s)", out.len());
    for alg in &out {
        println!(
            "  |G*G| = {}, |M[G,G]| = {}, |mlZ| = {}",
            alg.star_subgroup().card(),
            alg.m_commutator().card(),
            alg.ml_center().card()
        );
    }

    // a contradictory seed fails loudly
    match complete_star(&v4, &[(1, 1, 2)]) {
        Err(e) => println!("seed a*a=b: {e}"),
        Ok(_) => unreachable!(),
    }

    // no seeds at all enumerates every structure
    let all = complete_star(&v4, &[]).unwrap();
    println!("V4 unconstrained: {} completions", all.len());
}
