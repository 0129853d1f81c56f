//! Compute the structural invariants of the standard example algebras:
//! the group center, Lie center, multiplicative Lie center, derived
//! subgroup, ⋆-subgroup, and the multiplicative commutator.

use mlakit::algebra::MlAlgebra;
use mlakit::catalog;
use mlakit::Subset;

fn show(name: &str, alg: &MlAlgebra) {
    let members = |s: &Subset| -> String {
        let names: Vec<String> = s.iter().map(|g| alg.label(g)).collect();
        format!("{{{}}}", names.join(", "))
    };
    println!("{name} (order {})", alg.order());
    println!("  Z(G)    = {}", members(&alg.center()));
    println!("  LZ(G)   = {}", members(&alg.lie_center()));
    println!("  mlZ(G)  = {}", members(&alg.ml_center()));
    println!("  [G,G]   = {}", members(&alg.derived_subgroup()));
    println!("  G*G     = {}", members(&alg.star_subgroup()));
    println!("  M[G,G]  = {}", members(&alg.m_commutator()));
    println!("  stem    = {}", mlakit::is_stem(alg));
}

fn main() {
    show("V4 with a*b=a", &catalog::v4_with_star());
    show("A = Z2^3 with x*y=x", &catalog::z2cubed_with_star());
    show("Z4 trivial", &catalog::z4_trivial());
    show("Q8 improper", &catalog::q8_improper());
    for completion in catalog::d4_star_completions() {
        show("D4 with x*y=y (completed)", &completion);
    }
}
