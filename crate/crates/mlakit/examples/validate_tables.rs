//! Validate Cayley-table pairs against the group and MLA axioms, and see
//! what a violation report looks like.

use mlakit::algebra::MlAlgebra;
use mlakit::catalog;

fn main() {
    // a valid algebra: Klein four group with a ⋆ b = a
    let v4 = catalog::v4_with_star();
    println!(
        "V4 with a*b=a: order {}, abelian-trivial: {}",
        v4.order(),
        v4.is_abelian_trivial()
    );

    // break MLA1 on purpose: a ⋆ a = b
    let mut star = v4.star_rows();
    star[1][1] = 2;
    let report = MlAlgebra::validation_report(&v4.group().mul_rows(), &star);
    println!("tampered table violations:");
    for v in &report {
        println!("  {v}");
    }

    // break the group itself: constant multiplication row
    let mul = vec![vec![0, 1], vec![1, 1]];
    let star = vec![vec![0, 0], vec![0, 0]];
    let report = MlAlgebra::validation_report(&mul, &star);
    println!("broken group violations:");
    for v in &report {
        println!("  {v}");
    }

    // the improper structure g ⋆ h = [g,h] always validates
    for (name, group) in [
        ("S3", catalog::symmetric3()),
        ("D4", catalog::dihedral(4)),
        ("Q16", catalog::quaternion(16)),
    ] {
        let alg = catalog::improper_star(&group);
        println!("{name} improper structure: valid, order {}", alg.order());
    }
}
