//! Central extensions and the cover / stem-cover conditions. The multiplier
//! is always supplied as an input algebra.

use mlakit::catalog;
use mlakit::cover::{is_cover, is_stem_cover, validate_extension, CentralExtension};
use mlakit::morphism::identity_map;

fn main() {
    // 1 -> Z2 -> Q8(improper) -> V4(trivial) -> 1
    let q8 = catalog::q8_improper();
    let z = q8.ml_center();
    let h = q8.extract_subalgebra(&z).unwrap().alg;
    let q = q8.quotient(&z).unwrap();
    let ext = CentralExtension {
        h,
        k: q8.clone(),
        proj: q.proj_map(),
        g: q.alg,
        incl: vec![0, 2],
    };
    let report = validate_extension(&ext);
    println!("Q8 over V4: valid extension = {}", report.is_valid());
    let z2 = catalog::trivial_star(&catalog::cyclic(2));
    println!("  cover with multiplier Z2: {}", is_cover(&ext, &z2).unwrap());
    println!("  stem cover: {}", is_stem_cover(&ext, &z2).unwrap());
    let z3 = catalog::trivial_star(&catalog::cyclic(3));
    println!("  cover with multiplier Z3: {}", is_cover(&ext, &z3).unwrap());

    // a central direct factor is a cover but never a stem cover
    let v4 = catalog::v4_with_star();
    let p = v4.direct_product(&z2);
    let ext = CentralExtension {
        h: z2.clone(),
        k: p.alg.clone(),
        g: v4,
        incl: vec![p.pair(0, 0), p.pair(0, 1)],
        proj: (0..8).map(|i| p.split(i).0).collect(),
    };
    println!(
        "V4 x Z2 over V4: cover = {}, stem cover = {}",
        is_cover(&ext, &z2).unwrap(),
        is_stem_cover(&ext, &z2).unwrap()
    );

    // a broken extension reports witnesses
    let one = catalog::trivial_star(&catalog::cyclic(1));
    let g = catalog::v4_with_star();
    let bad = CentralExtension {
        h: one,
        k: g.clone(),
        g: g.clone(),
        incl: vec![0],
        proj: {
            let mut p = identity_map(4);
            p[3] = 0;
            p
        },
    };
    let report = validate_extension(&bad);
    println!("tampered projection: valid = {}", report.is_valid());
    for f in &report.failures {
        println!("  {f}");
    }
}
