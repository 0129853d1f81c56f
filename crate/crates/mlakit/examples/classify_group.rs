//! Full classification pipeline: enumerate, deduplicate, and partition the
//! ⋆-structures on one group into isoclinism classes.

use mlakit::catalog;
use mlakit::enumeration::classify_structures;

fn main() {
    for (name, group) in [
        ("Z4", catalog::cyclic(4)),
        ("V4", catalog::klein_four()),
        ("S3", catalog::symmetric3()),
        ("Q8", catalog::quaternion(8)),
    ] {
        let c = classify_structures(&group, 8, 1).unwrap();
        println!(
            "{name}: {} structures, {} representatives, {} classes",
            c.total_structures,
            c.representatives.len(),
            c.classes.len()
        );
        for (ci, members) in c.classes.iter().enumerate() {
            print!("  class {ci}:");
            for &m in members {
                let s = &c.summaries[m];
                print!(
                    " [#{m} |M|={} |mlZ|={} stem={}]",
                    s.m_commutator, s.ml_center, s.is_stem
                );
            }
            println!();
        }
    }
}
