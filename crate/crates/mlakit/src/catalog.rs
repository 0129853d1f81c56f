//! Built-in groups of order ≤ 16 and the standard example algebras.
//!
//! Families: cyclic, direct products of cyclics (covers elementary abelian),
//! dihedral, generalized quaternion, and S3 as a permutation group.

use crate::algebra::{GroupTable, MlAlgebra};

/// Cyclic group of order `n`; element `i` is `gⁱ`.
pub fn cyclic(n: usize) -> GroupTable {
    assert!(n >= 1);
    let mul = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    GroupTable::from_mul(mul, None).unwrap()
}

/// Direct product of cyclic groups; index is mixed-radix over `parts`
/// (first part most significant).
pub fn abelian(parts: &[usize]) -> GroupTable {
    let n: usize = parts.iter().product::<usize>().max(1);
    let decode = |mut i: usize| -> Vec<usize> {
        let mut v = vec![0; parts.len()];
        for (k, &p) in parts.iter().enumerate().rev() {
            v[k] = i % p;
            i /= p;
        }
        v
    };
    let encode = |v: &[usize]| -> usize {
        v.iter()
            .zip(parts)
            .fold(0, |acc, (&x, &p)| acc * p + x)
    };
    let mul = (0..n)
        .map(|i| {
            let vi = decode(i);
            (0..n)
                .map(|j| {
                    let vj = decode(j);
                    let sum: Vec<usize> = vi
                        .iter()
                        .zip(&vj)
                        .zip(parts)
                        .map(|((&a, &b), &p)| (a + b) % p)
                        .collect();
                    encode(&sum)
                })
                .collect()
        })
        .collect();
    GroupTable::from_mul(mul, None).unwrap()
}

/// Elementary abelian group of order `p^k`.
pub fn elementary_abelian(p: usize, k: usize) -> GroupTable {
    abelian(&vec![p; k])
}

pub fn klein_four() -> GroupTable {
    elementary_abelian(2, 2)
}

/// Dihedral group of order `2m`: indices `0..m` are rotations `rⁱ`,
/// `m..2m` are reflections `s·rⁱ`.
pub fn dihedral(m: usize) -> GroupTable {
    assert!(m >= 1);
    let n = 2 * m;
    let mul = (0..n)
        .map(|i| {
            let (fi, a) = (i >= m, i % m);
            (0..n)
                .map(|j| {
                    let (fj, b) = (j >= m, j % m);
                    match (fi, fj) {
                        (false, false) => (a + b) % m,
                        (false, true) => m + (m + b - a) % m,
                        (true, false) => m + (a + b) % m,
                        (true, true) => (m + b - a) % m,
                    }
                })
                .collect()
        })
        .collect();
    GroupTable::from_mul(mul, None).unwrap()
}

/// Generalized quaternion group of order `4m` (`m ≥ 2`): indices `0..2m` are
/// `aⁱ`, `2m..4m` are `b·aⁱ`, with `b² = aᵐ` and `b a b⁻¹ = a⁻¹`.
pub fn quaternion(order: usize) -> GroupTable {
    assert!(order >= 8 && order.is_multiple_of(4));
    let m = order / 4;
    let big = 2 * m;
    let n = 4 * m;
    let mul = (0..n)
        .map(|i| {
            let (fi, a) = (i >= big, i % big);
            (0..n)
                .map(|j| {
                    let (fj, b) = (j >= big, j % big);
                    match (fi, fj) {
                        (false, false) => (a + b) % big,
                        (false, true) => big + (big + b - a) % big,
                        (true, false) => big + (a + b) % big,
                        (true, true) => (m + big + b - a) % big,
                    }
                })
                .collect()
        })
        .collect();
    GroupTable::from_mul(mul, None).unwrap()
}

/// S3 on the permutations of `{0,1,2}` in lexicographic order.
pub fn symmetric3() -> GroupTable {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
    let mul = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| index(&[p[q[0]], p[q[1]], p[q[2]]]))
                .collect()
        })
        .collect();
    GroupTable::from_mul(
        mul,
        Some(
            ["e", "(12)", "(01)", "(012)", "(021)", "(02)"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
        ),
    )
    .unwrap()
}

/// `g ⋆ h = 1` on the given group.
pub fn trivial_star(group: &GroupTable) -> MlAlgebra {
    let n = group.order();
    MlAlgebra::from_group_star(group.clone(), vec![0u16; n * n]).unwrap()
}

/// `g ⋆ h = [g,h]` on the given group.
pub fn improper_star(group: &GroupTable) -> MlAlgebra {
    let n = group.order();
    let star = (0..n)
        .flat_map(|g| (0..n).map(move |h| (g, h)))
        .map(|(g, h)| group.comm(g, h) as u16)
        .collect();
    MlAlgebra::from_group_star(group.clone(), star).unwrap()
}

fn with_labels(group: GroupTable, labels: &[&str]) -> GroupTable {
    GroupTable::from_mul(
        group.mul_rows(),
        Some(labels.iter().map(|s| s.to_string()) .collect()),
    )
    .unwrap()
}

/// Klein four group `⟨a,b⟩` with `a ⋆ b = a`; elements `1, a, b, ab`.
pub fn v4_with_star() -> MlAlgebra {
    let group = with_labels(klein_four(), &["1", "a", "b", "ab"]);
    // bimultiplicative extension of a⋆b = a on the abelian group
    let star: Vec<u16> = (0..4)
        .flat_map(|i| (0..4).map(move |j| (i, j)))
        .map(|(i, j): (usize, usize)| {
            let (p, q) = (i & 1, i >> 1);
            let (r, s) = (j & 1, j >> 1);
            ((p * s + q * r) % 2) as u16
        })
        .collect();
    MlAlgebra::from_group_star(group, star).unwrap()
}

/// `A = Z2³ = ⟨x,y,z⟩` with `x⋆y = x`, `x⋆z = 1`, `y⋆z = 1`;
/// elements ordered `1, x, y, xy, z, xz, yz, xyz`.
pub fn z2cubed_with_star() -> MlAlgebra {
    let group = with_labels(
        elementary_abelian(2, 3),
        &["1", "x", "y", "xy", "z", "xz", "yz", "xyz"],
    );
    // the z coordinate pairs trivially; x,y pair through the alternating form
    let star: Vec<u16> = (0..8)
        .flat_map(|i| (0..8).map(move |j| (i, j)))
        .map(|(i, j): (usize, usize)| {
            let (p, q) = (i & 1, (i >> 1) & 1);
            let (r, s) = (j & 1, (j >> 1) & 1);
            ((p * s + q * r) % 2) as u16
        })
        .collect();
    MlAlgebra::from_group_star(group, star).unwrap()
}

/// Q8 with the improper structure; elements `1, x, x², x³, y, yx, yx², yx³`.
pub fn q8_improper() -> MlAlgebra {
    let group = with_labels(
        quaternion(8),
        &["1", "x", "x2", "x3", "y", "yx", "yx2", "yx3"],
    );
    improper_star(&group)
}

/// Z4 with the trivial structure.
pub fn z4_trivial() -> MlAlgebra {
    trivial_star(&with_labels(cyclic(4), &["1", "g", "g2", "g3"]))
}

/// D4 group (order 8) with element labels; `y` is the rotation at index 1,
/// `x` the reflection at index 4.
pub fn d4_labeled() -> GroupTable {
    with_labels(
        dihedral(4),
        &["1", "y", "y2", "y3", "x", "xy", "xy2", "xy3"],
    )
}

/// Every valid completion of the partial structure `x ⋆ y = y` on D4,
/// computed by the completion routine.
pub fn d4_star_completions() -> Vec<MlAlgebra> {
    crate::completion::complete_star(&d4_labeled(), &[(4, 1, 1)])
        .expect("the D4 partial structure must not be contradictory")
}

/// The named fixture library of groups of order ≤ 16.
pub fn library_groups() -> Vec<(String, GroupTable)> {
    let mut out: Vec<(String, GroupTable)> = Vec::new();
    for n in 1..=16 {
        out.push((format!("C{n}"), cyclic(n)));
    }
    out.push(("V4".into(), klein_four()));
    out.push(("E8".into(), elementary_abelian(2, 3)));
    out.push(("E16".into(), elementary_abelian(2, 4)));
    out.push(("E9".into(), elementary_abelian(3, 2)));
    out.push(("C4xC2".into(), abelian(&[4, 2])));
    for m in 3..=8 {
        out.push((format!("D{m}"), dihedral(m)));
    }
    out.push(("Q8".into(), quaternion(8)));
    out.push(("Q16".into(), quaternion(16)));
    out.push(("S3".into(), symmetric3()));
    out
}

/// All isomorphism types of groups of order ≤ 8, by name.
pub fn groups_of_order_le_8() -> Vec<(String, GroupTable)> {
    vec![
        ("C1".into(), cyclic(1)),
        ("C2".into(), cyclic(2)),
        ("C3".into(), cyclic(3)),
        ("C4".into(), cyclic(4)),
        ("V4".into(), klein_four()),
        ("C5".into(), cyclic(5)),
        ("C6".into(), cyclic(6)),
        ("S3".into(), symmetric3()),
        ("C7".into(), cyclic(7)),
        ("C8".into(), cyclic(8)),
        ("C4xC2".into(), abelian(&[4, 2])),
        ("E8".into(), elementary_abelian(2, 3)),
        ("D4".into(), dihedral(4)),
        ("Q8".into(), quaternion(8)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_validate() {
        for (name, g) in library_groups() {
            assert!(g.order() <= 16, "{name}");
            // both standard structures must satisfy all axioms
            trivial_star(&g);
            improper_star(&g);
        }
    }

    #[test]
    fn presentation_relations() {
        let d4 = dihedral(4);
        // x y x = y³ with x = index 4, y = index 1
        assert_eq!(d4.mul(d4.mul(4, 1), 4), 3);
        assert_eq!(d4.element_order(4), 2);
        assert_eq!(d4.element_order(1), 4);

        let q8 = quaternion(8);
        // x² = y², y⁴ = 1, y x y = x
        assert_eq!(q8.mul(1, 1), q8.mul(4, 4));
        assert_eq!(q8.element_order(4), 4);
        assert_eq!(q8.mul(q8.mul(4, 1), 4), 1);
    }

    #[test]
    fn fixture_star_assignments() {
        let v4 = v4_with_star();
        assert_eq!(v4.star(1, 2), 1); // a ⋆ b = a
        let a = z2cubed_with_star();
        assert_eq!(a.star(1, 2), 1); // x ⋆ y = x
        assert_eq!(a.star(1, 4), 0); // x ⋆ z = 1
        assert_eq!(a.star(2, 4), 0); // y ⋆ z = 1
        let d4 = d4_star_completions();
        assert_eq!(d4.len(), 1);
        assert_eq!(d4[0].star(4, 1), 1); // x ⋆ y = y
    }

    #[test]
    fn s3_composition() {
        let s3 = symmetric3();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.element_order(3), 3);
        assert_eq!(s3.element_order(1), 2);
    }
}
