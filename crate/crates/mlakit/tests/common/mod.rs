#![allow(dead_code)] // each test target uses a different slice of this module

//! Shared test support: an independent brute-force enumerator for star
//! tables and the pooled structure catalog.
//!
//! The enumerator here deliberately avoids the library's propagation engine:
//! it assigns cells one by one and only *checks* axiom instances that are
//! fully determined, so it serves as an oracle for the propagating search.

use mlakit::algebra::MlAlgebra;
use mlakit::catalog;
use mlakit::enumeration::{dedupe_up_to_isomorphism, enumerate_star_structures};

pub struct NaiveGroup {
    n: usize,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl NaiveGroup {
    pub fn new(mul: Vec<Vec<usize>>) -> Self {
        let n = mul.len();
        let inv = (0..n)
            .map(|g| (0..n).find(|&h| mul[g][h] == 0).unwrap())
            .collect();
        NaiveGroup { n, mul, inv }
    }

    fn conj(&self, g: usize, h: usize) -> usize {
        self.mul[self.mul[g][h]][self.inv[g]]
    }

    /// All valid full tables, flattened row-major, in lexicographic order.
    pub fn enumerate_stars(&self) -> Vec<Vec<u16>> {
        let mut star: Vec<Vec<Option<usize>>> = vec![vec![None; self.n]; self.n];
        let mut out = Vec::new();
        self.assign(0, &mut star, &mut out);
        out.sort_unstable();
        out
    }

    fn assign(&self, cell: usize, star: &mut Vec<Vec<Option<usize>>>, out: &mut Vec<Vec<u16>>) {
        if cell == self.n * self.n {
            if self.full_check(star) {
                out.push(
                    star.iter()
                        .flat_map(|row| row.iter().map(|c| c.unwrap() as u16))
                        .collect(),
                );
            }
            return;
        }
        let (g, h) = (cell / self.n, cell % self.n);
        for v in 0..self.n {
            star[g][h] = Some(v);
            if self.determined_ok(g, h, star) {
                self.assign(cell + 1, star, out);
            }
        }
        star[g][h] = None;
    }

    /// Checks every MLA1–MLA3 instance touching (g,h) whose cells are all
    /// assigned.
    fn determined_ok(&self, g: usize, h: usize, star: &[Vec<Option<usize>>]) -> bool {
        if g == h && star[g][h] != Some(0) {
            return false;
        }
        // MLA2 instances (a; b, c) involve cells (a, bc), (a, b), (a, c):
        // the cell (g,h) appears only in row a = g
        for b in 0..self.n {
            for c in 0..self.n {
                let (v1, v2, v3) = (star[g][self.mul[b][c]], star[g][b], star[g][c]);
                if let (Some(v1), Some(v2), Some(v3)) = (v1, v2, v3) {
                    if v1 != self.mul[v2][self.conj(b, v3)] {
                        return false;
                    }
                }
            }
        }
        // MLA3 instances (a, b; h) involve cells (ab, h), (b, h), (a, h):
        // all in column h
        for a in 0..self.n {
            for b in 0..self.n {
                let (v1, v2, v3) = (star[self.mul[a][b]][h], star[b][h], star[a][h]);
                if let (Some(v1), Some(v2), Some(v3)) = (v1, v2, v3) {
                    if v1 != self.mul[self.conj(a, v2)][v3] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn full_check(&self, star: &[Vec<Option<usize>>]) -> bool {
        let st = |g: usize, h: usize| star[g][h].unwrap();
        for g in 0..self.n {
            if st(g, g) != 0 {
                return false;
            }
        }
        for g in 0..self.n {
            for h in 0..self.n {
                for k in 0..self.n {
                    // MLA2 and MLA3
                    if st(g, self.mul[h][k]) != self.mul[st(g, h)][self.conj(h, st(g, k))] {
                        return false;
                    }
                    if st(self.mul[g][h], k) != self.mul[self.conj(g, st(h, k))][st(g, k)] {
                        return false;
                    }
                    // MLA4
                    let a = st(st(g, h), self.conj(h, k));
                    let b = st(st(h, k), self.conj(k, g));
                    let c = st(st(k, g), self.conj(g, h));
                    if self.mul[self.mul[a][b]][c] != 0 {
                        return false;
                    }
                    // MLA5
                    if self.conj(k, st(g, h)) != st(self.conj(k, g), self.conj(k, h)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Deduplicated representatives of every ⋆-structure on every group of
/// order ≤ 8, labeled `"{group}#{index}"`.
pub fn pooled_catalog_le_8() -> Vec<(String, MlAlgebra)> {
    let mut out = Vec::new();
    for (name, group) in catalog::groups_of_order_le_8() {
        let all = enumerate_star_structures(&group, 8, 1).unwrap();
        for (i, alg) in dedupe_up_to_isomorphism(&all).into_iter().enumerate() {
            out.push((format!("{name}#{i}"), alg));
        }
    }
    out
}

/// Abelian groups with trivial star up to order `max`, the standard
/// Hom-target family.
pub fn abelian_trivial_targets(max: usize) -> Vec<(String, MlAlgebra)> {
    let mut out = Vec::new();
    for n in 1..=max.min(4) {
        out.push((format!("C{n}t"), catalog::trivial_star(&catalog::cyclic(n))));
    }
    if max >= 4 {
        out.push(("V4t".into(), catalog::trivial_star(&catalog::klein_four())));
    }
    out
}
