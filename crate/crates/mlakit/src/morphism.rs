//! Maps between algebras: homomorphism checking, backtracking isomorphism
//! search over generator images, and exhaustive homomorphism enumeration.

use crate::algebra::{GroupTable, MlAlgebra};
use std::ops::ControlFlow;

/// A total map between two algebras' element sets with computed flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub map: Vec<u16>,
    pub is_hom: bool,
    /// Witness pair when `is_hom` is false.
    pub failure: Option<HomFailure>,
    pub is_injective: bool,
    pub is_surjective: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomFailure {
    Mul { g: usize, h: usize },
    Star { g: usize, h: usize },
    Range { g: usize },
}

impl Morphism {
    pub fn is_isomorphism(&self) -> bool {
        self.is_hom && self.is_injective && self.is_surjective
    }

    pub fn apply(&self, g: usize) -> usize {
        self.map[g] as usize
    }

    pub fn map_usize(&self) -> Vec<usize> {
        self.map.iter().map(|&x| x as usize).collect()
    }
}

/// Computes all flags of a candidate map `f : G -> H`.
pub fn check_homomorphism(map: &[usize], g: &MlAlgebra, h: &MlAlgebra) -> Morphism {
    assert_eq!(map.len(), g.order(), "map must be total on the source");
    let nh = h.order();
    if let Some(bad) = (0..map.len()).find(|&x| map[x] >= nh) {
        return Morphism {
            map: map.iter().map(|&x| x.min(u16::MAX as usize) as u16).collect(),
            is_hom: false,
            failure: Some(HomFailure::Range { g: bad }),
            is_injective: false,
            is_surjective: false,
        };
    }
    let mut failure = None;
    'outer: for a in 0..g.order() {
        for b in 0..g.order() {
            if map[g.mul(a, b)] != h.mul(map[a], map[b]) {
                failure = Some(HomFailure::Mul { g: a, h: b });
                break 'outer;
            }
            if map[g.star(a, b)] != h.star(map[a], map[b]) {
                failure = Some(HomFailure::Star { g: a, h: b });
                break 'outer;
            }
        }
    }
    let mut hit = vec![false; nh];
    let mut injective = true;
    for &v in map {
        if hit[v] {
            injective = false;
        }
        hit[v] = true;
    }
    Morphism {
        map: map.iter().map(|&x| x as u16).collect(),
        is_hom: failure.is_none(),
        failure,
        is_injective: injective,
        is_surjective: hit.iter().all(|&b| b),
    }
}

pub fn identity_map(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// A greedy generating sequence with a closure schedule: each level adds one
/// generator and lists the products that first reach each new element.
struct GenPlan {
    levels: Vec<Level>,
}

struct Level {
    gen: usize,
    /// (element, a, b) with element = a·b; a and b are known earlier.
    steps: Vec<(usize, usize, usize)>,
    /// sorted members of the subgroup after this level
    members: Vec<usize>,
}

fn build_plan(g: &MlAlgebra) -> GenPlan {
    let n = g.order();
    let mut known = vec![false; n];
    known[0] = true;
    let mut members = vec![0usize];
    let mut levels = Vec::new();
    while let Some(gen) = (0..n).find(|&x| !known[x]) {
        let mut steps = Vec::new();
        known[gen] = true;
        members.push(gen);
        // products with gen reach it from the identity: gen = 0·gen
        steps.push((gen, 0, gen));
        let mut queue = vec![gen];
        while let Some(e) = queue.pop() {
            let snapshot = members.clone();
            for &x in &snapshot {
                for (p, a, b) in [(g.mul(e, x), e, x), (g.mul(x, e), x, e)] {
                    if !known[p] {
                        known[p] = true;
                        members.push(p);
                        steps.push((p, a, b));
                        queue.push(p);
                    }
                }
            }
        }
        members.sort_unstable();
        levels.push(Level {
            gen,
            steps,
            members: members.clone(),
        });
    }
    GenPlan { levels }
}

struct IsoSearch<'a> {
    g: &'a MlAlgebra,
    h: &'a MlAlgebra,
    plan: GenPlan,
    ord_g: Vec<usize>,
    ord_h: Vec<usize>,
    respect_star: bool,
    homs_only: bool,
    img: Vec<u16>,
    used: Vec<u16>, // target -> source preimage, MAX if free
}

const UNSET: u16 = u16::MAX;

impl<'a> IsoSearch<'a> {
    fn new(g: &'a MlAlgebra, h: &'a MlAlgebra, respect_star: bool, homs_only: bool) -> Self {
        IsoSearch {
            plan: build_plan(g),
            ord_g: (0..g.order()).map(|x| g.element_order(x)).collect(),
            ord_h: (0..h.order()).map(|x| h.element_order(x)).collect(),
            g,
            h,
            respect_star,
            homs_only,
            img: vec![UNSET; g.order()],
            used: vec![UNSET; h.order()],
        }
    }

    fn run(&mut self, f: &mut dyn FnMut(&[u16]) -> ControlFlow<()>) {
        self.img[0] = 0;
        if !self.homs_only {
            self.used[0] = 0;
        }
        let _ = self.descend(0, f);
    }

    fn descend(&mut self, level: usize, f: &mut dyn FnMut(&[u16]) -> ControlFlow<()>) -> ControlFlow<()> {
        if level == self.plan.levels.len() {
            return f(&self.img);
        }
        let gen = self.plan.levels[level].gen;
        for cand in 0..self.h.order() {
            let admissible = if self.homs_only {
                self.ord_g[gen].is_multiple_of(self.ord_h[cand])
            } else {
                self.used[cand] == UNSET && self.ord_h[cand] == self.ord_g[gen]
            };
            if !admissible {
                continue;
            }
            let mut touched = Vec::new();
            if self.extend(level, gen, cand, &mut touched)
                && self.consistent(level)
                && self.descend(level + 1, f).is_break()
            {
                self.undo(&touched);
                return ControlFlow::Break(());
            }
            self.undo(&touched);
        }
        ControlFlow::Continue(())
    }

    fn set(&mut self, e: usize, v: usize, touched: &mut Vec<usize>) -> bool {
        if self.img[e] != UNSET {
            return self.img[e] as usize == v;
        }
        if !self.homs_only {
            if self.used[v] != UNSET {
                return false;
            }
            self.used[v] = e as u16;
        }
        self.img[e] = v as u16;
        touched.push(e);
        true
    }

    fn extend(&mut self, level: usize, gen: usize, cand: usize, touched: &mut Vec<usize>) -> bool {
        if !self.set(gen, cand, touched) {
            return false;
        }
        let steps = std::mem::take(&mut self.plan.levels[level].steps);
        let mut ok = true;
        for &(e, a, b) in &steps {
            let v = self.h.mul(self.img[a] as usize, self.img[b] as usize);
            if !self.set(e, v, touched) {
                ok = false;
                break;
            }
        }
        self.plan.levels[level].steps = steps;
        ok
    }

    /// Checks both operations on all pairs inside the current subgroup whose
    /// results are already mapped.
    fn consistent(&self, level: usize) -> bool {
        let members = &self.plan.levels[level].members;
        for &x in members {
            let ix = self.img[x] as usize;
            for &y in members {
                let iy = self.img[y] as usize;
                let p = self.g.mul(x, y);
                if self.img[p] != UNSET && self.h.mul(ix, iy) != self.img[p] as usize {
                    return false;
                }
                if self.respect_star {
                    let s = self.g.star(x, y);
                    if self.img[s] != UNSET && self.h.star(ix, iy) != self.img[s] as usize {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, touched: &[usize]) {
        for &e in touched {
            if !self.homs_only {
                self.used[self.img[e] as usize] = UNSET;
            }
            self.img[e] = UNSET;
        }
    }
}

/// Visits every isomorphism `G -> H` (both operations when `respect_star`),
/// generator images in increasing index order. `f` may stop the search.
pub fn for_each_isomorphism(
    g: &MlAlgebra,
    h: &MlAlgebra,
    respect_star: bool,
    mut f: impl FnMut(&[u16]) -> ControlFlow<()>,
) {
    if g.order() != h.order() {
        return;
    }
    let mut search = IsoSearch::new(g, h, respect_star, false);
    let n = g.order();
    search.run(&mut |img| {
        // totality and injectivity hold by construction; verify the tables
        let mut ok = true;
        'verify: for a in 0..n {
            for b in 0..n {
                let (ia, ib) = (img[a] as usize, img[b] as usize);
                if h.mul(ia, ib) != img[g.mul(a, b)] as usize {
                    ok = false;
                    break 'verify;
                }
                if respect_star && h.star(ia, ib) != img[g.star(a, b)] as usize {
                    ok = false;
                    break 'verify;
                }
            }
        }
        if ok {
            f(img)
        } else {
            ControlFlow::Continue(())
        }
    });
}

/// Up to `limit` MLA isomorphisms, lexicographically sorted by map vector;
/// empty iff the algebras are not isomorphic.
pub fn find_isomorphisms(g: &MlAlgebra, h: &MlAlgebra, limit: usize) -> Vec<Morphism> {
    let mut maps: Vec<Vec<usize>> = Vec::new();
    for_each_isomorphism(g, h, true, |img| {
        maps.push(img.iter().map(|&x| x as usize).collect());
        if maps.len() >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    maps.sort_unstable();
    maps.iter().map(|m| check_homomorphism(m, g, h)).collect()
}

/// All automorphisms of a bare group (the `⋆` tables are ignored).
pub fn group_automorphisms(group: &GroupTable) -> Vec<Vec<u16>> {
    let alg = crate::catalog::trivial_star(group);
    let mut out = Vec::new();
    for_each_isomorphism(&alg, &alg, false, |img| {
        out.push(img.to_vec());
        ControlFlow::Continue(())
    });
    out.sort_unstable();
    out
}

/// Every MLA homomorphism `G -> H`, lexicographically sorted by map vector.
pub fn enumerate_homomorphisms(g: &MlAlgebra, h: &MlAlgebra) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut search = IsoSearch::new(g, h, true, true);
    search.run(&mut |img| {
        let map: Vec<usize> = img.iter().map(|&x| x as usize).collect();
        if check_homomorphism(&map, g, h).is_hom {
            out.push(img.to_vec());
        }
        ControlFlow::Continue(())
    });
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn identity_and_constant_maps_are_homs() {
        let v4 = catalog::v4_with_star();
        let m = check_homomorphism(&identity_map(4), &v4, &v4);
        assert!(m.is_hom && m.is_injective && m.is_surjective);

        let q8 = catalog::q8_improper();
        let constant = vec![0usize; 4];
        let m = check_homomorphism(&constant, &v4, &q8);
        assert!(m.is_hom && !m.is_injective && !m.is_surjective);
    }

    #[test]
    fn star_preservation_failure_has_witness() {
        let v4s = catalog::v4_with_star();
        let v4t = catalog::trivial_star(&catalog::klein_four());
        let m = check_homomorphism(&identity_map(4), &v4s, &v4t);
        assert!(!m.is_hom);
        // a ⋆ b = a maps to a, but the target star gives 1
        assert_eq!(m.failure, Some(HomFailure::Star { g: 1, h: 2 }));
    }

    #[test]
    fn isomorphism_search_basics() {
        let v4 = catalog::v4_with_star();
        let isos = find_isomorphisms(&v4, &v4, usize::MAX);
        assert!(isos.iter().any(|m| m.map_usize() == identity_map(4)));
        // star automorphisms must fix a, leaving only b -> b and b -> ab
        assert_eq!(isos.len(), 2);
        for m in &isos {
            assert!(m.is_isomorphism());
        }

        let a = catalog::z2cubed_with_star();
        assert!(find_isomorphisms(&a, &v4, usize::MAX).is_empty());

        let z4 = catalog::z4_trivial();
        let v4t = catalog::trivial_star(&catalog::klein_four());
        assert!(find_isomorphisms(&z4, &v4t, usize::MAX).is_empty());
    }

    #[test]
    fn group_automorphism_counts() {
        assert_eq!(group_automorphisms(&catalog::klein_four()).len(), 6);
        assert_eq!(group_automorphisms(&catalog::cyclic(4)).len(), 2);
        assert_eq!(group_automorphisms(&catalog::symmetric3()).len(), 6);
        assert_eq!(group_automorphisms(&catalog::quaternion(8)).len(), 24);
        assert_eq!(group_automorphisms(&catalog::elementary_abelian(2, 3)).len(), 168);
    }

    #[test]
    fn hom_enumeration_counts() {
        // Hom(V4(a⋆b=a), Z2 trivial): the star forces a -> 0, leaving b free
        let v4 = catalog::v4_with_star();
        let z2 = catalog::trivial_star(&catalog::cyclic(2));
        assert_eq!(enumerate_homomorphisms(&v4, &z2).len(), 2);

        // ignoring ⋆, V4 -> Z2 has 4 group homs; the trivial-star pair sees all
        let v4t = catalog::trivial_star(&catalog::klein_four());
        assert_eq!(enumerate_homomorphisms(&v4t, &z2).len(), 4);

        // Hom(Q8 improper, Z4 trivial) factors through Q8/^M ≅ V4
        let q8 = catalog::q8_improper();
        let z4 = catalog::z4_trivial();
        assert_eq!(enumerate_homomorphisms(&q8, &z4).len(), 4);
    }

    #[test]
    fn search_respects_limit_and_order() {
        let v4t = catalog::trivial_star(&catalog::klein_four());
        let all = find_isomorphisms(&v4t, &v4t, usize::MAX);
        assert_eq!(all.len(), 6);
        let some = find_isomorphisms(&v4t, &v4t, 2);
        assert_eq!(some.len(), 2);
        // deterministic lexicographic order
        let maps: Vec<Vec<usize>> = all.iter().map(|m| m.map_usize()).collect();
        let mut sorted = maps.clone();
        sorted.sort();
        assert_eq!(maps, sorted);
    }
}
