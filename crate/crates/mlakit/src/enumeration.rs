//! Exhaustive enumeration of `⋆`-structures on a group.
//!
//! The search assigns cells in row-major order and propagates MLA1–MLA3 and
//! MLA5 after every assignment; MLA4 is only checked, on fully determined
//! triples during the search and exhaustively on completed tables.

use crate::algebra::{GroupTable, MlAlgebra};
use crate::morphism::group_automorphisms;
use thiserror::Error;

pub const DEFAULT_ENUM_CAP: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("group order {order} exceeds the enumeration cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
}

const UNSET: u16 = u16::MAX;

/// One node of the backtracking search: a partially assigned `⋆` table that
/// is consistent with MLA1–3/MLA5 propagation from the cells set so far.
pub(crate) struct StarSearch<'g> {
    group: &'g GroupTable,
    n: usize,
    conj: Vec<u16>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Conflict {
    pub cell: (usize, usize),
    pub have: usize,
    pub want: usize,
}

impl<'g> StarSearch<'g> {
    pub fn new(group: &'g GroupTable) -> Self {
        let n = group.order();
        let conj = (0..n)
            .flat_map(|g| (0..n).map(move |h| (g, h)))
            .map(|(g, h)| group.conj(g, h) as u16)
            .collect();
        StarSearch { group, n, conj }
    }

    fn conj(&self, g: usize, h: usize) -> usize {
        self.conj[g * self.n + h] as usize
    }

    /// Fresh table with MLA1 on the diagonal and trivial first row/column
    /// (forced by MLA2/MLA3 with identity arguments).
    pub fn root(&self) -> Vec<u16> {
        let n = self.n;
        let mut star = vec![UNSET; n * n];
        for g in 0..n {
            star[g * n + g] = 0;
            star[g * n] = 0;
            star[g] = 0;
        }
        star
    }

    fn set(star: &mut [u16], n: usize, g: usize, h: usize, v: usize) -> Result<bool, Conflict> {
        let cell = &mut star[g * n + h];
        if *cell == UNSET {
            *cell = v as u16;
            Ok(true)
        } else if *cell as usize == v {
            Ok(false)
        } else {
            Err(Conflict {
                cell: (g, h),
                have: *cell as usize,
                want: v,
            })
        }
    }

    /// Round-based propagation to a fixpoint.
    pub fn propagate(&self, star: &mut [u16]) -> Result<(), Conflict> {
        let n = self.n;
        let grp = self.group;
        loop {
            let mut changed = false;
            // MLA2: star(g, h·h2) = star(g,h) · ʰstar(g,h2)
            for g in 0..n {
                for h in 0..n {
                    for h2 in 0..n {
                        let c1 = star[g * n + grp.mul(h, h2)];
                        let c2 = star[g * n + h];
                        let c3 = star[g * n + h2];
                        match (c1, c2, c3) {
                            (_, b, c) if b != UNSET && c != UNSET => {
                                let v = grp.mul(b as usize, self.conj(h, c as usize));
                                changed |= Self::set(star, n, g, grp.mul(h, h2), v)?;
                            }
                            (a, b, _) if a != UNSET && b != UNSET => {
                                // c = ʰ⁻¹(b⁻¹ · a)
                                let v = self.conj(
                                    grp.inv(h),
                                    grp.mul(grp.inv(b as usize), a as usize),
                                );
                                changed |= Self::set(star, n, g, h2, v)?;
                            }
                            (a, _, c) if a != UNSET && c != UNSET => {
                                // b = a · (ʰc)⁻¹
                                let v = grp.mul(a as usize, grp.inv(self.conj(h, c as usize)));
                                changed |= Self::set(star, n, g, h, v)?;
                            }
                            _ => {}
                        }
                    }
                }
            }
            // MLA3: star(g·g2, h) = ᵍstar(g2,h) · star(g,h)
            for g in 0..n {
                for g2 in 0..n {
                    for h in 0..n {
                        let c1 = star[grp.mul(g, g2) * n + h];
                        let c2 = star[g2 * n + h];
                        let c3 = star[g * n + h];
                        match (c1, c2, c3) {
                            (_, b, c) if b != UNSET && c != UNSET => {
                                let v = grp.mul(self.conj(g, b as usize), c as usize);
                                changed |= Self::set(star, n, grp.mul(g, g2), h, v)?;
                            }
                            (a, b, _) if a != UNSET && b != UNSET => {
                                // c = (ᵍb)⁻¹ · a
                                let v = grp.mul(grp.inv(self.conj(g, b as usize)), a as usize);
                                changed |= Self::set(star, n, g, h, v)?;
                            }
                            (a, _, c) if a != UNSET && c != UNSET => {
                                // b = ᵍ⁻¹(a · c⁻¹)
                                let v = self.conj(
                                    grp.inv(g),
                                    grp.mul(a as usize, grp.inv(c as usize)),
                                );
                                changed |= Self::set(star, n, g2, h, v)?;
                            }
                            _ => {}
                        }
                    }
                }
            }
            // MLA5: star(ᵏg, ᵏh) = ᵏstar(g,h)
            for k in 0..n {
                for g in 0..n {
                    for h in 0..n {
                        let v = star[g * n + h];
                        if v != UNSET {
                            let (cg, ch) = (self.conj(k, g), self.conj(k, h));
                            let cv = self.conj(k, v as usize);
                            changed |= Self::set(star, n, cg, ch, cv)?;
                        }
                    }
                }
            }
            if !changed {
                return Ok(());
            }
        }
    }

    /// MLA4 on every triple whose six participating cells are determined.
    fn mla4_determined_ok(&self, star: &[u16]) -> bool {
        let n = self.n;
        let grp = self.group;
        for g in 0..n {
            for h in 0..n {
                let s1 = star[g * n + h];
                if s1 == UNSET {
                    continue;
                }
                for k in 0..n {
                    let (s2, s3) = (star[h * n + k], star[k * n + g]);
                    if s2 == UNSET || s3 == UNSET {
                        continue;
                    }
                    let a = star[s1 as usize * n + self.conj(h, k)];
                    let b = star[s2 as usize * n + self.conj(k, g)];
                    let c = star[s3 as usize * n + self.conj(g, h)];
                    if a == UNSET || b == UNSET || c == UNSET {
                        continue;
                    }
                    if grp.mul(grp.mul(a as usize, b as usize), c as usize) != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn first_unset(&self, star: &[u16]) -> Option<usize> {
        star.iter().position(|&c| c == UNSET)
    }

    /// Depth-first over cells in row-major order, values ascending.
    pub fn search(&self, star: Vec<u16>, emit: &mut impl FnMut(Vec<u16>)) {
        let mut star = star;
        if self.propagate(&mut star).is_err() || !self.mla4_determined_ok(&star) {
            return;
        }
        match self.first_unset(&star) {
            None => {
                if MlAlgebra::from_group_star(self.group.clone(), star.clone()).is_ok() {
                    emit(star);
                }
            }
            Some(cell) => {
                for v in 0..self.n {
                    let mut next = star.clone();
                    next[cell] = v as u16;
                    self.search(next, emit);
                }
            }
        }
    }
}

/// All `⋆` tables on `group` satisfying MLA1–5, sorted lexicographically by
/// flattened table. `workers` splits the top branch across threads; the
/// result is identical for every worker count.
pub fn enumerate_star_structures(
    group: &GroupTable,
    cap: usize,
    workers: usize,
) -> Result<Vec<MlAlgebra>, EnumError> {
    let n = group.order();
    if n > cap {
        return Err(EnumError::OrderCapExceeded { order: n, cap });
    }
    let search = StarSearch::new(group);
    let mut root = search.root();
    let mut tables: Vec<Vec<u16>> = Vec::new();
    if search.propagate(&mut root).is_err() {
        return Ok(Vec::new());
    }
    match search.first_unset(&root) {
        None => search.search(root, &mut |t| tables.push(t)),
        Some(cell) => {
            let branches: Vec<Vec<u16>> = (0..n)
                .map(|v| {
                    let mut b = root.clone();
                    b[cell] = v as u16;
                    b
                })
                .collect();
            let workers = workers.max(1).min(n.max(1));
            if workers == 1 {
                for b in branches {
                    search.search(b, &mut |t| tables.push(t));
                }
            } else {
                let buckets: Vec<Vec<Vec<u16>>> = std::thread::scope(|scope| {
                    let handles: Vec<_> = (0..workers)
                        .map(|w| {
                            let mine: Vec<Vec<u16>> = branches
                                .iter()
                                .skip(w)
                                .step_by(workers)
                                .cloned()
                                .collect();
                            let search = &search;
                            scope.spawn(move || {
                                let mut found = Vec::new();
                                for b in mine {
                                    search.search(b, &mut |t| found.push(t));
                                }
                                found
                            })
                        })
                        .collect();
                    handles.into_iter().map(|h| h.join().unwrap()).collect()
                });
                tables = buckets.into_iter().flatten().collect();
            }
        }
    }
    tables.sort_unstable();
    Ok(tables
        .into_iter()
        .map(|t| {
            MlAlgebra::from_group_star(group.clone(), t)
                .expect("search emits only validated tables")
        })
        .collect())
}

/// Canonical-form deduplication under the group's automorphisms: each
/// structure is relabeled by every automorphism and the lexicographically
/// least flattened table is kept, one representative per class, sorted.
pub fn dedupe_up_to_isomorphism(structures: &[MlAlgebra]) -> Vec<MlAlgebra> {
    let Some(first) = structures.first() else {
        return Vec::new();
    };
    let group = first.group();
    for s in structures {
        assert_eq!(
            s.group().flat_mul(),
            group.flat_mul(),
            "all structures must share one group"
        );
    }
    let autos = group_automorphisms(group);
    let mut canon: std::collections::BTreeSet<Vec<u16>> = std::collections::BTreeSet::new();
    for s in structures {
        canon.insert(canonical_star(s, &autos));
    }
    canon
        .into_iter()
        .map(|t| {
            MlAlgebra::from_group_star(group.clone(), t)
                .expect("automorphism relabeling preserves the axioms")
        })
        .collect()
}

/// Least relabeled flattened star table over the given automorphisms.
pub fn canonical_star(s: &MlAlgebra, autos: &[Vec<u16>]) -> Vec<u16> {
    let n = s.order();
    let mut best: Option<Vec<u16>> = None;
    for sigma in autos {
        let mut inv_sigma = vec![0usize; n];
        for (i, &v) in sigma.iter().enumerate() {
            inv_sigma[v as usize] = i;
        }
        let mut t = vec![0u16; n * n];
        for g in 0..n {
            for h in 0..n {
                t[g * n + h] = sigma[s.star(inv_sigma[g], inv_sigma[h])];
            }
        }
        if best.as_ref().is_none_or(|b| t < *b) {
            best = Some(t);
        }
    }
    best.unwrap()
}

/// Per-structure invariant summary used in classification reports.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct StructureSummary {
    pub center: usize,
    pub derived: usize,
    pub is_stem: bool,
    pub lie_center: usize,
    pub m_commutator: usize,
    pub ml_center: usize,
    pub star_subgroup: usize,
}

impl StructureSummary {
    pub fn of(alg: &MlAlgebra) -> Self {
        StructureSummary {
            center: alg.center().card(),
            derived: alg.derived_subgroup().card(),
            is_stem: crate::isoclinism::is_stem(alg),
            lie_center: alg.lie_center().card(),
            m_commutator: alg.m_commutator().card(),
            ml_center: alg.ml_center().card(),
            star_subgroup: alg.star_subgroup().card(),
        }
    }
}

/// Classification of all `⋆`-structures on one group.
#[derive(Clone, Debug)]
pub struct Classification {
    pub group_order: usize,
    /// structures found before deduplication
    pub total_structures: usize,
    /// canonical representatives, sorted by flattened table
    pub representatives: Vec<MlAlgebra>,
    pub summaries: Vec<StructureSummary>,
    /// isoclinism classes as index lists into `representatives`
    pub classes: Vec<Vec<usize>>,
}

/// Enumerate, dedupe, and partition by isoclinism.
pub fn classify_structures(
    group: &GroupTable,
    cap: usize,
    workers: usize,
) -> Result<Classification, EnumError> {
    let all = enumerate_star_structures(group, cap, workers)?;
    let reps = dedupe_up_to_isomorphism(&all);
    let classes = crate::isoclinism::partition_by_isoclinism(&reps);
    let summaries = reps.iter().map(StructureSummary::of).collect();
    Ok(Classification {
        group_order: group.order(),
        total_structures: all.len(),
        representatives: reps,
        summaries,
        classes,
    })
}
