//! Cayley-table groups and finite multiplicative Lie algebras.
//!
//! An algebra is a finite group together with a second binary operation `⋆`
//! subject to the axioms below (conventions: `[g,h] = g h g⁻¹ h⁻¹`,
//! `ᵍh = g h g⁻¹`, identity at index 0):
//!
//! - MLA1: `g ⋆ g = 1`
//! - MLA2: `g ⋆ (h h') = (g ⋆ h) · ʰ(g ⋆ h')`
//! - MLA3: `(g g') ⋆ h = ᵍ(g' ⋆ h) · (g ⋆ h)`
//! - MLA4: `((g⋆h) ⋆ ʰk) · ((h⋆k) ⋆ ᵏg) · ((k⋆g) ⋆ ᵍh) = 1`
//! - MLA5: `ᵏ(g ⋆ h) = ᵏg ⋆ ᵏh`
//!
//! Tables are validated exhaustively on construction; every operation after
//! that point works on immutable, known-good data.

use crate::bitset::Subset;
use thiserror::Error;

/// A single violated axiom with a witness tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    Identity { g: usize },
    RowNotPermutation { g: usize },
    ColNotPermutation { g: usize },
    Associativity { g: usize, h: usize, k: usize },
    InverseMissing { g: usize },
    Mla1 { g: usize },
    Mla2 { g: usize, h: usize, h2: usize },
    Mla3 { g: usize, g2: usize, h: usize },
    Mla4 { g: usize, h: usize, k: usize },
    Mla5 { k: usize, g: usize, h: usize },
}

impl AxiomViolation {
    /// Short axiom name, e.g. `"MLA1"`.
    pub fn axiom(&self) -> &'static str {
        match self {
            AxiomViolation::Identity { .. } => "identity",
            AxiomViolation::RowNotPermutation { .. } => "row-permutation",
            AxiomViolation::ColNotPermutation { .. } => "column-permutation",
            AxiomViolation::Associativity { .. } => "associativity",
            AxiomViolation::InverseMissing { .. } => "inverse",
            AxiomViolation::Mla1 { .. } => "MLA1",
            AxiomViolation::Mla2 { .. } => "MLA2",
            AxiomViolation::Mla3 { .. } => "MLA3",
            AxiomViolation::Mla4 { .. } => "MLA4",
            AxiomViolation::Mla5 { .. } => "MLA5",
        }
    }

    pub fn witness(&self) -> Vec<usize> {
        match *self {
            AxiomViolation::Identity { g }
            | AxiomViolation::RowNotPermutation { g }
            | AxiomViolation::ColNotPermutation { g }
            | AxiomViolation::InverseMissing { g }
            | AxiomViolation::Mla1 { g } => vec![g],
            AxiomViolation::Associativity { g, h, k } | AxiomViolation::Mla4 { g, h, k } => {
                vec![g, h, k]
            }
            AxiomViolation::Mla2 { g, h, h2 } => vec![g, h, h2],
            AxiomViolation::Mla3 { g, g2, h } => vec![g, g2, h],
            AxiomViolation::Mla5 { k, g, h } => vec![k, g, h],
        }
    }

    fn is_group_axiom(&self) -> bool {
        matches!(
            self,
            AxiomViolation::Identity { .. }
                | AxiomViolation::RowNotPermutation { .. }
                | AxiomViolation::ColNotPermutation { .. }
                | AxiomViolation::Associativity { .. }
                | AxiomViolation::InverseMissing { .. }
        )
    }
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} violated at {:?}", self.axiom(), self.witness())
    }
}

fn describe(violations: &[AxiomViolation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error("malformed table: {0}")]
    Shape(String),
    #[error("group axioms violated: {}", describe(.0))]
    Group(Vec<AxiomViolation>),
    #[error("multiplicative Lie axioms violated: {}", describe(.0))]
    Mla(Vec<AxiomViolation>),
}

impl TableError {
    pub fn violations(&self) -> &[AxiomViolation] {
        match self {
            TableError::Shape(_) => &[],
            TableError::Group(v) | TableError::Mla(v) => v,
        }
    }
}

fn flatten(n: usize, rows: &[Vec<usize>], what: &str) -> Result<Vec<u16>, TableError> {
    if rows.len() != n {
        return Err(TableError::Shape(format!(
            "{what} has {} rows, expected {n}",
            rows.len()
        )));
    }
    let mut flat = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(TableError::Shape(format!(
                "{what} row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        for &v in row {
            if v >= n {
                return Err(TableError::Shape(format!(
                    "{what} entry {v} out of range 0..{n}"
                )));
            }
            flat.push(v as u16);
        }
    }
    Ok(flat)
}

/// A finite group given by its multiplication table; index 0 is the identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupTable {
    n: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    labels: Option<Vec<String>>,
}

impl GroupTable {
    pub fn from_mul(mul: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self, TableError> {
        let n = mul.len();
        if n == 0 {
            return Err(TableError::Shape("order must be positive".into()));
        }
        if let Some(ref l) = labels {
            if l.len() != n {
                return Err(TableError::Shape(format!(
                    "labels has {} entries, expected {n}",
                    l.len()
                )));
            }
        }
        let flat = flatten(n, &mul, "mul")?;
        let mut violations = Vec::new();
        group_violations(n, &flat, &mut violations);
        if !violations.is_empty() {
            return Err(TableError::Group(violations));
        }
        let mut inv = vec![0u16; n];
        for g in 0..n {
            inv[g] = (0..n).find(|&h| flat[g * n + h] == 0).unwrap() as u16;
        }
        Ok(GroupTable {
            n,
            mul: flat,
            inv,
            labels,
        })
    }

    /// Builds from an already-verified flat table. Internal constructors
    /// (quotients, products) use this; debug builds re-check.
    pub(crate) fn from_flat_unchecked(n: usize, mul: Vec<u16>, labels: Option<Vec<String>>) -> Self {
        #[cfg(debug_assertions)]
        {
            let mut v = Vec::new();
            group_violations(n, &mul, &mut v);
            debug_assert!(v.is_empty(), "internal group table invalid: {v:?}");
        }
        let mut inv = vec![0u16; n];
        for g in 0..n {
            inv[g] = (0..n).find(|&h| mul[g * n + h] == 0).unwrap() as u16;
        }
        GroupTable {
            n,
            mul,
            inv,
            labels,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mul[g * self.n + h] as usize
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inv[g] as usize
    }

    /// `ᵍh = g·h·g⁻¹`
    #[inline]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    /// `[g,h] = g·h·g⁻¹·h⁻¹`
    #[inline]
    pub fn comm(&self, g: usize, h: usize) -> usize {
        self.mul(self.conj(g, h), self.inv(h))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|g| (g..self.n).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) => l[g].clone(),
            None => g.to_string(),
        }
    }

    pub fn flat_mul(&self) -> &[u16] {
        &self.mul
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|g| (0..self.n).map(|h| self.mul(g, h)).collect())
            .collect()
    }
}

fn group_violations(n: usize, mul: &[u16], out: &mut Vec<AxiomViolation>) {
    if let Some(g) = (0..n).find(|&g| mul[g] as usize != g || mul[g * n] as usize != g) {
        out.push(AxiomViolation::Identity { g });
    }
    let mut seen = vec![false; n];
    'rows: for g in 0..n {
        seen.fill(false);
        for h in 0..n {
            let v = mul[g * n + h] as usize;
            if seen[v] {
                out.push(AxiomViolation::RowNotPermutation { g });
                break 'rows;
            }
            seen[v] = true;
        }
    }
    'cols: for h in 0..n {
        seen.fill(false);
        for g in 0..n {
            let v = mul[g * n + h] as usize;
            if seen[v] {
                out.push(AxiomViolation::ColNotPermutation { g: h });
                break 'cols;
            }
            seen[v] = true;
        }
    }
    'assoc: for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                let gh = mul[g * n + h] as usize;
                let hk = mul[h * n + k] as usize;
                if mul[gh * n + k] != mul[g * n + hk] {
                    out.push(AxiomViolation::Associativity { g, h, k });
                    break 'assoc;
                }
            }
        }
    }
    if let Some(g) = (0..n).find(|&g| !(0..n).any(|h| mul[g * n + h] == 0)) {
        out.push(AxiomViolation::InverseMissing { g });
    }
}

/// A finite multiplicative Lie algebra: a [`GroupTable`] plus a validated
/// `⋆` table. Immutable after construction; safe to share across threads.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MlAlgebra {
    group: GroupTable,
    star: Vec<u16>,
}

impl MlAlgebra {
    pub fn from_tables(
        mul: Vec<Vec<usize>>,
        star: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, TableError> {
        let group = GroupTable::from_mul(mul, labels)?;
        let star = flatten(group.n, &star, "star")?;
        Self::from_group_star(group, star)
    }

    pub fn from_group_star(group: GroupTable, star: Vec<u16>) -> Result<Self, TableError> {
        if star.len() != group.n * group.n {
            return Err(TableError::Shape(format!(
                "star table has {} cells, expected {}",
                star.len(),
                group.n * group.n
            )));
        }
        let mut violations = Vec::new();
        star_violations(&group, &star, &mut violations);
        if !violations.is_empty() {
            return Err(TableError::Mla(violations));
        }
        Ok(MlAlgebra { group, star })
    }

    /// Full validation report for a pair of tables: every violated axiom with
    /// one witness each, group axioms first.
    pub fn validation_report(mul: &[Vec<usize>], star: &[Vec<usize>]) -> Vec<AxiomViolation> {
        let n = mul.len();
        let mut out = Vec::new();
        let flat_mul = match flatten(n, mul, "mul") {
            Ok(f) => f,
            Err(_) => return out,
        };
        group_violations(n, &flat_mul, &mut out);
        if out.iter().any(|v| v.is_group_axiom()) {
            return out;
        }
        let group = GroupTable::from_flat_unchecked(n, flat_mul, None);
        if let Ok(flat_star) = flatten(n, star, "star") {
            star_violations(&group, &flat_star, &mut out);
        }
        out
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.n
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.group.mul(g, h)
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.group.inv(g)
    }

    #[inline]
    pub fn star(&self, g: usize, h: usize) -> usize {
        self.star[g * self.group.n + h] as usize
    }

    #[inline]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.group.conj(g, h)
    }

    #[inline]
    pub fn comm(&self, g: usize, h: usize) -> usize {
        self.group.comm(g, h)
    }

    /// `ᴹ[g,h] = (g⋆h)·[g,h]`
    #[inline]
    pub fn m_comm_elem(&self, g: usize, h: usize) -> usize {
        self.mul(self.star(g, h), self.comm(g, h))
    }

    pub fn element_order(&self, g: usize) -> usize {
        self.group.element_order(g)
    }

    pub fn label(&self, g: usize) -> String {
        self.group.label(g)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.group.labels()
    }

    pub fn flat_star(&self) -> &[u16] {
        &self.star
    }

    pub fn star_rows(&self) -> Vec<Vec<usize>> {
        let n = self.group.n;
        (0..n)
            .map(|g| (0..n).map(|h| self.star(g, h)).collect())
            .collect()
    }

    // ----- structural subsets -----

    /// Smallest subgroup containing `seed`; the empty seed closes to `{0}`.
    pub fn subgroup_closure(&self, seed: &Subset) -> Subset {
        self.group_closure(seed, false)
    }

    /// Smallest subgroup of `group` containing `seed`, ignoring `⋆`.
    fn group_closure(&self, seed: &Subset, with_star: bool) -> Subset {
        let n = self.group.n;
        let mut s = Subset::empty(n);
        s.insert(0);
        let mut queue: Vec<usize> = vec![0];
        for g in seed.iter() {
            if s.insert(g) {
                queue.push(g);
            }
        }
        while let Some(g) = queue.pop() {
            let i = self.inv(g);
            if s.insert(i) {
                queue.push(i);
            }
            let members: Vec<usize> = s.iter().collect();
            for &h in &members {
                for v in [self.mul(g, h), self.mul(h, g)] {
                    if s.insert(v) {
                        queue.push(v);
                    }
                }
                if with_star {
                    for v in [self.star(g, h), self.star(h, g)] {
                        if s.insert(v) {
                            queue.push(v);
                        }
                    }
                }
            }
        }
        s
    }

    /// Smallest subalgebra (subgroup closed under `⋆`) containing `seed`.
    pub fn subalgebra_closure(&self, seed: &Subset) -> Subset {
        self.group_closure(seed, true)
    }

    /// Smallest ideal containing `seed`: fixpoint of subgroup closure,
    /// conjugation closure, and absorption `G ⋆ S ⊆ S`.
    pub fn ideal_closure(&self, seed: &Subset) -> Subset {
        let n = self.group.n;
        let mut s = self.subgroup_closure(seed);
        loop {
            let mut next = s.clone();
            for h in s.iter() {
                for g in 0..n {
                    next.insert(self.conj(g, h));
                    next.insert(self.star(g, h));
                    next.insert(self.star(h, g));
                }
            }
            if next == s {
                return s;
            }
            s = self.subgroup_closure(&next);
        }
    }

    /// `[G,G]`: subgroup generated by all group commutators.
    pub fn derived_subgroup(&self) -> Subset {
        let n = self.group.n;
        let mut seed = Subset::empty(n);
        for g in 0..n {
            for h in 0..n {
                seed.insert(self.comm(g, h));
            }
        }
        self.subgroup_closure(&seed)
    }

    /// `G ⋆ G`: subgroup generated by all `⋆` values.
    pub fn star_subgroup(&self) -> Subset {
        let n = self.group.n;
        let mut seed = Subset::empty(n);
        for g in 0..n {
            for h in 0..n {
                seed.insert(self.star(g, h));
            }
        }
        self.subgroup_closure(&seed)
    }

    /// The multiplicative commutator `[G,G](G⋆G)`, always an ideal.
    pub fn m_commutator(&self) -> Subset {
        let mut seed = self.derived_subgroup();
        seed.union_with(&self.star_subgroup());
        let s = self.subgroup_closure(&seed);
        assert!(
            self.is_ideal(&s),
            "multiplicative commutator is not an ideal; table corrupt"
        );
        s
    }

    /// Group center `Z(G)`.
    pub fn center(&self) -> Subset {
        let n = self.group.n;
        (0..n)
            .filter(|&g| (0..n).all(|h| self.mul(g, h) == self.mul(h, g)))
            .fold(Subset::empty(n), |mut s, g| {
                s.insert(g);
                s
            })
    }

    /// Lie center `LZ(G) = {g : g⋆h = 1 = h⋆g for all h}`.
    pub fn lie_center(&self) -> Subset {
        let n = self.group.n;
        (0..n)
            .filter(|&g| (0..n).all(|h| self.star(g, h) == 0 && self.star(h, g) == 0))
            .fold(Subset::empty(n), |mut s, g| {
                s.insert(g);
                s
            })
    }

    /// The multiplicative Lie center `𝒵(G) = Z(G) ∩ LZ(G)`, always an ideal.
    pub fn ml_center(&self) -> Subset {
        let s = self.center().intersection(&self.lie_center());
        assert!(
            self.is_ideal(&s),
            "multiplicative Lie center is not an ideal; table corrupt"
        );
        s
    }

    pub fn is_subgroup(&self, s: &Subset) -> bool {
        if !s.contains(0) {
            return false;
        }
        for g in s.iter() {
            if !s.contains(self.inv(g)) {
                return false;
            }
            for h in s.iter() {
                if !s.contains(self.mul(g, h)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_normal(&self, s: &Subset) -> bool {
        let n = self.group.n;
        s.iter()
            .all(|h| (0..n).all(|g| s.contains(self.conj(g, h))))
    }

    /// Subgroup closed under `⋆` within itself.
    pub fn is_subalgebra(&self, s: &Subset) -> bool {
        self.is_subgroup(s)
            && s.iter()
                .all(|g| s.iter().all(|h| s.contains(self.star(g, h))))
    }

    /// Normal subgroup with `G ⋆ S ⊆ S` (and `S ⋆ G ⊆ S`, checked too).
    pub fn is_ideal(&self, s: &Subset) -> bool {
        let n = self.group.n;
        self.is_subgroup(s)
            && self.is_normal(s)
            && s.iter().all(|h| {
                (0..n).all(|g| s.contains(self.star(g, h)) && s.contains(self.star(h, g)))
            })
    }

    /// True iff the group is abelian and `⋆` is identically trivial.
    pub fn is_abelian_trivial(&self) -> bool {
        let n = self.group.n;
        self.group.is_abelian() && (0..n).all(|g| (0..n).all(|h| self.star(g, h) == 0))
    }

    /// All subgroups, via closures of generator subsets of size ≤ 3 plus the
    /// full set (complete for orders ≤ 16).
    pub fn subgroups(&self) -> Vec<Subset> {
        self.enumerate_closed(|s| self.subgroup_closure(s))
    }

    /// All subalgebras, same generator-subset scheme.
    pub fn subalgebras(&self) -> Vec<Subset> {
        self.enumerate_closed(|s| self.subalgebra_closure(s))
    }

    /// All ideals.
    pub fn ideals(&self) -> Vec<Subset> {
        self.subgroups()
            .into_iter()
            .filter(|s| self.is_ideal(s))
            .collect()
    }

    fn enumerate_closed(&self, close: impl Fn(&Subset) -> Subset) -> Vec<Subset> {
        let n = self.group.n;
        let mut found = std::collections::BTreeSet::new();
        found.insert(close(&Subset::empty(n)));
        found.insert(Subset::full(n));
        for a in 0..n {
            found.insert(close(&Subset::singleton(n, a)));
            for b in a + 1..n {
                found.insert(close(&Subset::from_indices(n, &[a, b])));
                for c in b + 1..n {
                    found.insert(close(&Subset::from_indices(n, &[a, b, c])));
                }
            }
        }
        found.into_iter().collect()
    }

    // ----- derived algebras -----

    /// Quotient by an ideal, with the projection map. Cosets are indexed by
    /// ascending least representative, identity coset first.
    pub fn quotient(&self, ideal: &Subset) -> Result<Quotient, NotAnIdeal> {
        if !self.is_ideal(ideal) {
            return Err(NotAnIdeal);
        }
        let n = self.group.n;
        let mut proj = vec![u16::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if proj[g] == u16::MAX {
                let idx = reps.len() as u16;
                reps.push(g as u16);
                for a in ideal.iter() {
                    proj[self.mul(g, a)] = idx;
                }
            }
        }
        let q = reps.len();
        let mut qmul = vec![0u16; q * q];
        let mut qstar = vec![0u16; q * q];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                qmul[i * q + j] = proj[self.mul(a as usize, b as usize)];
                qstar[i * q + j] = proj[self.star(a as usize, b as usize)];
            }
        }
        let group = GroupTable::from_flat_unchecked(q, qmul, None);
        let alg = MlAlgebra::from_group_star(group, qstar)
            .expect("quotient by an ideal must satisfy the axioms");
        Ok(Quotient { alg, proj, reps })
    }

    /// Componentwise product algebra; pair `(g,h)` lives at index `g·|H| + h`.
    pub fn direct_product(&self, other: &MlAlgebra) -> Product {
        let (ng, nh) = (self.order(), other.order());
        let n = ng * nh;
        let mut mul = vec![0u16; n * n];
        let mut star = vec![0u16; n * n];
        for g1 in 0..ng {
            for h1 in 0..nh {
                let a = g1 * nh + h1;
                for g2 in 0..ng {
                    for h2 in 0..nh {
                        let b = g2 * nh + h2;
                        mul[a * n + b] = (self.mul(g1, g2) * nh + other.mul(h1, h2)) as u16;
                        star[a * n + b] = (self.star(g1, g2) * nh + other.star(h1, h2)) as u16;
                    }
                }
            }
        }
        let group = GroupTable::from_flat_unchecked(n, mul, None);
        let alg = MlAlgebra::from_group_star(group, star)
            .expect("product of valid algebras must satisfy the axioms");
        Product {
            alg,
            right_order: nh,
        }
    }

    /// Reindexes a subalgebra as a standalone algebra.
    pub fn extract_subalgebra(&self, members: &Subset) -> Result<SubAlgebra, NotASubalgebra> {
        if !self.is_subalgebra(members) {
            return Err(NotASubalgebra);
        }
        let to_parent: Vec<u16> = members.iter().map(|g| g as u16).collect();
        let k = to_parent.len();
        let mut from_parent = vec![u16::MAX; self.order()];
        for (i, &g) in to_parent.iter().enumerate() {
            from_parent[g as usize] = i as u16;
        }
        let mut mul = vec![0u16; k * k];
        let mut star = vec![0u16; k * k];
        for i in 0..k {
            for j in 0..k {
                let (a, b) = (to_parent[i] as usize, to_parent[j] as usize);
                mul[i * k + j] = from_parent[self.mul(a, b)];
                star[i * k + j] = from_parent[self.star(a, b)];
            }
        }
        let group = GroupTable::from_flat_unchecked(k, mul, None);
        let alg = MlAlgebra::from_group_star(group, star)
            .expect("subalgebra tables must satisfy the axioms");
        Ok(SubAlgebra {
            alg,
            to_parent,
            from_parent,
        })
    }
}

fn star_violations(group: &GroupTable, star: &[u16], out: &mut Vec<AxiomViolation>) {
    let n = group.n;
    let st = |g: usize, h: usize| star[g * n + h] as usize;
    if let Some(g) = (0..n).find(|&g| st(g, g) != 0) {
        out.push(AxiomViolation::Mla1 { g });
    }
    'mla2: for g in 0..n {
        for h in 0..n {
            for h2 in 0..n {
                if st(g, group.mul(h, h2)) != group.mul(st(g, h), group.conj(h, st(g, h2))) {
                    out.push(AxiomViolation::Mla2 { g, h, h2 });
                    break 'mla2;
                }
            }
        }
    }
    'mla3: for g in 0..n {
        for g2 in 0..n {
            for h in 0..n {
                if st(group.mul(g, g2), h) != group.mul(group.conj(g, st(g2, h)), st(g, h)) {
                    out.push(AxiomViolation::Mla3 { g, g2, h });
                    break 'mla3;
                }
            }
        }
    }
    'mla4: for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                let a = st(st(g, h), group.conj(h, k));
                let b = st(st(h, k), group.conj(k, g));
                let c = st(st(k, g), group.conj(g, h));
                if group.mul(group.mul(a, b), c) != 0 {
                    out.push(AxiomViolation::Mla4 { g, h, k });
                    break 'mla4;
                }
            }
        }
    }
    'mla5: for k in 0..n {
        for g in 0..n {
            for h in 0..n {
                if group.conj(k, st(g, h)) != st(group.conj(k, g), group.conj(k, h)) {
                    out.push(AxiomViolation::Mla5 { k, g, h });
                    break 'mla5;
                }
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("subset is not an ideal")]
pub struct NotAnIdeal;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("subset is not a subalgebra")]
pub struct NotASubalgebra;

/// A quotient algebra together with the projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub alg: MlAlgebra,
    /// parent element -> coset index
    pub proj: Vec<u16>,
    /// coset index -> least parent representative
    pub reps: Vec<u16>,
}

impl Quotient {
    pub fn project(&self, g: usize) -> usize {
        self.proj[g] as usize
    }

    pub fn rep(&self, coset: usize) -> usize {
        self.reps[coset] as usize
    }

    pub fn proj_map(&self) -> Vec<usize> {
        self.proj.iter().map(|&x| x as usize).collect()
    }
}

/// A direct product with its index pairing.
#[derive(Clone, Debug)]
pub struct Product {
    pub alg: MlAlgebra,
    right_order: usize,
}

impl Product {
    pub fn pair(&self, g: usize, h: usize) -> usize {
        g * self.right_order + h
    }

    pub fn split(&self, i: usize) -> (usize, usize) {
        (i / self.right_order, i % self.right_order)
    }
}

/// A subalgebra reindexed as a standalone algebra.
#[derive(Clone, Debug)]
pub struct SubAlgebra {
    pub alg: MlAlgebra,
    pub to_parent: Vec<u16>,
    from_parent: Vec<u16>,
}

impl SubAlgebra {
    pub fn parent_index(&self, sub: usize) -> usize {
        self.to_parent[sub] as usize
    }

    pub fn sub_index(&self, parent: usize) -> Option<usize> {
        match self.from_parent[parent] {
            u16::MAX => None,
            i => Some(i as usize),
        }
    }
}
