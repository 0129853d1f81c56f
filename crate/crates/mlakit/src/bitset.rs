//! Element subsets as bitsets.
//!
//! All structural subsets (subgroups, ideals, centers) are sets of element
//! indices of one algebra; closure computations are fixpoint loops over these.

/// A subset of `{0, .., n-1}` backed by 64-bit blocks.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Subset {
    n: usize,
    blocks: Vec<u64>,
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        Subset {
            n,
            blocks: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Subset::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn singleton(n: usize, i: usize) -> Self {
        let mut s = Subset::empty(n);
        s.insert(i);
        s
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Self {
        let mut s = Subset::empty(n);
        for &i in indices {
            s.insert(i);
        }
        s
    }

    /// Size of the ambient index range.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.n);
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    /// Inserts `i`; returns true if it was not already present.
    pub fn insert(&mut self, i: usize) -> bool {
        debug_assert!(i < self.n);
        let b = &mut self.blocks[i / 64];
        let mask = 1u64 << (i % 64);
        let fresh = *b & mask == 0;
        *b |= mask;
        fresh
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.n);
        self.blocks[i / 64] &= !(1u64 << (i % 64));
    }

    pub fn card(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &Subset) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset {
            n: self.n,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for Subset {
    /// Collects indices; the universe is sized to the largest index + 1.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let v: Vec<usize> = iter.into_iter().collect();
        let n = v.iter().max().map_or(0, |m| m + 1);
        Subset::from_indices(n, &v)
    }
}
