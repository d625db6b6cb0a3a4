//! Growable bit-set over placement cells, with word-parallel overlap tests.

use std::fmt;

const WORD: usize = 64;

/// Occupied cells of a placement (or the numeral cells of a tile).
///
/// Cells beyond `len()` are unoccupied; the set grows on insertion.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Occupancy {
    words: Vec<u64>,
    len: usize,
}

impl Occupancy {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_len(len: usize) -> Self {
        Occupancy {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub fn from_cells<I: IntoIterator<Item = usize>>(cells: I) -> Self {
        let mut occ = Occupancy::new();
        for c in cells {
            occ.insert(c);
        }
        occ
    }

    /// One past the highest cell ever inserted (or the explicit length).
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    fn word(&self, i: usize) -> u64 {
        self.words.get(i).copied().unwrap_or(0)
    }

    pub fn contains(&self, cell: usize) -> bool {
        self.word(cell / WORD) >> (cell % WORD) & 1 == 1
    }

    /// Marks `cell`; returns false if it was already set.
    pub fn insert(&mut self, cell: usize) -> bool {
        let w = cell / WORD;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.len = self.len.max(cell + 1);
        let bit = 1u64 << (cell % WORD);
        let fresh = self.words[w] & bit == 0;
        self.words[w] |= bit;
        fresh
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn min(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn max(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + (WORD - 1 - w.leading_zeros() as usize))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + b)
            })
        })
    }

    /// True iff `self` shifted right by `offset` cells shares no cell with `other`.
    ///
    /// Runs over the words of `self` only, so the cost is `O(|self| / 64)`.
    pub fn disjoint_at(&self, offset: usize, other: &Occupancy) -> bool {
        let base = offset / WORD;
        let sh = offset % WORD;
        for (i, &w) in self.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            if w << sh & other.word(base + i) != 0 {
                return false;
            }
            if sh != 0 && w >> (WORD - sh) & other.word(base + i + 1) != 0 {
                return false;
            }
        }
        true
    }

    /// ORs `self` shifted right by `offset` into `target`.
    pub fn or_into_at(&self, offset: usize, target: &mut Occupancy) {
        let Some(top) = self.max() else { return };
        let end = offset + top + 1;
        let need = end.div_ceil(WORD);
        if target.words.len() < need {
            target.words.resize(need, 0);
        }
        target.len = target.len.max(end);
        let base = offset / WORD;
        let sh = offset % WORD;
        for (i, &w) in self.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            target.words[base + i] |= w << sh;
            if sh != 0 && base + i + 1 < target.words.len() {
                target.words[base + i + 1] |= w >> (WORD - sh);
            }
        }
    }
}

impl fmt::Debug for Occupancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Occupancy {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Occupancy::from_cells(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn min_max_count() {
        let occ = Occupancy::from_cells([3, 64, 130]);
        assert_eq!(occ.min(), Some(3));
        assert_eq!(occ.max(), Some(130));
        assert_eq!(occ.count(), 3);
        assert_eq!(occ.len(), 131);
        assert_eq!(Occupancy::new().min(), None);
    }

    proptest! {
        #[test]
        fn disjoint_matches_sets(
            a in prop::collection::btree_set(0usize..200, 0..20),
            b in prop::collection::btree_set(0usize..200, 0..20),
            off in 0usize..150,
        ) {
            let oa: Occupancy = a.iter().copied().collect();
            let ob: Occupancy = b.iter().copied().collect();
            let shifted: BTreeSet<usize> = a.iter().map(|x| x + off).collect();
            prop_assert_eq!(oa.disjoint_at(off, &ob), shifted.is_disjoint(&b));

            let mut t = ob.clone();
            oa.or_into_at(off, &mut t);
            let union: BTreeSet<usize> = shifted.union(&b).copied().collect();
            prop_assert_eq!(t.iter().collect::<BTreeSet<_>>(), union);
        }
    }
}
