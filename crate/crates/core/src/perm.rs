//! Permutations of `{0, .., n-1}` and their action on bitmask supports.

use rand::seq::SliceRandom;
use rand::Rng;

/// A permutation stored as its image list: `i -> images[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    #[must_use]
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// # Panics
    /// If `images` is not a permutation.
    #[must_use]
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(i < images.len() && !seen[i], "not a permutation: {images:?}");
            seen[i] = true;
        }
        Self(images)
    }

    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.shuffle(rng);
        Self(v)
    }

    /// All permutations in lexicographic order of image lists.
    #[must_use]
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation(prefix.clone()));
                return;
            }
            for i in 0..used.len() {
                if !used[i] {
                    used[i] = true;
                    prefix.push(i);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
        out
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[must_use]
    pub fn images(&self) -> &[usize] {
        &self.0
    }

    #[must_use]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    #[must_use]
    pub fn apply_mask(&self, mask: u32) -> u32 {
        (0..self.0.len())
            .filter(|i| mask >> i & 1 == 1)
            .fold(0, |acc, i| acc | 1 << self.0[i])
    }

    #[must_use]
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Self(inv)
    }

    /// `self` after `other`.
    #[must_use]
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&i| self.0[i]).collect())
    }
}
