//! Bit-packed linear algebra over GF(2).

use std::fmt;

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A vector over GF(2) stored 64 coordinates per word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vector {
    len: usize,
    words: Vec<u64>,
}

impl Gf2Vector {
    #[must_use]
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Vector with ones exactly at `indices`.
    ///
    /// # Panics
    /// If an index is out of range.
    #[must_use]
    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    #[must_use]
    pub fn from_bits(bits: &[bool]) -> Self {
        Self::from_indices(
            bits.len(),
            bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i),
        )
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.len
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[must_use]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        if self.get(i) != value {
            self.flip(i);
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        self.words[i / WORD] ^= 1 << (i % WORD);
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    #[must_use]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// In-place addition (xor).
    ///
    /// # Panics
    /// If the lengths differ.
    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    #[must_use]
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "length mismatch");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }

    /// Indices of the nonzero coordinates in increasing order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * WORD + tz)
            })
        })
    }

    fn first_one(&self) -> Option<usize> {
        self.ones().next()
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        write!(f, "[{s}]")
    }
}

/// A dense matrix over GF(2), one packed vector per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    cols: usize,
    rows: Vec<Gf2Vector>,
}

impl Gf2Matrix {
    #[must_use]
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    #[must_use]
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![Gf2Vector::zeros(cols); rows],
        }
    }

    #[must_use]
    pub fn identity(size: usize) -> Self {
        Self::from_rows(
            size,
            (0..size).map(|i| Gf2Vector::from_indices(size, [i])).collect(),
        )
    }

    /// # Panics
    /// If some row has a length other than `cols`.
    #[must_use]
    pub fn from_rows(cols: usize, rows: Vec<Gf2Vector>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "row length mismatch");
        Self { cols, rows }
    }

    pub fn push_row(&mut self, row: Gf2Vector) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.rows.push(row);
    }

    #[must_use]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[must_use]
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    #[must_use]
    pub fn rows(&self) -> &[Gf2Vector] {
        &self.rows
    }

    #[must_use]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    #[must_use]
    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.ones() {
                t.rows[c].flip(r);
            }
        }
        t
    }

    /// Matrix-vector product `self * v`.
    #[must_use]
    pub fn mul_vec(&self, v: &Gf2Vector) -> Gf2Vector {
        assert_eq!(v.len(), self.cols, "length mismatch");
        Gf2Vector::from_bits(&self.rows.iter().map(|r| r.dot(v)).collect::<Vec<_>>())
    }

    /// Reduced row echelon form with zero rows removed, plus the pivot columns.
    #[must_use]
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(next, found);
            let pivot = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != next && row.get(col) {
                    row.add_assign(&pivot);
                }
            }
            pivots.push(col);
            next += 1;
            if next == rows.len() {
                break;
            }
        }
        rows.truncate(next);
        (Self::from_rows(self.cols, rows), pivots)
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        Echelon::from_rows(self.cols, self.rows.iter().cloned()).rank()
    }

    /// Basis of `{v : self * v = 0}` read off the canonical reduced echelon form,
    /// one vector per free column in increasing column order.
    #[must_use]
    pub fn kernel_basis(&self) -> Vec<Gf2Vector> {
        let (reduced, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|c| !is_pivot[*c])
            .map(|free| {
                let mut v = Gf2Vector::zeros(self.cols);
                v.flip(free);
                for (row, &p) in reduced.rows.iter().zip(&pivots) {
                    if row.get(free) {
                        v.flip(p);
                    }
                }
                v
            })
            .collect()
    }

    /// Whether `v` lies in the row space.
    #[must_use]
    pub fn row_space_contains(&self, v: &Gf2Vector) -> bool {
        Echelon::from_rows(self.cols, self.rows.iter().cloned()).contains(v)
    }
}

/// Incrementally maintained echelon basis, used for rank updates and membership tests.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    basis: Vec<(usize, Gf2Vector)>,
}

impl Echelon {
    #[must_use]
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            basis: Vec::new(),
        }
    }

    pub fn from_rows(cols: usize, rows: impl IntoIterator<Item = Gf2Vector>) -> Self {
        let mut e = Self::new(cols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    fn reduce(&self, mut v: Gf2Vector) -> Gf2Vector {
        for (pivot, row) in &self.basis {
            if v.get(*pivot) {
                v.add_assign(row);
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Gf2Vector) -> bool {
        assert_eq!(v.len(), self.cols, "length mismatch");
        let v = self.reduce(v);
        match v.first_one() {
            Some(p) => {
                for (_, row) in &mut self.basis {
                    if row.get(p) {
                        row.add_assign(&v);
                    }
                }
                self.basis.push((p, v));
                true
            }
            None => false,
        }
    }

    #[must_use]
    pub fn contains(&self, v: &Gf2Vector) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

/// Generators with labels and a matrix of relations among them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSystem {
    labels: Vec<String>,
    relations: Gf2Matrix,
}

impl RelationSystem {
    /// # Panics
    /// If the relation width differs from the number of labels.
    #[must_use]
    pub fn new(labels: Vec<String>, relations: Gf2Matrix) -> Self {
        assert_eq!(labels.len(), relations.cols(), "relation width mismatch");
        Self { labels, relations }
    }

    #[must_use]
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[must_use]
    pub fn relations(&self) -> &Gf2Matrix {
        &self.relations
    }

    #[must_use]
    pub fn generator_count(&self) -> usize {
        self.labels.len()
    }

    #[must_use]
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.relations.rank()
    }

    /// Dimension of the span of the generators modulo the relations.
    #[must_use]
    pub fn quotient_dim(&self) -> usize {
        self.labels.len() - self.rank()
    }

    /// Whether `v` (over the generators) is zero in the quotient.
    #[must_use]
    pub fn is_zero_class(&self, v: &Gf2Vector) -> bool {
        self.relations.row_space_contains(v)
    }

    /// Vector over the generators with ones at the given labels; unknown labels are an error.
    pub fn vector_of<'a>(
        &self,
        labels: impl IntoIterator<Item = &'a str>,
    ) -> Result<Gf2Vector, String> {
        let mut v = Gf2Vector::zeros(self.labels.len());
        for l in labels {
            let i = self.index_of(l).ok_or_else(|| l.to_string())?;
            v.flip(i);
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k_n_incidence(n: usize) -> Gf2Matrix {
        let mut m = Gf2Matrix::new(n);
        for i in 0..n {
            for j in i + 1..n {
                m.push_row(Gf2Vector::from_indices(n, [i, j]));
            }
        }
        m
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
            .collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Gf2Matrix::identity(3).rank(), 3);
        assert_eq!(Gf2Matrix::zeros(2, 4).rank(), 0);
        assert_eq!(k_n_incidence(5).rank(), 4);
    }

    #[test]
    fn kernel_examples() {
        assert!(Gf2Matrix::identity(4).kernel_basis().is_empty());
        assert_eq!(Gf2Matrix::zeros(1, 3).kernel_basis().len(), 3);
    }

    #[test]
    fn k5_cycle_space_matches_brute_force() {
        let boundary = k_n_incidence(5).transpose();
        let basis = boundary.kernel_basis();
        assert_eq!(basis.len(), 6);
        let brute = (0u32..1 << 10)
            .filter(|m| {
                let v = Gf2Vector::from_indices(10, (0..10).filter(|i| m >> i & 1 == 1));
                boundary.mul_vec(&v).is_zero()
            })
            .count();
        assert_eq!(brute, 1 << basis.len());
    }

    #[test]
    fn quotient_examples() {
        let labels = |k: usize| (0..k).map(|i| format!("g{i}")).collect::<Vec<_>>();
        assert_eq!(
            RelationSystem::new(labels(10), Gf2Matrix::new(10)).quotient_dim(),
            10
        );

        let weight4 = subsets(6, 4)
            .into_iter()
            .map(|s| Gf2Vector::from_indices(6, s))
            .collect();
        let sys = RelationSystem::new(labels(6), Gf2Matrix::from_rows(6, weight4));
        assert_eq!(sys.rank(), 5);
        assert_eq!(sys.quotient_dim(), 1);

        let quads = subsets(6, 4);
        let avoiding = |s: usize| {
            Gf2Vector::from_indices(
                15,
                quads
                    .iter()
                    .enumerate()
                    .filter(|(_, q)| !q.contains(&s))
                    .map(|(i, _)| i),
            )
        };
        let mut m = Gf2Matrix::new(15);
        for s in 0..6 {
            for r in s + 1..6 {
                let mut row = avoiding(s);
                row.add_assign(&avoiding(r));
                m.push_row(row);
            }
        }
        let sys = RelationSystem::new(labels(15), m);
        assert_eq!(sys.rank(), 4);
        assert_eq!(sys.quotient_dim(), 11);
    }

    #[test]
    fn kernel_basis_is_in_rref_order() {
        let m = Gf2Matrix::from_rows(
            4,
            vec![
                Gf2Vector::from_bits(&[true, true, false, true]),
                Gf2Vector::from_bits(&[false, false, true, true]),
            ],
        );
        let k = m.kernel_basis();
        assert_eq!(
            k,
            vec![
                Gf2Vector::from_bits(&[true, true, false, false]),
                Gf2Vector::from_bits(&[true, false, true, true]),
            ]
        );
    }

    fn matrix_strategy() -> impl Strategy<Value = Gf2Matrix> {
        (1usize..=20, 1usize..=20).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r).prop_map(
                move |rows| {
                    Gf2Matrix::from_rows(c, rows.iter().map(|b| Gf2Vector::from_bits(b)).collect())
                },
            )
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in matrix_strategy()) {
            prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
        }

        #[test]
        fn kernel_vectors_are_annihilated(m in matrix_strategy()) {
            for v in m.kernel_basis() {
                prop_assert!(m.mul_vec(&v).is_zero());
            }
        }

        #[test]
        fn rank_ignores_row_order(m in matrix_strategy(), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut rows = m.rows().to_vec();
            rows.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let shuffled = Gf2Matrix::from_rows(m.cols(), rows);
            prop_assert_eq!(shuffled.rank(), m.rank());
            prop_assert_eq!(shuffled.kernel_basis(), m.kernel_basis());
        }

        #[test]
        fn appending_relations_never_grows_quotient(m in matrix_strategy()) {
            let labels: Vec<String> = (0..m.cols()).map(|i| i.to_string()).collect();
            let mut prev = m.cols();
            let mut acc = Gf2Matrix::new(m.cols());
            for row in m.rows() {
                acc.push_row(row.clone());
                let q = RelationSystem::new(labels.clone(), acc.clone()).quotient_dim();
                prop_assert!(q <= prev);
                prev = q;
            }
        }

        #[test]
        fn rref_agrees_with_echelon_rank(m in matrix_strategy()) {
            let (reduced, pivots) = m.rref();
            prop_assert_eq!(reduced.row_count(), m.rank());
            prop_assert_eq!(pivots.len(), m.rank());
            for r in m.rows() {
                prop_assert!(m.row_space_contains(r));
            }
        }
    }
}
