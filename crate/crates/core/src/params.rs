//! Spaces of parameters attached to admissible polytopes, boundary divisors of
//! the moduli space of stable curves, and the divisor dictionaries for n = 5, 6.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::chamber::Chamber;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::polytope::{SigmaLabel, Support};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ParamKind {
    /// The open space `F_m` of generic configurations.
    F(usize),
    /// `CP^1` minus three points.
    Cp1A,
    Cp1,
    Cp1xCp1A,
    /// The compactification of `F_5`, homeomorphic to `M_{0,5}`.
    F5Bar,
    /// An open dense piece of the universal space of parameters for `n` points.
    OpenUniversal(usize),
    Point,
}

impl ParamKind {
    #[must_use]
    pub fn real_dim(self) -> usize {
        match self {
            Self::F(m) | Self::OpenUniversal(m) => 2 * (m - 3),
            Self::Cp1A | Self::Cp1 => 2,
            Self::Cp1xCp1A | Self::F5Bar => 4,
            Self::Point => 0,
        }
    }
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::F(m) => write!(f, "F{m}"),
            Self::Cp1A => f.write_str("CP1A"),
            Self::Cp1 => f.write_str("CP1"),
            Self::Cp1xCp1A => f.write_str("CP1xCP1A"),
            Self::F5Bar => f.write_str("F5bar"),
            Self::OpenUniversal(m) => write!(f, "open(U{m})"),
            Self::Point => f.write_str("point"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ParamClass {
    pub kind: ParamKind,
    pub real_dim: usize,
}

impl From<ParamKind> for ParamClass {
    fn from(kind: ParamKind) -> Self {
        Self {
            kind,
            real_dim: kind.real_dim(),
        }
    }
}

fn unclassified(label: &SigmaLabel, n: usize) -> Error {
    Error::Unclassified {
        label: label.to_string(),
        n,
    }
}

/// The space of parameters `F_sigma` of the strata over an admissible polytope.
pub fn classify_space(label: &SigmaLabel, n: usize) -> Result<ParamClass> {
    use ParamKind::{Cp1A, Point, F};
    let shape = label.shape();
    let kind = match (n, label) {
        (5 | 6, SigmaLabel::Delta) => F(n),
        (5, SigmaLabel::O(_)) => Cp1A,
        (6, SigmaLabel::O(_)) => F(5),
        (5, SigmaLabel::K(_)) if shape == [2] => Cp1A,
        (6, SigmaLabel::K(_)) if shape == [2] => F(5),
        (6, SigmaLabel::K(_)) if shape == [3] || shape == [2, 2] => Cp1A,
        (5 | 6, _) => Point,
        _ => return Err(unclassified(label, n)),
    };
    Ok(kind.into())
}

/// The virtual space of parameters `F~_sigma` in the chart `M_12`.
///
/// Facets `x_i = 1` and slices are only known to be positive-dimensional and
/// are reported as unclassified.
pub fn classify_virtual(label: &SigmaLabel, n: usize) -> Result<ParamClass> {
    use ParamKind::{Cp1, Cp1A, Cp1xCp1A, F5Bar, OpenUniversal, Point, F};
    let shape = label.shape();
    let kind = match (n, label) {
        (5 | 6, SigmaLabel::Delta) => F(n),
        (5 | 6, SigmaLabel::O(_)) => OpenUniversal(n),
        (5, SigmaLabel::K(_)) => match shape.as_slice() {
            [2] => Cp1A,
            [3] => Cp1,
            [2, 2] => Point,
            _ => return Err(unclassified(label, n)),
        },
        (6, SigmaLabel::K(_)) => match shape.as_slice() {
            [2] => F(5),
            [3] => Cp1xCp1A,
            [4] => F5Bar,
            [2, 3] => Cp1,
            [2, 2] => Cp1A,
            [2, 2, 2] => Point,
            _ => return Err(unclassified(label, n)),
        },
        _ => return Err(unclassified(label, n)),
    };
    Ok(kind.into())
}

/// A boundary divisor `D_I` of `M_{0,n}`, stored as the side of `{I, I^c}` containing 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Divisor {
    n: usize,
    set: Support,
}

impl Divisor {
    pub fn new(n: usize, elements: &[usize]) -> Result<Self> {
        let s = Support::from_elements(elements);
        if elements.iter().any(|&e| e == 0 || e > n) || s.len() != elements.len() {
            return Err(Error::BadLabel(format!("D{elements:?}")));
        }
        if !(2..=n - 2).contains(&s.len()) {
            return Err(Error::BadLabel(format!("D{elements:?} for n = {n}")));
        }
        let set = if s.contains(1) { s } else { s.complement(n) };
        Ok(Self { n, set })
    }

    #[must_use]
    pub fn set(self) -> Support {
        self.set
    }

    #[must_use]
    pub fn n(self) -> usize {
        self.n
    }

    /// Whether the divisor separates `{a, b}` from `{c, d}`.
    #[must_use]
    pub fn separates(self, a: usize, b: usize, c: usize, d: usize) -> bool {
        let s = self.set;
        (s.contains(a) && s.contains(b) && !s.contains(c) && !s.contains(d))
            || (!s.contains(a) && !s.contains(b) && s.contains(c) && s.contains(d))
    }

    #[must_use]
    pub fn permuted(self, perm: &Permutation) -> Self {
        Self::new(self.n, &self.set.permuted(perm).elements()).expect("size preserved")
    }
}

impl PartialOrd for Divisor {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Divisor {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.set.len(), self.set).cmp(&(other.set.len(), other.set))
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{{{}}}", self.set)
    }
}

impl Serialize for Divisor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All boundary divisors of `M_{0,n}`, sorted by size then elements.
#[must_use]
pub fn divisors(n: usize) -> Vec<Divisor> {
    let set: BTreeSet<Divisor> = (1u32..1 << n)
        .filter(|m| (2..=n - 2).contains(&(m.count_ones() as usize)))
        .map(|m| Divisor::new(n, &Support(m).elements()).expect("valid size"))
        .collect();
    set.into_iter().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DictionaryEntry {
    pub divisor: Divisor,
    pub image: Vec<SigmaLabel>,
}

fn k(elements: &[usize]) -> SigmaLabel {
    SigmaLabel::single(elements)
}

/// A triple divisor, the head of its image, and the pairs completing the head.
type TripleRow = ([usize; 3], [usize; 3], [[usize; 2]; 3]);

fn entry(n: usize, d: &[usize], image: Vec<SigmaLabel>) -> DictionaryEntry {
    DictionaryEntry {
        divisor: Divisor::new(n, d).expect("tabulated divisor"),
        image,
    }
}

/// A three-element head `J` together with `J` paired with each pair of its complement.
fn head_with_pairs(n: usize, head: &[usize], pairs: [[usize; 2]; 3]) -> Vec<SigmaLabel> {
    let j = Support::from_elements(head);
    debug_assert!(pairs
        .iter()
        .all(|p| Support::from_elements(p).is_subset_of(j.complement(n))));
    let mut out = vec![k(head)];
    out.extend(
        pairs
            .iter()
            .map(|p| SigmaLabel::family(vec![j, Support::from_elements(p)])),
    );
    out
}

/// Images of the boundary divisors under the identification of `M_{0,n}` with
/// the universal space of parameters, in the chart `M_12`.
pub fn divisor_dictionary(n: usize) -> Result<Vec<DictionaryEntry>> {
    let mut out = match n {
        5 => [
            (&[1, 2][..], [1, 2, 3]),
            (&[2, 3], [2, 3, 4]),
            (&[1, 3], [2, 3, 5]),
            (&[2, 4], [1, 2, 4]),
            (&[1, 4], [1, 2, 5]),
            (&[2, 5], [1, 3, 4]),
            (&[1, 5], [1, 3, 5]),
            (&[1, 2, 5], [2, 4, 5]),
            (&[1, 2, 3], [1, 4, 5]),
            (&[1, 2, 4], [3, 4, 5]),
        ]
        .iter()
        .map(|(d, t)| entry(5, d, vec![k(t)]))
        .collect::<Vec<_>>(),
        6 => {
            let quads: [(&[usize], [usize; 4]); 15] = [
                (&[1, 2], [1, 2, 3, 6]),
                (&[1, 3], [1, 2, 3, 5]),
                (&[1, 4], [2, 3, 5, 6]),
                (&[1, 5], [1, 2, 5, 6]),
                (&[1, 6], [1, 3, 5, 6]),
                (&[2, 3], [1, 2, 3, 4]),
                (&[2, 4], [2, 3, 4, 6]),
                (&[2, 5], [1, 2, 4, 6]),
                (&[2, 6], [1, 3, 4, 6]),
                (&[3, 4], [2, 3, 4, 5]),
                (&[3, 5], [1, 2, 4, 5]),
                (&[3, 6], [1, 3, 4, 5]),
                (&[1, 2, 3, 4], [1, 4, 5, 6]),
                (&[1, 2, 3, 5], [3, 4, 5, 6]),
                (&[1, 2, 3, 6], [2, 4, 5, 6]),
            ];
            let triples: [TripleRow; 10] = [
                ([1, 2, 3], [4, 5, 6], [[1, 2], [1, 3], [2, 3]]),
                ([1, 2, 4], [1, 4, 5], [[3, 6], [2, 6], [2, 3]]),
                ([1, 2, 5], [3, 4, 5], [[1, 6], [2, 6], [1, 2]]),
                ([1, 2, 6], [2, 4, 5], [[1, 6], [3, 6], [1, 3]]),
                ([1, 3, 4], [2, 3, 5], [[1, 6], [4, 6], [1, 4]]),
                ([1, 3, 5], [3, 4, 6], [[1, 5], [2, 5], [1, 2]]),
                ([1, 3, 6], [2, 4, 6], [[1, 5], [3, 5], [1, 3]]),
                ([2, 3, 4], [1, 5, 6], [[3, 4], [2, 4], [2, 3]]),
                ([2, 3, 5], [3, 5, 6], [[1, 4], [2, 4], [1, 2]]),
                ([2, 3, 6], [2, 5, 6], [[1, 4], [3, 4], [1, 3]]),
            ];
            let mut v: Vec<DictionaryEntry> = quads
                .iter()
                .map(|(d, t)| entry(6, d, vec![k(t)]))
                .collect();
            v.extend(
                triples
                    .iter()
                    .map(|(d, head, pairs)| entry(6, d, head_with_pairs(6, head, *pairs))),
            );
            v
        }
        _ => {
            return Err(Error::Domain {
                n,
                supported: "{5, 6}",
            })
        }
    };
    out.sort_by_key(|e| e.divisor);
    Ok(out)
}

/// The strata of `F_omega` for a chamber, with their spaces of parameters.
pub fn assemble_f_omega(chamber: &Chamber, n: usize) -> Result<Vec<(SigmaLabel, ParamClass)>> {
    chamber
        .omega
        .iter()
        .map(|l| Ok((l.clone(), classify_space(l, n)?)))
        .collect()
}

/// Members of `omega` into which the virtual space of a label outside `omega` splits:
/// for `K{T}` these are the members having a part that contains the complement of `T`.
#[must_use]
pub fn decompose(label: &SigmaLabel, omega: &BTreeSet<SigmaLabel>, n: usize) -> Option<Vec<SigmaLabel>> {
    if omega.contains(label) {
        return Some(vec![label.clone()]);
    }
    match label.parts() {
        [t] => {
            let c = t.complement(n);
            Some(
                omega
                    .iter()
                    .filter(|m| m.parts().iter().any(|p| c.is_subset_of(*p)))
                    .cloned()
                    .collect(),
            )
        }
        _ => None,
    }
}

/// The labels the chamber's display predicts, grouped by family, read off the signs
/// of the sum walls at its witness.
#[must_use]
pub fn display_families(chamber: &Chamber, n: usize) -> BTreeMap<String, Vec<SigmaLabel>> {
    let below = |s: Support| chamber.witness.mass(s.0) < crate::rational::int(1);
    let pairs: Vec<Support> = (1u32..1 << n)
        .filter(|m| m.count_ones() == 2)
        .map(Support)
        .collect();
    let mut fam: BTreeMap<String, Vec<SigmaLabel>> = BTreeMap::new();
    let mut push = |name: &str, l: SigmaLabel| fam.entry(name.to_string()).or_default().push(l);

    for &p in &pairs {
        if below(p) {
            push("pair", SigmaLabel::K(vec![p]));
        } else if n >= 5 {
            push("complement of pair", SigmaLabel::K(vec![p.complement(n)]));
        }
    }
    for (a, &p) in pairs.iter().enumerate() {
        for &q in &pairs[a + 1..] {
            if p.is_disjoint(q) && below(p) && below(q) && (p.0 | q.0).count_ones() < n as u32 {
                push("two pairs", SigmaLabel::family(vec![p, q]));
            }
        }
    }
    if n == 6 {
        for (a, &p) in pairs.iter().enumerate() {
            for (b, &q) in pairs.iter().enumerate().skip(a + 1) {
                for &r in &pairs[b + 1..] {
                    if p.is_disjoint(q) && p.is_disjoint(r) && q.is_disjoint(r) && below(p) && below(q) && below(r) {
                        push("three pairs", SigmaLabel::family(vec![p, q, r]));
                    }
                }
            }
        }
        let triples: BTreeSet<Support> = (1u32..1 << n)
            .filter(|m| m.count_ones() == 3)
            .map(|m| Support(m).wall_rep(n))
            .collect();
        for t in triples {
            let inside = if below(t) { t } else { t.complement(n) };
            push("triple", SigmaLabel::K(vec![inside]));
            for &p in &pairs {
                if p.is_disjoint(inside) && below(p) {
                    push("pair and triple", SigmaLabel::family(vec![p, inside]));
                }
            }
        }
    }
    fam
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PartitionReport {
    pub checks: Vec<(String, bool)>,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl PartitionReport {
    #[must_use]
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, name: &str, failures: Vec<String>) {
        self.checks.push((name.to_string(), failures.is_empty()));
        self.failures.extend(failures);
    }
}

/// Label-level consistency of a dictionary with the stratification attached to a chamber.
#[must_use]
pub fn verify_partition(n: usize, chamber: &Chamber, dictionary: &[DictionaryEntry]) -> PartitionReport {
    let mut report = PartitionReport::default();
    let omega = &chamber.omega;

    let mut seen: BTreeMap<&SigmaLabel, &Divisor> = BTreeMap::new();
    let mut dup = Vec::new();
    for e in dictionary {
        for l in &e.image {
            if let Some(prev) = seen.insert(l, &e.divisor) {
                dup.push(format!("label {l} assigned to both {prev} and {}", e.divisor));
            }
        }
    }
    report.check("dictionary images are disjoint", dup);

    let fams = display_families(chamber, n);
    let mut counts: BTreeMap<&SigmaLabel, usize> = BTreeMap::new();
    for l in fams.values().flatten() {
        *counts.entry(l).or_insert(0) += 1;
    }
    let mut part = Vec::new();
    for (l, c) in &counts {
        if *c > 1 {
            part.push(format!("label {l} appears {c} times in the display"));
        }
        if !omega.contains(*l) {
            part.push(format!("display label {l} is not a stratum of the chamber"));
        }
    }
    for l in omega {
        if *l != SigmaLabel::Delta && !counts.contains_key(l) {
            part.push(format!("stratum {l} missing from the display"));
        }
    }
    report.check("display partitions the chamber's strata", part);

    let mut covered: BTreeSet<SigmaLabel> = BTreeSet::new();
    let mut decomp = Vec::new();
    for e in dictionary {
        let mut within: BTreeSet<SigmaLabel> = BTreeSet::new();
        for l in &e.image {
            match decompose(l, omega, n) {
                Some(pieces) if pieces.is_empty() => {
                    decomp.push(format!("{}: {l} decomposes to nothing", e.divisor));
                }
                Some(pieces) => {
                    for p in pieces {
                        if !within.insert(p.clone()) {
                            decomp.push(format!("{}: label {p} repeated after decomposition", e.divisor));
                        }
                        covered.insert(p);
                    }
                }
                None => report
                    .notes
                    .push(format!("{}: {l} kept undecomposed", e.divisor)),
            }
        }
    }
    report.check("decomposed images are duplicate-free", decomp);

    let missing: Vec<String> = omega
        .iter()
        .filter(|l| **l != SigmaLabel::Delta && !covered.contains(*l))
        .map(|l| format!("stratum {l} not reached by any divisor"))
        .collect();
    report.check("decomposed images cover the chamber's strata", missing);
    report
}
