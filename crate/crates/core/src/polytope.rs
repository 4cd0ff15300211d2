//! Admissible polytopes of the hypersimplex `Delta_{n,2}`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lp::{AffineForm, Requirement, StrictSystem};
use crate::par;
use crate::perm::Permutation;
use crate::rational::{int, Rational, RationalPoint};

pub const MIN_N: usize = 4;
/// Supports are stored as `u32` masks and labels print one digit per index.
pub const MAX_N: usize = 9;

pub fn check_n(n: usize) -> Result<()> {
    if (MIN_N..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::Domain {
            n,
            supported: "4..=9",
        })
    }
}

/// A subset of `{1, .., n}` stored as a 0-based bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Support(pub u32);

impl Support {
    #[must_use]
    pub fn from_elements(elements: &[usize]) -> Self {
        Self(elements.iter().fold(0, |m, &e| m | 1 << (e - 1)))
    }

    #[must_use]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[must_use]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// 1-based elements in increasing order.
    #[must_use]
    pub fn elements(self) -> Vec<usize> {
        (0..32).filter(|i| self.0 >> i & 1 == 1).map(|i| i + 1).collect()
    }

    #[must_use]
    pub fn contains(self, element: usize) -> bool {
        self.0 >> (element - 1) & 1 == 1
    }

    #[must_use]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[must_use]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    #[must_use]
    pub fn complement(self, n: usize) -> Self {
        Self(!self.0 & ((1 << n) - 1))
    }

    #[must_use]
    pub fn permuted(self, perm: &Permutation) -> Self {
        Self(perm.apply_mask(self.0))
    }

    /// Representative of `{S, S^c}` used for slices and walls: the smaller side,
    /// and the side containing 1 when both have size n/2.
    #[must_use]
    pub fn wall_rep(self, n: usize) -> Self {
        let c = self.complement(n);
        match self.len().cmp(&c.len()) {
            std::cmp::Ordering::Less => self,
            std::cmp::Ordering::Greater => c,
            std::cmp::Ordering::Equal => {
                if self.contains(1) {
                    self
                } else {
                    c
                }
            }
        }
    }

    fn digits(self) -> String {
        self.elements().iter().map(ToString::to_string).collect()
    }
}

impl PartialOrd for Support {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Support {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.elements().cmp(&other.elements())
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.digits())
    }
}

fn parse_support(s: &str) -> Option<Support> {
    if s.is_empty() {
        return None;
    }
    let mut mask = 0u32;
    for ch in s.chars() {
        let d = ch.to_digit(10)? as usize;
        if d == 0 || mask >> (d - 1) & 1 == 1 {
            return None;
        }
        mask |= 1 << (d - 1);
    }
    Some(Support(mask))
}

/// Canonical name of an admissible polytope.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SigmaLabel {
    Delta,
    /// Intersection of `sum_S x <= 1` over a disjoint family; parts kept sorted.
    K(Vec<Support>),
    /// The slice `sum_S x = 1`.
    P(Support),
    /// The facet `x_i = 0`.
    O(usize),
    /// The facet `x_i = 1`.
    T(usize),
}

impl SigmaLabel {
    #[must_use]
    pub fn family(mut parts: Vec<Support>) -> Self {
        parts.sort();
        Self::K(parts)
    }

    #[must_use]
    pub fn single(elements: &[usize]) -> Self {
        Self::K(vec![Support::from_elements(elements)])
    }

    #[must_use]
    pub fn parts(&self) -> &[Support] {
        match self {
            Self::K(parts) => parts,
            _ => &[],
        }
    }

    /// Image under a relabeling of `{1, .., n}`.
    #[must_use]
    pub fn permuted(&self, perm: &Permutation, n: usize) -> Self {
        match self {
            Self::Delta => Self::Delta,
            Self::K(parts) => Self::family(parts.iter().map(|s| s.permuted(perm)).collect()),
            Self::P(s) => Self::P(s.permuted(perm).wall_rep(n)),
            Self::O(i) => Self::O(perm.apply(i - 1) + 1),
            Self::T(i) => Self::T(perm.apply(i - 1) + 1),
        }
    }

    /// The family shape, e.g. `[2, 3]` for `K{12|345}`.
    #[must_use]
    pub fn shape(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.parts().iter().map(|p| p.len()).collect();
        s.sort_unstable();
        s
    }
}

impl fmt::Display for SigmaLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Delta => f.write_str("Delta"),
            Self::K(parts) => {
                let inner: Vec<String> = parts.iter().map(|p| p.digits()).collect();
                write!(f, "K{{{}}}", inner.join("|"))
            }
            Self::P(s) => write!(f, "P{{{s}}}"),
            Self::O(i) => write!(f, "O{{{i}}}"),
            Self::T(i) => write!(f, "T{{{i}}}"),
        }
    }
}

impl FromStr for SigmaLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadLabel(s.to_string());
        if s == "Delta" {
            return Ok(Self::Delta);
        }
        let (head, rest) = s.split_at(s.find('{').ok_or_else(bad)?);
        let body = rest
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(bad)?;
        let single = || parse_support(body).ok_or_else(bad);
        let index = || -> Result<usize> {
            let sup = single()?;
            if sup.len() == 1 {
                Ok(sup.elements()[0])
            } else {
                Err(bad())
            }
        };
        let label = match head {
            "K" => {
                let parts = body
                    .split('|')
                    .map(parse_support)
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(bad)?;
                let mut union = 0;
                for p in &parts {
                    if p.0 & union != 0 {
                        return Err(bad());
                    }
                    union |= p.0;
                }
                Self::family(parts)
            }
            "P" => Self::P(single()?),
            "O" => Self::O(index()?),
            "T" => Self::T(index()?),
            _ => return Err(bad()),
        };
        Ok(label)
    }
}

impl Serialize for SigmaLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstraintKind {
    SumLeOne,
    SumEqOne,
    SumGeOne,
    CoordZero,
    CoordOne,
}

/// One defining condition of an admissible polytope, on top of `Delta_{n,2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HalfspaceConstraint {
    pub support: Support,
    pub kind: ConstraintKind,
}

impl HalfspaceConstraint {
    #[must_use]
    pub fn new(support: Support, kind: ConstraintKind) -> Self {
        Self { support, kind }
    }

    /// Affine forms whose nonnegativity (or vanishing) expresses the constraint.
    fn forms(self, n: usize) -> Vec<(AffineForm, bool)> {
        let m = self.support.0;
        match self.kind {
            ConstraintKind::SumLeOne => vec![(AffineForm::mass(n, m, 1, -1), false)],
            ConstraintKind::SumGeOne => vec![(AffineForm::mass(n, m, 1, 1), false)],
            ConstraintKind::SumEqOne => vec![(AffineForm::mass(n, m, 1, 1), true)],
            ConstraintKind::CoordZero => vec![(AffineForm::mass(n, m, 0, 1), true)],
            ConstraintKind::CoordOne => vec![(AffineForm::mass(n, m, 1, 1), true)],
        }
    }

    fn holds_at_vertex(self, vertex: u32) -> bool {
        let mass = (vertex & self.support.0).count_ones();
        match self.kind {
            ConstraintKind::SumLeOne => mass <= 1,
            ConstraintKind::SumGeOne => mass >= 1,
            ConstraintKind::SumEqOne | ConstraintKind::CoordOne => mass == 1,
            ConstraintKind::CoordZero => mass == 0,
        }
    }
}

impl fmt::Display for HalfspaceConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sum: Vec<String> = self
            .support
            .elements()
            .iter()
            .map(|i| format!("x{i}"))
            .collect();
        let sum = sum.join("+");
        match self.kind {
            ConstraintKind::SumLeOne => write!(f, "{sum}<=1"),
            ConstraintKind::SumEqOne => write!(f, "{sum}=1"),
            ConstraintKind::SumGeOne => write!(f, "{sum}>=1"),
            ConstraintKind::CoordZero => write!(f, "{sum}=0"),
            ConstraintKind::CoordOne => write!(f, "{sum}=1"),
        }
    }
}

impl Serialize for HalfspaceConstraint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Vertices of `Delta_{n,2}` as pair masks, lexicographic in the pair.
#[must_use]
pub fn vertex_masks(n: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(1 << i | 1 << j);
        }
    }
    out
}

pub fn hypersimplex_vertices(n: usize) -> Result<Vec<RationalPoint>> {
    check_n(n)?;
    Ok(vertex_masks(n)
        .into_iter()
        .map(|m| {
            let i = m.trailing_zeros() as usize;
            let j = 31 - m.leading_zeros() as usize;
            RationalPoint::vertex(n, i, j)
        })
        .collect())
}

/// Affine dimension of the convex hull of 0/1 points given as masks.
fn affine_rank(n: usize, points: &[u32]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let mut rows: Vec<Vec<Rational>> = rest
        .iter()
        .map(|p| {
            (0..n)
                .map(|i| int(i64::from(p >> i & 1) - i64::from(first >> i & 1)))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let prow = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &prow[col];
            for (v, p) in row.iter_mut().zip(&prow) {
                *v -= &f * p;
            }
        }
        rank += 1;
    }
    Some(rank)
}

/// An admissible polytope: `Delta_{n,2}` cut by its constraints.
#[derive(Clone, Debug, Serialize)]
pub struct AdmissiblePolytope {
    pub id: usize,
    pub sigma_label: SigmaLabel,
    pub constraints: Vec<HalfspaceConstraint>,
    pub dim: usize,
    #[serde(skip)]
    pub n: usize,
    #[serde(serialize_with = "serialize_vertices")]
    pub vertices: Vec<u32>,
    pub witness: Option<RationalPoint>,
}

fn serialize_vertices<S: serde::Serializer>(
    v: &[u32],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|m| Support(*m).to_string()))
}

impl AdmissiblePolytope {
    /// Builds the polytope, its vertex set, dimension and an interior witness.
    pub fn build(
        n: usize,
        sigma_label: SigmaLabel,
        constraints: Vec<HalfspaceConstraint>,
    ) -> Result<Self> {
        let vertices: Vec<u32> = vertex_masks(n)
            .into_iter()
            .filter(|v| constraints.iter().all(|c| c.holds_at_vertex(*v)))
            .collect();
        let dim = affine_rank(n, &vertices).ok_or(Error::EmptyPolytope)?;
        let mut p = Self {
            id: 0,
            sigma_label,
            constraints,
            dim,
            n,
            vertices,
            witness: None,
        };
        p.witness = p.strict_system().max_min_slack().map(|(w, _)| w);
        Ok(p)
    }

    /// System whose solutions are exactly the relative interior: explicit
    /// constraints plus the box `0 <= x_i <= 1`, with implicit equalities made exact.
    #[must_use]
    pub fn strict_system(&self) -> StrictSystem {
        let mut forms: Vec<(AffineForm, bool)> = self
            .constraints
            .iter()
            .flat_map(|c| c.forms(self.n))
            .collect();
        for i in 0..self.n {
            forms.push((AffineForm::mass(self.n, 1 << i, 0, 1), false));
            forms.push((AffineForm::mass(self.n, 1 << i, 1, -1), false));
        }
        let mut sys = StrictSystem::new(self.n);
        for (form, equality) in forms {
            let req = if equality || self.is_implicit_equality(&form) {
                Requirement::Zero
            } else {
                Requirement::Positive
            };
            sys.push(form, req);
        }
        sys
    }

    fn is_implicit_equality(&self, form: &AffineForm) -> bool {
        self.vertices.iter().all(|&v| {
            let value: i64 = (0..self.n)
                .filter(|i| v >> i & 1 == 1)
                .map(|i| form.coeffs[i])
                .sum::<i64>()
                + form.constant;
            value == 0
        })
    }

    pub fn relative_interior_contains(&self, x: &RationalPoint) -> Result<bool> {
        if x.dim() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: x.dim(),
            });
        }
        Ok(self.strict_system().satisfied_by(x))
    }

    /// Whether `x` lies in the closed polytope.
    #[must_use]
    pub fn contains(&self, x: &RationalPoint) -> bool {
        self.strict_system().forms.iter().all(|(f, req)| {
            let v = f.eval(x);
            match req {
                Requirement::Zero => v.is_zero(),
                Requirement::Positive => !v.is_negative(),
            }
        })
    }

    #[must_use]
    pub fn is_full_dimensional(&self) -> bool {
        self.dim + 1 == self.n
    }

    #[must_use]
    pub fn is_facet(&self) -> bool {
        matches!(self.sigma_label, SigmaLabel::O(_) | SigmaLabel::T(_))
    }

    #[must_use]
    pub fn is_slice(&self) -> bool {
        matches!(self.sigma_label, SigmaLabel::P(_))
    }
}

pub fn polytope_dim(p: &AdmissiblePolytope) -> Result<usize> {
    affine_rank(p.n, &p.vertices).ok_or(Error::EmptyPolytope)
}

pub fn relative_interior_contains(p: &AdmissiblePolytope, x: &RationalPoint) -> Result<bool> {
    p.relative_interior_contains(x)
}

fn family_polytope(n: usize, parts: &[Support]) -> Result<AdmissiblePolytope> {
    let label = SigmaLabel::family(parts.to_vec());
    let constraints = label
        .parts()
        .iter()
        .map(|s| HalfspaceConstraint::new(*s, ConstraintKind::SumLeOne))
        .collect();
    AdmissiblePolytope::build(n, label, constraints)
}

#[must_use]
pub fn slice_polytope(n: usize, support: Support) -> AdmissiblePolytope {
    let s = support.wall_rep(n);
    AdmissiblePolytope::build(
        n,
        SigmaLabel::P(s),
        vec![HalfspaceConstraint::new(s, ConstraintKind::SumEqOne)],
    )
    .expect("slices of size 2..n-2 are nonempty")
}

/// Every disjoint family of supports with sizes in `2..=n-2`.
#[must_use]
pub fn disjoint_families(n: usize) -> Vec<Vec<Support>> {
    let candidates: Vec<u32> = (1u32..1 << n)
        .filter(|m| (2..=n - 2).contains(&(m.count_ones() as usize)))
        .collect();
    fn rec(cands: &[u32], start: usize, used: u32, cur: &mut Vec<Support>, out: &mut Vec<Vec<Support>>) {
        for k in start..cands.len() {
            if cands[k] & used == 0 {
                cur.push(Support(cands[k]));
                out.push(cur.clone());
                rec(cands, k + 1, used | cands[k], cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&candidates, 0, 0, &mut Vec::new(), &mut out);
    out
}

/// The `n` facets `x_i = 0` followed by the `n` facets `x_i = 1`.
pub fn hypersimplex_facets(n: usize) -> Result<Vec<AdmissiblePolytope>> {
    check_n(n)?;
    let mut out = Vec::with_capacity(2 * n);
    for i in 1..=n {
        let s = Support::from_elements(&[i]);
        out.push(AdmissiblePolytope::build(
            n,
            SigmaLabel::O(i),
            vec![HalfspaceConstraint::new(s, ConstraintKind::CoordZero)],
        )?);
    }
    for i in 1..=n {
        let s = Support::from_elements(&[i]);
        out.push(AdmissiblePolytope::build(
            n,
            SigmaLabel::T(i),
            vec![HalfspaceConstraint::new(s, ConstraintKind::CoordOne)],
        )?);
    }
    Ok(out)
}

/// Interior-meeting slices `sum_S x = 1` with `2 <= |S| <= n/2`, one per complement pair.
pub fn interior_slices(n: usize) -> Result<Vec<AdmissiblePolytope>> {
    check_n(n)?;
    let reps: BTreeSet<Support> = (1u32..1 << n)
        .filter(|m| (2..=n / 2).contains(&(m.count_ones() as usize)))
        .map(|m| Support(m).wall_rep(n))
        .collect();
    Ok(reps.into_iter().map(|s| slice_polytope(n, s)).collect())
}

/// `Delta`, the full-dimensional K-families, the interior slices and the facets,
/// sorted by label string with `id` set to the position.
pub fn enumerate_admissible_polytopes(n: usize) -> Result<Vec<AdmissiblePolytope>> {
    check_n(n)?;
    let mut out = vec![AdmissiblePolytope::build(n, SigmaLabel::Delta, Vec::new())?];
    let families = disjoint_families(n);
    let built: Vec<Result<AdmissiblePolytope>> =
        par::map(&families, |parts| family_polytope(n, parts));
    for p in built {
        let p = p?;
        if p.is_full_dimensional() {
            out.push(p);
        }
    }
    out.extend(interior_slices(n)?);
    out.extend(hypersimplex_facets(n)?);
    out.sort_by_cached_key(|p| p.sigma_label.to_string());
    for (i, p) in out.iter_mut().enumerate() {
        p.id = i;
    }
    Ok(out)
}

/// The full-dimensional members of an enumerated list.
#[must_use]
pub fn full_dimensional(polys: &[AdmissiblePolytope]) -> Vec<&AdmissiblePolytope> {
    polys.iter().filter(|p| p.is_full_dimensional()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use std::collections::HashMap;

    fn by_label(polys: &[AdmissiblePolytope]) -> HashMap<String, &AdmissiblePolytope> {
        polys.iter().map(|p| (p.sigma_label.to_string(), p)).collect()
    }

    fn shape_counts(polys: &[AdmissiblePolytope]) -> HashMap<Vec<usize>, usize> {
        let mut m = HashMap::new();
        for p in polys.iter().filter(|p| p.is_full_dimensional()) {
            *m.entry(p.sigma_label.shape()).or_insert(0) += 1;
        }
        m
    }

    #[test]
    fn label_grammar_round_trips() {
        for s in ["Delta", "K{12}", "K{12|345}", "P{12}", "O{3}", "T{3}"] {
            let l: SigmaLabel = s.parse().unwrap();
            assert_eq!(l.to_string(), s);
        }
        let l: SigmaLabel = "K{345|12}".parse().unwrap();
        assert_eq!(l.to_string(), "K{12|345}");
        for bad in ["K{}", "K{12|23}", "X{1}", "O{12}", "K{11}", "P{12"] {
            assert!(bad.parse::<SigmaLabel>().is_err(), "{bad}");
        }
    }

    #[test]
    fn vertices_and_facets() {
        let v = hypersimplex_vertices(5).unwrap();
        assert_eq!(v.len(), 10);
        assert_eq!(v[0], RationalPoint::vertex(5, 0, 1));
        assert_eq!(v[9], RationalPoint::vertex(5, 3, 4));
        assert!(hypersimplex_vertices(3).is_err());

        for n in 4..=6 {
            let facets = hypersimplex_facets(n).unwrap();
            assert_eq!(facets.len(), 2 * n);
            assert!(facets.iter().all(|f| f.dim == n - 2));
            for vert in vertex_masks(n) {
                let on = |pred: fn(&SigmaLabel) -> bool| {
                    facets
                        .iter()
                        .filter(|f| pred(&f.sigma_label) && f.vertices.contains(&vert))
                        .count()
                };
                assert_eq!(on(|l| matches!(l, SigmaLabel::O(_))), n - 2);
                assert_eq!(on(|l| matches!(l, SigmaLabel::T(_))), 2);
            }
        }
    }

    #[test]
    fn full_dimensional_counts() {
        let p5 = enumerate_admissible_polytopes(5).unwrap();
        assert_eq!(full_dimensional(&p5).len(), 36);
        let s5 = shape_counts(&p5);
        assert_eq!(s5[&vec![]], 1);
        assert_eq!(s5[&vec![2]], 10);
        assert_eq!(s5[&vec![3]], 10);
        assert_eq!(s5[&vec![2, 2]], 15);

        let p6 = enumerate_admissible_polytopes(6).unwrap();
        assert_eq!(full_dimensional(&p6).len(), 171);
        let s6 = shape_counts(&p6);
        for (shape, count) in [
            (vec![], 1),
            (vec![2], 15),
            (vec![3], 20),
            (vec![4], 15),
            (vec![2, 2], 45),
            (vec![2, 2, 2], 15),
            (vec![2, 3], 60),
        ] {
            assert_eq!(s6[&shape], count, "{shape:?}");
        }
        assert_eq!(p6.iter().filter(|p| p.is_slice()).count(), 25);
        assert_eq!(p6.iter().filter(|p| p.is_facet()).count(), 12);
    }

    #[test]
    fn degenerate_families_are_slices() {
        for n in 4..=6 {
            let slices = interior_slices(n).unwrap();
            for parts in disjoint_families(n) {
                let p = family_polytope(n, &parts).unwrap();
                if !p.is_full_dimensional() {
                    assert_eq!(p.dim, n - 2, "{}", p.sigma_label);
                    assert!(
                        slices.iter().any(|s| s.vertices == p.vertices),
                        "{} is not a slice",
                        p.sigma_label
                    );
                }
            }
        }
    }

    #[test]
    fn dimensions() {
        let p5 = enumerate_admissible_polytopes(5).unwrap();
        let m = by_label(&p5);
        assert_eq!(polytope_dim(m["Delta"]).unwrap(), 4);
        assert_eq!(polytope_dim(m["P{12}"]).unwrap(), 3);

        let point = AdmissiblePolytope::build(
            5,
            SigmaLabel::Delta,
            vec![
                HalfspaceConstraint::new(Support::from_elements(&[1]), ConstraintKind::CoordOne),
                HalfspaceConstraint::new(Support::from_elements(&[2]), ConstraintKind::CoordOne),
            ],
        )
        .unwrap();
        assert_eq!(point.dim, 0);

        let empty = AdmissiblePolytope::build(
            5,
            SigmaLabel::Delta,
            vec![HalfspaceConstraint::new(
                Support::from_elements(&[1, 2, 3, 4, 5]),
                ConstraintKind::SumLeOne,
            )],
        );
        assert!(matches!(empty, Err(Error::EmptyPolytope)));
    }

    #[test]
    fn relative_interior_examples() {
        let p5 = enumerate_admissible_polytopes(5).unwrap();
        let k12 = by_label(&p5)["K{12}"];
        assert!(k12
            .relative_interior_contains(&RationalPoint::barycenter(5))
            .unwrap());
        let on_wall = RationalPoint::new(vec![
            rat(1, 2),
            rat(1, 2),
            rat(1, 3),
            rat(1, 3),
            rat(1, 3),
        ])
        .unwrap();
        assert!(!k12.relative_interior_contains(&on_wall).unwrap());

        let p6 = enumerate_admissible_polytopes(6).unwrap();
        let k123 = by_label(&p6)["K{123}"];
        assert!(!k123
            .relative_interior_contains(&RationalPoint::barycenter(6))
            .unwrap());
        assert!(k123
            .relative_interior_contains(&RationalPoint::barycenter(5))
            .is_err());
    }

    #[test]
    fn witnesses_lie_in_relative_interiors() {
        for n in 4..=6 {
            for p in enumerate_admissible_polytopes(n).unwrap() {
                let w = p.witness.as_ref().unwrap_or_else(|| panic!("{}", p.sigma_label));
                assert!(p.relative_interior_contains(w).unwrap(), "{}", p.sigma_label);
            }
        }
    }

    #[test]
    fn vertices_are_pair_points() {
        for p in enumerate_admissible_polytopes(6).unwrap() {
            assert!(p.vertices.iter().all(|v| v.count_ones() == 2));
            for v in &p.vertices {
                let i = v.trailing_zeros() as usize;
                let j = 31 - v.leading_zeros() as usize;
                assert!(p.contains(&RationalPoint::vertex(6, i, j)));
            }
        }
    }

    #[test]
    fn relabeling_preserves_the_list() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in [5, 6] {
            let polys = enumerate_admissible_polytopes(n).unwrap();
            let labels: BTreeSet<SigmaLabel> =
                polys.iter().map(|p| p.sigma_label.clone()).collect();
            for _ in 0..10 {
                let perm = Permutation::random(n, &mut rng);
                let image: BTreeSet<SigmaLabel> =
                    labels.iter().map(|l| l.permuted(&perm, n)).collect();
                assert_eq!(image, labels);
            }
        }
    }
}
