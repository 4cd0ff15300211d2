//! Exact two-phase simplex over the rationals, and strict-feasibility queries on
//! the slice `sum x = 2`.

use num_traits::{One, Signed, Zero};

use crate::rational::{int, Rational, RationalPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Rational, solution: Vec<Rational> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rational {
        &self.rows[r][self.width]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in &mut self.rows[r] {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        self.basis[r] = c;
    }

    fn reduced_costs(&self, objective: &[Rational], allowed: usize) -> Vec<Rational> {
        let mut red: Vec<Rational> = (0..allowed)
            .map(|j| objective.get(j).cloned().unwrap_or_else(Rational::zero))
            .collect();
        for (r, &b) in self.basis.iter().enumerate() {
            let cb = objective.get(b).cloned().unwrap_or_else(Rational::zero);
            if cb.is_zero() {
                continue;
            }
            for (j, v) in red.iter_mut().enumerate() {
                let a = &self.rows[r][j];
                if !a.is_zero() {
                    *v -= &cb * a;
                }
            }
        }
        red
    }

    /// Maximizes `objective` over columns `< allowed` with Bland's rule.
    fn optimize(&mut self, objective: &[Rational], allowed: usize) -> bool {
        loop {
            let red = self.reduced_costs(objective, allowed);
            let Some(enter) = (0..allowed).find(|&j| red[j].is_positive()) else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / a;
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => {
                        ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, enter),
                None => return false,
            }
        }
    }
}

/// Maximizes `objective . y` subject to `constraints` and `y >= 0`.
#[must_use]
pub fn maximize(objective: &[Rational], constraints: &[Constraint]) -> LpOutcome {
    let vars = objective.len();
    let slack_count = constraints
        .iter()
        .filter(|c| c.relation != Relation::Eq)
        .count();
    let art_start = vars + slack_count;

    let mut rows = Vec::with_capacity(constraints.len());
    let mut needs_artificial = Vec::with_capacity(constraints.len());
    let mut natural_basis = Vec::with_capacity(constraints.len());
    let mut slack = vars;
    for c in constraints {
        assert_eq!(c.coeffs.len(), vars, "constraint width mismatch");
        let mut row = vec![Rational::zero(); art_start];
        row[..vars].clone_from_slice(&c.coeffs);
        let mut slack_col = None;
        match c.relation {
            Relation::Le => {
                row[slack] = Rational::one();
                slack_col = Some(slack);
                slack += 1;
            }
            Relation::Ge => {
                row[slack] = -Rational::one();
                slack_col = Some(slack);
                slack += 1;
            }
            Relation::Eq => {}
        }
        let mut rhs = c.rhs.clone();
        if rhs.is_negative() {
            for v in &mut row {
                *v = -v.clone();
            }
            rhs = -rhs;
        }
        let basic = slack_col.filter(|&s| row[s].is_one());
        needs_artificial.push(basic.is_none());
        natural_basis.push(basic);
        row.push(rhs);
        rows.push(row);
    }

    let art_count = needs_artificial.iter().filter(|b| **b).count();
    let width = art_start + art_count;
    let mut basis = Vec::with_capacity(rows.len());
    let mut art = art_start;
    for (i, row) in rows.iter_mut().enumerate() {
        let rhs = row.pop().expect("rhs present");
        row.resize(width, Rational::zero());
        if needs_artificial[i] {
            row[art] = Rational::one();
            basis.push(art);
            art += 1;
        } else {
            basis.push(natural_basis[i].expect("slack basic"));
        }
        row.push(rhs);
    }
    let mut t = Tableau { rows, basis, width };

    if art_count > 0 {
        let mut phase1 = vec![Rational::zero(); width];
        for v in &mut phase1[art_start..] {
            *v = -Rational::one();
        }
        t.optimize(&phase1, width);
        let infeasibility: Rational = t
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| b >= art_start)
            .map(|(r, _)| t.rhs(r).clone())
            .sum();
        if infeasibility.is_positive() {
            return LpOutcome::Infeasible;
        }
        let mut r = 0;
        while r < t.rows.len() {
            if t.basis[r] >= art_start {
                if let Some(c) = (0..art_start).find(|&c| !t.rows[r][c].is_zero()) {
                    t.pivot(r, c);
                } else {
                    t.rows.remove(r);
                    t.basis.remove(r);
                    continue;
                }
            }
            r += 1;
        }
    }

    if !t.optimize(objective, art_start) {
        return LpOutcome::Unbounded;
    }
    let mut solution = vec![Rational::zero(); vars];
    for (r, &b) in t.basis.iter().enumerate() {
        if b < vars {
            solution[b] = t.rhs(r).clone();
        }
    }
    let value = objective
        .iter()
        .zip(&solution)
        .map(|(c, y)| c * y)
        .sum();
    LpOutcome::Optimal { value, solution }
}

/// An affine function `coeffs . x + constant` on R^n with integer data.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineForm {
    pub coeffs: Vec<i64>,
    pub constant: i64,
}

impl AffineForm {
    /// `sign * (sum_{i in mask} x_i - level)`.
    #[must_use]
    pub fn mass(n: usize, mask: u32, level: i64, sign: i64) -> Self {
        Self {
            coeffs: (0..n)
                .map(|i| if mask >> i & 1 == 1 { sign } else { 0 })
                .collect(),
            constant: -sign * level,
        }
    }

    #[must_use]
    pub fn eval(&self, p: &RationalPoint) -> Rational {
        let mut acc = int(self.constant);
        for (c, x) in self.coeffs.iter().zip(p.coords()) {
            if *c != 0 {
                acc += int(*c) * x;
            }
        }
        acc
    }
}

/// What a system asks of each form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Requirement {
    Positive,
    Zero,
}

/// Strict inequalities and equalities on the slice `sum x = 2`, `x >= 0`.
#[derive(Clone, Debug, Default)]
pub struct StrictSystem {
    pub n: usize,
    pub forms: Vec<(AffineForm, Requirement)>,
}

impl StrictSystem {
    #[must_use]
    pub fn new(n: usize) -> Self {
        Self {
            n,
            forms: Vec::new(),
        }
    }

    /// Adds `0 < x_i < 1` for every coordinate.
    #[must_use]
    pub fn with_open_box(mut self) -> Self {
        for i in 0..self.n {
            self.forms.push((AffineForm::mass(self.n, 1 << i, 0, 1), Requirement::Positive));
            self.forms.push((AffineForm::mass(self.n, 1 << i, 1, -1), Requirement::Positive));
        }
        self
    }

    pub fn push(&mut self, form: AffineForm, req: Requirement) {
        assert_eq!(form.coeffs.len(), self.n, "form width mismatch");
        self.forms.push((form, req));
    }

    fn constraints(&self, min_slack: Option<&Rational>) -> Vec<Constraint> {
        let n = self.n;
        let width = n + 1;
        let mut out = Vec::with_capacity(self.forms.len() + 2);
        out.push(Constraint {
            coeffs: (0..width).map(|j| if j < n { int(1) } else { int(0) }).collect(),
            relation: Relation::Eq,
            rhs: int(2),
        });
        for (form, req) in &self.forms {
            let mut coeffs: Vec<Rational> = form.coeffs.iter().map(|c| int(*c)).collect();
            match req {
                Requirement::Zero => {
                    coeffs.push(int(0));
                    out.push(Constraint {
                        coeffs,
                        relation: Relation::Eq,
                        rhs: int(-form.constant),
                    });
                }
                Requirement::Positive => match min_slack {
                    None => {
                        // form - t >= 0
                        coeffs.push(int(-1));
                        out.push(Constraint {
                            coeffs,
                            relation: Relation::Ge,
                            rhs: int(-form.constant),
                        });
                    }
                    Some(s) => {
                        coeffs.push(int(0));
                        out.push(Constraint {
                            coeffs,
                            relation: Relation::Ge,
                            rhs: s - int(form.constant),
                        });
                    }
                },
            }
        }
        out.push(Constraint {
            coeffs: (0..width).map(|j| if j == n { int(1) } else { int(0) }).collect(),
            relation: Relation::Le,
            rhs: int(1),
        });
        out
    }

    /// Maximizes the smallest slack of the positive forms (capped at 1).
    /// Returns the point and its slack when the strict system is feasible.
    #[must_use]
    pub fn max_min_slack(&self) -> Option<(RationalPoint, Rational)> {
        let mut objective = vec![int(0); self.n + 1];
        objective[self.n] = int(1);
        match maximize(&objective, &self.constraints(None)) {
            LpOutcome::Optimal { value, mut solution } if value.is_positive() => {
                solution.pop();
                let p = RationalPoint::new(solution).expect("LP enforces the slice");
                Some((p, value))
            }
            _ => None,
        }
    }

    /// A strictly feasible point maximizing `objective . x` among points whose
    /// positive forms all have slack at least `min_slack`.
    #[must_use]
    pub fn optimize_with_slack(
        &self,
        objective: &[i64],
        min_slack: &Rational,
    ) -> Option<RationalPoint> {
        let mut obj: Vec<Rational> = objective.iter().map(|c| int(*c)).collect();
        obj.push(int(0));
        match maximize(&obj, &self.constraints(Some(min_slack))) {
            LpOutcome::Optimal { mut solution, .. } => {
                solution.pop();
                RationalPoint::new(solution).ok()
            }
            _ => None,
        }
    }

    /// Whether `p` satisfies every requirement exactly.
    #[must_use]
    pub fn satisfied_by(&self, p: &RationalPoint) -> bool {
        self.forms.iter().all(|(f, req)| {
            let v = f.eval(p);
            match req {
                Requirement::Positive => v.is_positive(),
                Requirement::Zero => v.is_zero(),
            }
        })
    }
}
