//! JSON and markdown reports for each command, with the asserted numbers.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::chamber::{reference_chamber, Chamber};
use crate::error::Result;
use crate::homology::{
    betti, check_naturality, cycle_space_3n9, f_omega_system, h7_system, keel_system,
    structural_checks, top_cycle_quotient, BettiTable, Mode,
};
use crate::params::{assemble_f_omega, divisor_dictionary, verify_partition};
use crate::polytope::enumerate_admissible_polytopes;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Assertion {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub passed: bool,
    pub anchor: &'static str,
}

impl Assertion {
    pub fn new(name: impl Into<String>, expected: impl Serialize, actual: impl Serialize, anchor: &'static str) -> Self {
        let expected = json!(expected);
        let actual = json!(actual);
        Self {
            name: name.into(),
            passed: expected == actual,
            expected,
            actual,
            anchor,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub kind: &'static str,
    pub n: usize,
    pub data: Value,
    pub assertions: Vec<Assertion>,
    pub notes: Vec<String>,
}

impl Report {
    fn new(kind: &'static str, n: usize, data: Value) -> Self {
        Self {
            kind,
            n,
            data,
            assertions: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn assert(&mut self, a: Assertion) {
        self.assertions.push(a);
    }

    #[must_use]
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }

    #[must_use]
    pub fn schema(&self) -> String {
        format!("orbitope/{}/v1", self.kind)
    }

    /// Fields of `data` other than `markdown` are lifted to the top level.
    #[must_use]
    pub fn to_json(&self) -> Value {
        let mut out = json!({"schema": self.schema(), "n": self.n});
        if let Value::Object(fields) = &self.data {
            for (k, v) in fields.iter().filter(|(k, _)| *k != "markdown") {
                out[k] = v.clone();
            }
        }
        out["assertions"] = json!(self.assertions);
        out["notes"] = json!(self.notes);
        out["passed"] = json!(self.passed());
        out
    }

    #[must_use]
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("values serialize");
        s.push('\n');
        s
    }

    #[must_use]
    pub fn to_markdown(&self) -> String {
        let mut s = format!("# {} (n = {})\n\n", self.kind, self.n);
        if let Some(table) = self.data.get("markdown").and_then(Value::as_str) {
            s.push_str(table);
            s.push('\n');
        }
        if !self.assertions.is_empty() {
            s.push_str("| check | expected | actual | result | reference |\n|---|---|---|---|---|\n");
            for a in &self.assertions {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {} |",
                    a.name,
                    a.expected,
                    a.actual,
                    if a.passed { "pass" } else { "FAIL" },
                    a.anchor
                );
            }
            s.push('\n');
        }
        for note in &self.notes {
            let _ = writeln!(s, "- {note}");
        }
        s
    }
}

const ANCHOR_POLYTOPES: &str = "admissible polytopes of the hypersimplex";
const ANCHOR_CHAMBERS: &str = "chamber decomposition of the hypersimplex";
const ANCHOR_KEEL: &str = "four-point relations among boundary divisors";
const ANCHOR_DICT: &str = "divisor dictionary in the chart M_12";
const ANCHOR_BETTI: &str = "mod-2 homology of the orbit space";
const ANCHOR_STRUCTURE: &str = "general degree identities";
const ANCHOR_CYCLES: &str = "edge-cycle basis in degree 3n-9";
const ANCHOR_NATURALITY: &str = "projection of zero classes between chambers";

fn expected_full_dimensional(n: usize) -> Option<usize> {
    match n {
        5 => Some(36),
        6 => Some(171),
        _ => None,
    }
}

#[must_use]
pub fn expected_chambers(n: usize) -> Option<usize> {
    match n {
        4 => Some(8),
        5 => Some(76),
        6 => Some(1678),
        _ => None,
    }
}

fn markdown_table(headers: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut s = format!("| {} |\n|{}\n", headers.join(" | "), "---|".repeat(headers.len()));
    for r in rows {
        let _ = writeln!(s, "| {} |", r.join(" | "));
    }
    s
}

pub fn admissible_report(n: usize) -> Result<Report> {
    let polys = enumerate_admissible_polytopes(n)?;
    let mut by_shape: BTreeMap<String, usize> = BTreeMap::new();
    for p in polys.iter().filter(|p| p.is_full_dimensional()) {
        *by_shape.entry(format!("{:?}", p.sigma_label.shape())).or_insert(0) += 1;
    }
    let full = polys.iter().filter(|p| p.is_full_dimensional()).count();
    let slices = polys.iter().filter(|p| p.is_slice()).count();
    let facets = polys.iter().filter(|p| p.is_facet()).count();
    let md = markdown_table(
        &["id", "label", "dim", "constraints"],
        polys.iter().map(|p| {
            vec![
                p.id.to_string(),
                p.sigma_label.to_string(),
                p.dim.to_string(),
                p.constraints.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
            ]
        }),
    );
    let mut r = Report::new(
        "admissible",
        n,
        json!({
            "counts": {"total": polys.len(), "full_dimensional": full, "slices": slices, "facets": facets},
            "full_dimensional_by_shape": by_shape,
            "polytopes": polys,
            "markdown": md,
        }),
    );
    if let Some(e) = expected_full_dimensional(n) {
        r.assert(Assertion::new("full-dimensional polytopes", e, full, ANCHOR_POLYTOPES));
    }
    if n == 6 {
        r.assert(Assertion::new("interior-meeting slices", 25, slices, ANCHOR_POLYTOPES));
    }
    r.assert(Assertion::new("facets", 2 * n, facets, ANCHOR_POLYTOPES));
    Ok(r)
}

#[must_use]
pub fn chambers_report(n: usize, chambers: &[Chamber]) -> Report {
    let rows: Vec<Value> = chambers
        .iter()
        .map(|c| json!({"id": c.id, "signs": c.signs, "witness": c.witness, "omega_size": c.omega.len()}))
        .collect();
    let md = markdown_table(
        &["id", "signs", "|omega|"],
        chambers
            .iter()
            .map(|c| vec![c.id.to_string(), c.signs.clone(), c.omega.len().to_string()]),
    );
    let mut r = Report::new(
        "chambers",
        n,
        json!({"count": chambers.len(), "chambers": rows, "markdown": md}),
    );
    if let Some(e) = expected_chambers(n) {
        r.assert(Assertion::new("full-dimensional chambers", e, chambers.len(), ANCHOR_CHAMBERS));
    }
    r
}

pub fn keel_report(n: usize) -> Result<Report> {
    let sys = keel_system(n)?;
    let expected = (1usize << (n - 1)) - n * (n - 1) / 2 - 1;
    let rows: Vec<Vec<&str>> = sys
        .relations()
        .rows()
        .iter()
        .map(|r| r.ones().map(|i| sys.labels()[i].as_str()).collect())
        .collect();
    let md = format!(
        "{} generators, {} relation rows, rank {}, quotient {}\n",
        sys.generator_count(),
        rows.len(),
        sys.rank(),
        sys.quotient_dim()
    );
    let mut r = Report::new(
        "keel",
        n,
        json!({
            "generators": sys.labels(),
            "relations": rows,
            "rank": sys.rank(),
            "quotient_dim": sys.quotient_dim(),
            "markdown": md,
        }),
    );
    let divisor_count = (1usize << (n - 1)) - n - 1;
    r.assert(Assertion::new("boundary divisors", divisor_count, sys.generator_count(), ANCHOR_KEEL));
    r.assert(Assertion::new("quotient dimension", expected, sys.quotient_dim(), ANCHOR_KEEL));
    Ok(r)
}

pub fn dict_report(n: usize, chambers: &[Chamber]) -> Result<Report> {
    let dict = divisor_dictionary(n)?;
    let md = markdown_table(
        &["divisor", "image"],
        dict.iter().map(|e| {
            vec![
                e.divisor.to_string(),
                e.image.iter().map(ToString::to_string).collect::<Vec<_>>().join(" + "),
            ]
        }),
    );
    let mut data = json!({"dictionary": dict, "markdown": md});
    let mut r_assertions = Vec::new();
    let mut notes = Vec::new();
    if let Some(c0) = reference_chamber(chambers, n) {
        let partition = verify_partition(n, c0, &dict);
        let strata: Vec<Value> = assemble_f_omega(c0, n)?
            .into_iter()
            .map(|(l, p)| json!({"label": l, "space": p.kind.to_string(), "real_dim": p.real_dim}))
            .collect();
        data["reference_chamber"] = json!({"signs": c0.signs, "strata": strata});
        data["partition"] = json!(partition);
        for (name, ok) in &partition.checks {
            r_assertions.push(Assertion::new(name.clone(), true, *ok, ANCHOR_DICT));
        }
        notes.extend(partition.failures);
        notes.extend(partition.notes);
    } else {
        notes.push("no reference chamber among the supplied chambers".into());
        r_assertions.push(Assertion::new("reference chamber present", true, false, ANCHOR_DICT));
    }
    let mut r = Report::new("dict", n, data);
    r.assertions = r_assertions;
    r.notes = notes;
    Ok(r)
}

fn expected_table(n: usize, mode: Mode) -> Option<BTreeMap<usize, usize>> {
    let nonzero: &[(usize, usize)] = match (n, mode) {
        (5, _) => &[(0, 1), (5, 1), (6, 1), (8, 1)],
        (6, Mode::Paper) => &[(0, 1), (5, 1), (6, 3), (7, 11), (8, 1), (9, 1), (11, 1)],
        _ => return None,
    };
    let mut m: BTreeMap<usize, usize> = (0..=3 * n - 7).map(|k| (k, 0)).collect();
    m.extend(nonzero.iter().copied());
    Some(m)
}

#[must_use]
pub fn betti_report(table: &BettiTable) -> Report {
    let md = markdown_table(
        &["k", "dim H_k"],
        table.dims.iter().map(|(k, d)| vec![k.to_string(), d.to_string()]),
    );
    let mut data = json!(table);
    data["markdown"] = json!(md);
    let mut r = Report::new("betti", table.n, data);
    if let Some(expected) = expected_table(table.n, table.mode) {
        for (k, e) in expected {
            r.assert(Assertion::new(format!("H{k}"), e, table.dim(k), ANCHOR_BETTI));
        }
    } else {
        r.notes.push("exhaustive mode reports without asserting".into());
    }
    for c in structural_checks(table).checks {
        r.assert(Assertion::new(c.name, true, c.passed, ANCHOR_STRUCTURE));
    }
    r.notes.clone_from(&table.diagnostics);
    r
}

/// Betti JSON in the compact form `{"n", "mode", "dims", "diagnostics"}`.
#[must_use]
pub fn betti_json(table: &BettiTable) -> String {
    let mut s = serde_json::to_string_pretty(table).expect("tables serialize");
    s.push('\n');
    s
}

/// Every invariant the engine can check for one `n`.
pub fn verify_report(n: usize, chambers: &[Chamber], mode: Mode) -> Result<Report> {
    let mut r = Report::new("verify", n, json!({}));
    let sub = [
        admissible_report(n)?,
        chambers_report(n, chambers),
        keel_report(n)?,
    ];
    for s in sub {
        for mut a in s.assertions {
            a.name = format!("{}: {}", s.kind, a.name);
            r.assert(a);
        }
    }
    if matches!(n, 5 | 6) {
        let d = dict_report(n, chambers)?;
        for mut a in d.assertions {
            a.name = format!("dict: {}", a.name);
            r.assert(a);
        }
        let basis = cycle_space_3n9(n)?;
        r.assert(Assertion::new("cycle space dimension", (n - 2) * (n - 1) / 2, basis.len(), ANCHOR_CYCLES));
        let vanishing = top_cycle_quotient(chambers, n)?;
        r.assert(Assertion::new(
            "vanishing subspace dimension",
            basis.len() - 1,
            vanishing.vanishing_dim,
            ANCHOR_CYCLES,
        ));
        let grades: &[usize] = if n == 5 { &[2] } else { &[4, 2] };
        for &g in grades {
            let random = if n == 5 { 200 } else { 10 };
            let nat = check_naturality(chambers, n, g, random, n as u64)?;
            r.assert(Assertion::new(
                format!("zero classes project to zero (grade {g}, {} pairs)", nat.pairs_checked),
                0,
                nat.failures.len(),
                ANCHOR_NATURALITY,
            ));
        }
        if let Some(c0) = reference_chamber(chambers, n) {
            let g = if n == 5 { 2 } else { 4 };
            let sys = f_omega_system(c0, n, g)?;
            r.notes.push(format!(
                "reference chamber grade {g}: {} generators, quotient {}",
                sys.generator_count(),
                sys.quotient_dim()
            ));
        }
        if n == 6 {
            let h7 = h7_system();
            r.assert(Assertion::new("rank of g_s + g_r rows", 4, h7.rank(), ANCHOR_BETTI));
        }
        let b = betti_report(&betti(n, chambers, mode)?);
        for mut a in b.assertions {
            a.name = format!("betti: {}", a.name);
            r.assert(a);
        }
        r.notes.extend(b.notes);
    }
    Ok(r)
}
