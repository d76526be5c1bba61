//! Plain data tables for `emit-table` and `char`.

use std::collections::BTreeMap;

use anyhow::{bail, Result};
use mincyc_paths::{count_paths, Restriction};
use mincyc_qchar::{gaussian_binomial, int_coeffs, kostka_closed, restricted_kostka, vir_identity_sides, QPoly};
use mincyc_quotients::{char_m_restricted_truncated, char_m_truncated, char_w_truncated, CharTable, QuotientEngine};
use serde::Serialize;

use crate::config::Format;
use crate::report::REPORT_VERSION;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub version: String,
    pub kind: String,
    pub params: BTreeMap<String, String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(kind: &str, params: &[(&str, String)], columns: &[&str]) -> Table {
        Table {
            version: REPORT_VERSION.into(),
            kind: kind.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("table serializes") + "\n",
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.columns).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
            }
            Format::Table => {
                let widths: Vec<usize> = (0..self.columns.len())
                    .map(|i| self.rows.iter().map(|r| r[i].len()).chain([self.columns[i].len()]).max().unwrap_or(0))
                    .collect();
                let line = |cells: &[String]| {
                    cells.iter().zip(&widths).map(|(c, w)| format!("{:<w$}", c, w = *w)).collect::<Vec<_>>().join("  ").trim_end().to_string()
                };
                let mut out = line(&self.columns) + "\n";
                for r in &self.rows {
                    out.push_str(&line(r));
                    out.push('\n');
                }
                out
            }
        }
    }
}

/// Which table `emit-table` produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableKind {
    Qbinom,
    Kostka,
    RestrictedKostka,
    #[value(name = "charW")]
    CharW,
    #[value(name = "charM")]
    CharM,
    #[value(name = "charMr")]
    CharMr,
    Paths,
    Virasoro,
}

/// Optional parameters shared by the table kinds.
#[derive(Clone, Debug, Default)]
pub struct TableParams {
    pub n: Option<usize>,
    pub l: Option<usize>,
    pub r: Option<usize>,
    pub m: Option<i64>,
    pub big_l: Option<i64>,
    pub max_deg: Option<i64>,
    pub order: Option<i64>,
}

fn coeffs(p: &QPoly) -> String {
    int_coeffs(p).iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T> {
    match v {
        Some(x) => Ok(x),
        None => bail!("--{} is required for this table", name),
    }
}

/// Builds the requested table. Parameter errors are reported as `Err`.
pub fn emit_table(kind: TableKind, p: &TableParams) -> Result<Table> {
    let n_max = p.n.unwrap_or(6);
    Ok(match kind {
        TableKind::Qbinom => {
            let mut t = Table::new("qbinom", &[("N", n_max.to_string())], &["N", "l", "coefficients"]);
            for n in 0..=n_max as i64 {
                for l in 0..=n {
                    t.push(vec![n.to_string(), l.to_string(), coeffs(&gaussian_binomial(n, l))]);
                }
            }
            t
        }
        TableKind::Kostka => {
            let mut t = Table::new("kostka", &[("N", n_max.to_string())], &["m", "N", "coefficients"]);
            for n in 0..=n_max as i64 {
                for m in (0..=n).filter(|m| (n - m) % 2 == 0) {
                    t.push(vec![m.to_string(), n.to_string(), coeffs(&kostka_closed(m, n))]);
                }
            }
            t
        }
        TableKind::RestrictedKostka => {
            let r = need(p.r, "r")?;
            if r < 3 {
                bail!("--r must be at least 3");
            }
            let k = r - 2;
            let mut t = Table::new("restricted-kostka", &[("N", n_max.to_string()), ("r", r.to_string())], &["k", "m", "N", "coefficients"]);
            for n in 0..=n_max {
                for m in (0..=n as i64).filter(|m| (n as i64 - m) % 2 == 0) {
                    t.push(vec![k.to_string(), m.to_string(), n.to_string(), coeffs(&restricted_kostka(k, m, n))]);
                }
            }
            t
        }
        TableKind::CharW | TableKind::CharM | TableKind::CharMr => {
            let space = match kind {
                TableKind::CharW => "W",
                TableKind::CharM => "M",
                _ => "Mr",
            };
            char_table(space, need(p.n, "N")?, need(p.l, "l")?, p.r, p.max_deg.unwrap_or(6))?.0
        }
        TableKind::Paths => {
            let mut params = vec![("N", n_max.to_string())];
            if let Some(r) = p.r {
                params.push(("r", r.to_string()));
            }
            let restriction = match p.r {
                Some(r) if r < 2 => bail!("--r must be at least 2"),
                Some(r) => Restriction::Level(r),
                None => Restriction::Classical,
            };
            let mut t = Table::new("paths", &params, &["N", "m", "count"]);
            for n in 0..=n_max {
                for m in (0..=n as i64).filter(|m| (n as i64 - m) % 2 == 0) {
                    t.push(vec![n.to_string(), m.to_string(), count_paths(n, m, restriction).to_string()]);
                }
            }
            t
        }
        TableKind::Virasoro => {
            let (r, m, l, order) = vir_params(p)?;
            let sides = vir_identity_sides(r, m, l, order);
            let mut t = Table::new(
                "virasoro",
                &[("r", r.to_string()), ("m", m.to_string()), ("L", l.to_string()), ("order", order.to_string())],
                &["side", "series"],
            );
            t.push(vec!["lhs".into(), sides.lhs.to_string()]);
            t.push(vec!["rhs".into(), sides.rhs.to_string()]);
            t
        }
    })
}

/// Validates the Virasoro sector parameters.
pub fn vir_params(p: &TableParams) -> Result<(i64, i64, i64, i64)> {
    let r = need(p.r, "r")? as i64;
    let m = need(p.m, "m")?;
    let l = need(p.big_l, "L")?;
    let order = p.order.unwrap_or(10);
    if r < 3 || m < 0 || m > r - 2 || l < 0 || order < 0 {
        bail!("need r >= 3, 0 <= m <= r-2, L >= 0 and order >= 0");
    }
    Ok((r, m, l, order))
}

/// A character table for `W`, `M` or the restricted quotient `Mr`, and
/// whether every degree matched the prediction.
pub fn char_table(space: &str, n: usize, l: usize, r: Option<usize>, max_deg: i64) -> Result<(Table, bool)> {
    if n == 0 || l > n {
        bail!("need 1 <= N and 0 <= l <= N");
    }
    let mut engine = QuotientEngine::new(n);
    let table: CharTable = match (space, r) {
        ("W", _) => char_w_truncated(&mut engine, l, max_deg)?,
        ("M", _) => char_m_truncated(&mut engine, l, max_deg)?,
        ("Mr", Some(r)) if r >= 3 => char_m_restricted_truncated(&mut engine, l, r, max_deg)?,
        ("Mr", _) => bail!("the restricted character needs --r >= 3"),
        _ => bail!("unknown space '{}'", space),
    };
    let mut params = vec![("N", n.to_string()), ("l", l.to_string()), ("max_deg", max_deg.to_string())];
    if let (Some(r), "Mr") = (r, space) {
        params.push(("r", r.to_string()));
    }
    let mut t = Table::new(&format!("char{}", space), &params, &["degree", "dim", "expected", "status"]);
    let mut ok = true;
    for (d, (a, b)) in table.degrees().zip(table.dims.iter().zip(&table.expected)) {
        ok &= a == b;
        t.push(vec![d.to_string(), a.to_string(), b.to_string(), if a == b { "pass" } else { "fail" }.into()]);
    }
    Ok((t, ok))
}
