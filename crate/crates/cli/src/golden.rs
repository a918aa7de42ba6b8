//! Golden regression tables.
//!
//! A fixture is a JSON file `{id, citation, kind, rows}`. Each row names an
//! input and the expected output; the runner recomputes the output and
//! reports a diff line for every row that disagrees.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use liepar_core::characters;
use liepar_core::rootsys::{RootSystem, Weight};
use liepar_core::schurweyl;
use liepar_core::toric;
use liepar_core::torsion;
use liepar_core::Budget;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GoldenTable {
    pub id: String,
    pub citation: String,
    pub kind: String,
    pub rows: Vec<Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableResult {
    pub id: String,
    pub kind: String,
    pub rows: usize,
    pub diffs: Vec<String>,
}

impl TableResult {
    pub fn passed(&self) -> bool {
        self.diffs.is_empty()
    }
}

pub fn load_dir(dir: &Path) -> anyhow::Result<Vec<GoldenTable>> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .with_context(|| format!("fixture directory {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        bail!("no fixtures in {}", dir.display());
    }
    let mut tables = Vec::new();
    let mut ids = BTreeSet::new();
    for p in paths {
        let text = std::fs::read_to_string(&p).with_context(|| format!("reading {}", p.display()))?;
        let t: GoldenTable = serde_json::from_str(&text).with_context(|| format!("parsing {}", p.display()))?;
        if t.citation.trim().is_empty() {
            bail!("fixture {} has an empty citation", t.id);
        }
        if !ids.insert(t.id.clone()) {
            bail!("duplicate fixture id {}", t.id);
        }
        tables.push(t);
    }
    Ok(tables)
}

pub fn run_dir(dir: &Path) -> anyhow::Result<Vec<TableResult>> {
    Ok(load_dir(dir)?.iter().map(run_table).collect())
}

pub fn run_table(t: &GoldenTable) -> TableResult {
    let budget = Budget::from_env();
    let diffs = t
        .rows
        .iter()
        .enumerate()
        .filter_map(|(i, row)| match check_row(&t.kind, row, &budget) {
            Ok(None) => None,
            Ok(Some(d)) => Some(format!("row {i}: {d}")),
            Err(e) => Some(format!("row {i}: error: {e:#}")),
        })
        .collect();
    TableResult {
        id: t.id.clone(),
        kind: t.kind.clone(),
        rows: t.rows.len(),
        diffs,
    }
}

pub fn render(results: &[TableResult]) -> String {
    let mut s = String::new();
    for r in results {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "{status} {} ({} rows)", r.id, r.rows);
        for d in &r.diffs {
            let _ = writeln!(s, "    {d}");
        }
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    let _ = writeln!(s, "{} tables, {} failed", results.len(), failed);
    s
}

fn field<'a>(row: &'a Value, key: &str) -> anyhow::Result<&'a Value> {
    row.get(key).with_context(|| format!("missing field {key:?}"))
}

fn str_field<'a>(row: &'a Value, key: &str) -> anyhow::Result<&'a str> {
    field(row, key)?.as_str().with_context(|| format!("field {key:?} is not a string"))
}

fn u64_field(row: &Value, key: &str) -> anyhow::Result<u64> {
    field(row, key)?.as_u64().with_context(|| format!("field {key:?} is not an integer"))
}

fn compare(label: &str, expected: &Value, got: Value) -> Option<String> {
    (expected != &got).then(|| format!("{label}: expected {expected}, got {got}"))
}

fn decomposition(rs: &RootSystem, ch: &characters::Character) -> Value {
    let m: BTreeMap<String, Value> = ch
        .constituents(rs)
        .into_iter()
        .map(|(w, k)| (w.label(), json!(i64::try_from(&k).unwrap_or(i64::MAX))))
        .collect();
    json!(m)
}

fn check_row(kind: &str, row: &Value, budget: &Budget) -> anyhow::Result<Option<String>> {
    match kind {
        "torsion_primes" => {
            let ty = str_field(row, "type")?;
            let rs = RootSystem::from_label(ty)?;
            Ok(compare(ty, field(row, "primes")?, json!(torsion::torsion_primes_fast(&rs).as_slice())))
        }
        "minimal_orbit_primes" => {
            let ty = str_field(row, "type")?;
            let rs = RootSystem::from_label(ty)?;
            let got = torsion::minimal_orbit_parity_primes(&rs)?;
            Ok(compare(ty, field(row, "primes")?, json!(got.as_slice())))
        }
        "minimal_orbit_dimension" => {
            let ty = str_field(row, "type")?;
            let rs = RootSystem::from_label(ty)?;
            Ok(compare(ty, field(row, "dimension")?, json!(rs.minimal_orbit_dimension()?)))
        }
        "dual_coxeter_number" => {
            let ty = str_field(row, "type")?;
            let rs = RootSystem::from_label(ty)?;
            Ok(compare(ty, field(row, "value")?, json!(rs.dual_coxeter_number()?)))
        }
        "weyl_order" => {
            let ty = str_field(row, "type")?;
            let rs = RootSystem::from_label(ty)?;
            Ok(compare(ty, field(row, "order")?, json!(u64::try_from(rs.weyl_order())?)))
        }
        "decomposition" => {
            let ty = str_field(row, "type")?;
            let rs = RootSystem::from_label(ty)?;
            let parse = |s: &Value| -> anyhow::Result<Weight> {
                Ok(Weight::parse(rs.rank(), s.as_str().context("weight is not a string")?)?)
            };
            let (label, ch) = if let Some(t) = row.get("tensor") {
                let t = t.as_array().context("tensor is not a list")?;
                if t.len() != 2 {
                    bail!("tensor needs two weights");
                }
                let (a, b) = (parse(&t[0])?, parse(&t[1])?);
                (format!("{ty} {a} x {b}"), characters::tensor_decompose(&rs, &a, &b, budget)?)
            } else if let Some(e) = row.get("exterior") {
                let w = parse(field(e, "weight")?)?;
                let k = u64_field(e, "power")? as usize;
                (format!("{ty} L^{k} {w}"), characters::exterior_power_decompose(&rs, &w, k, budget)?)
            } else {
                bail!("decomposition row needs tensor or exterior");
            };
            Ok(compare(&label, field(row, "expected")?, decomposition(&rs, &ch)))
        }
        "simple_dims" => {
            let d = u64_field(row, "d")? as usize;
            let p = u64_field(row, "p")?;
            let mut dims: Vec<usize> = schurweyl::simple_dims_table(d, p, budget)?
                .into_iter()
                .map(|(_, k)| k)
                .collect();
            dims.sort_unstable();
            Ok(compare(&format!("d={d} p={p}"), field(row, "dims")?, json!(dims)))
        }
        "toric_poincare" => {
            let name = str_field(row, "fixture")?;
            let (fan, tau) = match name {
                "conifold" => toric::conifold_resolution(),
                a if a.starts_with('A') => toric::a_n_resolution(a[1..].parse().context("A_n fixture index")?),
                _ => bail!("unknown toric fixture {name}"),
            };
            let seed = row.get("seed").and_then(Value::as_u64).unwrap_or(0);
            let p = toric::paving(&fan, &tau, seed)?;
            Ok(compare(name, field(row, "poincare")?, json!(p.poincare.0)))
        }
        other => bail!("unknown fixture kind {other:?}"),
    }
}
