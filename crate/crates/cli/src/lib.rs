//! The `liepar` command line: argument parsing, dispatch and output formatting.
//!
//! [`run`] is the whole program minus process plumbing, so tests can drive it
//! in-process. Exit codes: 0 success, 1 domain or input error, 2 usage error.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use liepar_core::characters::{self, Character};
use liepar_core::intform;
use liepar_core::rootsys::{RootSystem, Weight};
use liepar_core::schurweyl::{self, Partition};
use liepar_core::toric::{self, Ambient, Fan};
use liepar_core::torsion::{self, OracleResult, ORACLE_RANK_LIMIT};
use liepar_core::weyl::WeylContext;
use liepar_core::Budget;

pub mod golden;

#[derive(Debug, Parser)]
#[command(name = "liepar", version, about = "Exact Lie-theoretic tables: root data, torsion primes, characters, intersection forms, Specht modules, toric pavings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cartan matrix, roots, highest roots, minuscule weights and related invariants.
    #[command(after_help = "Reference: Bourbaki, Lie Groups and Lie Algebras, Ch. VI, Plates I-IX.")]
    Rootsys(RootsysArgs),
    /// Minimal double coset representatives and the cell polynomials of their strata.
    #[command(after_help = "Reference: Humphreys, Reflection Groups and Coxeter Groups, Ch. 1 and 5; Bjorner-Brenti, Combinatorics of Coxeter Groups, Ch. 2.")]
    Weyl(WeylArgs),
    /// Torsion primes by the coroot-coefficient criterion and by subsystem enumeration.
    #[command(after_help = "Reference: Steinberg, Torsion in reductive groups, Adv. Math. 15 (1975).")]
    Torsion(TorsionArgs),
    /// Weyl dimensions, weight multiplicities, tensor and exterior power decompositions.
    #[command(after_help = "Reference: Humphreys, Introduction to Lie Algebras and Representation Theory, Sections 22-24; Bourbaki Ch. VIII, Section 13.")]
    Char(CharArgs),
    /// Ranks and radicals of integer intersection forms over Q and F_p.
    #[command(after_help = "Reference: de Cataldo-Migliorini, The decomposition theorem, perverse sheaves and the topology of algebraic maps, Bull. AMS 46 (2009).")]
    Intform(IntformArgs),
    /// Specht module Gram matrices and simple module dimensions of symmetric groups.
    #[command(after_help = "Reference: James, The Representation Theory of the Symmetric Groups, LNM 682 (1978).")]
    Schurweyl(SchurweylArgs),
    /// Nilpotent orbits of gl_n by Jordan type: dimension, centralizer, resolution.
    #[command(after_help = "Reference: Collingwood-McGovern, Nilpotent Orbits in Semisimple Lie Algebras, Ch. 6-7.")]
    Nilpotent(NilpotentArgs),
    /// Fan validation, star subdivision, orbit posets and affine pavings of toric fibers.
    #[command(after_help = "Reference: Fulton, Introduction to Toric Varieties, Ch. 2-3; Danilov, The geometry of toric varieties (1978).")]
    Toric(ToricArgs),
    /// Run the golden regression tables against live computation.
    #[command(after_help = "Reference: each fixture carries its own literature citation.")]
    Golden(GoldenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Debug, Args)]
pub struct RootsysArgs {
    /// Cartan type, e.g. E8 or A2xG2.
    #[arg(long = "type", value_name = "TYPE")]
    pub ty: String,
    /// Also list all roots in simple-root coordinates.
    #[arg(long)]
    pub roots: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub emit: Format,
}

#[derive(Debug, Args)]
pub struct WeylArgs {
    #[arg(long = "type", value_name = "TYPE")]
    pub ty: String,
    /// Left parabolic subset I as 1-based simple indices, e.g. 1,3.
    #[arg(long, value_delimiter = ',')]
    pub left: Vec<usize>,
    /// Right parabolic subset J as 1-based simple indices.
    #[arg(long, value_delimiter = ',')]
    pub right: Vec<usize>,
    #[arg(long, value_enum, default_value = "json")]
    pub emit: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TorsionMethod {
    Fast,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TorsionEmit {
    Primes,
    Certificates,
}

#[derive(Debug, Args)]
pub struct TorsionArgs {
    #[arg(long = "type", value_name = "TYPE")]
    pub ty: String,
    #[arg(long, value_enum, default_value = "fast")]
    pub method: TorsionMethod,
    #[arg(long, value_enum, default_value = "primes")]
    pub emit: TorsionEmit,
    /// Use the sharper generation bounds for types B and D.
    #[arg(long)]
    pub improved_bounds: bool,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("op").required(true).args(["weight", "tensor", "exterior", "certify_generation"])))]
pub struct CharArgs {
    #[arg(long = "type", value_name = "TYPE")]
    pub ty: String,
    /// Dominant weight, e.g. w1+w7 or 2w8: dimension and dominant multiplicities.
    #[arg(long)]
    pub weight: Option<String>,
    /// Two dominant weights separated by a comma, e.g. w8,w8.
    #[arg(long)]
    pub tensor: Option<String>,
    /// Exterior power as weight^k, e.g. w4^2.
    #[arg(long)]
    pub exterior: Option<String>,
    /// Find and verify tensor words generating every fundamental weight.
    #[arg(long)]
    pub certify_generation: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub emit: Format,
}

#[derive(Debug, Args)]
pub struct IntformArgs {
    /// JSON file with one form {label, n, rows} or an array of them.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Prime for the reduction; without it only rational data is reported.
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    pub emit: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchurEmit {
    Dims,
    Gram,
    Tsv,
}

#[derive(Debug, Args)]
pub struct SchurweylArgs {
    /// Degree of the symmetric group.
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub p: u64,
    #[arg(long, value_enum, default_value = "dims")]
    pub emit: SchurEmit,
}

#[derive(Debug, Args)]
pub struct NilpotentArgs {
    /// Jordan type, e.g. 3,2,2.
    #[arg(long)]
    pub partition: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub emit: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ToricEmit {
    Json,
    Cells,
    Poincare,
}

#[derive(Debug, Args)]
pub struct ToricArgs {
    /// Fan file {rank, rays, cones}.
    #[arg(long)]
    pub fan: PathBuf,
    /// Ambient cone file {rank, rays}.
    #[arg(long)]
    pub tau: Option<PathBuf>,
    /// Star-subdivide at this primitive vector before anything else; repeatable.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, num_args = 1)]
    pub subdivide: Vec<i64>,
    /// Compute the affine paving of the fiber over the fixed point of tau.
    #[arg(long, requires = "tau")]
    pub paving: bool,
    /// Seed for drawing the generic point in the interior of tau.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    pub emit: ToricEmit,
}

#[derive(Debug, Args)]
pub struct GoldenArgs {
    /// Fixture directory.
    #[arg(long, default_value = concat!(env!("CARGO_MANIFEST_DIR"), "/golden"))]
    pub dir: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    pub emit: Format,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let budget = Budget::from_env();
    match dispatch(&cli.command, &budget) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e:#}\n"),
        },
    }
}

fn dispatch(cmd: &Command, budget: &Budget) -> anyhow::Result<(u8, String)> {
    let out = match cmd {
        Command::Rootsys(a) => rootsys_cmd(a)?,
        Command::Weyl(a) => weyl_cmd(a, budget)?,
        Command::Torsion(a) => torsion_cmd(a)?,
        Command::Char(a) => char_cmd(a, budget)?,
        Command::Intform(a) => intform_cmd(a)?,
        Command::Schurweyl(a) => schurweyl_cmd(a, budget)?,
        Command::Nilpotent(a) => nilpotent_cmd(a)?,
        Command::Toric(a) => toric_cmd(a)?,
        Command::Golden(a) => return golden_cmd(a),
    };
    Ok((0, out))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn system(ty: &str) -> anyhow::Result<RootSystem> {
    Ok(RootSystem::from_label(ty)?)
}

fn weight(rs: &RootSystem, s: &str) -> anyhow::Result<Weight> {
    let w = Weight::parse(rs.rank(), s)?;
    rs.require_dominant(&w)?;
    Ok(w)
}

fn simple_subset(rs: &RootSystem, one_based: &[usize]) -> anyhow::Result<BTreeSet<usize>> {
    one_based
        .iter()
        .map(|&i| {
            if i == 0 || i > rs.rank() {
                bail!("simple index {i} out of range 1..={}", rs.rank())
            }
            Ok(i - 1)
        })
        .collect()
}

fn rootsys_cmd(a: &RootsysArgs) -> anyhow::Result<String> {
    let rs = system(&a.ty)?;
    let irreducible = rs.is_irreducible();
    let labels = |ws: Vec<usize>| -> Vec<String> { ws.into_iter().map(|i| format!("w{}", i + 1)).collect() };
    let order = rs.weyl_order();
    let mut v = json!({
        "type": rs.label().to_string(),
        "rank": rs.rank(),
        "cartan": rs.cartan(),
        "positive_roots": rs.num_positive_roots(),
        "weyl_order": u64::try_from(order).map(Value::from).unwrap_or_else(|_| Value::from(order.to_string())),
        "minuscule": labels(rs.minuscule_weights()),
        "fundamental_group": rs.fundamental_group().0,
    });
    if irreducible {
        let cc = rs.coroot_coefficients()?;
        v["highest_root"] = json!(rs.highest_root()?.label());
        v["highest_short_root"] = json!(rs.highest_short_root()?.label());
        v["coroot_coefficients"] = json!(cc.coefficients);
        v["coxeter_number"] = json!(rs.coxeter_number()?);
        v["dual_coxeter_number"] = json!(rs.dual_coxeter_number()?);
        v["minimal_orbit_dimension"] = json!(rs.minimal_orbit_dimension()?);
    }
    if a.roots {
        v["roots"] = json!(rs.roots());
    }
    Ok(match a.emit {
        Format::Json => pretty(&v),
        Format::Tsv | Format::Text => {
            let mut s = String::new();
            for (k, val) in v.as_object().expect("object") {
                let _ = writeln!(s, "{k}\t{val}");
            }
            s
        }
    })
}

fn weyl_cmd(a: &WeylArgs, budget: &Budget) -> anyhow::Result<String> {
    let rs = system(&a.ty)?;
    let ctx = WeylContext::new(&rs);
    let left = simple_subset(&rs, &a.left)?;
    let right = simple_subset(&rs, &a.right)?;
    let reps = ctx.double_quotient_reps(&left, &right, budget)?;
    let mut rows = Vec::with_capacity(reps.len());
    let mut total = liepar_core::weyl::CellPolynomial::zero();
    for w in &reps {
        let poly = ctx.stratum_poincare(&left, &right, w, budget)?;
        total = total.add(&poly);
        rows.push((w.word_label(), w.len(), poly));
    }
    let quotient = ctx.quotient_poincare(&right, budget)?;
    let one_based = |s: &BTreeSet<usize>| s.iter().map(|i| i + 1).collect::<Vec<_>>();
    Ok(match a.emit {
        Format::Json => pretty(&json!({
            "type": rs.label().to_string(),
            "weyl_order": u64::try_from(rs.weyl_order()).ok(),
            "left": one_based(&left),
            "right": one_based(&right),
            "representatives": rows.iter().map(|(w, l, p)| json!({
                "word": w, "length": l, "stratum_poincare": p.0, "cells": p.to_string(),
            })).collect::<Vec<_>>(),
            "quotient_poincare": quotient.0,
            "strata_sum_to_quotient": total == quotient,
        })),
        Format::Tsv | Format::Text => {
            let mut s = String::from("word\tlength\tstratum_poincare\n");
            for (w, l, p) in &rows {
                let _ = writeln!(s, "{w}\t{l}\t{p}");
            }
            s
        }
    })
}

fn oracle(rs: &RootSystem) -> anyhow::Result<(&'static str, OracleResult)> {
    if rs.rank() <= ORACLE_RANK_LIMIT {
        Ok(("subsystem-enumeration", torsion::torsion_primes_subsystem_oracle(rs)?))
    } else {
        Ok(("extended-diagram", torsion::torsion_primes_extended_diagram(rs)))
    }
}

fn torsion_cmd(a: &TorsionArgs) -> anyhow::Result<String> {
    let rs = system(&a.ty)?;
    let fast = torsion::torsion_primes_fast(&rs);
    let mut v = json!({
        "type": rs.label().to_string(),
        "method": format!("{:?}", a.method).to_lowercase(),
    });
    let oracle_result = match a.method {
        TorsionMethod::Fast => None,
        _ => Some(oracle(&rs)?),
    };
    match (&a.method, &oracle_result) {
        (TorsionMethod::Fast, _) => v["primes"] = json!(fast.as_slice()),
        (TorsionMethod::Oracle, Some((_, o))) => v["primes"] = json!(o.primes.as_slice()),
        (TorsionMethod::Both, Some((_, o))) => {
            v["primes"] = json!(fast.as_slice());
            v["fast_primes"] = json!(fast.as_slice());
            v["oracle_primes"] = json!(o.primes.as_slice());
            v["agreement"] = json!(fast == o.primes);
        }
        _ => unreachable!("oracle computed for non-fast methods"),
    }
    if let Some((algorithm, o)) = &oracle_result {
        v["oracle_algorithm"] = json!(algorithm);
        v["subsystems_examined"] = json!(o.subsystems_examined);
        if a.emit == TorsionEmit::Certificates {
            v["certificates"] = o
                .certificates
                .iter()
                .map(|c| {
                    let mut cv = serde_json::to_value(c).expect("serializable");
                    cv["verified"] = json!(torsion::verify_certificate(&rs, c));
                    cv
                })
                .collect();
        }
    } else if a.emit == TorsionEmit::Certificates {
        bail!("certificates come from the oracle; use --method oracle or --method both");
    }
    if rs.is_irreducible() {
        v["minimal_orbit_primes"] = json!(torsion::minimal_orbit_parity_primes(&rs)?.as_slice());
        let bound = torsion::tilting_generation_bound(&rs, a.improved_bounds)?;
        v["generation_bound"] = json!(bound.to_string());
        v["improved_bounds"] = json!(a.improved_bounds);
    }
    Ok(pretty(&v))
}

fn decomposition_rows(rs: &RootSystem, ch: &Character) -> anyhow::Result<Vec<Value>> {
    ch.constituents(rs)
        .into_iter()
        .map(|(w, m)| {
            Ok(json!({
                "weight": w.label(),
                "coords": w.0,
                "multiplicity": big(&m),
                "dimension": big(&characters::weyl_dimension(rs, &w)?),
            }))
        })
        .collect()
}

fn big(x: &num_bigint::BigInt) -> Value {
    i64::try_from(x).map(Value::from).unwrap_or_else(|_| Value::from(x.to_string()))
}

fn rows_tsv(rows: &[Value]) -> String {
    let mut s = String::from("weight\tmultiplicity\tdimension\n");
    for r in rows {
        let _ = writeln!(
            s,
            "{}\t{}\t{}",
            r["weight"].as_str().unwrap_or_default(),
            r["multiplicity"],
            r["dimension"]
        );
    }
    s
}

fn char_cmd(a: &CharArgs, budget: &Budget) -> anyhow::Result<String> {
    let rs = system(&a.ty)?;
    let ty = rs.label().to_string();
    let (v, rows) = if let Some(w) = &a.weight {
        let lambda = weight(&rs, w)?;
        let dom = characters::dominant_multiplicities(&rs, &lambda, budget)?;
        let rows: Vec<Value> = dom
            .iter()
            .rev()
            .map(|(mu, m)| json!({"weight": mu.label(), "coords": mu.0, "multiplicity": big(m), "dimension": Value::Null}))
            .collect();
        let v = json!({
            "type": ty,
            "operation": "weight",
            "input": lambda.label(),
            "dimension": big(&characters::weyl_dimension(&rs, &lambda)?),
            "dominant_multiplicities": rows,
        });
        (v, rows)
    } else if let Some(t) = &a.tensor {
        let (l, m) = t
            .split_once(',')
            .ok_or_else(|| anyhow::anyhow!("--tensor expects two weights separated by a comma"))?;
        let (l, m) = (weight(&rs, l)?, weight(&rs, m)?);
        let ch = characters::tensor_decompose(&rs, &l, &m, budget)?;
        let rows = decomposition_rows(&rs, &ch)?;
        let v = json!({
            "type": ty,
            "operation": "tensor",
            "input": [l.label(), m.label()],
            "dimension": big(&ch.dimension(&rs)?),
            "decomposition": rows,
        });
        (v, rows)
    } else if let Some(e) = &a.exterior {
        let (l, k) = e
            .split_once('^')
            .ok_or_else(|| anyhow::anyhow!("--exterior expects weight^k, e.g. w4^2"))?;
        let lambda = weight(&rs, l)?;
        let k: usize = k.trim().parse().with_context(|| format!("bad exterior degree {k:?}"))?;
        let ch = characters::exterior_power_decompose(&rs, &lambda, k, budget)?;
        let rows = decomposition_rows(&rs, &ch)?;
        let v = json!({
            "type": ty,
            "operation": "exterior",
            "input": {"weight": lambda.label(), "power": k},
            "dimension": big(&ch.dimension(&rs)?),
            "decomposition": rows,
        });
        (v, rows)
    } else {
        let cert = characters::generation_certificate(&rs, budget)?;
        let verified = characters::verify_generation_certificate(&rs, &cert, budget)?;
        let entries: Vec<Value> = cert
            .entries
            .iter()
            .map(|e| {
                json!({
                    "fundamental": format!("w{}", e.fundamental + 1),
                    "word": e.word.iter().map(Weight::label).collect::<Vec<_>>(),
                    "multiplicity": big(&e.multiplicity),
                })
            })
            .collect();
        let v = json!({
            "type": ty,
            "operation": "certify-generation",
            "generators": cert.generators.iter().map(Weight::label).collect::<Vec<_>>(),
            "certificates": entries,
            "verified": verified,
        });
        if a.emit != Format::Json {
            let mut s = String::from("fundamental\tword\tmultiplicity\n");
            for e in &entries {
                let word: Vec<&str> = e["word"].as_array().unwrap().iter().map(|w| w.as_str().unwrap()).collect();
                let _ = writeln!(s, "{}\t{}\t{}", e["fundamental"].as_str().unwrap(), word.join(" x "), e["multiplicity"]);
            }
            return Ok(s);
        }
        return Ok(pretty(&v));
    };
    Ok(match a.emit {
        Format::Json => pretty(&v),
        Format::Tsv | Format::Text => rows_tsv(&rows),
    })
}

fn intform_cmd(a: &IntformArgs) -> anyhow::Result<String> {
    let forms = intform::forms_from_json(&read(&a.input)?)?;
    let mut per_form = Vec::with_capacity(forms.len());
    for f in &forms {
        let rr = intform::rank_and_radical(f, a.p)?;
        let mut fv = serde_json::to_value(&rr)?;
        fv["label"] = json!(f.label());
        fv["size"] = json!(f.size());
        fv["bad_primes"] = json!(intform::bad_primes(f));
        per_form.push(fv);
    }
    let mut v = json!({ "p": a.p, "forms": per_form });
    if let Some(p) = a.p {
        v["report"] = serde_json::to_value(intform::decomposition_report(&forms, p)?)?;
    }
    Ok(match a.emit {
        Format::Json => pretty(&v),
        Format::Tsv | Format::Text => {
            let mut s = String::from("label\tsize\trank_q\trank_fp\tbad_primes\n");
            for f in &per_form {
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}",
                    f["label"].as_str().unwrap_or_default(),
                    f["size"],
                    f["rank_q"],
                    f["rank_fp"],
                    f["bad_primes"]
                );
            }
            s
        }
    })
}

fn schurweyl_cmd(a: &SchurweylArgs, budget: &Budget) -> anyhow::Result<String> {
    if !liepar_core::linalg::is_prime(a.p) {
        return Err(liepar_core::Error::NotPrime(a.p).into());
    }
    match a.emit {
        SchurEmit::Dims | SchurEmit::Tsv => {
            let table = schurweyl::simple_dims_table(a.d, a.p, budget)?;
            let rows: Vec<Value> = table
                .iter()
                .map(|(l, k)| json!({"partition": l.to_string(), "specht_dimension": big(&l.hook_length_count()), "simple_dimension": k}))
                .collect();
            if a.emit == SchurEmit::Tsv {
                let mut s = String::from("partition\tspecht_dimension\tsimple_dimension\n");
                for r in &rows {
                    let _ = writeln!(s, "{}\t{}\t{}", r["partition"].as_str().unwrap(), r["specht_dimension"], r["simple_dimension"]);
                }
                return Ok(s);
            }
            let sum_sq: num_bigint::BigInt = Partition::all(a.d)
                .iter()
                .map(|l| {
                    let f = l.hook_length_count();
                    &f * &f
                })
                .sum();
            Ok(pretty(&json!({
                "d": a.d,
                "p": a.p,
                "dims": rows,
                "sum_of_squared_specht_dimensions": big(&sum_sq),
                "factorial": big(&schurweyl::factorial(a.d)),
            })))
        }
        SchurEmit::Gram => {
            let mut grams = Vec::new();
            for l in Partition::all(a.d).into_iter().filter(|l| l.is_p_regular(a.p)) {
                let g = schurweyl::specht_gram(&l, budget)?;
                let rr = intform::rank_and_radical(&g.form, Some(a.p))?;
                grams.push(json!({
                    "partition": l.to_string(),
                    "basis": g.basis,
                    "matrix": g.form.matrix().iter().map(|r| r.iter().map(big).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "rank_q": rr.rank_q,
                    "rank_fp": rr.rank_fp,
                }));
            }
            Ok(pretty(&json!({"d": a.d, "p": a.p, "grams": grams})))
        }
    }
}

fn nilpotent_cmd(a: &NilpotentArgs) -> anyhow::Result<String> {
    let l: Partition = a.partition.parse()?;
    let o = schurweyl::nilpotent_orbit_data(&l, a.n)?;
    Ok(match a.emit {
        Format::Json => {
            let mut v = serde_json::to_value(&o)?;
            v["partition"] = json!(o.partition.to_string());
            v["conjugate"] = json!(o.conjugate.to_string());
            pretty(&v)
        }
        Format::Tsv | Format::Text => format!(
            "partition\t{}\nconjugate\t{}\ndimension\t{}\ncentralizer_levi\t{}\nresolution_parabolic\t{:?}\n",
            o.partition, o.conjugate, o.dimension, o.centralizer_levi, o.resolution_parabolic
        ),
    })
}

#[derive(serde::Deserialize)]
struct TauFile {
    rank: usize,
    rays: Vec<Vec<i64>>,
}

fn toric_cmd(a: &ToricArgs) -> anyhow::Result<String> {
    let mut fan = Fan::from_json(&read(&a.fan)?)?;
    if !a.subdivide.is_empty() {
        if !a.subdivide.len().is_multiple_of(fan.rank()) {
            bail!("--subdivide vectors must have {} coordinates", fan.rank());
        }
        for v in a.subdivide.chunks(fan.rank()) {
            fan = toric::star_subdivision(&fan, v)?;
        }
    }
    let tau = match &a.tau {
        Some(path) => {
            let t: TauFile = serde_json::from_str(&read(path)?).context("parsing tau file")?;
            if t.rank != fan.rank() {
                bail!("tau has rank {} but the fan has rank {}", t.rank, fan.rank());
            }
            Some(Ambient::new(t.rank, t.rays)?)
        }
        None => None,
    };
    let seed_header = format!("# seed {}\n", a.seed);
    if a.paving {
        let tau = tau.as_ref().expect("clap enforces --tau with --paving");
        let p = toric::paving(&fan, tau, a.seed)?;
        return Ok(match a.emit {
            ToricEmit::Poincare => format!("{seed_header}{}\n", p.poincare),
            ToricEmit::Json | ToricEmit::Cells => {
                let mut v = serde_json::to_value(&p)?;
                v["poincare_string"] = json!(p.poincare.to_string());
                pretty(&v)
            }
        });
    }
    if a.emit == ToricEmit::Poincare {
        bail!("--emit poincare needs --paving");
    }
    let report = toric::validate_fan(&fan, tau.as_ref());
    let orbits = toric::orbit_poset(&fan);
    Ok(pretty(&json!({
        "seed": a.seed,
        "fan": fan.to_file(),
        "report": report,
        "orbits": orbits,
    })))
}

fn golden_cmd(a: &GoldenArgs) -> anyhow::Result<(u8, String)> {
    let results = golden::run_dir(&a.dir)?;
    let ok = results.iter().all(|r| r.passed());
    let out = match a.emit {
        Format::Json => pretty(&serde_json::to_value(&results)?),
        Format::Tsv | Format::Text => golden::render(&results),
    };
    Ok((if ok { 0 } else { 1 }, out))
}
