//! Report generation for the command-line front end.

use std::time::Instant;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::abelian::GroupVector;
use crate::cover::{CoverConfig, EigensheafRow};
use crate::datasets::{self, BicanonicalFixture, TangentFixture};
use crate::eisenstein::{free_action_census, relation_suite, verify_relation, CompareMode};
use crate::error::{Error, Result};
use crate::group_algebra::{
    g2_generators, ideal_membership, bloch_families, bloch_subgroup_list, parse_triples, z,
};
use crate::picard::DivisorClass;
use crate::presentation::{
    abelianization, gamma_presentation, kernel_is_normal, reidemeister_schreier, sigma_table,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureCheck {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Inputs {
    pub source: String,
    pub sha256: String,
}

impl Inputs {
    pub fn new(source: &str, content: &str) -> Self {
        Inputs {
            source: source.to_string(),
            sha256: hex::encode(Sha256::digest(content.as_bytes())),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Inputs,
    pub results: Value,
    pub fixtures: Vec<FixtureCheck>,
    pub timing_ms: u64,
}

impl RunReport {
    pub fn all_pass(&self) -> bool {
        self.fixtures.iter().all(|f| f.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The results object alone, which is identical across runs.
    pub fn results_json(&self) -> String {
        serde_json::to_string(&self.results).expect("results serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\ninput: {} (sha256 {})\n", self.command, self.inputs.source, self.inputs.sha256);
        out.push_str(&text_block(&self.results, 0));
        if !self.fixtures.is_empty() {
            out.push_str("fixtures:\n");
            for f in &self.fixtures {
                let mark = if f.pass { "PASS" } else { "FAIL" };
                out.push_str(&format!("  [{mark}] {}", f.name));
                if !f.pass {
                    out.push_str(&format!(" expected {} got {}", f.expected, f.actual));
                }
                out.push('\n');
            }
        }
        out.push_str(&format!("time: {} ms\n", self.timing_ms));
        out
    }
}

fn text_block(v: &Value, indent: usize) -> String {
    let pad = "  ".repeat(indent);
    let mut out = String::new();
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        out.push_str(&text_block(val, indent + 1));
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for item in items {
                            out.push_str(&format!("{pad}  - {item}\n"));
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {val}\n")),
                }
            }
        }
        other => out.push_str(&format!("{pad}{other}\n")),
    }
    out
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    /// Stop comparing fixtures after the first failure.
    pub fail_fast: bool,
}

struct Checks {
    list: Vec<FixtureCheck>,
    fail_fast: bool,
}

impl Checks {
    fn new(opts: Options) -> Self {
        Checks {
            list: Vec::new(),
            fail_fast: opts.fail_fast,
        }
    }

    fn stopped(&self) -> bool {
        self.fail_fast && self.list.iter().any(|c| !c.pass)
    }

    fn check<T: Serialize + PartialEq>(&mut self, name: impl Into<String>, expected: T, actual: T) {
        if self.stopped() {
            return;
        }
        let pass = expected == actual;
        self.list.push(FixtureCheck {
            name: name.into(),
            expected: serde_json::to_value(&expected).expect("serializable"),
            actual: serde_json::to_value(&actual).expect("serializable"),
            pass,
        });
    }
}

fn finish(command: &str, inputs: Inputs, results: Value, checks: Checks, start: Instant) -> RunReport {
    RunReport {
        command: command.to_string(),
        inputs,
        results,
        fixtures: checks.list,
        timing_ms: start.elapsed().as_millis() as u64,
    }
}

fn rational_json(q: &BigRational) -> Value {
    if q.is_integer() {
        json!(q.to_integer().to_i64())
    } else {
        json!(q.to_string())
    }
}

/// Resolves `--config` values: a bundled dataset name or a file path.
pub fn load_config_text(source: &str) -> Result<String> {
    if let Some(text) = datasets::bundled(source) {
        return Ok(text.to_string());
    }
    std::fs::read_to_string(source).map_err(|e| Error::Config(format!("{source}: {e}")))
}

pub fn cmd_invariants(source: &str, text: &str, opts: Options) -> Result<RunReport> {
    let start = Instant::now();
    let config = CoverConfig::from_json(text)?;
    let base = config.base_spec()?;
    let spec = config.spec()?;
    let mut checks = Checks::new(opts);

    let base_report = base.smoothness_report()?;
    let report = spec.smoothness_report()?;
    let singular = spec.singular_points()?;
    let mut results = json!({
        "name": config.name,
        "group_order": spec.group().order(),
        "blown_up": spec.resolved_points(),
        "base_smoothness": base_report,
        "smoothness": report,
        "singular_points": singular,
        "ramification_K2": rational_json(&spec.ramification_k2()),
    });
    if singular.is_empty() {
        let inv = spec.invariants()?;
        results["invariants"] = serde_json::to_value(inv).expect("serializable");
        if let Some(expected) = &config.expected {
            for (name, want, got, _) in expected.compare(&inv) {
                checks.check(format!("invariants.{name}"), want, got);
            }
        }
    } else {
        results["invariants"] = Value::Null;
        if config.expected.is_some() {
            checks.check("invariants.smooth", true, false);
        }
    }
    if let Some(want) = &config.expected_singular {
        checks.check("singular_points", want.clone(), singular.clone());
    }
    Ok(finish("invariants", Inputs::new(source, text), results, checks, start))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Tangent,
    Bicanonical,
}

impl std::str::FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tangent" => Ok(TableKind::Tangent),
            "bicanonical" => Ok(TableKind::Bicanonical),
            other => Err(Error::Config(format!("unknown table '{other}'"))),
        }
    }
}

fn find_row<'a>(rows: &'a [EigensheafRow], chi: &[i64]) -> Option<&'a EigensheafRow> {
    rows.iter().find(|r| {
        r.character.coords().dim() == chi.len()
            && r.character.coords() == &GroupVector::new(r.character.coords().modulus(), chi)
    })
}

/// Runs a table command. With no fixture text, the bundled table is used
/// when it was made for the same configuration.
pub fn cmd_tables(
    source: &str,
    text: &str,
    which: TableKind,
    fixture: Option<&str>,
    opts: Options,
) -> Result<RunReport> {
    let start = Instant::now();
    let config = CoverConfig::from_json(text)?;
    let spec = config.spec()?;
    let mut checks = Checks::new(opts);
    let results;
    match which {
        TableKind::Tangent => {
            let rows = spec.tangent_table()?;
            let sum: i64 = rows.iter().map(|r| r.chi_log.unwrap_or(0)).sum();
            let fx: Option<TangentFixture> = match fixture {
                Some(f) => Some(datasets::parse(f)?),
                None => Some(datasets::tangent_fixture()).filter(|f| f.config == config.name),
            };
            let mut out = json!({ "rows": rows, "chi_log_sum": sum });
            if let Some(fx) = fx {
                for want in &fx.rows {
                    let label = format!("{:?}", want.character);
                    let row = find_row(&rows, &want.character);
                    checks.check(
                        format!("row {label} A"),
                        Some(DivisorClass::new(want.a.clone())),
                        row.map(|r| r.a.clone()),
                    );
                    checks.check(
                        format!("row {label} delta set"),
                        Some(want.delta_set.clone()),
                        row.map(|r| r.delta_components.clone()),
                    );
                }
                checks.check("chi_log sum", fx.chi_log_sum, sum);
                let h2: u64 = fx.rows.iter().map(|r| r.h2).sum();
                let h1 = h2 as i64 - sum;
                out["h2_column"] = json!(fx.rows.iter().map(|r| r.h2).collect::<Vec<_>>());
                out["h1_tangent"] = json!(h1);
                checks.check("h1 of tangent sheaf", fx.h1_tangent, h1);
            }
            results = out;
        }
        TableKind::Bicanonical => {
            let rows = spec.bicanonical_table()?;
            let analysis = spec.bicanonical_analysis()?;
            let fx: Option<BicanonicalFixture> = match fixture {
                Some(f) => Some(datasets::parse(f)?),
                None => Some(datasets::bicanonical_fixture()).filter(|f| f.config == config.name),
            };
            if let Some(fx) = &fx {
                for want in &fx.rows {
                    let label = format!("{:?}", want.character);
                    let row = find_row(&rows, &want.character);
                    checks.check(
                        format!("row {label} delta sum"),
                        Some(DivisorClass::new(want.delta_sum.clone())),
                        row.map(|r| r.delta_sum.clone()),
                    );
                    checks.check(
                        format!("row {label} L"),
                        Some(DivisorClass::new(want.l_inverse.clone())),
                        row.map(|r| r.l.clone()),
                    );
                    checks.check(
                        format!("row {label} class"),
                        Some(DivisorClass::new(want.class.clone())),
                        row.map(|r| r.class.clone()),
                    );
                    checks.check(format!("row {label} h0"), Some(want.h0), row.and_then(|r| r.h0));
                }
                let mut got: Vec<Vec<u32>> = analysis
                    .characters_with_sections
                    .iter()
                    .map(|c| c.coords().coords().to_vec())
                    .collect();
                let mut want: Vec<Vec<u32>> = fx
                    .characters_with_sections
                    .iter()
                    .map(|c| c.iter().map(|&x| x.rem_euclid(3) as u32).collect())
                    .collect();
                got.sort();
                want.sort();
                checks.check("characters with sections", want, got);
                checks.check("characters generate", fx.generates, analysis.generates);
                checks.check("h0(2K)", fx.h0_total, analysis.h0_total);
            }
            checks.check("h0(2K) = chi + K^2", analysis.chi_2k, analysis.h0_total as i64);
            results = json!({ "rows": rows, "analysis": analysis });
        }
    }
    let command = match which {
        TableKind::Tangent => "tables tangent",
        TableKind::Bicanonical => "tables bicanonical",
    };
    Ok(finish(command, Inputs::new(source, text), results, checks, start))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomologyTarget {
    Gamma,
    Sigma(usize),
}

impl std::str::FromStr for HomologyTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gamma" => Ok(HomologyTarget::Gamma),
            "sigma1" => Ok(HomologyTarget::Sigma(1)),
            "sigma2" => Ok(HomologyTarget::Sigma(2)),
            "sigma3" => Ok(HomologyTarget::Sigma(3)),
            other => Err(Error::Config(format!("unknown homology target '{other}'"))),
        }
    }
}

pub fn cmd_homology(target: HomologyTarget, opts: Options) -> Result<RunReport> {
    let start = Instant::now();
    let p = gamma_presentation()?;
    let mut checks = Checks::new(opts);
    let (name, results) = match target {
        HomologyTarget::Gamma => {
            let ab = abelianization(&p)?;
            checks.check(
                "abelianization",
                json!({"free_rank": 0, "torsion": [3, 3, 3]}),
                serde_json::to_value(&ab).expect("serializable"),
            );
            (
                "gamma".to_string(),
                json!({
                    "generators": p.generators().len(),
                    "relators": p.relators().len(),
                    "presentation": p,
                    "abelianization": ab,
                }),
            )
        }
        HomologyTarget::Sigma(i) => {
            let table = sigma_table(&p, i)?;
            let rs = reidemeister_schreier(&p, &table)?;
            let ab = abelianization(&rs.presentation)?;
            let normal = kernel_is_normal(&table, &rs)?;
            checks.check(
                "abelianization",
                json!({"free_rank": 2, "torsion": [3, 3]}),
                serde_json::to_value(&ab).expect("serializable"),
            );
            checks.check("normal subgroup", true, normal);
            (
                format!("sigma{i}"),
                json!({
                    "index": table.cosets(),
                    "schreier_generators": rs.presentation.generators().len(),
                    "tree_edges": rs.tree_edges,
                    "relators": rs.presentation.relators().len(),
                    "normal": normal,
                    "abelianization": ab,
                }),
            )
        }
    };
    Ok(finish(
        "homology",
        Inputs::new(&name, &name),
        results,
        checks,
        start,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlochOption {
    Full,
    WithoutExtra,
    Custom(String),
}

pub fn cmd_bloch(option: &BlochOption, opts: Options) -> Result<RunReport> {
    type Q = BigRational;
    let start = Instant::now();
    let mut checks = Checks::new(opts);
    let (label, triples): (String, Vec<Vec<GroupVector>>) = match option {
        BlochOption::Full => (
            "full".into(),
            bloch_subgroup_list().into_iter().map(|t| t.to_vec()).collect(),
        ),
        BlochOption::WithoutExtra => (
            "without-extra".into(),
            bloch_families().into_iter().map(|t| t.to_vec()).collect(),
        ),
        BlochOption::Custom(text) => (format!("custom: {text}"), parse_triples(text)?),
    };
    let target = z::<Q>(3, 5, &g2_generators())?.element;
    let gens = triples
        .iter()
        .map(|t| z::<Q>(3, 5, t).map(|s| s.element))
        .collect::<Result<Vec<_>>>()?;
    let m = ideal_membership(&target, &gens)?;
    match option {
        BlochOption::Full => checks.check("member", true, m.member),
        BlochOption::WithoutExtra => checks.check("member", false, m.member),
        BlochOption::Custom(_) => {}
    }
    let results = json!({
        "target": "z(G2)",
        "member": m.member,
        "rank": m.rank,
        "generators": m.generators,
    });
    Ok(finish("bloch", Inputs::new(&label, &label), results, checks, start))
}

pub fn cmd_free_action(opts: Options) -> Result<RunReport> {
    let start = Instant::now();
    let mut checks = Checks::new(opts);
    let census = free_action_census()?;
    let suite = relation_suite()?;
    let exceptional: Vec<String> = census.exceptional.iter().map(|e| e.element.clone()).collect();
    checks.check("classes distinct mod lattice", true, census.distinct_mod_lattice);
    checks.check("classes closed mod lattice", true, census.closed_mod_lattice);
    checks.check(
        "exceptional classes",
        vec!["g1 g2 g3".to_string(), "g1^2 g2^2 g3^2".to_string()],
        exceptional.clone(),
    );
    checks.check("origin stabilizer order", 3, census.origin_stabilizer.len());
    checks.check("relation suite", true, suite.iter().all(|r| r.holds));
    let results = json!({
        "classes": census.classes,
        "exceptional": census.exceptional,
        "exceptional_count": exceptional.len(),
        "origin_stabilizer": census.origin_stabilizer,
        "relations": suite,
    });
    Ok(finish("free-action", Inputs::new("G2", "G2"), results, checks, start))
}

pub fn cmd_relation_check(lhs: &str, rhs: &str, mode: CompareMode, opts: Options) -> Result<RunReport> {
    let start = Instant::now();
    let holds = verify_relation(lhs, rhs, mode)?;
    let mut checks = Checks::new(opts);
    checks.check("relation holds", true, holds);
    let input = format!("{lhs} = {rhs}");
    let results = json!({
        "lhs": lhs,
        "rhs": rhs,
        "mode": match mode { CompareMode::Strict => "strict", CompareMode::ModLattice => "mod-lattice" },
        "holds": holds,
    });
    Ok(finish("relation-check", Inputs::new(&input, &input), results, checks, start))
}
