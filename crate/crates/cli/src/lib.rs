//! Batch verification driver for the `planepairs` engine.
//!
//! Checks are grouped into suites, dispatched to a bounded worker pool and assembled
//! into a [`Report`] in a fixed order, so the same configuration and seed always yield
//! the same JSON apart from the `timing` field.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context, Result};
use planepairs::borel::{enumerate_borel, gin, monomial_key};
use planepairs::deformation::VersalCase;
use planepairs::hilbert::{
    hilbert_function, hilbert_polynomial, hypersurface_hilbert_polynomial, krull_dim, pair_hilbert_polynomial,
    parse_hilbert_poly, HilbertPoly,
};
use planepairs::resolution::betti_table;
use planepairs::tangent::hom_degree_zero_dim;
use planepairs::Ideal;
use rayon::prelude::*;
use serde_json::json;

pub mod checks;
mod report;

pub use report::{CheckTime, Record, Report, Timing, SCHEMA_VERSION};

/// A named group of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Catalog,
    Borel,
    Gin,
    Tangent,
    Resolution,
    Deform,
    Cones,
    GroebnerFamily,
    Orbits,
}

impl Suite {
    pub fn all() -> [Suite; 9] {
        [
            Suite::Borel,
            Suite::Gin,
            Suite::Tangent,
            Suite::Resolution,
            Suite::GroebnerFamily,
            Suite::Deform,
            Suite::Cones,
            Suite::Orbits,
            Suite::Catalog,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Catalog => "catalog",
            Suite::Borel => "borel",
            Suite::Gin => "gin",
            Suite::Tangent => "tangent",
            Suite::Resolution => "resolution",
            Suite::Deform => "deform",
            Suite::Cones => "cones",
            Suite::GroebnerFamily => "groebner-family",
            Suite::Orbits => "orbits",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match Suite::all().into_iter().find(|x| x.name() == s) {
            Some(x) => Ok(x),
            None => bail!("unknown suite {s:?}; expected one of {}", Suite::all().map(|x| x.name()).join(", ")),
        }
    }
}

/// Which versal deformation data the deform suite checks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DeformData {
    /// Transcription with the located errors corrected.
    #[default]
    Corrected,
    /// Transcription exactly as printed.
    Printed,
    /// Corrected data with one coefficient of the lifted syzygy matrix perturbed.
    Mutated,
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suites: Vec<Suite>,
    /// Restrict to checks at this ambient dimension; for catalog and cones, run at it.
    pub n: Option<usize>,
    /// Catalog family tag or cone family tag.
    pub family: Option<String>,
    /// Catalog type label.
    pub label: Option<String>,
    /// Codimension for the Gröbner family suite.
    pub k: Option<usize>,
    pub case: Option<VersalCase>,
    pub deform_data: DeformData,
    /// Seeds gin coordinate changes and parameter sampling.
    pub seed: u64,
    /// Random parameter draws per Gröbner family size.
    pub samples: usize,
    pub jobs: usize,
    pub out: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suites: Suite::all().to_vec(),
            n: None,
            family: None,
            label: None,
            k: None,
            case: None,
            deform_data: DeformData::Corrected,
            seed: 42,
            samples: 20,
            jobs: default_jobs(),
            out: None,
        }
    }
}

pub fn default_jobs() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

fn now_ms() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_millis() as u64).unwrap_or(0)
}

/// Run every selected check and write the JSON report to `cfg.out` when set.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Report> {
    let checks = checks::build(cfg)?;
    if checks.is_empty() {
        bail!("the configuration selects no checks");
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .stack_size(64 << 20)
        .build()
        .context("building worker pool")?;
    let started_unix_ms = now_ms();
    let start = Instant::now();
    let results: Vec<(Vec<Record>, u64)> = pool.install(|| {
        checks
            .par_iter()
            .map(|c| {
                let t = Instant::now();
                let r = c.run();
                (r, t.elapsed().as_millis() as u64)
            })
            .collect()
    });
    let mut records = Vec::new();
    let mut times = Vec::new();
    for (c, (r, ms)) in checks.iter().zip(results) {
        records.extend(r);
        times.push(CheckTime { check: c.id.clone(), millis: ms });
    }
    let mut suites: Vec<String> = Vec::new();
    for c in &checks {
        if !suites.iter().any(|s| s == c.suite.name()) {
            suites.push(c.suite.name().to_string());
        }
    }
    let report = Report {
        schema_version: SCHEMA_VERSION,
        seed: cfg.seed,
        suites,
        records,
        timing: Timing { started_unix_ms, total_millis: start.elapsed().as_millis() as u64, checks: times },
    };
    if let Some(p) = &cfg.out {
        write_report(&report, p)?;
    }
    Ok(report)
}

pub fn write_report(report: &Report, path: &std::path::Path) -> Result<()> {
    std::fs::write(path, report.to_json() + "\n").with_context(|| format!("writing {}", path.display()))
}

/// Wrap ad hoc records in a report.
pub fn single_report(seed: u64, suite: &str, records: Vec<Record>, started: Instant) -> Report {
    Report {
        schema_version: SCHEMA_VERSION,
        seed,
        suites: vec![suite.to_string()],
        records,
        timing: Timing { started_unix_ms: now_ms(), total_millis: started.elapsed().as_millis() as u64, checks: Vec::new() },
    }
}

/// A Hilbert polynomial given as binomial text (`C(t+2,2)+t+1`), as `pair:c,d`
/// (a `c`-plane and a `d`-plane in `P^n`), or as `hypersurface:d,k` (degree `d` plus `k` points).
pub fn parse_polynomial_arg(text: &str, n: usize) -> Result<HilbertPoly> {
    let ints = |rest: &str| -> Result<Vec<i64>> {
        rest.split(',').map(|s| s.trim().parse::<i64>().with_context(|| format!("bad integer in {text:?}"))).collect()
    };
    if let Some(rest) = text.strip_prefix("pair:") {
        let v = ints(rest)?;
        if v.len() != 2 || v.iter().any(|&x| x < 0) {
            bail!("expected pair:c,d, got {text:?}");
        }
        return Ok(pair_hilbert_polynomial(v[0] as usize, v[1] as usize, n)?);
    }
    if let Some(rest) = text.strip_prefix("hypersurface:") {
        let v = ints(rest)?;
        if v.len() != 2 || v[0] <= 0 || v[1] < 0 {
            bail!("expected hypersurface:d,k, got {text:?}");
        }
        return Ok(hypersurface_hilbert_polynomial(v[0] as usize, n).add_const(v[1]));
    }
    Ok(parse_hilbert_poly(text)?)
}

/// Saturated Borel-fixed ideals with Hilbert polynomial `p` in `P^n`.
pub fn borel_enum_record(p: &HilbertPoly, n: usize) -> Result<Record> {
    let ideals = enumerate_borel(p, n)?;
    let mut keys: Vec<Vec<String>> = ideals.iter().map(monomial_key).collect::<planepairs::Result<_>>()?;
    keys.sort();
    Ok(Record::new(
        "borel-enum",
        json!({ "hilbert_polynomial": p.to_binomial_text(), "n": n }),
        serde_json::Value::Null,
        json!({ "count": keys.len(), "ideals": keys }),
        true,
    ))
}

/// Parse comma-separated generators in `x0..xn`.
pub fn parse_ideal(n: usize, text: &str) -> Result<Ideal> {
    let gens: Vec<&str> = text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if gens.is_empty() {
        bail!("no generators given");
    }
    Ok(Ideal::parse(n, &gens)?)
}

pub fn gin_record(i: &Ideal, seed: u64) -> Result<Record> {
    let g = gin(i, seed)?;
    Ok(Record::new("gin", json!({ "generators": i.to_strings(), "seed": seed }), serde_json::Value::Null, json!(g.canonical_strings()), true))
}

pub fn hilbert_record(i: &Ideal) -> Result<Record> {
    let p = hilbert_polynomial(i);
    let values: Vec<i64> = (0..=i.nvars() as u32 + 2).map(|t| hilbert_function(i, t)).collect();
    Ok(Record::new(
        "hilb",
        json!({ "generators": i.to_strings() }),
        serde_json::Value::Null,
        json!({
            "polynomial": p.to_text(),
            "binomial_form": p.to_binomial_text(),
            "function_from_0": values,
            "krull_dim": krull_dim(i)?,
        }),
        true,
    ))
}

pub fn betti_record(i: &Ideal) -> Result<Record> {
    let b = betti_table(i)?;
    Ok(Record::new(
        "betti",
        json!({ "generators": i.to_strings() }),
        serde_json::Value::Null,
        json!({
            "table": b.to_text(),
            "totals": b.totals(),
            "linear": b.is_linear(),
            "regularity": b.regularity(),
            "depth": b.depth(i.nvars()),
        }),
        true,
    ))
}

pub fn tangent_record(i: &Ideal) -> Result<Record> {
    Ok(Record::new(
        "tangent",
        json!({ "generators": i.to_strings() }),
        serde_json::Value::Null,
        json!({ "hom_degree_zero_dim": hom_degree_zero_dim(i)? }),
        true,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::all() {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn polynomial_arguments() {
        let a = parse_polynomial_arg("C(t+2,2)+t+1", 4).unwrap();
        assert_eq!(a, parse_polynomial_arg("pair:1,2", 4).unwrap());
        let h = parse_polynomial_arg("hypersurface:2,1", 3).unwrap();
        assert_eq!(h.eval(1), planepairs::poly::rat(5));
        assert!(parse_polynomial_arg("pair:1", 4).is_err());
    }

    #[test]
    fn empty_selection_is_an_error() {
        let cfg = SuiteConfig { suites: vec![Suite::Deform], case: None, n: Some(3), ..Default::default() };
        // deform checks have no n, so they survive the filter
        assert!(run_suite(&SuiteConfig { jobs: 1, ..cfg }).is_ok());
        let cfg = SuiteConfig { suites: vec![Suite::Orbits], n: Some(99), jobs: 1, ..Default::default() };
        assert!(run_suite(&cfg).is_err());
    }
}
