use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use planepairs::deformation::VersalCase;
use planepairs_cli::{
    betti_record, borel_enum_record, gin_record, hilbert_record, parse_ideal, parse_polynomial_arg, run_suite,
    single_report, tangent_record, write_report, DeformData, Report, Suite, SuiteConfig,
};

#[derive(Parser)]
#[command(name = "planepairs", version, about = "Exact verification of Hilbert scheme computations for pairs of linear spaces")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Seed for gin coordinate changes and parameter sampling.
    #[arg(long, global = true, env = "PLANEPAIRS_SEED", default_value_t = 42)]
    seed: u64,
    /// Write the JSON report here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Print the JSON report instead of the summary table.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args)]
struct DataChoice {
    /// Check the transcription exactly as printed.
    #[arg(long, conflicts_with = "mutate")]
    printed: bool,
    /// Perturb one coefficient of the lifted syzygy matrix before checking.
    #[arg(long)]
    mutate: bool,
}

impl DataChoice {
    fn data(&self) -> DeformData {
        if self.printed {
            DeformData::Printed
        } else if self.mutate {
            DeformData::Mutated
        } else {
            DeformData::Corrected
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites (all by default).
    VerifyAll {
        /// Restrict to these suites (repeatable).
        #[arg(long = "suite")]
        suites: Vec<Suite>,
        /// Keep only checks at this ambient dimension.
        #[arg(long)]
        n: Option<usize>,
        /// Random draws per Gröbner family size.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[command(flatten)]
        data: DataChoice,
    },
    /// Verify the classified ideals of a family.
    Catalog {
        /// codim2-pairs, codim3-pairs, line-plane, line-plane-stratum, plane-two-points, line-borel:<d>, hypersurface:<d>
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Only the entry with this type label.
        #[arg(long = "type")]
        label: Option<String>,
    },
    /// List saturated Borel-fixed ideals with a given Hilbert polynomial.
    BorelEnum {
        /// Binomial text such as C(t+2,2)+t+1, or pair:c,d, or hypersurface:d,k.
        #[arg(long)]
        hp: String,
        #[arg(long)]
        n: usize,
    },
    /// Generic initial ideal in grevlex.
    Gin(IdealArg),
    /// Hilbert function, polynomial and dimension.
    Hilb(IdealArg),
    /// Graded Betti table of a minimal free resolution.
    Betti(IdealArg),
    /// Dimension of Hom(I, S/I) in degree zero.
    Tangent(IdealArg),
    /// Check the versal deformation data.
    Deform {
        #[arg(long)]
        case: Option<VersalCase>,
        #[command(flatten)]
        data: DataChoice,
    },
    /// Check intersection tables, canonical classes and Fano verdicts.
    Cones {
        /// line-plane, codim-three or two-two.
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Check the Gröbner basis of the equal-plane family.
    Family {
        /// Codimension of the planes; needs --n as well.
        #[arg(long, requires = "n")]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

#[derive(Args)]
struct IdealArg {
    /// Comma-separated homogeneous generators in x0..xn.
    #[arg(long)]
    ideal: String,
    /// Index of the last variable.
    #[arg(long)]
    n: usize,
}

fn suite_config(common: &Common) -> SuiteConfig {
    SuiteConfig {
        seed: common.seed,
        out: common.out.clone(),
        jobs: common.jobs.unwrap_or_else(planepairs_cli::default_jobs),
        ..SuiteConfig::default()
    }
}

fn run(cli: Cli) -> Result<Report> {
    let c = &cli.common;
    let base = suite_config(c);
    let started = Instant::now();
    let one = |suite: &str, rec: planepairs_cli::Record| -> Result<Report> {
        let r = single_report(c.seed, suite, vec![rec], started);
        if let Some(p) = &c.out {
            write_report(&r, p)?;
        }
        Ok(r)
    };
    match cli.command {
        Command::VerifyAll { suites, n, samples, data } => run_suite(&SuiteConfig {
            suites: if suites.is_empty() { Suite::all().to_vec() } else { suites },
            n,
            samples,
            deform_data: data.data(),
            ..base
        }),
        Command::Catalog { family, n, label } => run_suite(&SuiteConfig { suites: vec![Suite::Catalog], family, n, label, ..base }),
        Command::BorelEnum { hp, n } => one("borel-enum", borel_enum_record(&parse_polynomial_arg(&hp, n)?, n)?),
        Command::Gin(a) => one("gin", gin_record(&parse_ideal(a.n, &a.ideal)?, c.seed)?),
        Command::Hilb(a) => one("hilb", hilbert_record(&parse_ideal(a.n, &a.ideal)?)?),
        Command::Betti(a) => one("betti", betti_record(&parse_ideal(a.n, &a.ideal)?)?),
        Command::Tangent(a) => one("tangent", tangent_record(&parse_ideal(a.n, &a.ideal)?)?),
        Command::Deform { case, data } => run_suite(&SuiteConfig { suites: vec![Suite::Deform], case, deform_data: data.data(), ..base }),
        Command::Cones { family, n } => run_suite(&SuiteConfig { suites: vec![Suite::Cones], family, n, ..base }),
        Command::Family { k, n, samples } => run_suite(&SuiteConfig { suites: vec![Suite::GroebnerFamily], k, n, samples, ..base }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.common.json;
    match run(cli) {
        Ok(report) => {
            if json {
                println!("{}", report.to_json());
            } else if report.records.len() == 1 && report.records[0].expected.is_null() {
                let r = &report.records[0];
                println!("{}", serde_json::to_string_pretty(&r.computed).expect("value serializes"));
            } else {
                print!("{}", report.summary_table());
            }
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
