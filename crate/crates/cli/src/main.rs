use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use skabelund::spectrum::export::{write_report, Format};
use skabelund::{
    compute_spectrum_with, evaluate, make_params, run_oracle_suite, verify_tables_with, Caps, CurveFamily,
    DescriptorKind, SubgroupDescriptor,
};

#[derive(Parser)]
#[command(
    name = "skabelund",
    version,
    about = "Genera of Galois subcovers of the Skabelund maximal curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Suzuki,
    Ree,
}

impl From<FamilyArg> for CurveFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Suzuki => CurveFamily::Suzuki,
            FamilyArg::Ree => CurveFamily::Ree,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Table,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
            FormatArg::Table => Format::Table,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every known subgroup family and print the genus spectrum
    Spectrum {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        s: u32,
        /// Restrict to one descriptor kind, e.g. sigma-cm or n2-nonskew
        #[arg(long)]
        subgroup_family: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the reference genus tables against computed spectra
    VerifyTables {
        #[arg(long, default_value_t = 4)]
        s_max: u32,
    },
    /// Genus of a single subgroup, e.g. --descriptor sigma-cm:1,5,1
    Genus {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        descriptor: String,
    },
    /// Compare closed forms against brute-force oracles
    Oracle {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        s: u32,
        /// Largest subgroup enumerated element by element
        #[arg(long)]
        max_elements: Option<u64>,
    },
}

fn run(cli: Cli) -> Result<bool> {
    let caps = Caps::from_env()?;
    match cli.command {
        Command::Spectrum {
            family,
            s,
            subgroup_family,
            format,
            out,
        } => {
            let filter = subgroup_family
                .map(|k| k.parse::<DescriptorKind>())
                .transpose()
                .context("bad --subgroup-family")?;
            let report = compute_spectrum_with(family.into(), s, filter, &caps)?;
            match out {
                Some(path) => {
                    let file = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                    let mut w = BufWriter::new(file);
                    write_report(&report, format.into(), &mut w)?;
                    w.flush()?;
                }
                None => {
                    let stdout = io::stdout();
                    let mut w = BufWriter::new(stdout.lock());
                    write_report(&report, format.into(), &mut w)?;
                    w.flush()?;
                }
            }
            Ok(true)
        }
        Command::VerifyTables { s_max } => {
            let report = verify_tables_with(s_max, &caps)?;
            print!("{report}");
            Ok(report.passed())
        }
        Command::Genus { family, s, descriptor } => {
            let family: CurveFamily = family.into();
            caps.check_s(family, s)?;
            let params = make_params(family, s)?;
            let descriptor: SubgroupDescriptor = descriptor.parse()?;
            let r = evaluate(&params, &descriptor)?;
            println!("curve      {params}");
            println!("descriptor {}", r.descriptor);
            println!("order      {}", r.order);
            println!("delta      {}", r.delta);
            println!("genus      {}", r.genus);
            Ok(true)
        }
        Command::Oracle {
            family,
            s,
            max_elements,
        } => {
            let mut caps = caps;
            if let Some(cap) = max_elements {
                if cap == 0 {
                    bail!("--max-elements must be positive");
                }
                caps.max_elements = cap;
            }
            let report = run_oracle_suite(family.into(), s, &caps)?;
            println!("{report}");
            Ok(report.passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
