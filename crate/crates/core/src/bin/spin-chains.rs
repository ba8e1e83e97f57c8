use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use spin_chains::lr::{lr_coefficient, Partition};
use spin_chains::scattered::{build_record, count, generate, spherical_family, ScatteredRecord};
use spin_chains::spin::{lowest_k_type, spin_lowest_k_type, verify_spin_identity};
use spin_chains::verify::verify_up_to;
use spin_chains::weight::{rho_doubled, WeightVec};
use spin_chains::{workers, ChainSet, Error};

const MAX_ENUMERATE: usize = 16;
const MAX_ENUMERATE_WITH_MULTIPLICITY: usize = 8;
const MAX_COUNT: usize = 20;

#[derive(Parser)]
#[command(
    name = "spin-chains",
    version,
    about = "Spin-lowest K-types and scattered representations of SL(n, C)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spin-lowest K-type of a chain set, with the rule trace.
    Tau(InputArgs),
    /// The involution s read off a chain set.
    Perm(InputArgs),
    /// All scattered representations of SL(n).
    Enumerate {
        #[arg(short)]
        n: usize,
        #[arg(long, conflicts_with = "table")]
        json: bool,
        #[arg(long)]
        table: bool,
        #[arg(long)]
        with_multiplicity: bool,
    },
    /// Number of scattered representations of SL(n).
    Count {
        #[arg(short)]
        n: usize,
    },
    /// Run every invariant check for ranks 2..=n.
    Verify {
        #[arg(short)]
        n: usize,
    },
    /// A Littlewood-Richardson coefficient c^{outer}_{inner,weight}.
    Lr {
        #[arg(long)]
        outer: String,
        #[arg(long, default_value = "")]
        inner: String,
        #[arg(long)]
        weight: String,
    },
    /// The spherical scattered parameter for (a, b).
    Spherical {
        #[arg(short)]
        a: i64,
        #[arg(short)]
        b: i64,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Chain-set JSON file, or `-` for stdin.
    #[arg(short = 'f', long = "file")]
    file: PathBuf,
    #[arg(long)]
    json: bool,
}

enum Failure {
    Verification(String),
    Parse(String),
    InvalidChainSet(String),
    Bound(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Parse(_) => 2,
            Failure::InvalidChainSet(_) => 3,
            Failure::Bound(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m)
            | Failure::Parse(m)
            | Failure::InvalidChainSet(m)
            | Failure::Bound(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e.exit_code() {
            2 => Failure::Parse(msg),
            3 => Failure::InvalidChainSet(msg),
            4 => Failure::Bound(msg),
            _ => Failure::Verification(msg),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    workers::init_global_pool();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    let _ = io::stdout().write_all(out.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cmd: Command, out: &mut String) -> Result<(), Failure> {
    match cmd {
        Command::Tau(args) => cmd_tau(&read_chain_set(&args.file)?, args.json, out),
        Command::Perm(args) => cmd_perm(&read_chain_set(&args.file)?, args.json, out),
        Command::Enumerate {
            n,
            json,
            table: _,
            with_multiplicity,
        } => cmd_enumerate(n, json, with_multiplicity, out),
        Command::Count { n } => {
            check_bound(n, MAX_COUNT)?;
            writeln!(out, "{}", count(n)?).unwrap();
            Ok(())
        }
        Command::Verify { n } => cmd_verify(n, out),
        Command::Lr {
            outer,
            inner,
            weight,
        } => {
            let c = lr_coefficient(
                &parse_partition(&outer)?,
                &parse_partition(&inner)?,
                &parse_partition(&weight)?,
            )?;
            writeln!(out, "{c}").unwrap();
            Ok(())
        }
        Command::Spherical { a, b } => cmd_spherical(a, b, out),
    }
}

fn read_chain_set(path: &Path) -> Result<ChainSet, Failure> {
    let mut text = String::new();
    let read = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    Ok(ChainSet::from_json(&text)?)
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    let s = s.trim();
    let parts = if s.is_empty() {
        Vec::new()
    } else {
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Failure::Parse(format!("bad partition part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    Ok(Partition::new(parts)?)
}

fn check_bound(n: usize, max: usize) -> Result<(), Failure> {
    if (2..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::BoundExceeded { n, min: 2, max }.into())
    }
}

/// Doubled weight shown in standard coordinates, with a `½` prefix when
/// some coordinate is half-integral.
fn halves(w: &WeightVec) -> String {
    match w.to_standard() {
        Some(std) => WeightVec::new(std).to_string(),
        None => format!("½{w}"),
    }
}

fn cmd_tau(cs: &ChainSet, json: bool, out: &mut String) -> Result<(), Failure> {
    let res = spin_lowest_k_type(cs)?;
    let identity = verify_spin_identity(&res);
    let n = res.n();
    let two_lambda_minus_rho = &res.lambda.scale(2) - &rho_doubled(n);
    let mut trace = res.trace.clone();
    trace.sort_by_key(|a| (a.rule.letter(), a.i, a.j));

    if json {
        let value = serde_json::json!({
            "chains": res.chains,
            "lambda_doubled": res.lambda,
            "lowest_k_type": lowest_k_type(cs),
            "layout": res.layout.rows(),
            "trace": res.trace,
            "tau": res.tau,
            "gamma": res.gamma,
            "two_lambda_minus_rho": two_lambda_minus_rho,
            "identity": identity,
        });
        writeln!(out, "{value}").unwrap();
        return Ok(());
    }

    let rows: Vec<String> = res
        .layout
        .rows()
        .iter()
        .enumerate()
        .map(|(i, r)| format!("T{i}={}", WeightVec::new(r.clone())))
        .collect();
    let rules: Vec<String> = trace.iter().map(ToString::to_string).collect();
    writeln!(out, "chains        {}", res.chains).unwrap();
    writeln!(out, "2λ            {}", res.lambda).unwrap();
    writeln!(out, "λ             ½{}", res.lambda).unwrap();
    writeln!(out, "lowest K-type {}", halves(&lowest_k_type(cs))).unwrap();
    writeln!(
        out,
        "rules         {}",
        if rules.is_empty() {
            "none".into()
        } else {
            rules.join("; ")
        }
    )
    .unwrap();
    writeln!(out, "layout        {}", rows.join(" ")).unwrap();
    writeln!(out, "τ             {}", halves(&res.tau)).unwrap();
    writeln!(out, "{{τ−ρ}}         {}", halves(&res.gamma)).unwrap();
    writeln!(out, "2λ−ρ          {}", halves(&two_lambda_minus_rho)).unwrap();
    writeln!(
        out,
        "identity      {}",
        if identity { "PASS" } else { "FAIL" }
    )
    .unwrap();
    if identity {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{{τ−ρ}} != 2λ−ρ for {cs}")))
    }
}

fn cmd_perm(cs: &ChainSet, json: bool, out: &mut String) -> Result<(), Failure> {
    let s = cs.extract_involution();
    if json {
        let value = serde_json::json!({
            "s": s,
            "interlaced": cs.is_interlaced(),
            "all_simple_reflections": s.involves_all_simple_reflections(),
        });
        writeln!(out, "{value}").unwrap();
    } else {
        writeln!(out, "s                        {s}").unwrap();
        writeln!(out, "interlaced               {}", cs.is_interlaced()).unwrap();
        writeln!(
            out,
            "all simple reflections   {}",
            s.involves_all_simple_reflections()
        )
        .unwrap();
    }
    Ok(())
}

fn cmd_enumerate(n: usize, json: bool, with_mult: bool, out: &mut String) -> Result<(), Failure> {
    check_bound(
        n,
        if with_mult {
            MAX_ENUMERATE_WITH_MULTIPLICITY
        } else {
            MAX_ENUMERATE
        },
    )?;
    let mut sets = generate(n)?;
    sets.dedup();
    let records = sets
        .par_iter()
        .map(|cs| build_record(cs, with_mult))
        .collect::<Result<Vec<ScatteredRecord>, Error>>()?;
    if json {
        for r in &records {
            writeln!(
                out,
                "{}",
                serde_json::to_string(r).expect("record serializes")
            )
            .unwrap();
        }
        return Ok(());
    }
    let header = ["n", "chains", "2λ′", "s", "τ", "γ", "u-small", "mult"];
    let body: Vec<[String; 8]> = records
        .iter()
        .map(|r| {
            [
                r.n.to_string(),
                r.chains.to_string(),
                bracket(&r.lambda2_fund),
                r.s.to_string(),
                bracket(&r.tau_fund),
                r.gamma.to_string(),
                if r.u_small { "yes" } else { "no" }.to_string(),
                r.multiplicity.map_or("-".to_string(), |m| m.to_string()),
            ]
        })
        .collect();
    writeln!(
        out,
        "# 2λ′ and γ are in doubled scale (×½); τ in the fundamental basis"
    )
    .unwrap();
    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            body.iter()
                .map(|row| row[c].chars().count())
                .chain(std::iter::once(header[c].chars().count()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect::<Vec<_>>()
            .join(" | ")
            .trim_end()
            .to_string()
    };
    writeln!(out, "{}", line(header.to_vec())).unwrap();
    for row in &body {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect())).unwrap();
    }
    Ok(())
}

fn bracket(v: &[i64]) -> String {
    let inner: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", inner.join(","))
}

fn cmd_verify(n: usize, out: &mut String) -> Result<(), Failure> {
    let summary = verify_up_to(n)?;
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&summary).expect("summary serializes")
    )
    .unwrap();
    match summary.first_failure() {
        None => Ok(()),
        Some(c) => Err(Failure::Verification(format!(
            "{} failed at n = {}: {}",
            c.check,
            c.n,
            c.failure.as_deref().unwrap_or("")
        ))),
    }
}

fn cmd_spherical(a: i64, b: i64, out: &mut String) -> Result<(), Failure> {
    let cs = spherical_family(a, b)?;
    let record = build_record(&cs, false)?;
    writeln!(out, "chains        {cs}").unwrap();
    writeln!(out, "2λ′           {}", bracket(&record.lambda2_fund)).unwrap();
    writeln!(out, "lowest K-type {}", halves(&lowest_k_type(&cs))).unwrap();
    writeln!(out, "s             {}", record.s).unwrap();
    writeln!(out, "τ             {}", bracket(&record.tau_fund)).unwrap();
    Ok(())
}
