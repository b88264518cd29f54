use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dpdp::bench::gen::{self, Distribution};
use dpdp::bench::instance::{InstanceFile, Payload};
use dpdp::bench::record::RecordWriter;
use dpdp::bench::run::{run, Algo, Instance, RunConfig, RunParams, Verdict};
use dpdp::bench::selftest::{selftest, SelftestOptions};
use dpdp::cost::CostSpec;
use dpdp::gap::{gap_effective_depth, gap_solve, GapInstance};
use dpdp::sequence::{build_match_list, MatchList};
use dpdp::types::DepthReport;
use dpdp::{glws_seq, DpError, Result};

#[derive(Parser)]
#[command(
    name = "dpdp",
    version,
    about = "Parallel dynamic programming benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a seeded instance file.
    Gen(GenArgs),
    /// Time an algorithm and emit CSV rows.
    Run(RunArgs),
    /// Check every algorithm against its oracle on small instances.
    Selftest(SelftestArgs),
    /// Print the decision-DAG depths of an instance.
    Depth(DepthArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    /// Point coordinates for GLWS and k-GLWS.
    Glws,
    /// Two byte sequences for LCS and GAP.
    Strings,
    /// A match list for LCS.
    Matches,
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightMode {
    Keys,
    Gaps,
}

#[derive(Args)]
struct Synth {
    #[arg(long, default_value_t = 1000)]
    n: usize,
    #[arg(long, default_value_t = 1000)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// uniform or clustered.
    #[arg(long, default_value = "uniform")]
    distribution: Distribution,
    /// Mean gap between consecutive points.
    #[arg(long, default_value_t = 8)]
    spread: u32,
    #[arg(long, default_value_t = 4)]
    alphabet: u16,
    /// OBST weight vector convention.
    #[arg(long, value_enum, default_value = "keys")]
    obst_weights: WeightMode,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    problem: Problem,
    #[command(flatten)]
    synth: Synth,
    #[arg(short = 'o', long = "out")]
    out: PathBuf,
    /// Second output file for the `strings` problem.
    #[arg(long)]
    out_b: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    algo: Algo,
    /// Instance file; without it the instance is generated from the seed.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Second byte sequence for LCS and GAP.
    #[arg(long)]
    input_b: Option<PathBuf>,
    #[command(flatten)]
    synth: Synth,
    #[arg(long, default_value = "quad:C=10")]
    cost: CostSpec,
    #[arg(long, default_value = "quad:C=4")]
    cost1: CostSpec,
    #[arg(long, default_value = "quad:C=4")]
    cost2: CostSpec,
    #[arg(long, default_value_t = 16)]
    k: usize,
    /// Comma-separated pool sizes, one CSV row each.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    threads: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    repeats: usize,
    #[arg(long)]
    verify: bool,
    /// CSV destination; stdout when absent.
    #[arg(short = 'o', long = "out")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random instances per algorithm.
    #[arg(long, default_value_t = 50)]
    cases: usize,
    /// Directory for a counterexample.
    #[arg(short = 'o', long = "out", default_value = "selftest-failure")]
    out: PathBuf,
}

#[derive(Args)]
struct DepthArgs {
    /// glws reads coordinates; strings reads two byte sequences for GAP.
    #[arg(long, value_enum, default_value = "glws")]
    problem: Problem,
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    input_b: Option<PathBuf>,
    #[command(flatten)]
    synth: Synth,
    #[arg(long, default_value = "quad:C=10")]
    cost: CostSpec,
    #[arg(long, default_value = "quad:C=4")]
    cost1: CostSpec,
    #[arg(long, default_value = "quad:C=4")]
    cost2: CostSpec,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                DpError::InvalidInput(_) | DpError::OutOfRange { .. } => 2,
                _ => 1,
            })
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<ExitCode> {
    match cmd {
        Cmd::Gen(a) => cmd_gen(a).map(|_| ExitCode::SUCCESS),
        Cmd::Run(a) => cmd_run(a),
        Cmd::Selftest(a) => cmd_selftest(a),
        Cmd::Depth(a) => cmd_depth(a).map(|_| ExitCode::SUCCESS),
    }
}

fn cmd_gen(a: GenArgs) -> Result<()> {
    let s = &a.synth;
    match a.problem {
        Problem::Glws => {
            let p = gen::glws_positions(s.n, s.distribution, s.spread, s.seed);
            coordinates(&p)?.save(&a.out)
        }
        Problem::Strings => {
            let out_b = a
                .out_b
                .as_ref()
                .ok_or_else(|| DpError::invalid("strings needs --out-b for the second sequence"))?;
            let (x, y) = gen::sequences(s.n, s.m, s.alphabet, s.seed)?;
            InstanceFile::new(Payload::Bytes(x))?.save(&a.out)?;
            InstanceFile::new(Payload::Bytes(y))?.save(out_b)
        }
        Problem::Matches => {
            let (x, y) = gen::sequences(s.n, s.m, s.alphabet, s.seed)?;
            let pairs = build_match_list(&x, &y)
                .pairs()
                .iter()
                .map(|&(i, j)| (i as u64, j as u64))
                .collect();
            InstanceFile::new(Payload::Matches(pairs))?.save(&a.out)
        }
    }
}

fn coordinates(p: &[i64]) -> Result<InstanceFile> {
    InstanceFile::new(Payload::Coordinates(p.iter().map(|&x| x as f64).collect()))
}

fn load_bytes(path: &Path) -> Result<Vec<u8>> {
    Ok(InstanceFile::load(path)?.bytes()?.to_vec())
}

fn load_instance(
    algo: Algo,
    input: Option<&Path>,
    input_b: Option<&Path>,
    s: &Synth,
) -> Result<Instance> {
    use Algo::*;
    let needs_b = || DpError::invalid(format!("{algo} needs --input-b with the second sequence"));
    Ok(match (algo, input) {
        (GlwsSeq | GlwsPar | BruteGlws | Kglws | BruteKglws, Some(p)) => {
            Instance::Positions(InstanceFile::load(p)?.positions()?)
        }
        (GlwsSeq | GlwsPar | BruteGlws | Kglws | BruteKglws, None) => {
            Instance::Positions(gen::glws_positions(s.n, s.distribution, s.spread, s.seed))
        }
        (Lcs | BruteLcs | Gap | BruteGap, Some(p)) => {
            let f = InstanceFile::load(p)?;
            match (&f.payload, input_b) {
                (Payload::Matches(_), None) if algo == Lcs => {
                    Instance::Matches(MatchList::from_pairs(f.matches()?)?)
                }
                (Payload::Bytes(x), Some(q)) => Instance::Sequences(x.clone(), load_bytes(q)?),
                (Payload::Bytes(_), None) => return Err(needs_b()),
                (other, _) => {
                    return Err(DpError::invalid(format!(
                        "{algo} cannot read a {} file",
                        other.kind_name()
                    )))
                }
            }
        }
        (Lcs | BruteLcs | Gap | BruteGap, None) => {
            let (x, y) = gen::sequences(s.n, s.m, s.alphabet, s.seed)?;
            Instance::Sequences(x, y)
        }
        (Lis | BruteLis | Obst | BruteObst, Some(_)) => {
            return Err(DpError::invalid(format!(
                "{algo} has no file format; use --n and --seed"
            )))
        }
        (Lis | BruteLis, None) => Instance::Permutation(gen::permutation(s.n, s.seed)),
        (Obst | BruteObst, None) => Instance::Weights(gen::obst_weights(
            s.n,
            matches!(s.obst_weights, WeightMode::Gaps),
            s.seed,
        )),
    })
}

fn cmd_run(a: RunArgs) -> Result<ExitCode> {
    let inst = load_instance(a.algo, a.input.as_deref(), a.input_b.as_deref(), &a.synth)?;
    let cfg = RunConfig {
        algo: a.algo,
        params: RunParams {
            cost: a.cost,
            cost1: a.cost1,
            cost2: a.cost2,
            k: a.k,
        },
        threads: a.threads,
        repeats: a.repeats,
        verify: a.verify,
        seed: a.synth.seed,
    };
    let results = run(&cfg, inst)?;
    let sink: Box<dyn Write> = match &a.out {
        Some(p) => Box::new(io::BufWriter::new(std::fs::File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    };
    let mut w = RecordWriter::new(sink)?;
    let mut failed = false;
    for r in &results {
        w.write(&r.record)?;
        if let Some(v) = &r.verdict {
            eprintln!("{} threads={} {v}", r.record.algo, r.record.threads);
            failed |= matches!(v, Verdict::Fail(_));
        }
    }
    w.into_inner()?.flush()?;
    Ok(if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_selftest(a: SelftestArgs) -> Result<ExitCode> {
    let r = selftest(&SelftestOptions {
        seed: a.seed,
        cases: a.cases,
        out_dir: a.out,
    })?;
    match r.failure {
        None => {
            println!("selftest: {} checks passed", r.passed);
            Ok(ExitCode::SUCCESS)
        }
        Some(cx) => {
            println!("selftest: {} checks passed, {} failed", r.passed, cx.name);
            print!("{}", cx.detail);
            for f in &cx.files {
                println!("wrote {}", f.display());
            }
            Ok(ExitCode::FAILURE)
        }
    }
}

fn cmd_depth(a: DepthArgs) -> Result<()> {
    let s = &a.synth;
    match a.problem {
        Problem::Glws => {
            let pos = match &a.input {
                Some(p) => InstanceFile::load(p)?.positions()?,
                None => gen::glws_positions(s.n, s.distribution, s.spread, s.seed),
            };
            let model = a.cost.build(pos)?;
            let r = DepthReport::from_best(glws_seq(&model, 0).best())?;
            println!("perfect_depth {}", r.perfect_depth);
            println!("effective_depth {}", r.effective_depth);
        }
        Problem::Strings => {
            let (x, y) = match (&a.input, &a.input_b) {
                (Some(p), Some(q)) => (load_bytes(p)?, load_bytes(q)?),
                (None, None) => gen::sequences(s.n, s.m, s.alphabet, s.seed)?,
                _ => {
                    return Err(DpError::invalid(
                        "give both --input and --input-b or neither",
                    ))
                }
            };
            let w1 = a.cost1.build_unit(x.len())?;
            let w2 = a.cost2.build_unit(y.len())?;
            let inst = GapInstance::from_bytes(&x, &y, w1, w2)?;
            let sol = gap_solve(&inst)?;
            println!("effective_depth {}", gap_effective_depth(&inst, &sol)?);
        }
        Problem::Matches => return Err(DpError::invalid("depth supports glws and strings")),
    }
    Ok(())
}
