//! Algorithm runners behind `dpdp run`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::bench::record::BenchRecord;
use crate::bench::with_threads;
use crate::cost::{CostModel, CostSpec, PostOfficeCost};
use crate::error::{DpError, Result};
use crate::extras::{k_glws, obst, ObstWeights};
use crate::gap::{gap_solve, GapInstance};
use crate::glws::{glws_par, glws_seq, GlwsSolution};
use crate::oracle;
use crate::sequence::{build_match_list, lis, sparse_lcs, MatchList};
use crate::types::Cost;

/// Inputs larger than this many elementary steps skip brute-force checks.
const VERIFY_BUDGET: u128 = 2_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algo {
    GlwsSeq,
    GlwsPar,
    Lis,
    Lcs,
    Gap,
    Kglws,
    Obst,
    BruteGlws,
    BruteLis,
    BruteLcs,
    BruteGap,
    BruteKglws,
    BruteObst,
}

impl Algo {
    pub const ALL: [Algo; 13] = [
        Algo::GlwsSeq,
        Algo::GlwsPar,
        Algo::Lis,
        Algo::Lcs,
        Algo::Gap,
        Algo::Kglws,
        Algo::Obst,
        Algo::BruteGlws,
        Algo::BruteLis,
        Algo::BruteLcs,
        Algo::BruteGap,
        Algo::BruteKglws,
        Algo::BruteObst,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algo::GlwsSeq => "glws-seq",
            Algo::GlwsPar => "glws-par",
            Algo::Lis => "lis",
            Algo::Lcs => "lcs",
            Algo::Gap => "gap",
            Algo::Kglws => "kglws",
            Algo::Obst => "obst",
            Algo::BruteGlws => "brute-glws",
            Algo::BruteLis => "brute-lis",
            Algo::BruteLcs => "brute-lcs",
            Algo::BruteGap => "brute-gap",
            Algo::BruteKglws => "brute-kglws",
            Algo::BruteObst => "brute-obst",
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = DpError;

    fn from_str(s: &str) -> Result<Self> {
        Algo::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Algo::ALL.iter().map(|a| a.name()).collect();
                DpError::invalid(format!(
                    "unknown algorithm '{s}' (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}

/// Raw input of a run, before any preprocessing.
#[derive(Debug, Clone)]
pub enum Instance {
    Positions(Vec<i64>),
    Sequences(Vec<u8>, Vec<u8>),
    Matches(MatchList),
    Permutation(Vec<u32>),
    Weights(ObstWeights),
}

impl Instance {
    fn kind(&self) -> &'static str {
        match self {
            Instance::Positions(_) => "coordinates",
            Instance::Sequences(..) => "two byte sequences",
            Instance::Matches(_) => "a match list",
            Instance::Permutation(_) => "a key sequence",
            Instance::Weights(_) => "weights",
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunParams {
    pub cost: CostSpec,
    pub cost1: CostSpec,
    pub cost2: CostSpec,
    pub k: usize,
}

impl Default for RunParams {
    fn default() -> Self {
        let quad: CostSpec = "quad:C=10".parse().expect("valid built-in spec");
        RunParams {
            cost: quad,
            cost1: "quad:C=4".parse().expect("valid built-in spec"),
            cost2: "quad:C=4".parse().expect("valid built-in spec"),
            k: 16,
        }
    }
}

/// An instance after the untimed preprocessing step.
pub enum Prepared {
    Glws(PostOfficeCost),
    Lis(Vec<u32>),
    Lcs {
        matches: MatchList,
        n: usize,
        m: usize,
        strings: Option<(Vec<u8>, Vec<u8>)>,
    },
    Gap(Box<GapInstance<PostOfficeCost, PostOfficeCost>>),
    Kglws(PostOfficeCost),
    Obst(ObstWeights),
}

/// What a single execution produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub n: usize,
    pub m: usize,
    pub k_out: usize,
    pub rounds: usize,
    pub wasted: usize,
    /// Values compared by `--verify`.
    pub fingerprint: Vec<Cost>,
}

fn mismatch(algo: Algo, inst: &Instance) -> DpError {
    DpError::invalid(format!("{algo} cannot run on {}", inst.kind()))
}

pub fn prepare(algo: Algo, inst: Instance, params: &RunParams) -> Result<Prepared> {
    use Algo::*;
    Ok(match (algo, inst) {
        (GlwsSeq | GlwsPar | BruteGlws, Instance::Positions(p)) => {
            Prepared::Glws(params.cost.build(p)?)
        }
        (Kglws | BruteKglws, Instance::Positions(p)) => Prepared::Kglws(params.cost.build(p)?),
        (Lis | BruteLis, Instance::Permutation(v)) => Prepared::Lis(v),
        (Lcs | BruteLcs, Instance::Sequences(a, b)) => Prepared::Lcs {
            matches: build_match_list(&a, &b),
            n: a.len(),
            m: b.len(),
            strings: Some((a, b)),
        },
        (Lcs, Instance::Matches(ml)) => Prepared::Lcs {
            n: ml.pairs().iter().map(|p| p.0).max().unwrap_or(0),
            m: ml.pairs().iter().map(|p| p.1).max().unwrap_or(0),
            matches: ml,
            strings: None,
        },
        (Gap | BruteGap, Instance::Sequences(a, b)) => {
            let w1 = params.cost1.build_unit(a.len())?;
            let w2 = params.cost2.build_unit(b.len())?;
            Prepared::Gap(Box::new(GapInstance::from_bytes(&a, &b, w1, w2)?))
        }
        (Obst | BruteObst, Instance::Weights(w)) => Prepared::Obst(w),
        (algo, inst) => return Err(mismatch(algo, &inst)),
    })
}

fn glws_outcome(s: &GlwsSolution) -> Outcome {
    let mut fp = s.values().to_vec();
    fp.extend(s.best().iter().map(|&b| b as Cost));
    let st = s.stats.clone().unwrap_or_default();
    Outcome {
        n: s.n(),
        m: 0,
        k_out: s.path().len() - 1,
        rounds: st.rounds,
        wasted: st.wasted_states,
        fingerprint: fp,
    }
}

fn simple(n: usize, m: usize, k_out: usize, value: Cost) -> Outcome {
    Outcome {
        n,
        m,
        k_out,
        rounds: 0,
        wasted: 0,
        fingerprint: vec![value],
    }
}

pub fn execute(algo: Algo, prep: &Prepared, params: &RunParams) -> Result<Outcome> {
    use Algo::*;
    Ok(match (algo, prep) {
        (GlwsSeq, Prepared::Glws(m)) => glws_outcome(&glws_seq(m, 0)),
        (GlwsPar, Prepared::Glws(m)) => glws_outcome(&glws_par(m, 0)?),
        (BruteGlws, Prepared::Glws(m)) => glws_outcome(&oracle::brute_glws(m, 0)),
        (Lis, Prepared::Lis(v)) => {
            let r = lis(v);
            Outcome {
                rounds: r.stats.rounds,
                ..simple(v.len(), 0, r.k, r.k as Cost)
            }
        }
        (BruteLis, Prepared::Lis(v)) => {
            let (k, _) = oracle::brute_lis(v);
            simple(v.len(), 0, k, k as Cost)
        }
        (Lcs, Prepared::Lcs { matches, n, m, .. }) => {
            let r = sparse_lcs(matches);
            Outcome {
                rounds: r.stats.rounds,
                ..simple(*n, *m, r.k, r.k as Cost)
            }
        }
        (BruteLcs, Prepared::Lcs { strings, n, m, .. }) => {
            let (a, b) = strings
                .as_ref()
                .ok_or_else(|| DpError::invalid("brute-lcs needs the two strings"))?;
            let k = oracle::brute_lcs(a, b);
            simple(*n, *m, k, k as Cost)
        }
        (Gap, Prepared::Gap(g)) => {
            let s = gap_solve(g)?;
            Outcome {
                n: s.n(),
                m: s.m(),
                k_out: s.stats.rounds,
                rounds: s.stats.rounds,
                wasted: s.stats.wasted_states,
                fingerprint: s.table().to_vec(),
            }
        }
        (BruteGap, Prepared::Gap(g)) => Outcome {
            fingerprint: oracle::brute_gap(g),
            ..simple(g.a().len(), g.b().len(), 0, 0)
        },
        (Kglws, Prepared::Kglws(m)) => {
            let r = k_glws(m, params.k)?;
            Outcome {
                rounds: r.stats.rounds,
                ..simple(m.len(), 0, params.k, r.cost)
            }
        }
        (BruteKglws, Prepared::Kglws(m)) => {
            simple(m.len(), 0, params.k, oracle::brute_kglws(m, params.k))
        }
        (Obst, Prepared::Obst(w)) => {
            let r = obst(w, true)?;
            Outcome {
                rounds: r.stats.rounds,
                k_out: r.stats.rounds,
                ..simple(r.table.n(), 0, 0, r.cost)
            }
        }
        (BruteObst, Prepared::Obst(w)) => simple(w.keys()?, 0, 0, oracle::brute_obst(w)?),
        (algo, _) => {
            return Err(DpError::invalid(format!(
                "{algo} was prepared for another algorithm"
            )))
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    Skipped(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "verify=pass"),
            Verdict::Fail(why) => write!(f, "verify=FAIL ({why})"),
            Verdict::Skipped(why) => write!(f, "verify=skipped ({why})"),
        }
    }
}

/// Fingerprint from an independent method, or why none was computed.
fn reference(
    algo: Algo,
    prep: &Prepared,
    params: &RunParams,
) -> Result<std::result::Result<Vec<Cost>, String>> {
    use Algo::*;
    let big = |steps: u128| {
        Err(format!(
            "about {steps} steps exceeds the verification budget"
        ))
    };
    Ok(match (algo, prep) {
        (GlwsPar | BruteGlws, Prepared::Glws(m)) => Ok(glws_outcome(&glws_seq(m, 0)).fingerprint),
        (GlwsSeq, Prepared::Glws(m)) => Ok(glws_outcome(&glws_par(m, 0)?).fingerprint),
        (Lis, Prepared::Lis(v)) if (v.len() as u128).pow(2) <= VERIFY_BUDGET => {
            Ok(vec![oracle::brute_lis(v).0 as Cost])
        }
        (Lis | BruteLis, Prepared::Lis(v)) => Ok(vec![oracle::patience_lis(v) as Cost]),
        (
            Lcs,
            Prepared::Lcs {
                strings: Some((a, b)),
                ..
            },
        ) if (a.len() as u128) * (b.len() as u128) <= VERIFY_BUDGET => {
            Ok(vec![oracle::brute_lcs(a, b) as Cost])
        }
        (Lcs, Prepared::Lcs { matches, .. }) => {
            Ok(vec![oracle::patience_lis(&matches.columns()) as Cost])
        }
        (BruteLcs, Prepared::Lcs { matches, .. }) => Ok(vec![sparse_lcs(matches).k as Cost]),
        (Gap, Prepared::Gap(g)) => {
            let (n, m) = (g.a().len() as u128, g.b().len() as u128);
            let steps = (n + 1) * (m + 1) * (n + m + 2);
            if steps <= VERIFY_BUDGET {
                Ok(oracle::brute_gap(g))
            } else {
                big(steps)
            }
        }
        (BruteGap, Prepared::Gap(g)) => Ok(gap_solve(g)?.table().to_vec()),
        (Kglws, Prepared::Kglws(m)) => {
            let steps = (params.k as u128) * (m.len() as u128).pow(2);
            if steps <= VERIFY_BUDGET {
                Ok(vec![oracle::brute_kglws(m, params.k)])
            } else {
                big(steps)
            }
        }
        (BruteKglws, Prepared::Kglws(m)) => Ok(vec![k_glws(m, params.k)?.cost]),
        (Obst | BruteObst, Prepared::Obst(w)) => Ok(vec![obst(w, false)?.cost]),
        (algo, _) => {
            return Err(DpError::invalid(format!(
                "{algo} was prepared for another algorithm"
            )))
        }
    })
}

pub fn verify(algo: Algo, prep: &Prepared, params: &RunParams, out: &Outcome) -> Result<Verdict> {
    Ok(match reference(algo, prep, params)? {
        Err(why) => Verdict::Skipped(why),
        Ok(fp) if fp == out.fingerprint => Verdict::Pass,
        Ok(fp) => {
            let at = fp.iter().zip(&out.fingerprint).position(|(a, b)| a != b);
            Verdict::Fail(match at {
                Some(i) => format!("entry {i}: expected {}, got {}", fp[i], out.fingerprint[i]),
                None => format!("length {} vs {}", fp.len(), out.fingerprint.len()),
            })
        }
    })
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub algo: Algo,
    pub params: RunParams,
    pub threads: Vec<usize>,
    pub repeats: usize,
    pub verify: bool,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct RunResult {
    pub record: BenchRecord,
    pub verdict: Option<Verdict>,
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let k = v.len();
    if k % 2 == 1 {
        v[k / 2]
    } else {
        (v[k / 2 - 1] + v[k / 2]) / 2.0
    }
}

fn cost_label(algo: Algo, params: &RunParams) -> String {
    use Algo::*;
    match algo {
        GlwsSeq | GlwsPar | BruteGlws | Kglws | BruteKglws => params.cost.to_string(),
        Gap | BruteGap => format!("{}|{}", params.cost1, params.cost2),
        _ => "-".into(),
    }
}

/// One warm-up plus `repeats` timed executions per thread count; the median
/// time is reported. Preprocessing happens once, outside the timed region.
pub fn run(cfg: &RunConfig, inst: Instance) -> Result<Vec<RunResult>> {
    if cfg.repeats == 0 {
        return Err(DpError::invalid("repeats must be at least 1"));
    }
    if cfg.threads.is_empty() {
        return Err(DpError::invalid("no thread counts given"));
    }
    let prep = prepare(cfg.algo, inst, &cfg.params)?;
    let mut out = Vec::with_capacity(cfg.threads.len());
    for &t in &cfg.threads {
        let (outcome, times) = with_threads(t, || -> Result<(Outcome, Vec<f64>)> {
            let first = execute(cfg.algo, &prep, &cfg.params)?;
            let mut times = Vec::with_capacity(cfg.repeats);
            for _ in 0..cfg.repeats {
                let t0 = Instant::now();
                let o = execute(cfg.algo, &prep, &cfg.params)?;
                times.push(t0.elapsed().as_secs_f64() * 1e3);
                if o != first {
                    return Err(DpError::Internal(format!(
                        "{} is not deterministic across repeats",
                        cfg.algo
                    )));
                }
            }
            Ok((first, times))
        })??;
        let verdict = if cfg.verify {
            Some(verify(cfg.algo, &prep, &cfg.params, &outcome)?)
        } else {
            None
        };
        out.push(RunResult {
            record: BenchRecord {
                algo: cfg.algo.name().into(),
                n: outcome.n,
                m: outcome.m,
                k_out: outcome.k_out,
                rounds: outcome.rounds,
                wasted_states: outcome.wasted,
                threads: t,
                seed: cfg.seed,
                cost_spec: cost_label(cfg.algo, &cfg.params),
                time_ms: median(times),
            },
            verdict,
        });
    }
    Ok(out)
}
