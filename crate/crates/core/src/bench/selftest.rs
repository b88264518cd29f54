//! `dpdp selftest`: fixed examples plus seeded random suites checked
//! against the brute-force oracles. The first failure is written to disk as
//! a reproducible counterexample.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rand::Rng;

use crate::bench::gen;
use crate::bench::instance::{InstanceFile, Payload};
use crate::bench::run::{execute, prepare, verify, Algo, Instance, RunParams, Verdict};
use crate::cost::CostSpec;
use crate::error::Result;
use crate::sequence::MatchList;
use crate::types::Cost;

#[derive(Debug, Clone)]
pub struct SelftestOptions {
    pub seed: u64,
    /// Random instances per algorithm.
    pub cases: usize,
    pub out_dir: PathBuf,
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    pub name: String,
    pub detail: String,
    pub files: Vec<PathBuf>,
}

#[derive(Debug, Clone)]
pub struct SelftestReport {
    pub passed: usize,
    pub failure: Option<Counterexample>,
}

struct Case {
    name: String,
    algo: Algo,
    params: RunParams,
    inst: Instance,
    expected: Option<Vec<Cost>>,
}

fn spec(s: &str) -> CostSpec {
    s.parse().expect("valid built-in spec")
}

fn smoke() -> Vec<Case> {
    let quad0 = RunParams {
        cost: spec("quad:C=0"),
        k: 2,
        ..Default::default()
    };
    let gap = RunParams {
        cost1: spec("quad:C=5"),
        cost2: spec("quad:C=5"),
        ..Default::default()
    };
    vec![
        Case {
            name: "glws-quad10".into(),
            algo: Algo::GlwsPar,
            params: RunParams::default(),
            inst: Instance::Positions((1..=6).collect()),
            expected: Some(vec![11, 14, 19, 26, 33, 38, 0, 0, 0, 0, 2, 3]),
        },
        Case {
            name: "lcs-abcb".into(),
            algo: Algo::Lcs,
            params: RunParams::default(),
            inst: Instance::Sequences(b"abcb".to_vec(), b"bca".to_vec()),
            expected: Some(vec![2]),
        },
        Case {
            name: "lis-small".into(),
            algo: Algo::Lis,
            params: RunParams::default(),
            inst: Instance::Permutation(vec![3, 1, 4, 1, 5, 9, 2, 6]),
            expected: Some(vec![4]),
        },
        Case {
            name: "kglws-square".into(),
            algo: Algo::Kglws,
            params: quad0,
            inst: Instance::Positions((1..=4).collect()),
            expected: Some(vec![8]),
        },
        Case {
            name: "gap-empty-row".into(),
            algo: Algo::Gap,
            params: gap,
            inst: Instance::Sequences(Vec::new(), b"xyz".to_vec()),
            expected: Some(vec![0, 6, 9, 14]),
        },
        Case {
            name: "obst-keys".into(),
            algo: Algo::Obst,
            params: RunParams::default(),
            inst: Instance::Weights(crate::extras::ObstWeights::Keys(vec![3, 3])),
            expected: Some(vec![9]),
        },
    ]
}

fn random_spec(rng: &mut impl Rng, convex_only: bool) -> CostSpec {
    let c = rng.gen_range(0..40);
    let pick = if convex_only {
        rng.gen_range(0..2)
    } else {
        rng.gen_range(0..3)
    };
    match pick {
        0 => spec(&format!("quad:C={c}")),
        1 => spec(&format!("median:C={c}")),
        _ => spec(&format!("sqrt:C={c},K={}", rng.gen_range(1..200))),
    }
}

fn random_cases(seed: u64, count: usize) -> Vec<Case> {
    let mut rng = gen::rng(seed);
    let mut out = Vec::new();
    for t in 0..count {
        let s = rng.gen::<u64>();
        let dist = if rng.gen_bool(0.5) {
            gen::Distribution::Uniform
        } else {
            gen::Distribution::Clustered
        };
        let n = rng.gen_range(0..=120);
        let mut p = RunParams {
            cost: random_spec(&mut rng, false),
            ..Default::default()
        };
        out.push(Case {
            name: format!("glws-{t}"),
            algo: Algo::GlwsPar,
            params: p.clone(),
            inst: Instance::Positions(gen::glws_positions(n, dist, rng.gen_range(1..20), s)),
            expected: None,
        });

        p.cost = random_spec(&mut rng, true);
        let n = rng.gen_range(1..=60);
        p.k = rng.gen_range(1..=n);
        out.push(Case {
            name: format!("kglws-{t}"),
            algo: Algo::Kglws,
            params: p,
            inst: Instance::Positions(gen::glws_positions(n, dist, 6, s)),
            expected: None,
        });

        let sigma = rng.gen_range(1..=6);
        let (a, b) = gen::sequences(rng.gen_range(0..=40), rng.gen_range(0..=40), sigma, s)
            .expect("alphabet in range");
        out.push(Case {
            name: format!("lcs-{t}"),
            algo: Algo::Lcs,
            params: RunParams::default(),
            inst: Instance::Sequences(a.clone(), b.clone()),
            expected: None,
        });
        out.push(Case {
            name: format!("gap-{t}"),
            algo: Algo::Gap,
            params: RunParams {
                cost1: random_spec(&mut rng, false),
                cost2: random_spec(&mut rng, false),
                ..Default::default()
            },
            inst: Instance::Sequences(a[..a.len().min(16)].to_vec(), b[..b.len().min(16)].to_vec()),
            expected: None,
        });

        let n = rng.gen_range(0..=500);
        let lis_input: Vec<u32> = if rng.gen_bool(0.5) {
            gen::permutation(n, s)
        } else {
            (0..n).map(|_| rng.gen_range(0..20)).collect()
        };
        out.push(Case {
            name: format!("lis-{t}"),
            algo: Algo::Lis,
            params: RunParams::default(),
            inst: Instance::Permutation(lis_input),
            expected: None,
        });
        out.push(Case {
            name: format!("obst-{t}"),
            algo: Algo::BruteObst,
            params: RunParams::default(),
            inst: Instance::Weights(gen::obst_weights(
                rng.gen_range(0..=12),
                rng.gen_bool(0.5),
                s,
            )),
            expected: None,
        });
    }
    out
}

/// Checks one case; `Ok(None)` means it passed.
fn check(case: &Case) -> Result<Option<String>> {
    let prep = prepare(case.algo, case.inst.clone(), &case.params)?;
    let got = execute(case.algo, &prep, &case.params)?;
    if let Some(want) = &case.expected {
        if &got.fingerprint != want {
            return Ok(Some(format!(
                "expected {want:?}\nactual   {:?}\n",
                got.fingerprint
            )));
        }
    }
    Ok(match verify(case.algo, &prep, &case.params, &got)? {
        Verdict::Pass | Verdict::Skipped(_) => None,
        Verdict::Fail(why) => Some(format!("{why}\nactual {:?}\n", got.fingerprint)),
    })
}

fn instance_files(inst: &Instance) -> Result<Vec<(&'static str, InstanceFile)>> {
    Ok(match inst {
        Instance::Positions(p) => vec![(
            "instance.bin",
            InstanceFile::new(Payload::Coordinates(p.iter().map(|&x| x as f64).collect()))?,
        )],
        Instance::Sequences(a, b) => vec![
            ("a.bin", InstanceFile::new(Payload::Bytes(a.clone()))?),
            ("b.bin", InstanceFile::new(Payload::Bytes(b.clone()))?),
        ],
        Instance::Matches(m) => vec![(
            "instance.bin",
            InstanceFile::new(Payload::Matches(matches_u64(m)))?,
        )],
        Instance::Permutation(_) | Instance::Weights(_) => Vec::new(),
    })
}

fn matches_u64(m: &MatchList) -> Vec<(u64, u64)> {
    m.pairs()
        .iter()
        .map(|&(i, j)| (i as u64, j as u64))
        .collect()
}

fn write_counterexample(dir: &Path, case: &Case, detail: &str) -> Result<Counterexample> {
    let dir = dir.join(&case.name);
    fs::create_dir_all(&dir)?;
    let mut files = Vec::new();
    for (name, f) in instance_files(&case.inst)? {
        let path = dir.join(name);
        f.save(&path)?;
        files.push(path);
    }
    let mut txt = String::new();
    let p = &case.params;
    let _ = writeln!(txt, "algo {}", case.algo);
    let _ = writeln!(
        txt,
        "cost {} cost1 {} cost2 {} k {}",
        p.cost, p.cost1, p.cost2, p.k
    );
    match &case.inst {
        Instance::Permutation(v) => {
            let _ = writeln!(txt, "input {v:?}");
        }
        Instance::Weights(w) => {
            let _ = writeln!(txt, "input {w:?}");
        }
        _ => {}
    }
    txt.push_str(detail);
    let path = dir.join("result.txt");
    fs::write(&path, txt)?;
    files.push(path);
    Ok(Counterexample {
        name: case.name.clone(),
        detail: detail.to_string(),
        files,
    })
}

pub fn selftest(opts: &SelftestOptions) -> Result<SelftestReport> {
    let mut passed = 0;
    for case in smoke()
        .into_iter()
        .chain(random_cases(opts.seed, opts.cases))
    {
        let outcome = match check(&case) {
            Ok(o) => o,
            Err(e) => Some(format!("error: {e}\n")),
        };
        if let Some(detail) = outcome {
            let cx = write_counterexample(&opts.out_dir, &case, &detail)?;
            return Ok(SelftestReport {
                passed,
                failure: Some(cx),
            });
        }
        passed += 1;
    }
    Ok(SelftestReport {
        passed,
        failure: None,
    })
}
