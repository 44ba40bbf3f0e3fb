use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use triwise::constructions::{
    build_frankl, build_g, build_g_block, build_gprime, build_trivial, build_two_block,
};
use triwise::covers::{classify_cover_family, covering_number, min_covers};
use triwise::family::{
    count_triangles, is_maximal, is_r_wise_t_intersecting, is_triangle, is_trivial, Params,
};
use triwise::fileio::FamilyFile;
use triwise::formulas::{
    exact_count_g, intersection_floor, lower_bound_l21, size_bound_l22, size_bound_l42,
    size_bound_l42_relaxed, size_bounds_l24, threshold_n0, ThresholdLemma,
};
use triwise::hypergraph::{build_cover_hypergraph, decompose, verdict_consequence};
use triwise::search::{enumerate_maximal_r2, stochastic_search, stochastic_search_parallel};
use triwise::verify::{run_suite, SuiteOptions};
use triwise::{Error, Family};

const EXIT_VERIFY_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_EXCEEDANCE: u8 = 4;

#[derive(Parser)]
#[command(name = "triwise", version, about = "Exact computations for r-wise t-intersecting uniform set families")]
struct Cli {
    /// Summary-only output: suppress streamed lists and per-check lines.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    G,
    Gprime,
    Trivial,
    Frankl,
    TwoBlock,
    GBlock,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    ExactCount,
    #[value(name = "lower-21")]
    Lower21,
    #[value(name = "size-22")]
    Size22,
    #[value(name = "size-24")]
    Size24,
    #[value(name = "size-42")]
    Size42,
    #[value(name = "floor-41")]
    Floor41,
    Threshold,
}

#[derive(Args)]
struct InArgs {
    /// Input family file (JSON).
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    t: Option<u32>,
}

impl InArgs {
    /// Flags win over file metadata; both absent is a usage error.
    fn resolve(&self, file: &FamilyFile, need_r: bool) -> Result<(u32, u32), Error> {
        let t = self
            .t
            .or(file.t)
            .ok_or_else(|| Error::Param("t not given and absent from the file".into()))?;
        let r = match (need_r, self.r.or(file.r)) {
            (true, Some(r)) => r,
            (true, None) => return Err(Error::Param("r not given and absent from the file".into())),
            (false, r) => r.unwrap_or(2),
        };
        Ok((r, t))
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Build one of the named families and write it to a file.
    Construct {
        #[arg(long, value_enum)]
        family: FamilyKind,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        t: u32,
        /// Window parameter of the Frankl family (t+2 <= ell <= k+1).
        #[arg(long)]
        ell: Option<u32>,
        /// Block index for g-block (1-indexed).
        #[arg(long)]
        i: Option<u32>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Report whether a family is r-wise t-intersecting, trivial, maximal.
    Check(InArgs),
    /// Count (r+1, t)-triangles in a family.
    Triangles {
        #[command(flatten)]
        io: InArgs,
        /// Stream every triangle as a JSON line before the report.
        #[arg(long)]
        list: bool,
        /// Count even when the family is not r-wise t-intersecting.
        #[arg(long)]
        force: bool,
    },
    /// Covering number, minimum t-covers, and their classification.
    Covers {
        #[command(flatten)]
        io: InArgs,
        #[arg(long)]
        list: bool,
    },
    /// Cover hypergraph: components, clique structure, verdict.
    Hypergraph {
        #[command(flatten)]
        io: InArgs,
        #[arg(long)]
        list: bool,
    },
    /// Evaluate one of the closed-form quantities exactly.
    Formula {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        t: Option<u32>,
        /// Case selector for size-24 (1, 2, or 3).
        #[arg(long)]
        case: Option<u32>,
        /// Threshold lemma selector: 43, 44, 45, or 46.
        #[arg(long)]
        lemma: Option<u32>,
        #[arg(long)]
        ell: Option<u32>,
        #[arg(long)]
        s: Option<u32>,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 9)]
        max_n: u32,
        #[arg(long, default_value_t = 5)]
        max_k: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sample counts for the randomized suites (lemma41, lemma23).
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        /// Where to serialize the first failing check.
        #[arg(long, default_value = "triwise-counterexample.json")]
        counterexample: PathBuf,
    },
    /// Search for triangle-rich maximal families.
    #[command(subcommand)]
    Search(SearchCmd),
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Complete r = 2 enumeration, one family per isomorphism class.
    Exhaustive {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random saturation; deterministic for a fixed seed and one worker.
    Stochastic {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        t: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random maximal families to draw.
        #[arg(long, default_value_t = 100)]
        budget: u64,
        /// Defaults to $TRIWISE_WORKERS, then 1.
        #[arg(long)]
        workers: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn elems_list(sets: &[triwise::KSet]) -> Vec<Vec<u32>> {
    sets.iter().map(|s| s.elems()).collect()
}

fn read_family(path: &PathBuf) -> Result<(FamilyFile, Family), Error> {
    let file = FamilyFile::read(path)?;
    let fam = file.to_family()?;
    Ok((file, fam))
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.cmd {
        Cmd::Construct { family, n, k, r, t, ell, i, out } => {
            let (n, k, t) = (*n, *k, *t);
            let need_r = |r: &Option<u32>| -> Result<u32, Error> {
                r.ok_or_else(|| Error::Param("this family needs --r".into()))
            };
            let (fam, meta_r) = match family {
                FamilyKind::G => {
                    let r = need_r(r)?;
                    (build_g(n, k, r, t)?, Some(r))
                }
                FamilyKind::Gprime => {
                    let r = need_r(r)?;
                    (build_gprime(n, k, r, t)?, Some(r))
                }
                FamilyKind::GBlock => {
                    let r = need_r(r)?;
                    let i = i.ok_or_else(|| Error::Param("g-block needs --i".into()))?;
                    (build_g_block(n, k, r, t, i)?, Some(r))
                }
                FamilyKind::Trivial => (build_trivial(n, k, t)?, *r),
                FamilyKind::Frankl => {
                    let ell = ell.ok_or_else(|| Error::Param("frankl needs --ell".into()))?;
                    (build_frankl(n, k, t, ell)?, *r)
                }
                FamilyKind::TwoBlock => {
                    let r = need_r(r)?;
                    (build_two_block(n, k, r, t)?, Some(r))
                }
            };
            let file = FamilyFile::from_family(&fam, meta_r, Some(t));
            file.write(out)?;
            if !cli.quiet {
                println!("{}", json!({"members": fam.len(), "path": out}));
            }
            Ok(0)
        }

        Cmd::Check(io) => {
            let (file, fam) = read_family(&io.input)?;
            let (r, t) = io.resolve(&file, true)?;
            let intersecting = is_r_wise_t_intersecting(&fam, r, t);
            let report = json!({
                "n": fam.n(), "k": fam.k(), "r": r, "t": t,
                "members": fam.len(),
                "intersecting": intersecting,
                "trivial": is_trivial(&fam, t),
                "maximal": if intersecting { Some(is_maximal(&fam, r, t)?) } else { None },
            });
            println!("{report}");
            Ok(0)
        }

        Cmd::Triangles { io, list, force } => {
            let (file, fam) = read_family(&io.input)?;
            let (r, t) = io.resolve(&file, true)?;
            let count = count_triangles(&fam, r, t, *force)?;
            if *list && !cli.quiet {
                stream_triangles(&fam, r, t)?;
            }
            let n_ge_k4 = u64::from(fam.n()) >= u64::from(fam.k()).pow(4);
            let report = json!({
                "n": fam.n(), "k": fam.k(), "r": r, "t": t,
                "intersecting": is_r_wise_t_intersecting(&fam, r, t),
                "triangle_count": count.to_string(),
                "n_ge_k4": n_ge_k4,
            });
            println!("{report}");
            Ok(0)
        }

        Cmd::Covers { io, list } => {
            let (file, fam) = read_family(&io.input)?;
            let (_, t) = io.resolve(&file, false)?;
            let tau = covering_number(&fam, t)?;
            let covers = min_covers(&fam, t)?;
            if *list && !cli.quiet {
                for c in &covers {
                    println!("{}", json!(c.elems()));
                }
            }
            // the classification is only defined for maximal 2-wise
            // t-intersecting families; report null otherwise
            let classified = if is_r_wise_t_intersecting(&fam, 2, t) && is_maximal(&fam, 2, t)? {
                Some(classify_cover_family(&fam, t)?)
            } else {
                None
            };
            let report = json!({
                "n": fam.n(), "k": fam.k(), "t": t,
                "tau": tau,
                "min_covers": covers.len(),
                "classification": classified.as_ref().map(|r| &r.classification),
                "core": classified.as_ref().map(|r| r.core.elems()),
            });
            println!("{report}");
            Ok(0)
        }

        Cmd::Hypergraph { io, list } => {
            let (file, fam) = read_family(&io.input)?;
            let (r, t) = io.resolve(&file, true)?;
            let hg = build_cover_hypergraph(&fam, t)?;
            if *list && !cli.quiet {
                for e in &hg.edges {
                    println!("{}", json!(e.elems()));
                }
            }
            let report = decompose(&hg, r);
            let consequence = verdict_consequence(&report, &fam, r, t)?;
            let components: Vec<_> = report
                .components
                .iter()
                .map(|c| {
                    json!({
                        "order": c.vertices.len(),
                        "vertices": c.vertices.elems(),
                        "edges": c.edges.len(),
                        "is_clique": c.is_clique,
                    })
                })
                .collect();
            let out = json!({
                "n": fam.n(), "k": fam.k(), "r": r, "t": t,
                "tau": hg.tau,
                "outside_regime": hg.outside_regime,
                "edges": hg.edges.len(),
                "components": components,
                "verdict": report.verdict,
                "consequence": consequence,
            });
            println!("{out}");
            Ok(0)
        }

        Cmd::Formula { which, n, k, r, t, case, lemma, ell, s } => {
            let need = |v: &Option<u32>, name: &str| -> Result<u32, Error> {
                v.ok_or_else(|| Error::Param(format!("--{name} is required for this formula")))
            };
            match which {
                Which::ExactCount => {
                    let v = exact_count_g(need(n, "n")?, need(k, "k")?, need(r, "r")?, need(t, "t")?)?;
                    println!("{v}");
                }
                Which::Lower21 => {
                    let b = lower_bound_l21(need(n, "n")?, need(k, "k")?, need(r, "r")?, need(t, "t")?)?;
                    if b.below_hypothesis && !cli.quiet {
                        eprintln!("note: n < k^4, the bound is outside its hypothesis here");
                    }
                    println!("{}", b.value);
                }
                Which::Size22 => {
                    println!("{}", size_bound_l22(need(n, "n")?, need(k, "k")?, need(t, "t")?)?);
                }
                Which::Size24 => {
                    let v = size_bounds_l24(need(n, "n")?, need(k, "k")?, need(t, "t")?, need(case, "case")?)?;
                    println!("{v}");
                }
                Which::Size42 => match (ell, s) {
                    (Some(ell), Some(s)) => {
                        println!("{}", size_bound_l42(need(n, "n")?, need(k, "k")?, need(t, "t")?, *ell, *s)?);
                    }
                    _ => {
                        let v = size_bound_l42_relaxed(need(n, "n")?, need(k, "k")?, need(r, "r")?, need(t, "t")?)?;
                        println!("{v}");
                    }
                },
                Which::Floor41 => {
                    println!("{}", intersection_floor(need(r, "r")?, need(s, "s")?, need(t, "t")?)?);
                }
                Which::Threshold => {
                    let lem = match need(lemma, "lemma")? {
                        43 => ThresholdLemma::L43,
                        44 => ThresholdLemma::L44,
                        45 => ThresholdLemma::L45,
                        46 => ThresholdLemma::L46,
                        other => return Err(Error::Param(format!("unknown lemma {other}; use 43..46"))),
                    };
                    let spec = threshold_n0(need(r, "r")?, need(t, "t")?, lem)?;
                    println!("c = {}{}", spec.c, if spec.c_is_upper_approx { " (upper approximation)" } else { "" });
                    println!("d = {}", spec.d);
                    if let (Some(n), Some(k)) = (n, k) {
                        println!("meets n >= c*k^d at (n={n}, k={k}): {}", spec.meets(*n, *k));
                    }
                }
            }
            Ok(0)
        }

        Cmd::Verify { suite, max_n, max_k, seed, samples, counterexample } => {
            let opts = SuiteOptions {
                max_n: *max_n,
                max_k: *max_k,
                seed: *seed,
                floor_samples: *samples,
                cover_samples: (*samples).min(200),
            };
            let results = run_suite(suite, &opts)?;
            let mut total = 0usize;
            let mut failed = 0usize;
            let mut first_failure: Option<(String, String, String, Option<FamilyFile>)> = None;
            for sr in &results {
                for c in &sr.checks {
                    total += 1;
                    if !cli.quiet {
                        let mark = if c.passed { "ok  " } else { "FAIL" };
                        println!("{mark} {}/{}: {}", sr.suite, c.name, c.detail);
                    }
                    if !c.passed {
                        failed += 1;
                        if first_failure.is_none() {
                            first_failure = Some((
                                sr.suite.clone(),
                                c.name.clone(),
                                c.detail.clone(),
                                c.counterexample.clone(),
                            ));
                        }
                    }
                }
            }
            println!(
                "{}",
                json!({"suite": suite, "checks": total, "failed": failed, "seed": seed})
            );
            if let Some((suite, name, detail, family)) = first_failure {
                let blob = json!({
                    "suite": suite, "check": name, "detail": detail, "family": family,
                });
                std::fs::write(counterexample, format!("{blob}\n")).map_err(Error::Io)?;
                if !cli.quiet {
                    eprintln!("first counterexample written to {}", counterexample.display());
                }
                return Ok(EXIT_VERIFY_FAIL);
            }
            Ok(0)
        }

        Cmd::Search(SearchCmd::Exhaustive { n, k, t, out }) => {
            let enumeration = enumerate_maximal_r2(*n, *k, *t)?;
            let exact_g = exact_count_g(*n, *k, 2, *t)?;
            let mut best = num_bigint::BigUint::from(0u32);
            let mut best_idx = 0usize;
            let mut classes = Vec::new();
            for (i, fam) in enumeration.classes.iter().enumerate() {
                let count = count_triangles(fam, 2, *t, false)?;
                if count > best {
                    best = count.clone();
                    best_idx = i;
                }
                classes.push(json!({
                    "members": fam.len(),
                    "triangle_count": count.to_string(),
                }));
            }
            let exceedance = best > exact_g;
            let report = json!({
                "n": n, "k": k, "r": 2, "t": t,
                "classes": classes,
                "total_maximal": enumeration.total_maximal,
                "exact_dedup": enumeration.exact_dedup,
                "best_count": best.to_string(),
                "best_family": enumeration
                    .classes
                    .get(best_idx)
                    .map(|f| FamilyFile::from_family(f, Some(2), Some(*t))),
                "exact_count_g": exact_g.to_string(),
                "exceedance": exceedance,
            });
            emit_report(&report, out.as_ref())?;
            Ok(if exceedance { EXIT_EXCEEDANCE } else { 0 })
        }

        Cmd::Search(SearchCmd::Stochastic { n, k, r, t, seed, budget, workers, out }) => {
            let params = Params::new(*n, *k, *r, *t)?;
            let workers = match workers {
                Some(w) => *w,
                None => std::env::var("TRIWISE_WORKERS")
                    .ok()
                    .and_then(|v| v.parse().ok())
                    .unwrap_or(1),
            };
            if workers == 0 {
                return Err(Error::Param("--workers must be at least 1".into()));
            }
            let report = if workers == 1 {
                stochastic_search(params, *seed, *budget)?
            } else {
                stochastic_search_parallel(params, *seed, *budget, workers)?
            };
            let value = serde_json::to_value(&report).map_err(Error::Serde)?;
            emit_report(&value, out.as_ref())?;
            Ok(if report.exceedance { EXIT_EXCEEDANCE } else { 0 })
        }
    }
}

fn emit_report(report: &serde_json::Value, out: Option<&PathBuf>) -> Result<(), Error> {
    let line = format!("{report}\n");
    if let Some(path) = out {
        std::fs::write(path, &line).map_err(Error::Io)?;
    }
    print!("{line}");
    Ok(())
}

/// Enumerates triangles tuple by tuple; intended for small families.
fn stream_triangles(fam: &Family, r: u32, t: u32) -> Result<(), Error> {
    let ms = fam.members();
    let arity = (r + 1) as usize;
    if ms.len() < arity {
        return Ok(());
    }
    let mut idx: Vec<usize> = (0..arity).collect();
    loop {
        let tuple: Vec<_> = idx.iter().map(|&i| ms[i]).collect();
        if is_triangle(&tuple, r, t)? {
            println!("{}", json!(elems_list(&tuple)));
        }
        // next combination in lexicographic order
        let mut p = arity;
        loop {
            if p == 0 {
                return Ok(());
            }
            p -= 1;
            if idx[p] != ms.len() - arity + p {
                break;
            }
        }
        idx[p] += 1;
        for q in (p + 1)..arity {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Param(_) | Error::Io(_) | Error::Serde(_) | Error::Infeasible(_) => EXIT_USAGE,
                Error::Precondition(_) => EXIT_PRECONDITION,
                Error::Inconsistency(_) => EXIT_VERIFY_FAIL,
            };
            ExitCode::from(code)
        }
    }
}
