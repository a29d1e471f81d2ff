//! Command-line driver: reads or generates a stream, runs one algorithm over
//! it, answers every query marker and prints a `key=value` report.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::gen;
use super::oracle::{min_vertex_cover, oracle_vc};
use super::stream_file::{emit_stream, parse_stream, Item, Mode, StreamFile};
use crate::dpsa::{DpsaState, Recovery};
use crate::error::{Error, Result};
use crate::fvs::{FvsAnswer, FvsState};
use crate::graph::ShadowGraph;
use crate::pdpsa::{DegreeMode, MatchingState, PdpsaOptions};
use crate::psa::PsaState;
use crate::sketch::field;
use crate::types::{Config, Cover, Edge, Op, StreamUpdate, VcAnswer};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_PROMISE: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    Random,
    Promised,
    Index,
    Disjointness,
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "vcstream",
    about = "Streaming parameterized vertex cover and feedback vertex set"
)]
pub struct Args {
    /// Algorithm to run; defaults to the stream header's mode.
    #[arg(long, value_parser = parse_mode)]
    pub mode: Option<Mode>,
    /// Parameter k; defaults to the stream header's value.
    #[arg(long)]
    pub k: Option<u32>,
    /// Number of vertices; defaults to the stream header's value.
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, default_value_t = 0.01)]
    pub delta: f64,
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Reject streams that insert live edges or delete absent ones.
    #[arg(long)]
    pub validate: bool,
    #[arg(long, conflicts_with = "gen")]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub gen: Option<Generator>,
    /// Updates to generate (random and promised streams).
    #[arg(long, default_value_t = 200)]
    pub length: usize,
    /// Deletion probability per step (random and promised streams).
    #[arg(long, default_value_t = 0.3)]
    pub churn: f64,
    /// Bits of X, row-major k×k (index) or the string x (disjointness).
    #[arg(long)]
    pub x_bits: Option<String>,
    /// The string y (disjointness).
    #[arg(long)]
    pub y_bits: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub index_i: u32,
    #[arg(long, default_value_t = 1)]
    pub index_j: u32,
    /// Write the stream that is run to this file.
    #[arg(long)]
    pub emit: Option<PathBuf>,
    /// Independent runs with seeds `seed, seed+1, …`, one per thread.
    #[arg(long, default_value_t = 1)]
    pub replays: u32,
    /// pdpsa: keep exact degree counters for the low/high test.
    #[arg(long)]
    pub exact_degrees: bool,
    /// dpsa: gate on the distinct-edge estimate.
    #[arg(long)]
    pub approx: bool,
}

fn parse_mode(s: &str) -> std::result::Result<Mode, String> {
    s.parse()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
    PromiseViolation,
}

impl Answer {
    fn as_str(self) -> &'static str {
        match self {
            Answer::Yes => "YES",
            Answer::No => "NO",
            Answer::PromiseViolation => "PROMISE_VIOLATION",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueryRecord {
    /// Number of updates before the query.
    pub at: u64,
    pub answer: Answer,
    pub cover: Option<Cover>,
    /// Whether a `Yes` certificate checks out against the replayed graph.
    pub verified: Option<bool>,
    pub recovery: Option<Recovery>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub seed: u64,
    pub mode: Mode,
    pub n: u32,
    pub k: u32,
    pub updates: u64,
    pub queries: Vec<QueryRecord>,
    pub words_stored: usize,
    pub sketch_fails: u64,
    pub rematch_misses: u64,
    pub promise_violation: Option<u64>,
    pub error: Option<Error>,
    pub ingest: Duration,
    pub query_time: Duration,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        match &self.error {
            Some(e) => exit_code(e),
            None if self.promise_violation.is_some() => EXIT_PROMISE,
            None => EXIT_OK,
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "seed={}", self.seed);
        let _ = writeln!(out, "mode={}", self.mode);
        let _ = writeln!(out, "n={}", self.n);
        let _ = writeln!(out, "k={}", self.k);
        let _ = writeln!(out, "updates={}", self.updates);
        for (i, q) in self.queries.iter().enumerate() {
            let _ = write!(
                out,
                "query={} at={} answer={}",
                i + 1,
                q.at,
                q.answer.as_str()
            );
            if let Some(c) = &q.cover {
                let ids: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                let _ = write!(out, " cover={}", ids.join(","));
            }
            if let Some(v) = q.verified {
                let _ = write!(out, " verified={v}");
            }
            match q.recovery {
                Some(Recovery::Skipped) => out.push_str(" recovery=skipped"),
                Some(Recovery::Performed { edges }) => {
                    let _ = write!(out, " recovery=performed recovered_edges={edges}");
                }
                None => {}
            }
            out.push('\n');
        }
        let _ = writeln!(out, "words_stored={}", self.words_stored);
        let _ = writeln!(out, "sketch_fails={}", self.sketch_fails);
        let _ = writeln!(out, "rematch_misses={}", self.rematch_misses);
        match self.promise_violation {
            Some(at) => {
                let _ = writeln!(out, "promise=violated at={at}");
            }
            None => out.push_str("promise=ok\n"),
        }
        let _ = writeln!(out, "elapsed_ingest_us={}", self.ingest.as_micros());
        let _ = writeln!(out, "elapsed_query_us={}", self.query_time.as_micros());
        match &self.error {
            Some(e) => {
                let _ = writeln!(out, "status=error");
                let _ = writeln!(out, "error={e}");
            }
            None => out.push_str("status=ok\n"),
        }
        out
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::InvalidStream { .. } | Error::VertexOutOfRange { .. } | Error::SelfLoop(_) => {
            EXIT_INVALID
        }
        Error::PromiseViolation { .. } => EXIT_PROMISE,
        _ => EXIT_OTHER,
    }
}

enum Engine {
    Psa(PsaState),
    Pdpsa(MatchingState),
    Dpsa(DpsaState),
    Fvs(FvsState),
}

impl Engine {
    fn new(mode: Mode, cfg: &Config, args: &Args) -> Result<Self> {
        cfg.validate()?;
        Ok(match mode {
            Mode::Psa => Engine::Psa(PsaState::new(cfg.k)),
            Mode::Pdpsa => {
                let degree_mode = if args.exact_degrees {
                    DegreeMode::Exact
                } else {
                    DegreeMode::Sketched
                };
                let opts = PdpsaOptions {
                    degree_mode,
                    audit: false,
                };
                Engine::Pdpsa(MatchingState::new(cfg.clone(), opts)?)
            }
            Mode::Dpsa if args.approx => Engine::Dpsa(DpsaState::new_approx(cfg.clone())?),
            Mode::Dpsa => Engine::Dpsa(DpsaState::new(cfg.clone())?),
            Mode::Fvs => Engine::Fvs(FvsState::new(cfg.n, cfg.k)),
        })
    }

    fn apply(&mut self, up: StreamUpdate, at: u64) -> Result<()> {
        match self {
            Engine::Psa(_) | Engine::Fvs(_) if up.op == Op::Delete => Err(Error::InvalidStream {
                at,
                reason: "deletion in insertion-only mode".into(),
            }),
            Engine::Psa(st) => {
                st.insert(up.edge);
                Ok(())
            }
            Engine::Fvs(st) => {
                st.insert(up.edge);
                Ok(())
            }
            Engine::Pdpsa(st) => st.apply(up),
            Engine::Dpsa(st) => {
                st.update(up);
                Ok(())
            }
        }
    }

    fn query(&self, k: u32, shadow: &ShadowGraph) -> Result<QueryRecord> {
        let at = shadow.clock();
        let vc = |ans: VcAnswer, recovery| {
            let (answer, cover) = match ans {
                VcAnswer::Yes(c) => (Answer::Yes, Some(c)),
                VcAnswer::No => (Answer::No, None),
                VcAnswer::PromiseViolation => (Answer::PromiseViolation, None),
            };
            let verified = cover
                .as_ref()
                .map(|c| c.len() <= k as usize && shadow.graph().is_covered_by(c));
            QueryRecord {
                at,
                answer,
                cover,
                verified,
                recovery,
            }
        };
        Ok(match self {
            Engine::Psa(st) => vc(st.query(k), None),
            Engine::Pdpsa(st) => vc(st.query(k)?, None),
            Engine::Dpsa(st) => {
                let out = st.query(k)?;
                vc(out.answer, Some(out.recovery))
            }
            Engine::Fvs(st) => match st.query(k) {
                FvsAnswer::Yes(c) => QueryRecord {
                    at,
                    answer: Answer::Yes,
                    verified: Some(c.len() <= k as usize && shadow.graph().is_acyclic_without(&c)),
                    cover: Some(c),
                    recovery: None,
                },
                FvsAnswer::No => QueryRecord {
                    at,
                    answer: Answer::No,
                    cover: None,
                    verified: None,
                    recovery: None,
                },
            },
        })
    }

    fn words(&self) -> usize {
        match self {
            Engine::Psa(st) => st.words(),
            Engine::Pdpsa(st) => st.census().words,
            Engine::Dpsa(st) => st.words(),
            Engine::Fvs(st) => st.words(),
        }
    }
}

/// Runs one pass of `file` under `mode` and `cfg`. Stream and algorithm
/// errors end the pass early and are recorded in the report.
pub fn execute(file: &StreamFile, mode: Mode, cfg: &Config, args: &Args) -> RunReport {
    let mut report = RunReport {
        seed: cfg.seed,
        mode,
        n: cfg.n,
        k: cfg.k,
        updates: 0,
        queries: Vec::new(),
        words_stored: 0,
        sketch_fails: 0,
        rematch_misses: 0,
        promise_violation: None,
        error: None,
        ingest: Duration::ZERO,
        query_time: Duration::ZERO,
    };
    let mut engine = match Engine::new(mode, cfg, args) {
        Ok(e) => e,
        Err(e) => {
            report.error = Some(e);
            return report;
        }
    };
    let mut shadow = ShadowGraph::new(cfg.n);
    for item in &file.items {
        let result = match item {
            Item::Update(up) => {
                let start = Instant::now();
                let r = ingest(&mut engine, &mut shadow, *up, args.validate);
                report.ingest += start.elapsed();
                report.updates = shadow.clock();
                r
            }
            Item::Query => {
                let start = Instant::now();
                let r = engine.query(cfg.k, &shadow).map(|q| report.queries.push(q));
                report.query_time += start.elapsed();
                r
            }
        };
        match result {
            Ok(()) => {}
            Err(Error::PromiseViolation { at }) => {
                report.promise_violation.get_or_insert(at);
            }
            Err(e) => {
                report.error = Some(e);
                break;
            }
        }
    }
    report.words_stored = engine.words();
    if let Engine::Pdpsa(st) = &engine {
        report.sketch_fails = st.events().sketch_fails;
        report.rematch_misses = st.events().rematch_misses;
    }
    report
}

fn ingest(
    engine: &mut Engine,
    shadow: &mut ShadowGraph,
    up: StreamUpdate,
    validate: bool,
) -> Result<()> {
    up.edge.check_range(shadow.n())?;
    if validate {
        shadow.apply_update(up)?;
    } else {
        shadow.apply_lenient(up);
    }
    engine.apply(up, shadow.clock())
}

fn bits(s: &str) -> Result<Vec<bool>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::InvalidConfig(format!(
                "bit strings use 0 and 1, got {c:?}"
            ))),
        })
        .collect()
}

fn need<T>(v: Option<T>, what: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidConfig(format!("--{what} is required")))
}

fn insertions(n: u32, k: u32, mode: Mode, edges: impl IntoIterator<Item = Edge>) -> StreamFile {
    let mut f = StreamFile::new(n, k, mode);
    for e in edges {
        f.push_update(StreamUpdate::insert(e));
    }
    f.push_query();
    f
}

/// Builds the requested instance and checks it with an oracle.
pub fn generate(which: Generator, args: &Args) -> Result<StreamFile> {
    let mut rng = ChaCha8Rng::seed_from_u64(field::derive_seed(args.seed, &[0x6E]));
    match which {
        Generator::Random => {
            let (n, k) = (need(args.n, "n")?, need(args.k, "k")?);
            let mode = args.mode.unwrap_or(Mode::Dpsa);
            let mut f = StreamFile::new(n, k, mode);
            if mode.insertion_only() {
                for e in gen::insertion_stream(&mut rng, n, args.length) {
                    f.push_update(StreamUpdate::insert(e));
                }
            } else {
                let max_live = (n as usize * k as usize).max(1);
                for up in gen::dynamic_stream(&mut rng, n, args.length, max_live, args.churn) {
                    f.push_update(up);
                }
            }
            f.push_query();
            f.validate()?;
            Ok(f)
        }
        Generator::Promised => {
            let (n, k) = (need(args.n, "n")?, need(args.k, "k")?);
            let mode = args.mode.unwrap_or(Mode::Pdpsa);
            let churn = if mode.insertion_only() {
                0.0
            } else {
                args.churn
            };
            let s = gen::promised_stream(&mut rng, n, k, args.length, churn);
            let mut f = StreamFile::new(n, k, mode);
            let mut shadow = ShadowGraph::new(n);
            for up in s.updates {
                shadow.apply_update(up)?;
                if !oracle_vc(shadow.graph(), k)?.is_yes() {
                    return Err(Error::InvalidConfig(
                        "generated prefix breaks the promise".into(),
                    ));
                }
                f.push_update(up);
            }
            f.push_query();
            Ok(f)
        }
        Generator::Index => {
            let flat = bits(&need(args.x_bits.clone(), "x-bits")?)?;
            let k = (flat.len() as f64).sqrt().round() as u32;
            if k < 1 || (k * k) as usize != flat.len() {
                return Err(Error::InvalidConfig("--x-bits must hold k*k bits".into()));
            }
            let (i, j) = (args.index_i, args.index_j);
            if !(1..=k).contains(&i) || !(1..=k).contains(&j) {
                return Err(Error::InvalidConfig(format!(
                    "--index-i/--index-j must lie in [1, {k}]"
                )));
            }
            let x: Vec<Vec<bool>> = flat.chunks(k as usize).map(<[bool]>::to_vec).collect();
            let g = gen::index_gadget(&x, i, j);
            let expected = 2 * k as usize - 2 + x[i as usize - 1][j as usize - 1] as usize;
            if min_vertex_cover(&g)? != expected {
                return Err(Error::InvalidConfig(
                    "index gadget failed its oracle check".into(),
                ));
            }
            let budget = args.k.unwrap_or(2 * k - 2);
            Ok(insertions(
                6 * k,
                budget,
                args.mode.unwrap_or(Mode::Psa),
                g.edges(),
            ))
        }
        Generator::Disjointness => {
            let x = bits(&need(args.x_bits.clone(), "x-bits")?)?;
            let y = bits(&need(args.y_bits.clone(), "y-bits")?)?;
            if x.len() != y.len() || x.is_empty() {
                return Err(Error::InvalidConfig(
                    "--x-bits and --y-bits need equal nonzero length".into(),
                ));
            }
            let g = gen::disjointness_gadget(&x, &y);
            let disjoint = x.iter().zip(&y).all(|(a, b)| !(a & b));
            if g.is_acyclic_without(&Cover::new()) != disjoint {
                return Err(Error::InvalidConfig(
                    "disjointness gadget failed its oracle check".into(),
                ));
            }
            let n = 8 * x.len() as u32;
            Ok(insertions(
                n,
                args.k.unwrap_or(0),
                args.mode.unwrap_or(Mode::Fvs),
                g.edges(),
            ))
        }
    }
}

fn load(args: &Args) -> Result<StreamFile> {
    match (&args.input, args.gen) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                Error::InvalidConfig(format!("cannot read {}: {e}", path.display()))
            })?;
            parse_stream(&text)
        }
        (None, Some(g)) => generate(g, args),
        (None, None) => Err(Error::InvalidConfig(
            "give --input FILE or --gen KIND".into(),
        )),
    }
}

/// Loads the stream and runs every replay, returning the reports in seed
/// order.
pub fn run(args: &Args) -> Result<Vec<RunReport>> {
    let file = load(args)?;
    if let Some(path) = &args.emit {
        std::fs::write(path, emit_stream(&file))
            .map_err(|e| Error::InvalidConfig(format!("cannot write {}: {e}", path.display())))?;
    }
    let mode = args.mode.unwrap_or(file.mode);
    let base = Config {
        n: args.n.unwrap_or(file.n),
        k: args.k.unwrap_or(file.k),
        delta: args.delta,
        c: args.c,
        alpha: args.alpha,
        seed: args.seed,
    };
    base.validate()?;
    let replays = args.replays.max(1) as u64;
    let reports = std::thread::scope(|s| {
        let handles: Vec<_> = (0..replays)
            .map(|r| {
                let cfg = Config {
                    seed: args.seed.wrapping_add(r),
                    ..base.clone()
                };
                let file = &file;
                s.spawn(move || execute(file, mode, &cfg, args))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("replay thread panicked"))
            .collect()
    });
    Ok(reports)
}

/// Parses `argv`, runs, prints the report to standard output and returns the
/// process exit code.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match run(&args) {
        Ok(reports) => {
            let multi = reports.len() > 1;
            for (i, r) in reports.iter().enumerate() {
                if multi {
                    println!("replay={}", i + 1);
                }
                print!("{}", r.render());
            }
            reports
                .iter()
                .map(RunReport::exit_code)
                .max()
                .unwrap_or(EXIT_OK)
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
