//! Command-line interface.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use askzeta_core::bivratfun::BivError;
use askzeta_core::linmat::{
    build_a_graph, build_a_hyper, build_c_graph, build_c_hyper, check_animations, check_selectors,
    nonzero_minors_with_guard, LinearFormMatrix, LinmatError, Sign, DEFAULT_MINOR_GUARD,
};
use askzeta_core::mappings::{for_each_animation, AnimationFilter};
use askzeta_core::oracle::{formula_value, judge, out_of_contract, OracleError, Verdict};
use askzeta_core::zetacalc::{
    class_counting, flat, join_power_flat, join_wminus, master_w_h, model_hypergraph, rgmt_values, unflat,
    wminus, wsharp, wsharp_join, ZetaError,
};
use askzeta_core::{BivariateRational, Graph, Hypergraph};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;
use thiserror::Error;

use crate::cache::Cache;
use crate::formats::{parse_graph, parse_hypergraph, read_input, write_graph, write_hypergraph, FormatError};
use crate::parallel::{ask_average_parallel, env_budget, with_jobs};
use crate::ratparse::{parse_rational, ParseError};
use crate::verify::{run_all, run_suite, SUITES};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
    #[error(transparent)]
    Linmat(#[from] LinmatError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Eval(#[from] BivError),
    #[error("{0}")]
    Failed(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Format(_) | CliError::Parse(_) | CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "askzeta", version, about = "Exact ask zeta functions of graphs and hypergraphs")]
struct Cli {
    /// Worker threads for oracle enumeration.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Directory for cached results.
    #[arg(long, global = true, env = "ASKZETA_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Print cache statistics to stderr.
    #[arg(long, global = true)]
    stats: bool,
    /// Maximum number of specializations the oracle may enumerate.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct OutputOpts {
    /// Print LaTeX instead of the plain form.
    #[arg(long)]
    latex: bool,
    /// Print the series coefficients of T^0..T^N.
    #[arg(long, value_name = "N")]
    series: Option<usize>,
    /// Specialize X to the rational number Q.
    #[arg(long, value_name = "Q")]
    at_q: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SignArg {
    #[value(name = "+", alias = "plus")]
    Plus,
    #[value(name = "-", alias = "minus")]
    Minus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClassArg {
    Nil,
    Fix,
    Ods,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CheckArg {
    Selectors,
    Animations,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// W_H of a hypergraph (JSON).
    Whyper {
        #[arg(long)]
        hyper: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// W♯ of a graph; loops are added at every vertex.
    Wsharp {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// W⁻ of a loopless cograph.
    Wminus {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// W⁻ (or W♯ with --sharp) of a join, from the two parts.
    Join {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long)]
        sharp: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// W⁻ of the k-fold join power of a cograph.
    Joinpower {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        /// Print the flat form W⁻(X, X^{kn} T).
        #[arg(long)]
        flat: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Class-counting zeta function W⁻(X, X^{|E|} T) of a cograph.
    Cc {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Modelling hypergraph of a cograph, as JSON.
    Model {
        #[arg(long)]
        graph: PathBuf,
    },
    /// W_{Adj(Γ)} of a reflexive graph.
    Rgmt {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Lists animations of a graph.
    Animations {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        class: ClassArg,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Nonzero minors of C_H or C^±_Γ.
    Minors {
        #[arg(long, conflicts_with = "hyper")]
        graph: Option<PathBuf>,
        #[arg(long)]
        hyper: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "-")]
        sign: SignArg,
        #[arg(long, value_enum)]
        check: Option<CheckArg>,
        /// Print the nonzero minors of size K.
        #[arg(long, value_name = "K", conflicts_with = "check")]
        emit: Option<usize>,
    },
    /// Brute-force average kernel size against the formula.
    Oracle {
        #[arg(long, conflicts_with = "hyper")]
        graph: Option<PathBuf>,
        #[arg(long)]
        hyper: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "-")]
        sign: SignArg,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Runs acceptance suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// W♯ catalogue of every graph file in a directory, as JSON lines.
    Batch {
        #[arg(long)]
        dir: PathBuf,
    },
}

struct Ctx<'a> {
    cache: Option<Cache>,
    budget: u64,
    jobs: Option<usize>,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Parses `args` (including the program name) and runs the command. Returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let cache = match cli.cache_dir.as_deref().map(Cache::open).transpose() {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: cannot open cache: {e}");
            return 1;
        }
    };
    let budget = cli
        .budget
        .or_else(env_budget)
        .unwrap_or(askzeta_core::oracle::DEFAULT_BUDGET);
    let stats = cli.stats;
    let mut ctx = Ctx { cache, budget, jobs: cli.jobs, out, err };
    let result = dispatch(cli.command, &mut ctx);
    if stats {
        if let Some(c) = &ctx.cache {
            let _ = writeln!(ctx.err, "cache hits={} misses={}", c.hits(), c.misses());
        }
    }
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            e.exit_code()
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    Ok(parse_graph(&read_input(path)?)?)
}

fn load_hypergraph(path: &Path) -> Result<Hypergraph, CliError> {
    Ok(parse_hypergraph(&read_input(path)?)?)
}

impl Ctx<'_> {
    /// The function for `(subcommand, input)`, from the cache when possible.
    fn function(
        &self,
        subcommand: &str,
        input: &str,
        compute: impl FnOnce() -> Result<BivariateRational, CliError>,
    ) -> Result<BivariateRational, CliError> {
        let Some(cache) = &self.cache else { return compute() };
        let text = cache.get_or_compute(
            subcommand,
            input,
            |v| parse_rational(v.trim_end()).is_ok_and(|w| w.to_string() == v.trim_end()),
            || compute().map(|w| format!("{w}\n")),
        )?;
        Ok(parse_rational(text.trim_end())?)
    }

    fn emit(&mut self, w: &BivariateRational, opts: &OutputOpts) -> Result<(), CliError> {
        if let Some(q) = &opts.at_q {
            let q: BigRational = q.parse().map_err(|_| CliError::Usage(format!("invalid rational `{q}`")))?;
            writeln!(self.out, "{}", w.evaluate_q(&q)?)?;
        } else if let Some(n) = opts.series {
            for (i, c) in w.series_prefix(n).iter().enumerate() {
                writeln!(self.out, "T^{i}: {c}")?;
            }
        } else if opts.latex {
            writeln!(self.out, "{}", w.to_latex())?;
        } else {
            writeln!(self.out, "{w}")?;
        }
        Ok(())
    }
}

fn dispatch(command: Command, ctx: &mut Ctx) -> Result<(), CliError> {
    match command {
        Command::Whyper { hyper, out } => {
            let h = load_hypergraph(&hyper)?;
            let w = ctx.function("whyper", &write_hypergraph(&h), || Ok(master_w_h(&h)?.value))?;
            ctx.emit(&w, &out)
        }
        Command::Wsharp { graph, out } => {
            let g = load_graph(&graph)?;
            if !g.is_reflexive() {
                writeln!(ctx.err, "note: computing W# via the reflexive closure")?;
            }
            let w = ctx.function("wsharp", &write_graph(&g), || Ok(wsharp(&g)?.value))?;
            ctx.emit(&w, &out)
        }
        Command::Wminus { graph, out } => {
            let g = load_graph(&graph)?;
            let w = ctx.function("wminus", &write_graph(&g), || Ok(wminus(&g)?.value))?;
            ctx.emit(&w, &out)
        }
        Command::Join { left, right, sharp, out } => {
            let (a, b) = (load_graph(&left)?, load_graph(&right)?);
            let input = format!("{}--\n{}", write_graph(&a), write_graph(&b));
            let (na, nb) = (a.vertex_count(), b.vertex_count());
            let w = if sharp {
                ctx.function("join-sharp", &input, || Ok(wsharp_join(&wsharp(&a)?, na, &wsharp(&b)?, nb)?.value))?
            } else {
                ctx.function("join", &input, || Ok(join_wminus(&wminus(&a)?, na, &wminus(&b)?, nb)?.value))?
            };
            ctx.emit(&w, &out)
        }
        Command::Joinpower { graph, k, flat: as_flat, out } => {
            let g = load_graph(&graph)?;
            if k == 0 {
                return Err(CliError::Usage("--k must be at least 1".into()));
            }
            let n = g.vertex_count();
            let input = format!("{}k {k}\nflat {as_flat}\n", write_graph(&g));
            let w = ctx.function("joinpower", &input, || {
                let powered = join_power_flat(&flat(&wminus(&g)?, n as i64), n, k);
                Ok(if as_flat { powered.value } else { unflat(&powered, k * n).value })
            })?;
            ctx.emit(&w, &out)
        }
        Command::Cc { graph, out } => {
            let g = load_graph(&graph)?;
            let w = ctx.function("cc", &write_graph(&g), || Ok(class_counting(&g)?.value))?;
            ctx.emit(&w, &out)
        }
        Command::Model { graph } => {
            let g = load_graph(&graph)?;
            ctx.out.write_all(write_hypergraph(&model_hypergraph(&g)?).as_bytes())?;
            Ok(())
        }
        Command::Rgmt { graph, out } => {
            let g = load_graph(&graph)?;
            let w = ctx.function("rgmt", &write_graph(&g), || Ok(rgmt_values(&g)?.value))?;
            ctx.emit(&w, &out)
        }
        Command::Animations { graph, class, k } => {
            let g = load_graph(&graph)?;
            let filter = match class {
                ClassArg::Nil => AnimationFilter::Nil,
                ClassArg::Fix => AnimationFilter::Fix,
                ClassArg::Ods => AnimationFilter::Ods,
                ClassArg::All => AnimationFilter::All,
            };
            let mut lines = String::new();
            for_each_animation(&g, filter, k, |a| {
                let c = a.classify();
                lines.push_str(&format!(
                    "deg={} class={} odlen={} map={} mon={}\n",
                    a.degree(),
                    c.name(),
                    c.odlen,
                    a,
                    a.monomial()
                ));
            });
            ctx.out.write_all(lines.as_bytes())?;
            Ok(())
        }
        Command::Minors { graph, hyper, sign, check, emit } => minors(ctx, graph, hyper, sign.into(), check, emit),
        Command::Oracle { graph, hyper, sign, p, k } => oracle(ctx, graph, hyper, sign.into(), p, k),
        Command::Verify { suite } => {
            let budget = ctx.budget;
            let reports = if suite == "all" {
                with_jobs(ctx.jobs, || run_all(budget))
            } else {
                let r = with_jobs(ctx.jobs, || run_suite(&suite, budget)).ok_or_else(|| {
                    CliError::Usage(format!("unknown suite `{suite}`; expected all or one of {}", SUITES.join(", ")))
                })?;
                vec![r]
            };
            for r in &reports {
                writeln!(ctx.out, "{r}")?;
            }
            let failed = reports.iter().filter(|r| !r.ok()).count();
            if failed > 0 {
                return Err(CliError::Failed(format!("{failed} suite(s) failed")));
            }
            Ok(())
        }
        Command::Batch { dir } => batch(ctx, &dir),
    }
}

fn minor_source(
    graph: Option<PathBuf>,
    hyper: Option<PathBuf>,
) -> Result<Result<Graph, Hypergraph>, CliError> {
    match (graph, hyper) {
        (Some(g), None) => Ok(Ok(load_graph(&g)?)),
        (None, Some(h)) => Ok(Err(load_hypergraph(&h)?)),
        _ => Err(CliError::Usage("exactly one of --graph and --hyper is required".into())),
    }
}

fn minors(
    ctx: &mut Ctx,
    graph: Option<PathBuf>,
    hyper: Option<PathBuf>,
    sign: Sign,
    check: Option<CheckArg>,
    emit: Option<usize>,
) -> Result<(), CliError> {
    let source = minor_source(graph, hyper)?;
    if let Some(kind) = check {
        let checks = match (kind, &source) {
            (CheckArg::Selectors, Err(h)) => check_selectors(h, DEFAULT_MINOR_GUARD)?,
            (CheckArg::Animations, Ok(g)) => check_animations(g, sign, DEFAULT_MINOR_GUARD)?,
            (CheckArg::Selectors, Ok(_)) => return Err(CliError::Usage("--check selectors needs --hyper".into())),
            (CheckArg::Animations, Err(_)) => return Err(CliError::Usage("--check animations needs --graph".into())),
        };
        let mut all = true;
        for c in &checks {
            all &= c.passed();
            writeln!(
                ctx.out,
                "k={} {} expected={} found={}",
                c.k,
                if c.passed() { "PASS" } else { "FAIL" },
                c.expected.len(),
                c.found.len()
            )?;
        }
        return if all { Ok(()) } else { Err(CliError::Failed("minor check failed".into())) };
    }
    let k = emit.ok_or_else(|| CliError::Usage("one of --check and --emit is required".into()))?;
    let m: LinearFormMatrix = match &source {
        Ok(g) => build_c_graph(g, sign),
        Err(h) => build_c_hyper(h),
    };
    let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    for minor in nonzero_minors_with_guard(&m, k, DEFAULT_MINOR_GUARD)? {
        let (coeff, mon) = minor.value.as_term().ok_or(LinmatError::NotMonomial)?;
        let s = if coeff.is_negative() { '-' } else { '+' };
        writeln!(ctx.out, "{s} {} {mon} {} {}", coeff.abs(), list(&minor.rows), list(&minor.cols))?;
    }
    Ok(())
}

fn oracle(
    ctx: &mut Ctx,
    graph: Option<PathBuf>,
    hyper: Option<PathBuf>,
    sign: Sign,
    p: u64,
    k: u32,
) -> Result<(), CliError> {
    let (a, w, ooc) = match minor_source(graph, hyper)? {
        Err(h) => (build_a_hyper(&h), master_w_h(&h)?.value, false),
        Ok(g) => {
            let w = if g.is_reflexive() {
                rgmt_values(&g)?.value
            } else if sign == Sign::Minus {
                wminus(&g)?.value
            } else {
                return Err(ZetaError::Unsupported("W+ is only known for reflexive graphs").into());
            };
            (build_a_graph(&g, sign), w, out_of_contract(sign.is_plus(), p))
        }
    };
    let budget = ctx.budget;
    let ask = with_jobs(ctx.jobs, || ask_average_parallel(&a, p, k, budget))?.value;
    let cmp = judge(ask, formula_value(&w, p, k), ooc);
    writeln!(ctx.out, "{cmp}")?;
    if cmp.verdict == Verdict::Fail {
        return Err(CliError::Failed("oracle disagrees with the formula".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct BatchRecord {
    file: String,
    graph: String,
    wsharp: String,
    local_poles: Vec<i64>,
    pole_order: u32,
}

fn batch(ctx: &mut Ctx, dir: &Path) -> Result<(), CliError> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    for path in files {
        let g = load_graph(&path)?;
        let w = ctx.function("wsharp", &write_graph(&g), || Ok(wsharp(&g)?.value))?;
        let record = BatchRecord {
            file: path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default(),
            graph: write_graph(&g),
            wsharp: w.to_string(),
            local_poles: w.local_poles(),
            pole_order: w.pole_order_at_t1(),
        };
        writeln!(ctx.out, "{}", serde_json::to_string(&record).expect("plain data serializes"))?;
    }
    Ok(())
}
