//! The `itl` command line.

mod literal;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

pub use literal::parse_literal;
pub use verify::{verify_paper, Fault, Profile, TagReport, VerifyReport};

use crate::constructions as cons;
use crate::extremal::{ex_exact, fractional_cover_number, genupper_exponent, turan_graph, Budget};
use crate::graphs::format::{parse_graph, write_graph};
use crate::graphs::{contract, is_sunflower, MultiHypergraph, Simplify, VertexSet};
use crate::inverse::{edges_json, finiteness_check, inverse_search, Finiteness, SearchSpace, Status};
use crate::oneuniform::{c_constant, reduction_chain_check, OneUniformPattern};
use crate::patterns::parse_sequence;
use crate::{Error, Pattern, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Environment variable holding the default per-call budget in seconds.
pub const BUDGET_ENV: &str = "ITL_BUDGET_SECONDS";

#[derive(Parser, Debug)]
#[command(
    name = "itl",
    version,
    about = "Extremal and inverse extremal numbers of small graph families"
)]
struct Cli {
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Emit aligned text.
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads; defaults to the available cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Include wall-clock timings, which makes output nondeterministic.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// ex(G, H): the most edges of an H-free subgraph of G.
    Ex {
        graph: String,
        pattern: String,
        /// Time budget in seconds.
        #[arg(long)]
        budget: Option<f64>,
    },
    /// E_H(k) by exhaustive host search within caps.
    Inverse(InverseArgs),
    /// Print a named construction in the text graph format.
    Construct { name: String, params: Vec<String> },
    /// The constant c_H of a 1-uniform pattern.
    Ch {
        seq: String,
        /// Add the reduction chain report at this k.
        #[arg(long)]
        chain: Option<u64>,
    },
    /// Sunflower test and finiteness verdict for a graph used as a pattern.
    Sunflower { graph: String },
    /// Contract an independent vertex set `I` (comma separated).
    Contract { graph: String, set: String },
    /// Fractional cover number and the exponent bound.
    RhoStar { graph: String },
    /// Run the tagged regression suite.
    VerifyPaper {
        #[arg(long, conflicts_with = "full")]
        quick: bool,
        #[arg(long)]
        full: bool,
    },
}

#[derive(Args, Debug)]
struct InverseArgs {
    pattern: String,
    k: u64,
    #[arg(long, default_value_t = 8)]
    nmax: usize,
    #[arg(long, default_value_t = 12)]
    mmax: u64,
    /// Multiplicity cap for multigraph hosts.
    #[arg(long, default_value_t = 3)]
    multmax: u32,
    /// 1-uniform loops allowed per vertex.
    #[arg(long, default_value_t = 0)]
    loops: u32,
    /// `underlying`, `component` or `distance:<t>`.
    #[arg(long)]
    compress: Option<String>,
    #[arg(long, conflicts_with = "multi")]
    simple: bool,
    #[arg(long)]
    multi: bool,
    /// Time budget in seconds.
    #[arg(long)]
    budget: Option<f64>,
}

/// Runs the command line and writes the result to standard output.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    run_with(args, &mut stdout.lock())
}

/// [`run`] with an explicit output sink. Errors go to standard error.
pub fn run_with<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{}", json!({"error": e.to_string()}));
            return EXIT_USAGE;
        }
    };
    match pool.install(|| dispatch(&cli)) {
        Ok((doc, code)) => {
            let text = match doc {
                Output::Json(v) if cli.pretty => pretty(&v),
                Output::Json(v) => format!("{v}\n"),
                Output::Text(s) => s,
            };
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            code
        }
        Err(e) => {
            eprintln!("{}", json!({"error": e.to_string()}));
            match e {
                Error::GuardExceeded(_) => EXIT_BUDGET,
                _ => EXIT_USAGE,
            }
        }
    }
}

enum Output {
    Json(Value),
    Text(String),
}

fn dispatch(cli: &Cli) -> Result<(Output, i32)> {
    let json = |v: Value| Ok((Output::Json(v), EXIT_OK));
    match &cli.cmd {
        Cmd::Ex { graph, pattern, budget } => {
            let g = read_graph(graph)?;
            let p = read_pattern(pattern)?;
            let r = ex_exact(&g, &p, budget_from(*budget)?)?;
            let v = json!({
                "pattern": p.to_string(),
                "value": r.value,
                "complete": r.complete,
                "method": r.method.tag(),
                "nodes": r.nodes_explored,
                "witness": edges_json(&r.witness),
            });
            let code = if r.complete { EXIT_OK } else { EXIT_BUDGET };
            Ok((Output::Json(v), code))
        }
        Cmd::Inverse(a) => {
            let p = read_pattern(&a.pattern)?;
            let mut space = if a.simple || !a.multi {
                SearchSpace::simple(a.nmax, a.mmax)
            } else {
                SearchSpace::multi(a.nmax, a.mmax, a.multmax)
            };
            space = space.with_loops(a.loops);
            if let Some(c) = &a.compress {
                space = space.with_compression(parse_compression(c)?);
            }
            let r = inverse_search(&p, a.k, &space, budget_from(a.budget)?)?;
            let code = if r.status == Status::BudgetExhausted {
                EXIT_BUDGET
            } else {
                EXIT_OK
            };
            Ok((Output::Json(r.to_json(cli.timing)), code))
        }
        Cmd::Construct { name, params } => {
            let g = construct(name, params)?;
            Ok((Output::Text(write_graph(&g)), EXIT_OK))
        }
        Cmd::Ch { seq, chain } => {
            let p = OneUniformPattern::new(parse_sequence(seq)?)?;
            let mut v = c_constant(&p)?.to_json();
            if let Some(k) = chain {
                v["chain"] = reduction_chain_check(&p, *k)?.to_json();
            }
            json(v)
        }
        Cmd::Sunflower { graph } => {
            let g = read_graph(graph)?;
            let core = is_sunflower(&g);
            let simple = g.is_simple() && g.is_two_uniform();
            let verdict = match finiteness_check(&Pattern::Finite(vec![g]), simple)? {
                Finiteness::Infinite { from_k, core_size } => {
                    json!({"finite": false, "from_k": from_k, "core_size": core_size})
                }
                other => json!({"finite": true, "reason": format!("{other:?}")}),
            };
            json(json!({
                "sunflower": core.is_some(),
                "core": core.map(VertexSet::to_vec),
                "finiteness": verdict,
            }))
        }
        Cmd::Contract { graph, set } => {
            let g = read_graph(graph)?;
            let verts: Vec<usize> = parse_sequence(set)?.into_iter().map(|v| v as usize).collect();
            let c = contract(&g, VertexSet::from_slice(&verts))?;
            if cli.pretty {
                return Ok((Output::Text(write_graph(&c)), EXIT_OK));
            }
            json(json!({"n": c.n(), "edges": edges_json(&c)}))
        }
        Cmd::RhoStar { graph } => {
            let g = read_graph(graph)?;
            let rho = fractional_cover_number(&g)?;
            let mut v = json!({"rho_star": rho.to_string()});
            if let Ok(e) = genupper_exponent(&g) {
                v["exponent"] = json!(e.to_string());
            }
            json(v)
        }
        Cmd::VerifyPaper { full, .. } => {
            let profile = if *full { Profile::Full } else { Profile::Quick };
            let r = verify_paper(profile, Fault::None);
            let code = if r.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED };
            Ok((Output::Json(r.to_json()), code))
        }
    }
}

fn budget_from(flag: Option<f64>) -> Result<Budget> {
    let secs = match flag {
        Some(s) => Some(s),
        None => match std::env::var(BUDGET_ENV) {
            Ok(v) => Some(
                v.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::InvalidArgument(format!("{BUDGET_ENV} must be a number of seconds")))?,
            ),
            Err(_) => None,
        },
    };
    match secs {
        Some(s) if !(s > 0.0) => Err(Error::InvalidArgument("budget must be positive".into())),
        Some(s) => Ok(Budget::seconds(s)),
        None => Ok(Budget::UNLIMITED),
    }
}

fn parse_compression(s: &str) -> Result<Simplify> {
    match s {
        "underlying" => Ok(Simplify::UnderlyingSimple),
        "component" => Ok(Simplify::ComponentClosure),
        _ => s
            .strip_prefix("distance:")
            .and_then(|t| t.parse().ok())
            .map(Simplify::DistanceClosure)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown compression `{s}`"))),
    }
}

/// A graph from a file in the text format, or an inline literal.
pub fn read_graph(arg: &str) -> Result<MultiHypergraph> {
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| Error::Io(format!("{arg}: {e}")))?;
        parse_graph(&text)
    } else {
        parse_literal(arg)
    }
}

/// A pattern literal, `file:<path>` or `family:<path1,path2,...>`.
pub fn read_pattern(arg: &str) -> Result<Pattern> {
    let p = if let Some(path) = arg.strip_prefix("file:") {
        Pattern::Finite(vec![read_graph(path)?])
    } else if let Some(paths) = arg.strip_prefix("family:") {
        Pattern::Finite(paths.split(',').map(read_graph).collect::<Result<_>>()?)
    } else {
        return arg.parse();
    };
    p.validate()?;
    Ok(p)
}

fn construct(name: &str, params: &[String]) -> Result<MultiHypergraph> {
    let nums: Vec<usize> = params
        .iter()
        .map(|s| {
            s.parse()
                .map_err(|_| Error::InvalidArgument(format!("bad parameter `{s}`")))
        })
        .collect::<Result<_>>()?;
    let arity = |n: usize| {
        if nums.len() == n {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("`{name}` takes {n} parameter(s)")))
        }
    };
    // The infallible generators need their vertex count checked first.
    let total: usize = match name {
        "bipartite" | "matching" | "two-cliques" => nums.iter().sum::<usize>() * 2,
        _ => nums.iter().sum::<usize>() + 1,
    };
    if matches!(
        name,
        "clique" | "bipartite" | "two-cliques" | "cycle" | "path" | "star" | "matching"
    ) && total > crate::graphs::MAX_VERTICES
    {
        return Err(Error::TooManyVertices(total));
    }
    let g = match name {
        "clique" => {
            arity(1)?;
            cons::clique(nums[0])
        }
        "bipartite" => {
            arity(2)?;
            cons::complete_bipartite(nums[0], nums[1])
        }
        "two-cliques" => {
            arity(1)?;
            cons::two_cliques(nums[0])
        }
        "cycle" if nums.first().is_some_and(|&n| n >= 3) => {
            arity(1)?;
            cons::cycle(nums[0])
        }
        "path" => {
            arity(1)?;
            cons::path(nums[0])
        }
        "star" => {
            arity(1)?;
            cons::star(nums[0])
        }
        "matching" => {
            arity(1)?;
            cons::matching(nums[0])
        }
        "turan" => {
            arity(2)?;
            turan_graph(nums[0], nums[1])?
        }
        "pendant" if !nums.is_empty() => cons::pendant_graph(nums[0], &nums[1..])?,
        "gk" => {
            arity(1)?;
            cons::gk_graph(nums[0])?
        }
        "p1p2" => {
            arity(1)?;
            cons::p1p2_host(nums[0])?
        }
        "nested" => cons::nested_cliques(&nums)?,
        "dumbbell-simple" => {
            arity(1)?;
            cons::dumbbell_simplehost(nums[0])?
        }
        "dumbbell-multi" if matches!(nums.len(), 1 | 2) => {
            let k = nums[0] as u64;
            let n = match nums.get(1) {
                Some(&n) => n,
                None => cons::dumbbell_multihost_best(k)?,
            };
            cons::dumbbell_multihost(k, n)?
        }
        _ => {
            return Err(Error::InvalidArgument(format!(
                "unknown construction `{name}` or bad parameters"
            )))
        }
    };
    Ok(g)
}

/// Aligned `key  value` lines for a JSON object.
fn pretty(v: &Value) -> String {
    let Value::Object(map) = v else {
        return format!("{v:#}\n");
    };
    let width = map.keys().map(|k| k.len()).max().unwrap_or(0);
    let mut s = String::new();
    for (k, val) in map {
        let shown = match val {
            Value::String(x) => x.clone(),
            Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
                let rows: Vec<String> = items.iter().map(|i| format!("  {i}")).collect();
                format!("\n{}", rows.join("\n"))
            }
            other => other.to_string(),
        };
        s.push_str(&format!("{k:<width$}  {shown}\n"));
    }
    s
}
