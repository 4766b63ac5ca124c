//! The `rindep` command line.
//!
//! Exit codes: 0 when the property holds, 1 when it fails, 2 for usage and
//! I/O errors, 3 when the search budget ran out.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use rindep::chordality::{every_contraction_simplicial, is_w_chordal, ChordalDecision};
use rindep::complex::{independence_complex, ind_r_complex, is_r_independent};
use rindep::conn::con_r;
use rindep::constructions::{
    clique_cycle, clique_path, counterexample_gt_paths, random_family, she_higher_family,
    star_clique, t3_graph, whiskered, FamilyKind, LabeledGraph, SheHigher,
};
use rindep::harness::{self, Certificate, SuiteConfig};
use rindep::shelling::{is_shellable, ShellDecision};
use rindep::{Error, MinorSpec, VertexSet};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "rindep", version, about = "Higher independence complexes: shellability and w-chordality")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the edges of con_r(G), one per line.
    Conr(GraphArgs),
    /// Summarize ind_r(G), or test one set for r-independence with --set.
    Indr {
        #[command(flatten)]
        graph: GraphArgs,
        /// Comma-separated vertex list.
        #[arg(long)]
        set: Option<String>,
    },
    /// Print the facets of ind_r(G), one per line.
    Facets {
        #[command(flatten)]
        graph: GraphArgs,
        /// Compute them as ind(con_r(G)) instead of directly.
        #[arg(long)]
        via_conr: bool,
    },
    /// Decide whether ind_r(G) is shellable.
    Shellable {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        search: SearchArgs,
        /// Also print the facets.
        #[arg(long)]
        dump_facets: bool,
    },
    /// Decide whether con_r(G) is w-chordal.
    Wchordal {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        search: SearchArgs,
        /// Only check contractions (no deletions).
        #[arg(long)]
        contractions_only: bool,
    },
    /// Print a named construction as a graph file.
    Construct {
        /// gt, she-higher, t3, star-clique, clique-path, clique-cycle,
        /// whiskered, random
        family: String,
        #[command(flatten)]
        params: ConstructArgs,
        #[arg(long)]
        r: Option<usize>,
        /// Base graph for `whiskered`.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Emit JSON (with labels) instead of the edge-list format.
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite; `--list` shows the registered ids.
    Verify {
        suite: Option<String>,
        #[arg(long)]
        list: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
        /// Directory for certificate files.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also report the per-component reading of the forest bound.
        #[arg(long)]
        per_component: bool,
        /// Skip the w-chordality cross-checks.
        #[arg(long)]
        no_chain: bool,
        /// Wall-clock limit in seconds.
        #[arg(long)]
        time_limit: Option<u64>,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Print the facets of the link of a face of ind_r(G).
    Link {
        #[command(flatten)]
        graph: GraphArgs,
        /// Comma-separated vertex list.
        #[arg(long)]
        face: String,
    },
    /// Print the minor con_r(G) \ delete / contract.
    Minor {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value = "")]
        delete: String,
        #[arg(long, default_value = "")]
        contract: String,
    },
}

#[derive(Args, Debug, Clone)]
struct GraphArgs {
    /// Graph file (edge list or JSON).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Use a named construction instead of a file.
    #[arg(long)]
    construct: Option<String>,
    #[command(flatten)]
    params: ConstructArgs,
    #[arg(long)]
    r: Option<usize>,
    /// Print vertex labels instead of indices.
    #[arg(long)]
    labels: bool,
}

#[derive(Args, Debug, Clone, Default)]
struct ConstructArgs {
    /// Size parameter: |V(H_i)| for gt, whiskers per vertex for she-higher.
    #[arg(long)]
    t: Option<usize>,
    /// Path length for she-higher, vertex count for random.
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated clique sizes.
    #[arg(long)]
    sizes: Option<String>,
    /// Family for `random`.
    #[arg(long)]
    kind: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug, Clone)]
struct SearchArgs {
    #[arg(long)]
    budget: Option<u64>,
    /// Write a certificate for the decision.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Check a certificate file instead of deciding.
    #[arg(long)]
    verify_cert: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_TRUE };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

type CliResult = Result<i32, Error>;

fn execute(command: Command, out: &mut dyn Write) -> CliResult {
    match command {
        Command::Conr(args) => {
            let (lg, r) = load(&args)?;
            let h = con_r(&lg.graph, r);
            for e in h.edges() {
                writeln!(out, "{}", show(&lg, *e, args.labels))?;
            }
            Ok(EXIT_TRUE)
        }
        Command::Indr { graph, set } => {
            let (lg, r) = load(&graph)?;
            if let Some(set) = set {
                let a = parse_set(&set)?;
                check_vertices(&lg, a)?;
                let independent = is_r_independent(&lg.graph, a, r);
                writeln!(out, "{}", if independent { "independent" } else { "not independent" })?;
                return Ok(if independent { EXIT_TRUE } else { EXIT_FALSE });
            }
            let d = ind_r_complex(&lg.graph, r);
            writeln!(out, "vertices {}", lg.graph.vertex_count())?;
            writeln!(out, "facets {}", d.facet_count())?;
            match d.dim() {
                Some(dim) => writeln!(out, "dimension {dim}")?,
                None => writeln!(out, "dimension void")?,
            }
            writeln!(out, "pure {}", d.is_pure())?;
            Ok(EXIT_TRUE)
        }
        Command::Facets { graph, via_conr } => {
            let (lg, r) = load(&graph)?;
            let d = if via_conr {
                independence_complex(&con_r(&lg.graph, r))
            } else {
                ind_r_complex(&lg.graph, r)
            };
            for f in d.facets() {
                writeln!(out, "{}", show(&lg, *f, graph.labels))?;
            }
            Ok(EXIT_TRUE)
        }
        Command::Shellable {
            graph,
            search,
            dump_facets,
        } => shellable(&graph, &search, dump_facets, out),
        Command::Wchordal {
            graph,
            search,
            contractions_only,
        } => wchordal(&graph, &search, contractions_only, out),
        Command::Construct {
            family,
            params,
            r,
            graph,
            json,
        } => {
            let lg = construct(&family, &params, graph.as_deref(), r)?;
            if json {
                writeln!(out, "{}", harness::to_json(&lg))?;
            } else {
                write!(out, "{}", harness::to_text(&lg.graph))?;
            }
            Ok(EXIT_TRUE)
        }
        Command::Verify {
            suite,
            list,
            seed,
            samples,
            max_n,
            budget,
            out: out_dir,
            per_component,
            no_chain,
            time_limit,
            json,
        } => {
            if list {
                for s in harness::registry() {
                    writeln!(out, "{:<15} {}", s.id, s.description)?;
                }
                return Ok(EXIT_TRUE);
            }
            let Some(id) = suite else {
                return Err(Error::InvalidInput("missing suite id (see --list)".into()));
            };
            let cfg = SuiteConfig {
                seed,
                samples,
                max_n,
                budget: budget.unwrap_or_else(rindep::default_budget),
                out_dir,
                per_component,
                chain_checks: !no_chain,
                time_limit: time_limit.map(Duration::from_secs),
            };
            let report = harness::run_suite(&id, &cfg)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                writeln!(out, "{report}")?;
                for path in &report.certificates {
                    writeln!(out, "certificate {path}")?;
                }
            }
            Ok(if report.fail > 0 {
                EXIT_FALSE
            } else if report.unknown > 0 {
                EXIT_UNKNOWN
            } else {
                EXIT_TRUE
            })
        }
        Command::Link { graph, face } => {
            let (lg, r) = load(&graph)?;
            let face = parse_set(&face)?;
            check_vertices(&lg, face)?;
            let link = ind_r_complex(&lg.graph, r).link(face)?;
            for f in link.facets() {
                writeln!(out, "{}", show(&lg, *f, graph.labels))?;
            }
            Ok(EXIT_TRUE)
        }
        Command::Minor {
            graph,
            delete,
            contract,
        } => {
            let (lg, r) = load(&graph)?;
            let spec = MinorSpec::new(parse_set(&delete)?, parse_set(&contract)?);
            let minor = con_r(&lg.graph, r).minor(&spec)?;
            writeln!(out, "vertices {}", show(&lg, minor.vertices(), graph.labels))?;
            for e in minor.edges() {
                writeln!(out, "{}", show(&lg, *e, graph.labels))?;
            }
            Ok(EXIT_TRUE)
        }
    }
}

fn shellable(graph: &GraphArgs, search: &SearchArgs, dump: bool, out: &mut dyn Write) -> CliResult {
    if let Some(path) = &search.verify_cert {
        return verify_certificate(graph, path, out);
    }
    let (lg, r) = load(graph)?;
    let d = ind_r_complex(&lg.graph, r);
    if dump {
        for f in d.facets() {
            writeln!(out, "facet {}", show(&lg, *f, graph.labels))?;
        }
    }
    let budget = search.budget.unwrap_or_else(rindep::default_budget);
    let decision = is_shellable(&d, budget);
    let (code, cert) = match &decision {
        ShellDecision::Shellable(c) => (
            EXIT_TRUE,
            Some(Certificate::shelling(&lg.graph, r, c.order.clone())),
        ),
        ShellDecision::NotShellable { nodes } => (
            EXIT_FALSE,
            Some(Certificate::exhausted(&lg.graph, r, d.facet_count(), *nodes)),
        ),
        ShellDecision::Unknown { .. } => (EXIT_UNKNOWN, None),
    };
    writeln!(out, "{}", decision.label())?;
    if let (Some(path), Some(cert)) = (&search.out, cert) {
        cert.write(path)?;
    }
    Ok(code)
}

fn wchordal(graph: &GraphArgs, search: &SearchArgs, contractions_only: bool, out: &mut dyn Write) -> CliResult {
    if let Some(path) = &search.verify_cert {
        return verify_certificate(graph, path, out);
    }
    let (lg, r) = load(graph)?;
    let h = con_r(&lg.graph, r);
    let budget = search.budget.unwrap_or_else(rindep::default_budget);
    let decision = if contractions_only {
        every_contraction_simplicial(&h, budget)
    } else {
        is_w_chordal(&h, budget)
    };
    match &decision {
        ChordalDecision::Holds { .. } => {
            writeln!(out, "WChordal")?;
            Ok(EXIT_TRUE)
        }
        ChordalDecision::Fails(cert) => {
            writeln!(out, "NotWChordal")?;
            writeln!(out, "deleted {}", show(&lg, cert.spec.deleted, graph.labels))?;
            writeln!(out, "contracted {}", show(&lg, cert.spec.contracted, graph.labels))?;
            for e in &cert.minor_edges {
                writeln!(out, "edge {}", show(&lg, *e, graph.labels))?;
            }
            if let Some(path) = &search.out {
                Certificate::bad_minor(&lg.graph, r, cert).write(path)?;
            }
            Ok(EXIT_FALSE)
        }
        ChordalDecision::Unknown { .. } => {
            writeln!(out, "Unknown")?;
            Ok(EXIT_UNKNOWN)
        }
    }
}

fn verify_certificate(graph: &GraphArgs, path: &Path, out: &mut dyn Write) -> CliResult {
    let cert = Certificate::read(path)?;
    let ok = if graph.graph.is_some() || graph.construct.is_some() {
        let (lg, _) = load_graph_only(graph, Some(cert.r()))?;
        cert.verify(&lg.graph)?
    } else {
        cert.verify_self_contained()?
    };
    writeln!(
        out,
        "{} certificate {}",
        cert.kind(),
        if ok { "verified" } else { "rejected" }
    )?;
    Ok(if ok { EXIT_TRUE } else { EXIT_FALSE })
}

fn load(args: &GraphArgs) -> Result<(LabeledGraph, usize), Error> {
    let (lg, r) = load_graph_only(args, None)?;
    let r = r.ok_or_else(|| Error::InvalidInput("--r is required".into()))?;
    if r == 0 {
        return Err(Error::InvalidInput("--r must be positive".into()));
    }
    Ok((lg, r))
}

fn load_graph_only(args: &GraphArgs, fallback_r: Option<usize>) -> Result<(LabeledGraph, Option<usize>), Error> {
    let r = args.r.or(fallback_r);
    let lg = match (&args.graph, &args.construct) {
        (Some(_), Some(_)) => {
            return Err(Error::InvalidInput("use either --graph or --construct".into()))
        }
        (Some(path), None) => read_graph(path)?,
        (None, Some(family)) => construct(family, &args.params, None, r)?,
        (None, None) => return Err(Error::InvalidInput("--graph or --construct is required".into())),
    };
    // she-higher fixes its own r
    let r = match (r, args.construct.as_deref()) {
        (None, Some("she-higher")) => Some(she_higher(&args.params)?.r),
        (r, _) => r,
    };
    Ok((lg, r))
}

fn read_graph(path: &Path) -> Result<LabeledGraph, Error> {
    harness::read_graph(path).map_err(|e| match e {
        Error::Io(e) => Error::InvalidInput(format!("{}: {e}", path.display())),
        e => e,
    })
}

fn she_higher(p: &ConstructArgs) -> Result<SheHigher, Error> {
    she_higher_family(p.n.unwrap_or(2), p.t.unwrap_or(1))
}

fn construct(family: &str, p: &ConstructArgs, base: Option<&Path>, r: Option<usize>) -> Result<LabeledGraph, Error> {
    let sizes = || -> Result<Vec<usize>, Error> {
        let text = p
            .sizes
            .as_deref()
            .ok_or_else(|| Error::InvalidInput("--sizes is required".into()))?;
        text.split(',')
            .map(|s| {
                s.trim()
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad size {s:?}")))
            })
            .collect()
    };
    match family {
        "gt" => {
            let r = r.unwrap_or(4);
            counterexample_gt_paths(r, p.t.unwrap_or(r.saturating_sub(3).max(1)))
        }
        "she-higher" => she_higher(p).map(|f| f.g),
        "t3" => Ok(t3_graph()),
        "star-clique" => star_clique(&sizes()?),
        "clique-path" => clique_path(&sizes()?).map(|(lg, _)| lg),
        "clique-cycle" => clique_cycle(&sizes()?).map(|(lg, _)| lg),
        "whiskered" => {
            let path = base.ok_or_else(|| Error::InvalidInput("whiskered needs --graph".into()))?;
            whiskered(&read_graph(path)?.graph)
        }
        "random" => {
            let kind: FamilyKind = p.kind.as_deref().unwrap_or("tree").parse()?;
            let n = p.n.unwrap_or(8);
            if n == 0 || n > rindep::vset::MAX_VERTICES {
                return Err(Error::InvalidInput(format!("--n out of range: {n}")));
            }
            Ok(LabeledGraph::unlabeled(random_family(kind, n, p.seed)))
        }
        other => Err(Error::InvalidInput(format!("unknown construction {other:?}"))),
    }
}

fn parse_set(text: &str) -> Result<VertexSet, Error> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| match s.parse::<usize>() {
            Ok(v) if v < rindep::vset::MAX_VERTICES => Ok(v),
            _ => Err(Error::InvalidInput(format!("bad vertex {s:?}"))),
        })
        .collect()
}

fn check_vertices(lg: &LabeledGraph, s: VertexSet) -> Result<(), Error> {
    match s.difference(lg.graph.vertices()).min() {
        Some(v) => Err(Error::InvalidVertex(v)),
        None => Ok(()),
    }
}

fn show(lg: &LabeledGraph, s: VertexSet, labels: bool) -> String {
    let parts: Vec<String> = if labels {
        s.iter().map(|v| lg.labels[v].clone()).collect()
    } else {
        s.iter().map(|v| v.to_string()).collect()
    };
    parts.join(" ")
}
