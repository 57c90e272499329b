use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use sgsr::catalog::{build_catalog, build_catalog_from, export_catalog, verify_catalog, ParityOutcome};
use sgsr::feasibility::{enumerate_candidates, ParamQuery, StructuralFilter};
use sgsr::format::{parse_graph6, parse_sg, write_graph6};
use sgsr::search::{classify_range, gen_regular, Budget, Classification, RangeOptions, Source, Target};
use sgsr::srsg::{check_srsg, classify_class, lemma2_check};
use sgsr::SignedGraph;

const OK: u8 = 0;
const FALSE: u8 = 1;
const USAGE: u8 = 2;
const BUDGET: u8 = 3;

/// Strongly regular signed graphs: verification, feasibility and search.
#[derive(Parser)]
#[command(name = "sgsr", version)]
struct Cli {
    /// Emit JSON on stdout
    #[arg(long, global = true)]
    json: bool,
    /// Suppress progress messages on stderr
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check strong regularity of a graph file (.sg, or graph6 for .g6)
    Verify { file: PathBuf },
    /// Print degree data and parameters of a graph file
    Params { file: PathBuf },
    /// List parameter tuples allowed by the net-degree identity
    Feasible(FeasibleArgs),
    /// Generate connected r-regular graphs up to isomorphism
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Write graph6 lines here instead of stdout
        #[arg(long)]
        graph6_out: Option<PathBuf>,
    },
    /// Classify connected r-regular, rho net-regular SRSGs up to n_max vertices
    Classify(ClassifyArgs),
    /// Verify the built-in catalog of degree-5 examples
    Catalog {
        /// Write each entry as NAME.sg plus NAME.json
        #[arg(long)]
        export: Option<PathBuf>,
        /// Read the search-derived fixtures from this directory
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Check the negative-walk parity property of a graph file
    Lemma2 { file: PathBuf },
}

#[derive(Args)]
struct FeasibleArgs {
    #[arg(long, allow_hyphen_values = true)]
    r: i64,
    #[arg(long, allow_hyphen_values = true)]
    net: i64,
    #[arg(long)]
    nmax: i64,
    /// Apply the structural divisibility filters
    #[arg(long)]
    paper_filters: bool,
    /// Skip the complete order n = r + 1
    #[arg(long)]
    noncomplete: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    r: usize,
    #[arg(long, allow_hyphen_values = true)]
    net: i64,
    #[arg(long)]
    nmax: usize,
    /// Read underlying graphs from DIR/reg{n}_{r}.g6 instead of generating them
    #[arg(long, env = "SGSR_CENSUS_DIR")]
    census: Option<PathBuf>,
    /// Search orders above --full-max in constrained mode
    #[arg(long)]
    constrained: bool,
    /// Target a,b,c for constrained orders (default: every candidate tuple)
    #[arg(long, value_parser = parse_target, allow_hyphen_values = true)]
    params: Option<Target>,
    /// Largest order searched in full mode
    #[arg(long, default_value_t = 12)]
    full_max: usize,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    jobs: Option<usize>,
    /// Drop candidate tuples excluded by the structural divisibility filters
    #[arg(long)]
    paper_filters: bool,
    #[arg(long)]
    max_nodes: Option<u64>,
    #[arg(long)]
    max_seconds: Option<u64>,
}

fn parse_target(s: &str) -> Result<Target, String> {
    let parts: Vec<Option<i64>> = s
        .split(',')
        .map(|t| match t.trim() {
            "null" | "-" | "" => Ok(None),
            t => t.parse().map(Some).map_err(|_| format!("bad number `{t}`")),
        })
        .collect::<Result<_, _>>()?;
    let [a, b, c] = parts[..] else {
        return Err("expected a,b,c".into());
    };
    Ok(Target { a, b, c })
}

struct Out {
    json: bool,
    quiet: bool,
}

impl Out {
    fn log(&self, msg: impl AsRef<str>) {
        if !self.quiet {
            eprintln!("{}", msg.as_ref());
        }
    }

    fn json<T: Serialize>(&self, value: &T) {
        println!("{}", serde_json::to_string(value).expect("output serializes"));
    }
}

fn read_graph(path: &Path) -> Result<SignedGraph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let parsed = if path.extension().is_some_and(|e| e == "g6") {
        parse_graph6(text.lines().next().unwrap_or(""))
    } else {
        parse_sg(&text)
    };
    parsed.map_err(|e| format!("{}: {e}", path.display()))
}

fn verify(out: &Out, file: &Path) -> Result<u8, String> {
    let g = read_graph(file)?;
    match check_srsg(&g) {
        Ok(p) => {
            let class = classify_class(&p);
            if out.json {
                out.json(&serde_json::json!({ "srsg": true, "params": p, "class": class }));
            } else {
                println!("{p} {class}");
            }
            Ok(OK)
        }
        Err(f) => {
            if out.json {
                out.json(&serde_json::json!({ "srsg": false, "failure": f }));
            } else {
                println!("not strongly regular: {f}");
            }
            Ok(FALSE)
        }
    }
}

fn params(out: &Out, file: &Path) -> Result<u8, String> {
    let g = read_graph(file)?;
    let profile = g.degrees();
    let checked = check_srsg(&g).ok();
    if out.json {
        out.json(&serde_json::json!({
            "n": g.order(),
            "edges": g.edge_count(),
            "regular_degree": profile.regular_degree(),
            "net_degree": profile.net_degree(),
            "connected": g.is_connected(),
            "balanced": g.is_balanced(),
            "params": checked,
            "class": checked.map(|p| classify_class(&p)),
        }));
    } else {
        let show = |x: Option<String>| x.unwrap_or_else(|| "-".into());
        println!("n {}", g.order());
        println!("edges {}", g.edge_count());
        println!(
            "regular degree {}",
            show(profile.regular_degree().map(|d| d.to_string()))
        );
        println!("net degree {}", show(profile.net_degree().map(|d| d.to_string())));
        println!("connected {}", g.is_connected());
        println!("balanced {}", g.is_balanced());
        match checked {
            Some(p) => println!("params {p} {}", classify_class(&p)),
            None => println!("params null"),
        }
    }
    Ok(if checked.is_some() { OK } else { FALSE })
}

fn feasible(out: &Out, args: &FeasibleArgs) -> Result<u8, String> {
    let mut q = ParamQuery::new(args.r, args.net, args.nmax);
    q.require_noncomplete = args.noncomplete;
    if args.paper_filters {
        q.structural_filters = StructuralFilter::ALL.to_vec();
    }
    let cands = enumerate_candidates(&q).map_err(|e| e.to_string())?;
    for c in &cands {
        if out.json {
            out.json(c);
        } else {
            println!("{c}");
        }
    }
    out.log(format!("{} candidates", cands.len()));
    Ok(OK)
}

fn gen(out: &Out, n: usize, r: usize, file: Option<&Path>) -> Result<u8, String> {
    let graphs = gen_regular(n, r).map_err(|e| e.to_string())?;
    let lines: Vec<String> = graphs
        .iter()
        .map(|g| write_graph6(g).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    out.log(format!("{} connected {r}-regular graphs on {n} vertices", graphs.len()));
    if let Some(path) = file {
        let body: String = lines.iter().map(|l| format!("{l}\n")).collect();
        fs::write(path, body).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    if out.json {
        out.json(&serde_json::json!({ "n": n, "r": r, "count": graphs.len(), "graph6": lines }));
    } else if file.is_some() {
        println!("{}", graphs.len());
    } else {
        for l in &lines {
            println!("{l}");
        }
    }
    Ok(OK)
}

fn print_classification(c: &Classification) {
    println!("r={} net={} n_max={}", c.r, c.rho, c.n_max);
    println!(
        "{:>3}  {:<28} {:>10} {:>12} {:>12} {:>9}  status",
        "n", "mode", "underlying", "signings", "nodes", "survivors"
    );
    for rep in &c.reports {
        println!(
            "{:>3}  {:<28} {:>10} {:>12} {:>12} {:>9}  {}",
            rep.n,
            rep.mode,
            rep.underlying_count,
            rep.signing_count,
            rep.node_count,
            rep.survivors.len(),
            rep.incomplete.as_deref().unwrap_or("complete")
        );
    }
    let total: Vec<_> = c.survivors().collect();
    println!("survivors: {}", total.len());
    for s in total {
        println!("  {} {}", s.params, s.class);
    }
    for st in &c.strata {
        println!("stratum (n,{},{},{},{}): {}", st.r, st.a, st.b, st.c, st.note);
    }
}

fn classify(out: &Out, args: &ClassifyArgs) -> Result<u8, String> {
    let opts = RangeOptions {
        source: args.census.clone().map_or(Source::Generated, Source::Census),
        full_max: args.full_max,
        constrained: args.constrained,
        target: args.params,
        structural_filters: if args.paper_filters {
            StructuralFilter::ALL.to_vec()
        } else {
            Vec::new()
        },
        budget: Budget {
            max_nodes: args.max_nodes,
            max_time: args.max_seconds.map(Duration::from_secs),
        },
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = args.jobs {
        pool = pool.num_threads(j);
    }
    let pool = pool.build().map_err(|e| e.to_string())?;
    out.log(format!(
        "classifying r={} net={} up to n={} on {} threads",
        args.r,
        args.net,
        args.nmax,
        pool.current_num_threads()
    ));
    let result = pool
        .install(|| classify_range(args.r, args.net, args.nmax, &opts))
        .map_err(|e| e.to_string())?;
    for rep in &result.reports {
        out.log(format!("n={} {}: {:.2?}", rep.n, rep.mode, rep.elapsed));
    }
    if out.json {
        out.json(&result);
    } else {
        print_classification(&result);
    }
    Ok(if result.is_complete() { OK } else { BUDGET })
}

fn catalog(out: &Out, export: Option<&Path>, fixtures: Option<&Path>) -> Result<u8, String> {
    let entries = match fixtures {
        Some(dir) => build_catalog_from(dir).map_err(|e| e.to_string())?,
        None => build_catalog(),
    };
    let reports = verify_catalog(&entries);
    if out.json {
        out.json(&reports);
    } else {
        for r in &reports {
            let verdict = if r.passed { "pass" } else { "FAIL" };
            let parity = match &r.parity {
                ParityOutcome::Holds => "parity ok".to_string(),
                ParityOutcome::Violated { .. } => "parity violated".to_string(),
                ParityOutcome::NotApplicable { reason } => format!("parity n/a ({reason})"),
            };
            let class = r.class.map_or_else(|| "-".to_string(), |c| c.to_string());
            println!("{verdict} {:<6} {} {class} {parity}", r.name, r.expected);
            for d in r.diagnostics() {
                println!("     {d}");
            }
        }
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    out.log(format!("{passed}/{} entries pass", reports.len()));
    if let Some(dir) = export {
        let written = export_catalog(&entries, dir).map_err(|e| e.to_string())?;
        out.log(format!("wrote {} files to {}", written.len(), dir.display()));
    }
    Ok(if passed == reports.len() { OK } else { FALSE })
}

fn lemma2(out: &Out, file: &Path) -> Result<u8, String> {
    let g = read_graph(file)?;
    let (code, value, text) = match lemma2_check(&g) {
        Ok(None) => (OK, serde_json::json!({ "holds": true }), "holds".to_string()),
        Ok(Some(w)) => (
            FALSE,
            serde_json::json!({ "holds": false, "witness": w }),
            format!(
                "violated at pair {:?}: {} negative 2-walks, {} of shape +-, {} of shape -+",
                w.pair, w.negative_walks, w.pos_neg, w.neg_pos
            ),
        ),
        Err(reason) => (
            FALSE,
            serde_json::json!({ "holds": null, "not_applicable": reason.to_string() }),
            format!("not applicable: {reason}"),
        ),
    };
    if out.json {
        out.json(&value);
    } else {
        println!("{text}");
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Out {
        json: cli.json,
        quiet: cli.quiet,
    };
    let result = match &cli.command {
        Command::Verify { file } => verify(&out, file),
        Command::Params { file } => params(&out, file),
        Command::Feasible(args) => feasible(&out, args),
        Command::Gen { n, r, graph6_out } => gen(&out, *n, *r, graph6_out.as_deref()),
        Command::Classify(args) => classify(&out, args),
        Command::Catalog { export, fixtures } => catalog(&out, export.as_deref(), fixtures.as_deref()),
        Command::Lemma2 { file } => lemma2(&out, file),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}
