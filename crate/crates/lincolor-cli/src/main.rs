use clap::{Args, Parser, Subcommand};
use lincolor::bench::{bench_linear_scaling, ops_slope, write_table};
use lincolor::explore::explore_conjecture;
use lincolor::gen::{gen_random_pairs, GenError};
use lincolor::verify::{brute_force_coloring, class_checks, count_mono_and_pairs, verify_linear};
use lincolor::{color_instance, parse_graph, Class, Exec, LinearColoring, MutableGraph, PairConstraints};
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Linear-forest edge colorings of low-degeneracy graphs.
#[derive(Parser)]
#[command(name = "lincolor", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// Input graph file (default: stdin)
    #[arg(short = 'i', long = "input", global = true)]
    input: Option<PathBuf>,
    /// Output file (default: stdout)
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// 3deg, 2deg, 2deg-dense, bipartite or p2tree
    #[arg(long, global = true)]
    class: Option<Class>,
    /// Number of colors
    #[arg(short = 'k', global = true)]
    k: Option<u16>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Color a graph
    Color {
        /// Pair constraints for p2tree
        #[arg(long)]
        pairs: Option<PathBuf>,
        /// Recheck every incremental structure after each step
        #[arg(long)]
        audit: bool,
    },
    /// Check a coloring against its graph
    Verify {
        /// Coloring file
        #[arg(short = 'c', long = "coloring")]
        coloring: PathBuf,
        #[arg(long)]
        pairs: Option<PathBuf>,
        /// Fail if more vertices are monochromatic
        #[arg(long)]
        max_mono: Option<usize>,
    },
    /// Exact linear arboricity of a small graph
    Oracle {
        #[arg(long, default_value_t = 4)]
        max_colors: u16,
    },
    /// Generate a random graph of a class
    Gen {
        #[arg(short = 'n', long)]
        n: usize,
        /// Maximum degree for 3deg, 2deg and bipartite
        #[arg(long)]
        dmax: Option<u32>,
        /// Also write a random maximal pair set (p2tree)
        #[arg(long)]
        pairs_out: Option<PathBuf>,
    },
    /// Search small 2-degenerate graphs for one without a 2-linear coloring
    Explore {
        #[arg(long, default_value_t = 9)]
        max_n: usize,
    },
    /// Time the coloring at growing sizes
    Bench {
        /// Comma-separated ascending sizes
        #[arg(long, value_delimiter = ',', default_values_t = [10000usize, 20000, 40000, 80000])]
        sizes: Vec<usize>,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

fn fail(msg: impl Into<String>) -> Failure {
    Failure { code: 1, msg: msg.into() }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

fn read_bytes(path: Option<&Path>) -> Result<Vec<u8>, Failure> {
    match path {
        Some(p) => fs::read(p).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            let mut buf = Vec::new();
            io::stdin().read_to_end(&mut buf).map_err(|e| usage(format!("stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn read_graph(path: Option<&Path>) -> Result<MutableGraph, Failure> {
    parse_graph(&read_bytes(path)?).map_err(|e| usage(format!("graph: {e}")))
}

fn read_pairs(path: Option<&Path>, n: usize) -> Result<Option<PairConstraints>, Failure> {
    path.map(|p| PairConstraints::parse(&read_bytes(Some(p))?, n).map_err(|e| usage(format!("pairs: {e}"))))
        .transpose()
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| usage(format!("stdout: {e}"))),
    }
}

fn generate(class: Class, n: usize, dmax: Option<u32>, seed: u64) -> Result<MutableGraph, GenError> {
    use lincolor::gen::*;
    match class {
        Class::ThreeDeg => gen_random_tdeg(n, 3, dmax.unwrap_or(5), seed),
        Class::TwoDeg => gen_random_tdeg(n, 2, dmax.unwrap_or(8), seed),
        Class::TwoDegDense => gen_maximal_2deg_maxdeg4(n, seed),
        Class::Bipartite => gen_bipartite_2deg(n, dmax.unwrap_or(4), seed),
        Class::P2Tree => gen_partial2tree_maxdeg4(n, 0.1, seed),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let gl = &cli.global;
    let input = gl.input.as_deref();
    let output = gl.output.as_deref();
    match &cli.cmd {
        Cmd::Color { pairs, audit } => {
            let g = read_graph(input)?;
            let class = gl.class.unwrap_or(Class::ThreeDeg);
            let pairs = read_pairs(pairs.as_deref(), g.n())?;
            if pairs.is_some() && class != Class::P2Tree {
                return Err(usage("--pairs only applies to --class p2tree"));
            }
            let out = color_instance(&g, class, gl.k, pairs.as_ref(), *audit).map_err(|e| fail(e.to_string()))?;
            write_out(output, &out.coloring.write(&g, Some(&out.mono)))
        }
        Cmd::Verify { coloring, pairs, max_mono } => {
            let g = read_graph(input)?;
            let c = LinearColoring::parse(&read_bytes(Some(coloring))?, &g)
                .map_err(|e| usage(format!("coloring: {e}")))?;
            let pairs = read_pairs(pairs.as_deref(), g.n())?;
            if let Some(k) = gl.k {
                if c.max_color() > k {
                    return Err(fail(format!("coloring uses color {} but k = {k}", c.max_color())));
                }
            }
            verify_linear(&g, &c).map_err(|e| fail(format!("invalid: {e}")))?;
            let (mono, pairs_ok) = count_mono_and_pairs(&g, &c, pairs.as_ref());
            if !pairs_ok {
                return Err(fail("invalid: a pair has both vertices monochromatic"));
            }
            if let Some(limit) = max_mono {
                if mono.count() > *limit {
                    return Err(fail(format!("invalid: {} monochromatic vertices, limit {limit}", mono.count())));
                }
            }
            write_out(output, &format!("ok colors {} mono {}\n", c.colors_used(), mono.count()))
        }
        Cmd::Oracle { max_colors } => {
            let g = read_graph(input)?;
            match brute_force_coloring(&g, *max_colors).map_err(|e| usage(e.to_string()))? {
                Some(c) => write_out(output, &format!("chi_l {}\n{}", c.k, c.write(&g, None))),
                None => Err(fail(format!("no linear coloring with at most {max_colors} colors"))),
            }
        }
        Cmd::Gen { n, dmax, pairs_out } => {
            let class = gl.class.unwrap_or(Class::ThreeDeg);
            let g = generate(class, *n, *dmax, gl.seed).map_err(|e| fail(e.to_string()))?;
            if let Some(p) = pairs_out {
                write_out(Some(p), &gen_random_pairs(&g, gl.seed).write())?;
            }
            let r = class_checks(&g);
            eprintln!(
                "c n {} m {} maxdeg {} degeneracy {} bipartite {} p2tree {}",
                r.n, r.m, r.max_degree, r.degeneracy, r.bipartite, r.partial_2tree
            );
            write_out(output, &g.write_graph())
        }
        Cmd::Explore { max_n } => {
            let rep = explore_conjecture(*max_n, Exec::default()).map_err(|e| fail(e.to_string()))?;
            for l in &rep.levels {
                eprintln!("c n {} graphs {} connected {} searched {}", l.n, l.graphs, l.connected, l.searched);
            }
            if !rep.undecided.is_empty() {
                eprintln!("c {} graphs undecided within the search budget", rep.undecided.len());
            }
            write_out(output, &rep.write())
        }
        Cmd::Bench { sizes } => {
            let class = gl.class.unwrap_or(Class::ThreeDeg);
            let rows = bench_linear_scaling(sizes, class, gl.seed).map_err(|e| fail(e.to_string()))?;
            if let Some(s) = ops_slope(&rows) {
                eprintln!("c ops slope {s:.3}");
            }
            write_out(output, &write_table(&rows))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("lincolor: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
