//! `coext`: command-line frontend for the binary matroid toolkit.
//!
//! Inputs are file paths or catalog names. Exit status is 0 when every check
//! passed, 1 when a check found a violation, 2 on usage or input errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use coext::catalog;
use coext::coextension::{classify_circuits, classify_cocircuits, split_matrix, Violation};
use coext::connectivity::{connectivity, is_n_connected};
use coext::format::{self, Document};
use coext::graphs::{self, cycle_matroid, graph_girth, vertex_connectivity};
use coext::report::{self, braces, render_table, yes_no};
use coext::theorems::verify_equivalence_with_jobs;
use coext::{BinaryMatroid, Error, Extended, Gf2Matrix, SimpleGraph};

#[derive(Parser)]
#[command(
    name = "coext",
    version,
    about = "Element splitting and connectivity of binary matroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Table,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Rank, girth, cogirth, connectivity and circuit counts.
    Info { input: String },
    /// Element split by T: prints the matrix, its connectivity and the
    /// circuit and cocircuit classes.
    Split {
        input: String,
        /// Comma-separated labels of T.
        #[arg(long = "t", value_delimiter = ',', required = true)]
        t: Vec<String>,
        #[arg(long, default_value = "a")]
        label: String,
    },
    /// Checks the three connectivity criteria agree on every T with |T| = n-1.
    Verify {
        input: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Emit,
        /// Also write the records to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// n-point split of a graph vertex, checked for n-connectivity.
    GraphSplit {
        input: String,
        #[arg(long)]
        vertex: String,
        /// Comma-separated edge labels moved to the first new vertex.
        #[arg(long, value_delimiter = ',', required = true)]
        edges: Vec<String>,
        #[arg(long)]
        n: usize,
        /// Print the split graph as Graphviz source instead of a graph file.
        #[arg(long)]
        dot: bool,
    },
    /// Splits vertices of degree above 3 until the graph is cubic.
    ReduceCubic {
        input: String,
        #[arg(long)]
        dot: bool,
    },
    /// Prints a built-in matroid or graph, or lists them without a name.
    Catalog { name: Option<String> },
}

/// Output text plus whether every check passed.
struct Outcome {
    text: String,
    clean: bool,
}

fn load(input: &str) -> coext::Result<Document> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("{input}: {e}"),
        })?;
        return format::parse_document(&text);
    }
    if let Ok(m) = catalog::matroid(input) {
        let text = format::write_matroid(&m);
        return format::parse_document(&text);
    }
    catalog::graph(input).map(Document::Graph)
}

/// The matrix as given, or the cycle matroid's representation for a graph.
fn load_matrix(input: &str) -> coext::Result<(String, Gf2Matrix)> {
    Ok(match load(input)? {
        Document::Matroid(f) => (f.name, f.matrix),
        Document::Graph(g) => {
            let m = cycle_matroid(&g)?;
            (m.name().to_string(), m.matrix().clone())
        }
    })
}

fn load_matroid(input: &str) -> coext::Result<BinaryMatroid> {
    let (name, matrix) = load_matrix(input)?;
    Ok(BinaryMatroid::from_matrix(&matrix)?.with_name(name))
}

fn load_graph(input: &str) -> coext::Result<SimpleGraph> {
    match load(input)? {
        Document::Graph(g) => Ok(g),
        Document::Matroid(f) => Err(Error::InvalidArguments(format!(
            "`{input}` is the matroid {}, a graph is needed",
            f.name
        ))),
    }
}

fn info(input: &str) -> coext::Result<Outcome> {
    let mut text = String::new();
    let m = match load(input)? {
        Document::Graph(g) => {
            let _ = writeln!(text, "graph {}", g.name());
            let _ = writeln!(text, "vertices: {}", g.vertex_count());
            let _ = writeln!(text, "edges: {}", g.edge_count());
            if g.vertex_count() <= graphs::CUT_SEARCH_CAP {
                let _ = writeln!(text, "vertex connectivity: {}", vertex_connectivity(&g)?);
            }
            let _ = writeln!(text, "girth: {}", graph_girth(&g));
            cycle_matroid(&g)?
        }
        Document::Matroid(f) => f.to_matroid()?,
    };
    let _ = writeln!(text, "matroid {}", m.name());
    let _ = writeln!(text, "elements: {}", m.len());
    let _ = writeln!(text, "rank: {}", m.rank());
    let _ = writeln!(text, "girth: {}", m.girth()?);
    let _ = writeln!(text, "cogirth: {}", m.cogirth()?);
    let _ = writeln!(text, "connectivity: {}", connectivity(&m)?);
    let _ = writeln!(text, "circuits: {}", m.circuits()?.len());
    let _ = writeln!(text, "cocircuits: {}", m.cocircuits()?.len());
    Ok(Outcome { text, clean: true })
}

fn violation_lines(text: &mut String, vs: &[Violation]) {
    for v in vs {
        let _ = writeln!(
            text,
            "violation: {} {}: {}",
            v.class,
            braces(&v.set),
            v.reason
        );
    }
}

fn split(input: &str, t: &[String], label: &str) -> coext::Result<Outcome> {
    let (name, matrix) = load_matrix(input)?;
    let m = BinaryMatroid::from_matrix(&matrix)?.with_name(name);
    let t_set = m.set_of(t.iter().map(String::as_str))?;
    let split_name = format!("{}'_{{{}}}", m.name(), t.join(","));
    let raw = split_matrix(&matrix, t_set.bits(), label)?;
    let n = BinaryMatroid::from_matrix(&raw)?.with_name(split_name.clone());

    let mut text = format::write_matroid_matrix(&split_name, &raw);
    let _ = writeln!(text, "rank: {}", n.rank());
    match connectivity(&m)? {
        Extended::Finite(k) => {
            let _ = writeln!(text, "{k}-connected: {}", yes_no(is_n_connected(&n, k)?));
        }
        Extended::Infinite => {}
    }
    let _ = writeln!(text, "connectivity: {}", connectivity(&n)?);

    let circuits = classify_circuits(&m, t_set)?;
    for class in &circuits.classes {
        let _ = writeln!(text, "{:?} circuits: {}", class.tag, class.members.len());
    }
    violation_lines(&mut text, &circuits.violations);
    let mut clean = circuits.violations.is_empty();
    match classify_cocircuits(&m, t_set) {
        Ok(cocircuits) => {
            for class in &cocircuits.classes {
                let _ = writeln!(text, "{:?} cocircuits: {}", class.tag, class.members.len());
            }
            violation_lines(&mut text, &cocircuits.violations);
            clean &= cocircuits.violations.is_empty();
        }
        Err(Error::TContainsCocircuit(c)) => {
            let _ = writeln!(
                text,
                "cocircuit classes skipped: T contains the cocircuit {}",
                braces(&c)
            );
        }
        Err(e) => return Err(e),
    }
    Ok(Outcome { text, clean })
}

fn verify(
    input: &str,
    n: usize,
    emit: Emit,
    out: Option<&Path>,
    jobs: Option<usize>,
) -> coext::Result<Outcome> {
    let m = load_matroid(input)?;
    let sweep = verify_equivalence_with_jobs(&m, n, jobs)?;
    let records = report::sweep_records(&sweep);
    if let Some(path) = out {
        std::fs::write(path, &records).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("{}: {e}", path.display()),
        })?;
    }
    let text = match emit {
        Emit::Table => report::sweep_table(&sweep),
        Emit::Records => records,
    };
    Ok(Outcome {
        text,
        clean: sweep.clean(),
    })
}

fn graph_split(
    input: &str,
    vertex: &str,
    edges: &[String],
    n: usize,
    dot: bool,
) -> coext::Result<Outcome> {
    let g = load_graph(input)?;
    let r = graphs::slater_check(&g, n, vertex, edges)?;
    let split = graphs::point_split(&g, vertex, edges, "a")?;
    let mut text = String::new();
    let rows = vec![
        vec!["graph".into(), r.graph.clone()],
        vec!["vertex".into(), r.vertex.clone()],
        vec!["T".into(), braces(&r.t_set)],
        vec!["new vertices".into(), format!("{} {}", split.u, split.w)],
        vec![
            "split connectivity".into(),
            r.split_connectivity.to_string(),
        ],
        vec![
            format!("{n}-connected"),
            yes_no(r.split_is_n_connected).into(),
        ],
        vec![
            "cycle matroid is the element split".into(),
            yes_no(r.matroid_bridge_holds).into(),
        ],
        vec![
            "cocircuit condition".into(),
            yes_no(r.cocircuit_condition_holds).into(),
        ],
        vec![
            format!("element split {n}-connected"),
            r.split_matroid_n_connected
                .map_or("not checked", yes_no)
                .into(),
        ],
    ];
    text.push_str(&render_table(&["check", "value"], &rows));
    for v in &r.violations {
        let _ = writeln!(text, "violation: {v}");
    }
    text.push('\n');
    text.push_str(&if dot {
        format::to_dot(&split.graph)
    } else {
        format::write_graph(&split.graph)
    });
    Ok(Outcome {
        text,
        clean: r.passed(),
    })
}

fn reduce_cubic(input: &str, dot: bool) -> coext::Result<Outcome> {
    let g = load_graph(input)?;
    let r = graphs::reduce_to_cubic(&g)?;
    let rows: Vec<Vec<String>> = r
        .trace
        .iter()
        .enumerate()
        .map(|(i, s)| {
            vec![
                (i + 1).to_string(),
                s.vertex.clone(),
                s.degree.to_string(),
                braces(&s.t_set),
                format!("{} {}", s.split.u, s.split.w),
                s.split.bridge_edge.clone(),
            ]
        })
        .collect();
    let mut text = render_table(
        &["step", "vertex", "degree", "T", "new vertices", "bridge"],
        &rows,
    );
    let _ = writeln!(text, "{} steps, every graph 3-connected", r.trace.len());
    text.push('\n');
    text.push_str(&if dot {
        format::to_dot(&r.graph)
    } else {
        format::write_graph(&r.graph)
    });
    Ok(Outcome { text, clean: true })
}

fn catalog_entry(name: Option<&str>) -> coext::Result<Outcome> {
    let text = match name {
        None => {
            let mut s = String::from("matroids:\n");
            for n in catalog::MATROIDS {
                let _ = writeln!(s, "  {n}");
            }
            s.push_str("graphs:\n");
            for n in catalog::GRAPHS {
                let _ = writeln!(s, "  {n}");
            }
            s
        }
        Some(name) => match catalog::matroid(name) {
            Ok(m) => format::write_matroid(&m),
            Err(_) => format::write_graph(&catalog::graph(name)?),
        },
    };
    Ok(Outcome { text, clean: true })
}

fn run(cli: Cli) -> coext::Result<Outcome> {
    match cli.command {
        Command::Info { input } => info(&input),
        Command::Split { input, t, label } => split(&input, &t, &label),
        Command::Verify {
            input,
            n,
            format,
            out,
            jobs,
        } => verify(&input, n, format, out.as_deref(), jobs),
        Command::GraphSplit {
            input,
            vertex,
            edges,
            n,
            dot,
        } => graph_split(&input, &vertex, &edges, n, dot),
        Command::ReduceCubic { input, dot } => reduce_cubic(&input, dot),
        Command::Catalog { name } => catalog_entry(name.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.clean {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
