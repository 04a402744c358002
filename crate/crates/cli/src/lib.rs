//! `jcolour` command-line front end. [`run`] is the whole program; the
//! binary only wires it to the process streams.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use jcolour::analysis::{analyze, analyze_family, AnalysisOptions, JAnalysis};
use jcolour::checker::{check, report, Corpus, ReportFormat, TheoremId};
use jcolour::dot::export_dot;
use jcolour::io::{parse_dimacs, parse_edge_list};
use jcolour::{
    chromatic_number, decompose, jc_number, rainbow_path_exists, ChiMode, Colouring, Family, Graph,
    RainbowMode,
};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_ADMITTING: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

const AFTER_HELP: &str = "\
Input formats:
  edgelist  first line `n m`, then m lines `u v` with 0-based vertex ids
  dimacs    `c` comments, one `p edge n m` line, `e u v` lines with 1-based
            ids; ids are shifted to 0-based on input and all output uses
            0-based ids
The format defaults to dimacs for .col/.dimacs files and edgelist otherwise.

Exit status: 0 success, 1 --expect-admits and no J^c-colouring exists,
2 input or usage error.";

#[derive(Debug, Parser)]
#[command(name = "jcolour", version, about = "Exact J-colouring analysis of small graphs", after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyse a graph file.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Option<InputFormat>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Analyse a generated family member, e.g. `family cycle 6`,
    /// `family wheel 10` (rim length), `family complete_multipartite 2 3`,
    /// `family forest_union path:3 star:2`,
    /// `family disjoint_union complete 4 + null 2`.
    Family {
        kind: String,
        params: Vec<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check theorem claims over every non-isomorphic graph up to an order.
    Check {
        #[arg(long)]
        max_n: usize,
        /// Comma-separated ids (T1..T10) or `all`.
        #[arg(long, default_value = "all")]
        theorems: String,
        #[arg(long)]
        connected_only: bool,
        /// Restrict the corpus to trees of order 1..=max-n.
        #[arg(long, conflicts_with = "connected_only")]
        trees: bool,
        /// Write the JSON report to a file, or `-` for stdout.
        #[arg(long)]
        json: Option<String>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Reserved for randomized corpora; currently unused.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Find rainbow paths between vertex pairs.
    Rainbow {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Option<InputFormat>,
        #[arg(long, num_args = 2, value_names = ["U", "V"], required_unless_present = "all_pairs", conflicts_with = "all_pairs")]
        pair: Option<Vec<usize>>,
        #[arg(long)]
        all_pairs: bool,
        /// JSON colouring `{"ell": k, "assignment": [...]}`; defaults to a
        /// J^c-colouring, else a chromatic colouring.
        #[arg(long)]
        colouring: Option<PathBuf>,
        #[arg(long)]
        json: Option<String>,
    },
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Write the JSON document to a file, or `-` for stdout.
    #[arg(long)]
    json: Option<String>,
    /// Write a Graphviz rendering of the J^c (else chromatic) colouring.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Comma-separated subset of: convention, exists-max, exists-min,
    /// chi-convention, chi-exists.
    #[arg(long)]
    modes: Option<String>,
    /// Include per-graph theorem outcomes.
    #[arg(long)]
    theorems: bool,
    /// Exit with status 1 when the graph has no J^c-colouring.
    #[arg(long)]
    expect_admits: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Edgelist,
    Dimacs,
}

fn read_graph(path: &Path, format: Option<InputFormat>) -> anyhow::Result<Graph> {
    let format = format.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some("col" | "dimacs") => InputFormat::Dimacs,
        _ => InputFormat::Edgelist,
    });
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let parsed = match format {
        InputFormat::Edgelist => parse_edge_list(&text),
        InputFormat::Dimacs => parse_dimacs(&text),
    };
    parsed.with_context(|| format!("{}", path.display()))
}

fn parse_modes(spec: Option<&str>) -> anyhow::Result<AnalysisOptions> {
    let Some(spec) = spec else {
        return Ok(AnalysisOptions::default());
    };
    let mut options = AnalysisOptions {
        rainbow_modes: Vec::new(),
        chi_modes: Vec::new(),
        theorems: false,
    };
    for m in spec.split(',').map(str::trim).filter(|m| !m.is_empty()) {
        match m {
            "chi-convention" => options.chi_modes.push(ChiMode::Convention),
            "chi-exists" => options.chi_modes.push(ChiMode::Exists),
            other => options
                .rainbow_modes
                .push(other.parse::<RainbowMode>().map_err(anyhow::Error::msg)?),
        }
    }
    options.rainbow_modes.sort();
    options.rainbow_modes.dedup();
    options.chi_modes.sort();
    options.chi_modes.dedup();
    Ok(options)
}

fn parse_theorems(spec: &str) -> anyhow::Result<Vec<TheoremId>> {
    if spec.eq_ignore_ascii_case("all") {
        return Ok(TheoremId::ALL.to_vec());
    }
    spec.split(',')
        .map(|t| t.trim().parse::<TheoremId>().map_err(anyhow::Error::msg))
        .collect()
}

/// Writes `body` to `target` (`-` is stdout).
fn emit(target: &str, body: &str, out: &mut dyn Write) -> anyhow::Result<()> {
    if target == "-" {
        out.write_all(body.as_bytes())?;
    } else {
        fs::write(target, body).with_context(|| format!("writing {target}"))?;
    }
    Ok(())
}

fn finish_analysis(a: &JAnalysis, g: &Graph, output: &OutputArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    match output.json.as_deref() {
        Some(target) => {
            emit(target, &a.to_json(), out)?;
            if target != "-" {
                out.write_all(a.to_text().as_bytes())?;
            }
        }
        None => out.write_all(a.to_text().as_bytes())?,
    }
    if let Some(path) = &output.dot {
        let colouring = a.jc_colouring.as_ref().unwrap_or(&a.chi_colouring);
        let dot = export_dot(g, Some(colouring), &a.witness_paths);
        fs::write(path, dot).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if output.expect_admits && !a.admits() {
        EXIT_NOT_ADMITTING
    } else {
        EXIT_OK
    })
}

fn options_for(output: &OutputArgs) -> anyhow::Result<AnalysisOptions> {
    let mut options = parse_modes(output.modes.as_deref())?;
    options.theorems = output.theorems;
    Ok(options)
}

fn rainbow(
    g: &Graph,
    pair: Option<&[usize]>,
    colouring: Option<&Path>,
    json_target: Option<&str>,
    out: &mut dyn Write,
) -> anyhow::Result<i32> {
    let (source, c) = match colouring {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let c: Colouring = serde_json::from_str(&text).with_context(|| format!("{}", path.display()))?;
            ("given", c)
        }
        None => {
            let parts = decompose(g);
            match jc_number(g)?.combined_witness(&parts) {
                Some(c) => ("jc", c),
                None => {
                    let mut assignment = vec![0; g.order()];
                    for comp in parts.iter() {
                        let w = chromatic_number(&comp.graph)?.witness;
                        for (i, &v) in comp.parent.iter().enumerate() {
                            assignment[v] = w.colour(i);
                        }
                    }
                    ("chi", Colouring::new(assignment)?)
                }
            }
        }
    };
    if c.len() != g.order() {
        bail!("colouring covers {} vertices but the graph has {}", c.len(), g.order());
    }
    let parts = decompose(g);
    let pairs: Vec<(usize, usize)> = match pair {
        Some(&[u, v]) => {
            for x in [u, v] {
                if x >= g.order() {
                    bail!("vertex {x} out of range for a graph on {} vertices", g.order());
                }
            }
            vec![(u, v)]
        }
        _ => (0..g.order())
            .flat_map(|u| (u + 1..g.order()).map(move |v| (u, v)))
            .filter(|&(u, v)| parts.vertex_map[u].0 == parts.vertex_map[v].0)
            .collect(),
    };
    let mut rows = Vec::with_capacity(pairs.len());
    for (u, v) in pairs {
        let (cu, lu) = parts.vertex_map[u];
        let (cv, lv) = parts.vertex_map[v];
        let path = if cu != cv {
            None
        } else {
            let comp = &parts.components[cu];
            rainbow_path_exists(&comp.graph, &c.restrict(&comp.parent), lu, lv)?
                .map(|w| w.path.iter().map(|&x| comp.parent[x]).collect::<Vec<_>>())
        };
        rows.push(json!({ "pair": [u, v], "path": path, "same_component": cu == cv }));
    }
    let doc = json!({
        "schema": "jcolour.rainbow/1",
        "colouring_source": source,
        "colouring": c,
        "pairs": rows,
    });
    let text = render_rainbow(&doc);
    match json_target {
        Some(target) => {
            let mut body = serde_json::to_string_pretty(&doc)?;
            body.push('\n');
            emit(target, &body, out)?;
            if target != "-" {
                out.write_all(text.as_bytes())?;
            }
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn render_rainbow(doc: &Value) -> String {
    let mut s = format!(
        "colouring ({}): {}\n",
        doc["colouring_source"].as_str().unwrap_or("?"),
        doc["colouring"]["assignment"]
    );
    for row in doc["pairs"].as_array().into_iter().flatten() {
        let (u, v) = (&row["pair"][0], &row["pair"][1]);
        let line = match &row["path"] {
            Value::Null if row["same_component"] == false => "different components".to_string(),
            Value::Null => "no rainbow path".to_string(),
            p => p.to_string(),
        };
        s.push_str(&format!("{u}-{v}: {line}\n"));
    }
    s
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> anyhow::Result<i32> {
    match cli.command {
        Command::Analyze { file, format, output } => {
            let g = read_graph(&file, format)?;
            let a = analyze(&g, &options_for(&output)?)?;
            finish_analysis(&a, &g, &output, out)
        }
        Command::Family { kind, params, output } => {
            let tokens: Vec<&str> = std::iter::once(kind.as_str())
                .chain(params.iter().map(String::as_str))
                .collect();
            let family = Family::from_tokens(&tokens)?;
            let a = analyze_family(&family, &options_for(&output)?)?;
            finish_analysis(&a, &family.generate()?, &output, out)
        }
        Command::Check {
            max_n,
            theorems,
            connected_only,
            trees,
            json,
            workers,
            seed: _,
        } => {
            let theorems = parse_theorems(&theorems)?;
            let corpus = if trees {
                Corpus::trees(1, max_n)?
            } else {
                Corpus::all_graphs(max_n, connected_only)?
            };
            let verdicts = check(&theorems, &corpus, workers)?;
            match json.as_deref() {
                Some(target) => {
                    emit(target, &report(&verdicts, ReportFormat::Json), out)?;
                    if target != "-" {
                        out.write_all(report(&verdicts, ReportFormat::Text).as_bytes())?;
                    }
                }
                None => out.write_all(report(&verdicts, ReportFormat::Text).as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Rainbow {
            file,
            format,
            pair,
            all_pairs: _,
            colouring,
            json,
        } => {
            let g = read_graph(&file, format)?;
            rainbow(&g, pair.as_deref(), colouring.as_deref(), json.as_deref(), out)
        }
    }
}

/// Runs the program on `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
                EXIT_INPUT
            } else {
                let _ = out.write_all(rendered.as_bytes());
                EXIT_OK
            };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_INPUT
        }
    }
}
