//! The `cmtk` command line.
//!
//! Every JSON document printed embeds a `manifest` describing the run. Wall
//! time is only recorded with `--timing`, so by default equal invocations
//! print identical bytes.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cm::{classify_with, ClassifyOptions, DEFAULT_SHELLING_BUDGET};
use crate::complex::SimplicialComplex;
use crate::corpus;
use crate::error::{Error, Result};
use crate::filtered::{
    diameter_experiment, lattice_of_flats_from_points, WeightedFiltration,
};
use crate::homology::{reduced_homology, Coefficients};
use crate::io::{self, ComplexDocument};
use crate::label::Label;
use crate::posets::{FinitePoset, LatticeStructure};
use crate::rational::{format_rational, parse_rational};
use crate::stanley_reisner::{hochster_betti_with_cap, DEFAULT_VERTEX_CAP};

const PAPER_FIG3: &str = include_str!("../examples/paper_fig3.json");

#[derive(Parser, Debug)]
#[command(name = "cmtk", version, about = "Cohen-Macaulay toolkit for simplicial complexes and filtered lattices")]
struct Cli {
    /// Print JSON (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Print human-readable text.
    #[arg(long, global = true)]
    text: bool,
    /// Record wall time in the manifest.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced homology of a complex.
    Homology {
        input: PathBuf,
        /// z, q or fp:<p>
        #[arg(long, default_value = "z")]
        coeff: String,
    },
    /// Cohen-Macaulay, Gorenstein* and related properties.
    Classify {
        input: PathBuf,
        /// Comma-separated coefficient rings.
        #[arg(long, default_value = "q,f2,f3,z")]
        fields: String,
        #[arg(long, default_value_t = DEFAULT_SHELLING_BUDGET)]
        shelling_budget: u64,
    },
    /// Graded Betti numbers of the Stanley-Reisner ring.
    Betti {
        input: PathBuf,
        /// q or fp:<p>
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        max_vertices: usize,
    },
    /// Möbius function, characteristic polynomial and order complex of a poset.
    Poset {
        input: PathBuf,
        /// μ(x, y); without arguments μ(0̂, 1̂).
        #[arg(long, num_args = 0..=2, value_names = ["X", "Y"])]
        mobius: Option<Vec<String>>,
        #[arg(long)]
        charpoly: bool,
        #[arg(long)]
        order_complex: bool,
    },
    /// Weight filtrations of the lattice of flats of a point configuration.
    Filtered {
        input: PathBuf,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        threshold: String,
        /// Negate every weight first.
        #[arg(long)]
        mirror: bool,
        #[arg(long)]
        charpoly: bool,
        /// Cohen-Macaulay and dimension check of the filtered order complex.
        #[arg(long = "check-thm32")]
        check: bool,
        #[arg(long, num_args = 2, value_names = ["P", "Q"])]
        walk: Option<Vec<String>>,
        #[arg(long)]
        diameter: bool,
        /// Flat rank used by --diameter and --experiment.
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Number of random weightings to draw.
        #[arg(long)]
        experiment: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a bundled example.
    Generate {
        #[arg(value_enum)]
        what: Generated,
        n: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Generated {
    SimplexBoundary,
    Simplex,
    Cycle,
    CrossPolytope,
    Rp2,
    PaperFig3,
}

#[derive(Serialize)]
struct RunManifest {
    subcommand: &'static str,
    inputs: Vec<String>,
    args: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ms: Option<u128>,
}

struct Output {
    json: Value,
    text: String,
}

/// Runs the command line with the process's stdout and stderr.
pub fn main_with(args: impl IntoIterator<Item = OsString>) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Exit codes: 0 success, 1 user error, 2 internal oracle disagreement.
pub fn run(args: impl IntoIterator<Item = OsString>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let args: Vec<OsString> = args.into_iter().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    configure_threads();
    let start = Instant::now();
    let result = execute(&cli.command);
    match result {
        Ok(output) => {
            let written = if cli.text {
                write!(out, "{}", output.text)
            } else {
                let mut doc = output.json;
                let manifest = RunManifest {
                    subcommand: subcommand_name(&cli.command),
                    inputs: input_path(&cli.command).into_iter().map(|p| p.display().to_string()).collect(),
                    args: args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect(),
                    seed: match cli.command {
                        Command::Filtered { experiment: Some(_), seed, .. } => Some(seed),
                        _ => None,
                    },
                    version: env!("CARGO_PKG_VERSION"),
                    wall_time_ms: cli.timing.then(|| start.elapsed().as_millis()),
                };
                if let Value::Object(map) = &mut doc {
                    map.insert("manifest".into(), serde_json::to_value(manifest).expect("manifest serializes"));
                }
                writeln!(out, "{}", io::to_json(&doc))
            };
            i32::from(written.is_err())
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_internal() {
                2
            } else {
                1
            }
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("CMTK_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            // a second call in the same process keeps the first pool
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn subcommand_name(command: &Command) -> &'static str {
    match command {
        Command::Homology { .. } => "homology",
        Command::Classify { .. } => "classify",
        Command::Betti { .. } => "betti",
        Command::Poset { .. } => "poset",
        Command::Filtered { .. } => "filtered",
        Command::Generate { .. } => "generate",
    }
}

fn input_path(command: &Command) -> Option<&Path> {
    match command {
        Command::Homology { input, .. }
        | Command::Classify { input, .. }
        | Command::Betti { input, .. }
        | Command::Poset { input, .. }
        | Command::Filtered { input, .. } => Some(input),
        Command::Generate { .. } => None,
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn load_complex(path: &Path) -> Result<SimplicialComplex> {
    io::complex_from_json(&read(path)?)
}

fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("serializable")
}

fn execute(command: &Command) -> Result<Output> {
    match command {
        Command::Homology { input, coeff } => {
            let complex = load_complex(input)?;
            let coeff: Coefficients = coeff.parse()?;
            let profile = reduced_homology(&complex, coeff);
            Ok(Output {
                json: json!({ "coefficients": coeff, "homology": profile }),
                text: profile.to_string(),
            })
        }
        Command::Classify {
            input,
            fields,
            shelling_budget,
        } => {
            let complex = load_complex(input)?;
            let fields = fields
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(str::parse)
                .collect::<Result<Vec<Coefficients>>>()?;
            let report = classify_with(
                &complex,
                &ClassifyOptions {
                    fields,
                    shelling_budget: *shelling_budget,
                    ..ClassifyOptions::default()
                },
            )?;
            let json = to_value(&report);
            Ok(Output {
                text: text_lines(&json),
                json,
            })
        }
        Command::Betti {
            input,
            field,
            max_vertices,
        } => {
            let complex = load_complex(input)?;
            let table = hochster_betti_with_cap(&complex, field.parse()?, *max_vertices)?;
            let grid = table.macaulay_grid();
            Ok(Output {
                json: json!({ "betti": table, "grid": grid }),
                text: grid,
            })
        }
        Command::Poset {
            input,
            mobius,
            charpoly,
            order_complex,
        } => poset_command(input, mobius.as_deref(), *charpoly, *order_complex),
        Command::Filtered {
            input,
            threshold,
            mirror,
            charpoly,
            check,
            walk,
            diameter,
            k,
            experiment,
            seed,
        } => {
            let config = io::points_from_json(&read(input)?)?;
            let lattice = lattice_of_flats_from_points(&config)?;
            let mut json = serde_json::Map::new();
            let mut text = Vec::new();
            if let Some(draws) = experiment {
                let stats = diameter_experiment(&lattice, *draws, *seed, *k)?;
                text.push(format!("max diameter: {} over {draws} draws", stats.max_diameter));
                json.insert("experiment".into(), to_value(&stats));
            }
            let wants_weights = *charpoly || *check || walk.is_some() || *diameter || experiment.is_none();
            if wants_weights {
                let weights = config
                    .weights()
                    .ok_or_else(|| Error::InvalidInput("every point needs a weight".into()))?;
                let mut w = WeightedFiltration::new(
                    lattice,
                    weights,
                    parse_rational(threshold)?,
                    config.genericity.unwrap_or_default(),
                )?;
                if *mirror {
                    w = w.mirrored()?;
                }
                let retained: Vec<String> = w.retained().iter().map(|&f| w.lattice().flat_label(f)).collect();
                json.insert("threshold".into(), Value::from(format_rational(w.threshold())));
                json.insert("retained".into(), to_value(&retained));
                if *charpoly {
                    let p = w.characteristic_polynomial();
                    text.push(p.to_string());
                    json.insert("charpoly".into(), to_value(&p));
                }
                if *check {
                    let report = w.check_cohen_macaulay()?;
                    let value = to_value(&report);
                    text.push(text_lines(&value).trim_end().to_string());
                    json.insert("check".into(), value);
                }
                if let Some(pair) = walk {
                    let path = w.safe_walk(&pair[0], &pair[1])?;
                    text.push(path.join(" - "));
                    json.insert("walk".into(), json!({ "path": path, "length": path.len() - 1 }));
                }
                if *diameter {
                    let d = w.diameter(*k)?;
                    text.push(format!("diameter: {d}"));
                    json.insert("diameter".into(), json!({ "k": k, "value": d }));
                }
                if text.is_empty() {
                    text.push(retained.join(" "));
                }
            }
            Ok(Output {
                json: Value::Object(json),
                text: text.into_iter().map(|l| l + "\n").collect(),
            })
        }
        Command::Generate { what, n } => generate(*what, *n),
    }
}

fn poset_command(input: &Path, mobius: Option<&[String]>, charpoly: bool, order_complex: bool) -> Result<Output> {
    let poset = io::poset_from_json(&read(input)?)?;
    let mut json = serde_json::Map::new();
    let mut text = Vec::new();
    json.insert("elements".into(), Value::from(poset.len()));
    json.insert("graded".into(), Value::from(poset.is_graded()));
    if let Some(args) = mobius {
        let (x, y) = match args {
            [x, y] => (find_element(&poset, x)?, find_element(&poset, y)?),
            [] => (
                poset.bottom().ok_or_else(|| Error::InvalidInput("poset has no bottom element".into()))?,
                poset.top().ok_or_else(|| Error::InvalidInput("poset has no top element".into()))?,
            ),
            _ => return Err(Error::InvalidInput("--mobius takes zero or two elements".into())),
        };
        let mu = poset.mobius(x, y)?;
        text.push(format!("mu({}, {}) = {mu}", poset.label(x), poset.label(y)));
        json.insert(
            "mobius".into(),
            json!({ "x": poset.label(x), "y": poset.label(y), "value": mu }),
        );
    }
    if order_complex {
        let delta = poset.order_complex();
        text.push(format!("order complex: {} facets, dimension {}", delta.facets().len(), delta.dim()));
        json.insert("order_complex".into(), to_value(&ComplexDocument::from_complex(&delta)));
    }
    if charpoly {
        let lattice = LatticeStructure::new(poset)?;
        let p = lattice.characteristic_polynomial()?;
        text.push(p.to_string());
        json.insert("charpoly".into(), to_value(&p));
    }
    Ok(Output {
        json: Value::Object(json),
        text: text.into_iter().map(|l| l + "\n").collect(),
    })
}

/// `"3"` names the integer label 3 if there is one, else the string label.
fn find_element(poset: &FinitePoset, text: &str) -> Result<usize> {
    let parsed = Label::parse(text);
    poset
        .index_of(&parsed)
        .map_or_else(|| poset.element(&Label::Name(text.to_string())), Ok)
}

fn generate(what: Generated, n: Option<usize>) -> Result<Output> {
    let need = |default: usize| n.unwrap_or(default);
    let complex = match what {
        Generated::SimplexBoundary => SimplicialComplex::simplex_boundary(need(2).max(1)),
        Generated::Simplex => SimplicialComplex::simplex(need(3)),
        Generated::Cycle => corpus::cycle(need(4).max(3)),
        Generated::CrossPolytope => corpus::cross_polytope_boundary(need(3)),
        Generated::Rp2 => corpus::rp2_6(),
        Generated::PaperFig3 => {
            let json: Value = serde_json::from_str(PAPER_FIG3).expect("bundled file is valid JSON");
            return Ok(Output {
                text: PAPER_FIG3.to_string(),
                json,
            });
        }
    };
    let json = to_value(&ComplexDocument::from_complex(&complex));
    Ok(Output {
        text: io::to_json(&json) + "\n",
        json,
    })
}

/// `key: value` per top-level entry, nested objects flattened with dots.
fn text_lines(value: &Value) -> String {
    fn walk(prefix: &str, value: &Value, out: &mut String) {
        match value {
            Value::Object(map) => {
                for (k, v) in map {
                    let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&key, v, out);
                }
            }
            Value::String(s) => out.push_str(&format!("{prefix}: {s}\n")),
            other => out.push_str(&format!("{prefix}: {other}\n")),
        }
    }
    let mut out = String::new();
    walk("", value, &mut out);
    out
}
