//! Command-line front end. `run` writes the command's output and returns the
//! process exit code; failures map to code 2 (bad input) or 3 (size limit).

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::error::Error;
use crate::frame::{canonical_form, is_isomorphic_with, CanonResult, Engine};
use crate::graphio::{emit_graph6, parse_graph6, parse_weighted_with};
use crate::pairgroup::{edge_count, EdgeVector, Limits, VertexPermutation};
use crate::polyinv::{classify_simple_graphs_n4, reynolds_with, Monomial, Polynomial};
use crate::scalar::{format_scalar, parse_scalar, LiteralSyntax, Scalar};
use crate::sortframe::{elementary_symmetric, sort_frame, PointVector};

#[derive(Debug, Parser)]
#[command(name = "pairframe", version, about = "Canonical forms and invariants of edge-weighted graphs")]
pub struct Cli {
    /// Input file format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Weighted)]
    pub format: Format,

    /// Canonization engine.
    #[arg(long, global = true, value_enum, default_value_t = EngineArg::Pruned)]
    pub engine: EngineArg,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest n for which the full group may be enumerated.
    #[arg(long, global = true, default_value_t = crate::pairgroup::DEFAULT_MAX_N)]
    pub max_n: usize,

    /// Accept decimal weight literals such as 0.25, converted exactly to 1/4.
    #[arg(long, global = true)]
    pub allow_decimal: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Weighted,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Brute,
    Pruned,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Brute => Engine::Brute,
            EngineArg::Pruned => Engine::Pruned,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical vector, frame and automorphism group of a graph.
    Canon { input: String },
    /// Decide whether two graphs are isomorphic.
    Iso { a: String, b: String },
    /// List the automorphisms of a graph.
    Aut { input: String },
    /// Orbit size n!/|Aut|.
    Orbit { input: String },
    /// The invariantized coordinates I_1..I_m.
    Invariants { input: String },
    /// Orbit average of a monomial such as `x1^2*x2`, over the pair group on n vertices.
    Reynolds { monomial: String, n: usize },
    /// Classify the 64 simple graphs on four vertices by their polynomial invariants.
    #[command(name = "classify-n4")]
    ClassifyN4,
    /// Sorting frame, order statistics and elementary symmetric values of a point, e.g. `3,1,2`.
    #[command(name = "sortframe-demo")]
    SortframeDemo { vector: String },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{context}: {source}")]
    Input { context: String, source: Error },
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        let core = match self {
            CliError::Input { source, .. } => source,
            CliError::Core(e) => e,
            CliError::Io(_) => return 2,
        };
        match core {
            Error::SizeLimit { .. } => 3,
            _ => 2,
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    let limits = Limits::new(cli.max_n);
    let engine = Engine::from(cli.engine);
    let canon = |x: &EdgeVector| canonical_form(x, engine, limits);
    match &cli.command {
        Command::Canon { input } => {
            let x = load(cli, input)?;
            let r = canon(&x)?;
            let gens = r.generators();
            if cli.json {
                emit_json(
                    out,
                    json!({
                        "n": x.n(),
                        "canonical": scalars(r.canonical.weights()),
                        "frame": r.frame.one_line(),
                        "aut_order": r.aut_order(),
                        "generators": gens.iter().map(VertexPermutation::one_line).collect::<Vec<_>>(),
                    }),
                )?;
            } else {
                writeln!(out, "n {}", x.n())?;
                writeln!(out, "canonical {}", r.canonical.weights().iter().map(format_scalar).join(" "))?;
                writeln!(out, "frame {}", r.frame)?;
                writeln!(out, "aut_order {}", r.aut_order())?;
                for g in &gens {
                    writeln!(out, "generator {g}")?;
                }
            }
            Ok(0)
        }
        Command::Iso { a, b } => {
            let x = load(cli, a)?;
            let y = load(cli, b)?;
            let witness = is_isomorphic_with(&x, &y, engine, limits)?;
            if cli.json {
                emit_json(
                    out,
                    json!({
                        "isomorphic": witness.is_some(),
                        "witness": witness.as_ref().map(VertexPermutation::one_line),
                    }),
                )?;
            } else {
                match &witness {
                    Some(w) => writeln!(out, "isomorphic\nwitness {w}")?,
                    None => writeln!(out, "not isomorphic")?,
                }
            }
            Ok(if witness.is_some() { 0 } else { 1 })
        }
        Command::Aut { input } => {
            let r = canon(&load(cli, input)?)?;
            if cli.json {
                emit_json(
                    out,
                    json!({
                        "aut_order": r.aut_order(),
                        "automorphisms": r.automorphisms.iter().map(VertexPermutation::one_line).collect::<Vec<_>>(),
                    }),
                )?;
            } else {
                writeln!(out, "aut_order {}", r.aut_order())?;
                for a in &r.automorphisms {
                    writeln!(out, "automorphism {a}")?;
                }
            }
            Ok(0)
        }
        Command::Orbit { input } => {
            let r = canon(&load(cli, input)?)?;
            if cli.json {
                emit_json(out, json!({ "orbit_size": orbit_size_json(&r) }))?;
            } else {
                writeln!(out, "orbit_size {}", r.orbit_size())?;
            }
            Ok(0)
        }
        Command::Invariants { input } => {
            let r = canon(&load(cli, input)?)?;
            let values = r.invariants().values;
            if cli.json {
                emit_json(out, json!({ "invariants": scalars(&values) }))?;
            } else {
                for (s, v) in values.iter().enumerate() {
                    writeln!(out, "I{} {}", s + 1, format_scalar(v))?;
                }
            }
            Ok(0)
        }
        Command::Reynolds { monomial, n } => {
            limits.check(*n)?;
            let mono = Monomial::parse(monomial, edge_count(*n))
                .map_err(|source| CliError::Input { context: format!("monomial {monomial:?}"), source })?;
            let one = Scalar::from_integer(1.into());
            let r = reynolds_with(&Polynomial::term(mono, one), *n, limits)?;
            if cli.json {
                let terms: Vec<Value> =
                    r.terms().map(|(m, c)| json!({ "coeff": format_scalar(c), "exponents": m.exponents() })).collect();
                emit_json(out, json!({ "n": n, "terms": terms }))?;
            } else {
                write!(out, "{}", r.to_text())?;
            }
            Ok(0)
        }
        Command::ClassifyN4 => {
            let classes = classify_simple_graphs_n4();
            let mut rows = Vec::new();
            for (id, class) in classes.iter().enumerate() {
                let r = canon(&class.members[0])?;
                rows.push((id + 1, class, emit_graph6(&r.canonical)?, r.orbit_size()));
            }
            if cli.json {
                let rows: Vec<Value> = rows
                    .iter()
                    .map(|(id, class, g6, size)| {
                        json!({
                            "class": id,
                            "invariants": scalars(&class.key),
                            "graph6": g6,
                            "orbit_size": size.to_u64(),
                        })
                    })
                    .collect();
                emit_json(out, Value::Array(rows))?;
            } else {
                for (id, class, g6, size) in &rows {
                    writeln!(out, "{id} {} {g6} {size}", class.key.iter().map(format_scalar).join(","))?;
                }
            }
            Ok(0)
        }
        Command::SortframeDemo { vector } => {
            let syntax = literal_syntax(cli);
            let values = vector
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| parse_scalar(t, syntax))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|source| CliError::Input { context: format!("vector {vector:?}"), source })?;
            let v = PointVector::new(values)
                .map_err(|source| CliError::Input { context: format!("vector {vector:?}"), source })?;
            let (sorted, frame) = sort_frame(&v);
            let e: Vec<Scalar> = (1..=v.len()).map(|k| elementary_symmetric(k, &v)).collect::<Result<_, _>>()?;
            if cli.json {
                emit_json(
                    out,
                    json!({
                        "sorted": scalars(sorted.values()),
                        "frame": frame.one_line(),
                        "elementary_symmetric": scalars(&e),
                    }),
                )?;
            } else {
                writeln!(out, "sorted {}", sorted.values().iter().map(format_scalar).join(" "))?;
                writeln!(out, "frame {frame}")?;
                for (k, ek) in e.iter().enumerate() {
                    writeln!(out, "e{} {}", k + 1, format_scalar(ek))?;
                }
            }
            Ok(0)
        }
    }
}

fn literal_syntax(cli: &Cli) -> LiteralSyntax {
    LiteralSyntax { allow_decimal: cli.allow_decimal }
}

fn load(cli: &Cli, path: &str) -> Result<EdgeVector, CliError> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)?
    };
    let parsed = match cli.format {
        Format::Weighted => parse_weighted_with(&text, literal_syntax(cli)),
        Format::Graph6 => {
            let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
            parse_graph6(line)
        }
    };
    parsed.map_err(|source| CliError::Input { context: path.to_string(), source })
}

fn scalars(values: &[Scalar]) -> Vec<String> {
    values.iter().map(format_scalar).collect()
}

fn orbit_size_json(r: &CanonResult) -> Value {
    let size = r.orbit_size();
    match size.to_u64() {
        Some(v) => json!(v),
        None => json!(size.to_string()),
    }
}

fn emit_json(out: &mut dyn Write, value: Value) -> std::io::Result<()> {
    serde_json::to_writer(&mut *out, &value)?;
    writeln!(out)
}
