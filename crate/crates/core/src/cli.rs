//! Command-line surface. [`run`] takes the argument vector and returns the exit
//! code and both output streams, so the whole CLI is testable in-process.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 domain error.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::chord::{Chord, Genus};
use crate::error::Error;
use crate::export::{export_graph_with, Format, RegionDocument};
use crate::region::{enumerate_smooth_cycles, region_of, Region, RegionKind};
use crate::spelling::{pc_name, Accidentals};
use crate::symmetry::symmetric_partition;
use crate::transform::{apply, parse_sequence, transformation_between};
use crate::verify;
use crate::voiceleading::vl_relation;

#[derive(Debug, Parser)]
#[command(name = "nearsym", version, about = "Voice leading between nearly symmetric chords")]
pub struct Cli {
    /// Chord cardinality: 3, 4 or 6.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub genus: Option<i64>,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    #[arg(long, global = true, default_value = "sharps")]
    pub accidentals: Accidentals,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Symmetric partition of the octave into n-note cells.
    Partitions {
        #[arg(long = "n", allow_negative_numbers = true)]
        n: Option<i64>,
    },
    /// Apply a comma-separated sequence of transformations to a chord.
    Apply {
        #[arg(long)]
        chord: String,
        #[arg(long, default_value = "")]
        seq: String,
        /// Print every intermediate chord with its voice-leading relation.
        #[arg(long)]
        trace: bool,
    },
    /// Voice-leading relation and connecting transformation between two chords.
    Relate { a: String, b: String },
    /// Members and labeled edges of the region containing a chord.
    Region {
        #[arg(long)]
        kind: RegionKind,
        #[arg(long)]
        containing: String,
    },
    /// Simple cycles of the bridge region containing a chord.
    Cycles {
        #[arg(long)]
        containing: String,
        #[arg(long, default_value_t = 4)]
        min_len: usize,
        /// Defaults to the region size.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Region graph as DOT or JSON.
    Export {
        #[arg(long, default_value = "bridge")]
        kind: RegionKind,
        #[arg(long)]
        containing: String,
    },
    /// Run the verification suite.
    Verify,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome { code, stdout: String::new(), stderr }
    }
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) | Error::UnsupportedGenus(_) | Error::UnknownFormat(_) | Error::NotAGenerator(_) => 2,
        _ => 3,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { Outcome::ok(text) } else { Outcome::fail(code, text) };
        }
    };
    match execute(&cli) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::fail(exit_code(&e), format!("error: {e}\n")),
    }
}

fn genus(cli: &Cli) -> Result<Genus, Error> {
    let n = cli
        .genus
        .ok_or_else(|| Error::Parse("--genus is required for this command".into()))?;
    Genus::from_cardinality(n)
}

fn parse_chord(text: &str, genus: Genus) -> Result<Chord, Error> {
    Chord::parse(text, genus)
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let style = cli.accidentals;
    let name = |c: &Chord| c.to_text(style);
    let out = match &cli.command {
        Command::Partitions { n } => {
            let n = n
                .or(cli.genus)
                .ok_or_else(|| Error::Parse("--n is required".into()))?;
            let p = symmetric_partition(n)?;
            match cli.format {
                OutputFormat::Json => {
                    let cells: Vec<Vec<u8>> = p.cells.iter().map(|c| c.to_vec()).collect();
                    pretty(&json!({ "n": p.n(), "cells": cells }))
                }
                _ => p
                    .cells
                    .iter()
                    .map(|c| {
                        let names: Vec<&str> = c.iter().map(|pc| pc_name(pc, style)).collect();
                        format!("{c} {}\n", names.join(" "))
                    })
                    .collect(),
            }
        }

        Command::Apply { chord, seq, trace } => {
            let g = genus(cli)?;
            let start = parse_chord(chord, g)?;
            let steps = parse_sequence(seq, g)?;
            let mut current = start;
            let mut trail = Vec::new();
            for t in steps {
                let next = apply(t, &current)?;
                let rel = vl_relation(&current, &next)?;
                trail.push((t.token, next, rel));
                current = next;
            }
            match cli.format {
                OutputFormat::Json => {
                    let steps: Vec<_> = trail
                        .iter()
                        .map(|(tok, c, rel)| json!({ "transform": tok, "chord": name(c), "relation": rel }))
                        .collect();
                    pretty(&json!({ "start": name(&start), "steps": steps, "result": name(&current) }))
                }
                _ if *trace => {
                    let mut s = format!("{}\n", name(&start));
                    for (tok, c, rel) in &trail {
                        let rel = rel.map_or_else(|| "disjoint".to_string(), |r| r.to_string());
                        s.push_str(&format!("{tok} {} {rel}\n", name(c)));
                    }
                    s
                }
                _ => format!("{}\n", name(&current)),
            }
        }

        Command::Relate { a, b } => {
            let g = genus(cli)?;
            let (x, y) = (parse_chord(a, g)?, parse_chord(b, g)?);
            let rel = vl_relation(&x, &y)?;
            let disjoint = x.pitch_classes().is_disjoint(y.pitch_classes());
            let token = if x == y {
                Some("identity")
            } else {
                transformation_between(&x, &y)?.map(|t| t.token)
            };
            match cli.format {
                OutputFormat::Json => pretty(&json!({
                    "a": name(&x),
                    "b": name(&y),
                    "relation": rel,
                    "disjoint": disjoint,
                    "transform": token,
                })),
                _ => {
                    let head = match (disjoint, rel) {
                        (true, _) => "disjoint".to_string(),
                        (false, Some(r)) => r.to_string(),
                        (false, None) => "none".to_string(),
                    };
                    format!("{head} {}\n", token.unwrap_or("-"))
                }
            }
        }

        Command::Region { kind, containing } => {
            let g = genus(cli)?;
            let region = region_of(&parse_chord(containing, g)?, *kind);
            match cli.format {
                OutputFormat::Json => export_graph_with(&region, Format::Json, style),
                OutputFormat::Dot => export_graph_with(&region, Format::Dot, style),
                OutputFormat::Text => region_text(&region, style),
            }
        }

        Command::Cycles { containing, min_len, max_len } => {
            let g = genus(cli)?;
            let region = region_of(&parse_chord(containing, g)?, RegionKind::Bridge);
            let max_len = max_len.unwrap_or(region.members.len());
            let cycles = enumerate_smooth_cycles(&region, *min_len, max_len)?;
            match cli.format {
                OutputFormat::Json => {
                    let docs: Vec<_> = cycles
                        .iter()
                        .map(|c| {
                            json!({
                                "length": c.len(),
                                "chords": c.chords.iter().map(name).collect::<Vec<_>>(),
                                "pitch_union": c.pitch_union.to_vec(),
                                "set_class": c.set_class().display_name(),
                                "hamiltonian": c.is_hamiltonian(&region),
                            })
                        })
                        .collect();
                    pretty(&json!({ "region": region.title(), "count": cycles.len(), "cycles": docs }))
                }
                _ => {
                    let mut s = String::new();
                    for c in &cycles {
                        let chords: Vec<String> = c.chords.iter().map(name).collect();
                        s.push_str(&format!("{} [{}]\n", chords.join(" "), c.set_class()));
                    }
                    s.push_str(&format!("{} cycles\n", cycles.len()));
                    s
                }
            }
        }

        Command::Export { kind, containing } => {
            let g = genus(cli)?;
            let region = region_of(&parse_chord(containing, g)?, *kind);
            let format = match cli.format {
                OutputFormat::Json => Format::Json,
                _ => Format::Dot,
            };
            export_graph_with(&region, format, style)
        }

        Command::Verify => {
            let filter = cli.genus.map(Genus::from_cardinality).transpose()?;
            let report = verify::run(filter);
            let text = match cli.format {
                OutputFormat::Json => report.render_json() + "\n",
                _ => report.render_text(),
            };
            let code = if report.all_passed() { 0 } else { 1 };
            return Ok(Outcome { code, stdout: text, stderr: String::new() });
        }
    };
    Ok(Outcome::ok(out))
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("json values always serialize") + "\n"
}

fn region_text(region: &Region, style: Accidentals) -> String {
    let doc = RegionDocument::from_region(region, style);
    let mut s = format!("{} [{}]\n", region.title(), doc.set_class);
    s.push_str(&format!("members: {}\n", doc.members.join(" ")));
    for e in &doc.edges {
        s.push_str(&format!("{} -- {} {} {}\n", e.a, e.b, e.transform, e.relation));
    }
    s
}
