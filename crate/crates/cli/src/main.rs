use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use idealgraph::theorems::{product_specs, registry, sweep, verify_claims, RingFamily, Status};
use idealgraph::{build, Caps, Error, PredicateMode};

mod args;
mod report;

use args::{Cli, Command, GraphFormat, ListFormat};
use report::{Family, IdealListing, IdealRow, Report, VerifyReport};

enum Failure {
    Usage(String),
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn claim_ids(list: &str) -> Vec<String> {
    if list.trim() == "all" {
        return registry().iter().map(|c| c.id.to_string()).collect();
    }
    list.split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Ideals { ring, format, caps } => {
            let caps = Caps::from(caps);
            let ideals = ring.enumerate_ideals(caps.ideals)?;
            let rows: Vec<IdealRow> = ideals
                .iter()
                .map(|i| IdealRow {
                    ideal: i.to_string(),
                    vertex: ring.is_vertex(i),
                    flags: ring.classify(i),
                })
                .collect();
            let listing = IdealListing {
                ring: ring.to_string(),
                ideal_count: rows.len(),
                vertex_count: rows.iter().filter(|r| r.vertex).count(),
                ideals: rows,
            };
            match format {
                ListFormat::Text => emit(&report::ideal_table(&listing), None)?,
                ListFormat::Json => emit(&json(&listing)?, None)?,
            }
        }
        Command::Graph {
            target,
            format,
            oracle,
            output,
            caps,
        } => {
            let caps = Caps::from(caps);
            let mode = if oracle {
                PredicateMode::Oracle
            } else {
                PredicateMode::Fast
            };
            let g = build(&target.ring, target.kind, mode, &caps)?;
            let text = match format {
                GraphFormat::Dot => report::dot(&g, &target.ring),
                GraphFormat::Json => {
                    let inv = g.invariants(&caps)?;
                    json(&Report::new(&g, inv, &target.ring, Vec::new()))?
                }
            };
            emit(&text, output.as_deref())?;
        }
        Command::Analyze {
            target,
            claims,
            require_domination,
            output,
            caps,
        } => {
            let caps = Caps::from(caps);
            let g = build(&target.ring, target.kind, PredicateMode::Fast, &caps)?;
            if require_domination {
                g.graph().domination_number(caps.domination)?;
            }
            let inv = g.invariants(&caps)?;
            let results = match &claims {
                Some(list) => {
                    let ids = claim_ids(list);
                    let refs: Vec<&str> = ids.iter().map(String::as_str).collect();
                    verify_claims(&refs, &target.ring, &caps)?
                }
                None => Vec::new(),
            };
            let failed = results.iter().any(|r| r.status == Status::Fail);
            emit(
                &json(&Report::new(&g, inv, &target.ring, results))?,
                output.as_deref(),
            )?;
            if failed {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Verify {
            claims,
            nmax,
            products_up_to,
            rings,
            format,
            output,
            caps,
        } => {
            let caps = Caps::from(caps);
            if nmax < 2 {
                return Err(Failure::Usage(format!(
                    "--nmax must be at least 2, got {nmax}"
                )));
            }
            let ids = claim_ids(&claims);
            if ids.is_empty() {
                return Err(Failure::Usage("no claims given".into()));
            }
            let refs: Vec<&str> = ids.iter().map(String::as_str).collect();
            let family = RingFamily::cyclic(nmax)
                .with_products(products_up_to.map(product_specs).unwrap_or_default())
                .with_products(rings.clone());
            let ring_count = family.rings()?.len();
            let result = sweep(&refs, &family, &caps)?;
            let failed = result.summary.fail > 0;
            let report = VerifyReport::new(
                ids,
                Family {
                    nmax,
                    products_up_to,
                    extra_rings: rings.iter().map(ToString::to_string).collect(),
                    ring_count,
                },
                result,
            );
            let s = report.summary;
            eprintln!(
                "{} rings: {} pass, {} fail, {} skipped, {} capped",
                ring_count, s.pass, s.fail, s.skipped, s.capped
            );
            let text = match format {
                ListFormat::Json => json(&report)?,
                ListFormat::Text => report::verify_table(&report),
            };
            emit(&text, output.as_deref())?;
            if failed {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Claims => {
            let mut out = String::new();
            for c in registry() {
                out.push_str(&format!(
                    "{:<14} {}\n{:<14} scope: {}\n",
                    c.id, c.statement, "", c.scope
                ));
            }
            emit(&out, None)?;
        }
        Command::Schema => emit(report::SCHEMA, None)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_cap() { 3 } else { 1 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
