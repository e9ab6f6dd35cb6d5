use std::fs;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use cotan_core::complex::SimplicialComplex;
use cotan_core::cotangent::{graded_report, join_graded_check, t2_witness, ClassDims};
use cotan_core::graphs1d::classify_1d;
use cotan_core::homology::FieldChoice;
use cotan_core::matroids::{
    conjecture_check, enumerate_matroids, parse_database, uniform_table, verify_corank_at_most2, Matroid, Verdict,
    VerdictKind, MAX_ENUMERATED_ELEMENTS,
};

/// Multigraded T1/T2 of Stanley-Reisner rings.
#[derive(Parser, Debug)]
#[command(name = "cotan", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Coefficient field: q, gf2, gf3, gf<p>.
    #[arg(long, global = true, default_value = "q")]
    field: FieldChoice,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, env = "COTAN_JOBS")]
    jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether T2 vanishes; exit 1 with a witness if it does not.
    T2 {
        /// Complex as JSON (`-` for stdin).
        input: PathBuf,
        /// Also print dim T1 and the link of the witness face.
        #[arg(long)]
        witness: bool,
    },
    /// List every class (A, b) with nonzero T1 or T2.
    T2Graded { input: PathBuf },
    /// Classify one-dimensional complexes with T2 = 0.
    #[command(name = "classify-1d")]
    Classify1d {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Golden file to compare against (or to write with --write-golden).
        #[arg(long)]
        golden: Option<PathBuf>,
        #[arg(long, requires = "golden")]
        write_golden: bool,
    },
    /// Compare T2 of uniform matroids with the closed form.
    UniformTable {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Check T2 = 0 for every matroid of corank at most two.
    Corank2Verify {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
    /// Compare T2 = 0 with "every component has corank at most two".
    ConjectureCheck {
        /// Matroid database in revlex format.
        #[arg(long, conflicts_with = "enumerate", required_unless_present = "enumerate")]
        db: Option<PathBuf>,
        /// Check every matroid up to isomorphism instead.
        #[arg(long)]
        enumerate: bool,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Check the product formula for T2 of a join.
    JoinCheck { left: PathBuf, right: PathBuf },
}

/// Input or usage problem: exit code 2.
#[derive(Debug)]
struct UsageError(anyhow::Error);

fn usage<E: Into<anyhow::Error>>(e: E) -> UsageError {
    UsageError(e.into())
}

fn read_input(path: &Path) -> Result<String, UsageError> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map_err(usage)?;
    } else {
        text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display())).map_err(usage)?;
    }
    Ok(text)
}

fn read_complex(path: &Path) -> Result<SimplicialComplex, UsageError> {
    let text = read_input(path)?;
    SimplicialComplex::from_json_str(&text).with_context(|| format!("parsing {}", path.display())).map_err(usage)
}

fn class_json(c: &ClassDims) -> serde_json::Value {
    json!({ "A": c.a, "b": c.b, "dimT1": c.dims.t1, "dimT2": c.dims.t2 })
}

fn emit(out: &mut impl Write, value: serde_json::Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
    Ok(())
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode, UsageError> {
    let g = &cli.global;
    let field = g.field;
    let fail = |e: anyhow::Error| UsageError(e);
    match cli.command {
        Command::T2 { input, witness } => {
            let delta = read_complex(&input)?;
            let found = t2_witness(&delta, field).map_err(usage)?;
            if g.json {
                let link = found.and_then(|w| delta.link(w.a).ok()).map(|l| l.to_json());
                let mut value = json!({ "field": field.to_string(), "vanishes": found.is_none(), "witness": found.as_ref().map(class_json) });
                if witness {
                    value["link"] = json!(link);
                }
                emit(out, value).map_err(fail)?;
            } else {
                writeln!(out, "# field {field}").map_err(usage)?;
                match found {
                    None => writeln!(out, "VANISHES").map_err(usage)?,
                    Some(w) => {
                        writeln!(out, "A={} b={} dimT2={}", w.a, w.b, w.dims.t2).map_err(usage)?;
                        if witness {
                            let link = delta.link(w.a).map_err(usage)?;
                            writeln!(
                                out,
                                "dimT1={} link={}",
                                w.dims.t1,
                                serde_json::to_string(&link.to_json()).map_err(usage)?
                            )
                            .map_err(usage)?;
                        }
                    }
                }
            }
            Ok(status(found.is_none()))
        }
        Command::T2Graded { input } => {
            let delta = read_complex(&input)?;
            let report = graded_report(&delta, field).map_err(usage)?;
            let rows: Vec<&ClassDims> = report.nonzero().collect();
            if g.json {
                emit(out, json!({ "field": field.to_string(), "n": delta.n(), "rows": rows.iter().map(|c| class_json(c)).collect::<Vec<_>>() }))
                    .map_err(fail)?;
            } else {
                writeln!(out, "# field {field}").map_err(usage)?;
                writeln!(out, "# A b dimT1 dimT2").map_err(usage)?;
                for c in &rows {
                    writeln!(out, "{} {} {} {}", c.a, c.b, c.dims.t1, c.dims.t2).map_err(usage)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify1d { max_n, golden, write_golden } => {
            let result = classify_1d(max_n).map_err(usage)?;
            let mut ok = true;
            let mut diff_lines = Vec::new();
            if let Some(path) = &golden {
                if write_golden {
                    fs::write(path, result.golden_text())
                        .with_context(|| format!("writing {}", path.display()))
                        .map_err(usage)?;
                } else {
                    let text = read_input(path)?;
                    let diff = result.compare_golden(&text);
                    ok = diff.is_empty();
                    diff_lines.extend(diff.only_in_golden.iter().map(|l| format!("- {l}")));
                    diff_lines.extend(diff.only_in_result.iter().map(|l| format!("+ {l}")));
                }
            }
            if g.json {
                emit(out, json!({ "max_n": max_n, "count": result.count(), "entries": result.entries, "golden_diff": diff_lines }))
                    .map_err(fail)?;
            } else {
                for e in &result.entries {
                    writeln!(out, "{}", e.golden_line()).map_err(usage)?;
                }
                for l in &diff_lines {
                    writeln!(out, "{l}").map_err(usage)?;
                }
                writeln!(out, "{} classes", result.count()).map_err(usage)?;
            }
            Ok(status(ok))
        }
        Command::UniformTable { max_n } => {
            let rows = uniform_table(max_n, field).map_err(usage)?;
            let failures = rows.iter().filter(|r| !r.passes()).count();
            if g.json {
                emit(out, json!({ "field": field.to_string(), "rows": rows, "failures": failures })).map_err(fail)?;
            } else {
                writeln!(out, "# field {field}").map_err(usage)?;
                writeln!(out, "# n r #b computed formula").map_err(usage)?;
                for r in &rows {
                    let mark = if r.passes() { "PASS" } else { "FAIL" };
                    writeln!(out, "{} {} {} {} {} {mark}", r.n, r.r, r.nb, r.computed, r.formula).map_err(usage)?;
                }
                if failures == 0 {
                    writeln!(out, "all PASS ({} rows)", rows.len()).map_err(usage)?;
                } else {
                    writeln!(out, "FAIL ({failures} of {} rows)", rows.len()).map_err(usage)?;
                }
            }
            Ok(status(failures == 0))
        }
        Command::Corank2Verify { max_n } => {
            let reports =
                (1..=max_n).map(|n| verify_corank_at_most2(n, field)).collect::<Result<Vec<_>, _>>().map_err(usage)?;
            let ok = reports.iter().all(|r| r.failures.is_empty());
            if g.json {
                emit(out, json!({ "field": field.to_string(), "reports": reports })).map_err(fail)?;
            } else {
                writeln!(out, "# field {field}").map_err(usage)?;
                for r in &reports {
                    let mark = if r.failures.is_empty() { "PASS" } else { "FAIL" };
                    writeln!(out, "n={} matroids={} {mark}", r.n, r.checked).map_err(usage)?;
                    for f in &r.failures {
                        writeln!(out, "  T2 != 0: {f}").map_err(usage)?;
                    }
                }
                writeln!(out, "{}", if ok { "all PASS" } else { "FAIL" }).map_err(usage)?;
            }
            Ok(status(ok))
        }
        Command::ConjectureCheck { db, enumerate, max_n } => {
            let items: Vec<(String, Matroid)> = if enumerate {
                if max_n > MAX_ENUMERATED_ELEMENTS {
                    return Err(usage(anyhow::anyhow!("--enumerate supports --max-n up to {MAX_ENUMERATED_ELEMENTS}")));
                }
                let mut all = Vec::new();
                for n in 0..=max_n {
                    for m in enumerate_matroids(n).map_err(usage)? {
                        all.push((format!("n={} r={}", m.n(), m.rank()), m));
                    }
                }
                all
            } else {
                let path = db.expect("clap enforces --db or --enumerate");
                let reader: Box<dyn BufRead> = if path == Path::new("-") {
                    Box::new(BufReader::new(io::stdin()))
                } else {
                    let file =
                        fs::File::open(&path).with_context(|| format!("opening {}", path.display())).map_err(usage)?;
                    Box::new(BufReader::new(file))
                };
                let mut all = Vec::new();
                for entry in parse_database(reader) {
                    let e = entry.map_err(|e| usage(anyhow::anyhow!("{}: {e}", path.display())))?;
                    all.push((format!("line {} n={} r={}", e.line, e.n, e.r), e.matroid));
                }
                all
            };
            let verdicts: Vec<Verdict> =
                items.par_iter().map(|(_, m)| conjecture_check(m, field)).collect::<Result<_, _>>().map_err(usage)?;
            let disagreements = verdicts.iter().filter(|v| v.kind != VerdictKind::Agree).count();
            if g.json {
                let rows: Vec<_> = items
                    .iter()
                    .zip(&verdicts)
                    .map(|((label, m), v)| json!({ "source": label, "revlex": m.to_revlex(), "verdict": v }))
                    .collect();
                emit(out, json!({ "field": field.to_string(), "checked": rows.len(), "disagreements": disagreements, "rows": rows }))
                    .map_err(fail)?;
            } else {
                writeln!(out, "# field {field}").map_err(usage)?;
                writeln!(out, "# source T2=0 components-corank<=2 verdict").map_err(usage)?;
                for ((label, m), v) in items.iter().zip(&verdicts) {
                    let yn = |b: bool| if b { "yes" } else { "no" };
                    writeln!(out, "{label} {} {} {:?}", yn(v.t2_vanishes), yn(v.components_corank_at_most2), v.kind)
                        .map_err(usage)?;
                    if v.kind != VerdictKind::Agree {
                        writeln!(
                            out,
                            "!!! {:?}: n={} r={} revlex={} component coranks {:?} witness {:?}",
                            v.kind,
                            m.n(),
                            m.rank(),
                            m.to_revlex(),
                            v.component_coranks,
                            v.witness
                        )
                        .map_err(usage)?;
                    }
                }
                writeln!(out, "{} matroids, {disagreements} disagreements", items.len()).map_err(usage)?;
            }
            Ok(status(disagreements == 0))
        }
        Command::JoinCheck { left, right } => {
            let a = read_complex(&left)?;
            let b = read_complex(&right)?;
            let check = join_graded_check(&a, &b, field).map_err(usage)?;
            if g.json {
                emit(out, json!({ "field": field.to_string(), "passes": check.passes(), "check": check }))
                    .map_err(fail)?;
            } else {
                writeln!(out, "# field {field}").map_err(usage)?;
                writeln!(out, "classes checked: {}", check.classes_checked).map_err(usage)?;
                for m in &check.mismatches {
                    writeln!(out, "mismatch A={} b={} join={} expected={}", m.a, m.b, m.join_t2, m.expected_t2)
                        .map_err(usage)?;
                }
                writeln!(
                    out,
                    "T2=0: left {} right {} join {}",
                    check.left_vanishes, check.right_vanishes, check.join_vanishes
                )
                .map_err(usage)?;
                writeln!(out, "{}", if check.passes() { "PASS" } else { "FAIL" }).map_err(usage)?;
            }
            Ok(status(check.passes()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(jobs) = cli.global.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(UsageError(e)) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if out.flush().is_err() {
        return ExitCode::from(2);
    }
    code
}
