//! Command-line frontend.
//!
//! Exit status: 0 coregular (or success), 2 not coregular, 3 unreadable or
//! invalid input, 4 invalid decomposition.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::cycles::{default_max_len, quasi_primitive_cycles};
use crate::error::QuiverError;
use crate::format::{parse_setting, to_dot};
use crate::local::local_quiver;
use crate::oracle::{self, estimate_iss_dimension_with};
use crate::quiver::QuiverSetting;
use crate::reduction::{classify, is_coregular, reduce, Strategy, Verdict};
use crate::simples::{enumerate_decompositions, enumerate_simple_dimvectors, has_simple, Decomposition};

pub const SCHEMA: &str = "quivarity/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_COREGULAR: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_DECOMPOSITION: i32 = 4;

#[derive(Parser)]
#[command(name = "quivarity", version, about = "Coregularity of quiver settings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Quiver file (TOML)
    path: PathBuf,
    /// Emit a JSON report
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide coregularity
    Classify {
        #[command(flatten)]
        input: Input,
        /// Print nothing; report through the exit status only
        #[arg(long)]
        quiet: bool,
    },
    /// Run the reduction steps and print the reduced setting
    Reduce {
        #[command(flatten)]
        input: Input,
        /// List every step
        #[arg(long)]
        trace: bool,
        /// Pick steps at random with this seed
        #[arg(long)]
        seed: Option<u64>,
        /// Write the reduced setting as DOT, to PATH or standard output
        /// (a bare --dot goes after the input path)
        #[arg(long, value_name = "PATH", num_args = 0..=1)]
        dot: Option<Option<PathBuf>>,
    },
    /// Existence of simples and the simple dimension vectors below α
    Simples {
        #[command(flatten)]
        input: Input,
    },
    /// Local quiver settings of semisimple types
    Local {
        #[command(flatten)]
        input: Input,
        /// Semisimple type such as "2x(1,0)+1x(0,1)"
        #[arg(long, conflicts_with = "enumerate")]
        decomposition: Option<String>,
        /// Enumerate semisimple types
        #[arg(long)]
        enumerate: bool,
        /// Maximum number of types to enumerate
        #[arg(long, default_value_t = 100)]
        limit: usize,
    },
    /// Count (and list) the quasi-primitive cycles
    Cycles {
        #[command(flatten)]
        input: Input,
        /// Length bound, default |α|²
        #[arg(long)]
        max_len: Option<usize>,
        /// List the cycles
        #[arg(long)]
        list: bool,
    },
    /// Dimension of the quotient
    Dim {
        #[command(flatten)]
        input: Input,
    },
    /// Estimate the quotient dimension numerically
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = oracle::DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = oracle::DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Length bound for generator cycles, default |α|²
        #[arg(long)]
        max_len: Option<usize>,
    },
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

type Outcome = std::result::Result<i32, (i32, String)>;

fn load(path: &Path) -> std::result::Result<QuiverSetting, (i32, String)> {
    let text = std::fs::read_to_string(path).map_err(|e| (EXIT_INPUT, format!("{}: {e}", path.display())))?;
    parse_setting(&text).map_err(|e| (EXIT_INPUT, format!("{}:{e}", path.display())))
}

fn emit_json(io: &mut Io, command: &str, mut body: Value) -> std::io::Result<()> {
    let map = body.as_object_mut().expect("reports are objects");
    map.insert("schema".into(), json!(SCHEMA));
    map.insert("command".into(), json!(command));
    writeln!(io.out, "{}", serde_json::to_string_pretty(&body).expect("values serialize"))
}

fn verdict_json(v: &Verdict, s: &QuiverSetting) -> Value {
    json!({
        "setting": s.to_string(),
        "coregular": v.coregular,
        "polynomial_part": v.polynomial_part(),
        "ring_dimension": v.ring_dimension(),
        "iss_dimension": has_simple(s).iss_dimension,
        "components": v.components.iter().map(|c| json!({
            "setting": c.setting.to_string(),
            "steps": c.trace.steps,
            "polynomial_part": c.trace.polynomial_part,
            "reduced": c.trace.final_setting.to_string(),
            "terminal": c.terminal.map(|t| t.label()),
        })).collect::<Vec<_>>(),
    })
}

fn cmd_classify(io: &mut Io, input: &Input, quiet: bool) -> Outcome {
    let s = load(&input.path)?;
    let v = classify(&s);
    let code = if v.coregular { EXIT_OK } else { EXIT_NOT_COREGULAR };
    if quiet {
        return Ok(code);
    }
    if input.json {
        emit_json(io, "classify", verdict_json(&v, &s)).map_err(io_error)?;
        return Ok(code);
    }
    let out = &mut *io.out;
    let w = |r: std::io::Result<()>| r.map_err(io_error);
    w(writeln!(out, "{}", if v.coregular { "coregular" } else { "not coregular" }))?;
    for (i, c) in v.components.iter().enumerate() {
        let end = c.terminal.map_or_else(|| "no terminal form".to_owned(), |t| t.label().to_owned());
        w(writeln!(
            out,
            "component {}: {} -> {} ({}, {} split off)",
            i + 1,
            c.setting,
            c.trace.final_setting,
            end,
            c.trace.polynomial_part
        ))?;
    }
    w(writeln!(out, "polynomial part: {}", v.polynomial_part()))?;
    if let Some(d) = v.ring_dimension() {
        w(writeln!(out, "ring dimension: {d}"))?;
    }
    if let Some(d) = has_simple(&s).iss_dimension {
        w(writeln!(out, "1 - chi(alpha, alpha): {d}"))?;
    }
    Ok(code)
}

fn cmd_reduce(io: &mut Io, input: &Input, trace: bool, seed: Option<u64>, dot: &Option<Option<PathBuf>>) -> Outcome {
    let s = load(&input.path)?;
    let strategy = seed.map_or(Strategy::Canonical, Strategy::Randomized);
    let t = reduce(&s, strategy);
    if input.json {
        let body = json!({
            "setting": s.to_string(),
            "steps": t.steps,
            "polynomial_part": t.polynomial_part,
            "reduced": t.final_setting.to_string(),
        });
        emit_json(io, "reduce", body).map_err(io_error)?;
    } else {
        if trace {
            for (i, step) in t.steps.iter().enumerate() {
                writeln!(io.out, "{}. {step}", i + 1).map_err(io_error)?;
            }
        }
        writeln!(io.out, "reduced: {}", t.final_setting).map_err(io_error)?;
        writeln!(io.out, "split off: {}", t.polynomial_part).map_err(io_error)?;
    }
    match dot {
        None => {}
        Some(None) => write!(io.out, "{}", to_dot(&t.final_setting)).map_err(io_error)?,
        Some(Some(path)) => std::fs::write(path, to_dot(&t.final_setting))
            .map_err(|e| (EXIT_INPUT, format!("{}: {e}", path.display())))?,
    }
    Ok(EXIT_OK)
}

fn cmd_simples(io: &mut Io, input: &Input) -> Outcome {
    let s = load(&input.path)?;
    let info = has_simple(&s);
    let cap = s.alpha().as_slice().iter().copied().max().unwrap_or(0);
    let below: Vec<_> = if cap == 0 {
        Vec::new()
    } else {
        enumerate_simple_dimvectors(s.quiver(), cap)
            .map_err(|e| (EXIT_INPUT, e.to_string()))?
            .into_iter()
            .filter(|b| b.fits_in(s.alpha()))
            .collect()
    };
    if input.json {
        let body = json!({
            "setting": s.to_string(),
            "alpha": s.alpha(),
            "simples": info,
            "simple_dimension_vectors": below,
        });
        emit_json(io, "simples", body).map_err(io_error)?;
        return Ok(EXIT_OK);
    }
    let w = &mut *io.out;
    let r = (|| {
        writeln!(w, "simples of dimension {}: {}", s.alpha(), if info.exists { "yes" } else { "no" })?;
        writeln!(w, "classes: {:?}", info.class_count)?;
        if let Some(d) = info.iss_dimension {
            writeln!(w, "1 - chi(alpha, alpha): {d}")?;
        }
        writeln!(w, "simple dimension vectors below alpha: {}", below.len())?;
        for b in &below {
            writeln!(w, "  {b}")?;
        }
        Ok(())
    })();
    r.map_err(io_error)?;
    Ok(EXIT_OK)
}

fn cmd_local(io: &mut Io, input: &Input, decomposition: Option<&str>, enumerate: bool, limit: usize) -> Outcome {
    let s = load(&input.path)?;
    let (items, truncated) = match (decomposition, enumerate) {
        (Some(text), _) => {
            let invalid = |e: QuiverError| (EXIT_DECOMPOSITION, e.to_string());
            let d = Decomposition::parse(text, s.vertex_count()).map_err(invalid)?;
            d.validate(&s).map_err(invalid)?;
            (vec![d], false)
        }
        (None, true) => {
            let all = enumerate_decompositions(&s, limit);
            (all.items, all.truncated)
        }
        (None, false) => {
            return Err((EXIT_INPUT, "either --decomposition or --enumerate is required".into()));
        }
    };
    let mut reports = Vec::new();
    for d in &items {
        let local = local_quiver(&s, d).map_err(|e| (EXIT_DECOMPOSITION, e.to_string()))?;
        let coregular = is_coregular(&local.setting);
        reports.push((d, local, coregular));
    }
    if input.json {
        let body = json!({
            "setting": s.to_string(),
            "truncated": truncated,
            "local_quivers": reports.iter().map(|(d, l, c)| json!({
                "decomposition": d.to_string(),
                "local": l.setting.to_string(),
                "coregular": c,
            })).collect::<Vec<_>>(),
        });
        emit_json(io, "local", body).map_err(io_error)?;
        return Ok(EXIT_OK);
    }
    let w = &mut *io.out;
    writeln!(w, "decompositions: {}{}", reports.len(), if truncated { " (truncated)" } else { "" }).map_err(io_error)?;
    for (d, l, c) in &reports {
        let verdict = if *c { "coregular" } else { "not coregular" };
        writeln!(w, "{d}  ->  {}  {verdict}", l.setting).map_err(io_error)?;
    }
    Ok(EXIT_OK)
}

fn cmd_cycles(io: &mut Io, input: &Input, max_len: Option<usize>, list: bool) -> Outcome {
    let s = load(&input.path)?;
    let bound = max_len.unwrap_or_else(|| default_max_len(&s));
    let cycles = quasi_primitive_cycles(&s, bound).map_err(|e| (EXIT_INPUT, e.to_string()))?;
    let q = s.quiver();
    if input.json {
        let body = json!({
            "setting": s.to_string(),
            "max_len": bound,
            "count": cycles.len(),
            "cycles": list.then(|| cycles.iter().map(|c| c.display(q).to_string()).collect::<Vec<_>>()),
        });
        emit_json(io, "cycles", body).map_err(io_error)?;
        return Ok(EXIT_OK);
    }
    writeln!(io.out, "{}", cycles.len()).map_err(io_error)?;
    if list {
        for c in &cycles {
            writeln!(io.out, "{}", c.display(q)).map_err(io_error)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_dim(io: &mut Io, input: &Input) -> Outcome {
    let s = load(&input.path)?;
    let from_simples = has_simple(&s).iss_dimension;
    let dim = from_simples.or_else(|| classify(&s).ring_dimension());
    if input.json {
        let body = json!({
            "setting": s.to_string(),
            "dimension": dim,
            "source": if from_simples.is_some() { "euler_form" } else if dim.is_some() { "reduction" } else { "unknown" },
        });
        emit_json(io, "dim", body).map_err(io_error)?;
        return Ok(if dim.is_some() { EXIT_OK } else { EXIT_NOT_COREGULAR });
    }
    match dim {
        Some(d) => {
            writeln!(io.out, "{d}").map_err(io_error)?;
            Ok(EXIT_OK)
        }
        None => Err((
            EXIT_NOT_COREGULAR,
            "no simple representation of this dimension and the setting is not coregular".into(),
        )),
    }
}

fn cmd_oracle(io: &mut Io, input: &Input, samples: usize, tol: f64, seed: u64, max_len: Option<usize>) -> Outcome {
    let s = load(&input.path)?;
    let rank = estimate_iss_dimension_with(&s, max_len, samples, tol, seed).map_err(|e| (EXIT_INPUT, e.to_string()))?;
    let expected = has_simple(&s).iss_dimension;
    if input.json {
        let body = json!({
            "setting": s.to_string(),
            "samples": samples,
            "tol": tol,
            "seed": seed,
            "rank": rank,
            "expected": expected,
        });
        emit_json(io, "oracle", body).map_err(io_error)?;
        return Ok(EXIT_OK);
    }
    writeln!(io.out, "generic rank: {rank}").map_err(io_error)?;
    if let Some(e) = expected {
        let agree = if e == rank as u64 { "agrees" } else { "DISAGREES" };
        writeln!(io.out, "1 - chi(alpha, alpha): {e} ({agree})").map_err(io_error)?;
    }
    Ok(EXIT_OK)
}

fn io_error(e: std::io::Error) -> (i32, String) {
    (EXIT_INPUT, e.to_string())
}

/// Runs the command line `args` (including the program name), writing to
/// `out` and `err`, and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let mut io = Io { out, err };
    let outcome = match &cli.command {
        Command::Classify { input, quiet } => cmd_classify(&mut io, input, *quiet),
        Command::Reduce { input, trace, seed, dot } => cmd_reduce(&mut io, input, *trace, *seed, dot),
        Command::Simples { input } => cmd_simples(&mut io, input),
        Command::Local {
            input,
            decomposition,
            enumerate,
            limit,
        } => cmd_local(&mut io, input, decomposition.as_deref(), *enumerate, *limit),
        Command::Cycles { input, max_len, list } => cmd_cycles(&mut io, input, *max_len, *list),
        Command::Dim { input } => cmd_dim(&mut io, input),
        Command::Oracle {
            input,
            samples,
            tol,
            seed,
            max_len,
        } => cmd_oracle(&mut io, input, *samples, *tol, *seed, *max_len),
    };
    match outcome {
        Ok(code) => code,
        Err((code, message)) => {
            let _ = writeln!(io.err, "error: {message}");
            code
        }
    }
}
