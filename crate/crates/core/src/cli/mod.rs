//! Command-line front end.

pub mod homdims;
pub mod series;
pub mod spec;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::functors::{
    check_an_configuration, check_spherelike, check_spherical, render_matrix, verify_braid, verify_main_theorem,
    Report,
};
use crate::homotopy::{reduce, resolve, write_complex, Complex};
use crate::path_algebra::{graded_hom_dims, parse_algebra, write_algebra, FDAlgebra, Family};
use crate::qmod::{parse_comp_table, parse_module, write_comp_table};
pub use homdims::{homdims, HomdimsReport};
pub use series::{composition_table, render_aligned};
pub use spec::{FunctorSpec, Kind, ObjectSpec};

#[derive(Debug, Parser)]
#[command(name = "shuffle-twist", version, about = "Shuffling and spherical twist functors on category O blocks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// machine-readable output
    #[arg(long, global = true)]
    pub json: bool,
    /// seed for the generic choices in isomorphism searches
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// suppress progress lines on stderr
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Args)]
pub struct Source {
    /// bundled family: sl2, parabolic-sl(N) or parabolic-sl:N
    #[arg(long)]
    pub family: Option<String>,
    /// algebra file
    #[arg(long, value_name = "FILE")]
    pub algebra: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load and validate an algebra, print its basis and Hom dimensions
    Algebra {
        #[command(flatten)]
        source: Source,
    },
    /// Composition series of the Vermas and indecomposable projectives
    Series {
        #[command(flatten)]
        source: Source,
    },
    /// Minimal projective resolution of an object or a module file
    Resolve {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        object: Option<String>,
        #[arg(long, value_name = "FILE")]
        module: Option<PathBuf>,
    },
    /// Apply a functor to an object
    Apply {
        #[command(flatten)]
        source: Source,
        /// theta:sI, shuffle:sI, coshuffle:sI, twist:OBJECT or cotwist:OBJECT
        #[arg(long)]
        functor: String,
        #[arg(long)]
        object: Option<String>,
        #[arg(long, value_name = "FILE")]
        module: Option<PathBuf>,
        /// eliminate contractible summands from the result
        #[arg(long)]
        reduce: bool,
    },
    /// Sphericality checks
    Check {
        kind: CheckKind,
        #[command(flatten)]
        source: Source,
        /// object spec; repeat for a configuration
        #[arg(long)]
        object: Vec<String>,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        d: i32,
    },
    /// Verify the main theorem and the braid relations
    Verify {
        what: VerifyKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// End and Hom dimensions of projectives from a composition table file
    Homdims { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Spherelike,
    Spherical,
    Configuration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    MainTheorem,
    Braid,
    All,
}

/// Output of one command: the text for stdout and whether every check passed.
struct Outcome {
    text: String,
    pass: bool,
}

fn ok(text: String) -> Outcome {
    Outcome { text, pass: true }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

fn load(source: &Source) -> Result<Arc<FDAlgebra>> {
    match (&source.family, &source.algebra) {
        (Some(_), Some(_)) => Err(Error::Invalid("give either --family or --algebra, not both".into())),
        (Some(f), None) => Ok(Arc::new(Family::parse(f)?.build()?)),
        (None, Some(p)) => {
            let text = read(p)?;
            parse_algebra(&text).map(Arc::new).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))
        }
        (None, None) => Err(Error::Invalid("one of --family or --algebra is required".into())),
    }
}

/// The object named by `--object`, or the resolution of the module in `--module`.
fn object(alg: &Arc<FDAlgebra>, spec: &Option<String>, module: &Option<PathBuf>) -> Result<(String, Complex)> {
    match (spec, module) {
        (Some(_), Some(_)) => Err(Error::Invalid("give either --object or --module, not both".into())),
        (Some(s), None) => {
            let o = ObjectSpec::parse(alg, s)?;
            Ok((o.name(alg), o.complex(alg)?))
        }
        (None, Some(p)) => {
            let text = read(p)?;
            let (name, m) = parse_module(&text, alg).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
            Ok((name, resolve(&m)?))
        }
        (None, None) => Err(Error::Invalid("one of --object or --module is required".into())),
    }
}

fn cmd_algebra(alg: &Arc<FDAlgebra>, json: bool) -> Outcome {
    let n = alg.num_vertices();
    let basis: Vec<String> = alg.basis().iter().map(|p| p.render(&alg.quiver)).collect();
    let hom: Vec<Vec<usize>> = (0..n).map(|w| (0..n).map(|v| graded_hom_dims(alg, w, v).values().sum()).collect()).collect();
    if json {
        return ok(json!({
            "name": alg.name,
            "dim": alg.dim(),
            "basis": basis,
            "hom_dims": hom,
            "algebra": write_algebra(alg),
        })
        .to_string());
    }
    let mut out = format!("algebra {}: dim {}, {} vertices\nbasis: {}\n", alg.name, alg.dim(), n, basis.join(", "));
    out.push_str("dim 1_w A 1_v (row w, column v):\n");
    for (w, row) in hom.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|d| d.to_string()).collect();
        out.push_str(&format!("  {:>8}  {}\n", alg.vertex_label(w), cells.join(" ")));
    }
    out.push('\n');
    out.push_str(&write_algebra(alg));
    ok(out)
}

fn cmd_series(alg: &Arc<FDAlgebra>, json: bool) -> Result<Outcome> {
    let t = composition_table(alg)?;
    Ok(ok(if json { json!({ "block": t.name, "table": write_comp_table(&t) }).to_string() } else { render_aligned(&t) }))
}

fn complex_json(name: &str, x: &Complex) -> Value {
    json!({ "name": name, "compact": x.render_compact(), "complex": write_complex(name, x) })
}

fn cmd_resolve(alg: &Arc<FDAlgebra>, spec: &Option<String>, module: &Option<PathBuf>, json: bool) -> Result<Outcome> {
    let (name, x) = object(alg, spec, module)?;
    Ok(ok(if json { complex_json(&name, &x).to_string() } else { format!("{}\n", write_complex(&name, &x)) }))
}

fn cmd_apply(
    alg: &Arc<FDAlgebra>,
    functor: &str,
    spec: &Option<String>,
    module: &Option<PathBuf>,
    reduced: bool,
    json: bool,
) -> Result<Outcome> {
    let f = FunctorSpec::parse(alg, functor)?;
    let (name, x) = object(alg, spec, module)?;
    let mut y = f.apply(alg, &x)?;
    if reduced {
        y = reduce(&y);
    }
    let label = format!("{functor}({name})");
    if json {
        return Ok(ok(complex_json(&label, &y).to_string()));
    }
    Ok(ok(format!("{}\n{}\n", y.render_compact(), y.render())))
}

fn cmd_check(alg: &Arc<FDAlgebra>, kind: CheckKind, specs: &[String], d: i32, json: bool) -> Result<Outcome> {
    let mut objs = Vec::new();
    for s in specs {
        let o = ObjectSpec::parse(alg, s)?;
        objs.push((o.name(alg), o.complex(alg)?));
    }
    if kind == CheckKind::Configuration && objs.is_empty() {
        for v in 1..alg.num_vertices() {
            let o = ObjectSpec { kind: Kind::P, vertex: v };
            objs.push((o.name(alg), o.complex(alg)?));
        }
    }
    if kind != CheckKind::Configuration && objs.len() != 1 {
        return Err(Error::Invalid(format!("{kind:?} takes exactly one --object")));
    }
    let (pass, text, value) = match kind {
        CheckKind::Spherelike => {
            let v = check_spherelike(&objs[0].1, d);
            let text = format!("{} {d}-spherelike: {}\n", objs[0].0, v.reason);
            let value = json!({
                "object": objs[0].0, "d": d, "pass": v.pass, "reason": v.reason,
                "end_dims": v.end.dims.iter().map(|(j, n)| (j.to_string(), *n)).collect::<std::collections::BTreeMap<_, _>>(),
            });
            (v.pass, text, value)
        }
        CheckKind::Spherical => {
            let v = check_spherical(&objs[0].1, d);
            let mut text = format!("{} {d}-spherical: {}\n", objs[0].0, v.reason);
            let mut pairings = Vec::new();
            for p in &v.pairings {
                let m = render_matrix(&p.matrix);
                text.push_str(&format!("  P({}) degree {}: {m}\n", alg.vertex_label(p.vertex), p.i));
                pairings.push(json!({
                    "vertex": alg.vertex_label(p.vertex), "degree": p.i, "matrix": m, "nondegenerate": p.nondegenerate,
                }));
            }
            let value =
                json!({ "object": objs[0].0, "d": d, "pass": v.pass, "reason": v.reason, "pairings": pairings });
            (v.pass, text, value)
        }
        CheckKind::Configuration => {
            let xs: Vec<Complex> = objs.iter().map(|(_, x)| x.clone()).collect();
            let v = check_an_configuration(&xs, d);
            let names: Vec<&str> = objs.iter().map(|(n, _)| n.as_str()).collect();
            let mut text = format!("{}: {}\n", names.join(", "), v.reason);
            for row in &v.hom_totals {
                let cells: Vec<String> = row.iter().map(|k| k.to_string()).collect();
                text.push_str(&format!("  {}\n", cells.join(" ")));
            }
            let value = json!({
                "objects": names, "d": d, "pass": v.pass, "reason": v.reason,
                "spherical": v.spherical, "hom_totals": v.hom_totals,
            });
            (v.pass, text, value)
        }
    };
    let verdict = if pass { "PASS" } else { "FAIL" };
    Ok(Outcome { text: if json { value.to_string() } else { format!("{text}{verdict}\n") }, pass })
}

#[derive(Clone, Copy)]
enum Sweep {
    Main(usize),
    Braid(usize),
}

fn sweeps(what: VerifyKind, n: Option<usize>, max_n: Option<usize>) -> Result<Vec<Sweep>> {
    let range = |lo: usize, hi: usize| -> Result<Vec<usize>> {
        match (n, max_n) {
            (Some(_), Some(_)) => Err(Error::Invalid("give either --n or --max-n, not both".into())),
            (Some(k), None) => Ok(vec![k]),
            (None, Some(m)) if m < lo || m > hi => {
                Err(Error::Invalid(format!("--max-n {m} is outside the supported range {lo}..={hi}")))
            }
            (None, Some(m)) => Ok((lo..=m).collect()),
            (None, None) => Ok((lo..=hi.min(4)).collect()),
        }
    };
    Ok(match what {
        VerifyKind::MainTheorem => range(2, 6)?.into_iter().map(Sweep::Main).collect(),
        VerifyKind::Braid => range(2, 5)?.into_iter().map(Sweep::Braid).collect(),
        VerifyKind::All => {
            let ns = range(2, 5)?;
            ns.iter().map(|&k| Sweep::Main(k)).chain(ns.iter().map(|&k| Sweep::Braid(k))).collect()
        }
    })
}

fn cmd_verify(
    what: VerifyKind,
    n: Option<usize>,
    max_n: Option<usize>,
    seed: u64,
    json: bool,
    quiet: bool,
    err: &mut dyn Write,
) -> Result<Outcome> {
    let cells = sweeps(what, n, max_n)?;
    // each sweep is independent; results are collected in input order
    let results: Vec<Result<Report>> = std::thread::scope(|s| {
        let handles: Vec<_> = cells
            .iter()
            .map(|&c| {
                s.spawn(move || match c {
                    Sweep::Main(k) => verify_main_theorem(k, seed),
                    Sweep::Braid(k) => verify_braid(k, seed),
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("verification thread panicked")).collect()
    });
    let mut reports = Vec::new();
    for r in results {
        let r = r?;
        if !quiet {
            for c in &r.checks {
                let _ = writeln!(err, "[{}] {} {}", r.title, if c.pass { "pass" } else { "FAIL" }, c.id);
            }
        }
        reports.push(r);
    }
    let pass = reports.iter().all(Report::pass);
    let text = if json {
        let mut v = serde_json::to_value(&reports).expect("reports serialize");
        // timings are not deterministic
        if let Value::Array(items) = &mut v {
            for item in items {
                if let Value::Object(o) = item {
                    o.remove("millis");
                }
            }
        }
        json!({ "pass": pass, "reports": v }).to_string()
    } else {
        reports.iter().map(|r| r.render()).collect::<Vec<_>>().join("\n")
    };
    Ok(Outcome { text, pass })
}

fn cmd_homdims(path: &Path, json: bool) -> Result<Outcome> {
    let text = read(path)?;
    let t = parse_comp_table(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let r = homdims(&t);
    Ok(ok(if json { serde_json::to_string(&r).expect("report serializes") } else { r.render() }))
}

fn dispatch(cli: &Cli, err: &mut dyn Write) -> Result<Outcome> {
    match &cli.command {
        Command::Algebra { source } => Ok(cmd_algebra(&load(source)?, cli.json)),
        Command::Series { source } => cmd_series(&load(source)?, cli.json),
        Command::Resolve { source, object, module } => cmd_resolve(&load(source)?, object, module, cli.json),
        Command::Apply { source, functor, object, module, reduce } => {
            cmd_apply(&load(source)?, functor, object, module, *reduce, cli.json)
        }
        Command::Check { kind, source, object, d } => cmd_check(&load(source)?, *kind, object, *d, cli.json),
        Command::Verify { what, n, max_n } => cmd_verify(*what, *n, *max_n, cli.seed, cli.json, cli.quiet, err),
        Command::Homdims { file } => cmd_homdims(file, cli.json),
    }
}

/// Exit code 0 when every check passes, 1 when a mathematical check fails, 2 on input or usage errors.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(&cli, err) {
        Ok(o) => {
            let _ = write!(out, "{}", o.text);
            if !o.text.ends_with('\n') {
                let _ = writeln!(out);
            }
            if o.pass {
                0
            } else {
                1
            }
        }
        Err(Error::Rejected(r)) => {
            let _ = writeln!(err, "error: construction rejected: {r}");
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout(), &mut std::io::stderr())
}
