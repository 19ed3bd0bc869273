//! Command-line front end. Results go to stdout, diagnostics to stderr.
//!
//! Exit status: 0 on success, 1 on a domain error (an inadmissible or
//! non-classifiable dividing set), 2 on usage or parse errors.

use std::io::{Read, Write};

use clap::{Parser, ValueEnum};

use crate::admissibility::{euler_pairing, is_admissible, is_tight_candidate};
use crate::classifier::{classification_table, classify, leaf_census, ClassifyError};
use crate::ct_arith::{neg_cf, tight_count_solid_torus};
use crate::enumerator::{enum_equicolored_trees_with, enum_torus_classes_with, EnumError, Limits};
use crate::io;
use crate::surface::{DividingSetClass, Manifold};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Command {
    EnumTrees,
    EnumTorus,
    Check,
    Classify,
    TightCount,
    Cf,
    Census,
    Table,
    ExportDot,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "bcontact", version, about = "Dividing sets and b-contact structures on (S3,S2) and (S3,T2)")]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// Half the number of regions (trees) or of essential curves (tight count)
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    max_curves: Option<usize>,
    #[arg(long)]
    max_slope: Option<u64>,
    #[arg(long, value_parser = ["s3-s2", "s3-t2"])]
    manifold: Option<String>,
    /// Dividing-set file in the text or JSON format, or `-` for stdin
    #[arg(long)]
    gamma: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    #[arg(long)]
    count_only: bool,
    /// Treat the two signs as distinct (the default)
    #[arg(long, conflicts_with = "modulo_swap")]
    distinguish_signs: bool,
    /// Identify classes that differ by a global sign swap
    #[arg(long)]
    modulo_swap: bool,
    #[arg(long, default_value_t = Limits::default().max_tree_n)]
    max_tree_n: usize,
    #[arg(long, default_value_t = Limits::default().max_curves)]
    max_curves_cap: usize,
    #[arg(long, default_value_t = Limits::default().max_slope)]
    max_slope_cap: u64,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<EnumError> for Failure {
    fn from(e: EnumError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run_cli<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(args) => args,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut out = String::new();
    let result = dispatch(&args, stdin, &mut out);
    let _ = stdout.write_all(out.as_bytes());
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

fn require<T: Copy>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("missing required flag --{flag}")))
}

fn limits(args: &Args) -> Limits {
    Limits { max_tree_n: args.max_tree_n, max_curves: args.max_curves_cap, max_slope: args.max_slope_cap }
}

fn read_gamma(args: &Args, stdin: &mut dyn Read) -> Result<DividingSetClass, Failure> {
    let path = args.gamma.as_deref().ok_or_else(|| Failure::Usage("missing required flag --gamma".into()))?;
    let text = if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?
    };
    io::parse_dividing_set(&text).map_err(|e| Failure::Usage(e.to_string()))
}

fn manifold_for(args: &Args, d: &DividingSetClass) -> Manifold {
    args.manifold
        .as_deref()
        .map(|m| m.parse().expect("restricted by clap"))
        .unwrap_or_else(|| Manifold::for_surface(d.surface))
}

fn dispatch(args: &Args, stdin: &mut dyn Read, out: &mut String) -> Result<(), Failure> {
    let modulo_swap = args.modulo_swap;
    match args.command {
        Command::EnumTrees => {
            let n = require(args.n, "n")?;
            let trees = enum_equicolored_trees_with(n, modulo_swap, &limits(args))?;
            let classes: Vec<_> = trees.into_iter().map(DividingSetClass::sphere).collect();
            write_listing(args, Manifold::S3S2, &classes, out);
        }
        Command::EnumTorus => {
            let max_curves = require(args.max_curves, "max-curves")?;
            let max_slope = args.max_slope.unwrap_or(1);
            let classes = enum_torus_classes_with(max_curves, max_slope, modulo_swap, &limits(args))?;
            write_listing(args, Manifold::S3T2, &classes, out);
        }
        Command::Check => {
            let d = read_gamma(args, stdin)?;
            let m = manifold_for(args, &d);
            let admissible = is_admissible(m, &d);
            let tight = is_tight_candidate(m, &d);
            let pairing = euler_pairing(&d);
            match args.format {
                Format::Json => {
                    let value = serde_json::json!({
                        "manifold": m.name(),
                        "embeddable": true,
                        "euler_pairing": pairing,
                        "admissible": admissible.holds,
                        "admissible_reason": admissible.reason,
                        "tight_candidate": tight.holds,
                        "tight_candidate_reason": tight.reason,
                    });
                    out.push_str(&format!("{value}\n"));
                }
                _ => {
                    out.push_str(&format!("manifold: {m}\nembeddable: yes\neuler_pairing: {pairing}\n"));
                    out.push_str(&format!("admissible: {admissible}\ntight_candidate: {tight}\n"));
                }
            }
            if !admissible.holds {
                return Err(Failure::Domain(admissible.reason));
            }
        }
        Command::Classify => {
            let d = read_gamma(args, stdin)?;
            let m = manifold_for(args, &d);
            let record = classify(m, &d)?;
            let census = leaf_census(m, &d)?;
            let key = d.key(modulo_swap).expect("validated on parse");
            let row = crate::classifier::TableRow { key, record, census };
            write_rows(args.format, std::slice::from_ref(&row), out);
        }
        Command::TightCount => {
            let n = require(args.n, "n")? as u64;
            let (p, q) = (require(args.p, "p")?, require(args.q, "q")?);
            let t = tight_count_solid_torus(n, p, q).map_err(|e| Failure::Usage(e.to_string()))?;
            match args.format {
                Format::Json => out.push_str(&(io::tight_count_json(&t) + "\n")),
                _ => out.push_str(&format!("{}\n", t.count)),
            }
        }
        Command::Cf => {
            let (p, q) = (require(args.p, "p")?, require(args.q, "q")?);
            let cf = neg_cf(p, q).map_err(|e| Failure::Usage(e.to_string()))?;
            match args.format {
                Format::Json => out.push_str(&format!("{}\n", serde_json::to_string(cf.coefficients()).expect("ints"))),
                _ => {
                    let parts: Vec<String> = cf.coefficients().iter().map(i128::to_string).collect();
                    out.push_str(&(parts.join(" ") + "\n"));
                }
            }
        }
        Command::Census => {
            let d = read_gamma(args, stdin)?;
            let c = leaf_census(manifold_for(args, &d), &d)?;
            match args.format {
                Format::Json => out.push_str(&(serde_json::to_string(&c).expect("ints") + "\n")),
                Format::Csv => out.push_str(&format!(
                    "leaves_3,leaves_2,leaves_1\n{},{},{}\n",
                    c.leaves_dim3, c.leaves_dim2, c.leaves_dim1
                )),
                Format::Text => out.push_str(&format!("{} {} {}\n", c.leaves_dim3, c.leaves_dim2, c.leaves_dim1)),
            }
        }
        Command::Table => {
            let m: Manifold = args
                .manifold
                .as_deref()
                .ok_or_else(|| Failure::Usage("missing required flag --manifold".into()))?
                .parse()
                .expect("restricted by clap");
            let max_curves = match (m, args.n, args.max_curves) {
                (_, _, Some(c)) => c,
                (Manifold::S3S2, Some(n), None) => (2 * n).saturating_sub(1),
                _ => return Err(Failure::Usage("missing required flag --max-curves".into())),
            };
            let rows = classification_table(m, max_curves, args.max_slope.unwrap_or(1), modulo_swap, &limits(args))?;
            if args.count_only {
                out.push_str(&format!("{}\n", rows.len()));
            } else {
                write_rows(args.format, &rows, out);
            }
        }
        Command::ExportDot => {
            let d = read_gamma(args, stdin)?;
            out.push_str(&io::export_dot(&d));
        }
    }
    Ok(())
}

fn write_listing(args: &Args, m: Manifold, classes: &[DividingSetClass], out: &mut String) {
    if args.count_only {
        out.push_str(&format!("{}\n", classes.len()));
        return;
    }
    let key = |d: &DividingSetClass| d.key(args.modulo_swap).expect("enumerated classes are valid");
    match args.format {
        Format::Json => {
            for d in classes {
                out.push_str(&io::class_to_json(d));
                out.push('\n');
            }
        }
        Format::Csv => {
            let items: Vec<_> =
                classes.iter().map(|d| (key(d), d.graph.edge_count(), is_admissible(m, d).holds)).collect();
            out.push_str(&io::summary_csv(&items));
        }
        Format::Text => {
            for d in classes {
                out.push_str(&format!("{} {}\n", key(d), compact(d)));
            }
        }
    }
}

/// One-line rendering: vertices as `<sign>g<genus>` in id order, then edges.
fn compact(d: &DividingSetClass) -> String {
    let g = d.graph.normalized();
    let vertices: Vec<String> = g.vertices.iter().map(|v| format!("{}g{}", v.sign, v.genus)).collect();
    let edges: Vec<String> = g.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
    let mut s = format!("[{}] {{{}}}", vertices.join(" "), edges.join(" "));
    if let Some(slope) = d.slope {
        s.push_str(&format!(" slope {slope}"));
    }
    s
}

fn write_rows(format: Format, rows: &[crate::classifier::TableRow], out: &mut String) {
    match format {
        Format::Csv => out.push_str(&io::table_csv(rows)),
        Format::Json => out.push_str(&io::table_jsonl(rows)),
        Format::Text => {
            for r in rows {
                let rec = &r.record;
                out.push_str(&format!(
                    "{} {} tight={} mixed={}xZ^{} overtwisted={}xZ^{} leaves={}/{}/{}\n",
                    r.key,
                    compact(&rec.dividing_set),
                    rec.tight.finite_factor,
                    rec.mixed.finite_factor,
                    rec.mixed.free_rank,
                    rec.fully_overtwisted.finite_factor,
                    rec.fully_overtwisted.free_rank,
                    r.census.leaves_dim3,
                    r.census.leaves_dim2,
                    r.census.leaves_dim1,
                ));
            }
        }
    }
}
