use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use parorb::conjugacy::is_p_conjugate;
use parorb::matrix::parse_rational;
use parorb::model::olp_to_eolp;
use parorb::nilp2::{self, expand_to_b_orbits, identify, orbit_dim};
use parorb::nilp3::{self, catalog, enumerate_orbit_classes3, hom_dim_decomp, hom_table, orbit_dim3, verify_catalog};
use parorb::reptype::{classify, wild_family_343, wild_family_55, witness_dx, witness_e, witness_f};
use parorb::{BlockStructure, Decomposition3, EnhancedOlp, ExactMatrix, OrientedLinkPattern, Rational, SampleConfig};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "parorb", version, about = "Orbits of parabolic subgroups acting on nilpotent matrices")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Seed for randomized conjugacy searches.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of random samples per search.
    #[arg(long, global = true, default_value_t = 20)]
    trials: u32,
    /// Samples are drawn from [-range, range].
    #[arg(long, global = true, default_value_t = 1_000_000)]
    range: i64,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List orbit classes, one JSON record per line.
    Enumerate {
        #[arg(long)]
        blocks: BlockStructure,
        #[arg(long, default_value_t = 2)]
        nilpotency: usize,
        #[arg(long, value_enum, default_value_t = ListFormat::Json)]
        format: ListFormat,
    },
    /// Degeneration order as a Hasse diagram.
    Hasse {
        #[arg(long)]
        blocks: BlockStructure,
        #[arg(long, default_value_t = 2)]
        nilpotency: usize,
        #[arg(long, value_enum, default_value_t = HasseFormat::Dot)]
        format: HasseFormat,
    },
    /// Orbit dimension of a class.
    Dim {
        #[arg(long)]
        blocks: BlockStructure,
        #[arg(long, default_value_t = 2)]
        nilpotency: usize,
        /// Class as inline JSON or a path to a JSON file.
        #[arg(long)]
        class: String,
    },
    /// Borel orbits inside a class.
    Expand {
        #[arg(long)]
        blocks: BlockStructure,
        #[arg(long)]
        class: String,
    },
    /// Oriented link pattern of a 2-nilpotent matrix.
    Identify {
        /// Matrix as inline JSON or a path to a JSON file.
        #[arg(long)]
        matrix: String,
        /// Also report the class for this block structure.
        #[arg(long)]
        blocks: Option<BlockStructure>,
    },
    /// Dimension of the morphism space between two classes.
    Homdim {
        #[arg(long, required_unless_present = "table")]
        blocks: Option<BlockStructure>,
        #[arg(long, default_value_t = 2)]
        nilpotency: usize,
        #[arg(long, required_unless_present = "table")]
        left: Option<String>,
        #[arg(long, required_unless_present = "table")]
        right: Option<String>,
        /// Full table over the degree-3 catalog.
        #[arg(long, conflicts_with_all = ["left", "right", "blocks"])]
        table: bool,
        #[arg(long, value_enum, default_value_t = ListFormat::Json)]
        format: ListFormat,
    },
    /// Finite or wild.
    Classify {
        #[arg(long)]
        blocks: BlockStructure,
        #[arg(long)]
        nilpotency: usize,
    },
    /// Matrices from the one-parameter and two-parameter families.
    Witness {
        #[arg(long, value_enum)]
        family: Family,
        /// dx: n,x,lambda; e: n,s,lambda; f: n,lambda; wild343 and wild55: lambda,mu.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Check every catalog entry.
    VerifyCatalog,
    /// Decide whether two matrices are conjugate under the parabolic.
    Conjugate {
        #[arg(long)]
        blocks: BlockStructure,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum HasseFormat {
    Dot,
    Json,
    Ascii,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Dx,
    E,
    F,
    Wild343,
    Wild55,
}

struct Failure {
    kind: &'static str,
    message: String,
}

impl From<parorb::Error> for Failure {
    fn from(e: parorb::Error) -> Self {
        Self { kind: e.kind(), message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self { kind: "io", message: e.to_string() }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Self { kind: "parse", message: e.to_string() }
    }
}

type Out = Box<dyn Write>;
type Run = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", json!({ "error": f.kind, "message": f.message }));
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Run {
    let g = cli.global;
    let mut out: Out = match &g.output {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    };
    let cfg = SampleConfig { trials: g.trials, seed: g.seed, range: g.range };
    let result = match cli.command {
        Command::Enumerate { blocks, nilpotency, format } => enumerate(&mut out, &blocks, nilpotency, format),
        Command::Hasse { blocks, nilpotency, format } => hasse(&mut out, &blocks, nilpotency, format),
        Command::Dim { blocks, nilpotency, class } => dim(&mut out, &blocks, nilpotency, &class),
        Command::Expand { blocks, class } => expand(&mut out, &blocks, &class),
        Command::Identify { matrix, blocks } => identify_cmd(&mut out, &matrix, blocks.as_ref()),
        Command::Homdim { table: true, format, .. } => hom_table_cmd(&mut out, format),
        Command::Homdim { blocks, nilpotency, left, right, .. } => homdim(
            &mut out,
            &blocks.expect("required by clap"),
            nilpotency,
            &left.expect("required by clap"),
            &right.expect("required by clap"),
        ),
        Command::Classify { blocks, nilpotency } => {
            let t = classify(&blocks, nilpotency)?;
            line(&mut out, &json!({ "blocks": blocks, "nilpotency": nilpotency, "type": t }))
        }
        Command::Witness { family, params } => witness(&mut out, family, &params),
        Command::VerifyCatalog => {
            let report = verify_catalog();
            pretty(&mut out, &report)?;
            if !report.all_passed {
                out.flush()?;
                return Err(Failure {
                    kind: "catalog_verification",
                    message: format!("failing entries: {}", report.failures().join(", ")),
                });
            }
            Ok(())
        }
        Command::Conjugate { blocks, left, right } => {
            let a: ExactMatrix = load(&left)?;
            let b: ExactMatrix = load(&right)?;
            pretty(&mut out, &is_p_conjugate(&a, &b, &blocks, &cfg)?)
        }
    };
    out.flush()?;
    result
}

fn line(out: &mut Out, v: &impl serde::Serialize) -> Run {
    serde_json::to_writer(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

fn pretty(out: &mut Out, v: &impl serde::Serialize) -> Run {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

/// Inline JSON, or the contents of the named file.
fn load<T: serde::de::DeserializeOwned>(arg: &str) -> Result<T, Failure> {
    let t = arg.trim_start();
    let text = if t.starts_with('{') || t.starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Failure { kind: "io", message: format!("{arg}: {e}") })?
    };
    Ok(serde_json::from_str(&text)?)
}

fn two_blocks(blocks: &BlockStructure) -> Result<(usize, usize), Failure> {
    match blocks.blocks() {
        &[b1, b2] => Ok((b1, b2)),
        _ => Err(parorb::Error::Unsupported(format!("degree 3 needs exactly two blocks, got {blocks}")).into()),
    }
}

fn unsupported(x: usize) -> Failure {
    parorb::Error::Unsupported(format!("nilpotency degree {x}; only 2 and 3 are enumerated")).into()
}

/// A class given either as an aggregate or as a pattern.
fn load_class(arg: &str, blocks: &BlockStructure) -> Result<EnhancedOlp, Failure> {
    let v: Value = load(arg)?;
    let e = if v.get("kind").and_then(Value::as_str) == Some("olp") {
        let olp: OrientedLinkPattern = serde_json::from_value(v)?;
        olp_to_eolp(&olp, blocks)?
    } else {
        serde_json::from_value(v)?
    };
    if e.blocks() != blocks {
        return Err(parorb::Error::BlockMismatch.into());
    }
    Ok(e)
}

/// A degree-3 class given as a catalog id or a multiplicity map.
fn load_decomposition(arg: &str) -> Result<Decomposition3, Failure> {
    if arg.trim_start().starts_with('{') || std::path::Path::new(arg).is_file() {
        load(arg)
    } else {
        Ok(Decomposition3::from_ids([(arg.trim(), 1)])?)
    }
}

fn record2(e: &EnhancedOlp) -> Value {
    json!({ "class": e, "label": e.label(), "orbit_dim": orbit_dim(e) })
}

fn record3(d: &Decomposition3, b1: usize, b2: usize) -> Result<Value, Failure> {
    Ok(json!({ "class": d, "label": d.label(), "orbit_dim": orbit_dim3(d, b1, b2)? }))
}

fn ascii3(d: &Decomposition3) -> String {
    d.label().replace(" ⊕ ", " + ")
}

fn enumerate(out: &mut Out, blocks: &BlockStructure, x: usize, format: ListFormat) -> Run {
    let rows: Vec<(Value, usize, String)> = match x {
        2 => nilp2::enumerate_orbit_classes(blocks)
            .iter()
            .map(|e| (record2(e), orbit_dim(e), e.ascii_label()))
            .collect(),
        3 => {
            let (b1, b2) = two_blocks(blocks)?;
            enumerate_orbit_classes3(b1, b2)?
                .iter()
                .map(|d| Ok((record3(d, b1, b2)?, orbit_dim3(d, b1, b2)?, ascii3(d))))
                .collect::<Result<_, Failure>>()?
        }
        _ => return Err(unsupported(x)),
    };
    for (k, (rec, d, label)) in rows.iter().enumerate() {
        match format {
            ListFormat::Json => line(out, rec)?,
            ListFormat::Table => writeln!(out, "{k:>4}  {d:>4}  {label}")?,
        }
    }
    Ok(())
}

fn hasse(out: &mut Out, blocks: &BlockStructure, x: usize, format: HasseFormat) -> Run {
    let (labels, ascii, records, edges) = match x {
        2 => {
            let h = nilp2::hasse(blocks);
            (
                h.nodes.iter().map(EnhancedOlp::label).collect::<Vec<_>>(),
                h.nodes.iter().map(EnhancedOlp::ascii_label).collect::<Vec<_>>(),
                h.nodes.iter().map(record2).collect::<Vec<_>>(),
                h.edges,
            )
        }
        3 => {
            let (b1, b2) = two_blocks(blocks)?;
            let h = nilp3::hasse3(b1, b2)?;
            (
                h.nodes.iter().map(Decomposition3::label).collect(),
                h.nodes.iter().map(ascii3).collect(),
                h.nodes.iter().map(|d| record3(d, b1, b2)).collect::<Result<_, _>>()?,
                h.edges,
            )
        }
        _ => return Err(unsupported(x)),
    };
    let graph = parorb::Hasse { nodes: (0..labels.len()).collect::<Vec<usize>>(), edges };
    match format {
        HasseFormat::Dot => write!(out, "{}", graph.to_dot(|&i| labels[i].clone()))?,
        HasseFormat::Ascii => write!(out, "{}", graph.to_ascii(|&i| ascii[i].clone()))?,
        HasseFormat::Json => pretty(out, &json!({ "nodes": records, "edges": graph.edges }))?,
    }
    Ok(())
}

fn dim(out: &mut Out, blocks: &BlockStructure, x: usize, class: &str) -> Run {
    let rec = match x {
        2 => record2(&load_class(class, blocks)?),
        3 => {
            let (b1, b2) = two_blocks(blocks)?;
            record3(&load_decomposition(class)?, b1, b2)?
        }
        _ => return Err(unsupported(x)),
    };
    line(out, &rec)
}

fn expand(out: &mut Out, blocks: &BlockStructure, class: &str) -> Run {
    let e = load_class(class, blocks)?;
    for olp in expand_to_b_orbits(&e) {
        line(out, &olp)?;
    }
    Ok(())
}

fn identify_cmd(out: &mut Out, matrix: &str, blocks: Option<&BlockStructure>) -> Run {
    let m: ExactMatrix = load(matrix)?;
    let olp = identify(&m)?;
    let mut rec = json!({ "pattern": olp });
    if let Some(b) = blocks {
        rec["class"] = serde_json::to_value(olp_to_eolp(&olp, b)?)?;
    }
    line(out, &rec)
}

fn homdim(out: &mut Out, blocks: &BlockStructure, x: usize, left: &str, right: &str) -> Run {
    let rec = match x {
        2 => {
            let (a, b) = (load_class(left, blocks)?, load_class(right, blocks)?);
            json!({ "left": a.label(), "right": b.label(), "hom_dim": nilp2::hom_dim(&a, &b)? })
        }
        3 => {
            two_blocks(blocks)?;
            let (a, b) = (load_decomposition(left)?, load_decomposition(right)?);
            json!({ "left": a.label(), "right": b.label(), "hom_dim": hom_dim_decomp(&a, &b) })
        }
        _ => return Err(unsupported(x)),
    };
    line(out, &rec)
}

fn hom_table_cmd(out: &mut Out, format: ListFormat) -> Run {
    let ids: Vec<&str> = catalog().iter().map(|e| e.id.as_str()).collect();
    let table = hom_table();
    match format {
        ListFormat::Json => pretty(out, &json!({ "ids": ids, "table": table }))?,
        ListFormat::Table => {
            let w = ids.iter().map(|s| s.len()).max().unwrap_or(0);
            for (id, row) in ids.iter().zip(table) {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(out, "{id:<w$}  {}", cells.join(" "))?;
            }
        }
    }
    Ok(())
}

fn witness(out: &mut Out, family: Family, params: &[String]) -> Run {
    let values = params.iter().map(|p| parse_rational(p)).collect::<parorb::Result<Vec<Rational>>>()?;
    let arity = match family {
        Family::Dx | Family::E => 3,
        Family::F | Family::Wild343 | Family::Wild55 => 2,
    };
    if values.len() != arity {
        return Err(parorb::Error::SizeMismatch { expected: arity, found: values.len() }.into());
    }
    let whole = |r: &Rational| -> Result<usize, Failure> {
        if r.is_integer() && *r.numer() >= 0.into() {
            r.to_integer().try_into().map_err(|_| parorb::Error::OutOfRange(r.to_string()).into())
        } else {
            Err(parorb::Error::OutOfRange(format!("expected a nonnegative integer, got {r}")).into())
        }
    };
    let v = &values;
    let doc = match family {
        Family::Dx => {
            let x = u32::try_from(whole(&v[1])?).map_err(|_| parorb::Error::OutOfRange(v[1].to_string()))?;
            serde_json::to_value(witness_dx(whole(&v[0])?, x, &v[2])?)?
        }
        Family::E => serde_json::to_value(witness_e(whole(&v[0])?, whole(&v[1])?, &v[2])?)?,
        Family::F => serde_json::to_value(witness_f(whole(&v[0])?, &v[1])?)?,
        Family::Wild343 => serde_json::to_value(wild_family_343(&v[0], &v[1])?)?,
        Family::Wild55 => serde_json::to_value(wild_family_55(&v[0], &v[1])?)?,
    };
    pretty(out, &doc)
}
