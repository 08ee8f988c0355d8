//! Argument handling and dispatch for the `toric-morphisms` binary.
//!
//! JSON output is compact with sorted keys and a trailing newline. Every
//! failure prints one JSON line on stderr and maps to an exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | usage error or unsupported input |
//! | 2 | fan file unreadable or invalid |
//! | 3 | invalid degree vector |
//! | 4 | census assumptions unmet |
//! | 5 | census budget exceeded |
//! | 6 | `--check` found a mismatch |

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use toric_morphisms::cohomology::ambient_dimension;
use toric_morphisms::oracle::DEFAULT_BUDGET;
use toric_morphisms::{
    ambient_betti, class_group, count_points, genus0_table, genus_g_stable_table,
    point_count_polynomial, primitive_collections, require_census_assumptions, target_betti,
    validate_fan, CensusOptions, DegreeVector, Error, Fan, IntPolynomial, WeightedBettiTable,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_OTHER: u8 = 1;
pub const EXIT_FAN: u8 = 2;
pub const EXIT_DEGREE: u8 = 3;
pub const EXIT_ASSUMPTIONS: u8 = 4;
pub const EXIT_BUDGET: u8 = 5;
pub const EXIT_MISMATCH: u8 = 6;

#[derive(Parser, Debug)]
#[command(name = "toric-morphisms", version, about = "Cohomology and point counts of spaces of morphisms from curves to toric varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report whether the fan is simplicial, complete and smooth.
    FanValidate(FanArgs),
    /// List the primitive collections.
    FanPrimitives(FanArgs),
    /// Compute the class group of the fan.
    FanClassGroup(FanArgs),
    /// Betti numbers of the toric variety.
    TargetBetti(FanArgs),
    /// Betti numbers of the ambient space of sections.
    AmbientBetti(DegreeArgs),
    /// Weighted Betti table of the space of morphisms.
    ModuliBetti(DegreeArgs),
    /// Point-count polynomial of the space of morphisms (genus 0).
    ModuliCount {
        #[command(flatten)]
        args: DegreeArgs,
        /// Compare with a brute-force census over F_q.
        #[arg(long, value_name = "Q")]
        check: Option<u32>,
        #[command(flatten)]
        census: CensusArgs,
    },
    /// Brute-force count of morphisms over F_q.
    OracleCount {
        #[command(flatten)]
        args: DegreeArgs,
        /// Prime field order.
        #[arg(long)]
        q: u32,
        #[command(flatten)]
        census: CensusArgs,
    },
}

#[derive(Args, Debug)]
struct FanArgs {
    /// Fan description in JSON.
    fan: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args, Debug)]
struct DegreeArgs {
    #[command(flatten)]
    fan: FanArgs,
    /// Comma-separated degrees, one per ray.
    #[arg(long, allow_hyphen_values = true)]
    degree: String,
    #[arg(long, default_value_t = 0)]
    genus: u32,
}

#[derive(Args, Debug)]
struct CensusArgs {
    /// Maximum number of enumerated tuples.
    #[arg(long, env = "TORIC_MORPHISMS_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

/// A failure with its exit code and machine-readable diagnostic.
#[derive(Debug)]
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
    extra: Map<String, Value>,
}

impl Failure {
    fn new(code: u8, kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            code,
            kind,
            message: message.into(),
            extra: Map::new(),
        }
    }

    fn with(mut self, key: &str, value: Value) -> Self {
        self.extra.insert(key.into(), value);
        self
    }

    fn diagnostic(&self) -> Value {
        let mut obj = self.extra.clone();
        obj.insert("error".into(), json!(self.kind));
        obj.insert("exit_code".into(), json!(self.code));
        obj.insert("message".into(), json!(self.message));
        Value::Object(obj)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        match e {
            Error::InvalidFan { cone, ray, .. } => {
                let mut f = Failure::new(EXIT_FAN, "invalid_fan", message);
                if let Some(c) = cone {
                    f = f.with("cone", json!(c));
                }
                if let Some(r) = ray {
                    f = f.with("ray", json!(r));
                }
                f
            }
            Error::FanParse(_) => Failure::new(EXIT_FAN, "fan_parse", message),
            Error::DegreeLength { expected, found } => {
                Failure::new(EXIT_DEGREE, "degree_length", message)
                    .with("expected", json!(expected))
                    .with("found", json!(found))
            }
            Error::Inadmissible { lattice_sum } => {
                Failure::new(EXIT_DEGREE, "inadmissible_degree", message)
                    .with("lattice_sum", json!(lattice_sum))
            }
            Error::Precondition(_) => Failure::new(EXIT_DEGREE, "precondition", message),
            Error::BudgetExceeded { required, budget } => {
                Failure::new(EXIT_BUDGET, "budget_exceeded", message)
                    .with("budget", json!(budget))
                    .with("required", json!(required))
            }
            Error::Unsupported(_) => Failure::new(EXIT_OTHER, "unsupported", message),
            Error::NonHomogeneous { .. } => Failure::new(EXIT_OTHER, "non_homogeneous", message),
            Error::Inconsistent(_) => Failure::new(EXIT_OTHER, "inconsistent", message),
            Error::Overflow(_) => Failure::new(EXIT_OTHER, "overflow", message),
        }
    }
}

type Outcome = Result<Output, Failure>;

/// Rendered result plus the exit code to return after printing it.
struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: EXIT_OK }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// to `out` and `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let rendered = e.to_string();
            let summary: Vec<&str> = rendered
                .lines()
                .take_while(|l| !l.starts_with("Usage:"))
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect();
            let message = summary.join(" ");
            let failure = Failure::new(EXIT_OTHER, "usage", message.trim_start_matches("error: "));
            let _ = writeln!(err, "{}", failure.diagnostic());
            return EXIT_OTHER;
        }
    };
    match dispatch(cli.command) {
        Ok(output) => {
            let _ = out.write_all(output.text.as_bytes());
            output.code
        }
        Err(failure) => {
            let _ = writeln!(err, "{}", failure.diagnostic());
            failure.code
        }
    }
}

fn load_fan(args: &FanArgs) -> Result<Fan, Failure> {
    let text = std::fs::read_to_string(&args.fan).map_err(|e| {
        Failure::new(EXIT_FAN, "fan_read", format!("cannot read {}: {e}", args.fan.display()))
            .with("path", json!(args.fan.display().to_string()))
    })?;
    Ok(Fan::from_json(&text)?)
}

fn parse_degree(text: &str) -> Result<DegreeVector, Failure> {
    DegreeVector::parse(text).map_err(|m| Failure::new(EXIT_DEGREE, "degree_parse", m))
}

fn emit(format: Format, json: Value, table: impl FnOnce() -> String) -> Output {
    Output::ok(match format {
        Format::Json => format!("{json}\n"),
        Format::Table => table(),
    })
}

fn table_lines(t: &WeightedBettiTable) -> String {
    let mut s = String::from("degree  weight  dim\n");
    for (i, w, d) in t.entries() {
        s.push_str(&format!("{i:>6}  {w:>6}  {d}\n"));
    }
    s
}

fn entries_json(t: &WeightedBettiTable) -> Value {
    Value::Array(t.entries().map(|(i, w, d)| json!([i, w, d])).collect())
}

fn polynomial_json(p: &IntPolynomial) -> Value {
    let terms: Map<String, Value> = p.terms().map(|(e, c)| (e.to_string(), json!(c))).collect();
    Value::Object(terms)
}

fn census_failure(e: Error) -> Failure {
    match e {
        Error::Unsupported(m) => Failure::new(EXIT_ASSUMPTIONS, "assumptions_unmet", m),
        other => other.into(),
    }
}

fn census_options(c: &CensusArgs) -> CensusOptions {
    CensusOptions {
        budget: c.budget,
        workers: c.workers,
    }
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::FanValidate(args) => {
            let fan = load_fan(&args)?;
            let r = validate_fan(&fan);
            let json = json!({
                "complete": r.complete,
                "rank": fan.rank(),
                "rays": fan.num_rays(),
                "simplicial": r.simplicial,
                "smooth": r.smooth,
            });
            Ok(emit(args.format, json, || {
                format!(
                    "rank {}, {} rays, {} maximal cones\nsimplicial  {}\ncomplete    {}\nsmooth      {}\n",
                    fan.rank(),
                    fan.num_rays(),
                    fan.max_cones().len(),
                    r.simplicial,
                    r.complete,
                    r.smooth
                )
            }))
        }
        Command::FanPrimitives(args) => {
            let fan = load_fan(&args)?;
            let pcs = primitive_collections(&fan)?;
            let json = json!({ "primitive_collections": pcs.collections });
            Ok(emit(args.format, json, || {
                pcs.iter()
                    .map(|c| {
                        let items: Vec<String> = c.iter().map(usize::to_string).collect();
                        format!("{{{}}}\n", items.join(", "))
                    })
                    .collect()
            }))
        }
        Command::FanClassGroup(args) => {
            let fan = load_fan(&args)?;
            let cl = class_group(&fan)?;
            let json = json!({ "free_rank": cl.free_rank, "torsion": cl.torsion });
            Ok(emit(args.format, json, || {
                let mut parts = vec![format!("Z^{}", cl.free_rank)];
                parts.extend(cl.torsion.iter().map(|t| format!("Z/{t}")));
                format!("{}\n", parts.join(" + "))
            }))
        }
        Command::TargetBetti(args) => {
            let fan = load_fan(&args)?;
            let t = target_betti(&fan)?;
            let json = json!({ "entries": entries_json(&t), "total": t.total() });
            Ok(emit(args.format, json, || table_lines(&t)))
        }
        Command::AmbientBetti(args) => {
            let fan = load_fan(&args.fan)?;
            let d = parse_degree(&args.degree)?;
            let t = ambient_betti(&fan, &d, args.genus)?;
            let dim = ambient_dimension(&fan, &d, args.genus)?;
            let json = json!({ "dimension": dim, "entries": entries_json(&t) });
            Ok(emit(args.fan.format, json, || {
                format!("dimension {dim}\n{}", table_lines(&t))
            }))
        }
        Command::ModuliBetti(args) => {
            let fan = load_fan(&args.fan)?;
            let d = parse_degree(&args.degree)?;
            let m = if args.genus == 0 {
                genus0_table(&fan, &d)?
            } else {
                genus_g_stable_table(&fan, &d, args.genus)?
            };
            Ok(emit(args.fan.format, m.to_json(), || {
                let mut s = format!("dimension {}\n", m.dimension);
                if let Some(n0) = m.stable_bound {
                    s.push_str(&format!("stable through total degree {n0}; entries are upper bounds\n"));
                }
                s + &table_lines(&m.table)
            }))
        }
        Command::ModuliCount { args, check, census } => {
            let fan = load_fan(&args.fan)?;
            let d = parse_degree(&args.degree)?;
            if args.genus > 0 {
                return Err(Failure::new(
                    EXIT_OTHER,
                    "unsupported",
                    "point-count polynomials are only available in genus 0",
                ));
            }
            let m = genus0_table(&fan, &d)?;
            let p = point_count_polynomial(&m)?;
            let mut obj = Map::new();
            obj.insert("polynomial".into(), polynomial_json(&p));
            let mut code = EXIT_OK;
            let mut check_line = String::new();
            if let Some(q) = check {
                require_census_assumptions(&fan).map_err(census_failure)?;
                let c = count_points(&fan, &d, q, census_options(&census)).map_err(census_failure)?;
                let oracle = c.quotient.expect("assumptions checked") as i128;
                let predicted = p.eval(i128::from(q))?;
                let agree = oracle == predicted;
                if !agree {
                    code = EXIT_MISMATCH;
                }
                obj.insert(
                    "check".into(),
                    json!({ "agree": agree, "oracle": oracle as u64, "polynomial": predicted as i64, "q": q }),
                );
                check_line = format!(
                    "q = {q}: polynomial {predicted}, census {oracle}, {}\n",
                    if agree { "agree" } else { "MISMATCH" }
                );
            }
            let mut out = emit(args.fan.format, Value::Object(obj), || format!("{p}\n{check_line}"));
            out.code = code;
            Ok(out)
        }
        Command::OracleCount { args, q, census } => {
            let fan = load_fan(&args.fan)?;
            if args.genus > 0 {
                return Err(Failure::new(
                    EXIT_ASSUMPTIONS,
                    "assumptions_unmet",
                    "the census only enumerates morphisms from P^1",
                ));
            }
            require_census_assumptions(&fan).map_err(census_failure)?;
            let d = parse_degree(&args.degree)?;
            let c = count_points(&fan, &d, q, census_options(&census)).map_err(census_failure)?;
            let count = c.quotient.expect("assumptions checked");
            Ok(emit(args.fan.format, c.to_json(), || {
                format!(
                    "{count}\n({} basepoint-free tuples / {} torus points over F_{q})\n",
                    c.raw_tuples, c.torus_order
                )
            }))
        }
    }
}
