//! Command dispatch for the `tilting` binary.
//!
//! Exit status: 0 on success, 2 when a search stopped at its node budget,
//! 1 on any error. Results go to standard output, diagnostics to standard error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactlin::{Field, Fp, Rational};
use crate::gorenstein::{gorenstein_profile, iwanaga_check, minimal_tilting, verify_tilting};
use crate::homalg::min_inj_coresolution;
use crate::quiver_algebra::BoundQuiverAlgebra;
use crate::repmod::{BasicModule, Representation};
use crate::tilt_tau::{
    bijection_check, is_minimal_in_tiltn, sttilt_enumerate, tilt1_enumerate, tiltn_enumerate, DEFAULT_BUDGET,
};

use super::{parse_spec, AlgebraSpec, FamilyId, FieldSpec};

#[derive(Debug, Parser)]
#[command(name = "tilting", version, about = "Tilting theory of bound quiver algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub input: Input,
}

/// Options shared by every command.
#[derive(Debug, Args)]
pub struct Input {
    /// Built-in algebra, e.g. `nakayama_a:3`.
    #[arg(long, global = true, value_parser = parse_family)]
    pub family: Option<FamilyId>,
    /// Algebra specification file.
    #[arg(long, global = true)]
    pub spec: Option<PathBuf>,
    /// Also write the result as JSON to this file.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    /// Node budget for enumerations.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    /// `Q` or `Fp:p`; overrides the field line of a specification.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<FieldSpec>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gorenstein profile: the minimal injective coresolution of A and the
    /// projective dimensions of its terms.
    Analyze {
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Minimal injective coresolution of A through the given degree.
    Coresolve {
        #[arg(long)]
        degree: usize,
    },
    /// The minimum of tilt_n A built from the injective coresolution of A.
    MinTilt {
        #[arg(short = 'n')]
        n: usize,
        /// Skip the projective dimension hypotheses.
        #[arg(long)]
        force: bool,
    },
    /// Enumerate tilting modules or support tau-tilting pairs.
    Enum {
        #[command(subcommand)]
        what: EnumTarget,
    },
    /// The tilting order on tilt_n A.
    Order {
        #[arg(short = 'n')]
        n: usize,
        /// Write the Hasse diagram (with mutation edges dashed) as DOT.
        #[arg(long)]
        hasse: Option<PathBuf>,
    },
    /// Check that T -> T/T(e) maps tilt_1 A onto the support tau-tilting
    /// modules of A/(e), e the projective-injective idempotent.
    Bijection,
    /// Compare id A, id A^op and the minimum tilting modules at level n.
    Iwanaga {
        #[arg(short = 'n')]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum EnumTarget {
    /// Tilting modules of projective dimension at most n.
    Tilt {
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
    },
    /// Basic support tau-tilting pairs.
    Sttilt {
        /// Write the mutation graph as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

fn parse_family(s: &str) -> std::result::Result<FamilyId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_field(s: &str) -> std::result::Result<FieldSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// What a command produced.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    /// A search stopped at the node budget.
    pub incomplete: bool,
    /// A check ran to the end and came out negative.
    pub failed: bool,
}

impl Outcome {
    fn new(text: String, json: Value) -> Self {
        Outcome { text, json, incomplete: false, failed: false }
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed {
            1
        } else if self.incomplete {
            2
        } else {
            0
        }
    }
}

/// Parses `args` (program name first), runs the command, prints, and
/// returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if let Some(path) = &cli.input.json {
                let body = serde_json::to_string_pretty(&out.json).expect("json values serialize");
                if let Err(e) = std::fs::write(path, body + "\n") {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 1;
                }
            }
            if out.incomplete {
                eprintln!("warning: node budget of {} exceeded, results are partial", cli.input.budget);
            }
            out.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

/// The algebra named by `--family` or `--spec`, with a display name.
pub fn load_spec(input: &Input) -> Result<(AlgebraSpec, String)> {
    match (&input.family, &input.spec) {
        (Some(f), None) => Ok((f.spec(), f.to_string())),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
            Ok((parse_spec(&text)?, path.display().to_string()))
        }
        _ => Err(Error::Invalid("give exactly one of --family and --spec".into())),
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let (spec, name) = load_spec(&cli.input)?;
    let field = cli.input.field.unwrap_or(spec.field);
    macro_rules! primes {
        ($($p:literal),*) => {
            match field {
                FieldSpec::Rationals => run_over::<Rational>(cli, &spec, &name),
                $(FieldSpec::Prime($p) => run_over::<Fp<$p>>(cli, &spec, &name),)*
                FieldSpec::Prime(p) => Err(Error::Invalid(format!(
                    "prime {p} not built in; available: {}",
                    [$($p),*].map(|p: u64| p.to_string()).join(", ")
                ))),
            }
        };
    }
    primes!(2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 101, 1009, 32003, 65521, 2147483647)
}

fn run_over<F: Field>(cli: &Cli, spec: &AlgebraSpec, name: &str) -> Result<Outcome> {
    let alg: BoundQuiverAlgebra<F> = spec.build()?;
    let budget = cli.input.budget;
    let header = format!(
        "# {name} over {}: {} {}, dimension {}\n",
        F::field_name(),
        alg.num_vertices(),
        if alg.num_vertices() == 1 { "vertex" } else { "vertices" },
        alg.dim()
    );
    let mut out = match &cli.command {
        Command::Analyze { depth } => analyze(&alg, *depth),
        Command::Coresolve { degree } => coresolve(&alg, *degree),
        Command::MinTilt { n, force } => min_tilt(&alg, *n, *force),
        Command::Enum { what: EnumTarget::Tilt { n } } => enum_tilt(&alg, *n, budget),
        Command::Enum { what: EnumTarget::Sttilt { dot } } => enum_sttilt(&alg, budget, dot.as_ref()),
        Command::Order { n, hasse } => order(&alg, *n, budget, hasse.as_ref()),
        Command::Bijection => bijection(&alg, budget),
        Command::Iwanaga { n } => iwanaga(&alg, *n),
    }?;
    out.text.insert_str(0, &header);
    out.json["algebra"] = json!({ "name": name, "field": F::field_name(), "vertices": alg.num_vertices(), "dim": alg.dim() });
    Ok(out)
}

fn dimvec(d: &[usize]) -> String {
    format!("({})", d.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
}

fn basic_label<F: Field>(t: &BasicModule<F>) -> String {
    if t.is_empty() {
        return "0".into();
    }
    t.dimvecs().iter().map(|d| dimvec(d)).collect::<Vec<_>>().join(" + ")
}

fn injective_sum_label<F: Field>(alg: &BoundQuiverAlgebra<F>, vs: &[usize]) -> String {
    if vs.is_empty() {
        return "0".into();
    }
    vs.iter().map(|&v| format!("I({})", alg.quiver().vertex_label(v))).collect::<Vec<_>>().join(" + ")
}

fn write_file(path: &PathBuf, body: &str) -> Result<()> {
    std::fs::write(path, body).map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))
}

fn analyze<F: Field>(alg: &BoundQuiverAlgebra<F>, depth: usize) -> Result<Outcome> {
    let p = gorenstein_profile(alg, depth, depth.max(alg.num_vertices()));
    Ok(Outcome::new(p.table(alg), p.to_json(alg)))
}

fn coresolve<F: Field>(alg: &BoundQuiverAlgebra<F>, degree: usize) -> Result<Outcome> {
    let res = min_inj_coresolution(&Representation::regular(alg), degree);
    let mut line = String::from("0 -> A");
    for vs in &res.vertices {
        let _ = write!(line, " -> {}", injective_sum_label(alg, vs));
    }
    line.push_str(if res.is_finite() { " -> 0\n" } else { " -> ...\n" });
    let mut text = line;
    text.push_str("k\tI^k\tdims\n");
    for (k, (t, vs)) in res.terms.iter().zip(&res.vertices).enumerate() {
        let _ = writeln!(text, "{k}\t{}\t{}", injective_sum_label(alg, vs), dimvec(t.dims()));
    }
    match res.length() {
        Some(l) => {
            let _ = writeln!(text, "injective dimension {l}");
        }
        None => {
            let _ = writeln!(text, "not finished through degree {degree}");
        }
    }
    Ok(Outcome::new(text, res.to_json()))
}

fn min_tilt<F: Field>(alg: &BoundQuiverAlgebra<F>, n: usize, force: bool) -> Result<Outcome> {
    let t = minimal_tilting(alg, n, force)?;
    let cert = verify_tilting(&t, n)?;
    let minimal = cert.is_tilting() && is_minimal_in_tiltn(&t, n)?;
    let yes = |b: bool| if b { "yes" } else { "no" };
    let mut text = format!("T_{n} = {}\n", basic_label(&t));
    let _ = writeln!(text, "pd {}, tilting: {}, minimal in tilt_{n}: {}", cert.pd, yes(cert.is_tilting()), yes(minimal));
    if let Some(f) = &cert.failure {
        let _ = writeln!(text, "verification failed: {f:?}");
    }
    let json = json!({
        "n": n,
        "summands": t.dimvecs(),
        "pd": cert.pd.to_string(),
        "tilting": cert.is_tilting(),
        "minimal": minimal,
    });
    let mut out = Outcome::new(text, json);
    out.failed = !cert.is_tilting();
    Ok(out)
}

fn enum_tilt<F: Field>(alg: &BoundQuiverAlgebra<F>, n: usize, budget: usize) -> Result<Outcome> {
    let mut text = String::new();
    let (labels, json, complete, scope) = if n == 1 {
        let t = tilt1_enumerate(alg, budget)?;
        let labels: Vec<String> = t.records.iter().map(|r| r.label()).collect();
        let json = json!({
            "n": 1,
            "complete": t.complete,
            "count": t.records.len(),
            "modules": t.records.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        });
        (labels, json, t.complete, "")
    } else {
        let g = tiltn_enumerate(alg, n, budget)?.canonicalize();
        let labels: Vec<String> = (0..g.len()).map(|i| format!("{}\tpd {}", g.label(i), g.nodes[i].pd.unwrap_or(0))).collect();
        (labels, g.to_json(), g.complete, ", component of A")
    };
    for l in &labels {
        let _ = writeln!(text, "{l}");
    }
    let status = if complete { "" } else { ", budget exceeded" };
    let _ = writeln!(text, "{} tilting modules in tilt_{n}{scope}{status}", labels.len());
    let mut out = Outcome::new(text, json);
    out.incomplete = !complete;
    Ok(out)
}

fn enum_sttilt<F: Field>(alg: &BoundQuiverAlgebra<F>, budget: usize, dot: Option<&PathBuf>) -> Result<Outcome> {
    let g = sttilt_enumerate(alg, budget)?.canonicalize();
    let mut text = String::new();
    for i in 0..g.len() {
        let _ = writeln!(text, "{}", g.label(i));
    }
    let status = if g.complete { "" } else { ", budget exceeded" };
    let _ = writeln!(text, "{} support tau-tilting pairs{status}", g.len());
    if let Some(path) = dot {
        write_file(path, &g.to_dot())?;
    }
    let mut out = Outcome::new(text, g.to_json());
    out.incomplete = !g.complete;
    Ok(out)
}

fn order<F: Field>(alg: &BoundQuiverAlgebra<F>, n: usize, budget: usize, hasse: Option<&PathBuf>) -> Result<Outcome> {
    let g = tiltn_enumerate(alg, n, budget)?.canonicalize();
    let mut text = String::new();
    for i in 0..g.len() {
        let _ = writeln!(text, "{i}\t{}", g.label(i));
    }
    for (a, b) in g.hasse() {
        let _ = writeln!(text, "{a} > {b}");
    }
    match g.minimum() {
        Some(m) => {
            let _ = writeln!(text, "minimum {m}");
        }
        None => text.push_str("no minimum among the listed modules\n"),
    }
    if let Some(path) = hasse {
        write_file(path, &g.to_dot())?;
    }
    let mut out = Outcome::new(text, g.to_json());
    out.json["hasse"] = json!(g.hasse());
    out.json["minimum"] = json!(g.minimum());
    out.incomplete = !g.complete;
    Ok(out)
}

fn bijection<F: Field>(alg: &BoundQuiverAlgebra<F>, budget: usize) -> Result<Outcome> {
    let r = match bijection_check(alg, budget) {
        Err(Error::IncompleteEnumeration(b)) => {
            let mut out = Outcome::new(format!("enumeration stopped at the budget of {b} nodes\n"), json!({ "complete": false }));
            out.incomplete = true;
            return Ok(out);
        }
        other => other?,
    };
    let q = alg.quiver();
    let removed: Vec<&str> = r.removed.iter().map(|&v| q.vertex_label(v)).collect();
    let mut text = format!("e at vertices {}; eA faithful: {}\n", removed.join(", "), if r.faithful { "yes" } else { "no" });
    for (t, j) in r.tilt.iter().zip(&r.images) {
        let image = j.map_or("(no match)".to_string(), |j| r.sttilt[j].clone());
        let _ = writeln!(text, "{t}  |->  {image}");
    }
    let _ = writeln!(text, "{}", r.summary());
    let mut out = Outcome::new(text, r.to_json());
    out.failed = !r.is_bijection();
    Ok(out)
}

fn iwanaga<F: Field>(alg: &BoundQuiverAlgebra<F>, n: usize) -> Result<Outcome> {
    let r = iwanaga_check(alg, n)?;
    let yes = |b: bool| if b { "yes" } else { "no" };
    let dv = |d: &Option<Vec<Vec<usize>>>| match d {
        Some(d) => d.iter().map(|v| dimvec(v)).collect::<Vec<_>>().join(" + "),
        None => "none".to_string(),
    };
    let mut text = String::new();
    let _ = writeln!(text, "id A = {}, id A^op = {}", r.id_left, r.id_right);
    let _ = writeln!(text, "Gorenstein in degrees below {} (checked {})", r.gorenstein_depth, r.depth_checked);
    let _ = writeln!(text, "id A = id A^op <= {n}: {}", yes(r.iwanaga_gorenstein));
    let _ = writeln!(text, "id A <= {n}: {}", yes(r.left_bounded));
    let _ = writeln!(text, "id A^op <= {n}: {}", yes(r.right_bounded));
    let _ = writeln!(text, "DA in tilt_{n} A: {}", yes(r.dual_tilting_left));
    let _ = writeln!(text, "DA in tilt_{n} A^op: {}", yes(r.dual_tilting_right));
    let _ = writeln!(text, "minimum of tilt_{n} A: {}", dv(&r.min_tilting_left));
    let _ = writeln!(text, "minimum of tilt_{n} A^op: {}", dv(&r.min_tilting_right));
    let _ = writeln!(text, "conditions agree: {}", yes(r.consistent()));
    Ok(Outcome::new(text, r.to_json()))
}
