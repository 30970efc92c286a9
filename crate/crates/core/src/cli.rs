//! The `artin` command line: argument parsing, per-verb reports and the
//! composite `analyze` document.

use crate::arrangement::{milnor_data, realize, RealizationKind};
use crate::classify::{classify_bb, classify_raag};
use crate::cohomology::{bb_ring, raag_ring, Ambient};
use crate::complex::{flag_complex, simple_connectivity};
use crate::error::{Error, Result};
use crate::graph::{parse_graph, Graph};
use crate::presentation::{dicks_leary, dicks_leary_uncertified, raag_presentation, simplify};
use crate::resonance::{bb_resonance_with, obstruction_check, raag_resonance_with, ObstructionMode, SizeGuard};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "artin", version, about = "Invariants and Kähler-type decisions for right-angled Artin groups and their Bestvina-Brady kernels")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run every applicable verb and emit one composite report.
    Analyze(Source),
    /// Decide quasi-Kähler, Kähler and realizability questions.
    Classify {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Group::Bb)]
        group: Group,
        /// Add the certificate chain in prose.
        #[arg(long)]
        explain: bool,
    },
    /// First resonance variety and the isotropicity obstruction.
    Resonance {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Group::Bb)]
        group: Group,
        /// Enumerate subsets beyond 16 vertices.
        #[arg(long)]
        allow_large: bool,
    },
    /// A finite presentation of the group.
    Present {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Group::Bb)]
        group: Group,
        /// Simplify by Tietze moves, with an optional move budget.
        #[arg(long, value_name = "BUDGET", num_args = 0..=1, default_missing_value = "1000")]
        simplify: Option<usize>,
        /// Emit the kernel presentation even without a simple-connectivity
        /// certificate (marked uncertified).
        #[arg(long)]
        force: bool,
    },
    /// Cohomology ring dump in low degrees.
    Cohomology {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Group::Bb)]
        group: Group,
    },
    /// Explicit arrangement realization.
    Realize {
        #[command(flatten)]
        source: Source,
        /// Comma-separated exponents for the Milnor fiber, one per hyperplane.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        exponents: Option<Vec<i64>>,
    },
}

#[derive(Args, Debug)]
pub struct Source {
    /// Graph expression such as `Km(2,2,2)`.
    pub graph: Option<String>,
    /// Read the graph (edge list or expression) from a file instead.
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Group {
    Raag,
    Bb,
}

impl Group {
    fn ambient(self) -> Ambient {
        match self {
            Group::Raag => Ambient::Raag,
            Group::Bb => Ambient::Bb,
        }
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A verb's report in both renderings.
struct Report {
    json: Value,
    text: String,
}

fn status_of(e: &Error) -> i32 {
    if e.is_refusal() {
        2
    } else {
        1
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let status = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            if status == 0 {
                Outcome { status, stdout: rendered, stderr: String::new() }
            } else {
                Outcome { status, stdout: String::new(), stderr: rendered }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let source = match &cli.command {
        Command::Analyze(s) => s,
        Command::Classify { source, .. }
        | Command::Resonance { source, .. }
        | Command::Present { source, .. }
        | Command::Cohomology { source, .. }
        | Command::Realize { source, .. } => source,
    };
    let g = match load_graph(source) {
        Ok(g) => g,
        Err(e) => return failure(&e, source.format),
    };
    let report = match &cli.command {
        Command::Analyze(_) => Ok(analyze(&g)),
        Command::Classify { group, explain, .. } => Ok(classify_report(&g, *group, *explain)),
        Command::Resonance { group, allow_large, .. } => resonance_report(&g, *group, *allow_large),
        Command::Present { group, simplify, force, .. } => present_report(&g, *group, *simplify, *force),
        Command::Cohomology { group, .. } => cohomology_report(&g, *group),
        Command::Realize { exponents, .. } => realize_report(&g, exponents.as_deref()),
    };
    match report {
        Ok(r) => Outcome { status: 0, stdout: render(&r, source.format), stderr: String::new() },
        Err(e) => failure(&e, source.format),
    }
}

fn failure(e: &Error, format: Format) -> Outcome {
    let status = status_of(e);
    let stdout = match (format, e) {
        (Format::Json, Error::Refused(reason)) => pretty(&json!({ "refused": reason })),
        (Format::Json, e) => pretty(&json!({ "error": e.to_string() })),
        (Format::Text, e) => format!("{e}\n"),
    };
    Outcome { status, stdout, stderr: format!("artin: {e}\n") }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn render(r: &Report, format: Format) -> String {
    match format {
        Format::Json => pretty(&r.json),
        Format::Text => {
            let mut s = r.text.clone();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
    }
}

fn load_graph(source: &Source) -> Result<Graph> {
    let text = match (&source.graph, &source.file) {
        (Some(expr), None) => expr.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?,
        (Some(_), Some(_)) => return Err(Error::invalid("give either a graph expression or --file, not both")),
        (None, None) => return Err(Error::invalid("no graph given: pass an expression or --file")),
    };
    parse_graph(&text)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn graph_report(g: &Graph) -> Report {
    let c = flag_complex(g);
    let verdict = simple_connectivity(g);
    let f = c.f_vector();
    let json = json!({
        "vertices": g.labels(),
        "edges": g.edge_count(),
        "fVector": f,
        "connectivity": g.connectivity(),
        "simplyConnected": to_value(&verdict),
    });
    let text = format!(
        "graph: {} vertices, {} edges, vertex connectivity {}\nflag complex f-vector: {:?}\nsimply connected: {}",
        g.n(),
        g.edge_count(),
        g.connectivity(),
        f,
        verdict.label()
    );
    Report { json, text }
}

fn classify_report(g: &Graph, group: Group, explain: bool) -> Report {
    match group {
        Group::Raag => {
            let r = classify_raag(g);
            let text = match &r.structure {
                Some(s) => format!("G is quasi-Kähler: {s}"),
                None => "G is not quasi-Kähler: the graph is not complete multipartite".to_string(),
            };
            Report { json: to_value(&r), text }
        }
        Group::Bb => {
            let r = classify_bb(g);
            let mut json = to_value(&r);
            let explanation = r.explanation();
            if explain {
                json["explanation"] = json!(explanation);
            }
            let mut text = format!(
                "class: {}\nstructure: {}\nquasi-Kähler (quasi-projective): {}\nKähler (projective): {}\nKollár: {:?}",
                r.group_class.label(),
                r.structure,
                r.quasi_kahler,
                r.kahler,
                r.kollar
            );
            if explain {
                for line in explanation {
                    text.push_str(&format!("\n  {line}"));
                }
            }
            for note in &r.notes {
                text.push_str(&format!("\nnote: {note}"));
            }
            Report { json, text }
        }
    }
}

fn resonance_report(g: &Graph, group: Group, allow_large: bool) -> Result<Report> {
    let guard = if allow_large { SizeGuard::AllowLarge } else { SizeGuard::Bounded };
    let components = match group {
        Group::Raag => raag_resonance_with(g, guard)?,
        Group::Bb => bb_resonance_with(g, guard)?,
    };
    let qk = obstruction_check(&components, ObstructionMode::QuasiKahler);
    let k = obstruction_check(&components, ObstructionMode::Kahler);
    let reports: Vec<_> = components.iter().map(|c| c.report(g)).collect();
    let json = json!({
        "ambient": group.ambient().name(),
        "components": to_value(&reports),
        "obstruction": { "quasiKahler": to_value(&qk), "kahler": to_value(&k) },
    });
    let mut text = format!("R_1({}): {} component(s)", group.ambient().name(), reports.len());
    for r in &reports {
        text.push_str(&format!("\n  W = {{{}}}: dim {}, {:?}", r.w.join(","), r.dim, r.isotropicity));
    }
    text.push_str(&format!(
        "\nobstruction: quasi-Kähler {}, Kähler {}",
        if qk.pass { "pass" } else { "fail" },
        if k.pass { "pass" } else { "fail" }
    ));
    Ok(Report { json, text })
}

fn present_report(g: &Graph, group: Group, budget: Option<usize>, force: bool) -> Result<Report> {
    let (p, certified) = match group {
        Group::Raag => (raag_presentation(g), true),
        Group::Bb => match dicks_leary(g) {
            Ok(p) => (p, true),
            Err(e) if force && e.is_refusal() && g.is_connected() => (dicks_leary_uncertified(g), false),
            Err(e) => return Err(e),
        },
    };
    let p = match budget {
        Some(b) => simplify(&p, b),
        None => p,
    };
    let report = p.report();
    let json = json!({
        "group": group.ambient().name(),
        "certified": certified,
        "presentation": to_value(&report),
    });
    let mut text = String::new();
    if !certified {
        text.push_str("# uncertified: flag complex not known to be simply connected\n");
    }
    text.push_str(&p.to_string());
    Ok(Report { json, text })
}

fn cohomology_report(g: &Graph, group: Group) -> Result<Report> {
    let ring = match group {
        Group::Raag => raag_ring(g),
        Group::Bb => bb_ring(g)?,
    };
    let dump = ring.dump(g);
    let mut json = to_value(&dump);
    let mut text = format!("H^*({}) Betti numbers: {:?}", group.ambient().name(), ring.betti());
    if let Some(k) = ring.kernel_data() {
        let commutes = ring.diagram_commutes();
        let wedge = ring.wedge_iota_rank();
        json["checks"] = json!({
            "nuRank": k.nu_rank,
            "diagramCommutes": commutes,
            "wedgeIotaRank": wedge,
        });
        text.push_str(&format!(
            "\nrank of multiplication by nu: {}\nrestriction diagram commutes: {}",
            k.nu_rank, commutes
        ));
    }
    for (degree, basis) in dump.bases.iter().enumerate() {
        text.push_str(&format!("\nbasis of degree {degree}: {}", basis.join(" ")));
    }
    Ok(Report { json, text })
}

fn realize_report(g: &Graph, exponents: Option<&[i64]>) -> Result<Report> {
    let a = realize(g)?;
    let milnor = match exponents {
        Some(e) => Some(milnor_data(&a, e)?),
        None if a.kind == RealizationKind::MilnorFiberOfProduct => {
            Some(milnor_data(&a, &vec![1; a.hyperplanes.len()])?)
        }
        None => None,
    };
    let json = json!({ "realization": to_value(&a), "milnor": to_value(&milnor) });
    let mut text = format!(
        "{:?}: {}\nf = {}\ndegree {}, pi_1 = {}",
        a.kind, a.variety, a.polynomial, a.degree, a.fundamental_group
    );
    if let Some(m) = &milnor {
        text.push_str(&format!("\n{}", m.exact_sequence));
    }
    Ok(Report { json, text })
}

/// Every verb on the default (kernel) group; refusals are recorded per verb.
fn analyze(g: &Graph) -> Report {
    let mut json = serde_json::Map::new();
    let mut text = String::new();
    let mut push = |name: &str, r: Result<Report>| {
        let (value, body) = match r {
            Ok(r) => (r.json, r.text),
            Err(Error::Refused(reason)) => (json!({ "refused": reason }), format!("refused: {reason}")),
            Err(e) => (json!({ "error": e.to_string() }), format!("error: {e}")),
        };
        json.insert(name.to_string(), value);
        text.push_str(&format!("== {name}\n{body}\n"));
    };
    push("graph", Ok(graph_report(g)));
    push("classify", Ok(classify_report(g, Group::Bb, false)));
    push("resonance", resonance_report(g, Group::Bb, false));
    push("present", present_report(g, Group::Bb, None, false));
    push("cohomology", cohomology_report(g, Group::Bb));
    push("realize", realize_report(g, None));
    Report { json: Value::Object(json), text }
}
