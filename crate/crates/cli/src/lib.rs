//! Command-line front end: reads a graph document, runs one computation and
//! prints canonical text or a JSON envelope.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use oriented_ideals::covers;
use oriented_ideals::edge_ideals::{self, edge_ideal};
use oriented_ideals::invariants;
use oriented_ideals::symbolic::{self, Family};
use oriented_ideals::{Error, MonomialIdeal, WeightedOrientedGraph};

pub mod suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Directory holding the bundled graph fixtures and `suite.json`.
pub fn default_fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

#[derive(Debug, Parser)]
#[command(name = "oriented-ideals", version, about = "Edge ideals of weighted oriented graphs")]
pub struct Cli {
    /// Graph document (JSON).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Stop at the first failed assertion instead of reporting all of them.
    #[arg(long, global = true)]
    pub fail_fast: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Unicyclic,
    Complete,
    #[value(name = "clique_sum", alias = "clique-sum")]
    CliqueSum,
}

impl From<FamilyKind> for Family {
    fn from(k: FamilyKind) -> Family {
        match k {
            FamilyKind::Unicyclic => Family::Unicyclic,
            FamilyKind::Complete => Family::Complete,
            FamilyKind::CliqueSum => Family::CliqueSum,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegularityKind {
    Ordinary,
    Symbolic,
    Quotient,
}

fn positive() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(1..)
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Strong vertex covers with their L1/L2/L3 partition.
    Covers {
        /// List every vertex cover, not only the strong ones.
        #[arg(long)]
        all: bool,
    },
    /// Irreducible decomposition of the edge ideal.
    Decompose,
    /// The m-th symbolic power.
    SymbolicPower {
        #[arg(long, value_parser = positive())]
        m: u32,
    },
    /// The s-th ordinary power.
    Power {
        #[arg(long, value_parser = positive())]
        s: u32,
    },
    /// Whether I^(m) = I^m for m = 1..=max-m.
    EqualityCheck {
        #[arg(long, value_parser = positive())]
        max_m: u32,
    },
    /// Symbolic power from a family closed form, checked against the general one.
    Family {
        #[arg(long, value_enum)]
        kind: FamilyKind,
        #[arg(long, value_parser = positive())]
        s: u32,
    },
    /// Initial degrees of symbolic and ordinary powers.
    AlphaTable {
        #[arg(long, value_parser = positive())]
        max_s: u32,
    },
    /// Bracket for the Waldschmidt constant.
    Waldschmidt {
        #[arg(long, value_parser = positive())]
        max_s: u32,
    },
    /// Castelnuovo-Mumford regularity of a power, symbolic power, or their quotient.
    Regularity {
        #[arg(long, value_parser = positive())]
        power: u32,
        #[arg(long, value_enum)]
        kind: RegularityKind,
    },
    /// Run the bundled verification suite.
    VerifyPaper {
        /// Directory with `suite.json` and the graph documents it names.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Covers { .. } => "covers",
            Command::Decompose => "decompose",
            Command::SymbolicPower { .. } => "symbolic-power",
            Command::Power { .. } => "power",
            Command::EqualityCheck { .. } => "equality-check",
            Command::Family { .. } => "family",
            Command::AlphaTable { .. } => "alpha-table",
            Command::Waldschmidt { .. } => "waldschmidt",
            Command::Regularity { .. } => "regularity",
            Command::VerifyPaper { .. } => "verify-paper",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assertion {
    pub claim: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl Assertion {
    pub fn pass(claim: impl Into<String>) -> Self {
        Assertion {
            claim: claim.into(),
            passed: true,
            detail: None,
        }
    }

    pub fn fail(claim: impl Into<String>, detail: impl Into<String>) -> Self {
        Assertion {
            claim: claim.into(),
            passed: false,
            detail: Some(detail.into()),
        }
    }

    fn to_json(&self) -> Value {
        let mut v = json!({
            "claim": self.claim,
            "status": if self.passed { "pass" } else { "fail" },
        });
        if let Some(d) = &self.detail {
            v["detail"] = json!(d);
        }
        v
    }

    fn line(&self) -> String {
        match &self.detail {
            Some(d) if !self.passed => format!("FAIL {}: {d}", self.claim),
            _ => format!("{} {}", if self.passed { "PASS" } else { "FAIL" }, self.claim),
        }
    }
}

/// What a subcommand produced.
#[derive(Debug, Default)]
pub struct Outcome {
    pub text: String,
    pub result: Value,
    pub assertions: Vec<Assertion>,
}

/// Failure that prevents a subcommand from producing a result.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Library(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Library(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Library(e) => write!(f, "{e}"),
        }
    }
}

pub fn load_graph(path: &Path) -> Result<WeightedOrientedGraph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(WeightedOrientedGraph::from_json(&text)?)
}

pub fn ideal_text(g: &WeightedOrientedGraph, i: &MonomialIdeal) -> String {
    i.display(g.names()).to_string()
}

/// Runs one parsed invocation, writing the rendered output to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let graph = match &cli.command {
        Command::VerifyPaper { .. } => None,
        _ => {
            let Some(path) = &cli.input else {
                let _ = writeln!(err, "error: --input is required for {}", cli.command.name());
                return EXIT_USAGE;
            };
            match load_graph(path) {
                Ok(g) => Some(g),
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_USAGE;
                }
            }
        }
    };

    let outcome = match dispatch(cli, graph.as_ref()) {
        Ok(o) => o,
        Err(CliError::Library(Error::IdentityFailure { claim, detail })) => Outcome {
            text: String::new(),
            result: Value::Null,
            assertions: vec![Assertion::fail(claim, detail)],
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };

    let rendered = match cli.format {
        Format::Text => {
            let mut s = outcome.text.clone();
            for a in &outcome.assertions {
                let _ = writeln!(s, "{}", a.line());
            }
            s
        }
        Format::Json => {
            let envelope = json!({
                "command": cli.command.name(),
                "graph": graph.as_ref().map(WeightedOrientedGraph::to_json),
                "result": outcome.result,
                "assertions": outcome.assertions.iter().map(Assertion::to_json).collect::<Vec<_>>(),
            });
            let mut s = serde_json::to_string_pretty(&envelope).expect("JSON value serializes");
            s.push('\n');
            s
        }
    };
    if out.write_all(rendered.as_bytes()).is_err() {
        return EXIT_USAGE;
    }
    if outcome.assertions.iter().all(|a| a.passed) {
        EXIT_OK
    } else {
        EXIT_ASSERTION
    }
}

fn dispatch(cli: &Cli, graph: Option<&WeightedOrientedGraph>) -> Result<Outcome, CliError> {
    if let Command::VerifyPaper { fixtures } = &cli.command {
        let dir = fixtures.clone().unwrap_or_else(default_fixture_dir);
        return suite::run_suite(&dir, cli.fail_fast);
    }
    let g = graph.expect("graph loaded for graph commands");
    match &cli.command {
        Command::Covers { all } => cmd_covers(g, *all),
        Command::Decompose => cmd_decompose(g),
        Command::SymbolicPower { m } => cmd_symbolic_power(g, *m),
        Command::Power { s } => cmd_power(g, *s),
        Command::EqualityCheck { max_m } => cmd_equality(g, *max_m),
        Command::Family { kind, s } => cmd_family(g, (*kind).into(), *s),
        Command::AlphaTable { max_s } => cmd_alpha(g, *max_s),
        Command::Waldschmidt { max_s } => cmd_waldschmidt(g, *max_s),
        Command::Regularity { power, kind } => cmd_regularity(g, *power, *kind),
        Command::VerifyPaper { .. } => unreachable!("handled above"),
    }
}

fn cmd_covers(g: &WeightedOrientedGraph, all: bool) -> Result<Outcome, CliError> {
    let partitions = if all {
        covers::enumerate_covers(g, covers::DEFAULT_VERTEX_LIMIT)?
            .into_iter()
            .map(|c| covers::partition_cover(g, c))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        covers::enumerate_strong_covers(g)?
    };
    let mut text = format!(
        "{} {}\n",
        partitions.len(),
        if all { "vertex covers" } else { "strong covers" }
    );
    for p in &partitions {
        let mut flags = Vec::new();
        if p.is_minimal {
            flags.push("minimal");
        }
        if p.is_strong {
            flags.push("strong");
        }
        let _ = writeln!(
            text,
            "{}  L1={} L2={} L3={}  {}",
            g.format_set(p.cover),
            g.format_set(p.l1),
            g.format_set(p.l2),
            g.format_set(p.l3),
            flags.join(" ")
        );
    }
    let mut assertions = Vec::new();
    if g.v_plus_sinks_check() {
        let claim = "strong covers are minimal when weighted vertices are sinks";
        let strong = if all {
            covers::enumerate_strong_covers(g)?
        } else {
            partitions.clone()
        };
        assertions.push(match strong.iter().find(|p| !p.is_minimal) {
            None => Assertion::pass(claim),
            Some(p) => Assertion::fail(claim, format!("{} is not minimal", g.format_set(p.cover))),
        });
    }
    let records: Vec<_> = partitions.iter().map(|p| p.record(g)).collect();
    Ok(Outcome {
        text,
        result: json!({ "covers": records }),
        assertions,
    })
}

fn cmd_decompose(g: &WeightedOrientedGraph) -> Result<Outcome, CliError> {
    let d = edge_ideals::irreducible_decomposition(g)?;
    let mut text = format!("I(D) = {}\n", ideal_text(g, &edge_ideal(g)));
    let _ = writeln!(text, "{} irreducible components", d.components.len());
    let components: Vec<Value> = d
        .components
        .iter()
        .map(|c| {
            let _ = writeln!(text, "{}: {}", g.format_set(c.cover()), ideal_text(g, &c.ideal));
            json!({ "cover": g.set_names(c.cover()), "ideal": ideal_text(g, &c.ideal) })
        })
        .collect();
    let irredundant = match edge_ideals::find_redundant_component(&d)? {
        None => Assertion::pass("no component can be dropped"),
        Some(i) => Assertion::fail(
            "no component can be dropped",
            format!("{} is redundant", g.format_set(d.components[i].cover())),
        ),
    };
    Ok(Outcome {
        text,
        result: json!({
            "edge_ideal": ideal_text(g, &edge_ideal(g)),
            "components": components,
            "intersection": ideal_text(g, &d.intersection),
        }),
        assertions: vec![
            Assertion::pass("the intersection of the components equals the edge ideal"),
            irredundant,
        ],
    })
}

fn cmd_symbolic_power(g: &WeightedOrientedGraph, m: u32) -> Result<Outcome, CliError> {
    let case = symbolic::classify(g)?;
    let p = symbolic::symbolic_power(g, m)?;
    Ok(Outcome {
        text: format!("case: {}\nI^({m}) = {}\n", case.tag(), ideal_text(g, &p)),
        result: json!({ "case": case.tag(), "m": m, "ideal": ideal_text(g, &p) }),
        assertions: Vec::new(),
    })
}

fn cmd_power(g: &WeightedOrientedGraph, s: u32) -> Result<Outcome, CliError> {
    let p = edge_ideal(g).power(s);
    Ok(Outcome {
        text: format!("I^{s} = {}\n", ideal_text(g, &p)),
        result: json!({ "s": s, "ideal": ideal_text(g, &p) }),
        assertions: Vec::new(),
    })
}

fn cmd_equality(g: &WeightedOrientedGraph, max_m: u32) -> Result<Outcome, CliError> {
    let rows = symbolic::equality_pattern(g, max_m)?;
    let mut text = String::from("m equal\n");
    for (i, eq) in rows.iter().enumerate() {
        let _ = writeln!(text, "{} {eq}", i + 1);
    }
    let json_rows: Vec<Value> = rows
        .iter()
        .enumerate()
        .map(|(i, eq)| json!({ "m": i + 1, "equal": eq }))
        .collect();
    Ok(Outcome {
        text,
        result: json!({ "rows": json_rows }),
        assertions: Vec::new(),
    })
}

fn cmd_family(g: &WeightedOrientedGraph, family: Family, s: u32) -> Result<Outcome, CliError> {
    let p = symbolic::family_symbolic_power(g, family, s)?;
    Ok(Outcome {
        text: format!("family: {}\nI^({s}) = {}\n", family.name(), ideal_text(g, &p)),
        result: json!({ "family": family.name(), "s": s, "ideal": ideal_text(g, &p) }),
        assertions: vec![Assertion::pass(format!(
            "{} closed form equals the intersection of component powers",
            family.name()
        ))],
    })
}

fn alpha_rows(table: &invariants::AlphaTable) -> (String, Value) {
    let mut text = String::from("s alpha_symbolic alpha_ordinary predicted\n");
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|r| {
            let predicted = r.predicted.map_or_else(|| "-".to_string(), |p| p.to_string());
            let _ = writeln!(
                text,
                "{} {} {} {predicted}",
                r.s, r.alpha_symbolic, r.alpha_ordinary
            );
            json!({
                "s": r.s,
                "alpha_symbolic": r.alpha_symbolic,
                "alpha_ordinary": r.alpha_ordinary,
                "predicted": r.predicted,
            })
        })
        .collect();
    (text, Value::Array(rows))
}

fn cmd_alpha(g: &WeightedOrientedGraph, max_s: u32) -> Result<Outcome, CliError> {
    let table = invariants::alpha_table(g, max_s)?;
    let (text, rows) = alpha_rows(&table);
    let family = table.family.as_ref().map(|f| f.family().name());
    let mut assertions = vec![
        Assertion::pass("alpha(I^(s)) <= alpha(I^s)"),
        Assertion::pass("alpha(I^(s)) is subadditive"),
    ];
    if let Some(f) = family {
        assertions.push(Assertion::pass(format!("{f} closed form for alpha(I^(s))")));
    }
    Ok(Outcome {
        text,
        result: json!({ "family": family, "rows": rows }),
        assertions,
    })
}

fn cmd_waldschmidt(g: &WeightedOrientedGraph, max_s: u32) -> Result<Outcome, CliError> {
    let w = invariants::waldschmidt_estimate(g, max_s)?;
    let closed = w.closed_form.map(|c| c.to_string());
    let mut text = format!(
        "lower = {}\nupper = {}\nbig height = {}\n",
        w.lower, w.upper, w.big_height
    );
    if let Some(c) = &closed {
        let _ = writeln!(text, "closed form = {c}");
    }
    let mut assertions = vec![Assertion::pass("alpha(I^(s)) is subadditive")];
    if closed.is_some() {
        assertions.push(Assertion::pass("the closed form lies in [lower, upper]"));
    }
    Ok(Outcome {
        text,
        result: json!({
            "lower": w.lower.to_string(),
            "upper": w.upper.to_string(),
            "closed_form": closed,
            "big_height": w.big_height,
            "max_s": max_s,
        }),
        assertions,
    })
}

fn cmd_regularity(
    g: &WeightedOrientedGraph,
    s: u32,
    kind: RegularityKind,
) -> Result<Outcome, CliError> {
    let field = json!({ "coefficients": "QQ", "characteristic": 0 });
    match kind {
        RegularityKind::Ordinary | RegularityKind::Symbolic => {
            let (label, ideal) = if kind == RegularityKind::Ordinary {
                (format!("I^{s}"), edge_ideal(g).power(s))
            } else {
                (format!("I^({s})"), symbolic::symbolic_power(g, s)?)
            };
            let table = invariants::betti_table(&ideal)?;
            let reg = table.regularity().ok_or(Error::ZeroIdeal)?;
            let mut text = format!("reg {label} = {reg}\n");
            let graded: Vec<Value> = table
                .graded()
                .iter()
                .map(|(&(i, d), &b)| {
                    let _ = writeln!(text, "beta_{i},{d} = {b}");
                    json!({ "i": i, "degree": d, "rank": b })
                })
                .collect();
            let mut assertions = Vec::new();
            if kind == RegularityKind::Symbolic && invariants::odd_cycle_data(g).is_ok() {
                let r = invariants::reg_comparison(g, s)?;
                let _ = writeln!(
                    text,
                    "reg I^{s} = {}",
                    r.reg_ordinary.expect("comparison fills both")
                );
                assertions.push(Assertion::pass("reg I^(s) <= reg I^s"));
                let data = invariants::odd_cycle_data(g)?;
                if data.weighted_count == 1 {
                    assertions.push(Assertion::pass("reg I^(s) = reg I^s with one weighted vertex"));
                }
            }
            Ok(Outcome {
                text,
                result: json!({
                    "kind": if kind == RegularityKind::Ordinary { "ordinary" } else { "symbolic" },
                    "s": s,
                    "regularity": reg,
                    "graded_betti": graded,
                    "field": field,
                }),
                assertions,
            })
        }
        RegularityKind::Quotient => {
            let r = invariants::reg_quotient(g, s)?;
            let witness = r.witness_monomial.as_ref().map(|m| m.display(g.names()).to_string());
            let show = |v: Option<u64>| v.map_or_else(|| "undefined".to_string(), |x| x.to_string());
            let mut text = format!(
                "reg(I^({s})/I^{s}) = {}\nformula = {}\n",
                show(r.reg_quotient),
                show(r.formula_prediction)
            );
            if let Some(w) = &witness {
                let _ = writeln!(text, "witness = {w}");
            }
            let _ = writeln!(text, "search bound = {}", show(r.search_bound));
            let mut assertions = vec![Assertion::pass(
                "a multiplier of degree (k-1)w_v + w + 1 sends I^(s) into I^s",
            )];
            if r.formula_prediction.is_some() {
                assertions.push(Assertion::pass("enumerated regularity matches the formula"));
            }
            Ok(Outcome {
                text,
                result: json!({
                    "kind": "quotient",
                    "s": s,
                    "reg_quotient": r.reg_quotient,
                    "formula_prediction": r.formula_prediction,
                    "witness_monomial": witness,
                    "search_bound": r.search_bound,
                }),
                assertions,
            })
        }
    }
}
