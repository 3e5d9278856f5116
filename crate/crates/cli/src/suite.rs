//! The data-driven verification suite behind `verify-paper`.
//!
//! `suite.json` lists checks; each names a graph document in the same
//! directory and the expected outcome. New graphs and checks need no rebuild.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;
use serde_json::json;

use oriented_ideals::covers;
use oriented_ideals::edge_ideals::{self, edge_ideal};
use oriented_ideals::invariants;
use oriented_ideals::symbolic::{self, Family};
use oriented_ideals::{Error, MonomialIdeal, Monomial, WeightedOrientedGraph};

use crate::{ideal_text, load_graph, Assertion, CliError, Outcome};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Suite {
    pub checks: Vec<Entry>,
}

#[derive(Debug, Deserialize)]
pub struct Entry {
    pub claim: String,
    pub graph: String,
    #[serde(flatten)]
    pub check: Check,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum Check {
    EdgeIdeal {
        expected: String,
    },
    VertexKinds {
        expected: Vec<String>,
    },
    StrongCovers {
        count: usize,
        #[serde(default)]
        all_minimal: bool,
        #[serde(default)]
        all_covers: bool,
    },
    Decomposition {
        components: usize,
    },
    NaturalPartition {
        blocks: Vec<Vec<String>>,
        max_m: u32,
        expected: bool,
    },
    EqualityPattern {
        expected: Vec<bool>,
    },
    /// `I^(m) = I^power + (extra)`.
    SymbolicPowerSum {
        m: u32,
        power: u32,
        extra: Vec<String>,
    },
    PhiCommutes {
        max_k: u32,
    },
    FamilyPower {
        family: String,
        #[serde(default = "one")]
        min_s: u32,
        max_s: u32,
    },
    AlphaTable {
        expected: Vec<u64>,
    },
    Waldschmidt {
        max_s: u32,
        closed_form: String,
    },
    RegQuotient {
        s: u32,
        expected: Option<u64>,
    },
    MultiplierWitness {
        s: u32,
        t: u32,
        expected: String,
    },
    RegComparison {
        max_s: u32,
    },
}

fn one() -> u32 {
    1
}

type CheckResult = Result<(), String>;

fn expect_eq<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> CheckResult {
    if got == want {
        Ok(())
    } else {
        Err(format!("got {got:?}, expected {want:?}"))
    }
}

fn lib(e: Error) -> String {
    e.to_string()
}

fn run_check(g: &WeightedOrientedGraph, check: &Check) -> CheckResult {
    match check {
        Check::EdgeIdeal { expected } => {
            expect_eq(ideal_text(g, &edge_ideal(g)).as_str(), expected.as_str())
        }
        Check::VertexKinds { expected } => {
            let got: Vec<String> = g
                .classify_vertices()
                .iter()
                .map(|k| serde_json::to_value(k).expect("kind serializes"))
                .map(|v| v.as_str().unwrap_or_default().to_string())
                .collect();
            expect_eq(&got, expected)
        }
        Check::StrongCovers {
            count,
            all_minimal,
            all_covers,
        } => {
            let strong = covers::enumerate_strong_covers(g).map_err(lib)?;
            expect_eq(strong.len(), *count)?;
            if *all_minimal {
                if let Some(p) = strong.iter().find(|p| !p.is_minimal) {
                    return Err(format!("{} is strong but not minimal", g.format_set(p.cover)));
                }
            }
            if *all_covers {
                let every = covers::enumerate_covers(g, covers::DEFAULT_VERTEX_LIMIT).map_err(lib)?;
                expect_eq(every.len(), strong.len())?;
            }
            Ok(())
        }
        Check::Decomposition { components } => {
            let d = edge_ideals::irreducible_decomposition(g).map_err(lib)?;
            expect_eq(d.components.len(), *components)?;
            match edge_ideals::find_redundant_component(&d).map_err(lib)? {
                None => Ok(()),
                Some(i) => Err(format!(
                    "component {} is redundant",
                    g.format_set(d.components[i].cover())
                )),
            }
        }
        Check::NaturalPartition {
            blocks,
            max_m,
            expected,
        } => {
            let sets = blocks
                .iter()
                .map(|b| g.vertex_set(b))
                .collect::<Result<Vec<_>, _>>()
                .map_err(lib)?;
            let holds = symbolic::verify_natural_partition(g, &sets, *max_m).map_err(lib)?;
            expect_eq(holds, *expected)
        }
        Check::EqualityPattern { expected } => {
            let got = symbolic::equality_pattern(g, expected.len() as u32).map_err(lib)?;
            expect_eq(&got, expected)
        }
        Check::SymbolicPowerSum { m, power, extra } => {
            let gens = extra
                .iter()
                .map(|t| Monomial::parse(t, g.names()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(lib)?;
            let extra = MonomialIdeal::from_generators(g.vertex_count(), gens).map_err(lib)?;
            let want = edge_ideal(g).power(*power).add(&extra).map_err(lib)?;
            let got = symbolic::symbolic_power(g, *m).map_err(lib)?;
            expect_eq(ideal_text(g, &got), ideal_text(g, &want))
        }
        Check::PhiCommutes { max_k } => {
            for k in 1..=*max_k {
                symbolic::verify_phi_commutation(g, k).map_err(lib)?;
            }
            Ok(())
        }
        Check::FamilyPower {
            family,
            min_s,
            max_s,
        } => {
            let family = Family::parse(family).map_err(lib)?;
            for s in *min_s..=*max_s {
                symbolic::family_symbolic_power(g, family, s).map_err(lib)?;
            }
            Ok(())
        }
        Check::AlphaTable { expected } => {
            let table = invariants::alpha_table(g, expected.len() as u32).map_err(lib)?;
            let got: Vec<u64> = table.rows.iter().map(|r| r.alpha_symbolic).collect();
            expect_eq(&got, expected)?;
            if table.rows.iter().any(|r| r.predicted.is_none()) {
                return Err("no family closed form applied".into());
            }
            Ok(())
        }
        Check::Waldschmidt { max_s, closed_form } => {
            let w = invariants::waldschmidt_estimate(g, *max_s).map_err(lib)?;
            expect_eq(w.closed_form.map(|c| c.to_string()), Some(closed_form.clone()))
        }
        Check::RegQuotient { s, expected } => {
            let r = invariants::reg_quotient(g, *s).map_err(lib)?;
            expect_eq(r.reg_quotient, *expected)
        }
        Check::MultiplierWitness { s, t, expected } => {
            let w = invariants::multiplier_witness(g, *s, *t).map_err(lib)?;
            expect_eq(w.display(g.names()).to_string(), expected.clone())?;
            let sym = symbolic::symbolic_power(g, *s).map_err(lib)?;
            if !sym.contains_monomial(&w) {
                return Err(format!("{expected} is not in I^({s})"));
            }
            Ok(())
        }
        Check::RegComparison { max_s } => {
            for s in 1..=*max_s {
                invariants::reg_comparison(g, s).map_err(lib)?;
            }
            Ok(())
        }
    }
}

/// Runs every check in `dir/suite.json`. A check that errors counts as failed.
pub fn run_suite(dir: &Path, fail_fast: bool) -> Result<Outcome, CliError> {
    let path = dir.join("suite.json");
    let text = std::fs::read_to_string(&path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let suite: Suite = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("malformed {}: {e}", path.display())))?;

    let mut graphs: BTreeMap<&str, WeightedOrientedGraph> = BTreeMap::new();
    let mut assertions = Vec::new();
    for entry in &suite.checks {
        if !graphs.contains_key(entry.graph.as_str()) {
            graphs.insert(&entry.graph, load_graph(&dir.join(&entry.graph))?);
        }
        let g = &graphs[entry.graph.as_str()];
        let outcome = run_check(g, &entry.check);
        let failed = outcome.is_err();
        assertions.push(match outcome {
            Ok(()) => Assertion::pass(&entry.claim),
            Err(detail) => Assertion::fail(&entry.claim, detail),
        });
        if failed && fail_fast {
            break;
        }
    }
    let passed = assertions.iter().filter(|a| a.passed).count();
    let mut summary = String::new();
    let _ = writeln!(summary, "{passed}/{} checks passed", suite.checks.len());
    Ok(Outcome {
        text: summary,
        result: json!({
            "checks": suite.checks.len(),
            "run": assertions.len(),
            "passed": passed,
        }),
        assertions,
    })
}
