//! Initial degrees of symbolic powers and Waldschmidt-constant brackets.

use num_rational::Ratio;

use crate::covers;
use crate::edge_ideals::edge_ideal;
use crate::error::{Error, Result};
use crate::graph::WeightedOrientedGraph;
use crate::symbolic::{self, FamilyShape};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlphaRow {
    pub s: u32,
    pub alpha_symbolic: u64,
    pub alpha_ordinary: u64,
    pub predicted: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaTable {
    pub rows: Vec<AlphaRow>,
    /// Family whose closed form filled `predicted`, if any.
    pub family: Option<FamilyShape>,
}

/// How the closed forms specialise for a given weighted graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Prediction {
    /// `2s - ⌊s / (n + 1)⌋`.
    OddCycleAvoided { half: u32 },
    /// `2s`.
    Doubling,
    /// `s + ⌈s / (n - 2)⌉`.
    Complete { order: u32 },
}

impl Prediction {
    fn alpha(self, s: u32) -> u64 {
        let s = u64::from(s);
        match self {
            Prediction::OddCycleAvoided { half } => 2 * s - s / (u64::from(half) + 1),
            Prediction::Doubling => 2 * s,
            Prediction::Complete { order } => s + s.div_ceil(u64::from(order) - 2),
        }
    }

    fn waldschmidt(self) -> Ratio<u64> {
        match self {
            Prediction::OddCycleAvoided { half } => {
                Ratio::new(2 * u64::from(half) + 1, u64::from(half) + 1)
            }
            Prediction::Doubling => Ratio::from_integer(2),
            Prediction::Complete { order } => {
                Ratio::new(u64::from(order) - 1, u64::from(order) - 2)
            }
        }
    }
}

fn prediction(g: &WeightedOrientedGraph) -> Option<(FamilyShape, Prediction)> {
    if !g.v_plus_sinks_check() {
        return None;
    }
    let v_plus = g.v_plus();
    let hits = |c: VertexSet| !c.is_disjoint(v_plus);
    let shape = symbolic::detect_family(g)?;
    let p = match shape {
        FamilyShape::Unicyclic { cycle, half } => {
            if hits(cycle) {
                Prediction::Doubling
            } else {
                Prediction::OddCycleAvoided { half }
            }
        }
        FamilyShape::Complete { order } => {
            if order < 3 || v_plus.len() != 1 {
                return None;
            }
            Prediction::Complete {
                order: order as u32,
            }
        }
        FamilyShape::CliqueSum {
            first,
            second,
            half,
            ..
        } => match (hits(first), hits(second)) {
            (true, true) => Prediction::Doubling,
            (true, false) | (false, true) => Prediction::OddCycleAvoided { half },
            (false, false) => return None,
        },
    };
    Some((shape, p))
}

/// `α(I^(s))` and `α(I^s)` for `s = 1..=s_max`, with the family closed form
/// where one applies. Disagreement with a closed form, `α(I^(s)) > α(I^s)`, or
/// a failure of subadditivity is an [`Error::IdentityFailure`].
pub fn alpha_table(g: &WeightedOrientedGraph, s_max: u32) -> Result<AlphaTable> {
    if s_max == 0 {
        return Err(Error::InvalidArgument("s_max must be positive".into()));
    }
    let ideal = edge_ideal(g);
    let base = ideal.alpha()?;
    let pred = prediction(g);
    let mut rows = Vec::with_capacity(s_max as usize);
    for s in 1..=s_max {
        let alpha_symbolic = symbolic::symbolic_power(g, s)?.alpha()?;
        // α is additive on products of monomial ideals.
        let alpha_ordinary = base * u64::from(s);
        let predicted = pred.as_ref().map(|(_, p)| p.alpha(s));
        if alpha_symbolic > alpha_ordinary {
            return Err(Error::identity(
                "symbolic powers contain ordinary powers",
                format!("s = {s}: α(I^(s)) = {alpha_symbolic} > α(I^s) = {alpha_ordinary}"),
            ));
        }
        if let Some(p) = predicted {
            if p != alpha_symbolic {
                return Err(Error::identity(
                    "closed form for α of symbolic powers",
                    format!("s = {s}: computed {alpha_symbolic}, predicted {p}"),
                ));
            }
        }
        rows.push(AlphaRow {
            s,
            alpha_symbolic,
            alpha_ordinary,
            predicted,
        });
    }
    check_subadditive(&rows)?;
    Ok(AlphaTable {
        rows,
        family: pred.map(|(shape, _)| shape),
    })
}

fn check_subadditive(rows: &[AlphaRow]) -> Result<()> {
    let alpha = |s: u32| rows[(s - 1) as usize].alpha_symbolic;
    let top = rows.len() as u32;
    for a in 1..=top {
        for b in a..=top - a {
            if alpha(a + b) > alpha(a) + alpha(b) {
                return Err(Error::identity(
                    "α of symbolic powers is subadditive",
                    format!("α({}) > α({a}) + α({b})", a + b),
                ));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WaldschmidtEstimate {
    pub lower: Ratio<u64>,
    pub upper: Ratio<u64>,
    pub closed_form: Option<Ratio<u64>>,
    /// Largest size of a strong cover.
    pub big_height: usize,
    pub table: AlphaTable,
}

/// Brackets the Waldschmidt constant using `α(I^(s))` for `s ≤ s_max`.
///
/// The upper end is `min_s α(I^(s)) / s`, valid because the sequence is
/// subadditive (checked by [`alpha_table`]). The lower end is
/// `max_m α(I^(m)) / (m + h - 1)` with `h` the big height, from the monomial
/// containment `I^(r(m+h-1)) ⊆ (I^(m))^r`. A family closed form outside the
/// bracket is an [`Error::IdentityFailure`].
pub fn waldschmidt_estimate(g: &WeightedOrientedGraph, s_max: u32) -> Result<WaldschmidtEstimate> {
    let table = alpha_table(g, s_max)?;
    let big_height = covers::enumerate_strong_covers(g)?
        .iter()
        .map(|p| p.cover.len())
        .max()
        .unwrap_or(0)
        .max(1);
    let h = big_height as u64;
    let upper = table
        .rows
        .iter()
        .map(|r| Ratio::new(r.alpha_symbolic, u64::from(r.s)))
        .min()
        .expect("at least one row");
    let lower = table
        .rows
        .iter()
        .map(|r| Ratio::new(r.alpha_symbolic, u64::from(r.s) + h - 1))
        .max()
        .expect("at least one row");
    let closed_form = prediction(g).map(|(_, p)| p.waldschmidt());
    if let Some(c) = closed_form {
        if c < lower || c > upper {
            return Err(Error::identity(
                "Waldschmidt constant lies in the computed bracket",
                format!("{c} outside [{lower}, {upper}]"),
            ));
        }
    }
    Ok(WaldschmidtEstimate {
        lower,
        upper,
        closed_form,
        big_height,
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d2() -> WeightedOrientedGraph {
        WeightedOrientedGraph::new(
            &[("x1", 1), ("x2", 2), ("x3", 1), ("x4", 2), ("x5", 1)],
            &[("x1", "x2"), ("x3", "x2"), ("x3", "x4"), ("x5", "x4"), ("x1", "x5")],
        )
        .unwrap()
    }

    #[test]
    fn d2_doubles() {
        let t = alpha_table(&d2(), 5).unwrap();
        let got: Vec<u64> = t.rows.iter().map(|r| r.alpha_symbolic).collect();
        assert_eq!(got, vec![2, 4, 6, 8, 10]);
        assert!(t.rows.iter().all(|r| r.predicted == Some(r.alpha_symbolic)));
    }

    #[test]
    fn d2_bracket() {
        let w = waldschmidt_estimate(&d2(), 5).unwrap();
        assert_eq!(w.upper, Ratio::from_integer(2));
        assert_eq!(w.closed_form, Some(Ratio::from_integer(2)));
        assert_eq!(w.big_height, 3);
        assert!(w.lower <= w.upper);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(Prediction::OddCycleAvoided { half: 2 }.alpha(3), 5);
        assert_eq!(Prediction::Complete { order: 5 }.alpha(3), 4);
        assert_eq!(Prediction::Complete { order: 5 }.alpha(4), 6);
        assert_eq!(
            Prediction::Complete { order: 5 }.waldschmidt(),
            Ratio::new(4, 3)
        );
    }

    #[test]
    fn zero_rows_rejected() {
        assert!(matches!(alpha_table(&d2(), 0), Err(Error::InvalidArgument(_))));
    }
}
