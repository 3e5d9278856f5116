//! Regularity of ordinary and symbolic powers of edge ideals of weighted
//! oriented odd cycles whose weighted vertices are sinks, and of the Artinian
//! quotient `I^(s) / I^s`.

use rayon::prelude::*;

use super::betti;
use crate::edge_ideals::edge_ideal;
use crate::error::{Error, Result};
use crate::graph::WeightedOrientedGraph;
use crate::ideal::{self, MonomialIdeal};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::symbolic::{self, Family, FamilyShape};

/// Data attached to an odd cycle `C_{2n+1}` with weighted sinks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycleData {
    /// `n` in `2n + 1`.
    pub half: u32,
    /// `c`: the cycle product with weighted variables raised to their weights.
    pub cycle_monomial: Monomial,
    /// A vertex of largest weight (the first such).
    pub heaviest: usize,
    /// `w_v`, the largest weight.
    pub max_weight: u32,
    /// `w = Σ (w_i - 1)` over weighted vertices.
    pub excess: u32,
    /// `f = Π x_j^{w_j - 1}` over weighted vertices.
    pub excess_monomial: Monomial,
    pub weighted_count: usize,
}

impl OddCycleData {
    /// `k` in `s = k(n + 1) + r`.
    pub fn quotient(&self, s: u32) -> u32 {
        s / (self.half + 1)
    }

    /// `(s - n - 1)(1 + w_v) + 2w + 2n + 1` for `s ≥ n + 1`.
    pub fn quotient_regularity_formula(&self, s: u32) -> Option<u64> {
        let (n, wv, w) = (
            u64::from(self.half),
            u64::from(self.max_weight),
            u64::from(self.excess),
        );
        let s = u64::from(s);
        (s > n).then(|| (s - n - 1) * (1 + wv) + 2 * w + 2 * n + 1)
    }

    /// `d(t) = (s - t(n+1))(w_v + 1) + (t - 1) w_v + w + t(2n + 1 + w)`,
    /// the largest degree of an element of `I^{s-t(n+1)} (c)^t` outside `I^s`.
    pub fn term_degree_formula(&self, s: u32, t: u32) -> Option<u64> {
        if t == 0 || t > self.quotient(s) {
            return None;
        }
        let (n, wv, w) = (
            u64::from(self.half),
            u64::from(self.max_weight),
            u64::from(self.excess),
        );
        let (s, t) = (u64::from(s), u64::from(t));
        Some((s - t * (n + 1)) * (wv + 1) + (t - 1) * wv + w + t * (2 * n + 1 + w))
    }

    /// `(k - 1) w_v + w`: one less than the multiplier degree that pushes
    /// `I^(s)` into `I^s`.
    pub fn multiplier_slack(&self, s: u32) -> u64 {
        u64::from(self.quotient(s).saturating_sub(1)) * u64::from(self.max_weight)
            + u64::from(self.excess)
    }
}

/// Validates the odd-cycle hypotheses: the underlying graph is a single odd
/// cycle through every vertex, at least one vertex is weighted, and weighted
/// vertices are sinks.
pub fn odd_cycle_data(g: &WeightedOrientedGraph) -> Result<OddCycleData> {
    let shape = symbolic::match_family(g, Family::Unicyclic)
        .map_err(|e| Error::Hypothesis(format!("not an odd cycle: {e}")))?;
    let FamilyShape::Unicyclic { cycle, half } = shape else {
        unreachable!("unicyclic match returns a unicyclic shape");
    };
    if cycle != g.all_vertices() {
        return Err(Error::Hypothesis("the graph has vertices off the cycle".into()));
    }
    let v_plus = g.v_plus();
    if v_plus.is_empty() {
        return Err(Error::Hypothesis("no vertex has weight above one".into()));
    }
    if !g.v_plus_sinks_check() {
        return Err(Error::Hypothesis("weighted vertices must be sinks".into()));
    }
    let heaviest = v_plus
        .iter()
        .max_by_key(|&v| (g.weight(v), std::cmp::Reverse(v)))
        .expect("nonempty");
    let mut f = vec![0; g.vertex_count()];
    for v in v_plus.iter() {
        f[v] = g.weight(v) - 1;
    }
    let excess_monomial = Monomial::new(f);
    Ok(OddCycleData {
        half,
        cycle_monomial: symbolic::cycle_monomial(g, cycle)?,
        heaviest,
        max_weight: g.weight(heaviest),
        excess: excess_monomial.degree() as u32,
        excess_monomial,
        weighted_count: v_plus.len(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub s: u32,
    pub reg_ordinary: Option<u64>,
    pub reg_symbolic: Option<u64>,
    /// Largest degree of a monomial in `I^(s) \ I^s`; `None` when they agree.
    pub reg_quotient: Option<u64>,
    pub formula_prediction: Option<u64>,
    /// A monomial of largest degree in `I^(s) \ I^s`.
    pub witness_monomial: Option<Monomial>,
    /// Degree bound used for the exhaustive search of `I^(s) \ I^s`.
    pub search_bound: Option<u64>,
}

impl RegularityReport {
    fn empty(s: u32) -> Self {
        RegularityReport {
            s,
            reg_ordinary: None,
            reg_symbolic: None,
            reg_quotient: None,
            formula_prediction: None,
            witness_monomial: None,
            search_bound: None,
        }
    }
}

fn require_positive(s: u32) -> Result<()> {
    if s == 0 {
        Err(Error::InvalidArgument("power must be positive".into()))
    } else {
        Ok(())
    }
}

/// Checks `m^{degree} · J ⊆ I^s` generator by generator.
fn multiplier_contains(
    nvars: usize,
    degree: u32,
    gens: &[Monomial],
    ideal: &MonomialIdeal,
    s: u32,
) -> Option<Monomial> {
    let multipliers = monomials_of_degree(nvars, degree);
    gens.par_iter()
        .flat_map_iter(|g| multipliers.iter().map(move |m| g.mul(m)))
        .find_first(|p| !ideal::power_membership(p, ideal, s))
}

/// `reg(I^(s) / I^s)` by exhaustive search up to the degree bound
/// `max deg I^(s) + (k - 1) w_v + w`, compared with the closed formula for
/// `s ≥ n + 1`. The multiplier containment that justifies the bound is
/// verified as well.
pub fn reg_quotient(g: &WeightedOrientedGraph, s: u32) -> Result<RegularityReport> {
    require_positive(s)?;
    let data = odd_cycle_data(g)?;
    let sym = symbolic::symbolic_power(g, s)?;
    let base = edge_ideal(g);
    let ordinary = base.power(s);

    let slack = data.multiplier_slack(s);
    if let Some(bad) = multiplier_contains(
        g.vertex_count(),
        (slack + 1) as u32,
        sym.generators(),
        &base,
        s,
    ) {
        return Err(Error::identity(
            "a multiplier of degree (k-1)w_v + w + 1 sends I^(s) into I^s",
            format!("{} is not in I^{s}", bad.display(g.names())),
        ));
    }

    let bound = sym.max_generator_degree().unwrap_or(0) + slack;
    let difference = ideal::monomials_in_difference(&sym, &ordinary, bound)?;
    let witness = difference
        .iter()
        .filter(|m| Some(m.degree()) == difference.iter().map(Monomial::degree).max())
        .min()
        .cloned();
    let reg = witness.as_ref().map(Monomial::degree);
    let prediction = data.quotient_regularity_formula(s);
    if reg != prediction {
        return Err(Error::identity(
            "reg(I^(s)/I^s) = (s-n-1)(1+w_v) + 2w + 2n + 1",
            format!("s = {s}: enumerated {reg:?}, formula {prediction:?}"),
        ));
    }
    Ok(RegularityReport {
        reg_quotient: reg,
        formula_prediction: prediction,
        witness_monomial: witness,
        search_bound: Some(bound),
        ..RegularityReport::empty(s)
    })
}

/// `reg I^(s)` and `reg I^s` from Betti tables; asserts `≤`, and `=` when a
/// single vertex is weighted.
pub fn reg_comparison(g: &WeightedOrientedGraph, s: u32) -> Result<RegularityReport> {
    require_positive(s)?;
    let data = odd_cycle_data(g)?;
    let sym = symbolic::symbolic_power(g, s)?;
    let ordinary = edge_ideal(g).power(s);
    let reg_symbolic = betti::regularity(&sym)?;
    let reg_ordinary = betti::regularity(&ordinary)?;
    if reg_symbolic > reg_ordinary {
        return Err(Error::identity(
            "reg I^(s) ≤ reg I^s",
            format!("s = {s}: {reg_symbolic} > {reg_ordinary}"),
        ));
    }
    if data.weighted_count == 1 && reg_symbolic != reg_ordinary {
        return Err(Error::identity(
            "reg I^(s) = reg I^s with one weighted vertex",
            format!("s = {s}: {reg_symbolic} ≠ {reg_ordinary}"),
        ));
    }
    Ok(RegularityReport {
        reg_ordinary: Some(reg_ordinary),
        reg_symbolic: Some(reg_symbolic),
        ..RegularityReport::empty(s)
    })
}

/// `x_v^{(t-1) w_v} f c^t`, checked to lie outside `I^{t(n+1)}` while each of
/// its multiples by a variable, and every product of `c^t` with a monomial of
/// degree `(t-1) w_v + w + 1`, lies inside.
pub fn multiplier_witness(g: &WeightedOrientedGraph, s: u32, t: u32) -> Result<Monomial> {
    require_positive(s)?;
    let data = odd_cycle_data(g)?;
    let k = data.quotient(s);
    if t == 0 || t > k {
        return Err(Error::InvalidArgument(format!(
            "t must lie in 1..={k} for s = {s}"
        )));
    }
    let n = g.vertex_count();
    let ct = data.cycle_monomial.pow(t);
    let witness = Monomial::var_power(n, data.heaviest, (t - 1) * data.max_weight)
        .mul(&data.excess_monomial)
        .mul(&ct);
    let base = edge_ideal(g);
    let target = t * (data.half + 1);
    if ideal::power_membership(&witness, &base, target) {
        return Err(Error::identity(
            "m^{(t-1)w_v + w} c^t is not contained in I^{t(n+1)}",
            format!("{} lies in I^{target}", witness.display(g.names())),
        ));
    }
    let lifts: Vec<Monomial> = (0..n)
        .map(|j| witness.mul(&Monomial::var_power(n, j, 1)))
        .collect();
    if let Some(bad) = lifts
        .par_iter()
        .find_first(|m| !ideal::power_membership(m, &base, target))
    {
        return Err(Error::identity(
            "every variable multiple of the witness lies in I^{t(n+1)}",
            format!("{} is outside I^{target}", bad.display(g.names())),
        ));
    }
    let degree = (t - 1) * data.max_weight + data.excess + 1;
    if let Some(bad) = multiplier_contains(n, degree, &[ct], &base, target) {
        return Err(Error::identity(
            "m^{(t-1)w_v + w + 1} c^t ⊆ I^{t(n+1)}",
            format!("{} is outside I^{target}", bad.display(g.names())),
        ));
    }
    Ok(witness)
}

/// Largest degree of a monomial in `I^{s-t(n+1)} (c)^t` outside `I^s`, by
/// exhaustive search up to the same bound as [`reg_quotient`].
pub fn term_max_degree(g: &WeightedOrientedGraph, s: u32, t: u32) -> Result<Option<u64>> {
    require_positive(s)?;
    let data = odd_cycle_data(g)?;
    if t == 0 || t > data.quotient(s) {
        return Err(Error::InvalidArgument(format!(
            "t must lie in 1..={} for s = {s}",
            data.quotient(s)
        )));
    }
    let base = edge_ideal(g);
    let term = base
        .power(s - t * (data.half + 1))
        .multiply(&MonomialIdeal::principal(data.cycle_monomial.pow(t)))?;
    let bound = term.max_generator_degree().unwrap_or(0) + data.multiplier_slack(s);
    Ok(ideal::multiples_outside(&term, &base.power(s), bound)
        .iter()
        .map(Monomial::degree)
        .max())
}
