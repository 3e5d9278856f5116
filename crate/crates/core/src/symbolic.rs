//! Symbolic powers of edge ideals of weighted oriented graphs.
//!
//! Three situations have a known description:
//!
//! * every weighted vertex is a sink: `I^(m)` is the intersection of the
//!   `m`-th powers of the irreducible components `I_C` over strong covers;
//! * the whole vertex set is a strong cover: `I^(m) = I^m`;
//! * no vertex is weighted: `I^(m)` is the intersection of `P_C^m` over
//!   minimal covers.
//!
//! The first case subsumes the third (with no weighted vertex `I_C = P_C`), so
//! dispatch never selects the squarefree route; it is kept as an independent
//! computation for cross-checks. Anything else is reported as
//! [`Error::Unsupported`].

use rayon::prelude::*;

use crate::covers::{self, CoverPartition};
use crate::edge_ideals::{self, edge_ideal};
use crate::error::{Error, Result};
use crate::graph::{UnderlyingGraph, WeightedOrientedGraph};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymbolicCase {
    /// Weighted vertices are sinks; carries the strong covers (all minimal).
    Sinks { strong_covers: Vec<CoverPartition> },
    WholeVertexStrong,
    Squarefree { minimal_covers: Vec<VertexSet> },
    Unsupported { non_minimal_strong: Vec<VertexSet> },
}

impl SymbolicCase {
    pub fn tag(&self) -> &'static str {
        match self {
            SymbolicCase::Sinks { .. } => "sinks",
            SymbolicCase::WholeVertexStrong => "whole-vertex-strong",
            SymbolicCase::Squarefree { .. } => "squarefree",
            SymbolicCase::Unsupported { .. } => "unsupported",
        }
    }
}

/// Evaluates the cases in the order sinks, whole-vertex-strong, squarefree;
/// the first that applies wins.
pub fn classify(g: &WeightedOrientedGraph) -> Result<SymbolicCase> {
    if g.v_plus_sinks_check() {
        let strong_covers = covers::enumerate_strong_covers(g)?;
        if let Some(p) = strong_covers.iter().find(|p| !p.is_minimal) {
            return Err(Error::identity(
                "strong covers are minimal when weighted vertices are sinks",
                format!("{} is strong but not minimal", g.format_set(p.cover)),
            ));
        }
        return Ok(SymbolicCase::Sinks { strong_covers });
    }
    if covers::is_strong_cover(g, g.all_vertices())? {
        return Ok(SymbolicCase::WholeVertexStrong);
    }
    if g.v_plus().is_empty() {
        return Ok(SymbolicCase::Squarefree {
            minimal_covers: covers::enumerate_minimal_covers(g)?,
        });
    }
    let non_minimal_strong = covers::enumerate_strong_covers(g)?
        .into_iter()
        .filter(|p| !p.is_minimal)
        .map(|p| p.cover)
        .collect();
    Ok(SymbolicCase::Unsupported { non_minimal_strong })
}

fn require_positive(m: u32) -> Result<()> {
    if m == 0 {
        Err(Error::InvalidArgument("symbolic power exponent must be positive".into()))
    } else {
        Ok(())
    }
}

fn unsupported(g: &WeightedOrientedGraph, offending: &[VertexSet]) -> Error {
    Error::Unsupported {
        offending: offending.iter().map(|&c| g.format_set(c)).collect(),
    }
}

/// Per-variable exponent of the pure power attached to a vertex in the sinks
/// case: `w_j` on weighted vertices, `1` elsewhere.
fn sink_exponents(g: &WeightedOrientedGraph) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|v| if g.weight(v) > 1 { g.weight(v) } else { 1 })
        .collect()
}

/// `(x_j : j ∈ C \ V⁺) + (x_j^{w_j} : j ∈ C ∩ V⁺)`.
pub fn sink_component(g: &WeightedOrientedGraph, cover: VertexSet) -> MonomialIdeal {
    let n = g.vertex_count();
    let exps = sink_exponents(g);
    let gens = cover
        .iter()
        .map(|v| Monomial::var_power(n, v, exps[v]))
        .collect();
    MonomialIdeal::from_generators(n, gens).expect("same ambient")
}

fn intersect_powers(components: &[MonomialIdeal], m: u32) -> Result<MonomialIdeal> {
    let powers: Vec<MonomialIdeal> = components.par_iter().map(|c| c.power(m)).collect();
    MonomialIdeal::intersect_all(powers.iter())
}

/// `I(D)^(m)` for `m ≥ 1`.
pub fn symbolic_power(g: &WeightedOrientedGraph, m: u32) -> Result<MonomialIdeal> {
    require_positive(m)?;
    match classify(g)? {
        SymbolicCase::Sinks { strong_covers } => {
            if strong_covers.is_empty() || g.arrows().is_empty() {
                return Ok(MonomialIdeal::zero(g.vertex_count()));
            }
            let components: Vec<MonomialIdeal> = strong_covers
                .iter()
                .map(|p| sink_component(g, p.cover))
                .collect();
            intersect_powers(&components, m)
        }
        SymbolicCase::WholeVertexStrong => Ok(edge_ideal(g).power(m)),
        SymbolicCase::Squarefree { .. } => squarefree_symbolic_power(g, m),
        SymbolicCase::Unsupported { non_minimal_strong } => {
            Err(unsupported(g, &non_minimal_strong))
        }
    }
}

/// `I(G)^(m)` for the underlying graph: the intersection of `P_C^m` over
/// minimal vertex covers `C`.
pub fn squarefree_symbolic_power(g: &WeightedOrientedGraph, m: u32) -> Result<MonomialIdeal> {
    require_positive(m)?;
    let n = g.vertex_count();
    if g.arrows().is_empty() {
        return Ok(MonomialIdeal::zero(n));
    }
    let primes: Vec<MonomialIdeal> = covers::enumerate_minimal_covers(g)?
        .into_iter()
        .map(|c| {
            let gens = c.iter().map(|v| Monomial::var_power(n, v, 1)).collect();
            MonomialIdeal::from_generators(n, gens).expect("same ambient")
        })
        .collect();
    intersect_powers(&primes, m)
}

/// Whether `x^a ∈ I(D)^(m)`, by the criterion that for every strong cover
/// `C`, `Σ_{j ∈ C \ V⁺} a_j + Σ_{j ∈ C ∩ V⁺} ⌊a_j / w_j⌋ ≥ m`.
pub fn symbolic_membership(a: &[u32], g: &WeightedOrientedGraph, m: u32) -> Result<bool> {
    require_positive(m)?;
    if a.len() != g.vertex_count() {
        return Err(Error::AmbientMismatch {
            left: a.len(),
            right: g.vertex_count(),
        });
    }
    let covers: Vec<VertexSet> = match classify(g)? {
        SymbolicCase::Sinks { strong_covers } => strong_covers.iter().map(|p| p.cover).collect(),
        SymbolicCase::Squarefree { minimal_covers } => minimal_covers,
        SymbolicCase::WholeVertexStrong => {
            return Err(Error::Hypothesis(
                "the floor criterion needs weighted vertices to be sinks".into(),
            ))
        }
        SymbolicCase::Unsupported { non_minimal_strong } => {
            return Err(unsupported(g, &non_minimal_strong))
        }
    };
    if g.arrows().is_empty() {
        return Ok(false);
    }
    let exps = sink_exponents(g);
    Ok(covers.iter().all(|c| {
        let score: u64 = c.iter().map(|j| u64::from(a[j] / exps[j])).sum();
        score >= u64::from(m)
    }))
}

/// Whether `I^(m) = I^m`.
pub fn powers_equal(g: &WeightedOrientedGraph, m: u32) -> Result<bool> {
    Ok(symbolic_power(g, m)? == edge_ideal(g).power(m))
}

/// `[I^(1) = I^1, .., I^(max_m) = I^max_m]`.
pub fn equality_pattern(g: &WeightedOrientedGraph, max_m: u32) -> Result<Vec<bool>> {
    (1..=max_m).map(|m| powers_equal(g, m)).collect()
}

/// Checks `Φ(I(G)^(k)) = I(D)^(k)` and `Φ(I(G)^k) = I(D)^k`, where `Φ` raises
/// each weighted variable to its weight. Needs weighted vertices to be sinks.
pub fn verify_phi_commutation(g: &WeightedOrientedGraph, k: u32) -> Result<()> {
    require_positive(k)?;
    let base = edge_ideals::underlying_edge_ideal(g);
    let ordinary = edge_ideals::phi_ideal(&base.power(k), g)?;
    if ordinary != edge_ideal(g).power(k) {
        return Err(Error::identity(
            "substitution commutes with ordinary powers",
            format!("k = {k}: {}", ordinary.display(g.names())),
        ));
    }
    let symbolic = edge_ideals::phi_ideal(&squarefree_symbolic_power(g, k)?, g)?;
    let direct = symbolic_power(g, k)?;
    if symbolic != direct {
        return Err(Error::identity(
            "substitution commutes with symbolic powers",
            format!(
                "k = {k}: image {} vs {}",
                symbolic.display(g.names()),
                direct.display(g.names())
            ),
        ));
    }
    Ok(())
}

/// Checks that `blocks` partition the vertex set into induced naturally
/// oriented unicyclic subgraphs in which every vertex of block-degree above
/// one is weighted. When that holds, `I^(m) = I^m` is asserted for
/// `m = 1..=max_m`; a failure is an [`Error::IdentityFailure`].
pub fn verify_natural_partition(
    g: &WeightedOrientedGraph,
    blocks: &[VertexSet],
    max_m: u32,
) -> Result<bool> {
    let mut seen = VertexSet::empty();
    for &b in blocks {
        if b.is_empty() {
            return Err(Error::InvalidPartition("empty block".into()));
        }
        if !b.is_subset(g.all_vertices()) {
            return Err(Error::InvalidPartition("block outside the vertex set".into()));
        }
        if !b.is_disjoint(seen) {
            return Err(Error::InvalidPartition(format!(
                "blocks overlap at {}",
                g.format_set(b.intersection(seen))
            )));
        }
        seen = seen.union(b);
    }
    if seen != g.all_vertices() {
        return Err(Error::InvalidPartition(format!(
            "vertices {} are not covered",
            g.format_set(g.all_vertices().difference(seen))
        )));
    }

    let holds = blocks.iter().all(|&b| naturally_oriented_unicyclic(g, b));
    if holds {
        for m in 1..=max_m {
            if !powers_equal(g, m)? {
                return Err(Error::identity(
                    "naturally oriented unicyclic partition forces I^(m) = I^m",
                    format!("fails at m = {m}"),
                ));
            }
        }
    }
    Ok(holds)
}

fn naturally_oriented_unicyclic(g: &WeightedOrientedGraph, block: VertexSet) -> bool {
    let u = g.underlying();
    if !u.is_connected_on(block) || u.edge_count_within(block) != block.len() {
        return false;
    }
    let cycle = u.two_core(block);
    let Some(order) = u.induced_cycle_order(cycle) else {
        return false;
    };
    // All cycle arrows run the same way round.
    let k = order.len();
    let forward = (0..k).all(|i| g.out_neighbors(order[i]).contains(order[(i + 1) % k]));
    let backward = (0..k).all(|i| g.out_neighbors(order[(i + 1) % k]).contains(order[i]));
    if !forward && !backward {
        return false;
    }
    // Tree arrows point away from the cycle.
    let depth = distances_from(&u, cycle, block);
    let away = g.arrows().iter().all(|&(a, b)| {
        if !block.contains(a) || !block.contains(b) || (cycle.contains(a) && cycle.contains(b)) {
            true
        } else {
            depth[b] > depth[a]
        }
    });
    let weighted = block
        .iter()
        .all(|v| u.neighbors(v).intersection(block).len() <= 1 || g.weight(v) > 1);
    away && weighted
}

fn distances_from(u: &UnderlyingGraph, sources: VertexSet, within: VertexSet) -> Vec<usize> {
    let mut dist = vec![usize::MAX; u.vertex_count()];
    let mut frontier = sources;
    let mut seen = sources;
    let mut d = 0;
    while !frontier.is_empty() {
        for v in frontier.iter() {
            dist[v] = d;
        }
        let mut next = VertexSet::empty();
        for v in frontier.iter() {
            next = next.union(u.neighbors(v).intersection(within));
        }
        frontier = next.difference(seen);
        seen = seen.union(frontier);
        d += 1;
    }
    dist
}

/// `c = Π x_j (non-weighted cycle vertices) · Π x_j^{w_j} (weighted ones)`.
pub fn cycle_monomial(g: &WeightedOrientedGraph, cycle: VertexSet) -> Result<Monomial> {
    let u = g.underlying();
    match u.induced_cycle_order(cycle) {
        Some(order) if order.len() % 2 == 1 => {}
        _ => {
            return Err(Error::Hypothesis(format!(
                "{} does not induce an odd cycle",
                g.format_set(cycle)
            )))
        }
    }
    let mut exps = vec![0; g.vertex_count()];
    for v in cycle.iter() {
        exps[v] = g.weight(v);
    }
    Ok(Monomial::new(exps))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Unicyclic,
    Complete,
    CliqueSum,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Unicyclic => "unicyclic",
            Family::Complete => "complete",
            Family::CliqueSum => "clique_sum",
        }
    }

    pub fn parse(text: &str) -> Result<Family> {
        match text {
            "unicyclic" => Ok(Family::Unicyclic),
            "complete" => Ok(Family::Complete),
            "clique_sum" | "clique-sum" => Ok(Family::CliqueSum),
            other => Err(Error::InvalidArgument(format!("unknown family {other:?}"))),
        }
    }

    pub const ALL: [Family; 3] = [Family::Unicyclic, Family::Complete, Family::CliqueSum];
}

/// Structural data of a graph recognised as one of the families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyShape {
    /// Connected, exactly one cycle, of length `2 * half + 1`.
    Unicyclic { cycle: VertexSet, half: u32 },
    /// `K_order`.
    Complete { order: usize },
    /// Two odd cycles of length `2 * half + 1` sharing only `hub`.
    CliqueSum {
        hub: usize,
        first: VertexSet,
        second: VertexSet,
        half: u32,
    },
}

impl FamilyShape {
    pub fn family(&self) -> Family {
        match self {
            FamilyShape::Unicyclic { .. } => Family::Unicyclic,
            FamilyShape::Complete { .. } => Family::Complete,
            FamilyShape::CliqueSum { .. } => Family::CliqueSum,
        }
    }
}

fn mismatch(family: Family, reason: impl Into<String>) -> Error {
    Error::FamilyMismatch {
        family: family.name().into(),
        reason: reason.into(),
    }
}

/// Validates that `g` belongs to `family`.
pub fn match_family(g: &WeightedOrientedGraph, family: Family) -> Result<FamilyShape> {
    let u = g.underlying();
    let all = g.all_vertices();
    let n = g.vertex_count();
    match family {
        Family::Unicyclic => {
            if !u.is_connected_on(all) {
                return Err(mismatch(family, "not connected"));
            }
            if u.edge_count() != n {
                return Err(mismatch(family, "edge count differs from vertex count"));
            }
            let cycle = u.two_core(all);
            if cycle.len().is_multiple_of(2) {
                return Err(mismatch(family, "the cycle is even"));
            }
            Ok(FamilyShape::Unicyclic {
                cycle,
                half: (cycle.len() / 2) as u32,
            })
        }
        Family::Complete => {
            if n < 2 || u.edge_count() != n * (n - 1) / 2 {
                return Err(mismatch(family, "some pair of vertices is not adjacent"));
            }
            Ok(FamilyShape::Complete { order: n })
        }
        Family::CliqueSum => {
            if !u.is_connected_on(all) || u.edge_count() != n + 1 {
                return Err(mismatch(family, "not two cycles glued at a vertex"));
            }
            let hubs: Vec<usize> = (0..n).filter(|&v| u.degree(v) == 4).collect();
            if hubs.len() != 1 || (0..n).any(|v| v != hubs[0] && u.degree(v) != 2) {
                return Err(mismatch(family, "degree pattern is not two cycles sharing one vertex"));
            }
            let hub = hubs[0];
            let rest = all.without(hub);
            let start = u.neighbors(hub).iter().next().expect("hub has neighbours");
            let side = u.component(start, rest);
            let first = side.with(hub);
            let second = rest.difference(side).with(hub);
            let (Some(a), Some(b)) = (u.induced_cycle_order(first), u.induced_cycle_order(second)) else {
                return Err(mismatch(family, "the two sides are not cycles"));
            };
            if a.len() != b.len() || a.len() % 2 == 0 {
                return Err(mismatch(family, "the cycles are not odd of equal length"));
            }
            Ok(FamilyShape::CliqueSum {
                hub,
                first,
                second,
                half: (a.len() / 2) as u32,
            })
        }
    }
}

/// The first family (unicyclic, complete, clique sum) that `g` belongs to.
pub fn detect_family(g: &WeightedOrientedGraph) -> Option<FamilyShape> {
    Family::ALL.iter().find_map(|&f| match_family(g, f).ok())
}

/// `I^(s)` from the family's closed form, checked generator-for-generator
/// against [`symbolic_power`].
///
/// * unicyclic with odd cycle `C_{2n+1}`: `Σ_{t=0}^{k} I^{s-t(n+1)} (c)^t`;
/// * complete on `n` vertices, `s ≥ n`: `Σ I^{r_1} (I^(2))^{r_2} ⋯ (I^(n-1))^{r_{n-1}}`
///   over `s = r_1 + 2 r_2 + ⋯ + (n-1) r_{n-1}`;
/// * clique sum: `Σ_{p+q=t≤k} I^{s-t(n+1)} (c)^p (c')^q`;
///
/// where `s = k(n+1) + r` with `0 ≤ r ≤ n`.
pub fn family_symbolic_power(
    g: &WeightedOrientedGraph,
    family: Family,
    s: u32,
) -> Result<MonomialIdeal> {
    require_positive(s)?;
    let shape = match_family(g, family)?;
    if !g.v_plus_sinks_check() {
        return Err(Error::Hypothesis("weighted vertices must be sinks".into()));
    }
    let closed = closed_form_symbolic_power(g, &shape, s)?;
    let general = symbolic_power(g, s)?;
    if closed != general {
        return Err(Error::identity(
            format!("{} closed form for the symbolic power", family.name()),
            format!(
                "s = {s}: closed form {} vs intersection {}",
                closed.display(g.names()),
                general.display(g.names())
            ),
        ));
    }
    Ok(closed)
}

fn closed_form_symbolic_power(
    g: &WeightedOrientedGraph,
    shape: &FamilyShape,
    s: u32,
) -> Result<MonomialIdeal> {
    let ideal = edge_ideal(g);
    match *shape {
        FamilyShape::Unicyclic { cycle, half } => {
            let c = MonomialIdeal::principal(cycle_monomial(g, cycle)?);
            let k = s / (half + 1);
            let terms: Vec<MonomialIdeal> = (0..=k)
                .into_par_iter()
                .map(|t| ideal.power(s - t * (half + 1)).multiply(&c.power(t)))
                .collect::<Result<_>>()?;
            sum_all(ideal.nvars(), &terms)
        }
        FamilyShape::CliqueSum {
            first,
            second,
            half,
            ..
        } => {
            let c = MonomialIdeal::principal(cycle_monomial(g, first)?);
            let c2 = MonomialIdeal::principal(cycle_monomial(g, second)?);
            let k = s / (half + 1);
            let pairs: Vec<(u32, u32)> = (0..=k)
                .flat_map(|t| (0..=t).map(move |p| (p, t - p)))
                .collect();
            let terms: Vec<MonomialIdeal> = pairs
                .into_par_iter()
                .map(|(p, q)| {
                    ideal
                        .power(s - (p + q) * (half + 1))
                        .multiply(&c.power(p))?
                        .multiply(&c2.power(q))
                })
                .collect::<Result<_>>()?;
            sum_all(ideal.nvars(), &terms)
        }
        FamilyShape::Complete { order } => {
            if (s as usize) < order {
                return Err(Error::InvalidArgument(format!(
                    "the complete-graph closed form needs s ≥ {order}"
                )));
            }
            let top = (order - 1) as u32;
            let blocks: Vec<MonomialIdeal> = (1..=top)
                .map(|i| symbolic_power(g, i))
                .collect::<Result<_>>()?;
            let terms: Vec<MonomialIdeal> = weighted_compositions(s, top)
                .into_par_iter()
                .map(|rs| {
                    rs.iter()
                        .enumerate()
                        .try_fold(MonomialIdeal::unit(ideal.nvars()), |acc, (i, &r)| {
                            acc.multiply(&blocks[i].power(r))
                        })
                })
                .collect::<Result<_>>()?;
            sum_all(ideal.nvars(), &terms)
        }
    }
}

fn sum_all(nvars: usize, terms: &[MonomialIdeal]) -> Result<MonomialIdeal> {
    terms
        .iter()
        .try_fold(MonomialIdeal::zero(nvars), |acc, t| acc.add(t))
}

/// All `(r_1, .., r_top)` with `Σ i·r_i = s`.
pub fn weighted_compositions(s: u32, top: u32) -> Vec<Vec<u32>> {
    fn rec(part: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if part == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for r in 0..=left / part {
            cur[(part - 1) as usize] = r;
            rec(part - 1, left - r * part, cur, out);
        }
        cur[(part - 1) as usize] = 0;
    }
    let mut out = Vec::new();
    if top == 0 {
        return out;
    }
    rec(top, s, &mut vec![0; top as usize], &mut out);
    out
}

/// The irreducible components recomputed from the general L1/L2/L3 formula,
/// used to confirm the sink-case simplification.
pub fn general_components(g: &WeightedOrientedGraph) -> Result<Vec<MonomialIdeal>> {
    Ok(edge_ideals::irreducible_decomposition(g)?
        .components
        .into_iter()
        .map(|c| c.ideal)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d1() -> WeightedOrientedGraph {
        WeightedOrientedGraph::new(
            &[("x1", 2), ("x2", 2), ("x3", 2), ("x4", 2), ("x5", 2)],
            &[("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x5", "x1")],
        )
        .unwrap()
    }

    fn d2() -> WeightedOrientedGraph {
        WeightedOrientedGraph::new(
            &[("x1", 1), ("x2", 2), ("x3", 1), ("x4", 2), ("x5", 1)],
            &[("x1", "x2"), ("x3", "x2"), ("x3", "x4"), ("x5", "x4"), ("x1", "x5")],
        )
        .unwrap()
    }

    fn plain_c5() -> WeightedOrientedGraph {
        WeightedOrientedGraph::new(
            &[("x1", 1), ("x2", 1), ("x3", 1), ("x4", 1), ("x5", 1)],
            &[("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x5", "x1")],
        )
        .unwrap()
    }

    #[test]
    fn case_tags() {
        assert_eq!(classify(&d2()).unwrap().tag(), "sinks");
        assert_eq!(classify(&d1()).unwrap().tag(), "whole-vertex-strong");
        assert_eq!(classify(&plain_c5()).unwrap().tag(), "sinks");
    }

    #[test]
    fn unsupported_configuration() {
        // A weighted internal vertex on a path: u -> v -> x, w(v) = 2.
        let g = WeightedOrientedGraph::new(
            &[("u", 1), ("v", 2), ("x", 1), ("y", 1)],
            &[("u", "v"), ("v", "x"), ("x", "y")],
        )
        .unwrap();
        let case = classify(&g).unwrap();
        assert_eq!(case.tag(), "unsupported");
        assert!(matches!(symbolic_power(&g, 2), Err(Error::Unsupported { .. })));
    }

    #[test]
    fn d2_symbolic_powers() {
        let g = d2();
        let i = edge_ideal(&g);
        assert_eq!(symbolic_power(&g, 1).unwrap(), i);
        assert_eq!(symbolic_power(&g, 2).unwrap(), i.power(2));
        let c = MonomialIdeal::parse("(x1*x2^2*x3*x4^2*x5)", g.names()).unwrap();
        assert_eq!(symbolic_power(&g, 3).unwrap(), i.power(3).add(&c).unwrap());
        assert!(!powers_equal(&g, 3).unwrap());
        assert!(matches!(symbolic_power(&g, 0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn d1_symbolic_powers_are_ordinary() {
        let g = d1();
        assert_eq!(symbolic_power(&g, 3).unwrap(), edge_ideal(&g).power(3));
    }

    #[test]
    fn sinks_route_agrees_with_squarefree_route_without_weights() {
        let g = plain_c5();
        for m in 1..=4 {
            assert_eq!(
                symbolic_power(&g, m).unwrap(),
                squarefree_symbolic_power(&g, m).unwrap()
            );
        }
    }

    #[test]
    fn sink_components_match_general_formula() {
        let g = d2();
        let SymbolicCase::Sinks { strong_covers } = classify(&g).unwrap() else {
            panic!("sinks case expected");
        };
        let simplified: Vec<MonomialIdeal> =
            strong_covers.iter().map(|p| sink_component(&g, p.cover)).collect();
        assert_eq!(simplified, general_components(&g).unwrap());
    }

    #[test]
    fn floor_criterion_examples() {
        let g = d2();
        assert!(symbolic_membership(&[1, 2, 1, 2, 1], &g, 3).unwrap());
        assert!(symbolic_membership(&[1, 1, 1, 1, 1], &plain_c5(), 3).unwrap());
        assert!(!symbolic_membership(&[0; 5], &g, 1).unwrap());
        assert!(matches!(
            symbolic_membership(&[1; 5], &d1(), 1),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn natural_partitions() {
        let g = d1();
        assert!(verify_natural_partition(&g, &[g.all_vertices()], 3).unwrap());
        let g = d2();
        assert!(!verify_natural_partition(&g, &[g.all_vertices()], 3).unwrap());
        let partial = g.vertex_set(&["x1", "x2", "x3", "x4"]).unwrap();
        assert!(matches!(
            verify_natural_partition(&g, &[partial], 3),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn cycle_monomials() {
        let g = d2();
        let c = cycle_monomial(&g, g.all_vertices()).unwrap();
        assert_eq!(c.display(g.names()).to_string(), "x1*x2^2*x3*x4^2*x5");
        assert_eq!(c.degree(), 7);
        let c = cycle_monomial(&plain_c5(), g.all_vertices()).unwrap();
        assert_eq!(c.degree(), 5);
        let path = g.vertex_set(&["x1", "x2", "x3"]).unwrap();
        assert!(cycle_monomial(&g, path).is_err());
    }

    #[test]
    fn compositions() {
        // 4 = r1 + 2 r2 + 3 r3
        let all = weighted_compositions(4, 3);
        assert_eq!(all.len(), 4);
        for rs in &all {
            assert_eq!(rs[0] + 2 * rs[1] + 3 * rs[2], 4);
        }
    }

    #[test]
    fn family_detection() {
        let g = d2();
        assert_eq!(
            match_family(&g, Family::Unicyclic).unwrap(),
            FamilyShape::Unicyclic {
                cycle: g.all_vertices(),
                half: 2
            }
        );
        assert!(matches!(
            match_family(&g, Family::Complete),
            Err(Error::FamilyMismatch { .. })
        ));
        assert!(matches!(
            match_family(&g, Family::CliqueSum),
            Err(Error::FamilyMismatch { .. })
        ));
    }

    #[test]
    fn d2_unicyclic_closed_form() {
        let g = d2();
        for s in 1..=4 {
            family_symbolic_power(&g, Family::Unicyclic, s).unwrap();
        }
    }
}
