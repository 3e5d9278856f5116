//! Edge ideals, their irreducible decompositions, and the weight substitution
//! map relating `I(G)` to `I(D)`.

use rayon::prelude::*;

use crate::covers::{self, CoverPartition};
use crate::error::{Error, Result};
use crate::graph::WeightedOrientedGraph;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::vertex_set::VertexSet;

/// `I(D) = (x_i x_j^{w_j} : (x_i, x_j) ∈ E(D))`.
pub fn edge_ideal(g: &WeightedOrientedGraph) -> MonomialIdeal {
    let n = g.vertex_count();
    let gens = g
        .arrows()
        .iter()
        .map(|&(u, v)| {
            let mut exps = vec![0; n];
            exps[u] = 1;
            exps[v] = g.weight(v);
            Monomial::new(exps)
        })
        .collect();
    MonomialIdeal::from_generators(n, gens).expect("same ambient")
}

/// `I(G)`: one squarefree quadratic per underlying edge.
pub fn underlying_edge_ideal(g: &WeightedOrientedGraph) -> MonomialIdeal {
    let n = g.vertex_count();
    let gens = g
        .underlying()
        .edges()
        .map(|(u, v)| {
            let mut exps = vec![0; n];
            exps[u] = 1;
            exps[v] = 1;
            Monomial::new(exps)
        })
        .collect();
    MonomialIdeal::from_generators(n, gens).expect("same ambient")
}

fn require_sinks(g: &WeightedOrientedGraph) -> Result<()> {
    if let Some(v) = g.v_plus().iter().find(|&v| !g.is_sink(v)) {
        return Err(Error::Hypothesis(format!(
            "weighted vertex {} is not a sink",
            g.name(v)
        )));
    }
    Ok(())
}

/// The substitution `x_j ↦ x_j^{w_j}` on weighted vertices.
pub fn phi(m: &Monomial, g: &WeightedOrientedGraph) -> Result<Monomial> {
    require_sinks(g)?;
    Ok(phi_unchecked(m, g))
}

fn phi_unchecked(m: &Monomial, g: &WeightedOrientedGraph) -> Monomial {
    g.v_plus()
        .iter()
        .fold(m.clone(), |acc, v| acc.scale_var(v, g.weight(v)))
}

pub fn phi_ideal(ideal: &MonomialIdeal, g: &WeightedOrientedGraph) -> Result<MonomialIdeal> {
    require_sinks(g)?;
    if ideal.nvars() != g.vertex_count() {
        return Err(Error::AmbientMismatch {
            left: ideal.nvars(),
            right: g.vertex_count(),
        });
    }
    let image = ideal.map_generators(|m| phi_unchecked(m, g));
    // The substitution preserves divisibility in both directions.
    if image.len() != ideal.len() {
        return Err(Error::identity(
            "substitution keeps minimal generators minimal",
            format!("{} generators became {}", ideal.len(), image.len()),
        ));
    }
    Ok(image)
}

/// `I_C` for a strong cover `C`: variables of `L1(C)` together with
/// `x_j^{w_j}` for `x_j ∈ L2(C) ∪ L3(C)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleComponent {
    pub partition: CoverPartition,
    pub ideal: MonomialIdeal,
}

impl IrreducibleComponent {
    pub fn cover(&self) -> VertexSet {
        self.partition.cover
    }

    /// Variables of the radical `(C)`.
    pub fn radical_support(&self) -> VertexSet {
        self.ideal
            .generators()
            .iter()
            .map(|m| {
                m.exponents()
                    .iter()
                    .position(|&e| e > 0)
                    .expect("generators are pure powers")
            })
            .collect()
    }
}

pub fn irreducible_component(
    g: &WeightedOrientedGraph,
    cover: VertexSet,
) -> Result<IrreducibleComponent> {
    let partition = covers::partition_cover(g, cover)?;
    if !partition.is_strong {
        return Err(Error::NotStrong(g.format_set(cover)));
    }
    Ok(component_from_partition(g, partition))
}

fn component_from_partition(g: &WeightedOrientedGraph, partition: CoverPartition) -> IrreducibleComponent {
    let n = g.vertex_count();
    let mut gens: Vec<Monomial> = partition
        .l1
        .iter()
        .map(|v| Monomial::var_power(n, v, 1))
        .collect();
    gens.extend(
        partition
            .l2
            .union(partition.l3)
            .iter()
            .map(|v| Monomial::var_power(n, v, g.weight(v))),
    );
    IrreducibleComponent {
        partition,
        ideal: MonomialIdeal::from_generators(n, gens).expect("same ambient"),
    }
}

/// Components of the irredundant irreducible decomposition together with
/// their verified intersection.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub components: Vec<IrreducibleComponent>,
    pub intersection: MonomialIdeal,
}

/// One component per strong cover, in strong-cover order. The intersection is
/// recomputed and compared with `I(D)`; a mismatch is an
/// [`Error::IdentityFailure`].
pub fn irreducible_decomposition(g: &WeightedOrientedGraph) -> Result<Decomposition> {
    let strong = covers::enumerate_strong_covers(g)?;
    let components: Vec<IrreducibleComponent> = strong
        .into_par_iter()
        .map(|p| component_from_partition(g, p))
        .collect();
    let edge = edge_ideal(g);
    let intersection = if components.is_empty() {
        // No edges: the only cover is empty and its ideal is zero.
        MonomialIdeal::zero(g.vertex_count())
    } else {
        MonomialIdeal::intersect_all(components.iter().map(|c| &c.ideal))?
    };
    if intersection != edge {
        return Err(Error::identity(
            "intersection of irreducible components equals the edge ideal",
            format!(
                "got {} expected {}",
                intersection.display(g.names()),
                edge.display(g.names())
            ),
        ));
    }
    Ok(Decomposition {
        components,
        intersection,
    })
}

/// Checks that dropping any single component strictly enlarges the
/// intersection. Returns the index of a redundant component, if any.
pub fn find_redundant_component(decomposition: &Decomposition) -> Result<Option<usize>> {
    let comps = &decomposition.components;
    if comps.len() < 2 {
        return Ok(None);
    }
    for skip in 0..comps.len() {
        let rest = MonomialIdeal::intersect_all(
            comps
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, c)| &c.ideal),
        )?;
        if rest == decomposition.intersection {
            return Ok(Some(skip));
        }
    }
    Ok(None)
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

    fn show(g: &WeightedOrientedGraph, i: &MonomialIdeal) -> String {
        i.display(g.names()).to_string()
    }

    #[test]
    fn d1_and_d2_edge_ideals() {
        let g = d1();
        assert_eq!(
            show(&g, &edge_ideal(&g)),
            "(x1^2*x5, x1*x2^2, x2*x3^2, x3*x4^2, x4*x5^2)"
        );
        let g = d2();
        assert_eq!(
            show(&g, &edge_ideal(&g)),
            "(x1*x5, x1*x2^2, x2^2*x3, x3*x4^2, x4^2*x5)"
        );
        assert_eq!(
            show(&g, &underlying_edge_ideal(&g)),
            "(x1*x2, x1*x5, x2*x3, x3*x4, x4*x5)"
        );
    }

    #[test]
    fn edgeless_graph_has_zero_ideal() {
        let g = WeightedOrientedGraph::new(&[("a", 1), ("b", 1)], &[]).unwrap();
        assert!(edge_ideal(&g).is_zero());
        let d = irreducible_decomposition(&g).unwrap();
        assert!(d.intersection.is_zero());
    }

    #[test]
    fn single_arrow_ideals() {
        let g = WeightedOrientedGraph::new(&[("u", 1), ("v", 3)], &[("u", "v")]).unwrap();
        assert_eq!(show(&g, &edge_ideal(&g)), "(u*v^3)");
        assert_eq!(show(&g, &underlying_edge_ideal(&g)), "(u*v)");
    }

    #[test]
    fn phi_examples() {
        let g = d2();
        let m = Monomial::parse("x1*x2", g.names()).unwrap();
        assert_eq!(phi(&m, &g).unwrap().display(g.names()).to_string(), "x1*x2^2");
        let m = Monomial::parse("x1*x3*x5", g.names()).unwrap();
        assert_eq!(phi(&m, &g).unwrap(), m);
        assert_eq!(phi_ideal(&underlying_edge_ideal(&g), &g).unwrap(), edge_ideal(&g));
        assert!(matches!(phi(&m, &d1()), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn components_from_partitions() {
        let g = d2();
        let c = g.vertex_set(&["x1", "x2", "x4"]).unwrap();
        let comp = irreducible_component(&g, c).unwrap();
        assert_eq!(show(&g, &comp.ideal), "(x1, x2^2, x4^2)");
        assert_eq!(comp.radical_support(), c);
        let bad = g.vertex_set(&["x1", "x2", "x3", "x4"]).unwrap();
        assert!(matches!(irreducible_component(&g, bad), Err(Error::NotStrong(_))));

        let g = d1();
        let comp = irreducible_component(&g, g.all_vertices()).unwrap();
        assert_eq!(show(&g, &comp.ideal), "(x1^2, x2^2, x3^2, x4^2, x5^2)");
    }

    #[test]
    fn decompositions_are_exact_and_irredundant() {
        let g = d2();
        let d = irreducible_decomposition(&g).unwrap();
        assert_eq!(d.components.len(), 5);
        assert_eq!(find_redundant_component(&d).unwrap(), None);

        let g = d1();
        let d = irreducible_decomposition(&g).unwrap();
        assert_eq!(d.components.len(), 11);
        assert_eq!(find_redundant_component(&d).unwrap(), None);
        for c in &d.components {
            assert_eq!(c.radical_support(), c.cover());
        }
    }

    #[test]
    fn squarefree_cycle_has_prime_components() {
        let g = WeightedOrientedGraph::new(
            &[("x1", 1), ("x2", 1), ("x3", 1), ("x4", 1), ("x5", 1)],
            &[("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x5", "x1")],
        )
        .unwrap();
        let d = irreducible_decomposition(&g).unwrap();
        let covers: Vec<VertexSet> = d.components.iter().map(|c| c.cover()).collect();
        assert_eq!(covers, crate::covers::enumerate_minimal_covers(&g).unwrap());
        for c in &d.components {
            assert!(c.ideal.generators().iter().all(|m| m.degree() == 1));
        }
    }
}
