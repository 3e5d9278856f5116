//! Independent oracles shared by the integration tests and the acceptance
//! runner. Nothing here calls the code paths it is used to check.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use oriented_ideals::{Monomial, MonomialIdeal, WeightedOrientedGraph};

pub fn fixture(name: &str) -> WeightedOrientedGraph {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.json"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    WeightedOrientedGraph::from_json(&text).unwrap()
}

pub fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

// ---------------------------------------------------------------------------
// Covers straight from the definitions.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteCover {
    pub cover: Vec<usize>,
    pub l1: Vec<usize>,
    pub l2: Vec<usize>,
    pub l3: Vec<usize>,
    pub minimal: bool,
    pub strong: bool,
}

pub fn brute_covers(g: &WeightedOrientedGraph) -> Vec<BruteCover> {
    let n = g.vertex_count();
    let arrows = g.arrows();
    let is_cover = |m: u64| arrows.iter().all(|&(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1);
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        if !is_cover(mask) {
            continue;
        }
        let inside = |v: usize| mask >> v & 1 == 1;
        let cover: Vec<usize> = (0..n).filter(|&v| inside(v)).collect();
        let l1: Vec<usize> = cover
            .iter()
            .copied()
            .filter(|&x| arrows.iter().any(|&(u, v)| u == x && !inside(v)))
            .collect();
        let l2: Vec<usize> = cover
            .iter()
            .copied()
            .filter(|x| !l1.contains(x))
            .filter(|&x| arrows.iter().any(|&(u, v)| v == x && !inside(u)))
            .collect();
        let l3: Vec<usize> = cover
            .iter()
            .copied()
            .filter(|x| !l1.contains(x) && !l2.contains(x))
            .collect();
        let minimal = cover.iter().all(|&x| !is_cover(mask & !(1 << x)));
        let strong = l3.iter().all(|&x| {
            arrows.iter().any(|&(u, v)| {
                v == x && (l2.contains(&u) || l3.contains(&u)) && g.weight(u) > 1
            })
        });
        out.push(BruteCover {
            cover,
            l1,
            l2,
            l3,
            minimal,
            strong,
        });
    }
    out
}

// ---------------------------------------------------------------------------
// Membership and symbolic powers by definition.

/// `x^a ∈ ∩_C I_C^m` over strong covers, testing each `I_C^m` by the
/// pure-power criterion: `x^a ∈ (x_j^{e_j})^m` iff `Σ ⌊a_j / e_j⌋ ≥ m`.
pub fn intersection_membership(
    a: &[u32],
    components: &[Vec<(usize, u32)>],
    m: u32,
) -> bool {
    components.iter().all(|comp| {
        let score: u32 = comp.iter().map(|&(j, e)| a[j] / e).sum();
        score >= m
    })
}

// ---------------------------------------------------------------------------
// Exact rank over the rationals by ordinary Gaussian elimination.

pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let height = a.len();
    let width = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..height).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][col].clone();
        for i in 0..height {
            if i != r && !a[i][col].is_zero() {
                let f = &a[i][col] / &pivot;
                for j in col..width {
                    let delta = &f * &a[r][j];
                    a[i][j] -= delta;
                }
            }
        }
        r += 1;
        if r == height {
            break;
        }
    }
    r
}

// ---------------------------------------------------------------------------
// Betti numbers from the Taylor complex.

/// `β_{i,a}` from the multidegree-`a` strand of the Taylor complex tensored
/// with the field: subsets `σ` of generators with `lcm(σ) = a` in homological
/// degree `|σ| - 1`, keeping only faces of `∂σ` with the same lcm.
pub fn taylor_betti(ideal: &MonomialIdeal) -> BTreeMap<(usize, Monomial), usize> {
    let gens = ideal.generators();
    let r = gens.len();
    assert!(r <= 16, "Taylor oracle is exponential in the generator count");
    let lcm_of = |mask: u32| -> Monomial {
        (0..r)
            .filter(|&i| mask >> i & 1 == 1)
            .fold(Monomial::one(ideal.nvars()), |acc, i| acc.lcm(&gens[i]))
    };
    let mut strands: BTreeMap<Monomial, Vec<u32>> = BTreeMap::new();
    for mask in 1u32..(1 << r) {
        strands.entry(lcm_of(mask)).or_default().push(mask);
    }
    let mut out = BTreeMap::new();
    for (a, faces) in strands {
        let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap();
        let by_size: Vec<Vec<u32>> = (0..=top + 1)
            .map(|k| faces.iter().copied().filter(|f| f.count_ones() as usize == k).collect())
            .collect();
        // rank of ∂ from size k to size k-1 within the strand
        let boundary_rank = |k: usize| -> usize {
            if k < 2 || k > top {
                return 0;
            }
            let cols = &by_size[k - 1];
            let rows: Vec<Vec<i64>> = by_size[k]
                .iter()
                .map(|&f| {
                    let mut row = vec![0i64; cols.len()];
                    let mut sign = 1;
                    for i in 0..r {
                        if f >> i & 1 == 1 {
                            let face = f & !(1 << i);
                            if let Some(c) = cols.iter().position(|&x| x == face) {
                                row[c] = sign;
                            }
                            sign = -sign;
                        }
                    }
                    row
                })
                .collect();
            rational_rank(&rows)
        };
        for k in 1..=top {
            let b = by_size[k].len() - boundary_rank(k) - boundary_rank(k + 1);
            if b > 0 {
                out.insert((k - 1, a.clone()), b);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Strategies.

/// A small monomial ideal: up to `max_gens` generators in `nvars` variables
/// with exponents at most `max_exp`.
pub fn ideal_strategy(
    nvars: usize,
    max_gens: usize,
    max_exp: u32,
) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, nvars), 1..=max_gens).prop_map(
        move |gens| {
            MonomialIdeal::from_generators(nvars, gens.into_iter().map(Monomial::new).collect())
                .unwrap()
        },
    )
}

/// A random weighted oriented graph on 2..=max_n vertices. Each pair is
/// absent, or oriented one way or the other; sources get weight 1. With
/// `sinks_only`, weights above one are placed on sinks only.
pub fn graph_strategy(max_n: usize, sinks_only: bool) -> impl Strategy<Value = WeightedOrientedGraph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                prop::collection::vec(0u8..3, pairs),
                prop::collection::vec(1u32..=3, n),
            )
        })
        .prop_map(move |(n, choice, mut weights)| {
            let names = names(n);
            let mut arrows = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    match choice[k] {
                        1 => arrows.push((i, j)),
                        2 => arrows.push((j, i)),
                        _ => {}
                    }
                    k += 1;
                }
            }
            for v in 0..n {
                let has_in = arrows.iter().any(|&(_, h)| h == v);
                let has_out = arrows.iter().any(|&(t, _)| t == v);
                if !has_in || (sinks_only && has_out) {
                    weights[v] = 1;
                }
            }
            let vs: Vec<(&str, u32)> = names.iter().map(String::as_str).zip(weights).collect();
            let es: Vec<(&str, &str)> = arrows
                .iter()
                .map(|&(u, v)| (names[u].as_str(), names[v].as_str()))
                .collect();
            WeightedOrientedGraph::new(&vs, &es).unwrap()
        })
}
