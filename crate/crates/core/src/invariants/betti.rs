//! Multigraded Betti numbers over the rationals, computed from the reduced
//! homology of upper Koszul simplicial complexes
//! `K^a(I) = {S ⊆ supp(a) : x^a / x_S ∈ I}`, with `β_{i,a}(I) = dim H̃_{i-1}(K^a(I))`.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;

use super::rank::rank;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

pub const MAX_VARIABLES: usize = 8;
pub const MAX_GENERATORS: usize = 64;

/// Nonzero multigraded Betti numbers `β_{i,a}` keyed by `(i, x^a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, Monomial), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, a: &Monomial) -> usize {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    /// `max{|a| - i : β_{i,a} ≠ 0}`; `None` for the zero ideal.
    pub fn regularity(&self) -> Option<u64> {
        self.entries
            .keys()
            .map(|(i, a)| a.degree() - *i as u64)
            .max()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// Coarsened table `(i, total degree) → β_{i,d}`.
    pub fn graded(&self) -> BTreeMap<(usize, u64), usize> {
        let mut out = BTreeMap::new();
        for ((i, a), b) in &self.entries {
            *out.entry((*i, a.degree())).or_insert(0) += b;
        }
        out
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .map(|(_, b)| b)
            .sum()
    }
}

fn check_size(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.nvars() > MAX_VARIABLES {
        return Err(Error::Limit(format!(
            "Betti tables need at most {MAX_VARIABLES} variables, got {}",
            ideal.nvars()
        )));
    }
    if ideal.len() > MAX_GENERATORS {
        return Err(Error::Limit(format!(
            "Betti tables need at most {MAX_GENERATORS} generators, got {}",
            ideal.len()
        )));
    }
    Ok(())
}

/// Every lcm of a nonempty set of generators.
pub fn lcm_lattice(gens: &[Monomial]) -> Vec<Monomial> {
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = seen.iter().cloned().collect();
    while !frontier.is_empty() {
        let next: Vec<Monomial> = frontier
            .par_iter()
            .flat_map_iter(|m| gens.iter().map(move |g| m.lcm(g)))
            .collect();
        frontier = next.into_iter().filter(|m| seen.insert(m.clone())).collect();
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort();
    out
}

/// Faces of `K^a(I)` as bitmasks over variable indices.
pub fn upper_koszul_faces(ideal: &MonomialIdeal, a: &Monomial) -> Vec<u32> {
    let support: Vec<usize> = (0..a.nvars()).filter(|&j| a.exponent(j) > 0).collect();
    let mut faces = Vec::new();
    for sub in 0u32..(1 << support.len()) {
        let mut exps = a.exponents().to_vec();
        let mut mask = 0u32;
        for (bit, &j) in support.iter().enumerate() {
            if sub >> bit & 1 == 1 {
                exps[j] -= 1;
                mask |= 1 << j;
            }
        }
        if ideal.contains_monomial(&Monomial::new(exps)) {
            faces.push(mask);
        }
    }
    faces
}

/// Ranks of reduced homology of a simplicial complex given by its faces
/// (closed under subsets, including the empty face when nonempty), indexed by
/// face size: entry `k` is `dim H̃_{k-1}`.
pub fn reduced_homology_by_size(faces: &[u32]) -> Vec<usize> {
    if faces.is_empty() {
        return Vec::new();
    }
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    for level in &mut by_size {
        level.sort_unstable();
    }
    // boundary_rank[k] = rank of ∂ from size-k faces to size-(k-1) faces.
    let mut boundary_rank = vec![0usize; top + 2];
    for k in 1..=top {
        let index: HashMap<u32, usize> = by_size[k - 1]
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i))
            .collect();
        let rows: Vec<Vec<i64>> = by_size[k]
            .iter()
            .map(|&f| {
                let mut row = vec![0i64; by_size[k - 1].len()];
                let mut sign = 1;
                for v in 0..32 {
                    if f >> v & 1 == 1 {
                        let col = index[&(f & !(1 << v))];
                        row[col] = sign;
                        sign = -sign;
                    }
                }
                row
            })
            .collect();
        boundary_rank[k] = rank(&rows);
    }
    (0..=top)
        .map(|k| by_size[k].len() - boundary_rank[k] - boundary_rank[k + 1])
        .collect()
}

/// Multigraded Betti numbers of `I` over the rationals.
pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    check_size(ideal)?;
    let gens = ideal.generators();
    let candidates = lcm_lattice(gens);
    let found: Vec<Vec<((usize, Monomial), usize)>> = candidates
        .par_iter()
        .map(|a| {
            let faces = upper_koszul_faces(ideal, a);
            reduced_homology_by_size(&faces)
                .into_iter()
                .enumerate()
                .filter(|&(_, b)| b > 0)
                .map(|(i, b)| ((i, a.clone()), b))
                .collect()
        })
        .collect();
    let table = BettiTable {
        entries: found.into_iter().flatten().collect(),
    };
    let zeroth: Vec<&Monomial> = table
        .entries
        .keys()
        .filter(|(i, _)| *i == 0)
        .map(|(_, a)| a)
        .collect();
    if zeroth.len() != gens.len() || zeroth.iter().zip(gens).any(|(a, g)| *a != g) {
        return Err(Error::identity(
            "degree-zero Betti numbers are the minimal generators",
            format!("{} entries for {} generators", zeroth.len(), gens.len()),
        ));
    }
    Ok(table)
}

/// Castelnuovo-Mumford regularity of the ideal `I` (so `reg R/I = reg I - 1`).
pub fn regularity(ideal: &MonomialIdeal) -> Result<u64> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    Ok(betti_table(ideal)?
        .regularity()
        .expect("nonzero ideal has generators"))
}
