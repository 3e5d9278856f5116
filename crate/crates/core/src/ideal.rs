//! Monomial ideals held by their canonical minimal generating set.
//!
//! Two ideals are equal exactly when their generator lists are equal, so the
//! derived `PartialEq` is ideal equality.

use std::collections::{HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// Drops every generator divisible by another and sorts canonically.
pub fn minimalize(nvars: usize, mut gens: Vec<Monomial>) -> MonomialIdeal {
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    let mut kept_support: Vec<u64> = Vec::with_capacity(gens.len());
    for m in gens {
        let support = m.support_bits();
        // Sorted by degree, so only earlier entries can divide `m`.
        let redundant = kept
            .iter()
            .zip(&kept_support)
            .any(|(g, &s)| s & !support == 0 && g.divides(&m));
        if !redundant {
            kept_support.push(support);
            kept.push(m);
        }
    }
    MonomialIdeal { nvars, gens: kept }
}

impl MonomialIdeal {
    pub fn from_generators(nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::AmbientMismatch {
                left: nvars,
                right: bad.nvars(),
            });
        }
        Ok(minimalize(nvars, gens))
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    pub fn principal(m: Monomial) -> Self {
        MonomialIdeal {
            nvars: m.nvars(),
            gens: vec![m],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    fn same_ambient(&self, other: &Self) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                left: self.nvars,
                right: other.nvars,
            })
        }
    }

    /// Whether some generator divides `m`.
    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        let support = m.support_bits();
        self.gens
            .iter()
            .take_while(|g| g.degree() <= m.degree())
            .any(|g| g.support_bits() & !support == 0 && g.divides(m))
    }

    /// Whether `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains_monomial(g))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(minimalize(self.nvars, gens))
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        let gens: Vec<Monomial> = self
            .gens
            .par_iter()
            .flat_map_iter(|a| other.gens.iter().map(move |b| a.mul(b)))
            .collect();
        Ok(minimalize(self.nvars, gens))
    }

    /// `I^k` by repeated multiplication, minimalizing after every step.
    /// `I^0` is the unit ideal.
    pub fn power(&self, k: u32) -> Self {
        let mut acc = MonomialIdeal::unit(self.nvars);
        for _ in 0..k {
            acc = acc.multiply(self).expect("same ambient");
        }
        acc
    }

    /// Minimal generators of the pairwise lcms.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        // A generator already inside the other ideal contributes only itself.
        let gens: Vec<Monomial> = self
            .gens
            .par_iter()
            .flat_map_iter(|a| -> Box<dyn Iterator<Item = Monomial> + Send + '_> {
                if other.contains_monomial(a) {
                    Box::new(std::iter::once(a.clone()))
                } else {
                    Box::new(other.gens.iter().map(move |b| a.lcm(b)))
                }
            })
            .collect();
        let mut gens = gens;
        gens.extend(
            other
                .gens
                .iter()
                .filter(|b| self.contains_monomial(b))
                .cloned(),
        );
        Ok(minimalize(self.nvars, gens))
    }

    /// Intersection of a non-empty family, folded in the given order.
    pub fn intersect_all<'a>(ideals: impl IntoIterator<Item = &'a MonomialIdeal>) -> Result<Self> {
        let mut iter = ideals.into_iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::InvalidArgument("empty intersection".into()))?;
        iter.try_fold(first.clone(), |acc, next| acc.intersect(next))
    }

    /// Least total degree of a generator.
    pub fn alpha(&self) -> Result<u64> {
        self.gens.first().map(Monomial::degree).ok_or(Error::ZeroIdeal)
    }

    pub fn max_generator_degree(&self) -> Option<u64> {
        self.gens.iter().map(Monomial::degree).max()
    }

    /// Applies a monomial map generator-wise and re-minimalizes.
    pub fn map_generators(&self, f: impl Fn(&Monomial) -> Monomial) -> Self {
        minimalize(self.nvars, self.gens.iter().map(f).collect())
    }

    /// Canonical text: `(g1, g2, ...)`, with `(0)` for the zero ideal.
    pub fn display<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> IdealDisplay<'a, S> {
        IdealDisplay { ideal: self, names }
    }

    pub fn generator_strings<S: AsRef<str>>(&self, names: &[S]) -> Vec<String> {
        self.gens
            .iter()
            .map(|g| g.display(names).to_string())
            .collect()
    }

    pub fn parse<S: AsRef<str>>(text: &str, names: &[S]) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("ideal must be parenthesized: {text:?}")))?
            .trim();
        if inner == "0" || inner.is_empty() {
            return Ok(MonomialIdeal::zero(names.len()));
        }
        let gens = inner
            .split(',')
            .map(|g| Monomial::parse(g, names))
            .collect::<Result<Vec<_>>>()?;
        Ok(minimalize(names.len(), gens))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.display(&names))
    }
}

pub struct IdealDisplay<'a, S> {
    ideal: &'a MonomialIdeal,
    names: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for IdealDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ideal.is_zero() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in self.ideal.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(self.names))?;
        }
        f.write_str(")")
    }
}

/// Above this many `generators × s` search states, [`power_membership`]
/// expands the power instead of searching.
pub const POWER_SEARCH_CUTOFF: u64 = 1_000_000;

/// Whether `m` is divisible by a product of `s` generators of `ideal`, i.e.
/// `m ∈ ideal^s`.
pub fn power_membership(m: &Monomial, ideal: &MonomialIdeal, s: u32) -> bool {
    if s == 0 {
        return true;
    }
    if ideal.len() as u64 * u64::from(s) > POWER_SEARCH_CUTOFF {
        return ideal.power(s).contains_monomial(m);
    }
    power_membership_search(m, ideal, s)
}

/// Memoized depth-first search over residual exponent vectors.
pub fn power_membership_search(m: &Monomial, ideal: &MonomialIdeal, s: u32) -> bool {
    fn search(
        residual: &Monomial,
        left: u32,
        gens: &[Monomial],
        min_degree: u64,
        memo: &mut HashMap<(Monomial, u32), bool>,
    ) -> bool {
        if left == 0 {
            return true;
        }
        if residual.degree() < min_degree * u64::from(left) {
            return false;
        }
        if let Some(&known) = memo.get(&(residual.clone(), left)) {
            return known;
        }
        let found = gens.iter().any(|g| {
            residual
                .checked_div(g)
                .is_some_and(|rest| search(&rest, left - 1, gens, min_degree, memo))
        });
        memo.insert((residual.clone(), left), found);
        found
    }
    let Some(min_degree) = ideal.generators().first().map(Monomial::degree) else {
        return false;
    };
    search(m, s, ideal.generators(), min_degree, &mut HashMap::new())
}

/// All monomials of degree at most `bound` in `outer` but not in `inner`,
/// canonically sorted. Requires `inner ⊆ outer`.
pub fn monomials_in_difference(
    outer: &MonomialIdeal,
    inner: &MonomialIdeal,
    bound: u64,
) -> Result<Vec<Monomial>> {
    outer.same_ambient(inner)?;
    if let Some(g) = inner.generators().iter().find(|g| !outer.contains_monomial(g)) {
        return Err(Error::NotContained(format!(
            "generator {g:?} of the smaller ideal lies outside the larger one"
        )));
    }
    Ok(multiples_outside(outer, inner, bound))
}

/// Multiples of `outer`'s generators of degree at most `bound` that avoid
/// `inner`, without any containment requirement.
///
/// Each monomial is produced once, by the first generator dividing it.
pub fn multiples_outside(outer: &MonomialIdeal, inner: &MonomialIdeal, bound: u64) -> Vec<Monomial> {
    let gens = outer.generators();
    let nvars = outer.nvars();
    let mut found: Vec<Monomial> = (0..gens.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let g = &gens[i];
            let mut out = Vec::new();
            if g.degree() > bound {
                return out;
            }
            let budget = bound - g.degree();
            let mut exps = g.exponents().to_vec();
            for_each_extension(&mut exps, 0, budget, nvars, &mut |exps| {
                let m = Monomial::new(exps.to_vec());
                if gens[..i].iter().any(|h| h.divides(&m)) {
                    return;
                }
                if !inner.contains_monomial(&m) {
                    out.push(m);
                }
            });
            out
        })
        .collect();
    found.sort_unstable();
    debug_assert!(found.iter().collect::<HashSet<_>>().len() == found.len());
    found
}

/// Visits every exponent vector obtained by adding at most `budget` in total
/// to positions `var..`.
fn for_each_extension(
    exps: &mut [u32],
    var: usize,
    budget: u64,
    nvars: usize,
    visit: &mut impl FnMut(&[u32]),
) {
    if var == nvars {
        visit(exps);
        return;
    }
    let base = exps[var];
    for extra in 0..=budget {
        exps[var] = base + extra as u32;
        for_each_extension(exps, var + 1, budget - extra, nvars, visit);
    }
    exps[var] = base;
}
