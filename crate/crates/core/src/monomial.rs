//! Monomials as exponent vectors, with a canonical text form.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// `x^a` for an exponent vector `a` over a fixed variable order.
///
/// The derived `Ord` is the canonical order used for every generator list:
/// total degree first, then descending lexicographic order of exponents (so
/// `x1^2*x5` precedes `x1*x2^2`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u64,
}

fn add_exp(a: u32, b: u32) -> u32 {
    a.checked_add(b).expect("exponent overflow")
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().map(|&e| u64::from(e)).sum();
        Monomial {
            exps: exps.into_boxed_slice(),
            degree,
        }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial::new(vec![0; nvars])
    }

    /// `x_var^exp`.
    pub fn var_power(nvars: usize, var: usize, exp: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[var] = exp;
        Monomial::new(exps)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Bit `i` set iff `x_i` occurs (variables past 63 are folded onto bit 63).
    pub fn support_bits(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1u64 << i.min(63)))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| add_exp(a, b))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial::new)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .map(|&e| e.checked_mul(k).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Multiplies the exponent of `var` by `by`.
    pub fn scale_var(&self, var: usize, by: u32) -> Monomial {
        let mut exps = self.exps.to_vec();
        exps[var] = exps[var].checked_mul(by).expect("exponent overflow");
        Monomial::new(exps)
    }

    pub fn with_exponent(&self, var: usize, exp: u32) -> Monomial {
        let mut exps = self.exps.to_vec();
        exps[var] = exp;
        Monomial::new(exps)
    }

    /// Canonical text such as `x1^2*x3`, or `1`.
    pub fn display<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> MonomialDisplay<'a, S> {
        MonomialDisplay { mono: self, names }
    }

    /// Parses the canonical text form against a list of variable names.
    pub fn parse<S: AsRef<str>>(text: &str, names: &[S]) -> Result<Monomial> {
        let text = text.trim();
        let mut exps = vec![0u32; names.len()];
        if text == "1" {
            return Ok(Monomial::new(exps));
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((name, exp)) => {
                    let exp: u32 = exp
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
                    (name.trim(), exp)
                }
                None => (factor, 1),
            };
            let var = names
                .iter()
                .position(|n| n.as_ref() == name)
                .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
            exps[var] = add_exp(exps[var], exp);
        }
        Ok(Monomial::new(exps))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars()).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.display(&names))
    }
}

pub struct MonomialDisplay<'a, S> {
    mono: &'a Monomial,
    names: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for MonomialDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.names[i].as_ref())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All exponent vectors over `nvars` variables with total degree exactly `d`,
/// in descending lexicographic order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(var: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var + 1 == cur.len() {
            cur[var] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[var] = e;
            rec(var + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(0, d, &mut vec![0; nvars], &mut out);
    out
}
