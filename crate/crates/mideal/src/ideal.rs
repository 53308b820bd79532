//! Monomial ideals in canonical form and their basic algebra.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A proper, nonzero monomial ideal stored by its minimal generators.
///
/// Generators are kept strictly descending in lex, so two ideals are equal
/// exactly when their canonical generator lists are equal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealSpec", into = "IdealSpec")]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Wire form of an ideal: `{"n": 4, "gens": ["x1*x2*x3", "x3*x4"]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealSpec {
    pub n: usize,
    pub gens: Vec<String>,
}

/// Minimal primes of an ideal, each given by its set of variable indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeDecomposition {
    pub primes: Vec<Vec<usize>>,
}

/// Sort descending in lex and drop duplicates.
pub fn sort_desc(v: &mut Vec<Monomial>) {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v.dedup();
}

/// The divisibility-minimal elements of `gens`, descending in lex.
/// Unlike [`MonomialIdeal::minimalize`] this accepts `1` and the empty list.
pub fn minimal_elements(gens: &[Monomial]) -> Vec<Monomial> {
    let mut by_deg: Vec<&Monomial> = gens.iter().collect();
    by_deg.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    let mut kept: Vec<Monomial> = Vec::new();
    for g in by_deg {
        if !kept.iter().any(|k| k.divides(g)) {
            kept.push(g.clone());
        }
    }
    sort_desc(&mut kept);
    kept
}

/// If every element of `gens` is a variable, the sorted variable indices.
pub fn variable_indices(gens: &[Monomial]) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(gens.len());
    for g in gens {
        if g.degree() != 1 {
            return None;
        }
        out.push(g.min_index()?);
    }
    out.sort_unstable();
    out.dedup();
    Some(out)
}

impl MonomialIdeal {
    /// Canonical ideal generated by `gens` in `n` variables.
    pub fn minimalize(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        for g in &gens {
            if g.n() != n {
                return Err(Error::DimensionMismatch(n, g.n()));
            }
            if g.is_one() {
                return Err(Error::UnitIdeal);
            }
        }
        Ok(MonomialIdeal { n, gens: minimal_elements(&gens) })
    }

    /// Parse generator strings in `n` variables.
    pub fn parse<S: AsRef<str>>(n: usize, gens: &[S]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|s| Monomial::parse(s.as_ref(), n))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(n, gens)
    }

    /// The maximal ideal power `m^d`.
    pub fn max_power(n: usize, d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::UnitIdeal);
        }
        MonomialIdeal::minimalize(n, crate::monomial::monomials_of_degree(n, d))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let spec: IdealSpec = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        MonomialIdeal::try_from(spec)
    }

    pub fn to_spec(&self) -> IdealSpec {
        IdealSpec { n: self.n, gens: self.gens.iter().map(|g| g.to_string()).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// The common degree of the generators, if there is one.
    pub fn generation_degree(&self) -> Option<u32> {
        let d = self.gens[0].degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if self.n != n {
            Err(Error::DimensionMismatch(self.n, n))
        } else {
            Ok(())
        }
    }

    /// Whether some generator divides `w`.
    pub fn contains(&self, w: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(w))
    }

    /// Checked membership.
    pub fn membership(&self, w: &Monomial) -> Result<bool> {
        self.check_n(w.n())?;
        Ok(self.contains(w))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_n(other.n)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::minimalize(self.n, gens)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_n(other.n)?;
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::minimalize(self.n, gens)
    }

    /// Minimal generators of `I : u`. The list is `[1]` when `u` lies in `I`.
    pub fn colon_gens(&self, u: &Monomial) -> Result<Vec<Monomial>> {
        self.check_n(u.n())?;
        Ok(colon_of(&self.gens, u))
    }

    /// `I : u` as an ideal; fails with a unit-ideal error when `u` is in `I`.
    pub fn colon(&self, u: &Monomial) -> Result<MonomialIdeal> {
        let gens = self.colon_gens(u)?;
        MonomialIdeal::minimalize(self.n, gens)
    }

    pub fn radical(&self) -> MonomialIdeal {
        let gens: Vec<Monomial> = self
            .gens
            .iter()
            .map(|g| Monomial::new(g.exponents().iter().map(|&e| e.min(1)).collect()))
            .collect();
        MonomialIdeal { n: self.n, gens: minimal_elements(&gens) }
    }

    /// Minimal primes, as minimal vertex covers of the support hypergraph.
    /// Sorted by size, then lexicographically.
    pub fn minimal_primes(&self) -> Result<PrimeDecomposition> {
        if self.n > 64 {
            return Err(Error::Unsupported(format!(
                "minimal primes need n <= 64, got {}",
                self.n
            )));
        }
        let edges: Vec<u64> = self.radical().gens.iter().map(support_mask).collect();
        let mut covers = Vec::new();
        transversals(&edges, 0, 0, &mut covers);
        covers.sort_unstable_by_key(|c| (c.count_ones(), *c));
        covers.dedup();
        let mut minimal: Vec<u64> = Vec::new();
        for c in covers {
            if !minimal.iter().any(|m| m & c == *m) {
                minimal.push(c);
            }
        }
        let mut primes: Vec<Vec<usize>> = minimal.iter().map(|&m| mask_to_set(m)).collect();
        primes.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(PrimeDecomposition { primes })
    }

    /// `(radical, minimal primes)`.
    pub fn radical_and_primes(&self) -> Result<(MonomialIdeal, PrimeDecomposition)> {
        Ok((self.radical(), self.minimal_primes()?))
    }

    /// Height of `I`: the smallest size of a minimal prime.
    pub fn height(&self) -> Result<usize> {
        let p = self.minimal_primes()?;
        Ok(p.primes.iter().map(Vec::len).min().unwrap_or(0))
    }

    /// Krull dimension of `S/I`.
    pub fn krull_dim(&self) -> Result<usize> {
        Ok(self.n - self.height()?)
    }

    /// The same generators viewed in `n + extra` variables.
    pub fn extend_vars(&self, extra: usize) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = g.exponents().to_vec();
                e.resize(self.n + extra, 0);
                Monomial::new(e)
            })
            .collect();
        MonomialIdeal { n: self.n + extra, gens }
    }
}

/// Minimal generators of `(gens) : u`.
pub fn colon_of(gens: &[Monomial], u: &Monomial) -> Vec<Monomial> {
    let quotients: Vec<Monomial> = gens.iter().map(|g| g.colon(u)).collect();
    minimal_elements(&quotients)
}

/// Bitmask of the support, bit `i - 1` for `x_i`.
pub fn support_mask(u: &Monomial) -> u64 {
    u.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |m, (k, _)| m | (1u64 << k))
}

/// 1-based indices of the set bits.
pub fn mask_to_set(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        let k = m.trailing_zeros() as usize;
        out.push(k + 1);
        m &= m - 1;
    }
    out
}

/// Bitmask of a set of 1-based indices.
pub fn set_to_mask(set: &[usize]) -> u64 {
    set.iter().fold(0u64, |m, &i| m | (1u64 << (i - 1)))
}

// Branch on the smallest uncovered edge. Vertices tried earlier in a branch
// are forbidden in later siblings, so each cover is produced at most once.
fn transversals(edges: &[u64], chosen: u64, forbidden: u64, out: &mut Vec<u64>) {
    let mut best: Option<u64> = None;
    for &e in edges {
        if e & chosen != 0 {
            continue;
        }
        let avail = e & !forbidden;
        if avail == 0 {
            return;
        }
        if best.is_none_or(|b| avail.count_ones() < b.count_ones()) {
            best = Some(avail);
        }
    }
    let Some(mut avail) = best else {
        out.push(chosen);
        return;
    };
    let mut forb = forbidden;
    while avail != 0 {
        let bit = avail & avail.wrapping_neg();
        transversals(edges, chosen | bit, forb, out);
        forb |= bit;
        avail &= avail - 1;
    }
}

impl TryFrom<IdealSpec> for MonomialIdeal {
    type Error = Error;

    fn try_from(spec: IdealSpec) -> Result<Self> {
        MonomialIdeal::parse(spec.n, &spec.gens)
    }
}

impl From<MonomialIdeal> for IdealSpec {
    fn from(i: MonomialIdeal) -> Self {
        i.to_spec()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {} vars", self.n)
    }
}
