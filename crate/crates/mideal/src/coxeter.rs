//! Symmetric groups as Coxeter systems: permutations, words, Demazure
//! products and subword complexes `Δ(Q, π)` together with the linear
//! quotients of their dual Stanley-Reisner ideals.
//!
//! Words are read left to right and `s_i = (i, i+1)`. A permutation is kept
//! in one-line notation; `π s_i` swaps the entries in positions `i, i+1` and
//! `s_i π` swaps the values `i, i+1`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::ideal::{mask_to_set, MonomialIdeal};
use crate::monomial::{binomial, Monomial};
use crate::quotients::{check_order, CheckOutcome, QuotientCertificate};
use crate::simplicial::SimplicialComplex;

/// Default guards for subword enumeration.
pub const MAX_RANK: usize = 7;
pub const MAX_WORD: usize = 14;

/// A permutation of `[m]` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    w: Vec<u8>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation { w: (1..=m as u8).collect() }
    }

    /// The simple reflection `s_i`, `1 <= i < m`.
    pub fn simple(m: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= m {
            return Err(Error::Invalid(format!("s_{i} is not a simple reflection of S_{m}")));
        }
        let mut p = Permutation::identity(m);
        p.w.swap(i - 1, i);
        Ok(p)
    }

    pub fn from_one_line(values: &[usize]) -> Result<Self> {
        let m = values.len();
        if m > u8::MAX as usize {
            return Err(Error::Unsupported(format!("S_{m} is too large")));
        }
        let mut seen = vec![false; m + 1];
        for &v in values {
            if v == 0 || v > m || seen[v] {
                return Err(Error::Parse(format!("{values:?} is not a permutation of 1..{m}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { w: values.iter().map(|&v| v as u8).collect() })
    }

    /// Product of disjoint or overlapping cycles such as `(1 2 4)(3 5)` or
    /// `(1,2,4)`; cycles are composed right to left.
    pub fn from_cycles(m: usize, s: &str) -> Result<Self> {
        let mut p = Permutation::identity(m);
        let s = s.trim();
        if s.is_empty() || s == "()" || s == "id" {
            return Ok(p);
        }
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("bad cycle syntax: {s}")))?;
            let close = open.find(')').ok_or_else(|| Error::Parse(format!("unclosed cycle: {s}")))?;
            let body = &open[..close];
            let cycle = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad entry {t:?} in {s}"))))
                .collect::<Result<Vec<usize>>>()?;
            let mut distinct = cycle.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != cycle.len() || cycle.iter().any(|&v| v == 0 || v > m) {
                return Err(Error::Parse(format!("cycle ({body}) is not a cycle on 1..{m}")));
            }
            cycles.push(cycle);
            rest = open[close + 1..].trim_start();
        }
        for cycle in cycles.iter().rev() {
            let mut c = Permutation::identity(m);
            for (k, &a) in cycle.iter().enumerate() {
                c.w[a - 1] = cycle[(k + 1) % cycle.len()] as u8;
            }
            p = c.mul(&p);
        }
        Ok(p)
    }

    /// `cycle:(1 2 4)`, `line:2,4,3,1`, a bare cycle string starting with
    /// `(`, or a bare comma separated one-line list.
    pub fn parse(m: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        let line = |t: &str| -> Result<Self> {
            let v = t
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<usize>().map_err(|_| Error::Parse(format!("bad entry {x:?}"))))
                .collect::<Result<Vec<_>>>()?;
            if v.len() != m {
                return Err(Error::Parse(format!("one-line notation {t:?} has {} entries, expected {m}", v.len())));
            }
            Permutation::from_one_line(&v)
        };
        if let Some(c) = s.strip_prefix("cycle:") {
            Permutation::from_cycles(m, c)
        } else if let Some(l) = s.strip_prefix("line:") {
            line(l)
        } else if s.starts_with('(') || s == "id" {
            Permutation::from_cycles(m, s)
        } else {
            line(s)
        }
    }

    pub fn m(&self) -> usize {
        self.w.len()
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.w.iter().map(|&v| v as usize).collect()
    }

    /// `π(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.w[i - 1] as usize
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.w;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.w.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Composition `(self other)(x) = self(other(x))`.
    pub fn mul(&self, other: &Permutation) -> Permutation {
        Permutation { w: other.w.iter().map(|&v| self.w[v as usize - 1]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut w = vec![0u8; self.w.len()];
        for (i, &v) in self.w.iter().enumerate() {
            w[v as usize - 1] = (i + 1) as u8;
        }
        Permutation { w }
    }

    /// `π s_i`.
    pub fn times_simple(&self, i: usize) -> Permutation {
        let mut p = self.clone();
        p.w.swap(i - 1, i);
        p
    }

    /// `s_i π`.
    pub fn simple_times(&self, i: usize) -> Permutation {
        let mut p = self.clone();
        for v in p.w.iter_mut() {
            if *v as usize == i {
                *v += 1;
            } else if *v as usize == i + 1 {
                *v -= 1;
            }
        }
        p
    }

    /// `i` with `ℓ(π s_i) < ℓ(π)`.
    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.m()).filter(|&i| self.w[i - 1] > self.w[i]).collect()
    }

    /// `i` with `ℓ(s_i π) < ℓ(π)`: the value `i + 1` comes before `i`.
    pub fn left_descents(&self) -> Vec<usize> {
        (1..self.m()).filter(|&i| self.is_left_descent(i)).collect()
    }

    fn is_left_descent(&self, i: usize) -> bool {
        let pos = |v: usize| self.w.iter().position(|&x| x as usize == v);
        pos(i + 1) < pos(i)
    }

    /// Disjoint cycle notation, fixed points omitted.
    pub fn to_cycles(&self) -> String {
        let mut seen = vec![false; self.m() + 1];
        let mut out = String::new();
        for start in 1..=self.m() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            let body: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("({})", body.join(" ")));
        }
        if out.is_empty() {
            "id".into()
        } else {
            out
        }
    }

    /// Bruhat order `self ⪯ other`, through the subword property on one
    /// fixed reduced word of `other`.
    pub fn bruhat_le(&self, other: &Permutation) -> Result<bool> {
        if self.m() != other.m() {
            return Err(Error::DimensionMismatch(other.m(), self.m()));
        }
        let word = CoxeterWord { m: other.m(), letters: reduced_word(other) };
        Ok(word.contains(self))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.w.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", v.join(","))
    }
}

/// Every reduced word of `π`, sorted.
pub fn reduced_words(pi: &Permutation) -> Vec<Vec<usize>> {
    fn go(p: &Permutation, memo: &mut HashMap<Permutation, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
        if p.is_identity() {
            return vec![Vec::new()];
        }
        if let Some(v) = memo.get(p) {
            return v.clone();
        }
        let mut out = Vec::new();
        for i in p.right_descents() {
            for mut w in go(&p.times_simple(i), memo) {
                w.push(i);
                out.push(w);
            }
        }
        out.sort();
        memo.insert(p.clone(), out.clone());
        out
    }
    go(pi, &mut HashMap::new())
}

/// The lexicographically last reduced word, built by peeling the largest
/// right descent.
pub fn reduced_word(pi: &Permutation) -> Vec<usize> {
    let mut p = pi.clone();
    let mut rev = Vec::with_capacity(p.length());
    while let Some(&i) = p.right_descents().last() {
        rev.push(i);
        p = p.times_simple(i);
    }
    rev.reverse();
    rev
}

/// A word `Q = (σ_1, ..., σ_n)` in the simple reflections of `S_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterWord {
    m: usize,
    letters: Vec<usize>,
}

impl CoxeterWord {
    pub fn new(m: usize, letters: Vec<usize>) -> Result<Self> {
        if m == 0 || m > u8::MAX as usize {
            return Err(Error::Invalid(format!("symmetric group S_{m}")));
        }
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i >= m) {
            return Err(Error::Invalid(format!("letter {bad} is not a simple reflection of S_{m}")));
        }
        Ok(CoxeterWord { m, letters })
    }

    /// Comma or space separated letter indices, e.g. `1,2,1,3`.
    pub fn parse(m: usize, s: &str) -> Result<Self> {
        let letters = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                let t = t.trim_start_matches('s');
                t.parse::<usize>().map_err(|_| Error::Parse(format!("bad letter {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        CoxeterWord::new(m, letters)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The ordinary product `σ_1 ⋯ σ_n`.
    pub fn product(&self) -> Permutation {
        self.letters.iter().fold(Permutation::identity(self.m), |p, &i| p.times_simple(i))
    }

    pub fn is_reduced(&self) -> bool {
        self.product().length() == self.len()
    }

    /// The Demazure product `δ(Q)`.
    pub fn demazure_product(&self) -> Permutation {
        demazure_of(self.m, self.letters.iter().copied())
    }

    /// The subword at the positions in `mask` (bit `k - 1` for position `k`).
    pub fn restrict(&self, mask: u64) -> CoxeterWord {
        let letters = self.letters.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &i)| i).collect();
        CoxeterWord { m: self.m, letters }
    }

    /// Whether some subword is a reduced word of `π`.
    pub fn contains(&self, pi: &Permutation) -> bool {
        pi.m() == self.m && Representations::new(self).feasible(0, pi)
    }

    /// Position sets `P` (as masks) such that `Q|_P` is a reduced word of `π`.
    pub fn representing_subwords(&self, pi: &Permutation) -> Result<Vec<u64>> {
        if pi.m() != self.m {
            return Err(Error::DimensionMismatch(self.m, pi.m()));
        }
        if self.len() > 64 {
            return Err(Error::Unsupported(format!("word of size {} (at most 64)", self.len())));
        }
        let mut rep = Representations::new(self);
        let mut out = Vec::new();
        rep.collect(0, pi.clone(), 0, &mut out);
        out.sort_unstable();
        Ok(out)
    }
}

impl fmt::Display for CoxeterWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

fn demazure_of(m: usize, letters: impl Iterator<Item = usize>) -> Permutation {
    let mut p = Permutation::identity(m);
    for i in letters {
        if p.w[i - 1] < p.w[i] {
            p.w.swap(i - 1, i);
        }
    }
    p
}

/// DP over (position, remaining element `u` with `π = (prefix) u`).
struct Representations<'a> {
    letters: &'a [usize],
    memo: HashMap<(usize, Permutation), bool>,
}

impl<'a> Representations<'a> {
    fn new(word: &'a CoxeterWord) -> Self {
        Representations { letters: &word.letters, memo: HashMap::new() }
    }

    fn feasible(&mut self, pos: usize, u: &Permutation) -> bool {
        if u.is_identity() {
            return true;
        }
        if self.letters.len() - pos < u.length() {
            return false;
        }
        let key = (pos, u.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let s = self.letters[pos];
        let ok = (u.is_left_descent(s) && self.feasible(pos + 1, &u.simple_times(s))) || self.feasible(pos + 1, u);
        self.memo.insert(key, ok);
        ok
    }

    fn collect(&mut self, pos: usize, u: Permutation, chosen: u64, out: &mut Vec<u64>) {
        if u.is_identity() {
            out.push(chosen);
            return;
        }
        if !self.feasible(pos, &u) {
            return;
        }
        let s = self.letters[pos];
        if u.is_left_descent(s) {
            let v = u.simple_times(s);
            if self.feasible(pos + 1, &v) {
                self.collect(pos + 1, v, chosen | 1 << pos, out);
            }
        }
        self.collect(pos + 1, u, chosen, out);
    }
}

/// `Δ(Q, π)`: facets `Q ∖ P` for the representing subwords `P`, and the
/// dual generators `x_P` in descending lex order.
#[derive(Clone, Debug)]
pub struct SubwordComplex {
    pub word: CoxeterWord,
    pub pi: Permutation,
    pub length: usize,
    /// Representing position sets, aligned with `dual_generators`.
    pub representing: Vec<Vec<usize>>,
    pub facets: Vec<Vec<usize>>,
    pub dual_generators: Vec<Monomial>,
    pub complex: SimplicialComplex,
}

impl SubwordComplex {
    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// `r`, the number of representing subwords.
    pub fn r(&self) -> usize {
        self.representing.len()
    }

    pub fn contains_pi(&self) -> bool {
        !self.representing.is_empty()
    }

    /// `I_{Δ^∨}`; errors for the unit ideal (`π = 1`) and the void complex.
    pub fn dual_ideal(&self) -> Result<MonomialIdeal> {
        if !self.contains_pi() {
            return Err(Error::Invalid(format!("{} does not contain {}", self.word, self.pi.to_cycles())));
        }
        MonomialIdeal::minimalize(self.n(), self.dual_generators.clone())
    }
}

/// Build `Δ(Q, π)`. A word that does not contain `π` gives the void
/// complex with no representing subwords.
pub fn subword_complex(word: &CoxeterWord, pi: &Permutation) -> Result<SubwordComplex> {
    if pi.m() != word.m() {
        return Err(Error::DimensionMismatch(word.m(), pi.m()));
    }
    if word.m() > MAX_RANK || word.len() > MAX_WORD {
        return Err(Error::Unsupported(format!(
            "S_{} with a word of size {} exceeds the guards (S_{MAX_RANK}, size {MAX_WORD})",
            word.m(),
            word.len()
        )));
    }
    let n = word.len();
    let masks = word.representing_subwords(pi)?;
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut keyed: Vec<(Monomial, u64)> = masks
        .iter()
        .map(|&p| (Monomial::from_support(n, &mask_to_set(p)).expect("positions in range"), p))
        .collect();
    keyed.sort_by(|a, b| b.0.cmp(&a.0));
    let representing: Vec<Vec<usize>> = keyed.iter().map(|(_, p)| mask_to_set(*p)).collect();
    let facets: Vec<Vec<usize>> = keyed.iter().map(|(_, p)| mask_to_set(full & !p)).collect();
    let complex = SimplicialComplex::from_masks(n, keyed.iter().map(|(_, p)| full & !p));
    Ok(SubwordComplex {
        word: word.clone(),
        pi: pi.clone(),
        length: pi.length(),
        representing,
        facets,
        dual_generators: keyed.into_iter().map(|(u, _)| u).collect(),
        complex,
    })
}

/// Linear quotients of `I_{Δ^∨}` in lex order, with the shelling they
/// induce.
#[derive(Clone, Debug)]
pub struct DualQuotients {
    pub certificate: QuotientCertificate,
    /// `{min(P_j ∖ P_i) : j < i}` for each `i`.
    pub comparing_sets: Vec<Vec<usize>>,
    /// Facets in shelling order.
    pub shelling: Vec<Vec<usize>>,
    pub d: Vec<usize>,
}

/// Certify the lex order of the dual generators. Failure of the lex order,
/// or a colon set different from the min formula, is an invariant
/// violation.
pub fn dual_quotients(sc: &SubwordComplex) -> Result<DualQuotients> {
    if sc.length == 0 {
        return Err(Error::Unsupported("π = 1: the dual ideal is the unit ideal".into()));
    }
    let ideal = sc.dual_ideal()?;
    let certificate = match check_order(&ideal, &sc.dual_generators)? {
        CheckOutcome::Certified(c) => c,
        CheckOutcome::Failed(f) => {
            return Err(Error::Invariant(format!(
                "lex order of the dual generators of Δ({}, {}) fails at i = {}",
                sc.word,
                sc.pi.to_cycles(),
                f.i
            )))
        }
    };
    let p = &sc.representing;
    let comparing_sets: Vec<Vec<usize>> = (0..p.len())
        .map(|i| {
            let s: BTreeSet<usize> =
                (0..i).map(|j| *p[j].iter().find(|v| !p[i].contains(v)).expect("distinct sets")).collect();
            s.into_iter().collect()
        })
        .collect();
    if comparing_sets != certificate.sets() {
        return Err(Error::Invariant(format!(
            "colon sets {:?} differ from the min formula {:?}",
            certificate.sets(),
            comparing_sets
        )));
    }
    let d = certificate.set_sizes();
    Ok(DualQuotients { certificate, comparing_sets, shelling: sc.facets.clone(), d })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub projdim_dual: usize,
    /// `n - ℓ(π)`.
    pub projdim_dual_bound: usize,
    /// Upper bound `n - ℓ(π) + 1` for `reg(I_Δ)`.
    pub reg_bound: usize,
    /// `projdim k[Δ] = ℓ(π)`.
    pub projdim_sr: usize,
}

pub fn bounds_report(sc: &SubwordComplex, q: &DualQuotients) -> Result<Bounds> {
    let projdim_dual = q.d.iter().copied().max().unwrap_or(0);
    let bound = sc.n() - sc.length;
    if projdim_dual > bound {
        return Err(Error::Invariant(format!("projdim(I_Δ∨) = {projdim_dual} exceeds n - ℓ(π) = {bound}")));
    }
    Ok(Bounds { projdim_dual, projdim_dual_bound: bound, reg_bound: bound + 1, projdim_sr: sc.length })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Topology {
    Sphere,
    Ball,
}

/// Sphere when `δ(Q) = π`, ball otherwise.
pub fn sphere_or_ball(word: &CoxeterWord, pi: &Permutation) -> Result<Topology> {
    if !word.contains(pi) {
        return Err(Error::Invalid(format!("{word} does not contain {}", pi.to_cycles())));
    }
    Ok(if word.demazure_product() == *pi { Topology::Sphere } else { Topology::Ball })
}

/// `Σ (-1)^{|P| - ℓ(π)} t^{|P|}` over all subwords with `δ(P) = π`, as
/// coefficients indexed by degree `0..=n`.
pub fn k_polynomial_by_enumeration(word: &CoxeterWord, pi: &Permutation) -> Result<Vec<i64>> {
    let n = word.len();
    if n > 30 {
        return Err(Error::Unsupported(format!("2^{n} subwords")));
    }
    let l = pi.length();
    let counts = subword_counts(word, pi);
    Ok(counts.iter().enumerate().map(|(k, &c)| if (k + l).is_multiple_of(2) { c as i64 } else { -(c as i64) }).collect())
}

/// `m_k`: the number of position sets `P`, `|P| = k`, with `δ(Q|_P) = π`.
pub fn subword_counts(word: &CoxeterWord, pi: &Permutation) -> Vec<u64> {
    let n = word.len();
    let l = pi.length() as u32;
    (0u64..1 << n)
        .into_par_iter()
        .filter(|p| p.count_ones() >= l)
        .filter(|&p| demazure_of(word.m, word.letters.iter().enumerate().filter(|(k, _)| p >> k & 1 == 1).map(|(_, &i)| i)) == *pi)
        .fold(|| vec![0u64; n + 1], |mut acc, p| {
            acc[p.count_ones() as usize] += 1;
            acc
        })
        .reduce(|| vec![0u64; n + 1], |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        })
}

/// Quantities determined by the class `r <= n - ℓ(π) + 1`, `d_r = r - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialClass {
    /// The variable `x_l` with `x_{P_j} = x_{min(P_j ∖ P_r)} x_{P_r} / x_l`.
    pub l: usize,
    /// False only when `r = 1` and `x_{P_1}` has several variables, so that
    /// any of them serves.
    pub l_unique: bool,
    /// `x_{P_r} / x_l`.
    pub factor: String,
    /// Generators `x_{min(P_j ∖ P_r)}`, then `x_l`, of the prime factor.
    pub prime: Vec<usize>,
    pub height: usize,
    /// `β_i(I_{Δ^∨}) = C(r, i + 1)` in degree `i + ℓ(π)`.
    pub betti: BettiTable,
    /// Coefficients of `t^0 .. t^n`.
    pub k_polynomial: Vec<i64>,
    pub sphere: bool,
    /// `G(I_Δ)`, a regular sequence.
    pub complete_intersection: Vec<String>,
}

/// Analyse the special class; `None` outside it. Every closed form is
/// compared with a direct computation and a disagreement is an invariant
/// violation.
pub fn special_class_analysis(sc: &SubwordComplex, q: &DualQuotients) -> Result<Option<SpecialClass>> {
    let n = sc.n();
    let len = sc.length;
    let r = sc.r();
    if r == 0 || r > n - len + 1 || q.d[r - 1] != r - 1 {
        return Ok(None);
    }
    if let Some(j) = (0..r).find(|&j| q.d[j] != j) {
        return Err(Error::Invariant(format!("d_{} = {} but d_r = r - 1", j + 1, q.d[j])));
    }
    let p = &sc.representing;
    let gens = &sc.dual_generators;
    let last = &gens[r - 1];
    let mins: Vec<usize> = (0..r - 1).map(|j| *p[j].iter().find(|v| !p[r - 1].contains(v)).expect("distinct")).collect();
    let candidates: Vec<usize> = last
        .support()
        .into_iter()
        .filter(|&l| {
            (0..r - 1).all(|j| {
                let xl = Monomial::var(n, l).expect("in range");
                let xm = Monomial::var(n, mins[j]).expect("in range");
                last.div(&xl).map(|b| b.mul(&xm)) == Some(gens[j].clone())
            })
        })
        .collect();
    if r >= 2 && candidates.len() != 1 {
        return Err(Error::Invariant(format!("{} candidates for l, expected one", candidates.len())));
    }
    let l = *candidates.last().ok_or_else(|| Error::Invariant("no l in supp(x_{P_r})".into()))?;
    let factor = last.div(&Monomial::var(n, l)?).expect("l in the support");

    let mut prime = mins.clone();
    prime.push(l);
    let ideal = sc.dual_ideal()?;
    let rebuilt: Vec<Monomial> = prime.iter().map(|&v| factor.mul(&Monomial::var(n, v).expect("in range"))).collect();
    if MonomialIdeal::minimalize(n, rebuilt)? != ideal {
        return Err(Error::Invariant("I_Δ∨ is not x_{P_r}/x_l times the prime".into()));
    }
    let height = ideal.height()?;
    let expected_height = if factor.is_one() { r } else { 1 };
    if height != expected_height {
        return Err(Error::Invariant(format!("height {height}, expected {expected_height}")));
    }

    let mut betti = BettiTable::new();
    for i in 0..r {
        betti.add(i, (i + len) as u32, binomial(r as u128, (i + 1) as u128) as u64);
    }
    let mut closed = vec![0i64; n + 1];
    for i in 0..r {
        let c = binomial(r as u128, (i + 1) as u128) as i64;
        closed[i + len] = if i % 2 == 0 { c } else { -c };
    }
    let counts = subword_counts(&sc.word, &sc.pi);
    let brute: Vec<i64> =
        counts.iter().enumerate().map(|(k, &c)| if (k + len).is_multiple_of(2) { c as i64 } else { -(c as i64) }).collect();
    if brute != closed {
        return Err(Error::Invariant(format!("K-polynomial {closed:?} differs from enumeration {brute:?}")));
    }
    for (j, &c) in counts.iter().enumerate().skip(len) {
        let want = binomial(r as u128, (j - len + 1) as u128) as u64;
        if c != want {
            return Err(Error::Invariant(format!("{c} subwords of size {j} with δ(P) = π, expected {want}")));
        }
    }

    let sphere = r == n - len + 1;
    let topo = sphere_or_ball(&sc.word, &sc.pi)?;
    if sphere != (topo == Topology::Sphere) {
        return Err(Error::Invariant(format!("r = {r} but δ(Q) gives {topo:?}")));
    }

    let mut ci: Vec<Monomial> = factor.support().into_iter().map(|k| Monomial::var(n, k).expect("in range")).collect();
    ci.push(Monomial::from_support(n, &prime)?);
    let ci_ideal = MonomialIdeal::minimalize(n, ci)?;
    match sc.complex.sr_ideal()? {
        Some(sr) if sr == ci_ideal => {}
        other => {
            return Err(Error::Invariant(format!(
                "I_Δ = {} but the complete intersection is {ci_ideal}",
                other.map_or("0".to_string(), |i| i.to_string())
            )))
        }
    }

    Ok(Some(SpecialClass {
        l,
        l_unique: candidates.len() == 1,
        factor: factor.to_string(),
        prime,
        height,
        betti,
        k_polynomial: closed,
        sphere,
        complete_intersection: ci_ideal.gens().iter().map(|g| g.to_string()).collect(),
    }))
}

/// Everything computed for `Δ(Q, π)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubwordReport {
    pub m: usize,
    pub word: Vec<usize>,
    pub pi: Vec<usize>,
    pub pi_cycles: String,
    pub length: usize,
    pub demazure: Vec<usize>,
    pub contains: bool,
    pub representing: Vec<Vec<usize>>,
    pub facets: Vec<Vec<usize>>,
    pub dual_generators: Vec<String>,
    pub certificate: Option<QuotientCertificate>,
    pub d: Vec<usize>,
    pub bounds: Option<Bounds>,
    pub special_class: Option<SpecialClass>,
    pub topology: Option<Topology>,
    /// `Δ = {∅}`, reported as the (-1)-sphere.
    pub empty_face_only: bool,
    /// By enumeration of `{P ⊆ Q : δ(P) = π}`.
    pub k_polynomial: Vec<i64>,
}

pub fn analyze(word: &CoxeterWord, pi: &Permutation) -> Result<SubwordReport> {
    let sc = subword_complex(word, pi)?;
    let mut report = SubwordReport {
        m: word.m(),
        word: word.letters().to_vec(),
        pi: pi.one_line(),
        pi_cycles: pi.to_cycles(),
        length: sc.length,
        demazure: word.demazure_product().one_line(),
        contains: sc.contains_pi(),
        representing: sc.representing.clone(),
        facets: sc.facets.clone(),
        dual_generators: sc.dual_generators.iter().map(|g| g.to_string()).collect(),
        certificate: None,
        d: Vec::new(),
        bounds: None,
        special_class: None,
        topology: None,
        empty_face_only: sc.complex.is_empty_face_only(),
        k_polynomial: k_polynomial_by_enumeration(word, pi)?,
    };
    if !sc.contains_pi() {
        return Ok(report);
    }
    report.topology = Some(sphere_or_ball(word, pi)?);
    if sc.length == 0 {
        return Ok(report);
    }
    let q = dual_quotients(&sc)?;
    report.bounds = Some(bounds_report(&sc, &q)?);
    report.special_class = special_class_analysis(&sc, &q)?;
    report.d = q.d;
    report.certificate = Some(q.certificate);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m: usize, s: &str) -> CoxeterWord {
        CoxeterWord::parse(m, s).unwrap()
    }

    #[test]
    fn cycle_and_one_line() {
        let p = Permutation::parse(4, "cycle:(1 2 4)").unwrap();
        assert_eq!(p.one_line(), vec![2, 4, 3, 1]);
        assert_eq!(p, Permutation::parse(4, "(1,2,4)").unwrap());
        assert_eq!(p, Permutation::parse(4, "line:2,4,3,1").unwrap());
        assert_eq!(p.to_cycles(), "(1 2 4)");
        assert_eq!(Permutation::parse(4, "(1 4)(2 3)").unwrap().one_line(), vec![4, 3, 2, 1]);
        assert!(Permutation::parse(4, "(1 5)").is_err());
        assert!(Permutation::parse(3, "1,1,2").is_err());
    }

    #[test]
    fn reduced_words_of_a_four_cycle() {
        let p = Permutation::from_cycles(4, "(1 2 4)").unwrap();
        assert_eq!(p.length(), 4);
        assert_eq!(reduced_words(&p), vec![vec![1, 2, 3, 2], vec![1, 3, 2, 3], vec![3, 1, 2, 3]]);
        assert_eq!(reduced_words(&Permutation::identity(3)), vec![Vec::<usize>::new()]);
        assert_eq!(reduced_words(&Permutation::simple(4, 2).unwrap()), vec![vec![2]]);
    }

    #[test]
    fn demazure_rule() {
        assert_eq!(w(3, "1").demazure_product(), Permutation::simple(3, 1).unwrap());
        assert_eq!(w(3, "1,1").demazure_product(), Permutation::simple(3, 1).unwrap());
        assert!(w(3, "").demazure_product().is_identity());
    }

    #[test]
    fn representing_positions() {
        let sc = subword_complex(&w(4, "1,2,1,3,1,2,3,1"), &Permutation::from_cycles(4, "(1 2 4)").unwrap()).unwrap();
        assert_eq!(sc.representing, vec![vec![1, 2, 4, 6], vec![1, 4, 6, 7], vec![3, 4, 6, 7], vec![4, 5, 6, 7]]);
        assert_eq!(sc.facets, vec![vec![3, 5, 7, 8], vec![2, 3, 5, 8], vec![1, 2, 5, 8], vec![1, 2, 3, 8]]);
    }

    #[test]
    fn missing_pi_gives_void() {
        let sc = subword_complex(&w(4, "1,2"), &Permutation::from_cycles(4, "(1 2 4)").unwrap()).unwrap();
        assert!(sc.complex.is_void());
        assert!(sc.dual_ideal().is_err());
    }
}
