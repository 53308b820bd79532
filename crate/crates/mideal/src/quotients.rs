//! Linear quotients: certificates, order search, decomposition functions,
//! regularity, Betti numbers from quotients and stable ideals.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::ideal::{colon_of, variable_indices, MonomialIdeal};
use crate::monomial::{binomial, Monomial, TermOrder};

/// An order `u_1, ..., u_m` of `G(I)` with `(u_1, ..., u_{i-1}) : u_i`
/// generated by the variables `x_j`, `j` in `sets[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CertificateSpec", into = "CertificateSpec")]
pub struct QuotientCertificate {
    n: usize,
    order: Vec<Monomial>,
    sets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateSpec {
    pub n: usize,
    pub order: Vec<String>,
    pub sets: Vec<Vec<usize>>,
}

/// The first position where an order stops having linear quotients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientFailure {
    /// 1-based index `i` of the generator whose colon is not linear.
    pub i: usize,
    /// 1-based `j < i` such that `u_j : u_i` is divisible by no variable
    /// of the colon ideal.
    pub j: usize,
    /// Minimal generators of `(u_1, ..., u_{i-1}) : u_i`.
    pub colon: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Certified(QuotientCertificate),
    Failed(QuotientFailure),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FindOutcome {
    Found(QuotientCertificate),
    /// Exhaustive search found no order.
    None,
    /// The node budget ran out first.
    Unknown { nodes: u64 },
}

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Colon of a prefix by `u`, as variable indices when it is linear.
fn linear_colon(prefix: &[&Monomial], u: &Monomial) -> Option<Vec<usize>> {
    let q: Vec<Monomial> = prefix.iter().map(|p| p.colon(u)).collect();
    let vars: Vec<usize> = q.iter().filter(|m| m.degree() == 1).filter_map(Monomial::min_index).collect();
    if q.iter().all(|m| vars.iter().any(|&l| m.nu(l) > 0)) {
        let mut v = vars;
        v.sort_unstable();
        v.dedup();
        Some(v)
    } else {
        None
    }
}

impl QuotientCertificate {
    /// Certificate with stored sets, for deserialization. The sets are
    /// re-derived and must agree.
    pub fn from_parts(n: usize, order: Vec<Monomial>, sets: Vec<Vec<usize>>) -> Result<Self> {
        let ideal = MonomialIdeal::minimalize(n, order.clone())?;
        match check_order(&ideal, &order)? {
            CheckOutcome::Certified(c) if c.sets == sets => Ok(c),
            CheckOutcome::Certified(_) => Err(Error::Invalid("stored sets disagree with the colon ideals".into())),
            CheckOutcome::Failed(f) => Err(Error::Invalid(format!("order fails at position {}", f.i))),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &[Monomial] {
        &self.order
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `r_k = |set(u_k)|`.
    pub fn set_sizes(&self) -> Vec<usize> {
        self.sets.iter().map(Vec::len).collect()
    }

    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.n, self.order.clone()).expect("certificate holds a valid ideal")
    }

    /// Position of a generator in the order.
    pub fn index_of(&self, u: &Monomial) -> Option<usize> {
        self.order.iter().position(|g| g == u)
    }

    /// Set of a generator.
    pub fn set_of(&self, u: &Monomial) -> Option<&[usize]> {
        self.index_of(u).map(|k| self.sets[k].as_slice())
    }

    /// Recompute every colon ideal from scratch and compare with `sets`.
    pub fn verify(&self) -> bool {
        (0..self.order.len()).all(|i| {
            let q = colon_of(&self.order[..i], &self.order[i]);
            if i == 0 {
                return self.sets[0].is_empty();
            }
            variable_indices(&q).as_deref() == Some(self.sets[i].as_slice())
        })
    }

    /// The decomposition function attached to this order.
    pub fn decomposition(&self) -> DecompositionFunction<'_> {
        DecompositionFunction { cert: self }
    }
}

impl TryFrom<CertificateSpec> for QuotientCertificate {
    type Error = Error;

    fn try_from(s: CertificateSpec) -> Result<Self> {
        let order = s
            .order
            .iter()
            .map(|g| Monomial::parse(g, s.n))
            .collect::<Result<Vec<_>>>()?;
        QuotientCertificate::from_parts(s.n, order, s.sets)
    }
}

impl From<QuotientCertificate> for CertificateSpec {
    fn from(c: QuotientCertificate) -> Self {
        CertificateSpec { n: c.n, order: c.order.iter().map(|g| g.to_string()).collect(), sets: c.sets }
    }
}

/// Check whether `order`, a permutation of `G(I)`, gives linear quotients.
pub fn check_order(ideal: &MonomialIdeal, order: &[Monomial]) -> Result<CheckOutcome> {
    if order.len() != ideal.len() {
        return Err(Error::InvalidOrder(format!(
            "{} generators given, ideal has {}",
            order.len(),
            ideal.len()
        )));
    }
    let mut seen = HashSet::new();
    for u in order {
        if u.n() != ideal.n() {
            return Err(Error::DimensionMismatch(ideal.n(), u.n()));
        }
        if !ideal.gens().contains(u) {
            return Err(Error::InvalidOrder(format!("{u} is not a minimal generator")));
        }
        if !seen.insert(u) {
            return Err(Error::InvalidOrder(format!("{u} repeated")));
        }
    }
    let mut sets = Vec::with_capacity(order.len());
    sets.push(Vec::new());
    for i in 1..order.len() {
        let u = &order[i];
        let quotients: Vec<Monomial> = order[..i].iter().map(|p| p.colon(u)).collect();
        let vars: Vec<usize> = quotients
            .iter()
            .filter(|m| m.degree() == 1)
            .filter_map(Monomial::min_index)
            .collect();
        if let Some(j) = quotients.iter().position(|m| !vars.iter().any(|&l| m.nu(l) > 0)) {
            return Ok(CheckOutcome::Failed(QuotientFailure {
                i: i + 1,
                j: j + 1,
                colon: colon_of(&order[..i], u).iter().map(|m| m.to_string()).collect(),
            }));
        }
        let mut v = vars;
        v.sort_unstable();
        v.dedup();
        sets.push(v);
    }
    Ok(CheckOutcome::Certified(QuotientCertificate { n: ideal.n(), order: order.to_vec(), sets }))
}

/// Generators sorted by a term order, ascending or descending. Mixed degrees
/// are grouped by increasing degree first when `by_degree` is set.
pub fn sorted_by(ideal: &MonomialIdeal, ord: TermOrder, descending: bool, by_degree: bool) -> Result<Vec<Monomial>> {
    let mut gens = ideal.gens().to_vec();
    if ord == TermOrder::Prec && ideal.generation_degree().is_none() && !by_degree {
        return Err(Error::Unsupported("the prec order needs equal degrees".into()));
    }
    gens.sort_by(|a, b| {
        let deg = if by_degree { a.degree().cmp(&b.degree()) } else { std::cmp::Ordering::Equal };
        deg.then_with(|| {
            let c = a.compare(b, ord).expect("same ring and degree");
            if descending {
                c.reverse()
            } else {
                c
            }
        })
    });
    Ok(gens)
}

/// The orders tried before backtracking: lex descending, reversed lex
/// descending and the prec order ascending.
pub fn heuristic_orders(ideal: &MonomialIdeal) -> Vec<Vec<Monomial>> {
    let mut out = Vec::new();
    let mixed = ideal.generation_degree().is_none();
    for (ord, desc) in [(TermOrder::Lex, true), (TermOrder::LexReversed, true), (TermOrder::Prec, false)] {
        if !mixed || ord != TermOrder::Prec {
            out.push(sorted_by(ideal, ord, desc, false).expect("equal degrees"));
        }
        if mixed {
            out.push(sorted_by(ideal, ord, desc, true).expect("grouped by degree"));
        }
    }
    out.dedup();
    out
}

struct Search<'a> {
    gens: &'a [Monomial],
    dead: HashSet<Vec<u64>>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl Search<'_> {
    fn run(&mut self, prefix: &mut Vec<usize>, used: &mut Vec<u64>) -> bool {
        if prefix.len() == self.gens.len() {
            return true;
        }
        if self.dead.contains(used) {
            return false;
        }
        let chosen: Vec<&Monomial> = prefix.iter().map(|&k| &self.gens[k]).collect();
        for k in 0..self.gens.len() {
            if used[k / 64] >> (k % 64) & 1 == 1 {
                continue;
            }
            if linear_colon(&chosen, &self.gens[k]).is_none() {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted = true;
                return false;
            }
            prefix.push(k);
            used[k / 64] |= 1 << (k % 64);
            if self.run(prefix, used) {
                return true;
            }
            used[k / 64] &= !(1 << (k % 64));
            prefix.pop();
            if self.exhausted {
                return false;
            }
        }
        self.dead.insert(used.clone());
        false
    }
}

/// Search for a linear-quotients order.
///
/// The heuristic orders are tried first. After that a depth-first search
/// extends prefixes by admissible generators in descending lex order and
/// remembers prefix sets from which no completion exists.
pub fn find_order(ideal: &MonomialIdeal, budget: u64) -> FindOutcome {
    for order in heuristic_orders(ideal) {
        if let Ok(CheckOutcome::Certified(c)) = check_order(ideal, &order) {
            return FindOutcome::Found(c);
        }
    }
    let gens = ideal.gens();
    let mut s = Search { gens, dead: HashSet::new(), nodes: 0, budget, exhausted: false };
    let mut prefix = Vec::with_capacity(gens.len());
    let mut used = vec![0u64; gens.len().div_ceil(64)];
    if s.run(&mut prefix, &mut used) {
        let order: Vec<Monomial> = prefix.iter().map(|&k| gens[k].clone()).collect();
        match check_order(ideal, &order) {
            Ok(CheckOutcome::Certified(c)) => FindOutcome::Found(c),
            _ => unreachable!("search only extends linear prefixes"),
        }
    } else if s.exhausted {
        FindOutcome::Unknown { nodes: s.nodes }
    } else {
        FindOutcome::None
    }
}

/// `g(w)`: the first generator in the certificate order dividing `w`.
#[derive(Clone, Copy, Debug)]
pub struct DecompositionFunction<'a> {
    cert: &'a QuotientCertificate,
}

/// Result of a regularity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Regularity {
    Regular,
    /// `set(g(x_s u))` is not contained in `set(u)`.
    Counterexample { u: String, s: usize },
}

impl<'a> DecompositionFunction<'a> {
    pub fn certificate(&self) -> &'a QuotientCertificate {
        self.cert
    }

    /// 0-based index of `g(w)` in the order.
    pub fn index(&self, w: &Monomial) -> Result<usize> {
        if w.n() != self.cert.n {
            return Err(Error::DimensionMismatch(self.cert.n, w.n()));
        }
        self.cert
            .order
            .iter()
            .position(|u| u.divides(w))
            .ok_or_else(|| Error::NotInIdeal(w.to_string()))
    }

    pub fn apply(&self, w: &Monomial) -> Result<Monomial> {
        Ok(self.cert.order[self.index(w)?].clone())
    }

    /// Check `set(g(x_s u)) ⊆ set(u)` for every generator `u` and `s` in
    /// `set(u)`, reporting the first failure in (order, s ascending).
    pub fn is_regular(&self) -> Regularity {
        for (u, set) in self.cert.order.iter().zip(&self.cert.sets) {
            for &s in set {
                let k = self.index(&u.mul_var(s)).expect("x_s u lies in I");
                if !self.cert.sets[k].iter().all(|t| set.contains(t)) {
                    return Regularity::Counterexample { u: u.to_string(), s };
                }
            }
        }
        Regularity::Regular
    }
}

/// Betti numbers from a certificate of an ideal generated in one degree:
/// `beta_{i,i+d} = sum_k C(r_k, i)`.
pub fn betti_from_certificate(cert: &QuotientCertificate) -> Result<BettiTable> {
    let d = cert.order[0].degree();
    if cert.order.iter().any(|u| u.degree() != d) {
        return Err(Error::Unsupported("betti numbers from quotients need generators of one degree".into()));
    }
    let mut t = BettiTable::new();
    for r in cert.set_sizes() {
        for i in 0..=r {
            t.add(i, d + i as u32, binomial(r as u128, i as u128) as u64);
        }
    }
    Ok(t)
}

/// Stability via the finite test on `G(I)`: for `u` in `G(I)` and
/// `i < max(u)`, `x_i u / x_{max(u)}` lies in `I`.
pub fn is_stable(ideal: &MonomialIdeal) -> bool {
    stability_witness(ideal).is_none()
}

/// A pair `(u, i)` violating stability, if any.
pub fn stability_witness(ideal: &MonomialIdeal) -> Option<(Monomial, usize)> {
    for u in ideal.gens() {
        let m = u.max_index().expect("generators are not constant");
        let base = u.div_var(m).expect("x_max divides u");
        for i in 1..m {
            if !ideal.contains(&base.mul_var(i)) {
                return Some((u.clone(), i));
            }
        }
    }
    None
}

/// The unique `u` in `G(I)` with `u | w` and `max(u) <= min(w/u)`, and `w/u`.
pub fn canonical_decomposition(ideal: &MonomialIdeal, w: &Monomial) -> Result<(Monomial, Monomial)> {
    if w.n() != ideal.n() {
        return Err(Error::DimensionMismatch(ideal.n(), w.n()));
    }
    if !ideal.contains(w) {
        return Err(Error::NotInIdeal(w.to_string()));
    }
    for u in ideal.gens() {
        if let Some(rest) = w.div(u) {
            let ok = match rest.min_index() {
                None => true,
                Some(mn) => u.max_index().unwrap() <= mn,
            };
            if ok {
                return Ok((u.clone(), rest));
            }
        }
    }
    Err(Error::NotStable(format!("no canonical decomposition of {w}")))
}

/// Eliahou-Kervaire Betti numbers of a stable ideal:
/// `beta_{i,i+deg u}` gets `C(max(u) - 1, i)` from each generator.
pub fn stable_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if let Some((u, i)) = stability_witness(ideal) {
        return Err(Error::NotStable(format!("x{i} * {u} / x_max not in I")));
    }
    let mut t = BettiTable::new();
    for u in ideal.gens() {
        let m = u.max_index().unwrap() - 1;
        for i in 0..=m {
            t.add(i, u.degree() + i as u32, binomial(m as u128, i as u128) as u64);
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str, n: usize) -> Monomial {
        Monomial::parse(s, n).unwrap()
    }

    fn id(n: usize, g: &[&str]) -> MonomialIdeal {
        MonomialIdeal::parse(n, g).unwrap()
    }

    fn ms(n: usize, g: &[&str]) -> Vec<Monomial> {
        g.iter().map(|s| m(s, n)).collect()
    }

    #[test]
    fn prec_order_certifies_and_lex_fails() {
        let i = id(3, &["x1*x2*x3", "x1*x3^2", "x2^3", "x2^2*x3", "x2*x3^2"]);
        let prec = ms(3, &["x2^3", "x2^2*x3", "x2*x3^2", "x1*x2*x3", "x1*x3^2"]);
        let CheckOutcome::Certified(c) = check_order(&i, &prec).unwrap() else { panic!() };
        assert_eq!(c.sets(), &[vec![], vec![2], vec![2], vec![2, 3], vec![2]]);
        assert!(c.verify());
        let CheckOutcome::Failed(f) = check_order(&i, i.gens()).unwrap() else { panic!() };
        assert_eq!(f.i, 3);
        assert_eq!(f.colon, vec!["x1*x3"]);
        assert_eq!(sorted_by(&i, TermOrder::Prec, false, false).unwrap(), prec);
    }

    #[test]
    fn order_errors() {
        let i = id(2, &["x1^2", "x2^2"]);
        assert!(check_order(&i, &ms(2, &["x1^2"])).is_err());
        assert!(check_order(&i, &ms(2, &["x1^2", "x1^2"])).is_err());
        assert!(check_order(&i, &ms(2, &["x1^2", "x1*x2"])).is_err());
    }

    #[test]
    fn find_order_cases() {
        let st = id(3, &["x1^2", "x1*x2^2", "x1*x2*x3", "x2^3"]);
        let FindOutcome::Found(c) = find_order(&st, DEFAULT_BUDGET) else { panic!() };
        assert_eq!(c.order(), st.gens());
        assert_eq!(find_order(&id(2, &["x1^3", "x1*x2^2"]), DEFAULT_BUDGET), FindOutcome::None);
        let FindOutcome::Found(c) = find_order(&id(2, &["x1*x2"]), 10) else { panic!() };
        assert_eq!(c.sets(), &[Vec::<usize>::new()]);
    }

    #[test]
    fn decomposition_function_examples() {
        let i = id(3, &["x1^2*x2", "x1*x2^2", "x1*x2*x3", "x2*x3^2"]);
        let FindOutcome::Found(c) = find_order(&i, DEFAULT_BUDGET) else { panic!() };
        let g = c.decomposition();
        assert_eq!(g.apply(&m("x1^2*x2^2*x3^2", 3)).unwrap(), m("x1^2*x2", 3));
        assert!(g.apply(&m("x1^5", 3)).is_err());
        assert_eq!(g.apply(&c.order()[0]).unwrap(), c.order()[0]);
    }

    #[test]
    fn stable_examples() {
        let i = id(4, &["x1^2", "x1*x2^2", "x1*x2*x3"]);
        assert!(is_stable(&i));
        let (u, r) = canonical_decomposition(&i, &m("x1^3*x3*x4", 4)).unwrap();
        assert_eq!((u, r), (m("x1^2", 4), m("x1*x3*x4", 4)));
        assert!(!is_stable(&id(2, &["x2^2"])));
        assert!(is_stable(&MonomialIdeal::max_power(3, 3).unwrap()));
        let ek = stable_betti(&id(3, &["x1^2", "x1*x2^2", "x1*x2*x3", "x2^3"])).unwrap();
        assert_eq!(ek.totals(), vec![4, 4, 1]);
    }

    #[test]
    fn betti_from_sets() {
        let i = id(3, &["x1*x2*x3", "x1*x3^2", "x2^3", "x2^2*x3", "x2*x3^2"]);
        let FindOutcome::Found(c) = find_order(&i, DEFAULT_BUDGET) else { panic!() };
        let b = betti_from_certificate(&c).unwrap();
        assert_eq!(b.totals(), vec![5, 5, 1]);
        assert!(b.is_linear(3));
        let mixed = id(2, &["x1", "x2^2"]);
        let FindOutcome::Found(c) = find_order(&mixed, 10) else { panic!() };
        assert!(betti_from_certificate(&c).is_err());
    }

    #[test]
    fn certificate_json_round_trip() {
        let i = id(3, &["x1^2", "x1*x2^2", "x1*x2*x3", "x2^3"]);
        let FindOutcome::Found(c) = find_order(&i, 100) else { panic!() };
        let s = serde_json::to_string(&c).unwrap();
        let back: QuotientCertificate = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        let mut spec = CertificateSpec::from(c);
        spec.sets[1] = vec![2];
        assert!(QuotientCertificate::try_from(spec).is_err());
    }
}
