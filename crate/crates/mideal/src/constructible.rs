//! Constructible ideals: certificates, their verification, a bounded
//! search, the Betti recursion and polarization.
//!
//! A monomial ideal generated in degree `q` is constructible when it is
//! principal, or a sum `I_1 + I_2` of constructible ideals generated in
//! degree `q` whose intersection is constructible and generated in degree
//! `q + 1`. Splits are strict: neither part may equal the whole ideal.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::quotients::{find_order, FindOutcome, QuotientCertificate};

/// Largest generator count for which an exhausted search may answer
/// "not constructible".
pub const EXHAUSTIVE_LIMIT: usize = 12;

pub const DEFAULT_BUDGET: u64 = 200_000;

/// Node budget for the linear-quotients fast path at each search node.
const FAST_PATH_BUDGET: u64 = 2_000;

/// A binary tree witnessing constructibility.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ConstructibilityCertificate {
    Leaf(Monomial),
    Split {
        parts: Box<(ConstructibilityCertificate, ConstructibilityCertificate)>,
        intersection: Box<ConstructibilityCertificate>,
    },
}

/// Wire form of one node: `{"leaf": "x1*x2"}` or
/// `{"split": [node, node], "intersection": node}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CertificateNode {
    Leaf { leaf: String },
    Split { split: Box<(CertificateNode, CertificateNode)>, intersection: Box<CertificateNode> },
}

/// Wire form of a whole certificate, with the ambient variable count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub n: usize,
    pub certificate: CertificateNode,
}

impl ConstructibilityCertificate {
    pub fn leaf(u: Monomial) -> Self {
        ConstructibilityCertificate::Leaf(u)
    }

    pub fn split(first: Self, second: Self, intersection: Self) -> Self {
        ConstructibilityCertificate::Split { parts: Box::new((first, second)), intersection: Box::new(intersection) }
    }

    /// Variable count of the leaves; errors when leaves disagree.
    pub fn n(&self) -> Result<usize> {
        match self {
            ConstructibilityCertificate::Leaf(u) => Ok(u.n()),
            ConstructibilityCertificate::Split { parts, intersection } => {
                let n = parts.0.n()?;
                for m in [parts.1.n()?, intersection.n()?] {
                    if m != n {
                        return Err(Error::DimensionMismatch(n, m));
                    }
                }
                Ok(n)
            }
        }
    }

    /// The ideal generated by the leaves outside intersection subtrees.
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        let n = self.n()?;
        let mut gens = Vec::new();
        self.collect_gens(&mut gens);
        MonomialIdeal::minimalize(n, gens)
    }

    fn collect_gens(&self, out: &mut Vec<Monomial>) {
        match self {
            ConstructibilityCertificate::Leaf(u) => out.push(u.clone()),
            ConstructibilityCertificate::Split { parts, .. } => {
                parts.0.collect_gens(out);
                parts.1.collect_gens(out);
            }
        }
    }

    /// Number of nodes in the tree, intersection subtrees included.
    pub fn size(&self) -> usize {
        match self {
            ConstructibilityCertificate::Leaf(_) => 1,
            ConstructibilityCertificate::Split { parts, intersection } => {
                1 + parts.0.size() + parts.1.size() + intersection.size()
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            ConstructibilityCertificate::Leaf(_) => 0,
            ConstructibilityCertificate::Split { parts, intersection } => {
                1 + parts.0.depth().max(parts.1.depth()).max(intersection.depth())
            }
        }
    }

    pub fn to_node(&self) -> CertificateNode {
        match self {
            ConstructibilityCertificate::Leaf(u) => CertificateNode::Leaf { leaf: u.to_string() },
            ConstructibilityCertificate::Split { parts, intersection } => CertificateNode::Split {
                split: Box::new((parts.0.to_node(), parts.1.to_node())),
                intersection: Box::new(intersection.to_node()),
            },
        }
    }

    pub fn from_node(n: usize, node: &CertificateNode) -> Result<Self> {
        Ok(match node {
            CertificateNode::Leaf { leaf } => ConstructibilityCertificate::Leaf(Monomial::parse(leaf, n)?),
            CertificateNode::Split { split, intersection } => ConstructibilityCertificate::split(
                Self::from_node(n, &split.0)?,
                Self::from_node(n, &split.1)?,
                Self::from_node(n, intersection)?,
            ),
        })
    }

    pub fn to_file(&self) -> Result<CertificateFile> {
        Ok(CertificateFile { n: self.n()?, certificate: self.to_node() })
    }

    pub fn from_file(file: &CertificateFile) -> Result<Self> {
        Self::from_node(file.n, &file.certificate)
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(&self.to_file()?).map_err(|e| Error::Invalid(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: CertificateFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file(&file)
    }

    /// The certificate obtained from a linear-quotients order
    /// `u_1, ..., u_r`: split off `(u_r)`, whose intersection with the
    /// prefix is `u_r (x_j : j in set_r)`, and recurse on both.
    pub fn from_linear_quotients(cert: &QuotientCertificate) -> Result<Self> {
        let n = cert.n();
        let sets: Vec<Vec<usize>> = cert.sets().to_vec();
        if cert.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        let d = cert.order()[0].degree();
        if cert.order().iter().any(|u| u.degree() != d) {
            return Err(Error::Unsupported("constructibility needs generators of one degree".into()));
        }
        Ok(from_order(n, cert.order(), &sets))
    }
}

fn from_order(n: usize, order: &[Monomial], sets: &[Vec<usize>]) -> ConstructibilityCertificate {
    let r = order.len();
    if r == 1 {
        return ConstructibilityCertificate::Leaf(order[0].clone());
    }
    let u = &order[r - 1];
    let meet: Vec<Monomial> = sets[r - 1]
        .iter()
        .map(|&j| u.mul(&Monomial::var(n, j).expect("colon variable in range")))
        .collect();
    // (x_{j_1} u, ..., x_{j_{t-1}} u) : x_{j_t} u = (x_{j_1}, ..., x_{j_{t-1}})
    let meet_sets: Vec<Vec<usize>> = (0..meet.len()).map(|t| sets[r - 1][..t].to_vec()).collect();
    ConstructibilityCertificate::split(
        from_order(n, &order[..r - 1], &sets[..r - 1]),
        ConstructibilityCertificate::Leaf(u.clone()),
        from_order(n, &meet, &meet_sets),
    )
}

impl fmt::Display for ConstructibilityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructibilityCertificate::Leaf(u) => write!(f, "({u})"),
            ConstructibilityCertificate::Split { parts, intersection } => {
                write!(f, "[{} + {} | {}]", parts.0, parts.1, intersection)
            }
        }
    }
}

/// Where and why a certificate fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeFailure {
    /// Path from the root, e.g. `root.split[1].intersection`.
    pub path: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub valid: bool,
    pub failure: Option<NodeFailure>,
}

fn degree_of(ideal: &MonomialIdeal) -> Option<u32> {
    ideal.generation_degree()
}

fn check_node(node: &ConstructibilityCertificate, path: &str) -> Result<Option<NodeFailure>> {
    let ConstructibilityCertificate::Split { parts, intersection } = node else {
        return Ok(None);
    };
    let fail = |reason: String| Ok(Some(NodeFailure { path: path.to_string(), reason }));
    let i1 = parts.0.ideal()?;
    let i2 = parts.1.ideal()?;
    let whole = i1.sum(&i2)?;
    let q = match (degree_of(&i1), degree_of(&i2)) {
        (Some(a), Some(b)) if a == b => a,
        (a, b) => return fail(format!("parts are not generated in one common degree ({a:?}, {b:?})")),
    };
    if i1 == whole || i2 == whole {
        return fail("split is not strict: one part equals the node ideal".into());
    }
    let meet = i1.intersect(&i2)?;
    let recorded = intersection.ideal()?;
    if meet != recorded {
        return fail(format!("recorded intersection {recorded} differs from {meet}"));
    }
    if degree_of(&meet) != Some(q + 1) {
        return fail(format!("intersection {meet} is not generated in degree {}", q + 1));
    }
    for (child, name) in [(&parts.0, "split[0]"), (&parts.1, "split[1]"), (intersection.as_ref(), "intersection")] {
        if let Some(f) = check_node(child, &format!("{path}.{name}"))? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// Check every node of `cert` and that it generates `ideal`. Reports the
/// first failing node in preorder.
pub fn verify_certificate(ideal: &MonomialIdeal, cert: &ConstructibilityCertificate) -> Result<Verification> {
    let n = cert.n()?;
    if n != ideal.n() {
        return Err(Error::DimensionMismatch(ideal.n(), n));
    }
    let generated = cert.ideal()?;
    let failure = if &generated != ideal {
        Some(NodeFailure { path: "root".into(), reason: format!("certificate generates {generated}, not {ideal}") })
    } else {
        check_node(cert, "root")?
    };
    Ok(Verification { valid: failure.is_none(), failure })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(ConstructibilityCertificate),
    /// Exhaustive search within the degree bound found no tree.
    NotConstructible,
    Unknown { nodes: u64 },
}

impl SearchOutcome {
    pub fn verdict(&self) -> &'static str {
        match self {
            SearchOutcome::Found(_) => "constructible",
            SearchOutcome::NotConstructible => "not_constructible",
            SearchOutcome::Unknown { .. } => "unknown",
        }
    }
}

struct Searcher {
    n: usize,
    memo: HashMap<Vec<Monomial>, Option<ConstructibilityCertificate>>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

/// Widest generator set whose 2-partitions are enumerated.
const PARTITION_WIDTH: usize = 40;

impl Searcher {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
        }
        !self.exhausted
    }

    /// `gens` minimal, descending, all of one degree.
    fn solve(&mut self, gens: &[Monomial]) -> Option<ConstructibilityCertificate> {
        if gens.len() == 1 {
            return Some(ConstructibilityCertificate::Leaf(gens[0].clone()));
        }
        if let Some(r) = self.memo.get(gens) {
            return r.clone();
        }
        if !self.tick() {
            return None;
        }
        let ideal = MonomialIdeal::minimalize(self.n, gens.to_vec()).expect("nonempty");
        if let FindOutcome::Found(c) = find_order(&ideal, FAST_PATH_BUDGET) {
            let cert = ConstructibilityCertificate::from_linear_quotients(&c).expect("one degree");
            self.memo.insert(gens.to_vec(), Some(cert.clone()));
            return Some(cert);
        }
        let r = gens.len();
        if r > PARTITION_WIDTH {
            self.exhausted = true;
            return None;
        }
        let q = gens[0].degree();
        // gens[0] always lies in the first part, so each unordered split is
        // visited once; the full mask would leave the second part empty
        let full = (1u64 << (r - 1)) - 1;
        for mask in 0..full {
            if !self.tick() {
                return None;
            }
            let mut a = vec![gens[0].clone()];
            let mut b = Vec::new();
            for (k, g) in gens[1..].iter().enumerate() {
                if mask >> k & 1 == 1 {
                    a.push(g.clone());
                } else {
                    b.push(g.clone());
                }
            }
            let mut meet = Vec::with_capacity(a.len() * b.len());
            for x in &a {
                for y in &b {
                    meet.push(x.lcm(y));
                }
            }
            let meet = MonomialIdeal::minimalize(self.n, meet).expect("nonempty");
            if meet.gens().iter().any(|m| m.degree() != q + 1) {
                continue;
            }
            let Some(ca) = self.solve(&a) else {
                if self.exhausted {
                    return None;
                }
                continue;
            };
            let Some(cb) = self.solve(&b) else {
                if self.exhausted {
                    return None;
                }
                continue;
            };
            let Some(cm) = self.solve(meet.gens()) else {
                if self.exhausted {
                    return None;
                }
                continue;
            };
            let cert = ConstructibilityCertificate::split(ca, cb, cm);
            self.memo.insert(gens.to_vec(), Some(cert.clone()));
            return Some(cert);
        }
        self.memo.insert(gens.to_vec(), None);
        None
    }
}

/// Search for a constructibility certificate.
///
/// Ideals with linear quotients are settled by the split `(u_1, ...,
/// u_{r-1}) + (u_r)`. Otherwise all 2-partitions of `G(I)` are tried,
/// with memoization on generator sets; the degree of the intersections
/// grows at each level and is bounded by `|a|`, which bounds the
/// recursion. "Not constructible" is only reported when the search is
/// exhaustive and `|G(I)| <= EXHAUSTIVE_LIMIT`.
pub fn search_constructible(ideal: &MonomialIdeal, budget: u64) -> Result<SearchOutcome> {
    search_with_splits(ideal, &[], budget)
}

/// [`search_constructible`], trying the given root splits `(I_1, I_2)`
/// before enumerating partitions. A split is used only when `I_1 + I_2 = I`
/// and the search proves both parts and their intersection.
pub fn search_with_splits(
    ideal: &MonomialIdeal,
    splits: &[(MonomialIdeal, MonomialIdeal)],
    budget: u64,
) -> Result<SearchOutcome> {
    let Some(q) = ideal.generation_degree() else {
        return Err(Error::Unsupported("constructibility is defined for ideals generated in one degree".into()));
    };
    let mut s = Searcher { n: ideal.n(), memo: HashMap::new(), nodes: 0, budget, exhausted: false };
    for (a, b) in splits {
        if &a.sum(b)? != ideal || a == ideal || b == ideal {
            continue;
        }
        let meet = a.intersect(b)?;
        if a.generation_degree() != Some(q) || b.generation_degree() != Some(q) || meet.generation_degree() != Some(q + 1) {
            continue;
        }
        if let (Some(ca), Some(cb), Some(cm)) = (s.solve(a.gens()), s.solve(b.gens()), s.solve(meet.gens())) {
            return Ok(SearchOutcome::Found(ConstructibilityCertificate::split(ca, cb, cm)));
        }
        // a failed hint says nothing about other splits
        s.exhausted = false;
        s.nodes = 0;
    }
    Ok(match s.solve(ideal.gens()) {
        Some(cert) => SearchOutcome::Found(cert),
        None if !s.exhausted && ideal.len() <= EXHAUSTIVE_LIMIT => SearchOutcome::NotConstructible,
        None => SearchOutcome::Unknown { nodes: s.nodes },
    })
}

/// `beta_i(I) = beta_i(I_1) + beta_i(I_2) + beta_{i-1}(I_1 ∩ I_2)`, graded.
pub fn constructible_betti(cert: &ConstructibilityCertificate) -> Result<BettiTable> {
    let ideal = cert.ideal()?;
    let v = verify_certificate(&ideal, cert)?;
    if let Some(f) = v.failure {
        return Err(Error::Invalid(format!("certificate fails at {}: {}", f.path, f.reason)));
    }
    Ok(betti_rec(cert))
}

fn betti_rec(cert: &ConstructibilityCertificate) -> BettiTable {
    match cert {
        ConstructibilityCertificate::Leaf(u) => {
            let mut t = BettiTable::new();
            t.add(0, u.degree(), 1);
            t
        }
        ConstructibilityCertificate::Split { parts, intersection } => {
            let mut t = betti_rec(&parts.0);
            t.merge(&betti_rec(&parts.1));
            // beta_{i-1, (i-1)+(q+1)}(I_1 ∩ I_2) lands in beta_{i, i+q}
            t.merge(&betti_rec(intersection).shifted(1, 0));
            t
        }
    }
}

/// `a_i`: the largest exponent of `x_i` among the minimal generators.
pub fn bound_vector(ideal: &MonomialIdeal) -> Vec<u32> {
    let mut a = vec![0u32; ideal.n()];
    for g in ideal.gens() {
        for (i, &e) in g.exponents().iter().enumerate() {
            a[i] = a[i].max(e);
        }
    }
    a
}

/// Copy `copy` of variable `var` is the variable `index` of the polarized
/// ring. The last copy `a_i` keeps the original index; copies
/// `1, ..., a_i - 1` are appended after `x_n` in order of `(var, copy)`. So
/// for `a_1 = a_2 = 2` in eight variables, `x1^2 x2 -> x9 x1 x10`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolarVariable {
    pub var: usize,
    pub copy: u32,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    pub source_n: usize,
    pub bounds: Vec<u32>,
    pub map: Vec<PolarVariable>,
}

impl Polarization {
    pub fn target_n(&self) -> usize {
        self.ideal.n()
    }

    pub fn index(&self, var: usize, copy: u32) -> Option<usize> {
        self.map.iter().find(|p| p.var == var && p.copy == copy).map(|p| p.index)
    }

    /// `u' = prod_i x_{i,1} ... x_{i,b_i}` for `u = prod x_i^{b_i}` with
    /// `b_i <= a_i`.
    pub fn monomial(&self, u: &Monomial) -> Result<Monomial> {
        if u.n() != self.source_n {
            return Err(Error::DimensionMismatch(self.source_n, u.n()));
        }
        for (i, &b) in u.exponents().iter().enumerate() {
            if b > self.bounds[i] {
                return Err(Error::Invalid(format!("{u} exceeds the polarization bound of x{}", i + 1)));
            }
        }
        Ok(polarize_with(&self.map, u, self.target_n()))
    }
}

fn polarize_with(map: &[PolarVariable], u: &Monomial, target: usize) -> Monomial {
    let mut exps = vec![0u32; target];
    for (i, &b) in u.exponents().iter().enumerate() {
        for j in 1..=b {
            let p = map.iter().find(|p| p.var == i + 1 && p.copy == j).expect("copy within bound");
            exps[p.index - 1] = 1;
        }
    }
    Monomial::new(exps)
}

/// The polarization `P(I)`, generated by the `u'` for `u` in `G(I)`.
pub fn polarize(ideal: &MonomialIdeal) -> Polarization {
    let n = ideal.n();
    let bounds = bound_vector(ideal);
    let mut map = Vec::new();
    let mut next = n;
    for (i, &a) in bounds.iter().enumerate() {
        for copy in 1..=a {
            let index = if copy == a {
                i + 1
            } else {
                next += 1;
                next
            };
            map.push(PolarVariable { var: i + 1, copy, index });
        }
    }
    let gens: Vec<Monomial> = ideal.gens().iter().map(|u| polarize_with(&map, u, next)).collect();
    let ideal = MonomialIdeal::minimalize(next, gens).expect("nonempty");
    Polarization { ideal, source_n: n, bounds, map }
}

/// Whether `I : u` is generated by variables (and is proper).
pub fn colon_is_prime(ideal: &MonomialIdeal, u: &Monomial) -> Result<bool> {
    let gens = ideal.colon_gens(u)?;
    Ok(gens.iter().all(|g| g.degree() == 1))
}
