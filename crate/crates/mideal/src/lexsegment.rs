//! Lexsegments `L(u, v)`: generation, shadows, the completely/linear
//! classification, quotient orders, and closed forms for dimension, depth
//! and the Cohen-Macaulay property.
//!
//! Several results only hold after a normalization of the `x1`-power:
//! when `nu_1(u) = nu_1(v) = c` the ideal is `x1^c` times an `x1`-free
//! lexsegment, which is then studied in the remaining variables; when
//! `nu_1(u) > nu_1(v)` the power `x1^{nu_1(v)}` is divided out. Both steps
//! keep the Betti numbers up to a shift. Every report lists the reductions
//! it applied.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{count_of_degree, Monomial, TermOrder};
use crate::quotients::{check_order, sorted_by, CheckOutcome, QuotientCertificate};

/// Largest `|M_d|` that exhaustive quantifiers will enumerate.
pub const ENUMERATION_LIMIT: u128 = 1_000_000;

/// `L(u, v) = {w in M_d : u >=_lex w >=_lex v}`, generators descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lexsegment {
    n: usize,
    d: u32,
    u: Monomial,
    v: Monomial,
    gens: Vec<Monomial>,
}

/// The lex successor: the largest monomial of the same degree below `w`.
pub fn lex_next(w: &Monomial) -> Option<Monomial> {
    let mut e = w.exponents().to_vec();
    let n = e.len();
    if n < 2 {
        return None;
    }
    let k = (0..n - 1).rev().find(|&k| e[k] > 0)?;
    let tail: u32 = e[k + 1..].iter().sum();
    e[k] -= 1;
    for x in e[k + 1..].iter_mut() {
        *x = 0;
    }
    e[k + 1] = tail + 1;
    Some(Monomial::new(e))
}

/// Number of monomials of the same degree strictly greater than `w` in lex.
pub fn lex_rank(w: &Monomial) -> u128 {
    let e = w.exponents();
    let n = e.len();
    let mut left = w.degree();
    let mut rank = 0u128;
    for (k, &ek) in e.iter().enumerate().take(n.saturating_sub(1)) {
        // monomials agreeing before k with a larger exponent at k
        for bigger in ek + 1..=left {
            rank += count_of_degree(n - k - 1, left - bigger);
        }
        left -= ek;
    }
    rank
}

/// Whether a set of monomials of one degree is a lexsegment.
pub fn is_lexsegment(mons: &BTreeSet<Monomial>) -> bool {
    match (mons.last(), mons.first()) {
        (Some(top), Some(bottom)) => lex_rank(bottom) - lex_rank(top) + 1 == mons.len() as u128,
        _ => true,
    }
}

/// The `i`-th iterated shadow and whether it is a lexsegment.
pub fn shadow(mons: &BTreeSet<Monomial>, i: usize) -> (BTreeSet<Monomial>, bool) {
    let mut cur = mons.clone();
    for _ in 0..i {
        let mut next = BTreeSet::new();
        for w in &cur {
            for j in 1..=w.n() {
                next.insert(w.mul_var(j));
            }
        }
        cur = next;
    }
    let flag = is_lexsegment(&cur);
    (cur, flag)
}

impl Lexsegment {
    pub fn new(n: usize, d: u32, u: Monomial, v: Monomial) -> Result<Self> {
        for w in [&u, &v] {
            if w.n() != n {
                return Err(Error::DimensionMismatch(n, w.n()));
            }
            if w.degree() != d {
                return Err(Error::DegreeMismatch(d, w.degree()));
            }
        }
        if d == 0 {
            return Err(Error::Invalid("lexsegments need degree at least 1".into()));
        }
        if u < v {
            return Err(Error::InvalidOrder(format!("{u} <_lex {v}")));
        }
        let size = lex_rank(&v) - lex_rank(&u) + 1;
        if size > ENUMERATION_LIMIT {
            return Err(Error::Budget(format!("lexsegment with {size} monomials")));
        }
        let mut gens = Vec::with_capacity(size as usize);
        let mut w = u.clone();
        loop {
            gens.push(w.clone());
            if w == v {
                break;
            }
            w = lex_next(&w).expect("v lies below u");
        }
        Ok(Lexsegment { n, d, u, v, gens })
    }

    /// Parse `u` and `v` and build the segment.
    pub fn parse(n: usize, d: u32, u: &str, v: &str) -> Result<Self> {
        Lexsegment::new(n, d, Monomial::parse(u, n)?, Monomial::parse(v, n)?)
    }

    /// `L^i(v)`, everything down to `v`.
    pub fn initial(n: usize, v: Monomial) -> Result<Self> {
        let d = v.degree();
        let mut e = vec![0; n];
        e[0] = d;
        Lexsegment::new(n, d, Monomial::new(e), v)
    }

    /// `L^f(u)`, everything from `u` down.
    pub fn final_segment(n: usize, u: Monomial) -> Result<Self> {
        let d = u.degree();
        let mut e = vec![0; n];
        e[n - 1] = d;
        Lexsegment::new(n, d, u, Monomial::new(e))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn u(&self) -> &Monomial {
        &self.u
    }

    pub fn v(&self) -> &Monomial {
        &self.v
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.n, self.gens.clone()).expect("nonempty segment of positive degree")
    }

    /// Whether the ideal is `m^d`.
    pub fn is_max_power(&self) -> bool {
        self.u.nu(1) == self.d && self.v.nu(self.n) == self.d
    }

    fn a1(&self) -> u32 {
        self.u.nu(1)
    }

    fn b1(&self) -> u32 {
        self.v.nu(1)
    }

    /// Completeness by definition: the next shadow is a lexsegment
    /// (enough by persistence).
    pub fn is_completely_by_shadow(&self) -> bool {
        let set: BTreeSet<Monomial> = self.gens.iter().cloned().collect();
        shadow(&set, 1).1
    }
}

/// A reduction step applied before a closed formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Reduction {
    /// Both ends had `x1^power`; it was divided out and `x1` dropped, so
    /// the next variable plays the role of `x1`.
    StripCommon { power: u32 },
    /// `x1^power` with `power = nu_1(v) < nu_1(u)` was divided out.
    StripPartial { power: u32 },
}

/// Segment after repeatedly stripping a common leading power and dropping
/// the leading variable, then dividing out `x1^{nu_1(v)}`.
#[derive(Clone, Debug)]
struct Stripped {
    /// Number of leading variables dropped.
    dropped: usize,
    /// Exponents divided out of the dropped variables.
    prefix: Vec<u32>,
    /// Power of the new leading variable divided out afterwards.
    partial: u32,
    n: usize,
    d: u32,
    u: Monomial,
    v: Monomial,
    steps: Vec<Reduction>,
}

fn normalize(seg: &Lexsegment) -> Stripped {
    let (mut u, mut v) = (seg.u.exponents().to_vec(), seg.v.exponents().to_vec());
    let mut prefix = Vec::new();
    let mut steps = Vec::new();
    while !u.is_empty() && u[0] == v[0] && u.iter().sum::<u32>() > 0 {
        prefix.push(u[0]);
        steps.push(Reduction::StripCommon { power: u[0] });
        u.remove(0);
        v.remove(0);
    }
    let mut partial = 0;
    if !u.is_empty() && v[0] > 0 {
        partial = v[0];
        steps.push(Reduction::StripPartial { power: partial });
        u[0] -= partial;
        v[0] = 0;
    }
    let d = u.iter().sum();
    Stripped {
        dropped: prefix.len(),
        prefix,
        partial,
        n: u.len(),
        d,
        u: Monomial::new(u),
        v: Monomial::new(v),
        steps,
    }
}

impl Stripped {
    /// Map a monomial of the reduced ring back to the original ring.
    fn lift(&self, w: &Monomial) -> Monomial {
        let mut e = self.prefix.clone();
        e.extend_from_slice(w.exponents());
        if self.partial > 0 {
            e[self.dropped] += self.partial;
        }
        Monomial::new(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CompletelyTag {
    FinalSegment,
    InitialSegment,
    PowerPair,
    DivisorCondition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum LinearTag {
    /// After normalization the ideal is principal.
    Principal,
    /// After normalization the ideal is generated by variables.
    DegreeOne,
    /// `u = x1^p x2^{d-p}`, `v = x1^p x_n^{d-p}`.
    PowerPair,
    /// `nu_1(v) < nu_1(u) - 1`.
    ExponentGap,
    /// `nu_1(v) = nu_1(u) - 1` and the greatest `w < v` satisfies
    /// `x1 w / x_max(w) <= u`. Vacuous when `v = x_n^d`.
    GreatestBelow { vacuous: bool },
    /// `u = x1 x_{l+1}^{a_{l+1}} ... x_n^{a_n}`, `v = x_l x_n^{d-1}`.
    NonCompletelyShape { l: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexClassification {
    pub completely: bool,
    pub completely_tag: Option<CompletelyTag>,
    pub linear_resolution: bool,
    pub linear_tag: Option<LinearTag>,
    /// Whether the normalized segment, in its own ring, is completely.
    /// This decides which quotient order applies.
    pub normalized_completely: bool,
    pub reductions: Vec<Reduction>,
    pub warnings: Vec<String>,
}

/// Completely test for `d >= 2`, as a tag when it holds.
fn completely_tag(n: usize, d: u32, u: &Monomial, v: &Monomial) -> Result<Option<CompletelyTag>> {
    let xn_d = v.nu(n) == d;
    if xn_d {
        // final segment: completely iff u >= x2^d
        let mut x2d = vec![0; n];
        if n >= 2 {
            x2d[1] = d;
        } else {
            x2d[0] = d;
        }
        return Ok((u >= &Monomial::new(x2d)).then_some(CompletelyTag::FinalSegment));
    }
    if u.nu(1) == d {
        return Ok(Some(CompletelyTag::InitialSegment));
    }
    let (a1, b1) = (u.nu(1), v.nu(1));
    if a1 == 0 {
        return Ok(None);
    }
    let p = a1;
    if b1 == p && u.nu(2) == d - p && v.nu(n) == d - p {
        return Ok(Some(CompletelyTag::PowerPair));
    }
    if a1 == b1 {
        return Ok(None);
    }
    if count_of_degree(n, d) > ENUMERATION_LIMIT {
        return Err(Error::Budget(format!("|M_{d}| too large to enumerate")));
    }
    // every w < v has some i > 1 with x_i | w and x1 w / x_i <= u
    let mut w = lex_next(v);
    while let Some(cur) = w {
        let ok = (2..=n).any(|i| cur.nu(i) > 0 && &cur.div_var(i).unwrap().mul_var(1) <= u);
        if !ok {
            return Ok(None);
        }
        w = lex_next(&cur);
    }
    Ok(Some(CompletelyTag::DivisorCondition))
}

/// Linear-resolution test on a segment with `a1 > b1` and `d >= 2`.
fn linear_tag(n: usize, d: u32, u: &Monomial, v: &Monomial, completely: bool, warnings: &mut Vec<String>) -> Option<LinearTag> {
    let (a1, b1) = (u.nu(1), v.nu(1));
    if completely {
        if b1 == a1 && u.nu(2) == d - a1 && v.nu(n) == d - a1 {
            return Some(LinearTag::PowerPair);
        }
        if b1 + 1 < a1 {
            return Some(LinearTag::ExponentGap);
        }
        if b1 + 1 == a1 {
            return match lex_next(v) {
                None => {
                    warnings.push("condition (c) is vacuous: v = x_n^d has no lex successor".into());
                    Some(LinearTag::GreatestBelow { vacuous: true })
                }
                Some(w) => {
                    let m = w.max_index().unwrap();
                    let t = w.div_var(m).unwrap().mul_var(1);
                    (&t <= u).then_some(LinearTag::GreatestBelow { vacuous: false })
                }
            };
        }
        return None;
    }
    if a1 != 1 {
        return None;
    }
    let l = v.min_index()?;
    if l < 2 || l >= n {
        return None;
    }
    let v_shape = v.nu(l) == 1 && v.nu(n) == d - 1;
    let rest = u.div_var(1).unwrap();
    let u_shape = rest.min_index().is_some_and(|m| m > l);
    (v_shape && u_shape).then_some(LinearTag::NonCompletelyShape { l })
}

/// Classify a segment of degree at least 2.
pub fn classify(seg: &Lexsegment) -> Result<LexClassification> {
    if seg.d < 2 {
        return Err(Error::Classification("classification needs degree at least 2".into()));
    }
    let completely_tag = completely_tag(seg.n, seg.d, &seg.u, &seg.v)?;
    let st = normalize(seg);
    let mut warnings = Vec::new();
    let (normalized_completely, linear_tag) = match st.d {
        0 => (true, Some(LinearTag::Principal)),
        1 => (true, Some(LinearTag::DegreeOne)),
        _ => {
            let c = completely_tag_for(&st)?;
            (c, linear_tag(st.n, st.d, &st.u, &st.v, c, &mut warnings))
        }
    };
    if !st.steps.is_empty() {
        warnings.push(format!("classified after {} normalization step(s)", st.steps.len()));
    }
    Ok(LexClassification {
        completely: completely_tag.is_some(),
        completely_tag,
        linear_resolution: linear_tag.is_some(),
        linear_tag,
        normalized_completely,
        reductions: st.steps,
        warnings,
    })
}

fn completely_tag_for(st: &Stripped) -> Result<bool> {
    Ok(completely_tag(st.n, st.d, &st.u, &st.v)?.is_some())
}

/// The linear-quotients order attached to a segment with a linear
/// resolution: the prec order in the completely case, otherwise the
/// `x1`-free part descending in lex followed by the `x1`-part descending in
/// reversed lex. The certificate is re-checked before it is returned.
pub fn quotient_order(seg: &Lexsegment) -> Result<QuotientCertificate> {
    let st = normalize(seg);
    let reduced_order: Vec<Monomial> = if st.d == 0 {
        seg.gens.iter().map(|w| reduce(&st, w)).collect()
    } else if st.d == 1 {
        let reduced: Vec<Monomial> = seg.gens.iter().map(|w| reduce(&st, w)).collect();
        sorted_by(&MonomialIdeal::minimalize(st.n, reduced)?, TermOrder::Prec, false, false)?
    } else {
        let cls = classify(seg)?;
        if !cls.linear_resolution {
            return Err(Error::Classification(format!(
                "L({}, {}) has no linear resolution",
                seg.u, seg.v
            )));
        }
        let reduced = Lexsegment::new(st.n, st.d, st.u.clone(), st.v.clone())?;
        let ideal = reduced.ideal();
        if cls.normalized_completely {
            sorted_by(&ideal, TermOrder::Prec, false, false)?
        } else {
            let (mut j, mut k): (Vec<Monomial>, Vec<Monomial>) =
                reduced.gens.iter().cloned().partition(|w| w.nu(1) == 0);
            j.sort_by(|a, b| b.cmp(a));
            k.sort_by(|a, b| b.compare(a, TermOrder::LexReversed).unwrap());
            j.extend(k);
            j
        }
    };
    let order: Vec<Monomial> = reduced_order.iter().map(|w| st.lift(w)).collect();
    match check_order(&seg.ideal(), &order)? {
        CheckOutcome::Certified(c) => Ok(c),
        CheckOutcome::Failed(f) => Err(Error::Invariant(format!(
            "quotient order for L({}, {}) fails at position {}",
            seg.u, seg.v, f.i
        ))),
    }
}

fn reduce(st: &Stripped, w: &Monomial) -> Monomial {
    let mut e = w.exponents()[st.dropped..].to_vec();
    if st.partial > 0 {
        e[0] -= st.partial;
    }
    Monomial::new(e)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DimCase {
    MaxPower,
    /// `n - q` with `q = min(v) < n`.
    BelowN,
    /// `q = n`.
    FinalSegment,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub dim: usize,
    pub case: DimCase,
    /// Leading variables absent from the segment; each adds one.
    pub free_variables: usize,
}

/// Krull dimension of `S/I` from the closed formula.
pub fn krull_dim_formula(seg: &Lexsegment) -> DimReport {
    // leading variables dividing no generator add one dimension each
    let free = (1..=seg.n).take_while(|&i| seg.u.nu(i) == 0).count();
    let n = seg.n - free;
    let u = &seg.u.exponents()[free..];
    let v = &seg.v.exponents()[free..];
    let d = seg.d;
    if u[0] == d && v[n - 1] == d {
        return DimReport { dim: free, case: DimCase::MaxPower, free_variables: free };
    }
    let q = v.iter().position(|&e| e > 0).unwrap() + 1;
    let (dim, case) = if q < n { (n - q, DimCase::BelowN) } else { (1, DimCase::FinalSegment) };
    DimReport { dim: dim + free, case, free_variables: free }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DepthCase {
    /// After normalization the ideal is principal.
    Principal,
    /// After normalization the ideal is generated by variables.
    DegreeOne,
    /// `x_n u / x1 >=_lex v`.
    Zero,
    /// `v = x2^d`, `l >= 4`: depth `l - 2`.
    PowerOfX2,
    /// `v = x2^{d-1} x_j`, `3 <= j <= n - 2`, `l >= j + 2`: depth `l - j`.
    X2PowerTimesXj,
    /// All other cases: depth 1.
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthReport {
    pub depth: usize,
    /// `projdim(S/I) = n - depth`.
    pub projdim: usize,
    pub case: DepthCase,
    pub reductions: Vec<Reduction>,
}

/// Depth of `S/I` from the closed formulas, after normalization.
pub fn depth_formula(seg: &Lexsegment) -> DepthReport {
    let st = normalize(seg);
    let reductions = st.steps.clone();
    let extra = st.dropped;
    let done = |depth: usize, case: DepthCase, reductions: Vec<Reduction>| DepthReport {
        depth: depth + extra,
        projdim: seg.n - depth - extra,
        case,
        reductions,
    };
    if st.d == 0 {
        return DepthReport { depth: seg.n - 1, projdim: 1, case: DepthCase::Principal, reductions };
    }
    let n = st.n;
    let (u, v) = (st.u.clone(), st.v.clone());
    let d = u.degree();
    let q = v.min_index().unwrap();
    if d == 1 {
        // (x1, ..., x_q)
        return done(n - q, DepthCase::DegreeOne, reductions);
    }
    let xn_u = u.div_var(1).unwrap().mul_var(n);
    if xn_u >= v {
        return done(0, DepthCase::Zero, reductions);
    }
    let l = u.div_var(1).unwrap().min_index().unwrap();
    if v.nu(2) == d && l >= 4 {
        return done(l - 2, DepthCase::PowerOfX2, reductions);
    }
    if v.nu(2) == d - 1 {
        if let Some(j) = (3..=n).find(|&j| v.nu(j) == 1) {
            if j <= n.saturating_sub(2) && l >= j + 2 {
                return done(l - j, DepthCase::X2PowerTimesXj, reductions);
            }
        }
    }
    done(1, DepthCase::Other, reductions)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CmCase {
    MaxPower,
    /// `u = x1 x_n^{d-1}`, `v = x2^d`.
    CaseA,
    /// `v = x_{n-1}^a x_n^{d-a}` and `x_n u / x1 <_lex v`.
    CaseB,
    /// The characterization applies and neither case holds.
    NotCm,
    /// Outside the characterization's hypotheses: decided by comparing
    /// the dimension and depth formulas.
    FromFormulas,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmReport {
    pub cohen_macaulay: bool,
    pub case: CmCase,
    pub dim: usize,
    pub depth: usize,
}

/// Cohen-Macaulay test from the characterization, checked against the
/// dimension and depth formulas.
pub fn is_cohen_macaulay(seg: &Lexsegment) -> Result<CmReport> {
    let dim = krull_dim_formula(seg).dim;
    let depth = depth_formula(seg).depth;
    let (n, d) = (seg.n, seg.d);
    let (cm, case) = if seg.is_max_power() {
        (true, CmCase::MaxPower)
    } else if n >= 3 && d >= 2 && seg.a1() > seg.b1() && dim >= 1 {
        let u_a = seg.u.nu(1) == 1 && seg.u.nu(n) == d - 1;
        let v_a = seg.v.nu(2) == d;
        let v_b = seg.v.nu(n - 1) > 0 && seg.v.nu(n - 1) + seg.v.nu(n) == d;
        let xn_u = seg.u.div_var(1).unwrap().mul_var(n);
        if u_a && v_a {
            (true, CmCase::CaseA)
        } else if v_b && xn_u.cmp(&seg.v) == Ordering::Less {
            (true, CmCase::CaseB)
        } else {
            (false, CmCase::NotCm)
        }
    } else {
        (dim == depth, CmCase::FromFormulas)
    };
    if cm != (dim == depth) {
        return Err(Error::Invariant(format!(
            "L({}, {}): characterization says {cm} but dim = {dim}, depth = {depth}",
            seg.u, seg.v
        )));
    }
    Ok(CmReport { cohen_macaulay: cm, case, dim, depth })
}

/// Classification, quotient order and the dimension/depth/CM report.
#[derive(Clone, Debug, Serialize)]
pub struct LexReport {
    pub n: usize,
    pub d: u32,
    pub u: String,
    pub v: String,
    pub generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<LexClassification>,
    pub dim: DimReport,
    pub depth: DepthReport,
    pub cohen_macaulay: CmReport,
}

pub fn report(seg: &Lexsegment) -> Result<LexReport> {
    Ok(LexReport {
        n: seg.n,
        d: seg.d,
        u: seg.u.to_string(),
        v: seg.v.to_string(),
        generators: seg.gens.iter().map(|g| g.to_string()).collect(),
        classification: if seg.d >= 2 { Some(classify(seg)?) } else { None },
        dim: krull_dim_formula(seg),
        depth: depth_formula(seg),
        cohen_macaulay: is_cohen_macaulay(seg)?,
    })
}

/// Every lexsegment in `n` variables of degree `d`.
pub fn all_segments(n: usize, d: u32) -> Result<Vec<Lexsegment>> {
    let mons = crate::monomial::monomials_of_degree(n, d);
    let mut out = Vec::new();
    for (i, u) in mons.iter().enumerate() {
        for v in &mons[i..] {
            out.push(Lexsegment::new(n, d, u.clone(), v.clone())?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(n: usize, d: u32, u: &str, v: &str) -> Lexsegment {
        Lexsegment::parse(n, d, u, v).unwrap()
    }

    #[test]
    fn generation() {
        let s = seg(4, 3, "x1*x2*x3", "x2*x3^2");
        let g: Vec<String> = s.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(
            g,
            [
                "x1*x2*x3", "x1*x2*x4", "x1*x3^2", "x1*x3*x4", "x1*x4^2", "x2^3", "x2^2*x3", "x2^2*x4",
                "x2*x3^2"
            ]
        );
        assert_eq!(seg(3, 2, "x1*x2", "x1*x2").gens().len(), 1);
        assert!(Lexsegment::parse(3, 3, "x2^3", "x1^3").is_err());
        assert!(Lexsegment::parse(3, 3, "x1^2", "x2^3").is_err());
    }

    #[test]
    fn rank_matches_enumeration() {
        let all = crate::monomial::monomials_of_degree(4, 3);
        for (k, w) in all.iter().enumerate() {
            assert_eq!(lex_rank(w), k as u128);
            assert_eq!(lex_next(w).as_ref(), all.get(k + 1));
        }
    }

    #[test]
    fn shadow_examples() {
        let s = seg(3, 3, "x1*x3^2", "x2^3");
        let set: BTreeSet<Monomial> = s.gens().iter().cloned().collect();
        let (sh, flag) = shadow(&set, 1);
        assert_eq!(sh.len(), 6);
        assert!(!flag);
        assert!(shadow(&BTreeSet::new(), 1).0.is_empty());
        let init = Lexsegment::initial(3, Monomial::parse("x1*x3", 3).unwrap()).unwrap();
        let set: BTreeSet<Monomial> = init.gens().iter().cloned().collect();
        assert!(shadow(&set, 2).1);
    }

    #[test]
    fn classification_examples() {
        let c = classify(&seg(4, 3, "x1*x3^2", "x2*x4^2")).unwrap();
        assert!(c.completely);
        let c = classify(&seg(4, 3, "x1*x3*x4", "x2*x4^2")).unwrap();
        assert!(!c.completely);
        assert_eq!(c.linear_tag, Some(LinearTag::NonCompletelyShape { l: 2 }));
        let c = classify(&seg(3, 3, "x1*x2*x3", "x2*x3^2")).unwrap();
        assert!(c.completely);
        assert_eq!(c.linear_tag, Some(LinearTag::GreatestBelow { vacuous: false }));
        assert!(classify(&seg(3, 1, "x1", "x2")).is_err());
    }

    #[test]
    fn quotient_orders() {
        let c = quotient_order(&seg(3, 3, "x1*x2*x3", "x2*x3^2")).unwrap();
        let o: Vec<String> = c.order().iter().map(|g| g.to_string()).collect();
        assert_eq!(o, ["x2^3", "x2^2*x3", "x2*x3^2", "x1*x2*x3", "x1*x3^2"]);
        let c = quotient_order(&seg(4, 3, "x1*x3*x4", "x2*x4^2")).unwrap();
        let o: Vec<String> = c.order().iter().map(|g| g.to_string()).collect();
        assert_eq!(
            o,
            ["x2^3", "x2^2*x3", "x2^2*x4", "x2*x3^2", "x2*x3*x4", "x2*x4^2", "x1*x4^2", "x1*x3*x4"]
        );
        let c = quotient_order(&seg(3, 2, "x1*x2", "x1*x2")).unwrap();
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn dim_depth_cm_examples() {
        let s = seg(3, 3, "x1*x2*x3", "x2*x3^2");
        assert_eq!(krull_dim_formula(&s).dim, 1);
        let m = seg(3, 2, "x1^2", "x3^2");
        assert_eq!(krull_dim_formula(&m).dim, 0);
        assert!(is_cohen_macaulay(&m).unwrap().cohen_macaulay);
        let f = Lexsegment::final_segment(3, Monomial::parse("x1*x2", 3).unwrap()).unwrap();
        assert_eq!(krull_dim_formula(&f).dim, 1);
        assert_eq!(depth_formula(&f).depth, 0);
        assert!(!is_cohen_macaulay(&f).unwrap().cohen_macaulay);
        let a = seg(5, 2, "x1*x4", "x2^2");
        assert_eq!(depth_formula(&a).depth, 2);
        assert_eq!(depth_formula(&a).case, DepthCase::PowerOfX2);
        let c = seg(3, 3, "x1*x3^2", "x2*x3^2");
        assert_eq!(depth_formula(&c).depth, 1);
        assert_eq!(is_cohen_macaulay(&c).unwrap().case, CmCase::CaseB);
        let ca = seg(4, 2, "x1*x4", "x2^2");
        let r = is_cohen_macaulay(&ca).unwrap();
        assert_eq!((r.case, r.dim, r.depth), (CmCase::CaseA, 2, 2));
    }
}
