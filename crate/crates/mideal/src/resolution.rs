//! Explicit graded free resolutions: Koszul complexes, the Eliahou-Kervaire
//! resolution of a stable ideal and the iterated mapping cone of a regular
//! decomposition function.
//!
//! A resolution of `S/I` is stored as `modules[0] = S`, `modules[1]` the
//! generators of `I`, and so on; `diffs[k - 1]` is the matrix of
//! `modules[k] -> modules[k - 1]` with one column per source basis element.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::ideal::{mask_to_set, set_to_mask, MonomialIdeal};
use crate::monomial::{binomial, Monomial};
use crate::quotients::{canonical_decomposition, stability_witness, QuotientCertificate, Regularity};

/// Basis element `f(sigma; u)` of a free module. Koszul complexes have no
/// generator and label `e_sigma`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Label {
    pub sigma: Vec<usize>,
    pub gen: Option<Monomial>,
    pub degree: u32,
}

/// Entry `coeff * mono` at `(row, col)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
    pub coeff: i64,
    pub mono: Monomial,
}

/// Sparse matrix with signed monomial entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoMatrix {
    pub nrows: usize,
    pub ncols: usize,
    pub entries: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFreeResolution {
    n: usize,
    modules: Vec<Vec<Label>>,
    diffs: Vec<MonoMatrix>,
}

/// Outcome of [`verify_complex`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexReport {
    pub dd_zero: bool,
    /// First `k` with `d_k d_{k+1} != 0`, if any.
    pub dd_failure: Option<usize>,
    pub minimal: bool,
    pub degrees_consistent: bool,
    /// Betti table of `I` read off the ranks.
    pub betti: BettiTable,
}

/// Render a term `c * m` with the sign in front, e.g. `-x1*x2`, `2*x3`, `-1`.
pub fn format_term(coeff: i64, mono: &Monomial) -> String {
    if coeff == 0 {
        return "0".into();
    }
    let sign = if coeff < 0 { "-" } else { "" };
    let a = coeff.unsigned_abs();
    match (a, mono.is_one()) {
        (1, true) => format!("{sign}1"),
        (1, false) => format!("{sign}{mono}"),
        (_, true) => format!("{sign}{a}"),
        (_, false) => format!("{sign}{a}*{mono}"),
    }
}

impl MonoMatrix {
    fn new(nrows: usize, ncols: usize) -> Self {
        MonoMatrix { nrows, ncols, entries: Vec::new() }
    }

    /// Add `coeff * mono` at `(row, col)`, merging like terms.
    fn add(&mut self, row: usize, col: usize, coeff: i64, mono: Monomial) {
        if let Some(e) = self.entries.iter_mut().find(|e| e.row == row && e.col == col && e.mono == mono) {
            e.coeff += coeff;
        } else {
            self.entries.push(Entry { row, col, coeff, mono });
        }
    }

    fn finish(&mut self) {
        self.entries.retain(|e| e.coeff != 0);
        self.entries.sort_by(|a, b| (a.col, a.row).cmp(&(b.col, b.row)).then_with(|| b.mono.cmp(&a.mono)));
    }

    /// Dense layout, each cell the sum of its terms.
    pub fn dense(&self) -> Vec<Vec<String>> {
        let mut cells: Vec<Vec<Vec<String>>> = vec![vec![Vec::new(); self.ncols]; self.nrows];
        for e in &self.entries {
            cells[e.row][e.col].push(format_term(e.coeff, &e.mono));
        }
        cells
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|terms| {
                        if terms.is_empty() {
                            "0".to_string()
                        } else {
                            terms.join("+").replace("+-", "-")
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Entry at `(row, col)` as a single signed monomial; `None` for zero.
    /// Panics if the position holds more than one term.
    pub fn get(&self, row: usize, col: usize) -> Option<(i64, Monomial)> {
        let mut it = self.entries.iter().filter(|e| e.row == row && e.col == col);
        let first = it.next().map(|e| (e.coeff, e.mono.clone()));
        assert!(it.next().is_none(), "position ({row}, {col}) holds several terms");
        first
    }

    /// Symbolic product `self * other`, like terms combined.
    pub fn product(&self, other: &MonoMatrix) -> MonoMatrix {
        let mut acc: BTreeMap<(usize, usize, Monomial), i64> = BTreeMap::new();
        let mut by_row: HashMap<usize, Vec<&Entry>> = HashMap::new();
        for e in &other.entries {
            by_row.entry(e.row).or_default().push(e);
        }
        for a in &self.entries {
            for b in by_row.get(&a.col).into_iter().flatten() {
                *acc.entry((a.row, b.col, a.mono.mul(&b.mono))).or_insert(0) += a.coeff * b.coeff;
            }
        }
        let mut m = MonoMatrix::new(self.nrows, other.ncols);
        m.entries = acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|((row, col, mono), coeff)| Entry { row, col, coeff, mono })
            .collect();
        m
    }
}

impl fmt::Display for MonoMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dense();
        let w = d.iter().flatten().map(String::len).max().unwrap_or(1);
        for (k, row) in d.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for c in row {
                write!(f, " {c:>w$}")?;
            }
            write!(f, " ]")?;
        }
        Ok(())
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.sigma.iter().map(|i| i.to_string()).collect();
        match &self.gen {
            Some(u) => write!(f, "f({{{}}}; {})", s.join(","), u),
            None => write!(f, "e{{{}}}", s.join(",")),
        }
    }
}

impl GradedFreeResolution {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modules(&self) -> &[Vec<Label>] {
        &self.modules
    }

    /// `diffs()[k - 1]` is the differential out of `modules()[k]`.
    pub fn diffs(&self) -> &[MonoMatrix] {
        &self.diffs
    }

    pub fn diffs_mut(&mut self) -> &mut [MonoMatrix] {
        &mut self.diffs
    }

    /// The differential `d_k : F_k -> F_{k-1}`, `k >= 1`.
    pub fn diff(&self, k: usize) -> &MonoMatrix {
        &self.diffs[k - 1]
    }

    /// Ranks of `F_0 = S, F_1, ...`.
    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(Vec::len).collect()
    }

    /// Human-readable dump of every differential.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for (k, d) in self.diffs.iter().enumerate() {
            let src: Vec<String> = self.modules[k + 1].iter().map(|l| l.to_string()).collect();
            out.push_str(&format!("d{} : {}\n{}\n", k + 1, src.join(" "), d));
            out.push('\n');
        }
        out
    }
}

fn koszul_label(seq: &[Monomial], mask: u64) -> Label {
    let sigma = mask_to_set(mask);
    let degree = sigma.iter().map(|&k| seq[k - 1].degree()).sum();
    Label { sigma, gen: None, degree }
}

/// Koszul complex of `seq`: basis `e_sigma` for subsets in lex order,
/// `d(e_sigma) = sum_{k in sigma} (-1)^{alpha(sigma,k)} f_k e_{sigma \ k}`.
pub fn koszul(n: usize, seq: &[Monomial]) -> Result<GradedFreeResolution> {
    if seq.is_empty() {
        return Err(Error::Invalid("empty sequence".into()));
    }
    if seq.len() > 20 {
        return Err(Error::Budget(format!("Koszul complex on {} elements", seq.len())));
    }
    for f in seq {
        if f.n() != n {
            return Err(Error::DimensionMismatch(n, f.n()));
        }
    }
    let r = seq.len();
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); r + 1];
    for mask in 0u64..(1u64 << r) {
        by_size[mask.count_ones() as usize].push(mask);
    }
    for v in &mut by_size {
        v.sort_by_key(|&m| mask_to_set(m));
    }
    let modules: Vec<Vec<Label>> = by_size.iter().map(|v| v.iter().map(|&m| koszul_label(seq, m)).collect()).collect();
    let mut diffs = Vec::new();
    for s in 1..=r {
        let index: HashMap<u64, usize> = by_size[s - 1].iter().enumerate().map(|(k, &m)| (m, k)).collect();
        let mut d = MonoMatrix::new(by_size[s - 1].len(), by_size[s].len());
        for (col, &mask) in by_size[s].iter().enumerate() {
            for (alpha, k) in mask_to_set(mask).into_iter().enumerate() {
                let sign = if alpha % 2 == 0 { 1 } else { -1 };
                d.add(index[&(mask & !(1 << (k - 1)))], col, sign, seq[k - 1].clone());
            }
        }
        d.finish();
        diffs.push(d);
    }
    Ok(GradedFreeResolution { n, modules, diffs })
}

/// Shared builder for resolutions whose basis is `f(sigma; u)`:
/// `d f(sigma; u) = -sum (-1)^alpha x_t f(sigma\t; u)
///                  + sum (-1)^alpha (x_t u / g(x_t u)) f(sigma\t; g(x_t u))`,
/// where `f(tau; w) = 0` unless `tau` lies in `allowed[w]`.
fn cone_builder(
    n: usize,
    gens: &[Monomial],
    allowed: &[u64],
    g: impl Fn(&Monomial) -> Result<usize>,
) -> Result<GradedFreeResolution> {
    let top = allowed.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0);
    // modules[k] holds f(sigma; u) with |sigma| = k - 1, generators in
    // order and sigma in colex order (numeric order of the masks)
    let mut modules: Vec<Vec<Label>> = vec![vec![Label { sigma: vec![], gen: None, degree: 0 }]];
    let mut keys: Vec<Vec<(u64, usize)>> = vec![vec![]];
    for s in 0..=top {
        let mut labels = Vec::new();
        let mut key = Vec::new();
        for (j, u) in gens.iter().enumerate() {
            let mut subs: Vec<u64> = submasks(allowed[j]).filter(|m| m.count_ones() as usize == s).collect();
            subs.sort_unstable();
            for m in subs {
                labels.push(Label { sigma: mask_to_set(m), gen: Some(u.clone()), degree: s as u32 + u.degree() });
                key.push((m, j));
            }
        }
        modules.push(labels);
        keys.push(key);
    }
    let mut diffs = Vec::new();
    let mut d1 = MonoMatrix::new(1, gens.len());
    for (j, u) in gens.iter().enumerate() {
        d1.add(0, j, 1, u.clone());
    }
    d1.finish();
    diffs.push(d1);
    for k in 2..modules.len() {
        let index: HashMap<(u64, usize), usize> = keys[k - 1].iter().enumerate().map(|(r, &key)| (key, r)).collect();
        let mut d = MonoMatrix::new(keys[k - 1].len(), keys[k].len());
        for (col, &(mask, j)) in keys[k].iter().enumerate() {
            let u = &gens[j];
            for (alpha, t) in mask_to_set(mask).into_iter().enumerate() {
                let sign: i64 = if alpha % 2 == 0 { 1 } else { -1 };
                let rest = mask & !(1 << (t - 1));
                if let Some(&row) = index.get(&(rest, j)) {
                    d.add(row, col, -sign, Monomial::var(n, t)?);
                }
                let xu = u.mul_var(t);
                let h = g(&xu)?;
                if rest & !allowed[h] == 0 {
                    let coef = xu.div(&gens[h]).expect("g(w) divides w");
                    let row = index[&(rest, h)];
                    d.add(row, col, sign, coef);
                }
            }
        }
        d.finish();
        diffs.push(d);
    }
    while modules.last().is_some_and(Vec::is_empty) {
        modules.pop();
    }
    diffs.truncate(modules.len() - 1);
    Ok(GradedFreeResolution { n, modules, diffs })
}

fn submasks(m: u64) -> impl Iterator<Item = u64> {
    let mut cur = Some(m);
    std::iter::from_fn(move || {
        let c = cur?;
        cur = if c == 0 { None } else { Some((c - 1) & m) };
        Some(c)
    })
}

/// Eliahou-Kervaire resolution of a stable ideal. Generators in canonical
/// (descending lex) order; basis `f(sigma; u)` with `max(sigma) < max(u)`.
pub fn ek_resolution(ideal: &MonomialIdeal) -> Result<GradedFreeResolution> {
    if let Some((u, i)) = stability_witness(ideal) {
        return Err(Error::NotStable(format!("x{i} * {u} / x_max(u) is not in the ideal")));
    }
    let gens = ideal.gens();
    let allowed: Vec<u64> = gens
        .iter()
        .map(|u| set_to_mask(&(1..u.max_index().unwrap()).collect::<Vec<_>>()))
        .collect();
    let index: HashMap<&Monomial, usize> = gens.iter().enumerate().map(|(k, u)| (u, k)).collect();
    cone_builder(ideal.n(), gens, &allowed, |w| {
        let (u, _) = canonical_decomposition(ideal, w)?;
        Ok(index[&u])
    })
}

/// Iterated mapping cone for a certificate with a regular decomposition
/// function and generators of weakly increasing degree.
pub fn mapping_cone_resolution(cert: &QuotientCertificate) -> Result<GradedFreeResolution> {
    let gens = cert.order();
    if gens.windows(2).any(|w| w[0].degree() > w[1].degree()) {
        return Err(Error::InvalidOrder("generator degrees must weakly increase".into()));
    }
    let g = cert.decomposition();
    if let Regularity::Counterexample { u, s } = g.is_regular() {
        return Err(Error::NotRegular { u, s });
    }
    let allowed: Vec<u64> = cert.sets().iter().map(|s| set_to_mask(s)).collect();
    cone_builder(cert.n(), gens, &allowed, |w| g.index(w))
}

/// Check `d o d = 0` symbolically, minimality and degree bookkeeping, and
/// read off the Betti table.
pub fn verify_complex(r: &GradedFreeResolution) -> ComplexReport {
    let mut dd_failure = None;
    for k in 1..r.diffs.len() {
        if !r.diffs[k - 1].product(&r.diffs[k]).entries.is_empty() {
            dd_failure = Some(k);
            break;
        }
    }
    let minimal = r.diffs.iter().all(|d| d.entries.iter().all(|e| e.coeff == 0 || !e.mono.is_one()));
    let degrees_consistent = r.diffs.iter().enumerate().all(|(k, d)| {
        d.entries
            .iter()
            .all(|e| r.modules[k + 1][e.col].degree == r.modules[k][e.row].degree + e.mono.degree())
    });
    let mut betti = BettiTable::new();
    for (k, m) in r.modules.iter().enumerate().skip(1) {
        for l in m {
            betti.add(k - 1, l.degree, 1);
        }
    }
    ComplexReport { dd_zero: dd_failure.is_none(), dd_failure, minimal, degrees_consistent, betti }
}

/// `numerator / (1 - t)^denominator_exp`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    /// Coefficient of `t^k` at index `k`.
    pub numerator: Vec<i64>,
    pub denominator_exp: usize,
}

impl HilbertSeries {
    /// Coefficient of `t^k` in the power series expansion.
    pub fn coefficient(&self, k: u32) -> i128 {
        let n = self.denominator_exp as u128;
        let mut s: i128 = 0;
        for (j, &c) in self.numerator.iter().enumerate() {
            if j as u32 > k || c == 0 {
                continue;
            }
            let m = (k - j as u32) as u128;
            let b = if n == 0 { u128::from(m == 0) } else { binomial(n - 1 + m, n - 1) };
            s += c as i128 * b as i128;
        }
        s
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / (1-t)^{}", format_poly(&self.numerator), self.denominator_exp)
    }
}

/// Render an integer polynomial in `t`.
pub fn format_poly(c: &[i64]) -> String {
    let mut terms = Vec::new();
    for (k, &a) in c.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let t = match k {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{k}"),
        };
        let body = match (a.abs(), t.is_empty()) {
            (x, true) => x.to_string(),
            (1, false) => t,
            (x, false) => format!("{x}*{t}"),
        };
        terms.push((a < 0, body));
    }
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (neg, body)) in terms.into_iter().enumerate() {
        match (k, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        s.push_str(&body);
    }
    s
}

/// Multiply two integer polynomials.
pub fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Hilbert series of a stable ideal `I` over `(1 - t)^n`:
/// `sum_u t^{deg u} (1 - t)^{max(u) - 1}`.
pub fn stable_hilbert_series(ideal: &MonomialIdeal) -> Result<HilbertSeries> {
    if let Some((u, i)) = stability_witness(ideal) {
        return Err(Error::NotStable(format!("x{i} * {u} / x_max(u) is not in the ideal")));
    }
    let mut num: Vec<i64> = Vec::new();
    for u in ideal.gens() {
        let mut p = vec![0i64; u.degree() as usize + 1];
        p[u.degree() as usize] = 1;
        for _ in 1..u.max_index().unwrap() {
            p = poly_mul(&p, &[1, -1]);
        }
        if num.len() < p.len() {
            num.resize(p.len(), 0);
        }
        for (k, c) in p.into_iter().enumerate() {
            num[k] += c;
        }
    }
    while num.last() == Some(&0) {
        num.pop();
    }
    Ok(HilbertSeries { numerator: num, denominator_exp: ideal.n() })
}

#[derive(Serialize, Deserialize)]
struct LabelSpec {
    sigma: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gen: Option<String>,
    degree: u32,
}

#[derive(Serialize, Deserialize)]
struct EntrySpec {
    row: usize,
    col: usize,
    coeff: i64,
    mono: String,
}

#[derive(Serialize, Deserialize)]
struct MatrixSpec {
    nrows: usize,
    ncols: usize,
    entries: Vec<EntrySpec>,
}

#[derive(Serialize, Deserialize)]
struct ResolutionSpec {
    n: usize,
    modules: Vec<Vec<LabelSpec>>,
    diffs: Vec<MatrixSpec>,
}

impl Serialize for GradedFreeResolution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let spec = ResolutionSpec {
            n: self.n,
            modules: self
                .modules
                .iter()
                .map(|m| {
                    m.iter()
                        .map(|l| LabelSpec {
                            sigma: l.sigma.clone(),
                            gen: l.gen.as_ref().map(|g| g.to_string()),
                            degree: l.degree,
                        })
                        .collect()
                })
                .collect(),
            diffs: self
                .diffs
                .iter()
                .map(|d| MatrixSpec {
                    nrows: d.nrows,
                    ncols: d.ncols,
                    entries: d
                        .entries
                        .iter()
                        .map(|e| EntrySpec { row: e.row, col: e.col, coeff: e.coeff, mono: e.mono.to_string() })
                        .collect(),
                })
                .collect(),
        };
        spec.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedFreeResolution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let spec = ResolutionSpec::deserialize(d)?;
        let n = spec.n;
        let mono = |s: &str| Monomial::parse(s, n).map_err(D::Error::custom);
        let mut modules = Vec::new();
        for m in spec.modules {
            let mut labels = Vec::new();
            for l in m {
                let gen = match l.gen {
                    Some(g) => Some(mono(&g)?),
                    None => None,
                };
                labels.push(Label { sigma: l.sigma, gen, degree: l.degree });
            }
            modules.push(labels);
        }
        if spec.diffs.len() + 1 != modules.len() {
            return Err(D::Error::custom("need exactly one differential per nonzero module"));
        }
        let mut diffs = Vec::new();
        for (k, m) in spec.diffs.into_iter().enumerate() {
            if m.nrows != modules[k].len() || m.ncols != modules[k + 1].len() {
                return Err(D::Error::custom(format!("differential {} has the wrong shape", k + 1)));
            }
            let mut entries = Vec::new();
            for e in m.entries {
                if e.row >= m.nrows || e.col >= m.ncols {
                    return Err(D::Error::custom(format!("entry ({}, {}) out of range", e.row, e.col)));
                }
                entries.push(Entry { row: e.row, col: e.col, coeff: e.coeff, mono: mono(&e.mono)? });
            }
            diffs.push(MonoMatrix { nrows: m.nrows, ncols: m.ncols, entries });
        }
        Ok(GradedFreeResolution { n, modules, diffs })
    }
}
