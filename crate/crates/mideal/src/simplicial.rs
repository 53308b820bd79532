//! Simplicial complexes on `[n]`: Stanley-Reisner, facet and dual ideals,
//! Alexander duality, links and deletions, the pure hierarchy (shifted,
//! vertex-decomposable, shellable, constructible) and Reisner's criterion.
//!
//! Faces are bitmasks, vertex `i` at bit `i - 1`, so `n <= 64`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{mask_to_set, set_to_mask, support_mask, MonomialIdeal};
use crate::linalg::{CellComplex, Field};
use crate::monomial::Monomial;
use crate::oracle;
use crate::quotients::{find_order, FindOutcome};

/// Largest facet size for which all faces are enumerated.
pub const FACE_LIMIT: u32 = 24;
/// Largest vertex count for the shiftedness search.
pub const SHIFTED_LIMIT: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    /// Facets in canonical order: by vertex list, lexicographically.
    facets: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexSpec {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

fn canonical(mut facets: Vec<u64>) -> Vec<u64> {
    facets.sort_unstable();
    facets.dedup();
    let maximal: Vec<u64> = facets
        .iter()
        .copied()
        .filter(|&f| !facets.iter().any(|&g| g != f && g & f == f))
        .collect();
    let mut keyed: Vec<(Vec<usize>, u64)> = maximal.into_iter().map(|f| (mask_to_set(f), f)).collect();
    keyed.sort();
    keyed.into_iter().map(|(_, f)| f).collect()
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl SimplicialComplex {
    /// The complex generated by `facets`; non-maximal sets are dropped.
    pub fn from_facets(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if n > 64 {
            return Err(Error::Unsupported(format!("{n} vertices (at most 64)")));
        }
        let mut masks = Vec::with_capacity(facets.len());
        for f in facets {
            if let Some(&bad) = f.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::Invalid(format!("vertex {bad} outside 1..{n}")));
            }
            masks.push(set_to_mask(f));
        }
        Ok(SimplicialComplex { n, facets: canonical(masks) })
    }

    pub fn from_masks(n: usize, facets: impl IntoIterator<Item = u64>) -> Self {
        let mask = full(n);
        SimplicialComplex { n, facets: canonical(facets.into_iter().map(|f| f & mask).collect()) }
    }

    /// The complex with no faces at all.
    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    pub fn simplex(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![full(n)] }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let spec: ComplexSpec = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        SimplicialComplex::try_from(spec)
    }

    pub fn to_spec(&self) -> ComplexSpec {
        ComplexSpec { n: self.n, facets: self.facet_sets() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn facet_sets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| mask_to_set(f)).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Whether the complex is `{∅}`.
    pub fn is_empty_face_only(&self) -> bool {
        self.facets == [0]
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// `max |F| - 1`; `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.count_ones() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
    }

    pub fn vertex_mask(&self) -> u64 {
        self.facets.iter().fold(0, |a, &f| a | f)
    }

    /// Vertices of `[n]` lying in no face.
    pub fn missing_vertices(&self) -> Vec<usize> {
        mask_to_set(full(self.n) & !self.vertex_mask())
    }

    pub fn contains_face(&self, face: u64) -> bool {
        !self.facets.is_empty() && self.facets.iter().any(|&f| f & face == face)
    }

    /// All faces, the empty face included.
    pub fn faces(&self) -> Result<Vec<u64>> {
        let mut out = HashSet::new();
        for &f in &self.facets {
            if f.count_ones() > FACE_LIMIT {
                return Err(Error::Budget(format!("facet with {} vertices", f.count_ones())));
            }
            // all submasks of f
            let mut s = f;
            loop {
                out.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        let mut v: Vec<u64> = out.into_iter().collect();
        v.sort_unstable_by_key(|&m| (m.count_ones(), m));
        Ok(v)
    }

    /// `f_i` = number of faces of dimension `i`, from `i = -1`.
    pub fn f_vector(&self) -> Result<Vec<u64>> {
        let mut f = Vec::new();
        for face in self.faces()? {
            let s = face.count_ones() as usize;
            if f.len() <= s {
                f.resize(s + 1, 0);
            }
            f[s] += 1;
        }
        Ok(f)
    }

    /// Minimal non-faces.
    pub fn minimal_nonfaces(&self) -> Result<Vec<u64>> {
        if self.is_void() {
            return Ok(vec![0]);
        }
        let mut out = BTreeSet::new();
        let vertices = full(self.n);
        for face in self.faces()? {
            let mut rest = vertices & !face;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let cand = face | bit;
                if self.contains_face(cand) {
                    continue;
                }
                let mut ok = true;
                let mut sub = cand;
                while sub != 0 {
                    let b = sub & sub.wrapping_neg();
                    sub &= sub - 1;
                    if !self.contains_face(cand & !b) {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    out.insert(cand);
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    fn ideal_of(&self, masks: impl IntoIterator<Item = u64>) -> Result<Option<MonomialIdeal>> {
        let gens: Vec<Monomial> = masks
            .into_iter()
            .map(|m| Monomial::from_support(self.n, &mask_to_set(m)))
            .collect::<Result<_>>()?;
        if gens.is_empty() {
            return Ok(None);
        }
        MonomialIdeal::minimalize(self.n, gens).map(Some)
    }

    /// `I_Δ`, generated by the minimal non-faces. `None` is the zero ideal
    /// (the full simplex); the void complex gives a unit-ideal error.
    pub fn sr_ideal(&self) -> Result<Option<MonomialIdeal>> {
        self.ideal_of(self.minimal_nonfaces()?)
    }

    /// `I(Δ) = (x_F : F a facet)`.
    pub fn facet_ideal(&self) -> Result<Option<MonomialIdeal>> {
        self.ideal_of(self.facets.iter().copied())
    }

    /// `I_{Δ^∨} = (x_{F^c} : F a facet)`.
    pub fn dual_sr_ideal(&self) -> Result<Option<MonomialIdeal>> {
        let all = full(self.n);
        self.ideal_of(self.facets.iter().map(|&f| all & !f))
    }

    /// The complex whose facets are the complements of the generators of a
    /// squarefree ideal; inverse of [`dual_sr_ideal`](Self::dual_sr_ideal).
    pub fn from_dual_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::Unsupported("the ideal is not squarefree".into()));
        }
        let all = full(ideal.n());
        Ok(SimplicialComplex::from_masks(ideal.n(), ideal.gens().iter().map(|g| all & !support_mask(g))))
    }

    /// `Δ^∨ = {F^c : F ∉ Δ}`. The dual of the full simplex is void.
    pub fn alexander_dual(&self) -> Result<Self> {
        let all = full(self.n);
        Ok(SimplicialComplex::from_masks(self.n, self.minimal_nonfaces()?.into_iter().map(|m| all & !m)))
    }

    fn require_face(&self, face: u64) -> Result<()> {
        if self.contains_face(face) {
            Ok(())
        } else {
            Err(Error::Invalid(format!("{:?} is not a face", mask_to_set(face))))
        }
    }

    /// `lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`.
    pub fn link(&self, face: u64) -> Result<Self> {
        self.require_face(face)?;
        let facets = self.facets.iter().filter(|&&h| h & face == face).map(|&h| h & !face);
        Ok(SimplicialComplex::from_masks(self.n, facets))
    }

    /// `del(F) = {G : G ∩ F = ∅}`.
    pub fn deletion(&self, face: u64) -> Result<Self> {
        self.require_face(face)?;
        Ok(SimplicialComplex::from_masks(self.n, self.facets.iter().map(|&h| h & !face)))
    }

    pub fn link_of(&self, face: &[usize]) -> Result<Self> {
        self.link(set_to_mask(face))
    }

    pub fn deletion_of(&self, face: &[usize]) -> Result<Self> {
        self.deletion(set_to_mask(face))
    }

    /// Whether the underlying graph on the vertices of `Δ` is connected.
    pub fn is_connected(&self) -> bool {
        let mut reached = match self.facets.iter().find(|&&f| f != 0) {
            Some(&f) => f,
            None => return true,
        };
        loop {
            let next = self.facets.iter().filter(|&&f| f & reached != 0).fold(reached, |a, &f| a | f);
            if next == reached {
                return reached == self.vertex_mask();
            }
            reached = next;
        }
    }

    /// Reduced homology.
    pub fn homology(&self, field: Field) -> Result<HomologyProfile> {
        let cx = CellComplex::from_cells(self.faces()?);
        let h = cx.homology(field);
        Ok(HomologyProfile { field, reduced_betti: h })
    }

    /// Reisner's criterion: `H~_i(lk F) = 0` for every face `F` and every
    /// `i < dim lk F`.
    pub fn cohen_macaulay(&self, field: Field) -> Result<CmCheck> {
        if self.is_void() {
            return Ok(CmCheck { field, cohen_macaulay: true, failure: None });
        }
        let faces = self.faces()?;
        let failures: Vec<Result<Option<ReisnerFailure>>> = faces
            .par_iter()
            .map(|&f| {
                let lk = self.link(f)?;
                let d = lk.dim().unwrap_or(-1);
                let h = lk.homology(field)?;
                for (k, &b) in h.reduced_betti.iter().enumerate() {
                    let i = k as isize - 1;
                    if i < d && b > 0 {
                        return Ok(Some(ReisnerFailure { face: mask_to_set(f), degree: i, rank: b }));
                    }
                }
                Ok(None)
            })
            .collect();
        for r in failures {
            if let Some(f) = r? {
                return Ok(CmCheck { field, cohen_macaulay: false, failure: Some(f) });
            }
        }
        Ok(CmCheck { field, cohen_macaulay: true, failure: None })
    }

    pub fn is_cohen_macaulay(&self, field: Field) -> Result<bool> {
        Ok(self.cohen_macaulay(field)?.cohen_macaulay)
    }

    fn require_pure(&self) -> Result<()> {
        if self.is_pure() {
            Ok(())
        } else {
            Err(Error::Unsupported("the complex is not pure".into()))
        }
    }

    /// Shellability through linear quotients of `I_{Δ^∨}`. The facet order
    /// is re-checked against the exchange condition.
    pub fn shelling(&self, budget: u64) -> Result<ShellingOutcome> {
        self.require_pure()?;
        if self.facets.len() <= 1 {
            return Ok(ShellingOutcome::Shellable { order: self.facet_sets() });
        }
        let ideal = self.dual_sr_ideal()?.expect("at least two facets");
        match find_order(&ideal, budget) {
            FindOutcome::Found(cert) => {
                let all = full(self.n);
                let order: Vec<u64> = cert.order().iter().map(|g| all & !support_mask(g)).collect();
                if !is_shelling(&order) {
                    return Err(Error::Invariant("linear quotients of the dual ideal gave no shelling".into()));
                }
                Ok(ShellingOutcome::Shellable { order: order.into_iter().map(mask_to_set).collect() })
            }
            FindOutcome::None => Ok(ShellingOutcome::NotShellable),
            FindOutcome::Unknown { nodes } => Ok(ShellingOutcome::Unknown { nodes }),
        }
    }

    pub fn is_vertex_decomposable(&self) -> Result<bool> {
        self.require_pure()?;
        let mut memo = HashMap::new();
        Ok(vd(self, &mut memo))
    }

    /// A relabelling witnessing shiftedness: `labels[v - 1]` is the new
    /// label of vertex `v`. Only vertices of `Δ` are relabelled.
    pub fn shifted_labeling(&self) -> Result<Option<Vec<usize>>> {
        self.require_pure()?;
        let verts = mask_to_set(self.vertex_mask());
        if verts.len() > SHIFTED_LIMIT {
            return Err(Error::Budget(format!("shiftedness search over {} vertices", verts.len())));
        }
        let mut perm: Vec<usize> = (0..verts.len()).collect();
        loop {
            // vertex verts[k] gets label perm[k] + 1 among the vertices
            let mut by_label = vec![0usize; verts.len()];
            for (k, &p) in perm.iter().enumerate() {
                by_label[p] = verts[k];
            }
            if self.shifted_under(&by_label) {
                let mut labels = vec![0; self.n];
                for (k, &v) in verts.iter().enumerate() {
                    labels[v - 1] = perm[k] + 1;
                }
                return Ok(Some(labels));
            }
            if !next_permutation(&mut perm) {
                return Ok(None);
            }
        }
    }

    pub fn is_shifted(&self) -> Result<bool> {
        Ok(self.shifted_labeling()?.is_some())
    }

    /// `by_label[k]` is the vertex with the `k + 1`-st smallest label.
    /// Checking facets suffices: a swap inside a facet stays inside it.
    pub fn shifted_under(&self, by_label: &[usize]) -> bool {
        for &f in &self.facets {
            for (hi, &v) in by_label.iter().enumerate() {
                if f & (1 << (v - 1)) == 0 {
                    continue;
                }
                for &w in &by_label[..hi] {
                    let wb = 1u64 << (w - 1);
                    if f & wb == 0 && !self.contains_face((f & !(1 << (v - 1))) | wb) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Complex-level constructibility: a simplex, or a union of two
    /// constructible complexes of the same dimension `d` along a
    /// constructible complex of dimension `d - 1`. Searches facet
    /// bipartitions with memoization.
    pub fn constructibility(&self, budget: u64) -> Result<ComplexConstructibility> {
        self.require_pure()?;
        let mut search = ComplexSearch { memo: HashMap::new(), nodes: 0, budget };
        let r = search.run(&self.facets);
        Ok(match r {
            Some(true) => ComplexConstructibility::Constructible,
            Some(false) => ComplexConstructibility::NotConstructible,
            None => ComplexConstructibility::Unknown { nodes: search.nodes },
        })
    }
}

/// The exchange condition: for all `j < i` there are `v ∈ F_i \ F_j` and
/// `k < i` with `F_i \ F_k = {v}`.
pub fn is_shelling(order: &[u64]) -> bool {
    for i in 1..order.len() {
        let fi = order[i];
        let singles: u64 = order[..i]
            .iter()
            .map(|&fk| fi & !fk)
            .filter(|d| d.count_ones() == 1)
            .fold(0, |a, d| a | d);
        if order[..i].iter().any(|&fj| (fi & !fj) & singles == 0) {
            return false;
        }
    }
    true
}

pub fn is_shelling_sets(order: &[Vec<usize>]) -> bool {
    is_shelling(&order.iter().map(|f| set_to_mask(f)).collect::<Vec<_>>())
}

fn vd(cx: &SimplicialComplex, memo: &mut HashMap<Vec<u64>, bool>) -> bool {
    if cx.is_void() || !cx.is_pure() {
        return false;
    }
    if cx.facets.len() == 1 {
        // simplices, {∅} included
        return true;
    }
    if let Some(&r) = memo.get(&cx.facets) {
        return r;
    }
    let mut result = false;
    for v in mask_to_set(cx.vertex_mask()) {
        let bit = 1u64 << (v - 1);
        let del = cx.deletion(bit).expect("vertex is a face");
        let lk = cx.link(bit).expect("vertex is a face");
        if vd(&del, memo) && vd(&lk, memo) {
            result = true;
            break;
        }
    }
    memo.insert(cx.facets.clone(), result);
    result
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else { return false };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

struct ComplexSearch {
    memo: HashMap<Vec<u64>, bool>,
    nodes: u64,
    budget: u64,
}

impl ComplexSearch {
    /// `facets` canonical. `None` when the budget ran out.
    fn run(&mut self, facets: &[u64]) -> Option<bool> {
        if facets.len() <= 1 {
            return Some(!facets.is_empty());
        }
        if let Some(&r) = self.memo.get(facets) {
            return Some(r);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let m = facets.len();
        let d = facets[0].count_ones();
        let mut found = false;
        // the last facet always goes to the second part, so each unordered
        // split is visited once
        for mask in 1u64..(1u64 << (m - 1)) {
            let (mut a, mut b) = (Vec::new(), Vec::new());
            for (k, &f) in facets.iter().enumerate() {
                if k < m - 1 && mask >> k & 1 == 1 {
                    a.push(f);
                } else {
                    b.push(f);
                }
            }
            let mut meet = Vec::new();
            for &x in &a {
                for &y in &b {
                    meet.push(x & y);
                }
            }
            let meet = canonical(meet);
            if meet.iter().any(|f| f.count_ones() + 1 != d) {
                continue;
            }
            let a = canonical(a);
            let b = canonical(b);
            if self.run(&meet)? && self.run(&a)? && self.run(&b)? {
                found = true;
                break;
            }
        }
        self.memo.insert(facets.to_vec(), found);
        Some(found)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ComplexConstructibility {
    Constructible,
    NotConstructible,
    Unknown { nodes: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub field: Field,
    /// `reduced_betti[k]` is `dim H~_{k-1}`, starting at dimension -1.
    pub reduced_betti: Vec<u64>,
}

impl HomologyProfile {
    /// `dim H~_i`.
    pub fn get(&self, i: isize) -> u64 {
        usize::try_from(i + 1).ok().and_then(|k| self.reduced_betti.get(k)).copied().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReisnerFailure {
    pub face: Vec<usize>,
    pub degree: isize,
    pub rank: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmCheck {
    pub field: Field,
    pub cohen_macaulay: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<ReisnerFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ShellingOutcome {
    Shellable { order: Vec<Vec<usize>> },
    NotShellable,
    Unknown { nodes: u64 },
}

/// Cohen-Macaulayness against linearity of the dual ideal, and Terai's
/// `projdim(I_Δ) = reg(k[Δ^∨])`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EagonReinerReport {
    pub field: Field,
    pub cohen_macaulay: bool,
    pub dual_linear: bool,
    pub agree: bool,
    /// `(projdim I_Δ, reg k[Δ^∨])`; absent when either ideal is zero or
    /// the unit ideal.
    pub terai: Option<(usize, usize)>,
    pub terai_holds: bool,
}

pub fn eagon_reiner_check(cx: &SimplicialComplex, field: Field) -> Result<EagonReinerReport> {
    cx.require_pure()?;
    let cm = cx.is_cohen_macaulay(field)?;
    let (dual_linear, reg_dual) = match cx.dual_sr_ideal() {
        Ok(Some(j)) => {
            let b = oracle::betti_numbers(&j, field)?;
            // reg(S/J) = reg(J) - 1
            (b.linear, b.betti.regularity().map(|r| r as usize - 1))
        }
        // the full simplex: the dual ideal is the unit ideal, S/J = 0
        Err(Error::UnitIdeal) => (true, None),
        Ok(None) => (true, None),
        Err(e) => return Err(e),
    };
    let projdim_sr = match cx.sr_ideal()? {
        Some(i) => Some(oracle::betti_numbers(&i, field)?.projdim),
        None => None,
    };
    let terai = match (projdim_sr, reg_dual) {
        (Some(p), Some(r)) => Some((p, r)),
        _ => None,
    };
    Ok(EagonReinerReport {
        field,
        cohen_macaulay: cm,
        dual_linear,
        agree: cm == dual_linear,
        terai,
        terai_holds: terai.is_none_or(|(p, r)| p == r),
    })
}

/// Everything the `complex analyze` command reports.
#[derive(Clone, Debug, Serialize)]
pub struct ComplexReport {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
    pub dim: Option<isize>,
    pub pure: bool,
    pub f_vector: Vec<u64>,
    pub missing_vertices: Vec<usize>,
    pub sr_ideal: Option<Vec<String>>,
    pub facet_ideal: Option<Vec<String>>,
    pub dual_sr_ideal: Option<Vec<String>>,
    pub alexander_dual: Vec<Vec<usize>>,
    pub homology: HomologyProfile,
    pub cohen_macaulay: CmCheck,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shelling: Option<ShellingOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_decomposable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shifted: Option<bool>,
    pub warnings: Vec<String>,
}

fn gens_strings(i: Result<Option<MonomialIdeal>>) -> Result<Option<Vec<String>>> {
    match i {
        Ok(Some(i)) => Ok(Some(i.gens().iter().map(|g| g.to_string()).collect())),
        Ok(None) => Ok(Some(Vec::new())),
        Err(Error::UnitIdeal) => Ok(Some(vec!["1".into()])),
        Err(e) => Err(e),
    }
}

pub fn analyze(cx: &SimplicialComplex, field: Field, budget: u64) -> Result<ComplexReport> {
    let mut warnings = Vec::new();
    if cx.is_void() {
        warnings.push("void complex".into());
    }
    if cx.is_empty_face_only() {
        warnings.push("the complex is {∅}".into());
    }
    let missing = cx.missing_vertices();
    if !missing.is_empty() && !cx.is_void() {
        warnings.push(format!("vertices {missing:?} are not faces"));
    }
    let pure = cx.is_pure();
    if !pure {
        warnings.push("not pure: hierarchy tests skipped".into());
    }
    let shifted = if pure && cx.vertex_mask().count_ones() as usize <= SHIFTED_LIMIT {
        Some(cx.is_shifted()?)
    } else {
        None
    };
    Ok(ComplexReport {
        n: cx.n,
        facets: cx.facet_sets(),
        dim: cx.dim(),
        pure,
        f_vector: cx.f_vector()?,
        missing_vertices: missing,
        sr_ideal: gens_strings(cx.sr_ideal())?,
        facet_ideal: gens_strings(cx.facet_ideal())?,
        dual_sr_ideal: gens_strings(cx.dual_sr_ideal())?,
        alexander_dual: cx.alexander_dual()?.facet_sets(),
        homology: cx.homology(field)?,
        cohen_macaulay: cx.cohen_macaulay(field)?,
        shelling: if pure { Some(cx.shelling(budget)?) } else { None },
        vertex_decomposable: if pure { Some(cx.is_vertex_decomposable()?) } else { None },
        shifted,
        warnings,
    })
}

impl TryFrom<ComplexSpec> for SimplicialComplex {
    type Error = Error;
    fn try_from(s: ComplexSpec) -> Result<Self> {
        SimplicialComplex::from_facets(s.n, &s.facets)
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_spec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let spec = ComplexSpec::deserialize(d)?;
        SimplicialComplex::try_from(spec).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, face) in self.facet_sets().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let v: Vec<String> = face.iter().map(|x| x.to_string()).collect();
            write!(f, "{{{}}}", v.join(","))?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} on [{}]", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, f: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, &f.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn gens(i: Option<MonomialIdeal>) -> Vec<String> {
        i.unwrap().gens().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn ideals_of_a_small_complex() {
        let d = cx(4, &[&[1, 2, 3], &[3, 4]]);
        assert_eq!(gens(d.sr_ideal().unwrap()), ["x1*x4", "x2*x4"]);
        assert_eq!(gens(d.facet_ideal().unwrap()), ["x1*x2*x3", "x3*x4"]);
        let e = cx(4, &[&[1, 2, 3], &[3, 4], &[1, 4]]);
        assert_eq!(gens(e.dual_sr_ideal().unwrap()), ["x1*x2", "x2*x3", "x4"]);
        assert_eq!(e.alexander_dual().unwrap().facet_sets(), vec![vec![1, 3], vec![2]]);
        assert!(SimplicialComplex::simplex(3).sr_ideal().unwrap().is_none());
        assert_eq!(SimplicialComplex::void(3).sr_ideal().unwrap_err(), Error::UnitIdeal);
    }

    #[test]
    fn link_and_deletion() {
        let d = cx(5, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]]);
        assert_eq!(d.deletion_of(&[1, 3]).unwrap().facet_sets(), vec![vec![2, 4], vec![4, 5]]);
        assert_eq!(d.link_of(&[1, 3]).unwrap().facet_sets(), vec![vec![2]]);
        assert_eq!(d.link(0).unwrap(), d);
        assert!(d.link_of(&[1, 5]).is_err());
    }

    #[test]
    fn homology_basics() {
        let circle = cx(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let h = circle.homology(Field::Rational).unwrap();
        assert_eq!((h.get(-1), h.get(0), h.get(1)), (0, 0, 1));
        let empty = SimplicialComplex::from_masks(3, [0]);
        assert_eq!(empty.homology(Field::Rational).unwrap().get(-1), 1);
        let two_points = cx(2, &[&[1], &[2]]);
        assert_eq!(two_points.homology(Field::Rational).unwrap().get(0), 1);
    }

    #[test]
    fn hierarchy_examples() {
        let f6 = cx(4, &[&[1, 2], &[3, 4]]);
        assert!(!f6.is_cohen_macaulay(Field::Rational).unwrap());
        assert_eq!(f6.shelling(1000).unwrap(), ShellingOutcome::NotShellable);
        let square = cx(4, &[&[1, 2], &[1, 3], &[2, 4], &[3, 4]]);
        assert!(square.is_vertex_decomposable().unwrap());
        assert!(!square.is_shifted().unwrap());
        let f9 = cx(4, &[&[1, 2, 3], &[1, 3, 4]]);
        assert!(f9.is_vertex_decomposable().unwrap());
        assert!(cx(3, &[&[1, 2], &[1, 3], &[2, 3]]).is_shifted().unwrap());
        assert!(cx(5, &[&[1, 2, 3]]).is_shifted().unwrap());
    }

    #[test]
    fn shelling_condition() {
        let order: Vec<u64> = [vec![1, 2, 3], vec![2, 3, 4], vec![3, 4, 5]].iter().map(|f| set_to_mask(f)).collect();
        assert!(is_shelling(&order));
        let bad: Vec<u64> = [vec![1, 2, 3], vec![3, 4, 5], vec![2, 3, 4]].iter().map(|f| set_to_mask(f)).collect();
        assert!(!is_shelling(&bad));
    }

    #[test]
    fn json_round_trip() {
        let d = SimplicialComplex::from_json(r#"{"n": 4, "facets": [[3,4],[1,2,3]]}"#).unwrap();
        assert_eq!(d.facet_sets(), vec![vec![1, 2, 3], vec![3, 4]]);
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(SimplicialComplex::from_json(&s).unwrap(), d);
        assert!(SimplicialComplex::from_json(r#"{"n": 2, "facets": [[3]]}"#).is_err());
    }
}
