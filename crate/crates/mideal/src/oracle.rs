//! Brute-force graded Betti numbers, projective dimension, depth and
//! Hilbert function counts. Nothing here uses the closed formulas of the
//! other modules, so it serves as the independent baseline for them.
//!
//! Betti numbers are read off multidegree by multidegree. Only degrees in
//! the lcm lattice of `G(I)` can carry Betti numbers. For such an `m` two
//! equivalent computations are available:
//!
//! * the `m`-strand of the Taylor complex tensored with the field, whose
//!   cells are the sets of generators with lcm exactly `m`; this is what
//!   cancelling every unit entry of the Taylor complex leaves behind;
//! * the upper Koszul simplicial complex `K^m = {J ⊆ supp(m) : m / x_J ∈ I}`,
//!   with `beta_{i,m} = dim H~_{i-1}(K^m)`.
//!
//! The second one has at most `2^n` faces, which keeps ideals with many
//! generators in few variables tractable.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::ideal::{mask_to_set, MonomialIdeal};
use crate::linalg::{CellComplex, Field};
use crate::monomial::{count_of_degree, monomials_of_degree, Monomial};

/// How each multidegree strand is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Whichever complex has fewer candidate cells, the Taylor strand only
    /// up to `2^12` of them.
    Auto,
    Taylor,
    UpperKoszul,
}

/// Largest number of generators dividing `m` for which the Taylor strand is
/// enumerated under [`Strategy::Auto`].
pub const TAYLOR_AUTO_LIMIT: usize = 12;
/// Hard limit for the Taylor strand.
pub const TAYLOR_LIMIT: usize = 24;
/// Hard limit on `|supp(m)|` for the upper Koszul complex.
pub const KOSZUL_LIMIT: usize = 24;
/// Hard limit on the size of the lcm lattice.
pub const LATTICE_LIMIT: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleBettiTable {
    pub field: Field,
    pub betti: BettiTable,
    /// Projective dimension of `I`.
    pub projdim: usize,
    /// Whether all `beta_{i,j}` vanish off `j = i + d`, `d` the common
    /// generator degree. Always false for mixed degrees.
    pub linear: bool,
}

/// All lcms of nonempty subsets of `G(I)`.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    let gens = ideal.gens();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = gens.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in gens {
                let l = a.lcm(g);
                if !seen.contains(&l) {
                    seen.insert(l.clone());
                    next.push(l);
                }
            }
        }
        if seen.len() > LATTICE_LIMIT {
            return Err(Error::Budget(format!("lcm lattice exceeds {LATTICE_LIMIT} elements")));
        }
        frontier = next;
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    Ok(out)
}

/// The `m`-strand of the Taylor complex: sets of generator indices whose
/// lcm is exactly `m`, as bitmasks over the generators dividing `m`.
pub fn taylor_strand(ideal: &MonomialIdeal, m: &Monomial) -> Result<CellComplex> {
    let below: Vec<&Monomial> = ideal.gens().iter().filter(|g| g.divides(m)).collect();
    if below.len() > TAYLOR_LIMIT {
        return Err(Error::Budget(format!("Taylor strand over {} generators", below.len())));
    }
    let mut cells = Vec::new();
    for mask in 1u64..(1u64 << below.len()) {
        let mut l = Monomial::one(ideal.n());
        for k in mask_to_set(mask) {
            l = l.lcm(below[k - 1]);
        }
        if &l == m {
            cells.push(mask);
        }
    }
    Ok(CellComplex::from_cells(cells))
}

/// The upper Koszul complex `K^m`, faces as bitmasks over `supp(m)`.
pub fn upper_koszul(ideal: &MonomialIdeal, m: &Monomial) -> Result<CellComplex> {
    let supp = m.support();
    if supp.len() > KOSZUL_LIMIT {
        return Err(Error::Budget(format!("upper Koszul complex on {} vertices", supp.len())));
    }
    let mut faces = Vec::new();
    for mask in 0u64..(1u64 << supp.len()) {
        let mut e = m.exponents().to_vec();
        for k in mask_to_set(mask) {
            e[supp[k - 1] - 1] -= 1;
        }
        if ideal.contains(&Monomial::new(e)) {
            faces.push(mask);
        }
    }
    Ok(CellComplex::from_cells(faces))
}

/// `(i, beta_{i,m})` for one multidegree.
pub fn strand_betti(ideal: &MonomialIdeal, m: &Monomial, field: Field, strategy: Strategy) -> Result<Vec<(usize, u64)>> {
    let use_taylor = match strategy {
        Strategy::Taylor => true,
        Strategy::UpperKoszul => false,
        Strategy::Auto => {
            let k = ideal.gens().iter().filter(|g| g.divides(m)).count();
            k <= TAYLOR_AUTO_LIMIT && k < m.support().len()
        }
    };
    let mut out = Vec::new();
    if use_taylor {
        // cells of cardinality s sit in homological degree s - 1
        let h = taylor_strand(ideal, m)?.homology(field);
        for (s, &b) in h.iter().enumerate() {
            if b > 0 {
                out.push((s - 1, b));
            }
        }
    } else {
        // h[s] = dim H~_{s-1}(K^m) = beta_{s,m}
        let h = upper_koszul(ideal, m)?.homology(field);
        for (s, &b) in h.iter().enumerate() {
            if b > 0 {
                out.push((s, b));
            }
        }
    }
    Ok(out)
}

/// Multigraded Betti numbers `beta_{i,m}(I)`, keyed by `(i, m)`.
pub fn multigraded_betti(ideal: &MonomialIdeal, field: Field, strategy: Strategy) -> Result<BTreeMap<(usize, Monomial), u64>> {
    let lattice = lcm_lattice(ideal)?;
    let per: Vec<Result<Vec<(usize, u64)>>> =
        lattice.par_iter().map(|m| strand_betti(ideal, m, field, strategy)).collect();
    let mut out = BTreeMap::new();
    for (m, r) in lattice.iter().zip(per) {
        for (i, b) in r? {
            out.insert((i, m.clone()), b);
        }
    }
    Ok(out)
}

pub fn betti_numbers_with(ideal: &MonomialIdeal, field: Field, strategy: Strategy) -> Result<OracleBettiTable> {
    let mut betti = BettiTable::new();
    for ((i, m), b) in multigraded_betti(ideal, field, strategy)? {
        betti.add(i, m.degree(), b);
    }
    let projdim = betti.projdim().unwrap_or(0);
    let linear = ideal.generation_degree().is_some_and(|d| betti.is_linear(d));
    Ok(OracleBettiTable { field, betti, projdim, linear })
}

/// Graded Betti numbers of `I` over `field`.
pub fn betti_numbers(ideal: &MonomialIdeal, field: Field) -> Result<OracleBettiTable> {
    betti_numbers_with(ideal, field, Strategy::Auto)
}

/// `(depth S/I, projdim S/I)`, with `projdim S/I = projdim I + 1`.
pub fn depth_and_projdim(ideal: &MonomialIdeal, field: Field) -> Result<(usize, usize)> {
    let pd = betti_numbers(ideal, field)?.projdim + 1;
    Ok((ideal.n() - pd, pd))
}

/// Largest number of monomials [`hilbert_count`] will enumerate.
pub const HILBERT_LIMIT: u128 = 10_000_000;

/// Number of monomials of degree `k` lying in `I`.
pub fn hilbert_count(ideal: &MonomialIdeal, k: u32) -> Result<u128> {
    let total = count_of_degree(ideal.n(), k);
    if total > HILBERT_LIMIT {
        return Err(Error::Budget(format!("{total} monomials of degree {k}")));
    }
    Ok(monomials_of_degree(ideal.n(), k).iter().filter(|w| ideal.contains(w)).count() as u128)
}
