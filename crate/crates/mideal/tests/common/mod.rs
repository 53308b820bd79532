#![allow(dead_code)]

use mideal::simplicial::SimplicialComplex;
use mideal::{Monomial, MonomialIdeal};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize, size: usize) -> u64 {
    let mut verts: Vec<usize> = (0..n).collect();
    for i in 0..size {
        let j = rng.random_range(i..n);
        verts.swap(i, j);
    }
    verts[..size].iter().fold(0, |m, &v| m | 1 << v)
}

/// Facets of random sizes, possibly not pure.
pub fn random_complex(rng: &mut ChaCha8Rng, max_n: usize) -> SimplicialComplex {
    let n = rng.random_range(1..=max_n);
    let m = rng.random_range(1..=6);
    let facets: Vec<u64> = (0..m)
        .map(|_| {
            let size = rng.random_range(0..=n);
            random_subset(rng, n, size)
        })
        .collect();
    SimplicialComplex::from_masks(n, facets)
}

/// A pure complex whose facets miss at least one vertex of `[n]`.
pub fn random_pure_complex(rng: &mut ChaCha8Rng, max_n: usize) -> SimplicialComplex {
    let n = rng.random_range(2..=max_n);
    let size = rng.random_range(1..n);
    let m = rng.random_range(1..=7);
    let facets: Vec<u64> = (0..m).map(|_| random_subset(rng, n, size)).collect();
    SimplicialComplex::from_masks(n, facets)
}

/// A random monomial ideal generated in degree `d`.
pub fn random_equigenerated(rng: &mut ChaCha8Rng, n: usize, d: u32, count: usize) -> MonomialIdeal {
    let gens: Vec<Monomial> = (0..count).map(|_| random_monomial(rng, n, d)).collect();
    MonomialIdeal::minimalize(n, gens).unwrap()
}

pub fn random_monomial(rng: &mut ChaCha8Rng, n: usize, d: u32) -> Monomial {
    let mut exps = vec![0u32; n];
    for _ in 0..d {
        exps[rng.random_range(0..n)] += 1;
    }
    Monomial::new(exps)
}
