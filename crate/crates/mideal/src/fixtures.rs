//! Named example inputs: small complexes, classical triangulations and the
//! ideals used throughout the tests and examples.

use crate::ideal::MonomialIdeal;
use crate::simplicial::SimplicialComplex;

fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    let f: Vec<Vec<usize>> = facets.iter().map(|x| x.to_vec()).collect();
    SimplicialComplex::from_facets(n, &f).expect("fixture vertices lie in range")
}

fn id(n: usize, gens: &[&str]) -> MonomialIdeal {
    MonomialIdeal::parse(n, gens).expect("fixture generators parse")
}

/// `<{1,2,3},{3,4}>`.
pub fn triangle_with_edge() -> SimplicialComplex {
    cx(4, &[&[1, 2, 3], &[3, 4]])
}

/// `<{1,2,3},{3,4},{1,4}>`, whose Alexander dual is `<{2},{1,3}>`.
pub fn triangle_with_two_edges() -> SimplicialComplex {
    cx(4, &[&[1, 2, 3], &[3, 4], &[1, 4]])
}

/// Three triangles in a strip, `<{1,2,3},{2,3,4},{3,4,5}>`; shellable in
/// the listed order.
pub fn triangle_strip() -> SimplicialComplex {
    cx(5, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]])
}

/// Two disjoint edges.
pub fn two_edges() -> SimplicialComplex {
    cx(4, &[&[1, 2], &[3, 4]])
}

/// Two triangles sharing the edge `{1,3}`.
pub fn two_triangles() -> SimplicialComplex {
    cx(4, &[&[1, 2, 3], &[1, 3, 4]])
}

/// The 4-cycle `<{1,2},{1,3},{2,4},{3,4}>`: vertex-decomposable, not shifted.
pub fn four_cycle() -> SimplicialComplex {
    cx(4, &[&[1, 2], &[1, 3], &[2, 4], &[3, 4]])
}

/// Boundary of a triangle.
pub fn triangle_boundary() -> SimplicialComplex {
    cx(3, &[&[1, 2], &[1, 3], &[2, 3]])
}

/// The 6-vertex triangulation of the real projective plane.
pub fn projective_plane() -> SimplicialComplex {
    cx(
        6,
        &[
            &[1, 2, 3],
            &[1, 3, 4],
            &[1, 4, 5],
            &[1, 5, 6],
            &[1, 2, 6],
            &[2, 3, 5],
            &[3, 4, 6],
            &[2, 4, 5],
            &[3, 5, 6],
            &[2, 4, 6],
        ],
    )
}

const HACHIMORI_1: [[usize; 3]; 14] = [
    [0, 3, 9],
    [2, 3, 9],
    [2, 8, 9],
    [2, 3, 8],
    [0, 3, 8],
    [0, 7, 8],
    [0, 3, 7],
    [2, 3, 7],
    [2, 6, 7],
    [5, 6, 7],
    [5, 7, 8],
    [4, 5, 8],
    [4, 8, 9],
    [0, 4, 9],
];

const HACHIMORI_2: [[usize; 3]; 8] =
    [[0, 1, 4], [1, 2, 4], [2, 4, 5], [1, 2, 5], [0, 1, 5], [0, 5, 6], [0, 1, 6], [1, 2, 6]];

fn shifted(facets: &[[usize; 3]]) -> Vec<Vec<usize>> {
    facets.iter().map(|f| f.iter().map(|v| v + 1).collect()).collect()
}

/// The two shellable halves of Hachimori's constructible, non-shellable
/// 2-complex, vertices `0..9` relabelled `1..10`. Facets are listed in
/// their shelling orders.
pub fn hachimori_parts() -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    (shifted(&HACHIMORI_1), shifted(&HACHIMORI_2))
}

pub fn hachimori() -> SimplicialComplex {
    let (a, b) = hachimori_parts();
    SimplicialComplex::from_facets(10, &[a, b].concat()).expect("fixture")
}

/// The dual Stanley-Reisner ideal of the 8-vertex dunce hat.
pub fn dunce_hat_dual_ideal() -> MonomialIdeal {
    id(
        8,
        &[
            "x3*x5*x6*x7*x8",
            "x3*x4*x5*x6*x8",
            "x3*x4*x5*x6*x7",
            "x2*x5*x6*x7*x8",
            "x2*x4*x6*x7*x8",
            "x2*x4*x5*x7*x8",
            "x2*x3*x4*x7*x8",
            "x2*x3*x4*x5*x6",
            "x1*x4*x6*x7*x8",
            "x1*x4*x5*x6*x8",
            "x1*x4*x5*x6*x7",
            "x1*x3*x6*x7*x8",
            "x1*x2*x5*x6*x7",
            "x1*x2*x4*x5*x8",
            "x1*x2*x3*x7*x8",
            "x1*x2*x3*x5*x7",
            "x1*x2*x3*x4*x5",
        ],
    )
}

/// The dunce hat: facets are the complements of the dual generators.
pub fn dunce_hat() -> SimplicialComplex {
    SimplicialComplex::from_dual_ideal(&dunce_hat_dual_ideal()).expect("squarefree")
}

/// The two halves of Ziegler's constructible, non-shellable 3-ball.
pub fn ziegler_parts() -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let a: &[[usize; 4]] = &[
        [1, 2, 3, 4],
        [1, 2, 4, 9],
        [1, 4, 8, 9],
        [1, 5, 8, 9],
        [1, 4, 5, 8],
        [1, 2, 6, 9],
        [1, 5, 6, 9],
        [1, 2, 5, 6],
        [2, 5, 6, 10],
        [2, 6, 7, 10],
        [1, 2, 5, 10],
        [1, 2, 3, 10],
        [2, 3, 7, 10],
        [2, 3, 6, 7],
    ];
    let b: &[[usize; 4]] = &[[1, 3, 4, 7], [1, 4, 5, 7], [4, 5, 7, 8], [3, 4, 7, 8], [2, 3, 4, 8], [2, 3, 6, 8], [3, 6, 7, 8]];
    (a.iter().map(|f| f.to_vec()).collect(), b.iter().map(|f| f.to_vec()).collect())
}

pub fn ziegler_ball() -> SimplicialComplex {
    let (a, b) = ziegler_parts();
    SimplicialComplex::from_facets(10, &[a, b].concat()).expect("fixture")
}

/// A constructible ideal in degree 6 without linear quotients, its split
/// `I = I_1 + I_2` and `I_1 ∩ I_2`.
pub struct NonSquarefreeExample {
    pub ideal: MonomialIdeal,
    pub first: MonomialIdeal,
    pub second: MonomialIdeal,
    pub intersection: MonomialIdeal,
}

pub fn nonsquarefree_constructible() -> NonSquarefreeExample {
    let first = [
        "x1*x2*x5*x6*x7*x8",
        "x2*x3*x5*x6*x7*x8",
        "x2^2*x3*x5*x6*x7",
        "x2^2*x3*x4*x6*x7",
        "x1*x2^2*x3*x6*x7",
        "x2*x3*x4*x5*x7*x8",
        "x2^2*x3*x4*x7*x8",
        "x1*x2*x3*x4*x7*x8",
        "x1^2*x3*x4*x7*x8",
        "x1^2*x3*x4*x5*x8",
        "x1*x3*x4*x6*x7*x8",
        "x1*x4*x5*x6*x7*x8",
        "x1^2*x4*x5*x6*x8",
        "x1^2*x2*x4*x5*x8",
    ];
    let second = [
        "x1*x2^2*x5*x6*x8",
        "x1*x2^2*x3*x6*x8",
        "x1^2*x2^2*x3*x6",
        "x1^2*x2^2*x5*x6",
        "x1^2*x2*x5*x6*x7",
        "x1^2*x2*x4*x5*x7",
        "x1^2*x2^2*x4*x5",
    ];
    let meet = [
        "x1*x2^2*x5*x6*x7*x8",
        "x1^2*x2*x5*x6*x7*x8",
        "x1^2*x2*x4*x5*x7*x8",
        "x1^2*x2^2*x4*x5*x8",
        "x1*x2^2*x3*x6*x7*x8",
        "x1^2*x2^2*x3*x6*x7",
    ];
    let all: Vec<&str> = first.iter().chain(second.iter()).copied().collect();
    NonSquarefreeExample { ideal: id(8, &all), first: id(8, &first), second: id(8, &second), intersection: id(8, &meet) }
}

/// `(x1^2, x1 x2^2, x1 x2 x3, x2^3)`, a stable ideal.
pub fn stable_example() -> MonomialIdeal {
    id(3, &["x1^2", "x1*x2^2", "x1*x2*x3", "x2^3"])
}

/// The sequence `x1^2, x1 x2 x3, x3^3`.
pub fn koszul_example() -> (usize, Vec<crate::monomial::Monomial>) {
    let g = ["x1^2", "x1*x2*x3", "x3^3"]
        .iter()
        .map(|s| crate::monomial::Monomial::parse(s, 3).expect("fixture"))
        .collect();
    (3, g)
}

/// `(x1 x2, x2 x3 x4, x2 x3^2)`, which has regular linear quotients.
pub fn mapping_cone_example() -> MonomialIdeal {
    id(4, &["x1*x2", "x2*x3*x4", "x2*x3^2"])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    #[test]
    fn projective_plane_homology() {
        let h = projective_plane().homology(Field::Rational).unwrap();
        assert_eq!((h.get(0), h.get(1), h.get(2)), (0, 0, 0));
        let h = projective_plane().homology(Field::Prime(2)).unwrap();
        assert_eq!((h.get(1), h.get(2)), (1, 1));
    }

    #[test]
    fn fixture_sizes() {
        assert_eq!(hachimori().facets().len(), 22);
        assert_eq!(ziegler_ball().facets().len(), 21);
        assert_eq!(dunce_hat().facets().len(), 17);
        assert_eq!(nonsquarefree_constructible().ideal.len(), 21);
    }

    #[test]
    fn dunce_hat_is_contractible() {
        let h = dunce_hat().homology(Field::Rational).unwrap();
        assert!(h.reduced_betti.iter().all(|&b| b == 0));
    }
}
