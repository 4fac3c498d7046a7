//! Named complexes and seeded random complexes.
//!
//! The random generator mixes unstructured facet lists with pure complexes
//! and sphere-like constructions (cycles, joins of 0-spheres, cones, balls)
//! so that a few thousand draws cover Cohen-Macaulay, Gorenstein* and
//! non-CM complexes in useful proportions.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::SimplicialComplex;

/// The 6-vertex, 10-facet triangulation of the real projective plane.
pub fn rp2_6() -> SimplicialComplex {
    SimplicialComplex::from_facets([
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 2, 6],
        [2, 3, 5],
        [2, 4, 5],
        [2, 4, 6],
        [3, 4, 6],
        [3, 5, 6],
    ])
}

pub fn hollow_triangle() -> SimplicialComplex {
    SimplicialComplex::simplex_boundary(2)
}

/// The `n`-cycle on vertices `1..=n` (`n >= 3`).
pub fn cycle(n: usize) -> SimplicialComplex {
    let n = n as i64;
    SimplicialComplex::from_facets((1..=n).map(|i| [i, i % n + 1]))
}

/// Boundary of the `k`-dimensional cross-polytope: the join of `k` copies of `S⁰`.
pub fn cross_polytope_boundary(k: usize) -> SimplicialComplex {
    let mut c = SimplicialComplex::empty();
    for i in 0..k as i64 {
        let s0 = SimplicialComplex::from_facets([[2 * i + 1], [2 * i + 2]]);
        c = c.join(&s0).expect("disjoint labels");
    }
    c
}

pub fn two_disjoint_edges() -> SimplicialComplex {
    SimplicialComplex::from_facets([[1, 2], [3, 4]])
}

/// A random complex on at most `max_vertices` vertices.
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R, max_vertices: usize) -> SimplicialComplex {
    let max_vertices = max_vertices.max(1);
    let c = match rng.gen_range(0..10) {
        0..=3 => random_facets(rng, max_vertices),
        4..=6 => random_pure(rng, max_vertices),
        _ => random_structured(rng, max_vertices),
    };
    shuffle_labels(rng, &c)
}

fn random_facets<R: Rng + ?Sized>(rng: &mut R, max_vertices: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices);
    let count = rng.gen_range(1..=2 * n);
    SimplicialComplex::from_facets((0..count).map(|_| {
        let size = rng.gen_range(1..=n);
        random_subset(rng, n, size)
    }))
}

fn random_pure<R: Rng + ?Sized>(rng: &mut R, max_vertices: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices);
    let size = rng.gen_range(1..=n);
    let count = rng.gen_range(1..=2 * n);
    SimplicialComplex::from_facets((0..count).map(|_| random_subset(rng, n, size)))
}

fn random_structured<R: Rng + ?Sized>(rng: &mut R, max_vertices: usize) -> SimplicialComplex {
    let mut candidates: Vec<SimplicialComplex> = Vec::new();
    for n in 1..max_vertices {
        candidates.push(SimplicialComplex::simplex_boundary(n));
        candidates.push(SimplicialComplex::simplex(n));
    }
    for n in 3..=max_vertices {
        candidates.push(cycle(n));
    }
    for k in 1..=max_vertices / 2 {
        candidates.push(cross_polytope_boundary(k));
    }
    if max_vertices >= 6 {
        candidates.push(rp2_6());
    }
    if max_vertices >= 4 {
        candidates.push(two_disjoint_edges());
    }
    let base = candidates.choose(rng).expect("nonempty").clone();
    let top = base.num_vertices() as i64;
    match rng.gen_range(0..4) {
        // cone
        0 if (top as usize) < max_vertices => base.cone(top + 1).expect("fresh apex"),
        // drop a facet (a ball, for spheres)
        1 if base.facets().len() > 1 => {
            let mut facets = base.facet_labels();
            facets.remove(rng.gen_range(0..facets.len()));
            SimplicialComplex::from_facets(facets)
        }
        // suspension
        2 if (top as usize) + 2 <= max_vertices => {
            let s0 = SimplicialComplex::from_facets([[top + 1], [top + 2]]);
            base.join(&s0).expect("fresh labels")
        }
        _ => base,
    }
}

fn random_subset<R: Rng + ?Sized>(rng: &mut R, n: usize, size: usize) -> Vec<i64> {
    let mut all: Vec<i64> = (1..=n as i64).collect();
    all.shuffle(rng);
    all.truncate(size);
    all
}

fn shuffle_labels<R: Rng + ?Sized>(rng: &mut R, c: &SimplicialComplex) -> SimplicialComplex {
    let mut perm: Vec<usize> = (0..c.num_vertices()).collect();
    perm.shuffle(rng);
    let vertices = c.vertices().to_vec();
    c.relabel(|l| {
        let i = vertices.binary_search(l).expect("own vertex");
        crate::label::Label::Int(perm[i] as i64 + 1)
    })
    .expect("permutation is injective")
}

/// `count` seeded random complexes on at most `max_vertices` vertices.
pub fn random_corpus(seed: u64, count: usize, max_vertices: usize) -> Vec<SimplicialComplex> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_complex(&mut rng, max_vertices)).collect()
}
