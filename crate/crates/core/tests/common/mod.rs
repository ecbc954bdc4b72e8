#![allow(dead_code)]

use boolspace::{Algebra, BMatrix, BVec, Elem, VecSet};
use proptest::prelude::*;

pub fn p(k: usize) -> Algebra {
    Algebra::with_atoms(k).unwrap()
}

pub fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub fn elem_from_bits(alg: &Algebra, bits: &[bool]) -> Elem {
    alg.from_atom_indices(bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i))
        .unwrap()
}

/// Atom `t` goes to row `maps[t][j]` of column `j`.
pub fn grid(alg: &Algebra, n: usize, maps: &[Vec<usize>]) -> BMatrix {
    let cols = maps.first().map_or(0, Vec::len);
    let rows = (0..n)
        .map(|i| {
            (0..cols)
                .map(|j| alg.from_atom_indices((0..maps.len()).filter(|&t| maps[t][j] == i)).unwrap())
                .collect()
        })
        .collect();
    BMatrix::from_rows(alg, rows).unwrap()
}

pub fn bits(k: usize, len: usize) -> impl Strategy<Value = Vec<Vec<bool>>> {
    prop::collection::vec(prop::collection::vec(any::<bool>(), k), len)
}

/// `(k, n, bits)` for an arbitrary vector.
pub fn any_vector(max_k: usize, max_n: usize) -> impl Strategy<Value = (usize, usize, Vec<Vec<bool>>)> {
    (1..=max_k, 1..=max_n).prop_flat_map(|(k, n)| (Just(k), Just(n), bits(k, n)))
}

pub fn build_vector(alg: &Algebra, b: &[Vec<bool>]) -> BVec {
    BVec::from_elems(b.iter().map(|x| elem_from_bits(alg, x)).collect()).unwrap()
}

pub fn build_matrix(alg: &Algebra, n: usize, b: &[Vec<bool>]) -> BMatrix {
    let rows = b.chunks(b.len() / n).map(|r| r.iter().map(|x| elem_from_bits(alg, x)).collect()).collect();
    BMatrix::from_rows(alg, rows).unwrap()
}

/// Per-atom site maps for a stochastic `n × n` matrix.
pub fn stochastic_maps(max_k: usize, max_n: usize) -> impl Strategy<Value = (usize, usize, Vec<Vec<usize>>)> {
    (1..=max_k, 1..=max_n).prop_flat_map(|(k, n)| {
        (Just(k), Just(n), prop::collection::vec(prop::collection::vec(0..n, n), k))
    })
}

/// Per-atom permutations for a unitary `n × n` matrix.
pub fn unitary_maps(max_k: usize, max_n: usize) -> impl Strategy<Value = (usize, usize, Vec<Vec<usize>>)> {
    (1..=max_k, 1..=max_n).prop_flat_map(|(k, n)| {
        let perm = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
        (Just(k), Just(n), prop::collection::vec(perm, k))
    })
}

/// Per-atom injections of `m` vectors into `n` coordinates.
pub fn orthonormal_maps(max_k: usize, max_n: usize) -> impl Strategy<Value = (usize, usize, usize, Vec<Vec<usize>>)> {
    (1..=max_k, 1..=max_n)
        .prop_flat_map(|(k, n)| (Just(k), Just(n), 0..=n))
        .prop_flat_map(|(k, n, m)| {
            let inj = Just((0..n).collect::<Vec<usize>>())
                .prop_shuffle()
                .prop_map(move |mut p| {
                    p.truncate(m);
                    p
                });
            (Just(k), Just(n), Just(m), prop::collection::vec(inj, k))
        })
}

pub fn set_from_maps(alg: &Algebra, n: usize, m: usize, maps: &[Vec<usize>]) -> VecSet {
    if m == 0 {
        return VecSet::new(alg, n, vec![]).unwrap();
    }
    grid(alg, n, maps).column_set().unwrap()
}
