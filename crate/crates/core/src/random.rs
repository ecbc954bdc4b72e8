//! Seeded generators for property sweeps.
//!
//! Everything is built atom by atom: a stochastic vector sends each atom to
//! one coordinate, a stochastic matrix gives each atom a map on sites, a
//! unitary a permutation, a symmetric stochastic matrix an involution.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Elem};
use crate::bmatrix::BMatrix;
use crate::bvec::{BVec, VecSet};
use crate::error::{Error, Result};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn elem<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Elem {
    let atoms: Vec<usize> = (0..alg.atom_count()).filter(|_| rng.gen()).collect();
    alg.from_atom_indices(atoms).expect("indices in range")
}

pub fn vector<R: Rng + ?Sized>(alg: &Algebra, n: usize, rng: &mut R) -> Result<BVec> {
    BVec::from_elems((0..n).map(|_| elem(alg, rng)).collect())
}

pub fn matrix<R: Rng + ?Sized>(alg: &Algebra, rows: usize, cols: usize, rng: &mut R) -> Result<BMatrix> {
    let rows = (0..rows)
        .map(|_| (0..cols).map(|_| elem(alg, rng)).collect())
        .collect();
    BMatrix::from_rows(alg, rows)
}

/// Builds an `n × cols` grid where atom `t` sits in row `site[t][j]` of
/// column `j`.
fn from_atom_maps(alg: &Algebra, n: usize, cols: usize, maps: &[Vec<usize>]) -> Result<Vec<Vec<Vec<usize>>>> {
    let mut cells = vec![vec![Vec::new(); cols]; n];
    for (t, map) in maps.iter().enumerate() {
        for (j, &i) in map.iter().enumerate() {
            cells[i][j].push(t);
        }
    }
    if maps.len() != alg.atom_count() {
        return Err(Error::precondition("one map per atom is required"));
    }
    Ok(cells)
}

fn grid(alg: &Algebra, cells: Vec<Vec<Vec<usize>>>) -> Result<BMatrix> {
    let rows = cells
        .into_iter()
        .map(|row| row.into_iter().map(|c| alg.from_atom_indices(c)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    BMatrix::from_rows(alg, rows)
}

fn check_len(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::precondition("length must be at least 1"))
    } else {
        Ok(())
    }
}

pub fn stochastic_vector<R: Rng + ?Sized>(alg: &Algebra, n: usize, rng: &mut R) -> Result<BVec> {
    check_len(n)?;
    let maps: Vec<Vec<usize>> = (0..alg.atom_count()).map(|_| vec![rng.gen_range(0..n)]).collect();
    let m = grid(alg, from_atom_maps(alg, n, 1, &maps)?)?;
    m.column(0)
}

pub fn stochastic_matrix<R: Rng + ?Sized>(alg: &Algebra, n: usize, rng: &mut R) -> Result<BMatrix> {
    check_len(n)?;
    let maps: Vec<Vec<usize>> = (0..alg.atom_count())
        .map(|_| (0..n).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    grid(alg, from_atom_maps(alg, n, n, &maps)?)
}

pub fn unitary<R: Rng + ?Sized>(alg: &Algebra, n: usize, rng: &mut R) -> Result<BMatrix> {
    check_len(n)?;
    let maps: Vec<Vec<usize>> = (0..alg.atom_count())
        .map(|_| {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(rng);
            p
        })
        .collect();
    grid(alg, from_atom_maps(alg, n, n, &maps)?)
}

/// A random involution per atom, with a uniformly chosen number of
/// 2-cycles.
pub fn symmetric_stochastic<R: Rng + ?Sized>(alg: &Algebra, n: usize, rng: &mut R) -> Result<BMatrix> {
    check_len(n)?;
    let maps: Vec<Vec<usize>> = (0..alg.atom_count())
        .map(|_| {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(rng);
            let swaps = rng.gen_range(0..=n / 2);
            let mut p: Vec<usize> = (0..n).collect();
            for pair in order.chunks(2).take(swaps) {
                p[pair[0]] = pair[1];
                p[pair[1]] = pair[0];
            }
            p
        })
        .collect();
    grid(alg, from_atom_maps(alg, n, n, &maps)?)
}

/// `m` mutually orthogonal stochastic vectors in `L_n`: each atom gets an
/// injection of the `m` vectors into the `n` coordinates.
pub fn stochastic_orthonormal_set<R: Rng + ?Sized>(
    alg: &Algebra,
    n: usize,
    m: usize,
    rng: &mut R,
) -> Result<VecSet> {
    check_len(n)?;
    if m > n {
        return Err(Error::precondition(format!("at most {n} orthogonal stochastic vectors fit in L_{n}")));
    }
    let maps: Vec<Vec<usize>> = (0..alg.atom_count())
        .map(|_| {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(rng);
            p.truncate(m);
            p
        })
        .collect();
    let cols = grid(alg, from_atom_maps(alg, n, m, &maps)?)?;
    if m == 0 {
        return VecSet::new(alg, n, vec![]);
    }
    cols.column_set()
}

/// An orthogonal pair of stochastic vectors in `L_n`, `n >= 2`.
pub fn orthogonal_stochastic_pair<R: Rng + ?Sized>(alg: &Algebra, n: usize, rng: &mut R) -> Result<(BVec, BVec)> {
    if n < 2 {
        return Err(Error::precondition("orthogonal stochastic pairs need n >= 2"));
    }
    let mut v = stochastic_orthonormal_set(alg, n, 2, rng)?.into_vectors();
    let b = v.pop().expect("two vectors");
    let a = v.pop().expect("two vectors");
    Ok((a, b))
}
