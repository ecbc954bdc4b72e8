//! Boolean matrices as linear maps on `L_n(B)`.
//!
//! The product is join-of-meets, `(AB)_ij = ∨_p a_ip b_pj`. Stochastic
//! matrices have stochastic columns; unitary matrices are exactly the
//! invertible ones, with inverse the adjoint (transpose). Unitary matrices
//! with (joint) trace one reduce by a symmetric stochastic conjugator to
//! `diag(1, C)`.

use std::fmt;

use crate::algebra::{Algebra, Elem};
use crate::bvec::{BVec, VecSet};
use crate::error::{Error, Result};
use crate::words;

/// An `rows × cols` grid of elements over one algebra. Dimensions may be
/// zero only for the empty core left by a complete reduction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BMatrix {
    algebra: Algebra,
    rows: usize,
    cols: usize,
    words: Vec<u64>,
}

impl BMatrix {
    pub fn zeros(algebra: &Algebra, rows: usize, cols: usize) -> Self {
        BMatrix {
            algebra: algebra.clone(),
            rows,
            cols,
            words: vec![0; rows * cols * algebra.words_per_elem()],
        }
    }

    /// The Kronecker-delta matrix over `{0, 1}`.
    pub fn identity(algebra: &Algebra, n: usize) -> Self {
        let mut m = Self::zeros(algebra, n, n);
        for i in 0..n {
            m.entry_mut(i, i).copy_from_slice(algebra.full_words());
        }
        m
    }

    /// Builds a matrix from row-major entries; every row must have the same
    /// length and every entry must come from `algebra`.
    pub fn from_rows(algebra: &Algebra, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(algebra, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::shape(format!(
                    "row {} has {} entries, expected {cols}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, e) in row.iter().enumerate() {
                algebra.check_same(e.algebra())?;
                m.entry_mut(i, j).copy_from_slice(e.words());
            }
        }
        Ok(m)
    }

    /// The `n × m` matrix whose columns are the members of `set`.
    pub fn from_columns(set: &VecSet) -> Self {
        let alg = set.algebra();
        let mut m = Self::zeros(alg, set.dim(), set.len());
        for (j, v) in set.iter().enumerate() {
            for i in 0..set.dim() {
                m.entry_mut(i, j).copy_from_slice(v.entry(i));
            }
        }
        m
    }

    /// Parses whitespace-separated element literals, one line per row.
    pub fn parse_rows(algebra: &Algebra, text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let mut row = Vec::new();
            let mut rest = line;
            while !rest.trim().is_empty() {
                let (e, used) = algebra.parse_elem_prefix(rest)?;
                row.push(e);
                rest = &rest[used..];
            }
            rows.push(row);
        }
        Self::from_rows(algebra, rows)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub(crate) fn entry(&self, i: usize, j: usize) -> &[u64] {
        let w = self.algebra.words_per_elem();
        let at = (i * self.cols + j) * w;
        &self.words[at..at + w]
    }

    #[inline]
    pub(crate) fn entry_mut(&mut self, i: usize, j: usize) -> &mut [u64] {
        let w = self.algebra.words_per_elem();
        let at = (i * self.cols + j) * w;
        &mut self.words[at..at + w]
    }

    pub(crate) fn raw(&self) -> &[u64] {
        &self.words
    }

    /// Entry `(i, j)`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.algebra.elem_from_slice(self.entry(i, j))
    }

    pub fn row(&self, i: usize) -> Result<BVec> {
        let w = self.algebra.words_per_elem();
        if i >= self.rows || self.cols == 0 {
            return Err(Error::shape(format!("no row {i} in a {}x{} matrix", self.rows, self.cols)));
        }
        let start = i * self.cols * w;
        Ok(BVec::from_words(
            &self.algebra,
            self.cols,
            self.words[start..start + self.cols * w].to_vec(),
        ))
    }

    pub fn column(&self, j: usize) -> Result<BVec> {
        if j >= self.cols || self.rows == 0 {
            return Err(Error::shape(format!(
                "no column {j} in a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut words = Vec::with_capacity(self.rows * self.algebra.words_per_elem());
        for i in 0..self.rows {
            words.extend_from_slice(self.entry(i, j));
        }
        Ok(BVec::from_words(&self.algebra, self.rows, words))
    }

    /// The columns as a family in `L_rows`.
    pub fn column_set(&self) -> Result<VecSet> {
        let cols = (0..self.cols).map(|j| self.column(j)).collect::<Result<Vec<_>>>()?;
        VecSet::new(&self.algebra, self.rows, cols)
    }

    /// The rows as a family in `L_cols`.
    pub fn row_set(&self) -> Result<VecSet> {
        let rows = (0..self.rows).map(|i| self.row(i)).collect::<Result<Vec<_>>>()?;
        VecSet::new(&self.algebra, self.cols, rows)
    }

    /// Join-of-meets product `AB`.
    pub fn mul(&self, other: &BMatrix) -> Result<BMatrix> {
        self.algebra.check_same(&other.algebra)?;
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let w = self.algebra.words_per_elem();
        let (n, m, k) = (self.rows, self.cols, other.cols);
        let bt = other.adjoint();
        let mut out = BMatrix::zeros(&self.algebra, n, k);
        if w == 1 {
            for i in 0..n {
                let arow = &self.words[i * m..(i + 1) * m];
                let orow = &mut out.words[i * k..(i + 1) * k];
                for (j, o) in orow.iter_mut().enumerate() {
                    let bcol = &bt.words[j * m..(j + 1) * m];
                    *o = arow.iter().zip(bcol).fold(0, |acc, (x, y)| acc | (x & y));
                }
            }
        } else {
            for i in 0..n {
                for j in 0..k {
                    let at = (i * k + j) * w;
                    let dst = &mut out.words[at..at + w];
                    for p in 0..m {
                        words::or_and_assign(dst, self.entry(i, p), bt.entry(j, p));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `A v` with `v` an `n × 1` column.
    pub fn apply(&self, v: &BVec) -> Result<BVec> {
        self.algebra.check_same(v.algebra())?;
        if self.cols != v.len() || self.rows == 0 {
            return Err(Error::shape(format!(
                "cannot apply a {}x{} matrix to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let w = self.algebra.words_per_elem();
        let mut words = vec![0; self.rows * w];
        for i in 0..self.rows {
            let dst = &mut words[i * w..(i + 1) * w];
            for j in 0..self.cols {
                words::or_and_assign(dst, self.entry(i, j), v.entry(j));
            }
        }
        Ok(BVec::from_words(&self.algebra, self.rows, words))
    }

    /// The transpose `A*`.
    pub fn adjoint(&self) -> BMatrix {
        let mut out = BMatrix::zeros(&self.algebra, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entry_mut(j, i).copy_from_slice(self.entry(i, j));
            }
        }
        out
    }

    /// Entrywise order `a_ij <= b_ij`.
    pub fn leq(&self, other: &BMatrix) -> Result<bool> {
        self.check_same_shape(other)?;
        Ok(words::subset(&self.words, &other.words))
    }

    fn check_same_shape(&self, other: &BMatrix) -> Result<()> {
        self.algebra.check_same(&other.algebra)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::shape(format!(
                "shapes differ: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    fn check_square(&self, what: &str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::shape(format!(
                "{what} needs a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    fn columns_stochastic(&self) -> bool {
        let w = self.algebra.words_per_elem();
        let mut seen = vec![0u64; w];
        for j in 0..self.cols {
            seen.iter_mut().for_each(|x| *x = 0);
            for i in 0..self.rows {
                let e = self.entry(i, j);
                if !words::disjoint(&seen, e) {
                    return false;
                }
                words::or_assign(&mut seen, e);
            }
            if seen[..] != self.algebra.full_words()[..] {
                return false;
            }
        }
        true
    }

    /// Every column is a stochastic vector.
    pub fn is_stochastic(&self) -> Result<bool> {
        self.check_square("stochasticity")?;
        Ok(self.rows > 0 && self.columns_stochastic())
    }

    /// The defining form `A*A >= I` and `AA* <= I`.
    pub fn satisfies_stochastic_definition(&self) -> Result<bool> {
        self.check_square("stochasticity")?;
        let id = BMatrix::identity(&self.algebra, self.rows);
        let ata = self.adjoint().mul(self)?;
        let aat = self.mul(&self.adjoint())?;
        Ok(id.leq(&ata)? && aat.leq(&id)?)
    }

    /// Bistochastic: both `A` and `A*` have stochastic columns.
    pub fn is_unitary(&self) -> bool {
        self.is_square() && self.rows > 0 && self.columns_stochastic() && self.adjoint().columns_stochastic()
    }

    /// The inverse of a unitary matrix, which is its adjoint.
    pub fn invert(&self) -> Result<BMatrix> {
        if !self.is_unitary() {
            return Err(Error::NotInvertible);
        }
        Ok(self.adjoint())
    }

    /// `tr(A) = ∨_i a_ii`.
    pub fn trace(&self) -> Result<Elem> {
        joint_trace(std::slice::from_ref(self))
    }

    /// `A^e` by repeated squaring, `A^0 = I`.
    pub fn power(&self, mut e: u64) -> Result<BMatrix> {
        self.check_square("power")?;
        let mut result = BMatrix::identity(&self.algebra, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// `diag(I_m, C)`.
    pub fn block_identity(m: usize, core: &BMatrix) -> Result<BMatrix> {
        core.check_square("block diagonal")?;
        let n = m + core.rows;
        let mut out = BMatrix::identity(&core.algebra, n);
        for i in 0..core.rows {
            for j in 0..core.cols {
                out.entry_mut(m + i, m + j).copy_from_slice(core.entry(i, j));
            }
        }
        Ok(out)
    }

    /// The lower-right block obtained by deleting the first `m` rows and
    /// columns.
    pub fn trailing(&self, m: usize) -> BMatrix {
        let (r, c) = (self.rows.saturating_sub(m), self.cols.saturating_sub(m));
        let mut out = BMatrix::zeros(&self.algebra, r, c);
        for i in 0..r {
            for j in 0..c {
                out.entry_mut(i, j).copy_from_slice(self.entry(m + i, m + j));
            }
        }
        out
    }

    /// Whether the first row and column are `(1, 0, ..., 0)`.
    pub fn fixes_first_axis(&self) -> bool {
        if self.rows == 0 || self.cols == 0 {
            return false;
        }
        self.entry(0, 0) == self.algebra.full_words()
            && (1..self.cols).all(|j| words::is_zero(self.entry(0, j)))
            && (1..self.rows).all(|i| words::is_zero(self.entry(i, 0)))
    }
}

impl fmt::Display for BMatrix {
    /// Rows on separate lines, entries padded into aligned columns.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
            .collect();
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect();
            f.write_str(line.join(" ").trim_end())?;
        }
        Ok(())
    }
}

impl fmt::Debug for BMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            f.write_str(if i == 0 { "[" } else { ", [" })?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

fn check_family(ms: &[BMatrix]) -> Result<(&Algebra, usize)> {
    let first = ms
        .first()
        .ok_or_else(|| Error::precondition("at least one matrix is required"))?;
    first.check_square("trace")?;
    for m in ms {
        first.check_same_shape(m)?;
    }
    Ok((&first.algebra, first.rows))
}

/// `tr(A_1, ..., A_m) = ∨_i a¹_ii ... aᵐ_ii`.
pub fn joint_trace(ms: &[BMatrix]) -> Result<Elem> {
    let (alg, n) = check_family(ms)?;
    let mut acc = alg.zero().words().to_vec();
    for d in diagonal_meets(ms, n).iter() {
        words::or_assign(&mut acc, d);
    }
    Ok(alg.elem_from_slice(&acc))
}

fn diagonal_meets(ms: &[BMatrix], n: usize) -> Vec<Vec<u64>> {
    (0..n)
        .map(|i| {
            let mut d = ms[0].entry(i, i).to_vec();
            for m in &ms[1..] {
                d.iter_mut().zip(m.entry(i, i)).for_each(|(x, y)| *x &= y);
            }
            d
        })
        .collect()
}

/// A common invariant stochastic vector of stochastic matrices, if one
/// exists (exactly when the joint trace is one).
///
/// The vector returned is the greedy disjointification of the vector of
/// diagonal meets, taken in index order.
pub fn find_invariant_stochastic(ms: &[BMatrix]) -> Result<Option<BVec>> {
    let (alg, n) = check_family(ms)?;
    for m in ms {
        if !m.is_stochastic()? {
            return Err(Error::precondition("invariant vectors are defined for stochastic matrices"));
        }
    }
    let diag = diagonal_meets(ms, n).concat();
    let d = BVec::from_words(alg, n, diag);
    if !d.is_unit() {
        return Ok(None);
    }
    let b = d.disjointify()?;
    debug_assert!(ms.iter().all(|m| m.apply(&b).as_ref() == Ok(&b)));
    Ok(Some(b))
}

/// The symmetric stochastic matrix with first row and column `b`, diagonal
/// `b_i^c` for `i >= 2`, and zero elsewhere. It squares to the identity.
pub fn reflection_from(b: &BVec) -> Result<BMatrix> {
    if !b.is_stochastic() {
        return Err(Error::precondition("reflections are built from stochastic vectors"));
    }
    let alg = b.algebra();
    let n = b.len();
    let mut m = BMatrix::zeros(alg, n, n);
    m.entry_mut(0, 0).copy_from_slice(b.entry(0));
    for i in 1..n {
        m.entry_mut(0, i).copy_from_slice(b.entry(i));
        m.entry_mut(i, 0).copy_from_slice(b.entry(i));
        words::complement_into(m.entry_mut(i, i), b.entry(i), alg.full_words());
    }
    Ok(m)
}

/// `A = conjugator · diag(I_m, core) · conjugator*` with `m = fixed_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub conjugator: BMatrix,
    pub core: BMatrix,
    pub fixed_count: usize,
}

impl Reduction {
    /// Rebuilds the reduced matrix.
    pub fn reconstruct(&self) -> Result<BMatrix> {
        let block = BMatrix::block_identity(self.fixed_count, &self.core)?;
        self.conjugator.mul(&block)?.mul(&self.conjugator.adjoint())
    }
}

fn block_reduce(b: &BMatrix, a: &BMatrix) -> Result<BMatrix> {
    let d = b.mul(a)?.mul(b)?;
    assert!(
        d.fixes_first_axis(),
        "conjugation by an invariant reflection must fix the first axis; got {d:?}"
    );
    Ok(d)
}

/// Simultaneous reduction of unitary matrices with joint trace one.
///
/// Returns `None` when the joint trace is not one. Every reduction shares
/// the same symmetric conjugator.
pub fn reduce_unitary(ms: &[BMatrix]) -> Result<Option<Vec<Reduction>>> {
    check_family(ms)?;
    if let Some(bad) = ms.iter().position(|m| !m.is_unitary()) {
        return Err(Error::precondition(format!(
            "matrix #{} is not unitary; trace one does not imply reducibility for stochastic matrices",
            bad + 1
        )));
    }
    let b = match find_invariant_stochastic(ms)? {
        Some(b) => b,
        None => return Ok(None),
    };
    let conj = reflection_from(&b)?;
    ms.iter()
        .map(|a| {
            let d = block_reduce(&conj, a)?;
            Ok(Reduction {
                conjugator: conj.clone(),
                core: d.trailing(1),
                fixed_count: 1,
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

/// Repeats the single-step reduction on the core while its trace is one.
/// The final core has trace other than one, or is empty.
pub fn reduce_fully(a: &BMatrix) -> Result<Reduction> {
    if !a.is_unitary() {
        return Err(Error::precondition("reduction needs a unitary matrix"));
    }
    let mut red = Reduction {
        conjugator: BMatrix::identity(&a.algebra, a.rows),
        core: a.clone(),
        fixed_count: 0,
    };
    while red.core.rows > 0 {
        let step = match reduce_unitary(std::slice::from_ref(&red.core))? {
            Some(mut v) => v.remove(0),
            None => break,
        };
        red.conjugator = red
            .conjugator
            .mul(&BMatrix::block_identity(red.fixed_count, &step.conjugator)?)?;
        red.core = step.core;
        red.fixed_count += 1;
    }
    Ok(red)
}

/// Reduction of a unitary matrix by an invariant orthogonal set of
/// stochastic vectors, one reflection per vector.
///
/// After each step the remaining vectors are carried into the new core's
/// coordinates by `v ↦ (B v)_{2..}`, where `B` is the step's reflection.
pub fn reduce_by_orthogonal_set(a: &BMatrix, set: &VecSet) -> Result<Reduction> {
    if !a.is_unitary() {
        return Err(Error::precondition("reduction needs a unitary matrix"));
    }
    a.algebra.check_same(set.algebra())?;
    if set.dim() != a.rows {
        return Err(Error::shape(format!(
            "vectors of length {} for a {}x{} matrix",
            set.dim(),
            a.rows,
            a.cols
        )));
    }
    if !set.is_stochastic() {
        return Err(Error::precondition("invariant set must consist of stochastic vectors"));
    }
    if !set.is_orthonormal() {
        return Err(Error::precondition("invariant set must be mutually orthogonal"));
    }
    for (i, v) in set.iter().enumerate() {
        if a.apply(v)? != *v {
            return Err(Error::precondition(format!("vector #{} is not invariant", i + 1)));
        }
    }

    let alg = a.algebra.clone();
    let n = a.rows;
    let mut conj = BMatrix::identity(&alg, n);
    let mut core = a.clone();
    let mut pending: Vec<BVec> = set.vectors().to_vec();
    let mut fixed = 0;
    while !pending.is_empty() {
        let b = pending.remove(0);
        let refl = reflection_from(&b)?;
        let d = block_reduce(&refl, &core)?;
        conj = conj.mul(&BMatrix::block_identity(fixed, &refl)?)?;
        core = d.trailing(1);
        fixed += 1;
        pending = pending
            .iter()
            .map(|v| {
                let moved = refl.apply(v)?;
                debug_assert!(moved.get(0).is_zero());
                BVec::from_elems(moved.entries()[1..].to_vec())
            })
            .collect::<Result<Vec<_>>>()?;
    }
    let red = Reduction {
        conjugator: conj,
        core,
        fixed_count: fixed,
    };
    debug_assert_eq!(red.reconstruct().as_ref(), Ok(a));
    Ok(red)
}
