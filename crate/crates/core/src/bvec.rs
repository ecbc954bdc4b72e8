//! The Boolean linear space `L_n(B)`.
//!
//! Vectors add by componentwise join and scale by componentwise meet. The
//! inner product `<a,b> = ∨ a_i b_i` is `B`-valued, and orthonormal bases are
//! exactly the stochastic orthonormal sets of cardinality `n`.

use std::fmt;

use crate::algebra::{syntax, Algebra, Elem};
use crate::error::{Error, Result};
use crate::words;

/// An element of `L_n(B)`, `n >= 1`, read as a column vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BVec {
    algebra: Algebra,
    len: usize,
    words: Vec<u64>,
}

impl BVec {
    pub fn from_elems(entries: Vec<Elem>) -> Result<Self> {
        let first = entries
            .first()
            .ok_or_else(|| Error::shape("vectors must have at least one entry"))?;
        let algebra = first.algebra().clone();
        let mut words = Vec::with_capacity(entries.len() * algebra.words_per_elem());
        for e in &entries {
            algebra.check_same(e.algebra())?;
            words.extend_from_slice(e.words());
        }
        Ok(BVec {
            algebra,
            len: entries.len(),
            words,
        })
    }

    pub fn zero(algebra: &Algebra, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::shape("vectors must have at least one entry"));
        }
        Ok(BVec {
            algebra: algebra.clone(),
            len: n,
            words: vec![0; n * algebra.words_per_elem()],
        })
    }

    /// The canonical basis vector `δ_i` (0-based `i`).
    pub fn delta(algebra: &Algebra, n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::shape(format!("delta index {i} out of range for length {n}")));
        }
        let mut v = Self::zero(algebra, n)?;
        v.entry_mut(i).copy_from_slice(algebra.full_words());
        Ok(v)
    }

    /// The all-one vector `(1, ..., 1)`.
    pub fn ones(algebra: &Algebra, n: usize) -> Result<Self> {
        let mut v = Self::zero(algebra, n)?;
        for i in 0..n {
            v.entry_mut(i).copy_from_slice(algebra.full_words());
        }
        Ok(v)
    }

    pub(crate) fn from_words(algebra: &Algebra, len: usize, words: Vec<u64>) -> Self {
        debug_assert!(len >= 1);
        debug_assert_eq!(words.len(), len * algebra.words_per_elem());
        BVec {
            algebra: algebra.clone(),
            len,
            words,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    /// Always false; zero-length vectors cannot be constructed.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub(crate) fn entry(&self, i: usize) -> &[u64] {
        let w = self.algebra.words_per_elem();
        &self.words[i * w..(i + 1) * w]
    }

    pub(crate) fn entry_mut(&mut self, i: usize) -> &mut [u64] {
        let w = self.algebra.words_per_elem();
        &mut self.words[i * w..(i + 1) * w]
    }

    /// Entry `i` (0-based).
    pub fn get(&self, i: usize) -> Elem {
        self.algebra.elem_from_slice(self.entry(i))
    }

    pub fn entries(&self) -> Vec<Elem> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    fn check_compatible(&self, other: &BVec) -> Result<()> {
        self.algebra.check_same(&other.algebra)?;
        if self.len != other.len {
            return Err(Error::shape(format!(
                "vector lengths differ: {} vs {}",
                self.len, other.len
            )));
        }
        Ok(())
    }

    fn zip_with(&self, other: &BVec, f: impl Fn(u64, u64) -> u64) -> Result<BVec> {
        self.check_compatible(other)?;
        let words = self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect();
        Ok(BVec::from_words(&self.algebra, self.len, words))
    }

    /// Componentwise join.
    pub fn add(&self, other: &BVec) -> Result<BVec> {
        self.zip_with(other, |a, b| a | b)
    }

    /// Componentwise meet with a scalar.
    pub fn scalar_mul(&self, c: &Elem) -> Result<BVec> {
        self.algebra.check_same(c.algebra())?;
        let cw = c.words();
        let w = cw.len();
        let words = self.words.iter().enumerate().map(|(t, &x)| x & cw[t % w]).collect();
        Ok(BVec::from_words(&self.algebra, self.len, words))
    }

    /// Componentwise meet, the infimum in the product algebra `B^n`.
    pub fn meet(&self, other: &BVec) -> Result<BVec> {
        self.zip_with(other, |a, b| a & b)
    }

    /// Componentwise complement in `B^n`.
    pub fn complement(&self) -> BVec {
        let mut out = self.clone();
        for i in 0..self.len {
            let full = self.algebra.full_words();
            let src = self.entry(i).to_vec();
            words::complement_into(out.entry_mut(i), &src, full);
        }
        out
    }

    /// Componentwise order `a_i <= b_i`.
    pub fn leq(&self, other: &BVec) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(words::subset(&self.words, &other.words))
    }

    pub fn is_zero(&self) -> bool {
        words::is_zero(&self.words)
    }

    /// `<a,b> = ∨_i a_i b_i`.
    pub fn inner(&self, other: &BVec) -> Result<Elem> {
        self.check_compatible(other)?;
        Ok(self.algebra.elem_from_packed(self.inner_words(other)))
    }

    pub(crate) fn inner_words(&self, other: &BVec) -> crate::algebra::Packed {
        let mut acc = smallvec::SmallVec::from_elem(0, self.algebra.words_per_elem());
        for i in 0..self.len {
            words::or_and_assign(&mut acc, self.entry(i), other.entry(i));
        }
        acc
    }

    /// `‖a‖ = <a,a>`, the join of all entries.
    pub fn norm(&self) -> Elem {
        let mut acc = self.algebra.zero().words().to_vec();
        for i in 0..self.len {
            words::or_assign(&mut acc, self.entry(i));
        }
        self.algebra.elem_from_slice(&acc)
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Entries pairwise disjoint.
    pub fn is_orthovector(&self) -> bool {
        let mut seen = self.algebra.zero().words().to_vec();
        for i in 0..self.len {
            if !words::disjoint(&seen, self.entry(i)) {
                return false;
            }
            words::or_assign(&mut seen, self.entry(i));
        }
        true
    }

    /// Orthovector of norm one: a labelled partition of one.
    pub fn is_stochastic(&self) -> bool {
        self.is_orthovector() && self.is_unit()
    }

    pub fn orthogonal(&self, other: &BVec) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(words::is_zero(&self.inner_words(other)))
    }

    /// Greedy disjointification `b_i = a_i a_1^c ... a_{i-1}^c`, which turns
    /// a unit vector into a stochastic vector below it.
    pub fn disjointify(&self) -> Result<BVec> {
        if !self.is_unit() {
            return Err(Error::precondition("disjointify needs a unit vector"));
        }
        Ok(self.disjointify_orthovector())
    }

    /// The same construction on an arbitrary vector: an orthovector `b <= a`
    /// with `‖b‖ = ‖a‖`.
    pub fn disjointify_orthovector(&self) -> BVec {
        let mut out = self.clone();
        let mut seen = self.algebra.zero().words().to_vec();
        for i in 0..self.len {
            let e = out.entry_mut(i);
            words::and_not_assign(e, &seen);
            words::or_assign(&mut seen, e);
        }
        out
    }

    /// `(a_s, a_{s+1}, ..., a_n, a_1, ..., a_{s-1})` for 0-based shift `s`.
    pub fn rotate(&self, s: usize) -> BVec {
        let w = self.algebra.words_per_elem();
        let shift = (s % self.len) * w;
        let mut words = self.words.clone();
        words.rotate_left(shift);
        BVec::from_words(&self.algebra, self.len, words)
    }

    /// Parses `({1},{2,3},{})`.
    pub fn parse(algebra: &Algebra, text: &str) -> Result<BVec> {
        let trimmed = text.trim_start();
        let lead = text.len() - trimmed.len();
        if !trimmed.starts_with('(') {
            return Err(syntax(1, lead + 1, "expected `(` to open a vector"));
        }
        let mut pos = lead + 1;
        let mut entries = Vec::new();
        loop {
            let (e, used) = algebra.parse_elem_prefix(&text[pos..]).map_err(|err| shift_col(err, pos))?;
            entries.push(e);
            pos += used;
            let rest = &text[pos..];
            let skip = rest.len() - rest.trim_start().len();
            pos += skip;
            match text[pos..].chars().next() {
                Some(',') => pos += 1,
                Some(')') => {
                    pos += 1;
                    break;
                }
                _ => return Err(syntax(1, pos + 1, "expected `,` or `)` in vector")),
            }
        }
        if !text[pos..].trim().is_empty() {
            return Err(syntax(1, pos + 1, "trailing characters after vector"));
        }
        BVec::from_elems(entries)
    }
}

fn shift_col(err: Error, by: usize) -> Error {
    match err {
        Error::Syntax { line, column, message } => Error::Syntax {
            line,
            column: column + by,
            message,
        },
        other => other,
    }
}

impl fmt::Display for BVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for i in 0..self.len {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", self.get(i))?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for BVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Descent: for orthogonal stochastic `a, b` in `L_n`, the stochastic
/// `c` in `L_{n-1}` with `c_i = b_n a_i ∨ b_i`, so that `b_i = c_i a_i^c`.
pub fn descent(a: &BVec, b: &BVec) -> Result<BVec> {
    a.check_compatible(b)?;
    let n = a.len();
    if n < 2 {
        return Err(Error::precondition("descent needs n > 1"));
    }
    if !a.is_stochastic() || !b.is_stochastic() {
        return Err(Error::precondition("descent needs stochastic vectors"));
    }
    if !a.orthogonal(b)? {
        return Err(Error::precondition("descent needs orthogonal vectors"));
    }
    let w = a.algebra.words_per_elem();
    let last = b.entry(n - 1);
    let mut words = vec![0; (n - 1) * w];
    for i in 0..n - 1 {
        let c = &mut words[i * w..(i + 1) * w];
        words::and_into(c, last, a.entry(i));
        words::or_assign(c, b.entry(i));
    }
    Ok(BVec::from_words(&a.algebra, n - 1, words))
}

/// Inverse of [`descent`]: `b_i = c_i a_i^c` for `i < n` and
/// `b_n = (∨_{i<n} b_i)^c`.
pub fn lift(a: &BVec, c: &BVec) -> Result<BVec> {
    a.algebra.check_same(&c.algebra)?;
    let n = a.len();
    if c.len() + 1 != n {
        return Err(Error::shape(format!(
            "lift needs c of length {} for a of length {n}",
            n.saturating_sub(1)
        )));
    }
    if !a.is_stochastic() || !c.is_stochastic() {
        return Err(Error::precondition("lift needs stochastic vectors"));
    }
    let alg = &a.algebra;
    let w = alg.words_per_elem();
    let mut out = BVec::zero(alg, n)?;
    let mut covered = vec![0; w];
    for i in 0..n - 1 {
        let e = out.entry_mut(i);
        e.copy_from_slice(c.entry(i));
        words::and_not_assign(e, a.entry(i));
        words::or_assign(&mut covered, e);
    }
    words::complement_into(out.entry_mut(n - 1), &covered, alg.full_words());
    Ok(out)
}

/// The cyclic orthonormal basis `e_i = (a_i, ..., a_n, a_1, ..., a_{i-1})`
/// generated by a stochastic vector; `e_1 = a`.
pub fn cyclic_basis(a: &BVec) -> Result<VecSet> {
    if !a.is_stochastic() {
        return Err(Error::precondition("cyclic basis needs a stochastic vector"));
    }
    let vectors = (0..a.len()).map(|s| a.rotate(s)).collect();
    Ok(VecSet {
        algebra: a.algebra.clone(),
        dim: a.len(),
        vectors,
    })
}

/// An ordered family of vectors of one length over one algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VecSet {
    algebra: Algebra,
    dim: usize,
    vectors: Vec<BVec>,
}

impl VecSet {
    pub fn new(algebra: &Algebra, dim: usize, vectors: Vec<BVec>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::shape("vector sets live in L_n with n >= 1"));
        }
        for v in &vectors {
            algebra.check_same(&v.algebra)?;
            if v.len() != dim {
                return Err(Error::shape(format!(
                    "vector of length {} in a set of dimension {dim}",
                    v.len()
                )));
            }
        }
        Ok(VecSet {
            algebra: algebra.clone(),
            dim,
            vectors,
        })
    }

    /// Builds a set from a non-empty list, taking algebra and dimension
    /// from its first vector.
    pub fn from_vectors(vectors: Vec<BVec>) -> Result<Self> {
        let first = vectors
            .first()
            .ok_or_else(|| Error::shape("use VecSet::new for an empty set"))?;
        let (alg, dim) = (first.algebra.clone(), first.len());
        Self::new(&alg, dim, vectors)
    }

    /// The canonical basis `δ_1, ..., δ_n`.
    pub fn canonical(algebra: &Algebra, n: usize) -> Result<Self> {
        let vectors = (0..n)
            .map(|i| BVec::delta(algebra, n, i))
            .collect::<Result<Vec<_>>>()?;
        Self::new(algebra, n, vectors)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    /// Length `n` of the member vectors.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[BVec] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<BVec> {
        self.vectors
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BVec> {
        self.vectors.iter()
    }

    /// Pairwise orthogonal members, every one a unit vector.
    pub fn is_orthonormal(&self) -> bool {
        self.vectors.iter().all(BVec::is_unit)
            && self.vectors.iter().enumerate().all(|(i, u)| {
                self.vectors[i + 1..]
                    .iter()
                    .all(|v| words::is_zero(&u.inner_words(v)))
            })
    }

    pub fn is_stochastic(&self) -> bool {
        self.vectors.iter().all(BVec::is_stochastic)
    }

    /// Whether this is an orthonormal basis of `L_n`: orthonormal with
    /// exactly `n` members.
    pub fn is_basis(&self) -> bool {
        let orthonormal = self.is_orthonormal();
        let basis = orthonormal && self.len() == self.dim;
        #[cfg(debug_assertions)]
        if orthonormal && !self.is_empty() {
            let dual = self.transpose().expect("non-empty").is_orthonormal();
            debug_assert_eq!(basis, dual, "dimension count and duality disagree on {self:?}");
        }
        basis
    }

    /// The family of rows of the `n × m` matrix whose columns are the
    /// members: `n` vectors in `L_m`.
    pub fn transpose(&self) -> Result<VecSet> {
        let m = self.len();
        if m == 0 {
            return Err(Error::shape("cannot transpose an empty set"));
        }
        let w = self.algebra.words_per_elem();
        let rows = (0..self.dim)
            .map(|i| {
                let mut words = Vec::with_capacity(m * w);
                for v in &self.vectors {
                    words.extend_from_slice(v.entry(i));
                }
                BVec::from_words(&self.algebra, m, words)
            })
            .collect();
        VecSet::new(&self.algebra, m, rows)
    }

    /// Coefficients `c_i = <b, e_i>` of `b` in this orthonormal basis.
    pub fn coordinates(&self, b: &BVec) -> Result<Vec<Elem>> {
        if !self.is_basis() {
            return Err(Error::precondition("coordinates need an orthonormal basis"));
        }
        self.vectors.iter().map(|e| b.inner(e)).collect()
    }

    /// `Σ c_i e_i`.
    pub fn combine(&self, coeffs: &[Elem]) -> Result<BVec> {
        if coeffs.len() != self.len() {
            return Err(Error::shape(format!(
                "{} coefficients for {} vectors",
                coeffs.len(),
                self.len()
            )));
        }
        let mut acc = BVec::zero(&self.algebra, self.dim)?;
        for (c, e) in coeffs.iter().zip(&self.vectors) {
            acc = acc.add(&e.scalar_mul(c)?)?;
        }
        Ok(acc)
    }

    /// Extends a stochastic orthonormal set to an orthonormal basis of
    /// `L_n` whose first members are this set.
    ///
    /// The complement of `v_1` is parametrised by the tail of the cyclic
    /// basis of `v_1`; the remaining members are pulled back into `L_{n-1}`
    /// by their coordinates there, extended recursively and pushed forward.
    pub fn extend_to_basis(&self) -> Result<VecSet> {
        if self.len() > self.dim {
            return Err(Error::precondition(format!(
                "a stochastic orthonormal set in L_{} has at most {} members, got {}",
                self.dim,
                self.dim,
                self.len()
            )));
        }
        if !self.is_stochastic() || !self.is_orthonormal() {
            return Err(Error::precondition(
                "extend_to_basis needs a stochastic orthonormal set",
            ));
        }
        let out = self.extend_unchecked()?;
        debug_assert!(out.is_basis());
        Ok(out)
    }

    fn extend_unchecked(&self) -> Result<VecSet> {
        let n = self.dim;
        let m = self.len();
        if m == 0 {
            return VecSet::canonical(&self.algebra, n);
        }
        if m == n {
            return Ok(self.clone());
        }
        let e = cyclic_basis(&self.vectors[0])?;
        let tail = &e.vectors[1..];
        let pulled = self.vectors[1..]
            .iter()
            .map(|v| {
                let coords = tail.iter().map(|t| v.inner(t)).collect::<Result<Vec<_>>>()?;
                BVec::from_elems(coords)
            })
            .collect::<Result<Vec<_>>>()?;
        let sub = VecSet::new(&self.algebra, n - 1, pulled)?.extend_unchecked()?;
        let tail_set = VecSet::new(&self.algebra, n, tail.to_vec())?;
        let mut vectors = Vec::with_capacity(n);
        vectors.push(self.vectors[0].clone());
        for w in sub.vectors.iter() {
            vectors.push(tail_set.combine(&w.entries())?);
        }
        debug_assert_eq!(&vectors[..m], self.vectors.as_slice());
        VecSet::new(&self.algebra, n, vectors)
    }
}

impl<'a> IntoIterator for &'a VecSet {
    type Item = &'a BVec;
    type IntoIter = std::slice::Iter<'a, BVec>;
    fn into_iter(self) -> Self::IntoIter {
        self.vectors.iter()
    }
}
