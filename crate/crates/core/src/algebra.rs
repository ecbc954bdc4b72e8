//! Finite power-set Boolean algebras and their elements.
//!
//! An [`Algebra`] is the power set of a finite, named atom set. Elements are
//! bit-packed subsets of atom indices: a single inline machine word when the
//! algebra has at most 64 atoms, a word array beyond that. Every [`Elem`]
//! carries its algebra, and binary operations reject operands from different
//! algebras.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::words;

pub(crate) type Packed = SmallVec<[u64; 1]>;

static NEXT_ALGEBRA_ID: AtomicU64 = AtomicU64::new(1);

/// Characters that cannot appear in an atom name because the text formats
/// use them as delimiters.
const RESERVED: &[char] = &['{', '}', ',', '(', ')', '#', '*', ':'];

struct AlgebraInner {
    id: u64,
    names: Vec<String>,
    index: HashMap<String, usize>,
    words: usize,
    full: Packed,
}

/// The power set of `k >= 1` named atoms.
///
/// Cloning is cheap (reference counted). Two algebras compare equal only if
/// one is a clone of the other, even if their atom names coincide.
#[derive(Clone)]
pub struct Algebra(Arc<AlgebraInner>);

impl Algebra {
    /// Builds the algebra whose atoms carry `names`, in order.
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidAlgebra(
                "at least one atom is required (the trivial algebra is not supported)".into(),
            ));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidAlgebra(format!("atom {} has an empty name", i + 1)));
            }
            if name.chars().any(|c| c.is_whitespace() || RESERVED.contains(&c)) {
                return Err(Error::InvalidAlgebra(format!(
                    "atom name `{name}` contains whitespace or a reserved character"
                )));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidAlgebra(format!("duplicate atom name `{name}`")));
            }
        }
        let k = names.len();
        let w = k.div_ceil(64);
        let mut full: Packed = SmallVec::from_elem(u64::MAX, w);
        let tail = k % 64;
        if tail != 0 {
            full[w - 1] = (1u64 << tail) - 1;
        }
        Ok(Algebra(Arc::new(AlgebraInner {
            id: NEXT_ALGEBRA_ID.fetch_add(1, Ordering::Relaxed),
            names,
            index,
            words: w,
            full,
        })))
    }

    /// The power set of `{1..k}` with atoms named `1`, `2`, ..., `k`.
    pub fn with_atoms(k: usize) -> Result<Self> {
        Self::new((1..=k).map(|i| i.to_string()))
    }

    pub fn atom_count(&self) -> usize {
        self.0.names.len()
    }

    pub fn atom_names(&self) -> &[String] {
        &self.0.names
    }

    pub fn atom_index(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    pub fn id(&self) -> u64 {
        self.0.id
    }

    /// Number of u64 words per packed element.
    pub fn words_per_elem(&self) -> usize {
        self.0.words
    }

    pub(crate) fn full_words(&self) -> &[u64] {
        &self.0.full
    }

    pub(crate) fn same(&self, other: &Algebra) -> bool {
        self.0.id == other.0.id
    }

    pub(crate) fn check_same(&self, other: &Algebra) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn zero(&self) -> Elem {
        Elem {
            algebra: self.clone(),
            bits: SmallVec::from_elem(0, self.0.words),
        }
    }

    pub fn one(&self) -> Elem {
        Elem {
            algebra: self.clone(),
            bits: self.0.full.clone(),
        }
    }

    /// The singleton `{name_i}` for atom index `i` (0-based).
    pub fn atom(&self, i: usize) -> Result<Elem> {
        self.from_atom_indices([i])
    }

    pub fn from_atom_indices<I: IntoIterator<Item = usize>>(&self, atoms: I) -> Result<Elem> {
        let mut e = self.zero();
        for i in atoms {
            if i >= self.atom_count() {
                return Err(Error::UnknownAtom(format!("#{i}")));
            }
            e.bits[i / 64] |= 1u64 << (i % 64);
        }
        Ok(e)
    }

    pub fn from_atom_names<I, S>(&self, names: I) -> Result<Elem>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut idx = Vec::new();
        for name in names {
            let name = name.as_ref();
            idx.push(
                self.atom_index(name)
                    .ok_or_else(|| Error::UnknownAtom(name.to_string()))?,
            );
        }
        self.from_atom_indices(idx)
    }

    /// Element whose atom set is given by the low bits of `mask`
    /// (only for algebras with at most 64 atoms).
    pub fn from_mask(&self, mask: u64) -> Result<Elem> {
        if self.0.words != 1 {
            return Err(Error::Unsupported("from_mask needs at most 64 atoms".into()));
        }
        if mask & !self.0.full[0] != 0 {
            return Err(Error::UnknownAtom(format!("bit outside the {} atoms", self.atom_count())));
        }
        Ok(self.elem_from_packed(SmallVec::from_elem(mask, 1)))
    }

    pub(crate) fn elem_from_packed(&self, bits: Packed) -> Elem {
        debug_assert_eq!(bits.len(), self.0.words);
        Elem {
            algebra: self.clone(),
            bits,
        }
    }

    pub(crate) fn elem_from_slice(&self, bits: &[u64]) -> Elem {
        self.elem_from_packed(SmallVec::from_slice(bits))
    }

    /// Every element, in increasing packed-bit order (at most 20 atoms).
    pub fn elements(&self) -> Result<impl Iterator<Item = Elem> + '_> {
        let k = self.atom_count();
        if k > 20 {
            return Err(Error::BudgetExceeded {
                required: 1u128 << k.min(127),
                budget: 1 << 20,
            });
        }
        Ok((0..1u64 << k).map(move |m| self.elem_from_packed(SmallVec::from_elem(m, 1))))
    }

    /// The atoms `{1}`, ..., `{k}` as singleton elements.
    pub fn singletons(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.atom_count()).map(move |i| self.atom(i).expect("index in range"))
    }

    /// Parses an element literal: `{}`, `{a,b}` or `*`.
    pub fn parse_elem(&self, text: &str) -> Result<Elem> {
        let (elem, used) = self.parse_elem_prefix(text)?;
        if let Some((off, _)) = text[used..].char_indices().find(|(_, c)| !c.is_whitespace()) {
            return Err(syntax(1, used + off + 1, "trailing characters after element"));
        }
        Ok(elem)
    }

    /// Parses one literal at the start of `text` (leading whitespace allowed)
    /// and returns it with the number of bytes consumed. Error columns are
    /// 1-based byte offsets into `text`.
    pub(crate) fn parse_elem_prefix(&self, text: &str) -> Result<(Elem, usize)> {
        let start = text.len() - text.trim_start().len();
        let rest = &text[start..];
        if rest.starts_with('*') {
            return Ok((self.one(), start + 1));
        }
        if !rest.starts_with('{') {
            return Err(syntax(1, start + 1, "expected element literal `{...}` or `*`"));
        }
        let close = match rest.find('}') {
            Some(c) => c,
            None => return Err(syntax(1, start + 1, "unterminated `{`")),
        };
        let body = &rest[1..close];
        let mut elem = self.zero();
        if !body.trim().is_empty() {
            let mut offset = start + 1;
            for part in body.split(',') {
                let name = part.trim();
                let col = offset + (part.len() - part.trim_start().len()) + 1;
                if name.is_empty() {
                    return Err(syntax(1, col, "empty atom name in element literal"));
                }
                match self.atom_index(name) {
                    Some(i) => elem.bits[i / 64] |= 1u64 << (i % 64),
                    None => {
                        return Err(syntax(1, col, &format!("unknown atom `{name}`")));
                    }
                }
                offset += part.len() + 1;
            }
        }
        Ok((elem, start + close + 1))
    }
}

pub(crate) fn syntax(line: usize, column: usize, message: &str) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.to_string(),
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for Algebra {}

impl Hash for Algebra {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.id.hash(state);
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("id", &self.0.id)
            .field("atoms", &self.0.names)
            .finish()
    }
}

/// One element of a finite Boolean algebra: a set of atoms.
#[derive(Clone)]
pub struct Elem {
    algebra: Algebra,
    bits: Packed,
}

impl Elem {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.bits
    }

    fn binary(&self, other: &Elem, op: impl Fn(u64, u64) -> u64) -> Result<Elem> {
        self.algebra.check_same(&other.algebra)?;
        let bits = self.bits.iter().zip(&other.bits).map(|(&a, &b)| op(a, b)).collect();
        Ok(self.algebra.elem_from_packed(bits))
    }

    /// Infimum `ab` (set intersection).
    pub fn meet(&self, other: &Elem) -> Result<Elem> {
        self.binary(other, |a, b| a & b)
    }

    /// Supremum `a ∨ b` (set union).
    pub fn join(&self, other: &Elem) -> Result<Elem> {
        self.binary(other, |a, b| a | b)
    }

    /// `a \ b = a b^c`.
    pub fn diff(&self, other: &Elem) -> Result<Elem> {
        self.binary(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Elem {
        let mut bits = self.bits.clone();
        words::complement_into(&mut bits, &self.bits, self.algebra.full_words());
        self.algebra.elem_from_packed(bits)
    }

    pub fn leq(&self, other: &Elem) -> Result<bool> {
        self.algebra.check_same(&other.algebra)?;
        Ok(words::subset(&self.bits, &other.bits))
    }

    pub fn is_zero(&self) -> bool {
        words::is_zero(&self.bits)
    }

    pub fn is_one(&self) -> bool {
        self.bits[..] == self.algebra.full_words()[..]
    }

    pub fn contains_atom(&self, i: usize) -> bool {
        i < self.algebra.atom_count() && self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    /// Atom indices contained in this element, ascending.
    pub fn atom_indices(&self) -> Vec<usize> {
        (0..self.algebra.atom_count()).filter(|&i| self.contains_atom(i)).collect()
    }

    pub fn cardinality(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// The low word of the packing; the whole element when `k <= 64`.
    pub fn mask(&self) -> u64 {
        self.bits[0]
    }
}

impl PartialEq for Elem {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same(&other.algebra) && self.bits == other.bits
    }
}

impl Eq for Elem {}

impl Hash for Elem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.algebra.id().hash(state);
        self.bits.hash(state);
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("*");
        }
        f.write_str("{")?;
        for (n, i) in self.atom_indices().into_iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            f.write_str(&self.algebra.atom_names()[i])?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Algebra {
        Algebra::new(["1", "2", "3"]).unwrap()
    }

    #[test]
    fn construction() {
        let a = p3();
        assert_eq!(a.atom_count(), 3);
        assert!(a.zero().is_zero());
        assert_eq!(a.one().cardinality(), 3);
        assert!(Algebra::new(Vec::<String>::new()).is_err());
        assert!(Algebra::new(["a", "a"]).is_err());
        assert!(Algebra::new(["a", ""]).is_err());
        assert!(Algebra::new(["a,b"]).is_err());
    }

    #[test]
    fn set_operations() {
        let a = p3();
        let e = |s: &str| a.parse_elem(s).unwrap();
        assert_eq!(e("{1,2}").meet(&e("{2,3}")).unwrap(), e("{2}"));
        assert_eq!(e("{1,2}").complement(), e("{3}"));
        assert!(e("{2}").leq(&e("{2,3}")).unwrap());
        assert_eq!(e("{1}").join(&e("{3}")).unwrap(), e("{1,3}"));
        assert_eq!(e("{1,2}").diff(&e("{2,3}")).unwrap(), e("{1}"));
        assert_eq!(e("*"), a.one());
        assert_eq!(e("{1,2,3}"), a.one());
    }

    #[test]
    fn mismatched_algebras_are_rejected() {
        let a = p3();
        let b = p3();
        assert_ne!(a, b);
        assert_eq!(a.one().meet(&b.one()), Err(Error::AlgebraMismatch));
        assert_eq!(a.one().leq(&b.one()), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn exhaustive_lattice_laws() {
        for k in 1..=4 {
            let alg = Algebra::with_atoms(k).unwrap();
            let all: Vec<Elem> = alg.elements().unwrap().collect();
            assert_eq!(all.len(), 1 << k);
            for a in &all {
                assert_eq!(a.complement().complement(), *a);
                for b in &all {
                    let join = a.join(b).unwrap();
                    let meet = a.meet(b).unwrap();
                    assert_eq!(
                        join.complement(),
                        a.complement().meet(&b.complement()).unwrap()
                    );
                    assert_eq!(a.meet(&join).unwrap(), *a);
                    let leq = a.leq(b).unwrap();
                    assert_eq!(leq, meet == *a);
                    assert_eq!(leq, join == *b);
                }
            }
            let singles: Vec<Elem> = alg.singletons().collect();
            let mut acc = alg.zero();
            for (i, s) in singles.iter().enumerate() {
                acc = acc.join(s).unwrap();
                for t in &singles[i + 1..] {
                    assert!(s.meet(t).unwrap().is_zero());
                }
            }
            assert!(acc.is_one());
        }
    }

    #[test]
    fn wide_algebra_uses_word_array() {
        let alg = Algebra::with_atoms(130).unwrap();
        assert_eq!(alg.words_per_elem(), 3);
        let x = alg.from_atom_indices([0, 64, 129]).unwrap();
        assert_eq!(x.cardinality(), 3);
        assert_eq!(x.complement().cardinality(), 127);
        assert!(x.join(&x.complement()).unwrap().is_one());
        assert_eq!(alg.parse_elem(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn literal_syntax() {
        let a = p3();
        assert_eq!(a.parse_elem("{}").unwrap(), a.zero());
        assert_eq!(a.parse_elem(" { 1 , 3 } ").unwrap().to_string(), "{1,3}");
        assert_eq!(a.one().to_string(), "*");
        assert_eq!(a.zero().to_string(), "{}");
        match a.parse_elem("{1,}") {
            Err(Error::Syntax { column, .. }) => assert_eq!(column, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(a.parse_elem("{4}"), Err(Error::Syntax { .. })));
        assert!(matches!(a.parse_elem("{1"), Err(Error::Syntax { .. })));
        assert!(matches!(a.parse_elem("{1} x"), Err(Error::Syntax { .. })));
    }
}
