//! Brute-force reference for tiny `(n, k)`.
//!
//! Reference computations here use only algebra primitives on plain
//! `Vec<Elem>` vectors and row-major `Vec<Vec<Elem>>` matrices; the
//! optimized modules appear only as the thing being compared. Every
//! exhaustive run is preceded by a cost estimate checked against a budget,
//! so a check is either complete or refused, never silently truncated.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::algebra::{Algebra, Elem};
use crate::bmatrix::{self, BMatrix};
use crate::bvec::{self, BVec, VecSet};
use crate::chains;
use crate::error::{Error, Result};
use crate::random;

pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// A vector as a plain list of elements.
pub type NVec = Vec<Elem>;
/// A matrix as a list of rows.
pub type NMat = Vec<Vec<Elem>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    AllVectors,
    StochasticVectors,
    StochasticMatrices,
    UnitaryMatrices,
    OrthonormalSets,
}

impl Kind {
    pub const ALL: [Kind; 5] = [
        Kind::AllVectors,
        Kind::StochasticVectors,
        Kind::StochasticMatrices,
        Kind::UnitaryMatrices,
        Kind::OrthonormalSets,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::AllVectors => "all_vectors",
            Kind::StochasticVectors => "stochastic_vectors",
            Kind::StochasticMatrices => "stochastic_matrices",
            Kind::UnitaryMatrices => "unitary_matrices",
            Kind::OrthonormalSets => "orthonormal_sets",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown enumeration kind `{s}`")))
    }
}

/// What to enumerate: objects of `kind` in `L_n` over `P(1..k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EnumSpec {
    pub n: usize,
    pub k: usize,
    pub kind: Kind,
}

fn pow(base: u128, exp: usize) -> u128 {
    u32::try_from(exp)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .unwrap_or(u128::MAX)
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |a, b| a.saturating_mul(b))
}

impl EnumSpec {
    pub fn new(n: usize, k: usize, kind: Kind) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::precondition("enumeration needs n >= 1 and k >= 1"));
        }
        Ok(EnumSpec { n, k, kind })
    }

    fn elements(&self) -> u128 {
        pow(2, self.k)
    }

    fn all_vectors(&self) -> u128 {
        pow(self.elements(), self.n)
    }

    fn unit_vectors(&self) -> u128 {
        pow(pow(2, self.n) - 1, self.k)
    }

    fn stochastic_vectors(&self) -> u128 {
        pow(self.n as u128, self.k)
    }

    fn stochastic_matrices(&self) -> u128 {
        pow(self.stochastic_vectors(), self.n)
    }

    fn unitaries(&self) -> u128 {
        pow(factorial(self.n), self.k)
    }

    /// Closed-form object count, or for orthonormal sets the work of
    /// listing unit vectors and testing all pairs of them.
    pub fn cost(&self) -> u128 {
        match self.kind {
            Kind::AllVectors => self.all_vectors(),
            Kind::StochasticVectors => self.stochastic_vectors(),
            Kind::StochasticMatrices => self.stochastic_matrices(),
            Kind::UnitaryMatrices => self.unitaries(),
            Kind::OrthonormalSets => self
                .all_vectors()
                .saturating_add(self.unit_vectors().saturating_mul(self.unit_vectors())),
        }
    }

    /// A fresh `P(1..k)`.
    pub fn algebra(&self) -> Algebra {
        Algebra::with_atoms(self.k).expect("k >= 1")
    }
}

fn check_budget(required: u128, budget: u128) -> Result<()> {
    if required > budget {
        Err(Error::BudgetExceeded { required, budget })
    } else {
        Ok(())
    }
}

/// One enumerated object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Vector(NVec),
    Matrix(NMat),
    Set(Vec<NVec>),
}

impl Object {
    pub fn to_bvec(&self) -> Option<BVec> {
        match self {
            Object::Vector(v) => BVec::from_elems(v.clone()).ok(),
            _ => None,
        }
    }

    pub fn to_bmatrix(&self, alg: &Algebra) -> Option<BMatrix> {
        match self {
            Object::Matrix(m) => BMatrix::from_rows(alg, m.clone()).ok(),
            _ => None,
        }
    }

    pub fn to_vecset(&self, alg: &Algebra, n: usize) -> Option<VecSet> {
        match self {
            Object::Set(s) => {
                let vs = s.iter().map(|v| BVec::from_elems(v.clone())).collect::<Result<Vec<_>>>().ok()?;
                VecSet::new(alg, n, vs).ok()
            }
            _ => None,
        }
    }
}

fn fmt_vec(v: &[Elem]) -> String {
    let parts: Vec<String> = v.iter().map(|e| e.to_string()).collect();
    format!("({})", parts.join(","))
}

fn fmt_mat(m: &NMat) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Vector(v) => f.write_str(&fmt_vec(v)),
            Object::Matrix(m) => f.write_str(&fmt_mat(m)),
            Object::Set(s) => {
                let parts: Vec<String> = s.iter().map(|v| fmt_vec(v)).collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
        }
    }
}

/// Plain-list arithmetic from algebra primitives only.
mod naive {
    use super::{NMat, NVec};
    use crate::algebra::{Algebra, Elem};

    pub fn join(a: &Elem, b: &Elem) -> Elem {
        a.join(b).expect("one algebra")
    }

    pub fn meet(a: &Elem, b: &Elem) -> Elem {
        a.meet(b).expect("one algebra")
    }

    pub fn inner(a: &[Elem], b: &[Elem]) -> Elem {
        let z = a[0].algebra().zero();
        a.iter().zip(b).fold(z, |acc, (x, y)| join(&acc, &meet(x, y)))
    }

    pub fn norm(a: &[Elem]) -> Elem {
        let z = a[0].algebra().zero();
        a.iter().fold(z, |acc, x| join(&acc, x))
    }

    pub fn add(a: &[Elem], b: &[Elem]) -> NVec {
        a.iter().zip(b).map(|(x, y)| join(x, y)).collect()
    }

    pub fn scale(c: &Elem, a: &[Elem]) -> NVec {
        a.iter().map(|x| meet(c, x)).collect()
    }

    pub fn is_orthovector(a: &[Elem]) -> bool {
        (0..a.len()).all(|i| (i + 1..a.len()).all(|j| meet(&a[i], &a[j]).is_zero()))
    }

    pub fn is_stochastic(a: &[Elem]) -> bool {
        is_orthovector(a) && norm(a).is_one()
    }

    pub fn is_orthonormal(set: &[NVec]) -> bool {
        set.iter().all(|v| norm(v).is_one())
            && (0..set.len()).all(|i| (i + 1..set.len()).all(|j| inner(&set[i], &set[j]).is_zero()))
    }

    pub fn delta(alg: &Algebra, n: usize, j: usize) -> NVec {
        (0..n).map(|i| if i == j { alg.one() } else { alg.zero() }).collect()
    }

    pub fn identity(alg: &Algebra, n: usize) -> NMat {
        (0..n).map(|j| delta(alg, n, j)).collect()
    }

    pub fn mul(a: &NMat, b: &NMat) -> NMat {
        let alg = a[0][0].algebra().clone();
        (0..a.len())
            .map(|i| {
                (0..b[0].len())
                    .map(|j| {
                        (0..b.len()).fold(alg.zero(), |acc, p| join(&acc, &meet(&a[i][p], &b[p][j])))
                    })
                    .collect()
            })
            .collect()
    }

    pub fn apply(a: &NMat, v: &[Elem]) -> NVec {
        a.iter().map(|row| inner(row, v)).collect()
    }

    pub fn adjoint(a: &NMat) -> NMat {
        (0..a[0].len()).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
    }

    pub fn column(a: &NMat, j: usize) -> NVec {
        a.iter().map(|r| r[j].clone()).collect()
    }

    pub fn columns(a: &NMat) -> Vec<NVec> {
        (0..a[0].len()).map(|j| column(a, j)).collect()
    }

    pub fn trace(a: &NMat) -> Elem {
        let z = a[0][0].algebra().zero();
        (0..a.len()).fold(z, |acc, i| join(&acc, &a[i][i]))
    }

    pub fn power(a: &NMat, e: u64) -> NMat {
        let alg = a[0][0].algebra().clone();
        let mut r = identity(&alg, a.len());
        for _ in 0..e {
            r = mul(&r, a);
        }
        r
    }

    pub fn is_stochastic_matrix(a: &NMat) -> bool {
        columns(a).iter().all(|c| is_stochastic(c))
    }

    pub fn is_unitary(a: &NMat) -> bool {
        let alg = a[0][0].algebra().clone();
        let id = identity(&alg, a.len());
        a.len() == a[0].len() && mul(a, &adjoint(a)) == id && mul(&adjoint(a), a) == id
    }

    pub fn is_symmetric(a: &NMat) -> bool {
        *a == adjoint(a)
    }

    pub fn fixes_first_axis(d: &NMat) -> bool {
        d[0][0].is_one() && (1..d.len()).all(|i| d[0][i].is_zero() && d[i][0].is_zero())
    }

    /// All `m`-tuples of coefficients, odometer order.
    pub fn coefficient_tuples<'a>(elems: &'a [Elem], m: usize) -> impl Iterator<Item = NVec> + 'a {
        super::odometer(elems.len(), m).map(move |d| d.into_iter().map(|i| elems[i].clone()).collect())
    }

    /// Whether every canonical vector is a linear combination of `set`.
    pub fn generates(alg: &Algebra, elems: &[Elem], n: usize, set: &[NVec]) -> bool {
        (0..n).all(|j| {
            let target = delta(alg, n, j);
            coefficient_tuples(elems, set.len()).any(|c| {
                let combo = c
                    .iter()
                    .zip(set)
                    .fold(vec![alg.zero(); n], |acc, (ci, v)| add(&acc, &scale(ci, v)));
                combo == target
            })
        })
    }

    pub fn lcm_upto(n: u64) -> u64 {
        (1..).find(|m| (1..=n).all(|d| m % d == 0)).expect("exists")
    }
}

/// Every `len`-digit word over `0..radix`, most significant digit first.
fn odometer(radix: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (radix as u128).checked_pow(len as u32).expect("budgeted") as u64;
    (0..total).map(move |mut x| {
        let mut d = vec![0; len];
        for slot in d.iter_mut().rev() {
            *slot = (x % radix as u64) as usize;
            x /= radix as u64;
        }
        d
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// The grid with atom `t` in row `maps[t][j]` of column `j`.
fn grid_from_maps(alg: &Algebra, n: usize, cols: usize, maps: &[Vec<usize>]) -> NMat {
    let mut cells = vec![vec![Vec::new(); cols]; n];
    for (t, map) in maps.iter().enumerate() {
        for (j, &i) in map.iter().enumerate() {
            cells[i][j].push(t);
        }
    }
    cells
        .into_iter()
        .map(|r| r.into_iter().map(|c| alg.from_atom_indices(c).expect("in range")).collect())
        .collect()
}

fn elements_of(alg: &Algebra) -> Vec<Elem> {
    alg.elements().expect("budgeted algebra size").collect()
}

fn all_vectors(alg: &Algebra, n: usize) -> impl Iterator<Item = NVec> {
    let elems = elements_of(alg);
    odometer(elems.len(), n).map(move |d| d.into_iter().map(|i| elems[i].clone()).collect())
}

fn stochastic_vectors(alg: &Algebra, n: usize) -> impl Iterator<Item = NVec> {
    let alg = alg.clone();
    odometer(n, alg.atom_count()).map(move |d| {
        let maps: Vec<Vec<usize>> = d.into_iter().map(|i| vec![i]).collect();
        naive::column(&grid_from_maps(&alg, n, 1, &maps), 0)
    })
}

fn stochastic_matrices(alg: &Algebra, n: usize) -> impl Iterator<Item = NMat> {
    let alg = alg.clone();
    // The coordinate of atom t in column j is digit t * n + j.
    let k = alg.atom_count();
    odometer(n, n * k).map(move |d| {
        let maps: Vec<Vec<usize>> = d.chunks(n).map(<[usize]>::to_vec).collect();
        grid_from_maps(&alg, n, n, &maps)
    })
}

fn unitary_matrices(alg: &Algebra, n: usize) -> impl Iterator<Item = NMat> {
    let alg = alg.clone();
    let perms = permutations(n);
    odometer(perms.len(), alg.atom_count()).map(move |d| {
        let maps: Vec<Vec<usize>> = d.into_iter().map(|p| perms[p].clone()).collect();
        grid_from_maps(&alg, n, n, &maps)
    })
}

/// All orthonormal sets, as index-increasing cliques of unit vectors under
/// orthogonality, including the empty set.
fn orthonormal_sets(alg: &Algebra, n: usize) -> Vec<Vec<NVec>> {
    let units: Vec<NVec> = all_vectors(alg, n).filter(|v| naive::norm(v).is_one()).collect();
    let u = units.len();
    let orth: Vec<Vec<bool>> = (0..u)
        .map(|i| (0..u).map(|j| naive::inner(&units[i], &units[j]).is_zero()).collect())
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn grow(
        start: usize,
        stack: &mut Vec<usize>,
        orth: &[Vec<bool>],
        units: &[NVec],
        out: &mut Vec<Vec<NVec>>,
    ) {
        out.push(stack.iter().map(|&i| units[i].clone()).collect());
        for next in start..units.len() {
            if stack.iter().all(|&s| orth[s][next]) {
                stack.push(next);
                grow(next + 1, stack, orth, units, out);
                stack.pop();
            }
        }
    }
    grow(0, &mut stack, &orth, &units, &mut out);
    out
}

/// A deterministic, duplicate-free stream of the objects of one spec, all
/// over the algebra returned by [`Enumeration::algebra`].
pub struct Enumeration {
    algebra: Algebra,
    inner: Box<dyn Iterator<Item = Object>>,
}

impl Enumeration {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }
}

impl Iterator for Enumeration {
    type Item = Object;

    fn next(&mut self) -> Option<Object> {
        self.inner.next()
    }
}

/// Enumerates `spec` after checking its cost against `budget`.
pub fn enumerate(spec: &EnumSpec, budget: u128) -> Result<Enumeration> {
    check_budget(spec.cost(), budget)?;
    let alg = spec.algebra();
    let n = spec.n;
    let inner: Box<dyn Iterator<Item = Object>> = match spec.kind {
        Kind::AllVectors => Box::new(all_vectors(&alg, n).map(Object::Vector)),
        Kind::StochasticVectors => Box::new(stochastic_vectors(&alg, n).map(Object::Vector)),
        Kind::StochasticMatrices => Box::new(stochastic_matrices(&alg, n).map(Object::Matrix)),
        Kind::UnitaryMatrices => Box::new(unitary_matrices(&alg, n).map(Object::Matrix)),
        Kind::OrthonormalSets => Box::new(orthonormal_sets(&alg, n).into_iter().map(Object::Set)),
    };
    Ok(Enumeration { algebra: alg, inner })
}

/// The registered theorem statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    Norm,
    Duality,
    Descent,
    BasisUpbound,
    Dimension,
    DimCor2,
    Incomplete,
    Inverse,
    StoInv,
    OddInv,
    UnitReduce,
    Atoms,
    Power,
    PeriodDivides,
}

impl Theorem {
    pub const ALL: [Theorem; 14] = [
        Theorem::Norm,
        Theorem::Duality,
        Theorem::Descent,
        Theorem::BasisUpbound,
        Theorem::Dimension,
        Theorem::DimCor2,
        Theorem::Incomplete,
        Theorem::Inverse,
        Theorem::StoInv,
        Theorem::OddInv,
        Theorem::UnitReduce,
        Theorem::Atoms,
        Theorem::Power,
        Theorem::PeriodDivides,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Norm => "NORM",
            Theorem::Duality => "DUALITY",
            Theorem::Descent => "DESCENT",
            Theorem::BasisUpbound => "BASIS_UPBOUND",
            Theorem::Dimension => "DIMENSION",
            Theorem::DimCor2 => "DIMCOR2",
            Theorem::Incomplete => "INCOMPLETE",
            Theorem::Inverse => "INVERSE",
            Theorem::StoInv => "STOINV",
            Theorem::OddInv => "ODDINV",
            Theorem::UnitReduce => "UNITREDUCE",
            Theorem::Atoms => "ATOMS",
            Theorem::Power => "POWER",
            Theorem::PeriodDivides => "PERIOD_DIVIDES",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Theorem::Norm => "norm and inner-product laws; equal-norm orthovectors meet in full norm only when equal",
            Theorem::Duality => "an orthonormal set is a basis iff its transpose family is orthonormal",
            Theorem::Descent => "orthogonal stochastic pairs descend to L_{n-1} and lift back",
            Theorem::BasisUpbound => "a stochastic orthonormal set has at most n members",
            Theorem::Dimension => "every orthonormal basis has exactly n members",
            Theorem::DimCor2 => "an orthonormal set is a basis iff it has n members",
            Theorem::Incomplete => "stochastic orthonormal sets extend to orthonormal bases",
            Theorem::Inverse => "invertible <=> unitary <=> columns ONB <=> rows ONB",
            Theorem::StoInv => "an invariant stochastic vector exists iff the trace is one",
            Theorem::OddInv => "symmetric stochastic matrices of odd size have trace one",
            Theorem::UnitReduce => "a unitary matrix is reducible iff its trace is one",
            Theorem::Atoms => "matrix atoms partition one and act as deterministic site maps",
            Theorem::Power => "A^{[n]+n-1} = A^{n-1}, and A^{[n]} = I for unitary A",
            Theorem::PeriodDivides => "exponent <= n-1 and period divides [n]",
        }
    }

    /// Estimated brute-force work for `(n, k)`.
    pub fn cost(self, n: usize, k: usize) -> u128 {
        let s = |kind| EnumSpec { n, k, kind }.cost();
        let e = pow(2, k);
        let v = s(Kind::AllVectors);
        let sv = s(Kind::StochasticVectors);
        let sm = s(Kind::StochasticMatrices);
        match self {
            Theorem::Norm => v.saturating_mul(v).saturating_mul(e),
            Theorem::Duality | Theorem::BasisUpbound | Theorem::Dimension | Theorem::DimCor2 | Theorem::Incomplete => {
                s(Kind::OrthonormalSets)
            }
            Theorem::Descent => sv.saturating_mul(sv),
            Theorem::Inverse => pow(e, n * n).saturating_mul(v),
            Theorem::StoInv | Theorem::OddInv => sm.saturating_mul(sv),
            Theorem::UnitReduce => s(Kind::UnitaryMatrices).saturating_mul(s(Kind::UnitaryMatrices)),
            Theorem::Atoms => sm.saturating_mul(pow(n as u128, n)),
            Theorem::Power | Theorem::PeriodDivides => sm,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let up = s.to_ascii_uppercase();
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == up)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub theorem: Theorem,
    pub n: usize,
    pub k: usize,
    pub exhaustive: bool,
    pub pass: bool,
    pub checked: u64,
    pub counterexample: Option<String>,
}

impl Verdict {
    pub fn porcelain(&self) -> String {
        let mut s = format!(
            "theorem={}\nn={}\nk={}\nmode={}\npass={}\nchecked={}\n",
            self.theorem,
            self.n,
            self.k,
            if self.exhaustive { "exhaustive" } else { "random" },
            self.pass,
            self.checked
        );
        if let Some(c) = &self.counterexample {
            s += &format!("counterexample={c}\n");
        }
        s
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (n={}, k={}, {}): {} after {} cases",
            self.theorem,
            self.n,
            self.k,
            if self.exhaustive { "exhaustive" } else { "random" },
            if self.pass { "pass" } else { "FAIL" },
            self.checked
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, "\ncounterexample: {c}")?;
        }
        Ok(())
    }
}

/// Shared state for per-object checks.
struct Ctx {
    alg: Algebra,
    n: usize,
    elems: Vec<Elem>,
    stoch: Vec<NVec>,
    /// Unitaries for the brute reducibility search, exhaustive runs only.
    unitaries: Option<Vec<NMat>>,
}

/// `Err` propagates library errors; `Ok(Some(msg))` is a failed case.
type Outcome = Result<Option<String>>;

fn fail(msg: String) -> Outcome {
    Ok(Some(msg))
}

impl Ctx {
    fn new(n: usize, k: usize) -> Self {
        let alg = Algebra::with_atoms(k).expect("k >= 1");
        let elems = if k <= 12 { elements_of(&alg) } else { Vec::new() };
        let stoch = if (n as u128).saturating_pow(k as u32) <= 100_000 {
            stochastic_vectors(&alg, n).collect()
        } else {
            Vec::new()
        };
        Ctx {
            alg,
            n,
            elems,
            stoch,
            unitaries: None,
        }
    }

    fn bvec(&self, v: &[Elem]) -> Result<BVec> {
        BVec::from_elems(v.to_vec())
    }

    fn bmat(&self, m: &NMat) -> Result<BMatrix> {
        BMatrix::from_rows(&self.alg, m.clone())
    }

    fn nmat_of(&self, m: &BMatrix) -> NMat {
        (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect()).collect()
    }

    fn brute_invariant(&self, a: &NMat) -> bool {
        self.stoch.iter().any(|b| naive::apply(a, b) == *b)
    }

    fn norm_case(&self, a: &NVec, b: &NVec, cs: &[Elem]) -> Outcome {
        let (na, nb) = (naive::norm(a), naive::norm(b));
        let ab = naive::inner(a, b);
        let (la, lb) = (self.bvec(a)?, self.bvec(b)?);
        if la.norm() != na || la.inner(&lb)? != ab {
            return fail(format!("library inner/norm differs at {} {}", fmt_vec(a), fmt_vec(b)));
        }
        if ab != naive::inner(b, a) {
            return fail(format!("inner not symmetric at {} {}", fmt_vec(a), fmt_vec(b)));
        }
        if naive::inner(a, a) != na || na.is_zero() != a.iter().all(Elem::is_zero) {
            return fail(format!("inner(a,a) vs norm/definiteness at {}", fmt_vec(a)));
        }
        if naive::norm(&naive::add(a, b)) != naive::join(&na, &nb) {
            return fail(format!("norm of sum at {} {}", fmt_vec(a), fmt_vec(b)));
        }
        if !ab.leq(&naive::meet(&na, &nb))? {
            return fail(format!("inner exceeds product of norms at {} {}", fmt_vec(a), fmt_vec(b)));
        }
        if naive::is_orthovector(a) && naive::is_orthovector(b) && na == nb {
            let full = ab == naive::meet(&na, &nb);
            if full != (a == b) {
                return fail(format!("equal-norm orthovectors at {} {}", fmt_vec(a), fmt_vec(b)));
            }
        }
        if naive::is_stochastic(a) && naive::is_stochastic(b) && ab.is_one() != (a == b) {
            return fail(format!("stochastic inner one at {} {}", fmt_vec(a), fmt_vec(b)));
        }
        for c in cs {
            if naive::norm(&naive::scale(c, a)) != naive::meet(c, &na) {
                return fail(format!("norm(c a) at c={c}, a={}", fmt_vec(a)));
            }
            let lhs = naive::inner(&naive::add(&naive::scale(c, a), b), a);
            let rhs = naive::join(&naive::meet(c, &naive::inner(a, a)), &naive::inner(b, a));
            if lhs != rhs || naive::inner(&naive::scale(c, a), b) != naive::inner(a, &naive::scale(c, b)) {
                return fail(format!("inner linearity at c={c}, a={}, b={}", fmt_vec(a), fmt_vec(b)));
            }
        }
        Ok(None)
    }

    fn descent_case(&self, a: &NVec, b: &NVec) -> Outcome {
        let n = self.n;
        let c: NVec = (0..n - 1)
            .map(|i| naive::join(&naive::meet(&b[n - 1], &a[i]), &b[i]))
            .collect();
        if !naive::is_stochastic(&c) {
            return fail(format!("descent not stochastic for a={}, b={}", fmt_vec(a), fmt_vec(b)));
        }
        if (0..n - 1).any(|i| b[i] != naive::meet(&c[i], &a[i].complement())) {
            return fail(format!("b_i != c_i a_i^c for a={}, b={}", fmt_vec(a), fmt_vec(b)));
        }
        let (la, lb) = (self.bvec(a)?, self.bvec(b)?);
        let lc = bvec::descent(&la, &lb)?;
        if lc.entries() != c {
            return fail(format!("library descent differs for a={}, b={}", fmt_vec(a), fmt_vec(b)));
        }
        if bvec::lift(&la, &lc)? != lb {
            return fail(format!("lift(a, descent(a,b)) != b for a={}, b={}", fmt_vec(a), fmt_vec(b)));
        }
        Ok(None)
    }

    fn to_set(&self, s: &[NVec]) -> Result<VecSet> {
        let vs = s.iter().map(|v| self.bvec(v)).collect::<Result<Vec<_>>>()?;
        VecSet::new(&self.alg, self.n, vs)
    }

    fn incomplete_case(&self, s: &[NVec], brute_generation: bool) -> Outcome {
        let out = self.to_set(s)?.extend_to_basis()?;
        let got: Vec<NVec> = out.iter().map(BVec::entries).collect();
        let shown = || Object::Set(s.to_vec()).to_string();
        if got.len() != self.n || !naive::is_orthonormal(&got) || got[..s.len()] != *s {
            return fail(format!("extension of {} is {}", shown(), Object::Set(got.clone())));
        }
        if brute_generation && !naive::generates(&self.alg, &self.elems, self.n, &got) {
            return fail(format!("extension of {} does not generate", shown()));
        }
        Ok(None)
    }

    fn stoinv_case(&self, a: &NMat) -> Outcome {
        let tr = naive::trace(a);
        let exists = self.brute_invariant(a);
        let shown = || fmt_mat(a);
        if exists != tr.is_one() {
            return fail(format!("invariant exists={exists} but trace={tr} for {}", shown()));
        }
        match bmatrix::find_invariant_stochastic(&[self.bmat(a)?])? {
            Some(b) => {
                let b = b.entries();
                if !exists || !naive::is_stochastic(&b) || naive::apply(a, &b) != b {
                    return fail(format!("library invariant {} wrong for {}", fmt_vec(&b), shown()));
                }
            }
            None if exists => return fail(format!("library missed an invariant for {}", shown())),
            None => {}
        }
        Ok(None)
    }

    fn oddinv_case(&self, a: &NMat) -> Outcome {
        if self.n % 2 == 1 && (!naive::trace(a).is_one() || !self.brute_invariant(a)) {
            return fail(format!("odd symmetric stochastic without invariant: {}", fmt_mat(a)));
        }
        Ok(None)
    }

    /// For even `n`, the block swap pairing sites `(1,2), (3,4), ...`
    /// must have trace zero and no invariant vector.
    fn even_swap_case(&self) -> Outcome {
        let n = self.n;
        let swap: NMat = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if j == (i ^ 1) { self.alg.one() } else { self.alg.zero() })
                    .collect()
            })
            .collect();
        let ok = naive::is_symmetric(&swap)
            && naive::is_stochastic_matrix(&swap)
            && naive::trace(&swap).is_zero()
            && !self.brute_invariant(&swap);
        if ok {
            Ok(None)
        } else {
            fail(format!("even swap {} is not a counterexample", fmt_mat(&swap)))
        }
    }

    fn unitreduce_case(&self, a: &NMat) -> Outcome {
        let tr = naive::trace(a);
        let shown = || fmt_mat(a);
        if let Some(us) = &self.unitaries {
            let brute = us
                .iter()
                .any(|u| naive::fixes_first_axis(&naive::mul(&naive::mul(&naive::adjoint(u), a), u)));
            if brute != tr.is_one() {
                return fail(format!("reducible={brute} but trace={tr} for {}", shown()));
            }
        }
        match bmatrix::reduce_unitary(&[self.bmat(a)?])? {
            Some(red) => {
                let b = self.nmat_of(&red[0].conjugator);
                let c = self.nmat_of(&red[0].core);
                let d = naive::mul(&naive::mul(&b, a), &b);
                let mut block = naive::identity(&self.alg, self.n);
                for i in 0..c.len() {
                    for j in 0..c.len() {
                        block[i + 1][j + 1] = c[i][j].clone();
                    }
                }
                let ok = tr.is_one()
                    && naive::is_symmetric(&b)
                    && naive::is_stochastic_matrix(&b)
                    && naive::fixes_first_axis(&d)
                    && d == block
                    && naive::mul(&naive::mul(&b, &block), &b) == *a;
                if !ok {
                    return fail(format!("library reduction of {} is wrong", shown()));
                }
            }
            None if tr.is_one() => return fail(format!("library failed to reduce {}", shown())),
            None => {}
        }
        Ok(None)
    }

    fn atoms_case(&self, a: &NMat) -> Outcome {
        let n = self.n;
        let mut brute: Vec<Vec<usize>> = odometer(n, n)
            .map(|sel| {
                sel.iter()
                    .enumerate()
                    .fold(self.alg.one(), |acc, (j, &k)| naive::meet(&acc, &a[k][j]))
            })
            .filter(|w| !w.is_zero())
            .map(|w| w.atom_indices())
            .collect();
        brute.sort();
        let lib = chains::matrix_atoms(&self.bmat(a)?)?;
        let mut got: Vec<Vec<usize>> = lib.atoms.iter().map(Elem::atom_indices).collect();
        got.sort();
        let shown = || fmt_mat(a);
        if got != brute {
            return fail(format!("atoms differ from brute force for {}", shown()));
        }
        let joined = lib.atoms.iter().fold(self.alg.zero(), |acc, w| naive::join(&acc, w));
        let disjoint = (0..lib.len()).all(|s| (s + 1..lib.len()).all(|t| naive::meet(&lib.atoms[s], &lib.atoms[t]).is_zero()));
        if !joined.is_one() || !disjoint {
            return fail(format!("atoms do not partition one for {}", shown()));
        }
        for (i, row) in a.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let below = lib
                    .atoms
                    .iter()
                    .filter(|w| w.leq(e).unwrap_or(false))
                    .fold(self.alg.zero(), |acc, w| naive::join(&acc, w));
                if below != *e {
                    return fail(format!("entry ({},{}) is not the join of its atoms in {}", i + 1, j + 1, shown()));
                }
            }
        }
        for (t, w) in lib.atoms.iter().enumerate() {
            for j in 0..n {
                let k = lib.selector(t, j);
                let lhs = naive::apply(a, &naive::scale(w, &naive::delta(&self.alg, n, j)));
                if lhs != naive::scale(w, &naive::delta(&self.alg, n, k)) {
                    return fail(format!("atom {w} does not act as a site map in {}", shown()));
                }
            }
        }
        Ok(None)
    }

    fn power_case(&self, a: &NMat) -> Outcome {
        let n = self.n as u64;
        let l = naive::lcm_upto(n);
        if naive::power(a, l + n - 1) != naive::power(a, n - 1) {
            return fail(format!("A^[n]+n-1 != A^n-1 for {}", fmt_mat(a)));
        }
        if naive::is_unitary(a) && naive::power(a, l) != naive::identity(&self.alg, self.n) {
            return fail(format!("unitary A^[n] != I for {}", fmt_mat(a)));
        }
        if !chains::verify_power_theorem(&self.bmat(a)?)? {
            return fail(format!("library power theorem check false for {}", fmt_mat(a)));
        }
        Ok(None)
    }

    fn period_case(&self, a: &NMat) -> Outcome {
        // Powers until any repeat, by linear search.
        let mut pows: Vec<NMat> = vec![a.clone()];
        let (t, s) = loop {
            let next = naive::mul(pows.last().expect("nonempty"), a);
            if let Some(t) = pows.iter().position(|p| *p == next) {
                break (t + 1, pows.len() + 1);
            }
            pows.push(next);
        };
        let at = |x: usize| -> &NMat {
            let idx = if x < s { x } else { t + (x - t) % (s - t) };
            &pows[idx - 1]
        };
        // Smallest p for which some e works; then smallest e for it.
        let p = (1..=s - t).find(|&p| at(t + p) == at(t)).expect("s - t works");
        let e = (1..=t).find(|&e| at(e + p) == at(e)).expect("t works");
        let shown = || fmt_mat(a);
        let bound = self.n.saturating_sub(1).max(1);
        if e > bound || !naive::lcm_upto(self.n as u64).is_multiple_of(p as u64) {
            return fail(format!("e={e}, p={p} violate the bounds for {}", shown()));
        }
        let prof = chains::power_profile(&self.bmat(a)?)?;
        if (prof.exponent, prof.period) != (e, p) {
            return fail(format!(
                "library profile (e={}, p={}) differs from definition (e={e}, p={p}) for {}",
                prof.exponent,
                prof.period,
                shown()
            ));
        }
        Ok(None)
    }

    fn inverse_case(&self, a: &NMat) -> Outcome {
        let vectors: Vec<NVec> = all_vectors(&self.alg, self.n).collect();
        let mut images: Vec<NVec> = vectors.iter().map(|v| naive::apply(a, v)).collect();
        images.sort_by_key(|v| v.iter().map(Elem::atom_indices).collect::<Vec<_>>());
        images.dedup();
        let invertible = images.len() == vectors.len();
        let unitary = naive::is_unitary(a);
        let onb = |set: Vec<NVec>| naive::is_orthonormal(&set) && naive::generates(&self.alg, &self.elems, self.n, &set);
        let cols = onb(naive::columns(a));
        let rows = onb(a.clone());
        let lib = self.bmat(a)?;
        let shown = || fmt_mat(a);
        if !(invertible == unitary && unitary == cols && cols == rows && rows == lib.is_unitary()) {
            return fail(format!(
                "invertible={invertible}, unitary={unitary}, columns={cols}, rows={rows}, library={} for {}",
                lib.is_unitary(),
                shown()
            ));
        }
        if invertible {
            let inv = self.nmat_of(&lib.invert()?);
            if naive::mul(&inv, a) != naive::identity(&self.alg, self.n) {
                return fail(format!("library inverse wrong for {}", shown()));
            }
        }
        Ok(None)
    }
}

struct Tally {
    checked: u64,
    counterexample: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            counterexample: None,
        }
    }

    /// Records one case; returns `false` to stop at the first failure.
    fn record(&mut self, outcome: Outcome) -> Result<bool> {
        self.checked += 1;
        if let Some(msg) = outcome? {
            self.counterexample = Some(msg);
            return Ok(false);
        }
        Ok(true)
    }

    fn verdict(self, theorem: Theorem, n: usize, k: usize, exhaustive: bool) -> Verdict {
        Verdict {
            theorem,
            n,
            k,
            exhaustive,
            pass: self.counterexample.is_none(),
            checked: self.checked,
            counterexample: self.counterexample,
        }
    }
}

fn require_descent_size(theorem: Theorem, n: usize) -> Result<()> {
    if theorem == Theorem::Descent && n < 2 {
        return Err(Error::Unsupported("DESCENT needs n >= 2".into()));
    }
    Ok(())
}

/// Checks `theorem` over the full enumeration for `(n, k)`, stopping at the
/// first counterexample.
pub fn brute_check(theorem: Theorem, n: usize, k: usize, budget: u128) -> Result<Verdict> {
    if n == 0 || k == 0 {
        return Err(Error::precondition("brute force needs n >= 1 and k >= 1"));
    }
    require_descent_size(theorem, n)?;
    check_budget(theorem.cost(n, k), budget)?;
    let mut ctx = Ctx::new(n, k);
    let mut tally = Tally::new();
    let alg = ctx.alg.clone();
    match theorem {
        Theorem::Norm => {
            let vs: Vec<NVec> = all_vectors(&alg, n).collect();
            'outer: for a in &vs {
                for b in &vs {
                    if !tally.record(ctx.norm_case(a, b, &ctx.elems))? {
                        break 'outer;
                    }
                }
            }
        }
        Theorem::Descent => {
            'outer: for a in &ctx.stoch {
                for b in &ctx.stoch {
                    if naive::inner(a, b).is_zero() && !tally.record(ctx.descent_case(a, b))? {
                        break 'outer;
                    }
                }
            }
        }
        Theorem::Duality | Theorem::BasisUpbound | Theorem::Dimension | Theorem::DimCor2 | Theorem::Incomplete => {
            for s in orthonormal_sets(&alg, n) {
                let outcome = set_case(&ctx, theorem, &s);
                if !tally.record(outcome)? {
                    break;
                }
            }
        }
        Theorem::Inverse => {
            let elems = ctx.elems.clone();
            for d in odometer(elems.len(), n * n) {
                let a: NMat = d.chunks(n).map(|r| r.iter().map(|&i| elems[i].clone()).collect()).collect();
                if !tally.record(ctx.inverse_case(&a))? {
                    break;
                }
            }
        }
        Theorem::StoInv | Theorem::Atoms | Theorem::Power | Theorem::PeriodDivides => {
            for a in stochastic_matrices(&alg, n) {
                let outcome = match theorem {
                    Theorem::StoInv => ctx.stoinv_case(&a),
                    Theorem::Atoms => ctx.atoms_case(&a),
                    Theorem::Power => ctx.power_case(&a),
                    _ => ctx.period_case(&a),
                };
                if !tally.record(outcome)? {
                    break;
                }
            }
        }
        Theorem::OddInv => {
            if n.is_multiple_of(2) {
                tally.record(ctx.even_swap_case())?;
            } else {
                for a in stochastic_matrices(&alg, n).filter(naive::is_symmetric) {
                    if !tally.record(ctx.oddinv_case(&a))? {
                        break;
                    }
                }
            }
        }
        Theorem::UnitReduce => {
            let us: Vec<NMat> = unitary_matrices(&alg, n).collect();
            ctx.unitaries = Some(us.clone());
            for a in &us {
                if !tally.record(ctx.unitreduce_case(a))? {
                    break;
                }
            }
        }
    }
    Ok(tally.verdict(theorem, n, k, true))
}

fn set_case(ctx: &Ctx, theorem: Theorem, s: &[NVec]) -> Outcome {
    let n = ctx.n;
    let shown = || Object::Set(s.to_vec()).to_string();
    let stochastic = s.iter().all(|v| naive::is_stochastic(v));
    match theorem {
        Theorem::BasisUpbound => {
            if stochastic && s.len() > n {
                return fail(format!("stochastic orthonormal set of size {} > n: {}", s.len(), shown()));
            }
        }
        Theorem::Dimension | Theorem::DimCor2 | Theorem::Duality => {
            let generates = naive::generates(&ctx.alg, &ctx.elems, n, s);
            if theorem == Theorem::Dimension && generates && s.len() != n {
                return fail(format!("orthonormal basis of size {}: {}", s.len(), shown()));
            }
            if theorem == Theorem::DimCor2 && generates != (s.len() == n) {
                return fail(format!("generates={generates} with size {}: {}", s.len(), shown()));
            }
            if theorem == Theorem::Duality && !s.is_empty() {
                let transposed: Vec<NVec> = (0..n).map(|i| s.iter().map(|v| v[i].clone()).collect()).collect();
                if generates != naive::is_orthonormal(&transposed) {
                    return fail(format!("generates={generates} but transpose disagrees: {}", shown()));
                }
            }
            if ctx.to_set(s)?.is_basis() != generates {
                return fail(format!("library is_basis disagrees with brute generation: {}", shown()));
            }
        }
        Theorem::Incomplete => {
            if stochastic && s.len() < n {
                return ctx.incomplete_case(s, true);
            }
        }
        _ => unreachable!("not a set theorem"),
    }
    Ok(None)
}

/// Checks `theorem` on `samples` seeded random cases, for sizes beyond
/// exhaustive reach. Theorems whose statement is about all sets or all
/// matrices at once (INVERSE and the dimension family) are exhaustive only.
pub fn random_check(theorem: Theorem, n: usize, k: usize, samples: u64, seed: u64) -> Result<Verdict> {
    if n == 0 || k == 0 {
        return Err(Error::precondition("random checks need n >= 1 and k >= 1"));
    }
    require_descent_size(theorem, n)?;
    let ctx = Ctx::new(n, k);
    let needs_stoch = matches!(theorem, Theorem::StoInv | Theorem::OddInv);
    if needs_stoch && ctx.stoch.is_empty() {
        return Err(Error::Unsupported(format!("{theorem} needs n^k <= 100000 stochastic vectors")));
    }
    let mut rng = random::seeded(seed);
    let alg = ctx.alg.clone();
    let mut tally = Tally::new();
    let nat = |m: &BMatrix| ctx.nmat_of(m);
    for _ in 0..samples {
        let outcome = match theorem {
            Theorem::Norm => {
                let a = random::vector(&alg, n, &mut rng)?.entries();
                let b = random::vector(&alg, n, &mut rng)?.entries();
                let c = [random::elem(&alg, &mut rng)];
                ctx.norm_case(&a, &b, &c)
            }
            Theorem::Descent => {
                let (a, b) = random::orthogonal_stochastic_pair(&alg, n, &mut rng)?;
                ctx.descent_case(&a.entries(), &b.entries())
            }
            Theorem::Incomplete => {
                let m = rng.gen_range(0..n);
                let s = random::stochastic_orthonormal_set(&alg, n, m, &mut rng)?;
                let s: Vec<NVec> = s.iter().map(BVec::entries).collect();
                let brute = pow(2, k).saturating_mul(n as u128) <= 4096 && k <= 12;
                ctx.incomplete_case(&s, brute)
            }
            Theorem::StoInv => ctx.stoinv_case(&nat(&random::stochastic_matrix(&alg, n, &mut rng)?)),
            Theorem::OddInv => {
                if n.is_multiple_of(2) {
                    ctx.even_swap_case()
                } else {
                    ctx.oddinv_case(&nat(&random::symmetric_stochastic(&alg, n, &mut rng)?))
                }
            }
            Theorem::UnitReduce => ctx.unitreduce_case(&nat(&random::unitary(&alg, n, &mut rng)?)),
            Theorem::Atoms => ctx.atoms_case(&nat(&random::stochastic_matrix(&alg, n, &mut rng)?)),
            Theorem::Power => ctx.power_case(&nat(&random::stochastic_matrix(&alg, n, &mut rng)?)),
            Theorem::PeriodDivides => ctx.period_case(&nat(&random::stochastic_matrix(&alg, n, &mut rng)?)),
            Theorem::Duality | Theorem::BasisUpbound | Theorem::Dimension | Theorem::DimCor2 | Theorem::Inverse => {
                return Err(Error::Unsupported(format!("{theorem} is checked exhaustively only")));
            }
        };
        if !tally.record(outcome)? {
            break;
        }
    }
    Ok(tally.verdict(theorem, n, k, false))
}

/// Entrywise order against the inner-product definition
/// `A <= B iff <Aa, b> <= <Ba, b>` for all vectors, by brute force.
pub fn leq_by_inner_products(a: &BMatrix, b: &BMatrix, budget: u128) -> Result<bool> {
    if a.rows() != b.rows() || a.cols() != b.cols() || a.rows() == 0 || a.cols() == 0 {
        return Err(Error::shape("matrix order needs equal non-empty shapes"));
    }
    let alg = a.algebra().clone();
    let spec_in = EnumSpec::new(a.cols(), alg.atom_count(), Kind::AllVectors)?;
    let spec_out = EnumSpec::new(a.rows(), alg.atom_count(), Kind::AllVectors)?;
    check_budget(spec_in.cost().saturating_mul(spec_out.cost()), budget)?;
    let to_n = |m: &BMatrix| -> NMat { (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect()).collect() };
    let (na, nb) = (to_n(a), to_n(b));
    let outs: Vec<NVec> = all_vectors(&alg, a.rows()).collect();
    for x in all_vectors(&alg, a.cols()) {
        let (ax, bx) = (naive::apply(&na, &x), naive::apply(&nb, &x));
        for y in &outs {
            if !naive::inner(&ax, y).leq(&naive::inner(&bx, y))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether the stochastic vectors pushed through `a` all stay stochastic,
/// by brute force over every stochastic vector.
pub fn preserves_stochastic_vectors(a: &BMatrix, budget: u128) -> Result<bool> {
    let spec = EnumSpec::new(a.cols(), a.algebra().atom_count(), Kind::StochasticVectors)?;
    check_budget(spec.cost(), budget)?;
    for v in stochastic_vectors(a.algebra(), a.cols()) {
        if !a.apply(&BVec::from_elems(v)?)?.is_stochastic() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, k: usize, kind: Kind) -> usize {
        enumerate(&EnumSpec::new(n, k, kind).unwrap(), DEFAULT_BUDGET)
            .unwrap()
            .count()
    }

    #[test]
    fn closed_form_counts() {
        assert_eq!(count(2, 2, Kind::StochasticVectors), 4);
        assert_eq!(count(3, 1, Kind::StochasticVectors), 3);
        assert_eq!(count(2, 2, Kind::StochasticMatrices), 16);
        assert_eq!(count(3, 2, Kind::StochasticMatrices), 729);
        assert_eq!(count(2, 3, Kind::StochasticMatrices), 64);
        assert_eq!(count(3, 2, Kind::UnitaryMatrices), 36);
        assert_eq!(count(2, 2, Kind::AllVectors), 16);
        for (n, k) in [(1, 1), (2, 2), (3, 2), (2, 3), (4, 1)] {
            let spec = EnumSpec::new(n, k, Kind::StochasticVectors).unwrap();
            assert_eq!(count(n, k, Kind::StochasticVectors) as u128, spec.cost());
        }
    }

    #[test]
    fn listed_stochastic_vectors() {
        let got: Vec<String> = enumerate(&EnumSpec::new(2, 2, Kind::StochasticVectors).unwrap(), 100)
            .unwrap()
            .map(|o| o.to_string())
            .collect();
        assert_eq!(got, ["(*,{})", "({1},{2})", "({2},{1})", "({},*)"]);
    }

    #[test]
    fn enumerations_are_duplicate_free_and_valid() {
        for kind in Kind::ALL {
            let spec = EnumSpec::new(2, 2, kind).unwrap();
            let en = enumerate(&spec, DEFAULT_BUDGET).unwrap();
            let alg = en.algebra().clone();
            let objs: Vec<Object> = en.collect();
            let mut shown: Vec<String> = objs.iter().map(|o| o.to_string()).collect();
            shown.sort();
            shown.dedup();
            assert_eq!(shown.len(), objs.len(), "{kind}");
            for o in &objs {
                match kind {
                    Kind::StochasticVectors => assert!(o.to_bvec().unwrap().is_stochastic()),
                    Kind::StochasticMatrices => assert!(o.to_bmatrix(&alg).unwrap().is_stochastic().unwrap()),
                    Kind::UnitaryMatrices => assert!(o.to_bmatrix(&alg).unwrap().is_unitary()),
                    Kind::OrthonormalSets => assert!(o.to_vecset(&alg, 2).unwrap().is_orthonormal()),
                    Kind::AllVectors => assert!(o.to_bvec().is_some()),
                }
            }
        }
    }

    #[test]
    fn budget_refuses() {
        let spec = EnumSpec::new(3, 2, Kind::StochasticMatrices).unwrap();
        match enumerate(&spec, 100) {
            Err(Error::BudgetExceeded { required, budget }) => assert_eq!((required, budget), (729, 100)),
            other => panic!("expected refusal, got {:?}", other.map(|_| ())),
        }
        assert!(matches!(
            brute_check(Theorem::Power, 5, 5, DEFAULT_BUDGET),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn theorem_ids() {
        for t in Theorem::ALL {
            assert_eq!(t.id().parse::<Theorem>().unwrap(), t);
        }
        assert_eq!("stoinv".parse::<Theorem>().unwrap(), Theorem::StoInv);
        assert_eq!("NOPE".parse::<Theorem>(), Err(Error::UnknownTheorem("NOPE".into())));
    }

    #[test]
    fn spec_examples_pass() {
        for (t, n, k) in [(Theorem::Dimension, 2, 2), (Theorem::StoInv, 3, 2), (Theorem::Power, 2, 3)] {
            let v = brute_check(t, n, k, DEFAULT_BUDGET).unwrap();
            assert!(v.pass, "{v}");
            assert!(v.checked > 0);
        }
        assert_eq!(brute_check(Theorem::StoInv, 3, 2, DEFAULT_BUDGET).unwrap().checked, 729);
        // (2^3)^2 stochastic matrices; 4096 is the count of all 2x2 matrices.
        assert_eq!(brute_check(Theorem::Power, 2, 3, DEFAULT_BUDGET).unwrap().checked, 64);
    }

    #[test]
    fn every_theorem_passes_small() {
        for t in Theorem::ALL {
            for (n, k) in [(1, 1), (2, 1), (2, 2), (3, 1)] {
                if t == Theorem::Descent && n < 2 {
                    continue;
                }
                let v = brute_check(t, n, k, DEFAULT_BUDGET).unwrap();
                assert!(v.pass, "{v}");
            }
        }
    }

    #[test]
    fn random_checks_pass() {
        for t in [
            Theorem::Norm,
            Theorem::Descent,
            Theorem::Incomplete,
            Theorem::StoInv,
            Theorem::OddInv,
            Theorem::UnitReduce,
            Theorem::Atoms,
            Theorem::Power,
            Theorem::PeriodDivides,
        ] {
            let v = random_check(t, 4, 3, 20, 11).unwrap();
            assert!(v.pass && !v.exhaustive, "{v}");
        }
        assert!(random_check(Theorem::Inverse, 2, 2, 1, 0).is_err());
    }

    #[test]
    fn matrix_order_forms_agree() {
        let alg = Algebra::with_atoms(2).unwrap();
        let mats: Vec<BMatrix> = all_vectors(&alg, 2)
            .map(|v| BMatrix::from_rows(&alg, vec![v.clone(), v.into_iter().rev().collect()]).unwrap())
            .collect();
        for a in &mats {
            for b in &mats {
                assert_eq!(a.leq(b).unwrap(), leq_by_inner_products(a, b, DEFAULT_BUDGET).unwrap());
            }
        }
    }
}
