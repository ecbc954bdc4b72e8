//! Boolean Markov chains: a stochastic matrix read column-wise, entry
//! `a_ij` being the event of a transition from site `j` to site `i`.
//!
//! Atoms of a matrix split the dynamics into disjoint deterministic
//! maps, one per atom, which is where the power theorem
//! `A^{[n]+n-1} = A^{n-1}` comes from.

use std::collections::HashMap;
use std::fmt;

use crate::algebra::Elem;
use crate::bmatrix::BMatrix;
use crate::error::{Error, Result};
use crate::words;

/// `[n] = lcm(1, ..., n)`, with `[0] = 1`.
///
/// # Panics
/// On `u64` overflow, which first happens at `n = 47`.
pub fn lcm_upto(n: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    (1..=n).fold(1u64, |acc, i| {
        (acc / gcd(acc, i))
            .checked_mul(i)
            .unwrap_or_else(|| panic!("lcm(1..={n}) overflows u64"))
    })
}

/// The nonzero column-selection products `a_{k_1 1} ... a_{k_n n}` of a
/// stochastic matrix. `selectors[t][j]` is the row `k` with
/// `atoms[t] <= a_kj`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixAtoms {
    pub atoms: Vec<Elem>,
    pub selectors: Vec<Vec<usize>>,
}

impl MatrixAtoms {
    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// The row that atom `t` selects in column `j`.
    pub fn selector(&self, t: usize, j: usize) -> usize {
        self.selectors[t][j]
    }
}

/// Enumerates the atoms of `a` depth-first across columns, pruning as soon
/// as a partial meet is empty.
pub fn matrix_atoms(a: &BMatrix) -> Result<MatrixAtoms> {
    if !a.is_stochastic()? {
        return Err(Error::precondition("matrix atoms are defined for stochastic matrices"));
    }
    let alg = a.algebra();
    let n = a.rows();
    let mut out = MatrixAtoms {
        atoms: Vec::new(),
        selectors: Vec::new(),
    };
    let mut path = Vec::with_capacity(n);
    dfs(a, 0, alg.full_words().to_vec(), &mut path, &mut out);
    Ok(out)
}

fn dfs(a: &BMatrix, j: usize, acc: Vec<u64>, path: &mut Vec<usize>, out: &mut MatrixAtoms) {
    if j == a.cols() {
        out.atoms.push(a.algebra().elem_from_slice(&acc));
        out.selectors.push(path.clone());
        return;
    }
    let mut next = vec![0; acc.len()];
    for k in 0..a.rows() {
        words::and_into(&mut next, &acc, a.entry(k, j));
        if !words::is_zero(&next) {
            path.push(k);
            dfs(a, j + 1, next.clone(), path, out);
            path.pop();
        }
    }
}

/// The eventually periodic power sequence of a square matrix:
/// `A^{e+p} = A^e` with `p` minimal and then `e` minimal, both at least 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerProfile {
    pub exponent: usize,
    pub period: usize,
    /// The distinct powers `A^1, ..., A^{e+p-1}`.
    pub prefix_powers: Vec<BMatrix>,
}

impl PowerProfile {
    /// `A^s` for `s >= 1`, read off the stored powers.
    pub fn power(&self, s: u64) -> &BMatrix {
        assert!(s >= 1, "profiles only cover positive powers");
        let (e, p) = (self.exponent as u64, self.period as u64);
        let idx = if s < e + p { s } else { e + (s - e) % p };
        &self.prefix_powers[(idx - 1) as usize]
    }
}

/// Computes `A, A^2, ...` until the first repeat `A^s = A^t`, `t < s`; then
/// `e = t` and `p = s - t`.
pub fn power_profile(a: &BMatrix) -> Result<PowerProfile> {
    if !a.is_square() || a.rows() == 0 {
        return Err(Error::shape(format!(
            "power profile needs a non-empty square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let mut seen: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut prefix = Vec::new();
    let mut cur = a.clone();
    let mut s = 1;
    let (exponent, period) = loop {
        if let Some(&t) = seen.get(cur.raw()) {
            break (t, s - t);
        }
        seen.insert(cur.raw().to_vec(), s);
        let next = cur.mul(a)?;
        prefix.push(cur);
        cur = next;
        s += 1;
    };
    let n = a.rows();
    debug_assert!(exponent <= (n - 1) * (n - 1) + 1);
    if cfg!(debug_assertions) && a.is_stochastic()? {
        debug_assert!(exponent <= stochastic_exponent_bound(n));
        debug_assert_eq!(lcm_upto(n as u64) % period as u64, 0);
    }
    Ok(PowerProfile {
        exponent,
        period,
        prefix_powers: prefix,
    })
}

/// The exponent bound for `n × n` stochastic matrices. Exponents are at
/// least one, so `1 × 1` gets bound 1 rather than `n - 1 = 0`.
pub fn stochastic_exponent_bound(n: usize) -> usize {
    n.saturating_sub(1).max(1)
}

/// Checks `A^{[n]+n-1} = A^{n-1}` bit-exactly, and additionally
/// `A^{[n]} = I` when `A` is unitary. A `false` result is a bug.
pub fn verify_power_theorem(a: &BMatrix) -> Result<bool> {
    if !a.is_stochastic()? {
        return Err(Error::precondition("the power theorem is stated for stochastic matrices"));
    }
    let n = a.rows() as u64;
    let l = lcm_upto(n);
    let holds = a.power(l + n - 1)? == a.power(n - 1)?;
    if a.is_unitary() {
        return Ok(holds && a.power(l)? == BMatrix::identity(a.algebra(), a.rows()));
    }
    Ok(holds)
}

fn check_site(n: usize, site: usize) -> Result<()> {
    if (1..=n).contains(&site) {
        Ok(())
    } else {
        Err(Error::precondition(format!("site {site} is outside 1..{n}")))
    }
}

fn require_stochastic(a: &BMatrix) -> Result<()> {
    if a.is_stochastic()? {
        Ok(())
    } else {
        Err(Error::precondition("reachability is defined for stochastic matrices"))
    }
}

/// `j → i`: some positive power has `(A^s)_ij ≠ ∅`. Sites are 1-based.
pub fn reachable(a: &BMatrix, j: usize, i: usize) -> Result<bool> {
    require_stochastic(a)?;
    check_site(a.rows(), j)?;
    check_site(a.rows(), i)?;
    let profile = power_profile(a)?;
    Ok(accessible_from_powers(&profile, j - 1, i - 1))
}

fn accessible_from_powers(profile: &PowerProfile, j: usize, i: usize) -> bool {
    profile
        .prefix_powers
        .iter()
        .any(|m| !words::is_zero(m.entry(i, j)))
}

/// `j → i` computed atom by atom: each atom of the algebra follows a
/// deterministic path `j ↦ k` with atom `∈ a_kj`, and `i` is reachable if
/// some atom's path from `j` visits it. Independent of matrix powers.
pub fn reachable_atomwise(a: &BMatrix, j: usize, i: usize) -> Result<bool> {
    require_stochastic(a)?;
    let n = a.rows();
    check_site(n, j)?;
    check_site(n, i)?;
    for atom in 0..a.algebra().atom_count() {
        let step = |from: usize| {
            (0..n)
                .find(|&k| a.get(k, from).contains_atom(atom))
                .expect("stochastic columns cover every atom")
        };
        let mut visited = vec![false; n];
        let mut cur = step(j - 1);
        while !visited[cur] {
            if cur == i - 1 {
                return Ok(true);
            }
            visited[cur] = true;
            cur = step(cur);
        }
    }
    Ok(false)
}

/// Why `↔` fails to be an equivalence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquivalenceFailure {
    NotReflexive(usize),
    NotTransitive(usize, usize, usize),
}

/// Accessibility `→` and mutual accessibility `↔` on the sites of a chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub sites: usize,
    /// All `(j, i)` with `j → i`, lexicographic, 1-based.
    pub accessible: Vec<(usize, usize)>,
    /// All `(x, y)` with `x <= y` and `x ↔ y`.
    pub mutual: Vec<(usize, usize)>,
    /// The first triple `(x, y, z)` with `x → y`, `y → z`, `x ↛ z`.
    pub transitivity_witness: Option<(usize, usize, usize)>,
    pub equivalence_failure: Option<EquivalenceFailure>,
}

impl RelationReport {
    pub fn is_transitive(&self) -> bool {
        self.transitivity_witness.is_none()
    }

    pub fn is_equivalence(&self) -> bool {
        self.equivalence_failure.is_none()
    }

    pub fn accessible(&self, j: usize, i: usize) -> bool {
        self.accessible.binary_search(&(j, i)).is_ok()
    }

    pub fn mutual(&self, x: usize, y: usize) -> bool {
        self.mutual.binary_search(&(x.min(y), x.max(y))).is_ok()
    }

    /// Stable `key=value` lines.
    pub fn porcelain(&self) -> String {
        let pairs = |v: &[(usize, usize)]| {
            v.iter()
                .map(|(a, b)| format!("{a}:{b}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        let mut out = format!(
            "sites={}\naccessible={}\nmutual={}\ntransitive={}\n",
            self.sites,
            pairs(&self.accessible),
            pairs(&self.mutual),
            self.is_transitive()
        );
        if let Some((x, y, z)) = self.transitivity_witness {
            out += &format!("transitivity_witness={x},{y},{z}\n");
        }
        out += &format!("equivalence={}\n", self.is_equivalence());
        match self.equivalence_failure {
            Some(EquivalenceFailure::NotReflexive(x)) => out += &format!("equivalence_witness=reflexive,{x}\n"),
            Some(EquivalenceFailure::NotTransitive(x, y, z)) => {
                out += &format!("equivalence_witness=transitive,{x},{y},{z}\n")
            }
            None => {}
        }
        out
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let acc: Vec<String> = self.accessible.iter().map(|(j, i)| format!("{j}→{i}")).collect();
        let mutual: Vec<String> = self.mutual.iter().map(|(x, y)| format!("{x}↔{y}")).collect();
        writeln!(f, "accessible: {}", acc.join(", "))?;
        writeln!(f, "mutual: {}", mutual.join(", "))?;
        match self.transitivity_witness {
            Some((x, y, z)) => writeln!(f, "{x}→{y}, {y}→{z}, ¬{x}→{z}; → is not transitive")?,
            None => writeln!(f, "→ is transitive")?,
        }
        match self.equivalence_failure {
            Some(EquivalenceFailure::NotReflexive(x)) => {
                write!(f, "¬{x}↔{x}; ↔ is not an equivalence relation")
            }
            Some(EquivalenceFailure::NotTransitive(x, y, z)) => {
                write!(f, "{x}↔{y}, {y}↔{z}, ¬{x}↔{z}; ↔ is not an equivalence relation")
            }
            None => write!(f, "↔ is an equivalence relation"),
        }
    }
}

/// The full accessibility picture of a stochastic matrix, from its
/// distinct powers.
pub fn relation_report(a: &BMatrix) -> Result<RelationReport> {
    require_stochastic(a)?;
    let n = a.rows();
    let profile = power_profile(a)?;
    let mut reach = vec![vec![false; n]; n];
    for (j, row) in reach.iter_mut().enumerate() {
        for (i, r) in row.iter_mut().enumerate() {
            *r = accessible_from_powers(&profile, j, i);
        }
    }
    let to = |j: usize, i: usize| reach[j - 1][i - 1];
    let both = |x: usize, y: usize| to(x, y) && to(y, x);
    let sites = || 1..=n;

    let accessible = sites()
        .flat_map(|j| sites().map(move |i| (j, i)))
        .filter(|&(j, i)| to(j, i))
        .collect();
    let mutual = sites()
        .flat_map(|x| (x..=n).map(move |y| (x, y)))
        .filter(|&(x, y)| both(x, y))
        .collect();
    let first_failure = |rel: &dyn Fn(usize, usize) -> bool| {
        sites()
            .flat_map(|x| sites().flat_map(move |y| sites().map(move |z| (x, y, z))))
            .find(|&(x, y, z)| rel(x, y) && rel(y, z) && !rel(x, z))
    };
    let transitivity_witness = first_failure(&to);
    let equivalence_failure = match sites().find(|&x| !both(x, x)) {
        Some(x) => Some(EquivalenceFailure::NotReflexive(x)),
        None => first_failure(&both).map(|(x, y, z)| EquivalenceFailure::NotTransitive(x, y, z)),
    };
    Ok(RelationReport {
        sites: n,
        accessible,
        mutual,
        transitivity_witness,
        equivalence_failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::bvec::BVec;

    fn s6_final() -> BMatrix {
        let alg = Algebra::with_atoms(3).unwrap();
        BMatrix::parse_rows(&alg, "{2,3} {1} {}\n{1} {2} {1}\n{} {3} {2,3}").unwrap()
    }

    #[test]
    fn lcm_values() {
        assert_eq!(lcm_upto(0), 1);
        assert_eq!(lcm_upto(1), 1);
        assert_eq!(lcm_upto(3), 6);
        assert_eq!(lcm_upto(4), 12);
        assert_eq!(lcm_upto(5), 60);
        assert_eq!(lcm_upto(46), 9_419_588_158_802_421_600);
    }

    #[test]
    #[should_panic(expected = "overflows")]
    fn lcm_overflow_panics() {
        lcm_upto(47);
    }

    #[test]
    fn atoms_of_identity_and_example() {
        let p2 = Algebra::with_atoms(2).unwrap();
        let id = matrix_atoms(&BMatrix::identity(&p2, 3)).unwrap();
        assert_eq!(id.atoms, vec![p2.one()]);
        assert_eq!(id.selectors, vec![vec![0, 1, 2]]);

        let a = s6_final();
        let at = matrix_atoms(&a).unwrap();
        let mut names: Vec<String> = at.atoms.iter().map(|e| e.to_string()).collect();
        names.sort();
        assert_eq!(names, ["{1}", "{2}", "{3}"]);
        for (t, w) in at.atoms.iter().enumerate() {
            for j in 0..3 {
                let v = BVec::delta(a.algebra(), 3, j).unwrap().scalar_mul(w).unwrap();
                let k = at.selector(t, j);
                let expect = BVec::delta(a.algebra(), 3, k).unwrap().scalar_mul(w).unwrap();
                assert_eq!(a.apply(&v).unwrap(), expect);
            }
        }
        let not = BMatrix::parse_rows(&p2, "{1} {}\n{} {2}").unwrap();
        assert!(matrix_atoms(&not).is_err());
    }

    #[test]
    fn profiles() {
        let p2 = Algebra::with_atoms(2).unwrap();
        let id = power_profile(&BMatrix::identity(&p2, 3)).unwrap();
        assert_eq!((id.exponent, id.period), (1, 1));

        let a = s6_final();
        let prof = power_profile(&a).unwrap();
        assert_eq!((prof.exponent, prof.period), (1, 2));
        assert_eq!(prof.prefix_powers.len(), 2);
        for s in 1..20 {
            assert_eq!(prof.power(s), &a.power(s).unwrap());
        }

        let nil = BMatrix::parse_rows(&p2, "{} *\n{} {}").unwrap();
        let pn = power_profile(&nil).unwrap();
        assert_eq!((pn.exponent, pn.period), (2, 1));
        assert!(power_profile(&BMatrix::zeros(&p2, 2, 3)).is_err());
    }

    #[test]
    fn power_theorem_examples() {
        assert!(verify_power_theorem(&s6_final()).unwrap());
        let p5 = Algebra::with_atoms(5).unwrap();
        let cycle = BMatrix::parse_rows(
            &p5,
            "{} {} {} {} *\n* {} {} {} {}\n{} * {} {} {}\n{} {} * {} {}\n{} {} {} * {}",
        )
        .unwrap();
        assert!(verify_power_theorem(&cycle).unwrap());
        assert_eq!(cycle.power(60).unwrap(), BMatrix::identity(&p5, 5));
        assert!(verify_power_theorem(&BMatrix::identity(&p5, 1)).unwrap());
    }

    #[test]
    fn reachability_of_example() {
        let a = s6_final();
        assert!(reachable(&a, 1, 2).unwrap());
        assert!(reachable(&a, 2, 3).unwrap());
        assert!(!reachable(&a, 1, 3).unwrap());
        assert!(reachable(&a, 4, 1).is_err());
        for j in 1..=3 {
            for i in 1..=3 {
                assert_eq!(reachable(&a, j, i).unwrap(), reachable_atomwise(&a, j, i).unwrap());
            }
        }

        let r = relation_report(&a).unwrap();
        assert_eq!(
            r.accessible,
            vec![(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)]
        );
        assert!(r.mutual(1, 2) && r.mutual(2, 3) && !r.mutual(1, 3));
        assert_eq!(r.transitivity_witness, Some((1, 2, 3)));
        assert_eq!(r.equivalence_failure, Some(EquivalenceFailure::NotTransitive(1, 2, 3)));
        let text = r.to_string();
        assert!(text.contains("1→2, 2→3, ¬1→3; → is not transitive"), "{text}");
        assert!(text.contains("1↔2, 2↔3, ¬1↔3"), "{text}");
    }

    #[test]
    fn identity_relation() {
        let p2 = Algebra::with_atoms(2).unwrap();
        let r = relation_report(&BMatrix::identity(&p2, 3)).unwrap();
        assert_eq!(r.accessible, vec![(1, 1), (2, 2), (3, 3)]);
        assert!(r.is_transitive() && r.is_equivalence());
        assert!(r.porcelain().contains("equivalence=true"));
    }
}
