mod common;

use boolspace::*;
use common::fixture;

fn load(name: &str) -> ModelFile {
    ModelFile::parse(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap()
}

#[test]
fn unitary_reduction_example() {
    let m = load("paper_s5.bm");
    let (a, b, r, bab, c) = (
        m.matrix("A").unwrap(),
        m.vector("b").unwrap(),
        m.matrix("B").unwrap(),
        m.matrix("BAB").unwrap(),
        m.matrix("C").unwrap(),
    );
    assert!(a.is_unitary() && a.trace().unwrap().is_one());
    // The disjointified diagonal picks a different invariant vector than b.
    let found = find_invariant_stochastic(std::slice::from_ref(a)).unwrap().unwrap();
    assert_eq!(found.to_string(), "({1},{4,5},{},{2,3},{})");
    assert_eq!(a.apply(&found).unwrap(), found);
    assert!(b.is_stochastic());
    assert_eq!(a.apply(b).unwrap(), *b);
    assert_eq!(&reflection_from(b).unwrap(), r);
    assert_eq!(&r.mul(a).unwrap().mul(r).unwrap(), bab);
    assert_eq!(&r.mul(bab).unwrap().mul(r).unwrap(), a);
    assert_eq!(bab.trailing(1), *c);
    assert!(bab.fixes_first_axis());
    assert_eq!(c.trace().unwrap().to_string(), "{4,5}");
    assert!(find_invariant_stochastic(std::slice::from_ref(c)).unwrap().is_none());
    let set = VecSet::from_vectors(vec![b.clone()]).unwrap();
    let red = reduce_by_orthogonal_set(a, &set).unwrap();
    assert_eq!((&red.conjugator, &red.core, red.fixed_count), (r, c, 1));
}

#[test]
fn final_chain_example() {
    let m = load("s6_final.bm");
    let a = m.matrix("A").unwrap();
    assert!(a.is_stochastic().unwrap() && !a.is_unitary());
    assert_eq!(&a.mul(a).unwrap(), m.matrix("A2").unwrap());
    let prof = power_profile(a).unwrap();
    assert_eq!((prof.exponent, prof.period), (1, 2));
    assert_eq!(a.power(3).unwrap(), *a);
    let rep = relation_report(a).unwrap();
    assert_eq!(rep.transitivity_witness, Some((1, 2, 3)));
    assert!(!rep.is_transitive() && !rep.is_equivalence());
}

#[test]
fn orthonormal_basis_example() {
    let m = load("s3_basis.bm");
    let u = m.matrix("U").unwrap();
    assert!(u.is_unitary());
    let cols = u.column_set().unwrap();
    let named: Vec<BVec> = ["u1", "u2", "u3"].iter().map(|n| m.vector(n).unwrap().clone()).collect();
    assert_eq!(cols.vectors(), &named[..]);
    assert!(cols.is_basis() && cols.is_stochastic());
    assert!(u.row_set().unwrap().is_basis());
    let ext = VecSet::from_vectors(named[..1].to_vec()).unwrap().extend_to_basis().unwrap();
    assert!(ext.is_basis());
}

#[test]
fn reflection_examples() {
    let m = load("s4_reflections.bm");
    let (r1, r2, p) = (m.matrix("R1").unwrap(), m.matrix("R2").unwrap(), m.matrix("R1R2").unwrap());
    assert!(r1.is_symmetric() && r2.is_symmetric());
    assert_eq!(&r1.mul(r2).unwrap(), p);
    assert!(p.is_unitary() && !p.is_symmetric());
    let s = m.matrix("S").unwrap();
    assert!(s.is_stochastic().unwrap() && s.trace().unwrap().is_one() && !s.is_unitary());
    assert!(s.invert().is_err());
    let w = m.matrix("W").unwrap();
    assert!(w.trace().unwrap().is_zero());
    assert!(find_invariant_stochastic(std::slice::from_ref(w)).unwrap().is_none());
}
