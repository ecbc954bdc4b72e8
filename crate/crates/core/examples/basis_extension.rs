//! Orthonormal bases: cyclic bases, coordinates, descent/lift, and
//! extending a stochastic orthonormal set to a basis.

use boolspace::{cyclic_basis, descent, lift, random, Algebra, BVec, Result, VecSet};

fn main() -> Result<()> {
    let p3 = Algebra::with_atoms(3)?;
    let a = BVec::parse(&p3, "({1},{2},{3})")?;

    let e = cyclic_basis(&a)?;
    println!("cyclic basis of {a}:");
    for v in &e {
        println!("  {v}");
    }
    let d1 = BVec::delta(&p3, 3, 0)?;
    let coords: Vec<String> = e.coordinates(&d1)?.iter().map(|c| c.to_string()).collect();
    println!("coordinates of δ_1: {}", coords.join(", "));

    let b = a.rotate(1);
    let c = descent(&a, &b)?;
    println!("descent({a}, {b}) = {c}; lift back = {}", lift(&a, &c)?);

    let two = VecSet::from_vectors(vec![a.clone(), b])?;
    println!("extension of {{{a}, {}}}:", a.rotate(1));
    for v in &two.extend_to_basis()? {
        println!("  {v}");
    }

    // A random partial set in L_5 over five atoms.
    let p5 = Algebra::with_atoms(5)?;
    let mut rng = random::seeded(2024);
    let s = random::stochastic_orthonormal_set(&p5, 5, 2, &mut rng)?;
    let full = s.extend_to_basis()?;
    println!("random 2-set in L_5 extends to a basis: {}", full.is_basis());
    for v in &full {
        println!("  {v}");
    }
    Ok(())
}
