//! Vectors in L_n(B): join as addition, meet as scalar action, and the
//! B-valued inner product.

use boolspace::{Algebra, BVec, Result};

fn main() -> Result<()> {
    let p3 = Algebra::with_atoms(3)?;
    let a = BVec::parse(&p3, "({1},{2,3})")?;
    let b = BVec::parse(&p3, "({1,2},{3})")?;
    let c = p3.parse_elem("{1,2}")?;

    println!("a + b      = {}", a.add(&b)?);
    println!("{c} · a    = {}", a.scalar_mul(&c)?);
    println!("<a, b>     = {}", a.inner(&b)?);
    println!("||a||      = {}", a.norm());

    let s = BVec::parse(&p3, "({1},{2},{3})")?;
    let t = s.rotate(1);
    println!("{s} stochastic: {}", s.is_stochastic());
    println!("{s} ⊥ {t}: {}", s.orthogonal(&t)?);

    // A unit vector shrinks to a stochastic one below it.
    let u = BVec::parse(&p3, "({1,2},{2,3},{1,3})")?;
    println!("disjointify {u} = {}", u.disjointify()?);
    Ok(())
}
