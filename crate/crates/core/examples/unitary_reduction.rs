//! Reducing a 5×5 unitary matrix with trace one to diag(1, C) by a
//! reflection built from an invariant stochastic vector.

use boolspace::{reduce_fully, reduce_unitary, reflection_from, ModelFile, Result};

const MODEL: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/paper_s5.bm"));

fn main() -> Result<()> {
    let model = ModelFile::parse(MODEL)?;
    let a = model.matrix("A")?;
    println!("A =\n{a}\ntr(A) = {}, unitary: {}\n", a.trace()?, a.is_unitary());

    // The reflection from the fixture's vector reproduces the printed B.
    let b = model.vector("b")?;
    let refl = reflection_from(b)?;
    let bab = refl.mul(a)?.mul(&refl)?;
    println!("B from {b}:\n{refl}\n\nBAB =\n{bab}");
    println!("matches fixture: B {}, BAB {}\n", refl == *model.matrix("B")?, bab == *model.matrix("BAB")?);

    // The library's own invariant vector gives a different B with the same
    // conclusion: the core has trace {4,5}, so no further reduction.
    let red = &reduce_unitary(std::slice::from_ref(a))?.expect("trace is one")[0];
    println!("library B =\n{}\n\nC =\n{}\ntr(C) = {}", red.conjugator, red.core, red.core.trace()?);
    let full = reduce_fully(a)?;
    println!("full reduction fixes {} axis; reconstructs A: {}", full.fixed_count, full.reconstruct()? == *a);
    Ok(())
}
