//! Accessibility between sites of a Boolean Markov chain need not be
//! transitive.

use boolspace::{matrix_atoms, power_profile, relation_report, ModelFile, Result};

const MODEL: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/s6_final.bm"));

fn main() -> Result<()> {
    let model = ModelFile::parse(MODEL)?;
    let a = model.matrix("A")?;
    println!("A =\n{a}\n");

    let prof = power_profile(a)?;
    println!("e = {}, p = {}; A^2 matches the fixture: {}", prof.exponent, prof.period, prof.power(2) == model.matrix("A2")?);

    let atoms = matrix_atoms(a)?;
    for (t, w) in atoms.atoms.iter().enumerate() {
        let map: Vec<String> = atoms.selectors[t].iter().enumerate().map(|(j, k)| format!("{}↦{}", j + 1, k + 1)).collect();
        println!("atom {w}: {}", map.join(" "));
    }
    println!();
    println!("{}", relation_report(a)?);
    Ok(())
}
