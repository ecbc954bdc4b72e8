//! Model files: parse, inspect, and print back.

use boolspace::{ModelFile, Result};

fn main() -> Result<()> {
    let text = "atoms: a b c\n\
                # a permutation per atom\n\
                matrix P 3x3\n\
                {a}   {b,c} {}\n\
                {b,c} {a}   {}\n\
                {}    {}    *\n\
                vector v 3\n\
                {a} {b} {c}\n";
    let model = ModelFile::parse(text)?;
    let p = model.matrix("P")?;
    let v = model.vector("v")?;
    println!("P unitary: {}, P·v = {}", p.is_unitary(), p.apply(v)?);
    print!("{model}");

    match ModelFile::parse("atoms: a b\nvector w 2\n{a,} {b}\n") {
        Err(e) => println!("malformed literal: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
