//! A stochastic matrix has an invariant stochastic vector exactly when its
//! trace is one; symmetric ones of odd size always do.

use boolspace::{find_invariant_stochastic, joint_trace, random, reduce_unitary, Algebra, BMatrix, Result};

fn main() -> Result<()> {
    let p2 = Algebra::with_atoms(2)?;
    let swap = BMatrix::parse_rows(&p2, "{} *\n* {}")?;
    println!("swap: trace {}, invariant {:?}", swap.trace()?, find_invariant_stochastic(std::slice::from_ref(&swap))?);

    let collapse = BMatrix::parse_rows(&p2, "* *\n{} {}")?;
    let b = find_invariant_stochastic(std::slice::from_ref(&collapse))?.expect("trace is one");
    println!("[[1,1],[0,0]]: invariant {b}, but reduce_unitary refuses: {}", reduce_unitary(&[collapse]).is_err());

    let p4 = Algebra::with_atoms(4)?;
    let mut rng = random::seeded(5);
    let ms: Vec<BMatrix> = (0..3).map(|_| random::stochastic_matrix(&p4, 4, &mut rng)).collect::<Result<_>>()?;
    println!("joint trace of three random 4×4: {}", joint_trace(&ms)?);
    match find_invariant_stochastic(&ms)? {
        Some(b) => println!("common invariant {b}"),
        None => println!("no common invariant"),
    }

    let mut with_trace_one = 0;
    for _ in 0..200 {
        let s = random::symmetric_stochastic(&p4, 5, &mut rng)?;
        with_trace_one += usize::from(s.trace()?.is_one());
    }
    println!("symmetric stochastic 5×5 with trace one: {with_trace_one}/200");
    Ok(())
}
