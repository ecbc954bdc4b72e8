//! Powers of stochastic matrices: A^{[n]+n-1} = A^{n-1}, with exponent at
//! most n-1 and period dividing [n].

use boolspace::chains::stochastic_exponent_bound;
use boolspace::{lcm_upto, power_profile, random, verify_power_theorem, Algebra, Result};

fn main() -> Result<()> {
    let p5 = Algebra::with_atoms(5)?;
    let mut rng = random::seeded(42);
    for n in 2..=6 {
        let l = lcm_upto(n as u64);
        let (mut max_e, mut periods) = (0, std::collections::BTreeSet::new());
        for _ in 0..200 {
            let a = random::stochastic_matrix(&p5, n, &mut rng)?;
            assert!(verify_power_theorem(&a)?);
            let prof = power_profile(&a)?;
            max_e = max_e.max(prof.exponent);
            periods.insert(prof.period);
        }
        println!(
            "n={n}: [n]={l}, A^{} = A^{} on 200 samples; max e = {max_e} (bound {}), periods seen {periods:?}",
            l + n as u64 - 1,
            n - 1,
            stochastic_exponent_bound(n)
        );
    }

    let u = random::unitary(&p5, 4, &mut rng)?;
    println!("random 4×4 unitary: A^12 = I is {}", u.power(12)? == boolspace::BMatrix::identity(&p5, 4));
    Ok(())
}
