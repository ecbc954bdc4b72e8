//! Brute-force verification of every registered theorem on tiny cases.

use boolspace::oracle::{brute_check, random_check, Theorem, DEFAULT_BUDGET};
use boolspace::{Error, Result};

fn main() -> Result<()> {
    for t in Theorem::ALL {
        for (n, k) in [(2, 2), (3, 2), (2, 3)] {
            match brute_check(t, n, k, DEFAULT_BUDGET) {
                Ok(v) => println!("{v}"),
                Err(Error::BudgetExceeded { required, .. }) => {
                    println!("{t} (n={n}, k={k}): skipped, needs {required}")
                }
                Err(e) => return Err(e),
            }
        }
    }
    println!("{}", random_check(Theorem::PeriodDivides, 5, 5, 200, 9)?);
    Ok(())
}
