//! Acceptance criteria 1–10, one `[PASS]`/`[FAIL]` line each. Every count,
//! seed and time limit is pinned below.

use std::hint::black_box;
use std::time::{Duration, Instant};

use boolspace::chains::stochastic_exponent_bound;
use boolspace::oracle::{self, EnumSpec, Kind, Theorem};
use boolspace::random::{self, seeded};
use boolspace::*;
use rand::Rng;

const AC1_LIMIT: Duration = Duration::from_secs(1);
const AC2_LIMIT: Duration = Duration::from_secs(10);
const AC10_LIMIT: Duration = Duration::from_secs(2);

const AC2_RANDOM_STOCHASTIC: usize = 1000;
const AC2_RANDOM_UNITARY: usize = 500;
const AC3_PER_N: usize = 200;
const AC6_PER_N: usize = 500;
const AC7_SETS: usize = 500;
const AC9_PAIRS: usize = 1000;
const AC10_PRODUCTS: usize = 100_000;

type Outcome = std::result::Result<String, String>;

fn fixture(name: &str) -> ModelFile {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    ModelFile::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> std::result::Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

/// Matrices swept by criteria 2 and 3, kept for the period/exponent check.
#[derive(Default)]
struct Sweep {
    matrices: Vec<BMatrix>,
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let m = fixture("paper_s5.bm");
    let (a, b, r, bab, c) = (
        m.matrix("A").unwrap(),
        m.vector("b").unwrap(),
        m.matrix("B").unwrap(),
        m.matrix("BAB").unwrap(),
        m.matrix("C").unwrap(),
    );
    ensure(b.to_string() == "({1},{},{},{2,3,5},{4})", || format!("fixture b = {b}"))?;
    let refl = reflection_from(b).map_err(|e| e.to_string())?;
    ensure(&refl == r, || format!("reflection_from(b) =\n{refl}"))?;
    let conj = refl.mul(&a.mul(&refl).unwrap()).unwrap();
    ensure(&conj == bab, || format!("B·A·B =\n{conj}"))?;
    let core = conj.trailing(1);
    ensure(&core == c, || format!("core =\n{core}"))?;
    let tr = core.trace().unwrap();
    ensure(tr.to_string() == "{4,5}", || format!("tr(C) = {tr}"))?;
    let t = within(AC1_LIMIT, start)?;
    Ok(format!("B, BAB and C bit-exact, tr(C) = {tr}, {t:.1?}"))
}

fn ac2(sweep: &mut Sweep) -> Outcome {
    let start = Instant::now();
    let alg = Algebra::with_atoms(3).unwrap();
    let elems: Vec<Elem> = alg.elements().unwrap().collect();
    let (mut scanned, mut stochastic) = (0, 0);
    for x in 0..8usize.pow(4) {
        let e = |s: u32| elems[(x / 8usize.pow(s)) % 8].clone();
        let a = BMatrix::from_rows(&alg, vec![vec![e(0), e(1)], vec![e(2), e(3)]]).unwrap();
        scanned += 1;
        if !a.is_stochastic().unwrap() {
            continue;
        }
        stochastic += 1;
        ensure(a.power(3).unwrap() == a, || format!("A³ ≠ A for\n{a}"))?;
        sweep.matrices.push(a);
    }
    ensure(scanned == 4096 && stochastic == 64, || format!("scanned {scanned}, stochastic {stochastic}"))?;

    let mut rng = seeded(0xAC2);
    for _ in 0..AC2_RANDOM_STOCHASTIC {
        let alg = Algebra::with_atoms(rng.gen_range(1..=4)).unwrap();
        let a = random::stochastic_matrix(&alg, 3, &mut rng).unwrap();
        ensure(a.power(8).unwrap() == a.power(2).unwrap(), || format!("A⁸ ≠ A² for\n{a}"))?;
        sweep.matrices.push(a);
    }
    for _ in 0..AC2_RANDOM_UNITARY {
        let alg = Algebra::with_atoms(rng.gen_range(1..=4)).unwrap();
        let a = random::unitary(&alg, 3, &mut rng).unwrap();
        ensure(a.power(6).unwrap() == BMatrix::identity(&alg, 3), || format!("A⁶ ≠ I for\n{a}"))?;
        sweep.matrices.push(a);
    }
    let t = within(AC2_LIMIT, start)?;
    Ok(format!(
        "{stochastic} stochastic of {scanned} 2×2 matrices, {AC2_RANDOM_STOCHASTIC} + {AC2_RANDOM_UNITARY} random 3×3, {t:.1?}"
    ))
}

fn ac3(sweep: &mut Sweep) -> Outcome {
    let mut rng = seeded(0xAC3);
    for (n, high, low) in [(4usize, 15u64, 3u64), (5, 64, 4)] {
        ensure(lcm_upto(n as u64) + n as u64 - 1 == high, || format!("[{n}] + {n} - 1 ≠ {high}"))?;
        for _ in 0..AC3_PER_N {
            let alg = Algebra::with_atoms(rng.gen_range(1..=5)).unwrap();
            let a = random::stochastic_matrix(&alg, n, &mut rng).unwrap();
            ensure(a.power(high).unwrap() == a.power(low).unwrap(), || format!("A^{high} ≠ A^{low} for\n{a}"))?;
            sweep.matrices.push(a);
        }
    }
    Ok(format!("A¹⁵ = A³ and A⁶⁴ = A⁴ on {AC3_PER_N} matrices each"))
}

fn ac4() -> Outcome {
    let mut bases = 0;
    for (n, k) in [(2, 2), (3, 2), (2, 3)] {
        for t in [Theorem::Dimension, Theorem::DimCor2] {
            let v = oracle::brute_check(t, n, k, oracle::DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            ensure(v.pass && v.exhaustive, || v.to_string())?;
        }
        let spec = EnumSpec::new(n, k, Kind::OrthonormalSets).unwrap();
        let sets = oracle::enumerate(&spec, oracle::DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let alg = sets.algebra().clone();
        for obj in sets {
            let s = obj.to_vecset(&alg, n).unwrap();
            if s.len() == n && s.is_stochastic() {
                ensure(s.is_basis(), || format!("stochastic orthonormal set of size {n} is not a basis: {obj}"))?;
                bases += 1;
            }
        }
    }
    Ok(format!("DIMENSION and DIMCOR2 exhaustive on 3 cases; {bases} stochastic n-sets are bases"))
}

fn ac5() -> Outcome {
    let spec = EnumSpec::new(3, 2, Kind::StochasticMatrices).unwrap();
    let all = oracle::enumerate(&spec, oracle::DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let alg = all.algebra().clone();
    let stoch: Vec<BVec> = oracle::enumerate(&EnumSpec::new(3, 2, Kind::StochasticVectors).unwrap(), u128::MAX)
        .unwrap()
        .map(|o| {
            // Rebuilt over the matrices' algebra instance.
            let v = o.to_bvec().unwrap();
            BVec::from_elems(v.entries().iter().map(|e| alg.from_atom_indices(e.atom_indices()).unwrap()).collect()).unwrap()
        })
        .collect();
    let (mut count, mut with_invariant) = (0, 0);
    for obj in all {
        let a = obj.to_bmatrix(&alg).unwrap();
        count += 1;
        let exists = stoch.iter().any(|b| a.apply(b).unwrap() == *b);
        let one = a.trace().unwrap().is_one();
        ensure(exists == one, || format!("existence {exists} but trace one {one} for\n{a}"))?;
        match find_invariant_stochastic(std::slice::from_ref(&a)).unwrap() {
            Some(b) => {
                ensure(b.is_stochastic() && a.apply(&b).unwrap() == b, || format!("bad invariant {b} for\n{a}"))?;
                with_invariant += 1;
            }
            None => ensure(!exists, || format!("missed an invariant vector of\n{a}"))?,
        }
    }
    ensure(count == 729, || format!("{count} matrices enumerated"))?;
    Ok(format!("{count} matrices, {with_invariant} with invariant vectors"))
}

fn ac6() -> Outcome {
    let mut rng = seeded(0xAC6);
    for n in [3, 5] {
        for _ in 0..AC6_PER_N {
            let alg = Algebra::with_atoms(rng.gen_range(1..=5)).unwrap();
            let a = random::symmetric_stochastic(&alg, n, &mut rng).unwrap();
            ensure(a.is_symmetric() && a.trace().unwrap().is_one(), || format!("trace not one for\n{a}"))?;
        }
    }
    let w = fixture("s4_reflections.bm").matrix("W").unwrap().clone();
    ensure(w.trace().unwrap().is_zero(), || "swap trace is not ∅".into())?;
    ensure(find_invariant_stochastic(&[w]).unwrap().is_none(), || "swap has an invariant vector".into())?;
    Ok(format!("{AC6_PER_N} each for n = 3, 5; swap has trace ∅ and no invariant vector"))
}

fn ac7() -> Outcome {
    let mut rng = seeded(0xAC7);
    for _ in 0..AC7_SETS {
        let n = rng.gen_range(2..=5);
        let m = rng.gen_range(0..n);
        let alg = Algebra::with_atoms(rng.gen_range(1..=4)).unwrap();
        let s = random::stochastic_orthonormal_set(&alg, n, m, &mut rng).unwrap();
        let b = s.extend_to_basis().map_err(|e| e.to_string())?;
        ensure(b.len() == n && b.is_orthonormal() && b.is_basis(), || format!("extension of size {} is not a basis", b.len()))?;
        ensure(&b.vectors()[..m] == s.vectors(), || "input is not a prefix".into())?;
    }
    Ok(format!("{AC7_SETS} sets extended"))
}

fn ac8(sweep: &Sweep) -> Outcome {
    let mut max_e = 0;
    for a in &sweep.matrices {
        let n = a.rows();
        let prof = power_profile(a).unwrap();
        ensure(prof.exponent <= stochastic_exponent_bound(n) && prof.exponent < n, || {
            format!("e = {} > {} for\n{a}", prof.exponent, n - 1)
        })?;
        ensure(lcm_upto(n as u64).is_multiple_of(prof.period as u64), || format!("p = {} ∤ [{n}] for\n{a}", prof.period))?;
        max_e = max_e.max(prof.exponent);
    }
    let a = fixture("s6_final.bm").matrix("A").unwrap().clone();
    let prof = power_profile(&a).unwrap();
    ensure((prof.exponent, prof.period) == (1, 2), || format!("e = {}, p = {}", prof.exponent, prof.period))?;
    let text = relation_report(&a).unwrap().to_string();
    ensure(text.contains("1→2, 2→3, ¬1→3"), || format!("report:\n{text}"))?;
    Ok(format!("{} swept matrices (max e = {max_e}); final example e=1, p=2, 1→2, 2→3, ¬1→3", sweep.matrices.len()))
}

fn ac9() -> Outcome {
    let mut rng = seeded(0xAC9);
    for _ in 0..AC9_PAIRS {
        let n = rng.gen_range(2..=6);
        let alg = Algebra::with_atoms(rng.gen_range(1..=5)).unwrap();
        let (a, b) = random::orthogonal_stochastic_pair(&alg, n, &mut rng).unwrap();
        let c = descent(&a, &b).map_err(|e| e.to_string())?;
        ensure(c.is_stochastic() && c.len() == n - 1, || format!("descent({a}, {b}) = {c}"))?;
        let back = lift(&a, &c).map_err(|e| e.to_string())?;
        ensure(back == b, || format!("lift({a}, {c}) = {back}, expected {b}"))?;
    }
    Ok(format!("{AC9_PAIRS} pairs"))
}

fn ac10() -> Outcome {
    let alg = Algebra::with_atoms(64).unwrap();
    let mut rng = seeded(0xAC10);
    let a = random::matrix(&alg, 8, 8, &mut rng).unwrap();
    let b = random::matrix(&alg, 8, 8, &mut rng).unwrap();
    let start = Instant::now();
    for _ in 0..AC10_PRODUCTS {
        black_box(black_box(&a).mul(black_box(&b)).unwrap());
    }
    let t = within(AC10_LIMIT, start)?;
    Ok(format!("{AC10_PRODUCTS} products in {t:.2?}"))
}

fn main() {
    let mut sweep = Sweep::default();
    let results: Vec<(&str, Outcome)> = vec![
        ("AC1 unitary reduction example", ac1()),
        ("AC2 power theorem, small", ac2(&mut sweep)),
        ("AC3 power theorem, n = 4, 5", ac3(&mut sweep)),
        ("AC4 dimension theorem", ac4()),
        ("AC5 invariant vector iff trace one", ac5()),
        ("AC6 odd symmetric matrices", ac6()),
        ("AC7 basis extension", ac7()),
        ("AC8 exponent and period bounds", ac8(&sweep)),
        ("AC9 descent and lift", ac9()),
        ("AC10 product throughput", ac10()),
    ];
    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    println!("{} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
