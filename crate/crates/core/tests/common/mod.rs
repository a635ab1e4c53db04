#![allow(dead_code)]

use std::path::PathBuf;

use covering::ilp::CoveringProgram;

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

/// Minimum of the objective by exhaustive enumeration of the box.
pub fn brute_force(p: &CoveringProgram) -> Option<u64> {
    let n = p.n_cols();
    let mut x = p.lower.clone();
    let mut best: Option<u64> = None;
    loop {
        let v: u64 = x.iter().sum();
        if best.is_none_or(|b| v < b) && p.check_point(&x).is_ok() {
            best = Some(v);
        }
        let mut j = 0;
        loop {
            if j == n {
                return best;
            }
            if x[j] < p.upper[j] {
                x[j] += 1;
                break;
            }
            x[j] = p.lower[j];
            j += 1;
        }
    }
}

/// A random bounded covering program with at most `max_cols` columns, feasible by
/// construction (every demand is met at the upper bounds).
pub fn random_program(rng: &mut impl rand::Rng, max_cols: usize) -> CoveringProgram {
    let mut p = CoveringProgram::new();
    let n = rng.gen_range(1..=max_cols);
    let mut cells = 1u64;
    for j in 0..n {
        let ub = if cells > 20_000 { 1 } else { rng.gen_range(1..=3) };
        let lb = if rng.gen_bool(0.1) { 1.min(ub) } else { 0 };
        cells *= ub - lb + 1;
        p.add_col(format!("x{j}"), lb, ub);
    }
    for r in 0..rng.gen_range(1..=6) {
        let mut entries: Vec<(usize, u64)> = Vec::new();
        for j in 0..n {
            if rng.gen_bool(0.5) {
                entries.push((j, rng.gen_range(1..=9)));
            }
        }
        let cap: u64 = entries.iter().map(|&(j, c)| c * p.upper[j]).sum();
        if cap == 0 {
            continue;
        }
        let demand = rng.gen_range(1..=cap);
        p.add_row(format!("r{r}"), demand, entries);
    }
    p
}
