//! Benchmark inputs; the benchmarks live in `benches/`.

use planepairs::catalog::{catalog_ideals, Family};
use planepairs::deformation::{determinantal_ideal, DeterminantalSpec};
use planepairs::Ideal;

/// A copy of `i` with no cached Gröbner basis.
pub fn fresh(i: &Ideal) -> Ideal {
    Ideal::new_unchecked(i.nvars(), i.gens().to_vec())
}

/// 2×2 minors of a generic `r × c` matrix of variables.
pub fn generic_minors(r: usize, c: usize) -> Ideal {
    determinantal_ideal(&DeterminantalSpec::generic(r, c, 2, r * c)).expect("generic minors")
}

/// The catalog entry of `family` at `n` with type `label`.
pub fn entry(family: Family, n: usize, label: &str) -> Ideal {
    catalog_ideals(family, n)
        .expect("catalog builds")
        .into_iter()
        .find(|e| e.label == label)
        .unwrap_or_else(|| panic!("no entry {label} of {family} at n={n}"))
        .ideal
}
