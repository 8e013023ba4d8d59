//! Seeded random generators for states, operators, tables and automata.
//!
//! Everything takes the RNG as an argument so callers control determinism;
//! tests pair these with a fixed-seed ChaCha stream.

use rand::Rng;

use crate::automata::Dfa;
use crate::reversible::TruthTable;
use crate::tensor::{Complex64, ComplexOperator, ComplexVector, DensityOperator};

/// A ChaCha stream seeded from a u64, for deterministic tests and demos.
pub fn seeded_rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

/// Standard normal sample (Box-Muller).
fn gaussian(rng: &mut impl Rng) -> f64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// Standard complex Gaussian sample.
fn complex_gaussian(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(gaussian(rng), gaussian(rng))
}

/// Random normalized state vector with complex Gaussian amplitudes.
pub fn random_state(dim: usize, rng: &mut impl Rng) -> ComplexVector {
    loop {
        let v = ComplexVector::new((0..dim).map(|_| complex_gaussian(rng)).collect());
        if v.norm() > 1e-6 {
            return v.normalized();
        }
    }
}

/// Random unitary: orthonormalize the columns of a matrix of independent
/// standard complex Gaussians (modified Gram-Schmidt, one re-pass).
pub fn random_unitary(dim: usize, rng: &mut impl Rng) -> ComplexOperator {
    let mut cols: Vec<Vec<Complex64>> = (0..dim)
        .map(|_| (0..dim).map(|_| complex_gaussian(rng)).collect())
        .collect();
    for j in 0..dim {
        for _pass in 0..2 {
            for k in 0..j {
                let proj: Complex64 = (0..dim).map(|i| cols[k][i].conj() * cols[j][i]).sum();
                for i in 0..dim {
                    let corr = proj * cols[k][i];
                    cols[j][i] -= corr;
                }
            }
        }
        let norm: f64 = cols[j].iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        assert!(norm > 1e-12, "degenerate Gaussian draw");
        for e in cols[j].iter_mut() {
            *e /= norm;
        }
    }
    let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
    for (j, col) in cols.iter().enumerate() {
        for (i, &e) in col.iter().enumerate() {
            entries[i * dim + j] = e;
        }
    }
    ComplexOperator::from_entries(dim, dim, entries)
}

/// Random full-rank density operator: a convex mix of `dim` random pure
/// states with exponentially distributed weights.
pub fn random_density(dim: usize, rng: &mut impl Rng) -> DensityOperator {
    let mut weights: Vec<f64> = (0..dim)
        .map(|_| -f64::ln(rng.gen_range(f64::MIN_POSITIVE..1.0)))
        .collect();
    let total: f64 = weights.iter().sum();
    for w in weights.iter_mut() {
        *w /= total;
    }
    let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
    for &w in &weights {
        let psi = random_state(dim, rng);
        for i in 0..dim {
            for j in 0..dim {
                entries[i * dim + j] += psi.amplitude(i) * psi.amplitude(j).conj() * w;
            }
        }
    }
    DensityOperator::from_entries(dim, entries)
}

/// Random index bijection on {0, …, n−1} (Fisher-Yates).
pub fn random_index_map(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut map: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        map.swap(i, rng.gen_range(0..=i));
    }
    map
}

/// Random truth table on `n_in` input and `n_out` output lines.
pub fn random_truth_table(n_in: usize, n_out: usize, rng: &mut impl Rng) -> TruthTable {
    let rows = (0..1usize << n_in).map(|_| rng.gen_range(0..1usize << n_out)).collect();
    TruthTable::new(n_in, n_out, rows).expect("rows are in range by construction")
}

/// Random complete DFA over the given alphabet with a random accept set.
pub fn random_dfa(n_states: usize, alphabet: &[String], rng: &mut impl Rng) -> Dfa {
    assert!(n_states > 0 && !alphabet.is_empty());
    let delta: Vec<Vec<usize>> = (0..n_states)
        .map(|_| (0..alphabet.len()).map(|_| rng.gen_range(0..n_states)).collect())
        .collect();
    let accept: Vec<usize> = (0..n_states).filter(|_| rng.gen_bool(0.5)).collect();
    Dfa::new(
        (0..n_states).map(|q| format!("q{q}")).collect(),
        alphabet.to_vec(),
        rng.gen_range(0..n_states),
        accept,
        delta,
    )
    .expect("dimensions are consistent by construction")
}

/// Random word of exactly `len` symbol indices over an alphabet of `k` symbols.
pub fn random_word(k: usize, len: usize, rng: &mut impl Rng) -> Vec<usize> {
    (0..len).map(|_| rng.gen_range(0..k)).collect()
}
