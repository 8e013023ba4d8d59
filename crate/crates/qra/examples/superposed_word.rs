//! Feeding a quantum automaton a superposition of words.
//!
//! The input tape is itself quantum, so the machine can read a coherent
//! superposition of classical words. For a permutation machine the branches
//! never interfere (each classical word drags along distinct garbage), so
//! the acceptance probability is the mixture of the per-word answers.
//!
//! Run with: cargo run --example superposed_word

use qra::automata::{corpus, reversibilize_dfa};
use qra::tapeqfa::{accept_prob_traced, from_reversible_dfa, run_full_n, DEFAULT_MAX_AMPLITUDES};
use qra::tensor::{ComplexVector, DensityOperator};

fn main() -> qra::Result<()> {
    let (_, parity) = corpus().into_iter().find(|(n, _)| *n == "parity-of-a").unwrap();
    let q = from_reversible_dfa(&reversibilize_dfa(&parity), parity.accept());

    // |aa> is accepted (two a's), |ab> is rejected (one a)
    let aa = q.basis_word_state(&[0, 0])?;
    let ab = q.basis_word_state(&[0, 1])?;
    let mixed = (&aa + &ab).normalized();

    let run = |ws: &ComplexVector| -> qra::Result<f64> {
        Ok(run_full_n(&q, ws, 2, DEFAULT_MAX_AMPLITUDES)?.acceptance_probability(q.accept()))
    };
    println!("p(aa) = {}", run(&aa)?);
    println!("p(ab) = {}", run(&ab)?);
    println!("p((|aa> + |ab>)/sqrt 2) = {}  (the equal mixture of the answers)", run(&mixed)?);

    // (|aa> + |ab>)/sqrt2 = |a> (x) (|a>+|b>)/sqrt2 is a product word, so the
    // cell-by-cell traced path sees the same state and agrees exactly
    let cell_a = DensityOperator::from_pure(&ComplexVector::basis(2, 0));
    let cell_plus = DensityOperator::from_pure(&ComplexVector::from_real(&[1.0, 1.0]).normalized());
    println!(
        "traced on the product form          = {}",
        accept_prob_traced(&q, &[cell_a, cell_plus])?
    );

    // |aa> + |bb> is entangled across cells: the full path keeps the
    // correlation (both words have an even number of a's, so p = 1), while
    // the cell-by-cell description only sees each cell's 50/50 reduction
    // and averages over all four classical words
    let bb = q.basis_word_state(&[1, 1])?;
    let cat = (&aa + &bb).normalized();
    println!("p((|aa> + |bb>)/sqrt 2) full path   = {}", run(&cat)?);

    let half: Vec<_> = [(0, 0), (1, 1)]
        .iter()
        .map(|&(i, j)| {
            let mut e = vec![num_complex::Complex64::new(0.0, 0.0); 4];
            e[i * 2 + j] = num_complex::Complex64::new(0.5, 0.0);
            e
        })
        .collect();
    let mixed_cell = DensityOperator::from_entries(
        2,
        half[0].iter().zip(&half[1]).map(|(x, y)| x + y).collect(),
    );
    let traced_cat = accept_prob_traced(&q, &[mixed_cell.clone(), mixed_cell])?;
    println!("traced on the per-cell reductions   = {traced_cat}  (correlation lost)");
    Ok(())
}
