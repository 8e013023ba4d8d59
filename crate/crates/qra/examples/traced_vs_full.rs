//! Two ways to simulate the tape automaton, one answer.
//!
//! The full path keeps the joint state of head and all written cells: exact,
//! but the amplitude count multiplies by |I| * |SG| per step. The traced
//! path keeps only the head's density operator and absorbs one cell per
//! step, tracing it out again: memory stays constant in the word length.
//! On product-state words both give the same acceptance probability.
//!
//! Run with: cargo run --example traced_vs_full

use qra::random::{random_state, random_unitary, random_word, seeded_rng};
use qra::tapeqfa::{
    accept_prob_traced, default_symbols, run_full_n, TapeQfa, DEFAULT_MAX_AMPLITUDES,
};

fn main() -> qra::Result<()> {
    let mut rng = seeded_rng(7);
    let (h, i, sg) = (3, 2, 3);
    let q = TapeQfa::new(
        random_state(h, &mut rng),
        vec![0, 2],
        i,
        sg,
        0,
        random_unitary(h * i * sg, &mut rng),
        default_symbols(i),
    )?;
    println!("random machine: dims {h} x {i} x {sg}, dense unitary");
    println!("{:>6} {:>16} {:>18} {:>18} {:>12}", "length", "amplitudes", "full", "traced", "|diff|");

    for len in 0..=6usize {
        let word = random_word(i, len, &mut rng);
        let ws = q.basis_word_state(&word)?;
        let state = run_full_n(&q, &ws, len, DEFAULT_MAX_AMPLITUDES)?;
        let full = state.acceptance_probability(q.accept());
        let traced = accept_prob_traced(&q, &q.basis_cells(&word)?)?;
        println!(
            "{len:>6} {:>16} {full:>18.12} {traced:>18.12} {:>12.3e}",
            state.vector().dim(),
            (full - traced).abs()
        );
    }

    // the full path refuses to grow past the amplitude cap instead of
    // swallowing memory; the traced path has no such limit
    let long_word = random_word(i, 64, &mut rng);
    let capped = q
        .basis_word_state(&long_word)
        .and_then(|ws| run_full_n(&q, &ws, 64, 1 << 20));
    println!("full path on a 64-symbol word: {}", capped.err().expect("over any cap"));
    let traced = accept_prob_traced(&q, &q.basis_cells(&long_word)?)?;
    println!("traced path on the same word: p = {traced:.12}");
    Ok(())
}
