//! A quantum automaton with an input tape and a source-garbage tape.
//!
//! One unitary acts per step on (internal state) x (current input cell) x
//! (a fresh blank garbage cell). Because every DFA has a reversible step,
//! every DFA embeds into this model as a permutation unitary, and the
//! machine then accepts its language with probability exactly 0 or 1 —
//! no quantum automaton on a fixed space can do that for every DFA.
//!
//! Run with: cargo run --example tape_qfa_embedding

use qra::automata::{corpus, dfa_accepts, enumerate_words, reversibilize_dfa};
use qra::formats::format_word;
use qra::tapeqfa::{accept_prob_traced, from_reversible_dfa, run_full_n, DEFAULT_MAX_AMPLITUDES};

fn main() -> qra::Result<()> {
    for (name, d) in corpus() {
        let q = from_reversible_dfa(&reversibilize_dfa(&d), d.accept());
        println!(
            "{name}: unitary acts on {} x {} x {} = {} dimensions per step",
            q.h_dim(),
            q.i_dim(),
            q.sg_dim(),
            q.h_dim() * q.i_dim() * q.sg_dim()
        );

        let mut mismatches = 0;
        for word in enumerate_words(2, 5) {
            let expected = if dfa_accepts(&d, &word)? { 1.0 } else { 0.0 };
            // full path: the whole tape state, exact by permutation arithmetic
            let state =
                run_full_n(&q, &q.basis_word_state(&word)?, word.len(), DEFAULT_MAX_AMPLITUDES)?;
            let full = state.acceptance_probability(q.accept());
            // traced path: one cell at a time, linear memory
            let traced = accept_prob_traced(&q, &q.basis_cells(&word)?)?;
            if full != expected || traced != expected {
                mismatches += 1;
                println!("  MISMATCH on '{}'", format_word(d.alphabet(), &word));
            }
        }
        println!("  all 63 words of length <= 5 exact on both paths: {}", mismatches == 0);
    }
    Ok(())
}
