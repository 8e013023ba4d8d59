//! Fixed-length slices of a regular language via chained reversible steps.
//!
//! For each length n, chaining n copies of the reversible DFA step (each
//! with its own input and garbage cell) gives a reversible circuit that
//! decides exactly the length-n words of the language.
//!
//! Run with: cargo run --example definite_events

use qra::automata::{corpus, definite_event_circuit, dfa_accepts, enumerate_words, reversibilize_dfa};
use qra::formats::format_word;

fn main() -> qra::Result<()> {
    let (name, d) = corpus().into_iter().find(|(n, _)| *n == "contains-ab").unwrap();
    let r = reversibilize_dfa(&d);

    for n in 0..=4usize {
        let circuit = definite_event_circuit(&r, n);
        let words: Vec<Vec<usize>> =
            enumerate_words(2, n).into_iter().filter(|w| w.len() == n).collect();
        let accepted: Vec<String> = words
            .iter()
            .filter(|w| circuit.accepts(w).unwrap())
            .map(|w| format_word(d.alphabet(), w))
            .collect();
        // cross-check against the plain automaton
        for w in &words {
            assert_eq!(circuit.accepts(w)?, dfa_accepts(&d, w)?);
        }
        println!(
            "{name}, length {n}: {}/{} words accepted: {}",
            accepted.len(),
            words.len(),
            if accepted.is_empty() { "(none)".to_string() } else { accepted.join(" ") },
        );
    }
    println!("each circuit is a bijection; garbage cells grow with n, not with |Q|");
    Ok(())
}
