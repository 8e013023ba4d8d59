//! Watching a tape automaton step by step.
//!
//! A trace records, after every step, the head's reduced density operator,
//! whether that state is still pure enough to factor out of the tape, and
//! the reduced state of the garbage cell written in that step.
//!
//! Run with: cargo run --example step_trace

use qra::automata::{corpus, reversibilize_dfa};
use qra::formats::format_word;
use qra::tapeqfa::{from_reversible_dfa, trace_run};

fn main() -> qra::Result<()> {
    let (_, parity) = corpus().into_iter().find(|(n, _)| *n == "parity-of-a").unwrap();
    let q = from_reversible_dfa(&reversibilize_dfa(&parity), parity.accept());

    let word = vec![0, 0, 1]; // "aab"
    let trace = trace_run(&q, &q.basis_word_state(&word)?)?;
    println!(
        "word '{}': {} entries (initial + one per symbol)",
        format_word(&["a".into(), "b".into()], &word),
        trace.len()
    );
    for (k, entry) in trace.entries().iter().enumerate() {
        let head = &entry.internal;
        let heaviest = (0..q.h_dim())
            .max_by(|&a, &b| {
                head.get(a, a).re.partial_cmp(&head.get(b, b).re).unwrap()
            })
            .unwrap();
        println!(
            "  step {k}: head purity {:.6}, heaviest state q{heaviest}, factorizable: {}",
            head.purity(),
            entry.factorized,
        );
    }
    println!(
        "acceptance probability {}  garbage cells used {}",
        trace.accept_prob(&q),
        trace.garbage_cells_used(&q)
    );

    // on a classical word the head state stays pure, so every step factors;
    // a superposed word with diverging branches entangles head and tape
    let plus = {
        let a = q.basis_word_state(&[0])?;
        let b = q.basis_word_state(&[1])?;
        (&a + &b).normalized()
    };
    let trace = trace_run(&q, &plus)?;
    let entry = &trace.entries()[1];
    println!(
        "superposed single-symbol word: head purity {:.3}, factorizable: {}",
        entry.internal.purity(),
        entry.factorized,
    );
    Ok(())
}
