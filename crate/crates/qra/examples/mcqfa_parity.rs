//! A measure-once quantum automaton on a fixed Hilbert space.
//!
//! Each input symbol applies one unitary to a state vector; a single
//! projective measurement at the end gives the acceptance probability.
//! DFAs whose transitions are permutations lift directly: the lifted
//! machine reproduces the language with exact probabilities 0 and 1.
//!
//! Run with: cargo run --example mcqfa_parity

use qra::automata::{corpus, dfa_accepts, enumerate_words};
use qra::formats::format_word;
use qra::mcqfa::{from_permutation_dfa, mc_accept_prob, validate};

fn main() -> qra::Result<()> {
    let (_, parity) = corpus().into_iter().find(|(n, _)| *n == "parity-of-a").unwrap();
    let q = from_permutation_dfa(&parity)?;
    println!("parity-of-a lifted to a {}-dimensional quantum automaton", q.dim());

    for word in enumerate_words(2, 3) {
        let p = mc_accept_prob(&q, &word)?;
        let label = format_word(parity.alphabet(), &word);
        let shown = if label.is_empty() { "(empty)" } else { &label };
        assert_eq!(p == 1.0, dfa_accepts(&parity, &word)?);
        println!("  {:7} -> acceptance probability {p}", shown);
    }

    // well-formedness is checked separately so broken files can be inspected
    println!("violations in the lifted machine: {:?}", validate(&q));

    let broken = qra::mcqfa::McQfa::new(
        2,
        qra::tensor::ComplexVector::from_real(&[2.0, 0.0]),
        vec!["a".into(), "b".into()],
        vec![0],
        vec![
            qra::tensor::ComplexOperator::identity(2),
            qra::tensor::ComplexOperator::diagonal(&[
                num_complex::Complex64::new(1.0, 0.0),
                num_complex::Complex64::new(2.0, 0.0),
            ]),
        ],
    )?;
    println!("violations in a deliberately broken machine:");
    for v in validate(&broken) {
        println!("  {v}");
    }
    Ok(())
}
