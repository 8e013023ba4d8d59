//! A workbench for reversible computation: boolean functions and finite
//! automata turned into bijections, quantum finite automata, and a two-tape
//! quantum automaton whose per-step unitary can be an exact permutation of
//! tape configurations.
//!
//! The pieces fit together in one pipeline:
//!
//! 1. [`reversible`] — make an irreversible truth table injective by adding
//!    blank source lines and carrying the input along; uncompute garbage
//!    with the compute–copy–uncompute composition.
//! 2. [`automata`] — the same trick for DFA steps: a bijection on
//!    (state, symbol, cell) triples whose runs can be played backwards.
//! 3. [`mcqfa`] — measure-once quantum automata on a fixed state space.
//! 4. [`tapeqfa`] — the tape automaton: one unitary per step acting on the
//!    internal space, the current input cell and a fresh garbage cell, with
//!    a full state-vector path and a linear-memory traced path.
//! 5. [`tensor`] / [`random`] / [`formats`] / [`cli`] — the substrate:
//!    exact permutation-aware linear algebra, seeded generators, canonical
//!    text formats, and the `qra` command-line front end.
//!
//! Every DFA embeds, and the embedded machine accepts its language with
//! probability exactly 0 or 1:
//!
//! ```
//! use qra::automata::{corpus, dfa_accepts, reversibilize_dfa};
//! use qra::tapeqfa::{accept_prob_traced, from_reversible_dfa};
//!
//! let (_, dfa) = corpus().into_iter().find(|(n, _)| *n == "ends-with-a").unwrap();
//! let machine = from_reversible_dfa(&reversibilize_dfa(&dfa), dfa.accept());
//!
//! let word = [1, 0]; // "ba"
//! let p = accept_prob_traced(&machine, &machine.basis_cells(&word)?)?;
//! assert_eq!(p, 1.0);
//! assert!(dfa_accepts(&dfa, &word)?);
//! # Ok::<(), qra::Error>(())
//! ```
//!
//! The `examples/` directory walks through each capability; the `qra` binary
//! exposes the same operations on text-format machine files.

pub mod automata;
pub mod cli;
pub mod error;
pub mod formats;
pub mod mcqfa;
pub mod random;
pub mod reversible;
pub mod tapeqfa;
pub mod tensor;

pub use error::{Error, Result};
