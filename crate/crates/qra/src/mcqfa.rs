//! Measure-once quantum finite automata: one unitary per input symbol on a
//! fixed state space, a single projective measurement at the end.

use std::fmt;

use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::tensor::{
    is_unitary, projector_onto, ComplexOperator, ComplexVector, TOL_ALGEBRAIC,
};

/// A measure-once automaton. Numeric invariants (normalization, unitarity)
/// are checked by [`validate`], not at construction, so ill-formed machines
/// can be loaded and reported on.
#[derive(Debug, Clone, PartialEq)]
pub struct McQfa {
    dim: usize,
    s_init: ComplexVector,
    alphabet: Vec<String>,
    accept: Vec<usize>,
    unitaries: Vec<ComplexOperator>,
}

impl McQfa {
    pub fn new(
        dim: usize,
        s_init: ComplexVector,
        alphabet: Vec<String>,
        accept: Vec<usize>,
        unitaries: Vec<ComplexOperator>,
    ) -> Result<Self> {
        if s_init.dim() != dim {
            return Err(Error::DimensionMismatch {
                context: "initial state dimension",
                expected: dim,
                actual: s_init.dim(),
            });
        }
        if alphabet.is_empty() {
            return Err(Error::InvalidModel("alphabet must be non-empty".into()));
        }
        if unitaries.len() != alphabet.len() {
            return Err(Error::DimensionMismatch {
                context: "one unitary per symbol",
                expected: alphabet.len(),
                actual: unitaries.len(),
            });
        }
        for u in &unitaries {
            if u.rows() != dim || u.cols() != dim {
                return Err(Error::DimensionMismatch {
                    context: "symbol unitary dimension",
                    expected: dim,
                    actual: u.rows(),
                });
            }
        }
        let mut accept = accept;
        accept.sort_unstable();
        accept.dedup();
        for &i in &accept {
            if i >= dim {
                return Err(Error::IndexOutOfRange { index: i, dim });
            }
        }
        Ok(Self { dim, s_init, alphabet, accept, unitaries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn s_init(&self) -> &ComplexVector {
        &self.s_init
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn accept(&self) -> &[usize] {
        &self.accept
    }

    pub fn unitary(&self, symbol: usize) -> &ComplexOperator {
        &self.unitaries[symbol]
    }

    pub fn accept_projector(&self) -> ComplexOperator {
        projector_onto(&self.accept, self.dim).expect("accept indices checked at construction")
    }

    pub fn symbol_index(&self, symbol: &str) -> Result<usize> {
        self.alphabet
            .iter()
            .position(|s| s == symbol)
            .ok_or_else(|| Error::UnknownSymbol { symbol: symbol.to_string() })
    }
}

/// Lifts a DFA whose per-symbol transitions are permutations of the state
/// set (a group automaton) to a measure-once machine that agrees with it.
pub fn from_permutation_dfa(d: &Dfa) -> Result<McQfa> {
    let n = d.n_states();
    let mut unitaries = Vec::with_capacity(d.alphabet().len());
    for (x, symbol) in d.alphabet().iter().enumerate() {
        let map: Vec<usize> = (0..n).map(|q| d.delta(q, x)).collect();
        let mut seen = vec![false; n];
        for &q in &map {
            if seen[q] {
                return Err(Error::InvalidModel(format!(
                    "transition on symbol '{symbol}' is not a permutation of the states"
                )));
            }
            seen[q] = true;
        }
        unitaries.push(ComplexOperator::permutation(map));
    }
    McQfa::new(
        n,
        ComplexVector::basis(n, d.start()),
        d.alphabet().to_vec(),
        d.accept().to_vec(),
        unitaries,
    )
}

/// Acceptance probability |P · U_{w_k} ⋯ U_{w_1} · s_init|², applying the
/// symbols in reading order (the first symbol's unitary acts first).
pub fn mc_accept_prob(q: &McQfa, word: &[usize]) -> Result<f64> {
    for &x in word {
        if x >= q.alphabet.len() {
            return Err(Error::SymbolOutOfRange { index: x, size: q.alphabet.len() });
        }
    }
    let mut state = q.s_init.clone();
    for &x in word {
        state = q.unitaries[x].matvec(&state);
    }
    let mut prob = 0.0;
    for &i in &q.accept {
        prob += state.amplitude(i).norm_sqr();
    }
    Ok(prob)
}

/// A reported invariant violation.
#[derive(Debug, Clone, PartialEq)]
pub enum McViolation {
    InitNotNormalized { norm_sqr: f64 },
    NotUnitary { symbol: String, deviation: f64 },
}

impl fmt::Display for McViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            McViolation::InitNotNormalized { norm_sqr } => {
                write!(f, "initial state is not normalized: ⟨s|s⟩ = {norm_sqr}")
            }
            McViolation::NotUnitary { symbol, deviation } => {
                write!(f, "operator for symbol '{symbol}' is not unitary: max |U†U − 1| = {deviation}")
            }
        }
    }
}

/// Checks normalization of the initial state and unitarity of every symbol
/// operator at 1e−12; returns one entry per violation.
pub fn validate(q: &McQfa) -> Vec<McViolation> {
    let mut violations = Vec::new();
    let norm_sqr = q.s_init.norm_sqr();
    if (norm_sqr - 1.0).abs() > TOL_ALGEBRAIC {
        violations.push(McViolation::InitNotNormalized { norm_sqr });
    }
    for (symbol, u) in q.alphabet.iter().zip(&q.unitaries) {
        let unitary = is_unitary(u, TOL_ALGEBRAIC).expect("square by construction");
        if !unitary {
            let gram = u.adjoint().matmul(u);
            let deviation = gram.max_abs_diff(&ComplexOperator::identity(u.rows()));
            violations.push(McViolation::NotUnitary { symbol: symbol.clone(), deviation });
        }
    }
    violations
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{corpus, dfa_accepts, enumerate_words};
    use crate::random::{random_unitary, seeded_rng};
    use rand::Rng;

    fn parity_machine() -> McQfa {
        let parity = corpus().into_iter().find(|(n, _)| *n == "parity-of-a").unwrap().1;
        from_permutation_dfa(&parity).unwrap()
    }

    #[test]
    fn empty_word_measures_the_initial_state() {
        let q = parity_machine();
        assert_eq!(mc_accept_prob(&q, &[]).unwrap(), 1.0);
    }

    #[test]
    fn parity_machine_tracks_the_dfa() {
        let q = parity_machine();
        assert_eq!(mc_accept_prob(&q, &[0, 0]).unwrap(), 1.0);
        assert_eq!(mc_accept_prob(&q, &[0]).unwrap(), 0.0);
        let parity = corpus().into_iter().find(|(n, _)| *n == "parity-of-a").unwrap().1;
        for word in enumerate_words(2, 8) {
            let p = mc_accept_prob(&q, &word).unwrap();
            // permutation machine on a basis start: exact 0 or 1
            assert!(p == 0.0 || p == 1.0);
            assert_eq!(p == 1.0, dfa_accepts(&parity, &word).unwrap());
        }
    }

    #[test]
    fn reading_order_follows_classical_semantics() {
        // cycle on a, swap(q0,q1) on b: reading "ab" gives q0 -> q1 -> q0
        let d = Dfa::new(
            vec!["q0".into(), "q1".into(), "q2".into()],
            vec!["a".into(), "b".into()],
            0,
            vec![0],
            vec![vec![1, 1], vec![2, 0], vec![0, 2]],
        )
        .unwrap();
        let q = from_permutation_dfa(&d).unwrap();
        assert_eq!(mc_accept_prob(&q, &[0, 1]).unwrap(), 1.0);
        // the opposite application order would land in q2 instead
        let reversed = q.unitary(0).matvec(&q.unitary(1).matvec(q.s_init()));
        assert_eq!(reversed.amplitude(2).re, 1.0);
    }

    #[test]
    fn probabilities_stay_bounded_and_split_over_projectors() {
        let mut rng = seeded_rng(71);
        for _ in 0..100 {
            let dim = 1 + rng.gen_range(0..4usize);
            let k = 1 + rng.gen_range(0..3usize);
            let alphabet: Vec<String> = (0..k).map(|i| format!("s{i}")).collect();
            let unitaries: Vec<_> = (0..k).map(|_| random_unitary(dim, &mut rng)).collect();
            let accept: Vec<usize> = (0..dim).filter(|_| rng.gen_bool(0.5)).collect();
            let q = McQfa::new(
                dim,
                crate::random::random_state(dim, &mut rng),
                alphabet,
                accept.clone(),
                unitaries,
            )
            .unwrap();
            assert!(validate(&q).is_empty());
            let word: Vec<usize> =
                (0..rng.gen_range(0..=6usize)).map(|_| rng.gen_range(0..k)).collect();
            let p = mc_accept_prob(&q, &word).unwrap();
            assert!((0.0..=1.0 + 1e-12).contains(&p));
            let reject: Vec<usize> = (0..dim).filter(|i| !accept.contains(i)).collect();
            let complement =
                McQfa::new(dim, q.s_init().clone(), q.alphabet().to_vec(), reject, (0..k)
                    .map(|x| q.unitary(x).clone())
                    .collect())
                .unwrap();
            let p2 = mc_accept_prob(&complement, &word).unwrap();
            assert!((p + p2 - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn global_phase_on_the_initial_state_is_invisible() {
        let mut rng = seeded_rng(72);
        let q = parity_machine();
        for _ in 0..20 {
            let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let phased = McQfa::new(
                q.dim(),
                q.s_init().scale(num_complex::Complex64::from_polar(1.0, theta)),
                q.alphabet().to_vec(),
                q.accept().to_vec(),
                (0..2).map(|x| q.unitary(x).clone()).collect(),
            )
            .unwrap();
            let word = crate::random::random_word(2, rng.gen_range(0..=6), &mut rng);
            let a = mc_accept_prob(&q, &word).unwrap();
            let b = mc_accept_prob(&phased, &word).unwrap();
            assert!((a - b).abs() <= 1e-12);
        }
    }

    #[test]
    fn validation_reports_each_violation() {
        let q = parity_machine();
        assert!(validate(&q).is_empty());

        let scaled = McQfa::new(
            2,
            q.s_init().scale(num_complex::Complex64::new(2.0, 0.0)),
            q.alphabet().to_vec(),
            vec![0],
            (0..2).map(|x| q.unitary(x).clone()).collect(),
        )
        .unwrap();
        assert!(matches!(validate(&scaled)[..], [McViolation::InitNotNormalized { .. }]));

        let stretched = McQfa::new(
            2,
            q.s_init().clone(),
            q.alphabet().to_vec(),
            vec![0],
            vec![
                ComplexOperator::diagonal(&[
                    num_complex::Complex64::new(1.0, 0.0),
                    num_complex::Complex64::new(2.0, 0.0),
                ]),
                q.unitary(1).clone(),
            ],
        )
        .unwrap();
        let violations = validate(&stretched);
        assert!(
            matches!(&violations[..], [McViolation::NotUnitary { symbol, .. }] if symbol == "a")
        );
    }

    #[test]
    fn non_group_dfa_is_rejected() {
        let contains = corpus().into_iter().find(|(n, _)| *n == "contains-ab").unwrap().1;
        assert!(matches!(from_permutation_dfa(&contains), Err(Error::InvalidModel(_))));
    }

    #[test]
    fn unknown_symbols_are_reported() {
        let q = parity_machine();
        assert!(matches!(
            mc_accept_prob(&q, &[9]),
            Err(Error::SymbolOutOfRange { index: 9, size: 2 })
        ));
        assert!(q.symbol_index("z").is_err());
        assert_eq!(q.symbol_index("b").unwrap(), 1);
    }
}
