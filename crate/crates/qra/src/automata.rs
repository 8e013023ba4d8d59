//! Deterministic finite automata, their reversibilization into two-tape
//! right-moving steps, and fixed-length reversible acceptor circuits.

use crate::error::{Error, Result};
use crate::reversible::complete_bijection;

/// A complete DFA: `delta[q][x]` is total over states × alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    states: Vec<String>,
    alphabet: Vec<String>,
    start: usize,
    accept: Vec<usize>,
    delta: Vec<Vec<usize>>,
}

impl Dfa {
    pub fn new(
        states: Vec<String>,
        alphabet: Vec<String>,
        start: usize,
        accept: Vec<usize>,
        delta: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = states.len();
        let k = alphabet.len();
        if n == 0 || k == 0 {
            return Err(Error::InvalidModel("automaton needs at least one state and symbol".into()));
        }
        if start >= n {
            return Err(Error::IndexOutOfRange { index: start, dim: n });
        }
        for &q in &accept {
            if q >= n {
                return Err(Error::IndexOutOfRange { index: q, dim: n });
            }
        }
        if delta.len() != n {
            return Err(Error::DimensionMismatch {
                context: "transition table rows",
                expected: n,
                actual: delta.len(),
            });
        }
        for row in &delta {
            if row.len() != k {
                return Err(Error::DimensionMismatch {
                    context: "transition table columns",
                    expected: k,
                    actual: row.len(),
                });
            }
            for &q in row {
                if q >= n {
                    return Err(Error::IndexOutOfRange { index: q, dim: n });
                }
            }
        }
        let mut accept = accept;
        accept.sort_unstable();
        accept.dedup();
        Ok(Self { states, alphabet, start, accept, delta })
    }

    pub fn n_states(&self) -> usize {
        self.states.len()
    }

    pub fn state_names(&self) -> &[String] {
        &self.states
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn accept(&self) -> &[usize] {
        &self.accept
    }

    pub fn delta(&self, q: usize, x: usize) -> usize {
        self.delta[q][x]
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accept.binary_search(&q).is_ok()
    }

    pub fn symbol_index(&self, symbol: &str) -> Result<usize> {
        self.alphabet
            .iter()
            .position(|s| s == symbol)
            .ok_or_else(|| Error::UnknownSymbol { symbol: symbol.to_string() })
    }
}

fn check_word(word: &[usize], alphabet_len: usize) -> Result<()> {
    for &x in word {
        if x >= alphabet_len {
            return Err(Error::SymbolOutOfRange { index: x, size: alphabet_len });
        }
    }
    Ok(())
}

/// Classical acceptance: iterate delta from the start state.
pub fn dfa_accepts(d: &Dfa, word: &[usize]) -> Result<bool> {
    check_word(word, d.alphabet.len())?;
    let mut q = d.start;
    for &x in word {
        q = d.delta[q][x];
    }
    Ok(d.is_accepting(q))
}

/// One reversible transition step on (state, input cell, source/garbage
/// cell). The source/garbage dimension is |Q|·|Σ| + 1: a blank (index 0)
/// plus one garbage symbol per transition.
///
/// Restricted to a blank cell, the step sends (q, x, blank) to
/// (delta(q, x), x, γ) where γ = 1 + q·|Σ| + x names the transition taken;
/// the remaining points are completed in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReversibleStep {
    state_dim: usize,
    input_dim: usize,
    sg_dim: usize,
    step: Vec<usize>,
    start: usize,
    accept: Vec<usize>,
    state_names: Vec<String>,
    symbols: Vec<String>,
}

impl ReversibleStep {
    pub fn state_dim(&self) -> usize {
        self.state_dim
    }

    pub fn input_dim(&self) -> usize {
        self.input_dim
    }

    pub fn sg_dim(&self) -> usize {
        self.sg_dim
    }

    /// The step as an index map on the flattened triple space.
    pub fn mapping(&self) -> &[usize] {
        &self.step
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn accept(&self) -> &[usize] {
        &self.accept
    }

    pub fn state_names(&self) -> &[String] {
        &self.state_names
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    /// Index of the blank source symbol.
    pub fn blank(&self) -> usize {
        0
    }

    /// Garbage symbol recording the transition out of (q, x).
    pub fn garbage_symbol(&self, q: usize, x: usize) -> usize {
        1 + q * self.input_dim + x
    }

    pub fn triple_index(&self, q: usize, x: usize, s: usize) -> usize {
        debug_assert!(q < self.state_dim && x < self.input_dim && s < self.sg_dim);
        (q * self.input_dim + x) * self.sg_dim + s
    }

    pub fn triple_from_index(&self, index: usize) -> (usize, usize, usize) {
        let s = index % self.sg_dim;
        let rest = index / self.sg_dim;
        (rest / self.input_dim, rest % self.input_dim, s)
    }

    pub fn apply(&self, q: usize, x: usize, s: usize) -> (usize, usize, usize) {
        self.triple_from_index(self.step[self.triple_index(q, x, s)])
    }

    /// The inverse bijection as an index map.
    pub fn inverse_mapping(&self) -> Vec<usize> {
        let mut inv = vec![0; self.step.len()];
        for (i, &j) in self.step.iter().enumerate() {
            inv[j] = i;
        }
        inv
    }
}

/// Reversibilizes a DFA into a single two-tape step.
pub fn reversibilize_dfa(d: &Dfa) -> ReversibleStep {
    let state_dim = d.n_states();
    let input_dim = d.alphabet().len();
    let sg_dim = state_dim * input_dim + 1;
    let size = state_dim * input_dim * sg_dim;
    let index = |q: usize, x: usize, s: usize| (q * input_dim + x) * sg_dim + s;

    let mut partial = vec![None; size];
    for q in 0..state_dim {
        for x in 0..input_dim {
            let gamma = 1 + q * input_dim + x;
            partial[index(q, x, 0)] = Some(index(d.delta(q, x), x, gamma));
        }
    }
    let step = complete_bijection(&partial)
        .expect("(delta(q,x), x, γ_{(q,x)}) is injective because γ names (q,x)");
    ReversibleStep {
        state_dim,
        input_dim,
        sg_dim,
        step,
        start: d.start(),
        accept: d.accept().to_vec(),
        state_names: d.state_names().to_vec(),
        symbols: d.alphabet().to_vec(),
    }
}

/// Final tape contents of one processed cell: the preserved input symbol and
/// the garbage symbol written over the blank.
pub type GarbageRecord = Vec<(usize, usize)>;

/// Runs the reversible step across a word, one fresh (input, source) cell
/// pair per symbol. Returns the final state and the per-cell tape contents.
pub fn run_reversible(r: &ReversibleStep, word: &[usize]) -> Result<(usize, GarbageRecord)> {
    check_word(word, r.input_dim)?;
    let mut q = r.start;
    let mut record = Vec::with_capacity(word.len());
    for &x in word {
        let (q_next, x_out, s_out) = r.apply(q, x, r.blank());
        record.push((x_out, s_out));
        q = q_next;
    }
    Ok((q, record))
}

/// Undoes a forward run: feeds the final state and tape record through the
/// inverse step, right to left. Returns the reconstructed start state, word,
/// and source-cell contents (all blank when the record came from a forward
/// run).
pub fn invert_run(
    r: &ReversibleStep,
    q_end: usize,
    record: &[(usize, usize)],
) -> (usize, Vec<usize>, Vec<usize>) {
    let inv = r.inverse_mapping();
    let mut q = q_end;
    let mut word = vec![0; record.len()];
    let mut sources = vec![0; record.len()];
    for (k, &(x_out, s_out)) in record.iter().enumerate().rev() {
        let (q_prev, x, s) = r.triple_from_index(inv[r.triple_index(q, x_out, s_out)]);
        word[k] = x;
        sources[k] = s;
        q = q_prev;
    }
    (q, word, sources)
}

/// A fixed-length acceptor: `n` copies of the reversible step share the
/// state line, each with its own input and source cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiniteEventCircuit {
    step: ReversibleStep,
    n: usize,
}

impl DefiniteEventCircuit {
    pub fn step(&self) -> &ReversibleStep {
        &self.step
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Threads a length-n word through the chain.
    pub fn evaluate(&self, word: &[usize]) -> Result<(usize, GarbageRecord)> {
        if word.len() != self.n {
            return Err(Error::DimensionMismatch {
                context: "definite event word length",
                expected: self.n,
                actual: word.len(),
            });
        }
        run_reversible(&self.step, word)
    }

    /// True iff the final state line lands in the accept set.
    pub fn accepts(&self, word: &[usize]) -> Result<bool> {
        let (q_end, _) = self.evaluate(word)?;
        Ok(self.step.accept.binary_search(&q_end).is_ok())
    }
}

/// Builds the length-n acceptor circuit for a reversible step.
pub fn definite_event_circuit(r: &ReversibleStep, n: usize) -> DefiniteEventCircuit {
    DefiniteEventCircuit { step: r.clone(), n }
}

/// Fixed test automata over Σ = {a, b}, covering group and non-group
/// regular languages.
pub fn corpus() -> Vec<(&'static str, Dfa)> {
    let ab = || vec!["a".to_string(), "b".to_string()];
    let names = |n: usize| (0..n).map(|q| format!("q{q}")).collect::<Vec<_>>();
    vec![
        // even number of a's
        (
            "parity-of-a",
            Dfa::new(names(2), ab(), 0, vec![0], vec![vec![1, 0], vec![0, 1]]).unwrap(),
        ),
        // last symbol is a
        (
            "ends-with-a",
            Dfa::new(names(2), ab(), 0, vec![1], vec![vec![1, 0], vec![1, 0]]).unwrap(),
        ),
        // number of a's divisible by 3
        (
            "count-a-mod-3",
            Dfa::new(names(3), ab(), 0, vec![0], vec![vec![1, 0], vec![2, 1], vec![0, 2]])
                .unwrap(),
        ),
        // contains "ab" as a substring
        (
            "contains-ab",
            Dfa::new(names(3), ab(), 0, vec![2], vec![vec![1, 0], vec![1, 2], vec![2, 2]])
                .unwrap(),
        ),
        // accepts everything
        ("accept-all", Dfa::new(names(1), ab(), 0, vec![0], vec![vec![0, 0]]).unwrap()),
    ]
}

/// All words over `alphabet_len` symbols with length ≤ `max_len`, in
/// shortlex order (the empty word first).
pub fn enumerate_words(alphabet_len: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut words = vec![vec![]];
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * alphabet_len);
        for w in &frontier {
            for x in 0..alphabet_len {
                let mut v = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    words
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_dfa, random_word, seeded_rng};
    use rand::Rng;

    fn w(d: &Dfa, text: &str) -> Vec<usize> {
        text.chars().map(|c| d.symbol_index(&c.to_string()).unwrap()).collect()
    }

    fn corpus_dfa(name: &str) -> Dfa {
        corpus().into_iter().find(|(n, _)| *n == name).unwrap().1
    }

    #[test]
    fn acceptance_by_delta_iteration() {
        let parity = corpus_dfa("parity-of-a");
        assert!(dfa_accepts(&parity, &w(&parity, "")).unwrap());
        assert!(dfa_accepts(&parity, &w(&parity, "aa")).unwrap());
        // two a's: q0 -> q1 -> q1 -> q0, which accepts
        assert!(dfa_accepts(&parity, &w(&parity, "aba")).unwrap());
        assert!(!dfa_accepts(&parity, &w(&parity, "a")).unwrap());
        assert!(matches!(
            dfa_accepts(&parity, &[7]),
            Err(Error::SymbolOutOfRange { index: 7, size: 2 })
        ));
    }

    #[test]
    fn corpus_matches_independent_predicates() {
        let predicates: Vec<(&str, fn(&[usize]) -> bool)> = vec![
            ("parity-of-a", |u| u.iter().filter(|&&x| x == 0).count() % 2 == 0),
            ("ends-with-a", |u| u.last() == Some(&0)),
            ("count-a-mod-3", |u| u.iter().filter(|&&x| x == 0).count() % 3 == 0),
            ("contains-ab", |u| u.windows(2).any(|p| p == [0, 1])),
            ("accept-all", |_| true),
        ];
        for (name, pred) in predicates {
            let d = corpus_dfa(name);
            for word in enumerate_words(2, 8) {
                assert_eq!(dfa_accepts(&d, &word).unwrap(), pred(&word), "{name} on {word:?}");
            }
        }
    }

    #[test]
    fn reversible_step_structure() {
        let r = reversibilize_dfa(&corpus_dfa("parity-of-a"));
        assert_eq!(r.sg_dim(), 5);
        // (q0, a, blank) -> (q1, a, γ_{(q0,a)})
        assert_eq!(r.apply(0, 0, 0), (1, 0, 1));
        // and backwards
        let inv = r.inverse_mapping();
        assert_eq!(r.triple_from_index(inv[r.triple_index(1, 0, 1)]), (0, 0, 0));
    }

    #[test]
    fn blank_restriction_simulates_delta() {
        for (name, d) in corpus() {
            let r = reversibilize_dfa(&d);
            assert_eq!(r.sg_dim(), d.n_states() * d.alphabet().len() + 1);
            for q in 0..d.n_states() {
                for x in 0..d.alphabet().len() {
                    let (q2, x2, s2) = r.apply(q, x, r.blank());
                    assert_eq!(q2, d.delta(q, x), "{name}");
                    assert_eq!(x2, x, "input cell preserved");
                    assert_eq!(s2, r.garbage_symbol(q, x));
                }
            }
        }
    }

    #[test]
    fn forward_runs_track_delta_star() {
        for (_, d) in corpus() {
            let r = reversibilize_dfa(&d);
            for word in enumerate_words(2, 8) {
                let (q_end, record) = run_reversible(&r, &word).unwrap();
                assert_eq!(d.is_accepting(q_end), dfa_accepts(&d, &word).unwrap());
                assert_eq!(record.len(), word.len());
            }
        }
    }

    #[test]
    fn single_step_record() {
        let r = reversibilize_dfa(&corpus_dfa("parity-of-a"));
        let (q_end, record) = run_reversible(&r, &[0]).unwrap();
        assert_eq!(q_end, 1);
        assert_eq!(record, vec![(0, 1)]);
        let (q_end, record) = run_reversible(&r, &[]).unwrap();
        assert_eq!(q_end, r.start());
        assert!(record.is_empty());
    }

    #[test]
    fn backward_runs_reconstruct_the_input() {
        let mut rng = seeded_rng(61);
        let alphabet: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        for _ in 0..1000 {
            let n_states = 1 + rng.gen_range(0..5usize);
            let k = 1 + rng.gen_range(0..alphabet.len());
            let d = random_dfa(n_states, &alphabet[..k], &mut rng);
            let r = reversibilize_dfa(&d);
            let word = random_word(k, rng.gen_range(0..=10), &mut rng);
            let (q_end, record) = run_reversible(&r, &word).unwrap();
            let (q0, reconstructed, sources) = invert_run(&r, q_end, &record);
            assert_eq!(q0, d.start());
            assert_eq!(reconstructed, word);
            assert!(sources.iter().all(|&s| s == r.blank()));
        }
    }

    #[test]
    fn garbage_cells_are_write_once() {
        // cell k's final content depends only on the first k+1 symbols
        for (_, d) in corpus() {
            let r = reversibilize_dfa(&d);
            for word in enumerate_words(2, 6) {
                let (_, record) = run_reversible(&r, &word).unwrap();
                for k in 0..word.len() {
                    let (_, prefix_record) = run_reversible(&r, &word[..k]).unwrap();
                    assert_eq!(record[..k], prefix_record[..]);
                }
            }
        }
    }

    #[test]
    fn definite_event_circuits_accept_fixed_length_slices() {
        let parity = corpus_dfa("parity-of-a");
        let r = reversibilize_dfa(&parity);

        let c0 = definite_event_circuit(&r, 0);
        let (q_end, record) = c0.evaluate(&[]).unwrap();
        assert_eq!(q_end, r.start());
        assert!(record.is_empty());

        let c2 = definite_event_circuit(&r, 2);
        assert!(c2.accepts(&w(&parity, "aa")).unwrap());
        assert!(matches!(c2.evaluate(&[0]), Err(Error::DimensionMismatch { .. })));

        let c3 = definite_event_circuit(&r, 3);
        for word in enumerate_words(2, 3).into_iter().filter(|u| u.len() == 3) {
            assert_eq!(c3.accepts(&word).unwrap(), dfa_accepts(&parity, &word).unwrap());
        }
    }

    #[test]
    fn definite_event_circuits_agree_with_dfa_on_corpus() {
        for (name, d) in corpus() {
            let r = reversibilize_dfa(&d);
            for n in 0..=6usize {
                let c = definite_event_circuit(&r, n);
                for word in enumerate_words(2, n).into_iter().filter(|u| u.len() == n) {
                    assert_eq!(
                        c.accepts(&word).unwrap(),
                        dfa_accepts(&d, &word).unwrap(),
                        "{name} n={n} {word:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn word_enumeration_is_shortlex_and_complete() {
        let words = enumerate_words(2, 8);
        assert_eq!(words.len(), 511);
        assert_eq!(words[0], Vec::<usize>::new());
        assert!(words.windows(2).all(|p| p[0].len() <= p[1].len()));
    }
}
