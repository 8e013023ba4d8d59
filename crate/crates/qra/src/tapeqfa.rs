//! The two-tape quantum automaton: an internal space H, a quantum input
//! tape of I-cells, a source-garbage tape of SG-cells, and one unitary U on
//! H ⊗ I ⊗ SG applied per cell as the head moves right.
//!
//! Slot layout of a running state: slot 0 is H, then cells in head order,
//! each contributing its I slot followed (once materialized) by its SG slot.
//! SG cells are created in the blank state immediately before their step.

use crate::automata::ReversibleStep;
use crate::error::{Error, Result};
use crate::tensor::{
    apply_local, is_unitary, partial_trace, ComplexOperator, ComplexVector, DensityOperator,
    SlotLayout, TOL_ALGEBRAIC, TOL_SPECTRAL,
};

/// Default cap on global-state amplitudes for the full path.
pub const DEFAULT_MAX_AMPLITUDES: usize = 1 << 24;

/// Display names for cell basis states when none are given: a, b, c, …
pub fn default_symbols(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if n <= 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("s{i}")
            }
        })
        .collect()
}

/// A two-tape quantum automaton. Construction enforces the model
/// invariants: normalized initial state and unitary evolution.
#[derive(Debug, Clone, PartialEq)]
pub struct TapeQfa {
    h_dim: usize,
    i_dim: usize,
    sg_dim: usize,
    blank: usize,
    s0: ComplexVector,
    accept: Vec<usize>,
    u: ComplexOperator,
    symbols: Vec<String>,
}

impl TapeQfa {
    pub fn new(
        s0: ComplexVector,
        accept: Vec<usize>,
        i_dim: usize,
        sg_dim: usize,
        blank: usize,
        u: ComplexOperator,
        symbols: Vec<String>,
    ) -> Result<Self> {
        let h_dim = s0.dim();
        if i_dim == 0 || sg_dim == 0 {
            return Err(Error::InvalidModel("cell dimensions must be positive".into()));
        }
        if blank >= sg_dim {
            return Err(Error::IndexOutOfRange { index: blank, dim: sg_dim });
        }
        if u.rows() != h_dim * i_dim * sg_dim || !u.is_square() {
            return Err(Error::DimensionMismatch {
                context: "evolution operator dimension",
                expected: h_dim * i_dim * sg_dim,
                actual: u.rows(),
            });
        }
        if symbols.len() != i_dim {
            return Err(Error::DimensionMismatch {
                context: "one symbol name per input basis state",
                expected: i_dim,
                actual: symbols.len(),
            });
        }
        if !s0.is_normalized(TOL_ALGEBRAIC) {
            return Err(Error::NotNormalized { norm_sqr: s0.norm_sqr() });
        }
        if !is_unitary(&u, TOL_ALGEBRAIC)? {
            return Err(Error::InvalidModel("evolution operator is not unitary".into()));
        }
        let mut accept = accept;
        accept.sort_unstable();
        accept.dedup();
        for &i in &accept {
            if i >= h_dim {
                return Err(Error::IndexOutOfRange { index: i, dim: h_dim });
            }
        }
        Ok(Self { h_dim, i_dim, sg_dim, blank, s0, accept, u, symbols })
    }

    pub fn h_dim(&self) -> usize {
        self.h_dim
    }

    pub fn i_dim(&self) -> usize {
        self.i_dim
    }

    pub fn sg_dim(&self) -> usize {
        self.sg_dim
    }

    pub fn blank(&self) -> usize {
        self.blank
    }

    pub fn s0(&self) -> &ComplexVector {
        &self.s0
    }

    pub fn accept(&self) -> &[usize] {
        &self.accept
    }

    pub fn unitary(&self) -> &ComplexOperator {
        &self.u
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol_index(&self, symbol: &str) -> Result<usize> {
        self.symbols
            .iter()
            .position(|s| s == symbol)
            .ok_or_else(|| Error::UnknownSymbol { symbol: symbol.to_string() })
    }

    /// Number of cells a word state spans; its dimension must be a power of
    /// the cell dimension. A one-dimensional word state counts as zero cells.
    pub fn infer_word_cells(&self, word_state: &ComplexVector) -> Result<usize> {
        let mut d = word_state.dim();
        if self.i_dim == 1 {
            // every power collapses to dimension 1; treat it as the empty word
            if d == 1 {
                return Ok(0);
            }
        }
        let mut n = 0;
        while d > 1 {
            if self.i_dim < 2 || d % self.i_dim != 0 {
                return Err(Error::DimensionMismatch {
                    context: "word state dimension must be a power of the cell dimension",
                    expected: self.i_dim,
                    actual: word_state.dim(),
                });
            }
            d /= self.i_dim;
            n += 1;
        }
        Ok(n)
    }

    /// The basis product state |w₁ … w_n⟩ on n input cells. The vector is
    /// materialized, so its dimension is bounded by [`DEFAULT_MAX_AMPLITUDES`];
    /// longer words run cell-by-cell via [`Self::basis_cells`], or pass a
    /// larger bound to [`Self::basis_word_state_cap`].
    pub fn basis_word_state(&self, word: &[usize]) -> Result<ComplexVector> {
        self.basis_word_state_cap(word, DEFAULT_MAX_AMPLITUDES)
    }

    /// [`Self::basis_word_state`] with an explicit amplitude bound.
    pub fn basis_word_state_cap(&self, word: &[usize], cap: usize) -> Result<ComplexVector> {
        let mut index = 0usize;
        let mut dim = 1usize;
        for &x in word {
            if x >= self.i_dim {
                return Err(Error::SymbolOutOfRange { index: x, size: self.i_dim });
            }
            dim = match dim.checked_mul(self.i_dim) {
                Some(d) if d <= cap => d,
                Some(d) => return Err(Error::ResourceCap { required: d, cap }),
                None => return Err(Error::ResourceCap { required: usize::MAX, cap }),
            };
            index = index * self.i_dim + x;
        }
        Ok(ComplexVector::basis(dim, index))
    }

    /// One basis density operator per symbol, for the traced path.
    pub fn basis_cells(&self, word: &[usize]) -> Result<Vec<DensityOperator>> {
        word.iter()
            .map(|&x| {
                if x >= self.i_dim {
                    return Err(Error::SymbolOutOfRange { index: x, size: self.i_dim });
                }
                Ok(DensityOperator::basis(self.i_dim, x))
            })
            .collect()
    }
}

/// Embeds a reversible automaton step: U permutes the basis of
/// Q × Σ × SG exactly, the initial state is the start state, and acceptance
/// projects onto the given states.
pub fn from_reversible_dfa(r: &ReversibleStep, accept: &[usize]) -> TapeQfa {
    TapeQfa::new(
        ComplexVector::basis(r.state_dim(), r.start()),
        accept.to_vec(),
        r.input_dim(),
        r.sg_dim(),
        r.blank(),
        ComplexOperator::permutation(r.mapping().to_vec()),
        r.symbols().to_vec(),
    )
    .expect("a reversible step is a normalized, unitary machine")
}

/// A global state of the running automaton.
#[derive(Debug, Clone, PartialEq)]
pub struct TapeState {
    layout: SlotLayout,
    vector: ComplexVector,
    word_cells: usize,
    materialized: usize,
}

impl TapeState {
    pub fn layout(&self) -> &SlotLayout {
        &self.layout
    }

    pub fn vector(&self) -> &ComplexVector {
        &self.vector
    }

    /// Cells the word spans.
    pub fn word_cells(&self) -> usize {
        self.word_cells
    }

    /// Cells whose SG slot has been created (equals the steps taken).
    pub fn materialized_cells(&self) -> usize {
        self.materialized
    }

    /// Slot index of cell j's input space (cells are 1-based).
    pub fn input_slot(&self, j: usize) -> usize {
        assert!(j >= 1 && j <= self.word_cells);
        if j <= self.materialized {
            2 * j - 1
        } else {
            2 * self.materialized + (j - self.materialized)
        }
    }

    /// Slot index of cell j's source-garbage space, if materialized.
    pub fn sg_slot(&self, j: usize) -> Option<usize> {
        (j >= 1 && j <= self.materialized).then_some(2 * j)
    }

    /// Reduced density operator on the given slots (ascending order).
    pub fn reduced(&self, slots: &[usize]) -> Result<DensityOperator> {
        self.vector.reduced_density(&self.layout, slots)
    }

    /// Reduced state of the internal space.
    pub fn internal_density(&self) -> DensityOperator {
        self.reduced(&[0]).expect("slot 0 always exists")
    }

    /// Probability of measuring the internal space in the given basis states.
    pub fn acceptance_probability(&self, accept: &[usize]) -> f64 {
        let stride = self.layout.strides()[0];
        let mut accepted = vec![false; self.layout.dim(0)];
        for &i in accept {
            accepted[i] = true;
        }
        let mut prob = 0.0;
        for (idx, amp) in self.vector.amplitudes().iter().enumerate() {
            if accepted[idx / stride] {
                prob += amp.norm_sqr();
            }
        }
        prob
    }

    /// Counts materialized SG cells whose reduced state differs from blank.
    pub fn garbage_cells_used(&self, q: &TapeQfa) -> usize {
        let blank = DensityOperator::basis(q.sg_dim(), q.blank());
        (1..=self.materialized)
            .filter(|&j| {
                let slot = self.sg_slot(j).expect("j ≤ materialized");
                let red = self.reduced(&[slot]).expect("slot exists");
                red.max_abs_diff(&blank) > TOL_SPECTRAL
            })
            .count()
    }
}

/// Grows the state by a fresh slot at `pos` holding the basis state `index`.
fn insert_basis_slot(
    vector: &ComplexVector,
    layout: &SlotLayout,
    pos: usize,
    dim: usize,
    index: usize,
) -> (ComplexVector, SlotLayout) {
    let low_size: usize = layout.dims()[pos..].iter().product();
    let mut out = ComplexVector::zeros(vector.dim() * dim);
    {
        let amps = out.amplitudes_mut();
        for (idx, &amp) in vector.amplitudes().iter().enumerate() {
            let high = idx / low_size;
            let low = idx % low_size;
            amps[(high * dim + index) * low_size + low] = amp;
        }
    }
    let mut grown = layout.clone();
    grown.insert(pos, dim);
    (out, grown)
}

/// Runs the full tensor-product simulation, invoking `observe` on the
/// initial state and after every step.
fn drive<F>(
    q: &TapeQfa,
    word_state: &ComplexVector,
    n: usize,
    cap: usize,
    mut observe: F,
) -> Result<TapeState>
where
    F: FnMut(usize, &TapeState),
{
    if q.i_dim.pow(n as u32) != word_state.dim() {
        return Err(Error::DimensionMismatch {
            context: "word state dimension for the requested cell count",
            expected: q.i_dim.pow(n as u32),
            actual: word_state.dim(),
        });
    }
    if !word_state.is_normalized(TOL_ALGEBRAIC) {
        return Err(Error::NotNormalized { norm_sqr: word_state.norm_sqr() });
    }
    let initial_dim = q.h_dim * word_state.dim();
    if initial_dim > cap {
        return Err(Error::ResourceCap { required: initial_dim, cap });
    }

    let mut dims = vec![q.h_dim];
    dims.extend(std::iter::repeat(q.i_dim).take(n));
    let mut state = TapeState {
        layout: SlotLayout::new(dims),
        vector: q.s0.kron(word_state),
        word_cells: n,
        materialized: 0,
    };
    observe(0, &state);

    for k in 1..=n {
        let required = state.vector.dim() * q.sg_dim;
        if required > cap {
            return Err(Error::ResourceCap { required, cap });
        }
        // cell k's input sits at slot 2k−1; its SG slot appears right after
        let (vector, layout) =
            insert_basis_slot(&state.vector, &state.layout, 2 * k, q.sg_dim, q.blank);
        state.vector = apply_local(&q.u, &vector, &layout, &[0, 2 * k - 1, 2 * k])?;
        state.layout = layout;
        state.materialized = k;
        observe(k, &state);
    }
    Ok(state)
}

/// Full-path run on an explicit cell count (needed when the cell dimension
/// is 1 and the count cannot be inferred).
pub fn run_full_n(
    q: &TapeQfa,
    word_state: &ComplexVector,
    n: usize,
    cap: usize,
) -> Result<TapeState> {
    drive(q, word_state, n, cap, |_, _| {})
}

/// Full-path run; the cell count is inferred from the word dimension.
pub fn run_full(q: &TapeQfa, word_state: &ComplexVector, cap: usize) -> Result<TapeState> {
    let n = q.infer_word_cells(word_state)?;
    run_full_n(q, word_state, n, cap)
}

/// Full-path run returning the state after every step (n + 1 snapshots).
pub fn run_full_states(
    q: &TapeQfa,
    word_state: &ComplexVector,
    cap: usize,
) -> Result<Vec<TapeState>> {
    let n = q.infer_word_cells(word_state)?;
    run_full_states_n(q, word_state, n, cap)
}

/// Snapshot run with an explicit cell count.
pub fn run_full_states_n(
    q: &TapeQfa,
    word_state: &ComplexVector,
    n: usize,
    cap: usize,
) -> Result<Vec<TapeState>> {
    let mut states = Vec::with_capacity(n + 1);
    drive(q, word_state, n, cap, |_, s| states.push(s.clone()))?;
    Ok(states)
}

/// Acceptance probability by full tensor simulation.
pub fn accept_prob_full(q: &TapeQfa, word_state: &ComplexVector) -> Result<f64> {
    accept_prob_full_with_cap(q, word_state, DEFAULT_MAX_AMPLITUDES)
}

/// Full path with an explicit amplitude cap.
pub fn accept_prob_full_with_cap(
    q: &TapeQfa,
    word_state: &ComplexVector,
    cap: usize,
) -> Result<f64> {
    Ok(run_full(q, word_state, cap)?.acceptance_probability(&q.accept))
}

/// Acceptance probability by the constant-memory traced path: each step
/// adjoins one input cell and a blank, evolves, and traces the cell out
/// again. Agrees with the full path whenever the word is the product of the
/// given cell states.
pub fn accept_prob_traced(q: &TapeQfa, cells: &[DensityOperator]) -> Result<f64> {
    let blank = DensityOperator::basis(q.sg_dim, q.blank);
    let layout = SlotLayout::new(vec![q.h_dim, q.i_dim, q.sg_dim]);
    let mut rho = DensityOperator::from_pure(&q.s0);
    for cell in cells {
        if cell.dim() != q.i_dim {
            return Err(Error::DimensionMismatch {
                context: "cell state dimension",
                expected: q.i_dim,
                actual: cell.dim(),
            });
        }
        cell.validate()?;
        let evolved = rho.kron(cell).kron(&blank).evolve(&q.u)?;
        rho = partial_trace(&evolved, &layout, &[0])?;
    }
    let mut prob = 0.0;
    for &i in &q.accept {
        prob += rho.get(i, i).re;
    }
    Ok(prob)
}

/// One step of the factorized special case: applies U to s ⊗ |symbol⟩ ⊗
/// |blank⟩ and extracts the internal factor, provided the result actually
/// factorizes (reduced internal purity ≥ 1 − 1e−10). The returned state is
/// normalized; its global phase is not meaningful.
pub fn step_factorized(q: &TapeQfa, s: &ComplexVector, symbol: usize) -> Result<ComplexVector> {
    if s.dim() != q.h_dim {
        return Err(Error::DimensionMismatch {
            context: "internal state dimension",
            expected: q.h_dim,
            actual: s.dim(),
        });
    }
    if symbol >= q.i_dim {
        return Err(Error::SymbolOutOfRange { index: symbol, size: q.i_dim });
    }
    let cell_dim = q.i_dim * q.sg_dim;
    let input = s
        .kron(&ComplexVector::basis(q.i_dim, symbol))
        .kron(&ComplexVector::basis(q.sg_dim, q.blank));
    let out = q.u.matvec(&input);

    let layout = SlotLayout::new(vec![q.h_dim, q.i_dim, q.sg_dim]);
    let purity = out.reduced_density(&layout, &[0])?.purity();
    if purity < 1.0 - TOL_SPECTRAL {
        return Err(Error::Factorization { purity });
    }
    // out = s′ ⊗ φ: slice along the heaviest cell component to read off s′
    let best_cell = (0..cell_dim)
        .max_by(|&a, &b| {
            let wa: f64 = (0..q.h_dim).map(|h| out.amplitude(h * cell_dim + a).norm_sqr()).sum();
            let wb: f64 = (0..q.h_dim).map(|h| out.amplitude(h * cell_dim + b).norm_sqr()).sum();
            wa.partial_cmp(&wb).expect("norms are finite")
        })
        .expect("cell dimension is positive");
    let slice =
        ComplexVector::new((0..q.h_dim).map(|h| out.amplitude(h * cell_dim + best_cell)).collect());
    Ok(slice.normalized())
}

/// One step of a simulation trace.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceEntry {
    /// Reduced density operator of the internal space after this step.
    pub internal: DensityOperator,
    /// Whether the global state factorizes as (internal) ⊗ (rest), judged
    /// by reduced purity ≥ 1 − 1e−10.
    pub factorized: bool,
    /// Reduced state of the SG cell written this step (absent at step 0).
    pub garbage: Option<DensityOperator>,
}

/// Per-step reduced internal states of a full-path run: entry 0 is the
/// initial state, then one entry per symbol.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationTrace {
    entries: Vec<TraceEntry>,
}

impl SimulationTrace {
    pub fn entries(&self) -> &[TraceEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Acceptance probability read from the final reduced internal state.
    pub fn accept_prob(&self, q: &TapeQfa) -> f64 {
        let last = self.entries.last().expect("a trace has at least one entry");
        q.accept.iter().map(|&i| last.internal.get(i, i).re).sum()
    }

    /// Counts steps whose garbage cell ended up off-blank.
    pub fn garbage_cells_used(&self, q: &TapeQfa) -> usize {
        let blank = DensityOperator::basis(q.sg_dim(), q.blank());
        self.entries
            .iter()
            .filter(|e| {
                e.garbage.as_ref().is_some_and(|g| g.max_abs_diff(&blank) > TOL_SPECTRAL)
            })
            .count()
    }
}

/// Runs the full path and records reduced internal states, factorization
/// flags, and written garbage-cell states.
pub fn trace_run(q: &TapeQfa, word_state: &ComplexVector) -> Result<SimulationTrace> {
    let n = q.infer_word_cells(word_state)?;
    let mut entries = Vec::with_capacity(n + 1);
    drive(q, word_state, n, DEFAULT_MAX_AMPLITUDES, |k, state| {
        let internal = state.internal_density();
        let factorized = internal.purity() >= 1.0 - TOL_SPECTRAL;
        let garbage = (k > 0).then(|| {
            state
                .reduced(&[state.sg_slot(k).expect("cell k is materialized after step k")])
                .expect("slot exists")
        });
        entries.push(TraceEntry { internal, factorized, garbage });
    })?;
    Ok(SimulationTrace { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{corpus, dfa_accepts, enumerate_words, reversibilize_dfa, Dfa};
    use crate::random::{random_state, random_unitary, random_word, seeded_rng};
    use rand::Rng;

    fn corpus_dfa(name: &str) -> Dfa {
        corpus().into_iter().find(|(n, _)| *n == name).unwrap().1
    }

    fn parity_machine() -> TapeQfa {
        let d = corpus_dfa("parity-of-a");
        let r = reversibilize_dfa(&d);
        from_reversible_dfa(&r, d.accept())
    }

    fn random_machine(rng: &mut impl Rng) -> TapeQfa {
        let h = 1 + rng.gen_range(0..3usize);
        let i = 1 + rng.gen_range(0..2usize);
        let sg = 1 + rng.gen_range(0..3usize);
        TapeQfa::new(
            random_state(h, rng),
            (0..h).filter(|_| rng.gen_bool(0.5)).collect(),
            i,
            sg,
            rng.gen_range(0..sg),
            random_unitary(h * i * sg, rng),
            default_symbols(i),
        )
        .unwrap()
    }

    #[test]
    fn embedding_dimensions_and_exact_permutation() {
        let q = parity_machine();
        assert_eq!((q.h_dim(), q.i_dim(), q.sg_dim()), (2, 2, 5));
        assert_eq!(q.unitary().rows(), 20);
        assert!(is_unitary(q.unitary(), 0.0).unwrap());
        // |q0, a, blank⟩ -> |q1, a, γ_{(q0,a)}⟩
        let out = q.unitary().matvec(&ComplexVector::basis(20, 0));
        assert_eq!(out, ComplexVector::basis(20, (1 * 2 + 0) * 5 + 1));
    }

    #[test]
    fn full_path_reproduces_classical_acceptance_exactly() {
        for (name, d) in corpus() {
            let r = reversibilize_dfa(&d);
            let q = from_reversible_dfa(&r, d.accept());
            for word in enumerate_words(2, 4) {
                let ws = q.basis_word_state(&word).unwrap();
                let p = accept_prob_full(&q, &ws).unwrap();
                let expected = if dfa_accepts(&d, &word).unwrap() { 1.0 } else { 0.0 };
                assert!(p == expected, "{name} {word:?}: {p} vs {expected}");
            }
        }
    }

    #[test]
    fn empty_word_measures_s0() {
        let q = parity_machine();
        let ws = q.basis_word_state(&[]).unwrap();
        assert_eq!(accept_prob_full(&q, &ws).unwrap(), 1.0);
        assert_eq!(accept_prob_traced(&q, &[]).unwrap(), 1.0);
    }

    #[test]
    fn superposed_one_cell_word_splits_evenly() {
        let q = parity_machine();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let ws = ComplexVector::from_real(&[h, h]);
        // the a-branch ends in q1, the b-branch in q0; garbage keeps them
        // orthogonal, so the probabilities add classically
        let p = accept_prob_full(&q, &ws).unwrap();
        assert!((p - 0.5).abs() <= 1e-12);
    }

    #[test]
    fn traced_path_matches_full_on_product_words() {
        let mut rng = seeded_rng(81);
        for _ in 0..20 {
            let q = random_machine(&mut rng);
            let len = rng.gen_range(0..=4usize);
            let pure_cells: Vec<ComplexVector> =
                (0..len).map(|_| random_state(q.i_dim(), &mut rng)).collect();
            let cells: Vec<DensityOperator> =
                pure_cells.iter().map(DensityOperator::from_pure).collect();
            let mut ws = ComplexVector::basis(1, 0);
            for c in &pure_cells {
                ws = ws.kron(c);
            }
            // explicit cell count: a one-dimensional cell space collapses
            // the word dimension, so it cannot be inferred
            let full = run_full_n(&q, &ws, len, DEFAULT_MAX_AMPLITUDES)
                .unwrap()
                .acceptance_probability(q.accept());
            let traced = accept_prob_traced(&q, &cells).unwrap();
            assert!((full - traced).abs() <= 1e-10, "full {full} vs traced {traced}");
        }
    }

    #[test]
    fn traced_path_handles_mixed_cells() {
        let q = parity_machine();
        // an even mixture of a and b on one cell: same 1/2 as the coherent
        // superposition, because the branches decohere via garbage anyway
        let half = DensityOperator::from_entries(
            2,
            vec![
                num_complex::Complex64::new(0.5, 0.0),
                num_complex::Complex64::new(0.0, 0.0),
                num_complex::Complex64::new(0.0, 0.0),
                num_complex::Complex64::new(0.5, 0.0),
            ],
        );
        let p = accept_prob_traced(&q, &[half]).unwrap();
        assert!((p - 0.5).abs() <= 1e-12);
        let junk = DensityOperator::from_entries(
            2,
            vec![
                num_complex::Complex64::new(2.0, 0.0),
                num_complex::Complex64::new(0.0, 0.0),
                num_complex::Complex64::new(0.0, 0.0),
                num_complex::Complex64::new(-1.0, 0.0),
            ],
        );
        assert!(accept_prob_traced(&q, &[junk]).is_err());
    }

    #[test]
    fn norm_is_preserved_along_the_run() {
        let mut rng = seeded_rng(82);
        for _ in 0..5 {
            let q = random_machine(&mut rng);
            let len = rng.gen_range(1..=3usize);
            let ws = random_state(q.i_dim().pow(len as u32), &mut rng);
            for state in run_full_states(&q, &ws, DEFAULT_MAX_AMPLITUDES).unwrap() {
                assert!(state.vector().is_normalized(1e-12));
            }
        }
    }

    #[test]
    fn later_cells_are_untouched_by_earlier_steps() {
        let mut rng = seeded_rng(83);
        for _ in 0..5 {
            let q = random_machine(&mut rng);
            let n = 3;
            let ws = random_state(q.i_dim().pow(n as u32), &mut rng);
            let states = run_full_states_n(&q, &ws, n, DEFAULT_MAX_AMPLITUDES).unwrap();
            for k in 1..=n {
                let before = &states[k - 1];
                let after = &states[k];
                for j in (k + 1)..=n {
                    let rb = before.reduced(&[before.input_slot(j)]).unwrap();
                    let ra = after.reduced(&[after.input_slot(j)]).unwrap();
                    assert!(rb.max_abs_diff(&ra) <= 1e-12, "cell {j} changed at step {k}");
                }
            }
        }
    }

    #[test]
    fn factorized_stepping_on_basis_states() {
        let q = parity_machine();
        let s = step_factorized(&q, &ComplexVector::basis(2, 0), 0).unwrap();
        assert_eq!(s, ComplexVector::basis(2, 1));
        let s = step_factorized(&q, &s, 0).unwrap();
        assert_eq!(s, ComplexVector::basis(2, 0));
    }

    #[test]
    fn factorized_stepping_detects_entanglement() {
        let q = parity_machine();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        // the two branches write different garbage symbols, entangling the
        // internal state with the cell
        let err = step_factorized(&q, &ComplexVector::from_real(&[h, h]), 0).unwrap_err();
        match err {
            Error::Factorization { purity } => assert!((purity - 0.5).abs() <= 1e-12),
            other => panic!("expected factorization failure, got {other:?}"),
        }
    }

    #[test]
    fn identity_evolution_factorizes_trivially() {
        let q = TapeQfa::new(
            ComplexVector::from_real(&[0.6, 0.8]),
            vec![0],
            2,
            3,
            0,
            ComplexOperator::identity(12),
            default_symbols(2),
        )
        .unwrap();
        let s = ComplexVector::from_real(&[0.6, 0.8]);
        let out = step_factorized(&q, &s, 1).unwrap();
        assert!((out.amplitude(0).re - 0.6).abs() <= 1e-12);
        assert!((out.amplitude(1).re - 0.8).abs() <= 1e-12);
    }

    #[test]
    fn traces_record_reduced_states_and_flags() {
        let q = parity_machine();
        let ws = q.basis_word_state(&[0, 0]).unwrap();
        let trace = trace_run(&q, &ws).unwrap();
        assert_eq!(trace.len(), 3);
        let pure_at = [0usize, 1, 0];
        for (entry, &qstate) in trace.entries().iter().zip(&pure_at) {
            assert!(entry.factorized);
            assert_eq!(entry.internal.get(qstate, qstate).re, 1.0);
        }
        assert!((trace.accept_prob(&q) - 1.0).abs() == 0.0);
        assert_eq!(trace.garbage_cells_used(&q), 2);

        let empty = trace_run(&q, &q.basis_word_state(&[]).unwrap()).unwrap();
        assert_eq!(empty.len(), 1);
        assert!(empty.entries()[0].garbage.is_none());

        let h = std::f64::consts::FRAC_1_SQRT_2;
        let superposed = trace_run(&q, &ComplexVector::from_real(&[h, h])).unwrap();
        assert!(!superposed.entries()[1].factorized);
        assert!((superposed.entries()[1].internal.purity() - 0.5).abs() <= 1e-12);
    }

    #[test]
    fn garbage_grows_one_cell_per_symbol() {
        let q = parity_machine();
        for len in 0..=4usize {
            let word = vec![0; len].iter().map(|_| 0).collect::<Vec<_>>();
            let ws = q.basis_word_state(&word).unwrap();
            let state = run_full(&q, &ws, DEFAULT_MAX_AMPLITUDES).unwrap();
            assert_eq!(state.garbage_cells_used(&q), len);
        }
    }

    #[test]
    fn global_phase_of_s0_is_invisible() {
        let q = parity_machine();
        let phase = num_complex::Complex64::from_polar(1.0, 1.234);
        let phased = TapeQfa::new(
            q.s0().scale(phase),
            q.accept().to_vec(),
            q.i_dim(),
            q.sg_dim(),
            q.blank(),
            q.unitary().clone(),
            q.symbols().to_vec(),
        )
        .unwrap();
        let mut rng = seeded_rng(84);
        for _ in 0..10 {
            let word = random_word(2, rng.gen_range(0..=4), &mut rng);
            let ws = q.basis_word_state(&word).unwrap();
            let a = accept_prob_full(&q, &ws).unwrap();
            let b = accept_prob_full(&phased, &ws).unwrap();
            assert!((a - b).abs() <= 1e-12);
            let ta = accept_prob_traced(&q, &q.basis_cells(&word).unwrap()).unwrap();
            let tb = accept_prob_traced(&phased, &phased.basis_cells(&word).unwrap()).unwrap();
            assert!((ta - tb).abs() <= 1e-12);
        }
    }

    #[test]
    fn resource_cap_is_enforced() {
        let q = parity_machine();
        let ws = q.basis_word_state(&[0, 0, 0]).unwrap();
        let err = accept_prob_full_with_cap(&q, &ws, 100).unwrap_err();
        match err {
            Error::ResourceCap { required, cap } => {
                assert_eq!(cap, 100);
                assert!(required > 100);
            }
            other => panic!("expected resource cap, got {other:?}"),
        }
        // generous cap: same word goes through
        assert_eq!(accept_prob_full_with_cap(&q, &ws, 1 << 16).unwrap(), 0.0);
    }

    #[test]
    fn basis_word_states_refuse_unbuildable_dimensions() {
        let q = parity_machine();
        // a 64-cell word would need 2^64 amplitudes; the bound trips at 2^25
        let overflow = q.basis_word_state(&vec![0; 64]).unwrap_err();
        assert!(matches!(overflow, Error::ResourceCap { required, .. } if required == 1 << 25));
        let too_big = q.basis_word_state(&vec![0; 25]).unwrap_err();
        match too_big {
            Error::ResourceCap { required, cap } => {
                assert_eq!(required, 1 << 25);
                assert_eq!(cap, DEFAULT_MAX_AMPLITUDES);
            }
            other => panic!("expected resource cap, got {other:?}"),
        }
        // a custom bound is both enforced and reported
        let tight = q.basis_word_state_cap(&[0; 4], 8).unwrap_err();
        assert!(matches!(tight, Error::ResourceCap { required: 16, cap: 8 }));
        assert_eq!(q.basis_word_state_cap(&[0; 4], 16).unwrap().dim(), 16);
        // the traced path takes the same word without materializing it
        assert_eq!(q.basis_cells(&vec![0; 64]).unwrap().len(), 64);
    }

    #[test]
    fn ill_shaped_inputs_are_rejected() {
        let q = parity_machine();
        // dimension 3 is not a power of 2
        let ws = ComplexVector::from_real(&[1.0, 0.0, 0.0]);
        assert!(matches!(accept_prob_full(&q, &ws), Err(Error::DimensionMismatch { .. })));
        let unnormalized = ComplexVector::from_real(&[1.0, 1.0]);
        assert!(matches!(accept_prob_full(&q, &unnormalized), Err(Error::NotNormalized { .. })));
        assert!(q.basis_word_state(&[5]).is_err());

        let bad_machine = TapeQfa::new(
            ComplexVector::from_real(&[1.0, 1.0]),
            vec![0],
            2,
            5,
            0,
            ComplexOperator::identity(20),
            default_symbols(2),
        );
        assert!(matches!(bad_machine, Err(Error::NotNormalized { .. })));
    }
}
