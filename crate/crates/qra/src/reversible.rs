//! Reversible boolean logic: turning truth tables into bijections on bit
//! words, inverses, XOR-copy circuits, compute-copy-uncompute composition
//! and garbage accounting.
//!
//! Bit order: line 0 is the most significant bit of a word's index.

use crate::error::{Error, Result};
use crate::tensor::ComplexOperator;

/// A total boolean function on bit words: `rows[x]` is the output word for
/// input word `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    n_in: usize,
    n_out: usize,
    rows: Vec<usize>,
}

impl TruthTable {
    pub fn new(n_in: usize, n_out: usize, rows: Vec<usize>) -> Result<Self> {
        if rows.len() != 1 << n_in {
            return Err(Error::DimensionMismatch {
                context: "truth table row count",
                expected: 1 << n_in,
                actual: rows.len(),
            });
        }
        for &y in &rows {
            if y >= 1 << n_out {
                return Err(Error::IndexOutOfRange { index: y, dim: 1 << n_out });
            }
        }
        Ok(Self { n_in, n_out, rows })
    }

    /// Two-input AND.
    pub fn and2() -> Self {
        Self::new(2, 1, vec![0, 0, 0, 1]).unwrap()
    }

    /// Two-input XOR.
    pub fn xor2() -> Self {
        Self::new(2, 1, vec![0, 1, 1, 0]).unwrap()
    }

    /// The identity on `n`-bit words.
    pub fn identity(n: usize) -> Self {
        Self::new(n, n, (0..1 << n).collect()).unwrap()
    }

    pub fn n_in(&self) -> usize {
        self.n_in
    }

    pub fn n_out(&self) -> usize {
        self.n_out
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn eval(&self, x: usize) -> usize {
        self.rows[x]
    }

    /// True when the table is a bijection on equal-width words.
    pub fn is_bijection(&self) -> bool {
        if self.n_in != self.n_out {
            return false;
        }
        let mut seen = vec![false; self.rows.len()];
        for &y in &self.rows {
            if seen[y] {
                return false;
            }
            seen[y] = true;
        }
        true
    }
}

/// Role of a line on the input side of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InRole {
    /// Prepared blank (0) by convention.
    Source,
    /// Carries a data bit.
    Data,
}

/// Role of a line on the output side of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutRole {
    /// Holds a function-result bit.
    Result,
    /// Holds a bit that is neither result nor restored blank.
    Garbage,
    /// Restored to 0.
    Source,
    /// Preserves an input data bit.
    Data,
}

/// Per-line roles on both sides of a permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineLayout {
    pub in_roles: Vec<InRole>,
    pub out_roles: Vec<OutRole>,
}

impl LineLayout {
    pub fn count_in(&self, role: InRole) -> usize {
        self.in_roles.iter().filter(|&&r| r == role).count()
    }

    pub fn count_out(&self, role: OutRole) -> usize {
        self.out_roles.iter().filter(|&&r| r == role).count()
    }
}

/// A bijection on `width`-bit words, optionally annotated with line roles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReversiblePermutation {
    width: usize,
    mapping: Vec<usize>,
    layout: Option<LineLayout>,
    /// Elementary permutations this value stands for (3 for a
    /// compute-copy-uncompute composite, 1 otherwise).
    stages: usize,
}

impl ReversiblePermutation {
    pub fn new(width: usize, mapping: Vec<usize>, layout: Option<LineLayout>) -> Result<Self> {
        assert!(width <= 24, "word width too large to tabulate");
        let size = 1usize << width;
        if mapping.len() != size {
            return Err(Error::DimensionMismatch {
                context: "permutation point count",
                expected: size,
                actual: mapping.len(),
            });
        }
        let mut seen = vec![false; size];
        for &y in &mapping {
            if y >= size {
                return Err(Error::IndexOutOfRange { index: y, dim: size });
            }
            if seen[y] {
                return Err(Error::NonInjective { output: y });
            }
            seen[y] = true;
        }
        if let Some(l) = &layout {
            if l.in_roles.len() != width || l.out_roles.len() != width {
                return Err(Error::DimensionMismatch {
                    context: "layout role count",
                    expected: width,
                    actual: l.in_roles.len().max(l.out_roles.len()),
                });
            }
        }
        Ok(Self { width, mapping, layout, stages: 1 })
    }

    pub fn identity(width: usize) -> Self {
        Self::new(width, (0..1 << width).collect(), None).unwrap()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn layout(&self) -> Option<&LineLayout> {
        self.layout.as_ref()
    }

    pub fn stages(&self) -> usize {
        self.stages
    }

    pub fn apply(&self, input: usize) -> usize {
        self.mapping[input]
    }

    /// The inverse bijection. Line roles are dropped: an inverted gate
    /// consumes results, not sources.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.mapping.len()];
        for (x, &y) in self.mapping.iter().enumerate() {
            inv[y] = x;
        }
        Self { width: self.width, mapping: inv, layout: None, stages: self.stages }
    }

    /// `next` applied after `self`, as a single permutation.
    pub fn then(&self, next: &ReversiblePermutation) -> Result<Self> {
        if next.width != self.width {
            return Err(Error::DimensionMismatch {
                context: "composition width",
                expected: self.width,
                actual: next.width,
            });
        }
        Ok(Self {
            width: self.width,
            mapping: self.mapping.iter().map(|&y| next.mapping[y]).collect(),
            layout: None,
            stages: self.stages + next.stages,
        })
    }

    /// The permutation as a unitary operator on the 2^width-dimensional space.
    pub fn to_operator(&self) -> ComplexOperator {
        ComplexOperator::permutation(self.mapping.clone())
    }
}

/// Totalizes an injective partial map on {0, …, n−1}: unused inputs are
/// paired with unused outputs in ascending order (deterministic).
pub(crate) fn complete_bijection(partial: &[Option<usize>]) -> Result<Vec<usize>> {
    let n = partial.len();
    let mut used = vec![false; n];
    for &entry in partial {
        if let Some(y) = entry {
            if y >= n {
                return Err(Error::IndexOutOfRange { index: y, dim: n });
            }
            if used[y] {
                return Err(Error::NonInjective { output: y });
            }
            used[y] = true;
        }
    }
    let mut free = (0..n).filter(|&y| !used[y]);
    let mut mapping = Vec::with_capacity(n);
    for &entry in partial {
        match entry {
            Some(y) => mapping.push(y),
            None => mapping.push(free.next().expect("counts of unused inputs and outputs match")),
        }
    }
    Ok(mapping)
}

/// Totalizes an injective partial map on `width`-bit words into a
/// permutation, pairing unused points in ascending order.
pub fn permutation_completion(
    width: usize,
    partial: &[Option<usize>],
) -> Result<ReversiblePermutation> {
    if partial.len() != 1 << width {
        return Err(Error::DimensionMismatch {
            context: "partial map point count",
            expected: 1 << width,
            actual: partial.len(),
        });
    }
    let mapping = complete_bijection(partial)?;
    ReversiblePermutation::new(width, mapping, None)
}

/// Turns a truth table into a permutation that computes it.
///
/// A table that is already a bijection is returned as-is (zero source and
/// garbage lines). Otherwise the result has width n_in + n_out with lines
/// ordered (source × n_out, data × n_in): inputs (0, x) map to (f(x), x),
/// so the result lines hold f(x) and the garbage lines repeat x. Remaining
/// points are completed in ascending order.
pub fn reversibilize_table(f: &TruthTable) -> ReversiblePermutation {
    if f.is_bijection() {
        let n = f.n_in();
        let layout = LineLayout {
            in_roles: vec![InRole::Data; n],
            out_roles: vec![OutRole::Result; n],
        };
        return ReversiblePermutation::new(n, f.rows().to_vec(), Some(layout))
            .expect("a bijective table is a permutation");
    }
    let s = f.n_out();
    let i = f.n_in();
    let width = s + i;
    let mut partial = vec![None; 1 << width];
    for x in 0..1usize << i {
        // source lines are the high bits and are 0 on the defined rows
        partial[x] = Some((f.eval(x) << i) | x);
    }
    let mapping = complete_bijection(&partial).expect("(f(x), x) is injective in x");
    let layout = LineLayout {
        in_roles: [vec![InRole::Source; s], vec![InRole::Data; i]].concat(),
        out_roles: [vec![OutRole::Result; s], vec![OutRole::Garbage; i]].concat(),
    };
    ReversiblePermutation::new(width, mapping, Some(layout)).expect("completion is a bijection")
}

fn bit(word: usize, line: usize, width: usize) -> usize {
    (word >> (width - 1 - line)) & 1
}

/// Embeds a permutation on `inner_width`-bit words into `total_width` lines;
/// `lines[k]` is the outer line wired to inner line k. Other lines pass
/// through.
fn embed_on_lines(
    inner: &[usize],
    inner_width: usize,
    lines: &[usize],
    total_width: usize,
) -> Vec<usize> {
    assert_eq!(lines.len(), inner_width);
    let size = 1usize << total_width;
    let mut mapping = Vec::with_capacity(size);
    for v in 0..size {
        let mut u = 0;
        for &line in lines {
            u = (u << 1) | bit(v, line, total_width);
        }
        let u2 = inner[u];
        let mut out = v;
        for (k, &line) in lines.iter().enumerate() {
            let shift = total_width - 1 - line;
            out = (out & !(1 << shift)) | (bit(u2, k, inner_width) << shift);
        }
        mapping.push(out);
    }
    mapping
}

/// XOR of each `src` line onto the matching `dst` line, as a permutation.
fn xor_onto_lines(src: &[usize], dst: &[usize], total_width: usize) -> Vec<usize> {
    assert_eq!(src.len(), dst.len());
    let size = 1usize << total_width;
    (0..size)
        .map(|v| {
            let mut out = v;
            for (&s, &d) in src.iter().zip(dst) {
                if bit(v, s, total_width) == 1 {
                    out ^= 1 << (total_width - 1 - d);
                }
            }
            out
        })
        .collect()
}

/// The bitwise copy gate on 2·width lines: (x, y) → (x, y XOR x). Restricted
/// to y = 0 it duplicates x; it is its own inverse.
pub fn copy_circuit(width: usize) -> ReversiblePermutation {
    assert!(width >= 1, "copy needs at least one line");
    let total = 2 * width;
    let src: Vec<usize> = (0..width).collect();
    let dst: Vec<usize> = (width..total).collect();
    let mapping = xor_onto_lines(&src, &dst, total);
    let layout = LineLayout {
        in_roles: [vec![InRole::Data; width], vec![InRole::Source; width]].concat(),
        out_roles: [vec![OutRole::Data; width], vec![OutRole::Result; width]].concat(),
    };
    ReversiblePermutation::new(total, mapping, Some(layout)).expect("XOR copy is a bijection")
}

/// Compute-copy-uncompute: runs `p` forward, XOR-copies its result lines
/// onto fresh ancilla lines, then runs `p` backward.
///
/// Lines are ordered (data × i, source × s, ancilla × r). For every x the
/// composite maps (x, 0, 0) → (x, 0, f(x)): the sources come back blank and
/// only the copied result survives.
pub fn bennett_compose(p: &ReversiblePermutation) -> Result<ReversiblePermutation> {
    let layout = p.layout().ok_or(Error::LayoutMissing)?;
    let s = layout.count_in(InRole::Source);
    let i = layout.count_in(InRole::Data);
    let r = layout.count_out(OutRole::Result);
    let gate_shaped = layout.in_roles[..s].iter().all(|&x| x == InRole::Source)
        && layout.in_roles[s..].iter().all(|&x| x == InRole::Data)
        && layout.out_roles[..r].iter().all(|&x| x == OutRole::Result)
        && layout.out_roles[r..].iter().all(|&x| x == OutRole::Garbage);
    if !gate_shaped {
        return Err(Error::InvalidModel(
            "compute-copy-uncompute needs a gate layout: sources then data in, \
             results then garbage out"
            .into(),
        ));
    }

    let w = p.width();
    let total = i + s + r;
    // the gate reads its source lines from positions i..i+s and its data
    // lines from positions 0..i
    let gate_lines: Vec<usize> = (i..i + s).chain(0..i).collect();
    let forward = embed_on_lines(p.mapping(), w, &gate_lines, total);
    // the gate's result bits come out on its first r physical lines
    let copy = xor_onto_lines(
        &gate_lines[..r],
        &(i + s..total).collect::<Vec<_>>(),
        total,
    );
    let backward = embed_on_lines(p.inverse().mapping(), w, &gate_lines, total);

    let mapping: Vec<usize> = (0..1usize << total).map(|v| backward[copy[forward[v]]]).collect();
    let layout = LineLayout {
        in_roles: [vec![InRole::Data; i], vec![InRole::Source; s + r]].concat(),
        out_roles: [
            vec![OutRole::Data; i],
            vec![OutRole::Source; s],
            vec![OutRole::Result; r],
        ]
        .concat(),
    };
    let mut out = ReversiblePermutation::new(total, mapping, Some(layout))?;
    out.stages = 3;
    Ok(out)
}

/// Probability that XOR-copying reproduces |ψ⟩⊗|ψ⟩ from |ψ⟩⊗|0⟩, for
/// ψ = alpha|0⟩ + beta|1⟩. Equals 1 only when ψ is a basis state.
pub fn no_cloning_demo(alpha: num_complex::Complex64, beta: num_complex::Complex64) -> Result<f64> {
    use crate::tensor::ComplexVector;
    let norm_sqr = alpha.norm_sqr() + beta.norm_sqr();
    if (norm_sqr - 1.0).abs() > crate::tensor::TOL_ALGEBRAIC {
        return Err(Error::NotNormalized { norm_sqr });
    }
    let psi = ComplexVector::new(vec![alpha, beta]);
    let zero = ComplexVector::basis(2, 0);
    let out = copy_circuit(1).to_operator().matvec(&psi.kron(&zero));
    let clone = psi.kron(&psi);
    Ok(clone.inner(&out).norm_sqr())
}

/// Line and gate counts for a sequence of permutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GarbageStats {
    /// Input lines that must be prepared blank (including copy ancillas).
    pub source_lines: usize,
    /// Output lines holding garbage.
    pub garbage_lines: usize,
    /// Elementary permutations applied, counting composite stages.
    pub gate_count: usize,
    /// Sequential positions in the chain.
    pub steps: usize,
}

/// Tallies sources, garbage, gates and steps over a chain of permutations.
/// Unannotated permutations contribute no line counts.
pub fn garbage_stats(chain: &[ReversiblePermutation]) -> GarbageStats {
    let mut stats = GarbageStats { source_lines: 0, garbage_lines: 0, gate_count: 0, steps: 0 };
    for p in chain {
        if let Some(l) = p.layout() {
            stats.source_lines += l.count_in(InRole::Source);
            stats.garbage_lines += l.count_out(OutRole::Garbage);
        }
        stats.gate_count += p.stages();
        stats.steps += 1;
    }
    stats
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_index_map, random_truth_table, seeded_rng};
    use crate::tensor::{is_unitary, SlotLayout};

    #[test]
    fn and_gate_matches_tabulated_bijection() {
        let p = reversibilize_table(&TruthTable::and2());
        assert_eq!(p.width(), 3);
        // defined rows (0,x) -> (and(x), x); completion pairs 4..8 with 3..7
        assert_eq!(p.mapping(), &[0, 1, 2, 7, 3, 4, 5, 6]);
        // (0,1,1) -> (1,1,1)
        assert_eq!(p.apply(0b011), 0b111);
        // (0,0,1) -> (0,0,1)
        assert_eq!(p.apply(0b001), 0b001);
        let l = p.layout().unwrap();
        assert_eq!(l.count_in(InRole::Source), 1);
        assert_eq!(l.count_out(OutRole::Garbage), 2);
    }

    #[test]
    fn bijective_table_is_returned_as_is() {
        let p = reversibilize_table(&TruthTable::identity(1));
        assert_eq!(p.width(), 1);
        assert_eq!(p.mapping(), &[0, 1]);
        let l = p.layout().unwrap();
        assert_eq!(l.count_in(InRole::Source), 0);
        assert_eq!(l.count_out(OutRole::Garbage), 0);
    }

    #[test]
    fn xor_restriction_reproduces_table() {
        let f = TruthTable::xor2();
        let p = reversibilize_table(&f);
        for x in 0..4 {
            let out = p.apply(x);
            assert_eq!(out >> 2, f.eval(x), "result lines");
            assert_eq!(out & 0b11, x, "garbage lines repeat the input");
        }
    }

    #[test]
    fn restriction_reproduces_any_table() {
        let mut rng = seeded_rng(51);
        for _ in 0..100 {
            let n_in = 1 + rng.gen_range(0..4usize);
            let n_out = 1 + rng.gen_range(0..3usize);
            let f = random_truth_table(n_in, n_out, &mut rng);
            let p = reversibilize_table(&f);
            if f.is_bijection() {
                for x in 0..1usize << n_in {
                    assert_eq!(p.apply(x), f.eval(x));
                }
                continue;
            }
            assert_eq!(p.width(), n_in + n_out);
            for x in 0..1usize << n_in {
                let out = p.apply(x);
                assert_eq!(out >> n_in, f.eval(x));
                assert_eq!(out & ((1 << n_in) - 1), x);
            }
        }
    }

    use rand::Rng;

    #[test]
    fn completion_is_deterministic_and_minimal() {
        let partial = vec![Some(2), None, None, Some(1)];
        let a = permutation_completion(2, &partial).unwrap();
        let b = permutation_completion(2, &partial).unwrap();
        assert_eq!(a.mapping(), b.mapping());
        // unused inputs 1, 2 pair with unused outputs 0, 3 in order
        assert_eq!(a.mapping(), &[2, 0, 3, 1]);

        let total = vec![Some(1), Some(0), Some(3), Some(2)];
        assert_eq!(permutation_completion(2, &total).unwrap().mapping(), &[1, 0, 3, 2]);

        let empty = vec![None; 4];
        assert_eq!(permutation_completion(2, &empty).unwrap().mapping(), &[0, 1, 2, 3]);

        let clash = vec![Some(1), Some(1), None, None];
        assert!(matches!(
            permutation_completion(2, &clash),
            Err(Error::NonInjective { output: 1 })
        ));
    }

    #[test]
    fn inverse_round_trips() {
        let id = ReversiblePermutation::identity(3);
        assert_eq!(id.inverse().mapping(), id.mapping());

        let and = reversibilize_table(&TruthTable::and2());
        assert_eq!(and.inverse().apply(0b111), 0b011);

        let mut rng = seeded_rng(52);
        for _ in 0..100 {
            let p = ReversiblePermutation::new(4, random_index_map(16, &mut rng), None).unwrap();
            let round = p.then(&p.inverse()).unwrap();
            for x in 0..16 {
                assert_eq!(round.apply(x), x);
            }
            assert_eq!(p.inverse().inverse().mapping(), p.mapping());
        }
    }

    #[test]
    fn copy_duplicates_and_self_inverts() {
        let c = copy_circuit(3);
        assert_eq!(c.apply(0b101_000), 0b101_101);
        assert_eq!(c.apply(0b101_101), 0b101_000);
        for v in 0..64 {
            assert_eq!(c.apply(c.apply(v)), v);
        }
    }

    #[test]
    fn copy_entangles_superpositions() {
        use crate::tensor::ComplexVector;
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus = ComplexVector::from_real(&[h, h]);
        let input = plus.kron(&ComplexVector::basis(2, 0));
        let out = copy_circuit(1).to_operator().matvec(&input);
        // (|00⟩ + |11⟩)/√2
        assert!((out.amplitude(0b00).re - h).abs() <= 1e-12);
        assert!((out.amplitude(0b11).re - h).abs() <= 1e-12);
        assert!(out.amplitude(0b01).norm() <= 1e-12);
        // Schmidt rank 2: the reduced state is mixed, so no product form exists
        let layout = SlotLayout::new(vec![2, 2]);
        let red = out.reduced_density(&layout, &[0]).unwrap();
        assert!((red.purity() - 0.5).abs() <= 1e-12);
    }

    #[test]
    fn bennett_restores_sources_and_keeps_result() {
        let and = bennett_compose(&reversibilize_table(&TruthTable::and2())).unwrap();
        assert_eq!(and.width(), 4);
        // (x=11, source=0, ancilla=0) -> (11, 0, 1)
        assert_eq!(and.apply(0b11_0_0), 0b11_0_1);
        // (x=01, source=0, ancilla=0) -> (01, 0, 0)
        assert_eq!(and.apply(0b01_0_0), 0b01_0_0);
        assert_eq!(and.stages(), 3);

        let ident = bennett_compose(&reversibilize_table(&TruthTable::identity(1))).unwrap();
        // bijective gate: no source section, composite is (x, 0) -> (x, x)
        assert_eq!(ident.width(), 2);
        assert_eq!(ident.apply(0b1_0), 0b1_1);
        assert_eq!(ident.apply(0b0_0), 0b0_0);
    }

    #[test]
    fn bennett_on_random_tables() {
        let mut rng = seeded_rng(53);
        let mut checked = 0;
        while checked < 50 {
            let n_out = 1 + rng.gen_range(0..3usize);
            let f = random_truth_table(3, n_out, &mut rng);
            if f.is_bijection() {
                continue;
            }
            let composite = bennett_compose(&reversibilize_table(&f)).unwrap();
            let (i, s, r) = (3, n_out, n_out);
            assert_eq!(composite.width(), i + s + r);
            for x in 0..8usize {
                let input = x << (s + r);
                let expect = (x << (s + r)) | f.eval(x);
                assert_eq!(composite.apply(input), expect, "table {:?} x={x}", f.rows());
            }
            checked += 1;
        }
    }

    #[test]
    fn bennett_requires_gate_layout() {
        let bare = ReversiblePermutation::identity(2);
        assert!(matches!(bennett_compose(&bare), Err(Error::LayoutMissing)));
        let copy = copy_circuit(1);
        assert!(matches!(bennett_compose(&copy), Err(Error::InvalidModel(_))));
    }

    #[test]
    fn cloning_fidelity_values() {
        use num_complex::Complex64;
        let c = |re: f64, im: f64| Complex64::new(re, im);
        assert!((no_cloning_demo(c(1.0, 0.0), c(0.0, 0.0)).unwrap() - 1.0).abs() <= 1e-12);
        assert!((no_cloning_demo(c(0.0, 0.0), c(1.0, 0.0)).unwrap() - 1.0).abs() <= 1e-12);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((no_cloning_demo(c(h, 0.0), c(h, 0.0)).unwrap() - 0.5).abs() <= 1e-12);
        assert!(no_cloning_demo(c(1.0, 0.0), c(1.0, 0.0)).is_err());
    }

    #[test]
    fn cloning_fidelity_matches_closed_form() {
        use num_complex::Complex64;
        let mut rng = seeded_rng(54);
        for _ in 0..100 {
            let a = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let b = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
            if n < 1e-3 {
                continue;
            }
            let (a, b) = (a / n, b / n);
            let fidelity = no_cloning_demo(a, b).unwrap();
            let closed = (a.conj() * a.conj() * a + b.conj() * b.conj() * b).norm_sqr();
            assert!((fidelity - closed).abs() <= 1e-12);
            let basis_state = a.norm() <= 1e-9 || b.norm() <= 1e-9;
            assert_eq!(fidelity > 1.0 - 1e-9, basis_state);
        }
    }

    #[test]
    fn garbage_accounting() {
        let and = reversibilize_table(&TruthTable::and2());
        let single = garbage_stats(std::slice::from_ref(&and));
        assert_eq!(single.source_lines, 1);
        assert_eq!(single.garbage_lines, 2);
        assert_eq!(single.gate_count, 1);

        let chain: Vec<_> = (0..5).map(|_| and.clone()).collect();
        let chained = garbage_stats(&chain);
        assert_eq!(chained.garbage_lines, 5 * 2);
        assert_eq!(chained.steps, 5);

        let composite = bennett_compose(&and).unwrap();
        let stats = garbage_stats(std::slice::from_ref(&composite));
        assert_eq!(stats.garbage_lines, 0);
        assert_eq!(stats.gate_count, 3);
        let out_roles = &composite.layout().unwrap().out_roles;
        assert_eq!(out_roles.iter().filter(|&&r| r == OutRole::Result).count(), 1);
    }

    #[test]
    fn lifted_permutations_are_exactly_unitary() {
        for p in [
            reversibilize_table(&TruthTable::and2()),
            copy_circuit(2),
            bennett_compose(&reversibilize_table(&TruthTable::xor2())).unwrap(),
        ] {
            assert!(is_unitary(&p.to_operator(), 0.0).unwrap());
        }
    }
}
