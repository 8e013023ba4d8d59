//! Complex linear algebra substrate: state vectors, operators, tensor
//! products, local operator application, projectors and partial traces.
//!
//! Operators are stored dense. Operators that happen to be permutation
//! matrices additionally carry an index map, and every routine that touches
//! one follows the index map instead of summing entries, so permutation
//! arithmetic stays exact in `f64`.

use crate::error::{Error, Result};

pub use num_complex::Complex64;

/// Default tolerance for algebraic identities (unitarity, normalization).
pub const TOL_ALGEBRAIC: f64 = 1e-12;
/// Default tolerance for spectral and factorization checks.
pub const TOL_SPECTRAL: f64 = 1e-10;

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A state vector: ordered complex amplitudes over a tensor-product space.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector {
    amplitudes: Vec<Complex64>,
}

impl ComplexVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Self {
        assert!(!amplitudes.is_empty(), "vector dimension must be positive");
        Self { amplitudes }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::new(vec![ZERO; dim])
    }

    /// The computational basis vector |index⟩.
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index out of range");
        let mut amplitudes = vec![ZERO; dim];
        amplitudes[index] = ONE;
        Self { amplitudes }
    }

    pub fn from_real(values: &[f64]) -> Self {
        Self::new(values.iter().map(|&r| Complex64::new(r, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    /// Inner product ⟨self|other⟩, conjugate-linear in `self`.
    pub fn inner(&self, other: &ComplexVector) -> Complex64 {
        assert_eq!(self.dim(), other.dim(), "inner product dimension mismatch");
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// True when |⟨v|v⟩ − 1| ≤ tol.
    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm_sqr() - 1.0).abs() <= tol
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        assert!(n > 0.0, "cannot normalize the zero vector");
        self.scale(Complex64::new(1.0 / n, 0.0))
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::new(self.amplitudes.iter().map(|c| c * factor).collect())
    }

    /// Tensor product |self⟩ ⊗ |other⟩; `self` is the more significant factor.
    pub fn kron(&self, other: &ComplexVector) -> Self {
        let mut amplitudes = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amplitudes.push(a * b);
            }
        }
        Self::new(amplitudes)
    }

    /// Reduced density operator on `keep` (ascending slot indices), traced
    /// over the complement, computed straight from the amplitudes.
    pub fn reduced_density(&self, layout: &SlotLayout, keep: &[usize]) -> Result<DensityOperator> {
        layout.check_dim(self.dim())?;
        let (keep_off, tr_off) = layout.split_offsets(keep)?;
        let kd = keep_off.len();
        let mut entries = vec![ZERO; kd * kd];
        for (a, &ka) in keep_off.iter().enumerate() {
            for (b, &kb) in keep_off.iter().enumerate() {
                let mut acc = ZERO;
                for &t in &tr_off {
                    acc += self.amplitudes[ka + t] * self.amplitudes[kb + t].conj();
                }
                entries[a * kd + b] = acc;
            }
        }
        Ok(DensityOperator::from_entries(kd, entries))
    }
}

impl std::ops::Add for &ComplexVector {
    type Output = ComplexVector;

    fn add(self, other: &ComplexVector) -> ComplexVector {
        assert_eq!(self.dim(), other.dim(), "vector addition dimension mismatch");
        ComplexVector::new(
            self.amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl std::ops::Sub for &ComplexVector {
    type Output = ComplexVector;

    fn sub(self, other: &ComplexVector) -> ComplexVector {
        assert_eq!(self.dim(), other.dim(), "vector subtraction dimension mismatch");
        ComplexVector::new(
            self.amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

/// A dense complex matrix. Permutation matrices also carry `perm`, with
/// `perm[j] = i` meaning column j has its single 1 in row i.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexOperator {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
    perm: Option<Vec<usize>>,
}

impl ComplexOperator {
    /// Builds a dense operator from row-major entries. Exact 0/1 permutation
    /// matrices are detected and get an index-map representation.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Complex64>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must match dimensions");
        assert!(rows > 0 && cols > 0, "operator dimensions must be positive");
        let perm = detect_permutation(rows, cols, &entries);
        Self { rows, cols, entries, perm }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_entries(rows, cols, vec![ZERO; rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        Self::permutation((0..n).collect())
    }

    /// The permutation matrix sending basis vector |j⟩ to |map[j]⟩.
    pub fn permutation(map: Vec<usize>) -> Self {
        let n = map.len();
        let mut seen = vec![false; n];
        for &i in &map {
            assert!(i < n && !seen[i], "index map is not a bijection");
            seen[i] = true;
        }
        let mut entries = vec![ZERO; n * n];
        for (j, &i) in map.iter().enumerate() {
            entries[i * n + j] = ONE;
        }
        Self { rows: n, cols: n, entries, perm: Some(map) }
    }

    pub fn diagonal(diag: &[Complex64]) -> Self {
        let n = diag.len();
        let mut entries = vec![ZERO; n * n];
        for (i, &d) in diag.iter().enumerate() {
            entries[i * n + i] = d;
        }
        Self::from_entries(n, n, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        self.entries[row * self.cols + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// The index map when this operator is a permutation matrix.
    pub fn as_permutation(&self) -> Option<&[usize]> {
        self.perm.as_deref()
    }

    /// Conjugate transpose A†.
    pub fn adjoint(&self) -> Self {
        let mut entries = vec![ZERO; self.rows * self.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                entries[j * self.rows + i] = self.entries[i * self.cols + j].conj();
            }
        }
        let perm = self.perm.as_ref().map(|p| invert_index_map(p));
        Self { rows: self.cols, cols: self.rows, entries, perm }
    }

    pub fn matmul(&self, other: &ComplexOperator) -> Self {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        if let (Some(a), Some(b)) = (&self.perm, &other.perm) {
            return Self::permutation(b.iter().map(|&j| a[j]).collect());
        }
        let mut entries = vec![ZERO; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.entries[i * self.cols + k];
                if aik == ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    entries[i * other.cols + j] += aik * other.entries[k * other.cols + j];
                }
            }
        }
        Self::from_entries(self.rows, other.cols, entries)
    }

    pub fn matvec(&self, v: &ComplexVector) -> ComplexVector {
        assert_eq!(self.cols, v.dim(), "matvec dimension mismatch");
        if let Some(p) = &self.perm {
            let mut out = vec![ZERO; self.rows];
            for (j, &i) in p.iter().enumerate() {
                out[i] = v.amplitude(j);
            }
            return ComplexVector::new(out);
        }
        let mut out = vec![ZERO; self.rows];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = ZERO;
            for j in 0..self.cols {
                acc += self.entries[i * self.cols + j] * v.amplitude(j);
            }
            *slot = acc;
        }
        ComplexVector::new(out)
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square(), "trace requires a square operator");
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    /// Largest absolute entry of self − other.
    pub fn max_abs_diff(&self, other: &ComplexOperator) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// True iff max-norm of (U†U − I) ≤ tol. Errors on non-square input.
pub fn is_unitary(u: &ComplexOperator, tol: f64) -> Result<bool> {
    if !u.is_square() {
        return Err(Error::NotSquare { rows: u.rows, cols: u.cols });
    }
    if let Some(p) = &u.perm {
        // a permutation matrix is orthogonal; the index map is a checked
        // bijection, so U†U = I exactly
        let _ = p;
        return Ok(true);
    }
    let gram = u.adjoint().matmul(u);
    Ok(gram.max_abs_diff(&ComplexOperator::identity(u.rows)) <= tol)
}

/// True iff P² = P and P† = P within tol.
pub fn is_projector(p: &ComplexOperator, tol: f64) -> Result<bool> {
    if !p.is_square() {
        return Err(Error::NotSquare { rows: p.rows, cols: p.cols });
    }
    let idempotent = p.matmul(p).max_abs_diff(p) <= tol;
    let hermitian = p.adjoint().max_abs_diff(p) <= tol;
    Ok(idempotent && hermitian)
}

/// Tensor product a ⊗ b; `a` indexes the more significant digits.
pub fn kron(a: &ComplexOperator, b: &ComplexOperator) -> ComplexOperator {
    if let (Some(pa), Some(pb)) = (&a.perm, &b.perm) {
        let bn = pb.len();
        let mut map = Vec::with_capacity(pa.len() * bn);
        for &ia in pa {
            for &ib in pb {
                map.push(ia * bn + ib);
            }
        }
        // column order (ja, jb) -> row (pa[ja], pb[jb])
        return ComplexOperator::permutation(map);
    }
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut entries = vec![ZERO; rows * cols];
    for ia in 0..a.rows {
        for ja in 0..a.cols {
            let av = a.entries[ia * a.cols + ja];
            if av == ZERO {
                continue;
            }
            for ib in 0..b.rows {
                for jb in 0..b.cols {
                    let bv = b.entries[ib * b.cols + jb];
                    if bv == ZERO {
                        continue;
                    }
                    entries[(ia * b.rows + ib) * cols + (ja * b.cols + jb)] = av * bv;
                }
            }
        }
    }
    ComplexOperator::from_entries(rows, cols, entries)
}

/// Diagonal 0/1 projector onto the span of the given basis coordinates.
pub fn projector_onto(basis_indices: &[usize], dim: usize) -> Result<ComplexOperator> {
    let mut diag = vec![ZERO; dim];
    for &i in basis_indices {
        if i >= dim {
            return Err(Error::IndexOutOfRange { index: i, dim });
        }
        diag[i] = ONE;
    }
    Ok(ComplexOperator::diagonal(&diag))
}

fn detect_permutation(rows: usize, cols: usize, entries: &[Complex64]) -> Option<Vec<usize>> {
    if rows != cols {
        return None;
    }
    let mut map = vec![usize::MAX; cols];
    let mut used = vec![false; rows];
    for i in 0..rows {
        for j in 0..cols {
            let e = entries[i * cols + j];
            if e == ZERO {
                continue;
            }
            if e != ONE || map[j] != usize::MAX {
                return None;
            }
            map[j] = i;
        }
    }
    for &i in &map {
        if i == usize::MAX || used[i] {
            return None;
        }
        used[i] = true;
    }
    Some(map)
}

fn invert_index_map(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (j, &i) in p.iter().enumerate() {
        inv[i] = j;
    }
    inv
}

/// Ordered factor dimensions of a tensor-product space. Slot 0 indexes the
/// most significant digit of a flattened basis index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotLayout {
    dims: Vec<usize>,
}

impl SlotLayout {
    pub fn new(dims: Vec<usize>) -> Self {
        assert!(!dims.is_empty() && dims.iter().all(|&d| d > 0), "slot dims must be positive");
        Self { dims }
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, slot: usize) -> usize {
        self.dims[slot]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().product()
    }

    /// Inserts a new slot of dimension `dim` at position `pos`.
    pub fn insert(&mut self, pos: usize, dim: usize) {
        assert!(dim > 0);
        self.dims.insert(pos, dim);
    }

    /// Global-index stride of each slot.
    pub fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.dims.len()];
        for k in (0..self.dims.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * self.dims[k + 1];
        }
        strides
    }

    /// Digit of `index` at `slot`.
    pub fn digit(&self, index: usize, slot: usize) -> usize {
        let strides = self.strides();
        (index / strides[slot]) % self.dims[slot]
    }

    pub(crate) fn check_dim(&self, dim: usize) -> Result<()> {
        if self.total_dim() != dim {
            return Err(Error::InconsistentLayout { product: self.total_dim(), dim });
        }
        Ok(())
    }

    fn check_slots(&self, slots: &[usize]) -> Result<()> {
        let mut seen = vec![false; self.dims.len()];
        for &s in slots {
            if s >= self.dims.len() {
                return Err(Error::SlotOutOfRange { slot: s, len: self.dims.len() });
            }
            if seen[s] {
                return Err(Error::DuplicateSlot { slot: s });
            }
            seen[s] = true;
        }
        Ok(())
    }

    /// Offset tables for the subspace spanned by `slots` (in the order given)
    /// and its complement (in ascending slot order). Every global index
    /// decomposes uniquely as `sel_offsets[l] + rest_offsets[r]`.
    pub(crate) fn split_offsets(&self, slots: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
        self.check_slots(slots)?;
        let strides = self.strides();

        let sel_dim: usize = slots.iter().map(|&s| self.dims[s]).product();
        let mut sel_offsets = vec![0usize; sel_dim];
        let mut block = sel_dim;
        for &s in slots {
            let d = self.dims[s];
            block /= d;
            // local index l has digit (l / block) % d for this slot
            for (l, off) in sel_offsets.iter_mut().enumerate() {
                *off += ((l / block) % d) * strides[s];
            }
        }

        let mut rest_offsets = vec![0usize];
        for s in 0..self.dims.len() {
            if slots.contains(&s) {
                continue;
            }
            let mut next = Vec::with_capacity(rest_offsets.len() * self.dims[s]);
            for &base in &rest_offsets {
                for d in 0..self.dims[s] {
                    next.push(base + d * strides[s]);
                }
            }
            rest_offsets = next;
        }

        Ok((sel_offsets, rest_offsets))
    }
}

/// Applies `u` to the selected slots of `state`, acting as the identity on
/// every other slot, without materializing the global operator.
pub fn apply_local(
    u: &ComplexOperator,
    state: &ComplexVector,
    layout: &SlotLayout,
    slots: &[usize],
) -> Result<ComplexVector> {
    layout.check_dim(state.dim())?;
    if !u.is_square() {
        return Err(Error::NotSquare { rows: u.rows, cols: u.cols });
    }
    let (sel_offsets, rest_offsets) = layout.split_offsets(slots)?;
    let sel_dim = sel_offsets.len();
    if u.rows != sel_dim {
        return Err(Error::DimensionMismatch {
            context: "apply_local operator vs selected slots",
            expected: sel_dim,
            actual: u.rows,
        });
    }

    if let Some(p) = &u.perm {
        // exact path: amplitudes move, nothing is summed
        let mut out = vec![ZERO; state.dim()];
        for &base in &rest_offsets {
            for (j, &i) in p.iter().enumerate() {
                out[base + sel_offsets[i]] = state.amplitude(base + sel_offsets[j]);
            }
        }
        return Ok(ComplexVector::new(out));
    }

    let mut out = vec![ZERO; state.dim()];
    let mut buf = vec![ZERO; sel_dim];
    for &base in &rest_offsets {
        for (j, &off) in sel_offsets.iter().enumerate() {
            buf[j] = state.amplitude(base + off);
        }
        for (i, &off) in sel_offsets.iter().enumerate() {
            let mut acc = ZERO;
            for (j, &b) in buf.iter().enumerate() {
                acc += u.entries[i * sel_dim + j] * b;
            }
            out[base + off] = acc;
        }
    }
    Ok(ComplexVector::new(out))
}

/// A density operator: Hermitian, unit-trace, positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    dim: usize,
    entries: Vec<Complex64>,
}

impl DensityOperator {
    pub fn from_entries(dim: usize, entries: Vec<Complex64>) -> Self {
        assert_eq!(entries.len(), dim * dim, "entry count must match dimension");
        Self { dim, entries }
    }

    /// |v⟩⟨v| for a pure state.
    pub fn from_pure(v: &ComplexVector) -> Self {
        let dim = v.dim();
        let mut entries = vec![ZERO; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                entries[i * dim + j] = v.amplitude(i) * v.amplitude(j).conj();
            }
        }
        Self { dim, entries }
    }

    /// The pure state |index⟩⟨index|.
    pub fn basis(dim: usize, index: usize) -> Self {
        Self::from_pure(&ComplexVector::basis(dim, index))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        assert!(row < self.dim && col < self.dim, "index out of bounds");
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Tr(ρ²); equals 1 exactly for pure states.
    pub fn purity(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                // Tr(ρ²) = Σ_ij ρ_ij ρ_ji = Σ_ij |ρ_ij|² for Hermitian ρ
                acc += (self.get(i, j) * self.get(j, i)).re;
            }
        }
        acc
    }

    /// Tr(op · ρ).
    pub fn expectation(&self, op: &ComplexOperator) -> Complex64 {
        assert_eq!(op.rows(), self.dim, "expectation dimension mismatch");
        let mut acc = ZERO;
        for i in 0..self.dim {
            for j in 0..self.dim {
                acc += op.get(i, j) * self.get(j, i);
            }
        }
        acc
    }

    /// ρ ⊗ σ; `self` indexes the more significant digits.
    pub fn kron(&self, other: &DensityOperator) -> DensityOperator {
        let dim = self.dim * other.dim;
        let mut entries = vec![ZERO; dim * dim];
        for ia in 0..self.dim {
            for ja in 0..self.dim {
                let a = self.get(ia, ja);
                if a == ZERO {
                    continue;
                }
                for ib in 0..other.dim {
                    for jb in 0..other.dim {
                        let b = other.get(ib, jb);
                        if b == ZERO {
                            continue;
                        }
                        entries[(ia * other.dim + ib) * dim + (ja * other.dim + jb)] = a * b;
                    }
                }
            }
        }
        DensityOperator::from_entries(dim, entries)
    }

    /// U ρ U†. Exact (a pure relabeling) when `u` is a permutation matrix.
    pub fn evolve(&self, u: &ComplexOperator) -> Result<DensityOperator> {
        if !u.is_square() {
            return Err(Error::NotSquare { rows: u.rows(), cols: u.cols() });
        }
        if u.rows() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "density evolution",
                expected: self.dim,
                actual: u.rows(),
            });
        }
        if let Some(p) = u.as_permutation() {
            let mut entries = vec![ZERO; self.dim * self.dim];
            for i in 0..self.dim {
                for j in 0..self.dim {
                    entries[p[i] * self.dim + p[j]] = self.get(i, j);
                }
            }
            return Ok(DensityOperator::from_entries(self.dim, entries));
        }
        let rho = ComplexOperator::from_entries(self.dim, self.dim, self.entries.clone());
        let out = u.matmul(&rho).matmul(&u.adjoint());
        Ok(DensityOperator::from_entries(self.dim, out.entries))
    }

    pub fn max_abs_diff(&self, other: &DensityOperator) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Eigenvalues of the (Hermitian) operator, ascending, by cyclic Jacobi
    /// with a phase rotation that makes each pivot real.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let n = self.dim;
        let mut a = self.entries.clone();
        // symmetrize to guard against tiny Hermiticity violations
        for i in 0..n {
            for j in 0..n {
                let avg = (a[i * n + j] + a[j * n + i].conj()) * 0.5;
                a[i * n + j] = avg;
                a[j * n + i] = avg.conj();
            }
        }
        let scale: f64 = a.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt().max(1.0);
        for _ in 0..64 {
            let mut off = 0.0;
            for p in 0..n {
                for q in (p + 1)..n {
                    off += a[p * n + q].norm_sqr();
                }
            }
            if off.sqrt() <= 1e-14 * scale {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    let apq = a[p * n + q];
                    let mag = apq.norm();
                    if mag <= 1e-300 {
                        continue;
                    }
                    // rotate column/row q by a phase so the pivot is real
                    let d = (apq / mag).conj();
                    for i in 0..n {
                        a[i * n + q] *= d;
                    }
                    for j in 0..n {
                        a[q * n + j] *= d.conj();
                    }
                    let app = a[p * n + p].re;
                    let aqq = a[q * n + q].re;
                    let b = a[p * n + q].re;
                    let tau = (aqq - app) / (2.0 * b);
                    let t = if tau >= 0.0 {
                        1.0 / (tau + (1.0 + tau * tau).sqrt())
                    } else {
                        1.0 / (tau - (1.0 + tau * tau).sqrt())
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    for j in 0..n {
                        let ap = a[p * n + j];
                        let aq = a[q * n + j];
                        a[p * n + j] = ap * c - aq * s;
                        a[q * n + j] = ap * s + aq * c;
                    }
                    for i in 0..n {
                        let ap = a[i * n + p];
                        let aq = a[i * n + q];
                        a[i * n + p] = ap * c - aq * s;
                        a[i * n + q] = ap * s + aq * c;
                    }
                }
            }
        }
        let mut ev: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
        ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
        ev
    }

    /// Checks Hermiticity and unit trace at 1e−12 and eigenvalues ≥ −1e−10.
    pub fn validate(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                if (self.get(i, j) - self.get(j, i).conj()).norm() > TOL_ALGEBRAIC {
                    return Err(Error::InvalidDensity {
                        reason: format!("not Hermitian at ({i}, {j})"),
                    });
                }
            }
        }
        let tr = self.trace();
        if (tr - ONE).norm() > TOL_ALGEBRAIC {
            return Err(Error::InvalidDensity { reason: format!("trace is {tr}, not 1") });
        }
        if let Some(&min) = self.eigenvalues().first() {
            if min < -TOL_SPECTRAL {
                return Err(Error::InvalidDensity {
                    reason: format!("negative eigenvalue {min}"),
                });
            }
        }
        Ok(())
    }
}

/// Reduced density operator on the `keep` slots (ascending order), tracing
/// out the complement. Preserves the trace.
pub fn partial_trace(
    rho: &DensityOperator,
    layout: &SlotLayout,
    keep: &[usize],
) -> Result<DensityOperator> {
    layout.check_dim(rho.dim())?;
    let (keep_off, tr_off) = layout.split_offsets(keep)?;
    let kd = keep_off.len();
    let mut entries = vec![ZERO; kd * kd];
    for (a, &ka) in keep_off.iter().enumerate() {
        for (b, &kb) in keep_off.iter().enumerate() {
            let mut acc = ZERO;
            for &t in &tr_off {
                acc += rho.get(ka + t, kb + t);
            }
            entries[a * kd + b] = acc;
        }
    }
    Ok(DensityOperator::from_entries(kd, entries))
}
