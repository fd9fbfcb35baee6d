// Copyright 2026 The scqr Authors
// SPDX-License-Identifier: Apache-2.0

//! Dense complex matrices for the three-qubit Hilbert space.
//!
//! Qubit 1 is the leftmost tensor factor, so it owns the most significant bit
//! of a computational-basis index. Single-qubit bases are ordered
//! `{|e⟩, |g⟩}`: index 0 is the excited state, which makes index 0 of the
//! full space `|eee⟩`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dimension of the three-qubit Hilbert space.
pub const DIM: usize = 8;
/// Number of qubits in the refrigerator.
pub const NUM_QUBITS: usize = 3;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Row-major dense complex matrix.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: format!("{rows}x{cols} = {} entries", rows * cols),
                found: format!("{} entries", data.len()),
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from real row-major entries.
    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        Self::new(
            rows,
            cols,
            data.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        m
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

    /// Row-major entries.
    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn dagger(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)].conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)];
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Largest entrywise modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `max |M - M†|`; infinite for non-square input.
    pub fn hermiticity_error(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut err: f64 = 0.0;
        for r in 0..self.rows {
            for c in r..self.cols {
                err = err.max((self[(r, c)] - self[(c, r)].conj()).norm());
            }
        }
        err
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_error() <= tol
    }

    /// `(M + M†) / 2`.
    pub fn hermitian_part(&self) -> Self {
        (self + &self.dagger()).scale_real(0.5)
    }

    /// Largest entrywise distance to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn nonzero_count(&self, tol: f64) -> usize {
        self.data.iter().filter(|z| z.norm() > tol).count()
    }

    /// Column-stacking vectorization: entry `(r, c)` lands at `c * rows + r`.
    pub fn vectorize(&self) -> Vec<Complex64> {
        let mut v = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                v.push(self[(r, c)]);
            }
        }
        v
    }

    /// Inverse of [`ComplexMatrix::vectorize`] for a `dim x dim` matrix.
    pub fn unvectorize(v: &[Complex64], dim: usize) -> Result<Self> {
        if v.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: format!("{} entries", dim * dim),
                found: format!("{} entries", v.len()),
            });
        }
        let mut m = Self::zeros(dim, dim);
        for c in 0..dim {
            for r in 0..dim {
                m[(r, c)] = v[c * dim + r];
            }
        }
        Ok(m)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.cols, "vector length must equal column count");
        (0..self.rows)
            .map(|r| {
                self.data[r * self.cols..(r + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub(crate) fn to_nalgebra(&self) -> nalgebra::DMatrix<Complex64> {
        nalgebra::DMatrix::from_row_slice(self.rows, self.cols, &self.data)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r}, {c}) out of bounds"
        );
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r}, {c}) out of bounds"
        );
        &mut self.data[r * self.cols + c]
    }
}

impl<'a> Mul<&'a ComplexMatrix> for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &'a ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k];
                if a == ZERO {
                    continue;
                }
                let rhs_row = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let out_row = &mut out.data[r * rhs.cols..(r + 1) * rhs.cols];
                for (o, b) in out_row.iter_mut().zip(rhs_row) {
                    *o += a * b;
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a ComplexMatrix> for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &'a ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a ComplexMatrix> for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &'a ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                let z = self[(r, c)];
                write!(f, "{:+.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Qubit label `k` in `{1, 2, 3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SiteIndex(u8);

impl SiteIndex {
    pub const ONE: SiteIndex = SiteIndex(1);
    pub const TWO: SiteIndex = SiteIndex(2);
    pub const THREE: SiteIndex = SiteIndex(3);

    pub fn new(k: usize) -> Result<Self> {
        match k {
            1..=3 => Ok(SiteIndex(k as u8)),
            _ => Err(Error::InvalidSite(k)),
        }
    }

    pub fn all() -> [SiteIndex; NUM_QUBITS] {
        [Self::ONE, Self::TWO, Self::THREE]
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }

    /// Zero-based position, usable for indexing per-qubit arrays.
    pub fn offset(self) -> usize {
        self.0 as usize - 1
    }

    /// Bit position of this qubit inside a basis index.
    fn shift(self) -> usize {
        NUM_QUBITS - self.get()
    }
}

impl fmt::Display for SiteIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `σ_z` with `σ_z|e⟩ = +|e⟩`.
pub fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::from_diagonal(&[1.0, -1.0])
}

/// Raising operator `σ₊ = |e⟩⟨g|`.
pub fn sigma_plus() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(2, 2);
    m[(0, 1)] = ONE;
    m
}

/// Lowering operator `σ₋ = |g⟩⟨e|`.
pub fn sigma_minus() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(2, 2);
    m[(1, 0)] = ONE;
    m
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut out = ComplexMatrix::zeros(rows, cols);
    for ar in 0..a.rows {
        for ac in 0..a.cols {
            let x = a[(ar, ac)];
            if x == ZERO {
                continue;
            }
            for br in 0..b.rows {
                for bc in 0..b.cols {
                    out[(ar * b.rows + br, ac * b.cols + bc)] = x * b[(br, bc)];
                }
            }
        }
    }
    out
}

/// Places a single-qubit operator on `site` of the three-qubit space.
pub fn embed(op: &ComplexMatrix, site: SiteIndex) -> Result<ComplexMatrix> {
    if op.rows != 2 || op.cols != 2 {
        return Err(Error::DimensionMismatch {
            expected: "2x2".into(),
            found: format!("{}x{}", op.rows, op.cols),
        });
    }
    let id = ComplexMatrix::identity(2);
    let factors: Vec<&ComplexMatrix> = SiteIndex::all()
        .iter()
        .map(|&s| if s == site { op } else { &id })
        .collect();
    Ok(kron(&kron(factors[0], factors[1]), factors[2]))
}

/// Reduced 2x2 state of qubit `keep`, tracing out the other two.
pub fn partial_trace(rho: &ComplexMatrix, keep: SiteIndex) -> Result<ComplexMatrix> {
    if rho.rows != DIM || rho.cols != DIM {
        return Err(Error::DimensionMismatch {
            expected: format!("{DIM}x{DIM}"),
            found: format!("{}x{}", rho.rows, rho.cols),
        });
    }
    let shift = keep.shift();
    let mask = 1usize << shift;
    let mut out = ComplexMatrix::zeros(2, 2);
    for i in 0..DIM {
        for j in 0..DIM {
            // The traced-out bits must agree.
            if (i & !mask) != (j & !mask) {
                continue;
            }
            out[((i >> shift) & 1, (j >> shift) & 1)] += rho[(i, j)];
        }
    }
    Ok(out)
}

/// Basis index of the product state with the given excitations (true = |e⟩),
/// qubit 1 first.
pub fn basis_index(excited: [bool; NUM_QUBITS]) -> usize {
    excited
        .iter()
        .fold(0, |acc, &e| (acc << 1) | usize::from(!e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_matrix(rows: usize, cols: usize, seed: &[f64]) -> ComplexMatrix {
        let data = (0..rows * cols)
            .map(|i| c(seed[(2 * i) % seed.len()], seed[(2 * i + 1) % seed.len()]))
            .collect();
        ComplexMatrix::new(rows, cols, data).unwrap()
    }

    fn random_density(seed: &[f64]) -> ComplexMatrix {
        let a = random_matrix(DIM, DIM, seed);
        let p = &a * &a.dagger();
        let tr = p.trace();
        p.scale(tr.inv())
    }

    #[test]
    fn new_rejects_wrong_entry_count() {
        assert!(matches!(
            ComplexMatrix::new(2, 2, vec![ONE; 3]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let id2 = ComplexMatrix::identity(2);
        assert_eq!(kron(&id2, &id2), ComplexMatrix::identity(4));
    }

    #[test]
    fn kron_sigma_z_identity() {
        let m = kron(&sigma_z(), &ComplexMatrix::identity(2));
        assert_eq!(m, ComplexMatrix::from_diagonal(&[1.0, 1.0, -1.0, -1.0]));
    }

    #[test]
    fn kron_matches_index_loop() {
        let a = sigma_minus();
        let b = sigma_plus();
        let k = kron(&a, &b);
        assert_eq!((k.rows(), k.cols()), (4, 4));
        for i in 0..4 {
            for j in 0..4 {
                let expected = a[(i / 2, j / 2)] * b[(i % 2, j % 2)];
                assert_eq!(k[(i, j)], expected, "entry ({i}, {j})");
            }
        }
        // σ₋ ⊗ σ₊ maps |e g⟩ (index 1) to |g e⟩ (index 2).
        assert_eq!(k.nonzero_count(0.0), 1);
        assert_eq!(k[(2, 1)], ONE);
    }

    #[test]
    fn kron_is_associative_on_integer_matrices() {
        let a = ComplexMatrix::from_real(2, 2, &[1.0, 2.0, -3.0, 4.0]).unwrap();
        let b = ComplexMatrix::from_real(2, 3, &[0.0, 5.0, 1.0, -1.0, 2.0, 7.0]).unwrap();
        let d = ComplexMatrix::new(1, 2, vec![c(2.0, 1.0), c(-1.0, 3.0)]).unwrap();
        assert_eq!(kron(&kron(&a, &b), &d), kron(&a, &kron(&b, &d)));
    }

    #[test]
    fn embed_identity_is_identity() {
        let m = embed(&ComplexMatrix::identity(2), SiteIndex::TWO).unwrap();
        assert_eq!(m, ComplexMatrix::identity(DIM));
    }

    #[test]
    fn embed_sigma_z_on_first_qubit_is_leftmost() {
        let m = embed(&sigma_z(), SiteIndex::ONE).unwrap();
        let expected = ComplexMatrix::from_diagonal(&[1.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0]);
        assert_eq!(m, expected);
    }

    #[test]
    fn raising_times_lowering_projects_onto_excited_subspace() {
        let p = &embed(&sigma_plus(), SiteIndex::ONE).unwrap()
            * &embed(&sigma_minus(), SiteIndex::ONE).unwrap();
        // Direct 8x8 oracle: diagonal entry is 1 iff qubit 1 (MSB) is |e⟩ (bit 0).
        for i in 0..DIM {
            for j in 0..DIM {
                let expected = if i == j && (i >> 2) & 1 == 0 {
                    ONE
                } else {
                    ZERO
                };
                assert_eq!(p[(i, j)], expected, "entry ({i}, {j})");
            }
        }
    }

    #[test]
    fn embed_rejects_non_qubit_operator() {
        let err = embed(&ComplexMatrix::identity(3), SiteIndex::ONE).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn site_index_bounds() {
        assert!(SiteIndex::new(0).is_err());
        assert!(SiteIndex::new(4).is_err());
        assert_eq!(SiteIndex::new(3).unwrap(), SiteIndex::THREE);
    }

    #[test]
    fn basis_index_convention() {
        assert_eq!(basis_index([true, true, true]), 0);
        assert_eq!(basis_index([false, false, false]), 7);
        assert_eq!(basis_index([false, true, true]), 4);
    }

    #[test]
    fn partial_trace_of_product_state() {
        let ra = ComplexMatrix::new(
            2,
            2,
            vec![c(0.3, 0.0), c(0.1, 0.2), c(0.1, -0.2), c(0.7, 0.0)],
        )
        .unwrap();
        let rb = ComplexMatrix::from_real(2, 2, &[0.4, 0.0, 0.0, 0.6]).unwrap();
        let rc = ComplexMatrix::new(
            2,
            2,
            vec![c(0.5, 0.0), c(0.0, 0.25), c(0.0, -0.25), c(0.5, 0.0)],
        )
        .unwrap();
        let rho = kron(&kron(&ra, &rb), &rc);
        assert!(
            partial_trace(&rho, SiteIndex::ONE)
                .unwrap()
                .max_abs_diff(&ra)
                < 1e-15
        );
        assert!(
            partial_trace(&rho, SiteIndex::TWO)
                .unwrap()
                .max_abs_diff(&rb)
                < 1e-15
        );
        assert!(
            partial_trace(&rho, SiteIndex::THREE)
                .unwrap()
                .max_abs_diff(&rc)
                < 1e-15
        );
    }

    #[test]
    fn partial_trace_of_maximally_mixed() {
        let rho = ComplexMatrix::identity(DIM).scale_real(1.0 / DIM as f64);
        let half = ComplexMatrix::identity(2).scale_real(0.5);
        for k in SiteIndex::all() {
            assert!(partial_trace(&rho, k).unwrap().max_abs_diff(&half) < 1e-15);
        }
    }

    #[test]
    fn partial_trace_rejects_wrong_size() {
        assert!(partial_trace(&ComplexMatrix::identity(4), SiteIndex::ONE).is_err());
    }

    /// Explicit double-index summation over (b1 b2 b3) tuples.
    #[allow(clippy::needless_range_loop)]
    fn partial_trace_oracle(rho: &ComplexMatrix, keep: usize) -> [[Complex64; 2]; 2] {
        let idx = |b: [usize; 3]| b[0] * 4 + b[1] * 2 + b[2];
        let mut out = [[ZERO; 2]; 2];
        for a in 0..2 {
            for b in 0..2 {
                for x in 0..2 {
                    for y in 0..2 {
                        let (mut bi, mut bj) = ([0; 3], [0; 3]);
                        let others: Vec<usize> = (0..3).filter(|&q| q != keep - 1).collect();
                        bi[keep - 1] = a;
                        bj[keep - 1] = b;
                        bi[others[0]] = x;
                        bj[others[0]] = x;
                        bi[others[1]] = y;
                        bj[others[1]] = y;
                        out[a][b] += rho[(idx(bi), idx(bj))];
                    }
                }
            }
        }
        out
    }

    #[test]
    fn partial_trace_matches_summation_oracle() {
        let seed: Vec<f64> = (0..97)
            .map(|i| ((i * 37 % 101) as f64 / 50.0) - 1.0)
            .collect();
        let rho = random_density(&seed);
        assert!((rho.trace() - ONE).norm() < 1e-12);
        for k in 1..=3 {
            let got = partial_trace(&rho, SiteIndex::new(k).unwrap()).unwrap();
            let want = partial_trace_oracle(&rho, k);
            for a in 0..2 {
                for b in 0..2 {
                    assert!((got[(a, b)] - want[a][b]).norm() <= 1e-13);
                }
            }
        }
    }

    #[test]
    fn vectorize_is_column_stacking() {
        let m = ComplexMatrix::from_real(2, 2, &[1.0, 2.0, 3.0, 4.0]).unwrap();
        let v: Vec<f64> = m.vectorize().iter().map(|z| z.re).collect();
        assert_eq!(v, vec![1.0, 3.0, 2.0, 4.0]);
        assert_eq!(ComplexMatrix::unvectorize(&m.vectorize(), 2).unwrap(), m);
    }

    fn matrix2() -> impl Strategy<Value = ComplexMatrix> {
        proptest::collection::vec(-1.0f64..1.0, 8).prop_map(|v| {
            ComplexMatrix::new(2, 2, v.chunks(2).map(|p| c(p[0], p[1])).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn disjoint_embeddings_commute(a in matrix2(), b in matrix2(), j in 1usize..=3, k in 1usize..=3) {
            prop_assume!(j != k);
            let ea = embed(&a, SiteIndex::new(j).unwrap()).unwrap();
            let eb = embed(&b, SiteIndex::new(k).unwrap()).unwrap();
            prop_assert!((&ea * &eb).max_abs_diff(&(&eb * &ea)) <= 1e-13);
        }

        #[test]
        fn partial_trace_preserves_trace(seed in proptest::collection::vec(-1.0f64..1.0, 128), k in 1usize..=3) {
            let a = random_matrix(DIM, DIM, &seed);
            let h = a.hermitian_part();
            let reduced = partial_trace(&h, SiteIndex::new(k).unwrap()).unwrap();
            prop_assert!((reduced.trace() - h.trace()).norm() <= 1e-12);
        }
    }
}
