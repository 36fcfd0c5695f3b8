//! Dense exact linear algebra over the rationals.
//!
//! Everything downstream — form decompositions, Clifford actions, spectra —
//! reduces to kernels, ranks and eigenspaces of small dense matrices with
//! rational entries. Elimination is plain fraction-exact Gauss–Jordan with the
//! first nonzero entry as pivot, which keeps every output canonical and
//! bit-reproducible. Eigenvalues are found by computing the minimal polynomial
//! exactly (Krylov iteration on matrix powers) and extracting its rational
//! roots; anything that fails to split over the rationals is reported as an
//! error, never approximated.

use crate::rational::Rational;
use num::traits::{Signed, Zero};
use num::BigInt;
use thiserror::Error;

/// Errors from exact spectral computations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectrumError {
    /// The minimal polynomial has an irrational factor, so the spectrum
    /// cannot be enumerated in exact rational arithmetic.
    #[error("matrix spectrum does not split over the rationals (residual factor of degree {residual_degree})")]
    NonRationalSpectrum { residual_degree: usize },
    /// Rational eigenvalues exist but their eigenspaces do not span,
    /// i.e. the matrix is not diagonalizable over the rationals.
    #[error("eigenspaces span {spanned} of {dimension} dimensions; matrix is defective")]
    Defective { spanned: usize, dimension: usize },
}

/// A fixed-length vector of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatVector {
    entries: Vec<Rational>,
}

impl RatVector {
    pub fn zeros(len: usize) -> Self {
        RatVector {
            entries: vec![Rational::zero(); len],
        }
    }

    pub fn from_entries(entries: Vec<Rational>) -> Self {
        RatVector { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.entries[i]
    }

    pub fn set(&mut self, i: usize, value: Rational) {
        self.entries[i] = value;
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rational> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, factor: &Rational) -> RatVector {
        RatVector {
            entries: self.entries.iter().map(|e| mul_sparse(e, factor)).collect(),
        }
    }

    pub fn add(&self, other: &RatVector) -> RatVector {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        RatVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| add_sparse(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &RatVector) -> RatVector {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        RatVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| sub_sparse(a, b))
                .collect(),
        }
    }

    pub fn dot(&self, other: &RatVector) -> Rational {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    /// First index holding a nonzero entry.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.entries.iter().position(|e| !e.is_zero())
    }
}

// Zero-skipping scalar helpers: most matrices here are signed permutation
// sums, so the overwhelming majority of entries are exact zeros and the
// gcd work of a full rational operation is wasted on them.
fn mul_sparse(a: &Rational, b: &Rational) -> Rational {
    if a.is_zero() || b.is_zero() {
        Rational::zero()
    } else {
        a * b
    }
}

fn add_sparse(a: &Rational, b: &Rational) -> Rational {
    if b.is_zero() {
        a.clone()
    } else if a.is_zero() {
        b.clone()
    } else {
        a + b
    }
}

fn sub_sparse(a: &Rational, b: &Rational) -> Rational {
    if b.is_zero() {
        a.clone()
    } else if a.is_zero() {
        -b.clone()
    } else {
        a - b
    }
}

/// A dense rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::from_integer(1.into()));
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        RatMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in matrix constructor"
        );
        RatMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer data convenience, used heavily by the Clifford construction.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::rational::int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, factor: &Rational) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| mul_sparse(e, factor)).collect(),
        }
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| add_sparse(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| sub_sparse(a, b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c) + a * b;
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &RatVector) -> RatVector {
        assert_eq!(self.cols, v.len(), "matrix/vector dimension mismatch");
        let mut out = RatVector::zeros(self.rows);
        for r in 0..self.rows {
            let mut acc = Rational::zero();
            for c in 0..self.cols {
                let a = self.get(r, c);
                if !a.is_zero() {
                    acc += a * v.get(c);
                }
            }
            out.set(r, acc);
        }
        out
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// Stacks `self` on top of `other` (same column count).
    pub fn vstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.cols, "column count mismatch in vstack");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        RatMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn column(&self, c: usize) -> RatVector {
        RatVector::from_entries((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn row_vector(&self, r: usize) -> RatVector {
        RatVector::from_entries((0..self.cols).map(|c| self.get(r, c).clone()).collect())
    }

    /// Row-major flattening, used for dependence checks among matrix powers.
    pub fn flatten(&self) -> RatVector {
        RatVector::from_entries(self.entries.clone())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Rational) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            if !self.entries[idx].is_zero() {
                self.entries[idx] = &self.entries[idx] * factor;
            }
        }
    }

    /// `row[target] += factor * row[source]`
    fn row_axpy(&mut self, target: usize, source: usize, factor: &Rational) {
        for c in 0..self.cols {
            let s = self.entries[source * self.cols + c].clone();
            if s.is_zero() {
                continue;
            }
            let idx = target * self.cols + c;
            self.entries[idx] = &self.entries[idx] + &(s * factor);
        }
    }
}

/// The outcome of Gauss–Jordan elimination: `transform * input == reduced`,
/// with `transform` invertible, `reduced` in reduced row echelon form and
/// `pivot_cols` ascending.
#[derive(Debug, Clone)]
pub struct RowReduction {
    pub reduced: RatMatrix,
    pub transform: RatMatrix,
    pub pivot_cols: Vec<usize>,
}

/// Fraction-exact Gauss–Jordan elimination to reduced row echelon form.
///
/// Pivot choice is the first nonzero entry in each column, pivots are
/// normalized to 1, and elimination clears above and below; on equal inputs
/// the output is identical, which is what makes every kernel basis in the
/// crate canonical.
pub fn row_reduce(m: &RatMatrix) -> RowReduction {
    let mut reduced = m.clone();
    let mut transform = RatMatrix::identity(m.rows());
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..reduced.cols() {
        if row == reduced.rows() {
            break;
        }
        let Some(p) = (row..reduced.rows()).find(|&r| !reduced.get(r, col).is_zero()) else {
            continue;
        };
        reduced.swap_rows(row, p);
        transform.swap_rows(row, p);
        let inv = reduced.get(row, col).recip();
        reduced.scale_row(row, &inv);
        transform.scale_row(row, &inv);
        for r in 0..reduced.rows() {
            if r != row && !reduced.get(r, col).is_zero() {
                let factor = -reduced.get(r, col).clone();
                reduced.row_axpy(r, row, &factor);
                transform.row_axpy(r, row, &factor);
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    RowReduction {
        reduced,
        transform,
        pivot_cols,
    }
}

/// Rank over the rationals.
pub fn rank(m: &RatMatrix) -> usize {
    row_reduce(m).pivot_cols.len()
}

/// Canonical basis of the right kernel `{ v : M v = 0 }`.
///
/// One vector per free column, in ascending column order: the free coordinate
/// is 1 and each pivot coordinate carries the negated echelon entry. Equal
/// matrices always produce identical bases.
pub fn kernel_basis(m: &RatMatrix) -> Vec<RatVector> {
    let reduction = row_reduce(m);
    let pivots = &reduction.pivot_cols;
    let mut basis = Vec::new();
    for free in 0..m.cols() {
        if pivots.binary_search(&free).is_ok() {
            continue;
        }
        let mut v = RatVector::zeros(m.cols());
        v.set(free, Rational::from_integer(1.into()));
        for (row, &pc) in pivots.iter().enumerate() {
            let coeff = reduction.reduced.get(row, free);
            if !coeff.is_zero() {
                v.set(pc, -coeff.clone());
            }
        }
        basis.push(v);
    }
    basis
}

/// Basis of the eigenspace `{ v : M v = lambda v }`, possibly empty.
pub fn eigenspace(m: &RatMatrix, lambda: &Rational) -> Vec<RatVector> {
    assert!(m.is_square(), "eigenspace of a non-square matrix");
    let shifted = m.sub(&RatMatrix::identity(m.rows()).scale(lambda));
    kernel_basis(&shifted)
}

/// Exact inverse, or `None` for singular input.
pub fn inverse(m: &RatMatrix) -> Option<RatMatrix> {
    assert!(m.is_square(), "inverse of a non-square matrix");
    let reduction = row_reduce(m);
    if reduction.pivot_cols.len() == m.rows() {
        Some(reduction.transform)
    } else {
        None
    }
}

/// A polynomial with rational coefficients, ascending degree order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        Polynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact synthetic division by `(x - root)`; panics if `root` is not a root.
    fn deflate(&self, root: &Rational) -> Polynomial {
        let n = self.degree();
        assert!(n >= 1, "cannot deflate a constant polynomial");
        let mut out = vec![Rational::zero(); n];
        let mut carry = Rational::zero();
        for k in (0..n).rev() {
            carry = &self.coeffs[k + 1] + &(carry * root);
            out[k] = carry.clone();
        }
        let remainder = &self.coeffs[0] + &(carry * root);
        assert!(remainder.is_zero(), "deflation by a non-root");
        Polynomial::new(out)
    }
}

/// Minimal polynomial of a square matrix, monic, computed by exact Krylov
/// iteration on the flattened powers `I, M, M^2, ...` until the first linear
/// dependence.
pub fn minimal_polynomial(m: &RatMatrix) -> Polynomial {
    assert!(m.is_square(), "minimal polynomial of a non-square matrix");
    let n = m.rows();
    let mut powers: Vec<RatVector> = vec![RatMatrix::identity(n).flatten()];
    let mut current = RatMatrix::identity(n);
    loop {
        current = current.mul(m);
        let target = current.flatten();
        if let Some(combo) = express_in_span(&powers, &target) {
            // x^k - sum_i combo[i] x^i
            let mut coeffs: Vec<Rational> = combo.into_iter().map(|c| -c).collect();
            coeffs.push(Rational::from_integer(1.into()));
            return Polynomial::new(coeffs);
        }
        powers.push(target);
        assert!(
            powers.len() <= n + 1,
            "minimal polynomial iteration exceeded matrix dimension"
        );
    }
}

/// If `target` lies in the span of `basis` (assumed independent), returns the
/// unique coefficient vector, else `None`.
fn express_in_span(basis: &[RatVector], target: &RatVector) -> Option<Vec<Rational>> {
    let dim = target.len();
    let k = basis.len();
    let system = RatMatrix::from_fn(dim, k + 1, |r, c| {
        if c < k {
            basis[c].get(r).clone()
        } else {
            target.get(r).clone()
        }
    });
    let reduction = row_reduce(&system);
    if reduction.pivot_cols.contains(&k) {
        return None; // inconsistent: target adds a new pivot
    }
    let mut combo = vec![Rational::zero(); k];
    for (row, &pc) in reduction.pivot_cols.iter().enumerate() {
        combo[pc] = reduction.reduced.get(row, k).clone();
    }
    Some(combo)
}

/// All rational roots of `p` with multiplicity, plus the (rootless) residual
/// factor. Candidates come from the rational root theorem applied to the
/// primitive integer form of `p`.
pub fn rational_roots(p: &Polynomial) -> (Vec<Rational>, Polynomial) {
    let mut roots = Vec::new();
    let mut current = p.clone();
    'outer: while !current.is_constant() {
        if current.coeffs()[0].is_zero() {
            roots.push(Rational::zero());
            current = current.deflate(&Rational::zero());
            continue;
        }
        for candidate in root_candidates(&current) {
            if current.eval(&candidate).is_zero() {
                roots.push(candidate.clone());
                current = current.deflate(&candidate);
                continue 'outer;
            }
        }
        break;
    }
    roots.sort();
    (roots, current)
}

/// Candidate rational roots `±p/q` with `p` dividing the constant term and
/// `q` the leading coefficient of the primitive integer form.
fn root_candidates(p: &Polynomial) -> Vec<Rational> {
    let denominator_lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::from(1), |acc, c| num::integer::lcm(acc, c.denom().clone()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(denominator_lcm.clone())).to_integer())
        .collect();
    let constant = ints[0].abs();
    let leading = ints[ints.len() - 1].abs();
    let mut candidates = Vec::new();
    for num_div in divisors(&constant) {
        for den_div in divisors(&leading) {
            let q = Rational::new(num_div.clone(), den_div.clone());
            if !candidates.contains(&q) {
                candidates.push(q.clone());
            }
            let neg = -q;
            if !candidates.contains(&neg) {
                candidates.push(neg);
            }
        }
    }
    candidates.sort();
    candidates
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    assert!(n.is_positive(), "divisors of a non-positive integer");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::from(1);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            small.push(d.clone());
            let q = n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Exact eigendecomposition data: ascending eigenvalues with eigenspace
/// dimensions. Errors unless the rational eigenspaces span everything.
pub fn rational_spectrum(m: &RatMatrix) -> Result<Vec<(Rational, usize)>, SpectrumError> {
    assert!(m.is_square(), "spectrum of a non-square matrix");
    let minpoly = minimal_polynomial(m);
    let (roots, residual) = rational_roots(&minpoly);
    if !residual.is_constant() {
        return Err(SpectrumError::NonRationalSpectrum {
            residual_degree: residual.degree(),
        });
    }
    let mut distinct: Vec<Rational> = Vec::new();
    for r in roots {
        if !distinct.contains(&r) {
            distinct.push(r);
        }
    }
    let mut spectrum = Vec::new();
    let mut total = 0;
    for lambda in distinct {
        let dim = eigenspace(m, &lambda).len();
        total += dim;
        spectrum.push((lambda, dim));
    }
    if total != m.rows() {
        return Err(SpectrumError::Defective {
            spanned: total,
            dimension: m.rows(),
        });
    }
    Ok(spectrum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    fn m(rows: &[Vec<i64>]) -> RatMatrix {
        RatMatrix::from_i64_rows(rows)
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let basis = kernel_basis(&RatMatrix::zeros(2, 2));
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0], RatVector::from_entries(vec![int(1), int(0)]));
        assert_eq!(basis[1], RatVector::from_entries(vec![int(0), int(1)]));
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert!(kernel_basis(&RatMatrix::identity(2)).is_empty());
    }

    #[test]
    fn kernel_of_rank_one_symmetric() {
        let basis = kernel_basis(&m(&[vec![1, 1], vec![1, 1]]));
        assert_eq!(basis.len(), 1);
        // canonical form: free coordinate 1, pivot coordinate -1
        assert_eq!(basis[0], RatVector::from_entries(vec![int(-1), int(1)]));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RatMatrix::identity(16)), 16);
        assert_eq!(rank(&RatMatrix::zeros(5, 3)), 0);
        assert_eq!(rank(&m(&[vec![1, 2], vec![2, 4]])), 1);
    }

    #[test]
    fn eigenspace_examples() {
        let id = RatMatrix::identity(3);
        assert_eq!(eigenspace(&id, &int(1)).len(), 3);
        assert!(eigenspace(&id, &int(2)).is_empty());
        let diag = m(&[vec![3, 0, 0], vec![0, -1, 0], vec![0, 0, -1]]);
        assert_eq!(eigenspace(&diag, &int(-1)).len(), 2);
    }

    #[test]
    fn elimination_reconstructs_input() {
        let a = m(&[vec![2, 4, 1], vec![0, 3, 5], vec![2, 7, 6]]);
        let red = row_reduce(&a);
        let inv = inverse(&red.transform).expect("transform is invertible");
        assert_eq!(inv.mul(&red.reduced), a);
    }

    #[test]
    fn minimal_polynomial_of_projector() {
        // P^2 = P with eigenvalues {0, 1}: minpoly x^2 - x
        let p = m(&[vec![1, 0], vec![0, 0]]);
        let mp = minimal_polynomial(&p);
        assert_eq!(mp.coeffs(), &[int(0), int(-1), int(1)]);
    }

    #[test]
    fn spectrum_of_diagonal() {
        let d = m(&[vec![3, 0, 0], vec![0, -1, 0], vec![0, 0, -1]]);
        let spec = rational_spectrum(&d).unwrap();
        assert_eq!(spec, vec![(int(-1), 2), (int(3), 1)]);
    }

    #[test]
    fn spectrum_rejects_irrational() {
        // x^2 - 2
        let a = m(&[vec![0, 2], vec![1, 0]]);
        assert!(matches!(
            rational_spectrum(&a),
            Err(SpectrumError::NonRationalSpectrum { residual_degree: 2 })
        ));
    }

    #[test]
    fn spectrum_rejects_defective() {
        let jordan = m(&[vec![1, 1], vec![0, 1]]);
        assert!(matches!(
            rational_spectrum(&jordan),
            Err(SpectrumError::Defective { spanned: 1, dimension: 2 })
        ));
    }

    #[test]
    fn rational_roots_with_fractional_root() {
        // (2x - 1)(x + 3) = 2x^2 + 5x - 3
        let p = Polynomial::new(vec![int(-3), int(5), int(2)]);
        let (roots, residual) = rational_roots(&p);
        assert_eq!(roots, vec![int(-3), rat(1, 2)]);
        assert!(residual.is_constant());
    }

    fn arb_matrix() -> impl Strategy<Value = RatMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-6i64..=6, r * c).prop_map(move |vals| {
                RatMatrix::from_fn(r, c, |i, j| int(vals[i * c + j]))
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(mat in arb_matrix()) {
            let k = kernel_basis(&mat);
            prop_assert_eq!(rank(&mat) + k.len(), mat.cols());
            for v in &k {
                prop_assert!(mat.mul_vec(v).is_zero());
            }
        }

        #[test]
        fn kernel_is_deterministic(mat in arb_matrix()) {
            prop_assert_eq!(kernel_basis(&mat), kernel_basis(&mat.clone()));
        }

        #[test]
        fn reduction_reconstructs(mat in arb_matrix()) {
            let red = row_reduce(&mat);
            let inv = inverse(&red.transform).expect("row operations are invertible");
            prop_assert_eq!(inv.mul(&red.reduced), mat);
        }
    }
}
