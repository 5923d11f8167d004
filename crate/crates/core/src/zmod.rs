//! Exact linear algebra over `Z_D` for arbitrary `D >= 2`.
//!
//! `Z_D` is not a principal ideal domain when `D` is composite, so nothing
//! here eliminates modulo `D` directly. Matrices are lifted to the integers,
//! brought to Smith normal form with arbitrary-precision arithmetic, and only
//! the resulting invariant factors are reduced modulo `D`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The modulus `D` of the coefficient ring `Z_D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(d: u64) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidModulus(d));
        }
        Ok(Modulus(d))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Canonical representative of `v` in `[0, D)`.
    #[inline]
    pub fn reduce(self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }

    #[inline]
    pub fn reduce_i128(self, v: i128) -> u64 {
        v.rem_euclid(self.0 as i128) as u64
    }

    pub fn reduce_big(self, v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(self.0))
            .to_u64()
            .expect("residue fits in u64")
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.0 as u128) as u64
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        self.add(a, self.0 - b % self.0)
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        (self.0 - a % self.0) % self.0
    }

    /// Dot product of two residue vectors.
    pub fn dot(self, a: &[u64], b: &[u64]) -> u64 {
        let d = self.0 as u128;
        let mut acc: u128 = 0;
        for (&x, &y) in a.iter().zip(b) {
            acc = (acc + x as u128 * y as u128) % d;
        }
        acc as u64
    }

    /// `gcd(v, D)`, with `gcd(0, D) = D`.
    pub fn gcd_with(self, v: &BigInt) -> u64 {
        self.reduce_big(v).gcd(&self.0)
    }

    /// `D^n` as an exact integer.
    pub fn power(self, n: usize) -> BigUint {
        num_traits::pow(BigUint::from(self.0), n)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A matrix with entries in `Z_D`, stored row-major in canonical form `[0, D)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZModMatrix {
    rows: usize,
    cols: usize,
    modulus: Modulus,
    entries: Vec<u64>,
}

impl ZModMatrix {
    pub fn zeros(rows: usize, cols: usize, modulus: Modulus) -> Self {
        ZModMatrix {
            rows,
            cols,
            modulus,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, modulus: Modulus) -> Self {
        let mut m = Self::zeros(n, n, modulus);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        modulus: Modulus,
        mut f: impl FnMut(usize, usize) -> i64,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(modulus.reduce(f(i, j)));
            }
        }
        ZModMatrix {
            rows,
            cols,
            modulus,
            entries,
        }
    }

    /// Builds a matrix from integer rows; every row must have `cols` entries.
    pub fn from_rows<R: AsRef<[i64]>>(modulus: Modulus, cols: usize, rows: &[R]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row.iter().map(|&v| modulus.reduce(v)));
        }
        Ok(ZModMatrix {
            rows: rows.len(),
            cols,
            modulus,
            entries,
        })
    }

    /// Builds a matrix whose rows are the given residue vectors.
    pub fn from_residue_rows(modulus: Modulus, cols: usize, rows: &[Vec<u64>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row.iter().map(|&v| v % modulus.get()));
        }
        Ok(ZModMatrix {
            rows: rows.len(),
            cols,
            modulus,
            entries,
        })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.cols + j] = self.modulus.reduce(v);
    }

    /// Adds `v` to entry `(i, j)`.
    pub fn add_to(&mut self, i: usize, j: usize, v: i64) {
        let idx = i * self.cols + j;
        self.entries[idx] = self.modulus.add(self.entries[idx], self.modulus.reduce(v));
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[u64]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.modulus);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &ZModMatrix) -> Result<ZModMatrix> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(
                self.modulus.get(),
                other.modulus.get(),
            ));
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let d = self.modulus.get() as u128;
        let mut out = Self::zeros(self.rows, other.cols, self.modulus);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: u128 = 0;
                for k in 0..self.cols {
                    acc = (acc + self.get(i, k) as u128 * other.get(k, j) as u128) % d;
                }
                out.entries[i * other.cols + j] = acc as u64;
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u64]) -> Result<Vec<u64>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self
            .row_vectors()
            .map(|row| self.modulus.dot(row, v))
            .collect())
    }

    /// Integer lift with entries in `[0, D)`.
    pub fn lift(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| BigInt::from(self.get(i, j)))
    }
}

impl fmt::Debug for ZModMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "ZModMatrix {}x{} mod {}",
            self.rows, self.cols, self.modulus
        )?;
        for row in self.row_vectors() {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// Dense matrix over the integers with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self::from_fn(rows.len(), cols, |i, j| {
            BigInt::from(rows[i][j])
        }))
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        Ok(IntMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols)
                .map(|k| self.get(i, k) * other.get(k, j))
                .sum()
        }))
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.entries.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                for j in 0..n {
                    m.swap(k * n + j, p * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j]) / &prev;
                    m[i * n + j] = v;
                }
            }
            prev = m[k * n + k].clone();
        }
        Ok(sign * &m[n * n - 1])
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[target] += k * row[src]`
    fn add_row_multiple(&mut self, target: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let delta = k * &self.entries[src * self.cols + j];
            self.entries[target * self.cols + j] += delta;
        }
    }

    /// `col[target] += k * col[src]`
    fn add_col_multiple(&mut self, target: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let delta = k * &self.entries[i * self.cols + src];
            self.entries[i * self.cols + target] += delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let e = &mut self.entries[i * self.cols + j];
            *e = -std::mem::take(e);
        }
    }
}

/// `U * A * V = diag(d_1, .., d_r, 0, ..)` with `U`, `V` unimodular and
/// `d_i | d_{i+1}`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub diag: Vec<BigInt>,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// The diagonal matrix with the shape of the decomposed matrix.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let (m, n) = (self.u.rows(), self.v.rows());
        IntMatrix::from_fn(m, n, |i, j| {
            if i == j && i < self.diag.len() {
                self.diag[i].clone()
            } else {
                BigInt::zero()
            }
        })
    }
}

fn smallest_nonzero<'a>(
    a: &IntMatrix,
    cells: impl Iterator<Item = (usize, usize)> + 'a,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for (i, j) in cells {
        let v = a.get(i, j);
        if v.is_zero() {
            continue;
        }
        let mag = v.abs();
        if best.as_ref().is_none_or(|(_, b)| mag < *b) {
            best = Some(((i, j), mag));
        }
    }
    best.map(|(pos, _)| pos)
}

/// Smith normal form over the integers.
///
/// Pivots on the smallest nonzero absolute value remaining, then clears the
/// pivot row and column by Euclidean steps. A pivot that fails to divide the
/// rest of the block is fixed by folding the offending row into the pivot row.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut a = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut diag = Vec::new();

    for t in 0..m.min(n) {
        let block = (t..m).flat_map(|i| (t..n).map(move |j| (i, j)));
        let Some((pi, pj)) = smallest_nonzero(&a, block) else {
            break;
        };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let pivot = a.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..m {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = -a.get(i, t).div_floor(&pivot);
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                dirty |= !a.get(i, t).is_zero();
            }
            for j in t + 1..n {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = -a.get(t, j).div_floor(&pivot);
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                dirty |= !a.get(t, j).is_zero();
            }
            if dirty {
                let cross = std::iter::once((t, t))
                    .chain((t + 1..m).map(|i| (i, t)))
                    .chain((t + 1..n).map(|j| (t, j)));
                let (pi, pj) = smallest_nonzero(&a, cross).expect("pivot is nonzero");
                a.swap_rows(t, pi);
                u.swap_rows(t, pi);
                a.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            let offender =
                (t + 1..m).find(|&i| (t + 1..n).any(|j| !a.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
        diag.push(a.get(t, t).clone());
    }

    SmithDecomposition { u, diag, v }
}

/// Number of `x` in `Z_D^n` with `A x = 0 (mod D)`, where `n = A.cols()`.
pub fn kernel_cardinality(a: &ZModMatrix) -> BigUint {
    let d = a.modulus();
    let snf = smith_normal_form(&a.lift());
    let free = d.power(a.cols() - snf.rank());
    snf.diag
        .iter()
        .fold(free, |acc, di| acc * BigUint::from(d.gcd_with(di)))
}

/// Cardinality of the column span of `A` inside `Z_D^{rows}`.
pub fn image_cardinality(a: &ZModMatrix) -> BigUint {
    SubmoduleSpan::new(a.transpose()).cardinality().clone()
}

/// A submodule of `Z_D^n` given by generator rows.
#[derive(Clone, Debug)]
pub struct SubmoduleSpan {
    generators: ZModMatrix,
    // Invariant factors of the lifted generator matrix G, and the right
    // transform V of U G V = diag, reduced mod D.
    diag: Vec<BigInt>,
    right: ZModMatrix,
    cardinality: BigUint,
}

impl SubmoduleSpan {
    /// Span of the rows of `generators`.
    pub fn new(generators: ZModMatrix) -> Self {
        let d = generators.modulus();
        let snf = smith_normal_form(&generators.lift());
        let n = generators.cols();
        let right = ZModMatrix::from_fn(n, n, d, |i, j| d.reduce_big(snf.v.get(i, j)) as i64);
        let cardinality = snf
            .diag
            .iter()
            .map(|di| BigUint::from(d.get() / d.gcd_with(di)))
            .fold(BigUint::one(), |acc, x| acc * x);
        SubmoduleSpan {
            generators,
            diag: snf.diag,
            right,
            cardinality,
        }
    }

    pub fn from_vectors(modulus: Modulus, n: usize, vectors: &[Vec<u64>]) -> Result<Self> {
        Ok(Self::new(ZModMatrix::from_residue_rows(
            modulus, n, vectors,
        )?))
    }

    pub fn zero(modulus: Modulus, n: usize) -> Self {
        Self::new(ZModMatrix::zeros(0, n, modulus))
    }

    pub fn full(modulus: Modulus, n: usize) -> Self {
        Self::new(ZModMatrix::identity(n, modulus))
    }

    pub fn ambient_dim(&self) -> usize {
        self.generators.cols()
    }

    pub fn modulus(&self) -> Modulus {
        self.generators.modulus()
    }

    pub fn generators(&self) -> &ZModMatrix {
        &self.generators
    }

    pub fn cardinality(&self) -> &BigUint {
        &self.cardinality
    }

    /// Whether `x` is a `Z_D`-combination of the generators.
    ///
    /// With `U G V = S`, `G^T c = x` is solvable iff `S^T y = V^T x` is,
    /// which decouples into one congruence `d_i y_i = (V^T x)_i` per index.
    pub fn contains(&self, x: &[u64]) -> Result<bool> {
        let n = self.ambient_dim();
        if x.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: x.len(),
            });
        }
        let d = self.modulus();
        for i in 0..n {
            let rhs = (0..n).fold(0u64, |acc, k| {
                d.add(acc, d.mul(self.right.get(k, i), x[k] % d.get()))
            });
            let ok = match self.diag.get(i) {
                Some(di) => rhs % d.gcd_with(di) == 0,
                None => rhs == 0,
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `E^perp = { x : x . y = 0 for all y in E }`.
    ///
    /// With `U G V = S`, `G x = 0` iff `S w = 0` for `w = V^{-1} x`, so the
    /// solutions are `x = V w` where `w_i` ranges over `(D / gcd(d_i, D)) Z_D`
    /// for `i < rank` and over all of `Z_D` otherwise.
    pub fn orthogonal_complement(&self) -> SubmoduleSpan {
        let d = self.modulus();
        let n = self.ambient_dim();
        let mut rows = Vec::new();
        for i in 0..n {
            let scale = match self.diag.get(i) {
                Some(di) => d.get() / d.gcd_with(di),
                None => 1,
            };
            if scale % d.get() == 0 {
                continue;
            }
            rows.push(
                (0..n)
                    .map(|k| d.mul(self.right.get(k, i), scale))
                    .collect::<Vec<_>>(),
            );
        }
        SubmoduleSpan::new(
            ZModMatrix::from_residue_rows(d, n, &rows).expect("rows have ambient width"),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(d: u64) -> Modulus {
        Modulus::new(d).unwrap()
    }

    fn int(rows: &[&[i64]]) -> IntMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        IntMatrix::from_rows(cols, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn check_snf(a: &IntMatrix) -> SmithDecomposition {
        let snf = smith_normal_form(a);
        let prod = snf.u.mul(a).unwrap().mul(&snf.v).unwrap();
        assert_eq!(prod, snf.diagonal_matrix());
        assert_eq!(snf.u.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(snf.v.determinant().unwrap().abs(), BigInt::one());
        for w in snf.diag.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert!(snf.diag.iter().all(|d| d.is_positive()));
        snf
    }

    #[test]
    fn modulus_rejects_small_values() {
        assert!(matches!(Modulus::new(1), Err(Error::InvalidModulus(1))));
        assert!(Modulus::new(0).is_err());
        assert_eq!(m(6).reduce(-1), 5);
    }

    #[test]
    fn snf_identity() {
        let snf = check_snf(&IntMatrix::identity(2));
        assert_eq!(snf.diag, vec![BigInt::one(), BigInt::one()]);
    }

    #[test]
    fn snf_two_by_two() {
        let snf = check_snf(&int(&[&[2, 4], &[6, 8]]));
        assert_eq!(snf.diag, vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn snf_zero_and_empty() {
        let snf = check_snf(&int(&[&[0]]));
        assert!(snf.diag.is_empty());
        let snf = check_snf(&IntMatrix::zeros(0, 3));
        assert!(snf.diag.is_empty());
        assert_eq!(snf.v, IntMatrix::identity(3));
        check_snf(&IntMatrix::zeros(2, 0));
    }

    #[test]
    fn snf_needs_divisibility_fix() {
        // diag(2, 3) is diagonal but not in Smith form.
        let snf = check_snf(&int(&[&[2, 0], &[0, 3]]));
        assert_eq!(snf.diag, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn span_cardinality_examples() {
        let s = SubmoduleSpan::from_vectors(m(6), 1, &[vec![2]]).unwrap();
        assert_eq!(*s.cardinality(), BigUint::from(3u32));
        let s = SubmoduleSpan::from_vectors(m(6), 2, &[vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(*s.cardinality(), BigUint::from(6u32));
        assert_eq!(*SubmoduleSpan::zero(m(5), 3).cardinality(), BigUint::one());
    }

    #[test]
    fn kernel_cardinality_examples() {
        assert_eq!(
            kernel_cardinality(&ZModMatrix::zeros(1, 3, m(2))),
            BigUint::from(8u32)
        );
        let a = ZModMatrix::from_rows(m(6), 1, &[[2]]).unwrap();
        assert_eq!(kernel_cardinality(&a), BigUint::from(2u32));
        assert_eq!(
            kernel_cardinality(&ZModMatrix::identity(4, m(7))),
            BigUint::one()
        );
        assert_eq!(
            kernel_cardinality(&ZModMatrix::zeros(0, 2, m(3))),
            BigUint::from(9u32)
        );
    }

    #[test]
    fn complement_examples() {
        let s = SubmoduleSpan::from_vectors(m(2), 2, &[vec![1, 1]]).unwrap();
        let c = s.orthogonal_complement();
        assert_eq!(*c.cardinality(), BigUint::from(2u32));
        assert!(c.contains(&[1, 1]).unwrap());
        assert!(!c.contains(&[1, 0]).unwrap());

        let full = SubmoduleSpan::full(m(4), 3).orthogonal_complement();
        assert_eq!(*full.cardinality(), BigUint::one());
        let zero = SubmoduleSpan::zero(m(4), 3).orthogonal_complement();
        assert_eq!(*zero.cardinality(), BigUint::from(64u32));

        let s = SubmoduleSpan::from_vectors(m(6), 1, &[vec![2]]).unwrap();
        let c = s.orthogonal_complement();
        assert_eq!(*c.cardinality(), BigUint::from(2u32));
        assert!(c.contains(&[3]).unwrap());
    }

    #[test]
    fn contains_examples() {
        let s = SubmoduleSpan::from_vectors(m(6), 1, &[vec![2]]).unwrap();
        assert!(s.contains(&[4]).unwrap());
        assert!(!s.contains(&[1]).unwrap());
        assert!(s.contains(&[0]).unwrap());
        assert!(SubmoduleSpan::zero(m(3), 2).contains(&[0, 0]).unwrap());
        assert!(matches!(
            s.contains(&[0, 0]),
            Err(Error::DimensionMismatch {
                expected: 1,
                found: 2
            })
        ));
    }

    #[test]
    fn matrix_basics() {
        let a = ZModMatrix::from_rows(m(5), 2, &[[1, -1], [7, 0]]).unwrap();
        assert_eq!(a.row(0), &[1, 4]);
        assert_eq!(a.row(1), &[2, 0]);
        assert_eq!(a.transpose().column(0), vec![1, 4]);
        assert_eq!(a.mul_vec(&[1, 1]).unwrap(), vec![0, 2]);
        assert!(ZModMatrix::from_rows(m(5), 2, &[vec![1]]).is_err());
        let b = ZModMatrix::zeros(3, 1, m(5));
        assert!(a.mul(&b).is_err());
    }
}
