//! Brute-force checks on explicit operators over the `D^n`-dimensional
//! Hilbert space. Slow on purpose; only for small instances.
//!
//! Basis states `|j_1 .. j_n>` are indexed with qudit 1 as the most
//! significant digit.

use std::f64::consts::PI;

use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::pauli::{enumerate_group, PauliProduct, StabilizerSpec, DEFAULT_ENUMERATION_CAP};
use crate::zmod::{Modulus, SubmoduleSpan};

/// Largest Hilbert space dimension the dense oracles accept by default.
pub const DEFAULT_DENSE_CAP: usize = 4096;
/// Largest `D^n` enumerated by [`verify_complement_lemma`] by default.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 1_000_000;
/// Absolute tolerance on matrix residuals.
pub const TOLERANCE: f64 = 1e-9;
/// Column-norm threshold when picking a basis of a projector's range.
pub const RANGE_THRESHOLD: f64 = 1e-6;

/// `exp(2 pi i k / D)` for `k` in `0..D`.
pub fn roots_of_unity(modulus: Modulus) -> Vec<Complex64> {
    let d = modulus.get();
    (0..d)
        .map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / d as f64))
        .collect()
}

/// `D^n`, or an error when it exceeds `cap`.
pub fn hilbert_dimension(modulus: Modulus, n: usize, cap: usize) -> Result<usize> {
    let dim = modulus.power(n);
    match dim.to_usize() {
        Some(d) if d <= cap => Ok(d),
        _ => Err(Error::CapExceeded {
            size: dim.to_u128().unwrap_or(u128::MAX),
            cap: cap as u128,
        }),
    }
}

fn digits(mut index: usize, d: usize, n: usize, out: &mut [usize]) {
    for k in (0..n).rev() {
        out[k] = index % d;
        index /= d;
    }
}

type SparseVec = Vec<(usize, Complex64)>;

/// An operator on `C^dim`, stored by columns with only nonzero entries kept.
#[derive(Clone, Debug)]
pub struct DenseOperator {
    dim: usize,
    columns: Vec<SparseVec>,
}

impl DenseOperator {
    pub fn identity(dim: usize) -> Self {
        DenseOperator {
            dim,
            columns: (0..dim)
                .map(|j| vec![(j, Complex64::new(1.0, 0.0))])
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        match self.columns[j].binary_search_by_key(&i, |&(r, _)| r) {
            Ok(k) => self.columns[j][k].1,
            Err(_) => Complex64::zero(),
        }
    }

    pub fn column(&self, j: usize) -> &[(usize, Complex64)] {
        &self.columns[j]
    }

    /// `self * v` for a sparse vector.
    pub fn apply(&self, v: &[(usize, Complex64)]) -> SparseVec {
        let mut acc = Accumulator::new(self.dim);
        for &(k, c) in v {
            for &(i, a) in &self.columns[k] {
                acc.add(i, a * c);
            }
        }
        acc.drain()
    }

    pub fn mul(&self, other: &DenseOperator) -> DenseOperator {
        assert_eq!(self.dim, other.dim, "operator dimensions differ");
        DenseOperator {
            dim: self.dim,
            columns: other.columns.iter().map(|col| self.apply(col)).collect(),
        }
    }

    pub fn scale(&self, c: Complex64) -> DenseOperator {
        DenseOperator {
            dim: self.dim,
            columns: self
                .columns
                .iter()
                .map(|col| col.iter().map(|&(i, v)| (i, v * c)).collect())
                .collect(),
        }
    }

    pub fn adjoint(&self) -> DenseOperator {
        let mut columns: Vec<SparseVec> = vec![Vec::new(); self.dim];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                columns[i].push((j, v.conj()));
            }
        }
        DenseOperator {
            dim: self.dim,
            columns,
        }
    }

    /// `max |self_ij - other_ij|`.
    pub fn max_abs_diff(&self, other: &DenseOperator) -> f64 {
        assert_eq!(self.dim, other.dim, "operator dimensions differ");
        let mut worst: f64 = 0.0;
        for (a, b) in self.columns.iter().zip(&other.columns) {
            let (mut p, mut q) = (0, 0);
            while p < a.len() || q < b.len() {
                let diff = match (a.get(p), b.get(q)) {
                    (Some(&(i, x)), Some(&(k, y))) if i == k => {
                        p += 1;
                        q += 1;
                        x - y
                    }
                    (Some(&(i, x)), Some(&(k, _))) if i < k => {
                        p += 1;
                        x
                    }
                    (Some(&(_, x)), None) => {
                        p += 1;
                        x
                    }
                    (_, Some(&(_, y))) => {
                        q += 1;
                        -y
                    }
                    (None, None) => unreachable!(),
                };
                worst = worst.max(diff.norm());
            }
        }
        worst
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|j| self.get(j, j)).sum()
    }
}

/// Dense scratch buffer that remembers which slots were touched.
struct Accumulator {
    values: Vec<Complex64>,
    touched: Vec<usize>,
    seen: Vec<bool>,
}

impl Accumulator {
    fn new(dim: usize) -> Self {
        Accumulator {
            values: vec![Complex64::zero(); dim],
            touched: Vec::new(),
            seen: vec![false; dim],
        }
    }

    fn add(&mut self, i: usize, v: Complex64) {
        if !self.seen[i] {
            self.seen[i] = true;
            self.touched.push(i);
        }
        self.values[i] += v;
    }

    fn drain(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            let v = std::mem::replace(&mut self.values[i], Complex64::zero());
            self.seen[i] = false;
            if v.norm() > 1e-14 {
                out.push((i, v));
            }
        }
        self.touched.clear();
        out
    }
}

/// `w^l X^x Z^z` as an explicit matrix:
/// `Z^z |j> = w^{z.j} |j>` and `X^x |j> = |j + x>`.
pub fn dense_pauli(p: &PauliProduct, cap: usize) -> Result<DenseOperator> {
    let d = p.modulus().get() as usize;
    let n = p.num_qudits();
    let dim = hilbert_dimension(p.modulus(), n, cap)?;
    let roots = roots_of_unity(p.modulus());
    let mut j_digits = vec![0; n];
    let columns = (0..dim)
        .map(|j| {
            digits(j, d, n, &mut j_digits);
            let (row, exponent) = image_of_basis(p, &j_digits, d);
            vec![(row, roots[exponent])]
        })
        .collect();
    Ok(DenseOperator { dim, columns })
}

/// Row index and root exponent of `P |j>`, with `j` given by its digits.
fn image_of_basis(p: &PauliProduct, j_digits: &[usize], d: usize) -> (usize, usize) {
    let mut exponent = p.phase() as usize;
    let mut row = 0;
    for ((&j, &x), &z) in j_digits.iter().zip(p.x()).zip(p.z()) {
        exponent += z as usize * j;
        row = row * d + (j + x as usize) % d;
    }
    (row, exponent % d)
}

/// `P = (1/|S|) sum_{s in S} s` over the group the generators close to.
#[derive(Clone, Debug)]
pub struct Projector {
    pub operator: DenseOperator,
    pub group_size: usize,
    /// The generators close to a group holding `w^l I` with `l != 0`.
    pub has_scalar: bool,
}

pub fn dense_projector(spec: &StabilizerSpec, cap: usize) -> Result<Projector> {
    let modulus = spec.modulus();
    let d = modulus.get() as usize;
    let n = spec.num_qudits();
    let dim = hilbert_dimension(modulus, n, cap)?;
    let group = enumerate_group(modulus, n, &spec.generators(), DEFAULT_ENUMERATION_CAP)?;
    let roots = roots_of_unity(modulus);
    let norm = 1.0 / group.size as f64;

    let mut acc = Accumulator::new(dim);
    let mut j_digits = vec![0; n];
    let mut columns = Vec::with_capacity(dim);
    for j in 0..dim {
        digits(j, d, n, &mut j_digits);
        for s in &group.elements {
            let (row, exponent) = image_of_basis(s, &j_digits, d);
            acc.add(row, roots[exponent] * norm);
        }
        columns.push(acc.drain());
    }
    Ok(Projector {
        operator: DenseOperator { dim, columns },
        group_size: group.size,
        has_scalar: group.scalar_violation.is_some(),
    })
}

#[derive(Clone, Debug)]
pub struct ProjectorCheck {
    pub trace: Complex64,
    /// `max |P^2 - P|`.
    pub idempotence_residual: f64,
    /// `max |P^dagger - P|`.
    pub hermiticity_residual: f64,
    /// `|trace - round(trace)|` plus the imaginary part.
    pub integrality_residual: f64,
    /// `K` from the span route, or `None` when the group holds a scalar.
    pub expected_dimension: Option<BigUint>,
    pub group_size: usize,
    pub passed: bool,
}

impl ProjectorCheck {
    pub fn rounded_trace(&self) -> i64 {
        self.trace.re.round() as i64
    }
}

/// `Tr(P) = K = D^n / |S|` with `P = P^dagger = P^2`. A group containing
/// a nontrivial scalar must give `Tr(P) = 0`.
pub fn verify_projector(spec: &StabilizerSpec, cap: usize) -> Result<ProjectorCheck> {
    let projector = dense_projector(spec, cap)?;
    let p = &projector.operator;
    let idempotence_residual = p.mul(p).max_abs_diff(p);
    let hermiticity_residual = p.adjoint().max_abs_diff(p);
    let trace = p.trace();
    let integrality_residual = (trace.re - trace.re.round()).abs() + trace.im.abs();

    let expected_dimension = match spec.code_dimension() {
        Ok(k) => Some(k),
        Err(Error::ScalarViolation) => None,
        Err(e) => return Err(e),
    };
    let expected = expected_dimension
        .as_ref()
        .map_or(0, |k| k.to_i64().unwrap_or(i64::MAX));
    let consistent = projector.has_scalar == expected_dimension.is_none();
    let passed = consistent
        && idempotence_residual < TOLERANCE
        && hermiticity_residual < TOLERANCE
        && integrality_residual < TOLERANCE
        && trace.re.round() as i64 == expected;
    Ok(ProjectorCheck {
        trace,
        idempotence_residual,
        hermiticity_residual,
        integrality_residual,
        expected_dimension,
        group_size: projector.group_size,
        passed,
    })
}

fn inner(a: &[(usize, Complex64)], b: &[(usize, Complex64)]) -> Complex64 {
    // conj(a) . b on sorted sparse vectors
    let (mut p, mut q) = (0, 0);
    let mut acc = Complex64::zero();
    while p < a.len() && q < b.len() {
        match a[p].0.cmp(&b[q].0) {
            std::cmp::Ordering::Less => p += 1,
            std::cmp::Ordering::Greater => q += 1,
            std::cmp::Ordering::Equal => {
                acc += a[p].1.conj() * b[q].1;
                p += 1;
                q += 1;
            }
        }
    }
    acc
}

fn norm(v: &[(usize, Complex64)]) -> f64 {
    v.iter().map(|(_, c)| c.norm_sqr()).sum::<f64>().sqrt()
}

/// Orthonormal basis of an operator's range.
///
/// Columns with norm below [`RANGE_THRESHOLD`] are skipped; the rest are
/// orthonormalized by Gram-Schmidt, only against basis vectors whose support
/// overlaps theirs.
pub fn range_basis(op: &DenseOperator) -> Vec<SparseVec> {
    let mut basis: Vec<SparseVec> = Vec::new();
    let mut by_row: Vec<Vec<usize>> = vec![Vec::new(); op.dim()];
    for j in 0..op.dim() {
        let col = op.column(j);
        if norm(col) < RANGE_THRESHOLD {
            continue;
        }
        let mut candidates: Vec<usize> = col
            .iter()
            .flat_map(|&(i, _)| by_row[i].iter().copied())
            .collect();
        candidates.sort_unstable();
        candidates.dedup();
        let mut v: SparseVec = col.to_vec();
        for &b in &candidates {
            let c = inner(&basis[b], &v);
            if c.norm() == 0.0 {
                continue;
            }
            let mut acc = Accumulator::new(op.dim());
            for &(i, x) in &v {
                acc.add(i, x);
            }
            for &(i, y) in &basis[b] {
                acc.add(i, -c * y);
            }
            v = acc.drain();
        }
        let len = norm(&v);
        if len < RANGE_THRESHOLD {
            continue;
        }
        let v: SparseVec = v.into_iter().map(|(i, x)| (i, x / len)).collect();
        let id = basis.len();
        for &(i, _) in &v {
            by_row[i].push(id);
        }
        basis.push(v);
    }
    basis
}

#[derive(Clone, Debug)]
pub struct LogicalActionCheck {
    pub code_dimension: usize,
    /// Largest distance of the restricted operator's matrix entries from
    /// `c I`, with `c` its first diagonal entry.
    pub deviation_from_scalar: f64,
    pub nonscalar: bool,
}

/// Whether `r` restricted to the code space is something other than a
/// multiple of the identity.
pub fn verify_logical_action(
    r: &PauliProduct,
    spec: &StabilizerSpec,
    cap: usize,
) -> Result<LogicalActionCheck> {
    if !crate::distance::is_logical(r, spec)? {
        return Err(Error::Precondition(format!(
            "{r:?} is not a logical operator"
        )));
    }
    let projector = dense_projector(spec, cap)?;
    let basis = range_basis(&projector.operator);
    let op = dense_pauli(r, cap)?;

    let mut by_row: Vec<Vec<usize>> = vec![Vec::new(); op.dim()];
    for (k, b) in basis.iter().enumerate() {
        for &(i, _) in b {
            by_row[i].push(k);
        }
    }
    let mut scalar: Option<Complex64> = None;
    let mut deviation: f64 = 0.0;
    for (k, b) in basis.iter().enumerate() {
        let image = op.apply(b);
        let mut targets: Vec<usize> = image
            .iter()
            .flat_map(|&(i, _)| by_row[i].iter().copied())
            .collect();
        targets.push(k);
        targets.sort_unstable();
        targets.dedup();
        for t in targets {
            let entry = inner(&basis[t], &image);
            if t == k {
                let c = *scalar.get_or_insert(entry);
                deviation = deviation.max((entry - c).norm());
            } else {
                deviation = deviation.max(entry.norm());
            }
        }
    }
    Ok(LogicalActionCheck {
        code_dimension: basis.len(),
        deviation_from_scalar: deviation,
        nonscalar: deviation >= TOLERANCE,
    })
}

#[derive(Clone, Debug)]
pub struct ComplementCheck {
    /// `|E|` by closing the generators under addition.
    pub span_size: usize,
    /// `|E^perp|` by testing every vector.
    pub complement_size: usize,
    pub reported_span: BigUint,
    pub reported_complement: BigUint,
    /// `max_eta |sum_{x in E} w^{eta.x} - expected|`.
    pub character_residual: f64,
    pub passed: bool,
}

fn encode(v: &[u64], d: u64) -> usize {
    v.iter()
        .fold(0usize, |acc, &x| acc * d as usize + x as usize)
}

/// Exhaustive check of `|E| |E^perp| = D^n` and of the character sum
/// `sum_{x in E} w^{eta.x} = |E| [eta in E^perp]`.
pub fn verify_complement_lemma(span: &SubmoduleSpan, cap: usize) -> Result<ComplementCheck> {
    let modulus = span.modulus();
    let d = modulus.get();
    let n = span.ambient_dim();
    let dim = hilbert_dimension(modulus, n, cap)?;
    let gens: Vec<&[u64]> = span.generators().row_vectors().collect();

    // E by breadth-first closure under adding generators.
    let mut in_span = vec![false; dim];
    let mut members: Vec<Vec<u64>> = vec![vec![0; n]];
    in_span[0] = true;
    let mut head = 0;
    while head < members.len() {
        let x = members[head].clone();
        head += 1;
        for g in &gens {
            let y: Vec<u64> = x
                .iter()
                .zip(g.iter())
                .map(|(&a, &b)| modulus.add(a, b))
                .collect();
            let key = encode(&y, d);
            if !in_span[key] {
                in_span[key] = true;
                members.push(y);
            }
        }
    }

    let roots = roots_of_unity(modulus);
    let mut eta = vec![0u64; n];
    let mut complement_size = 0usize;
    let mut character_residual: f64 = 0.0;
    let mut counts = vec![0usize; d as usize];
    let mut eta_digits = vec![0usize; n];
    for idx in 0..dim {
        digits(idx, d as usize, n, &mut eta_digits);
        for (e, &v) in eta.iter_mut().zip(&eta_digits) {
            *e = v as u64;
        }
        let orthogonal = gens.iter().all(|g| modulus.dot(g, &eta) == 0);
        if orthogonal {
            complement_size += 1;
        }
        counts.iter_mut().for_each(|c| *c = 0);
        for x in &members {
            counts[modulus.dot(&eta, x) as usize] += 1;
        }
        let sum: Complex64 = counts.iter().zip(&roots).map(|(&c, &w)| w * c as f64).sum();
        let expected = if orthogonal {
            members.len() as f64
        } else {
            0.0
        };
        character_residual = character_residual.max((sum - expected).norm());
    }

    let reported_span = span.cardinality().clone();
    let reported_complement = span.orthogonal_complement().cardinality().clone();
    let passed = BigUint::from(members.len()) == reported_span
        && BigUint::from(complement_size) == reported_complement
        && members.len() * complement_size == dim
        && character_residual < TOLERANCE;
    Ok(ComplementCheck {
        span_size: members.len(),
        complement_size,
        reported_span,
        reported_complement,
        character_residual,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex2::TwoComplex;
    use crate::zmod::ZModMatrix;

    fn m(d: u64) -> Modulus {
        Modulus::new(d).unwrap()
    }

    fn spec_of(c: &TwoComplex, d: u64) -> StabilizerSpec {
        StabilizerSpec::from_chain(&c.chain_complex(m(d)).unwrap())
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn dense_pauli_examples() {
        let id = dense_pauli(&PauliProduct::identity(m(3), 2), 100).unwrap();
        assert!(id.max_abs_diff(&DenseOperator::identity(9)) < TOLERANCE);

        let z = dense_pauli(&PauliProduct::z_type(m(2), vec![1]), 100).unwrap();
        assert!((z.get(0, 0) - c(1.0, 0.0)).norm() < TOLERANCE);
        assert!((z.get(1, 1) - c(-1.0, 0.0)).norm() < TOLERANCE);
        assert_eq!(z.get(0, 1), Complex64::zero());

        let x = dense_pauli(&PauliProduct::x_type(m(3), vec![1]), 100).unwrap();
        let z = dense_pauli(&PauliProduct::z_type(m(3), vec![1]), 100).unwrap();
        let w = roots_of_unity(m(3))[1];
        assert!(z.mul(&x).max_abs_diff(&x.mul(&z).scale(w)) < TOLERANCE);

        assert!(matches!(
            dense_pauli(&PauliProduct::identity(m(2), 13), 4096),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn projector_examples() {
        let z = StabilizerSpec::new(
            ZModMatrix::from_rows(m(2), 1, &[[1]]).unwrap(),
            ZModMatrix::zeros(0, 1, m(2)),
        )
        .unwrap();
        let p = dense_projector(&z, 100).unwrap().operator;
        assert!((p.get(0, 0) - c(1.0, 0.0)).norm() < TOLERANCE);
        assert!(p.get(1, 1).norm() < TOLERANCE);

        let check = verify_projector(&spec_of(&TwoComplex::rp2(), 2), DEFAULT_DENSE_CAP).unwrap();
        assert!(check.passed);
        assert_eq!(check.rounded_trace(), 2);

        let check = verify_projector(&spec_of(&TwoComplex::torus(), 2), DEFAULT_DENSE_CAP).unwrap();
        assert!(check.passed);
        assert_eq!(check.rounded_trace(), 4);
    }

    #[test]
    fn projector_on_single_x_and_scalar_spec() {
        let x = StabilizerSpec::new(
            ZModMatrix::zeros(0, 1, m(3)),
            ZModMatrix::from_rows(m(3), 1, &[[1]]).unwrap(),
        )
        .unwrap();
        let check = verify_projector(&x, 100).unwrap();
        assert!(check.passed);
        assert_eq!(check.rounded_trace(), 1);

        let bad = StabilizerSpec::new(
            ZModMatrix::from_rows(m(3), 1, &[[1]]).unwrap(),
            ZModMatrix::from_rows(m(3), 1, &[[1]]).unwrap(),
        )
        .unwrap();
        let check = verify_projector(&bad, 100).unwrap();
        assert!(check.passed);
        assert!(check.expected_dimension.is_none());
        assert_eq!(check.rounded_trace(), 0);
    }

    #[test]
    fn logical_action_examples() {
        let torus = spec_of(&TwoComplex::torus(), 2);
        let r = PauliProduct::x_type(m(2), vec![1, 0]);
        let check = verify_logical_action(&r, &torus, DEFAULT_DENSE_CAP).unwrap();
        assert_eq!(check.code_dimension, 4);
        assert!(check.nonscalar);

        let rp2 = spec_of(&TwoComplex::rp2(), 2);
        let report = crate::distance::distance_css(&rp2, 1000).unwrap();
        let r = report.witness.unwrap().to_pauli(m(2));
        assert!(
            verify_logical_action(&r, &rp2, DEFAULT_DENSE_CAP)
                .unwrap()
                .nonscalar
        );

        let stab = torus.face_operator(0).unwrap();
        assert!(matches!(
            verify_logical_action(&stab, &torus, DEFAULT_DENSE_CAP),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn complement_lemma_examples() {
        let s = SubmoduleSpan::from_vectors(m(6), 1, &[vec![2]]).unwrap();
        let check = verify_complement_lemma(&s, DEFAULT_EXHAUSTIVE_CAP).unwrap();
        assert_eq!((check.span_size, check.complement_size), (3, 2));
        assert!(check.passed);

        let zero = SubmoduleSpan::zero(m(3), 2);
        let check = verify_complement_lemma(&zero, DEFAULT_EXHAUSTIVE_CAP).unwrap();
        assert_eq!((check.span_size, check.complement_size), (1, 9));
        assert!(check.passed);
    }
}
