//! Qudit Pauli products in symplectic form and CSS stabilizers read off a
//! chain complex.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::complex2::ChainComplexData;
use crate::error::{Error, Result};
use crate::zmod::{Modulus, SubmoduleSpan, ZModMatrix};

/// Enumeration cap used when none is given.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// `w^phase X^x Z^z` on `n` qudits, with `w = exp(2 pi i / D)`.
///
/// Position 0 is the leftmost tensor factor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliProduct {
    modulus: Modulus,
    phase: u64,
    x: Vec<u64>,
    z: Vec<u64>,
}

impl PauliProduct {
    pub fn new(modulus: Modulus, phase: i64, x: &[i64], z: &[i64]) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::DimensionMismatch {
                expected: x.len(),
                found: z.len(),
            });
        }
        Ok(PauliProduct {
            modulus,
            phase: modulus.reduce(phase),
            x: x.iter().map(|&v| modulus.reduce(v)).collect(),
            z: z.iter().map(|&v| modulus.reduce(v)).collect(),
        })
    }

    /// From residues; values are reduced mod `D`.
    pub fn from_residues(modulus: Modulus, phase: u64, x: Vec<u64>, z: Vec<u64>) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::DimensionMismatch {
                expected: x.len(),
                found: z.len(),
            });
        }
        let d = modulus.get();
        Ok(PauliProduct {
            modulus,
            phase: phase % d,
            x: x.into_iter().map(|v| v % d).collect(),
            z: z.into_iter().map(|v| v % d).collect(),
        })
    }

    pub fn identity(modulus: Modulus, n: usize) -> Self {
        PauliProduct {
            modulus,
            phase: 0,
            x: vec![0; n],
            z: vec![0; n],
        }
    }

    pub fn x_type(modulus: Modulus, x: Vec<u64>) -> Self {
        let n = x.len();
        Self::from_residues(modulus, 0, x, vec![0; n]).expect("equal lengths")
    }

    pub fn z_type(modulus: Modulus, z: Vec<u64>) -> Self {
        let n = z.len();
        Self::from_residues(modulus, 0, vec![0; n], z).expect("equal lengths")
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn num_qudits(&self) -> usize {
        self.x.len()
    }

    pub fn phase(&self) -> u64 {
        self.phase
    }

    pub fn x(&self) -> &[u64] {
        &self.x
    }

    pub fn z(&self) -> &[u64] {
        &self.z
    }

    pub fn is_identity(&self) -> bool {
        self.phase == 0 && self.is_scalar()
    }

    /// `x = 0` and `z = 0`, whatever the phase.
    pub fn is_scalar(&self) -> bool {
        self.x.iter().all(|&v| v == 0) && self.z.iter().all(|&v| v == 0)
    }

    fn check_compatible(&self, other: &PauliProduct) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(
                self.modulus.get(),
                other.modulus.get(),
            ));
        }
        if self.x.len() != other.x.len() {
            return Err(Error::DimensionMismatch {
                expected: self.x.len(),
                found: other.x.len(),
            });
        }
        Ok(())
    }

    /// `P Q`, normalised back to `w^l X^x Z^z`.
    ///
    /// Moving `Z^{z_P}` to the right of `X^{x_Q}` costs `w^{z_P . x_Q}`.
    pub fn mul(&self, other: &PauliProduct) -> Result<PauliProduct> {
        self.check_compatible(other)?;
        let d = self.modulus;
        let cross = d.dot(&self.z, &other.x);
        Ok(PauliProduct {
            modulus: d,
            phase: d.add(d.add(self.phase, other.phase), cross),
            x: self
                .x
                .iter()
                .zip(&other.x)
                .map(|(&a, &b)| d.add(a, b))
                .collect(),
            z: self
                .z
                .iter()
                .zip(&other.z)
                .map(|(&a, &b)| d.add(a, b))
                .collect(),
        })
    }

    pub fn inverse(&self) -> PauliProduct {
        let d = self.modulus;
        let phase = d.add(d.neg(self.phase), d.dot(&self.z, &self.x));
        PauliProduct {
            modulus: d,
            phase,
            x: self.x.iter().map(|&v| d.neg(v)).collect(),
            z: self.z.iter().map(|&v| d.neg(v)).collect(),
        }
    }

    pub fn pow(&self, k: u64) -> PauliProduct {
        let mut acc = PauliProduct::identity(self.modulus, self.num_qudits());
        for _ in 0..k {
            acc = acc.mul(self).expect("same shape");
        }
        acc
    }

    /// `b` with `P Q = w^b Q P`, namely `z_P . x_Q - x_P . z_Q`.
    pub fn commutation_phase(&self, other: &PauliProduct) -> Result<u64> {
        self.check_compatible(other)?;
        let d = self.modulus;
        Ok(d.sub(d.dot(&self.z, &other.x), d.dot(&self.x, &other.z)))
    }

    pub fn commutes_with(&self, other: &PauliProduct) -> Result<bool> {
        Ok(self.commutation_phase(other)? == 0)
    }

    /// Positions where `x_i != 0` or `z_i != 0`.
    pub fn support(&self) -> Vec<usize> {
        (0..self.x.len())
            .filter(|&i| self.x[i] != 0 || self.z[i] != 0)
            .collect()
    }

    pub fn weight(&self) -> usize {
        self.x
            .iter()
            .zip(&self.z)
            .filter(|(&a, &b)| a != 0 || b != 0)
            .count()
    }
}

impl fmt::Debug for PauliProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "w^{} X^{:?} Z^{:?} (mod {})",
            self.phase, self.x, self.z, self.modulus
        )
    }
}

/// Result of closing a generator set under multiplication.
#[derive(Clone, Debug)]
pub struct GroupEnumeration {
    pub size: usize,
    /// First element found of the form `w^l I` with `l != 0`.
    pub scalar_violation: Option<PauliProduct>,
    pub elements: Vec<PauliProduct>,
}

/// Breadth-first closure of `generators` under right multiplication,
/// starting from the identity. Fails once more than `cap` elements appear.
pub fn enumerate_group(
    modulus: Modulus,
    n: usize,
    generators: &[PauliProduct],
    cap: usize,
) -> Result<GroupEnumeration> {
    for g in generators {
        if g.modulus() != modulus {
            return Err(Error::ModulusMismatch(modulus.get(), g.modulus().get()));
        }
        if g.num_qudits() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: g.num_qudits(),
            });
        }
    }
    let identity = PauliProduct::identity(modulus, n);
    let mut seen: HashSet<PauliProduct> = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    order.push(identity.clone());
    queue.push_back(identity);
    let mut scalar_violation = None;

    while let Some(p) = queue.pop_front() {
        for g in generators {
            let q = p.mul(g)?;
            if seen.contains(&q) {
                continue;
            }
            if seen.len() >= cap {
                return Err(Error::CapExceeded {
                    size: seen.len() as u128 + 1,
                    cap: cap as u128,
                });
            }
            if scalar_violation.is_none() && q.is_scalar() && q.phase() != 0 {
                scalar_violation = Some(q.clone());
            }
            seen.insert(q.clone());
            order.push(q.clone());
            queue.push_back(q);
        }
    }

    Ok(GroupEnumeration {
        size: order.len(),
        scalar_violation,
        elements: order,
    })
}

/// CSS stabilizer data: Z-type face generators and X-type vertex generators
/// on `n` qudits. Face rows are the `z` parts and vertex rows the `x` parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerSpec {
    face_rows: ZModMatrix,
    vertex_rows: ZModMatrix,
}

impl StabilizerSpec {
    /// Accepts any pair of generator matrices, including ones whose
    /// generators fail to commute.
    pub fn new(face_rows: ZModMatrix, vertex_rows: ZModMatrix) -> Result<Self> {
        if face_rows.modulus() != vertex_rows.modulus() {
            return Err(Error::ModulusMismatch(
                face_rows.modulus().get(),
                vertex_rows.modulus().get(),
            ));
        }
        if face_rows.cols() != vertex_rows.cols() {
            return Err(Error::DimensionMismatch {
                expected: face_rows.cols(),
                found: vertex_rows.cols(),
            });
        }
        Ok(StabilizerSpec {
            face_rows,
            vertex_rows,
        })
    }

    /// `B_f` has `z = d_2(f)` and `A_v` has `x` equal to row `v` of `d_1`.
    pub fn from_chain(chain: &ChainComplexData) -> Self {
        StabilizerSpec {
            face_rows: chain.coboundary2(),
            vertex_rows: chain.boundary1().clone(),
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.face_rows.modulus()
    }

    pub fn num_qudits(&self) -> usize {
        self.face_rows.cols()
    }

    pub fn num_faces(&self) -> usize {
        self.face_rows.rows()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_rows.rows()
    }

    pub fn face_rows(&self) -> &ZModMatrix {
        &self.face_rows
    }

    pub fn vertex_rows(&self) -> &ZModMatrix {
        &self.vertex_rows
    }

    pub fn face_operator(&self, f: usize) -> Result<PauliProduct> {
        if f >= self.num_faces() {
            return Err(Error::OutOfRange {
                index: f,
                size: self.num_faces(),
            });
        }
        Ok(PauliProduct::z_type(
            self.modulus(),
            self.face_rows.row(f).to_vec(),
        ))
    }

    pub fn vertex_operator(&self, v: usize) -> Result<PauliProduct> {
        if v >= self.num_vertices() {
            return Err(Error::OutOfRange {
                index: v,
                size: self.num_vertices(),
            });
        }
        Ok(PauliProduct::x_type(
            self.modulus(),
            self.vertex_rows.row(v).to_vec(),
        ))
    }

    /// Face generators in order, then vertex generators in order.
    pub fn generators(&self) -> Vec<PauliProduct> {
        let faces = (0..self.num_faces()).map(|f| self.face_operator(f).expect("in range"));
        let vertices = (0..self.num_vertices()).map(|v| self.vertex_operator(v).expect("in range"));
        faces.chain(vertices).collect()
    }

    /// `r(B)`, the span of the face `z` parts.
    pub fn face_span(&self) -> SubmoduleSpan {
        SubmoduleSpan::new(self.face_rows.clone())
    }

    /// `r(A)`, the span of the vertex `x` parts.
    pub fn vertex_span(&self) -> SubmoduleSpan {
        SubmoduleSpan::new(self.vertex_rows.clone())
    }

    /// First `(face, vertex)` pair whose generators fail to commute.
    pub fn first_noncommuting_pair(&self) -> Option<(usize, usize)> {
        let d = self.modulus();
        for f in 0..self.num_faces() {
            for v in 0..self.num_vertices() {
                if d.dot(self.face_rows.row(f), self.vertex_rows.row(v)) != 0 {
                    return Some((f, v));
                }
            }
        }
        None
    }

    /// `|S| = |r(A)| |r(B)|`, valid when the generators commute.
    pub fn stabilizer_cardinality(&self) -> Result<BigUint> {
        if self.first_noncommuting_pair().is_some() {
            return Err(Error::ScalarViolation);
        }
        Ok(self.face_span().cardinality() * self.vertex_span().cardinality())
    }

    /// `K = D^n / |S|`.
    ///
    /// Pure-type generators that all commute multiply to elements with zero
    /// phase, so the group has no scalars. A non-commuting pair puts
    /// `w^b I` into the group and the code space collapses.
    pub fn code_dimension(&self) -> Result<BigUint> {
        let s = self.stabilizer_cardinality()?;
        let (k, r) = self.modulus().power(self.num_qudits()).div_rem(&s);
        debug_assert_eq!(r, BigUint::from(0u32));
        Ok(k)
    }

    /// One commutation phase per generator, faces first.
    pub fn syndrome(&self, error: &PauliProduct) -> Result<Vec<u64>> {
        if error.modulus() != self.modulus() {
            return Err(Error::ModulusMismatch(
                self.modulus().get(),
                error.modulus().get(),
            ));
        }
        if error.num_qudits() != self.num_qudits() {
            return Err(Error::DimensionMismatch {
                expected: self.num_qudits(),
                found: error.num_qudits(),
            });
        }
        self.generators()
            .iter()
            .map(|g| error.commutation_phase(g))
            .collect()
    }

    /// Closes the generators under multiplication. The predicted size
    /// `|r(A)| |r(B)|` is checked against `cap` up front.
    pub fn enumerate_group(&self, cap: usize) -> Result<GroupEnumeration> {
        let predicted = self.face_span().cardinality() * self.vertex_span().cardinality();
        if predicted > BigUint::from(cap) {
            return Err(Error::CapExceeded {
                size: predicted.to_u128().unwrap_or(u128::MAX),
                cap: cap as u128,
            });
        }
        enumerate_group(self.modulus(), self.num_qudits(), &self.generators(), cap)
    }

    /// Plain-text check matrix: a `D n faces vertices` header, then the
    /// face rows, then the vertex rows.
    pub fn to_check_matrix(&self) -> String {
        let mut out = format!(
            "{} {} {} {}\n",
            self.modulus(),
            self.num_qudits(),
            self.num_faces(),
            self.num_vertices()
        );
        for row in self
            .face_rows
            .row_vectors()
            .chain(self.vertex_rows.row_vectors())
        {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_check_matrix(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty check matrix".into()))?;
        let nums = parse_numbers(header)?;
        let [d, n, nf, nv] = nums[..] else {
            return Err(Error::Parse(format!(
                "header needs 4 numbers, got {}",
                nums.len()
            )));
        };
        let modulus = Modulus::new(d)?;
        let (n, nf, nv) = (n as usize, nf as usize, nv as usize);
        let mut rows = Vec::with_capacity(nf + nv);
        for _ in 0..nf + nv {
            let line = lines.next().ok_or_else(|| {
                Error::Parse(format!("expected {} rows, got {}", nf + nv, rows.len()))
            })?;
            let row = parse_numbers(line)?;
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {n}",
                    rows.len(),
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|&&v| v >= d) {
                return Err(Error::Parse(format!("entry {bad} outside [0, {d})")));
            }
            rows.push(row);
        }
        if lines.next().is_some() {
            return Err(Error::Parse("trailing data after check matrix".into()));
        }
        let faces = ZModMatrix::from_residue_rows(modulus, n, &rows[..nf])?;
        let vertices = ZModMatrix::from_residue_rows(modulus, n, &rows[nf..])?;
        StabilizerSpec::new(faces, vertices)
    }
}

fn parse_numbers(line: &str) -> Result<Vec<u64>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| Error::Parse(format!("not a number: {t:?}")))
        })
        .collect()
}
