//! Combinatorial hypermaps `(alpha, sigma)` and the 2-complex that carries
//! the same homological code.
//!
//! Darts are 0-based internally; documents and names use 1-based darts.
//! Faces are the orbits of `i -> sigma(alpha^{-1}(i))`, i.e. `alpha^{-1}`
//! acts first. Along a face `i_{s+1} = sigma(alpha^{-1}(i_s))`, which makes
//! `v(alpha^{-1}(i_s)) = v(i_{s+1})` and lets consecutive darts chain into a
//! closed walk.

use std::collections::HashSet;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex2::ChainComplexData;
use crate::complex2::{ClosedWalk, Edge, Face, SignedEdge, TwoComplex};
use crate::error::{Error, Result};
use crate::pauli::StabilizerSpec;
use crate::zmod::{Modulus, ZModMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut hit = vec![false; n];
        for &i in &images {
            if i >= n || hit[i] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection"
                )));
            }
            hit[i] = true;
        }
        Ok(Permutation { images })
    }

    /// From disjoint cycles of 1-based darts; omitted darts are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (k, &dart) in cycle.iter().enumerate() {
                if dart == 0 || dart > n {
                    return Err(Error::InvalidPermutation(format!(
                        "dart {dart} outside 1..={n}"
                    )));
                }
                if used[dart - 1] {
                    return Err(Error::InvalidPermutation(format!("dart {dart} repeated")));
                }
                used[dart - 1] = true;
                images[dart - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(rng);
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Self {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    /// Cycle partition; each orbit starts at its smallest element and
    /// orbits are ordered by that element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                orbit.push(i);
                i = self.images[i];
            }
            out.push(orbit);
        }
        out
    }

    /// Nontrivial cycles in 1-based notation.
    pub fn to_cycles(&self) -> Vec<Vec<usize>> {
        self.orbits()
            .into_iter()
            .filter(|o| o.len() > 1)
            .map(|o| o.into_iter().map(|i| i + 1).collect())
            .collect()
    }
}

/// Orbits of `alpha`, `sigma` and the face permutation, with per-dart lookups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitStructure {
    pub hyperedges: Vec<Vec<usize>>,
    pub hypervertices: Vec<Vec<usize>>,
    pub faces: Vec<Vec<usize>>,
    pub edge_of: Vec<usize>,
    pub vertex_of: Vec<usize>,
    pub face_of: Vec<usize>,
}

fn lookup(n: usize, orbits: &[Vec<usize>]) -> Vec<usize> {
    let mut of = vec![0; n];
    for (k, orbit) in orbits.iter().enumerate() {
        for &i in orbit {
            of[i] = k;
        }
    }
    of
}

/// One chosen dart per hyperedge, indexed like the hyperedges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialDarts {
    darts: Vec<usize>,
}

impl SpecialDarts {
    pub fn darts(&self) -> &[usize] {
        &self.darts
    }

    pub fn contains(&self, dart: usize) -> bool {
        self.darts.contains(&dart)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypermapChain {
    pub delta1: ZModMatrix,
    pub delta2: ZModMatrix,
    /// Non-special darts in increasing order; the basis of `W / iota(E)`.
    pub basis: Vec<usize>,
}

impl HypermapChain {
    pub fn chain_complex(&self) -> Result<ChainComplexData> {
        ChainComplexData::new(self.delta1.clone(), self.delta2.clone())
    }

    pub fn stabilizer_spec(&self) -> Result<StabilizerSpec> {
        Ok(StabilizerSpec::from_chain(&self.chain_complex()?))
    }

    pub fn code_dimension(&self) -> Result<BigUint> {
        self.stabilizer_spec()?.code_dimension()
    }
}

/// Outcome of comparing the hypermap chain with the constructed complex.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct EquivalenceCertificate {
    pub boundary1_matches: bool,
    pub boundary2_matches: bool,
    /// `d1 d2 = 0`, `d1 iota = 0` and `Delta1 Delta2 = 0`.
    pub chain_identities: bool,
    pub complex_valid: bool,
    pub orientable_mod_d: bool,
    pub orientable_over_integers: bool,
}

impl EquivalenceCertificate {
    pub fn holds(&self) -> bool {
        self.boundary1_matches
            && self.boundary2_matches
            && self.chain_identities
            && self.complex_valid
            && self.orientable_mod_d
            && self.orientable_over_integers
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypermap {
    alpha: Permutation,
    sigma: Permutation,
}

impl Hypermap {
    pub fn new(alpha: Permutation, sigma: Permutation) -> Result<Self> {
        if alpha.len() != sigma.len() {
            return Err(Error::InvalidPermutation(format!(
                "alpha acts on {} darts, sigma on {}",
                alpha.len(),
                sigma.len()
            )));
        }
        Ok(Hypermap { alpha, sigma })
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        Hypermap {
            alpha: Permutation::random(n, rng),
            sigma: Permutation::random(n, rng),
        }
    }

    pub fn num_darts(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    /// `i -> sigma(alpha^{-1}(i))`.
    pub fn face_permutation(&self) -> Permutation {
        self.alpha.inverse().then(&self.sigma)
    }

    pub fn orbits(&self) -> OrbitStructure {
        let n = self.num_darts();
        let hyperedges = self.alpha.orbits();
        let hypervertices = self.sigma.orbits();
        let faces = self.face_permutation().orbits();
        OrbitStructure {
            edge_of: lookup(n, &hyperedges),
            vertex_of: lookup(n, &hypervertices),
            face_of: lookup(n, &faces),
            hyperedges,
            hypervertices,
            faces,
        }
    }

    /// `d_2(f) = sum of darts in f`; darts by faces.
    pub fn d2_matrix(&self, modulus: Modulus) -> ZModMatrix {
        let orb = self.orbits();
        ZModMatrix::from_fn(self.num_darts(), orb.faces.len(), modulus, |i, f| {
            (orb.face_of[i] == f) as i64
        })
    }

    /// `d_1(i) = v(alpha^{-1}(i)) - v(i)`; hypervertices by darts.
    pub fn d1_matrix(&self, modulus: Modulus) -> ZModMatrix {
        let orb = self.orbits();
        let alpha_inv = self.alpha.inverse();
        let mut m = ZModMatrix::zeros(orb.hypervertices.len(), self.num_darts(), modulus);
        for i in 0..self.num_darts() {
            m.add_to(orb.vertex_of[alpha_inv.apply(i)], i, 1);
            m.add_to(orb.vertex_of[i], i, -1);
        }
        m
    }

    /// `iota(e) = sum of darts in e`; darts by hyperedges.
    pub fn iota_matrix(&self, modulus: Modulus) -> ZModMatrix {
        let orb = self.orbits();
        ZModMatrix::from_fn(self.num_darts(), orb.hyperedges.len(), modulus, |i, e| {
            (orb.edge_of[i] == e) as i64
        })
    }

    /// The smallest dart of each hyperedge.
    pub fn default_special_darts(&self) -> SpecialDarts {
        SpecialDarts {
            darts: self.alpha.orbits().iter().map(|e| e[0]).collect(),
        }
    }

    pub fn random_special_darts<R: Rng + ?Sized>(&self, rng: &mut R) -> SpecialDarts {
        SpecialDarts {
            darts: self
                .alpha
                .orbits()
                .iter()
                .map(|e| *e.choose(rng).expect("orbits are nonempty"))
                .collect(),
        }
    }

    /// Validates a choice of 0-based darts, one per hyperedge in any order.
    pub fn special_darts(&self, darts: &[usize]) -> Result<SpecialDarts> {
        let orb = self.orbits();
        let mut chosen: Vec<Option<usize>> = vec![None; orb.hyperedges.len()];
        for &d in darts {
            if d >= self.num_darts() {
                return Err(Error::InvalidSpecialDarts(format!(
                    "dart {} out of range",
                    d + 1
                )));
            }
            let e = orb.edge_of[d];
            if chosen[e].replace(d).is_some() {
                return Err(Error::InvalidSpecialDarts(format!(
                    "two special darts in the hyperedge of dart {}",
                    d + 1
                )));
            }
        }
        let darts = chosen
            .into_iter()
            .enumerate()
            .map(|(e, d)| {
                d.ok_or_else(|| {
                    Error::InvalidSpecialDarts(format!(
                        "hyperedge containing dart {} has no special dart",
                        orb.hyperedges[e][0] + 1
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SpecialDarts { darts })
    }

    /// Non-special darts in increasing order.
    pub fn basis(&self, specials: &SpecialDarts) -> Vec<usize> {
        let special: HashSet<usize> = specials.darts.iter().copied().collect();
        (0..self.num_darts())
            .filter(|i| !special.contains(i))
            .collect()
    }

    /// Rewrites a dart vector in the basis `{[i] : i not special}` of
    /// `W / iota(E)` using `[s_e] = -sum_{i in e, i != s_e} [i]`.
    pub fn reduce_to_basis(
        &self,
        v: &[u64],
        specials: &SpecialDarts,
        modulus: Modulus,
    ) -> Result<Vec<u64>> {
        if v.len() != self.num_darts() {
            return Err(Error::DimensionMismatch {
                expected: self.num_darts(),
                found: v.len(),
            });
        }
        let orb = self.orbits();
        let mut w = v.to_vec();
        for (e, &s) in specials.darts.iter().enumerate() {
            let c = w[s];
            if c == 0 {
                continue;
            }
            for &i in &orb.hyperedges[e] {
                if i != s {
                    w[i] = modulus.sub(w[i], c);
                }
            }
            w[s] = 0;
        }
        Ok(self.basis(specials).into_iter().map(|i| w[i]).collect())
    }

    /// `Delta_1 [i] = d_1 i` and `Delta_2 = rho . d_2` in the non-special basis.
    pub fn delta_matrices(
        &self,
        specials: &SpecialDarts,
        modulus: Modulus,
    ) -> Result<HypermapChain> {
        let basis = self.basis(specials);
        let d1 = self.d1_matrix(modulus);
        let d2 = self.d2_matrix(modulus);
        let delta1 = ZModMatrix::from_fn(d1.rows(), basis.len(), modulus, |v, k| {
            d1.get(v, basis[k]) as i64
        });
        let columns = (0..d2.cols())
            .map(|f| self.reduce_to_basis(&d2.column(f), specials, modulus))
            .collect::<Result<Vec<_>>>()?;
        let delta2 =
            ZModMatrix::from_fn(basis.len(), d2.cols(), modulus, |k, f| columns[f][k] as i64);
        Ok(HypermapChain {
            delta1,
            delta2,
            basis,
        })
    }

    /// The 2-complex whose vertices are hypervertices, edges the non-special
    /// darts and faces the faces.
    ///
    /// Edge `i` runs from `v(i)` to `v(alpha^{-1}(i))`. A face walk follows
    /// its orbit and replaces every special dart `s` by the inverses of the
    /// other darts of its hyperedge, in the order `alpha(s), alpha^2(s), ..`.
    /// A face left with no edges gets a flagged degenerate walk.
    pub fn to_two_complex(&self, specials: &SpecialDarts) -> TwoComplex {
        let orb = self.orbits();
        let basis = self.basis(specials);
        let mut edge_index = vec![usize::MAX; self.num_darts()];
        for (k, &i) in basis.iter().enumerate() {
            edge_index[i] = k;
        }
        let alpha_inv = self.alpha.inverse();

        let vertices = (1..=orb.hypervertices.len())
            .map(|k| format!("v{k}"))
            .collect();
        let edges = basis
            .iter()
            .map(|&i| Edge {
                name: (i + 1).to_string(),
                source: orb.vertex_of[i],
                target: orb.vertex_of[alpha_inv.apply(i)],
            })
            .collect();
        let faces = orb
            .faces
            .iter()
            .enumerate()
            .map(|(k, face)| {
                let mut steps = Vec::new();
                for &i in face {
                    if edge_index[i] != usize::MAX {
                        steps.push(SignedEdge::plus(edge_index[i]));
                        continue;
                    }
                    let mut j = self.alpha.apply(i);
                    while j != i {
                        steps.push(SignedEdge::minus(edge_index[j]));
                        j = self.alpha.apply(j);
                    }
                }
                let name = format!("f{}", k + 1);
                if steps.is_empty() {
                    Face::degenerate(name)
                } else {
                    Face::new(name, ClosedWalk::new(steps))
                }
            })
            .collect();
        TwoComplex::new(vertices, edges, faces)
    }

    /// Builds both chains and compares them entrywise, edge `k` against the
    /// `k`-th non-special dart.
    pub fn verify_equivalence(
        &self,
        specials: &SpecialDarts,
        modulus: Modulus,
    ) -> Result<EquivalenceCertificate> {
        let chain = self.delta_matrices(specials, modulus)?;
        let complex = self.to_two_complex(specials);
        let complex_valid = complex.validate().is_empty();

        let d1 = self.d1_matrix(modulus);
        let chain_identities = d1.mul(&self.d2_matrix(modulus))?.is_zero()
            && d1.mul(&self.iota_matrix(modulus))?.is_zero()
            && chain.delta1.mul(&chain.delta2)?.is_zero();

        if !complex_valid {
            return Ok(EquivalenceCertificate {
                boundary1_matches: false,
                boundary2_matches: false,
                chain_identities,
                complex_valid,
                orientable_mod_d: false,
                orientable_over_integers: false,
            });
        }
        Ok(EquivalenceCertificate {
            boundary1_matches: complex.boundary1(modulus)? == chain.delta1,
            boundary2_matches: complex.boundary2(modulus)? == chain.delta2,
            chain_identities,
            complex_valid,
            orientable_mod_d: complex.is_orientable(modulus)?,
            orientable_over_integers: complex.is_orientable_over_integers()?,
        })
    }
}
