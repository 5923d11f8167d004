//! Code distance by two independent routes, plus normalizer and logical
//! operator predicates.
//!
//! The symplectic route searches `r(B)^perp \ r(A)` and `r(A)^perp \ r(B)`
//! using orthogonal complements. The homological route searches
//! `ker d_1 \ im d_2` and `ker delta_2 \ im delta_1` by applying the boundary
//! maps directly. Both walk weight shells in the same order, so on agreement
//! they also return the same witness.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::complex2::{ChainComplexData, TwoComplex};
use crate::error::{Error, Result};
use crate::pauli::{PauliProduct, StabilizerSpec};
use crate::zmod::{Modulus, SubmoduleSpan};

/// Candidate budget used when none is given.
pub const DEFAULT_DISTANCE_BUDGET: u64 = 10_000_000;

/// Which half of the CSS code a witness lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// A cycle `c in ker d_1 \ im d_2`, acting as a Z-type logical.
    Cycle,
    /// A cocycle `c in ker delta_2 \ im delta_1`, acting as an X-type logical.
    Cocycle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Css,
    Homological,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    Value(usize),
    /// Every normalizer element is a stabilizer up to phase.
    NoLogicals,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub side: Side,
    pub vector: Vec<u64>,
}

impl Witness {
    pub fn weight(&self) -> usize {
        self.vector.iter().filter(|&&v| v != 0).count()
    }

    /// The pure-type Pauli operator the witness stands for.
    pub fn to_pauli(&self, modulus: Modulus) -> PauliProduct {
        match self.side {
            Side::Cycle => PauliProduct::z_type(modulus, self.vector.clone()),
            Side::Cocycle => PauliProduct::x_type(modulus, self.vector.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    pub distance: Distance,
    pub witness: Option<Witness>,
    pub method: Method,
    /// Candidates examined by the shell search.
    pub examined: u64,
}

/// Zero syndrome against every generator.
pub fn normalizer_by_syndrome(p: &PauliProduct, spec: &StabilizerSpec) -> Result<bool> {
    Ok(spec.syndrome(p)?.iter().all(|&b| b == 0))
}

/// `x in r(B)^perp` and `z in r(A)^perp`.
pub fn normalizer_by_submodules(p: &PauliProduct, spec: &StabilizerSpec) -> Result<bool> {
    check_shape(p, spec)?;
    Ok(spec.face_span().orthogonal_complement().contains(p.x())?
        && spec.vertex_span().orthogonal_complement().contains(p.z())?)
}

fn check_shape(p: &PauliProduct, spec: &StabilizerSpec) -> Result<()> {
    if p.modulus() != spec.modulus() {
        return Err(Error::ModulusMismatch(
            spec.modulus().get(),
            p.modulus().get(),
        ));
    }
    if p.num_qudits() != spec.num_qudits() {
        return Err(Error::DimensionMismatch {
            expected: spec.num_qudits(),
            found: p.num_qudits(),
        });
    }
    Ok(())
}

/// Membership in `N(S) = C(S)`, decided by both characterizations.
///
/// # Panics
///
/// If the two characterizations disagree.
pub fn is_in_normalizer(p: &PauliProduct, spec: &StabilizerSpec) -> Result<bool> {
    let by_syndrome = normalizer_by_syndrome(p, spec)?;
    let by_submodules = normalizer_by_submodules(p, spec)?;
    assert_eq!(
        by_syndrome, by_submodules,
        "normalizer characterizations disagree on {p:?}"
    );
    Ok(by_syndrome)
}

/// `x in r(A)` and `z in r(B)`, i.e. `p` lies in `<wI> S`.
pub fn is_stabilizer_up_to_phase(p: &PauliProduct, spec: &StabilizerSpec) -> Result<bool> {
    check_shape(p, spec)?;
    Ok(spec.vertex_span().contains(p.x())? && spec.face_span().contains(p.z())?)
}

/// In the normalizer but not a stabilizer up to phase.
pub fn is_logical(p: &PauliProduct, spec: &StabilizerSpec) -> Result<bool> {
    Ok(is_in_normalizer(p, spec)? && !is_stabilizer_up_to_phase(p, spec)?)
}

/// Calls `visit` on every vector of Hamming weight `w` in `Z_D^n`: supports
/// in lexicographic order, and for each support the nonzero values in
/// odometer order (last position fastest). Stops early when `visit` returns
/// `true`, and reports whether it did.
pub fn for_each_in_shell(
    n: usize,
    w: usize,
    modulus: Modulus,
    mut visit: impl FnMut(&[u64]) -> Result<bool>,
) -> Result<bool> {
    if w > n {
        return Ok(false);
    }
    let d = modulus.get();
    let mut support: Vec<usize> = (0..w).collect();
    let mut v = vec![0u64; n];
    loop {
        let mut values = vec![1u64; w];
        loop {
            for (k, &pos) in support.iter().enumerate() {
                v[pos] = values[k];
            }
            if visit(&v)? {
                return Ok(true);
            }
            // odometer over (Z_D \ {0})^w
            let mut k = w;
            let mut wrapped = true;
            while k > 0 {
                k -= 1;
                if values[k] + 1 < d {
                    values[k] += 1;
                    wrapped = false;
                    break;
                }
                values[k] = 1;
            }
            if wrapped {
                break;
            }
        }
        for &pos in &support {
            v[pos] = 0;
        }
        // next support in lexicographic order
        let mut i = w;
        let advanced = loop {
            if i == 0 {
                break false;
            }
            i -= 1;
            if support[i] < n - w + i {
                support[i] += 1;
                for j in i + 1..w {
                    support[j] = support[j - 1] + 1;
                }
                break true;
            }
        };
        if !advanced {
            return Ok(false);
        }
    }
}

fn shell_search(
    n: usize,
    modulus: Modulus,
    budget: u64,
    method: Method,
    mut is_cycle: impl FnMut(&[u64]) -> Result<bool>,
    mut is_cocycle: impl FnMut(&[u64]) -> Result<bool>,
) -> Result<DistanceReport> {
    let mut examined = 0u64;
    for w in 1..=n {
        for side in [Side::Cycle, Side::Cocycle] {
            let mut found = None;
            for_each_in_shell(n, w, modulus, |v| {
                examined += 1;
                if examined > budget {
                    return Err(Error::BudgetExceeded(budget));
                }
                let hit = match side {
                    Side::Cycle => is_cycle(v)?,
                    Side::Cocycle => is_cocycle(v)?,
                };
                if hit {
                    found = Some(v.to_vec());
                }
                Ok(hit)
            })?;
            if let Some(vector) = found {
                return Ok(DistanceReport {
                    distance: Distance::Value(w),
                    witness: Some(Witness { side, vector }),
                    method,
                    examined,
                });
            }
        }
    }
    unreachable!("a code with K > 1 has a logical of weight at most n")
}

fn no_logicals(method: Method) -> DistanceReport {
    DistanceReport {
        distance: Distance::NoLogicals,
        witness: None,
        method,
        examined: 0,
    }
}

/// Minimum Hamming weight over `W = r(B)^perp \ r(A)  U  r(A)^perp \ r(B)`.
pub fn distance_css(spec: &StabilizerSpec, budget: u64) -> Result<DistanceReport> {
    if spec.code_dimension()? == BigUint::one() {
        return Ok(no_logicals(Method::Css));
    }
    let faces = spec.face_span();
    let vertices = spec.vertex_span();
    let faces_perp = faces.orthogonal_complement();
    let vertices_perp = vertices.orthogonal_complement();
    shell_search(
        spec.num_qudits(),
        spec.modulus(),
        budget,
        Method::Css,
        |z| Ok(vertices_perp.contains(z)? && !faces.contains(z)?),
        |x| Ok(faces_perp.contains(x)? && !vertices.contains(x)?),
    )
}

/// Shortest nontrivial cycle or cocycle of the chain complex.
pub fn distance_homological_chain(chain: &ChainComplexData, budget: u64) -> Result<DistanceReport> {
    if chain.homology_cardinality() == BigUint::one() {
        return Ok(no_logicals(Method::Homological));
    }
    let d1 = chain.boundary1();
    let delta2 = chain.coboundary2();
    let boundaries = SubmoduleSpan::new(chain.coboundary2());
    let coboundaries = SubmoduleSpan::new(chain.boundary1().clone());
    let is_zero = |v: Vec<u64>| v.iter().all(|&e| e == 0);
    shell_search(
        chain.num_edges(),
        chain.modulus(),
        budget,
        Method::Homological,
        |c| Ok(is_zero(d1.mul_vec(c)?) && !boundaries.contains(c)?),
        |c| Ok(is_zero(delta2.mul_vec(c)?) && !coboundaries.contains(c)?),
    )
}

pub fn distance_homological(
    complex: &TwoComplex,
    modulus: Modulus,
    budget: u64,
) -> Result<DistanceReport> {
    distance_homological_chain(&complex.chain_complex(modulus)?, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(d: u64) -> Modulus {
        Modulus::new(d).unwrap()
    }

    fn spec_of(c: &TwoComplex, d: u64) -> StabilizerSpec {
        StabilizerSpec::from_chain(&c.chain_complex(m(d)).unwrap())
    }

    #[test]
    fn shell_enumeration_counts() {
        // C(n, w) (D-1)^w vectors per shell.
        for (n, w, d, expected) in [
            (4, 2, 3, 24),
            (3, 0, 5, 1),
            (3, 3, 2, 1),
            (5, 1, 4, 15),
            (2, 3, 3, 0),
        ] {
            let mut count = 0;
            let mut prev: Option<Vec<u64>> = None;
            for_each_in_shell(n, w, m(d), |v| {
                assert_eq!(v.iter().filter(|&&e| e != 0).count(), w);
                assert_ne!(prev.as_deref(), Some(v));
                prev = Some(v.to_vec());
                count += 1;
                Ok(false)
            })
            .unwrap();
            assert_eq!(count, expected, "n={n} w={w} d={d}");
        }
    }

    #[test]
    fn shell_order_is_support_then_values() {
        let mut seen = Vec::new();
        for_each_in_shell(3, 1, m(3), |v| {
            seen.push(v.to_vec());
            Ok(false)
        })
        .unwrap();
        assert_eq!(
            seen,
            vec![
                vec![1, 0, 0],
                vec![2, 0, 0],
                vec![0, 1, 0],
                vec![0, 2, 0],
                vec![0, 0, 1],
                vec![0, 0, 2]
            ]
        );
    }

    #[test]
    fn normalizer_examples() {
        let grid = spec_of(&TwoComplex::torus_grid(2, 2).unwrap(), 2);
        for g in grid.generators() {
            assert!(is_in_normalizer(&g, &grid).unwrap());
        }
        let mut x = vec![0; 8];
        x[0] = 1;
        assert!(!is_in_normalizer(&PauliProduct::x_type(m(2), x), &grid).unwrap());

        let torus = spec_of(&TwoComplex::torus(), 2);
        let x1 = PauliProduct::x_type(m(2), vec![1, 0]);
        assert!(is_in_normalizer(&x1, &torus).unwrap());
    }

    #[test]
    fn logical_examples() {
        let torus = spec_of(&TwoComplex::torus(), 3);
        assert!(!is_logical(&PauliProduct::identity(m(3), 2), &torus).unwrap());
        assert!(is_logical(&PauliProduct::x_type(m(3), vec![1, 0]), &torus).unwrap());

        let rp2 = spec_of(&TwoComplex::rp2(), 3);
        for x in 0..3 {
            for z in 0..3 {
                let p = PauliProduct::new(m(3), 0, &[x], &[z]).unwrap();
                assert!(!is_logical(&p, &rp2).unwrap());
            }
        }
    }

    #[test]
    fn distance_examples() {
        for d in 2..=5 {
            let torus = TwoComplex::torus();
            let css = distance_css(&spec_of(&torus, d), DEFAULT_DISTANCE_BUDGET).unwrap();
            assert_eq!(css.distance, Distance::Value(1));
            let hom = distance_homological(&torus, m(d), DEFAULT_DISTANCE_BUDGET).unwrap();
            assert_eq!(hom.distance, Distance::Value(1));
        }
        let rp2 = TwoComplex::rp2();
        let css = distance_css(&spec_of(&rp2, 2), DEFAULT_DISTANCE_BUDGET).unwrap();
        assert_eq!(css.distance, Distance::Value(1));
        assert_eq!(
            distance_homological(&rp2, m(2), 100).unwrap().distance,
            Distance::Value(1)
        );
        assert_eq!(
            distance_css(&spec_of(&rp2, 3), 100).unwrap().distance,
            Distance::NoLogicals
        );
        assert_eq!(
            distance_homological(&rp2, m(3), 100).unwrap().distance,
            Distance::NoLogicals
        );

        let grid = TwoComplex::torus_grid(2, 2).unwrap();
        let css = distance_css(&spec_of(&grid, 2), DEFAULT_DISTANCE_BUDGET).unwrap();
        let hom = distance_homological(&grid, m(2), DEFAULT_DISTANCE_BUDGET).unwrap();
        assert_eq!(css.distance, Distance::Value(2));
        assert_eq!(hom.distance, Distance::Value(2));
        assert_eq!(css.witness, hom.witness);
    }

    #[test]
    fn witness_is_logical_with_reported_weight() {
        let grid = TwoComplex::torus_grid(2, 3).unwrap();
        let spec = spec_of(&grid, 3);
        let report = distance_css(&spec, DEFAULT_DISTANCE_BUDGET).unwrap();
        let w = report.witness.unwrap();
        assert_eq!(report.distance, Distance::Value(w.weight()));
        assert!(is_logical(&w.to_pauli(m(3)), &spec).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let grid = TwoComplex::torus_grid(2, 2).unwrap();
        assert!(matches!(
            distance_css(&spec_of(&grid, 2), 5),
            Err(Error::BudgetExceeded(5))
        ));
    }
}
