use std::collections::HashSet;

use num_bigint::BigUint;
use proptest::prelude::*;
use qudit_surface::random::{random_complex, ComplexLimits};
use qudit_surface::{ChainComplexData, Modulus, TwoComplex, ZModMatrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn all_vectors(d: u64, n: usize) -> Vec<Vec<u64>> {
    (0..d.pow(n as u32))
        .map(|mut k| {
            let mut v = vec![0; n];
            for slot in v.iter_mut().rev() {
                *slot = k % d;
                k /= d;
            }
            v
        })
        .collect()
}

/// `|ker d1| / |im d2|` by listing both sets.
fn brute_homology(chain: &ChainComplexData) -> BigUint {
    let d = chain.modulus().get();
    let cycles = all_vectors(d, chain.num_edges())
        .into_iter()
        .filter(|c| {
            chain
                .boundary1()
                .mul_vec(c)
                .unwrap()
                .iter()
                .all(|&x| x == 0)
        })
        .count();
    let boundaries: HashSet<Vec<u64>> = all_vectors(d, chain.num_faces())
        .into_iter()
        .map(|a| chain.boundary2().mul_vec(&a).unwrap())
        .collect();
    assert_eq!(
        cycles % boundaries.len(),
        0,
        "boundaries must sit inside cycles"
    );
    BigUint::from(cycles / boundaries.len())
}

fn small_complex(seed: u64, limits: ComplexLimits) -> TwoComplex {
    random_complex(&mut ChaCha8Rng::seed_from_u64(seed), limits)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn boundaries_compose_to_zero(seed in any::<u64>(), d in 2u64..=6) {
        let c = small_complex(seed, ComplexLimits::default());
        prop_assert!(c.validate().is_empty());
        let m = Modulus::new(d).unwrap();
        let product = c.boundary1(m).unwrap().mul(&c.boundary2(m).unwrap()).unwrap();
        prop_assert!(product.is_zero());
    }

    #[test]
    fn homology_matches_enumeration(seed in any::<u64>(), d in 2u64..=4) {
        let limits = ComplexLimits { max_vertices: 3, max_edges: 4, max_faces: 3, max_walk: 5 };
        let c = small_complex(seed, limits);
        let chain = c.chain_complex(Modulus::new(d).unwrap()).unwrap();
        let h = chain.homology_cardinality();
        prop_assert_eq!(&h, &brute_homology(&chain));
        prop_assert_eq!(chain.cycles_cardinality(), &h * chain.boundaries_cardinality());
    }

    #[test]
    fn inverse_walk_is_an_involution(seed in any::<u64>()) {
        let c = small_complex(seed, ComplexLimits::default());
        for f in c.faces() {
            prop_assert_eq!(&f.walk.inverse().inverse(), &f.walk);
            prop_assert_eq!(f.walk.inverse().len(), f.walk.len());
        }
    }

    #[test]
    fn walks_are_stored_in_minimal_rotation(seed in any::<u64>()) {
        let c = small_complex(seed, ComplexLimits::default());
        for f in c.faces() {
            let steps = f.walk.steps();
            for k in 0..steps.len() {
                let rotated: Vec<_> = steps[k..].iter().chain(&steps[..k]).copied().collect();
                prop_assert!(steps <= &rotated[..]);
            }
        }
    }
}

#[test]
fn torus_grids_have_d_squared_homology() {
    for rows in 1..=3 {
        for cols in 1..=3 {
            let grid = TwoComplex::torus_grid(rows, cols).unwrap();
            assert!(grid.validate().is_empty());
            assert!(grid.is_orientable_over_integers().unwrap());
            for d in 2..=5u64 {
                let m = Modulus::new(d).unwrap();
                let chain = grid.chain_complex(m).unwrap();
                assert_eq!(
                    chain.homology_cardinality(),
                    BigUint::from(d * d),
                    "{rows}x{cols} D={d}"
                );
                assert!(grid.is_orientable(m).unwrap());
            }
        }
    }
}

#[test]
fn homology_divides_full_chain_space() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let c = random_complex(&mut rng, ComplexLimits::default());
        for d in [2u64, 3, 4, 6] {
            let m = Modulus::new(d).unwrap();
            let h = c.chain_complex(m).unwrap().homology_cardinality();
            assert_eq!(m.power(c.edges().len()) % h, BigUint::from(0u32));
        }
    }
}

#[test]
fn chain_rejects_noncomposing_maps() {
    let m = Modulus::new(3).unwrap();
    let d1 = ZModMatrix::from_rows(m, 1, &[[1]]).unwrap();
    let d2 = ZModMatrix::from_rows(m, 1, &[[1]]).unwrap();
    assert!(ChainComplexData::new(d1, d2).is_err());
}
