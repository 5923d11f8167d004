use proptest::prelude::*;
use qudit_surface::distance::{
    distance_css, distance_homological, is_logical, is_stabilizer_up_to_phase,
    normalizer_by_submodules, normalizer_by_syndrome, DEFAULT_DISTANCE_BUDGET,
};
use qudit_surface::random::{random_complex, ComplexLimits};
use qudit_surface::{Distance, Modulus, PauliProduct, StabilizerSpec, TwoComplex};
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

fn weight(v: &[u64]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

fn corpus_complex(seed: u64) -> TwoComplex {
    random_complex(
        &mut ChaCha8Rng::seed_from_u64(seed),
        ComplexLimits::default(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn routes_agree_and_witnesses_are_logical(seed in any::<u64>(), d in prop::sample::select(vec![2u64, 3, 4, 6])) {
        let c = corpus_complex(seed);
        let m = Modulus::new(d).unwrap();
        let spec = StabilizerSpec::from_chain(&c.chain_complex(m).unwrap());
        let css = distance_css(&spec, DEFAULT_DISTANCE_BUDGET).unwrap();
        let hom = distance_homological(&c, m, DEFAULT_DISTANCE_BUDGET).unwrap();
        prop_assert_eq!(css.distance, hom.distance);
        prop_assert_eq!(&css.witness, &hom.witness);
        if let (Distance::Value(w), Some(witness)) = (css.distance, &css.witness) {
            prop_assert_eq!(witness.weight(), w);
            prop_assert!(is_logical(&witness.to_pauli(m), &spec).unwrap());
        } else {
            prop_assert!(css.witness.is_none());
        }
    }

    #[test]
    fn nothing_lighter_than_the_distance_is_logical(seed in any::<u64>(), d in 2u64..=3) {
        let limits = ComplexLimits { max_vertices: 3, max_edges: 4, max_faces: 3, max_walk: 5 };
        let c = random_complex(&mut ChaCha8Rng::seed_from_u64(seed), limits);
        let m = Modulus::new(d).unwrap();
        let spec = StabilizerSpec::from_chain(&c.chain_complex(m).unwrap());
        let report = distance_css(&spec, DEFAULT_DISTANCE_BUDGET).unwrap();
        let bound = match report.distance {
            Distance::Value(w) => w,
            Distance::NoLogicals => usize::MAX,
        };
        let n = spec.num_qudits();
        for v in all_vectors(d, n).into_iter().filter(|v| weight(v) < bound && weight(v) > 0) {
            prop_assert!(!is_logical(&PauliProduct::x_type(m, v.clone()), &spec).unwrap());
            prop_assert!(!is_logical(&PauliProduct::z_type(m, v), &spec).unwrap());
        }
    }
}

/// Both normalizer characterizations agree on every `(x, z)` pair.
#[test]
fn normalizer_equals_centralizer_exhaustively() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let limits = ComplexLimits {
        max_vertices: 3,
        max_edges: 3,
        max_faces: 3,
        max_walk: 4,
    };
    let mut complexes = vec![TwoComplex::rp2(), TwoComplex::torus()];
    complexes.extend((0..20).map(|_| random_complex(&mut rng, limits)));
    for c in &complexes {
        for d in 2..=3u64 {
            let m = Modulus::new(d).unwrap();
            let spec = StabilizerSpec::from_chain(&c.chain_complex(m).unwrap());
            let n = spec.num_qudits();
            for x in all_vectors(d, n) {
                for z in all_vectors(d, n) {
                    let p = PauliProduct::from_residues(m, 0, x.clone(), z).unwrap();
                    assert_eq!(
                        normalizer_by_syndrome(&p, &spec).unwrap(),
                        normalizer_by_submodules(&p, &spec).unwrap()
                    );
                }
            }
        }
    }
}

/// Two errors with equal syndromes that differ by less than the distance
/// differ by a stabilizer.
#[test]
fn matching_syndromes_below_distance_differ_by_stabilizer() {
    let cases = [
        (TwoComplex::torus_grid(2, 2).unwrap(), 2u64),
        (TwoComplex::torus_grid(1, 2).unwrap(), 3),
        (TwoComplex::rp2(), 2),
    ];
    for (c, d) in cases {
        let m = Modulus::new(d).unwrap();
        let spec = StabilizerSpec::from_chain(&c.chain_complex(m).unwrap());
        let n = spec.num_qudits();
        let Distance::Value(dist) = distance_css(&spec, DEFAULT_DISTANCE_BUDGET)
            .unwrap()
            .distance
        else {
            panic!("expected logicals");
        };
        for x in all_vectors(d, n) {
            for z in all_vectors(d, n) {
                let diff = PauliProduct::from_residues(m, 0, x.clone(), z).unwrap();
                if diff.weight() < dist && normalizer_by_syndrome(&diff, &spec).unwrap() {
                    assert!(is_stabilizer_up_to_phase(&diff, &spec).unwrap());
                }
            }
        }
    }
}

#[test]
fn grid_distances_grow_with_the_grid() {
    let m = Modulus::new(2).unwrap();
    for (k, expected) in [(2usize, 2usize), (3, 3)] {
        let c = TwoComplex::torus_grid(k, k).unwrap();
        let report = distance_homological(&c, m, DEFAULT_DISTANCE_BUDGET).unwrap();
        assert_eq!(report.distance, Distance::Value(expected));
    }
}
