use num_bigint::BigUint;
use proptest::prelude::*;
use qudit_surface::oracle::{dense_pauli, roots_of_unity, DEFAULT_DENSE_CAP, TOLERANCE};
use qudit_surface::pauli::DEFAULT_ENUMERATION_CAP;
use qudit_surface::random::{random_complex, ComplexLimits};
use qudit_surface::{Modulus, PauliProduct, StabilizerSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pauli_case(max_d: u64, max_n: usize) -> impl Strategy<Value = (u64, usize, u64)> {
    (2u64..=max_d, 1usize..=max_n, any::<u64>())
}

fn random_pauli(rng: &mut impl Rng, m: Modulus, n: usize) -> PauliProduct {
    let d = m.get();
    let mut draw = || (0..n).map(|_| rng.gen_range(0..d)).collect::<Vec<_>>();
    let (x, z) = (draw(), draw());
    PauliProduct::from_residues(m, rng.gen_range(0..d), x, z).unwrap()
}

fn spec_for(seed: u64, d: u64) -> StabilizerSpec {
    let c = random_complex(
        &mut ChaCha8Rng::seed_from_u64(seed),
        ComplexLimits::default(),
    );
    StabilizerSpec::from_chain(&c.chain_complex(Modulus::new(d).unwrap()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn multiplication_is_associative((d, n, seed) in pauli_case(6, 5)) {
        let m = Modulus::new(d).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (p, q, r) = (random_pauli(&mut rng, m, n), random_pauli(&mut rng, m, n), random_pauli(&mut rng, m, n));
        let left = p.mul(&q).unwrap().mul(&r).unwrap();
        let right = p.mul(&q.mul(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let one = PauliProduct::identity(m, n);
        prop_assert_eq!(p.mul(&one).unwrap(), p.clone());
        prop_assert_eq!(one.mul(&p).unwrap(), p.clone());
        prop_assert!(p.mul(&p.inverse()).unwrap().is_identity());
    }

    #[test]
    fn dth_power_has_no_x_or_z((d, n, seed) in pauli_case(6, 5)) {
        let m = Modulus::new(d).unwrap();
        let p = random_pauli(&mut ChaCha8Rng::seed_from_u64(seed), m, n);
        let q = p.pow(d);
        prop_assert!(q.x().iter().chain(q.z()).all(|&v| v == 0));
    }

    #[test]
    fn commutation_phase_is_antisymmetric((d, n, seed) in pauli_case(6, 5)) {
        let m = Modulus::new(d).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (p, q) = (random_pauli(&mut rng, m, n), random_pauli(&mut rng, m, n));
        let beta = p.commutation_phase(&q).unwrap();
        prop_assert_eq!((beta + q.commutation_phase(&p).unwrap()) % d, 0);
        prop_assert_eq!(p.commutation_phase(&p).unwrap(), 0);
        // P Q = w^beta Q P at the level of phases.
        let pq = p.mul(&q).unwrap();
        let qp = q.mul(&p).unwrap();
        prop_assert_eq!(pq.x(), qp.x());
        prop_assert_eq!(pq.z(), qp.z());
        prop_assert_eq!(pq.phase(), (qp.phase() + beta) % d);
    }

    #[test]
    fn faces_commute_with_vertices(seed in any::<u64>(), d in 2u64..=6) {
        let spec = spec_for(seed, d);
        for f in 0..spec.num_faces() {
            let bf = spec.face_operator(f).unwrap();
            for v in 0..spec.num_vertices() {
                prop_assert_eq!(bf.commutation_phase(&spec.vertex_operator(v).unwrap()).unwrap(), 0);
            }
        }
        prop_assert!(spec.first_noncommuting_pair().is_none());
    }

    #[test]
    fn code_dimension_equals_homology(seed in any::<u64>(), d in 2u64..=6) {
        let c = random_complex(&mut ChaCha8Rng::seed_from_u64(seed), ComplexLimits::default());
        let m = Modulus::new(d).unwrap();
        let chain = c.chain_complex(m).unwrap();
        let spec = StabilizerSpec::from_chain(&chain);
        let k = spec.code_dimension().unwrap();
        prop_assert_eq!(&k, &chain.homology_cardinality());
        prop_assert_eq!(&k * spec.stabilizer_cardinality().unwrap(), m.power(spec.num_qudits()));
    }

    #[test]
    fn enumeration_matches_span_product(seed in any::<u64>(), d in prop::sample::select(vec![2u64, 3, 4, 6])) {
        let spec = spec_for(seed, d);
        let group = spec.enumerate_group(DEFAULT_ENUMERATION_CAP).unwrap();
        prop_assert!(group.scalar_violation.is_none());
        let expected = spec.face_span().cardinality() * spec.vertex_span().cardinality();
        prop_assert_eq!(BigUint::from(group.size), expected);
    }

    #[test]
    fn syndromes_are_coset_invariants(seed in any::<u64>(), d in 2u64..=6) {
        let spec = spec_for(seed, d);
        let m = spec.modulus();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let e = random_pauli(&mut rng, m, spec.num_qudits());
        let base = spec.syndrome(&e).unwrap();
        let generators = spec.generators();
        let mut s = PauliProduct::identity(m, spec.num_qudits());
        for _ in 0..6 {
            if generators.is_empty() {
                break;
            }
            let g = &generators[rng.gen_range(0..generators.len())];
            s = s.mul(&g.pow(rng.gen_range(0..d))).unwrap();
        }
        prop_assert_eq!(spec.syndrome(&e.mul(&s).unwrap()).unwrap(), base.clone());
        // A global phase changes nothing either.
        let phased = e.mul(&PauliProduct::from_residues(m, 1, vec![0; spec.num_qudits()], vec![0; spec.num_qudits()]).unwrap()).unwrap();
        prop_assert_eq!(spec.syndrome(&phased).unwrap(), base);
    }

    #[test]
    fn dense_representation_is_a_homomorphism((d, n, seed) in pauli_case(4, 3)) {
        let m = Modulus::new(d).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (p, q) = (random_pauli(&mut rng, m, n), random_pauli(&mut rng, m, n));
        let dp = dense_pauli(&p, DEFAULT_DENSE_CAP).unwrap();
        let dq = dense_pauli(&q, DEFAULT_DENSE_CAP).unwrap();
        let product = dense_pauli(&p.mul(&q).unwrap(), DEFAULT_DENSE_CAP).unwrap();
        prop_assert!(product.max_abs_diff(&dp.mul(&dq)) < TOLERANCE);

        let beta = p.commutation_phase(&q).unwrap() as usize;
        let omega = roots_of_unity(m)[beta];
        prop_assert!(dp.mul(&dq).max_abs_diff(&dq.mul(&dp).scale(omega)) < TOLERANCE);
    }
}

#[test]
fn scalar_generator_is_detected_by_enumeration() {
    let m = Modulus::new(4).unwrap();
    let x = PauliProduct::x_type(m, vec![1]);
    let z = PauliProduct::z_type(m, vec![1]);
    let group =
        qudit_surface::pauli::enumerate_group(m, 1, &[x, z], DEFAULT_ENUMERATION_CAP).unwrap();
    let scalar = group.scalar_violation.expect("X and Z generate w I");
    assert!(scalar.is_scalar() && scalar.phase() != 0);
    assert_eq!(group.size, 64);
}
