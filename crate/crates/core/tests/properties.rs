//! Randomized properties under a fixed proptest seed.

mod common;

use homanti::algebra::{check_axioms, HomLieAntialgebra};
use homanti::catalog::{k1, twisted_k1};
use homanti::cochain::{CochainSignature, DegreeCochain};
use homanti::cohomology::CochainComplex;
use homanti::deformations::check_infinitesimal;
use homanti::extensions::{cochain_to_omega, extension_from_cocycle, omega_to_cochain};
use homanti::linalg::{modular_rank, nullspace_basis, rank, ORACLE_PRIMES};
use homanti::matrix::{vec_is_zero, vec_scale, Matrix};
use homanti::representation::{adjoint_representation, trivial_representation, HomModule, Representation};
use homanti::scalar::{format_rational, frac, int, parse_rational, Rational};
use homanti::tensor::Tensor3;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use common::*;

const SEED: [u8; 32] = *b"hom-lie antialgebra property run";

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::from_seed(RngAlgorithm::ChaCha, &SEED),
    )
}

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=5).prop_map(|(n, d)| frac(n, d))
}

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(rational(), r * c).prop_map(move |v| Matrix::from_vec(r, c, v).expect("size"))
    })
}

/// Mostly low-rank matrices: products of thin random factors.
fn low_rank_matrix() -> impl Strategy<Value = Matrix> {
    (matrix(5), 1..=3usize).prop_flat_map(|(a, k)| {
        let (rows, inner) = (a.rows(), k.min(a.cols()));
        proptest::collection::vec(rational(), inner * 4).prop_map(move |b| {
            let left = a.select(&(0..rows).collect::<Vec<_>>(), &(0..inner).collect::<Vec<_>>());
            left.mul(&Matrix::from_vec(inner, 4, b.clone()).expect("size")).expect("shapes")
        })
    })
}

#[test]
fn rank_is_invariant_under_row_permutation_and_transpose() {
    runner(64)
        .run(&(low_rank_matrix(), any::<u64>()), |(m, shift)| {
            let n = m.rows();
            let perm: Vec<usize> = (0..n).map(|i| (i + shift as usize) % n).rev().collect();
            let permuted = m.select(&perm, &(0..m.cols()).collect::<Vec<_>>());
            let r = rank(&m);
            prop_assert_eq!(rank(&permuted), r);
            prop_assert_eq!(rank(&m.transpose()), r);
            prop_assert_eq!(dual_rank(&m), r);
            Ok(())
        })
        .unwrap();
}

#[test]
fn rank_plus_nullity_is_column_count() {
    runner(64)
        .run(&low_rank_matrix(), |m| {
            let null = nullspace_basis(&m);
            prop_assert_eq!(rank(&m) + null.len(), m.cols());
            for v in &null {
                prop_assert!(vec_is_zero(&m.mul_vec(v).unwrap()));
            }
            Ok(())
        })
        .unwrap();
}

#[test]
fn modular_rank_never_exceeds_rational_rank() {
    runner(64)
        .run(&low_rank_matrix(), |m| {
            let r = rank(&m);
            for p in ORACLE_PRIMES {
                if let Some(mr) = modular_rank(&m, p) {
                    prop_assert!(mr <= r);
                }
            }
            Ok(())
        })
        .unwrap();
}

#[test]
fn rational_text_round_trips() {
    runner(128)
        .run(&(any::<i64>(), 1i64..=i64::MAX), |(n, d)| {
            let x = frac(n, d);
            prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
            Ok(())
        })
        .unwrap();
}

fn k1_adjoint() -> (HomLieAntialgebra, Representation) {
    let a = k1();
    let rho = adjoint_representation(&a).unwrap();
    (a, rho)
}

fn seeds() -> impl Strategy<Value = u64> {
    any::<u64>()
}

#[test]
fn coboundaries_are_cocycles() {
    let (a, rho) = k1_adjoint();
    let twisted = twisted_k1(&int(3)).unwrap();
    let trho = adjoint_representation(&twisted).unwrap();
    runner(16)
        .run(&(seeds(), 1..=2usize), |(seed, k)| {
            let mut r = rng(seed);
            for c in [CochainComplex::new(&a, &rho).unwrap(), CochainComplex::new(&twisted, &trho).unwrap()] {
                let g = random_admissible(&c, k, &mut r);
                let dg = c.apply(&g).unwrap();
                prop_assert!(dg.parts().iter().all(|p| c.is_admissible(p)));
                prop_assert!(c.apply(&dg).unwrap().is_zero());
            }
            Ok(())
        })
        .unwrap();
}

#[test]
fn odd_arguments_are_alternating() {
    let (a, rho) = k1_adjoint();
    let c = CochainComplex::new(&a, &rho).unwrap();
    runner(32)
        .run(&seeds(), |seed| {
            let mut r = rng(seed);
            let f = DegreeCochain::unflatten(2, &c.shapes(2), &random_vec(&mut r, c.raw_dim(2))).unwrap();
            let f02 = f.part(CochainSignature::new(0, 2)).unwrap();
            let (y1, y2) = (random_vec(&mut r, 2), random_vec(&mut r, 2));
            let forward = eval_on(f02, &[], &[y1.clone(), y2.clone()]);
            let backward = eval_on(f02, &[], &[y2, y1.clone()]);
            prop_assert_eq!(forward, vec_scale(&backward, &int(-1)));
            prop_assert!(vec_is_zero(&eval_on(f02, &[], &[y1.clone(), y1])));
            Ok(())
        })
        .unwrap();
}

#[test]
fn adapter_round_trips() {
    let (a, rho) = k1_adjoint();
    let c = CochainComplex::new(&a, &rho).unwrap();
    runner(32)
        .run(&seeds(), |seed| {
            let mut r = rng(seed);
            let f = random_admissible(&c, 2, &mut r);
            let omega = cochain_to_omega(&c, &f).unwrap();
            prop_assert_eq!(omega_to_cochain(&c, &omega).unwrap(), f);
            Ok(())
        })
        .unwrap();
}

/// ε·ε = ε with two odd directions and no other products.
fn idempotent_base() -> HomLieAntialgebra {
    let mut mu = Tensor3::zeros(1, 1, 1);
    mu.set(0, 0, 0, int(1));
    HomLieAntialgebra::new(
        1,
        2,
        mu,
        Tensor3::zeros(1, 2, 2),
        Tensor3::zeros(2, 2, 1),
        Matrix::identity(1),
        Matrix::identity(2),
    )
    .unwrap()
}

#[test]
fn extension_is_an_algebra_iff_omega_is_closed() {
    let (a, rho) = k1_adjoint();
    let base = idempotent_base();
    let trivial = trivial_representation(&base, HomModule::identity(1, 1));
    let seen = std::cell::Cell::new([0usize; 2]);
    runner(24)
        .run(&(seeds(), any::<bool>()), |(seed, closed)| {
            let mut r = rng(seed);
            for (alg, rep) in [(&a, &rho), (&base, &trivial)] {
                let c = CochainComplex::new(alg, rep).unwrap();
                let f = if closed {
                    let s = c.slice(2).unwrap();
                    let kernel = homanti::linalg::Subspace::kernel_of(&s.matrix);
                    let flat = s.source.combine(&kernel.combine(&random_vec(&mut r, kernel.dim())));
                    DegreeCochain::unflatten(2, &c.shapes(2), &flat).unwrap()
                } else {
                    random_admissible(&c, 2, &mut r)
                };
                let omega = cochain_to_omega(&c, &f).unwrap();
                let is_closed = c.is_cocycle(&f).unwrap();
                let big = extension_from_cocycle(alg, rep, &omega).unwrap();
                prop_assert_eq!(check_axioms(&big).passed(), is_closed);
                let mut counts = seen.get();
                counts[is_closed as usize] += 1;
                seen.set(counts);
            }
            Ok(())
        })
        .unwrap();
    let counts = seen.get();
    assert!(counts[0] > 0 && counts[1] > 0, "both outcomes must occur: {counts:?}");
}

#[test]
fn infinitesimal_conditions_match_sampled_deformations() {
    let (a, rho) = k1_adjoint();
    let c = CochainComplex::new(&a, &rho).unwrap();
    runner(24)
        .run(&seeds(), |seed| {
            let mut r = rng(seed);
            let f = random_admissible(&c, 2, &mut r);
            let omega = cochain_to_omega(&c, &f).unwrap();
            let report = check_infinitesimal(&a, &omega).unwrap();
            prop_assert!(report.consistent());
            prop_assert_eq!(report.condition_ii.passed(), c.is_cocycle(&f).unwrap());
            Ok(())
        })
        .unwrap();
}
