mod common;

use bianchi_core::engine::{
    estrella_predicted_dim, f123, lemma_dificil_solve, lemma_estrella_solve, sn_recursion_check, FractionFree,
};
use bianchi_core::{KMode, Rational};
use common::{in_span, poly, q};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn estrella_family_contains_powers_of_f123() {
    for k in KMode::default_samples() {
        for m in 1..=3u32 {
            let a = (&k - &Rational::one()).checked_div(&Rational::from(2)).unwrap();
            let a = &a * &Rational::from(m as i64);
            let sol = lemma_estrella_solve(&[a.clone(), a.clone(), a.clone()], &k, 2 * m, &FractionFree);
            assert!(in_span(&f123().pow(m), &sol.basis), "k={k} m={m}");
            assert_eq!(sol.dim, estrella_predicted_dim(&[a.clone(), a.clone(), a], &k, 2 * m));
        }
    }
}

#[test]
fn estrella_equal_weights_dimension() {
    // a = -1/4, k = 1/2: solutions are forms in x4 - x5, x4 - x6 times F123.
    let a = [q("-1/4"), q("-1/4"), q("-1/4")];
    for m in 0..=5 {
        let sol = lemma_estrella_solve(&a, &q("1/2"), m, &FractionFree);
        let expected = if m >= 2 { m as usize - 1 } else { 0 };
        assert_eq!(sol.dim, expected, "m={m}");
        if m >= 2 {
            let family: Vec<_> = (0..=m - 2)
                .map(|i| &(&poly("x4 - x5").pow(i) * &poly("x4 - x6").pow(m - 2 - i)) * &f123())
                .collect();
            assert!(sol.basis.iter().all(|g| in_span(g, &family)));
        }
    }
}

#[test]
fn estrella_non_natural_exponent_has_no_solutions() {
    let a = [q("-1/8"), q("-1/8"), q("-1/8")];
    for m in 0..=4 {
        assert_eq!(lemma_estrella_solve(&a, &q("1/2"), m, &FractionFree).dim, 0);
    }
}

#[test]
fn estrella_two_equal_weights() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let a1 = Rational::frac(rng.gen_range(-6..=6), 4);
        let mut a2 = Rational::frac(rng.gen_range(-6..=6), 4);
        if a2 == a1 {
            a2 = &a2 + &Rational::one();
        }
        for m in 0..=4 {
            let sol = lemma_estrella_solve(&[a1.clone(), a2.clone(), a1.clone()], &q("1/2"), m, &FractionFree);
            assert_eq!(sol.dim, 0, "a1=a3={a1}, a2={a2}, m={m}");
        }
    }
}

#[test]
fn dificil_up_to_six() {
    for k in KMode::default_samples() {
        for n in 2..=6 {
            let sol = lemma_dificil_solve(&k, n, &FractionFree).unwrap();
            assert_eq!(sol.dim, 1);
            assert!(sol.only_pure_power);
            assert!(sol.g_basis[0].is_zero());
            assert!(in_span(&poly("x4 - x6").pow(n), &sol.h_basis));
        }
    }
}

#[test]
fn sn_identities() {
    for n in 2..=7 {
        let c = sn_recursion_check(n).unwrap();
        assert!(c.recursion_holds && c.antidiagonal_holds, "n={n}");
    }
    assert!(sn_recursion_check(1).is_err());
}
