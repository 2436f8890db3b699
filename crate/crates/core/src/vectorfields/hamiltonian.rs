//! The state map between canonical coordinates `(q, p)` and the polynomial
//! coordinates `x`: `x_i = q_i`, `x_{i+3} = 2 p_i q_i`.
//!
//! Only the state map is provided; the accompanying time reparameterization
//! does not affect which functions are first integrals.

use crate::coefficients::Rational;
use crate::error::{Error, Result};

pub fn to_polynomial_coordinates(q: &[Rational; 3], p: &[Rational; 3]) -> [Rational; 6] {
    let two = Rational::from(2);
    [
        q[0].clone(),
        q[1].clone(),
        q[2].clone(),
        &(&two * &p[0]) * &q[0],
        &(&two * &p[1]) * &q[1],
        &(&two * &p[2]) * &q[2],
    ]
}

/// Inverse map; undefined where some `q_i = x_i` vanishes.
pub fn to_canonical_coordinates(x: &[Rational; 6]) -> Result<([Rational; 3], [Rational; 3])> {
    let two = Rational::from(2);
    let mut p: [Rational; 3] = Default::default();
    for i in 0..3 {
        let denom = &two * &x[i];
        p[i] = x[i + 3]
            .checked_div(&denom)
            .map_err(|_| Error::Domain(format!("q{} = 0 has no canonical momentum", i + 1)))?;
    }
    Ok(([x[0].clone(), x[1].clone(), x[2].clone()], p))
}

/// Floating-point version of the forward map.
pub fn to_polynomial_coordinates_f64(q: [f64; 3], p: [f64; 3]) -> [f64; 6] {
    [q[0], q[1], q[2], 2.0 * p[0] * q[0], 2.0 * p[1] * q[1], 2.0 * p[2] * q[2]]
}

/// `H = (q1 q2 q3)^{(k-1)/2} (T + V/4)` with
/// `T = 2 sum_{i<j} p_i p_j q_i q_j - sum p_i^2 q_i^2` and
/// `V = 2 sum_{i<j} n_i n_j q_i q_j - sum n_i^2 q_i^2`.
pub fn canonical_hamiltonian(n: [i64; 3], k: f64, q: [f64; 3], p: [f64; 3]) -> f64 {
    let mut kinetic = 0.0;
    let mut potential = 0.0;
    for i in 0..3 {
        let ni = n[i] as f64;
        kinetic -= (p[i] * q[i]).powi(2);
        potential -= (ni * q[i]).powi(2);
        for j in (i + 1)..3 {
            let nj = n[j] as f64;
            kinetic += 2.0 * p[i] * p[j] * q[i] * q[j];
            potential += 2.0 * ni * nj * q[i] * q[j];
        }
    }
    (q[0] * q[1] * q[2]).powf((k - 1.0) / 2.0) * (kinetic + potential / 4.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vectorfields::{build_f, ModelType};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn unit_point() {
        let one = Rational::from(1);
        let q = [one.clone(), one.clone(), one.clone()];
        let x = to_polynomial_coordinates(&q, &q);
        let expected: Vec<Rational> = [1, 1, 1, 2, 2, 2].iter().map(|&v| Rational::from(v)).collect();
        assert_eq!(x.to_vec(), expected);
    }

    #[test]
    fn round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let q: [Rational; 3] = std::array::from_fn(|_| Rational::frac(rng.gen_range(1..50), rng.gen_range(1..9)));
            let p: [Rational; 3] = std::array::from_fn(|_| Rational::frac(rng.gen_range(-50..50), rng.gen_range(1..9)));
            let x = to_polynomial_coordinates(&q, &p);
            let (q2, p2) = to_canonical_coordinates(&x).unwrap();
            assert_eq!(q2, q);
            assert_eq!(p2, p);
        }
    }

    #[test]
    fn zero_q_is_a_domain_error() {
        let mut x: [Rational; 6] = std::array::from_fn(|i| Rational::from(i as i64 + 1));
        x[1] = Rational::from(0);
        assert!(matches!(to_canonical_coordinates(&x), Err(Error::Domain(_))));
    }

    #[test]
    fn weighted_integral_matches_hamiltonian_up_to_factor() {
        // T + V/4 = -F/4 after the map, so the polynomial-coordinate integral is -4 H.
        let k = 0.5;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for model in ModelType::ALL {
            let n = model.structure_constants();
            let f = build_f(n[0], n[1], n[2]).unwrap();
            for _ in 0..20 {
                let q: [f64; 3] = std::array::from_fn(|_| rng.gen_range(0.2..3.0));
                let p: [f64; 3] = std::array::from_fn(|_| rng.gen_range(0.2..3.0));
                let x = to_polynomial_coordinates_f64(q, p);
                let weighted = (x[0] * x[1] * x[2]).powf((k - 1.0) / 2.0) * f.evaluate_f64(&x);
                let h = canonical_hamiltonian(n, k, q, p);
                let scale = weighted.abs().max(1.0);
                assert!((weighted + 4.0 * h).abs() / scale < 1e-12, "{model}: {weighted} vs {h}");
            }
        }
    }
}
