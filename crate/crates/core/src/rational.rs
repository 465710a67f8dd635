//! Rational scalars and seeded random sampling shared by every module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub type Q = BigRational;

pub fn int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_f64(q: &Q) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational formatting: `"p"` for integers, `"p/q"` otherwise.
pub fn format_q(q: &Q) -> String {
    q.to_string()
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    let q: Q = s.parse().ok()?;
    Some(q)
}

/// Deterministic generator for an independent stream `(seed, stream)`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Random rational vector with numerators in `[-range, range]` and
/// denominators in `[1, den]`.
pub fn random_rational_vec<R: Rng>(rng: &mut R, n: usize, range: i64, den: i64) -> Vec<Q> {
    (0..n)
        .map(|_| frac(rng.random_range(-range..=range), rng.random_range(1..=den)))
        .collect()
}

/// Uniform integer point in `[0, bound)^n` as rationals.
pub fn random_int_point<R: Rng>(rng: &mut R, n: usize, bound: u64) -> Vec<Q> {
    (0..n)
        .map(|_| Q::from_integer(BigInt::from(rng.random_range(0..bound))))
        .collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn random_unit<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-8 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}
