//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A monomial is the sorted multiset of its variable indices, so `x0²x3` is
//! `[0, 0, 3]`. Terms live in a `BTreeMap`, which gives the canonical
//! ordering; zero coefficients are never stored.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{ensure_len, Error, Result};
use crate::rational::{random_int_point, stream_rng, to_f64, Q};

pub type Monomial = Vec<u16>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

fn merge(a: &[u16], b: &[u16]) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![v as u16], Q::one());
        p
    }

    /// `Σ xᵢ²`.
    pub fn norm_sq(nvars: usize) -> Self {
        Self::weighted_norm_sq(&vec![Q::one(); nvars])
    }

    /// `Σ wᵢ xᵢ²`.
    pub fn weighted_norm_sq(weights: &[Q]) -> Self {
        let mut p = Self::zero(weights.len());
        for (i, w) in weights.iter().enumerate() {
            p.add_term(vec![i as u16, i as u16], w.clone());
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Q)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (mut m, c) in terms {
            if m.iter().any(|&v| v as usize >= nvars) {
                return Err(Error::invalid(format!("monomial {m:?} uses a variable outside 0..{nvars}")));
            }
            m.sort_unstable();
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &[u16]) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    pub fn is_homogeneous(&self, degree: usize) -> bool {
        self.terms.keys().all(|m| m.len() == degree)
    }

    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    pub fn derivative(&self, v: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let k = m.iter().filter(|&&x| x as usize == v).count();
            if k == 0 {
                continue;
            }
            let mut reduced = m.clone();
            let pos = reduced.iter().position(|&x| x as usize == v).expect("present");
            reduced.remove(pos);
            out.add_term(reduced, c * Q::from_integer(BigInt::from(k)));
        }
        out
    }

    pub fn eval(&self, x: &[Q]) -> Result<Q> {
        ensure_len(self.nvars, x.len())?;
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &v in m {
                t *= &x[v as usize];
            }
            acc += t;
        }
        acc
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.terms.iter().map(|(m, c)| m.iter().fold(to_f64(c), |t, &v| t * x[v as usize])).sum()
    }

    /// Exact identity test: expanded coefficients all vanish.
    pub fn exact_zero(&self) -> bool {
        self.is_zero()
    }

    /// Schwartz–Zippel test at uniform integer points of `[0, bound)^n`.
    pub fn random_zero(&self, trials: usize, bound: u64, seed: u64) -> Result<RandomTest> {
        let degree = self.degree().unwrap_or(0);
        random_identity_test(self.nvars, degree, trials, bound, seed, |x| self.eval_unchecked(x))
    }
}

/// Outcome of a randomized identity test.
#[derive(Clone, Debug, PartialEq)]
pub struct RandomTest {
    /// True when every sampled point evaluated to zero.
    pub zero: bool,
    /// First point with a nonzero value, if any.
    pub witness: Option<Vec<Q>>,
    pub trials: usize,
    pub bound: u64,
    /// Probability that a nonzero polynomial of the given degree passes:
    /// `(degree / bound)^trials`.
    pub error_bound: f64,
}

pub fn schwartz_zippel_bound(degree: usize, bound: u64, trials: usize) -> f64 {
    (degree as f64 / bound as f64).powi(trials as i32)
}

/// Randomized zero test of a polynomial given only by evaluation.
pub fn random_identity_test<F>(
    nvars: usize,
    degree: usize,
    trials: usize,
    bound: u64,
    seed: u64,
    eval: F,
) -> Result<RandomTest>
where
    F: Fn(&[Q]) -> Q,
{
    if bound as usize <= degree {
        return Err(Error::invalid(format!("sampling bound {bound} must exceed the degree {degree}")));
    }
    let mut rng = stream_rng(seed, 0);
    for _ in 0..trials {
        let x = random_int_point(&mut rng, nvars, bound);
        if !eval(&x).is_zero() {
            return Ok(RandomTest {
                zero: false,
                witness: Some(x),
                trials,
                bound,
                error_bound: 0.0,
            });
        }
    }
    Ok(RandomTest { zero: true, witness: None, trials, bound, error_bound: schwartz_zippel_bound(degree, bound, trials) })
}

/// Sparse random polynomial, used by tests that compare the two zero tests.
pub fn random_sparse<R: Rng>(rng: &mut R, nvars: usize, max_degree: usize, terms: usize) -> Poly {
    let mut p = Poly::zero(nvars);
    for _ in 0..terms {
        let deg = rng.random_range(0..=max_degree);
        let m: Monomial = (0..deg).map(|_| rng.random_range(0..nvars) as u16).collect();
        let c = Q::new(BigInt::from(rng.random_range(-5i64..=5)), BigInt::from(rng.random_range(1i64..=3)));
        let mut m = m;
        m.sort_unstable();
        p.add_term(m, c);
    }
    p
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Q::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars.max(rhs.nvars));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(merge(ma, mb), ca * cb);
            }
        }
        out
    }
}
