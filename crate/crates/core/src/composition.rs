//! Real composition algebras `K_d` (reals, complexes, quaternions,
//! octonions) built by Cayley–Dickson doubling over exact rationals.
//!
//! Doubling convention: `(a, b)(c, d) = (ac - d̄b, da + bc̄)`. With the basis
//! ordering that convention produces, `e1 e2 = e3` in every `d >= 4`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_q, Q};

/// Dimensions of the real division algebras.
pub const DIMS: [usize; 4] = [1, 2, 4, 8];

pub fn check_dim(d: usize) -> Result<()> {
    if DIMS.contains(&d) {
        Ok(())
    } else {
        Err(Error::invalid(format!("composition algebra dimension must be 1, 2, 4 or 8, got {d}")))
    }
}

/// An element of `K_d` in the standard basis `e0 = 1, e1, ..., e_{d-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CDElement {
    coeffs: Vec<Q>,
}

impl CDElement {
    pub fn new(coeffs: Vec<Q>) -> Result<Self> {
        check_dim(coeffs.len())?;
        Ok(Self { coeffs })
    }

    pub fn zero(d: usize) -> Self {
        Self { coeffs: vec![Q::zero(); d] }
    }

    pub fn one(d: usize) -> Self {
        Self::real(d, Q::one())
    }

    pub fn real(d: usize, r: Q) -> Self {
        let mut e = Self::zero(d);
        e.coeffs[0] = r;
        e
    }

    /// Basis unit `e_k`.
    pub fn unit(d: usize, k: usize) -> Self {
        let mut e = Self::zero(d);
        e.coeffs[k] = Q::one();
        e
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `cd_mul`; fails on mismatched dimensions.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.dim());
        }
        Self { coeffs: double_mul(&self.coeffs, &other.coeffs) }
    }

    pub fn conj(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for c in coeffs.iter_mut().skip(1) {
            *c = -c.clone();
        }
        Self { coeffs }
    }

    pub fn re(&self) -> Q {
        self.coeffs[0].clone()
    }

    pub fn im(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] = Q::zero();
        Self { coeffs }
    }

    /// Norm `n(a) = Σ a_k²` (the squared Euclidean length).
    pub fn norm(&self) -> Q {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// Euclidean inner product of coordinates, `re(a b̄)`.
    pub fn inner(&self, other: &Self) -> Q {
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }
}

fn conj_slice(a: &[Q]) -> Vec<Q> {
    a.iter()
        .enumerate()
        .map(|(i, c)| if i == 0 { c.clone() } else { -c.clone() })
        .collect()
}

fn add_slices(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_slices(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn double_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.len() == 1 {
        return vec![&a[0] * &b[0]];
    }
    let h = a.len() / 2;
    let (p, q) = a.split_at(h);
    let (r, s) = b.split_at(h);
    // (p, q)(r, s) = (pr - s̄q, sp + qr̄)
    let first = sub_slices(&double_mul(p, r), &double_mul(&conj_slice(s), q));
    let second = add_slices(&double_mul(s, p), &double_mul(q, &conj_slice(r)));
    let mut out = first;
    out.extend(second);
    out
}

impl Add for &CDElement {
    type Output = CDElement;
    fn add(self, rhs: &CDElement) -> CDElement {
        CDElement { coeffs: add_slices(&self.coeffs, &rhs.coeffs) }
    }
}

impl Sub for &CDElement {
    type Output = CDElement;
    fn sub(self, rhs: &CDElement) -> CDElement {
        CDElement { coeffs: sub_slices(&self.coeffs, &rhs.coeffs) }
    }
}

impl Neg for &CDElement {
    type Output = CDElement;
    fn neg(self) -> CDElement {
        CDElement { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl fmt::Debug for CDElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_q).collect();
        write!(f, "K{}[{}]", self.dim(), parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, random_rational_vec, stream_rng};

    fn el(v: &[i64]) -> CDElement {
        CDElement::new(v.iter().map(|&x| int(x)).collect()).unwrap()
    }

    fn random_el(d: usize, stream: u64) -> CDElement {
        let mut rng = stream_rng(7, stream);
        CDElement::new(random_rational_vec(&mut rng, d, 9, 4)).unwrap()
    }

    #[test]
    fn quaternion_ij_is_k() {
        let i = CDElement::unit(4, 1);
        let j = CDElement::unit(4, 2);
        assert_eq!(i.mul(&j).unwrap(), CDElement::unit(4, 3));
        assert_eq!(j.mul(&i).unwrap(), -&CDElement::unit(4, 3));
    }

    #[test]
    fn complex_product() {
        assert_eq!(el(&[1, 1]).mul(&el(&[1, -1])).unwrap(), el(&[2, 0]));
    }

    #[test]
    fn octonions_are_not_associative() {
        let mut witness = None;
        'scan: for a in 1..8 {
            for b in 1..8 {
                for c in 1..8 {
                    let (ea, eb, ec) = (CDElement::unit(8, a), CDElement::unit(8, b), CDElement::unit(8, c));
                    let left = ea.mul(&eb).unwrap().mul(&ec).unwrap();
                    let right = ea.mul(&eb.mul(&ec).unwrap()).unwrap();
                    if left != right {
                        witness = Some((a, b, c));
                        break 'scan;
                    }
                }
            }
        }
        assert!(witness.is_some());
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        assert!(CDElement::one(2).mul(&CDElement::one(4)).is_err());
        assert!(CDElement::new(vec![int(1); 3]).is_err());
    }

    #[test]
    fn conjugation() {
        assert_eq!(el(&[1, 1]).conj(), el(&[1, -1]));
        assert_eq!(el(&[5, 0, 0, 0]).conj(), el(&[5, 0, 0, 0]));
        for s in 0..10 {
            let (a, b) = (random_el(8, 2 * s), random_el(8, 2 * s + 1));
            assert_eq!(a.mul(&b).unwrap().conj(), b.conj().mul(&a.conj()).unwrap());
            assert_eq!(a.conj().conj(), a);
        }
    }

    #[test]
    fn real_and_imaginary_parts() {
        let mut a = CDElement::zero(8);
        a.coeffs[0] = int(3);
        a.coeffs[5] = int(2);
        assert_eq!(a.re(), int(3));
        assert_eq!(a.im(), CDElement::unit(8, 5).scale(&int(2)));
        assert_eq!(&CDElement::real(8, a.re()) + &a.im(), a);

        let (e1, e2, e3) = (CDElement::unit(8, 1), CDElement::unit(8, 2), CDElement::unit(8, 3));
        assert_eq!(e1.mul(&e2).unwrap(), e3);
        assert_eq!(e1.mul(&e2).unwrap().mul(&e3).unwrap().re(), int(-1));
    }

    #[test]
    fn algebraic_laws_on_random_elements() {
        for &d in &DIMS {
            for s in 0..8 {
                let (a, b, c) = (random_el(d, 3 * s), random_el(d, 3 * s + 1), random_el(d, 3 * s + 2));
                let ab = a.mul_unchecked(&b);
                assert_eq!(ab.norm(), a.norm() * b.norm(), "norm composition d={d}");
                let left = ab.mul_unchecked(&c);
                let right = a.mul_unchecked(&b.mul_unchecked(&c));
                assert_eq!(left.re(), right.re(), "trace associativity d={d}");
                if d <= 4 {
                    assert_eq!(left, right, "associativity d={d}");
                } else {
                    assert_eq!(a.mul_unchecked(&a).mul_unchecked(&b), a.mul_unchecked(&ab));
                    assert_eq!(ab.mul_unchecked(&b), a.mul_unchecked(&b.mul_unchecked(&b)));
                }
            }
        }
    }
}
