//! Hermitian 3×3 matrices over `K_d` with the Jordan product.
//!
//! Layout of `A = [[a, z, ȳ], [z̄, b, x], [y, x̄, c]]`: `diag = (a, b, c)` and
//! `off = (x, y, z)`. Hermitian symmetry is structural.

use num_traits::{One, Zero};

use crate::composition::{check_dim, CDElement};
use crate::error::{Error, Result};
use crate::rational::{int, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermMat3 {
    pub diag: [Q; 3],
    pub off: [CDElement; 3],
}

impl HermMat3 {
    pub fn zero(d: usize) -> Self {
        Self {
            diag: [Q::zero(), Q::zero(), Q::zero()],
            off: [CDElement::zero(d), CDElement::zero(d), CDElement::zero(d)],
        }
    }

    pub fn identity(d: usize) -> Self {
        Self::diagonal(d, [Q::one(), Q::one(), Q::one()])
    }

    pub fn diagonal(d: usize, diag: [Q; 3]) -> Self {
        Self { diag, ..Self::zero(d) }
    }

    /// The matrix with a single off-diagonal entry; `pos` indexes `(x, y, z)`.
    pub fn off_diagonal(d: usize, pos: usize, value: CDElement) -> Self {
        let mut m = Self::zero(d);
        m.off[pos] = value;
        m
    }

    pub fn dim(&self) -> usize {
        self.off[0].dim()
    }

    /// Real dimension of `H₃(K_d)`.
    pub fn real_dim(d: usize) -> usize {
        3 + 3 * d
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() })
        }
    }

    pub fn trace(&self) -> Q {
        self.diag.iter().sum()
    }

    /// Full matrix entries `A[i][j]`.
    fn entries(&self) -> [[CDElement; 3]; 3] {
        let d = self.dim();
        let r = |q: &Q| CDElement::real(d, q.clone());
        let [x, y, z] = &self.off;
        [
            [r(&self.diag[0]), z.clone(), y.conj()],
            [z.conj(), r(&self.diag[1]), x.clone()],
            [y.clone(), x.conj(), r(&self.diag[2])],
        ]
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            diag: std::array::from_fn(|i| &self.diag[i] + &other.diag[i]),
            off: std::array::from_fn(|i| &self.off[i] + &other.off[i]),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self {
            diag: std::array::from_fn(|i| &self.diag[i] * s),
            off: std::array::from_fn(|i| self.off[i].scale(s)),
        }
    }

    /// `A∘B = (AB + BA)/2`.
    pub fn jordan_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.jordan_mul_unchecked(other))
    }

    pub(crate) fn jordan_mul_unchecked(&self, other: &Self) -> Self {
        let (a, b) = (self.entries(), other.entries());
        let d = self.dim();
        let sym = |i: usize, j: usize| {
            let mut acc = CDElement::zero(d);
            for k in 0..3 {
                acc = &acc + &a[i][k].mul_unchecked(&b[k][j]);
                acc = &acc + &b[i][k].mul_unchecked(&a[k][j]);
            }
            acc.scale(&Q::new(1.into(), 2.into()))
        };
        Self {
            diag: [sym(0, 0).re(), sym(1, 1).re(), sym(2, 2).re()],
            off: [sym(1, 2), sym(2, 0), sym(0, 1)],
        }
    }

    /// `⟨A, B⟩ = trace(A∘B)`, computed from entries as `Σ aᵢbᵢ + 2Σ⟨xᵢ, x'ᵢ⟩`.
    pub fn trace_form(&self, other: &Self) -> Result<Q> {
        self.check_same(other)?;
        Ok(self.trace_form_unchecked(other))
    }

    pub(crate) fn trace_form_unchecked(&self, other: &Self) -> Q {
        let diag: Q = self.diag.iter().zip(&other.diag).map(|(p, q)| p * q).sum();
        let off: Q = self.off.iter().zip(&other.off).map(|(p, q)| p.inner(q)).sum();
        diag + off * int(2)
    }

    /// Generic norm `abc - a n(x) - b n(y) - c n(z) + 2 re(xyz)`.
    pub fn freudenthal_det(&self) -> Q {
        let [a, b, c] = &self.diag;
        let [x, y, z] = &self.off;
        let xyz = x.mul_unchecked(y).mul_unchecked(z).re();
        a * b * c - a * x.norm() - b * y.norm() - c * z.norm() + xyz * int(2)
    }

    /// The involution induced entrywise by the Cayley–Dickson doubling
    /// automorphism `(a, b) ↦ (a, -b)` of `K_d = K_{d/2} ⊕ K_{d/2}`: it
    /// negates the upper half of the coordinates of every off-diagonal entry
    /// and fixes `H₃(K_{d/2})`. It is a Jordan automorphism. For `d = 2` this
    /// is complex conjugation; for `d = 1` it is the identity.
    pub fn involution(&self) -> Self {
        let d = self.dim();
        let flip = |e: &CDElement| {
            let c = e.coeffs().iter().enumerate().map(|(k, v)| if d > 1 && k >= d / 2 { -v } else { v.clone() });
            CDElement::new(c.collect()).expect("same dimension")
        };
        Self { diag: self.diag.clone(), off: std::array::from_fn(|i| flip(&self.off[i])) }
    }

    /// Freudenthal adjoint `A# = A² - tr(A)A + ½(tr(A)² - tr(A²))I`, the
    /// quadratic map with `⟨A#, B⟩ = 3N(A, A, B)` and `A## = N(A)A`.
    pub fn adjoint(&self) -> Self {
        let d = self.dim();
        let t = self.trace();
        let sq = self.jordan_mul_unchecked(self);
        let half = Q::new(1.into(), 2.into());
        let c = (&t * &t - sq.trace()) * half;
        sq.sub(&self.scale(&t)).add(&Self::identity(d).scale(&c))
    }
}

/// Full polarization of the generic norm, symmetric with `N(A, A, A) = det A`:
/// `⅓⟨A∘B, C⟩ - ⅙(tr A⟨B,C⟩ + tr B⟨A,C⟩ + tr C⟨A,B⟩) + ⅙ tr A tr B tr C`.
pub fn norm_trilinear(a: &HermMat3, b: &HermMat3, c: &HermMat3) -> Q {
    let (ta, tb, tc) = (a.trace(), b.trace(), c.trace());
    let pairs = &ta * b.trace_form_unchecked(c) + &tb * a.trace_form_unchecked(c) + &tc * a.trace_form_unchecked(b);
    a.jordan_mul_unchecked(b).trace_form_unchecked(c) * Q::new(1.into(), 3.into())
        - pairs * Q::new(1.into(), 6.into())
        + ta * tb * tc * Q::new(1.into(), 6.into())
}

impl HermMat3 {

    /// Linear combination `Σ tᵢ Bᵢ`.
    pub fn combine(basis: &[HermMat3], coords: &[Q]) -> Result<Self> {
        let d = basis.first().map(HermMat3::dim).ok_or_else(|| Error::invalid("empty basis"))?;
        crate::error::ensure_len(basis.len(), coords.len())?;
        Ok(basis
            .iter()
            .zip(coords)
            .filter(|(_, t)| !t.is_zero())
            .fold(Self::zero(d), |acc, (b, t)| acc.add(&b.scale(t))))
    }
}

/// Orthogonal basis element together with its squared trace-form length.
#[derive(Clone, Debug)]
pub struct BasisElement {
    pub matrix: HermMat3,
    pub norm_sq: Q,
    pub label: String,
}

const OFF_NAMES: [&str; 3] = ["x", "y", "z"];

fn off_units(d: usize) -> Vec<BasisElement> {
    let mut out = Vec::with_capacity(3 * d);
    for (pos, name) in OFF_NAMES.iter().enumerate() {
        for k in 0..d {
            out.push(BasisElement {
                matrix: HermMat3::off_diagonal(d, pos, CDElement::unit(d, k)),
                norm_sq: int(2),
                label: format!("{name}.e{k}"),
            });
        }
    }
    out
}

/// Orthogonal basis of the trace-free subspace: `E11 - E22`, `E11 + E22 - 2E33`,
/// then the units `e_k` in the `x`, `y`, `z` positions. Squared lengths are
/// 2, 6 and 2; unit normalisation would leave the rationals.
pub fn tracefree_basis(d: usize) -> Result<Vec<BasisElement>> {
    check_dim(d)?;
    let mut out = vec![
        BasisElement {
            matrix: HermMat3::diagonal(d, [int(1), int(-1), int(0)]),
            norm_sq: int(2),
            label: "diag(1,-1,0)".into(),
        },
        BasisElement {
            matrix: HermMat3::diagonal(d, [int(1), int(1), int(-2)]),
            norm_sq: int(6),
            label: "diag(1,1,-2)".into(),
        },
    ];
    out.extend(off_units(d));
    Ok(out)
}

/// Orthogonal basis of all of `H₃(K_d)`: `E11, E22, E33`, then off-diagonal units.
pub fn full_basis(d: usize) -> Result<Vec<BasisElement>> {
    check_dim(d)?;
    let mut out: Vec<BasisElement> = (0..3)
        .map(|i| {
            let mut diag = [Q::zero(), Q::zero(), Q::zero()];
            diag[i] = Q::one();
            BasisElement { matrix: HermMat3::diagonal(d, diag), norm_sq: int(1), label: format!("E{0}{0}", i + 1) }
        })
        .collect();
    out.extend(off_units(d));
    Ok(out)
}

/// Basis of the purely imaginary off-diagonal part `H₃(K_8) ⊖ H₃(K_1)`.
pub fn imaginary_offdiag_basis() -> Vec<BasisElement> {
    off_units(8).into_iter().filter(|b| b.matrix.off.iter().all(|e| e.re().is_zero())).collect()
}

/// An element of `H₃(K_d) ⊗ ℂ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexHermMat3 {
    pub re: HermMat3,
    pub im: HermMat3,
}

impl ComplexHermMat3 {
    pub fn new(re: HermMat3, im: HermMat3) -> Result<Self> {
        re.check_same(&im)?;
        Ok(Self { re, im })
    }

    pub fn real_dim(d: usize) -> usize {
        2 * HermMat3::real_dim(d)
    }

    /// Complex-bilinear extension of the Jordan product.
    pub fn jordan_mul(&self, other: &Self) -> Result<Self> {
        self.re.check_same(&other.re)?;
        Ok(self.jordan_mul_unchecked(other))
    }

    pub(crate) fn jordan_mul_unchecked(&self, other: &Self) -> Self {
        let rr = self.re.jordan_mul_unchecked(&other.re);
        let ii = self.im.jordan_mul_unchecked(&other.im);
        let ri = self.re.jordan_mul_unchecked(&other.im);
        let ir = self.im.jordan_mul_unchecked(&other.re);
        Self { re: rr.sub(&ii), im: ri.add(&ir) }
    }

    /// Complex-bilinear trace form, returned as `(re, im)`.
    pub fn trace_form(&self, other: &Self) -> (Q, Q) {
        let re = self.re.trace_form_unchecked(&other.re) - self.im.trace_form_unchecked(&other.im);
        let im = self.re.trace_form_unchecked(&other.im) + self.im.trace_form_unchecked(&other.re);
        (re, im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::DIMS;
    use crate::rational::{random_rational_vec, stream_rng};

    fn random_herm(d: usize, stream: u64) -> HermMat3 {
        let mut rng = stream_rng(11, stream);
        let v = random_rational_vec(&mut rng, 3 + 3 * d, 6, 3);
        let basis: Vec<HermMat3> = full_basis(d).unwrap().into_iter().map(|b| b.matrix).collect();
        HermMat3::combine(&basis, &v).unwrap()
    }

    fn random_tracefree(d: usize, stream: u64) -> HermMat3 {
        let mut rng = stream_rng(13, stream);
        let v = random_rational_vec(&mut rng, 2 + 3 * d, 6, 3);
        let basis: Vec<HermMat3> = tracefree_basis(d).unwrap().into_iter().map(|b| b.matrix).collect();
        HermMat3::combine(&basis, &v).unwrap()
    }

    fn classical_det(m: [[Q; 3]; 3]) -> Q {
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    #[test]
    fn orthogonal_idempotents_multiply_to_zero() {
        let e1 = HermMat3::diagonal(1, [int(1), int(0), int(0)]);
        let e2 = HermMat3::diagonal(1, [int(0), int(1), int(0)]);
        assert_eq!(e1.jordan_mul(&e2).unwrap(), HermMat3::zero(1));
        assert!(e1.jordan_mul(&HermMat3::zero(2)).is_err());
    }

    #[test]
    fn identity_is_unit_and_jordan_identity_holds() {
        for &d in &DIMS {
            let a = random_herm(d, d as u64);
            let b = random_herm(d, 100 + d as u64);
            assert_eq!(HermMat3::identity(d).jordan_mul(&a).unwrap(), a);
            let a2 = a.jordan_mul_unchecked(&a);
            let left = a2.jordan_mul_unchecked(&a.jordan_mul_unchecked(&b));
            let right = a.jordan_mul_unchecked(&a2.jordan_mul_unchecked(&b));
            assert_eq!(left, right, "Jordan identity d={d}");
        }
    }

    #[test]
    fn trace_form_values() {
        let i = HermMat3::identity(4);
        assert_eq!(i.trace_form(&i).unwrap(), int(3));
        let e11 = HermMat3::diagonal(4, [int(1), int(0), int(0)]);
        assert_eq!(e11.trace_form(&e11).unwrap(), int(1));
        for &d in &DIMS {
            let (a, b) = (random_herm(d, 3), random_herm(d, 4));
            assert_eq!(a.trace_form_unchecked(&b), a.jordan_mul_unchecked(&b).trace());
        }
    }

    #[test]
    fn trace_form_is_positive_definite_on_a_random_frame() {
        // Leading principal minors of the Gram matrix of a random frame.
        let d = 2;
        let n = 3 + 3 * d;
        let frame: Vec<HermMat3> = (0..n).map(|s| random_herm(d, 200 + s as u64)).collect();
        let mut gram: Vec<Vec<Q>> =
            frame.iter().map(|a| frame.iter().map(|b| a.trace_form_unchecked(b)).collect()).collect();
        // Gaussian elimination without pivoting; pivots are ratios of leading minors.
        for k in 0..n {
            let pivot = gram[k][k].clone();
            assert!(pivot > Q::zero(), "leading minor {k} not positive");
            for i in k + 1..n {
                let f = &gram[i][k] / &pivot;
                for j in k..n {
                    let v = &gram[k][j] * &f;
                    gram[i][j] -= v;
                }
            }
        }
    }

    #[test]
    fn weak_associativity_of_trace_form() {
        for &d in &DIMS {
            let (a, b, c) = (random_herm(d, 5), random_herm(d, 6), random_herm(d, 7));
            assert_eq!(
                a.jordan_mul_unchecked(&b).trace_form_unchecked(&c),
                a.trace_form_unchecked(&b.jordan_mul_unchecked(&c))
            );
        }
    }

    #[test]
    fn freudenthal_det_matches_classical_determinant() {
        assert_eq!(HermMat3::diagonal(1, [int(2), int(3), int(5)]).freudenthal_det(), int(30));
        let mut ones = HermMat3::diagonal(1, [int(1), int(1), int(1)]);
        ones.off = std::array::from_fn(|_| CDElement::one(1));
        assert_eq!(ones.freudenthal_det(), int(0));
        for s in 0..10 {
            let a = random_herm(1, 300 + s);
            let e = |q: &CDElement| q.re();
            let [x, y, z] = &a.off;
            let m = [
                [a.diag[0].clone(), e(z), e(y)],
                [e(z), a.diag[1].clone(), e(x)],
                [e(y), e(x), a.diag[2].clone()],
            ];
            assert_eq!(a.freudenthal_det(), classical_det(m));
        }
    }

    #[test]
    fn cayley_hamilton_on_tracefree_elements() {
        for &d in &DIMS {
            for s in 0..3 {
                let a = random_tracefree(d, 40 * d as u64 + s);
                assert_eq!(a.trace(), Q::zero());
                let a2 = a.jordan_mul_unchecked(&a);
                assert_eq!(a.trace_form_unchecked(&a2), a.freudenthal_det() * int(3), "d={d}");
            }
        }
    }

    #[test]
    fn tracefree_basis_sizes_and_orthogonality() {
        for (d, n) in [(1, 5), (2, 8), (4, 14), (8, 26)] {
            let basis = tracefree_basis(d).unwrap();
            assert_eq!(basis.len(), n);
            for (i, bi) in basis.iter().enumerate() {
                assert_eq!(bi.matrix.trace(), Q::zero());
                assert_eq!(bi.matrix.trace_form_unchecked(&bi.matrix), bi.norm_sq);
                for bj in &basis[i + 1..] {
                    assert_eq!(bi.matrix.trace_form_unchecked(&bj.matrix), Q::zero());
                }
            }
        }
        assert!(tracefree_basis(3).is_err());
        assert_eq!(imaginary_offdiag_basis().len(), 21);
    }

    #[test]
    fn involution_examples() {
        let diag = HermMat3::diagonal(2, [int(1), int(2), int(3)]);
        assert_eq!(diag.involution(), diag);
        let a = HermMat3::off_diagonal(2, 0, CDElement::unit(2, 1));
        assert_eq!(a.involution(), HermMat3::off_diagonal(2, 0, -&CDElement::unit(2, 1)));
        for &d in &DIMS {
            let a = random_herm(d, 500 + d as u64);
            let b = random_herm(d, 600 + d as u64);
            assert_eq!(a.involution().involution(), a);
            assert_eq!(a.involution().trace_form_unchecked(&b.involution()), a.trace_form_unchecked(&b));
            assert_eq!(a.jordan_mul_unchecked(&b).involution(), a.involution().jordan_mul_unchecked(&b.involution()));
        }
        // d = 4: i is fixed, j and k are negated.
        let fixed = HermMat3::off_diagonal(4, 1, CDElement::unit(4, 1));
        assert_eq!(fixed.involution(), fixed);
        let moved = HermMat3::off_diagonal(4, 1, CDElement::unit(4, 3));
        assert_eq!(moved.involution(), HermMat3::off_diagonal(4, 1, -&CDElement::unit(4, 3)));
    }

    #[test]
    fn adjoint_and_norm_polarization() {
        for &d in &DIMS {
            let a = random_herm(d, 700 + d as u64);
            let b = random_herm(d, 800 + d as u64);
            assert_eq!(norm_trilinear(&a, &a, &a), a.freudenthal_det());
            assert_eq!(norm_trilinear(&a, &b, &a), norm_trilinear(&b, &a, &a));
            assert_eq!(a.adjoint().trace_form_unchecked(&b), norm_trilinear(&a, &a, &b) * int(3));
            assert_eq!(a.adjoint().adjoint(), a.scale(&a.freudenthal_det()));
        }
    }

    #[test]
    fn complexified_product_is_commutative() {
        let d = 2;
        let z = ComplexHermMat3::new(random_herm(d, 1), random_herm(d, 2)).unwrap();
        let w = ComplexHermMat3::new(random_herm(d, 3), random_herm(d, 4)).unwrap();
        assert_eq!(z.jordan_mul(&w).unwrap(), w.jordan_mul(&z).unwrap());
        let zw = z.jordan_mul_unchecked(&w);
        let v = ComplexHermMat3::new(random_herm(d, 8), random_herm(d, 9)).unwrap();
        assert_eq!(zw.trace_form(&v), z.trace_form(&w.jordan_mul_unchecked(&v)));
    }
}
