use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use crate::error::{ensure_len, Error, Result};
use crate::rational::{to_f64, Q};

/// A homogeneous cubic `u(x) = Σ_{i<=j<=k} m_ijk xᵢxⱼx_k` on `ℝⁿ`, together
/// with the inner product of the space it lives on.
///
/// The inner product is diagonal, `⟨x, y⟩ = Σ wᵢxᵢyᵢ`, and Euclidean unless
/// weights are attached. Forms coming from Jordan algebras carry the trace
/// form in an orthogonal but not orthonormal rational basis, which is why
/// weights exist at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicForm {
    n: usize,
    terms: BTreeMap<[usize; 3], Q>,
    weights: Option<Vec<Q>>,
    coords: Option<Vec<String>>,
    name: Option<String>,
}

/// One entry `T_abc` of the fully symmetric coefficient tensor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorEntry {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub t: Q,
}

/// Number of distinct orderings of the index multiset `{i, j, k}`.
pub fn permutation_count(i: usize, j: usize, k: usize) -> i64 {
    if i == j && j == k {
        1
    } else if i == j || j == k || i == k {
        3
    } else {
        6
    }
}

fn sort3(mut idx: [usize; 3]) -> [usize; 3] {
    idx.sort_unstable();
    idx
}

fn distinct_orderings([i, j, k]: [usize; 3]) -> Vec<[usize; 3]> {
    let mut all = vec![[i, j, k], [i, k, j], [j, i, k], [j, k, i], [k, i, j], [k, j, i]];
    all.sort_unstable();
    all.dedup();
    all
}

impl CubicForm {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new(), weights: None, coords: None, name: None }
    }

    /// Builds a form from monomial coefficients; indices are 0-based and any order.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = ([usize; 3], Q)>) -> Result<Self> {
        let mut form = Self::zero(n);
        for (idx, c) in terms {
            if idx.iter().any(|&v| v >= n) {
                return Err(Error::invalid(format!("index {idx:?} out of range for dimension {n}")));
            }
            form.add(sort3(idx), c);
        }
        Ok(form)
    }

    /// Builds the form with symmetric tensor `T_ijk = f(i, j, k)`, so that
    /// `u(x) = Σ_{all i,j,k} f(i,j,k) xᵢxⱼx_k`. `f` must be symmetric; it is
    /// only queried on `i <= j <= k`.
    pub fn from_symmetric_tensor<F>(n: usize, f: F) -> Self
    where
        F: Fn(usize, usize, usize) -> Q,
    {
        let mut form = Self::zero(n);
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    let t = f(i, j, k);
                    if !t.is_zero() {
                        form.add([i, j, k], t * Q::from_integer(BigInt::from(permutation_count(i, j, k))));
                    }
                }
            }
        }
        form
    }

    fn add(&mut self, idx: [usize; 3], c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(idx).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&idx);
        }
    }

    /// Attaches the diagonal inner product `Σ wᵢxᵢyᵢ`; all weights must be positive.
    pub fn with_metric(mut self, weights: Vec<Q>) -> Result<Self> {
        ensure_len(self.n, weights.len())?;
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::invalid("metric weights must be positive"));
        }
        self.weights = if weights.iter().all(One::is_one) { None } else { Some(weights) };
        Ok(self)
    }

    pub fn with_coords(mut self, labels: Vec<String>) -> Result<Self> {
        ensure_len(self.n, labels.len())?;
        self.coords = Some(labels);
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn coords(&self) -> Option<&[String]> {
        self.coords.as_deref()
    }

    /// Monomial coefficients keyed by sorted 0-based index triples.
    pub fn terms(&self) -> &BTreeMap<[usize; 3], Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_euclidean(&self) -> bool {
        self.weights.is_none()
    }

    pub fn metric(&self) -> Option<&[Q]> {
        self.weights.as_deref()
    }

    /// Metric weights, all ones for the Euclidean inner product.
    pub fn weights(&self) -> Vec<Q> {
        self.weights.clone().unwrap_or_else(|| vec![Q::one(); self.n])
    }

    pub fn weights_f64(&self) -> Vec<f64> {
        self.weights().iter().map(to_f64).collect()
    }

    pub fn scale(&self, t: &Q) -> Self {
        let mut out = self.clone();
        out.terms = if t.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(k, c)| (*k, c * t)).collect()
        };
        out
    }

    /// All entries of the symmetric tensor, one per ordered triple.
    pub fn tensor_entries(&self) -> Vec<TensorEntry> {
        let mut out = Vec::new();
        for (&idx, m) in &self.terms {
            let orderings = distinct_orderings(idx);
            let t = m / Q::from_integer(BigInt::from(orderings.len()));
            for [a, b, c] in orderings {
                out.push(TensorEntry { a, b, c, t: t.clone() });
            }
        }
        out
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_terms(self.n, self.terms.iter().map(|(idx, c)| (idx.iter().map(|&v| v as u16).collect(), c.clone())))
            .expect("indices are in range")
    }

    /// Inverse of [`to_poly`](Self::to_poly); the polynomial must be a homogeneous cubic.
    pub fn from_poly(p: &Poly) -> Result<Self> {
        if !p.is_homogeneous(3) {
            return Err(Error::invalid("polynomial is not a homogeneous cubic"));
        }
        Self::from_terms(
            p.nvars(),
            p.terms().map(|(m, c)| ([m[0] as usize, m[1] as usize, m[2] as usize], c.clone())),
        )
    }

    pub fn eval(&self, x: &[Q]) -> Result<Q> {
        ensure_len(self.n, x.len())?;
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: &[Q]) -> Q {
        self.terms.iter().map(|([i, j, k], c)| c * &x[*i] * &x[*j] * &x[*k]).sum()
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.terms.iter().map(|([i, j, k], c)| to_f64(c) * x[*i] * x[*j] * x[*k]).sum()
    }

    /// Partial derivatives `∂ᵢu` as quadratic polynomials.
    pub fn gradient(&self) -> Vec<Poly> {
        let p = self.to_poly();
        (0..self.n).map(|v| p.derivative(v)).collect()
    }

    /// Second partials `∂ᵢ∂ⱼu` as linear polynomials.
    pub fn hessian(&self) -> Vec<Vec<Poly>> {
        let grad = self.gradient();
        grad.iter().map(|g| (0..self.n).map(|v| g.derivative(v)).collect()).collect()
    }

    /// `∂_c u(x) = 3 Σ T_abc x_a x_b`.
    pub fn gradient_at(&self, x: &[Q]) -> Vec<Q> {
        let mut g = vec![Q::zero(); self.n];
        for e in self.tensor_entries() {
            g[e.c] += &e.t * &x[e.a] * &x[e.b];
        }
        let three = Q::from_integer(3.into());
        g.into_iter().map(|v| v * &three).collect()
    }

    /// `∂_b∂_c u(x) = 6 Σ T_abc x_a`.
    pub fn hessian_at(&self, x: &[Q]) -> Vec<Vec<Q>> {
        let mut h = vec![vec![Q::zero(); self.n]; self.n];
        for e in self.tensor_entries() {
            h[e.b][e.c] += &e.t * &x[e.a];
        }
        let six = Q::from_integer(6.into());
        for row in &mut h {
            for v in row.iter_mut() {
                *v *= &six;
            }
        }
        h
    }

    /// Complete linearization `u(x;y;z) = 6 Σ T_ijk xᵢyⱼz_k`, with `u(x;x;x) = 6u(x)`.
    pub fn polarize(&self, x: &[Q], y: &[Q], z: &[Q]) -> Result<Q> {
        ensure_len(self.n, x.len())?;
        ensure_len(self.n, y.len())?;
        ensure_len(self.n, z.len())?;
        let s: Q = self.tensor_entries().iter().map(|e| &e.t * &x[e.a] * &y[e.b] * &z[e.c]).sum();
        Ok(s * Q::from_integer(6.into()))
    }

    /// The pulled-back form `x ↦ u(Rx)` for a square matrix `R`. The inner
    /// product is kept, so this is an isometric change of coordinates only
    /// when `R` is orthogonal for it.
    pub fn compose_linear(&self, r: &[Vec<Q>]) -> Result<Self> {
        ensure_len(self.n, r.len())?;
        for row in r {
            ensure_len(self.n, row.len())?;
        }
        let lin: Vec<Poly> = (0..self.n)
            .map(|i| {
                Poly::from_terms(self.n, (0..self.n).map(|j| (vec![j as u16], r[i][j].clone()))).expect("in range")
            })
            .collect();
        let mut acc = Poly::zero(self.n);
        for ([i, j, k], c) in &self.terms {
            let prod = &(&lin[*i] * &lin[*j]) * &lin[*k];
            acc = &acc + &prod.scale(c);
        }
        let mut out = Self::from_poly(&acc).unwrap_or_else(|_| Self::zero(self.n));
        out.n = self.n;
        out.weights = self.weights.clone();
        out.coords = self.coords.clone();
        out.name = self.name.clone();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, random_rational_vec, stream_rng};

    /// u = x(y² - z²)
    fn dim3() -> CubicForm {
        CubicForm::from_terms(3, [([0, 1, 1], int(1)), ([0, 2, 2], int(-1))]).unwrap()
    }

    #[test]
    fn evaluation() {
        let u = dim3();
        assert_eq!(u.eval(&[int(1), int(2), int(1)]).unwrap(), int(3));
        assert_eq!(u.eval(&[int(0), int(0), int(0)]).unwrap(), int(0));
        assert!(u.eval(&[int(1)]).is_err());
        let mut rng = stream_rng(1, 0);
        let x = random_rational_vec(&mut rng, 3, 9, 5);
        let x2: Vec<Q> = x.iter().map(|v| v * int(2)).collect();
        assert_eq!(u.eval(&x2).unwrap(), u.eval(&x).unwrap() * int(8));
    }

    #[test]
    fn gradient_and_hessian() {
        let cube = CubicForm::from_terms(2, [([0, 0, 0], int(1))]).unwrap();
        let g = cube.gradient();
        assert_eq!(g[0], Poly::from_terms(2, [(vec![0, 0], int(3))]).unwrap());
        assert!(g[1].is_zero());

        let h = dim3().hessian();
        let lin = |v: usize, c: i64| Poly::from_terms(3, [(vec![v as u16], int(c))]).unwrap();
        let expected = [
            [Poly::zero(3), lin(1, 2), lin(2, -2)],
            [lin(1, 2), lin(0, 2), Poly::zero(3)],
            [lin(2, -2), Poly::zero(3), lin(0, -2)],
        ];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(h[i][j], expected[i][j], "H[{i}][{j}]");
            }
        }
    }

    #[test]
    fn euler_identity() {
        let u = dim3();
        let grad = u.gradient();
        let mut acc = Poly::zero(3);
        for (i, g) in grad.iter().enumerate() {
            acc = &acc + &(g * &Poly::var(3, i));
        }
        assert!((&acc - &u.to_poly().scale(&int(3))).is_zero());
    }

    #[test]
    fn polarization() {
        let u = dim3();
        let e = |i: usize| (0..3).map(|k| int(i64::from(k == i))).collect::<Vec<_>>();
        assert_eq!(u.polarize(&e(0), &e(1), &e(1)).unwrap(), int(2));
        let mut rng = stream_rng(2, 0);
        let (x, y, z) = (
            random_rational_vec(&mut rng, 3, 7, 3),
            random_rational_vec(&mut rng, 3, 7, 3),
            random_rational_vec(&mut rng, 3, 7, 3),
        );
        assert_eq!(u.polarize(&x, &x, &x).unwrap() / int(6), u.eval(&x).unwrap());
        let p = u.polarize(&x, &y, &z).unwrap();
        for (a, b, c) in [(&x, &z, &y), (&y, &x, &z), (&y, &z, &x), (&z, &x, &y), (&z, &y, &x)] {
            assert_eq!(u.polarize(a, b, c).unwrap(), p);
        }
    }

    #[test]
    fn pointwise_derivatives_match_symbolic() {
        let u = dim3();
        let x = vec![int(3), int(-2), int(5)];
        let g: Vec<Q> = u.gradient().iter().map(|p| p.eval(&x).unwrap()).collect();
        assert_eq!(u.gradient_at(&x), g);
        let h: Vec<Vec<Q>> = u.hessian().iter().map(|r| r.iter().map(|p| p.eval(&x).unwrap()).collect()).collect();
        assert_eq!(u.hessian_at(&x), h);
    }

    #[test]
    fn poly_round_trip_and_rejection() {
        let u = dim3();
        assert_eq!(CubicForm::from_poly(&u.to_poly()).unwrap(), u);
        assert!(CubicForm::from_poly(&Poly::var(3, 0)).is_err());
        assert!(u.clone().with_metric(vec![int(1), int(0), int(1)]).is_err());
    }
}
