//! The metrised commutative algebra `V(u)` defined by `⟨x∘y, z⟩ = u(x;y;z)`.
//!
//! [`MetrisedAlgebra`] works exactly over the rationals in the form's own
//! coordinates, where the inner product is `Σ wᵢxᵢyᵢ` and so
//! `(x∘y)_c = (6/w_c) Σ T_abc x_a y_b`. [`FloatAlgebra`] moves to the
//! orthonormal coordinates `yᵢ = √wᵢ xᵢ`, where `L_x` is a symmetric matrix,
//! and runs the idempotent search and the Peirce eigendecomposition there.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::cubics::{CubicForm, TensorEntry};
use crate::error::{ensure_len, Error, Result};
use crate::rational::{random_rational_vec, random_unit, stream_rng, to_f64, Q};

#[derive(Clone, Debug)]
pub struct MetrisedAlgebra {
    n: usize,
    entries: Vec<TensorEntry>,
    w: Vec<Q>,
    /// `6 / w_c`.
    out_scale: Vec<Q>,
    /// `(a, b, c, T_abc · t_den)` with integer values.
    int_entries: Vec<(usize, usize, usize, BigInt)>,
    t_den: BigInt,
}

/// `x = v / d` with `v` integral and `d` the least common denominator.
fn integerize(x: &[Q]) -> (Vec<BigInt>, BigInt) {
    let d = x.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let v = x.iter().map(|q| q.numer() * (&d / q.denom())).collect();
    (v, d)
}

impl MetrisedAlgebra {
    pub fn new(form: &CubicForm) -> Self {
        let w = form.weights();
        let six = Q::from_integer(6.into());
        let out_scale = w.iter().map(|v| &six / v).collect();
        let entries = form.tensor_entries();
        let t_den = entries.iter().fold(BigInt::one(), |acc, e| acc.lcm(e.t.denom()));
        let int_entries = entries.iter().map(|e| (e.a, e.b, e.c, e.t.numer() * (&t_den / e.t.denom()))).collect();
        Self { n: form.dim(), entries, w, out_scale, int_entries, t_den }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &[Q] {
        &self.w
    }

    pub fn inner(&self, x: &[Q], y: &[Q]) -> Result<Q> {
        ensure_len(self.n, x.len())?;
        ensure_len(self.n, y.len())?;
        Ok(self.inner_unchecked(x, y))
    }

    fn inner_unchecked(&self, x: &[Q], y: &[Q]) -> Q {
        x.iter().zip(y).zip(&self.w).map(|((a, b), w)| a * b * w).sum()
    }

    pub fn multiply(&self, x: &[Q], y: &[Q]) -> Result<Vec<Q>> {
        ensure_len(self.n, x.len())?;
        ensure_len(self.n, y.len())?;
        Ok(self.multiply_unchecked(x, y))
    }

    fn multiply_unchecked(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        // Integer accumulation over a common denominator avoids a gcd per term.
        let (xs, dx) = integerize(x);
        let (ys, dy) = integerize(y);
        let mut acc = vec![BigInt::zero(); self.n];
        for (a, b, c, t) in &self.int_entries {
            if xs[*a].is_zero() || ys[*b].is_zero() {
                continue;
            }
            acc[*c] += t * &xs[*a] * &ys[*b];
        }
        let den = &self.t_den * dx * dy;
        acc.into_iter().zip(&self.out_scale).map(|(v, s)| Q::new(v, den.clone()) * s).collect()
    }

    /// The matrix of `y ↦ x∘y`, indexed `[row][column]`. It is self-adjoint
    /// for the metric, so `W·L_x` is symmetric.
    pub fn mult_operator(&self, x: &[Q]) -> Result<Vec<Vec<Q>>> {
        ensure_len(self.n, x.len())?;
        Ok(self.mult_operator_unchecked(x))
    }

    fn mult_operator_unchecked(&self, x: &[Q]) -> Vec<Vec<Q>> {
        let mut l = vec![vec![Q::zero(); self.n]; self.n];
        for e in &self.entries {
            if !x[e.a].is_zero() {
                l[e.c][e.b] += &e.t * &x[e.a];
            }
        }
        for (row, s) in l.iter_mut().zip(&self.out_scale) {
            row.iter_mut().for_each(|v| *v *= s);
        }
        l
    }

    /// `W·L_x` is symmetric.
    pub fn is_self_adjoint(&self, l: &[Vec<Q>]) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| &l[i][j] * &self.w[i] == &l[j][i] * &self.w[j]))
    }

    /// `τ(x, y) = trace(L_x L_y)`.
    pub fn generic_trace_form(&self, x: &[Q], y: &[Q]) -> Result<Q> {
        let lx = self.mult_operator(x)?;
        let ly = self.mult_operator(y)?;
        let mut t = Q::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                if !lx[i][j].is_zero() && !ly[j][i].is_zero() {
                    t += &lx[i][j] * &ly[j][i];
                }
            }
        }
        Ok(t)
    }

    /// `⟨x∘y, z⟩ - ⟨x, y∘z⟩`.
    pub fn weak_associativity_defect(&self, x: &[Q], y: &[Q], z: &[Q]) -> Result<Q> {
        let xy = self.multiply(x, y)?;
        let yz = self.multiply(y, z)?;
        Ok(self.inner_unchecked(&xy, z) - self.inner_unchecked(x, &yz))
    }

    /// Dimension of the span of all products `eᵢ∘eⱼ`.
    pub fn multiplication_rank(&self) -> usize {
        let mut rows: Vec<Vec<Q>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        let mut products = std::collections::BTreeMap::<(usize, usize), Vec<Q>>::new();
        for e in &self.entries {
            let (i, j) = (e.a.min(e.b), e.a.max(e.b));
            let v = products.entry((i, j)).or_insert_with(|| vec![Q::zero(); self.n]);
            if e.a == i {
                v[e.c] += &e.t * &self.out_scale[e.c];
            }
        }
        for mut v in products.into_values() {
            for (row, &p) in rows.iter().zip(&pivots) {
                if !v[p].is_zero() {
                    let f = &v[p] / &row[p];
                    for (a, b) in v.iter_mut().zip(row) {
                        *a -= &f * b;
                    }
                }
            }
            if let Some(p) = v.iter().position(|c| !c.is_zero()) {
                rows.push(v);
                pivots.push(p);
                if rows.len() == self.n {
                    break;
                }
            }
        }
        rows.len()
    }

    /// Both sides of `⟨x²,x²⟩ trace L_x - ⟨x²,x³⟩ = (2/3)θ⟨x,x⟩⟨x²,x⟩`.
    pub fn hsiang_sides(&self, x: &[Q], theta: &Q) -> Result<(Q, Q)> {
        ensure_len(self.n, x.len())?;
        let x2 = self.multiply_unchecked(x, x);
        let x3 = self.multiply_unchecked(&x2, x);
        let trace: Q = self.mult_operator_unchecked(x).iter().enumerate().map(|(i, r)| r[i].clone()).sum();
        let lhs = self.inner_unchecked(&x2, &x2) * trace - self.inner_unchecked(&x2, &x3);
        let rhs = theta * Q::new(2.into(), 3.into()) * self.inner_unchecked(x, x) * self.inner_unchecked(&x2, x);
        Ok((lhs, rhs))
    }

    /// Largest `|LHS - RHS|` of the Hsiang identity over random rational points.
    pub fn check_hsiang_identity(&self, theta: &Q, trials: usize, seed: u64) -> Q {
        let mut rng = stream_rng(seed, 0);
        let mut worst = Q::zero();
        for _ in 0..trials {
            let x = random_rational_vec(&mut rng, self.n, 9, 4);
            let (l, r) = self.hsiang_sides(&x, theta).expect("length matches");
            let d = (l - r).abs();
            if d > worst {
                worst = d;
            }
        }
        worst
    }

    pub fn to_float(&self) -> FloatAlgebra {
        let sqrt_w: Vec<f64> = self.w.iter().map(|v| to_f64(v).sqrt()).collect();
        let entries = self
            .entries
            .iter()
            .map(|e| (e.a, e.b, e.c, 6.0 * to_f64(&e.t) / (sqrt_w[e.a] * sqrt_w[e.b] * sqrt_w[e.c])))
            .collect();
        FloatAlgebra { n: self.n, entries, sqrt_w }
    }
}

/// Default bins of the Peirce spectrum and matching tolerance.
pub const DEFAULT_BIN_TOL: f64 = 1e-6;
pub const DEDUP_DISTANCE: f64 = 1e-6;
/// Largest `|c∘c - c|` accepted by [`FloatAlgebra::peirce`].
pub const IDEMPOTENT_TOL: f64 = 1e-9;

#[derive(Clone, Debug, Serialize)]
pub struct PeirceData {
    /// The idempotent in the form's coordinates.
    pub c: Vec<f64>,
    pub length_sq: f64,
    /// Eigenvalues of `L_c`, ascending, with repetition.
    pub spectrum: Vec<f64>,
    /// Multiplicities at `-1`, `-½` and `½`.
    pub triple: (usize, usize, usize),
    pub unit_multiplicity: usize,
    pub unbinned: Vec<f64>,
    pub residual: f64,
}

impl PeirceData {
    /// Binned cleanly with a simple eigenvalue 1, so that `n = 1 + n₁ + n₂ + n₃`.
    pub fn is_clean(&self) -> bool {
        self.unbinned.is_empty() && self.unit_multiplicity == 1
    }
}

/// `V(u)` in orthonormal coordinates with `f64` arithmetic. Entries hold `6T`.
#[derive(Clone, Debug)]
pub struct FloatAlgebra {
    n: usize,
    entries: Vec<(usize, usize, usize, f64)>,
    sqrt_w: Vec<f64>,
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

impl FloatAlgebra {
    pub fn new(form: &CubicForm) -> Self {
        MetrisedAlgebra::new(form).to_float()
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn to_orthonormal(&self, x: &[f64]) -> Vec<f64> {
        x.iter().zip(&self.sqrt_w).map(|(v, s)| v * s).collect()
    }

    fn to_form_coords(&self, y: &[f64]) -> Vec<f64> {
        y.iter().zip(&self.sqrt_w).map(|(v, s)| v / s).collect()
    }

    fn value(&self, y: &[f64]) -> f64 {
        self.entries.iter().map(|&(a, b, c, t)| t * y[a] * y[b] * y[c]).sum::<f64>() / 6.0
    }

    fn square(&self, y: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.n];
        for &(a, b, c, t) in &self.entries {
            out[c] += t * y[a] * y[b];
        }
        out
    }

    fn operator(&self, y: &[f64]) -> DMatrix<f64> {
        let mut l = DMatrix::zeros(self.n, self.n);
        for &(a, b, c, t) in &self.entries {
            l[(c, b)] += t * y[a];
        }
        l
    }

    /// Projected gradient ascent of `s·u` on the unit sphere, `s` the sign of
    /// `u` at the start; returns the stationary point.
    fn ascend(&self, mut y: Vec<f64>) -> Vec<f64> {
        let s = if self.value(&y) < 0.0 { -1.0 } else { 1.0 };
        let mut f = s * self.value(&y);
        let mut step = 1.0;
        for _ in 0..5000 {
            // ∇u = ½ y∘y in orthonormal coordinates.
            let g: Vec<f64> = self.square(&y).iter().map(|v| 0.5 * s * v).collect();
            let radial: f64 = g.iter().zip(&y).map(|(a, b)| a * b).sum();
            let tangent: Vec<f64> = g.iter().zip(&y).map(|(a, b)| a - radial * b).collect();
            if norm(&tangent) < 1e-10 * radial.abs().max(1e-300) {
                break;
            }
            loop {
                let mut cand: Vec<f64> = y.iter().zip(&tangent).map(|(a, b)| a + step * b).collect();
                let r = norm(&cand);
                cand.iter_mut().for_each(|v| *v /= r);
                let fc = s * self.value(&cand);
                if fc > f {
                    y = cand;
                    f = fc;
                    step *= 1.5;
                    break;
                }
                step *= 0.5;
                if step < 1e-14 {
                    return y;
                }
            }
        }
        y
    }

    /// Newton iteration on `c∘c - c = 0` with the pseudo-inverse of `2L_c - I`.
    fn polish(&self, mut c: Vec<f64>) -> Vec<f64> {
        let residual = |c: &[f64]| -> Vec<f64> { self.square(c).iter().zip(c).map(|(a, b)| a - b).collect() };
        let mut r = residual(&c);
        for _ in 0..50 {
            let rn = norm(&r);
            if rn < 1e-15 * norm(&c).max(1.0) {
                break;
            }
            let mut j = self.operator(&c) * 2.0;
            for i in 0..self.n {
                j[(i, i)] -= 1.0;
            }
            let Ok(pinv) = j.pseudo_inverse(1e-9) else { break };
            let delta = pinv * DVector::from_column_slice(&r);
            let cand: Vec<f64> = c.iter().zip(delta.iter()).map(|(a, d)| a - d).collect();
            let rc = residual(&cand);
            if norm(&rc) >= rn {
                break;
            }
            c = cand;
            r = rc;
        }
        c
    }

    /// One restart: random start from stream `(seed, restart)`, ascent,
    /// rescale `c = y/(2λ)` with `λ = 3u(y)`, Newton refinement.
    fn idempotent_from(&self, seed: u64, restart: u64) -> Option<Vec<f64>> {
        let mut rng = stream_rng(seed, restart);
        let start = random_unit(&mut rng, self.n);
        let y = self.ascend(start);
        let lambda = 3.0 * self.value(&y);
        if lambda.abs() < 1e-12 {
            return None;
        }
        // In orthonormal coordinates y∘y = 2∇u(y) = 2λy, so y/(2λ) is idempotent.
        let c: Vec<f64> = y.iter().map(|v| v / (2.0 * lambda)).collect();
        let c = self.polish(c);
        let res = norm(&self.square(&c).iter().zip(&c).map(|(a, b)| a - b).collect::<Vec<_>>());
        (res < IDEMPOTENT_TOL).then_some(c)
    }

    /// Idempotents from `restarts` independent starts, deduplicated at
    /// distance [`DEDUP_DISTANCE`] and sorted, each with its Peirce data.
    pub fn find_idempotents(&self, restarts: usize, seed: u64, tol: f64) -> Vec<PeirceData> {
        let mut found: Vec<Vec<f64>> =
            (0..restarts as u64).into_par_iter().filter_map(|r| self.idempotent_from(seed, r)).collect();
        found.sort_by(|a, b| {
            a.iter().zip(b).map(|(x, y)| x.total_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
        });
        let mut distinct: Vec<Vec<f64>> = Vec::new();
        for c in found {
            if distinct.iter().all(|d| norm(&d.iter().zip(&c).map(|(a, b)| a - b).collect::<Vec<_>>()) >= DEDUP_DISTANCE) {
                distinct.push(c);
            }
        }
        distinct.iter().map(|c| self.peirce_orthonormal(c, tol)).collect()
    }

    /// Peirce data of an idempotent given in the form's coordinates.
    pub fn peirce(&self, c: &[f64], tol: f64) -> Result<PeirceData> {
        ensure_len(self.n, c.len())?;
        let y = self.to_orthonormal(c);
        let data = self.peirce_orthonormal(&y, tol);
        if !(data.residual < IDEMPOTENT_TOL * norm(&y).max(1.0)) {
            return Err(Error::invalid(format!("not an idempotent: |c∘c - c| = {:e}", data.residual)));
        }
        Ok(data)
    }

    fn peirce_orthonormal(&self, y: &[f64], tol: f64) -> PeirceData {
        let residual = norm(&self.square(y).iter().zip(y).map(|(a, b)| a - b).collect::<Vec<_>>());
        let l = self.operator(y);
        let sym = (&l + l.transpose()) * 0.5;
        let mut spectrum: Vec<f64> = SymmetricEigen::new(sym).eigenvalues.iter().copied().collect();
        spectrum.sort_by(f64::total_cmp);
        let count = |target: f64| spectrum.iter().filter(|v| (*v - target).abs() <= tol).count();
        let unbinned =
            spectrum.iter().copied().filter(|v| [1.0, -1.0, -0.5, 0.5].iter().all(|t| (v - t).abs() > tol)).collect();
        PeirceData {
            c: self.to_form_coords(y),
            length_sq: y.iter().map(|v| v * v).sum(),
            triple: (count(-1.0), count(-0.5), count(0.5)),
            unit_multiplicity: count(1.0),
            spectrum,
            unbinned,
            residual,
        }
    }
}
