//! Exact and randomized decision procedures for the differential identities
//! of cubic forms, and the eigencubic classifier.
//!
//! All operators are taken with respect to the form's inner product
//! `⟨x, y⟩ = Σ wᵢxᵢyᵢ`: with `W = diag(w)`, `g = ∂u` and `H = ∂²u`,
//!
//! - `|Du|² = gᵀW⁻¹g`, `Δu = tr(W⁻¹H)`, `½ Du·D|Du|² = gᵀW⁻¹HW⁻¹g`,
//! - the trace identities use the self-adjoint operator `W⁻¹H`.
//!
//! For the Euclidean product these are the usual formulas.
//!
//! Every identity has the shape `P = λ·R` for a known polynomial `R` and an
//! unknown constant `λ` entering linearly. The constant is read off one
//! monomial (exact mode) or one sample point (random mode) where `R` does not
//! vanish, and `P - λR` is then tested for zero. Because `λ` enters
//! linearly there is at most one candidate, so this decides the identity.

use num_traits::{Signed, Zero};
use rand::Rng;
use serde::Serialize;

use crate::algebra::MetrisedAlgebra;
use crate::cubics::poly::{random_identity_test, schwartz_zippel_bound, Poly};
use crate::cubics::{CubicForm, TensorEntry};
use crate::error::{Error, Result};
use crate::rational::{random_int_point, random_unit, stream_rng, to_f64, Q};

/// Default number of random trials and sampling bound.
pub const DEFAULT_TRIALS: usize = 20;
pub const DEFAULT_BOUND: u64 = 1_000_000;
/// Largest dimension decided by full expansion under [`Mode::auto`].
pub const EXACT_MAX_DIM: usize = 15;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Expand every polynomial and compare coefficients.
    Exact,
    /// Schwartz–Zippel testing at integer points of `[0, bound)^n`.
    Random { trials: usize, bound: u64, seed: u64 },
}

impl Mode {
    /// Exact expansion up to [`EXACT_MAX_DIM`] variables, randomized above.
    pub fn auto(n: usize, seed: u64) -> Self {
        if n <= EXACT_MAX_DIM {
            Mode::Exact
        } else {
            Mode::Random { trials: DEFAULT_TRIALS, bound: DEFAULT_BOUND, seed }
        }
    }

    pub fn random(seed: u64) -> Self {
        Mode::Random { trials: DEFAULT_TRIALS, bound: DEFAULT_BOUND, seed }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Random { .. } => "random",
        }
    }
}

/// Result of fitting and testing `P = λR`.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityOutcome {
    pub constant: Option<Q>,
    pub mode: &'static str,
    /// Probability that a false identity passed; `None` in exact mode.
    pub error_bound: Option<f64>,
}

impl IdentityOutcome {
    pub fn holds(&self) -> bool {
        self.constant.is_some()
    }
}

/// Pointwise exact evaluation of first and second derivatives.
struct PointEval<'a> {
    form: &'a CubicForm,
    entries: Vec<TensorEntry>,
    w: Vec<Q>,
    winv: Vec<Q>,
}

impl<'a> PointEval<'a> {
    fn new(form: &'a CubicForm) -> Self {
        let w = form.weights();
        let winv = w.iter().map(|v| v.recip()).collect();
        Self { form, entries: form.tensor_entries(), w, winv }
    }

    fn n(&self) -> usize {
        self.form.dim()
    }

    fn grad(&self, x: &[Q]) -> Vec<Q> {
        let mut g = vec![Q::zero(); self.n()];
        for e in &self.entries {
            g[e.c] += &e.t * &x[e.a] * &x[e.b];
        }
        g.into_iter().map(|v| v * Q::from_integer(3.into())).collect()
    }

    /// `M = W⁻¹H` at `x`.
    fn operator(&self, x: &[Q]) -> Vec<Vec<Q>> {
        let n = self.n();
        let mut h = vec![vec![Q::zero(); n]; n];
        for e in &self.entries {
            h[e.b][e.c] += &e.t * &x[e.a];
        }
        for (b, row) in h.iter_mut().enumerate() {
            let s = &self.winv[b] * Q::from_integer(6.into());
            for v in row.iter_mut() {
                *v *= &s;
            }
        }
        h
    }

    fn norm_sq(&self, x: &[Q]) -> Q {
        x.iter().zip(&self.w).map(|(v, w)| v * v * w).sum()
    }

    fn grad_norm_sq(&self, g: &[Q]) -> Q {
        g.iter().zip(&self.winv).map(|(v, w)| v * v * w).sum()
    }

    /// `(|Du|²Δu - ½Du·D|Du|², |x|²u)` at `x`.
    fn radial(&self, x: &[Q]) -> (Q, Q) {
        let g = self.grad(x);
        let m = self.operator(x);
        let a = self.grad_norm_sq(&g);
        let lap: Q = (0..self.n()).map(|i| m[i][i].clone()).sum();
        // gᵀW⁻¹HW⁻¹g = (W⁻¹g)ᵀ H (W⁻¹g) = gᵀ M (W⁻¹ g)
        let wg: Vec<Q> = g.iter().zip(&self.winv).map(|(v, w)| v * w).collect();
        let mut b = Q::zero();
        for i in 0..self.n() {
            if g[i].is_zero() {
                continue;
            }
            let row: Q = m[i].iter().zip(&wg).map(|(p, q)| p * q).sum();
            b += &g[i] * row;
        }
        (a * lap - b, self.norm_sq(x) * self.form.eval_unchecked(x))
    }

    fn eiconal(&self, x: &[Q]) -> (Q, Q) {
        let r = self.norm_sq(x);
        (self.grad_norm_sq(&self.grad(x)), &r * &r)
    }

    fn trace2(&self, x: &[Q]) -> (Q, Q) {
        let m = self.operator(x);
        let n = self.n();
        let mut t = Q::zero();
        for i in 0..n {
            for j in 0..n {
                if !m[i][j].is_zero() {
                    t += &m[i][j] * &m[j][i];
                }
            }
        }
        (t, self.norm_sq(x))
    }

    fn trace3(&self, x: &[Q]) -> (Q, Q) {
        let m = self.operator(x);
        let m2 = mat_mul(&m, &m);
        let n = self.n();
        let mut t = Q::zero();
        for i in 0..n {
            for j in 0..n {
                if !m2[i][j].is_zero() {
                    t += &m2[i][j] * &m[j][i];
                }
            }
        }
        (t, self.form.eval_unchecked(x))
    }
}

fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = a.len();
    let mut out = vec![vec![Q::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// Symbolic derivatives with respect to the form's metric.
struct SymbolicDerivs {
    grad: Vec<Poly>,
    /// `W⁻¹H`, linear entries.
    op: Vec<Vec<Poly>>,
    winv: Vec<Q>,
    norm_sq: Poly,
}

impl SymbolicDerivs {
    fn new(form: &CubicForm) -> Self {
        let w = form.weights();
        let winv: Vec<Q> = w.iter().map(|v| v.recip()).collect();
        let grad = form.gradient();
        let op = grad
            .iter()
            .enumerate()
            .map(|(b, g)| (0..form.dim()).map(|c| g.derivative(c).scale(&winv[b])).collect())
            .collect();
        Self { grad, op, winv, norm_sq: Poly::weighted_norm_sq(&w) }
    }

    fn grad_norm_sq(&self) -> Poly {
        let mut acc = Poly::zero(self.norm_sq.nvars());
        for (g, w) in self.grad.iter().zip(&self.winv) {
            acc = &acc + &(g * g).scale(w);
        }
        acc
    }

    fn laplacian(&self) -> Poly {
        let mut acc = Poly::zero(self.norm_sq.nvars());
        for (i, row) in self.op.iter().enumerate() {
            acc = &acc + &row[i];
        }
        acc
    }

    fn trace_power(&self, k: usize) -> Poly {
        let n = self.op.len();
        let mut power = self.op.clone();
        for _ in 1..k - 1 {
            let mut next = vec![vec![Poly::zero(n); n]; n];
            for i in 0..n {
                for m in 0..n {
                    if power[i][m].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        if !self.op[m][j].is_zero() {
                            next[i][j] = &next[i][j] + &(&power[i][m] * &self.op[m][j]);
                        }
                    }
                }
            }
            power = next;
        }
        let mut acc = Poly::zero(n);
        for i in 0..n {
            for j in 0..n {
                if !power[i][j].is_zero() && !self.op[j][i].is_zero() {
                    acc = &acc + &(&power[i][j] * &self.op[j][i]);
                }
            }
        }
        acc
    }
}

fn fit_exact(p: &Poly, r: &Poly) -> Option<Q> {
    let (m, rc) = r.terms().next()?;
    let lambda = p.coeff(m) / rc;
    (p - &r.scale(&lambda)).is_zero().then_some(lambda)
}

fn fit_random<F>(n: usize, degree: usize, trials: usize, bound: u64, seed: u64, eval: F) -> Result<IdentityOutcome>
where
    F: Fn(&[Q]) -> (Q, Q),
{
    let mut rng = stream_rng(seed, 1);
    let mut lambda = None;
    for _ in 0..64 {
        let x = random_int_point(&mut rng, n, bound);
        let (p, r) = eval(&x);
        if !r.is_zero() {
            lambda = Some(p / r);
            break;
        }
    }
    let Some(lambda) = lambda else {
        return Ok(IdentityOutcome { constant: None, mode: "random", error_bound: None });
    };
    let test = random_identity_test(n, degree, trials, bound, seed, |x| {
        let (p, r) = eval(x);
        p - r * &lambda
    })?;
    Ok(if test.zero {
        IdentityOutcome { constant: Some(lambda), mode: "random", error_bound: Some(test.error_bound) }
    } else {
        IdentityOutcome { constant: None, mode: "random", error_bound: None }
    })
}

fn decide<E, F>(form: &CubicForm, mode: &Mode, degree: usize, exact: E, eval: F) -> Result<IdentityOutcome>
where
    E: FnOnce(&SymbolicDerivs) -> (Poly, Poly),
    F: Fn(&PointEval<'_>, &[Q]) -> (Q, Q),
{
    match mode {
        Mode::Exact => {
            let (p, r) = exact(&SymbolicDerivs::new(form));
            Ok(IdentityOutcome { constant: fit_exact(&p, &r), mode: "exact", error_bound: None })
        }
        Mode::Random { trials, bound, seed } => {
            let pe = PointEval::new(form);
            fit_random(form.dim(), degree, *trials, *bound, *seed, |x| eval(&pe, x))
        }
    }
}

/// `Δu ≡ 0`. The Laplacian is linear, so this is always decided exactly.
pub fn check_harmonic(form: &CubicForm) -> bool {
    laplacian(form).is_zero()
}

/// The linear polynomial `Δu`.
pub fn laplacian(form: &CubicForm) -> Poly {
    let winv: Vec<Q> = form.weights().iter().map(|w| w.recip()).collect();
    let p = form.to_poly();
    let mut acc = Poly::zero(form.dim());
    for (i, w) in winv.iter().enumerate() {
        acc = &acc + &p.derivative(i).derivative(i).scale(w);
    }
    acc
}

/// The θ with `|Du|²Δu - ½Du·D|Du|² = θ|x|²u`, if one exists.
pub fn check_radial(form: &CubicForm, mode: &Mode) -> Result<IdentityOutcome> {
    if form.is_zero() {
        return Err(Error::invalid("the radial equation is undefined for the zero form"));
    }
    decide(
        form,
        mode,
        5,
        |s| {
            let a = s.grad_norm_sq();
            let lap = s.laplacian();
            let wg: Vec<Poly> = s.grad.iter().zip(&s.winv).map(|(g, w)| g.scale(w)).collect();
            let mut b = Poly::zero(form.dim());
            for (i, gi) in s.grad.iter().enumerate() {
                if gi.is_zero() {
                    continue;
                }
                let mut row = Poly::zero(form.dim());
                for (m, wgj) in s.op[i].iter().zip(&wg) {
                    if !m.is_zero() && !wgj.is_zero() {
                        row = &row + &(m * wgj);
                    }
                }
                b = &b + &(gi * &row);
            }
            (&(&a * &lap) - &b, &s.norm_sq * &form.to_poly())
        },
        |pe, x| pe.radial(x),
    )
}

/// The κ with `|Du|² = κ|x|⁴`; the degenerate `κ = 0` (zero form) is reported as none.
pub fn check_eiconal(form: &CubicForm, mode: &Mode) -> Result<IdentityOutcome> {
    let mut out = decide(form, mode, 4, |s| (s.grad_norm_sq(), &s.norm_sq * &s.norm_sq), |pe, x| pe.eiconal(x))?;
    if out.constant.as_ref().is_some_and(|k| !k.is_positive()) {
        out.constant = None;
    }
    Ok(out)
}

/// The c with `trace(D²u)² = c|x|²`.
pub fn trace_identity_quadratic(form: &CubicForm, mode: &Mode) -> Result<IdentityOutcome> {
    decide(form, mode, 2, |s| (s.trace_power(2), s.norm_sq.clone()), |pe, x| pe.trace2(x))
}

/// The a with `trace(D²u)³ = a·u`.
pub fn trace_identity_cubic(form: &CubicForm, mode: &Mode) -> Result<IdentityOutcome> {
    if form.is_zero() {
        return Ok(IdentityOutcome { constant: None, mode: mode.label(), error_bound: None });
    }
    decide(form, mode, 3, |s| (s.trace_power(3), form.to_poly()), |pe, x| pe.trace3(x))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Label {
    NotEigencubic,
    Trivial,
    CliffordType,
    ExceptionalOrMutant,
}

impl Label {
    pub fn as_str(&self) -> &'static str {
        match self {
            Label::NotEigencubic => "not-eigencubic",
            Label::Trivial => "trivial",
            Label::CliffordType => "clifford-type",
            Label::ExceptionalOrMutant => "exceptional-or-mutant",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassificationRecord {
    pub is_trivial: bool,
    pub is_harmonic: bool,
    pub radial_theta: Option<Q>,
    pub quad_trace: Option<Q>,
    pub cubic_trace: Option<Q>,
    pub multiplication_rank: usize,
    pub label: Label,
    pub mode: &'static str,
    /// Largest error bound among the randomized checks, if any ran.
    pub error_bound: Option<f64>,
}

/// Runs every check and labels the form: no θ means not an eigencubic; a
/// multiplication of rank at most one means trivial; the quadratic trace
/// identity separates exceptional (or mutant) forms from Clifford type.
pub fn classify(form: &CubicForm, mode: &Mode) -> Result<ClassificationRecord> {
    let rank = MetrisedAlgebra::new(form).multiplication_rank();
    let radial = if form.is_zero() { None } else { Some(check_radial(form, mode)?) };
    let quad = trace_identity_quadratic(form, mode)?;
    let cubic = trace_identity_cubic(form, mode)?;
    let radial_theta = radial.as_ref().and_then(|r| r.constant.clone());
    let label = match (&radial_theta, rank <= 1, quad.constant.is_some()) {
        (None, _, _) => Label::NotEigencubic,
        (Some(_), true, _) => Label::Trivial,
        (Some(_), false, true) => Label::ExceptionalOrMutant,
        (Some(_), false, false) => Label::CliffordType,
    };
    let error_bound = [radial.as_ref().and_then(|r| r.error_bound), quad.error_bound, cubic.error_bound]
        .into_iter()
        .flatten()
        .reduce(f64::max);
    Ok(ClassificationRecord {
        is_trivial: rank <= 1,
        is_harmonic: check_harmonic(form),
        radial_theta,
        quad_trace: quad.constant,
        cubic_trace: cubic.constant,
        multiplication_rank: rank,
        label,
        mode: mode.label(),
        error_bound,
    })
}

/// Floating-point derivatives in the form's own coordinates.
struct FloatEval {
    n: usize,
    entries: Vec<(usize, usize, usize, f64)>,
    w: Vec<f64>,
}

impl FloatEval {
    fn new(form: &CubicForm, scale: f64) -> Self {
        let entries = form.tensor_entries().into_iter().map(|e| (e.a, e.b, e.c, to_f64(&e.t) * scale)).collect();
        Self { n: form.dim(), entries, w: form.weights_f64() }
    }

    fn value(&self, x: &[f64]) -> f64 {
        self.entries.iter().map(|&(a, b, c, t)| t * x[a] * x[b] * x[c]).sum()
    }

    fn grad_hess(&self, x: &[f64]) -> (Vec<f64>, Vec<Vec<f64>>) {
        let mut g = vec![0.0; self.n];
        let mut h = vec![vec![0.0; self.n]; self.n];
        for &(a, b, c, t) in &self.entries {
            g[c] += 3.0 * t * x[a] * x[b];
            h[b][c] += 6.0 * t * x[a];
        }
        (g, h)
    }

    /// `(H_mean, |Du|)` with `H_mean = (|Du|²Δu - ½Du·D|Du|²)/|Du|³`.
    fn curvature(&self, x: &[f64]) -> (f64, f64) {
        let (g, h) = self.grad_hess(x);
        let wg: Vec<f64> = g.iter().zip(&self.w).map(|(v, w)| v / w).collect();
        let a: f64 = g.iter().zip(&wg).map(|(p, q)| p * q).sum();
        let lap: f64 = (0..self.n).map(|i| h[i][i] / self.w[i]).sum();
        let b: f64 = (0..self.n).map(|i| wg[i] * h[i].iter().zip(&wg).map(|(p, q)| p * q).sum::<f64>()).sum();
        let norm = a.sqrt();
        ((a * lap - b) / (a * norm), norm)
    }
}

/// Mean curvature of the level set of `u` through `x`, in the form's metric.
pub fn mean_curvature(form: &CubicForm, x: &[f64]) -> Result<f64> {
    crate::error::ensure_len(form.dim(), x.len())?;
    let (h, norm) = FloatEval::new(form, 1.0).curvature(x);
    if norm == 0.0 || !h.is_finite() {
        return Err(Error::invalid("gradient vanishes; mean curvature undefined"));
    }
    Ok(h)
}

/// Gradient threshold for accepting a cone point, after scaling `u` so that
/// its largest coefficient in orthonormal coordinates is one and `|x| = 1`.
pub const DEFAULT_GRADIENT_THRESHOLD: f64 = 0.1;

#[derive(Clone, Debug, Serialize)]
pub struct ConePoint {
    pub x: Vec<f64>,
    pub curvature: f64,
    pub gradient_norm: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConeSample {
    pub points: Vec<ConePoint>,
    pub max_abs_curvature: f64,
    /// Zero-level points dropped because the gradient fell below the threshold.
    pub rejected: usize,
    /// Rays that found no sign change of `u`.
    pub failed_rays: usize,
}

/// Samples regular points of `{u = 0}` on the unit sphere by bisection along
/// chords between points where `u` has opposite signs. Ray `r` draws from
/// the independent stream `(seed, r)`.
pub fn sample_cone(form: &CubicForm, count: usize, seed: u64, threshold: f64) -> Result<ConeSample> {
    if form.is_zero() {
        return Err(Error::invalid("the zero form has no cone"));
    }
    let w = form.weights_f64();
    let sqrt_w: Vec<f64> = w.iter().map(|v| v.sqrt()).collect();
    // Largest coefficient of u in orthonormal coordinates y = W^{1/2}x.
    let scale = form
        .terms()
        .iter()
        .map(|([i, j, k], c)| to_f64(c).abs() / (sqrt_w[*i] * sqrt_w[*j] * sqrt_w[*k]))
        .fold(0.0, f64::max);
    let eval = FloatEval::new(form, 1.0 / scale);
    let n = form.dim();
    let to_x = |y: &[f64]| -> Vec<f64> { y.iter().zip(&sqrt_w).map(|(v, s)| v / s).collect() };

    let mut sample = ConeSample { points: Vec::new(), max_abs_curvature: 0.0, rejected: 0, failed_rays: 0 };
    let max_rays = 50 * count.max(1) as u64;
    for ray in 0..max_rays {
        if sample.points.len() >= count {
            break;
        }
        let mut rng = stream_rng(seed, ray);
        let Some((mut lo, mut hi)) = bracket(&mut rng, n, |y| eval.value(&to_x(y))) else {
            sample.failed_rays += 1;
            continue;
        };
        let f_lo = eval.value(&to_x(&lo));
        for _ in 0..200 {
            let mid: Vec<f64> = lo.iter().zip(&hi).map(|(a, b)| 0.5 * (a + b)).collect();
            let f_mid = eval.value(&to_x(&mid));
            if f_mid == 0.0 {
                lo = mid.clone();
                hi = mid;
                break;
            }
            if (f_mid > 0.0) == (f_lo > 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let mut y: Vec<f64> = lo.iter().zip(&hi).map(|(a, b)| 0.5 * (a + b)).collect();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        y.iter_mut().for_each(|v| *v /= norm);
        let x = to_x(&y);
        let (h, grad_norm) = eval.curvature(&x);
        if grad_norm <= threshold || !h.is_finite() {
            sample.rejected += 1;
            continue;
        }
        sample.max_abs_curvature = sample.max_abs_curvature.max(h.abs());
        sample.points.push(ConePoint { x, curvature: h, gradient_norm: grad_norm });
    }
    Ok(sample)
}

fn bracket<R: Rng, F: Fn(&[f64]) -> f64>(rng: &mut R, n: usize, f: F) -> Option<(Vec<f64>, Vec<f64>)> {
    let a = random_unit(rng, n);
    let fa = f(&a);
    for _ in 0..64 {
        let b = random_unit(rng, n);
        let fb = f(&b);
        if fa * fb < 0.0 {
            return Some((a, b));
        }
    }
    None
}

/// `(degree / bound)^trials` for the radial residual, for reporting.
pub fn radial_error_bound(trials: usize, bound: u64) -> f64 {
    schwartz_zippel_bound(5, bound, trials)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubics::catalog;
    use crate::rational::{frac, int};

    fn dim3() -> CubicForm {
        CubicForm::from_terms(3, [([0, 1, 1], int(1)), ([0, 2, 2], int(-1))]).unwrap()
    }

    fn cube() -> CubicForm {
        catalog::trivial_cubic(3, int(1)).unwrap()
    }

    fn both_modes() -> [Mode; 2] {
        [Mode::Exact, Mode::random(9)]
    }

    #[test]
    fn harmonicity() {
        assert!(!check_harmonic(&cube()));
        assert!(check_harmonic(&dim3()));
    }

    #[test]
    fn radial_constants() {
        for mode in both_modes() {
            assert_eq!(check_radial(&cube(), &mode).unwrap().constant, Some(int(0)));
            assert_eq!(check_radial(&dim3(), &mode).unwrap().constant, Some(int(-8)));
            let sum_cubes = CubicForm::from_terms(2, [([0, 0, 0], int(1)), ([1, 1, 1], int(1))]).unwrap();
            assert_eq!(check_radial(&sum_cubes, &mode).unwrap().constant, None);
        }
        assert!(check_radial(&CubicForm::zero(2), &Mode::Exact).is_err());
        let r = check_radial(&dim3(), &Mode::random(1)).unwrap();
        assert!(r.error_bound.unwrap() <= radial_error_bound(20, 1_000_000) * (1.0 + 1e-12));
    }

    #[test]
    fn radial_residual_of_sum_of_cubes() {
        // 54xy(x³ + y³) is what remains of the left side for x³ + y³.
        let u = CubicForm::from_terms(2, [([0, 0, 0], int(1)), ([1, 1, 1], int(1))]).unwrap();
        let pe = PointEval::new(&u);
        for (x, y) in [(1, 2), (3, -1), (2, 5)] {
            let (lhs, _) = pe.radial(&[int(x), int(y)]);
            assert_eq!(lhs, int(54 * x * y * (x * x * x + y * y * y)));
        }
    }

    #[test]
    fn eiconal() {
        for mode in both_modes() {
            assert_eq!(check_eiconal(&dim3(), &mode).unwrap().constant, None);
            assert_eq!(check_eiconal(&CubicForm::zero(3), &mode).unwrap().constant, None);
        }
    }

    #[test]
    fn trace_identities() {
        for mode in both_modes() {
            assert_eq!(trace_identity_quadratic(&dim3(), &mode).unwrap().constant, Some(int(8)));
            assert_eq!(trace_identity_cubic(&dim3(), &mode).unwrap().constant, Some(int(24)));
            assert_eq!(trace_identity_cubic(&cube(), &mode).unwrap().constant, Some(int(216)));
            let q1 = catalog::build("clifford-q1").unwrap();
            assert_eq!(trace_identity_quadratic(&q1, &mode).unwrap().constant, None);
        }
    }

    #[test]
    fn classification() {
        let c = classify(&cube(), &Mode::Exact).unwrap();
        assert_eq!((c.label, c.radial_theta.clone()), (Label::Trivial, Some(int(0))));
        let q1 = classify(&catalog::build("clifford-q1").unwrap(), &Mode::Exact).unwrap();
        assert_eq!(q1.label, Label::CliffordType);
        let sum_cubes = CubicForm::from_terms(2, [([0, 0, 0], int(1)), ([1, 1, 1], int(1))]).unwrap();
        assert_eq!(classify(&sum_cubes, &Mode::Exact).unwrap().label, Label::NotEigencubic);
    }

    #[test]
    fn scale_covariance_of_theta() {
        let t = frac(-3, 7);
        let scaled = dim3().scale(&t);
        assert_eq!(check_radial(&scaled, &Mode::Exact).unwrap().constant, Some(int(-8) * &t * &t));
    }

    #[test]
    fn mean_curvature_examples() {
        let u = dim3();
        assert_eq!(mean_curvature(&u, &[0.0, 1.0, 2.0]).unwrap(), 0.0);
        let h = mean_curvature(&u, &[1.0, 1.0, 0.0]).unwrap();
        assert!((h - (-16.0 * 5f64.powf(-1.5))).abs() < 1e-14);
        assert!(mean_curvature(&u, &[0.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn cone_sampling_is_reproducible() {
        let u = dim3();
        let a = sample_cone(&u, 20, 5, DEFAULT_GRADIENT_THRESHOLD).unwrap();
        let b = sample_cone(&u, 20, 5, DEFAULT_GRADIENT_THRESHOLD).unwrap();
        assert_eq!(a.points.len(), 20);
        assert_eq!(a.points.iter().map(|p| p.x.clone()).collect::<Vec<_>>(), b.points.iter().map(|p| p.x.clone()).collect::<Vec<_>>());
        assert!(a.max_abs_curvature < 1e-6);
        for p in &a.points {
            assert!(u.eval_f64(&p.x).abs() < 1e-12);
        }
    }
}
