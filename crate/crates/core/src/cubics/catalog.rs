//! Constructors for the cubic forms under study.
//!
//! Forms built from Jordan algebras use coordinates in an orthogonal
//! rational basis and carry the inner product `½ trace(A∘B)` as metric
//! weights. With that normalisation the off-diagonal units have length one,
//! so the Albert contraction is Euclidean in its natural coordinates.

use num_traits::Zero;

use super::form::CubicForm;
use crate::clifford::CliffordSystem;
use crate::composition::{check_dim, CDElement};
use crate::error::{Error, Result};
use crate::jordan::{full_basis, imaginary_offdiag_basis, tracefree_basis, BasisElement, HermMat3};
use crate::rational::{frac, int, Q};

/// `a·x₁³` on `ℝⁿ`.
pub fn trivial_cubic(n: usize, a: Q) -> Result<CubicForm> {
    if n == 0 {
        return Err(Error::invalid("dimension must be positive"));
    }
    let labels = (1..=n).map(|i| format!("x{i}")).collect();
    Ok(CubicForm::from_terms(n, [([0, 0, 0], a)])?.with_coords(labels)?.with_name(format!("trivial-n{n}")))
}

/// `u(x, y) = Σᵢ xᵢ ⟨Aᵢy, y⟩` on `ℝ^{q+1} × ℝ^{2l}`, x-block first.
pub fn clifford_cubic(system: &CliffordSystem) -> Result<CubicForm> {
    if let Err(v) = system.verify() {
        return Err(Error::invalid(format!("not a Clifford system: {v}")));
    }
    // Only reachable for q = 0; anticommutation forces trace zero otherwise.
    if system.mats.iter().any(|a| (0..system.two_l).map(|i| a[i][i]).sum::<i64>() != 0) {
        return Err(Error::invalid("Clifford-type cubics need trace-free matrices"));
    }
    let m = system.q + 1;
    let n = m + system.two_l;
    let mut terms = Vec::new();
    for (i, a) in system.mats.iter().enumerate() {
        for (r, row) in a.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    terms.push(([i, m + r, m + c], int(v)));
                }
            }
        }
    }
    let labels = (0..m).map(|i| format!("x{i}")).chain((0..system.two_l).map(|i| format!("y{i}"))).collect();
    let form = CubicForm::from_terms(n, terms)?.with_coords(labels)?.with_name(format!("clifford-q{}", system.q));
    debug_assert!(crate::identities::check_radial(&form, &crate::identities::Mode::Exact)
        .is_ok_and(|r| r.constant == Some(int(-8))));
    Ok(form)
}

/// Symmetric tensor `T_ijk = s·⟨Bᵢ, Bⱼ∘B_k⟩` over a Jordan basis, with metric
/// weights `½⟨Bᵢ, Bᵢ⟩`.
fn jordan_trace_cubic(basis: &[BasisElement], s: Q) -> Result<CubicForm> {
    let n = basis.len();
    let products = pair_products(n, |j, k| basis[j].matrix.jordan_mul_unchecked(&basis[k].matrix));
    let form = CubicForm::from_symmetric_tensor(n, |i, j, k| {
        let p = &products[j][k - j];
        &s * basis[i].matrix.trace_form_unchecked(p)
    });
    form.with_metric(basis.iter().map(|b| &b.norm_sq / int(2)).collect())?
        .with_coords(basis.iter().map(|b| b.label.clone()).collect())
}

/// Upper-triangular table `out[j][k - j] = f(j, k)` for `j <= k`.
fn pair_products<T, F: Fn(usize, usize) -> T>(n: usize, f: F) -> Vec<Vec<T>> {
    (0..n).map(|j| (j..n).map(|k| f(j, k)).collect()).collect()
}

/// `u(z) = ⅙⟨z, z∘z⟩` on the trace-free part of `H₃(K_d)`; dimension `2 + 3d`.
pub fn cartan_cubic(d: usize) -> Result<CubicForm> {
    let basis = tracefree_basis(d)?;
    Ok(jordan_trace_cubic(&basis, frac(1, 6))?.with_name(format!("cartan-d{d}")))
}

/// Values `N(Bᵢ, Bⱼ, B_k)` of the polarized generic norm, looked up in any
/// index order.
struct NormTable {
    n: usize,
    values: Vec<Q>,
}

impl NormTable {
    fn new(basis: &[HermMat3]) -> Self {
        let n = basis.len();
        let traces: Vec<Q> = basis.iter().map(HermMat3::trace).collect();
        let pairs = pair_products(n, |j, k| basis[j].trace_form_unchecked(&basis[k]));
        let prods = pair_products(n, |j, k| basis[j].jordan_mul_unchecked(&basis[k]));
        let (third, sixth) = (frac(1, 3), frac(1, 6));
        let mut values = vec![Q::zero(); n * n * n];
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    // Expanded norm_trilinear with the products and pairings cached.
                    let cross = &traces[i] * &pairs[j][k - j] + &traces[j] * &pairs[i][k - i] + &traces[k] * &pairs[i][j - i];
                    let triple = &traces[i] * &traces[j] * &traces[k];
                    values[(i * n + j) * n + k] =
                        prods[i][j - i].trace_form_unchecked(&basis[k]) * &third + (triple - cross) * &sixth;
                }
            }
        }
        Self { n, values }
    }

    fn get(&self, i: usize, j: usize, k: usize) -> &Q {
        let mut idx = [i, j, k];
        idx.sort_unstable();
        &self.values[(idx[0] * self.n + idx[1]) * self.n + idx[2]]
    }
}

/// `u = (1/12)⟨z#, 3z̄ - z⟩ = ¼(3N(z, z, z̄) - N(z))` on all of `H₃(K_d)`,
/// `d ∈ {2, 4, 8}`, where `z#` is the Freudenthal adjoint and `z̄` is
/// [`HermMat3::involution`]; dimension `3 + 3d`. On trace-free `z` the
/// pairing `⟨z#, w⟩` agrees with `⟨z², w⟩` up to a multiple of `tr w`.
pub fn involution_cubic(d: usize) -> Result<CubicForm> {
    check_dim(d)?;
    if d == 1 {
        return Err(Error::invalid("the involution family needs d in {2, 4, 8}"));
    }
    let basis = full_basis(d)?;
    let n = basis.len();
    // Every basis element is an eigenvector of the involution, so
    // N(a, b, c̄) = s_c N(a, b, c) with s_c = ±1.
    let mut signs = Vec::with_capacity(n);
    for b in &basis {
        let bar = b.matrix.involution();
        if bar == b.matrix {
            signs.push(1i64);
        } else if bar == b.matrix.scale(&int(-1)) {
            signs.push(-1);
        } else {
            return Err(Error::invalid("basis is not adapted to the involution"));
        }
    }
    let table = NormTable::new(&basis.iter().map(|b| b.matrix.clone()).collect::<Vec<_>>());
    let form = CubicForm::from_symmetric_tensor(n, |i, j, k| {
        table.get(i, j, k) * frac(signs[i] + signs[j] + signs[k] - 1, 4)
    });
    Ok(form
        .with_metric(basis.iter().map(|b| &b.norm_sq / int(2)).collect())?
        .with_coords(basis.iter().map(|b| b.label.clone()).collect())?
        .with_name(format!("involution-d{d}")))
}

/// `u(z) = re⟨z, z#⟩ = 3 re N(z)` on `H₃(K_d) ⊗ ℂ`, with `N` extended
/// complex-linearly and the real part block first; dimension `2(3 + 3d)`.
pub fn complexified_cubic(d: usize) -> Result<CubicForm> {
    let real = full_basis(d)?;
    let m = real.len();
    let table = NormTable::new(&real.iter().map(|b| b.matrix.clone()).collect::<Vec<_>>());
    // re(i^k) for k imaginary factors: 1, 0, -1, 0.
    let form = CubicForm::from_symmetric_tensor(2 * m, |i, j, k| {
        let imaginary = [i, j, k].iter().filter(|&&v| v >= m).count();
        match imaginary {
            0 => table.get(i, j, k) * int(3),
            2 => table.get(i % m, j % m, k % m) * int(-3),
            _ => Q::zero(),
        }
    });
    let weights = real.iter().chain(&real).map(|b| &b.norm_sq / int(2)).collect();
    let labels =
        real.iter().map(|b| format!("re.{}", b.label)).chain(real.iter().map(|b| format!("im.{}", b.label))).collect();
    Ok(form.with_metric(weights)?.with_coords(labels)?.with_name(format!("complexified-d{d}")))
}

/// `u = ⅙⟨z, z∘z⟩` on `H₃(K_8) ⊖ H₃(K_1)`: zero diagonal and purely
/// imaginary off-diagonal octonions, ordered `x.e1..x.e7, y.e1.., z.e1..`.
pub fn albert_contraction_cubic() -> Result<CubicForm> {
    let basis = imaginary_offdiag_basis();
    Ok(jordan_trace_cubic(&basis, frac(1, 6))?.with_name("albert21"))
}

/// `u = re(w₁w₂w₃)` for `w₁, w₂, w₃ ∈ Im 𝕆`, coordinates `w1.e1..w1.e7, w2.., w3..`.
pub fn octonion_cubic21() -> Result<CubicForm> {
    let mut terms = Vec::new();
    for p in 1..8 {
        for q in 1..8 {
            let pq = CDElement::unit(8, p).mul_unchecked(&CDElement::unit(8, q));
            for r in 1..8 {
                let c = pq.mul_unchecked(&CDElement::unit(8, r)).re();
                if !c.is_zero() {
                    terms.push(([p - 1, 6 + q, 13 + r], c));
                }
            }
        }
    }
    let labels = (1..=3).flat_map(|w| (1..8).map(move |k| format!("w{w}.e{k}"))).collect();
    Ok(CubicForm::from_terms(21, terms)?.with_coords(labels)?.with_name("octonion21"))
}

/// A named catalog form with the Peirce triple the table attaches to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub dim: usize,
    pub expected_triple: Option<(usize, usize, usize)>,
    pub description: &'static str,
}

const fn entry(
    name: &'static str,
    dim: usize,
    expected_triple: Option<(usize, usize, usize)>,
    description: &'static str,
) -> CatalogEntry {
    CatalogEntry { name, dim, expected_triple, description }
}

pub const CATALOG: &[CatalogEntry] = &[
    entry("trivial", 3, None, "x1^3 on R^3"),
    entry("clifford-q0", 3, None, "x(y1^2 - y2^2), Clifford system q=0"),
    entry("clifford-q1", 4, None, "Clifford-type eigencubic, q=1 on R^2"),
    entry("clifford-q2", 7, None, "Clifford-type eigencubic, q=2 on R^4"),
    entry("clifford-q3", 12, None, "Clifford-type eigencubic, q=3 on R^8"),
    entry("cartan-d1", 5, Some((2, 0, 2)), "generic norm on trace-free H3(R)"),
    entry("cartan-d2", 8, Some((3, 0, 4)), "generic norm on trace-free H3(C)"),
    entry("cartan-d4", 14, Some((5, 0, 8)), "generic norm on trace-free H3(H)"),
    entry("cartan-d8", 26, Some((9, 0, 16)), "generic norm on trace-free H3(O)"),
    entry("involution-d2", 9, Some((0, 5, 3)), "(1/12)<z#, 3 bar z - z> on H3(C)"),
    entry("involution-d4", 15, Some((0, 8, 6)), "(1/12)<z#, 3 bar z - z> on H3(H)"),
    entry("involution-d8", 27, Some((0, 14, 12)), "(1/12)<z#, 3 bar z - z> on H3(O)"),
    entry("complexified-d1", 12, Some((1, 5, 5)), "re<z, z#> on H3(R) x C"),
    entry("complexified-d2", 18, Some((1, 8, 8)), "re<z, z#> on H3(C) x C"),
    entry("complexified-d4", 30, Some((1, 14, 14)), "re<z, z#> on H3(H) x C"),
    entry("complexified-d8", 54, Some((1, 26, 26)), "re<z, z#> on H3(O) x C"),
    entry("albert21", 21, Some((4, 5, 11)), "(1/6)<z, z^2> on H3(O) minus H3(R)"),
    entry("octonion21", 21, Some((4, 5, 11)), "re(w1 w2 w3) on (Im O)^3"),
];

pub fn catalog_entry(name: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name)
}

/// Builds a catalog form by name.
pub fn build(name: &str) -> Result<CubicForm> {
    let form = match name {
        "trivial" => trivial_cubic(3, int(1))?.with_name("trivial"),
        "albert21" => albert_contraction_cubic()?,
        "octonion21" => octonion_cubic21()?,
        _ => {
            let parsed = name.rsplit_once('-').and_then(|(family, p)| Some((family, p.get(1..)?.parse::<usize>().ok()?)));
            match parsed {
                Some(("clifford", q)) if name.contains("-q") => clifford_cubic(&CliffordSystem::build(q))?,
                Some(("cartan", d)) if name.contains("-d") => cartan_cubic(d)?,
                Some(("involution", d)) if name.contains("-d") => involution_cubic(d)?,
                Some(("complexified", d)) if name.contains("-d") => complexified_cubic(d)?,
                _ => return Err(Error::invalid(format!("unknown catalog form {name:?}"))),
            }
        }
    };
    Ok(form)
}
