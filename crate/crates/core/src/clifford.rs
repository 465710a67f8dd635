//! Hurwitz–Radon numbers and symmetric Clifford systems.
//!
//! Systems are assembled from Kronecker products of the 2×2 generators
//! `I`, `P = diag(1,-1)`, `Q = [[0,1],[1,0]]` and `J = [[0,1],[-1,0]]`. Such a
//! product is a signed permutation matrix; it is symmetric (and then an
//! involution) exactly when it contains an even number of `J` factors, and
//! two products either commute or anticommute.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type IntMatrix = Vec<Vec<i64>>;

/// `ρ(m) = 8a + 2^b` for `m = 2^(4a+b) · odd`, `0 <= b <= 3`.
pub fn hurwitz_radon(m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::invalid("Hurwitz-Radon function is defined for m >= 1"));
    }
    let s = m.trailing_zeros() as u64;
    let (a, b) = (s / 4, s % 4);
    Ok(8 * a + (1 << b))
}

/// Symmetric matrices `A_0..A_q` on `ℝ^{2l}` with `A_i A_j + A_j A_i = 2δ_ij I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliffordSystem {
    pub q: usize,
    pub two_l: usize,
    pub mats: Vec<IntMatrix>,
}

/// First relation a candidate system violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Shape(String),
    NotSymmetric { index: usize },
    NotInvolution { index: usize },
    NotAnticommuting { i: usize, j: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Shape(s) => write!(f, "shape: {s}"),
            Violation::NotSymmetric { index } => write!(f, "A{index} is not symmetric"),
            Violation::NotInvolution { index } => write!(f, "A{index}^2 != I"),
            Violation::NotAnticommuting { i, j } => write!(f, "A{i}A{j} + A{j}A{i} != 0"),
        }
    }
}

fn matmul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

impl CliffordSystem {
    /// Checks every defining relation exactly.
    pub fn verify(&self) -> std::result::Result<(), Violation> {
        let n = self.two_l;
        if self.mats.len() != self.q + 1 {
            return Err(Violation::Shape(format!("expected {} matrices, got {}", self.q + 1, self.mats.len())));
        }
        if n == 0 || n % 2 != 0 {
            return Err(Violation::Shape(format!("ambient dimension {n} must be even and positive")));
        }
        if let Some(bad) = self.mats.iter().position(|m| m.len() != n || m.iter().any(|r| r.len() != n)) {
            return Err(Violation::Shape(format!("A{bad} is not {n}x{n}")));
        }
        for (index, m) in self.mats.iter().enumerate() {
            if (0..n).any(|i| (0..n).any(|j| m[i][j] != m[j][i])) {
                return Err(Violation::NotSymmetric { index });
            }
            let sq = matmul(m, m);
            if (0..n).any(|i| (0..n).any(|j| sq[i][j] != i64::from(i == j))) {
                return Err(Violation::NotInvolution { index });
            }
        }
        for i in 0..self.mats.len() {
            for j in i + 1..self.mats.len() {
                let ab = matmul(&self.mats[i], &self.mats[j]);
                let ba = matmul(&self.mats[j], &self.mats[i]);
                if (0..n).any(|r| (0..n).any(|c| ab[r][c] + ba[r][c] != 0)) {
                    return Err(Violation::NotAnticommuting { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.verify().is_ok()
    }

    /// Builds a system of `q + 1` matrices of size `2^k`, where `k` is the
    /// smallest exponent with `q <= ρ(2^(k-1))`.
    pub fn build(q: usize) -> Self {
        let mut k = 1u32;
        while (hurwitz_radon(1u64 << (k - 1)).expect("positive") as usize) < q {
            k += 1;
        }
        let words = search_anticommuting(k as usize, q + 1)
            .expect("Hurwitz-Radon bound guarantees a system at this size");
        let mats = words.iter().map(|w| kron_word(w)).collect();
        let system = Self { q, two_l: 1 << k, mats };
        debug_assert!(system.is_valid());
        system
    }
}

// Generator indices: 0 = I, 1 = P, 2 = Q, 3 = J.
fn generator(g: u8) -> [[i64; 2]; 2] {
    match g {
        0 => [[1, 0], [0, 1]],
        1 => [[1, 0], [0, -1]],
        2 => [[0, 1], [1, 0]],
        _ => [[0, 1], [-1, 0]],
    }
}

fn kron_word(word: &[u8]) -> IntMatrix {
    let mut m: IntMatrix = vec![vec![1]];
    for &g in word {
        let f = generator(g);
        let n = m.len();
        let mut out = vec![vec![0; 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                for (a, row) in f.iter().enumerate() {
                    for (b, &v) in row.iter().enumerate() {
                        out[2 * i + a][2 * j + b] = m[i][j] * v;
                    }
                }
            }
        }
        m = out;
    }
    m
}

fn anticommute(a: &[u8], b: &[u8]) -> bool {
    a.iter().zip(b).filter(|(&x, &y)| x != 0 && y != 0 && x != y).count() % 2 == 1
}

/// Depth-first search for `size` mutually anticommuting symmetric words of length `k`.
fn search_anticommuting(k: usize, size: usize) -> Option<Vec<Vec<u8>>> {
    let candidates: Vec<Vec<u8>> = (1..4usize.pow(k as u32))
        .map(|mut code| {
            let mut w = vec![0u8; k];
            for slot in w.iter_mut().rev() {
                *slot = (code % 4) as u8;
                code /= 4;
            }
            w
        })
        .filter(|w| w.iter().filter(|&&g| g == 3).count() % 2 == 0)
        .collect();

    fn extend(pool: &[&Vec<u8>], chosen: &mut Vec<Vec<u8>>, size: usize) -> bool {
        if chosen.len() == size {
            return true;
        }
        for (i, w) in pool.iter().enumerate() {
            if pool.len() - i < size - chosen.len() {
                return false;
            }
            let next: Vec<&Vec<u8>> = pool[i + 1..].iter().copied().filter(|v| anticommute(w, v)).collect();
            chosen.push((*w).clone());
            if extend(&next, chosen, size) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let pool: Vec<&Vec<u8>> = candidates.iter().collect();
    let mut chosen = Vec::new();
    extend(&pool, &mut chosen, size).then_some(chosen)
}
