//! The 23 admissible Peirce triples of exceptional Hsiang algebras, with
//! their realizability status, and cross-validation against the catalog.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::algebra::{FloatAlgebra, DEFAULT_BIN_TOL};
use crate::cubics::catalog;
use crate::identities::{check_radial, Mode};
use crate::rational::{format_q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Realizable,
    Eliminated,
    Open,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Realizable => "realizable",
            Status::Eliminated => "eliminated",
            Status::Open => "open",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TripleRecord {
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub dim: usize,
    pub status: Status,
    /// Catalog name of a form realizing the triple.
    pub witness: Option<&'static str>,
}

impl TripleRecord {
    pub fn triple(&self) -> (usize, usize, usize) {
        (self.n1, self.n2, self.n3)
    }
}

const fn row(n1: usize, n2: usize, n3: usize, dim: usize, status: Status, witness: Option<&'static str>) -> TripleRecord {
    TripleRecord { n1, n2, n3, dim, status, witness }
}

use Status::{Eliminated as E, Open as O, Realizable as R};

const TABLE: [TripleRecord; 23] = [
    row(2, 0, 2, 5, R, Some("cartan-d1")),
    row(3, 0, 4, 8, R, Some("cartan-d2")),
    row(5, 0, 8, 14, R, Some("cartan-d4")),
    row(9, 0, 16, 26, R, Some("cartan-d8")),
    row(0, 5, 3, 9, R, Some("involution-d2")),
    row(1, 5, 5, 12, R, Some("complexified-d1")),
    row(2, 5, 7, 15, E, None),
    row(4, 5, 11, 21, R, Some("albert21")),
    row(0, 8, 6, 15, R, Some("involution-d4")),
    row(1, 8, 8, 18, R, Some("complexified-d2")),
    row(2, 8, 10, 21, E, None),
    row(3, 8, 12, 24, O, None),
    row(5, 8, 16, 30, O, None),
    row(9, 8, 24, 42, O, None),
    row(0, 14, 12, 27, R, Some("involution-d8")),
    row(1, 14, 14, 30, R, Some("complexified-d4")),
    row(2, 14, 16, 33, E, None),
    row(3, 14, 18, 36, E, None),
    row(0, 26, 24, 51, E, None),
    row(1, 26, 26, 54, R, Some("complexified-d8")),
    row(2, 26, 28, 57, E, None),
    row(3, 26, 30, 60, E, None),
    row(7, 26, 38, 72, E, None),
];

/// SHA-256 of [`canonical_text`], fixed when the table was entered.
pub const TABLE_CHECKSUM: &str = "bc2852d4a77d7cbe72f44b4ded44c2665f2027e52327eb8be22e8867d6178b15";

pub fn admissible_triples() -> &'static [TripleRecord] {
    &TABLE
}

/// Status of a triple; `None` when it is not admissible at all.
pub fn status(n1: usize, n2: usize, n3: usize) -> Option<Status> {
    TABLE.iter().find(|r| r.triple() == (n1, n2, n3)).map(|r| r.status)
}

/// One line `n1 n2 n3 dim status witness` per row.
pub fn canonical_text() -> String {
    TABLE
        .iter()
        .map(|r| format!("{} {} {} {} {} {}\n", r.n1, r.n2, r.n3, r.dim, r.status.as_str(), r.witness.unwrap_or("-")))
        .collect()
}

pub fn checksum() -> String {
    Sha256::digest(canonical_text().as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationRow {
    pub triple: (usize, usize, usize),
    pub dim: usize,
    pub status: Status,
    pub witness: Option<&'static str>,
    /// `None` for rows without a witness.
    pub pass: Option<bool>,
    pub theta: Option<String>,
    pub mode: Option<&'static str>,
    pub error_bound: Option<f64>,
    pub idempotents: usize,
    /// Distinct triples seen across the idempotents found.
    pub computed: Vec<(usize, usize, usize)>,
    pub note: String,
}

/// Runs the witness of every realizable row through the radial verifier and
/// the idempotent/Peirce pipeline. Failures are reported, not raised.
pub fn cross_validate(restarts: usize, seed: u64) -> Vec<ValidationRow> {
    TABLE.iter().map(|r| validate_row(r, restarts, seed)).collect()
}

pub fn validate_row(r: &TripleRecord, restarts: usize, seed: u64) -> ValidationRow {
    let mut out = ValidationRow {
        triple: r.triple(),
        dim: r.dim,
        status: r.status,
        witness: r.witness,
        pass: None,
        theta: None,
        mode: None,
        error_bound: None,
        idempotents: 0,
        computed: Vec::new(),
        note: String::new(),
    };
    let Some(name) = r.witness else {
        out.note = "untestable".into();
        return out;
    };
    let form = match catalog::build(name) {
        Ok(f) => f,
        Err(e) => {
            out.pass = Some(false);
            out.note = e.to_string();
            return out;
        }
    };
    let mode = Mode::auto(form.dim(), seed);
    let theta: Option<Q> = match check_radial(&form, &mode) {
        Ok(o) => {
            out.mode = Some(o.mode);
            out.error_bound = o.error_bound;
            o.constant
        }
        Err(e) => {
            out.pass = Some(false);
            out.note = e.to_string();
            return out;
        }
    };
    out.theta = theta.as_ref().map(format_q);
    let found = FloatAlgebra::new(&form).find_idempotents(restarts, seed, DEFAULT_BIN_TOL);
    out.idempotents = found.len();
    let mut clean = true;
    for p in &found {
        clean &= p.is_clean();
        if !out.computed.contains(&p.triple) {
            out.computed.push(p.triple);
        }
    }
    let ok = theta.is_some() && !found.is_empty() && clean && out.computed == [r.triple()];
    out.pass = Some(ok);
    if !ok {
        out.note = if theta.is_none() {
            "radial identity fails".into()
        } else if found.is_empty() {
            "no idempotent found".into()
        } else if !clean {
            "unbinned eigenvalues".into()
        } else {
            "triple mismatch".into()
        };
    }
    out
}
