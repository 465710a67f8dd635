//! Interchange format for cubic forms:
//!
//! ```text
//! {"dim": n, "terms": [{"ijk": [i, j, k], "c": "p/q"}, ...]}
//! ```
//!
//! Indices are 1-based with `i <= j <= k`, terms are sorted
//! lexicographically, and coefficients are exact rational strings. Three
//! optional keys follow when present: `metric` (diagonal inner-product
//! weights, omitted for the Euclidean product), `coords` (one label per
//! variable, documenting the variable ordering) and `name`.

use serde::{Deserialize, Serialize};

use super::form::CubicForm;
use crate::error::{Error, Result};
use crate::rational::{format_q, parse_q, Q};

#[derive(Serialize, Deserialize)]
struct TermJson {
    ijk: [usize; 3],
    c: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FormJson {
    dim: usize,
    terms: Vec<TermJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metric: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coords: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

fn parse_coeff(s: &str) -> Result<Q> {
    parse_q(s).ok_or_else(|| Error::Format(format!("not an exact rational: {s:?}")))
}

impl CubicForm {
    pub fn to_json(&self) -> String {
        let doc = FormJson {
            dim: self.dim(),
            terms: self
                .terms()
                .iter()
                .map(|(idx, c)| TermJson { ijk: idx.map(|v| v + 1), c: format_q(c) })
                .collect(),
            metric: self.metric().map(|w| w.iter().map(format_q).collect()),
            coords: self.coords().map(<[String]>::to_vec),
            name: self.name().map(str::to_owned),
        };
        serde_json::to_string(&doc).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: FormJson = serde_json::from_str(text)?;
        let mut seen = std::collections::BTreeSet::new();
        let mut terms = Vec::with_capacity(doc.terms.len());
        for t in &doc.terms {
            let [i, j, k] = t.ijk;
            if i == 0 || !(i <= j && j <= k) || k > doc.dim {
                return Err(Error::Format(format!("term indices {:?} must satisfy 1 <= i <= j <= k <= {}", t.ijk, doc.dim)));
            }
            if !seen.insert(t.ijk) {
                return Err(Error::Format(format!("duplicate term {:?}", t.ijk)));
            }
            terms.push(([i - 1, j - 1, k - 1], parse_coeff(&t.c)?));
        }
        let mut form = CubicForm::from_terms(doc.dim, terms)?;
        if let Some(metric) = doc.metric {
            let w = metric.iter().map(|s| parse_coeff(s)).collect::<Result<Vec<_>>>()?;
            form = form.with_metric(w).map_err(|e| Error::Format(e.to_string()))?;
        }
        if let Some(coords) = doc.coords {
            form = form.with_coords(coords).map_err(|e| Error::Format(e.to_string()))?;
        }
        if let Some(name) = doc.name {
            form = form.with_name(name);
        }
        Ok(form)
    }
}
