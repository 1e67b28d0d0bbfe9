use std::fmt;

use serde::{Deserialize, Serialize};

use crate::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    /// Strict inequality on every proper subset.
    StableCertified,
    /// Inequality holds everywhere, with equality on some proper subset.
    SemistableCertified,
    /// Some subset fails the inequality. On `P^N`, `N >= 2`, this does not
    /// prove instability: the criterion is only sufficient.
    CriterionViolated,
    /// Exact instability, only produced by the `P^1` splitting decider.
    NotSemistable,
}

impl Verdict {
    /// Whether the verdict meets at least the requested level.
    pub fn satisfies(self, level: Level) -> bool {
        match level {
            Level::Stable => self == Verdict::StableCertified,
            Level::Semistable => matches!(
                self,
                Verdict::StableCertified | Verdict::SemistableCertified
            ),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Stable,
    Semistable,
}

/// One evaluated subset: all members divisible by `g`, whose gcd is exactly `g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GcdWitness {
    pub g: Monomial,
    pub d_j: u32,
    pub k: usize,
    /// `(d - d_J) n + d_J - d k`
    pub margin: i64,
}

/// `(d - d_J) n + d_J - d k`, exact.
pub fn margin(d: u32, n: usize, d_j: u32, k: usize) -> i64 {
    let (d, n, d_j, k) = (d as i64, n as i64, d_j as i64, k as i64);
    (d - d_j) * n + d_j - d * k
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityCertificate {
    pub verdict: Verdict,
    pub dim: usize,
    pub degree: u32,
    pub n: usize,
    /// Every evaluated subset with `d_J >= 1`, in candidate order.
    pub witnesses: Vec<GcdWitness>,
    /// Minimal-margin witness with `d_J >= 1`, first in candidate order on ties.
    pub worst: Option<GcdWitness>,
    /// Minimal margin over all proper subsets with at least two members,
    /// including those with coprime members. `None` when `n = 2`.
    pub min_margin: Option<i64>,
    pub primary: bool,
}

impl StabilityCertificate {
    pub fn witness_count(&self) -> usize {
        self.witnesses.len()
    }

    /// Structured record; integers are exact.
    pub fn to_record(&self, route: Option<&str>) -> CertificateRecord {
        CertificateRecord {
            verdict: self.verdict,
            dim: self.dim,
            d: self.degree,
            n: self.n,
            route: route.map(str::to_owned),
            worst: self.worst.as_ref().map(|w| WitnessRecord {
                g: w.g.exponents().to_vec(),
                monomial: w.g.to_string(),
                d_j: w.d_j,
                k: w.k,
                margin: w.margin,
            }),
            min_margin: self.min_margin,
            witness_count: self.witness_count(),
            primary: self.primary,
        }
    }

    pub fn to_json(&self, route: Option<&str>) -> String {
        serde_json::to_string_pretty(&self.to_record(route)).expect("certificate serializes")
    }

    /// Human-readable summary.
    pub fn render_table(&self, route: Option<&str>) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "verdict: {}\nN = {}, d = {}, n = {}\n",
            self.verdict, self.dim, self.degree, self.n
        ));
        if let Some(r) = route {
            out.push_str(&format!("route: {r}\n"));
        }
        match &self.worst {
            Some(w) => out.push_str(&format!(
                "worst witness: g = {}  d_J = {}  k = {}  margin = {}\n",
                w.g, w.d_j, w.k, w.margin
            )),
            None => out.push_str("worst witness: none (no subset with a nonconstant gcd)\n"),
        }
        if let Some(m) = self.min_margin {
            out.push_str(&format!("min proper-subset margin: {m}\n"));
        }
        out.push_str(&format!("witnesses evaluated: {}\n", self.witness_count()));
        if !self.witnesses.is_empty() {
            out.push_str(&format!(
                "{:>16} {:>5} {:>5} {:>8}\n",
                "g", "d_J", "k", "margin"
            ));
            for w in &self.witnesses {
                out.push_str(&format!(
                    "{:>16} {:>5} {:>5} {:>8}\n",
                    w.g.to_string(),
                    w.d_j,
                    w.k,
                    w.margin
                ));
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub g: Vec<u32>,
    pub monomial: String,
    #[serde(rename = "d_J")]
    pub d_j: u32,
    pub k: usize,
    pub margin: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub verdict: Verdict,
    #[serde(rename = "N")]
    pub dim: usize,
    pub d: u32,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub route: Option<String>,
    pub worst: Option<WitnessRecord>,
    pub min_margin: Option<i64>,
    pub witness_count: usize,
    pub primary: bool,
}
