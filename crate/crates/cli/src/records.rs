//! Output records. Every record is one TSV row or one JSON line.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

pub trait Record: Serialize {
    fn columns() -> &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub schema_version: u32,
    pub tool: String,
    pub version: String,
    pub command: String,
    pub generated_unix: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HdRecord {
    pub schema_version: u32,
    pub label: String,
    pub system: String,
    pub two_lambda: String,
    pub status: String,
    pub tau: Option<String>,
    pub per_copy_multiplicity: Option<u64>,
    pub spin_factor: u64,
    pub total_multiplicity: Option<u64>,
    pub contributing_mu: Vec<String>,
    pub closed_form_agrees: Option<bool>,
    pub unitarity: String,
    pub provenance: String,
}

impl Record for HdRecord {
    fn columns() -> &'static [&'static str] {
        &[
            "label",
            "system",
            "two_lambda",
            "status",
            "tau",
            "per_copy_multiplicity",
            "spin_factor",
            "total_multiplicity",
            "contributing_mu",
            "closed_form_agrees",
            "unitarity",
            "provenance",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.label.clone(),
            self.system.clone(),
            self.two_lambda.clone(),
            self.status.clone(),
            opt(&self.tau),
            opt(&self.per_copy_multiplicity),
            self.spin_factor.to_string(),
            opt(&self.total_multiplicity),
            if self.contributing_mu.is_empty() { "-".into() } else { self.contributing_mu.join(";") },
            opt(&self.closed_form_agrees),
            self.unitarity.clone(),
            self.provenance.clone(),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct F4Record {
    pub schema_version: u32,
    pub row: usize,
    pub lambda_r: String,
    pub printed_mu: String,
    pub printed_nu: String,
    pub unitary: bool,
    pub mu: String,
    pub nu: String,
    pub printed_mu_conjugate: bool,
    pub printed_pair_conjugate: bool,
    pub duplicate_of: Option<usize>,
    pub weight_multiplicity: u64,
    pub e_rho_multiplicity: Option<u64>,
    pub exterior_multiplicity: Option<u64>,
    pub inducing: Option<String>,
    pub mu_prime: Option<String>,
}

impl Record for F4Record {
    fn columns() -> &'static [&'static str] {
        &[
            "row",
            "lambda_r",
            "printed_mu",
            "printed_nu",
            "unitary",
            "mu",
            "nu",
            "printed_mu_conjugate",
            "printed_pair_conjugate",
            "duplicate_of",
            "weight_multiplicity",
            "e_rho_multiplicity",
            "exterior_multiplicity",
            "inducing",
            "mu_prime",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.row.to_string(),
            self.lambda_r.clone(),
            self.printed_mu.clone(),
            self.printed_nu.clone(),
            if self.unitary { "YES" } else { "NO" }.into(),
            self.mu.clone(),
            self.nu.clone(),
            self.printed_mu_conjugate.to_string(),
            self.printed_pair_conjugate.to_string(),
            opt(&self.duplicate_of),
            self.weight_multiplicity.to_string(),
            opt(&self.e_rho_multiplicity),
            opt(&self.exterior_multiplicity),
            opt(&self.inducing),
            opt(&self.mu_prime),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub schema_version: u32,
    pub suite: String,
    pub case: String,
    pub passed: bool,
    pub detail: String,
}

impl Record for CheckRecord {
    fn columns() -> &'static [&'static str] {
        &["suite", "case", "result", "detail"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.suite.clone(),
            self.case.clone(),
            if self.passed { "PASS" } else { "FAIL" }.into(),
            self.detail.clone(),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub schema_version: u32,
    pub label: String,
    pub system: String,
    pub lambda_l: String,
    pub lambda_r: String,
    pub two_lambda: String,
    pub ktypes: Option<String>,
    pub unitarity: String,
    pub provenance: String,
}

impl Record for CatalogRecord {
    fn columns() -> &'static [&'static str] {
        &["label", "system", "lambda_l", "lambda_r", "two_lambda", "ktypes", "unitarity", "provenance"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.label.clone(),
            self.system.clone(),
            self.lambda_l.clone(),
            self.lambda_r.clone(),
            self.two_lambda.clone(),
            opt(&self.ktypes),
            self.unitarity.clone(),
            self.provenance.clone(),
        ]
    }
}
