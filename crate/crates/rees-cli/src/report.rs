//! JSON report schema ("rees-report/1") and conversions from core results.
//! Polynomials are serialized in the input grammar, so report output parses
//! back as input.

use rees_core::rees::ReesReport;
use serde::{Deserialize, Serialize};

pub const REPORT_SCHEMA: &str = "rees-report/1";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CaseJson {
    pub n: usize,
    pub d: Option<u32>,
    pub f: String,
    pub verdict: Option<bool>,
    pub relation_type: Option<u32>,
    pub fiber_generator: Option<String>,
    pub min_gens: Option<usize>,
    pub dim: Option<usize>,
    pub depth: Option<usize>,
    pub cm: Option<bool>,
    pub almost_cm: Option<bool>,
    #[serde(rename = "fiber_reg_T")]
    pub fiber_reg_t: Option<u32>,
    pub saturation_index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CaseJson {
    pub fn from_report(r: &ReesReport) -> CaseJson {
        CaseJson {
            n: r.n,
            d: Some(r.d),
            f: r.f.format(),
            verdict: Some(r.verdict),
            relation_type: Some(r.relation_type),
            fiber_generator: Some(r.fiber_generator.format()),
            min_gens: Some(r.minimal_generator_count),
            dim: Some(r.dimension),
            depth: Some(r.depth),
            cm: Some(r.cm),
            almost_cm: Some(r.almost_cm),
            fiber_reg_t: Some(r.fiber_regularity_t),
            saturation_index: Some(r.saturation_index),
            error: None,
        }
    }

    pub fn from_failure(n: usize, d: Option<u32>, f: String, error: String) -> CaseJson {
        CaseJson {
            n,
            d,
            f,
            verdict: Some(false),
            relation_type: None,
            fiber_generator: None,
            min_gens: None,
            dim: None,
            depth: None,
            cm: None,
            almost_cm: None,
            fiber_reg_t: None,
            saturation_index: None,
            error: Some(error),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Some(true) && self.error.is_none()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TimingsJson {
    pub total_ms: u128,
    pub cases_ms: Vec<u128>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EnvelopeJson {
    pub schema: String,
    pub cases: Vec<CaseJson>,
    pub passed: usize,
    pub failed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<TimingsJson>,
}

impl EnvelopeJson {
    pub fn new(cases: Vec<CaseJson>, timings: Option<TimingsJson>) -> EnvelopeJson {
        let passed = cases.iter().filter(|c| c.passed()).count();
        let failed = cases.len() - passed;
        EnvelopeJson {
            schema: REPORT_SCHEMA.to_string(),
            cases,
            passed,
            failed,
            timings,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyJson {
    pub schema: &'static str,
    pub n: usize,
    pub d: u32,
    pub f: String,
    pub verdict: bool,
    pub strategies_agree: bool,
    pub downgrade_equals_saturation: bool,
    pub symmetric_saturation_agrees: bool,
    pub chain_ok: bool,
    pub saturation_index: usize,
    pub symmetric_saturation_index: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DowngradeJson {
    pub schema: &'static str,
    pub n: usize,
    pub d: u32,
    pub f: String,
    pub strategy: String,
    pub sequence: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealJson {
    pub schema: &'static str,
    pub n: usize,
    pub d: u32,
    pub f: String,
    pub method: String,
    pub generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub saturation_index: Option<usize>,
}
