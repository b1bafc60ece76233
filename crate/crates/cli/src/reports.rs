//! JSON report shapes and their human-readable rendering.
//!
//! Every command prints line-delimited JSON by default; field order is fixed
//! by the struct definitions and maps use sorted keys, so identical inputs
//! produce byte-identical output. `--pretty` switches to plain text.

use std::collections::BTreeMap;

use serde::Serialize;

use dmh_core::correspondence::{LawReport, SweepReport};
use dmh_core::crisp::CrispSweepReport;
use dmh_core::fuzzy::{FuzzyRelation, FuzzySet};
use dmh_core::io::{FuzzyRelationFile, FuzzySetFile};
use dmh_core::relations::{PropertyReport, Witness};

pub fn set_values(set: &FuzzySet) -> BTreeMap<String, String> {
    FuzzySetFile::from_set(set).values
}

#[derive(Debug, Serialize)]
pub struct WitnessJson {
    pub points: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> WitnessJson {
        WitnessJson {
            points: w.points.clone(),
            lhs: w.lhs.clone(),
            rhs: w.rhs.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PropertyJson {
    pub property: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

impl From<&PropertyReport> for PropertyJson {
    fn from(report: &PropertyReport) -> PropertyJson {
        PropertyJson {
            property: report.kind.to_string(),
            holds: report.holds,
            witness: report.witness.as_ref().map(WitnessJson::from),
        }
    }
}

impl PropertyJson {
    pub fn pretty(&self) -> String {
        match &self.witness {
            Some(w) => format!(
                "{}: fails at ({}) with {} vs {}",
                self.property,
                w.points.join(","),
                w.lhs,
                w.rhs
            ),
            None => format!("{}: holds", self.property),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LawCounterexampleJson {
    pub set: BTreeMap<String, String>,
    pub lhs_value: BTreeMap<String, String>,
    pub rhs_value: BTreeMap<String, String>,
}

#[derive(Debug, Serialize)]
pub struct LawJson {
    pub lhs: String,
    pub rhs: String,
    pub relation: String,
    pub holds_for_all: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<LawCounterexampleJson>,
}

impl From<&LawReport> for LawJson {
    fn from(report: &LawReport) -> LawJson {
        LawJson {
            lhs: report.law.lhs.to_string(),
            rhs: report.law.rhs.to_string(),
            relation: report.law.relation.to_string(),
            holds_for_all: report.holds_for_all,
            counterexample: report.counterexample.as_ref().map(|ce| LawCounterexampleJson {
                set: set_values(&ce.set),
                lhs_value: set_values(&ce.lhs),
                rhs_value: set_values(&ce.rhs),
            }),
        }
    }
}

impl LawJson {
    pub fn pretty(&self) -> String {
        let head = format!("{}{}{}", self.lhs, self.relation, self.rhs);
        match &self.counterexample {
            Some(ce) => format!(
                "{head}: fails at A={:?} with lhs={:?}, rhs={:?}",
                ce.set, ce.lhs_value, ce.rhs_value
            ),
            None => format!("{head}: holds for all sets"),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CorrespondenceJson {
    pub property: String,
    pub property_holds: bool,
    pub law_u: String,
    pub law_u_holds: bool,
    pub law_l: String,
    pub law_l_holds: bool,
    pub verified: bool,
}

impl CorrespondenceJson {
    pub fn pretty(&self) -> String {
        format!(
            "{}: property={} {}={} {}={} => correspondence {}",
            self.property,
            self.property_holds,
            self.law_u,
            self.law_u_holds,
            self.law_l,
            self.law_l_holds,
            if self.verified { "verified" } else { "REFUTED" }
        )
    }
}

#[derive(Debug, Serialize)]
pub struct SweepJson {
    pub kind: String,
    pub relations_checked: usize,
    pub agreements: usize,
    pub disagreements: usize,
}

impl From<&SweepReport> for SweepJson {
    fn from(report: &SweepReport) -> SweepJson {
        SweepJson {
            kind: report.kind.to_string(),
            relations_checked: report.relations_checked,
            agreements: report.agreements,
            disagreements: report.disagreements,
        }
    }
}

impl From<&CrispSweepReport> for SweepJson {
    fn from(report: &CrispSweepReport) -> SweepJson {
        SweepJson {
            kind: report.kind.to_string(),
            relations_checked: report.relations_checked,
            agreements: report.agreements,
            disagreements: report.disagreements,
        }
    }
}

impl SweepJson {
    pub fn pretty(&self) -> String {
        format!(
            "{}: {} relations, {} agree, {} disagree",
            self.kind, self.relations_checked, self.agreements, self.disagreements
        )
    }
}

#[derive(Debug, Serialize)]
pub struct SearchJson {
    pub left: String,
    pub right: String,
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<FuzzyRelationFile>,
}

impl SearchJson {
    pub fn new(left: String, right: String, witness: Option<&FuzzyRelation>) -> SearchJson {
        SearchJson {
            left,
            right,
            found: witness.is_some(),
            relation: witness.map(FuzzyRelationFile::from_relation),
        }
    }

    pub fn pretty(&self) -> String {
        match &self.relation {
            Some(rel) => format!(
                "predicates {} and {} disagree on matrix {:?}",
                self.left, self.right, rel.matrix
            ),
            None => format!("predicates {} and {} agree everywhere", self.left, self.right),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ReconstructJson {
    pub base_axiom: bool,
    pub representable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<FuzzyRelationFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axiom_holds: Option<bool>,
}

impl ReconstructJson {
    pub fn pretty(&self) -> String {
        let mut out = format!(
            "base axiom: {}; representable: {}",
            self.base_axiom, self.representable
        );
        if let Some(rel) = &self.relation {
            out.push_str(&format!("; relation matrix {:?}", rel.matrix));
        }
        if let Some(holds) = self.axiom_holds {
            out.push_str(&format!("; axiom holds: {holds}"));
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct LatticeSummaryJson {
    pub valid: bool,
    pub elements: usize,
    pub bottom: String,
    pub top: String,
}

impl LatticeSummaryJson {
    pub fn pretty(&self) -> String {
        format!(
            "valid De Morgan Heyting algebra: {} elements, bottom={}, top={}",
            self.elements, self.bottom, self.top
        )
    }
}

/// One assertion from a stored example.
#[derive(Debug, Serialize)]
pub struct CheckLineJson {
    pub example: String,
    pub check: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl CheckLineJson {
    pub fn pretty(&self) -> String {
        format!(
            "[{}] {}: expected {}, got {} => {}",
            self.example,
            self.check,
            self.expected,
            self.actual,
            if self.pass { "ok" } else { "MISMATCH" }
        )
    }
}
