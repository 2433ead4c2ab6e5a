use clap::ValueEnum;
use serde::Serialize;

use maxpair_core::arith::FactoredInt;
use maxpair_core::atlas::{parse_structure, AtlasError};
use maxpair_core::classifier::{classify, ClassifierError};
use maxpair_core::groups::{GroupError, GroupSpec};
use maxpair_oracle::{cross_check, OracleError};

use crate::catalog::{scan, Family};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    InvalidParameters(String),
    #[error("oracle and classifier disagree for q = {q}: oracle {oracle:?}, classifier {classifier:?}")]
    Disagreement {
        q: u64,
        oracle: Vec<(u64, u64)>,
        classifier: Vec<(u64, u64)>,
        report: String,
    },
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 2 for unparsable input, 3 for parameters that are not a simple group
    /// or out of range, 4 for an oracle disagreement.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::InvalidParameters(_) => 3,
            CliError::Disagreement { .. } => 4,
            CliError::Internal(_) | CliError::Io(_) | CliError::Csv(_) => 1,
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::Parse { .. } => CliError::Parse(e.to_string()),
            GroupError::NotSimple(_) | GroupError::InvalidParameter(_) => {
                CliError::InvalidParameters(e.to_string())
            }
        }
    }
}

impl From<ClassifierError> for CliError {
    fn from(e: ClassifierError) -> Self {
        match e {
            ClassifierError::Group(g) => g.into(),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<AtlasError> for CliError {
    fn from(e: AtlasError) -> Self {
        CliError::Parse(e.to_string())
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

/// Classifies one group given as text, e.g. `PSU(7,2)` or `M23`.
pub fn cmd_classify(text: &str) -> Result<String, CliError> {
    let g: GroupSpec = text.parse()?;
    Ok(json(&classify(&g)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanFormat {
    Json,
    Csv,
}

pub fn cmd_scan(
    family: Family,
    q_max: u64,
    n_max: u32,
    format: ScanFormat,
) -> Result<String, CliError> {
    if q_max < 4 || n_max < 3 {
        return Err(CliError::InvalidParameters(format!(
            "bounds below the smallest simple groups: q_max = {q_max}, n_max = {n_max}"
        )));
    }
    let catalog = scan(family, q_max, n_max)?;
    Ok(match format {
        ScanFormat::Json => catalog.to_json(),
        ScanFormat::Csv => catalog.to_csv()?,
    })
}

/// Runs the brute-force lattice check for `PSL(2,q)`.
pub fn cmd_oracle(q: u64) -> Result<String, CliError> {
    let report = cross_check(q).map_err(|e| match e {
        OracleError::Classifier(c) => CliError::from(c),
        other => CliError::InvalidParameters(other.to_string()),
    })?;
    let text = json(&report);
    if !report.agree {
        return Err(CliError::Disagreement {
            q,
            oracle: report.oracle_pairs,
            classifier: report.classifier_pairs,
            report: text,
        });
    }
    Ok(text)
}

#[derive(Serialize)]
struct ParsedStructure {
    input: String,
    canonical: String,
    order: FactoredInt,
}

/// Parses an ATLAS-style structure string and reports its order.
pub fn cmd_parse(text: &str) -> Result<String, CliError> {
    let expr = parse_structure(text)?;
    Ok(json(&ParsedStructure {
        input: text.to_string(),
        canonical: expr.render(),
        order: expr.order(),
    }))
}
