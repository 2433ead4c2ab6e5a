use std::collections::BTreeMap;

use clap::ValueEnum;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use maxpair_core::arith::is_prime_power;
use maxpair_core::classifier::{
    classify, ClassifierError, ClassifierVerdict, CoprimePairReport, Status,
};
use maxpair_core::groups::{GroupSpec, Sporadic, SubgroupKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Psl2,
    Psl,
    Psu,
    Sporadic,
    All,
}

/// One emitted pair, flattened for CSV and JSON.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CatalogRow {
    pub group: String,
    pub family: String,
    pub n: Option<u32>,
    pub q: Option<u64>,
    pub clause: String,
    pub h_structure: String,
    pub h_order: String,
    pub h_order_factored: String,
    pub m_kind: String,
    pub m_index: Option<u32>,
    pub m_structure: String,
    pub m_printed_as: Option<String>,
    pub m_order: String,
    pub m_order_factored: String,
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub groups_scanned: usize,
    pub rows: usize,
    pub by_clause: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub rows: Vec<CatalogRow>,
    pub summary: Summary,
}

pub fn status_name(s: Status) -> &'static str {
    match s {
        Status::Negative => "negative",
        Status::Complete => "complete",
        Status::CompleteForAschbacherClasses => "complete_for_aschbacher_classes",
    }
}

fn kind_name(k: SubgroupKind) -> (&'static str, Option<u32>) {
    match k {
        SubgroupKind::Parabolic(m) => ("parabolic", Some(m)),
        SubgroupKind::Nondegenerate(m) => ("nondegenerate", Some(m)),
        SubgroupKind::TotallySingular(m) => ("totally_singular", Some(m)),
        SubgroupKind::TorusNormalizer => ("torus_normalizer", None),
        SubgroupKind::Dihedral => ("dihedral", None),
        SubgroupKind::S4 => ("s4", None),
        SubgroupKind::A4 => ("a4", None),
        SubgroupKind::A5 => ("a5", None),
        SubgroupKind::Frobenius => ("frobenius", None),
        SubgroupKind::SporadicTable => ("sporadic_table", None),
        SubgroupKind::AlmostSimpleUndetermined => ("almost_simple_undetermined", None),
    }
}

fn family_name(g: &GroupSpec) -> &'static str {
    match g {
        GroupSpec::Alternating(_) => "alternating",
        GroupSpec::Sporadic(_) => "sporadic",
        GroupSpec::Linear { n: 2, .. } => "psl2",
        GroupSpec::Linear { .. } => "psl",
        GroupSpec::Unitary { .. } => "psu",
        GroupSpec::Symplectic { .. } => "psp",
        GroupSpec::Orthogonal { .. } => "pomega",
        GroupSpec::Exceptional { .. } => "exceptional",
    }
}

fn row(v: &ClassifierVerdict, p: &CoprimePairReport) -> CatalogRow {
    let (n, q) = match v.group {
        GroupSpec::Linear { n, q } | GroupSpec::Unitary { n, q } => (Some(n), Some(q.value())),
        _ => (None, None),
    };
    let (m_kind, m_index) = kind_name(p.m.kind);
    CatalogRow {
        group: v.group.to_string(),
        family: family_name(&v.group).to_string(),
        n,
        q,
        clause: p.clause.label().to_string(),
        h_structure: p.h.structure.clone(),
        h_order: p.h.order.value().to_string(),
        h_order_factored: p.h.order.to_string(),
        m_kind: m_kind.to_string(),
        m_index,
        m_structure: p.m.structure.clone(),
        m_printed_as: p.m.printed_as.clone(),
        m_order: p.m.order.value().to_string(),
        m_order_factored: p.m.order.to_string(),
        status: status_name(v.status).to_string(),
    }
}

const CSV_HEADER: [&str; 15] = [
    "group",
    "family",
    "n",
    "q",
    "clause",
    "h_structure",
    "h_order",
    "h_order_factored",
    "m_kind",
    "m_index",
    "m_structure",
    "m_printed_as",
    "m_order",
    "m_order_factored",
    "status",
];

/// Groups in the scan grid, valid parameters only.
pub fn grid(family: Family, q_max: u64, n_max: u32) -> Vec<GroupSpec> {
    let qs: Vec<u64> = (2..=q_max).filter(|&q| is_prime_power(q)).collect();
    let odd_primes = (3..=n_max).filter(|&n| (2..n).all(|d| n % d != 0));
    let mut out = Vec::new();
    if matches!(family, Family::Psl2 | Family::All) {
        out.extend(qs.iter().filter_map(|&q| GroupSpec::linear(2, q).ok()));
    }
    for n in odd_primes {
        for &q in &qs {
            if matches!(family, Family::Psl | Family::All) {
                out.extend(GroupSpec::linear(n, q).ok());
            }
            if matches!(family, Family::Psu | Family::All) {
                out.extend(GroupSpec::unitary(n, q).ok());
            }
        }
    }
    if matches!(family, Family::Sporadic | Family::All) {
        out.extend(Sporadic::all().map(GroupSpec::Sporadic));
    }
    out
}

/// Classifies every group in the grid in parallel; rows come back sorted by
/// family, n, q, clause and `M`.
pub fn scan(family: Family, q_max: u64, n_max: u32) -> Result<Catalog, ClassifierError> {
    let groups = grid(family, q_max, n_max);
    let verdicts: Vec<ClassifierVerdict> = groups
        .par_iter()
        .map(classify)
        .collect::<Result<_, _>>()?;
    let mut keyed: Vec<_> = verdicts
        .iter()
        .flat_map(|v| {
            v.pairs
                .iter()
                .map(move |p| ((v.group.sort_key(), p.clause, p.m.kind, p.m.structure.clone()), row(v, p)))
        })
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let rows: Vec<CatalogRow> = keyed.into_iter().map(|(_, r)| r).collect();
    let mut by_clause = BTreeMap::new();
    for r in &rows {
        *by_clause.entry(r.clause.clone()).or_insert(0) += 1;
    }
    Ok(Catalog {
        summary: Summary {
            groups_scanned: groups.len(),
            rows: rows.len(),
            by_clause,
        },
        rows,
    })
}

impl Catalog {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    /// Rows as CSV, then `#`-prefixed summary lines.
    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::WriterBuilder::new()
            .has_headers(false)
            .from_writer(Vec::new());
        w.write_record(CSV_HEADER)?;
        for r in &self.rows {
            w.serialize(r)?;
        }
        let mut text = String::from_utf8(w.into_inner().map_err(|e| e.into_error())?)
            .expect("utf-8 input");
        text.push_str(&format!("# groups_scanned,{}\n", self.summary.groups_scanned));
        text.push_str(&format!("# rows,{}\n", self.summary.rows));
        for (c, k) in &self.summary.by_clause {
            text.push_str(&format!("# {c},{k}\n"));
        }
        Ok(text)
    }

    /// Reads rows back from [`Catalog::to_csv`] output; summary lines are skipped.
    pub fn rows_from_csv(text: &str) -> Result<Vec<CatalogRow>, csv::Error> {
        csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .from_reader(text.as_bytes())
            .deserialize()
            .collect()
    }
}
