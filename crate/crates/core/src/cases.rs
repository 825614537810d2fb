//! Named verification suites behind `coxtile verify --case`.

use std::fmt;
use std::str::FromStr;

use crate::config::Config;
use crate::coxeter::{CoxeterGroup, CoxeterType};
use crate::embeddings::{induced_relation_set, table_row, AdmissiblePartition, TableRow};
use crate::error::{Error, Result};
use crate::tilings::{sweep_elements, verify_bijection, BijectionReport, BijectionSubject};
use crate::words::RelationSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    A3Exhaustive,
    A4Exhaustive,
    D4Exhaustive,
    B3InA5,
    B3InA6,
    B3InD4,
    B4InD5,
    H3InD6,
}

impl Case {
    pub const ALL: [Case; 8] = [
        Case::A3Exhaustive,
        Case::A4Exhaustive,
        Case::D4Exhaustive,
        Case::B3InA5,
        Case::B3InA6,
        Case::B3InD4,
        Case::B4InD5,
        Case::H3InD6,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Case::A3Exhaustive => "a3-exhaustive",
            Case::A4Exhaustive => "a4-exhaustive",
            Case::D4Exhaustive => "d4-exhaustive",
            Case::B3InA5 => "b3-in-a5",
            Case::B3InA6 => "b3-in-a6",
            Case::B3InD4 => "b3-in-d4",
            Case::B4InD5 => "b4-in-d5",
            Case::H3InD6 => "h3-in-d6",
        }
    }

    /// Host type of an exhaustive case, or the table row of a subtiling case.
    pub fn target(&self) -> std::result::Result<CoxeterType, TableRow> {
        match self {
            Case::A3Exhaustive => Ok(CoxeterType::a(3)),
            Case::A4Exhaustive => Ok(CoxeterType::a(4)),
            Case::D4Exhaustive => Ok(CoxeterType::d(4)),
            Case::B3InA5 => Err(TableRow::AOddToB(3)),
            Case::B3InA6 => Err(TableRow::AEvenToB(3)),
            Case::B3InD4 => Err(TableRow::DToB(3)),
            Case::B4InD5 => Err(TableRow::DToB(4)),
            Case::H3InD6 => Err(TableRow::D6ToH3),
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Case> {
        Case::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Case::ALL.iter().map(Case::name).collect();
                Error::Parse(format!(
                    "unknown case `{s}` (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseReport {
    pub case: Case,
    pub report: BijectionReport,
}

impl fmt::Display for CaseReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.report;
        write!(
            f,
            "case={} words={} classes={} tilings={} ok={}",
            self.case, r.words, r.classes, r.tilings, r.ok
        )
    }
}

/// Elnitsky's relation set of the host: all commutations, minus the fork in type D.
pub fn host_relations(group: &CoxeterGroup) -> RelationSet {
    RelationSet::elnitsky(&group.system)
}

/// `K` induced on the embedded group from the host relation set.
pub fn partition_relations(p: &AdmissiblePartition) -> RelationSet {
    induced_relation_set(p, &host_relations(p.host()))
}

/// Exhaustive cases sum over every host element; subtiling cases check the
/// longest element of the embedded group.
pub fn run_case(case: Case, config: &Config) -> Result<CaseReport> {
    let report = match case.target() {
        Ok(host) => {
            let group = CoxeterGroup::host(host, config)?;
            let rels = host_relations(&group);
            sweep_elements(&group, config, |e| {
                verify_bijection(BijectionSubject::Host(&group), e, &rels, config)
            })?
            .into_iter()
            .fold(BijectionReport::identity(), BijectionReport::merge)
        }
        Err(row) => {
            let p = table_row(row, config)?;
            let k = partition_relations(&p);
            verify_bijection(
                BijectionSubject::Partition(&p),
                &p.x().longest(),
                &k,
                config,
            )?
        }
    };
    Ok(CaseReport { case, report })
}
