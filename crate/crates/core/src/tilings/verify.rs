use std::collections::HashSet;

use super::sweep::{subtiling, tile_word};
use super::tile::Tiling;
use crate::config::Config;
use crate::coxeter::{CoxeterGroup, GroupElement};
use crate::embeddings::AdmissiblePartition;
use crate::error::{Error, Result};
use crate::words::{enumerate_reduced, partition_words, RelationSet, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BijectionReport {
    pub words: usize,
    pub classes: usize,
    pub tilings: usize,
    pub ok: bool,
}

impl BijectionReport {
    /// Totals over several elements; `ok` only if every part is.
    pub fn merge(self, other: BijectionReport) -> BijectionReport {
        BijectionReport {
            words: self.words + other.words,
            classes: self.classes + other.classes,
            tilings: self.tilings + other.tilings,
            ok: self.ok && other.ok,
        }
    }

    pub fn identity() -> BijectionReport {
        BijectionReport {
            ok: true,
            ..Default::default()
        }
    }
}

/// Checks that `tile` is constant on each class and injective across classes.
/// Returns the report and one tiling per class.
pub fn check_classes(
    classes: &[Vec<Word>],
    tile: impl Fn(&Word) -> Result<Tiling>,
) -> Result<(BijectionReport, Vec<Tiling>)> {
    let mut constant = true;
    let mut reps = Vec::with_capacity(classes.len());
    let mut all = HashSet::new();
    for class in classes {
        let first = tile(&class[0])?;
        for w in &class[1..] {
            let t = tile(w)?;
            if t != first {
                constant = false;
            }
            all.insert(t);
        }
        all.insert(first.clone());
        reps.push(first);
    }
    let distinct_reps: HashSet<&Tiling> = reps.iter().collect();
    let injective = distinct_reps.len() == reps.len();
    let report = BijectionReport {
        words: classes.iter().map(Vec::len).sum(),
        classes: classes.len(),
        tilings: all.len(),
        ok: constant && injective && all.len() == classes.len(),
    };
    Ok((report, reps))
}

/// Word/tiling bijection for one host element under `rels`.
pub fn verify_host_element(
    group: &CoxeterGroup,
    w: &GroupElement,
    rels: &RelationSet,
    config: &Config,
) -> Result<(BijectionReport, Vec<Tiling>)> {
    let words = enumerate_reduced(group, w, config)?;
    let classes = partition_words(&group.system, &words, rels);
    check_classes(&classes, |word| tile_word(group, word))
}

/// Bijection between `K`-classes of reduced `T`-words of `x` and subtilings.
pub fn verify_partition_element(
    p: &AdmissiblePartition,
    x: &GroupElement,
    k_rels: &RelationSet,
    config: &Config,
) -> Result<(BijectionReport, Vec<Tiling>)> {
    let words = enumerate_reduced(p.x(), x, config).map_err(|e| match e {
        Error::NotInGroup => Error::NotInSubgroup,
        other => other,
    })?;
    let classes = partition_words(&p.x().system, &words, k_rels);
    check_classes(&classes, |word| subtiling(p, word))
}

/// Runs `f` on every element, in parallel when `config.jobs > 1`, and
/// returns the results in table order.
pub fn sweep_elements<T: Send>(
    group: &CoxeterGroup,
    config: &Config,
    f: impl Fn(&GroupElement) -> Result<T> + Sync,
) -> Result<Vec<T>> {
    let elements = group.table.elements();
    if config.jobs <= 1 {
        return elements.iter().map(&f).collect();
    }
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
    pool.install(|| elements.par_iter().map(&f).collect())
}

/// What the words of a bijection check are taken from.
#[derive(Debug, Clone, Copy)]
pub enum BijectionSubject<'a> {
    /// Reduced host words, tiled directly.
    Host(&'a CoxeterGroup),
    /// Reduced `T`-words of the embedded group, tiled as subtilings.
    Partition(&'a AdmissiblePartition),
}

/// `ok` iff the number of classes equals the number of distinct tilings and
/// the class-to-tiling map is well defined and injective.
pub fn verify_bijection(
    subject: BijectionSubject<'_>,
    element: &GroupElement,
    rels: &RelationSet,
    config: &Config,
) -> Result<BijectionReport> {
    let (report, _) = match subject {
        BijectionSubject::Host(g) => verify_host_element(g, element, rels, config)?,
        BijectionSubject::Partition(p) => verify_partition_element(p, element, rels, config)?,
    };
    Ok(report)
}
