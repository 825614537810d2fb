//! Reduced words, braid moves restricted to a relation subset, and the
//! resulting equivalence classes.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::config::Config;
use crate::coxeter::{CoxeterGroup, CoxeterSystem, GroupElement};
use crate::error::{Error, Result};

/// A word in the generators, stored 0-based and printed 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, g: usize) {
        self.0.push(g);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}", g + 1)?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `2 1 3`, `2,1,3` or `s2 s1 s3`; the empty string is the empty word.
    fn from_str(s: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for tok in s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
        {
            let digits = tok.strip_prefix(['s', 't', 'S', 'T']).unwrap_or(tok);
            let g: usize = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator `{tok}`")))?;
            if g == 0 {
                return Err(Error::Parse("generators are numbered from 1".into()));
            }
            letters.push(g - 1);
        }
        Ok(Word(letters))
    }
}

/// Unordered generator pairs whose braid relation may be applied as a move.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RelationSet {
    pairs: BTreeSet<(usize, usize)>,
}

impl RelationSet {
    pub fn none() -> Self {
        RelationSet::default()
    }

    /// Every pair with `m(r, s) = 2`.
    pub fn all_commuting(system: &CoxeterSystem) -> Self {
        let r = system.rank();
        let pairs = (0..r)
            .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
            .filter(|&(i, j)| system.m(i, j) == 2)
            .collect();
        RelationSet { pairs }
    }

    /// Moves that leave tilings unchanged: all commutations, except that in
    /// type D the fork pair `(s1, s3)` is excluded.
    pub fn elnitsky(system: &CoxeterSystem) -> Self {
        let mut rels = Self::all_commuting(system);
        if let Some(fork) = system.fork_pair() {
            rels.pairs.remove(&fork);
        }
        rels
    }

    pub fn custom(
        system: &CoxeterSystem,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in pairs {
            if a == b || a >= system.rank() || b >= system.rank() {
                return Err(Error::InvalidRelation((a + 1, b + 1)));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(RelationSet { pairs: set })
    }

    /// Builds a set without validating against a system.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        RelationSet {
            pairs: pairs
                .into_iter()
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect(),
        }
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.pairs.contains(&(a.min(b), a.max(b)))
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        self.pairs.insert((a.min(b), a.max(b)));
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_subset(&self, other: &RelationSet) -> bool {
        self.pairs.is_subset(&other.pairs)
    }
}

impl fmt::Display for RelationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return f.write_str("{}");
        }
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(a, b)| format!("{}-{}", a + 1, b + 1))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Number of reduced words of each element below `w`, memoized by table index.
fn count_rec(group: &CoxeterGroup, w: usize, memo: &mut HashMap<usize, u128>) -> u128 {
    if w == 0 {
        return 1;
    }
    if let Some(&c) = memo.get(&w) {
        return c;
    }
    let t = &group.table;
    let c = t
        .descents(w)
        .iter()
        .map(|s| count_rec(group, t.right_mul(w, s), memo))
        .fold(0u128, |a, b| a.saturating_add(b));
    memo.insert(w, c);
    c
}

pub fn count_reduced(group: &CoxeterGroup, w: &GroupElement) -> Result<u128> {
    let idx = group.table.index_of(w).ok_or(Error::NotInGroup)?;
    Ok(count_rec(group, idx, &mut HashMap::new()))
}

/// All reduced words of `w` in lexicographic order, built from
/// `R(w) = ⋃_{s ∈ D_R(w)} R(ws)·s`.
pub fn enumerate_reduced(
    group: &CoxeterGroup,
    w: &GroupElement,
    config: &Config,
) -> Result<Vec<Word>> {
    let idx = group.table.index_of(w).ok_or(Error::NotInGroup)?;
    let count = count_rec(group, idx, &mut HashMap::new());
    if count > config.max_words as u128 {
        return Err(Error::ExplosionGuard {
            count,
            cap: config.max_words,
        });
    }

    fn build(group: &CoxeterGroup, w: usize, memo: &mut HashMap<usize, Vec<Word>>) -> Vec<Word> {
        if w == 0 {
            return vec![Word::empty()];
        }
        if let Some(ws) = memo.get(&w) {
            return ws.clone();
        }
        let t = &group.table;
        let mut out = Vec::new();
        for s in t.descents(w).iter() {
            for mut prefix in build(group, t.right_mul(w, s), memo) {
                prefix.push(s);
                out.push(prefix);
            }
        }
        memo.insert(w, out.clone());
        out
    }

    let mut words = build(group, idx, &mut HashMap::new());
    words.sort_unstable();
    Ok(words)
}

pub fn is_reduced(group: &CoxeterGroup, word: &Word) -> Result<bool> {
    group.table.is_reduced(word)
}

/// Replaces an alternating window `r s r ..` of length `m(r, s)` starting at
/// `position` by `s r s ..`. Returns `None` when the window does not match.
pub fn apply_move(
    system: &CoxeterSystem,
    word: &Word,
    position: usize,
    pair: (usize, usize),
) -> Option<Word> {
    let (r, s) = pair;
    if r == s || r >= system.rank() || s >= system.rank() {
        return None;
    }
    let m = system.m(r, s) as usize;
    let window = word.letters().get(position..position + m)?;
    let first = window[0];
    let other = if first == r {
        s
    } else if first == s {
        r
    } else {
        return None;
    };
    let alternates = window
        .iter()
        .enumerate()
        .all(|(k, &g)| g == if k % 2 == 0 { first } else { other });
    if !alternates {
        return None;
    }
    let mut letters = word.letters().to_vec();
    for (k, slot) in letters[position..position + m].iter_mut().enumerate() {
        *slot = if k % 2 == 0 { other } else { first };
    }
    Some(Word(letters))
}

/// Reduced words of one element split into classes under a relation set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalencePartition {
    pub element: GroupElement,
    /// Each class sorted; classes ordered by their least word.
    pub classes: Vec<Vec<Word>>,
}

impl EquivalencePartition {
    pub fn word_count(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Connected components of the move graph on `words`. Moves leading outside
/// the given set are ignored.
pub fn partition_words(
    system: &CoxeterSystem,
    words: &[Word],
    rels: &RelationSet,
) -> Vec<Vec<Word>> {
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut uf = UnionFind::new(words.len());
    for (i, w) in words.iter().enumerate() {
        for pair in rels.pairs() {
            for pos in 0..w.len() {
                if let Some(v) = apply_move(system, w, pos, pair) {
                    if let Some(&j) = index.get(&v) {
                        uf.union(i, j);
                    }
                }
            }
        }
    }
    let mut groups: HashMap<usize, Vec<Word>> = HashMap::new();
    for (i, w) in words.iter().enumerate() {
        groups.entry(uf.find(i)).or_default().push(w.clone());
    }
    let mut classes: Vec<Vec<Word>> = groups.into_values().collect();
    for c in &mut classes {
        c.sort_unstable();
    }
    classes.sort_unstable_by(|a, b| a[0].cmp(&b[0]));
    classes
}

pub fn equivalence_classes(
    group: &CoxeterGroup,
    w: &GroupElement,
    rels: &RelationSet,
    config: &Config,
) -> Result<EquivalencePartition> {
    let words = enumerate_reduced(group, w, config)?;
    Ok(EquivalencePartition {
        element: w.clone(),
        classes: partition_words(&group.system, &words, rels),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterType;

    fn group(t: CoxeterType) -> CoxeterGroup {
        CoxeterGroup::host(t, &Config::default()).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn word_text_forms() {
        assert_eq!(w("2 1 3 2").letters(), &[1, 0, 2, 1]);
        assert_eq!(w("s1 s3 s2"), w("1 3 2"));
        assert_eq!(w("1,3,2"), w("1 3 2"));
        assert_eq!(w("  "), Word::empty());
        assert_eq!(w("2 1 3 2").to_string(), "2 1 3 2");
        assert!("bad".parse::<Word>().is_err());
        assert!("0 1".parse::<Word>().is_err());
        assert!("1 -2".parse::<Word>().is_err());
    }

    #[test]
    fn a2_longest_has_two_words() {
        let g = group(CoxeterType::a(2));
        let words = enumerate_reduced(&g, &g.longest(), &Config::default()).unwrap();
        assert_eq!(words, vec![w("1 2 1"), w("2 1 2")]);
    }

    #[test]
    fn identity_has_the_empty_word() {
        let g = group(CoxeterType::a(3));
        let words = enumerate_reduced(&g, &g.system.identity(), &Config::default()).unwrap();
        assert_eq!(words, vec![Word::empty()]);
    }

    #[test]
    fn explosion_guard_trips() {
        let g = group(CoxeterType::a(3));
        let cfg = Config {
            max_words: 10,
            ..Config::default()
        };
        assert_eq!(
            enumerate_reduced(&g, &g.longest(), &cfg).unwrap_err(),
            Error::ExplosionGuard { count: 16, cap: 10 }
        );
    }

    #[test]
    fn reducedness() {
        let g = group(CoxeterType::a(2));
        assert!(!is_reduced(&g, &w("1 1")).unwrap());
        assert!(is_reduced(&g, &w("1 2 1")).unwrap());
        assert!(is_reduced(&g, &Word::empty()).unwrap());
        assert!(is_reduced(&g, &w("1 4")).is_err());
    }

    #[test]
    fn moves() {
        let a2 = group(CoxeterType::a(2)).system;
        assert_eq!(apply_move(&a2, &w("1 2 1"), 0, (0, 1)), Some(w("2 1 2")));
        assert_eq!(apply_move(&a2, &w("1 2"), 0, (0, 1)), None);
        assert_eq!(apply_move(&a2, &w("1 2 1"), 1, (0, 1)), None);
        let a3 = group(CoxeterType::a(3)).system;
        assert_eq!(apply_move(&a3, &w("1 3"), 0, (0, 2)), Some(w("3 1")));
        assert_eq!(apply_move(&a3, &w("1 2"), 0, (0, 2)), None);
    }

    #[test]
    fn class_examples() {
        let cfg = Config::default();
        let a2 = group(CoxeterType::a(2));
        let one = RelationSet::custom(&a2.system, [(0, 1)]).unwrap();
        let p = equivalence_classes(&a2, &a2.longest(), &one, &cfg).unwrap();
        assert_eq!(p.class_count(), 1);
        assert_eq!(p.word_count(), 2);

        let a3 = group(CoxeterType::a(3));
        let comm = RelationSet::all_commuting(&a3.system);
        assert_eq!(comm, RelationSet::from_pairs([(0, 2)]));
        let p = equivalence_classes(&a3, &a3.longest(), &comm, &cfg).unwrap();
        assert_eq!((p.word_count(), p.class_count()), (16, 8));

        let p = equivalence_classes(&a3, &a3.longest(), &RelationSet::none(), &cfg).unwrap();
        assert!(p.classes.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn elnitsky_relations_drop_the_d_fork() {
        let d4 = group(CoxeterType::d(4)).system;
        let j = RelationSet::elnitsky(&d4);
        // commuting pairs in D4's permutation numbering: (1,3), (1,4), (3,4)
        assert_eq!(j, RelationSet::from_pairs([(0, 3), (2, 3)]));
        let a4 = group(CoxeterType::a(4)).system;
        assert_eq!(RelationSet::elnitsky(&a4), RelationSet::all_commuting(&a4));
    }

    #[test]
    fn custom_relations_validate() {
        let a3 = group(CoxeterType::a(3)).system;
        assert!(RelationSet::custom(&a3, [(0, 0)]).is_err());
        assert!(RelationSet::custom(&a3, [(0, 5)]).is_err());
        assert_eq!(
            RelationSet::custom(&a3, [(2, 0)]).unwrap().to_string(),
            "{1-3}"
        );
    }
}
