//! Admissible partitions of a host's generators and the embedded Coxeter
//! system `(X, T)` they induce, with `t_i` sent to the longest element of
//! the `i`-th block.

use std::fmt;
use std::str::FromStr;

use crate::config::Config;
use crate::coxeter::{
    CoxeterGroup, CoxeterMatrix, CoxeterSystem, CoxeterType, Family, GroupElement,
};
use crate::error::{Error, Result};
use crate::words::{enumerate_reduced, RelationSet, Word};

/// The rows of the classification of admissible partitions (dihedral cases omitted).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableRow {
    /// `A_{2n-1}` into `B_n`.
    AOddToB(usize),
    /// `A_{2n}` into `B_n`.
    AEvenToB(usize),
    /// `D_{n+1}` into `B_n`.
    DToB(usize),
    D6ToH3,
    E6ToF4,
    E8ToH4,
}

impl TableRow {
    pub fn host_type(&self) -> CoxeterType {
        match *self {
            TableRow::AOddToB(n) => CoxeterType::a(2 * n - 1),
            TableRow::AEvenToB(n) => CoxeterType::a(2 * n),
            TableRow::DToB(n) => CoxeterType::d(n + 1),
            TableRow::D6ToH3 => CoxeterType::d(6),
            TableRow::E6ToF4 => CoxeterType {
                family: Family::E,
                rank: 6,
            },
            TableRow::E8ToH4 => CoxeterType {
                family: Family::E,
                rank: 8,
            },
        }
    }

    pub fn x_type(&self) -> CoxeterType {
        match *self {
            TableRow::AOddToB(n) | TableRow::AEvenToB(n) | TableRow::DToB(n) => CoxeterType::b(n),
            TableRow::D6ToH3 => CoxeterType::H3,
            TableRow::E6ToF4 => CoxeterType {
                family: Family::F,
                rank: 4,
            },
            TableRow::E8ToH4 => CoxeterType {
                family: Family::H,
                rank: 4,
            },
        }
    }

    /// Blocks as diagram node labels (1-based), listed in `t_1, t_2, ..` order
    /// for the B rows. The `D6 -> H3` order is only the listing order; the
    /// `t` assignment is computed.
    pub fn diagram_blocks(&self) -> Vec<Vec<usize>> {
        match *self {
            TableRow::AOddToB(n) => {
                let mut b = vec![vec![n]];
                b.extend((2..=n).map(|i| vec![n - i + 1, n + i - 1]));
                b
            }
            TableRow::AEvenToB(n) => {
                let mut b = vec![vec![n, n + 1]];
                b.extend((2..=n).map(|i| vec![n - i + 1, n + i]));
                b
            }
            TableRow::DToB(n) => {
                let mut b = vec![vec![1, 2]];
                b.extend((3..=n + 1).map(|i| vec![i]));
                b
            }
            TableRow::D6ToH3 => vec![vec![1, 4], vec![2, 6], vec![3, 5]],
            TableRow::E6ToF4 => vec![vec![1, 6], vec![3, 5], vec![2], vec![4]],
            TableRow::E8ToH4 => vec![vec![1, 8], vec![2, 5], vec![3, 7], vec![4, 6]],
        }
    }

    pub fn from_types(host: CoxeterType, x: CoxeterType) -> Result<TableRow> {
        let unknown = Err(Error::UnknownRow { host, target: x });
        Ok(match (host.family, x.family) {
            (Family::A, Family::B) if host.rank == 2 * x.rank - 1 => TableRow::AOddToB(x.rank),
            (Family::A, Family::B) if host.rank == 2 * x.rank => TableRow::AEvenToB(x.rank),
            (Family::D, Family::B) if host.rank == x.rank + 1 => TableRow::DToB(x.rank),
            (Family::D, Family::H) if host.rank == 6 && x.rank == 3 => TableRow::D6ToH3,
            (Family::E, Family::F) if host.rank == 6 => TableRow::E6ToF4,
            (Family::E, Family::H) if host.rank == 8 && x.rank == 4 => TableRow::E8ToH4,
            _ => return unknown,
        })
    }
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.host_type(), self.x_type())
    }
}

impl FromStr for TableRow {
    type Err = Error;

    /// `A5-B3`, `D6-H3`, ...
    fn from_str(s: &str) -> Result<TableRow> {
        let (host, x) = s
            .trim()
            .split_once(['-', '>', ':'])
            .ok_or_else(|| Error::Parse(format!("row `{s}` is not of the form HOST-X")))?;
        TableRow::from_types(host.parse()?, x.trim_start_matches('>').parse()?)
    }
}

/// A realized admissible partition.
#[derive(Debug, Clone)]
pub struct AdmissiblePartition {
    row: TableRow,
    host: CoxeterGroup,
    /// Native host generator indices of each block, in `t` order.
    blocks: Vec<Vec<usize>>,
    images: Vec<GroupElement>,
    expansions: Vec<Word>,
    block_words: Vec<Vec<Word>>,
    x: CoxeterGroup,
}

/// Pieces of a Σ-consistent word: `(t index, host sub-word)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaParse {
    pub pieces: Vec<(usize, Word)>,
}

impl SigmaParse {
    /// The `T`-word read off the block indices.
    pub fn x_word(&self) -> Word {
        Word::new(self.pieces.iter().map(|(t, _)| *t).collect())
    }
}

impl fmt::Display for SigmaParse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pieces
            .iter()
            .map(|(t, w)| format!("t{}=[{}]", t + 1, w))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Realizes a row in its host. The E rows have no permutation host here.
pub fn table_row(row: TableRow, config: &Config) -> Result<AdmissiblePartition> {
    let host_type = row.host_type();
    if host_type.family == Family::E {
        return Err(Error::UnsupportedHost(host_type));
    }
    let host = CoxeterGroup::host(host_type, config)?;
    let blocks: Vec<Vec<usize>> = row
        .diagram_blocks()
        .iter()
        .map(|b| {
            let mut native: Vec<usize> = b
                .iter()
                .map(|&node| host.system.generator_at_node(node - 1))
                .collect();
            native.sort_unstable();
            native
        })
        .collect();
    let blocks = match row {
        TableRow::D6ToH3 => {
            assign_blocks(&host.system, &blocks, row.x_type()).ok_or_else(|| {
                Error::RelationMismatch {
                    ctype: row.x_type(),
                    detail: "no ordering of the blocks induces the H3 matrix".into(),
                }
            })?
        }
        _ => blocks,
    };
    AdmissiblePartition::from_blocks(row, host, blocks, config)
}

/// Orders the blocks so that the induced matrix equals the diagram of `x_type`,
/// trying orders lexicographically.
pub fn assign_blocks(
    host: &CoxeterSystem,
    blocks: &[Vec<usize>],
    x_type: CoxeterType,
) -> Option<Vec<Vec<usize>>> {
    let images: Vec<GroupElement> = blocks
        .iter()
        .map(|b| host.parabolic_longest(b))
        .collect::<Result<_>>()
        .ok()?;
    let induced =
        CoxeterMatrix::from_fn(images.len(), |i, j| images[i].compose(&images[j]).order());
    let target = x_type.diagram_matrix();
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    loop {
        let mut relabel = vec![0; order.len()];
        for (t, &b) in order.iter().enumerate() {
            relabel[b] = t;
        }
        if induced.matches_under(&target, &relabel) {
            return Some(order.iter().map(|&b| blocks[b].clone()).collect());
        }
        if !next_permutation(&mut order) {
            return None;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl AdmissiblePartition {
    /// Builds the partition from native blocks already in `t` order.
    pub fn from_blocks(
        row: TableRow,
        host: CoxeterGroup,
        blocks: Vec<Vec<usize>>,
        config: &Config,
    ) -> Result<Self> {
        let mut images = Vec::with_capacity(blocks.len());
        let mut expansions = Vec::with_capacity(blocks.len());
        let mut block_words = Vec::with_capacity(blocks.len());
        for b in &blocks {
            let image = host.system.parabolic_longest(b)?;
            let words = enumerate_reduced(&host, &image, config)?;
            expansions.push(words[0].clone());
            block_words.push(words);
            images.push(image);
        }
        let x_system =
            CoxeterSystem::from_generators(row.x_type(), host.system.symbols(), images.clone())?;
        let x = CoxeterGroup::new(x_system, config)?;
        Ok(AdmissiblePartition {
            row,
            host,
            blocks,
            images,
            expansions,
            block_words,
            x,
        })
    }

    pub fn row(&self) -> TableRow {
        self.row
    }

    pub fn host(&self) -> &CoxeterGroup {
        &self.host
    }

    /// The embedded group `(X, T)` on the host's symbols.
    pub fn x(&self) -> &CoxeterGroup {
        &self.x
    }

    pub fn x_type(&self) -> CoxeterType {
        self.row.x_type()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    /// Canonical host word of `t_i`: the lexicographically least reduced word
    /// of its image (ascending for commuting blocks, `s_n s_{n+1} s_n` for the
    /// rank-two block).
    pub fn expansion(&self, t: usize) -> &Word {
        &self.expansions[t]
    }

    /// Every reduced host word of `t_i`'s image.
    pub fn block_words(&self, t: usize) -> &[Word] {
        &self.block_words[t]
    }

    /// Which `t` covers native host generator `s`.
    pub fn block_of(&self, s: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(&s))
            .expect("blocks cover S")
    }
}

/// Orders of `t_i t_j`, checked against the diagram of the declared type.
pub fn verify_induced_matrix(p: &AdmissiblePartition) -> Result<CoxeterMatrix> {
    let computed = p.x.system.matrix().clone();
    let expected = p.x_type().diagram_matrix();
    for i in 0..computed.rank() {
        for j in i + 1..computed.rank() {
            if computed.get(i, j) != expected.get(i, j) {
                return Err(Error::MatrixMismatch {
                    pair: (i, j),
                    expected: expected.get(i, j),
                    found: computed.get(i, j),
                });
            }
        }
    }
    Ok(computed)
}

/// Replaces each `t_i` by its canonical host word.
pub fn embed_word(p: &AdmissiblePartition, x_word: &Word) -> Result<Word> {
    p.x.system.check_word(x_word)?;
    if !p.x.table.is_reduced(x_word)? {
        return Err(Error::NotReducedInX);
    }
    let mut out = Word::empty();
    for &t in x_word.letters() {
        for &s in p.expansions[t].letters() {
            out.push(s);
        }
    }
    if !p.host.table.is_reduced(&out)? {
        return Err(Error::NotReducedInW);
    }
    Ok(out)
}

/// Length of `x` in `(X, T)`.
pub fn x_length(p: &AdmissiblePartition, x: &GroupElement) -> Result<usize> {
    p.x.table.length_of(x).map_err(|_| Error::NotInSubgroup)
}

/// Splits a reduced host word into consecutive reduced words of block images.
/// `Ok(None)` means no such split exists.
pub fn parse_sigma_consistent(
    p: &AdmissiblePartition,
    s_word: &Word,
) -> Result<Option<SigmaParse>> {
    p.host.system.check_word(s_word)?;
    if !p.host.table.is_reduced(s_word)? {
        return Err(Error::NotReducedInW);
    }
    let letters = s_word.letters();
    let n = letters.len();
    // back[i] = (start, t, word index) of a piece ending at i
    let mut back: Vec<Option<(usize, usize, usize)>> = vec![None; n + 1];
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for i in 0..n {
        if !reach[i] {
            continue;
        }
        for (t, words) in p.block_words.iter().enumerate() {
            for (k, u) in words.iter().enumerate() {
                let end = i + u.len();
                if end <= n && !reach[end] && &letters[i..end] == u.letters() {
                    reach[end] = true;
                    back[end] = Some((i, t, k));
                }
            }
        }
    }
    if !reach[n] {
        return Ok(None);
    }
    let mut pieces = Vec::new();
    let mut end = n;
    while end > 0 {
        let (start, t, k) = back[end].expect("reachable positions have a predecessor");
        pieces.push((t, p.block_words[t][k].clone()));
        end = start;
    }
    pieces.reverse();
    Ok(Some(SigmaParse { pieces }))
}

/// `{t_i, t_j}` is kept iff every pair `{s_a, s_b}` with `a ∈ Σ_i, b ∈ Σ_j` is in `j_rels`.
pub fn induced_relation_set(p: &AdmissiblePartition, j_rels: &RelationSet) -> RelationSet {
    let k = p.blocks.len();
    let mut out = RelationSet::none();
    for i in 0..k {
        for j in i + 1..k {
            let all = p.blocks[i]
                .iter()
                .all(|&a| p.blocks[j].iter().all(|&b| j_rels.contains(a, b)));
            if all {
                out.insert(i, j);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(s: &str) -> AdmissiblePartition {
        table_row(s.parse().unwrap(), &Config::default()).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn row_names() {
        for s in [
            "A5-B3", "A6-B3", "D4-B3", "D5-B4", "D6-H3", "E6-F4", "E8-H4", "A7-B4",
        ] {
            assert_eq!(s.parse::<TableRow>().unwrap().to_string(), s);
        }
        assert!("A5-B4".parse::<TableRow>().is_err());
        assert!("A5".parse::<TableRow>().is_err());
        assert!("D6-H4".parse::<TableRow>().is_err());
    }

    #[test]
    fn e_rows_are_recorded_but_unbuildable() {
        for r in [TableRow::E6ToF4, TableRow::E8ToH4] {
            assert_eq!(
                r.diagram_blocks().iter().map(Vec::len).sum::<usize>(),
                r.host_type().rank
            );
            assert!(matches!(
                table_row(r, &Config::default()),
                Err(Error::UnsupportedHost(_))
            ));
        }
    }

    #[test]
    fn diagram_blocks_partition_the_nodes() {
        for r in [
            TableRow::AOddToB(3),
            TableRow::AEvenToB(3),
            TableRow::DToB(4),
            TableRow::D6ToH3,
        ] {
            let mut all: Vec<usize> = r.diagram_blocks().concat();
            all.sort_unstable();
            assert_eq!(all, (1..=r.host_type().rank).collect::<Vec<_>>(), "{r}");
        }
    }

    #[test]
    fn a5_b3_images() {
        let p = row("A5-B3");
        let h = &p.host().system;
        assert_eq!(p.images()[0], *h.generator(2));
        assert_eq!(p.images()[1], h.evaluate(&w("2 4")).unwrap());
        assert_eq!(p.images()[2], h.evaluate(&w("1 5")).unwrap());
    }

    #[test]
    fn a6_b3_t1_is_a_length_three_transposition() {
        let p = row("A6-B3");
        assert_eq!(p.expansion(0), &w("3 4 3"));
        assert_eq!(p.host().table.length_of(&p.images()[0]).unwrap(), 3);
        assert_eq!(
            p.host().system.format_element(&p.images()[0]),
            "1 2 5 4 3 6 7"
        );
        assert_eq!(p.block_words(0), &[w("3 4 3"), w("4 3 4")]);
    }

    #[test]
    fn d_to_b_first_block_is_the_fork() {
        let p = row("D5-B4");
        // diagram nodes {1, 2} are native s1, s3
        assert_eq!(p.blocks()[0], vec![0, 2]);
        assert_eq!(p.blocks()[1], vec![1]);
        assert_eq!(p.blocks()[2], vec![3]);
        assert_eq!(p.blocks()[3], vec![4]);
    }

    #[test]
    fn induced_matrices() {
        let m = verify_induced_matrix(&row("A5-B3")).unwrap();
        assert_eq!((m.get(0, 1), m.get(1, 2), m.get(0, 2)), (4, 3, 2));
        for r in ["A6-B3", "D4-B3", "D5-B4", "A7-B4", "A8-B4"] {
            let p = row(r);
            assert_eq!(
                verify_induced_matrix(&p).unwrap(),
                p.x_type().diagram_matrix(),
                "{r}"
            );
        }
        let h3 = verify_induced_matrix(&row("D6-H3")).unwrap();
        assert_eq!(h3.get(0, 1), 5);
    }

    #[test]
    fn mismatch_is_reported() {
        let cfg = Config::default();
        let host = CoxeterGroup::host(CoxeterType::a(5), &cfg).unwrap();
        // blocks in the wrong t order: s1s5, s2s4, s3
        let p = AdmissiblePartition::from_blocks(
            TableRow::AOddToB(3),
            host,
            vec![vec![0, 4], vec![1, 3], vec![2]],
            &cfg,
        )
        .unwrap();
        assert_eq!(
            verify_induced_matrix(&p).unwrap_err(),
            Error::MatrixMismatch {
                pair: (0, 1),
                expected: 4,
                found: 3
            }
        );
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(embed_word(&row("A5-B3"), &w("2")).unwrap(), w("2 4"));
        assert_eq!(embed_word(&row("A6-B3"), &w("1")).unwrap(), w("3 4 3"));
        assert_eq!(
            embed_word(&row("A5-B3"), &w("1 1")).unwrap_err(),
            Error::NotReducedInX
        );
    }

    #[test]
    fn x_lengths() {
        let p = row("A5-B3");
        assert_eq!(x_length(&p, &p.host().system.identity()).unwrap(), 0);
        assert_eq!(x_length(&p, &p.x().longest()).unwrap(), 9);
        assert_eq!(p.x().table.len(), 48);
        let not_in = p.host().system.generator(0).clone();
        assert_eq!(x_length(&p, &not_in).unwrap_err(), Error::NotInSubgroup);
    }

    #[test]
    fn sigma_parses() {
        let p = row("A5-B3");
        let parse = parse_sigma_consistent(&p, &w("2 4")).unwrap().unwrap();
        assert_eq!(parse.pieces, vec![(1, w("2 4"))]);
        let parse = parse_sigma_consistent(&p, &w("4 2")).unwrap().unwrap();
        assert_eq!(parse.x_word(), w("2"));
        assert_eq!(parse_sigma_consistent(&p, &w("1 2 1")).unwrap(), None);
        assert_eq!(
            parse_sigma_consistent(&p, &w("1 1")).unwrap_err(),
            Error::NotReducedInW
        );

        let p = row("A6-B3");
        let parse = parse_sigma_consistent(&p, &w("4 3 4 2 5"))
            .unwrap()
            .unwrap();
        assert_eq!(parse.x_word(), w("1 2"));
    }

    #[test]
    fn induced_relations() {
        let p = row("A5-B3");
        let k = induced_relation_set(&p, &RelationSet::all_commuting(&p.host().system));
        assert_eq!(k, RelationSet::from_pairs([(0, 2)]));

        let p = row("A6-B3");
        let k = induced_relation_set(&p, &RelationSet::all_commuting(&p.host().system));
        assert_eq!(k, RelationSet::from_pairs([(0, 2)]));

        let p = row("D6-H3");
        let k = induced_relation_set(&p, &RelationSet::elnitsky(&p.host().system));
        assert!(k.is_empty());
    }

    #[test]
    fn next_permutation_walks_all_orders() {
        let mut v = vec![0, 1, 2];
        let mut n = 1;
        while next_permutation(&mut v) {
            n += 1;
        }
        assert_eq!(n, 6);
        assert_eq!(v, vec![2, 1, 0]);
    }
}
