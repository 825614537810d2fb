use std::collections::{HashMap, VecDeque};

use super::element::GroupElement;
use super::types::{CoxeterMatrix, CoxeterType, Family};
use crate::error::{Error, Result};
use crate::words::Word;

/// The finite set a permutation realization acts on.
///
/// Signed symbols are stored at indices following the initial type D border
/// `n, n-1, .., 1, -1, .., -n`, so index `p` is the `p`-th border edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymbolSet {
    /// `1..=n`
    Unsigned(usize),
    /// `-n..=-1, 1..=n`
    Signed(usize),
}

impl SymbolSet {
    pub fn len(&self) -> usize {
        match *self {
            SymbolSet::Unsigned(n) => n,
            SymbolSet::Signed(n) => 2 * n,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn symbol(&self, index: usize) -> i32 {
        match *self {
            SymbolSet::Unsigned(_) => index as i32 + 1,
            SymbolSet::Signed(n) => {
                if index < n {
                    (n - index) as i32
                } else {
                    -((index - n + 1) as i32)
                }
            }
        }
    }

    pub fn index(&self, symbol: i32) -> Option<usize> {
        match *self {
            SymbolSet::Unsigned(n) => (1..=n as i32)
                .contains(&symbol)
                .then(|| symbol as usize - 1),
            SymbolSet::Signed(n) => {
                let n = n as i32;
                if (1..=n).contains(&symbol) {
                    Some((n - symbol) as usize)
                } else if (-n..=-1).contains(&symbol) {
                    Some((n - 1 - symbol) as usize)
                } else {
                    None
                }
            }
        }
    }

    /// The symbols whose images determine an element: `1..=n` in both cases.
    pub fn positive_count(&self) -> usize {
        match *self {
            SymbolSet::Unsigned(n) | SymbolSet::Signed(n) => n,
        }
    }

    fn perm_from_symbol_swaps(&self, swaps: &[(i32, i32)]) -> GroupElement {
        let pairs: Vec<(usize, usize)> = swaps
            .iter()
            .map(|&(a, b)| (self.index(a).unwrap(), self.index(b).unwrap()))
            .collect();
        GroupElement::from_transpositions(self.len(), &pairs)
    }
}

/// A Coxeter system realized by permutation generators.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    ctype: CoxeterType,
    symbols: SymbolSet,
    generators: Vec<GroupElement>,
    matrix: CoxeterMatrix,
    diagram_labels: Vec<usize>,
}

/// Realizes a supported host: `A_m` on `1..=m+1` by adjacent transpositions,
/// `D_n` on signed symbols by
/// `s1 = (1,-2)(2,-1)`, `s2 = (2,3)(-2,-3)`, `s3 = (1,2)(-1,-2)`,
/// `si = (i-1,i)(-(i-1),-i)` for `i >= 4`.
///
/// The Coxeter matrix is computed from the permutations. The relabeling onto
/// the standard diagram nodes is found by search and kept alongside; for `D_n`
/// it swaps generators 2 and 3, since these permutations make `s1, s3` the fork.
pub fn build_system(ctype: CoxeterType) -> Result<CoxeterSystem> {
    let (symbols, swaps): (SymbolSet, Vec<Vec<(i32, i32)>>) = match ctype.family {
        Family::A => {
            let m = ctype.rank as i32;
            (
                SymbolSet::Unsigned(ctype.rank + 1),
                (1..=m).map(|i| vec![(i, i + 1)]).collect(),
            )
        }
        Family::D => {
            let n = ctype.rank as i32;
            let mut gens = vec![
                vec![(1, -2), (2, -1)],
                vec![(2, 3), (-2, -3)],
                vec![(1, 2), (-1, -2)],
            ];
            gens.extend((4..=n).map(|i| vec![(i - 1, i), (-(i - 1), -i)]));
            (SymbolSet::Signed(ctype.rank), gens)
        }
        _ => return Err(Error::UnsupportedType(ctype)),
    };
    if symbols.len() > 256 {
        return Err(Error::UnsupportedType(ctype));
    }
    let generators = swaps
        .iter()
        .map(|s| symbols.perm_from_symbol_swaps(s))
        .collect();
    let mut system = CoxeterSystem::from_generators(ctype, symbols, generators)?;
    let diagram = ctype.diagram_matrix();
    let relabel =
        find_relabeling(&system.matrix, &diagram).ok_or_else(|| Error::RelationMismatch {
            ctype,
            detail: format!(
                "computed matrix\n{}\nfits no labeling of the diagram",
                system.matrix
            ),
        })?;
    system.diagram_labels = relabel;
    Ok(system)
}

/// Node relabeling `native -> diagram` under which the matrices agree, preferring
/// the most fixed points and then the lexicographically smallest assignment.
fn find_relabeling(computed: &CoxeterMatrix, diagram: &CoxeterMatrix) -> Option<Vec<usize>> {
    fn search(
        computed: &CoxeterMatrix,
        diagram: &CoxeterMatrix,
        partial: &mut Vec<usize>,
        used: &mut Vec<bool>,
        best: &mut Option<(usize, Vec<usize>)>,
    ) {
        let i = partial.len();
        if i == computed.rank() {
            let fixed = partial.iter().enumerate().filter(|(a, b)| a == *b).count();
            if best.as_ref().is_none_or(|(f, _)| fixed > *f) {
                *best = Some((fixed, partial.clone()));
            }
            return;
        }
        for cand in 0..computed.rank() {
            if used[cand] {
                continue;
            }
            let consistent = (0..i).all(|j| computed.get(i, j) == diagram.get(cand, partial[j]));
            if consistent {
                used[cand] = true;
                partial.push(cand);
                search(computed, diagram, partial, used, best);
                partial.pop();
                used[cand] = false;
            }
        }
    }
    if computed.rank() != diagram.rank() {
        return None;
    }
    let mut best = None;
    search(
        computed,
        diagram,
        &mut Vec::new(),
        &mut vec![false; computed.rank()],
        &mut best,
    );
    best.map(|(_, r)| r)
}

impl CoxeterSystem {
    /// Wraps arbitrary involutive generators; the matrix is the table of
    /// pairwise product orders and the diagram labeling is the identity.
    pub fn from_generators(
        ctype: CoxeterType,
        symbols: SymbolSet,
        generators: Vec<GroupElement>,
    ) -> Result<CoxeterSystem> {
        let rank = generators.len();
        for (i, g) in generators.iter().enumerate() {
            if g.degree() != symbols.len() || g.order() != 2 {
                return Err(Error::RelationMismatch {
                    ctype,
                    detail: format!("generator {} is not an involution on the symbol set", i + 1),
                });
            }
        }
        let matrix =
            CoxeterMatrix::from_fn(rank, |i, j| generators[i].compose(&generators[j]).order());
        Ok(CoxeterSystem {
            ctype,
            symbols,
            generators,
            matrix,
            diagram_labels: (0..rank).collect(),
        })
    }

    pub fn ctype(&self) -> CoxeterType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn symbols(&self) -> SymbolSet {
        self.symbols
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &GroupElement {
        &self.generators[i]
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    #[inline]
    pub fn m(&self, i: usize, j: usize) -> u32 {
        self.matrix.get(i, j)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.symbols.len())
    }

    /// Diagram node (0-based) carried by native generator `i`.
    pub fn diagram_label(&self, i: usize) -> usize {
        self.diagram_labels[i]
    }

    /// Native generator sitting at diagram node `node` (0-based).
    pub fn generator_at_node(&self, node: usize) -> usize {
        self.diagram_labels
            .iter()
            .position(|&d| d == node)
            .expect("relabeling is a bijection")
    }

    /// Pairs `(native, diagram)` where the permutation numbering differs from the diagram.
    pub fn relabeled_nodes(&self) -> Vec<(usize, usize)> {
        self.diagram_labels
            .iter()
            .enumerate()
            .filter(|(i, d)| i != *d)
            .map(|(i, &d)| (i, d))
            .collect()
    }

    /// For `D_n`, the two commuting fork generators (diagram nodes 1 and 2).
    pub fn fork_pair(&self) -> Option<(usize, usize)> {
        (self.ctype.family == Family::D).then(|| {
            let a = self.generator_at_node(0);
            let b = self.generator_at_node(1);
            (a.min(b), a.max(b))
        })
    }

    pub fn check_word(&self, word: &Word) -> Result<()> {
        match word.letters().iter().find(|&&g| g >= self.rank()) {
            Some(&g) => Err(Error::GeneratorOutOfRange {
                index: g + 1,
                rank: self.rank(),
            }),
            None => Ok(()),
        }
    }

    /// `g_{i1} ∘ g_{i2} ∘ ... ∘ g_{ik}` for the word `i1 i2 .. ik`.
    pub fn evaluate(&self, word: &Word) -> Result<GroupElement> {
        self.check_word(word)?;
        Ok(word
            .letters()
            .iter()
            .fold(self.identity(), |acc, &g| acc.compose(&self.generators[g])))
    }

    /// Images of the symbols `1..=n` as text, e.g. `3 1 2` or `-2 1 3 4`.
    pub fn format_element(&self, e: &GroupElement) -> String {
        (1..=self.symbols.positive_count() as i32)
            .map(|s| {
                self.symbols
                    .symbol(e.apply(self.symbols.index(s).unwrap()))
                    .to_string()
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Longest element of the parabolic subgroup generated by `block`,
    /// found by BFS inside that subgroup.
    pub fn parabolic_longest(&self, block: &[usize]) -> Result<GroupElement> {
        for &g in block {
            if g >= self.rank() {
                return Err(Error::GeneratorOutOfRange {
                    index: g + 1,
                    rank: self.rank(),
                });
            }
        }
        let mut dist: HashMap<GroupElement, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        let id = self.identity();
        dist.insert(id.clone(), 0);
        queue.push_back(id.clone());
        let mut best = (0, id);
        while let Some(e) = queue.pop_front() {
            let d = dist[&e];
            if d > best.0 {
                best = (d, e.clone());
            }
            for &g in block {
                let next = e.compose(&self.generators[g]);
                if !dist.contains_key(&next) {
                    dist.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
        Ok(best.1)
    }
}
