use std::collections::HashMap;

use super::element::GroupElement;
use super::system::CoxeterSystem;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::words::Word;

/// Bitset of generator indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GeneratorSet(pub u32);

impl GeneratorSet {
    pub fn contains(&self, g: usize) -> bool {
        self.0 >> g & 1 == 1
    }

    pub fn insert(&mut self, g: usize) {
        self.0 |= 1 << g;
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..32).filter(|&g| self.contains(g))
    }

    pub fn all(rank: usize) -> Self {
        GeneratorSet(((1u64 << rank) - 1) as u32)
    }
}

/// Every element of a finite Coxeter group with its length, right descent
/// set, and right multiplication table. Element 0 is the identity.
#[derive(Debug, Clone)]
pub struct LengthTable {
    rank: usize,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    lengths: Vec<u32>,
    descents: Vec<GeneratorSet>,
    right_mul: Vec<u32>,
    longest: usize,
}

/// BFS over the right Cayley graph from the identity.
pub fn length_and_descents(system: &CoxeterSystem, config: &Config) -> Result<LengthTable> {
    let rank = system.rank();
    assert!(rank <= 32, "generator sets are 32-bit");
    let id = system.identity();
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut lengths = vec![0u32];
    let mut right_mul: Vec<u32> = Vec::new();

    let mut head = 0;
    while head < elements.len() {
        for g in 0..rank {
            let next = elements[head].compose(system.generator(g));
            let j = match index.get(&next) {
                Some(&j) => j,
                None => {
                    if elements.len() >= config.max_group_order {
                        return Err(Error::GroupTooLarge {
                            cap: config.max_group_order,
                        });
                    }
                    let j = elements.len();
                    index.insert(next.clone(), j);
                    elements.push(next);
                    lengths.push(lengths[head] + 1);
                    j
                }
            };
            right_mul.push(j as u32);
        }
        head += 1;
    }

    let descents = (0..elements.len())
        .map(|i| {
            let mut d = GeneratorSet::default();
            for g in 0..rank {
                if lengths[right_mul[i * rank + g] as usize] < lengths[i] {
                    d.insert(g);
                }
            }
            d
        })
        .collect();
    let longest = (0..elements.len()).max_by_key(|&i| lengths[i]).unwrap_or(0);

    Ok(LengthTable {
        rank,
        elements,
        index,
        lengths,
        descents,
        right_mul,
        longest,
    })
}

impl LengthTable {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn index_of(&self, e: &GroupElement) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn length(&self, i: usize) -> usize {
        self.lengths[i] as usize
    }

    pub fn length_of(&self, e: &GroupElement) -> Result<usize> {
        self.index_of(e)
            .map(|i| self.length(i))
            .ok_or(Error::NotInGroup)
    }

    pub fn descents(&self, i: usize) -> GeneratorSet {
        self.descents[i]
    }

    #[inline]
    pub fn right_mul(&self, i: usize, g: usize) -> usize {
        self.right_mul[i * self.rank + g] as usize
    }

    pub fn max_length(&self) -> usize {
        self.length(self.longest)
    }

    pub fn longest_index(&self) -> usize {
        self.longest
    }

    /// Walks the word through the multiplication table.
    pub fn evaluate(&self, word: &Word) -> Result<usize> {
        word.letters().iter().try_fold(0, |i, &g| {
            if g >= self.rank {
                Err(Error::GeneratorOutOfRange {
                    index: g + 1,
                    rank: self.rank,
                })
            } else {
                Ok(self.right_mul(i, g))
            }
        })
    }

    /// Whether the word's length equals the length of its value.
    pub fn is_reduced(&self, word: &Word) -> Result<bool> {
        Ok(self.length(self.evaluate(word)?) == word.len())
    }
}

/// The unique element of maximal length.
pub fn longest_element(table: &LengthTable) -> GroupElement {
    table.element(table.longest_index()).clone()
}
