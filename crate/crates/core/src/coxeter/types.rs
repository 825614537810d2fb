use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    H,
}

/// A finite irreducible Coxeter type such as `A5` or `H3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterType {
    pub family: Family,
    pub rank: usize,
}

impl CoxeterType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::H => (3..=4).contains(&rank),
        };
        if ok {
            Ok(CoxeterType { family, rank })
        } else {
            Err(Error::Parse(format!("no Coxeter type {family:?}{rank}")))
        }
    }

    pub const fn a(rank: usize) -> Self {
        CoxeterType {
            family: Family::A,
            rank,
        }
    }

    pub const fn b(rank: usize) -> Self {
        CoxeterType {
            family: Family::B,
            rank,
        }
    }

    pub const fn d(rank: usize) -> Self {
        CoxeterType {
            family: Family::D,
            rank,
        }
    }

    pub const H3: CoxeterType = CoxeterType {
        family: Family::H,
        rank: 3,
    };

    /// Coxeter matrix with nodes numbered as in the standard diagrams:
    /// the D fork ends are nodes 1 and 2, both joined to node 3; E has node 2
    /// hanging off node 4 of the chain 1-3-4-5-..; the B, F and H labels sit
    /// on edges 1-2, 2-3 and 1-2 respectively.
    pub fn diagram_matrix(&self) -> CoxeterMatrix {
        let r = self.rank;
        let mut m = CoxeterMatrix::free_commuting(r);
        let chain = |m: &mut CoxeterMatrix, nodes: &[usize]| {
            for w in nodes.windows(2) {
                m.set(w[0], w[1], 3);
            }
        };
        match self.family {
            Family::A => chain(&mut m, &(0..r).collect::<Vec<_>>()),
            Family::B => {
                chain(&mut m, &(0..r).collect::<Vec<_>>());
                m.set(0, 1, 4);
            }
            Family::H => {
                chain(&mut m, &(0..r).collect::<Vec<_>>());
                m.set(0, 1, 5);
            }
            Family::F => {
                chain(&mut m, &[0, 1, 2, 3]);
                m.set(1, 2, 4);
            }
            Family::D => {
                m.set(0, 2, 3);
                chain(&mut m, &(1..r).collect::<Vec<_>>());
            }
            Family::E => {
                let mut spine = vec![0, 2];
                spine.extend(3..r);
                chain(&mut m, &spine);
                m.set(1, 3, 3);
            }
        }
        m
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('H') => Family::H,
            _ => return Err(Error::Parse(format!("unknown Coxeter type `{s}`"))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in `{s}`")))?;
        CoxeterType::new(family, rank)
    }
}

/// Symmetric matrix of braid orders `m(r, s)`, indexed from zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<u32>,
}

impl CoxeterMatrix {
    /// All pairs commuting: ones on the diagonal, twos elsewhere.
    pub fn free_commuting(rank: usize) -> Self {
        let mut entries = vec![2; rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = 1;
        }
        CoxeterMatrix { rank, entries }
    }

    pub fn from_fn(rank: usize, f: impl Fn(usize, usize) -> u32) -> Self {
        let mut entries = Vec::with_capacity(rank * rank);
        for i in 0..rank {
            for j in 0..rank {
                entries.push(f(i, j));
            }
        }
        CoxeterMatrix { rank, entries }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.rank + j]
    }

    pub fn set(&mut self, i: usize, j: usize, m: u32) {
        self.entries[i * self.rank + j] = m;
        self.entries[j * self.rank + i] = m;
    }

    /// `self[i][j] == other[relabel[i]][relabel[j]]` for all pairs.
    pub fn matches_under(&self, other: &CoxeterMatrix, relabel: &[usize]) -> bool {
        self.rank == other.rank
            && (0..self.rank).all(|i| {
                (0..self.rank).all(|j| self.get(i, j) == other.get(relabel[i], relabel[j]))
            })
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.entries.chunks(self.rank.max(1)).take(self.rank)
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
