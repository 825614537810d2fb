use std::collections::BTreeMap;

use super::tile::{Anchor, Tile, TileKind, Tiling};
use crate::coxeter::{CoxeterGroup, CoxeterSystem, Family, GroupElement};
use crate::embeddings::{embed_word, AdmissiblePartition};
use crate::error::{Error, Result};
use crate::words::Word;

/// How one generator acts on border positions.
#[derive(Debug, Clone, PartialEq, Eq)]
enum BorderMove {
    /// Disjoint swaps of adjacent positions `(q, q+1)`.
    Swaps(Vec<usize>),
    /// `(q, q+2)(q+1, q+3)`: the central four edges trade pairs.
    Octagon(usize),
}

fn classify(generator: &GroupElement, index: usize) -> Result<BorderMove> {
    let cycles: Vec<Vec<usize>> = generator
        .cycles()
        .into_iter()
        .filter(|c| c.len() > 1)
        .collect();
    if cycles.iter().any(|c| c.len() != 2) || cycles.is_empty() {
        return Err(Error::UntileableGenerator(index + 1));
    }
    let mut pairs: Vec<(usize, usize)> = cycles
        .iter()
        .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
        .collect();
    pairs.sort_unstable();
    if pairs.iter().all(|&(a, b)| b == a + 1) {
        return Ok(BorderMove::Swaps(pairs.iter().map(|p| p.0).collect()));
    }
    if let [(a, b), (c, d)] = pairs[..] {
        if b == a + 2 && c == a + 1 && d == a + 3 {
            return Ok(BorderMove::Octagon(a));
        }
    }
    Err(Error::UntileableGenerator(index + 1))
}

/// Walks a reduced word across the border, emitting one tile per swap.
struct Sweeper<'a> {
    group: &'a CoxeterGroup,
    moves: Vec<BorderMove>,
    border: Vec<usize>,
    element: usize,
}

impl<'a> Sweeper<'a> {
    fn new(group: &'a CoxeterGroup) -> Result<Self> {
        let moves = group
            .system
            .generators()
            .iter()
            .enumerate()
            .map(|(i, g)| classify(g, i))
            .collect::<Result<_>>()?;
        Ok(Sweeper {
            group,
            moves,
            border: (0..group.system.symbols().len()).collect(),
            element: 0,
        })
    }

    fn prefix(&self, position: usize) -> Anchor {
        Anchor::from_labels(&self.border[..position])
    }

    fn step(&mut self, g: usize, provenance: usize, word: &Word) -> Result<Vec<Tile>> {
        let table = &self.group.table;
        if g >= self.group.rank() {
            return Err(Error::GeneratorOutOfRange {
                index: g + 1,
                rank: self.group.rank(),
            });
        }
        let next = table.right_mul(self.element, g);
        if table.length(next) != table.length(self.element) + 1 {
            return Err(Error::NotReduced(word.to_string()));
        }
        self.element = next;
        let mut tiles = Vec::new();
        match &self.moves[g] {
            BorderMove::Swaps(starts) => {
                for &q in starts {
                    tiles.push(Tile::rhombus(
                        self.prefix(q),
                        self.border[q],
                        self.border[q + 1],
                        provenance,
                    ));
                    self.border.swap(q, q + 1);
                }
            }
            &BorderMove::Octagon(q) => {
                let left: Vec<usize> = self.border[q..q + 4].to_vec();
                let anchor = self.prefix(q);
                self.border[q..q + 4].rotate_left(2);
                check_octagon(&self.group.system, &left, &self.border[q..q + 4])?;
                tiles.push(Tile {
                    kind: TileKind::OctagonMegatile,
                    anchor,
                    boundary: left,
                    parts: Vec::new(),
                    provenance,
                });
            }
        }
        Ok(tiles)
    }

    fn border_element(&self) -> GroupElement {
        GroupElement::from_images(&self.border).expect("border is a permutation")
    }
}

/// The left edges `E = (a, b, c, d)` must be symmetric through the horizontal
/// (`c = -b`, `d = -a`), and the right edges must be `E` with each pair
/// transposed and then reflected through the vertical (`x ↦ -x` on labels).
fn check_octagon(system: &CoxeterSystem, left: &[usize], right: &[usize]) -> Result<()> {
    let sym = |l: usize| system.symbols().symbol(l);
    let e: Vec<i32> = left.iter().map(|&l| sym(l)).collect();
    if e[2] != -e[1] || e[3] != -e[0] {
        return Err(Error::MegatileViolation(format!(
            "left edges {e:?} are not horizontally symmetric"
        )));
    }
    let expected = [-e[1], -e[0], -e[3], -e[2]];
    let got: Vec<i32> = right.iter().map(|&l| sym(l)).collect();
    if got != expected {
        return Err(Error::MegatileViolation(format!(
            "right edges {got:?}, rules give {expected:?}"
        )));
    }
    Ok(())
}

fn sweep(group: &CoxeterGroup, word: &Word) -> Result<Tiling> {
    let mut s = Sweeper::new(group)?;
    let mut tiles = Vec::new();
    for (k, &g) in word.letters().iter().enumerate() {
        tiles.extend(s.step(g, k, word)?);
    }
    Ok(Tiling::new(
        group.system.ctype(),
        group.system.symbols(),
        s.border_element(),
        tiles,
    ))
}

/// Rhombic tiling of a type A polygon from a reduced word.
pub fn tile_word_a(group: &CoxeterGroup, word: &Word) -> Result<Tiling> {
    if group.system.ctype().family != Family::A {
        return Err(Error::WrongFamily(format!(
            "{} is not a type A host",
            group.system.ctype()
        )));
    }
    sweep(group, word)
}

/// Tiling of a type D polygon: two mirrored rhombi per `s_i` (`i >= 2`) and
/// one octagon megatile per `s_1`.
pub fn tile_word_d(group: &CoxeterGroup, word: &Word) -> Result<Tiling> {
    if group.system.ctype().family != Family::D {
        return Err(Error::WrongFamily(format!(
            "{} is not a type D host",
            group.system.ctype()
        )));
    }
    sweep(group, word)
}

pub fn tile_word(group: &CoxeterGroup, word: &Word) -> Result<Tiling> {
    match group.system.ctype().family {
        Family::A => tile_word_a(group, word),
        Family::D => tile_word_d(group, word),
        _ => Err(Error::UnsupportedType(group.system.ctype())),
    }
}

/// Tiles the host word of `x_word` and merges the tiles of each `T` letter
/// into one megatile. A rank-two block in a type A host becomes a hexagon
/// that forgets which of its two rhombic fillings was used.
pub fn subtiling(p: &AdmissiblePartition, x_word: &Word) -> Result<Tiling> {
    let host = p.host();
    let s_word = embed_word(p, x_word)?;
    let mut sweeper = Sweeper::new(host)?;
    let mut tiles = Vec::new();
    let mut cursor = 0;
    for (k, &t) in x_word.letters().iter().enumerate() {
        let block = &p.blocks()[t];
        let hexagon = host.system.ctype().family == Family::A
            && block.len() == 2
            && host.system.m(block[0], block[1]) == 3;
        let before = sweeper.border.clone();
        let mut parts = Vec::new();
        for _ in 0..p.expansion(t).len() {
            parts.extend(sweeper.step(s_word.letters()[cursor], k, &s_word)?);
            cursor += 1;
        }
        let tile = if hexagon {
            let q = block.iter().copied().min().unwrap();
            Tile {
                kind: TileKind::HexagonMegatile,
                anchor: Anchor::from_labels(&before[..q]),
                boundary: before[q..q + 3].to_vec(),
                parts: Vec::new(),
                provenance: k,
            }
        } else if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            group_tiles(parts, k)
        };
        tiles.push(tile);
    }
    Ok(Tiling::new(
        host.system.ctype(),
        host.system.symbols(),
        sweeper.border_element(),
        tiles,
    ))
}

fn group_tiles(mut parts: Vec<Tile>, provenance: usize) -> Tile {
    parts.sort();
    let labels: Vec<usize> = {
        let mut l: Vec<usize> = parts.iter().flat_map(Tile::labels).collect();
        l.sort_unstable();
        l.dedup();
        l
    };
    Tile {
        kind: TileKind::GroupedMegatile,
        anchor: parts[0].anchor,
        boundary: labels,
        parts,
        provenance,
    }
}

/// Reflection of a type A tiling through the horizontal line through the
/// middle vertex: label `k` becomes `N+1-k` for `N` labels.
pub fn mirror_a(t: &Tiling, basis: &super::EdgeBasis) -> Result<Tiling> {
    if t.host.family != Family::A {
        return Err(Error::WrongFamily(format!(
            "{} is not a type A host",
            t.host
        )));
    }
    if basis.symbols() != t.symbols {
        return Err(Error::BasisMismatch);
    }
    if !basis.is_mirror_symmetric() {
        return Err(Error::AsymmetricBasis);
    }
    let n = t.symbols.len();
    let flip = |l: usize| n - 1 - l;
    let full = (1u64 << n) - 1;
    let flip_mask = |m: u64| {
        (0..n)
            .filter(|&l| m >> l & 1 == 1)
            .fold(0u64, |acc, l| acc | 1 << flip(l))
    };

    fn mirror_tile(
        tile: &Tile,
        flip: &dyn Fn(usize) -> usize,
        flip_mask: &dyn Fn(u64) -> u64,
        full: u64,
    ) -> Tile {
        if !tile.parts.is_empty() {
            let parts = tile
                .parts
                .iter()
                .map(|p| mirror_tile(p, flip, flip_mask, full))
                .collect();
            return group_tiles(parts, tile.provenance);
        }
        let span = Anchor::from_labels(&tile.boundary).0;
        // the image of the bottom vertex is the new top vertex
        let anchor = Anchor(flip_mask(full & !(tile.anchor.0 | span)));
        let mut boundary: Vec<usize> = tile.boundary.iter().rev().map(|&l| flip(l)).collect();
        if tile.kind == TileKind::Rhombus {
            boundary.sort_unstable();
        }
        Tile {
            kind: tile.kind,
            anchor,
            boundary,
            parts: Vec::new(),
            provenance: tile.provenance,
        }
    }

    let tiles = t
        .tiles
        .iter()
        .map(|tile| mirror_tile(tile, &flip, &flip_mask, full))
        .collect();
    let border: Vec<usize> = (0..n)
        .map(|p| flip(t.border_element.apply(flip(p))))
        .collect();
    Ok(Tiling::new(
        t.host,
        t.symbols,
        GroupElement::from_images(&border).expect("conjugate of a permutation"),
        tiles,
    ))
}

/// Tiles grouped by kind, for summaries.
pub fn kind_counts(t: &Tiling) -> BTreeMap<TileKind, usize> {
    let mut m = BTreeMap::new();
    for tile in &t.tiles {
        *m.entry(tile.kind).or_insert(0) += 1;
    }
    m
}
