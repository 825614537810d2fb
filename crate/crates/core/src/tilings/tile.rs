use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::coxeter::{CoxeterType, GroupElement, SymbolSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TileKind {
    Rhombus,
    HexagonMegatile,
    OctagonMegatile,
    GroupedMegatile,
}

impl TileKind {
    pub const ALL: [TileKind; 4] = [
        TileKind::Rhombus,
        TileKind::HexagonMegatile,
        TileKind::OctagonMegatile,
        TileKind::GroupedMegatile,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TileKind::Rhombus => "rhombus",
            TileKind::HexagonMegatile => "hexagon_megatile",
            TileKind::OctagonMegatile => "octagon_megatile",
            TileKind::GroupedMegatile => "grouped_megatile",
        }
    }
}

impl fmt::Display for TileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A lattice point given by 0/1 coefficients over the edge labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Anchor(pub u64);

impl Anchor {
    pub fn from_labels(labels: &[usize]) -> Anchor {
        Anchor(labels.iter().fold(0, |m, &l| m | 1 << l))
    }

    pub fn with(self, label: usize) -> Anchor {
        debug_assert_eq!(self.0 >> label & 1, 0, "label {label} already in anchor");
        Anchor(self.0 | 1 << label)
    }

    pub fn without(self, label: usize) -> Anchor {
        Anchor(self.0 & !(1 << label))
    }

    pub fn contains(self, label: usize) -> bool {
        self.0 >> label & 1 == 1
    }

    pub fn coefficients(self, n: usize) -> Vec<u8> {
        (0..n).map(|i| (self.0 >> i & 1) as u8).collect()
    }
}

/// One tile. Identity is `(kind, anchor, boundary, parts)`; `provenance`
/// records which letter produced it and does not take part in comparisons.
#[derive(Debug, Clone)]
pub struct Tile {
    pub kind: TileKind,
    /// Top vertex.
    pub anchor: Anchor,
    /// Labels of the left boundary path from the anchor downwards. Sorted for
    /// rhombi, whose two boundary orders describe the same region.
    pub boundary: Vec<usize>,
    /// Constituents of a grouped megatile, sorted; empty otherwise.
    pub parts: Vec<Tile>,
    pub provenance: usize,
}

impl Tile {
    pub fn rhombus(anchor: Anchor, a: usize, b: usize, provenance: usize) -> Tile {
        Tile {
            kind: TileKind::Rhombus,
            anchor,
            boundary: vec![a.min(b), a.max(b)],
            parts: Vec::new(),
            provenance,
        }
    }

    /// Sorted labels spanning the tile.
    pub fn labels(&self) -> Vec<usize> {
        let mut l: Vec<usize> = if self.parts.is_empty() {
            self.boundary.clone()
        } else {
            self.parts.iter().flat_map(|p| p.labels()).collect()
        };
        l.sort_unstable();
        l.dedup();
        l
    }

    /// Simple tiles (everything but grouped megatiles) flattened.
    pub fn leaves(&self) -> Vec<&Tile> {
        if self.parts.is_empty() {
            vec![self]
        } else {
            self.parts.iter().flat_map(Tile::leaves).collect()
        }
    }

    /// Vertex ring of a simple tile: down the left boundary, back up the right.
    ///
    /// Right boundaries: a rhombus `(a, b)` has `(b, a)`, a hexagon `(a, b, c)`
    /// has `(c, b, a)` and an octagon `(a, b, c, d)` has `(c, d, a, b)`.
    pub fn ring(&self) -> Vec<Anchor> {
        let b = &self.boundary;
        let right: Vec<usize> = match self.kind {
            TileKind::Rhombus => vec![b[1], b[0]],
            TileKind::HexagonMegatile => vec![b[2], b[1], b[0]],
            TileKind::OctagonMegatile => vec![b[2], b[3], b[0], b[1]],
            TileKind::GroupedMegatile => panic!("grouped megatiles have no single ring"),
        };
        let mut ring = vec![self.anchor];
        let mut p = self.anchor;
        for &l in b {
            p = p.with(l);
            ring.push(p);
        }
        let mut up: Vec<Anchor> = Vec::new();
        let mut q = self.anchor;
        for &l in &right[..right.len() - 1] {
            q = q.with(l);
            up.push(q);
        }
        up.reverse();
        ring.extend(up);
        ring
    }

    fn key(&self) -> (TileKind, Anchor, &[usize], &[Tile]) {
        (self.kind, self.anchor, &self.boundary, &self.parts)
    }
}

impl PartialEq for Tile {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for Tile {}

impl Hash for Tile {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl PartialOrd for Tile {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tile {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

/// A canonical tiling: tiles sorted by identity.
#[derive(Debug, Clone)]
pub struct Tiling {
    pub host: CoxeterType,
    pub symbols: SymbolSet,
    pub border_element: GroupElement,
    pub tiles: Vec<Tile>,
}

impl Tiling {
    pub fn new(
        host: CoxeterType,
        symbols: SymbolSet,
        border_element: GroupElement,
        mut tiles: Vec<Tile>,
    ) -> Self {
        tiles.sort();
        Tiling {
            host,
            symbols,
            border_element,
            tiles,
        }
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn count(&self, kind: TileKind) -> usize {
        self.tiles.iter().filter(|t| t.kind == kind).count()
    }

    /// Right border labels top to bottom.
    pub fn border(&self) -> Vec<usize> {
        self.border_element.images().collect()
    }

    /// One line per tile, `kind labels anchor provenance`, in canonical order.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for t in &self.tiles {
            self.dump_tile(t, &mut out);
        }
        out
    }

    fn dump_tile(&self, t: &Tile, out: &mut String) {
        let labels: Vec<String> = t
            .boundary_or_labels()
            .iter()
            .map(|&l| self.symbols.symbol(l).to_string())
            .collect();
        let coeffs: String = t
            .anchor
            .coefficients(self.symbols.len())
            .iter()
            .map(|c| char::from(b'0' + c))
            .collect();
        out.push_str(&format!(
            "{} {} {} {}\n",
            t.kind,
            labels.join(","),
            coeffs,
            t.provenance + 1
        ));
    }
}

impl Tile {
    fn boundary_or_labels(&self) -> Vec<usize> {
        if self.parts.is_empty() {
            self.boundary.clone()
        } else {
            self.labels()
        }
    }
}

impl PartialEq for Tiling {
    fn eq(&self, other: &Self) -> bool {
        self.host == other.host
            && self.border_element == other.border_element
            && self.tiles == other.tiles
    }
}

impl Eq for Tiling {}

impl Hash for Tiling {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.host.hash(state);
        self.border_element.hash(state);
        self.tiles.hash(state);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn provenance_is_not_identity() {
        let a = Tile::rhombus(Anchor(0b1), 2, 1, 0);
        let b = Tile::rhombus(Anchor(0b1), 1, 2, 7);
        assert_eq!(a, b);
        assert_ne!(a, Tile::rhombus(Anchor(0b10), 1, 2, 0));
    }

    #[test]
    fn rings_close_up() {
        let r = Tile::rhombus(Anchor(0), 0, 1, 0);
        assert_eq!(r.ring(), vec![Anchor(0), Anchor(1), Anchor(3), Anchor(2)]);
        let oct = Tile {
            kind: TileKind::OctagonMegatile,
            anchor: Anchor(0),
            boundary: vec![2, 3, 4, 5],
            parts: vec![],
            provenance: 0,
        };
        let ring = oct.ring();
        assert_eq!(ring.len(), 8);
        assert_eq!(ring[4], Anchor::from_labels(&[2, 3, 4, 5]));
        // right side goes through c, c+d, c+d+a
        assert_eq!(ring[7], Anchor::from_labels(&[4]));
        assert_eq!(ring[6], Anchor::from_labels(&[4, 5]));
        assert_eq!(ring[5], Anchor::from_labels(&[2, 4, 5]));
        let hex = Tile {
            kind: TileKind::HexagonMegatile,
            anchor: Anchor(0),
            boundary: vec![0, 1, 2],
            parts: vec![],
            provenance: 0,
        };
        assert_eq!(hex.ring().len(), 6);
    }
}
