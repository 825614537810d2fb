//! Floating-point realization used for area and overlap checks.

use super::basis::EdgeBasis;
use super::tile::{Anchor, Tile, Tiling};
use crate::error::{Error, Result};

pub type Point = [f64; 2];

pub fn signed_area(ring: &[Point]) -> f64 {
    let n = ring.len();
    (0..n)
        .map(|i| {
            let (a, b) = (ring[i], ring[(i + 1) % n]);
            a[0] * b[1] - b[0] * a[1]
        })
        .sum::<f64>()
        / 2.0
}

fn cross(o: Point, a: Point, b: Point) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Ear-clipping triangulation of a simple polygon.
pub fn triangulate(ring: &[Point]) -> Vec<[Point; 3]> {
    let mut pts: Vec<Point> = ring.to_vec();
    if signed_area(&pts) < 0.0 {
        pts.reverse();
    }
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    let mut out = Vec::new();
    let mut guard = 0;
    while idx.len() > 3 && guard < 10_000 {
        guard += 1;
        let n = idx.len();
        let mut clipped = false;
        for i in 0..n {
            let (a, b, c) = (
                pts[idx[(i + n - 1) % n]],
                pts[idx[i]],
                pts[idx[(i + 1) % n]],
            );
            if cross(a, b, c) <= 1e-15 {
                continue;
            }
            let blocked = idx.iter().any(|&k| {
                let p = pts[k];
                p != a
                    && p != b
                    && p != c
                    && cross(a, b, p) >= 0.0
                    && cross(b, c, p) >= 0.0
                    && cross(c, a, p) >= 0.0
            });
            if !blocked {
                out.push([a, b, c]);
                idx.remove(i);
                clipped = true;
                break;
            }
        }
        if !clipped {
            // degenerate leftovers (collinear runs) carry no area
            break;
        }
    }
    if idx.len() == 3 {
        out.push([pts[idx[0]], pts[idx[1]], pts[idx[2]]]);
    }
    out
}

/// Area of the intersection of two triangles (Sutherland–Hodgman).
pub fn triangle_overlap(a: &[Point; 3], b: &[Point; 3]) -> f64 {
    let orient = |t: &[Point; 3]| -> [Point; 3] {
        if cross(t[0], t[1], t[2]) < 0.0 {
            [t[0], t[2], t[1]]
        } else {
            *t
        }
    };
    let (a, b) = (orient(a), orient(b));
    let mut poly: Vec<Point> = a.to_vec();
    for i in 0..3 {
        let (e0, e1) = (b[i], b[(i + 1) % 3]);
        let inside = |p: Point| cross(e0, e1, p) >= 0.0;
        let mut next = Vec::new();
        for j in 0..poly.len() {
            let (p, q) = (poly[j], poly[(j + 1) % poly.len()]);
            let (pin, qin) = (inside(p), inside(q));
            if pin {
                next.push(p);
            }
            if pin != qin {
                let dp = cross(e0, e1, p);
                let dq = cross(e0, e1, q);
                let t = dp / (dp - dq);
                next.push([p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])]);
            }
        }
        poly = next;
        if poly.len() < 3 {
            return 0.0;
        }
    }
    signed_area(&poly).abs()
}

pub fn realize_ring(ring: &[Anchor], basis: &EdgeBasis) -> Vec<Point> {
    ring.iter().map(|a| basis.point(a.0)).collect()
}

/// Vertices of `Y(w)`: down the identity border, back up the tiling's border.
pub fn polygon_ring(t: &Tiling, basis: &EdgeBasis) -> Vec<Point> {
    let n = t.symbols.len();
    let mut ring = Vec::with_capacity(2 * n);
    let mut p = Anchor(0);
    ring.push(basis.point(0));
    for l in 0..n {
        p = p.with(l);
        ring.push(basis.point(p.0));
    }
    let border = t.border();
    let mut right = Vec::new();
    let mut q = Anchor(0);
    for &l in &border[..n.saturating_sub(1)] {
        q = q.with(l);
        right.push(basis.point(q.0));
    }
    right.reverse();
    ring.extend(right);
    ring
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverageReport {
    pub polygon_area: f64,
    pub tile_area: f64,
    pub max_overlap: f64,
    /// Smallest signed tile area; negative means a tile is turned inside out.
    pub min_tile_area: f64,
}

impl CoverageReport {
    /// Areas agree and overlaps vanish, relative to the polygon area.
    pub fn ok(&self, rel_tol: f64) -> bool {
        let scale = self.polygon_area.abs().max(1.0);
        (self.tile_area - self.polygon_area).abs() <= rel_tol * scale
            && self.max_overlap <= rel_tol * scale
            && self.min_tile_area > -rel_tol * scale
    }
}

/// Compares tile areas with the polygon area and measures pairwise interior
/// overlaps of all simple tiles.
pub fn coverage(t: &Tiling, basis: &EdgeBasis) -> Result<CoverageReport> {
    if basis.symbols() != t.symbols {
        return Err(Error::BasisMismatch);
    }
    let polygon_area = signed_area(&polygon_ring(t, basis));
    let leaves: Vec<&Tile> = t.tiles.iter().flat_map(Tile::leaves).collect();
    let rings: Vec<Vec<Point>> = leaves
        .iter()
        .map(|l| realize_ring(&l.ring(), basis))
        .collect();
    let areas: Vec<f64> = rings.iter().map(|r| signed_area(r)).collect();
    let tris: Vec<Vec<[Point; 3]>> = rings.iter().map(|r| triangulate(r)).collect();
    let boxes: Vec<[f64; 4]> = rings.iter().map(|r| bbox(r)).collect();

    let mut max_overlap: f64 = 0.0;
    for i in 0..rings.len() {
        for j in i + 1..rings.len() {
            let (a, b) = (boxes[i], boxes[j]);
            let eps = 1e-12;
            if a[2] <= b[0] + eps || b[2] <= a[0] + eps || a[3] <= b[1] + eps || b[3] <= a[1] + eps
            {
                continue;
            }
            let overlap: f64 = tris[i]
                .iter()
                .flat_map(|x| tris[j].iter().map(move |y| triangle_overlap(x, y)))
                .sum();
            max_overlap = max_overlap.max(overlap);
        }
    }
    Ok(CoverageReport {
        polygon_area,
        tile_area: areas.iter().sum(),
        max_overlap,
        min_tile_area: areas.iter().copied().fold(f64::INFINITY, f64::min),
    })
}

fn bbox(ring: &[Point]) -> [f64; 4] {
    ring.iter().fold(
        [
            f64::INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::NEG_INFINITY,
        ],
        |b, p| {
            [
                b[0].min(p[0]),
                b[1].min(p[1]),
                b[2].max(p[0]),
                b[3].max(p[1]),
            ]
        },
    )
}
