//! SVG output for polygons `Y(w)` and their tilings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::tilings::geometry::{polygon_ring, Point};
use crate::tilings::{Anchor, EdgeBasis, Tile, TileKind, Tiling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Palette {
    #[default]
    Default,
    Mono,
}

impl Palette {
    pub fn fill(&self, kind: TileKind) -> &'static str {
        match (self, kind) {
            (Palette::Default, TileKind::Rhombus) => "#f3e9d2",
            (Palette::Default, TileKind::HexagonMegatile) => "#8fb8de",
            (Palette::Default, TileKind::OctagonMegatile) => "#f4a261",
            (Palette::Default, TileKind::GroupedMegatile) => "#9fd39b",
            (Palette::Mono, TileKind::Rhombus) => "#ffffff",
            (Palette::Mono, TileKind::HexagonMegatile) => "#c8c8c8",
            (Palette::Mono, TileKind::OctagonMegatile) => "#a0a0a0",
            (Palette::Mono, TileKind::GroupedMegatile) => "#e0e0e0",
        }
    }
}

impl std::str::FromStr for Palette {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "default" => Ok(Palette::Default),
            "mono" => Ok(Palette::Mono),
            _ => Err(Error::Parse(format!(
                "unknown palette '{s}' (expected default or mono)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderConfig {
    /// Pixels per unit edge.
    pub scale: f64,
    pub stroke_width: f64,
    pub palette: Palette,
    pub show_labels: bool,
    /// Informational; the caller picks the basis.
    pub regular_mode: bool,
}

impl Default for RenderConfig {
    fn default() -> Self {
        RenderConfig {
            scale: 60.0,
            stroke_width: 1.5,
            palette: Palette::Default,
            show_labels: false,
            regular_mode: false,
        }
    }
}

/// One rendered tile. Simple tiles have a single ring; a grouped megatile has
/// one ring per connected piece of its outline.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    pub kind: TileKind,
    pub rings: Vec<Vec<Point>>,
    /// Border symbols spanning the tile.
    pub labels: Vec<i32>,
}

impl Polygon {
    pub fn vertex_count(&self) -> usize {
        self.rings.iter().map(Vec::len).sum()
    }
}

pub fn realize(t: &Tiling, basis: &EdgeBasis) -> Result<Vec<Polygon>> {
    if basis.symbols() != t.symbols {
        return Err(Error::BasisMismatch);
    }
    Ok(t.tiles
        .iter()
        .map(|tile| {
            let rings = if tile.parts.is_empty() {
                vec![tile.ring()]
            } else {
                union_rings(tile)
            };
            Polygon {
                kind: tile.kind,
                rings: rings
                    .iter()
                    .map(|r| r.iter().map(|a| basis.point(a.0)).collect())
                    .collect(),
                labels: tile.labels().iter().map(|&l| t.symbols.symbol(l)).collect(),
            }
        })
        .collect())
}

/// Outline of a grouped megatile: edges shared by two parts cancel.
fn union_rings(tile: &Tile) -> Vec<Vec<Anchor>> {
    let mut edges: BTreeMap<(Anchor, Anchor), usize> = BTreeMap::new();
    for leaf in tile.leaves() {
        let r = leaf.ring();
        for i in 0..r.len() {
            let (a, b) = (r[i], r[(i + 1) % r.len()]);
            if let Some(c) = edges.get_mut(&(b, a)) {
                *c -= 1;
                if *c == 0 {
                    edges.remove(&(b, a));
                }
            } else {
                *edges.entry((a, b)).or_default() += 1;
            }
        }
    }
    let mut rings = Vec::new();
    while let Some((&(start, next), _)) = edges.iter().next() {
        edges.remove(&(start, next));
        let mut ring = vec![start];
        let mut cur = next;
        while cur != start {
            ring.push(cur);
            let (&key, _) = edges
                .range((cur, Anchor(0))..=(cur, Anchor(u64::MAX)))
                .next()
                .expect("outline edges form closed rings");
            edges.remove(&key);
            cur = key.1;
        }
        rings.push(ring);
    }
    rings
}

/// SVG document for a list of tile polygons.
pub fn to_svg(polygons: &[Polygon], config: &RenderConfig) -> String {
    document(None, polygons, config)
}

/// The polygon `Y(w)` outline plus its tiles.
pub fn render_tiling(t: &Tiling, basis: &EdgeBasis, config: &RenderConfig) -> Result<String> {
    let polygons = realize(t, basis)?;
    let outline = polygon_ring(t, basis);
    Ok(document(Some(&outline), &polygons, config))
}

fn document(outline: Option<&[Point]>, polygons: &[Polygon], config: &RenderConfig) -> String {
    let s = config.scale;
    let pts = outline
        .into_iter()
        .flatten()
        .chain(polygons.iter().flat_map(|p| p.rings.iter().flatten()));
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in pts {
        lo = [lo[0].min(p[0]), lo[1].min(-p[1])];
        hi = [hi[0].max(p[0]), hi[1].max(-p[1])];
    }
    if lo[0] > hi[0] {
        lo = [0.0, 0.0];
        hi = [0.0, 0.0];
    }
    let margin = 0.5;
    let (x0, y0) = ((lo[0] - margin) * s, (lo[1] - margin) * s);
    let (w, h) = (
        (hi[0] - lo[0] + 2.0 * margin) * s,
        (hi[1] - lo[1] + 2.0 * margin) * s,
    );

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
        num(w),
        num(h),
        num(x0),
        num(y0),
        num(w),
        num(h)
    );
    let stroke = num(config.stroke_width);
    for p in polygons {
        let mut d = String::new();
        for ring in &p.rings {
            for (i, v) in ring.iter().enumerate() {
                let _ = write!(
                    d,
                    "{}{} {} ",
                    if i == 0 { "M" } else { "L" },
                    num(v[0] * s),
                    num(-v[1] * s)
                );
            }
            d.push('Z');
        }
        let _ = writeln!(
            out,
            "  <path class=\"{}\" d=\"{}\" fill=\"{}\" stroke=\"#000000\" stroke-width=\"{}\" stroke-linejoin=\"round\"/>",
            p.kind,
            d,
            config.palette.fill(p.kind),
            stroke
        );
    }
    if let Some(ring) = outline {
        let points: Vec<String> = ring
            .iter()
            .map(|v| format!("{},{}", num(v[0] * s), num(-v[1] * s)))
            .collect();
        let _ = writeln!(
            out,
            "  <polygon class=\"outline\" points=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"{}\"/>",
            points.join(" "),
            num(2.0 * config.stroke_width)
        );
    }
    if config.show_labels {
        for p in polygons {
            let all: Vec<&Point> = p.rings.iter().flatten().collect();
            if all.is_empty() {
                continue;
            }
            let cx = all.iter().map(|v| v[0]).sum::<f64>() / all.len() as f64;
            let cy = all.iter().map(|v| v[1]).sum::<f64>() / all.len() as f64;
            let text: Vec<String> = p.labels.iter().map(i32::to_string).collect();
            let _ = writeln!(
                out,
                "  <text x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"middle\" dominant-baseline=\"middle\">{}</text>",
                num(cx * s),
                num(-cy * s),
                num(0.25 * s),
                text.join(",")
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

fn num(x: f64) -> String {
    // avoid "-0.000000"
    let v = if x.abs() < 5e-7 { 0.0 } else { x };
    format!("{v:.6}")
}
