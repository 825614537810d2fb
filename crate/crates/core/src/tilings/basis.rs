use std::f64::consts::{FRAC_PI_2, PI};

use crate::coxeter::SymbolSet;
use crate::error::{Error, Result};

/// Direction vectors for the border labels, indexed like the symbol set
/// (top-to-bottom order of the identity border).
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeBasis {
    symbols: SymbolSet,
    angles: Vec<f64>,
    vectors: Vec<[f64; 2]>,
    strict: Option<f64>,
}

/// Type D edge geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DGeometry {
    /// Every edge meets the horizontal at more than `threshold` radians.
    Strict { threshold: f64 },
    /// Half of a regular `4n`-gon.
    Regular,
}

impl EdgeBasis {
    fn new(symbols: SymbolSet, angles: Vec<f64>, strict: Option<f64>) -> Result<Self> {
        if angles.len() != symbols.len() {
            return Err(Error::InvalidAngles(format!(
                "{} angles for {} labels",
                angles.len(),
                symbols.len()
            )));
        }
        for (k, &a) in angles.iter().enumerate() {
            if !a.is_finite() || a <= PI || a >= 2.0 * PI {
                return Err(Error::InvalidAngles(format!(
                    "edge {} at {a} does not descend",
                    k + 1
                )));
            }
        }
        if angles.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidAngles(
                "angles must increase strictly down the left border".into(),
            ));
        }
        if let Some(threshold) = strict {
            for (k, &a) in angles.iter().enumerate() {
                let from_horizontal = (a - PI).min(2.0 * PI - a);
                if from_horizontal <= threshold {
                    return Err(Error::InvalidAngles(format!(
                        "edge {} meets the horizontal at {from_horizontal}, not above {threshold}",
                        k + 1
                    )));
                }
            }
        }
        let vectors = angles.iter().map(|a| [a.cos(), a.sin()]).collect();
        Ok(EdgeBasis {
            symbols,
            angles,
            vectors,
            strict,
        })
    }

    /// Left half of a regular `2n`-gon: edge `k` points along `π + (2k-1)π/(2n)`.
    pub fn regular_a(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidAngles(
                "type A needs at least two labels".into(),
            ));
        }
        let angles = (1..=n)
            .map(|k| PI + (2 * k - 1) as f64 * PI / (2 * n) as f64)
            .collect();
        Self::new(SymbolSet::Unsigned(n), angles, None)
    }

    /// Any descending, strictly turning set of type A directions.
    pub fn custom_a(angles: Vec<f64>) -> Result<Self> {
        if angles.len() < 2 {
            return Err(Error::InvalidAngles(
                "type A needs at least two labels".into(),
            ));
        }
        Self::new(SymbolSet::Unsigned(angles.len()), angles, None)
    }

    pub fn d(n: usize, geometry: DGeometry) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidAngles(
                "type D needs rank at least two".into(),
            ));
        }
        let m = 2 * n;
        match geometry {
            DGeometry::Regular => {
                let angles = (0..m)
                    .map(|p| PI + (2 * p + 1) as f64 * PI / (2 * m) as f64)
                    .collect();
                Self::new(SymbolSet::Signed(n), angles, None)
            }
            DGeometry::Strict { threshold } => {
                if !(threshold > 0.0 && threshold < FRAC_PI_2) {
                    return Err(Error::InvalidAngles(format!(
                        "threshold {threshold} outside (0, pi/2)"
                    )));
                }
                // evenly spread inside the cone within (pi/2 - threshold) of straight down
                let step = (FRAC_PI_2 - threshold) / n as f64;
                let centre = (m as f64 - 1.0) / 2.0;
                let angles = (0..m)
                    .map(|p| 1.5 * PI + (p as f64 - centre) * step)
                    .collect();
                Self::new(SymbolSet::Signed(n), angles, Some(threshold))
            }
        }
    }

    pub fn d_custom(n: usize, angles: Vec<f64>, threshold: Option<f64>) -> Result<Self> {
        Self::new(SymbolSet::Signed(n), angles, threshold)
    }

    pub fn symbols(&self) -> SymbolSet {
        self.symbols
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn vector(&self, label: usize) -> [f64; 2] {
        self.vectors[label]
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn steepness(&self) -> Option<f64> {
        self.strict
    }

    /// Whether label `k` and label `len-1-k` are mirror images through the
    /// vertical, so the left border is symmetric about its horizontal midline.
    pub fn is_mirror_symmetric(&self) -> bool {
        let n = self.angles.len();
        (0..n).all(|k| (self.angles[k] + self.angles[n - 1 - k] - 3.0 * PI).abs() < 1e-12)
    }

    /// Sum of the vectors of the labels in `mask`.
    pub fn point(&self, mask: u64) -> [f64; 2] {
        let mut p = [0.0, 0.0];
        for (i, v) in self.vectors.iter().enumerate() {
            if mask >> i & 1 == 1 {
                p[0] += v[0];
                p[1] += v[1];
            }
        }
        p
    }
}
