use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which pairs of vertices must receive distinct colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Adjacent vertices.
    Proper,
    /// Vertices with a common neighbor.
    Injective,
    /// Vertices at distance one or two.
    #[serde(rename = "twodistance")]
    TwoDistance,
    /// End vertices of a simple path on four vertices.
    #[serde(rename = "einjective")]
    EInjective,
}

impl Mode {
    pub const ALL: [Mode; 4] = [
        Mode::Proper,
        Mode::Injective,
        Mode::TwoDistance,
        Mode::EInjective,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Proper => "proper",
            Mode::Injective => "injective",
            Mode::TwoDistance => "twodistance",
            Mode::EInjective => "einjective",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "proper" => Ok(Mode::Proper),
            "injective" => Ok(Mode::Injective),
            "twodistance" | "distance2" | "square" => Ok(Mode::TwoDistance),
            "einjective" | "ei" => Ok(Mode::EInjective),
            _ => Err(Error::UnknownMode(s.to_string())),
        }
    }
}

/// A total vertex coloring with colors `1..=k`, tagged with the mode it claims.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<u32>,
    mode: Mode,
    k: usize,
}

impl Coloring {
    /// Wraps a color vector. Color 0 is rejected; `k` is the number of distinct
    /// colors actually used.
    pub fn new(colors: Vec<u32>, mode: Mode) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::ZeroColor(v));
        }
        let k = colors.iter().collect::<BTreeSet<_>>().len();
        Ok(Coloring { colors, mode, k })
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Number of distinct colors used.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Same classes renumbered `1..=k` by order of first appearance.
    pub fn normalized(&self) -> Coloring {
        let mut map = std::collections::HashMap::new();
        let colors = self
            .colors
            .iter()
            .map(|c| {
                let next = map.len() as u32 + 1;
                *map.entry(*c).or_insert(next)
            })
            .collect();
        Coloring {
            colors,
            mode: self.mode,
            k: self.k,
        }
    }

    pub fn with_mode(mut self, mode: Mode) -> Coloring {
        self.mode = mode;
        self
    }
}
