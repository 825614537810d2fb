//! Permutation realizations of finite Coxeter systems with Cayley-graph
//! lengths and descents.

mod element;
mod length;
mod system;
mod types;

pub use element::GroupElement;
pub use length::{length_and_descents, longest_element, GeneratorSet, LengthTable};
pub use system::{build_system, CoxeterSystem, SymbolSet};
pub use types::{CoxeterMatrix, CoxeterType, Family};

use crate::config::Config;
use crate::error::Result;

/// A system together with its length table.
#[derive(Debug, Clone)]
pub struct CoxeterGroup {
    pub system: CoxeterSystem,
    pub table: LengthTable,
}

impl CoxeterGroup {
    pub fn new(system: CoxeterSystem, config: &Config) -> Result<Self> {
        let table = length_and_descents(&system, config)?;
        Ok(CoxeterGroup { system, table })
    }

    /// Builds a supported host by type.
    pub fn host(ctype: CoxeterType, config: &Config) -> Result<Self> {
        Self::new(build_system(ctype)?, config)
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn longest(&self) -> GroupElement {
        longest_element(&self.table)
    }
}
