//! Serializable summary shared by the CLI and library users.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::semigroup::{GeneratorSet, NumericalSemigroup};

/// `{frobenius, small_elements, msg, genus, multiplicity}`; `small_elements`
/// lists the nonzero members below the Frobenius number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub frobenius: usize,
    pub small_elements: Vec<usize>,
    pub msg: GeneratorSet,
    pub genus: usize,
    pub multiplicity: usize,
}

impl From<&NumericalSemigroup> for Summary {
    fn from(s: &NumericalSemigroup) -> Self {
        Summary {
            frobenius: s.frobenius(),
            small_elements: s.small_elements(),
            msg: s.minimal_generators(),
            genus: s.genus(),
            multiplicity: s.multiplicity(),
        }
    }
}

impl Summary {
    /// Rebuilds the semigroup from `frobenius` and `small_elements`.
    pub fn to_semigroup(&self) -> Result<NumericalSemigroup> {
        NumericalSemigroup::from_small_elements(self.frobenius, self.small_elements.iter().copied())
    }
}
