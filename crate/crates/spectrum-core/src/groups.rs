//! Sequences of universal classes (families of transitions between classes).

use serde::Serialize;

use crate::error::{Result, SpectrumError};
use crate::farey::{validate_chain, TransitionChain};
use crate::ratio::Ratio;
use crate::spectrum::class_members;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassSequenceReport {
    /// Chain of the classes' first members `2 − h`.
    pub first_members: TransitionChain,
    /// Chain of the Hausdorff dimensions themselves.
    pub dimensions: TransitionChain,
}

impl ClassSequenceReport {
    pub fn is_valid(&self) -> bool {
        self.first_members.is_valid() && self.dimensions.is_valid()
    }
}

pub fn validate_class_sequence(dimensions: &[Ratio]) -> Result<ClassSequenceReport> {
    if dimensions.len() < 2 {
        return Err(SpectrumError::ChainTooShort {
            len: dimensions.len(),
        });
    }
    let firsts = dimensions
        .iter()
        .map(|h| Ok(class_members(h, 1)?.members.remove(0)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassSequenceReport {
        first_members: validate_chain(&firsts)?,
        dimensions: validate_chain(dimensions)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_sequence() {
        let hs: Vec<Ratio> = [(9, 5), (16, 9), (7, 4)]
            .iter()
            .map(|&(p, q)| Ratio::new(p, q))
            .collect();
        let rep = validate_class_sequence(&hs).unwrap();
        assert!(rep.is_valid());
        assert_eq!(rep.first_members.entries[1], Ratio::new(2, 9));
    }

    #[test]
    fn rejects_border_class() {
        let hs = vec![Ratio::new(3, 2), Ratio::from_integer(2)];
        assert!(matches!(
            validate_class_sequence(&hs),
            Err(SpectrumError::ClassOutOfRange { .. })
        ));
    }
}
