//! The move set of a subtraction game.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite, nonempty set of positive move sizes, stored strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct SubtractionSet {
    elements: Vec<u32>,
}

impl SubtractionSet {
    /// Sorts the input. Duplicates are rejected rather than merged.
    pub fn new(mut elements: Vec<u32>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptySet);
        }
        elements.sort_unstable();
        if elements[0] == 0 {
            return Err(Error::ZeroElement);
        }
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement(w[0]));
        }
        Ok(Self { elements })
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min(&self) -> u32 {
        self.elements[0]
    }

    pub fn max(&self) -> u32 {
        *self.elements.last().unwrap()
    }

    /// Recurrence window length, `max(S)`.
    pub fn window(&self) -> usize {
        self.max() as usize
    }

    pub fn contains(&self, s: u32) -> bool {
        self.elements.binary_search(&s).is_ok()
    }

    /// The set with `s` removed, or `None` if that would leave it empty or `s`
    /// is not an element.
    pub fn without(&self, s: u32) -> Option<Self> {
        if !self.contains(s) || self.len() == 1 {
            return None;
        }
        let elements = self.elements.iter().copied().filter(|&e| e != s).collect();
        Some(Self { elements })
    }

    /// Every element multiplied by `d`.
    pub fn scaled(&self, d: u32) -> Result<Self> {
        Self::new(self.elements.iter().map(|&e| e * d).collect())
    }
}

impl fmt::Display for SubtractionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for SubtractionSet {
    type Err = Error;

    /// Parses a comma-separated list such as `1,3,7,8`.
    fn from_str(s: &str) -> Result<Self> {
        let mut elements = Vec::new();
        let mut offset = 0;
        for part in s.split(',') {
            let trimmed = part.trim();
            let lead = part.len() - part.trim_start().len();
            let value = trimmed.parse::<u32>().map_err(|_| Error::Parse {
                position: offset + lead,
                message: format!("expected a non-negative integer, found {trimmed:?}"),
            })?;
            elements.push(value);
            offset += part.len() + 1;
        }
        Self::new(elements)
    }
}

impl TryFrom<Vec<u32>> for SubtractionSet {
    type Error = Error;

    fn try_from(value: Vec<u32>) -> Result<Self> {
        Self::new(value)
    }
}

impl From<SubtractionSet> for Vec<u32> {
    fn from(value: SubtractionSet) -> Self {
        value.elements
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalizes_order() {
        let s = SubtractionSet::new(vec![8, 1, 7, 3]).unwrap();
        assert_eq!(s.elements(), &[1, 3, 7, 8]);
        assert_eq!(s.window(), 8);
        assert_eq!(s.to_string(), "1,3,7,8");
    }

    #[test]
    fn rejects_bad_sets() {
        assert_eq!(SubtractionSet::new(vec![]), Err(Error::EmptySet));
        assert_eq!(SubtractionSet::new(vec![0, 2]), Err(Error::ZeroElement));
        assert_eq!(SubtractionSet::new(vec![2, 1, 2]), Err(Error::DuplicateElement(2)));
    }

    #[test]
    fn parses_lists() {
        let s: SubtractionSet = "1, 4,10".parse().unwrap();
        assert_eq!(s.elements(), &[1, 4, 10]);
        match "1,x".parse::<SubtractionSet>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn without_and_scaled() {
        let s = SubtractionSet::new(vec![1, 2, 5]).unwrap();
        assert_eq!(s.without(5).unwrap().elements(), &[1, 2]);
        assert!(s.without(3).is_none());
        assert!(SubtractionSet::new(vec![4]).unwrap().without(4).is_none());
        assert_eq!(s.scaled(3).unwrap().elements(), &[3, 6, 15]);
    }
}
