use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// A non-empty finite sequence of byte symbols.
///
/// Symbols compare by numeric value, so the derived `Ord` is the plain
/// lexicographic order used throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self> {
        let bytes = bytes.into();
        if bytes.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Word(bytes))
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }
}

impl Deref for Word {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl AsRef<[u8]> for Word {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

impl TryFrom<&[u8]> for Word {
    type Error = Error;

    fn try_from(bytes: &[u8]) -> Result<Self> {
        Word::new(bytes)
    }
}

impl TryFrom<&str> for Word {
    type Error = Error;

    fn try_from(s: &str) -> Result<Self> {
        Word::new(s.as_bytes())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{}\")", self.0.escape_ascii())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.escape_ascii())
    }
}

/// Rejects the empty word; shared guard for all operations taking raw slices.
#[inline]
pub(crate) fn non_empty(a: &[u8]) -> Result<&[u8]> {
    if a.is_empty() {
        Err(Error::EmptyWord)
    } else {
        Ok(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty() {
        assert_eq!(Word::new(Vec::new()), Err(Error::EmptyWord));
        assert_eq!(Word::try_from(""), Err(Error::EmptyWord));
    }

    #[test]
    fn orders_by_byte_value() {
        let a = Word::try_from("ab").unwrap();
        let b = Word::try_from("abc").unwrap();
        let c = Word::new(vec![0xffu8]).unwrap();
        assert!(a < b);
        assert!(b < c);
        assert_eq!(format!("{c}"), "\\xff");
    }
}
