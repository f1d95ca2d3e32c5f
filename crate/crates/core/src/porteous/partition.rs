use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An ordered list of positive parts `(m_1, ..., m_n)`.
///
/// Order matters: part `i` is attached to marked point `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        Ok(Self { parts })
    }

    /// `(1, 1, ..., 1)` with `k` parts.
    pub fn ones(k: usize) -> Result<Self> {
        Self::new(vec![1; k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `d = Σ m_i`.
    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Parts of `self` followed by parts of `other`.
    pub fn concat(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition { parts }
    }

    /// `self` followed by `k` parts equal to 1; `k = 0` returns a copy.
    pub fn pad_ones(&self, k: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(1, k));
        Partition { parts }
    }

    pub fn require_sum(&self, expected: u32) -> Result<()> {
        if self.sum() != expected {
            return Err(Error::WrongPartitionSum {
                expected,
                found: self.sum(),
            });
        }
        Ok(())
    }
}

/// Parses `part ("," part)*` with `part := INT ("^" INT)?`, so `2,1^4` is
/// `(2,1,1,1,1)`. Both integers must be at least 1; whitespace around tokens
/// is ignored and an optional pair of surrounding parentheses is accepted.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let err = |reason: &str| Error::PartitionSyntax {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let mut body = text.trim();
        if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            body = inner.trim();
        }
        if body.is_empty() {
            return Err(err("empty"));
        }
        let positive = |tok: &str, what: &str| -> Result<u32> {
            let tok = tok.trim();
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err(&format!("{what} {tok:?} is not a positive integer")));
            }
            match tok.parse::<u32>() {
                Ok(0) => Err(err(&format!("{what} must be at least 1"))),
                Ok(v) => Ok(v),
                Err(_) => Err(err(&format!("{what} {tok:?} is too large"))),
            }
        };
        let mut parts = Vec::new();
        for item in body.split(',') {
            let (base, times) = match item.split_once('^') {
                Some((b, e)) => (positive(b, "part")?, positive(e, "exponent")?),
                None => (positive(item, "part")?, 1),
            };
            parts.extend(std::iter::repeat_n(base, times as usize));
        }
        Partition::new(parts)
    }
}

/// Run-length form, e.g. `2,1^4`; parsing it gives back the same partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == p {
                j += 1;
            }
            if !first {
                write!(f, ",")?;
            }
            first = false;
            match j - i {
                1 => write!(f, "{p}")?,
                k => write!(f, "{p}^{k}")?,
            }
            i = j;
        }
        Ok(())
    }
}
