use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exact_ring::{parse_rational, Rational};
use crate::porteous::Partition;

/// The shipped Lyapunov dataset, compiled in.
pub const BUILTIN_TABLE: &str = include_str!("../../data/lyapunov.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LyapunovKind {
    /// Every Teichmüller curve in the stratum has this `L`.
    Exact,
    /// `L` of the whole stratum, approached by its Teichmüller curves.
    Limit,
}

impl LyapunovKind {
    pub fn as_str(self) -> &'static str {
        match self {
            LyapunovKind::Exact => "exact",
            LyapunovKind::Limit => "limit",
        }
    }
}

impl fmt::Display for LyapunovKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LyapunovKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(LyapunovKind::Exact),
            "limit" | "stratum-limit" => Ok(LyapunovKind::Limit),
            other => Err(Error::InconsistentCase(format!(
                "unknown Lyapunov kind {other:?} (expected exact or limit)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyapunovRow {
    pub name: String,
    pub g: u32,
    pub a: Partition,
    pub mu: Partition,
    pub l: Rational,
    pub kind: LyapunovKind,
    pub target: String,
    pub citation: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyapunovTable {
    rows: Vec<LyapunovRow>,
}

impl LyapunovTable {
    /// Parses the whitespace-separated table format: `#` starts a comment,
    /// the first seven columns are `case g a mu L kind target` and the rest
    /// of the line is the citation.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |reason: String| Error::TableSyntax {
                line: idx + 1,
                reason,
            };
            let mut rest = line;
            let mut cols = Vec::with_capacity(7);
            for _ in 0..7 {
                let trimmed = rest.trim_start();
                let end = trimmed
                    .find(char::is_whitespace)
                    .unwrap_or(trimmed.len());
                if end == 0 {
                    return Err(err(format!("expected 8 columns, found {}", cols.len())));
                }
                cols.push(&trimmed[..end]);
                rest = &trimmed[end..];
            }
            let citation = rest.trim();
            if citation.is_empty() {
                return Err(err("missing citation".into()));
            }
            let g: u32 = cols[1]
                .parse()
                .map_err(|_| err(format!("bad genus {:?}", cols[1])))?;
            let a: Partition = cols[2].parse().map_err(|e| err(format!("{e}")))?;
            let mu: Partition = cols[3].parse().map_err(|e| err(format!("{e}")))?;
            let l = parse_rational(cols[4]).map_err(|e| err(format!("{e}")))?;
            let kind: LyapunovKind = cols[5].parse().map_err(|e| err(format!("{e}")))?;
            if rows.iter().any(|r: &LyapunovRow| r.name == cols[0]) {
                return Err(err(format!("duplicate case {:?}", cols[0])));
            }
            rows.push(LyapunovRow {
                name: cols[0].to_string(),
                g,
                a,
                mu,
                l,
                kind,
                target: cols[6].to_string(),
                citation: citation.to_string(),
            });
        }
        Ok(Self { rows })
    }

    /// The compiled-in table.
    pub fn builtin() -> &'static LyapunovTable {
        static TABLE: OnceLock<LyapunovTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            LyapunovTable::parse(BUILTIN_TABLE).expect("built-in Lyapunov table parses")
        })
    }

    pub fn rows(&self) -> &[LyapunovRow] {
        &self.rows
    }

    pub fn get(&self, name: &str) -> Result<&LyapunovRow> {
        self.rows
            .iter()
            .find(|r| r.name == name)
            .ok_or_else(|| Error::UnknownCase(name.to_string()))
    }
}
