//! Argument grammars: partitions with exponent shorthand, exact rationals
//! and comma-separated rational lists.

use strata_core::exact_ring::{parse_rational, Rational};
use strata_core::Partition;

/// A partition together with the text it was parsed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionExpr {
    pub source: String,
    pub partition: Partition,
}

impl PartitionExpr {
    pub fn parse(text: &str) -> Result<Self, String> {
        let partition = parse_partition(text)?;
        Ok(Self {
            source: text.to_string(),
            partition,
        })
    }
}

/// `partition := part ("," part)*`, `part := INT ("^" INT)?`.
pub fn parse_partition(text: &str) -> Result<Partition, String> {
    text.parse::<Partition>().map_err(|e| e.to_string())
}

pub fn render_partition(p: &Partition) -> String {
    p.to_string()
}

pub fn parse_q(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

pub fn parse_q_list(text: &str) -> Result<Vec<Rational>, String> {
    text.split(',').map(parse_q).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use strata_core::exact_ring::rat;

    #[test]
    fn partition_grammar() {
        assert_eq!(parse_partition("2,1^4").unwrap().parts(), &[2, 1, 1, 1, 1]);
        assert_eq!(parse_partition("1^8").unwrap().parts(), &[1; 8]);
        assert!(parse_partition("3,0").is_err());
        assert!(parse_partition("3,-1").is_err());
        let e = PartitionExpr::parse("4,1^2").unwrap();
        assert_eq!(e.source, "4,1^2");
        assert_eq!(render_partition(&e.partition), "4,1^2");
    }

    #[test]
    fn rational_lists() {
        assert_eq!(
            parse_q_list("2,3,27/2,-1").unwrap(),
            vec![rat(2, 1), rat(3, 1), rat(27, 2), rat(-1, 1)]
        );
        assert!(parse_q_list("1,,2").is_err());
    }
}
