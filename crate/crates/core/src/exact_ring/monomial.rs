use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A polynomial generator: a Hodge class `λ_i` (degree `i`) or a cotangent
/// class `ω_j` (degree 1). Indices are 1-based.
///
/// The derived order puts every `λ` before every `ω`, each by ascending index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Lambda(u32),
    Omega(u32),
}

impl Generator {
    pub fn degree(self) -> u32 {
        match self {
            Generator::Lambda(i) => i,
            Generator::Omega(_) => 1,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Lambda(i) => write!(f, "λ{i}"),
            Generator::Omega(j) => write!(f, "ω{j}"),
        }
    }
}

/// Generators `λ_1..λ_g` and `ω_1..ω_n` for genus `g` with `n` marked points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorSet {
    pub g: u32,
    pub n: u32,
}

impl GeneratorSet {
    pub fn new(g: u32, n: u32) -> Result<Self> {
        if g < 2 {
            return Err(Error::GenusTooSmall(g));
        }
        Ok(Self { g, n })
    }

    pub fn lambda(&self, i: u32) -> Result<Generator> {
        if i == 0 || i > self.g {
            return Err(Error::GeneratorOutOfRange {
                index: i,
                max: self.g,
            });
        }
        Ok(Generator::Lambda(i))
    }

    pub fn omega(&self, j: u32) -> Result<Generator> {
        if j == 0 || j > self.n {
            return Err(Error::GeneratorOutOfRange {
                index: j,
                max: self.n,
            });
        }
        Ok(Generator::Omega(j))
    }

    pub fn lambdas(&self) -> impl Iterator<Item = Generator> {
        (1..=self.g).map(Generator::Lambda)
    }

    pub fn omegas(&self) -> impl Iterator<Item = Generator> {
        (1..=self.n).map(Generator::Omega)
    }
}

/// A product of generator powers, stored sparsely and sorted by generator.
///
/// Monomials are ordered by total degree, then lexicographically on the
/// exponent vector in generator order with larger exponents first, so
/// `λ1^2 < λ1ω1 < λ2 < ω1^2 < ω1ω2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(Generator, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn generator(g: Generator) -> Self {
        Self::power(g, 1)
    }

    pub fn power(g: Generator, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        Self {
            exps: vec![(g, e)],
            degree: g.degree() * e,
        }
    }

    /// Builds a monomial from arbitrary `(generator, exponent)` pairs;
    /// repeated generators are merged and zero exponents dropped.
    pub fn from_pairs<I: IntoIterator<Item = (Generator, u32)>>(pairs: I) -> Self {
        let mut exps: Vec<(Generator, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_by_key(|&(g, _)| g);
        let mut merged: Vec<(Generator, u32)> = Vec::with_capacity(exps.len());
        for (g, e) in exps {
            match merged.last_mut() {
                Some((h, f)) if *h == g => *f += e,
                _ => merged.push((g, e)),
            }
        }
        let degree = merged.iter().map(|&(g, e)| g.degree() * e).sum();
        Self {
            exps: merged,
            degree,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, g: Generator) -> u32 {
        self.exps
            .binary_search_by_key(&g, |&(h, _)| h)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.exps
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut exps = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    exps.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&a[i..]);
        exps.extend_from_slice(&b[j..]);
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            let (a, b) = (&self.exps, &other.exps);
            let (mut i, mut j) = (0, 0);
            loop {
                let (ga, gb) = (a.get(i), b.get(j));
                let (ea, eb) = match (ga, gb) {
                    (None, None) => return Ordering::Equal,
                    (Some(&(_, e)), None) => (e, 0),
                    (None, Some(&(_, e))) => (0, e),
                    (Some(&(x, e)), Some(&(y, f))) => match x.cmp(&y) {
                        Ordering::Less => (e, 0),
                        Ordering::Greater => (0, f),
                        Ordering::Equal => (e, f),
                    },
                };
                if ea != eb {
                    // larger exponent on the earlier generator sorts first
                    return eb.cmp(&ea);
                }
                i += 1;
                j += 1;
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for &(g, e) in &self.exps {
            if e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}
