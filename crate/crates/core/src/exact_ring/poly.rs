use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::monomial::{Generator, Monomial};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Sparse polynomial over `Q` in the graded generators, truncated above
/// degree `cap`.
///
/// Only nonzero coefficients of degree `<= cap` are ever stored, so two
/// polynomials are equal exactly when their term maps and caps agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPoly {
    terms: BTreeMap<Monomial, Rational>,
    cap: u32,
}

impl GradedPoly {
    pub fn zero(cap: u32) -> Self {
        Self {
            terms: BTreeMap::new(),
            cap,
        }
    }

    pub fn one(cap: u32) -> Self {
        Self::constant(Rational::one(), cap)
    }

    pub fn constant(c: Rational, cap: u32) -> Self {
        Self::from_terms([(Monomial::one(), c)], cap)
    }

    pub fn generator(g: Generator, cap: u32) -> Self {
        Self::from_terms([(Monomial::generator(g), Rational::one())], cap)
    }

    /// Collects terms, summing repeated monomials and dropping zeros and
    /// anything above `cap`.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I, cap: u32) -> Self {
        let mut p = Self::zero(cap);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Terms in canonical monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    /// True when every stored term has degree exactly `d` (the zero
    /// polynomial is homogeneous of every degree).
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn mentions(&self, g: Generator) -> bool {
        self.terms.keys().any(|m| m.exponent(g) > 0)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if m.degree() > self.cap || c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_cap(&self, other: &GradedPoly) -> Result<()> {
        if self.cap != other.cap {
            return Err(Error::CapMismatch {
                left: self.cap,
                right: other.cap,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &GradedPoly) -> Result<GradedPoly> {
        self.check_cap(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &GradedPoly) -> Result<GradedPoly> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> GradedPoly {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, k: &Rational) -> GradedPoly {
        if k.is_zero() {
            return Self::zero(self.cap);
        }
        GradedPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * k))
                .collect(),
            cap: self.cap,
        }
    }

    /// Truncated product; terms of degree above `cap` are never formed.
    pub fn checked_mul(&self, other: &GradedPoly) -> Result<GradedPoly> {
        self.check_cap(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &GradedPoly) -> GradedPoly {
        let mut out = Self::zero(self.cap);
        for (ma, ca) in &self.terms {
            let room = self.cap - ma.degree();
            for (mb, cb) in &other.terms {
                if mb.degree() > room {
                    continue;
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// `self^e` under the same truncation.
    pub fn pow(&self, e: u32) -> GradedPoly {
        let mut acc = Self::one(self.cap);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Sum of the terms of exact degree `d`.
    pub fn graded_part(&self, d: u32) -> Result<GradedPoly> {
        if d > self.cap {
            return Err(Error::DegreeOutOfRange {
                degree: d,
                cap: self.cap,
            });
        }
        Ok(GradedPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            cap: self.cap,
        })
    }

    /// Re-truncates at a new cap. Raising the cap adds no information; the
    /// result simply agrees with `self` in every degree up to the old cap.
    pub fn with_cap(&self, cap: u32) -> GradedPoly {
        GradedPoly::from_terms(
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())),
            cap,
        )
    }

    /// Multiplicative inverse of a unit with constant term 1, built one
    /// degree at a time from `h_d = -Σ_{k=1..d} f_k h_{d-k}`.
    pub fn series_inverse(&self) -> Result<GradedPoly> {
        let c0 = self.constant_term();
        if !c0.is_one() {
            return Err(Error::NotAUnit {
                found: c0.to_string(),
            });
        }
        let parts: Vec<GradedPoly> = (0..=self.cap)
            .map(|d| self.graded_part(d))
            .collect::<Result<_>>()?;
        let mut inv_parts: Vec<GradedPoly> = vec![GradedPoly::one(self.cap)];
        for d in 1..=self.cap as usize {
            let mut hd = GradedPoly::zero(self.cap);
            for k in 1..=d {
                if parts[k].is_zero() || inv_parts[d - k].is_zero() {
                    continue;
                }
                let prod = parts[k].mul_unchecked(&inv_parts[d - k]);
                for (m, c) in prod.terms {
                    hd.add_term(m, -c);
                }
            }
            inv_parts.push(hd);
        }
        let mut out = GradedPoly::zero(self.cap);
        for part in inv_parts {
            for (m, c) in part.terms {
                out.add_term(m, c);
            }
        }
        Ok(out)
    }

    /// Replaces every occurrence of generator `g` by `value`.
    pub fn substitute(&self, g: Generator, value: &GradedPoly) -> Result<GradedPoly> {
        self.check_cap(value)?;
        let mut out = GradedPoly::zero(self.cap);
        for (m, c) in &self.terms {
            let e = m.exponent(g);
            if e == 0 {
                out.add_term(m.clone(), c.clone());
                continue;
            }
            let rest = Monomial::from_pairs(m.factors().iter().copied().filter(|&(h, _)| h != g));
            let head = GradedPoly::from_terms([(rest, c.clone())], self.cap);
            for (mm, cc) in head.mul_unchecked(&value.pow(e)).terms {
                out.add_term(mm, cc);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else if abs.is_integer() {
                write!(f, "{abs}{m}")?;
            } else {
                write!(f, "({abs}){m}")?;
            }
        }
        Ok(())
    }
}
