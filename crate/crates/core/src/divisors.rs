//! Divisor classes on the projectivized Hodge bundle `PH̄` over `M̄_g`.
//!
//! `Pic_Q(PH̄)` is spanned by `ψ`, `λ` and the boundary classes
//! `δ_0..δ_{⌊g/2⌋}`. Projectivization parameterizes lines, so `ψ` and `λ` are
//! the negatives of the classes in the hyperplane convention.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_ring::{int, rat, Rational};
use crate::porteous::Partition;

pub const SIGN_CONVENTION_NOTE: &str =
    "projectivization by lines: ψ and λ are opposite to the hyperplane convention";

/// `κ_μ = (1/12) Σ m_i(m_i+2)/(m_i+1)`.
pub fn kappa(mu: &Partition) -> Rational {
    let sum: Rational = mu
        .parts()
        .iter()
        .map(|&m| {
            let m = m as i64;
            rat(m * (m + 2), m + 1)
        })
        .sum();
    sum / int(12)
}

fn check_genus(g: u32) -> Result<()> {
    if g < 2 {
        Err(Error::GenusTooSmall(g))
    } else {
        Ok(())
    }
}

/// Coordinates in the basis `ψ, λ, δ_0, ..., δ_{⌊g/2⌋}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeDivisorClass {
    pub g: u32,
    pub psi: Rational,
    pub lambda: Rational,
    pub delta: Vec<Rational>,
}

/// Intersection numbers of a one-parameter family with `ψ, λ, δ_0, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestCurveNumbers {
    pub g: u32,
    pub psi: Rational,
    pub lambda: Rational,
    pub delta: Vec<Rational>,
}

/// Number of boundary classes `δ_0..δ_{⌊g/2⌋}`.
pub fn boundary_count(g: u32) -> usize {
    (g / 2) as usize + 1
}

fn check_delta_len(g: u32, len: usize) -> Result<()> {
    let expected = boundary_count(g);
    if len != expected {
        return Err(Error::LengthMismatch {
            what: "boundary coefficients",
            expected,
            found: len,
        });
    }
    Ok(())
}

impl HodgeDivisorClass {
    pub fn new(g: u32, psi: Rational, lambda: Rational, delta: Vec<Rational>) -> Result<Self> {
        check_genus(g)?;
        check_delta_len(g, delta.len())?;
        Ok(Self {
            g,
            psi,
            lambda,
            delta,
        })
    }

    pub fn zero(g: u32) -> Result<Self> {
        Self::new(g, int(0), int(0), vec![int(0); boundary_count(g)])
    }

    /// The pure class `λ`.
    pub fn lambda_class(g: u32) -> Result<Self> {
        let mut c = Self::zero(g)?;
        c.lambda = Rational::one();
        Ok(c)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.g != other.g {
            return Err(Error::GenusMismatch {
                left: self.g,
                right: other.g,
            });
        }
        Ok(Self {
            g: self.g,
            psi: &self.psi + &other.psi,
            lambda: &self.lambda + &other.lambda,
            delta: self
                .delta
                .iter()
                .zip(&other.delta)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            g: self.g,
            psi: &self.psi * k,
            lambda: &self.lambda * k,
            delta: self.delta.iter().map(|d| d * k).collect(),
        }
    }

    /// Drops the boundary part, keeping the `ψ, λ` coordinates.
    pub fn interior_part(&self) -> Self {
        Self {
            g: self.g,
            psi: self.psi.clone(),
            lambda: self.lambda.clone(),
            delta: vec![Rational::zero(); self.delta.len()],
        }
    }

    /// `(label, coefficient)` pairs in basis order.
    pub fn coordinates(&self) -> Vec<(String, Rational)> {
        let mut out = vec![
            ("ψ".to_string(), self.psi.clone()),
            ("λ".to_string(), self.lambda.clone()),
        ];
        for (i, d) in self.delta.iter().enumerate() {
            out.push((format!("δ{i}"), d.clone()));
        }
        out
    }
}

impl fmt::Display for HodgeDivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (label, c) in self.coordinates() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if abs.is_one() {
                write!(f, "{label}")?;
            } else if abs.is_integer() {
                write!(f, "{abs}{label}")?;
            } else {
                write!(f, "({abs}){label}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl TestCurveNumbers {
    pub fn new(g: u32, psi: Rational, lambda: Rational, delta: Vec<Rational>) -> Result<Self> {
        check_genus(g)?;
        check_delta_len(g, delta.len())?;
        Ok(Self {
            g,
            psi,
            lambda,
            delta,
        })
    }

    /// A general pencil of plane quartics cut by a fixed line: a family of
    /// genus-3 canonical divisors with `B·ψ = 2`, `B·λ = 3`, `B·δ_0 = 27`,
    /// `B·δ_1 = 0`.
    pub fn plane_quartic_pencil() -> Self {
        Self {
            g: 3,
            psi: int(2),
            lambda: int(3),
            delta: vec![int(27), int(0)],
        }
    }

    /// A pencil of canonical divisors on a fixed general curve: `B·ψ = 1`
    /// and every other number vanishes.
    pub fn canonical_pencil(g: u32) -> Result<Self> {
        Self::new(g, int(1), int(0), vec![int(0); boundary_count(g)])
    }
}

/// Class of the double-zero locus `PH(2, 1^{2g-4})` on the open part:
/// `(6g-6)ψ - 24λ`.
pub fn stratum_divisor_interior(g: u32) -> Result<HodgeDivisorClass> {
    check_genus(g)?;
    HodgeDivisorClass::new(
        g,
        int(6 * g as i64 - 6),
        int(-24),
        vec![int(0); boundary_count(g)],
    )
}

/// Class of the closure `PH̄(2, 1^{2g-4})`:
/// `(6g-6)ψ - 24λ + 2δ_0 + 3 Σ_{i≥1} δ_i`.
pub fn stratum_divisor_full(g: u32) -> Result<HodgeDivisorClass> {
    let mut c = stratum_divisor_interior(g)?;
    c.delta[0] = int(2);
    for d in c.delta.iter_mut().skip(1) {
        *d = int(3);
    }
    Ok(c)
}

/// Checks `λ = (g-1)/4·ψ + δ_0/12 + Σ_{i≥1} δ_i/8 - (1/24)·PH̄(2,1^{2g-4})`
/// coordinate by coordinate.
pub fn lambda_identity_check(g: u32) -> bool {
    let Ok(full) = stratum_divisor_full(g) else {
        return false;
    };
    let mut noether = vec![rat(1, 12)];
    noether.extend(std::iter::repeat_n(rat(1, 8), boundary_count(g) - 1));
    let Ok(base) = HodgeDivisorClass::new(g, rat(g as i64 - 1, 4), int(0), noether) else {
        return false;
    };
    let Ok(rhs) = base.checked_add(&full.scale(&rat(-1, 24))) else {
        return false;
    };
    HodgeDivisorClass::lambda_class(g).is_ok_and(|l| l == rhs)
}

/// `Σ coefficient × intersection number` over the basis.
pub fn pair(class: &HodgeDivisorClass, curve: &TestCurveNumbers) -> Result<Rational> {
    if class.g != curve.g {
        return Err(Error::GenusMismatch {
            left: class.g,
            right: curve.g,
        });
    }
    check_delta_len(curve.g, curve.delta.len())?;
    check_delta_len(class.g, class.delta.len())?;
    let boundary: Rational = class
        .delta
        .iter()
        .zip(&curve.delta)
        .map(|(a, b)| a * b)
        .sum();
    Ok(&class.psi * &curve.psi + &class.lambda * &curve.lambda + boundary)
}
