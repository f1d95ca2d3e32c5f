//! Teichmüller curves against divisors on `M̄_{g,n}`, and extremality
//! certificates for pointed Brill–Noether divisors.
//!
//! A Teichmüller curve `C` in the stratum `H(μ)`, lifted to `M̄_{g,n}` by
//! marking the zeros, meets the classes as
//!
//! ```text
//! C·λ   = (χ/2)·L
//! C·δ_0 = (χ/2)·(12L - 12κ_μ)
//! C·ω_i = (χ/2)·1/(m_i + 1)
//! ```
//!
//! and misses every other boundary divisor. All quantities here are either
//! ratios, where `χ` cancels, or values per unit of `χ/2`.
//!
//! If a divisor `D` swept out by such curves has `C·D / C·A <= -d` for some
//! ample `A` and fixed `d > 0`, and the curves are Zariski dense in `D`, then
//! `D` spans an extremal ray of the effective cone. [`certify`] assembles the
//! numbers for that argument; the density hypothesis itself is reported as a
//! caveat and never checked.

mod table;

pub use table::{LyapunovKind, LyapunovRow, LyapunovTable, BUILTIN_TABLE};

use num_traits::{One, Signed, Zero};

use crate::divisors::kappa;
use crate::error::{Error, Result};
use crate::exact_ring::rational::{require_non_negative, require_positive};
use crate::exact_ring::{int, Rational};
use crate::porteous::Partition;

pub const DENSITY_CAVEAT: &str =
    "assumes Teichmüller curves in the stratum are Zariski dense in the divisor";
pub const LIMIT_CAVEAT: &str = "L is a stratum limit: relies on a Zariski-dense family of \
     Teichmüller curves with L >= g/2 + ε";
pub const BOUNDS_CAVEAT: &str =
    "L violates the slope bound 8 + 4/g, so no Teichmüller curve has these numbers";

/// A Teichmüller curve in `H(μ)` with Lyapunov sum `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TeichCurve {
    pub g: u32,
    pub mu: Partition,
    pub l: Rational,
    pub kind: LyapunovKind,
    /// Scale `χ/2`; `None` means 1.
    pub chi_half: Option<Rational>,
}

impl TeichCurve {
    pub fn new(g: u32, mu: Partition, l: Rational, kind: LyapunovKind) -> Result<Self> {
        let c = Self {
            g,
            mu,
            l,
            kind,
            chi_half: None,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn with_chi_half(mut self, chi_half: Rational) -> Result<Self> {
        require_positive("χ/2", &chi_half)?;
        self.chi_half = Some(chi_half);
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        if self.g < 2 {
            return Err(Error::GenusTooSmall(self.g));
        }
        self.mu.require_sum(2 * self.g - 2)?;
        require_positive("L", &self.l)?;
        if let Some(s) = &self.chi_half {
            require_positive("χ/2", s)?;
        }
        Ok(())
    }

    fn scale(&self) -> Rational {
        self.chi_half.clone().unwrap_or_else(Rational::one)
    }

    pub fn kappa(&self) -> Rational {
        kappa(&self.mu)
    }
}

/// Intersection numbers of a Teichmüller curve with `λ`, `δ_0` and each `ω_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveRatios {
    pub lambda: Rational,
    pub delta0: Rational,
    pub omega: Vec<Rational>,
}

pub fn curve_ratios(curve: &TeichCurve) -> Result<CurveRatios> {
    curve.validate()?;
    let s = curve.scale();
    let k = curve.kappa();
    Ok(CurveRatios {
        lambda: &s * &curve.l,
        delta0: &s * (int(12) * &curve.l - int(12) * k),
        omega: curve
            .mu
            .parts()
            .iter()
            .map(|&m| &s / int(m as i64 + 1))
            .collect(),
    })
}

/// How a class treats `δ_other`, the boundary divisors other than `δ_0`.
/// Teichmüller curves never meet them, so only the presence is recorded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OtherBoundary {
    #[default]
    Absent,
    Added,
    Subtracted,
}

/// `D = aλ + Σ b_i ω_i + c δ_0 + δ_other` on `M̄_{g,n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MgnDivisor {
    pub a: Rational,
    pub b: Vec<Rational>,
    pub c: Rational,
    pub other: OtherBoundary,
}

impl MgnDivisor {
    pub fn lambda() -> Self {
        Self {
            a: Rational::one(),
            b: Vec::new(),
            c: Rational::zero(),
            other: OtherBoundary::Absent,
        }
    }

    pub fn delta0() -> Self {
        Self {
            a: Rational::zero(),
            b: Vec::new(),
            c: Rational::one(),
            other: OtherBoundary::Absent,
        }
    }
}

/// `(C·D)/(C·λ)`.
///
/// `D` may carry fewer `ω` coefficients than `μ` has parts: it then lives on
/// `M̄_{g,k}` with the curve lifted by marking the first `k` zeros, and the
/// remaining zeros contribute nothing.
pub fn intersect_ratio(d: &MgnDivisor, curve: &TeichCurve) -> Result<Rational> {
    if d.b.len() > curve.mu.len() {
        return Err(Error::LengthMismatch {
            what: "ω coefficients",
            expected: curve.mu.len(),
            found: d.b.len(),
        });
    }
    let r = curve_ratios(curve)?;
    let omega: Rational = d.b.iter().zip(&r.omega).map(|(b, w)| b * w).sum();
    let cd = &d.a * &r.lambda + omega + &d.c * &r.delta0;
    Ok(cd / r.lambda)
}

/// `BN^1_{g,a}`: pointed curves with `h^0(Σ a_i p_i) >= 2`, where `Σ a_i = g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BnDivisorSpec {
    pub g: u32,
    pub a: Partition,
}

impl BnDivisorSpec {
    pub fn new(g: u32, a: Partition) -> Result<Self> {
        if g < 2 {
            return Err(Error::GenusTooSmall(g));
        }
        a.require_sum(g)?;
        Ok(Self { g, a })
    }

    /// Stratum `(a, 1^{g-2})` whose Teichmüller curves sweep the divisor.
    pub fn sweeping_stratum(&self) -> Partition {
        self.a.pad_ones(self.g as usize - 2)
    }
}

/// `-λ + Σ a_i(a_i+1)/2 · ω_i - δ_other`.
pub fn bn_divisor(spec: &BnDivisorSpec) -> MgnDivisor {
    MgnDivisor {
        a: -Rational::one(),
        b: spec
            .a
            .parts()
            .iter()
            .map(|&m| {
                let m = m as i64;
                int(m * (m + 1) / 2)
            })
            .collect(),
        c: Rational::zero(),
        other: OtherBoundary::Subtracted,
    }
}

/// `(C·BN^1_{g,a})/(C·λ) = -1 + g/(2L)`; negative exactly when `L > g/2`.
pub fn bn_ratio(spec: &BnDivisorSpec, l: &Rational) -> Result<Rational> {
    require_positive("L", l)?;
    Ok(-Rational::one() + int(spec.g as i64) / (int(2) * l))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeBounds {
    pub slope: Rational,
    pub slope_bound: Rational,
    pub lyapunov_bound: Rational,
    pub ok: bool,
}

/// Slope `(12L - 12κ_μ)/L` against `8 + 4/g`, and the equivalent bound
/// `L <= 3g/(g-1)·κ_μ`.
pub fn slope_and_bounds(curve: &TeichCurve) -> Result<SlopeBounds> {
    curve.validate()?;
    let g = int(curve.g as i64);
    let k = curve.kappa();
    let slope = (int(12) * &curve.l - int(12) * &k) / &curve.l;
    let slope_bound = int(8) + int(4) / &g;
    let lyapunov_bound = int(3) * &g / (&g - int(1)) * &k;
    let ok = slope <= slope_bound && curve.l <= lyapunov_bound;
    Ok(SlopeBounds {
        slope,
        slope_bound,
        lyapunov_bound,
        ok,
    })
}

/// Upper bound for `(C·BN^1_{g,a})/(C·D_s)` over curves with `L >= g/2 + ε`,
/// where `D_s = λ + s_0δ_0 + Σ s_iω_i + δ_other` is a small perturbation of
/// `λ` with `|s_i| <= s`:
///
/// ```text
/// -2ε / ((g + 2ε)(1 + s(8 + 4/g + (2/g) Σ 1/(a_i+1))))
/// ```
///
/// The certified constant `d` is the negation.
pub fn extremality_bound(spec: &BnDivisorSpec, epsilon: &Rational, s: &Rational) -> Result<Rational> {
    require_non_negative("ε", epsilon)?;
    require_non_negative("s", s)?;
    let g = int(spec.g as i64);
    let inv_sum: Rational = spec
        .a
        .parts()
        .iter()
        .map(|&m| Rational::one() / int(m as i64 + 1))
        .sum();
    let spread = int(8) + int(4) / &g + int(2) / &g * inv_sum;
    let denom = (&g + int(2) * epsilon) * (Rational::one() + s * spread);
    Ok(-(int(2) * epsilon) / denom)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    NegativeExtremalCertified,
    NotNegative,
    HypothesisFlagged,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NegativeExtremalCertified => "negative-extremal-certified",
            Verdict::NotNegative => "not-negative",
            Verdict::HypothesisFlagged => "hypothesis-flagged",
        }
    }
}

/// A Brill–Noether divisor together with the Lyapunov data of the curves
/// sweeping it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifyCase {
    pub description: String,
    pub spec: BnDivisorSpec,
    pub curve: TeichCurve,
}

impl CertifyCase {
    /// Checks `Σ a = g` and `μ = (a, 1^{g-2})`.
    pub fn new(
        description: impl Into<String>,
        g: u32,
        a: Partition,
        mu: Partition,
        l: Rational,
        kind: LyapunovKind,
    ) -> Result<Self> {
        let spec = BnDivisorSpec::new(g, a)?;
        let expected = spec.sweeping_stratum();
        if mu != expected {
            return Err(Error::InconsistentCase(format!(
                "stratum ({mu}) does not match (a, 1^(g-2)) = ({expected})"
            )));
        }
        let curve = TeichCurve::new(g, mu, l, kind)?;
        Ok(Self {
            description: description.into(),
            spec,
            curve,
        })
    }

    pub fn from_row(row: &LyapunovRow) -> Result<Self> {
        Self::new(
            format!("{} via H({})", row.target, row.mu),
            row.g,
            row.a.clone(),
            row.mu.clone(),
            row.l.clone(),
            row.kind,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalityReport {
    pub description: String,
    pub bn_ratio: Rational,
    pub epsilon: Rational,
    pub bound_d: Rational,
    pub slope: Rational,
    pub slope_bound: Rational,
    pub lyapunov_bound: Rational,
    pub verdict: Verdict,
    pub caveats: Vec<String>,
}

/// Assembles an extremality report.
///
/// `epsilon` defaults to the full margin `L - g/2`; a smaller positive value
/// may be supplied, a larger one is rejected since the curves would not
/// satisfy `L >= g/2 + ε`.
pub fn certify(case: &CertifyCase, epsilon: Option<&Rational>, s: &Rational) -> Result<ExtremalityReport> {
    require_non_negative("s", s)?;
    let spec = &case.spec;
    let curve = &case.curve;
    let g = int(spec.g as i64);
    let margin = &curve.l - &g / int(2);
    let epsilon = match epsilon {
        None => margin.clone(),
        Some(e) => {
            require_positive("ε", e)?;
            if *e > margin {
                return Err(Error::InconsistentCase(format!(
                    "ε = {e} exceeds the margin L - g/2 = {margin}"
                )));
            }
            e.clone()
        }
    };

    let ratio = bn_ratio(spec, &curve.l)?;
    let bounds = slope_and_bounds(curve)?;
    let bound_d = if epsilon.is_positive() {
        -extremality_bound(spec, &epsilon, s)?
    } else {
        Rational::zero()
    };

    let mut caveats = Vec::new();
    let verdict = if !(ratio.is_negative() && bound_d.is_positive()) {
        Verdict::NotNegative
    } else if !bounds.ok {
        caveats.push(BOUNDS_CAVEAT.to_string());
        Verdict::HypothesisFlagged
    } else {
        caveats.push(DENSITY_CAVEAT.to_string());
        if curve.kind == LyapunovKind::Limit {
            caveats.push(LIMIT_CAVEAT.to_string());
        }
        Verdict::NegativeExtremalCertified
    };

    Ok(ExtremalityReport {
        description: case.description.clone(),
        bn_ratio: ratio,
        epsilon,
        bound_d,
        slope: bounds.slope,
        slope_bound: bounds.slope_bound,
        lyapunov_bound: bounds.lyapunov_bound,
        verdict,
        caveats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_ring::rat;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn curve(g: u32, mu: &str, l: Rational) -> TeichCurve {
        TeichCurve::new(g, part(mu), l, LyapunovKind::Exact).unwrap()
    }

    #[test]
    fn ratios_examples() {
        let r = curve_ratios(&curve(2, "2", rat(4, 3))).unwrap();
        assert_eq!(r.lambda, rat(4, 3));
        assert_eq!(r.delta0, rat(40, 3));
        assert_eq!(r.omega, vec![rat(1, 3)]);

        let r = curve_ratios(&curve(2, "1,1", rat(3, 2))).unwrap();
        assert_eq!(r.delta0, int(15));
        assert_eq!(r.omega, vec![rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn curve_validation() {
        assert!(matches!(
            TeichCurve::new(3, part("2,1"), rat(1, 1), LyapunovKind::Exact),
            Err(Error::WrongPartitionSum { .. })
        ));
        assert!(TeichCurve::new(2, part("2"), int(0), LyapunovKind::Exact).is_err());
        assert!(curve(2, "2", rat(4, 3)).with_chi_half(rat(-1, 2)).is_err());
    }

    #[test]
    fn intersect_ratio_examples() {
        let c = curve(2, "2", rat(4, 3));
        assert_eq!(intersect_ratio(&MgnDivisor::lambda(), &c).unwrap(), int(1));
        let w = bn_divisor(&BnDivisorSpec::new(2, part("2")).unwrap());
        assert_eq!(intersect_ratio(&w, &c).unwrap(), rat(-1, 4));
        assert_eq!(intersect_ratio(&MgnDivisor::delta0(), &c).unwrap(), int(10));

        let too_long = MgnDivisor {
            b: vec![int(1), int(1)],
            ..MgnDivisor::lambda()
        };
        assert!(intersect_ratio(&too_long, &c).is_err());
    }

    #[test]
    fn intersect_ratio_matches_closed_form() {
        // a + Σ b_i/((m_i+1)L) + c(12 - 12κ/L)
        let c = curve(3, "2,1,1", rat(11, 6));
        let d = MgnDivisor {
            a: rat(2, 3),
            b: vec![int(5), rat(-1, 2), int(7)],
            c: rat(3, 4),
            other: OtherBoundary::Added,
        };
        let k = kappa(&c.mu);
        let mut closed = d.a.clone() + &d.c * (int(12) - int(12) * &k / &c.l);
        for (b, &m) in d.b.iter().zip(c.mu.parts()) {
            closed += b / (int(m as i64 + 1) * &c.l);
        }
        assert_eq!(intersect_ratio(&d, &c).unwrap(), closed);
    }

    #[test]
    fn bn_divisor_examples() {
        let d = bn_divisor(&BnDivisorSpec::new(2, part("2")).unwrap());
        assert_eq!((d.a.clone(), d.b.clone(), d.c.clone()), (int(-1), vec![int(3)], int(0)));
        let d = bn_divisor(&BnDivisorSpec::new(3, part("2,1")).unwrap());
        assert_eq!(d.b, vec![int(3), int(1)]);
        let d = bn_divisor(&BnDivisorSpec::new(5, part("1^5")).unwrap());
        assert_eq!(d.b, vec![int(1); 5]);
        assert_eq!(d.other, OtherBoundary::Subtracted);
        assert!(BnDivisorSpec::new(4, part("2,1")).is_err());
    }

    #[test]
    fn bn_ratio_examples() {
        let w2 = BnDivisorSpec::new(2, part("2")).unwrap();
        assert_eq!(bn_ratio(&w2, &rat(4, 3)).unwrap(), rat(-1, 4));
        assert_eq!(bn_ratio(&w2, &int(1)).unwrap(), int(0));
        assert!(bn_ratio(&w2, &int(0)).is_err());
        assert!(bn_ratio(&w2, &int(-2)).is_err());

        let s5 = BnDivisorSpec::new(5, part("1^5")).unwrap();
        let r = bn_ratio(&s5, &rat(235761, 93428)).unwrap();
        // -1 + 5·93428/(2·235761) = -4382/471522
        assert_eq!(r, rat(-2191, 235761));
    }

    #[test]
    fn slope_examples() {
        let b = slope_and_bounds(&curve(2, "2", rat(4, 3))).unwrap();
        assert_eq!(b.slope, int(10));
        assert_eq!(b.slope_bound, int(10));
        assert_eq!(b.lyapunov_bound, rat(4, 3));
        assert!(b.ok);

        let b = slope_and_bounds(&curve(3, "3,1", rat(7, 4))).unwrap();
        assert_eq!(b.lyapunov_bound, rat(63, 32));
        assert!(b.ok);

        let b = slope_and_bounds(&curve(2, "2", rat(3, 2))).unwrap();
        assert!(!b.ok);
    }

    #[test]
    fn extremality_bound_examples() {
        let w2 = BnDivisorSpec::new(2, part("2")).unwrap();
        assert_eq!(
            extremality_bound(&w2, &rat(1, 3), &int(0)).unwrap(),
            rat(-1, 4)
        );
        assert_eq!(extremality_bound(&w2, &int(0), &rat(1, 2)).unwrap(), int(0));
        assert!(extremality_bound(&w2, &rat(-1, 3), &int(0)).is_err());
        assert!(extremality_bound(&w2, &rat(1, 3), &rat(-1, 3)).is_err());

        let s5 = BnDivisorSpec::new(5, part("1^5")).unwrap();
        let eps = rat(235761, 93428) - rat(5, 2);
        let expected = -(int(2) * &eps) / (int(5) + int(2) * &eps);
        assert_eq!(extremality_bound(&s5, &eps, &int(0)).unwrap(), expected);
    }

    #[test]
    fn extremality_bound_with_perturbation() {
        // g=3, a=(2,1): spread = 8 + 4/3 + (2/3)(1/3 + 1/2) = 89/9
        let spec = BnDivisorSpec::new(3, part("2,1")).unwrap();
        let got = extremality_bound(&spec, &rat(1, 3), &rat(1, 10)).unwrap();
        // -(2/3) / ((3 + 2/3)(1 + 89/90)) = -(2/3) / ((11/3)(179/90))
        assert_eq!(got, rat(-2, 3) / (rat(11, 3) * rat(179, 90)));
    }

    #[test]
    fn certify_examples() {
        let w2 = CertifyCase::new("W g=2", 2, part("2"), part("2"), rat(4, 3), LyapunovKind::Exact)
            .unwrap();
        let rep = certify(&w2, None, &int(0)).unwrap();
        assert_eq!(rep.verdict, Verdict::NegativeExtremalCertified);
        assert_eq!(rep.bn_ratio, rat(-1, 4));
        assert_eq!(rep.bound_d, rat(1, 4));
        assert_eq!(rep.caveats, vec![DENSITY_CAVEAT.to_string()]);

        let w4 = CertifyCase::new("W g=4", 4, part("4"), part("4,1,1"), rat(1137, 550), LyapunovKind::Limit)
            .unwrap();
        let rep = certify(&w4, None, &int(0)).unwrap();
        assert_eq!(rep.verdict, Verdict::NegativeExtremalCertified);
        assert_eq!(rep.epsilon, rat(37, 550));
        assert!(rep.caveats.iter().any(|c| c == LIMIT_CAVEAT));

        let edge = CertifyCase::new("edge", 3, part("3"), part("3,1"), rat(3, 2), LyapunovKind::Exact)
            .unwrap();
        let rep = certify(&edge, None, &int(0)).unwrap();
        assert_eq!(rep.verdict, Verdict::NotNegative);
        assert_eq!(rep.bound_d, int(0));
    }

    #[test]
    fn certify_flags_impossible_lyapunov_sums() {
        // L = 2 exceeds 3g/(g-1)·κ = 4/3 in genus 2
        let case = CertifyCase::new("bad", 2, part("2"), part("2"), int(2), LyapunovKind::Exact).unwrap();
        let rep = certify(&case, None, &int(0)).unwrap();
        assert_eq!(rep.verdict, Verdict::HypothesisFlagged);
        assert_eq!(rep.caveats, vec![BOUNDS_CAVEAT.to_string()]);
    }

    #[test]
    fn certify_epsilon_override() {
        let case = CertifyCase::new("W g=4", 4, part("4"), part("4,1,1"), rat(1137, 550), LyapunovKind::Limit)
            .unwrap();
        let rep = certify(&case, Some(&rat(1, 100)), &int(0)).unwrap();
        assert_eq!(rep.epsilon, rat(1, 100));
        assert_eq!(rep.bound_d, rat(2, 100) / (int(4) + rat(2, 100)));
        assert!(certify(&case, Some(&rat(1, 10)), &int(0)).is_err());
        assert!(certify(&case, Some(&int(0)), &int(0)).is_err());
    }

    #[test]
    fn inconsistent_cases_rejected() {
        assert!(matches!(
            CertifyCase::new("x", 3, part("2,1"), part("2,1"), int(2), LyapunovKind::Exact),
            Err(Error::InconsistentCase(_))
        ));
        assert!(CertifyCase::new("x", 3, part("2,2"), part("2,2"), int(2), LyapunovKind::Exact).is_err());
    }
}
