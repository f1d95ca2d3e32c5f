//! Chern classes of the evaluation-map bundles and the Porteous determinant.
//!
//! On `C^n` over `M_g` the evaluation map `E → F_μ` from the Hodge bundle to
//! the bundle of `μ`-jets drops rank exactly on the pointed Brill–Noether
//! locus `BN^r_μ`, whose expected class is `Δ_{r, g-d+r}(c(F_μ)/c(E))`.
//! Everything here is computed on the open moduli space, i.e. modulo
//! boundary classes.

mod partition;

pub use partition::Partition;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact_ring::{int, Generator, GeneratorSet, GradedPoly, Monomial, Rational};

/// Note attached to every Porteous output.
pub const EXPECTED_CLASS_NOTE: &str =
    "expected class on the open moduli space, modulo boundary classes";

/// A request for the class of `BN^r_μ` in genus `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BnQuery {
    pub g: u32,
    pub mu: Partition,
    pub r: u32,
}

impl BnQuery {
    pub fn new(g: u32, mu: Partition, r: u32) -> Result<Self> {
        let q = Self { g, mu, r };
        q.validate()?;
        Ok(q)
    }

    fn validate(&self) -> Result<()> {
        if self.g < 2 {
            return Err(Error::GenusTooSmall(self.g));
        }
        if self.r == 0 {
            return Err(Error::ZeroRank);
        }
        let q = self.g as i64 - self.mu.sum() as i64 + self.r as i64;
        if q < 1 {
            return Err(Error::DegenerateShape(q));
        }
        Ok(())
    }

    /// Size `g - d + r` of the Porteous determinant.
    pub fn q(&self) -> u32 {
        self.g + self.r - self.mu.sum()
    }

    /// Codimension of the locus, `r·(g - d + r)`.
    pub fn codim(&self) -> u32 {
        self.r * self.q()
    }
}

/// `c(F_μ) = Π_i Π_{j=1}^{m_i} (1 + j·ω_i)`, truncated at `cap`.
pub fn chern_f(mu: &Partition, generators: &GeneratorSet, cap: u32) -> Result<GradedPoly> {
    if (generators.n as usize) < mu.len() {
        return Err(Error::TooFewGenerators {
            needed: mu.len(),
            available: generators.n as usize,
        });
    }
    let mut acc = GradedPoly::one(cap);
    for (i, &m) in mu.parts().iter().enumerate() {
        let w = generators.omega(i as u32 + 1)?;
        for j in 1..=m {
            let factor = GradedPoly::from_terms(
                [
                    (Monomial::one(), Rational::one()),
                    (Monomial::generator(w), int(j as i64)),
                ],
                cap,
            );
            acc = acc.checked_mul(&factor)?;
        }
    }
    Ok(acc)
}

/// `1 / c(E)` with `c(E) = 1 + λ_1 + ... + λ_g`, truncated at `cap`.
/// No relation among the `λ_i` is applied.
pub fn chern_e_inverse(g: u32, cap: u32) -> Result<GradedPoly> {
    let gens = GeneratorSet::new(g, 0)?;
    let mut ce = GradedPoly::one(cap);
    for l in gens.lambdas() {
        ce = ce.checked_add(&GradedPoly::generator(l, cap))?;
    }
    ce.series_inverse()
}

/// The Porteous determinant `Δ_{p,q}(c) = det(c_{p+j-i})_{1≤i,j≤q}`, with
/// `c_k` the degree-`k` part of `series` and `c_k = 0` for `k < 0`.
///
/// The result is homogeneous of degree `p·q`, which the series must reach.
pub fn delta_pq(series: &GradedPoly, p: u32, q: u32) -> Result<GradedPoly> {
    assert!(q >= 1, "Porteous determinant needs q >= 1");
    let cap = series.cap();
    let needed = p * q;
    if cap < needed {
        return Err(Error::InsufficientCap { needed, cap });
    }
    // Entries above the cap cannot meet a nonzero cofactor: every
    // permutation term has total degree p·q.
    let part = |k: i64| -> Result<GradedPoly> {
        if k < 0 || k > cap as i64 {
            Ok(GradedPoly::zero(cap))
        } else {
            series.graded_part(k as u32)
        }
    };
    let n = q as usize;
    let mut matrix = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(part(p as i64 + j as i64 - i as i64)?);
        }
        matrix.push(row);
    }
    let cols: Vec<usize> = (0..n).collect();
    cofactor_det(&matrix, 0, &cols, cap)
}

/// Laplace expansion along row `row` over the remaining columns.
fn cofactor_det(
    m: &[Vec<GradedPoly>],
    row: usize,
    cols: &[usize],
    cap: u32,
) -> Result<GradedPoly> {
    if cols.len() == 1 {
        return Ok(m[row][cols[0]].clone());
    }
    let mut det = GradedPoly::zero(cap);
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = cofactor_det(m, row + 1, &rest, cap)?;
        let term = entry.checked_mul(&minor)?;
        det = if k % 2 == 0 {
            det.checked_add(&term)?
        } else {
            det.checked_sub(&term)?
        };
    }
    Ok(det)
}

/// Expected class of `BN^r_μ` in the Chow ring of `M_{g,n}`:
/// `Δ_{r, g-d+r}(c(F_μ)/c(E))`, computed with cap equal to its codimension.
///
/// Even `λ`'s are left in place; call [`GradedPoly::reduce_lambda_even`] to
/// normalize.
pub fn bn_class(query: &BnQuery) -> Result<GradedPoly> {
    query.validate()?;
    let cap = query.codim();
    let gens = GeneratorSet::new(query.g, query.mu.len() as u32)?;
    let series = chern_f(&query.mu, &gens, cap)?.checked_mul(&chern_e_inverse(query.g, cap)?)?;
    delta_pq(&series, query.r, query.q())
}

/// Class of the stratum `PH(μ)` inside `M_{g,n}` for `μ ⊢ 2g-2`: the
/// degree-`(g-1)` part of `c(F_μ)/c(E)`.
pub fn stratum_class(g: u32, mu: &Partition) -> Result<GradedPoly> {
    if g < 2 {
        return Err(Error::GenusTooSmall(g));
    }
    mu.require_sum(2 * g - 2)?;
    let cap = g - 1;
    let gens = GeneratorSet::new(g, mu.len() as u32)?;
    chern_f(mu, &gens, cap)?
        .checked_mul(&chern_e_inverse(g, cap)?)?
        .graded_part(cap)
}

/// `-λ_1 + Σ a_i(a_i+1)/2 · ω_i`, the closed form of `BN^1_a` when `Σ a_i = g`.
pub fn logan_divisor_class(a: &Partition) -> GradedPoly {
    let mut terms = vec![(Monomial::generator(Generator::Lambda(1)), int(-1))];
    for (i, &m) in a.parts().iter().enumerate() {
        let m = m as i64;
        terms.push((
            Monomial::generator(Generator::Omega(i as u32 + 1)),
            int(m * (m + 1) / 2),
        ));
    }
    GradedPoly::from_terms(terms, 1)
}
