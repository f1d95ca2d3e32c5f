use num_traits::One;

use super::monomial::{Generator, Monomial};
use super::poly::GradedPoly;
use super::rational::{rat, Rational};

/// Value of `λ_{2k}` in terms of odd-indexed classes, from the degree-`2k`
/// part of `c(E)·c(E^∨) = 1`:
/// `λ_{2k} = -(1/2) Σ_{i=1}^{2k-1} (-1)^i λ_i λ_{2k-i}`, with the even classes
/// on the right replaced by their own reductions.
fn even_lambda_values(max_k: u32, cap: u32) -> Vec<GradedPoly> {
    // values[k] is the reduced form of λ_{2k}; index 0 unused
    let mut values: Vec<GradedPoly> = vec![GradedPoly::zero(cap)];
    let reduced = |i: u32, values: &[GradedPoly]| -> GradedPoly {
        if i.is_multiple_of(2) {
            values[(i / 2) as usize].clone()
        } else {
            GradedPoly::generator(Generator::Lambda(i), cap)
        }
    };
    for k in 1..=max_k {
        let n = 2 * k;
        let mut sum = GradedPoly::zero(cap);
        for i in 1..n {
            let sign = if i % 2 == 0 { Rational::one() } else { -Rational::one() };
            let term = reduced(i, &values)
                .checked_mul(&reduced(n - i, &values))
                .expect("same cap")
                .scale(&sign);
            sum = sum.checked_add(&term).expect("same cap");
        }
        values.push(sum.scale(&rat(-1, 2)));
    }
    values
}

impl GradedPoly {
    /// Eliminates every even-indexed Hodge class using the relations coming
    /// from `c(E)·c(E^∨) = 1`; in degree two this is `λ2 = λ1^2/2`.
    ///
    /// Odd-indexed classes are left alone, and so are the `ω`'s. The output
    /// never mentions `λ_{2k}`, which makes the pass idempotent.
    pub fn reduce_lambda_even(&self) -> GradedPoly {
        let max_k = self
            .terms()
            .flat_map(|(m, _)| m.factors().iter())
            .filter_map(|&(g, _)| match g {
                Generator::Lambda(i) if i % 2 == 0 => Some(i / 2),
                _ => None,
            })
            .max();
        let Some(max_k) = max_k else {
            return self.clone();
        };
        let values = even_lambda_values(max_k, self.cap());
        let mut out = self.clone();
        for k in 1..=max_k {
            out = out
                .substitute(Generator::Lambda(2 * k), &values[k as usize])
                .expect("same cap");
        }
        out
    }
}

/// `reduce_lambda_even` as a free function, for call sites that read better
/// that way.
pub fn reduce_lambda_even(f: &GradedPoly) -> GradedPoly {
    f.reduce_lambda_even()
}

/// True if `f` mentions no `λ_{2k}`.
pub fn is_even_reduced(f: &GradedPoly) -> bool {
    f.terms().all(|(m, _): (&Monomial, _)| {
        m.factors()
            .iter()
            .all(|&(g, _)| !matches!(g, Generator::Lambda(i) if i % 2 == 0))
    })
}
