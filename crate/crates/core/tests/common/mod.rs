//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use strata_core::exact_ring::{int, rat, Generator, GradedPoly, Monomial, Rational};
use strata_core::Partition;

/// All permutations of `0..n` with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out.into_iter()
        .map(|p| {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if p[i] > p[j] {
                        inversions += 1;
                    }
                }
            }
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            (p, sign)
        })
        .collect()
}

/// `det(c_{p+j-i})` by the Leibniz sum over all permutations.
pub fn leibniz_delta(series: &GradedPoly, p: u32, q: u32) -> GradedPoly {
    let cap = series.cap();
    let entry = |i: usize, j: usize| -> GradedPoly {
        let k = p as i64 + j as i64 - i as i64;
        if k < 0 || k > cap as i64 {
            GradedPoly::zero(cap)
        } else {
            series.graded_part(k as u32).unwrap()
        }
    };
    let n = q as usize;
    let mut det = GradedPoly::zero(cap);
    for (perm, sign) in permutations(n) {
        let mut term = GradedPoly::constant(int(sign), cap);
        for (i, &j) in perm.iter().enumerate() {
            term = term.checked_mul(&entry(i, j)).unwrap();
        }
        det = det.checked_add(&term).unwrap();
    }
    det
}

/// A random polynomial with up to `terms` terms in `λ_1..λ_3, ω_1..ω_2`.
pub fn random_series<R: Rng>(rng: &mut R, cap: u32, terms: usize) -> GradedPoly {
    let mut out = Vec::new();
    for _ in 0..rng.gen_range(1..=terms) {
        let mut factors = Vec::new();
        for _ in 0..rng.gen_range(0..=3) {
            let g = if rng.gen_bool(0.5) {
                Generator::Lambda(rng.gen_range(1..=3))
            } else {
                Generator::Omega(rng.gen_range(1..=2))
            };
            factors.push((g, rng.gen_range(1..=2)));
        }
        out.push((
            Monomial::from_pairs(factors),
            rat(rng.gen_range(-7..=7), rng.gen_range(1..=3)),
        ));
    }
    GradedPoly::from_terms(out, cap)
}

/// `κ_μ` summed part by part with integer bookkeeping: `12κ = Σ (m+1 - 1/(m+1))`.
pub fn kappa_by_parts(mu: &Partition) -> Rational {
    let mut total = int(0);
    for &m in mu.parts() {
        let m = m as i64;
        total += int(m + 1) - rat(1, m + 1);
    }
    total / int(12)
}

/// Ordered compositions of `n` into at most `max_parts` positive parts.
pub fn compositions(n: u32, max_parts: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, max_parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        if prefix.len() == max_parts {
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            go(rest - first, max_parts, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_parts, &mut Vec::new(), &mut out);
    out
}

/// `-λ_1 + Σ a_i(a_i+1)/2 ω_i` built term by term.
pub fn logan_oracle(a: &[u32]) -> GradedPoly {
    let mut terms = vec![(Monomial::generator(Generator::Lambda(1)), int(-1))];
    for (i, &m) in a.iter().enumerate() {
        terms.push((
            Monomial::generator(Generator::Omega(i as u32 + 1)),
            rat((m * (m + 1)) as i64, 2),
        ));
    }
    GradedPoly::from_terms(terms, 1)
}
