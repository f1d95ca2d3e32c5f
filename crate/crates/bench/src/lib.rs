//! Benchmark fixtures shared by the criterion targets.

use strata_core::exact_ring::{int, Generator, GradedPoly, Monomial};
use strata_core::Partition;

/// `Π_{i=1}^{n} (1 + i·ω_i)` truncated at `cap`, a dense-ish input for the
/// multiplication and inversion kernels.
pub fn omega_product(n: u32, cap: u32) -> GradedPoly {
    (1..=n).fold(GradedPoly::one(cap), |acc, i| {
        let f = GradedPoly::from_terms(
            [
                (Monomial::one(), int(1)),
                (Monomial::generator(Generator::Omega(i)), int(i as i64)),
            ],
            cap,
        );
        acc.checked_mul(&f).expect("same cap")
    })
}

/// Principal stratum `(1^{2g-2})`.
pub fn principal(g: u32) -> Partition {
    Partition::ones(2 * g as usize - 2).expect("g >= 2")
}
