use crate::qseries::{chebyshev_p, expand_rational, XSeries};

/// Chebyshev quotients counting paths by number of down-steps.
///
/// With `bounded_only`, the expansion of `p_{m-n} / p_{m+1}`, whose `x^k`
/// coefficient counts paths of length `n + 2k` to height `n` staying at or
/// below `m` (zero when `m < n`). Otherwise `p_{m-n0-1} / p_m^{n1+1}` with
/// `n = m n1 + n0`, counting admissible paths for level `m`.
///
/// # Panics
///
/// Panics when `m == 0`.
pub fn chebyshev_gf(m: usize, n: usize, order: usize, bounded_only: bool) -> XSeries {
    assert!(m >= 1, "level must be positive");
    let (num, den) = if bounded_only {
        if m < n {
            return XSeries::zero(order);
        }
        (chebyshev_p(m - n), chebyshev_p(m + 1))
    } else {
        let (n1, n0) = (n / m, n % m);
        (chebyshev_p(m - n0 - 1), chebyshev_p(m).pow(n1 as u32 + 1))
    };
    expand_rational(&num, &den, order).expect("Chebyshev polynomials have constant term 1")
}
