use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::qseries::QPolynomial;

/// Partitions of `c` into at most `a` parts, each at most `b`.
///
/// Uses `P(a, b, c) = P(a, b - 1, c) + P(a - 1, b, c - b)`: either no part
/// equals `b`, or remove one part of size `b`.
pub fn bounded_partition_count(a: usize, b: usize, c: usize) -> BigUint {
    // table[i][j] = P(i, bb, j) for the current part bound bb
    let mut table = vec![vec![BigUint::zero(); c + 1]; a + 1];
    for row in &mut table {
        row[0] = BigUint::one();
    }
    for bb in 1..=b {
        for i in 1..=a {
            for j in bb..=c {
                let add = table[i - 1][j - bb].clone();
                table[i][j] += add;
            }
        }
    }
    table[a][c].clone()
}

/// Level-2 Weyl flag `V^{1->2}_{n+2k, n}` as a generating function of
/// partitions in a `k` by `floor(n/2)` box, read from the top degree `k(k+n)` down.
pub fn lpart_poly(k: usize, n: usize) -> QPolynomial {
    let n1 = n / 2;
    let top = k * (k + n);
    QPolynomial::from_terms(
        (0..=top)
            .map(|l| (l as i64, bounded_partition_count(k, n1, top - l)))
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e, num_bigint::BigInt::from(c))),
    )
}
