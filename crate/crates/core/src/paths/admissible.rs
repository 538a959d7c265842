use std::collections::BTreeSet;

use crate::paths::DyckPath;

/// The pair set `A(m, n)` that governs admissibility, together with the
/// base-`m` digits `n = m n1 + n0` and the height bound `N = max(m-1, n)`.
///
/// Pairs are `(a, b)`: once a path peaks at height `b`, every later point
/// must stay strictly above height `a`. Heights `b` run over `m..=n`, one
/// pair each, so `A(m, n)` is empty when `n < m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdmissiblePairSet {
    m: usize,
    n: usize,
    n0: usize,
    n1: usize,
    pairs: Vec<(usize, usize)>,
}

impl AdmissiblePairSet {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn n0(&self) -> usize {
        self.n0
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    /// Height bound `N = max(m - 1, n)`.
    pub fn height_bound(&self) -> usize {
        (self.m - 1).max(self.n)
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The `a` paired with peak height `b`, if any.
    pub fn floor_for_peak(&self, b: usize) -> Option<usize> {
        if b < self.m || b > self.n {
            return None;
        }
        let (a, pb) = self.pairs[b - self.m];
        debug_assert_eq!(pb, b);
        Some(a)
    }

    /// Every pair other than `(0, m)` has a pair one level lower with a
    /// strictly smaller first coordinate.
    pub fn has_predecessor_property(&self) -> bool {
        self.pairs.iter().all(|&(a, b)| {
            (a, b) == (0, self.m) || self.pairs.iter().any(|&(a2, b2)| b2 + 1 == b && a2 < a)
        })
    }
}

/// `A(m, n)` from the set-difference description: the `n - m + 1` smallest
/// gaps of `{0..=n}` after removing `p n1 + n0 + min(0, p - 1 - n0)` for
/// `1 <= p <= m`, paired with heights `m, m + 1, ..., n`.
///
/// # Panics
///
/// Panics when `m == 0`.
pub fn admissible_set(m: usize, n: usize) -> AdmissiblePairSet {
    assert!(m >= 1, "level must be positive");
    let (n1, n0) = (n / m, n % m);
    let pairs = if n < m {
        Vec::new()
    } else {
        let removed: BTreeSet<usize> = (1..=m)
            .map(|p| {
                let shift = (p as i64 - 1 - n0 as i64).min(0);
                (p * n1 + n0) as i64 + shift
            })
            .map(|v| v as usize)
            .collect();
        (0..=n)
            .filter(|i| !removed.contains(i))
            .zip(m..=n)
            .collect()
    };
    AdmissiblePairSet {
        m,
        n,
        n0,
        n1,
        pairs,
    }
}

/// `A(m, n)` from the explicit two-family description. Must agree with
/// [`admissible_set`].
pub fn admissible_set_explicit(m: usize, n: usize) -> AdmissiblePairSet {
    assert!(m >= 1, "level must be positive");
    let (n1, n0) = (n / m, n % m);
    let mut pairs = BTreeSet::new();
    if n >= m {
        for p in 0..=n0 {
            for r in 0..n1 {
                pairs.insert((p * (n1 + 1) + r, m + p * n1 + r));
            }
        }
        for p in (n0 + 1)..m {
            for r in 0..n1.saturating_sub(1) {
                pairs.insert((p * n1 + n0 + 1 + r, m + p * (n1 - 1) + n0 + 1 + r));
            }
        }
    }
    AdmissiblePairSet {
        m,
        n,
        n0,
        n1,
        pairs: pairs.into_iter().collect(),
    }
}

/// `P` stays weakly below `N` and respects every pair of `A`.
pub fn is_admissible(path: &DyckPath, set: &AdmissiblePairSet) -> bool {
    let heights = path.heights();
    if heights.iter().any(|&h| h > set.height_bound()) {
        return false;
    }
    path.peaks()
        .into_iter()
        .all(|peak| match set.floor_for_peak(peak.height) {
            Some(a) => heights[peak.length..].iter().all(|&h| h > a),
            None => true,
        })
}
