use crate::paths::DyckPath;
use crate::{Error, Result};

/// Extremal comaj values over admissible paths of length `s` ending at `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremal {
    /// `k (n + k)` with `k = (s - n) / 2`.
    pub max: u64,
    /// `(10)^k 1^n`, the unique path attaining `max`.
    pub max_path: DyckPath,
    /// For `n = 0` and `m >= 2`: blocks `1^{m-1} 0^{m-1}` followed by `1^p 0^p`,
    /// which has the least comaj. `None` otherwise.
    pub min_path: Option<DyckPath>,
}

pub fn extremal_comaj(m: usize, n: usize, s: usize) -> Result<Extremal> {
    if s < n || !(s - n).is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "no paths of length {s} end at height {n}"
        )));
    }
    let k = (s - n) / 2;
    let mut steps = Vec::with_capacity(s);
    for _ in 0..k {
        steps.extend([true, false]);
    }
    steps.extend(std::iter::repeat_n(true, n));
    let min_path = (n == 0 && m >= 2).then(|| {
        let block = m - 1;
        let mut steps = Vec::with_capacity(s);
        let (full, p) = (k / block, k % block);
        for size in std::iter::repeat_n(block, full).chain((p > 0).then_some(p)) {
            steps.extend(std::iter::repeat_n(true, size));
            steps.extend(std::iter::repeat_n(false, size));
        }
        DyckPath::from_steps_unchecked(steps)
    });
    Ok(Extremal {
        max: (k * (n + k)) as u64,
        max_path: DyckPath::from_steps_unchecked(steps),
        min_path,
    })
}
