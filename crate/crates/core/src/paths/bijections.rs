//! Peak and valley chains, the reflection bijection `Ψ`, the prefix map `τ`,
//! and the correspondence with two-row standard Young tableaux.

use std::fmt;

use crate::paths::{admissible_set, is_admissible, DyckPath, Point};
use crate::{Error, Result};

/// Chain of peaks, 0-based: start at the first peak, then repeatedly move to
/// the leftmost later peak that is weakly higher.
pub fn eta(path: &DyckPath) -> Vec<usize> {
    let peaks = path.peaks();
    let mut out = Vec::new();
    let mut cur = 0usize;
    if peaks.is_empty() {
        return out;
    }
    out.push(0);
    while let Some(next) = (cur + 1..peaks.len()).find(|&u| peaks[u].height >= peaks[cur].height) {
        out.push(next);
        cur = next;
    }
    out
}

/// Chain of valleys, 0-based and listed right to left: start at the last
/// valley, then repeatedly move to the rightmost earlier valley that is
/// weakly lower.
pub fn zeta(path: &DyckPath) -> Vec<usize> {
    let valleys = path.valleys();
    let mut out = Vec::new();
    let Some(mut cur) = valleys.len().checked_sub(1) else {
        return out;
    };
    out.push(cur);
    while let Some(next) = (0..cur)
        .rev()
        .find(|&u| valleys[u].height <= valleys[cur].height)
    {
        out.push(next);
        cur = next;
    }
    out
}

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(what()))
    }
}

/// `Ψ`: admissible paths of length `s` to height `n` that start with `m`
/// up-steps, onto admissible paths of length `s - m` to height `n - m`.
///
/// Every peak `B_i = (x_i, y_i)` between chain peaks `i_t <= i < i_{t+1}` goes
/// to `(x_i + l_i - m, 2 y_{i_t} - y_i + l_i - m)`, where `l_i` is the length of
/// the down-run after `B_i`. Comaj drops by `(s - n) / 2`.
pub fn psi(path: &DyckPath, m: usize, n: usize) -> Result<DyckPath> {
    let s = path.len();
    require(m >= 1 && n >= m && s >= m && path.end_height() == n, || {
        format!("psi needs m >= 1, n >= m, s >= m and end height n; got m={m}, n={n}, {path}")
    })?;
    require(path.starts_with_ups(m), || {
        format!("{path} does not start with {m} up-steps")
    })?;
    require(is_admissible(path, &admissible_set(m, n)), || {
        format!("{path} is not admissible for level {m}, weight {n}")
    })?;
    let peaks = path.peaks();
    let chain = eta(path);
    let mut image = Vec::with_capacity(peaks.len());
    for (t, &start) in chain.iter().enumerate() {
        let stop = chain.get(t + 1).copied().unwrap_or(peaks.len());
        let base = peaks[start].height;
        for peak in &peaks[start..stop] {
            let run = path.down_run_after(peak.length);
            let height = (2 * base + run) as i64 - (peak.height + m) as i64;
            let length = (peak.length + run) as i64 - m as i64;
            require(height >= 0 && length >= 0, || {
                format!("psi image of {path} leaves the quadrant")
            })?;
            image.push(Point::new(length as usize, height as usize));
        }
    }
    DyckPath::from_peaks(&image, Point::new(s - m, n - m))
}

/// `Ψ⁻¹`: reflect `Q` at the horizontal segment ending at each chain valley
/// (reaching back to the nearest earlier point at the same height), then
/// prepend `m` up-steps.
pub fn psi_inverse(path: &DyckPath, m: usize, n: usize) -> Result<DyckPath> {
    require(m >= 1 && n >= m && path.end_height() == n - m, || {
        format!("psi_inverse needs m >= 1, n >= m and end height n - m; got m={m}, n={n}, {path}")
    })?;
    require(is_admissible(path, &admissible_set(m, n - m)), || {
        format!("{path} is not admissible for level {m}, weight {}", n - m)
    })?;
    let heights = path.heights();
    let valleys = path.valleys();
    let mut steps = path.steps().to_vec();
    for v in zeta(path).into_iter().map(|i| valleys[i]) {
        let from = (0..v.length)
            .rev()
            .find(|&x| heights[x] == v.height)
            .expect("a path from the origin passes every height below a valley");
        for step in &mut steps[from..v.length] {
            *step = !*step;
        }
    }
    let mut out = vec![true; m];
    out.extend(steps);
    DyckPath::new(out)
}

/// `τ`: writes `P = 1^j 0^r Q`, where `Q` is empty or starts with an
/// up-step, and returns `(r, 1^{j-r} Q)`.
pub fn tau(path: &DyckPath, j: usize, m: usize) -> Result<(usize, DyckPath)> {
    if j >= m {
        return Err(Error::OutOfHypothesis(format!(
            "tau needs j < m, got j={j}, m={m}"
        )));
    }
    require(path.starts_with_ups(j), || {
        format!("{path} does not start with {j} up-steps")
    })?;
    let r = path.down_run_after(j);
    let mut steps = vec![true; j - r];
    steps.extend_from_slice(&path.steps()[j + r..]);
    Ok((r, DyckPath::from_steps_unchecked(steps)))
}

/// A standard Young tableau with at most two rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TwoRowTableau {
    row1: Vec<usize>,
    row2: Vec<usize>,
}

impl TwoRowTableau {
    pub fn new(row1: Vec<usize>, row2: Vec<usize>) -> Result<Self> {
        let s = row1.len() + row2.len();
        let mut seen = vec![false; s + 1];
        let valid_row = |r: &[usize]| r.windows(2).all(|w| w[0] < w[1]);
        let bad = |why: &str| Err(Error::Domain(format!("not a standard tableau: {why}")));
        if !valid_row(&row1) || !valid_row(&row2) {
            return bad("rows must increase");
        }
        for &v in row1.iter().chain(&row2) {
            if v == 0 || v > s || seen[v] {
                return bad("entries must be 1..s, each once");
            }
            seen[v] = true;
        }
        if row2.len() > row1.len() || row2.iter().zip(&row1).any(|(b, a)| b <= a) {
            return bad("columns must increase");
        }
        Ok(Self { row1, row2 })
    }

    pub fn row1(&self) -> &[usize] {
        &self.row1
    }

    pub fn row2(&self) -> &[usize] {
        &self.row2
    }

    pub fn size(&self) -> usize {
        self.row1.len() + self.row2.len()
    }

    /// Values `i` with `i + 1` in a lower row.
    pub fn descents(&self) -> Vec<usize> {
        self.row1
            .iter()
            .copied()
            .filter(|i| self.row2.contains(&(i + 1)))
            .collect()
    }

    pub fn comaj(&self) -> u64 {
        let s = self.size();
        self.descents().into_iter().map(|i| (s - i) as u64).sum()
    }

    /// Inverse of [`to_syt`].
    pub fn to_path(&self) -> DyckPath {
        let mut steps = vec![false; self.size()];
        for &i in &self.row1 {
            steps[i - 1] = true;
        }
        DyckPath::from_steps_unchecked(steps)
    }
}

impl fmt::Display for TwoRowTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |r: &[usize]| {
            r.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "{} / {}", join(&self.row1), join(&self.row2))
    }
}

/// Up-step positions fill the first row, down-step positions the second.
pub fn to_syt(path: &DyckPath) -> TwoRowTableau {
    let (mut row1, mut row2) = (Vec::new(), Vec::new());
    for (i, &up) in path.steps().iter().enumerate() {
        if up { &mut row1 } else { &mut row2 }.push(i + 1);
    }
    TwoRowTableau { row1, row2 }
}
