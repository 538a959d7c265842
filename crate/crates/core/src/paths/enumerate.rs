use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::paths::{AdmissiblePairSet, DyckPath};

/// A set of Dyck paths of fixed length and end height, optionally bounded in
/// height, restricted to admissible paths, and forced to begin with a run of
/// up-steps.
///
/// ```
/// use demflag::paths::{admissible_set, PathQuery};
///
/// let set = admissible_set(2, 3);
/// let words: Vec<String> = PathQuery::new(5, 3)
///     .admissible(&set)
///     .iter()
///     .map(|p| p.to_string())
///     .collect();
/// assert_eq!(words, ["10111", "11011"]);
/// ```
#[derive(Clone, Debug)]
pub struct PathQuery<'a> {
    length: usize,
    end: usize,
    height_bound: Option<usize>,
    pairs: Option<&'a AdmissiblePairSet>,
    prefix_ups: usize,
}

impl<'a> PathQuery<'a> {
    pub fn new(length: usize, end_height: usize) -> Self {
        Self {
            length,
            end: end_height,
            height_bound: None,
            pairs: None,
            prefix_ups: 0,
        }
    }

    /// Inclusive bound on every height.
    pub fn height_bound(mut self, bound: usize) -> Self {
        self.height_bound = Some(bound);
        self
    }

    /// Keep only paths admissible for `set`; this also bounds heights by `N`.
    pub fn admissible(mut self, set: &'a AdmissiblePairSet) -> Self {
        self.pairs = Some(set);
        self
    }

    /// Paths must start with at least `j` up-steps.
    pub fn prefix_ups(mut self, j: usize) -> Self {
        self.prefix_ups = j;
        self
    }

    fn effective_bound(&self) -> usize {
        let from_pairs = self.pairs.map_or(usize::MAX, |a| a.height_bound());
        self.height_bound.unwrap_or(usize::MAX).min(from_pairs)
    }

    fn floor_table(&self) -> Vec<usize> {
        // floor_after_peak[b] = a + 1 for (a, b) in A, 0 otherwise
        let top = self.length + 1;
        let mut table = vec![0usize; top + 1];
        if let Some(set) = self.pairs {
            for &(a, b) in set.pairs() {
                if b <= top {
                    table[b] = a + 1;
                }
            }
        }
        table
    }

    fn is_empty_domain(&self) -> bool {
        self.end > self.length
            || !(self.length - self.end).is_multiple_of(2)
            || self.prefix_ups > self.length
            || self.end > self.effective_bound()
    }

    /// Lexicographic stream of the qualifying paths (`0 < 1`).
    pub fn iter(&self) -> Paths<'_, 'a> {
        Paths {
            walker: Walker::new(self),
        }
    }

    /// Counts paths by comaj: entry `c` is the number of paths with comaj `c`.
    pub fn comaj_histogram(&self) -> Vec<u64> {
        let mut hist: Vec<u64> = Vec::new();
        let mut walker = Walker::new(self);
        while let Some((_, comaj)) = walker.advance() {
            let c = comaj as usize;
            if hist.len() <= c {
                hist.resize(c + 1, 0);
            }
            hist[c] += 1;
        }
        hist
    }

    /// Sum of comaj over all qualifying paths, with the path count.
    pub fn comaj_total(&self) -> (u64, u64) {
        let mut walker = Walker::new(self);
        let (mut count, mut total) = (0u64, 0u64);
        while let Some((_, comaj)) = walker.advance() {
            count += 1;
            total += comaj;
        }
        (count, total)
    }

    /// Number of qualifying paths by dynamic programming over
    /// `(position, height, floor, last step)`, without listing them.
    pub fn count(&self) -> BigUint {
        if self.is_empty_domain() {
            return BigUint::zero();
        }
        let bound = self.effective_bound();
        let floors = self.floor_table();
        let mut memo: HashMap<(usize, usize, usize, bool), BigUint> = HashMap::new();
        count_from(self, bound, &floors, 0, 0, 0, false, &mut memo)
    }
}

#[allow(clippy::too_many_arguments)]
fn count_from(
    q: &PathQuery,
    bound: usize,
    floors: &[usize],
    pos: usize,
    height: usize,
    floor: usize,
    last_up: bool,
    memo: &mut HashMap<(usize, usize, usize, bool), BigUint>,
) -> BigUint {
    if pos == q.length {
        return if height == q.end {
            BigUint::from(1u32)
        } else {
            BigUint::zero()
        };
    }
    let key = (pos, height, floor, last_up);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for up in [false, true] {
        if let Some((h, f)) = step_ok(q, bound, floors, pos, height, floor, last_up, up) {
            total += count_from(q, bound, floors, pos + 1, h, f, up, memo);
        }
    }
    memo.insert(key, total.clone());
    total
}

/// New `(height, floor)` after placing a step at position `pos + 1`, or
/// `None` when no completion can satisfy the constraints.
#[allow(clippy::too_many_arguments)]
#[inline]
fn step_ok(
    q: &PathQuery,
    bound: usize,
    floors: &[usize],
    pos: usize,
    height: usize,
    floor: usize,
    last_up: bool,
    up: bool,
) -> Option<(usize, usize)> {
    if pos < q.prefix_ups && !up {
        return None;
    }
    let (new_h, new_floor) = if up {
        if height >= bound {
            return None;
        }
        (height + 1, floor)
    } else {
        if height == 0 {
            return None;
        }
        let mut f = floor;
        if last_up {
            // the current point is a peak at this height
            f = f.max(floors.get(height).copied().unwrap_or(0));
            if height < f {
                return None;
            }
        }
        (height - 1, f)
    };
    let remaining = q.length - pos - 1;
    if new_h < new_floor || new_floor > q.end || new_h.abs_diff(q.end) > remaining {
        return None;
    }
    Some((new_h, new_floor))
}

struct Frame {
    height: usize,
    floor: usize,
    comaj: u64,
    // 0: try a down-step next, 1: try an up-step next, 2: exhausted
    next_choice: u8,
}

struct Walker<'q, 'a> {
    query: &'q PathQuery<'a>,
    bound: usize,
    floors: Vec<usize>,
    word: Vec<bool>,
    frames: Vec<Frame>,
    done: bool,
}

impl<'q, 'a> Walker<'q, 'a> {
    fn new(query: &'q PathQuery<'a>) -> Self {
        let done = query.is_empty_domain();
        Self {
            query,
            bound: query.effective_bound(),
            floors: query.floor_table(),
            word: Vec::with_capacity(query.length),
            frames: vec![Frame {
                height: 0,
                floor: 0,
                comaj: 0,
                next_choice: 0,
            }],
            done,
        }
    }

    fn advance(&mut self) -> Option<(&[bool], u64)> {
        if self.done {
            return None;
        }
        let s = self.query.length;
        loop {
            let depth = self.word.len();
            let Some(frame) = self.frames.last_mut() else {
                self.done = true;
                return None;
            };
            let choice = frame.next_choice;
            if choice >= 2 || (depth == s && choice > 0) {
                self.frames.pop();
                self.word.pop();
                continue;
            }
            if depth == s {
                frame.next_choice = 2;
                let comaj = frame.comaj;
                return Some((&self.word, comaj));
            }
            let up = choice == 1;
            frame.next_choice += 1;
            let (height, floor, comaj) = (frame.height, frame.floor, frame.comaj);
            let last_up = self.word.last().copied().unwrap_or(false);
            if let Some((h, f)) = step_ok(
                self.query,
                self.bound,
                &self.floors,
                depth,
                height,
                floor,
                last_up,
                up,
            ) {
                let comaj = if !up && last_up {
                    comaj + (s - depth) as u64
                } else {
                    comaj
                };
                self.word.push(up);
                self.frames.push(Frame {
                    height: h,
                    floor: f,
                    comaj,
                    next_choice: 0,
                });
            }
        }
    }
}

/// Iterator over the paths of a [`PathQuery`].
pub struct Paths<'q, 'a> {
    walker: Walker<'q, 'a>,
}

impl Iterator for Paths<'_, '_> {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        self.walker
            .advance()
            .map(|(w, _)| DyckPath::from_steps_unchecked(w.to_vec()))
    }
}
