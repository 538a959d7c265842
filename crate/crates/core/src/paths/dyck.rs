use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A lattice point `(length, height)` on a path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub length: usize,
    pub height: usize,
}

impl Point {
    pub fn new(length: usize, height: usize) -> Self {
        Self { length, height }
    }
}

/// A generalized Dyck path: up-steps `(1,1)` and down-steps `(1,-1)` from the
/// origin that never go below the x-axis, ending at any height.
///
/// Steps are stored as `true` for an up-step and `false` for a down-step and
/// render as the 01-word (`1` = up).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DyckPath {
    steps: Vec<bool>,
}

impl DyckPath {
    pub fn new(steps: Vec<bool>) -> Result<Self> {
        let mut h: i64 = 0;
        for (i, &up) in steps.iter().enumerate() {
            h += if up { 1 } else { -1 };
            if h < 0 {
                return Err(Error::Domain(format!(
                    "path drops below the x-axis at step {}",
                    i + 1
                )));
            }
        }
        Ok(Self { steps })
    }

    /// Caller guarantees the prefix condition.
    pub(crate) fn from_steps_unchecked(steps: Vec<bool>) -> Self {
        debug_assert!(Self::new(steps.clone()).is_ok());
        Self { steps }
    }

    /// `1^n`.
    pub fn all_up(n: usize) -> Self {
        Self {
            steps: vec![true; n],
        }
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end_height(&self) -> usize {
        self.ups() - self.downs()
    }

    pub fn ups(&self) -> usize {
        self.steps.iter().filter(|&&u| u).count()
    }

    /// Number of down-steps, `d(P)`.
    pub fn downs(&self) -> usize {
        self.steps.len() - self.ups()
    }

    /// Heights of all `len() + 1` points, starting with the origin.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0usize;
        out.push(h);
        for &up in &self.steps {
            if up {
                h += 1;
            } else {
                h -= 1;
            }
            out.push(h);
        }
        out
    }

    pub fn max_height(&self) -> usize {
        self.heights().into_iter().max().unwrap_or(0)
    }

    /// Positions `i` (1-based) with an up-step at `i` followed by a down-step.
    pub fn descents(&self) -> impl Iterator<Item = usize> + '_ {
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] && !w[1])
            .map(|(i, _)| i + 1)
    }

    /// `sum (s - i)` over descent positions `i`.
    pub fn comaj(&self) -> u64 {
        let s = self.len();
        self.descents().map(|i| (s - i) as u64).sum()
    }

    /// `sum i` over descent positions `i`.
    pub fn maj(&self) -> u64 {
        self.descents().map(|i| i as u64).sum()
    }

    /// Number of descents, which equals the number of peaks.
    pub fn des(&self) -> usize {
        self.descents().count()
    }

    /// Interior local maxima.
    pub fn peaks(&self) -> Vec<Point> {
        let h = self.heights();
        self.descents().map(|i| Point::new(i, h[i])).collect()
    }

    /// Interior local minima, plus the endpoint when it follows a down-step.
    pub fn valleys(&self) -> Vec<Point> {
        let h = self.heights();
        let mut out: Vec<Point> = self
            .steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| !w[0] && w[1])
            .map(|(i, _)| Point::new(i + 1, h[i + 1]))
            .collect();
        if self.steps.last() == Some(&false) {
            out.push(Point::new(self.len(), h[self.len()]));
        }
        out
    }

    /// `true` when the first `j` steps are all up-steps.
    pub fn starts_with_ups(&self, j: usize) -> bool {
        j <= self.len() && self.steps[..j].iter().all(|&u| u)
    }

    /// Length of the maximal run of down-steps starting right after position `i`.
    pub(crate) fn down_run_after(&self, i: usize) -> usize {
        self.steps[i..].iter().take_while(|&&u| !u).count()
    }

    /// Rebuilds the unique path with the given peaks that ends at `end`.
    ///
    /// Between consecutive peaks the path descends then ascends; before the
    /// first peak it only ascends.
    pub fn from_peaks(peaks: &[Point], end: Point) -> Result<Self> {
        let bad = || Error::Domain("peak coordinates do not describe a path".into());
        let mut steps = Vec::with_capacity(end.length);
        let mut cur = Point::new(0, 0);
        let mut targets: Vec<(Point, bool)> = peaks.iter().map(|&p| (p, true)).collect();
        targets.push((end, false));
        for (target, is_peak) in targets {
            let dx = target.length.checked_sub(cur.length).ok_or_else(bad)? as i64;
            let dy = target.height as i64 - cur.height as i64;
            if (dx - dy) % 2 != 0 || dy.abs() > dx {
                return Err(bad());
            }
            let down = ((dx - dy) / 2) as usize;
            let up = ((dx + dy) / 2) as usize;
            if is_peak && up == 0 {
                return Err(bad());
            }
            if cur.length > 0 && down == 0 && is_peak {
                // consecutive peaks need a descent in between
                return Err(bad());
            }
            steps.extend(std::iter::repeat_n(false, down));
            steps.extend(std::iter::repeat_n(true, up));
            cur = target;
        }
        let path = Self::new(steps)?;
        if path.peaks() != peaks {
            return Err(bad());
        }
        Ok(path)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &up in &self.steps {
            f.write_str(if up { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({self})")
    }
}

impl FromStr for DyckPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                '1' => Ok(true),
                '0' => Ok(false),
                other => Err(Error::Parse(format!(
                    "unexpected character {other:?} in 01-word"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }
}

impl Serialize for DyckPath {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for DyckPath {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn comaj_of_worked_example_paths() {
        assert_eq!(path("10111").comaj(), 4);
        assert_eq!(path("11011").comaj(), 3);
        assert_eq!(DyckPath::all_up(7).comaj(), 0);
    }

    #[test]
    fn leading_up_down_pairs() {
        for n in 0..5 {
            for k in 0..5 {
                let word = "10".repeat(k) + &"1".repeat(n);
                assert_eq!(path(&word).comaj(), (k * (n + k)) as u64);
            }
        }
    }

    #[test]
    fn peaks_and_valleys_of_sample_path() {
        // (0,0)-(3,3)-(5,1)-(8,4)-(12,0)-(17,5)-(20,2)
        let p = path("11100111000011111000");
        assert_eq!(p.end_height(), 2);
        assert_eq!(p.max_height(), 5);
        let peaks = p.peaks();
        let valleys = p.valleys();
        assert_eq!(
            peaks,
            vec![Point::new(3, 3), Point::new(8, 4), Point::new(17, 5)]
        );
        assert_eq!(
            valleys,
            vec![Point::new(5, 1), Point::new(12, 0), Point::new(20, 2)]
        );
    }

    #[test]
    fn endpoint_valley_convention() {
        let p = path("10");
        assert_eq!(p.peaks(), vec![Point::new(1, 1)]);
        assert_eq!(p.valleys(), vec![Point::new(2, 0)]);
        assert!(DyckPath::all_up(4).peaks().is_empty());
        assert!(DyckPath::all_up(4).valleys().is_empty());
    }

    #[test]
    fn rejects_paths_below_axis() {
        assert!("0".parse::<DyckPath>().is_err());
        assert!("1001".parse::<DyckPath>().is_err());
        assert!("12".parse::<DyckPath>().is_err());
    }

    #[test]
    fn peaks_determine_path() {
        let p = path("11100111000011111000");
        assert_eq!(
            DyckPath::from_peaks(&p.peaks(), Point::new(20, 2)).unwrap(),
            p
        );
        assert_eq!(
            DyckPath::from_peaks(&[], Point::new(3, 3)).unwrap(),
            DyckPath::all_up(3)
        );
        assert!(DyckPath::from_peaks(&[Point::new(2, 1)], Point::new(3, 0)).is_err());
    }

    fn any_path() -> impl Strategy<Value = DyckPath> {
        prop::collection::vec(any::<bool>(), 0..24).prop_map(|raw| {
            // Flip steps that would go below the axis.
            let mut h = 0i32;
            let steps = raw
                .into_iter()
                .map(|up| {
                    let up = up || h == 0;
                    h += if up { 1 } else { -1 };
                    up
                })
                .collect();
            DyckPath::new(steps).unwrap()
        })
    }

    proptest! {
        #[test]
        fn maj_plus_comaj_is_des_times_length(p in any_path()) {
            prop_assert_eq!(p.maj() + p.comaj(), p.des() as u64 * p.len() as u64);
        }

        #[test]
        fn string_round_trip(p in any_path()) {
            let back: DyckPath = p.to_string().parse().unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn peaks_reconstruct(p in any_path()) {
            let end = Point::new(p.len(), p.end_height());
            prop_assert_eq!(DyckPath::from_peaks(&p.peaks(), end).unwrap(), p);
        }
    }
}
