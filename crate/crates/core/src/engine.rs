//! Circle configurations of the orbit `{mα}, 0 ≤ m < N`.
//!
//! Two independent constructions produce the same [`CircleConfig`]:
//!
//! * [`build_config_oracle`] computes every fractional part and sorts them
//!   with the exact comparison. It is the definitional reference.
//! * [`IncrementalEngine`] inserts one point at a time into an ordered map
//!   keyed by exact position, splitting the gap that contains the new point
//!   and keeping a tally of the distinct gap sizes. Each insertion costs a
//!   logarithmic number of exact comparisons.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use thiserror::Error;

use crate::quadratic::{frac_mult, Alpha, QuadValue};
use crate::word::{GapWord, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GapError {
    #[error("a configuration needs at least one point (N >= 1)")]
    EmptyOrbit,
    #[error("{count} distinct gap sizes at N = {n}; only three letters exist")]
    TooManyGapSizes { n: usize, count: usize },
}

/// Full state of the orbit at one `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleConfig {
    alpha: Alpha,
    n: usize,
    points: Vec<QuadValue>,
    visit: Vec<usize>,
    gaps: Vec<QuadValue>,
    distinct: Vec<QuadValue>,
    word: GapWord,
}

impl CircleConfig {
    pub fn alpha(&self) -> &Alpha {
        &self.alpha
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted positions `y_0 = 0 < y_1 < … < y_{N-1} < 1`.
    pub fn points(&self) -> &[QuadValue] {
        &self.points
    }

    /// The permutation `u` with `y_j = {u_j α}`.
    pub fn visit(&self) -> &[usize] {
        &self.visit
    }

    /// `u_{j mod N}`.
    pub fn visit_at(&self, j: i64) -> usize {
        self.visit[j.rem_euclid(self.n as i64) as usize]
    }

    /// `δ_j`, the gap starting at `y_j`; the last one wraps through 1.
    pub fn gaps(&self) -> &[QuadValue] {
        &self.gaps
    }

    /// Distinct gap sizes in increasing order.
    pub fn distinct(&self) -> &[QuadValue] {
        &self.distinct
    }

    pub fn distinct_count(&self) -> usize {
        self.distinct.len()
    }

    pub fn word(&self) -> &GapWord {
        &self.word
    }

    /// Index `J` with `u_J = m`.
    pub fn position_of(&self, m: usize) -> Option<usize> {
        self.visit.iter().position(|&u| u == m)
    }

    /// Relabeling-time test `u_1 + u_{N-1} = N`.
    pub fn is_relabeling_time(&self) -> bool {
        self.n >= 2 && self.visit[1] + self.visit[self.n - 1] == self.n
    }

    /// `Some(Δ_3 == Δ_1 + Δ_2)` when three sizes are present.
    pub fn third_size_is_sum(&self) -> Option<bool> {
        match self.distinct.as_slice() {
            [small, medium, large] => Some(&(small + medium) == large),
            _ => None,
        }
    }
}

fn rank_letter(sizes: &[&QuadValue], gap: &QuadValue) -> Letter {
    let rank = sizes
        .iter()
        .position(|s| *s == gap)
        .expect("every gap has a tallied size");
    Letter::from_rank(rank).expect("at most three sizes")
}

/// Reference construction: compute, sort, difference.
pub fn build_config_oracle(alpha: &Alpha, n: usize) -> Result<CircleConfig, GapError> {
    if n == 0 {
        return Err(GapError::EmptyOrbit);
    }
    let mut orbit: Vec<(QuadValue, usize)> =
        (0..n).map(|m| (frac_mult(alpha, m as u64), m)).collect();
    orbit.sort_by(|x, y| x.0.compare(&y.0).expect("one radicand per orbit"));
    let (points, visit): (Vec<_>, Vec<_>) = orbit.into_iter().unzip();

    let one = QuadValue::one(alpha.d());
    let gaps: Vec<QuadValue> = (0..n)
        .map(|j| {
            let next = points.get(j + 1).unwrap_or(&one);
            next - &points[j]
        })
        .collect();

    let mut distinct = gaps.clone();
    distinct.sort_by(|x, y| x.compare(y).expect("one radicand per orbit"));
    distinct.dedup();
    if distinct.len() > 3 {
        return Err(GapError::TooManyGapSizes {
            n,
            count: distinct.len(),
        });
    }
    let refs: Vec<&QuadValue> = distinct.iter().collect();
    let word = GapWord::new(gaps.iter().map(|g| rank_letter(&refs, g)).collect());

    Ok(CircleConfig {
        alpha: alpha.clone(),
        n,
        points,
        visit,
        gaps,
        distinct,
        word,
    })
}

#[derive(Debug, Clone)]
struct Slot {
    multiplier: usize,
    /// Gap from this point to the next one clockwise.
    gap: QuadValue,
}

/// What happened when the point `{Nα}` was inserted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Insertion {
    /// `N`, the multiplier of the inserted point.
    pub multiplier: usize,
    /// Multiplier of the point immediately before the new one.
    pub predecessor: usize,
    /// Size of the gap that was split.
    pub split: QuadValue,
    /// Piece from the predecessor to the new point.
    pub left: QuadValue,
    /// Piece from the new point to the successor.
    pub right: QuadValue,
    /// Number of distinct sizes before the insertion.
    pub distinct_before: usize,
}

/// Orbit state grown one point at a time.
#[derive(Debug, Clone)]
pub struct IncrementalEngine {
    alpha: Alpha,
    one: QuadValue,
    circle: BTreeMap<QuadValue, Slot>,
    /// (size, multiplicity), increasing by size.
    sizes: Vec<(QuadValue, usize)>,
}

impl IncrementalEngine {
    /// The single-point orbit `{0}`, N = 1.
    pub fn new(alpha: &Alpha) -> Self {
        let zero = QuadValue::zero(alpha.d());
        let one = QuadValue::one(alpha.d());
        let mut circle = BTreeMap::new();
        circle.insert(
            zero,
            Slot {
                multiplier: 0,
                gap: one.clone(),
            },
        );
        Self {
            alpha: alpha.clone(),
            sizes: vec![(one.clone(), 1)],
            one,
            circle,
        }
    }

    /// Resumes from an existing configuration.
    pub fn from_config(config: &CircleConfig) -> Self {
        let mut sizes: Vec<(QuadValue, usize)> =
            config.distinct.iter().map(|s| (s.clone(), 0)).collect();
        for g in &config.gaps {
            let entry = sizes
                .iter_mut()
                .find(|(s, _)| s == g)
                .expect("gap sizes listed in distinct");
            entry.1 += 1;
        }
        let circle = config
            .points
            .iter()
            .zip(&config.visit)
            .zip(&config.gaps)
            .map(|((p, &u), g)| {
                (
                    p.clone(),
                    Slot {
                        multiplier: u,
                        gap: g.clone(),
                    },
                )
            })
            .collect();
        Self {
            alpha: config.alpha.clone(),
            one: QuadValue::one(config.alpha.d()),
            circle,
            sizes,
        }
    }

    pub fn alpha(&self) -> &Alpha {
        &self.alpha
    }

    /// Current number of points `N`.
    pub fn n(&self) -> usize {
        self.circle.len()
    }

    pub fn distinct_count(&self) -> usize {
        self.sizes.len()
    }

    /// Distinct gap sizes in increasing order.
    pub fn distinct(&self) -> impl Iterator<Item = &QuadValue> {
        self.sizes.iter().map(|(s, _)| s)
    }

    /// `u_1`, the multiplier of the point closest to 0 from above.
    pub fn first_visit(&self) -> Option<usize> {
        self.circle.values().nth(1).map(|s| s.multiplier)
    }

    /// `u_{N-1}`, the multiplier of the point closest to 1 from below.
    pub fn last_visit(&self) -> usize {
        self.circle
            .values()
            .next_back()
            .expect("origin is always present")
            .multiplier
    }

    /// Relabeling-time test `u_1 + u_{N-1} = N` on the current state.
    pub fn is_relabeling_time(&self) -> bool {
        self.first_visit()
            .is_some_and(|u1| u1 + self.last_visit() == self.n())
    }

    fn tally_add(&mut self, size: QuadValue) {
        match self.sizes.iter().position(|(s, _)| s.cmp(&size) != Ordering::Less) {
            Some(i) if self.sizes[i].0 == size => self.sizes[i].1 += 1,
            Some(i) => self.sizes.insert(i, (size, 1)),
            None => self.sizes.push((size, 1)),
        }
    }

    fn tally_remove(&mut self, size: &QuadValue) {
        let i = self
            .sizes
            .iter()
            .position(|(s, _)| s == size)
            .expect("removed gap size is tallied");
        self.sizes[i].1 -= 1;
        if self.sizes[i].1 == 0 {
            self.sizes.remove(i);
        }
    }

    /// Inserts `{Nα}` and moves to `N + 1`.
    pub fn advance(&mut self) -> Insertion {
        let multiplier = self.n();
        let x = frac_mult(&self.alpha, multiplier as u64);
        let distinct_before = self.sizes.len();

        // x > 0, so the origin guarantees a predecessor; past the last point
        // the successor is the origin again, at position 1.
        let right = match self.circle.range(&x..).next() {
            Some((succ, _)) => succ - &x,
            None => &self.one - &x,
        };
        let (pred, slot) = self
            .circle
            .range_mut(..&x)
            .next_back()
            .expect("origin precedes every other point");
        let left = &x - pred;
        let predecessor = slot.multiplier;
        let split = std::mem::replace(&mut slot.gap, left.clone());

        self.circle.insert(
            x,
            Slot {
                multiplier,
                gap: right.clone(),
            },
        );
        self.tally_remove(&split);
        self.tally_add(left.clone());
        self.tally_add(right.clone());

        Insertion {
            multiplier,
            predecessor,
            split,
            left,
            right,
            distinct_before,
        }
    }

    /// Visit permutation `u_0, …, u_{N-1}`.
    pub fn visit(&self) -> Vec<usize> {
        self.circle.values().map(|s| s.multiplier).collect()
    }

    fn check_sizes(&self) -> Result<Vec<&QuadValue>, GapError> {
        if self.sizes.len() > 3 {
            return Err(GapError::TooManyGapSizes {
                n: self.n(),
                count: self.sizes.len(),
            });
        }
        Ok(self.distinct().collect())
    }

    /// Gap word of the current state.
    pub fn word(&self) -> Result<GapWord, GapError> {
        let sizes = self.check_sizes()?;
        Ok(GapWord::new(
            self.circle
                .values()
                .map(|s| rank_letter(&sizes, &s.gap))
                .collect(),
        ))
    }

    /// Materializes the full configuration at the current `N`.
    pub fn to_config(&self) -> Result<CircleConfig, GapError> {
        let sizes = self.check_sizes()?;
        let n = self.n();
        let mut points = Vec::with_capacity(n);
        let mut visit = Vec::with_capacity(n);
        let mut gaps = Vec::with_capacity(n);
        let mut letters = Vec::with_capacity(n);
        for (p, slot) in &self.circle {
            points.push(p.clone());
            visit.push(slot.multiplier);
            gaps.push(slot.gap.clone());
            letters.push(rank_letter(&sizes, &slot.gap));
        }
        Ok(CircleConfig {
            alpha: self.alpha.clone(),
            n,
            points,
            visit,
            gaps,
            distinct: sizes.into_iter().cloned().collect(),
            word: GapWord::new(letters),
        })
    }
}

/// Builds the configuration at `n` by repeated insertion from `N = 1`.
pub fn build_config_incremental(alpha: &Alpha, n: usize) -> Result<CircleConfig, GapError> {
    if n == 0 {
        return Err(GapError::EmptyOrbit);
    }
    let mut engine = IncrementalEngine::new(alpha);
    for _ in 1..n {
        engine.advance();
    }
    engine.to_config()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// A gap of the largest of three sizes split into the two smaller sizes.
    SplitThirdSize,
    /// The configuration had at most two sizes and gained a new one.
    NewSizeCreated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StepEvent {
    pub kind: StepKind,
    /// Index of the split gap in the pre-step configuration.
    pub gap_index: usize,
    /// Letters of the two pieces in the post-step configuration.
    pub left_letter: Letter,
    pub right_letter: Letter,
}

/// Adds `{Nα}` to a configuration at `N`, yielding the configuration at `N + 1`.
pub fn step(config: &CircleConfig) -> Result<(CircleConfig, StepEvent), GapError> {
    let mut engine = IncrementalEngine::from_config(config);
    let insertion = engine.advance();
    let next = engine.to_config()?;
    let gap_index = config
        .position_of(insertion.predecessor)
        .expect("predecessor is an existing point");
    let kind = if insertion.distinct_before == 3 {
        StepKind::SplitThirdSize
    } else {
        StepKind::NewSizeCreated
    };
    let event = StepEvent {
        kind,
        gap_index,
        left_letter: next.word.letter(gap_index as i64),
        right_letter: next.word.letter(gap_index as i64 + 1),
    };
    Ok((next, event))
}

/// Whether `config` sits at a relabeling time (`u_1 + u_{N-1} = N`).
pub fn is_relabeling_time(config: &CircleConfig) -> bool {
    config.is_relabeling_time()
}

/// All relabeling times `R_k ≤ n_max`, increasing.
pub fn relabeling_times(alpha: &Alpha, n_max: usize) -> Vec<usize> {
    let mut engine = IncrementalEngine::new(alpha);
    let mut out = Vec::new();
    while engine.n() < n_max {
        engine.advance();
        if engine.is_relabeling_time() {
            out.push(engine.n());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadratic::parse_alpha;

    fn alpha(spec: &str) -> Alpha {
        parse_alpha(spec).unwrap()
    }

    fn q(a: i64, b: i64, c: i64, d: u64) -> QuadValue {
        QuadValue::new(a.into(), b.into(), c.into(), d).unwrap()
    }

    #[test]
    fn single_point() {
        let cfg = build_config_oracle(&alpha("sqrt:2"), 1).unwrap();
        assert_eq!(cfg.word().to_string(), "a");
        assert_eq!(cfg.distinct_count(), 1);
        assert_eq!(cfg.gaps(), &[QuadValue::one(2)]);
        assert_eq!(cfg.distinct(), &[QuadValue::one(2)]);
        assert!(!cfg.is_relabeling_time());
        assert_eq!(build_config_incremental(&alpha("sqrt:2"), 1).unwrap(), cfg);
    }

    #[test]
    fn empty_orbit_is_rejected() {
        assert_eq!(build_config_oracle(&alpha("sqrt:2"), 0), Err(GapError::EmptyOrbit));
        assert_eq!(build_config_incremental(&alpha("sqrt:2"), 0), Err(GapError::EmptyOrbit));
    }

    #[test]
    fn sqrt2_four_points() {
        let cfg = build_config_oracle(&alpha("sqrt:2"), 4).unwrap();
        assert_eq!(cfg.visit(), &[0, 3, 1, 2]);
        assert_eq!(cfg.word().to_string(), "baca");
        assert_eq!(cfg.distinct(), &[q(3, -2, 1, 2), q(-4, 3, 1, 2), q(-1, 1, 1, 2)]);
        assert_eq!(cfg.third_size_is_sum(), Some(true));
    }

    #[test]
    fn step_splits_c_gap() {
        let a = alpha("sqrt:2");
        let cfg = build_config_oracle(&a, 4).unwrap();
        let (next, event) = step(&cfg).unwrap();
        assert_eq!(event.kind, StepKind::SplitThirdSize);
        assert_eq!(event.gap_index, 2);
        assert_eq!(cfg.gaps()[2], q(-1, 1, 1, 2));
        assert_eq!((event.left_letter, event.right_letter), (Letter::B, Letter::A));
        assert_eq!(next.word().to_string(), "babaa");
        assert_eq!(next, build_config_oracle(&a, 5).unwrap());
    }

    #[test]
    fn step_from_two_sizes_creates_new_size() {
        let a = alpha("sqrt:2");
        let (next, event) = step(&build_config_oracle(&a, 3).unwrap()).unwrap();
        assert_eq!(event.kind, StepKind::NewSizeCreated);
        assert_eq!(next.word().to_string(), "baca");

        let (next, event) = step(&build_config_oracle(&a, 1).unwrap()).unwrap();
        assert_eq!(event.kind, StepKind::NewSizeCreated);
        assert_eq!(event.gap_index, 0);
        assert_eq!(next.word().to_string(), "ab");
    }

    #[test]
    fn relabeling_examples() {
        let a = alpha("sqrt:2");
        assert!(build_config_oracle(&a, 3).unwrap().is_relabeling_time());
        assert!(!build_config_oracle(&a, 4).unwrap().is_relabeling_time());
        let cfg = build_config_oracle(&a, 12).unwrap();
        assert!(cfg.is_relabeling_time());
        assert_eq!((cfg.visit()[1], cfg.visit()[11]), (5, 7));
        assert_eq!(relabeling_times(&a, 12), vec![2, 3, 5, 7, 12]);
        assert_eq!(relabeling_times(&a, 2), vec![2]);
        assert_eq!(relabeling_times(&Alpha::golden(), 13), vec![2, 3, 5, 8, 13]);
    }

    #[test]
    fn engines_agree_small() {
        for spec in ["sqrt:2", "golden", "sqrt:3", "quad:1:1:3:7", "quad:-7:3:5:11"] {
            let a = alpha(spec);
            let mut engine = IncrementalEngine::new(&a);
            for n in 1..=200 {
                if n > 1 {
                    engine.advance();
                }
                assert_eq!(engine.to_config().unwrap(), build_config_oracle(&a, n).unwrap(), "{spec} N={n}");
            }
        }
    }

    #[test]
    fn resumed_engine_matches() {
        let a = alpha("golden");
        let cfg = build_config_oracle(&a, 13).unwrap();
        let mut engine = IncrementalEngine::from_config(&cfg);
        engine.advance();
        assert_eq!(engine.to_config().unwrap(), build_config_oracle(&a, 14).unwrap());
    }
}
