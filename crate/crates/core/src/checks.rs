//! Mechanical checks of the symmetry of gap words and the structural facts
//! about relabeling times that it rests on.
//!
//! Every check returns a [`CheckReport`] that serializes to one flat record.
//! A failing report always carries at least one [`Witness`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{
    build_config_incremental, build_config_oracle, relabeling_times, CircleConfig, GapError,
    IncrementalEngine,
};
use crate::quadratic::{Alpha, QuadValue};
use crate::word::{GapWord, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("position {0} does not hold the letter c")]
    NotACPosition(i64),
    #[error("N = {0} is not a relabeling time")]
    NotRelabelingTime(usize),
    #[error("p = {p} is outside 1..={max}")]
    POutOfRange { p: usize, max: usize },
    #[error(transparent)]
    Gap(#[from] GapError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    DiagnosticMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub alpha: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
}

impl Params {
    fn new(alpha: &Alpha, n: usize) -> Self {
        Self {
            alpha: alpha.spec(),
            n,
            p: None,
            q: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub index: i64,
    pub left: String,
    pub right: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Witness {
    fn new(index: impl TryInto<i64>, left: impl ToString, right: impl ToString) -> Self {
        Self {
            index: index.try_into().unwrap_or(i64::MAX),
            left: left.to_string(),
            right: right.to_string(),
            detail: None,
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_name: String,
    pub params: Params,
    pub status: Status,
    pub witnesses: Vec<Witness>,
}

impl CheckReport {
    fn from_witnesses(name: &str, params: Params, witnesses: Vec<Witness>) -> Self {
        let status = if witnesses.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            check_name: name.to_string(),
            params,
            status,
            witnesses,
        }
    }

    fn not_applicable(name: &str, params: Params) -> Self {
        Self {
            check_name: name.to_string(),
            params,
            status: Status::NotApplicable,
            witnesses: Vec::new(),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Which construction feeds the per-configuration checks.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Engine {
    #[default]
    Oracle,
    Incremental,
}

impl Engine {
    pub fn build(self, alpha: &Alpha, n: usize) -> Result<CircleConfig, GapError> {
        match self {
            Engine::Oracle => build_config_oracle(alpha, n),
            Engine::Incremental => build_config_incremental(alpha, n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryCenter {
    /// Position `J` of the `c`.
    pub center: usize,
    /// `ℓ`: the word must mirror about `J` for `k = 0..=ℓ`.
    pub radius: usize,
    pub ok: bool,
    pub first_mismatch: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub n: usize,
    pub word: String,
    pub centers: Vec<SymmetryCenter>,
    pub overall: bool,
}

/// Ascending positions of every `c`.
pub fn c_positions(word: &GapWord) -> Vec<usize> {
    word.letters()
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == Letter::C)
        .map(|(j, _)| j)
        .collect()
}

/// `ℓ` for the `c` at `j`: one less than the cyclic distance to the nearest
/// `c` on either side. A lone `c` finds itself after a full turn, so `ℓ = N - 1`.
pub fn symmetry_radius(word: &GapWord, j: i64) -> Result<usize, CheckError> {
    if word.is_empty() || word.letter(j) != Letter::C {
        return Err(CheckError::NotACPosition(j));
    }
    let n = word.len() as i64;
    let k = (1..=n)
        .find(|&k| word.letter(j - k) == Letter::C || word.letter(j + k) == Letter::C)
        .expect("the search reaches j itself at k = N");
    Ok((k - 1) as usize)
}

/// Checks `W[J-k] = W[J+k]` for `k = 0..=ℓ(J)` at every `c`.
pub fn check_symmetry_theorem(word: &GapWord) -> SymmetryReport {
    let centers: Vec<SymmetryCenter> = c_positions(word)
        .into_iter()
        .map(|center| {
            let j = center as i64;
            let radius = symmetry_radius(word, j).expect("c position");
            let first_mismatch =
                (0..=radius).find(|&k| word.letter(j - k as i64) != word.letter(j + k as i64));
            SymmetryCenter {
                center,
                radius,
                ok: first_mismatch.is_none(),
                first_mismatch,
            }
        })
        .collect();
    SymmetryReport {
        n: word.len(),
        word: word.to_string(),
        overall: centers.iter().all(|c| c.ok),
        centers,
    }
}

fn symmetry_witness(n: usize, word: &GapWord, report: &SymmetryReport) -> Option<Witness> {
    let bad = report.centers.iter().find(|c| !c.ok)?;
    let k = bad.first_mismatch.expect("failed center records k") as i64;
    let j = bad.center as i64;
    Some(
        Witness::new(n, word.letter(j - k), word.letter(j + k))
            .with_detail(format!("center J={j}, k={k}")),
    )
}

/// Symmetry of the gap word at every `N ≤ n_max`.
pub fn check_symmetry_sweep(alpha: &Alpha, n_max: usize) -> CheckReport {
    let mut witnesses = Vec::new();
    let mut engine = IncrementalEngine::new(alpha);
    loop {
        let n = engine.n();
        match engine.word() {
            Ok(word) => {
                let report = check_symmetry_theorem(&word);
                witnesses.extend(symmetry_witness(n, &word, &report));
            }
            Err(e) => witnesses.push(Witness::new(n, "word", "unavailable").with_detail(e.to_string())),
        }
        if n >= n_max {
            break;
        }
        engine.advance();
    }
    CheckReport::from_witnesses("symmetry_theorem", Params::new(alpha, n_max), witnesses)
}

/// At most three distinct gap sizes for every `N ≤ n_max`.
pub fn check_three_gap(alpha: &Alpha, n_max: usize) -> CheckReport {
    let mut witnesses = Vec::new();
    let mut engine = IncrementalEngine::new(alpha);
    loop {
        if engine.distinct_count() > 3 {
            witnesses.push(Witness::new(engine.n(), engine.distinct_count(), "<= 3"));
        }
        if engine.n() >= n_max {
            break;
        }
        engine.advance();
    }
    CheckReport::from_witnesses("three_gap", Params::new(alpha, n_max), witnesses)
}

/// `Δ_3 = Δ_1 + Δ_2` whenever three sizes are present, `N ≤ n_max`.
pub fn check_third_size_additivity(alpha: &Alpha, n_max: usize) -> CheckReport {
    let mut witnesses = Vec::new();
    let mut engine = IncrementalEngine::new(alpha);
    loop {
        let sizes: Vec<&QuadValue> = engine.distinct().collect();
        if let [small, medium, large] = sizes.as_slice() {
            let sum = *small + *medium;
            if &sum != *large {
                witnesses.push(Witness::new(engine.n(), sum, large));
            }
        }
        if engine.n() >= n_max {
            break;
        }
        engine.advance();
    }
    CheckReport::from_witnesses("third_size_additivity", Params::new(alpha, n_max), witnesses)
}

/// Two sizes exactly when `u_1 + u_{N-1} = N`, for `2 ≤ N ≤ n_max`.
pub fn check_fact1(alpha: &Alpha, n_max: usize) -> CheckReport {
    let mut witnesses = Vec::new();
    let mut engine = IncrementalEngine::new(alpha);
    while engine.n() < n_max {
        engine.advance();
        let n = engine.n();
        let two_sizes = engine.distinct_count() == 2;
        let sum = engine.first_visit().expect("N >= 2") + engine.last_visit();
        if two_sizes != (sum == n) {
            witnesses.push(
                Witness::new(n, format!("D={}", engine.distinct_count()), format!("u_1+u_(N-1)={sum}"))
                    .with_detail("two gap sizes disagrees with u_1 + u_(N-1) = N"),
            );
        }
    }
    CheckReport::from_witnesses("fact1", Params::new(alpha, n_max), witnesses)
}

/// `u_j = j·u_1 mod N` at a relabeling time; not applicable otherwise.
pub fn check_fact2(config: &CircleConfig) -> CheckReport {
    let params = Params::new(config.alpha(), config.n());
    if !config.is_relabeling_time() {
        return CheckReport::not_applicable("fact2", params);
    }
    let n = config.n();
    let u1 = config.visit()[1];
    let witnesses = config
        .visit()
        .iter()
        .enumerate()
        .filter_map(|(j, &u)| {
            let expected = (j * u1) % n;
            (u != expected).then(|| Witness::new(j, u, expected))
        })
        .collect();
    CheckReport::from_witnesses("fact2", params, witnesses)
}

/// Every insertion into a three-size configuration splits a largest gap into
/// one smallest and one medium piece, for insertions up to `N = n_max`.
pub fn check_fact3(alpha: &Alpha, n_max: usize) -> CheckReport {
    let mut witnesses = Vec::new();
    let mut engine = IncrementalEngine::new(alpha);
    while engine.n() < n_max {
        let before: Vec<QuadValue> = engine.distinct().cloned().collect();
        let ins = engine.advance();
        let [small, medium, large] = before.as_slice() else {
            continue;
        };
        let n = ins.multiplier;
        if &ins.split != large {
            witnesses.push(Witness::new(n, &ins.split, large).with_detail("split gap is not the largest size"));
        }
        let pieces_ok = (&ins.left == small && &ins.right == medium)
            || (&ins.left == medium && &ins.right == small);
        let after: Vec<&QuadValue> = engine.distinct().collect();
        let letter = |g: &QuadValue| {
            after
                .iter()
                .position(|s| *s == g)
                .and_then(Letter::from_rank)
                .map_or('?', Letter::as_char)
        };
        let letters = (letter(&ins.left), letter(&ins.right));
        let letters_ok = matches!(letters, ('a', 'b') | ('b', 'a'));
        if !pieces_ok || !letters_ok {
            witnesses.push(
                Witness::new(n, letters.0, letters.1)
                    .with_detail(format!("pieces {} and {}", ins.left, ins.right)),
            );
        }
    }
    CheckReport::from_witnesses("fact3", Params::new(alpha, n_max), witnesses)
}

fn pair_witness(word: &GapWord, j: i64) -> Option<Witness> {
    let (l, r) = (word.letter(j - 1), word.letter(j));
    let ok = matches!((l, r), (Letter::A, Letter::B) | (Letter::B, Letter::A));
    (!ok).then(|| Witness::new(0, l, r).with_detail("W[J-1] W[J] is not ab or ba"))
}

/// Around `J` with `u_J = N - 1`, the word is a palindrome of the form
/// `W[J-1-k] = W[J+k]` for `k = 1..=N-2`, with `W[J-1] W[J]` equal to `ab` or
/// `ba`. Not applicable away from relabeling times.
pub fn check_prop1(config: &CircleConfig) -> CheckReport {
    let params = Params::new(config.alpha(), config.n());
    if !config.is_relabeling_time() {
        return CheckReport::not_applicable("prop1", params);
    }
    let n = config.n();
    let word = config.word();
    let j = config.position_of(n - 1).expect("N - 1 is a visited multiplier") as i64;
    let mut witnesses: Vec<Witness> = pair_witness(word, j).into_iter().collect();
    witnesses.extend((1..=n as i64 - 2).filter_map(|k| {
        let (l, r) = (word.letter(j - 1 - k), word.letter(j + k));
        (l != r).then(|| Witness::new(k, l, r))
    }));
    CheckReport::from_witnesses("prop1", params, witnesses)
}

/// [`check_prop2_with_predecessor`] with the preceding relabeling time found
/// by walking the orbit.
pub fn check_prop2(config: &CircleConfig, p: usize) -> Result<CheckReport, CheckError> {
    let n = config.n();
    let times = relabeling_times(config.alpha(), n);
    if times.last() != Some(&n) {
        return Err(CheckError::NotRelabelingTime(n));
    }
    let predecessor = times.iter().rev().nth(1).copied().unwrap_or(1);
    check_prop2_with_predecessor(config, p, predecessor, times.len())
}

/// Symmetry about the point `N - p` at the relabeling time `N = R_q`, where
/// `predecessor = R_{q-1}` (taken as 1 for the first relabeling time) and
/// `1 ≤ p ≤ R_q - R_{q-1}`.
///
/// With `J` such that `u_J = N - p` and `ℓ + 1` the least `k ≥ 1` where
/// `max(u[J-k], u[J+k]) ≥ u_J`, this asserts that `W[J-1] W[J]` is `ab` or
/// `ba`, that `u[J-k] + u[J+k] = N - 2p` for `k = 1..=ℓ`, and that
/// `W[J-1-k] = W[J+k]` for `k = 1..ℓ`. The letter equality at `k = ℓ` itself
/// does not follow from the sums and is reported as a diagnostic when it
/// fails, except for `p = 1` where the window already spans the whole word.
pub fn check_prop2_with_predecessor(
    config: &CircleConfig,
    p: usize,
    predecessor: usize,
    q: usize,
) -> Result<CheckReport, CheckError> {
    let n = config.n();
    if !config.is_relabeling_time() {
        return Err(CheckError::NotRelabelingTime(n));
    }
    let max = n - predecessor;
    if p == 0 || p > max {
        return Err(CheckError::POutOfRange { p, max });
    }
    let word = config.word();
    let u = |i: i64| config.visit_at(i);
    let j = config.position_of(n - p).expect("N - p is a visited multiplier") as i64;
    let uj = n - p;
    let radius = (1..=n as i64)
        .find(|&k| u(j - k).max(u(j + k)) >= uj)
        .expect("k = N returns to J")
        - 1;

    let mut witnesses: Vec<Witness> = pair_witness(word, j).into_iter().collect();
    let target = n as i64 - 2 * p as i64;
    for k in 1..=radius {
        let sum = (u(j - k) + u(j + k)) as i64;
        if sum != target {
            witnesses.push(Witness::new(k, sum, target).with_detail("u[J-k] + u[J+k] != N - 2p"));
        }
    }
    for k in 1..radius {
        let (l, r) = (word.letter(j - 1 - k), word.letter(j + k));
        if l != r {
            witnesses.push(Witness::new(k, l, r).with_detail("W[J-1-k] != W[J+k]"));
        }
    }

    let params = Params {
        p: Some(p),
        q: Some(q),
        ..Params::new(config.alpha(), n)
    };
    let mut report = CheckReport::from_witnesses("prop2", params, witnesses);
    if report.status == Status::Pass && radius >= 1 && radius < n as i64 - 1 {
        let (l, r) = (word.letter(j - 1 - radius), word.letter(j + radius));
        if l != r {
            report.status = Status::DiagnosticMismatch;
            report.witnesses.push(
                Witness::new(radius, l, r)
                    .with_detail(format!("W[J-1-k] != W[J+k] at the endpoint k = l = {radius}, J = {j}")),
            );
        }
    }
    Ok(report)
}

/// Compares `u_1` at each relabeling time `R_q`, `2 ≤ q ≤ q_max`, with the gap
/// `R_q - R_{q-1}` to the previous one. Mismatches are diagnostics, never
/// failures. Walks the orbit until `q_max` relabeling times have appeared.
pub fn check_relabeling_gap_claim(alpha: &Alpha, q_max: usize) -> CheckReport {
    let mut engine = IncrementalEngine::new(alpha);
    let mut times: Vec<usize> = Vec::new();
    let mut witnesses = Vec::new();
    while times.len() < q_max {
        engine.advance();
        if !engine.is_relabeling_time() {
            continue;
        }
        let n = engine.n();
        if let Some(&prev) = times.last() {
            let u1 = engine.first_visit().expect("N >= 2");
            let ulast = engine.last_visit();
            let diff = n - prev;
            if u1 != diff {
                witnesses.push(Witness::new(times.len() + 1, u1, diff).with_detail(format!(
                    "R_q={n} R_(q-1)={prev} u_1={u1} u_(N-1)={ulast} difference={diff} min(u_1,u_(N-1))={}",
                    u1.min(ulast)
                )));
            }
        }
        times.push(engine.n());
    }
    let params = Params {
        q: Some(q_max),
        ..Params::new(alpha, times.last().copied().unwrap_or(1))
    };
    let status = if witnesses.is_empty() {
        Status::Pass
    } else {
        Status::DiagnosticMismatch
    };
    CheckReport {
        check_name: "relabeling_gap_claim".to_string(),
        params,
        status,
        witnesses,
    }
}

/// Largest `N` at which the two engines are compared field by field at every
/// step; beyond it [`check_engine_equivalence`] samples.
pub const DENSE_EQUIVALENCE_LIMIT: usize = 2000;

/// Cross-checks the incremental engine against the sorting oracle.
///
/// For every `N ≤ n_max` the incremental visit permutation must equal the
/// exact sort of `{mα}, m < N`. Full configurations are compared field by
/// field at every `N ≤ dense_limit`, and above it at each relabeling time and
/// its neighbours, at regular strides, and at `n_max`.
pub fn check_engine_equivalence(alpha: &Alpha, n_max: usize, dense_limit: usize) -> CheckReport {
    let params = Params::new(alpha, n_max);
    let reference = match build_config_oracle(alpha, n_max) {
        Ok(cfg) => cfg,
        Err(e) => {
            return CheckReport::from_witnesses(
                "engine_equivalence",
                params,
                vec![Witness::new(n_max, "oracle", "error").with_detail(e.to_string())],
            )
        }
    };
    let stride = (n_max / 40).max(1);
    let times = relabeling_times(alpha, n_max);
    let sampled = |n: usize| {
        n <= dense_limit
            || n == n_max
            || n.is_multiple_of(stride)
            || times.iter().any(|&r| r.abs_diff(n) <= 1)
    };

    let mut witnesses = Vec::new();
    let mut engine = IncrementalEngine::new(alpha);
    loop {
        let n = engine.n();
        let expected = reference.visit().iter().filter(|&&u| u < n);
        if !engine.visit().iter().eq(expected) {
            witnesses.push(Witness::new(n, "incremental visit", "sorted visit"));
        }
        if sampled(n) {
            match (engine.to_config(), build_config_oracle(alpha, n)) {
                (Ok(a), Ok(b)) if a == b => {}
                (a, b) => witnesses.push(
                    Witness::new(n, "incremental", "oracle")
                        .with_detail(format!("equal: {}", a.ok() == b.ok())),
                ),
            }
        }
        if n >= n_max {
            break;
        }
        engine.advance();
    }
    CheckReport::from_witnesses("engine_equivalence", params, witnesses)
}

/// Every check at every `N ≤ n_max`.
///
/// Whole-range properties are checked along one incremental walk each.
/// Fact 2 and both propositions run on configurations built by `engine` at
/// every relabeling time, Proposition 2 for each admissible `p`.
pub fn sweep(alpha: &Alpha, n_max: usize, engine: Engine) -> Result<Vec<CheckReport>, CheckError> {
    let mut reports = vec![
        check_three_gap(alpha, n_max),
        check_third_size_additivity(alpha, n_max),
        check_fact1(alpha, n_max),
        check_fact3(alpha, n_max),
        check_symmetry_sweep(alpha, n_max),
    ];
    let times = relabeling_times(alpha, n_max);
    let mut predecessor = 1;
    for (i, &r) in times.iter().enumerate() {
        let config = engine.build(alpha, r)?;
        reports.push(check_fact2(&config));
        reports.push(check_prop1(&config));
        for p in 1..=r - predecessor {
            reports.push(check_prop2_with_predecessor(&config, p, predecessor, i + 1)?);
        }
        predecessor = r;
    }
    if times.len() >= 2 {
        reports.push(check_relabeling_gap_claim(alpha, times.len()));
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadratic::parse_alpha;

    const PRINTED_67: &str =
        "aababaababacababaababaabababaababaababacababaababacababaababaababab";

    fn word(s: &str) -> GapWord {
        s.parse().unwrap()
    }

    fn sqrt2() -> Alpha {
        parse_alpha("sqrt:2").unwrap()
    }

    #[test]
    fn c_position_examples() {
        assert!(c_positions(&word("ab")).is_empty());
        assert_eq!(c_positions(&word("baca")), vec![2]);
        assert_eq!(c_positions(&word(PRINTED_67)), vec![11, 39, 50]);
    }

    #[test]
    fn radius_examples() {
        assert_eq!(symmetry_radius(&word("baca"), 2), Ok(3));
        assert_eq!(symmetry_radius(&word(PRINTED_67), 39), Ok(10));
        assert_eq!(symmetry_radius(&word(PRINTED_67), 11), Ok(27));
        assert_eq!(symmetry_radius(&word(PRINTED_67), 50), Ok(10));
        assert_eq!(symmetry_radius(&word("baca"), 1), Err(CheckError::NotACPosition(1)));
    }

    #[test]
    fn symmetry_examples() {
        let r = check_symmetry_theorem(&word("acabacabab"));
        assert!(r.overall);
        let got: Vec<_> = r.centers.iter().map(|c| (c.center, c.radius)).collect();
        assert_eq!(got, vec![(1, 3), (5, 3)]);

        let r = check_symmetry_theorem(&word(PRINTED_67));
        assert!(r.overall);
        assert_eq!(r.centers.len(), 3);

        let r = check_symmetry_theorem(&word("cab"));
        assert!(!r.overall);
        assert_eq!(r.centers[0].first_mismatch, Some(1));
        assert_eq!(r.centers[0].radius, 2);

        let r = check_symmetry_theorem(&word("aabab"));
        assert!(r.overall && r.centers.is_empty());
    }

    #[test]
    fn fact_examples() {
        let a = sqrt2();
        assert_eq!(check_fact1(&a, 100).status, Status::Pass);
        assert_eq!(check_fact1(&Alpha::golden(), 100).status, Status::Pass);
        assert_eq!(check_fact1(&a, 2).status, Status::Pass);

        let cfg7 = build_config_oracle(&a, 7).unwrap();
        assert_eq!(cfg7.visit(), &[0, 5, 3, 1, 6, 4, 2]);
        assert_eq!(check_fact2(&cfg7).status, Status::Pass);
        assert_eq!(check_fact2(&build_config_oracle(&a, 3).unwrap()).status, Status::Pass);
        assert_eq!(
            check_fact2(&build_config_oracle(&a, 4).unwrap()).status,
            Status::NotApplicable
        );
        assert_eq!(check_fact3(&a, 100).status, Status::Pass);
    }

    #[test]
    fn prop1_examples() {
        let a = sqrt2();
        let cfg = build_config_oracle(&a, 7).unwrap();
        assert_eq!(cfg.word().to_string(), "abbabbb");
        assert_eq!(cfg.position_of(6), Some(4));
        assert_eq!(check_prop1(&cfg).status, Status::Pass);
        let cfg = build_config_oracle(&a, 12).unwrap();
        assert_eq!(cfg.word().to_string(), "aababaababab");
        assert_eq!(cfg.position_of(11), Some(7));
        assert_eq!(check_prop1(&cfg).status, Status::Pass);
        assert_eq!(
            check_prop1(&build_config_oracle(&a, 4).unwrap()).status,
            Status::NotApplicable
        );
    }

    #[test]
    fn prop2_examples() {
        let a = sqrt2();
        let cfg = build_config_oracle(&a, 12).unwrap();
        assert_eq!(cfg.visit(), &[0, 5, 10, 3, 8, 1, 6, 11, 4, 9, 2, 7]);

        let r = check_prop2(&cfg, 1).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!((r.params.p, r.params.q), (Some(1), Some(5)));

        let r = check_prop2(&cfg, 2).unwrap();
        assert_eq!(r.status, Status::DiagnosticMismatch);
        assert_eq!(r.witnesses.len(), 1);
        let w = &r.witnesses[0];
        assert_eq!((w.index, w.left.as_str(), w.right.as_str()), (4, "b", "a"));

        assert_eq!(check_prop2(&cfg, 6), Err(CheckError::POutOfRange { p: 6, max: 5 }));
        assert_eq!(check_prop2(&cfg, 0), Err(CheckError::POutOfRange { p: 0, max: 5 }));
        let cfg4 = build_config_oracle(&a, 4).unwrap();
        assert_eq!(check_prop2(&cfg4, 1), Err(CheckError::NotRelabelingTime(4)));
    }

    #[test]
    fn first_relabeling_time_uses_one_as_predecessor() {
        let cfg = build_config_oracle(&sqrt2(), 2).unwrap();
        assert_eq!(check_prop2(&cfg, 1).unwrap().status, Status::Pass);
        assert!(check_prop2(&cfg, 2).is_err());
    }

    #[test]
    fn relabeling_gap_claim_examples() {
        let r = check_relabeling_gap_claim(&sqrt2(), 5);
        assert_eq!(r.params.n, 12);
        assert_eq!(r.status, Status::DiagnosticMismatch);
        let at7 = r.witnesses.iter().find(|w| w.index == 4).expect("R_4 = 7 mismatches");
        assert_eq!((at7.left.as_str(), at7.right.as_str()), ("5", "2"));
        assert!(r.witnesses.iter().all(|w| w.index != 5), "R_5 = 12 matches");

        let g = check_relabeling_gap_claim(&Alpha::golden(), 5);
        assert_eq!(g.params.n, 13);
    }

    #[test]
    fn sweep_has_no_failures() {
        for spec in ["sqrt:2", "golden", "sqrt:3"] {
            let reports = sweep(&parse_alpha(spec).unwrap(), 100, Engine::Oracle).unwrap();
            let failed: Vec<_> = reports.iter().filter(|r| r.failed()).collect();
            assert!(failed.is_empty(), "{spec}: {failed:?}");
        }
    }

    #[test]
    fn sweep_is_deterministic() {
        let a = parse_alpha("quad:1:1:3:7").unwrap();
        let run = || serde_json::to_string(&sweep(&a, 150, Engine::Oracle).unwrap()).unwrap();
        assert_eq!(run(), run());
        let inc = serde_json::to_string(&sweep(&a, 150, Engine::Incremental).unwrap()).unwrap();
        assert_eq!(run(), inc);
    }

    #[test]
    fn failing_reports_carry_witnesses() {
        let r = CheckReport::from_witnesses("x", Params::new(&sqrt2(), 3), vec![]);
        assert_eq!(r.status, Status::Pass);
        let r = CheckReport::from_witnesses("x", Params::new(&sqrt2(), 3), vec![Witness::new(1, "a", "b")]);
        assert!(r.failed() && !r.witnesses.is_empty());
    }
}
