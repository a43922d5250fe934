//! Structural invariants of configurations on randomly drawn quadratic angles.

use std::cmp::Ordering;

use num_bigint::BigInt;
use proptest::prelude::*;
use threegap_core::*;

fn random_alpha() -> impl Strategy<Value = Alpha> {
    (-20i64..20, prop_oneof![-9i64..=-1, 1i64..=9], 1i64..12, 2u64..40)
        .prop_filter_map("rational", |(a, b, c, d)| {
            Alpha::new(a.into(), b.into(), c.into(), d).ok()
        })
}

fn assert_invariants(cfg: &CircleConfig) -> Result<(), TestCaseError> {
    let n = cfg.n();
    let d = cfg.alpha().d();
    prop_assert!(cfg.points()[0].is_zero());
    for w in cfg.points().windows(2) {
        prop_assert_eq!(compare(&w[0], &w[1]).unwrap(), Ordering::Less);
    }
    for (y, &u) in cfg.points().iter().zip(cfg.visit()) {
        prop_assert_eq!(y, &frac_mult(cfg.alpha(), u as u64));
    }
    let mut sorted = cfg.visit().to_vec();
    sorted.sort_unstable();
    prop_assert_eq!(sorted, (0..n).collect::<Vec<_>>());

    let total = cfg
        .gaps()
        .iter()
        .fold(QuadValue::zero(d), |acc, g| &acc + g);
    prop_assert_eq!(total, QuadValue::one(d));

    prop_assert!((1..=3).contains(&cfg.distinct_count()));
    for (g, l) in cfg.gaps().iter().zip(cfg.word().letters()) {
        let rank = cfg.distinct().iter().position(|s| s == g).unwrap();
        prop_assert_eq!(Letter::from_rank(rank), Some(*l));
    }
    prop_assert_eq!(cfg.word().count(Letter::C) > 0, cfg.distinct_count() == 3);
    if let Some(additive) = cfg.third_size_is_sum() {
        prop_assert!(additive);
    }
    if n >= 2 {
        prop_assert_eq!(cfg.is_relabeling_time(), cfg.distinct_count() == 2);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn configurations_are_well_formed(a in random_alpha(), n in 1usize..400) {
        let cfg = build_config_oracle(&a, n).unwrap();
        assert_invariants(&cfg)?;
        prop_assert_eq!(&build_config_incremental(&a, n).unwrap(), &cfg);
    }

    #[test]
    fn realizable_words_are_symmetric(a in random_alpha(), n in 1usize..600) {
        let cfg = build_config_incremental(&a, n).unwrap();
        let report = check_symmetry_theorem(cfg.word());
        prop_assert!(report.overall, "{} N={} {:?}", a, n, report);
        for center in &report.centers {
            let j = center.center as i64;
            let l = center.radius as i64;
            prop_assert_eq!(symmetry_radius(cfg.word(), j).unwrap() as i64, l);
            for k in 0..=l {
                prop_assert_eq!(cfg.word().letter(j - k), cfg.word().letter(j + k));
            }
        }
    }

    #[test]
    fn relabeling_time_checks_hold(a in random_alpha(), pick in 0usize..12) {
        let times = relabeling_times(&a, 700);
        let n = times[pick % times.len()];
        let cfg = build_config_oracle(&a, n).unwrap();
        prop_assert_eq!(check_fact2(&cfg).status, Status::Pass);
        prop_assert_eq!(check_prop1(&cfg).status, Status::Pass);
        let prev = times.iter().rev().find(|&&r| r < n).copied().unwrap_or(1);
        for p in 1..=n - prev {
            let report = check_prop2(&cfg, p).unwrap();
            prop_assert!(!report.failed(), "{:?}", report);
        }
    }

    #[test]
    fn floor_and_fraction_recompose(a in random_alpha(), m in 0u64..1_000_000) {
        let whole = QuadValue::from_integer(floor_mult(&a, m), a.d());
        let m_alpha = a.value().scale(&BigInt::from(m), &BigInt::from(1));
        prop_assert_eq!(&whole + &frac_mult(&a, m), m_alpha);
    }
}
