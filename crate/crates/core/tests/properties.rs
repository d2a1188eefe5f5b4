use hierarchyrank::metrics::{gini, ks_two_sample, lorenz, relative_rank_change};
use hierarchyrank::mvr::{directed_weights, net_score, rho, Ranking};
use hierarchyrank::network::{
    build_network, degree_sequences, load_edge_list, write_edge_list, HiringRecord, NetworkFilter,
    NodeRegistry, YearRange,
};
use hierarchyrank::nullmodel::{degree_preserving_rewire, significance, RhoDistribution};
use proptest::prelude::*;

fn network_strategy() -> impl Strategy<Value = (hierarchyrank::network::HiringNetwork, Ranking)> {
    (2usize..12).prop_flat_map(|n| {
        (
            prop::collection::vec(((0..n, 0..n), 1u64..5), 1..40),
            Just(n).prop_perturb(|n, mut rng| {
                let mut order: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    order.swap(i, rng.random_range(0..=i));
                }
                order
            }),
        )
            .prop_map(move |(edges, order)| {
                let reg = NodeRegistry::from_names((0..n).map(|i| format!("n{i:02}")));
                let net = hierarchyrank::network::HiringNetwork::from_weights(reg, edges).unwrap();
                (net, Ranking::from_order(order).unwrap())
            })
    })
}

fn records_strategy() -> impl Strategy<Value = Vec<HiringRecord>> {
    let inst = prop::sample::select(vec!["A", "B", "C", "D", "E", "F"]);
    let disc = prop::sample::select(vec!["bio", "chem", "cs"]);
    prop::collection::vec((inst.clone(), inst, 1990u32..2020, disc, 0u32..1000), 1..60).prop_map(
        |rows| {
            rows.into_iter()
                .map(|(p, h, y, d, id)| HiringRecord {
                    person_id: format!("p{id}"),
                    phd_institution: p.to_string(),
                    phd_year: y,
                    discipline: d.to_string(),
                    hire_institution: h.to_string(),
                })
                .collect()
        },
    )
}

fn production_strategy() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.0f64..100.0, 1..50)
        .prop_filter("needs a positive value", |v| v.iter().any(|&x| x > 0.0))
}

proptest! {
    #[test]
    fn reversal_negates_score((net, r) in network_strategy()) {
        prop_assert_eq!(net_score(&net, &r.reversed()).unwrap(), -net_score(&net, &r).unwrap());
    }

    #[test]
    fn score_rho_identity((net, r) in network_strategy()) {
        let (down, up) = directed_weights(&net, &r).unwrap();
        prop_assume!(down + up > 0);
        let s = net_score(&net, &r).unwrap() as f64;
        let rho = rho(&net, &r).unwrap();
        prop_assert!((s - (down + up) as f64 * (2.0 * rho - 1.0)).abs() < 1e-9);
    }

    #[test]
    fn degree_sums_match_total((net, _r) in network_strategy()) {
        let (out, inn) = degree_sequences(&net);
        prop_assert_eq!(out.iter().sum::<u64>(), net.total_weight());
        prop_assert_eq!(inn.iter().sum::<u64>(), net.total_weight());
        prop_assert!(net.self_loop_weight() <= net.total_weight());
    }

    #[test]
    fn edge_list_round_trip(records in records_strategy()) {
        let net = build_network(&records, &NetworkFilter::default()).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&net, &mut buf).unwrap();
        prop_assert_eq!(load_edge_list(buf.as_slice()).unwrap(), net);
    }

    #[test]
    fn filtering_commutes_with_building(records in records_strategy(), start in 1990u32..2015, len in 1u32..15) {
        let filter = NetworkFilter {
            year_range: Some(YearRange::new(start, start + len).unwrap()),
            disciplines: Some(["bio".to_string(), "cs".to_string()].into()),
            whitelist: Some(["A", "B", "C", "D"].iter().map(|s| s.to_string()).collect()),
        };
        let direct = build_network(&records, &filter);
        let staged = build_network(&filter.apply(&records), &NetworkFilter::default());
        match (direct, staged) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(_), Err(_)) => {}
            _ => prop_assert!(false, "one route failed, the other did not"),
        }
    }

    #[test]
    fn build_is_deterministic(records in records_strategy()) {
        let a = build_network(&records, &NetworkFilter::default()).unwrap();
        let b = build_network(&records, &NetworkFilter::default()).unwrap();
        prop_assert_eq!(a.registry(), b.registry());
        prop_assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
        prop_assert_eq!(a.total_weight(), records.len() as u64);
    }

    #[test]
    fn rewiring_preserves_degrees((net, _r) in network_strategy(), swaps in 0u64..500, seed: u64) {
        prop_assume!(net.total_weight() >= 2);
        let rewired = degree_preserving_rewire(&net, swaps, seed).unwrap();
        prop_assert_eq!(degree_sequences(&rewired), degree_sequences(&net));
        prop_assert_eq!(rewired.total_weight(), net.total_weight());
    }

    #[test]
    fn gini_is_scale_invariant(x in production_strategy(), c in 0.01f64..1000.0) {
        let scaled: Vec<f64> = x.iter().map(|v| v * c).collect();
        prop_assert!((gini(&x).unwrap() - gini(&scaled).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn gini_matches_lorenz_area(x in production_strategy()) {
        let g = gini(&x).unwrap();
        let curve = lorenz(&x).unwrap();
        prop_assert!((g - (1.0 - 2.0 * curve.area())).abs() <= 1e-9);
        prop_assert!(g >= -1e-12 && g <= 1.0 - 1.0 / x.len() as f64 + 1e-12);
    }

    #[test]
    fn lorenz_is_monotone_below_diagonal(x in production_strategy()) {
        let pts = lorenz(&x).unwrap().points;
        prop_assert_eq!(pts[0], (0.0, 0.0));
        prop_assert_eq!(*pts.last().unwrap(), (1.0, 1.0));
        for w in pts.windows(2) {
            prop_assert!(w[1].0 >= w[0].0 && w[1].1 >= w[0].1);
        }
        for (px, py) in pts {
            prop_assert!(py <= px + 1e-12);
        }
    }

    #[test]
    fn ks_is_symmetric(a in prop::collection::vec(-5.0f64..5.0, 1..40), b in prop::collection::vec(-5.0f64..5.0, 1..40)) {
        let ab = ks_two_sample(&a, &b).unwrap();
        let ba = ks_two_sample(&b, &a).unwrap();
        prop_assert_eq!(ab.statistic, ba.statistic);
        prop_assert!((0.0..=1.0).contains(&ab.statistic));
        prop_assert!((0.0..=1.0).contains(&ab.p_value));
    }

    #[test]
    fn rank_changes_are_bounded_and_order_free(records in records_strategy(), seed: u64) {
        let reg = NodeRegistry::from_names(["A", "B", "C", "D", "E"]);
        let mut order: Vec<usize> = (0..5).collect();
        order.rotate_left((seed % 5) as usize);
        let ranking = Ranking::from_order(order).unwrap();
        prop_assume!(records.iter().any(|r| r.phd_institution != "F" && r.hire_institution != "F"));
        let s = relative_rank_change(&records, &reg, &ranking).unwrap();
        let bound = 4.0 / 5.0;
        prop_assert!(s.values.iter().all(|v| v.abs() <= bound + 1e-12));
        prop_assert_eq!(s.n_total + s.n_dropped, records.len());

        let mut reversed = records.clone();
        reversed.reverse();
        let r = relative_rank_change(&reversed, &reg, &ranking).unwrap();
        let key = |v: &[f64]| { let mut v = v.to_vec(); v.sort_by(f64::total_cmp); v };
        prop_assert_eq!(key(&s.values), key(&r.values));
    }

    #[test]
    fn empirical_p_in_range(e in prop::collection::vec(0.5f64..1.0, 2..30), n in prop::collection::vec(0.5f64..1.0, 2..30)) {
        let (e, n) = (RhoDistribution::new(e).unwrap(), RhoDistribution::new(n).unwrap());
        if let Ok(report) = significance(&e, &n) {
            let b = n.n as f64;
            prop_assert!(report.p_value_empirical >= 1.0 / (b + 1.0) && report.p_value_empirical <= 1.0);
            prop_assert!((0.0..=1.0).contains(&report.p_value_t));
        }
    }
}

#[test]
fn welch_t_matches_textbook_formula() {
    // Textbook route: two-pass means and unbiased variances, straight from
    // the definition t = (m1 - m2) / sqrt(s1²/n1 + s2²/n2).
    fn textbook_t(x: &[f64], y: &[f64]) -> f64 {
        let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
        let var = |v: &[f64]| {
            let m = mean(v);
            v.iter().map(|a| (a - m) * (a - m)).sum::<f64>() / (v.len() - 1) as f64
        };
        (mean(x) - mean(y)) / (var(x) / x.len() as f64 + var(y) / y.len() as f64).sqrt()
    }

    let mut state = 12345u64;
    let mut gauss = || {
        // Box-Muller on an LCG; only needs to be deterministic.
        let mut u = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 11) as f64 + 0.5) / (1u64 << 53) as f64
        };
        let (u1, u2) = (u(), u());
        (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    };
    for k in 0..20 {
        let x: Vec<f64> = (0..30 + k).map(|_| 0.8 + 0.05 * gauss()).collect();
        let y: Vec<f64> = (0..25 + 2 * k).map(|_| 0.7 + 0.08 * gauss()).collect();
        let report = significance(
            &RhoDistribution::new(x.clone()).unwrap(),
            &RhoDistribution::new(y.clone()).unwrap(),
        )
        .unwrap();
        let t = textbook_t(&x, &y);
        assert!(
            (report.t_statistic - t).abs() < 1e-10,
            "{} vs {t}",
            report.t_statistic
        );
    }
}

#[test]
fn welch_p_matches_scipy_reference() {
    // scipy.stats.ttest_ind([0.61,0.72,0.68,0.75,0.70], [0.55,0.60,0.58,0.66],
    //                       equal_var=False, alternative='greater')
    let e = RhoDistribution::new(vec![0.61, 0.72, 0.68, 0.75, 0.70]).unwrap();
    let n = RhoDistribution::new(vec![0.55, 0.60, 0.58, 0.66]).unwrap();
    let report = significance(&e, &n).unwrap();
    assert!((report.t_statistic - 2.857_629_148_370_23).abs() < 1e-12);
    assert!((report.p_value_t - 0.012_434_941_734_726_09).abs() < 1e-9);
    assert!((report.degrees_of_freedom - 6.881_867_824_582_973).abs() < 1e-9);
}
