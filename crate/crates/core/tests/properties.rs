use distspec::{
    analyze, distance_estrada_series, distance_profile, mu1_lower_chain, parse_edgelist,
    parse_graph6, power_sequence, to_graph6, BoundKind, EvalOptions, Graph, SeriesOptions,
};
use proptest::prelude::*;
use proptest::sample::Index;

/// Random spanning tree plus random extra edges, so every sample is connected.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            prop::collection::vec(any::<Index>(), n - 1),
            prop::collection::vec(prop::bool::weighted(0.3), pairs),
        )
            .prop_map(|(n, parents, extra)| {
                let mut g = Graph::empty(n).unwrap();
                for (i, p) in parents.iter().enumerate() {
                    let v = i + 1;
                    g.add_edge(p.index(v), v).unwrap();
                }
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if extra[k] && !g.has_edge(u, v) {
                            g.add_edge(u, v).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
    })
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn distances_form_a_graph_metric(g in connected_graph(14)) {
        let dp = distance_profile(&g).unwrap();
        let n = g.n();
        for i in 0..n {
            prop_assert_eq!(dp.distance(i, i), 0);
            for j in 0..n {
                prop_assert_eq!(dp.distance(i, j), dp.distance(j, i));
                prop_assert_eq!(dp.distance(i, j) == 1, g.has_edge(i, j));
                prop_assert!(dp.distance(i, j) <= dp.diameter());
                for k in 0..n {
                    prop_assert!(dp.distance(i, j) <= dp.distance(i, k) + dp.distance(k, j));
                }
            }
        }
    }

    #[test]
    fn degree_invariants(g in connected_graph(14)) {
        let dp = distance_profile(&g).unwrap();
        let d = dp.dist_degrees();
        prop_assert_eq!(2 * dp.wiener(), d.iter().sum::<u64>());
        for i in 0..g.n() {
            let t: u128 = (0..g.n())
                .map(|j| u128::from(dp.distance(i, j)) * u128::from(d[j]))
                .sum();
            prop_assert_eq!(dp.second_degrees()[i], t);
        }
    }

    #[test]
    fn power_sequence_is_log_convex(g in connected_graph(12), alpha in 0.25f64..3.0) {
        prop_assume!(g.n() >= 2);
        let dp = distance_profile(&g).unwrap();
        let ps = power_sequence(&dp, alpha, 6).unwrap();
        let unit = power_sequence(&dp, 1.0, 2).unwrap();
        for (m2, t) in unit.m(2).iter().zip(dp.second_degrees()) {
            prop_assert!(close(*m2, *t as f64, 1e-12));
        }
        for t in 2..6 {
            let (a, b, c) = (ps.s(t - 1), ps.s(t), ps.s(t + 1));
            prop_assert!(b * b <= a * c * (1.0 + 1e-9));
        }
    }

    #[test]
    fn spectrum_moments_and_routes(g in connected_graph(16)) {
        let a = analyze(&g, &EvalOptions::default()).unwrap();
        let mu = a.spectrum.eigenvalues();
        let n = g.n() as f64;
        let trace: f64 = mu.iter().sum();
        prop_assert!(trace.abs() <= 1e-8 * n * f64::from(a.profile.diameter().max(1)));
        let second: f64 = mu.iter().map(|x| x * x).sum();
        prop_assert!(close(second, 2.0 * a.profile.sum_squared_distances() as f64, 1e-9));
        let series = distance_estrada_series(&a.profile, &SeriesOptions::default()).unwrap();
        prop_assert!(close(series, a.estrada, 1e-9));
        prop_assert!(mu.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn perron_root_and_lower_chain(g in connected_graph(16)) {
        prop_assume!(g.n() >= 2);
        let a = analyze(&g, &EvalOptions::default()).unwrap();
        let mu = a.spectrum.eigenvalues();
        let mu1 = mu[0];
        prop_assert!(mu1 >= mu[mu.len() - 1].abs() - 1e-9);
        let max_d = *a.profile.dist_degrees().iter().max().unwrap() as f64;
        prop_assert!(mu1 <= max_d * (1.0 + 1e-12));
        let chain = mu1_lower_chain(&a.profile).unwrap();
        let tol = 1e-9 * mu1;
        prop_assert!(mu1 + tol >= chain.r1);
        prop_assert!(chain.r1 + tol >= chain.r2);
        prop_assert!(chain.r2 + tol >= chain.r3);
        prop_assert!((1..g.n()).contains(&a.spectrum.n_plus()));
    }

    #[test]
    fn bound_reports_are_consistent(g in connected_graph(10)) {
        let a = analyze(&g, &EvalOptions::default()).unwrap();
        for r in &a.reports {
            let expected = match r.kind {
                BoundKind::Lower => r.actual_value - r.bound_value,
                BoundKind::Upper => r.bound_value - r.actual_value,
            };
            prop_assert_eq!(r.slack, expected);
            prop_assert_eq!(r.kind, r.bound_id.kind());
            if !r.bound_id.is_known_open() {
                prop_assert!(r.satisfied, "{} fails on {}", r.bound_id, to_graph6(&g));
            }
        }
    }

    #[test]
    fn graph6_and_edgelist_round_trip(g in connected_graph(70)) {
        let code = to_graph6(&g);
        prop_assert_eq!(&parse_graph6(&code).unwrap(), &g);
        prop_assert_eq!(&parse_edgelist(&g.to_edgelist()).unwrap(), &g);
    }
}
