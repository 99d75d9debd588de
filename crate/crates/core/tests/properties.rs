use proptest::prelude::*;
use quivarity::cycles::{primitive_cycles, quasi_primitive_cycles, Cycle};
use quivarity::format::{parse_setting, to_toml};
use quivarity::local::local_quiver;
use quivarity::oracle::generic_rank;
use quivarity::quiver::{euler_matrix, is_strongly_connected, strongly_connected_components, Arrow};
use quivarity::reduction::{classify_with, reduce, StepKind};
use quivarity::simples::{enumerate_decompositions, has_simple, Decomposition};
use quivarity::{classify, DimensionVector, Quiver, QuiverSetting, Strategy as Order};

fn ids(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

fn from_matrix(adj: &[Vec<usize>], dims: &[u64]) -> QuiverSetting {
    let n = dims.len();
    let mut arrows = Vec::new();
    for (i, row) in adj.iter().enumerate() {
        for (j, &k) in row.iter().enumerate() {
            arrows.extend(std::iter::repeat_n(Arrow::new(i, j), k));
        }
    }
    let q = Quiver::from_indexed(ids(n), arrows).unwrap().0;
    QuiverSetting::new(q, DimensionVector::new(dims.to_vec())).unwrap()
}

/// Settings on 1 to 4 vertices, dimensions up to `max_dim`, at most
/// `max_arrows` arrows from any vertex to any vertex.
fn setting(min_dim: u64, max_dim: u64, max_arrows: usize) -> impl Strategy<Value = QuiverSetting> {
    (1usize..=4).prop_flat_map(move |n| {
        (
            prop::collection::vec(prop::collection::vec(0..=max_arrows, n), n),
            prop::collection::vec(min_dim..=max_dim, n),
        )
            .prop_map(|(adj, dims)| from_matrix(&adj, &dims))
    })
}

fn vector(n: usize) -> impl Strategy<Value = DimensionVector> {
    prop::collection::vec(0u64..=5, n).prop_map(DimensionVector::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn euler_form_is_bilinear(
        (s, a, b, c) in setting(0, 3, 3).prop_flat_map(|s| {
            let n = s.vertex_count();
            (Just(s), vector(n), vector(n), vector(n))
        })
    ) {
        let e = s.euler();
        prop_assert_eq!(e.chi(&a.add(&b), &c).unwrap(), e.chi(&a, &c).unwrap() + e.chi(&b, &c).unwrap());
        prop_assert_eq!(e.chi(&a, &b.add(&c)).unwrap(), e.chi(&a, &b).unwrap() + e.chi(&a, &c).unwrap());
    }

    #[test]
    fn euler_matrix_round_trips(s in setting(1, 1, 3)) {
        let q = s.quiver();
        prop_assert_eq!(&euler_matrix(q).to_quiver(q.vertices()).unwrap(), q);
    }

    #[test]
    fn euler_form_on_ones_counts_arrows(s in setting(1, 1, 3)) {
        let q = s.quiver();
        let ones = DimensionVector::ones(q.vertex_count());
        let chi = s.euler().chi(&ones, &ones).unwrap();
        prop_assert_eq!(q.arrow_count() as i64 - q.vertex_count() as i64 + 1, 1 - chi);
    }

    #[test]
    fn components_partition_and_are_strongly_connected(s in setting(1, 1, 2)) {
        let q = s.quiver();
        let comps = strongly_connected_components(q);
        let mut owner = vec![usize::MAX; q.vertex_count()];
        for (c, comp) in comps.iter().enumerate() {
            for &v in comp {
                prop_assert_eq!(owner[v], usize::MAX);
                owner[v] = c;
            }
            let mut keep = vec![false; q.vertex_count()];
            comp.iter().for_each(|&v| keep[v] = true);
            prop_assert!(is_strongly_connected(&q.induced(&keep).0));
        }
        prop_assert!(owner.iter().all(|&o| o != usize::MAX));
        // The condensation has no 2-cycles.
        for a in q.arrows() {
            for b in q.arrows() {
                let (x, y) = (owner[a.source], owner[a.target]);
                prop_assert!(!(x != y && owner[b.source] == y && owner[b.target] == x));
            }
        }
    }

    #[test]
    fn traces_replay_and_terminate(s in setting(0, 3, 2), seed in any::<u64>()) {
        for strategy in [Order::Canonical, Order::Randomized(seed)] {
            let t = reduce(&s, strategy);
            prop_assert_eq!(&t.replay(&s).unwrap(), &t.final_setting);
            prop_assert_eq!(t.polynomial_part, t.steps.iter().map(|st| st.split_off()).sum::<u64>());
            // (vertices, loops) decreases lexicographically with every step.
            let mut current = s.clone();
            for step in &t.steps {
                let next = step.apply(&current).unwrap();
                let measure = |x: &QuiverSetting| {
                    let loops: usize = (0..x.vertex_count()).map(|v| x.quiver().loops(v)).sum();
                    (x.vertex_count(), loops)
                };
                prop_assert!(measure(&next) < measure(&current));
                if step.kind() == StepKind::RI {
                    prop_assert_eq!(next.vertex_count() + 1, current.vertex_count());
                }
                current = next;
            }
        }
    }

    #[test]
    fn verdict_is_independent_of_step_order(s in setting(1, 3, 2), seed in any::<u64>()) {
        let a = classify(&s);
        let b = classify_with(&s, Order::Randomized(seed));
        prop_assert_eq!(a.coregular, b.coregular);
        prop_assert_eq!(a.ring_dimension(), b.ring_dimension());
    }

    #[test]
    fn ring_dimension_matches_euler_form(s in setting(1, 3, 2)) {
        let v = classify(&s);
        if let (true, Some(d)) = (v.coregular, has_simple(&s).iss_dimension) {
            prop_assert_eq!(v.ring_dimension(), Some(d));
        }
    }

    #[test]
    fn rotations_have_one_canonical_form(s in setting(2, 3, 2), pick in any::<prop::sample::Index>(), r in 0usize..64) {
        let cycles = quasi_primitive_cycles(&s, 6).unwrap();
        if !cycles.is_empty() {
            let c = pick.get(&cycles);
            let mut word = c.arrows().to_vec();
            let shift = r % word.len();
            word.rotate_left(shift);
            prop_assert_eq!(&Cycle::new(s.quiver(), &word).unwrap(), c);
        }
    }

    #[test]
    fn quasi_primitive_is_primitive_on_ones(s in setting(1, 1, 2), extra in 0usize..4) {
        let n = s.vertex_count();
        prop_assert_eq!(quasi_primitive_cycles(&s, n + extra).unwrap(), primitive_cycles(s.quiver()));
    }

    #[test]
    fn unit_decomposition_reproduces_loopless_quivers(s in setting(1, 3, 2)) {
        let n = s.vertex_count();
        let loopless: Vec<Arrow> = s.quiver().arrows().iter().copied().filter(|a| !a.is_loop()).collect();
        let q = Quiver::from_indexed(ids(n), loopless).unwrap().0;
        let s = QuiverSetting::new(q, s.alpha().clone()).unwrap();
        let local = local_quiver(&s, &Decomposition::all_units(s.alpha())).unwrap().setting;
        prop_assert_eq!(local.alpha(), s.alpha());
        prop_assert_eq!(local.quiver().adjacency(), s.quiver().adjacency());
    }

    #[test]
    fn enumerated_decompositions_are_valid(s in setting(1, 2, 2)) {
        let all = enumerate_decompositions(&s, 200);
        for d in &all.items {
            prop_assert!(d.validate(&s).is_ok());
            prop_assert_eq!(&d.total(s.vertex_count()), s.alpha());
            prop_assert_eq!(&Decomposition::parse(&d.to_string(), s.vertex_count()).unwrap(), d);
        }
    }

    #[test]
    fn files_round_trip(s in setting(0, 5, 3)) {
        let text = to_toml(&s);
        let parsed = parse_setting(&text).unwrap();
        prop_assert_eq!(&parsed, &s);
        prop_assert_eq!(to_toml(&parsed), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn more_generators_never_lower_the_rank(s in setting(1, 2, 1), cut in 0usize..8, seed in any::<u64>()) {
        let cycles = quasi_primitive_cycles(&s, 5).unwrap();
        let prefix = &cycles[..cut.min(cycles.len())];
        prop_assert!(generic_rank(&s, prefix, 3, 1e-8, seed) <= generic_rank(&s, &cycles, 3, 1e-8, seed));
    }
}
