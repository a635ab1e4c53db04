//! Invariants checked on random inputs.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use covering::cover::{maximal_subgroup_classes, union_cover, verify_cover, verify_cover_all_elements, Cover};
use covering::data::GroupData;
use covering::ilp::{certify, check_certificate, simplex, solve_integer, SolveOptions, Status};
use covering::perm::{analyze, GroupTable, Permutation};
use covering::subgroups::incidence_matrix_a;
use covering::witt::{build_mclaughlin_graph, induced_edge_bound, SrGraph};
use num_rational::BigRational;
use std::sync::OnceLock;

fn mclaughlin() -> &'static SrGraph {
    static G: OnceLock<SrGraph> = OnceLock::new();
    G.get_or_init(|| build_mclaughlin_graph().unwrap())
}

fn u3_3() -> &'static GroupData {
    static D: OnceLock<GroupData> = OnceLock::new();
    D.get_or_init(|| GroupData::load(&common::data("u3_3")).unwrap())
}

fn perm_strategy(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// a|K| = b|M| with integral b, on groups generated by two random permutations.
    #[test]
    fn edge_identity_on_random_groups(a in perm_strategy(5), b in perm_strategy(5)) {
        let g = GroupTable::close("G", vec![a, b], 1000).unwrap();
        prop_assume!(g.order() > 1);
        prop_assume!((0..g.order() as u32).all(|x| (g.element_order(x) as usize) < g.order()));
        let classes = analyze(&g);
        let maximals = maximal_subgroup_classes(&g).unwrap();
        let mats = incidence_matrix_a(&classes, &maximals).unwrap();
        mats.check_identity().unwrap();
        for k in 0..mats.class_labels.len() {
            for m in 0..mats.subgroup_labels.len() {
                prop_assert_eq!(mats.a[k][m] * mats.class_sizes[k], mats.b[k][m] * mats.orbit_sizes[m]);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solver_matches_brute_force(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = common::random_program(&mut rng, 12);
        let res = solve_integer(&p, &SolveOptions::default()).unwrap();
        prop_assert_eq!(res.status, Status::Optimal);
        prop_assert_eq!(Some(res.optimum), common::brute_force(&p));
        let (lower, incumbent) = check_certificate(&p, &certify(&p, &res).unwrap()).unwrap();
        prop_assert_eq!((lower, incumbent), (res.optimum, res.optimum));
    }

    /// The dual packing simplex and the primal simplex agree on the relaxation value.
    #[test]
    fn dual_and_primal_simplex_agree(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = common::random_program(&mut rng, 10);
        let lp = p.to_dense();
        let value = |o: simplex::LpOutcome<BigRational>| match o {
            simplex::LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        };
        let primal = value(simplex::solve::<BigRational>(&lp, usize::MAX));
        let dual = value(simplex::solve_dual::<BigRational>(&lp, usize::MAX));
        prop_assert!(primal.is_some());
        prop_assert_eq!(primal, dual);
    }

    #[test]
    fn induced_edge_bound_holds(seed in any::<u64>(), size in 1usize..=275) {
        let g = mclaughlin();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = rand::seq::index::sample(&mut rng, g.n, size).into_vec();
        let b = induced_edge_bound(g, &w, 22);
        prop_assert!(b.holds(), "{:?}", b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Checking principal elements only gives the same answer as checking every element.
    #[test]
    fn principal_check_equals_full_check(drop in proptest::collection::vec(0usize..64, 0..3), extra in proptest::collection::vec((0usize..4, 0usize..63), 0..4)) {
        let d = u3_3();
        let base = union_cover(&d.subgroups, &["M1", "M2"]).unwrap();
        let mut selection: Vec<(String, usize)> = base
            .selection
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, s)| s.clone())
            .collect();
        for (m, i) in extra {
            let s = &d.subgroups[m];
            selection.push((s.id.clone(), i % s.orbit.len()));
        }
        let cover = Cover { selection };
        let principal = verify_cover(&d.group, &d.classes, &d.subgroups, &cover).unwrap().is_none();
        let full = verify_cover_all_elements(&d.group, &d.classes, &d.subgroups, &cover).unwrap().is_none();
        prop_assert_eq!(principal, full);
        prop_assert_eq!(principal, drop.is_empty() || drop.iter().all(|&i| i >= 64));
    }
}
