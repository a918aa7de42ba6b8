use liepar_core::toric::{self, Ambient, Fan};
use liepar_core::weyl::CellPolynomial;
use proptest::prelude::*;

fn orthant(n: usize) -> Fan {
    let rays = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    Fan::single_cone(n, rays).unwrap()
}

/// Repeatedly star-subdivide at the sum of the rays of a chosen cone.
/// The result stays smooth and projective.
fn blow_up(mut fan: Fan, picks: &[(usize, usize)]) -> Fan {
    for &(dim_pick, cone_pick) in picks {
        let candidates: Vec<Vec<usize>> = fan
            .cones()
            .iter()
            .filter(|c| c.len() >= 2 && c.len() <= 2 + dim_pick % (fan.rank() - 1))
            .cloned()
            .collect();
        let c = &candidates[cone_pick % candidates.len()];
        let v: Vec<i64> = (0..fan.rank()).map(|j| c.iter().map(|&i| fan.rays()[i][j]).sum()).collect();
        fan = toric::star_subdivision(&fan, &v).unwrap();
    }
    fan
}

#[test]
fn surface_singularities_over_twenty_seeds() {
    for n in 1..=5 {
        let (fan, tau) = toric::a_n_resolution(n);
        for seed in 0..20 {
            let p = toric::paving(&fan, &tau, seed).unwrap();
            assert_eq!(p.poincare, CellPolynomial(vec![1, 0, n as u64]), "A{n} seed {seed}");
            assert!(p.even && p.cells_inside_fiber);
            let members: usize = p.cells.iter().map(|c| c.members.len()).sum();
            assert_eq!(members, p.fiber_cones.len());
            assert_eq!(p.fiber_cones.len(), 2 * n + 1);
        }
    }
}

#[test]
fn conifold_over_twenty_seeds() {
    let (fan, tau) = toric::conifold_resolution();
    for seed in 0..20 {
        let p = toric::paving(&fan, &tau, seed).unwrap();
        assert_eq!(p.poincare, CellPolynomial(vec![1, 0, 1]));
        assert_eq!(p.fiber_cones.len(), 3);
    }
}

#[test]
fn non_projective_fans_are_reported() {
    // inside ⟨e1,e2,e3⟩ an inner triangle joined to the outer one by three
    // quadrilaterals, all cut along diagonals turning the same way; the
    // remaining cones are those of P^3
    let rays = vec![
        vec![1, 0, 0],
        vec![0, 1, 0],
        vec![0, 0, 1],
        vec![-1, -1, -1],
        vec![2, 1, 1],
        vec![1, 2, 1],
        vec![1, 1, 2],
    ];
    let cones = vec![
        vec![0, 1, 3],
        vec![1, 2, 3],
        vec![0, 2, 3],
        vec![4, 5, 6],
        vec![0, 1, 5],
        vec![0, 5, 4],
        vec![1, 2, 6],
        vec![1, 6, 5],
        vec![2, 0, 4],
        vec![2, 4, 6],
    ];
    let fan = Fan::new(3, rays, cones).unwrap();
    let report = toric::validate_fan(&fan, None);
    assert!(report.complete && report.simplicial && report.proper_intersections, "{report:?}");
    assert!(matches!(toric::strictly_convex_support(&fan), Err(liepar_core::Error::Infeasible(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn surface_blowups_are_chains(picks in prop::collection::vec((0usize..4, 0usize..64), 0..5), seed in 0u64..1000) {
        let fan = blow_up(orthant(2), &picks);
        let tau = Ambient::new(2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let report = toric::validate_fan(&fan, Some(&tau));
        prop_assert!(report.smooth && report.refines_tau == Some(true));
        let p = toric::paving(&fan, &tau, seed).unwrap();
        // every blowup adds one P^1 to the fiber over the origin
        prop_assert_eq!(p.poincare, CellPolynomial(if picks.is_empty() { vec![1] } else { vec![1, 0, picks.len() as u64] }));
    }

    #[test]
    fn threefold_blowups_have_even_seed_free_pavings(picks in prop::collection::vec((0usize..4, 0usize..64), 1..4), s1 in 0u64..1000, s2 in 0u64..1000) {
        let fan = blow_up(orthant(3), &picks);
        let tau = Ambient::new(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let g = toric::strictly_convex_support(&fan).unwrap();
        prop_assert!(g.verify(&fan));
        let a = toric::paving(&fan, &tau, s1).unwrap();
        let b = toric::paving(&fan, &tau, s2).unwrap();
        prop_assert_eq!(&a.poincare, &b.poincare);
        prop_assert!(a.even && a.cells_inside_fiber);
        prop_assert_eq!(a.poincare.0.first(), Some(&1));
        prop_assert_eq!(a.poincare.eval_one() as usize, fan.maximal_cones().len());
        let members: usize = a.cells.iter().map(|c| c.members.len()).sum();
        prop_assert_eq!(members, a.fiber_cones.len());
    }

    #[test]
    fn subdivision_refines(picks in prop::collection::vec((0usize..4, 0usize..64), 1..4)) {
        let fan = blow_up(orthant(3), &picks);
        let tau = Ambient::new(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let report = toric::validate_fan(&fan, Some(&tau));
        prop_assert!(report.smooth && report.proper_intersections && report.refines_tau == Some(true));
        let poset = toric::orbit_poset(&fan);
        prop_assert_eq!(poset[0].orbit_dim, 3);
        prop_assert_eq!(poset.iter().filter(|o| o.orbit_dim == 0).count(), fan.maximal_cones().len());
    }
}
