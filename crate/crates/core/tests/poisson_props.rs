mod common;

use common::{entry, homogeneous, nonzero_rational, poly, quadratic_entries};
use gpoisson::{catalog, Homogeneity, PoissonStructure, Poly, WeightedGrading};
use proptest::prelude::*;

fn structures() -> Vec<PoissonStructure> {
    let mut v: Vec<PoissonStructure> = quadratic_entries().into_iter().map(|(_, s)| s).collect();
    v.push(entry("sextic_weighted"));
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_a_biderivation(
        idx in 0usize..12,
        f in poly(3, 3, 4),
        g in poly(3, 3, 4),
        h in poly(3, 3, 4),
    ) {
        let s = &structures()[idx];
        let lhs = s.bracket_eval(&f, &(&g * &h)).unwrap();
        let rhs = &(&s.bracket_eval(&f, &g).unwrap() * &h) + &(&g * &s.bracket_eval(&f, &h).unwrap());
        prop_assert_eq!(lhs, rhs);
        prop_assert!(s.bracket_eval(&f, &f).unwrap().is_zero());
        prop_assert_eq!(s.bracket_eval(&f, &g).unwrap(), -s.bracket_eval(&g, &f).unwrap());
    }

    #[test]
    fn jacobi_holds_on_random_elements(
        idx in 0usize..12,
        f in poly(3, 2, 3),
        g in poly(3, 2, 3),
        h in poly(3, 2, 3),
    ) {
        let s = &structures()[idx];
        let b = |a: &Poly, c: &Poly| s.bracket_eval(a, c).unwrap();
        let j = &(&b(&f, &b(&g, &h)) + &b(&g, &b(&h, &f))) + &b(&h, &b(&f, &g));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn bracket_adds_degrees(
        idx in 0usize..11,
        (f, g) in (0i64..4, 0i64..4).prop_flat_map(|(a, b)| {
            let w = WeightedGrading::standard(3);
            (homogeneous(w.clone(), a), homogeneous(w, b))
        }),
    ) {
        let s = &structures()[idx];
        let w = s.grading();
        let fg = s.bracket_eval(&f, &g).unwrap();
        if let (Homogeneity::Degree(a), Homogeneity::Degree(b)) = (f.weighted_degree(w), g.weighted_degree(w)) {
            prop_assert!(fg.weighted_degree(w).admits(a + b));
        } else {
            prop_assert!(fg.is_zero());
        }
    }

    #[test]
    fn scaling_preserves_the_poisson_verdict(xi in nonzero_rational(), idx in 0usize..12) {
        let s = &structures()[idx];
        prop_assert!(s.scale(&xi).unwrap().verify_poisson());
        let raw = PoissonStructure::new(
            WeightedGrading::standard(3),
            [((0, 1), Poly::parse("y^2", 3).unwrap()), ((1, 2), Poly::parse("x^2", 3).unwrap())],
        ).unwrap();
        prop_assert_eq!(raw.scale(&xi).unwrap().verify_poisson(), raw.verify_poisson());
    }

    #[test]
    fn random_log_canonical_is_poisson(ps in prop::collection::vec(common::small_rational(), 6)) {
        let mut params = vec![("n".to_string(), "4".to_string())];
        let mut k = 0;
        for i in 1..=4 {
            for j in i + 1..=4 {
                params.push((format!("p_{i}_{j}"), gpoisson::poly::format_rational(&ps[k])));
                k += 1;
            }
        }
        let e = catalog::get("log_canonical", &params).unwrap();
        prop_assert!(e.structure.verify_poisson() && e.structure.verify_graded());
    }

    #[test]
    fn random_weyl_twist_is_poisson(ms in prop::collection::vec(common::small_rational(), 4)) {
        let mut params = Vec::new();
        for (k, m) in ms.iter().enumerate() {
            params.push((format!("m_{}_{}", k / 2 + 1, k % 2 + 1), gpoisson::poly::format_rational(m)));
        }
        let e = catalog::get("weyl_twist", &params).unwrap();
        prop_assert!(e.structure.verify_poisson() && e.structure.verify_graded());
    }
}

#[test]
fn potentials_are_central() {
    for name in catalog::QUADRATIC_NORMAL_FORMS
        .iter()
        .chain(&["sextic_weighted"])
    {
        let e = catalog::get(name, &[]).unwrap();
        let omega = e.potential.unwrap();
        for i in 0..3 {
            let xi = Poly::var(3, i);
            assert!(
                e.structure.bracket_eval(&omega, &xi).unwrap().is_zero(),
                "{name}"
            );
        }
    }
}

#[test]
fn three_by_three_weyl_twist_is_poisson() {
    let e = catalog::get(
        "weyl_twist",
        &[("n".into(), "3".into()), ("m_3_1".into(), "2/3".into())],
    )
    .unwrap();
    assert!(e.structure.verify_poisson());
    assert!(e.structure.verify_graded());
}
