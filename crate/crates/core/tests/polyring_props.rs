mod common;

use common::{homogeneous, poly};
use gpoisson::{Homogeneity, Poly, WeightedGrading};
use proptest::prelude::*;

proptest! {
    #[test]
    fn ring_axioms(a in poly(3, 3, 5), b in poly(3, 3, 5), c in poly(3, 3, 5)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Poly::one(3), a.clone());
    }

    #[test]
    fn partials_obey_leibniz(a in poly(3, 3, 4), b in poly(3, 3, 4), i in 0usize..3) {
        let lhs = (&a * &b).partial(i).unwrap();
        let rhs = &(&a.partial(i).unwrap() * &b) + &(&a * &b.partial(i).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_partials_commute(a in poly(3, 4, 6), i in 0usize..3, j in 0usize..3) {
        prop_assert_eq!(
            a.partial(i).unwrap().partial(j).unwrap(),
            a.partial(j).unwrap().partial(i).unwrap()
        );
    }

    #[test]
    fn degrees_add((f, h) in (0i64..4, 0i64..4).prop_flat_map(|(d1, d2)| {
        let g = WeightedGrading::new(vec![1, 2, 3]);
        (homogeneous(g.clone(), d1), homogeneous(g, d2))
    })) {
        let g = WeightedGrading::new(vec![1, 2, 3]);
        let prod = &f * &h;
        match (f.weighted_degree(&g), h.weighted_degree(&g)) {
            (Homogeneity::Degree(a), Homogeneity::Degree(b)) => {
                prop_assert_eq!(prod.weighted_degree(&g), Homogeneity::Degree(a + b));
            }
            _ => prop_assert!(prod.is_zero()),
        }
    }

    #[test]
    fn display_round_trips(a in poly(3, 3, 6)) {
        prop_assert_eq!(Poly::parse(&a.to_string(), 3).unwrap(), a.clone());
    }

    #[test]
    fn display_round_trips_without_aliases(a in poly(5, 3, 6)) {
        prop_assert_eq!(Poly::parse(&a.to_string(), 5).unwrap(), a.clone());
    }
}

#[test]
fn basis_sizes_for_three_variables() {
    let g = WeightedGrading::standard(3);
    for d in 0..15i64 {
        let expected = ((d + 1) * (d + 2) / 2) as usize;
        assert_eq!(g.monomial_basis(d).unwrap().len(), expected);
    }
}

#[test]
fn basis_elements_have_the_requested_degree() {
    let g = WeightedGrading::new(vec![2, 3, 5]);
    for d in 0..20i64 {
        let basis = g.monomial_basis(d).unwrap();
        for e in &basis {
            assert_eq!(g.degree_of(e), d);
        }
        let mut sorted = basis.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), basis.len());
    }
}
