//! Randomized structural properties over cyclic quotients with arbitrary
//! rational data, driven by proptest.

use std::sync::Arc;

use proptest::prelude::*;

use homspace::algebra::quotient_convolve;
use homspace::coset::{build_cosets, Side};
use homspace::group::{build_group, GroupSpec, Subgroup};
use homspace::involution::{a1_involution, lr_involution, rl_involution};
use homspace::measure::{counting_measure, QuotientMeasure};
use homspace::scalar::{rat, Scalar};
use homspace::transfer::{lift, t_h, weil_check, GFunction, QuotientFunction};

/// A cyclic group of order n with the subgroup generated by d, d | n.
fn cyclic_pair(n: usize, d: usize) -> (Arc<QuotientMeasure>, Arc<QuotientMeasure>) {
    let g = build_group(&GroupSpec::Cyclic(n)).unwrap();
    let members: Vec<usize> = (0..n / d).map(|k| k * d).collect();
    let h = Subgroup::new(&g, &members).unwrap();
    let left = Arc::new(counting_measure(&Arc::new(build_cosets(&g, &h, Side::Left))));
    let right = Arc::new(counting_measure(&Arc::new(build_cosets(&g, &h, Side::Right))));
    (left, right)
}

fn pair_strategy() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=10).prop_flat_map(|n| {
        let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
        (Just(n), proptest::sample::select(divisors))
    })
}

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    ((-20i64..=20, 1i64..=6), (-20i64..=20, 1i64..=6))
        .prop_map(|((a, b), (c, d))| Scalar::new(rat(a, b), rat(c, d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fibration_identity_holds_exactly(
        (n, d) in pair_strategy(),
        raw in proptest::collection::vec(scalar_strategy(), 10),
    ) {
        let (left, _) = cyclic_pair(n, d);
        let g = left.group().clone();
        let values: Vec<Scalar> = (0..n).map(|i| raw[i % raw.len()].clone()).collect();
        let f = GFunction::new(&g, values).unwrap();
        prop_assert!(weil_check(&f, &left).unwrap().equal);
    }

    #[test]
    fn projection_inverts_section(
        (n, d) in pair_strategy(),
        raw in proptest::collection::vec(scalar_strategy(), 10),
    ) {
        let (left, _) = cyclic_pair(n, d);
        let len = left.space().len();
        let values: Vec<Scalar> = (0..len).map(|i| raw[i % raw.len()].clone()).collect();
        let phi = QuotientFunction::new(&left, values).unwrap();
        prop_assert_eq!(t_h(&lift(&phi), &left).unwrap(), phi);
    }

    #[test]
    fn convolution_commutes_on_cyclic_quotients(
        (n, d) in pair_strategy(),
        raw in proptest::collection::vec(scalar_strategy(), 20),
    ) {
        // the quotient of an abelian group is abelian
        let (left, _) = cyclic_pair(n, d);
        let len = left.space().len();
        let a = QuotientFunction::new(
            &left,
            (0..len).map(|i| raw[i % raw.len()].clone()).collect(),
        )
        .unwrap();
        let b = QuotientFunction::new(
            &left,
            (0..len).map(|i| raw[(i + 7) % raw.len()].clone()).collect(),
        )
        .unwrap();
        prop_assert_eq!(
            quotient_convolve(&a, &b).unwrap(),
            quotient_convolve(&b, &a).unwrap()
        );
    }

    #[test]
    fn involutions_are_order_two(
        (n, d) in pair_strategy(),
        raw in proptest::collection::vec(scalar_strategy(), 10),
    ) {
        let (left, right) = cyclic_pair(n, d);
        let len = left.space().len();
        let phi = QuotientFunction::new(
            &left,
            (0..len).map(|i| raw[i % raw.len()].clone()).collect(),
        )
        .unwrap();
        // cyclic quotients are groups, so the whole space is invariant
        prop_assert_eq!(a1_involution(&a1_involution(&phi).unwrap()).unwrap(), phi.clone());
        let star = lr_involution(&phi, &right).unwrap();
        prop_assert_eq!(rl_involution(&star, &left).unwrap(), phi);
    }
}
