//! Seeded generators for random exact test functions. Values are small
//! complex rationals so that convolution chains stay cheap.

use rand::Rng;

use crate::measure::QuotientMeasure;
use crate::scalar::{rat, Rat, Scalar};
use crate::transfer::{GFunction, QuotientFunction};
use std::sync::Arc;

pub fn random_rat<R: Rng>(rng: &mut R) -> Rat {
    rat(rng.random_range(-9..=9), rng.random_range(1..=4))
}

pub fn random_nonneg_rat<R: Rng>(rng: &mut R) -> Rat {
    rat(rng.random_range(0..=9), rng.random_range(1..=4))
}

pub fn random_scalar<R: Rng>(rng: &mut R) -> Scalar {
    Scalar::new(random_rat(rng), random_rat(rng))
}

pub fn random_gfunction<R: Rng>(
    group: &Arc<crate::group::FiniteGroup>,
    rng: &mut R,
) -> GFunction {
    let values = (0..group.order()).map(|_| random_scalar(rng)).collect();
    GFunction::new(group, values).expect("length matches")
}

pub fn random_qfunction<R: Rng>(measure: &Arc<QuotientMeasure>, rng: &mut R) -> QuotientFunction {
    let values = (0..measure.space().len())
        .map(|_| random_scalar(rng))
        .collect();
    QuotientFunction::new(measure, values).expect("length matches")
}

/// Real-valued with nonnegative entries; the exact-L1 test shape.
pub fn random_nonneg_qfunction<R: Rng>(
    measure: &Arc<QuotientMeasure>,
    rng: &mut R,
) -> QuotientFunction {
    let values = (0..measure.space().len())
        .map(|_| Scalar::new(random_nonneg_rat(rng), Rat::from_integer(0.into())))
        .collect();
    QuotientFunction::new(measure, values).expect("length matches")
}

pub fn random_real_gfunction<R: Rng>(
    group: &Arc<crate::group::FiniteGroup>,
    rng: &mut R,
) -> GFunction {
    let values = (0..group.order())
        .map(|_| Scalar::new(random_rat(rng), Rat::from_integer(0.into())))
        .collect();
    GFunction::new(group, values).expect("length matches")
}
