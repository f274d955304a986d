//! Rho-functions and the quotient measures they induce.
//!
//! Haar convention: counting measure on G (weight 1 per element) and
//! normalized Haar on H (weight 1/|H| per element). The induced weight of
//! a coset xH is |H| * rho(x), which makes the Weil formula exact.

use std::sync::Arc;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::coset::CosetSpace;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::scalar::{format_rat, parse_rat, rat_int, Rat};

#[derive(Debug, Clone, PartialEq)]
pub struct RhoFunction {
    values: Vec<Rat>,
}

impl RhoFunction {
    pub fn new(group: &FiniteGroup, values: Vec<Rat>) -> Result<RhoFunction> {
        if values.len() != group.order() {
            return Err(Error::LengthMismatch {
                got: values.len(),
                expected: group.order(),
            });
        }
        if let Some(at) = values.iter().position(|v| *v <= Rat::zero()) {
            return Err(Error::RhoNotPositive { at });
        }
        Ok(RhoFunction { values })
    }

    pub fn constant(group: &FiniteGroup, c: Rat) -> Result<RhoFunction> {
        RhoFunction::new(group, vec![c; group.order()])
    }

    pub fn one(group: &FiniteGroup) -> RhoFunction {
        RhoFunction {
            values: vec![rat_int(1); group.order()],
        }
    }

    pub fn value(&self, x: usize) -> &Rat {
        &self.values[x]
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn is_constant(&self) -> bool {
        self.values.iter().all(|v| *v == self.values[0])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RhoCheck {
    pub valid: bool,
    pub relatively_invariant: bool,
}

/// Checks the rho identity rho(xh) = rho(x) (finite/compact-H form) and the
/// positive-character identity rho(xy) = rho(x)rho(y)/rho(e) that marks a
/// relatively invariant quotient measure.
pub fn verify_rho(group: &FiniteGroup, subgroup: &Subgroup, rho: &RhoFunction) -> RhoCheck {
    let mut valid = true;
    'outer: for x in group.elements() {
        for &h in subgroup.members() {
            if rho.value(group.mul(x, h)) != rho.value(x) {
                valid = false;
                break 'outer;
            }
        }
    }
    let e = rho.value(group.identity()).clone();
    let mut relatively_invariant = true;
    'outer2: for x in group.elements() {
        for y in group.elements() {
            if *rho.value(group.mul(x, y)) != rho.value(x) * rho.value(y) / &e {
                relatively_invariant = false;
                break 'outer2;
            }
        }
    }
    RhoCheck {
        valid,
        relatively_invariant,
    }
}

#[derive(Debug, Clone)]
pub struct QuotientMeasure {
    space: Arc<CosetSpace>,
    weights: Vec<Rat>,
    rho: RhoFunction,
    g_invariant: bool,
}

impl QuotientMeasure {
    pub fn space(&self) -> &Arc<CosetSpace> {
        &self.space
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.space.group()
    }

    pub fn weight(&self, c: usize) -> &Rat {
        &self.weights[c]
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    pub fn rho(&self) -> &RhoFunction {
        &self.rho
    }

    pub fn g_invariant(&self) -> bool {
        self.g_invariant
    }

    pub fn total_mass(&self) -> Rat {
        self.weights.iter().fold(Rat::zero(), |a, w| a + w)
    }

    pub fn same_measure(&self, other: &QuotientMeasure) -> bool {
        self.space.same_pair(&other.space)
            && self.space.side() == other.space.side()
            && self.weights == other.weights
    }
}

/// Builds the quotient measure induced by a valid, relatively invariant rho.
///
/// The non-character rho pathway is deliberately rejected here: the
/// convolution theory needs relative invariance, so the construction fails
/// loudly, naming the offending pair.
pub fn measure_from_rho(space: &Arc<CosetSpace>, rho: &RhoFunction) -> Result<QuotientMeasure> {
    let group = space.group();
    let subgroup = space.subgroup();
    for x in group.elements() {
        for &h in subgroup.members() {
            if rho.value(group.mul(x, h)) != rho.value(x) {
                return Err(Error::RhoInvalid { x, h });
            }
        }
    }
    let e = rho.value(group.identity()).clone();
    for x in group.elements() {
        for y in group.elements() {
            if *rho.value(group.mul(x, y)) != rho.value(x) * rho.value(y) / &e {
                return Err(Error::NotRelativelyInvariant { x, y });
            }
        }
    }
    // On a finite group every positive character is trivial, so a relatively
    // invariant rho is constant. Assert rather than assume.
    if !rho.is_constant() {
        return Err(Error::InvariantViolation(
            "relatively invariant rho on a finite group must be constant".into(),
        ));
    }
    let hsize = rat_int(subgroup.len() as i64);
    let weights: Vec<Rat> = space
        .reps()
        .iter()
        .map(|&r| &hsize * rho.value(r))
        .collect();
    // G-invariance holds iff the translation factors are all 1, i.e. rho is
    // constant; for a *normalized* G-invariant measure one usually also wants
    // rho = 1, but any constant rho gives mu_x = mu.
    Ok(QuotientMeasure {
        space: Arc::clone(space),
        weights,
        rho: rho.clone(),
        g_invariant: rho.is_constant(),
    })
}

/// Canonical G-invariant measure (rho = 1).
pub fn counting_measure(space: &Arc<CosetSpace>) -> QuotientMeasure {
    measure_from_rho(space, &RhoFunction::one(space.group()))
        .expect("rho = 1 is always valid and relatively invariant")
}

/// d(mu_x)/d(mu) at the coset c: rho(x * rep(c)) / rho(rep(c)).
pub fn translation_factor(measure: &QuotientMeasure, x: usize, c: usize) -> Result<Rat> {
    let group = measure.group();
    if x >= group.order() {
        return Err(Error::ElementOutOfRange {
            id: x,
            order: group.order(),
        });
    }
    let r = measure.space.rep(c);
    Ok(measure.rho.value(group.mul(x, r)) / measure.rho.value(r))
}

/// JSON wire format for rho: {"values": ["p/q", ...]}.
#[derive(Debug, Serialize, Deserialize)]
pub struct RhoJson {
    pub values: Vec<String>,
}

impl RhoFunction {
    pub fn to_json(&self) -> RhoJson {
        RhoJson {
            values: self.values.iter().map(format_rat).collect(),
        }
    }

    pub fn from_json(group: &FiniteGroup, j: &RhoJson) -> Result<RhoFunction> {
        let values = j
            .values
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>>>()?;
        RhoFunction::new(group, values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::{build_cosets, Side};
    use crate::group::{build_group, GroupSpec};
    use crate::scalar::rat;
    use num::One;

    fn z4_space() -> Arc<CosetSpace> {
        let g = build_group(&GroupSpec::Cyclic(4)).unwrap();
        let h = Subgroup::new(&g, &[0, 2]).unwrap();
        Arc::new(build_cosets(&g, &h, Side::Left))
    }

    #[test]
    fn constant_rho_is_valid_and_invariant() {
        let s = z4_space();
        for c in [rat_int(1), rat_int(3), rat(5, 7)] {
            let rho = RhoFunction::constant(s.group(), c).unwrap();
            let chk = verify_rho(s.group(), s.subgroup(), &rho);
            assert!(chk.valid && chk.relatively_invariant);
        }
    }

    #[test]
    fn valid_but_not_relatively_invariant() {
        // rho on Z4 constant on cosets of {0,2} but not a character:
        // rho(1+1) = 1 while rho(1)rho(1)/rho(0) = 4.
        let s = z4_space();
        let rho = RhoFunction::new(
            s.group(),
            vec![rat_int(1), rat_int(2), rat_int(1), rat_int(2)],
        )
        .unwrap();
        let chk = verify_rho(s.group(), s.subgroup(), &rho);
        assert!(chk.valid);
        assert!(!chk.relatively_invariant);
        // measure_from_rho must refuse it
        assert!(matches!(
            measure_from_rho(&s, &rho),
            Err(Error::NotRelativelyInvariant { .. })
        ));
    }

    #[test]
    fn non_positive_rho_rejected() {
        let s = z4_space();
        assert!(matches!(
            RhoFunction::new(s.group(), vec![rat_int(1), rat_int(0), rat_int(1), rat_int(1)]),
            Err(Error::RhoNotPositive { at: 1 })
        ));
    }

    #[test]
    fn rho_not_constant_on_cosets_rejected() {
        let s = z4_space();
        let rho = RhoFunction::new(
            s.group(),
            vec![rat_int(1), rat_int(1), rat_int(2), rat_int(1)],
        )
        .unwrap();
        assert!(matches!(
            measure_from_rho(&s, &rho),
            Err(Error::RhoInvalid { .. })
        ));
    }

    #[test]
    fn weights_and_mass() {
        let s = z4_space();
        let m = counting_measure(&s);
        assert!(m.g_invariant());
        assert_eq!(m.weights(), &[rat_int(2), rat_int(2)]);
        assert_eq!(m.total_mass(), rat_int(4)); // matches counting Haar on G

        let rho3 = RhoFunction::constant(s.group(), rat_int(3)).unwrap();
        let m3 = measure_from_rho(&s, &rho3).unwrap();
        assert_eq!(m3.weights(), &[rat_int(6), rat_int(6)]);

        // H = G: one coset of weight |G|
        let g = s.group().clone();
        let h = Subgroup::new(&g, &[0, 1, 2, 3]).unwrap();
        let full = Arc::new(build_cosets(&g, &h, Side::Left));
        let m = counting_measure(&full);
        assert_eq!(m.weights(), &[rat_int(4)]);
    }

    #[test]
    fn translation_factors_trivial_for_constant_rho() {
        let s = z4_space();
        for c in [rat_int(1), rat(2, 3)] {
            let rho = RhoFunction::constant(s.group(), c).unwrap();
            let m = measure_from_rho(&s, &rho).unwrap();
            for x in s.group().elements() {
                for k in 0..s.len() {
                    assert!(translation_factor(&m, x, k).unwrap().is_one());
                }
            }
        }
    }

    #[test]
    fn mass_consistency_sum_over_group() {
        // sum_c weight(c) = sum_x rho(x) when rho is constant on cosets
        let s = z4_space();
        let m = counting_measure(&s);
        let lhs = m.total_mass();
        let rhs = s
            .group()
            .elements()
            .fold(Rat::zero(), |a, x| a + m.rho().value(x));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rho_json_roundtrip() {
        let s = z4_space();
        let rho = RhoFunction::constant(s.group(), rat(5, 3)).unwrap();
        let j = rho.to_json();
        assert_eq!(j.values, vec!["5/3"; 4]);
        let back = RhoFunction::from_json(s.group(), &j).unwrap();
        assert_eq!(rho, back);
    }
}
