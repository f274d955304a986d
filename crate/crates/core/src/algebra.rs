//! Convolution on G, the quotient convolution phi * psi = T_H(phi_pi * psi_pi),
//! translation covariance, the L^p module action, and the exact right
//! identity of the finite backend.

use std::sync::Arc;

use num::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coset::Side;
use crate::error::{Error, Result};
use crate::measure::QuotientMeasure;
use crate::random::random_qfunction;
use crate::scalar::Scalar;
use crate::transfer::{lift, t_h, t_h_r, GFunction, QuotientFunction};

/// (f * g)(x) = sum_y f(y) g(y^-1 x), the counting-Haar convolution.
pub fn group_convolve(f: &GFunction, g: &GFunction) -> Result<GFunction> {
    if !f.same_group(g) {
        return Err(Error::DomainMismatch);
    }
    let grp = f.group();
    let n = grp.order();
    let mut values = vec![Scalar::zero(); n];
    for y in 0..n {
        let fy = f.value(y);
        if fy.is_zero() {
            continue;
        }
        let yi = grp.inv(y);
        for (x, slot) in values.iter_mut().enumerate() {
            let gv = g.value(grp.mul(yi, x));
            if !gv.is_zero() {
                *slot = slot.clone() + fy * gv;
            }
        }
    }
    GFunction::new(grp, values)
}

fn project(f: &GFunction, measure: &Arc<QuotientMeasure>) -> Result<QuotientFunction> {
    match measure.space().side() {
        Side::Left => t_h(f, measure),
        Side::Right => t_h_r(f, measure),
    }
}

/// The quotient convolution T_H(phi_pi * psi_pi), on either coset side.
pub fn quotient_convolve(
    phi: &QuotientFunction,
    psi: &QuotientFunction,
) -> Result<QuotientFunction> {
    if !phi.same_space(psi) {
        return Err(Error::DomainMismatch);
    }
    let conv = group_convolve(&lift(phi), &lift(psi))?;
    project(&conv, phi.measure())
}

/// T_H(phi_pi * g) for an arbitrary preimage g of psi. Equal to
/// quotient_convolve(phi, t_h(g)) for every such g; this is the
/// well-definedness witness of the quotient convolution.
pub fn convolve_via_any_lift(
    phi: &QuotientFunction,
    g: &GFunction,
) -> Result<QuotientFunction> {
    let conv = group_convolve(&lift(phi), g)?;
    project(&conv, phi.measure())
}

/// (L_x phi)(yH) = phi(x^-1 yH) on a left coset space.
pub fn left_translate(x: usize, phi: &QuotientFunction) -> Result<QuotientFunction> {
    let space = phi.space();
    if space.side() != Side::Left {
        return Err(Error::WrongSide { expected: "left" });
    }
    let xi = space.group().inv(x);
    let values = (0..space.len())
        .map(|c| Ok(phi.value(crate::coset::act(space, xi, c)?).clone()))
        .collect::<Result<Vec<_>>>()?;
    QuotientFunction::new(phi.measure(), values)
}

/// (R_x phi)(Hy) = phi(Hyx) on a right coset space.
pub fn right_translate(x: usize, phi: &QuotientFunction) -> Result<QuotientFunction> {
    let space = phi.space();
    if space.side() != Side::Right {
        return Err(Error::WrongSide { expected: "right" });
    }
    let values = (0..space.len())
        .map(|c| Ok(phi.value(crate::coset::act(space, x, c)?).clone()))
        .collect::<Result<Vec<_>>>()?;
    QuotientFunction::new(phi.measure(), values)
}

/// Checks L_x(phi * psi) = (L_x phi) * psi exactly. Needs a G-invariant
/// measure; refuses otherwise, since the identity's hypothesis fails.
pub fn covariance_check(
    x: usize,
    phi: &QuotientFunction,
    psi: &QuotientFunction,
) -> Result<bool> {
    if !phi.measure().g_invariant() {
        return Err(Error::NotGInvariant);
    }
    let lhs = left_translate(x, &quotient_convolve(phi, psi)?)?;
    let rhs = quotient_convolve(&left_translate(x, phi)?, psi)?;
    Ok(lhs == rhs)
}

/// The L^1-module action on L^p: same formula as the quotient convolution,
/// with the bound |phi * psi|_p <= |phi|_1 |psi|_p verified on the way out.
pub fn module_action(
    phi: &QuotientFunction,
    psi: &QuotientFunction,
    p: f64,
) -> Result<QuotientFunction> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::BadExponent(p));
    }
    if !phi.measure().g_invariant() {
        return Err(Error::NotGInvariant);
    }
    let out = quotient_convolve(phi, psi)?;
    let lhs = out.lp_norm(p)?;
    let rhs = phi.lp_norm(1.0)? * psi.lp_norm(p)?;
    if lhs > rhs + 1e-9 * (1.0 + rhs) {
        return Err(Error::InvariantViolation(format!(
            "module bound failed: |phi*psi|_{p} = {lhs} > {rhs}"
        )));
    }
    Ok(out)
}

/// The exact right identity psi_0 = T_H(delta_e): phi * psi_0 = phi for all
/// phi. Verified on the delta basis before returning.
pub fn right_identity(measure: &Arc<QuotientMeasure>) -> Result<QuotientFunction> {
    let group = measure.group().clone();
    let delta_e = GFunction::delta(&group, group.identity());
    let psi0 = project(&delta_e, measure)?;
    for c in 0..measure.space().len() {
        let phi = QuotientFunction::delta(measure, c);
        if quotient_convolve(&phi, &psi0)? != phi {
            return Err(Error::InvariantViolation(format!(
                "T_H(delta_e) is not a right identity at basis coset {c}"
            )));
        }
    }
    Ok(psi0)
}

/// Searches for phi with psi_0 * phi != phi (a left-identity failure).
/// Scans the delta basis first, then seeded random functions. Returns None
/// when no counterexample is found (e.g. H normal).
pub fn left_identity_counterexample(
    measure: &Arc<QuotientMeasure>,
    seed: u64,
) -> Result<Option<QuotientFunction>> {
    let psi0 = right_identity(measure)?;
    for c in 0..measure.space().len() {
        let phi = QuotientFunction::delta(measure, c);
        if quotient_convolve(&psi0, &phi)? != phi {
            return Ok(Some(phi));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10 {
        let phi = random_qfunction(measure, &mut rng);
        if quotient_convolve(&psi0, &phi)? != phi {
            return Ok(Some(phi));
        }
    }
    Ok(None)
}
