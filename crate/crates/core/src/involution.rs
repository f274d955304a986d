//! Involutions on the quotient algebra: the A^1 involution on the
//! left-H-invariant subalgebra, the left<->right involution-type maps, the
//! P(G/H) membership analysis, and the kernel-stability probe that detects
//! normality.

use std::sync::Arc;

use num::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::left_translate;
use crate::coset::Side;
use crate::error::{Error, Result};
use crate::group::{double_cosets, is_normal};
use crate::measure::QuotientMeasure;
use crate::random::random_scalar;
use crate::scalar::{scalar_int, Scalar};
use crate::transfer::{kernel_basis, left_translate_g, lift, t_h, t_h_r, GFunction, QuotientFunction};

/// f*(x) = conj(f(x^-1)); the modular factor is identically 1 on a finite
/// group, so it drops out.
pub fn group_involution(f: &GFunction) -> GFunction {
    let g = f.group();
    let values = g.elements().map(|x| f.value(g.inv(x)).conj()).collect();
    GFunction::new(g, values).expect("length preserved")
}

/// The left-H-invariant subspace A^p(G/H), spanned by double-coset
/// indicators.
#[derive(Debug, Clone)]
pub struct ApSpace {
    pub p: f64,
    pub basis: Vec<QuotientFunction>,
}

pub fn ap_space(measure: &Arc<QuotientMeasure>, p: f64) -> Result<ApSpace> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::BadExponent(p));
    }
    if measure.space().side() != Side::Left {
        return Err(Error::WrongSide { expected: "left" });
    }
    if !measure.g_invariant() {
        return Err(Error::NotGInvariant);
    }
    let space = measure.space();
    let classes = double_cosets(space.group(), space.subgroup());
    let mut basis = Vec::with_capacity(classes.len());
    for class in &classes {
        let mut phi = QuotientFunction::zero(measure);
        for &x in class {
            phi.values_mut()[space.coset_of(x)] = scalar_int(1);
        }
        basis.push(phi);
    }
    Ok(ApSpace { p, basis })
}

/// True iff L_h phi = phi for all h in H.
pub fn is_in_ap(phi: &QuotientFunction) -> Result<bool> {
    for &h in phi.space().subgroup().members() {
        if left_translate(h, phi)? != *phi {
            return Ok(false);
        }
    }
    Ok(true)
}

/// phi* = T_H([phi_pi]*), defined on A^1 only.
pub fn a1_involution(phi: &QuotientFunction) -> Result<QuotientFunction> {
    if !phi.measure().g_invariant() {
        return Err(Error::NotGInvariant);
    }
    if !is_in_ap(phi)? {
        return Err(Error::NotInA1);
    }
    t_h(&group_involution(&lift(phi)), phi.measure())
}

/// The involution-type map L^1(G/H) -> L^1(H\G): phi -> T_H^r([phi_pi]*).
/// Independent of the chosen preimage of phi (the kernel computation in
/// star_probe is the obstruction analysis for the same-side map; this
/// cross-side map is always well defined).
pub fn lr_involution(
    phi: &QuotientFunction,
    right_measure: &Arc<QuotientMeasure>,
) -> Result<QuotientFunction> {
    if phi.space().side() != Side::Left || right_measure.space().side() != Side::Right {
        return Err(Error::DomainMismatch);
    }
    if !phi.space().same_pair(right_measure.space()) {
        return Err(Error::DomainMismatch);
    }
    if !phi.measure().g_invariant() || !right_measure.g_invariant() {
        return Err(Error::NotGInvariant);
    }
    t_h_r(&group_involution(&lift(phi)), right_measure)
}

/// The reverse map L^1(H\G) -> L^1(G/H).
pub fn rl_involution(
    phi: &QuotientFunction,
    left_measure: &Arc<QuotientMeasure>,
) -> Result<QuotientFunction> {
    if phi.space().side() != Side::Right || left_measure.space().side() != Side::Left {
        return Err(Error::DomainMismatch);
    }
    if !phi.space().same_pair(left_measure.space()) {
        return Err(Error::DomainMismatch);
    }
    if !phi.measure().g_invariant() || !left_measure.g_invariant() {
        return Err(Error::NotGInvariant);
    }
    t_h(&group_involution(&lift(phi)), left_measure)
}

#[derive(Debug, Clone)]
pub struct PSetCheck {
    pub member: bool,
    /// One consistent eta on the cosets (zero where unconstrained).
    pub eta: Option<Vec<Scalar>>,
}

/// Membership in P(G/H): does some eta satisfy
/// phi(x^-1 H) = eta(xH) conj(phi(xH)) for every x in G?
pub fn p_set_check(phi: &QuotientFunction) -> PSetCheck {
    let space = phi.space();
    let group = space.group();
    let mut eta: Vec<Option<Scalar>> = vec![None; space.len()];
    for x in group.elements() {
        let c = space.coset_of(x);
        let d = space.coset_of(group.inv(x));
        let at_c = phi.value(c);
        let at_d = phi.value(d);
        if at_c.is_zero() {
            if !at_d.is_zero() {
                // phi(x^-1 H) != 0 forces eta(xH) conj(0) != 0: impossible.
                return PSetCheck {
                    member: false,
                    eta: None,
                };
            }
            continue;
        }
        let required = at_d / &at_c.conj();
        match &eta[c] {
            None => eta[c] = Some(required),
            Some(have) if *have == required => {}
            Some(_) => {
                return PSetCheck {
                    member: false,
                    eta: None,
                }
            }
        }
    }
    let eta = eta
        .into_iter()
        .map(|e| e.unwrap_or_else(Scalar::zero))
        .collect();
    PSetCheck {
        member: true,
        eta: Some(eta),
    }
}

#[derive(Debug, Clone)]
pub struct StarProbe {
    pub normal: bool,
    pub kernel_star_stable: bool,
    /// A kernel element f with T_H(f) = 0 but T_H(f*) != 0, when one exists.
    pub witness: Option<GFunction>,
}

/// Probes whether the standard involution descends through T_H: the kernel
/// J^1(G,H) must be stable under f -> f*. Kernel stability is the finite
/// obstruction, and it must agree with normality of H; the agreement is
/// verified here, as is the translation-defect lemma
/// (f in the lift range with f - f* in ker T_H implies L_h f - f in ker T_H).
pub fn star_probe(measure: &Arc<QuotientMeasure>) -> Result<StarProbe> {
    if measure.space().side() != Side::Left {
        return Err(Error::WrongSide { expected: "left" });
    }
    if !measure.g_invariant() {
        return Err(Error::NotGInvariant);
    }
    let space = measure.space();
    let normal = is_normal(space.group(), space.subgroup());
    let kernel = kernel_basis(measure);
    let in_kernel = |f: &GFunction| -> Result<bool> { Ok(t_h(f, measure)?.is_zero()) };

    let mut witness = None;
    for f in &kernel {
        if !in_kernel(&group_involution(f))? {
            witness = Some(f.clone());
            break;
        }
    }
    if witness.is_none() {
        // Conjugate-linearity makes the basis scan complete; pair sums are a
        // deterministic second pass all the same.
        'pairs: for (i, f) in kernel.iter().enumerate() {
            for g in kernel.iter().skip(i + 1) {
                let s = f.add(g)?;
                if !in_kernel(&group_involution(&s))? {
                    witness = Some(s);
                    break 'pairs;
                }
            }
        }
    }
    let kernel_star_stable = witness.is_none();
    if kernel_star_stable != normal {
        return Err(Error::InvariantViolation(format!(
            "kernel star-stability ({kernel_star_stable}) disagrees with normality ({normal})"
        )));
    }

    // Translation-defect lemma on seeded functions from the lift range with
    // f - f* in ker T_H.
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let a1 = ap_space(measure, 1.0)?;
    for _ in 0..5 {
        let mut phi = QuotientFunction::zero(measure);
        for b in &a1.basis {
            phi = phi.add(&b.scale(&random_scalar(&mut rng)))?;
        }
        let phi = phi.add(&star_reflect(&phi))?;
        let f = lift(&phi);
        let fstar = group_involution(&f);
        if !in_kernel(&f.add(&fstar.scale(&-scalar_int(1)))?)? {
            return Err(Error::InvariantViolation(
                "constructed f does not satisfy f - f* in ker T_H".into(),
            ));
        }
        for &h in space.subgroup().members() {
            let defect = left_translate_g(h, &f).add(&f.scale(&-scalar_int(1)))?;
            if !in_kernel(&defect)? {
                return Err(Error::InvariantViolation(format!(
                    "translation defect L_h f - f escapes ker T_H at h = {h}"
                )));
            }
        }
    }

    Ok(StarProbe {
        normal,
        kernel_star_stable,
        witness,
    })
}

/// S(phi)(xH) = conj(phi(x^-1 H)); well defined for phi in A^1, and
/// phi + S(phi) is a fixed point of S.
fn star_reflect(phi: &QuotientFunction) -> QuotientFunction {
    let space = phi.space();
    let group = space.group();
    let values = (0..space.len())
        .map(|c| phi.value(space.coset_of(group.inv(space.rep(c)))).conj())
        .collect();
    QuotientFunction::new(phi.measure(), values).expect("length preserved")
}
