//! Functions on G and on G/H, the fiber-averaging operators P_H and T_H
//! (both coset sides), the canonical lift, the kernel of T_H, and the
//! exact Weil-formula check.

use std::sync::Arc;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coset::Side;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::nullspace;
use crate::measure::QuotientMeasure;
use crate::scalar::{
    abs_sq, format_scalar, is_real, parse_scalar, rat_abs, rat_int, rat_to_f64, scalar_rat,
    scalar_to_f64, Rat, Scalar,
};

#[derive(Debug, Clone)]
pub struct GFunction {
    group: Arc<FiniteGroup>,
    values: Vec<Scalar>,
}

impl GFunction {
    pub fn new(group: &Arc<FiniteGroup>, values: Vec<Scalar>) -> Result<GFunction> {
        if values.len() != group.order() {
            return Err(Error::LengthMismatch {
                got: values.len(),
                expected: group.order(),
            });
        }
        Ok(GFunction {
            group: Arc::clone(group),
            values,
        })
    }

    pub fn zero(group: &Arc<FiniteGroup>) -> GFunction {
        GFunction {
            group: Arc::clone(group),
            values: vec![Scalar::zero(); group.order()],
        }
    }

    pub fn delta(group: &Arc<FiniteGroup>, x: usize) -> GFunction {
        let mut f = GFunction::zero(group);
        f.values[x] = Scalar::one();
        f
    }

    pub fn constant(group: &Arc<FiniteGroup>, c: Scalar) -> GFunction {
        GFunction {
            group: Arc::clone(group),
            values: vec![c; group.order()],
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn value(&self, x: usize) -> &Scalar {
        &self.values[x]
    }

    pub fn values_mut(&mut self) -> &mut [Scalar] {
        &mut self.values
    }

    pub fn same_group(&self, other: &GFunction) -> bool {
        Arc::ptr_eq(&self.group, &other.group) || *self.group == *other.group
    }

    pub fn add(&self, other: &GFunction) -> Result<GFunction> {
        if !self.same_group(other) {
            return Err(Error::DomainMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        GFunction::new(&self.group, values)
    }

    pub fn scale(&self, c: &Scalar) -> GFunction {
        GFunction {
            group: Arc::clone(&self.group),
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

impl PartialEq for GFunction {
    fn eq(&self, other: &Self) -> bool {
        self.same_group(other) && self.values == other.values
    }
}

#[derive(Debug, Clone)]
pub struct QuotientFunction {
    measure: Arc<QuotientMeasure>,
    values: Vec<Scalar>,
}

impl QuotientFunction {
    pub fn new(measure: &Arc<QuotientMeasure>, values: Vec<Scalar>) -> Result<QuotientFunction> {
        if values.len() != measure.space().len() {
            return Err(Error::LengthMismatch {
                got: values.len(),
                expected: measure.space().len(),
            });
        }
        Ok(QuotientFunction {
            measure: Arc::clone(measure),
            values,
        })
    }

    pub fn zero(measure: &Arc<QuotientMeasure>) -> QuotientFunction {
        QuotientFunction {
            measure: Arc::clone(measure),
            values: vec![Scalar::zero(); measure.space().len()],
        }
    }

    pub fn delta(measure: &Arc<QuotientMeasure>, c: usize) -> QuotientFunction {
        let mut f = QuotientFunction::zero(measure);
        f.values[c] = Scalar::one();
        f
    }

    pub fn constant(measure: &Arc<QuotientMeasure>, c: Scalar) -> QuotientFunction {
        QuotientFunction {
            measure: Arc::clone(measure),
            values: vec![c; measure.space().len()],
        }
    }

    pub fn measure(&self) -> &Arc<QuotientMeasure> {
        &self.measure
    }

    pub fn space(&self) -> &Arc<crate::coset::CosetSpace> {
        self.measure.space()
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn value(&self, c: usize) -> &Scalar {
        &self.values[c]
    }

    pub fn values_mut(&mut self) -> &mut [Scalar] {
        &mut self.values
    }

    pub fn same_space(&self, other: &QuotientFunction) -> bool {
        self.measure.same_measure(&other.measure)
    }

    pub fn add(&self, other: &QuotientFunction) -> Result<QuotientFunction> {
        if !self.same_space(other) {
            return Err(Error::DomainMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        QuotientFunction::new(&self.measure, values)
    }

    pub fn scale(&self, c: &Scalar) -> QuotientFunction {
        QuotientFunction {
            measure: Arc::clone(&self.measure),
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

impl PartialEq for QuotientFunction {
    fn eq(&self, other: &Self) -> bool {
        self.same_space(other) && self.values == other.values
    }
}

// ---------------------------------------------------------------------------
// Averaging operators and lifts.
// ---------------------------------------------------------------------------

/// P_H(f)(xH) = (1/|H|) sum_h f(xh): the unweighted fiber average.
pub fn p_h(f: &GFunction, measure: &Arc<QuotientMeasure>) -> Result<QuotientFunction> {
    if measure.space().side() != Side::Left {
        return Err(Error::WrongSide { expected: "left" });
    }
    fiber_average(f, measure, false)
}

/// T_H(f)(xH) = (1/|H|) sum_h f(xh)/rho(xh). Coincides with P_H when rho = 1.
pub fn t_h(f: &GFunction, measure: &Arc<QuotientMeasure>) -> Result<QuotientFunction> {
    if measure.space().side() != Side::Left {
        return Err(Error::WrongSide { expected: "left" });
    }
    fiber_average(f, measure, true)
}

/// T_H^r(f)(Hx) = (1/|H|) sum_h f(hx)/rho(hx), on a right coset space.
pub fn t_h_r(f: &GFunction, measure: &Arc<QuotientMeasure>) -> Result<QuotientFunction> {
    if measure.space().side() != Side::Right {
        return Err(Error::WrongSide { expected: "right" });
    }
    if !measure.g_invariant() {
        return Err(Error::NotGInvariant);
    }
    fiber_average(f, measure, true)
}

fn fiber_average(
    f: &GFunction,
    measure: &Arc<QuotientMeasure>,
    weight_by_rho: bool,
) -> Result<QuotientFunction> {
    let space = measure.space();
    let group = space.group();
    if !Arc::ptr_eq(f.group(), group) && *f.group().as_ref() != *group.as_ref() {
        return Err(Error::DomainMismatch);
    }
    let hsize = rat_int(space.subgroup().len() as i64);
    let mut values = vec![Scalar::zero(); space.len()];
    // Both sides: the fiber over a coset is exactly its member set.
    for c in 0..space.len() {
        let mut acc = Scalar::zero();
        for y in space.members(c) {
            if weight_by_rho {
                acc += f.value(y) / scalar_rat(measure.rho().value(y).clone());
            } else {
                acc += f.value(y);
            }
        }
        values[c] = acc / scalar_rat(hsize.clone());
    }
    QuotientFunction::new(measure, values)
}

/// The canonical lift: phi_pi(x) = rho(x) * phi(pi(x)). Satisfies
/// t_h(lift(phi)) = phi exactly, and is the unique H-invariant preimage.
pub fn lift(phi: &QuotientFunction) -> GFunction {
    let measure = phi.measure();
    let space = measure.space();
    let group = space.group();
    let values = group
        .elements()
        .map(|x| phi.value(space.coset_of(x)) * scalar_rat(measure.rho().value(x).clone()))
        .collect();
    GFunction {
        group: Arc::clone(group),
        values,
    }
}

/// True iff R_h f = f for every h in H (left spaces) or L_h f = f (right
/// spaces): the characterization of the range of the lift.
pub fn is_invariant_lift(f: &GFunction, measure: &QuotientMeasure) -> bool {
    let space = measure.space();
    let group = space.group();
    let rho = measure.rho();
    for x in group.elements() {
        for &h in space.subgroup().members() {
            let y = match space.side() {
                Side::Left => group.mul(x, h),
                Side::Right => group.mul(h, x),
            };
            // compare f/rho, which must be constant on fibers
            if f.value(y) * scalar_rat(rho.value(x).clone())
                != f.value(x) * scalar_rat(rho.value(y).clone())
            {
                return false;
            }
        }
    }
    true
}

/// Left translation on G: (L_x f)(y) = f(x^-1 y).
pub fn left_translate_g(x: usize, f: &GFunction) -> GFunction {
    let g = f.group();
    let xi = g.inv(x);
    let values = g.elements().map(|y| f.value(g.mul(xi, y)).clone()).collect();
    GFunction {
        group: Arc::clone(g),
        values,
    }
}

/// Right translation on G: (R_h f)(y) = f(yh).
pub fn right_translate_g(h: usize, f: &GFunction) -> GFunction {
    let g = f.group();
    let values = g.elements().map(|y| f.value(g.mul(y, h)).clone()).collect();
    GFunction {
        group: Arc::clone(g),
        values,
    }
}

/// Rational basis of ker T_H = {f : T_H(f) = 0}, computed by Gaussian
/// elimination on the T_H matrix. Dimension is |G| - |G/H|.
pub fn kernel_basis(measure: &Arc<QuotientMeasure>) -> Vec<GFunction> {
    let space = measure.space();
    let group = space.group();
    let n = group.order();
    let hsize = rat_int(space.subgroup().len() as i64);
    let mut matrix = vec![vec![Rat::zero(); n]; space.len()];
    for y in 0..n {
        let c = space.coset_of(y);
        matrix[c][y] = Rat::one() / (&hsize * measure.rho().value(y));
    }
    nullspace(&matrix, n)
        .into_iter()
        .map(|v| GFunction {
            group: Arc::clone(group),
            values: v.into_iter().map(scalar_rat).collect(),
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct WeilCheck {
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub equal: bool,
}

/// The Weil (Mackey-Bruhat) identity, checked exactly:
/// sum_c T_H(f)(c) w(c) = sum_x f(x).
pub fn weil_check(f: &GFunction, measure: &Arc<QuotientMeasure>) -> Result<WeilCheck> {
    let th = match measure.space().side() {
        Side::Left => t_h(f, measure)?,
        Side::Right => t_h_r(f, measure)?,
    };
    let lhs = th
        .values()
        .iter()
        .zip(measure.weights())
        .fold(Scalar::zero(), |a, (v, w)| a + v * scalar_rat(w.clone()));
    let rhs = f.values().iter().fold(Scalar::zero(), |a, v| a + v);
    let equal = lhs == rhs;
    Ok(WeilCheck { lhs, rhs, equal })
}

// ---------------------------------------------------------------------------
// Norms.
// ---------------------------------------------------------------------------

fn lp_from_parts(values: &[Scalar], weights: Option<&[Rat]>, p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::BadExponent(p));
    }
    let w_at = |i: usize| weights.map_or(1.0, |w| rat_to_f64(&w[i]));
    if p.is_infinite() {
        return Ok(values
            .iter()
            .map(|v| scalar_to_f64(v).norm())
            .fold(0.0, f64::max));
    }
    let s: f64 = values
        .iter()
        .enumerate()
        .map(|(i, v)| w_at(i) * scalar_to_f64(v).norm().powf(p))
        .sum();
    Ok(s.powf(1.0 / p))
}

fn lp_pow_parts(values: &[Scalar], weights: Option<&[Rat]>, p_even: u32) -> Rat {
    assert!(p_even >= 2 && p_even.is_multiple_of(2), "exact powers need even p");
    let half = p_even / 2;
    values
        .iter()
        .enumerate()
        .fold(Rat::zero(), |acc, (i, v)| {
            let mut t = abs_sq(v);
            for _ in 1..half {
                t = &t * &abs_sq(v);
            }
            match weights {
                Some(w) => acc + &w[i] * &t,
                None => acc + t,
            }
        })
}

fn l1_exact_parts(values: &[Scalar], weights: Option<&[Rat]>) -> Option<Rat> {
    if !values.iter().all(is_real) {
        return None;
    }
    Some(values.iter().enumerate().fold(Rat::zero(), |acc, (i, v)| {
        let a = rat_abs(&v.re);
        match weights {
            Some(w) => acc + &w[i] * &a,
            None => acc + a,
        }
    }))
}

impl GFunction {
    /// Weighted p-norm under counting Haar; accepts p = infinity.
    pub fn lp_norm(&self, p: f64) -> Result<f64> {
        lp_from_parts(&self.values, None, p)
    }

    /// Exact sum_x |f(x)|^p for even integer p.
    pub fn lp_pow_sum(&self, p_even: u32) -> Rat {
        lp_pow_parts(&self.values, None, p_even)
    }

    /// Exact L1 norm; defined only for real-valued functions.
    pub fn l1_exact(&self) -> Option<Rat> {
        l1_exact_parts(&self.values, None)
    }
}

impl QuotientFunction {
    /// Weighted p-norm with the measure weights; accepts p = infinity.
    pub fn lp_norm(&self, p: f64) -> Result<f64> {
        lp_from_parts(&self.values, Some(self.measure.weights()), p)
    }

    /// Exact sum_c w(c) |phi(c)|^p for even integer p.
    pub fn lp_pow_sum(&self, p_even: u32) -> Rat {
        lp_pow_parts(&self.values, Some(self.measure.weights()), p_even)
    }

    /// Exact weighted L1 norm; defined only for real-valued functions.
    pub fn l1_exact(&self) -> Option<Rat> {
        l1_exact_parts(&self.values, Some(self.measure.weights()))
    }
}

// ---------------------------------------------------------------------------
// JSON wire format.
// ---------------------------------------------------------------------------

/// {"domain": "group"|"quotient", "values": [["p/q","r/s"], ...]}
#[derive(Debug, Serialize, Deserialize)]
pub struct FunctionJson {
    pub domain: String,
    pub values: Vec<(String, String)>,
}

pub fn values_to_json(domain: &str, values: &[Scalar]) -> FunctionJson {
    FunctionJson {
        domain: domain.to_string(),
        values: values.iter().map(format_scalar).collect(),
    }
}

pub fn values_from_json(j: &FunctionJson) -> Result<Vec<Scalar>> {
    j.values
        .iter()
        .map(|(re, im)| parse_scalar(re, im))
        .collect()
}

impl GFunction {
    pub fn to_json(&self) -> FunctionJson {
        values_to_json("group", &self.values)
    }

    pub fn from_json(group: &Arc<FiniteGroup>, j: &FunctionJson) -> Result<GFunction> {
        if j.domain != "group" {
            return Err(Error::InvalidGroupSpec(format!(
                "expected domain \"group\", got {:?}",
                j.domain
            )));
        }
        GFunction::new(group, values_from_json(j)?)
    }
}

impl QuotientFunction {
    pub fn to_json(&self) -> FunctionJson {
        values_to_json("quotient", &self.values)
    }

    pub fn from_json(measure: &Arc<QuotientMeasure>, j: &FunctionJson) -> Result<QuotientFunction> {
        if j.domain != "quotient" {
            return Err(Error::InvalidGroupSpec(format!(
                "expected domain \"quotient\", got {:?}",
                j.domain
            )));
        }
        QuotientFunction::new(measure, values_from_json(j)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::{build_cosets, Side};
    use crate::group::{build_group, GroupSpec, Subgroup};
    use crate::measure::{counting_measure, measure_from_rho, RhoFunction};
    use crate::random::{random_gfunction, random_qfunction};
    use crate::scalar::{rat, rat_int, scalar_int};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn z4_measure() -> Arc<QuotientMeasure> {
        let g = build_group(&GroupSpec::Cyclic(4)).unwrap();
        let h = Subgroup::new(&g, &[0, 2]).unwrap();
        Arc::new(counting_measure(&Arc::new(build_cosets(&g, &h, Side::Left))))
    }

    fn s3_measure(side: Side) -> Arc<QuotientMeasure> {
        let g = build_group(&GroupSpec::Symmetric(3)).unwrap();
        let t = g.element_by_name("(12)").unwrap();
        let h = Subgroup::new(&g, &[0, t]).unwrap();
        Arc::new(counting_measure(&Arc::new(build_cosets(&g, &h, side))))
    }

    #[test]
    fn p_h_examples() {
        let m = z4_measure();
        let g = m.group().clone();
        // delta_e averages to 1/2 on the coset of 0
        let f = GFunction::delta(&g, 0);
        let phi = p_h(&f, &m).unwrap();
        assert_eq!(phi.value(0), &scalar_rat(rat(1, 2)));
        assert!(phi.value(1).is_zero());
        // constants stay constant
        let f = GFunction::constant(&g, scalar_int(1));
        assert!(p_h(&f, &m).unwrap().values().iter().all(|v| *v == scalar_int(1)));
        // indicator of H projects to the indicator of coset 0
        let mut f = GFunction::zero(&g);
        for &h in m.space().subgroup().members() {
            f.values_mut()[h] = scalar_int(1);
        }
        let phi = p_h(&f, &m).unwrap();
        assert_eq!(phi.value(0), &scalar_int(1));
        assert!(phi.value(1).is_zero());
    }

    #[test]
    fn t_h_equals_p_h_for_unit_rho() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for m in [z4_measure(), s3_measure(Side::Left)] {
            for _ in 0..10 {
                let f = random_gfunction(m.group(), &mut rng);
                assert_eq!(t_h(&f, &m).unwrap(), p_h(&f, &m).unwrap());
            }
        }
    }

    #[test]
    fn t_h_examples() {
        let m = s3_measure(Side::Left);
        let f = GFunction::delta(m.group(), 0);
        let phi = t_h(&f, &m).unwrap();
        assert_eq!(phi.value(0), &scalar_rat(rat(1, 2)));
        assert!(phi.values()[1..].iter().all(|v| v.is_zero()));

        // rho = 2, f = 2: T_H(f) = 1
        let g = m.group().clone();
        let space = m.space().clone();
        let rho2 = RhoFunction::constant(&g, rat_int(2)).unwrap();
        let m2 = Arc::new(measure_from_rho(&space, &rho2).unwrap());
        let f = GFunction::constant(&g, scalar_int(2));
        assert!(t_h(&f, &m2).unwrap().values().iter().all(|v| *v == scalar_int(1)));
    }

    #[test]
    fn t_h_r_examples() {
        let mr = s3_measure(Side::Right);
        let g = mr.group().clone();
        let f = GFunction::constant(&g, scalar_int(1));
        assert!(t_h_r(&f, &mr).unwrap().values().iter().all(|v| *v == scalar_int(1)));

        let c123 = g.element_by_name("(123)").unwrap();
        let f = GFunction::delta(&g, c123);
        let phi = t_h_r(&f, &mr).unwrap();
        let c = mr.space().coset_of(c123);
        assert_eq!(phi.value(c), &scalar_rat(rat(1, 2)));

        // abelian: right projection equals left projection under the
        // identity-of-partitions identification
        let ml = z4_measure();
        let g4 = ml.group().clone();
        let h = Subgroup::new(&g4, &[0, 2]).unwrap();
        let mr4 = Arc::new(counting_measure(&Arc::new(build_cosets(&g4, &h, Side::Right))));
        let f = GFunction::delta(&g4, 0);
        let l = t_h(&f, &ml).unwrap();
        let r = t_h_r(&f, &mr4).unwrap();
        for x in g4.elements() {
            assert_eq!(
                l.value(ml.space().coset_of(x)),
                r.value(mr4.space().coset_of(x))
            );
        }
        // wrong side is refused
        assert!(t_h_r(&f, &ml).is_err());
        assert!(t_h(&f, &mr4).is_err());
    }

    #[test]
    fn lift_examples_and_roundtrip() {
        let m = z4_measure();
        let phi = QuotientFunction::delta(&m, 0);
        let f = lift(&phi);
        let want: Vec<Scalar> = [1, 0, 1, 0].iter().map(|&k| scalar_int(k)).collect();
        assert_eq!(f.values(), &want[..]);

        // rho = 3 scales the lift
        let rho3 = RhoFunction::constant(m.group(), rat_int(3)).unwrap();
        let m3 = Arc::new(measure_from_rho(m.space(), &rho3).unwrap());
        let one = QuotientFunction::constant(&m3, scalar_int(1));
        assert!(lift(&one).values().iter().all(|v| *v == scalar_int(3)));

        // t_h . lift = identity, exactly, for random functions
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for m in [z4_measure(), s3_measure(Side::Left), m3] {
            for _ in 0..10 {
                let phi = random_qfunction(&m, &mut rng);
                assert_eq!(t_h(&lift(&phi), &m).unwrap(), phi);
            }
        }
    }

    #[test]
    fn lift_range_characterization() {
        let m = s3_measure(Side::Left);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let phi = random_qfunction(&m, &mut rng);
        assert!(is_invariant_lift(&lift(&phi), &m));
        // delta_e is not right-H-invariant for |H| > 1
        assert!(!is_invariant_lift(&GFunction::delta(m.group(), 0), &m));
    }

    #[test]
    fn kernel_dimensions() {
        let m = z4_measure();
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2); // 4 - 2

        let ms3 = s3_measure(Side::Left);
        let k = kernel_basis(&ms3);
        assert_eq!(k.len(), 3); // 6 - 3
        for f in &k {
            assert!(t_h(f, &ms3).unwrap().is_zero());
        }

        // trivial H: T_H injective
        let g = m.group().clone();
        let h = Subgroup::new(&g, &[0]).unwrap();
        let me = Arc::new(counting_measure(&Arc::new(build_cosets(&g, &h, Side::Left))));
        assert!(kernel_basis(&me).is_empty());
    }

    #[test]
    fn weil_examples() {
        let m = z4_measure();
        let f = GFunction::delta(m.group(), 0);
        let w = weil_check(&f, &m).unwrap();
        assert!(w.equal);
        assert_eq!(w.lhs, scalar_int(1));

        let f = GFunction::constant(m.group(), scalar_int(1));
        let w = weil_check(&f, &m).unwrap();
        assert!(w.equal);
        assert_eq!(w.rhs, scalar_int(4));

        let ms3 = s3_measure(Side::Left);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..25 {
            let f = random_gfunction(ms3.group(), &mut rng);
            assert!(weil_check(&f, &ms3).unwrap().equal);
        }
    }

    #[test]
    fn norms() {
        let m = z4_measure();
        let phi = QuotientFunction::delta(&m, 0);
        assert_eq!(phi.l1_exact().unwrap(), rat_int(2)); // weight 2
        let f = lift(&phi);
        assert_eq!(f.l1_exact().unwrap(), rat_int(2)); // matches, norm identity
        assert_eq!(phi.lp_pow_sum(2), f.lp_pow_sum(2));

        assert!(phi.lp_norm(0.5).is_err());
        assert!((phi.lp_norm(f64::INFINITY).unwrap() - 1.0).abs() < 1e-15);

        // contraction: |T_H f|_1 <= |f|_1
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..25 {
            let f = random_gfunction(m.group(), &mut rng);
            let th = t_h(&f, &m).unwrap();
            assert!(th.lp_norm(1.0).unwrap() <= f.lp_norm(1.0).unwrap() + 1e-12);
        }
    }

    #[test]
    fn function_json_roundtrip() {
        let m = z4_measure();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let phi = random_qfunction(&m, &mut rng);
        let j = phi.to_json();
        let back = QuotientFunction::from_json(&m, &j).unwrap();
        assert_eq!(phi, back);
        assert!(GFunction::from_json(m.group(), &j).is_err()); // wrong domain
    }
}
