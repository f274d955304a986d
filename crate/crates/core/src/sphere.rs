//! Quadrature backend for the rotation group acting on the sphere. The
//! group is SO(3) in ZYZ Euler angles, the subgroup is the circle of
//! rotations about the pole, and the quotient is S^2. Both Haar measures
//! are normalized to total mass 1 so the fibration identity holds with unit
//! masses on both sides.
//!
//! Grids use Gauss-Legendre nodes in cos(beta) and uniform nodes in the
//! periodic angles, 2L+2 points per angle at bandwidth L. This integrates
//! spherical harmonics through degree 2L exactly (up to rounding), which is
//! what the convolution double sums need.

use std::f64::consts::PI;
use std::sync::Arc;

use num::complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_BANDWIDTH: usize = 16;

/// Gauss-Legendre nodes and weights on (-1, 1); weights sum to 2.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        // Tricomi-style initial guess, then Newton on P_n.
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_pair(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_pair(n, x);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// (P_n(x), P_n'(x)) by the three-term recurrence.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = (n as f64) * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

#[derive(Debug)]
pub struct SphereGrid {
    l: usize,
    /// Colatitudes from Gauss-Legendre nodes in cos(theta), ascending theta.
    theta: Vec<f64>,
    /// Uniform azimuths, phi_j = 2 pi j / n.
    phi: Vec<f64>,
    /// Per-node weights, index it * nphi + ip, summing to 1.
    weights: Vec<f64>,
}

impl SphereGrid {
    pub fn new(l: usize) -> Result<Arc<SphereGrid>> {
        if !(1..=MAX_BANDWIDTH).contains(&l) {
            return Err(Error::BadBandwidth(l));
        }
        let n = 2 * l + 2;
        let (x, w) = gauss_legendre(n);
        // gauss_legendre returns ascending x = cos(theta); flip to ascending
        // theta.
        let theta: Vec<f64> = x.iter().rev().map(|&c| c.acos()).collect();
        let wtheta: Vec<f64> = w.iter().rev().copied().collect();
        let phi: Vec<f64> = (0..n).map(|j| 2.0 * PI * j as f64 / n as f64).collect();
        let mut weights = Vec::with_capacity(n * n);
        for wt in &wtheta {
            for _ in 0..n {
                weights.push(wt / 2.0 / n as f64);
            }
        }
        Ok(Arc::new(SphereGrid {
            l,
            theta,
            phi,
            weights,
        }))
    }

    pub fn bandwidth(&self) -> usize {
        self.l
    }
    pub fn ntheta(&self) -> usize {
        self.theta.len()
    }
    pub fn nphi(&self) -> usize {
        self.phi.len()
    }
    pub fn len(&self) -> usize {
        self.weights.len()
    }
    pub fn is_empty(&self) -> bool {
        false
    }
    pub fn theta(&self, it: usize) -> f64 {
        self.theta[it]
    }
    pub fn phi(&self, ip: usize) -> f64 {
        self.phi[ip]
    }
    pub fn weight(&self, node: usize) -> f64 {
        self.weights[node]
    }
    pub fn node(&self, it: usize, ip: usize) -> usize {
        it * self.nphi() + ip
    }
    pub fn angles(&self, node: usize) -> (f64, f64) {
        (self.theta[node / self.nphi()], self.phi[node % self.nphi()])
    }
    /// Unit vector of a node.
    pub fn dir(&self, node: usize) -> [f64; 3] {
        let (t, p) = self.angles(node);
        [t.sin() * p.cos(), t.sin() * p.sin(), t.cos()]
    }
}

#[derive(Debug)]
pub struct So3Grid {
    /// The quotient grid; alpha reuses its phi nodes and beta its theta
    /// nodes.
    sphere: Arc<SphereGrid>,
    /// Uniform third Euler angle.
    gamma: Vec<f64>,
    /// Per-node weights, index (ib * nalpha + ia) * ngamma + ig, summing
    /// to 1.
    weights: Vec<f64>,
}

impl So3Grid {
    pub fn new(l: usize) -> Result<Arc<So3Grid>> {
        let sphere = SphereGrid::new(l)?;
        let n = sphere.nphi();
        let gamma: Vec<f64> = (0..n).map(|j| 2.0 * PI * j as f64 / n as f64).collect();
        let mut weights = Vec::with_capacity(sphere.len() * n);
        for s in 0..sphere.len() {
            let w = sphere.weight(s) / n as f64;
            for _ in 0..n {
                weights.push(w);
            }
        }
        Ok(Arc::new(So3Grid {
            sphere,
            gamma,
            weights,
        }))
    }

    pub fn bandwidth(&self) -> usize {
        self.sphere.l
    }
    pub fn sphere(&self) -> &Arc<SphereGrid> {
        &self.sphere
    }
    pub fn ngamma(&self) -> usize {
        self.gamma.len()
    }
    pub fn len(&self) -> usize {
        self.weights.len()
    }
    pub fn is_empty(&self) -> bool {
        false
    }
    pub fn weight(&self, node: usize) -> f64 {
        self.weights[node]
    }
    pub fn node(&self, sphere_node: usize, ig: usize) -> usize {
        sphere_node * self.ngamma() + ig
    }
    /// Euler angles (alpha, beta, gamma) of a node.
    pub fn euler(&self, node: usize) -> (f64, f64, f64) {
        let s = node / self.ngamma();
        let (beta, alpha) = self.sphere.angles(s);
        (alpha, beta, self.gamma[node % self.ngamma()])
    }
}

#[derive(Debug, Clone)]
pub struct SphereFunction {
    grid: Arc<SphereGrid>,
    values: Vec<Complex64>,
}

#[derive(Debug, Clone)]
pub struct So3Function {
    grid: Arc<So3Grid>,
    values: Vec<Complex64>,
}

impl SphereFunction {
    pub fn new(grid: &Arc<SphereGrid>, values: Vec<Complex64>) -> Result<SphereFunction> {
        if values.len() != grid.len() {
            return Err(Error::LengthMismatch {
                got: values.len(),
                expected: grid.len(),
            });
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::InvariantViolation("non-finite sample".into()));
        }
        Ok(SphereFunction {
            grid: Arc::clone(grid),
            values,
        })
    }

    pub fn from_fn(grid: &Arc<SphereGrid>, f: impl Fn(f64, f64) -> Complex64) -> SphereFunction {
        let values = (0..grid.len())
            .map(|n| {
                let (t, p) = grid.angles(n);
                f(t, p)
            })
            .collect();
        SphereFunction {
            grid: Arc::clone(grid),
            values,
        }
    }

    pub fn grid(&self) -> &Arc<SphereGrid> {
        &self.grid
    }
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Grid-weighted 1-norm (the L^1 norm under the unit-mass measure).
    pub fn l1(&self) -> f64 {
        self.values
            .iter()
            .zip(&self.grid.weights)
            .map(|(v, w)| v.norm() * w)
            .sum()
    }

    /// Integral against the unit-mass measure.
    pub fn integral(&self) -> Complex64 {
        self.values
            .iter()
            .zip(&self.grid.weights)
            .map(|(v, w)| v * w)
            .sum()
    }

    pub fn max_diff(&self, other: &SphereFunction) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Max deviation from constancy along each phi-ring: zero iff the
    /// function is zonal on the grid.
    pub fn zonality_defect(&self) -> f64 {
        let nphi = self.grid.nphi();
        let mut worst = 0.0f64;
        for it in 0..self.grid.ntheta() {
            let ring = &self.values[it * nphi..(it + 1) * nphi];
            let mean: Complex64 = ring.iter().sum::<Complex64>() / nphi as f64;
            for v in ring {
                worst = worst.max((v - mean).norm());
            }
        }
        worst
    }
}

impl So3Function {
    pub fn new(grid: &Arc<So3Grid>, values: Vec<Complex64>) -> Result<So3Function> {
        if values.len() != grid.len() {
            return Err(Error::LengthMismatch {
                got: values.len(),
                expected: grid.len(),
            });
        }
        Ok(So3Function {
            grid: Arc::clone(grid),
            values,
        })
    }

    pub fn from_fn(grid: &Arc<So3Grid>, f: impl Fn(f64, f64, f64) -> Complex64) -> So3Function {
        let values = (0..grid.len())
            .map(|n| {
                let (a, b, g) = grid.euler(n);
                f(a, b, g)
            })
            .collect();
        So3Function {
            grid: Arc::clone(grid),
            values,
        }
    }

    pub fn grid(&self) -> &Arc<So3Grid> {
        &self.grid
    }
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn l1(&self) -> f64 {
        self.values
            .iter()
            .zip(&self.grid.weights)
            .map(|(v, w)| v.norm() * w)
            .sum()
    }

    pub fn integral(&self) -> Complex64 {
        self.values
            .iter()
            .zip(&self.grid.weights)
            .map(|(v, w)| v * w)
            .sum()
    }
}

// ---------------------------------------------------------------------------
// Spherical harmonics.

/// Index of 0 <= m <= l in the packed triangular tables below.
fn tri(l: usize, m: usize) -> usize {
    l * (l + 1) / 2 + m
}

/// Associated Legendre values P_l^m(x) with the Condon-Shortley phase, for
/// all 0 <= m <= l <= lmax, tri-packed.
fn legendre_table(lmax: usize, x: f64) -> Vec<f64> {
    let s = (1.0 - x * x).max(0.0).sqrt();
    let mut p = vec![0.0; tri(lmax, lmax) + 1];
    p[tri(0, 0)] = 1.0;
    for m in 1..=lmax {
        p[tri(m, m)] = -((2 * m - 1) as f64) * s * p[tri(m - 1, m - 1)];
    }
    for m in 0..lmax {
        p[tri(m + 1, m)] = (2 * m + 1) as f64 * x * p[tri(m, m)];
    }
    for m in 0..=lmax {
        for l in (m + 2)..=lmax {
            p[tri(l, m)] = (((2 * l - 1) as f64) * x * p[tri(l - 1, m)]
                - ((l + m - 1) as f64) * p[tri(l - 2, m)])
                / ((l - m) as f64);
        }
    }
    p
}

fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// Orthonormalization constants sqrt((2l+1)/4pi (l-m)!/(l+m)!), tri-packed.
fn norm_table(lmax: usize) -> Vec<f64> {
    let mut t = vec![0.0; tri(lmax, lmax) + 1];
    for l in 0..=lmax {
        for m in 0..=l {
            t[tri(l, m)] = (0.5
                * (((2 * l + 1) as f64 / (4.0 * PI)).ln() + ln_factorial(l - m)
                    - ln_factorial(l + m)))
            .exp();
        }
    }
    t
}

fn harmonic_from_tables(
    norms: &[f64],
    p: &[f64],
    l: usize,
    m: i64,
    phi: f64,
) -> Complex64 {
    let ma = m.unsigned_abs() as usize;
    let mag = norms[tri(l, ma)] * p[tri(l, ma)];
    let e = Complex64::from_polar(1.0, ma as f64 * phi);
    if m >= 0 {
        mag * e
    } else {
        // Y_{l,-m} = (-1)^m conj(Y_{l,m})
        let sign = if ma.is_multiple_of(2) { 1.0 } else { -1.0 };
        sign * mag * e.conj()
    }
}

/// Orthonormal spherical harmonic Y_lm(theta, phi); |m| <= l.
pub fn sph_harm(l: usize, m: i64, theta: f64, phi: f64) -> Complex64 {
    debug_assert!(m.unsigned_abs() as usize <= l);
    let p = legendre_table(l, theta.cos());
    let norms = norm_table(l);
    harmonic_from_tables(&norms, &p, l, m, phi)
}

/// Index of (l, m) in a packed coefficient vector of length (L+1)^2.
pub fn coeff_index(l: usize, m: i64) -> usize {
    l * l + (m + l as i64) as usize
}

/// Harmonic coefficients a_lm = integral of f * conj(Y_lm) over the sphere
/// with surface measure (so f = sum a_lm Y_lm for bandlimited f).
pub fn sht_forward(f: &SphereFunction) -> Vec<Complex64> {
    let lmax = f.grid.bandwidth();
    let norms = norm_table(lmax);
    let mut coeffs = vec![Complex64::new(0.0, 0.0); (lmax + 1) * (lmax + 1)];
    let nphi = f.grid.nphi();
    for it in 0..f.grid.ntheta() {
        let p = legendre_table(lmax, f.grid.theta(it).cos());
        for ip in 0..nphi {
            let node = f.grid.node(it, ip);
            // 4 pi: the grid weights integrate the normalized measure.
            let fw = f.values[node] * (4.0 * PI * f.grid.weight(node));
            let phi = f.grid.phi(ip);
            for l in 0..=lmax {
                for m in -(l as i64)..=(l as i64) {
                    let y = harmonic_from_tables(&norms, &p, l, m, phi);
                    coeffs[coeff_index(l, m)] += y.conj() * fw;
                }
            }
        }
    }
    coeffs
}

fn sht_eval_with(
    norms: &[f64],
    coeffs: &[Complex64],
    lmax: usize,
    theta: f64,
    phi: f64,
) -> Complex64 {
    let p = legendre_table(lmax, theta.cos());
    let mut acc = Complex64::new(0.0, 0.0);
    for l in 0..=lmax {
        for m in -(l as i64)..=(l as i64) {
            acc += coeffs[coeff_index(l, m)] * harmonic_from_tables(norms, &p, l, m, phi);
        }
    }
    acc
}

/// Evaluate a coefficient vector at an arbitrary direction.
pub fn sht_eval(coeffs: &[Complex64], lmax: usize, theta: f64, phi: f64) -> Complex64 {
    sht_eval_with(&norm_table(lmax), coeffs, lmax, theta, phi)
}

// ---------------------------------------------------------------------------
// Rotations.

pub type Mat3 = [[f64; 3]; 3];

fn rot_z(a: f64) -> Mat3 {
    let (s, c) = a.sin_cos();
    [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]]
}

fn rot_y(b: f64) -> Mat3 {
    let (s, c) = b.sin_cos();
    [[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]]
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn mat_transpose(a: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[j][i];
        }
    }
    out
}

pub fn mat_apply(a: &Mat3, v: &[f64; 3]) -> [f64; 3] {
    [
        a[0][0] * v[0] + a[0][1] * v[1] + a[0][2] * v[2],
        a[1][0] * v[0] + a[1][1] * v[1] + a[1][2] * v[2],
        a[2][0] * v[0] + a[2][1] * v[1] + a[2][2] * v[2],
    ]
}

/// ZYZ Euler angles to a rotation matrix: Rz(alpha) Ry(beta) Rz(gamma).
pub fn euler_matrix(alpha: f64, beta: f64, gamma: f64) -> Mat3 {
    mat_mul(&mat_mul(&rot_z(alpha), &rot_y(beta)), &rot_z(gamma))
}

fn dir_to_angles(v: &[f64; 3]) -> (f64, f64) {
    let theta = v[2].clamp(-1.0, 1.0).acos();
    let mut phi = v[1].atan2(v[0]);
    if phi < 0.0 {
        phi += 2.0 * PI;
    }
    (theta, phi)
}

/// Left translation L_R f(v) = f(R^-1 v), resampled through the harmonic
/// expansion (exact for bandlimited inputs up to quadrature).
pub fn rotate_sphere_function(r: &Mat3, f: &SphereFunction) -> SphereFunction {
    let coeffs = sht_forward(f);
    let lmax = f.grid.bandwidth();
    let rt = mat_transpose(r);
    let values = (0..f.grid.len())
        .map(|node| {
            let v = f.grid.dir(node);
            let (t, p) = dir_to_angles(&mat_apply(&rt, &v));
            sht_eval(&coeffs, lmax, t, p)
        })
        .collect();
    SphereFunction {
        grid: Arc::clone(&f.grid),
        values,
    }
}

// ---------------------------------------------------------------------------
// The operator chain.

/// The section f = phi compose projection; constant along gamma-rings since
/// rho is identically 1 here.
pub fn sphere_lift(phi: &SphereFunction, grid: &Arc<So3Grid>) -> Result<So3Function> {
    if !Arc::ptr_eq(&phi.grid, &grid.sphere) && phi.grid.bandwidth() != grid.bandwidth() {
        return Err(Error::GridMismatch);
    }
    let ng = grid.ngamma();
    let values = (0..grid.len())
        .map(|n| phi.values[n / ng])
        .collect();
    Ok(So3Function {
        grid: Arc::clone(grid),
        values,
    })
}

/// Fiber average over the gamma-rings: the quadrature form of the
/// rho-weighted averaging operator with rho = 1 and normalized circle
/// measure.
pub fn sphere_t_h(f: &So3Function, out_grid: &Arc<SphereGrid>) -> Result<SphereFunction> {
    if !Arc::ptr_eq(f.grid.sphere(), out_grid) && f.grid.bandwidth() != out_grid.bandwidth() {
        return Err(Error::GridMismatch);
    }
    let ng = f.grid.ngamma();
    let values = (0..out_grid.len())
        .map(|s| {
            let ring = &f.values[s * ng..(s + 1) * ng];
            ring.iter().sum::<Complex64>() / ng as f64
        })
        .collect();
    Ok(SphereFunction {
        grid: Arc::clone(out_grid),
        values,
    })
}

/// Quotient convolution by quadrature: lift both inputs, convolve over the
/// group grid, project back. The lifted convolution is constant along
/// gamma-rings (the section subspace is a left ideal), so evaluating the
/// gamma = 0 section already is the projection.
pub fn sphere_convolve(phi: &SphereFunction, psi: &SphereFunction) -> Result<SphereFunction> {
    if !Arc::ptr_eq(&phi.grid, &psi.grid) && phi.grid.bandwidth() != psi.grid.bandwidth() {
        return Err(Error::GridMismatch);
    }
    let grid = &phi.grid;
    let lmax = grid.bandwidth();
    let so3 = So3Grid::new(lmax)?;
    let psi_hat = sht_forward(psi);
    let norms = norm_table(lmax);
    // Per group node: inverse rotation and the weighted left factor.
    let ng = so3.ngamma();
    let prepared: Vec<(Mat3, Complex64)> = (0..so3.len())
        .map(|n| {
            let (a, b, g) = so3.euler(n);
            let rinv = mat_transpose(&euler_matrix(a, b, g));
            (rinv, phi.values[n / ng] * so3.weight(n))
        })
        .collect();
    let values: Vec<Complex64> = (0..grid.len())
        .into_par_iter()
        .map(|s| {
            let v = grid.dir(s);
            // accumulation in node order for determinism
            let mut acc = Complex64::new(0.0, 0.0);
            for (rinv, a) in &prepared {
                let d = mat_apply(rinv, &v);
                let (t, p) = dir_to_angles(&d);
                acc += a * sht_eval_with(&norms, &psi_hat, lmax, t, p);
            }
            acc
        })
        .collect();
    Ok(SphereFunction {
        grid: Arc::clone(grid),
        values,
    })
}

#[derive(Debug, Clone, Copy)]
pub struct SphereWeilCheck {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub deviation: f64,
}

/// Integral of the fiber average over the quotient against the group
/// integral; both measures have unit mass.
pub fn sphere_weil_check(f: &So3Function) -> Result<SphereWeilCheck> {
    let projected = sphere_t_h(f, f.grid.sphere())?;
    let lhs = projected.integral();
    let rhs = f.integral();
    Ok(SphereWeilCheck {
        lhs,
        rhs,
        deviation: (lhs - rhs).norm(),
    })
}

/// Max deviation of L_R(phi conv psi) from (L_R phi) conv psi on the grid.
pub fn sphere_covariance_check(
    r: &Mat3,
    phi: &SphereFunction,
    psi: &SphereFunction,
) -> Result<f64> {
    let lhs = rotate_sphere_function(r, &sphere_convolve(phi, psi)?);
    let rhs = sphere_convolve(&rotate_sphere_function(r, phi), psi)?;
    Ok(lhs.max_diff(&rhs))
}

// ---------------------------------------------------------------------------
// Wigner d, used by tests and the verification suite as an independent
// route to the same projections.

/// Small Wigner d^l_{mn}(beta) by the factorial sum.
pub fn wigner_d(l: usize, m: i64, n: i64, beta: f64) -> f64 {
    let li = l as i64;
    debug_assert!(m.abs() <= li && n.abs() <= li);
    let half = beta / 2.0;
    let (c, s) = (half.cos(), half.sin());
    let ln_pref = 0.5
        * (ln_factorial((li + m) as usize)
            + ln_factorial((li - m) as usize)
            + ln_factorial((li + n) as usize)
            + ln_factorial((li - n) as usize));
    let kmin = 0.max(n - m);
    let kmax = (li + n).min(li - m);
    let mut sum = 0.0;
    for k in kmin..=kmax {
        let ln_den = ln_factorial((li + n - k) as usize)
            + ln_factorial(k as usize)
            + ln_factorial((m - n + k) as usize)
            + ln_factorial((li - m - k) as usize);
        let sign = if (m - n + k) % 2 == 0 { 1.0 } else { -1.0 };
        let cpow = (2 * li + n - m - 2 * k) as f64;
        let spow = (m - n + 2 * k) as f64;
        sum += sign * (ln_pref - ln_den).exp() * c.powf(cpow) * s.powf(spow);
    }
    sum
}

/// Wigner D^l_{mn}(alpha, beta, gamma) = e^{-i m alpha} d^l_{mn}(beta)
/// e^{-i n gamma}.
pub fn wigner_big_d(l: usize, m: i64, n: i64, alpha: f64, beta: f64, gamma: f64) -> Complex64 {
    Complex64::from_polar(1.0, -(m as f64) * alpha - (n as f64) * gamma) * wigner_d(l, m, n, beta)
}

// ---------------------------------------------------------------------------
// Serialization.

#[derive(Debug, Serialize, Deserialize)]
pub struct SphereFunctionJson {
    #[serde(rename = "L")]
    pub l: usize,
    pub theta_nodes: usize,
    pub phi_nodes: usize,
    pub values: Vec<[f64; 2]>,
}

impl SphereFunction {
    pub fn to_json(&self) -> SphereFunctionJson {
        SphereFunctionJson {
            l: self.grid.bandwidth(),
            theta_nodes: self.grid.ntheta(),
            phi_nodes: self.grid.nphi(),
            values: self.values.iter().map(|v| [v.re, v.im]).collect(),
        }
    }

    pub fn from_json(j: &SphereFunctionJson) -> Result<SphereFunction> {
        let grid = SphereGrid::new(j.l)?;
        if j.theta_nodes != grid.ntheta() || j.phi_nodes != grid.nphi() {
            return Err(Error::GridMismatch);
        }
        let values = j.values.iter().map(|[re, im]| Complex64::new(*re, *im)).collect();
        SphereFunction::new(&grid, values)
    }
}
