//! Exact scalars for the finite backend: complex numbers with rational
//! real and imaginary parts.

use num::{BigInt, BigRational, Complex, One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Rat = BigRational;
pub type Scalar = Complex<Rat>;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn scalar_int(n: i64) -> Scalar {
    Scalar::new(rat_int(n), Rat::zero())
}

pub fn scalar_rat(re: Rat) -> Scalar {
    Scalar::new(re, Rat::zero())
}

pub fn scalar(re: Rat, im: Rat) -> Scalar {
    Scalar::new(re, im)
}

/// |z|^2 = re^2 + im^2, exact.
pub fn abs_sq(z: &Scalar) -> Rat {
    &z.re * &z.re + &z.im * &z.im
}

pub fn is_real(z: &Scalar) -> bool {
    z.im.is_zero()
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn scalar_to_f64(z: &Scalar) -> num::Complex<f64> {
    num::Complex::new(rat_to_f64(&z.re), rat_to_f64(&z.im))
}

/// Parses "p/q" or "p" into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    if t.contains('/') {
        Rat::from_str(t).map_err(|_| Error::BadRational(s.to_string()))
    } else {
        BigInt::from_str(t)
            .map(Rat::from_integer)
            .map_err(|_| Error::BadRational(s.to_string()))
    }
}

/// Canonical "p/q" rendering ("p" when the denominator is 1).
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn format_scalar(z: &Scalar) -> (String, String) {
    (format_rat(&z.re), format_rat(&z.im))
}

pub fn parse_scalar(re: &str, im: &str) -> Result<Scalar> {
    Ok(Scalar::new(parse_rat(re)?, parse_rat(im)?))
}

/// Exact absolute value for real rationals.
pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}
