//! Exact scalars: big rationals, Gaussian rationals, exact points of the unit
//! circle, and the complex float type used by the numeric paths.
//!
//! The [`Ring`] and [`Field`] traits let the matrix and polynomial code run
//! unchanged over exact and floating scalars.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always normalized.
pub type Rational = BigRational;

/// Double precision complex number for the numeric paths.
pub type ComplexFloat = Complex64;

/// Commutative ring with a canonical image of the rationals.
pub trait Ring:
    Clone + fmt::Debug + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn from_rational(q: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }
}

/// A [`Ring`] in which nonzero elements can be inverted.
pub trait Field: Ring + Div<Output = Self> {}

impl Ring for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}
impl Field for Rational {}

impl Ring for f64 {
    fn from_rational(q: &Rational) -> Self {
        rational_to_f64(q)
    }
}
impl Field for f64 {}

impl Ring for Complex64 {
    fn from_rational(q: &Rational) -> Self {
        Complex64::new(rational_to_f64(q), 0.0)
    }
}
impl Field for Complex64 {}

/// Shorthand for `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // Falls back to a ratio of rounded parts for huge operands.
        let n = q.numer().to_f64().unwrap_or(f64::NAN);
        let d = q.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Parses `p`, `p/q`, or a finite decimal such as `-0.125` or `3e-2` exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(p, q));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i32 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{whole}{frac}0").parse().map_err(|_| bad())?;
    let mut value = Rational::new(digits, BigInt::from(10).pow(frac.len() as u32 + 1));
    let ten = int(10);
    for _ in 0..exp.unsigned_abs() {
        value = if exp > 0 { value * &ten } else { value / &ten };
    }
    Ok(if neg { -value } else { value })
}

/// Element `re + im·i` of `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        GaussianRational::new(&self.re * q, &self.im * q)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussianRational::one();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_negative() {
            write!(f, "{} - {}i", self.re, -self.im.clone())
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}
impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &o.re, &self.im - &o.im)
    }
}
impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
}
impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: Self) -> Self {
        &self + &o
    }
}
impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: Self) -> Self {
        &self - &o
    }
}
impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}
impl Div for GaussianRational {
    type Output = GaussianRational;
    fn div(self, o: Self) -> Self {
        &self * &o.inv().expect("division by zero Gaussian rational")
    }
}
impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}
impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}
impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::new(Rational::one(), Rational::zero())
    }
}
impl Ring for GaussianRational {
    fn from_rational(q: &Rational) -> Self {
        GaussianRational::real(q.clone())
    }
}
impl Field for GaussianRational {}

/// Exact point of the unit circle `T`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CirclePoint(GaussianRational);

impl CirclePoint {
    /// Wraps `value` after checking `|value| = 1` exactly.
    pub fn new(value: GaussianRational) -> Result<Self> {
        if value.norm_sqr().is_one() {
            Ok(CirclePoint(value))
        } else {
            Err(Error::OffTorus(format!("|{value}|^2 != 1")))
        }
    }

    pub fn one() -> Self {
        CirclePoint(GaussianRational::one())
    }

    pub fn value(&self) -> &GaussianRational {
        &self.0
    }

    pub fn inv(&self) -> Self {
        CirclePoint(self.0.conj())
    }

    pub fn mul(&self, o: &CirclePoint) -> CirclePoint {
        CirclePoint(&self.0 * &o.0)
    }

    pub fn pow(&self, k: i64) -> CirclePoint {
        let p = self.0.pow(k.unsigned_abs() as u32);
        CirclePoint(if k < 0 { p.conj() } else { p })
    }

    pub fn to_complex(&self) -> Complex64 {
        self.0.to_complex()
    }
}

/// `((1 − t²) + 2t·i) / (1 + t²)`, a rational parametrization of `T \ {−1}`.
pub fn circle_from_tangent(t: &Rational) -> CirclePoint {
    let t2 = t * t;
    let d = Rational::one() + &t2;
    CirclePoint(GaussianRational::new((Rational::one() - t2) / &d, (t * int(2)) / d))
}

pub fn circle_pow(x: &CirclePoint, k: i64) -> CirclePoint {
    x.pow(k)
}

/// Complex number of modulus one with argument `2π·a`.
pub fn circle_from_angle(a: f64) -> Complex64 {
    Complex64::from_polar(1.0, std::f64::consts::TAU * a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(re: Rational, im: Rational) -> GaussianRational {
        GaussianRational::new(re, im)
    }

    #[test]
    fn tangent_examples() {
        assert_eq!(circle_from_tangent(&int(0)).value(), &GaussianRational::one());
        assert_eq!(circle_from_tangent(&int(1)).value(), &GaussianRational::i());
        assert_eq!(circle_from_tangent(&rat(1, 2)).value(), &g(rat(3, 5), rat(4, 5)));
    }

    #[test]
    fn power_examples() {
        let i = CirclePoint::new(GaussianRational::i()).unwrap();
        assert_eq!(circle_pow(&i, 2).value(), &g(int(-1), int(0)));
        let x = circle_from_tangent(&rat(1, 2));
        assert_eq!(circle_pow(&x, -1).value(), &g(rat(3, 5), rat(-4, 5)));
        // (3 + 4i)^2 = -7 + 24i
        assert_eq!(circle_pow(&x, 2).value(), &g(rat(-7, 25), rat(24, 25)));
        assert_eq!(circle_pow(&x, 0), CirclePoint::one());
    }

    #[test]
    fn off_circle_rejected() {
        assert!(CirclePoint::new(g(int(1), int(1))).is_err());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("0.3").unwrap(), rat(3, 10));
        assert_eq!(parse_rational("-.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational("1.5e2").unwrap(), int(150));
        assert_eq!(parse_rational("2e-3").unwrap(), rat(1, 500));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(6, 0), BigInt::from(1));
        assert_eq!(binomial(3, 4), BigInt::from(0));
    }

    #[test]
    fn gaussian_inverse() {
        let z = g(rat(1, 2), int(3));
        assert_eq!(&z * &z.inv().unwrap(), GaussianRational::one());
        assert!(GaussianRational::zero().inv().is_none());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-200i64..200, 1i64..60).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn tangent_has_unit_modulus(t in arb_rational()) {
            let x = circle_from_tangent(&t);
            prop_assert!(x.value().norm_sqr().is_one());
            prop_assert!(x.value() != &g(int(-1), int(0)));
            prop_assert!((x.to_complex().norm() - 1.0).abs() < 1e-15);
        }

        #[test]
        fn power_is_additive(t in arb_rational(), a in -20i64..=20, b in -20i64..=20) {
            let x = circle_from_tangent(&t);
            prop_assert_eq!(circle_pow(&x, a + b), circle_pow(&x, a).mul(&circle_pow(&x, b)));
        }
    }
}
