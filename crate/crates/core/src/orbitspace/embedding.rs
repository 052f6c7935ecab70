//! Passage between the complex coordinates `z_i = θ_i(x)` and real coordinates.
//!
//! On the torus `conj(θ_i) = θ_{σ(i)}`. For each pair `i < σ(i)` the real
//! coordinates are `(θ_i + θ_{σ(i)})/2` and `(θ_i − θ_{σ(i)})/(2i)`; fixed
//! indices are already real.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{int, rat, GaussianRational, Rational, Ring};
use crate::mpoly::MPoly;
use crate::rootdata::RootSystemData;

/// Polynomial with Gaussian rational coefficients as a pair `re + i·im`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPoly {
    pub re: MPoly,
    pub im: MPoly,
}

impl ComplexPoly {
    pub fn real(re: MPoly) -> Self {
        ComplexPoly { re, im: MPoly::zero() }
    }
}

impl Add for ComplexPoly {
    type Output = ComplexPoly;
    fn add(self, o: Self) -> Self {
        ComplexPoly { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}
impl Sub for ComplexPoly {
    type Output = ComplexPoly;
    fn sub(self, o: Self) -> Self {
        ComplexPoly { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}
impl Mul for ComplexPoly {
    type Output = ComplexPoly;
    fn mul(self, o: Self) -> Self {
        ComplexPoly { re: &(&self.re * &o.re) - &(&self.im * &o.im), im: &(&self.re * &o.im) + &(&self.im * &o.re) }
    }
}
impl Neg for ComplexPoly {
    type Output = ComplexPoly;
    fn neg(self) -> Self {
        ComplexPoly { re: -self.re, im: -self.im }
    }
}
impl Zero for ComplexPoly {
    fn zero() -> Self {
        ComplexPoly::real(MPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}
impl One for ComplexPoly {
    fn one() -> Self {
        ComplexPoly::real(MPoly::one())
    }
}
impl Ring for ComplexPoly {
    fn from_rational(q: &Rational) -> Self {
        ComplexPoly::real(MPoly::constant(0, q.clone()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealEmbedding {
    pub sigma: Vec<usize>,
}

impl RealEmbedding {
    pub fn new(d: &RootSystemData) -> Self {
        RealEmbedding { sigma: d.sigma() }
    }

    pub fn dim(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &s)| i == s)
    }

    fn check<T>(&self, v: &[T]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: v.len() });
        }
        Ok(())
    }

    /// Real coordinates of a point whose complex coordinates satisfy `conj(z_i) = z_{σ(i)}`.
    pub fn complex_to_real(&self, z: &[GaussianRational]) -> Result<Vec<Rational>> {
        self.check(z)?;
        let half = rat(1, 2);
        let mut r = vec![Rational::zero(); self.dim()];
        for (i, &s) in self.sigma.iter().enumerate() {
            if i == s {
                if !z[i].is_real() {
                    return Err(Error::Invalid(format!("coordinate {} is not real", i + 1)));
                }
                r[i] = z[i].re.clone();
            } else if i < s {
                let sum = &z[i] + &z[s];
                let diff = &z[i] - &z[s];
                if !sum.is_real() || !diff.re.is_zero() {
                    return Err(Error::Invalid(format!("coordinates {} and {} are not conjugate", i + 1, s + 1)));
                }
                r[i] = &sum.re * &half;
                r[s] = &diff.im * &half;
            }
        }
        Ok(r)
    }

    pub fn real_to_complex(&self, r: &[Rational]) -> Result<Vec<GaussianRational>> {
        self.check(r)?;
        Ok((0..self.dim())
            .map(|i| {
                let s = self.sigma[i];
                match i.cmp(&s) {
                    std::cmp::Ordering::Equal => GaussianRational::real(r[i].clone()),
                    std::cmp::Ordering::Less => GaussianRational::new(r[i].clone(), r[s].clone()),
                    std::cmp::Ordering::Greater => GaussianRational::new(r[s].clone(), -r[i].clone()),
                }
            })
            .collect())
    }

    /// Float version of [`Self::complex_to_real`]; imaginary residues are dropped.
    pub fn complex_to_real_f64(&self, z: &[Complex64]) -> Result<Vec<f64>> {
        self.check(z)?;
        let mut r = vec![0.0; self.dim()];
        for (i, &s) in self.sigma.iter().enumerate() {
            if i == s {
                r[i] = z[i].re;
            } else if i < s {
                r[i] = (z[i] + z[s]).re / 2.0;
                r[s] = (z[i] - z[s]).im / 2.0;
            }
        }
        Ok(r)
    }

    pub fn real_to_complex_f64(&self, r: &[f64]) -> Result<Vec<Complex64>> {
        self.check(r)?;
        Ok((0..self.dim())
            .map(|i| {
                let s = self.sigma[i];
                match i.cmp(&s) {
                    std::cmp::Ordering::Equal => Complex64::new(r[i], 0.0),
                    std::cmp::Ordering::Less => Complex64::new(r[i], r[s]),
                    std::cmp::Ordering::Greater => Complex64::new(r[s], -r[i]),
                }
            })
            .collect())
    }

    /// Images of the complex coordinates as polynomials in the real coordinates.
    pub fn complex_coordinate_images(&self) -> Vec<ComplexPoly> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let s = self.sigma[i];
                match i.cmp(&s) {
                    std::cmp::Ordering::Equal => ComplexPoly::real(MPoly::var(n, i)),
                    std::cmp::Ordering::Less => ComplexPoly { re: MPoly::var(n, i), im: MPoly::var(n, s) },
                    std::cmp::Ordering::Greater => {
                        ComplexPoly { re: MPoly::var(n, s), im: MPoly::var(n, i).scale(&int(-1)) }
                    }
                }
            })
            .collect()
    }

    /// Rewrites a polynomial in complex coordinates as a complex polynomial in real coordinates.
    pub fn substitute(&self, p: &MPoly) -> Result<ComplexPoly> {
        p.evaluate(&self.complex_coordinate_images())
    }

    /// Like [`Self::substitute`] but requires the result to be real.
    pub fn to_real_poly(&self, p: &MPoly) -> Result<MPoly> {
        let c = self.substitute(p)?;
        if !c.im.is_zero() {
            return Err(Error::Invalid(format!("polynomial {p} is not real on the orbit space")));
        }
        Ok(c.re.lift(self.dim()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_root_system, Family, RootSystemType};

    fn emb(f: Family, r: usize) -> RealEmbedding {
        RealEmbedding::new(&build_root_system(RootSystemType::new(f, r).unwrap()).unwrap())
    }

    #[test]
    fn round_trips() {
        for (f, r) in [(Family::A, 2), (Family::A, 3), (Family::D, 5), (Family::C, 3)] {
            let e = emb(f, r);
            let real: Vec<Rational> = (0..r).map(|i| rat(i as i64 * 3 - 2, 7)).collect();
            let z = e.real_to_complex(&real).unwrap();
            assert_eq!(e.complex_to_real(&z).unwrap(), real);
            let rf: Vec<f64> = real.iter().map(crate::exactnum::rational_to_f64).collect();
            let back = e.complex_to_real_f64(&e.real_to_complex_f64(&rf).unwrap()).unwrap();
            assert!(back.iter().zip(&rf).all(|(a, b)| (a - b).abs() < 1e-15));
        }
    }

    #[test]
    fn a2_substitution() {
        let e = emb(Family::A, 2);
        let p: MPoly = "z1 z2".parse().unwrap();
        assert_eq!(e.to_real_poly(&p).unwrap(), "z1^2 + z2^2".parse().unwrap());
        let q: MPoly = "z1".parse().unwrap();
        assert!(e.to_real_poly(&q).is_err());
        let s = e.substitute(&"z1 - z2".parse().unwrap()).unwrap();
        assert_eq!(s.im, "2 z2".parse().unwrap());
    }

    #[test]
    fn rejects_non_conjugate() {
        let e = emb(Family::A, 2);
        let z = vec![GaussianRational::new(int(1), int(1)), GaussianRational::new(int(1), int(1))];
        assert!(e.complex_to_real(&z).is_err());
    }
}
