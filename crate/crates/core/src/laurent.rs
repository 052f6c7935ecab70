//! Laurent polynomials in `x_1, …, x_n` under the multiplicative action of a
//! Weyl group, orbit polynomials, anti-invariants, and the expression of
//! invariants as polynomials in the fundamental invariants `θ_i = orb_{e_i}`.
//!
//! Invariants are handled in the orbit basis ([`InvariantExpansion`]); products
//! with `θ_i` are expanded with the orbit recurrence, which keeps the rewriting
//! loop free of large Laurent products.

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{int, CirclePoint, GaussianRational, Rational, Ring};
use crate::mpoly::MPoly;
use crate::rootdata::{IntMatrix, RootSystemData};

/// Cap on the number of leading-term steps in [`rewrite_in_fundamental`].
pub const REWRITE_ITERATION_CAP: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Rational>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        LaurentPoly::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exp: Vec<i64>, c: Rational) -> Self {
        let mut p = LaurentPoly::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i64>, Rational)>) -> Result<Self> {
        let mut p = LaurentPoly::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, got: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[i64]) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, exp: Vec<i64>, c: Rational) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return LaurentPoly::zero(self.nvars);
        }
        LaurentPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * q)).collect() }
    }

    /// Image under `x^α ↦ x^{Bα}`.
    pub fn act(&self, b: &IntMatrix) -> Result<Self> {
        if b.dim() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: b.dim() });
        }
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(b.apply(e), c.clone());
        }
        Ok(out)
    }

    /// Euler derivative `x_k ∂/∂x_k`.
    pub fn euler_derivative(&self, k: usize) -> Self {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * int(e[k]));
        }
        out
    }

    /// Checks `act(B, self) = self` for every simple reflection.
    pub fn check_invariant(&self, d: &RootSystemData) -> Result<()> {
        for (i, s) in d.simple_reflection_matrices().iter().enumerate() {
            if &self.act(s)? != self {
                return Err(Error::NotInvariant { generator: i });
            }
        }
        Ok(())
    }

    /// Evaluates at a point of the torus, exactly or in floating point.
    pub fn evaluate<X: TorusCoord>(&self, x: &[X]) -> Result<X::Value> {
        if x.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: x.len() });
        }
        let mut tables: Vec<HashMap<i64, X::Value>> = vec![HashMap::new(); self.nvars];
        for e in self.terms.keys() {
            for (k, &a) in e.iter().enumerate() {
                if !tables[k].contains_key(&a) {
                    tables[k].insert(a, x[k].power(a));
                }
            }
        }
        let mut acc = X::Value::zero();
        for (e, c) in &self.terms {
            let mut t = X::Value::from_rational(c);
            for (k, a) in e.iter().enumerate() {
                if *a != 0 {
                    t = t * tables[k][a].clone();
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Exact quotient `self / g`; fails when `g` does not divide `self`.
    pub fn divide_exact(&self, g: &LaurentPoly) -> Result<LaurentPoly> {
        let (Some((g_hi, g_hc)), Some((g_lo, _))) = (g.terms.last_key_value(), g.terms.first_key_value()) else {
            return Err(Error::Division("division by zero".into()));
        };
        let mut q = LaurentPoly::zero(self.nvars);
        let Some((f_lo, _)) = self.terms.first_key_value() else {
            return Ok(q);
        };
        let q_lo: Vec<i64> = f_lo.iter().zip(g_lo).map(|(a, b)| a - b).collect();
        let mut r = self.clone();
        while let Some((r_hi, r_hc)) = r.terms.last_key_value() {
            let e: Vec<i64> = r_hi.iter().zip(g_hi).map(|(a, b)| a - b).collect();
            if e < q_lo {
                return Err(Error::Division("remainder is nonzero".into()));
            }
            let c = r_hc / g_hc;
            let t = LaurentPoly::monomial(e, c);
            r = &r - &(&t * g);
            q = &q + &t;
        }
        Ok(q)
    }

    /// Exponent vectors that occur, in increasing lexicographic order.
    pub fn support(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.terms.keys()
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), -c.clone());
        }
        r
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut acc: HashMap<Vec<i64>, Rational> = HashMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        LaurentPoly { nvars: self.nvars, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&int(-1))
    }
}

/// Coordinates of a torus point that can be raised to integer powers.
pub trait TorusCoord {
    type Value: Ring;
    fn power(&self, k: i64) -> Self::Value;
}

impl TorusCoord for CirclePoint {
    type Value = GaussianRational;
    fn power(&self, k: i64) -> GaussianRational {
        self.pow(k).value().clone()
    }
}

impl TorusCoord for Complex64 {
    type Value = Complex64;
    fn power(&self, k: i64) -> Complex64 {
        self.powi(k as i32)
    }
}

/// `orb_α = (1/|G|) Σ_B x^{Bα}`.
pub fn orbit_polynomial(d: &RootSystemData, alpha: &[i64]) -> Result<LaurentPoly> {
    let orbit = d.orbit(alpha)?;
    let c = Rational::new(BigInt::one(), BigInt::from(orbit.len()));
    LaurentPoly::from_terms(d.rank(), orbit.into_iter().map(|e| (e, c.clone())))
}

/// The fundamental invariants `θ_1, …, θ_n`.
pub fn fundamental_invariants(d: &RootSystemData) -> Result<Vec<LaurentPoly>> {
    (0..d.rank()).map(|i| orbit_polynomial(d, &unit(d.rank(), i))).collect()
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

/// `Υ_α = Σ_B det(B) x^{Bα}`.
pub fn anti_invariant(d: &RootSystemData, alpha: &[i64]) -> Result<LaurentPoly> {
    if alpha.len() != d.rank() {
        return Err(Error::DimensionMismatch { expected: d.rank(), got: alpha.len() });
    }
    let mut out = LaurentPoly::zero(d.rank());
    for b in d.group_elements()? {
        out.add_term(b.apply(alpha), int(b.det()));
    }
    Ok(out)
}

/// Invariant written as `Σ c_λ orb_λ` over dominant `λ`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct InvariantExpansion {
    pub coeffs: BTreeMap<Vec<i64>, Rational>,
}

impl InvariantExpansion {
    pub fn single(alpha: Vec<i64>) -> Self {
        InvariantExpansion { coeffs: BTreeMap::from([(alpha, int(1))]) }
    }

    fn add(&mut self, key: Vec<i64>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let v = self.coeffs.entry(key.clone()).or_insert_with(Rational::zero);
        *v += c;
        if v.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    fn add_scaled(&mut self, o: &InvariantExpansion, q: &Rational) {
        for (k, c) in &o.coeffs {
            self.add(k.clone(), c * q);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Back to a Laurent polynomial.
    pub fn to_laurent(&self, d: &RootSystemData) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero(d.rank());
        for (lambda, c) in &self.coeffs {
            let orbit = d.orbit(lambda)?;
            let w = c / int(orbit.len() as i64);
            for e in orbit {
                out.add_term(e, w.clone());
            }
        }
        Ok(out)
    }
}

/// Expansion of `orb_α · orb_β` via `|Gβ| orb_α orb_β = Σ_{β̃ ∈ Gβ} orb_{α+β̃}`.
pub fn orbit_product_expand(d: &RootSystemData, alpha: &[i64], beta: &[i64]) -> Result<InvariantExpansion> {
    if alpha.len() != d.rank() {
        return Err(Error::DimensionMismatch { expected: d.rank(), got: alpha.len() });
    }
    let orbit = d.orbit(beta)?;
    let w = Rational::new(BigInt::one(), BigInt::from(orbit.len()));
    let mut out = InvariantExpansion::default();
    for b in orbit {
        let s: Vec<i64> = alpha.iter().zip(&b).map(|(x, y)| x + y).collect();
        out.add(d.dominant(&s).0, w.clone());
    }
    Ok(out)
}

/// Rewrites invariants in the fundamental invariants, caching products of `θ`s.
pub struct Rewriter<'a> {
    d: &'a RootSystemData,
    orbit_sizes: Mutex<HashMap<Vec<i64>, usize>>,
    fundamental_orbits: Vec<Vec<Vec<i64>>>,
    powers: Mutex<HashMap<Vec<i64>, InvariantExpansion>>,
}

impl<'a> Rewriter<'a> {
    pub fn new(d: &'a RootSystemData) -> Result<Self> {
        let fundamental_orbits = (0..d.rank()).map(|i| d.orbit(&unit(d.rank(), i))).collect::<Result<_>>()?;
        Ok(Rewriter {
            d,
            orbit_sizes: Mutex::new(HashMap::new()),
            fundamental_orbits,
            powers: Mutex::new(HashMap::new()),
        })
    }

    fn orbit_size(&self, lambda: &[i64]) -> Result<usize> {
        if let Some(&s) = self.orbit_sizes.lock().unwrap().get(lambda) {
            return Ok(s);
        }
        let s = self.d.orbit(lambda)?.len();
        self.orbit_sizes.lock().unwrap().insert(lambda.to_vec(), s);
        Ok(s)
    }

    /// Orbit-basis coordinates of an invariant Laurent polynomial.
    pub fn expansion_of(&self, f: &LaurentPoly) -> Result<InvariantExpansion> {
        if f.nvars() != self.d.rank() {
            return Err(Error::DimensionMismatch { expected: self.d.rank(), got: f.nvars() });
        }
        f.check_invariant(self.d)?;
        let mut out = InvariantExpansion::default();
        for (e, c) in f.terms() {
            if RootSystemData::is_dominant(e) {
                out.add(e.clone(), c * int(self.orbit_size(e)? as i64));
            }
        }
        Ok(out)
    }

    /// Expansion of `θ^μ = Π θ_i^{μ_i}`.
    pub fn theta_power(&self, mu: &[i64]) -> InvariantExpansion {
        if let Some(e) = self.powers.lock().unwrap().get(mu) {
            return e.clone();
        }
        let out = match mu.iter().position(|&a| a > 0) {
            None => InvariantExpansion::single(vec![0; mu.len()]),
            Some(i) => {
                let mut lower = mu.to_vec();
                lower[i] -= 1;
                let base = self.theta_power(&lower);
                let orbit = &self.fundamental_orbits[i];
                let w = Rational::new(BigInt::one(), BigInt::from(orbit.len()));
                let mut acc = InvariantExpansion::default();
                for (alpha, c) in &base.coeffs {
                    let cw = c * &w;
                    for b in orbit {
                        let s: Vec<i64> = alpha.iter().zip(b).map(|(x, y)| x + y).collect();
                        acc.add(self.d.dominant(&s).0, cw.clone());
                    }
                }
                acc
            }
        };
        self.powers.lock().unwrap().insert(mu.to_vec(), out.clone());
        out
    }

    /// Polynomial `P` with `P(θ) = Σ c_λ orb_λ`.
    pub fn rewrite_expansion(&self, e: &InvariantExpansion) -> Result<MPoly> {
        let n = self.d.rank();
        let mut rem = e.clone();
        let mut out = MPoly::zero_in(n);
        let mut steps = 0;
        while let Some(top) =
            rem.coeffs.keys().max_by(|a, b| self.d.height(a).cmp(&self.d.height(b)).then_with(|| a.cmp(b))).cloned()
        {
            steps += 1;
            if steps > REWRITE_ITERATION_CAP {
                return Err(Error::IterationCap { what: "rewrite_in_fundamental", cap: REWRITE_ITERATION_CAP });
            }
            let c = rem.coeffs[&top].clone();
            let pw = self.theta_power(&top);
            let lc = pw.coeffs.get(&top).cloned().unwrap_or_else(Rational::zero);
            if lc.is_zero() {
                return Err(Error::Invalid(format!("θ^{top:?} has no leading orbit term")));
            }
            let q = c / lc;
            rem.add_scaled(&pw, &-q.clone());
            out.add_term(top.iter().map(|&a| a as u32).collect(), q);
        }
        if &self.expand_polynomial(&out)? != e {
            return Err(Error::Invalid("re-expansion does not reproduce the input".into()));
        }
        Ok(out)
    }

    /// Orbit-basis expansion of `P(θ_1, …, θ_n)`.
    pub fn expand_polynomial(&self, p: &MPoly) -> Result<InvariantExpansion> {
        if p.nvars() > self.d.rank() {
            return Err(Error::DimensionMismatch { expected: self.d.rank(), got: p.nvars() });
        }
        let mut out = InvariantExpansion::default();
        for (e, c) in p.lift(self.d.rank()).terms() {
            let mu: Vec<i64> = e.iter().map(|&a| a as i64).collect();
            out.add_scaled(&self.theta_power(&mu), c);
        }
        Ok(out)
    }

    pub fn rewrite(&self, f: &LaurentPoly) -> Result<MPoly> {
        self.rewrite_expansion(&self.expansion_of(f)?)
    }
}

/// Polynomial `P` in the fundamental invariants with `P(θ_1, …, θ_n) = f`.
pub fn rewrite_in_fundamental(d: &RootSystemData, f: &LaurentPoly) -> Result<MPoly> {
    Rewriter::new(d)?.rewrite(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{circle_from_tangent, rat};
    use crate::rootdata::{build_root_system, Family, RootSystemType};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn data(f: Family, r: usize) -> RootSystemData {
        build_root_system(RootSystemType::new(f, r).unwrap()).unwrap()
    }

    fn lp(n: usize, terms: &[(&[i64], Rational)]) -> LaurentPoly {
        LaurentPoly::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), c.clone()))).unwrap()
    }

    fn random_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<CirclePoint> {
        (0..n).map(|_| circle_from_tangent(&rat(rng.gen_range(-9..=9), rng.gen_range(1..=7)))).collect()
    }

    #[test]
    fn c2_fundamental_invariants() {
        let d = data(Family::C, 2);
        let q = rat(1, 4);
        let t1 = lp(2, &[(&[1, 0], q.clone()), (&[-1, 0], q.clone()), (&[-1, 1], q.clone()), (&[1, -1], q.clone())]);
        assert_eq!(orbit_polynomial(&d, &[1, 0]).unwrap(), t1);
        // (1/4)(x1 + 1/x1)(x2/x1 + x1/x2)
        let a = lp(2, &[(&[1, 0], int(1)), (&[-1, 0], int(1))]);
        let b = lp(2, &[(&[-1, 1], int(1)), (&[1, -1], int(1))]);
        assert_eq!(orbit_polynomial(&d, &[0, 1]).unwrap(), (&a * &b).scale(&q));
        assert_eq!(orbit_polynomial(&d, &[0, 0]).unwrap(), LaurentPoly::constant(2, int(1)));
    }

    #[test]
    fn c2_evaluations() {
        let d = data(Family::C, 2);
        let th = fundamental_invariants(&d).unwrap();
        let i = circle_from_tangent(&int(1));
        let one = CirclePoint::one();
        let p = [i, one.clone()];
        assert!(th[0].evaluate(&p).unwrap().is_zero());
        assert!(th[1].evaluate(&p).unwrap().is_zero());
        assert_eq!(th[0].evaluate(&[one.clone(), one]).unwrap(), GaussianRational::one());
    }

    #[test]
    fn act_examples() {
        let d = data(Family::C, 3);
        let f = orbit_polynomial(&d, &[1, 0, 2]).unwrap();
        assert_eq!(f.act(&IntMatrix::identity(3)).unwrap(), f);
        let b = &d.simple_reflection_matrices()[1];
        let m = lp(3, &[(&[1, 0, 0], int(1))]);
        assert_eq!(m.act(b).unwrap(), lp(3, &[(&b.apply(&[1, 0, 0]), int(1))]));
        assert!(m.act(&IntMatrix::identity(2)).is_err());
    }

    #[test]
    fn minus_identity_permutes_fundamental_invariants() {
        for f in Family::ALL {
            for r in f.min_rank()..=5 {
                let d = data(f, r);
                let th = fundamental_invariants(&d).unwrap();
                let sigma = d.sigma();
                let minus = IntMatrix::identity(r).neg();
                for i in 0..r {
                    assert_eq!(th[i].act(&minus).unwrap(), th[sigma[i]]);
                }
            }
        }
    }

    #[test]
    fn anti_invariant_examples() {
        let a1 = data(Family::A, 1);
        assert_eq!(anti_invariant(&a1, &[1]).unwrap(), lp(1, &[(&[1], int(1)), (&[-1], int(-1))]));
        let a2 = data(Family::A, 2);
        assert!(anti_invariant(&a2, &[1, 0]).unwrap().is_zero());
        assert!(anti_invariant(&a2, &[0, 3]).unwrap().is_zero());
        for f in Family::ALL {
            for r in f.min_rank()..=4 {
                let d = data(f, r);
                let up = anti_invariant(&d, &d.delta()).unwrap();
                for s in d.simple_reflection_matrices() {
                    assert_eq!(up.act(s).unwrap(), up.scale(&int(-1)));
                }
                let minus: Vec<i64> = d.delta().iter().map(|v| -v).collect();
                let down = anti_invariant(&d, &minus).unwrap();
                assert!(down == up || down == up.scale(&int(-1)));
            }
        }
    }

    #[test]
    fn orbit_products() {
        let b2 = data(Family::B, 2);
        let e = orbit_product_expand(&b2, &[0, 0], &[1, 1]).unwrap();
        assert_eq!(e, InvariantExpansion::single(vec![1, 1]));
        let e = orbit_product_expand(&b2, &[0, 1], &[0, 1]).unwrap();
        assert!(e.coeffs.contains_key(&vec![0, 2]));
        assert!(e.coeffs.contains_key(&vec![0, 0]));
        assert!(e.coeffs.contains_key(&vec![1, 0]));
        let total: Rational = e.coeffs.values().cloned().sum();
        assert_eq!(total, int(1));
        // A1: θ² = (orb_2 + orb_0)/2.
        let a1 = data(Family::A, 1);
        let e = orbit_product_expand(&a1, &[1], &[1]).unwrap();
        let lhs = &orbit_polynomial(&a1, &[1]).unwrap() * &orbit_polynomial(&a1, &[1]).unwrap();
        assert_eq!(e.to_laurent(&a1).unwrap(), lhs);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let x = random_point(&mut rng, 1);
            assert_eq!(e.to_laurent(&a1).unwrap().evaluate(&x).unwrap(), lhs.evaluate(&x).unwrap());
        }
    }

    #[test]
    fn rewrite_examples() {
        let b2 = data(Family::B, 2);
        let th = fundamental_invariants(&b2).unwrap();
        assert_eq!(rewrite_in_fundamental(&b2, &th[0]).unwrap(), "z1".parse().unwrap());
        let orb = orbit_polynomial(&b2, &[0, 2]).unwrap();
        assert_eq!(rewrite_in_fundamental(&b2, &orb).unwrap(), "4 z2^2 - 2 z1 - 1".parse().unwrap());
        let a2 = data(Family::A, 2);
        let ud = anti_invariant(&a2, &[1, 1]).unwrap();
        let phi = rewrite_in_fundamental(&a2, &(&ud * &ud)).unwrap();
        assert_eq!(phi, "81 z1^2 z2^2 - 108 z1^3 - 108 z2^3 + 162 z1 z2 - 27".parse().unwrap());
    }

    #[test]
    fn rewrite_rejects_non_invariant() {
        let c2 = data(Family::C, 2);
        let m = lp(2, &[(&[1, 0], int(1))]);
        assert!(matches!(rewrite_in_fundamental(&c2, &m), Err(Error::NotInvariant { .. })));
    }

    #[test]
    fn laurent_division() {
        let a1 = data(Family::A, 1);
        let ud = anti_invariant(&a1, &[1]).unwrap();
        let u3 = anti_invariant(&a1, &[3]).unwrap();
        let q = u3.divide_exact(&ud).unwrap();
        assert_eq!(q, lp(1, &[(&[2], int(1)), (&[0], int(1)), (&[-2], int(1))]));
        let bad = lp(1, &[(&[2], int(1)), (&[0], int(1))]);
        assert!(bad.divide_exact(&ud).is_err());
        assert!(ud.divide_exact(&LaurentPoly::zero(1)).is_err());
    }

    #[test]
    fn hat_is_conjugation() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for f in Family::ALL {
            let d = data(f, f.min_rank().max(2));
            let th = fundamental_invariants(&d).unwrap();
            for _ in 0..5 {
                let x = random_point(&mut rng, d.rank());
                let xbar: Vec<CirclePoint> = x.iter().map(|p| p.inv()).collect();
                for t in &th {
                    assert_eq!(t.evaluate(&xbar).unwrap(), t.evaluate(&x).unwrap().conj());
                }
            }
        }
    }

    fn arb_case() -> impl Strategy<Value = (Family, usize, Vec<i64>, Vec<u32>)> {
        (0usize..4, 0usize..3).prop_flat_map(|(fi, extra)| {
            let f = Family::ALL[fi];
            let r = (f.min_rank().max(2) + extra).min(4);
            (Just(f), Just(r), prop::collection::vec(0i64..=3, r), prop::collection::vec(0u32..=2, r))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn rewrite_round_trip((f, r, alpha, mu) in arb_case()) {
            let d = data(f, r);
            let rw = Rewriter::new(&d).unwrap();
            let orb = orbit_polynomial(&d, &alpha).unwrap();
            let p = rw.rewrite(&orb).unwrap();
            prop_assert_eq!(rw.expand_polynomial(&p).unwrap().to_laurent(&d).unwrap(), orb);
            // Products of θ's rewrite to the monomial itself.
            let th = fundamental_invariants(&d).unwrap();
            let mut prod = LaurentPoly::constant(r, int(1));
            for (i, &k) in mu.iter().enumerate() {
                for _ in 0..k {
                    prod = &prod * &th[i];
                }
            }
            let expected = MPoly::monomial(mu.clone(), int(1));
            prop_assert_eq!(rw.rewrite(&prod).unwrap(), expected);
        }

        #[test]
        fn orbit_polynomials_are_invariant((f, r, alpha, _mu) in arb_case()) {
            let d = data(f, r);
            let orb = orbit_polynomial(&d, &alpha).unwrap();
            prop_assert!(orb.check_invariant(&d).is_ok());
            let total: Rational = orb.terms().map(|(_, c)| c.clone()).sum();
            prop_assert_eq!(total, int(1));
        }
    }
}
