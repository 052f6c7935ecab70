//! Sparse multivariate polynomials over `Q` in the variables `z1, …, zn`.
//!
//! Polynomials of different arity combine freely: the shorter exponent
//! vectors are padded with zeros, so constants need no arity.

mod matrix;
mod parse;

pub use matrix::{
    char_poly, char_poly_float, classify_float, newton_power_sums, psd_test, CharPoly, Matrix, PointClass, PsdVerdict,
};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{int, Rational, Ring};

/// Exponent vector of a monomial.
pub type Exponent = Vec<u32>;

#[derive(Clone, Debug, Default)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl MPoly {
    pub fn zero_in(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = MPoly::zero_in(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `z_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MPoly::monomial(e, int(1))
    }

    pub fn monomial(exp: Exponent, coeff: Rational) -> Self {
        let mut p = MPoly::zero_in(exp.len());
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Result<Self> {
        let mut p = MPoly::zero_in(nvars);
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

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &[u32]) -> Rational {
        if exp.len() > self.nvars && exp[self.nvars..].iter().any(|&a| a != 0) {
            return Rational::zero();
        }
        let mut e = exp.to_vec();
        e.resize(self.nvars, 0);
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    fn pad_exp(&self, exp: &[u32]) -> Exponent {
        let mut e = exp.to_vec();
        e.resize(self.nvars.max(exp.len()), 0);
        e
    }

    /// Adds `c·z^exp` in place.
    pub fn add_term(&mut self, exp: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        if exp.len() > self.nvars {
            *self = self.lift(exp.len());
        }
        let exp = self.pad_exp(&exp);
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let v = o.get() + &c;
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// Same polynomial viewed in `n ≥ nvars` variables.
    pub fn lift(&self, n: usize) -> MPoly {
        if n <= self.nvars {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.resize(n, 0);
                (e, c.clone())
            })
            .collect();
        MPoly { nvars: n, terms }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e.get(var).copied().unwrap_or(0)).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&a| a == 0))
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn scale(&self, q: &Rational) -> MPoly {
        if q.is_zero() {
            return MPoly::zero_in(self.nvars);
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * q)).collect() }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::constant(self.nvars, int(1));
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn check_arity<T>(&self, point: &[T]) -> Result<()> {
        if point.len() < self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: point.len() });
        }
        Ok(())
    }

    /// Evaluates at a point of any [`Ring`]; exact for exact rings.
    pub fn evaluate<T: Ring>(&self, point: &[T]) -> Result<T> {
        self.check_arity(point)?;
        let n = self.nvars;
        let powers: Vec<Vec<T>> = (0..n)
            .map(|i| {
                let d = self.degree_in(i) as usize;
                let mut v = Vec::with_capacity(d + 1);
                v.push(T::one());
                for k in 1..=d {
                    let next = v[k - 1].clone() * point[i].clone();
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            let mut t = T::from_rational(c);
            for (i, &a) in e.iter().enumerate() {
                if a > 0 {
                    t = t * powers[i][a as usize].clone();
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Substitutes polynomials for the variables.
    pub fn substitute(&self, images: &[MPoly]) -> Result<MPoly> {
        self.evaluate(images)
    }

    /// Polynomial with every coefficient mapped through `f`.
    pub fn map_coeffs(&self, f: impl Fn(&Rational) -> Rational) -> MPoly {
        let mut p = MPoly::zero_in(self.nvars);
        for (e, c) in &self.terms {
            p.add_term(e.clone(), f(c));
        }
        p
    }

    /// Renames variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> MPoly {
        let mut p = MPoly::zero_in(self.nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (i, &a) in e.iter().enumerate() {
                f[perm[i]] = a;
            }
            p.add_term(f, c.clone());
        }
        p
    }

    /// `Some(q)` if `self = q·other` for a rational `q`.
    pub fn ratio_to(&self, other: &MPoly) -> Option<Rational> {
        let (e, c) = other.terms.iter().next()?;
        let q = self.coeff(e) / c;
        (self == &other.scale(&q)).then_some(q)
    }
}

impl PartialEq for MPoly {
    fn eq(&self, o: &MPoly) -> bool {
        if self.nvars == o.nvars {
            self.terms == o.terms
        } else {
            let n = self.nvars.max(o.nvars);
            self.lift(n).terms == o.lift(n).terms
        }
    }
}

impl Eq for MPoly {}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::zero_in(0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::constant(0, int(1))
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        let (big, small) = if self.terms.len() >= o.terms.len() { (self, o) } else { (o, self) };
        let mut r = big.lift(small.nvars);
        for (e, c) in &small.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        let mut r = self.lift(o.nvars);
        for (e, c) in &o.terms {
            r.add_term(e.clone(), -c.clone());
        }
        r
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        let n = self.nvars.max(o.nvars);
        let mut acc: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exponent =
                    (0..n).map(|i| e1.get(i).copied().unwrap_or(0) + e2.get(i).copied().unwrap_or(0)).collect();
                let c = c1 * c2;
                match acc.get_mut(&e) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MPoly { nvars: n, terms: acc }
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, o: MPoly) -> MPoly {
        &self + &o
    }
}
impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, o: MPoly) -> MPoly {
        &self - &o
    }
}
impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, o: MPoly) -> MPoly {
        &self * &o
    }
}
impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&int(-1))
    }
}

impl Ring for MPoly {
    fn from_rational(q: &Rational) -> Self {
        MPoly::constant(0, q.clone())
    }
}

impl fmt::Display for MPoly {
    /// Terms in decreasing graded order, e.g. `-2 z1^2 + z2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Exponent, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| if a == 1 { format!("z{}", i + 1) } else { format!("z{}^{}", i + 1, a) })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join(" "))?;
            } else {
                write!(f, "{mag} {}", vars.join(" "))?;
            }
        }
        Ok(())
    }
}

impl FromStr for MPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse::parse_mpoly(s)
    }
}

/// Symmetric matrix of polynomials stored by its upper triangle.
#[derive(Clone, PartialEq, Debug)]
pub struct SymMatrixPoly {
    n: usize,
    entries: BTreeMap<(usize, usize), MPoly>,
}

impl SymMatrixPoly {
    /// Builds from a full matrix, checking symmetry exactly.
    pub fn from_matrix(m: &Matrix<MPoly>) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        let n = m.rows();
        let mut entries = BTreeMap::new();
        for i in 0..n {
            for j in i..n {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::NotSymmetric);
                }
                entries.insert((i, j), m.get(i, j).clone());
            }
        }
        Ok(SymMatrixPoly { n, entries })
    }

    pub fn from_upper(n: usize, entries: BTreeMap<(usize, usize), MPoly>) -> Result<Self> {
        for i in 0..n {
            for j in i..n {
                if !entries.contains_key(&(i, j)) {
                    return Err(Error::Invalid(format!("missing entry ({i},{j})")));
                }
            }
        }
        if entries.keys().any(|&(i, j)| i > j || j >= n) {
            return Err(Error::Invalid("entries must lie in the upper triangle".into()));
        }
        Ok(SymMatrixPoly { n, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &MPoly {
        let key = if i <= j { (i, j) } else { (j, i) };
        &self.entries[&key]
    }

    pub fn upper(&self) -> impl Iterator<Item = (&(usize, usize), &MPoly)> {
        self.entries.iter()
    }

    pub fn to_matrix(&self) -> Matrix<MPoly> {
        Matrix::from_fn(self.n, self.n, |i, j| self.get(i, j).clone())
    }

    pub fn evaluate<T: Ring>(&self, point: &[T]) -> Result<Matrix<T>> {
        let n = self.n;
        let mut vals = BTreeMap::new();
        for (&k, p) in &self.entries {
            vals.insert(k, p.evaluate(point)?);
        }
        Ok(Matrix::from_fn(n, n, |i, j| vals[&if i <= j { (i, j) } else { (j, i) }].clone()))
    }

    /// `Some(q)` if `self = q·other` entrywise for one rational `q`.
    pub fn ratio_to(&self, other: &SymMatrixPoly) -> Option<Rational> {
        if self.n != other.n {
            return None;
        }
        let (key, p) = other.entries.iter().find(|(_, p)| !p.is_zero())?;
        let q = self.entries[key].ratio_to(p)?;
        self.entries.iter().all(|(k, v)| v == &other.entries[k].scale(&q)).then_some(q)
    }
}
