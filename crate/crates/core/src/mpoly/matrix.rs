//! Dense matrices over any [`Ring`], characteristic polynomials, power
//! traces, and the exact positive-semidefiniteness test.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{int, Field, Rational, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c), "ragged matrix rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.cols.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U: Clone>(&self, f: impl Fn(&T) -> Result<U>) -> Result<Matrix<U>> {
        Ok(Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn mul(&self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, o.rows, "matrix product dimension mismatch");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * o.cols + j;
                    out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Matrix<T>) -> Matrix<T> {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).clone() + o.get(i, j).clone())
    }

    pub fn sub(&self, o: &Matrix<T>) -> Matrix<T> {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).clone() - o.get(i, j).clone())
    }

    pub fn scale(&self, s: &T) -> Matrix<T> {
        self.map(|v| s.clone() * v.clone())
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    /// Coefficients `p_1..p_n` of `det(xI − A) = xⁿ + p_1 xⁿ⁻¹ + … + p_n`
    /// by the Faddeev–LeVerrier recurrence.
    pub fn char_poly_coeffs(&self) -> Result<Vec<T>> {
        self.require_square()?;
        let n = self.rows;
        let mut p: Vec<T> = Vec::with_capacity(n);
        let mut m = Matrix::<T>::identity(n);
        for k in 1..=n {
            if k > 1 {
                let prev = p[k - 2].clone();
                m = self.mul(&m).add(&Matrix::identity(n).scale(&prev));
            }
            let am = self.mul(&m);
            let inv_k = T::from_rational(&Rational::new(int(-1).to_integer(), (k as i64).into()));
            p.push(am.trace() * inv_k);
        }
        Ok(p)
    }

    /// Determinant by expansion along rows with memoized column subsets;
    /// works over any ring, practical up to size about 10.
    pub fn det_expansion(&self) -> Result<T> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        assert!(n <= 20, "expansion determinant limited to small sizes");
        // dp[mask] = determinant of the minor using the last popcount(mask) rows and columns in mask.
        let mut dp: Vec<Option<T>> = vec![None; 1 << n];
        dp[0] = Some(T::one());
        for mask in 1usize..(1 << n) {
            let k = mask.count_ones() as usize;
            let row = n - k;
            let mut acc = T::zero();
            let mut sign_pos = 0;
            for col in 0..n {
                if mask & (1 << col) == 0 {
                    continue;
                }
                let entry = self.get(row, col);
                if !entry.is_zero() {
                    let minor = dp[mask & !(1 << col)].as_ref().expect("subsets are filled in increasing order");
                    let term = entry.clone() * minor.clone();
                    acc = if sign_pos % 2 == 0 { acc + term } else { acc - term };
                }
                sign_pos += 1;
            }
            dp[mask] = Some(acc);
        }
        Ok(dp[(1 << n) - 1].take().unwrap())
    }

    /// `trace(A^0), …, trace(A^kmax)` by repeated multiplication.
    pub fn power_traces_explicit(&self, kmax: usize) -> Result<Vec<T>> {
        self.require_square()?;
        let mut out = vec![T::from_int(self.rows as i64)];
        let mut pw = Matrix::identity(self.rows);
        for _ in 0..kmax {
            pw = pw.mul(self);
            out.push(pw.trace());
        }
        Ok(out)
    }

    /// `trace(A^0), …, trace(A^kmax)` from the characteristic polynomial via Newton's identities.
    pub fn power_traces_newton(&self, kmax: usize) -> Result<Vec<T>> {
        let p = self.char_poly_coeffs()?;
        Ok(newton_power_sums(&p, kmax))
    }
}

impl<T: Field> Matrix<T> {
    /// Determinant by Gaussian elimination over a field.
    pub fn det(&self) -> Result<T> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.clone();
        let mut acc = T::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a.get(r, k).is_zero()) else {
                return Ok(T::zero());
            };
            if p != k {
                for j in 0..n {
                    a.data.swap(k * n + j, p * n + j);
                }
                acc = -acc;
            }
            let piv = a.get(k, k).clone();
            acc = acc * piv.clone();
            for i in k + 1..n {
                let f = a.get(i, k).clone() / piv.clone();
                if f.is_zero() {
                    continue;
                }
                for j in k..n {
                    let v = a.get(i, j).clone() - f.clone() * a.get(k, j).clone();
                    a.set(i, j, v);
                }
            }
        }
        Ok(acc)
    }
}

/// Power sums `s_0..s_kmax` of the roots of `xⁿ + p_1 xⁿ⁻¹ + … + p_n`.
pub fn newton_power_sums<T: Ring>(p: &[T], kmax: usize) -> Vec<T> {
    let n = p.len();
    let mut s: Vec<T> = vec![T::from_int(n as i64)];
    for k in 1..=kmax {
        let mut acc = if k <= n { p[k - 1].clone() * T::from_int(-(k as i64)) } else { T::zero() };
        for i in 1..=n.min(k - 1) {
            acc = acc - p[i - 1].clone() * s[k - i].clone();
        }
        s.push(acc);
    }
    s
}

/// Characteristic polynomial written as `xⁿ + Σ (−1)ⁱ aᵢ xⁿ⁻ⁱ`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharPoly {
    pub a: Vec<Rational>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.a.len()
    }

    /// Index of the last nonzero coefficient; the rank of a symmetric matrix.
    pub fn rank(&self) -> usize {
        self.a.iter().rposition(|v| !v.is_zero()).map_or(0, |i| i + 1)
    }
}

pub fn char_poly(a: &Matrix<Rational>) -> Result<CharPoly> {
    let p = a.char_poly_coeffs()?;
    Ok(CharPoly { a: p.into_iter().enumerate().map(|(i, c)| if i % 2 == 0 { -c } else { c }).collect() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointClass {
    Interior,
    Boundary,
    Outside,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PsdVerdict {
    pub psd: bool,
    pub rank: usize,
    pub coeffs: CharPoly,
}

impl PsdVerdict {
    /// Interior when every coefficient is positive, boundary when psd with a vanishing one.
    pub fn class(&self) -> PointClass {
        if !self.psd {
            PointClass::Outside
        } else if self.coeffs.a.iter().all(|v| v.is_positive()) {
            PointClass::Interior
        } else {
            PointClass::Boundary
        }
    }
}

/// Exact PSD decision: a symmetric matrix is PSD iff all `aᵢ ≥ 0`.
pub fn psd_test(a: &Matrix<Rational>) -> Result<PsdVerdict> {
    a.require_square()?;
    for i in 0..a.rows() {
        for j in i + 1..a.cols() {
            if a.get(i, j) != a.get(j, i) {
                return Err(Error::NotSymmetric);
            }
        }
    }
    let coeffs = char_poly(a)?;
    let psd = coeffs.a.iter().all(|v| !v.is_negative());
    Ok(PsdVerdict { psd, rank: coeffs.rank(), coeffs })
}

/// Floating classification from coefficients `aᵢ` with absolute tolerance `tol`;
/// returns the class and the numerical rank.
pub fn classify_float(a: &[f64], tol: f64) -> (PointClass, usize) {
    let rank = a.iter().rposition(|v| v.abs() > tol).map_or(0, |i| i + 1);
    let class = if a.iter().any(|&v| v < -tol || !v.is_finite()) {
        PointClass::Outside
    } else if a.iter().all(|&v| v > tol) {
        PointClass::Interior
    } else {
        PointClass::Boundary
    };
    (class, rank)
}

/// Float coefficients `aᵢ` of `det(xI − A)` in the alternating convention.
pub fn char_poly_float(a: &Matrix<f64>) -> Result<Vec<f64>> {
    Ok(a.char_poly_coeffs()?.into_iter().enumerate().map(|(i, c)| if i % 2 == 0 { -c } else { c }).collect())
}

impl Matrix<Rational> {
    pub fn to_f64(&self) -> Matrix<f64> {
        self.map(crate::exactnum::rational_to_f64)
    }

    pub fn is_one_like(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j).is_one() == (i == j)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::mpoly::MPoly;
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    fn companion(p: &[Rational]) -> Matrix<Rational> {
        // Last column holds −p_n, …, −p_1 from top to bottom.
        let n = p.len();
        Matrix::from_fn(n, n, |i, j| {
            if j == n - 1 {
                -p[n - 1 - i].clone()
            } else if i == j + 1 {
                int(1)
            } else {
                int(0)
            }
        })
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(char_poly(&Matrix::identity(2)).unwrap().a, vec![int(2), int(1)]);
        let c = companion(&[int(-3), int(2)]);
        assert_eq!(c.char_poly_coeffs().unwrap(), vec![int(-3), int(2)]);
        // [[0, −4b],[1, 4a]] → x² − 4a x + 4b
        let m: Matrix<MPoly> = Matrix::from_rows(vec![
            vec!["0".parse().unwrap(), "-4 z2".parse().unwrap()],
            vec!["1".parse().unwrap(), "4 z1".parse().unwrap()],
        ]);
        let cp = m.char_poly_coeffs().unwrap();
        assert_eq!(cp[0], "-4 z1".parse().unwrap());
        assert_eq!(cp[1], "4 z2".parse().unwrap());
    }

    #[test]
    fn psd_examples() {
        let v = psd_test(&q(&[&[1, 0], &[0, 0]])).unwrap();
        assert!(v.psd);
        assert_eq!(v.rank, 1);
        assert_eq!(v.class(), PointClass::Boundary);
        let v = psd_test(&q(&[&[0, 1], &[1, 0]])).unwrap();
        assert!(!v.psd);
        assert_eq!(v.coeffs.a[1], int(-1));
        let v = psd_test(&q(&[&[0, 0], &[0, 0]])).unwrap();
        assert!(v.psd && v.rank == 0);
        assert!(psd_test(&q(&[&[1, 2], &[3, 4]])).is_err());
        assert!(psd_test(&q(&[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn power_trace_examples() {
        let c: Matrix<MPoly> = Matrix::from_rows(vec![
            vec!["0".parse().unwrap(), "-4 z2".parse().unwrap()],
            vec!["1".parse().unwrap(), "4 z1".parse().unwrap()],
        ]);
        let t = c.power_traces_explicit(2).unwrap();
        assert_eq!(t[0], "2".parse().unwrap());
        assert_eq!(t[1], "4 z1".parse().unwrap());
        assert_eq!(t[2], "16 z1^2 - 8 z2".parse().unwrap());
        let one: Matrix<MPoly> = Matrix::from_rows(vec![vec!["z1".parse().unwrap()]]);
        let t = one.power_traces_newton(3).unwrap();
        assert_eq!(t[3], "z1^3".parse().unwrap());
    }

    #[test]
    fn determinants_agree() {
        let a = q(&[&[2, -1, 0, 3], &[1, 1, 4, 0], &[0, 5, -2, 1], &[7, 0, 1, 1]]);
        let d1 = a.det().unwrap();
        let d2 = a.det_expansion().unwrap();
        assert_eq!(d1, d2);
        let cp = char_poly(&a).unwrap();
        assert_eq!(cp.a[3], d1);
    }

    #[test]
    fn float_classification() {
        assert_eq!(classify_float(&[1.0, 0.5], 1e-10), (PointClass::Interior, 2));
        assert_eq!(classify_float(&[1.0, 1e-12], 1e-10), (PointClass::Boundary, 1));
        assert_eq!(classify_float(&[1.0, -1e-3], 1e-10), (PointClass::Outside, 2));
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
        prop::collection::vec((-5i64..=5, 1i64..=3), n * n)
            .prop_map(move |v| Matrix::from_fn(n, n, |i, j| rat(v[i * n + j].0, v[i * n + j].1)))
    }

    fn arb_poly_matrix(n: usize) -> impl Strategy<Value = Matrix<MPoly>> {
        prop::collection::vec(prop::collection::vec(((0u32..=2, 0u32..=2), -3i64..=3), 0..3), n * n).prop_map(
            move |v| {
                Matrix::from_fn(n, n, |i, j| {
                    let mut p = MPoly::zero_in(2);
                    for &((a, b), c) in &v[i * n + j] {
                        if a + b <= 2 {
                            p.add_term(vec![a, b], int(c));
                        }
                    }
                    p
                })
            },
        )
    }

    proptest! {
        #[test]
        fn faddeev_leverrier_matches_cofactor(a in (1usize..=4).prop_flat_map(arb_matrix)) {
            let n = a.rows();
            let x = int(3);
            let shifted = Matrix::from_fn(n, n, |i, j| if i == j { x.clone() } else { int(0) }).sub(&a);
            let p = a.char_poly_coeffs().unwrap();
            let mut val = x.clone().pow(n as i32);
            for (i, c) in p.iter().enumerate() {
                val += c * x.clone().pow((n - 1 - i) as i32);
            }
            prop_assert_eq!(val, shifted.det_expansion().unwrap());
        }

        #[test]
        fn companion_round_trip(coeffs in prop::collection::vec((-9i64..=9, 1i64..=4), 1..=8)) {
            let p: Vec<Rational> = coeffs.iter().map(|&(a, b)| rat(a, b)).collect();
            prop_assert_eq!(companion(&p).char_poly_coeffs().unwrap(), p);
        }

        #[test]
        fn newton_path_matches_explicit(m in (1usize..=4).prop_flat_map(arb_poly_matrix)) {
            let k = 2 * m.rows();
            prop_assert_eq!(m.power_traces_newton(k).unwrap(), m.power_traces_explicit(k).unwrap());
        }
    }
}
