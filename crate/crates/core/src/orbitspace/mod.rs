//! Hermite matrix description of the T-orbit space, membership decisions and
//! torus preimages.
//!
//! Public coordinates are always real: for types A and odd D the complex
//! coordinates are passed through [`RealEmbedding`].

mod embedding;
mod preimage;
mod raster;

pub use embedding::{ComplexPoly, RealEmbedding};
pub use preimage::{aberth_roots, merge_clusters, psi_exact, PREIMAGE_TOLERANCE};
pub use raster::{region_raster, Raster, RasterCell, RasterSpec, SvgColors, MAX_RESOLUTION};

use std::sync::OnceLock;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{int, rat, rational_to_f64, CirclePoint, GaussianRational, Rational, Ring};
use crate::laurent::{fundamental_invariants, LaurentPoly};
use crate::mpoly::{
    char_poly, classify_float, newton_power_sums, psd_test, CharPoly, MPoly, Matrix, PointClass, SymMatrixPoly,
};
use crate::rootdata::{build_root_system, Family, RootSystemData, RootSystemType};

/// Absolute tolerance of the float classification.
pub const FLOAT_TOLERANCE: f64 = 1e-10;

/// Off-torus tolerance for float inputs.
pub const TORUS_TOLERANCE: f64 = 1e-12;

fn binom(n: usize, k: usize) -> Rational {
    Rational::from_integer(crate::exactnum::binomial(n as u64, k as u64))
}

fn pow2(k: usize) -> Rational {
    Rational::from_integer(num_bigint::BigInt::from(2).pow(k as u32))
}

fn neg2_pow(k: usize) -> Rational {
    if k % 2 == 0 {
        pow2(k)
    } else {
        -pow2(k)
    }
}

/// Coefficients of the univariate system attached to a Weyl group.
///
/// For B/C/D these are `c_1..c_n` with `σ_i(y + y⁻¹) = (−1)^i c_i`; for `A_{n−1}`
/// they are the real quantities `d_1..d_n` of the Chebyshev form.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientMap {
    pub kind: RootSystemType,
    /// Polynomials in the complex coordinates `z_i = θ_i`.
    pub complex: Vec<MPoly>,
    /// The same polynomials in real coordinates.
    pub real: Vec<MPoly>,
}

/// `c_0..c_n` of `∏ (y − y_k)` for `A_{n−1}` in complex coordinates.
pub fn type_a_monic_coeffs(rank: usize) -> Vec<MPoly> {
    let n = rank + 1;
    (0..=n)
        .map(|i| {
            let sign = if i % 2 == 0 { int(1) } else { int(-1) };
            if i == 0 || i == n {
                MPoly::constant(rank, sign)
            } else {
                MPoly::var(rank, i - 1).scale(&(sign * binom(n, i)))
            }
        })
        .collect()
}

fn complex_coefficients(d: &RootSystemData) -> Vec<MPoly> {
    let r = d.rank();
    let z = |i: usize| MPoly::var(r, i - 1);
    match d.family() {
        Family::A => {
            let n = r + 1;
            let sigma = d.sigma();
            let c = type_a_monic_coeffs(r);
            let cbar: Vec<MPoly> = c.iter().map(|p| p.lift(r).permute_vars(&sigma)).collect();
            (1..=n).map(|l| (0..=l).fold(MPoly::zero_in(r), |acc, i| &acc + &(&c[i] * &cbar[l - i]))).collect()
        }
        Family::C => (1..=r).map(|i| z(i).scale(&(neg2_pow(i) * binom(r, i)))).collect(),
        Family::B => {
            let n = r;
            let mut out: Vec<MPoly> = (1..n).map(|i| z(i).scale(&(neg2_pow(i) * binom(n, i)))).collect();
            let mut inner = z(n).pow(2).scale(&pow2(n));
            for i in 1..n {
                inner = &inner - &z(i).scale(&binom(n, i));
            }
            inner = &inner - &MPoly::one();
            out.push(inner.scale(&neg2_pow(n)));
            out
        }
        Family::D => {
            let n = r;
            let mut out: Vec<MPoly> = (1..n - 1).map(|i| z(i).scale(&(neg2_pow(i) * binom(n, i)))).collect();
            let mut cn1 = (&z(n) * &z(n - 1)).scale(&pow2(n - 1));
            let mut cn = (&z(n).pow(2) + &z(n - 1).pow(2)).scale(&pow2(n - 2));
            if n % 2 == 0 {
                for j in 1..=(n - 2) / 2 {
                    cn1 = &cn1 - &z(2 * j - 1).scale(&binom(n, 2 * j - 1));
                    cn = &cn - &z(2 * j).scale(&binom(n, 2 * j));
                }
                cn = &cn - &MPoly::one();
            } else {
                for j in 1..=(n - 3) / 2 {
                    cn1 = &cn1 - &z(2 * j).scale(&binom(n, 2 * j));
                }
                cn1 = &cn1 - &MPoly::one();
                for j in 0..=(n - 3) / 2 {
                    cn = &cn - &z(2 * j + 1).scale(&binom(n, 2 * j + 1));
                }
            }
            out.push(cn1.scale(&neg2_pow(n - 1)));
            out.push(cn.scale(&neg2_pow(n)));
            out
        }
    }
}

pub fn symmetric_system_coeffs(d: &RootSystemData) -> Result<CoefficientMap> {
    let emb = RealEmbedding::new(d);
    let complex: Vec<MPoly> = complex_coefficients(d).into_iter().map(|p| p.lift(d.rank())).collect();
    let real = complex.iter().map(|p| emb.to_real_poly(p)).collect::<Result<_>>()?;
    Ok(CoefficientMap { kind: d.kind, complex, real })
}

/// Monomial coefficients of `T_0..T_n`, lowest degree first.
pub fn chebyshev_t_coeffs(n: usize) -> Vec<Vec<Rational>> {
    let mut t: Vec<Vec<Rational>> = vec![vec![int(1)], vec![int(0), int(1)]];
    for k in 2..=n {
        let mut next = vec![int(0); k + 1];
        for (i, c) in t[k - 1].iter().enumerate() {
            next[i + 1] += c * int(2);
        }
        for (i, c) in t[k - 2].iter().enumerate() {
            next[i] -= c;
        }
        t.push(next);
    }
    t.truncate(n + 1);
    t
}

/// Monic characteristic coefficients `p_1..p_n` of the Chebyshev form
/// `T_n + d_1 T_{n−1} + … + d_{n−1} T_1 + d_n/2`.
fn chebyshev_form_monic<T: Ring>(dl: &[T]) -> Vec<T> {
    let n = dl.len();
    let t = chebyshev_t_coeffs(n);
    let mut g: Vec<T> = t[n].iter().map(T::from_rational).collect();
    for (l, dv) in dl.iter().enumerate().map(|(i, v)| (i + 1, v)) {
        let k = n - l;
        let w = if l == n { dv.clone() * T::from_rational(&rat(1, 2)) } else { dv.clone() };
        for (i, c) in t[k].iter().enumerate() {
            if !c.is_zero() {
                g[i] = g[i].clone() + w.clone() * T::from_rational(c);
            }
        }
    }
    let lead = T::from_rational(&(int(1) / pow2(n - 1)));
    (1..=n).map(|i| g[n - i].clone() * lead.clone()).collect()
}

/// Companion matrix of `x ↦ x·f` on `Q[x]/(g)` in the Chebyshev basis `T_0..T_{n−1}`.
pub fn chebyshev_companion<T: Ring>(dl: &[T]) -> Matrix<T> {
    let n = dl.len();
    let half = T::from_rational(&rat(1, 2));
    let mut m = Matrix::zeros(n, n);
    // Column j holds x·T_j = (T_{j+1} + T_{j−1})/2, with x·T_0 = T_1.
    for j in 0..n {
        let add = |row: usize, v: T, m: &mut Matrix<T>| {
            let cur = m.get(row, j).clone();
            m.set(row, j, cur + v);
        };
        let (w_up, w_down) = if j == 0 { (T::one(), T::zero()) } else { (half.clone(), half.clone()) };
        if j >= 1 {
            add(j - 1, w_down, &mut m);
        }
        if j + 1 < n {
            add(j + 1, w_up, &mut m);
        } else {
            // T_n ≡ −Σ_{ℓ<n} d_ℓ T_{n−ℓ} − (d_n/2) T_0
            for (l, dv) in dl.iter().enumerate().map(|(i, v)| (i + 1, v)) {
                let coef = if l == n { dv.clone() * half.clone() } else { dv.clone() };
                add(n - l, -(w_up.clone() * coef), &mut m);
            }
        }
    }
    m
}

/// Companion matrix in the monomial basis: ones below the diagonal and
/// `−c_n, …, −c_1` in the last column from top to bottom.
pub fn monomial_companion<T: Ring>(c: &[T]) -> Matrix<T> {
    let n = c.len();
    Matrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -c[n - 1 - i].clone()
        } else if i == j + 1 {
            T::one()
        } else {
            T::zero()
        }
    })
}

/// `H_ij = a²·s_{i+j−2} − s_{i+j}` from the monic coefficients of a polynomial.
pub fn hermite_from_coeffs<T: Ring>(p: &[T], a2: &T) -> Matrix<T> {
    let n = p.len();
    let s = newton_power_sums(p, 2 * n);
    Matrix::from_fn(n, n, |i, j| a2.clone() * s[i + j].clone() - s[i + j + 2].clone())
}

/// Hermite form of a monic polynomial (coefficients from the highest degree
/// down) for the interval `[−a, a]`; PSD iff every root lies in the interval.
pub fn hermite_form_general(p: &[Rational], a: &Rational) -> Result<Matrix<Rational>> {
    match p.first() {
        Some(l) if l.is_one() => {}
        _ => return Err(Error::NotMonic),
    }
    if p.len() < 2 {
        return Err(Error::Invalid("polynomial must have degree at least 1".into()));
    }
    Ok(hermite_from_coeffs(&p[1..], &(a * a)))
}

#[derive(Clone, Debug)]
pub struct HermiteMatrix {
    pub kind: RootSystemType,
    /// `a²` in `H_ij = trace(a² C^{i+j−2} − C^{i+j})`.
    pub a2: Rational,
    pub companion: Matrix<MPoly>,
    /// Monic characteristic coefficients of the companion, in real coordinates.
    pub charpoly: Vec<MPoly>,
    pub h: SymMatrixPoly,
}

impl HermiteMatrix {
    pub fn size(&self) -> usize {
        self.h.dim()
    }

    /// `trace(a² C^{k−2} − C^k)` entries recomputed from explicit matrix powers.
    pub fn explicit_from_companion(&self) -> Result<Matrix<MPoly>> {
        let n = self.size();
        let s = self.companion.power_traces_explicit(2 * n)?;
        let a2 = MPoly::constant(0, self.a2.clone());
        Ok(Matrix::from_fn(n, n, |i, j| &(&a2 * &s[i + j]) - &s[i + j + 2]))
    }
}

/// Point value carried by a report.
#[derive(Clone, Debug, PartialEq)]
pub enum PointValue {
    Exact(Vec<Rational>),
    Float(Vec<f64>),
}

impl PointValue {
    pub fn to_f64(&self) -> Vec<f64> {
        match self {
            PointValue::Exact(v) => v.iter().map(rational_to_f64).collect(),
            PointValue::Float(v) => v.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Coefficients {
    Exact(CharPoly),
    Float(Vec<f64>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct MembershipReport {
    pub kind: RootSystemType,
    pub point: PointValue,
    pub psd: bool,
    pub class: PointClass,
    pub rank: usize,
    pub charpoly: Coefficients,
    pub preimages: Option<Vec<Vec<Complex64>>>,
}

/// Precomputed data for one root system: invariants, coefficient maps and,
/// lazily, the symbolic Hermite matrix.
pub struct OrbitSpace {
    data: RootSystemData,
    embedding: RealEmbedding,
    coeffs: CoefficientMap,
    charpoly: Vec<MPoly>,
    a2: Rational,
    invariants: Vec<LaurentPoly>,
    hermite: OnceLock<HermiteMatrix>,
}

impl OrbitSpace {
    pub fn new(kind: RootSystemType) -> Result<Self> {
        Self::from_data(build_root_system(kind)?)
    }

    pub fn from_data(data: RootSystemData) -> Result<Self> {
        let embedding = RealEmbedding::new(&data);
        let coeffs = symmetric_system_coeffs(&data)?;
        let (charpoly, a2) = match data.family() {
            Family::A => (chebyshev_form_monic(&coeffs.real), int(1)),
            _ => (coeffs.real.clone(), int(4)),
        };
        let invariants = fundamental_invariants(&data)?;
        Ok(OrbitSpace { data, embedding, coeffs, charpoly, a2, invariants, hermite: OnceLock::new() })
    }

    pub fn kind(&self) -> RootSystemType {
        self.data.kind
    }

    pub fn data(&self) -> &RootSystemData {
        &self.data
    }

    pub fn rank(&self) -> usize {
        self.data.rank()
    }

    pub fn embedding(&self) -> &RealEmbedding {
        &self.embedding
    }

    pub fn coefficient_map(&self) -> &CoefficientMap {
        &self.coeffs
    }

    pub fn invariants(&self) -> &[LaurentPoly] {
        &self.invariants
    }

    /// Size of the Hermite matrix: `rank + 1` for A, `rank` otherwise.
    pub fn hermite_size(&self) -> usize {
        self.charpoly.len()
    }

    pub fn a2(&self) -> &Rational {
        &self.a2
    }

    /// Monic characteristic coefficients of the companion matrix in real coordinates.
    pub fn charpoly_polys(&self) -> &[MPoly] {
        &self.charpoly
    }

    pub fn companion<T: Ring>(&self, coeffs: &[T]) -> Matrix<T> {
        match self.data.family() {
            Family::A => chebyshev_companion(coeffs),
            _ => monomial_companion(coeffs),
        }
    }

    pub fn hermite(&self) -> &HermiteMatrix {
        self.hermite.get_or_init(|| {
            let companion = self.companion(&self.coeffs.real);
            let a2 = MPoly::constant(0, self.a2.clone());
            let h = hermite_from_coeffs(&self.charpoly, &a2);
            HermiteMatrix {
                kind: self.kind(),
                a2: self.a2.clone(),
                companion,
                charpoly: self.charpoly.clone(),
                h: SymMatrixPoly::from_matrix(&h).expect("Hermite matrices are symmetric"),
            }
        })
    }

    fn check_arity<T>(&self, z: &[T]) -> Result<()> {
        if z.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: z.len() });
        }
        Ok(())
    }

    /// `H(z)` at a real point, computed from the characteristic coefficients.
    pub fn hermite_at<T: Ring>(&self, z: &[T]) -> Result<Matrix<T>> {
        self.check_arity(z)?;
        let p = self.charpoly.iter().map(|c| c.evaluate(z)).collect::<Result<Vec<T>>>()?;
        Ok(hermite_from_coeffs(&p, &T::from_rational(&self.a2)))
    }

    /// Float coefficients `a_i` of the characteristic polynomial of `H(z)`.
    pub fn hermite_coeffs_f64(&self, z: &[f64]) -> Result<Vec<f64>> {
        crate::mpoly::char_poly_float(&self.hermite_at(z)?)
    }

    /// Exact membership test.
    pub fn membership(&self, z: &[Rational], want_preimages: bool) -> Result<MembershipReport> {
        let h = self.hermite_at(z)?;
        let verdict = psd_test(&h)?;
        let class = verdict.class();
        let preimages = if want_preimages && verdict.psd {
            Some(self.preimages(&z.iter().map(rational_to_f64).collect::<Vec<_>>())?)
        } else {
            None
        };
        Ok(MembershipReport {
            kind: self.kind(),
            point: PointValue::Exact(z.to_vec()),
            psd: verdict.psd,
            class,
            rank: verdict.rank,
            charpoly: Coefficients::Exact(verdict.coeffs),
            preimages,
        })
    }

    /// Float membership test with absolute tolerance `tol` on the coefficients.
    pub fn membership_f64(&self, z: &[f64], tol: f64, want_preimages: bool) -> Result<MembershipReport> {
        let a = self.hermite_coeffs_f64(z)?;
        let (class, rank) = classify_float(&a, tol);
        let psd = class != PointClass::Outside;
        let preimages = if want_preimages && psd { Some(self.preimages(z)?) } else { None };
        Ok(MembershipReport {
            kind: self.kind(),
            point: PointValue::Float(z.to_vec()),
            psd,
            class,
            rank,
            charpoly: Coefficients::Float(a),
            preimages,
        })
    }

    /// Exact characteristic polynomial of `H(z)`.
    pub fn hermite_charpoly(&self, z: &[Rational]) -> Result<CharPoly> {
        char_poly(&self.hermite_at(z)?)
    }

    /// Complex coordinates `θ_i(x)` at an exact torus point.
    pub fn theta_complex_exact(&self, x: &[CirclePoint]) -> Result<Vec<GaussianRational>> {
        self.check_arity(x)?;
        self.invariants.iter().map(|t| t.evaluate(x)).collect()
    }

    /// Real orbit-space coordinates of an exact torus point.
    pub fn theta_exact(&self, x: &[CirclePoint]) -> Result<Vec<Rational>> {
        self.embedding.complex_to_real(&self.theta_complex_exact(x)?)
    }

    pub fn theta_complex_f64(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        self.check_arity(x)?;
        for (i, v) in x.iter().enumerate() {
            if (v.norm() - 1.0).abs() > TORUS_TOLERANCE {
                return Err(Error::OffTorus(format!("coordinate {} has modulus {}", i + 1, v.norm())));
            }
        }
        self.invariants.iter().map(|t| t.evaluate(x)).collect()
    }

    /// Real orbit-space coordinates of a float torus point.
    pub fn theta_f64(&self, x: &[Complex64]) -> Result<Vec<f64>> {
        self.embedding.complex_to_real_f64(&self.theta_complex_f64(x)?)
    }

    /// Real coordinates of `θ(x)` for a point given by angles `x_k = exp(2πi a_k)`.
    pub fn theta_from_angles(&self, angles: &[f64]) -> Result<Vec<f64>> {
        let x: Vec<Complex64> = angles.iter().map(|&a| crate::exactnum::circle_from_angle(a)).collect();
        self.theta_f64(&x)
    }

    /// Every torus point `x̂` over `z`, up to the finite branch ambiguity of `ψ`.
    pub fn preimages(&self, z: &[f64]) -> Result<Vec<Vec<Complex64>>> {
        self.check_arity(z)?;
        preimage::torus_preimages(self, z)
    }
}

/// Convenience wrapper building an [`OrbitSpace`] and its Hermite matrix.
pub fn hermite_matrix(kind: RootSystemType) -> Result<HermiteMatrix> {
    Ok(OrbitSpace::new(kind)?.hermite().clone())
}

/// Convenience wrapper for exact membership.
pub fn membership(kind: RootSystemType, z: &[Rational], want_preimages: bool) -> Result<MembershipReport> {
    OrbitSpace::new(kind)?.membership(z, want_preimages)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::circle_from_tangent;
    use crate::laurent::{orbit_polynomial, Rewriter};

    fn space(f: Family, r: usize) -> OrbitSpace {
        OrbitSpace::new(RootSystemType::new(f, r).unwrap()).unwrap()
    }

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn coefficient_examples() {
        let c2 = space(Family::C, 2);
        assert_eq!(c2.coefficient_map().real, vec![p("-4 z1"), p("4 z2")]);
        let b2 = space(Family::B, 2);
        assert_eq!(b2.coefficient_map().real[1], p("16 z2^2 - 8 z1 - 4"));
        let a2 = space(Family::A, 2);
        assert_eq!(
            a2.coefficient_map().complex,
            vec![p("-3 z1 - 3 z2"), p("3 z1 + 3 z2 + 9 z1 z2"), p("-2 - 9 z1^2 - 9 z2^2")]
        );
    }

    #[test]
    fn type_a_matches_closed_form() {
        // d_ℓ = (−1)^ℓ (C(n,ℓ)(z_ℓ + z_{n−ℓ}) + Σ C(n,i)C(n,ℓ−i) z_i z_{n−ℓ+i}), d_n = (−1)^n (2 + Σ C(n,i)² z_i²)
        for r in 1..=5 {
            let s = space(Family::A, r);
            let n = r + 1;
            let z = |i: usize| MPoly::var(r, i - 1);
            for l in 1..=n {
                let sign = if l % 2 == 0 { int(1) } else { int(-1) };
                let expected = if l < n {
                    let mut e = (&z(l) + &z(n - l)).scale(&binom(n, l));
                    for i in 1..l {
                        e = &e + &(&z(i) * &z(n - l + i)).scale(&(binom(n, i) * binom(n, l - i)));
                    }
                    e
                } else {
                    let mut e = MPoly::constant(r, int(2));
                    for i in 1..n {
                        e = &e + &z(i).pow(2).scale(&(binom(n, i) * binom(n, i)));
                    }
                    e
                };
                assert_eq!(s.coefficient_map().complex[l - 1], expected.scale(&sign), "A{r} d{l}");
            }
        }
    }

    /// `σ_i(y + y⁻¹)` (or `σ_i(y)` for A) rewritten in the fundamental invariants.
    fn symmetric_functions_rewritten(s: &OrbitSpace) -> Vec<MPoly> {
        let d = s.data();
        let r = d.rank();
        let amb = d.kind.ambient_dim();
        // y_k = x^{ε_k} with ε_k written in the weight basis.
        let coroots = d.simple_coroots();
        let eps: Vec<Vec<i64>> = (0..amb)
            .map(|k| {
                coroots
                    .iter()
                    .map(|c| {
                        let v = c[k].clone();
                        assert!(v.is_integer());
                        i64::try_from(v.to_integer()).unwrap()
                    })
                    .collect()
            })
            .collect();
        let base: Vec<LaurentPoly> = eps
            .iter()
            .map(|e| {
                let y = LaurentPoly::monomial(e.clone(), int(1));
                if d.family() == Family::A {
                    y
                } else {
                    &y + &LaurentPoly::monomial(e.iter().map(|v| -v).collect(), int(1))
                }
            })
            .collect();
        let mut elem = vec![LaurentPoly::constant(r, int(1))];
        for b in &base {
            elem.push(LaurentPoly::zero(r));
            for i in (1..elem.len()).rev() {
                elem[i] = &elem[i] + &(&elem[i - 1] * b);
            }
        }
        let rw = Rewriter::new(d).unwrap();
        elem[1..].iter().map(|e| rw.rewrite(e).unwrap()).collect()
    }

    #[test]
    fn coefficients_agree_with_rewritten_symmetric_functions() {
        for (f, r) in [
            (Family::B, 2),
            (Family::B, 3),
            (Family::B, 4),
            (Family::C, 3),
            (Family::D, 3),
            (Family::D, 4),
            (Family::D, 5),
            (Family::A, 2),
            (Family::A, 3),
        ] {
            let s = space(f, r);
            let sig = symmetric_functions_rewritten(&s);
            if f == Family::A {
                let c = type_a_monic_coeffs(r);
                for i in 1..=r {
                    let sign = if i % 2 == 0 { int(1) } else { int(-1) };
                    assert_eq!(sig[i - 1].scale(&sign), c[i], "{f}{r} σ{i}");
                }
            } else {
                for i in 1..=r {
                    let sign = if i % 2 == 0 { int(1) } else { int(-1) };
                    assert_eq!(sig[i - 1].scale(&sign), s.coefficient_map().complex[i - 1], "{f}{r} c{i}");
                }
            }
        }
    }

    #[test]
    fn companion_examples() {
        let c2 = space(Family::C, 2);
        let h = c2.hermite();
        assert_eq!(h.companion.to_rows(), vec![vec![p("0"), p("-4 z2")], vec![p("1"), p("4 z1")]]);
        let b2 = space(Family::B, 2);
        assert_eq!(
            b2.hermite().companion.to_rows(),
            vec![vec![p("0"), p("-16 z2^2 + 8 z1 + 4")], vec![p("1"), p("4 z1")]]
        );
        let a1 = space(Family::A, 1);
        assert_eq!(a1.hermite().companion.to_rows(), vec![vec![p("0"), p("-z1^2")], vec![p("1"), p("2 z1")]]);
        let a2 = space(Family::A, 2);
        assert_eq!(
            a2.hermite().companion.to_rows(),
            vec![
                vec![p("0"), p("1/2"), p("1/2 + 9/2 z1^2 - 9/2 z2^2")],
                vec![p("1"), p("0"), p("1/2 - 9/2 z1^2 - 9/2 z2^2 - 3 z1")],
                vec![p("0"), p("1/2"), p("3 z1")],
            ]
        );
    }

    #[test]
    fn chebyshev_charpoly_matches_companion() {
        for r in 1..=4 {
            let s = space(Family::A, r);
            let h = s.hermite();
            let fl: Vec<MPoly> = h.companion.char_poly_coeffs().unwrap();
            assert_eq!(fl, h.charpoly, "A{r}");
        }
    }

    #[test]
    fn newton_route_matches_explicit_powers() {
        for (f, r) in [(Family::A, 2), (Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::D, 3)] {
            let h = hermite_matrix(RootSystemType::new(f, r).unwrap()).unwrap();
            assert_eq!(h.h.to_matrix(), h.explicit_from_companion().unwrap(), "{f}{r}");
        }
    }

    #[test]
    fn small_rank_hermite() {
        // The rank-one instance of the type C formula: c_1 = −2z.
        let h1 = hermite_from_coeffs(&[p("-2 z1")], &MPoly::constant(0, int(4)));
        assert_eq!(h1.get(0, 0), &p("4 - 4 z1^2"));
        let c2 = hermite_matrix(RootSystemType::new(Family::C, 2).unwrap()).unwrap();
        let printed = SymMatrixPoly::from_matrix(&Matrix::from_rows(vec![
            vec![p("-2 z1^2 + z2 + 1"), p("-8 z1^3 + 6 z1 z2 + 2 z1")],
            vec![p("-8 z1^3 + 6 z1 z2 + 2 z1"), p("-32 z1^4 + 8 z1^2 + 32 z1^2 z2 - 4 z2^2 - 4 z2")],
        ]))
        .unwrap();
        assert_eq!(c2.h.ratio_to(&printed), Some(int(8)));
    }

    #[test]
    fn entry_degrees() {
        for f in Family::ALL {
            for r in f.min_rank().max(2)..=4 {
                let h = hermite_matrix(RootSystemType::new(f, r).unwrap()).unwrap();
                for i in 0..h.size() {
                    for j in 0..h.size() {
                        assert_eq!(h.h.get(i, j).total_degree(), Some((i + j + 2) as u32), "{f}{r} ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn membership_examples() {
        let c2 = space(Family::C, 2);
        let m = c2.membership(&[int(1), int(1)], true).unwrap();
        assert!(m.psd);
        assert_eq!(m.rank, 0);
        let pre = m.preimages.unwrap();
        assert!(pre.iter().any(|x| x.iter().all(|v| (v - Complex64::new(1.0, 0.0)).norm() < 1e-6)));
        let m = c2.membership(&[int(0), int(-1)], true).unwrap();
        assert!(m.psd);
        assert_eq!(m.rank, 0);
        for x in m.preimages.unwrap() {
            let back = c2.theta_f64(&x).unwrap();
            assert!((back[0] - 0.0).abs() < 1e-9 && (back[1] + 1.0).abs() < 1e-9);
        }
        let m = c2.membership(&[int(1), int(-1)], true).unwrap();
        assert!(!m.psd);
        assert_eq!(m.class, PointClass::Outside);
        assert!(m.preimages.is_none());
        assert_eq!(c2.hermite_at(&[int(1), int(-1)]).unwrap().get(0, 0), &int(-16));
        assert!(c2.membership(&[int(0)], false).is_err());
    }

    #[test]
    fn hermite_form_examples() {
        assert!(psd_test(&hermite_form_general(&[int(1), int(0), int(-1)], &int(2)).unwrap()).unwrap().psd);
        let m = hermite_form_general(&[int(1), int(-3)], &int(2)).unwrap();
        assert_eq!(m.get(0, 0), &int(-5));
        assert!(!psd_test(&m).unwrap().psd);
        assert!(psd_test(&hermite_form_general(&[int(1), int(0), int(0)], &int(0)).unwrap()).unwrap().psd);
        assert!(matches!(hermite_form_general(&[int(2), int(1)], &int(1)), Err(Error::NotMonic)));
    }

    #[test]
    fn theta_examples() {
        let c2 = space(Family::C, 2);
        let i = circle_from_tangent(&int(1));
        let one = CirclePoint::one();
        assert_eq!(c2.theta_exact(&[i.clone(), one.clone()]).unwrap(), vec![int(0), int(0)]);
        let b2 = space(Family::B, 2);
        assert_eq!(b2.theta_exact(&[one.clone(), one.clone()]).unwrap(), vec![int(1), int(1)]);
        let a2 = space(Family::A, 2);
        let v = a2.theta_from_angles(&[-2.0 / 3.0, -1.0 / 3.0]).unwrap();
        assert!((v[0] + 0.5).abs() < 1e-12 && (v[1] - 3f64.sqrt() / 2.0).abs() < 1e-12, "{v:?}");
        assert!(matches!(c2.theta_f64(&[Complex64::new(1.1, 0.0), Complex64::new(1.0, 0.0)]), Err(Error::OffTorus(_))));
    }

    #[test]
    fn a2_vertex_ranks() {
        let a2 = space(Family::A, 2);
        assert_eq!(a2.hermite_charpoly(&[int(1), int(0)]).unwrap().rank(), 0);
        assert_eq!(a2.hermite_charpoly(&[rat(-1, 3), int(0)]).unwrap().rank(), 0);
        for s in [1.0, -1.0] {
            let a = a2.hermite_coeffs_f64(&[-0.5, s * 3f64.sqrt() / 2.0]).unwrap();
            assert_eq!(classify_float(&a, 1e-8).1, 1, "{a:?}");
        }
    }

    #[test]
    fn sign_symmetries() {
        let b3 = space(Family::B, 3);
        let flip: Vec<MPoly> = vec![p("z1"), p("z2"), p("-z3")];
        for c in &b3.coefficient_map().complex {
            assert_eq!(&c.substitute(&flip).unwrap(), c);
        }
        for n in [4, 5] {
            let d = space(Family::D, n);
            let mut neg: Vec<MPoly> = (0..n).map(|i| MPoly::var(n, i)).collect();
            neg[n - 2] = neg[n - 2].scale(&int(-1));
            neg[n - 1] = neg[n - 1].scale(&int(-1));
            let mut swap: Vec<MPoly> = (0..n).map(|i| MPoly::var(n, i)).collect();
            swap.swap(n - 2, n - 1);
            for c in &d.coefficient_map().complex {
                assert_eq!(&c.substitute(&neg).unwrap(), c);
                assert_eq!(&c.substitute(&swap).unwrap(), c);
            }
        }
    }

    #[test]
    fn b_top_coefficient_uses_orbit_of_twice_last_weight() {
        let b2 = space(Family::B, 2);
        let d = b2.data();
        let orb = orbit_polynomial(d, &[0, 2]).unwrap();
        let rewritten = Rewriter::new(d).unwrap().rewrite(&orb).unwrap();
        assert_eq!(rewritten, p("4 z2^2 - 2 z1 - 1"));
    }
}
