//! Euler Jacobian, the invariant form, the matrix `M`, generalized Chebyshev
//! polynomials, the weight `φ = Υ_δ²` and Monte Carlo orthogonality checks.

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::{int, CirclePoint, GaussianRational, Rational, Ring};
use crate::laurent::{anti_invariant, fundamental_invariants, orbit_polynomial, LaurentPoly, Rewriter, TorusCoord};
use crate::mpoly::{psd_test, MPoly, Matrix};
use crate::orbitspace::{ComplexPoly, OrbitSpace, RealEmbedding};
use crate::rootdata::RootSystemData;

/// `J_{kj} = x_k ∂θ_j/∂x_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerJacobian {
    pub entries: Vec<Vec<LaurentPoly>>,
}

pub fn euler_jacobian(d: &RootSystemData) -> Result<EulerJacobian> {
    let theta = fundamental_invariants(d)?;
    let n = d.rank();
    Ok(EulerJacobian { entries: (0..n).map(|k| theta.iter().map(|t| t.euler_derivative(k)).collect()).collect() })
}

impl EulerJacobian {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn evaluate<X: TorusCoord>(&self, x: &[X]) -> Result<Matrix<X::Value>> {
        let n = self.dim();
        let vals = self
            .entries
            .iter()
            .map(|row| row.iter().map(|p| p.evaluate(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_fn(n, n, |k, j| vals[k][j].clone()))
    }

    /// The constant `∏|Stab(e_i)| / |G|ⁿ` with `det J = c·Υ_δ`.
    pub fn determinant_constant(d: &RootSystemData) -> Result<Rational> {
        let g = BigInt::from(d.order_usize());
        let mut c = int(1);
        for i in 0..d.rank() {
            let mut e = vec![0; d.rank()];
            e[i] = 1;
            c *= Rational::new(d.stabilizer_order(&e)?, g.clone());
        }
        Ok(c)
    }
}

/// `S = (1/|G|) Σ_B BᵗB`, invariant under the exponent action.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantForm {
    pub s: Matrix<Rational>,
}

pub fn invariant_form(d: &RootSystemData) -> Result<InvariantForm> {
    let n = d.rank();
    let elems = d.group_elements()?;
    let mut acc = vec![vec![BigInt::zero(); n]; n];
    for b in elems {
        for i in 0..n {
            for j in 0..n {
                let mut v = 0i64;
                for k in 0..n {
                    v += b.get(k, i) * b.get(k, j);
                }
                acc[i][j] += v;
            }
        }
    }
    let g = BigInt::from(elems.len());
    let s = Matrix::from_fn(n, n, |i, j| Rational::new(acc[i][j].clone(), g.clone()));
    Ok(InvariantForm { s })
}

impl InvariantForm {
    /// Checks `BᵗSB = S` for every generator and strict positivity.
    pub fn check(&self, d: &RootSystemData) -> Result<()> {
        let n = self.s.rows();
        for (i, b) in d.simple_reflection_matrices().iter().enumerate() {
            let bq = Matrix::from_fn(n, n, |r, c| int(b.get(r, c)));
            if bq.transpose().mul(&self.s).mul(&bq) != self.s {
                return Err(Error::NotInvariant { generator: i });
            }
        }
        if psd_test(&self.s)?.class() != crate::mpoly::PointClass::Interior {
            return Err(Error::Invalid("invariant form is not positive definite".into()));
        }
        Ok(())
    }
}

/// Evaluator for `M̃(x) = J(x)ᵗ S Ĵ(x)`, where `Ĵ` uses `θ_{σ(j)}` in column `j`.
pub struct MMatrixEvaluator {
    jac: EulerJacobian,
    form: InvariantForm,
    sigma: Vec<usize>,
}

impl MMatrixEvaluator {
    pub fn new(d: &RootSystemData) -> Result<Self> {
        Ok(MMatrixEvaluator { jac: euler_jacobian(d)?, form: invariant_form(d)?, sigma: d.sigma() })
    }

    pub fn jacobian(&self) -> &EulerJacobian {
        &self.jac
    }

    pub fn form(&self) -> &InvariantForm {
        &self.form
    }

    fn combine<T: Ring>(&self, j: &Matrix<T>) -> Matrix<T> {
        let n = j.rows();
        let s = self.form.s.map(T::from_rational);
        let jhat = Matrix::from_fn(n, n, |k, c| j.get(k, self.sigma[c]).clone());
        j.transpose().mul(&s).mul(&jhat)
    }

    pub fn at<X: TorusCoord>(&self, x: &[X]) -> Result<Matrix<X::Value>> {
        Ok(self.combine(&self.jac.evaluate(x)?))
    }

    /// Symbolic entries `⟨∇̂θ_i, ∇̂θ_{σ(j)}⟩_S` as invariant Laurent polynomials.
    pub fn laurent_entries(&self) -> Vec<Vec<LaurentPoly>> {
        let n = self.jac.dim();
        let e = &self.jac.entries;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = LaurentPoly::zero(n);
                        for k in 0..n {
                            for l in 0..n {
                                let s = self.form.s.get(k, l);
                                if s.is_zero() {
                                    continue;
                                }
                                acc = &acc + &(&e[k][i] * &e[l][self.sigma[j]]).scale(s);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }
}

pub fn m_matrix_at_exact(d: &RootSystemData, x: &[CirclePoint]) -> Result<Matrix<GaussianRational>> {
    MMatrixEvaluator::new(d)?.at(x)
}

pub fn m_matrix_at_f64(d: &RootSystemData, x: &[Complex64]) -> Result<Matrix<Complex64>> {
    for (i, v) in x.iter().enumerate() {
        if (v.norm() - 1.0).abs() > crate::orbitspace::TORUS_TOLERANCE {
            return Err(Error::OffTorus(format!("coordinate {} has modulus {}", i + 1, v.norm())));
        }
    }
    MMatrixEvaluator::new(d)?.at(x)
}

/// Real `2n×2n` matrix `[[A, −B], [B, A]]` of a Hermitian `A + iB`.
pub fn realify_exact(m: &Matrix<GaussianRational>) -> Result<Matrix<Rational>> {
    let n = m.rows();
    for i in 0..n {
        for j in 0..n {
            if m.get(i, j) != &m.get(j, i).conj() {
                return Err(Error::NotSymmetric);
            }
        }
    }
    Ok(Matrix::from_fn(2 * n, 2 * n, |r, c| {
        let v = m.get(r % n, c % n);
        match (r < n, c < n) {
            (true, true) | (false, false) => v.re.clone(),
            (true, false) => -v.im.clone(),
            (false, true) => v.im.clone(),
        }
    }))
}

/// Exact check that a Hermitian Gaussian rational matrix is negative semidefinite.
pub fn is_nsd_exact(m: &Matrix<GaussianRational>) -> Result<bool> {
    let neg = m.map(|v| -v.clone());
    Ok(psd_test(&realify_exact(&neg)?)?.psd)
}

/// Eigenvalues of a Hermitian float matrix (each listed twice, via the realification).
pub fn hermitian_eigenvalues(m: &Matrix<Complex64>) -> Vec<f64> {
    let n = m.rows();
    let real = DMatrix::from_fn(2 * n, 2 * n, |r, c| {
        let v = m.get(r % n, c % n);
        let w = m.get(c % n, r % n).conj();
        let h = (v + w) / 2.0;
        match (r < n, c < n) {
            (true, true) | (false, false) => h.re,
            (true, false) => -h.im,
            (false, true) => h.im,
        }
    });
    let mut ev: Vec<f64> = SymmetricEigen::new(real).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ev
}

/// `M(z)` in complex coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct MMatrix {
    pub complex: Matrix<MPoly>,
}

pub fn m_matrix_symbolic(d: &RootSystemData) -> Result<MMatrix> {
    let ev = MMatrixEvaluator::new(d)?;
    let rw = Rewriter::new(d)?;
    let entries = ev.laurent_entries();
    let n = d.rank();
    let polys = entries
        .iter()
        .map(|row| row.iter().map(|p| rw.rewrite(p)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(MMatrix { complex: Matrix::from_fn(n, n, |i, j| polys[i][j].lift(n)) })
}

impl MMatrix {
    /// Entries as complex polynomials in real coordinates.
    pub fn real(&self, emb: &RealEmbedding) -> Result<Matrix<ComplexPoly>> {
        self.complex.try_map(|p| emb.substitute(p))
    }

    /// `det(−M)` in complex coordinates.
    pub fn det_neg(&self) -> Result<MPoly> {
        self.complex.map(|p| -p.clone()).det_expansion()
    }

    /// `det(−M)` in real coordinates; real by Hermitian symmetry.
    pub fn det_neg_real(&self, emb: &RealEmbedding) -> Result<MPoly> {
        emb.to_real_poly(&self.det_neg()?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebyshevKind {
    First,
    Second,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChebyshevPoly {
    pub kind: ChebyshevKind,
    pub alpha: Vec<i64>,
    pub poly: MPoly,
}

fn require_dominant(d: &RootSystemData, alpha: &[i64]) -> Result<()> {
    if alpha.len() != d.rank() {
        return Err(Error::DimensionMismatch { expected: d.rank(), got: alpha.len() });
    }
    if !RootSystemData::is_dominant(alpha) {
        return Err(Error::NotDominant(alpha.to_vec()));
    }
    Ok(())
}

/// `T_α` with `T_α(θ) = orb_α`.
pub fn chebyshev_first(d: &RootSystemData, alpha: &[i64]) -> Result<ChebyshevPoly> {
    require_dominant(d, alpha)?;
    let poly = Rewriter::new(d)?.rewrite(&orbit_polynomial(d, alpha)?)?;
    Ok(ChebyshevPoly { kind: ChebyshevKind::First, alpha: alpha.to_vec(), poly })
}

/// `U_α` with `U_α(θ)·Υ_δ = Υ_{α+δ}`.
pub fn chebyshev_second(d: &RootSystemData, alpha: &[i64]) -> Result<ChebyshevPoly> {
    require_dominant(d, alpha)?;
    let delta = d.delta();
    let shifted: Vec<i64> = alpha.iter().zip(&delta).map(|(a, b)| a + b).collect();
    let num = anti_invariant(d, &shifted)?;
    let den = anti_invariant(d, &delta)?;
    let q =
        num.divide_exact(&den).map_err(|e| Error::Division(format!("character quotient for {alpha:?} failed: {e}")))?;
    let poly = Rewriter::new(d)?.rewrite(&q)?;
    Ok(ChebyshevPoly { kind: ChebyshevKind::Second, alpha: alpha.to_vec(), poly })
}

/// `φ` with `φ(θ) = Υ_δ²`, in complex coordinates.
pub fn weight_phi(d: &RootSystemData) -> Result<MPoly> {
    let u = anti_invariant(d, &d.delta())?;
    Rewriter::new(d)?.rewrite(&(&u * &u))
}

/// `φ` in real coordinates.
pub fn weight_phi_real(d: &RootSystemData) -> Result<MPoly> {
    RealEmbedding::new(d).to_real_poly(&weight_phi(d)?)
}

/// Phase sums `Σ c·exp(−2πi⟨λ, t⟩)` over a fixed list of weights, where `t`
/// holds the coordinates of `u` in the simple coroot basis.
#[derive(Clone, Debug)]
pub struct TrigSum {
    terms: Vec<(Vec<f64>, f64)>,
}

impl TrigSum {
    fn from_laurent(p: &LaurentPoly, scale: f64) -> Self {
        TrigSum {
            terms: p
                .terms()
                .map(|(e, c)| (e.iter().map(|&v| v as f64).collect(), crate::exactnum::rational_to_f64(c) * scale))
                .collect(),
        }
    }

    /// `cos_μ = (1/|W|) Σ_A e_{Aμ}`.
    pub fn cosine(d: &RootSystemData, mu: &[i64]) -> Result<Self> {
        Ok(Self::from_laurent(&orbit_polynomial(d, mu)?, 1.0))
    }

    /// `sin_μ = (1/|W|) Σ_A det(A) e_{Aμ}`.
    pub fn sine(d: &RootSystemData, mu: &[i64]) -> Result<Self> {
        Ok(Self::from_laurent(&anti_invariant(d, mu)?, 1.0 / d.order_usize() as f64))
    }

    pub fn eval(&self, t: &[f64]) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let phase: f64 = e.iter().zip(t).map(|(a, b)| a * b).sum();
                Complex64::from_polar(*c, -2.0 * std::f64::consts::PI * phase)
            })
            .sum()
    }
}

/// Coordinates `t_i = ⟨ω_i, u⟩` of an ambient vector `u`.
pub fn coroot_coordinates(d: &RootSystemData, u: &[f64]) -> Result<Vec<f64>> {
    let amb = d.kind.ambient_dim();
    if u.len() != amb {
        return Err(Error::DimensionMismatch { expected: amb, got: u.len() });
    }
    Ok(d.fundamental_weights
        .iter()
        .map(|w| w.iter().zip(u).map(|(a, b)| crate::exactnum::rational_to_f64(a) * b).sum())
        .collect())
}

/// `cos_μ(u)` for an ambient vector `u`.
pub fn generalized_cosine(d: &RootSystemData, mu: &[i64], u: &[f64]) -> Result<Complex64> {
    Ok(TrigSum::cosine(d, mu)?.eval(&coroot_coordinates(d, u)?))
}

/// `sin_μ(u)` for an ambient vector `u`.
pub fn generalized_sine(d: &RootSystemData, mu: &[i64], u: &[f64]) -> Result<Complex64> {
    Ok(TrigSum::sine(d, mu)?.eval(&coroot_coordinates(d, u)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrigKind {
    Cosine,
    Sine,
}

#[derive(Clone, Debug, PartialEq)]
pub struct McEstimate {
    pub estimate: Complex64,
    pub target: Rational,
    pub stderr: f64,
    pub samples: usize,
}

pub const MC_MIN_SAMPLES: usize = 10_000;
const MC_CHUNKS: u64 = 64;

/// Exact value of the normalized integral of `f_μ · conj(f_ν)`.
pub fn orthogonality_target(d: &RootSystemData, kind: TrigKind, mu: &[i64], nu: &[i64]) -> Result<Rational> {
    let (dm, _) = d.dominant(mu);
    let (dn, _) = d.dominant(nu);
    if dm != dn {
        return Ok(int(0));
    }
    let order = BigInt::from(d.order_usize());
    let stab = d.stabilizer_order(&dm)?;
    Ok(match kind {
        TrigKind::Cosine => Rational::new(stab, order),
        TrigKind::Sine if stab.is_one() => Rational::new(BigInt::one(), order),
        TrigKind::Sine => int(0),
    })
}

/// Monte Carlo estimate over one period cell `u = Q t`, `t ∈ [0,1)ⁿ`; the
/// result depends only on `seed`, not on the thread count.
pub fn orthogonality_mc(
    d: &RootSystemData,
    kind: TrigKind,
    mu: &[i64],
    nu: &[i64],
    samples: usize,
    seed: u64,
) -> Result<McEstimate> {
    if samples < MC_MIN_SAMPLES {
        return Err(Error::Invalid(format!("at least {MC_MIN_SAMPLES} samples are required")));
    }
    for v in [mu, nu] {
        if v.len() != d.rank() {
            return Err(Error::DimensionMismatch { expected: d.rank(), got: v.len() });
        }
    }
    let (f, g) = match kind {
        TrigKind::Cosine => (TrigSum::cosine(d, mu)?, TrigSum::cosine(d, nu)?),
        TrigKind::Sine => (TrigSum::sine(d, mu)?, TrigSum::sine(d, nu)?),
    };
    let n = d.rank();
    let per_chunk = |c: u64| samples / MC_CHUNKS as usize + usize::from((c as usize) < samples % MC_CHUNKS as usize);
    let partial: Vec<(Complex64, f64)> = (0..MC_CHUNKS)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let mut sum = Complex64::new(0.0, 0.0);
            let mut sq = 0.0;
            let mut t = vec![0.0; n];
            for _ in 0..per_chunk(c) {
                for v in t.iter_mut() {
                    *v = rng.gen::<f64>();
                }
                let val = f.eval(&t) * g.eval(&t).conj();
                sum += val;
                sq += val.norm_sqr();
            }
            (sum, sq)
        })
        .collect();
    let (sum, sq) = partial.iter().fold((Complex64::new(0.0, 0.0), 0.0), |(a, b), (s, q)| (a + s, b + q));
    let m = samples as f64;
    let estimate = sum / m;
    let var = (sq / m - estimate.norm_sqr()).max(0.0);
    Ok(McEstimate { estimate, target: orthogonality_target(d, kind, mu, nu)?, stderr: (var / m).sqrt(), samples })
}

/// Outcome of sampling the converse of the `M ⪯ 0` necessary condition.
#[derive(Clone, Debug, PartialEq)]
pub struct SufficiencyReport {
    pub sampled: usize,
    /// Points where `M(z)` is negative semidefinite.
    pub nsd: usize,
    /// NSD points where `H(z)` is not positive semidefinite.
    pub counterexamples: Vec<Vec<Rational>>,
}

/// Experimental: samples rational `z` in `[−bound, bound]ⁿ` (real coordinates),
/// keeps those with `M(z) ⪯ 0` and tests them against `H(z) ⪰ 0`, exactly.
/// Nothing is asserted about the outcome.
pub fn sufficiency_probe(space: &OrbitSpace, samples: usize, bound: i64, seed: u64) -> Result<SufficiencyReport> {
    let m = m_matrix_symbolic(space.data())?.real(space.embedding())?;
    let n = space.rank();
    let den = 16;
    let points: Vec<Vec<Rational>> = {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples)
            .map(|_| {
                (0..n).map(|_| Rational::new(rng.gen_range(-bound * den..=bound * den).into(), den.into())).collect()
            })
            .collect()
    };
    let verdicts = points
        .par_iter()
        .map(|z| -> Result<(bool, bool)> {
            let mz = m.try_map(|c| Ok(GaussianRational::new(c.re.evaluate(z)?, c.im.evaluate(z)?)))?;
            if !is_nsd_exact(&mz)? {
                return Ok((false, true));
            }
            Ok((true, space.membership(z, false)?.psd))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = SufficiencyReport { sampled: samples, nsd: 0, counterexamples: Vec::new() };
    for (z, (nsd, inside)) in points.into_iter().zip(verdicts) {
        report.nsd += usize::from(nsd);
        if nsd && !inside {
            report.counterexamples.push(z);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{circle_from_tangent, rat, rational_to_f64};
    use crate::rootdata::{build_root_system, Family, RootSystemType};

    fn data(f: Family, r: usize) -> RootSystemData {
        build_root_system(RootSystemType::new(f, r).unwrap()).unwrap()
    }

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    fn circle_points(r: usize, seed: i64) -> Vec<CirclePoint> {
        (0..r).map(|i| circle_from_tangent(&rat(seed * 3 + 2 * i as i64 - 5, 7 + i as i64))).collect()
    }

    #[test]
    fn a1_jacobian_and_m() {
        let d = data(Family::A, 1);
        let j = euler_jacobian(&d).unwrap();
        assert_eq!(j.entries[0][0], anti_invariant(&d, &[1]).unwrap().scale(&rat(1, 2)));
        let m = m_matrix_symbolic(&d).unwrap();
        assert_eq!(m.complex.get(0, 0), &p("z1^2 - 1"));
        assert_eq!(weight_phi(&d).unwrap(), p("4 z1^2 - 4"));
    }

    #[test]
    fn invariant_forms() {
        let a1 = data(Family::A, 1);
        assert_eq!(invariant_form(&a1).unwrap().s.to_rows(), vec![vec![int(1)]]);
        for (f, r) in [(Family::C, 2), (Family::B, 3), (Family::D, 4), (Family::A, 3)] {
            let d = data(f, r);
            invariant_form(&d).unwrap().check(&d).unwrap();
        }
    }

    #[test]
    fn determinant_of_jacobian() {
        for (f, r) in [(Family::A, 2), (Family::B, 2), (Family::C, 3), (Family::D, 4), (Family::A, 3)] {
            let d = data(f, r);
            let j = euler_jacobian(&d).unwrap();
            let c = EulerJacobian::determinant_constant(&d).unwrap();
            let u = anti_invariant(&d, &d.delta()).unwrap();
            for s in 0..5 {
                let x = circle_points(r, s);
                let det = j.evaluate(&x).unwrap().det().unwrap();
                assert_eq!(det, u.evaluate(&x).unwrap().scale(&c), "{f}{r}");
            }
        }
        let c2 = data(Family::C, 2);
        let one = vec![CirclePoint::one(); 2];
        assert!(euler_jacobian(&c2).unwrap().evaluate(&one).unwrap().det().unwrap().is_zero());
    }

    #[test]
    fn m_vanishes_at_identity() {
        for (f, r) in [(Family::A, 2), (Family::D, 4)] {
            let d = data(f, r);
            let m = m_matrix_at_exact(&d, &vec![CirclePoint::one(); r]).unwrap();
            assert!(m.to_rows().iter().flatten().all(|v| v.is_zero()));
        }
    }

    #[test]
    fn m_is_nsd_exact() {
        for (f, r) in [(Family::A, 2), (Family::B, 2), (Family::C, 3), (Family::D, 3)] {
            let d = data(f, r);
            let ev = MMatrixEvaluator::new(&d).unwrap();
            for s in 0..5 {
                let m = ev.at(&circle_points(r, s)).unwrap();
                assert!(is_nsd_exact(&m).unwrap(), "{f}{r}");
            }
        }
    }

    #[test]
    fn m_golden_a2() {
        let d = data(Family::A, 2);
        let m = m_matrix_symbolic(&d).unwrap();
        let expected =
            Matrix::from_rows(vec![vec![p("z1 z2 - 1"), p("2 z1^2 - 2 z2")], vec![p("2 z2^2 - 2 z1"), p("z1 z2 - 1")]])
                .map(|v: &MPoly| v.scale(&rat(2, 3)));
        assert_eq!(m.complex, expected);
    }

    #[test]
    fn symbolic_m_matches_evaluation() {
        let d = data(Family::B, 2);
        let m = m_matrix_symbolic(&d).unwrap();
        let ev = MMatrixEvaluator::new(&d).unwrap();
        for s in 0..4 {
            let x = circle_points(2, s);
            let z: Vec<GaussianRational> =
                fundamental_invariants(&d).unwrap().iter().map(|t| t.evaluate(&x).unwrap()).collect();
            assert_eq!(m.complex.try_map(|p| p.evaluate(&z)).unwrap(), ev.at(&x).unwrap());
        }
    }

    #[test]
    fn phi_golden() {
        let a2 = data(Family::A, 2);
        assert_eq!(weight_phi(&a2).unwrap(), p("81 z1^2 z2^2 - 108 z1^3 - 108 z2^3 + 162 z1 z2 - 27"));
        assert_eq!(
            weight_phi(&data(Family::B, 2)).unwrap(),
            p("256 z1^2 z2^2 - 1024 z2^4 - 256 z1^3 + 1536 z1 z2^2 - 512 z1^2 + 256 z2^2 - 256 z1")
        );
        assert_eq!(
            weight_phi(&data(Family::C, 2)).unwrap(),
            p("-1024 z1^4 + 256 z1^2 z2^2 + 1536 z1^2 z2 - 256 z2^3 + 256 z1^2 - 512 z2^2 - 256 z2")
        );
        assert!(weight_phi_real(&a2).is_ok());
    }

    #[test]
    fn chebyshev_examples() {
        let a1 = data(Family::A, 1);
        assert_eq!(chebyshev_first(&a1, &[2]).unwrap().poly, p("2 z1^2 - 1"));
        assert_eq!(chebyshev_second(&a1, &[0]).unwrap().poly, p("1"));
        assert_eq!(chebyshev_second(&a1, &[1]).unwrap().poly, p("2 z1"));
        assert_eq!(chebyshev_second(&a1, &[2]).unwrap().poly, p("4 z1^2 - 1"));
        let b2 = data(Family::B, 2);
        assert_eq!(chebyshev_first(&b2, &[0, 2]).unwrap().poly, p("4 z2^2 - 2 z1 - 1"));
        assert_eq!(chebyshev_first(&b2, &[1, 0]).unwrap().poly, p("z1"));
        assert!(matches!(chebyshev_first(&b2, &[-1, 0]), Err(Error::NotDominant(_))));
    }

    #[test]
    fn cosine_examples() {
        let a2 = data(Family::A, 2);
        let u = [0.3, -0.1, 0.25];
        assert!((generalized_cosine(&a2, &[0, 0], &u).unwrap() - 1.0).norm() < 1e-14);
        assert!((generalized_cosine(&a2, &[2, 1], &[0.0; 3]).unwrap() - 1.0).norm() < 1e-14);
        // t = (2/3, 1/3) gives the torus point (exp(−4πi/3), exp(−2πi/3)).
        let v = TrigSum::cosine(&a2, &[1, 0]).unwrap().eval(&[2.0 / 3.0, 1.0 / 3.0]);
        assert!((v - Complex64::new(-0.5, 3f64.sqrt() / 2.0)).norm() < 1e-12, "{v}");
        // Agreement with the orbit polynomial at x_i = exp(−2πi t_i).
        let t = coroot_coordinates(&a2, &u).unwrap();
        let x: Vec<Complex64> =
            t.iter().map(|&s| Complex64::from_polar(1.0, -2.0 * std::f64::consts::PI * s)).collect();
        let orb = orbit_polynomial(&a2, &[1, 1]).unwrap().evaluate(&x).unwrap();
        assert!((orb - generalized_cosine(&a2, &[1, 1], &u).unwrap()).norm() < 1e-12);
    }

    #[test]
    fn orthogonality_targets() {
        let a2 = data(Family::A, 2);
        assert_eq!(orthogonality_target(&a2, TrigKind::Cosine, &[1, 0], &[1, 0]).unwrap(), rat(1, 3));
        assert_eq!(orthogonality_target(&a2, TrigKind::Cosine, &[1, 0], &[0, 1]).unwrap(), int(0));
        assert_eq!(orthogonality_target(&a2, TrigKind::Sine, &[1, 1], &[1, 1]).unwrap(), rat(1, 6));
        assert_eq!(orthogonality_target(&a2, TrigKind::Sine, &[1, 0], &[1, 0]).unwrap(), int(0));
        let c2 = data(Family::C, 2);
        assert_eq!(orthogonality_target(&c2, TrigKind::Cosine, &[1, 0], &[1, 0]).unwrap(), rat(1, 4));
    }

    #[test]
    fn monte_carlo_is_deterministic() {
        let a2 = data(Family::A, 2);
        let a = orthogonality_mc(&a2, TrigKind::Cosine, &[1, 0], &[1, 0], 20_000, 5).unwrap();
        let b = orthogonality_mc(&a2, TrigKind::Cosine, &[1, 0], &[1, 0], 20_000, 5).unwrap();
        assert_eq!(a, b);
        assert!((a.estimate - rational_to_f64(&a.target)).norm() < 5.0 * a.stderr + 1e-3);
        assert!(orthogonality_mc(&a2, TrigKind::Cosine, &[1, 0], &[1, 0], 10, 5).is_err());
    }

    #[test]
    fn float_nsd() {
        let d = data(Family::C, 3);
        let ev = MMatrixEvaluator::new(&d).unwrap();
        let x: Vec<Complex64> = [0.1, 0.37, 0.8].iter().map(|&a| crate::exactnum::circle_from_angle(a)).collect();
        let m = ev.at(&x).unwrap();
        assert!(hermitian_eigenvalues(&m).iter().all(|&e| e <= 1e-9));
        assert!(m_matrix_at_f64(&d, &[Complex64::new(2.0, 0.0); 3]).is_err());
    }

    #[test]
    fn sufficiency_probe_c2() {
        let space = OrbitSpace::new(RootSystemType::new(Family::C, 2).unwrap()).unwrap();
        let r = sufficiency_probe(&space, 200, 2, 7).unwrap();
        assert_eq!(r.sampled, 200);
        assert!(r.nsd > 0);
        assert!(r.counterexamples.is_empty(), "{:?}", r.counterexamples);
    }
}
