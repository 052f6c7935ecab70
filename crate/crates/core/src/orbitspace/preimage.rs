//! Torus preimages of orbit-space points.
//!
//! The univariate polynomial of the symmetric system is solved numerically,
//! its roots are turned into `y ∈ T^n`, and `ψ` is inverted by telescoping
//! products. Every candidate is validated by re-evaluating `θ`.

use num_complex::Complex64;

use super::OrbitSpace;
use crate::error::{Error, Result};
use crate::exactnum::{binomial, rational_to_f64, CirclePoint};
use crate::rootdata::Family;

/// Maximal `‖θ(x̂) − z‖∞` for an accepted preimage.
pub const PREIMAGE_TOLERANCE: f64 = 1e-9;

const ABERTH_MAX_ITER: usize = 200;
const RESIDUAL_TOLERANCE: f64 = 1e-12;
const CLUSTER_RADIUS: f64 = 1e-6;

fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = c[0];
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in &c[1..] {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Relative residual `|p(z)| / Σ|c_i||z|^{n−i}`.
fn relative_residual(c: &[Complex64], z: Complex64) -> f64 {
    let (p, _) = horner(c, z);
    let scale = c.iter().fold(0.0, |acc, a| acc * z.norm() + a.norm());
    p.norm() / scale.max(f64::MIN_POSITIVE)
}

/// All roots of a monic polynomial given from the leading coefficient down,
/// by Aberth–Ehrlich simultaneous iteration.
pub fn aberth_roots(c: &[Complex64]) -> Result<Vec<Complex64>> {
    if c.is_empty() || c[0] != Complex64::new(1.0, 0.0) {
        return Err(Error::NotMonic);
    }
    let n = c.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    let radius = c[1..].iter().enumerate().map(|(i, a)| a.norm().powf(1.0 / (i + 1) as f64)).fold(1.0f64, f64::max);
    let mut z: Vec<Complex64> =
        (0..n).map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4)).collect();
    for _ in 0..ABERTH_MAX_ITER {
        let mut largest: f64 = 0.0;
        for k in 0..n {
            let (p, dp) = horner(c, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| {
                    let d = z[k] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if w.is_finite() {
                z[k] -= w;
                largest = largest.max(w.norm() / z[k].norm().max(1.0));
            }
        }
        if largest < 1e-16 {
            break;
        }
    }
    let residuals: Vec<f64> = z.iter().map(|&r| relative_residual(c, r)).collect();
    // Multiple roots only reach about √ε, which the cluster merge repairs.
    if residuals.iter().any(|&r| !(r <= RESIDUAL_TOLERANCE.sqrt())) {
        return Err(Error::RootFinding { residuals });
    }
    Ok(z)
}

fn derivative(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    c[..n].iter().enumerate().map(|(i, a)| a * (n - i) as f64).collect()
}

/// Replaces every group of `k` roots closer than `radius` by its centroid,
/// polished by Newton steps on the `(k−1)`-th derivative, where the multiple
/// root becomes simple.
pub fn merge_clusters(c: &[Complex64], roots: &[Complex64], radius: f64) -> Vec<Complex64> {
    let n = roots.len();
    let mut label: Vec<usize> = (0..n).collect();
    fn find(l: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while l[r] != r {
            r = l[r];
        }
        l[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if (roots[i] - roots[j]).norm() < radius * roots[i].norm().max(1.0) {
                let (a, b) = (find(&mut label, i), find(&mut label, j));
                label[a.max(b)] = a.min(b);
            }
        }
    }
    let mut polished: Vec<Option<Complex64>> = vec![None; n];
    (0..n)
        .map(|i| {
            let root = find(&mut label, i);
            if let Some(v) = polished[root] {
                return v;
            }
            let members: Vec<Complex64> = (0..n).filter(|&j| find(&mut label, j) == root).map(|j| roots[j]).collect();
            let mut z = members.iter().sum::<Complex64>() / members.len() as f64;
            if members.len() > 1 {
                let mut d = c.to_vec();
                for _ in 1..members.len() {
                    d = derivative(&d);
                }
                let lead = d[0];
                let d: Vec<Complex64> = d.iter().map(|a| a / lead).collect();
                for _ in 0..8 {
                    let (p, dp) = horner(&d, z);
                    if dp.norm() == 0.0 {
                        break;
                    }
                    let step = p / dp;
                    if !step.is_finite() || step.norm() > radius {
                        break;
                    }
                    z -= step;
                }
            }
            polished[root] = Some(z);
            z
        })
        .collect()
}

fn unit(v: Complex64) -> Complex64 {
    if v.norm() == 0.0 {
        Complex64::new(1.0, 0.0)
    } else {
        v / v.norm()
    }
}

/// `y ∈ T^n` from a real root `r ∈ [−2, 2]` of the system in `y + y⁻¹`.
fn half_disc(r: f64) -> Complex64 {
    let h = (r / 2.0).clamp(-1.0, 1.0);
    Complex64::new(h, (1.0 - h * h).max(0.0).sqrt())
}

fn prefix_products(y: &[Complex64], k: usize) -> Complex64 {
    y[..k].iter().product()
}

/// Candidate torus points with `ψ(x) = y` (up to the sign and swap ambiguity).
fn psi_inverse(family: Family, rank: usize, y: &[Complex64]) -> Vec<Vec<Complex64>> {
    let n = rank;
    match family {
        Family::A | Family::C => vec![(1..=n).map(|k| unit(prefix_products(y, k))).collect()],
        Family::B => {
            let mut base: Vec<Complex64> = (1..n).map(|k| unit(prefix_products(y, k))).collect();
            let top = unit(prefix_products(y, n).sqrt());
            let mut other = base.clone();
            base.push(top);
            other.push(-top);
            vec![base, other]
        }
        Family::D => {
            let mut out = Vec::with_capacity(4);
            for yn in [y[n - 1], y[n - 1].inv()] {
                let head: Vec<Complex64> = (1..n - 1).map(|k| unit(prefix_products(y, k))).collect();
                let p = prefix_products(y, n - 1);
                let x1 = unit((p / yn).sqrt());
                for s in [1.0, -1.0] {
                    let xn1 = x1 * s;
                    let mut x = head.clone();
                    x.push(xn1);
                    x.push(unit(p / xn1));
                    out.push(x);
                }
            }
            out
        }
    }
}

/// `y = ψ(x)` at an exact torus point; `rank + 1` coordinates for type A.
pub fn psi_exact(family: Family, x: &[CirclePoint]) -> Vec<CirclePoint> {
    let n = x.len();
    let prev = |k: usize| if k == 0 { CirclePoint::one() } else { x[k - 1].clone() };
    let ratio = |k: usize| x[k].mul(&prev(k).inv());
    match family {
        Family::A => {
            let mut y: Vec<CirclePoint> = (0..n).map(ratio).collect();
            y.push(x[n - 1].inv());
            y
        }
        Family::C => (0..n).map(ratio).collect(),
        Family::B => {
            let mut y: Vec<CirclePoint> = (0..n - 1).map(ratio).collect();
            y.push(x[n - 1].pow(2).mul(&prev(n - 1).inv()));
            y
        }
        Family::D => {
            let mut y: Vec<CirclePoint> = (0..n - 2).map(ratio).collect();
            y.push(x[n - 2].mul(&x[n - 1]).mul(&prev(n - 2).inv()));
            y.push(x[n - 1].mul(&x[n - 2].inv()));
            y
        }
    }
}

pub(super) fn torus_preimages(space: &OrbitSpace, z: &[f64]) -> Result<Vec<Vec<Complex64>>> {
    let rank = space.rank();
    let zc = space.embedding().real_to_complex_f64(z)?;
    let family = space.data().family();
    let y: Vec<Complex64> = match family {
        Family::A => {
            let n = rank + 1;
            let mut c = vec![Complex64::new(1.0, 0.0)];
            for i in 1..=n {
                let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                let zi = if i == n { Complex64::new(1.0, 0.0) } else { zc[i - 1] };
                c.push(zi * (sign * rational_to_f64(&binomial(n as u64, i as u64).into())));
            }
            let roots = merge_clusters(&c, &aberth_roots(&c)?, CLUSTER_RADIUS);
            roots.into_iter().map(unit).collect()
        }
        _ => {
            let mut c = vec![Complex64::new(1.0, 0.0)];
            for p in &space.coefficient_map().complex {
                c.push(p.evaluate(&zc)?);
            }
            let roots = merge_clusters(&c, &aberth_roots(&c)?, CLUSTER_RADIUS);
            roots.into_iter().map(|r| half_disc(r.re)).collect()
        }
    };
    let mut accepted = Vec::new();
    let mut residuals = Vec::new();
    for x in psi_inverse(family, rank, &y) {
        let back = space.theta_f64(&x)?;
        let err = back.iter().zip(z).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        residuals.push(err);
        if err <= PREIMAGE_TOLERANCE {
            accepted.push(x);
        }
    }
    if accepted.is_empty() {
        return Err(Error::RootFinding { residuals });
    }
    Ok(accepted)
}
