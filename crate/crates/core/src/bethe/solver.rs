//! Newton-corrected continuation for the Bethe equations
//! `p_i^L = Π_{j≠i} (β p_i - p_j - α)/(p_i - β p_j + α)`, started from the
//! free point `(α, β) = (0, 1)` where the solutions are `L`-th roots of unity.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::rational_to_f64;
use crate::weyl::Params;

/// A candidate solution `p` and the max-norm of its Bethe residual.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralPoint {
    pub p: Vec<Complex64>,
    pub residual: f64,
}

impl SpectralPoint {
    pub fn eigenvalue(&self) -> Complex64 {
        self.p.iter().sum()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomotopyOptions {
    /// Newton stops once the correction falls below this (relative) size.
    pub newton_tol: f64,
    /// Residual below which a point on the path is accepted.
    pub accept_residual: f64,
    /// Two roots closer than this abort the continuation.
    pub collision: f64,
    /// Denominators smaller than this count as poles.
    pub pole: f64,
    /// Newton iterations allowed per path step before the step is halved.
    pub max_newton: usize,
    /// Smallest permitted step in `s` before giving up.
    pub min_step: f64,
}

impl Default for HomotopyOptions {
    fn default() -> Self {
        Self {
            newton_tol: 1e-12,
            accept_residual: 1e-10,
            collision: 1e-8,
            pole: 1e-12,
            max_newton: 12,
            min_step: 1e-9,
        }
    }
}

pub fn max_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `e^{2πi n/L}` for each requested exponent `n`.
pub fn roots_of_unity(l: i64, exponents: &[usize]) -> Vec<Complex64> {
    exponents
        .iter()
        .map(|&n| {
            let n = n as i64 % l;
            // exact values where the floating cis would leave rounding noise
            match (4 * n).checked_rem(l) {
                Some(0) => match 4 * n / l {
                    0 => Complex64::new(1.0, 0.0),
                    1 => Complex64::new(0.0, 1.0),
                    2 => Complex64::new(-1.0, 0.0),
                    _ => Complex64::new(0.0, -1.0),
                },
                _ => Complex64::from_polar(1.0, 2.0 * PI * n as f64 / l as f64),
            }
        })
        .collect()
}

struct System {
    alpha: Complex64,
    beta: Complex64,
    l: i64,
    pole: f64,
}

impl System {
    fn factors(&self, p: &[Complex64], i: usize, j: usize) -> Result<(Complex64, Complex64)> {
        let num = self.beta * p[i] - p[j] - self.alpha;
        let den = p[i] - self.beta * p[j] + self.alpha;
        if den.norm() <= self.pole * (1.0 + p[i].norm() + p[j].norm()) {
            return Err(Error::Pole { i: i + 1, j: j + 1 });
        }
        Ok((num, den))
    }

    fn residual(&self, p: &[Complex64]) -> Result<Vec<Complex64>> {
        let k = p.len();
        (0..k)
            .map(|i| {
                let mut rhs = Complex64::new(1.0, 0.0);
                for j in (0..k).filter(|&j| j != i) {
                    let (num, den) = self.factors(p, i, j)?;
                    rhs *= num / den;
                }
                Ok(num::traits::pow(p[i], self.l as usize) - rhs)
            })
            .collect()
    }

    fn jacobian(&self, p: &[Complex64]) -> Result<DMatrix<Complex64>> {
        let k = p.len();
        let mut jac = DMatrix::zeros(k, k);
        for i in 0..k {
            jac[(i, i)] = num::traits::pow(p[i], self.l as usize - 1) * self.l as f64;
            let others: Vec<usize> = (0..k).filter(|&j| j != i).collect();
            let ratios = others
                .iter()
                .map(|&j| self.factors(p, i, j).map(|(n, d)| n / d))
                .collect::<Result<Vec<_>>>()?;
            for (idx, &j) in others.iter().enumerate() {
                let (num, den) = self.factors(p, i, j)?;
                let rest: Complex64 = ratios
                    .iter()
                    .enumerate()
                    .filter(|&(o, _)| o != idx)
                    .map(|(_, r)| *r)
                    .product();
                // derivatives of num/den with respect to p_i and p_j
                let d_pi = (self.beta * den - num) / (den * den);
                let d_pj = (-den + num * self.beta) / (den * den);
                jac[(i, i)] -= rest * d_pi;
                jac[(i, j)] -= rest * d_pj;
            }
        }
        Ok(jac)
    }

    fn newton(
        &self,
        start: &[Complex64],
        opts: &HomotopyOptions,
        max_iter: usize,
    ) -> Result<Vec<Complex64>, String> {
        let mut p = start.to_vec();
        for _ in 0..max_iter {
            let r = self.residual(&p).map_err(|e| e.to_string())?;
            let jac = self.jacobian(&p).map_err(|e| e.to_string())?;
            let rhs = DVector::from_iterator(p.len(), r.iter().map(|z| -z));
            let delta = jac.lu().solve(&rhs).ok_or("singular Jacobian")?;
            for (pi, d) in p.iter_mut().zip(delta.iter()) {
                *pi += d;
            }
            if p.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err("Newton diverged".into());
            }
            let step = delta.iter().map(|z| z.norm()).fold(0.0, f64::max);
            if step <= opts.newton_tol * (1.0 + max_norm(&p)) {
                let res = max_norm(&self.residual(&p).map_err(|e| e.to_string())?);
                if res <= opts.accept_residual {
                    return Ok(p);
                }
            }
        }
        Err("Newton did not converge".into())
    }
}

fn check_collision(p: &[Complex64], tol: f64) -> Result<(), String> {
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if (p[i] - p[j]).norm() < tol {
                return Err(format!("roots {} and {} collide", i + 1, j + 1));
            }
        }
    }
    Ok(())
}

/// Residual vector `p_i^L - Π_{j≠i} (β p_i - p_j - α)/(p_i - β p_j + α)`.
pub fn bethe_residual(p: &[Complex64], params: &Params) -> Result<Vec<Complex64>> {
    if p.len() != params.k() {
        return Err(Error::Dimension {
            expected: params.k(),
            got: p.len(),
        });
    }
    let sys = System {
        alpha: Complex64::new(rational_to_f64(&params.alpha), 0.0),
        beta: Complex64::new(rational_to_f64(&params.beta), 0.0),
        l: params.l(),
        pole: HomotopyOptions::default().pole,
    };
    sys.residual(p)
}

/// Continues the seed `(e^{2πi n_1/L}, …)` along the straight segment
/// `(α, β)(s) = (s α, 1 + s (β - 1))`, `s ∈ [0, 1]`, with `steps` nominal
/// steps, adaptive halving, and a secant predictor.
pub fn solve_bethe(
    params: &Params,
    seeds: &[usize],
    steps: usize,
    opts: &HomotopyOptions,
) -> Result<SpectralPoint> {
    let k = params.k();
    if seeds.len() != k {
        return Err(Error::Dimension {
            expected: k,
            got: seeds.len(),
        });
    }
    let l = params.l();
    let mut residues: Vec<i64> = seeds.iter().map(|&n| n as i64 % l).collect();
    residues.sort_unstable();
    if residues.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidParams(format!(
            "seed roots {seeds:?} are not distinct mod L = {l}"
        )));
    }
    let steps = steps.max(1);

    let alpha_t = rational_to_f64(&params.alpha);
    let beta_t = rational_to_f64(&params.beta);
    let system_at = |s: f64| System {
        alpha: Complex64::new(s * alpha_t, 0.0),
        beta: Complex64::new(1.0 + s * (beta_t - 1.0), 0.0),
        l,
        pole: opts.pole,
    };

    let mut p = roots_of_unity(l, seeds);
    let nominal = 1.0 / steps as f64;
    let mut h = nominal;
    let mut s = 0.0;
    let mut previous: Option<(Vec<Complex64>, f64)> = None;
    let free = alpha_t == 0.0 && beta_t == 1.0;

    while s < 1.0 && !free {
        let s_next = (s + h).min(1.0);
        let guess: Vec<Complex64> = match &previous {
            Some((pp, sp)) => {
                let ratio = (s_next - s) / (s - sp);
                p.iter().zip(pp).map(|(a, b)| a + (a - b) * ratio).collect()
            }
            None => p.clone(),
        };
        let attempt = system_at(s_next)
            .newton(&guess, opts, opts.max_newton)
            .and_then(|q| check_collision(&q, opts.collision).map(|_| q));
        match attempt {
            Ok(q) => {
                previous = Some((std::mem::replace(&mut p, q), s));
                s = s_next;
                h = (h * 1.5).min(nominal);
            }
            Err(reason) => {
                h /= 2.0;
                if h < opts.min_step {
                    return Err(Error::Continuation { s, reason });
                }
            }
        }
    }

    let residual = max_norm(&system_at(1.0).residual(&p)?);
    if residual > opts.accept_residual {
        return Err(Error::Continuation {
            s: 1.0,
            reason: format!("final residual {residual:e}"),
        });
    }
    Ok(SpectralPoint { p, residual })
}
