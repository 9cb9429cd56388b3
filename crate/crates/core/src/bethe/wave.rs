use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::function::LatticeFunction;
use crate::hamiltonian::apply_h;
use crate::scalar::{Rational, Scalar};
use crate::weyl::{Lattice, LatticePoint, Params};

use super::hall_littlewood::hall_littlewood_r;
use super::signed_permutations;

/// `Σ_σ sgn(σ) Π_{i<j} (β p_σ(i) - p_σ(j) - α) Π_i p_σ(i)^{-x_i}`, evaluated
/// at `x` as written, whether or not `x` is dominant.
pub fn bethe_wave_dominant<S: Scalar>(p: &[S], x: &LatticePoint, params: &Params) -> S {
    let alpha = S::from_rational(&params.alpha);
    let beta = S::from_rational(&params.beta);
    let k = p.len();
    let mut total = S::zero();
    for (sigma, sign) in signed_permutations(k) {
        let mut term = S::from_int(sign);
        for i in 0..k {
            for j in i + 1..k {
                term = term
                    * (beta.clone() * p[sigma[i]].clone() - p[sigma[j]].clone() - alpha.clone());
            }
        }
        for (i, &xi) in x.coords().iter().enumerate() {
            term = term * p[sigma[i]].powi(-xi);
        }
        total = total + term;
    }
    total
}

/// The Bethe wave function `h_p`: the formula above on the dominant chamber,
/// extended to all of `X` by `h_p(w x) = h_p(x)` for `w ∈ W`.
pub fn bethe_wave<S: Scalar>(p: &[S], x: &LatticePoint, params: &Params) -> S {
    let (w, _) = params.lattice.shortest_element(x);
    bethe_wave_dominant(p, &w.act(x), params)
}

pub fn bethe_wave_function<S: Scalar>(p: &[S], params: &Params) -> LatticeFunction<S> {
    let p = p.to_vec();
    let params = params.clone();
    LatticeFunction::memoized(move |x| bethe_wave(&p, x, &params))
}

/// Checks `h_p(x)|_{α=0} = Δ(p) R_{ε(x)}(p_1^{-1}, …, p_k^{-1}; β)` exactly at a
/// dominant `x`, for formal (not necessarily Bethe) `p`.
pub fn verify_hl_identity(
    lattice: &Lattice,
    p: &[Rational],
    x: &LatticePoint,
    beta: &Rational,
) -> Result<bool> {
    use num::Zero;
    if !lattice.is_dominant(x) {
        return Err(Error::InvalidParams(format!("{x} is not dominant")));
    }
    if let Some(pos) = p.iter().position(Rational::is_zero) {
        return Err(Error::ZeroSpectral(pos));
    }
    let params = Params {
        lattice: *lattice,
        alpha: Rational::zero(),
        beta: beta.clone(),
    };
    let lhs = bethe_wave_dominant(p, x, &params);
    let inverses: Vec<Rational> = p.iter().map(|pi| pi.recip()).collect();
    let mut vandermonde = Rational::from_int(1);
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            vandermonde *= &p[i] - &p[j];
        }
    }
    let rhs = vandermonde * hall_littlewood_r(x.coords(), &inverses, beta)?;
    Ok(lhs == rhs)
}

fn relative(defect: Complex64, scale: Complex64) -> f64 {
    defect.norm() / (1.0 + scale.norm())
}

/// `max_x |(H h_p)(x) - (Σ p_i) h_p(x)| / (1 + |h_p(x)|)` over `|x_j| <= radius`.
pub fn eigen_defect(p: &[Complex64], params: &Params, radius: i64) -> f64 {
    let h = bethe_wave_function(p, params);
    let lambda: Complex64 = p.iter().sum();
    params
        .lattice
        .window(radius)
        .iter()
        .map(|x| {
            let hx = h.eval(x);
            relative(apply_h(&h, x, params) - lambda * hx, hx)
        })
        .fold(0.0, f64::max)
}

/// `max_x |h_p(π x) - h_p(x)| / (1 + |h_p(x)|)` over `|x_j| <= radius`.
pub fn pi_defect(p: &[Complex64], params: &Params, radius: i64) -> f64 {
    let pi = params.lattice.pi();
    params
        .lattice
        .window(radius)
        .iter()
        .map(|x| {
            let hx = bethe_wave(p, x, params);
            relative(bethe_wave(p, &pi.act(x), params) - hx, hx)
        })
        .fold(0.0, f64::max)
}

/// Floating counterpart of [`verify_hl_identity`] over the dominant points of
/// the window; `None` unless `α = 0`.
pub fn hl_defect(p: &[Complex64], params: &Params, radius: i64) -> Option<f64> {
    use num::Zero;
    if !params.alpha.is_zero() {
        return None;
    }
    let beta = Complex64::from_rational(&params.beta);
    let inverses: Vec<Complex64> = p.iter().map(|z| z.inv()).collect();
    let mut vandermonde = Complex64::new(1.0, 0.0);
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            vandermonde *= p[i] - p[j];
        }
    }
    let lt = params.lattice;
    let mut worst = 0.0f64;
    for x in lt.window(radius).iter().filter(|x| lt.is_dominant(x)) {
        let lhs = bethe_wave_dominant(p, x, params);
        let rhs = vandermonde * hall_littlewood_r(x.coords(), &inverses, &beta).ok()?;
        worst = worst.max(relative(lhs - rhs, lhs));
    }
    Some(worst)
}
