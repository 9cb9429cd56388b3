//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use hecke_bose::random;
use hecke_bose::{LatticeFunction, LatticePoint, Params, Rational};
use num::{One, Zero};

/// Random `(α, β)` with `β ≠ 0`, determined by `seed`.
pub fn random_params(k: usize, l: i64, seed: u64) -> Params {
    let mut rng = random::rng(seed.wrapping_mul(0x2545_f491_4f6c_dd1d));
    let alpha = random::rational(&mut rng, 5, 4);
    let beta = random::nonzero_rational(&mut rng, 5, 4);
    Params::new(k, l, alpha, beta).unwrap()
}

pub fn pt(c: &[i64]) -> LatticePoint {
    LatticePoint::new(c.to_vec())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// A polynomial in `z_1, …, z_k` with rational coefficients, keyed by
/// exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub k: usize,
    pub terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    pub fn zero(k: usize) -> Self {
        Self {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exps: Vec<u32>, c: Rational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn constant(k: usize, c: Rational) -> Self {
        Self::monomial(vec![0; k], c)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        let entry = self
            .terms
            .entry(exps.clone())
            .or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        let mut out = Poly::zero(self.k);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.k);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Relabels variables: `z_i ↦ z_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Poly {
        let mut out = Poly::zero(self.k);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.k];
            for (i, &ei) in e.iter().enumerate() {
                f[perm[i]] = ei;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Exact quotient by `z_a - z_b`; panics on a nonzero remainder.
    pub fn div_difference(&self, a: usize, b: usize) -> Poly {
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.k);
        // peel the term of highest z_a-degree until none has z_a left
        while let Some((e, c)) = rem
            .terms
            .iter()
            .filter(|(e, _)| e[a] > 0)
            .max_by_key(|(e, _)| (e[a], (*e).clone()))
            .map(|(e, c)| (e.clone(), c.clone()))
        {
            let mut q = e.clone();
            q[a] -= 1;
            quot.add_term(q.clone(), c.clone());
            let mut shifted = q;
            shifted[b] += 1;
            rem.add_term(e, -c.clone());
            rem.add_term(shifted, c);
        }
        assert!(
            rem.terms.is_empty(),
            "not divisible by z_{} - z_{}",
            a + 1,
            b + 1
        );
        quot
    }

    pub fn eval(&self, z: &[Rational]) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (e, c)| {
            acc + e.iter().zip(z).fold(c.clone(), |m, (&ei, zi)| {
                m * num::pow(zi.clone(), ei as usize)
            })
        })
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }
}

pub fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn sign(p: &[usize]) -> i64 {
        let inv = (0..p.len())
            .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..k).collect();
    permute_all(&mut p, 0, &mut out);
    out.into_iter()
        .map(|p| {
            let s = sign(&p);
            (p, s)
        })
        .collect()
}

fn permute_all(p: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if start == p.len() {
        out.push(p.clone());
        return;
    }
    for i in start..p.len() {
        p.swap(start, i);
        permute_all(p, start + 1, out);
        p.swap(start, i);
    }
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// `v_λ(t)` from the closed form `Π (1 - t^n)/(1 - t)`, or `Π m!` at `t = 1`.
pub fn v_lambda_closed(parts: &[u32], t: &Rational) -> Rational {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &p in parts {
        *counts.entry(p).or_default() += 1;
    }
    let mut out = Rational::one();
    for &m in counts.values() {
        if t.is_one() {
            out *= int(factorial(m));
        } else {
            for n in 1..=m {
                out *= (Rational::one() - num::pow(t.clone(), n)) / (Rational::one() - t.clone());
            }
        }
    }
    out
}

/// Monomial expansion of `P_λ(z; t)`: antisymmetrize `z^λ Π_{i<j}(z_i - t z_j)`,
/// divide exactly by the Vandermonde product, then by `v_λ(t)`.
pub fn hall_littlewood_expansion(parts: &[u32], t: &Rational) -> Poly {
    let k = parts.len();
    let mut seed = Poly::monomial(parts.to_vec(), Rational::one());
    for i in 0..k {
        for j in i + 1..k {
            let mut ei = vec![0; k];
            ei[i] = 1;
            let mut ej = vec![0; k];
            ej[j] = 1;
            let factor = Poly::monomial(ei, Rational::one()).add(&Poly::monomial(ej, -t.clone()));
            seed = seed.mul(&factor);
        }
    }
    let mut numerator = Poly::zero(k);
    for (perm, sign) in permutations(k) {
        numerator = numerator.add(&seed.permute(&perm).scale(&int(sign)));
    }
    for i in 0..k {
        for j in i + 1..k {
            numerator = numerator.div_difference(i, j);
        }
    }
    numerator.scale(&(Rational::one() / v_lambda_closed(parts, t)))
}

/// Schur polynomial as the bialternant `det(z_i^{λ_j + k - j}) / det(z_i^{k - j})`.
pub fn schur(parts: &[u32], z: &[Rational]) -> Rational {
    let k = parts.len();
    let alternant = |shift: &dyn Fn(usize) -> u32| {
        permutations(k)
            .into_iter()
            .fold(Rational::zero(), |acc, (perm, sign)| {
                let term = (0..k).fold(int(sign), |m, j| {
                    m * num::pow(z[perm[j]].clone(), shift(j) as usize)
                });
                acc + term
            })
    };
    alternant(&|j| parts[j] + (k - 1 - j) as u32) / alternant(&|j| (k - 1 - j) as u32)
}

/// Monomial symmetric polynomial: the sum of `z^μ` over distinct
/// rearrangements `μ` of `λ`.
pub fn monomial_symmetric(parts: &[u32], z: &[Rational]) -> Rational {
    let k = parts.len();
    let mut seen = std::collections::BTreeSet::new();
    for (perm, _) in permutations(k) {
        let mu: Vec<u32> = perm.iter().map(|&p| parts[p]).collect();
        seen.insert(mu);
    }
    seen.into_iter()
        .map(|mu| {
            mu.iter().zip(z).fold(Rational::one(), |m, (&e, zi)| {
                m * num::pow(zi.clone(), e as usize)
            })
        })
        .sum()
}

/// Periodic `H̃ f(x) = Σ_i (f(x - v_i) - f(x)) + #{i < j : x_i ≡ x_j mod L} f(x)`,
/// written directly from the delta-interaction count.
pub fn h_tilde(f: &LatticeFunction<Rational>, x: &LatticePoint, l: i64) -> Rational {
    let k = x.dim();
    let fx = f.eval(x);
    let mut out = Rational::zero();
    for i in 1..=k {
        out += f.eval(&x.shifted(i, -1)) - fx.clone();
    }
    let c = x.coords();
    let coincidences = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .filter(|&(i, j)| (c[i] - c[j]).rem_euclid(l) == 0)
        .count();
    out + int(coincidences as i64) * fx
}
