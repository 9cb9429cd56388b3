//! The group algebra `C[X]` as sparse Laurent polynomials in `e^{v_1}, …, e^{v_k}`
//! with exact rational coefficients, the divided-difference operators `Ť_i`
//! and the pairing `(f, p) = (p f)(0)` with lattice functions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::function::LatticeFunction;
use crate::scalar::{int, Rational};
use crate::weyl::{AffineWeylElement, LatticePoint, Params};

/// `Σ c_x e^x`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    k: usize,
    terms: BTreeMap<LatticePoint, Rational>,
}

impl LaurentPolynomial {
    pub fn zero(k: usize) -> Self {
        Self {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(k: usize) -> Self {
        Self::monomial(LatticePoint::zero(k), int(1))
    }

    pub fn monomial(x: LatticePoint, c: Rational) -> Self {
        let mut p = Self::zero(x.dim());
        p.add_term(x, c);
        p
    }

    pub fn from_terms(k: usize, terms: impl IntoIterator<Item = (LatticePoint, Rational)>) -> Self {
        let mut p = Self::zero(k);
        for (x, c) in terms {
            p.add_term(x, c);
        }
        p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticePoint, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x: &LatticePoint) -> Rational {
        self.terms.get(x).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, x: LatticePoint, c: Rational) {
        debug_assert_eq!(x.dim(), self.k);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(x);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.k);
        }
        Self {
            k: self.k,
            terms: self.terms.iter().map(|(x, a)| (x.clone(), a * c)).collect(),
        }
    }

    /// Multiplication by the monomial `e^v`.
    pub fn shift(&self, v: &LatticePoint) -> Self {
        Self {
            k: self.k,
            terms: self
                .terms
                .iter()
                .map(|(x, a)| (x.add(v), a.clone()))
                .collect(),
        }
    }

    /// Substitutes each `e^{v_i}` by a rational value; negative exponents
    /// invert.
    pub fn evaluate(&self, z: &[Rational]) -> Rational {
        use crate::scalar::Scalar;
        self.terms
            .iter()
            .map(|(x, c)| {
                x.coords()
                    .iter()
                    .zip(z)
                    .fold(c.clone(), |acc, (&e, zi)| acc * zi.powi(e))
            })
            .fold(Rational::zero(), |a, b| a + b)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (x, c) in &rhs.terms {
            out.add_term(x.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (x, c) in &rhs.terms {
            out.add_term(x.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero(self.k);
        for (x, a) in &self.terms {
            for (y, b) in &rhs.terms {
                out.add_term(x.add(y), a * b);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(x, c)| format!("({c})e^{x}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `w(e^x) = e^{w x}`, extended linearly. Translations act on exponents
/// affinely, so this is a ring automorphism only for `w` in the finite Weyl
/// group.
pub fn weyl_act_poly(w: &AffineWeylElement, p: &LaurentPolynomial) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(p.k, p.terms.iter().map(|(x, c)| (w.act(x), c.clone())))
}

/// `π̌ p`.
pub fn apply_pi_check(params: &Params, p: &LaurentPolynomial) -> LaurentPolynomial {
    weyl_act_poly(&params.lattice.pi(), p)
}

/// `(1 - s_i) p / (1 - e^{v_{i+1} - v_i})`, computed monomial by monomial as
/// a telescoping geometric sum.
fn divided_difference(params: &Params, i: usize, p: &LaurentPolynomial) -> LaurentPolynomial {
    let lt = params.lattice;
    let a = lt.simple_root(i);
    let mut out = LaurentPolynomial::zero(p.k);
    for (x, c) in p.terms() {
        let n = lt.eval_root(&a, x);
        if n > 0 {
            for j in 0..n {
                out.add_term(x.shifted(i, -j).shifted(i + 1, j), c.clone());
            }
        } else if n < 0 {
            // e^{s_i x} (1 - e^{|n| u}) / (1 - e^u) with u = v_{i+1} - v_i
            let sx = lt.reflect(&a, x);
            for j in 0..-n {
                out.add_term(sx.shifted(i, -j).shifted(i + 1, j), -c.clone());
            }
        }
    }
    out
}

/// `Ť_i = s_i + (α e^{v_{i+1}} + 1 - β)/(1 - e^{-v_i + v_{i+1}}) (1 - s_i)`
/// for `1 <= i < k`, evaluated without leaving the polynomial ring.
pub fn apply_t_check(
    params: &Params,
    i: usize,
    p: &LaurentPolynomial,
) -> Result<LaurentPolynomial> {
    let lt = params.lattice;
    if i == 0 || i >= lt.k() {
        return Err(Error::Index {
            index: i,
            range: "1..k",
        });
    }
    let s = lt.simple_reflection(i);
    let reflected = weyl_act_poly(&s, p);
    let quotient = divided_difference(params, i, p);

    // the quotient times (1 - e^u) must reproduce (1 - s_i) p exactly
    let u = lt.basis(i + 1).sub(&lt.basis(i));
    let numerator = p - &reflected;
    let check = &quotient - &quotient.shift(&u);
    if check != numerator {
        return Err(Error::Internal(format!(
            "divided difference D_{i} left a remainder on {p}"
        )));
    }

    let mut factor = LaurentPolynomial::monomial(lt.basis(i + 1), params.alpha.clone());
    factor.add_term(LatticePoint::zero(lt.k()), Rational::one() - &params.beta);
    Ok(&reflected + &(&factor * &quotient))
}

/// `(f, p) = (p f)(0)` with `e^x f = t_{-x} f`, so `(f, e^x) = f(x)`.
pub fn pairing(f: &LatticeFunction<Rational>, p: &LaurentPolynomial) -> Rational {
    p.terms()
        .fold(Rational::zero(), |acc, (x, c)| acc + c * f.eval(x))
}
