//! Integral-reflection operators `Q_i` on `F(X)`. Together with `π` they
//! realize the affine Hecke algebra: `Q_i` satisfy the quadratic relation
//! `(Q_i - 1)(Q_i + β) = 0` and the braid relations, `Q_0 = π^{-1} Q_1 π`.

use crate::error::{Error, Result};
use crate::function::LatticeFunction;
use crate::scalar::Scalar;
use crate::weyl::{LatticePoint, Params, ReducedWord};

/// `Q_i` for `1 <= i < k`, given by the explicit three-case formula:
///
/// * `a_i(x) > 0`: `f(s_i x) + Σ_{j=1}^{a_i(x)} (α f(s_i x + j a_i^∨ + v_{i+1}) + (1-β) f(s_i x + j a_i^∨))`
/// * `a_i(x) = 0`: `f(x)`
/// * `a_i(x) < 0`: `f(s_i x) - Σ_{j=0}^{-a_i(x)-1} (α f(s_i x - j a_i^∨ + v_{i+1}) + (1-β) f(s_i x - j a_i^∨))`
///
/// The result memoizes its values.
pub fn apply_q<S: Scalar>(
    params: &Params,
    i: usize,
    f: &LatticeFunction<S>,
) -> Result<LatticeFunction<S>> {
    let lt = params.lattice;
    if i == 0 || i >= lt.k() {
        return Err(Error::Index {
            index: i,
            range: "1..k",
        });
    }
    let alpha = S::from_rational(&params.alpha);
    let one_minus_beta = S::one() - S::from_rational(&params.beta);
    let root = lt.simple_root(i);
    let f = f.clone();
    Ok(LatticeFunction::memoized(move |x: &LatticePoint| {
        let n = lt.eval_root(&root, x);
        if n == 0 {
            return f.eval(x);
        }
        let sx = lt.reflect(&root, x);
        // y_j = s_i x ± j a_i^∨ with a_i^∨ = v_i - v_{i+1}; α and 1 - β are
        // applied once per sum
        let (mut shifted, mut plain) = (S::zero(), S::zero());
        let steps: Box<dyn Iterator<Item = i64>> = if n > 0 {
            Box::new(1..=n)
        } else {
            Box::new((0..-n).map(|j| -j))
        };
        for j in steps {
            let y = sx.shifted(i, j).shifted(i + 1, -j);
            shifted = shifted + f.eval(&y.shifted(i + 1, 1));
            plain = plain + f.eval(&y);
        }
        let sum = alpha.clone() * shifted + one_minus_beta.clone() * plain;
        if n > 0 {
            f.eval(&sx) + sum
        } else {
            f.eval(&sx) - sum
        }
    }))
}

/// `Q_0 = π^{-1} Q_1 π`, i.e. `(Q_0 f)(x) = (Q_1 (π f))(π x)`.
pub fn apply_q0<S: Scalar>(params: &Params, f: &LatticeFunction<S>) -> LatticeFunction<S> {
    let pi = params.lattice.pi();
    let inner = apply_q(params, 1, &f.act(&pi)).expect("k >= 2 always has Q_1");
    LatticeFunction::memoized(move |x| inner.eval(&pi.act(x)))
}

/// `Q_i` for any `0 <= i < k`.
pub fn q_operator<S: Scalar>(
    params: &Params,
    i: usize,
    f: &LatticeFunction<S>,
) -> Result<LatticeFunction<S>> {
    if i == 0 {
        Ok(apply_q0(params, f))
    } else {
        apply_q(params, i, f)
    }
}

/// `Q_w = Q_{i_1} ⋯ Q_{i_m}` for the word `s_{i_1} ⋯ s_{i_m}`; `Q_{i_m}` acts first.
pub fn apply_qw<S: Scalar>(
    params: &Params,
    word: &ReducedWord,
    f: &LatticeFunction<S>,
) -> Result<LatticeFunction<S>> {
    word.letters()
        .iter()
        .rev()
        .try_fold(f.clone(), |g, &i| q_operator(params, i, &g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{apply_t_check, pairing, LaurentPolynomial};
    use crate::scalar::{int, ratio, Rational};

    fn pt(c: &[i64]) -> LatticePoint {
        LatticePoint::new(c.to_vec())
    }

    fn sample(k: usize) -> LatticeFunction<Rational> {
        LatticeFunction::new(move |x: &LatticePoint| {
            let c = x.coords();
            let s: i64 = c
                .iter()
                .enumerate()
                .map(|(n, v)| (n as i64 + 2) * v * v - 3 * v)
                .sum();
            ratio(s + 7, (c[0] - c[k - 1]).abs() + 1)
        })
    }

    #[test]
    fn fixed_on_walls() {
        let pr = Params::new(3, 2, ratio(1, 3), ratio(5, 2)).unwrap();
        let f = sample(3);
        let q2 = apply_q(&pr, 2, &f).unwrap();
        let x = pt(&[4, 1, 1]);
        assert_eq!(q2.eval(&x), f.eval(&x));
    }

    #[test]
    fn single_step_k2() {
        let alpha = ratio(-2, 3);
        let beta = ratio(7, 4);
        let pr = Params::new(2, 2, alpha.clone(), beta.clone()).unwrap();
        let f = sample(2);
        let q = apply_q(&pr, 1, &f).unwrap();
        let expected = f.eval(&pt(&[0, 1]))
            + alpha * f.eval(&pt(&[1, 1]))
            + (int(1) - beta) * f.eval(&pt(&[1, 0]));
        assert_eq!(q.eval(&pt(&[1, 0])), expected);
    }

    #[test]
    fn dual_to_t_check() {
        let pr = Params::new(3, 2, ratio(2, 5), ratio(-1, 3)).unwrap();
        let f = sample(3);
        for i in 1..3 {
            let q = apply_q(&pr, i, &f).unwrap();
            for x in pr.lattice.window(2) {
                let t =
                    apply_t_check(&pr, i, &LaurentPolynomial::monomial(x.clone(), int(1))).unwrap();
                assert_eq!(q.eval(&x), pairing(&f, &t), "i={i} x={x}");
            }
        }
    }

    #[test]
    fn q0_fixed_on_affine_wall() {
        let pr = Params::new(2, 2, ratio(1, 2), ratio(3, 2)).unwrap();
        let f = sample(2);
        let q0 = apply_q0(&pr, &f);
        // a_0(x) = x_2 - x_1 + 2 = 0
        for x in [pt(&[2, 0]), pt(&[3, 1]), pt(&[-1, -3])] {
            assert_eq!(q0.eval(&x), f.eval(&x));
        }
    }

    #[test]
    fn words() {
        let pr = Params::new(3, 2, ratio(1, 2), ratio(3, 2)).unwrap();
        let f = sample(3);
        let empty = apply_qw(&pr, &ReducedWord::default(), &f).unwrap();
        let single = apply_qw(&pr, &ReducedWord::new(vec![1]), &f).unwrap();
        let q1 = apply_q(&pr, 1, &f).unwrap();
        for x in pr.lattice.window(2) {
            assert_eq!(empty.eval(&x), f.eval(&x));
            assert_eq!(single.eval(&x), q1.eval(&x));
        }
        assert!(apply_q(&pr, 3, &f).is_err());
    }
}
