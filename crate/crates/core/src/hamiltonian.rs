//! The counting functions `d_i^±` and the deformed Hamiltonian
//! `H = Σ_i β^{d_i^-} (t_{v_i} - α d_i^+)`.

use crate::function::LatticeFunction;
use crate::scalar::Scalar;
use crate::weyl::{Lattice, LatticePoint, Params};

fn in_nonpositive_multiples(value: i64, l: i64) -> bool {
    value <= 0 && value % l == 0
}

/// `d_i^+(x) = #{1 <= p < k | Σ_{j=i}^{i+p-1} a_j(x) ∈ L·Z_{<=0}}`, simple
/// root indices read mod `k`.
pub fn d_plus(lattice: &Lattice, i: usize, x: &LatticePoint) -> usize {
    let k = lattice.k();
    let mut sum = 0;
    let mut count = 0;
    for p in 1..k {
        sum += lattice.simple_value((i + p - 1) % k, x);
        if in_nonpositive_multiples(sum, lattice.l()) {
            count += 1;
        }
    }
    count
}

/// `d_i^-(x) = #{1 <= p < k | Σ_{j=i-p}^{i-1} a_j(x) ∈ L·Z_{<=0}}`.
pub fn d_minus(lattice: &Lattice, i: usize, x: &LatticePoint) -> usize {
    let k = lattice.k();
    let mut sum = 0;
    let mut count = 0;
    for p in 1..k {
        sum += lattice.simple_value((i + k - p) % k, x);
        if in_nonpositive_multiples(sum, lattice.l()) {
            count += 1;
        }
    }
    count
}

fn apply_h_with<S: Scalar>(
    f: &LatticeFunction<S>,
    x: &LatticePoint,
    params: &Params,
    d_plus_bias: usize,
) -> S {
    let lt = &params.lattice;
    let alpha = S::from_rational(&params.alpha);
    let beta = S::from_rational(&params.beta);
    let fx = f.eval(x);
    (1..=lt.k()).fold(S::zero(), |acc, i| {
        let dp = d_plus(lt, i, x) + d_plus_bias;
        let dm = d_minus(lt, i, x);
        let term = f.eval(&x.shifted(i, -1)) - alpha.clone() * S::from_int(dp as i64) * fx.clone();
        acc + beta.powi(dm as i64) * term
    })
}

/// `(Hf)(x) = Σ_i β^{d_i^-(x)} (f(x - v_i) - α d_i^+(x) f(x))`.
pub fn apply_h<S: Scalar>(f: &LatticeFunction<S>, x: &LatticePoint, params: &Params) -> S {
    apply_h_with(f, x, params, 0)
}

/// `H` with every `d_i^+` overcounted by one; exists only so harnesses can
/// confirm that a broken operator is detected.
#[cfg(any(test, feature = "fault-injection"))]
pub fn apply_h_corrupted<S: Scalar>(
    f: &LatticeFunction<S>,
    x: &LatticePoint,
    params: &Params,
) -> S {
    apply_h_with(f, x, params, 1)
}

/// `H` as a lattice function.
pub fn hamiltonian<S: Scalar>(f: &LatticeFunction<S>, params: &Params) -> LatticeFunction<S> {
    let f = f.clone();
    let params = params.clone();
    LatticeFunction::new(move |x| apply_h(&f, x, &params))
}

/// Checks `d_i^±(s_j x)` against the three-case transformation rule:
/// unchanged for `i ≠ j, j+1`; `d_{j+1}^±(x) ± θ(a_j(x) = 0)` for `i = j`;
/// `d_j^±(x) ∓ θ(a_j(x) = 0)` for `i = j + 1` (indices mod `k`).
pub fn verify_d_change(lattice: &Lattice, x: &LatticePoint, i: usize, j: usize) -> bool {
    let k = lattice.k();
    let sx = lattice.reflect(&lattice.simple_root(j), x);
    let theta = (lattice.simple_value(j, x) == 0) as i64;
    // particle labels of the two strands exchanged by s_j
    let lower = lattice.wrap(j as i64);
    let upper = lattice.wrap(j as i64 + 1);

    let check = |d: fn(&Lattice, usize, &LatticePoint) -> usize, sign: i64| {
        let lhs = d(lattice, i, &sx) as i64;
        let rhs = if i % k == j % k {
            d(lattice, upper, x) as i64 + sign * theta
        } else if i == upper {
            d(lattice, lower, x) as i64 - sign * theta
        } else {
            d(lattice, i, x) as i64
        };
        lhs == rhs
    };
    check(d_plus, 1) && check(d_minus, -1)
}
