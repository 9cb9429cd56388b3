//! Deterministic pseudo-random test data: rationals, lattice functions defined
//! on all of `X`, and sparse Laurent polynomials.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::function::LatticeFunction;
use crate::laurent::LaurentPolynomial;
use crate::scalar::{ratio, Rational};
use crate::weyl::LatticePoint;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational `a/b` with `|a| <= max_num` and `1 <= b <= max_den`.
pub fn rational(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rational {
    ratio(
        rng.gen_range(-max_num..=max_num),
        rng.gen_range(1..=max_den),
    )
}

pub fn nonzero_rational(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rational {
    loop {
        let r = rational(rng, max_num, max_den);
        if r != Rational::from_integer(0.into()) {
            return r;
        }
    }
}

/// `k` pairwise distinct nonzero rationals.
pub fn distinct_nonzero(rng: &mut impl Rng, k: usize, max_num: i64, max_den: i64) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(k);
    while out.len() < k {
        let r = nonzero_rational(rng, max_num, max_den);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

fn mix(seed: u64, x: &LatticePoint) -> u64 {
    // splitmix64 finalizer folded over the coordinates
    let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
    for &c in x.coords() {
        h = h.wrapping_add(c as u64).wrapping_add(0x9e37_79b9_7f4a_7c15);
        h = (h ^ (h >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        h = (h ^ (h >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        h ^= h >> 31;
    }
    h
}

/// A function whose value at each point is an independent pseudo-random
/// rational determined by `(seed, x)`.
pub fn lattice_function(seed: u64) -> LatticeFunction<Rational> {
    LatticeFunction::new(move |x| rational(&mut rng(mix(seed, x)), 9, 9))
}

/// A sparse polynomial with up to `terms` monomials, exponents in `[-2, 2]`.
pub fn laurent(rng: &mut impl Rng, k: usize, terms: usize) -> LaurentPolynomial {
    let n = rng.gen_range(1..=terms);
    LaurentPolynomial::from_terms(
        k,
        (0..n).map(|_| {
            let x = LatticePoint::new((0..k).map(|_| rng.gen_range(-2..=2)).collect());
            (x, rational(rng, 6, 4))
        }),
    )
}
