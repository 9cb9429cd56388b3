//! The propagation operator `G(f)(x) = (w_x^{-1} Q_{w_x} f)(x) = (Q_{w_x} f)(w_x x)`,
//! which carries eigenfunctions of `Σ_i t_{v_i}` to eigenfunctions of `H`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::function::LatticeFunction;
use crate::hamiltonian::d_plus;
use crate::hecke::q_operator;
use crate::scalar::Scalar;
use crate::weyl::{LatticePoint, Params, ReducedWord};

/// Holds `f` and every partial product `Q_{i_j} ⋯ Q_{i_m} f` built so far,
/// keyed by the word suffix, so that evaluating `G(f)` over a window reuses
/// the memo tables of shared suffixes.
pub struct Propagator<S> {
    params: Params,
    base: LatticeFunction<S>,
    suffixes: Mutex<HashMap<Vec<usize>, LatticeFunction<S>>>,
}

impl<S: Scalar> Propagator<S> {
    pub fn new(f: &LatticeFunction<S>, params: &Params) -> Arc<Self> {
        Arc::new(Self {
            params: params.clone(),
            base: f.clone(),
            suffixes: Mutex::new(HashMap::new()),
        })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// `Q_w f` for the given word.
    pub fn q_word(&self, word: &ReducedWord) -> LatticeFunction<S> {
        self.suffix(word.letters())
    }

    fn suffix(&self, letters: &[usize]) -> LatticeFunction<S> {
        if letters.is_empty() {
            return self.base.clone();
        }
        if let Some(g) = self.suffixes.lock().unwrap().get(letters) {
            return g.clone();
        }
        let inner = self.suffix(&letters[1..]);
        let g = q_operator(&self.params, letters[0], &inner)
            .expect("letters come from shortest_element");
        self.suffixes
            .lock()
            .unwrap()
            .entry(letters.to_vec())
            .or_insert(g)
            .clone()
    }

    /// `G(f)(x)`.
    pub fn eval(&self, x: &LatticePoint) -> S {
        let (w, word) = self.params.lattice.shortest_element(x);
        self.q_word(&word).eval(&w.act(x))
    }

    /// `G(f)` as a memoized lattice function.
    pub fn function(self: &Arc<Self>) -> LatticeFunction<S> {
        let this = Arc::clone(self);
        LatticeFunction::memoized(move |x| this.eval(x))
    }
}

/// `G(f)`.
pub fn propagate<S: Scalar>(f: &LatticeFunction<S>, params: &Params) -> LatticeFunction<S> {
    Propagator::new(f, params).function()
}

/// `g_p(x) = Π_i p_i^{-x_i}`, an eigenfunction of `Σ_i t_{v_i}` with
/// eigenvalue `Σ_i p_i`.
pub fn plane_wave<S: Scalar>(p: &[S]) -> Result<LatticeFunction<S>> {
    if let Some(pos) = p.iter().position(|pi| pi.is_zero()) {
        return Err(Error::ZeroSpectral(pos));
    }
    let p = p.to_vec();
    Ok(LatticeFunction::new(move |x: &LatticePoint| {
        p.iter()
            .zip(x.coords())
            .fold(S::one(), |acc, (pi, &xi)| acc * pi.powi(-xi))
    }))
}

/// Both sides of the key lemma at `(x, i)`:
/// `((t_{v_i} - α d_i^+) G f)(x)` and
/// `((t_{v_σ(i)} + (1-β) Σ_{j=1}^{d_i^+(x)} t_{v_{σ(i)+j}}) Q_{w_x} f)(w_x x)`,
/// where `v_σ(i)` is the image of `v_i` under the linear part of `w_x`.
pub fn lemma_main_sides<S: Scalar>(
    prop: &Arc<Propagator<S>>,
    g: &LatticeFunction<S>,
    x: &LatticePoint,
    i: usize,
) -> (S, S) {
    let params = prop.params();
    let lt = params.lattice;
    let alpha = S::from_rational(&params.alpha);
    let one_minus_beta = S::one() - S::from_rational(&params.beta);
    let d = d_plus(&lt, i, x);

    let lhs = g.eval(&x.shifted(i, -1)) - alpha * S::from_int(d as i64) * g.eval(x);

    let (w, word) = lt.shortest_element(x);
    let q = prop.q_word(&word);
    let z = w.act(x);
    let sigma = w.linear_image(i);
    let tail = (1..=d).fold(S::zero(), |acc, j| {
        acc + q.eval(&z.shifted(lt.wrap((sigma + j) as i64), -1))
    });
    let rhs = q.eval(&z.shifted(sigma, -1)) + one_minus_beta * tail;
    (lhs, rhs)
}

/// Checks the key lemma at `(x, i)` exactly. `g` must be `prop.function()`
/// (passed in so callers share its memo across a window).
pub fn verify_lemma_main<S: Scalar>(
    prop: &Arc<Propagator<S>>,
    g: &LatticeFunction<S>,
    x: &LatticePoint,
    i: usize,
) -> bool {
    let (lhs, rhs) = lemma_main_sides(prop, g, x, i);
    lhs == rhs
}
