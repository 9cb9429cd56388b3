//! Lazily evaluated functions `X → S` with optional transparent memoization.

use std::fmt;
use std::sync::Arc;

use dashmap::DashMap;

use crate::scalar::Scalar;
use crate::weyl::{AffineWeylElement, LatticePoint};

type Evaluator<S> = dyn Fn(&LatticePoint) -> S + Send + Sync;

struct Inner<S> {
    eval: Box<Evaluator<S>>,
    memo: Option<DashMap<LatticePoint, S>>,
}

/// An element of `F(X)`. Cloning is cheap and shares the memo table.
pub struct LatticeFunction<S> {
    inner: Arc<Inner<S>>,
}

impl<S> Clone for LatticeFunction<S> {
    fn clone(&self) -> Self {
        Self {
            inner: Arc::clone(&self.inner),
        }
    }
}

impl<S> fmt::Debug for LatticeFunction<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LatticeFunction")
            .field("memoized", &self.inner.memo.is_some())
            .finish()
    }
}

impl<S: Scalar> LatticeFunction<S> {
    pub fn new(eval: impl Fn(&LatticePoint) -> S + Send + Sync + 'static) -> Self {
        Self {
            inner: Arc::new(Inner {
                eval: Box::new(eval),
                memo: None,
            }),
        }
    }

    /// Like [`LatticeFunction::new`] but caches every value it computes.
    pub fn memoized(eval: impl Fn(&LatticePoint) -> S + Send + Sync + 'static) -> Self {
        Self {
            inner: Arc::new(Inner {
                eval: Box::new(eval),
                memo: Some(DashMap::new()),
            }),
        }
    }

    pub fn constant(c: S) -> Self {
        Self::new(move |_| c.clone())
    }

    pub fn eval(&self, x: &LatticePoint) -> S {
        let Some(memo) = &self.inner.memo else {
            return (self.inner.eval)(x);
        };
        if let Some(v) = memo.get(x) {
            return v.clone();
        }
        // no shard lock is held while evaluating, so recursive evaluation
        // through other functions cannot deadlock
        let v = (self.inner.eval)(x);
        memo.insert(x.clone(), v.clone());
        v
    }

    pub fn is_memoized(&self) -> bool {
        self.inner.memo.is_some()
    }

    pub fn cached_points(&self) -> usize {
        self.inner.memo.as_ref().map_or(0, DashMap::len)
    }

    /// A memoizing wrapper around this function.
    pub fn cached(&self) -> Self {
        let f = self.clone();
        Self::memoized(move |x| f.eval(x))
    }

    /// `(t_v f)(x) = f(x - v)`.
    pub fn shift(&self, v: &LatticePoint) -> Self {
        let f = self.clone();
        let v = v.clone();
        Self::new(move |x| f.eval(&x.sub(&v)))
    }

    /// `(w f)(x) = f(w^{-1} x)`.
    pub fn act(&self, w: &AffineWeylElement) -> Self {
        let f = self.clone();
        let w_inv = w.inverse();
        Self::new(move |x| f.eval(&w_inv.act(x)))
    }

    pub fn scale(&self, c: S) -> Self {
        let f = self.clone();
        Self::new(move |x| c.clone() * f.eval(x))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (f, g) = (self.clone(), other.clone());
        Self::new(move |x| f.eval(x) + g.eval(x))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (f, g) = (self.clone(), other.clone());
        Self::new(move |x| f.eval(x) - g.eval(x))
    }
}

/// `(w f)(v) = f(w^{-1} v)`.
pub fn act_on_function<S: Scalar>(
    w: &AffineWeylElement,
    f: &LatticeFunction<S>,
) -> LatticeFunction<S> {
    f.act(w)
}
