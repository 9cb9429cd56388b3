//! The lattice `X = Z^k`, the affine root system of type `A_{k-1}^(1)` with
//! null root `L·δ`, and the (extended) affine Weyl group acting on it.
//!
//! Particle indices are 1-based (`1..=k`) throughout the public API, and the
//! simple reflections are labelled `0..k` with `s_0` the affine one.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::scalar::{parse_rational, Rational};

/// Particle number `k` together with the system size `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    k: usize,
    l: i64,
}

impl Lattice {
    pub fn new(k: usize, l: i64) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParams(format!("k = {k} must be at least 2")));
        }
        if l < 1 {
            return Err(Error::InvalidParams(format!("L = {l} must be at least 1")));
        }
        Ok(Self { k, l })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    /// The same root datum at level `2L`. A point `y ∈ ½X` at level `L` is
    /// encoded as `2y ∈ X` at level `2L`; roots keep their labels and every
    /// sign test is preserved.
    pub fn doubled(&self) -> Self {
        Self {
            k: self.k,
            l: 2 * self.l,
        }
    }

    /// Simple root `a_i`: `a_0 = -α_{1k} + Lδ`, `a_i = α_{i,i+1}`.
    pub fn simple_root(&self, i: usize) -> AffineRoot {
        assert!(
            i < self.k,
            "simple root index {i} out of range 0..{}",
            self.k
        );
        if i == 0 {
            AffineRoot {
                i: self.k,
                j: 1,
                m: 1,
            }
        } else {
            AffineRoot { i, j: i + 1, m: 0 }
        }
    }

    pub fn eval_root(&self, a: &AffineRoot, x: &LatticePoint) -> i64 {
        x[a.i] - x[a.j] + a.m * self.l
    }

    /// `a_i(x)` for a simple root.
    pub fn simple_value(&self, i: usize, x: &LatticePoint) -> i64 {
        self.eval_root(&self.simple_root(i), x)
    }

    /// Reflection in the hyperplane `a = 0`: `x - a(x)(v_i - v_j)`.
    pub fn reflect(&self, a: &AffineRoot, x: &LatticePoint) -> LatticePoint {
        let n = self.eval_root(a, x);
        let mut y = x.clone();
        y[a.i] -= n;
        y[a.j] += n;
        y
    }

    pub fn is_dominant(&self, x: &LatticePoint) -> bool {
        (0..self.k).all(|i| self.simple_value(i, x) >= 0)
    }

    pub fn identity(&self) -> AffineWeylElement {
        AffineWeylElement {
            perm: (0..self.k).collect(),
            trans: vec![0; self.k],
            l: self.l,
        }
    }

    /// `s_i` as a group element, `0 <= i < k`.
    pub fn simple_reflection(&self, i: usize) -> AffineWeylElement {
        assert!(
            i < self.k,
            "simple reflection index {i} out of range 0..{}",
            self.k
        );
        let mut w = self.identity();
        if i == 0 {
            w.perm.swap(0, self.k - 1);
            w.trans[0] = 1;
            w.trans[self.k - 1] = -1;
        } else {
            w.perm.swap(i - 1, i);
        }
        w
    }

    /// The translation `t_{L·v}`; lies in `W` iff the entries of `v` sum to zero.
    pub fn translation(&self, v: &[i64]) -> AffineWeylElement {
        assert_eq!(v.len(), self.k);
        AffineWeylElement {
            perm: (0..self.k).collect(),
            trans: v.to_vec(),
            l: self.l,
        }
    }

    /// `π = t_{L v_1} s_1 ⋯ s_{k-1}`, the rotation of the affine diagram.
    pub fn pi(&self) -> AffineWeylElement {
        let mut w = self.translation(&unit(self.k, 1));
        for i in 1..self.k {
            w = w.compose(&self.simple_reflection(i));
        }
        w
    }

    pub fn word_element(&self, word: &ReducedWord) -> AffineWeylElement {
        word.letters().iter().fold(self.identity(), |acc, &i| {
            acc.compose(&self.simple_reflection(i))
        })
    }

    /// The shortest `w_x ∈ W` with `w_x x` dominant, together with a reduced
    /// word for it. Descends through the smallest index `i` with `a_i(x) < 0`.
    pub fn shortest_element(&self, x: &LatticePoint) -> (AffineWeylElement, ReducedWord) {
        let mut y = x.clone();
        let mut applied = Vec::new();
        while let Some(i) = (0..self.k).find(|&i| self.simple_value(i, &y) < 0) {
            y = self.reflect(&self.simple_root(i), &y);
            applied.push(i);
        }
        applied.reverse();
        let word = ReducedWord::new(applied);
        (self.word_element(&word), word)
    }

    /// `I(x) = {a ∈ R^+ | a(x) < 0}`, read off a reduced word `s_{i_1}⋯s_{i_r}`
    /// of `w_x` as `{s_{i_r}⋯s_{i_{p+1}}(a_{i_p})}`.
    pub fn inversion_set(&self, x: &LatticePoint) -> BTreeSet<AffineRoot> {
        let (_, word) = self.shortest_element(x);
        let letters = word.letters();
        let mut out = BTreeSet::new();
        for p in 0..letters.len() {
            let mut root = self.simple_root(letters[p]);
            for &q in &letters[p + 1..] {
                root = self.simple_reflection(q).act_on_root(&root);
            }
            out.insert(root);
        }
        out
    }

    /// Every lattice point with `|x_j| <= radius`, in lexicographic order.
    pub fn window(&self, radius: i64) -> Vec<LatticePoint> {
        (0..self.k)
            .map(|_| -radius..=radius)
            .multi_cartesian_product()
            .map(LatticePoint::new)
            .collect()
    }

    /// `X_reg`: points off every affine hyperplane, i.e. with pairwise
    /// distinct residues mod `L`.
    pub fn is_regular(&self, x: &LatticePoint) -> bool {
        (1..=self.k)
            .tuple_combinations()
            .all(|(i, j)| (x[i] - x[j]).rem_euclid(self.l) != 0)
    }

    /// `v_i` as a lattice point.
    pub fn basis(&self, i: usize) -> LatticePoint {
        LatticePoint::new(unit(self.k, i))
    }

    /// Reads a particle index modulo `k` into `1..=k`.
    pub fn wrap(&self, i: i64) -> usize {
        (i - 1).rem_euclid(self.k as i64) as usize + 1
    }
}

fn unit(k: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; k];
    v[i - 1] = 1;
    v
}

/// Model parameters: lattice data plus the couplings `α` and `β ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    pub lattice: Lattice,
    pub alpha: Rational,
    pub beta: Rational,
}

impl Params {
    pub fn new(k: usize, l: i64, alpha: Rational, beta: Rational) -> Result<Self> {
        use num::Zero;
        if beta.is_zero() {
            return Err(Error::InvalidParams("beta must be nonzero".into()));
        }
        Ok(Self {
            lattice: Lattice::new(k, l)?,
            alpha,
            beta,
        })
    }

    pub fn parse(k: usize, l: i64, alpha: &str, beta: &str) -> Result<Self> {
        Self::new(k, l, parse_rational(alpha)?, parse_rational(beta)?)
    }

    pub fn k(&self) -> usize {
        self.lattice.k()
    }

    pub fn l(&self) -> i64 {
        self.lattice.l()
    }
}

/// A point of `X`, stored as its coordinates `ε_1(x), …, ε_k(x)`.
/// Indexing is 1-based to match particle labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(k: usize) -> Self {
        Self(vec![0; k])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: i64) -> LatticePoint {
        Self(self.0.iter().map(|a| a * c).collect())
    }

    /// `x ± n·v_i` without allocating a basis vector.
    pub fn shifted(&self, i: usize, n: i64) -> LatticePoint {
        let mut y = self.clone();
        y[i] += n;
        y
    }
}

impl std::ops::Index<usize> for LatticePoint {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i - 1]
    }
}

impl std::ops::IndexMut<usize> for LatticePoint {
    fn index_mut(&mut self, i: usize) -> &mut i64 {
        &mut self.0[i - 1]
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// The affine root `α_{ij} + m·Lδ`, evaluating to `x_i - x_j + mL`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub i: usize,
    pub j: usize,
    pub m: i64,
}

impl AffineRoot {
    pub fn new(i: usize, j: usize, m: i64) -> Result<Self> {
        if i == j || i == 0 || j == 0 {
            return Err(Error::InvalidParams(format!(
                "invalid root indices ({i},{j})"
            )));
        }
        Ok(Self { i, j, m })
    }

    /// Positive with respect to the basis `a_0, …, a_{k-1}`.
    pub fn is_positive(&self) -> bool {
        self.m > 0 || (self.m == 0 && self.i < self.j)
    }

    pub fn negate(&self) -> Self {
        Self {
            i: self.j,
            j: self.i,
            m: -self.m,
        }
    }
}

/// An element `x ↦ σ·x + L·t` of the extended affine Weyl group, where
/// `σ` sends `v_i` to `v_{σ(i)}`. Membership in `W` requires `Σ t = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeylElement {
    perm: Vec<usize>,
    trans: Vec<i64>,
    l: i64,
}

impl AffineWeylElement {
    /// `perm` is 1-based: `perm[i-1] = σ(i)`.
    pub fn new(perm: Vec<usize>, trans: Vec<i64>, l: i64) -> Result<Self> {
        let k = perm.len();
        if trans.len() != k {
            return Err(Error::Dimension {
                expected: k,
                got: trans.len(),
            });
        }
        let mut seen = vec![false; k];
        for &p in &perm {
            if p == 0 || p > k || std::mem::replace(&mut seen[p - 1], true) {
                return Err(Error::InvalidParams(format!(
                    "{perm:?} is not a permutation"
                )));
            }
        }
        Ok(Self {
            perm: perm.into_iter().map(|p| p - 1).collect(),
            trans,
            l,
        })
    }

    pub fn k(&self) -> usize {
        self.perm.len()
    }

    /// `σ(i)`, 1-based: the linear part sends `v_i` to `v_{σ(i)}`.
    pub fn linear_image(&self, i: usize) -> usize {
        self.perm[i - 1] + 1
    }

    pub fn translation_part(&self) -> &[i64] {
        &self.trans
    }

    pub fn is_in_affine_weyl_group(&self) -> bool {
        self.trans.iter().sum::<i64>() == 0
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.trans.iter().all(|&t| t == 0)
    }

    pub fn act(&self, x: &LatticePoint) -> LatticePoint {
        let mut y = vec![0; self.k()];
        for (i, &p) in self.perm.iter().enumerate() {
            y[p] = x.0[i];
        }
        for (yi, t) in y.iter_mut().zip(&self.trans) {
            *yi += self.l * t;
        }
        LatticePoint(y)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.k(), other.k());
        assert_eq!(self.l, other.l);
        let perm = other.perm.iter().map(|&p| self.perm[p]).collect();
        let mut trans = self.trans.clone();
        for (i, &p) in self.perm.iter().enumerate() {
            trans[p] += other.trans[i];
        }
        Self {
            perm,
            trans,
            l: self.l,
        }
    }

    pub fn inverse(&self) -> Self {
        let k = self.k();
        let mut perm = vec![0; k];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p] = i;
        }
        let trans = (0..k).map(|i| -self.trans[self.perm[i]]).collect();
        Self {
            perm,
            trans,
            l: self.l,
        }
    }

    /// `(w·a)(x) = a(w^{-1} x)`.
    pub fn act_on_root(&self, a: &AffineRoot) -> AffineRoot {
        let si = self.perm[a.i - 1];
        let sj = self.perm[a.j - 1];
        AffineRoot {
            i: si + 1,
            j: sj + 1,
            m: a.m - self.trans[si] + self.trans[sj],
        }
    }

    /// `ℓ(w) = #(R^+ ∩ w^{-1} R^-)`, counted family by family: for each
    /// ordered pair `(i, j)` the roots `α_{ij} + mLδ` form an arithmetic
    /// progression in `m`, and `w` shifts `m` by a constant.
    pub fn length(&self) -> usize {
        let k = self.k();
        let mut total = 0i64;
        for i in 0..k {
            for j in 0..k {
                if i == j {
                    continue;
                }
                // positive roots α_{ij} + m with m >= m0
                let m0 = if i < j { 0 } else { 1 };
                let si = self.perm[i];
                let sj = self.perm[j];
                let shift = -self.trans[si] + self.trans[sj];
                // image α_{σi σj} + (m + shift) is negative iff
                // m + shift < 0, or m + shift == 0 with σi > σj
                let bound = if si > sj { -shift + 1 } else { -shift };
                total += (bound - m0).max(0);
            }
        }
        total as usize
    }
}

impl fmt::Display for AffineWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}; {}]",
            self.perm.iter().map(|p| p + 1).join(" "),
            self.trans.iter().join(" ")
        )
    }
}

/// A word `s_{i_1} ⋯ s_{i_r}` over the simple reflections `0..k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord(Vec<usize>);

impl ReducedWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        write!(f, "{}", self.0.iter().map(|i| format!("s{i}")).join(" "))
    }
}
