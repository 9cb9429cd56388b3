use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::signed_permutations;

/// A partition `λ_1 >= λ_2 >= … >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParams(format!(
                "{parts:?} is not a partition"
            )));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }

    /// The parts padded with zeros to length `k`.
    pub fn padded(&self, k: usize) -> Result<Vec<i64>> {
        if self.length() > k {
            return Err(Error::Dimension {
                expected: k,
                got: self.length(),
            });
        }
        let mut v: Vec<i64> = self.0.iter().copied().filter(|&p| p > 0).collect();
        v.resize(k, 0);
        Ok(v)
    }

    /// Every partition of `n` with at most `max_len` parts, padded to `max_len`.
    pub fn all_of_size(n: i64, max_len: usize) -> Vec<Partition> {
        fn go(n: i64, max_part: i64, slots: usize, acc: &mut Vec<i64>, out: &mut Vec<Partition>) {
            if slots == 0 {
                if n == 0 {
                    out.push(Partition(acc.clone()));
                }
                return;
            }
            for part in (0..=n.min(max_part)).rev() {
                acc.push(part);
                go(n - part, part, slots - 1, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, max_len, &mut Vec::new(), &mut out);
        out
    }
}

/// `v_λ(t) = Π_{a} Π_{n=1}^{m_a} (1 - t^n)/(1 - t)` over the multiplicities
/// `m_a` of every value in the padded part vector, zero included. Each factor
/// is expanded as `1 + t + … + t^{n-1}`, which is also correct at `t = 1`.
pub fn v_lambda<S: Scalar>(parts: &[i64], t: &S) -> S {
    let mut sorted = parts.to_vec();
    sorted.sort_unstable();
    let mut out = S::one();
    let mut run = 0;
    for (idx, value) in sorted.iter().enumerate() {
        run += 1;
        let closes = idx + 1 == sorted.len() || sorted[idx + 1] != *value;
        if closes {
            for n in 1..=run {
                let q = (0..n).fold(S::zero(), |acc, r| acc + t.powi(r));
                out = out * q;
            }
            run = 0;
        }
    }
    out
}

/// `R_λ(z; t) = Σ_σ Π_{i<j} (z_σ(i) - t z_σ(j))/(z_σ(i) - z_σ(j)) Π_i z_σ(i)^{λ_i}`
/// for an arbitrary integer exponent tuple `λ`.
pub fn hall_littlewood_r<S: Scalar>(exponents: &[i64], z: &[S], t: &S) -> Result<S> {
    let k = z.len();
    if exponents.len() != k {
        return Err(Error::Dimension {
            expected: k,
            got: exponents.len(),
        });
    }
    for i in 0..k {
        for j in i + 1..k {
            if z[i] == z[j] {
                return Err(Error::Coincident { i, j });
            }
        }
    }
    let mut total = S::zero();
    for (sigma, _) in signed_permutations(k) {
        let mut term = S::one();
        for i in 0..k {
            for j in i + 1..k {
                let (a, b) = (&z[sigma[i]], &z[sigma[j]]);
                term = term * (a.clone() - t.clone() * b.clone()) / (a.clone() - b.clone());
            }
        }
        for (i, &e) in exponents.iter().enumerate() {
            term = term * z[sigma[i]].powi(e);
        }
        total = total + term;
    }
    Ok(total)
}

/// `P_λ(z; t) = R_λ(z; t) / v_λ(t)`.
pub fn hall_littlewood_p<S: Scalar>(lambda: &Partition, z: &[S], t: &S) -> Result<S> {
    let parts = lambda.padded(z.len())?;
    let v = v_lambda(&parts, t);
    if v.is_zero() {
        return Err(Error::InvalidParams("v_λ(t) vanishes at this t".into()));
    }
    Ok(hall_littlewood_r(&parts, z, t)? / v)
}
