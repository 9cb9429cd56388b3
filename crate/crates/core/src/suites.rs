//! Named verification suites. Each one evaluates an identity at every point
//! of a window `|x_j| <= window` and collects the points where it fails.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::bethe::verify_hl_identity;
use crate::error::{Error, Result};
use crate::function::LatticeFunction;
use crate::hamiltonian::{apply_h, verify_d_change};
use crate::hecke::q_operator;
use crate::laurent::{apply_t_check, pairing, weyl_act_poly, LaurentPolynomial};
use crate::propagation::{lemma_main_sides, plane_wave, Propagator};
use crate::random;
use crate::scalar::{format_rational, int, Rational, Scalar};
use crate::weyl::{LatticePoint, Params};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Hecke,
    Duality,
    DChange,
    WInvariance,
    LemmaMain,
    Theorem,
    HlIdentity,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Hecke,
        Suite::Duality,
        Suite::DChange,
        Suite::WInvariance,
        Suite::LemmaMain,
        Suite::Theorem,
        Suite::HlIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hecke => "hecke",
            Suite::Duality => "duality",
            Suite::DChange => "d-change",
            Suite::WInvariance => "w-invariance",
            Suite::LemmaMain => "lemma-main",
            Suite::Theorem => "theorem",
            Suite::HlIdentity => "hl-identity",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub x: Vec<i64>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamsReport {
    pub k: usize,
    #[serde(rename = "L")]
    pub l: i64,
    pub alpha: String,
    pub beta: String,
}

impl From<&Params> for ParamsReport {
    fn from(p: &Params) -> Self {
        Self {
            k: p.k(),
            l: p.l(),
            alpha: format_rational(&p.alpha),
            beta: format_rational(&p.beta),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub suite: String,
    pub params: ParamsReport,
    pub window: i64,
    pub seed: u64,
    pub checks_run: u64,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub params: Params,
    pub window: i64,
    pub seed: u64,
    /// Replace `H` by an operator with `d_i^+` overcounted by one.
    #[cfg(any(test, feature = "fault-injection"))]
    pub corrupt_d_plus: bool,
}

impl VerifyConfig {
    pub fn new(suite: Suite, params: Params, window: i64, seed: u64) -> Self {
        Self {
            suite,
            params,
            window,
            seed,
            #[cfg(any(test, feature = "fault-injection"))]
            corrupt_d_plus: false,
        }
    }

    fn hamiltonian<S: Scalar>(&self, f: &LatticeFunction<S>, x: &LatticePoint) -> S {
        #[cfg(any(test, feature = "fault-injection"))]
        if self.corrupt_d_plus {
            return crate::hamiltonian::apply_h_corrupted(f, x, &self.params);
        }
        apply_h(f, x, &self.params)
    }
}

/// Outcome of the checks at one point.
#[derive(Default)]
struct PointResult {
    checks: u64,
    failures: Vec<String>,
}

impl PointResult {
    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(detail());
        }
    }
}

pub fn run(config: &VerifyConfig) -> Result<Report> {
    if config.window < 0 {
        return Err(Error::InvalidParams("window must be non-negative".into()));
    }
    let start = Instant::now();
    let points = config.params.lattice.window(config.window);
    let per_point: Box<dyn Fn(&LatticePoint) -> PointResult + Send + Sync> = match config.suite {
        Suite::Hecke => hecke_suite(config)?,
        Suite::Duality => duality_suite(config)?,
        Suite::DChange => d_change_suite(config),
        Suite::WInvariance => w_invariance_suite(config),
        Suite::LemmaMain => lemma_main_suite(config),
        Suite::Theorem => theorem_suite(config)?,
        Suite::HlIdentity => hl_identity_suite(config),
    };
    let results: Vec<(LatticePoint, PointResult)> = points
        .into_par_iter()
        .map(|x| {
            let r = per_point(&x);
            (x, r)
        })
        .collect();

    // window() is lexicographic and collect() preserves order
    let mut checks_run = 0;
    let mut failures = Vec::new();
    for (x, r) in results {
        checks_run += r.checks;
        failures.extend(r.failures.into_iter().map(|detail| Failure {
            x: x.coords().to_vec(),
            detail,
        }));
    }
    Ok(Report {
        schema: SCHEMA_VERSION,
        suite: config.suite.name().to_string(),
        params: ParamsReport::from(&config.params),
        window: config.window,
        seed: config.seed,
        checks_run,
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

type PointCheck = Box<dyn Fn(&LatticePoint) -> PointResult + Send + Sync>;

/// Quadratic, braid and far-commutation relations for `Q_0, …, Q_{k-1}`,
/// and the commutation of `Q_j` with the shifts `t_{v_i}`.
fn hecke_suite(config: &VerifyConfig) -> Result<PointCheck> {
    let params = config.params.clone();
    let lt = params.lattice;
    let k = lt.k();
    let f = random::lattice_function(config.seed).cached();
    let beta = params.beta.clone();
    let alpha = params.alpha.clone();

    let q: Vec<_> = (0..k)
        .map(|i| q_operator(&params, i, &f))
        .collect::<Result<_>>()?;
    let qq: Vec<_> = (0..k)
        .map(|i| q_operator(&params, i, &q[i]))
        .collect::<Result<_>>()?;

    // braid words for adjacent pairs (i, i+1 mod k); affine A_1 has none
    let mut braids = Vec::new();
    if k >= 3 {
        for i in 0..k {
            let j = (i + 1) % k;
            let iji = q_operator(&params, i, &q_operator(&params, j, &q[i])?)?;
            let jij = q_operator(&params, j, &q_operator(&params, i, &q[j])?)?;
            braids.push((i, j, iji, jij));
        }
    }
    let mut commuting = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let gap = j - i;
            if gap != 1 && gap != k - 1 {
                commuting.push((
                    i,
                    j,
                    q_operator(&params, i, &q[j])?,
                    q_operator(&params, j, &q[i])?,
                ));
            }
        }
    }
    // Q_j applied to t_{v_m} f, for every j and shift direction m
    let mut shifted_q = vec![Vec::new(); k];
    for (j, row) in shifted_q.iter_mut().enumerate() {
        for m in 1..=k {
            row.push(q_operator(&params, j, &f.shift(&lt.basis(m)))?);
        }
    }

    Ok(Box::new(move |x: &LatticePoint| {
        let mut r = PointResult::default();
        for i in 0..k {
            let lhs =
                qq[i].eval(x) + (beta.clone() - int(1)) * q[i].eval(x) - beta.clone() * f.eval(x);
            r.check(lhs == int(0), || {
                format!("quadratic relation fails for Q_{i}")
            });
        }
        for (i, j, iji, jij) in &braids {
            r.check(iji.eval(x) == jij.eval(x), || {
                format!("braid relation fails for Q_{i}, Q_{j}")
            });
        }
        for (i, j, ij, ji) in &commuting {
            r.check(ij.eval(x) == ji.eval(x), || {
                format!("Q_{i} and Q_{j} do not commute")
            });
        }
        let mut total_shift_q = vec![int(0); k];
        for j in 0..k {
            // v_j with v_0 = v_k, and v_{j+1}
            let lower = lt.wrap(j as i64);
            let upper = lt.wrap(j as i64 + 1);
            for m in 1..=k {
                let lhs = q[j].eval(&x.shifted(m, -1));
                total_shift_q[j] += lhs.clone();
                let ok = if m == upper {
                    lhs == shifted_q[j][lower - 1].eval(x)
                        + alpha.clone() * f.eval(x)
                        + (int(1) - beta.clone()) * f.eval(&x.shifted(upper, -1))
                } else if m == lower {
                    continue;
                } else {
                    lhs == shifted_q[j][m - 1].eval(x)
                };
                r.check(ok, || format!("t_v{m} Q_{j} commutation relation fails"));
            }
        }
        for (j, lhs) in total_shift_q.into_iter().enumerate() {
            let rhs = (1..=k).fold(int(0), |acc, m| acc + shifted_q[j][m - 1].eval(x));
            r.check(lhs == rhs, || format!("Σ t_v does not commute with Q_{j}"));
        }
        r
    }))
}

/// `(Q_i f)(x) = (f, Ť_i e^x)` for `1 <= i < k`, and for `Q_0` against
/// `π̌^{-1} Ť_1 π̌`.
fn duality_suite(config: &VerifyConfig) -> Result<PointCheck> {
    let params = config.params.clone();
    let k = params.k();
    let f = random::lattice_function(config.seed).cached();
    let q: Vec<_> = (0..k)
        .map(|i| q_operator(&params, i, &f))
        .collect::<Result<_>>()?;
    let pi = params.lattice.pi();
    let pi_inv = pi.inverse();
    Ok(Box::new(move |x: &LatticePoint| {
        let mut r = PointResult::default();
        let monomial = LaurentPolynomial::monomial(x.clone(), int(1));
        for (i, qi) in q.iter().enumerate().skip(1) {
            match apply_t_check(&params, i, &monomial) {
                Ok(t) => r.check(qi.eval(x) == pairing(&f, &t), || {
                    format!("Q_{i} is not dual to Ť_{i}")
                }),
                Err(e) => r.check(false, || e.to_string()),
            }
        }
        match apply_t_check(&params, 1, &weyl_act_poly(&pi, &monomial)) {
            Ok(t) => {
                let t0 = weyl_act_poly(&pi_inv, &t);
                r.check(q[0].eval(x) == pairing(&f, &t0), || {
                    "Q_0 is not dual to π̌^-1 Ť_1 π̌".into()
                });
            }
            Err(e) => r.check(false, || e.to_string()),
        }
        r
    }))
}

fn d_change_suite(config: &VerifyConfig) -> PointCheck {
    let lt = config.params.lattice;
    Box::new(move |x: &LatticePoint| {
        let mut r = PointResult::default();
        for i in 1..=lt.k() {
            for j in 0..lt.k() {
                r.check(verify_d_change(&lt, x, i, j), || {
                    format!("d_{i} rule fails under s_{j}")
                });
            }
        }
        r
    })
}

/// `(s_j H s_j f)(x) = (H f)(x)` on `X_reg` for every generator `s_j` of `W`.
fn w_invariance_suite(config: &VerifyConfig) -> PointCheck {
    let config = config.clone();
    let lt = config.params.lattice;
    let f = random::lattice_function(config.seed).cached();
    let conjugated: Vec<_> = (0..lt.k())
        .map(|j| (lt.simple_reflection(j), f.act(&lt.simple_reflection(j))))
        .collect();
    Box::new(move |x: &LatticePoint| {
        let mut r = PointResult::default();
        if !lt.is_regular(x) {
            return r;
        }
        let hf = config.hamiltonian(&f, x);
        for (j, (s, sf)) in conjugated.iter().enumerate() {
            // (w H w^{-1} f)(x) = (H (w^{-1} f))(w^{-1} x) with w = w^{-1} = s_j
            let lhs = config.hamiltonian(sf, &s.act(x));
            r.check(lhs == hf, || format!("H is not invariant under s_{j}"));
        }
        r
    })
}

fn lemma_main_suite(config: &VerifyConfig) -> PointCheck {
    let params = config.params.clone();
    let prop = Propagator::new(&random::lattice_function(config.seed).cached(), &params);
    let g = prop.function();
    Box::new(move |x: &LatticePoint| {
        let mut r = PointResult::default();
        for i in 1..=params.k() {
            let (lhs, rhs) = lemma_main_sides(&prop, &g, x, i);
            r.check(lhs == rhs, || {
                format!("lemma fails for i = {i}: {lhs} != {rhs}")
            });
        }
        r
    })
}

/// Spectral parameters for the plane-wave suites: distinct nonzero rationals
/// drawn from the seed.
pub fn spectral_parameters(seed: u64, k: usize) -> Vec<Rational> {
    let mut rng = random::rng(seed ^ 0x005e_ed0f_5bec);
    random::distinct_nonzero(&mut rng, k, 7, 5)
}

/// `H G(g_p) = (Σ p_i) G(g_p)` for a plane wave `g_p`.
fn theorem_suite(config: &VerifyConfig) -> Result<PointCheck> {
    let config = config.clone();
    let p = spectral_parameters(config.seed, config.params.k());
    let lambda: Rational = p.iter().cloned().sum();
    let g = Propagator::new(&plane_wave(&p)?, &config.params).function();
    Ok(Box::new(move |x: &LatticePoint| {
        let mut r = PointResult::default();
        let lhs = config.hamiltonian(&g, x);
        let rhs = lambda.clone() * g.eval(x);
        r.check(lhs == rhs, || {
            format!("H G(g_p) = {lhs} but λ G(g_p) = {rhs}")
        });
        r
    }))
}

fn hl_identity_suite(config: &VerifyConfig) -> PointCheck {
    let lt = config.params.lattice;
    let beta = config.params.beta.clone();
    let p = spectral_parameters(config.seed, lt.k());
    Box::new(move |x: &LatticePoint| {
        let mut r = PointResult::default();
        if lt.is_dominant(x) {
            match verify_hl_identity(&lt, &p, x, &beta) {
                Ok(ok) => r.check(ok, || "Hall-Littlewood identity fails".into()),
                Err(e) => r.check(false, || e.to_string()),
            }
        }
        r
    })
}
