use std::collections::BTreeMap;

use crate::cayley::step_bound;
use crate::error::{Error, Result};
use crate::hyperbolicity::{HypConstants, Provenance};
use crate::num::{format_rational, parse_rational, rational_to_f64, HalfInt, Rational};

/// `τ(λ) = 4(D + δ)/(1 − λ)`.
pub fn tau(consts: &HypConstants, lambda: &Rational) -> Result<Rational> {
    check_lambda(lambda)?;
    let four = Rational::from_integer(4);
    Ok(four * (consts.d + consts.delta.to_rational()) / (Rational::from_integer(1) - lambda))
}

/// `μ(λ, ε) = λε/(c₀ − 1)`.
pub fn mu(consts: &HypConstants, lambda: &Rational, eps: u32) -> Result<Rational> {
    check_lambda(lambda)?;
    let one = Rational::from_integer(1);
    if consts.c0 <= one {
        return Err(Error::input("c₀ must exceed 1"));
    }
    Ok(lambda * Rational::from_integer(eps as i64) / (consts.c0 - one))
}

fn check_lambda(lambda: &Rational) -> Result<()> {
    if *lambda <= Rational::from_integer(0) || *lambda >= Rational::from_integer(1) {
        return Err(Error::input(format!("λ = {} must lie in (0, 1)", format_rational(lambda))));
    }
    Ok(())
}

/// `η′ = exp(ηδ) − 1`.
pub fn eta_prime(eta: f64, delta: HalfInt) -> f64 {
    (eta * delta.to_f64()).exp() - 1.0
}

/// Default η: `0.5` when δ = 0, else the largest η with `1 − 2η′ ≥ 0.5`.
pub fn default_eta(delta: HalfInt) -> f64 {
    if delta == HalfInt::ZERO {
        0.5
    } else {
        1.25f64.ln() / delta.to_f64()
    }
}

/// All thresholds derived from the hyperbolicity constants for one choice of
/// `(λ, ε, m, η)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub lambda: Rational,
    pub eps: u32,
    pub m: u32,
    pub eta: f64,
    pub consts: HypConstants,
    pub t: u32,
    pub tau: Rational,
    pub mu: Rational,
    pub eta_prime: f64,
    pub theta: f64,
    /// `ε > τ(λ)`.
    pub eps_exceeds_tau: bool,
    /// `m > μ(λ, ε)`, equivalently `(m + λε)/m < c₀`.
    pub m_exceeds_mu: bool,
    /// `1 − 2η′ > 0`.
    pub sandwich_positive: bool,
}

/// Evaluates every derived threshold. Pure: the same inputs always give a
/// bit-identical certificate.
pub fn compute_certificate(consts: &HypConstants, lambda: Rational, eps: u32, m: u32, eta: f64) -> Result<Certificate> {
    consts.validate()?;
    if eps == 0 || m == 0 {
        return Err(Error::input("ε and m must be positive"));
    }
    if !(eta > 0.0 && eta.is_finite()) {
        return Err(Error::input(format!("η = {eta} must be positive")));
    }
    let t = step_bound(m, eps, &lambda)?;
    let tau = tau(consts, &lambda)?;
    let mu = mu(consts, &lambda, eps)?;
    let eta_prime = eta_prime(eta, consts.delta);
    let lambda_eps = rational_to_f64(&lambda) * eps as f64;
    let exponent = m as f64 + rational_to_f64(&consts.d) + lambda_eps + 2.0 * consts.delta.to_f64();
    let theta = (1.0 - 2.0 * eta_prime) * (-eta * exponent).exp();
    Ok(Certificate {
        lambda,
        eps,
        m,
        eta,
        consts: consts.clone(),
        t,
        tau,
        mu,
        eta_prime,
        theta,
        eps_exceeds_tau: Rational::from_integer(eps as i64) > tau,
        m_exceeds_mu: Rational::from_integer(m as i64) > mu,
        sandwich_positive: 1.0 - 2.0 * eta_prime > 0.0,
    })
}

impl Certificate {
    pub fn admissible(&self) -> bool {
        self.eps_exceeds_tau && self.m_exceeds_mu && self.sandwich_positive
    }

    /// Flat `key=value` lines, one per field.
    pub fn to_record(&self) -> String {
        let c = &self.consts;
        let mut out = String::new();
        let mut kv = |k: &str, v: String| {
            out.push_str(k);
            out.push('=');
            out.push_str(&v);
            out.push('\n');
        };
        kv("lambda", format_rational(&self.lambda));
        kv("epsilon", self.eps.to_string());
        kv("m", self.m.to_string());
        kv("eta", format!("{:?}", self.eta));
        kv("delta", c.delta.to_string());
        kv("delta_source", c.delta_source.to_string());
        kv("delta_coverage", c.delta_coverage.clone());
        kv("delta_exhaustive", c.delta_exhaustive.to_string());
        kv("c0", format_rational(&c.c0));
        kv("c0_source", c.c0_source.to_string());
        kv(
            "dead_end_step",
            c.dead_end_step.map_or_else(|| "-".to_string(), |s| s.to_string()),
        );
        kv("D", format_rational(&c.d));
        kv("D_source", c.d_source.to_string());
        kv("D_coverage", c.d_coverage.clone());
        kv("T", self.t.to_string());
        kv("tau", format_rational(&self.tau));
        kv("mu", format_rational(&self.mu));
        kv("eta_prime", format!("{:?}", self.eta_prime));
        kv("theta", format!("{:?}", self.theta));
        kv("eps_exceeds_tau", self.eps_exceeds_tau.to_string());
        kv("m_exceeds_mu", self.m_exceeds_mu.to_string());
        kv("sandwich_positive", self.sandwich_positive.to_string());
        out
    }

    /// Parses a record written by [`Certificate::to_record`]. Derived fields
    /// are read as stored; use [`Certificate::recompute`] to check them.
    pub fn from_record(text: &str) -> Result<Certificate> {
        let map: BTreeMap<&str, &str> = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split_once('=').ok_or_else(|| Error::input(format!("malformed line {l:?}"))))
            .collect::<Result<_>>()?;
        let get = |k: &str| map.get(k).copied().ok_or_else(|| Error::input(format!("missing key {k}")));
        let int = |k: &str| -> Result<u32> { get(k)?.parse().map_err(|_| Error::input(format!("bad {k}"))) };
        let float = |k: &str| -> Result<f64> { get(k)?.parse().map_err(|_| Error::input(format!("bad {k}"))) };
        let flag = |k: &str| -> Result<bool> { get(k)?.parse().map_err(|_| Error::input(format!("bad {k}"))) };
        let consts = HypConstants {
            delta: get("delta")?.parse()?,
            delta_source: get("delta_source")?.parse::<Provenance>()?,
            delta_coverage: get("delta_coverage")?.to_string(),
            delta_exhaustive: flag("delta_exhaustive")?,
            c0: parse_rational(get("c0")?)?,
            c0_source: get("c0_source")?.parse()?,
            dead_end_step: match get("dead_end_step")? {
                "-" => None,
                s => Some(s.parse().map_err(|_| Error::input("bad dead_end_step"))?),
            },
            d: parse_rational(get("D")?)?,
            d_source: get("D_source")?.parse()?,
            d_coverage: get("D_coverage")?.to_string(),
        };
        Ok(Certificate {
            lambda: parse_rational(get("lambda")?)?,
            eps: int("epsilon")?,
            m: int("m")?,
            eta: float("eta")?,
            consts,
            t: int("T")?,
            tau: parse_rational(get("tau")?)?,
            mu: parse_rational(get("mu")?)?,
            eta_prime: float("eta_prime")?,
            theta: float("theta")?,
            eps_exceeds_tau: flag("eps_exceeds_tau")?,
            m_exceeds_mu: flag("m_exceeds_mu")?,
            sandwich_positive: flag("sandwich_positive")?,
        })
    }

    /// Rebuilds the certificate from its inputs alone.
    pub fn recompute(&self) -> Result<Certificate> {
        compute_certificate(&self.consts, self.lambda, self.eps, self.m, self.eta)
    }

    /// Bit-exact comparison, floats included.
    pub fn bit_identical(&self, other: &Certificate) -> bool {
        self.eta.to_bits() == other.eta.to_bits()
            && self.eta_prime.to_bits() == other.eta_prime.to_bits()
            && self.theta.to_bits() == other.theta.to_bits()
            && self == other
    }
}
