//! Symbolic powers of matroid Stanley-Reisner ideals, containment
//! certificates, Waldschmidt constant reports and resurgence searches.
//!
//! For a matroid the m-th symbolic power is the intersection of the m-th
//! ordinary powers of the facet-complement primes. Containment testing is
//! generator-driven: every minimal generator of the symbolic power is
//! checked for membership in the ordinary power.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use itertools::Itertools;
use num_rational::Ratio;
use rayon::prelude::*;
use thiserror::Error;

use crate::complex::{ComplexError, MatroidComplex};
use crate::ideal::{IdealError, Monomial, MonomialIdeal, VariableContext};

pub type Rational = Ratio<u64>;

#[derive(Debug, Error)]
pub enum SymbolicError {
    #[error("symbolic power exponent must be at least 1")]
    InvalidPower,
    #[error("waldschmidt sampling needs m_max >= 2, got {0}")]
    MMaxTooSmall(u64),
    #[error("weights must list one positive degree per vertex")]
    BadWeights,
    #[error("budget of {limit} generator-membership checks exhausted")]
    BudgetExhausted { limit: u64 },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Cap on elementary generator-membership checks (one generator tested
/// against one ideal). `unlimited` never trips.
#[derive(Debug)]
pub struct OpBudget {
    limit: Option<u64>,
    used: AtomicU64,
}

impl OpBudget {
    pub fn unlimited() -> Self {
        OpBudget {
            limit: None,
            used: AtomicU64::new(0),
        }
    }

    pub fn limited(limit: u64) -> Self {
        OpBudget {
            limit: Some(limit),
            used: AtomicU64::new(0),
        }
    }

    pub fn is_limited(&self) -> bool {
        self.limit.is_some()
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    fn charge(&self, n: u64) -> Result<(), SymbolicError> {
        let used = self.used.fetch_add(n, Ordering::Relaxed) + n;
        match self.limit {
            Some(limit) if used > limit => Err(SymbolicError::BudgetExhausted { limit }),
            _ => Ok(()),
        }
    }
}

/// A symbolic-power computation request: the matroid, the power, and the
/// per-vertex degree weights of the forms substituted for the variables.
#[derive(Debug, Clone)]
pub struct SymbolicPowerRequest {
    pub matroid: MatroidComplex,
    pub m: u64,
    pub weights: Vec<u64>,
}

impl SymbolicPowerRequest {
    pub fn compute(&self) -> Result<MonomialIdeal, SymbolicError> {
        if self.weights.len() != self.matroid.vertex_count() || self.weights.iter().any(|&w| w == 0)
        {
            return Err(SymbolicError::BadWeights);
        }
        let ctx = VariableContext::weighted(self.weights.clone())?;
        symbolic_power(&self.matroid, &ctx, self.m)
    }
}

/// The m-th symbolic power: intersection over the facet primes of their
/// m-th ordinary powers. `m = 1` recovers the Stanley-Reisner ideal.
pub fn symbolic_power(
    matroid: &MatroidComplex,
    ctx: &Arc<VariableContext>,
    m: u64,
) -> Result<MonomialIdeal, SymbolicError> {
    if m == 0 {
        return Err(SymbolicError::InvalidPower);
    }
    let primes = matroid.facet_primes(ctx)?;
    let mut result = MonomialIdeal::unit(ctx);
    for prime in &primes {
        result = result.intersect(&prime_power(prime, m)?)?;
    }
    Ok(result)
}

/// Power of a variable prime, generated directly by the exponent vectors
/// of total degree m on the prime's support.
fn prime_power(prime: &MonomialIdeal, m: u64) -> Result<MonomialIdeal, SymbolicError> {
    let ctx = prime.context();
    debug_assert!(!prime.is_zero(), "facet primes of positive codim are nonzero");
    let vars: Vec<usize> = prime.generators().iter().map(|g| g.support()[0]).collect();
    let mut gens = Vec::new();
    let mut exps = vec![0u64; ctx.count()];
    compositions(m, &vars, 0, &mut exps, &mut gens);
    let out = MonomialIdeal::new(ctx, gens)?;
    debug_assert_eq!(out, prime.power(m)?, "direct prime power must match");
    Ok(out)
}

fn compositions(
    remaining: u64,
    vars: &[usize],
    idx: usize,
    exps: &mut Vec<u64>,
    out: &mut Vec<Monomial>,
) {
    if idx + 1 == vars.len() {
        exps[vars[idx]] = remaining;
        out.push(Monomial::new(exps.clone()));
        exps[vars[idx]] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[vars[idx]] = e;
        compositions(remaining - e, vars, idx + 1, exps, out);
        exps[vars[idx]] = 0;
    }
}

/// Outcome of one containment test `I^(m) ⊆ I^r`, with a re-checkable
/// witness when the containment fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainmentCertificate {
    pub m: u64,
    pub r: u64,
    pub contained: bool,
    pub witness: Option<Monomial>,
}

impl ContainmentCertificate {
    /// Re-validate: the witness lies in the symbolic power and outside the
    /// ordinary power.
    pub fn verify(&self, matroid: &MatroidComplex) -> Result<bool, SymbolicError> {
        let ctx = VariableContext::standard(matroid.vertex_count())?;
        match &self.witness {
            None => Ok(self.contained),
            Some(w) => {
                if self.contained {
                    return Ok(false);
                }
                let symbolic = symbolic_power(matroid, &ctx, self.m)?;
                let ordinary = matroid.stanley_reisner(&ctx)?.power(self.r)?;
                Ok(symbolic.contains(w)? && !ordinary.contains(w)?)
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.m,
            "r": self.r,
            "contained": self.contained,
            "witness": self.witness.as_ref().map(|w| w.to_string()),
        })
    }
}

/// Test `I^(m) ⊆ I^r` generator-wise, reporting the first failing minimal
/// generator as witness.
pub fn is_contained(
    matroid: &MatroidComplex,
    m: u64,
    r: u64,
    budget: &OpBudget,
) -> Result<ContainmentCertificate, SymbolicError> {
    if m == 0 || r == 0 {
        return Err(SymbolicError::InvalidPower);
    }
    let ctx = VariableContext::standard(matroid.vertex_count())?;
    let symbolic = symbolic_power(matroid, &ctx, m)?;
    let ordinary = matroid.stanley_reisner(&ctx)?.power(r)?;
    containment_of(&symbolic, &ordinary, m, r, budget)
}

fn containment_of(
    symbolic: &MonomialIdeal,
    ordinary: &MonomialIdeal,
    m: u64,
    r: u64,
    budget: &OpBudget,
) -> Result<ContainmentCertificate, SymbolicError> {
    for gen in symbolic.generators() {
        budget.charge(1)?;
        if !ordinary.contains(gen)? {
            return Ok(ContainmentCertificate {
                m,
                r,
                contained: false,
                witness: Some(gen.clone()),
            });
        }
    }
    Ok(ContainmentCertificate {
        m,
        r,
        contained: true,
        witness: None,
    })
}

/// Waldschmidt constant report: exact samples `alpha(I^(m))` for
/// `m = 1..m_max`, sound rational bounds, and a closed form only for
/// uniform matroids under uniform weights. The true constant is a limit;
/// the report never presents a truncated minimum as exact.
#[derive(Debug, Clone)]
pub struct WaldschmidtReport {
    pub s: usize,
    pub c: usize,
    pub weights: Vec<u64>,
    /// (m, alpha(I^(m))) for m = 1..=m_max.
    pub samples: Vec<(u64, u64)>,
    /// alpha(I)/c — the containment bound from `I^(cm) ⊆ I^m`.
    pub lower_bound: Rational,
    /// min over samples of alpha_m / m (subadditivity makes the limit the
    /// infimum, so every sample bounds it from above).
    pub upper_bound: Rational,
    /// d*s/c for the uniform matroid with all weights d.
    pub closed_form: Option<Rational>,
}

impl WaldschmidtReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "s": self.s,
            "c": self.c,
            "weights": self.weights,
            "samples": self.samples.iter().map(|&(m, a)| serde_json::json!([m, a])).collect::<Vec<_>>(),
            "certificates": Vec::<serde_json::Value>::new(),
            "lower": format_ratio(&self.lower_bound),
            "upper": format_ratio(&self.upper_bound),
            "formula": self.closed_form.as_ref().map(format_ratio),
        })
    }
}

pub fn format_ratio(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn waldschmidt(
    matroid: &MatroidComplex,
    weights: &[u64],
    m_max: u64,
) -> Result<WaldschmidtReport, SymbolicError> {
    if m_max < 2 {
        return Err(SymbolicError::MMaxTooSmall(m_max));
    }
    let s = matroid.vertex_count();
    let c = matroid.codim();
    if weights.len() != s || weights.iter().any(|&w| w == 0) {
        return Err(SymbolicError::BadWeights);
    }
    let ctx = VariableContext::weighted(weights.to_vec())?;
    let mut samples = Vec::with_capacity(m_max as usize);
    for m in 1..=m_max {
        let alpha = symbolic_power(matroid, &ctx, m)?.weighted_alpha()?;
        samples.push((m, alpha));
    }
    let upper_bound = samples
        .iter()
        .map(|&(m, a)| Rational::new(a, m))
        .min()
        .expect("m_max >= 2");
    let lower_bound = Rational::new(samples[0].1, c as u64);
    let closed_form = if matroid.is_uniform() && weights.iter().all_equal() {
        Some(Rational::new(weights[0] * s as u64, c as u64))
    } else {
        None
    };
    Ok(WaldschmidtReport {
        s,
        c,
        weights: weights.to_vec(),
        samples,
        lower_bound,
        upper_bound,
        closed_form,
    })
}

/// Resurgence grid-search report. The resurgence is a supremum and may not
/// be attained, so the report only claims consistency with the closed
/// formula (every observed non-containment ratio is at most the formula)
/// plus the best ratio found.
#[derive(Debug, Clone)]
pub struct ResurgenceReport {
    pub s: usize,
    pub c: usize,
    pub m_max: u64,
    pub r_max: u64,
    /// Certificates in row-major order: r ascending, then m.
    pub certificates: Vec<ContainmentCertificate>,
    /// max m/r over observed non-containments.
    pub max_ratio_not_contained: Option<Rational>,
    /// c(s-c+1)/s for uniform matroids.
    pub formula: Option<Rational>,
    /// True when a limited budget stopped the grid early.
    pub truncated: bool,
    pub checks_used: u64,
}

impl ResurgenceReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "s": self.s,
            "c": self.c,
            "weights": vec![1u64; self.s],
            "samples": Vec::<serde_json::Value>::new(),
            "certificates": self.certificates.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            "max_ratio_not_contained": self.max_ratio_not_contained.as_ref().map(format_ratio),
            "formula": self.formula.as_ref().map(format_ratio),
            "truncated": self.truncated,
            "checks_used": self.checks_used,
        })
    }
}

/// Evaluate containment on the full `(m, r)` grid. With an unlimited
/// budget the cells run in parallel and are merged by key; with a limited
/// budget the grid runs in row-major order so the truncation point is
/// deterministic.
pub fn resurgence_search(
    matroid: &MatroidComplex,
    m_max: u64,
    r_max: u64,
    budget: &OpBudget,
) -> Result<ResurgenceReport, SymbolicError> {
    if m_max == 0 || r_max == 0 {
        return Err(SymbolicError::InvalidPower);
    }
    let s = matroid.vertex_count();
    let c = matroid.codim();
    let ctx = VariableContext::standard(s)?;
    let symbolic_powers: Vec<MonomialIdeal> = (1..=m_max)
        .map(|m| symbolic_power(matroid, &ctx, m))
        .collect::<Result<_, _>>()?;
    let sr = matroid.stanley_reisner(&ctx)?;
    let mut ordinary_powers = Vec::with_capacity(r_max as usize);
    let mut acc = sr.clone();
    for r in 1..=r_max {
        if r > 1 {
            acc = acc.product(&sr)?;
        }
        ordinary_powers.push(acc.clone());
    }

    let cells: Vec<(u64, u64)> = (1..=r_max)
        .flat_map(|r| (1..=m_max).map(move |m| (r, m)))
        .collect();
    let mut truncated = false;
    let mut certificates: Vec<ContainmentCertificate> = Vec::with_capacity(cells.len());
    if budget.is_limited() {
        for &(r, m) in &cells {
            match containment_of(
                &symbolic_powers[(m - 1) as usize],
                &ordinary_powers[(r - 1) as usize],
                m,
                r,
                budget,
            ) {
                Ok(cert) => certificates.push(cert),
                Err(SymbolicError::BudgetExhausted { .. }) => {
                    truncated = true;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
    } else {
        certificates = cells
            .par_iter()
            .map(|&(r, m)| {
                containment_of(
                    &symbolic_powers[(m - 1) as usize],
                    &ordinary_powers[(r - 1) as usize],
                    m,
                    r,
                    budget,
                )
            })
            .collect::<Result<_, _>>()?;
    }

    let max_ratio_not_contained = certificates
        .iter()
        .filter(|cert| !cert.contained)
        .map(|cert| Rational::new(cert.m, cert.r))
        .max();
    let formula = if matroid.is_uniform() {
        Some(Rational::new(
            c as u64 * (s - c + 1) as u64,
            s as u64,
        ))
    } else {
        None
    };
    if let (Some(max_ratio), Some(formula)) = (&max_ratio_not_contained, &formula) {
        if max_ratio > formula {
            return Err(SymbolicError::InvariantViolation(format!(
                "non-containment ratio {} exceeds the resurgence formula {}",
                format_ratio(max_ratio),
                format_ratio(formula)
            )));
        }
    }
    Ok(ResurgenceReport {
        s,
        c,
        m_max,
        r_max,
        certificates,
        max_ratio_not_contained,
        formula,
        truncated,
        checks_used: budget.used(),
    })
}
