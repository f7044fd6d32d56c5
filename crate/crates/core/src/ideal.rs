//! Monomials and monomial ideals over a fixed, ordered variable list.
//!
//! Everything here is exact integer arithmetic. Exponents and degrees are
//! checked 64-bit integers; overflow is a reported error, never a wrap.
//! Ideals are kept in canonical minimal form (a divisibility antichain,
//! sorted by degree then lexicographically), so equality of ideals is
//! structural equality of their generator lists.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum IdealError {
    #[error("monomial has {found} exponents but the context has {expected} variables")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands live in incompatible variable contexts")]
    ContextMismatch,
    #[error("exponent or degree overflows 64 bits")]
    Overflow,
    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,
    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,
    #[error("power exponent must be at least 1")]
    InvalidPower,
    #[error("invalid variable context: {0}")]
    InvalidContext(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// The ambient polynomial ring: an ordered variable list with optional
/// positive integer degree weights (weight of `y_i` models the degree of the
/// form substituted for it).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableContext {
    names: Vec<String>,
    weights: Vec<u64>,
}

impl VariableContext {
    pub fn new(names: Vec<String>, weights: Vec<u64>) -> Result<Self, IdealError> {
        if names.is_empty() {
            return Err(IdealError::InvalidContext("no variables".into()));
        }
        if names.len() != weights.len() {
            return Err(IdealError::InvalidContext(format!(
                "{} names but {} weights",
                names.len(),
                weights.len()
            )));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(IdealError::InvalidContext("weights must be positive".into()));
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != names.len() {
            return Err(IdealError::InvalidContext("duplicate variable name".into()));
        }
        Ok(VariableContext { names, weights })
    }

    /// Standard graded ring `k[y_1, ..., y_s]`.
    pub fn standard(count: usize) -> Result<Arc<Self>, IdealError> {
        let names = (1..=count).map(|i| format!("y{i}")).collect();
        Ok(Arc::new(Self::new(names, vec![1; count])?))
    }

    /// `k[y_1, ..., y_s]` with the given degree weights.
    pub fn weighted(weights: Vec<u64>) -> Result<Arc<Self>, IdealError> {
        let names = (1..=weights.len()).map(|i| format!("y{i}")).collect();
        Ok(Arc::new(Self::new(names, weights)?))
    }

    /// Standard graded ring `k[x_0, ..., x_{count-1}]`.
    pub fn x_vars(count: usize) -> Result<Arc<Self>, IdealError> {
        let names = (0..count).map(|i| format!("x{i}")).collect();
        Ok(Arc::new(Self::new(names, vec![1; count])?))
    }

    pub fn count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn is_standard_graded(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    /// Compatibility for ideal arithmetic: same variable count and weights.
    /// Names are presentation only.
    pub fn compatible(&self, other: &Self) -> bool {
        self.weights == other.weights
    }

    /// Weighted degree of a monomial, with checked arithmetic.
    pub fn weighted_degree(&self, m: &Monomial) -> Result<u64, IdealError> {
        if m.len() != self.count() {
            return Err(IdealError::DimensionMismatch {
                expected: self.count(),
                found: m.len(),
            });
        }
        let mut total: u64 = 0;
        for (&e, &w) in m.exponents().iter().zip(&self.weights) {
            let term = e.checked_mul(w).ok_or(IdealError::Overflow)?;
            total = total.checked_add(term).ok_or(IdealError::Overflow)?;
        }
        Ok(total)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        let mut out = String::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&self.names[i]);
            if e > 1 {
                out.push_str(&format!("^{e}"));
            }
        }
        out
    }
}

/// A monomial: an exponent vector over a fixed variable set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u64>,
}

impl Monomial {
    pub fn new(exps: Vec<u64>) -> Self {
        Monomial { exps }
    }

    /// The multiplicative identity (all exponents zero).
    pub fn one(len: usize) -> Self {
        Monomial { exps: vec![0; len] }
    }

    /// The variable `i` (0-based) raised to `exp`.
    pub fn var_power(len: usize, i: usize, exp: u64) -> Self {
        let mut exps = vec![0; len];
        exps[i] = exp;
        Monomial { exps }
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u64 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn supports_disjoint(&self, other: &Self) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Unweighted total degree, checked.
    pub fn total_degree(&self) -> Result<u64, IdealError> {
        self.exps
            .iter()
            .try_fold(0u64, |acc, &e| acc.checked_add(e))
            .ok_or(IdealError::Overflow)
    }

    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, IdealError> {
        debug_assert_eq!(self.len(), other.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(IdealError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Monomial { exps })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    /// `self / gcd(self, other)` — the generator map of the colon ideal.
    pub fn quotient_by_gcd(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - a.min(b))
                .collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exps.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A monomial ideal in canonical minimal form.
///
/// The zero ideal has an empty generator list; the unit ideal is generated
/// by the single monomial 1. Generators of a nonzero proper ideal form a
/// divisibility antichain sorted by (weighted degree, exponent lex).
#[derive(Debug, Clone)]
pub struct MonomialIdeal {
    ctx: Arc<VariableContext>,
    gens: Vec<Monomial>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.compatible(&other.ctx) && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

impl MonomialIdeal {
    /// Canonicalize a generator list: drop redundant generators (any
    /// monomial divisible by another) and sort. This is `minimalize`.
    pub fn new(ctx: &Arc<VariableContext>, gens: Vec<Monomial>) -> Result<Self, IdealError> {
        for g in &gens {
            if g.len() != ctx.count() {
                return Err(IdealError::DimensionMismatch {
                    expected: ctx.count(),
                    found: g.len(),
                });
            }
            // Surface degree overflow at construction time.
            ctx.weighted_degree(g)?;
        }
        Ok(MonomialIdeal {
            ctx: Arc::clone(ctx),
            gens: minimalize_sorted(ctx, gens),
        })
    }

    pub fn zero(ctx: &Arc<VariableContext>) -> Self {
        MonomialIdeal {
            ctx: Arc::clone(ctx),
            gens: Vec::new(),
        }
    }

    pub fn unit(ctx: &Arc<VariableContext>) -> Self {
        MonomialIdeal {
            ctx: Arc::clone(ctx),
            gens: vec![Monomial::one(ctx.count())],
        }
    }

    /// The prime ideal generated by the given variables (0-based indices).
    pub fn variable_prime(
        ctx: &Arc<VariableContext>,
        vars: &[usize],
    ) -> Result<Self, IdealError> {
        let gens = vars
            .iter()
            .map(|&i| Monomial::var_power(ctx.count(), i, 1))
            .collect();
        Self::new(ctx, gens)
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    fn check_dim(&self, m: &Monomial) -> Result<(), IdealError> {
        if m.len() != self.ctx.count() {
            return Err(IdealError::DimensionMismatch {
                expected: self.ctx.count(),
                found: m.len(),
            });
        }
        Ok(())
    }

    fn check_ctx(&self, other: &Self) -> Result<(), IdealError> {
        if !self.ctx.compatible(&other.ctx) {
            return Err(IdealError::ContextMismatch);
        }
        Ok(())
    }

    /// Ideal membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool, IdealError> {
        self.check_dim(m)?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// Containment of ideals, generator-wise.
    pub fn contains_ideal(&self, other: &Self) -> Result<bool, IdealError> {
        self.check_ctx(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Intersection via pairwise least common multiples of generators.
    pub fn intersect(&self, other: &Self) -> Result<Self, IdealError> {
        self.check_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ctx));
        }
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                lcms.push(g.lcm(h));
            }
        }
        Self::new(&self.ctx, lcms)
    }

    pub fn product(&self, other: &Self) -> Result<Self, IdealError> {
        self.check_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ctx));
        }
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                prods.push(g.mul(h)?);
            }
        }
        Self::new(&self.ctx, prods)
    }

    /// `r`-fold ordinary power, `r >= 1`.
    pub fn power(&self, r: u64) -> Result<Self, IdealError> {
        if r == 0 {
            return Err(IdealError::InvalidPower);
        }
        let mut acc = self.clone();
        for _ in 1..r {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// The colon ideal `(I : m)`, by dividing generators by their gcd with `m`.
    pub fn colon(&self, m: &Monomial) -> Result<Self, IdealError> {
        self.check_dim(m)?;
        let gens = self.gens.iter().map(|g| g.quotient_by_gcd(m)).collect();
        Self::new(&self.ctx, gens)
    }

    /// Sum of ideals (union of generating sets, minimalized).
    pub fn sum(&self, other: &Self) -> Result<Self, IdealError> {
        self.check_ctx(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Self::new(&self.ctx, gens)
    }

    /// Multiply every generator by a fixed monomial.
    pub fn scale(&self, m: &Monomial) -> Result<Self, IdealError> {
        self.check_dim(m)?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.mul(m))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(&self.ctx, gens)
    }

    /// Least weighted degree among nonzero elements (attained at a minimal
    /// generator). Errors on the zero ideal.
    pub fn weighted_alpha(&self) -> Result<u64, IdealError> {
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        let mut best = u64::MAX;
        for g in &self.gens {
            best = best.min(self.ctx.weighted_degree(g)?);
        }
        Ok(best)
    }

    /// Supports of the minimal primes (as sorted variable index lists):
    /// the minimal vertex covers of the generator supports, computed by
    /// iterated support splitting.
    pub fn minimal_primes(&self) -> Result<Vec<Vec<usize>>, IdealError> {
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(IdealError::UnitIdeal);
        }
        let supports: Vec<Vec<usize>> = self.gens.iter().map(|g| g.support()).collect();
        Ok(minimal_covers(&supports))
    }

    /// Height (codimension): least cardinality of a minimal prime.
    pub fn height(&self) -> Result<usize, IdealError> {
        let primes = self.minimal_primes()?;
        Ok(primes.iter().map(|p| p.len()).min().unwrap_or(0))
    }

    /// Text serialization: a header line `vars=<n> weights=<w1,...,wn>`
    /// followed by one generator per line as a space-separated exponent
    /// vector. Round-trips bit-exactly.
    pub fn to_text(&self) -> String {
        let weights: Vec<String> = self.ctx.weights().iter().map(|w| w.to_string()).collect();
        let mut out = format!("vars={} weights={}\n", self.ctx.count(), weights.join(","));
        for g in &self.gens {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, IdealError> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(IdealError::Parse {
            line: 1,
            msg: "empty input".into(),
        })?;
        let header = header.trim();
        let parse_header = |h: &str| -> Option<(usize, Vec<u64>)> {
            let mut parts = h.split_whitespace();
            let vars = parts.next()?.strip_prefix("vars=")?.parse().ok()?;
            let weights = parts
                .next()?
                .strip_prefix("weights=")?
                .split(',')
                .map(|w| w.parse().ok())
                .collect::<Option<Vec<u64>>>()?;
            if parts.next().is_some() {
                return None;
            }
            Some((vars, weights))
        };
        let (vars, weights) = parse_header(header).ok_or(IdealError::Parse {
            line: 1,
            msg: format!("bad header {header:?}"),
        })?;
        if weights.len() != vars {
            return Err(IdealError::Parse {
                line: 1,
                msg: format!("{} weights for {} variables", weights.len(), vars),
            });
        }
        let ctx = VariableContext::weighted(weights)?;
        let mut gens = Vec::new();
        for (idx, line) in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let exps = line
                .split_whitespace()
                .map(|t| t.parse::<u64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| IdealError::Parse {
                    line: idx + 1,
                    msg: e.to_string(),
                })?;
            if exps.len() != vars {
                return Err(IdealError::Parse {
                    line: idx + 1,
                    msg: format!("{} exponents for {} variables", exps.len(), vars),
                });
            }
            gens.push(Monomial::new(exps));
        }
        Self::new(&ctx, gens)
    }

    /// Human-readable generator list, e.g. `(y1*y2, y1*y3)`.
    pub fn format_generators(&self) -> String {
        if self.is_zero() {
            return "(0)".into();
        }
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|g| self.ctx.format_monomial(g))
            .collect();
        format!("({})", parts.join(", "))
    }
}

/// Reduce a generator list to the divisibility antichain and sort it by
/// (weighted degree, exponent lex). Idempotent and order-independent.
fn minimalize_sorted(ctx: &VariableContext, mut gens: Vec<Monomial>) -> Vec<Monomial> {
    // A unit generator absorbs everything.
    if gens.iter().any(|g| g.is_one()) {
        return vec![Monomial::one(ctx.count())];
    }
    // Degree ascending, then lex with earlier variables first (y1*y2
    // before y1*y3 before y2*y3).
    gens.sort_by(|a, b| {
        let da = ctx.weighted_degree(a).unwrap_or(u64::MAX);
        let db = ctx.weighted_degree(b).unwrap_or(u64::MAX);
        da.cmp(&db).then_with(|| b.exponents().cmp(a.exponents()))
    });
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    'outer: for g in gens {
        // Only earlier (lower-degree) survivors can divide g.
        for k in &kept {
            if k.divides(&g) {
                continue 'outer;
            }
        }
        kept.push(g);
    }
    kept
}

/// Minimal vertex covers of a list of supports: the inclusion-minimal sets
/// of variables meeting every support. These are the supports of the
/// minimal primes of the monomial ideal with those generator supports.
pub fn minimal_covers(supports: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut covers: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    branch(supports, &mut current, &mut covers);
    // Reduce to inclusion-minimal covers.
    covers.sort_by_key(|c| (c.len(), c.clone()));
    let mut minimal: Vec<Vec<usize>> = Vec::new();
    'outer: for c in covers {
        for m in &minimal {
            if m.iter().all(|v| c.binary_search(v).is_ok()) {
                continue 'outer;
            }
        }
        minimal.push(c);
    }
    minimal.sort();
    minimal.dedup();
    minimal
}

fn branch(supports: &[Vec<usize>], current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let uncovered = supports
        .iter()
        .find(|s| !s.iter().any(|v| current.contains(v)));
    match uncovered {
        None => {
            let mut c = current.clone();
            c.sort_unstable();
            out.push(c);
        }
        Some(s) => {
            for &v in s {
                current.push(v);
                branch(supports, current, out);
                current.pop();
            }
        }
    }
}
