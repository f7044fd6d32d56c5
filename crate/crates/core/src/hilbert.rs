//! Hilbert series numerators, h-vectors, and the basic-double-link
//! recursion for hypersurface configurations.
//!
//! The numerator of `S/I` over the standard-graded denominator is computed
//! by the classical pivot recursion
//! `N(I) = N(I \ {g}) - t^{deg g} * N((I \ {g}) : g)`
//! with the pairwise-coprime product formula as the base case. h-vectors
//! divide the numerator by `(1-t)^codim` with the codimension taken from
//! the minimal primes, never from the vanishing order at t=1.

use std::collections::HashMap;

use thiserror::Error;

use crate::ideal::{IdealError, Monomial, MonomialIdeal};

#[derive(Debug, Error)]
pub enum HilbertError {
    #[error("Hilbert data is computed in the standard grading only (all weights 1)")]
    WeightedContext,
    #[error("the unit ideal has no Hilbert numerator")]
    UnitIdeal,
    #[error("numerator division by (1-t)^{codim} leaves remainder {remainder} at step {step}")]
    DivisionRemainder {
        codim: usize,
        step: usize,
        remainder: i64,
    },
    #[error("lambda configuration requires 1 <= c <= s and positive degrees, got lambda={lambda:?}, c={c}")]
    BadLambdaConfig { lambda: Vec<u64>, c: usize },
    #[error("integer overflow in Hilbert data")]
    Overflow,
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Numerator of the Hilbert series of `S/I` over `(1-t)^s`, as an integer
/// coefficient vector indexed by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertNumerator {
    coeffs: Vec<i64>,
}

impl HilbertNumerator {
    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coefficient(&self, degree: usize) -> i64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }
}

/// A finite integer sequence: the h-vector of a graded quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector {
    entries: Vec<i64>,
}

impl HVector {
    pub fn new(mut entries: Vec<i64>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        HVector { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }
}

impl std::fmt::Display for HVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A hypersurface configuration datum: hypersurface degrees
/// `lambda = [d_1..d_s]` and a codimension `1 <= c <= s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaConfig {
    lambda: Vec<u64>,
    c: usize,
}

impl LambdaConfig {
    pub fn new(lambda: Vec<u64>, c: usize) -> Result<Self, HilbertError> {
        if lambda.is_empty() || c < 1 || c > lambda.len() || lambda.iter().any(|&d| d == 0) {
            return Err(HilbertError::BadLambdaConfig { lambda, c });
        }
        Ok(LambdaConfig { lambda, c })
    }

    pub fn lambda(&self) -> &[u64] {
        &self.lambda
    }

    pub fn s(&self) -> usize {
        self.lambda.len()
    }

    pub fn codim(&self) -> usize {
        self.c
    }
}

// ---- dense integer polynomials in t, indexed by degree -----------------

fn poly_add(a: &[i64], b: &[i64]) -> Result<Vec<i64>, HilbertError> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] = c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] = out[i].checked_add(c).ok_or(HilbertError::Overflow)?;
    }
    Ok(out)
}

fn poly_sub(a: &[i64], b: &[i64]) -> Result<Vec<i64>, HilbertError> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] = c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] = out[i].checked_sub(c).ok_or(HilbertError::Overflow)?;
    }
    Ok(out)
}

fn poly_mul(a: &[i64], b: &[i64]) -> Result<Vec<i64>, HilbertError> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let term = x.checked_mul(y).ok_or(HilbertError::Overflow)?;
            out[i + j] = out[i + j].checked_add(term).ok_or(HilbertError::Overflow)?;
        }
    }
    Ok(out)
}

/// Shift by `t^d`.
fn poly_shift(a: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0i64; d];
    out.extend_from_slice(a);
    out
}

/// `1 + t + ... + t^(d-1)` — multiplication by this realizes a
/// hypersurface section of degree `d` on h-vectors.
fn poly_ones(d: u64) -> Vec<i64> {
    vec![1i64; d as usize]
}

fn poly_trim(mut a: Vec<i64>) -> Vec<i64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Exact division by `(1-t)`; returns the quotient or the nonzero
/// remainder constant.
fn poly_div_one_minus_t(a: &[i64]) -> Result<Vec<i64>, i64> {
    // a(t) = (1-t) q(t) + r  with  q_k = a_0 + ... + a_k.
    let mut q = Vec::with_capacity(a.len());
    let mut acc: i64 = 0;
    for &c in a {
        acc += c;
        q.push(acc);
    }
    let r = q.pop().unwrap_or(0);
    if r != 0 {
        return Err(r);
    }
    Ok(q)
}

// ---- Hilbert numerator ---------------------------------------------------

/// Exact numerator of the Hilbert series of `S/I`. Standard grading only.
///
/// In debug builds the result is recomputed with an independent pivot
/// strategy and the two answers are asserted equal.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> Result<HilbertNumerator, HilbertError> {
    if !ideal.context().is_standard_graded() {
        return Err(HilbertError::WeightedContext);
    }
    if ideal.is_unit() {
        return Err(HilbertError::UnitIdeal);
    }
    let coeffs = poly_trim(numerator_rec(ideal, PivotStrategy::LastGenerator)?);
    #[cfg(debug_assertions)]
    {
        let again = poly_trim(numerator_rec(ideal, PivotStrategy::FirstGenerator)?);
        debug_assert_eq!(coeffs, again, "numerator must not depend on pivot choice");
    }
    Ok(HilbertNumerator { coeffs })
}

#[derive(Clone, Copy)]
enum PivotStrategy {
    /// Pivot on the canonical last generator (highest degree, lex-last).
    LastGenerator,
    /// Pivot on the first generator entangled with another one.
    FirstGenerator,
}

fn numerator_rec(ideal: &MonomialIdeal, strategy: PivotStrategy) -> Result<Vec<i64>, HilbertError> {
    let gens = ideal.generators();
    if gens.is_empty() {
        return Ok(vec![1]);
    }
    if pairwise_coprime(gens) {
        // Complete-intersection product formula.
        let mut acc = vec![1i64];
        for g in gens {
            let d = g.total_degree()? as usize;
            let mut factor = vec![0i64; d + 1];
            factor[0] = 1;
            factor[d] = -1;
            acc = poly_mul(&acc, &factor)?;
        }
        return Ok(acc);
    }
    let pivot_idx = match strategy {
        PivotStrategy::LastGenerator => gens.len() - 1,
        PivotStrategy::FirstGenerator => first_entangled(gens),
    };
    let pivot = gens[pivot_idx].clone();
    let rest: Vec<Monomial> = gens
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != pivot_idx)
        .map(|(_, g)| g.clone())
        .collect();
    let without = MonomialIdeal::new(ideal.context(), rest)?;
    let colon = without.colon(&pivot)?;
    let n_without = numerator_rec(&without, strategy)?;
    let n_colon = numerator_rec(&colon, strategy)?;
    let shifted = poly_shift(&n_colon, pivot.total_degree()? as usize);
    poly_sub(&n_without, &shifted)
}

fn pairwise_coprime(gens: &[Monomial]) -> bool {
    for (i, g) in gens.iter().enumerate() {
        for h in &gens[i + 1..] {
            if !g.supports_disjoint(h) {
                return false;
            }
        }
    }
    true
}

/// Index of the first generator sharing support with another one; pivoting
/// there keeps the second strategy genuinely different from the first.
fn first_entangled(gens: &[Monomial]) -> usize {
    for (i, g) in gens.iter().enumerate() {
        if gens
            .iter()
            .enumerate()
            .any(|(j, h)| i != j && !g.supports_disjoint(h))
        {
            return i;
        }
    }
    0
}

// ---- h-vectors -----------------------------------------------------------

/// h-vector of `S/I`: numerator divided by `(1-t)^codim` with the
/// codimension computed from the minimal primes.
pub fn h_vector(ideal: &MonomialIdeal) -> Result<HVector, HilbertError> {
    let numerator = hilbert_numerator(ideal)?;
    if ideal.is_zero() {
        return Ok(HVector::new(numerator.coeffs));
    }
    let codim = ideal.height()?;
    h_from_numerator(&numerator, codim)
}

pub fn h_from_numerator(
    numerator: &HilbertNumerator,
    codim: usize,
) -> Result<HVector, HilbertError> {
    let mut coeffs = numerator.coeffs.clone();
    for step in 0..codim {
        coeffs = poly_div_one_minus_t(&coeffs).map_err(|remainder| {
            HilbertError::DivisionRemainder {
                codim,
                step,
                remainder,
            }
        })?;
    }
    Ok(HVector::new(coeffs))
}

// ---- hypersurface-configuration recursion --------------------------------

/// One basic-double-link step of the h-vector recursion: peeling the last
/// degree from the prefix adds the hypersurface-section row to the shifted
/// previous configuration.
#[derive(Debug, Clone)]
pub struct BdlStep {
    /// Degrees entering this step (a prefix of lambda).
    pub prefix: Vec<u64>,
    pub c: usize,
    /// Degree peeled in this step.
    pub peeled_degree: u64,
    /// h-vector of the hypersurface section (the codim c-1 prefix
    /// configuration cut by the peeled hypersurface).
    pub section_row: HVector,
    /// h-vector of the previous codim-c configuration; it enters the sum
    /// shifted by the peeled degree.
    pub shifted_row: HVector,
    /// Resulting h-vector of the prefix configuration.
    pub result: HVector,
}

/// h-vector of a hypersurface configuration, computed purely from the
/// degree vector by the basic-double-link recursion
/// `h(lambda,c) = h(lambda',c-1)*(1+...+t^(d-1)) + t^d * h(lambda',c)`,
/// with complete-intersection (`s = c`) and hypersurface (`c = 1`) base
/// cases. Never touches an explicit ideal.
pub fn lambda_hvector(cfg: &LambdaConfig) -> Result<HVector, HilbertError> {
    let mut table = hv_table(cfg)?;
    Ok(HVector::new(table.remove(&(cfg.s(), cfg.c)).unwrap()))
}

/// The recursion's intermediate basic-double-link steps, innermost first.
/// Base cases (complete intersections and hypersurfaces) produce no step.
pub fn lambda_hvector_steps(cfg: &LambdaConfig) -> Result<Vec<BdlStep>, HilbertError> {
    let table = hv_table(cfg)?;
    let mut steps = Vec::new();
    let c = cfg.c;
    if c >= 2 {
        for k in (c + 1)..=cfg.s() {
            let d = cfg.lambda[k - 1];
            let section = poly_mul(&table[&(k - 1, c - 1)], &poly_ones(d))?;
            steps.push(BdlStep {
                prefix: cfg.lambda[..k].to_vec(),
                c,
                peeled_degree: d,
                section_row: HVector::new(section),
                shifted_row: HVector::new(table[&(k - 1, c)].clone()),
                result: HVector::new(table[&(k, c)].clone()),
            });
        }
    }
    Ok(steps)
}

/// Dynamic-programming table over (prefix length, codim), thread-confined.
fn hv_table(cfg: &LambdaConfig) -> Result<HashMap<(usize, usize), Vec<i64>>, HilbertError> {
    let s = cfg.s();
    let mut table: HashMap<(usize, usize), Vec<i64>> = HashMap::new();
    for k in 1..=s {
        for c in 1..=cfg.c.min(k) {
            let value = if c == 1 {
                // Hypersurface of degree d_1 + ... + d_k.
                let total: u64 = cfg.lambda[..k]
                    .iter()
                    .try_fold(0u64, |a, &d| a.checked_add(d))
                    .ok_or(HilbertError::Overflow)?;
                poly_ones(total)
            } else if c == k {
                // Complete intersection of the first k hypersurfaces.
                let mut acc = vec![1i64];
                for &d in &cfg.lambda[..k] {
                    acc = poly_mul(&acc, &poly_ones(d))?;
                }
                acc
            } else {
                let d = cfg.lambda[k - 1];
                let section = poly_mul(&table[&(k - 1, c - 1)], &poly_ones(d))?;
                let shifted = poly_shift(&table[&(k - 1, c)], d as usize);
                poly_add(&section, &shifted)?
            };
            table.insert((k, c), value);
        }
    }
    Ok(table)
}

/// Degree of the configuration: the elementary symmetric polynomial
/// `e_c(d_1, ..., d_s)`.
pub fn lambda_degree(cfg: &LambdaConfig) -> Result<u64, HilbertError> {
    // e[j] over the processed prefix; u128 intermediates, checked result.
    let mut e = vec![0u128; cfg.c + 1];
    e[0] = 1;
    for &d in &cfg.lambda {
        for j in (1..=cfg.c).rev() {
            e[j] = e[j]
                .checked_add(e[j - 1].checked_mul(d as u128).ok_or(HilbertError::Overflow)?)
                .ok_or(HilbertError::Overflow)?;
        }
    }
    u64::try_from(e[cfg.c]).map_err(|_| HilbertError::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::MatroidComplex;
    use crate::ideal::VariableContext;

    fn ideal(n: usize, gens: &[&[u64]]) -> MonomialIdeal {
        let ctx = VariableContext::standard(n).unwrap();
        MonomialIdeal::new(&ctx, gens.iter().map(|g| Monomial::new(g.to_vec())).collect())
            .unwrap()
    }

    #[test]
    fn numerator_of_squarefree_quadrics() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let n = hilbert_numerator(&i).unwrap();
        assert_eq!(n.coefficients(), &[1, 0, -3, 2]);
    }

    #[test]
    fn numerator_of_zero_ideal() {
        let ctx = VariableContext::standard(2).unwrap();
        let n = hilbert_numerator(&MonomialIdeal::zero(&ctx)).unwrap();
        assert_eq!(n.coefficients(), &[1]);
    }

    #[test]
    fn numerator_complete_intersection_product() {
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        let n = hilbert_numerator(&i).unwrap();
        // (1 - t^2)(1 - t^3)
        assert_eq!(n.coefficients(), &[1, 0, -1, -1, 0, 1]);
    }

    #[test]
    fn numerator_rejects_weighted_context() {
        let ctx = VariableContext::weighted(vec![1, 2]).unwrap();
        let i = MonomialIdeal::new(&ctx, vec![Monomial::new(vec![1, 1])]).unwrap();
        assert!(matches!(
            hilbert_numerator(&i),
            Err(HilbertError::WeightedContext)
        ));
    }

    #[test]
    fn numerator_matches_monomial_counting() {
        // Degree-by-degree count of standard monomials outside I in 3 vars.
        let i = ideal(3, &[&[2, 1, 0], &[0, 2, 2], &[1, 0, 3]]);
        let n = hilbert_numerator(&i).unwrap();
        let bound = 10u64;
        let mut hf = vec![0i64; bound as usize + 1];
        for a in 0..=bound {
            for b in 0..=bound {
                for c in 0..=bound {
                    if a + b + c <= bound && !i.contains(&Monomial::new(vec![a, b, c])).unwrap() {
                        hf[(a + b + c) as usize] += 1;
                    }
                }
            }
        }
        // HS(t) = N(t) / (1-t)^3, so hf[d] = sum_j N_j * binom(d-j+2, 2).
        for d in 0..=bound as usize {
            let mut expect = 0i64;
            for (j, &c) in n.coefficients().iter().enumerate() {
                if j <= d {
                    let k = (d - j) as i64;
                    expect += c * (k + 1) * (k + 2) / 2;
                }
            }
            assert_eq!(hf[d], expect, "Hilbert function mismatch in degree {d}");
        }
    }

    #[test]
    fn h_vector_of_three_points() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(h_vector(&i).unwrap().entries(), &[1, 2]);
    }

    #[test]
    fn h_vector_complete_intersection() {
        let i = ideal(2, &[&[4, 0], &[0, 3]]);
        assert_eq!(h_vector(&i).unwrap().entries(), &[1, 2, 3, 3, 2, 1]);
    }

    #[test]
    fn h_vector_principal_square() {
        let i = ideal(1, &[&[2]]);
        assert_eq!(h_vector(&i).unwrap().entries(), &[1, 1]);
    }

    #[test]
    fn lambda_hvector_base_cases() {
        let ci = LambdaConfig::new(vec![4, 3], 2).unwrap();
        assert_eq!(lambda_hvector(&ci).unwrap().entries(), &[1, 2, 3, 3, 2, 1]);

        let hyp = LambdaConfig::new(vec![4, 3], 1).unwrap();
        assert_eq!(lambda_hvector(&hyp).unwrap().entries(), &[1; 7]);
    }

    #[test]
    fn lambda_hvector_recursion_steps() {
        let cfg = LambdaConfig::new(vec![4, 3, 3, 2], 2).unwrap();
        assert_eq!(
            lambda_hvector(&cfg).unwrap().entries(),
            &[1, 2, 3, 4, 5, 6, 7, 8, 8, 6, 3]
        );
        let steps = lambda_hvector_steps(&cfg).unwrap();
        assert_eq!(steps.len(), 2);
        assert_eq!(steps[0].result.entries(), &[1, 2, 3, 4, 5, 6, 6, 4, 2]);
        assert_eq!(steps[0].section_row.entries(), &[1, 2, 3, 3, 3, 3, 3, 2, 1]);
        assert_eq!(
            steps[1].section_row.entries(),
            &[1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1]
        );
    }

    #[test]
    fn lambda_hvector_codim3() {
        let cfg = LambdaConfig::new(vec![4, 3, 3, 2], 3).unwrap();
        assert_eq!(
            lambda_hvector(&cfg).unwrap().entries(),
            &[1, 3, 6, 10, 15, 19, 20, 16, 9, 3]
        );
        let steps = lambda_hvector_steps(&cfg).unwrap();
        assert_eq!(steps.len(), 1);
        assert_eq!(
            steps[0].section_row.entries(),
            &[1, 3, 5, 7, 9, 11, 12, 10, 6, 2]
        );
        assert_eq!(steps[0].shifted_row.entries(), &[1, 3, 6, 8, 8, 6, 3, 1]);
    }

    #[test]
    fn lambda_hvector_matches_stanley_reisner_route() {
        // [1,1,1] at c=2 is the Stanley-Reisner ideal of U(3,2).
        let cfg = LambdaConfig::new(vec![1, 1, 1], 2).unwrap();
        let ctx = VariableContext::standard(3).unwrap();
        let i = MatroidComplex::uniform(3, 2)
            .unwrap()
            .stanley_reisner(&ctx)
            .unwrap();
        assert_eq!(lambda_hvector(&cfg).unwrap(), h_vector(&i).unwrap());
    }

    #[test]
    fn lambda_hvector_permutation_invariant() {
        use itertools::Itertools;
        let base = vec![4u64, 3, 3, 2];
        for c in 1..=4usize {
            let reference = lambda_hvector(&LambdaConfig::new(base.clone(), c).unwrap()).unwrap();
            for perm in base.iter().copied().permutations(4) {
                let h = lambda_hvector(&LambdaConfig::new(perm, c).unwrap()).unwrap();
                assert_eq!(h, reference);
            }
        }
    }

    #[test]
    fn lambda_degree_elementary_symmetric() {
        let e2 = lambda_degree(&LambdaConfig::new(vec![4, 3, 3, 2], 2).unwrap()).unwrap();
        assert_eq!(e2, 53);
        let e3 = lambda_degree(&LambdaConfig::new(vec![4, 3, 3, 2], 3).unwrap()).unwrap();
        assert_eq!(e3, 102);
        let e1 = lambda_degree(&LambdaConfig::new(vec![7], 1).unwrap()).unwrap();
        assert_eq!(e1, 7);
    }

    #[test]
    fn lambda_sum_rule() {
        for c in 1..=4usize {
            let cfg = LambdaConfig::new(vec![4, 3, 3, 2], c).unwrap();
            assert_eq!(
                lambda_hvector(&cfg).unwrap().sum() as u64,
                lambda_degree(&cfg).unwrap()
            );
        }
    }

    #[test]
    fn division_remainder_reported() {
        // Forcing one division step too many must report a remainder.
        let i = ideal(
            4,
            &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]],
        );
        let n = hilbert_numerator(&i).unwrap();
        assert!(matches!(
            h_from_numerator(&n, 3),
            Err(HilbertError::DivisionRemainder { .. })
        ));
    }
}
