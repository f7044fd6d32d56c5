//! Constructions around flat monomial specializations: hypersurface and
//! star configuration ideals, complete multipartite hypergraph ideals, and
//! the tetrahedral ACM classifier with its projective-dimension oracle.

use std::sync::Arc;

use itertools::Itertools;
use thiserror::Error;

use crate::complex::{ComplexError, MatroidComplex};
use crate::hilbert::{HilbertError, LambdaConfig};
use crate::ideal::{IdealError, Monomial, MonomialIdeal, VariableContext};
use crate::resolution::{self, ResolutionError};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("substitution needs {expected} images, got {found}")]
    ImageCountMismatch { expected: usize, found: usize },
    #[error("substitution images must have pairwise disjoint supports")]
    OverlappingSupports,
    #[error("substitution images must be non-units")]
    UnitImage,
    #[error("ideal lives in {found} variables but the substitution source has {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("hypergraph spec requires s >= c >= 1 and positive block sizes")]
    BadHypergraphSpec,
    #[error("tetrahedral exponents must not all be zero")]
    EmptyTetrahedral,
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
}

/// A flat monomial substitution `y_i -> images[i]`: the images are
/// non-unit monomials with pairwise disjoint supports, the monomial
/// criterion for forming a regular sequence.
#[derive(Debug, Clone)]
pub struct MonomialSubstitution {
    source: Arc<VariableContext>,
    target: Arc<VariableContext>,
    images: Vec<Monomial>,
}

impl MonomialSubstitution {
    pub fn new(
        source: Arc<VariableContext>,
        target: Arc<VariableContext>,
        images: Vec<Monomial>,
    ) -> Result<Self, ConfigError> {
        if images.len() != source.count() {
            return Err(ConfigError::ImageCountMismatch {
                expected: source.count(),
                found: images.len(),
            });
        }
        for img in &images {
            if img.len() != target.count() {
                return Err(ConfigError::DimensionMismatch {
                    expected: target.count(),
                    found: img.len(),
                });
            }
            if img.is_one() {
                return Err(ConfigError::UnitImage);
            }
        }
        for (i, a) in images.iter().enumerate() {
            for b in &images[i + 1..] {
                if !a.supports_disjoint(b) {
                    return Err(ConfigError::OverlappingSupports);
                }
            }
        }
        Ok(MonomialSubstitution {
            source,
            target,
            images,
        })
    }

    /// The power substitution `y_i -> x_{i-1}^{d_i}` into a standard graded
    /// target with one variable per source variable.
    pub fn powers(degrees: &[u64]) -> Result<Self, ConfigError> {
        let s = degrees.len();
        let source = VariableContext::standard(s)?;
        let target = VariableContext::x_vars(s)?;
        let images = degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| Monomial::var_power(s, i, d))
            .collect();
        Self::new(source, target, images)
    }

    pub fn source(&self) -> &Arc<VariableContext> {
        &self.source
    }

    pub fn target(&self) -> &Arc<VariableContext> {
        &self.target
    }

    pub fn images(&self) -> &[Monomial] {
        &self.images
    }

    /// Image of a monomial: exponents push through the substitution.
    pub fn apply(&self, m: &Monomial) -> Result<Monomial, ConfigError> {
        if m.len() != self.source.count() {
            return Err(ConfigError::DimensionMismatch {
                expected: self.source.count(),
                found: m.len(),
            });
        }
        let mut exps = vec![0u64; self.target.count()];
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            for (j, &img_e) in self.images[i].exponents().iter().enumerate() {
                if img_e == 0 {
                    continue;
                }
                let term = img_e.checked_mul(e).ok_or(IdealError::Overflow)?;
                exps[j] = exps[j].checked_add(term).ok_or(IdealError::Overflow)?;
            }
        }
        Ok(Monomial::new(exps))
    }
}

/// Specialize an ideal along a flat monomial substitution. The image of a
/// generator antichain stays an antichain (asserted).
pub fn specialize(
    ideal: &MonomialIdeal,
    sub: &MonomialSubstitution,
) -> Result<MonomialIdeal, ConfigError> {
    if ideal.context().count() != sub.source().count() {
        return Err(ConfigError::DimensionMismatch {
            expected: sub.source().count(),
            found: ideal.context().count(),
        });
    }
    let images = ideal
        .generators()
        .iter()
        .map(|g| sub.apply(g))
        .collect::<Result<Vec<_>, _>>()?;
    let out = MonomialIdeal::new(sub.target(), images)?;
    debug_assert_eq!(
        out.num_generators(),
        ideal.num_generators(),
        "flat substitution must preserve the generator antichain"
    );
    Ok(out)
}

/// The hypersurface-configuration ideal realized with `f_i = x_{i-1}^{d_i}`:
/// generated by the products of `s - c + 1` of the powers. Equals the
/// specialization of the uniform matroid ideal (asserted).
pub fn lambda_config_ideal(cfg: &LambdaConfig) -> Result<MonomialIdeal, ConfigError> {
    let s = cfg.s();
    let ctx = VariableContext::x_vars(s)?;
    let take = s - cfg.codim() + 1;
    let mut gens = Vec::new();
    for subset in (0..s).combinations(take) {
        let mut exps = vec![0u64; s];
        for i in subset {
            exps[i] = cfg.lambda()[i];
        }
        gens.push(Monomial::new(exps));
    }
    let direct = MonomialIdeal::new(&ctx, gens)?;
    #[cfg(debug_assertions)]
    {
        let uniform = MatroidComplex::uniform(s, cfg.codim()).expect("uniform");
        let sr = uniform
            .stanley_reisner(&VariableContext::standard(s).expect("ctx"))
            .expect("stanley_reisner");
        let spec = specialize(&sr, &MonomialSubstitution::powers(cfg.lambda()).expect("sub"))
            .expect("specialize");
        debug_assert_eq!(direct, spec);
    }
    Ok(direct)
}

/// Complete s-partite c-uniform hypergraph datum: block sizes `e_1..e_s`
/// and the codimension `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergraphSpec {
    block_sizes: Vec<usize>,
    c: usize,
}

impl HypergraphSpec {
    pub fn new(block_sizes: Vec<usize>, c: usize) -> Result<Self, ConfigError> {
        if c < 1 || c > block_sizes.len() || block_sizes.iter().any(|&e| e == 0) {
            return Err(ConfigError::BadHypergraphSpec);
        }
        Ok(HypergraphSpec { block_sizes, c })
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    pub fn codim(&self) -> usize {
        self.c
    }

    pub fn total_variables(&self) -> usize {
        self.block_sizes.iter().sum()
    }

    /// Variable context with one variable `x{i}{j}` per vertex `v_{i,j}`,
    /// blocks in order.
    pub fn context(&self) -> Result<Arc<VariableContext>, ConfigError> {
        let mut names = Vec::with_capacity(self.total_variables());
        for (i, &e) in self.block_sizes.iter().enumerate() {
            for j in 1..=e {
                names.push(format!("x{}{}", i + 1, j));
            }
        }
        let n = names.len();
        Ok(Arc::new(VariableContext::new(names, vec![1; n])?))
    }

    fn block_offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.block_sizes.len());
        let mut acc = 0;
        for &e in &self.block_sizes {
            offsets.push(acc);
            acc += e;
        }
        offsets
    }
}

/// The ideal cut out by all codimension-c coordinate subspaces picking one
/// vertex from each of c distinct blocks: the intersection of the primes
/// `(x_{i_1,j_1}, ..., x_{i_c,j_c})`.
pub fn hypergraph_ideal(spec: &HypergraphSpec) -> Result<MonomialIdeal, ConfigError> {
    let ctx = spec.context()?;
    let offsets = spec.block_offsets();
    let s = spec.block_sizes().len();
    let mut result = MonomialIdeal::unit(&ctx);
    for blocks in (0..s).combinations(spec.codim()) {
        let member_ranges: Vec<Vec<usize>> = blocks
            .iter()
            .map(|&i| (0..spec.block_sizes()[i]).map(|j| offsets[i] + j).collect())
            .collect();
        for vars in member_ranges.iter().multi_cartesian_product() {
            let vars: Vec<usize> = vars.into_iter().copied().collect();
            let prime = MonomialIdeal::variable_prime(&ctx, &vars)?;
            result = result.intersect(&prime)?;
        }
    }
    Ok(result)
}

/// Independently rebuild the hypergraph ideal as a specialization of the
/// uniform matroid ideal by the block products `y_i -> prod_j x_{i,j}` and
/// compare canonical forms.
pub fn hypergraph_equals_lambda(spec: &HypergraphSpec) -> Result<bool, ConfigError> {
    let ctx = spec.context()?;
    let offsets = spec.block_offsets();
    let s = spec.block_sizes().len();
    let n = spec.total_variables();
    let source = VariableContext::standard(s)?;
    let images: Vec<Monomial> = spec
        .block_sizes()
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let mut exps = vec![0u64; n];
            for j in 0..e {
                exps[offsets[i] + j] = 1;
            }
            Monomial::new(exps)
        })
        .collect();
    let sub = MonomialSubstitution::new(source.clone(), ctx, images)?;
    let sr = MatroidComplex::uniform(s, spec.codim())?.stanley_reisner(&source)?;
    let lambda_side = specialize(&sr, &sub)?;
    Ok(lambda_side == hypergraph_ideal(spec)?)
}

/// Which opposite-pair swap normalizes the exponent vector. The swaps come
/// from relabeling the four underlying variables, so they fix the ideal up
/// to isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairSwap {
    Identity,
    /// Exchange the roles of the (p1,p6) and (p2,p5) opposite pairs.
    FirstSecond,
    /// Exchange the roles of the (p1,p6) and (p3,p4) opposite pairs.
    FirstThird,
}

impl PairSwap {
    pub fn describe(&self) -> &'static str {
        match self {
            PairSwap::Identity => "identity",
            PairSwap::FirstSecond => "swapped pairs (p1,p6) and (p2,p5)",
            PairSwap::FirstThird => "swapped pairs (p1,p6) and (p3,p4)",
        }
    }
}

/// Exponents of a tetrahedral intersection, in the pairing order
/// `(x0,x1), (x0,x2), (x0,x3), (x1,x2), (x1,x3), (x2,x3)`. Construction
/// normalizes so that `p1 + p6` is the largest opposite-pair sum,
/// recording the pair permutation used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TetrahedralExponents {
    original: [u64; 6],
    normalized: [u64; 6],
    swap: PairSwap,
}

/// The six coordinate pairs, matching the exponent order.
const TETRA_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

impl TetrahedralExponents {
    pub fn new(p: [u64; 6]) -> Result<Self, ConfigError> {
        if p.iter().all(|&x| x == 0) {
            return Err(ConfigError::EmptyTetrahedral);
        }
        let s1 = p[0] + p[5];
        let s2 = p[1] + p[4];
        let s3 = p[2] + p[3];
        let (normalized, swap) = if s1 >= s2 && s1 >= s3 {
            (p, PairSwap::Identity)
        } else if s2 >= s3 {
            // Relabel x1 <-> x2: p1<->p2, p5<->p6.
            ([p[1], p[0], p[2], p[3], p[5], p[4]], PairSwap::FirstSecond)
        } else {
            // Relabel x1 <-> x3: p1<->p3, p4<->p6.
            ([p[2], p[1], p[0], p[5], p[4], p[3]], PairSwap::FirstThird)
        };
        Ok(TetrahedralExponents {
            original: p,
            normalized,
            swap,
        })
    }

    pub fn original(&self) -> [u64; 6] {
        self.original
    }

    pub fn normalized(&self) -> [u64; 6] {
        self.normalized
    }

    pub fn swap(&self) -> PairSwap {
        self.swap
    }
}

/// The six-fold intersection of pair-prime powers in `x0..x3`, built from
/// the original (un-normalized) exponents; factors with exponent zero are
/// the unit ideal and drop out.
pub fn tetrahedral_ideal(p: &TetrahedralExponents) -> Result<MonomialIdeal, ConfigError> {
    let ctx = VariableContext::x_vars(4)?;
    let mut result = MonomialIdeal::unit(&ctx);
    for (k, &(a, b)) in TETRA_PAIRS.iter().enumerate() {
        let e = p.original[k];
        if e == 0 {
            continue;
        }
        let prime = MonomialIdeal::variable_prime(&ctx, &[a, b])?;
        result = result.intersect(&prime.power(e)?)?;
    }
    Ok(result)
}

/// The arithmetic ACM classifier, evaluated on the normalized exponents:
/// the scheme is ACM iff at least one of four conditions holds.
pub fn tetrahedral_is_acm(p: &TetrahedralExponents) -> bool {
    let q: Vec<i128> = p.normalized.iter().map(|&x| x as i128).collect();
    let (q1, q2, q3, q4, q5, q6) = (q[0], q[1], q[2], q[3], q[4], q[5]);
    // (i): one of the dominant opposite pair exponents vanishes.
    if q1 == 0 || q6 == 0 {
        return true;
    }
    // (ii): the dominant pair sum exceeds the runner-up by at most 1.
    let runner_up = (q2 + q5).max(q3 + q4);
    if q1 + q6 - runner_up <= 1 {
        return true;
    }
    // (iii): one of four strict linking inequalities.
    let iii = 2 * q1 < q2 + q3 + 3 - q6
        || 2 * q1 < q4 + q5 + 3 - q6
        || 2 * q6 < q2 + q4 + 3 - q1
        || 2 * q6 < q3 + q5 + 3 - q1;
    if iii {
        return true;
    }
    // (iv): all inequalities of (iii) fail, both opposite sums sit exactly
    // 2 below the dominant one, and q1 + q3 + q5 is even.
    q1 + q6 == 2 + q2 + q5 && q1 + q6 == 2 + q3 + q4 && (q1 + q3 + q5) % 2 == 0
}

/// Ground-truth ACM test through the resolution: projective dimension of
/// the quotient equals the codimension (always 2 here).
pub fn tetrahedral_oracle(p: &TetrahedralExponents) -> Result<bool, ConfigError> {
    let ideal = tetrahedral_ideal(p)?;
    Ok(resolution::is_cohen_macaulay(&ideal)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uniform_sr(s: usize, c: usize) -> MonomialIdeal {
        let ctx = VariableContext::standard(s).unwrap();
        MatroidComplex::uniform(s, c)
            .unwrap()
            .stanley_reisner(&ctx)
            .unwrap()
    }

    #[test]
    fn specialize_squares() {
        let i = uniform_sr(3, 2);
        let sub = MonomialSubstitution::powers(&[2, 2, 2]).unwrap();
        let j = specialize(&i, &sub).unwrap();
        assert_eq!(j.format_generators(), "(x0^2*x1^2, x0^2*x2^2, x1^2*x2^2)");
    }

    #[test]
    fn specialize_identity() {
        let i = uniform_sr(4, 2);
        let sub = MonomialSubstitution::powers(&[1, 1, 1, 1]).unwrap();
        let j = specialize(&i, &sub).unwrap();
        assert_eq!(j.generators(), i.generators());
    }

    #[test]
    fn specialize_complete_intersection_blocks() {
        let source = VariableContext::standard(2).unwrap();
        let target = VariableContext::x_vars(4).unwrap();
        let images = vec![
            Monomial::new(vec![1, 1, 0, 0]),
            Monomial::new(vec![0, 0, 1, 1]),
        ];
        let sub = MonomialSubstitution::new(source, target, images).unwrap();
        let i = uniform_sr(2, 2);
        let j = specialize(&i, &sub).unwrap();
        assert_eq!(j.format_generators(), "(x0*x1, x2*x3)");
    }

    #[test]
    fn overlapping_supports_rejected() {
        let source = VariableContext::standard(2).unwrap();
        let target = VariableContext::x_vars(2).unwrap();
        let images = vec![Monomial::new(vec![1, 0]), Monomial::new(vec![1, 1])];
        assert!(matches!(
            MonomialSubstitution::new(source, target, images),
            Err(ConfigError::OverlappingSupports)
        ));
    }

    #[test]
    fn unit_image_rejected() {
        let source = VariableContext::standard(2).unwrap();
        let target = VariableContext::x_vars(2).unwrap();
        let images = vec![Monomial::new(vec![1, 0]), Monomial::new(vec![0, 0])];
        assert!(matches!(
            MonomialSubstitution::new(source, target, images),
            Err(ConfigError::UnitImage)
        ));
    }

    #[test]
    fn lambda_ideal_star_case() {
        let cfg = LambdaConfig::new(vec![1, 1, 1], 2).unwrap();
        let i = lambda_config_ideal(&cfg).unwrap();
        assert_eq!(i.format_generators(), "(x0*x1, x0*x2, x1*x2)");
    }

    #[test]
    fn lambda_ideal_degrees() {
        let cfg = LambdaConfig::new(vec![4, 3, 3, 2], 2).unwrap();
        let i = lambda_config_ideal(&cfg).unwrap();
        let mut degrees: Vec<u64> = i
            .generators()
            .iter()
            .map(|g| g.total_degree().unwrap())
            .collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![8, 9, 9, 10]);
    }

    #[test]
    fn lambda_ideal_complete_intersection() {
        let cfg = LambdaConfig::new(vec![2, 2], 2).unwrap();
        let i = lambda_config_ideal(&cfg).unwrap();
        assert_eq!(i.format_generators(), "(x0^2, x1^2)");
    }

    #[test]
    fn hypergraph_star_case() {
        let spec = HypergraphSpec::new(vec![1, 1, 1, 1], 2).unwrap();
        let i = hypergraph_ideal(&spec).unwrap();
        assert_eq!(i.num_generators(), 4);
        assert!(i.generators().iter().all(|g| g.total_degree().unwrap() == 3));
    }

    #[test]
    fn hypergraph_two_blocks() {
        let spec = HypergraphSpec::new(vec![2, 1], 2).unwrap();
        let i = hypergraph_ideal(&spec).unwrap();
        assert_eq!(i.format_generators(), "(x21, x11*x12)");
    }

    #[test]
    fn hypergraph_complete_intersection_blocks() {
        let spec = HypergraphSpec::new(vec![2, 2], 2).unwrap();
        let i = hypergraph_ideal(&spec).unwrap();
        assert_eq!(i.format_generators(), "(x11*x12, x21*x22)");
    }

    #[test]
    fn hypergraph_matches_lambda_route() {
        for (blocks, c) in [
            (vec![1usize, 1, 1, 1], 2usize),
            (vec![2, 1], 2),
            (vec![2, 2], 2),
            (vec![2, 2, 1], 2),
            (vec![3, 2, 1], 3),
        ] {
            let spec = HypergraphSpec::new(blocks.clone(), c).unwrap();
            assert!(
                hypergraph_equals_lambda(&spec).unwrap(),
                "blocks {blocks:?}, c={c}"
            );
        }
    }

    #[test]
    fn tetrahedral_normalization() {
        let p = TetrahedralExponents::new([0, 1, 1, 1, 1, 0]).unwrap();
        assert_eq!(p.swap(), PairSwap::FirstSecond);
        assert_eq!(p.normalized(), [1, 0, 1, 1, 0, 1]);

        let p = TetrahedralExponents::new([0, 0, 2, 2, 0, 0]).unwrap();
        assert_eq!(p.swap(), PairSwap::FirstThird);
        assert_eq!(p.normalized(), [2, 0, 0, 0, 0, 2]);

        assert!(matches!(
            TetrahedralExponents::new([0; 6]),
            Err(ConfigError::EmptyTetrahedral)
        ));
    }

    #[test]
    fn tetrahedral_all_ones() {
        let p = TetrahedralExponents::new([1; 6]).unwrap();
        let i = tetrahedral_ideal(&p).unwrap();
        assert_eq!(i.num_generators(), 4);
        assert!(i.generators().iter().all(|g| g.total_degree().unwrap() == 3));
        assert!(tetrahedral_is_acm(&p));
        assert!(tetrahedral_oracle(&p).unwrap());
    }

    #[test]
    fn tetrahedral_two_skew_lines() {
        let p = TetrahedralExponents::new([1, 0, 0, 0, 0, 1]).unwrap();
        assert!(!tetrahedral_is_acm(&p));
        assert!(!tetrahedral_oracle(&p).unwrap());
    }

    #[test]
    fn tetrahedral_parity_case() {
        let p = TetrahedralExponents::new([2, 1, 1, 1, 1, 2]).unwrap();
        assert!(tetrahedral_is_acm(&p));
        assert!(tetrahedral_oracle(&p).unwrap());
    }
}
