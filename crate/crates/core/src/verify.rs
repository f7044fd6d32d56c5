//! Runnable invariant suites for every module, at a configurable scale.
//!
//! These checks re-derive library results through independent routes
//! (brute-force membership oracles, exhaustive enumerations, dual
//! implementations) and report pass/fail per suite. The `verify` CLI
//! subcommand drives them; the test suite runs the quick scale.

use itertools::Itertools;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::complex::{self, alexander_dual, enumerate_matroids, MatroidComplex, SimplicialComplex};
use crate::config::{
    self, hypergraph_equals_lambda, lambda_config_ideal, specialize, HypergraphSpec,
    MonomialSubstitution, TetrahedralExponents,
};
use crate::hilbert::{h_vector, hilbert_numerator, lambda_degree, lambda_hvector, LambdaConfig};
use crate::ideal::{Monomial, MonomialIdeal, VariableContext};
use crate::resolution::{self, betti_table};
use crate::symbolic::{self, symbolic_power, OpBudget};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    /// Seconds: bounded enumerations, small grids.
    Quick,
    /// Minutes: the full desk-scale sweeps.
    Full,
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

impl CheckResult {
    fn pass(name: &'static str, details: String) -> Self {
        CheckResult {
            name,
            passed: true,
            details,
        }
    }

    fn fail(name: &'static str, details: String) -> Self {
        CheckResult {
            name,
            passed: false,
            details,
        }
    }
}

/// Run every suite; results come back in a fixed order.
pub fn run_all(scale: Scale, seed: u64) -> Vec<CheckResult> {
    vec![
        check_minimalize_canonical(seed),
        check_intersect_membership(seed),
        check_power_additivity(seed),
        check_colon_properties(seed),
        check_alpha_additivity(seed),
        check_bdl_decomposition(scale),
        check_facet_primes_cut_out_ideal(scale),
        check_alexander_involution(scale),
        check_matroid_axiom_agreement(scale),
        check_ordinary_inside_symbolic(scale),
        check_symbolic_semigroup(scale),
        check_symbolic_membership_oracle(scale),
        check_weighted_alpha_scaling(),
        check_witness_revalidation(scale),
        check_lambda_cross_path(scale),
        check_lambda_sum_rule(seed),
        check_numerator_by_counting(seed),
        check_lambda_permutation_invariance(seed),
        check_euler_hilbert_consistency(seed),
        check_betti_transfer(scale),
        check_symbolic_cohen_macaulay(scale),
        check_uniform_linear_resolution(),
        check_hypergraph_corollary(scale),
        check_specialization_intersections(scale),
        check_containment_transfer(scale),
        check_tetrahedral_sweep(scale),
    ]
}

// ---- random generators -----------------------------------------------

fn random_ideal(rng: &mut ChaCha8Rng, max_vars: usize, max_gens: usize) -> MonomialIdeal {
    let n = rng.gen_range(1..=max_vars);
    let ctx = VariableContext::standard(n).unwrap();
    let gens = (0..rng.gen_range(1..=max_gens))
        .map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..=3u64)).collect()))
        .filter(|m| !m.is_one())
        .collect();
    MonomialIdeal::new(&ctx, gens).unwrap()
}

fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max_exp: u64) -> Monomial {
    Monomial::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect())
}

// ---- ideal-core ---------------------------------------------------------

fn check_minimalize_canonical(seed: u64) -> CheckResult {
    const NAME: &str = "ideal-core/minimalize-canonical";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = 0;
    for _ in 0..200 {
        let i = random_ideal(&mut rng, 4, 6);
        let ctx = i.context();
        let again = MonomialIdeal::new(ctx, i.generators().to_vec()).unwrap();
        if again != i {
            return CheckResult::fail(NAME, format!("not idempotent on {}", i.format_generators()));
        }
        let mut shuffled = i.generators().to_vec();
        shuffled.shuffle(&mut rng);
        let permuted = MonomialIdeal::new(ctx, shuffled).unwrap();
        if permuted != i {
            return CheckResult::fail(
                NAME,
                format!("order-dependent on {}", i.format_generators()),
            );
        }
        cases += 1;
    }
    CheckResult::pass(NAME, format!("{cases} random ideals"))
}

fn check_intersect_membership(seed: u64) -> CheckResult {
    const NAME: &str = "ideal-core/intersect-membership";
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let mut cases = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=4);
        let ctx = VariableContext::standard(n).unwrap();
        let make = |rng: &mut ChaCha8Rng| {
            let gens = (0..rng.gen_range(1..=4))
                .map(|_| random_monomial(rng, n, 3))
                .filter(|m| !m.is_one())
                .collect();
            MonomialIdeal::new(&ctx, gens).unwrap()
        };
        let a = make(&mut rng);
        let b = make(&mut rng);
        let inter = a.intersect(&b).unwrap();
        for _ in 0..20 {
            let m = random_monomial(&mut rng, n, 4);
            let lhs = inter.contains(&m).unwrap();
            let rhs = a.contains(&m).unwrap() && b.contains(&m).unwrap();
            if lhs != rhs {
                return CheckResult::fail(
                    NAME,
                    format!(
                        "membership mismatch at {m} for {} ∩ {}",
                        a.format_generators(),
                        b.format_generators()
                    ),
                );
            }
            cases += 1;
        }
    }
    CheckResult::pass(NAME, format!("{cases} membership probes"))
}

fn check_power_additivity(seed: u64) -> CheckResult {
    const NAME: &str = "ideal-core/power-additivity";
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(2));
    let mut cases = 0;
    for _ in 0..40 {
        let i = random_ideal(&mut rng, 3, 3);
        if i.is_zero() {
            continue;
        }
        for (a, b) in [(1u64, 1u64), (1, 2), (2, 2)] {
            let lhs = i.power(a + b).unwrap();
            let rhs = i.power(a).unwrap().product(&i.power(b).unwrap()).unwrap();
            if lhs != rhs {
                return CheckResult::fail(
                    NAME,
                    format!("I^{} != I^{}·I^{} for {}", a + b, a, b, i.format_generators()),
                );
            }
            cases += 1;
        }
    }
    CheckResult::pass(NAME, format!("{cases} power splits"))
}

fn check_colon_properties(seed: u64) -> CheckResult {
    const NAME: &str = "ideal-core/colon-properties";
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(3));
    let mut cases = 0;
    for _ in 0..150 {
        let i = random_ideal(&mut rng, 4, 4);
        let n = i.context().count();
        let m = random_monomial(&mut rng, n, 2);
        let colon = i.colon(&m).unwrap();
        if !colon.contains_ideal(&i).unwrap() {
            return CheckResult::fail(NAME, format!("colon lost {}", i.format_generators()));
        }
        let disjoint = i.generators().iter().all(|g| g.supports_disjoint(&m));
        if disjoint && colon != i {
            return CheckResult::fail(
                NAME,
                format!("coprime colon changed {}", i.format_generators()),
            );
        }
        cases += 1;
    }
    CheckResult::pass(NAME, format!("{cases} colon probes"))
}

fn check_alpha_additivity(seed: u64) -> CheckResult {
    const NAME: &str = "ideal-core/alpha-additivity";
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(4));
    let mut cases = 0;
    for _ in 0..150 {
        let n = rng.gen_range(1..=4);
        let ctx = VariableContext::standard(n).unwrap();
        let make = |rng: &mut ChaCha8Rng| {
            let gens = (0..rng.gen_range(1..=4))
                .map(|_| random_monomial(rng, n, 3))
                .filter(|m| !m.is_one())
                .collect::<Vec<_>>();
            MonomialIdeal::new(&ctx, gens).unwrap()
        };
        let a = make(&mut rng);
        let b = make(&mut rng);
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let sum = a.weighted_alpha().unwrap() + b.weighted_alpha().unwrap();
        if a.product(&b).unwrap().weighted_alpha().unwrap() != sum {
            return CheckResult::fail(
                NAME,
                format!(
                    "alpha not additive on {} · {}",
                    a.format_generators(),
                    b.format_generators()
                ),
            );
        }
        cases += 1;
    }
    CheckResult::pass(NAME, format!("{cases} products"))
}

// ---- complexes -----------------------------------------------------------

/// `I_Δ = y_j I_link + I_deletion` for every matroid and vertex, with the
/// loop case `I_Δ = (y_j) + I_deletion`.
fn check_bdl_decomposition(scale: Scale) -> CheckResult {
    const NAME: &str = "complexes/basic-double-link";
    let max_s = match scale {
        Scale::Quick => 4,
        Scale::Full => 5,
    };
    let mut cases = 0;
    for s in 2..=max_s {
        let ctx = VariableContext::standard(s).unwrap();
        for matroid in enumerate_matroids(s) {
            let complex = matroid.complex();
            let sr = complex::stanley_reisner(complex, &ctx).unwrap();
            for v in 0..s {
                let yv = Monomial::var_power(s, v, 1);
                let (deletion, del_map) = complex.deletion(v).unwrap();
                let del_ideal = embed(
                    &complex::stanley_reisner(&deletion, &VariableContext::standard(s - 1).unwrap())
                        .unwrap(),
                    &del_map,
                    &ctx,
                );
                let rhs = match complex.link(v) {
                    Ok((link, link_map)) => {
                        let link_ideal = embed(
                            &complex::stanley_reisner(
                                &link,
                                &VariableContext::standard(s - 1).unwrap(),
                            )
                            .unwrap(),
                            &link_map,
                            &ctx,
                        );
                        link_ideal.scale(&yv).unwrap().sum(&del_ideal).unwrap()
                    }
                    // A loop: the link is void and its ideal is the unit
                    // ideal, so the first summand is just (y_v).
                    Err(_) => MonomialIdeal::new(&ctx, vec![yv.clone()])
                        .unwrap()
                        .sum(&del_ideal)
                        .unwrap(),
                };
                if sr != rhs {
                    return CheckResult::fail(
                        NAME,
                        format!("failed on facets {:?}, vertex {v}", complex.facet_sets()),
                    );
                }
                cases += 1;
            }
        }
    }
    CheckResult::pass(NAME, format!("{cases} (matroid, vertex) pairs, s <= {max_s}"))
}

/// Re-embed an ideal on a reduced vertex set along new-index -> old-vertex.
fn embed(
    ideal: &MonomialIdeal,
    map: &[usize],
    target_ctx: &std::sync::Arc<VariableContext>,
) -> MonomialIdeal {
    let gens = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut exps = vec![0u64; target_ctx.count()];
            for (new, &e) in g.exponents().iter().enumerate() {
                exps[map[new]] = e;
            }
            Monomial::new(exps)
        })
        .collect();
    MonomialIdeal::new(target_ctx, gens).unwrap()
}

fn check_facet_primes_cut_out_ideal(scale: Scale) -> CheckResult {
    const NAME: &str = "complexes/facet-primes-intersection";
    let max_s = match scale {
        Scale::Quick => 4,
        Scale::Full => 5,
    };
    let mut cases = 0;
    for s in 1..=max_s {
        let ctx = VariableContext::standard(s).unwrap();
        for matroid in enumerate_matroids(s) {
            let sr = matroid.stanley_reisner(&ctx).unwrap();
            let mut inter = MonomialIdeal::unit(&ctx);
            for p in matroid.facet_primes(&ctx).unwrap() {
                inter = inter.intersect(&p).unwrap();
            }
            if inter != sr {
                return CheckResult::fail(
                    NAME,
                    format!("failed on facets {:?}", matroid.complex().facet_sets()),
                );
            }
            cases += 1;
        }
    }
    CheckResult::pass(NAME, format!("{cases} matroids, s <= {max_s}"))
}

fn check_alexander_involution(scale: Scale) -> CheckResult {
    const NAME: &str = "complexes/alexander-dual-involution";
    let max_s = match scale {
        Scale::Quick => 4,
        Scale::Full => 5,
    };
    let mut cases = 0;
    for s in 1..=max_s {
        let ctx = VariableContext::standard(s).unwrap();
        // All squarefree ideals arise from complexes; enumerate antichains
        // through complexes to keep the count manageable.
        for matroid in enumerate_matroids(s) {
            let i = matroid.stanley_reisner(&ctx).unwrap();
            let double = alexander_dual(&alexander_dual(&i).unwrap()).unwrap();
            if double != i {
                return CheckResult::fail(NAME, format!("not involutive on {}", i.format_generators()));
            }
            cases += 1;
        }
    }
    CheckResult::pass(NAME, format!("{cases} squarefree ideals"))
}

fn check_matroid_axiom_agreement(scale: Scale) -> CheckResult {
    const NAME: &str = "complexes/exchange-vs-restriction";
    let max_s = match scale {
        Scale::Quick => 4,
        Scale::Full => 5,
    };
    let mut cases = 0u64;
    for s in 1..=max_s {
        // All complexes: every nonempty antichain of subsets of [s].
        // Enumerate via facet candidate sets over all subsets.
        let subsets: Vec<u32> = (0u32..(1 << s)).collect();
        let n = subsets.len();
        for choice in 1u64..(1 << n) {
            let masks: Vec<u32> = (0..n)
                .filter(|i| choice & (1 << i) != 0)
                .map(|i| subsets[i])
                .collect();
            let complex = SimplicialComplex::from_masks(s, masks).unwrap();
            if complex.is_matroid_exchange() != complex.is_matroid_restrictions() {
                return CheckResult::fail(
                    NAME,
                    format!("axiom disagreement on facets {:?}", complex.facet_sets()),
                );
            }
            cases += 1;
        }
    }
    CheckResult::pass(NAME, format!("{cases} complexes, s <= {max_s}"))
}

// ---- symbolic ------------------------------------------------------------

fn check_ordinary_inside_symbolic(scale: Scale) -> CheckResult {
    const NAME: &str = "symbolic/ordinary-inside-symbolic";
    let m_max = match scale {
        Scale::Quick => 3,
        Scale::Full => 4,
    };
    let mut cases = 0;
    for (s, c) in [(3usize, 2usize), (4, 2), (4, 3), (5, 2)] {
        let u = MatroidComplex::uniform(s, c).unwrap();
        let ctx = VariableContext::standard(s).unwrap();
        let sr = u.stanley_reisner(&ctx).unwrap();
        for m in 1..=m_max {
            let symbolic = symbolic_power(&u, &ctx, m).unwrap();
            if !symbolic.contains_ideal(&sr.power(m).unwrap()).unwrap() {
                return CheckResult::fail(NAME, format!("U({s},{c}), m={m}"));
            }
            cases += 1;
        }
    }
    CheckResult::pass(NAME, format!("{cases} powers"))
}

fn check_symbolic_semigroup(scale: Scale) -> CheckResult {
    const NAME: &str = "symbolic/semigroup-containment";
    let total = match scale {
        Scale::Quick => 4,
        Scale::Full => 6,
    };
    let mut cases = 0;
    for (s, c) in [(3usize, 2usize), (4, 2), (4, 3)] {
        let u = MatroidComplex::uniform(s, c).unwrap();
        let ctx = VariableContext::standard(s).unwrap();
        for m in 1..total {
            for m2 in 1..=(total - m) {
                let lhs = symbolic_power(&u, &ctx, m)
                    .unwrap()
                    .product(&symbolic_power(&u, &ctx, m2).unwrap())
                    .unwrap();
                let rhs = symbolic_power(&u, &ctx, m + m2).unwrap();
                if !rhs.contains_ideal(&lhs).unwrap() {
                    return CheckResult::fail(NAME, format!("U({s},{c}), m={m}, m'={m2}"));
                }
                cases += 1;
            }
        }
    }
    CheckResult::pass(NAME, format!("{cases} products"))
}

fn check_symbolic_membership_oracle(scale: Scale) -> CheckResult {
    const NAME: &str = "symbolic/membership-oracle";
    let m_max = match scale {
        Scale::Quick => 2u64,
        Scale::Full => 4,
    };
    let mut cases = 0u64;
    for (s, c) in [(3usize, 2usize), (4, 2), (4, 3)] {
        let u = MatroidComplex::uniform(s, c).unwrap();
        let ctx = VariableContext::standard(s).unwrap();
        for m in 1..=m_max {
            let ideal = symbolic_power(&u, &ctx, m).unwrap();
            for exps in (0..s).map(|_| 0..=m + 1).multi_cartesian_product() {
                let mono = Monomial::new(exps.clone());
                let oracle = (0..s)
                    .combinations(c)
                    .all(|t| t.iter().map(|&v| exps[v]).sum::<u64>() >= m);
                if ideal.contains(&mono).unwrap() != oracle {
                    return CheckResult::fail(
                        NAME,
                        format!("U({s},{c}), m={m}, exponents {exps:?}"),
                    );
                }
                cases += 1;
            }
        }
    }
    CheckResult::pass(NAME, format!("{cases} membership probes"))
}

fn check_weighted_alpha_scaling() -> CheckResult {
    const NAME: &str = "symbolic/weighted-alpha-scaling";
    let mut cases = 0;
    for (s, c) in [(3usize, 2usize), (4, 2), (4, 3)] {
        let u = MatroidComplex::uniform(s, c).unwrap();
        let unit_ctx = VariableContext::standard(s).unwrap();
        for d in 2..=3u64 {
            let ctx = VariableContext::weighted(vec![d; s]).unwrap();
            for m in 1..=3 {
                let unit_alpha = symbolic_power(&u, &unit_ctx, m)
                    .unwrap()
                    .weighted_alpha()
                    .unwrap();
                let scaled_alpha = symbolic_power(&u, &ctx, m).unwrap().weighted_alpha().unwrap();
                if scaled_alpha != d * unit_alpha {
                    return CheckResult::fail(NAME, format!("U({s},{c}), d={d}, m={m}"));
                }
                cases += 1;
            }
        }
    }
    CheckResult::pass(NAME, format!("{cases} scalings"))
}

fn check_witness_revalidation(scale: Scale) -> CheckResult {
    const NAME: &str = "symbolic/witness-revalidation";
    let (m_max, r_max) = match scale {
        Scale::Quick => (4u64, 3u64),
        Scale::Full => (6, 4),
    };
    let budget = OpBudget::unlimited();
    let mut cases = 0;
    for (s, c) in [(3usize, 2usize), (4, 2)] {
        let u = MatroidComplex::uniform(s, c).unwrap();
        let report = symbolic::resurgence_search(&u, m_max, r_max, &budget).unwrap();
        for cert in &report.certificates {
            match cert.verify(&u) {
                Ok(true) => cases += 1,
                _ => {
                    return CheckResult::fail(
                        NAME,
                        format!("certificate (m={}, r={}) failed revalidation", cert.m, cert.r),
                    )
                }
            }
        }
    }
    CheckResult::pass(NAME, format!("{cases} certificates"))
}

// ---- hilbert ---------------------------------------------------------------

fn check_lambda_cross_path(scale: Scale) -> CheckResult {
    const NAME: &str = "hilbert/lambda-cross-path";
    let (s_max, d_max) = match scale {
        Scale::Quick => (4usize, 2u64),
        Scale::Full => (5, 3),
    };
    let mut cases = 0;
    for s in 1..=s_max {
        for lambda in (0..s).map(|_| 1..=d_max).multi_cartesian_product() {
            for c in 1..=s {
                let cfg = LambdaConfig::new(lambda.clone(), c).unwrap();
                let recursion = lambda_hvector(&cfg).unwrap();
                let ideal_route = h_vector(&lambda_config_ideal(&cfg).unwrap()).unwrap();
                if recursion != ideal_route {
                    return CheckResult::fail(NAME, format!("lambda {lambda:?}, c={c}"));
                }
                cases += 1;
            }
        }
    }
    CheckResult::pass(NAME, format!("{cases} configurations"))
}

fn check_lambda_sum_rule(seed: u64) -> CheckResult {
    const NAME: &str = "hilbert/lambda-sum-rule";
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(5));
    let mut cases = 0;
    for _ in 0..100 {
        let s = rng.gen_range(1..=6);
        let lambda: Vec<u64> = (0..s).map(|_| rng.gen_range(1..=4)).collect();
        for c in 1..=s {
            let cfg = LambdaConfig::new(lambda.clone(), c).unwrap();
            if lambda_hvector(&cfg).unwrap().sum() as u64 != lambda_degree(&cfg).unwrap() {
                return CheckResult::fail(NAME, format!("lambda {lambda:?}, c={c}"));
            }
            cases += 1;
        }
    }
    CheckResult::pass(NAME, format!("{cases} configurations"))
}

fn check_numerator_by_counting(seed: u64) -> CheckResult {
    const NAME: &str = "hilbert/numerator-by-counting";
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(6));
    let bound = 12u64;
    let mut cases = 0;
    for _ in 0..25 {
        let i = random_ideal(&mut rng, 4, 8);
        if i.is_unit() {
            continue;
        }
        let n = i.context().count();
        let numerator = hilbert_numerator(&i).unwrap();
        // Count standard monomials outside I degree by degree.
        let mut hf = vec![0i64; bound as usize + 1];
        for exps in (0..n).map(|_| 0..=bound).multi_cartesian_product() {
            let deg: u64 = exps.iter().sum();
            if deg <= bound && !i.contains(&Monomial::new(exps)).unwrap() {
                hf[deg as usize] += 1;
            }
        }
        for d in 0..=bound as usize {
            let mut expect = 0i64;
            for (j, &coeff) in numerator.coefficients().iter().enumerate() {
                if j <= d {
                    expect += coeff * binom_i64((d - j) + n - 1, n - 1);
                }
            }
            if hf[d] != expect {
                return CheckResult::fail(
                    NAME,
                    format!("degree {d} of {}", i.format_generators()),
                );
            }
        }
        cases += 1;
    }
    CheckResult::pass(NAME, format!("{cases} random ideals up to degree {bound}"))
}

fn binom_i64(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let mut acc: i64 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as i64 / (i + 1) as i64;
    }
    acc
}

fn check_lambda_permutation_invariance(seed: u64) -> CheckResult {
    const NAME: &str = "hilbert/lambda-permutation-invariance";
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(7));
    let mut cases = 0;
    for _ in 0..20 {
        let s = rng.gen_range(2..=5);
        let lambda: Vec<u64> = (0..s).map(|_| rng.gen_range(1..=4)).collect();
        for c in 1..=s {
            let reference = lambda_hvector(&LambdaConfig::new(lambda.clone(), c).unwrap()).unwrap();
            for perm in lambda.iter().copied().permutations(s) {
                if lambda_hvector(&LambdaConfig::new(perm.clone(), c).unwrap()).unwrap()
                    != reference
                {
                    return CheckResult::fail(NAME, format!("lambda {lambda:?} vs {perm:?}, c={c}"));
                }
                cases += 1;
            }
        }
    }
    CheckResult::pass(NAME, format!("{cases} permutations"))
}

// ---- resolution ------------------------------------------------------------

fn check_euler_hilbert_consistency(seed: u64) -> CheckResult {
    const NAME: &str = "resolution/euler-hilbert";
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(8));
    let mut cases = 0;
    for _ in 0..60 {
        let i = random_ideal(&mut rng, 4, 8);
        if i.is_zero() || i.is_unit() {
            continue;
        }
        let table = betti_table(&i).unwrap();
        let numerator = hilbert_numerator(&i).unwrap();
        if table.alternating_sum() != numerator.coefficients() {
            return CheckResult::fail(NAME, format!("on {}", i.format_generators()));
        }
        cases += 1;
    }
    CheckResult::pass(NAME, format!("{cases} random ideals"))
}

fn check_betti_transfer(scale: Scale) -> CheckResult {
    const NAME: &str = "resolution/betti-transfer";
    let (max_s, weights): (usize, Vec<Vec<u64>>) = match scale {
        Scale::Quick => (3, vec![vec![2, 1, 3], vec![2, 2, 2], vec![1, 3, 1]]),
        Scale::Full => (4, vec![vec![2, 1, 3, 2], vec![3, 3, 3, 3], vec![1, 2, 1, 2]]),
    };
    let mut cases = 0;
    for s in 2..=max_s {
        let ctx = VariableContext::standard(s).unwrap();
        for matroid in enumerate_matroids(s) {
            let sr = matroid.stanley_reisner(&ctx).unwrap();
            let source = betti_table(&sr).unwrap();
            for w in &weights {
                let sub = MonomialSubstitution::powers(&w[..s]).unwrap();
                let target = betti_table(&specialize(&sr, &sub).unwrap()).unwrap();
                if !transfer_matches(&source, &sub, &target) {
                    return CheckResult::fail(
                        NAME,
                        format!(
                            "facets {:?}, weights {:?}",
                            matroid.complex().facet_sets(),
                            &w[..s]
                        ),
                    );
                }
                cases += 1;
            }
        }
    }
    CheckResult::pass(NAME, format!("{cases} (matroid, weights) pairs"))
}

/// The specialized table must be exactly the source table with every
/// multidegree pushed through the substitution.
pub fn transfer_matches(
    source: &resolution::BettiTable,
    sub: &MonomialSubstitution,
    target: &resolution::BettiTable,
) -> bool {
    if source.multigraded().len() != target.multigraded().len() {
        return false;
    }
    for (&(i, ref a), &rank) in source.multigraded() {
        let image = match sub.apply(&Monomial::new(a.clone())) {
            Ok(m) => m.exponents().to_vec(),
            Err(_) => return false,
        };
        if target.multigraded().get(&(i, image)) != Some(&rank) {
            return false;
        }
    }
    source.totals() == target.totals()
}

fn check_symbolic_cohen_macaulay(scale: Scale) -> CheckResult {
    const NAME: &str = "resolution/symbolic-cohen-macaulay";
    let (max_s, m_max) = match scale {
        Scale::Quick => (4usize, 2u64),
        Scale::Full => (5, 3),
    };
    let mut cases = 0;
    for s in 1..=max_s {
        let ctx = VariableContext::standard(s).unwrap();
        let matroids = enumerate_matroids(s);
        let failures: Vec<String> = matroids
            .par_iter()
            .flat_map(|matroid| {
                (1..=m_max)
                    .filter_map(|m| {
                        let ideal = symbolic_power(matroid, &ctx, m).unwrap();
                        match resolution::is_cohen_macaulay(&ideal) {
                            Ok(true) => None,
                            _ => Some(format!(
                                "facets {:?}, m={m}",
                                matroid.complex().facet_sets()
                            )),
                        }
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        if let Some(first) = failures.first() {
            return CheckResult::fail(NAME, first.clone());
        }
        cases += matroids.len() * m_max as usize;
    }
    CheckResult::pass(NAME, format!("{cases} symbolic powers, s <= {max_s}"))
}

fn check_uniform_linear_resolution() -> CheckResult {
    const NAME: &str = "resolution/uniform-linear-resolution";
    let mut cases = 0;
    for (s, c) in [(3usize, 2usize), (4, 2), (4, 3), (5, 2), (5, 3), (5, 4)] {
        let ctx = VariableContext::standard(s).unwrap();
        let i = MatroidComplex::uniform(s, c)
            .unwrap()
            .stanley_reisner(&ctx)
            .unwrap();
        let table = betti_table(&i).unwrap();
        for (&(idx, j), _) in table.entries().iter().filter(|(&(idx, _), _)| idx >= 1) {
            if j as usize != (s - c + 1) + (idx - 1) {
                return CheckResult::fail(NAME, format!("U({s},{c}) has rank at ({idx}, {j})"));
            }
        }
        cases += 1;
    }
    CheckResult::pass(NAME, format!("{cases} uniform matroids"))
}

// ---- configurations ---------------------------------------------------------

fn check_hypergraph_corollary(scale: Scale) -> CheckResult {
    const NAME: &str = "configurations/hypergraph-corollary";
    let total_max = match scale {
        Scale::Quick => 6,
        Scale::Full => 8,
    };
    let mut cases = 0;
    for total in 1..=total_max {
        for blocks in compositions_of(total) {
            for c in 1..=blocks.len() {
                let spec = HypergraphSpec::new(blocks.clone(), c).unwrap();
                if !hypergraph_equals_lambda(&spec).unwrap() {
                    return CheckResult::fail(NAME, format!("blocks {blocks:?}, c={c}"));
                }
                cases += 1;
            }
        }
    }
    CheckResult::pass(NAME, format!("{cases} hypergraphs, total vertices <= {total_max}"))
}

/// Ordered compositions of n into positive parts.
pub fn compositions_of(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions_of(n - first) {
            let mut v = vec![first];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

fn check_specialization_intersections(scale: Scale) -> CheckResult {
    const NAME: &str = "configurations/specialization-intersections";
    let max_s = match scale {
        Scale::Quick => 4,
        Scale::Full => 5,
    };
    let mut cases = 0;
    for s in 2..=max_s {
        let ctx = VariableContext::standard(s).unwrap();
        let mut degree_choices = vec![vec![1u64; s], vec![2; s]];
        let mut mixed = vec![1u64; s];
        mixed[0] = 3;
        if s > 1 {
            mixed[1] = 2;
        }
        degree_choices.push(mixed);
        for matroid in enumerate_matroids(s) {
            let sr = matroid.stanley_reisner(&ctx).unwrap();
            for degrees in &degree_choices {
                let sub = MonomialSubstitution::powers(degrees).unwrap();
                let lhs = specialize(&sr, &sub).unwrap();
                let mut rhs = MonomialIdeal::unit(sub.target());
                for p in matroid.facet_primes(&ctx).unwrap() {
                    rhs = rhs.intersect(&specialize(&p, &sub).unwrap()).unwrap();
                }
                if lhs != rhs {
                    return CheckResult::fail(
                        NAME,
                        format!(
                            "facets {:?}, degrees {degrees:?}",
                            matroid.complex().facet_sets()
                        ),
                    );
                }
                cases += 1;
            }
        }
    }
    CheckResult::pass(NAME, format!("{cases} specializations"))
}

fn check_containment_transfer(scale: Scale) -> CheckResult {
    const NAME: &str = "configurations/containment-transfer";
    let (m_max, r_max) = match scale {
        Scale::Quick => (3u64, 2u64),
        Scale::Full => (4, 3),
    };
    let budget = OpBudget::unlimited();
    let mut cases = 0;
    for (s, c) in [(3usize, 2usize), (4, 2)] {
        let u = MatroidComplex::uniform(s, c).unwrap();
        let ctx = VariableContext::standard(s).unwrap();
        let sr = u.stanley_reisner(&ctx).unwrap();
        let sub = MonomialSubstitution::powers(&vec![2u64; s]).unwrap();
        for m in 1..=m_max {
            for r in 1..=r_max {
                let combinatorial = symbolic::is_contained(&u, m, r, &budget).unwrap().contained;
                let spec_symbolic = specialize(&symbolic_power(&u, &ctx, m).unwrap(), &sub).unwrap();
                let spec_power = specialize(&sr, &sub).unwrap().power(r).unwrap();
                let specialized = spec_power.contains_ideal(&spec_symbolic).unwrap();
                if combinatorial != specialized {
                    return CheckResult::fail(NAME, format!("U({s},{c}), m={m}, r={r}"));
                }
                cases += 1;
            }
        }
    }
    CheckResult::pass(NAME, format!("{cases} grid cells"))
}

fn check_tetrahedral_sweep(scale: Scale) -> CheckResult {
    const NAME: &str = "configurations/tetrahedral-sweep";
    let max_exp = match scale {
        Scale::Quick => 1u64,
        Scale::Full => 2,
    };
    let all: Vec<Vec<u64>> = (0..6)
        .map(|_| 0..=max_exp)
        .multi_cartesian_product()
        .filter(|p| p.iter().any(|&x| x > 0))
        .collect();
    let failures: Vec<String> = all
        .par_iter()
        .filter_map(|p| {
            let p6: [u64; 6] = p.clone().try_into().unwrap();
            let tetra = TetrahedralExponents::new(p6).unwrap();
            let classifier = config::tetrahedral_is_acm(&tetra);
            match config::tetrahedral_oracle(&tetra) {
                Ok(oracle) if oracle == classifier => None,
                Ok(oracle) => Some(format!(
                    "p={p6:?}: classifier {classifier}, oracle {oracle}"
                )),
                Err(e) => Some(format!("p={p6:?}: oracle error {e}")),
            }
        })
        .collect();
    if let Some(first) = failures.first() {
        return CheckResult::fail(NAME, first.clone());
    }
    CheckResult::pass(NAME, format!("{} exponent vectors", all.len()))
}
