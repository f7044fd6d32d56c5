//! Acceptance suite: every release criterion as one test, each printing a
//! pass line with its scope. All comparisons are exact.
//!
//! Run with `cargo test -p starconf --test acceptance -- --nocapture` to
//! see the per-criterion lines.

use itertools::Itertools;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use starconf::complex::{enumerate_matroids, MatroidComplex};
use starconf::config::{
    hypergraph_equals_lambda, lambda_config_ideal, specialize, tetrahedral_is_acm,
    tetrahedral_oracle, HypergraphSpec, MonomialSubstitution, TetrahedralExponents,
};
use starconf::hilbert::{h_vector, lambda_degree, lambda_hvector, lambda_hvector_steps, LambdaConfig};
use starconf::ideal::{Monomial, MonomialIdeal, VariableContext};
use starconf::resolution::{betti_table, BettiTable};
use starconf::symbolic::{
    is_contained, resurgence_search, symbolic_power, waldschmidt, OpBudget, Rational,
};

fn hv(cfg: (&[u64], usize)) -> Vec<i64> {
    lambda_hvector(&LambdaConfig::new(cfg.0.to_vec(), cfg.1).unwrap())
        .unwrap()
        .entries()
        .to_vec()
}

#[test]
fn acceptance_01_golden_hvectors() {
    assert_eq!(hv((&[4, 3, 3, 2], 2)), vec![1, 2, 3, 4, 5, 6, 7, 8, 8, 6, 3]);
    assert_eq!(hv((&[4, 3, 3, 2], 3)), vec![1, 3, 6, 10, 15, 19, 20, 16, 9, 3]);

    // Intermediate configurations reached by the recursion.
    assert_eq!(hv((&[4, 3], 2)), vec![1, 2, 3, 3, 2, 1]);
    assert_eq!(hv((&[4, 3, 3], 2)), vec![1, 2, 3, 4, 5, 6, 6, 4, 2]);
    assert_eq!(hv((&[4, 3, 3], 3)), vec![1, 3, 6, 8, 8, 6, 3, 1]);

    // The same rows must appear inside the recursion's own step trace.
    let steps =
        lambda_hvector_steps(&LambdaConfig::new(vec![4, 3, 3, 2], 2).unwrap()).unwrap();
    assert_eq!(steps[0].shifted_row.entries(), &[1, 2, 3, 3, 2, 1]);
    assert_eq!(steps[0].result.entries(), &[1, 2, 3, 4, 5, 6, 6, 4, 2]);
    assert_eq!(steps[1].result.entries(), &[1, 2, 3, 4, 5, 6, 7, 8, 8, 6, 3]);
    let steps3 =
        lambda_hvector_steps(&LambdaConfig::new(vec![4, 3, 3, 2], 3).unwrap()).unwrap();
    assert_eq!(steps3[0].shifted_row.entries(), &[1, 3, 6, 8, 8, 6, 3, 1]);

    println!("ACCEPTANCE 1 PASS: golden h-vectors for lambda [4,3,3,2] at c=2,3 with intermediates");
}

#[test]
fn acceptance_02_degree_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let mut configs = 0usize;
    for _ in 0..200 {
        let s = rng.gen_range(1..=6);
        let lambda: Vec<u64> = (0..s).map(|_| rng.gen_range(1..=4)).collect();
        for c in 1..=s {
            let cfg = LambdaConfig::new(lambda.clone(), c).unwrap();
            let sum = lambda_hvector(&cfg).unwrap().sum();
            let degree = lambda_degree(&cfg).unwrap();
            assert_eq!(sum as u64, degree, "lambda {lambda:?}, c={c}");
            configs += 1;
        }
    }
    println!("ACCEPTANCE 2 PASS: h-vector sum equals e_c(lambda) on {configs} random configurations");
}

#[test]
fn acceptance_03_cross_path_hilbert() {
    let mut cases = 0usize;
    for s in 1..=5usize {
        for lambda in (0..s).map(|_| 1u64..=3).multi_cartesian_product() {
            for c in 1..=s {
                let cfg = LambdaConfig::new(lambda.clone(), c).unwrap();
                let recursion = lambda_hvector(&cfg).unwrap();
                let ideal_route = h_vector(&lambda_config_ideal(&cfg).unwrap()).unwrap();
                assert_eq!(recursion, ideal_route, "lambda {lambda:?}, c={c}");
                cases += 1;
            }
        }
    }
    println!("ACCEPTANCE 3 PASS: recursion matches ideal-side h-vectors on {cases} configurations");
}

#[test]
fn acceptance_04_symbolic_membership_oracle() {
    let mut probes = 0u64;
    for (s, c) in [(3usize, 2usize), (4, 2), (4, 3)] {
        let matroid = MatroidComplex::uniform(s, c).unwrap();
        let ctx = VariableContext::standard(s).unwrap();
        for m in 1..=4u64 {
            let ideal = symbolic_power(&matroid, &ctx, m).unwrap();
            for exps in (0..s).map(|_| 0..=m + 1).multi_cartesian_product() {
                let mono = Monomial::new(exps.clone());
                let oracle = (0..s)
                    .combinations(c)
                    .all(|t| t.iter().map(|&v| exps[v]).sum::<u64>() >= m);
                assert_eq!(
                    ideal.contains(&mono).unwrap(),
                    oracle,
                    "U({s},{c}), m={m}, exponents {exps:?}"
                );
                probes += 1;
            }
        }
    }
    println!("ACCEPTANCE 4 PASS: symbolic membership matches the c-subset degree oracle on {probes} vectors");
}

#[test]
fn acceptance_05_waldschmidt() {
    // U(3,2) with unit weights: closed form and attained upper bound 3/2.
    let u32_ = MatroidComplex::uniform(3, 2).unwrap();
    let report = waldschmidt(&u32_, &[1, 1, 1], 8).unwrap();
    assert_eq!(report.closed_form, Some(Rational::new(3, 2)));
    assert_eq!(report.upper_bound, Rational::new(3, 2));

    // U(4,3) with weights (1,1,1,2): the m=6 sample is 9/6 = 3/2.
    let u43 = MatroidComplex::uniform(4, 3).unwrap();
    let report = waldschmidt(&u43, &[1, 1, 1, 2], 6).unwrap();
    let alpha6 = report.samples.iter().find(|&&(m, _)| m == 6).unwrap().1;
    assert_eq!(alpha6, 9);
    assert_eq!(Rational::new(alpha6, 6), Rational::new(3, 2));
    assert_eq!(report.upper_bound, Rational::new(3, 2));

    // Uniform weight d on U(4,3): closed form 4d/3.
    for d in 1..=3u64 {
        let report = waldschmidt(&u43, &[d; 4], 6).unwrap();
        assert_eq!(report.closed_form, Some(Rational::new(4 * d, 3)));
    }

    println!("ACCEPTANCE 5 PASS: Waldschmidt bounds 3/2 (U(3,2)), 9/6 sample (U(4,3) weighted), 4d/3 closed forms");
}

#[test]
fn acceptance_06_resurgence_consistency() {
    let budget = OpBudget::unlimited();
    let mut cells = 0usize;
    for (s, c) in [(3usize, 2usize), (4, 2), (4, 3), (5, 2)] {
        let matroid = MatroidComplex::uniform(s, c).unwrap();
        let report = resurgence_search(&matroid, 6, 4, &budget).unwrap();
        let formula = Rational::new(c as u64 * (s - c + 1) as u64, s as u64);
        assert_eq!(report.formula, Some(formula));
        if let Some(max_ratio) = report.max_ratio_not_contained {
            assert!(
                max_ratio <= formula,
                "U({s},{c}): ratio {max_ratio} exceeds {formula}"
            );
        }
        for cert in &report.certificates {
            assert!(
                cert.verify(&matroid).unwrap(),
                "U({s},{c}) certificate (m={}, r={}) failed revalidation",
                cert.m,
                cert.r
            );
        }
        cells += report.certificates.len();
    }

    // The named U(3,2) facts.
    let u32_ = MatroidComplex::uniform(3, 2).unwrap();
    let cert22 = is_contained(&u32_, 2, 2, &budget).unwrap();
    assert!(!cert22.contained);
    let witness = cert22.witness.expect("witness for the non-containment");
    assert_eq!(witness.total_degree().unwrap(), 3);
    let cert43 = is_contained(&u32_, 4, 3, &budget).unwrap();
    assert!(cert43.contained);

    println!("ACCEPTANCE 6 PASS: resurgence grids consistent with c(s-c+1)/s on {cells} cells; U(3,2) facts hold");
}

/// The specialized table must be the source table with multidegrees pushed
/// through the substitution, rank for rank, with equal totals.
fn transfer_matches(source: &BettiTable, sub: &MonomialSubstitution, target: &BettiTable) -> bool {
    if source.multigraded().len() != target.multigraded().len() {
        return false;
    }
    for (&(i, ref a), &rank) in source.multigraded() {
        let image = sub.apply(&Monomial::new(a.clone())).unwrap();
        if target.multigraded().get(&(i, image.exponents().to_vec())) != Some(&rank) {
            return false;
        }
    }
    source.totals() == target.totals()
}

#[test]
fn acceptance_07_betti_transfer() {
    let mut pairs = 0usize;
    for s in 1..=5usize {
        let ctx = VariableContext::standard(s).unwrap();
        let matroids = enumerate_matroids(s);
        let weight_vectors: Vec<Vec<u64>> =
            (0..s).map(|_| 1u64..=3).multi_cartesian_product().collect();
        let counted: Vec<usize> = matroids
            .par_iter()
            .map(|matroid| {
                let sr = matroid.stanley_reisner(&ctx).unwrap();
                let source = betti_table(&sr).unwrap();
                for weights in &weight_vectors {
                    let sub = MonomialSubstitution::powers(weights).unwrap();
                    let specialized = specialize(&sr, &sub).unwrap();
                    let target = betti_table(&specialized).unwrap();
                    assert!(
                        transfer_matches(&source, &sub, &target),
                        "transfer failed on facets {:?} with weights {weights:?}",
                        matroid.complex().facet_sets()
                    );
                }
                weight_vectors.len()
            })
            .collect();
        pairs += counted.iter().sum::<usize>();
    }
    println!("ACCEPTANCE 7 PASS: Betti tables transfer under {pairs} (matroid, weight) specializations");
}

#[test]
fn acceptance_08_symbolic_cohen_macaulay() {
    let mut cases = 0usize;
    for s in 1..=5usize {
        let ctx = VariableContext::standard(s).unwrap();
        let matroids = enumerate_matroids(s);
        // Flat specializations with image degrees <= 2, as per-variable
        // power substitutions; the all-ones vector is the identity and
        // covers the unspecialized claim.
        let degree_vectors: Vec<Vec<u64>> =
            (0..s).map(|_| 1u64..=2).multi_cartesian_product().collect();
        let counted: Vec<usize> = matroids
            .par_iter()
            .map(|matroid| {
                let mut local = 0usize;
                for m in 1..=3u64 {
                    let symbolic = symbolic_power(matroid, &ctx, m).unwrap();
                    for degrees in &degree_vectors {
                        let sub = MonomialSubstitution::powers(degrees).unwrap();
                        let specialized = specialize(&symbolic, &sub).unwrap();
                        let table = betti_table(&specialized).unwrap();
                        assert!(
                            table.is_cohen_macaulay(),
                            "facets {:?}, m={m}, degrees {degrees:?}: pd {} != codim {}",
                            matroid.complex().facet_sets(),
                            table.pd(),
                            table.codim()
                        );
                        local += 1;
                    }
                }
                local
            })
            .collect();
        cases += counted.iter().sum::<usize>();
    }

    // Spot-check genuinely multi-variable degree-2 images (disjoint
    // squarefree quadrics) on the small ground sets.
    for s in 2..=3usize {
        let ctx = VariableContext::standard(s).unwrap();
        let target = VariableContext::x_vars(2 * s).unwrap();
        let images: Vec<Monomial> = (0..s)
            .map(|i| {
                let mut exps = vec![0u64; 2 * s];
                exps[2 * i] = 1;
                exps[2 * i + 1] = 1;
                Monomial::new(exps)
            })
            .collect();
        let sub = MonomialSubstitution::new(ctx.clone(), target, images).unwrap();
        for matroid in enumerate_matroids(s) {
            for m in 1..=2u64 {
                let specialized =
                    specialize(&symbolic_power(&matroid, &ctx, m).unwrap(), &sub).unwrap();
                assert!(
                    betti_table(&specialized).unwrap().is_cohen_macaulay(),
                    "quadric images, facets {:?}, m={m}",
                    matroid.complex().facet_sets()
                );
                cases += 1;
            }
        }
    }
    println!("ACCEPTANCE 8 PASS: {cases} specialized symbolic powers are Cohen-Macaulay");
}

#[test]
fn acceptance_09_tetrahedral_sweep() {
    let vectors: Vec<Vec<u64>> = (0..6)
        .map(|_| 0u64..=2)
        .multi_cartesian_product()
        .filter(|p| p.iter().any(|&x| x > 0))
        .collect();
    assert_eq!(vectors.len(), 728);
    let disagreements: Vec<String> = vectors
        .par_iter()
        .filter_map(|p| {
            let p6: [u64; 6] = p.clone().try_into().unwrap();
            let tetra = TetrahedralExponents::new(p6).unwrap();
            let classifier = tetrahedral_is_acm(&tetra);
            let oracle = tetrahedral_oracle(&tetra).unwrap();
            (classifier != oracle).then(|| {
                format!("p={p6:?}: classifier says {classifier}, oracle says {oracle}")
            })
        })
        .collect();
    assert!(
        disagreements.is_empty(),
        "classifier/oracle disagreements:\n{}",
        disagreements.join("\n")
    );
    println!("ACCEPTANCE 9 PASS: ACM classifier agrees with the projective-dimension oracle on all 728 exponent vectors");
}

#[test]
fn acceptance_10_hypergraph_corollary() {
    fn compositions_of(n: usize) -> Vec<Vec<usize>> {
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

    let mut cases = 0usize;
    for total in 1..=8usize {
        for blocks in compositions_of(total) {
            for c in 1..=blocks.len() {
                let spec = HypergraphSpec::new(blocks.clone(), c).unwrap();
                assert!(
                    hypergraph_equals_lambda(&spec).unwrap(),
                    "blocks {blocks:?}, c={c}"
                );
                cases += 1;
            }
        }
    }
    println!("ACCEPTANCE 10 PASS: hypergraph ideals equal their hypersurface-configuration realizations in {cases} cases");
}

/// The zero ideal never enters: sanity net for the sweeps above.
#[test]
fn enumerated_matroids_have_positive_codim() {
    for s in 1..=5 {
        for matroid in enumerate_matroids(s) {
            assert!(matroid.codim() >= 1);
            let ctx = VariableContext::standard(s).unwrap();
            let sr: MonomialIdeal = matroid.stanley_reisner(&ctx).unwrap();
            assert!(!sr.is_zero());
        }
    }
}
