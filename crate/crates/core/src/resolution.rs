//! Multigraded Betti numbers of monomial ideals via reduced simplicial
//! homology of upper-Koszul complexes at the lcm-lattice multidegrees,
//! projective dimension, and Cohen-Macaulay testing.
//!
//! Conventions: homological indices count steps of the minimal free
//! resolution of the quotient ring, so the table starts with rank 1 at
//! (0, 0), the minimal generators sit at index 1, and a Cohen-Macaulay
//! codimension-c ideal has projective dimension c. Ranks are computed
//! over the rationals with exact arithmetic.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::ideal::{IdealError, Monomial, MonomialIdeal};
use crate::rank::exact_rank;

#[derive(Debug, Error)]
pub enum ResolutionError {
    #[error("Betti computation needs a nonzero proper ideal")]
    ImproperIdeal,
    #[error("lcm lattice has {lattice_size} elements, exceeding the budget of {budget}")]
    BudgetExceeded { lattice_size: usize, budget: usize },
    #[error("Betti computation supports at most {MAX_KOSZUL_VERTICES} variables, got {count}")]
    TooManyVariables { count: usize },
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Upper-Koszul complexes enumerate all subsets of a multidegree support,
/// so the variable count is capped well below the bitmask width.
pub const MAX_KOSZUL_VERTICES: usize = 24;

/// Options for the Betti computation. The lattice budget guards the
/// exponential corner: the lcm lattice of an ideal with many generators
/// can blow up, and exceeding the cap is reported, never silently
/// truncated.
#[derive(Debug, Clone, Copy)]
pub struct BettiOptions {
    pub max_lattice: usize,
}

impl Default for BettiOptions {
    fn default() -> Self {
        BettiOptions {
            max_lattice: 500_000,
        }
    }
}

/// Graded Betti numbers of a quotient ring `S/I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    /// (homological index, weighted total degree) -> rank.
    entries: BTreeMap<(usize, u64), u64>,
    /// (homological index, multidegree) -> rank.
    multigraded: BTreeMap<(usize, Vec<u64>), u64>,
    codim: usize,
    pd: usize,
}

impl BettiTable {
    pub fn entries(&self) -> &BTreeMap<(usize, u64), u64> {
        &self.entries
    }

    pub fn multigraded(&self) -> &BTreeMap<(usize, Vec<u64>), u64> {
        &self.multigraded
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    /// Projective dimension of the quotient: the largest homological index
    /// carrying a nonzero rank.
    pub fn pd(&self) -> usize {
        self.pd
    }

    pub fn is_cohen_macaulay(&self) -> bool {
        self.pd == self.codim
    }

    /// Total Betti numbers by homological index.
    pub fn totals(&self) -> Vec<u64> {
        let mut totals = vec![0u64; self.pd + 1];
        for (&(i, _), &rank) in &self.entries {
            totals[i] += rank;
        }
        totals
    }

    /// Coefficients of the alternating sum `sum (-1)^i rank t^j`, which
    /// must equal the Hilbert numerator of the quotient.
    pub fn alternating_sum(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0) as usize;
        let mut coeffs = vec![0i64; top + 1];
        for (&(i, j), &rank) in &self.entries {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            coeffs[j as usize] += sign * rank as i64;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        coeffs
    }

    /// Macaulay-style Betti diagram: columns are homological indices,
    /// rows are `j - i`, plus a total row. Zero ranks print as dots.
    pub fn render(&self) -> String {
        let cols = self.pd + 1;
        let max_row = self
            .entries
            .iter()
            .map(|(&(i, j), _)| j as i64 - i as i64)
            .max()
            .unwrap_or(0)
            .max(0) as usize;
        let totals = self.totals();
        let mut cells: Vec<Vec<String>> = vec![vec![".".to_string(); cols]; max_row + 1];
        for (&(i, j), &rank) in &self.entries {
            let row = (j as i64 - i as i64) as usize;
            cells[row][i] = rank.to_string();
        }
        let mut width = vec![1usize; cols];
        for (i, w) in width.iter_mut().enumerate() {
            *w = (*w)
                .max(totals[i].to_string().len())
                .max(i.to_string().len());
            for row in &cells {
                *w = (*w).max(row[i].len());
            }
        }
        let label_width = format!("{max_row}").len().max("total".len());
        let mut out = String::new();
        out.push_str(&" ".repeat(label_width + 1));
        for (i, w) in width.iter().enumerate() {
            out.push_str(&format!(" {:>w$}", i, w = w));
        }
        out.push('\n');
        out.push_str(&format!("{:>label_width$}:", "total"));
        for (i, w) in width.iter().enumerate() {
            out.push_str(&format!(" {:>w$}", totals[i], w = w));
        }
        out.push('\n');
        for (r, row) in cells.iter().enumerate() {
            out.push_str(&format!("{r:>label_width$}:"));
            for (i, w) in width.iter().enumerate() {
                out.push_str(&format!(" {:>w$}", row[i], w = w));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(&(i, j), &rank)| serde_json::json!([i, j, rank]))
            .collect();
        serde_json::json!({
            "entries": entries,
            "codim": self.codim,
            "pd": self.pd,
        })
    }
}

/// Graded Betti numbers of `S/I` with default options.
pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable, ResolutionError> {
    betti_table_with(ideal, &BettiOptions::default())
}

/// For each multidegree `a` in the lcm lattice of the generators, the rank
/// at homological index `i >= 1` is the reduced homology rank in dimension
/// `i - 2` of the upper-Koszul complex
/// `K^a(I) = { squarefree b <= a : x^(a-b) in I }`.
pub fn betti_table_with(
    ideal: &MonomialIdeal,
    options: &BettiOptions,
) -> Result<BettiTable, ResolutionError> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(ResolutionError::ImproperIdeal);
    }
    let nvars = ideal.context().count();
    if nvars > MAX_KOSZUL_VERTICES {
        return Err(ResolutionError::TooManyVariables { count: nvars });
    }
    let lattice = lcm_lattice(ideal, options.max_lattice)?;

    let per_degree: Vec<(Vec<u64>, Vec<(usize, u64)>)> = lattice
        .par_iter()
        .map(|a| {
            let ranks = upper_koszul_betti(ideal, a);
            (a.clone(), ranks)
        })
        .collect();

    let mut multigraded: BTreeMap<(usize, Vec<u64>), u64> = BTreeMap::new();
    let mut entries: BTreeMap<(usize, u64), u64> = BTreeMap::new();
    multigraded.insert((0, vec![0; nvars]), 1);
    entries.insert((0, 0), 1);
    for (a, ranks) in per_degree {
        if ranks.is_empty() {
            continue;
        }
        let degree = ideal
            .context()
            .weighted_degree(&Monomial::new(a.clone()))
            .map_err(ResolutionError::Ideal)?;
        for (i, rank) in ranks {
            multigraded.insert((i, a.clone()), rank);
            *entries.entry((i, degree)).or_insert(0) += rank;
        }
    }
    let pd = entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
    let codim = ideal.height()?;
    Ok(BettiTable {
        entries,
        multigraded,
        codim,
        pd,
    })
}

pub fn projective_dimension(ideal: &MonomialIdeal) -> Result<usize, ResolutionError> {
    Ok(betti_table(ideal)?.pd())
}

/// Cohen-Macaulay test: projective dimension of the quotient equals the
/// codimension.
pub fn is_cohen_macaulay(ideal: &MonomialIdeal) -> Result<bool, ResolutionError> {
    Ok(betti_table(ideal)?.is_cohen_macaulay())
}

/// The lcm lattice: closure of the generator multidegrees under pairwise
/// lcm, sorted. Only these multidegrees can carry nonzero Betti numbers.
fn lcm_lattice(
    ideal: &MonomialIdeal,
    max_size: usize,
) -> Result<Vec<Vec<u64>>, ResolutionError> {
    let gens = ideal.generators();
    let mut lattice: BTreeSet<Vec<u64>> = gens.iter().map(|g| g.exponents().to_vec()).collect();
    let mut frontier: Vec<Vec<u64>> = lattice.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in gens {
                let lcm: Vec<u64> = a
                    .iter()
                    .zip(g.exponents())
                    .map(|(&x, &y)| x.max(y))
                    .collect();
                if lattice.insert(lcm.clone()) {
                    if lattice.len() > max_size {
                        return Err(ResolutionError::BudgetExceeded {
                            lattice_size: lattice.len(),
                            budget: max_size,
                        });
                    }
                    next.push(lcm);
                }
            }
        }
        frontier = next;
    }
    Ok(lattice.into_iter().collect())
}

/// Nonzero Betti ranks `(homological index, rank)` of the quotient at
/// multidegree `a`.
fn upper_koszul_betti(ideal: &MonomialIdeal, a: &[u64]) -> Vec<(usize, u64)> {
    let support: Vec<usize> = a
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, _)| i)
        .collect();
    let n = support.len();
    // Faces of K^a as bitmasks over the support of a.
    let mut faces: Vec<u32> = Vec::new();
    let mut probe = a.to_vec();
    'masks: for mask in 0u32..(1 << n) {
        for (bit, &var) in support.iter().enumerate() {
            probe[var] = a[var] - u64::from(mask >> bit & 1);
        }
        for g in ideal.generators() {
            if g.exponents().iter().zip(&probe).all(|(e, p)| e <= p) {
                faces.push(mask);
                continue 'masks;
            }
        }
    }
    reduced_homology_ranks(&faces, n)
        .into_iter()
        .enumerate()
        .filter(|(_, rank)| *rank > 0)
        // H~_{i-2} contributes at homological index i of the quotient;
        // the vector below starts at dimension -1.
        .map(|(dim_plus_one, rank)| (dim_plus_one + 1, rank))
        .collect()
}

/// Reduced homology ranks over the rationals of the complex given by
/// `faces` (bitmasks over `n` vertices, closed under subsets). The result
/// vector starts at dimension -1.
fn reduced_homology_ranks(faces: &[u32], n: usize) -> Vec<u64> {
    if faces.is_empty() {
        return Vec::new();
    }
    // Group faces by dimension; index 0 holds the empty face (dim -1).
    let mut by_card: Vec<Vec<u32>> = vec![Vec::new(); n + 2];
    for &f in faces {
        by_card[f.count_ones() as usize].push(f);
    }
    let mut index: Vec<BTreeMap<u32, usize>> = Vec::with_capacity(n + 2);
    for level in &by_card {
        index.push(level.iter().enumerate().map(|(i, &f)| (f, i)).collect());
    }
    // boundary_ranks[k] = rank of the boundary map from card-k faces to
    // card-(k-1) faces (k = 1 is the augmentation to the empty face).
    let mut boundary_ranks = vec![0usize; n + 2];
    for k in 1..=n + 1 {
        if by_card[k].is_empty() || by_card[k - 1].is_empty() {
            continue;
        }
        let rows: Vec<Vec<i64>> = by_card[k]
            .iter()
            .map(|&f| {
                let mut row = vec![0i64; by_card[k - 1].len()];
                let mut sign = 1i64;
                for v in 0..n as u32 {
                    if f & (1 << v) != 0 {
                        let sub = f & !(1 << v);
                        row[index[k - 1][&sub]] = sign;
                        sign = -sign;
                    }
                }
                row
            })
            .collect();
        boundary_ranks[k] = exact_rank(&rows);
    }
    // H~_{k-1} has rank  #faces_k - rank d_k - rank d_{k+1}.
    (0..=n)
        .map(|k| {
            let f_k = by_card[k].len();
            (f_k - boundary_ranks[k] - boundary_ranks.get(k + 1).copied().unwrap_or(0)) as u64
        })
        .collect()
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
    fn betti_of_three_points() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let t = betti_table(&i).unwrap();
        let expected: BTreeMap<(usize, u64), u64> =
            [((0, 0), 1), ((1, 2), 3), ((2, 3), 2)].into_iter().collect();
        assert_eq!(t.entries(), &expected);
        assert_eq!(t.pd(), 2);
        assert_eq!(t.codim(), 2);
        assert!(t.is_cohen_macaulay());
    }

    #[test]
    fn betti_of_complete_intersection() {
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        let t = betti_table(&i).unwrap();
        let expected: BTreeMap<(usize, u64), u64> =
            [((0, 0), 1), ((1, 2), 1), ((1, 3), 1), ((2, 5), 1)]
                .into_iter()
                .collect();
        assert_eq!(t.entries(), &expected);
    }

    #[test]
    fn betti_of_powered_specialization() {
        // y_i -> x_i^2 doubles all degrees but keeps the ranks.
        let i = ideal(3, &[&[2, 2, 0], &[2, 0, 2], &[0, 2, 2]]);
        let t = betti_table(&i).unwrap();
        let expected: BTreeMap<(usize, u64), u64> =
            [((0, 0), 1), ((1, 4), 3), ((2, 6), 2)].into_iter().collect();
        assert_eq!(t.entries(), &expected);
    }

    #[test]
    fn two_skew_lines_not_cohen_macaulay() {
        let i = ideal(
            4,
            &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]],
        );
        let t = betti_table(&i).unwrap();
        assert_eq!(t.pd(), 3);
        assert_eq!(t.codim(), 2);
        assert!(!t.is_cohen_macaulay());
    }

    #[test]
    fn alternating_sum_is_hilbert_numerator() {
        let i = ideal(3, &[&[2, 1, 0], &[0, 2, 2], &[1, 0, 3]]);
        let t = betti_table(&i).unwrap();
        let n = crate::hilbert::hilbert_numerator(&i).unwrap();
        assert_eq!(t.alternating_sum(), n.coefficients());
    }

    #[test]
    fn uniform_matroids_are_cohen_macaulay() {
        for (s, c) in [(3usize, 2usize), (4, 2), (4, 3), (5, 2)] {
            let ctx = VariableContext::standard(s).unwrap();
            let i = MatroidComplex::uniform(s, c)
                .unwrap()
                .stanley_reisner(&ctx)
                .unwrap();
            let t = betti_table(&i).unwrap();
            assert!(t.is_cohen_macaulay(), "U({s},{c}) must be Cohen-Macaulay");
            assert_eq!(t.pd(), c);
            // Linear resolution: index i is concentrated in degree
            // (s - c + 1) + (i - 1).
            for (&(i, j), _) in t.entries().iter().filter(|(&(i, _), _)| i >= 1) {
                assert_eq!(j as usize, (s - c + 1) + (i - 1));
            }
        }
    }

    #[test]
    fn budget_exceeded_reported() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let err = betti_table_with(&i, &BettiOptions { max_lattice: 3 }).unwrap_err();
        assert!(matches!(err, ResolutionError::BudgetExceeded { .. }));
    }

    #[test]
    fn render_macaulay_layout() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let t = betti_table(&i).unwrap();
        let rendered = t.render();
        let lines: Vec<&str> = rendered.lines().collect();
        assert_eq!(lines[0].trim(), "0 1 2");
        assert_eq!(lines[1].trim(), "total: 1 3 2");
        assert_eq!(lines[2].trim(), "0: 1 . .");
        assert_eq!(lines[3].trim(), "1: . 3 2");
    }
}
