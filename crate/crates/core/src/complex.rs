//! Simplicial complexes on `[s]`, matroid verification, links and
//! deletions, uniform matroids, Stanley-Reisner ideals, facet-complement
//! primes and Alexander duality.
//!
//! Vertices are 0-based in the API and 1-based in the facet file format.
//! Faces are stored as bitmasks, so complexes are limited to 32 vertices
//! (far beyond desk scale).

use std::sync::Arc;

use thiserror::Error;

use crate::ideal::{IdealError, Monomial, MonomialIdeal, VariableContext};

pub const MAX_VERTICES: usize = 32;

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("vertex {vertex} out of range for a complex on {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("the void complex (no faces) is not allowed")]
    VoidComplex,
    #[error("a complex needs at least 1 and at most {MAX_VERTICES} vertices, got {0}")]
    BadVertexCount(usize),
    #[error("the complex is not a matroid")]
    NotMatroid,
    #[error("the full simplex has codimension 0 and no proper Stanley-Reisner ideal")]
    ZeroCodim,
    #[error("uniform matroid requires 1 <= c <= s, got s={s}, c={c}")]
    BadUniformParams { s: usize, c: usize },
    #[error("expected a squarefree monomial ideal")]
    NotSquarefree,
    #[error("link or deletion would leave no vertices")]
    TooFewVertices,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// A simplicial complex given by its facet list (an inclusion antichain).
/// The void complex is rejected; the complex `{∅}` (one empty facet) is
/// allowed and has dimension -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<u32>,
}

impl SimplicialComplex {
    /// Build from generating faces; non-maximal faces are dropped.
    pub fn new(vertex_count: usize, faces: &[Vec<usize>]) -> Result<Self, ComplexError> {
        if vertex_count == 0 || vertex_count > MAX_VERTICES {
            return Err(ComplexError::BadVertexCount(vertex_count));
        }
        let mut masks = Vec::with_capacity(faces.len());
        for f in faces {
            let mut mask = 0u32;
            for &v in f {
                if v >= vertex_count {
                    return Err(ComplexError::VertexOutOfRange {
                        vertex: v,
                        count: vertex_count,
                    });
                }
                mask |= 1 << v;
            }
            masks.push(mask);
        }
        Self::from_masks(vertex_count, masks)
    }

    pub fn from_masks(vertex_count: usize, mut masks: Vec<u32>) -> Result<Self, ComplexError> {
        if vertex_count == 0 || vertex_count > MAX_VERTICES {
            return Err(ComplexError::BadVertexCount(vertex_count));
        }
        if masks.is_empty() {
            return Err(ComplexError::VoidComplex);
        }
        if masks.iter().any(|m| *m >= (1u32 << vertex_count)) {
            return Err(ComplexError::VertexOutOfRange {
                vertex: MAX_VERTICES,
                count: vertex_count,
            });
        }
        masks.sort_unstable();
        masks.dedup();
        // Keep only inclusion-maximal faces.
        let maximal: Vec<u32> = masks
            .iter()
            .filter(|&&m| !masks.iter().any(|&n| n != m && m & n == m))
            .copied()
            .collect();
        Ok(SimplicialComplex {
            vertex_count,
            facets: maximal,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Facet bitmasks, sorted ascending.
    pub fn facet_masks(&self) -> &[u32] {
        &self.facets
    }

    pub fn facet_sets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| mask_to_set(m)).collect()
    }

    pub fn is_face(&self, mask: u32) -> bool {
        self.facets.iter().any(|&f| mask & f == mask)
    }

    /// All faces as bitmasks, sorted ascending.
    pub fn faces(&self) -> Vec<u32> {
        (0u32..(1 << self.vertex_count))
            .filter(|&m| self.is_face(m))
            .collect()
    }

    /// Dimension: largest facet cardinality minus one (-1 for `{∅}`).
    pub fn dim(&self) -> i64 {
        self.facets
            .iter()
            .map(|f| f.count_ones() as i64 - 1)
            .max()
            .unwrap()
    }

    pub fn is_pure(&self) -> bool {
        let k = self.facets[0].count_ones();
        self.facets.iter().all(|f| f.count_ones() == k)
    }

    /// Matroid test via the exchange axiom: for faces `F, G` with
    /// `|F| > |G|` there is `j ∈ F \ G` with `G ∪ {j}` a face. In debug
    /// builds the independent restriction-purity check must agree.
    pub fn is_matroid(&self) -> bool {
        let result = self.is_matroid_exchange();
        debug_assert_eq!(result, self.is_matroid_restrictions());
        result
    }

    pub fn is_matroid_exchange(&self) -> bool {
        let faces = self.faces();
        for &f in &faces {
            for &g in &faces {
                if f.count_ones() <= g.count_ones() {
                    continue;
                }
                let mut candidates = f & !g;
                let mut ok = false;
                while candidates != 0 {
                    let j = candidates & candidates.wrapping_neg();
                    if self.is_face(g | j) {
                        ok = true;
                        break;
                    }
                    candidates ^= j;
                }
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// Matroid test via restrictions: every vertex-subset restriction is
    /// pure. Quadratic-exponential but fine at desk scale; serves as the
    /// independent cross-check for the exchange form.
    pub fn is_matroid_restrictions(&self) -> bool {
        let faces = self.faces();
        for subset in 0u32..(1 << self.vertex_count) {
            let restricted: Vec<u32> = faces
                .iter()
                .filter(|&&f| f & subset == f)
                .copied()
                .collect();
            // Facets of the restriction (maximal restricted faces).
            let mut top: Option<u32> = None;
            for &f in &restricted {
                if !restricted.iter().any(|&g| g != f && f & g == f) {
                    match top {
                        None => top = Some(f.count_ones()),
                        Some(k) => {
                            if f.count_ones() != k {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Link of a vertex, on the re-indexed vertex set `[s] \ {v}`.
    /// Returns the complex together with the new-index -> old-vertex map.
    pub fn link(&self, v: usize) -> Result<(SimplicialComplex, Vec<usize>), ComplexError> {
        self.check_vertex(v)?;
        let vbit = 1u32 << v;
        let candidates: Vec<u32> = self
            .facets
            .iter()
            .filter(|&&f| f & vbit != 0)
            .map(|&f| f & !vbit)
            .collect();
        self.reindexed(v, candidates)
    }

    /// Deletion of a vertex, on the re-indexed vertex set `[s] \ {v}`.
    pub fn deletion(&self, v: usize) -> Result<(SimplicialComplex, Vec<usize>), ComplexError> {
        self.check_vertex(v)?;
        let vbit = 1u32 << v;
        let candidates: Vec<u32> = self.facets.iter().map(|&f| f & !vbit).collect();
        self.reindexed(v, candidates)
    }

    fn check_vertex(&self, v: usize) -> Result<(), ComplexError> {
        if v >= self.vertex_count {
            return Err(ComplexError::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count,
            });
        }
        Ok(())
    }

    fn reindexed(
        &self,
        removed: usize,
        masks: Vec<u32>,
    ) -> Result<(SimplicialComplex, Vec<usize>), ComplexError> {
        if self.vertex_count == 1 {
            return Err(ComplexError::TooFewVertices);
        }
        let map: Vec<usize> = (0..self.vertex_count).filter(|&u| u != removed).collect();
        let compress = |mask: u32| -> u32 {
            let mut out = 0u32;
            for (new, &old) in map.iter().enumerate() {
                if mask & (1 << old) != 0 {
                    out |= 1 << new;
                }
            }
            out
        };
        let complex =
            SimplicialComplex::from_masks(self.vertex_count - 1, masks.iter().map(|&m| compress(m)).collect())?;
        Ok((complex, map))
    }
}

/// A validated matroid complex with its codimension `c = s - facet size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidComplex {
    complex: SimplicialComplex,
    codim: usize,
}

impl MatroidComplex {
    pub fn new(complex: SimplicialComplex) -> Result<Self, ComplexError> {
        if !complex.is_matroid() {
            return Err(ComplexError::NotMatroid);
        }
        // Matroids are pure, so any facet determines the codimension.
        let codim = complex.vertex_count() - complex.facets[0].count_ones() as usize;
        if codim == 0 {
            // The full simplex has the zero Stanley-Reisner ideal; every
            // downstream computation needs a positive codimension.
            return Err(ComplexError::ZeroCodim);
        }
        Ok(MatroidComplex { complex, codim })
    }

    /// The uniform matroid `U(s, c)`: facets are all `(s-c)`-subsets of `[s]`.
    pub fn uniform(s: usize, c: usize) -> Result<Self, ComplexError> {
        if c < 1 || c > s {
            return Err(ComplexError::BadUniformParams { s, c });
        }
        if s > MAX_VERTICES {
            return Err(ComplexError::BadVertexCount(s));
        }
        let k = (s - c) as u32;
        let masks: Vec<u32> = (0u32..(1 << s)).filter(|m| m.count_ones() == k).collect();
        let complex = SimplicialComplex::from_masks(s, masks)?;
        debug_assert!(complex.is_matroid_exchange());
        let codim = c;
        Ok(MatroidComplex { complex, codim })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn vertex_count(&self) -> usize {
        self.complex.vertex_count()
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    /// Whether this is the uniform matroid of its parameters.
    pub fn is_uniform(&self) -> bool {
        let s = self.vertex_count();
        let k = s - self.codim;
        self.complex.facets.len() == binomial(s, k)
    }

    /// The facet-complement variable primes `P_F = (y_i : i ∉ F)`, one per
    /// facet, in facet order. Their intersection is the Stanley-Reisner
    /// ideal (asserted in debug builds).
    pub fn facet_primes(
        &self,
        ctx: &Arc<VariableContext>,
    ) -> Result<Vec<MonomialIdeal>, ComplexError> {
        let s = self.vertex_count();
        if ctx.count() != s {
            return Err(IdealError::DimensionMismatch {
                expected: s,
                found: ctx.count(),
            }
            .into());
        }
        let full = if s == 32 { u32::MAX } else { (1u32 << s) - 1 };
        let mut primes = Vec::with_capacity(self.complex.facets.len());
        for &f in &self.complex.facets {
            let comp = mask_to_set(full & !f);
            primes.push(MonomialIdeal::variable_prime(ctx, &comp)?);
        }
        #[cfg(debug_assertions)]
        {
            let sr = stanley_reisner(&self.complex, ctx).expect("stanley_reisner");
            let mut inter = MonomialIdeal::unit(ctx);
            for p in &primes {
                inter = inter.intersect(p).expect("intersect");
            }
            debug_assert_eq!(inter, sr, "facet primes must cut out the Stanley-Reisner ideal");
        }
        Ok(primes)
    }

    pub fn stanley_reisner(&self, ctx: &Arc<VariableContext>) -> Result<MonomialIdeal, ComplexError> {
        stanley_reisner(&self.complex, ctx)
    }
}

/// The Stanley-Reisner ideal: squarefree monomials of the minimal
/// non-faces of the complex.
pub fn stanley_reisner(
    complex: &SimplicialComplex,
    ctx: &Arc<VariableContext>,
) -> Result<MonomialIdeal, ComplexError> {
    let s = complex.vertex_count();
    if ctx.count() != s {
        return Err(IdealError::DimensionMismatch {
            expected: s,
            found: ctx.count(),
        }
        .into());
    }
    let mut gens = Vec::new();
    for mask in 0u32..(1 << s) {
        if complex.is_face(mask) {
            continue;
        }
        // Minimal non-face: every maximal proper subset is a face.
        let mut minimal = true;
        let mut bits = mask;
        while bits != 0 {
            let b = bits & bits.wrapping_neg();
            if !complex.is_face(mask & !b) {
                minimal = false;
                break;
            }
            bits ^= b;
        }
        if minimal {
            gens.push(mask_monomial(s, mask));
        }
    }
    Ok(MonomialIdeal::new(ctx, gens)?)
}

/// Alexander dual of a squarefree monomial ideal: generators are the
/// support monomials of the minimal primes. The degenerate pair is mapped
/// by zero <-> unit so that the dual is an involution on all squarefree
/// ideals.
pub fn alexander_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal, ComplexError> {
    if !ideal.is_squarefree() {
        return Err(ComplexError::NotSquarefree);
    }
    let ctx = ideal.context();
    if ideal.is_zero() {
        return Ok(MonomialIdeal::unit(ctx));
    }
    if ideal.is_unit() {
        return Ok(MonomialIdeal::zero(ctx));
    }
    let covers = ideal.minimal_primes()?;
    let gens = covers
        .iter()
        .map(|c| {
            let mut exps = vec![0u64; ctx.count()];
            for &v in c {
                exps[v] = 1;
            }
            Monomial::new(exps)
        })
        .collect();
    Ok(MonomialIdeal::new(ctx, gens)?)
}

/// All matroids of positive codimension on exactly `s` labeled vertices,
/// enumerated by filtering pure facet families through `is_matroid`. The
/// full simplex (codimension 0) is excluded.
pub fn enumerate_matroids(s: usize) -> Vec<MatroidComplex> {
    assert!(s >= 1 && s <= 6, "exhaustive enumeration is desk-scale only");
    let mut out = Vec::new();
    for k in 0..s {
        let k_subsets: Vec<u32> = (0u32..(1 << s))
            .filter(|m| m.count_ones() == k as u32)
            .collect();
        let n = k_subsets.len();
        for choice in 1u64..(1 << n) {
            let facets: Vec<u32> = (0..n)
                .filter(|i| choice & (1 << i) != 0)
                .map(|i| k_subsets[i])
                .collect();
            let complex = SimplicialComplex::from_masks(s, facets).expect("non-void");
            if complex.is_matroid_exchange() {
                let codim = s - k;
                out.push(MatroidComplex { complex, codim });
            }
        }
    }
    out
}

/// Facet-list file format: header `s=<n>`, then one facet per line as
/// comma-separated 1-based vertex indices; the empty face is written `-`.
pub fn parse_facets(text: &str) -> Result<SimplicialComplex, ComplexError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(ComplexError::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    let s: usize = header
        .trim()
        .strip_prefix("s=")
        .and_then(|t| t.parse().ok())
        .ok_or(ComplexError::Parse {
            line: 1,
            msg: format!("bad header {header:?}, expected s=<n>"),
        })?;
    let mut faces = Vec::new();
    for (idx, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line == "-" {
            faces.push(Vec::new());
            continue;
        }
        let mut face = Vec::new();
        for tok in line.split(',') {
            let v: usize = tok.trim().parse().map_err(|_| ComplexError::Parse {
                line: idx + 1,
                msg: format!("bad vertex {tok:?}"),
            })?;
            if v < 1 || v > s {
                return Err(ComplexError::Parse {
                    line: idx + 1,
                    msg: format!("vertex {v} out of range 1..={s}"),
                });
            }
            face.push(v - 1);
        }
        faces.push(face);
    }
    SimplicialComplex::new(s, &faces)
}

pub fn write_facets(complex: &SimplicialComplex) -> String {
    let mut out = format!("s={}\n", complex.vertex_count());
    for facet in complex.facet_sets() {
        if facet.is_empty() {
            out.push_str("-\n");
        } else {
            let parts: Vec<String> = facet.iter().map(|v| (v + 1).to_string()).collect();
            out.push_str(&parts.join(","));
            out.push('\n');
        }
    }
    out
}

fn mask_to_set(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask & (1 << i) != 0).collect()
}

fn mask_monomial(len: usize, mask: u32) -> Monomial {
    Monomial::new((0..len).map(|i| u64::from(mask >> i & 1)).collect())
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc: usize = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
