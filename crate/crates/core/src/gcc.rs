//! Generalized concatenated codes for burst channels.
//!
//! An s-level code concatenates outer codes A_j over extension alphabets
//! with the quotient factors of a nested inner-code chain B_1 ⊃ ... ⊃ B_s.
//! Per-level sufficient conditions certify burst correction, and the
//! two- and three-level recipes assemble certified codes from greedy
//! inner-code searches and Reed-Solomon outer codes.

use crate::channel::PbeChannel;
use crate::code::{greedy_avoiding, parse_code_file, write_code_file, CodeChain, LinearCode};
use crate::error::{Error, Result};
use crate::error_set::{difference_set_auto, ErrorSet};
use crate::field::{FieldSpec, FqMatrix};

/// Enumeration budget used by certification checks.
pub const CERT_BUDGET: u128 = 1 << 24;

/// An s-level concatenation plan: inner chain plus one outer code per
/// level, the j-th over an extension of degree k_j - k_{j+1} (the last
/// over degree k_s).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GccSpec {
    inner: CodeChain,
    outer: Vec<LinearCode>,
}

impl GccSpec {
    pub fn new(inner: CodeChain, outer: Vec<LinearCode>) -> Result<Self> {
        let s = inner.len();
        if outer.len() != s {
            return Err(Error::DimensionMismatch(format!(
                "{s} chain levels but {} outer codes",
                outer.len()
            )));
        }
        let base = inner.codes()[0].spec().clone();
        let m = outer[0].n();
        for (j, a) in outer.iter().enumerate() {
            if a.n() != m {
                return Err(Error::DimensionMismatch(
                    "outer codes must share one length".into(),
                ));
            }
            let gap = if j + 1 < s {
                inner.codes()[j].k() - inner.codes()[j + 1].k()
            } else {
                inner.codes()[s - 1].k()
            };
            match a.spec().degree_over(&base) {
                Some(r) if r as usize == gap => {}
                _ => {
                    return Err(Error::DimensionMismatch(format!(
                        "level {} outer alphabet must be a degree-{gap} extension of {base}",
                        j + 1
                    )));
                }
            }
        }
        Ok(GccSpec { inner, outer })
    }

    pub fn inner(&self) -> &CodeChain {
        &self.inner
    }
    pub fn outer(&self) -> &[LinearCode] {
        &self.outer
    }
    pub fn levels(&self) -> usize {
        self.inner.len()
    }
    pub fn base_spec(&self) -> &FieldSpec {
        self.inner.codes()[0].spec()
    }
    pub fn n(&self) -> usize {
        self.inner.codes()[0].n()
    }
    pub fn m(&self) -> usize {
        self.outer[0].n()
    }
}

/// A built concatenated code: explicit generator arrays in GF(q)^(n x m),
/// linearly independent over GF(q).
#[derive(Clone, Debug)]
pub struct GccCode {
    spec: GccSpec,
    generators: Vec<FqMatrix>,
    dimension: usize,
}

impl GccCode {
    pub fn spec(&self) -> &GccSpec {
        &self.spec
    }
    pub fn generators(&self) -> &[FqMatrix] {
        &self.generators
    }
    pub fn dimension(&self) -> usize {
        self.dimension
    }
    pub fn n(&self) -> usize {
        self.spec.n()
    }
    pub fn m(&self) -> usize {
        self.spec.m()
    }

    /// Dimension fraction K / (n m).
    pub fn rate(&self) -> f64 {
        self.dimension as f64 / (self.n() * self.m()) as f64
    }

    /// The code as a linear code of length n*m over the base field,
    /// arrays flattened column-major.
    pub fn flattened(&self) -> LinearCode {
        let rows: Vec<Vec<u64>> = self
            .generators
            .iter()
            .map(FqMatrix::flatten_columns)
            .collect();
        LinearCode::from_generators(
            self.spec.base_spec().clone(),
            self.n() * self.m(),
            &rows,
        )
        .expect("generator arrays are well-formed")
    }

    pub fn contains(&self, x: &FqMatrix) -> bool {
        self.flattened().contains(&x.flatten_columns())
    }
}

/// Assembles the generator arrays of the concatenation: for every
/// generator row a of the level-j outer code and every basis element β of
/// its alphabet, the array whose i-th column is the base-field expansion
/// of a_i β multiplied into the level's representative rows.
pub fn gcc_build(spec: GccSpec) -> Result<GccCode> {
    let s = spec.levels();
    let base = spec.base_spec().clone();
    let n = spec.n();
    let m = spec.m();
    let mut generators: Vec<FqMatrix> = Vec::new();
    let mut expected_dim = 0usize;
    for j in 0..s {
        let reps: FqMatrix = if j + 1 < s {
            spec.inner.quotient_reps(j).clone()
        } else {
            spec.inner.codes()[s - 1].generator().clone()
        };
        let r = reps.rows();
        let outer = &spec.outer[j];
        let ext = outer.spec().clone();
        expected_dim += outer.k() * r;
        for row_idx in 0..outer.k() {
            let a = outer.generator().row(row_idx).to_vec();
            for b in 0..r {
                let beta = pow_u64(base.q(), b as u32);
                let mut arr = FqMatrix::zeros(base.clone(), n, m);
                for (i, &ai) in a.iter().enumerate() {
                    let coords = ext.ext_to_base(ext.mul(ai, beta), &base)?;
                    let col = reps.row_mul(coords.reprs());
                    for (row, &v) in col.iter().enumerate() {
                        arr.set(row, i, v);
                    }
                }
                generators.push(arr);
            }
        }
    }
    if expected_dim == 0 {
        return Err(Error::InvalidParameter(
            "the concatenation is zero-dimensional".into(),
        ));
    }
    let flat: Vec<Vec<u64>> = generators.iter().map(FqMatrix::flatten_columns).collect();
    let rank = FqMatrix::from_rows(base, &flat).rank();
    assert_eq!(
        rank, expected_dim,
        "generator arrays must be independent over the base field"
    );
    Ok(GccCode {
        spec,
        generators,
        dimension: expected_dim,
    })
}

fn pow_u64(base: u64, exp: u32) -> u64 {
    let mut acc = 1u64;
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Which per-level sufficient condition certified a level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LevelCondition {
    /// Outer distance > 2w and the inner code meets Δ(E1,E1) only at zero.
    DoubleBurstMargin,
    /// Outer distance > w and the inner code meets Δ(E1,E2) only at zero.
    SingleBurstMargin,
    /// The inner code meets Δ(E2,E2) only at zero; no outer distance needed.
    InnerAlone,
    /// Zero-dimensional outer code: the level contributes no codewords.
    Vacuous,
}

#[derive(Clone, Debug)]
pub struct LevelVerdict {
    pub level: usize,
    pub inner_params: String,
    pub outer_params: String,
    pub outer_distance: usize,
    pub condition: Option<LevelCondition>,
}

/// Per-level certification outcome; the code is guaranteed to correct all
/// channel bursts iff every level satisfies some condition.
#[derive(Clone, Debug)]
pub struct PbecCertificate {
    pub levels: Vec<LevelVerdict>,
    pub valid: bool,
}

impl PbecCertificate {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for v in &self.levels {
            let what = match v.condition {
                Some(LevelCondition::DoubleBurstMargin) => {
                    "outer distance beats 2w; inner avoids Δ(E1,E1)".into()
                }
                Some(LevelCondition::SingleBurstMargin) => {
                    "outer distance beats w; inner avoids Δ(E1,E2)".into()
                }
                Some(LevelCondition::InnerAlone) => "inner avoids Δ(E2,E2)".into(),
                Some(LevelCondition::Vacuous) => "empty level".into(),
                None => format!("FAILED (outer distance {})", v.outer_distance),
            };
            out.push_str(&format!(
                "level {}: inner {} outer {} -> {}\n",
                v.level, v.inner_params, v.outer_params, what
            ));
        }
        out.push_str(if self.valid {
            "certificate: VALID\n"
        } else {
            "certificate: INVALID\n"
        });
        out
    }
}

/// Checks the per-level conditions against arbitrary error sets, trying
/// the cheaper distance comparisons before enumeration-heavy intersection
/// tests. Conditions are recorded in their canonical order.
pub fn certify_property1(
    code: &GccCode,
    e1: &ErrorSet,
    e2: &ErrorSet,
    w: usize,
) -> Result<PbecCertificate> {
    let d11 = difference_set_auto(e1, e1, CERT_BUDGET)?;
    let d12 = difference_set_auto(e1, e2, CERT_BUDGET)?;
    let d22 = difference_set_auto(e2, e2, CERT_BUDGET)?;
    certify_with_sets(code, &d11, &d12, &d22, w)
}

fn certify_with_sets(
    code: &GccCode,
    d11: &ErrorSet,
    d12: &ErrorSet,
    d22: &ErrorSet,
    w: usize,
) -> Result<PbecCertificate> {
    let spec = code.spec();
    let mut levels = Vec::new();
    let mut valid = true;
    for j in 0..spec.levels() {
        let inner = &spec.inner().codes()[j];
        let outer = &spec.outer()[j];
        let mut verdict = LevelVerdict {
            level: j + 1,
            inner_params: inner.params(),
            outer_params: outer.params(),
            outer_distance: 0,
            condition: None,
        };
        if outer.k() == 0 {
            verdict.condition = Some(LevelCondition::Vacuous);
            levels.push(verdict);
            continue;
        }
        let big_d = outer.min_distance()?;
        verdict.outer_distance = big_d;
        let condition = if big_d > 2 * w && inner.intersects_only_zero(d11, CERT_BUDGET)? {
            Some(LevelCondition::DoubleBurstMargin)
        } else if big_d > w && inner.intersects_only_zero(d12, CERT_BUDGET)? {
            Some(LevelCondition::SingleBurstMargin)
        } else if inner.intersects_only_zero(d22, CERT_BUDGET)? {
            Some(LevelCondition::InnerAlone)
        } else {
            None
        };
        valid &= condition.is_some();
        verdict.condition = condition;
        levels.push(verdict);
    }
    Ok(PbecCertificate { levels, valid })
}

/// Specialization to Hamming bursts (E1 = {0}, E2 a radius-t ball): the
/// intersection tests become inner-distance comparisons.
pub fn certify_hamming(code: &GccCode, t: usize, w: usize) -> Result<PbecCertificate> {
    let spec = code.spec();
    let mut levels = Vec::new();
    let mut valid = true;
    for j in 0..spec.levels() {
        let inner = &spec.inner().codes()[j];
        let outer = &spec.outer()[j];
        let mut verdict = LevelVerdict {
            level: j + 1,
            inner_params: inner.params(),
            outer_params: outer.params(),
            outer_distance: 0,
            condition: None,
        };
        if outer.k() == 0 {
            verdict.condition = Some(LevelCondition::Vacuous);
            levels.push(verdict);
            continue;
        }
        let big_d = outer.min_distance()?;
        verdict.outer_distance = big_d;
        let condition = if big_d > 2 * w {
            Some(LevelCondition::DoubleBurstMargin)
        } else {
            let d = inner.min_distance()?;
            if big_d > w && d > t {
                Some(LevelCondition::SingleBurstMargin)
            } else if d > 2 * t {
                Some(LevelCondition::InnerAlone)
            } else {
                None
            }
        };
        valid &= condition.is_some();
        verdict.condition = condition;
        levels.push(verdict);
    }
    Ok(PbecCertificate { levels, valid })
}

enum OuterPlan {
    Full,
    Mds { k: usize },
}

/// Smallest extension degree g >= 1 with q^g >= m.
fn min_gap(q: u64, m: usize) -> usize {
    let mut g = 1usize;
    let mut cap = q as u128;
    while cap < m as u128 {
        cap *= q as u128;
        g += 1;
    }
    g
}

/// Assemble, build, and certify a code from (inner, outer-plan) levels.
/// Levels with empty inner codes or zero-dimensional outers are dropped.
fn assemble(
    ch: &PbeChannel,
    levels: Vec<(LinearCode, OuterPlan)>,
) -> Result<(GccCode, PbecCertificate)> {
    let m = ch.m();
    let spec = ch.spec().clone();
    let kept: Vec<(LinearCode, OuterPlan)> = levels
        .into_iter()
        .filter(|(inner, plan)| {
            inner.k() > 0
                && match plan {
                    OuterPlan::Full => true,
                    OuterPlan::Mds { k } => *k > 0,
                }
        })
        .collect();
    if kept.is_empty() {
        return Err(Error::InvalidParameter(
            "no usable levels: the channel admits no nonzero certified code".into(),
        ));
    }
    let inners: Vec<LinearCode> = kept.iter().map(|(c, _)| c.clone()).collect();
    let chain = CodeChain::new(inners)?;
    let s = chain.len();
    let mut outers = Vec::with_capacity(s);
    for (j, (_, plan)) in kept.iter().enumerate() {
        let gap = if j + 1 < s {
            chain.codes()[j].k() - chain.codes()[j + 1].k()
        } else {
            chain.codes()[s - 1].k()
        };
        let ext = spec.extension(gap as u32)?;
        let outer = match plan {
            OuterPlan::Full => LinearCode::full_space(ext, m),
            OuterPlan::Mds { k } => LinearCode::reed_solomon(ext, m, *k)?,
        };
        outers.push(outer);
    }
    let code = gcc_build(GccSpec::new(chain, outers)?)?;
    let cert = certify_property1_channel(&code, ch)?;
    Ok((code, cert))
}

/// Property-1 certificate of a built code against its channel.
pub fn certify_property1_channel(code: &GccCode, ch: &PbeChannel) -> Result<PbecCertificate> {
    certify_property1(code, ch.e1(), ch.e2(), ch.w())
}

/// Two-level recipe: B_1 avoids Δ(E1,E1), B_2 ⊆ B_1 avoids Δ(E2,E2); the
/// level-1 outer code is an MDS [m, max(m-2w,0), 2w+1], level 2 carries
/// the full space. The nested search is capped so the level-1 alphabet
/// can host a length-m Reed-Solomon code.
pub fn construct_2level(ch: &PbeChannel, seed: u64) -> Result<(GccCode, PbecCertificate)> {
    let spec = ch.spec().clone();
    let (n, m, w) = (ch.n(), ch.m(), ch.w());
    let d11 = difference_set_auto(ch.e1(), ch.e1(), CERT_BUDGET)?;
    let d22 = difference_set_auto(ch.e2(), ch.e2(), CERT_BUDGET)?;

    if w == 0 {
        // error-free beyond E1: a single level avoiding Δ(E1,E1) suffices
        let b1 = greedy_avoiding(&spec, n, &d11, seed, None, None)?;
        return assemble(ch, vec![(b1, OuterPlan::Full)]);
    }
    if d11.set_eq(&d22)? {
        // degenerate channel: one level avoiding Δ(E2,E2) carries everything
        let b = greedy_avoiding(&spec, n, &d22, seed, None, None)?;
        return assemble(ch, vec![(b, OuterPlan::Full)]);
    }
    let k1_outer = m.saturating_sub(2 * w);
    if k1_outer == 0 {
        // the level-1 outer code would be empty; only level 2 remains
        let b2 = greedy_avoiding(&spec, n, &d22, seed, None, None)?;
        return assemble(ch, vec![(b2, OuterPlan::Full)]);
    }
    let b1 = greedy_avoiding(&spec, n, &d11, seed, None, None)?;
    let gap = min_gap(spec.q(), m);
    if b1.k() < gap {
        // cannot host the MDS outer code; fall back to the level-2-only code
        let b2 = greedy_avoiding(&spec, n, &d22, seed, None, None)?;
        return assemble(ch, vec![(b2, OuterPlan::Full)]);
    }
    let cap2 = b1.k() - gap;
    let b2 = greedy_avoiding(&spec, n, &d22, seed.wrapping_add(1), Some(&b1), Some(cap2))?;
    if b2.k() == 0 {
        return assemble(ch, vec![(b1, OuterPlan::Mds { k: k1_outer })]);
    }
    assemble(
        ch,
        vec![
            (b1, OuterPlan::Mds { k: k1_outer }),
            (b2, OuterPlan::Full),
        ],
    )
}

/// Three-level recipe: B_1 avoids Δ(E1,E1), B_2 ⊆ B_1 avoids Δ(E1,E2),
/// B_3 ⊆ B_2 avoids Δ(E2,E2); outer codes are MDS [m, max(m-2w,0), 2w+1],
/// MDS [m, m-w, w+1], and the full space. Collapses to the two-level
/// recipe when Δ(E1,E2) = Δ(E2,E2).
pub fn construct_3level(ch: &PbeChannel, seed: u64) -> Result<(GccCode, PbecCertificate)> {
    let spec = ch.spec().clone();
    let (n, m, w) = (ch.n(), ch.m(), ch.w());
    let d11 = difference_set_auto(ch.e1(), ch.e1(), CERT_BUDGET)?;
    let d12 = difference_set_auto(ch.e1(), ch.e2(), CERT_BUDGET)?;
    let d22 = difference_set_auto(ch.e2(), ch.e2(), CERT_BUDGET)?;

    if w == 0 {
        let b1 = greedy_avoiding(&spec, n, &d11, seed, None, None)?;
        return assemble(ch, vec![(b1, OuterPlan::Full)]);
    }
    if d12.set_eq(&d22)? {
        // the middle level would duplicate the tail; two levels are optimal
        return construct_2level(ch, seed);
    }
    let gap = min_gap(spec.q(), m);
    let k1_outer = m.saturating_sub(2 * w);
    let k2_outer = m - w;

    // Proper-MDS levels need alphabet room: an inner code can carry one
    // only when its dimension is at least `gap`, and any level nested
    // below it is capped `gap` dimensions lower.
    let b1 = if k1_outer > 0 {
        let c = greedy_avoiding(&spec, n, &d11, seed, None, None)?;
        (c.k() >= gap).then_some(c)
    } else {
        None
    };
    let b2 = if k2_outer > 0 {
        let cap = b1.as_ref().map(|b| b.k() - gap);
        let c = greedy_avoiding(&spec, n, &d12, seed.wrapping_add(1), b1.as_ref(), cap)?;
        (c.k() >= gap).then_some(c)
    } else {
        None
    };
    let parent = b2.as_ref().or(b1.as_ref());
    let cap3 = parent.map(|b| b.k() - gap);
    let b3 = greedy_avoiding(&spec, n, &d22, seed.wrapping_add(2), parent, cap3)?;

    let mut levels = Vec::new();
    if let Some(b1) = b1 {
        levels.push((b1, OuterPlan::Mds { k: k1_outer }));
    }
    if let Some(b2) = b2 {
        levels.push((b2, OuterPlan::Mds { k: k2_outer }));
    }
    levels.push((b3, OuterPlan::Full));
    assemble(ch, levels)
}

/// Array-code file: the flattened generator in the linear-code format with
/// a shape comment, plus an optional construction stamp for re-derivation.
pub fn write_array_code(code: &GccCode, construct: Option<(usize, u64)>) -> String {
    let mut comments = vec![format!("shape {} {}", code.n(), code.m())];
    if let Some((levels, seed)) = construct {
        comments.push(format!("construct levels={levels} seed={seed}"));
    }
    write_code_file(&code.flattened(), &comments)
}

/// Parses an array-code file: the flat linear code, the (n, m) shape if a
/// shape comment is present, and any construction stamp.
pub fn parse_array_code(
    text: &str,
) -> Result<(LinearCode, Option<(usize, usize)>, Option<(usize, u64)>)> {
    let (code, comments) = parse_code_file(text)?;
    let mut shape = None;
    let mut stamp = None;
    for c in &comments {
        if let Some(rest) = c.strip_prefix("shape ") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() == 2 {
                let n = parts[0].parse().map_err(|_| Error::Parse("bad shape".into()))?;
                let m = parts[1].parse().map_err(|_| Error::Parse("bad shape".into()))?;
                shape = Some((n, m));
            }
        }
        if let Some(rest) = c.strip_prefix("construct ") {
            let mut levels = None;
            let mut seed = None;
            for tok in rest.split_whitespace() {
                if let Some(v) = tok.strip_prefix("levels=") {
                    levels = v.parse().ok();
                }
                if let Some(v) = tok.strip_prefix("seed=") {
                    seed = v.parse().ok();
                }
            }
            if let (Some(l), Some(s)) = (levels, seed) {
                stamp = Some((l, s));
            }
        }
    }
    Ok((code, shape, stamp))
}
