//! Linear block codes over GF(q): canonical generators, minimum distance,
//! subcode chains with quotient representatives, Reed-Solomon codes, and
//! greedy searches for codes avoiding a forbidden set.

use crate::channel::factor_prime_power;
use crate::error::{Error, Result};
use crate::error_set::ErrorSet;
use crate::field::{FieldSpec, FqMatrix};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Default codeword-enumeration budget for distance computations.
pub const DISTANCE_BUDGET: u128 = 1 << 24;
/// Candidate pools up to this size are materialized and shuffled; larger
/// pools are sampled.
const POOL_CAP: u128 = 1 << 18;
/// Attempt budget for sampled candidate pools.
const SAMPLE_ATTEMPTS: usize = 1 << 16;
/// Consecutive rejections before a sampled pool is considered exhausted.
const SAMPLE_PATIENCE: usize = 512;
/// Hard cap on the span enumerated during greedy searches (packed reprs).
const SPAN_CAP: usize = 1 << 22;
/// Span cap for the generic (unpacked) path, where elements are vectors.
const GENERIC_SPAN_CAP: usize = 1 << 16;

/// A linear [n, k] code held in canonical form: the generator is the RREF
/// basis of the row space, so two codes are equal iff their generators are.
#[derive(Clone)]
pub struct LinearCode {
    spec: FieldSpec,
    n: usize,
    k: usize,
    gen: FqMatrix,
    check: FqMatrix,
    known_distance: Option<usize>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.n == other.n && self.gen == other.gen
    }
}
impl Eq for LinearCode {}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{}] code over {}", self.n, self.k, self.spec)
    }
}

impl LinearCode {
    /// Span of the given rows, canonicalized. Zero rows are dropped.
    pub fn from_generators(spec: FieldSpec, n: usize, rows: &[Vec<u64>]) -> Result<Self> {
        for r in rows {
            if r.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "generator row of length {} in a length-{n} code",
                    r.len()
                )));
            }
            if r.iter().any(|&x| x >= spec.q()) {
                return Err(Error::InvalidParameter(
                    "generator entry outside the field".into(),
                ));
            }
        }
        let gen = if rows.is_empty() {
            FqMatrix::zeros(spec.clone(), 0, n)
        } else {
            FqMatrix::from_rows(spec.clone(), rows).row_basis()
        };
        let check = gen_to_check(&gen, n, &spec);
        Ok(LinearCode {
            spec,
            n,
            k: gen.rows(),
            gen,
            check,
            known_distance: None,
        })
    }

    pub fn full_space(spec: FieldSpec, n: usize) -> Self {
        let gen = FqMatrix::identity(spec.clone(), n);
        let check = FqMatrix::zeros(spec.clone(), 0, n);
        LinearCode {
            spec,
            n,
            k: n,
            gen,
            check,
            known_distance: Some(1),
        }
    }

    pub fn zero_code(spec: FieldSpec, n: usize) -> Self {
        LinearCode {
            gen: FqMatrix::zeros(spec.clone(), 0, n),
            check: FqMatrix::identity(spec.clone(), n),
            spec,
            n,
            k: 0,
            known_distance: Some(n + 1),
        }
    }

    /// Reed-Solomon evaluation code of length m and dimension k over a
    /// field with at least m elements: polynomials of degree < k evaluated
    /// at the first m field elements in canonical integer order. MDS with
    /// distance m - k + 1.
    pub fn reed_solomon(spec: FieldSpec, m: usize, k: usize) -> Result<Self> {
        if m as u128 > spec.q() as u128 {
            return Err(Error::InfeasibleOuter {
                needed: m as u64,
                available: spec.q(),
            });
        }
        if k > m {
            return Err(Error::InvalidParameter(format!(
                "dimension {k} exceeds length {m}"
            )));
        }
        if k == 0 {
            return Ok(Self::zero_code(spec, m));
        }
        let mut vandermonde = FqMatrix::zeros(spec.clone(), k, m);
        for (j, x) in (0..m as u64).enumerate() {
            let mut power = 1u64;
            for i in 0..k {
                vandermonde.set(i, j, power);
                power = spec.mul(power, x);
            }
        }
        let mut code = Self::from_generators(spec, m, &rows_of(&vandermonde))?;
        debug_assert_eq!(code.k, k);
        code.known_distance = Some(m - k + 1);
        Ok(code)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn generator(&self) -> &FqMatrix {
        &self.gen
    }
    pub fn parity_check(&self) -> &FqMatrix {
        &self.check
    }

    pub fn params(&self) -> String {
        format!("[{},{}]_{}", self.n, self.k, self.spec.q())
    }

    /// Number of codewords.
    pub fn size(&self) -> Option<u128> {
        (self.spec.q() as u128).checked_pow(self.k as u32)
    }

    /// Membership via the parity check: H x^T = 0.
    pub fn contains(&self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.n);
        for r in 0..self.check.rows() {
            let row = self.check.row(r);
            let mut acc = 0u64;
            for (a, &b) in row.iter().zip(v) {
                if *a != 0 && b != 0 {
                    acc = self.spec.add(acc, self.spec.mul(*a, b));
                }
            }
            if acc != 0 {
                return false;
            }
        }
        true
    }

    pub fn encode(&self, message: &[u64]) -> Vec<u64> {
        self.gen.row_mul(message)
    }

    /// All codewords by message enumeration (q^k of them).
    pub fn codewords(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        let q = self.spec.q() as u128;
        let total = q.pow(self.k as u32);
        (0..total).map(move |i| {
            let mut msg = vec![0u64; self.k];
            let mut x = i;
            for d in msg.iter_mut() {
                *d = (x % q) as u64;
                x /= q;
            }
            self.encode(&msg)
        })
    }

    /// Subcode test: every generator row of `self` lies in `sup`.
    pub fn is_subcode_of(&self, sup: &LinearCode) -> bool {
        if self.spec != sup.spec || self.n != sup.n {
            return false;
        }
        (0..self.k).all(|r| sup.contains(self.gen.row(r)))
    }

    /// Minimum Hamming weight of a nonzero codeword, by enumeration of all
    /// q^k codewords (within `budget`); the zero code reports n + 1 as an
    /// infinite sentinel. Constructions with a provable distance short-cut
    /// the enumeration.
    pub fn min_distance(&self) -> Result<usize> {
        if let Some(d) = self.known_distance {
            return Ok(d);
        }
        self.min_distance_enumerated(DISTANCE_BUDGET)
    }

    /// Distance by exhaustive enumeration, ignoring any cached value.
    pub fn min_distance_enumerated(&self, budget: u128) -> Result<usize> {
        if self.k == 0 {
            return Ok(self.n + 1);
        }
        let total = self.size().ok_or(Error::BudgetExceeded {
            needed: u128::MAX,
            cap: budget,
        })?;
        if total > budget {
            return Err(Error::BudgetExceeded {
                needed: total,
                cap: budget,
            });
        }
        if self.spec.q() == 2 && self.n <= 64 && self.k < 64 {
            // Gray-code walk: one generator row toggles per step
            let rows: Vec<u64> = (0..self.k).map(|r| pack_bits(self.gen.row(r))).collect();
            let mut current = 0u64;
            let mut best = usize::MAX;
            for i in 1u64..(1 << self.k) {
                let bit = i.trailing_zeros() as usize;
                current ^= rows[bit];
                let w = current.count_ones() as usize;
                if w < best {
                    best = w;
                }
            }
            return Ok(best);
        }
        let mut best = usize::MAX;
        for_each_nonzero_codeword(self, |cw| {
            let w = cw.iter().filter(|&&x| x != 0).count();
            if w < best {
                best = w;
            }
            best > 1
        });
        Ok(best)
    }

    /// True iff the only vector in both the code and `set` is zero.
    /// Enumerates whichever side is cheaper.
    pub fn intersects_only_zero(&self, set: &ErrorSet, budget: u128) -> Result<bool> {
        assert!(*set.spec() == self.spec && set.n() == self.n);
        let code_size = self.size();
        let set_size = set.size();
        let pick_set = match (set_size, code_size) {
            (Some(s), Some(c)) => s <= c,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => {
                return Err(Error::BudgetExceeded {
                    needed: u128::MAX,
                    cap: budget,
                })
            }
        };
        if pick_set {
            let s = set_size.unwrap();
            if s > budget {
                return Err(Error::BudgetExceeded {
                    needed: s,
                    cap: budget,
                });
            }
            for v in set.enumerate() {
                if v.iter().any(|&x| x != 0) && self.contains(&v) {
                    return Ok(false);
                }
            }
            Ok(true)
        } else {
            let c = code_size.unwrap();
            if c > budget {
                return Err(Error::BudgetExceeded {
                    needed: c,
                    cap: budget,
                });
            }
            if self.spec.q() == 2 && self.n <= 64 && self.k < 64 {
                let rows: Vec<u64> = (0..self.k).map(|r| pack_bits(self.gen.row(r))).collect();
                let mut current = 0u64;
                let mut scratch = vec![0u64; self.n];
                for i in 1u64..(1 << self.k) {
                    current ^= rows[i.trailing_zeros() as usize];
                    unpack_bits(current, &mut scratch);
                    if set.contains(&scratch) {
                        return Ok(false);
                    }
                }
                return Ok(true);
            }
            let mut hit = false;
            for_each_nonzero_codeword(self, |cw| {
                if set.contains(cw) {
                    hit = true;
                    return false;
                }
                true
            });
            Ok(!hit)
        }
    }
}

/// Visits every nonzero codeword exactly once via a mixed-radix reflected
/// Gray walk over messages: one message digit steps by one per visit, so
/// the codeword update costs O(n) instead of O(k n). The callback returns
/// false to stop early.
fn for_each_nonzero_codeword(code: &LinearCode, mut f: impl FnMut(&[u64]) -> bool) {
    let spec = code.spec().clone();
    let q = spec.q();
    let k = code.k();
    if k == 0 {
        return;
    }
    let mut digits = vec![0u64; k];
    let mut dirs = vec![1i64; k];
    let mut cw = vec![0u64; code.n()];
    loop {
        let mut i = 0;
        loop {
            if i == k {
                return;
            }
            let nd = digits[i] as i64 + dirs[i];
            if nd >= 0 && (nd as u64) < q {
                let old = digits[i];
                digits[i] = nd as u64;
                let delta = spec.sub(digits[i], old);
                let row = code.generator().row(i);
                for (c, &r) in cw.iter_mut().zip(row) {
                    if r != 0 {
                        *c = spec.add(*c, spec.mul(delta, r));
                    }
                }
                break;
            }
            dirs[i] = -dirs[i];
            i += 1;
        }
        if !f(&cw) {
            return;
        }
    }
}

fn gen_to_check(gen: &FqMatrix, n: usize, spec: &FieldSpec) -> FqMatrix {
    if gen.rows() == 0 {
        FqMatrix::identity(spec.clone(), n)
    } else {
        gen.kernel()
    }
}

fn rows_of(m: &FqMatrix) -> Vec<Vec<u64>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

pub(crate) fn pack_bits(v: &[u64]) -> u64 {
    debug_assert!(v.len() <= 64);
    v.iter()
        .enumerate()
        .fold(0u64, |acc, (i, &x)| acc | ((x & 1) << i))
}

pub(crate) fn unpack_bits(x: u64, out: &mut [u64]) {
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = (x >> i) & 1;
    }
}

/// A strictly descending chain of subcodes B_1 ⊃ B_2 ⊃ ... ⊃ B_s with
/// coset representatives spanning each quotient B_j / B_{j+1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeChain {
    codes: Vec<LinearCode>,
    quotient_reps: Vec<FqMatrix>,
}

impl CodeChain {
    /// Validates the chain and computes quotient representatives by
    /// deterministic basis extension: each basis of B_{j+1} is extended to
    /// a basis of B_j by reducing B_j's generator rows in order.
    pub fn new(codes: Vec<LinearCode>) -> Result<Self> {
        if codes.is_empty() {
            return Err(Error::InvalidParameter("empty chain".into()));
        }
        let spec = codes[0].spec().clone();
        let n = codes[0].n();
        if codes.last().unwrap().k() == 0 {
            return Err(Error::NotSubchain("the chain tail must have k >= 1".into()));
        }
        for pair in codes.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            if *a.spec() != spec || *b.spec() != spec || a.n() != n || b.n() != n {
                return Err(Error::NotSubchain("mixed ambient spaces".into()));
            }
            if b.k() >= a.k() {
                return Err(Error::NotSubchain(format!(
                    "dimensions must strictly descend, got {} then {}",
                    a.k(),
                    b.k()
                )));
            }
            if !b.is_subcode_of(a) {
                return Err(Error::NotSubchain(format!(
                    "{} is not a subcode of {}",
                    b.params(),
                    a.params()
                )));
            }
        }
        let mut quotient_reps = Vec::new();
        for pair in codes.windows(2) {
            let (sup, sub) = (&pair[0], &pair[1]);
            let mut workspace = rows_of(sub.generator());
            let mut reps = FqMatrix::zeros(spec.clone(), 0, n);
            for row in rows_of(sup.generator()) {
                if let Some(reduced) = reduce_against(&spec, &workspace, &row) {
                    reps.push_row(&reduced);
                    insert_sorted(&mut workspace, reduced);
                }
            }
            debug_assert_eq!(reps.rows(), sup.k() - sub.k());
            quotient_reps.push(reps);
        }
        Ok(CodeChain {
            codes,
            quotient_reps,
        })
    }

    pub fn codes(&self) -> &[LinearCode] {
        &self.codes
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    /// Representatives of B_j / B_{j+1} (j < s-1), one per row.
    pub fn quotient_reps(&self, j: usize) -> &FqMatrix {
        &self.quotient_reps[j]
    }
}

/// Fully reduce `row` against rows with distinct leading positions; returns
/// the nonzero remainder, or None if the row lies in the span.
fn reduce_against(spec: &FieldSpec, workspace: &[Vec<u64>], row: &[u64]) -> Option<Vec<u64>> {
    let mut rem = row.to_vec();
    for w in workspace {
        let pc = w.iter().position(|&x| x != 0).unwrap();
        if rem[pc] != 0 {
            let factor = spec.div(rem[pc], w[pc]).unwrap();
            for (r, &wv) in rem.iter_mut().zip(w) {
                *r = spec.sub(*r, spec.mul(factor, wv));
            }
        }
    }
    if rem.iter().all(|&x| x == 0) {
        None
    } else {
        Some(rem)
    }
}

fn insert_sorted(workspace: &mut Vec<Vec<u64>>, row: Vec<u64>) {
    let lead = row.iter().position(|&x| x != 0).unwrap();
    let at = workspace
        .iter()
        .position(|w| w.iter().position(|&x| x != 0).unwrap() > lead)
        .unwrap_or(workspace.len());
    workspace.insert(at, row);
}

/// Greedy construction of a linear code avoiding `forbidden` (which must
/// contain 0): candidate vectors are drawn in seeded-shuffled canonical
/// order (or sampled when the pool is too large to materialize) and added
/// whenever the extended span still meets `forbidden` only at zero.
/// Deterministic for a fixed seed. Stops when `cap` dimensions are reached
/// or the pool is exhausted.
pub fn greedy_avoiding(
    spec: &FieldSpec,
    n: usize,
    forbidden: &ErrorSet,
    seed: u64,
    within: Option<&LinearCode>,
    cap: Option<usize>,
) -> Result<LinearCode> {
    if *forbidden.spec() != *spec || forbidden.n() != n {
        return Err(Error::DimensionMismatch(
            "forbidden set lives in a different ambient space".into(),
        ));
    }
    if !forbidden.contains_zero() {
        return Err(Error::InvalidParameter(
            "the forbidden set must contain 0".into(),
        ));
    }
    if let Some(parent) = within {
        assert!(*parent.spec() == *spec && parent.n() == n);
    }
    let q = spec.q();
    let ambient_k = within.map_or(n, |c| c.k());
    let cap = cap.unwrap_or(ambient_k).min(ambient_k);
    if forbidden.size() == Some(1) {
        // forbidden = {0}: the whole pool qualifies
        return match within {
            Some(parent) if parent.k() <= cap => Ok(parent.clone()),
            None if cap == n => Ok(LinearCode::full_space(spec.clone(), n)),
            _ => {
                let rows: Vec<Vec<u64>> = match within {
                    Some(parent) => (0..cap).map(|r| parent.generator().row(r).to_vec()).collect(),
                    None => (0..cap)
                        .map(|r| FqMatrix::identity(spec.clone(), n).row(r).to_vec())
                        .collect(),
                };
                LinearCode::from_generators(spec.clone(), n, &rows)
            }
        };
    }
    let parent_rows: Vec<Vec<u64>> = match within {
        Some(c) => rows_of(c.generator()),
        None => rows_of(&FqMatrix::identity(spec.clone(), n)),
    };
    let pool_size = (q as u128).checked_pow(ambient_k as u32);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let encode_msg = |msg: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; n];
        for (digit, row) in msg.iter().zip(&parent_rows) {
            if *digit != 0 {
                for (o, &rv) in out.iter_mut().zip(row) {
                    *o = spec.add(*o, spec.mul(*digit, rv));
                }
            }
        }
        out
    };

    let packed = q == 2 && n <= 64;
    let mut basis: Vec<Vec<u64>> = Vec::new();
    // span including zero, packed and generic variants
    let mut span_packed: Vec<u64> = vec![0];
    let mut span: Vec<Vec<u64>> = vec![vec![0; n]];
    let mut scratch = vec![0u64; n];

    let ball_t = match forbidden.kind() {
        crate::error_set::ErrorSetKind::HammingBall { t } => Some(*t as u32),
        _ => None,
    };
    let member_packed = |x: u64, scratch: &mut Vec<u64>| -> bool {
        match ball_t {
            Some(t) => x.count_ones() <= t,
            None => {
                unpack_bits(x, scratch);
                forbidden.contains(scratch)
            }
        }
    };

    let try_candidate_packed = |v: u64,
                                    span_packed: &mut Vec<u64>,
                                    scratch: &mut Vec<u64>|
     -> bool {
        if span_packed.len() * 2 > SPAN_CAP {
            return false;
        }
        for &u in span_packed.iter() {
            let w = v ^ u;
            if w == 0 || member_packed(w, scratch) {
                return false;
            }
        }
        let old = span_packed.len();
        for i in 0..old {
            let w = v ^ span_packed[i];
            span_packed.push(w);
        }
        true
    };

    let mut process = |msg: &[u64],
                       basis: &mut Vec<Vec<u64>>,
                       span_packed: &mut Vec<u64>,
                       span: &mut Vec<Vec<u64>>|
     -> bool {
        let v = encode_msg(msg);
        if packed {
            let pv = pack_bits(&v);
            if try_candidate_packed(pv, span_packed, &mut scratch) {
                basis.push(v);
                return true;
            }
            return false;
        }
        if span.len() * (q as usize) > GENERIC_SPAN_CAP {
            return false;
        }
        // check every new span element gamma * v + u
        let mut scaled: Vec<Vec<u64>> = Vec::with_capacity(q as usize - 1);
        for gamma in 1..q {
            scaled.push(v.iter().map(|&x| spec.mul(gamma, x)).collect());
        }
        for u in span.iter() {
            for sv in &scaled {
                let w: Vec<u64> = sv.iter().zip(u).map(|(&a, &b)| spec.add(a, b)).collect();
                if w.iter().all(|&x| x == 0) || forbidden.contains(&w) {
                    return false;
                }
            }
        }
        let old = span.len();
        for i in 0..old {
            for sv in &scaled {
                let w: Vec<u64> = sv
                    .iter()
                    .zip(&span[i])
                    .map(|(&a, &b)| spec.add(a, b))
                    .collect();
                span.push(w);
            }
        }
        basis.push(v);
        true
    };

    match pool_size {
        Some(size) if size <= POOL_CAP => {
            let mut order: Vec<u64> = (0..size as u64).collect();
            order.shuffle(&mut rng);
            for enc in order {
                if basis.len() >= cap {
                    break;
                }
                let mut msg = vec![0u64; ambient_k];
                let mut x = enc;
                for d in msg.iter_mut() {
                    *d = x % q;
                    x /= q;
                }
                process(&msg, &mut basis, &mut span_packed, &mut span);
            }
        }
        _ => {
            let mut attempts = 0;
            let mut since_last = 0;
            while basis.len() < cap && attempts < SAMPLE_ATTEMPTS && since_last < SAMPLE_PATIENCE {
                attempts += 1;
                let msg: Vec<u64> = (0..ambient_k).map(|_| rng.gen_range(0..q)).collect();
                if process(&msg, &mut basis, &mut span_packed, &mut span) {
                    since_last = 0;
                } else {
                    since_last += 1;
                }
            }
        }
    }

    LinearCode::from_generators(spec.clone(), n, &basis)
}

/// Greedy search with a required target dimension; fails with
/// [`Error::GvSearchExhausted`] when the pool runs out first (retry with a
/// different seed, or lower the target).
pub fn gv_search(
    spec: &FieldSpec,
    n: usize,
    forbidden: &ErrorSet,
    target_k: usize,
    seed: u64,
) -> Result<LinearCode> {
    let code = greedy_avoiding(spec, n, forbidden, seed, None, Some(target_k))?;
    if code.k() < target_k {
        return Err(Error::GvSearchExhausted {
            achieved: code.k(),
            target: target_k,
        });
    }
    Ok(code)
}

/// Text format: header `q n k`, then k rows of n space-separated reprs
/// (the RREF generator). Lines starting with '#' are comments.
pub fn write_code_file(code: &LinearCode, comments: &[String]) -> String {
    let mut out = format!("{} {} {}\n", code.spec().q(), code.n(), code.k());
    for c in comments {
        out.push_str(&format!("# {c}\n"));
    }
    for r in 0..code.k() {
        let row: Vec<String> = code.generator().row(r).iter().map(u64::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parse the text format; returns the code and any comment lines (without
/// the leading '#').
pub fn parse_code_file(text: &str) -> Result<(LinearCode, Vec<String>)> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::Parse("empty file".into()))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 3 {
        return Err(Error::Parse("header must be `q n k`".into()));
    }
    let q: u64 = parts[0]
        .parse()
        .map_err(|_| Error::Parse("bad q in header".into()))?;
    let n: usize = parts[1]
        .parse()
        .map_err(|_| Error::Parse("bad n in header".into()))?;
    let k: usize = parts[2]
        .parse()
        .map_err(|_| Error::Parse("bad k in header".into()))?;
    let (p, e) = factor_prime_power(q)?;
    let spec = FieldSpec::new(p, e)?;
    let mut rows = Vec::with_capacity(k);
    let mut comments = Vec::new();
    for line in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            comments.push(rest.trim().to_string());
            continue;
        }
        let row: Vec<u64> = line
            .split_whitespace()
            .map(|t| t.parse::<u64>().map_err(|_| Error::Parse(format!("bad entry {t}"))))
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(Error::Parse(format!(
                "row has {} entries, expected {n}",
                row.len()
            )));
        }
        if row.iter().any(|&x| x >= q) {
            return Err(Error::Parse("entry outside the field".into()));
        }
        rows.push(row);
    }
    if rows.len() != k {
        return Err(Error::Parse(format!(
            "expected {k} generator rows, found {}",
            rows.len()
        )));
    }
    let code = LinearCode::from_generators(spec, n, &rows)?;
    if code.k() != k {
        return Err(Error::Parse(
            "generator rows are not linearly independent".into(),
        ));
    }
    Ok((code, comments))
}
