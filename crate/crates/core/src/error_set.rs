//! Enumerable, membership-testable subsets of GF(q)^n used as error sets.
//!
//! Four families cover everything the channel model needs: Hamming balls,
//! max-norm boxes (prime fields, integers -a..a embedded canonically),
//! linear subspaces, and explicit vector lists. Explicit sets are kept
//! sorted by integer encoding so equal sets compare equal.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, FqMatrix};

/// Work cap for internal enumerations (difference sets, subset checks).
pub const ENUM_CAP: u128 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ErrorSetKind {
    /// All vectors of Hamming weight <= t.
    HammingBall { t: usize },
    /// {-a..a}^n embedded in GF(p), p prime.
    MaxNormBox { a: u64 },
    /// Row space of a basis matrix (kept in RREF).
    Subspace { basis: FqMatrix },
    /// Explicit sorted list of vectors (reprs).
    Explicit { elems: Vec<Vec<u64>> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErrorSet {
    spec: FieldSpec,
    n: usize,
    kind: ErrorSetKind,
}

impl ErrorSet {
    pub fn hamming_ball(spec: FieldSpec, n: usize, t: usize) -> Result<Self> {
        if t > n {
            return Err(Error::InvalidParameter(format!(
                "ball radius {t} exceeds length {n}"
            )));
        }
        Ok(ErrorSet {
            spec,
            n,
            kind: ErrorSetKind::HammingBall { t },
        })
    }

    pub fn max_norm_box(spec: FieldSpec, n: usize, a: u64) -> Result<Self> {
        if spec.q() != spec.p() {
            return Err(Error::InvalidParameter(
                "max-norm boxes require a prime field".into(),
            ));
        }
        if 2 * a + 1 > spec.p() {
            return Err(Error::InvalidParameter(format!(
                "box {{-{a}..{a}}} does not embed in GF({})",
                spec.p()
            )));
        }
        Ok(ErrorSet {
            spec,
            n,
            kind: ErrorSetKind::MaxNormBox { a },
        })
    }

    pub fn subspace(spec: FieldSpec, n: usize, rows: &[Vec<u64>]) -> Result<Self> {
        for r in rows {
            if r.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "subspace basis row of length {} in ambient {n}",
                    r.len()
                )));
            }
        }
        let basis = if rows.is_empty() {
            FqMatrix::zeros(spec.clone(), 0, n)
        } else {
            FqMatrix::from_rows(spec.clone(), rows).row_basis()
        };
        Ok(ErrorSet {
            spec,
            n,
            kind: ErrorSetKind::Subspace { basis },
        })
    }

    pub fn explicit(spec: FieldSpec, n: usize, mut elems: Vec<Vec<u64>>) -> Result<Self> {
        for v in &elems {
            if v.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "vector of length {} in ambient {n}",
                    v.len()
                )));
            }
            if v.iter().any(|&x| x >= spec.q()) {
                return Err(Error::InvalidParameter("entry outside the field".into()));
            }
        }
        elems.sort_by(|a, b| cmp_encoding(a, b));
        elems.dedup();
        Ok(ErrorSet {
            spec,
            n,
            kind: ErrorSetKind::Explicit { elems },
        })
    }

    /// Explicit set from signed integers reduced into a prime field.
    pub fn explicit_from_integers(spec: FieldSpec, n: usize, rows: &[Vec<i64>]) -> Result<Self> {
        if spec.q() != spec.p() {
            return Err(Error::InvalidParameter(
                "signed integer embedding requires a prime field".into(),
            ));
        }
        let p = spec.p() as i64;
        let elems = rows
            .iter()
            .map(|r| r.iter().map(|&v| (v.rem_euclid(p)) as u64).collect())
            .collect();
        Self::explicit(spec, n, elems)
    }

    /// The singleton {0}.
    pub fn zero(spec: FieldSpec, n: usize) -> Self {
        ErrorSet {
            spec,
            n,
            kind: ErrorSetKind::Explicit {
                elems: vec![vec![0; n]],
            },
        }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> &ErrorSetKind {
        &self.kind
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        debug_assert_eq!(v.len(), self.n);
        match &self.kind {
            ErrorSetKind::HammingBall { t } => v.iter().filter(|&&x| x != 0).count() <= *t,
            ErrorSetKind::MaxNormBox { a } => {
                let p = self.spec.p();
                v.iter().all(|&x| x <= *a || x >= p - *a)
            }
            ErrorSetKind::Subspace { basis } => {
                let mut rem = v.to_vec();
                for r in 0..basis.rows() {
                    let row = basis.row(r);
                    let pc = row.iter().position(|&x| x != 0).unwrap();
                    let c = rem[pc];
                    if c != 0 {
                        for (j, &rj) in row.iter().enumerate() {
                            rem[j] = self.spec.sub(rem[j], self.spec.mul(c, rj));
                        }
                    }
                }
                rem.iter().all(|&x| x == 0)
            }
            ErrorSetKind::Explicit { elems } => elems
                .binary_search_by(|probe| cmp_encoding(probe, v))
                .is_ok(),
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&vec![0; self.n])
    }

    /// Exact cardinality; None when it does not fit in u128.
    pub fn size(&self) -> Option<u128> {
        let q = self.spec.q() as u128;
        match &self.kind {
            ErrorSetKind::HammingBall { t } => {
                let mut total: u128 = 0;
                for i in 0..=*t {
                    let c = binomial(self.n, i)?;
                    let v = (q - 1).checked_pow(i as u32)?;
                    total = total.checked_add(c.checked_mul(v)?)?;
                }
                Some(total)
            }
            ErrorSetKind::MaxNormBox { a } => (2 * *a as u128 + 1).checked_pow(self.n as u32),
            ErrorSetKind::Subspace { basis } => q.checked_pow(basis.rows() as u32),
            ErrorSetKind::Explicit { elems } => Some(elems.len() as u128),
        }
    }

    /// Every element exactly once. Order is deterministic per variant but
    /// not globally sorted; collect-and-sort when a canonical order matters.
    pub fn enumerate(&self) -> Box<dyn Iterator<Item = Vec<u64>> + '_> {
        let q = self.spec.q();
        let n = self.n;
        match &self.kind {
            ErrorSetKind::HammingBall { t } => Box::new(BallIter::new(n, *t, q)),
            ErrorSetKind::MaxNormBox { a } => {
                let p = self.spec.p();
                let mut vals: Vec<u64> = (0..=*a).collect();
                vals.extend((p - *a..p).collect::<Vec<_>>());
                vals.sort_unstable();
                Box::new(OdometerIter::new(vec![vals; n]))
            }
            ErrorSetKind::Subspace { basis } => {
                let k = basis.rows();
                let total = (q as u128).pow(k as u32);
                let basis = basis.clone();
                Box::new((0..total).map(move |i| {
                    let mut msg = vec![0u64; k];
                    let mut x = i;
                    for d in msg.iter_mut() {
                        *d = (x % q as u128) as u64;
                        x /= q as u128;
                    }
                    basis.row_mul(&msg)
                }))
            }
            ErrorSetKind::Explicit { elems } => Box::new(elems.iter().cloned()),
        }
    }

    /// Subset test. Fast same-variant paths; otherwise enumerates the left
    /// side (must be within [`ENUM_CAP`]).
    pub fn is_subset_of(&self, other: &ErrorSet) -> Result<bool> {
        if self.spec != other.spec || self.n != other.n {
            return Ok(false);
        }
        match (&self.kind, &other.kind) {
            (ErrorSetKind::HammingBall { t: t1 }, ErrorSetKind::HammingBall { t: t2 }) => {
                return Ok(t1 <= t2)
            }
            (ErrorSetKind::MaxNormBox { a }, ErrorSetKind::MaxNormBox { a: b }) => {
                return Ok(a <= b)
            }
            (ErrorSetKind::Subspace { basis }, _) => {
                let all_rows = (0..basis.rows()).all(|r| other.contains(basis.row(r)));
                if let ErrorSetKind::Subspace { .. } = other.kind {
                    return Ok(all_rows);
                }
                if !all_rows {
                    return Ok(false);
                }
                // fall through to enumeration: containment of the basis does
                // not bound a nonlinear right-hand side
            }
            _ => {}
        }
        let size = self.size().ok_or(Error::BudgetExceeded {
            needed: u128::MAX,
            cap: ENUM_CAP,
        })?;
        if size > ENUM_CAP {
            return Err(Error::BudgetExceeded {
                needed: size,
                cap: ENUM_CAP,
            });
        }
        Ok(self.enumerate().all(|v| other.contains(&v)))
    }
}

impl ErrorSet {
    /// Elementwise negation {-v : v in self}.
    pub fn negate(&self) -> ErrorSet {
        match &self.kind {
            ErrorSetKind::HammingBall { .. }
            | ErrorSetKind::MaxNormBox { .. }
            | ErrorSetKind::Subspace { .. } => self.clone(),
            ErrorSetKind::Explicit { elems } => {
                let neg: Vec<Vec<u64>> = elems
                    .iter()
                    .map(|v| v.iter().map(|&x| self.spec.neg(x)).collect())
                    .collect();
                ErrorSet::explicit(self.spec.clone(), self.n, neg).unwrap()
            }
        }
    }

    fn is_zero_singleton(&self) -> bool {
        matches!(&self.kind, ErrorSetKind::Explicit { elems }
            if elems.len() == 1 && elems[0].iter().all(|&x| x == 0))
    }

    /// Set equality: same elements, regardless of representation.
    pub fn set_eq(&self, other: &ErrorSet) -> Result<bool> {
        if self.spec != other.spec || self.n != other.n {
            return Ok(false);
        }
        if self.kind == other.kind {
            return Ok(true);
        }
        if self.size() != other.size() {
            return Ok(false);
        }
        self.is_subset_of(other)
    }
}

/// The difference set {a - b : a in A, b in B}. Closed under the family
/// structure where possible (balls add radii, boxes add widths, subspaces
/// add), falling back to explicit materialization within [`ENUM_CAP`].
pub fn difference_set(a: &ErrorSet, b: &ErrorSet) -> Result<ErrorSet> {
    difference_set_capped(a, b, ENUM_CAP)
}

/// Like [`difference_set`] but preferring symbolic results: Hamming balls,
/// boxes, and subspaces stay symbolic, so the result remains
/// membership-testable even when far too large to enumerate.
pub fn difference_set_auto(a: &ErrorSet, b: &ErrorSet, cap: u128) -> Result<ErrorSet> {
    if a.spec != b.spec || a.n != b.n {
        return Err(Error::DimensionMismatch(
            "difference set of sets over different ambients".into(),
        ));
    }
    if a.is_zero_singleton() {
        return Ok(b.negate());
    }
    if b.is_zero_singleton() {
        return Ok(a.clone());
    }
    let n = a.n;
    match (&a.kind, &b.kind) {
        (ErrorSetKind::HammingBall { t: t1 }, ErrorSetKind::HammingBall { t: t2 }) => {
            return ErrorSet::hamming_ball(a.spec.clone(), n, (t1 + t2).min(n));
        }
        (ErrorSetKind::MaxNormBox { a: w1 }, ErrorSetKind::MaxNormBox { a: w2 }) => {
            let p = a.spec.p();
            let width = w1 + w2;
            return if 2 * width + 1 >= p {
                ErrorSet::hamming_ball(a.spec.clone(), n, n) // wraps to everything
            } else {
                ErrorSet::max_norm_box(a.spec.clone(), n, width)
            };
        }
        (ErrorSetKind::Subspace { basis: b1 }, ErrorSetKind::Subspace { basis: b2 }) => {
            let mut rows: Vec<Vec<u64>> = (0..b1.rows()).map(|r| b1.row(r).to_vec()).collect();
            rows.extend((0..b2.rows()).map(|r| b2.row(r).to_vec()));
            return ErrorSet::subspace(a.spec.clone(), n, &rows);
        }
        _ => {}
    }
    difference_set_capped(a, b, cap)
}

pub fn difference_set_capped(a: &ErrorSet, b: &ErrorSet, cap: u128) -> Result<ErrorSet> {
    if a.spec != b.spec || a.n != b.n {
        return Err(Error::DimensionMismatch(
            "difference set of sets over different ambients".into(),
        ));
    }
    let work = a
        .size()
        .zip(b.size())
        .and_then(|(x, y)| x.checked_mul(y))
        .ok_or(Error::BudgetExceeded {
            needed: u128::MAX,
            cap,
        })?;
    if work > cap {
        return Err(Error::BudgetExceeded { needed: work, cap });
    }
    let spec = a.spec.clone();
    let bs: Vec<Vec<u64>> = b.enumerate().collect();
    let mut out: Vec<Vec<u64>> = Vec::new();
    for av in a.enumerate() {
        for bv in &bs {
            let d: Vec<u64> = av
                .iter()
                .zip(bv)
                .map(|(&x, &y)| spec.sub(x, y))
                .collect();
            out.push(d);
        }
    }
    out.sort_by(|x, y| cmp_encoding(x, y));
    out.dedup();
    Ok(ErrorSet {
        spec,
        n: a.n,
        kind: ErrorSetKind::Explicit { elems: out },
    })
}

/// Compare vectors by their integer encoding (entry 0 least significant).
fn cmp_encoding(a: &[u64], b: &[u64]) -> std::cmp::Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

pub(crate) fn binomial(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
    }
    Some(acc)
}

/// Vectors of weight <= t over GF(q)^n: supports in combination order, then
/// nonzero values odometer-style over each support.
struct BallIter {
    n: usize,
    t: usize,
    q: u64,
    weight: usize,
    support: Vec<usize>,
    values: Vec<u64>,
    done_weight: bool,
}

impl BallIter {
    fn new(n: usize, t: usize, q: u64) -> Self {
        BallIter {
            n,
            t,
            q,
            weight: 0,
            support: vec![],
            values: vec![],
            done_weight: false,
        }
    }

    fn emit(&self) -> Vec<u64> {
        let mut v = vec![0u64; self.n];
        for (&pos, &val) in self.support.iter().zip(&self.values) {
            v[pos] = val;
        }
        v
    }

    fn advance_support(&mut self) -> bool {
        // next combination of `weight` positions out of n
        let w = self.weight;
        let mut i = w;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if self.support[i] + 1 <= self.n - (w - i) {
                self.support[i] += 1;
                for j in i + 1..w {
                    self.support[j] = self.support[j - 1] + 1;
                }
                return true;
            }
        }
    }
}

impl Iterator for BallIter {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        loop {
            if self.weight > self.t {
                return None;
            }
            if self.weight == 0 {
                self.weight = 1;
                if self.t == 0 || self.n == 0 {
                    self.weight = self.t + 1; // only the zero vector
                }
                self.support = (0..self.weight.min(self.n)).collect();
                self.values = vec![1; self.weight.min(self.n)];
                self.done_weight = self.weight > self.n;
                return Some(vec![0u64; self.n]);
            }
            if self.done_weight {
                return None;
            }
            let out = self.emit();
            // advance values odometer (each in 1..q)
            let mut i = 0;
            loop {
                if i == self.weight {
                    // values wrapped; advance support
                    if !self.advance_support() {
                        self.weight += 1;
                        if self.weight > self.t || self.weight > self.n {
                            self.done_weight = true;
                        } else {
                            self.support = (0..self.weight).collect();
                            self.values = vec![1; self.weight];
                        }
                    } else {
                        for v in self.values.iter_mut() {
                            *v = 1;
                        }
                    }
                    break;
                }
                self.values[i] += 1;
                if self.values[i] < self.q {
                    break;
                }
                self.values[i] = 1;
                i += 1;
            }
            return Some(out);
        }
    }
}

/// Cartesian product of per-coordinate value lists, coordinate 0 fastest.
struct OdometerIter {
    lists: Vec<Vec<u64>>,
    idx: Vec<usize>,
    done: bool,
}

impl OdometerIter {
    fn new(lists: Vec<Vec<u64>>) -> Self {
        let done = lists.iter().any(|l| l.is_empty());
        let idx = vec![0; lists.len()];
        OdometerIter { lists, idx, done }
    }
}

impl Iterator for OdometerIter {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let out: Vec<u64> = self
            .idx
            .iter()
            .zip(&self.lists)
            .map(|(&i, l)| l[i])
            .collect();
        let mut i = 0;
        loop {
            if i == self.lists.len() {
                self.done = true;
                break;
            }
            self.idx[i] += 1;
            if self.idx[i] < self.lists[i].len() {
                break;
            }
            self.idx[i] = 0;
            i += 1;
        }
        Some(out)
    }
}
