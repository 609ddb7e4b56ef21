//! The phased-burst channel: n x m error arrays whose columns all lie in a
//! set E2, with at most w columns escaping a smaller set E1.

use crate::error::{Error, Result};
use crate::error_set::{binomial, ErrorSet, ErrorSetKind};
use crate::field::{FieldSpec, FqMatrix};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbeChannel {
    spec: FieldSpec,
    n: usize,
    m: usize,
    w: usize,
    e1: ErrorSet,
    e2: ErrorSet,
}

impl PbeChannel {
    /// Builds the channel, checking 0 ∈ E1 ⊆ E2 and w <= m.
    pub fn new(e1: ErrorSet, e2: ErrorSet, m: usize, w: usize) -> Result<Self> {
        if e1.spec() != e2.spec() || e1.n() != e2.n() {
            return Err(Error::DimensionMismatch(
                "E1 and E2 must live in the same ambient space".into(),
            ));
        }
        if w > m {
            return Err(Error::InvalidParameter(format!(
                "burst count w={w} exceeds m={m}"
            )));
        }
        if !e1.contains_zero() {
            return Err(Error::InvalidParameter("E1 must contain 0".into()));
        }
        if !e1.is_subset_of(&e2)? {
            return Err(Error::InvalidParameter("E1 must be a subset of E2".into()));
        }
        Ok(PbeChannel {
            spec: e1.spec().clone(),
            n: e1.n(),
            m,
            w,
            e1,
            e2,
        })
    }

    /// The Hamming burst channel: E1 = {0}, E2 the radius-t ball.
    pub fn hamming(spec: FieldSpec, n: usize, m: usize, t: usize, w: usize) -> Result<Self> {
        let e1 = ErrorSet::zero(spec.clone(), n);
        let e2 = ErrorSet::hamming_ball(spec, n, t)?;
        Self::new(e1, e2, m, w)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn w(&self) -> usize {
        self.w
    }
    pub fn e1(&self) -> &ErrorSet {
        &self.e1
    }
    pub fn e2(&self) -> &ErrorSet {
        &self.e2
    }

    /// Membership of an n x m array: every column in E2, and at most w
    /// columns outside E1.
    pub fn contains(&self, x: &FqMatrix) -> bool {
        assert_eq!((x.rows(), x.cols()), (self.n, self.m), "array shape mismatch");
        let mut bad = 0usize;
        for c in 0..self.m {
            let col: Vec<u64> = (0..self.n).map(|r| x.at(r, c)).collect();
            if !self.e2.contains(&col) {
                return false;
            }
            if !self.e1.contains(&col) {
                bad += 1;
                if bad > self.w {
                    return false;
                }
            }
        }
        true
    }

    /// Exact number of burst arrays: sum over j of C(m,j) |E2\E1|^j |E1|^(m-j).
    pub fn count(&self) -> Option<u128> {
        let good = self.e1.size()?;
        let bad = self.e2.size()?.checked_sub(good)?;
        let mut total: u128 = 0;
        for j in 0..=self.w.min(self.m) {
            let term = binomial(self.m, j)?
                .checked_mul(bad.checked_pow(j as u32)?)?
                .checked_mul(good.checked_pow((self.m - j) as u32)?)?;
            total = total.checked_add(term)?;
        }
        Some(total)
    }

    /// Streams every burst array exactly once: the exact set of bad column
    /// positions is chosen first, bad columns range over E2\E1 and good
    /// columns over E1, so the union over j is disjoint.
    pub fn enumerate(&self, cap: u128) -> Result<PbeIter> {
        let total = self.count().ok_or(Error::BudgetExceeded {
            needed: u128::MAX,
            cap,
        })?;
        if total > cap {
            return Err(Error::BudgetExceeded { needed: total, cap });
        }
        let good: Vec<Vec<u64>> = self.e1.enumerate().collect();
        let bad: Vec<Vec<u64>> = self
            .e2
            .enumerate()
            .filter(|v| !self.e1.contains(v))
            .collect();
        Ok(PbeIter {
            spec: self.spec.clone(),
            n: self.n,
            m: self.m,
            w: self.w,
            good,
            bad,
            j: 0,
            support: vec![],
            idx: vec![0; self.m],
            started: false,
            done: false,
        })
    }
}

/// Iterator over all burst arrays of a channel.
pub struct PbeIter {
    spec: FieldSpec,
    n: usize,
    m: usize,
    w: usize,
    good: Vec<Vec<u64>>,
    bad: Vec<Vec<u64>>,
    j: usize,
    support: Vec<usize>,
    idx: Vec<usize>,
    started: bool,
    done: bool,
}

impl PbeIter {
    fn emit(&self) -> FqMatrix {
        let mut x = FqMatrix::zeros(self.spec.clone(), self.n, self.m);
        for c in 0..self.m {
            let col = if self.support.contains(&c) {
                &self.bad[self.idx[c]]
            } else {
                &self.good[self.idx[c]]
            };
            for (r, &v) in col.iter().enumerate() {
                x.set(r, c, v);
            }
        }
        x
    }

    fn cap_at(&self, c: usize) -> usize {
        if self.support.contains(&c) {
            self.bad.len()
        } else {
            self.good.len()
        }
    }

    fn next_support(&mut self) -> bool {
        let j = self.j;
        let mut i = j;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if self.support[i] + 1 <= self.m - (j - i) {
                self.support[i] += 1;
                for k in i + 1..j {
                    self.support[k] = self.support[k - 1] + 1;
                }
                return true;
            }
        }
    }

    fn next_j(&mut self) -> bool {
        loop {
            self.j += 1;
            if self.j > self.w.min(self.m) {
                return false;
            }
            if self.bad.is_empty() {
                return false;
            }
            if self.j <= self.m {
                self.support = (0..self.j).collect();
                self.idx = vec![0; self.m];
                return true;
            }
        }
    }
}

impl Iterator for PbeIter {
    type Item = FqMatrix;

    fn next(&mut self) -> Option<FqMatrix> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.good.is_empty() {
                self.done = true;
                return None;
            }
            self.support = vec![];
            self.idx = vec![0; self.m];
        }
        let out = self.emit();
        // advance the per-column odometer
        let mut c = 0;
        loop {
            if c == self.m {
                // odometer wrapped: next support, then next j
                if !self.next_support() {
                    if !self.next_j() {
                        self.done = true;
                    }
                } else {
                    self.idx = vec![0; self.m];
                }
                break;
            }
            self.idx[c] += 1;
            if self.idx[c] < self.cap_at(c) {
                break;
            }
            self.idx[c] = 0;
            c += 1;
        }
        Some(out)
    }
}

/// On-disk channel description (JSON).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChannelFile {
    pub q: u64,
    pub n: usize,
    pub m: usize,
    pub w: usize,
    pub e1: SetDescriptor,
    pub e2: SetDescriptor,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SetDescriptor {
    Ball { t: usize },
    Box { a: u64 },
    Subspace { rows: Vec<Vec<i64>> },
    Explicit { vectors: Vec<Vec<i64>> },
}

/// Factor a prime power q into (p, e).
pub fn factor_prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!("{q} is not a prime power")));
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut v = q;
            let mut e = 0;
            while v % p == 0 {
                v /= p;
                e += 1;
            }
            if v != 1 {
                return Err(Error::InvalidParameter(format!("{q} is not a prime power")));
            }
            return Ok((p, e));
        }
        p += 1;
    }
    Ok((q, 1))
}

fn signed_rows_to_reprs(spec: &FieldSpec, rows: &[Vec<i64>]) -> Result<Vec<Vec<u64>>> {
    let prime = spec.q() == spec.p();
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|&v| {
                    if v < 0 {
                        if !prime {
                            return Err(Error::InvalidParameter(
                                "negative entries need a prime field".into(),
                            ));
                        }
                        Ok(v.rem_euclid(spec.p() as i64) as u64)
                    } else if (v as u64) < spec.q() {
                        Ok(v as u64)
                    } else {
                        Err(Error::InvalidParameter(format!(
                            "entry {v} outside GF({})",
                            spec.q()
                        )))
                    }
                })
                .collect()
        })
        .collect()
}

impl SetDescriptor {
    pub fn to_error_set(&self, spec: &FieldSpec, n: usize) -> Result<ErrorSet> {
        match self {
            SetDescriptor::Ball { t } => ErrorSet::hamming_ball(spec.clone(), n, *t),
            SetDescriptor::Box { a } => ErrorSet::max_norm_box(spec.clone(), n, *a),
            SetDescriptor::Subspace { rows } => {
                let reprs = signed_rows_to_reprs(spec, rows)?;
                ErrorSet::subspace(spec.clone(), n, &reprs)
            }
            SetDescriptor::Explicit { vectors } => {
                let reprs = signed_rows_to_reprs(spec, vectors)?;
                ErrorSet::explicit(spec.clone(), n, reprs)
            }
        }
    }

    pub fn from_error_set(set: &ErrorSet) -> SetDescriptor {
        match set.kind() {
            ErrorSetKind::HammingBall { t } => SetDescriptor::Ball { t: *t },
            ErrorSetKind::MaxNormBox { a } => SetDescriptor::Box { a: *a },
            ErrorSetKind::Subspace { basis } => SetDescriptor::Subspace {
                rows: (0..basis.rows())
                    .map(|r| basis.row(r).iter().map(|&x| x as i64).collect())
                    .collect(),
            },
            ErrorSetKind::Explicit { elems } => SetDescriptor::Explicit {
                vectors: elems
                    .iter()
                    .map(|v| v.iter().map(|&x| x as i64).collect())
                    .collect(),
            },
        }
    }
}

impl ChannelFile {
    pub fn to_channel(&self) -> Result<PbeChannel> {
        let (p, e) = factor_prime_power(self.q)?;
        let spec = FieldSpec::new(p, e)?;
        let e1 = self.e1.to_error_set(&spec, self.n)?;
        let e2 = self.e2.to_error_set(&spec, self.n)?;
        PbeChannel::new(e1, e2, self.m, self.w)
    }

    pub fn from_channel(ch: &PbeChannel) -> ChannelFile {
        ChannelFile {
            q: ch.spec().q(),
            n: ch.n(),
            m: ch.m(),
            w: ch.w(),
            e1: SetDescriptor::from_error_set(ch.e1()),
            e2: SetDescriptor::from_error_set(ch.e2()),
        }
    }

    pub fn from_json(text: &str) -> Result<ChannelFile> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    #[test]
    fn zero_array_is_always_a_burst() {
        let ch = PbeChannel::hamming(gf2(), 4, 2, 1, 1).unwrap();
        assert!(ch.contains(&FqMatrix::zeros(gf2(), 4, 2)));
    }

    #[test]
    fn two_bursts_in_a_wide_array() {
        // n=5, m=6, t=2, w=2: two columns of weight <= 2, the rest zero
        let ch = PbeChannel::hamming(gf2(), 5, 6, 2, 2).unwrap();
        let mut x = FqMatrix::zeros(gf2(), 5, 6);
        x.set(0, 1, 1);
        x.set(2, 1, 1);
        x.set(3, 4, 1);
        x.set(4, 4, 1);
        assert!(ch.contains(&x));
        // a third bad column breaks it
        x.set(1, 0, 1);
        assert!(!ch.contains(&x));
        // an overweight column breaks it
        let mut y = FqMatrix::zeros(gf2(), 5, 6);
        y.set(0, 2, 1);
        y.set(1, 2, 1);
        y.set(2, 2, 1);
        assert!(!ch.contains(&y));
    }

    #[test]
    fn enumeration_count_examples() {
        let ch = PbeChannel::hamming(gf2(), 4, 2, 1, 1).unwrap();
        assert_eq!(ch.count().unwrap(), 9); // 1 + 2 * 4
        assert_eq!(ch.enumerate(1 << 20).unwrap().count(), 9);

        let w0 = PbeChannel::hamming(gf2(), 4, 2, 1, 0).unwrap();
        assert_eq!(w0.count().unwrap(), 1);
        assert_eq!(w0.enumerate(1 << 20).unwrap().count(), 1);

        let ch = PbeChannel::hamming(gf2(), 2, 2, 1, 2).unwrap();
        assert_eq!(ch.count().unwrap(), 9); // (1 + 2)^2
    }

    #[test]
    fn enumeration_is_exact_and_duplicate_free() {
        for (n, m, t, w) in [(2usize, 2usize, 1usize, 1usize), (3, 2, 1, 2), (2, 3, 2, 1)] {
            let ch = PbeChannel::hamming(gf2(), n, m, t, w).unwrap();
            let mut seen = std::collections::HashSet::new();
            let mut count = 0u128;
            for x in ch.enumerate(1 << 20).unwrap() {
                assert!(ch.contains(&x), "emitted array is not a burst");
                let key: Vec<u64> = (0..m)
                    .flat_map(|c| (0..n).map(move |r| (r, c)))
                    .map(|(r, c)| x.at(r, c))
                    .collect();
                assert!(seen.insert(key), "duplicate array emitted");
                count += 1;
            }
            assert_eq!(count, ch.count().unwrap());
        }
    }

    #[test]
    fn exhaustive_scan_agrees_with_enumeration() {
        // all of F_2^(2x2): the enumerated bursts are exactly the members
        let ch = PbeChannel::hamming(gf2(), 2, 2, 1, 1).unwrap();
        let mut members = 0;
        for bits in 0..16u64 {
            let mut x = FqMatrix::zeros(gf2(), 2, 2);
            for i in 0..4 {
                if bits >> i & 1 == 1 {
                    x.set(i % 2, i / 2, 1);
                }
            }
            if ch.contains(&x) {
                members += 1;
            }
        }
        assert_eq!(members as u128, ch.count().unwrap());
    }

    #[test]
    fn channel_requires_nesting_and_zero() {
        let spec = gf2();
        let e1 = ErrorSet::hamming_ball(spec.clone(), 3, 2).unwrap();
        let e2 = ErrorSet::hamming_ball(spec.clone(), 3, 1).unwrap();
        assert!(PbeChannel::new(e1, e2, 2, 1).is_err()); // E1 not inside E2

        let no_zero = ErrorSet::explicit(spec.clone(), 3, vec![vec![1, 0, 0]]).unwrap();
        let ball = ErrorSet::hamming_ball(spec.clone(), 3, 1).unwrap();
        assert!(PbeChannel::new(no_zero, ball.clone(), 2, 1).is_err());

        let z = ErrorSet::zero(spec, 3);
        assert!(PbeChannel::new(z.clone(), ball.clone(), 2, 3).is_err()); // w > m
        assert!(PbeChannel::new(z, ball, 2, 2).is_ok());
    }

    #[test]
    fn channel_file_round_trip() {
        let json = r#"{
            "q": 31, "n": 1, "m": 4, "w": 2,
            "e1": {"kind": "explicit", "vectors": [[0], [3], [7]]},
            "e2": {"kind": "explicit", "vectors": [[-4], [0], [3], [7], [10]]}
        }"#;
        let file = ChannelFile::from_json(json).unwrap();
        let ch = file.to_channel().unwrap();
        assert_eq!(ch.e1().size().unwrap(), 3);
        assert_eq!(ch.e2().size().unwrap(), 5);
        let back = ChannelFile::from_channel(&ch);
        let ch2 = back.to_channel().unwrap();
        assert_eq!(ch, ch2);
    }

    #[test]
    fn ball_descriptor_round_trip() {
        let ch = PbeChannel::hamming(FieldSpec::new(2, 2).unwrap(), 3, 2, 1, 1).unwrap();
        let file = ChannelFile::from_channel(&ch);
        let text = file.to_json().unwrap();
        let ch2 = ChannelFile::from_json(&text).unwrap().to_channel().unwrap();
        assert_eq!(ch, ch2);
    }

    #[test]
    fn prime_power_factoring() {
        assert_eq!(factor_prime_power(8).unwrap(), (2, 3));
        assert_eq!(factor_prime_power(31).unwrap(), (31, 1));
        assert_eq!(factor_prime_power(49).unwrap(), (7, 2));
        assert!(factor_prime_power(12).is_err());
        assert!(factor_prime_power(1).is_err());
    }
}
