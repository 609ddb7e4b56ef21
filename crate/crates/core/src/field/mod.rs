//! Exact arithmetic over GF(p^e), including tower extensions GF(q^r).
//!
//! Elements are stored as integers in `[0, q)` encoding polynomial
//! coefficients positionally (base p for a field over the prime field,
//! base q for a degree-r extension of GF(q); the two encodings nest).
//! Fields up to 2^16 elements multiply through log/antilog tables; larger
//! binary fields use carryless polynomial arithmetic, and larger towers
//! fall back to schoolbook polynomial arithmetic over the base field.

mod default_moduli;
mod linalg;

pub use linalg::{FqMatrix, FqVector};

use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// Largest field size served by log/antilog tables.
pub const TABLE_LIMIT: u64 = 1 << 16;
/// Hard cap on any field size (element reprs must fit in u64 with headroom).
pub const FIELD_LIMIT: u64 = 1 << 63;

#[derive(Debug)]
enum Backend {
    /// GF(p), direct modular arithmetic.
    Prime,
    /// Any field with q <= TABLE_LIMIT: full log/antilog tables.
    Table { log: Vec<u32>, exp: Vec<u64> },
    /// GF(2^e) over the prime field, 16 < e <= 63: shift-xor arithmetic.
    /// `emod` holds the modulus bits including the leading x^e term.
    Binary { emod: u64 },
    /// Generic extension: schoolbook polynomial arithmetic over the base.
    Tower,
}

#[derive(Debug)]
struct FieldInner {
    p: u64,
    /// Degree over `base` (1 for the prime field itself).
    degree: u32,
    q: u64,
    base: Option<FieldSpec>,
    /// Modulus coefficients over the base field, low-to-high, monic.
    /// The prime field carries `[0, 1]` (the polynomial x).
    modulus: Vec<u64>,
    backend: Backend,
}

/// An immutable description of a finite field; cheap to clone and share.
///
/// Two specs compare equal iff they have the same characteristic, the same
/// tower structure, and the same modulus at every level.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<FieldInner>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldSpec({self})")
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.inner.p;
        let q = self.inner.q;
        if q == p {
            write!(f, "GF({p})")
        } else {
            let mut e = 0u32;
            let mut v = 1u64;
            while v < q {
                v *= p;
                e += 1;
            }
            write!(f, "GF({p}^{e})")
        }
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.inner, &other.inner) {
            return true;
        }
        self.inner.p == other.inner.p
            && self.inner.q == other.inner.q
            && self.inner.degree == other.inner.degree
            && self.inner.modulus == other.inner.modulus
            && self.inner.base == other.inner.base
    }
}
impl Eq for FieldSpec {}

impl FieldSpec {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if p > TABLE_LIMIT {
            return Err(Error::FieldTooLarge {
                q: p as u128,
                limit: TABLE_LIMIT as u128,
            });
        }
        Ok(FieldSpec {
            inner: Arc::new(FieldInner {
                p,
                degree: 1,
                q: p,
                base: None,
                modulus: vec![0, 1],
                backend: Backend::Prime,
            }),
        })
    }

    /// GF(p^e) with the compiled-in default modulus.
    pub fn new(p: u64, e: u32) -> Result<FieldSpec> {
        if e == 0 {
            return Err(Error::InvalidParameter("extension degree must be >= 1".into()));
        }
        let base = FieldSpec::prime(p)?;
        if e == 1 {
            return Ok(base);
        }
        base.extension(e)
    }

    /// GF(p^e) with an explicit modulus (coefficients low-to-high, monic).
    pub fn with_modulus(p: u64, e: u32, modulus: &[u64]) -> Result<FieldSpec> {
        if e == 0 {
            return Err(Error::InvalidParameter("extension degree must be >= 1".into()));
        }
        let base = FieldSpec::prime(p)?;
        if e == 1 {
            if modulus != [0, 1] {
                return Err(Error::InvalidModulus(
                    "the prime field uses the modulus x".into(),
                ));
            }
            return Ok(base);
        }
        base.extension_with_modulus(e, modulus)
    }

    /// The degree-r extension of this field with a default modulus: the
    /// compiled-in table entry when the base is prime, otherwise the
    /// smallest-encoding monic irreducible polynomial over the base.
    pub fn extension(&self, r: u32) -> Result<FieldSpec> {
        if r == 0 {
            return Err(Error::InvalidParameter("extension degree must be >= 1".into()));
        }
        if r == 1 {
            return Ok(self.clone());
        }
        let modulus = self.default_modulus(r)?;
        self.extension_with_modulus(r, &modulus)
    }

    /// The degree-r extension of this field with an explicit modulus over it.
    pub fn extension_with_modulus(&self, r: u32, modulus: &[u64]) -> Result<FieldSpec> {
        if r < 2 {
            return Err(Error::InvalidParameter(
                "explicit extension degree must be >= 2".into(),
            ));
        }
        if modulus.len() != r as usize + 1 {
            return Err(Error::InvalidModulus(format!(
                "modulus must have degree {r} (got {} coefficients)",
                modulus.len()
            )));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        if modulus.iter().any(|&c| c >= self.q()) {
            return Err(Error::InvalidModulus(
                "modulus coefficient outside the base field".into(),
            ));
        }
        let q = checked_pow(self.q(), r).ok_or(Error::FieldTooLarge {
            q: (self.q() as u128).pow(r),
            limit: FIELD_LIMIT as u128,
        })?;
        if !is_irreducible(self, modulus) {
            return Err(Error::ReducibleModulus);
        }
        let backend = if q <= TABLE_LIMIT {
            build_tables(self, modulus, q)
        } else if self.inner.p == 2 && self.inner.base.is_none() && self.inner.q == 2 {
            let mut emod = 0u64;
            for (i, &c) in modulus.iter().enumerate() {
                if c == 1 {
                    emod |= 1 << i;
                }
            }
            Backend::Binary { emod }
        } else {
            Backend::Tower
        };
        Ok(FieldSpec {
            inner: Arc::new(FieldInner {
                p: self.inner.p,
                degree: r,
                q,
                base: Some(self.clone()),
                modulus: modulus.to_vec(),
                backend,
            }),
        })
    }

    fn default_modulus(&self, r: u32) -> Result<Vec<u64>> {
        if self.inner.base.is_none() {
            let p = self.inner.p;
            if let Some((_, _, coeffs)) = default_moduli::DEFAULT_MODULI
                .iter()
                .find(|&&(tp, te, _)| tp == p && te == r)
            {
                return Ok(coeffs.to_vec());
            }
        }
        // Runtime fallback: smallest-encoding monic irreducible over the base.
        let qb = self.q();
        let total = (qb as u128).checked_pow(r);
        if total.is_none() || total.unwrap() > FIELD_LIMIT as u128 {
            return Err(Error::NoDefaultModulus {
                p: self.inner.p,
                e: r * self.flat_degree(),
            });
        }
        let mut low = vec![0u64; r as usize];
        loop {
            // advance the low-coefficient counter (base qb), skipping constant 0
            if low[0] == 0 {
                low[0] = 1;
            }
            let mut cand = low.clone();
            cand.push(1);
            if is_irreducible(self, &cand) {
                return Ok(cand);
            }
            let mut i = 0;
            loop {
                if i == low.len() {
                    return Err(Error::NoDefaultModulus {
                        p: self.inner.p,
                        e: r * self.flat_degree(),
                    });
                }
                low[i] += 1;
                if low[i] < qb {
                    break;
                }
                low[i] = 0;
                i += 1;
            }
        }
    }

    /// Characteristic p.
    pub fn p(&self) -> u64 {
        self.inner.p
    }

    /// Field size q.
    pub fn q(&self) -> u64 {
        self.inner.q
    }

    /// Degree over the immediate base field (1 for a prime field).
    pub fn degree(&self) -> u32 {
        self.inner.degree
    }

    /// Total degree over the prime field.
    pub fn flat_degree(&self) -> u32 {
        match &self.inner.base {
            None => 1,
            Some(b) => b.flat_degree() * self.inner.degree,
        }
    }

    /// The immediate base field, if this is an extension.
    pub fn base(&self) -> Option<&FieldSpec> {
        self.inner.base.as_ref()
    }

    /// Modulus coefficients over the base field, low-to-high.
    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    /// Degree of `self` viewed as an extension of `base`: 1 if the fields
    /// are equal, `self.degree()` if `base` is the immediate base field.
    pub fn degree_over(&self, base: &FieldSpec) -> Option<u32> {
        if self == base {
            Some(1)
        } else if self.inner.base.as_ref() == Some(base) {
            Some(self.inner.degree)
        } else {
            None
        }
    }

    /// All element reprs in canonical integer order.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.inner.q
    }

    /// Wrap a repr as an element handle.
    pub fn elem(&self, repr: u64) -> FieldElement {
        assert!(repr < self.inner.q, "repr {repr} out of range for {self}");
        FieldElement {
            spec: self.clone(),
            repr,
        }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.inner.q && b < self.inner.q);
        if self.inner.p == 2 {
            return a ^ b;
        }
        if matches!(self.inner.backend, Backend::Prime) {
            return (a + b) % self.inner.p;
        }
        zip_digits(self.inner.p, a, b, |x, y, p| (x + y) % p)
    }

    pub fn neg(&self, a: u64) -> u64 {
        debug_assert!(a < self.inner.q);
        if self.inner.p == 2 {
            return a;
        }
        if matches!(self.inner.backend, Backend::Prime) {
            return (self.inner.p - a) % self.inner.p;
        }
        zip_digits(self.inner.p, a, 0, |x, _, p| (p - x) % p)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if self.inner.p == 2 {
            return a ^ b;
        }
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.inner.q && b < self.inner.q);
        match &self.inner.backend {
            Backend::Prime => a * b % self.inner.p,
            Backend::Table { log, exp } => {
                if a == 0 || b == 0 {
                    0
                } else {
                    exp[(log[a as usize] + log[b as usize]) as usize]
                }
            }
            Backend::Binary { emod } => {
                binary_mulmod(a, b, *emod, self.inner.degree)
            }
            Backend::Tower => {
                let base = self.inner.base.as_ref().unwrap();
                let r = self.inner.degree as usize;
                let da = decode_digits(base.q(), r, a);
                let db = decode_digits(base.q(), r, b);
                let prod = poly_mulmod(base, &self.inner.modulus, &da, &db);
                encode_digits(base.q(), &prod)
            }
        }
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        match &self.inner.backend {
            Backend::Prime => Ok(self.pow(a, self.inner.p - 2)),
            Backend::Table { log, exp } => {
                Ok(exp[(self.inner.q - 1 - log[a as usize] as u64) as usize])
            }
            _ => Ok(self.pow(a, self.inner.q - 2)),
        }
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u64, mut n: u64) -> u64 {
        if let Backend::Table { log, exp } = &self.inner.backend {
            if a == 0 {
                return if n == 0 { 1 } else { 0 };
            }
            let ord = self.inner.q - 1;
            return exp[((log[a as usize] as u128 * (n % ord) as u128) % ord as u128) as usize];
        }
        let mut result = 1u64;
        let mut base = a;
        while n > 0 {
            if n & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        result
    }

    /// Coordinates of `x` in the polynomial basis {1, α, ..., α^(r-1)} of
    /// this field over `base`. Inverse of [`FieldSpec::base_to_ext`].
    pub fn ext_to_base(&self, x: u64, base: &FieldSpec) -> Result<FqVector> {
        let r = self.degree_over(base).ok_or(Error::FieldMismatch)?;
        assert!(x < self.inner.q);
        let digits = decode_digits(base.q(), r as usize, x);
        Ok(FqVector::from_reprs(base.clone(), digits))
    }

    /// Assemble an element of this field from base-field coordinates.
    pub fn base_to_ext(&self, coords: &FqVector) -> Result<u64> {
        let base = coords.spec();
        let r = self.degree_over(base).ok_or(Error::FieldMismatch)?;
        if coords.len() != r as usize {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coordinates, got {}",
                r,
                coords.len()
            )));
        }
        Ok(encode_digits(base.q(), coords.reprs()))
    }
}

/// A field element tagged with its field; panics on mixed-field arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    spec: FieldSpec,
    repr: u64,
}

impl FieldElement {
    pub fn repr(&self) -> u64 {
        self.repr
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(FieldElement {
            spec: self.spec.clone(),
            repr: self.spec.inv(self.repr)?,
        })
    }

    fn check(&self, other: &FieldElement) {
        assert!(
            self.spec == other.spec,
            "elements of different fields: {} vs {}",
            self.spec,
            other.spec
        );
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.repr, self.spec)
    }
}

impl std::ops::Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        self.check(&rhs);
        FieldElement {
            repr: self.spec.add(self.repr, rhs.repr),
            spec: self.spec,
        }
    }
}

impl std::ops::Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self.check(&rhs);
        FieldElement {
            repr: self.spec.sub(self.repr, rhs.repr),
            spec: self.spec,
        }
    }
}

impl std::ops::Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.check(&rhs);
        FieldElement {
            repr: self.spec.mul(self.repr, rhs.repr),
            spec: self.spec,
        }
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            repr: self.spec.neg(self.repr),
            spec: self.spec,
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc = 1u64;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
        if acc > FIELD_LIMIT {
            return None;
        }
    }
    Some(acc)
}

pub(crate) fn zip_digits(p: u64, mut a: u64, mut b: u64, f: impl Fn(u64, u64, u64) -> u64) -> u64 {
    let mut out = 0u128;
    let mut mult = 1u128;
    while a > 0 || b > 0 {
        out += f(a % p, b % p, p) as u128 * mult;
        mult *= p as u128;
        a /= p;
        b /= p;
    }
    out as u64
}

fn decode_digits(radix: u64, len: usize, mut x: u64) -> Vec<u64> {
    let mut digits = vec![0u64; len];
    for d in digits.iter_mut() {
        *d = x % radix;
        x /= radix;
    }
    debug_assert_eq!(x, 0);
    digits
}

fn encode_digits(radix: u64, digits: &[u64]) -> u64 {
    let mut out = 0u128;
    for &d in digits.iter().rev() {
        out = out * radix as u128 + d as u128;
    }
    out as u64
}

fn binary_mulmod(a: u64, b: u64, emod: u64, e: u32) -> u64 {
    let mut acc = 0u128;
    let mut x = a;
    let mut shift = 0;
    while x != 0 {
        let tz = x.trailing_zeros();
        shift += tz;
        acc ^= (b as u128) << shift;
        x >>= tz + 1;
        shift += 1;
    }
    // reduce the (up to) 2e-1 coefficient product
    let top = 2 * e as i32 - 2;
    for bit in (e as i32..=top).rev() {
        if (acc >> bit) & 1 == 1 {
            acc ^= (emod as u128) << (bit - e as i32);
        }
    }
    acc as u64
}

// --- polynomial helpers over an arbitrary base field (digit slices, low-to-high) ---

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Product of `a` and `b` reduced by the monic `modulus`.
fn poly_mulmod(base: &FieldSpec, modulus: &[u64], a: &[u64], b: &[u64]) -> Vec<u64> {
    let r = modulus.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len().max(1)];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if bj != 0 {
                prod[i + j] = base.add(prod[i + j], base.mul(ai, bj));
            }
        }
    }
    // reduce: modulus is monic, so subtract c * modulus * x^(d-r)
    for d in (r..prod.len()).rev() {
        let c = prod[d];
        if c != 0 {
            prod[d] = 0;
            for (k, &mk) in modulus.iter().enumerate().take(r) {
                if mk != 0 {
                    prod[d - r + k] = base.sub(prod[d - r + k], base.mul(c, mk));
                }
            }
        }
    }
    prod.truncate(r.max(1));
    prod
}

fn poly_powmod(base: &FieldSpec, modulus: &[u64], a: &[u64], mut n: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut acc = a.to_vec();
    while n > 0 {
        if n & 1 == 1 {
            result = poly_mulmod(base, modulus, &result, &acc);
        }
        acc = poly_mulmod(base, modulus, &acc, &acc);
        n >>= 1;
    }
    result
}

/// Remainder of `a` divided by monic-leading `b` (b nonzero).
fn poly_rem(base: &FieldSpec, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let mut b = b.to_vec();
    poly_trim(&mut b);
    let db = b.len() - 1;
    let lead_inv = base.inv(*b.last().unwrap()).expect("nonzero leading coeff");
    while r.len() > db {
        let c = base.mul(*r.last().unwrap(), lead_inv);
        let d = r.len() - 1;
        if c != 0 {
            for (k, &bk) in b.iter().enumerate() {
                r[d - db + k] = base.sub(r[d - db + k], base.mul(c, bk));
            }
        }
        r.pop();
        poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn poly_gcd_is_const(base: &FieldSpec, a: &[u64], b: &[u64]) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(base, &a, &b);
        a = b;
        b = r;
    }
    a.len() <= 1
}

/// Irreducibility over the base field. Uses trial division against all monic
/// polynomials of degree <= r/2 when that candidate space is small, and
/// Rabin's test (Frobenius powers and gcds) otherwise.
fn is_irreducible(base: &FieldSpec, modulus: &[u64]) -> bool {
    let r = modulus.len() - 1;
    if r == 1 {
        return true;
    }
    if modulus[0] == 0 {
        return false; // divisible by x
    }
    let qb = base.q() as u128;
    let half = r / 2;
    let mut candidates = 0u128;
    let mut power = 1u128;
    for _ in 0..half {
        power = power.saturating_mul(qb);
        candidates = candidates.saturating_add(power);
    }
    if candidates <= 1 << 16 {
        // trial division
        for d in 1..=half {
            let count = (base.q() as u128).pow(d as u32) as u64;
            for enc in 0..count {
                let mut g = decode_digits(base.q(), d, enc);
                g.push(1);
                let rem = poly_rem(base, modulus, &g);
                if rem.is_empty() {
                    return false;
                }
            }
        }
        true
    } else {
        rabin_irreducible(base, modulus)
    }
}

fn rabin_irreducible(base: &FieldSpec, modulus: &[u64]) -> bool {
    let r = modulus.len() - 1;
    let x = vec![0u64, 1];
    // x^(q^r) mod f, computed as r successive q-th powers
    let frobenius = |poly: &[u64], times: usize| -> Vec<u64> {
        let mut acc = poly.to_vec();
        for _ in 0..times {
            acc = poly_powmod(base, modulus, &acc, base.q());
        }
        acc
    };
    let mut xqr = frobenius(&x, r);
    poly_trim(&mut xqr);
    if xqr != x {
        return false;
    }
    let mut primes = vec![];
    let mut m = r;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            primes.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    for l in primes {
        let mut y = frobenius(&x, r / l);
        poly_trim(&mut y);
        // y - x
        let mut diff = vec![0u64; y.len().max(2)];
        for (i, slot) in diff.iter_mut().enumerate() {
            let a = y.get(i).copied().unwrap_or(0);
            let b = x.get(i).copied().unwrap_or(0);
            *slot = base.sub(a, b);
        }
        poly_trim(&mut diff);
        if diff.is_empty() || !poly_gcd_is_const(base, modulus, &diff) {
            return false;
        }
    }
    true
}

/// Build log/antilog tables for an extension field of size q <= TABLE_LIMIT.
fn build_tables(base: &FieldSpec, modulus: &[u64], q: u64) -> Backend {
    let r = modulus.len() - 1;
    let slow_mul = |a: u64, b: u64| -> u64 {
        let da = decode_digits(base.q(), r, a);
        let db = decode_digits(base.q(), r, b);
        encode_digits(base.q(), &poly_mulmod(base, modulus, &da, &db))
    };
    // prime factors of the group order
    let mut factors = vec![];
    let mut m = q - 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    let slow_pow = |a: u64, mut n: u64| -> u64 {
        let mut result = 1u64;
        let mut acc = a;
        while n > 0 {
            if n & 1 == 1 {
                result = slow_mul(result, acc);
            }
            acc = slow_mul(acc, acc);
            n >>= 1;
        }
        result
    };
    let mut generator = 0;
    for g in 2..q {
        if factors.iter().all(|&l| slow_pow(g, (q - 1) / l) != 1) {
            generator = g;
            break;
        }
    }
    assert!(generator != 0, "no generator found for field of size {q}");
    let ord = (q - 1) as usize;
    let mut exp = vec![0u64; 2 * ord];
    let mut log = vec![0u32; q as usize];
    let mut acc = 1u64;
    for i in 0..ord {
        exp[i] = acc;
        exp[i + ord] = acc;
        log[acc as usize] = i as u32;
        acc = slow_mul(acc, generator);
    }
    debug_assert_eq!(acc, 1);
    Backend::Table { log, exp }
}

#[cfg(test)]
mod tests;
