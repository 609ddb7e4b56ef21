//! Brute-force ground truth at small scale: one-shot correction checks by
//! difference-pair scans, exact maximum code size by clique search on the
//! confusability graph, and exact difference-set counting.

use crate::channel::PbeChannel;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::error_set::{binomial, difference_set_auto};
use crate::field::{zip_digits, FqMatrix};
use rayon::prelude::*;
use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, Ordering};

/// Hard caps for oracle work; exceeding them is an error, never a silent
/// truncation.
#[derive(Clone, Copy, Debug)]
pub struct OracleBudget {
    /// Cap on elements visited in any single enumeration.
    pub max_enumeration: u64,
    /// Cap on pairwise fan-out checks.
    pub max_pairs: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_enumeration: 100_000_000,
            max_pairs: 1_000_000_000,
        }
    }
}

impl OracleBudget {
    pub fn with_cap(cap: u64) -> Self {
        OracleBudget {
            max_enumeration: cap,
            max_pairs: cap,
        }
    }

    fn check_enum(&self, needed: u128) -> Result<()> {
        if needed > self.max_enumeration as u128 {
            return Err(Error::BudgetExceeded {
                needed,
                cap: self.max_enumeration as u128,
            });
        }
        Ok(())
    }

    fn check_pairs(&self, needed: u128) -> Result<()> {
        if needed > self.max_pairs as u128 {
            return Err(Error::BudgetExceeded {
                needed,
                cap: self.max_pairs as u128,
            });
        }
        Ok(())
    }
}

fn flat_bursts(ch: &PbeChannel, budget: &OracleBudget) -> Result<Vec<Vec<u64>>> {
    let count = ch.count().ok_or(Error::BudgetExceeded {
        needed: u128::MAX,
        cap: budget.max_enumeration as u128,
    })?;
    budget.check_enum(count)?;
    Ok(ch
        .enumerate(budget.max_enumeration as u128)?
        .map(|x| x.flatten_columns())
        .collect())
}

fn burst_contains_flat(ch: &PbeChannel, flat: &[u64]) -> bool {
    let n = ch.n();
    let mut bad = 0usize;
    for col in flat.chunks(n) {
        if !ch.e2().contains(col) {
            return false;
        }
        if !ch.e1().contains(col) {
            bad += 1;
            if bad > ch.w() {
                return false;
            }
        }
    }
    true
}

/// One-shot correction test for a linear code laid out column-major over
/// the channel's n x m arrays: streams all ordered burst pairs (X, Y) and
/// reports false iff some nonzero difference X - Y is a codeword. The
/// difference set is never materialized.
pub fn is_pbecc_linear(
    code: &LinearCode,
    ch: &PbeChannel,
    budget: &OracleBudget,
) -> Result<bool> {
    let nm = ch.n() * ch.m();
    if code.n() != nm || code.spec() != ch.spec() {
        return Err(Error::DimensionMismatch(format!(
            "code length {} does not match the {}x{} channel",
            code.n(),
            ch.n(),
            ch.m()
        )));
    }
    let bursts = flat_bursts(ch, budget)?;
    let pairs = (bursts.len() as u128) * (bursts.len() as u128 - 1) / 2;
    budget.check_pairs(pairs)?;
    let spec = ch.spec();

    if spec.q() == 2 && nm <= 64 {
        let packed: Vec<u64> = bursts.iter().map(|v| crate::code::pack_bits(v)).collect();
        let hrows: Vec<u64> = (0..code.parity_check().rows())
            .map(|r| crate::code::pack_bits(code.parity_check().row(r)))
            .collect();
        let found = AtomicBool::new(false);
        packed.par_iter().enumerate().for_each(|(i, &x)| {
            if found.load(Ordering::Relaxed) {
                return;
            }
            for &y in &packed[i + 1..] {
                let d = x ^ y;
                if hrows.iter().all(|&h| (h & d).count_ones() & 1 == 0) {
                    found.store(true, Ordering::Relaxed);
                    return;
                }
            }
        });
        return Ok(!found.load(Ordering::Relaxed));
    }

    for (i, x) in bursts.iter().enumerate() {
        for y in &bursts[i + 1..] {
            let d: Vec<u64> = x.iter().zip(y).map(|(&a, &b)| spec.sub(a, b)).collect();
            if code.contains(&d) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One-shot test for an explicit (not necessarily linear) codeword list:
/// two codewords collide iff their difference plus some burst is again a
/// burst, so the fan-out intersection check costs |C|^2 |E|.
pub fn is_one_shot(
    codewords: &[FqMatrix],
    ch: &PbeChannel,
    budget: &OracleBudget,
) -> Result<bool> {
    let spec = ch.spec();
    let bursts = flat_bursts(ch, budget)?;
    let work = (codewords.len() as u128)
        .pow(2)
        .saturating_mul(bursts.len() as u128);
    budget.check_pairs(work)?;
    let flat: Vec<Vec<u64>> = codewords.iter().map(FqMatrix::flatten_columns).collect();
    for (i, x) in flat.iter().enumerate() {
        for y in flat[i + 1..].iter() {
            let d: Vec<u64> = x.iter().zip(y).map(|(&a, &b)| spec.sub(a, b)).collect();
            if d.iter().all(|&v| v == 0) {
                return Ok(false); // duplicate codewords always collide
            }
            for e in &bursts {
                let shifted: Vec<u64> =
                    d.iter().zip(e).map(|(&a, &b)| spec.add(a, b)).collect();
                if burst_contains_flat(ch, &shifted) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Exact size of the difference set of the channel's burst set, by
/// streaming all ordered pairs into a deduplicating set.
pub fn delta_pbe_size(ch: &PbeChannel, budget: &OracleBudget) -> Result<u128> {
    let bursts = flat_bursts(ch, budget)?;
    let pairs = (bursts.len() as u128).pow(2);
    budget.check_pairs(pairs)?;
    let spec = ch.spec();
    let nm = ch.n() * ch.m();
    if spec.q() == 2 && nm <= 64 {
        let packed: Vec<u64> = bursts.iter().map(|v| crate::code::pack_bits(v)).collect();
        let mut seen: HashSet<u64> = HashSet::new();
        for &x in &packed {
            for &y in &packed {
                seen.insert(x ^ y);
            }
        }
        return Ok(seen.len() as u128);
    }
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    for x in &bursts {
        for y in &bursts {
            let d: Vec<u64> = x.iter().zip(y).map(|(&a, &b)| spec.sub(a, b)).collect();
            seen.insert(d);
        }
    }
    Ok(seen.len() as u128)
}

/// Column-type upper bound on the difference-set size: partition the m
/// columns of a difference X - Y by which difference set they fall into
/// (z aligned bad columns, x - z and y - z one-sided ones) and sum the
/// multinomial counts. Exact set sizes are used at the channel's n.
pub fn delta_pbe_upper_bound(ch: &PbeChannel) -> Result<u128> {
    let cap = 1u128 << 24;
    let s11 = difference_set_auto(ch.e1(), ch.e1(), cap)?
        .size()
        .ok_or(Error::BudgetExceeded { needed: u128::MAX, cap })?;
    let s12 = difference_set_auto(ch.e1(), ch.e2(), cap)?
        .size()
        .ok_or(Error::BudgetExceeded { needed: u128::MAX, cap })?;
    let s22 = difference_set_auto(ch.e2(), ch.e2(), cap)?
        .size()
        .ok_or(Error::BudgetExceeded { needed: u128::MAX, cap })?;
    let m = ch.m();
    let w = ch.w();
    let mut total: u128 = 0;
    for x in 0..=w.min(m) {
        for y in 0..=w.min(m) {
            let zmin = (x + y).saturating_sub(m);
            for z in zmin..=x.min(y) {
                let ways = multinomial(m, &[z, x - z, y - z])
                    .ok_or(Error::BudgetExceeded { needed: u128::MAX, cap })?;
                let vals = s22
                    .checked_pow(z as u32)
                    .and_then(|v| v.checked_mul(s12.checked_pow((x + y - 2 * z) as u32)?))
                    .and_then(|v| v.checked_mul(s11.checked_pow((m + z - x - y) as u32)?))
                    .ok_or(Error::BudgetExceeded { needed: u128::MAX, cap })?;
                total = total
                    .checked_add(ways.checked_mul(vals).ok_or(Error::BudgetExceeded {
                        needed: u128::MAX,
                        cap,
                    })?)
                    .ok_or(Error::BudgetExceeded { needed: u128::MAX, cap })?;
            }
        }
    }
    Ok(total)
}

fn multinomial(m: usize, parts: &[usize]) -> Option<u128> {
    let used: usize = parts.iter().sum();
    if used > m {
        return Some(0);
    }
    let mut acc: u128 = 1;
    let mut remaining = m;
    for &p in parts {
        acc = acc.checked_mul(binomial(remaining, p)?)?;
        remaining -= p;
    }
    Some(acc)
}

/// Pigeonhole upper bound on any one-shot code: floor(q^(nm) / |E|).
pub fn pigeonhole_bound(ch: &PbeChannel) -> Option<u128> {
    let total = (ch.spec().q() as u128).checked_pow((ch.n() * ch.m()) as u32)?;
    Some(total / ch.count()?)
}

/// Exact maximum one-shot code size by branch-and-bound clique search on
/// the confusability graph (vertices are all arrays, edges join pairs
/// whose difference is outside the burst difference set). Returns the
/// size and a witness code. Only for truly tiny instances.
pub fn max_code_search(
    ch: &PbeChannel,
    budget: &OracleBudget,
) -> Result<(u128, Vec<FqMatrix>)> {
    let spec = ch.spec().clone();
    let q = spec.q();
    let nm = ch.n() * ch.m();
    let total = (q as u128)
        .checked_pow(nm as u32)
        .ok_or(Error::BudgetExceeded {
            needed: u128::MAX,
            cap: budget.max_enumeration as u128,
        })?;
    budget.check_enum(total)?;
    let n_total = total as usize;

    // difference-set membership bitset over array encodings
    let bursts = flat_bursts(ch, budget)?;
    budget.check_pairs((bursts.len() as u128).pow(2))?;
    let encode = |flat: &[u64]| -> usize {
        let mut acc: u128 = 0;
        for &v in flat.iter().rev() {
            acc = acc * q as u128 + v as u128;
        }
        acc as usize
    };
    let p = spec.p();
    let enc_sub = |a: usize, b: usize| -> usize {
        if p == 2 {
            a ^ b
        } else {
            zip_digits(p, a as u64, b as u64, |x, y, p| (x + p - y) % p) as usize
        }
    };
    let mut delta = vec![false; n_total];
    let enc_bursts: Vec<usize> = bursts.iter().map(|f| encode(f)).collect();
    for &x in &enc_bursts {
        for &y in &enc_bursts {
            delta[enc_sub(x, y)] = true;
        }
    }

    // every maximum clique can be translated to contain 0
    let candidates: Vec<usize> = (1..n_total).filter(|&v| !delta[v]).collect();
    let nc = candidates.len();
    // adjacency bitsets over candidate indices
    let adj: Vec<Bits> = (0..nc)
        .map(|i| {
            let mut row = Bits::empty(nc);
            for j in 0..nc {
                if j != i && !delta[enc_sub(candidates[i], candidates[j])] {
                    row.set(j);
                }
            }
            row
        })
        .collect();

    // greedy warm start for the bound
    let mut greedy: Vec<usize> = vec![];
    for i in 0..nc {
        if greedy.iter().all(|&u| adj[u].get(i)) {
            greedy.push(i);
        }
    }
    let mut best = greedy;
    let mut cur = Vec::new();
    expand_clique(&Bits::full(nc), &mut cur, &mut best, &adj);

    let mut clique: Vec<usize> = vec![0];
    clique.extend(best.iter().map(|&i| candidates[i]));
    let witness: Vec<FqMatrix> = clique
        .iter()
        .map(|&enc| {
            let mut flat = vec![0u64; nm];
            let mut x = enc as u128;
            for slot in flat.iter_mut() {
                *slot = (x % q as u128) as u64;
                x /= q as u128;
            }
            FqMatrix::from_flat_columns(spec.clone(), ch.n(), ch.m(), &flat)
        })
        .collect();
    Ok((clique.len() as u128, witness))
}

/// Fixed-capacity bitset for the clique search.
#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Bits {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn full(n: usize) -> Bits {
        let mut b = Bits(vec![!0u64; n.div_ceil(64)]);
        let tail = n % 64;
        if tail != 0 {
            if let Some(last) = b.0.last_mut() {
                *last = (1u64 << tail) - 1;
            }
        }
        b
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn first(&self) -> Option<usize> {
        for (wi, &w) in self.0.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn and_not_in_place(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }
}

/// Tomita-style branch and bound on candidate bitsets: candidates are
/// greedily partitioned into pairwise non-adjacent color classes, and a
/// branch is cut when the incumbent cannot be beaten.
fn expand_clique(cand: &Bits, cur: &mut Vec<usize>, best: &mut Vec<usize>, adj: &[Bits]) {
    if cand.is_empty() {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        return;
    }
    // greedy coloring
    let mut order: Vec<(usize, usize)> = Vec::new();
    let mut uncolored = cand.clone();
    let mut color = 0usize;
    while !uncolored.is_empty() {
        color += 1;
        let mut class_avail = uncolored.clone();
        while let Some(v) = class_avail.first() {
            class_avail.clear(v);
            uncolored.clear(v);
            order.push((v, color));
            class_avail.and_not_in_place(&adj[v]);
        }
    }
    let mut remaining = cand.clone();
    for i in (0..order.len()).rev() {
        let (v, bound) = order[i];
        if cur.len() + bound <= best.len() {
            return;
        }
        remaining.clear(v);
        cur.push(v);
        let next = remaining.and(&adj[v]);
        expand_clique(&next, cur, best, adj);
        cur.pop();
    }
}
